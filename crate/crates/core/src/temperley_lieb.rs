//! Kauffman bracket of a braid closure via Temperley–Lieb transfer matrices.
//!
//! The state is a linear combination of planar matchings of `2p` boundary
//! points: bottom points `0..p`, top points `p..2p`. Each letter is stacked on
//! top, `σ_i = A·1 + A^{-1}·e_i` and `σ_i^{-1} = A^{-1}·1 + A·e_i`. The final
//! state is evaluated on the trace closure, joining top point `p + j` to bottom
//! point `j`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Largest strand count accepted; `C_12 = 208012` matchings.
pub const MAX_STRANDS: usize = 12;

const BITS: u32 = 5;
const MASK: u128 = (1 << BITS) - 1;

type Matching = u128;

#[inline]
fn get(m: Matching, x: usize) -> usize {
    ((m >> (BITS as usize * x)) & MASK) as usize
}

#[inline]
fn set(m: Matching, x: usize, v: usize) -> Matching {
    let sh = BITS as usize * x;
    (m & !(MASK << sh)) | ((v as u128) << sh)
}

fn identity_matching(p: usize) -> Matching {
    let mut m = 0;
    for j in 0..p {
        m = set(m, j, p + j);
        m = set(m, p + j, j);
    }
    m
}

/// Applies `e_i` (0-based `i`) on top. Returns the new matching and whether a loop closed.
#[inline]
fn apply_e(m: Matching, p: usize, i: usize) -> (Matching, bool) {
    let a = p + i;
    let b = p + i + 1;
    let x = get(m, a);
    if x == b {
        return (m, true);
    }
    let y = get(m, b);
    let mut m = set(m, x, y);
    m = set(m, y, x);
    m = set(m, a, b);
    m = set(m, b, a);
    (m, false)
}

fn closure_loops(m: Matching, p: usize) -> u32 {
    let mut seen = vec![false; 2 * p];
    let mut loops = 0;
    for s in 0..2 * p {
        if seen[s] {
            continue;
        }
        loops += 1;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            let y = get(m, x);
            seen[y] = true;
            x = if y >= p { y - p } else { y + p };
        }
    }
    loops
}

/// Coefficient ring for the sweep; `None` signals overflow.
trait Coeff: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn checked_add(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Coeff for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        i128::checked_add(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i128::checked_sub(*self, *other)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Dense polynomial over even-spaced exponents: `v[k]` is the coefficient of
/// `A^{lo + 2k}`. Every exponent in one state has the same parity, so the
/// stride-2 layout is lossless.
#[derive(Clone)]
struct Dense<C> {
    lo: i64,
    v: Vec<C>,
}

impl<C: Coeff> Dense<C> {
    fn unit() -> Self {
        Dense { lo: 0, v: vec![C::one()] }
    }

    fn empty() -> Self {
        Dense { lo: 0, v: Vec::new() }
    }

    /// `self += sign * A^{shift} * other`.
    fn add_shifted(&mut self, other: &Dense<C>, shift: i64, negate: bool) -> Option<()> {
        if other.v.is_empty() {
            return Some(());
        }
        let olo = other.lo + shift;
        if self.v.is_empty() {
            self.lo = olo;
            self.v = vec![C::zero(); other.v.len()];
        }
        debug_assert_eq!((olo - self.lo).rem_euclid(2), 0);
        let ohi = olo + 2 * (other.v.len() as i64 - 1);
        let hi = self.lo + 2 * (self.v.len() as i64 - 1);
        if olo < self.lo {
            let extra = ((self.lo - olo) / 2) as usize;
            let mut nv = vec![C::zero(); extra];
            nv.append(&mut self.v);
            self.v = nv;
            self.lo = olo;
        }
        if ohi > hi {
            let extra = ((ohi - hi) / 2) as usize;
            self.v.extend(std::iter::repeat(C::zero()).take(extra));
        }
        let start = ((olo - self.lo) / 2) as usize;
        for (k, c) in other.v.iter().enumerate() {
            let slot = &mut self.v[start + k];
            *slot = if negate { slot.checked_sub(c)? } else { slot.checked_add(c)? };
        }
        Some(())
    }

    fn is_zero(&self) -> bool {
        self.v.iter().all(|c| c.is_zero())
    }

    fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (self.lo + 2 * k as i64, c.to_big())),
        )
    }
}

fn sweep<C: Coeff>(w: &BraidWord) -> Option<LaurentPoly> {
    let p = w.strands();
    let mut state: HashMap<Matching, Dense<C>> = HashMap::new();
    state.insert(identity_matching(p), Dense::unit());
    for l in w.letters() {
        let i = l.generator() - 1;
        let e = l.sign() as i64;
        let mut next: HashMap<Matching, Dense<C>> = HashMap::with_capacity(state.len() * 2);
        for (m, c) in &state {
            next.entry(*m).or_insert_with(Dense::empty).add_shifted(c, e, false)?;
            let (m2, looped) = apply_e(*m, p, i);
            let slot = next.entry(m2).or_insert_with(Dense::empty);
            if looped {
                // δ·A^{-e} = -A^{2-e} - A^{-2-e}
                slot.add_shifted(c, 2 - e, true)?;
                slot.add_shifted(c, -2 - e, true)?;
            } else {
                slot.add_shifted(c, -e, false)?;
            }
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }
    let delta = LaurentPoly::delta();
    let mut powers: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    let mut total = LaurentPoly::zero();
    for (m, c) in &state {
        let loops = closure_loops(*m, p) as usize;
        while powers.len() < loops {
            let next = powers.last().unwrap() * &delta;
            powers.push(next);
        }
        total = &total + &(&c.to_laurent() * &powers[loops - 1]);
    }
    Some(total)
}

/// Bracket of the trace closure, normalized so the crossingless unknot is 1.
/// The `p` trivial strands of the empty word give `δ^{p-1}`.
pub fn bracket(w: &BraidWord) -> Result<LaurentPoly> {
    if w.strands() > MAX_STRANDS {
        return Err(Error::TooManyStrands { strands: w.strands(), max: MAX_STRANDS });
    }
    Ok(sweep::<i128>(w).unwrap_or_else(|| sweep::<BigInt>(w).expect("big integers do not overflow")))
}

/// Catalan number `C_p`, the number of planar matchings of `2p` points.
pub fn catalan(p: usize) -> u64 {
    let mut c: u64 = 1;
    for k in 0..p as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        assert_eq!(catalan(1), 1);
        assert_eq!(catalan(6), 132);
        assert_eq!(catalan(12), 208012);
    }

    #[test]
    fn trivial_strands() {
        let w = BraidWord::empty(3);
        assert_eq!(bracket(&w).unwrap(), LaurentPoly::unlink(3));
    }

    #[test]
    fn single_kink() {
        // <σ_1> on 2 strands = A·δ + A^{-1} = -A^3
        let w = BraidWord::from_ints(2, &[1]).unwrap();
        assert_eq!(bracket(&w).unwrap(), LaurentPoly::monomial(-1, 3));
    }

    #[test]
    fn fallback_matches_machine_integers() {
        let w = BraidWord::from_ints(4, &[1, -2, 3, 2, 2, -1, 3, -3, 1, 2]).unwrap();
        assert_eq!(sweep::<i128>(&w).unwrap(), sweep::<BigInt>(&w).unwrap());
    }

    #[test]
    fn guard() {
        assert!(matches!(bracket(&BraidWord::empty(13)), Err(Error::TooManyStrands { .. })));
    }
}
