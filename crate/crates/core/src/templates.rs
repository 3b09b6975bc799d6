//! Braid word families used by the trivialization arguments.
//!
//! `μ_i = σ_1 ⋯ σ_{p-i} σ_{p-i+1}^{-1} ⋯ σ_{p-1}^{-1}` and `ν_i` is its mirror.

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

fn word(strands: usize, signed_gens: impl IntoIterator<Item = (usize, i32)>) -> Result<BraidWord> {
    let letters = signed_gens.into_iter().map(|(g, s)| Letter::with_sign(g, s)).collect();
    BraidWord::new(strands, letters)
}

fn check_block(p: usize, i: usize) -> Result<()> {
    if p < 2 || i < 1 || i > p {
        return Err(Error::InvalidParameter(format!("block index {i} needs 1 <= i <= p = {p}")));
    }
    Ok(())
}

/// Signs of `μ_i` as a list over generators `1..p`.
pub fn mu_signs(p: usize, i: usize) -> Vec<i32> {
    (1..p).map(|g| if g <= p - i { 1 } else { -1 }).collect()
}

pub fn mu(p: usize, i: usize) -> Result<BraidWord> {
    check_block(p, i)?;
    word(p, (1..p).zip(mu_signs(p, i)))
}

pub fn nu(p: usize, i: usize) -> Result<BraidWord> {
    check_block(p, i)?;
    word(p, (1..p).zip(mu_signs(p, i).into_iter().map(|s| -s)))
}

/// Concatenation of blocks `from..=to` of a family.
fn blocks(p: usize, from: usize, to: usize, f: fn(usize, usize) -> Result<BraidWord>) -> Result<BraidWord> {
    let mut out = BraidWord::empty(p);
    for i in from..=to {
        out.extend(&f(p, i)?)?;
    }
    Ok(out)
}

/// `μ_1 μ_2 ⋯ μ_p`, a trivial braid.
pub fn unknot_word(p: usize) -> Result<BraidWord> {
    check_block(p, 1)?;
    blocks(p, 1, p, mu)
}

/// `ν_1 ν_2 ⋯ ν_p`, the mirror of [`unknot_word`], also trivial.
pub fn unknot_word_mirror(p: usize) -> Result<BraidWord> {
    check_block(p, 1)?;
    blocks(p, 1, p, nu)
}

/// `μ_2 ⋯ μ_p` and `μ_1 ⋯ μ_{p-1}`; each closes to an unknot.
pub fn unknot_partials(p: usize) -> Result<(BraidWord, BraidWord)> {
    check_block(p, 1)?;
    Ok((blocks(p, 2, p, mu)?, blocks(p, 1, p - 1, mu)?))
}

/// `μ_from ⋯ μ_to` on `p` strands.
pub fn mu_run(p: usize, from: usize, to: usize) -> Result<BraidWord> {
    check_block(p, from.max(1))?;
    blocks(p, from, to, mu)
}

pub fn nu_run(p: usize, from: usize, to: usize) -> Result<BraidWord> {
    check_block(p, from.max(1))?;
    blocks(p, from, to, nu)
}

/// `(μ_1⋯μ_p ν_1⋯ν_p)^k`.
pub fn mu_nu_power(p: usize, k: usize) -> Result<BraidWord> {
    let mut unit = unknot_word(p)?;
    unit.extend(&unknot_word_mirror(p)?)?;
    Ok(unit.power(k))
}

/// `σ_1^{g_1} ⋯ σ_m^{g_m}`.
pub fn signed_run(strands: usize, signs: &[i32]) -> Result<BraidWord> {
    word(strands, signs.iter().enumerate().map(|(k, &s)| (k + 1, s)))
}

/// Signs of the two trailing blocks in the three-block word on `p` strands:
/// `g2` is `-1` at `p-2-6i` and `p-3-6i`, `g3` at `p-3-6i` and `p-4-6i`, for `i < m`,
/// with `m = ⌊(p+2)/6⌋`.
pub fn beta3_signs(p: usize) -> (Vec<i32>, Vec<i32>) {
    let m = (p + 2) / 6;
    let mut g2 = vec![1; p - 1];
    let mut g3 = vec![1; p - 1];
    let neg = |v: &mut Vec<i32>, j: i64| {
        if j >= 1 && (j as usize) < p {
            v[j as usize - 1] = -1;
        }
    };
    for i in 0..m as i64 {
        let p = p as i64;
        neg(&mut g2, p - 2 - 6 * i);
        neg(&mut g2, p - 3 - 6 * i);
        neg(&mut g3, p - 3 - 6 * i);
        neg(&mut g3, p - 4 - 6 * i);
    }
    (g2, g3)
}

/// `σ_1^{-1}⋯σ_{p-1}^{-1} · σ^{g2} · σ^{g3}`.
pub fn beta3_word(p: usize) -> Result<BraidWord> {
    if p < 4 || !matches!(p % 6, 0 | 2 | 4) {
        return Err(Error::InvalidParameter(format!(
            "the three-block word needs p >= 4 and p ≡ 0, ±2 (mod 6), got {p}"
        )));
    }
    let (g2, g3) = beta3_signs(p);
    let mut w = signed_run(p, &vec![-1; p - 1])?;
    w.extend(&signed_run(p, &g2)?)?;
    w.extend(&signed_run(p, &g3)?)?;
    Ok(w)
}

/// Endpoint words of the three-block reduction for each class of `p` mod 6.
pub fn beta3_endpoint(p: usize) -> Result<BraidWord> {
    let ints: &[i32] = match p % 6 {
        0 => &[-1, -2, -3, -4, -5, 1, 2, -3, -4, 5, 1, -2, -3, 4, 5],
        2 => &[-1, -2, -3, -4, -5, -6, -7, 1, 2, 3, 4, -5, -6, 7, 1, 2, 3, -4, -5, 6, 7],
        4 => &[-1, -2, -3, -1, -2, 3, -1, 2, 3],
        _ => return Err(Error::InvalidParameter(format!("no endpoint for p = {p}"))),
    };
    BraidWord::from_ints(ints.iter().map(|v| v.unsigned_abs() as usize).max().unwrap() + 1, ints)
}

/// The trailing `β_1 ⋯ β_{p-2}` of the `q = np - 2`, `p ≡ 0 (mod 4)` construction.
/// `β_i` for `i ≡ 2 (mod 4)` flips sign after generator `p - i` (see the
/// decisions log for the alternative reading).
pub fn beta_np_minus_two(p: usize) -> Result<BraidWord> {
    if p < 4 || p % 4 != 0 {
        return Err(Error::InvalidParameter(format!("needs p ≡ 0 (mod 4), got {p}")));
    }
    let mut w = BraidWord::empty(p);
    for i in 1..=p - 2 {
        let signs: Vec<i32> = if i == 1 {
            vec![-1; p - 1]
        } else if i == p - 2 {
            vec![1; p - 1]
        } else {
            (1..p)
                .map(|g| {
                    let tail = g > p - i;
                    if tail {
                        return 1;
                    }
                    match (i % 4, g) {
                        (1, 1) => 1,
                        (2, 1 | 2) => 1,
                        (0 | 3, 2) => 1,
                        _ => -1,
                    }
                })
                .collect()
        };
        w.extend(&signed_run(p, &signs)?)?;
    }
    Ok(w)
}

/// The two trailing blocks `σ^{A} σ^{B}` obtained from `windows` nested
/// applications of the four-strand destabilization: in window `k`, with
/// `t = p - 1 - 4k`, block A is negative at `t` (and at `t + 1` for `k > 0`)
/// and block B is negative at `t` and `t - 1`.
pub fn four_step_tail(p: usize, windows: usize) -> Result<BraidWord> {
    let mut a = vec![1; p - 1];
    let mut b = vec![1; p - 1];
    for k in 0..windows {
        let t = (p - 1)
            .checked_sub(4 * k)
            .filter(|&t| t >= 1)
            .ok_or_else(|| Error::InvalidParameter(format!("{windows} windows do not fit on {p} strands")))?;
        a[t - 1] = -1;
        if k > 0 {
            a[t] = -1;
        }
        b[t - 1] = -1;
        if t >= 2 {
            b[t - 2] = -1;
        }
    }
    let mut w = signed_run(p, &a)?;
    w.extend(&signed_run(p, &b)?)?;
    Ok(w)
}

/// The eight-bracket word; its closure is a trivial link. Needs `i >= 4`.
pub fn eight_bracket_word(i: usize, strands: usize) -> Result<BraidWord> {
    if i < 4 || strands < i + 8 {
        return Err(Error::InvalidParameter(format!(
            "needs i >= 4 and at least i + 8 strands, got i = {i}, {strands}"
        )));
    }
    let i = i as i64;
    let spec: [[(i64, i32); 4]; 8] = [
        [(i, -1), (i - 1, -1), (i - 2, -1), (i - 3, -1)],
        [(i + 1, -1), (i, -1), (i - 1, -1), (i - 2, -1)],
        [(i + 2, 1), (i + 1, 1), (i, 1), (i - 1, 1)],
        [(i + 3, -1), (i + 2, -1), (i + 1, 1), (i, 1)],
        [(i + 4, -1), (i + 3, -1), (i + 2, 1), (i + 1, 1)],
        [(i + 5, 1), (i + 4, 1), (i + 3, 1), (i + 2, 1)],
        [(i + 6, -1), (i + 5, -1), (i + 4, 1), (i + 3, 1)],
        [(i + 7, 1), (i + 6, 1), (i + 5, 1), (i + 4, 1)],
    ];
    word(strands, spec.iter().flatten().map(|&(g, s)| (g as usize, s)))
}

/// Braid identities checked on closures, with their parameters. Sign matrices are indexed
/// `g[i][j]` for block `i` and generator `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClosureIdentity {
    /// `η_1κ_{p-1} · η_2κ_{p-2}σ_{p-1}^{-1} ⋯ η_aσ_{p-a+1}^{-1}⋯σ_{p-1}^{-1} ∼ η'_1⋯η'_a`.
    StaircaseBlocks { p: usize, a: usize, g: Vec<Vec<i32>> },
    /// `η_1κ_1 ⋯ η_qκ_q ∼ η'_1⋯η'_q` for even `p > q`.
    MixedStaircase { p: usize, q: usize, g: Vec<Vec<i32>> },
    /// `β_1σ_{p-4}^{g}σ_{p-3}σ_{p-2}σ_{p-1}^{-1} β_2σ_{p-4}^{g'}σ_{p-3}σ_{p-2}^{-1}σ_{p-1}^{-1} ∼ β_1β_2`.
    FourStrandDrop { p: usize, beta1: Vec<i32>, beta2: Vec<i32>, g1: i32, g2: i32 },
    /// Three-block word against its endpoint.
    ThreeBlocks { p: usize },
    /// `σ_i⋯σ_jσ_i^{-1}⋯σ_j^{-1}` (ascending or descending) against the unlink.
    Commutator { i: usize, j: usize },
    /// Both words `σ_1⋯σ_nσ_1^{-1}⋯σ_n^{-1}` and `σ_1^{-1}⋯σ_n^{-1}σ_1⋯σ_n`.
    CommutatorPair { n: usize, inverse_first: bool },
    /// The eight-bracket word against the unlink.
    EightBrackets { i: usize, strands: usize },
}

fn check_signs(rows: &[Vec<i32>], count: usize, len: usize) -> Result<()> {
    if rows.len() != count || rows.iter().any(|r| r.len() != len || r.iter().any(|&s| s != 1 && s != -1)) {
        return Err(Error::InvalidParameter(format!("expected {count} sign rows of length {len} with entries ±1")));
    }
    Ok(())
}

fn push_range(out: &mut Vec<(usize, i32)>, from: usize, to: usize, sign: i32) {
    for g in from..=to {
        out.push((g, sign));
    }
}

/// Builds both sides of an identity. The right-hand side of a trivial-closure
/// statement is the empty word on as many strands as the left side has components.
pub fn identity_words(kind: &ClosureIdentity) -> Result<(BraidWord, BraidWord)> {
    match kind {
        ClosureIdentity::StaircaseBlocks { p, a, g } => {
            let (p, a) = (*p, *a);
            if a < 1 || p <= a {
                return Err(Error::InvalidParameter(format!("needs p > a >= 1, got p = {p}, a = {a}")));
            }
            let r = p - a;
            check_signs(g, a, r)?;
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for i in 1..=a {
                let row = &g[i - 1];
                for j in 1..=r {
                    lhs.push((j, row[j - 1]));
                }
                for j in 1..r {
                    rhs.push((j, row[j - 1]));
                }
                push_range(&mut lhs, r + 1, p - i, 1);
                push_range(&mut lhs, p - i + 1, p - 1, -1);
            }
            Ok((word(p, lhs)?, word(r, rhs)?))
        }
        ClosureIdentity::MixedStaircase { p, q, g } => {
            let (p, q) = (*p, *q);
            if p <= q || p % 2 != 0 || q % 2 != 0 || q == 0 {
                return Err(Error::InvalidParameter(format!("needs even p > q > 0, got p = {p}, q = {q}")));
            }
            let r = p - q;
            check_signs(g, q, r)?;
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for i in 1..=q {
                let row = &g[i - 1];
                for j in 1..=r {
                    lhs.push((j, row[j - 1]));
                }
                for j in 1..r {
                    rhs.push((j, row[j - 1]));
                }
                push_range(&mut lhs, r + 1, p - i, -1);
                push_range(&mut lhs, p - i + 1, p - 1, 1);
            }
            Ok((word(p, lhs)?, word(r, rhs)?))
        }
        ClosureIdentity::FourStrandDrop { p, beta1, beta2, g1, g2 } => {
            let p = *p;
            if p < 5 {
                return Err(Error::InvalidParameter(format!("needs p >= 5, got {p}")));
            }
            check_signs(&[beta1.clone(), beta2.clone()], 2, p - 5)?;
            check_signs(&[vec![*g1, *g2]], 1, 2)?;
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for (beta, g, tail) in [(beta1, *g1, [1, 1, -1]), (beta2, *g2, [1, -1, -1])] {
                for (k, &s) in beta.iter().enumerate() {
                    lhs.push((k + 1, s));
                    rhs.push((k + 1, s));
                }
                lhs.push((p - 4, g));
                lhs.push((p - 3, tail[0]));
                lhs.push((p - 2, tail[1]));
                lhs.push((p - 1, tail[2]));
            }
            Ok((word(p, lhs)?, word(p - 4, rhs)?))
        }
        ClosureIdentity::ThreeBlocks { p } => Ok((beta3_word(*p)?, beta3_endpoint(*p)?)),
        ClosureIdentity::Commutator { i, j } => {
            let (i, j) = (*i, *j);
            if i < 1 || j < 1 {
                return Err(Error::InvalidParameter("generator indices start at 1".into()));
            }
            let run: Vec<usize> = if i <= j { (i..=j).collect() } else { (j..=i).rev().collect() };
            let strands = i.max(j) + 1;
            let lhs = word(strands, run.iter().map(|&g| (g, 1)).chain(run.iter().map(|&g| (g, -1))))?;
            let rhs = BraidWord::empty(lhs.closure_components());
            Ok((lhs, rhs))
        }
        ClosureIdentity::CommutatorPair { n, inverse_first } => {
            let n = *n;
            if n < 1 {
                return Err(Error::InvalidParameter("n must be positive".into()));
            }
            let s = if *inverse_first { -1 } else { 1 };
            let lhs = word(n + 1, (1..=n).map(|g| (g, s)).chain((1..=n).map(|g| (g, -s))))?;
            let rhs = BraidWord::empty(lhs.closure_components());
            Ok((lhs, rhs))
        }
        ClosureIdentity::EightBrackets { i, strands } => {
            let lhs = eight_bracket_word(*i, *strands)?;
            let rhs = BraidWord::empty(lhs.closure_components());
            Ok((lhs, rhs))
        }
    }
}
