//! Laurent polynomials in the bracket variable `A` with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `Σ c_k A^k`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> LaurentPoly
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `δ = -A^2 - A^{-2}`, the value of a closed loop.
    pub fn delta() -> LaurentPoly {
        LaurentPoly::from_terms([(2, -1), (-2, -1)])
    }

    /// Jones polynomial of the `d`-component unlink, `δ^{d-1}`.
    pub fn unlink(d: usize) -> LaurentPoly {
        assert!(d >= 1, "an unlink has at least one component");
        LaurentPoly::delta().pow(d as u32 - 1)
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &BigInt) -> LaurentPoly {
        if s.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, c * s)).collect() }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `A -> A^{-1}`; the bracket of the mirror image.
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Renders a Jones polynomial stored in `A`-exponents in the variable `t = A^{-4}`.
    /// Terms are sorted by ascending power and printed as `coeff*t^(k/2)`.
    /// Returns `None` if some exponent is not a multiple of 2.
    pub fn to_t_string(&self) -> Option<String> {
        if self.terms.keys().any(|e| e % 2 != 0) {
            return None;
        }
        if self.is_zero() {
            return Some("0".into());
        }
        let mut parts = Vec::new();
        for (&e, c) in self.terms.iter().rev() {
            let half = -e / 2;
            parts.push(format!("{c}*t^({half}/2)"));
        }
        Some(parts.join(" + ").replace("+ -", "- "))
    }

    /// Exponent/coefficient pairs in `t^{1/2}` units (`t^{k/2}`), ascending.
    pub fn t_half_terms(&self) -> Option<Vec<(i64, BigInt)>> {
        if self.terms.keys().any(|e| e % 2 != 0) {
            return None;
        }
        let mut v: Vec<(i64, BigInt)> = self.terms.iter().map(|(&e, c)| (-e / 2, c.clone())).collect();
        v.sort_by_key(|(k, _)| *k);
        Some(v)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "A^{e}")?,
                _ => write!(f, "{mag}*A^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

#[derive(Serialize, Deserialize)]
struct Term {
    exponent: i64,
    coefficient: serde_json::Value,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(&e, c)| Term {
                exponent: e,
                coefficient: match c.to_i64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(c.to_string()),
                },
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<LaurentPoly, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for t in terms {
            let c: BigInt = match &t.coefficient {
                serde_json::Value::Number(n) => {
                    n.as_i64().map(BigInt::from).ok_or_else(|| D::Error::custom("non-integer coefficient"))?
                }
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("coefficient must be an integer")),
            };
            p.add_term(t.exponent, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let d = LaurentPoly::delta();
        let d2 = &d * &d;
        assert_eq!(d2, LaurentPoly::from_terms([(4, 1), (0, 2), (-4, 1)]));
        assert!((&d - &d).is_zero());
        assert_eq!(LaurentPoly::unlink(1), LaurentPoly::one());
        assert_eq!(LaurentPoly::unlink(3), d2);
        assert_eq!(d.bar(), d);
    }

    #[test]
    fn t_rendering() {
        // -t^{1/2} - t^{-1/2}
        assert_eq!(LaurentPoly::delta().to_t_string().unwrap(), "-1*t^(-1/2) - 1*t^(1/2)");
        assert_eq!(LaurentPoly::one().to_t_string().unwrap(), "1*t^(0/2)");
        assert!(LaurentPoly::monomial(1, 1).to_t_string().is_none());
    }

    #[test]
    fn json_round_trip() {
        let big = BigInt::from(i64::MAX) * 4;
        let mut p = LaurentPoly::delta();
        p.add_term(6, big);
        let s = serde_json::to_string(&p).unwrap();
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, back);
    }
}
