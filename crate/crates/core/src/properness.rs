//! Properness of torus links.
//!
//! A link is proper when every component has even total linking number with
//! the other components. Three independent tests are provided and meant to be
//! cross-checked.

use serde::{Deserialize, Serialize};

use crate::braid::{gcd, toric_braid};
use crate::diagram::{close_braid, PlanarDiagram};
use crate::error::{Error, Result};

/// The torus link `K(p, q)` with `d = gcd(p, q)` components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusLinkSpec {
    pub p: u64,
    pub q: u64,
    pub d: u64,
}

impl TorusLinkSpec {
    pub fn new(p: u64, q: u64) -> Result<TorusLinkSpec> {
        if p < 2 {
            return Err(Error::InvalidParameter(format!("p must be at least 2, got {p}")));
        }
        if q < 1 {
            return Err(Error::InvalidParameter(format!("q must be at least 1, got {q}")));
        }
        Ok(TorusLinkSpec { p, q, d: gcd(p, q) })
    }

    pub fn is_knot(&self) -> bool {
        self.d == 1
    }

    /// `(n, a)` with `q = n·p + a`, for a chosen offset `a`. `None` unless `n ≥ 1`.
    pub fn decompose(&self, a: i64) -> Option<(u64, i64)> {
        let rest = self.q as i64 - a;
        (rest > 0 && rest % self.p as i64 == 0).then(|| ((rest / self.p as i64) as u64, a))
    }

    /// Crossings of the standard closed toric braid diagram.
    pub fn crossings(&self) -> u64 {
        (self.p - 1) * self.q
    }

    /// `pq(d-1)/d²`, the total linking of one component with the others.
    pub fn component_linking(&self) -> u64 {
        let num = self.p * self.q * (self.d - 1);
        let den = self.d * self.d;
        assert_eq!(num % den, 0, "pq(d-1) is divisible by d²");
        num / den
    }
}

impl std::fmt::Display for TorusLinkSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "K({},{})", self.p, self.q)
    }
}

/// `pq(d-1)/d²` is even.
pub fn is_proper_closed_form(spec: &TorusLinkSpec) -> bool {
    spec.component_linking() % 2 == 0
}

fn two_adic(mut x: u64) -> u32 {
    let mut v = 0;
    while x % 2 == 0 {
        x /= 2;
        v += 1;
    }
    v
}

/// With `p = 2^m k`, `q = 2^n k'` (`k, k'` odd): proper iff `m = n = 0` or `m ≠ n`.
pub fn is_proper_power_form(spec: &TorusLinkSpec) -> bool {
    let m = two_adic(spec.p);
    let n = two_adic(spec.q);
    (m == 0 && n == 0) || m != n
}

/// Reads linking numbers off a labelled diagram.
pub fn is_proper_oracle(diagram: &PlanarDiagram) -> bool {
    let l = diagram.linking_data();
    (0..l.components).all(|i| l.total_linking(i) % 2 == 0)
}

/// All three tests on `K(p,q)`; `Err` if they disagree.
pub fn properness(spec: &TorusLinkSpec) -> Result<bool> {
    let closed = is_proper_closed_form(spec);
    let power = is_proper_power_form(spec);
    let d = close_braid(&toric_braid(spec.p as usize, spec.q as usize)?)?;
    let oracle = is_proper_oracle(&d);
    if closed == power && power == oracle {
        Ok(closed)
    } else {
        Err(Error::Pipeline {
            stage: "properness",
            detail: format!("{spec}: closed form {closed}, power form {power}, diagram {oracle}"),
        })
    }
}

pub fn require_proper(spec: &TorusLinkSpec) -> Result<()> {
    if is_proper_closed_form(spec) {
        Ok(())
    } else {
        Err(Error::NotProper {
            p: spec.p,
            q: spec.q,
            reason: format!("each component links the others {} times, which is odd", spec.component_linking()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: u64, q: u64) -> TorusLinkSpec {
        TorusLinkSpec::new(p, q).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert!(!is_proper_closed_form(&s(2, 2)));
        assert!(is_proper_closed_form(&s(3, 6)));
        assert!(is_proper_closed_form(&s(5, 7)));
    }

    #[test]
    fn power_form_examples() {
        assert!(is_proper_power_form(&s(2, 4)));
        assert!(!is_proper_power_form(&s(2, 2)));
        assert!(is_proper_power_form(&s(3, 9)));
    }

    #[test]
    fn oracle_examples() {
        let d = |p, q| close_braid(&toric_braid(p, q).unwrap()).unwrap();
        assert!(!is_proper_oracle(&d(2, 2)));
        assert!(is_proper_oracle(&d(4, 2)));
        assert!(is_proper_oracle(&d(3, 4)));
    }

    #[test]
    fn decompositions() {
        assert_eq!(s(3, 7).decompose(1), Some((2, 1)));
        assert_eq!(s(3, 7).decompose(-2), Some((3, -2)));
        assert_eq!(s(3, 7).decompose(7), None);
        assert!(TorusLinkSpec::new(1, 3).is_err());
    }

    #[test]
    fn not_proper_error() {
        assert!(matches!(require_proper(&s(2, 2)), Err(Error::NotProper { .. })));
        assert!(require_proper(&s(3, 6)).is_ok());
    }
}
