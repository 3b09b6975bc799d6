//! Closure invariants and the unlink certificate.
//!
//! Conventions: `σ_i` is a positive crossing, `<σ_i> = A·1 + A^{-1}·e_i`, and
//! the Jones polynomial is `f(A) = (-A^3)^{-writhe}·<D>` kept in `A`-exponents.
//! Substituting `t = A^{-4}` gives the usual polynomial in `t^{1/2}`; with these
//! conventions the closure of `σ_1^3` evaluates to `t + t^3 - t^4`.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::markov::{markov_simplify_with, MarkovOptions, Simplified};
use crate::temperley_lieb;

/// Bracket of the trace closure (crossingless unknot = 1).
pub fn kauffman_bracket(w: &BraidWord) -> Result<LaurentPoly> {
    temperley_lieb::bracket(w)
}

/// Writhe-normalized bracket in `A`-exponents.
pub fn jones(w: &BraidWord) -> Result<LaurentPoly> {
    let b = kauffman_bracket(w)?;
    Ok(normalize_writhe(&b, w.writhe()))
}

/// `(-A^3)^{-writhe} · bracket`.
pub fn normalize_writhe(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    bracket.shift(-3 * writhe).scale(&sign.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The reduction engine reached a crossingless diagram.
    Certified,
    /// Jones differs from the unlink polynomial.
    Refuted,
    /// Jones agrees (or is unavailable) but the reduction did not finish.
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "certified",
            Verdict::Refuted => "refuted",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnlinkCheck {
    pub verdict: Verdict,
    pub components: usize,
    /// `None` when the strand count is beyond the transfer-matrix guard.
    pub jones_matches: Option<bool>,
    pub jones: Option<LaurentPoly>,
    /// Absent when the Jones test already refuted.
    pub reduction: Option<Simplified>,
}

pub fn certify_unlink(w: &BraidWord) -> UnlinkCheck {
    certify_unlink_with(w, MarkovOptions::default())
}

pub fn certify_unlink_with(w: &BraidWord, opts: MarkovOptions) -> UnlinkCheck {
    let d = w.closure_components();
    let jones = jones(w).ok();
    let jones_matches = jones.as_ref().map(|j| *j == LaurentPoly::unlink(d));
    if jones_matches == Some(false) {
        return UnlinkCheck { verdict: Verdict::Refuted, components: d, jones_matches, jones, reduction: None };
    }
    let reduction = markov_simplify_with(w, opts);
    let verdict = if reduction.is_trivial() {
        debug_assert_eq!(reduction.word.strands(), d);
        Verdict::Certified
    } else {
        Verdict::Inconclusive
    };
    UnlinkCheck { verdict, components: d, jones_matches, jones, reduction: Some(reduction) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::toric_braid;

    fn w(p: usize, ints: &[i32]) -> BraidWord {
        BraidWord::from_ints(p, ints).unwrap()
    }

    #[test]
    fn unknots() {
        assert_eq!(jones(&BraidWord::empty(1)).unwrap(), LaurentPoly::one());
        assert_eq!(jones(&w(2, &[1])).unwrap(), LaurentPoly::one());
        assert_eq!(jones(&w(2, &[-1])).unwrap(), LaurentPoly::one());
        assert_eq!(jones(&w(3, &[1, -2])).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn two_component_unlink() {
        let j = jones(&BraidWord::empty(2)).unwrap();
        assert_eq!(j.to_t_string().unwrap(), "-1*t^(-1/2) - 1*t^(1/2)");
    }

    #[test]
    fn trefoils() {
        // t + t^3 - t^4
        let right = LaurentPoly::from_terms([(-4, 1), (-12, 1), (-16, -1)]);
        assert_eq!(jones(&w(2, &[1, 1, 1])).unwrap(), right);
        assert_eq!(jones(&w(2, &[-1, -1, -1])).unwrap(), right.bar());
    }

    #[test]
    fn hopf_is_not_unlink() {
        let j = jones(&toric_braid(2, 2).unwrap()).unwrap();
        assert_ne!(j, LaurentPoly::unlink(2));
    }

    #[test]
    fn verdicts() {
        assert_eq!(certify_unlink(&w(3, &[1, 2, 1, -2, -1, -2])).verdict, Verdict::Certified);
        assert_eq!(certify_unlink(&w(2, &[1, 1, 1])).verdict, Verdict::Refuted);
        let c = certify_unlink(&BraidWord::empty(4));
        assert_eq!((c.verdict, c.components), (Verdict::Certified, 4));
    }
}
