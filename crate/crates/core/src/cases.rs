//! Case analysis for `K(p, q)`: which constructions apply, the number of
//! regions each uses, the explicit region schedule and the word it produces.
//!
//! Regions are numbered as in [`crate::diagram::close_braid`]: region `t` is the
//! face just above letter `t` (1-based) of the braid word.

use serde::{Deserialize, Serialize};

use crate::braid::{toric_braid, BraidWord};
use crate::diagram::region_letters;
use crate::error::{Error, Result};
use crate::properness::{is_proper_closed_form, TorusLinkSpec};
use crate::templates::{beta3_word, beta_np_minus_two, four_step_tail, mu_nu_power, mu_run, nu_run, unknot_word};

/// The constructions, by the shape of `q = np + a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseKind {
    /// `p = 2`.
    TwoStrand,
    /// `a ∈ {0, 1}`, `p` odd.
    MultipleOddP,
    /// `a = 1`, `p` even, `n` odd.
    NpPlusOneEvenPOddN,
    /// `a ∈ {0, 1}`, `p` and `n` even.
    MultipleEvenPEvenN,
    /// `a = -1`, `p` odd.
    NpMinusOneOddP,
    /// `a = -1`, `p` and `n` even.
    NpMinusOneEvenPEvenN,
    /// `a = 2`, `p` odd.
    NpPlusTwoOddP,
    /// `a = 2`, `p ≡ 0 (mod 4)`, `n` even.
    NpPlusTwoEvenPEvenN,
    /// `a = -2`, `p` even, `n` odd.
    NpMinusTwoEvenPOddN,
    /// `a = -2`, `p ≡ 0 (mod 4)`, `n` even.
    NpMinusTwoEvenPEvenN,
    /// `a = 3`, `p` even, `n` odd.
    NpPlusThreeEvenPOddN,
    /// Odd `3 ≤ a < p`, `p ≡ 0, ±1 (mod a)`.
    OddResidueUnit,
    /// Odd `3 ≤ a < p`, `p ≡ 2 (mod a)`.
    OddResidueTwo,
    /// Odd `3 ≤ a < p`, `p ≡ -2 (mod a)`.
    OddResidueMinusTwo,
    /// Even `2 ≤ a < p`, `a | p`, `n` odd.
    EvenDivisor,
    /// `a = 4`, `p` odd, on the alternate diagram.
    NpPlusFourOddP,
    /// `a = 4`, `p, n` even, `p ≡ 0, 2, 6 (mod 8)`, on the alternate diagram.
    NpPlusFourEvenPEvenN,
}

/// Which diagram of `K(p,q)` a construction starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagramKind {
    /// Closure of `(σ_1⋯σ_{p-1})^q`.
    Standard,
    /// Closure of `(σ_1⋯σ_{p-1})^{np} (σ_1σ_2σ_3)^4 ∏_{k=4}^{p-1} σ_kσ_{k-1}σ_{k-2}σ_{k-3}`.
    Alternate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Case {
    pub kind: CaseKind,
    pub n: u64,
    pub a: i64,
}

impl CaseKind {
    pub fn id(self) -> &'static str {
        match self {
            CaseKind::TwoStrand => "two_strand",
            CaseKind::MultipleOddP => "multiple_odd_p",
            CaseKind::NpPlusOneEvenPOddN => "np_plus_one_even_p_odd_n",
            CaseKind::MultipleEvenPEvenN => "multiple_even_p_even_n",
            CaseKind::NpMinusOneOddP => "np_minus_one_odd_p",
            CaseKind::NpMinusOneEvenPEvenN => "np_minus_one_even_p_even_n",
            CaseKind::NpPlusTwoOddP => "np_plus_two_odd_p",
            CaseKind::NpPlusTwoEvenPEvenN => "np_plus_two_even_p_even_n",
            CaseKind::NpMinusTwoEvenPOddN => "np_minus_two_even_p_odd_n",
            CaseKind::NpMinusTwoEvenPEvenN => "np_minus_two_even_p_even_n",
            CaseKind::NpPlusThreeEvenPOddN => "np_plus_three_even_p_odd_n",
            CaseKind::OddResidueUnit => "odd_residue_unit",
            CaseKind::OddResidueTwo => "odd_residue_two",
            CaseKind::OddResidueMinusTwo => "odd_residue_minus_two",
            CaseKind::EvenDivisor => "even_divisor",
            CaseKind::NpPlusFourOddP => "np_plus_four_odd_p",
            CaseKind::NpPlusFourEvenPEvenN => "np_plus_four_even_p_even_n",
        }
    }

    pub fn from_id(id: &str) -> Option<CaseKind> {
        ALL_KINDS.iter().copied().find(|k| k.id() == id)
    }

    /// Bound formula as text.
    pub fn formula(self) -> &'static str {
        match self {
            CaseKind::TwoStrand => "floor((q+2)/4)",
            CaseKind::MultipleOddP | CaseKind::NpMinusOneOddP => "n(p^2-1)/8",
            CaseKind::NpPlusOneEvenPOddN => "(np^2+2p)/8",
            CaseKind::MultipleEvenPEvenN | CaseKind::NpMinusOneEvenPEvenN => "np^2/8",
            CaseKind::NpPlusTwoOddP => "n(p^2-1)/8 + floor((p+1)/4)",
            CaseKind::NpPlusTwoEvenPEvenN => "(np^2+2p)/8",
            CaseKind::NpMinusTwoEvenPOddN | CaseKind::NpMinusTwoEvenPEvenN => "(np^2-2p)/8",
            CaseKind::NpPlusThreeEvenPOddN => "(np^2+2p)/8 + floor((p+2)/6)",
            CaseKind::OddResidueUnit => "B + floor((p+1)/a)(a^2-1)/8",
            CaseKind::OddResidueTwo => "B + floor((p-2)/a)(a^2-1)/8 + floor((a+2)/4)",
            CaseKind::OddResidueMinusTwo => "B + ((p+2)/a - 1)(a^2-1)/8 + ((a-2)^2-1)/8 + floor(a/4)",
            CaseKind::EvenDivisor => "(np^2+ap)/8",
            CaseKind::NpPlusFourOddP => "n(p^2-1)/8 + floor(p/2) (p = 1,3 mod 8) or ceil(p/2) (p = 5,7 mod 8)",
            CaseKind::NpPlusFourEvenPEvenN => "np^2/8 + p/2",
        }
    }

    /// Tie-break rank among equal bounds: constructions with a closed-form
    /// target word first, then the staircase ones, then the alternate diagram.
    fn rank(self) -> u8 {
        match self {
            CaseKind::OddResidueUnit
            | CaseKind::OddResidueTwo
            | CaseKind::OddResidueMinusTwo
            | CaseKind::EvenDivisor => 1,
            CaseKind::NpPlusFourOddP | CaseKind::NpPlusFourEvenPEvenN => 2,
            _ => 0,
        }
    }

    pub fn diagram(self) -> DiagramKind {
        match self {
            CaseKind::NpPlusFourOddP | CaseKind::NpPlusFourEvenPEvenN => DiagramKind::Alternate,
            _ => DiagramKind::Standard,
        }
    }

    /// Whether [`template_word`] gives a closed-form target.
    pub fn has_template(self) -> bool {
        self.rank() == 0
    }
}

pub const ALL_KINDS: [CaseKind; 17] = [
    CaseKind::TwoStrand,
    CaseKind::MultipleOddP,
    CaseKind::NpPlusOneEvenPOddN,
    CaseKind::MultipleEvenPEvenN,
    CaseKind::NpMinusOneOddP,
    CaseKind::NpMinusOneEvenPEvenN,
    CaseKind::NpPlusTwoOddP,
    CaseKind::NpPlusTwoEvenPEvenN,
    CaseKind::NpMinusTwoEvenPOddN,
    CaseKind::NpMinusTwoEvenPEvenN,
    CaseKind::NpPlusThreeEvenPOddN,
    CaseKind::OddResidueUnit,
    CaseKind::OddResidueTwo,
    CaseKind::OddResidueMinusTwo,
    CaseKind::EvenDivisor,
    CaseKind::NpPlusFourOddP,
    CaseKind::NpPlusFourEvenPEvenN,
];

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (n = {}, a = {})", self.kind.id(), self.n, self.a)
    }
}

fn div_exact(num: u64, den: u64) -> u64 {
    assert_eq!(num % den, 0, "{num} is not divisible by {den}");
    num / den
}

/// Every construction whose hypotheses hold for `spec`. Properness is not checked here.
pub fn applicable_cases(spec: &TorusLinkSpec) -> Vec<Case> {
    let (p, q) = (spec.p, spec.q);
    let mut out = Vec::new();
    if p == 2 {
        out.push(Case { kind: CaseKind::TwoStrand, n: q / 2, a: (q % 2) as i64 });
        return out;
    }
    let pi = p as i64;
    for n in 1..=q / p + 1 {
        let a = q as i64 - (n * p) as i64;
        if a < -2 {
            continue;
        }
        let mut add = |kind| out.push(Case { kind, n, a });
        let p_odd = p % 2 == 1;
        let n_even = n % 2 == 0;
        match a {
            0 | 1 if p_odd => add(CaseKind::MultipleOddP),
            1 if !n_even => add(CaseKind::NpPlusOneEvenPOddN),
            0 | 1 if n_even => add(CaseKind::MultipleEvenPEvenN),
            -1 if n >= 2 && p_odd => add(CaseKind::NpMinusOneOddP),
            -1 if n >= 2 && n_even => add(CaseKind::NpMinusOneEvenPEvenN),
            2 if p_odd => add(CaseKind::NpPlusTwoOddP),
            2 if n_even && p % 4 == 0 => add(CaseKind::NpPlusTwoEvenPEvenN),
            -2 if n >= 2 && !p_odd && !n_even => add(CaseKind::NpMinusTwoEvenPOddN),
            -2 if n >= 2 && p % 4 == 0 && n_even => add(CaseKind::NpMinusTwoEvenPEvenN),
            3 if !p_odd && !n_even && 3 < pi => add(CaseKind::NpPlusThreeEvenPOddN),
            _ => {}
        }
        if a >= 3 && a % 2 == 1 && a < pi && (p_odd || n_even) {
            let r = pi % a;
            if r == 0 || r == 1 || r == a - 1 {
                add(CaseKind::OddResidueUnit);
            }
            if r == 2 % a {
                add(CaseKind::OddResidueTwo);
            }
            if (pi + 2) % a == 0 {
                add(CaseKind::OddResidueMinusTwo);
            }
        }
        if a >= 2 && a % 2 == 0 && !n_even && pi % a == 0 && a < pi {
            add(CaseKind::EvenDivisor);
        }
        if a == 4 && p >= 5 {
            if p_odd {
                add(CaseKind::NpPlusFourOddP);
            } else if n_even && matches!(p % 8, 0 | 2 | 6) {
                add(CaseKind::NpPlusFourEvenPEvenN);
            }
        }
    }
    out
}

/// Region count of a construction, with every division checked to be exact.
pub fn case_bound(spec: &TorusLinkSpec, case: &Case) -> u64 {
    let (p, q, n) = (spec.p, spec.q, case.n);
    let a = case.a.unsigned_abs();
    let base = || if p % 2 == 1 { div_exact(n * (p * p - 1), 8) } else { div_exact(n * p * p, 8) };
    match case.kind {
        CaseKind::TwoStrand => (q + 2) / 4,
        CaseKind::MultipleOddP | CaseKind::NpMinusOneOddP => div_exact(n * (p * p - 1), 8),
        CaseKind::NpPlusOneEvenPOddN | CaseKind::NpPlusTwoEvenPEvenN => div_exact(n * p * p + 2 * p, 8),
        CaseKind::MultipleEvenPEvenN | CaseKind::NpMinusOneEvenPEvenN => div_exact(n * p * p, 8),
        CaseKind::NpPlusTwoOddP => div_exact(n * (p * p - 1), 8) + (p + 1) / 4,
        CaseKind::NpMinusTwoEvenPOddN | CaseKind::NpMinusTwoEvenPEvenN => div_exact(n * p * p - 2 * p, 8),
        CaseKind::NpPlusThreeEvenPOddN => div_exact(n * p * p + 2 * p, 8) + (p + 2) / 6,
        CaseKind::OddResidueUnit => base() + (p + 1) / a * div_exact(a * a - 1, 8),
        CaseKind::OddResidueTwo => base() + (p - 2) / a * div_exact(a * a - 1, 8) + (a + 2) / 4,
        CaseKind::OddResidueMinusTwo => {
            base() + (div_exact(p + 2, a) - 1) * div_exact(a * a - 1, 8) + div_exact((a - 2) * (a - 2) - 1, 8) + a / 4
        }
        CaseKind::EvenDivisor => div_exact(n * p * p + a * p, 8),
        CaseKind::NpPlusFourOddP => {
            let extra = if matches!(p % 8, 1 | 3) { p / 2 } else { p.div_ceil(2) };
            div_exact(n * (p * p - 1), 8) + extra
        }
        CaseKind::NpPlusFourEvenPEvenN => div_exact(n * p * p, 8) + p / 2,
    }
}

/// Why `K(p,q)` is not proper, naming the shape when one of the standard
/// families applies. `None` for proper links.
pub fn not_proper_reason(spec: &TorusLinkSpec) -> Option<String> {
    if is_proper_closed_form(spec) {
        return None;
    }
    let p = spec.p;
    for n in 1..=spec.q / p + 1 {
        let a = spec.q as i64 - (n * p) as i64;
        let hit = match a {
            0 => p % 2 == 0 && n % 2 == 1,
            2 | -2 => p % 4 == 2 && n % 2 == 0,
            4 => (p % 8 == 4 && n % 2 == 0) || (p % 4 == 2 && n % 2 == 1),
            _ => false,
        };
        if hit {
            return Some(format!(
                "q = np{a:+} with n = {n} and p = {p} is not proper: each component links the others {} times",
                spec.component_linking()
            ));
        }
    }
    Some(format!("each component links the others {} times, which is odd", spec.component_linking()))
}

/// `X_i = {2i(p-1) - 2k : 0 ≤ k < i}`.
fn x_block(i: u64, p: u64) -> impl Iterator<Item = u64> {
    (0..i).map(move |k| 2 * i * (p - 1) - 2 * k)
}

/// `X_1 ∪ ⋯ ∪ X_m`.
fn xs(m: u64, p: u64) -> Vec<u64> {
    (1..=m).flat_map(|i| x_block(i, p)).collect()
}

fn odd_groups(p: u64, n: u64) -> Vec<u64> {
    let x = xs((p - 1) / 2, p);
    (0..n).flat_map(|i| x.iter().map(move |r| i * (p - 1) * p + r)).collect()
}

fn even_groups(p: u64, k: u64) -> Vec<u64> {
    let c = (p - 1) * (2 * p - 1) + 1;
    let head = xs(p / 2, p);
    let tail = xs((p - 2) / 2, p);
    (0..k)
        .flat_map(|i| {
            let off = i * (p - 1) * 2 * p;
            head.iter().map(move |x| off + x).chain(tail.iter().map(move |x| off + c - x)).collect::<Vec<_>>()
        })
        .collect()
}

fn prefix(p: u64, n: u64) -> Vec<u64> {
    if p % 2 == 1 {
        odd_groups(p, n)
    } else {
        even_groups(p, n / 2)
    }
}

/// Constant offsets of the `a = 4` schedule past the `np(p-1)` prefix.
fn np_plus_four_offsets(p: u64) -> Vec<u64> {
    let (m, r) = (p / 8, p % 8);
    let base = [6u64, 10, 12, 18];
    let mids = |upto: u64| (1..upto).flat_map(|i| [1u64, 3, 12, 18].map(|x| 24 * i + x)).collect::<Vec<_>>();
    let mut out: Vec<u64> = base.to_vec();
    match r {
        1 | 0 => out.extend(mids(m)),
        3 | 2 => {
            out.extend(mids(m));
            out.push(24 * m + 3);
        }
        5 if m == 0 => out = vec![6, 10, 12],
        5 => {
            out.extend(mids(m));
            out.extend([1, 3, 12].map(|x| 24 * m + x));
        }
        7 => out.extend(mids(m + 1)),
        6 if m == 0 => out = vec![6, 10, 12],
        6 => {
            out.extend(mids(m));
            out.push(24 * m + 3);
        }
        _ => unreachable!("p = {p} has no a = 4 schedule"),
    }
    out
}

/// Regions (1-based) used by the construction, in application order.
pub fn explicit_schedule(spec: &TorusLinkSpec, case: &Case) -> Vec<usize> {
    let (p, n) = (spec.p, case.n);
    let a = case.a;
    let au = a.unsigned_abs();
    let np1 = n * p * (p - 1);
    let staircase = |count: u64, half: u64| -> Vec<u64> {
        (0..count).flat_map(|j| xs(half, p).into_iter().map(move |x| np1 - j * au + x)).collect()
    };
    let regs: Vec<u64> = match case.kind {
        CaseKind::TwoStrand => (0..(spec.q + 2) / 4).map(|k| 4 * k + 2).collect(),
        CaseKind::MultipleOddP => odd_groups(p, n),
        CaseKind::NpPlusOneEvenPOddN => {
            let mut r = even_groups(p, (n - 1) / 2);
            r.extend(xs(p / 2, p).into_iter().map(|x| (n - 1) * p * (p - 1) + x));
            r
        }
        CaseKind::MultipleEvenPEvenN | CaseKind::NpMinusOneEvenPEvenN => even_groups(p, n / 2),
        CaseKind::NpMinusOneOddP => {
            let mut r = odd_groups(p, n - 1);
            r.extend(xs((p - 1) / 2, p).into_iter().map(|x| ((n - 1) * p - 1) * (p - 1) + x));
            r
        }
        CaseKind::NpPlusTwoOddP => {
            let mut r = odd_groups(p, n);
            r.extend((0..(p + 1) / 4).map(|j| (n * p + 1) * (p - 1) - 4 * j));
            r
        }
        CaseKind::NpPlusTwoEvenPEvenN => {
            let mut r = even_groups(p, n / 2);
            r.extend((0..p / 4).map(|j| (n * p + 1) * (p - 1) - 4 * j));
            r
        }
        CaseKind::NpMinusTwoEvenPOddN => {
            let mut r = even_groups(p, (n - 1) / 2);
            r.extend(xs((p - 2) / 2, p).into_iter().map(|x| ((n - 1) * p - 1) * (p - 1) + x));
            r
        }
        CaseKind::NpMinusTwoEvenPEvenN => {
            let off = (n - 2) * p * (p - 1);
            let mut r = even_groups(p, (n - 2) / 2);
            r.extend(xs(p / 2, p).into_iter().map(|x| off + x));
            r.extend(xs((p - 4) / 2, p).into_iter().map(|y| off + (2 * p - 3) * (p - 1) + 2 - y));
            r.extend((0..p / 4 - 1).map(|i| off + (p + 2 + 4 * i) * (p - 1) + 1));
            r
        }
        CaseKind::NpPlusThreeEvenPOddN => {
            let mut r = even_groups(p, (n - 1) / 2);
            r.extend(xs(p / 2, p).into_iter().map(|x| (n - 1) * p * (p - 1) + x));
            r.extend((0..(p + 2) / 6).map(|i| (n * p + 2) * (p - 1) - 2 - 6 * i));
            r
        }
        CaseKind::OddResidueUnit => {
            let mut r = prefix(p, n);
            r.extend(staircase((p + 1) / au, (au - 1) / 2));
            r
        }
        CaseKind::OddResidueTwo => {
            let mut r = prefix(p, n);
            r.extend(staircase((p - 2) / au, (au - 1) / 2));
            r.extend((0..(au + 2) / 4).map(|k| (n * p + 1) * (p - 1) + 1 + 4 * k * (p - 1)));
            r
        }
        CaseKind::OddResidueMinusTwo => {
            let full = (p + 2) / au - 1;
            let mut r = prefix(p, n);
            r.extend(staircase(full, (au - 1) / 2));
            r.extend(xs((au - 3) / 2, p).into_iter().map(|x| np1 - full * au + x));
            r.extend((0..au / 4).map(|l| (n * p + au - 2) * (p - 1) + (au - 3) - 4 * l));
            r
        }
        CaseKind::EvenDivisor => {
            let off = (n - 1) * p * (p - 1);
            let mut r = even_groups(p, (n - 1) / 2);
            r.extend(xs(p / 2, p).into_iter().map(|x| off + x));
            for j in 1..p / au {
                for y in xs((au - 2) / 2, p) {
                    r.push(off + j * au + (p + au - 1) * (p - 1) + 1 - y);
                }
            }
            r
        }
        CaseKind::NpPlusFourOddP | CaseKind::NpPlusFourEvenPEvenN => {
            let mut r = prefix(p, n);
            r.extend(np_plus_four_offsets(p).into_iter().map(|x| np1 + x));
            r
        }
    };
    regs.into_iter().map(|r| r as usize).collect()
}

/// `(σ_1⋯σ_{p-1})^{np} (σ_1σ_2σ_3)^4 ∏_{k=4}^{p-1} σ_kσ_{k-1}σ_{k-2}σ_{k-3}`, another braid
/// whose closure is `K(p, np+4)`.
pub fn alternate_word(p: usize, n: usize) -> Result<BraidWord> {
    if p < 4 {
        return Err(Error::InvalidParameter(format!("the alternate diagram needs p >= 4, got {p}")));
    }
    let mut w = toric_braid(p, n * p)?;
    w.extend(&BraidWord::from_ints(p, &[1, 2, 3].repeat(4))?)?;
    for top in 4..p as i32 {
        w.extend(&BraidWord::from_ints(p, &[top, top - 1, top - 2, top - 3])?)?;
    }
    Ok(w)
}

/// The starting braid word for a construction.
pub fn diagram_word(spec: &TorusLinkSpec, case: &Case) -> Result<BraidWord> {
    match case.kind.diagram() {
        DiagramKind::Standard => toric_braid(spec.p as usize, spec.q as usize),
        DiagramKind::Alternate => alternate_word(spec.p as usize, case.n as usize),
    }
}

/// Applies RCC at each region to the signs of `w`, working on the word alone.
pub fn apply_schedule(w: &BraidWord, regions: &[usize]) -> Result<BraidWord> {
    let c = w.len();
    let mut signs: Vec<i32> = w.letters().iter().map(|l| l.sign()).collect();
    for &r in regions {
        if r < 1 || r > c {
            return Err(Error::InvalidRegion { id: r, count: c });
        }
        for x in region_letters(w, r) {
            signs[x - 1] = -signs[x - 1];
        }
    }
    Ok(w.with_signs(&signs))
}

/// Target braid given in closed form by the construction, where it has one.
pub fn template_word(spec: &TorusLinkSpec, case: &Case) -> Result<Option<BraidWord>> {
    let p = spec.p as usize;
    let n = case.n as usize;
    let cat = |parts: Vec<BraidWord>| -> Result<BraidWord> {
        let mut w = BraidWord::empty(p);
        for part in parts {
            w.extend(&part)?;
        }
        Ok(w)
    };
    let odd_power = |k: usize| unknot_word(p).map(|w| w.power(k));
    let w = match case.kind {
        CaseKind::TwoStrand => {
            let q = spec.q as usize;
            let signs: Vec<i32> = (1..=q)
                .map(|t| {
                    if t % 4 == 2 || t % 4 == 3 {
                        if t <= 4 * ((q + 2) / 4) {
                            -1
                        } else {
                            1
                        }
                    } else {
                        1
                    }
                })
                .collect();
            toric_braid(2, q)?.with_signs(&signs)
        }
        CaseKind::MultipleOddP => {
            let mut parts = vec![odd_power(n)?];
            if case.a == 1 {
                parts.push(mu_run(p, 1, 1)?);
            }
            cat(parts)?
        }
        CaseKind::NpPlusOneEvenPOddN => cat(vec![mu_nu_power(p, (n - 1) / 2)?, unknot_word(p)?, mu_run(p, p, p)?])?,
        CaseKind::MultipleEvenPEvenN => {
            let mut parts = vec![mu_nu_power(p, n / 2)?];
            if case.a == 1 {
                parts.push(mu_run(p, 1, 1)?);
            }
            cat(parts)?
        }
        CaseKind::NpMinusOneOddP => cat(vec![odd_power(n - 1)?, mu_run(p, 2, p)?])?,
        CaseKind::NpMinusOneEvenPEvenN => {
            cat(vec![mu_nu_power(p, (n - 2) / 2)?, unknot_word(p)?, nu_run(p, 1, p - 1)?])?
        }
        CaseKind::NpPlusTwoOddP => cat(vec![odd_power(n)?, four_step_tail(p, (p + 1) / 4)?])?,
        CaseKind::NpPlusTwoEvenPEvenN => cat(vec![mu_nu_power(p, n / 2)?, four_step_tail(p, p / 4)?])?,
        CaseKind::NpMinusTwoEvenPOddN => cat(vec![mu_nu_power(p, (n - 1) / 2)?, mu_run(p, 2, p - 1)?])?,
        CaseKind::NpMinusTwoEvenPEvenN => {
            cat(vec![mu_nu_power(p, (n - 2) / 2)?, unknot_word(p)?, beta_np_minus_two(p)?])?
        }
        CaseKind::NpPlusThreeEvenPOddN => cat(vec![mu_nu_power(p, (n - 1) / 2)?, unknot_word(p)?, beta3_word(p)?])?,
        _ => return Ok(None),
    };
    Ok(Some(w))
}

/// Word left after the construction: the closed form where there is one,
/// otherwise the result of applying [`explicit_schedule`].
pub fn target_word(spec: &TorusLinkSpec, case: &Case) -> Result<BraidWord> {
    match template_word(spec, case)? {
        Some(w) => Ok(w),
        None => apply_schedule(&diagram_word(spec, case)?, &explicit_schedule(spec, case)),
    }
}

/// Orders candidates by bound, then by the tie-break rank.
pub fn sort_cases(spec: &TorusLinkSpec, cases: &mut [Case]) {
    cases.sort_by_key(|c| (case_bound(spec, c), c.kind.rank(), c.kind, c.n));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: u64, q: u64) -> TorusLinkSpec {
        TorusLinkSpec::new(p, q).unwrap()
    }

    #[test]
    fn xs_small() {
        assert_eq!(xs(2, 5), vec![8, 16, 14]);
    }

    #[test]
    fn multiple_cases() {
        let spec = s(5, 5);
        let cases = applicable_cases(&spec);
        assert!(cases.iter().any(|c| c.kind == CaseKind::MultipleOddP && c.n == 1));
        assert_eq!(case_bound(&spec, &cases[0]), 3);
    }

    #[test]
    fn ids_round_trip() {
        for k in ALL_KINDS {
            assert_eq!(CaseKind::from_id(k.id()), Some(k));
        }
    }

    #[test]
    fn not_proper_reasons() {
        assert!(not_proper_reason(&s(4, 4)).unwrap().contains("q = np+0"));
        assert!(not_proper_reason(&s(3, 7)).is_none());
    }

    #[test]
    fn schedule_matches_template_small() {
        for (p, q) in [(3, 7), (4, 5), (5, 9), (3, 8), (4, 10)] {
            let spec = s(p, q);
            for case in applicable_cases(&spec) {
                if let Some(t) = template_word(&spec, &case).unwrap() {
                    let got =
                        apply_schedule(&diagram_word(&spec, &case).unwrap(), &explicit_schedule(&spec, &case)).unwrap();
                    assert_eq!(got, t, "{spec} {case}");
                }
            }
        }
    }
}
