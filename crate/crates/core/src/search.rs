//! Exhaustive search for the region unknotting number of small diagrams.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::bound;
use crate::braid::toric_braid;
use crate::diagram::{close_braid, FlipVector, PlanarDiagram};
use crate::error::{Error, Result};
use crate::invariants::{certify_unlink_with, Verdict};
use crate::markov::MarkovOptions;
use crate::properness::{is_proper_oracle, require_proper, TorusLinkSpec};

/// Largest region count the search accepts.
pub const MAX_REGIONS: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest subset size tried.
    pub max_size: usize,
    pub markov: MarkovOptions,
    /// Checked between subset sizes.
    pub timeout: Option<Duration>,
}

impl SearchOptions {
    pub fn up_to(max_size: usize) -> SearchOptions {
        SearchOptions { max_size, markov: MarkovOptions::default(), timeout: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub regions: usize,
    pub max_size: usize,
    /// Region subsets visited.
    pub explored: u64,
    /// Distinct flip vectors among them, i.e. how many closures were tested.
    pub distinct: u64,
    /// Subsets whose closure could be neither certified nor refuted.
    pub inconclusive: u64,
    /// Smallest subset found that trivializes the diagram, first in lexicographic order.
    pub witness: Option<Vec<usize>>,
    /// No smaller subset can work: every smaller one was refuted.
    pub exact: bool,
    /// Every subset smaller than this was refuted.
    pub lower: usize,
    pub timed_out: bool,
}

impl SearchReport {
    pub fn value(&self) -> Option<usize> {
        if self.exact {
            self.witness.as_ref().map(Vec::len)
        } else {
            None
        }
    }
}

/// Trivial-link test used by the search: exact for two strands, otherwise the
/// unlink certificate.
fn closure_status(d: &PlanarDiagram, opts: MarkovOptions) -> Verdict {
    let w = d.word().expect("braid diagram");
    if w.strands() == 2 {
        return if w.writhe().abs() <= 1 { Verdict::Certified } else { Verdict::Refuted };
    }
    certify_unlink_with(w, opts).verdict
}

/// `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Tries all region subsets of size `0..=max_size` on a braid diagram.
pub fn search_diagram(d: &PlanarDiagram, opts: &SearchOptions) -> Result<SearchReport> {
    let started = Instant::now();
    let max_size = opts.max_size;
    if d.word().is_none() {
        return Err(Error::InvalidParameter("search needs a diagram built from a braid".into()));
    }
    if !is_proper_oracle(d) {
        return Err(Error::InvalidParameter("diagram is not proper; no region set can unlink it".into()));
    }
    let r = d.region_count();
    if r > MAX_REGIONS {
        return Err(Error::InvalidParameter(format!("{r} regions exceeds the search limit of {MAX_REGIONS}")));
    }
    let rows = d.incidence_matrix();
    let mut cache: HashMap<FlipVector, Verdict> = HashMap::new();
    let mut report = SearchReport {
        regions: r,
        max_size,
        explored: 0,
        distinct: 0,
        inconclusive: 0,
        witness: None,
        exact: true,
        lower: 0,
        timed_out: false,
    };
    let mut unknown_below = false;
    for k in 0..=max_size.min(r) {
        if opts.timeout.is_some_and(|t| started.elapsed() > t) {
            report.timed_out = true;
            if !unknown_below {
                report.lower = k;
            }
            report.exact = false;
            return Ok(report);
        }
        let subsets = combinations(r, k);
        let vectors: Vec<FlipVector> =
            subsets.iter().map(|s| rows.combine(&FlipVector::from_indices(r, s.iter().copied()))).collect();
        let mut fresh: Vec<FlipVector> = vectors.iter().filter(|v| !cache.contains_key(*v)).cloned().collect();
        fresh.sort_by_key(|v| v.ones().collect::<Vec<_>>());
        fresh.dedup();
        let verdicts: Vec<Verdict> = fresh.par_iter().map(|v| closure_status(&d.apply_flips(v), opts.markov)).collect();
        report.distinct += fresh.len() as u64;
        cache.extend(fresh.into_iter().zip(verdicts));
        report.explored += subsets.len() as u64;

        let mut found = None;
        for (s, v) in subsets.iter().zip(&vectors) {
            match cache[v] {
                Verdict::Certified => {
                    found = Some(s.iter().map(|i| i + 1).collect::<Vec<_>>());
                    break;
                }
                Verdict::Inconclusive => report.inconclusive += 1,
                Verdict::Refuted => {}
            }
        }
        let unknown_here = vectors.iter().any(|v| cache[v] == Verdict::Inconclusive);
        if (unknown_here || found.is_some()) && !unknown_below {
            report.lower = k;
        }
        if let Some(w) = found {
            report.witness = Some(w);
            report.exact = !unknown_below;
            return Ok(report);
        }
        unknown_below |= unknown_here;
    }
    if !unknown_below {
        report.lower = max_size.min(r) + 1;
    }
    report.exact = false;
    Ok(report)
}

/// Exhaustive region unknotting search on the standard diagram of `K(p,q)`.
pub fn brute_force_ur(spec: &TorusLinkSpec, opts: &SearchOptions) -> Result<SearchReport> {
    require_proper(spec)?;
    let d = close_braid(&toric_braid(spec.p as usize, spec.q as usize)?)?;
    search_diagram(&d, opts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub spec: TorusLinkSpec,
    pub bound: u64,
    pub search: SearchReport,
    /// The exact value is strictly below the bound.
    pub improves: bool,
}

/// Compares the best bound with exhaustive search up to that size.
pub fn sharpness_probe(spec: &TorusLinkSpec, opts: MarkovOptions) -> Result<SharpnessReport> {
    let b = bound(spec)?.value();
    let search = brute_force_ur(spec, &SearchOptions { max_size: b as usize, markov: opts, timeout: None })?;
    let improves = search.value().is_some_and(|v| (v as u64) < b);
    Ok(SharpnessReport { spec: *spec, bound: b, search, improves })
}
