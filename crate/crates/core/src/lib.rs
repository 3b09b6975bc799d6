//! Region crossing change on torus links: braid words, closed-braid diagrams,
//! properness, upper bounds with explicit region schedules, and exact search.

pub mod bounds;
pub mod braid;
pub mod cases;
pub mod diagram;
pub mod error;
pub mod gf2;
pub mod handle;
pub mod invariants;
pub mod laurent;
pub mod markov;
pub mod properness;
pub mod search;
pub mod temperley_lieb;
pub mod templates;

pub use bounds::{bound, verify_bound, verify_case, BoundReport, Certificate};
pub use braid::{gcd, toric_braid, BraidWord, Letter};
pub use cases::{Case, CaseKind, DiagramKind};
pub use diagram::{close_braid, FlipVector, LinkingData, PdCode, PlanarDiagram, Region};
pub use error::{Error, Result};
pub use gf2::{BitVec, Gf2Matrix};
pub use handle::{handle_reduce, handle_reduce_with_budget, DEFAULT_BUDGET};
pub use invariants::{certify_unlink, jones, kauffman_bracket, UnlinkCheck, Verdict};
pub use laurent::LaurentPoly;
pub use markov::{markov_simplify, markov_simplify_with, MarkovMove, MarkovOptions, Simplified};
pub use properness::{
    is_proper_closed_form, is_proper_oracle, is_proper_power_form, properness, require_proper, TorusLinkSpec,
};
pub use search::{brute_force_ur, sharpness_probe, SearchOptions, SearchReport, SharpnessReport};
