use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("generator {generator} is out of range for a braid on {strands} strands")]
    GeneratorOutOfRange { generator: usize, strands: usize },

    #[error("cannot parse braid word: {0}")]
    Parse(String),

    #[error("step budget of {0} exhausted before a verdict was reached")]
    BudgetExceeded(u64),

    #[error("closure diagram is disconnected: generator {0} never occurs")]
    Disconnected(usize),

    #[error("closure of the empty word has no crossings")]
    EmptyDiagram,

    #[error("region id {id} is out of range ({count} regions)")]
    InvalidRegion { id: usize, count: usize },

    #[error("{strands} strands exceeds the transfer-matrix guard of {max}")]
    TooManyStrands { strands: usize, max: usize },

    #[error("invalid PD code: {0}")]
    PdCode(String),

    #[error("K({p},{q}) is not proper: {reason}")]
    NotProper { p: u64, q: u64, reason: String },

    #[error("no construction covers K({p},{q}); tried: {}", tried.join(", "))]
    CaseNotCovered { p: u64, q: u64, tried: Vec<String> },

    #[error("case {case} does not apply to K({p},{q})")]
    CaseMismatch { case: String, p: u64, q: u64 },

    #[error("verification failed at stage `{stage}`: {detail}")]
    Pipeline { stage: &'static str, detail: String },
}
