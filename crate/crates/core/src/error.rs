use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph C_{n}^{s}: need n >= 3 and s >= 1")]
    InvalidGraph { n: usize, s: usize },

    #[error("cardinality k = {k} out of range [1, {n}]")]
    CardinalityOutOfRange { k: usize, n: usize },

    #[error("vertex {vertex} is not a member of the subset")]
    NotAMember { vertex: usize },

    #[error("subset lives on a cycle of length {subset_n}, graph has n = {graph_n}")]
    LengthMismatch { subset_n: usize, graph_n: usize },

    #[error("n = {n} must exceed s = {s} for the extremal result to apply")]
    OutsideDomain { n: usize, s: usize },

    #[error("{what} requires k + s < n (got n = {n}, k = {k}, s = {s})")]
    OutOfRegime { what: &'static str, n: usize, k: usize, s: usize },

    #[error("Turan bound undefined: k = {k} does not exceed the clique number {clique}")]
    TuranUndefined { k: usize, clique: usize },

    #[error("dense verification limited to n <= {limit} (got n = {n})")]
    VerificationScope { n: usize, limit: usize },

    #[error("search refused: {projected} subsets projected, budget is {budget}")]
    BudgetExceeded { projected: u128, budget: u128 },

    #[error("exhaustive search supports n <= {limit} (got n = {n})")]
    SearchTooWide { n: usize, limit: usize },

    #[error("unknown output format `{0}` (expected plain, markdown, csv or json)")]
    UnknownFormat(String),

    #[error("table spec: {0}")]
    TableSpec(String),
}
