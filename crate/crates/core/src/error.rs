use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("column index {index} out of range 1..={cols}")]
    IndexOutOfRange { index: usize, cols: usize },

    #[error("matrix is rank-deficient: rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    #[error("basis columns are dependent or have the wrong size")]
    DependentBasis,

    #[error("duplicate element label {0}")]
    DuplicateLabel(u32),

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("unknown element label {0}")]
    UnknownLabel(u32),

    #[error("deletion and contraction sets overlap at label {0}")]
    Overlap(u32),

    #[error("vector length {got} does not match required length {expected}")]
    VectorLength { expected: usize, got: usize },

    #[error("{vector} is not a valid {kind} candidate")]
    InvalidCandidate { kind: &'static str, vector: String },

    #[error("not a {k}-separation: sides have sizes {a} and {b}")]
    NotKSeparation { k: usize, a: usize, b: usize },

    #[error("hypothesis failed: {0}")]
    Hypothesis(Hypothesis),

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matroid too large: {0}")]
    TooLarge(String),

    #[error("{0}")]
    Precondition(String),
}

/// Which decomposer hypothesis a matroid/separation pair violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    NotSimple,
    NotCosimple,
    NotExact,
    NotUnionOfCircuits,
    NotUnionOfCocircuits,
    NotSelfDual,
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Hypothesis::NotSimple => "matroid is not simple",
            Hypothesis::NotCosimple => "matroid is not cosimple",
            Hypothesis::NotExact => "separation is not exact",
            Hypothesis::NotUnionOfCircuits => "side is not a union of circuits",
            Hypothesis::NotUnionOfCocircuits => "side is not a union of cocircuits",
            Hypothesis::NotSelfDual => "matroid is not self-dual",
        };
        f.write_str(s)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
