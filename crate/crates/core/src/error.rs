use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure mode of the library. Variants map onto the precondition
/// violations the CLI reports with exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("algebra tag mismatch in {op}")]
    AlgebraMismatch { op: &'static str },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix dimensions must be positive")]
    EmptyMatrix,
    #[error("entry count {found} does not match {rows}x{cols}")]
    EntryCount { rows: usize, cols: usize, found: usize },
    #[error("boolean matrix entry at ({row}, {col}) is neither bottom nor unit")]
    NotBoolean { row: usize, col: usize },
    #[error("scaling vector has a bottom entry at {index}")]
    BottomInScaling { index: usize },
    #[error("column {col} has no finite entry")]
    EmptyColumn { col: usize },
    #[error("entry ({row}, {col}) exceeds the unit; thresholding needs a scaled matrix")]
    AboveUnit { row: usize, col: usize },
    #[error("polynomial arity {expected} does not match {found} matrices")]
    ArityMismatch { expected: usize, found: usize },
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("Kleene star diverges: Perron root exceeds the unit")]
    DivergentStar,
    #[error("matrix is acyclic (Perron root is bottom)")]
    Acyclic,
    #[error("matrix is not normalized: Perron root is not the unit")]
    NotNormalized,
    #[error("no fixpoint reached within {cap} iterations")]
    NoConvergence { cap: usize },
    #[error("index {index} out of range (size {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("value is not an eigenvalue of the matrix")]
    NotAnEigenvalue,
    #[error("vector is not a positive eigenvector of the matrix")]
    NotAnEigenvector,
    #[error("cone is not invariant under the matrix")]
    NotInvariant,
    #[error("matrices {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("matrix {0} is not irreducible")]
    NotIrreducible(usize),
    #[error("matrix {0} has two classes with equal Perron roots")]
    RootsNotDistinct(usize),
    #[error("node {node} has zero out-degree")]
    ZeroOutDegree { node: usize },
    #[error("value is not a distinguished eigenvalue")]
    NotDistinguished,
    #[error("polynomial evaluation has a negative entry at ({row}, {col})")]
    NegativeEvaluation { row: usize, col: usize },
    #[error("entry ({row}, {col}) is negative or not finite")]
    NegativeEntry { row: usize, col: usize },
    #[error("empty matrix family")]
    EmptyFamily,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("generation failed after {attempts} attempts: {reason}")]
    GenerationFailed { attempts: usize, reason: String },
}
