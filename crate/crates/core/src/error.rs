use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("section lives in {found}, expected {expected}")]
    AmbientMismatch { expected: &'static str, found: &'static str },

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("spec failed the axiom checks: {0}")]
    SpecNotValidated(String),

    #[error("jacobiator escapes kernel frame at J(e{}, e{}, e{})", .0 + 1, .1 + 1, .2 + 1)]
    JacobiatorEscapesKernel(usize, usize, usize),

    #[error("bracket leaves kernel: {0}")]
    BracketLeavesKernel(String),

    #[error("cochain shape mismatch")]
    ShapeMismatch,

    #[error("cochain degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("infinite-dimensional piece: {0}")]
    InfiniteDimensional(String),

    #[error("composite of differentials is nonzero at degree {0}")]
    ComplexNotClosed(usize),

    #[error("not a Lie algebra: {0}")]
    NotALieAlgebra(String),

    #[error("twist is not kernel-valued: {0}")]
    NotKernelValued(String),

    #[error("not twisted Poisson: {0}")]
    NotTwistedPoisson(String),

    #[error("twist violates the anchor morphism condition: {0}")]
    TwistViolatesMorphism(String),

    #[error("twist does not vanish on the kernel frame: {0}")]
    TwistNotKernelTrivial(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
