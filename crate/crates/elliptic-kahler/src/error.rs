use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by the algebra layers. Parse errors carry their own
/// position data and convert into [`Error::Parse`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: operands belong to different polynomial rings")]
    RingMismatch,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("regular-sequence test needs one polynomial per variable (got {polys} in a {vars}-variable ring)")]
    NotSquare { vars: usize, polys: usize },

    #[error("algebra is not pure: {0}")]
    NotPure(String),

    #[error("pure presentation needs equally many even and odd generators (even {even}, odd {odd})")]
    UnequalCounts { even: usize, odd: usize },

    #[error("quotient is not finite dimensional: {0}")]
    NotFinite(String),

    #[error("monomial basis in degree {degree} has {size} elements, over the cap of {cap}")]
    BasisCap { degree: u32, size: usize, cap: usize },

    #[error("invalid exponent tuple: {0}")]
    InvalidTuple(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid Sullivan algebra:\n{0}")]
    InvalidAlgebra(crate::sullivan::ValidationReport),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error(transparent)]
    Parse(#[from] crate::parse::ParseError),
}
