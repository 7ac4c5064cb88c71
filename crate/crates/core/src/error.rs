use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("no substitution given for variable {0}")]
    MissingSubstitution(&'static str),

    #[error("group closure exceeded {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("positivity form vanishes on root {0}")]
    NonGenericForm(String),

    #[error("zero vector has no reflection")]
    ZeroVector,

    #[error("malformed index set: {0}")]
    MalformedIndices(String),

    #[error("lift {label} sends c{column} outside the Cartan subspace (component {component})")]
    OutsideCartan {
        label: usize,
        column: usize,
        component: String,
    },

    #[error("K(P,P) and Ω(P·w, w) disagree")]
    QuarticMismatch,

    #[error("Klein form is not relatively invariant under {0}")]
    NotRelativeInvariant(String),

    #[error("pencil parameters [0:0]")]
    ZeroParameters,

    #[error("degenerate: member is tetrahedron {0}")]
    DegenerateMember(&'static str),

    #[error("degenerate tangent plane: {0}")]
    DegenerateTangent(String),

    #[error("conjugate parameters must sum to zero")]
    SumNotZero,

    #[error("cross-ratio needs four distinct points")]
    RepeatedPoints,

    #[error("lambda {0} is 0 or 1")]
    DegenerateLambda(String),

    #[error("binary quartic has a repeated root")]
    RepeatedRoots,

    #[error("point lies on the base locus of the pencil")]
    BaseLocus,

    #[error("j-invariants disagree: {0}")]
    JMismatch(String),

    #[error("{0}")]
    Verification(String),
}
