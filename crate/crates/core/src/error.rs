use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("subgroup check failed: some generator is not in the ambient group")]
    NotASubgroup,

    #[error("enumeration cap exceeded: group order {order} > cap {cap}")]
    CapExceeded { order: u128, cap: u128 },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("unstable graph: vertex {vertex} has degree {degree} < 3")]
    Unstable { vertex: usize, degree: usize },

    #[error("graph is not vertex-transitive")]
    NotVertexTransitive,

    #[error("edge {edge} is not incident to vertex {vertex}")]
    NotIncident { edge: usize, vertex: usize },

    #[error("no automorphism swaps the endpoints of the chosen edge ([G4:G3] = {index})")]
    NoEndpointSwap { index: u128 },

    #[error("{family}: parameter {value} below minimum {min}")]
    FamilyParameter { family: &'static str, value: usize, min: usize },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} is out of range (must be < 2^31)")]
    PrimeTooLarge(u64),

    #[error("prime {0} divides the leading coefficient")]
    DividesLeadingCoefficient(u64),

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial is not squarefree (discriminant is zero)")]
    NotSquarefree,

    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
}
