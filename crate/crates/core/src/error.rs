use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the anonymization core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graph needs at least one slice.
    NoSlices,
    SelfLoop { slice: usize, node: usize },
    NodeOutOfRange { node: usize, n: usize },
    /// Two objects that must agree on `n` or `T` do not.
    ShapeMismatch { expected: (usize, usize), found: (usize, usize) },
    InvalidAnonymity { k: usize, n: usize },
    InvalidParameter(&'static str),
    EmptyInput,
    /// A degree entry is not below the sequence length.
    DegreeOutOfRange { degree: u32, n: usize },
    NotRealizable,
    /// Anonymized rows disagree inside a group.
    NotGroupUniform { group: usize, slice: usize },
    InstanceTooLarge { arcs: usize, limit: usize },
    NoConvergence { iterations: usize },
    ZeroVector,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NoSlices => write!(f, "graph has no slices"),
            Error::SelfLoop { slice, node } => {
                write!(f, "self-loop on node {node} in slice {slice}")
            }
            Error::NodeOutOfRange { node, n } => {
                write!(f, "node {node} out of range for n={n}")
            }
            Error::ShapeMismatch { expected, found } => write!(
                f,
                "shape mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::InvalidAnonymity { k, n } => {
                write!(f, "anonymity level k={k} must satisfy 1 <= k <= n={n}")
            }
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::EmptyInput => write!(f, "empty input"),
            Error::DegreeOutOfRange { degree, n } => {
                write!(f, "degree {degree} out of range for sequence of length {n}")
            }
            Error::NotRealizable => write!(f, "degree sequence is not realizable"),
            Error::NotGroupUniform { group, slice } => {
                write!(f, "group {group} is not degree-uniform in slice {slice}")
            }
            Error::InstanceTooLarge { arcs, limit } => {
                write!(f, "assignment instance has {arcs} arcs, limit is {limit}")
            }
            Error::NoConvergence { iterations } => {
                write!(f, "no convergence after {iterations} iterations")
            }
            Error::ZeroVector => write!(f, "zero vector"),
        }
    }
}

impl core::error::Error for Error {}
