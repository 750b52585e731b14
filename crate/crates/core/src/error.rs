use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An edge references a vertex id `>= vertex_count`.
    VertexOutOfRange {
        vertex: usize,
        vertex_count: usize,
    },
    SelfLoop {
        vertex: usize,
    },
    DuplicateEdge {
        u: usize,
        v: usize,
    },
    Disconnected,
    NoEdges,
    /// The generator family needs more vertices.
    TooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    InvalidProbability(f64),
    RandomDisconnectedAfterRetries {
        retries: usize,
    },
    BadBoundaryVertex {
        vertex: usize,
        vertex_count: usize,
    },
    InvalidEpsilon(f64),
    LengthMismatch {
        expected: usize,
        got: usize,
    },
    EpsilonMismatch {
        state: f64,
        walker: f64,
    },
    NoConvergence {
        sweeps: usize,
        off_diagonal: f64,
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    /// Eigenvalue 1 of the transition matrix is not simple.
    DegenerateTopEigenvalue {
        second: f64,
    },
    /// The second eigenvalue is part of a near-degenerate cluster.
    DegenerateSecondEigenvalue {
        cluster: usize,
    },
    EigenResidualTooLarge {
        residual: f64,
    },
    UnequalArcCounts {
        a1: usize,
        a2: usize,
    },
    InvalidArcCounts {
        a1: usize,
        a2: usize,
    },
    HorizonTooShort {
        horizon: usize,
        required: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, vertex_count } => {
                write!(
                    f,
                    "vertex {vertex} out of range for a graph with {vertex_count} vertices"
                )
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            Error::Disconnected => f.write_str("graph is not connected"),
            Error::NoEdges => f.write_str("graph has no edges"),
            Error::TooSmall { family, min, got } => {
                write!(f, "{family} graph needs at least {min} vertices, got {got}")
            }
            Error::InvalidProbability(p) => write!(f, "edge probability {p} is not in [0, 1]"),
            Error::RandomDisconnectedAfterRetries { retries } => {
                write!(f, "random graph still disconnected after {retries} attempts")
            }
            Error::BadBoundaryVertex { vertex, vertex_count } => write!(
                f,
                "boundary vertex {vertex} is not in a graph with {vertex_count} vertices"
            ),
            Error::InvalidEpsilon(eps) => write!(f, "bridge weight {eps} is not in the admissible range"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "state has {got} amplitudes, graph has {expected} arcs")
            }
            Error::EpsilonMismatch { state, walker } => {
                write!(f, "state evolves under eps={state}, walker uses eps={walker}")
            }
            Error::NoConvergence { sweeps, off_diagonal } => write!(
                f,
                "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_diagonal:e})"
            ),
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, expected square"),
            Error::DegenerateTopEigenvalue { second } => {
                write!(f, "eigenvalue 1 is not simple (second eigenvalue {second})")
            }
            Error::DegenerateSecondEigenvalue { cluster } => write!(
                f,
                "second eigenvalue belongs to a near-degenerate cluster of size {cluster}"
            ),
            Error::EigenResidualTooLarge { residual } => {
                write!(f, "eigenpair residual {residual:e} exceeds tolerance")
            }
            Error::UnequalArcCounts { a1, a2 } => {
                write!(f, "arc counts differ ({a1} vs {a2})")
            }
            Error::InvalidArcCounts { a1, a2 } => {
                write!(f, "arc counts must be even and at least 2 (got {a1}, {a2})")
            }
            Error::HorizonTooShort { horizon, required } => {
                write!(f, "series horizon {horizon} is shorter than the required {required}")
            }
        }
    }
}

impl core::error::Error for Error {}
