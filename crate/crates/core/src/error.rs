use alloc::string::String;

/// Errors raised by the compiler core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Pauli character {ch:?} at position {pos}")]
    PauliChar { ch: char, pos: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    Length { expected: usize, found: usize },
    #[error("qubit index {index} out of range for {n} qubits")]
    QubitRange { index: usize, n: usize },
    #[error("control and target coincide on qubit {0}")]
    SameQubit(usize),
    #[error("stabilizer rows {a} and {b} anticommute")]
    Anticommuting { a: usize, b: usize },
    #[error("stabilizer row {0} has a non-real phase")]
    ImaginaryPhase(usize),
    #[error("stabilizer rows are linearly dependent")]
    DependentRows,
    #[error("tableau has {rows} rows for {qubits} qubits")]
    NotFullRank { rows: usize, qubits: usize },
    #[error("vertex {0} is not in the graph")]
    Vertex(usize),
    #[error("vertex {0} carries a self-loop")]
    SelfLoop(usize),
    #[error("adjacency matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("vertex {special} is not adjacent to measured vertex {v}")]
    NotAdjacent { v: usize, special: usize },
    #[error("measurement order does not cover vertex {0} exactly once")]
    Order(usize),
    #[error("auxiliary {0} is measured out of round order")]
    PatternOrder(usize),
    #[error("rotation generator {0} carries a phase")]
    PhasedGenerator(usize),
    #[error("empty rotation period")]
    EmptyPeriod,
    #[error("trotter step count must be positive")]
    ZeroSteps,
    #[error("the observable has identity support")]
    TrivialObservable,
    #[error("outcome vector has length {found}, which is not a round boundary")]
    RoundBoundary { found: usize },
    #[error("angle {0} is symbolic and has no numeric value")]
    SymbolicAngle(usize),
    #[error("distance weight exponent {0} overflows")]
    DistanceOverflow(u32),
    #[error("invalid annealing parameter: {0}")]
    AnnealParameter(&'static str),
    #[error("cannot extrapolate: {0}")]
    Extrapolation(String),
    #[error("dense simulation limited to {max} qubits, requested {n}")]
    DenseLimit { n: usize, max: usize },
    #[error("projected state vanished: {0}")]
    ZeroNorm(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
