use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a lattice: elements {0} and {1} have no unique {2}")]
    NotALattice(usize, usize, &'static str),
    #[error("poset is not bounded: {0}")]
    NotBounded(String),
    #[error("cover relation contains a cycle")]
    CyclicCovers,
    #[error("element index {index} out of range for a lattice of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("lattice would have {0} elements, above the supported capacity of {1}")]
    TooLarge(usize, usize),
    #[error("elements {0} and {1} are not comparable in the required order")]
    NotComparable(usize, usize),
    #[error("lattice is not atomic (element {0} is not a join of atoms)")]
    NotAtomic(usize),

    #[error("the unit monomial cannot be an ideal generator")]
    UnitGenerator,
    #[error("an ideal needs at least one generator")]
    EmptyGeneratorSet,
    #[error("monomial has {found} variables, expected {expected}")]
    VariableCountMismatch { expected: usize, found: usize },

    #[error("graph has no edges")]
    NoEdges,
    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("characteristic {0} is prime but has no compiled field; see SUPPORTED_PRIMES")]
    UnsupportedCharacteristic(u32),

    #[error("Boolean-lattice equivalence violated: {0}")]
    EquivalenceViolation(String),
    #[error("pd/height contract violated: {0}")]
    ContractViolation(String),
    #[error("lattice/graph characterization violated: {0}")]
    TheoremViolation(String),
    #[error("unknown theorem id `{0}`")]
    BadTheoremId(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
