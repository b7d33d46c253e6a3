use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum of 49")]
    TooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("the Legendre character is undefined in characteristic 2")]
    EvenCharacteristic,
    #[error("element {index} does not belong to GF({q})")]
    ForeignElement { index: u32, q: u32 },
    #[error("matrix dimensions do not match: {0}")]
    Shape(String),
    #[error("all generator rows are zero")]
    ZeroCode,
    #[error("the dual of the full space is the zero code")]
    ZeroDual,
    #[error("deleting coordinate {0} leaves the zero code")]
    DimensionCollapse(usize),
    #[error("coordinate {pos} is out of range for length {n}")]
    OutOfRange { pos: usize, n: usize },
    #[error("enumeration needs {required} words but the budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("inconsistent weight distribution: {0}")]
    InconsistentInput(String),
    #[error("code has even minimum distance {0}")]
    NotOddDistance(usize),
    #[error("no codeword of weight {0}")]
    EmptyWeightClass(usize),
    #[error("invalid design: {0}")]
    InvalidDesign(String),
    #[error("replication number is not constant")]
    NotOneDesign,
    #[error("design is trivial (need t >= 2 and t < k < v)")]
    TrivialDesign,
    #[error("point {0} lies in no block")]
    PointNotCovered(usize),
    #[error("complement of a design with k = v has empty blocks")]
    FullBlocks,
    #[error("integrity failure: {0}")]
    Integrity(String),
    #[error("{0}")]
    LimitExceeded(String),
    #[error("{q} is not a quadratic residue mod {n}")]
    NotResidue { n: u64, q: u64 },
    #[error("circulant has rank {rank}, expected {expected}")]
    DimensionMismatch { rank: usize, expected: usize },
    #[error("q = {0} must be an odd prime power")]
    EvenQ(u64),
    #[error("q = {0} must be a prime power with q = -1 (mod 6) and q <= 23")]
    BadQ(u64),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("t = {t} must satisfy 0 < t < d = {d}")]
    BadStrength { t: usize, d: usize },
    #[error("Assmus-Mattson hypothesis fails: {count} dual weights <= n - t, allowed {allowed}")]
    HypothesisFails { count: usize, allowed: usize },
    #[error("not a projective plane: {0}")]
    NotAPlane(String),
    #[error("not an association scheme: {0}")]
    NotAScheme(String),
    #[error("k = {k} exceeds v/2 for v = {v}")]
    BadK { v: usize, k: usize },
    #[error("expected the 5-(24,8,1) design: {0}")]
    WrongDesign(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
