use thiserror::Error;

/// Errors raised by the basis, search and bound computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("basis elements must be strictly increasing (found {prev} then {next})")]
    NotIncreasing { prev: u64, next: u64 },
    #[error("basis element {0} exceeds the supported range (< 2^62)")]
    ElementTooLarge(u64),
    #[error("empty basis")]
    EmptyBasis,
    #[error("modulus too small: n = {0}, need n >= 2")]
    ModulusTooSmall(u64),
    #[error("k too large for exact search: k = {k}, ceiling is {max}")]
    KTooLarge { k: usize, max: usize },
    #[error("k must be at least 1")]
    KTooSmall,
    #[error("node budget must be positive")]
    ZeroBudget,
    #[error("construction degenerate for k = {0} (need k >= 4)")]
    ConstructionDegenerate(usize),
    #[error("no separation: alpha1 = {alpha1} must exceed alpha2 = {alpha2}")]
    NoSeparation { alpha1: f64, alpha2: f64 },
    #[error("quadrature grid too small: m = {0}, need m >= 256")]
    GridTooSmall(usize),
    #[error("outside lemma regime: kappa = {kappa}, tau = {tau} (need kappa >= 3, tau >= 2)")]
    OutsideRegime { kappa: f64, tau: f64 },
    #[error("pair ({0}, {1}) does not belong to the {2} regime")]
    WrongRegime(i64, i64, &'static str),
    #[error("empty sample")]
    EmptySample,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
