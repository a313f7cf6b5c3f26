use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid chain configuration: {0}")]
    Config(String),

    #[error(
        "mirror-resonant spacing: |sin(k1d*d)| = {value:.3e} <= {eps:.1e}; \
         the Bloch dispersion and tails are singular there"
    )]
    ResonantSpacing { value: f64, eps: f64 },

    #[error("operation requires the {expected} field model")]
    WrongFieldModel { expected: &'static str },

    #[error("eigensolver failed to converge: {0}")]
    EigNonConvergence(String),

    #[error("quadrature did not reach the requested tolerance: achieved {achieved:.3e}, requested {requested:.3e}")]
    QuadratureNonConvergence { achieved: f64, requested: f64 },

    #[error("Newton iteration failed for xi={xi} ({branch}): {reason}")]
    NewtonFailure {
        xi: usize,
        branch: &'static str,
        reason: String,
    },

    #[error("wavenumber {k:.6} is not on the N-site Bloch grid (2*pi*j/(N*d))")]
    OffGridWavenumber { k: f64 },

    #[error("k1d is not representable on the N-site momentum grid; k1d*N*d/(2*pi) = {0:.6} is not an integer")]
    UnrepresentableK1d(f64),

    #[error("constituent modes are parallel; the antisymmetric combination has zero norm")]
    ParallelConstituents,

    #[error("scaling fit needs at least 4 positive samples, got {0}")]
    InsufficientSamples(usize),

    #[error("nonpositive value {0:.3e} in log-log fit input")]
    NonpositiveSample(f64),

    #[error("pole proximity: |k -+ k1d| = {0:.3e} below tolerance")]
    PoleProximity(f64),

    #[error("xi = {xi} out of range; the asymptotic branch solutions require xi <= N/4 = {max}")]
    XiOutOfRange { xi: usize, max: usize },

    #[error("run configuration: {0}")]
    RunConfig(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("config file parse: {0}")]
    Toml(#[from] toml::de::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
