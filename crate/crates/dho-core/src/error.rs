use core::fmt;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by constructors and grid operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `omega` must be strictly positive.
    NonPositiveFrequency { omega: f64 },
    /// `alpha >= omega`: overdamped and critically damped regimes have no
    /// real reduced frequency and are out of scope.
    Overdamped { omega: f64, alpha: f64 },
    /// Friction coefficient must be non-negative.
    NegativeFriction { alpha: f64 },
    /// Grid construction rejected the requested geometry.
    BadGrid { reason: &'static str },
    /// Two wavefunctions do not share the same grid.
    GridMismatch,
    /// Two wavefunctions do not share the same time label.
    TimeMismatch { a: f64, b: f64 },
    /// A non-negligible amplitude sits at the grid edge, so a rescaling
    /// (dilation) would lose probability; the caller must widen the grid.
    GridTooNarrow { edge_amplitude: f64 },
    /// Requested truncation leaves too much weight outside the Fock basis.
    TruncationTail { tail: f64, threshold: f64 },
    /// The asymptotic pseudostationary form is undefined at n = 0.
    AsymptoticOrderZero,
    /// The windowed residual check needs a genuinely asymptotic order.
    AsymptoticRegimeTooSmall { n: usize, min: usize },
    /// Fock-space objects built over different oscillator parameters.
    BasisMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveFrequency { omega } => {
                write!(f, "frequency must be positive, got omega = {omega}")
            }
            Error::Overdamped { omega, alpha } => write!(
                f,
                "underdamped regime required (alpha < omega), got alpha = {alpha}, omega = {omega}"
            ),
            Error::NegativeFriction { alpha } => {
                write!(f, "friction must be non-negative, got alpha = {alpha}")
            }
            Error::BadGrid { reason } => write!(f, "invalid grid: {reason}"),
            Error::GridMismatch => write!(f, "wavefunctions live on different grids"),
            Error::TimeMismatch { a, b } => {
                write!(f, "wavefunctions carry different time labels: {a} vs {b}")
            }
            Error::GridTooNarrow { edge_amplitude } => write!(
                f,
                "grid too narrow for rescaling: edge amplitude {edge_amplitude:.3e} is not negligible"
            ),
            Error::TruncationTail { tail, threshold } => write!(
                f,
                "Fock truncation leaves tail {tail:.3e} above threshold {threshold:.3e}"
            ),
            Error::AsymptoticOrderZero => {
                write!(f, "asymptotic pseudostationary form is undefined for n = 0")
            }
            Error::AsymptoticRegimeTooSmall { n, min } => {
                write!(f, "order {n} is below the asymptotic regime (need n >= {min})")
            }
            Error::BasisMismatch => write!(f, "oscillator parameters of the bases differ"),
        }
    }
}

impl core::error::Error for Error {}
