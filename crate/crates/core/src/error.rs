use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the operation's admissible region.
    Domain(&'static str),
    /// The gamma function was asked for a value at a pole.
    Pole(f64),
    /// The unscaled value over- or underflows an `f64`; use the scaled variant.
    Range(&'static str),
    /// Adaptive quadrature ran out of subdivisions before meeting the tolerance.
    Accuracy { estimate: f64, abs_err: f64 },
    /// Repeated-integral depth above the supported maximum.
    UnsupportedDepth(u32),
    /// A bracketing root search found no sign change.
    NoBracket,
    /// A grid value is outside the validity domain of its inequality.
    Grid(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Pole(a) => write!(f, "gamma function pole at {a}"),
            Error::Range(what) => write!(f, "{what} is outside the f64 range; use the scaled variant"),
            Error::Accuracy { estimate, abs_err } => write!(
                f,
                "quadrature did not converge (best estimate {estimate:e}, error {abs_err:e})"
            ),
            Error::UnsupportedDepth(n) => write!(f, "repeated-integral depth {n} exceeds 6"),
            Error::NoBracket => write!(f, "no sign change found while bracketing a root"),
            Error::Grid(msg) => write!(f, "invalid grid: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
