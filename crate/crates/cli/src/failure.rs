use std::fmt;

use shapeinv_core::Error;

/// Why a command stopped. Exit status 1 for failed checks and I/O, 2 for
/// invalid input.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Checks(usize),
    Io(String),
    Core(Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Checks(_) | Failure::Io(_) => 1,
            Failure::Core(e) => {
                if is_invalid_input(e) {
                    2
                } else {
                    1
                }
            }
        }
    }
}

/// Errors caused by the parameters rather than by the numerics.
fn is_invalid_input(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidGrid(_)
            | Error::InvalidConfig(_)
            | Error::SingularRatio
            | Error::ImaginaryB { .. }
            | Error::BesselRegime { .. }
            | Error::InvalidParameter(_)
            | Error::NonIntegralEll(_)
            | Error::Dimension(_)
            | Error::NodeAtYZero(_)
    )
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) | Failure::Io(msg) => f.write_str(msg),
            Failure::Checks(n) => write!(f, "{n} check(s) failed"),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}
