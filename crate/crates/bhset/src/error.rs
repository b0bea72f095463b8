use std::fmt;

/// Errors shared by every operation in the crate.
///
/// All element arithmetic is checked 128-bit arithmetic; anything that
/// would wrap is reported as [`Error::Overflow`] instead of producing a
/// wrong number. Enumeration and layer growth are guarded by caps and
/// surface as [`Error::ResourceLimit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Checked 128-bit arithmetic overflowed. `context` names the
    /// computation that failed, e.g. the size of the sum that wrapped.
    Overflow { context: String },
    /// A predicted enumeration or layer size exceeded the configured cap.
    ResourceLimit { required: u128, cap: u128 },
    /// The sum length h must be at least 1.
    ZeroOrder,
    /// Set elements must be strictly increasing; `position` is the index
    /// of the first offending element.
    NotIncreasing { position: usize },
    /// No closed form is implemented for this element index.
    UnknownFormula { k: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow { context } => {
                write!(f, "128-bit overflow computing {context}")
            }
            Error::ResourceLimit { required, cap } => {
                write!(
                    f,
                    "enumeration of {required} values exceeds the cap of {cap}"
                )
            }
            Error::ZeroOrder => write!(f, "sum length h must be at least 1"),
            Error::NotIncreasing { position } => {
                write!(
                    f,
                    "set elements must be strictly increasing (violation at index {position})"
                )
            }
            Error::UnknownFormula { k } => {
                write!(
                    f,
                    "no closed form is known for element index k = {k} (supported: 1..=4)"
                )
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

/// Checked sum of two values inside an h-fold sum. `terms` is the number
/// of elements whose combined sum is being formed, for diagnostics.
pub(crate) fn checked_sum(a: u128, b: u128, terms: u32) -> Result<u128> {
    a.checked_add(b).ok_or_else(|| Error::Overflow {
        context: format!("a sum of {terms} elements"),
    })
}
