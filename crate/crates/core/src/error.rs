use std::fmt;

/// Errors shared by every module in the crate.
///
/// `Absent` outcomes (an inverse that provably does not exist) are *not*
/// errors; they are modeled by [`crate::Outcome`]. Errors mean the question
/// itself was malformed or an internal certificate failed to validate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in different rings.
    RingMismatch { left: String, right: String },
    /// A two-sided unit inverse was requested for a non-unit.
    NotAUnit { element: String },
    /// An element was required to be (von Neumann) regular and is not.
    NotRegular { element: String },
    /// Exhaustive enumeration was requested on an infinite ring.
    NotFinite { ring: String },
    /// `inverse_apply` on a map that is not a bijection.
    NotBijective,
    /// An operation demanded a bijective centralizer and the map is not one.
    NotBijectiveCentralizer,
    /// The caller-supplied identity that licenses a construction does not hold.
    PreconditionFailed(String),
    /// A constructed inverse failed its own defining equations. Indicates a
    /// bug in this crate, never a property of the input.
    InternalFormulaMismatch { operation: &'static str, detail: String },
    /// Malformed ring spec or element literal.
    Parse(String),
    /// Ring parameters or matrix shapes that do not fit the ring.
    InvalidShape(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch { left, right } => {
                write!(f, "ring mismatch: {left} vs {right}")
            }
            Error::NotAUnit { element } => write!(f, "{element} is not a unit"),
            Error::NotRegular { element } => write!(f, "{element} is not regular"),
            Error::NotFinite { ring } => {
                write!(f, "{ring} is not finite; exhaustive enumeration impossible")
            }
            Error::NotBijective => write!(f, "map is not bijective"),
            Error::NotBijectiveCentralizer => {
                write!(f, "map is not a bijective centralizer")
            }
            Error::PreconditionFailed(what) => write!(f, "precondition failed: {what}"),
            Error::InternalFormulaMismatch { operation, detail } => {
                write!(f, "internal formula mismatch in {operation}: {detail}")
            }
            Error::Parse(what) => write!(f, "parse error: {what}"),
            Error::InvalidShape(what) => write!(f, "invalid shape: {what}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

/// Why a requested generalized inverse does not exist.
///
/// Carried by [`crate::Outcome::Absent`]; the distinctions matter to the law
/// suite, which must tell a failed existence criterion apart from inputs the
/// theory never covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbsentReason {
    /// The alignment element d is not regular, so the criterion does not apply.
    NotRegularD,
    /// The element itself is not regular.
    NotRegular,
    /// The unit u in the existence criterion is not invertible.
    UnitCriterionFailed,
    /// No witness x with b = x*d (or b = d*x) exists.
    NoWitness,
    /// Exhaustive search over the allowed witnesses found no sided inverse.
    NoSidedInverse,
    /// The power scan finished without the criterion firing.
    ScanExhausted,
}

impl AbsentReason {
    pub fn as_str(self) -> &'static str {
        match self {
            AbsentReason::NotRegularD => "not-regular-d",
            AbsentReason::NotRegular => "not-regular",
            AbsentReason::UnitCriterionFailed => "unit-criterion-failed",
            AbsentReason::NoWitness => "no-witness",
            AbsentReason::NoSidedInverse => "no-sided-inverse",
            AbsentReason::ScanExhausted => "scan-exhausted",
        }
    }
}

impl fmt::Display for AbsentReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of a computation whose answer may provably not exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    Absent(AbsentReason),
}

impl<T> Outcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            Outcome::Absent(_) => None,
        }
    }

    pub fn as_found(&self) -> Option<&T> {
        match self {
            Outcome::Found(t) => Some(t),
            Outcome::Absent(_) => None,
        }
    }

    pub fn absent_reason(&self) -> Option<AbsentReason> {
        match self {
            Outcome::Found(_) => None,
            Outcome::Absent(r) => Some(*r),
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::Absent(r) => Outcome::Absent(r),
        }
    }
}
