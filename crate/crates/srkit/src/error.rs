//! Library error taxonomy.
//!
//! Every variant carries a stable machine-readable code (`Error::code`) that
//! the CLI surfaces verbatim in error responses.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The operation is undefined on the real axis (e.g. the imaginary unit
    /// of a real quaternion).
    RealArgument,
    /// A quaternion expected to be a unit imaginary (J^2 = -1) is not.
    NotUnitImaginary,
    /// The zero function has no inverse / no zero set.
    ZeroFunction,
    /// Evaluation of a Laurent polynomial with negative powers at q = 0.
    PoleAtZero,
    /// Evaluation of a semiregular function at a pole.
    AtPole,
    /// The operation requires an ordinary polynomial (min_degree >= 0).
    NotPolynomial,
    /// A series gate failed (log outside its disk, multiplicative split
    /// outside its rho gate, or an iteration stalled).
    OutsideConvergence,
    /// The function is not in the required class (vectorial class membership,
    /// slice-preserving input, ...).
    NotInClass,
    /// Two nodes of a divisor/jet spec collide (two nonreal points on one
    /// sphere, duplicate nodes).
    ConflictingNodes,
    /// A zero node and a pole node of a divisor overlap.
    OverlappingZeroPole,
    /// An order prescription is invalid (odd spherical order, zero order,
    /// or a sign not allowed by the operation).
    InvalidOrder,
    /// The anchor point of a spherical jet does not lie on its sphere.
    AnchorOffSphere,
    /// A spherical jet was requested on a degenerate (radius 0) sphere.
    DegenerateSphere,
    /// Chain gluing data is not a consistent consecutive chain.
    IncompatibleChain,
    /// The multiplicative split input vanishes on the shared annulus.
    VanishingOnC,
    /// The exact backend cannot represent a required square root.
    IrrationalNorm,
    /// The operation is defined on the float backend only.
    UnsupportedBackend,
    /// An internal invariant that should be unreachable was violated.
    Internal(&'static str),
}

impl Error {
    /// Stable machine-readable code for CLI responses.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RealArgument => "RealArgument",
            Error::NotUnitImaginary => "NotUnitImaginary",
            Error::ZeroFunction => "ZeroFunction",
            Error::PoleAtZero => "PoleAtZero",
            Error::AtPole => "AtPole",
            Error::NotPolynomial => "NotPolynomial",
            Error::OutsideConvergence => "OutsideConvergence",
            Error::NotInClass => "NotInClass",
            Error::ConflictingNodes => "ConflictingNodes",
            Error::OverlappingZeroPole => "OverlappingZeroPole",
            Error::InvalidOrder => "InvalidOrder",
            Error::AnchorOffSphere => "AnchorOffSphere",
            Error::DegenerateSphere => "DegenerateSphere",
            Error::IncompatibleChain => "IncompatibleChain",
            Error::VanishingOnC => "VanishingOnC",
            Error::IrrationalNorm => "IrrationalNorm",
            Error::UnsupportedBackend => "UnsupportedBackend",
            Error::Internal(_) => "Internal",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RealArgument => write!(f, "operation undefined for real arguments"),
            Error::NotUnitImaginary => write!(f, "expected a unit imaginary quaternion"),
            Error::ZeroFunction => write!(f, "the zero function is not allowed here"),
            Error::PoleAtZero => write!(f, "Laurent polynomial has a pole at q = 0"),
            Error::AtPole => write!(f, "evaluation at a pole of a semiregular function"),
            Error::NotPolynomial => write!(f, "operation requires min_degree >= 0"),
            Error::OutsideConvergence => write!(f, "input outside the convergence gate"),
            Error::NotInClass => write!(f, "function not in the required class"),
            Error::ConflictingNodes => write!(f, "conflicting nodes in prescription"),
            Error::OverlappingZeroPole => write!(f, "a zero node overlaps a pole node"),
            Error::InvalidOrder => write!(f, "invalid order prescription"),
            Error::AnchorOffSphere => write!(f, "anchor point is not on the sphere"),
            Error::DegenerateSphere => write!(f, "sphere is degenerate (radius 0)"),
            Error::IncompatibleChain => write!(f, "gluing data is not a consistent chain"),
            Error::VanishingOnC => write!(f, "function vanishes on the shared annulus"),
            Error::IrrationalNorm => {
                write!(f, "exact backend cannot represent the required square root")
            }
            Error::UnsupportedBackend => write!(f, "operation requires the float backend"),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
