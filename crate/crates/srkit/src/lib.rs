//! srkit: computer algebra for quaternionic slice-regular functions.
//!
//! Slice-regular functions at desk scale are carried by Laurent polynomials
//! q^n a_n with right quaternion coefficients. The crate implements their
//! *-algebra (products, conjugates, symmetrization, inverses), the 4x4 and
//! 2x2 matrix representations with exp*/log*, zero-set computation and
//! builders for prescribed zeros and divisors, Taylor/spherical jets with
//! interpolation, and additive/multiplicative Cartan splitting on concentric
//! annuli.
//!
//! Every operation is generic over a [`scalar::Scalar`] backend: exact
//! rationals ([`scalar::Rat`]) for algebraic identities, `f64` for the
//! transcendental layer.
//!
//! ```
//! use srkit::{QPoly, Quaternion, Rat, ZeroRecord};
//!
//! // (q - i) * (q - j) = q^2 + q(-i - j) + k, with coefficients on the right
//! type P = QPoly<Rat>;
//! let f = P::linear(&Quaternion::i()).star_mul(&P::linear(&Quaternion::j()));
//! assert_eq!(f.coeff(0), Quaternion::k());
//!
//! // its symmetrization is the real polynomial (q^2 + 1)^2 ...
//! let s = f.symmetrization();
//! assert!(s.is_slice_preserving());
//!
//! // ... and its only zero is the point i, carrying multiplicity 2
//! assert_eq!(
//!     srkit::zeros::zero_set(&f).unwrap(),
//!     vec![ZeroRecord::IsolatedPoint {
//!         location: Quaternion::i(),
//!         multiplicity: 2,
//!     }]
//! );
//! ```

pub mod cousin;
pub mod error;
pub mod jets;
pub mod json;
pub mod matrep;
pub mod quat;
pub mod sampling;
pub mod scalar;
pub mod starpoly;
pub mod zeros;

mod rpoly;

pub use error::{Error, Result};
pub use quat::{Quaternion, SliceCoords, Sphere};
pub use scalar::{Rat, Scalar};
pub use starpoly::{QPoly, StemValue, VectorClassTag};
pub use zeros::{Divisor, DivisorEntry, Node, SemiRegularFn, ZeroRecord};
