//! Exact arithmetic on monomial ideals.
//!
//! Everything here is `no_std` with `alloc`; exponents are arbitrary
//! precision, and every operation returns ideals in canonical form (the
//! minimal generating set in lexicographic order), so ideal equality is
//! plain structural equality.

#![no_std]

extern crate alloc;

pub mod artinian;
pub mod bounds;
pub mod error;
pub mod exponent;
pub mod fiber;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod planar;

pub use bounds::Check;
pub use error::{CoreError, Result};
pub use exponent::Exponent;
pub use ideal::{divides, minimalize, MonomialIdeal};
pub use monomial::Monomial;
pub use planar::Staircase;
