//! Exact arithmetic around cyclotomic polynomials: construction, resultants,
//! closed-form modular inverses, and the subgroup decomposition of
//! `F_{q^{pr}}^*` used by torus-based compression.

pub mod cyclo;
pub mod error;
pub mod exactalg;
pub mod gf;
pub mod modinv;
pub mod torus;

pub use error::{Error, Result};
pub use exactalg::{IntPoly, ScaledPoly};
