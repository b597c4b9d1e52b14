//! Exact integer and dense-polynomial arithmetic.

mod poly;
mod resultant;
mod scaled;
mod xgcd;

pub use poly::{add, divrem_exact, eval, mul, IntPoly};
pub use resultant::resultant;
pub use scaled::ScaledPoly;
pub use xgcd::{inverse_mod_poly, reduce_product, xgcd_rational};
