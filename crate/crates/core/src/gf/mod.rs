//! Finite fields `F_q` and `F_{q^n}` for prime `q`.
//!
//! Extension fields use the polynomial basis of the smallest monic
//! irreducible of degree `n` (coefficient vectors compared from the constant
//! term up), so construction is a pure function of `(q, n)`.

mod element;
mod field;
mod roots;
pub(crate) mod upoly;

pub use element::ExtFieldElement;
pub use field::{
    make_ext_field, make_ext_field_u64, ExtField, FieldDescriptor, PrimeField, MAX_FIELD_BITS,
};
pub use roots::roots_in;

use num_bigint::{BigInt, BigUint};

use crate::cyclo::{cyclotomic, PrimePair};
use crate::error::{Error, Result};
use crate::exactalg::IntPoly;

/// `U_k = (X^{pr} - 1) / Phi_k` for `k` in `{1, p, r, pr}`.
pub fn cofactor(pair: &PrimePair, k: u64) -> Result<IntPoly> {
    if ![1, pair.p(), pair.r(), pair.pr()].contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "k = {k} is not one of 1, {}, {}, {}",
            pair.p(),
            pair.r(),
            pair.pr()
        )));
    }
    let (quot, rem) = IntPoly::x_pow_minus_one(pair.pr() as usize).divrem_exact(&cyclotomic(k))?;
    debug_assert!(rem.is_zero());
    Ok(quot)
}

/// `U_k(q)`: raising to this power projects `F_{q^{pr}}^*` onto its subgroup
/// of order `Phi_k(q)`.
pub fn norm_exponent(q: &BigUint, pair: &PrimePair, k: u64) -> Result<BigUint> {
    let value = cofactor(pair, k)?.eval(&BigInt::from(q.clone()));
    Ok(value.to_biguint().expect("cofactor is positive at q >= 2"))
}

/// `Phi_k(q)` as an unsigned integer.
pub fn phi_at(k: u64, q: &BigUint) -> BigUint {
    cyclotomic(k)
        .eval(&BigInt::from(q.clone()))
        .to_biguint()
        .expect("Phi_k(q) > 0 for q >= 2")
}

/// Whether `x` lies in the subgroup of order `Phi_k(q)`.
pub fn torus_membership(x: &ExtFieldElement, k: u64) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    Ok(x.pow_u(&phi_at(k, x.field().q())).is_one())
}
