//! Modular inverses of cyclotomic polynomials with indices dividing `pr`.
//!
//! Every closed form here is computed without an extended gcd, so it can be
//! compared against [`inverse_mod`], which always goes through one.

mod report;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use crate::cyclo::PrimePair;
pub use report::{verify_theorem1, CaseId, InverseRecord, InverseReport};

use crate::cyclo::{cyclotomic, is_prime};
use crate::error::{Error, Result};
use crate::exactalg::{xgcd_rational, IntPoly, ScaledPoly};

/// Canonical `Phi_m^{-1} mod Phi_n` over Q, with degree below `phi(n)`.
pub fn inverse_mod(m: u64, n: u64) -> Result<ScaledPoly> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "cyclotomic indices must be positive".into(),
        ));
    }
    xgcd_rational(&cyclotomic(m), &cyclotomic(n)).map(|(u, _)| u)
}

/// Which of the two inverses between `Phi_p` and `Phi_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `Phi_p^{-1} mod Phi_1`
    Forward,
    /// `Phi_1^{-1} mod Phi_p`
    Reverse,
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.to_string()))
    }
}

/// `1/p`, or `-(1/p)(X^{p-2} + 2X^{p-3} + ... + (p-1))`.
pub fn closed_form_i(p: u64, direction: Direction) -> Result<ScaledPoly> {
    require_prime(p)?;
    let den = BigInt::from(p);
    match direction {
        Direction::Forward => ScaledPoly::new(IntPoly::one(), den),
        Direction::Reverse => {
            let num = (0..p - 1).map(|i| -BigInt::from(p - 1 - i)).collect();
            ScaledPoly::new(IntPoly::new(num), den)
        }
    }
}

/// `(Phi_pr^{-1} mod Phi_1, Phi_1^{-1} mod Phi_pr)`.
///
/// The first is the constant 1. The second solves `(X-1) V = 1 - Phi_pr`,
/// whose solution is the shifted prefix sum `v_k = a_0 + ... + a_k - 1` of the
/// coefficients of `Phi_pr`.
pub fn closed_form_ii(pair: &PrimePair) -> (ScaledPoly, ScaledPoly) {
    let phi = cyclotomic(pair.pr());
    let degree = pair.phi_pr() as usize;
    let mut acc = BigInt::zero();
    let coeffs = (0..degree)
        .map(|k| {
            acc += phi.coeff(k);
            &acc - 1
        })
        .collect();
    (
        ScaledPoly::from_int(IntPoly::one()),
        ScaledPoly::from_int(IntPoly::new(coeffs)),
    )
}

/// `Phi_pr^{-1} mod Phi_p = (1/r)(1 + X + ... + X^d)` with `d = (r - 1) mod p`.
pub fn closed_form_iii_forward(pair: &PrimePair) -> ScaledPoly {
    let d = ((pair.r() - 1) % pair.p()) as usize;
    ScaledPoly::new(IntPoly::geometric(1, d + 1), BigInt::from(pair.r()))
        .expect("nonzero denominator")
}

/// `Phi_p^{-1} mod Phi_pr`, obtained as `(1 - Phi_pr U) / Phi_p` where `U` is
/// [`closed_form_iii_forward`]. The result is returned over the denominator `r`.
pub fn closed_form_iii_reverse(pair: &PrimePair) -> ScaledPoly {
    let r = BigInt::from(pair.r());
    let d = ((pair.r() - 1) % pair.p()) as usize;
    let numerator =
        &IntPoly::constant(r.clone()) - &(&*cyclotomic(pair.pr()) * &IntPoly::geometric(1, d + 1));
    let (quot, rem) = numerator
        .divrem_exact(&cyclotomic(pair.p()))
        .expect("cyclotomic polynomials are monic");
    debug_assert!(rem.is_zero(), "Phi_p must divide r - Phi_pr * S");
    ScaledPoly::new(quot, r).expect("nonzero denominator")
}

/// `Phi_p^{-1} mod Phi_r` for distinct primes.
///
/// In `Q[X]/Phi_r` the element `Y = X^p` satisfies `X = Y^{p'}` with
/// `p' = p^{-1} mod r`, so `Phi_p^{-1} = (X - 1)/(Y - 1) = 1 + Y + ... + Y^{p'-1}`.
/// Reducing that sum modulo `Phi_r` gives an integer polynomial.
pub fn closed_form_iv(p: u64, r: u64) -> Result<IntPoly> {
    require_prime(p)?;
    require_prime(r)?;
    if p == r {
        return Err(Error::NotCoprime((p - 1) as usize));
    }
    let p_inv = (1..r)
        .find(|k| (p * k) % r == 1)
        .expect("p is a unit mod r");
    let mut sum = vec![BigInt::zero(); r as usize];
    for j in 0..p_inv {
        sum[((p * j) % r) as usize] += 1;
    }
    IntPoly::new(sum).rem_monic(&cyclotomic(r))
}

/// `(X - 1) * closed_form_iv(p, r)`, of degree below `r`.
pub fn tilde_u(p: u64, r: u64) -> Result<IntPoly> {
    let u = closed_form_iv(p, r)?;
    Ok(&u * &cyclotomic(1))
}

pub fn coefficients_in_unit_set(poly: &IntPoly) -> bool {
    poly.coeffs().iter().all(|c| c.magnitude() <= &One::one())
}

/// Nonzero coefficients, read in index order, strictly alternate in sign.
pub fn signs_alternate(poly: &IntPoly) -> bool {
    let signs: Vec<num_bigint::Sign> = poly
        .coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(BigInt::sign)
        .collect();
    signs.windows(2).all(|w| w[0] != w[1])
}

/// True when `Phi_m * u` reduces to the constant 1 modulo `Phi_n`.
pub fn is_inverse(u: &ScaledPoly, m: u64, n: u64) -> bool {
    let prod = u.num() * &cyclotomic(m);
    match prod.rem_monic(&cyclotomic(n)) {
        Ok(rem) => rem == IntPoly::constant(u.den().clone()),
        Err(_) => false,
    }
}
