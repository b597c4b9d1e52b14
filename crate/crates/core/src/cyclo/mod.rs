//! Cyclotomic polynomials and the number theory around their resultants.

mod arith;
mod pair;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub use arith::{
    divisors, euler_phi, gcd, is_prime, moebius, prime_power, CycloIndex, Factorization,
};
pub use pair::PrimePair;

use crate::error::{Error, Result};
use crate::exactalg::IntPoly;

type Memo = RwLock<HashMap<u64, Arc<IntPoly>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The n-th cyclotomic polynomial.
///
/// Built by dividing `X^n - 1` by `Phi_d` for every proper divisor `d`.
/// Results are memoized process-wide; entries are inserted only once complete.
///
/// # Panics
/// If `n == 0`.
pub fn cyclotomic(n: u64) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = memo().read().expect("memo poisoned").get(&n) {
        return Arc::clone(p);
    }
    let mut poly = IntPoly::x_pow_minus_one(n as usize);
    for d in divisors(n) {
        if d == n {
            break;
        }
        let (q, r) = poly
            .divrem_exact(&cyclotomic(d))
            .expect("cyclotomic polynomials are monic");
        debug_assert!(r.is_zero());
        poly = q;
    }
    let poly = Arc::new(poly);
    let mut guard = memo().write().expect("memo poisoned");
    Arc::clone(guard.entry(n).or_insert(poly))
}

/// `Phi_pr` assembled from the two-product expression driven by the split
/// `(p-1)(r-1) = s p + t r`.
pub fn lam_leung_phi_pr(pair: &PrimePair) -> IntPoly {
    let (p, r) = (pair.p() as usize, pair.r() as usize);
    let (s, t) = (pair.s() as usize, pair.t() as usize);
    let head = &IntPoly::geometric(p, s + 1) * &IntPoly::geometric(r, t + 1);
    // (sum_{i=s+1}^{r-1} X^{ip}) (sum_{j=t+1}^{p-1} X^{jr}); lowest exponent is pr + 1
    let tail = &IntPoly::geometric(p, r - 1 - s).shift((s + 1) * p)
        * &IntPoly::geometric(r, p - 1 - t).shift((t + 1) * r);
    debug_assert!(tail.coeffs()[..=p * r].iter().all(Zero::is_zero));
    let tail = IntPoly::new(tail.coeffs()[p * r..].to_vec());
    &head - &tail
}

fn require_ordered(m: u64, n: u64) -> Result<()> {
    if n == 0 || m <= n {
        return Err(Error::InvalidArgument(format!(
            "expected m > n >= 1, got m = {m}, n = {n}"
        )));
    }
    Ok(())
}

/// Closed-form `|Res(Phi_m, Phi_n)|` for `m > n >= 1`.
///
/// For `n = 1` this is `p` when `m = p^a` and `1` otherwise. For `n > 1` the
/// product runs over divisors `d | n` with `m / gcd(m, d) = p^a`, each
/// contributing `p^{mu(n/d) phi(m) / phi(p^a)}`. Exponents are accumulated
/// per prime as exact rationals and must total a nonnegative integer.
pub fn resultant_apostol(m: u64, n: u64) -> Result<BigInt> {
    require_ordered(m, n)?;
    if n == 1 {
        return Ok(prime_power(m).map_or_else(BigInt::one, |(p, _)| BigInt::from(p)));
    }
    let phi_m = euler_phi(m) as i64;
    let mut exponents: BTreeMap<u64, Ratio<i64>> = BTreeMap::new();
    for d in divisors(n) {
        let Some((p, a)) = prime_power(m / gcd(m, d)) else {
            continue;
        };
        let mu = moebius(n / d) as i64;
        if mu == 0 {
            continue;
        }
        let phi_pa = (p.pow(a - 1) * (p - 1)) as i64;
        *exponents.entry(p).or_insert_with(Ratio::zero) += Ratio::new(mu * phi_m, phi_pa);
    }
    let mut value = BigInt::one();
    for (p, e) in exponents {
        if !e.is_integer() || e < Ratio::zero() {
            return Err(Error::NotIntegral(format!(
                "exponent of {p} in Res(Phi_{m}, Phi_{n}) is {e}"
            )));
        }
        value *= num_traits::pow(BigInt::from(p), e.to_integer() as usize);
    }
    Ok(value)
}

/// Whether `Res(Phi_m, Phi_n) != 1`, i.e. `m = n p^a` for a prime `p`, `a >= 1`.
pub fn lemma1_nontrivial(m: u64, n: u64) -> Result<bool> {
    require_ordered(m, n)?;
    Ok(m.is_multiple_of(n) && prime_power(m / n).is_some())
}

/// Sufficient condition for `gcd(Phi_m(q), Phi_n(q)) = 1` at every integer `q`.
///
/// The coprimality statement is commonly phrased as "m does not divide n",
/// which is vacuous under `m > n`; the condition actually needed is that
/// `m / n` is not a prime power, and that is what this returns.
pub fn coprime_evaluations(m: u64, n: u64) -> Result<bool> {
    lemma1_nontrivial(m, n).map(|nontrivial| !nontrivial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::resultant;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), p(&[-1, 1]));
        assert_eq!(*cyclotomic(2), p(&[1, 1]));
        assert_eq!(*cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(*cyclotomic(15), p(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
    }

    #[test]
    fn phi_105_has_minus_two() {
        let phi = cyclotomic(105);
        assert_eq!(phi.degree(), Some(48));
        assert_eq!(phi.coeff(7), BigInt::from(-2));
        assert_eq!(phi.coeff(41), BigInt::from(-2));
        let minus_two: Vec<usize> = (0..=48)
            .filter(|&i| phi.coeff(i) == BigInt::from(-2))
            .collect();
        assert_eq!(minus_two, [7, 41]);
    }

    #[test]
    fn product_over_divisors() {
        for n in 1..=200u64 {
            let prod: IntPoly = divisors(n)
                .into_iter()
                .map(|d| (*cyclotomic(d)).clone())
                .product();
            assert_eq!(prod, IntPoly::x_pow_minus_one(n as usize), "n = {n}");
            assert_eq!(cyclotomic(n).degree(), Some(euler_phi(n) as usize));
        }
    }

    #[test]
    fn lam_leung_small() {
        let pair = PrimePair::new(3, 5).unwrap();
        assert_eq!((pair.s(), pair.t()), (1, 1));
        assert_eq!(lam_leung_phi_pr(&pair), *cyclotomic(15));
        let pair = PrimePair::new(2, 3).unwrap();
        assert_eq!((pair.s(), pair.t()), (1, 0));
        assert_eq!(lam_leung_phi_pr(&pair), *cyclotomic(6));
    }

    #[test]
    fn apostol_examples() {
        assert_eq!(resultant_apostol(9, 1).unwrap(), BigInt::from(3));
        assert_eq!(resultant_apostol(6, 1).unwrap(), BigInt::from(1));
        assert_eq!(resultant_apostol(6, 3).unwrap(), BigInt::from(4));
        assert_eq!(resultant_apostol(15, 3).unwrap(), BigInt::from(25));
        assert!(resultant_apostol(3, 3).is_err());
        assert!(resultant_apostol(2, 5).is_err());
    }

    #[test]
    fn lemma1_examples() {
        assert!(lemma1_nontrivial(6, 3).unwrap());
        assert!(lemma1_nontrivial(15, 3).unwrap());
        assert_ne!(resultant(&cyclotomic(15), &cyclotomic(3)), BigInt::one());
        assert!(!lemma1_nontrivial(15, 1).unwrap());
        assert!(!lemma1_nontrivial(5, 3).unwrap());
        assert!(lemma1_nontrivial(4, 2).unwrap());
        assert!(!lemma1_nontrivial(12, 2).unwrap());
    }

    #[test]
    fn coprime_evaluation_examples() {
        assert!(coprime_evaluations(15, 1).unwrap());
        let (phi15, phi1) = (cyclotomic(15), cyclotomic(1));
        for q in 2..=100i64 {
            let q = BigInt::from(q);
            let g = num_integer::Integer::gcd(&phi15.eval(&q), &phi1.eval(&q));
            assert!(g.is_one(), "q = {q}");
        }
        assert!(!coprime_evaluations(3, 1).unwrap());
        let q = BigInt::from(4);
        let g = num_integer::Integer::gcd(&cyclotomic(3).eval(&q), &cyclotomic(1).eval(&q));
        assert_eq!(g, BigInt::from(3));
        assert!(coprime_evaluations(5, 3).unwrap());
    }
}
