use serde::{Deserialize, Serialize};

/// Deterministic trial-division primality.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization with strictly increasing primes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn of(mut n: u64) -> Self {
        assert!(n >= 1, "factorization of zero");
        let mut pairs = Vec::new();
        let mut d = 2u64;
        while d.saturating_mul(d) <= n {
            if n.is_multiple_of(d) {
                let mut e = 0;
                while n.is_multiple_of(d) {
                    n /= d;
                    e += 1;
                }
                pairs.push((d, e));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if n > 1 {
            pairs.push((n, 1));
        }
        Factorization { pairs }
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// `Some((p, a))` when the factored integer is `p^a` with `a >= 1`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        match self.pairs.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }

    pub fn euler_phi(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product()
    }

    pub fn moebius(&self) -> i8 {
        if !self.is_squarefree() {
            0
        } else if self.pairs.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.pairs {
            let base = divs.clone();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                divs.extend(base.iter().map(|d| d * pk));
            }
        }
        divs.sort_unstable();
        divs
    }
}

pub fn euler_phi(n: u64) -> u64 {
    Factorization::of(n).euler_phi()
}

pub fn moebius(n: u64) -> i8 {
    Factorization::of(n).moebius()
}

pub fn divisors(n: u64) -> Vec<u64> {
    Factorization::of(n).divisors()
}

pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    Factorization::of(n).prime_power()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Index `n` of a cyclotomic polynomial with its factorization and degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloIndex {
    pub n: u64,
    pub factorization: Factorization,
    pub phi: u64,
}

impl CycloIndex {
    pub fn new(n: u64) -> Self {
        let factorization = Factorization::of(n);
        let phi = factorization.euler_phi();
        CycloIndex {
            n,
            factorization,
            phi,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(15), 8);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(97), 96);
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(15), 1);
    }

    #[test]
    fn totient_matches_count() {
        for n in 1..300u64 {
            let count = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), count, "n = {n}");
        }
    }

    #[test]
    fn moebius_sums_vanish() {
        for n in 2..=500u64 {
            let s: i64 = divisors(n).into_iter().map(|d| moebius(d) as i64).sum();
            assert_eq!(s, 0, "n = {n}");
        }
    }

    #[test]
    fn factorization_round_trip() {
        for n in 1..2000u64 {
            let f = Factorization::of(n);
            assert_eq!(f.value(), n);
            assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.pairs().iter().all(|&(p, e)| is_prime(p) && e >= 1));
        }
    }

    #[test]
    fn primes_and_powers() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        let idx = CycloIndex::new(105);
        assert_eq!(idx.phi, 48);
    }
}
