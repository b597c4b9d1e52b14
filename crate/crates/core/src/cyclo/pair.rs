use serde::{Deserialize, Serialize};

use super::is_prime;
use crate::error::{Error, Result};

/// Ordered pair of distinct primes with the split `(p-1)(r-1) = s p + t r`,
/// `0 <= s <= r-2`, `0 <= t <= p-2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimePair {
    p: u64,
    r: u64,
    phi_pr: u64,
    s: u64,
    t: u64,
}

impl PrimePair {
    pub fn new(p: u64, r: u64) -> Result<Self> {
        for x in [p, r] {
            if !is_prime(x) {
                return Err(Error::NotPrime(x.to_string()));
            }
        }
        if p == r {
            return Err(Error::InvalidArgument(format!(
                "primes must be distinct, got p = r = {p}"
            )));
        }
        let phi_pr = (p - 1) * (r - 1);
        // the scan succeeds for every pair of distinct primes; failing it
        // would mean the split does not exist
        let (s, t) = (0..=r.saturating_sub(2))
            .filter_map(|s| {
                let rest = phi_pr.checked_sub(s * p)?;
                (rest % r == 0 && rest / r <= p - 2).then_some((s, rest / r))
            })
            .next()
            .ok_or_else(|| {
                Error::InvalidArgument(format!("no split of phi({}) for ({p}, {r})", p * r))
            })?;
        Ok(PrimePair { p, r, phi_pr, s, t })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn pr(&self) -> u64 {
        self.p * self.r
    }

    pub fn phi_pr(&self) -> u64 {
        self.phi_pr
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn swapped(&self) -> PrimePair {
        PrimePair::new(self.r, self.p).expect("swap of a valid pair")
    }

    /// All ordered pairs of distinct primes not exceeding `bound`.
    pub fn all_up_to(bound: u64) -> Vec<PrimePair> {
        let primes: Vec<u64> = (2..=bound).filter(|&n| is_prime(n)).collect();
        let mut out = Vec::new();
        for &p in &primes {
            for &r in &primes {
                if p != r {
                    out.push(PrimePair::new(p, r).expect("distinct primes"));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_is_unique_and_in_range() {
        for pair in PrimePair::all_up_to(61) {
            let (p, r) = (pair.p(), pair.r());
            assert_eq!(pair.s() * p + pair.t() * r, pair.phi_pr());
            let count = (0..=r - 2)
                .filter(|&s| {
                    let rest = pair.phi_pr() as i64 - (s * p) as i64;
                    rest >= 0 && (rest as u64).is_multiple_of(r) && rest as u64 / r <= p - 2
                })
                .count();
            assert_eq!(count, 1, "({p}, {r})");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(PrimePair::new(4, 5), Err(Error::NotPrime(_))));
        assert!(matches!(
            PrimePair::new(5, 5),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(PrimePair::new(1, 3), Err(Error::NotPrime(_))));
    }

    #[test]
    fn enumerates_ordered_pairs() {
        assert_eq!(PrimePair::all_up_to(31).len(), 110);
        assert_eq!(PrimePair::all_up_to(5).len(), 6);
    }
}
