use std::fmt;
use std::sync::Arc;

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use super::upoly::{self, FieldOps};
use super::ExtFieldElement;
use crate::cyclo::{is_prime, Factorization};
use crate::error::{Error, Result};

/// Largest supported field, in bits of `q^n`.
pub const MAX_FIELD_BITS: u64 = 128;

/// The prime field `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: BigUint,
}

impl PrimeField {
    pub fn new(q: BigUint) -> Result<Self> {
        let prime = u64::try_from(&q).map(is_prime).unwrap_or(false);
        if !prime {
            return Err(Error::NotPrime(q.to_string()));
        }
        Ok(PrimeField { q })
    }

    pub fn modulus(&self) -> &BigUint {
        &self.q
    }

    pub fn reduce(&self, a: &BigUint) -> BigUint {
        a % &self.q
    }
}

impl FieldOps for PrimeField {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a + b) % &self.q
    }
    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            &self.q - (b - a)
        }
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.q
    }
    fn inv(&self, a: &BigUint) -> Option<BigUint> {
        if a.is_zero() {
            return None;
        }
        let q = num_bigint::BigInt::from(self.q.clone());
        let e = num_bigint::BigInt::from(a.clone()).extended_gcd(&q);
        e.gcd
            .is_one()
            .then(|| e.x.mod_floor(&q).to_biguint().expect("reduced"))
    }
}

pub(crate) struct ExtFieldInner {
    pub(crate) base: PrimeField,
    pub(crate) n: usize,
    /// Monic, `n + 1` residues, little-endian.
    pub(crate) modulus: Vec<BigUint>,
    /// `(j, -modulus[j] mod q)` for the nonzero low coefficients.
    reduction: Vec<(usize, BigUint)>,
    order: BigUint,
}

/// `F_{q^n}` in the polynomial basis of a fixed monic irreducible modulus.
///
/// Cheap to clone; equality is structural on `(q, n, modulus)`.
#[derive(Clone)]
pub struct ExtField(pub(crate) Arc<ExtFieldInner>);

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.n == other.0.n
                && self.0.base == other.0.base
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for ExtField {}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtField")
            .field("q", self.q())
            .field("n", &self.0.n)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

/// Serializable descriptor `(q, n, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldDescriptor {
    pub q: String,
    pub n: usize,
    pub modulus: Vec<String>,
}

impl ExtField {
    pub(crate) fn from_modulus(base: PrimeField, modulus: Vec<BigUint>) -> Self {
        let n = modulus.len() - 1;
        let q = base.modulus().clone();
        let reduction = modulus[..n]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, &q - c))
            .collect();
        let order = num_traits::pow(q, n);
        ExtField(Arc::new(ExtFieldInner {
            base,
            n,
            modulus,
            reduction,
            order,
        }))
    }

    pub fn base(&self) -> &PrimeField {
        &self.0.base
    }

    pub fn q(&self) -> &BigUint {
        self.0.base.modulus()
    }

    pub fn degree(&self) -> usize {
        self.0.n
    }

    pub fn modulus(&self) -> &[BigUint] {
        &self.0.modulus
    }

    /// `q^n`
    pub fn order(&self) -> &BigUint {
        &self.0.order
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            q: self.q().to_string(),
            n: self.degree(),
            modulus: self.modulus().iter().map(ToString::to_string).collect(),
        }
    }

    pub fn zero(&self) -> ExtFieldElement {
        ExtFieldElement::from_raw(self.clone(), vec![BigUint::zero(); self.0.n])
    }

    pub fn one(&self) -> ExtFieldElement {
        let mut c = vec![BigUint::zero(); self.0.n];
        c[0] = BigUint::one();
        ExtFieldElement::from_raw(self.clone(), c)
    }

    /// Residue class of `X`.
    pub fn generator(&self) -> ExtFieldElement {
        let raw = upoly::rem(self.base(), &upoly::x(self.base()), self.modulus());
        self.element_from_poly(raw)
    }

    /// Element with the given little-endian coordinates, reduced mod `q` and
    /// mod the field modulus when longer than `n`.
    pub fn element(&self, coeffs: &[BigUint]) -> ExtFieldElement {
        let reduced: Vec<BigUint> = coeffs.iter().map(|c| self.base().reduce(c)).collect();
        let mut trimmed = reduced;
        upoly::trim(self.base(), &mut trimmed);
        let raw = upoly::rem(self.base(), &trimmed, self.modulus());
        self.element_from_poly(raw)
    }

    pub fn element_u64(&self, coeffs: &[u64]) -> ExtFieldElement {
        let big: Vec<BigUint> = coeffs.iter().map(|&c| BigUint::from(c)).collect();
        self.element(&big)
    }

    pub fn constant(&self, c: &BigUint) -> ExtFieldElement {
        self.element(std::slice::from_ref(c))
    }

    pub(crate) fn element_from_poly(&self, mut raw: Vec<BigUint>) -> ExtFieldElement {
        raw.resize(self.0.n, BigUint::zero());
        ExtFieldElement::from_raw(self.clone(), raw)
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtFieldElement {
        let q = self.q();
        let c = (0..self.0.n).map(|_| rng.gen_biguint_below(q)).collect();
        ExtFieldElement::from_raw(self.clone(), c)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtFieldElement {
        loop {
            let x = self.random_element(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Product of two coordinate vectors reduced by the modulus.
    pub(crate) fn raw_mul(&self, a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
        let n = self.0.n;
        let q = self.q();
        let mut prod = vec![BigUint::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        for k in (n..2 * n - 1).rev() {
            let c = std::mem::take(&mut prod[k]) % q;
            if c.is_zero() {
                continue;
            }
            for (j, m) in &self.0.reduction {
                prod[k - n + j] += &c * m;
            }
        }
        prod.truncate(n);
        for c in prod.iter_mut() {
            *c %= q;
        }
        prod
    }

    pub(crate) fn raw_inv(&self, a: &[BigUint]) -> Option<Vec<BigUint>> {
        let mut poly = a.to_vec();
        upoly::trim(self.base(), &mut poly);
        let mut inv = upoly::invmod(self.base(), &poly, self.modulus())?;
        inv.resize(self.0.n, BigUint::zero());
        Some(inv)
    }
}

/// Elements of `F_{q^n}` as raw coordinate vectors, for polynomial
/// arithmetic over the extension.
impl FieldOps for ExtField {
    type Elem = Vec<BigUint>;

    fn zero(&self) -> Vec<BigUint> {
        vec![BigUint::zero(); self.0.n]
    }
    fn one(&self) -> Vec<BigUint> {
        let mut c = FieldOps::zero(self);
        c[0] = BigUint::one();
        c
    }
    fn is_zero(&self, a: &Vec<BigUint>) -> bool {
        a.iter().all(Zero::is_zero)
    }
    fn add(&self, a: &Vec<BigUint>, b: &Vec<BigUint>) -> Vec<BigUint> {
        a.iter()
            .zip(b)
            .map(|(x, y)| self.base().add(x, y))
            .collect()
    }
    fn sub(&self, a: &Vec<BigUint>, b: &Vec<BigUint>) -> Vec<BigUint> {
        a.iter()
            .zip(b)
            .map(|(x, y)| self.base().sub(x, y))
            .collect()
    }
    fn mul(&self, a: &Vec<BigUint>, b: &Vec<BigUint>) -> Vec<BigUint> {
        self.raw_mul(a, b)
    }
    fn inv(&self, a: &Vec<BigUint>) -> Option<Vec<BigUint>> {
        self.raw_inv(a)
    }
}

/// Rabin's test: `X^{q^n} = X mod f` and `gcd(X^{q^{n/l}} - X, f) = 1` for
/// every prime `l | n`.
pub(crate) fn is_irreducible(base: &PrimeField, f: &[BigUint]) -> bool {
    let n = f.len() - 1;
    if n == 1 {
        return true;
    }
    let q = base.modulus();
    let x = upoly::rem(base, &upoly::x(base), f);
    let mut frob = Vec::with_capacity(n);
    let mut cur = x.clone();
    for _ in 0..n {
        cur = upoly::powmod(base, &cur, q, f);
        frob.push(cur.clone());
    }
    if frob[n - 1] != x {
        return false;
    }
    Factorization::of(n as u64).pairs().iter().all(|&(l, _)| {
        let k = n / l as usize;
        let diff = upoly::sub(base, &frob[k - 1], &x);
        upoly::gcd(base, &diff, f).len() == 1
    })
}

/// Monic irreducible modulus of degree `n` that is smallest when coefficient
/// vectors are compared lexicographically starting from the constant term.
pub(crate) fn smallest_irreducible(base: &PrimeField, n: usize) -> Vec<BigUint> {
    let q = base.modulus();
    let mut low = vec![BigUint::zero(); n];
    if n > 1 {
        // a zero constant term makes X a factor
        low[0] = BigUint::one();
    }
    loop {
        let mut cand = low.clone();
        cand.push(BigUint::one());
        if (n == 1 || !low[0].is_zero()) && is_irreducible(base, &cand) {
            return cand;
        }
        // odometer: the last coordinate is least significant
        let mut i = n;
        loop {
            assert!(i > 0, "no irreducible polynomial found");
            i -= 1;
            low[i] += 1u32;
            if &low[i] < q {
                break;
            }
            low[i] = BigUint::zero();
        }
    }
}

/// Canonical `F_{q^n}`: a pure function of `(q, n)`.
pub fn make_ext_field(q: &BigUint, n: usize) -> Result<ExtField> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "extension degree must be >= 1".into(),
        ));
    }
    let base = PrimeField::new(q.clone())?;
    let bits = num_traits::pow(q.clone(), n).bits();
    if bits > MAX_FIELD_BITS {
        return Err(Error::FieldTooLarge {
            q: q.to_string(),
            n,
            max_bits: MAX_FIELD_BITS,
        });
    }
    let modulus = smallest_irreducible(&base, n);
    Ok(ExtField::from_modulus(base, modulus))
}

pub fn make_ext_field_u64(q: u64, n: usize) -> Result<ExtField> {
    make_ext_field(&BigUint::from(q), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&c| BigUint::from(c)).collect()
    }

    #[test]
    fn degree_one_modulus_is_x() {
        let f = make_ext_field_u64(7, 1).unwrap();
        assert_eq!(f.modulus(), big(&[0, 1]).as_slice());
    }

    #[test]
    fn quadratic_over_f2() {
        let f = make_ext_field_u64(2, 2).unwrap();
        assert_eq!(f.modulus(), big(&[1, 1, 1]).as_slice());
    }

    #[test]
    fn construction_is_deterministic() {
        let a = make_ext_field_u64(7, 15).unwrap();
        let b = make_ext_field_u64(7, 15).unwrap();
        assert!(!Arc::ptr_eq(&a.0, &b.0));
        assert_eq!(a, b);
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.modulus().len(), 16);
    }

    #[test]
    fn smallest_by_brute_force_over_f3() {
        // every monic cubic over F_3 without a root in F_3 is irreducible
        let base = PrimeField::new(BigUint::from(3u32)).unwrap();
        let mut first = None;
        'outer: for c0 in 0..3u64 {
            for c1 in 0..3u64 {
                for c2 in 0..3u64 {
                    let has_root =
                        (0..3u64).any(|x| (c0 + c1 * x + c2 * x * x + x * x * x) % 3 == 0);
                    if !has_root {
                        first = Some(big(&[c0, c1, c2, 1]));
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(smallest_irreducible(&base, 3), first.unwrap());
    }

    #[test]
    fn irreducibility_matches_root_count_for_quadratics() {
        let base = PrimeField::new(BigUint::from(11u32)).unwrap();
        for c0 in 0..11u64 {
            for c1 in 0..11u64 {
                let has_root = (0..11u64).any(|x| (c0 + c1 * x + x * x) % 11 == 0);
                assert_eq!(is_irreducible(&base, &big(&[c0, c1, 1])), !has_root);
            }
        }
    }

    #[test]
    fn rejects_composite_and_huge() {
        assert!(matches!(make_ext_field_u64(9, 2), Err(Error::NotPrime(_))));
        assert!(matches!(
            make_ext_field_u64(7, 0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            make_ext_field_u64(2, 129),
            Err(Error::FieldTooLarge { .. })
        ));
    }
}
