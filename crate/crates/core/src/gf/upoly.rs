//! Dense univariate polynomials over a finite field, used for irreducibility
//! testing and root finding.

use num_bigint::BigUint;

pub(crate) trait FieldOps {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

pub(crate) type Poly<E> = Vec<E>;

pub(crate) fn trim<F: FieldOps>(f: &F, p: &mut Poly<F::Elem>) {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
}

pub(crate) fn sub<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let mut out: Poly<F::Elem> = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => f.sub(&f.zero(), y),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(f, &mut out);
    out
}

pub(crate) fn mul<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, &mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem<F: FieldOps>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Poly<F::Elem>, Poly<F::Elem>) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let inv_lead = f.inv(&b[db]).expect("nonzero leading coefficient");
    let mut rem = a.to_vec();
    let mut quot = vec![f.zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = f.mul(&rem[i + db], &inv_lead);
        if f.is_zero(&c) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] = f.sub(&rem[i + j], &f.mul(&c, bj));
        }
        quot[i] = c;
    }
    rem.truncate(db);
    trim(f, &mut rem);
    trim(f, &mut quot);
    (quot, rem)
}

pub(crate) fn rem<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    divrem(f, a, b).1
}

pub(crate) fn mulmod<F: FieldOps>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
    m: &[F::Elem],
) -> Poly<F::Elem> {
    rem(f, &mul(f, a, b), m)
}

pub(crate) fn powmod<F: FieldOps>(
    f: &F,
    base: &[F::Elem],
    exp: &BigUint,
    m: &[F::Elem],
) -> Poly<F::Elem> {
    let mut result = rem(f, &[f.one()], m);
    let base = rem(f, base, m);
    for i in (0..exp.bits()).rev() {
        result = mulmod(f, &result, &result, m);
        if exp.bit(i) {
            result = mulmod(f, &result, &base, m);
        }
    }
    result
}

pub(crate) fn monic<F: FieldOps>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(lead) => {
            let inv = f.inv(lead).expect("nonzero leading coefficient");
            a.iter().map(|c| f.mul(c, &inv)).collect()
        }
    }
}

/// Monic gcd.
pub(crate) fn gcd<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(f, &mut x);
    trim(f, &mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = std::mem::replace(&mut y, r);
    }
    monic(f, &x)
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn invmod<F: FieldOps>(f: &F, a: &[F::Elem], m: &[F::Elem]) -> Option<Poly<F::Elem>> {
    let mut r0 = m.to_vec();
    let mut r1 = rem(f, a, m);
    let mut s0: Poly<F::Elem> = Vec::new();
    let mut s1: Poly<F::Elem> = vec![f.one()];
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = f.inv(&r0[0])?;
    let out: Poly<F::Elem> = s0.iter().map(|x| f.mul(x, &c)).collect();
    Some(rem(f, &out, m))
}

/// `X` as a polynomial.
pub(crate) fn x<F: FieldOps>(f: &F) -> Poly<F::Elem> {
    vec![f.zero(), f.one()]
}
