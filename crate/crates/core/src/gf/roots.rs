//! Root finding over `F_{q^n}` by equal-degree splitting.

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::upoly::{self, FieldOps, Poly};
use super::{ExtField, ExtFieldElement};

type Coords = Vec<BigUint>;

/// All roots in `field` of a polynomial with coefficients in the prime field,
/// sorted in canonical order. Repeated roots are reported once.
pub fn roots_in(field: &ExtField, f: &[BigUint]) -> Vec<ExtFieldElement> {
    let mut lifted: Poly<Coords> = f
        .iter()
        .map(|c| field.constant(c).coeffs().to_vec())
        .collect();
    upoly::trim(field, &mut lifted);
    if lifted.len() < 2 {
        return Vec::new();
    }
    let lifted = upoly::monic(field, &lifted);
    // restrict to the product of distinct linear factors
    let x = upoly::x(field);
    let xq = upoly::powmod(field, &x, field.order(), &lifted);
    let split = upoly::gcd(field, &upoly::sub(field, &xq, &x), &lifted);

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    split_linear(field, split, &mut rng, &mut out);
    let mut roots: Vec<ExtFieldElement> = out
        .into_iter()
        .map(|c| field.element_from_poly(c))
        .collect();
    roots.sort_by(|a, b| a.cmp_canonical(b));
    roots
}

fn split_linear(field: &ExtField, g: Poly<Coords>, rng: &mut ChaCha8Rng, out: &mut Vec<Coords>) {
    match g.len() {
        0 | 1 => {}
        2 => {
            // monic X + c
            out.push(FieldOps::sub(field, &field.zero().coeffs().to_vec(), &g[0]));
        }
        _ => loop {
            let a = field.random_element(rng).coeffs().to_vec();
            let h = splitter(field, &a, &g);
            let d = upoly::gcd(field, &h, &g);
            if d.len() > 1 && d.len() < g.len() {
                let (other, _) = upoly::divrem(field, &g, &d);
                split_linear(field, d, rng, out);
                split_linear(field, other, rng, out);
                return;
            }
        },
    }
}

/// A polynomial whose gcd with `g` is a random nontrivial factor with
/// probability about one half.
fn splitter(field: &ExtField, a: &Coords, g: &[Coords]) -> Poly<Coords> {
    let one = FieldOps::one(field);
    if field.q() == &BigUint::from(2u32) {
        // absolute trace of a*X; shifting by a constant would not help here
        let mut term = upoly::rem(field, &[FieldOps::zero(field), a.clone()], g);
        let mut acc = term.clone();
        for _ in 1..field.degree() {
            term = upoly::mulmod(field, &term, &term, g);
            acc = add(field, &acc, &term);
        }
        acc
    } else {
        let half = (field.order() - BigUint::one()) >> 1u32;
        let lin = vec![a.clone(), one.clone()];
        let pw = upoly::powmod(field, &lin, &half, g);
        upoly::sub(field, &pw, &[one])
    }
}

fn add(field: &ExtField, a: &[Coords], b: &[Coords]) -> Poly<Coords> {
    let zero = FieldOps::zero(field);
    let n = a.len().max(b.len());
    let mut out: Poly<Coords> = (0..n)
        .map(|i| FieldOps::add(field, a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    upoly::trim(field, &mut out);
    out
}
