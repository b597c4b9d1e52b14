use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gf::upoly::FieldOps;
use crate::gf::{make_ext_field, roots_in, ExtField, ExtFieldElement};

/// The ring embedding `F_{q^d} -> F_{q^n}` sending the subfield generator to
/// the smallest root of its modulus in the big field.
#[derive(Clone, Debug)]
pub struct SubfieldEmbedding {
    sub: ExtField,
    big: ExtField,
    /// `beta^i` for `i < d`.
    powers: Vec<ExtFieldElement>,
}

impl SubfieldEmbedding {
    pub fn new(big: &ExtField, d: usize) -> Result<Self> {
        let n = big.degree();
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::InvalidArgument(format!("{d} does not divide {n}")));
        }
        let sub = make_ext_field(big.q(), d)?;
        let beta = roots_in(big, sub.modulus())
            .into_iter()
            .next()
            .expect("an irreducible of degree d | n splits in F_{q^n}");
        let mut powers = Vec::with_capacity(d);
        let mut acc = big.one();
        for _ in 0..d {
            powers.push(acc.clone());
            acc = acc.mul(&beta)?;
        }
        Ok(SubfieldEmbedding {
            sub,
            big: big.clone(),
            powers,
        })
    }

    pub fn subfield(&self) -> &ExtField {
        &self.sub
    }

    pub fn field(&self) -> &ExtField {
        &self.big
    }

    /// Image of the subfield generator.
    pub fn image_of_generator(&self) -> ExtFieldElement {
        match self.powers.get(1) {
            Some(b) => b.clone(),
            // d = 1: the modulus is X and its generator is 0
            None => self.big.zero(),
        }
    }

    pub fn embed(&self, x: &ExtFieldElement) -> Result<ExtFieldElement> {
        if x.field() != &self.sub {
            return Err(Error::FieldMismatch);
        }
        let base = self.big.base();
        let mut acc = FieldOps::zero(&self.big);
        for (c, pw) in x.coeffs().iter().zip(&self.powers) {
            if c.is_zero() {
                continue;
            }
            for (a, b) in acc.iter_mut().zip(pw.coeffs()) {
                *a = base.add(a, &base.mul(c, b));
            }
        }
        Ok(self.big.element(&acc))
    }

    /// Inverse of [`embed`](Self::embed) on its image.
    pub fn pull_back(&self, y: &ExtFieldElement) -> Result<ExtFieldElement> {
        if y.field() != &self.big {
            return Err(Error::FieldMismatch);
        }
        let coords = solve(
            self.big.base(),
            &self
                .powers
                .iter()
                .map(|p| p.coeffs().to_vec())
                .collect::<Vec<_>>(),
            y.coeffs(),
        )
        .ok_or_else(|| Error::InvalidArgument("element does not lie in the subfield".into()))?;
        Ok(self.sub.element(&coords))
    }
}

/// Solves `sum_i c_i cols[i] = target` over `F_q` for linearly independent
/// columns.
fn solve<F>(f: &F, cols: &[Vec<BigUint>], target: &[BigUint]) -> Option<Vec<BigUint>>
where
    F: FieldOps<Elem = BigUint>,
{
    let d = cols.len();
    let rows = target.len();
    // augmented row-major matrix
    let mut m: Vec<Vec<BigUint>> = (0..rows)
        .map(|i| {
            let mut row: Vec<BigUint> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..d {
        let pr = (pivot_row..rows).find(|&i| !f.is_zero(&m[i][col]))?;
        m.swap(pivot_row, pr);
        let inv = f.inv(&m[pivot_row][col])?;
        for v in m[pivot_row].iter_mut() {
            *v = f.mul(v, &inv);
        }
        let pivot = m[pivot_row].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == pivot_row || f.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot) {
                *v = f.sub(v, &f.mul(&factor, p));
            }
        }
        pivot_row += 1;
    }
    if m[d..].iter().any(|row| !f.is_zero(&row[d])) {
        return None;
    }
    Some(m[..d].iter().map(|row| row[d].clone()).collect())
}
