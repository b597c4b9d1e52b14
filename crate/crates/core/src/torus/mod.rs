//! Decomposition of `F_{q^{pr}}^*` into the subgroups of orders
//! `Phi_1(q), Phi_p(q), Phi_r(q), Phi_pr(q)`, recombination up to `pr`-th
//! powers, and the parametrization `theta` of `T_pr`.

mod embed;
mod params;

pub use embed::SubfieldEmbedding;
pub use params::{
    derive_params, derive_params_symbolic, derive_params_u64, scaled_bezout_pair, Evaluations,
    ParamPolys, TorusParams,
};

use num_bigint::{BigInt, BigUint};
use rand::Rng;
use serde::Serialize;

use crate::cyclo::{divisors, euler_phi, is_prime, moebius};
use crate::error::{Error, Result};
use crate::gf::{make_ext_field, phi_at, torus_membership, ExtField, ExtFieldElement};
use crate::modinv::{closed_form_i, Direction};

/// `k` with `psi(theta(v)) = v^{(pr)^k}`, measured on seeded samples and
/// pinned here.
pub const THETA_KERNEL_EXPONENT: u32 = 2;

/// `(t_1, t_p, t_r, t_pr)`, all in `F_{q^{pr}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusComponents {
    pub t1: ExtFieldElement,
    pub tp: ExtFieldElement,
    pub tr: ExtFieldElement,
    pub tpr: ExtFieldElement,
}

impl TorusComponents {
    pub fn as_array(&self) -> [&ExtFieldElement; 4] {
        [&self.t1, &self.tp, &self.tr, &self.tpr]
    }
}

fn check_field(x: &ExtFieldElement, params: &TorusParams) -> Result<()> {
    let q = params
        .q
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("parameters are symbolic in q".into()))?;
    if x.field().q() != q || x.field().degree() as u64 != params.pair.pr() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// `t_k = x^{U_k(q)}` for `k = 1, p, r, pr`.
pub fn decompose(x: &ExtFieldElement, params: &TorusParams) -> Result<TorusComponents> {
    check_field(x, params)?;
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let e = params.evaluations()?;
    let [t1, tp, tr, tpr] = e.cofactors.each_ref().map(|u| x.pow_u(u));
    Ok(TorusComponents { t1, tp, tr, tpr })
}

/// `y1^{V1(q)} y2^{V2(q)}` with `y1 = t1^{u1} tpr^{u_pr}`, `y2 = tp^{u_p} tr^{u_r}`.
///
/// `recombine(decompose(x)) = x^{pr}` and `decompose(recombine(c)) = c^{pr}`.
pub fn recombine(c: &TorusComponents, params: &TorusParams) -> Result<ExtFieldElement> {
    for (t, k) in c.as_array().into_iter().zip(params.indices()) {
        check_field(t, params)?;
        if !torus_membership(t, k)? {
            return Err(Error::NotInTorus(k));
        }
    }
    let e = params.evaluations()?;
    let y1 = c.t1.pow(&e.u1)?.mul(&c.tpr.pow(&e.u_pr)?)?;
    let y2 = c.tp.pow(&e.u_p)?.mul(&c.tr.pow(&e.u_r)?)?;
    y1.pow(&e.v1)?.mul(&y2.pow(&e.v2)?)
}

/// Integers `(a, b)` with `Phi_p(q) a + (q - 1) b = p`, read off the two
/// inverses between `Phi_1` and `Phi_p`.
pub fn single_exponents(p: u64, q: &BigUint) -> Result<(BigInt, BigInt)> {
    let scale = BigInt::from(p);
    let qi = BigInt::from(q.clone());
    let scaled = |dir| -> Result<BigInt> {
        let u = closed_form_i(p, dir)?;
        let num = u
            .numerator_over(&scale)
            .ok_or_else(|| Error::NotIntegral(format!("{p} * Phi_1/Phi_{p} inverse")))?;
        Ok(num.eval(&qi))
    };
    Ok((scaled(Direction::Forward)?, scaled(Direction::Reverse)?))
}

fn prime_degree(x: &ExtFieldElement) -> Result<u64> {
    let p = x.field().degree() as u64;
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    Ok(p)
}

/// `x -> (x^{Phi_p(q)}, x^{q-1})` on `F_{q^p}^*`.
pub fn decompose_single(x: &ExtFieldElement) -> Result<(ExtFieldElement, ExtFieldElement)> {
    let p = prime_degree(x)?;
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let q = x.field().q();
    Ok((x.pow_u(&phi_at(p, q)), x.pow_u(&(q - 1u32))))
}

/// `(t1, tp) -> t1^a tp^b`; composed with [`decompose_single`] this is `x^p`.
pub fn recombine_single(t1: &ExtFieldElement, tp: &ExtFieldElement) -> Result<ExtFieldElement> {
    let p = prime_degree(t1)?;
    if !torus_membership(t1, 1)? {
        return Err(Error::NotInTorus(1));
    }
    if !torus_membership(tp, p)? {
        return Err(Error::NotInTorus(p));
    }
    let (a, b) = single_exponents(p, t1.field().q())?;
    t1.pow(&a)?.mul(&tp.pow(&b)?)
}

/// Domain and codomain of `theta` for `n`: the torus `T_n` plus the
/// `F_{q^d}^*` with `mu(n/d) = -1` on one side, the `F_{q^d}^*` with
/// `mu(n/d) = +1` on the other. Dimensions over `F_q` agree because
/// `sum_{d|n} mu(n/d) d = phi(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaDimensions {
    pub n: u64,
    pub torus_dim: u64,
    pub domain_fields: Vec<u64>,
    pub codomain_fields: Vec<u64>,
}

impl ThetaDimensions {
    pub fn of(n: u64) -> Self {
        let mut domain_fields = Vec::new();
        let mut codomain_fields = Vec::new();
        for d in divisors(n) {
            match moebius(n / d) {
                -1 => domain_fields.push(d),
                1 => codomain_fields.push(d),
                _ => {}
            }
        }
        ThetaDimensions {
            n,
            torus_dim: euler_phi(n),
            domain_fields,
            codomain_fields,
        }
    }

    pub fn domain_total(&self) -> u64 {
        self.torus_dim + self.domain_fields.iter().sum::<u64>()
    }

    pub fn codomain_total(&self) -> u64 {
        self.codomain_fields.iter().sum()
    }

    pub fn balanced(&self) -> bool {
        self.domain_total() == self.codomain_total()
    }
}

/// Input of `theta`: `x` in `T_pr`, `xp` in `F_{q^p}^*`, `xr` in `F_{q^r}^*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaInput {
    pub x: ExtFieldElement,
    pub xp: ExtFieldElement,
    pub xr: ExtFieldElement,
}

/// Output of `theta`: `x1` in `F_q^*`, `xpr` in `F_{q^{pr}}^*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaOutput {
    pub x1: ExtFieldElement,
    pub xpr: ExtFieldElement,
}

/// Concrete fields and embeddings for one `(q, p, r)`.
#[derive(Clone, Debug)]
pub struct Torus {
    params: TorusParams,
    field: ExtField,
    emb_1: SubfieldEmbedding,
    emb_p: SubfieldEmbedding,
    emb_r: SubfieldEmbedding,
}

impl Torus {
    pub fn new(q: &BigUint, p: u64, r: u64) -> Result<Self> {
        if q == &BigUint::from(0u32) {
            return Err(Error::InvalidArgument("a concrete q is required".into()));
        }
        let params = derive_params(q, p, r)?;
        let field = make_ext_field(q, params.pair.pr() as usize)?;
        Ok(Torus {
            emb_1: SubfieldEmbedding::new(&field, 1)?,
            emb_p: SubfieldEmbedding::new(&field, p as usize)?,
            emb_r: SubfieldEmbedding::new(&field, r as usize)?,
            params,
            field,
        })
    }

    pub fn new_u64(q: u64, p: u64, r: u64) -> Result<Self> {
        Self::new(&BigUint::from(q), p, r)
    }

    pub fn params(&self) -> &TorusParams {
        &self.params
    }

    /// `F_{q^{pr}}`
    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn base_field(&self) -> &ExtField {
        self.emb_1.subfield()
    }

    pub fn field_p(&self) -> &ExtField {
        self.emb_p.subfield()
    }

    pub fn field_r(&self) -> &ExtField {
        self.emb_r.subfield()
    }

    pub fn embedding(&self, d: u64) -> Result<&SubfieldEmbedding> {
        let (p, r) = (self.params.pair.p(), self.params.pair.r());
        match d {
            1 => Ok(&self.emb_1),
            _ if d == p => Ok(&self.emb_p),
            _ if d == r => Ok(&self.emb_r),
            _ => Err(Error::InvalidArgument(format!(
                "no embedding for degree {d}"
            ))),
        }
    }

    pub fn decompose(&self, x: &ExtFieldElement) -> Result<TorusComponents> {
        decompose(x, &self.params)
    }

    pub fn recombine(&self, c: &TorusComponents) -> Result<ExtFieldElement> {
        recombine(c, &self.params)
    }

    fn q(&self) -> &BigUint {
        self.field.q()
    }

    /// A uniformly random element of `T_pr`.
    pub fn random_torus_element<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtFieldElement {
        let g = self.field.random_nonzero(rng);
        g.pow_u(
            &self
                .params
                .evaluations
                .as_ref()
                .expect("concrete")
                .cofactors[3],
        )
    }

    pub fn random_theta_input<R: Rng + ?Sized>(&self, rng: &mut R) -> ThetaInput {
        ThetaInput {
            x: self.random_torus_element(rng),
            xp: self.field_p().random_nonzero(rng),
            xr: self.field_r().random_nonzero(rng),
        }
    }

    fn check_input(&self, v: &ThetaInput) -> Result<()> {
        let pr = self.params.pair.pr();
        if v.x.field() != &self.field
            || v.xp.field() != self.field_p()
            || v.xr.field() != self.field_r()
        {
            return Err(Error::FieldMismatch);
        }
        if v.xp.is_zero() || v.xr.is_zero() {
            return Err(Error::ZeroElement);
        }
        if !torus_membership(&v.x, pr)? {
            return Err(Error::NotInTorus(pr));
        }
        Ok(())
    }

    /// `x1 = xp^{Phi_p(q)}`; `xpr` recombines
    /// `(xr^{Phi_r(q)}, xp^{q-1}, xr^{q-1}, x)`.
    pub fn theta(&self, v: &ThetaInput) -> Result<ThetaOutput> {
        self.check_input(v)?;
        let (p, r) = (self.params.pair.p(), self.params.pair.r());
        let q = self.q();
        let qm1 = q - 1u32;
        let norm_p = v.xp.pow_u(&phi_at(p, q));
        let x1_res = norm_p.as_base().expect("norm lies in F_q").clone();
        let x1 = self.base_field().constant(&x1_res);
        let c = TorusComponents {
            t1: self.emb_r.embed(&v.xr.pow_u(&phi_at(r, q)))?,
            tp: self.emb_p.embed(&v.xp.pow_u(&qm1))?,
            tr: self.emb_r.embed(&v.xr.pow_u(&qm1))?,
            tpr: v.x.clone(),
        };
        Ok(ThetaOutput {
            x1,
            xpr: self.recombine(&c)?,
        })
    }

    /// Reverse parametrization: `theta_reverse(theta(v)) = v^{(pr)^2}`.
    pub fn theta_reverse(&self, w: &ThetaOutput) -> Result<ThetaInput> {
        if w.x1.field() != self.base_field() {
            return Err(Error::FieldMismatch);
        }
        if w.x1.is_zero() {
            return Err(Error::ZeroElement);
        }
        let (p, r) = (self.params.pair.p(), self.params.pair.r());
        let pr = BigUint::from(self.params.pair.pr());
        let q = self.q();
        // components come back raised to pr
        let s = self.decompose(&w.xpr)?;
        let x = s.tpr.pow_u(&pr);
        let (ap, bp) = single_exponents(p, q)?;
        let (ar, br) = single_exponents(r, q)?;
        // xp^{p pr} = x1^{pr a_p} (xp^{(q-1) pr})^{b_p}
        let x1 = self.emb_1.embed(&w.x1)?;
        let xp_big = x1
            .pow(&(ap * BigInt::from(pr.clone())))?
            .mul(&s.tp.pow(&bp)?)?
            .pow_u(&BigUint::from(r));
        // xr^{r pr} = (xr^{Phi_r pr})^{a_r} (xr^{(q-1) pr})^{b_r}
        let xr_big =
            s.t1.pow(&ar)?
                .mul(&s.tr.pow(&br)?)?
                .pow_u(&BigUint::from(p));
        Ok(ThetaInput {
            x,
            xp: self.emb_p.pull_back(&xp_big)?,
            xr: self.emb_r.pull_back(&xr_big)?,
        })
    }

    /// Smallest `k <= max_k` with `theta_reverse(theta(v)) = v^{(pr)^k}` for
    /// every sample, if any.
    pub fn measure_kernel_exponent(
        &self,
        samples: &[ThetaInput],
        max_k: u32,
    ) -> Result<Option<u32>> {
        let pr = BigUint::from(self.params.pair.pr());
        let back = samples
            .iter()
            .map(|v| self.theta_reverse(&self.theta(v)?))
            .collect::<Result<Vec<_>>>()?;
        Ok((0..=max_k).find(|&k| {
            let e = num_traits::pow(pr.clone(), k as usize);
            samples.iter().zip(&back).all(|(v, w)| {
                w.x == v.x.pow_u(&e) && w.xp == v.xp.pow_u(&e) && w.xr == v.xr.pow_u(&e)
            })
        }))
    }
}
