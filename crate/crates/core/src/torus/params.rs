use num_bigint::{BigInt, BigUint};
use serde::{Serialize, Serializer};

use crate::cyclo::{cyclotomic, is_prime, PrimePair};
use crate::error::{Error, Result};
use crate::exactalg::{xgcd_rational, IntPoly, ScaledPoly};
use crate::gf::{cofactor, phi_at, MAX_FIELD_BITS};
use crate::modinv::inverse_mod;

/// Bézout data for the decomposition of `F_{q^{pr}}^*`, as polynomials in
/// the indeterminate `X = q` and, unless symbolic, evaluated at `q`.
///
/// * `Phi_pr u1 + Phi_1 u_pr = 1`
/// * `Phi_r u_p + Phi_p u_r = 1`
/// * `Phi_p Phi_r V1 + Phi_1 Phi_pr V2 = pr`
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusParams {
    #[serde(serialize_with = "opt_string")]
    pub q: Option<BigUint>,
    pub p: u64,
    pub r: u64,
    #[serde(skip)]
    pub pair: PrimePair,
    pub polynomials: ParamPolys,
    pub evaluations: Option<Evaluations>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamPolys {
    pub u1: IntPoly,
    pub u_pr: IntPoly,
    pub u_p: IntPoly,
    pub u_r: IntPoly,
    pub v1: IntPoly,
    pub v2: IntPoly,
}

/// Exponents at a concrete `q`. The `u`/`v` values are signed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evaluations {
    #[serde(serialize_with = "string")]
    pub u1: BigInt,
    #[serde(serialize_with = "string")]
    pub u_pr: BigInt,
    #[serde(serialize_with = "string")]
    pub u_p: BigInt,
    #[serde(serialize_with = "string")]
    pub u_r: BigInt,
    #[serde(serialize_with = "string")]
    pub v1: BigInt,
    #[serde(serialize_with = "string")]
    pub v2: BigInt,
    /// `U_k(q)` for `k = 1, p, r, pr`.
    #[serde(serialize_with = "strings")]
    pub cofactors: [BigUint; 4],
    /// `Phi_k(q)` for `k = 1, p, r, pr`.
    #[serde(serialize_with = "strings")]
    pub phi: [BigUint; 4],
}

fn string<T: ToString, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn opt_string<T: ToString, S: Serializer>(
    v: &Option<T>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

fn strings<T: ToString, S: Serializer>(v: &[T; 4], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl TorusParams {
    /// The four indices `1, p, r, pr` in component order.
    pub fn indices(&self) -> [u64; 4] {
        [1, self.pair.p(), self.pair.r(), self.pair.pr()]
    }

    pub fn is_symbolic(&self) -> bool {
        self.q.is_none()
    }

    pub fn evaluations(&self) -> Result<&Evaluations> {
        self.evaluations
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("parameters are symbolic in q".into()))
    }

    /// Checks the three Bézout identities as exact polynomial equations.
    pub fn identities_hold(&self) -> bool {
        let pr = self.pair.pr();
        let phi = |k| cyclotomic(k).as_ref().clone();
        let (p1, pp, prr, ppr) = (phi(1), phi(self.pair.p()), phi(self.pair.r()), phi(pr));
        let t = &self.polynomials;
        let first = &ppr * &t.u1 + &p1 * &t.u_pr;
        let second = &prr * &t.u_p + &pp * &t.u_r;
        let third = &(&pp * &prr) * &t.v1 + &(&p1 * &ppr) * &t.v2;
        first == IntPoly::one()
            && second == IntPoly::one()
            && third == IntPoly::constant(BigInt::from(pr))
    }
}

fn integral(inv: ScaledPoly, what: &str) -> Result<IntPoly> {
    inv.into_int()
        .ok_or_else(|| Error::NotIntegral(format!("{what} has a nontrivial denominator")))
}

/// `V1, V2` with `Phi_p Phi_r V1 + Phi_1 Phi_pr V2 = pr`, both integral,
/// `deg V1 < 1 + phi(pr)` and `deg V2 < phi(p) + phi(r)`.
pub fn scaled_bezout_pair(pair: &PrimePair) -> Result<(IntPoly, IntPoly)> {
    let a = cyclotomic(pair.p()).as_ref() * cyclotomic(pair.r()).as_ref();
    let b = cyclotomic(1).as_ref() * cyclotomic(pair.pr()).as_ref();
    let (u, v) = xgcd_rational(&a, &b)?;
    let scale = BigInt::from(pair.pr());
    let lift = |s: &ScaledPoly, name: &str| {
        s.numerator_over(&scale).ok_or_else(|| {
            Error::NotIntegral(format!("{scale} * {name} has denominator {}", s.den()))
        })
    };
    Ok((lift(&u, "V1")?, lift(&v, "V2")?))
}

/// Parameters with `q` left as an indeterminate.
pub fn derive_params_symbolic(p: u64, r: u64) -> Result<TorusParams> {
    let pair = PrimePair::new(p, r)?;
    let pr = pair.pr();
    let (v1, v2) = scaled_bezout_pair(&pair)?;
    let polynomials = ParamPolys {
        u1: integral(inverse_mod(pr, 1)?, "u1")?,
        u_pr: integral(inverse_mod(1, pr)?, "u_pr")?,
        u_p: integral(inverse_mod(r, p)?, "u_p")?,
        u_r: integral(inverse_mod(p, r)?, "u_r")?,
        v1,
        v2,
    };
    Ok(TorusParams {
        q: None,
        p,
        r,
        pair,
        polynomials,
        evaluations: None,
    })
}

/// Parameters at a concrete prime `q`; `q = 0` selects symbolic mode.
pub fn derive_params(q: &BigUint, p: u64, r: u64) -> Result<TorusParams> {
    let mut params = derive_params_symbolic(p, r)?;
    if q == &BigUint::from(0u32) {
        return Ok(params);
    }
    if !u64::try_from(q).map(is_prime).unwrap_or(false) {
        return Err(Error::NotPrime(q.to_string()));
    }
    let n = params.pair.pr() as usize;
    if num_traits::pow(q.clone(), n).bits() > MAX_FIELD_BITS {
        return Err(Error::FieldTooLarge {
            q: q.to_string(),
            n,
            max_bits: MAX_FIELD_BITS,
        });
    }
    let qi = BigInt::from(q.clone());
    let t = &params.polynomials;
    let idx = params.indices();
    let cof = |k| -> Result<BigUint> {
        Ok(cofactor(&params.pair, k)?
            .eval(&qi)
            .to_biguint()
            .expect("positive"))
    };
    params.evaluations = Some(Evaluations {
        u1: t.u1.eval(&qi),
        u_pr: t.u_pr.eval(&qi),
        u_p: t.u_p.eval(&qi),
        u_r: t.u_r.eval(&qi),
        v1: t.v1.eval(&qi),
        v2: t.v2.eval(&qi),
        cofactors: [cof(idx[0])?, cof(idx[1])?, cof(idx[2])?, cof(idx[3])?],
        phi: idx.map(|k| phi_at(k, q)),
    });
    params.q = Some(q.clone());
    Ok(params)
}

pub fn derive_params_u64(q: u64, p: u64, r: u64) -> Result<TorusParams> {
    derive_params(&BigUint::from(q), p, r)
}
