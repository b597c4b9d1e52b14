use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{
    closed_form_i, closed_form_ii, closed_form_iii_forward, closed_form_iii_reverse,
    closed_form_iv, coefficients_in_unit_set, inverse_mod, is_inverse, Direction, PrimePair,
};
use crate::error::Result;
use crate::exactalg::{IntPoly, ScaledPoly};

/// The seven inverses between `Phi_1`, `Phi_p`, `Phi_r` and `Phi_pr`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseId {
    #[serde(rename = "i-a")]
    IA,
    #[serde(rename = "i-b")]
    IB,
    #[serde(rename = "ii-a")]
    IIA,
    #[serde(rename = "ii-b")]
    IIB,
    #[serde(rename = "iii-a")]
    IIIA,
    #[serde(rename = "iii-b")]
    IIIB,
    #[serde(rename = "iv")]
    IV,
}

impl CaseId {
    pub const ALL: [CaseId; 7] = [
        CaseId::IA,
        CaseId::IB,
        CaseId::IIA,
        CaseId::IIB,
        CaseId::IIIA,
        CaseId::IIIB,
        CaseId::IV,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CaseId::IA => "i-a",
            CaseId::IB => "i-b",
            CaseId::IIA => "ii-a",
            CaseId::IIB => "ii-b",
            CaseId::IIIA => "iii-a",
            CaseId::IIIB => "iii-b",
            CaseId::IV => "iv",
        }
    }

    /// `(m, n)` such that the case is `Phi_m^{-1} mod Phi_n`.
    pub fn indices(self, pair: &PrimePair) -> (u64, u64) {
        let (p, r, pr) = (pair.p(), pair.r(), pair.pr());
        match self {
            CaseId::IA => (p, 1),
            CaseId::IB => (1, p),
            CaseId::IIA => (pr, 1),
            CaseId::IIB => (1, pr),
            CaseId::IIIA => (pr, p),
            CaseId::IIIB => (p, pr),
            CaseId::IV => (p, r),
        }
    }

    /// Denominator the numerator coefficients are measured against.
    pub fn nominal_denominator(self, pair: &PrimePair) -> u64 {
        match self {
            CaseId::IA | CaseId::IB => pair.p(),
            CaseId::IIA | CaseId::IIB | CaseId::IV => 1,
            CaseId::IIIA | CaseId::IIIB => pair.r(),
        }
    }

    pub fn bound_description(self) -> &'static str {
        match self {
            CaseId::IA => "= 1/p",
            CaseId::IB => "= -(1/p)(X^{p-2} + 2X^{p-3} + ... + p-1)",
            CaseId::IIA => "= 1",
            CaseId::IIB => "coefficients in {-1,0,1}",
            CaseId::IIIA => "= (1/r)(1 + X + ... + X^d), d = (r-1) mod p",
            CaseId::IIIB => "(1/r) sum v_i X^i with v_i < r",
            CaseId::IV => "integral, coefficients in {-1,0,1}",
        }
    }

    fn closed_form(self, pair: &PrimePair) -> Result<ScaledPoly> {
        Ok(match self {
            CaseId::IA => closed_form_i(pair.p(), Direction::Forward)?,
            CaseId::IB => closed_form_i(pair.p(), Direction::Reverse)?,
            CaseId::IIA => closed_form_ii(pair).0,
            CaseId::IIB => closed_form_ii(pair).1,
            CaseId::IIIA => closed_form_iii_forward(pair),
            CaseId::IIIB => closed_form_iii_reverse(pair),
            CaseId::IV => ScaledPoly::from_int(closed_form_iv(pair.p(), pair.r())?),
        })
    }

    fn bound_holds(self, pair: &PrimePair, inverse: &ScaledPoly, numerator: &IntPoly) -> bool {
        match self {
            CaseId::IA | CaseId::IB | CaseId::IIA | CaseId::IIIA => true,
            CaseId::IIB => inverse.is_integral() && coefficients_in_unit_set(numerator),
            CaseId::IIIB => {
                let r = BigInt::from(pair.r());
                numerator.coeffs().iter().all(|v| v < &r)
            }
            CaseId::IV => inverse.is_integral() && coefficients_in_unit_set(numerator),
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome of checking one closed form against the generic inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseReport {
    pub pair: PrimePair,
    pub case_id: CaseId,
    /// Generic inverse from the extended gcd.
    pub inverse: ScaledPoly,
    pub matches_oracle: bool,
    /// `Phi_m * inverse` reduces to 1 modulo `Phi_n`.
    pub defining_property: bool,
    pub degree_ok: bool,
    pub bound_satisfied: bool,
    pub observed_min: BigInt,
    pub observed_max: BigInt,
}

impl InverseReport {
    pub fn passed(&self) -> bool {
        self.matches_oracle && self.defining_property && self.degree_ok && self.bound_satisfied
    }

    pub fn record(&self) -> InverseRecord {
        let (m, n) = self.case_id.indices(&self.pair);
        let den = BigInt::from(self.case_id.nominal_denominator(&self.pair));
        let (den, coeffs) = match self.inverse.numerator_over(&den) {
            Some(num) => (den, num),
            None => (self.inverse.den().clone(), self.inverse.num().clone()),
        };
        InverseRecord {
            p: self.pair.p(),
            r: self.pair.r(),
            case: self.case_id,
            m,
            n,
            den: den.to_string(),
            coeffs,
            bound: self.case_id.bound_description().to_string(),
            observed_min: self.observed_min.to_string(),
            observed_max: self.observed_max.to_string(),
            matches_oracle: self.matches_oracle,
            bound_satisfied: self.bound_satisfied,
            passed: self.passed(),
        }
    }
}

/// Flat serializable form of an [`InverseReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseRecord {
    pub p: u64,
    pub r: u64,
    pub case: CaseId,
    pub m: u64,
    pub n: u64,
    pub den: String,
    pub coeffs: IntPoly,
    pub bound: String,
    pub observed_min: String,
    pub observed_max: String,
    pub matches_oracle: bool,
    pub bound_satisfied: bool,
    pub passed: bool,
}

fn check_case(pair: &PrimePair, case_id: CaseId) -> Result<InverseReport> {
    let (m, n) = case_id.indices(pair);
    let inverse = inverse_mod(m, n)?;
    let closed = case_id.closed_form(pair)?;
    let den = BigInt::from(case_id.nominal_denominator(pair));
    let numerator = inverse.numerator_over(&den);
    let (observed_min, observed_max) = match &numerator {
        Some(num) => (
            num.min_coeff().cloned().unwrap_or_else(BigInt::zero),
            num.max_coeff().cloned().unwrap_or_else(BigInt::zero),
        ),
        None => (BigInt::zero(), BigInt::zero()),
    };
    let bound_satisfied = numerator
        .as_ref()
        .is_some_and(|num| case_id.bound_holds(pair, &inverse, num));
    let phi_n = crate::cyclo::euler_phi(n) as usize;
    Ok(InverseReport {
        pair: *pair,
        case_id,
        matches_oracle: closed == inverse,
        defining_property: is_inverse(&inverse, m, n),
        degree_ok: inverse.degree() < Some(phi_n),
        bound_satisfied,
        observed_min,
        observed_max,
        inverse,
    })
}

/// Runs all seven cases for one prime pair. Violations are reported in the
/// returned records rather than raised.
pub fn verify_theorem1(pair: &PrimePair) -> Vec<InverseReport> {
    CaseId::ALL
        .iter()
        .map(|&case_id| check_case(pair, case_id).unwrap_or_else(|_| failed_report(pair, case_id)))
        .collect()
}

fn failed_report(pair: &PrimePair, case_id: CaseId) -> InverseReport {
    InverseReport {
        pair: *pair,
        case_id,
        inverse: ScaledPoly::from_int(IntPoly::zero()),
        matches_oracle: false,
        defining_property: false,
        degree_ok: false,
        bound_satisfied: false,
        observed_min: BigInt::zero(),
        observed_max: BigInt::zero(),
    }
}
