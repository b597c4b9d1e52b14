use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use cyclotorus::gf::ExtFieldElement;
use cyclotorus::torus::{
    derive_params, ThetaDimensions, ThetaInput, ThetaOutput, Torus, TorusComponents,
    THETA_KERNEL_EXPONENT,
};
use cyclotorus::Result;

/// Round-trip vectors kept in the output for regression pinning.
const PINNED_VECTORS: usize = 3;

pub fn params(q: &BigUint, p: u64, r: u64) -> Result<Value> {
    Ok(json!(derive_params(q, p, r)?))
}

#[derive(Serialize)]
struct RoundTripVector {
    x: ExtFieldElement,
    components: TorusComponents,
    recombined: ExtFieldElement,
}

/// Outcome plus whether every check held.
pub fn roundtrip(q: &BigUint, p: u64, r: u64, count: usize, seed: u64) -> Result<(Value, bool)> {
    let torus = Torus::new(q, p, r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pr = BigUint::from(p * r);
    let mut passed = 0usize;
    let mut vectors = Vec::new();
    for _ in 0..count {
        let x = torus.field().random_nonzero(&mut rng);
        let components = torus.decompose(&x)?;
        let recombined = torus.recombine(&components)?;
        if recombined == x.pow_u(&pr) {
            passed += 1;
        }
        if vectors.len() < PINNED_VECTORS {
            vectors.push(RoundTripVector {
                x,
                components,
                recombined,
            });
        }
    }
    let ok = passed == count;
    Ok((
        json!({
            "field": torus.field().descriptor(),
            "count": count,
            "passed": passed,
            "failed": count - passed,
            "vectors": vectors,
        }),
        ok,
    ))
}

#[derive(Serialize)]
struct ThetaRecord {
    input: ThetaInput,
    output: ThetaOutput,
    reverse_is_power: bool,
}

pub fn theta_demo(q: &BigUint, p: u64, r: u64, count: usize, seed: u64) -> Result<(Value, bool)> {
    let torus = Torus::new(q, p, r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let power = BigUint::from(p * r).pow(THETA_KERNEL_EXPONENT);
    let mut records = Vec::with_capacity(count);
    for _ in 0..count {
        let input = torus.random_theta_input(&mut rng);
        let output = torus.theta(&input)?;
        let back = torus.theta_reverse(&output)?;
        let reverse_is_power = back.x == input.x.pow_u(&power)
            && back.xp == input.xp.pow_u(&power)
            && back.xr == input.xr.pow_u(&power);
        records.push(ThetaRecord {
            input,
            output,
            reverse_is_power,
        });
    }
    let dims = ThetaDimensions::of(p * r);
    let ok = dims.balanced() && records.iter().all(|rec| rec.reverse_is_power);
    Ok((
        json!({
            "dimensions": {
                "torus": dims.torus_dim,
                "domain_fields": dims.domain_fields,
                "codomain_fields": dims.codomain_fields,
                "domain_total": dims.domain_total(),
                "codomain_total": dims.codomain_total(),
            },
            "kernel_exponent": THETA_KERNEL_EXPONENT,
            "samples": records,
        }),
        ok,
    ))
}
