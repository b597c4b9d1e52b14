use cyclotorus::cyclo::PrimePair;
use cyclotorus::gf::{make_ext_field_u64, phi_at, torus_membership};
use cyclotorus::torus::{
    decompose_single, derive_params_symbolic, derive_params_u64, recombine_single, Torus,
};
use num_bigint::{BigInt, BigUint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn polynomial_identities_for_small_pairs() {
    for pair in PrimePair::all_up_to(13) {
        let t = derive_params_symbolic(pair.p(), pair.r()).unwrap();
        assert!(t.identities_hold(), "({}, {})", pair.p(), pair.r());
        let polys = &t.polynomials;
        assert!(polys.v1.degree() < Some(1 + pair.phi_pr() as usize));
        assert!(polys.v2.degree() < Some((pair.p() + pair.r() - 2) as usize));
    }
}

#[test]
fn evaluated_identity_over_a_range_of_q() {
    let one = BigInt::from(1);
    for q in (2u64..=50).filter(|&q| cyclotorus::cyclo::is_prime(q)) {
        for (p, r) in [(3, 5), (2, 3), (5, 3)] {
            let t = derive_params_u64(q, p, r).unwrap();
            let e = t.evaluations().unwrap();
            let qb = BigUint::from(q);
            let phi = |k| BigInt::from(phi_at(k, &qb));
            assert_eq!(phi(p * r) * &e.u1 + phi(1) * &e.u_pr, one);
        }
    }
}

#[test]
fn round_trip_at_a_third_triple() {
    let t = Torus::new_u64(11, 3, 5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let pr = BigUint::from(15u32);
    for _ in 0..50 {
        let x = t.field().random_nonzero(&mut rng);
        let c = t.decompose(&x).unwrap();
        for (tk, k) in c.as_array().into_iter().zip([1, 3, 5, 15]) {
            assert!(torus_membership(tk, k).unwrap());
        }
        assert_eq!(t.recombine(&c).unwrap(), x.pow_u(&pr));
    }
}

#[test]
fn single_round_trip_in_f343() {
    let f = make_ext_field_u64(7, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(343);
    for _ in 0..200 {
        let x = f.random_nonzero(&mut rng);
        let (t1, tp) = decompose_single(&x).unwrap();
        assert_eq!(recombine_single(&t1, &tp).unwrap(), x.pow_i64(3).unwrap());
    }
}

#[test]
fn embeddings_are_homomorphisms() {
    let t = Torus::new_u64(7, 3, 5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for d in [1u64, 3, 5] {
        let e = t.embedding(d).unwrap();
        let sub = e.subfield();
        for _ in 0..100 {
            let a = sub.random_element(&mut rng);
            let b = sub.random_element(&mut rng);
            let ea = e.embed(&a).unwrap();
            assert_eq!(
                e.embed(&a.mul(&b).unwrap()).unwrap(),
                ea.mul(&e.embed(&b).unwrap()).unwrap()
            );
            assert_eq!(ea.frobenius(d as usize), ea);
        }
    }
    assert!(t.embedding(15).is_err());
}
