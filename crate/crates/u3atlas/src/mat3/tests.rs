use super::*;
use crate::cyclotomic::Rational;
use crate::genlib::*;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn zeta(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k)
}

#[test]
fn mat_mul_basic() {
    let e = gen_e();
    let id = Mat3::identity(e.conductor());
    assert_eq!(id.mat_mul(&e).unwrap(), e);
    assert_eq!(e.pow(3), id);
    // Direct expansion of I * I.
    let i = gen_i();
    assert_eq!(i.mat_mul(&i).unwrap(), Mat3::identity(i.conductor()));
    let l3 = gen_l(3);
    assert!(e.mat_mul(&l3).is_err(), "conductor mismatch must be an error");
}

#[test]
fn det_basic() {
    assert!(gen_e().det().is_one());
    assert_eq!(gen_iprime().det(), Cyclotomic::from_integer(-1));
    // det Q_{m,j} = xi^3 with xi = exp[2i*pi/(3^m 2^j)].
    for (m, j) in [(1u32, 2u32), (2, 3), (0, 0)] {
        let q = gen_q(m, j);
        let n = 3u32.pow(m) * 2u32.pow(j);
        assert_eq!(q.det(), zeta(n, 3), "det Q_{{{m},{j}}}");
    }
}

#[test]
fn trace_basic() {
    assert_eq!(Mat3::identity(1).trace(), Cyclotomic::from_integer(3));
    assert!(gen_e().trace().is_zero());
    assert!(gen_l(3).trace().is_zero());
}

#[test]
fn unitarity_basic() {
    assert!(gen_e().is_unitary());
    assert!(gen_k().is_unitary());
    let two_id = Mat3::identity(1).scale(&Cyclotomic::from_integer(2));
    assert!(!two_id.is_unitary());
}

#[test]
fn mat_keys() {
    let e = gen_e();
    let id = Mat3::identity(e.conductor());
    assert_ne!(id.mat_key(), e.mat_key());
    assert_ne!(e.mat_key(), e.pow(2).mat_key());
    // L_6 assembled directly and entrywise from lifted pieces.
    let l6 = gen_l(6);
    let other = Mat3::diag(
        Cyclotomic::one(1).lift_to(6).unwrap(),
        zeta(6, 1),
        zeta(6, 5),
    );
    assert_eq!(l6.lift_to(6).unwrap().mat_key(), other.mat_key());
}

#[test]
fn monomial_decomposition() {
    let (perm, phases) = gen_e().monomial_decompose().unwrap();
    assert_eq!(perm, [1, 2, 0]);
    assert_eq!(perm_sign(perm), 1);
    assert!(phases.iter().all(|p| p.is_one()));

    let (perm, phases) = gen_i().monomial_decompose().unwrap();
    assert_eq!(perm, [2, 1, 0]);
    assert_eq!(perm_sign(perm), -1);
    assert!(phases.iter().all(|p| *p == Cyclotomic::from_integer(-1)));

    assert!(gen_k().monomial_decompose().is_none());
}

fn random_generator_product(rng: &mut ChaCha8Rng) -> Mat3 {
    let n = 36;
    let gens = [
        gen_e().lift_to(n).unwrap(),
        gen_l(4).lift_to(n).unwrap(),
        gen_f(2, 2).lift_to(n).unwrap(),
        gen_y(1, 2).lift_to(n).unwrap(),
    ];
    let mut m = Mat3::identity(n);
    for _ in 0..4 {
        m = m.mat_mul(&gens[rng.gen_range(0..gens.len())]).unwrap();
    }
    m
}

#[test]
fn det_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..500 {
        let a = random_generator_product(&mut rng);
        let b = random_generator_product(&mut rng);
        assert_eq!(a.mat_mul(&b).unwrap().det(), a.det().mul(&b.det()));
    }
}

#[test]
fn trace_is_conjugation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let a = random_generator_product(&mut rng);
        let p = random_generator_product(&mut rng);
        let conj = p.mat_mul(&a).unwrap().mat_mul(&p.conj_transpose()).unwrap();
        assert_eq!(conj.trace(), a.trace());
    }
}

#[test]
fn monomial_decompose_composes() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let forms = [
        MonomialForm::R,
        MonomialForm::V,
        MonomialForm::W,
        MonomialForm::S,
        MonomialForm::T,
        MonomialForm::U,
    ];
    for _ in 0..200 {
        let fa = forms[rng.gen_range(0..6)];
        let fb = forms[rng.gen_range(0..6)];
        let a = gen_rvw(fa, 12, rng.gen_range(0..12), rng.gen_range(0..12), rng.gen_range(0..12));
        let b = gen_rvw(fb, 12, rng.gen_range(0..12), rng.gen_range(0..12), rng.gen_range(0..12));
        let (pa, _) = a.monomial_decompose().unwrap();
        let (pb, _) = b.monomial_decompose().unwrap();
        let ab = a.lift_to(12).unwrap().mat_mul(&b.lift_to(12).unwrap()).unwrap();
        let (pab, _) = ab.monomial_decompose().unwrap();
        // Row r of AB is nonzero at column pb[pa[r]].
        assert_eq!(pab, [pb[pa[0]], pb[pa[1]], pb[pa[2]]]);
        assert_eq!(perm_sign(pab), perm_sign(pa) * perm_sign(pb));
    }
}

#[test]
fn literal_rows_roundtrip() {
    let q = gen_q(1, 2);
    let rows = q.to_literal_rows();
    let back = Mat3::from_literal_rows(&rows).unwrap();
    let n = num_integer::lcm(q.conductor(), back.conductor());
    assert_eq!(q.lift_to(n).unwrap(), back.lift_to(n).unwrap());
    assert!(Mat3::from_literal_rows(&[vec!["1".into()]]).is_err());
}

#[test]
fn scale_by_rational() {
    let half = Cyclotomic::from_rational(Rational::new(BigInt::from(1), BigInt::from(2)));
    let m = Mat3::identity(1).scale(&half);
    assert_eq!(m.trace(), half.add(&half).add(&half));
}
