use super::*;
use crate::mat3::Mat3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn e_and_i() {
    let e = gen_e();
    assert!(e.entry(0, 0).is_zero());
    assert!(e.entry(0, 1).is_one());
    assert!(e.entry(0, 2).is_zero());
    assert_eq!(gen_iprime(), gen_i().neg());
    assert_eq!(gen_i().pow(2), Mat3::identity(gen_i().conductor()));
}

#[test]
fn l_b_g() {
    assert_eq!(gen_l(1), Mat3::identity(1));
    let m1 = Cyclotomic::from_integer(-1);
    assert_eq!(gen_l(2), Mat3::diag(one1(), m1.clone(), m1));
    // G_{n,r} = (L_n)^(-r); inverse of a unitary is its conjugate transpose.
    let l9_inv = gen_l(9).conj_transpose();
    assert_eq!(gen_g(9, 3), l9_inv.pow(3));
    // B matrices are diagonal, hence commute.
    let (b1, b2) = (gen_b(7, 2).lift_to(7).unwrap(), gen_b(7, 4).lift_to(7).unwrap());
    assert_eq!(b1.mat_mul(&b2).unwrap(), b2.mat_mul(&b1).unwrap());
}

#[test]
fn b_rk_in_su3_for_admissible_pairs() {
    // det B_{r,k} = nu^(1 + k + (-1-k)) = nu^0 = 1 for every r, k.
    for (r, k) in [(7u32, 2u32), (13, 3), (19, 7), (49, 18), (91, 9), (91, 16), (217, 25), (217, 67)]
    {
        assert!(gen_b(r, k).det().is_one(), "B_{{{r},{k}}}");
    }
}

#[test]
fn em_zm_t() {
    assert_eq!(gen_em(0), gen_e());
    assert!(gen_em(1).det().is_one());
    assert!(!gen_em(2).det().is_one());
    assert_eq!(gen_zm(0).pow(3), Mat3::identity(1));
    // At m = 1, mu = w and conjugation swaps w <-> w^2, so T_1(1)^dagger = T_2(1).
    assert_eq!(gen_t1(1).conj_transpose(), gen_t2(1));
    let mu = Cyclotomic::root_of_unity(9, 1);
    let mu2 = Cyclotomic::root_of_unity(9, 2);
    assert_eq!(gen_t1(2), Mat3::diag(Cyclotomic::one(1), mu.clone(), mu2.clone()));
    assert_eq!(gen_t2(2), Mat3::diag(Cyclotomic::one(1), mu2, mu));
}

#[test]
fn f_family() {
    assert_eq!(gen_f(0, 0), gen_i());
    assert_eq!(gen_f(0, 1), gen_iprime());
    assert!(!gen_f(1, 1).det().is_one());
}

#[test]
fn x_y_diagonals() {
    assert_eq!(gen_x(3, 0), Mat3::identity(1));
    let w = Cyclotomic::root_of_unity(3, 1);
    let w2 = Cyclotomic::root_of_unity(3, 2);
    assert_eq!(gen_y(1, 1), Mat3::diag(w.clone(), w2, Cyclotomic::one(1)));
    // X_1(m) X_2(m) = diag(mu^2, mu^2, mu^2).
    let m = 2;
    let mu2 = Cyclotomic::root_of_unity(9, 2);
    let prod = gen_x(1, m)
        .lift_to(9)
        .unwrap()
        .mat_mul(&gen_x(2, m).lift_to(9).unwrap())
        .unwrap();
    assert_eq!(prod, Mat3::scalar(mu2).lift_to(9).unwrap());
}

#[test]
fn k_and_q() {
    assert!(gen_k().det().is_one());
    assert!(gen_q(1, 2).is_unitary());
    assert!(gen_q(0, 0).det().is_one());
}

#[test]
fn rvw_forms() {
    assert_eq!(gen_rvw(MonomialForm::W, 5, 0, 0, 0), Mat3::identity(1));
    assert_eq!(gen_rvw(MonomialForm::V, 1, 0, 0, 0), gen_e());
    let t = gen_rvw(MonomialForm::T, 4, 1, 2, 3);
    let (perm, _) = t.monomial_decompose().unwrap();
    assert_eq!(crate::mat3::perm_sign(perm), -1);
}

#[test]
fn misc_generators() {
    let d = gen_misc(MiscGen::Diag11Omega);
    assert_eq!(d.pow(3), Mat3::identity(d.conductor()));
    // det of the [729,97] generator: (muh w)(muh w mut)^2 = muh^3 mut^2 = mut^3 = w.
    let j97 = gen_misc(MiscGen::J97);
    assert_eq!(j97.det(), Cyclotomic::root_of_unity(3, 1));
    assert!(!j97.det().is_one());
    // mu T_1(m-j+1) reduces to Y_1(m) at j = m.
    for m in 1..=3u32 {
        let reduced = gen_misc(MiscGen::MuT1 { m, j: m });
        let n = reduced.conductor();
        assert_eq!(reduced, gen_y(1, m).lift_to(n).unwrap());
    }
    assert_eq!(gen_misc(MiscGen::XiDiag { j: 0 }), gen_misc(MiscGen::NuDiag { n: 3 }));
}

#[test]
fn all_generators_are_unitary() {
    let gens = vec![
        gen_e(),
        gen_i(),
        gen_iprime(),
        gen_l(7),
        gen_b(13, 3),
        gen_g(9, 3),
        gen_em(2),
        gen_zm(2),
        gen_t1(2),
        gen_t2(3),
        gen_f(2, 3),
        gen_x(1, 2),
        gen_x(2, 2),
        gen_x(3, 2),
        gen_y(1, 2),
        gen_y(2, 2),
        gen_k(),
        gen_q(1, 2),
        gen_q(0, 0),
        gen_q(2, 3),
        gen_rvw(MonomialForm::S, 8, 1, 5, 2),
        gen_misc(MiscGen::Diag11Omega),
        gen_misc(MiscGen::XiDiag { j: 2 }),
        gen_misc(MiscGen::NuDiag { n: 6 }),
        gen_misc(MiscGen::MuT1 { m: 3, j: 2 }),
        gen_misc(MiscGen::J96),
        gen_misc(MiscGen::J97),
        gen_misc(MiscGen::J98),
    ];
    for g in gens {
        assert!(g.is_unitary());
    }
}

#[test]
fn l_n_has_order_n() {
    for n in 1..=64u32 {
        let l = gen_l(n);
        let id = Mat3::identity(l.conductor());
        let mut p = id.clone();
        for m in 1..n {
            p = p.mat_mul(&l).unwrap();
            assert_ne!(p, id, "L_{n}^{m} = 1 prematurely");
        }
        assert_eq!(p.mat_mul(&l).unwrap(), id);
    }
}

#[test]
fn e_conjugation_cycles_diagonals() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..50 {
        let n = 24;
        let a = Cyclotomic::root_of_unity(n, rng.gen_range(0..n as i64));
        let b = Cyclotomic::root_of_unity(n, rng.gen_range(0..n as i64));
        let c = Cyclotomic::root_of_unity(n, rng.gen_range(0..n as i64));
        let d = Mat3::diag(a.clone(), b.clone(), c.clone()).lift_to(n).unwrap();
        let e = gen_e().lift_to(n).unwrap();
        let conj = e.mat_mul(&d).unwrap().mat_mul(&e.conj_transpose()).unwrap();
        assert_eq!(conj, Mat3::diag(b, c, a).lift_to(n).unwrap());
    }
}
