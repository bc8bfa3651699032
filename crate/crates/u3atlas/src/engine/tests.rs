use super::*;
use crate::cyclotomic::Cyclotomic;
use crate::genlib::*;

fn delta_12() -> GroupData {
    closure(&[gen_e(), gen_l(2)], 100).unwrap()
}

fn s4() -> GroupData {
    closure(&[gen_e(), gen_l(2), gen_i()], 100).unwrap()
}

fn x3() -> GroupData {
    closure(&[gen_l(3), gen_zm(1)], 100).unwrap()
}

#[test]
fn closure_orders() {
    assert_eq!(closure(&[gen_e()], 10).unwrap().order(), 3);
    assert_eq!(delta_12().order(), 12);
    assert_eq!(s4().order(), 24);
    assert_eq!(closure(&[gen_b(7, 2), gen_em(2)], 100).unwrap().order(), 63);
    assert_eq!(x3().order(), 27);
}

#[test]
fn closure_cap_and_errors() {
    assert!(matches!(
        closure(&[gen_e()], 2),
        Err(ClosureError::CapExceeded { cap: 2 })
    ));
    let bad = Mat3::diag(
        Cyclotomic::from_integer(2),
        Cyclotomic::one(1),
        Cyclotomic::one(1),
    );
    assert!(matches!(
        closure(&[bad], 10),
        Err(ClosureError::NonUnitaryGenerator { index: 0 })
    ));
    assert!(matches!(closure(&[], 10), Err(ClosureError::NoGenerators)));
}

#[test]
fn group_invariants() {
    for g in [delta_12(), s4(), x3()] {
        // Identity sits at index 0.
        assert_eq!(g.element(0), &Mat3::identity(g.conductor()));
        let n = g.order() as u32;
        for x in 0..n {
            // Inverse present and correct both ways.
            let xi = g.inverse_of(x);
            assert_eq!(g.mult(x, xi), 0);
            assert_eq!(g.mult(xi, x), 0);
            // Lagrange: element orders divide |G|.
            assert_eq!(n as u64 % g.element_order(x), 0);
        }
    }
}

#[test]
fn table_matches_matrix_products() {
    let g = delta_12();
    for a in 0..g.order() as u32 {
        for b in 0..g.order() as u32 {
            let prod = g.element(a).mat_mul(g.element(b)).unwrap();
            assert_eq!(g.index_of(&prod), Some(g.mult(a, b)));
        }
    }
}

#[test]
fn exponent_and_element_orders() {
    let g = delta_12();
    assert_eq!(g.element_order(0), 1);
    let e_idx = g.index_of(&gen_e()).unwrap();
    assert_eq!(g.element_order(e_idx), 3);
    assert_eq!(g.exponent(), 6);
}

#[test]
fn center_examples() {
    let abelian = closure(&[gen_l(4)], 100).unwrap();
    assert_eq!(abelian.center().len(), abelian.order());
    assert_eq!(x3().center().len(), 3);
}

#[test]
fn derived_subgroup_examples() {
    let g = delta_12();
    let d = g.derived_subgroup();
    assert_eq!(d.order(), 4);
    // Independent oracle: brute-force commutator closure on matrices.
    let mut comms: Vec<Mat3> = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            let ab = a.mat_mul(b).unwrap();
            let ba = b.mat_mul(a).unwrap();
            // [a,b] = a^-1 b^-1 a b solves ba * c = ab.
            let c = ba.conj_transpose().mat_mul(&ab).unwrap();
            if !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    let oracle = closure(&comms, 100).unwrap();
    assert_eq!(oracle.order(), d.order());
    for m in d.elements() {
        assert!(oracle.index_of(m).is_some());
    }
}

#[test]
fn abelian_invariants_examples() {
    assert_eq!(delta_12().abelian_invariants(), vec![3]);
    assert_eq!(s4().abelian_invariants(), vec![2]);
    let trivial = closure(&[Mat3::identity(1)], 10).unwrap();
    assert_eq!(trivial.abelian_invariants(), Vec::<u64>::new());
    let l12 = closure(&[gen_l(12)], 100).unwrap();
    assert_eq!(l12.abelian_invariants(), vec![3, 4]);
}

#[test]
fn conjugacy_class_examples() {
    let l5 = closure(&[gen_l(5)], 100).unwrap();
    let c = l5.conjugacy_classes();
    assert_eq!(c.count(), 5);
    assert!(c.sizes.iter().all(|&s| s == 1));

    for (g, expected) in [(delta_12(), 4usize), (s4(), 5)] {
        let c = g.conjugacy_classes();
        assert_eq!(c.count(), expected);
        // Class equation.
        assert_eq!(c.sizes.iter().sum::<u64>(), g.order() as u64);
        assert_eq!(c.reps[0], 0);
        assert_eq!(c.sizes[0], 1);
        // inverse_class is an involution.
        for k in 0..c.count() as u32 {
            assert_eq!(c.inverse_class[c.inverse_class[k as usize] as usize], k);
        }
        // Independent oracle: k * |G| commuting pairs.
        let n = g.order() as u32;
        let mut pairs = 0u64;
        for a in 0..n {
            for b in 0..n {
                if g.mult(a, b) == g.mult(b, a) {
                    pairs += 1;
                }
            }
        }
        assert_eq!(pairs, expected as u64 * g.order() as u64);
    }
}

#[test]
fn su3_and_det_image() {
    let delta_54 = closure(&[gen_e(), gen_i(), gen_l(3)], 100).unwrap();
    assert!(delta_54.is_subgroup_of_su3());
    assert_eq!(delta_54.det_image_order(), 1);

    let t7 = closure(&[gen_b(7, 2), gen_em(2)], 100).unwrap();
    assert!(!t7.is_subgroup_of_su3());
    // det E_2 = mu^3 = w, a cube root of unity.
    assert_eq!(t7.det_image_order(), 3);
    assert_eq!(t7.order() as u64 % t7.det_image_order(), 0);
}

#[test]
fn nilpotency_examples() {
    assert!(closure(&[gen_l(8)], 100).unwrap().is_nilpotent());
    assert!(!delta_12().is_nilpotent());
    // 27 = 3^3: p-groups are nilpotent.
    assert!(x3().is_nilpotent());
}

#[test]
fn cyclic_direct_factor_examples() {
    let minus_one = Mat3::scalar(Cyclotomic::from_integer(-1));
    let a4_x_z2 = closure(&[gen_e(), gen_l(2), minus_one], 100).unwrap();
    assert_eq!(a4_x_z2.order(), 24);
    assert_eq!(a4_x_z2.has_cyclic_direct_factor(), Some(2));

    assert_eq!(delta_12().has_cyclic_direct_factor(), None);
    assert_eq!(s4().has_cyclic_direct_factor(), None);

    // Z_4 as <diag(i, -i, 1)>.
    let i = Cyclotomic::root_of_unity(4, 1);
    let z4 = closure(&[Mat3::diag(i.clone(), i.conj(), Cyclotomic::one(1))], 100).unwrap();
    assert_eq!(z4.order(), 4);
    assert_eq!(z4.has_cyclic_direct_factor(), Some(4));

    let zeta5 = Mat3::scalar(Cyclotomic::root_of_unity(5, 1));
    let delta_12_x_z5 = closure(&[gen_e(), gen_l(2), zeta5], 500).unwrap();
    assert_eq!(delta_12_x_z5.order(), 60);
    assert_eq!(delta_12_x_z5.has_cyclic_direct_factor(), Some(5));
}

#[test]
fn monomial_class_examples() {
    let delta_27 = closure(&[gen_e(), gen_l(3)], 100).unwrap();
    assert_eq!(delta_27.monomial_class(), MonomialClass::Rvw);
    assert_eq!(s4().monomial_class(), MonomialClass::MonomialStu);
    let with_k = closure(&[gen_k()], 1000).unwrap();
    assert_eq!(with_k.monomial_class(), MonomialClass::NonMonomial);
}

#[test]
fn trace_digest_is_conductor_independent() {
    // Same matrix group enumerated at conductor 2 and lifted to conductor 12.
    let a = closure(&[gen_l(2)], 10).unwrap();
    let b = closure(&[gen_l(2).lift_to(12).unwrap()], 10).unwrap();
    assert_eq!(a.order(), b.order());
    assert_ne!(a.conductor(), b.conductor());
    assert_eq!(a.trace_multiset_digest(), b.trace_multiset_digest());

    // Generator order must not matter either.
    let c = closure(&[gen_l(2), gen_e()], 100).unwrap();
    assert_eq!(delta_12().trace_multiset_digest(), c.trace_multiset_digest());
}

#[test]
fn fingerprint_examples() {
    let f1 = delta_12().fingerprint(1).unwrap();
    let l12 = closure(&[gen_l(12)], 100).unwrap();
    let f2 = l12.fingerprint(1).unwrap();
    // Same order, different groups.
    assert_eq!(f1.order, f2.order);
    assert_ne!(f1, f2);
    // Seed independence.
    assert_eq!(f1, delta_12().fingerprint(99).unwrap());
}

#[test]
fn factorize_small() {
    assert_eq!(factorize(1), vec![]);
    assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
    assert_eq!(factorize(1983), vec![(3, 1), (661, 1)]);
}
