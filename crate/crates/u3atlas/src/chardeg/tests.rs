use super::*;
use crate::engine::closure;
use crate::genlib::*;

fn delta_12() -> crate::engine::GroupData {
    closure(&[gen_e(), gen_l(2)], 100).unwrap()
}

fn s4() -> crate::engine::GroupData {
    closure(&[gen_e(), gen_l(2), gen_i()], 100).unwrap()
}

#[test]
fn profile_accessors_and_display() {
    let p = DegreeProfile::from_pairs(&[(3, 1), (1, 3)]);
    assert_eq!(p.count_of(1), 3);
    assert_eq!(p.count_of(2), 0);
    assert_eq!(p.total(), 4);
    assert_eq!(p.sum_of_squares(), 12);
    assert_eq!(p.to_string(), "{1:3,3:1}");
    assert_eq!(p.doubled(), DegreeProfile::from_pairs(&[(1, 6), (3, 2)]));
}

#[test]
fn class_algebra_invariants() {
    let g = delta_12();
    let c = g.conjugacy_classes();
    let alg = class_algebra(&g, &c);
    let k = alg.k;
    for i in 0..k {
        for j in 0..k {
            // Sum rule: sum_k a_ijk h_k = h_i h_j.
            let total: u64 = (0..k).map(|kk| alg.coeff(i, j, kk) as u64 * alg.h[kk]).sum();
            assert_eq!(total, alg.h[i] * alg.h[j]);
            // Commutativity of the class algebra.
            for kk in 0..k {
                assert_eq!(alg.coeff(i, j, kk), alg.coeff(j, i, kk));
            }
        }
    }
}

#[test]
fn class_algebra_oracle_brute_force() {
    // Count products of class elements directly against the coefficients.
    let g = delta_12();
    let c = g.conjugacy_classes();
    let alg = class_algebra(&g, &c);
    let k = alg.k;
    let n = g.order() as u32;
    for i in 0..k {
        for j in 0..k {
            for kk in 0..k {
                let z = c.reps[kk];
                let mut count = 0u32;
                for x in 0..n {
                    for y in 0..n {
                        if c.class_of[x as usize] == i as u32
                            && c.class_of[y as usize] == j as u32
                            && g.mult(x, y) == z
                        {
                            count += 1;
                        }
                    }
                }
                assert_eq!(alg.coeff(i, j, kk), count);
            }
        }
    }
}

#[test]
fn abelian_class_algebra_is_permutation_like() {
    let g = closure(&[gen_l(5)], 100).unwrap();
    let c = g.conjugacy_classes();
    let alg = class_algebra(&g, &c);
    for i in 0..alg.k {
        for j in 0..alg.k {
            let nonzero: Vec<u32> =
                (0..alg.k).map(|kk| alg.coeff(i, j, kk)).filter(|&a| a != 0).collect();
            assert_eq!(nonzero, vec![1]);
        }
    }
}

#[test]
fn choose_prime_examples() {
    assert_eq!(choose_prime(&delta_12()), 7);
    assert_eq!(choose_prime(&s4()), 13);
    // Scan for a prime = 1 (mod 21) exceeding 2*sqrt(63) = 15.8.
    assert_eq!(admissible_primes(21, 63).next(), Some(43));
    // T_7^(2)(2) itself has exponent 63 (E_2 has order 9, B_7,2 order 7).
    let t7 = closure(&[gen_b(7, 2), gen_em(2)], 100).unwrap();
    assert_eq!(t7.exponent(), 63);
    assert_eq!(choose_prime(&t7), 127);
}

#[test]
fn character_degrees_examples() {
    assert_eq!(
        character_degrees(&delta_12()).unwrap(),
        DegreeProfile::from_pairs(&[(1, 3), (3, 1)])
    );
    assert_eq!(
        character_degrees(&s4()).unwrap(),
        DegreeProfile::from_pairs(&[(1, 2), (2, 1), (3, 2)])
    );
    let l6 = closure(&[gen_l(6)], 100).unwrap();
    assert_eq!(character_degrees(&l6).unwrap(), DegreeProfile::from_pairs(&[(1, 6)]));
    let t7 = closure(&[gen_b(7, 2), gen_em(2)], 100).unwrap();
    assert_eq!(
        character_degrees(&t7).unwrap(),
        DegreeProfile::from_pairs(&[(1, 9), (3, 6)])
    );
    let trivial = closure(&[crate::mat3::Mat3::identity(1)], 10).unwrap();
    assert_eq!(character_degrees(&trivial).unwrap(), DegreeProfile::from_pairs(&[(1, 1)]));
}

#[test]
fn prime_independence() {
    for g in [delta_12(), s4()] {
        let mut primes = admissible_primes(g.exponent(), g.order() as u64);
        let p1 = primes.next().unwrap();
        let p2 = primes.next().unwrap();
        assert_ne!(p1, p2);
        assert_eq!(
            character_degrees_with_prime(&g, p1, 0).unwrap(),
            character_degrees_with_prime(&g, p2, 0).unwrap()
        );
    }
}

#[test]
fn verify_profile_examples() {
    let delta_27 = closure(&[gen_e(), gen_l(3)], 100).unwrap();
    assert!(verify_profile(&DegreeProfile::from_pairs(&[(1, 9), (3, 2)]), &delta_27));
    assert!(!verify_profile(&DegreeProfile::from_pairs(&[(1, 2), (3, 1)]), &delta_12()));
    assert!(verify_profile(&character_degrees(&delta_12()).unwrap(), &delta_12()));
}

#[test]
fn sqrt_mod_roundtrip() {
    for p in [7u64, 13, 43, 97, 193] {
        for x in 0..p {
            let sq = x * x % p;
            let r = sqrt_mod(sq, p).unwrap();
            assert!(r == x || r == p - x, "p={p} x={x} r={r}");
        }
    }
}

#[test]
fn seed_independence() {
    let g = s4();
    assert_eq!(
        character_degrees_seeded(&g, 3).unwrap(),
        character_degrees_seeded(&g, 1234567).unwrap()
    );
}
