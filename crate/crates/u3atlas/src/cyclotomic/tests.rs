use super::*;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Independent reduction oracle: dense rational polynomial arithmetic with
/// Phi_n computed from the Moebius product Phi_n = prod (x^d - 1)^mu(n/d),
/// a different route than the iterated-division used by the implementation.
mod oracle {
    use super::*;

    fn moebius(mut n: u32) -> i32 {
        let mut mu = 1;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if n > 1 {
            mu = -mu;
        }
        mu
    }

    fn x_pow_minus_one(d: u32) -> Vec<Rational> {
        let mut p = vec![Rational::zero(); d as usize + 1];
        p[0] = -Rational::one();
        p[d as usize] = Rational::one();
        p
    }

    pub fn phi_poly(n: u32) -> Vec<Rational> {
        let mut num = vec![Rational::one()];
        let mut den = vec![Rational::one()];
        for d in divisors(n) {
            match moebius(n / d) {
                1 => num = mul(&num, &x_pow_minus_one(d)),
                -1 => den = mul(&den, &x_pow_minus_one(d)),
                _ => {}
            }
        }
        let (q, r) = divmod(&num, &den);
        assert!(r.iter().all(|c| c.is_zero()));
        q
    }

    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, ca) in a.iter().enumerate() {
            for (j, cb) in b.iter().enumerate() {
                let t = ca * cb;
                out[i + j] += t;
            }
        }
        out
    }

    pub fn divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let dlen = den.iter().rposition(|c| !c.is_zero()).unwrap() + 1;
        let den = &den[..dlen];
        let mut rem = num.to_vec();
        if num.len() < dlen {
            return (vec![], rem);
        }
        let mut q = vec![Rational::zero(); num.len() - dlen + 1];
        let lead = den[dlen - 1].clone();
        for i in (0..q.len()).rev() {
            let c = &rem[i + dlen - 1] / &lead;
            q[i] = c.clone();
            for (j, dc) in den.iter().enumerate() {
                let t = dc * &c;
                rem[i + j] -= t;
            }
        }
        (q, rem)
    }

    /// Canonical dense form of a polynomial in zeta_n given by exponent
    /// coefficients (any length), reduced mod Phi_n.
    pub fn reduce(n: u32, poly: &[Rational]) -> Vec<Rational> {
        let phi = phi_poly(n);
        let deg = phi.len() - 1;
        let (_, rem) = divmod(poly, &phi);
        let mut out = vec![Rational::zero(); deg];
        for (i, c) in rem.iter().enumerate() {
            if !c.is_zero() {
                out[i] = c.clone();
            }
        }
        out
    }
}

fn zeta(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k)
}

#[test]
fn roots_of_unity_basic() {
    assert!(zeta(1, 0).is_one());
    // 1 + omega + omega^2 = 0
    let s = Cyclotomic::one(1).add(&zeta(3, 1)).add(&zeta(3, 2));
    assert!(s.is_zero());
    // zeta_12^3 = i, and i^2 = -1
    let i = zeta(12, 3);
    assert_eq!(i, zeta(4, 1));
    assert_eq!(i.mul(&i), Cyclotomic::from_integer(-1));
}

#[test]
fn mul_basic() {
    assert_eq!(zeta(7, 1).mul(&zeta(7, 1)), zeta(7, 2));
    assert!(zeta(3, 1).mul(&zeta(3, 2)).is_one());
    assert!(zeta(8, 1).add(&zeta(8, 5)).is_zero());
}

#[test]
fn reduction_matches_oracle_on_random_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for &n in &[8u32, 12, 20, 36, 45, 63] {
        for _ in 0..30 {
            let deg = euler_phi(n) as usize;
            // Random sparse polynomials in zeta_n of exponent up to 2n.
            let mut a_poly = vec![Rational::zero(); 2 * n as usize];
            let mut b_poly = vec![Rational::zero(); 2 * n as usize];
            let mut a = Cyclotomic::zero(n);
            let mut b = Cyclotomic::zero(n);
            for _ in 0..4 {
                let (ea, ca) = (rng.gen_range(0..2 * n as usize), rng.gen_range(-3i64..=3));
                let (eb, cb) = (rng.gen_range(0..2 * n as usize), rng.gen_range(-3i64..=3));
                a_poly[ea] += Rational::from_integer(BigInt::from(ca));
                b_poly[eb] += Rational::from_integer(BigInt::from(cb));
                a = a.add(&zeta(n, (ea % n as usize) as i64).scale(&Rational::from_integer(ca.into())));
                b = b.add(&zeta(n, (eb % n as usize) as i64).scale(&Rational::from_integer(cb.into())));
            }
            let prod = a.mul(&b).lift_to(n).unwrap();
            let expect = oracle::reduce(n, &oracle::mul(&a_poly, &b_poly));
            assert_eq!(prod.coeffs(), expect[..deg.min(expect.len())].to_vec(), "n={n}");
        }
    }
}

#[test]
fn phi_polynomial_agrees_with_moebius_oracle() {
    for n in 1..=64u32 {
        let ours: Vec<Rational> = cyclotomic_polynomial(n)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        assert_eq!(ours, oracle::phi_poly(n), "Phi_{n}");
    }
}

#[test]
fn phi_product_divides_x_n_minus_one() {
    for n in 1..=64u32 {
        let mut prod = vec![BigInt::one()];
        for d in divisors(n) {
            let phid = cyclotomic_polynomial(d);
            let mut out = vec![BigInt::zero(); prod.len() + phid.len() - 1];
            for (i, a) in prod.iter().enumerate() {
                for (j, b) in phid.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            prod = out;
        }
        let mut expect = vec![BigInt::zero(); n as usize + 1];
        expect[0] = -BigInt::one();
        expect[n as usize] = BigInt::one();
        assert_eq!(prod, expect, "prod of Phi_d for d | {n}");
    }
}

#[test]
fn inverse_basic() {
    assert!(Cyclotomic::one(1).inverse().unwrap().is_one());
    assert_eq!(zeta(5, 1).inverse().unwrap(), zeta(5, 4));
    // 1 + omega = -omega^2, so its inverse is -omega:
    // (1 + omega)(-omega) = -omega - omega^2 = 1.
    let v = Cyclotomic::one(3).add(&zeta(3, 1));
    let inv = v.inverse().unwrap();
    assert_eq!(inv, zeta(3, 1).neg());
    assert!(v.mul(&inv).is_one());
    assert!(Cyclotomic::zero(6).inverse().is_err());
}

#[test]
fn conj_basic() {
    assert!(Cyclotomic::one(1).conj().is_one());
    assert_eq!(zeta(4, 1).conj(), zeta(4, 3));
    let a = Cyclotomic::one(3).add(&zeta(3, 1));
    assert!(a.mul(&a.conj()).is_one());
}

#[test]
fn conj_is_automorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = *[6u32, 12, 15, 24, 36].iter().nth(rng.gen_range(0..5)).unwrap();
        let a = random_value(&mut rng, n);
        let b = random_value(&mut rng, n);
        assert_eq!(a.conj().conj(), a);
        assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
    }
}

#[test]
fn lift_and_reduce() {
    assert_eq!(zeta(3, 1).lift_to(12).unwrap(), {
        let mut v = zeta(12, 4);
        v = v.lift_to(12).unwrap();
        v
    });
    assert!(Cyclotomic::one(1).lift_to(7).unwrap().is_one());
    let z6 = zeta(6, 1);
    let lifted = z6.lift_to(12).unwrap();
    assert_eq!(lifted.conductor(), 12);
    assert_eq!(lifted.reduce_to_minimal(), z6);
    assert!(zeta(5, 1).lift_to(12).is_err());
}

#[test]
fn canonical_keys() {
    let z = Cyclotomic::zero(3);
    let s = Cyclotomic::one(3).add(&zeta(3, 1)).add(&zeta(3, 2));
    assert_eq!(z.canonical_key(), s.canonical_key());
    assert_ne!(zeta(7, 1).canonical_key(), zeta(7, 2).canonical_key());
    let a = zeta(6, 1).lift_to(12).unwrap();
    let b = zeta(12, 2);
    assert_eq!(a.canonical_key(), b.lift_to(12).unwrap().canonical_key());
}

#[test]
fn root_orders_up_to_64() {
    for n in 1..=64u32 {
        let z = zeta(n, 1);
        let mut p = Cyclotomic::one(z.conductor());
        for m in 1..n {
            p = p.mul(&z);
            assert!(!p.is_one(), "zeta_{n}^{m} = 1 prematurely");
        }
        assert!(p.mul(&z).is_one(), "zeta_{n}^{n} != 1");
        assert_eq!(z.root_order(), Some(n as u64));
    }
}

fn random_value(rng: &mut ChaCha8Rng, n: u32) -> Cyclotomic {
    let mut v = Cyclotomic::zero(n);
    for _ in 0..3 {
        let e = rng.gen_range(0..n as i64);
        let c = rng.gen_range(-4i64..=4);
        v = v.add(&zeta(n, e).scale(&Rational::from_integer(c.into())));
    }
    v
}

#[test]
fn field_axioms_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let conductors = [2u32, 3, 4, 6, 8, 9, 12, 15, 18, 20, 24, 30, 36];
    for trial in 0..1000 {
        let n = conductors[trial % conductors.len()];
        let a = random_value(&mut rng, n);
        let b = random_value(&mut rng, n);
        let c = random_value(&mut rng, n);
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !a.is_zero() {
            assert!(a.mul(&a.inverse().unwrap()).is_one());
        }
    }
}

#[test]
fn literal_roundtrip() {
    let v = zeta(12, 1)
        .scale(&Rational::new(BigInt::from(-1), BigInt::from(3)))
        .add(&zeta(3, 2).scale(&Rational::from_integer(2.into())));
    let text = format_literal(&v);
    let back = parse_literal(&text).unwrap();
    assert_eq!(back.lift_to(12).unwrap(), v.lift_to(12).unwrap());

    let parsed = parse_literal(" -1/3*E(12)^1+2 * E(3)^2 ").unwrap();
    assert_eq!(parsed.lift_to(12).unwrap(), v.lift_to(12).unwrap());
    assert_eq!(parse_literal("0").unwrap(), Cyclotomic::zero(1));
    assert!(parse_literal("E(").is_err());
    assert!(parse_literal("").is_err());
}

#[test]
fn minimal_conductor_matches_linear_algebra_reduction() {
    // sqrt(3) needs the full 12th cyclotomic field; omega only the 3rd.
    let sqrt3 = zeta(12, 1).sub(&zeta(12, 5));
    assert_eq!(sqrt3.minimal_conductor(), 12);
    assert_eq!(zeta(3, 1).lift_to(36).unwrap().minimal_conductor(), 3);
    assert_eq!(Cyclotomic::from_integer(7).lift_to(24).unwrap().minimal_conductor(), 1);

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for trial in 0..120 {
        let n = [12u32, 20, 24, 36, 45][trial % 5];
        let v = random_value(&mut rng, n);
        let reduced = v.reduce_to_minimal();
        assert_eq!(v.minimal_conductor(), reduced.conductor(), "value {}", format_literal(&v));
    }
}
