//! Per-conductor data shared by all values at that conductor: the cyclotomic
//! polynomial Phi_N and the reduction of x^e modulo Phi_N for phi(N) <= e < N.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

pub(super) struct Context {
    pub n: u32,
    pub phi: u32,
    /// Coefficients of Phi_N, degree phi, monic; small for the conductors in
    /// scope (at most two distinct odd primes), so machine integers suffice.
    pub phi_coeffs: Vec<i64>,
    /// Sparse rows: x^e mod Phi_N for e in phi..n, indexed by e - phi.
    rows: Vec<Vec<(u32, i64)>>,
}

impl Context {
    pub fn reduction_row(&self, e: u32) -> &[(u32, i64)] {
        &self.rows[(e - self.phi) as usize]
    }
}

static CONTEXTS: RwLock<Option<HashMap<u32, Arc<Context>>>> = RwLock::new(None);

pub(super) fn get(n: u32) -> Arc<Context> {
    if let Some(map) = CONTEXTS.read().unwrap().as_ref() {
        if let Some(ctx) = map.get(&n) {
            return ctx.clone();
        }
    }
    let ctx = Arc::new(build(n));
    let mut guard = CONTEXTS.write().unwrap();
    guard
        .get_or_insert_with(HashMap::new)
        .entry(n)
        .or_insert(ctx)
        .clone()
}

fn build(n: u32) -> Context {
    let phi = euler_phi(n);
    let poly = cyclotomic_polynomial(n);
    let phi_coeffs: Vec<i64> = poly
        .iter()
        .map(|c| c.to_i64().expect("cyclotomic polynomial coefficient overflows i64"))
        .collect();
    assert_eq!(phi_coeffs.len() as u32, phi + 1);
    assert_eq!(*phi_coeffs.last().unwrap(), 1);

    // Dense remainders of x^e, built by repeated multiplication by x.
    let phi_us = phi as usize;
    let mut rows = Vec::with_capacity((n - phi) as usize);
    if n > phi {
        // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})
        let mut cur: Vec<i64> = phi_coeffs[..phi_us].iter().map(|c| -c).collect();
        rows.push(sparsify(&cur));
        for _ in phi + 1..n {
            let top = cur[phi_us - 1];
            for j in (1..phi_us).rev() {
                cur[j] = cur[j - 1]
                    .checked_add(
                        top.checked_mul(-phi_coeffs[j]).expect("reduction coefficient overflow"),
                    )
                    .expect("reduction coefficient overflow");
            }
            cur[0] = top.checked_mul(-phi_coeffs[0]).expect("reduction coefficient overflow");
            rows.push(sparsify(&cur));
        }
    }
    Context { n, phi, phi_coeffs, rows }
}

fn sparsify(dense: &[i64]) -> Vec<(u32, i64)> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(j, c)| (j as u32, *c))
        .collect()
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// All positive divisors of n in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Coefficients of Phi_n (constant term first, monic), computed by exact
/// division of x^n - 1 by Phi_d for every proper divisor d of n.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut memo: HashMap<u32, Vec<BigInt>> = HashMap::new();
    cyclo_memo(n, &mut memo)
}

fn cyclo_memo(n: u32, memo: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut poly = num;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phid = cyclo_memo(d, memo);
        poly = poly_div_exact(&poly, &phid);
    }
    memo.insert(n, poly.clone());
    poly
}

/// Exact division of integer polynomials with monic divisor.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().unwrap().is_one());
    let mut rem = num.to_vec();
    let qlen = num.len() - den.len() + 1;
    let mut q = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + den.len() - 1].clone();
        if c.is_zero() {
            continue;
        }
        q[i] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            let t = dc * &c;
            rem[i + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact cyclotomic division");
    q
}
