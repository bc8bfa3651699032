//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! Every phase appearing in a generator matrix is a root of unity, so all
//! matrix entries live in some Q(zeta_N).  A value is kept in canonical form:
//! a polynomial in zeta_N reduced modulo the N-th cyclotomic polynomial
//! Phi_N, with rational coefficients.  Canonical forms make equality a plain
//! comparison and give stable hash keys for the closure sets.
//!
//! Internally the coefficient vector is held sparsely over a common
//! denominator: a list of `(exponent, integer numerator)` pairs plus one
//! positive denominator.  `coeffs` exposes the equivalent dense rational
//! vector of length phi(N).

mod context;
mod literal;

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

pub use context::{euler_phi, cyclotomic_polynomial, divisors};
pub use literal::{format_literal, parse_literal, ParseError};

use context::Context;

/// Arbitrary-precision rational, the coefficient type of all phases.
pub type Rational = num_rational::BigRational;

/// Exact element of Q(zeta_N) in canonical reduced form.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    /// Common positive denominator of all coefficients.
    den: BigInt,
    /// Sparse numerator coefficients, sorted by exponent, all nonzero,
    /// exponents < phi(conductor).  The content of the numerators and the
    /// denominator are coprime, so the representation is unique.
    terms: Vec<(u32, BigInt)>,
}

impl Cyclotomic {
    /// The zero of Q(zeta_n).
    pub fn zero(n: u32) -> Self {
        assert!(n >= 1);
        Cyclotomic { conductor: n, den: BigInt::one(), terms: Vec::new() }
    }

    /// The one of Q(zeta_n).
    pub fn one(n: u32) -> Self {
        Self::from_rational_at(Rational::one(), n)
    }

    /// Embeds a rational constant at conductor n.
    pub fn from_rational_at(q: Rational, n: u32) -> Self {
        assert!(n >= 1);
        let (num, den) = (q.numer().clone(), q.denom().clone());
        let terms = if num.is_zero() { Vec::new() } else { vec![(0u32, num)] };
        let mut v = Cyclotomic { conductor: n, den, terms };
        v.normalize_content();
        v
    }

    /// Embeds a rational constant at conductor 1.
    pub fn from_rational(q: Rational) -> Self {
        Self::from_rational_at(q, 1)
    }

    /// Embeds an integer constant at conductor 1.
    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(k)))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Dense coefficient vector of length phi(conductor).
    pub fn coeffs(&self) -> Vec<Rational> {
        let ctx = context::get(self.conductor);
        let mut out = vec![Rational::zero(); ctx.phi as usize];
        for (e, c) in &self.terms {
            out[*e as usize] = Rational::new(c.clone(), self.den.clone());
        }
        out
    }

    /// Sparse canonical terms as (exponent, rational coefficient).
    pub fn sparse_coeffs(&self) -> Vec<(u32, Rational)> {
        self.terms
            .iter()
            .map(|(e, c)| (*e, Rational::new(c.clone(), self.den.clone())))
            .collect()
    }

    fn normalize_content(&mut self) {
        if self.den.sign() == Sign::Minus {
            self.den = -std::mem::take(&mut self.den);
            for (_, c) in &mut self.terms {
                *c = -std::mem::take(c);
            }
        }
        if self.terms.is_empty() {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
        self.den = &self.den / &g;
        for (_, c) in &mut self.terms {
            *c = &*c / &g;
        }
    }

    /// Builds a canonical value at conductor n from numerator terms with
    /// exponents already wrapped into 0..n, reducing exponents >= phi(n)
    /// modulo Phi_n.
    fn from_wrapped(ctx: &Context, den: BigInt, dense: &mut [BigInt]) -> Self {
        let n = ctx.n as usize;
        let phi = ctx.phi as usize;
        debug_assert_eq!(dense.len(), n);
        for e in phi..n {
            if dense[e].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut dense[e]);
            for &(j, rc) in ctx.reduction_row(e as u32) {
                dense[j as usize] += &c * rc;
            }
        }
        let mut terms = Vec::new();
        for (e, c) in dense.iter_mut().take(phi).enumerate() {
            if !c.is_zero() {
                terms.push((e as u32, std::mem::take(c)));
            }
        }
        let mut v = Cyclotomic { conductor: ctx.n, den, terms };
        v.normalize_content();
        v
    }

    fn from_sparse_wrapped(ctx: &Context, den: BigInt, sparse: Vec<(u32, BigInt)>) -> Self {
        let mut dense = vec![BigInt::zero(); ctx.n as usize];
        for (e, c) in sparse {
            dense[e as usize] += c;
        }
        Self::from_wrapped(ctx, den, &mut dense)
    }

    /// zeta_n^k in canonical form, at the reduced conductor n/gcd(n,k).
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let nn = n as i64;
        let k = k.rem_euclid(nn) as u32;
        let g = k.gcd(&n);
        let (n, k) = if k == 0 { (1, 0) } else { (n / g, k / g) };
        let ctx = context::get(n);
        Self::from_sparse_wrapped(&ctx, BigInt::one(), vec![(k, BigInt::one())])
    }

    /// Same value expressed at conductor target; errors unless conductor | target.
    pub fn lift_to(&self, target: u32) -> Result<Self, ConductorError> {
        if target % self.conductor != 0 {
            return Err(ConductorError { from: self.conductor, to: target });
        }
        if target == self.conductor {
            return Ok(self.clone());
        }
        let scale = target / self.conductor;
        let ctx = context::get(target);
        let sparse = self.terms.iter().map(|(e, c)| (e * scale, c.clone())).collect();
        Ok(Self::from_sparse_wrapped(&ctx, self.den.clone(), sparse))
    }

    fn lift_pair(a: &Self, b: &Self) -> (Self, Self, Arc<Context>) {
        let n = (a.conductor as u64 * b.conductor as u64 / a.conductor.gcd(&b.conductor) as u64) as u32;
        let la = a.lift_to(n).expect("lcm lift");
        let lb = b.lift_to(n).expect("lcm lift");
        (la, lb, context::get(n))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, _ctx) = Self::lift_pair(self, other);
        // Common denominator, merge sorted term lists; exponents stay < phi.
        let g = a.den.gcd(&b.den);
        let ma = &b.den / &g;
        let mb = &a.den / &g;
        let den = &a.den * &ma;
        let mut terms: Vec<(u32, BigInt)> = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() || j < b.terms.len() {
            let pick = if i == a.terms.len() {
                Ordering::Greater
            } else if j == b.terms.len() {
                Ordering::Less
            } else {
                a.terms[i].0.cmp(&b.terms[j].0)
            };
            match pick {
                Ordering::Less => {
                    terms.push((a.terms[i].0, &a.terms[i].1 * &ma));
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push((b.terms[j].0, &b.terms[j].1 * &mb));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.terms[i].1 * &ma + &b.terms[j].1 * &mb;
                    if !c.is_zero() {
                        terms.push((a.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        let mut v = Cyclotomic { conductor: a.conductor, den, terms };
        v.normalize_content();
        v
    }

    pub fn neg(&self) -> Self {
        let mut v = self.clone();
        for (_, c) in &mut v.terms {
            *c = -std::mem::take(c);
        }
        v
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b, ctx) = Self::lift_pair(self, other);
        if a.is_zero() || b.is_zero() {
            return Self::zero(ctx.n);
        }
        let n = ctx.n;
        let den = &a.den * &b.den;
        let mut dense = vec![BigInt::zero(); n as usize];
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = (ea + eb) % n;
                dense[e as usize] += ca * cb;
            }
        }
        Self::from_wrapped(&ctx, den, &mut dense)
    }

    /// Scales by a rational without conductor changes.
    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(self.conductor);
        }
        let mut v = self.clone();
        v.den *= q.denom();
        for (_, c) in &mut v.terms {
            *c = &*c * q.numer();
        }
        v.normalize_content();
        v
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.conductor);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Complex conjugation: zeta_N -> zeta_N^(N-1).  A field automorphism.
    pub fn conj(&self) -> Self {
        let n = self.conductor as u64;
        self.galois(if n == 1 { 1 } else { n - 1 })
    }

    /// The Galois map zeta_N -> zeta_N^t for gcd(t, N) = 1.
    pub fn galois(&self, t: u64) -> Self {
        let n = self.conductor as u64;
        let t = if n == 1 { 0 } else { t % n };
        assert!(n == 1 || (t as u32).gcd(&self.conductor) == 1, "galois exponent must be coprime");
        let ctx = context::get(self.conductor);
        let sparse = self
            .terms
            .iter()
            .map(|(e, c)| (((*e as u64 * t) % n.max(1)) as u32, c.clone()))
            .collect();
        Self::from_sparse_wrapped(&ctx, self.den.clone(), sparse)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm with Phi_N
    /// over the rationals.
    pub fn inverse(&self) -> Result<Self, DivisionByZero> {
        if self.is_zero() {
            return Err(DivisionByZero);
        }
        let ctx = context::get(self.conductor);
        let phi_poly: Vec<Rational> = ctx
            .phi_coeffs
            .iter()
            .map(|c| Rational::from_integer(BigInt::from(*c)))
            .collect();
        let mut a_poly = vec![Rational::zero(); ctx.phi as usize];
        for (e, c) in &self.terms {
            a_poly[*e as usize] = Rational::new(c.clone(), self.den.clone());
        }
        let inv_poly = poly_inverse_mod(&a_poly, &phi_poly);
        let mut den = BigInt::one();
        for c in &inv_poly {
            den = den.lcm(c.denom());
        }
        let terms = inv_poly
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, c.numer() * (&den / c.denom())))
            .collect();
        let mut v = Cyclotomic { conductor: self.conductor, den, terms };
        v.normalize_content();
        Ok(v)
    }

    /// Multiplicative order if the value is a root of unity, else None.
    /// Roots of unity at conductor N have order dividing lcm(N, 2).
    pub fn root_order(&self) -> Option<u64> {
        let bound = num_integer::lcm(self.conductor as u64, 2);
        let mut p = self.clone();
        for k in 1..=bound {
            if p.is_one() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }

    /// Stable byte key: equal canonical values give equal keys, distinct give
    /// distinct keys (at a fixed conductor).
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(16 + 8 * self.terms.len());
        out.extend_from_slice(&self.conductor.to_le_bytes());
        push_bigint(&mut out, &self.den);
        out.extend_from_slice(&(self.terms.len() as u32).to_le_bytes());
        for (e, c) in &self.terms {
            out.extend_from_slice(&e.to_le_bytes());
            push_bigint(&mut out, c);
        }
        out
    }

    /// Smallest divisor d of the conductor with the value inside Q(zeta_d),
    /// found by Galois descent: the value lies in Q(zeta_d) iff it is fixed
    /// by every automorphism zeta -> zeta^t with t = 1 (mod d).  Unlike
    /// `reduce_to_minimal` this never solves a linear system, so it stays
    /// cheap at large conductors.
    pub fn minimal_conductor(&self) -> u32 {
        let n = self.conductor;
        'outer: for d in divisors(n) {
            if d == n {
                break;
            }
            for t in 2..n {
                if (t - 1) % d == 0 && num_integer::gcd(t, n) == 1 && self.galois(t as u64) != *self {
                    continue 'outer;
                }
            }
            return d;
        }
        n
    }

    /// Re-expresses the value at the smallest divisor conductor that holds it.
    pub fn reduce_to_minimal(&self) -> Self {
        let mut best = self.clone();
        for d in divisors(self.conductor) {
            if d == self.conductor {
                break;
            }
            if let Some(v) = self.try_express_in(d) {
                best = v;
                break;
            }
        }
        best
    }

    /// Attempts to rewrite the value at conductor d (d | conductor).
    pub fn try_express_in(&self, d: u32) -> Option<Self> {
        if self.conductor % d != 0 {
            return None;
        }
        if d == self.conductor {
            return Some(self.clone());
        }
        let phi_d = euler_phi(d) as usize;
        let phi_n = euler_phi(self.conductor) as usize;
        // Solve sum_i x_i * lift(zeta_d^i) = self over Q by elimination.
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(phi_d);
        for i in 0..phi_d {
            let b = Cyclotomic::from_sparse_wrapped(
                &context::get(d),
                BigInt::one(),
                vec![(i as u32, BigInt::one())],
            );
            cols.push(b.lift_to(self.conductor).unwrap().coeffs());
        }
        let rhs = self.coeffs();
        let x = solve_rational(phi_n, &cols, &rhs)?;
        let mut den = BigInt::one();
        for c in &x {
            den = den.lcm(c.denom());
        }
        let terms = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, c.numer() * (&den / c.denom())))
            .collect();
        let mut v = Cyclotomic { conductor: d, den, terms };
        v.normalize_content();
        Some(v)
    }
}

impl PartialEq for Cyclotomic {
    /// Value equality: representations at different conductors are compared
    /// after lifting to the least common conductor.
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.terms == other.terms;
        }
        let (a, b, _) = Self::lift_pair(self, other);
        a.den == b.den && a.terms == b.terms
    }
}

impl Eq for Cyclotomic {}

fn push_bigint(out: &mut Vec<u8>, v: &BigInt) {
    let (sign, mag) = v.to_bytes_le();
    out.push(match sign {
        Sign::Minus => 0,
        Sign::NoSign => 1,
        Sign::Plus => 2,
    });
    out.extend_from_slice(&(mag.len() as u32).to_le_bytes());
    out.extend_from_slice(&mag);
}

/// Conductor mismatch on lift.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("conductor {from} does not divide target conductor {to}")]
pub struct ConductorError {
    pub from: u32,
    pub to: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("division by zero in a cyclotomic field")]
pub struct DivisionByZero;

/// Inverse of a modulo m (monic), both as dense rational coefficient vectors.
fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    // Extended Euclid: maintain r0 = m, r1 = a with Bezout coefficients for a.
    let mut r0 = trim(m.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut s0 = vec![];
    let mut s1 = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, rem) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = trim(s2);
    }
    // r0 is a nonzero constant gcd (a invertible mod Phi_N).
    assert_eq!(r0.len(), 1, "value not invertible modulo the cyclotomic polynomial");
    let inv = Rational::one() / r0[0].clone();
    let mut out: Vec<Rational> = s0.iter().map(|c| c * &inv).collect();
    out.resize(m.len() - 1, Rational::zero());
    out
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    if num.len() < den.len() {
        return (vec![], trim(rem));
    }
    let mut q = vec![Rational::zero(); num.len() - den.len() + 1];
    let lead = den.last().unwrap().clone();
    for i in (0..q.len()).rev() {
        let c = &rem[i + den.len() - 1] / &lead;
        if c.is_zero() {
            continue;
        }
        q[i] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            let t = dc * &c;
            rem[i + j] -= t;
        }
    }
    (q, trim(rem))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            let t = ca * cb;
            out[i + j] += t;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    out.resize(a.len().max(b.len()), Rational::zero());
    for (j, cb) in b.iter().enumerate() {
        out[j] -= cb;
    }
    out
}

/// Solves the linear system cols * x = rhs over Q; None if inconsistent.
fn solve_rational(rows: usize, cols: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let ncols = cols.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivot_of_col = vec![None; ncols];
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rational::one() / m[row][col].clone();
        for c in col..=ncols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=ncols {
                    let t = &m[row][c] * &f;
                    m[r][c] -= t;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == rows {
            break;
        }
    }
    for r in row..rows {
        if !m[r][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); ncols];
    for (col, p) in pivot_of_col.iter().enumerate() {
        if let Some(r) = p {
            x[col] = m[*r][ncols].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests;
