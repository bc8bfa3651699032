//! Irreducible-representation dimension profiles by the Burnside-Dixon
//! method: the class algebra is diagonalized over a prime field F_p with
//! p = 1 (mod exponent), and each irrep degree is recovered from the
//! orthogonality relation by a modular square root.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::engine::{ConjClasses, GroupData};

/// Multiset of irrep dimensions: dimension -> number of inequivalent irreps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct DegreeProfile {
    counts: BTreeMap<u64, u64>,
}

impl DegreeProfile {
    pub fn from_pairs(pairs: &[(u64, u64)]) -> Self {
        let mut counts = BTreeMap::new();
        for &(d, c) in pairs {
            assert!(d >= 1 && c >= 1);
            *counts.entry(d).or_insert(0) += c;
        }
        DegreeProfile { counts }
    }

    pub fn from_degrees<I: IntoIterator<Item = u64>>(degrees: I) -> Self {
        let mut counts = BTreeMap::new();
        for d in degrees {
            *counts.entry(d).or_insert(0) += 1;
        }
        DegreeProfile { counts }
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn count_of(&self, d: u64) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    /// Total number of inequivalent irreps.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Sum of squared dimensions; equals |G| for a correct profile.
    pub fn sum_of_squares(&self) -> u64 {
        self.counts.iter().map(|(d, c)| d * d * c).sum()
    }

    /// The profile with every multiplicity doubled.
    pub fn doubled(&self) -> Self {
        DegreeProfile { counts: self.counts.iter().map(|(&d, &c)| (d, 2 * c)).collect() }
    }
}

impl std::fmt::Display for DegreeProfile {
    /// Renders as `{1:3,3:1}` in ascending dimension order.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, (d, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}:{c}")?;
        }
        write!(f, "}}")
    }
}

/// Exact class multiplication coefficients a_ijk: the number of ways a
/// product of an element of class i and one of class j equals the fixed
/// representative of class k.
pub struct ClassAlgebra {
    /// Class count.
    pub k: usize,
    /// Class sizes h_k.
    pub h: Vec<u64>,
    /// Inverse-class map.
    pub inv: Vec<u32>,
    /// Sparse coefficient rows: a[i * k + kk] lists the nonzero (j, a_ijk).
    a: Vec<Vec<(u32, u32)>>,
}

impl ClassAlgebra {
    pub fn coeff(&self, i: usize, j: usize, kk: usize) -> u32 {
        self.a[i * self.k + kk]
            .iter()
            .find(|&&(jj, _)| jj as usize == j)
            .map_or(0, |&(_, c)| c)
    }
}

/// Counts the coefficients a_ijk = #{x in C_i : x^-1 z_k in C_j}.
pub fn class_algebra(g: &GroupData, c: &ConjClasses) -> ClassAlgebra {
    let k = c.count();
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); k];
    for (x, &cls) in c.class_of.iter().enumerate() {
        members[cls as usize].push(x as u32);
    }
    let mut a = vec![Vec::new(); k * k];
    let mut scratch = vec![0u32; k];
    for i in 0..k {
        let inverses: Vec<u32> = members[i].iter().map(|&x| g.inverse_of(x)).collect();
        for kk in 0..k {
            let z = c.reps[kk];
            let mut touched = Vec::new();
            for &xi in &inverses {
                let j = c.class_of[g.mult(xi, z) as usize];
                if scratch[j as usize] == 0 {
                    touched.push(j);
                }
                scratch[j as usize] += 1;
            }
            touched.sort_unstable();
            let row = &mut a[i * k + kk];
            for j in touched {
                row.push((j, scratch[j as usize]));
                scratch[j as usize] = 0;
            }
        }
    }
    ClassAlgebra { k, h: c.sizes.clone(), inv: c.inverse_class.clone(), a }
}

/// Primes usable for degree extraction: p = 1 (mod exponent), p does not
/// divide |G|, and p > 2*floor(sqrt(|G|)) so degrees are unique mod p.
pub fn admissible_primes(exponent: u64, order: u64) -> impl Iterator<Item = u64> {
    let bound = 2 * order.isqrt();
    (1u64..)
        .map(move |m| m * exponent + 1)
        .filter(move |&p| p > bound && order % p != 0 && is_prime(p))
}

/// Smallest admissible prime.
pub fn choose_prime(g: &GroupData) -> u64 {
    admissible_primes(g.exponent(), g.order() as u64).next().unwrap()
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DegreeError {
    #[error("class algebra failed to split after {attempts} random combinations")]
    SplitFailure { attempts: u32 },
    #[error("no integer degree <= floor(sqrt(|G|)) squares to residue {residue} mod {prime}")]
    NonIntegerDegree { residue: u64, prime: u64 },
}

/// Seed used by [`character_degrees`] for the randomized splitting vectors.
pub const DEFAULT_SEED: u64 = 0x5eed_cafe;
const MAX_ATTEMPTS: u32 = 24;

/// Degree profile with the default deterministic seed.
pub fn character_degrees(g: &GroupData) -> Result<DegreeProfile, DegreeError> {
    character_degrees_seeded(g, DEFAULT_SEED)
}

pub fn character_degrees_seeded(g: &GroupData, seed: u64) -> Result<DegreeProfile, DegreeError> {
    let classes = g.conjugacy_classes();
    let algebra = class_algebra(g, &classes);
    // Any admissible prime is correct, but with p close to the class count
    // squared the random class-algebra element almost surely has colliding
    // eigenvalues mod p, forcing the slow degenerate-subspace path for
    // nearly every root.  Requiring p >> k^2 makes the one-pass Krylov
    // split succeed with high probability.
    let k = algebra.k as u64;
    let p = admissible_primes(g.exponent(), g.order() as u64)
        .find(|&p| p > 8 * k * k)
        .expect("admissible primes are infinite by Dirichlet");
    degrees_from_algebra(&algebra, g.order() as u64, p, seed)
}

/// Full Burnside-Dixon run over F_p for a caller-chosen admissible prime.
pub fn character_degrees_with_prime(
    g: &GroupData,
    p: u64,
    seed: u64,
) -> Result<DegreeProfile, DegreeError> {
    let classes = g.conjugacy_classes();
    let algebra = class_algebra(g, &classes);
    degrees_from_algebra(&algebra, g.order() as u64, p, seed)
}

/// True iff the profile satisfies all three counting identities for G.
pub fn verify_profile(profile: &DegreeProfile, g: &GroupData) -> bool {
    let order = g.order() as u64;
    let class_count = g.conjugacy_classes().count() as u64;
    let ab: u64 = g.abelian_invariants().iter().product();
    profile.sum_of_squares() == order
        && profile.total() == class_count
        && profile.count_of(1) == ab
}

fn degrees_from_algebra(
    algebra: &ClassAlgebra,
    order: u64,
    p: u64,
    seed: u64,
) -> Result<DegreeProfile, DegreeError> {
    let k = algebra.k;
    if k == 1 {
        return Ok(DegreeProfile::from_pairs(&[(1, 1)]));
    }
    let fp = Fp(p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_err = DegreeError::SplitFailure { attempts: MAX_ATTEMPTS };
    'attempt: for _ in 0..MAX_ATTEMPTS {
        // Random element of the class algebra in its regular representation.
        let t: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        let mut m = vec![0u64; k * k];
        for i in 0..k {
            if t[i] == 0 {
                continue;
            }
            for kk in 0..k {
                for &(j, c) in &algebra.a[i * k + kk] {
                    let cell = &mut m[j as usize * k + kk];
                    *cell = fp.add(*cell, fp.mul(t[i], c as u64));
                }
            }
        }
        let w: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        let (f, krylov) = vector_minpoly(&m, k, w, &fp);
        let deg = f.len() - 1;
        let mut roots = Vec::new();
        find_roots(&f, &fp, &mut rng, &mut roots);
        if roots.len() != deg {
            continue;
        }
        roots.sort_unstable();
        // A second random projection distinguishes one-dimensional
        // eigenspaces (projections proportional) from degenerate ones.
        let w2: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        let mut krylov2 = vec![w2];
        for _ in 1..deg.max(1) {
            let next = matvec(&m, k, krylov2.last().unwrap(), &fp);
            krylov2.push(next);
        }
        let mut eigvecs: Vec<Vec<u64>> = Vec::with_capacity(k);
        for &lambda in &roots {
            let q = synthetic_division(&f, lambda, &fp);
            let v = combine(&q, &krylov, k, &fp);
            let v2 = combine(&q, &krylov2, k, &fp);
            if !v.iter().all(|&x| x == 0) && proportional(&v, &v2, &fp) && deg == k {
                eigvecs.push(v);
            } else {
                // Degenerate (or suspect) eigenvalue: take the whole
                // eigenspace of M and split it with individual class
                // matrices, which jointly separate all characters.
                let mut shifted = m.clone();
                for d in 0..k {
                    shifted[d * k + d] = fp.sub(shifted[d * k + d], lambda);
                }
                let space = kernel(&shifted, k, &fp);
                match split_subspace(algebra, space, &fp, &mut rng) {
                    Some(units) => eigvecs.extend(units),
                    None => continue 'attempt,
                }
            }
        }
        if eigvecs.len() != k {
            continue;
        }

        let inv_h: Vec<u64> = algebra.h.iter().map(|&h| fp.inv(h % p)).collect();
        let order_mod = order % p;
        let isqrt_order = order.isqrt();
        let mut degrees = Vec::with_capacity(k);
        for v in &eigvecs {
            // Normalize the identity-class coordinate to 1.
            if v[0] == 0 {
                continue 'attempt;
            }
            let scale = fp.inv(v[0]);
            let omega: Vec<u64> = v.iter().map(|&x| fp.mul(x, scale)).collect();
            // d^2 = |G| / sum_k omega_k omega_inv(k) / h_k.
            let mut s = 0u64;
            for j in 0..k {
                let term = fp.mul(fp.mul(omega[j], omega[algebra.inv[j] as usize]), inv_h[j]);
                s = fp.add(s, term);
            }
            if s == 0 {
                continue 'attempt;
            }
            let d2 = fp.mul(order_mod, fp.inv(s));
            let Some(r) = sqrt_mod(d2, p) else {
                last_err = DegreeError::NonIntegerDegree { residue: d2, prime: p };
                continue 'attempt;
            };
            let d = if r <= isqrt_order {
                r
            } else if p - r <= isqrt_order {
                p - r
            } else {
                last_err = DegreeError::NonIntegerDegree { residue: d2, prime: p };
                continue 'attempt;
            };
            degrees.push(d);
        }
        // The sum rule certifies the whole decomposition.
        if degrees.iter().map(|&d| d * d).sum::<u64>() == order {
            return Ok(DegreeProfile::from_degrees(degrees));
        }
    }
    Err(last_err)
}

fn matvec(m: &[u64], k: usize, v: &[u64], fp: &Fp) -> Vec<u64> {
    let p = fp.0 as u128;
    let mut out = vec![0u64; k];
    for (r, slot) in out.iter_mut().enumerate() {
        let row = &m[r * k..(r + 1) * k];
        let mut acc: u128 = 0;
        for (a, b) in row.iter().zip(v) {
            acc += (*a as u128) * (*b as u128);
        }
        *slot = (acc % p) as u64;
    }
    out
}

/// sum_i q_i * krylov_i.
fn combine(q: &[u64], krylov: &[Vec<u64>], k: usize, fp: &Fp) -> Vec<u64> {
    let mut v = vec![0u64; k];
    for (qi, kv) in q.iter().zip(krylov) {
        if *qi == 0 {
            continue;
        }
        for (vr, kr) in v.iter_mut().zip(kv) {
            *vr = fp.add(*vr, fp.mul(*qi, *kr));
        }
    }
    v
}

/// True iff b is a scalar multiple of the nonzero vector a.
fn proportional(a: &[u64], b: &[u64], fp: &Fp) -> bool {
    let Some(i) = a.iter().position(|&x| x != 0) else {
        return false;
    };
    let scale = fp.mul(b[i], fp.inv(a[i]));
    a.iter().zip(b).all(|(&x, &y)| fp.mul(x, scale) == y)
}

/// Minimal polynomial of w under m (monic coefficient vector, low to high)
/// plus the Krylov vectors w, m w, ..., m^(deg-1) w.
fn vector_minpoly(m: &[u64], k: usize, w: Vec<u64>, fp: &Fp) -> (Vec<u64>, Vec<Vec<u64>>) {
    let mut ech = Echelon::new(k);
    // Parallel combination row per echelon row, in Krylov coordinates.
    let mut combos: Vec<Vec<u64>> = Vec::new();
    let mut powers = vec![w];
    loop {
        let d = powers.len() - 1;
        let mut v = powers[d].clone();
        let mut combo = vec![0u64; k + 2];
        combo[d] = 1;
        for (row, rcombo) in ech.rows.iter().zip(&combos) {
            let pivot = row.iter().position(|&x| x != 0).unwrap();
            let c = v[pivot];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = fp.sub(*x, fp.mul(c, *y));
                }
                for (x, y) in combo.iter_mut().zip(rcombo) {
                    *x = fp.sub(*x, fp.mul(c, *y));
                }
            }
        }
        if v.iter().all(|&x| x == 0) {
            combo.truncate(d + 1);
            powers.truncate(d);
            return (combo, powers);
        }
        let pivot = v.iter().position(|&x| x != 0).unwrap();
        let inv = fp.inv(v[pivot]);
        for x in v.iter_mut() {
            *x = fp.mul(*x, inv);
        }
        for x in combo.iter_mut() {
            *x = fp.mul(*x, inv);
        }
        ech.rows.push(v);
        combos.push(combo);
        let next = matvec(m, k, powers.last().unwrap(), fp);
        powers.push(next);
    }
}

/// Basis (reduced rows) of the kernel of a k x k matrix.
fn kernel(m: &[u64], k: usize, fp: &Fp) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = (0..k).map(|r| m[r * k..(r + 1) * k].to_vec()).collect();
    let mut pivot_col = Vec::new();
    let mut rank = 0;
    for col in 0..k {
        let Some(piv) = (rank..k).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = fp.inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = fp.mul(*x, inv);
        }
        for r in 0..k {
            if r != rank && rows[r][col] != 0 {
                let c = rows[r][col];
                for cc in 0..k {
                    let t = fp.mul(c, rows[rank][cc]);
                    rows[r][cc] = fp.sub(rows[r][cc], t);
                }
            }
        }
        pivot_col.push(col);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..k {
        if pivot_col.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; k];
        v[free] = 1;
        for (r, &pc) in pivot_col.iter().enumerate() {
            v[pc] = fp.neg(rows[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Reduced-echelon row basis with pivot bookkeeping.
struct Echelon {
    rows: Vec<Vec<u64>>,
}

impl Echelon {
    fn new(_dim: usize) -> Self {
        Echelon { rows: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).unwrap())
            .collect()
    }

    /// Reduces v against the basis; inserts the residue if independent.
    /// Returns true when the rank grew.
    fn insert(&mut self, v: &[u64], fp: &Fp) -> bool {
        let mut v = v.to_vec();
        for row in &self.rows {
            let pivot = row.iter().position(|&x| x != 0).unwrap();
            let c = v[pivot];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = fp.sub(*x, fp.mul(c, *y));
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = fp.inv(v[pivot]);
        for x in v.iter_mut() {
            *x = fp.mul(*x, inv);
        }
        // Keep the basis reduced: clear this pivot from existing rows.
        for row in &mut self.rows {
            let c = row[pivot];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = fp.sub(*x, fp.mul(c, *y));
                }
            }
        }
        self.rows.push(v);
        true
    }
}

/// Splits an invariant subspace (given by echelon-reduced ambient basis
/// rows) into one-dimensional common eigenspaces using the individual
/// class matrices.  Returns None only on numerical anomalies.
fn split_subspace(
    algebra: &ClassAlgebra,
    space: Vec<Vec<u64>>,
    fp: &Fp,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Vec<u64>>> {
    let k = algebra.k;
    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut pending: Vec<Vec<Vec<u64>>> = vec![echelonize(space, fp)?];
    for i in 1..k {
        if pending.is_empty() {
            break;
        }
        // Dense class matrix B_i.
        let mut b = vec![0u64; k * k];
        for kk in 0..k {
            for &(j, c) in &algebra.a[i * k + kk] {
                b[j as usize * k + kk] = c as u64 % fp.0;
            }
        }
        let mut next_pending = Vec::new();
        for s in pending.drain(..) {
            let d = s.len();
            if d == 1 {
                done.push(s.into_iter().next().unwrap());
                continue;
            }
            let r = restriction(&b, k, &s, fp)?;
            let parts = eigen_split(&r, d, fp, rng)?;
            if parts.len() == 1 {
                // B_i does not separate this subspace; try the next one.
                next_pending.push(s);
                continue;
            }
            for ker in parts {
                // Back to ambient coordinates.
                let amb: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|coords| {
                        let mut v = vec![0u64; k];
                        for (c, row) in coords.iter().zip(&s) {
                            if *c != 0 {
                                for (x, y) in v.iter_mut().zip(row) {
                                    *x = fp.add(*x, fp.mul(*c, *y));
                                }
                            }
                        }
                        v
                    })
                    .collect();
                if amb.len() == 1 {
                    done.push(amb.into_iter().next().unwrap());
                } else {
                    next_pending.push(echelonize(amb, fp)?);
                }
            }
        }
        pending = next_pending;
    }
    // Leftover single-dimensional pieces are finished too.
    for s in pending {
        if s.len() == 1 {
            done.push(s.into_iter().next().unwrap());
        } else {
            return None;
        }
    }
    Some(done)
}

fn echelonize(rows: Vec<Vec<u64>>, fp: &Fp) -> Option<Vec<Vec<u64>>> {
    let dim = rows.first()?.len();
    let mut ech = Echelon::new(dim);
    let n = rows.len();
    for r in rows {
        ech.insert(&r, fp);
    }
    if ech.rank() != n {
        return None;
    }
    Some(ech.rows)
}

/// Matrix of B restricted to the span of the reduced-echelon rows of s,
/// in the basis given by those rows; None if the span is not invariant.
fn restriction(b: &[u64], k: usize, s: &[Vec<u64>], fp: &Fp) -> Option<Vec<u64>> {
    let d = s.len();
    let pivots: Vec<usize> = s
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).unwrap())
        .collect();
    let mut r = vec![0u64; d * d];
    for (col, basis_vec) in s.iter().enumerate() {
        let u = matvec(b, k, basis_vec, fp);
        // Reduced echelon basis: the coordinate on row t is u[pivot_t].
        let coords: Vec<u64> = pivots.iter().map(|&pc| u[pc]).collect();
        // Invariance check: the coordinates must reproduce u exactly.
        let mut check = vec![0u64; k];
        for (c, row) in coords.iter().zip(s) {
            if *c != 0 {
                for (x, y) in check.iter_mut().zip(row) {
                    *x = fp.add(*x, fp.mul(*c, *y));
                }
            }
        }
        if check != u {
            return None;
        }
        for t in 0..d {
            r[t * d + col] = coords[t];
        }
    }
    Some(r)
}

/// Full eigenspace decomposition of a small diagonalizable matrix; each
/// part is a kernel basis in local coordinates.
fn eigen_split(
    r: &[u64],
    d: usize,
    fp: &Fp,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Vec<Vec<u64>>>> {
    let mut parts: Vec<Vec<Vec<u64>>> = Vec::new();
    let mut seen_roots: Vec<u64> = Vec::new();
    let mut covered = Echelon::new(d);
    while covered.rank() < d {
        // Probe along a coordinate outside the covered space.
        let pivots = covered.pivots();
        let free = (0..d).find(|c| !pivots.contains(c))?;
        let mut w = vec![0u64; d];
        w[free] = 1;
        let (f, _) = vector_minpoly(r, d, w, fp);
        let mut roots = Vec::new();
        find_roots(&f, fp, rng, &mut roots);
        if roots.len() != f.len() - 1 {
            return None;
        }
        let before = covered.rank();
        for lambda in roots {
            if seen_roots.contains(&lambda) {
                continue;
            }
            seen_roots.push(lambda);
            let mut shifted = r.to_vec();
            for i in 0..d {
                shifted[i * d + i] = fp.sub(shifted[i * d + i], lambda);
            }
            let ker = kernel(&shifted, d, fp);
            for v in &ker {
                covered.insert(v, fp);
            }
            parts.push(ker);
        }
        if covered.rank() == before {
            return None;
        }
    }
    Some(parts)
}

fn poly_trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    if f.is_empty() {
        f.push(0);
    }
    f
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, fp: &Fp) -> Vec<u64> {
    a = poly_trim(a);
    b = poly_trim(b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(&a, &b, fp);
        a = b;
        b = r;
    }
    // Normalize to monic.
    let lead = *a.last().unwrap();
    if lead != 0 && lead != 1 {
        let inv = fp.inv(lead);
        for c in &mut a {
            *c = fp.mul(*c, inv);
        }
    }
    a
}

fn poly_rem(a: &[u64], b: &[u64], fp: &Fp) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if db == 0 {
        // Division by a nonzero constant leaves no remainder.
        return vec![0];
    }
    let lead_inv = fp.inv(b[db]);
    while r.len() > db && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let c = fp.mul(r[dr], lead_inv);
        if c != 0 {
            for i in 0..=db {
                let t = fp.mul(c, b[i]);
                r[dr - db + i] = fp.sub(r[dr - db + i], t);
            }
        }
        r.pop();
        r = poly_trim(r);
        if r.len() <= db {
            break;
        }
    }
    poly_trim(r)
}

/// (g * h) mod f over F_p, schoolbook.
fn poly_mulmod(g: &[u64], h: &[u64], f: &[u64], fp: &Fp) -> Vec<u64> {
    let mut prod = vec![0u64; g.len() + h.len() - 1];
    for (i, &gi) in g.iter().enumerate() {
        if gi == 0 {
            continue;
        }
        for (j, &hj) in h.iter().enumerate() {
            prod[i + j] = fp.add(prod[i + j], fp.mul(gi, hj));
        }
    }
    poly_rem(&prod, f, fp)
}

/// All roots of a squarefree, fully split polynomial, by randomized
/// quadratic-residue splitting.
fn find_roots(f: &[u64], fp: &Fp, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    let f = poly_trim(f.to_vec());
    let deg = f.len() - 1;
    if deg == 0 {
        return;
    }
    if deg == 1 {
        // f = c1 x + c0, root -c0 / c1.
        out.push(fp.mul(fp.neg(f[0]), fp.inv(f[1])));
        return;
    }
    let e = (fp.0 - 1) / 2;
    loop {
        let a = rng.gen_range(0..fp.0);
        // (x + a)^((p-1)/2) mod f.
        let mut base = vec![a, 1];
        let mut acc = vec![1u64];
        let mut exp = e;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = poly_mulmod(&acc, &base, &f, fp);
            }
            exp >>= 1;
            if exp > 0 {
                base = poly_mulmod(&base, &base, &f, fp);
            }
        }
        let mut shifted = acc;
        if shifted.is_empty() {
            shifted = vec![0];
        }
        shifted[0] = fp.sub(shifted[0], 1);
        let g = poly_gcd(f.clone(), shifted, fp);
        let dg = g.len() - 1;
        if dg > 0 && dg < deg {
            let q = poly_quot(&f, &g, fp);
            find_roots(&g, fp, rng, out);
            find_roots(&q, fp, rng, out);
            return;
        }
    }
}

fn poly_quot(a: &[u64], b: &[u64], fp: &Fp) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let lead_inv = fp.inv(b[db]);
    let mut q = vec![0u64; da - db + 1];
    for qi in (0..q.len()).rev() {
        let c = fp.mul(r[qi + db], lead_inv);
        q[qi] = c;
        if c != 0 {
            for i in 0..=db {
                let t = fp.mul(c, b[i]);
                r[qi + i] = fp.sub(r[qi + i], t);
            }
        }
    }
    q
}

/// f / (x - lambda) for monic f with f(lambda) = 0.
fn synthetic_division(f: &[u64], lambda: u64, fp: &Fp) -> Vec<u64> {
    let k = f.len() - 1;
    let mut q = vec![0u64; k];
    let mut carry = 0u64;
    for i in (0..k).rev() {
        carry = fp.add(f[i + 1], fp.mul(lambda, carry));
        q[i] = carry;
    }
    q
}

/// Square root mod an odd prime by Tonelli-Shanks; None for non-residues.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let fp = Fp(p);
    if a == 0 {
        return Some(0);
    }
    if fp.pow(a, (p - 1) / 2) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(fp.pow(a, (p + 1) / 4));
    }
    // Write p - 1 = q * 2^s with q odd.
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    // Any quadratic non-residue serves as the seed of the 2-group.
    let mut z = 2;
    while fp.pow(z, (p - 1) / 2) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = fp.pow(z, q);
    let mut t = fp.pow(a, q);
    let mut r = fp.pow(a, (q + 1) / 2);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = fp.mul(t2, t2);
            i += 1;
        }
        let b = fp.pow(c, 1 << (m - i - 1));
        m = i;
        c = fp.mul(b, b);
        t = fp.mul(t, c);
        r = fp.mul(r, b);
    }
    Some(r)
}

/// Arithmetic mod a prime that fits comfortably in 32 bits.
#[derive(Clone, Copy)]
struct Fp(u64);

impl Fp {
    fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 { s - self.0 } else { s }
    }

    fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + self.0 - b }
    }

    fn neg(self, a: u64) -> u64 {
        if a == 0 { 0 } else { self.0 - a }
    }

    fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    fn pow(self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        b %= self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            e >>= 1;
            b = self.mul(b, b);
        }
        acc
    }

    fn inv(self, a: u64) -> u64 {
        assert!(a % self.0 != 0, "division by zero mod {}", self.0);
        self.pow(a, self.0 - 2)
    }
}

#[cfg(test)]
mod tests;
