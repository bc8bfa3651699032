//! Exact 3x3 matrices over cyclotomic numbers — the carrier of every group
//! element in the catalog.

use crate::cyclotomic::{ConductorError, Cyclotomic};

/// 3x3 matrix with row-major entries, all at one shared conductor.
#[derive(Clone, Debug)]
pub struct Mat3 {
    conductor: u32,
    entries: Vec<Cyclotomic>,
}

impl PartialEq for Mat3 {
    /// Value equality; representations at different conductors are equal when
    /// their entries agree as cyclotomic numbers.
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for Mat3 {}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("conductor mismatch: {left} vs {right}")]
pub struct ConductorMismatch {
    pub left: u32,
    pub right: u32,
}

impl Mat3 {
    /// Builds a matrix from 9 row-major entries, lifting all of them to the
    /// least common conductor.
    pub fn from_entries(entries: [Cyclotomic; 9]) -> Self {
        let mut n: u32 = 1;
        for e in &entries {
            n = num_integer::lcm(n, e.conductor());
        }
        let entries = entries.into_iter().map(|e| e.lift_to(n).unwrap()).collect();
        Mat3 { conductor: n, entries }
    }

    pub fn identity(n: u32) -> Self {
        Self::diag(Cyclotomic::one(n), Cyclotomic::one(n), Cyclotomic::one(n))
    }

    pub fn diag(a: Cyclotomic, b: Cyclotomic, c: Cyclotomic) -> Self {
        let n = num_integer::lcm(
            num_integer::lcm(a.conductor(), b.conductor()),
            c.conductor(),
        );
        let z = || Cyclotomic::zero(n);
        Self::from_entries([
            a.lift_to(n).unwrap(),
            z(),
            z(),
            z(),
            b.lift_to(n).unwrap(),
            z(),
            z(),
            z(),
            c.lift_to(n).unwrap(),
        ])
    }

    pub fn scalar(c: Cyclotomic) -> Self {
        Self::diag(c.clone(), c.clone(), c)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn entry(&self, row: usize, col: usize) -> &Cyclotomic {
        &self.entries[3 * row + col]
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.entries
    }

    /// Re-expresses all entries at conductor target.
    pub fn lift_to(&self, target: u32) -> Result<Self, ConductorError> {
        if target == self.conductor {
            return Ok(self.clone());
        }
        let mut entries = Vec::with_capacity(9);
        for e in &self.entries {
            entries.push(e.lift_to(target)?);
        }
        Ok(Mat3 { conductor: target, entries })
    }

    /// Exact matrix product; both operands must share one conductor.
    pub fn mat_mul(&self, other: &Self) -> Result<Self, ConductorMismatch> {
        if self.conductor != other.conductor {
            return Err(ConductorMismatch { left: self.conductor, right: other.conductor });
        }
        let mut entries = Vec::with_capacity(9);
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = self.entry(r, 0).mul(other.entry(0, c));
                acc = acc.add(&self.entry(r, 1).mul(other.entry(1, c)));
                acc = acc.add(&self.entry(r, 2).mul(other.entry(2, c)));
                entries.push(acc);
            }
        }
        Ok(Mat3 { conductor: self.conductor, entries })
    }

    pub fn neg(&self) -> Self {
        Mat3 { conductor: self.conductor, entries: self.entries.iter().map(|e| e.neg()).collect() }
    }

    /// Multiplies every entry by a scalar.
    pub fn scale(&self, s: &Cyclotomic) -> Self {
        let n = num_integer::lcm(self.conductor, s.conductor());
        let m = self.lift_to(n).unwrap();
        let s = s.lift_to(n).unwrap();
        Mat3 { conductor: n, entries: m.entries.iter().map(|e| e.mul(&s)).collect() }
    }

    /// Exact determinant by the 6-term cofactor formula.
    pub fn det(&self) -> Cyclotomic {
        let e = |r: usize, c: usize| self.entry(r, c);
        let mut d = e(0, 0).mul(&e(1, 1).mul(e(2, 2)).sub(&e(1, 2).mul(e(2, 1))));
        d = d.sub(&e(0, 1).mul(&e(1, 0).mul(e(2, 2)).sub(&e(1, 2).mul(e(2, 0)))));
        d = d.add(&e(0, 2).mul(&e(1, 0).mul(e(2, 1)).sub(&e(1, 1).mul(e(2, 0)))));
        d
    }

    pub fn trace(&self) -> Cyclotomic {
        self.entry(0, 0).add(self.entry(1, 1)).add(self.entry(2, 2))
    }

    pub fn conj_transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(9);
        for r in 0..3 {
            for c in 0..3 {
                entries.push(self.entry(c, r).conj());
            }
        }
        Mat3 { conductor: self.conductor, entries }
    }

    /// True iff A * A^dagger is exactly the identity.
    pub fn is_unitary(&self) -> bool {
        let p = self.mat_mul(&self.conj_transpose()).expect("same conductor");
        p == Mat3::identity(self.conductor)
    }

    /// Stable byte key, injective on matrices at a fixed conductor; entry
    /// keys are self-delimiting, so plain concatenation is unambiguous.
    pub fn mat_key(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for e in &self.entries {
            out.extend_from_slice(&e.canonical_key());
        }
        out
    }

    /// If the matrix is monomial (exactly one nonzero entry per row and per
    /// column), returns `(perm, phases)` where `perm[r]` is the column of the
    /// nonzero entry of row r and `phases[r]` that entry.  Even permutations
    /// are the paper's R/V/W forms, odd ones S/T/U.
    pub fn monomial_decompose(&self) -> Option<([usize; 3], [Cyclotomic; 3])> {
        let mut perm = [usize::MAX; 3];
        let mut used = [false; 3];
        let mut phases: Vec<Cyclotomic> = Vec::with_capacity(3);
        for r in 0..3 {
            let mut hit = None;
            for c in 0..3 {
                if !self.entry(r, c).is_zero() {
                    if hit.is_some() {
                        return None;
                    }
                    hit = Some(c);
                }
            }
            let c = hit?;
            if used[c] {
                return None;
            }
            used[c] = true;
            perm[r] = c;
            phases.push(self.entry(r, c).clone());
        }
        let phases: [Cyclotomic; 3] = phases.try_into().unwrap();
        Some((perm, phases))
    }

    /// Non-negative matrix power by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Mat3::identity(self.conductor);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mat_mul(&base).unwrap();
            }
            k >>= 1;
            if k > 0 {
                base = base.mat_mul(&base).unwrap();
            }
        }
        acc
    }

    /// Renders entries as cyclotomic literals, 3 rows of 3 strings.
    pub fn to_literal_rows(&self) -> Vec<Vec<String>> {
        (0..3)
            .map(|r| (0..3).map(|c| crate::cyclotomic::format_literal(self.entry(r, c))).collect())
            .collect()
    }

    /// Parses a matrix from 3 rows of 3 cyclotomic literals.
    pub fn from_literal_rows(rows: &[Vec<String>]) -> Result<Self, crate::cyclotomic::ParseError> {
        if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
            return Err(crate::cyclotomic::ParseError {
                pos: 0,
                msg: "matrix must be 3 rows of 3 entries".into(),
            });
        }
        let mut entries = Vec::with_capacity(9);
        for row in rows {
            for cell in row {
                entries.push(crate::cyclotomic::parse_literal(cell)?);
            }
        }
        let entries: [Cyclotomic; 9] = entries.try_into().unwrap();
        Ok(Self::from_entries(entries))
    }
}

#[cfg(test)]
mod tests;

/// Sign of a permutation of {0,1,2} given as an image array.
pub fn perm_sign(perm: [usize; 3]) -> i8 {
    let mut inversions = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
