//! Finite-group machinery over enumerated matrix groups: closure, conjugacy
//! classes, structural invariants and the filtering predicates used by the
//! catalog verification.
//!
//! The closure stores, for every generator g, the index map x -> g*x found
//! during the breadth-first search.  From those maps the full multiplication
//! table is assembled by index arithmetic alone (row of g*x = row of g
//! composed with row of x), so all analysis after the closure works on
//! integer tables and never touches cyclotomic arithmetic again.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::mat3::Mat3;

mod structure;

pub use structure::{factorize, ConjClasses, Fingerprint, MonomialClass};

/// Fully enumerated finite matrix group.
pub struct GroupData {
    /// All elements, BFS discovery order; index 0 is the identity.
    elements: Vec<Mat3>,
    key_index: HashMap<Vec<u8>, u32>,
    /// Indices of the generators inside `elements`.
    generators: Vec<u32>,
    conductor: u32,
    /// For generator slot g: left_mult[g][x] = index of gens[g] * elements[x].
    left_mult: Vec<Vec<u32>>,
    /// For element i > 0: (generator slot, parent) with elem = gen * parent.
    parent: Vec<(u32, u32)>,
    table: OnceLock<Vec<u32>>,
    inverse: OnceLock<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClosureError {
    #[error("closure exceeded the element cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("generator {index} is not unitary")]
    NonUnitaryGenerator { index: usize },
    #[error("empty generator list")]
    NoGenerators,
}

/// Breadth-first product closure of a unitary generator set.
pub fn closure(gens: &[Mat3], cap: usize) -> Result<GroupData, ClosureError> {
    if gens.is_empty() {
        return Err(ClosureError::NoGenerators);
    }
    assert!(cap >= 1);
    let mut n = 1u32;
    for g in gens {
        n = num_integer::lcm(n, g.conductor());
    }
    let gens: Vec<Mat3> = gens.iter().map(|g| g.lift_to(n).unwrap()).collect();
    for (index, g) in gens.iter().enumerate() {
        if !g.is_unitary() {
            return Err(ClosureError::NonUnitaryGenerator { index });
        }
    }

    let identity = Mat3::identity(n);
    let mut elements = vec![identity.clone()];
    let mut key_index = HashMap::new();
    key_index.insert(identity.mat_key(), 0u32);
    let mut left_mult: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut parent: Vec<(u32, u32)> = vec![(u32::MAX, u32::MAX)];

    let mut next = 0usize;
    while next < elements.len() {
        let x = next as u32;
        for (gi, g) in gens.iter().enumerate() {
            let prod = g.mat_mul(&elements[next]).expect("shared conductor");
            let key = prod.mat_key();
            let idx = match key_index.get(&key) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(ClosureError::CapExceeded { cap });
                    }
                    let i = elements.len() as u32;
                    elements.push(prod);
                    parent.push((gi as u32, x));
                    key_index.insert(key, i);
                    i
                }
            };
            debug_assert_eq!(left_mult[gi].len(), next);
            left_mult[gi].push(idx);
        }
        next += 1;
    }

    let generators = gens.iter().map(|g| key_index[&g.mat_key()]).collect();
    Ok(GroupData {
        elements,
        key_index,
        generators,
        conductor: n,
        left_mult,
        parent,
        table: OnceLock::new(),
        inverse: OnceLock::new(),
    })
}

impl GroupData {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn elements(&self) -> &[Mat3] {
        &self.elements
    }

    pub fn element(&self, idx: u32) -> &Mat3 {
        &self.elements[idx as usize]
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn index_of(&self, m: &Mat3) -> Option<u32> {
        let lifted = m.lift_to(self.conductor).ok()?;
        self.key_index.get(&lifted.mat_key()).copied()
    }

    /// Full multiplication table, built lazily by composing the generator
    /// left-multiplication maps along each element's BFS derivation.
    fn table(&self) -> &[u32] {
        self.table.get_or_init(|| {
            let n = self.order();
            let mut table = vec![0u32; n * n];
            // Identity row: e * b = b.
            for b in 0..n {
                table[b] = b as u32;
            }
            for a in 1..n {
                let (gi, p) = self.parent[a];
                let (gi, p) = (gi as usize, p as usize);
                let gmap = &self.left_mult[gi];
                // Rows are filled in BFS order, so the parent row is ready.
                let (done, row) = table.split_at_mut(a * n);
                let prow = &done[p * n..(p + 1) * n];
                for b in 0..n {
                    row[b] = gmap[prow[b] as usize];
                }
            }
            table
        })
    }

    /// Product by element indices.
    pub fn mult(&self, a: u32, b: u32) -> u32 {
        self.table()[a as usize * self.order() + b as usize]
    }

    pub fn inverse_of(&self, a: u32) -> u32 {
        let inv = self.inverse.get_or_init(|| {
            let n = self.order();
            let table = self.table();
            let mut inv = vec![0u32; n];
            for a in 0..n {
                let row = &table[a * n..(a + 1) * n];
                inv[a] = row.iter().position(|&p| p == 0).unwrap() as u32;
            }
            inv
        });
        inv[a as usize]
    }

    pub fn element_order(&self, idx: u32) -> u64 {
        let mut p = idx;
        let mut k = 1;
        while p != 0 {
            p = self.mult(idx, p);
            k += 1;
        }
        k
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        let mut e = 1u64;
        for idx in 0..self.order() as u32 {
            e = num_integer::lcm(e, self.element_order(idx));
        }
        e
    }

    /// Indices of elements commuting with the whole group (it suffices to
    /// commute with every generator).
    pub fn center(&self) -> Vec<u32> {
        (0..self.order() as u32)
            .filter(|&z| {
                self.generators
                    .iter()
                    .all(|&g| self.mult(z, g) == self.mult(g, z))
            })
            .collect()
    }

    /// Closes a set of element indices under the group product.
    pub fn subgroup_closure(&self, seed: &[u32]) -> Vec<u32> {
        let mut in_set = vec![false; self.order()];
        let mut members = vec![0u32];
        in_set[0] = true;
        for &s in seed {
            if !in_set[s as usize] {
                in_set[s as usize] = true;
                members.push(s);
            }
        }
        let mut next = 0;
        while next < members.len() {
            let x = members[next];
            next += 1;
            for i in 0..members.len() {
                for &p in &[self.mult(members[i], x), self.mult(x, members[i])] {
                    if !in_set[p as usize] {
                        in_set[p as usize] = true;
                        members.push(p);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Indices of the derived (commutator) subgroup.
    pub fn derived_indices(&self) -> Vec<u32> {
        let n = self.order() as u32;
        let mut seen = vec![false; n as usize];
        let mut comms = Vec::new();
        for a in 0..n {
            let ai = self.inverse_of(a);
            for b in 0..n {
                let c = self.mult(self.mult(self.inverse_of(b), ai), self.mult(b, a));
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    comms.push(c);
                }
            }
        }
        self.subgroup_closure(&comms)
    }

    /// The derived subgroup as a standalone group (closure of commutators).
    pub fn derived_subgroup(&self) -> GroupData {
        let indices = self.derived_indices();
        let gens: Vec<Mat3> = if indices.len() == 1 {
            vec![Mat3::identity(self.conductor)]
        } else {
            indices
                .iter()
                .filter(|&&i| i != 0)
                .map(|&i| self.elements[i as usize].clone())
                .collect()
        };
        let sub = closure(&gens, self.order()).expect("derived subgroup closure");
        debug_assert_eq!(sub.order(), indices.len());
        sub
    }
}

#[cfg(test)]
mod tests;
