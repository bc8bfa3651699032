//! Structural invariants on top of the multiplication table: conjugacy
//! classes, abelianization, nilpotency, the cyclic-direct-factor filter,
//! monomial classification and the isomorphy fingerprint.

use serde::{Deserialize, Serialize};

use super::GroupData;
use crate::chardeg::{self, DegreeError, DegreeProfile};
use crate::cyclotomic::Cyclotomic;
use crate::mat3::perm_sign;

/// Conjugacy class data; class 0 is the class of the identity.
#[derive(Debug, Clone)]
pub struct ConjClasses {
    /// Element index -> class index.
    pub class_of: Vec<u32>,
    /// Class index -> representative (the lowest element index in the class).
    pub reps: Vec<u32>,
    /// Class index -> class size h_k.
    pub sizes: Vec<u64>,
    /// Class index -> class containing the inverses.
    pub inverse_class: Vec<u32>,
}

impl ConjClasses {
    pub fn count(&self) -> usize {
        self.reps.len()
    }
}

/// The conclusion's trichotomy of catalogued groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialClass {
    /// All elements monomial with even permutation part.
    Rvw,
    /// All elements monomial, some with odd permutation part.
    MonomialStu,
    /// Some element is not monomial.
    NonMonomial,
}

impl MonomialClass {
    pub fn as_str(self) -> &'static str {
        match self {
            MonomialClass::Rvw => "RVW",
            MonomialClass::MonomialStu => "MONOMIAL_STU",
            MonomialClass::NonMonomial => "NON_MONOMIAL",
        }
    }
}

impl std::fmt::Display for MonomialClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Invariant bundle; equal for isomorphic groups (necessary, not sufficient).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: u64,
    pub class_count: usize,
    pub center_order: usize,
    pub derived_order: usize,
    pub abelian_invariants: Vec<u64>,
    pub degree_profile: DegreeProfile,
    pub det_image_order: u64,
    pub trace_multiset_digest: u64,
}

impl GroupData {
    /// Conjugation orbits by direct expansion; deterministic because orbits
    /// are opened in ascending element order.
    pub fn conjugacy_classes(&self) -> ConjClasses {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for x in 0..n as u32 {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let cls = reps.len() as u32;
            reps.push(x);
            class_of[x as usize] = cls;
            let mut orbit = vec![x];
            let mut next = 0;
            while next < orbit.len() {
                let y = orbit[next];
                next += 1;
                for &g in &self.generators {
                    let c = self.mult(self.mult(g, y), self.inverse_of(g));
                    if class_of[c as usize] == u32::MAX {
                        class_of[c as usize] = cls;
                        orbit.push(c);
                    }
                }
            }
            sizes.push(orbit.len() as u64);
        }
        let inverse_class = reps
            .iter()
            .map(|&r| class_of[self.inverse_of(r) as usize])
            .collect();
        ConjClasses { class_of, reps, sizes, inverse_class }
    }

    /// Invariants of G/G' as a sorted multiset of prime powers, recovered
    /// from the order statistics of the abelian quotient.
    pub fn abelian_invariants(&self) -> Vec<u64> {
        let derived = self.derived_indices();
        let quotient = self.quotient_by(&derived);
        abelian_invariants_of(&quotient)
    }

    /// True iff every generator has determinant 1.
    pub fn is_subgroup_of_su3(&self) -> bool {
        self.generators
            .iter()
            .all(|&g| self.elements[g as usize].det().is_one())
    }

    /// Order of the image of det, a finite cyclic group of roots of unity.
    pub fn det_image_order(&self) -> u64 {
        let mut order = 1u64;
        for &g in &self.generators {
            let d = self.elements[g as usize].det();
            let k = d.root_order().expect("determinant of a unitary cyclotomic matrix is a root of unity");
            order = num_integer::lcm(order, k);
        }
        order
    }

    /// Lower central series test: G = g1 >= g2 >= ... with g_{i+1} = [G, g_i]
    /// reaches the trivial subgroup iff G is nilpotent.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.order() as u32;
        let mut gamma: Vec<u32> = (0..n).collect();
        loop {
            if gamma.len() == 1 {
                return true;
            }
            let mut seen = vec![false; n as usize];
            let mut comms = Vec::new();
            for x in 0..n {
                let xi = self.inverse_of(x);
                for &y in &gamma {
                    let c = self.mult(self.mult(self.inverse_of(y), xi), self.mult(y, x));
                    if !seen[c as usize] {
                        seen[c as usize] = true;
                        comms.push(c);
                    }
                }
            }
            let next = self.subgroup_closure(&comms);
            if next.len() == gamma.len() {
                return false;
            }
            gamma = next;
        }
    }

    /// Largest k > 1 with G isomorphic to H x Z_k for a smaller H, or None.
    ///
    /// Criterion: a central element z of order k generates a direct factor
    /// iff <z> meets the derived subgroup trivially and the image of z in
    /// G/G' generates a direct summand of the abelianization.  Purity of the
    /// image is checked one prime at a time: for each p^a exactly dividing k,
    /// the order-p element zbar^(k/p) must not be a p^a-th power in G/G'.
    pub fn has_cyclic_direct_factor(&self) -> Option<u64> {
        let derived = self.derived_indices();
        let mut in_derived = vec![false; self.order()];
        for &d in &derived {
            in_derived[d as usize] = true;
        }
        let quotient = self.quotient_by(&derived);
        let mut best: Option<u64> = None;
        'candidates: for &z in &self.center() {
            if z == 0 {
                continue;
            }
            let k = self.element_order(z);
            if k < 2 || best.map_or(false, |b| k <= b) {
                continue;
            }
            // <z> must intersect G' trivially.
            let mut p = z;
            while p != 0 {
                if in_derived[p as usize] {
                    continue 'candidates;
                }
                p = self.mult(z, p);
            }
            let zbar = quotient.class_of[z as usize];
            for (prime, a) in factorize(k) {
                let socle = quotient.pow(zbar, k / prime);
                let pa = prime.pow(a);
                if quotient.power_image(pa).contains(&socle) {
                    continue 'candidates;
                }
            }
            best = Some(k);
        }
        best
    }

    /// Classifies the group by the monomial shape of its elements.
    pub fn monomial_class(&self) -> MonomialClass {
        let mut any_odd = false;
        for m in &self.elements {
            match m.monomial_decompose() {
                None => return MonomialClass::NonMonomial,
                Some((perm, _)) => {
                    if perm_sign(perm) < 0 {
                        any_odd = true;
                    }
                }
            }
        }
        if any_odd {
            MonomialClass::MonomialStu
        } else {
            MonomialClass::Rvw
        }
    }

    /// Hash of the multiset of element traces.  Traces are rewritten at the
    /// lcm of their minimal conductors before hashing, so the digest depends
    /// only on the trace values, never on the conductor the group happened
    /// to be enumerated at.
    pub fn trace_multiset_digest(&self) -> u64 {
        let traces: Vec<Cyclotomic> = self.elements.iter().map(|m| m.trace()).collect();
        let minimal: Vec<u32> = traces.iter().map(|t| t.minimal_conductor()).collect();
        let mut target = 1u32;
        for &d in &minimal {
            target = num_integer::lcm(target, d);
        }
        let mut keys: Vec<Vec<u8>> = traces
            .iter()
            .zip(&minimal)
            .map(|(t, &d)| {
                let t = if target == t.conductor() {
                    t.clone()
                } else {
                    t.try_express_in(d)
                        .expect("minimal_conductor certified the subfield")
                        .lift_to(target)
                        .unwrap()
                };
                t.canonical_key()
            })
            .collect();
        keys.sort_unstable();
        let mut h = Fnv::new();
        for key in &keys {
            h.write(&(key.len() as u64).to_le_bytes());
            h.write(key);
        }
        h.finish()
    }

    /// Assembles the full invariant bundle.
    pub fn fingerprint(&self, seed: u64) -> Result<Fingerprint, DegreeError> {
        let classes = self.conjugacy_classes();
        let degree_profile = chardeg::character_degrees_seeded(self, seed)?;
        Ok(Fingerprint {
            order: self.order() as u64,
            class_count: classes.count(),
            center_order: self.center().len(),
            derived_order: self.derived_indices().len(),
            abelian_invariants: self.abelian_invariants(),
            degree_profile,
            det_image_order: self.det_image_order(),
            trace_multiset_digest: self.trace_multiset_digest(),
        })
    }

    /// Quotient of the group by a normal subgroup given as a sorted index
    /// set; cosets are labeled in order of their lowest element.
    fn quotient_by(&self, normal: &[u32]) -> Quotient {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n as u32 {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let q = reps.len() as u32;
            reps.push(x);
            for &d in normal {
                class_of[self.mult(x, d) as usize] = q;
            }
        }
        let k = reps.len();
        let mut table = vec![0u32; k * k];
        for a in 0..k {
            for b in 0..k {
                table[a * k + b] = class_of[self.mult(reps[a], reps[b]) as usize];
            }
        }
        Quotient { class_of, table, size: k }
    }
}

/// Finite quotient group on coset labels.
struct Quotient {
    /// Parent element index -> coset label.
    class_of: Vec<u32>,
    table: Vec<u32>,
    size: usize,
}

impl Quotient {
    fn mult(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.size + b as usize]
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 0u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mult(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mult(base, base);
            }
        }
        acc
    }

    fn order_of(&self, a: u32) -> u64 {
        let mut p = a;
        let mut k = 1;
        while p != 0 {
            p = self.mult(a, p);
            k += 1;
        }
        k
    }

    /// The set {y^e : y in the quotient} as a sorted label list.
    fn power_image(&self, e: u64) -> Vec<u32> {
        let mut out: Vec<u32> = (0..self.size as u32).map(|y| self.pow(y, e)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Prime-power invariants of an abelian quotient from its order statistics:
/// for each prime p, log_p #{a : a^(p^i) = 1} determines the partition of
/// the p-part.
fn abelian_invariants_of(q: &Quotient) -> Vec<u64> {
    let orders: Vec<u64> = (0..q.size as u32).map(|a| q.order_of(a)).collect();
    let total = q.size as u64;
    let mut invariants = Vec::new();
    for (p, _) in factorize(total) {
        // e[i] = log_p of the number of elements killed by p^i.
        let mut exps = vec![0u32];
        loop {
            let i = exps.len() as u32;
            let pi = p.pow(i);
            let count = orders.iter().filter(|&&o| pi % o == 0).count() as u64;
            let e = count.ilog(p);
            debug_assert_eq!(p.pow(e), count, "abelian p-subgroup count must be a p-power");
            if e == *exps.last().unwrap() {
                break;
            }
            exps.push(e);
        }
        // Number of cyclic factors of order >= p^i is e[i] - e[i-1].
        let parts_at: Vec<u32> = (1..exps.len()).map(|i| exps[i] - exps[i - 1]).collect();
        if let Some(&max_parts) = parts_at.first() {
            for t in 1..=max_parts {
                let size = parts_at.iter().filter(|&&n| n >= t).count() as u32;
                invariants.push(p.pow(size));
            }
        }
    }
    invariants.sort_unstable();
    invariants
}

/// Prime factorization of a positive integer as (prime, multiplicity) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// FNV-1a, 64-bit; a stable hash independent of the standard library's.
struct Fnv(u64);

impl Fnv {
    fn new() -> Self {
        Fnv(0xcbf2_9ce4_8422_2325)
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }

    fn finish(&self) -> u64 {
        self.0
    }
}
