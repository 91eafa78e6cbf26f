//! Brute-force subgroup enumeration, independent of stabilizer chains and
//! of the lattice engine. Meant as a test oracle for small groups.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, PermGroup, Permutation, Result};

/// Largest group order accepted by [`brute_subgroups`].
pub const BRUTE_BOUND: u64 = 1000;

/// Every element of `⟨gens⟩` by closing under right multiplication.
pub fn brute_elements(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        for s in gens {
            let y = &queue[i] * s;
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
        i += 1;
    }
    seen.into_iter().collect()
}

/// All subgroups of a group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct BruteLattice {
    /// Sorted elements; index 0 is the identity.
    pub elements: Vec<Permutation>,
    /// Each subgroup as a sorted list of element indices.
    pub subgroups: Vec<Vec<usize>>,
    table: Vec<usize>,
}

impl BruteLattice {
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b]
    }

    fn inverse(&self, a: usize) -> usize {
        (0..self.elements.len())
            .find(|&b| self.mul(a, b) == 0)
            .expect("group element has an inverse")
    }

    /// Number of subgroups of the given order.
    pub fn count_of_order(&self, order: usize) -> usize {
        self.subgroups.iter().filter(|s| s.len() == order).count()
    }

    /// Conjugacy classes as sorted `(order, class size)` pairs.
    pub fn class_profile(&self) -> Vec<(u64, u64)> {
        let n = self.elements.len();
        let invs: Vec<usize> = (0..n).map(|a| self.inverse(a)).collect();
        let mut done: BTreeSet<&Vec<usize>> = BTreeSet::new();
        let index: BTreeMap<&Vec<usize>, usize> =
            self.subgroups.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut out = Vec::new();
        for s in &self.subgroups {
            if done.contains(s) {
                continue;
            }
            let mut class: BTreeSet<usize> = BTreeSet::new();
            for g in 0..n {
                let mut c: Vec<usize> = s.iter().map(|&h| self.mul(self.mul(invs[g], h), g)).collect();
                c.sort_unstable();
                class.insert(index[&c]);
            }
            for &i in &class {
                done.insert(&self.subgroups[i]);
            }
            out.push((s.len() as u64, class.len() as u64));
        }
        out.sort_unstable();
        out
    }
}

fn close(lat: &BruteLattice, gens: &[usize]) -> Vec<usize> {
    let n = lat.elements.len();
    let mut member = vec![false; n];
    member[0] = true;
    let mut elems = vec![0usize];
    let mut i = 0;
    while i < elems.len() {
        for &s in gens {
            let y = lat.mul(elems[i], s);
            if !member[y] {
                member[y] = true;
                elems.push(y);
            }
        }
        i += 1;
    }
    elems.sort_unstable();
    elems
}

/// Every subgroup, as joins of cyclic subgroups closed to a fixpoint.
pub fn brute_subgroups(g: &PermGroup) -> Result<BruteLattice> {
    if g.order() > BRUTE_BOUND {
        return Err(Error::BoundExceeded {
            what: "brute-force subgroup list",
            size: g.order(),
            bound: BRUTE_BOUND,
        });
    }
    let elements = brute_elements(g.degree(), g.generators());
    let n = elements.len();
    let index: BTreeMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut table = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = index[&(&elements[a] * &elements[b])];
        }
    }
    let mut lat = BruteLattice {
        elements,
        subgroups: Vec::new(),
        table,
    };
    let mut found: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut cyclic: Vec<(usize, Vec<usize>)> = Vec::new();
    for x in 0..n {
        let c = close(&lat, &[x]);
        if !found.contains_key(&c) {
            found.insert(c.clone(), vec![x]);
            cyclic.push((x, c));
        }
    }
    let mut queue: Vec<Vec<usize>> = found.keys().cloned().collect();
    let mut i = 0;
    while i < queue.len() {
        let s = queue[i].clone();
        let gens = found[&s].clone();
        for (x, c) in &cyclic {
            if s.binary_search(x).is_ok() || c.len() == 1 {
                continue;
            }
            let mut jg = gens.clone();
            jg.push(*x);
            let j = close(&lat, &jg);
            if !found.contains_key(&j) {
                found.insert(j.clone(), jg);
                queue.push(j);
            }
        }
        i += 1;
    }
    lat.subgroups = found.into_keys().collect();
    Ok(lat)
}
