use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{PermGroup, Permutation};
use crate::{Error, Result};

/// Right cosets `Bg` of a subgroup `B` in an ambient group `A`, with
/// canonical coset labels.
///
/// The canonical representative of `Bg` is the element of `Bg` whose image
/// of the base of `A` is lexicographically least.
#[derive(Clone, Debug)]
pub struct CosetTable {
    base: Vec<u32>,
    sub: PermGroup,
    labels: HashMap<Vec<u32>, u32>,
    reps: Vec<Permutation>,
}

impl CosetTable {
    pub fn new(ambient: &PermGroup, sub: &PermGroup, bound: u64) -> Result<Self> {
        if !sub.is_subgroup_of(ambient) {
            return Err(Error::NotAMember);
        }
        let index = ambient.order() / sub.order();
        if index > bound {
            return Err(Error::BoundExceeded {
                what: "coset index",
                size: index,
                bound,
            });
        }
        let base = ambient.base();
        let sub = PermGroup::with_base_prefix(ambient.degree(), sub.generators().to_vec(), &base)?;
        let mut table = CosetTable {
            base,
            sub,
            labels: HashMap::new(),
            reps: Vec::new(),
        };
        let id = Permutation::identity(ambient.degree());
        let first = table.canonical(&id);
        table.labels.insert(table.label_of(&first), 0);
        table.reps.push(first);
        let mut i = 0;
        while i < table.reps.len() && (table.reps.len() as u64) < index {
            for x in ambient.generators() {
                let c = table.canonical(&table.reps[i].then(x));
                let label = table.label_of(&c);
                if !table.labels.contains_key(&label) {
                    table.labels.insert(label, table.reps.len() as u32);
                    table.reps.push(c);
                }
            }
            i += 1;
        }
        debug_assert_eq!(table.reps.len() as u64, index);
        Ok(table)
    }

    fn label_of(&self, c: &Permutation) -> Vec<u32> {
        self.base.iter().map(|&b| c.image(b)).collect()
    }

    /// Canonical representative of the coset `Bg`.
    pub fn canonical(&self, g: &Permutation) -> Permutation {
        let mut c = g.clone();
        for level in self.sub.levels() {
            let mut best = 0usize;
            let mut best_img = c.image(level.orbit[0]);
            for (k, &delta) in level.orbit.iter().enumerate().skip(1) {
                let img = c.image(delta);
                if img < best_img {
                    best_img = img;
                    best = k;
                }
            }
            if best != 0 {
                c = level.rep_cow(best).then(&c);
            }
        }
        c
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    /// Index of the coset containing `g` (`g` must lie in the ambient group).
    pub fn coset_of(&self, g: &Permutation) -> Option<usize> {
        let c = self.canonical(g);
        self.labels.get(&self.label_of(&c)).map(|&i| i as usize)
    }

    /// Permutation of the cosets induced by right multiplication with `x`.
    pub fn action(&self, x: &Permutation) -> Permutation {
        let images = self
            .reps
            .iter()
            .map(|r| self.coset_of(&r.then(x)).expect("x lies in the ambient group") as u32)
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// Permutation of the cosets `Ba ↦ B x⁻¹ a x`; `x` must normalize `B`.
    pub fn conjugation_action(&self, x: &Permutation) -> Permutation {
        let images = self
            .reps
            .iter()
            .map(|r| {
                self.coset_of(&r.conjugate_by(x))
                    .expect("x normalizes the section") as u32
            })
            .collect();
        Permutation::from_images_unchecked(images)
    }
}
