use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{PermGroup, Permutation};

/// Number of product-replacement steps applied before the first element is
/// handed out.
pub const MIXING_STEPS: usize = 50;

const MIN_SLOTS: usize = 10;

/// Seeded product-replacement generator of (nearly uniform) random elements.
///
/// Uses the accumulator ("rattle") variant: each step replaces one slot by
/// a product with another slot and multiplies the result into the
/// accumulator, which is returned.
#[derive(Clone, Debug)]
pub struct ProductReplacement {
    slots: Vec<Permutation>,
    acc: Permutation,
    rng: ChaCha8Rng,
}

impl ProductReplacement {
    pub fn new(group: &PermGroup, seed: u64) -> Self {
        let mut slots: Vec<Permutation> = group
            .generators()
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let degree = group.degree();
        if !slots.is_empty() {
            let base = slots.clone();
            let mut i = 0;
            while slots.len() < MIN_SLOTS {
                slots.push(base[i % base.len()].clone());
                i += 1;
            }
        }
        let mut pr = ProductReplacement {
            slots,
            acc: Permutation::identity(degree),
            rng: ChaCha8Rng::seed_from_u64(seed),
        };
        for _ in 0..MIXING_STEPS {
            pr.step();
        }
        pr
    }

    fn step(&mut self) {
        let n = self.slots.len();
        if n < 2 {
            return;
        }
        let i = self.rng.random_range(0..n);
        let mut j = self.rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let other = if self.rng.random_bool(0.5) {
            self.slots[j].clone()
        } else {
            self.slots[j].inverse()
        };
        self.slots[i] = if self.rng.random_bool(0.5) {
            self.slots[i].then(&other)
        } else {
            other.then(&self.slots[i])
        };
        self.acc = self.acc.then(&self.slots[i]);
    }

    pub fn next_element(&mut self) -> Permutation {
        self.step();
        self.acc.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make, GroupFamilySpec};

    #[test]
    fn deterministic_and_members() {
        let g = make(&GroupFamilySpec::Alt(5)).unwrap();
        let mut a = ProductReplacement::new(&g, 7);
        let mut b = ProductReplacement::new(&g, 7);
        for _ in 0..20 {
            let x = a.next_element();
            assert_eq!(x, b.next_element());
            assert!(g.contains(&x));
        }
    }
}
