use alloc::vec::Vec;
use core::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::lattice::subgroup_classes;
use crate::perm::ProductReplacement;
use crate::sylow::sylow_number;
use crate::{Error, PermGroup, Permutation, Result};

/// Random conjugates per class on which `ν_p` constancy is asserted.
pub const CONSTANCY_SAMPLES: usize = 3;

/// Default number of random subgroups per seed in sampled mode.
pub const DEFAULT_SAMPLES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivSylMode {
    /// Every conjugacy class of subgroups.
    Full,
    /// `count` subgroups generated by one or two random elements
    /// (alternately), plus every point stabilizer.
    Sampled { seed: u64, count: usize },
}

impl fmt::Display for DivSylMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivSylMode::Full => f.write_str("full"),
            DivSylMode::Sampled { .. } => f.write_str("sampled"),
        }
    }
}

/// One checked subgroup (a class representative in full mode).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub order: u64,
    /// `|G : H|`.
    pub index: u64,
    /// Number of conjugates; known in full mode only.
    pub class_size: Option<u64>,
    pub nu_p: u64,
    pub divides: bool,
    pub witness_generators: Vec<Permutation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivSylReport {
    pub prime: u64,
    pub group_order: u64,
    pub nu_p_g: u64,
    pub mode: DivSylMode,
    pub classes: Vec<ClassRecord>,
}

impl DivSylReport {
    pub fn violations(&self) -> impl Iterator<Item = &ClassRecord> {
        self.classes.iter().filter(|c| !c.divides)
    }

    pub fn satisfies(&self) -> bool {
        self.violations().next().is_none()
    }

    /// Recomputes every `divides` flag from the stored numbers.
    pub fn flags_consistent(&self) -> bool {
        self.classes
            .iter()
            .all(|c| c.divides == self.nu_p_g.is_multiple_of(c.nu_p))
    }
}

fn record(g: &PermGroup, h: &PermGroup, p: u64, nu_g: u64, class_size: Option<u64>) -> Result<ClassRecord> {
    let nu = if h.order() == g.order() {
        nu_g
    } else {
        sylow_number(h, p)?
    };
    Ok(ClassRecord {
        order: h.order(),
        index: g.order() / h.order(),
        class_size,
        nu_p: nu,
        divides: nu_g.is_multiple_of(nu),
        witness_generators: h.generators().to_vec(),
    })
}

/// Does `ν_p(H)` divide `ν_p(G)` for every checked `H`?
pub fn divsyl_check(g: &PermGroup, p: u64, mode: DivSylMode) -> Result<DivSylReport> {
    let nu_g = sylow_number(g, p)?;
    let mut classes = Vec::new();
    match mode {
        DivSylMode::Full => {
            let table = subgroup_classes(g)?;
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for c in &table.classes {
                let rec = record(g, &c.representative, p, nu_g, Some(c.class_size))?;
                if c.class_size > 1 {
                    for _ in 0..CONSTANCY_SAMPLES {
                        let x = g.random_element(&mut rng);
                        let nu = sylow_number(&c.representative.conjugate(&x)?, p)?;
                        if nu != rec.nu_p {
                            return Err(Error::Inconsistent(alloc::format!(
                                "nu_p differs on conjugate subgroups of order {}",
                                c.order
                            )));
                        }
                    }
                }
                classes.push(rec);
            }
        }
        DivSylMode::Sampled { seed, count } => {
            let mut pr = ProductReplacement::new(g, seed);
            for i in 0..count {
                let mut gens = alloc::vec![pr.next_element()];
                if i % 2 == 1 {
                    gens.push(pr.next_element());
                }
                gens.retain(|x| !x.is_identity());
                let h = PermGroup::new(g.degree(), gens)?;
                classes.push(record(g, &h, p, nu_g, None)?);
            }
            for pt in 0..g.degree() as u32 {
                let h = g.pointwise_stabilizer(&[pt])?;
                classes.push(record(g, &h, p, nu_g, None)?);
            }
        }
    }
    Ok(DivSylReport {
        prime: p,
        group_order: g.order(),
        nu_p_g: nu_g,
        mode,
        classes,
    })
}

/// Sampled checks over several seeds, merged in seed order.
pub fn divsyl_sampled(g: &PermGroup, p: u64, seeds: &[u64], count: usize) -> Result<Vec<DivSylReport>> {
    seeds
        .iter()
        .map(|&seed| divsyl_check(g, p, DivSylMode::Sampled { seed, count }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make, GroupFamilySpec};

    #[test]
    fn introduction_counterexample() {
        let a5 = make(&GroupFamilySpec::Alt(5)).unwrap();
        let r = divsyl_check(&a5, 3, DivSylMode::Full).unwrap();
        assert_eq!(r.nu_p_g, 10);
        let bad: Vec<&ClassRecord> = r.violations().collect();
        assert_eq!(bad.len(), 1);
        assert_eq!((bad[0].order, bad[0].nu_p), (12, 4));
        assert!(r.flags_consistent());
    }

    #[test]
    fn a5_p5_satisfies() {
        let a5 = make(&GroupFamilySpec::Alt(5)).unwrap();
        let r = divsyl_check(&a5, 5, DivSylMode::Full).unwrap();
        assert!(r.satisfies());
        assert!(r.classes.iter().all(|c| c.nu_p == 1 || c.nu_p == 6));
    }

    #[test]
    fn sampled_mode_runs() {
        let s5 = make(&GroupFamilySpec::Sym(5)).unwrap();
        let r = divsyl_check(&s5, 5, DivSylMode::Sampled { seed: 1, count: 8 }).unwrap();
        assert_eq!(r.classes.len(), 8 + 5);
        assert!(r.satisfies());
    }
}
