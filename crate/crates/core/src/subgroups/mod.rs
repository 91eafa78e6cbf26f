//! Subgroup lattices up to conjugacy and the `DivSyl(p)` check.

mod divsyl;
mod lattice;
pub mod oracle;
mod table;

pub use divsyl::{
    divsyl_check, divsyl_sampled, ClassRecord, DivSylMode, DivSylReport, CONSTANCY_SAMPLES,
    DEFAULT_SAMPLES,
};
pub use lattice::{
    p_subgroup_classes, subgroup_classes, SubgroupClass, SubgroupClassTable, SYLOW_WALK_BOUND,
};
