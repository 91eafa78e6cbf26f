//! Named group families and test catalogs.

mod catalog;
mod families;
mod field;

pub use catalog::{catalog, Catalog, CatalogEntry};
pub use families::{aut_overgroup, make, GroupFamilySpec, MAX_CYCLIC, MAX_SYM_DEGREE};
pub use field::{FiniteField, DEFINING_POLYNOMIALS, MAX_FIELD_ORDER};
