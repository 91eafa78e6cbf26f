use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{make, GroupFamilySpec};
use crate::perm::{DirectProduct, WreathProduct};
use crate::{Error, PermGroup, Result};

/// Which named sweep of test groups to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Catalog {
    /// Small groups, mostly solvable, all of order at most 168.
    Small,
    /// Almost simple groups and products of simple groups.
    Families,
    /// `Small` followed by `Families`.
    All,
}

impl FromStr for Catalog {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Catalog::Small),
            "families" => Ok(Catalog::Families),
            "all" => Ok(Catalog::All),
            _ => Err(Error::InvalidParameter(alloc::format!("unknown catalog {s:?}"))),
        }
    }
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Catalog::Small => "small",
            Catalog::Families => "families",
            Catalog::All => "all",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: PermGroup,
    /// Set when the group is a family member, as needed by `aut_overgroup`.
    pub family: Option<GroupFamilySpec>,
}

fn fam(spec: GroupFamilySpec) -> Result<CatalogEntry> {
    Ok(CatalogEntry {
        name: spec.to_string(),
        group: make(&spec)?,
        family: Some(spec),
    })
}

fn named(name: &str, group: PermGroup) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        group,
        family: None,
    }
}

fn direct(specs: &[GroupFamilySpec]) -> Result<PermGroup> {
    let mut g = make(&specs[0])?;
    for s in &specs[1..] {
        g = DirectProduct::new(&g, &make(s)?)?.group().clone();
    }
    Ok(g)
}

fn wreath(base: GroupFamilySpec, top: GroupFamilySpec) -> Result<PermGroup> {
    Ok(WreathProduct::new(&make(&base)?, &make(&top)?)?.group().clone())
}

fn small() -> Result<Vec<CatalogEntry>> {
    use GroupFamilySpec::*;
    let mut out = Vec::new();
    for n in [1, 2, 3, 4, 5, 6, 7, 8, 9, 12] {
        out.push(fam(Cyclic(n))?);
    }
    out.push(named("cyclic(2)xcyclic(2)", direct(&[Cyclic(2), Cyclic(2)])?));
    out.push(named("cyclic(2)xcyclic(4)", direct(&[Cyclic(2), Cyclic(4)])?));
    out.push(named("cyclic(2)^3", direct(&[Cyclic(2), Cyclic(2), Cyclic(2)])?));
    out.push(named("cyclic(3)xcyclic(3)", direct(&[Cyclic(3), Cyclic(3)])?));
    out.push(fam(Sym(3))?);
    out.push(fam(Sym(4))?);
    out.push(fam(Alt(4))?);
    for n in 4..=20 {
        out.push(fam(Dihedral(n))?);
    }
    out.push(fam(Sl2(3))?);
    out.push(named("alt(4)xcyclic(2)", direct(&[Alt(4), Cyclic(2)])?));
    out.push(named("sym(3)xsym(3)", direct(&[Sym(3), Sym(3)])?));
    out.push(named("cyclic(2)wrcyclic(2)", wreath(Cyclic(2), Cyclic(2))?));
    out.push(named("sym(3)wrcyclic(2)", wreath(Sym(3), Cyclic(2))?));
    out.push(fam(Alt(5))?);
    out.push(fam(Sym(5))?);
    out.push(named("alt(5)xcyclic(2)", direct(&[Alt(5), Cyclic(2)])?));
    out.push(fam(Psl2(7))?);
    Ok(out)
}

fn families() -> Result<Vec<CatalogEntry>> {
    use GroupFamilySpec::*;
    let mut out = Vec::new();
    for q in [4, 5, 8, 9, 11, 13] {
        out.push(fam(Psl2(q))?);
    }
    for q in [5, 7, 9, 11] {
        out.push(fam(Pgl2(q))?);
    }
    for q in [4, 8, 9] {
        out.push(fam(Pgammal2(q))?);
    }
    out.push(fam(Alt(6))?);
    out.push(fam(Sym(6))?);
    out.push(fam(Alt(7))?);
    out.push(named("alt(5)xalt(5)", direct(&[Alt(5), Alt(5)])?));
    out.push(named("alt(5)wrcyclic(2)", wreath(Alt(5), Cyclic(2))?));
    Ok(out)
}

/// The groups of a catalog, in canonical order.
pub fn catalog(which: Catalog) -> Result<Vec<CatalogEntry>> {
    match which {
        Catalog::Small => small(),
        Catalog::Families => families(),
        Catalog::All => {
            let mut out = small()?;
            out.extend(families()?);
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_well_formed() {
        let all = catalog(Catalog::All).unwrap();
        let mut names: Vec<&str> = all.iter().map(|e| e.name.as_str()).collect();
        let n = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), n);
        let small = catalog(Catalog::Small).unwrap();
        assert!(small.iter().all(|e| e.group.order() <= 168));
        assert!(all.iter().all(|e| e.group.order() <= 10_000));
    }
}
