use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use hashbrown::HashSet;

use super::table::{ElementTable, TableSubgroup};
use crate::arith::{is_p_power, is_prime, p_part, prime_power};
use crate::perm::ops;
use crate::{Error, PermGroup, Result, LATTICE_BOUND};

/// Largest `|G|_p` for the `p`-subgroup search inside a Sylow subgroup,
/// used when `|G|` exceeds the lattice bound.
pub const SYLOW_WALK_BOUND: u64 = 256;

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: PermGroup,
    pub order: u64,
    /// Number of conjugates.
    pub class_size: u64,
    /// Sorted ranks (in the parent group) of the representative's elements.
    /// The representative is the class member whose key is least.
    pub key: Vec<u64>,
}

impl SubgroupClass {
    /// `key` as little-endian bytes.
    pub fn key_bytes(&self) -> Vec<u8> {
        self.key.iter().flat_map(|k| k.to_le_bytes()).collect()
    }
}

/// Subgroup classes of a group, ordered by `(order, key)`.
#[derive(Clone, Debug)]
pub struct SubgroupClassTable {
    pub parent: PermGroup,
    pub classes: Vec<SubgroupClass>,
}

impl SubgroupClassTable {
    pub fn total_subgroups(&self) -> u64 {
        self.classes.iter().map(|c| c.class_size).sum()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn orders(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.order).collect()
    }
}

struct Cyclic {
    gen: u32,
}

fn cyclic_subgroups(t: &ElementTable, keep: impl Fn(u64) -> bool) -> (Vec<Cyclic>, Vec<u32>) {
    let n = t.len();
    let mut cyc_of = vec![u32::MAX; n];
    let mut out = Vec::new();
    for x in 0..n as u32 {
        let ord = t.orders[x as usize] as u64;
        if ord == 1 || cyc_of[x as usize] != u32::MAX || prime_power(ord).is_none() || !keep(ord) {
            continue;
        }
        let id = out.len() as u32;
        let mut y = x;
        for k in 1..=ord {
            if crate::arith::gcd(k, ord) == 1 {
                cyc_of[y as usize] = id;
            }
            y = t.mul(y, x);
        }
        out.push(Cyclic { gen: x });
    }
    (out, cyc_of)
}

struct Found {
    rep: TableSubgroup,
    key: Vec<u32>,
    size: u64,
}

/// Enumeration state: every subgroup found so far, and class data.
struct Lattice<'a> {
    t: &'a ElementTable,
    seen: HashSet<FixedBitSet>,
    classes: Vec<Found>,
}

impl<'a> Lattice<'a> {
    /// Records the conjugacy class of `h` unless already known.
    fn add_class(&mut self, h: TableSubgroup) {
        if self.seen.contains(&h.set) {
            return;
        }
        self.seen.insert(h.set.clone());
        let mut members = vec![h];
        let mut i = 0;
        while i < members.len() {
            for map in &self.t.gen_conj {
                let c = members[i].mapped(map);
                if self.seen.insert(c.set.clone()) {
                    members.push(c);
                }
            }
            i += 1;
        }
        let size = members.len() as u64;
        let best = members
            .into_iter()
            .min_by(|a, b| a.set.ones().cmp(b.set.ones()))
            .expect("nonempty");
        self.classes.push(Found {
            key: best.sorted_elems(),
            rep: best,
            size,
        });
    }

    /// `N_G(R)` as a table subgroup with a small generating set.
    fn normalizer(&self, r: &TableSubgroup) -> TableSubgroup {
        let n = self.t.len();
        let mut norm = TableSubgroup::trivial(self.t);
        for g in 0..n as u32 {
            if norm.contains(g) {
                continue;
            }
            if r.gens.iter().all(|&x| r.contains(self.t.conj(x, g))) {
                norm = norm.join_element(self.t, g, n).expect("no limit");
            }
        }
        norm
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        parent[x as usize] = parent[parent[x as usize] as usize];
        x = parent[x as usize];
    }
    x
}

/// Core enumeration. With `p = Some(p)` only `p`-subgroups are produced.
fn enumerate(t: &ElementTable, p: Option<u64>) -> Vec<Found> {
    let n = t.len();
    let limit = match p {
        Some(p) => p_part(n as u64, p) as usize,
        None => n,
    };
    let (cyclics, cyc_of) = cyclic_subgroups(t, |ord| p.is_none_or(|p| ord % p == 0));
    let mut lat = Lattice {
        t,
        seen: HashSet::new(),
        classes: Vec::new(),
    };
    lat.add_class(TableSubgroup::trivial(t));
    let mut i = 0;
    while i < lat.classes.len() {
        let r = lat.classes[i].rep.clone();
        i += 1;
        if r.order() >= limit {
            continue;
        }
        let norm = lat.normalizer(&r);
        // Orbits of N_G(R) on the cyclic subgroups not inside R.
        let mut parent: Vec<u32> = (0..cyclics.len() as u32).collect();
        for &g in &norm.gens {
            for (c, cyc) in cyclics.iter().enumerate() {
                let d = cyc_of[t.conj(cyc.gen, g) as usize];
                let (a, b) = (find(&mut parent, c as u32), find(&mut parent, d));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        for (c, cyc) in cyclics.iter().enumerate() {
            if find(&mut parent, c as u32) != c as u32 || r.contains(cyc.gen) {
                continue;
            }
            let Some(h) = r.join_element(t, cyc.gen, limit) else {
                continue;
            };
            if let Some(p) = p {
                if !is_p_power(h.order() as u64, p) {
                    continue;
                }
            }
            lat.add_class(h);
        }
    }
    lat.classes
}

fn to_table(t: &ElementTable, mut found: Vec<Found>) -> Result<SubgroupClassTable> {
    found.sort_by(|a, b| (a.rep.order(), &a.key).cmp(&(b.rep.order(), &b.key)));
    let classes = found
        .into_iter()
        .map(|f| {
            Ok(SubgroupClass {
                representative: f.rep.to_group(t)?,
                order: f.rep.order() as u64,
                class_size: f.size,
                key: f.key.iter().map(|&k| k as u64).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubgroupClassTable {
        parent: t.group.clone(),
        classes,
    })
}

/// All conjugacy classes of subgroups, by cyclic extension: every class
/// representative `R` is joined with one cyclic subgroup of prime-power
/// order from each `N_G(R)`-orbit.
pub fn subgroup_classes(g: &PermGroup) -> Result<SubgroupClassTable> {
    let t = ElementTable::new(g, LATTICE_BOUND)?;
    let found = enumerate(&t, None);
    to_table(&t, found)
}

/// Conjugacy classes of `p`-subgroups, including the trivial one.
///
/// Groups above the lattice bound are handled when `|G|_p` is at most
/// [`SYLOW_WALK_BOUND`], by enumerating the subgroups of one Sylow subgroup
/// and fusing them under conjugation in `G`.
pub fn p_subgroup_classes(g: &PermGroup, p: u64) -> Result<SubgroupClassTable> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if g.order() <= LATTICE_BOUND {
        let t = ElementTable::new(g, LATTICE_BOUND)?;
        let found = enumerate(&t, Some(p));
        return to_table(&t, found);
    }
    let pp = p_part(g.order(), p);
    if pp > SYLOW_WALK_BOUND {
        return Err(Error::BoundExceeded {
            what: "Sylow subgroup for p-subgroup search",
            size: pp,
            bound: SYLOW_WALK_BOUND,
        });
    }
    sylow_walk(g, p)
}

fn sylow_walk(g: &PermGroup, p: u64) -> Result<SubgroupClassTable> {
    let sylow = crate::sylow::sylow_subgroup(g, p)?;
    let t = ElementTable::new(&sylow, SYLOW_WALK_BOUND)?;
    let local = enumerate(&t, Some(p));
    // Every subgroup of the Sylow subgroup, keyed by ranks in G.
    let mut all: Vec<(u64, Vec<u64>, PermGroup)> = Vec::new();
    for f in &local {
        let mut members = vec![f.rep.clone()];
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        seen.insert(f.rep.set.clone());
        let mut i = 0;
        while i < members.len() {
            for map in &t.gen_conj {
                let c = members[i].mapped(map);
                if seen.insert(c.set.clone()) {
                    members.push(c);
                }
            }
            i += 1;
        }
        for m in members {
            let h = m.to_group(&t)?;
            let mut key: Vec<u64> = m
                .elems
                .iter()
                .map(|&e| g.rank(&t.permutation(e)).ok_or(Error::NotAMember))
                .collect::<Result<_>>()?;
            key.sort_unstable();
            all.push((h.order(), key, h));
        }
    }
    let mut done: HashSet<Vec<u64>> = HashSet::new();
    let mut classes = Vec::new();
    for (order, key, h) in all {
        if done.contains(&key) {
            continue;
        }
        let elems = h.elements(SYLOW_WALK_BOUND)?;
        let orbit = ops::subgroup_orbit(g, &h)?;
        let mut best: Option<(Vec<u64>, PermGroup)> = None;
        for x in &orbit {
            let k = ops::conjugate_key(g, &elems, x)?;
            if best.as_ref().is_none_or(|(b, _)| k < *b) {
                best = Some((k.clone(), h.conjugate(x)?));
            }
            done.insert(k);
        }
        let (key, rep) = best.expect("orbit is nonempty");
        classes.push(SubgroupClass {
            representative: rep,
            order,
            class_size: orbit.len() as u64,
            key,
        });
    }
    classes.sort_by(|a, b| (a.order, &a.key).cmp(&(b.order, &b.key)));
    Ok(SubgroupClassTable {
        parent: g.clone(),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make, GroupFamilySpec};

    fn fam(s: GroupFamilySpec) -> PermGroup {
        make(&s).unwrap()
    }

    #[test]
    fn small_lattices() {
        let a5 = subgroup_classes(&fam(GroupFamilySpec::Alt(5))).unwrap();
        assert_eq!(a5.orders(), [1, 2, 3, 4, 5, 6, 10, 12, 60]);
        assert_eq!(a5.total_subgroups(), 59);
        let s3 = subgroup_classes(&fam(GroupFamilySpec::Sym(3))).unwrap();
        assert_eq!(s3.orders(), [1, 2, 3, 6]);
        assert_eq!(s3.total_subgroups(), 6);
        let c7 = subgroup_classes(&fam(GroupFamilySpec::Cyclic(7))).unwrap();
        assert_eq!(c7.len(), 2);
        let s4 = subgroup_classes(&fam(GroupFamilySpec::Sym(4))).unwrap();
        assert_eq!(s4.len(), 11);
        assert_eq!(s4.total_subgroups(), 30);
    }

    #[test]
    fn p_subgroups() {
        let a5 = p_subgroup_classes(&fam(GroupFamilySpec::Alt(5)), 2).unwrap();
        assert_eq!(a5.orders(), [1, 2, 4]);
        let s4 = p_subgroup_classes(&fam(GroupFamilySpec::Sym(4)), 2).unwrap();
        assert_eq!(s4.orders(), [1, 2, 2, 4, 4, 4, 8]);
        let a5_7 = p_subgroup_classes(&fam(GroupFamilySpec::Alt(5)), 7).unwrap();
        assert_eq!(a5_7.orders(), [1]);
    }

    #[test]
    fn sylow_walk_agrees_with_lattice() {
        for (s, p) in [
            (GroupFamilySpec::Sym(4), 2),
            (GroupFamilySpec::Sym(5), 2),
            (GroupFamilySpec::Psl2(7), 2),
            (GroupFamilySpec::Alt(6), 3),
        ] {
            let g = fam(s);
            let a = p_subgroup_classes(&g, p).unwrap();
            let b = sylow_walk(&g, p).unwrap();
            assert_eq!(a.orders(), b.orders(), "{s}");
            let sa: Vec<u64> = a.classes.iter().map(|c| c.class_size).collect();
            let sb: Vec<u64> = b.classes.iter().map(|c| c.class_size).collect();
            assert_eq!(sa, sb, "{s}");
        }
    }
}
