//! Subgroup operations built on element scans and stabilizer chains.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use super::{CosetTable, Homomorphism, PermGroup, Permutation};
use crate::{Error, Result, COSET_BOUND, SCAN_BOUND};

pub(crate) fn scan_check(g: &PermGroup, what: &'static str) -> Result<()> {
    if g.order() > SCAN_BOUND {
        return Err(Error::TooLargeForScan {
            what,
            order: g.order(),
            bound: SCAN_BOUND,
        });
    }
    Ok(())
}

fn check_degree(a: &PermGroup, b: &PermGroup) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            expected: a.degree(),
            found: b.degree(),
        });
    }
    Ok(())
}

/// Subgroup of `group` generated incrementally by scanned elements that
/// satisfy `pred`. `start` must be a subgroup of the result.
fn scan_grow<F>(group: &PermGroup, start: PermGroup, what: &'static str, mut pred: F) -> Result<PermGroup>
where
    F: FnMut(&Permutation) -> bool,
{
    scan_check(group, what)?;
    let mut m = start;
    let mut err = None;
    let _ = group.visit_elements(|x| {
        if m.order() == group.order() {
            return ControlFlow::Break(());
        }
        if m.contains(x) || !pred(x) {
            return ControlFlow::Continue(());
        }
        match m.extended(x) {
            Ok(n) => {
                m = n;
                ControlFlow::Continue(())
            }
            Err(e) => {
                err = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(m),
    }
}

/// `x` normalizes `h`.
pub fn normalizes(x: &Permutation, h: &PermGroup) -> bool {
    h.generators().iter().all(|g| h.contains(&g.conjugate_by(x)))
}

/// `N_acting(sub)`; `sub` need not lie in `acting`.
pub fn normalizer(acting: &PermGroup, sub: &PermGroup) -> Result<PermGroup> {
    check_degree(acting, sub)?;
    let start = if sub.is_subgroup_of(acting) {
        sub.clone()
    } else {
        PermGroup::trivial(acting.degree())
    };
    scan_grow(acting, start, "normalizer", |x| normalizes(x, sub))
}

/// `C_acting(sub)`.
pub fn centralizer(acting: &PermGroup, sub: &PermGroup) -> Result<PermGroup> {
    check_degree(acting, sub)?;
    let gens: Vec<Permutation> = sub.generators().to_vec();
    scan_grow(acting, PermGroup::trivial(acting.degree()), "centralizer", |x| {
        gens.iter().all(|g| g.then(x) == x.then(g))
    })
}

pub fn center(g: &PermGroup) -> Result<PermGroup> {
    centralizer(g, g)
}

/// `a ∩ b`, scanning the smaller group.
pub fn intersection(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    check_degree(a, b)?;
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    if small.is_subgroup_of(large) {
        return Ok(small.clone());
    }
    scan_grow(small, PermGroup::trivial(a.degree()), "intersection", |x| large.contains(x))
}

/// Normal closure of `elems` in `group`; the elements must lie in `group`.
pub fn normal_closure(group: &PermGroup, elems: &[Permutation]) -> Result<PermGroup> {
    for e in elems {
        if !group.membership(e)? {
            return Err(Error::NotAMember);
        }
    }
    let gens: Vec<Permutation> = elems.iter().filter(|e| !e.is_identity()).cloned().collect();
    let mut n = PermGroup::new(group.degree(), gens)?;
    let mut i = 0;
    while i < n.generators().len() {
        let h = n.generators()[i].clone();
        for x in group.generators() {
            let c = h.conjugate_by(x);
            if !n.contains(&c) {
                n = n.extended(&c)?;
            }
        }
        i += 1;
    }
    Ok(n)
}

pub fn is_normal(group: &PermGroup, sub: &PermGroup) -> bool {
    sub.is_subgroup_of(group) && sub.is_normalized_by(group)
}

/// `[a, b]` for subgroups normalized by `ambient`.
pub fn commutator_subgroup(ambient: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let mut comms = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            comms.push(x.commutator(y));
        }
    }
    normal_closure(ambient, &comms)
}

pub fn derived_subgroup(g: &PermGroup) -> Result<PermGroup> {
    commutator_subgroup(g, g, g)
}

/// `G ≥ G' ≥ G'' ≥ …` down to the perfect core.
pub fn derived_series(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut out = alloc::vec![g.clone()];
    loop {
        let last = out.last().expect("nonempty");
        let d = derived_subgroup(last)?;
        if d.order() == last.order() {
            return Ok(out);
        }
        out.push(d);
    }
}

pub fn is_solvable(g: &PermGroup) -> Result<bool> {
    Ok(derived_series(g)?.last().expect("nonempty").is_trivial())
}

pub fn is_perfect(g: &PermGroup) -> Result<bool> {
    Ok(derived_subgroup(g)?.order() == g.order())
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// The element of least rank in the class.
    pub representative: Permutation,
    pub size: u64,
}

/// Conjugacy classes, ordered by the rank of their representatives.
pub fn conjugacy_classes(g: &PermGroup) -> Result<Vec<ConjugacyClass>> {
    scan_check(g, "conjugacy classes")?;
    let n = g.order() as usize;
    let mut seen = FixedBitSet::with_capacity(n);
    let mut out = Vec::new();
    for r in 0..n {
        if seen.contains(r) {
            continue;
        }
        let rep = g.unrank(r as u64);
        seen.insert(r);
        let mut queue = alloc::vec![rep.clone()];
        let mut i = 0;
        while i < queue.len() {
            for x in g.generators() {
                let c = queue[i].conjugate_by(x);
                let k = g.rank(&c).ok_or(Error::Inconsistent("conjugate left the group".into()))? as usize;
                if !seen.contains(k) {
                    seen.insert(k);
                    queue.push(c);
                }
            }
            i += 1;
        }
        out.push(ConjugacyClass {
            representative: rep,
            size: queue.len() as u64,
        });
    }
    Ok(out)
}

/// The quotient `g/n` acting on right cosets, with the natural map.
pub fn quotient_group(g: &PermGroup, n: &PermGroup) -> Result<(PermGroup, Homomorphism)> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let table = CosetTable::new(g, n, COSET_BOUND)?;
    let images: Vec<Permutation> = g.generators().iter().map(|x| table.action(x)).collect();
    let hom = Homomorphism::new(g, table.index(), images)?;
    Ok((hom.image_group().clone(), hom))
}

/// Largest subgroup order for which conjugates are keyed by their sorted
/// element ranks.
pub const EXACT_KEY_BOUND: u64 = 5000;

/// Sorted ranks (in `group`) of the elements of `sub^t`, given the elements
/// of `sub`.
pub(crate) fn conjugate_key(group: &PermGroup, elems: &[Permutation], t: &Permutation) -> Result<Vec<u64>> {
    let t_inv = t.inverse();
    let mut key = Vec::with_capacity(elems.len());
    for a in elems {
        let c = t_inv.then(a).then(t);
        key.push(group.rank(&c).ok_or(Error::NotAMember)?);
    }
    key.sort_unstable();
    Ok(key)
}

/// Conjugators `t_0 = 1, t_1, …` such that `sub^{t_j}` runs once over the
/// conjugacy class of `sub` in `group`. `sub` must lie in `group`.
pub fn subgroup_orbit(group: &PermGroup, sub: &PermGroup) -> Result<Vec<Permutation>> {
    if !sub.is_subgroup_of(group) {
        return Err(Error::NotAMember);
    }
    let id = Permutation::identity(group.degree());
    if sub.order() > EXACT_KEY_BOUND {
        // Conjugates correspond to right cosets of the normalizer.
        let n = normalizer(group, sub)?;
        let table = CosetTable::new(group, &n, crate::ORBIT_CAP as u64)?;
        return Ok(table.reps().to_vec());
    }
    let elems = sub.elements(EXACT_KEY_BOUND)?;
    let mut seen = hashbrown::HashSet::new();
    seen.insert(conjugate_key(group, &elems, &id)?);
    let mut out = alloc::vec![id];
    let mut i = 0;
    while i < out.len() {
        for x in group.generators() {
            let t = out[i].then(x);
            let key = conjugate_key(group, &elems, &t)?;
            if seen.insert(key) {
                if out.len() >= crate::ORBIT_CAP {
                    return Err(Error::BoundExceeded {
                        what: "subgroup orbit",
                        size: out.len() as u64 + 1,
                        bound: crate::ORBIT_CAP as u64,
                    });
                }
                out.push(t);
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Restriction of `g` to a union of orbits on which it still acts
/// faithfully, smallest orbits first, relabelled to `0..m`. Returns the
/// restricted group and the restriction map.
pub fn faithful_orbit_restriction(g: &PermGroup) -> Result<(PermGroup, Homomorphism)> {
    let mut orbits: Vec<Vec<u32>> = g.orbits().into_iter().filter(|o| o.len() > 1).collect();
    orbits.sort_by_key(|o| o.len());
    let mut points: Vec<u32> = Vec::new();
    for o in orbits {
        points.extend(o);
        if PermGroup::new(points.len(), restricted_generators(g, &points)?)?.order() == g.order() {
            break;
        }
    }
    let hom = Homomorphism::new(g, points.len(), restricted_generators(g, &points)?)?;
    Ok((hom.image_group().clone(), hom))
}

fn restricted_generators(g: &PermGroup, points: &[u32]) -> Result<Vec<Permutation>> {
    let mut label = alloc::vec![u32::MAX; g.degree()];
    for (i, &pt) in points.iter().enumerate() {
        label[pt as usize] = i as u32;
    }
    g.generators()
        .iter()
        .map(|x| Permutation::from_images(points.iter().map(|&pt| label[x.image(pt) as usize]).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make, GroupFamilySpec};

    fn sym(n: usize) -> PermGroup {
        make(&GroupFamilySpec::Sym(n)).unwrap()
    }

    #[test]
    fn class_counts() {
        let expect = [(3, 3), (4, 5), (5, 7)];
        for (n, k) in expect {
            let cls = conjugacy_classes(&sym(n)).unwrap();
            assert_eq!(cls.len(), k);
            assert_eq!(cls.iter().map(|c| c.size).sum::<u64>(), sym(n).order());
        }
    }

    #[test]
    fn derived_and_quotient() {
        let s4 = sym(4);
        let ser = derived_series(&s4).unwrap();
        let orders: Vec<u64> = ser.iter().map(|g| g.order()).collect();
        assert_eq!(orders, [24, 12, 4, 1]);
        let (q, hom) = quotient_group(&s4, &ser[2]).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(hom.kernel().unwrap().order(), 4);
        assert!(!is_solvable(&sym(5)).unwrap());
    }

    #[test]
    fn orbit_of_subgroups() {
        let a5 = make(&GroupFamilySpec::Alt(5)).unwrap();
        let c3 = PermGroup::new(5, alloc::vec![Permutation::from_cycles(5, &[alloc::vec![1, 2, 3]]).unwrap()]).unwrap();
        assert_eq!(subgroup_orbit(&a5, &c3).unwrap().len(), 10);
        assert_eq!(normalizer(&a5, &c3).unwrap().order(), 6);
        let d8 = PermGroup::new(
            4,
            alloc::vec![
                Permutation::from_cycles(4, &[alloc::vec![1, 2, 3, 4]]).unwrap(),
                Permutation::from_cycles(4, &[alloc::vec![1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(normalizer(&sym(4), &d8).unwrap().order(), 8);
        assert_eq!(subgroup_orbit(&sym(4), &d8).unwrap().len(), 3);
    }

    #[test]
    fn normalizer_centralizer() {
        let s4 = sym(4);
        let c = PermGroup::new(4, alloc::vec![Permutation::from_cycles(4, &[alloc::vec![1, 2]]).unwrap()]).unwrap();
        assert_eq!(normalizer(&s4, &c).unwrap().order(), 4);
        assert_eq!(centralizer(&s4, &c).unwrap().order(), 4);
        assert_eq!(center(&s4).unwrap().order(), 1);
        let a4 = make(&GroupFamilySpec::Alt(4)).unwrap();
        assert_eq!(intersection(&a4, &normalizer(&s4, &c).unwrap()).unwrap().order(), 2);
    }
}
