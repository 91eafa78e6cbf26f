//! Chief, composition and rc-series, sections and induced automorphisms.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{gcd, is_p_power};
use crate::perm::ops::{self, ConjugacyClass};
use crate::perm::CosetTable;
use crate::{Error, Homomorphism, Outcome, PermGroup, Permutation, Result, COSET_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Chief,
    Composition,
    Rc,
}

/// An ascending chain `1 = G_0 < G_1 < … < G_n = G`.
#[derive(Clone, Debug)]
pub struct SectionSeries {
    pub group: PermGroup,
    pub chain: Vec<PermGroup>,
    pub kind: SeriesKind,
}

impl SectionSeries {
    pub fn len(&self) -> usize {
        self.chain.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `|G_i : G_{i-1}|` for `i = 1..=n`.
    pub fn section_orders(&self) -> Vec<u64> {
        self.chain
            .windows(2)
            .map(|w| w[1].order() / w[0].order())
            .collect()
    }

    pub fn section(&self, i: usize) -> Result<Section> {
        Section::new(&self.chain[i + 1], &self.chain[i])
    }

    pub fn sections(&self) -> Result<Vec<Section>> {
        (0..self.len()).map(|i| self.section(i)).collect()
    }

    /// Term `i` is normal in the whole group.
    pub fn normal_in_group(&self) -> Vec<bool> {
        self.chain.iter().map(|h| ops::is_normal(&self.group, h)).collect()
    }

    /// Term `i` is normal in term `i + 1`.
    pub fn normal_in_next(&self) -> Vec<bool> {
        self.chain
            .windows(2)
            .map(|w| ops::is_normal(&w[1], &w[0]))
            .collect()
    }

    /// Every term of `other` occurs in this chain.
    pub fn refines(&self, other: &SectionSeries) -> bool {
        other
            .chain
            .iter()
            .all(|h| self.chain.iter().any(|k| k.same_group(h)))
    }
}

/// Isomorphism-type fingerprint of a group: order, commutativity and the
/// histogram of element orders.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: u64,
    pub abelian: bool,
    pub element_orders: Vec<(u64, u64)>,
}

pub fn fingerprint(g: &PermGroup) -> Result<Fingerprint> {
    Ok(Fingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        element_orders: g.element_order_histogram(crate::SCAN_BOUND)?,
    })
}

/// A section `A/B` with `B ⊴ A`, realized on the right cosets of `B`.
#[derive(Clone, Debug)]
pub struct Section {
    pub upper: PermGroup,
    pub lower: PermGroup,
    /// `A/B`, or `A` itself when `B` is trivial.
    pub quotient: PermGroup,
}

impl Section {
    pub fn new(upper: &PermGroup, lower: &PermGroup) -> Result<Self> {
        if !ops::is_normal(upper, lower) {
            return Err(Error::NotNormal);
        }
        let quotient = if lower.is_trivial() {
            upper.clone()
        } else {
            ops::quotient_group(upper, lower)?.0
        };
        Ok(Section {
            upper: upper.clone(),
            lower: lower.clone(),
            quotient,
        })
    }

    pub fn order(&self) -> u64 {
        self.upper.order() / self.lower.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.quotient.is_abelian()
    }

    pub fn fingerprint(&self) -> Result<Fingerprint> {
        fingerprint(&self.quotient)
    }
}

/// Minimal normal subgroups: the minimal members among normal closures of
/// conjugacy-class representatives.
pub fn minimal_normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut closures: Vec<PermGroup> = Vec::new();
    for c in ops::conjugacy_classes(g)?.iter().skip(1) {
        if closures.iter().any(|n| n.contains(&c.representative) && n.is_trivial()) {
            continue;
        }
        let n = ops::normal_closure(g, core::slice::from_ref(&c.representative))?;
        if !closures.iter().any(|m| m.same_group(&n)) {
            closures.push(n);
        }
    }
    let minimal = closures
        .iter()
        .filter(|n| {
            !closures
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .cloned()
        .collect();
    Ok(minimal)
}

fn ncl_with(g: &PermGroup, base: &PermGroup, x: &Permutation) -> Result<PermGroup> {
    let mut seeds = base.generators().to_vec();
    seeds.push(x.clone());
    ops::normal_closure(g, &seeds)
}

/// Chief series; each step adds a minimal normal subgroup of the quotient,
/// found as the smallest `ncl_G(M ∪ {x})` over class representatives `x`.
pub fn chief_series(g: &PermGroup) -> Result<SectionSeries> {
    let classes = ops::conjugacy_classes(g)?;
    let mut chain = vec![PermGroup::trivial(g.degree())];
    loop {
        let m = chain.last().expect("nonempty").clone();
        if m.order() == g.order() {
            break;
        }
        let mut best: Option<PermGroup> = None;
        for c in &classes {
            if m.contains(&c.representative) {
                continue;
            }
            let n = ncl_with(g, &m, &c.representative)?;
            if best.as_ref().is_none_or(|b| n.order() < b.order()) {
                best = Some(n);
            }
        }
        chain.push(best.expect("a representative lies outside a proper subgroup"));
    }
    Ok(SectionSeries {
        group: g.clone(),
        chain,
        kind: SeriesKind::Chief,
    })
}

/// A maximal normal subgroup of `x` containing the normal subgroup `b`,
/// built greedily over the class representatives of `x` in `order`.
fn maximal_normal_over(x: &PermGroup, b: &PermGroup, classes: &[ConjugacyClass]) -> Result<PermGroup> {
    let mut y = b.clone();
    for c in classes {
        if y.contains(&c.representative) {
            continue;
        }
        let n = ncl_with(x, &y, &c.representative)?;
        if n.order() < x.order() {
            y = n;
        }
    }
    Ok(y)
}

/// Descending refinement `top > … > bottom` with simple sections, each
/// term a maximal normal subgroup of the previous one.
fn refine(top: &PermGroup, bottom: &PermGroup, rng: Option<&mut ChaCha8Rng>) -> Result<Vec<PermGroup>> {
    let mut out = vec![top.clone()];
    let mut rng = rng;
    loop {
        let x = out.last().expect("nonempty").clone();
        if x.order() == bottom.order() {
            return Ok(out);
        }
        let mut classes = ops::conjugacy_classes(&x)?;
        if let Some(r) = rng.as_deref_mut() {
            classes.shuffle(r);
        }
        out.push(maximal_normal_over(&x, bottom, &classes)?);
    }
}

/// Composition series. Seed 0 gives the canonical series; other seeds
/// visit class representatives in a shuffled order and may give a
/// different series with the same composition factors.
pub fn composition_series(g: &PermGroup, seed: u64) -> Result<SectionSeries> {
    let trivial = PermGroup::trivial(g.degree());
    let mut chain = if seed == 0 {
        refine(g, &trivial, None)?
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        refine(g, &trivial, Some(&mut rng))?
    };
    chain.reverse();
    Ok(SectionSeries {
        group: g.clone(),
        chain,
        kind: SeriesKind::Composition,
    })
}

/// A composition series refining the chief series: each chief factor is
/// refined top-down, lowest factor first.
pub fn rc_series(g: &PermGroup) -> Result<SectionSeries> {
    rc_series_seeded(g, 0)
}

/// As [`rc_series`]; nonzero seeds shuffle the refinement choices.
pub fn rc_series_seeded(g: &PermGroup, seed: u64) -> Result<SectionSeries> {
    let chief = chief_series(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chain = vec![chief.chain[0].clone()];
    for w in chief.chain.windows(2) {
        let mut part = if seed == 0 {
            refine(&w[1], &w[0], None)?
        } else {
            refine(&w[1], &w[0], Some(&mut rng))?
        };
        part.reverse();
        chain.extend(part.into_iter().skip(1));
    }
    Ok(SectionSeries {
        group: g.clone(),
        chain,
        kind: SeriesKind::Rc,
    })
}

/// `Aut_X(A/B)` as a permutation group on the cosets of `B` in `A`.
#[derive(Clone, Debug)]
pub struct InducedAutGroup {
    pub section: Section,
    /// `N_X(A) ∩ N_X(B)`.
    pub normalizer: PermGroup,
    /// `C_X(A/B)`, the kernel of the action.
    pub kernel: PermGroup,
    pub image: PermGroup,
    /// The automorphisms induced by `A` itself.
    pub inner_image: PermGroup,
    pub action: Homomorphism,
    cosets: CosetTable,
}

impl InducedAutGroup {
    pub fn order(&self) -> u64 {
        self.image.order()
    }

    /// The permutation of section points induced by `x ∈ N_X(A/B)`.
    pub fn induced(&self, x: &Permutation) -> Permutation {
        self.cosets.conjugation_action(x)
    }

    pub fn coset_table(&self) -> &CosetTable {
        &self.cosets
    }
}

/// The group of automorphisms of `A/B` induced by `x ∈ N_X(A/B)` through
/// `Ba ↦ B x⁻¹ a x`.
pub fn induced_aut(acting: &PermGroup, sec: &Section) -> Result<InducedAutGroup> {
    let na = ops::normalizer(acting, &sec.upper)?;
    let normalizer = if sec.lower.is_trivial() {
        na
    } else {
        ops::intersection(&na, &ops::normalizer(acting, &sec.lower)?)?
    };
    let cosets = CosetTable::new(&sec.upper, &sec.lower, COSET_BOUND)?;
    let images: Vec<Permutation> = normalizer
        .generators()
        .iter()
        .map(|x| cosets.conjugation_action(x))
        .collect();
    let action = Homomorphism::new(&normalizer, cosets.index(), images)?;
    let kernel = action.kernel()?;
    let image = action.image_group().clone();
    let inner = sec
        .upper
        .generators()
        .iter()
        .map(|a| cosets.conjugation_action(a))
        .collect();
    let inner_image = PermGroup::new(cosets.index(), inner)?;
    Ok(InducedAutGroup {
        section: sec.clone(),
        normalizer,
        kernel,
        image,
        inner_image,
        action,
        cosets,
    })
}

/// `C_X(A/B)` by direct scan: elements of `N_X(A/B)` fixing every coset.
pub fn section_centralizer(acting: &PermGroup, sec: &Section) -> Result<PermGroup> {
    let aut = induced_aut(acting, sec)?;
    let table = &aut.cosets;
    let reps = table.reps().to_vec();
    let mut c = PermGroup::trivial(acting.degree());
    let mut err = None;
    let _ = aut.normalizer.visit_elements(|x| {
        if c.contains(x) {
            return core::ops::ControlFlow::Continue(());
        }
        let fixes = reps
            .iter()
            .enumerate()
            .all(|(i, a)| table.coset_of(&a.conjugate_by(x)) == Some(i));
        if fixes {
            match c.extended(x) {
                Ok(n) => c = n,
                Err(e) => {
                    err = Some(e);
                    return core::ops::ControlFlow::Break(());
                }
            }
        }
        core::ops::ControlFlow::Continue(())
    });
    match err {
        Some(e) => Err(e),
        None => Ok(c),
    }
}

/// Outcome of matching the sections of two series.
#[derive(Clone, Debug)]
pub struct SeriesMatching {
    /// `sigma[i]` is the section of the second series paired with
    /// section `i` of the first; `None` if no pairing exists.
    pub sigma: Option<Vec<usize>>,
    pub aut_orders_first: Vec<u64>,
    pub aut_orders_second: Vec<u64>,
    pub fingerprints_first: Vec<Fingerprint>,
    pub fingerprints_second: Vec<Fingerprint>,
}

fn augment(i: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
    for &j in &adj[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        if owner[j].is_none_or(|k| augment(k, adj, seen, owner)) {
            owner[j] = Some(i);
            return true;
        }
    }
    false
}

/// Pairs sections of equal fingerprint such that `|Aut_G|` of each section
/// of `s1` divides that of its partner in `s2` (equality when `s1` is an
/// rc-series too). The identity pairing is tried first.
pub fn compare_series(g: &PermGroup, s1: &SectionSeries, s2: &SectionSeries) -> Result<SeriesMatching> {
    if s1.len() != s2.len() {
        return Err(Error::InvalidParameter(format!(
            "series lengths differ: {} and {}",
            s1.len(),
            s2.len()
        )));
    }
    let data = |s: &SectionSeries| -> Result<(Vec<u64>, Vec<Fingerprint>)> {
        let mut orders = Vec::new();
        let mut fps = Vec::new();
        for sec in s.sections()? {
            orders.push(induced_aut(g, &sec)?.order());
            fps.push(sec.fingerprint()?);
        }
        Ok((orders, fps))
    };
    let (a1, f1) = data(s1)?;
    let (a2, f2) = data(s2)?;
    let exact = s1.kind == SeriesKind::Rc && s2.kind == SeriesKind::Rc;
    let n = s1.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut v: Vec<usize> = (0..n)
                .filter(|&j| {
                    f1[i] == f2[j] && if exact { a1[i] == a2[j] } else { a2[j] % a1[i] == 0 }
                })
                .collect();
            v.sort_by_key(|&j| j != i);
            v
        })
        .collect();
    let mut owner = vec![None; n];
    let mut ok = true;
    for i in 0..n {
        let mut seen = vec![false; n];
        if !augment(i, &adj, &mut seen, &mut owner) {
            ok = false;
            break;
        }
    }
    let sigma = ok.then(|| {
        let mut s = vec![0; n];
        for (j, o) in owner.iter().enumerate() {
            s[o.expect("perfect matching")] = j;
        }
        s
    });
    Ok(SeriesMatching {
        sigma,
        aut_orders_first: a1,
        aut_orders_second: a2,
        fingerprints_first: f1,
        fingerprints_second: f2,
    })
}

/// Grows the `p`-subgroup `q` to a Sylow subgroup of `g` containing it.
pub fn sylow_containing(g: &PermGroup, q: &PermGroup, p: u64) -> Result<PermGroup> {
    crate::sylow::grow_to_sylow(g, q.clone(), p)
}

/// Checks `N_K(P) ≤ N_K(Q)` and `N_K(Q)H/H = N_{K/H}(QH/H) = C_{K/H}(Q/H)`
/// for a normal series `1 ⊴ H ⊴ K ⊴ G` with `H` a `p`-group, `K/H` a
/// `p'`-group and `G/K` a `p`-group, `H ≤ Q` a `p`-subgroup and `P` a
/// Sylow subgroup containing `Q`.
pub fn lemma6_check(g: &PermGroup, h: &PermGroup, k: &PermGroup, q: &PermGroup, p: u64) -> Result<Outcome> {
    let clauses: [(bool, &str); 8] = [
        (ops::is_normal(g, h), "H normal in G"),
        (ops::is_normal(g, k), "K normal in G"),
        (h.is_subgroup_of(k), "H ≤ K"),
        (is_p_power(h.order(), p), "H is a p-group"),
        (gcd(k.order() / h.order(), p) == 1, "K/H is a p'-group"),
        (is_p_power(g.order() / k.order(), p), "G/K is a p-group"),
        (q.is_subgroup_of(g) && is_p_power(q.order(), p), "Q is a p-subgroup of G"),
        (h.is_subgroup_of(q), "H ≤ Q"),
    ];
    if let Some((_, clause)) = clauses.iter().find(|(ok, _)| !ok) {
        return Ok(Outcome::inapplicable(*clause));
    }
    let sylow = sylow_containing(g, q, p)?;
    let nkp = ops::normalizer(k, &sylow)?;
    let nkq = ops::normalizer(k, q)?;
    if !nkp.is_subgroup_of(&nkq) {
        return Ok(Outcome::fails(format!(
            "N_K(P) of order {} is not inside N_K(Q) of order {}",
            nkp.order(),
            nkq.order()
        )));
    }
    let (_, bar) = if h.is_trivial() {
        let id = Homomorphism::new(g, g.degree(), g.generators().to_vec())?;
        (g.clone(), id)
    } else {
        ops::quotient_group(g, h)?
    };
    let img = |s: &PermGroup| -> Result<PermGroup> {
        let gens = s
            .generators()
            .iter()
            .map(|x| bar.image(x))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(bar.target_degree(), gens)
    };
    let k_bar = img(k)?;
    let q_bar = img(q)?;
    let n_bar = img(&nkq)?;
    let norm_bar = ops::normalizer(&k_bar, &q_bar)?;
    let cent_bar = ops::centralizer(&k_bar, &q_bar)?;
    let mut problems: Vec<String> = Vec::new();
    if !n_bar.same_group(&norm_bar) {
        problems.push(format!(
            "image of N_K(Q) has order {} but N_(K/H)(Q/H) has order {}",
            n_bar.order(),
            norm_bar.order()
        ));
    }
    if !norm_bar.same_group(&cent_bar) {
        problems.push(format!(
            "N_(K/H)(Q/H) has order {} but C_(K/H)(Q/H) has order {}",
            norm_bar.order(),
            cent_bar.order()
        ));
    }
    Ok(if problems.is_empty() {
        Outcome::Holds
    } else {
        Outcome::fails(problems.join("; "))
    })
}

/// The largest solvable normal subgroup, generated by the class
/// representatives whose normal closure is solvable.
pub fn solvable_radical(g: &PermGroup) -> Result<PermGroup> {
    let mut seeds = Vec::new();
    for c in ops::conjugacy_classes(g)?.iter().skip(1) {
        let n = ops::normal_closure(g, core::slice::from_ref(&c.representative))?;
        if ops::is_solvable(&n)? {
            seeds.push(c.representative.clone());
        }
    }
    ops::normal_closure(g, &seeds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make, GroupFamilySpec};
    use crate::perm::{DirectProduct, WreathProduct};

    fn fam(s: GroupFamilySpec) -> PermGroup {
        make(&s).unwrap()
    }

    #[test]
    fn minimal_normals() {
        let s4 = fam(GroupFamilySpec::Sym(4));
        let m = minimal_normal_subgroups(&s4).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 4);
        let a5 = fam(GroupFamilySpec::Alt(5));
        let m = minimal_normal_subgroups(&a5).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 60);
        let w = WreathProduct::new(&a5, &fam(GroupFamilySpec::Cyclic(2))).unwrap();
        let m = minimal_normal_subgroups(w.group()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 3600);
    }

    #[test]
    fn s4_series() {
        let s4 = fam(GroupFamilySpec::Sym(4));
        assert_eq!(chief_series(&s4).unwrap().section_orders(), [4, 3, 2]);
        let rc = rc_series(&s4).unwrap();
        assert_eq!(rc.section_orders(), [2, 2, 3, 2]);
        assert!(rc.refines(&chief_series(&s4).unwrap()));
        assert!(rc.normal_in_next().iter().all(|&b| b));
        let a5 = fam(GroupFamilySpec::Alt(5));
        assert_eq!(rc_series(&a5).unwrap().section_orders(), [60]);
    }

    #[test]
    fn induced_examples() {
        let s4 = fam(GroupFamilySpec::Sym(4));
        let v4 = &chief_series(&s4).unwrap().chain[1];
        let sec = Section::new(v4, &PermGroup::trivial(4)).unwrap();
        let aut = induced_aut(&s4, &sec).unwrap();
        assert_eq!(aut.order(), 6);
        assert_eq!(aut.kernel.order(), 4);
        assert!(aut.kernel.same_group(&section_centralizer(&s4, &sec).unwrap()));
        let a5 = fam(GroupFamilySpec::Alt(5));
        let sec = Section::new(&a5, &PermGroup::trivial(5)).unwrap();
        assert_eq!(induced_aut(&a5, &sec).unwrap().order(), 60);
        let rc = rc_series(&s4).unwrap();
        let top = rc.section(3).unwrap();
        assert_eq!(induced_aut(&s4, &top).unwrap().order(), 1);
    }

    #[test]
    fn radicals() {
        let s4 = fam(GroupFamilySpec::Sym(4));
        assert_eq!(solvable_radical(&s4).unwrap().order(), 24);
        assert!(solvable_radical(&fam(GroupFamilySpec::Alt(5))).unwrap().is_trivial());
        let d = DirectProduct::new(&fam(GroupFamilySpec::Alt(5)), &fam(GroupFamilySpec::Cyclic(2))).unwrap();
        assert_eq!(solvable_radical(d.group()).unwrap().order(), 2);
    }

    #[test]
    fn lemma6_examples() {
        let s4 = fam(GroupFamilySpec::Sym(4));
        let ch = chief_series(&s4).unwrap();
        let (v4, a4) = (&ch.chain[1], &ch.chain[2]);
        assert_eq!(lemma6_check(&s4, v4, a4, v4, 2).unwrap(), Outcome::Holds);
        let d8 = crate::sylow::sylow_subgroup(&s4, 2).unwrap();
        assert_eq!(lemma6_check(&s4, v4, a4, &d8, 2).unwrap(), Outcome::Holds);
        assert!(matches!(
            lemma6_check(&s4, v4, a4, v4, 3).unwrap(),
            Outcome::Inapplicable { .. }
        ));
    }

    #[test]
    fn comparisons() {
        let s4 = fam(GroupFamilySpec::Sym(4));
        let a = rc_series(&s4).unwrap();
        let m = compare_series(&s4, &a, &a).unwrap();
        assert_eq!(m.sigma, Some(vec![0, 1, 2, 3]));
        let g = DirectProduct::new(&fam(GroupFamilySpec::Alt(4)), &fam(GroupFamilySpec::Cyclic(2))).unwrap();
        let comp = composition_series(g.group(), 3).unwrap();
        let rc = rc_series(g.group()).unwrap();
        assert!(compare_series(g.group(), &comp, &rc).unwrap().sigma.is_some());
    }
}
