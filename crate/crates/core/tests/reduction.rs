use std::collections::BTreeSet;

use grp_core::arith::prime_divisors;
use grp_core::constructors::{catalog, make, Catalog, GroupFamilySpec};
use grp_core::perm::{ProductReplacement, WreathProduct};
use grp_core::reduction::{
    defining_characteristic_table, main_theorem_check, numpwreath_check, socle_analysis, step4_check, step5_check,
    wreath_embed,
};
use grp_core::subgroups::DivSylMode;
use grp_core::sylow::{nu_p, sylow_subgroup};
use grp_core::{Outcome, PermGroup, Permutation};

fn fam(s: GroupFamilySpec) -> PermGroup {
    make(&s).unwrap()
}

fn wreath_c2(base: GroupFamilySpec) -> WreathProduct {
    WreathProduct::new(&fam(base), &fam(GroupFamilySpec::Cyclic(2))).unwrap()
}

/// Sylow count from distinct conjugate element sets.
fn conjugate_set_count(g: &PermGroup, p: u64) -> u64 {
    let s = sylow_subgroup(g, p).unwrap();
    let elems = s.elements(u64::MAX).unwrap();
    let mut seen: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    for r in 0..g.order() {
        let t = g.unrank(r);
        let mut c: Vec<Permutation> = elems.iter().map(|x| x.conjugate_by(&t)).collect();
        c.sort();
        seen.insert(c);
    }
    seen.len() as u64
}

#[test]
fn wreath_formula_a5() {
    let w = wreath_c2(GroupFamilySpec::Alt(5));
    let a5 = fam(GroupFamilySpec::Alt(5));
    let r = numpwreath_check(&w, &a5, w.group(), 2).unwrap();
    assert_eq!(r.outcome(), Outcome::Holds);
    assert_eq!(r.predicted, Some(15 * 5));
    assert_eq!(r.nu_g, Some(75));
    assert_eq!(conjugate_set_count(w.group(), 2), 75);
    assert_eq!(w.group().degree(), 10);
}

#[test]
fn wreath_formula_s5() {
    let w = wreath_c2(GroupFamilySpec::Sym(5));
    let a5 = fam(GroupFamilySpec::Alt(5));
    let nu_s5 = nu_p(&fam(GroupFamilySpec::Sym(5)), 2).unwrap().nu_p;
    assert_eq!(nu_s5, 15);
    let r = numpwreath_check(&w, &a5, w.group(), 2).unwrap();
    assert_eq!(r.outcome(), Outcome::Holds);
    assert_eq!(r.predicted, Some(15 * nu_s5));
    assert_eq!(r.nu_g, Some(conjugate_set_count(w.group(), 2)));
}

#[test]
fn direct_square_of_a5() {
    let w = wreath_c2(GroupFamilySpec::Alt(5));
    let base = w.base_group().unwrap();
    assert_eq!(nu_p(&base, 2).unwrap().nu_p, 25);
    assert_eq!(conjugate_set_count(&base, 2), 25);
}

fn check_embedding(g: &PermGroup, h: &PermGroup) {
    let d = socle_analysis(g).unwrap();
    let e = wreath_embed(&d, h).unwrap();
    assert_eq!(e.checks.outcome(), Outcome::Holds);
    // Independent recomputation of the defining relation.
    let s1 = &d.factors[0];
    for x in g.generators() {
        let rho = e.rho(x).unwrap();
        for (i, n) in e.cocycle(x).unwrap().iter().enumerate() {
            assert!(s1.conjugate(n).unwrap().same_group(s1));
            let j = rho.image(i as u32) as usize;
            assert_eq!(e.reps[i].compose(x).unwrap(), n.compose(&e.reps[j]).unwrap());
            assert!(h.contains(&e.reps[i]));
        }
    }
    assert_eq!(e.phi.image_group().order(), g.order());
    assert!(e.phi.kernel().unwrap().is_trivial());
    assert!(e.phi.image_of_subgroup(&d.socle).unwrap().same_group(&e.base_socle));
    let mut rng = ProductReplacement::new(g, 7);
    for _ in 0..20 {
        let a = rng.next_element();
        let b = rng.next_element();
        let lhs = e.apply(&a.compose(&b).unwrap()).unwrap();
        assert_eq!(lhs, e.apply(&a).unwrap().compose(&e.apply(&b).unwrap()).unwrap());
        assert_eq!(e.apply(&a).unwrap(), e.phi.image(&a).unwrap());
    }
}

#[test]
fn embeddings() {
    let w = wreath_c2(GroupFamilySpec::Alt(5));
    let g = w.group().clone();
    check_embedding(&g, &g);
    check_embedding(&g, &sylow_subgroup(&g, 2).unwrap());
    let s5 = fam(GroupFamilySpec::Sym(5));
    check_embedding(&s5, &s5);
    check_embedding(&s5, &sylow_subgroup(&s5, 2).unwrap());
    let a5 = fam(GroupFamilySpec::Alt(5));
    check_embedding(&a5, &a5);
    check_embedding(&a5, &PermGroup::trivial(5));
}

#[test]
fn embeddings_on_catalog() {
    for e in catalog(Catalog::All).unwrap() {
        let Ok(d) = socle_analysis(&e.group) else { continue };
        let emb = wreath_embed(&d, &e.group).unwrap();
        assert_eq!(emb.checks.outcome(), Outcome::Holds, "{}", e.name);
        assert_eq!(emb.phi.image_group().order(), e.group.order(), "{}", e.name);
    }
}

#[test]
fn main_theorem_example_rows() {
    let a5 = fam(GroupFamilySpec::Alt(5));
    let s4 = fam(GroupFamilySpec::Sym(4));
    let row = |g: &PermGroup, p| {
        let r = main_theorem_check(g, p).unwrap();
        (r.hypothesis, r.conclusion)
    };
    assert_eq!(row(&a5, 5), (true, true));
    assert_eq!(row(&a5, 3), (false, false));
    assert_eq!(row(&s4, 2), (true, true));
}

#[test]
fn main_theorem_small_catalog() {
    for e in catalog(Catalog::Small).unwrap() {
        for p in prime_divisors(e.group.order()) {
            let r = main_theorem_check(&e.group, p).unwrap();
            assert!(!r.outcome().is_failure(), "{} p={p}", e.name);
        }
    }
}

#[test]
fn step5_on_sampled_supplements() {
    let w = wreath_c2(GroupFamilySpec::Alt(5));
    let g = w.group().clone();
    let t = w.base_group().unwrap();
    let mut rng = ProductReplacement::new(&g, 11);
    let mut tested = 0;
    let mut candidates = vec![g.clone(), sylow_subgroup(&g, 2).unwrap(), sylow_subgroup(&g, 5).unwrap()];
    for _ in 0..30 {
        candidates.push(PermGroup::new(g.degree(), vec![rng.next_element(), rng.next_element()]).unwrap());
    }
    for h in candidates {
        let o = step5_check(&w, &g, &t, &h).unwrap();
        assert!(!o.is_failure(), "{o}");
        if o.holds() {
            tested += 1;
        }
    }
    assert!(tested >= 2);
}

#[test]
fn step4_over_intermediate_subgroups() {
    let w = wreath_c2(GroupFamilySpec::Alt(5));
    let t = w.base_group().unwrap();
    assert_eq!(step4_check(w.group(), &t, 2).unwrap(), Outcome::Holds);
    assert!(matches!(step4_check(w.group(), &t, 3).unwrap(), Outcome::Inapplicable { .. }));
    let w = wreath_c2(GroupFamilySpec::Sym(5));
    let a5 = fam(GroupFamilySpec::Alt(5));
    let t = w.power_of(&a5).unwrap();
    assert_eq!(step4_check(w.group(), &t, 2).unwrap(), Outcome::Holds);
}

#[test]
fn remark_table_is_stable() {
    let a = defining_characteristic_table(&[4, 5, 7, 8, 9]).unwrap();
    let b = defining_characteristic_table(&[4, 5, 7, 8, 9]).unwrap();
    assert_eq!(a, b);
    let verdicts: Vec<(u64, bool)> = a.iter().map(|r| (r.prime, r.satisfies)).collect();
    assert_eq!(verdicts, vec![(2, false), (5, true), (7, true), (2, false), (3, false)]);
    assert!(a.iter().all(|r| r.mode == DivSylMode::Full));
}
