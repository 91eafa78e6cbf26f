use std::collections::BTreeSet;

use grp_core::arith::{is_p_power, p_part, p_prime_part, prime_divisors};
use grp_core::constructors::{catalog, make, Catalog, CatalogEntry, GroupFamilySpec};
use grp_core::perm::ops::{conjugacy_classes, derived_subgroup, normal_closure};
use grp_core::series::minimal_normal_subgroups;
use grp_core::subgroups::oracle::brute_subgroups;
use grp_core::subgroups::{divsyl_check, subgroup_classes, DivSylMode};
use grp_core::sylow::{check_nu_factorization, extension_check, is_p_solvable, nu_p, sylow_subgroup};
use grp_core::{PermGroup, Permutation};

fn entries_up_to(bound: u64) -> Vec<CatalogEntry> {
    catalog(Catalog::All)
        .unwrap()
        .into_iter()
        .filter(|e| e.group.order() <= bound)
        .collect()
}

/// Sylow count by conjugating one Sylow subgroup by every element and
/// collecting the distinct element sets.
fn conjugate_set_count(g: &PermGroup, p: u64) -> u64 {
    let sylow = sylow_subgroup(g, p).unwrap();
    let elems = sylow.elements(u64::MAX).unwrap();
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
fn introduction_counterexample() {
    let a5 = make(&GroupFamilySpec::Alt(5)).unwrap();
    let a4 = make(&GroupFamilySpec::Alt(4)).unwrap();
    assert_eq!(nu_p(&a5, 3).unwrap().nu_p, 10);
    assert_eq!(nu_p(&a4, 3).unwrap().nu_p, 4);
    let r = divsyl_check(&a5, 3, DivSylMode::Full).unwrap();
    let bad: Vec<u64> = r.violations().map(|c| c.order).collect();
    assert_eq!(bad, vec![12]);
}

#[test]
fn nu_p_matches_conjugate_sets() {
    for e in entries_up_to(5000) {
        for p in prime_divisors(e.group.order()) {
            let c = nu_p(&e.group, p).unwrap();
            assert!(c.is_consistent(), "{} p={p}", e.name);
            assert_eq!(c.nu_p % p, 1 % p, "{} p={p}", e.name);
            assert_eq!(p_prime_part(e.group.order(), p) % c.nu_p, 0, "{} p={p}", e.name);
            assert_eq!(c.sylow.order(), p_part(e.group.order(), p));
            assert_eq!(c.nu_p, conjugate_set_count(&e.group, p), "{} p={p}", e.name);
        }
    }
}

#[test]
fn nu_p_matches_brute_lattice() {
    for e in entries_up_to(200) {
        let lat = brute_subgroups(&e.group).unwrap();
        for p in prime_divisors(e.group.order()) {
            let pp = p_part(e.group.order(), p) as usize;
            assert_eq!(
                nu_p(&e.group, p).unwrap().nu_p,
                lat.count_of_order(pp) as u64,
                "{} p={p}",
                e.name
            );
        }
    }
}

#[test]
fn pgammal2_32_sylow_five() {
    let g = make(&GroupFamilySpec::Pgammal2(32)).unwrap();
    assert_eq!(g.order(), 163_680);
    let c = nu_p(&g, 5).unwrap();
    assert_eq!(c.nu_p, 5456);
    assert!(c.is_consistent());
    // Sylow 5-subgroups have order 5, so they meet trivially and each
    // holds four elements of order 5.
    let mut order_five = 0u64;
    for r in 0..g.order() {
        if g.unrank(r).order() == 5 {
            order_five += 1;
        }
    }
    assert_eq!(order_five, 4 * 5456);
}

#[test]
fn nu_factorization_on_catalog() {
    for e in entries_up_to(10_000) {
        let mut normals = minimal_normal_subgroups(&e.group).unwrap();
        normals.push(derived_subgroup(&e.group).unwrap());
        for a in &normals {
            for p in prime_divisors(e.group.order()) {
                let f = check_nu_factorization(&e.group, a, p).unwrap();
                assert!(f.holds(), "{} |A|={} p={p}: {f:?}", e.name, a.order());
            }
        }
    }
}

#[test]
fn extension_property() {
    for e in entries_up_to(2000) {
        for a in minimal_normal_subgroups(&e.group).unwrap() {
            for p in prime_divisors(e.group.order()) {
                let r = extension_check(&e.group, &a, p).unwrap();
                assert!(!r.outcome().is_failure(), "{} |A|={} p={p}", e.name, a.order());
            }
        }
    }
}

#[test]
fn lattice_matches_brute_force() {
    for e in entries_up_to(1000) {
        let table = subgroup_classes(&e.group).unwrap();
        let mut ours: Vec<(u64, u64)> = table.classes.iter().map(|c| (c.order, c.class_size)).collect();
        ours.sort_unstable();
        let brute = brute_subgroups(&e.group).unwrap();
        assert_eq!(ours, brute.class_profile(), "{}", e.name);
        assert_eq!(table.total_subgroups(), brute.subgroups.len() as u64, "{}", e.name);
    }
}

#[test]
fn navarro_property() {
    let mut checked = 0;
    for e in catalog(Catalog::Small).unwrap() {
        for p in prime_divisors(e.group.order()) {
            if !is_p_solvable(&e.group, p).unwrap() {
                continue;
            }
            let r = divsyl_check(&e.group, p, DivSylMode::Full).unwrap();
            assert!(r.satisfies(), "{} p={p}", e.name);
            checked += 1;
        }
    }
    assert!(checked > 50);
}

#[test]
fn subgroup_nu_never_exceeds_group_nu() {
    for e in entries_up_to(2000) {
        for p in prime_divisors(e.group.order()) {
            let r = divsyl_check(&e.group, p, DivSylMode::Full).unwrap();
            assert!(r.flags_consistent(), "{} p={p}", e.name);
            for c in &r.classes {
                assert!(c.nu_p <= r.nu_p_g, "{} p={p} class of order {}", e.name, c.order);
                assert_eq!(c.divides, r.nu_p_g.is_multiple_of(c.nu_p));
            }
        }
    }
}

#[test]
fn simple_families_are_simple() {
    use GroupFamilySpec::*;
    for spec in [Alt(5), Alt(6), Alt(7), Psl2(7), Psl2(8), Psl2(11), Psl2(13), Psl2(16), Psl2(17)] {
        let g = make(&spec).unwrap();
        assert!(g.order() <= 10_000);
        for c in conjugacy_classes(&g).unwrap() {
            if c.representative.is_identity() {
                continue;
            }
            let n = normal_closure(&g, std::slice::from_ref(&c.representative)).unwrap();
            assert_eq!(n.order(), g.order(), "{spec}");
        }
    }
}

#[test]
fn sylow_orders_are_p_powers() {
    for e in entries_up_to(10_000) {
        for p in prime_divisors(e.group.order()) {
            let s = sylow_subgroup(&e.group, p).unwrap();
            assert!(is_p_power(s.order(), p));
            assert!(s.is_subgroup_of(&e.group));
        }
    }
}
