use grp_core::constructors::{catalog, Catalog, CatalogEntry};
use grp_core::perm::ops::{conjugacy_classes, is_solvable, normal_closure};
use grp_core::series::{
    chief_series, compare_series, composition_series, induced_aut, rc_series, rc_series_seeded, section_centralizer,
    solvable_radical, Section,
};
use grp_core::PermGroup;

fn entries_up_to(bound: u64) -> Vec<CatalogEntry> {
    catalog(Catalog::All)
        .unwrap()
        .into_iter()
        .filter(|e| e.group.order() <= bound)
        .collect()
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

fn is_simple(q: &PermGroup) -> bool {
    if q.order() == 1 {
        return false;
    }
    conjugacy_classes(q)
        .unwrap()
        .iter()
        .filter(|c| !c.representative.is_identity())
        .all(|c| normal_closure(q, std::slice::from_ref(&c.representative)).unwrap().order() == q.order())
}

#[test]
fn jordan_holder_across_seeds() {
    for e in entries_up_to(10_000) {
        let reference = sorted(composition_series(&e.group, 0).unwrap().section_orders());
        assert_eq!(reference.iter().product::<u64>(), e.group.order());
        for seed in 1..5 {
            let s = composition_series(&e.group, seed).unwrap();
            assert!(s.normal_in_next().iter().all(|&b| b), "{} seed {seed}", e.name);
            assert_eq!(sorted(s.section_orders()), reference, "{} seed {seed}", e.name);
        }
    }
}

#[test]
fn rc_series_refines_chief_with_simple_sections() {
    for e in entries_up_to(10_000) {
        let chief = chief_series(&e.group).unwrap();
        assert!(chief.normal_in_group().iter().all(|&b| b), "{}", e.name);
        for s in [rc_series(&e.group).unwrap(), rc_series_seeded(&e.group, 3).unwrap()] {
            assert!(s.refines(&chief), "{}", e.name);
            assert!(s.normal_in_next().iter().all(|&b| b), "{}", e.name);
            for sec in s.sections().unwrap() {
                assert!(is_simple(&sec.quotient), "{}: section of order {}", e.name, sec.order());
            }
        }
    }
}

#[test]
fn chief_factors_are_minimal_normal_in_quotient() {
    for e in entries_up_to(2000) {
        let chief = chief_series(&e.group).unwrap();
        for w in chief.chain.windows(2) {
            // No normal subgroup of G lies strictly between consecutive terms.
            for c in conjugacy_classes(&w[1]).unwrap() {
                if w[0].contains(&c.representative) {
                    continue;
                }
                let mut seeds = w[0].generators().to_vec();
                seeds.push(c.representative.clone());
                let n = normal_closure(&e.group, &seeds).unwrap();
                assert_eq!(n.order(), w[1].order(), "{}", e.name);
            }
        }
    }
}

#[test]
fn induced_kernel_is_section_centralizer() {
    for e in entries_up_to(1500) {
        for s in [chief_series(&e.group).unwrap(), rc_series(&e.group).unwrap()] {
            for sec in s.sections().unwrap() {
                let aut = induced_aut(&e.group, &sec).unwrap();
                let scan = section_centralizer(&e.group, &sec).unwrap();
                assert!(aut.kernel.same_group(&scan), "{}: section of order {}", e.name, sec.order());
                assert_eq!(aut.order() * aut.kernel.order(), aut.normalizer.order());
            }
        }
    }
}

#[test]
fn rc_aut_orders_agree_between_series() {
    for e in entries_up_to(10_000) {
        let first = rc_series(&e.group).unwrap();
        for seed in [1, 2] {
            let second = rc_series_seeded(&e.group, seed).unwrap();
            let m = compare_series(&e.group, &first, &second).unwrap();
            assert!(m.sigma.is_some(), "{} seed {seed}", e.name);
            assert_eq!(
                sorted(m.aut_orders_first.clone()),
                sorted(m.aut_orders_second.clone()),
                "{} seed {seed}",
                e.name
            );
        }
    }
}

#[test]
fn radical_is_largest_solvable_normal() {
    for e in entries_up_to(10_000) {
        let r = solvable_radical(&e.group).unwrap();
        assert!(is_solvable(&r).unwrap(), "{}", e.name);
        if is_solvable(&e.group).unwrap() {
            assert_eq!(r.order(), e.group.order(), "{}", e.name);
            continue;
        }
        // The quotient has no nontrivial solvable normal subgroup, so its
        // chief series starts with a nonabelian factor.
        if !r.is_trivial() {
            let sec = Section::new(&e.group, &r).unwrap();
            let low = chief_series(&sec.quotient).unwrap();
            assert!(!Section::new(&low.chain[1], &low.chain[0]).unwrap().is_abelian(), "{}", e.name);
        } else {
            let low = chief_series(&e.group).unwrap();
            assert!(!Section::new(&low.chain[1], &low.chain[0]).unwrap().is_abelian(), "{}", e.name);
        }
    }
}
