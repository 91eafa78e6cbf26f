use std::collections::HashSet;

use grp_core::constructors::{catalog, make, Catalog, GroupFamilySpec};
use grp_core::perm::ops::{faithful_orbit_restriction, quotient_group};
use grp_core::perm::{DirectProduct, WreathProduct};
use grp_core::subgroups::oracle::brute_elements;
use grp_core::{PermGroup, Permutation};
use proptest::prelude::*;

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn gens_strategy(n: usize) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(perm_strategy(n), 1..4)
}

proptest! {
    #[test]
    fn composition_is_associative(a in perm_strategy(7), b in perm_strategy(7), c in perm_strategy(7)) {
        prop_assert_eq!(a.compose(&b).unwrap().compose(&c).unwrap(), a.compose(&b.compose(&c).unwrap()).unwrap());
    }

    #[test]
    fn right_action(a in perm_strategy(6), b in perm_strategy(6), x in 0u32..6) {
        // Points are acted on from the right: x^(ab) = (x^a)^b.
        prop_assert_eq!(a.compose(&b).unwrap().image(x), b.image(a.image(x)));
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(a.conjugate_by(&b), b.inverse().compose(&a).unwrap().compose(&b).unwrap());
    }

    #[test]
    fn cycle_string_round_trip(a in perm_strategy(8)) {
        let cycles: Vec<Vec<u32>> = a.cycles().into_iter().map(|c| c.into_iter().map(|x| x + 1).collect()).collect();
        prop_assert_eq!(Permutation::from_cycles(8, &cycles).unwrap(), a.clone());
        let order = a.cycles().iter().map(|c| c.len() as u64).fold(1, num_lcm);
        prop_assert_eq!(a.order(), order);
        prop_assert!(a.pow(order as i64).is_identity());
    }

    #[test]
    fn order_and_membership_match_closure(gens in gens_strategy(6), probe in perm_strategy(6)) {
        let g = PermGroup::new(6, gens.clone()).unwrap();
        let elems = brute_elements(6, &gens);
        prop_assert_eq!(g.order(), elems.len() as u64);
        let set: HashSet<_> = elems.iter().cloned().collect();
        prop_assert_eq!(g.contains(&probe), set.contains(&probe));
        for x in &elems {
            prop_assert!(g.contains(x));
        }
    }

    #[test]
    fn rank_unrank_bijection(gens in gens_strategy(5)) {
        let g = PermGroup::new(5, gens).unwrap();
        let mut seen = HashSet::new();
        for r in 0..g.order() {
            let x = g.unrank(r);
            prop_assert_eq!(g.rank(&x), Some(r));
            seen.insert(x);
        }
        prop_assert_eq!(seen.len() as u64, g.order());
    }

    #[test]
    fn restriction_is_faithful(gens in gens_strategy(4), gens2 in gens_strategy(3)) {
        // Two independent blocks of points; the restriction keeps the order.
        let a = PermGroup::new(4, gens).unwrap();
        let b = PermGroup::new(3, gens2).unwrap();
        let d = DirectProduct::new(&a, &b).unwrap();
        let (r, hom) = faithful_orbit_restriction(d.group()).unwrap();
        prop_assert_eq!(r.order(), d.group().order());
        prop_assert!(r.degree() <= 7);
        prop_assert!(hom.kernel().unwrap().is_trivial());
    }
}

fn num_lcm(a: u64, b: u64) -> u64 {
    grp_core::arith::lcm(a, b)
}

#[test]
fn catalog_orders_match_closure() {
    for e in catalog(Catalog::All).unwrap() {
        if e.group.order() > 5000 {
            continue;
        }
        let elems = brute_elements(e.group.degree(), e.group.generators());
        assert_eq!(e.group.order(), elems.len() as u64, "{}", e.name);
        if let Some(spec) = e.family {
            if let Some(n) = spec.expected_order() {
                assert_eq!(n, e.group.order(), "{}", e.name);
            }
        }
    }
}

#[test]
fn membership_matches_element_list() {
    let s7 = make(&GroupFamilySpec::Sym(7)).unwrap();
    for spec in [GroupFamilySpec::Alt(7), GroupFamilySpec::Dihedral(7), GroupFamilySpec::Cyclic(7)] {
        let g = make(&spec).unwrap();
        if g.degree() != 7 {
            continue;
        }
        let set: HashSet<_> = brute_elements(7, g.generators()).into_iter().collect();
        for r in 0..s7.order() {
            let x = s7.unrank(r);
            assert_eq!(g.contains(&x), set.contains(&x), "{spec}");
        }
    }
}

#[test]
fn deterministic_construction() {
    for e in catalog(Catalog::Small).unwrap() {
        let again = PermGroup::new(e.group.degree(), e.group.generators().to_vec()).unwrap();
        assert_eq!(e.group.base(), again.base());
        assert_eq!(e.group.strong_generators(), again.strong_generators());
        if let Some(spec) = e.family {
            assert_eq!(make(&spec).unwrap().generators(), e.group.generators());
        }
    }
}

#[test]
fn quotient_kernel_is_exact() {
    let s4 = make(&GroupFamilySpec::Sym(4)).unwrap();
    let v4 = PermGroup::new(
        4,
        vec![
            Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap(),
            Permutation::from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap(),
        ],
    )
    .unwrap();
    let a4 = make(&GroupFamilySpec::Alt(4)).unwrap();
    for n in [&v4, &a4] {
        let (q, hom) = quotient_group(&s4, n).unwrap();
        assert_eq!(q.order() * n.order(), 24);
        let n_elems: HashSet<_> = brute_elements(4, n.generators()).into_iter().collect();
        for x in brute_elements(4, s4.generators()) {
            assert_eq!(hom.image(&x).unwrap().is_identity(), n_elems.contains(&x));
        }
        assert!(hom.kernel().unwrap().same_group(n));
    }
}

#[test]
fn wreath_coordinates_multiply() {
    let s3 = make(&GroupFamilySpec::Sym(3)).unwrap();
    let c3 = make(&GroupFamilySpec::Cyclic(3)).unwrap();
    let w = WreathProduct::new(&s3, &c3).unwrap();
    assert_eq!(w.group().order(), 6 * 6 * 6 * 3);
    let elems = w.group().elements(1000).unwrap();
    for g in elems.iter().step_by(7) {
        for h in elems.iter().step_by(11) {
            let gh = g.compose(h).unwrap();
            assert_eq!(w.rho(&gh), w.rho(g).compose(&w.rho(h)).unwrap());
            for i in 0..3 {
                let j = w.rho(g).image(i as u32) as usize;
                assert_eq!(w.pi(i, &gh), w.pi(i, g).compose(&w.pi(j, h)).unwrap());
                if j == i && w.rho(h).image(i as u32) as usize == i {
                    assert_eq!(w.pi(i, &gh), w.pi(i, g).compose(&w.pi(i, h)).unwrap());
                }
            }
            let (coords, sigma) = w.decompose(g);
            assert_eq!(&w.assemble(&coords, &sigma), g);
        }
    }
}
