//! Sylow subgroups, Sylow numbers, `p`-cores and `p`-solvability.

use alloc::format;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{is_prime, p_part, p_prime_part};
use crate::perm::ops::{self, normalizes, EXACT_KEY_BOUND};
use crate::{Error, Outcome, PermGroup, Permutation, Result};

/// Random elements tried when seeding a Sylow subgroup.
const SEED_TRIES: usize = 32;

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Evidence for a Sylow number: one Sylow subgroup, the size of its
/// conjugacy class and the order of its normalizer.
#[derive(Clone, Debug)]
pub struct SylowCertificate {
    pub prime: u64,
    pub group_order: u64,
    pub sylow: PermGroup,
    pub nu_p: u64,
    pub normalizer_order: u64,
}

impl SylowCertificate {
    /// `|P| = |G|_p`, `ν_p ≡ 1 (mod p)`, `ν_p | |G|_{p'}` and
    /// `ν_p · |N_G(P)| = |G|`.
    pub fn is_consistent(&self) -> bool {
        let p = self.prime;
        self.sylow.order() == p_part(self.group_order, p)
            && self.nu_p % p == 1 % p
            && p_prime_part(self.group_order, p).is_multiple_of(self.nu_p)
            && self.nu_p.checked_mul(self.normalizer_order) == Some(self.group_order)
    }
}

/// A Sylow `p`-subgroup, seeded with the default seed 0.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    sylow_subgroup_seeded(g, p, 0)
}

/// A Sylow `p`-subgroup. Starts from the `p`-part of a random element and
/// grows by `p`-elements of `N_G(P) ∖ P` found by an element scan.
pub fn sylow_subgroup_seeded(g: &PermGroup, p: u64, seed: u64) -> Result<PermGroup> {
    check_prime(p)?;
    let target = p_part(g.order(), p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<Permutation> = None;
    let mut best_order = 1;
    if target > 1 {
        for _ in 0..SEED_TRIES {
            let x = g.random_element(&mut rng);
            let o = x.order();
            let y = x.pow(p_prime_part(o, p) as i64);
            let yo = p_part(o, p);
            if yo > best_order {
                best_order = yo;
                best = Some(y);
                if yo == target {
                    break;
                }
            }
        }
    }
    let start = match best {
        Some(y) => PermGroup::new(g.degree(), alloc::vec![y])?,
        None => PermGroup::trivial(g.degree()),
    };
    grow_to_sylow(g, start, p)
}

/// Extends the `p`-subgroup `sylow` of `g` to a Sylow `p`-subgroup.
pub(crate) fn grow_to_sylow(g: &PermGroup, mut sylow: PermGroup, p: u64) -> Result<PermGroup> {
    let target = p_part(g.order(), p);
    while sylow.order() < target {
        ops::scan_check(g, "Sylow subgroup")?;
        let mut found = None;
        let _ = g.visit_elements(|x| {
            if sylow.contains(x) || !normalizes(x, &sylow) {
                return ControlFlow::Continue(());
            }
            let mut k = 1u64;
            let mut y = x.clone();
            while !sylow.contains(&y) {
                y = y.then(x);
                k += 1;
            }
            if k.is_multiple_of(p) {
                found = Some(x.pow((k / p) as i64));
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        let y = found.ok_or_else(|| Error::Inconsistent("no p-element normalizes a non-Sylow p-subgroup".into()))?;
        sylow = sylow.extended(&y)?;
    }
    Ok(sylow)
}

/// Conjugators `t` with `P^t` running once over `Syl_p(G)`.
pub fn sylow_orbit(g: &PermGroup, sylow: &PermGroup) -> Result<Vec<Permutation>> {
    ops::subgroup_orbit(g, sylow)
}

/// `ν_p(G)` as the size of the conjugacy class of one Sylow subgroup.
pub fn sylow_number(g: &PermGroup, p: u64) -> Result<u64> {
    check_prime(p)?;
    if p_part(g.order(), p) == 1 {
        return Ok(1);
    }
    let sylow = sylow_subgroup(g, p)?;
    Ok(sylow_orbit(g, &sylow)?.len() as u64)
}

/// `ν_p(G)` with a certificate. The orbit size and the normalizer order are
/// computed independently; their product is checked against `|G|`.
pub fn nu_p(g: &PermGroup, p: u64) -> Result<SylowCertificate> {
    check_prime(p)?;
    let sylow = sylow_subgroup(g, p)?;
    let nu = if sylow.is_trivial() {
        1
    } else {
        sylow_orbit(g, &sylow)?.len() as u64
    };
    let normalizer_order = if sylow.is_trivial() {
        g.order()
    } else {
        ops::normalizer(g, &sylow)?.order()
    };
    let cert = SylowCertificate {
        prime: p,
        group_order: g.order(),
        sylow,
        nu_p: nu,
        normalizer_order,
    };
    if !cert.is_consistent() {
        return Err(Error::Inconsistent(format!(
            "Sylow certificate: nu={nu}, |N|={normalizer_order}, |G|={}",
            g.order()
        )));
    }
    Ok(cert)
}

/// `O_p(G)`, the intersection of all Sylow `p`-subgroups.
pub fn p_core(g: &PermGroup, p: u64) -> Result<PermGroup> {
    check_prime(p)?;
    let sylow = sylow_subgroup(g, p)?;
    if sylow.is_trivial() {
        return Ok(sylow);
    }
    let orbit = sylow_orbit(g, &sylow)?;
    if sylow.order() > EXACT_KEY_BOUND {
        let mut core = sylow.clone();
        for t in &orbit[1..] {
            core = ops::intersection(&core, &sylow.conjugate(t)?)?;
        }
        return Ok(core);
    }
    let survivors: Vec<Permutation> = sylow
        .elements(EXACT_KEY_BOUND)?
        .into_iter()
        .filter(|a| {
            orbit
                .iter()
                .all(|t| sylow.contains(&t.then(a).then(&t.inverse())))
        })
        .collect();
    PermGroup::new(g.degree(), survivors.into_iter().filter(|a| !a.is_identity()).collect())
}

/// `O_{p'}(G)`, the largest normal `p'`-subgroup. Greedily adds normal
/// closures of `p'`-class representatives while the result stays a
/// `p'`-group; a representative is accepted exactly when it lies in
/// `O_{p'}(G)`.
pub fn p_prime_core(g: &PermGroup, p: u64) -> Result<PermGroup> {
    check_prime(p)?;
    let classes = ops::conjugacy_classes(g)?;
    let mut n = PermGroup::trivial(g.degree());
    loop {
        let mut grew = false;
        for c in &classes {
            let x = &c.representative;
            if x.order() % p == 0 || n.contains(x) {
                continue;
            }
            let mut seeds = n.generators().to_vec();
            seeds.push(x.clone());
            let m = ops::normal_closure(g, &seeds)?;
            if m.order() % p != 0 {
                n = m;
                grew = true;
            }
        }
        if !grew {
            return Ok(n);
        }
    }
}

/// True iff every chief factor of `G` is a `p`-group or a `p'`-group.
pub fn is_p_solvable(g: &PermGroup, p: u64) -> Result<bool> {
    check_prime(p)?;
    let series = crate::series::chief_series(g)?;
    Ok(series.section_orders().iter().all(|&n| {
        let pp = p_part(n, p);
        pp == 1 || pp == n
    }))
}

/// Both sides of `ν_p(G) = ν_p(G/A)·ν_p(PA)` and `ν_p(PA) = |A : N_A(P)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuFactorization {
    pub prime: u64,
    pub nu_g: u64,
    pub nu_quotient: u64,
    pub nu_pa: u64,
    pub index_a_over_normalizer: u64,
}

impl NuFactorization {
    pub fn holds(&self) -> bool {
        self.nu_g == self.nu_quotient * self.nu_pa && self.nu_pa == self.index_a_over_normalizer
    }

    pub fn outcome(&self) -> Outcome {
        Outcome::from_check(self.holds(), || {
            format!(
                "nu(G)={} nu(G/A)={} nu(PA)={} |A:N_A(P)|={}",
                self.nu_g, self.nu_quotient, self.nu_pa, self.index_a_over_normalizer
            )
        })
    }
}

/// Computes every term of the factorization for a normal subgroup `A`.
pub fn check_nu_factorization(g: &PermGroup, a: &PermGroup, p: u64) -> Result<NuFactorization> {
    check_prime(p)?;
    if !ops::is_normal(g, a) {
        return Err(Error::NotNormal);
    }
    let sylow = sylow_subgroup(g, p)?;
    let nu_g = if sylow.is_trivial() {
        1
    } else {
        sylow_orbit(g, &sylow)?.len() as u64
    };
    let (quotient, _) = ops::quotient_group(g, a)?;
    let nu_quotient = sylow_number(&quotient, p)?;
    let pa = sylow.join(a)?;
    let nu_pa = sylow_number(&pa, p)?;
    let n_a = ops::normalizer(a, &sylow)?;
    Ok(NuFactorization {
        prime: p,
        nu_g,
        nu_quotient,
        nu_pa,
        index_a_over_normalizer: a.order() / n_a.order(),
    })
}

/// Record for the extension lemma: if `PA` and `G/A` satisfy `DivSyl(p)`
/// then so does `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionRecord {
    pub pa_satisfies: bool,
    pub quotient_satisfies: bool,
    pub group_satisfies: bool,
}

impl ExtensionRecord {
    pub fn outcome(&self) -> Outcome {
        if !(self.pa_satisfies && self.quotient_satisfies) {
            return Outcome::inapplicable("PA and G/A do not both satisfy DivSyl(p)");
        }
        Outcome::from_check(self.group_satisfies, || "G violates DivSyl(p)".into())
    }
}

/// Evaluates hypothesis and conclusion of the extension lemma with full
/// subgroup scans.
pub fn extension_check(g: &PermGroup, a: &PermGroup, p: u64) -> Result<ExtensionRecord> {
    use crate::subgroups::{divsyl_check, DivSylMode};
    if !ops::is_normal(g, a) {
        return Err(Error::NotNormal);
    }
    let sylow = sylow_subgroup(g, p)?;
    let pa = sylow.join(a)?;
    let (quotient, _) = ops::quotient_group(g, a)?;
    Ok(ExtensionRecord {
        pa_satisfies: divsyl_check(&pa, p, DivSylMode::Full)?.satisfies(),
        quotient_satisfies: divsyl_check(&quotient, p, DivSylMode::Full)?.satisfies(),
        group_satisfies: divsyl_check(g, p, DivSylMode::Full)?.satisfies(),
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
    fn introduction_values() {
        assert_eq!(nu_p(&fam(GroupFamilySpec::Alt(5)), 3).unwrap().nu_p, 10);
        assert_eq!(nu_p(&fam(GroupFamilySpec::Alt(4)), 3).unwrap().nu_p, 4);
    }

    #[test]
    fn sylow_examples() {
        let a5 = fam(GroupFamilySpec::Alt(5));
        let v = sylow_subgroup(&a5, 2).unwrap();
        assert_eq!(v.order(), 4);
        assert!(v.elements(4).unwrap().iter().all(|x| x.order() <= 2));
        assert!(sylow_subgroup(&a5, 7).unwrap().is_trivial());
        assert_eq!(nu_p(&a5, 2).unwrap().nu_p, 5);
        assert_eq!(nu_p(&a5, 5).unwrap().nu_p, 6);
        let s4 = fam(GroupFamilySpec::Sym(4));
        let d8 = sylow_subgroup(&s4, 2).unwrap();
        assert_eq!(d8.order(), 8);
        assert!(!d8.is_abelian());
        assert_eq!(nu_p(&s4, 2).unwrap().nu_p, 3);
        assert!(sylow_subgroup(&s4, 4).is_err());
    }

    #[test]
    fn cores() {
        let s4 = fam(GroupFamilySpec::Sym(4));
        assert_eq!(p_core(&s4, 2).unwrap().order(), 4);
        assert_eq!(p_core(&s4, 3).unwrap().order(), 1);
        assert_eq!(p_prime_core(&s4, 2).unwrap().order(), 1);
        assert_eq!(p_prime_core(&s4, 3).unwrap().order(), 4);
        let a5 = fam(GroupFamilySpec::Alt(5));
        assert!(p_core(&a5, 2).unwrap().is_trivial());
        assert!(p_prime_core(&a5, 7).unwrap().order() == 60);
        let d8 = fam(GroupFamilySpec::Dihedral(4));
        assert_eq!(p_core(&d8, 2).unwrap().order(), 8);
    }

    #[test]
    fn p_solvability() {
        assert!(is_p_solvable(&fam(GroupFamilySpec::Sym(4)), 2).unwrap());
        assert!(!is_p_solvable(&fam(GroupFamilySpec::Alt(5)), 3).unwrap());
        assert!(is_p_solvable(&fam(GroupFamilySpec::Alt(5)), 7).unwrap());
        assert!(is_p_solvable(&fam(GroupFamilySpec::Dihedral(4)), 2).unwrap());
    }

    #[test]
    fn factorization_examples() {
        let s4 = fam(GroupFamilySpec::Sym(4));
        let v4 = ops::derived_subgroup(&ops::derived_subgroup(&s4).unwrap()).unwrap();
        let f = check_nu_factorization(&s4, &v4, 2).unwrap();
        assert_eq!((f.nu_g, f.nu_quotient, f.nu_pa), (3, 3, 1));
        assert!(f.holds());
        let a5 = fam(GroupFamilySpec::Alt(5));
        let f = check_nu_factorization(&a5, &a5, 3).unwrap();
        assert_eq!((f.nu_g, f.nu_quotient, f.nu_pa), (10, 1, 10));
        let f = check_nu_factorization(&a5, &PermGroup::trivial(5), 3).unwrap();
        assert_eq!((f.nu_g, f.nu_quotient, f.nu_pa), (10, 10, 1));
    }
}
