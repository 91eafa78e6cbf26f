//! Named validators run over catalog groups.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{
    conjecture_scan, main_theorem_check, numpwreath_check, proposition_check, socle_analysis, subdirect_check,
    wreath_embed, SocleDecomposition, SubdirectWitness,
};
use crate::arith::{is_p_power, prime_divisors};
use crate::constructors::{CatalogEntry, GroupFamilySpec};
use crate::perm::ops;
use crate::series::{compare_series, composition_series, lemma6_check, rc_series, rc_series_seeded};
use crate::subgroups::{divsyl_check, p_subgroup_classes, subgroup_classes, DivSylMode};
use crate::sylow::{check_nu_factorization, extension_check, is_p_solvable, p_core, p_prime_core, sylow_subgroup};
use crate::{Error, Outcome, PermGroup, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lemma {
    NuPFactor,
    Extension,
    PSolvable,
    AlmSimple,
    InducedAuto,
    NormPQP,
    WreathEmbed,
    NumPWreath,
    Subdirect,
    MainTheorem,
    Proposition,
    Conjecture,
}

impl Lemma {
    pub const ALL: [Lemma; 12] = [
        Lemma::NuPFactor,
        Lemma::Extension,
        Lemma::PSolvable,
        Lemma::AlmSimple,
        Lemma::InducedAuto,
        Lemma::NormPQP,
        Lemma::WreathEmbed,
        Lemma::NumPWreath,
        Lemma::Subdirect,
        Lemma::MainTheorem,
        Lemma::Proposition,
        Lemma::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::NuPFactor => "nupfactor",
            Lemma::Extension => "extension",
            Lemma::PSolvable => "psolvable",
            Lemma::AlmSimple => "almsimple",
            Lemma::InducedAuto => "inducedauto",
            Lemma::NormPQP => "normpqp",
            Lemma::WreathEmbed => "wreathembed",
            Lemma::NumPWreath => "numpwreath",
            Lemma::Subdirect => "subdirect",
            Lemma::MainTheorem => "maintheorem",
            Lemma::Proposition => "proposition",
            Lemma::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        Lemma::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown lemma `{s}`")))
    }
}

/// One validator run on one group (and prime, where relevant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaRecord {
    pub lemma: Lemma,
    pub group: String,
    pub prime: Option<u64>,
    /// What was instantiated, e.g. the normal subgroup used.
    pub instance: String,
    pub outcome: Outcome,
}

struct Ctx<'a> {
    lemma: Lemma,
    name: &'a str,
    out: Vec<LemmaRecord>,
}

impl Ctx<'_> {
    fn push(&mut self, prime: Option<u64>, instance: impl Into<String>, outcome: Outcome) {
        self.out.push(LemmaRecord {
            lemma: self.lemma,
            group: self.name.to_string(),
            prime,
            instance: instance.into(),
            outcome,
        });
    }

    /// Records bound errors as inapplicable and propagates the rest.
    fn guard(&mut self, prime: Option<u64>, instance: &str, r: Result<Outcome>) -> Result<()> {
        match r {
            Ok(o) => self.push(prime, instance, o),
            Err(e @ (Error::BoundExceeded { .. } | Error::TooLargeForScan { .. } | Error::Inapplicable(_))) => {
                self.push(prime, instance, Outcome::inapplicable(e.to_string()))
            }
            Err(e) => return Err(e),
        }
        Ok(())
    }
}

fn normal_candidates(g: &PermGroup) -> Result<Vec<(String, PermGroup)>> {
    let mut out: Vec<(String, PermGroup)> = Vec::new();
    for n in crate::series::minimal_normal_subgroups(g)? {
        out.push((format!("minimal normal of order {}", n.order()), n));
    }
    let d = ops::derived_subgroup(g)?;
    if !d.is_trivial() && !out.iter().any(|(_, n)| n.same_group(&d)) {
        out.push((format!("derived subgroup of order {}", d.order()), d));
    }
    Ok(out)
}

/// Socle decomposition of an almost simple group, else `None`.
fn almost_simple(g: &PermGroup) -> Result<Option<SocleDecomposition>> {
    match socle_analysis(g) {
        Ok(d) if d.k() == 1 && d.induced[0].kernel.is_trivial() => Ok(Some(d)),
        Ok(_) | Err(Error::Inapplicable(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn simple_with_overgroup(spec: Option<GroupFamilySpec>) -> Option<GroupFamilySpec> {
    match spec? {
        s @ GroupFamilySpec::Alt(n) if n >= 5 && n != 6 => Some(s),
        s @ GroupFamilySpec::Psl2(q) if q >= 4 => Some(s),
        _ => None,
    }
}

/// Runs one validator on one catalog entry. `seed` drives the randomized
/// series used by `inducedauto`.
pub fn run_lemma(lemma: Lemma, entry: &CatalogEntry, seed: u64) -> Result<Vec<LemmaRecord>> {
    let g = &entry.group;
    let mut ctx = Ctx {
        lemma,
        name: &entry.name,
        out: Vec::new(),
    };
    let primes = prime_divisors(g.order());
    match lemma {
        Lemma::NuPFactor => {
            for (label, a) in normal_candidates(g)? {
                for &p in &primes {
                    let r = check_nu_factorization(g, &a, p).map(|f| f.outcome());
                    ctx.guard(Some(p), &label, r)?;
                }
            }
        }
        Lemma::Extension => {
            for (label, a) in normal_candidates(g)? {
                for &p in &primes {
                    let r = extension_check(g, &a, p).map(|f| f.outcome());
                    ctx.guard(Some(p), &label, r)?;
                }
            }
        }
        Lemma::PSolvable => {
            for &p in &primes {
                let r = (|| {
                    if !is_p_solvable(g, p)? {
                        return Ok(Outcome::inapplicable("G is not p-solvable"));
                    }
                    let rep = divsyl_check(g, p, DivSylMode::Full)?;
                    Ok(Outcome::from_check(rep.satisfies(), || {
                        format!("{} violating classes", rep.violations().count())
                    }))
                })();
                ctx.guard(Some(p), "G", r)?;
            }
        }
        Lemma::AlmSimple => match almost_simple(g)? {
            None => ctx.push(None, "G", Outcome::inapplicable("G is not almost simple")),
            Some(d) => {
                for &p in &primes {
                    let r = (|| {
                        let ps = sylow_subgroup(g, p)?.join(&d.socle)?;
                        if !divsyl_check(&ps, p, DivSylMode::Full)?.satisfies() {
                            return Ok(Outcome::inapplicable("PS violates DivSyl(p)"));
                        }
                        let ok = divsyl_check(g, p, DivSylMode::Full)?.satisfies();
                        Ok(Outcome::from_check(ok, || "G violates DivSyl(p)".into()))
                    })();
                    ctx.guard(Some(p), "PS", r)?;
                }
            }
        },
        Lemma::InducedAuto => {
            let rc = rc_series(g)?;
            let comp = composition_series(g, seed.wrapping_add(1))?;
            let m = compare_series(g, &comp, &rc)?;
            ctx.push(
                None,
                "composition vs rc",
                Outcome::from_check(m.sigma.is_some(), || "no admissible pairing of sections".into()),
            );
            let rc2 = rc_series_seeded(g, seed.wrapping_add(1))?;
            let m = compare_series(g, &rc2, &rc)?;
            let mut a = m.aut_orders_first.clone();
            let mut b = m.aut_orders_second.clone();
            a.sort_unstable();
            b.sort_unstable();
            ctx.push(
                None,
                "rc vs rc",
                Outcome::from_check(m.sigma.is_some() && a == b, || {
                    format!("induced automorphism orders {a:?} vs {b:?}")
                }),
            );
        }
        Lemma::NormPQP => {
            for &p in &primes {
                let r = normpqp(g, p);
                ctx.guard(Some(p), "O_p(G) < O_p,p'(G)", r)?;
            }
        }
        Lemma::WreathEmbed => match socle_analysis(g) {
            Err(Error::Inapplicable(c)) => ctx.push(None, "G", Outcome::inapplicable(c)),
            Err(e) => return Err(e),
            Ok(d) => {
                let e = wreath_embed(&d, g)?;
                ctx.push(None, "H = G", e.checks.outcome());
                for &p in &primes {
                    let s = sylow_subgroup(g, p)?;
                    if s.join(&d.socle)?.order() == g.order() {
                        let e = wreath_embed(&d, &s)?;
                        ctx.push(Some(p), "H = Sylow", e.checks.outcome());
                    }
                }
            }
        },
        Lemma::NumPWreath => match socle_analysis(g) {
            Err(Error::Inapplicable(c)) => ctx.push(None, "G", Outcome::inapplicable(c)),
            Err(e) => return Err(e),
            Ok(d) => {
                let e = wreath_embed(&d, g)?;
                let s = &d.induced[0].inner_image;
                for &p in &primes {
                    let r = numpwreath_check(&e.wreath, s, e.phi.image_group(), p).map(|r| r.outcome());
                    ctx.guard(Some(p), "image of G in Aut_G(S_1) wr rho(G)", r)?;
                }
            }
        },
        Lemma::Subdirect => match socle_analysis(g) {
            Err(Error::Inapplicable(c)) => ctx.push(None, "G", Outcome::inapplicable(c)),
            Err(e) => return Err(e),
            Ok(d) => {
                for &p in &primes {
                    let r = subdirect_all(g, &d, p);
                    ctx.guard(Some(p), "all subgroup classes", r)?;
                }
            }
        },
        Lemma::MainTheorem => {
            for &p in &primes {
                let r = main_theorem_check(g, p).map(|r| r.outcome());
                ctx.guard(Some(p), "G", r)?;
            }
        }
        Lemma::Proposition => match almost_simple(g)? {
            None => ctx.push(None, "G", Outcome::inapplicable("G is not almost simple")),
            Some(d) => {
                for &p in &primes {
                    let r = proposition_check(g, &d.socle, p).map(|r| r.outcome);
                    ctx.guard(Some(p), "socle", r)?;
                }
            }
        },
        Lemma::Conjecture => match simple_with_overgroup(entry.family) {
            None => ctx.push(None, "G", Outcome::inapplicable("no automorphism overgroup")),
            Some(spec) => {
                let (_, aut) = crate::constructors::aut_overgroup(&spec)?;
                for p in prime_divisors(aut.order()) {
                    let r = conjecture_scan(&spec, p).map(|r| r.outcome());
                    ctx.guard(Some(p), "S <= L <= Aut(S)", r)?;
                }
            }
        },
    }
    Ok(ctx.out)
}

/// Instances of the normal-series lemma with `H = O_p(G)`, `K/H = O_{p'}(G/H)`
/// and `Q` running over the `p`-subgroup classes containing `H`.
fn normpqp(g: &PermGroup, p: u64) -> Result<Outcome> {
    let h = p_core(g, p)?;
    let k = if h.is_trivial() {
        p_prime_core(g, p)?
    } else {
        let (quotient, hom) = ops::quotient_group(g, &h)?;
        hom.preimage(&p_prime_core(&quotient, p)?)?
    };
    if !is_p_power(g.order() / k.order(), p) {
        return Ok(Outcome::inapplicable("G/O_p,p'(G) is not a p-group"));
    }
    for c in &p_subgroup_classes(g, p)?.classes {
        let q = &c.representative;
        if !h.is_subgroup_of(q) {
            continue;
        }
        let o = lemma6_check(g, &h, &k, q, p)?;
        if !o.holds() {
            return Ok(o);
        }
    }
    Ok(Outcome::Holds)
}

/// Every subgroup class whose projections to the socle factors are full
/// or trivial.
fn subdirect_all(g: &PermGroup, d: &SocleDecomposition, p: u64) -> Result<Outcome> {
    if !is_p_power(g.order() / d.socle.order(), p) {
        return Ok(Outcome::inapplicable("G/T is not a p-group"));
    }
    let mut checked = 0;
    for c in &subgroup_classes(g)?.classes {
        let w = SubdirectWitness::new(g, &d.factors, &c.representative)?;
        if !w.projections_full_or_trivial() {
            continue;
        }
        let r = subdirect_check(&w, p)?;
        if r.outcome.is_failure() {
            return Ok(r.outcome);
        }
        checked += 1;
    }
    debug_assert!(checked > 0);
    Ok(Outcome::Holds)
}

/// Runs one validator over a list of catalog entries, in order.
pub fn run_lemma_on(lemma: Lemma, entries: &[CatalogEntry], seed: u64) -> Result<Vec<LemmaRecord>> {
    let mut out = vec![];
    for e in entries {
        out.extend(run_lemma(lemma, e, seed)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::make;

    fn entry(spec: GroupFamilySpec) -> CatalogEntry {
        CatalogEntry {
            name: spec.to_string(),
            group: make(&spec).unwrap(),
            family: Some(spec),
        }
    }

    #[test]
    fn names_round_trip() {
        for l in Lemma::ALL {
            assert_eq!(l.name().parse::<Lemma>().unwrap(), l);
        }
        assert!("nope".parse::<Lemma>().is_err());
    }

    #[test]
    fn no_failures_on_small_groups() {
        for spec in [GroupFamilySpec::Sym(4), GroupFamilySpec::Alt(5), GroupFamilySpec::Sym(5)] {
            let e = entry(spec);
            for l in Lemma::ALL {
                for r in run_lemma(l, &e, 0).unwrap() {
                    assert!(!r.outcome.is_failure(), "{} {:?} {}: {}", r.group, r.prime, l, r.outcome);
                }
            }
        }
    }
}
