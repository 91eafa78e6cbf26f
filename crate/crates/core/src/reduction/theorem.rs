use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::prime_divisors;
use crate::constructors::{aut_overgroup, make, GroupFamilySpec};
use crate::perm::ops;
use crate::series::{induced_aut, rc_series};
use crate::subgroups::{
    divsyl_check, divsyl_sampled, p_subgroup_classes, subgroup_classes, DivSylMode, DivSylReport, DEFAULT_SAMPLES,
};
use crate::sylow::{nu_p, SylowCertificate};
use crate::{Error, Outcome, PermGroup, Result, LATTICE_BOUND};

/// Seeds used when a group is too large for a full subgroup scan.
pub const SAMPLED_SEEDS: [u64; 2] = [0, 1];

/// The hypothesis evaluated on one nonabelian section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionHypothesis {
    /// Position in the rc-series (section `G_i/G_{i-1}` has index `i - 1`).
    pub index: usize,
    pub section_order: u64,
    /// `|Aut_G(G_i/G_{i-1})|`.
    pub aut_order: u64,
    /// Orders of the `p`-subgroup class representatives `P` examined.
    pub p_subgroup_orders: Vec<u64>,
    /// Order of the first `P·(G_i/G_{i-1})` violating `DivSyl(p)`.
    pub violation: Option<u64>,
}

/// Truth values of hypothesis and conclusion of the main theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationRecord {
    pub prime: u64,
    pub group_order: u64,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub sections: Vec<SectionHypothesis>,
}

impl ImplicationRecord {
    /// Only `hypothesis ∧ ¬conclusion` is a failure.
    pub fn outcome(&self) -> Outcome {
        if !self.hypothesis {
            return Outcome::inapplicable("some section hypothesis is false");
        }
        Outcome::from_check(self.conclusion, || {
            format!("hypothesis holds but G of order {} violates DivSyl({})", self.group_order, self.prime)
        })
    }
}

/// Evaluates the hypothesis on every nonabelian section of an rc-series
/// (each `p`-subgroup class `P` of `Aut_G(S_i)` joined with the inner
/// image of `S_i`) and the conclusion by a full scan of `G`.
pub fn main_theorem_check(g: &PermGroup, p: u64) -> Result<ImplicationRecord> {
    let series = rc_series(g)?;
    let mut sections = Vec::new();
    let mut hypothesis = true;
    for (index, sec) in series.sections()?.into_iter().enumerate() {
        if sec.is_abelian() {
            continue;
        }
        let aut = induced_aut(g, &sec)?;
        // The action on the section can have large degree; DivSyl only
        // depends on the isomorphism type.
        let (image, restrict) = ops::faithful_orbit_restriction(&aut.image)?;
        let inner_image = restrict.image_of_subgroup(&aut.inner_image)?;
        let classes = p_subgroup_classes(&image, p)?;
        let mut rec = SectionHypothesis {
            index,
            section_order: sec.order(),
            aut_order: aut.order(),
            p_subgroup_orders: classes.orders(),
            violation: None,
        };
        // Distinct classes often give the same join.
        let mut seen: Vec<PermGroup> = Vec::new();
        for c in &classes.classes {
            let x = c.representative.join(&inner_image)?;
            if seen.iter().any(|y| y.order() == x.order() && x.is_subgroup_of(y)) {
                continue;
            }
            let ok = divsyl_check(&x, p, DivSylMode::Full)?.satisfies();
            seen.push(x.clone());
            if !ok {
                rec.violation = Some(x.order());
                hypothesis = false;
                break;
            }
        }
        sections.push(rec);
    }
    let conclusion = divsyl_check(g, p, DivSylMode::Full)?.satisfies();
    Ok(ImplicationRecord {
        prime: p,
        group_order: g.order(),
        hypothesis,
        conclusion,
        sections,
    })
}

/// `divsyl_check` in full mode up to the lattice bound, sampled above it.
pub fn divsyl_auto(g: &PermGroup, p: u64) -> Result<Vec<DivSylReport>> {
    if g.order() <= LATTICE_BOUND {
        Ok(alloc::vec![divsyl_check(g, p, DivSylMode::Full)?])
    } else {
        divsyl_sampled(g, p, &SAMPLED_SEEDS, DEFAULT_SAMPLES)
    }
}

#[derive(Clone, Debug)]
pub struct PropositionRecord {
    pub prime: u64,
    pub reports: Vec<DivSylReport>,
    pub certificate: SylowCertificate,
    pub outcome: Outcome,
}

/// An almost simple `A` with socle `S` and `p ∤ |S|` satisfies `DivSyl(p)`;
/// checked by a full scan up to the lattice bound and by sampling above.
pub fn proposition_check(a: &PermGroup, s: &PermGroup, p: u64) -> Result<PropositionRecord> {
    let certificate = nu_p(a, p)?;
    let inapplicable = |clause: &str| PropositionRecord {
        prime: p,
        reports: Vec::new(),
        certificate: certificate.clone(),
        outcome: Outcome::inapplicable(clause),
    };
    if s.order().is_multiple_of(p) {
        return Ok(inapplicable("p divides |S|"));
    }
    if !s.is_subgroup_of(a) || !ops::is_normal(a, s) {
        return Ok(inapplicable("S is not normal in A"));
    }
    let (quotient, _) = ops::quotient_group(a, s)?;
    if !ops::is_solvable(&quotient)? {
        return Ok(inapplicable("A/S is not solvable"));
    }
    let reports = divsyl_auto(a, p)?;
    let bad: Vec<String> = reports
        .iter()
        .flat_map(|r| r.violations().map(|c| format!("order {} with nu_p {}", c.order, c.nu_p)))
        .collect();
    let outcome = Outcome::from_check(bad.is_empty() && certificate.is_consistent(), || {
        if bad.is_empty() {
            String::from("inconsistent Sylow certificate")
        } else {
            bad.join(", ")
        }
    });
    Ok(PropositionRecord {
        prime: p,
        reports,
        certificate,
        outcome,
    })
}

/// One group `L` with `S ≤ L ≤ Aut(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OvergroupVerdict {
    pub order: u64,
    pub index_over_socle: u64,
    pub nu_p: u64,
    pub mode: DivSylMode,
    pub satisfies: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub socle: GroupFamilySpec,
    pub overgroup: GroupFamilySpec,
    pub prime: u64,
    /// `S` satisfies `DivSyl(p)`.
    pub premise: bool,
    /// One verdict per conjugacy class of intermediate groups.
    pub verdicts: Vec<OvergroupVerdict>,
}

impl ConjectureReport {
    pub fn outcome(&self) -> Outcome {
        if !self.premise {
            return Outcome::inapplicable("S violates DivSyl(p)");
        }
        Outcome::from_check(self.verdicts.iter().all(|v| v.satisfies), || {
            let orders: Vec<String> = self
                .verdicts
                .iter()
                .filter(|v| !v.satisfies)
                .map(|v| format!("{}", v.order))
                .collect();
            format!("overgroups of order {} violate DivSyl(p)", orders.join(", "))
        })
    }
}

/// Probes every `S ≤ L ≤ Aut(S)` (up to conjugacy, as preimages of the
/// subgroups of `Aut(S)/S`).
pub fn conjecture_scan(spec: &GroupFamilySpec, p: u64) -> Result<ConjectureReport> {
    let s = make(spec)?;
    let (over_spec, aut) = aut_overgroup(spec)?;
    if !s.is_subgroup_of(&aut) || !ops::is_normal(&aut, &s) {
        return Err(Error::Inconsistent(format!("{spec} is not normal in {over_spec}")));
    }
    let premise = divsyl_auto(&s, p)?.iter().all(|r| r.satisfies());
    let (quotient, hom) = ops::quotient_group(&aut, &s)?;
    let mut verdicts = Vec::new();
    for c in &subgroup_classes(&quotient)?.classes {
        let l = hom.preimage(&c.representative)?;
        let reports = divsyl_auto(&l, p)?;
        verdicts.push(OvergroupVerdict {
            order: l.order(),
            index_over_socle: l.order() / s.order(),
            nu_p: reports[0].nu_p_g,
            mode: reports[0].mode,
            satisfies: reports.iter().all(|r| r.satisfies()),
        });
    }
    Ok(ConjectureReport {
        socle: *spec,
        overgroup: over_spec,
        prime: p,
        premise,
        verdicts,
    })
}

/// One row of a `DivSyl` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivSylRow {
    pub group: String,
    pub order: u64,
    pub prime: u64,
    pub nu_p: u64,
    pub mode: DivSylMode,
    pub satisfies: bool,
    /// `(order, ν_p)` of the violating class representatives.
    pub violations: Vec<(u64, u64)>,
}

fn row(name: String, g: &PermGroup, p: u64) -> Result<DivSylRow> {
    let reports = divsyl_auto(g, p)?;
    let mut violations: Vec<(u64, u64)> = reports
        .iter()
        .flat_map(|r| r.violations().map(|c| (c.order, c.nu_p)))
        .collect();
    violations.sort_unstable();
    violations.dedup();
    Ok(DivSylRow {
        group: name,
        order: g.order(),
        prime: p,
        nu_p: reports[0].nu_p_g,
        mode: reports[0].mode,
        satisfies: violations.is_empty(),
        violations,
    })
}

/// The field sizes of the default projective-line table.
pub const REMARK_FIELDS: [u32; 5] = [4, 5, 7, 8, 9];

/// `DivSyl(p)` for `psl2(q)` with `p` the characteristic of the field.
/// Reported, not asserted.
pub fn defining_characteristic_table(qs: &[u32]) -> Result<Vec<DivSylRow>> {
    qs.iter()
        .map(|&q| {
            let spec = GroupFamilySpec::Psl2(q);
            let (p, _) = crate::arith::prime_power(q as u64)
                .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
            row(format!("{spec}"), &make(&spec)?, p)
        })
        .collect()
}

/// `DivSyl(p)` for every prime `p` dividing `|G|`.
pub fn all_primes_table(name: &str, g: &PermGroup) -> Result<Vec<DivSylRow>> {
    prime_divisors(g.order())
        .into_iter()
        .map(|p| row(String::from(name), g, p))
        .collect()
}
