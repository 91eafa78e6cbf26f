//! JSON reports.

use serde::{Deserialize, Serialize};

use grp_core::reduction::{DivSylRow, ImplicationRecord, LemmaRecord};
use grp_core::subgroups::{DivSylMode, DivSylReport};
use grp_core::Outcome;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ClassJson {
    pub order: u64,
    pub index: u64,
    pub nu_p: u64,
    pub divides: bool,
    pub witness_generators: Vec<String>,
}

/// Report of a `DivSyl(p)` check.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct DivSylJson {
    pub schema_version: u32,
    pub group: String,
    pub order: u64,
    pub prime: u64,
    pub nu_p: u64,
    pub classes: Vec<ClassJson>,
    pub violations: Vec<ClassJson>,
    pub mode: String,
    pub seed: u64,
    pub elapsed_ms: Option<u64>,
}

impl DivSylJson {
    /// Merges one or more reports on the same group (sampled mode may use
    /// several seeds).
    pub fn new(group: &str, reports: &[DivSylReport], seed: u64) -> Self {
        let first = &reports[0];
        let classes: Vec<ClassJson> = reports
            .iter()
            .flat_map(|r| r.classes.iter())
            .map(|c| ClassJson {
                order: c.order,
                index: c.index,
                nu_p: c.nu_p,
                divides: c.divides,
                witness_generators: c.witness_generators.iter().map(|g| g.to_cycle_string()).collect(),
            })
            .collect();
        let violations = classes.iter().filter(|c| !c.divides).cloned().collect();
        DivSylJson {
            schema_version: SCHEMA_VERSION,
            group: group.to_string(),
            order: first.group_order,
            prime: first.prime,
            nu_p: first.nu_p_g,
            classes,
            violations,
            mode: match first.mode {
                DivSylMode::Full => "full".into(),
                DivSylMode::Sampled { .. } => "sampled".into(),
            },
            seed,
            elapsed_ms: None,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct NuJson {
    pub schema_version: u32,
    pub group: String,
    pub order: u64,
    pub prime: u64,
    pub nu_p: u64,
    pub sylow_order: u64,
    pub normalizer_order: u64,
    pub sylow_generators: Vec<String>,
    pub consistent: bool,
    pub elapsed_ms: Option<u64>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SectionJson {
    pub order: u64,
    pub abelian: bool,
    pub induced_aut_order: u64,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SeriesJson {
    pub schema_version: u32,
    pub group: String,
    pub order: u64,
    pub kind: String,
    pub seed: u64,
    pub term_orders: Vec<u64>,
    pub sections: Vec<SectionJson>,
    pub elapsed_ms: Option<u64>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct OutcomeJson {
    pub status: String,
    pub detail: Option<String>,
}

impl From<&Outcome> for OutcomeJson {
    fn from(o: &Outcome) -> Self {
        match o {
            Outcome::Holds => OutcomeJson {
                status: "holds".into(),
                detail: None,
            },
            Outcome::Fails { detail } => OutcomeJson {
                status: "fails".into(),
                detail: Some(detail.clone()),
            },
            Outcome::Inapplicable { clause } => OutcomeJson {
                status: "inapplicable".into(),
                detail: Some(clause.clone()),
            },
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct EmbedJson {
    pub schema_version: u32,
    pub group: String,
    pub order: u64,
    pub k: usize,
    pub socle_order: u64,
    pub aut_order: u64,
    pub image_order: u64,
    pub wreath_degree: usize,
    pub relation: bool,
    pub injective: bool,
    pub socle_onto: bool,
    pub covariance: Vec<(String, bool)>,
    pub outcome: OutcomeJson,
    pub elapsed_ms: Option<u64>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct LemmaRecordJson {
    pub lemma: String,
    pub group: String,
    pub prime: Option<u64>,
    pub instance: String,
    pub outcome: OutcomeJson,
}

impl From<&LemmaRecord> for LemmaRecordJson {
    fn from(r: &LemmaRecord) -> Self {
        LemmaRecordJson {
            lemma: r.lemma.to_string(),
            group: r.group.clone(),
            prime: r.prime,
            instance: r.instance.clone(),
            outcome: (&r.outcome).into(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct VerifyJson {
    pub schema_version: u32,
    pub lemma: String,
    pub catalog: String,
    pub seed: u64,
    pub records: Vec<LemmaRecordJson>,
    pub failures: usize,
    pub elapsed_ms: Option<u64>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ScanRowJson {
    pub group: String,
    pub order: u64,
    pub prime: u64,
    pub nu_p: u64,
    pub mode: String,
    pub satisfies: bool,
    /// `[order, nu_p]` of violating classes.
    pub violations: Vec<(u64, u64)>,
}

impl From<&DivSylRow> for ScanRowJson {
    fn from(r: &DivSylRow) -> Self {
        ScanRowJson {
            group: r.group.clone(),
            order: r.order,
            prime: r.prime,
            nu_p: r.nu_p,
            mode: r.mode.to_string(),
            satisfies: r.satisfies,
            violations: r.violations.clone(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ImplicationJson {
    pub group: String,
    pub prime: u64,
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl ImplicationJson {
    pub fn new(group: &str, r: &ImplicationRecord) -> Self {
        ImplicationJson {
            group: group.to_string(),
            prime: r.prime,
            hypothesis: r.hypothesis,
            conclusion: r.conclusion,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ScanJson {
    pub schema_version: u32,
    pub table: String,
    pub rows: Vec<ScanRowJson>,
    pub implications: Vec<ImplicationJson>,
    pub elapsed_ms: Option<u64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use grp_core::constructors::{make, GroupFamilySpec};
    use grp_core::subgroups::divsyl_check;

    #[test]
    fn divsyl_round_trip() {
        let a5 = make(&GroupFamilySpec::Alt(5)).unwrap();
        let r = divsyl_check(&a5, 3, DivSylMode::Full).unwrap();
        let mut j = DivSylJson::new("alt(5)", &[r], 0);
        j.elapsed_ms = Some(3);
        let text = serde_json::to_string_pretty(&j).unwrap();
        let back: DivSylJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        assert_eq!(back.violations.len(), 1);
        assert_eq!(back.violations[0].order, 12);
    }
}
