//! The socle, the embedding into a wreath product and validators for the
//! divisibility statements built on them.

mod embed;
pub mod registry;
mod socle;
mod subdirect;
mod theorem;
mod wreath_nu;

pub use embed::{wreath_embed, EmbeddingChecks, WreathEmbedding};
pub use registry::{run_lemma, run_lemma_on, Lemma, LemmaRecord};
pub use socle::{socle_analysis, SocleDecomposition};
pub use subdirect::{step4_check, step5_check, subdirect_check, SubdirectRecord, SubdirectWitness};
pub use theorem::{
    all_primes_table, conjecture_scan, defining_characteristic_table, divsyl_auto, main_theorem_check,
    proposition_check, ConjectureReport, DivSylRow, ImplicationRecord, OvergroupVerdict, PropositionRecord,
    SectionHypothesis, REMARK_FIELDS, SAMPLED_SEEDS,
};
pub use wreath_nu::{numpwreath_check, WreathNuRecord, SYLOW_SEARCH_CAP};
