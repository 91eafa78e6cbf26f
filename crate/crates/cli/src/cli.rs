use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use grp_core::constructors::{aut_overgroup, catalog, make, Catalog, CatalogEntry, GroupFamilySpec};
use grp_core::reduction::{
    all_primes_table, defining_characteristic_table, main_theorem_check, run_lemma, socle_analysis, wreath_embed,
    DivSylRow, Lemma, LemmaRecord, REMARK_FIELDS,
};
use grp_core::series::{chief_series, composition_series, induced_aut, rc_series_seeded, SectionSeries};
use grp_core::subgroups::{divsyl_check, divsyl_sampled, subgroup_classes, DivSylMode, DEFAULT_SAMPLES};
use grp_core::sylow::{nu_p, sylow_subgroup};
use grp_core::{arith, Error as CoreError, PermGroup, LATTICE_BOUND};

use crate::cache::{Cache, PayloadKind};
use crate::groupfile::{parse_group_file, GroupFile};
use crate::report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "grp", version, about = "Sylow numbers and subgroup divisibility for permutation groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct GroupArg {
    /// Group file.
    #[arg(short = 'g', long = "group", conflicts_with = "family")]
    pub file: Option<PathBuf>,
    /// Family member instead of a file, e.g. `alt(5)` or `psl2:8`.
    #[arg(short = 'f', long)]
    pub family: Option<String>,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Common {
    /// Write a JSON report here instead of printing a table.
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Refuse groups larger than this.
    #[arg(long)]
    pub max_order: Option<u64>,
    /// Omit `elapsed_ms` from reports (makes them byte-reproducible).
    #[arg(long)]
    pub no_timing: bool,
    #[arg(long)]
    pub no_cache: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Full,
    Sampled,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKindArg {
    Chief,
    Composition,
    Rc,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableArg {
    /// `psl2(q)` at the defining characteristic.
    Remark,
    /// Overgroups `S ≤ L ≤ Aut(S)` of simple catalog groups.
    Conjecture,
    /// Every almost simple catalog group at every prime.
    AlmostSimple,
    /// Hypothesis and conclusion of the main implication.
    Maintheorem,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Number of Sylow p-subgroups, with a certificate.
    Nu {
        #[command(flatten)]
        group: GroupArg,
        #[arg(short = 'p', long)]
        prime: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Does nu_p(H) divide nu_p(G) for every subgroup H?
    Divsyl {
        #[command(flatten)]
        group: GroupArg,
        #[arg(short = 'p', long)]
        prime: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
        /// Random subgroups per seed in sampled mode; seeds `s` and `s + 1`
        /// are both used.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Chief, composition or rc-series with induced automorphism orders.
    Series {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_enum, default_value_t = SeriesKindArg::Rc)]
        kind: SeriesKindArg,
        #[command(flatten)]
        common: Common,
    },
    /// Write a family member as a group file.
    Construct {
        /// e.g. `sym(5)`, `psl2(8)`, `dihedral:6`.
        family: String,
        /// Output group file (standard output if absent).
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
        #[arg(long)]
        name: Option<String>,
    },
    /// Embed a group with a unique nonabelian minimal normal subgroup into
    /// a wreath product and check the embedding.
    Embed {
        #[command(flatten)]
        group: GroupArg,
        /// Choose coset representatives inside a Sylow p-subgroup
        /// (default: inside the whole group).
        #[arg(short = 'p', long)]
        prime: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named validator over a catalog.
    Verify {
        #[arg(short = 'l', long)]
        lemma: String,
        #[arg(long, default_value = "small")]
        catalog: String,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Print a table of DivSyl verdicts.
    Scan {
        #[arg(long, value_enum, default_value_t = TableArg::Remark)]
        table: TableArg,
        #[arg(long, default_value = "all")]
        catalog: String,
        /// Field sizes for the `remark` table.
        #[arg(long, value_delimiter = ',')]
        fields: Option<Vec<u32>>,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

fn load_group(arg: &GroupArg) -> anyhow::Result<(String, PermGroup)> {
    match (&arg.file, &arg.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let f = parse_group_file(&text).with_context(|| format!("parsing {}", path.display()))?;
            Ok((f.name.clone(), f.to_group()?))
        }
        (None, Some(spec)) => {
            let spec: GroupFamilySpec = spec.parse()?;
            Ok((spec.to_string(), make(&spec)?))
        }
        _ => bail!("give exactly one of -g FILE or --family SPEC"),
    }
}

fn check_order(g: &PermGroup, common: &Common) -> anyhow::Result<()> {
    if let Some(m) = common.max_order {
        if g.order() > m {
            bail!("group order {} exceeds --max-order {m}", g.order());
        }
    }
    Ok(())
}

fn check_prime(p: u64) -> anyhow::Result<()> {
    if !arith::is_prime(p) {
        bail!("{p} is not prime");
    }
    Ok(())
}

fn elapsed(start: Instant, common: &Common) -> Option<u64> {
    (!common.no_timing).then(|| start.elapsed().as_millis() as u64)
}

fn emit<T: Serialize>(common: &Common, report: &T, human: impl FnOnce() -> String) -> anyhow::Result<()> {
    match &common.out {
        Some(path) => {
            let text = serde_json::to_string_pretty(report)? + "\n";
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        }
        None => print!("{}", human()),
    }
    Ok(())
}

fn cache_for(common: &Common) -> Option<Cache> {
    (!common.no_cache).then(Cache::from_env)
}

fn cached<T, F>(cache: &Option<Cache>, g: &PermGroup, kind: PayloadKind, params: &str, compute: F) -> anyhow::Result<T>
where
    T: Serialize + serde::de::DeserializeOwned,
    F: FnOnce() -> anyhow::Result<T>,
{
    if let Some(c) = cache {
        if let Some(v) = c.get(g, kind, params) {
            return Ok(v);
        }
    }
    let v = compute()?;
    if let Some(c) = cache {
        // A failed write only costs a recomputation later.
        let _ = c.put(g, kind, params, &v);
    }
    Ok(v)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_nu(group: &GroupArg, p: u64, common: &Common) -> anyhow::Result<i32> {
    let start = Instant::now();
    check_prime(p)?;
    let (name, g) = load_group(group)?;
    check_order(&g, common)?;
    let cache = cache_for(common);
    let mut report: NuJson = cached(&cache, &g, PayloadKind::SylowCertificate, &format!("p{p}"), || {
        let c = nu_p(&g, p)?;
        Ok(NuJson {
            schema_version: SCHEMA_VERSION,
            group: name.clone(),
            order: g.order(),
            prime: p,
            nu_p: c.nu_p,
            sylow_order: c.sylow.order(),
            normalizer_order: c.normalizer_order,
            sylow_generators: c.sylow.generators().iter().map(|x| x.to_cycle_string()).collect(),
            consistent: c.is_consistent(),
            elapsed_ms: None,
        })
    })?;
    report.group = name;
    report.elapsed_ms = elapsed(start, common);
    emit(common, &report, || {
        format!(
            "{}\n|G| = {}  |P| = {}  |N_G(P)| = {}  consistent: {}\n",
            report.nu_p,
            report.order,
            report.sylow_order,
            report.normalizer_order,
            yes_no(report.consistent)
        )
    })?;
    Ok(if report.consistent { EXIT_OK } else { EXIT_VIOLATION })
}

fn divsyl_table(r: &DivSylJson) -> String {
    let mut s = format!(
        "group {}  order {}  p {}  nu_p {}  mode {}\n",
        r.group, r.order, r.prime, r.nu_p, r.mode
    );
    s += &format!("{:>8} {:>8} {:>8}  divides\n", "order", "index", "nu_p");
    for c in &r.classes {
        s += &format!("{:>8} {:>8} {:>8}  {}\n", c.order, c.index, c.nu_p, yes_no(c.divides));
    }
    s += &format!("violations: {}\n", r.violations.len());
    for c in &r.violations {
        s += &format!(
            "  order {} nu_p {} generated by {}\n",
            c.order,
            c.nu_p,
            c.witness_generators.join(", ")
        );
    }
    s
}

fn cmd_divsyl(group: &GroupArg, p: u64, mode: ModeArg, samples: usize, common: &Common) -> anyhow::Result<i32> {
    let start = Instant::now();
    check_prime(p)?;
    let (name, g) = load_group(group)?;
    check_order(&g, common)?;
    if mode == ModeArg::Full && g.order() > LATTICE_BOUND {
        bail!(
            "full mode needs |G| <= {LATTICE_BOUND} (got {}); use --mode sampled",
            g.order()
        );
    }
    let cache = cache_for(common);
    let params = match mode {
        ModeArg::Full => format!("p{p}-full"),
        ModeArg::Sampled => format!("p{p}-sampled-s{}-n{samples}", common.seed),
    };
    let mut report: DivSylJson = cached(&cache, &g, PayloadKind::SubgroupClasses, &params, || {
        let reports = match mode {
            ModeArg::Full => vec![divsyl_check(&g, p, DivSylMode::Full)?],
            ModeArg::Sampled => divsyl_sampled(&g, p, &[common.seed, common.seed.wrapping_add(1)], samples)?,
        };
        Ok(DivSylJson::new(&name, &reports, common.seed))
    })?;
    report.group = name;
    report.seed = common.seed;
    report.elapsed_ms = elapsed(start, common);
    emit(common, &report, || divsyl_table(&report))?;
    Ok(if report.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
}

fn series_for(g: &PermGroup, kind: SeriesKindArg, seed: u64) -> grp_core::Result<SectionSeries> {
    match kind {
        SeriesKindArg::Chief => chief_series(g),
        SeriesKindArg::Composition => composition_series(g, seed),
        SeriesKindArg::Rc => rc_series_seeded(g, seed),
    }
}

fn cmd_series(group: &GroupArg, kind: SeriesKindArg, common: &Common) -> anyhow::Result<i32> {
    let start = Instant::now();
    let (name, g) = load_group(group)?;
    check_order(&g, common)?;
    let cache = cache_for(common);
    let kind_name = format!("{kind:?}").to_lowercase();
    let params = format!("{kind_name}-s{}", common.seed);
    let mut report: SeriesJson = cached(&cache, &g, PayloadKind::Series, &params, || {
        let s = series_for(&g, kind, common.seed)?;
        let mut sections = Vec::new();
        for sec in s.sections()? {
            sections.push(SectionJson {
                order: sec.order(),
                abelian: sec.is_abelian(),
                induced_aut_order: induced_aut(&g, &sec)?.order(),
            });
        }
        Ok(SeriesJson {
            schema_version: SCHEMA_VERSION,
            group: name.clone(),
            order: g.order(),
            kind: kind_name.clone(),
            seed: common.seed,
            term_orders: s.chain.iter().map(|h| h.order()).collect(),
            sections,
            elapsed_ms: None,
        })
    })?;
    report.group = name;
    report.elapsed_ms = elapsed(start, common);
    emit(common, &report, || {
        let mut s = format!("{} series of {} (order {})\n", report.kind, report.group, report.order);
        s += &format!(
            "terms: {}\n",
            report.term_orders.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(" < ")
        );
        s += &format!("{:>8} {:>9} {:>10}\n", "section", "abelian", "|Aut_G|");
        for sec in &report.sections {
            s += &format!("{:>8} {:>9} {:>10}\n", sec.order, yes_no(sec.abelian), sec.induced_aut_order);
        }
        s
    })?;
    Ok(EXIT_OK)
}

fn cmd_construct(family: &str, out: &Option<PathBuf>, name: &Option<String>) -> anyhow::Result<i32> {
    let spec: GroupFamilySpec = family.parse()?;
    let g = make(&spec)?;
    let label = name.clone().unwrap_or_else(|| spec.to_string());
    let text = GroupFile::from_group(&label, &g).render();
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

fn cmd_embed(group: &GroupArg, prime: Option<u64>, common: &Common) -> anyhow::Result<i32> {
    let start = Instant::now();
    let (name, g) = load_group(group)?;
    check_order(&g, common)?;
    let d = socle_analysis(&g)?;
    let h = match prime {
        Some(p) => {
            check_prime(p)?;
            sylow_subgroup(&g, p)?
        }
        None => g.clone(),
    };
    let e = wreath_embed(&d, &h)?;
    let outcome = e.checks.outcome();
    let report = EmbedJson {
        schema_version: SCHEMA_VERSION,
        group: name,
        order: g.order(),
        k: d.k(),
        socle_order: d.socle.order(),
        aut_order: d.induced[0].order(),
        image_order: e.phi.image_group().order(),
        wreath_degree: e.wreath.group().degree(),
        relation: e.checks.relation,
        injective: e.checks.injective,
        socle_onto: e.checks.socle_onto,
        covariance: e.checks.covariance.clone(),
        outcome: (&outcome).into(),
        elapsed_ms: elapsed(start, common),
    };
    emit(common, &report, || {
        format!(
            "{} (order {}): k = {}, |T| = {}, |Aut_G(S_1)| = {}\nimage order {} in degree {}\nrelation {}  injective {}  socle onto {}  covariance {}\n{}\n",
            report.group,
            report.order,
            report.k,
            report.socle_order,
            report.aut_order,
            report.image_order,
            report.wreath_degree,
            yes_no(report.relation),
            yes_no(report.injective),
            yes_no(report.socle_onto),
            yes_no(report.covariance.iter().all(|(_, ok)| *ok)),
            outcome
        )
    })?;
    Ok(if outcome.is_failure() { EXIT_VIOLATION } else { EXIT_OK })
}

fn parse_catalog(s: &str) -> anyhow::Result<Catalog> {
    Ok(s.parse::<Catalog>()?)
}

fn entries(which: &str, max_order: Option<u64>) -> anyhow::Result<Vec<CatalogEntry>> {
    let mut es = catalog(parse_catalog(which)?)?;
    if let Some(m) = max_order {
        es.retain(|e| e.group.order() <= m);
    }
    Ok(es)
}

/// Runs `f` on every item with `jobs` threads; results keep item order.
pub fn parallel_map<T, R, F>(items: &[T], jobs: Option<usize>, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let jobs = jobs
        .or_else(|| std::thread::available_parallelism().ok().map(|n| n.get()))
        .unwrap_or(1)
        .clamp(1, items.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                slots.lock().expect("no poisoned workers")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("no poisoned workers")
        .into_iter()
        .map(|r| r.expect("every item processed"))
        .collect()
}

fn cmd_verify(lemma: &str, which: &str, jobs: Option<usize>, common: &Common) -> anyhow::Result<i32> {
    let start = Instant::now();
    let lemma: Lemma = lemma.parse()?;
    let es = entries(which, common.max_order)?;
    let results = parallel_map(&es, jobs, |e| run_lemma(lemma, e, common.seed));
    let mut records: Vec<LemmaRecord> = Vec::new();
    for (e, r) in es.iter().zip(results) {
        records.extend(r.with_context(|| format!("{lemma} on {}", e.name))?);
    }
    let failures = records.iter().filter(|r| r.outcome.is_failure()).count();
    let report = VerifyJson {
        schema_version: SCHEMA_VERSION,
        lemma: lemma.to_string(),
        catalog: which.to_string(),
        seed: common.seed,
        records: records.iter().map(LemmaRecordJson::from).collect(),
        failures,
        elapsed_ms: elapsed(start, common),
    };
    emit(common, &report, || {
        let mut s = String::new();
        for r in &records {
            let p = r.prime.map_or_else(|| "-".to_string(), |p| p.to_string());
            s += &format!("{:<22} p={:<4} {:<40} {}\n", r.group, p, r.instance, r.outcome);
        }
        let holds = records.iter().filter(|r| r.outcome.holds()).count();
        s += &format!(
            "{lemma}: {} records, {holds} hold, {failures} fail, {} inapplicable\n",
            records.len(),
            records.len() - holds - failures
        );
        s
    })?;
    Ok(if failures == 0 { EXIT_OK } else { EXIT_VIOLATION })
}

fn is_simple_family(spec: Option<GroupFamilySpec>) -> Option<GroupFamilySpec> {
    match spec? {
        s @ GroupFamilySpec::Alt(n) if n >= 5 && n != 6 => Some(s),
        s @ GroupFamilySpec::Psl2(q) if q >= 4 => Some(s),
        _ => None,
    }
}

fn conjecture_rows(spec: GroupFamilySpec) -> anyhow::Result<Vec<DivSylRow>> {
    let s = make(&spec)?;
    let (over, aut) = aut_overgroup(&spec)?;
    let (quotient, hom) = grp_core::perm::ops::quotient_group(&aut, &s)?;
    let classes = subgroup_classes(&quotient)?;
    let mut rows = Vec::new();
    for c in &classes.classes {
        let l = hom.preimage(&c.representative)?;
        let label = if l.order() == s.order() {
            spec.to_string()
        } else if l.order() == aut.order() {
            over.to_string()
        } else {
            format!("{spec}.{}", l.order() / s.order())
        };
        rows.extend(all_primes_table(&label, &l)?);
    }
    Ok(rows)
}

fn scan_table(rows: &[ScanRowJson]) -> String {
    let mut s = format!(
        "{:<16} {:>8} {:>4} {:>8} {:>8}  {:<9} violations (order, nu_p)\n",
        "group", "order", "p", "nu_p", "mode", "DivSyl"
    );
    for r in rows {
        let v: Vec<String> = r.violations.iter().map(|(o, n)| format!("({o}, {n})")).collect();
        s += &format!(
            "{:<16} {:>8} {:>4} {:>8} {:>8}  {:<9} {}\n",
            r.group,
            r.order,
            r.prime,
            r.nu_p,
            r.mode,
            if r.satisfies { "holds" } else { "violated" },
            v.join(" ")
        );
    }
    s
}

fn cmd_scan(
    table: TableArg,
    which: &str,
    fields: &Option<Vec<u32>>,
    jobs: Option<usize>,
    common: &Common,
) -> anyhow::Result<i32> {
    let start = Instant::now();
    let mut rows: Vec<DivSylRow> = Vec::new();
    let mut implications = Vec::new();
    match table {
        TableArg::Remark => {
            let qs = fields.clone().unwrap_or_else(|| REMARK_FIELDS.to_vec());
            let per_q = parallel_map(&qs, jobs, |&q| defining_characteristic_table(&[q]));
            for r in per_q {
                rows.extend(r?);
            }
        }
        TableArg::Conjecture => {
            let specs: Vec<GroupFamilySpec> = entries(which, common.max_order)?
                .iter()
                .filter_map(|e| is_simple_family(e.family))
                .collect();
            for r in parallel_map(&specs, jobs, |&s| conjecture_rows(s)) {
                rows.extend(r?);
            }
        }
        TableArg::AlmostSimple => {
            let es = entries(which, common.max_order)?;
            let per = parallel_map(&es, jobs, |e| -> anyhow::Result<Vec<DivSylRow>> {
                match socle_analysis(&e.group) {
                    Ok(d) if d.k() == 1 && d.induced[0].kernel.is_trivial() => Ok(all_primes_table(&e.name, &e.group)?),
                    Ok(_) | Err(CoreError::Inapplicable(_)) => Ok(Vec::new()),
                    Err(err) => Err(err.into()),
                }
            });
            for r in per {
                rows.extend(r?);
            }
        }
        TableArg::Maintheorem => {
            let es = entries(which, Some(common.max_order.unwrap_or(LATTICE_BOUND)))?;
            let per = parallel_map(&es, jobs, |e| -> anyhow::Result<Vec<ImplicationJson>> {
                arith::prime_divisors(e.group.order())
                    .into_iter()
                    .map(|p| Ok(ImplicationJson::new(&e.name, &main_theorem_check(&e.group, p)?)))
                    .collect()
            });
            for r in per {
                implications.extend(r?);
            }
        }
    }
    let report = ScanJson {
        schema_version: SCHEMA_VERSION,
        table: format!("{table:?}").to_lowercase(),
        rows: rows.iter().map(ScanRowJson::from).collect(),
        implications,
        elapsed_ms: elapsed(start, common),
    };
    let counterexamples = report
        .implications
        .iter()
        .filter(|i| i.hypothesis && !i.conclusion)
        .count();
    emit(common, &report, || {
        if report.implications.is_empty() {
            scan_table(&report.rows)
        } else {
            let mut s = format!("{:<22} {:>4}  hypothesis  conclusion\n", "group", "p");
            for i in &report.implications {
                s += &format!(
                    "{:<22} {:>4}  {:<10}  {}\n",
                    i.group,
                    i.prime,
                    yes_no(i.hypothesis),
                    yes_no(i.conclusion)
                );
            }
            s += &format!("counterexamples: {counterexamples}\n");
            s
        }
    })?;
    Ok(if counterexamples == 0 { EXIT_OK } else { EXIT_VIOLATION })
}

/// Executes a parsed command line and returns the exit code.
pub fn execute(cli: &Cli) -> anyhow::Result<i32> {
    match &cli.command {
        Command::Nu { group, prime, common } => cmd_nu(group, *prime, common),
        Command::Divsyl {
            group,
            prime,
            mode,
            samples,
            common,
        } => cmd_divsyl(group, *prime, *mode, *samples, common),
        Command::Series { group, kind, common } => cmd_series(group, *kind, common),
        Command::Construct { family, out, name } => cmd_construct(family, out, name),
        Command::Embed { group, prime, common } => cmd_embed(group, *prime, common),
        Command::Verify {
            lemma,
            catalog,
            jobs,
            common,
        } => cmd_verify(lemma, catalog, *jobs, common),
        Command::Scan {
            table,
            catalog,
            fields,
            jobs,
            common,
        } => cmd_scan(*table, catalog, fields, *jobs, common),
    }
}

/// Parses `args` (including the program name) and runs; errors print to
/// standard error and give exit code 2.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_ERROR
        }
    }
}

