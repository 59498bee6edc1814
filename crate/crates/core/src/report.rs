//! Experiment commands and their machine-readable reports.
//!
//! Every command returns a [`Report`]: a JSON result, a manifest describing
//! the run, and a process exit status. The manifest's digest is the SHA-256
//! of the compact result JSON, whose object keys are always sorted, so equal
//! inputs and seeds give equal digests regardless of thread count. CSV output
//! is the result's `rows` table.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::aut::{auto_strategy, compute_aut, AutError, AutGroup, Strategy};
use crate::catalog::{self, CatalogEntry};
use crate::completeness::{iterate_map_bijective, recheck, Certificate, CompletenessChecker};
use crate::expr::{elaborate, parse_group_expr, GroupExpr, ParseError};
use crate::group::{GroupError, GroupTable, Permutation, DEFAULT_ORDER_CAP};
use crate::mapping::{
    find_complete_mapping, find_orthomorphism, hall_paige_predict, verify_mapping,
    MappingCertificate, MappingError, MappingOutcome, DEFAULT_NODE_BUDGET,
};
use crate::structure::{normal_subgroups, reduce, ReductionSummary, StructureError};
use crate::witness::{
    find_inverted_witness, psl2_witness, Psl2Variant, WitnessError, WreathAut,
    WREATH_EXHAUSTIVE_LIMIT,
};

pub const SCHEMA_VERSION: u32 = 1;
/// Largest `|k|` accepted by the spectrum command.
pub const MAX_SPECTRUM_K: i64 = 16;
/// Largest number of copies accepted by the wreath witness command.
pub const MAX_WREATH_COPIES: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExitStatus {
    Success,
    InputError,
    LimitExceeded,
    TheoremViolation,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::TheoremViolation => 2,
            ExitStatus::InputError => 3,
            ExitStatus::LimitExceeded => 4,
        }
    }
}

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Mapping(#[from] MappingError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("invalid input: {0}")]
    Input(String),
}

impl CommandError {
    pub fn status(&self) -> ExitStatus {
        use CommandError as E;
        match self {
            E::Parse(_) | E::Input(_) => ExitStatus::InputError,
            E::Group(GroupError::CapExceeded { .. }) => ExitStatus::LimitExceeded,
            E::Group(_) => ExitStatus::InputError,
            E::Aut(AutError::Strategy(_)) => ExitStatus::LimitExceeded,
            E::Aut(_) => ExitStatus::InputError,
            E::Mapping(MappingError::TooLarge(_)) => ExitStatus::LimitExceeded,
            E::Witness(WitnessError::TheoremViolation(_)) => ExitStatus::TheoremViolation,
            E::Witness(WitnessError::Group(GroupError::CapExceeded { .. })) => {
                ExitStatus::LimitExceeded
            }
            E::Witness(_) => ExitStatus::InputError,
            E::Structure(StructureError::LatticeTooLarge { .. }) => ExitStatus::LimitExceeded,
            E::Structure(_) => ExitStatus::InputError,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct RunOptions {
    /// Largest group order any command may construct.
    pub cap: u64,
    pub seed: u64,
    /// Node budget for each mapping search.
    pub budget: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            cap: DEFAULT_ORDER_CAP,
            seed: 0,
            budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Caps {
    pub order: u64,
    pub node_budget: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub scope: Vec<String>,
    pub seed: u64,
    pub caps: Caps,
    pub wall_time_ms: u64,
    pub version: String,
    /// Hex SHA-256 of the compact result JSON.
    pub digest: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub manifest: RunManifest,
    pub status: ExitStatus,
    pub result: Value,
}

pub fn digest(result: &Value) -> String {
    let bytes = serde_json::to_vec(result).expect("JSON values serialize");
    hex::encode(Sha256::digest(bytes))
}

impl Report {
    fn new(
        command: &str,
        scope: Vec<String>,
        opts: &RunOptions,
        started: Instant,
        status: ExitStatus,
        result: impl Serialize,
    ) -> Report {
        let result = serde_json::to_value(result).expect("results serialize");
        Report {
            schema_version: SCHEMA_VERSION,
            manifest: RunManifest {
                command: command.to_string(),
                scope,
                seed: opts.seed,
                caps: Caps {
                    order: opts.cap,
                    node_budget: opts.budget,
                },
                wall_time_ms: started.elapsed().as_millis() as u64,
                version: env!("CARGO_PKG_VERSION").to_string(),
                digest: digest(&result),
            },
            status,
            result,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.code()
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
        s.push('\n');
        s
    }

    /// The `rows` table of the result; nested values are written as compact JSON.
    pub fn to_csv(&self) -> String {
        let rows = self.result.get("rows").and_then(Value::as_array);
        let mut out = csv::Writer::from_writer(Vec::new());
        if let Some(rows) = rows {
            let header: Vec<String> = rows
                .first()
                .and_then(Value::as_object)
                .map(|o| o.keys().cloned().collect())
                .unwrap_or_default();
            out.write_record(&header).expect("in-memory write");
            for row in rows {
                let record: Vec<String> = header
                    .iter()
                    .map(|k| match row.get(k) {
                        None | Some(Value::Null) => String::new(),
                        Some(Value::String(s)) => s.clone(),
                        Some(v) => v.to_string(),
                    })
                    .collect();
                out.write_record(&record).expect("in-memory write");
            }
        }
        String::from_utf8(out.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
    }
}

fn build_group(text: &str, cap: u64) -> Result<(GroupExpr, Arc<GroupTable>), CommandError> {
    let expr = parse_group_expr(text)?;
    let g = elaborate(&expr, cap)?;
    Ok((expr, g))
}

fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::Brute => "brute",
        Strategy::Psl2Structured => "psl2_structured",
        Strategy::Product => "product",
        Strategy::Auto => "auto",
    }
}

#[derive(Debug, Serialize)]
struct TheoremRow {
    group: String,
    automorphism: usize,
    provenance: String,
    coset: usize,
    complete: bool,
    collision_g: Option<String>,
    collision_h: Option<String>,
    collision_value: Option<String>,
    image: Option<Vec<usize>>,
    certificate_verified: bool,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "snake_case")]
enum GroupVerdict {
    /// Nonsolvable, and no automorphism is 1-complete.
    AllFail,
    /// Nonsolvable with a 1-complete automorphism.
    Violation,
    /// A solvable group, reported for comparison.
    Control,
    Error,
}

#[derive(Debug, Serialize)]
struct TheoremGroup {
    group: String,
    order: Option<usize>,
    solvable: Option<bool>,
    verdict: GroupVerdict,
    strategy: Option<&'static str>,
    automorphisms: usize,
    inner: usize,
    cosets: usize,
    complete: usize,
    reduction: Option<ReductionSummary>,
    /// Automorphisms whose image on the socle of `G/Rad(G)` is 1-complete.
    complete_on_socle: Option<usize>,
    error: Option<String>,
}

#[derive(Debug, Serialize)]
struct TheoremResult {
    groups: Vec<TheoremGroup>,
    rows: Vec<TheoremRow>,
}

/// Per-automorphism `k`-completeness with re-verified certificates, in automorphism order.
fn verdict_rows(g: &GroupTable, aut: &AutGroup, k: i64) -> Vec<(bool, Certificate, bool)> {
    aut.all()
        .par_iter()
        .map_init(
            || CompletenessChecker::new(g, k),
            |checker, alpha| {
                let v = checker.verdict(alpha);
                let ok = recheck(g, alpha, &v);
                (v.verdict(), v.certificate, ok)
            },
        )
        .collect()
}

/// Checks every automorphism of every group in scope for 1-completeness.
/// An empty scope means the nonsolvable part of the catalog.
pub fn cmd_verify_theorem(scope: &[String], opts: &RunOptions) -> Result<Report, CommandError> {
    let started = Instant::now();
    let names: Vec<String> = if scope.is_empty() {
        catalog::nonsolvable().into_iter().map(|e| e.name).collect()
    } else {
        scope.to_vec()
    };
    let mut groups = Vec::new();
    let mut rows = Vec::new();
    let mut status = ExitStatus::Success;
    for name in &names {
        match verify_one(name, opts) {
            Ok((summary, group_rows)) => {
                let bad_certificate = group_rows.iter().any(|r| !r.certificate_verified);
                if matches!(summary.verdict, GroupVerdict::Violation) || bad_certificate {
                    status = status.max(ExitStatus::TheoremViolation);
                }
                groups.push(summary);
                rows.extend(group_rows);
            }
            Err(e) => {
                status = status.max(e.status());
                groups.push(TheoremGroup {
                    group: name.clone(),
                    order: None,
                    solvable: None,
                    verdict: GroupVerdict::Error,
                    strategy: None,
                    automorphisms: 0,
                    inner: 0,
                    cosets: 0,
                    complete: 0,
                    reduction: None,
                    complete_on_socle: None,
                    error: Some(e.to_string()),
                });
            }
        }
    }
    let result = TheoremResult { groups, rows };
    Ok(Report::new(
        "verify-theorem",
        names,
        opts,
        started,
        status,
        result,
    ))
}

fn verify_one(
    name: &str,
    opts: &RunOptions,
) -> Result<(TheoremGroup, Vec<TheoremRow>), CommandError> {
    let (expr, g) = build_group(name, opts.cap)?;
    let label = expr.to_string();
    let strategy = auto_strategy(&g)?;
    let aut = compute_aut(&g, strategy)?;
    let solvable = match catalog::lookup(&expr) {
        Some(CatalogEntry { solvable, .. }) => solvable,
        None => crate::structure::is_solvable(&g),
    };
    let verdicts = verdict_rows(&g, &aut, 1);
    let rows: Vec<TheoremRow> = verdicts
        .into_iter()
        .enumerate()
        .map(|(i, (complete, cert, ok))| {
            let (cg, ch, cv, image) = match cert {
                Certificate::Collision { g: a, h: b, value } => (
                    Some(g.label(a).to_string()),
                    Some(g.label(b).to_string()),
                    Some(g.label(value).to_string()),
                    None,
                ),
                Certificate::Bijective { image } => (None, None, None, Some(image)),
            };
            TheoremRow {
                group: label.clone(),
                automorphism: i,
                provenance: aut.get(i).provenance().to_string(),
                coset: aut.coset_of(i),
                complete,
                collision_g: cg,
                collision_h: ch,
                collision_value: cv,
                image,
                certificate_verified: ok,
            }
        })
        .collect();
    let complete = rows.iter().filter(|r| r.complete).count();
    let (reduction, complete_on_socle) = if solvable {
        (None, None)
    } else {
        match reduce(&g) {
            Ok(r) => {
                let on_socle = aut
                    .all()
                    .par_iter()
                    .map(|a| r.completeness(a, 1).map(|c| c.on_socle as usize))
                    .collect::<Result<Vec<_>, _>>()?;
                (Some(r.summary()), Some(on_socle.into_iter().sum()))
            }
            Err(StructureError::LatticeTooLarge { .. }) => (None, None),
            Err(e) => return Err(e.into()),
        }
    };
    let verdict = match (solvable, complete) {
        (true, _) => GroupVerdict::Control,
        (false, 0) => GroupVerdict::AllFail,
        (false, _) => GroupVerdict::Violation,
    };
    let summary = TheoremGroup {
        group: label,
        order: Some(g.order()),
        solvable: Some(solvable),
        verdict,
        strategy: Some(strategy_name(strategy)),
        automorphisms: aut.len(),
        inner: aut.inner_count(),
        cosets: aut.coset_reps().len(),
        complete,
        reduction,
        complete_on_socle,
        error: None,
    };
    Ok((summary, rows))
}

#[derive(Debug, Clone)]
pub struct SpectrumRequest {
    pub group: String,
    pub k_min: i64,
    pub k_max: i64,
    pub iterate: bool,
    /// Restrict to one representative per `Inn(G)`-coset.
    pub coset_representatives: bool,
}

#[derive(Debug, Serialize)]
struct SpectrumRow {
    automorphism: usize,
    provenance: String,
    coset: usize,
    k: i64,
    complete: bool,
    collision_g: Option<String>,
    collision_h: Option<String>,
    iterate: Option<bool>,
    certificate_verified: bool,
}

#[derive(Debug, Serialize)]
struct SpectrumK {
    k: i64,
    complete: usize,
    identity_complete: bool,
    /// Automorphisms with `g ↦ g·α(g)⋯α^k(g)` bijective (k ≥ 1 only).
    iterate_bijective: Option<usize>,
}

#[derive(Debug, Serialize)]
struct SpectrumResult {
    group: String,
    order: usize,
    solvable: bool,
    k_min: i64,
    k_max: i64,
    automorphisms_scanned: usize,
    automorphisms_total: usize,
    selection: &'static str,
    per_k: Vec<SpectrumK>,
    rows: Vec<SpectrumRow>,
}

/// Tabulates `k`-completeness (and optionally iterate-map bijectivity) over a range of `k`.
pub fn cmd_spectrum(req: &SpectrumRequest, opts: &RunOptions) -> Result<Report, CommandError> {
    let started = Instant::now();
    if req.k_min > req.k_max || req.k_min.abs() > MAX_SPECTRUM_K || req.k_max.abs() > MAX_SPECTRUM_K
    {
        return Err(CommandError::Input(format!(
            "k range {}..={} must be nonempty with |k| <= {MAX_SPECTRUM_K}",
            req.k_min, req.k_max
        )));
    }
    let (expr, g) = build_group(&req.group, opts.cap)?;
    let aut = compute_aut(&g, Strategy::Auto)?;
    let selected: Vec<usize> = if req.coset_representatives {
        aut.coset_reps().to_vec()
    } else {
        (0..aut.len()).collect()
    };
    let ks: Vec<i64> = (req.k_min..=req.k_max).collect();
    let per_aut: Vec<Vec<SpectrumRow>> = selected
        .par_iter()
        .map_init(
            || {
                ks.iter()
                    .map(|&k| CompletenessChecker::new(&g, k))
                    .collect::<Vec<_>>()
            },
            |checkers, &i| {
                let alpha = aut.get(i);
                checkers
                    .iter_mut()
                    .map(|checker| {
                        let k = checker.k();
                        let v = checker.verdict(alpha);
                        let (cg, ch) = match v.certificate {
                            Certificate::Collision { g: a, h: b, .. } => {
                                (Some(g.label(a).to_string()), Some(g.label(b).to_string()))
                            }
                            Certificate::Bijective { .. } => (None, None),
                        };
                        SpectrumRow {
                            automorphism: i,
                            provenance: alpha.provenance().to_string(),
                            coset: aut.coset_of(i),
                            k,
                            complete: v.verdict(),
                            collision_g: cg,
                            collision_h: ch,
                            iterate: (req.iterate && k >= 1)
                                .then(|| iterate_map_bijective(alpha, k as u32)),
                            certificate_verified: recheck(&g, alpha, &v),
                        }
                    })
                    .collect()
            },
        )
        .collect();
    let rows: Vec<SpectrumRow> = per_aut.into_iter().flatten().collect();
    let identity = aut
        .index_of(&crate::aut::Automorphism::identity(&g))
        .expect("identity is an automorphism");
    let per_k = ks
        .iter()
        .map(|&k| {
            let at_k: Vec<&SpectrumRow> = rows.iter().filter(|r| r.k == k).collect();
            SpectrumK {
                k,
                complete: at_k.iter().filter(|r| r.complete).count(),
                identity_complete: CompletenessChecker::new(&g, k).is_complete(aut.get(identity)),
                iterate_bijective: (req.iterate && k >= 1)
                    .then(|| at_k.iter().filter(|r| r.iterate == Some(true)).count()),
            }
        })
        .collect();
    let status = if rows.iter().all(|r| r.certificate_verified) {
        ExitStatus::Success
    } else {
        ExitStatus::TheoremViolation
    };
    let result = SpectrumResult {
        group: expr.to_string(),
        order: g.order(),
        solvable: crate::structure::is_solvable(&g),
        k_min: req.k_min,
        k_max: req.k_max,
        automorphisms_scanned: selected.len(),
        automorphisms_total: aut.len(),
        selection: if req.coset_representatives {
            "coset_representatives"
        } else {
            "all"
        },
        per_k,
        rows,
    };
    Ok(Report::new(
        "spectrum",
        vec![expr.to_string()],
        opts,
        started,
        status,
        result,
    ))
}

#[derive(Debug, Serialize)]
struct CheckRow {
    check: String,
    passed: bool,
}

#[derive(Debug, Serialize)]
struct Psl2Result {
    group: String,
    q: u32,
    i: u32,
    variant: Psl2Variant,
    element: String,
    element_index: usize,
    conjugator: String,
    coset_rep: String,
    exponent: Option<u64>,
    verified: bool,
    rows: Vec<CheckRow>,
}

/// An element of `PSL₂(q)` inverted by a representative of the `Inn`-coset twisted by `φ^i`.
pub fn cmd_witness_psl2(q: u32, i: u32, opts: &RunOptions) -> Result<Report, CommandError> {
    let started = Instant::now();
    let w = psl2_witness(q, i, Psl2Variant::for_q(q))?;
    let g = &w.group;
    let k = g.field().expect("linear group");
    let x = w.element;
    let rows = vec![
        CheckRow {
            check: "element is nontrivial".into(),
            passed: x != 0,
        },
        CheckRow {
            check: "element has order 2".into(),
            passed: g.element_order(x) == 2,
        },
        CheckRow {
            check: "coset representative maps element to its inverse".into(),
            passed: w.coset_rep.apply(x) == g.inv(x),
        },
        CheckRow {
            check: "coset representative is an automorphism".into(),
            passed: w.coset_rep.is_multiplicative_exhaustive(),
        },
    ];
    let verified = w.verified && rows.iter().all(|r| r.passed);
    let result = Psl2Result {
        group: g.name().to_string(),
        q,
        i,
        variant: w.variant,
        element: g.label(x).to_string(),
        element_index: x,
        conjugator: w.conjugator.display(k),
        coset_rep: w.coset_rep.provenance().to_string(),
        exponent: w.exponent,
        verified,
        rows,
    };
    let status = if verified {
        ExitStatus::Success
    } else {
        ExitStatus::TheoremViolation
    };
    Ok(Report::new(
        "witness psl2",
        vec![format!("PSL2({q})")],
        opts,
        started,
        status,
        result,
    ))
}

#[derive(Debug, Serialize)]
struct WreathRow {
    coordinate: usize,
    alpha: usize,
    alpha_provenance: String,
    source: usize,
    s: String,
    image: String,
    inverse: String,
}

#[derive(Debug, Serialize)]
struct WreathResult {
    base: String,
    n: usize,
    seed: u64,
    sigma: String,
    automorphism_verified: bool,
    cycle_used: Vec<usize>,
    twist_coordinate: Option<usize>,
    twist_conjugator: Option<String>,
    vector: Vec<String>,
    verified: bool,
    rows: Vec<WreathRow>,
}

/// A random `(α₁,…,α_n)σ` on `Sⁿ` and an inverted tuple for its `Inn(Sⁿ)`-coset.
/// Coordinates in the report are 1-based.
pub fn cmd_witness_wreath(
    base: &str,
    n: usize,
    seed: u64,
    opts: &RunOptions,
) -> Result<Report, CommandError> {
    let started = Instant::now();
    if n == 0 || n > MAX_WREATH_COPIES {
        return Err(CommandError::Input(format!(
            "n must lie in 1..={MAX_WREATH_COPIES}"
        )));
    }
    let (expr, s) = build_group(base, opts.cap)?;
    if s.is_abelian() || normal_subgroups(&s)?.len() != 2 {
        return Err(CommandError::Input(format!(
            "{expr} is not nonabelian simple"
        )));
    }
    let aut = compute_aut(&s, Strategy::Auto)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picks: Vec<usize> = (0..n).map(|_| rng.gen_range(0..aut.len())).collect();
    let perms = Permutation::all(n);
    let sigma = perms[rng.gen_range(0..perms.len())].clone();
    let alphas = picks.iter().map(|&p| aut.get(p).clone()).collect();
    let w = WreathAut::new(&s, alphas, sigma)?;
    let automorphism_verified = w.verify_automorphism(WREATH_EXHAUSTIVE_LIMIT, seed);
    let wit = find_inverted_witness(&w)?;
    let image = wit.automorphism.apply(&wit.vector)?;
    let sigma_inv = w.sigma().inverse();
    let rows = (0..n)
        .map(|c| WreathRow {
            coordinate: c + 1,
            alpha: picks[c],
            alpha_provenance: wit.automorphism.alphas()[c].provenance().to_string(),
            source: sigma_inv.apply(c) + 1,
            s: s.label(wit.vector[c]).to_string(),
            image: s.label(image[c]).to_string(),
            inverse: s.label(s.inv(wit.vector[c])).to_string(),
        })
        .collect();
    let verified = wit.check() && automorphism_verified;
    let result = WreathResult {
        base: expr.to_string(),
        n,
        seed,
        sigma: w.sigma().to_string(),
        automorphism_verified,
        cycle_used: wit.cycle_used.iter().map(|c| c + 1).collect(),
        twist_coordinate: wit.twist.map(|t| t.coordinate + 1),
        twist_conjugator: wit.twist.map(|t| s.label(t.conjugator).to_string()),
        vector: wit.vector.iter().map(|&x| s.label(x).to_string()).collect(),
        verified,
        rows,
    };
    let status = if verified {
        ExitStatus::Success
    } else {
        ExitStatus::TheoremViolation
    };
    Ok(Report::new(
        "witness wreath",
        vec![expr.to_string()],
        opts,
        started,
        status,
        result,
    ))
}

#[derive(Debug, Serialize)]
struct MappingRow {
    kind: String,
    status: String,
    nodes: u64,
    predicted: bool,
    agrees: Option<bool>,
    mapping: Option<Vec<String>>,
    certificate_verified: Option<bool>,
}

#[derive(Debug, Serialize)]
struct MappingsResult {
    group: String,
    order: usize,
    sylow2_order: u64,
    sylow2_cyclic: bool,
    predicted: bool,
    rows: Vec<MappingRow>,
}

/// Decides whether complete mappings and orthomorphisms exist and compares with the Sylow-2 prediction.
pub fn cmd_mappings(group: &str, opts: &RunOptions) -> Result<Report, CommandError> {
    let started = Instant::now();
    let (expr, g) = build_group(group, opts.cap)?;
    let predicted = hall_paige_predict(&g);
    let (sylow2_order, sylow2_cyclic) = g.sylow2_profile();
    let certs: Vec<MappingCertificate> = vec![
        find_complete_mapping(&g, opts.budget)?,
        find_orthomorphism(&g, opts.budget)?,
    ];
    let mut status = ExitStatus::Success;
    let rows = certs
        .iter()
        .map(|c| {
            let (name, mapping, verified) = match &c.outcome {
                MappingOutcome::Found { mapping, .. } => (
                    "found",
                    Some(mapping.iter().map(|&x| g.label(x).to_string()).collect()),
                    Some(verify_mapping(&g, c.kind, mapping)),
                ),
                MappingOutcome::Nonexistent { .. } => ("nonexistent", None, None),
                MappingOutcome::Indeterminate { .. } => ("indeterminate", None, None),
            };
            let agrees = c.exists().map(|e| e == predicted);
            if agrees == Some(false) || verified == Some(false) {
                status = status.max(ExitStatus::TheoremViolation);
            }
            if agrees.is_none() {
                status = status.max(ExitStatus::LimitExceeded);
            }
            MappingRow {
                kind: serde_json::to_value(c.kind)
                    .ok()
                    .and_then(|v| v.as_str().map(String::from))
                    .unwrap_or_default(),
                status: name.to_string(),
                nodes: c.nodes(),
                predicted,
                agrees,
                mapping,
                certificate_verified: verified,
            }
        })
        .collect();
    let result = MappingsResult {
        group: expr.to_string(),
        order: g.order(),
        sylow2_order,
        sylow2_cyclic,
        predicted,
        rows,
    };
    Ok(Report::new(
        "mappings",
        vec![expr.to_string()],
        opts,
        started,
        status,
        result,
    ))
}
