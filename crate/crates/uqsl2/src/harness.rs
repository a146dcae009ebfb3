//! Parameter-grid suite runner, check records, report rendering, and
//! operator emission.
//!
//! A [`SuiteConfig`] names a grid (diameters, q values, θ-modes, t values,
//! identifications, direct-sum profiles) and a set of suites;
//! [`run_suites`] executes every selected check over the full grid and
//! returns a [`Report`]. Runs are deterministic: the work list is built in a
//! fixed order, workers only map jobs to check lists, and the aggregation
//! preserves the work-list order, so two runs with the same config produce
//! byte-identical reports. Wall time is kept out of the serialized forms for
//! the same reason.
//!
//! [`emit_operator`] serializes one named operator on one irreducible module
//! as tagged JSON — every matrix entry is an exact rational string.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::expr::{
    chevalley_relations, equitable_relations, generator_recovery, n_commutation, GenSym,
};
use crate::identification::{
    chevalley_from_equitable, chevalley_gens_of, cross_identities, equitable_from_chevalley,
    equitable_gens_of,
};
use crate::linalg::Matrix;
use crate::lusztig::{self, LusztigKind};
use crate::module::{
    casimir_scalar, casimir_six_forms, full_symbol_table, BasisKind, IrreducibleModule,
    Realization,
};
use crate::qexp;
use crate::report::IdentityCheck;
use crate::rotator;
use crate::scalar::{QContext, Rat};

/// The verification suites. `All` expands to every concrete suite.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Suite {
    #[serde(rename = "relations")]
    Relations,
    #[serde(rename = "casimir")]
    Casimir,
    #[serde(rename = "identifications")]
    Identifications,
    #[serde(rename = "qexp")]
    QExp,
    #[serde(rename = "rotators")]
    Rotators,
    #[serde(rename = "lusztig")]
    Lusztig,
    #[serde(rename = "main-theorem")]
    MainTheorem,
    #[serde(rename = "all")]
    All,
}

impl Suite {
    /// The concrete suites, in execution order.
    pub const CONCRETE: [Suite; 7] = [
        Suite::Relations,
        Suite::Casimir,
        Suite::Identifications,
        Suite::QExp,
        Suite::Rotators,
        Suite::Lusztig,
        Suite::MainTheorem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Casimir => "casimir",
            Suite::Identifications => "identifications",
            Suite::QExp => "qexp",
            Suite::Rotators => "rotators",
            Suite::Lusztig => "lusztig",
            Suite::MainTheorem => "main-theorem",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "relations" => Suite::Relations,
            "casimir" => Suite::Casimir,
            "identifications" => Suite::Identifications,
            "qexp" => Suite::QExp,
            "rotators" => Suite::Rotators,
            "lusztig" => Suite::Lusztig,
            "main-theorem" => Suite::MainTheorem,
            "all" => Suite::All,
            other => {
                return Err(Error::Config(format!(
                    "unknown suite `{other}` (expected one of relations, casimir, \
                     identifications, qexp, rotators, lusztig, main-theorem, all)"
                )))
            }
        })
    }
}

/// The default direct-sum profiles: repeated summands and weight spaces of
/// multiplicity greater than one.
pub fn default_profiles() -> Vec<Vec<usize>> {
    vec![vec![1, 3], vec![0, 2, 2], vec![1, 2, 3]]
}

/// Full description of one verification run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub d_max: usize,
    pub q_values: Vec<Rat>,
    pub theta_modes: Vec<crate::scalar::ThetaMode>,
    pub t_values: Vec<i64>,
    pub ident_kinds: Vec<crate::scalar::IdentKind>,
    pub suites: Vec<Suite>,
    pub seed: u64,
    pub direct_sum_profiles: Vec<Vec<usize>>,
}

impl Default for SuiteConfig {
    /// The reference grid: d ≤ 8, q ∈ {4, 9}, both θ-modes, t ∈ {-2, …, 2},
    /// both identifications, seed 42, the three default profiles, all suites.
    fn default() -> Self {
        SuiteConfig {
            d_max: 8,
            q_values: vec![Rat::int(4), Rat::int(9)],
            theta_modes: vec![crate::scalar::ThetaMode::SqQ, crate::scalar::ThetaMode::SqQInv],
            t_values: (-2..=2).collect(),
            ident_kinds: vec![
                crate::scalar::IdentKind::Primary,
                crate::scalar::IdentKind::Secondary,
            ],
            suites: vec![Suite::All],
            seed: 42,
            direct_sum_profiles: default_profiles(),
        }
    }
}

impl SuiteConfig {
    fn validate(&self) -> Result<()> {
        let axes: [(&str, bool); 5] = [
            ("q_values", self.q_values.is_empty()),
            ("theta_modes", self.theta_modes.is_empty()),
            ("t_values", self.t_values.is_empty()),
            ("ident_kinds", self.ident_kinds.is_empty()),
            ("suites", self.suites.is_empty()),
        ];
        for (name, empty) in axes {
            if empty {
                return Err(Error::Config(format!("grid axis `{name}` is empty")));
            }
        }
        if self.direct_sum_profiles.iter().any(Vec::is_empty) {
            return Err(Error::Config("direct-sum profile with zero summands".into()));
        }
        Ok(())
    }
}

/// One executed check with everything needed to re-run it by hand: the
/// suite, the identity name, and the full parameter point.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Outcome of a run. The JSON form is the array of records (CI-friendly);
/// the text form groups failures first. Wall time is informational only and
/// deliberately absent from both serialized forms.
#[derive(Clone, Debug)]
pub struct Report {
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
    pub wall_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// The JSON report: a pretty-printed array of check records.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.records)?)
    }

    /// The text report: failures first, then per-suite counts, then totals.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("uqsl2 verification report\n");
        out.push_str(&format!(
            "checks: {}  passed: {}  failed: {}\n\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        out.push_str("failures:\n");
        let mut any = false;
        for r in self.records.iter().filter(|r| !r.pass) {
            any = true;
            let params = r
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&format!(
                "  FAIL {} {} [{}] {}\n",
                r.suite,
                r.identity,
                params,
                r.counterexample.as_deref().unwrap_or("")
            ));
        }
        if !any {
            out.push_str("  none\n");
        }
        out.push_str("\nper-suite:\n");
        let mut counts: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for r in &self.records {
            let entry = counts.entry(r.suite.as_str()).or_insert((0, 0));
            entry.1 += 1;
            if r.pass {
                entry.0 += 1;
            }
        }
        for (suite, (passed, total)) in &counts {
            out.push_str(&format!("  {suite}: {passed}/{total} passed\n"));
        }
        out.push_str(&format!(
            "\nresult: {}\n",
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

/// One unit of parallel work: a suite, a parameter point, and a target.
#[derive(Clone, Debug)]
enum JobKind {
    NativeRelations { d: usize, epsilon: i32, basis: BasisKind },
    FullRelations { shape: Vec<usize>, basis: BasisKind },
    Casimir { d: usize, epsilon: i32, basis: BasisKind },
    CasimirSum { shape: Vec<usize>, basis: BasisKind },
    RoundTrip { d: usize, epsilon: i32 },
    CrossIdentities { shape: Vec<usize>, basis: BasisKind },
    QExp { shape: Vec<usize>, basis: BasisKind },
    Rotators { shape: Vec<usize>, basis: BasisKind },
    LusztigCore { shape: Vec<usize>, basis: BasisKind },
    LusztigConjugation { shape: Vec<usize>, basis: BasisKind, with_words: bool },
    LusztigEquitable { d: usize, basis: BasisKind },
    MainTheorem { shape: Vec<usize>, basis: BasisKind },
}

const BASES: [BasisKind; 2] = [BasisKind::Chevalley, BasisKind::Equitable];

fn jobs_for(suite: Suite, config: &SuiteConfig) -> Vec<JobKind> {
    let mut jobs = Vec::new();
    let diameters = 0..=config.d_max;
    let profiles = &config.direct_sum_profiles;
    match suite {
        Suite::Relations => {
            for d in diameters.clone() {
                for epsilon in [1, -1] {
                    for basis in BASES {
                        jobs.push(JobKind::NativeRelations { d, epsilon, basis });
                    }
                }
            }
            for d in diameters {
                for basis in BASES {
                    jobs.push(JobKind::FullRelations { shape: vec![d], basis });
                }
            }
            for shape in profiles {
                for basis in BASES {
                    jobs.push(JobKind::FullRelations { shape: shape.clone(), basis });
                }
            }
        }
        Suite::Casimir => {
            for d in diameters {
                for epsilon in [1, -1] {
                    for basis in BASES {
                        jobs.push(JobKind::Casimir { d, epsilon, basis });
                    }
                }
            }
            for shape in profiles {
                for basis in BASES {
                    jobs.push(JobKind::CasimirSum { shape: shape.clone(), basis });
                }
            }
        }
        Suite::Identifications => {
            for d in diameters.clone() {
                for epsilon in [1, -1] {
                    jobs.push(JobKind::RoundTrip { d, epsilon });
                }
            }
            for d in diameters {
                for basis in BASES {
                    jobs.push(JobKind::CrossIdentities { shape: vec![d], basis });
                }
            }
            for shape in profiles {
                for basis in BASES {
                    jobs.push(JobKind::CrossIdentities { shape: shape.clone(), basis });
                }
            }
        }
        Suite::QExp => {
            for d in diameters {
                for basis in BASES {
                    jobs.push(JobKind::QExp { shape: vec![d], basis });
                }
            }
            for shape in profiles {
                for basis in BASES {
                    jobs.push(JobKind::QExp { shape: shape.clone(), basis });
                }
            }
        }
        Suite::Rotators => {
            for d in diameters {
                for basis in BASES {
                    jobs.push(JobKind::Rotators { shape: vec![d], basis });
                }
            }
            for shape in profiles {
                for basis in BASES {
                    jobs.push(JobKind::Rotators { shape: shape.clone(), basis });
                }
            }
        }
        Suite::Lusztig => {
            for d in diameters {
                for basis in BASES {
                    jobs.push(JobKind::LusztigCore { shape: vec![d], basis });
                    jobs.push(JobKind::LusztigConjugation {
                        shape: vec![d],
                        basis,
                        with_words: false,
                    });
                    jobs.push(JobKind::LusztigEquitable { d, basis });
                }
            }
            for shape in profiles {
                for basis in BASES {
                    jobs.push(JobKind::LusztigCore { shape: shape.clone(), basis });
                    jobs.push(JobKind::LusztigConjugation {
                        shape: shape.clone(),
                        basis,
                        with_words: true,
                    });
                }
            }
        }
        Suite::MainTheorem => {
            for d in diameters {
                for basis in BASES {
                    jobs.push(JobKind::MainTheorem { shape: vec![d], basis });
                }
            }
            for shape in profiles {
                for basis in BASES {
                    jobs.push(JobKind::MainTheorem { shape: shape.clone(), basis });
                }
            }
        }
        Suite::All => unreachable!("All is expanded before job generation"),
    }
    jobs
}

fn expand_suites(selected: &[Suite]) -> Vec<Suite> {
    if selected.contains(&Suite::All) {
        return Suite::CONCRETE.to_vec();
    }
    Suite::CONCRETE
        .iter()
        .copied()
        .filter(|s| selected.contains(s))
        .collect()
}

fn shape_string(shape: &[usize]) -> String {
    format!(
        "[{}]",
        shape.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    )
}

fn base_params(ctx: &QContext) -> BTreeMap<String, String> {
    let mut p = BTreeMap::new();
    p.insert("q".into(), ctx.q().to_string());
    p.insert("theta".into(), ctx.theta().to_string());
    p.insert("theta_mode".into(), ctx.theta_mode().name().to_string());
    p.insert("t".into(), ctx.t().to_string());
    p.insert("ident".into(), ctx.ident().name().to_string());
    p
}

fn eval_named(
    pairs: Vec<(&'static str, crate::expr::AlgebraExpression)>,
    table: &crate::expr::SymbolTable,
    dim: usize,
    label: usize,
) -> Vec<IdentityCheck> {
    let zero = Matrix::zeros(dim, dim);
    pairs
        .into_iter()
        .map(|(name, rel)| match rel.eval(table, dim) {
            Ok(v) => IdentityCheck::of_matrices(name, label, &v, &zero),
            Err(e) => IdentityCheck::of_error(name, label, e),
        })
        .collect()
}

fn native_module(d: usize, epsilon: i32, basis: BasisKind, ctx: &QContext) -> IrreducibleModule {
    match basis {
        BasisKind::Chevalley => IrreducibleModule::chevalley(d, epsilon, ctx),
        BasisKind::Equitable => IrreducibleModule::equitable(d, epsilon, ctx),
    }
}

fn run_job(
    suite: Suite,
    ctx: &QContext,
    kind: &JobKind,
    words: &[Vec<GenSym>],
) -> Vec<CheckRecord> {
    let mut params = base_params(ctx);
    let checks: Vec<IdentityCheck> = match kind {
        JobKind::NativeRelations { d, epsilon, basis } => {
            params.insert("epsilon".into(), epsilon.to_string());
            params.insert("basis".into(), basis.name().to_string());
            params.insert("shape".into(), shape_string(&[*d]));
            let module = native_module(*d, *epsilon, *basis, ctx);
            let rels = match basis {
                BasisKind::Chevalley => chevalley_relations(ctx),
                BasisKind::Equitable => equitable_relations(ctx),
            };
            eval_named(rels, module.table(), module.dim(), *d)
        }
        JobKind::FullRelations { shape, basis } => {
            params.insert("basis".into(), basis.name().to_string());
            params.insert("shape".into(), shape_string(shape));
            let label = shape.iter().copied().max().unwrap_or(0);
            match Realization::new(ctx, shape, *basis) {
                Err(e) => vec![IdentityCheck::of_error("relations/build", label, e)],
                Ok(real) => {
                    let mut out = Vec::new();
                    out.extend(eval_named(chevalley_relations(ctx), real.table(), real.dim(), label));
                    out.extend(eval_named(equitable_relations(ctx), real.table(), real.dim(), label));
                    out.extend(eval_named(generator_recovery(ctx), real.table(), real.dim(), label));
                    out.extend(eval_named(n_commutation(ctx), real.table(), real.dim(), label));
                    out
                }
            }
        }
        JobKind::Casimir { d, epsilon, basis } => {
            params.insert("epsilon".into(), epsilon.to_string());
            params.insert("basis".into(), basis.name().to_string());
            params.insert("shape".into(), shape_string(&[*d]));
            let module = native_module(*d, *epsilon, *basis, ctx);
            let dim = module.dim();
            match full_symbol_table(module.table(), dim, ctx) {
                Err(e) => vec![IdentityCheck::of_error("casimir/build", *d, e)],
                Ok(table) => {
                    let lam = table[&GenSym::Casimir].clone();
                    let expected = Matrix::scalar(dim, &casimir_scalar(*d, *epsilon, ctx));
                    let mut out =
                        vec![IdentityCheck::of_matrices("casimir/scalar", *d, &lam, &expected)];
                    match casimir_six_forms(&table, dim, ctx) {
                        Err(e) => out.push(IdentityCheck::of_error("casimir/forms", *d, e)),
                        Ok(forms) => {
                            for (name, m) in forms {
                                out.push(IdentityCheck::of_matrices(name, *d, &m, &lam));
                            }
                        }
                    }
                    out
                }
            }
        }
        JobKind::CasimirSum { shape, basis } => {
            params.insert("basis".into(), basis.name().to_string());
            params.insert("shape".into(), shape_string(shape));
            let label = shape.iter().copied().max().unwrap_or(0);
            match Realization::new(ctx, shape, *basis) {
                Err(e) => vec![IdentityCheck::of_error("casimir/build", label, e)],
                Ok(real) => {
                    let mut out = Vec::new();
                    match real.matrix(GenSym::Casimir) {
                        Err(e) => out.push(IdentityCheck::of_error("casimir/blocks", label, e)),
                        Ok(lam) => {
                            let blocks: Vec<Matrix> = shape
                                .iter()
                                .map(|&d| Matrix::scalar(d + 1, &casimir_scalar(d, 1, ctx)))
                                .collect();
                            let expected = Matrix::block_diagonal(&blocks);
                            out.push(IdentityCheck::of_matrices(
                                "casimir/blocks",
                                label,
                                lam,
                                &expected,
                            ));
                            match casimir_six_forms(real.table(), real.dim(), ctx) {
                                Err(e) => {
                                    out.push(IdentityCheck::of_error("casimir/forms", label, e))
                                }
                                Ok(forms) => {
                                    for (name, m) in forms {
                                        out.push(IdentityCheck::of_matrices(name, label, &m, lam));
                                    }
                                }
                            }
                        }
                    }
                    out
                }
            }
        }
        JobKind::RoundTrip { d, epsilon } => {
            params.insert("epsilon".into(), epsilon.to_string());
            params.insert("shape".into(), shape_string(&[*d]));
            let body = || -> Result<Vec<IdentityCheck>> {
                let mut out = Vec::new();
                let chev_mod = native_module(*d, *epsilon, BasisKind::Chevalley, ctx);
                let ch = chevalley_gens_of(chev_mod.table())?;
                let eq = equitable_from_chevalley(&ch, ctx)?;
                let back = chevalley_from_equitable(&eq, ctx)?;
                out.push(IdentityCheck::of_matrices("ident/round-chev-e", *d, &back.e, &ch.e));
                out.push(IdentityCheck::of_matrices("ident/round-chev-f", *d, &back.f, &ch.f));
                out.push(IdentityCheck::of_matrices("ident/round-chev-k", *d, &back.k, &ch.k));
                out.push(IdentityCheck::of_matrices(
                    "ident/round-chev-kinv",
                    *d,
                    &back.k_inv,
                    &ch.k_inv,
                ));
                let equit_mod = native_module(*d, *epsilon, BasisKind::Equitable, ctx);
                let eq2 = equitable_gens_of(equit_mod.table())?;
                let ch2 = chevalley_from_equitable(&eq2, ctx)?;
                let back2 = equitable_from_chevalley(&ch2, ctx)?;
                out.push(IdentityCheck::of_matrices("ident/round-equit-x", *d, &back2.x, &eq2.x));
                out.push(IdentityCheck::of_matrices("ident/round-equit-y", *d, &back2.y, &eq2.y));
                out.push(IdentityCheck::of_matrices(
                    "ident/round-equit-yinv",
                    *d,
                    &back2.y_inv,
                    &eq2.y_inv,
                ));
                out.push(IdentityCheck::of_matrices("ident/round-equit-z", *d, &back2.z, &eq2.z));
                let full = full_symbol_table(chev_mod.table(), chev_mod.dim(), ctx)?;
                out.extend(cross_identities(&full, *d, chev_mod.dim(), ctx));
                Ok(out)
            };
            body().unwrap_or_else(|e| vec![IdentityCheck::of_error("ident/round-trip", *d, e)])
        }
        JobKind::CrossIdentities { shape, basis } => {
            params.insert("basis".into(), basis.name().to_string());
            params.insert("shape".into(), shape_string(shape));
            let label = shape.iter().copied().max().unwrap_or(0);
            match Realization::new(ctx, shape, *basis) {
                Err(e) => vec![IdentityCheck::of_error("cross/build", label, e)],
                Ok(real) => cross_identities(real.table(), label, real.dim(), ctx),
            }
        }
        JobKind::QExp { shape, basis } => {
            params.insert("basis".into(), basis.name().to_string());
            params.insert("shape".into(), shape_string(shape));
            let label = shape.iter().copied().max().unwrap_or(0);
            match Realization::new(ctx, shape, *basis) {
                Err(e) => vec![IdentityCheck::of_error("qexp/build", label, e)],
                Ok(real) => qexp::all_checks(&real, ctx),
            }
        }
        JobKind::Rotators { shape, basis } => {
            params.insert("basis".into(), basis.name().to_string());
            params.insert("shape".into(), shape_string(shape));
            let label = shape.iter().copied().max().unwrap_or(0);
            match Realization::new(ctx, shape, *basis) {
                Err(e) => vec![IdentityCheck::of_error("rot/build", label, e)],
                Ok(real) => rotator::all_checks(&real, ctx),
            }
        }
        JobKind::LusztigCore { shape, basis } => {
            params.insert("basis".into(), basis.name().to_string());
            params.insert("shape".into(), shape_string(shape));
            let label = shape.iter().copied().max().unwrap_or(0);
            match Realization::new(ctx, shape, *basis) {
                Err(e) => vec![IdentityCheck::of_error("lusz/build", label, e)],
                Ok(real) => {
                    let mut out = lusztig::operator_checks(&real, ctx);
                    if shape.len() == 1 {
                        out.extend(lusztig::table_checks(&real, ctx));
                    }
                    out
                }
            }
        }
        JobKind::LusztigConjugation { shape, basis, with_words } => {
            params.insert("basis".into(), basis.name().to_string());
            params.insert("shape".into(), shape_string(shape));
            let label = shape.iter().copied().max().unwrap_or(0);
            match Realization::new(ctx, shape, *basis) {
                Err(e) => vec![IdentityCheck::of_error("lusz/build", label, e)],
                Ok(real) => {
                    let word_list: &[Vec<GenSym>] = if *with_words { words } else { &[] };
                    lusztig::conjugation_checks(&real, ctx, word_list)
                }
            }
        }
        JobKind::LusztigEquitable { d, basis } => {
            params.insert("basis".into(), basis.name().to_string());
            params.insert("shape".into(), shape_string(&[*d]));
            match Realization::irreducible(ctx, *d, *basis) {
                Err(e) => vec![IdentityCheck::of_error("lusz/build", *d, e)],
                Ok(real) => {
                    let mut out = lusztig::equitable_lusztig_checks(&real, ctx);
                    out.extend(lusztig::tau_lu_checks(&real, ctx));
                    out
                }
            }
        }
        JobKind::MainTheorem { shape, basis } => {
            params.insert("basis".into(), basis.name().to_string());
            params.insert("shape".into(), shape_string(shape));
            let label = shape.iter().copied().max().unwrap_or(0);
            match Realization::new(ctx, shape, *basis) {
                Err(e) => vec![IdentityCheck::of_error("lusz/build", label, e)],
                Ok(real) => lusztig::main_theorem_checks(&real, ctx),
            }
        }
    };
    checks
        .into_iter()
        .map(|c| {
            let mut p = params.clone();
            p.insert("d".into(), c.d.to_string());
            CheckRecord {
                suite: suite.name().to_string(),
                identity: c.identity,
                params: p,
                pass: c.pass,
                counterexample: c.counterexample,
            }
        })
        .collect()
}

/// Executes every selected suite over the full parameter grid. Errors only
/// on invalid configuration; identity failures are recorded, not raised.
pub fn run_suites(config: &SuiteConfig) -> Result<Report> {
    let start = Instant::now();
    config.validate()?;
    let mut cells = Vec::new();
    for q in &config.q_values {
        for &mode in &config.theta_modes {
            for &t in &config.t_values {
                for &ident in &config.ident_kinds {
                    cells.push(QContext::with_derived_theta(q.clone(), mode, t, ident)?);
                }
            }
        }
    }
    let suites = expand_suites(&config.suites);
    if suites.is_empty() {
        return Err(Error::Config("no concrete suites selected".into()));
    }
    let words = lusztig::random_words(config.seed, 100);

    let mut items: Vec<(Suite, &QContext, JobKind)> = Vec::new();
    for &suite in &suites {
        for ctx in &cells {
            for kind in jobs_for(suite, config) {
                items.push((suite, ctx, kind));
            }
        }
    }

    let records: Vec<CheckRecord> = items
        .par_iter()
        .map(|(suite, ctx, kind)| run_job(*suite, ctx, kind, &words))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();

    let passed = records.iter().filter(|r| r.pass).count();
    let summary = Summary {
        total: records.len(),
        passed,
        failed: records.len() - passed,
    };
    Ok(Report {
        records,
        summary,
        wall_ms: start.elapsed().as_millis(),
    })
}

/// Operator names accepted by [`emit_operator`].
pub const EMITTABLE: [&str; 24] = [
    "e", "f", "k", "x", "y", "z", "nx", "ny", "nz", "Lambda", "G", "X", "Y", "Z", "Omega",
    "Upsilon", "FrakR", "taux", "tauy", "tauz", "T", "Tvee", "Tinv", "TveeInv",
];

/// Serializes one named operator on the irreducible module of diameter `d`
/// and sign `epsilon` as tagged JSON. Generator-level operators (lowercase,
/// plus `Lambda`) exist for either sign; weight-space operators (`G` aside,
/// which is a bare polynomial) require `epsilon = 1` and otherwise report
/// [`Error::NotTypeOne`].
pub fn emit_operator(
    what: &str,
    d: usize,
    epsilon: i32,
    basis: BasisKind,
    ctx: &QContext,
) -> Result<serde_json::Value> {
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::Config(format!("epsilon must be 1 or -1, got {epsilon}")));
    }
    let tag = |kind: &str, payload: serde_json::Value| {
        let mut v = json!({
            "operator": what,
            "d": d,
            "epsilon": epsilon,
            "basis": basis.name(),
            "ctx": ctx,
            "kind": kind,
        });
        v[kind.to_string()] = payload;
        v
    };

    if what == "G" {
        let g = rotator::standard_polynomial(d, ctx)?;
        return Ok(tag("polynomial", serde_json::to_value(&g)?));
    }

    let matrix: Matrix = match what {
        "e" | "f" | "k" | "x" | "y" | "z" | "nx" | "ny" | "nz" | "Lambda" => {
            let native = native_module(d, epsilon, basis, ctx);
            let table = full_symbol_table(native.table(), native.dim(), ctx)?;
            let sym = if what == "Lambda" {
                GenSym::Casimir
            } else {
                GenSym::from_name(what).expect("name list is fixed")
            };
            table[&sym].clone()
        }
        "X" | "Y" | "Z" | "Omega" | "Upsilon" | "FrakR" | "taux" | "tauy" | "tauz" | "T"
        | "Tvee" | "Tinv" | "TveeInv" => {
            if epsilon != 1 {
                return Err(Error::NotTypeOne(format!(
                    "operator `{what}` is defined on type-1 modules only (epsilon = 1)"
                )));
            }
            let real = Realization::irreducible(ctx, d, basis)?;
            match what {
                "X" => rotator::cap_operators(&real, ctx)?.x_cap,
                "Y" => rotator::cap_operators(&real, ctx)?.y_cap,
                "Z" => rotator::cap_operators(&real, ctx)?.z_cap,
                "Omega" => rotator::standard_rotator(&real, ctx)?,
                "Upsilon" => rotator::upsilon(&real, ctx)?,
                "FrakR" => rotator::frak_r(&real, ctx)?,
                "taux" => rotator::tau_maps(&real, ctx)?.tau_x,
                "tauy" => rotator::tau_maps(&real, ctx)?.tau_y,
                "tauz" => rotator::tau_maps(&real, ctx)?.tau_z,
                "T" => lusztig::lusztig_operator(&real, ctx, LusztigKind::T)?,
                "Tvee" => lusztig::lusztig_operator(&real, ctx, LusztigKind::TVee)?,
                "Tinv" => lusztig::lusztig_operator(&real, ctx, LusztigKind::TInv)?,
                "TveeInv" => lusztig::lusztig_operator(&real, ctx, LusztigKind::TVeeInv)?,
                _ => unreachable!(),
            }
        }
        other => return Err(Error::UnknownOperator(other.to_string())),
    };
    Ok(tag("matrix", serde_json::to_value(&matrix)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{IdentKind, ThetaMode};

    fn tiny_config() -> SuiteConfig {
        SuiteConfig {
            d_max: 1,
            q_values: vec![Rat::int(4)],
            theta_modes: vec![ThetaMode::SqQ],
            t_values: vec![0],
            ident_kinds: vec![IdentKind::Primary],
            suites: vec![Suite::All],
            seed: 42,
            direct_sum_profiles: vec![vec![0, 1]],
        }
    }

    fn ctx_q4() -> QContext {
        QContext::new(Rat::int(4), Rat::int(-2), ThetaMode::SqQ, 0, IdentKind::Primary).unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::CONCRETE {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("spectral".parse::<Suite>().is_err());
    }

    #[test]
    fn tiny_grid_passes_every_check() {
        let report = run_suites(&tiny_config()).unwrap();
        assert!(report.summary.total > 0);
        for r in report.records.iter().filter(|r| !r.pass) {
            panic!(
                "unexpected failure: {} {} {:?} {:?}",
                r.suite, r.identity, r.params, r.counterexample
            );
        }
        assert_eq!(report.summary.passed, report.summary.total);
        assert!(report.passed());
    }

    #[test]
    fn reports_are_byte_identical_across_runs() {
        let config = tiny_config();
        let a = run_suites(&config).unwrap();
        let b = run_suites(&config).unwrap();
        assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
        assert_eq!(a.render_text(), b.render_text());
    }

    #[test]
    fn root_of_unity_q_is_a_config_error() {
        let mut config = tiny_config();
        config.q_values = vec![Rat::int(1)];
        assert!(matches!(run_suites(&config), Err(Error::Config(_))));
    }

    #[test]
    fn empty_axis_is_a_config_error() {
        let mut config = tiny_config();
        config.t_values.clear();
        assert!(matches!(run_suites(&config), Err(Error::Config(_))));
    }

    #[test]
    fn single_suite_selection_runs_only_that_suite() {
        let mut config = tiny_config();
        config.suites = vec![Suite::Casimir];
        let report = run_suites(&config).unwrap();
        assert!(report.records.iter().all(|r| r.suite == "casimir"));
        assert!(report.passed());
    }

    #[test]
    fn text_report_groups_failures_first() {
        let records = vec![
            CheckRecord {
                suite: "casimir".into(),
                identity: "casimir/scalar".into(),
                params: BTreeMap::new(),
                pass: true,
                counterexample: None,
            },
            CheckRecord {
                suite: "qexp".into(),
                identity: "qexp/shift-nz".into(),
                params: BTreeMap::new(),
                pass: false,
                counterexample: Some("entry (0,1): left = 1/2, right = 1/3".into()),
            },
        ];
        let report = Report {
            summary: Summary { total: 2, passed: 1, failed: 1 },
            records,
            wall_ms: 0,
        };
        let text = report.render_text();
        let fail_pos = text.find("FAIL qexp qexp/shift-nz").unwrap();
        let suite_pos = text.find("per-suite:").unwrap();
        assert!(fail_pos < suite_pos);
        assert!(text.contains("result: FAIL"));
    }

    #[test]
    fn emitted_k_matches_the_displayed_spectrum() {
        let v = emit_operator("k", 1, 1, BasisKind::Chevalley, &ctx_q4()).unwrap();
        assert_eq!(v["kind"], "matrix");
        assert_eq!(v["matrix"]["entries"][0][0], "4/1");
        assert_eq!(v["matrix"]["entries"][0][1], "0/1");
        assert_eq!(v["matrix"]["entries"][1][1], "1/4");
    }

    #[test]
    fn emitted_omega_on_the_trivial_module_is_one() {
        let v = emit_operator("Omega", 0, 1, BasisKind::Equitable, &ctx_q4()).unwrap();
        assert_eq!(v["matrix"]["rows"], 1);
        assert_eq!(v["matrix"]["entries"][0][0], "1/1");
    }

    #[test]
    fn emitted_lusztig_operator_matches_the_closed_form() {
        let v = emit_operator("T", 1, 1, BasisKind::Chevalley, &ctx_q4()).unwrap();
        assert_eq!(v["matrix"]["entries"][0][1], "1/1");
        assert_eq!(v["matrix"]["entries"][1][0], "-4/1");
    }

    #[test]
    fn emitted_polynomial_has_coefficient_payload() {
        let v = emit_operator("G", 2, 1, BasisKind::Equitable, &ctx_q4()).unwrap();
        assert_eq!(v["kind"], "polynomial");
        assert!(v["polynomial"].is_object() || v["polynomial"].is_array());
    }

    #[test]
    fn emit_rejects_unknown_and_type_mismatched_operators() {
        let ctx = ctx_q4();
        assert!(matches!(
            emit_operator("spectate", 1, 1, BasisKind::Chevalley, &ctx),
            Err(Error::UnknownOperator(_))
        ));
        assert!(matches!(
            emit_operator("Omega", 1, -1, BasisKind::Chevalley, &ctx),
            Err(Error::NotTypeOne(_))
        ));
        // Generator-level emission works for either sign.
        assert!(emit_operator("nx", 2, -1, BasisKind::Equitable, &ctx).is_ok());
        assert!(emit_operator("Lambda", 2, -1, BasisKind::Chevalley, &ctx).is_ok());
    }

    #[test]
    fn default_config_matches_the_documented_grid()  {
        let c = SuiteConfig::default();
        assert_eq!(c.d_max, 8);
        assert_eq!(c.q_values, vec![Rat::int(4), Rat::int(9)]);
        assert_eq!(c.t_values, vec![-2, -1, 0, 1, 2]);
        assert_eq!(c.seed, 42);
        assert_eq!(c.direct_sum_profiles, default_profiles());
    }
}
