//! The `validate` and `analyze` pipelines.

use std::time::Instant;

use lielocder_core::arith::{Fp, Rational};
use lielocder_core::der::{derivation_algebra, inner_derivations};
use lielocder_core::lie::{characteristic_sequence, LieAlgebra, LinearOperator};
use lielocder_core::locder::{
    analyze_locder, exact_locder_mod_p, exhaustive_locder_mod_p, SamplingPlan, Verdict, DEFAULT_POINT_BUDGET,
};
use lielocder_core::Result as CoreResult;

use crate::dsl::ParsedAlgebra;
use crate::report::{
    Analysis, CertificateSummary, CharSeqSummary, JordanSummary, LocDerSummary, OracleSummary, Results, RunReport,
    Timings, ValidationSummary, SCHEMA_VERSION, TOOL_VERSION,
};
use crate::source::LoadedAlgebra;
use crate::{EXIT_CLAIM, EXIT_INVALID, EXIT_OK};

/// Point budget for the mod-p cross-check when no prime was requested.
pub const AUTO_ORACLE_BUDGET: u128 = 20_000;
/// Random elements tried by the characteristic-sequence estimate.
pub const CHARSEQ_TRIALS: usize = 16;

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub seed: u64,
    /// Cap on sampled points per stage.
    pub samples: Option<usize>,
    pub prime: Option<u64>,
}

impl AnalyzeOptions {
    pub fn plan(&self) -> SamplingPlan {
        let mut plan = SamplingPlan::new(self.seed);
        if let Some(n) = self.samples {
            plan.max_random = n;
            if let Some(orbit) = plan.orbit.as_mut() {
                orbit.candidate_budget = n;
            }
        }
        plan
    }
}

pub struct Outcome {
    pub report: RunReport,
    pub exit_code: u8,
}

fn ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn header(command: &str, loaded: &LoadedAlgebra, seed: u64, results: Results, timings: Timings) -> RunReport {
    RunReport {
        schema: SCHEMA_VERSION,
        version: TOOL_VERSION.to_string(),
        command: command.to_string(),
        seed,
        algebra: loaded.identity.clone(),
        field: loaded.algebra.field().to_string(),
        dim: loaded.algebra.dim(),
        results,
        timings,
    }
}

fn validation(algebra: &ParsedAlgebra) -> ValidationSummary {
    match algebra {
        ParsedAlgebra::Rational(l) => ValidationSummary::new(l, &l.validate()),
        ParsedAlgebra::Prime(l) => ValidationSummary::new(l, &l.validate()),
    }
}

/// Exit 0 iff the table is a Lie algebra, 2 otherwise.
pub fn validate(loaded: &LoadedAlgebra, seed: u64) -> Outcome {
    let start = Instant::now();
    let v = validation(&loaded.algebra);
    let code = if v.valid { EXIT_OK } else { EXIT_INVALID };
    let timings = Timings::from([("validate".to_string(), ms(start))]);
    Outcome {
        report: header("validate", loaded, seed, Results { validation: v, analysis: None }, timings),
        exit_code: code,
    }
}

/// Full analysis. Exit 0 on a settled verdict, 1 when inconclusive,
/// 2 when the table is not a Lie algebra.
pub fn analyze(loaded: &LoadedAlgebra, opts: &AnalyzeOptions) -> CoreResult<Outcome> {
    let mut timings = Timings::new();
    let start = Instant::now();
    let v = validation(&loaded.algebra);
    timings.insert("validate".into(), ms(start));
    if !v.valid {
        let report = header("analyze", loaded, opts.seed, Results { validation: v, analysis: None }, timings);
        return Ok(Outcome { report, exit_code: EXIT_INVALID });
    }
    let analysis = match &loaded.algebra {
        ParsedAlgebra::Rational(l) => analyze_rational(l, opts, &mut timings)?,
        ParsedAlgebra::Prime(l) => analyze_mod_p(l, opts, &mut timings),
    };
    let code = if analysis.locder.verdict == Verdict::Inconclusive.as_str() { EXIT_CLAIM } else { EXIT_OK };
    let results = Results { validation: v, analysis: Some(analysis) };
    Ok(Outcome { report: header("analyze", loaded, opts.seed, results, timings), exit_code: code })
}

struct Structure {
    der_dim: usize,
    ad_dim: usize,
    center_dim: usize,
    equals_inner: bool,
    nilpotent: bool,
    solvable: bool,
    charseq: Option<CharSeqSummary>,
}

fn structure<F: lielocder_core::arith::Field>(l: &LieAlgebra<F>, seed: u64) -> Structure {
    let der = derivation_algebra(l);
    let inner = inner_derivations(l);
    let nilpotent = l.is_nilpotent();
    let charseq = (nilpotent && !l.is_abelian())
        .then(|| characteristic_sequence(l, CHARSEQ_TRIALS, seed).ok())
        .flatten()
        .map(|c| CharSeqSummary {
            sequence: c.sequence.to_string(),
            witness: l.format_element(&c.witness),
            probabilistic: c.probabilistic,
            candidates_checked: c.candidates_checked,
        });
    Structure {
        der_dim: der.dim(),
        ad_dim: inner.dim(),
        center_dim: l.center().dim(),
        equals_inner: der.subspace() == &inner,
        nilpotent,
        solvable: l.is_solvable(),
        charseq,
    }
}

fn analyze_rational(l: &LieAlgebra<Rational>, opts: &AnalyzeOptions, timings: &mut Timings) -> CoreResult<Analysis> {
    let start = Instant::now();
    let s = structure(l, opts.seed);
    timings.insert("structure".into(), ms(start));

    let start = Instant::now();
    let report = analyze_locder(l, &opts.plan())?;
    timings.insert("locder".into(), ms(start));
    let certificates = report
        .certificates
        .iter()
        .map(|c| CertificateSummary {
            jordan: Some(JordanSummary::from(&c.jordan)),
            ..CertificateSummary::new("jordan", l, &c.operator)
        })
        .collect();

    let start = Instant::now();
    let budget = if opts.prime.is_some() { DEFAULT_POINT_BUDGET } else { AUTO_ORACLE_BUDGET };
    let oracle = match exact_locder_mod_p(l, opts.prime, budget) {
        Ok(r) => OracleSummary::Exact {
            prime: r.prime,
            der_dim: r.der_dim,
            locder_dim: r.locder.dim(),
            points_enumerated: r.points_enumerated,
            early_exit: r.early_exit,
        },
        Err(e) => OracleSummary::Declined { reason: e.to_string() },
    };
    timings.insert("oracle".into(), ms(start));

    Ok(Analysis {
        der_dim: s.der_dim,
        ad_dim: s.ad_dim,
        center_dim: s.center_dim,
        equals_inner: s.equals_inner,
        nilpotent: s.nilpotent,
        solvable: s.solvable,
        characteristic_sequence: s.charseq,
        locder: LocDerSummary::from(&report),
        certificates,
        oracle: Some(oracle),
    })
}

/// Over `F_p` the exhaustive computation is the analysis.
fn analyze_mod_p(l: &LieAlgebra<Fp>, opts: &AnalyzeOptions, timings: &mut Timings) -> Analysis {
    let start = Instant::now();
    let s = structure(l, opts.seed);
    timings.insert("structure".into(), ms(start));

    let start = Instant::now();
    let p = l.ctx().get();
    let mut certificates = Vec::new();
    let (locder, oracle) = match exhaustive_locder_mod_p(l, DEFAULT_POINT_BUDGET) {
        Ok(r) => {
            let der = derivation_algebra(l);
            if let Some(v) = r.locder.vectors().iter().find(|v| !der.subspace().contains(v)) {
                let op = LinearOperator::from_flat(l.dim(), v, l.ctx());
                certificates.push(CertificateSummary::new("exhaustive", l, &op));
            }
            let summary = LocDerSummary {
                verdict: Verdict::ExactModP.as_str().to_string(),
                der_dim: r.der_dim,
                bound_dim: None,
                exact_dim: Some(r.locder.dim()),
                prime: Some(p),
                sample_count: usize::try_from(r.points_enumerated).unwrap_or(usize::MAX),
                active_points: 0,
            };
            (summary, None)
        }
        Err(e) => {
            let summary = LocDerSummary {
                verdict: Verdict::Inconclusive.as_str().to_string(),
                der_dim: s.der_dim,
                bound_dim: None,
                exact_dim: None,
                prime: Some(p),
                sample_count: 0,
                active_points: 0,
            };
            (summary, Some(OracleSummary::Declined { reason: e.to_string() }))
        }
    };
    timings.insert("locder".into(), ms(start));

    Analysis {
        der_dim: s.der_dim,
        ad_dim: s.ad_dim,
        center_dim: s.center_dim,
        equals_inner: s.equals_inner,
        nilpotent: s.nilpotent,
        solvable: s.solvable,
        characteristic_sequence: s.charseq,
        locder,
        certificates,
        oracle,
    }
}
