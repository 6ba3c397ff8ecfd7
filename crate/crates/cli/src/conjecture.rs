//! Experimental probe: does every maximal solvable algebra in the catalog
//! have only derivations as local derivations?

use std::time::Instant;

use lielocder_core::catalog::lookup;
use lielocder_core::lie::CharSeq;
use lielocder_core::locder::{certify_locder_equals_der, SamplingPlan, Verdict};
use lielocder_core::rng::stream_rng;
use rand::seq::SliceRandom;
use serde::Serialize;

use crate::report::{Timings, SCHEMA_VERSION, TOOL_VERSION};

/// Sequences always included.
pub const FIXED_SEQUENCES: &[&str] = &["2,1", "3,1", "2,2,1"];
/// Largest `sum` for randomly drawn sequences.
pub const MAX_SAMPLED_SUM: usize = 6;

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub name: String,
    pub verdict: String,
    pub der_dim: usize,
    pub bound_dim: Option<usize>,
    pub sample_count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Skipped {
    pub name: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub schema: u32,
    pub version: String,
    pub seed: u64,
    pub trials: usize,
    pub cases: Vec<Case>,
    pub skipped: Vec<Skipped>,
    /// Cases whose verdict is not `CertifiedEqual`.
    pub candidates: Vec<String>,
    pub timings: Timings,
}

/// Catalog names probed for a given seed and number of sampled sequences.
pub fn probe_names(trials: usize, seed: u64) -> Vec<String> {
    let mut names: Vec<String> = (1..=4).map(|n| format!("Ln:{n}")).collect();
    names.extend(FIXED_SEQUENCES.iter().map(|s| format!("solvmodel:{s}")));
    let fixed: Vec<CharSeq> = FIXED_SEQUENCES.iter().map(|s| s.parse().expect("valid sequence")).collect();
    let mut pool: Vec<CharSeq> = (3..=MAX_SAMPLED_SUM)
        .flat_map(CharSeq::all_with_sum)
        .filter(|cs| cs.chains() > 0 && cs.parts()[0] >= 2 && !fixed.contains(cs))
        .collect();
    pool.shuffle(&mut stream_rng(seed, 9));
    names.extend(pool.iter().take(trials).map(|cs| {
        let parts: Vec<String> = cs.parts().iter().map(usize::to_string).collect();
        format!("solvmodel:{}", parts.join(","))
    }));
    names.extend(["ex4.5", "ex4.6", "ex4.6-fixed"].map(String::from));
    names
}

pub fn run(trials: usize, seed: u64, mut progress: impl FnMut(&str, Result<&Case, &Skipped>)) -> ConjectureReport {
    let mut cases = Vec::new();
    let mut skipped = Vec::new();
    let mut timings = Timings::new();
    for name in probe_names(trials, seed) {
        let start = Instant::now();
        let entry = lookup(&name).expect("probe names resolve");
        let v = entry.algebra.validate();
        if !v.is_valid() {
            let s = Skipped {
                name: name.clone(),
                reason: format!("not a Lie algebra ({} Jacobi failures)", v.jacobi.len()),
            };
            progress(&name, Err(&s));
            skipped.push(s);
            continue;
        }
        match certify_locder_equals_der(&entry.algebra, &SamplingPlan::new(seed)) {
            Ok(r) => {
                let case = Case {
                    name: name.clone(),
                    verdict: r.verdict.as_str().to_string(),
                    der_dim: r.der_dim,
                    bound_dim: r.bound_dim,
                    sample_count: r.sample_count,
                };
                progress(&name, Ok(&case));
                cases.push(case);
            }
            Err(e) => {
                let s = Skipped { name: name.clone(), reason: e.to_string() };
                progress(&name, Err(&s));
                skipped.push(s);
            }
        }
        timings.insert(name, (start.elapsed().as_secs_f64() * 1e6).round() / 1e3);
    }
    let candidates =
        cases.iter().filter(|c| c.verdict != Verdict::CertifiedEqual.as_str()).map(|c| c.name.clone()).collect();
    ConjectureReport {
        schema: SCHEMA_VERSION,
        version: TOOL_VERSION.to_string(),
        seed,
        trials,
        cases,
        skipped,
        candidates,
        timings,
    }
}
