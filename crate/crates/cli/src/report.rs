//! JSON report types. Everything except `timings` is a function of the
//! input, the seed and the tool version.

use std::collections::BTreeMap;

use lielocder_core::arith::Field;
use lielocder_core::der::is_derivation;
use lielocder_core::lie::{LieAlgebra, LinearOperator, ValidationReport};
use lielocder_core::locder::{JordanCertificate, LocDerReport};
use serde::Serialize;

use crate::source::AlgebraIdentity;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Wall-clock milliseconds per phase. Excluded from determinism checks.
pub type Timings = BTreeMap<String, f64>;

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub version: String,
    pub command: String,
    pub seed: u64,
    pub algebra: AlgebraIdentity,
    pub field: String,
    pub dim: usize,
    pub results: Results,
    pub timings: Timings,
}

#[derive(Clone, Debug, Serialize)]
pub struct Results {
    pub validation: ValidationSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<Analysis>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationSummary {
    pub valid: bool,
    /// Pairs `[a, b]` with `[a, b] + [b, a] != 0`.
    pub antisymmetry_failures: Vec<[String; 2]>,
    /// Triples whose Jacobi sum is nonzero.
    pub jacobi_failures: Vec<[String; 3]>,
}

impl ValidationSummary {
    pub fn new<F: Field>(algebra: &LieAlgebra<F>, report: &ValidationReport) -> Self {
        let l = algebra.labels();
        ValidationSummary {
            valid: report.is_valid(),
            antisymmetry_failures: report.antisymmetry.iter().map(|&(i, j)| [l[i].clone(), l[j].clone()]).collect(),
            jacobi_failures: report
                .jacobi
                .iter()
                .map(|&(i, j, k)| [l[i].clone(), l[j].clone(), l[k].clone()])
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub der_dim: usize,
    pub ad_dim: usize,
    pub center_dim: usize,
    pub equals_inner: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characteristic_sequence: Option<CharSeqSummary>,
    pub locder: LocDerSummary,
    pub certificates: Vec<CertificateSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharSeqSummary {
    pub sequence: String,
    pub witness: String,
    pub probabilistic: bool,
    pub candidates_checked: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocDerSummary {
    pub verdict: String,
    pub der_dim: usize,
    pub bound_dim: Option<usize>,
    pub exact_dim: Option<usize>,
    pub prime: Option<u64>,
    pub sample_count: usize,
    pub active_points: usize,
}

impl From<&LocDerReport> for LocDerSummary {
    fn from(r: &LocDerReport) -> Self {
        LocDerSummary {
            verdict: r.verdict.as_str().to_string(),
            der_dim: r.der_dim,
            bound_dim: r.bound_dim,
            exact_dim: r.exact_dim,
            prime: r.prime,
            sample_count: r.sample_count,
            active_points: r.active_points,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateSummary {
    /// `jordan` for the symbolic piecewise certificate, `exhaustive` for an
    /// operator read off an exact mod-p computation.
    pub kind: String,
    /// `Δ(e_j) = ...`, one entry per basis vector.
    pub images: Vec<String>,
    pub is_derivation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jordan: Option<JordanSummary>,
}

impl CertificateSummary {
    pub fn new<F: Field>(kind: &str, algebra: &LieAlgebra<F>, op: &LinearOperator<F>) -> Self {
        CertificateSummary {
            kind: kind.to_string(),
            images: operator_images(algebra, op),
            is_derivation: is_derivation(algebra, op),
            jordan: None,
        }
    }
}

pub fn operator_images<F: Field>(algebra: &LieAlgebra<F>, op: &LinearOperator<F>) -> Vec<String> {
    (0..algebra.dim())
        .map(|j| format!("Δ({}) = {}", algebra.labels()[j], algebra.format_element(&op.image(j))))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct JordanSummary {
    pub spec: String,
    pub block_offset: usize,
    pub block_size: usize,
    pub cases: Vec<CaseSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseSummary {
    pub region: String,
    pub alphas: BTreeMap<String, String>,
    pub residual: Vec<String>,
    pub spot_checks: usize,
}

impl From<&JordanCertificate> for JordanSummary {
    fn from(c: &JordanCertificate) -> Self {
        JordanSummary {
            spec: c.spec.to_string(),
            block_offset: c.block_offset,
            block_size: c.block_size,
            cases: c
                .cases
                .iter()
                .map(|k| CaseSummary {
                    region: k.region.clone(),
                    alphas: k.alphas.iter().cloned().collect(),
                    residual: k.residual.clone(),
                    spot_checks: k.spot_checks,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum OracleSummary {
    Exact { prime: u64, der_dim: usize, locder_dim: usize, points_enumerated: u128, early_exit: bool },
    Declined { reason: String },
}

/// Serialize with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
