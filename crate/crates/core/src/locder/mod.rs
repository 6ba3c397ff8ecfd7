//! Local derivations: sampled upper bounds over `Q`, the exact oracle over
//! prime fields, witnesses, and the Jordan-family certificates.

mod bound;
mod exhaustive;
mod jordan;
mod model;
mod plan;
mod point;
mod witness;

pub use bound::{certify_locder_equals_der, locder_upper_bound, LocDerReport, UpperBound, Verdict};
pub use exhaustive::{
    exact_locder_mod_p, exhaustive_locder_mod_p, oracle_prime, projective_point_count, ExhaustiveResult,
    DEFAULT_POINT_BUDGET, MIN_ORACLE_PRIME,
};
pub use jordan::{
    analyze_locder, classify_abelian_nilradical, detect_jordan_form, jordan_local_certificate,
    jordan_local_nonderivation, CertificateCase, Classification, JordanCertificate, JordanSpec, ProperCertificate,
    SPOT_CHECKS_PER_CASE,
};
pub use model::{model_family_checks, ModelFamilyReport};
pub use plan::{constant_height, exp_ad_apply, Candidates, OrbitStage, SamplingPlan, Stage};
pub use point::{is_local_at, point_constraints, pointwise_image, PointConstraint};
pub use witness::find_witness;
