use lielocder_core::arith::{Field, Rational, SubspaceBasis};
use lielocder_core::catalog::{lookup, standard_entries, CatalogEntry};
use lielocder_core::der::{derivation_algebra, is_derivation};
use lielocder_core::lie::{Element, LinearOperator};
use lielocder_core::locder::*;
use proptest::prelude::*;
use std::sync::OnceLock;

fn catalog() -> &'static [CatalogEntry] {
    static C: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    C.get_or_init(standard_entries)
}

fn small_catalog() -> Vec<&'static CatalogEntry> {
    catalog().iter().filter(|e| e.algebra.dim() <= 6).collect()
}

fn element(n: usize, coords: &[i64]) -> Element<Rational> {
    Element::from_i64(&coords[..n], &())
}

#[test]
fn soundness_sandwich() {
    for e in catalog() {
        let d = derivation_algebra(&e.algebra);
        let ub = locder_upper_bound(&d, &SamplingPlan::new(3)).unwrap();
        assert!(ub.bound.contains_subspace(d.subspace()), "{}", e.name);
        assert!(ub.dim() >= d.dim());
    }
}

#[test]
fn more_samples_never_loosen() {
    for e in small_catalog() {
        let d = derivation_algebra(&e.algebra);
        let mut last = usize::MAX;
        for max_random in [0, 5, 50, 500] {
            let plan = SamplingPlan {
                stable_streak: usize::MAX,
                ..SamplingPlan::new(9).without_orbit().with_max_random(max_random)
            };
            let dim = locder_upper_bound(&d, &plan).unwrap().dim();
            assert!(dim <= last, "{}: {dim} after {last}", e.name);
            last = dim;
        }
    }
}

#[test]
fn certified_proper_reports_hold_up() {
    for e in catalog().iter().filter(|e| e.jordan.as_ref().is_some_and(|j| !j.is_diagonalizable())) {
        let r = analyze_locder(&e.algebra, &SamplingPlan::new(4)).unwrap();
        assert_eq!(r.verdict, Verdict::CertifiedProper, "{}", e.name);
        let d = derivation_algebra(&e.algebra);
        for c in &r.certificates {
            assert!(!is_derivation(&e.algebra, &c.operator));
            assert_eq!(find_witness(&d, &c.operator, &SamplingPlan::new(5)).unwrap(), None);
            assert!(c.jordan.cases.iter().all(|k| k.residual.iter().all(|r| r == "0")));
        }
    }
}

/// Exact LocDer of the reductions agrees with the rational bound.
#[test]
fn oracle_agrees_with_bound() {
    for name in ["ex3.1-L1", "ex3.1-L2", "jordan:1^2", "jordan:1^3"] {
        let l = lookup(name).unwrap().algebra;
        let bound = locder_upper_bound(&derivation_algebra(&l), &SamplingPlan::new(2)).unwrap().dim();
        for p in [5, 7] {
            let exact = exact_locder_mod_p(&l, Some(p), DEFAULT_POINT_BUDGET).unwrap();
            assert_eq!(exact.locder.dim(), bound, "{name} mod {p}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scaling_invariance(idx in 0usize..64, coords in proptest::collection::vec(-6i64..=6, 11), num in 1i64..9, den in 1i64..9, neg: bool) {
        let entries = small_catalog();
        let e = entries[idx % entries.len()];
        let n = e.algebra.dim();
        let d = derivation_algebra(&e.algebra);
        let x = element(n, &coords);
        let lambda = Rational::new(if neg { -num } else { num }, den);
        let a = point_constraints(&d, &x);
        let b = point_constraints(&d, &x.scale(&lambda));
        let rows = |p: &PointConstraint<Rational>| SubspaceBasis::span(n * n, p.equations.clone(), &());
        prop_assert_eq!(rows(&a), rows(&b));
    }

    #[test]
    fn membership_is_linear(idx in 0usize..64, coords in proptest::collection::vec(-4i64..=4, 11), a in -3i64..=3, b in -3i64..=3) {
        let entries = small_catalog();
        let e = entries[idx % entries.len()];
        let n = e.algebra.dim();
        let d = derivation_algebra(&e.algebra);
        let x = element(n, &coords);
        // two operators local at x: derivations plus anything vanishing at x
        let ops = d.operators();
        let mut kill = LinearOperator::zero(n, &());
        if let Some(j) = x.coords().iter().position(|c| c.is_zero()) {
            kill = LinearOperator::from_flat(n, &(0..n * n).map(|k| Rational::integer((k / n == j) as i64)).collect::<Vec<_>>(), &());
        }
        let d1 = ops.first().cloned().unwrap_or_else(|| LinearOperator::zero(n, &())).add(&kill);
        let d2 = ops.last().cloned().unwrap_or_else(|| LinearOperator::zero(n, &()));
        prop_assert!(is_local_at(&d, &d1, &x) && is_local_at(&d, &d2, &x));
        let combo = d1.scale(&Rational::integer(a)).add(&d2.scale(&Rational::integer(b)));
        prop_assert!(is_local_at(&d, &combo, &x));
    }

    #[test]
    fn constraints_hold_for_derivations(idx in 0usize..64, coords in proptest::collection::vec(-6i64..=6, 11)) {
        let entries = small_catalog();
        let e = entries[idx % entries.len()];
        let d = derivation_algebra(&e.algebra);
        let pc = point_constraints(&d, &element(e.algebra.dim(), &coords));
        for op in d.operators() {
            prop_assert!(pc.is_satisfied_by(&op));
        }
        prop_assert_eq!(pc.equations.len(), if pc.point.is_zero() { 0 } else {
            e.algebra.dim() - pointwise_image(&d, &pc.point).dim()
        });
    }
}

#[test]
fn ad_lands_in_derivations() {
    for e in catalog() {
        let x = Element::new((0..e.algebra.dim()).map(|i| Rational::new(i as i64 * 3 - 4, 2)).collect());
        assert!(is_derivation(&e.algebra, &e.algebra.ad(&x)), "{}", e.name);
    }
}
