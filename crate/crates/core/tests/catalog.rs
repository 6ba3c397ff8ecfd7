use lielocder_core::arith::{Field, Rational};
use lielocder_core::catalog::*;
use lielocder_core::der::{derivation_algebra, equals_inner};
use lielocder_core::lie::{characteristic_sequence, jordan_block_sizes_at, CharSeq, Element};
use lielocder_core::locder::{oracle_prime, JordanSpec, DEFAULT_POINT_BUDGET};
use lielocder_core::Error;

fn cs(parts: &[usize]) -> CharSeq {
    CharSeq::new(parts.to_vec()).unwrap()
}

#[test]
fn three_dim_examples() {
    let l1 = example_3_1(ThreeDim::L1);
    assert!(l1.validate().is_valid() && l1.is_solvable() && !l1.is_nilpotent());
    assert_eq!(derivation_algebra(&l1).dim(), 6);
    let l2 = example_3_1(ThreeDim::L2);
    assert!(l2.validate().is_valid());
    assert_eq!(derivation_algebra(&l2).dim(), 4);
}

#[test]
fn jordan_family() {
    // basis x e1 e2 with the same table as the 3-dim examples
    let d = abelian_nilradical_algebra(&JordanSpec::from_i64(&[(1, 1), (1, 1)]).unwrap()).unwrap();
    assert_eq!(&d, &relabel(example_3_1(ThreeDim::L1), &d));
    let j = abelian_nilradical_algebra(&JordanSpec::from_i64(&[(1, 2)]).unwrap()).unwrap();
    assert_eq!(&j, &relabel(example_3_1(ThreeDim::L2), &j));

    let a = abelian_nilradical_algebra(&JordanSpec::from_i64(&[(2, 3)]).unwrap()).unwrap();
    assert_eq!(a.dim(), 4);
    let e = |i: usize| a.basis_element(i);
    let x = e(0);
    assert_eq!(a.bracket(&e(1), &x), Element::from_i64(&[0, 2, 1, 0], &()));
    assert_eq!(a.bracket(&e(2), &x), Element::from_i64(&[0, 0, 2, 1], &()));
    assert_eq!(a.bracket(&e(3), &x), Element::from_i64(&[0, 0, 0, 2], &()));

    assert_eq!(JordanSpec::from_i64(&[(0, 2)]).err(), Some(Error::AllEigenvaluesZero));
}

fn relabel(
    l: lielocder_core::lie::LieAlgebra<Rational>,
    like: &lielocder_core::lie::LieAlgebra<Rational>,
) -> lielocder_core::lie::LieAlgebra<Rational> {
    let n = l.dim();
    let c: Vec<Rational> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .map(|(i, j, k)| l.constant(i, j, k).clone())
        .collect();
    lielocder_core::lie::LieAlgebra::from_raw_constants(like.labels().to_vec(), c, &()).unwrap()
}

#[test]
fn jordan_sizes_per_eigenvalue() {
    for spec in ["1^2", "1^3", "2^3,5", "1,2,3", "1,1,2", "3^2,3,-1^2", "1/2^2,1"] {
        let spec: JordanSpec = spec.parse().unwrap();
        let l = abelian_nilradical_algebra(&spec).unwrap();
        let adx = l.ad_basis(0);
        let mut lambdas: Vec<Rational> = spec.blocks().iter().map(|b| b.0.clone()).collect();
        lambdas.dedup();
        for lambda in lambdas {
            let mut want: Vec<usize> = spec.blocks().iter().filter(|b| b.0 == lambda).map(|b| b.1).collect();
            want.sort_unstable_by(|a, b| b.cmp(a));
            let mut got = jordan_block_sizes_at(&adx, &lambda);
            // x itself spans the kernel of ad x, an extra 1-block at 0
            if lambda.is_zero() {
                got.remove(got.iter().rposition(|&s| s == 1).unwrap());
            }
            assert_eq!(got, want, "{spec}");
        }
    }
}

#[test]
fn ln_family() {
    let l1 = maximal_abelian_ln(1).unwrap();
    assert_eq!(l1.dim(), 2);
    assert!(!l1.is_abelian() && l1.is_solvable());
    assert_eq!(derivation_algebra(&maximal_abelian_ln(2).unwrap()).dim(), 4);
    assert_eq!(derivation_algebra(&maximal_abelian_ln(3).unwrap()).dim(), 6);
}

#[test]
fn model_family() {
    assert!(model_nilradical(&cs(&[1, 1])).is_abelian());
    let h = model_nilradical(&cs(&[2, 1]));
    assert_eq!(h.bracket(&h.basis_element(1), &h.basis_element(0)), h.basis_element(2));
    let m = model_nilradical(&cs(&[3, 2, 1]));
    assert_eq!(m.dim(), 6);
    // chains e2 -> e3 -> e4 and e5 -> e6
    assert_eq!(m.bracket(&m.basis_element(2), &m.basis_element(0)), m.basis_element(3));
    assert_eq!(m.bracket(&m.basis_element(4), &m.basis_element(0)), m.basis_element(5));
    assert!(m.bracket(&m.basis_element(3), &m.basis_element(0)).is_zero());
    assert!("2,3,1".parse::<CharSeq>().is_err());
}

#[test]
fn solvable_models() {
    let l = solvable_model(&cs(&[2, 1]));
    assert_eq!(l.dim(), 5);
    let b = |i: usize| l.basis_element(i);
    // x1 x2 e1 e2 e3
    assert_eq!(l.bracket(&b(3), &b(2)), b(4));
    for (i, w) in [(2, 1), (3, 2), (4, 3)] {
        assert_eq!(l.bracket(&b(i), &b(0)), b(i).scale(&Rational::integer(w)));
    }
    assert_eq!(l.bracket(&b(3), &b(1)), b(3));
    assert_eq!(l.bracket(&b(4), &b(1)), b(4));
    assert!(l.bracket(&b(2), &b(1)).is_zero());

    assert_eq!(solvable_model(&cs(&[2, 2, 1])).dim(), 8);
    assert!(equals_inner(&solvable_model(&cs(&[3, 1]))));
}

#[test]
fn examples_4_5_and_4_6() {
    let n = example_4_5_nilradical();
    assert!(n.is_nilpotent());
    assert_eq!(characteristic_sequence(&n, 20, 0).unwrap().sequence, cs(&[4, 3, 1]));
    let l = example_4_5();
    assert_eq!(l.dim(), 11);
    assert!(l.validate().is_valid() && l.is_solvable());
    assert!(equals_inner(&l));

    let verbatim = example_4_6(false);
    assert_eq!(verbatim.dim(), 8);
    assert!(!verbatim.validate().is_valid());
    let fixed = example_4_6(true);
    assert!(fixed.validate().is_valid() && fixed.is_solvable() && !fixed.is_nilpotent());
    assert!(equals_inner(&fixed));
}

#[test]
fn reduction_mod_p() {
    let l2 = reduce_mod_p(&example_3_1(ThreeDim::L2), 5).unwrap();
    assert!(l2.validate().is_valid());
    let s31 = solvable_model(&cs(&[3, 1]));
    assert!(matches!(oracle_prime(&s31, Some(3), DEFAULT_POINT_BUDGET), Err(Error::OracleDeclined { prime: 3, .. })));
    assert!(reduce_mod_p(&s31, 7).unwrap().validate().is_valid());
    assert_eq!(oracle_prime(&s31, None, DEFAULT_POINT_BUDGET), Ok(5));
}

#[test]
fn lookup_grammar() {
    for name in STANDARD_NAMES.iter().chain(&["ex4.6", "Ln:4", "abelian:2", "model:1", "jordan:1/2^2"]) {
        let e = lookup(name).unwrap();
        assert_eq!(e.name, *name);
    }
    for bad in ["ex9", "Ln:0", "model:2,3,1", "jordan:0^2", "solvmodel:1", "nope:3", "jordan:x"] {
        assert!(lookup(bad).is_err(), "{bad}");
    }
}

#[test]
fn standard_entries_are_valid() {
    for e in standard_entries() {
        let l = &e.algebra;
        assert!(l.validate().is_valid(), "{}", e.name);
        match e.family {
            Family::Solvable => assert!(l.is_solvable(), "{}", e.name),
            Family::Nilpotent | Family::Abelian => assert!(l.is_nilpotent(), "{}", e.name),
            Family::Invalid => unreachable!(),
        }
    }
}
