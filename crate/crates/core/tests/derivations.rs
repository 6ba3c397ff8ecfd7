use lielocder_core::arith::{Field, Rational, SubspaceBasis};
use lielocder_core::catalog::{
    example_3_1, example_4_5, lookup, maximal_abelian_ln, solvable_model, standard_entries, ThreeDim,
};
use lielocder_core::der::{derivation_algebra, equals_inner, inner_derivations, is_derivation};
use lielocder_core::lie::{CharSeq, Element, LieAlgebra, LinearOperator};

/// Operator sending `e_col` to `e_row` and everything else to 0.
fn unit(n: usize, row: usize, col: usize) -> Vec<Rational> {
    let images: Vec<Element<Rational>> =
        (0..n).map(|c| if c == col { Element::basis(row, n, &()) } else { Element::zero(n, &()) }).collect();
    LinearOperator::from_images(&images, &()).flatten()
}

fn sum(a: Vec<Rational>, b: Vec<Rational>) -> Vec<Rational> {
    a.iter().zip(&b).map(|(x, y)| x.add(y)).collect()
}

#[test]
fn abelian_is_full() {
    let d = derivation_algebra(&LieAlgebra::<Rational>::abelian(3, &()));
    assert_eq!(d.dim(), 9);
    assert!(inner_derivations(&LieAlgebra::<Rational>::abelian(3, &())).is_zero());
    assert!(!equals_inner(&LieAlgebra::<Rational>::abelian(2, &())));
}

/// The reference families list the image of each basis vector as a row:
/// `d(e1) = ξ12 e2 + ξ13 e3`, `d(e2) = ξ22 e2 + ξ23 e3`, `d(e3) = ξ32 e2 + ξ33 e3`
/// (and `d(e3) = ξ22 e3` for the second algebra).
#[test]
fn three_dim_families() {
    let n = 3;
    let l1 = derivation_algebra(&example_3_1(ThreeDim::L1));
    let fam1 = SubspaceBasis::span(
        9,
        vec![unit(n, 1, 0), unit(n, 2, 0), unit(n, 1, 1), unit(n, 2, 1), unit(n, 1, 2), unit(n, 2, 2)],
        &(),
    );
    assert_eq!(l1.dim(), 6);
    assert_eq!(l1.subspace(), &fam1);

    let l2 = derivation_algebra(&example_3_1(ThreeDim::L2));
    let fam2 = SubspaceBasis::span(
        9,
        vec![unit(n, 1, 0), unit(n, 2, 0), sum(unit(n, 1, 1), unit(n, 2, 2)), unit(n, 2, 1)],
        &(),
    );
    assert_eq!(l2.dim(), 4);
    assert_eq!(l2.subspace(), &fam2);
}

#[test]
fn is_derivation_examples() {
    let l2 = example_3_1(ThreeDim::L2);
    assert!(is_derivation(&l2, &LinearOperator::zero(3, &())));
    assert!(!is_derivation(&l2, &LinearOperator::diagonal(&[0, 0, 1], &())));
    assert!(is_derivation(&l2, &LinearOperator::diagonal(&[0, 1, 1], &())));
}

#[test]
fn ln_derivations_are_diagonal_on_e() {
    // d(e_i) = α_i e_i, d(x_i) = β_i e_i with basis x1..xn e1..en
    for n in 1..=4 {
        let l = maximal_abelian_ln(n).unwrap();
        let d = derivation_algebra(&l);
        assert_eq!(d.dim(), 2 * n);
        let m = 2 * n;
        let family =
            SubspaceBasis::span(m * m, (0..n).flat_map(|i| [unit(m, n + i, n + i), unit(m, n + i, i)]).collect(), &());
        assert_eq!(d.subspace(), &family, "L{n}");
    }
}

#[test]
fn inner_derivation_dims() {
    assert_eq!(inner_derivations(&example_3_1(ThreeDim::L2)).dim(), 3);
    let l = example_4_5();
    assert_eq!(inner_derivations(&l).dim(), 11 - l.center().dim());
    assert_eq!(inner_derivations(&l).dim(), 11);
}

#[test]
fn equals_inner_examples() {
    assert!(equals_inner(&solvable_model(&CharSeq::new(vec![2, 1]).unwrap())));
    assert!(equals_inner(&lookup("ex4.6-fixed").unwrap().algebra));
    assert!(equals_inner(&example_4_5()));
}

#[test]
fn catalog_wide_invariants() {
    for e in standard_entries() {
        let l = &e.algebra;
        let d = derivation_algebra(l);
        for op in d.operators() {
            assert!(is_derivation(l, &op), "{}", e.name);
        }
        let inner = inner_derivations(l);
        assert!(d.subspace().contains_subspace(&inner), "{}", e.name);
        assert_eq!(inner.dim(), l.dim() - l.center().dim(), "{}", e.name);
        assert!(d.is_closed_under_commutator(), "{}", e.name);
        for j in 0..l.dim() {
            assert!(is_derivation(l, &l.ad_basis(j)), "{}", e.name);
        }
    }
}
