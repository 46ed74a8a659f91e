mod common;

use diagflat::algebra::GradedIdeal;
use diagflat::{ideal_from_matrix, DefiningMatrix, Gf2Poly};
use proptest::prelude::*;

use common::{monomials, span_by_closure};

fn matrix(max_d: usize, max_n: usize) -> impl Strategy<Value = DefiningMatrix> {
    (1..=max_d, 1..=max_n).prop_flat_map(|(d, n)| {
        proptest::collection::vec(proptest::collection::vec(0u8..4, n), d)
            .prop_map(|rows| DefiningMatrix::from_codes(&rows).unwrap())
    })
}

fn poly_in(d: usize, max_degree: usize) -> impl Strategy<Value = Gf2Poly> {
    let all: Vec<_> = (0..=max_degree).flat_map(|k| monomials(d, k)).collect();
    proptest::sample::subsequence(all.clone(), 0..=all.len())
        .prop_map(move |ms| Gf2Poly::from_monomials(d, ms))
}

proptest! {
    #[test]
    fn theta_matches_transgression(a in matrix(6, 8)) {
        for j in 0..a.cols() {
            prop_assert_eq!(a.theta(j).unwrap(), a.transgression_oracle(j).unwrap());
        }
    }

    #[test]
    fn holonomy_determinant_is_w1(a in matrix(5, 8), g in any::<u64>()) {
        let d = a.rows();
        let bits: Vec<bool> = (0..d).map(|i| g >> i & 1 == 1).collect();
        let det: i8 = a.holonomy_diag(&bits).unwrap().iter().product();
        let w1_at_g = a.w1_polynomial().evaluate(&bits);
        prop_assert_eq!(det == -1, w1_at_g);
    }

    #[test]
    fn concat_multiplies_total_class(
        (a, b) in (1..=4usize).prop_flat_map(|d| (
            proptest::collection::vec(proptest::collection::vec(0u8..4, 1..=4), d),
            proptest::collection::vec(0u8..4, 1..=4),
        ).prop_map(move |(rows, extra)| {
            let width = rows[0].len();
            let rows: Vec<Vec<u8>> = rows.into_iter().map(|mut r| { r.resize(width, 0); r }).collect();
            let other: Vec<Vec<u8>> = (0..d).map(|i| extra.iter().map(|&c| (c + i as u8) % 4).collect()).collect();
            (DefiningMatrix::from_codes(&rows).unwrap(), DefiningMatrix::from_codes(&other).unwrap())
        }))
    ) {
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(ab.cols(), a.cols() + b.cols());
        prop_assert_eq!(ab.sw_polynomial(), &a.sw_polynomial() * &b.sw_polynomial());
        prop_assert_eq!(ab.w1_polynomial(), &a.w1_polynomial() + &b.w1_polynomial());
        let mut gens = ideal_from_matrix(&a).generators();
        gens.extend(ideal_from_matrix(&b).generators());
        let mut sum = GradedIdeal::new(a.rows(), &gens).unwrap();
        let mut joint = ideal_from_matrix(&ab);
        for k in 0..=4 {
            prop_assert_eq!(joint.degree_basis(k).basis(), sum.degree_basis(k).basis());
        }
    }

    #[test]
    fn packed_generators_match_polynomial_thetas(a in matrix(6, 10)) {
        let expected: std::collections::BTreeSet<Gf2Poly> = (0..a.cols())
            .map(|j| a.theta(j).unwrap())
            .filter(|t| !t.is_zero())
            .collect();
        prop_assert_eq!(ideal_from_matrix(&a).generator_set(), expected);
    }

    #[test]
    fn incremental_reduction_matches_full_expansion(a in matrix(4, 7)) {
        let mut ideal = ideal_from_matrix(&a);
        let direct = ideal.normal_form(&a.sw_polynomial()).unwrap();
        prop_assert_eq!(ideal.sw_class_of(&a).unwrap(), direct);
    }

    #[test]
    fn normal_form_decides_membership(
        (a, p) in matrix(3, 4).prop_flat_map(|a| {
            let d = a.rows();
            (Just(a), poly_in(d, 3))
        })
    ) {
        let mut ideal = ideal_from_matrix(&a);
        let nf = ideal.normal_form(&p).unwrap();
        prop_assert_eq!(ideal.normal_form(nf.poly()).unwrap(), nf.clone());
        prop_assert!(ideal.contains(&(&p + nf.poly())).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn membership_matches_brute_force_span(
        (a, k) in (matrix(3, 3), 0..=4usize)
    ) {
        let d = a.rows();
        if monomials(d, k).len() > 12 {
            return Ok(());
        }
        let gens = ideal_from_matrix(&a).generators();
        let span = span_by_closure(d, &gens, k);
        let mut ideal = ideal_from_matrix(&a);
        prop_assert_eq!(ideal.rank(k), span.len().trailing_zeros() as usize);
        for p in common::all_homogeneous(d, k) {
            prop_assert_eq!(ideal.contains(&p).unwrap(), span.contains(&p));
        }
    }
}
