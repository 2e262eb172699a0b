//! Randomized properties: the balance/rectangle equivalence on arbitrary
//! fillings, the nil-Coxeter relations for divided differences, Lehmer-code
//! roundtrips, and symmetry of truncated Stanley polynomials.

use num_bigint::BigInt;
use proptest::prelude::*;

use schubert_core::poly::{schubert_dd, stanley_truncated, SparsePolynomial};
use schubert_core::tableau::{staircase_boxes, StaircaseFilling};
use schubert_core::{LehmerCode, Permutation};

/// A permutation of {1..n} from an arbitrary integer vector by ranking.
fn permutation_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    prop::collection::vec(any::<u64>(), n).prop_map(move |keys| {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (keys[i], i));
        let mut window = vec![0usize; n];
        for (rank, &position) in order.iter().enumerate() {
            window[position] = rank + 1;
        }
        Permutation::new(window).unwrap()
    })
}

fn polynomial_strategy(arity: usize) -> impl Strategy<Value = SparsePolynomial> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..4, arity),
            -3i64..=3,
        ),
        0..6,
    )
    .prop_map(move |terms| {
        SparsePolynomial::from_terms(
            arity,
            terms
                .into_iter()
                .map(|(exp, coef)| (exp, BigInt::from(coef))),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn weak_balance_is_the_rectangle_rule(values in prop::collection::vec(0u32..5, 10)) {
        let boxes = staircase_boxes(5);
        let filling =
            StaircaseFilling::new(5, boxes.iter().copied().zip(values.iter().copied())).unwrap();
        prop_assert_eq!(filling.is_weakly_balanced(), filling.satisfies_rectangle_rule());
    }

    #[test]
    fn divided_differences_satisfy_the_nil_coxeter_relations(
        f in polynomial_strategy(4),
    ) {
        // Vanishing squares.
        for i in 1..=3usize {
            let once = f.divided_difference(i).unwrap();
            prop_assert!(once.divided_difference(i).unwrap().is_zero());
        }
        // Distant operators commute.
        let d13 = f.divided_difference(1).unwrap().divided_difference(3).unwrap();
        let d31 = f.divided_difference(3).unwrap().divided_difference(1).unwrap();
        prop_assert_eq!(d13, d31);
        // The braid relation.
        let lhs = f
            .divided_difference(1)
            .unwrap()
            .divided_difference(2)
            .unwrap()
            .divided_difference(1)
            .unwrap();
        let rhs = f
            .divided_difference(2)
            .unwrap()
            .divided_difference(1)
            .unwrap()
            .divided_difference(2)
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lehmer_codes_roundtrip(seed in prop::collection::vec(0usize..10, 1..=10)) {
        // Clamp each entry into its row range so the vector is a valid code.
        let n = seed.len();
        let entries: Vec<usize> = seed
            .iter()
            .enumerate()
            .map(|(i, &v)| v.min(n - i - 1))
            .collect();
        let code = LehmerCode::row(entries.clone()).unwrap();
        let w = Permutation::from_lehmer_code(&code).unwrap();
        let recovered = w.lehmer_code();
        prop_assert_eq!(recovered.entries(), entries.as_slice());
        prop_assert_eq!(w.length(), entries.iter().sum::<usize>());
    }

    #[test]
    fn truncated_stanley_polynomials_are_symmetric(
        w in permutation_strategy(5),
        m in 1usize..=3,
    ) {
        prop_assert!(stanley_truncated(&w, m).is_symmetric());
    }

    #[test]
    fn schubert_polynomials_expand_nonnegatively(w in permutation_strategy(5)) {
        let zero = BigInt::from(0);
        for coef in schubert_dd(&w).terms().values() {
            prop_assert!(coef > &zero);
        }
    }
}
