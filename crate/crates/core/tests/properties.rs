//! Randomized properties complementing the exhaustive desk-scale checks.

use proptest::prelude::*;

use fcbsc::bounds::distance_sum_within_bound;
use fcbsc::bsymbol::{b_distance, b_weight, read_vector};
use fcbsc::codesearch::{
    greedy_upper_bound, is_bb_code, min_length_search, Codebook, DEFAULT_BUDGET,
};
use fcbsc::field::{Field, Word};
use fcbsc::reqmatrix::RequirementMatrix;

fn arb_field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![2u64, 3, 4, 5, 8, 9]).prop_map(|q| Field::of_order(q).unwrap())
}

/// Three equal-length words over a common field, plus a read width.
fn arb_word_triple() -> impl Strategy<Value = (Field, Vec<u8>, Vec<u8>, Vec<u8>, usize)> {
    (arb_field(), 1usize..=7, 1usize..=3).prop_flat_map(|(field, n, b)| {
        let q = field.q() as u8;
        let word = prop::collection::vec(0..q, n);
        (Just(field), word.clone(), word.clone(), word, Just(b))
    })
}

proptest! {
    #[test]
    fn metric_properties_hold((field, u, v, w, b) in arb_word_triple()) {
        let u = Word::new(u, &field).unwrap();
        let v = Word::new(v, &field).unwrap();
        let w = Word::new(w, &field).unwrap();
        let d = b_distance(&u, &v, b).unwrap();
        prop_assert_eq!(d == 0, u == v);
        prop_assert_eq!(d, b_distance(&v, &u, b).unwrap());
        prop_assert!(
            d <= b_distance(&u, &w, b).unwrap() + b_distance(&w, &v, b).unwrap()
        );
        // translation invariance
        let ut = u.add(&w).unwrap();
        let vt = v.add(&w).unwrap();
        prop_assert_eq!(b_distance(&ut, &vt, b).unwrap(), d);
        // difference-weight identity and the Hamming sandwich
        prop_assert_eq!(d, b_weight(&u.sub(&v).unwrap(), b));
        let dh = b_distance(&u, &v, 1).unwrap();
        prop_assert!(dh <= d && d <= (b * dh).min(u.len()));
    }

    #[test]
    fn reads_are_linear((field, u, v, _w, b) in arb_word_triple()) {
        let u = Word::new(u, &field).unwrap();
        let v = Word::new(v, &field).unwrap();
        let lhs = read_vector(&u, b).sub(&read_vector(&v, b)).unwrap();
        prop_assert_eq!(lhs, read_vector(&u.sub(&v).unwrap(), b));
    }

    #[test]
    fn sub_then_add_roundtrips((field, u, v, _w, _b) in arb_word_triple()) {
        let u = Word::new(u, &field).unwrap();
        let v = Word::new(v, &field).unwrap();
        prop_assert_eq!(u.sub(&v).unwrap().add(&v).unwrap(), u);
    }

    #[test]
    fn index_roundtrips((field, u, _v, _w, _b) in arb_word_triple()) {
        let u = Word::new(u, &field).unwrap();
        let back = Word::from_index(u.index(), u.len(), &field);
        prop_assert_eq!(back, u);
    }

    #[test]
    fn random_codebooks_satisfy_distance_sum_bound(
        (field, m, r, b) in (arb_field(), 1usize..=10, 0usize..=8, 1usize..=3),
        seed in any::<u64>(),
    ) {
        // cheap deterministic fill derived from the seed
        let q = field.q() as u64;
        let words: Vec<Word> = (0..m)
            .map(|i| {
                let syms = (0..r)
                    .map(|p| {
                        let x = seed
                            .wrapping_mul(6364136223846793005)
                            .wrapping_add(((i * 31 + p) as u64).wrapping_mul(1442695040888963407));
                        ((x >> 33) % q) as u8
                    })
                    .collect();
                Word::new(syms, &field).unwrap()
            })
            .collect();
        let p = Codebook::new(words, b).unwrap();
        prop_assert!(distance_sum_within_bound(&p));
    }
}

/// Random symmetric demand matrices, entry-wise dominated pairs.
fn arb_demand_pair() -> impl Strategy<Value = (RequirementMatrix, RequirementMatrix)> {
    (2usize..=4).prop_flat_map(|m| {
        let pairs = m * (m - 1) / 2;
        (
            prop::collection::vec(0u32..=2, pairs),
            prop::collection::vec(0u32..=1, pairs),
        )
            .prop_map(move |(base, bump)| {
                let build = |vals: &[u32]| {
                    let mut rows = vec![vec![0u32; m]; m];
                    let mut it = vals.iter();
                    for i in 0..m {
                        for j in 0..i {
                            let d = *it.next().unwrap();
                            rows[i][j] = d;
                            rows[j][i] = d;
                        }
                    }
                    RequirementMatrix::custom(rows).unwrap()
                };
                let low = build(&base);
                let high_vals: Vec<u32> =
                    base.iter().zip(&bump).map(|(a, b)| a + b).collect();
                (low, build(&high_vals))
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn search_is_monotone_and_bracketed(
        (low, high) in arb_demand_pair(),
        q in prop::sample::select(vec![2u64, 3]),
        b in 1usize..=2,
    ) {
        let field = Field::of_order(q).unwrap();
        let r_low = min_length_search(&low, &field, b, DEFAULT_BUDGET);
        let r_high = min_length_search(&high, &field, b, DEFAULT_BUDGET);
        let n_low = r_low.min_length.unwrap();
        let n_high = r_high.min_length.unwrap();
        prop_assert!(n_low <= n_high);

        for (m, res) in [(&low, &r_low), (&high, &r_high)] {
            let witness = res.witness.as_ref().unwrap();
            prop_assert!(is_bb_code(witness, m).unwrap());
            prop_assert_eq!(witness.word_length(), res.min_length.unwrap());
            // witness survives re-pinning its first word to zero
            prop_assert!(is_bb_code(&witness.translate_to_zero(), m).unwrap());
            let g = greedy_upper_bound(m, &field, b);
            prop_assert!(res.min_length.unwrap() <= g);
        }
    }
}
