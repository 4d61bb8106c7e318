use motzkin_row::blockops::{add, decompose_sum, includes, noncrossing, sub};
use motzkin_row::nav::{self, Direction};
use motzkin_row::rowindex::{range_of, rank, unrank, Index};
use motzkin_row::verify::enumerate_range;
use motzkin_row::word::{parse, parse_with};
use motzkin_row::{compare, motzkin, predecessor, successor, Limits, MotzkinWord, Symbol};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

/// Random canonical word of length `n`, built from raw choices by a depth-tracking walk.
fn word_of_len(n: usize) -> impl Strategy<Value = MotzkinWord> {
    prop::collection::vec(0u8..3, n).prop_map(move |choices| {
        if n == 1 {
            return MotzkinWord::zero();
        }
        let mut text = String::with_capacity(n);
        let mut depth = 0usize;
        for (i, c) in choices.iter().enumerate() {
            let remaining = n - i - 1;
            let mut options = Vec::new();
            if i > 0 && depth <= remaining {
                options.push('0');
            }
            if depth < remaining {
                options.push('(');
            }
            if depth > 0 && depth - 1 <= remaining {
                options.push(')');
            }
            let pick = options[*c as usize % options.len()];
            depth = match pick {
                '(' => depth + 1,
                ')' => depth - 1,
                _ => depth,
            };
            text.push(pick);
        }
        text.parse().unwrap()
    })
}

fn any_word(max_len: usize) -> impl Strategy<Value = MotzkinWord> {
    (1..=max_len).prop_flat_map(word_of_len)
}

fn below(bound: u64) -> impl Strategy<Value = Index> {
    (0..bound).prop_map(Index::from)
}

fn m20() -> u64 {
    motzkin(20).try_into().unwrap()
}

fn signed(i: Index) -> BigInt {
    BigInt::from(i.into_inner())
}

proptest! {
    #[test]
    fn text_round_trips(w in any_word(40)) {
        let text = w.to_string();
        prop_assert_eq!(text.parse::<MotzkinWord>().unwrap(), w.clone());
        let padded = parse(&format!("000{text}")).unwrap();
        prop_assert_eq!(padded.core(), &w);
        let translit = w.to_string_with(['o', 'l', 'r']);
        prop_assert_eq!(parse_with(&translit, ['o', 'l', 'r']).unwrap().into_core(), w);
    }

    #[test]
    fn rank_then_unrank(w in any_word(60)) {
        let i = rank(&w);
        prop_assert_eq!(range_of(&i), w.len());
        prop_assert_eq!(unrank(&i), w);
    }

    #[test]
    fn unrank_then_rank(i in below(m20())) {
        prop_assert_eq!(rank(&unrank(&i)), i);
    }

    #[test]
    fn order_is_preserved(x in any_word(14), y in any_word(14)) {
        prop_assert_eq!(compare(&x, &y), rank(&x).cmp(&rank(&y)));
    }

    #[test]
    fn index_is_sum_over_blocks(w in any_word(40)) {
        prop_assume!(!w.is_zero());
        let (parts, total) = decompose_sum(&w).unwrap();
        prop_assert_eq!(total, rank(&w));
        let mut rebuilt = MotzkinWord::zero();
        for p in &parts {
            rebuilt = add(&rebuilt, p).unwrap();
        }
        prop_assert_eq!(rebuilt, w);
    }

    #[test]
    fn sum_and_difference_are_inverse(w in any_word(30), pick in any::<prop::sample::Index>()) {
        prop_assume!(!w.is_zero());
        let parts = w.decompose().unwrap();
        let y = pick.get(&parts).clone();
        prop_assert!(includes(&w, &y));
        let x = sub(&w, &y).unwrap();
        prop_assert!(noncrossing(&x, &y));
        prop_assert_eq!(add(&x, &y).unwrap(), w.clone());
        prop_assert_eq!(signed(rank(&x)) + signed(rank(&y)), signed(rank(&w)));
    }

    #[test]
    fn open_drift_matches_polynomial(w in any_word(30), pick in any::<prop::sample::Index>(), j in 1i64..4) {
        let blocks = w.outer_blocks();
        prop_assume!(!blocks.is_empty());
        let k = pick.get(&blocks).open;
        if let Ok(r) = nav::shift_open(&w, k, j) {
            prop_assert!(r.agrees());
            let back = nav::shift_open(&r.after, k + j as usize, -j).unwrap();
            prop_assert_eq!(back.after, w);
        }
    }

    #[test]
    fn close_drift_matches_polynomial(w in any_word(30), pick in any::<prop::sample::Index>()) {
        let blocks = w.outer_blocks();
        prop_assume!(!blocks.is_empty());
        let k = pick.get(&blocks).close;
        if let Ok(r) = nav::shift_close(&w, k, Direction::Left) {
            prop_assert!(r.agrees());
            let back = nav::shift_close(&r.after, k + 1, Direction::Right).unwrap();
            prop_assert_eq!(back.after, w);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn neighbours_match_unrank(i in below(m20())) {
        let w = unrank(&i);
        let next = Index::new(i.value() + 1u32);
        prop_assert_eq!(successor(&w), unrank(&next));
        if *i.value() > BigUint::ZERO {
            let prev = Index::new(i.value() - 1u32);
            prop_assert_eq!(predecessor(&w).unwrap(), unrank(&prev));
        }
    }
}

fn all_words(max: usize) -> Vec<MotzkinWord> {
    let limits = Limits::default();
    (1..=max).flat_map(|n| enumerate_range(n, &limits).unwrap()).collect()
}

#[test]
fn oracle_matches_unrank() {
    let limits = Limits::default();
    for n in 1..=12 {
        let base = if n == 1 { BigUint::ZERO } else { motzkin(n - 1) };
        for (i, w) in enumerate_range(n, &limits).unwrap().into_iter().enumerate() {
            assert_eq!(unrank(&Index::new(&base + BigUint::from(i))), w);
        }
    }
}

#[test]
fn range_sizes_are_unique_counts() {
    for n in 1..=15 {
        let expected = motzkin_row::bigcomb::unique_count(n).unwrap();
        let words = enumerate_range(n, &Limits::default()).unwrap();
        assert_eq!(BigUint::from(words.len()), expected, "range {n}");
    }
}

#[test]
fn addition_commutes_and_associates() {
    let words = all_words(5);
    for x in &words {
        for y in &words {
            if !noncrossing(x, y) {
                continue;
            }
            let xy = add(x, y).unwrap();
            assert_eq!(add(y, x).unwrap(), xy);
            assert_eq!(signed(rank(&xy)), signed(rank(x)) + signed(rank(y)));
            for z in &words {
                if let (Ok(left), Ok(yz)) = (add(&xy, z), add(y, z)) {
                    assert_eq!(add(x, &yz).unwrap(), left, "({x} + {y}) + {z}");
                }
            }
        }
    }
}

#[test]
fn zero_is_neutral() {
    for w in all_words(7) {
        let zero = MotzkinWord::zero();
        assert_eq!(add(&w, &zero).unwrap(), w);
        assert_eq!(sub(&w, &zero).unwrap(), w);
        assert_eq!(sub(&w, &w).unwrap(), zero);
    }
}

#[test]
fn pair_insertion_inverts_removal() {
    for w in all_words(9) {
        for pair in w.outer_blocks().windows(2) {
            let (l, k) = (pair[0].close, pair[1].open);
            if let Ok(r) = nav::remove_pair(&w, k, l) {
                let back = nav::insert_pair(&r.after, k, l).unwrap();
                assert_eq!(back.after, w);
                assert_eq!(back.verified, -r.verified.clone());
            }
        }
    }
}

#[test]
fn psi_is_site_independent() {
    for w in all_words(9) {
        for pair in w.outer_blocks().windows(2) {
            if pair[0].close == pair[1].open + 2 {
                let r = nav::swap_across_zero(&w, pair[1].open).unwrap();
                assert!(r.agrees(), "{w} at {}", pair[1].open);
                let back = nav::split_across_zero(&r.after, pair[1].open).unwrap();
                assert_eq!(back.after, w);
            }
        }
    }
}

#[test]
fn polynomials_are_positive_and_increasing() {
    let xs: Vec<_> = (1..30).map(|k| nav::xi(k).unwrap()).collect();
    assert!(xs.windows(2).all(|p| p[0] < p[1]));
    let zs: Vec<_> = (2..30).map(|k| nav::zeta(k, k + 1).unwrap()).collect();
    assert!(zs.windows(2).all(|p| p[0] < p[1]));
    for k in 2..12 {
        for l in k + 1..14 {
            assert!(nav::zeta(k, l).unwrap() < nav::zeta(k, l + 1).unwrap());
        }
    }
}

#[test]
fn symbols_order() {
    assert!(Symbol::Zero < Symbol::Open && Symbol::Open < Symbol::Close);
}
