//! Cross-checks of the matching algorithms against the brute-force oracles.

use auction_core::checkers::{
    is_fair, is_fair_on_bids, is_individual_rational, is_matching_in, is_maximum, is_uniform,
    is_uniform_maximal, Property,
};
use auction_core::oracles::{
    admits_uniform_ir_price, enumerate_matchings, max_matching_size_oracle, max_uniform_size_oracle,
};
use auction_core::relations::{no_dup, perm, sort_asks_desc, sort_bids_desc};
use auction_core::{
    asks_of, bids_of, fair_maximal_match, fair_maximal_match_two_pass, fairify, make_ir,
    produce_mm, trade_prices_of, uniform_match, Fill, Matching, Order, OrderBook, Price,
};
use proptest::prelude::*;

fn book_strategy(max_side: usize, max_price: u64) -> impl Strategy<Value = OrderBook> {
    let side = move || prop::collection::vec(0..=max_price, 0..=max_side);
    (side(), side()).prop_map(|(bids, asks)| {
        OrderBook::new(
            bids.into_iter()
                .enumerate()
                .map(|(i, p)| Order::bid(p, i as u64))
                .collect(),
            asks.into_iter()
                .enumerate()
                .map(|(i, p)| Order::ask(p, i as u64))
                .collect(),
        )
        .unwrap()
    })
}

/// Book plus a permutation of it.
fn book_and_shuffle(max_side: usize) -> impl Strategy<Value = (OrderBook, OrderBook)> {
    book_strategy(max_side, 30).prop_flat_map(|book| {
        let bids = Just(book.bids().to_vec()).prop_shuffle();
        let asks = Just(book.asks().to_vec()).prop_shuffle();
        (Just(book), bids, asks).prop_map(|(book, b, a)| (book, OrderBook::new(b, a).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn greedy_size_equals_augmenting_path(book in book_strategy(12, 50)) {
        let m = produce_mm(&sort_bids_desc(book.bids()), &sort_asks_desc(book.asks())).unwrap();
        prop_assert_eq!(m.len(), max_matching_size_oracle(&book));
        prop_assert!(is_matching_in(&book, &m).passed());
        prop_assert!(is_individual_rational(&m).passed());
        prop_assert!(is_fair_on_bids(&book, &m).passed());
        prop_assert!(no_dup(&bids_of(&m)) && no_dup(&asks_of(&m)));
    }

    #[test]
    fn fair_maximal_is_fair_and_maximum(book in book_strategy(12, 50)) {
        for m in [fair_maximal_match(&book), fair_maximal_match_two_pass(&book)] {
            prop_assert!(is_matching_in(&book, &m).passed());
            prop_assert!(is_fair(&book, &m).passed());
            prop_assert!(is_maximum(&book, &m).passed());
            prop_assert!(is_individual_rational(&m).passed());
        }
    }

    #[test]
    fn uniform_match_properties(book in book_strategy(12, 50)) {
        let out = uniform_match(&book);
        let m = &out.matching;
        prop_assert_eq!(m.len(), max_uniform_size_oracle(&book));
        prop_assert_eq!(out.price.is_some(), !m.is_empty());
        for v in [
            is_matching_in(&book, m),
            is_individual_rational(m),
            is_uniform(m),
            is_fair(&book, m),
            is_uniform_maximal(&book, m),
        ] {
            prop_assert!(v.passed(), "{}", v);
        }
        if let Some(p) = out.price {
            let max_ask = m.iter().map(|f| f.ask.price).max().unwrap();
            let min_bid = m.iter().map(|f| f.bid.price).min().unwrap();
            prop_assert!(max_ask <= p && p <= min_bid);
            prop_assert!(m.iter().all(|f| f.trade_price == p));
        }
    }

    #[test]
    fn make_ir_keeps_pairs(book in book_strategy(10, 50)) {
        let m = fair_maximal_match(&book);
        let priced = make_ir(&m).unwrap();
        prop_assert_eq!(bids_of(&priced), bids_of(&m));
        prop_assert_eq!(asks_of(&priced), asks_of(&m));
        prop_assert!(is_individual_rational(&priced).passed());
    }

    #[test]
    fn oracles_agree_with_enumeration(book in book_strategy(5, 20)) {
        let all = enumerate_matchings(&book, 5).unwrap();
        let best = all.iter().map(|m| m.len()).max().unwrap();
        prop_assert_eq!(best, max_matching_size_oracle(&book));

        let best_uniform = all
            .iter()
            .filter(|m| admits_uniform_ir_price(m))
            .map(|m| m.len())
            .max()
            .unwrap();
        prop_assert_eq!(best_uniform, max_uniform_size_oracle(&book));
        prop_assert!(best_uniform <= uniform_match(&book).matching.len());

        for m in &all {
            prop_assert!(is_matching_in(&book, m).passed());
            prop_assert!(m.len() <= book.bids().len().min(book.asks().len()));
        }
    }

    #[test]
    fn fairify_preserves_size_on_every_matching(book in book_strategy(4, 15)) {
        for m in enumerate_matchings(&book, 4).unwrap() {
            let fair = fairify(&book, &m).unwrap();
            prop_assert_eq!(fair.len(), m.len());
            prop_assert!(is_fair(&book, &fair).passed());
            prop_assert!(is_matching_in(&book, &fair).passed());
            prop_assert!(perm(&trade_prices_of(&fair), &trade_prices_of(&m)));
        }
    }

    #[test]
    fn oracles_and_algorithms_ignore_row_order((book, shuffled) in book_and_shuffle(10)) {
        prop_assert_eq!(max_matching_size_oracle(&book), max_matching_size_oracle(&shuffled));
        prop_assert_eq!(max_uniform_size_oracle(&book), max_uniform_size_oracle(&shuffled));
        prop_assert_eq!(fair_maximal_match(&book), fair_maximal_match(&shuffled));
        prop_assert_eq!(uniform_match(&book), uniform_match(&shuffled));
    }

    #[test]
    fn verdicts_ignore_row_order(
        (book, shuffled) in book_and_shuffle(6),
        picks in prop::collection::vec((0usize..6, 0usize..6, 0u64..40), 0..5),
        seed in any::<u64>(),
    ) {
        // arbitrary, possibly invalid, fills drawn from the book
        let m: Matching = picks
            .iter()
            .filter_map(|&(i, j, tp)| {
                let b = book.bids().get(i)?;
                let a = book.asks().get(j)?;
                Some(Fill::new(*b, *a, tp))
            })
            .collect();
        let mut fills = m.fills().to_vec();
        if !fills.is_empty() {
            let k = fills.len();
            fills.rotate_left((seed as usize) % k);
        }
        let m2 = Matching::new(fills);
        for p in Property::ALL {
            prop_assert_eq!(p.check(&book, &m).passed(), p.check(&shuffled, &m2).passed(), "{}", p);
        }
    }
}

#[test]
fn uniform_never_beaten_on_separating_book() {
    let book = OrderBook::new(
        vec![Order::bid(100, 1), Order::bid(90, 2)],
        vec![Order::ask(95, 1), Order::ask(80, 2)],
    )
    .unwrap();
    assert_eq!(max_matching_size_oracle(&book), 2);
    assert_eq!(max_uniform_size_oracle(&book), 1);
    let out = uniform_match(&book);
    assert_eq!(out.matching.len(), 1);
    assert_eq!(out.price, Some(Price(100)));
}
