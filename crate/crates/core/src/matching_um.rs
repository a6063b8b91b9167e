//! Uniform-price uncross for an opening auction.
//!
//! The best bid meets the cheapest ask until the two sides stop crossing;
//! every pair then trades at the last matched bid's limit price. No other
//! individually rational single-price matching in the book is larger.

use crate::error::{Error, Result};
use crate::model::{Fill, Matching, Order, OrderBook, Price};
use crate::relations::{is_sorted_asc, is_sorted_desc, sort_asks_asc, sort_bids_desc};

/// Output of [`uniform_match`]. `price` is `Some` exactly when at least one
/// pair trades, and every fill then trades at it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniformResult {
    pub matching: Matching,
    pub price: Option<Price>,
}

/// Pairs the k-th best bid with the k-th cheapest ask while they cross.
/// Bids must be sorted descending and asks ascending. Each fill trades at
/// its bid price.
pub fn produce_um(bids: &[Order], asks: &[Order]) -> Result<Matching> {
    if !is_sorted_desc(bids) {
        return Err(Error::PreconditionViolated(
            "bids not sorted by price descending".into(),
        ));
    }
    if !is_sorted_asc(asks) {
        return Err(Error::PreconditionViolated(
            "asks not sorted by price ascending".into(),
        ));
    }
    Ok(bids
        .iter()
        .zip(asks)
        .take_while(|(b, a)| a.price <= b.price)
        .map(|(b, a)| Fill::new(*b, *a, b.price))
        .collect())
}

/// Limit price of the bid in the last pair [`produce_um`] forms, if any.
pub fn uniform_price(bids: &[Order], asks: &[Order]) -> Result<Option<Price>> {
    Ok(produce_um(bids, asks)?.last().map(|f| f.bid.price))
}

/// Uniform-price matching of `book`; sides are sorted internally.
pub fn uniform_match(book: &OrderBook) -> UniformResult {
    let bids = sort_bids_desc(book.bids());
    let asks = sort_asks_asc(book.asks());
    let pairs = produce_um(&bids, &asks).expect("inputs sorted above");
    let price = pairs.last().map(|f| f.bid.price);
    let matching = match price {
        Some(p) => pairs.into_iter().map(|f| f.with_trade_price(p)).collect(),
        None => Matching::empty(),
    };
    UniformResult { matching, price }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::{
        is_fair, is_individual_rational, is_matching_in, is_maximum, is_uniform, is_uniform_maximal,
    };

    fn bids(prices: &[u64]) -> Vec<Order> {
        prices
            .iter()
            .enumerate()
            .map(|(i, &p)| Order::bid(p, i as u64 + 1))
            .collect()
    }

    fn asks(prices: &[u64]) -> Vec<Order> {
        prices
            .iter()
            .enumerate()
            .map(|(i, &p)| Order::ask(p, i as u64 + 1))
            .collect()
    }

    #[test]
    fn produce_um_examples() {
        assert!(produce_um(&[], &asks(&[1])).unwrap().is_empty());

        let (b, a) = (bids(&[120, 110, 90]), asks(&[80, 85, 100]));
        assert_eq!(
            produce_um(&b, &a).unwrap().fills(),
            &[Fill::new(b[0], a[0], 120), Fill::new(b[1], a[1], 110)]
        );
        assert!(produce_um(&bids(&[50]), &asks(&[60])).unwrap().is_empty());
    }

    #[test]
    fn stops_at_first_uncrossed_pair() {
        // 90 < 100 stops the walk even though the fourth pair would cross
        let (b, a) = (bids(&[120, 90, 80, 80]), asks(&[80, 100, 100, 10]));
        assert!(produce_um(&b, &a).is_err());
        let a = asks(&[10, 80, 100, 100]);
        assert_eq!(produce_um(&b, &a).unwrap().len(), 2);
    }

    #[test]
    fn uniform_price_examples() {
        assert_eq!(
            uniform_price(&bids(&[120, 110, 90]), &asks(&[80, 85, 100])).unwrap(),
            Some(Price(110))
        );
        assert_eq!(
            uniform_price(&bids(&[100]), &asks(&[90])).unwrap(),
            Some(Price(100))
        );
        assert_eq!(uniform_price(&bids(&[50]), &asks(&[60])).unwrap(), None);
    }

    #[test]
    fn rejects_unsorted_input() {
        assert!(matches!(
            produce_um(&bids(&[90, 100]), &asks(&[80])),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            produce_um(&bids(&[100]), &asks(&[90, 80])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn uniform_match_examples() {
        assert_eq!(uniform_match(&OrderBook::empty()), UniformResult::default());

        let book = OrderBook::new(bids(&[90, 120, 110]), asks(&[100, 80, 85])).unwrap();
        let out = uniform_match(&book);
        assert_eq!(out.price, Some(Price(110)));
        assert_eq!(
            out.matching.fills(),
            &[
                Fill::new(Order::bid(120, 2), Order::ask(80, 2), 110),
                Fill::new(Order::bid(110, 3), Order::ask(85, 3), 110),
            ]
        );
        for v in [
            is_matching_in(&book, &out.matching),
            is_individual_rational(&out.matching),
            is_uniform(&out.matching),
            is_fair(&book, &out.matching),
            is_uniform_maximal(&book, &out.matching),
        ] {
            assert!(v.passed(), "{v}");
        }
    }

    #[test]
    fn uniform_is_not_maximum_on_separating_book() {
        let book = OrderBook::new(bids(&[100, 90]), asks(&[80, 95])).unwrap();
        let out = uniform_match(&book);
        assert_eq!(out.price, Some(Price(100)));
        assert_eq!(
            out.matching.fills(),
            &[Fill::new(Order::bid(100, 1), Order::ask(80, 1), 100)]
        );
        assert!(is_uniform_maximal(&book, &out.matching).passed());
        assert!(!is_maximum(&book, &out.matching).passed());
    }
}
