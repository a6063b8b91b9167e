//! List and multiset relations used to state and check matching properties,
//! plus the canonical sorts every algorithm relies on.
//!
//! The multiset relations count naively in O(n·m). Auction batches are small
//! and these functions double as reference definitions in the checkers.

use std::cmp::Ordering;

use crate::model::{Fill, Matching, Order};

/// Occurrences of `x` in `l`.
pub fn count<T: PartialEq>(x: &T, l: &[T]) -> usize {
    l.iter().filter(|y| *y == x).count()
}

/// Multiset inclusion: every element occurs in `s` at least as often as in `l`.
pub fn included<T: PartialEq>(l: &[T], s: &[T]) -> bool {
    l.iter().all(|x| count(x, l) <= count(x, s))
}

/// Multiset equality.
pub fn perm<T: PartialEq>(l: &[T], s: &[T]) -> bool {
    l.len() == s.len() && included(l, s)
}

/// `l` is a (not necessarily contiguous) subsequence of `s`.
pub fn sublist<T: PartialEq>(l: &[T], s: &[T]) -> bool {
    let mut rest = s.iter();
    l.iter().all(|x| rest.any(|y| y == x))
}

/// True when no element occurs twice.
pub fn no_dup<T: PartialEq>(l: &[T]) -> bool {
    l.iter().enumerate().all(|(i, x)| !l[i + 1..].contains(x))
}

fn by_price_desc(a: &Order, b: &Order) -> Ordering {
    b.price.cmp(&a.price).then(a.id.cmp(&b.id))
}

fn by_price_asc(a: &Order, b: &Order) -> Ordering {
    a.price.cmp(&b.price).then(a.id.cmp(&b.id))
}

/// Most competitive bid first; equal prices by ascending id.
pub fn sort_bids_desc(bids: &[Order]) -> Vec<Order> {
    let mut v = bids.to_vec();
    v.sort_by(by_price_desc);
    v
}

/// Most competitive ask first; equal prices by ascending id.
pub fn sort_asks_asc(asks: &[Order]) -> Vec<Order> {
    let mut v = asks.to_vec();
    v.sort_by(by_price_asc);
    v
}

/// Most expensive ask first; the input order `produce_mm` expects.
pub fn sort_asks_desc(asks: &[Order]) -> Vec<Order> {
    let mut v = asks.to_vec();
    v.sort_by(by_price_desc);
    v
}

/// Fills ordered by their bid, most competitive first. Ties fall back to the
/// ask's id so the order is total.
pub fn sort_fills_by_bid_desc(m: &Matching) -> Matching {
    let mut fills = m.fills().to_vec();
    fills.sort_by(|x, y| by_price_desc(&x.bid, &y.bid).then(x.ask.id.cmp(&y.ask.id)));
    Matching::new(fills)
}

/// Fills ordered by their ask, most competitive first.
pub fn sort_fills_by_ask_asc(m: &Matching) -> Matching {
    let mut fills = m.fills().to_vec();
    fills.sort_by(|x, y| by_price_asc(&x.ask, &y.ask).then(x.bid.id.cmp(&y.bid.id)));
    Matching::new(fills)
}

pub fn is_sorted_desc(orders: &[Order]) -> bool {
    orders.windows(2).all(|w| w[0].price >= w[1].price)
}

pub fn is_sorted_asc(orders: &[Order]) -> bool {
    orders.windows(2).all(|w| w[0].price <= w[1].price)
}

pub fn fills_sorted_by_bid_desc(fills: &[Fill]) -> bool {
    fills.windows(2).all(|w| w[0].bid.price >= w[1].bid.price)
}

pub fn fills_sorted_by_ask_asc(fills: &[Fill]) -> bool {
    fills.windows(2).all(|w| w[0].ask.price <= w[1].ask.price)
}
