//! Brute-force references for the maximality claims of the matchers.
//!
//! None of these share code with the greedy matchers: maximum matching size
//! comes from Kuhn's augmenting-path search on the explicit bid-ask graph,
//! maximum uniform size from a sweep over candidate prices, and small books
//! can be enumerated exhaustively.

use crate::error::{Error, Result};
use crate::model::{Fill, Matching, Order, OrderBook};

/// Per-side bound for [`enumerate_matchings`] when callers have no better one.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 8;

/// Size of a maximum matching on the graph with an edge `(b, a)` whenever
/// `b.price >= a.price`.
pub fn max_matching_size_oracle(book: &OrderBook) -> usize {
    let (bids, asks) = (book.bids(), book.asks());
    let adjacency: Vec<Vec<usize>> = bids
        .iter()
        .map(|b| {
            asks.iter()
                .enumerate()
                .filter(|(_, a)| b.price >= a.price)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();

    // ask index -> bid index currently holding it
    let mut owner: Vec<Option<usize>> = vec![None; asks.len()];
    let mut size = 0;
    for bid in 0..bids.len() {
        let mut visited = vec![false; asks.len()];
        if augment(bid, &adjacency, &mut visited, &mut owner) {
            size += 1;
        }
    }
    size
}

fn augment(
    bid: usize,
    adjacency: &[Vec<usize>],
    visited: &mut [bool],
    owner: &mut [Option<usize>],
) -> bool {
    for &ask in &adjacency[bid] {
        if visited[ask] {
            continue;
        }
        visited[ask] = true;
        let free = match owner[ask] {
            None => true,
            Some(other) => augment(other, adjacency, visited, owner),
        };
        if free {
            owner[ask] = Some(bid);
            return true;
        }
    }
    false
}

/// Largest number of pairs that can trade at one individually rational
/// price: the maximum over every limit price `p` in the book of
/// `min(#bids >= p, #asks <= p)`.
pub fn max_uniform_size_oracle(book: &OrderBook) -> usize {
    book.bids()
        .iter()
        .chain(book.asks())
        .map(|candidate| {
            let p = candidate.price;
            let buyers = book.bids().iter().filter(|b| b.price >= p).count();
            let sellers = book.asks().iter().filter(|a| a.price <= p).count();
            buyers.min(sellers)
        })
        .max()
        .unwrap_or(0)
}

/// Every matching in `book` as a set of pairs, each exactly once. Fills are
/// listed in book bid order and trade at the bid's limit price.
///
/// Fails with [`Error::TooLarge`] when either side holds more than `limit`
/// orders.
pub fn enumerate_matchings(book: &OrderBook, limit: usize) -> Result<Vec<Matching>> {
    let (bids, asks) = (book.bids(), book.asks());
    if bids.len() > limit || asks.len() > limit {
        return Err(Error::TooLarge {
            bids: bids.len(),
            asks: asks.len(),
            limit,
        });
    }
    let mut out = Vec::new();
    let mut used = vec![false; asks.len()];
    let mut current = Vec::with_capacity(bids.len().min(asks.len()));
    enumerate_from(0, bids, asks, &mut used, &mut current, &mut out);
    Ok(out)
}

fn enumerate_from(
    next_bid: usize,
    bids: &[Order],
    asks: &[Order],
    used: &mut [bool],
    current: &mut Vec<Fill>,
    out: &mut Vec<Matching>,
) {
    if next_bid == bids.len() {
        out.push(Matching::new(current.clone()));
        return;
    }
    let bid = bids[next_bid];
    // leave this bid unmatched
    enumerate_from(next_bid + 1, bids, asks, used, current, out);
    for (j, ask) in asks.iter().enumerate() {
        if used[j] || ask.price > bid.price {
            continue;
        }
        used[j] = true;
        current.push(Fill::new(bid, *ask, bid.price));
        enumerate_from(next_bid + 1, bids, asks, used, current, out);
        current.pop();
        used[j] = false;
    }
}

/// True when some single price lies inside every fill's `[ask, bid]` range.
pub fn admits_uniform_ir_price(m: &Matching) -> bool {
    let max_ask = m.iter().map(|f| f.ask.price).max();
    let min_bid = m.iter().map(|f| f.bid.price).min();
    match (max_ask, min_bid) {
        (Some(a), Some(b)) => a <= b,
        _ => true,
    }
}
