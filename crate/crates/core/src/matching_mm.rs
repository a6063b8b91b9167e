//! Greedy maximum matching with per-pair pricing.

use crate::error::{Error, Result};
use crate::fairness::{fairify, make_foa};
use crate::model::{Fill, Matching, Order, OrderBook, Price};
use crate::relations::{
    is_sorted_desc, sort_asks_asc, sort_asks_desc, sort_bids_desc, sort_fills_by_ask_asc,
};

/// Maximum matching for bids and asks both sorted by price descending.
///
/// The best remaining bid takes the most expensive remaining ask it can
/// afford; asks priced above it are dropped, since no later bid can afford
/// them either. Each fill trades at the bid's limit price.
pub fn produce_mm(bids: &[Order], asks: &[Order]) -> Result<Matching> {
    if !is_sorted_desc(bids) {
        return Err(Error::PreconditionViolated(
            "bids not sorted by price descending".into(),
        ));
    }
    if !is_sorted_desc(asks) {
        return Err(Error::PreconditionViolated(
            "asks not sorted by price descending".into(),
        ));
    }
    let mut fills = Vec::with_capacity(bids.len().min(asks.len()));
    let mut bids = bids.iter().peekable();
    for ask in asks {
        let Some(bid) = bids.peek() else { break };
        if ask.price <= bid.price {
            fills.push(Fill::new(**bid, *ask, bid.price));
            bids.next();
        }
    }
    Ok(Matching::new(fills))
}

/// Floor of the midpoint of `[ask, bid]`. Caller guarantees `ask <= bid`.
fn midpoint(fill: &Fill) -> Price {
    let (lo, hi) = (fill.ask.price.ticks(), fill.bid.price.ticks());
    Price(lo + (hi - lo) / 2)
}

/// Reprices every fill at the floor midpoint of its bid and ask limits,
/// keeping the pairs. Fails on the first unmatchable fill.
pub fn make_ir(m: &Matching) -> Result<Matching> {
    m.iter()
        .map(|f| {
            if f.is_matchable() {
                Ok(f.with_trade_price(midpoint(f)))
            } else {
                Err(Error::NotMatchable(*f))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(Matching::new)
}

/// A maximum matching in `book` that is also fair on both sides.
///
/// Runs [`produce_mm`] (already fair on bids) and then moves the matched
/// asks onto the cheapest asks of the book.
pub fn fair_maximal_match(book: &OrderBook) -> Matching {
    let greedy = greedy(book);
    make_foa(&sort_fills_by_ask_asc(&greedy), &sort_asks_asc(book.asks()))
        .expect("greedy asks are drawn from the book, so their prices form a subsequence")
}

/// Like [`fair_maximal_match`] but runs the full bid-then-ask [`fairify`]
/// pipeline on the greedy result.
pub fn fair_maximal_match_two_pass(book: &OrderBook) -> Matching {
    fairify(book, &greedy(book)).expect("greedy output is a matching in the book")
}

fn greedy(book: &OrderBook) -> Matching {
    produce_mm(&sort_bids_desc(book.bids()), &sort_asks_desc(book.asks()))
        .expect("inputs sorted above")
}
