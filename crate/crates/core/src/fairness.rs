//! Size-preserving transforms that turn any matching into a fair one.
//!
//! [`make_fob`] walks the fills (sorted by bid, best first) alongside the
//! book's bids (same order) and hands the k-th best bid to the k-th fill.
//! Asks and trade prices ride along untouched. [`make_foa`] is the mirror
//! image on the ask side. Neither transform re-establishes individual
//! rationality; compose with [`crate::matching_mm::make_ir`] when needed.

use crate::checkers::is_matching_in;
use crate::error::{Error, Result};
use crate::model::{asks_of, bids_of, prices_of, Fill, Matching, Order, OrderBook};
use crate::relations::{
    fills_sorted_by_ask_asc, fills_sorted_by_bid_desc, is_sorted_asc, is_sorted_desc,
    sort_asks_asc, sort_bids_desc, sort_fills_by_ask_asc, sort_fills_by_bid_desc, sublist,
};

/// Replaces the bids of `m` with the top bids of `bids`, fill by fill.
///
/// Requires `m` sorted by bid price descending, `bids` sorted descending, and
/// the bid prices of `m` to be a subsequence of the prices of `bids`.
pub fn make_fob(m: &Matching, bids: &[Order]) -> Result<Matching> {
    if !fills_sorted_by_bid_desc(m) {
        return Err(Error::PreconditionViolated(
            "fills not sorted by bid price descending".into(),
        ));
    }
    if !is_sorted_desc(bids) {
        return Err(Error::PreconditionViolated(
            "bids not sorted by price descending".into(),
        ));
    }
    if !sublist(&prices_of(&bids_of(m)), &prices_of(bids)) {
        return Err(Error::PreconditionViolated(
            "matched bid prices are not a subsequence of the book's bid prices".into(),
        ));
    }
    Ok(m.iter()
        .zip(bids)
        .map(|(fill, bid)| Fill::new(*bid, fill.ask, fill.trade_price))
        .collect())
}

/// Replaces the asks of `m` with the cheapest asks of `asks`, fill by fill.
///
/// Requires `m` sorted by ask price ascending, `asks` sorted ascending, and
/// the ask prices of `m` to be a subsequence of the prices of `asks`.
pub fn make_foa(m: &Matching, asks: &[Order]) -> Result<Matching> {
    if !fills_sorted_by_ask_asc(m) {
        return Err(Error::PreconditionViolated(
            "fills not sorted by ask price ascending".into(),
        ));
    }
    if !is_sorted_asc(asks) {
        return Err(Error::PreconditionViolated(
            "asks not sorted by price ascending".into(),
        ));
    }
    if !sublist(&prices_of(&asks_of(m)), &prices_of(asks)) {
        return Err(Error::PreconditionViolated(
            "matched ask prices are not a subsequence of the book's ask prices".into(),
        ));
    }
    Ok(m.iter()
        .zip(asks)
        .map(|(fill, ask)| Fill::new(fill.bid, *ask, fill.trade_price))
        .collect())
}

/// A fair matching in `book` of the same size as `m`.
///
/// Fails with [`Error::NotAMatching`] when `m` is not a matching in `book`.
pub fn fairify(book: &OrderBook, m: &Matching) -> Result<Matching> {
    let verdict = is_matching_in(book, m);
    if !verdict.passed() {
        return Err(Error::NotAMatching(Box::new(verdict)));
    }
    let fair_bids = make_fob(&sort_fills_by_bid_desc(m), &sort_bids_desc(book.bids()))?;
    make_foa(
        &sort_fills_by_ask_asc(&fair_bids),
        &sort_asks_asc(book.asks()),
    )
}
