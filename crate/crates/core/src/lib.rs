//! Double-sided auction matching.
//!
//! Single-unit bids and asks are collected in an [`OrderBook`] and matched
//! in batch. Three families of algorithm are provided:
//!
//! - [`produce_mm`] / [`fair_maximal_match`]: maximum number of trades, each
//!   pair at its own price;
//! - [`uniform_match`]: the opening-auction uncross, every pair at one price;
//! - [`fairify`]: rewrite any matching into a fair one of the same size.
//!
//! Every property these algorithms promise (individual rationality,
//! uniformity, fairness, maximality) has a checker in [`checkers`] that
//! accepts arbitrary input, and [`oracles`] provides brute-force references
//! for the maximality claims.

pub mod checkers;
pub mod error;
pub mod fairness;
pub mod matching_mm;
pub mod matching_um;
pub mod model;
pub mod oracles;
pub mod relations;

pub use checkers::{Property, Verdict, Witness};
pub use error::{Error, Result};
pub use fairness::{fairify, make_foa, make_fob};
pub use matching_mm::{fair_maximal_match, fair_maximal_match_two_pass, make_ir, produce_mm};
pub use matching_um::{produce_um, uniform_match, uniform_price, UniformResult};
pub use model::{
    asks_of, bids_of, mk_order_book, prices_of, trade_prices_of, Fill, Matching, Order, OrderBook,
    Price, Side,
};
