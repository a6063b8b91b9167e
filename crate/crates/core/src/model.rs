//! Orders, fills, matchings and order books.
//!
//! Prices are whole ticks. Fills carry their two orders by value and make no
//! claim about being matchable or individually rational; those are properties
//! checked in [`crate::checkers`], so an arbitrary exchange log can be loaded
//! and scored.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A limit or trade price in the lowest currency denomination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Price(pub u64);

impl Price {
    pub const fn new(ticks: u64) -> Self {
        Price(ticks)
    }

    pub const fn ticks(self) -> u64 {
        self.0
    }
}

impl From<u64> for Price {
    fn from(ticks: u64) -> Self {
        Price(ticks)
    }
}

impl fmt::Display for Price {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Bid,
    Ask,
}

impl Side {
    /// Single-letter code used in book files.
    pub fn code(self) -> char {
        match self {
            Side::Bid => 'B',
            Side::Ask => 'A',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Bid => "bid",
            Side::Ask => "ask",
        })
    }
}

/// A single-unit order. Equality is componentwise over side, price and id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Order {
    pub side: Side,
    pub price: Price,
    pub id: u64,
}

impl Order {
    pub fn new(side: Side, price: impl Into<Price>, id: u64) -> Self {
        Order {
            side,
            price: price.into(),
            id,
        }
    }

    pub fn bid(price: impl Into<Price>, id: u64) -> Self {
        Order::new(Side::Bid, price, id)
    }

    pub fn ask(price: impl Into<Price>, id: u64) -> Self {
        Order::new(Side::Ask, price, id)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}@{}", self.side.code(), self.id, self.price)
    }
}

/// One matched bid-ask pair and the price it trades at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fill {
    pub bid: Order,
    pub ask: Order,
    pub trade_price: Price,
}

impl Fill {
    pub fn new(bid: Order, ask: Order, trade_price: impl Into<Price>) -> Self {
        Fill {
            bid,
            ask,
            trade_price: trade_price.into(),
        }
    }

    /// `bid.price >= ask.price`.
    pub fn is_matchable(&self) -> bool {
        self.bid.price >= self.ask.price
    }

    pub fn with_trade_price(self, trade_price: Price) -> Self {
        Fill {
            trade_price,
            ..self
        }
    }
}

impl fmt::Display for Fill {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} tp={}", self.bid, self.ask, self.trade_price)
    }
}

/// An ordered sequence of fills.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Matching(Vec<Fill>);

impl Matching {
    pub fn new(fills: Vec<Fill>) -> Self {
        Matching(fills)
    }

    pub fn empty() -> Self {
        Matching(Vec::new())
    }

    pub fn fills(&self) -> &[Fill] {
        &self.0
    }

    pub fn into_fills(self) -> Vec<Fill> {
        self.0
    }

    /// Appends the fills of `other`, keeping order.
    pub fn concat(mut self, other: &Matching) -> Matching {
        self.0.extend_from_slice(&other.0);
        self
    }
}

impl Deref for Matching {
    type Target = [Fill];

    fn deref(&self) -> &[Fill] {
        &self.0
    }
}

impl From<Vec<Fill>> for Matching {
    fn from(fills: Vec<Fill>) -> Self {
        Matching(fills)
    }
}

impl FromIterator<Fill> for Matching {
    fn from_iter<I: IntoIterator<Item = Fill>>(iter: I) -> Self {
        Matching(iter.into_iter().collect())
    }
}

impl IntoIterator for Matching {
    type Item = Fill;
    type IntoIter = std::vec::IntoIter<Fill>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a Matching {
    type Item = &'a Fill;
    type IntoIter = std::slice::Iter<'a, Fill>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Bids and asks of one auction. Ids are unique within each side; the same
/// id may appear once on each side.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderBook {
    bids: Vec<Order>,
    asks: Vec<Order>,
}

impl OrderBook {
    /// Validates per-side id uniqueness and side tags. Input order is kept.
    pub fn new(bids: Vec<Order>, asks: Vec<Order>) -> Result<Self> {
        check_side(&bids, Side::Bid)?;
        check_side(&asks, Side::Ask)?;
        Ok(OrderBook { bids, asks })
    }

    pub fn empty() -> Self {
        OrderBook::default()
    }

    pub fn bids(&self) -> &[Order] {
        &self.bids
    }

    pub fn asks(&self) -> &[Order] {
        &self.asks
    }

    pub fn find_bid(&self, id: u64) -> Option<&Order> {
        self.bids.iter().find(|o| o.id == id)
    }

    pub fn find_ask(&self, id: u64) -> Option<&Order> {
        self.asks.iter().find(|o| o.id == id)
    }

    pub fn is_empty(&self) -> bool {
        self.bids.is_empty() && self.asks.is_empty()
    }
}

fn check_side(orders: &[Order], side: Side) -> Result<()> {
    let mut seen = std::collections::HashSet::with_capacity(orders.len());
    for o in orders {
        if o.side != side {
            return Err(Error::WrongSide {
                expected: side,
                found: o.side,
                id: o.id,
            });
        }
        if !seen.insert(o.id) {
            return Err(Error::DuplicateId { side, id: o.id });
        }
    }
    Ok(())
}

/// Validating constructor for [`OrderBook`].
pub fn mk_order_book(bids: Vec<Order>, asks: Vec<Order>) -> Result<OrderBook> {
    OrderBook::new(bids, asks)
}

/// The bid of every fill, in fill order.
pub fn bids_of(m: &Matching) -> Vec<Order> {
    m.iter().map(|f| f.bid).collect()
}

/// The ask of every fill, in fill order.
pub fn asks_of(m: &Matching) -> Vec<Order> {
    m.iter().map(|f| f.ask).collect()
}

pub fn prices_of(orders: &[Order]) -> Vec<Price> {
    orders.iter().map(|o| o.price).collect()
}

/// Trade price of every fill, in fill order.
pub fn trade_prices_of(m: &Matching) -> Vec<Price> {
    m.iter().map(|f| f.trade_price).collect()
}
