//! Executable versions of the regulatory properties of a matching.
//!
//! Every checker is total: it accepts any book and any sequence of fills,
//! including fills that are not matchable or reference foreign orders, and
//! reports a [`Verdict`] with the first counterexample it finds.

use std::fmt;
use std::str::FromStr;

use crate::model::{asks_of, bids_of, Fill, Matching, Order, OrderBook, Price};
use crate::oracles::{max_matching_size_oracle, max_uniform_size_oracle};
use crate::relations::{count, sort_asks_asc, sort_bids_desc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Matchable,
    MatchingIn,
    IndividualRational,
    Uniform,
    FairOnBids,
    FairOnAsks,
    Fair,
    Maximum,
    UniformMaximal,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::Matchable,
        Property::MatchingIn,
        Property::IndividualRational,
        Property::Uniform,
        Property::FairOnBids,
        Property::FairOnAsks,
        Property::Fair,
        Property::Maximum,
        Property::UniformMaximal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Matchable => "matchable",
            Property::MatchingIn => "matching",
            Property::IndividualRational => "ir",
            Property::Uniform => "uniform",
            Property::FairOnBids => "fair-bids",
            Property::FairOnAsks => "fair-asks",
            Property::Fair => "fair",
            Property::Maximum => "maximal",
            Property::UniformMaximal => "uniform-maximal",
        }
    }

    /// Runs the checker for this property.
    pub fn check(self, book: &OrderBook, m: &Matching) -> Verdict {
        match self {
            Property::Matchable => all_matchable(m),
            Property::MatchingIn => is_matching_in(book, m),
            Property::IndividualRational => is_individual_rational(m),
            Property::Uniform => is_uniform(m),
            Property::FairOnBids => is_fair_on_bids(book, m),
            Property::FairOnAsks => is_fair_on_asks(book, m),
            Property::Fair => is_fair(book, m),
            Property::Maximum => is_maximum(book, m),
            Property::UniformMaximal => is_uniform_maximal(book, m),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownProperty(pub String);

impl fmt::Display for UnknownProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown property `{}`", self.0)
    }
}

impl std::error::Error for UnknownProperty {}

impl FromStr for Property {
    type Err = UnknownProperty;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| UnknownProperty(s.to_string()))
    }
}

/// Counterexample attached to a failing verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Fill whose bid is below its ask.
    Unmatchable { index: usize, fill: Fill },
    /// Fill whose trade price lies outside `[ask, bid]`.
    OutsideLimits { index: usize, fill: Fill },
    /// Order matched more than once.
    Duplicate(Order),
    /// Matched order that is not in the book.
    NotInBook(Order),
    /// Two fills trading at different prices.
    PriceMismatch {
        first: (usize, Price),
        other: (usize, Price),
    },
    /// `skipped` is strictly more competitive than `matched` yet unmatched.
    Unfair { skipped: Order, matched: Order },
    /// Matching has `size` fills where `optimum` are attainable.
    TooSmall { size: usize, optimum: usize },
    /// A prerequisite property failed.
    Requires(Box<Verdict>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Unmatchable { index, fill } => {
                write!(f, "fill {index} unmatchable: {fill}")
            }
            Witness::OutsideLimits { index, fill } => {
                write!(f, "fill {index} priced outside limits: {fill}")
            }
            Witness::Duplicate(o) => write!(f, "order matched twice: {o}"),
            Witness::NotInBook(o) => write!(f, "order not in book: {o}"),
            Witness::PriceMismatch { first, other } => write!(
                f,
                "fill {} tp={} differs from fill {} tp={}",
                first.0, first.1, other.0, other.1
            ),
            Witness::Unfair { skipped, matched } => {
                write!(
                    f,
                    "{skipped} unmatched while less competitive {matched} matched"
                )
            }
            Witness::TooSmall { size, optimum } => write!(f, "size {size} < {optimum}"),
            Witness::Requires(v) => write!(f, "requires {v}"),
        }
    }
}

/// Result of one checker. Passing verdicts carry no witness; failing ones
/// always do.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub property: Property,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass(property: Property) -> Self {
        Verdict {
            property,
            witness: None,
        }
    }

    pub fn fail(property: Property, witness: Witness) -> Self {
        Verdict {
            property,
            witness: Some(witness),
        }
    }

    fn from_option(property: Property, witness: Option<Witness>) -> Self {
        Verdict { property, witness }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    /// Same outcome reported under another property name.
    fn relabel(self, property: Property) -> Self {
        Verdict { property, ..self }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{} PASS", self.property),
            Some(w) => write!(f, "{} FAIL {}", self.property, w),
        }
    }
}

/// Every fill has `bid.price >= ask.price`.
pub fn all_matchable(m: &Matching) -> Verdict {
    let witness = m
        .iter()
        .enumerate()
        .find(|(_, f)| !f.is_matchable())
        .map(|(index, fill)| Witness::Unmatchable { index, fill: *fill });
    Verdict::from_option(Property::Matchable, witness)
}

/// All fills matchable, no order used twice, every order drawn from the book.
pub fn is_matching_in(book: &OrderBook, m: &Matching) -> Verdict {
    let prop = Property::MatchingIn;
    if let Some(w) = all_matchable(m).witness {
        return Verdict::fail(prop, w);
    }
    let (bids, asks) = (bids_of(m), asks_of(m));
    for side in [&bids, &asks] {
        if let Some(o) = side.iter().find(|o| count(*o, side) > 1) {
            return Verdict::fail(prop, Witness::Duplicate(*o));
        }
    }
    if let Some(o) = bids.iter().find(|o| !book.bids().contains(o)) {
        return Verdict::fail(prop, Witness::NotInBook(*o));
    }
    if let Some(o) = asks.iter().find(|o| !book.asks().contains(o)) {
        return Verdict::fail(prop, Witness::NotInBook(*o));
    }
    Verdict::pass(prop)
}

/// Every trade price lies in `[ask.price, bid.price]`.
pub fn is_individual_rational(m: &Matching) -> Verdict {
    let witness = m
        .iter()
        .enumerate()
        .find(|(_, f)| f.ask.price > f.trade_price || f.trade_price > f.bid.price)
        .map(|(index, fill)| Witness::OutsideLimits { index, fill: *fill });
    Verdict::from_option(Property::IndividualRational, witness)
}

/// Every fill trades at the same price.
pub fn is_uniform(m: &Matching) -> Verdict {
    let witness = m.first().and_then(|head| {
        m.iter()
            .enumerate()
            .skip(1)
            .find(|(_, f)| f.trade_price != head.trade_price)
            .map(|(i, f)| Witness::PriceMismatch {
                first: (0, head.trade_price),
                other: (i, f.trade_price),
            })
    });
    Verdict::from_option(Property::Uniform, witness)
}

/// Scans `ranked` (most competitive first) for an unmatched order that beats
/// a matched one.
fn first_unfair_pair(
    ranked: &[Order],
    matched: &[Order],
    beats: impl Fn(&Order, &Order) -> bool,
) -> Option<Witness> {
    ranked.iter().enumerate().find_map(|(i, better)| {
        if matched.contains(better) {
            return None;
        }
        ranked[i + 1..]
            .iter()
            .find(|worse| beats(better, worse) && matched.contains(worse))
            .map(|worse| Witness::Unfair {
                skipped: *better,
                matched: *worse,
            })
    })
}

/// No book bid is left unmatched while a strictly lower bid is matched.
pub fn is_fair_on_bids(book: &OrderBook, m: &Matching) -> Verdict {
    let witness = first_unfair_pair(&sort_bids_desc(book.bids()), &bids_of(m), |b, w| {
        b.price > w.price
    });
    Verdict::from_option(Property::FairOnBids, witness)
}

/// No book ask is left unmatched while a strictly higher ask is matched.
pub fn is_fair_on_asks(book: &OrderBook, m: &Matching) -> Verdict {
    let witness = first_unfair_pair(&sort_asks_asc(book.asks()), &asks_of(m), |s, w| {
        s.price < w.price
    });
    Verdict::from_option(Property::FairOnAsks, witness)
}

pub fn is_fair(book: &OrderBook, m: &Matching) -> Verdict {
    let on_bids = is_fair_on_bids(book, m);
    if !on_bids.passed() {
        return on_bids.relabel(Property::Fair);
    }
    is_fair_on_asks(book, m).relabel(Property::Fair)
}

/// `m` is a matching in `book` and no matching in `book` is larger.
pub fn is_maximum(book: &OrderBook, m: &Matching) -> Verdict {
    let prop = Property::Maximum;
    let valid = is_matching_in(book, m);
    if !valid.passed() {
        return Verdict::fail(prop, Witness::Requires(Box::new(valid)));
    }
    let optimum = max_matching_size_oracle(book);
    if m.len() < optimum {
        return Verdict::fail(
            prop,
            Witness::TooSmall {
                size: m.len(),
                optimum,
            },
        );
    }
    Verdict::pass(prop)
}

/// `m` is an individually rational uniform matching in `book` and no such
/// matching is larger.
pub fn is_uniform_maximal(book: &OrderBook, m: &Matching) -> Verdict {
    let prop = Property::UniformMaximal;
    for prerequisite in [
        is_matching_in(book, m),
        is_individual_rational(m),
        is_uniform(m),
    ] {
        if !prerequisite.passed() {
            return Verdict::fail(prop, Witness::Requires(Box::new(prerequisite)));
        }
    }
    let optimum = max_uniform_size_oracle(book);
    if m.len() < optimum {
        return Verdict::fail(
            prop,
            Witness::TooSmall {
                size: m.len(),
                optimum,
            },
        );
    }
    Verdict::pass(prop)
}
