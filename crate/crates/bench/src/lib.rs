//! Book generators shared by the criterion benches.

use auction_core::{Order, OrderBook};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A book with `per_side` bids and asks, prices uniform in `0..=max_price`.
/// The same seed always yields the same book.
pub fn random_book(per_side: usize, max_price: u64, seed: u64) -> OrderBook {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut side = |make: fn(u64, u64) -> Order| -> Vec<Order> {
        (0..per_side as u64)
            .map(|id| make(rng.gen_range(0..=max_price), id))
            .collect()
    };
    let bids = side(Order::bid);
    let asks = side(Order::ask);
    OrderBook::new(bids, asks).expect("ids are sequential")
}
