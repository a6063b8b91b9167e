//! CSV book and trade files.
//!
//! Book files have the header `side,id,price` with `side` one of `B`/`A`.
//! Trade files have the header `bid_id,ask_id,price` and list fills in order,
//! naming orders by id only; [`rejoin`] looks them up in a book. Output is
//! UTF-8 with LF line endings and no quoting.

use std::fs::File;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use auction_core::{Fill, Matching, Order, OrderBook, Price, Side};
use thiserror::Error;

pub const BOOK_HEADER: [&str; 3] = ["side", "id", "price"];
pub const TRADE_HEADER: [&str; 3] = ["bid_id", "ask_id", "price"];

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },

    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("line {line}: negative price")]
    NegativePrice { line: u64 },

    #[error("line {line}: duplicate {side} id {id}")]
    DuplicateId { side: Side, id: u64, line: u64 },

    #[error("line {line}: unknown {side} id {id}")]
    UnknownId { side: Side, id: u64, line: u64 },
}

/// One row of a trade file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TradeRecord {
    pub bid_id: u64,
    pub ask_id: u64,
    pub price: Price,
    /// Source line, 0 for records not read from a file.
    pub line: u64,
}

impl TradeRecord {
    pub fn of(fill: &Fill) -> Self {
        TradeRecord {
            bid_id: fill.bid.id,
            ask_id: fill.ask.id,
            price: fill.trade_price,
            line: 0,
        }
    }
}

fn parse_err(line: u64, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

fn csv_err(e: csv::Error) -> FormatError {
    let line = e.position().map_or(0, |p| p.line());
    parse_err(line, e.to_string())
}

fn parse_id(field: &str, line: u64) -> Result<u64, FormatError> {
    field
        .parse()
        .map_err(|_| parse_err(line, format!("invalid id `{field}`")))
}

fn parse_price(field: &str, line: u64) -> Result<Price, FormatError> {
    if let Some(rest) = field.strip_prefix('-') {
        if !rest.is_empty() && rest.bytes().all(|c| c.is_ascii_digit()) {
            return Err(FormatError::NegativePrice { line });
        }
    }
    field
        .parse()
        .map(Price)
        .map_err(|_| parse_err(line, format!("invalid price `{field}`")))
}

fn reader<R: Read>(input: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(input)
}

/// Reads rows after checking the header; yields `(line, fields)`.
fn rows<R: Read>(input: R, header: [&str; 3]) -> Result<Vec<(u64, [String; 3])>, FormatError> {
    let mut rdr = reader(input);
    let mut records = rdr.records();
    match records.next() {
        None => {
            return Err(parse_err(
                1,
                format!("missing header `{}`", header.join(",")),
            ))
        }
        Some(rec) => {
            let rec = rec.map_err(csv_err)?;
            if rec.iter().ne(header.iter().copied()) {
                let line = rec.position().map_or(1, |p| p.line());
                return Err(parse_err(
                    line,
                    format!("expected header `{}`", header.join(",")),
                ));
            }
        }
    }
    records
        .map(|rec| {
            let rec = rec.map_err(csv_err)?;
            let line = rec.position().map_or(0, |p| p.line());
            Ok((
                line,
                [rec[0].to_string(), rec[1].to_string(), rec[2].to_string()],
            ))
        })
        .collect()
}

/// Parses a book file, keeping row order within each side.
pub fn read_book<R: Read>(input: R) -> Result<OrderBook, FormatError> {
    let (mut bids, mut asks) = (Vec::new(), Vec::new());
    for (line, [side, id, price]) in rows(input, BOOK_HEADER)? {
        let (side, orders) = match side.as_str() {
            "B" => (Side::Bid, &mut bids),
            "A" => (Side::Ask, &mut asks),
            other => return Err(parse_err(line, format!("invalid side `{other}`"))),
        };
        let id = parse_id(&id, line)?;
        let price = parse_price(&price, line)?;
        if orders.iter().any(|(_, o): &(u64, Order)| o.id == id) {
            return Err(FormatError::DuplicateId { side, id, line });
        }
        orders.push((line, Order::new(side, price, id)));
    }
    let strip = |v: Vec<(u64, Order)>| v.into_iter().map(|(_, o)| o).collect();
    Ok(OrderBook::new(strip(bids), strip(asks)).expect("ids and sides validated while reading"))
}

pub fn parse_book(path: &Path) -> Result<OrderBook, FormatError> {
    read_book(open(path)?)
}

pub fn read_trades<R: Read>(input: R) -> Result<Vec<TradeRecord>, FormatError> {
    rows(input, TRADE_HEADER)?
        .into_iter()
        .map(|(line, [bid, ask, price])| {
            Ok(TradeRecord {
                bid_id: parse_id(&bid, line)?,
                ask_id: parse_id(&ask, line)?,
                price: parse_price(&price, line)?,
                line,
            })
        })
        .collect()
}

pub fn parse_trades(path: &Path) -> Result<Vec<TradeRecord>, FormatError> {
    read_trades(open(path)?)
}

/// Resolves trade records against `book` into a matching.
pub fn rejoin(book: &OrderBook, trades: &[TradeRecord]) -> Result<Matching, FormatError> {
    trades
        .iter()
        .map(|t| {
            let bid = book.find_bid(t.bid_id).ok_or(FormatError::UnknownId {
                side: Side::Bid,
                id: t.bid_id,
                line: t.line,
            })?;
            let ask = book.find_ask(t.ask_id).ok_or(FormatError::UnknownId {
                side: Side::Ask,
                id: t.ask_id,
                line: t.line,
            })?;
            Ok(Fill::new(*bid, *ask, t.price))
        })
        .collect()
}

fn writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .quote_style(csv::QuoteStyle::Never)
        .from_writer(out)
}

pub fn write_trades<W: Write>(m: &Matching, out: W) -> io::Result<()> {
    let mut w = writer(out);
    w.write_record(TRADE_HEADER)?;
    for fill in m {
        w.write_record([
            fill.bid.id.to_string(),
            fill.ask.id.to_string(),
            fill.trade_price.to_string(),
        ])?;
    }
    w.flush()
}

pub fn write_book<W: Write>(book: &OrderBook, out: W) -> io::Result<()> {
    let mut w = writer(out);
    w.write_record(BOOK_HEADER)?;
    for o in book.bids().iter().chain(book.asks()) {
        w.write_record([
            o.side.code().to_string(),
            o.id.to_string(),
            o.price.to_string(),
        ])?;
    }
    w.flush()
}

pub fn save_trades(m: &Matching, path: &Path) -> Result<(), FormatError> {
    let io_err = |source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    write_trades(m, io::BufWriter::new(file)).map_err(io_err)
}

fn open(path: &Path) -> Result<File, FormatError> {
    File::open(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn book(s: &str) -> Result<OrderBook, FormatError> {
        read_book(s.as_bytes())
    }

    #[test]
    fn header_only_is_empty_book() {
        assert!(book("side,id,price\n").unwrap().is_empty());
    }

    #[test]
    fn rows_split_by_side() {
        let b = book("side,id,price\nB,1,100\nA,2,90\n").unwrap();
        assert_eq!(b.bids(), &[Order::bid(100, 1)]);
        assert_eq!(b.asks(), &[Order::ask(90, 2)]);
    }

    #[test]
    fn duplicate_id_reported() {
        match book("side,id,price\nB,1,100\nB,1,90\n") {
            Err(FormatError::DuplicateId { side, id, line }) => {
                assert_eq!((side, id, line), (Side::Bid, 1, 3));
            }
            other => panic!("unexpected {other:?}"),
        }
        // same id on both sides is fine
        assert!(book("side,id,price\nB,1,100\nA,1,90\n").is_ok());
    }

    #[test]
    fn negative_price_reported() {
        assert!(matches!(
            book("side,id,price\nB,1,100\nA,2,-5\n"),
            Err(FormatError::NegativePrice { line: 3 })
        ));
    }

    #[test]
    fn malformed_rows_report_line() {
        for (input, want) in [
            ("side,id,price\nB,1,100\nX,2,5\n", 3),
            ("side,id,price\nB,x,100\n", 2),
            ("side,id,price\nB,1,1.5\n", 2),
            ("side,id,price\nB,1,18446744073709551616\n", 2),
            ("side,id,price\nB,1\n", 2),
            ("id,side,price\n", 1),
            ("", 1),
        ] {
            match book(input) {
                Err(FormatError::Parse { line, .. }) => assert_eq!(line, want, "{input:?}"),
                other => panic!("{input:?}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn max_price_accepted() {
        let b = book("side,id,price\nB,1,18446744073709551615\n").unwrap();
        assert_eq!(b.bids()[0].price, Price(u64::MAX));
    }

    #[test]
    fn trades_rejoin_against_book() {
        let b = book("side,id,price\nB,1,100\nA,2,90\n").unwrap();
        let t = read_trades("bid_id,ask_id,price\n1,2,95\n".as_bytes()).unwrap();
        let m = rejoin(&b, &t).unwrap();
        assert_eq!(
            m.fills(),
            &[Fill::new(Order::bid(100, 1), Order::ask(90, 2), 95)]
        );

        let t = read_trades("bid_id,ask_id,price\n1,7,95\n".as_bytes()).unwrap();
        assert!(matches!(
            rejoin(&b, &t),
            Err(FormatError::UnknownId {
                side: Side::Ask,
                id: 7,
                line: 2
            })
        ));
    }

    #[test]
    fn trade_output_is_plain_lf() {
        let m = Matching::new(vec![Fill::new(Order::bid(100, 1), Order::ask(90, 2), 95)]);
        let mut buf = Vec::new();
        write_trades(&m, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "bid_id,ask_id,price\n1,2,95\n"
        );

        let mut buf = Vec::new();
        write_trades(&Matching::empty(), &mut buf).unwrap();
        assert_eq!(buf, b"bid_id,ask_id,price\n");
    }
}
