use alloc::string::String;
use core::fmt;

use num_bigint::BigUint;

pub type Result<T> = core::result::Result<T, Error>;

/// Which half of an S-permutation parameter tuple a permutation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermSide {
    /// One of the block-row permutations.
    Row,
    /// One of the block-column permutations.
    Col,
}

impl fmt::Display for PermSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermSide::Row => f.write_str("row"),
            PermSide::Col => f.write_str("column"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Block order or side size is zero or otherwise unusable.
    InvalidOrder(usize),
    /// Wrong number of permutations supplied for the block order.
    PermCount { expected: usize, found: usize },
    /// The permutation at `index` (0-based within its side) is not a bijection on `1..=n`.
    InvalidPermutation { side: PermSide, index: usize },
    /// Two objects built for different block orders were combined.
    OrderMismatch { left: usize, right: usize },
    /// A request exceeds a configured size cap.
    SizeLimit {
        what: &'static str,
        n: usize,
        cap: usize,
        cardinality: BigUint,
    },
    /// An operation that only exists for certain block orders.
    Unsupported {
        what: &'static str,
        n: usize,
        reason: &'static str,
    },
    /// Edge count outside `1..=n²`.
    EdgeCountOutOfRange { k: usize, n: usize },
    /// Grid dimensions do not match `n² × n²`.
    Dimension { expected: usize, found: usize },
    /// Grid entry outside `1..=n²`, at 1-based `(row, col)`.
    EntryOutOfRange { row: usize, col: usize, value: u32 },
    /// Cells do not form an S-permutation matrix.
    NotSPermutation,
    /// Family members intersect.
    NotDisjoint { first: usize, second: usize },
    /// The grid breaks a row, column or block constraint.
    InvalidGrid,
    /// A value that must divide exactly did not.
    NotDivisible,
    /// Arithmetic invariant broken. Always a bug, never bad input.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrder(n) => write!(f, "invalid block order {n}"),
            Error::PermCount { expected, found } => {
                write!(f, "expected {expected} permutations, found {found}")
            }
            Error::InvalidPermutation { side, index } => {
                write!(f, "{side} permutation #{} is not a permutation", index + 1)
            }
            Error::OrderMismatch { left, right } => {
                write!(f, "block order mismatch: {left} vs {right}")
            }
            Error::SizeLimit {
                what,
                n,
                cap,
                cardinality,
            } => write!(
                f,
                "{what} for n={n} exceeds the cap n<={cap} (would be {cardinality} items)"
            ),
            Error::Unsupported { what, n, reason } => {
                write!(f, "{what} is not supported for n={n}: {reason}")
            }
            Error::EdgeCountOutOfRange { k, n } => {
                write!(f, "edge count {k} outside 1..={}", n * n)
            }
            Error::Dimension { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Error::EntryOutOfRange { row, col, value } => {
                write!(f, "entry {value} at ({row}, {col}) is out of range")
            }
            Error::NotSPermutation => f.write_str("cells do not form an S-permutation matrix"),
            Error::NotDisjoint { first, second } => {
                write!(f, "members {first} and {second} are not disjoint")
            }
            Error::InvalidGrid => f.write_str("grid is not a Sudoku matrix"),
            Error::NotDivisible => f.write_str("value is not exactly divisible"),
            Error::Inconsistent(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
