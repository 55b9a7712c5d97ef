//! Exact-arithmetic combinatorics of the rational Catalan dictionary:
//! simultaneous core partitions, flush abaci, affine permutations,
//! rational Dyck paths, crystallographic root systems, and the bijections
//! and statistics connecting them.
//!
//! All values are immutable after construction and every operation is a
//! pure function over exact integers; nothing here uses floating point.

pub mod abacus;
pub mod affine;
pub mod dyck;
pub mod partition;
pub mod poly;
pub mod roots;
pub mod tableau;
pub mod verify;

mod parse;

pub use abacus::Abacus;
pub use affine::AffinePermutation;
pub use dyck::RationalDyckPath;
pub use partition::{HookMultiset, Partition};
pub use poly::QTPolynomial;
pub use roots::{AffineRoot, AffineWeylElement, RootSystem, SystemType};
pub use tableau::StaircaseTableau;
pub use verify::{SuiteKind, SuiteParams, SuiteReport};

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing (violation at index {index})")]
    InvalidPartition { index: usize },
    #[error("cell ({i},{j}) lies outside the diagram")]
    CellOutOfDiagram { i: usize, j: usize },
    #[error("partition is not a {n}-core")]
    NotCore { n: u64 },
    #[error("{n} and {p} are not coprime")]
    NotCoprime { n: u64, p: u64 },
    #[error("invalid window: {reason}")]
    InvalidWindow { reason: String },
    #[error("period mismatch: {left} vs {right}")]
    PeriodMismatch { left: usize, right: usize },
    #[error("affine permutation is not dominant")]
    NotDominant,
    #[error("element is not {p}-stable")]
    NotStable { p: u64 },
    #[error("abacus is not balanced")]
    NotBalanced,
    #[error("abacus is not normalised")]
    NotNormalised,
    #[error("abacus is not {n}-flush")]
    NotFlush { n: u64 },
    #[error("invalid path word: {reason}")]
    InvalidWord { reason: String },
    #[error("unsupported root system: {0}")]
    UnsupportedSystem(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("invalid suite parameters: {0}")]
    InvalidParams(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Exact binomial coefficient; panics on overflow rather than wrapping.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128).expect("binomial overflow") / (i as u128 + 1);
    }
    acc
}

/// Number of rational Dyck paths binom(n+p, n)/(n+p) for coprime n, p.
pub fn rational_catalan(n: u64, p: u64) -> u128 {
    binomial(n + p, n) / (n + p) as u128
}
