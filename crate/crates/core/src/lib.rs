//! Exact counting of disjoint pairs of S-permutation matrices.
//!
//! An S-permutation matrix of order `n²` is an `n² × n²` permutation matrix
//! whose `n × n` blocks each hold exactly one 1. This crate enumerates those
//! matrices, builds the catalog of bipartite graphs on `n + n` vertices up to
//! independent relabeling of each side, and evaluates the alternating-sum
//! formula that counts disjoint pairs in exact rational arithmetic. A
//! brute-force pair scan over bit masks provides an independent check, and a
//! small Sudoku layer ties everything back to Sudoku matrices.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bigraph;
pub mod census;
mod error;
pub mod formula;
pub mod perm;
pub mod rational;
pub mod rng;
pub mod sperm;
pub mod sudoku;

pub use bigraph::{
    automorphism_count, canonicalize, enumerate_catalog, profile, Bigraph, CanonicalCode,
    CatalogEntry, GraphCatalog, GraphProfile, CATALOG_CAP,
};
pub use census::MaskTable;
pub use error::{Error, PermSide, Result};
pub use formula::{
    count_ordered, count_ordered_with, count_unordered, count_unordered_with, omega,
    omega_automorphisms, omega_full, theta, theta_table, theta_table_with, theta_with,
    FormulaTerms, ThetaTable, Weighting,
};
pub use perm::Perm;
pub use rational::Rational;
pub use sperm::{
    build_matrix, enumerate_sigma, enumerate_sigma_capped, is_disjoint, is_s_permutation_cells,
    ones_mask, sigma_size, OnesMask, SPermMatrix, DEFAULT_ENUMERATION_CAP,
};
pub use sudoku::{
    count_cliques, count_sudoku, count_sudoku_with, decompose, disjoint_cliques, sample_family,
    sigma_3, z_from_sigma, DisjointFamily, SudokuGrid, Violation, ViolationKind, SIGMA_3,
};
