//! S-permutation matrices and their bit-mask representation.
//!
//! A matrix in `Σ_{n²}` is parameterized by `n` block-row permutations
//! `ρ_1 … ρ_n` and `n` block-column permutations `σ_1 … σ_n`: block `(s, t)`
//! holds its single 1 at within-block row `ρ_s(t)` and within-block column
//! `σ_t(s)`. Every such tuple gives a distinct matrix and every matrix arises
//! this way, so `|Σ_{n²}| = (n!)^{2n}`.
//!
//! Coordinates in the public API are 1-based. Mask bits are 0-based and
//! row-major: the cell at global `(row, col)` is bit `(row-1)·n² + (col-1)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, PermSide, Result};
use crate::perm::{all_perms, Perm};

/// Largest block order `enumerate_sigma` accepts without an explicit override.
pub const DEFAULT_ENUMERATION_CAP: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SPermMatrix {
    n: usize,
    row_perms: Vec<Perm>,
    col_perms: Vec<Perm>,
}

impl SPermMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `ρ_1 … ρ_n`.
    pub fn row_perms(&self) -> &[Perm] {
        &self.row_perms
    }

    /// `σ_1 … σ_n`.
    pub fn col_perms(&self) -> &[Perm] {
        &self.col_perms
    }

    /// Global 1-based position of the 1 inside block `(s, t)`.
    #[inline]
    pub fn block_one(&self, s: usize, t: usize) -> (usize, usize) {
        let n = self.n;
        let row = (s - 1) * n + self.row_perms[s - 1].apply(t);
        let col = (t - 1) * n + self.col_perms[t - 1].apply(s);
        (row, col)
    }

    /// The `n²` positions holding a 1, block by block in row-major block order.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (1..=n).flat_map(move |s| (1..=n).map(move |t| self.block_one(s, t)))
    }

    /// Entry `a_{row,col}`, 1-based.
    pub fn entry(&self, row: usize, col: usize) -> bool {
        let n = self.n;
        let (s, t) = ((row - 1) / n + 1, (col - 1) / n + 1);
        self.block_one(s, t) == (row, col)
    }

    /// Dense row-major 0/1 matrix of side `n²`.
    pub fn to_dense(&self) -> Vec<bool> {
        let side = self.n * self.n;
        let mut cells = vec![false; side * side];
        for (r, c) in self.ones() {
            cells[(r - 1) * side + (c - 1)] = true;
        }
        cells
    }

    /// The transpose, which swaps the roles of the two permutation families.
    pub fn transpose(&self) -> SPermMatrix {
        SPermMatrix {
            n: self.n,
            row_perms: self.col_perms.clone(),
            col_perms: self.row_perms.clone(),
        }
    }

    /// Recovers the parameterization from the set of 1-positions.
    pub fn from_ones(n: usize, ones: &[(usize, usize)]) -> Result<SPermMatrix> {
        if n == 0 {
            return Err(Error::InvalidOrder(n));
        }
        let side = n * n;
        if ones.len() != side {
            return Err(Error::NotSPermutation);
        }
        // within[(s-1)*n + (t-1)] = within-block (row, col) of the block's 1
        let mut within = vec![(0u8, 0u8); side];
        for &(r, c) in ones {
            if r == 0 || c == 0 || r > side || c > side {
                return Err(Error::NotSPermutation);
            }
            let (s, t) = ((r - 1) / n, (c - 1) / n);
            let slot = &mut within[s * n + t];
            if slot.0 != 0 {
                return Err(Error::NotSPermutation);
            }
            *slot = (((r - 1) % n + 1) as u8, ((c - 1) % n + 1) as u8);
        }
        let row_perms = (0..n)
            .map(|s| Perm::new((0..n).map(|t| within[s * n + t].0).collect()))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::NotSPermutation)?;
        let col_perms = (0..n)
            .map(|t| Perm::new((0..n).map(|s| within[s * n + t].1).collect()))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::NotSPermutation)?;
        Ok(SPermMatrix {
            n,
            row_perms,
            col_perms,
        })
    }
}

/// Builds the matrix for `(ρ_1 … ρ_n, σ_1 … σ_n)`, each given as a 1-based word.
pub fn build_matrix(n: usize, row_perms: &[&[u8]], col_perms: &[&[u8]]) -> Result<SPermMatrix> {
    if n == 0 || n > u8::MAX as usize {
        return Err(Error::InvalidOrder(n));
    }
    for list in [row_perms, col_perms] {
        if list.len() != n {
            return Err(Error::PermCount {
                expected: n,
                found: list.len(),
            });
        }
    }
    let check = |side, list: &[&[u8]]| -> Result<Vec<Perm>> {
        list.iter()
            .enumerate()
            .map(|(index, w)| {
                Perm::new(w.to_vec())
                    .filter(|p| p.len() == n)
                    .ok_or(Error::InvalidPermutation { side, index })
            })
            .collect()
    };
    Ok(SPermMatrix {
        n,
        row_perms: check(PermSide::Row, row_perms)?,
        col_perms: check(PermSide::Col, col_perms)?,
    })
}

/// Like [`build_matrix`] for already validated permutations.
pub fn from_perms(n: usize, row_perms: Vec<Perm>, col_perms: Vec<Perm>) -> Result<SPermMatrix> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    for list in [&row_perms, &col_perms] {
        if list.len() != n {
            return Err(Error::PermCount {
                expected: n,
                found: list.len(),
            });
        }
    }
    for (side, list) in [(PermSide::Row, &row_perms), (PermSide::Col, &col_perms)] {
        if let Some(index) = list.iter().position(|p| p.len() != n) {
            return Err(Error::InvalidPermutation { side, index });
        }
    }
    Ok(SPermMatrix {
        n,
        row_perms,
        col_perms,
    })
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `|Σ_{n²}| = (n!)^{2n}`.
pub fn sigma_size(n: usize) -> BigUint {
    factorial(n).pow(2 * n as u32)
}

/// All of `Σ_{n²}` for `n <= DEFAULT_ENUMERATION_CAP`.
pub fn enumerate_sigma(n: usize) -> Result<Vec<SPermMatrix>> {
    enumerate_sigma_capped(n, DEFAULT_ENUMERATION_CAP)
}

/// All of `Σ_{n²}`, lexicographic in the concatenated word `ρ_1 … ρ_n σ_1 … σ_n`.
pub fn enumerate_sigma_capped(n: usize, cap: usize) -> Result<Vec<SPermMatrix>> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    if n > cap {
        return Err(Error::SizeLimit {
            what: "enumerating S-permutation matrices",
            n,
            cap,
            cardinality: sigma_size(n),
        });
    }
    let perms = all_perms(n);
    let slots = 2 * n;
    let total = perms.len().pow(slots as u32);
    let mut digits = vec![0usize; slots];
    let mut out = Vec::with_capacity(total);
    loop {
        out.push(SPermMatrix {
            n,
            row_perms: digits[..n].iter().map(|&d| perms[d].clone()).collect(),
            col_perms: digits[n..].iter().map(|&d| perms[d].clone()).collect(),
        });
        // odometer, last slot fastest
        let mut pos = slots;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < perms.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Number of 64-bit words in a mask for block order `n`.
#[inline]
pub fn mask_words(n: usize) -> usize {
    (n.pow(4)).div_ceil(64)
}

/// The `n⁴`-bit occupancy vector of an S-permutation matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OnesMask {
    n: usize,
    words: Vec<u64>,
}

impl OnesMask {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Whether 0-based bit `index` is set.
    pub fn bit(&self, index: usize) -> bool {
        self.words[index / 64] >> (index % 64) & 1 == 1
    }

    /// Set bit indices in increasing order.
    pub fn set_bits(&self) -> impl Iterator<Item = usize> + '_ {
        let limit = self.n.pow(4);
        (0..limit).filter(move |&i| self.bit(i))
    }

    pub fn is_disjoint(&self, other: &OnesMask) -> Result<bool> {
        is_disjoint(self, other)
    }
}

pub fn ones_mask(a: &SPermMatrix) -> OnesMask {
    let side = a.n * a.n;
    let mut words = vec![0u64; mask_words(a.n)];
    for (r, c) in a.ones() {
        let bit = (r - 1) * side + (c - 1);
        words[bit / 64] |= 1 << (bit % 64);
    }
    OnesMask { n: a.n, words }
}

/// True iff no position holds a 1 in both matrices.
pub fn is_disjoint(a: &OnesMask, b: &OnesMask) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::OrderMismatch {
            left: a.n,
            right: b.n,
        });
    }
    Ok(a.words.iter().zip(&b.words).all(|(x, y)| x & y == 0))
}

/// Cell-level check that a dense row-major `n² × n²` 0/1 matrix has exactly
/// one 1 in every row, every column and every `n × n` block.
///
/// Looks only at the cells, never at a parameterization.
pub fn is_s_permutation_cells(n: usize, cells: &[bool]) -> bool {
    let side = n * n;
    if n == 0 || cells.len() != side * side {
        return false;
    }
    let mut rows = vec![0usize; side];
    let mut cols = vec![0usize; side];
    let mut blocks = vec![0usize; side];
    for r in 0..side {
        for c in 0..side {
            if cells[r * side + c] {
                rows[r] += 1;
                cols[c] += 1;
                blocks[(r / n) * n + c / n] += 1;
            }
        }
    }
    [rows, cols, blocks]
        .iter()
        .all(|v| v.iter().all(|&x| x == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn id2() -> SPermMatrix {
        build_matrix(2, &[&[1, 2], &[1, 2]], &[&[1, 2], &[1, 2]]).unwrap()
    }

    #[test]
    fn identity_parameters_place_ones_by_block_rule() {
        let a = id2();
        let mut ones: Vec<_> = a.ones().collect();
        ones.sort();
        assert_eq!(ones, vec![(1, 1), (2, 3), (3, 2), (4, 4)]);
        let bits: Vec<_> = ones_mask(&a).set_bits().collect();
        assert_eq!(bits, vec![0, 6, 9, 15]);
    }

    #[test]
    fn order_one_is_the_unit_matrix() {
        let a = build_matrix(1, &[&[1]], &[&[1]]).unwrap();
        assert_eq!(a.to_dense(), vec![true]);
        let m = ones_mask(&a);
        assert_eq!(m.count_ones(), 1);
        assert!(m.bit(0));
        assert_eq!(enumerate_sigma(1).unwrap().len(), 1);
    }

    #[test]
    fn all_sixteen_tuples_are_distinct_valid_matrices() {
        let perms = [[1u8, 2], [2, 1]];
        let mut seen = HashSet::new();
        for code in 0..16u32 {
            let p = |bit: u32| &perms[(code >> bit & 1) as usize][..];
            let a = build_matrix(2, &[p(0), p(1)], &[p(2), p(3)]).unwrap();
            assert!(is_s_permutation_cells(2, &a.to_dense()));
            assert!(seen.insert(a.to_dense()));
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn rejects_bad_permutations_with_index() {
        let err = build_matrix(2, &[&[1, 2], &[1, 1]], &[&[1, 2], &[1, 2]]).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidPermutation {
                side: PermSide::Row,
                index: 1
            }
        );
        let err = build_matrix(2, &[&[1, 2], &[2, 1]], &[&[3, 1], &[1, 2]]).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidPermutation {
                side: PermSide::Col,
                index: 0
            }
        );
        let err = build_matrix(2, &[&[1, 2], &[2, 1]], &[&[1, 2, 3], &[1, 2]]).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidPermutation {
                side: PermSide::Col,
                index: 0
            }
        );
        let err = build_matrix(2, &[&[1, 2]], &[&[1, 2], &[1, 2]]).unwrap_err();
        assert_eq!(
            err,
            Error::PermCount {
                expected: 2,
                found: 1
            }
        );
        assert_eq!(
            build_matrix(0, &[], &[]).unwrap_err(),
            Error::InvalidOrder(0)
        );
    }

    #[test]
    fn sigma_sizes() {
        assert_eq!(sigma_size(1), BigUint::from(1u32));
        assert_eq!(sigma_size(2), BigUint::from(16u32));
        assert_eq!(sigma_size(3), BigUint::from(46656u32));
        assert_eq!(sigma_size(4), BigUint::from(110_075_314_176u64));
    }

    #[test]
    fn enumeration_cap_reports_cardinality() {
        match enumerate_sigma(4).unwrap_err() {
            Error::SizeLimit {
                n: 4,
                cap: 3,
                cardinality,
                ..
            } => {
                assert_eq!(cardinality, sigma_size(4))
            }
            e => panic!("unexpected {e:?}"),
        }
        assert!(enumerate_sigma_capped(2, 1).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all = enumerate_sigma(2).unwrap();
        let key = |a: &SPermMatrix| {
            a.row_perms()
                .iter()
                .chain(a.col_perms())
                .flat_map(|p| p.as_slice().to_vec())
                .collect::<Vec<_>>()
        };
        assert!(all.windows(2).all(|w| key(&w[0]) < key(&w[1])));
    }

    #[test]
    fn identity_versus_all_transpositions() {
        let a = id2();
        let b = build_matrix(2, &[&[2, 1], &[2, 1]], &[&[2, 1], &[2, 1]]).unwrap();
        // b: block(1,1) at (2,2), block(1,2) at (1,4), block(2,1) at (4,1), block(2,2) at (3,3)
        let mut ones: Vec<_> = b.ones().collect();
        ones.sort();
        assert_eq!(ones, vec![(1, 4), (2, 2), (3, 3), (4, 1)]);
        assert!(is_disjoint(&ones_mask(&a), &ones_mask(&b)).unwrap());
    }

    #[test]
    fn mismatched_orders_are_an_error() {
        let a = ones_mask(&id2());
        let b = ones_mask(&enumerate_sigma(1).unwrap()[0]);
        assert_eq!(
            is_disjoint(&a, &b),
            Err(Error::OrderMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn from_ones_inverts_ones() {
        for a in enumerate_sigma(2).unwrap() {
            let ones: Vec<_> = a.ones().collect();
            assert_eq!(SPermMatrix::from_ones(2, &ones).unwrap(), a);
            let t = a.transpose();
            assert!(is_s_permutation_cells(2, &t.to_dense()));
            let side = 4;
            let dense = a.to_dense();
            let tdense = t.to_dense();
            for r in 0..side {
                for c in 0..side {
                    assert_eq!(dense[r * side + c], tdense[c * side + r]);
                    assert_eq!(a.entry(r + 1, c + 1), dense[r * side + c]);
                }
            }
        }
        assert_eq!(
            SPermMatrix::from_ones(2, &[(1, 1), (1, 3), (3, 2), (4, 4)]),
            Err(Error::NotSPermutation)
        );
    }

    #[test]
    fn cell_validator_rejects_broken_matrices() {
        let mut cells = id2().to_dense();
        assert!(is_s_permutation_cells(2, &cells));
        cells[1] = true;
        assert!(!is_s_permutation_cells(2, &cells));
        // ordinary permutation matrix with two ones in block (1,1)
        let mut perm = vec![false; 16];
        for i in 0..4 {
            perm[i * 4 + i] = true;
        }
        assert!(!is_s_permutation_cells(2, &perm));
    }
}
