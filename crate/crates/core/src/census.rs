//! Brute-force pair scan over all of `Σ_{n²}`.
//!
//! Masks sit in one flat word array, `stride` words per matrix. The scan
//! functions take a range of outer indices so a caller can split the work
//! across threads and add the partial counts afterwards.

use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::sperm::{enumerate_sigma_capped, mask_words, ones_mask, SPermMatrix};

/// Largest block order the census supports.
pub const CENSUS_CAP: usize = 3;

#[derive(Clone, Debug)]
pub struct MaskTable {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

impl MaskTable {
    /// Masks of every matrix in `Σ_{n²}`, in enumeration order.
    pub fn for_order(n: usize) -> Result<MaskTable> {
        MaskTable::for_order_capped(n, CENSUS_CAP)
    }

    /// As [`MaskTable::for_order`] with a caller-chosen cap on `n`.
    pub fn for_order_capped(n: usize, cap: usize) -> Result<MaskTable> {
        if n > cap {
            return Err(Error::SizeLimit {
                what: "pair census",
                n,
                cap,
                cardinality: crate::sperm::sigma_size(n),
            });
        }
        Ok(MaskTable::from_matrices(
            n,
            &enumerate_sigma_capped(n, cap)?,
        ))
    }

    /// Panics if a matrix has a different block order.
    pub fn from_matrices(n: usize, matrices: &[SPermMatrix]) -> MaskTable {
        let stride = mask_words(n);
        let mut words = Vec::with_capacity(stride * matrices.len());
        for a in matrices {
            assert_eq!(a.n(), n, "mixed block orders");
            words.extend_from_slice(ones_mask(a).words());
        }
        MaskTable { n, stride, words }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len() / self.stride
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn mask(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    pub fn disjoint(&self, i: usize, j: usize) -> bool {
        self.mask(i)
            .iter()
            .zip(self.mask(j))
            .all(|(a, b)| a & b == 0)
    }

    /// Disjoint pairs `(i, j)` with `i` in `rows` and `j > i`.
    pub fn count_upper(&self, rows: Range<usize>) -> u64 {
        match self.stride {
            1 => upper::<1>(&self.words, rows),
            2 => upper::<2>(&self.words, rows),
            4 => upper::<4>(&self.words, rows),
            _ => rows
                .map(|i| (i + 1..self.len()).filter(|&j| self.disjoint(i, j)).count() as u64)
                .sum(),
        }
    }

    /// Disjoint ordered pairs `(i, j)` with `i` in `rows` and any `j`.
    ///
    /// A matrix is never disjoint from itself, so `j = i` needs no special case.
    pub fn count_ordered(&self, rows: Range<usize>) -> u64 {
        match self.stride {
            1 => ordered::<1>(&self.words, rows),
            2 => ordered::<2>(&self.words, rows),
            4 => ordered::<4>(&self.words, rows),
            _ => rows
                .map(|i| (0..self.len()).filter(|&j| self.disjoint(i, j)).count() as u64)
                .sum(),
        }
    }

    /// For `i` in `rows`, adds one to `degrees[i]` and `degrees[j]` for every
    /// disjoint pair with `j > i`. Returns the number of pairs found.
    pub fn accumulate_degrees(&self, rows: Range<usize>, degrees: &mut [u64]) -> u64 {
        assert_eq!(degrees.len(), self.len());
        let mut pairs = 0;
        for i in rows {
            for j in i + 1..self.len() {
                if self.disjoint(i, j) {
                    degrees[i] += 1;
                    degrees[j] += 1;
                    pairs += 1;
                }
            }
        }
        pairs
    }

    /// Indices of all matrices disjoint from matrix `i`.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| self.disjoint(i, j))
    }
}

#[inline]
fn load<const W: usize>(words: &[u64], i: usize) -> [u64; W] {
    words[i * W..(i + 1) * W].try_into().unwrap()
}

#[inline]
fn disjoint_count<const W: usize>(a: [u64; W], tail: &[u64]) -> u64 {
    tail.chunks_exact(W)
        .filter(|b| {
            let mut acc = 0;
            for w in 0..W {
                acc |= a[w] & b[w];
            }
            acc == 0
        })
        .count() as u64
}

fn upper<const W: usize>(words: &[u64], rows: Range<usize>) -> u64 {
    rows.map(|i| disjoint_count::<W>(load::<W>(words, i), &words[(i + 1) * W..]))
        .sum()
}

fn ordered<const W: usize>(words: &[u64], rows: Range<usize>) -> u64 {
    rows.map(|i| disjoint_count::<W>(load::<W>(words, i), words))
        .sum()
}

/// Splits `0..len` into blocks of `block` outer indices and deals them to
/// `workers` round-robin, which evens out the triangular `j > i` workload.
pub fn worker_blocks(
    len: usize,
    block: usize,
    worker: usize,
    workers: usize,
) -> impl Iterator<Item = Range<usize>> {
    let block = block.max(1);
    (0..len.div_ceil(block))
        .skip(worker)
        .step_by(workers.max(1))
        .map(move |b| b * block..((b + 1) * block).min(len))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sperm::{enumerate_sigma, is_disjoint};

    #[test]
    fn order_two_counts() {
        let t = MaskTable::for_order(2).unwrap();
        assert_eq!(t.len(), 16);
        assert_eq!(t.count_upper(0..16), 56);
        assert_eq!(t.count_ordered(0..16), 112);
        let mut deg = alloc::vec![0; 16];
        assert_eq!(t.accumulate_degrees(0..16, &mut deg), 56);
        assert!(deg.iter().all(|&d| d == 7));
    }

    #[test]
    fn order_one_has_no_pairs() {
        let t = MaskTable::for_order(1).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.count_upper(0..1), 0);
        assert_eq!(t.count_ordered(0..1), 0);
    }

    #[test]
    fn table_agrees_with_mask_predicate() {
        let all = enumerate_sigma(2).unwrap();
        let t = MaskTable::from_matrices(2, &all);
        for i in 0..all.len() {
            for j in 0..all.len() {
                let expect = is_disjoint(&ones_mask(&all[i]), &ones_mask(&all[j])).unwrap();
                assert_eq!(t.disjoint(i, j), expect);
            }
        }
    }

    #[test]
    fn blocks_cover_everything_once() {
        for workers in 1..5 {
            let mut seen = alloc::vec![0u8; 103];
            for w in 0..workers {
                for r in worker_blocks(103, 10, w, workers) {
                    r.for_each(|i| seen[i] += 1);
                }
            }
            assert!(seen.iter().all(|&s| s == 1));
        }
    }

    #[test]
    fn split_ranges_sum_to_whole() {
        let t = MaskTable::for_order(2).unwrap();
        let parts: u64 = (0..3)
            .flat_map(|w| worker_blocks(16, 3, w, 3))
            .map(|r| t.count_upper(r))
            .sum();
        assert_eq!(parts, 56);
    }

    #[test]
    fn refuses_order_four() {
        assert!(matches!(
            MaskTable::for_order(4),
            Err(Error::SizeLimit { n: 4, .. })
        ));
    }
}
