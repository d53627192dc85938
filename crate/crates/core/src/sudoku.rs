//! Sudoku matrices as weighted sums of pairwise disjoint S-permutation matrices.
//!
//! An `n² × n²` grid over `[n²]` is a Sudoku matrix exactly when it can be
//! written `P = 1·A_1 + 2·A_2 + … + n²·A_{n²}` with the `A_s` pairwise disjoint
//! members of `Σ_{n²}`. Each Sudoku matrix therefore corresponds to `(n²)!`
//! ordered families, and the number of `n²`-cliques in the disjointness graph
//! on `Σ_{n²}` is `σ_n / (n²)!`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::census::MaskTable;
use crate::error::{Error, Result};
use crate::rng::SeededRng;
use crate::sperm::{factorial, from_perms, mask_words, ones_mask, OnesMask, SPermMatrix};

/// Number of `9 × 9` Sudoku matrices (Felgenhauer and Jarvis, 2005).
pub const SIGMA_3: &str = "6670903752021072936960";

pub fn sigma_3() -> BigUint {
    SIGMA_3.parse().expect("valid decimal constant")
}

/// An `n² × n²` grid with entries in `1..=n²`, stored row-major.
///
/// Construction checks shape and range only; [`SudokuGrid::is_valid`] checks
/// the row, column and block constraints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SudokuGrid {
    n: usize,
    cells: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    Row,
    Column,
    Block,
}

/// First broken constraint: `value` repeats inside the 1-based `index`-th row,
/// column or block (blocks counted row-major).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub index: usize,
    pub value: u32,
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let kind = match self.kind {
            ViolationKind::Row => "row",
            ViolationKind::Column => "column",
            ViolationKind::Block => "block",
        };
        write!(f, "value {} repeats in {} {}", self.value, kind, self.index)
    }
}

impl SudokuGrid {
    /// `cells` is row-major with `n⁴` entries.
    pub fn new(n: usize, cells: Vec<u32>) -> Result<Self> {
        if n == 0 || n > 15 {
            return Err(Error::InvalidOrder(n));
        }
        let side = n * n;
        if cells.len() != side * side {
            return Err(Error::Dimension {
                expected: side * side,
                found: cells.len(),
            });
        }
        let mut out = Vec::with_capacity(cells.len());
        for (i, &v) in cells.iter().enumerate() {
            if v == 0 || v as usize > side {
                return Err(Error::EntryOutOfRange {
                    row: i / side + 1,
                    col: i % side + 1,
                    value: v,
                });
            }
            out.push(v as u8);
        }
        Ok(SudokuGrid { n, cells: out })
    }

    pub fn from_rows(n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let side = n * n;
        if rows.len() != side {
            return Err(Error::Dimension {
                expected: side,
                found: rows.len(),
            });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != side) {
            return Err(Error::Dimension {
                expected: side,
                found: bad.len(),
            });
        }
        SudokuGrid::new(n, rows.concat())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn side(&self) -> usize {
        self.n * self.n
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.cells[(row - 1) * self.side() + (col - 1)] as u32
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.cells.chunks(self.side())
    }

    pub fn first_violation(&self) -> Option<Violation> {
        let (n, side) = (self.n, self.side());
        let cell = |kind, g: usize, i: usize| match kind {
            ViolationKind::Row => self.cells[g * side + i],
            ViolationKind::Column => self.cells[i * side + g],
            ViolationKind::Block => {
                let (br, bc) = (g / n, g % n);
                self.cells[(br * n + i / n) * side + bc * n + i % n]
            }
        };
        for kind in [
            ViolationKind::Row,
            ViolationKind::Column,
            ViolationKind::Block,
        ] {
            for g in 0..side {
                let mut seen = 0u64;
                for i in 0..side {
                    let v = cell(kind, g, i);
                    if seen >> v & 1 == 1 {
                        return Some(Violation {
                            kind,
                            index: g + 1,
                            value: v as u32,
                        });
                    }
                    seen |= 1 << v;
                }
            }
        }
        None
    }

    /// Every row, column and block is a permutation of `[n²]`.
    pub fn is_valid(&self) -> bool {
        self.first_violation().is_none()
    }
}

/// Pairwise disjoint S-permutation matrices of one block order, at most `n²` of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointFamily {
    n: usize,
    members: Vec<SPermMatrix>,
}

impl DisjointFamily {
    pub fn new(n: usize, members: Vec<SPermMatrix>) -> Result<Self> {
        if members.len() > n * n {
            return Err(Error::Dimension {
                expected: n * n,
                found: members.len(),
            });
        }
        if let Some(a) = members.iter().find(|a| a.n() != n) {
            return Err(Error::OrderMismatch {
                left: n,
                right: a.n(),
            });
        }
        let masks: Vec<OnesMask> = members.iter().map(ones_mask).collect();
        for i in 0..masks.len() {
            for j in i + 1..masks.len() {
                if !masks[i].is_disjoint(&masks[j])? {
                    return Err(Error::NotDisjoint {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        Ok(DisjointFamily { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[SPermMatrix] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Holds all `n²` members.
    pub fn is_complete(&self) -> bool {
        self.members.len() == self.n * self.n
    }

    /// `Σ s · A_s` with member `s` (1-based) weighted by `s`.
    pub fn recompose(&self) -> Result<SudokuGrid> {
        let weights: Vec<u32> = (1..=self.members.len() as u32).collect();
        self.recompose_with(&weights)
    }

    /// `Σ weights[i] · A_i`. Needs a complete family.
    pub fn recompose_with(&self, weights: &[u32]) -> Result<SudokuGrid> {
        let side = self.n * self.n;
        if !self.is_complete() {
            return Err(Error::Dimension {
                expected: side,
                found: self.members.len(),
            });
        }
        if weights.len() != side {
            return Err(Error::Dimension {
                expected: side,
                found: weights.len(),
            });
        }
        let mut cells = vec![0u32; side * side];
        for (a, &w) in self.members.iter().zip(weights) {
            for (r, c) in a.ones() {
                cells[(r - 1) * side + (c - 1)] = w;
            }
        }
        SudokuGrid::new(self.n, cells)
    }
}

/// Splits a Sudoku matrix into `A_1 … A_{n²}` where `A_s` marks the cells holding `s`.
pub fn decompose(grid: &SudokuGrid) -> Result<DisjointFamily> {
    if !grid.is_valid() {
        return Err(Error::InvalidGrid);
    }
    let (n, side) = (grid.n, grid.side());
    let mut positions = vec![Vec::with_capacity(side); side];
    for (i, &v) in grid.cells.iter().enumerate() {
        positions[v as usize - 1].push((i / side + 1, i % side + 1));
    }
    let members = positions
        .iter()
        .map(|ones| SPermMatrix::from_ones(n, ones))
        .collect::<Result<Vec<_>>>()?;
    Ok(DisjointFamily { n, members })
}

/// `σ_n` by exhaustive backtracking. Only `n = 2` is in reach.
pub fn count_sudoku(n: usize) -> Result<BigUint> {
    count_sudoku_with(n, |_| {})
}

/// As [`count_sudoku`], handing every grid to `visit` in row-major lexicographic order.
pub fn count_sudoku_with(n: usize, mut visit: impl FnMut(&SudokuGrid)) -> Result<BigUint> {
    if n != 2 {
        return Err(Error::Unsupported {
            what: "exhaustive Sudoku counting",
            n,
            reason: "only n = 2 is enumerated; sigma_3 ~ 6.671e21 is taken as a known constant",
        });
    }
    let side = n * n;
    let mut search = Backtrack {
        n,
        side,
        cells: vec![0; side * side],
        rows: vec![0; side],
        cols: vec![0; side],
        blocks: vec![0; side],
        count: BigUint::zero(),
    };
    search.fill(0, &mut visit);
    Ok(search.count)
}

struct Backtrack {
    n: usize,
    side: usize,
    cells: Vec<u8>,
    rows: Vec<u32>,
    cols: Vec<u32>,
    blocks: Vec<u32>,
    count: BigUint,
}

impl Backtrack {
    fn fill(&mut self, pos: usize, visit: &mut impl FnMut(&SudokuGrid)) {
        if pos == self.cells.len() {
            self.count += 1u32;
            visit(&SudokuGrid {
                n: self.n,
                cells: self.cells.clone(),
            });
            return;
        }
        let (r, c) = (pos / self.side, pos % self.side);
        let b = (r / self.n) * self.n + c / self.n;
        let used = self.rows[r] | self.cols[c] | self.blocks[b];
        for v in 1..=self.side as u8 {
            let bit = 1u32 << v;
            if used & bit != 0 {
                continue;
            }
            self.rows[r] |= bit;
            self.cols[c] |= bit;
            self.blocks[b] |= bit;
            self.cells[pos] = v;
            self.fill(pos + 1, visit);
            self.rows[r] ^= bit;
            self.cols[c] ^= bit;
            self.blocks[b] ^= bit;
        }
        self.cells[pos] = 0;
    }
}

/// Every `n²`-clique of the disjointness graph on `Σ_{n²}`, members in enumeration order.
pub fn disjoint_cliques(n: usize) -> Result<Vec<DisjointFamily>> {
    if n != 2 {
        return Err(Error::Unsupported {
            what: "clique counting",
            n,
            reason: "only the 16-vertex graph for n = 2 is searched",
        });
    }
    let all = crate::sperm::enumerate_sigma(n)?;
    let table = MaskTable::from_matrices(n, &all);
    let adj: Vec<u32> = (0..table.len())
        .map(|i| table.neighbors(i).fold(0u32, |acc, j| acc | 1 << j))
        .collect();
    let mut found = Vec::new();
    let mut stack = Vec::with_capacity(n * n);
    extend_clique(
        &adj,
        n * n,
        (1u32 << table.len()) - 1,
        &mut stack,
        &mut found,
    );
    Ok(found
        .into_iter()
        .map(|idx: Vec<usize>| DisjointFamily {
            n,
            members: idx.iter().map(|&i| all[i].clone()).collect(),
        })
        .collect())
}

// Vertices are added in increasing index order, so each clique is produced once.
fn extend_clique(
    adj: &[u32],
    target: usize,
    candidates: u32,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if stack.len() == target {
        out.push(stack.clone());
        return;
    }
    if (candidates.count_ones() as usize) < target - stack.len() {
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        stack.push(v);
        extend_clique(adj, target, rest & adj[v], stack, out);
        stack.pop();
    }
}

/// `z_n`, the number of `n²`-cliques in the disjointness graph.
pub fn count_cliques(n: usize) -> Result<BigUint> {
    Ok(BigUint::from(disjoint_cliques(n)?.len()))
}

/// `z_n = σ_n / (n²)!`, refusing inexact division.
pub fn z_from_sigma(sigma: &BigUint, n: usize) -> Result<BigUint> {
    let (q, r) = sigma.div_rem(&factorial(n * n));
    if !r.is_zero() {
        return Err(Error::NotDivisible);
    }
    Ok(q)
}

/// Randomized greedy search for `n²` mutually disjoint S-permutation matrices.
///
/// Each round starts from an empty family and draws uniform matrices (one
/// uniform permutation per `ρ_s`, then per `σ_t`, see [`crate::rng`]),
/// keeping a draw when it is disjoint from everything kept so far. A round
/// ends when the family is full or when no matrix in `Σ_{n²}` is disjoint
/// from all members, after which the next round begins. The first full family
/// is returned; if none appears within `max_restarts` extra rounds the largest
/// partial family is returned instead.
pub fn sample_family(n: usize, seed: u64, max_restarts: u32) -> Result<DisjointFamily> {
    if n == 0 || n > 3 {
        return Err(Error::Unsupported {
            what: "family sampling",
            n,
            reason: "candidate tracking enumerates all of sigma, capped at n = 3",
        });
    }
    let table = MaskTable::for_order(n)?;
    let mut rng = SeededRng::new(seed);
    let target = n * n;
    let mut best: Vec<SPermMatrix> = Vec::new();
    for _ in 0..=max_restarts {
        let mut members = Vec::with_capacity(target);
        let mut used = vec![0u64; mask_words(n)];
        let mut candidates: Vec<usize> = (0..table.len()).collect();
        while members.len() < target && !candidates.is_empty() {
            let rows = (0..n).map(|_| rng.permutation(n)).collect();
            let cols = (0..n).map(|_| rng.permutation(n)).collect();
            let a = from_perms(n, rows, cols)?;
            let mask = ones_mask(&a);
            if mask.words().iter().zip(&used).any(|(x, u)| x & u != 0) {
                continue;
            }
            used.iter_mut().zip(mask.words()).for_each(|(u, x)| *u |= x);
            candidates.retain(|&j| table.mask(j).iter().zip(&used).all(|(x, u)| x & u == 0));
            members.push(a);
        }
        if members.len() > best.len() {
            best = members;
        }
        if best.len() == target {
            break;
        }
    }
    Ok(DisjointFamily { n, members: best })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sperm::is_s_permutation_cells;
    use alloc::vec;

    fn sample_grid() -> SudokuGrid {
        SudokuGrid::from_rows(
            2,
            &[
                vec![1, 2, 3, 4],
                vec![3, 4, 1, 2],
                vec![2, 1, 4, 3],
                vec![4, 3, 2, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        assert!(sample_grid().is_valid());
        let bad = SudokuGrid::from_rows(
            2,
            &[
                vec![1, 1, 2, 3],
                vec![3, 4, 1, 2],
                vec![2, 1, 4, 3],
                vec![4, 3, 2, 1],
            ],
        )
        .unwrap();
        assert!(!bad.is_valid());
        assert_eq!(
            bad.first_violation(),
            Some(Violation {
                kind: ViolationKind::Row,
                index: 1,
                value: 1
            })
        );
        // rows fine, columns broken
        let cols = SudokuGrid::from_rows(
            2,
            &[
                vec![1, 2, 3, 4],
                vec![3, 4, 1, 2],
                vec![1, 2, 3, 4],
                vec![3, 4, 1, 2],
            ],
        )
        .unwrap();
        assert_eq!(cols.first_violation().unwrap().kind, ViolationKind::Column);
        // rows and columns are Latin, blocks are not
        let blocks = SudokuGrid::from_rows(
            2,
            &[
                vec![1, 2, 3, 4],
                vec![2, 3, 4, 1],
                vec![3, 4, 1, 2],
                vec![4, 1, 2, 3],
            ],
        )
        .unwrap();
        assert_eq!(blocks.first_violation().unwrap().kind, ViolationKind::Block);
    }

    #[test]
    fn shape_and_range_errors() {
        assert_eq!(
            SudokuGrid::new(2, vec![1; 15]),
            Err(Error::Dimension {
                expected: 16,
                found: 15
            })
        );
        let mut cells = vec![1u32; 16];
        cells[5] = 5;
        assert_eq!(
            SudokuGrid::new(2, cells),
            Err(Error::EntryOutOfRange {
                row: 2,
                col: 2,
                value: 5
            })
        );
        assert!(SudokuGrid::from_rows(2, &[vec![1, 2, 3, 4]]).is_err());
        assert!(decompose(&SudokuGrid::new(2, vec![1; 16]).unwrap()).is_err());
    }

    #[test]
    fn decompose_round_trip() {
        let g = sample_grid();
        let fam = decompose(&g).unwrap();
        assert!(fam.is_complete());
        for a in fam.members() {
            assert!(is_s_permutation_cells(2, &a.to_dense()));
        }
        assert_eq!(fam.recompose().unwrap(), g);
        // the masks partition all 16 cells
        let mut cover = 0u64;
        for a in fam.members() {
            let w = ones_mask(a).words()[0];
            assert_eq!(cover & w, 0);
            cover |= w;
        }
        assert_eq!(cover, 0xffff);
    }

    #[test]
    fn counts_order_two_grids() {
        let mut seen = Vec::new();
        let total = count_sudoku_with(2, |g| seen.push(g.clone())).unwrap();
        assert_eq!(total, BigUint::from(288u32));
        assert_eq!(seen.len(), 288);
        assert!(seen.iter().all(SudokuGrid::is_valid));
        assert_eq!(seen.iter().filter(|g| g.get(1, 1) == 1).count(), 72);
        assert!(matches!(
            count_sudoku(3),
            Err(Error::Unsupported { n: 3, .. })
        ));
    }

    #[test]
    fn cliques_match_sudoku_count() {
        let cliques = disjoint_cliques(2).unwrap();
        assert_eq!(cliques.len(), 12);
        assert_eq!(
            count_cliques(2).unwrap() * factorial(4),
            BigUint::from(288u32)
        );
        for fam in &cliques {
            assert!(fam.recompose().unwrap().is_valid());
        }
        assert!(count_cliques(3).is_err());
    }

    #[test]
    fn z_arithmetic() {
        assert_eq!(
            z_from_sigma(&BigUint::from(288u32), 2).unwrap(),
            BigUint::from(12u32)
        );
        assert_eq!(
            z_from_sigma(&sigma_3(), 3).unwrap(),
            "18383222420692992".parse::<BigUint>().unwrap()
        );
        assert_eq!(z_from_sigma(&factorial(9), 3).unwrap(), BigUint::from(1u32));
        assert_eq!(
            z_from_sigma(&BigUint::from(289u32), 2),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn sampled_families() {
        let fam = sample_family(2, 1, 1000).unwrap();
        assert!(fam.is_complete());
        assert!(fam.recompose().unwrap().is_valid());
        assert_eq!(sample_family(2, 1, 1000).unwrap(), fam);
        let fam3 = sample_family(3, 1, 1000).unwrap();
        assert_eq!(fam3.len(), 9);
        assert!(fam3.recompose().unwrap().is_valid());
        assert_eq!(sample_family(1, 0, 0).unwrap().len(), 1);
        assert!(sample_family(4, 0, 0).is_err());
    }

    #[test]
    fn family_construction_checks_disjointness() {
        let fam = decompose(&sample_grid()).unwrap();
        let mut members = fam.members().to_vec();
        members[1] = members[0].clone();
        assert_eq!(
            DisjointFamily::new(2, members),
            Err(Error::NotDisjoint {
                first: 0,
                second: 1
            })
        );
        let partial = DisjointFamily::new(2, fam.members()[..2].to_vec()).unwrap();
        assert!(!partial.is_complete());
        assert!(partial.recompose().is_err());
    }
}
