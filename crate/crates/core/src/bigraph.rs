//! Bipartite graphs with `n` row vertices and `n` column vertices, their
//! canonical forms up to independent relabeling of each side, and the
//! per-graph degree and neighborhood-class profiles.
//!
//! The two sides are never exchanged: a graph and its mirror image are
//! different catalog entries unless some relabeling maps one onto the other.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::perm::{all_perms, Perm};

/// Largest side size a [`Bigraph`] can hold (the biadjacency matrix packs into 64 bits).
pub const MAX_SIDE: usize = 8;

/// Largest side size for which [`enumerate_catalog`] runs.
pub const CATALOG_CAP: usize = 4;

/// A bipartite graph `⟨R, C, E⟩` with `|R| = |C| = n`, as an `n × n`
/// biadjacency bit matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bigraph {
    n: usize,
    // rows[r] has bit (n-1-c) set iff edge (r, c); column 0 is the high bit
    rows: Vec<u8>,
}

impl Bigraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_SIDE {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Bigraph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Bigraph::empty(n)?;
        let full = full_row(n);
        g.rows.iter_mut().for_each(|r| *r = full);
        Ok(g)
    }

    /// Edges are 1-based `(row, col)` pairs; duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Bigraph::empty(n)?;
        for &(r, c) in edges {
            if r == 0 || c == 0 || r > n || c > n {
                return Err(Error::InvalidOrder(n));
            }
            g.rows[r - 1] |= 1 << (n - c);
        }
        Ok(g)
    }

    /// Inverse of [`Bigraph::code`].
    pub fn from_code(n: usize, code: u64) -> Result<Self> {
        let mut g = Bigraph::empty(n)?;
        if n * n < 64 && code >> (n * n) != 0 {
            return Err(Error::InvalidOrder(n));
        }
        for r in 0..n {
            g.rows[r] = ((code >> (n * (n - 1 - r))) as u8) & full_row(n);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Biadjacency matrix read row-major as an `n²`-bit string, first cell
    /// most significant, so integer order equals lexicographic order.
    pub fn code(&self) -> u64 {
        code_of(self.n, &self.rows)
    }

    pub fn has_edge(&self, r: usize, c: usize) -> bool {
        self.rows[r - 1] >> (self.n - c) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// 1-based edges in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (1..=n).flat_map(move |r| {
            (1..=n)
                .filter(move |&c| self.has_edge(r, c))
                .map(move |c| (r, c))
        })
    }

    pub fn row_degree(&self, r: usize) -> usize {
        self.rows[r - 1].count_ones() as usize
    }

    pub fn col_degree(&self, c: usize) -> usize {
        self.col_neighbors(c).count_ones() as usize
    }

    /// `N(r)` for row vertex `r`, as a column bit set (column 1 is the high bit).
    pub fn row_neighbors(&self, r: usize) -> u8 {
        self.rows[r - 1]
    }

    /// `N(c)` for column vertex `c`, as a row bit set (row 1 is the high bit).
    pub fn col_neighbors(&self, c: usize) -> u8 {
        let n = self.n;
        (0..n).fold(0u8, |acc, r| {
            acc | ((self.rows[r] >> (n - c) & 1) << (n - 1 - r))
        })
    }

    /// The graph with every edge `(r, c)` moved to `(π_R(r), π_C(c))`.
    pub fn relabel(&self, row_perm: &Perm, col_perm: &Perm) -> Bigraph {
        let n = self.n;
        let mut rows = vec![0u8; n];
        for (r, c) in self.edges() {
            rows[row_perm.apply(r) - 1] |= 1 << (n - col_perm.apply(c));
        }
        Bigraph { n, rows }
    }
}

impl fmt::Debug for Bigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bigraph(n={}, ", self.n)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{:0width$b}", r, width = self.n)?;
        }
        f.write_str(")")
    }
}

#[inline]
fn full_row(n: usize) -> u8 {
    ((1u16 << n) - 1) as u8
}

fn code_of(n: usize, rows: &[u8]) -> u64 {
    rows.iter().fold(0u64, |acc, &r| (acc << n) | r as u64)
}

/// The lexicographically least biadjacency code over all row and column relabelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: usize,
    code: u64,
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self) -> u64 {
        self.code
    }

    pub fn edge_count(&self) -> usize {
        self.code.count_ones() as usize
    }

    /// Zero-padded lowercase hex, `⌈n²/4⌉` digits.
    pub fn to_hex(&self) -> alloc::string::String {
        let width = (self.n * self.n).div_ceil(4);
        alloc::format!("{:0width$x}", self.code, width = width)
    }

    /// The representative graph whose code this is.
    pub fn graph(&self) -> Bigraph {
        Bigraph::from_code(self.n, self.code).expect("canonical code fits its side size")
    }
}

/// Minimizes over every column relabeling; for a fixed one the best row
/// relabeling simply sorts the row words ascending.
pub fn canonicalize(g: &Bigraph) -> CanonicalCode {
    canonicalize_with(g, &all_perms(g.n))
}

fn canonicalize_with(g: &Bigraph, col_perms: &[Perm]) -> CanonicalCode {
    let n = g.n;
    let mut best = u64::MAX;
    let mut rows = vec![0u8; n];
    for pc in col_perms {
        for (dst, &src) in rows.iter_mut().zip(&g.rows) {
            let mut w = 0u8;
            for c in 1..=n {
                if src >> (n - c) & 1 == 1 {
                    w |= 1 << (n - pc.apply(c));
                }
            }
            *dst = w;
        }
        rows.sort_unstable();
        best = best.min(code_of(n, &rows));
    }
    CanonicalCode { n, code: best }
}

/// `|Aut(g)|`: relabelings `(π_R, π_C)` that map the edge set onto itself.
pub fn automorphism_count(g: &Bigraph) -> u64 {
    let perms = all_perms(g.n);
    let code = g.code();
    let mut count = 0;
    for pr in &perms {
        for pc in &perms {
            if g.relabel(pr, pc).code() == code {
                count += 1;
            }
        }
    }
    count
}

/// Degree profile `Ψ(g)` and neighborhood-class multiset `[g]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphProfile {
    /// `psi[i]` = number of vertices (both sides) of degree `i`, for `i = 0..=n`.
    pub psi: Vec<usize>,
    /// Sizes of the `∼`-classes, ascending.
    pub class_multiset: Vec<usize>,
}

/// Computes `Ψ(g)` and `[g]`.
///
/// Vertices `u ∼ v` when `N(u) = N(v)`; isolated vertices are equivalent only
/// to isolated vertices on the same side. Row and column neighborhoods live
/// on opposite sides, so classes never mix sides.
pub fn profile(g: &Bigraph) -> GraphProfile {
    let n = g.n;
    let mut psi = vec![0usize; n + 1];
    let mut row_classes: BTreeMap<u8, usize> = BTreeMap::new();
    let mut col_classes: BTreeMap<u8, usize> = BTreeMap::new();
    for v in 1..=n {
        let rn = g.row_neighbors(v);
        let cn = g.col_neighbors(v);
        psi[rn.count_ones() as usize] += 1;
        psi[cn.count_ones() as usize] += 1;
        *row_classes.entry(rn).or_default() += 1;
        *col_classes.entry(cn).or_default() += 1;
    }
    let mut class_multiset: Vec<usize> = row_classes
        .into_values()
        .chain(col_classes.into_values())
        .collect();
    class_multiset.sort_unstable();
    GraphProfile {
        psi,
        class_multiset,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub code: CanonicalCode,
    pub profile: GraphProfile,
}

impl CatalogEntry {
    pub fn graph(&self) -> Bigraph {
        self.code.graph()
    }
}

/// The isomorphism classes `𝔊_{n,k}` for `k = 0..=n²`.
#[derive(Clone, Debug)]
pub struct GraphCatalog {
    n: usize,
    buckets: Vec<Vec<CatalogEntry>>,
}

impl GraphCatalog {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entries with exactly `k` edges, sorted by canonical code. Empty for `k > n²`.
    pub fn bucket(&self, k: usize) -> &[CatalogEntry] {
        self.buckets.get(k).map_or(&[], |b| b.as_slice())
    }

    /// Bucket sizes for `k = 0..=n²`.
    pub fn bucket_sizes(&self) -> Vec<usize> {
        self.buckets.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.buckets.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(k, entry)` for every class, by increasing `k` then code.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &CatalogEntry)> {
        self.buckets
            .iter()
            .enumerate()
            .flat_map(|(k, b)| b.iter().map(move |e| (k, e)))
    }
}

/// Canonicalizes all `2^{n²}` biadjacency matrices and keeps one entry per class.
pub fn enumerate_catalog(n: usize) -> Result<GraphCatalog> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    if n > CATALOG_CAP {
        return Err(Error::SizeLimit {
            what: "bipartite graph catalog",
            n,
            cap: CATALOG_CAP,
            cardinality: BigUint::from(1u8) << (n * n),
        });
    }
    let perms = all_perms(n);
    let mut codes = BTreeSet::new();
    for mask in 0..1u64 << (n * n) {
        let g = Bigraph::from_code(n, mask)?;
        codes.insert(canonicalize_with(&g, &perms).code);
    }
    let mut buckets = vec![Vec::new(); n * n + 1];
    for code in codes {
        let code = CanonicalCode { n, code };
        let profile = profile(&code.graph());
        buckets[code.edge_count()].push(CatalogEntry { code, profile });
    }
    Ok(GraphCatalog { n, buckets })
}
