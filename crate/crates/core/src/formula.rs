//! The alternating-sum formula for `D_{n²}`, the number of ordered pairs of
//! disjoint S-permutation matrices:
//!
//! ```text
//! D = (n!)^{4n} + (n!)^{2(n+1)} Σ_{k=1}^{n²} (-1)^k θ(n,k)
//! θ(n,k) = Σ_{g ∈ 𝔊_{n,k}} ω(g)
//! ω(g)   = Π_{i=0}^{n-2} ((n-i)!)^{ψ_i(g)} / Π_{δ ∈ [g]} δ!
//! ```
//!
//! Everything is exact. The last two degree classes (`i = n-1, n`) contribute
//! `1! = 0! = 1` and are skipped; [`omega_full`] keeps them for cross-checking.
//!
//! The denominator `Π δ!` counts only the automorphisms of `g` that permute
//! vertices with identical neighborhoods. Graphs such as a perfect matching
//! have further symmetries, and for them `Π δ!` is smaller than `|Aut(g)|`.
//! Inclusion–exclusion over the common 1-positions of a pair gives
//!
//! ```text
//! D = (n!)^{2(n+1)} Σ_{k=0}^{n²} (-1)^k Σ_{g ∈ 𝔊_{n,k}} Π_v (n - deg v)! / |Aut(g)|
//! ```
//!
//! which is what the brute-force census reproduces. Both weightings are
//! available through [`Weighting`]; the default is [`Weighting::TwinClasses`].

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::bigraph::{
    automorphism_count, enumerate_catalog, Bigraph, CatalogEntry, GraphCatalog, GraphProfile,
};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sperm::factorial;

fn class_denominator(profile: &GraphProfile) -> BigUint {
    profile
        .class_multiset
        .iter()
        .map(|&d| factorial(d))
        .product()
}

fn degree_numerator(profile: &GraphProfile, n: usize, top: usize) -> BigUint {
    (0..=top)
        .map(|i| factorial(n - i).pow(profile.psi.get(i).copied().unwrap_or(0) as u32))
        .product()
}

/// `ω(g)` from the truncated product over degrees `0..=n-2`.
pub fn omega(profile: &GraphProfile, n: usize) -> Rational {
    let num = if n >= 2 {
        degree_numerator(profile, n, n - 2)
    } else {
        BigUint::one()
    };
    Rational::new(BigInt::from(num), BigInt::from(class_denominator(profile)))
}

/// `ω(g)` with the product running over every degree `0..=n`.
pub fn omega_full(profile: &GraphProfile, n: usize) -> Rational {
    let num = degree_numerator(profile, n, n);
    Rational::new(BigInt::from(num), BigInt::from(class_denominator(profile)))
}

/// Per-graph weight `Π_v (n - deg v)! / |Aut(g)|`.
pub fn omega_automorphisms(g: &Bigraph) -> Rational {
    let n = g.n();
    let num: BigUint = (1..=n)
        .map(|v| factorial(n - g.row_degree(v)) * factorial(n - g.col_degree(v)))
        .product();
    Rational::new(BigInt::from(num), BigInt::from(automorphism_count(g)))
}

/// Which denominator a per-graph weight uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Weighting {
    /// `Π_{δ ∈ [g]} δ!`, as in [`omega`].
    #[default]
    TwinClasses,
    /// `|Aut(g)|`, as in [`omega_automorphisms`].
    Automorphisms,
}

impl Weighting {
    pub fn weight(self, entry: &CatalogEntry, n: usize) -> Rational {
        match self {
            Weighting::TwinClasses => omega(&entry.profile, n),
            Weighting::Automorphisms => omega_automorphisms(&entry.graph()),
        }
    }
}

/// `θ(n,k)` for `k = 1..=n²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaTable {
    n: usize,
    values: Vec<Rational>,
}

impl ThetaTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize) -> Option<&Rational> {
        k.checked_sub(1).and_then(|i| self.values.get(i))
    }

    /// `(k, θ(n,k))` by increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    /// `Σ_{k=1}^{n²} (-1)^k θ(n,k)`.
    pub fn alternating_sum(&self) -> Rational {
        self.iter()
            .map(|(k, v)| if k % 2 == 1 { -v.clone() } else { v.clone() })
            .sum()
    }
}

pub fn theta(n: usize, k: usize, catalog: &GraphCatalog) -> Result<Rational> {
    theta_with(n, k, catalog, Weighting::TwinClasses)
}

pub fn theta_with(
    n: usize,
    k: usize,
    catalog: &GraphCatalog,
    weighting: Weighting,
) -> Result<Rational> {
    if catalog.n() != n {
        return Err(Error::OrderMismatch {
            left: n,
            right: catalog.n(),
        });
    }
    if k == 0 || k > n * n {
        return Err(Error::EdgeCountOutOfRange { k, n });
    }
    Ok(catalog
        .bucket(k)
        .iter()
        .map(|e| weighting.weight(e, n))
        .sum())
}

pub fn theta_table(catalog: &GraphCatalog) -> ThetaTable {
    theta_table_with(catalog, Weighting::TwinClasses)
}

pub fn theta_table_with(catalog: &GraphCatalog, weighting: Weighting) -> ThetaTable {
    let n = catalog.n();
    let values = (1..=n * n)
        .map(|k| {
            catalog
                .bucket(k)
                .iter()
                .map(|e| weighting.weight(e, n))
                .sum()
        })
        .collect();
    ThetaTable { n, values }
}

/// The pieces of `D = leading + multiplier · alternating_sum`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaTerms {
    pub n: usize,
    pub weighting: Weighting,
    /// `(n!)^{4n}`
    pub leading: BigUint,
    /// `(n!)^{2(n+1)}`
    pub multiplier: BigUint,
    pub theta: ThetaTable,
    pub alternating_sum: Rational,
    /// `D_{n²}`
    pub ordered: BigUint,
}

impl FormulaTerms {
    pub fn from_catalog(catalog: &GraphCatalog) -> Result<FormulaTerms> {
        FormulaTerms::from_catalog_with(catalog, Weighting::TwinClasses)
    }

    pub fn from_catalog_with(catalog: &GraphCatalog, weighting: Weighting) -> Result<FormulaTerms> {
        let n = catalog.n();
        if n < 2 {
            return Err(Error::Unsupported {
                what: "the disjoint-pair formula",
                n,
                reason: "it holds for n >= 2",
            });
        }
        let fact = factorial(n);
        let leading = fact.pow(4 * n as u32);
        let multiplier = fact.pow(2 * (n as u32 + 1));
        let theta = theta_table_with(catalog, weighting);
        let alternating_sum = theta.alternating_sum();
        let total =
            Rational::from(leading.clone()) + Rational::from(multiplier.clone()) * &alternating_sum;
        let ordered = total.to_natural().ok_or_else(|| {
            Error::Inconsistent(format!("D for n={n} is {total}, not a natural number"))
        })?;
        Ok(FormulaTerms {
            n,
            weighting,
            leading,
            multiplier,
            theta,
            alternating_sum,
            ordered,
        })
    }

    /// `d = D / 2`, checking that `D` is even.
    pub fn unordered(&self) -> Result<BigUint> {
        let (half, rem) = self.ordered.div_rem(&BigUint::from(2u8));
        if rem != BigUint::ZERO {
            return Err(Error::Inconsistent(format!(
                "D for n={} is odd: {}",
                self.n, self.ordered
            )));
        }
        Ok(half)
    }
}

/// `D_{n²}` from an already built catalog.
pub fn count_ordered_with(catalog: &GraphCatalog) -> Result<BigUint> {
    FormulaTerms::from_catalog(catalog).map(|t| t.ordered)
}

pub fn count_unordered_with(catalog: &GraphCatalog) -> Result<BigUint> {
    FormulaTerms::from_catalog(catalog)?.unordered()
}

/// `D_{n²}`, building the catalog for `n` (`2 <= n <= 4`).
pub fn count_ordered(n: usize) -> Result<BigUint> {
    count_ordered_with(&catalog_for_formula(n)?)
}

/// `d_{n²} = D_{n²} / 2`.
pub fn count_unordered(n: usize) -> Result<BigUint> {
    count_unordered_with(&catalog_for_formula(n)?)
}

fn catalog_for_formula(n: usize) -> Result<GraphCatalog> {
    if n < 2 {
        return Err(Error::Unsupported {
            what: "the disjoint-pair formula",
            n,
            reason: "it holds for n >= 2",
        });
    }
    enumerate_catalog(n)
}
