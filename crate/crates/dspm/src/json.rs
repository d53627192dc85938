//! JSON shapes for everything the CLI emits. Counts and rationals are decimal
//! strings (`"144"`, `"1/36"`) so consumers without 64-bit integers lose nothing.

use std::collections::BTreeMap;

use dspm_core::{
    automorphism_count, omega, sperm::from_perms, CatalogEntry, DisjointFamily, FormulaTerms,
    GraphCatalog, Perm, Rational, ThetaTable, Weighting,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::census::{CensusMode, CensusResult};
use crate::error::CliError;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CommandResult {
    pub command: String,
    pub params: Value,
    pub payload: Value,
    pub exit_status: i32,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub k: usize,
    pub code: String,
    pub psi: Vec<usize>,
    pub class_multiset: Vec<usize>,
    pub omega: String,
    pub automorphisms: String,
}

impl GraphJson {
    pub fn new(n: usize, k: usize, entry: &CatalogEntry) -> Self {
        GraphJson {
            n,
            k,
            code: entry.code.to_hex(),
            psi: entry.profile.psi.clone(),
            class_multiset: entry.profile.class_multiset.clone(),
            omega: omega(&entry.profile, n).to_fraction_string(),
            automorphisms: automorphism_count(&entry.graph()).to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BucketJson {
    pub k: usize,
    pub count: usize,
    pub theta: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CatalogJson {
    pub n: usize,
    pub total: usize,
    pub buckets: Vec<BucketJson>,
    pub graphs: Vec<GraphJson>,
}

impl CatalogJson {
    pub fn new(catalog: &GraphCatalog) -> Self {
        let n = catalog.n();
        let buckets = catalog
            .bucket_sizes()
            .into_iter()
            .enumerate()
            .map(|(k, count)| BucketJson {
                k,
                count,
                theta: (k >= 1).then(|| {
                    catalog
                        .bucket(k)
                        .iter()
                        .map(|e| omega(&e.profile, n))
                        .sum::<Rational>()
                        .to_fraction_string()
                }),
            })
            .collect();
        CatalogJson {
            n,
            total: catalog.len(),
            buckets,
            graphs: catalog
                .iter()
                .map(|(k, e)| GraphJson::new(n, k, e))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ThetaEntryJson {
    pub k: usize,
    pub theta: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ThetaTableJson {
    pub n: usize,
    pub values: Vec<ThetaEntryJson>,
}

impl ThetaTableJson {
    pub fn new(table: &ThetaTable) -> Self {
        ThetaTableJson {
            n: table.n(),
            values: table
                .iter()
                .map(|(k, v)| ThetaEntryJson {
                    k,
                    theta: v.to_fraction_string(),
                })
                .collect(),
        }
    }

    /// `θ(n,k)` values by `k`, or `None` if a string is not a rational.
    pub fn parse_values(&self) -> Option<BTreeMap<usize, Rational>> {
        self.values
            .iter()
            .map(|e| Some((e.k, Rational::parse(&e.theta)?)))
            .collect()
    }
}

pub fn weighting_name(w: Weighting) -> &'static str {
    match w {
        Weighting::TwinClasses => "twin-classes",
        Weighting::Automorphisms => "automorphisms",
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FormulaJson {
    pub n: usize,
    pub weighting: String,
    pub leading: String,
    pub multiplier: String,
    pub theta: ThetaTableJson,
    pub alternating_sum: String,
    pub ordered: String,
    pub unordered: String,
}

impl FormulaJson {
    pub fn new(terms: &FormulaTerms) -> Result<Self, CliError> {
        Ok(FormulaJson {
            n: terms.n,
            weighting: weighting_name(terms.weighting).into(),
            leading: terms.leading.to_string(),
            multiplier: terms.multiplier.to_string(),
            theta: ThetaTableJson::new(&terms.theta),
            alternating_sum: terms.alternating_sum.to_fraction_string(),
            ordered: terms.ordered.to_string(),
            unordered: terms.unordered()?.to_string(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CensusJson {
    pub n: usize,
    pub mode: String,
    pub ordered_pairs: String,
    pub unordered_pairs: String,
    pub matrices_scanned: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub histogram: Option<BTreeMap<String, String>>,
}

impl CensusJson {
    pub fn new(result: &CensusResult, mode: CensusMode, timing: bool) -> Self {
        CensusJson {
            n: result.n,
            mode: match mode {
                CensusMode::Unordered => "unordered",
                CensusMode::Ordered => "ordered",
            }
            .into(),
            ordered_pairs: result.ordered_pairs.to_string(),
            unordered_pairs: result.unordered_pairs.to_string(),
            matrices_scanned: result.matrices_scanned.to_string(),
            elapsed_ms: timing.then(|| result.elapsed.as_millis().to_string()),
            histogram: None,
        }
    }
}

/// One S-permutation matrix as its parameter tuple of 1-based words.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PermTupleJson {
    pub row_perms: Vec<Vec<u8>>,
    pub col_perms: Vec<Vec<u8>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyJson {
    pub n: usize,
    pub size: usize,
    pub complete: bool,
    pub members: Vec<PermTupleJson>,
}

impl FamilyJson {
    pub fn new(family: &DisjointFamily) -> Self {
        let words = |ps: &[Perm]| ps.iter().map(|p| p.as_slice().to_vec()).collect();
        FamilyJson {
            n: family.n(),
            size: family.len(),
            complete: family.is_complete(),
            members: family
                .members()
                .iter()
                .map(|a| PermTupleJson {
                    row_perms: words(a.row_perms()),
                    col_perms: words(a.col_perms()),
                })
                .collect(),
        }
    }

    pub fn to_family(&self) -> Result<DisjointFamily, CliError> {
        let perms = |ws: &[Vec<u8>]| -> Result<Vec<Perm>, CliError> {
            ws.iter()
                .map(|w| {
                    Perm::new(w.clone()).ok_or_else(|| CliError::Parse {
                        line: 0,
                        message: format!("not a permutation: {w:?}"),
                    })
                })
                .collect()
        };
        let members = self
            .members
            .iter()
            .map(|m| {
                Ok(from_perms(
                    self.n,
                    perms(&m.row_perms)?,
                    perms(&m.col_perms)?,
                )?)
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(DisjointFamily::new(self.n, members)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dspm_core::{enumerate_catalog, sample_family, theta_table};

    #[test]
    fn catalog_json_shape() {
        let cat = enumerate_catalog(2).unwrap();
        let j = CatalogJson::new(&cat);
        assert_eq!(j.total, 7);
        assert_eq!(j.graphs.len(), 7);
        let counts: Vec<_> = j.buckets.iter().map(|b| b.count).collect();
        assert_eq!(counts, vec![1, 1, 3, 1, 1]);
        assert_eq!(j.buckets[0].theta, None);
        assert_eq!(j.buckets[4].theta.as_deref(), Some("1/4"));
        let full = j.graphs.last().unwrap();
        assert_eq!((full.code.as_str(), full.omega.as_str()), ("f", "1/4"));
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(serde_json::from_str::<CatalogJson>(&text).unwrap(), j);
    }

    #[test]
    fn theta_json_round_trip() {
        let table = theta_table(&enumerate_catalog(3).unwrap());
        let j = ThetaTableJson::new(&table);
        assert_eq!(j.values[8].theta, "1/36");
        assert_eq!(j.values[0].theta, "1296/1");
        let parsed = j.parse_values().unwrap();
        for (k, v) in table.iter() {
            assert_eq!(&parsed[&k], v);
        }
    }

    #[test]
    fn family_json_round_trip() {
        let fam = sample_family(3, 5, 100).unwrap();
        let j = FamilyJson::new(&fam);
        let text = serde_json::to_string(&j).unwrap();
        let back: FamilyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_family().unwrap(), fam);
    }

    #[test]
    fn family_json_rejects_overlap() {
        let fam = sample_family(2, 0, 100).unwrap();
        let mut j = FamilyJson::new(&fam);
        j.members[1] = j.members[0].clone();
        assert!(j.to_family().is_err());
    }
}
