//! Unweighted spanning tree counts by every available method.

mod formulas;
mod oracle;
mod perturbation;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

pub use formulas::{
    count_bipartite, count_complete, count_ferrers, count_multipartite, count_special_2threshold,
    count_threshold,
};
pub use oracle::{
    for_each_spanning_tree, oracle_count, oracle_count_with, spanning_trees, ORACLE_EDGE_LIMIT,
};
pub use perturbation::{build_perturbation, matrix_tree_count, perturbation_count, Perturbation};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{
    ferrers_recognize, find_special_2threshold_u_with, is_threshold, ConstructionOrder,
    SearchConfig,
};

/// Counting strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Closed form if the graph is recognized, else Matrix-Tree.
    Auto,
    Formula,
    MatrixTree,
    Perturbation,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Formula => "formula",
            Method::MatrixTree => "matrix-tree",
            Method::Perturbation => "perturbation",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Method::Auto,
            Method::Formula,
            Method::MatrixTree,
            Method::Perturbation,
            Method::Oracle,
        ]
        .into_iter()
        .find(|m| m.name() == s)
        .ok_or_else(|| Error::NotApplicable(format!("unknown method {s:?}")))
    }
}

/// Which closed form produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaFamily {
    Ferrers,
    Threshold,
    #[serde(rename = "special_2_threshold")]
    Special2Threshold,
}

impl fmt::Display for FormulaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaFamily::Ferrers => "ferrers",
            FormulaFamily::Threshold => "threshold",
            FormulaFamily::Special2Threshold => "special_2_threshold",
        })
    }
}

/// Limits shared by the counting entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountConfig {
    pub search: SearchConfig,
    pub oracle_edge_limit: usize,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig {
            search: SearchConfig::default(),
            oracle_edge_limit: ORACLE_EDGE_LIMIT,
        }
    }
}

/// A count and how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountOutcome {
    pub count: BigInt,
    /// The method actually used (never [`Method::Auto`]).
    pub method: Method,
    pub formula: Option<FormulaFamily>,
}

/// The special 2-threshold construction order used by the formula and
/// perturbation paths: threshold order if there is one, else the first `U`
/// found by the search.
fn recognized_order(g: &Graph, config: &CountConfig) -> Result<Option<ConstructionOrder>> {
    if let Some(co) = is_threshold(g).into_order() {
        return Ok(Some(co));
    }
    find_special_2threshold_u_with(g, config.search)
}

/// Closed-form count, trying Ferrers, threshold and special 2-threshold in
/// that order. `None` if no formula applies.
pub fn formula_count(g: &Graph, config: &CountConfig) -> Result<Option<(BigInt, FormulaFamily)>> {
    if let Some(fs) = ferrers_recognize(g) {
        return Ok(Some((count_ferrers(&fs)?, FormulaFamily::Ferrers)));
    }
    if let Some(co) = is_threshold(g).into_order() {
        return Ok(Some((count_threshold(g, &co)?, FormulaFamily::Threshold)));
    }
    if let Some(co) = find_special_2threshold_u_with(g, config.search)? {
        if !co.u_dominating().is_empty() && !co.u_set().is_empty() {
            return Ok(Some((
                count_special_2threshold(g, &co)?,
                FormulaFamily::Special2Threshold,
            )));
        }
    }
    Ok(None)
}

/// Counts spanning trees with the requested method.
pub fn count_spanning_trees(
    g: &Graph,
    method: Method,
    config: &CountConfig,
) -> Result<CountOutcome> {
    let plain = |count, method| CountOutcome {
        count,
        method,
        formula: None,
    };
    match method {
        Method::Auto => match formula_count(g, config) {
            Ok(Some((count, family))) => Ok(CountOutcome {
                count,
                method: Method::Formula,
                formula: Some(family),
            }),
            Ok(None) | Err(Error::CapabilityExceeded { .. }) => {
                Ok(plain(matrix_tree_count(g), Method::MatrixTree))
            }
            Err(e) => Err(e),
        },
        Method::Formula => match formula_count(g, config)? {
            Some((count, family)) => Ok(CountOutcome {
                count,
                method,
                formula: Some(family),
            }),
            None => Err(Error::NotApplicable(
                "no closed form applies: the graph is not Ferrers, threshold or special 2-threshold \
                 with nonempty D and U"
                    .into(),
            )),
        },
        Method::MatrixTree => Ok(plain(matrix_tree_count(g), method)),
        Method::Oracle => Ok(plain(oracle_count_with(g, config.oracle_edge_limit)?, method)),
        Method::Perturbation => {
            let triangular = match recognized_order(g, config) {
                Ok(Some(co)) => build_perturbation(g, &co)?.tree_count().ok(),
                Ok(None) | Err(Error::CapabilityExceeded { .. }) => None,
                Err(e) => return Err(e),
            };
            let count = match triangular {
                Some(c) => c,
                None => {
                    let ones = vec![BigInt::from(1); g.vertex_count()];
                    perturbation_count(g, &ones, &ones)?
                }
            };
            Ok(plain(count, method))
        }
    }
}
