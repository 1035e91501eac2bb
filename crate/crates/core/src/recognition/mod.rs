//! Recognition of threshold, U-threshold, special 2-threshold and Ferrers
//! graphs.

mod canonical;
mod ferrers;
mod nesting;
mod order;
mod patterns;
mod search;

use serde::Serialize;

pub use canonical::{canonical_order, CanonicalOrder};
pub use ferrers::{ferrers_recognize, ferrers_recognize_oriented, FerrersStructure};
pub use nesting::{nesting_report, NestingReport, Violation};
pub use order::{
    greedy_elimination, is_threshold, is_u_threshold, ConstructionOrder, Role, UThreshold,
};
pub use patterns::{forbidden_subgraph_check, match_pattern, Family, ForbiddenWitness, Pattern};
pub use search::{find_special_2threshold_u, find_special_2threshold_u_with, SearchConfig};

pub(crate) use patterns::next_permutation;

use crate::error::Result;
use crate::graph::Graph;

/// Family memberships of a graph with their certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub threshold: Option<ConstructionOrder>,
    pub threshold_witness: Option<ForbiddenWitness>,
    pub ferrers: Option<FerrersStructure>,
    /// A construction order carrying `U`: the threshold order when there is
    /// one, else the first `U` found by the search.
    pub special_2_threshold: Option<ConstructionOrder>,
    pub special_2_threshold_witness: Option<ForbiddenWitness>,
}

impl Classification {
    pub fn is_threshold(&self) -> bool {
        self.threshold.is_some()
    }

    pub fn is_ferrers(&self) -> bool {
        self.ferrers.is_some()
    }

    pub fn is_special_2_threshold(&self) -> bool {
        self.special_2_threshold.is_some()
    }
}

/// Runs every recognizer. Forbidden-subgraph witnesses are looked up only
/// for the families the graph fails. Threshold graphs skip the `U` search
/// and report `U = V`.
pub fn classify(g: &Graph, config: SearchConfig) -> Result<Classification> {
    let threshold = is_threshold(g).into_order();
    let threshold_witness = match threshold {
        Some(_) => None,
        None => forbidden_subgraph_check(g, Family::Threshold)?,
    };
    let ferrers = ferrers_recognize(g);
    let special_2_threshold = match &threshold {
        Some(co) => Some(co.clone()),
        None => find_special_2threshold_u_with(g, config)?,
    };
    let special_2_threshold_witness = match special_2_threshold {
        Some(_) => None,
        None => forbidden_subgraph_check(g, Family::Special2Threshold)?,
    };
    Ok(Classification {
        threshold,
        threshold_witness,
        ferrers,
        special_2_threshold,
        special_2_threshold_witness,
    })
}
