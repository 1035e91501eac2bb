//! Construction orders and greedy U-threshold elimination.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{permutation_positions, Graph, Vertex};

/// How a vertex enters a construction order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Initial,
    Isolated,
    UDominating,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Initial => "initial",
            Role::Isolated => "isolated",
            Role::UDominating => "u_dominating",
        })
    }
}

/// A vertex ordering `v_1..v_n` together with a subset `U` such that every
/// `v_i` (i ≥ 2) has lower neighborhood either empty or equal to the
/// `U`-vertices among its predecessors.
///
/// Only constructible through [`ConstructionOrder::from_order`] (or the
/// recognizers, which call it), so a value always satisfies that invariant
/// for the graph it was built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionOrder {
    order: Vec<Vertex>,
    #[serde(rename = "u")]
    u_set: Vec<Vertex>,
    roles: Vec<Role>,
}

impl ConstructionOrder {
    /// Validates `order` against `g` and `u`, assigning roles. A vertex whose
    /// lower neighborhood is empty is tagged isolated even when it would also
    /// qualify as U-dominating (no U-vertex precedes it).
    pub fn from_order(g: &Graph, order: &[Vertex], u: &[Vertex]) -> Result<Self> {
        let n = g.vertex_count();
        permutation_positions(order, n)
            .map_err(|e| Error::InvalidConstructionOrder(format!("not a permutation: {e}")))?;
        let in_u = g.vertex_mask(u)?;
        let mut seen = vec![false; n + 1];
        let mut u_before = 0usize;
        let mut roles = Vec::with_capacity(n);
        for (i, &v) in order.iter().enumerate() {
            if i == 0 {
                roles.push(Role::Initial);
            } else {
                let lower: Vec<Vertex> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| seen[w])
                    .collect();
                if lower.is_empty() {
                    roles.push(Role::Isolated);
                } else if lower.len() == u_before && lower.iter().all(|&w| in_u[w]) {
                    roles.push(Role::UDominating);
                } else {
                    return Err(Error::InvalidConstructionOrder(format!(
                        "vertex {v} at position {} has lower neighborhood {lower:?}, \
                         which is neither empty nor the U-vertices before it",
                        i + 1
                    )));
                }
            }
            seen[v] = true;
            if in_u[v] {
                u_before += 1;
            }
        }
        let mut u_set: Vec<Vertex> = u.to_vec();
        u_set.sort_unstable();
        u_set.dedup();
        Ok(ConstructionOrder {
            order: order.to_vec(),
            u_set,
            roles,
        })
    }

    /// Re-checks the invariant against `g` (e.g. after deserializing).
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fresh = Self::from_order(g, &self.order, &self.u_set)?;
        if fresh.roles != self.roles {
            return Err(Error::InvalidConstructionOrder(
                "roles do not match the graph".into(),
            ));
        }
        Ok(())
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `U`, sorted ascending.
    pub fn u_set(&self) -> &[Vertex] {
        &self.u_set
    }

    /// Roles by position in the order.
    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn in_u(&self, v: Vertex) -> bool {
        self.u_set.binary_search(&v).is_ok()
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.order.iter().position(|&w| w == v)
    }

    pub fn role_of(&self, v: Vertex) -> Option<Role> {
        self.position(v).map(|i| self.roles[i])
    }

    fn with_role(&self, role: Role) -> Vec<Vertex> {
        self.order
            .iter()
            .zip(&self.roles)
            .filter(|(_, &r)| r == role)
            .map(|(&v, _)| v)
            .collect()
    }

    /// `D`, the U-dominating vertices, in order.
    pub fn u_dominating(&self) -> Vec<Vertex> {
        self.with_role(Role::UDominating)
    }

    /// `I`, the isolated vertices (excluding `v_1`), in order.
    pub fn isolated(&self) -> Vec<Vertex> {
        self.with_role(Role::Isolated)
    }

    /// `D ∩ U`, in order.
    pub fn dominating_in_u(&self) -> Vec<Vertex> {
        self.u_dominating()
            .into_iter()
            .filter(|&v| self.in_u(v))
            .collect()
    }
}

impl fmt::Display for ConstructionOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .order
            .iter()
            .zip(&self.roles)
            .map(|(v, r)| match r {
                Role::Initial => format!("{v}"),
                Role::Isolated => format!("{v}(i)"),
                Role::UDominating => format!("{v}(d)"),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Outcome of greedy elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UThreshold {
    Order(ConstructionOrder),
    /// The vertices left when no vertex was removable: `G[W]` has no vertex
    /// whose neighborhood is empty or exactly the rest of `W ∩ U`.
    Stuck(Vec<Vertex>),
}

impl UThreshold {
    pub fn is_success(&self) -> bool {
        matches!(self, UThreshold::Order(_))
    }

    pub fn order(&self) -> Option<&ConstructionOrder> {
        match self {
            UThreshold::Order(co) => Some(co),
            UThreshold::Stuck(_) => None,
        }
    }

    pub fn into_order(self) -> Option<ConstructionOrder> {
        match self {
            UThreshold::Order(co) => Some(co),
            UThreshold::Stuck(_) => None,
        }
    }
}

/// Greedy elimination with a caller-chosen tie-break: `choose` receives the
/// removable vertices (ascending) and returns an index into that slice.
pub fn greedy_elimination<F>(g: &Graph, u: &[Vertex], mut choose: F) -> Result<UThreshold>
where
    F: FnMut(&[Vertex]) -> usize,
{
    let n = g.vertex_count();
    let in_u = g.vertex_mask(u)?;
    let mut alive = vec![true; n + 1];
    alive[0] = false;
    let mut deg: Vec<usize> = (0..=n)
        .map(|v| if v == 0 { 0 } else { g.degree(v) })
        .collect();
    let mut deg_u: Vec<usize> = (0..=n)
        .map(|v| if v == 0 { 0 } else { g.degree_into(v, &in_u) })
        .collect();
    let mut u_alive = (1..=n).filter(|&v| in_u[v]).count();
    let mut removed = Vec::with_capacity(n);
    let mut candidates = Vec::with_capacity(n);
    while removed.len() < n {
        candidates.clear();
        for v in 1..=n {
            if !alive[v] {
                continue;
            }
            let others_in_u = u_alive - usize::from(in_u[v]);
            if deg[v] == 0 || (deg[v] == deg_u[v] && deg_u[v] == others_in_u) {
                candidates.push(v);
            }
        }
        if candidates.is_empty() {
            return Ok(UThreshold::Stuck((1..=n).filter(|&v| alive[v]).collect()));
        }
        let pick = choose(&candidates);
        let x = *candidates.get(pick).ok_or(Error::IndexOutOfRange {
            index: pick,
            len: candidates.len(),
        })?;
        alive[x] = false;
        for &y in g.neighbors(x) {
            if alive[y] {
                deg[y] -= 1;
                if in_u[x] {
                    deg_u[y] -= 1;
                }
            }
        }
        if in_u[x] {
            u_alive -= 1;
        }
        removed.push(x);
    }
    removed.reverse();
    ConstructionOrder::from_order(g, &removed, u).map(UThreshold::Order)
}

/// Decides whether `g` is U-threshold for the given `u`. Among removable
/// vertices the highest-numbered one is removed first, so lower-numbered
/// vertices tend to come first in the resulting order.
pub fn is_u_threshold(g: &Graph, u: &[Vertex]) -> Result<UThreshold> {
    greedy_elimination(g, u, |c| c.len() - 1)
}

/// Threshold recognition: U-threshold with `U = V`.
pub fn is_threshold(g: &Graph) -> UThreshold {
    let all: Vec<Vertex> = g.vertices().collect();
    is_u_threshold(g, &all).expect("all vertices are in range")
}
