//! Cayley graphs `Cay(G, S)`: vertices are group elements, `x ~ y` iff `x y^-1 ∈ S`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::VertexSet;
use crate::clique::{nexus_of, Nexus};
use crate::graph::Graph;
use crate::group::{ElementSet, FiniteGroup, GroupError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CayleyError {
    Group(GroupError),
    /// The connection set contains the identity or is not inverse-closed.
    InvalidConnectionSet(ConnectionVerdict),
    /// `<S>` is a proper subgroup, so the graph is disconnected.
    NotGenerating {
        generated_order: usize,
    },
    NotASubgroup,
    SubgroupTooSmall,
    /// `C \ {e}` is not contained in `S`.
    SubgroupNotClique,
}

impl fmt::Display for CayleyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CayleyError::Group(e) => e.fmt(f),
            CayleyError::InvalidConnectionSet(v) => {
                write!(
                    f,
                    "invalid connection set (identity-free: {}, inverse-closed: {})",
                    v.identity_free, v.inverse_closed
                )
            }
            CayleyError::NotGenerating { generated_order } => {
                write!(f, "connection set generates a subgroup of order {generated_order} only")
            }
            CayleyError::NotASubgroup => f.write_str("candidate clique is not a subgroup"),
            CayleyError::SubgroupTooSmall => f.write_str("subgroup must have at least two elements"),
            CayleyError::SubgroupNotClique => f.write_str("subgroup is not a clique: C\\{e} is not inside S"),
        }
    }
}

impl core::error::Error for CayleyError {}

impl From<GroupError> for CayleyError {
    fn from(e: GroupError) -> Self {
        CayleyError::Group(e)
    }
}

/// A subset of a group used as the connection set of a Cayley graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConnectionSet(pub ElementSet);

impl ConnectionSet {
    /// Parses a comma-separated element list, e.g. `1,-1,4,-4` or `(1,0),(0,1)`.
    pub fn parse(group: &FiniteGroup, text: &str) -> Result<Self, GroupError> {
        group.element_set(text).map(ConnectionSet)
    }

    /// Parses each entry separately.
    pub fn from_names(group: &FiniteGroup, names: &[&str]) -> Result<Self, GroupError> {
        names.iter().map(|s| group.element(s)).collect::<Result<ElementSet, _>>().map(ConnectionSet)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn describe(&self, group: &FiniteGroup) -> String {
        group.describe_set(self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConnectionVerdict {
    pub identity_free: bool,
    pub inverse_closed: bool,
    /// `<S> = G`, i.e. the Cayley graph is connected.
    pub generates: bool,
    pub generated_order: usize,
}

impl ConnectionVerdict {
    /// Identity-free and inverse-closed (connectivity is reported separately).
    pub fn valid(&self) -> bool {
        self.identity_free && self.inverse_closed
    }
}

pub fn validate_connection_set(g: &FiniteGroup, s: &ConnectionSet) -> ConnectionVerdict {
    let set = s.0;
    let generated_order = g.generated(set).len();
    ConnectionVerdict {
        identity_free: !set.contains(g.identity()),
        inverse_closed: set.iter().all(|x| set.contains(g.inv(x))),
        generates: generated_order == g.order(),
        generated_order,
    }
}

/// Builds `Cay(G, S)` with vertex `i` the group element `i`.
pub fn cayley_graph(g: &FiniteGroup, s: &ConnectionSet) -> Result<Graph, CayleyError> {
    let verdict = validate_connection_set(g, s);
    if !verdict.valid() {
        return Err(CayleyError::InvalidConnectionSet(verdict));
    }
    if !verdict.generates {
        return Err(CayleyError::NotGenerating { generated_order: verdict.generated_order });
    }
    let n = g.order();
    let rows = (0..n).map(|x| (0..n).filter(|&y| s.0.contains(g.mul(x, g.inv(y)))).collect::<VertexSet>()).collect();
    let graph = Graph::from_rows(rows).expect("valid connection sets give simple graphs");
    Ok(graph.with_label(alloc::format!("Cay({}, {})", g.label(), s.describe(g))))
}

/// Right translations by every element; all of them are automorphisms of `Cay(G, S)`.
pub fn right_translations(g: &FiniteGroup) -> Vec<Vec<usize>> {
    (0..g.order()).map(|h| g.right_translation(h)).collect()
}

/// Result of checking `|S| = ([G:C] - 1) a + |C| - 1` for a subgroup clique `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SubgroupCliqueVerdict {
    pub connection_size: usize,
    pub index: usize,
    pub subgroup_order: usize,
    pub nexus: usize,
    /// `([G:C] - 1) a + |C| - 1`.
    pub predicted: usize,
    /// Nexus observed on each right coset, `None` where a coset is not regular.
    pub coset_nexus: Vec<Option<usize>>,
}

impl SubgroupCliqueVerdict {
    pub fn passed(&self) -> bool {
        self.predicted == self.connection_size && self.coset_nexus.iter().all(|&x| x == Some(self.nexus))
    }
}

/// Checks the connection-set size identity for a subgroup `C` that is a regular
/// clique with nexus `a`, verifying on the built graph that every right coset
/// of `C` is a regular clique with that nexus.
pub fn subgroup_clique_identity(
    g: &FiniteGroup,
    subgroup: ElementSet,
    s: &ConnectionSet,
    nexus: usize,
) -> Result<SubgroupCliqueVerdict, CayleyError> {
    if !g.is_subgroup(subgroup) {
        return Err(CayleyError::NotASubgroup);
    }
    if subgroup.len() < 2 {
        return Err(CayleyError::SubgroupTooSmall);
    }
    let mut nontrivial = subgroup;
    nontrivial.remove(g.identity());
    if !nontrivial.is_subset(s.0) {
        return Err(CayleyError::SubgroupNotClique);
    }
    let graph = cayley_graph(g, s)?;
    let coset_nexus = g
        .right_cosets(subgroup)
        .into_iter()
        .map(|coset| match nexus_of(&graph, coset) {
            Ok(Nexus::Regular(a)) => Some(a),
            _ => None,
        })
        .collect();
    let index = g.order() / subgroup.len();
    Ok(SubgroupCliqueVerdict {
        connection_size: s.len(),
        index,
        subgroup_order: subgroup.len(),
        nexus,
        predicted: (index - 1) * nexus + subgroup.len() - 1,
        coset_nexus,
    })
}
