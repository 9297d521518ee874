//! Mixed undirected graphs and the decomposability machinery built on
//! maximum cardinality search: perfect numberings, RIP clique sequences and
//! parent sets for the per-vertex Gaussian regressions.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a vertex within its graph. Stable for the lifetime of the graph;
/// subgraph extraction returns a mapping from new to old ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Discrete,
    Continuous,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Vertex {
    label: String,
    kind: VertexKind,
}

/// An undirected graph whose vertices are partitioned into discrete and
/// continuous kinds. Immutable once analysis begins; all analysis entry
/// points take `&self`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MixedGraph {
    vertices: Vec<Vertex>,
    adjacency: Vec<BTreeSet<u32>>,
    #[serde(skip)]
    label_index: HashMap<String, u32>,
}

impl MixedGraph {
    pub fn new() -> Self {
        MixedGraph {
            vertices: Vec::new(),
            adjacency: Vec::new(),
            label_index: HashMap::new(),
        }
    }

    /// Builds a graph from `(label, kind)` pairs and label pairs for edges.
    pub fn from_parts(vertices: &[(&str, VertexKind)], edges: &[(&str, &str)]) -> Result<Self> {
        let mut g = MixedGraph::new();
        for (label, kind) in vertices {
            g.add_vertex(label, *kind)?;
        }
        for (a, b) in edges {
            let a = g.vertex_by_label(a)?;
            let b = g.vertex_by_label(b)?;
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: &str, kind: VertexKind) -> Result<VertexId> {
        if self.label_index.contains_key(label) {
            return Err(Error::DuplicateLabel {
                label: label.to_string(),
            });
        }
        let id = self.vertices.len() as u32;
        self.vertices.push(Vertex {
            label: label.to_string(),
            kind,
        });
        self.adjacency.push(BTreeSet::new());
        self.label_index.insert(label.to_string(), id);
        Ok(VertexId(id))
    }

    /// Inserts an undirected edge. Returns `false` if the edge was already
    /// present.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<bool> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::SelfLoop {
                label: self.label(a).to_string(),
            });
        }
        let inserted = self.adjacency[a.index()].insert(b.0);
        self.adjacency[b.index()].insert(a.0);
        Ok(inserted)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.index() >= self.vertices.len() {
            return Err(Error::UnknownVertex {
                label: format!("#{}", v.0),
            });
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.vertices[v.index()].label
    }

    pub fn kind(&self, v: VertexId) -> VertexKind {
        self.vertices[v.index()].kind
    }

    pub fn vertex_by_label(&self, label: &str) -> Result<VertexId> {
        self.label_index
            .get(label)
            .map(|&i| VertexId(i))
            .ok_or_else(|| Error::UnknownVertex {
                label: label.to_string(),
            })
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacency[a.index()].contains(&b.0)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v.index()].iter().map(|&u| VertexId(u))
    }

    pub fn discrete_vertices(&self) -> Vec<VertexId> {
        self.vertex_ids()
            .filter(|&v| self.kind(v) == VertexKind::Discrete)
            .collect()
    }

    pub fn continuous_vertices(&self) -> Vec<VertexId> {
        self.vertex_ids()
            .filter(|&v| self.kind(v) == VertexKind::Continuous)
            .collect()
    }

    /// Rebuilds the label lookup; needed after deserialization.
    pub fn rebuild_index(&mut self) {
        self.label_index = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.label.clone(), i as u32))
            .collect();
    }

    /// The graph extended with one auxiliary vertex adjacent to exactly the
    /// discrete vertices. The auxiliary vertex is labelled `*` (or the first
    /// unused repetition of it) and classified as discrete.
    pub fn star_graph(&self) -> MixedGraph {
        let mut g = self.clone();
        let mut label = "*".to_string();
        while g.label_index.contains_key(&label) {
            label.push('*');
        }
        let star = g.add_vertex(&label, VertexKind::Discrete).expect("fresh label");
        for d in self.discrete_vertices() {
            g.add_edge(star, d).expect("valid edge");
        }
        g
    }

    /// True when the star graph is triangulated, checked with maximum
    /// cardinality search plus a fill-in scan.
    pub fn is_decomposable(&self) -> bool {
        let star = self.star_graph();
        let star_id = VertexId((star.vertex_count() - 1) as u32);
        let order = star.mcs_order(Some(star_id));
        star.elimination_violation(&order).is_none()
    }

    /// Like [`is_decomposable`](Self::is_decomposable) but produces a witness
    /// on failure: a chordless cycle of length at least four in the star
    /// graph (forbidden paths show up as cycles through the `*` vertex).
    pub fn decomposability(&self) -> Decomposability {
        let star = self.star_graph();
        let star_id = VertexId((star.vertex_count() - 1) as u32);
        let order = star.mcs_order(Some(star_id));
        if star.elimination_violation(&order).is_none() {
            return Decomposability::Decomposable;
        }
        let cycle = star
            .find_chordless_cycle()
            .expect("non-triangulated graph must contain a chordless cycle");
        Decomposability::NotDecomposable {
            cycle: cycle
                .into_iter()
                .map(|v| star.label(v).to_string())
                .collect(),
        }
    }

    fn not_decomposable_error(&self) -> Error {
        match self.decomposability() {
            Decomposability::Decomposable => unreachable!("caller checked"),
            Decomposability::NotDecomposable { cycle } => Error::NotDecomposable { witness: cycle },
        }
    }

    /// Maximum cardinality search visit order. The optional seed is numbered
    /// first; ties in the cardinality count are broken towards the lowest
    /// vertex index so the output is deterministic.
    fn mcs_order(&self, seed: Option<VertexId>) -> Vec<VertexId> {
        let n = self.vertex_count();
        let mut weight = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for step in 0..n {
            let next = if step == 0 {
                if let Some(s) = seed {
                    s.index()
                } else {
                    0
                }
            } else {
                let mut best = usize::MAX;
                let mut best_w = 0usize;
                for v in 0..n {
                    if !visited[v] && (best == usize::MAX || weight[v] > best_w) {
                        best = v;
                        best_w = weight[v];
                    }
                }
                best
            };
            visited[next] = true;
            order.push(VertexId(next as u32));
            for &u in &self.adjacency[next] {
                if !visited[u as usize] {
                    weight[u as usize] += 1;
                }
            }
        }
        order
    }

    /// Checks that each vertex's earlier neighbourhood along `order` is
    /// complete; returns the first violating pair otherwise.
    fn elimination_violation(&self, order: &[VertexId]) -> Option<(VertexId, VertexId)> {
        let n = self.vertex_count();
        let mut position = vec![0usize; n];
        for (pos, &v) in order.iter().enumerate() {
            position[v.index()] = pos;
        }
        for (pos, &v) in order.iter().enumerate() {
            let earlier: Vec<VertexId> = self
                .neighbors(v)
                .filter(|u| position[u.index()] < pos)
                .collect();
            for (i, &u) in earlier.iter().enumerate() {
                for &w in &earlier[i + 1..] {
                    if !self.has_edge(u, w) {
                        return Some((u, w));
                    }
                }
            }
        }
        None
    }

    /// Finds a chordless cycle of length at least four if one exists: for
    /// every vertex `v` and non-adjacent pair `u, w` of its neighbours, a
    /// shortest path from `u` to `w` avoiding the rest of `N[v]` closes an
    /// induced cycle through `v`.
    fn find_chordless_cycle(&self) -> Option<Vec<VertexId>> {
        let n = self.vertex_count();
        for v in self.vertex_ids() {
            let nbrs: Vec<VertexId> = self.neighbors(v).collect();
            for (i, &u) in nbrs.iter().enumerate() {
                for &w in &nbrs[i + 1..] {
                    if self.has_edge(u, w) {
                        continue;
                    }
                    let mut blocked = vec![false; n];
                    blocked[v.index()] = true;
                    for &x in &nbrs {
                        blocked[x.index()] = true;
                    }
                    blocked[u.index()] = false;
                    blocked[w.index()] = false;
                    if let Some(path) = self.shortest_path(u, w, &blocked) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    fn shortest_path(&self, from: VertexId, to: VertexId, blocked: &[bool]) -> Option<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut prev = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        prev[from.index()] = from.index();
        queue.push_back(from.index());
        while let Some(cur) = queue.pop_front() {
            if cur == to.index() {
                let mut path = vec![VertexId(cur as u32)];
                let mut at = cur;
                while at != from.index() {
                    at = prev[at];
                    path.push(VertexId(at as u32));
                }
                path.reverse();
                return Some(path);
            }
            for &u in &self.adjacency[cur] {
                let u = u as usize;
                if !blocked[u] && prev[u] == usize::MAX {
                    prev[u] = cur;
                    queue.push_back(u);
                }
            }
        }
        None
    }

    /// A perfect numbering with all discrete vertices numbered before the
    /// continuous ones. Derived from MCS on the star graph seeded at `*`,
    /// followed by a stable kind partition (valid because a discrete vertex
    /// never has a continuous parent in a perfect numbering).
    pub fn perfect_numbering(&self) -> Result<PerfectNumbering> {
        let star = self.star_graph();
        let star_id = VertexId((star.vertex_count() - 1) as u32);
        let order = star.mcs_order(Some(star_id));
        if star.elimination_violation(&order).is_some() {
            return Err(self.not_decomposable_error());
        }
        let mut numbering: Vec<VertexId> = order.into_iter().filter(|&v| v != star_id).collect();
        numbering.sort_by_key(|&v| self.kind(v) == VertexKind::Continuous); // stable
        let pn = PerfectNumbering { order: numbering };
        debug_assert!(pn.validate(self).is_ok(), "{:?}", pn.validate(self));
        Ok(pn)
    }

    /// Maximal cliques in an order satisfying the running intersection
    /// property, with separators and residuals.
    pub fn rip_cliques(&self) -> Result<RipSequence> {
        let pn = self.perfect_numbering()?;
        let n = self.vertex_count();
        let mut position = vec![0usize; n];
        for (pos, &v) in pn.order.iter().enumerate() {
            position[v.index()] = pos;
        }
        // B(v) = cl(v) ∩ predecessors; the maximal B-sets are exactly the
        // maximal cliques of a triangulated graph.
        let b_sets: Vec<BTreeSet<u32>> = pn
            .order
            .iter()
            .map(|&v| {
                let mut b: BTreeSet<u32> = self
                    .neighbors(v)
                    .filter(|u| position[u.index()] < position[v.index()])
                    .map(|u| u.0)
                    .collect();
                b.insert(v.0);
                b
            })
            .collect();
        let mut clique_positions: Vec<usize> = Vec::new();
        for j in 0..b_sets.len() {
            let maximal = b_sets
                .iter()
                .enumerate()
                .all(|(i, other)| i == j || !b_sets[j].is_subset(other));
            if maximal {
                clique_positions.push(j);
            }
        }
        clique_positions.sort_unstable();

        let mut cliques = Vec::with_capacity(clique_positions.len());
        let mut separators = Vec::with_capacity(clique_positions.len());
        let mut residuals = Vec::with_capacity(clique_positions.len());
        let mut history: BTreeSet<u32> = BTreeSet::new();
        for &j in &clique_positions {
            let clique = &b_sets[j];
            let sep: BTreeSet<u32> = clique.intersection(&history).copied().collect();
            let res: BTreeSet<u32> = clique.difference(&sep).copied().collect();
            history.extend(clique.iter().copied());
            cliques.push(to_ids(clique));
            separators.push(to_ids(&sep));
            residuals.push(to_ids(&res));
        }
        let rip = RipSequence {
            cliques,
            separators,
            residuals,
        };
        debug_assert!(rip.validate(self).is_ok(), "{:?}", rip.validate(self));
        Ok(rip)
    }

    /// For each continuous vertex (in numbering order) the set of neighbours
    /// preceding it, split by kind. This is the factorization used by the
    /// conditional Gaussian regressions.
    pub fn continuous_parents(&self, numbering: &PerfectNumbering) -> Vec<CgParents> {
        let n = self.vertex_count();
        let mut position = vec![0usize; n];
        for (pos, &v) in numbering.order.iter().enumerate() {
            position[v.index()] = pos;
        }
        numbering
            .order
            .iter()
            .filter(|&&v| self.kind(v) == VertexKind::Continuous)
            .map(|&v| {
                let mut discrete = Vec::new();
                let mut continuous = Vec::new();
                for u in self.neighbors(v) {
                    if position[u.index()] < position[v.index()] {
                        match self.kind(u) {
                            VertexKind::Discrete => discrete.push(u),
                            VertexKind::Continuous => continuous.push(u),
                        }
                    }
                }
                discrete.sort_unstable();
                continuous.sort_unstable();
                CgParents {
                    target: v,
                    discrete,
                    continuous,
                }
            })
            .collect()
    }

    /// The subgraph induced by `keep`, with kinds and labels preserved.
    /// Returns the new graph together with the mapping new id -> old id.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<(MixedGraph, Vec<VertexId>)> {
        let mut g = MixedGraph::new();
        let mut mapping = Vec::with_capacity(keep.len());
        let mut old_to_new: HashMap<u32, VertexId> = HashMap::new();
        for &v in keep {
            self.check_vertex(v)?;
            if old_to_new.contains_key(&v.0) {
                continue;
            }
            let new_id = g.add_vertex(self.label(v), self.kind(v))?;
            old_to_new.insert(v.0, new_id);
            mapping.push(v);
        }
        for &v in &mapping {
            for u in self.neighbors(v) {
                if u.0 > v.0 {
                    if let Some(&nu) = old_to_new.get(&u.0) {
                        g.add_edge(old_to_new[&v.0], nu)?;
                    }
                }
            }
        }
        Ok((g, mapping))
    }

    /// The purely discrete part `G_Δ`.
    pub fn discrete_subgraph(&self) -> (MixedGraph, Vec<VertexId>) {
        self.induced_subgraph(&self.discrete_vertices())
            .expect("discrete vertices are valid")
    }
}

impl Default for MixedGraph {
    fn default() -> Self {
        Self::new()
    }
}

fn to_ids(set: &BTreeSet<u32>) -> Vec<VertexId> {
    set.iter().map(|&v| VertexId(v)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposability {
    Decomposable,
    NotDecomposable { cycle: Vec<String> },
}

/// A vertex ordering whose B-sets form a perfect sequence, with every
/// discrete vertex preceding every continuous one.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PerfectNumbering {
    pub order: Vec<VertexId>,
}

impl PerfectNumbering {
    /// Independent validity check: `order` must be a permutation of the
    /// vertex set, every B-set complete, parents of discrete vertices all
    /// discrete, each parent set contained in an earlier B-set (running
    /// intersection), and all discrete vertices numbered first.
    pub fn validate(&self, g: &MixedGraph) -> std::result::Result<(), String> {
        let n = g.vertex_count();
        if self.order.len() != n {
            return Err(format!("order has {} entries, graph has {n}", self.order.len()));
        }
        let mut seen = vec![false; n];
        for &v in &self.order {
            if v.index() >= n || seen[v.index()] {
                return Err(format!("order is not a permutation at {:?}", v));
            }
            seen[v.index()] = true;
        }
        let mut position = vec![0usize; n];
        for (pos, &v) in self.order.iter().enumerate() {
            position[v.index()] = pos;
        }
        let mut seen_continuous = false;
        for (pos, &v) in self.order.iter().enumerate() {
            match g.kind(v) {
                VertexKind::Continuous => seen_continuous = true,
                VertexKind::Discrete if seen_continuous => {
                    return Err(format!(
                        "discrete vertex '{}' numbered after a continuous vertex",
                        g.label(v)
                    ));
                }
                _ => {}
            }
            let parents: Vec<VertexId> = g
                .neighbors(v)
                .filter(|u| position[u.index()] < pos)
                .collect();
            for (i, &u) in parents.iter().enumerate() {
                for &w in &parents[i + 1..] {
                    if !g.has_edge(u, w) {
                        return Err(format!(
                            "B-set of '{}' not complete: '{}' and '{}' not adjacent",
                            g.label(v),
                            g.label(u),
                            g.label(w)
                        ));
                    }
                }
            }
            if g.kind(v) == VertexKind::Discrete
                && parents.iter().any(|&u| g.kind(u) == VertexKind::Continuous)
            {
                return Err(format!(
                    "discrete vertex '{}' has a continuous parent",
                    g.label(v)
                ));
            }
            if !parents.is_empty() {
                // Running intersection for the B-set sequence: pa(v) must sit
                // inside the B-set of its last-numbered member.
                let last = *parents
                    .iter()
                    .max_by_key(|u| position[u.index()])
                    .expect("non-empty");
                let b_last: BTreeSet<u32> = g
                    .neighbors(last)
                    .filter(|u| position[u.index()] < position[last.index()])
                    .map(|u| u.0)
                    .chain(std::iter::once(last.0))
                    .collect();
                if !parents.iter().all(|u| b_last.contains(&u.0)) {
                    return Err(format!(
                        "parent set of '{}' not contained in an earlier B-set",
                        g.label(v)
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Parent sets of one continuous vertex, split by kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CgParents {
    pub target: VertexId,
    pub discrete: Vec<VertexId>,
    pub continuous: Vec<VertexId>,
}

/// Maximal cliques ordered to satisfy the running intersection property,
/// with their separators and residuals (`separators[0]` and `residuals[0]`
/// refer to the first clique and are empty / the whole clique).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RipSequence {
    pub cliques: Vec<Vec<VertexId>>,
    pub separators: Vec<Vec<VertexId>>,
    pub residuals: Vec<Vec<VertexId>>,
}

impl RipSequence {
    /// Mechanical check of the defining properties: cliques cover the vertex
    /// set, each separator is complete and contained in an earlier clique,
    /// and every residual is all-continuous or its separator all-discrete.
    pub fn validate(&self, g: &MixedGraph) -> std::result::Result<(), String> {
        let k = self.cliques.len();
        if self.separators.len() != k || self.residuals.len() != k {
            return Err("length mismatch between cliques/separators/residuals".into());
        }
        let mut union: BTreeSet<u32> = BTreeSet::new();
        for c in &self.cliques {
            for (i, &u) in c.iter().enumerate() {
                for &w in &c[i + 1..] {
                    if !g.has_edge(u, w) {
                        return Err(format!(
                            "clique not complete: '{}' and '{}'",
                            g.label(u),
                            g.label(w)
                        ));
                    }
                }
            }
            union.extend(c.iter().map(|v| v.0));
        }
        if union.len() != g.vertex_count() {
            return Err("cliques do not cover the vertex set".into());
        }
        let mut history: BTreeSet<u32> = BTreeSet::new();
        for idx in 0..k {
            let clique: BTreeSet<u32> = self.cliques[idx].iter().map(|v| v.0).collect();
            let sep: BTreeSet<u32> = self.separators[idx].iter().map(|v| v.0).collect();
            let res: BTreeSet<u32> = self.residuals[idx].iter().map(|v| v.0).collect();
            let expected_sep: BTreeSet<u32> = clique.intersection(&history).copied().collect();
            if sep != expected_sep {
                return Err(format!("separator {idx} does not equal C ∩ H"));
            }
            let expected_res: BTreeSet<u32> = clique.difference(&sep).copied().collect();
            if res != expected_res {
                return Err(format!("residual {idx} does not equal C \\ S"));
            }
            if idx > 0 {
                let contained = self.cliques[..idx].iter().any(|earlier| {
                    let e: BTreeSet<u32> = earlier.iter().map(|v| v.0).collect();
                    sep.is_subset(&e)
                });
                if !contained {
                    return Err(format!("separator {idx} not contained in an earlier clique"));
                }
                let res_continuous = res
                    .iter()
                    .all(|&v| g.kind(VertexId(v)) == VertexKind::Continuous);
                let sep_discrete = sep
                    .iter()
                    .all(|&v| g.kind(VertexId(v)) == VertexKind::Discrete);
                if !res_continuous && !sep_discrete {
                    return Err(format!(
                        "clique {idx} violates the mixed condition (residual has a discrete vertex and separator a continuous one)"
                    ));
                }
            }
            history.extend(clique.iter().copied());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The six-vertex example graph: discrete b, c, f; continuous a, d, e.
    pub(crate) fn example_graph() -> MixedGraph {
        MixedGraph::from_parts(
            &[
                ("a", VertexKind::Continuous),
                ("b", VertexKind::Discrete),
                ("c", VertexKind::Discrete),
                ("d", VertexKind::Continuous),
                ("e", VertexKind::Continuous),
                ("f", VertexKind::Discrete),
            ],
            &[
                ("a", "b"),
                ("b", "c"),
                ("b", "d"),
                ("c", "d"),
                ("c", "e"),
                ("d", "e"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn star_graph_connects_discrete_vertices() {
        let g = example_graph();
        let star = g.star_graph();
        assert_eq!(star.vertex_count(), 7);
        let s = star.vertex_by_label("*").unwrap();
        let mut nbrs: Vec<String> = star.neighbors(s).map(|v| star.label(v).to_string()).collect();
        nbrs.sort();
        assert_eq!(nbrs, ["b", "c", "f"]);
        // original edges untouched
        assert_eq!(star.edge_count(), g.edge_count() + 3);
    }

    #[test]
    fn star_graph_no_discrete_adds_isolated_vertex() {
        let g = MixedGraph::from_parts(
            &[("x", VertexKind::Continuous), ("y", VertexKind::Continuous)],
            &[("x", "y")],
        )
        .unwrap();
        let star = g.star_graph();
        let s = star.vertex_by_label("*").unwrap();
        assert_eq!(star.neighbors(s).count(), 0);
        assert_eq!(star.edge_count(), 1);
    }

    #[test]
    fn star_graph_two_adjacent_discrete_forms_triangle() {
        let g = MixedGraph::from_parts(
            &[("p", VertexKind::Discrete), ("q", VertexKind::Discrete)],
            &[("p", "q")],
        )
        .unwrap();
        let star = g.star_graph();
        let s = star.vertex_by_label("*").unwrap();
        let p = star.vertex_by_label("p").unwrap();
        let q = star.vertex_by_label("q").unwrap();
        assert!(star.has_edge(s, p) && star.has_edge(s, q) && star.has_edge(p, q));
    }

    #[test]
    fn example_graph_is_decomposable() {
        assert!(example_graph().is_decomposable());
        assert_eq!(example_graph().decomposability(), Decomposability::Decomposable);
    }

    #[test]
    fn chordless_four_cycle_is_not_decomposable() {
        let g = MixedGraph::from_parts(
            &[
                ("w", VertexKind::Continuous),
                ("x", VertexKind::Continuous),
                ("y", VertexKind::Continuous),
                ("z", VertexKind::Continuous),
            ],
            &[("w", "x"), ("x", "y"), ("y", "z"), ("z", "w")],
        )
        .unwrap();
        assert!(!g.is_decomposable());
        match g.decomposability() {
            Decomposability::NotDecomposable { cycle } => {
                assert!(cycle.len() >= 4);
                // the witness must be a genuine cycle of the star graph
                let star = g.star_graph();
                let ids: Vec<VertexId> = cycle
                    .iter()
                    .map(|l| star.vertex_by_label(l).unwrap())
                    .collect();
                for i in 0..ids.len() {
                    let next = ids[(i + 1) % ids.len()];
                    assert!(star.has_edge(ids[i], next), "consecutive witness vertices adjacent");
                }
            }
            _ => panic!("expected a witness"),
        }
    }

    #[test]
    fn forbidden_path_is_not_decomposable() {
        // discrete d1, d2 joined only through a continuous vertex
        let g = MixedGraph::from_parts(
            &[
                ("d1", VertexKind::Discrete),
                ("g", VertexKind::Continuous),
                ("d2", VertexKind::Discrete),
            ],
            &[("d1", "g"), ("g", "d2")],
        )
        .unwrap();
        assert!(!g.is_decomposable());
        match g.decomposability() {
            Decomposability::NotDecomposable { cycle } => {
                assert!(cycle.contains(&"*".to_string()), "witness goes through the star vertex");
            }
            _ => panic!("expected witness"),
        }
    }

    #[test]
    fn perfect_numbering_on_example_graph() {
        let g = example_graph();
        let pn = g.perfect_numbering().unwrap();
        pn.validate(&g).unwrap();
        let labels: Vec<&str> = pn.order.iter().map(|&v| g.label(v)).collect();
        // deterministic given the lowest-index tie break
        assert_eq!(labels, ["b", "c", "f", "d", "e", "a"]);
    }

    #[test]
    fn perfect_numbering_trivial_cases() {
        let single = MixedGraph::from_parts(&[("v", VertexKind::Continuous)], &[]).unwrap();
        let pn = single.perfect_numbering().unwrap();
        assert_eq!(pn.order.len(), 1);

        let pair = MixedGraph::from_parts(
            &[("g", VertexKind::Continuous), ("d", VertexKind::Discrete)],
            &[("g", "d")],
        )
        .unwrap();
        let pn = pair.perfect_numbering().unwrap();
        let labels: Vec<&str> = pn.order.iter().map(|&v| pair.label(v)).collect();
        assert_eq!(labels, ["d", "g"]);
    }

    #[test]
    fn perfect_numbering_fails_on_non_decomposable() {
        let g = MixedGraph::from_parts(
            &[
                ("w", VertexKind::Continuous),
                ("x", VertexKind::Continuous),
                ("y", VertexKind::Continuous),
                ("z", VertexKind::Continuous),
            ],
            &[("w", "x"), ("x", "y"), ("y", "z"), ("z", "w")],
        )
        .unwrap();
        assert!(matches!(
            g.perfect_numbering(),
            Err(Error::NotDecomposable { .. })
        ));
    }

    #[test]
    fn rip_cliques_on_example_graph() {
        let g = example_graph();
        let rip = g.rip_cliques().unwrap();
        rip.validate(&g).unwrap();
        let mut cliques: Vec<Vec<String>> = rip
            .cliques
            .iter()
            .map(|c| c.iter().map(|&v| g.label(v).to_string()).collect())
            .collect();
        cliques.sort();
        assert_eq!(
            cliques,
            vec![
                vec!["a".to_string(), "b".to_string()],
                vec!["b".to_string(), "c".to_string(), "d".to_string()],
                vec!["c".to_string(), "d".to_string(), "e".to_string()],
                vec!["f".to_string()],
            ]
        );
    }

    #[test]
    fn rip_cliques_complete_graph_single_clique() {
        let g = MixedGraph::from_parts(
            &[
                ("x", VertexKind::Discrete),
                ("y", VertexKind::Discrete),
                ("z", VertexKind::Discrete),
            ],
            &[("x", "y"), ("x", "z"), ("y", "z")],
        )
        .unwrap();
        let rip = g.rip_cliques().unwrap();
        assert_eq!(rip.cliques.len(), 1);
        assert_eq!(rip.cliques[0].len(), 3);
        assert!(rip.separators[0].is_empty());
    }

    #[test]
    fn rip_cliques_disjoint_edges_have_empty_separator() {
        let g = MixedGraph::from_parts(
            &[
                ("p", VertexKind::Discrete),
                ("q", VertexKind::Discrete),
                ("r", VertexKind::Discrete),
                ("s", VertexKind::Discrete),
            ],
            &[("p", "q"), ("r", "s")],
        )
        .unwrap();
        let rip = g.rip_cliques().unwrap();
        rip.validate(&g).unwrap();
        assert_eq!(rip.cliques.len(), 2);
        assert!(rip.separators[1].is_empty());
    }

    #[test]
    fn continuous_parents_on_example_graph() {
        let g = example_graph();
        let pn = g.perfect_numbering().unwrap();
        let parents = g.continuous_parents(&pn);
        let by_label = |target: &str| {
            parents
                .iter()
                .find(|p| g.label(p.target) == target)
                .unwrap()
        };
        let labels = |ids: &[VertexId]| -> Vec<&str> { ids.iter().map(|&v| g.label(v)).collect() };
        assert_eq!(labels(&by_label("d").discrete), ["b", "c"]);
        assert!(by_label("d").continuous.is_empty());
        assert_eq!(labels(&by_label("e").discrete), ["c"]);
        assert_eq!(labels(&by_label("e").continuous), ["d"]);
        assert_eq!(labels(&by_label("a").discrete), ["b"]);
        assert!(by_label("a").continuous.is_empty());
    }

    #[test]
    fn continuous_parents_isolated_vertex_is_empty() {
        let g = MixedGraph::from_parts(&[("y", VertexKind::Continuous)], &[]).unwrap();
        let pn = g.perfect_numbering().unwrap();
        let parents = g.continuous_parents(&pn);
        assert_eq!(parents.len(), 1);
        assert!(parents[0].discrete.is_empty() && parents[0].continuous.is_empty());
    }

    /// Reconstruction of the cover-type subgraph built from six regression
    /// closures; v1's only neighbours are the two discrete soil indicators.
    #[test]
    fn covertype_subgraph_parents() {
        let mut vertices = vec![
            ("v52", VertexKind::Discrete),
            ("v53", VertexKind::Discrete),
            ("v54", VertexKind::Discrete),
        ];
        for name in [
            "v1", "v2", "v3", "v5", "v6", "v7", "v8", "v9", "v10", "v11", "v12",
        ] {
            vertices.push((name, VertexKind::Continuous));
        }
        let closures: Vec<Vec<&str>> = vec![
            vec!["v1", "v52", "v54"],
            vec!["v5", "v6", "v10", "v11"],
            vec!["v7", "v2", "v3", "v52", "v53"],
            vec!["v8", "v2", "v3", "v7", "v52", "v53"],
            vec!["v9", "v2", "v3", "v7", "v8", "v52", "v53"],
            vec!["v10", "v11", "v12"],
        ];
        let mut edges: Vec<(&str, &str)> = Vec::new();
        for cl in &closures {
            for i in 0..cl.len() {
                for j in i + 1..cl.len() {
                    edges.push((cl[i], cl[j]));
                }
            }
        }
        let mut g = MixedGraph::new();
        for (l, k) in &vertices {
            g.add_vertex(l, *k).unwrap();
        }
        for (a, b) in edges {
            let a = g.vertex_by_label(a).unwrap();
            let b = g.vertex_by_label(b).unwrap();
            g.add_edge(a, b).unwrap();
        }
        assert!(g.is_decomposable());
        let pn = g.perfect_numbering().unwrap();
        pn.validate(&g).unwrap();
        let parents = g.continuous_parents(&pn);
        let v1 = parents
            .iter()
            .find(|p| g.label(p.target) == "v1")
            .unwrap();
        let mut discrete: Vec<&str> = v1.discrete.iter().map(|&v| g.label(v)).collect();
        discrete.sort();
        assert_eq!(discrete, ["v52", "v54"]);
        assert!(v1.continuous.is_empty());
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = example_graph();
        let delta = g.discrete_vertices();
        let (sub, mapping) = g.induced_subgraph(&delta).unwrap();
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(sub.edge_count(), 1); // only b-c survives
        let b = sub.vertex_by_label("b").unwrap();
        let c = sub.vertex_by_label("c").unwrap();
        assert!(sub.has_edge(b, c));
        assert_eq!(mapping.len(), 3);

        let all: Vec<VertexId> = g.vertex_ids().collect();
        let (full, _) = g.induced_subgraph(&all).unwrap();
        assert_eq!(full.vertex_count(), g.vertex_count());
        assert_eq!(full.edge_count(), g.edge_count());

        let (empty, _) = g.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.vertex_count(), 0);
    }

    #[test]
    fn induced_subgraph_unknown_vertex() {
        let g = example_graph();
        assert!(matches!(
            g.induced_subgraph(&[VertexId(99)]),
            Err(Error::UnknownVertex { .. })
        ));
    }

    #[test]
    fn graph_construction_errors() {
        let mut g = MixedGraph::new();
        let a = g.add_vertex("a", VertexKind::Discrete).unwrap();
        assert!(matches!(
            g.add_vertex("a", VertexKind::Continuous),
            Err(Error::DuplicateLabel { .. })
        ));
        assert!(matches!(g.add_edge(a, a), Err(Error::SelfLoop { .. })));
        let b = g.add_vertex("b", VertexKind::Discrete).unwrap();
        assert!(g.add_edge(a, b).unwrap());
        assert!(!g.add_edge(b, a).unwrap()); // duplicate reported, not an error
    }
}
