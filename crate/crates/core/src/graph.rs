//! Bipartite graphs with a fixed bipartition and positive integer edge weights.
//!
//! Vertices are dense 0-based indices per side. Weights count merged sibling
//! leaves, so they are exact integers and a crossing between edges of weight
//! `w` and `w'` costs `w * w'`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported total edge weight. Keeps every weighted crossing sum
/// below `2^63`, so crossing counts fit in a `u64`.
pub const MAX_TOTAL_WEIGHT: u64 = u32::MAX as u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::X => f.write_str("X"),
            Side::Y => f.write_str("Y"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub side: Side,
    pub index: usize,
}

impl VertexId {
    pub fn x(index: usize) -> Self {
        VertexId {
            side: Side::X,
            index,
        }
    }

    pub fn y(index: usize) -> Self {
        VertexId {
            side: Side::Y,
            index,
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::X => write!(f, "x{}", self.index),
            Side::Y => write!(f, "y{}", self.index),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub x: usize,
    pub y: usize,
    pub weight: u64,
}

/// Two leaves that share their only neighbour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SiblingPair {
    pub leaf_a: VertexId,
    pub leaf_b: VertexId,
    pub parent: VertexId,
}

/// A simple bipartite graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    x_count: usize,
    y_count: usize,
    /// Sorted by `(x, y)`.
    edges: Vec<Edge>,
    /// Edge indices per X vertex, ascending by `y`.
    x_adj: Vec<Vec<usize>>,
    /// Edge indices per Y vertex, ascending by `x`.
    y_adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Builds and validates a graph from `(x, y, weight)` triples.
    pub fn new<I>(x_count: usize, y_count: usize, edge_list: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut edges = Vec::new();
        let mut total: u64 = 0;
        for (x, y, weight) in edge_list {
            if x >= x_count {
                return Err(Error::IndexOutOfRange {
                    vertex: VertexId::x(x),
                    len: x_count,
                });
            }
            if y >= y_count {
                return Err(Error::IndexOutOfRange {
                    vertex: VertexId::y(y),
                    len: y_count,
                });
            }
            if weight == 0 {
                return Err(Error::ZeroWeight {
                    x: VertexId::x(x),
                    y: VertexId::y(y),
                });
            }
            total = total
                .checked_add(weight)
                .filter(|&t| t <= MAX_TOTAL_WEIGHT)
                .ok_or(Error::WeightOverflow {
                    max: MAX_TOTAL_WEIGHT,
                })?;
            edges.push(Edge { x, y, weight });
        }
        edges.sort_by_key(|e| (e.x, e.y));
        if let Some(w) = edges
            .windows(2)
            .find(|w| (w[0].x, w[0].y) == (w[1].x, w[1].y))
        {
            return Err(Error::DuplicateEdge {
                x: VertexId::x(w[0].x),
                y: VertexId::y(w[0].y),
            });
        }

        let mut x_adj = vec![Vec::new(); x_count];
        let mut y_adj = vec![Vec::new(); y_count];
        for (i, e) in edges.iter().enumerate() {
            x_adj[e.x].push(i);
            y_adj[e.y].push(i);
        }
        Ok(BipartiteGraph {
            x_count,
            y_count,
            edges,
            x_adj,
            y_adj,
        })
    }

    /// Unit-weight convenience constructor.
    pub fn unweighted<I>(x_count: usize, y_count: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(x_count, y_count, pairs.into_iter().map(|(x, y)| (x, y, 1)))
    }

    /// `K_{a,b}` with unit weights.
    pub fn complete(a: usize, b: usize) -> Self {
        let pairs = (0..a).flat_map(|x| (0..b).map(move |y| (x, y)));
        Self::unweighted(a, b, pairs).expect("complete bipartite graph is valid")
    }

    pub fn empty() -> Self {
        Self::new(0, 0, []).expect("empty graph is valid")
    }

    pub fn x_count(&self) -> usize {
        self.x_count
    }

    pub fn y_count(&self) -> usize {
        self.y_count
    }

    pub fn side_len(&self, side: Side) -> usize {
        match side {
            Side::X => self.x_count,
            Side::Y => self.y_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.x_count + self.y_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    fn adj(&self, v: VertexId) -> &[usize] {
        match v.side {
            Side::X => &self.x_adj[v.index],
            Side::Y => &self.y_adj[v.index],
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj(v).len()
    }

    /// Neighbours of `v` in ascending index order, as `(index, weight)`;
    /// the indices live on the opposite side.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (usize, u64)> + '_ {
        let side = v.side;
        self.adj(v).iter().map(move |&i| {
            let e = &self.edges[i];
            match side {
                Side::X => (e.y, e.weight),
                Side::Y => (e.x, e.weight),
            }
        })
    }

    /// Edge indices incident to `v`, ordered as in [`Self::neighbors`].
    pub fn incident_edges(&self, v: VertexId) -> &[usize] {
        self.adj(v)
    }

    pub fn edge_between(&self, x: usize, y: usize) -> Option<&Edge> {
        let adj = self.x_adj.get(x)?;
        adj.binary_search_by_key(&y, |&i| self.edges[i].y)
            .ok()
            .map(|pos| &self.edges[adj[pos]])
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.edge_between(x, y).is_some()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        let ny = self.y_count;
        (0..self.x_count)
            .map(VertexId::x)
            .chain((0..ny).map(VertexId::y))
    }

    /// True iff every edge with both endpoints of degree at least two has weight one.
    pub fn is_leaf_edge_weighted(&self) -> bool {
        self.edges.iter().all(|e| {
            e.weight == 1 || self.degree(VertexId::x(e.x)) < 2 || self.degree(VertexId::y(e.y)) < 2
        })
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    /// Component label per vertex (X vertices first, then Y) and the number of
    /// components. Labels follow the order components are first reached when
    /// scanning X indices, then Y indices.
    fn component_labels(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let v = self.unflatten(u);
                for (w, _) in self.neighbors(v) {
                    let wf = self.flatten(VertexId {
                        side: v.side.opposite(),
                        index: w,
                    });
                    if label[wf] == usize::MAX {
                        label[wf] = count;
                        queue.push_back(wf);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub(crate) fn flatten(&self, v: VertexId) -> usize {
        match v.side {
            Side::X => v.index,
            Side::Y => self.x_count + v.index,
        }
    }

    pub(crate) fn unflatten(&self, i: usize) -> VertexId {
        if i < self.x_count {
            VertexId::x(i)
        } else {
            VertexId::y(i - self.x_count)
        }
    }

    /// Maximal connected subgraphs, re-indexed densely. Ordered by smallest
    /// original X index, then smallest Y index (for X-free components).
    pub fn connected_components(&self) -> Vec<Component> {
        let (label, count) = self.component_labels();
        let mut comps: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), Vec::new()); count];
        for x in 0..self.x_count {
            comps[label[x]].0.push(x);
        }
        for y in 0..self.y_count {
            comps[label[self.x_count + y]].1.push(y);
        }

        let mut x_local = vec![0; self.x_count];
        let mut y_local = vec![0; self.y_count];
        for (xs, ys) in &comps {
            for (i, &x) in xs.iter().enumerate() {
                x_local[x] = i;
            }
            for (j, &y) in ys.iter().enumerate() {
                y_local[y] = j;
            }
        }
        let mut comp_edges: Vec<Vec<(usize, usize, u64)>> = vec![Vec::new(); count];
        for e in &self.edges {
            comp_edges[label[e.x]].push((x_local[e.x], y_local[e.y], e.weight));
        }

        comps
            .into_iter()
            .zip(comp_edges)
            .map(|((xs, ys), edges)| Component {
                graph: BipartiteGraph::new(xs.len(), ys.len(), edges)
                    .expect("subgraph of a valid graph is valid"),
                x_vertices: xs,
                y_vertices: ys,
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    /// Every unordered pair of degree-1 vertices with a common neighbour.
    pub fn sibling_pairs(&self) -> Vec<SiblingPair> {
        let mut pairs = Vec::new();
        for parent in self.vertices() {
            let side = parent.side.opposite();
            let leaves: Vec<usize> = self
                .neighbors(parent)
                .map(|(w, _)| w)
                .filter(|&w| self.degree(VertexId { side, index: w }) == 1)
                .collect();
            for (i, &a) in leaves.iter().enumerate() {
                for &b in &leaves[i + 1..] {
                    pairs.push(SiblingPair {
                        leaf_a: VertexId { side, index: a },
                        leaf_b: VertexId { side, index: b },
                        parent,
                    });
                }
            }
        }
        pairs
    }

    pub fn has_sibling_pairs(&self) -> bool {
        self.vertices().any(|v| {
            let side = v.side.opposite();
            self.neighbors(v)
                .filter(|&(w, _)| self.degree(VertexId { side, index: w }) == 1)
                .nth(1)
                .is_some()
        })
    }

    /// Replaces the leaf neighbours of every non-leaf vertex by a single leaf
    /// carrying the summed weight. The bipartite crossing number is unchanged:
    /// some optimal drawing keeps sibling leaves consecutive.
    pub fn merge_sibling_leaves(&self) -> BipartiteGraph {
        self.merge_sibling_leaves_mapped().graph
    }

    /// As [`Self::merge_sibling_leaves`], also returning which original
    /// vertices each merged vertex stands for. The smallest-index leaf of each
    /// sibling group is the representative.
    pub fn merge_sibling_leaves_mapped(&self) -> SiblingMerge {
        let mut removed_x = vec![false; self.x_count];
        let mut removed_y = vec![false; self.y_count];
        let mut extra: Vec<u64> = vec![0; self.edges.len()];
        let mut absorbed_x: Vec<Vec<usize>> = vec![Vec::new(); self.x_count];
        let mut absorbed_y: Vec<Vec<usize>> = vec![Vec::new(); self.y_count];

        for parent in self.vertices() {
            if self.degree(parent) < 2 {
                continue;
            }
            let side = parent.side.opposite();
            let leaf_edges: Vec<(usize, usize)> = self
                .incident_edges(parent)
                .iter()
                .map(|&ei| {
                    let e = &self.edges[ei];
                    (if side == Side::X { e.x } else { e.y }, ei)
                })
                .filter(|&(w, _)| self.degree(VertexId { side, index: w }) == 1)
                .collect();
            let Some((&(rep, rep_edge), rest)) = leaf_edges.split_first() else {
                continue;
            };
            for &(leaf, ei) in rest {
                extra[rep_edge] += self.edges[ei].weight;
                match side {
                    Side::X => {
                        removed_x[leaf] = true;
                        absorbed_x[rep].push(leaf);
                    }
                    Side::Y => {
                        removed_y[leaf] = true;
                        absorbed_y[rep].push(leaf);
                    }
                }
            }
        }

        let (x_members, x_new) = survivors(&removed_x, absorbed_x);
        let (y_members, y_new) = survivors(&removed_y, absorbed_y);
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| !removed_x[e.x] && !removed_y[e.y])
            .map(|(i, e)| (x_new[e.x], y_new[e.y], e.weight + extra[i]));
        let graph = BipartiteGraph::new(x_members.len(), y_members.len(), edges)
            .expect("merging preserves validity");
        SiblingMerge {
            graph,
            x_members,
            y_members,
        }
    }

    /// `max(0, m - n + c)`: a crossing-free two-layer graph is a forest, so at
    /// least this many edges must each take part in some crossing.
    pub fn crossing_lower_bound(&self) -> u64 {
        let m = self.edge_count() as u64;
        let forest_edges = (self.vertex_count() - self.component_count()) as u64;
        m.saturating_sub(forest_edges)
    }

    /// True iff every component is a caterpillar: a tree whose non-leaf
    /// vertices induce a path. These are exactly the graphs with a
    /// crossing-free two-layer drawing.
    pub fn is_caterpillar_forest(&self) -> bool {
        if self.edge_count() + self.component_count() != self.vertex_count() {
            return false;
        }
        self.vertices().all(|v| {
            if self.degree(v) < 2 {
                return true;
            }
            let side = v.side.opposite();
            let inner = self
                .neighbors(v)
                .filter(|&(w, _)| self.degree(VertexId { side, index: w }) >= 2)
                .count();
            inner <= 2
        })
    }

    /// Crossing-free layouts `(fx, fy)` as rank arrays, when the graph is a
    /// connected caterpillar. Walks the spine, placing each spine vertex and
    /// then its leaves on the opposite layer.
    pub fn caterpillar_ranks(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        if !self.is_connected() || !self.is_caterpillar_forest() {
            return None;
        }
        let mut x_order = Vec::with_capacity(self.x_count);
        let mut y_order = Vec::with_capacity(self.y_count);
        if self.edge_count() == 0 {
            // single vertex (or nothing at all)
            x_order.extend(0..self.x_count);
            y_order.extend(0..self.y_count);
        } else {
            let inner = |v: VertexId| self.degree(v) >= 2;
            let start = self
                .vertices()
                .filter(|&v| inner(v))
                .find(|&v| {
                    let side = v.side.opposite();
                    self.neighbors(v)
                        .filter(|&(w, _)| inner(VertexId { side, index: w }))
                        .count()
                        <= 1
                })
                // no inner vertices: a single edge
                .unwrap_or(VertexId::x(0));

            let mut prev: Option<VertexId> = None;
            let mut cur = Some(start);
            while let Some(v) = cur {
                let side = v.side.opposite();
                let (own, opp) = match v.side {
                    Side::X => (&mut x_order, &mut y_order),
                    Side::Y => (&mut y_order, &mut x_order),
                };
                own.push(v.index);
                let mut next = None;
                for (w, _) in self.neighbors(v) {
                    let wv = VertexId { side, index: w };
                    if self.degree(wv) == 1 {
                        opp.push(w);
                    } else if inner(wv) && Some(wv) != prev {
                        next = Some(wv);
                    }
                }
                prev = Some(v);
                cur = next;
            }
        }
        Some((order_to_ranks(&x_order), order_to_ranks(&y_order)))
    }
}

fn order_to_ranks(order: &[usize]) -> Vec<usize> {
    let mut rank = vec![0; order.len()];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    rank
}

fn survivors(removed: &[bool], absorbed: Vec<Vec<usize>>) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut members = Vec::new();
    let mut new_index = vec![usize::MAX; removed.len()];
    for (v, extra) in absorbed.into_iter().enumerate() {
        if removed[v] {
            continue;
        }
        new_index[v] = members.len();
        let mut group = Vec::with_capacity(1 + extra.len());
        group.push(v);
        group.extend(extra);
        group.sort_unstable();
        members.push(group);
    }
    (members, new_index)
}

/// A connected component together with the original indices of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: BipartiteGraph,
    /// Original X index of each local X vertex, ascending.
    pub x_vertices: Vec<usize>,
    /// Original Y index of each local Y vertex, ascending.
    pub y_vertices: Vec<usize>,
}

/// Result of sibling-leaf merging.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiblingMerge {
    pub graph: BipartiteGraph,
    /// Original X vertices represented by each merged X vertex, ascending.
    pub x_members: Vec<Vec<usize>>,
    pub y_members: Vec<Vec<usize>>,
}

impl SiblingMerge {
    /// Expands ranks on the merged graph into ranks on the original graph,
    /// laying out the members of each merged vertex consecutively.
    pub fn lift_ranks(&self, side: Side, merged_rank: &[usize]) -> Vec<usize> {
        let members = match side {
            Side::X => &self.x_members,
            Side::Y => &self.y_members,
        };
        let mut order = vec![0; merged_rank.len()];
        for (v, &r) in merged_rank.iter().enumerate() {
            order[r] = v;
        }
        let total: usize = members.iter().map(Vec::len).sum();
        let mut rank = vec![0; total];
        let mut next = 0;
        for v in order {
            for &orig in &members[v] {
                rank[orig] = next;
                next += 1;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> BipartiteGraph {
        BipartiteGraph::complete(2, 2)
    }

    fn path_xyx() -> BipartiteGraph {
        BipartiteGraph::unweighted(2, 1, [(0, 0), (1, 0)]).unwrap()
    }

    #[test]
    fn builds_c4_and_star() {
        let g = BipartiteGraph::new(2, 2, [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g, c4());
        let star = BipartiteGraph::complete(1, 5);
        assert_eq!(star.degree(VertexId::x(0)), 5);
        assert!(star.has_edge(0, 4));
    }

    #[test]
    fn rejects_bad_input() {
        let err = BipartiteGraph::new(1, 1, [(0, 0, 1), (0, 0, 1)]).unwrap_err();
        assert_eq!(
            err,
            Error::DuplicateEdge {
                x: VertexId::x(0),
                y: VertexId::y(0)
            }
        );
        assert!(err.to_string().contains("x0-y0"));
        assert!(matches!(
            BipartiteGraph::new(1, 1, [(0, 1, 1)]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            BipartiteGraph::new(1, 1, [(0, 0, 0)]),
            Err(Error::ZeroWeight { .. })
        ));
        assert!(matches!(
            BipartiteGraph::new(2, 1, [(0, 0, MAX_TOTAL_WEIGHT), (1, 0, 1)]),
            Err(Error::WeightOverflow { .. })
        ));
    }

    #[test]
    fn components() {
        let two = BipartiteGraph::unweighted(2, 2, [(0, 0), (1, 1)]).unwrap();
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        for (i, c) in comps.iter().enumerate() {
            assert_eq!(c.graph, BipartiteGraph::complete(1, 1));
            assert_eq!(c.x_vertices, vec![i]);
        }

        let comps = c4().connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].graph, c4());

        let star_plus = BipartiteGraph::unweighted(1, 4, [(0, 0), (0, 1), (0, 3)]).unwrap();
        let comps = star_plus.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].graph, BipartiteGraph::complete(1, 3));
        assert_eq!(comps[0].y_vertices, vec![0, 1, 3]);
        assert_eq!(comps[1].graph.vertex_count(), 1);
        assert_eq!(comps[1].y_vertices, vec![2]);
    }

    #[test]
    fn sibling_pairs() {
        assert_eq!(BipartiteGraph::complete(1, 5).sibling_pairs().len(), 10);
        assert!(c4().sibling_pairs().is_empty());
        let pairs = path_xyx().sibling_pairs();
        assert_eq!(
            pairs,
            vec![SiblingPair {
                leaf_a: VertexId::x(0),
                leaf_b: VertexId::x(1),
                parent: VertexId::y(0)
            }]
        );
        assert!(path_xyx().has_sibling_pairs());
        assert!(!BipartiteGraph::complete(1, 1).has_sibling_pairs());
    }

    #[test]
    fn merge_star_into_weighted_edge() {
        let merged = BipartiteGraph::complete(1, 5).merge_sibling_leaves_mapped();
        assert_eq!(
            merged.graph,
            BipartiteGraph::new(1, 1, [(0, 0, 5)]).unwrap()
        );
        assert_eq!(merged.y_members, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(c4().merge_sibling_leaves(), c4());
    }

    #[test]
    fn merge_keeps_non_leaf_neighbours() {
        // x0 has leaves y0 (2) and y1 (3) plus y2, which also reaches x1 (a leaf).
        let g = BipartiteGraph::new(2, 3, [(0, 0, 2), (0, 1, 3), (0, 2, 1), (1, 2, 1)]).unwrap();
        let m = g.merge_sibling_leaves_mapped();
        assert_eq!(
            m.graph,
            BipartiteGraph::new(2, 2, [(0, 0, 5), (0, 1, 1), (1, 1, 1)]).unwrap()
        );
        assert_eq!(m.y_members, vec![vec![0, 1], vec![2]]);
        assert!(m.graph.is_leaf_edge_weighted());
        assert_eq!(m.graph.merge_sibling_leaves(), m.graph);
    }

    #[test]
    fn lift_expands_members_consecutively() {
        let m = BipartiteGraph::complete(1, 3).merge_sibling_leaves_mapped();
        assert_eq!(m.lift_ranks(Side::Y, &[0]), vec![0, 1, 2]);
        assert_eq!(m.lift_ranks(Side::X, &[0]), vec![0]);
    }

    #[test]
    fn lower_bound() {
        assert_eq!(c4().crossing_lower_bound(), 1);
        assert_eq!(path_xyx().crossing_lower_bound(), 0);
        assert_eq!(BipartiteGraph::complete(3, 3).crossing_lower_bound(), 4);
        assert_eq!(BipartiteGraph::empty().crossing_lower_bound(), 0);
    }

    #[test]
    fn caterpillars() {
        let path =
            BipartiteGraph::unweighted(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]).unwrap();
        assert!(path.is_caterpillar_forest());
        assert!(!c4().is_caterpillar_forest());
        // K_{1,3} with every edge subdivided: centre x0, middles y0..y2, tips x1..x3.
        let spider =
            BipartiteGraph::unweighted(4, 3, [(0, 0), (0, 1), (0, 2), (1, 0), (2, 1), (3, 2)])
                .unwrap();
        assert!(!spider.is_caterpillar_forest());
        assert!(BipartiteGraph::empty().is_caterpillar_forest());
    }

    #[test]
    fn caterpillar_ranks_are_permutations() {
        let g = BipartiteGraph::unweighted(
            4,
            4,
            [(0, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 1), (3, 3)],
        )
        .unwrap();
        let (fx, fy) = g.caterpillar_ranks().unwrap();
        let mut sx = fx.clone();
        sx.sort_unstable();
        assert_eq!(sx, vec![0, 1, 2, 3]);
        let mut sy = fy.clone();
        sy.sort_unstable();
        assert_eq!(sy, vec![0, 1, 2, 3]);
        assert!(c4().caterpillar_ranks().is_none());
    }
}
