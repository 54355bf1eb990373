//! Two-layer drawings and weighted crossing counts.
//!
//! A crossing is a pair of edges `(x, y)`, `(x', y')` with `x` before `x'`
//! on the X layer and `y'` before `y` on the Y layer. Each unordered pair is
//! counted once and contributes the product of the two edge weights.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side, VertexId};

/// True iff `rank` is a permutation of `0..rank.len()`.
pub fn validate_layout(rank: &[usize]) -> bool {
    let mut seen = vec![false; rank.len()];
    for &r in rank {
        match seen.get_mut(r) {
            Some(s) if !*s => *s = true,
            _ => return false,
        }
    }
    true
}

/// A bijection from the vertices of one side to ranks `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Layout {
    side: Side,
    rank: Vec<usize>,
}

impl Layout {
    pub fn new(side: Side, rank: Vec<usize>) -> Result<Self> {
        if !validate_layout(&rank) {
            return Err(Error::InvalidLayout {
                side,
                reason: format!("{rank:?} is not a permutation"),
            });
        }
        Ok(Layout { side, rank })
    }

    pub(crate) fn new_unchecked(side: Side, rank: Vec<usize>) -> Self {
        debug_assert!(validate_layout(&rank));
        Layout { side, rank }
    }

    pub fn identity(side: Side, n: usize) -> Self {
        Layout {
            side,
            rank: (0..n).collect(),
        }
    }

    /// Builds a layout from the left-to-right vertex order.
    pub fn from_order(side: Side, order: &[usize]) -> Result<Self> {
        if !validate_layout(order) {
            return Err(Error::InvalidLayout {
                side,
                reason: format!("order {order:?} is not a permutation"),
            });
        }
        Ok(Layout {
            side,
            rank: invert(order),
        })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn into_ranks(self) -> Vec<usize> {
        self.rank
    }

    /// Vertices in rank order.
    pub fn order(&self) -> Vec<usize> {
        invert(&self.rank)
    }

    /// Mirror image: rank `r` becomes `n - 1 - r`.
    pub fn reversed(&self) -> Layout {
        let n = self.rank.len();
        Layout {
            side: self.side,
            rank: self.rank.iter().map(|&r| n - 1 - r).collect(),
        }
    }
}

pub(crate) fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// A graph with a layout on each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    graph: BipartiteGraph,
    fx: Layout,
    fy: Layout,
}

impl Drawing {
    pub fn new(graph: BipartiteGraph, fx: Layout, fy: Layout) -> Result<Self> {
        for (layout, side) in [(&fx, Side::X), (&fy, Side::Y)] {
            if layout.side() != side || layout.len() != graph.side_len(side) {
                return Err(Error::InvalidLayout {
                    side,
                    reason: format!(
                        "{}-layout of length {} does not match {} vertices",
                        layout.side(),
                        layout.len(),
                        graph.side_len(side)
                    ),
                });
            }
        }
        Ok(Drawing { graph, fx, fy })
    }

    pub fn from_ranks(graph: BipartiteGraph, fx: Vec<usize>, fy: Vec<usize>) -> Result<Self> {
        let fx = Layout::new(Side::X, fx)?;
        let fy = Layout::new(Side::Y, fy)?;
        Self::new(graph, fx, fy)
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn fx(&self) -> &Layout {
        &self.fx
    }

    pub fn fy(&self) -> &Layout {
        &self.fy
    }

    pub fn layout(&self, side: Side) -> &Layout {
        match side {
            Side::X => &self.fx,
            Side::Y => &self.fy,
        }
    }

    /// Quadratic scan over all edge pairs.
    pub fn crossing_number_naive(&self) -> u64 {
        naive_crossings(&self.graph, self.fx.ranks(), self.fy.ranks())
    }

    /// Weighted inversion count in `O(m log m)`.
    pub fn crossing_number_fast(&self) -> u64 {
        CrossingCounter::new(&self.graph).count(self.fx.ranks(), self.fy.ranks())
    }
}

/// Pairwise crossing count over rank arrays, `O(m^2)`.
pub fn naive_crossings(g: &BipartiteGraph, fx: &[usize], fy: &[usize]) -> u64 {
    let edges = g.edges();
    let mut total = 0u64;
    for (i, e) in edges.iter().enumerate() {
        let (ex, ey) = (fx[e.x], fy[e.y]);
        for f in &edges[i + 1..] {
            let (gx, gy) = (fx[f.x], fy[f.y]);
            if (ex < gx && gy < ey) || (gx < ex && ey < gy) {
                total = total
                    .checked_add(e.weight * f.weight)
                    .expect("crossing count overflow");
            }
        }
    }
    total
}

/// Prefix sums over Y ranks.
#[derive(Debug, Clone)]
struct Fenwick {
    tree: Vec<u64>,
}

impl Fenwick {
    fn new(n: usize) -> Self {
        Fenwick {
            tree: vec![0; n + 1],
        }
    }

    fn clear(&mut self) {
        self.tree.fill(0);
    }

    fn add(&mut self, i: usize, w: u64) {
        let mut i = i + 1;
        while i < self.tree.len() {
            self.tree[i] += w;
            i += i & i.wrapping_neg();
        }
    }

    /// Sum over `[0, i)`.
    fn prefix(&self, i: usize) -> u64 {
        let mut i = i;
        let mut s = 0;
        while i > 0 {
            s += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        s
    }
}

/// Reusable weighted crossing counter for one graph.
///
/// X vertices are visited in X-rank order (a bucket sort of the edges by
/// X rank). The edges of each X vertex first query the weight of earlier
/// edges ending strictly to their right on the Y layer, then are inserted.
/// Edges sharing an X endpoint never see each other, and edges sharing a Y
/// endpoint are excluded by the strict comparison.
#[derive(Debug, Clone)]
pub struct CrossingCounter<'g> {
    graph: &'g BipartiteGraph,
    tree: Fenwick,
    x_order: Vec<usize>,
}

impl<'g> CrossingCounter<'g> {
    pub fn new(graph: &'g BipartiteGraph) -> Self {
        CrossingCounter {
            graph,
            tree: Fenwick::new(graph.y_count()),
            x_order: vec![0; graph.x_count()],
        }
    }

    pub fn count(&mut self, fx: &[usize], fy: &[usize]) -> u64 {
        let mut order = std::mem::take(&mut self.x_order);
        for (x, &r) in fx.iter().enumerate() {
            order[r] = x;
        }
        let c = self.count_in_order(&order, fy);
        self.x_order = order;
        c
    }

    /// Like [`Self::count`], with the X layer given as a vertex order.
    pub fn count_in_order(&mut self, x_order: &[usize], fy: &[usize]) -> u64 {
        self.tree.clear();
        let edges = self.graph.edges();
        let mut inserted = 0u64;
        let mut total = 0u64;
        for &x in x_order {
            let incident = self.graph.incident_edges(VertexId::x(x));
            for &ei in incident {
                let e = &edges[ei];
                let right = inserted - self.tree.prefix(fy[e.y] + 1);
                total += e.weight * right;
            }
            for &ei in incident {
                let e = &edges[ei];
                self.tree.add(fy[e.y], e.weight);
                inserted += e.weight;
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn drawing(g: &BipartiteGraph, fx: &[usize], fy: &[usize]) -> Drawing {
        Drawing::from_ranks(g.clone(), fx.to_vec(), fy.to_vec()).unwrap()
    }

    #[test]
    fn validates_layouts() {
        assert!(validate_layout(&[0, 1, 2]));
        assert!(!validate_layout(&[0, 0, 2]));
        assert!(validate_layout(&[2, 1, 0]));
        assert!(!validate_layout(&[0, 3, 1]));
        assert!(validate_layout(&[]));
        assert!(Layout::new(Side::X, vec![1, 1]).is_err());
    }

    #[test]
    fn layout_order_roundtrip() {
        let l = Layout::from_order(Side::Y, &[2, 0, 1]).unwrap();
        assert_eq!(l.ranks(), &[1, 2, 0]);
        assert_eq!(l.order(), vec![2, 0, 1]);
        assert_eq!(l.reversed().ranks(), &[1, 0, 2]);
    }

    #[test]
    fn rejects_mismatched_drawing() {
        let g = BipartiteGraph::complete(2, 2);
        assert!(Drawing::from_ranks(g.clone(), vec![0], vec![0, 1]).is_err());
        let fx = Layout::identity(Side::Y, 2);
        let fy = Layout::identity(Side::Y, 2);
        assert!(Drawing::new(g, fx, fy).is_err());
    }

    #[test]
    fn c4_identity_has_one_crossing() {
        let d = drawing(&BipartiteGraph::complete(2, 2), &[0, 1], &[0, 1]);
        // Only (x0,y1) x (x1,y0) crosses among the six pairs.
        assert_eq!(d.crossing_number_naive(), 1);
        assert_eq!(d.crossing_number_fast(), 1);
    }

    #[test]
    fn single_and_empty() {
        let g = BipartiteGraph::complete(1, 1);
        assert_eq!(drawing(&g, &[0], &[0]).crossing_number_fast(), 0);
        let e = BipartiteGraph::new(3, 2, []).unwrap();
        let d = drawing(&e, &[2, 0, 1], &[1, 0]);
        assert_eq!(d.crossing_number_naive(), 0);
        assert_eq!(d.crossing_number_fast(), 0);
    }

    #[test]
    fn weighted_crossing_is_product() {
        let g = BipartiteGraph::new(2, 2, [(0, 1, 2), (1, 0, 3)]).unwrap();
        let d = drawing(&g, &[0, 1], &[0, 1]);
        assert_eq!(d.crossing_number_naive(), 6);
        assert_eq!(d.crossing_number_fast(), 6);
    }

    #[test]
    fn k33_always_nine() {
        let g = BipartiteGraph::complete(3, 3);
        for fx in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
            for fy in [[0, 1, 2], [2, 1, 0], [0, 2, 1]] {
                let d = drawing(&g, &fx, &fy);
                assert_eq!(d.crossing_number_naive(), 9);
                assert_eq!(d.crossing_number_fast(), 9);
            }
        }
    }

    #[test]
    fn counter_is_reusable() {
        let g = BipartiteGraph::complete(2, 2);
        let mut c = CrossingCounter::new(&g);
        assert_eq!(c.count(&[0, 1], &[0, 1]), 1);
        assert_eq!(c.count(&[1, 0], &[0, 1]), 1);
        let g = BipartiteGraph::unweighted(2, 2, [(0, 0), (1, 1)]).unwrap();
        let mut c = CrossingCounter::new(&g);
        assert_eq!(c.count(&[0, 1], &[0, 1]), 0);
        assert_eq!(c.count(&[0, 1], &[1, 0]), 1);
    }
}
