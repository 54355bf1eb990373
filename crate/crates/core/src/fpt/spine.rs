use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side, VertexId};

/// Closed Eulerian tour of the multigraph obtained by doubling every edge,
/// starting and ending at `start`.
///
/// Iterative Hierholzer. Each edge contributes two parallel slots, and a
/// vertex always leaves through its unused slot with the smallest neighbour
/// index, so the tour is deterministic. Requires `start`'s component to be
/// the whole graph for the tour to cover every edge.
pub fn doubled_euler_tour(g: &BipartiteGraph, start: VertexId) -> Vec<VertexId> {
    let n = g.vertex_count();
    let adj: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|u| {
            let v = g.unflatten(u);
            let other = v.side.opposite();
            g.incident_edges(v)
                .iter()
                .zip(g.neighbors(v))
                .flat_map(|(&ei, (w, _))| {
                    let wf = g.flatten(VertexId {
                        side: other,
                        index: w,
                    });
                    [(wf, 2 * ei), (wf, 2 * ei + 1)]
                })
                .collect()
        })
        .collect();

    let mut used = vec![false; 2 * g.edge_count()];
    let mut next = vec![0usize; n];
    let mut stack = vec![g.flatten(start)];
    let mut circuit = Vec::with_capacity(2 * g.edge_count() + 1);
    while let Some(&u) = stack.last() {
        let slots = &adj[u];
        while next[u] < slots.len() && used[slots[next[u]].1] {
            next[u] += 1;
        }
        if let Some(&(w, slot)) = slots.get(next[u]) {
            used[slot] = true;
            next[u] += 1;
            stack.push(w);
        } else {
            circuit.push(u);
            stack.pop();
        }
    }
    circuit.reverse();
    circuit.into_iter().map(|u| g.unflatten(u)).collect()
}

/// The successor map `x -> T(x)` on one side, with the middle vertex of the
/// length-two witness path `x - mid(x) - T(x)`.
///
/// The pairs `{x, T(x)}` form a spanning tree of the side rooted at `root`;
/// each graph edge lies on at most two witness paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineMap {
    side: Side,
    root: usize,
    successor: Vec<Option<usize>>,
    witness: Vec<Option<usize>>,
}

impl SpineMap {
    /// Assembles a map without checking it; see [`verify_spine`].
    pub fn from_parts(
        side: Side,
        root: usize,
        successor: Vec<Option<usize>>,
        witness: Vec<Option<usize>>,
    ) -> Self {
        SpineMap {
            side,
            root,
            successor,
            witness,
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.successor.len()
    }

    pub fn is_empty(&self) -> bool {
        self.successor.is_empty()
    }

    pub fn successor(&self, x: usize) -> Option<usize> {
        self.successor[x]
    }

    pub fn witness(&self, x: usize) -> Option<usize> {
        self.witness[x]
    }

    /// Side vertices in breadth-first order from the root, so every vertex
    /// comes after its successor. Vertices not reachable from the root (only
    /// possible for maps that fail [`verify_spine`]) are left out.
    pub fn tree_order(&self) -> Vec<usize> {
        let mut children = vec![Vec::new(); self.len()];
        for (x, t) in self.successor.iter().enumerate() {
            if let Some(t) = *t {
                if t < self.len() && x != self.root {
                    children[t].push(x);
                }
            }
        }
        let mut order = Vec::with_capacity(self.len());
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([self.root]);
        seen[self.root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &c in &children[v] {
                if !seen[c] {
                    seen[c] = true;
                    queue.push_back(c);
                }
            }
        }
        order
    }
}

/// Builds the successor map of `side` from the doubled-edge Eulerian tour
/// starting at `root`: `T(x)` is the same-side vertex visited right after the
/// last visit of `x`, and `mid(x)` the vertex traversed in between.
pub fn build_spine(g: &BipartiteGraph, side: Side, root: usize) -> Result<SpineMap> {
    let a = g.side_len(side);
    if a < 2 {
        return Err(Error::SideTooSmall {
            side,
            len: a,
            min: 2,
        });
    }
    if root >= a {
        return Err(Error::IndexOutOfRange {
            vertex: VertexId { side, index: root },
            len: a,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let tour = doubled_euler_tour(g, VertexId { side, index: root });
    let mut last = vec![usize::MAX; a];
    for (pos, v) in tour.iter().enumerate() {
        if v.side == side {
            last[v.index] = pos;
        }
    }
    let mut successor = vec![None; a];
    let mut witness = vec![None; a];
    for x in (0..a).filter(|&x| x != root) {
        // The tour is closed at the root, so a non-root vertex is always
        // followed by at least two more steps.
        let p = last[x];
        witness[x] = Some(tour[p + 1].index);
        successor[x] = Some(tour[p + 2].index);
    }
    Ok(SpineMap {
        side,
        root,
        successor,
        witness,
    })
}

/// Checks the three spine conditions independently of how the map was built:
/// each `x - mid(x) - T(x)` is a path of length two in `g`, no edge lies on
/// more than two such paths, and the pairs `{x, T(x)}` form a spanning tree.
pub fn verify_spine(g: &BipartiteGraph, s: &SpineMap) -> bool {
    let side = s.side();
    let a = g.side_len(side);
    let b = g.side_len(side.opposite());
    if s.successor.len() != a || s.witness.len() != a || s.root >= a {
        return false;
    }
    if s.successor[s.root].is_some() {
        return false;
    }
    let edge = |u: usize, mid: usize| match side {
        Side::X => g.has_edge(u, mid),
        Side::Y => g.has_edge(mid, u),
    };

    let mut usage: HashMap<(usize, usize), u32> = HashMap::new();
    for x in (0..a).filter(|&x| x != s.root) {
        let (Some(t), Some(mid)) = (s.successor[x], s.witness[x]) else {
            return false;
        };
        if t >= a || t == x || mid >= b || !edge(x, mid) || !edge(t, mid) {
            return false;
        }
        for u in [x, t] {
            let count = usage.entry((u, mid)).or_default();
            *count += 1;
            if *count > 2 {
                return false;
            }
        }
    }

    // a - 1 successor pairs all leading to the root: a spanning tree.
    (0..a).all(|x| {
        let mut v = x;
        for _ in 0..a {
            match s.successor[v] {
                None => return v == s.root,
                Some(t) => v = t,
            }
        }
        false
    })
}
