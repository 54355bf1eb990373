//! Seeded random instances for tests and experiments.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{BipartiteGraph, Side, VertexId};

/// A connected graph on `n >= 2` vertices: a random spanning tree plus each
/// remaining X-Y pair independently with probability `extra`. Leaf edges get
/// weights in `1..=max_leaf_weight`, all other edges weight 1.
pub fn random_connected<R: Rng>(
    rng: &mut R,
    n: usize,
    extra: f64,
    max_leaf_weight: u64,
) -> BipartiteGraph {
    assert!(n >= 2, "need at least two vertices");
    let x_count = rng.gen_range(1..n);
    let y_count = n - x_count;

    let mut pending: Vec<VertexId> = (1..x_count)
        .map(VertexId::x)
        .chain((1..y_count).map(VertexId::y))
        .collect();
    pending.shuffle(rng);
    let mut placed_x = vec![0];
    let mut placed_y = vec![0];
    let mut adj = vec![vec![false; y_count]; x_count];
    adj[0][0] = true;
    for v in pending {
        match v.side {
            Side::X => {
                let y = placed_y[rng.gen_range(0..placed_y.len())];
                adj[v.index][y] = true;
                placed_x.push(v.index);
            }
            Side::Y => {
                let x = placed_x[rng.gen_range(0..placed_x.len())];
                adj[x][v.index] = true;
                placed_y.push(v.index);
            }
        }
    }
    for row in adj.iter_mut() {
        for cell in row.iter_mut() {
            if !*cell && rng.gen_bool(extra) {
                *cell = true;
            }
        }
    }
    with_leaf_weights(rng, x_count, y_count, &adj, max_leaf_weight)
}

fn with_leaf_weights<R: Rng>(
    rng: &mut R,
    x_count: usize,
    y_count: usize,
    adj: &[Vec<bool>],
    max_leaf_weight: u64,
) -> BipartiteGraph {
    let dx: Vec<usize> = adj
        .iter()
        .map(|r| r.iter().filter(|&&b| b).count())
        .collect();
    let dy: Vec<usize> = (0..y_count)
        .map(|y| adj.iter().filter(|r| r[y]).count())
        .collect();
    let mut edges = Vec::new();
    for (x, row) in adj.iter().enumerate() {
        for (y, _) in row.iter().enumerate().filter(|(_, &b)| b) {
            let leaf = dx[x] == 1 || dy[y] == 1;
            let w = if leaf && max_leaf_weight > 1 {
                rng.gen_range(1..=max_leaf_weight)
            } else {
                1
            };
            edges.push((x, y, w));
        }
    }
    BipartiteGraph::new(x_count, y_count, edges).expect("generated graph is valid")
}

/// A connected graph without sibling pairs and with unit weights: a random
/// connected graph with its sibling leaves merged, weights reset to one.
pub fn random_sibling_free<R: Rng>(rng: &mut R, n: usize, extra: f64) -> BipartiteGraph {
    let merged = random_connected(rng, n, extra, 1).merge_sibling_leaves();
    unit_weights(&merged)
}

pub fn unit_weights(g: &BipartiteGraph) -> BipartiteGraph {
    BipartiteGraph::unweighted(
        g.x_count(),
        g.y_count(),
        g.edges().iter().map(|e| (e.x, e.y)),
    )
    .expect("same edge set")
}

/// Adds `count` new unit-weight leaves, each attached to a random existing
/// vertex that already has another leaf neighbour or is chosen at random.
pub fn inject_sibling_leaves<R: Rng>(
    rng: &mut R,
    g: &BipartiteGraph,
    count: usize,
) -> BipartiteGraph {
    let mut x_count = g.x_count();
    let mut y_count = g.y_count();
    let mut edges: Vec<(usize, usize, u64)> =
        g.edges().iter().map(|e| (e.x, e.y, e.weight)).collect();
    for _ in 0..count {
        let n = x_count + y_count;
        if n == 0 {
            break;
        }
        let p = rng.gen_range(0..n);
        if p < x_count {
            edges.push((p, y_count, 1));
            y_count += 1;
        } else {
            edges.push((x_count, p - x_count, 1));
            x_count += 1;
        }
    }
    BipartiteGraph::new(x_count, y_count, edges).expect("adding leaves keeps the graph valid")
}
