#![allow(dead_code)]

use bicross_core::BipartiteGraph;
use proptest::prelude::*;

/// Graphs with at most `max_side` vertices per side and at most `max_n`
/// vertices in total, edge weights in `1..=max_weight`.
pub fn graphs(
    max_side: usize,
    max_n: usize,
    max_weight: u64,
) -> impl Strategy<Value = BipartiteGraph> {
    (0..=max_side, 0..=max_side)
        .prop_filter("vertex budget", move |(a, b)| a + b <= max_n)
        .prop_flat_map(move |(a, b)| {
            (
                Just(a),
                Just(b),
                proptest::collection::vec((any::<bool>(), 1..=max_weight), a * b),
            )
        })
        .prop_map(|(a, b, cells)| {
            let edges = cells
                .into_iter()
                .enumerate()
                .filter(|(_, (present, _))| *present)
                .map(|(i, (_, w))| (i / b.max(1), i % b.max(1), w));
            BipartiteGraph::new(a, b, edges).unwrap()
        })
}

/// Every graph on `a x b` vertices, one per edge subset, unit weights.
pub fn all_graphs(a: usize, b: usize) -> impl Iterator<Item = BipartiteGraph> {
    let cells = a * b;
    (0u32..1 << cells).map(move |mask| {
        let edges = (0..cells)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (i / b, i % b));
        BipartiteGraph::unweighted(a, b, edges).unwrap()
    })
}
