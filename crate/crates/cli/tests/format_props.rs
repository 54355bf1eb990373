use bicross_cli::{parse_edge_list, parse_graph, write_graph};
use bicross_core::BipartiteGraph;
use proptest::prelude::*;

fn graphs() -> impl Strategy<Value = BipartiteGraph> {
    (0usize..7, 0usize..7)
        .prop_flat_map(|(a, b)| {
            (
                Just(a),
                Just(b),
                proptest::collection::vec((any::<bool>(), 1u64..6), a * b),
            )
        })
        .prop_map(|(a, b, cells)| {
            let edges = cells
                .into_iter()
                .enumerate()
                .filter(|(_, (on, _))| *on)
                .map(|(i, (_, w))| (i / b, i % b, w));
            BipartiteGraph::new(a, b, edges).unwrap()
        })
}

proptest! {
    #[test]
    fn canonical_text_roundtrips(g in graphs()) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn edge_list_agrees_with_native(g in graphs()) {
        // The importer infers side sizes, so only graphs without isolated
        // trailing vertices come back identical.
        let list: String = g
            .edges()
            .iter()
            .map(|e| format!("{} {} {}\n", e.x, e.y, e.weight))
            .collect();
        let h = parse_edge_list(&list).unwrap();
        prop_assert_eq!(h.edges(), g.edges());
        prop_assert!(h.x_count() <= g.x_count() && h.y_count() <= g.y_count());
    }

    #[test]
    fn comments_and_blank_lines_are_ignored(g in graphs(), noise in proptest::collection::vec(0u8..3, 0..20)) {
        let mut text = String::new();
        let body = write_graph(&g);
        let mut noise = noise.into_iter();
        for line in body.lines() {
            match noise.next() {
                Some(0) => text.push_str("# comment\n"),
                Some(1) => text.push_str("   \n"),
                _ => {}
            }
            text.push_str(line);
            text.push('\n');
        }
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }
}

#[test]
fn documented_examples() {
    let c4 = parse_graph("bigraph 2 2\nx0 y0\nx0 y1\nx1 y0\nx1 y1\n").unwrap();
    assert_eq!(c4, BipartiteGraph::complete(2, 2));
    let one = parse_graph("bigraph 1 1\nx0 y0 5\n").unwrap();
    assert_eq!(one.edges()[0].weight, 5);
    let err = parse_graph("bigraph 2 2\nx0 z1\n").unwrap_err();
    assert_eq!(err.line, Some(2));
}
