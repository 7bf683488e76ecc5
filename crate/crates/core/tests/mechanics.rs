mod common;

use common::connected_graph;
use liminal_core::burn::{cooling_sequence_on, cooling_sequence_strong, covering_value, play_sequence, replay_trace, SourceSequence};
use liminal_core::graph::{path, strong_path, GridCoord};
use liminal_core::{Error, Graph};
use proptest::prelude::*;

#[test]
fn strong_path_distance_is_chebyshev() {
    for d in 1..=4 {
        for n in 1..=12 {
            if (n as u64).pow(d as u32) > 2000 {
                continue;
            }
            let g = strong_path(n, d).unwrap();
            for src in (0..g.order()).step_by(7.max(g.order() / 40)) {
                let a = GridCoord::decode(src, n, d);
                for (v, dist) in g.bfs_distances(src).iter().enumerate() {
                    assert_eq!(dist.unwrap() as usize, a.chebyshev(&GridCoord::decode(v, n, d)));
                }
            }
        }
    }
}

#[test]
fn strong_path_edge_counts() {
    // (3n - 2)^d - n^d counts ordered adjacent pairs
    for (n, d) in [(2usize, 2u32), (3, 2), (5, 2), (3, 3), (4, 3), (2, 4)] {
        let g = strong_path(n, d as usize).unwrap();
        assert_eq!(2 * g.edge_count(), (3 * n - 2).pow(d) - n.pow(d), "n = {n}, d = {d}");
    }
    assert_eq!(strong_path(7, 1).unwrap().edges().collect::<Vec<_>>(), path(7).unwrap().edges().collect::<Vec<_>>());
}

#[test]
fn cooling_construction_lasts_n_rounds() {
    for n in 2..=12 {
        let g = strong_path(n, 2).unwrap();
        assert_eq!(play_sequence(&g, &cooling_sequence_strong(n, 2).unwrap()).unwrap(), n as u32);
    }
    for n in 2..=6 {
        let g = strong_path(n, 3).unwrap();
        assert_eq!(play_sequence(&g, &cooling_sequence_strong(n, 3).unwrap()).unwrap(), n as u32);
    }
}

#[test]
fn replay_rejects_bad_sequences() {
    let g = path(5).unwrap();
    assert!(matches!(
        replay_trace(&g, &SourceSequence::new(vec![2, 9])),
        Err(Error::VertexOutOfRange { vertex: 9, .. })
    ));
    assert!(matches!(
        replay_trace(&g, &SourceSequence::new(vec![2, 3])),
        Err(Error::SourceAlreadyBurned { vertex: 3, round: 2 })
    ));
}

fn graph_and_sequence() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (1usize..12).prop_flat_map(|n| {
        (
            proptest::collection::vec(0usize..12, n - 1),
            proptest::collection::vec((0usize..12, 0usize..12), 0..5),
            proptest::collection::vec(0usize..12, 0..6),
        )
            .prop_map(|(parents, extra, picks)| (connected_graph(&parents, &extra), picks))
    })
}

/// Turns raw picks into a legal sequence by skipping vertices that are
/// burned by the time they would be placed.
fn legalise(g: &Graph, picks: &[usize]) -> Vec<usize> {
    let mut seq: Vec<usize> = Vec::new();
    for &p in picks {
        let v = p % g.order();
        let mut attempt = seq.clone();
        attempt.push(v);
        if replay_trace(g, &SourceSequence::new(attempt.clone())).is_ok() {
            seq = attempt;
        }
    }
    seq
}

proptest! {
    #[test]
    fn covering_agrees_with_replay((g, picks) in graph_and_sequence()) {
        let seq = legalise(&g, &picks);
        prop_assume!(!seq.is_empty());
        let m = seq.len() as u32;
        let covers = covering_value(&g, &seq, m);
        let finished = replay_trace(&g, &SourceSequence::new(seq.clone())).unwrap();
        let fully_burned = finished.last().unwrap().burned == g.order() && finished.len() as u32 <= m;
        prop_assert_eq!(covers, fully_burned);
    }

    #[test]
    fn replay_is_monotone_and_deterministic((g, picks) in graph_and_sequence()) {
        let seq = SourceSequence::new(legalise(&g, &picks));
        prop_assume!(!seq.sources.is_empty());
        let a = replay_trace(&g, &seq).unwrap();
        prop_assert_eq!(&a, &replay_trace(&g, &seq).unwrap());
        for w in a.windows(2) {
            prop_assert!(w[0].burned <= w[1].burned);
            prop_assert_eq!(w[0].round + 1, w[1].round);
        }
        prop_assert_eq!(a.last().unwrap().burned, g.order());
    }
}

#[test]
fn cooling_construction_only_on_strong_products() {
    assert!(cooling_sequence_on(&path(6).unwrap()).is_err());
    assert!(cooling_sequence_strong(1, 2).is_err());
    let g = strong_path(4, 4).unwrap();
    assert_eq!(play_sequence(&g, &cooling_sequence_on(&g).unwrap()).unwrap(), 4);
}
