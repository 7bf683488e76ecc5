//! Round mechanics shared by the burning, cooling and liminal games.
//!
//! Round 1 places the first source. Every later round first propagates
//! (each burned vertex burns its neighbors) and then, if unburned vertices
//! remain, places the next source. A game ends on the round in which the
//! whole vertex set first becomes burned, whether that happens during
//! propagation or at placement. Once the sources run out, propagation
//! continues on its own.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Family, GridCoord};
use crate::vertex_set::VertexSet;
use crate::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BurnState {
    pub burned: VertexSet,
    pub round: u32,
}

impl BurnState {
    pub fn new(g: &Graph) -> Self {
        BurnState {
            burned: VertexSet::new(g.order()),
            round: 1,
        }
    }

    pub fn is_terminal(&self) -> bool {
        self.burned.is_full()
    }
}

/// Closed neighborhood of `burned`.
pub fn spread(g: &Graph, burned: &VertexSet) -> VertexSet {
    let mut next = burned.clone();
    for v in burned.iter() {
        for &w in g.neighbors(v) {
            next.insert(w);
        }
    }
    next
}

pub fn propagate(g: &Graph, s: &BurnState) -> BurnState {
    BurnState {
        burned: spread(g, &s.burned),
        round: s.round + 1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceSequence {
    pub sources: Vec<usize>,
}

impl SourceSequence {
    pub fn new(sources: Vec<usize>) -> Self {
        SourceSequence { sources }
    }
}

/// On-disk form of a sequence: `{"graph": "<spec>", "sources": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceFile {
    pub graph: String,
    pub sources: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundRecord {
    pub round: u32,
    pub source: Option<usize>,
    pub burned: usize,
}

/// Replays `seq` and reports the burned count at the end of every round.
pub fn replay_trace(g: &Graph, seq: &SourceSequence) -> Result<Vec<RoundRecord>> {
    let n = g.order();
    if seq.sources.is_empty() {
        return Err(Error::IllegalMove("a source sequence needs at least one source".into()));
    }
    if let Some(&v) = seq.sources.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }

    let mut state = BurnState::new(g);
    let mut pending = seq.sources.iter().copied();
    let mut trace = Vec::new();
    loop {
        if !trace.is_empty() {
            state = propagate(g, &state);
            if state.is_terminal() {
                trace.push(RoundRecord { round: state.round, source: None, burned: n });
                return Ok(trace);
            }
        }
        let source = pending.next();
        if let Some(v) = source {
            if !state.burned.insert(v) {
                return Err(Error::SourceAlreadyBurned { vertex: v, round: state.round });
            }
        }
        trace.push(RoundRecord {
            round: state.round,
            source,
            burned: state.burned.len(),
        });
        if state.is_terminal() {
            return Ok(trace);
        }
    }
}

/// Number of rounds until `seq` burns the whole graph.
pub fn play_sequence(g: &Graph, seq: &SourceSequence) -> Result<u32> {
    Ok(replay_trace(g, seq)?.last().map(|r| r.round).unwrap())
}

/// True iff the balls of radius `m - i` around `sources[i]` (1-indexed) cover
/// every vertex.
pub fn covering_value(g: &Graph, sources: &[usize], m: u32) -> bool {
    if sources.len() > m as usize {
        return false;
    }
    let mut covered = VertexSet::new(g.order());
    for (i, &s) in sources.iter().enumerate() {
        let radius = m - 1 - i as u32;
        for (v, d) in g.bfs_distances(s).into_iter().enumerate() {
            if d.is_some_and(|d| d <= radius) {
                covered.insert(v);
            }
        }
    }
    covered.is_full()
}

/// Cooling sequence on a strong product of paths that lasts `n` rounds.
///
/// Works inside the 2-face spanned by the first two axes, all other
/// coordinates fixed at 1. The face is colored like a chessboard with
/// `(1, 1)` black; the sources are the black cells of the bottom row from left
/// to right, then the white cells of the rightmost column from bottom to top,
/// skipping any cell that is already burned when its turn comes.
pub fn cooling_sequence_strong(n: usize, d: usize) -> Result<SourceSequence> {
    if n < 2 || d < 2 {
        return Err(Error::OutOfRange(format!("cooling construction needs n, d >= 2, got n={n}, d={d}")));
    }
    cooling_sequence_on(&crate::graph::strong_path(n, d)?)
}

/// [`cooling_sequence_strong`] for an already-built strong product graph.
pub fn cooling_sequence_on(g: &Graph) -> Result<SourceSequence> {
    let (n, d) = match *g.family() {
        Family::StrongPath { n, d } if n >= 2 && d >= 2 => (n, d),
        _ => {
            return Err(Error::OutOfRange(format!(
                "cooling construction needs a strong product of paths with n, d >= 2, got {}",
                g.label()
            )))
        }
    };
    let cell = |x: usize, y: usize| {
        let mut coords = vec![1; d];
        coords[0] = x;
        coords[1] = y;
        GridCoord { coords }.encode(n)
    };
    let candidates: Vec<usize> = (1..=n)
        .filter(|x| (x + 1) % 2 == 0)
        .map(|x| cell(x, 1))
        .chain((1..=n).filter(|y| (n + y) % 2 == 1).map(|y| cell(n, y)))
        .collect();

    let mut state = BurnState::new(g);
    let mut sources = Vec::new();
    let mut pending = candidates.into_iter();
    loop {
        if !sources.is_empty() {
            state = propagate(g, &state);
            if state.is_terminal() {
                break;
            }
        }
        match pending.find(|&v| !state.burned.contains(v)) {
            Some(v) => {
                state.burned.insert(v);
                sources.push(v);
            }
            None => break,
        }
        if state.is_terminal() {
            break;
        }
    }
    Ok(SourceSequence::new(sources))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, strong_path};

    fn seq(v: &[usize]) -> SourceSequence {
        SourceSequence::new(v.to_vec())
    }

    #[test]
    fn propagate_examples() {
        let p4 = path(4).unwrap();
        let s = BurnState {
            burned: VertexSet::from_iter_with_capacity(4, [1]),
            round: 1,
        };
        let next = propagate(&p4, &s);
        assert_eq!(next.burned.to_vec(), vec![0, 1, 2]);
        assert_eq!(next.round, 2);

        let k3 = strong_path(3, 2).unwrap();
        let s = BurnState {
            burned: VertexSet::from_iter_with_capacity(9, [4]),
            round: 1,
        };
        assert!(propagate(&k3, &s).is_terminal());

        let full = BurnState {
            burned: VertexSet::full(9),
            round: 3,
        };
        assert_eq!(propagate(&k3, &full).burned, full.burned);
    }

    #[test]
    fn play_sequence_examples() {
        assert_eq!(play_sequence(&path(3).unwrap(), &seq(&[1])).unwrap(), 2);
        // midpoints of the tiles [1..5], [6..8], [9]
        assert_eq!(play_sequence(&path(9).unwrap(), &seq(&[2, 6, 8])).unwrap(), 3);
        assert_eq!(play_sequence(&path(1).unwrap(), &seq(&[0])).unwrap(), 1);
        // sources exhausted: propagation finishes the job
        assert_eq!(play_sequence(&path(5).unwrap(), &seq(&[0])).unwrap(), 5);
    }

    #[test]
    fn play_sequence_errors() {
        let p4 = path(4).unwrap();
        assert_eq!(
            play_sequence(&p4, &seq(&[1, 2])),
            Err(Error::SourceAlreadyBurned { vertex: 2, round: 2 })
        );
        assert_eq!(play_sequence(&p4, &seq(&[9])), Err(Error::VertexOutOfRange { vertex: 9, n: 4 }));
        assert!(play_sequence(&p4, &seq(&[])).is_err());
    }

    #[test]
    fn replay_trace_counts() {
        let trace = replay_trace(&path(9).unwrap(), &seq(&[2, 6, 8])).unwrap();
        let counts: Vec<usize> = trace.iter().map(|r| r.burned).collect();
        assert_eq!(counts, vec![1, 4, 9]);
    }

    #[test]
    fn covering_examples() {
        let p9 = path(9).unwrap();
        assert!(covering_value(&p9, &[2, 6, 8], 3));
        // radii 2, 1, 0 around v5, v2, v9 leave v8 uncovered
        assert!(!covering_value(&p9, &[4, 1, 8], 3));
        assert!(!covering_value(&p9, &[0], 1));
        assert!(covering_value(&p9, &[0], 9));
        assert!(!covering_value(&p9, &[0], 8));
    }

    #[test]
    fn cooling_sequence_figure_layouts() {
        let coords = |g: &Graph, s: &SourceSequence| -> Vec<Vec<usize>> {
            s.sources.iter().map(|&v| g.coords(v).unwrap().coords).collect()
        };
        let k7 = strong_path(7, 2).unwrap();
        let s7 = cooling_sequence_on(&k7).unwrap();
        assert_eq!(
            coords(&k7, &s7),
            vec![vec![1, 1], vec![3, 1], vec![5, 1], vec![7, 1], vec![7, 4], vec![7, 6]]
        );
        assert_eq!(play_sequence(&k7, &s7).unwrap(), 7);

        let k8 = strong_path(8, 2).unwrap();
        let s8 = cooling_sequence_on(&k8).unwrap();
        assert_eq!(
            coords(&k8, &s8),
            vec![vec![1, 1], vec![3, 1], vec![5, 1], vec![7, 1], vec![8, 3], vec![8, 5], vec![8, 7]]
        );
        assert_eq!(play_sequence(&k8, &s8).unwrap(), 8);

        let k2 = strong_path(2, 2).unwrap();
        assert_eq!(play_sequence(&k2, &cooling_sequence_strong(2, 2).unwrap()).unwrap(), 2);

        let cube = strong_path(4, 3).unwrap();
        assert_eq!(play_sequence(&cube, &cooling_sequence_strong(4, 3).unwrap()).unwrap(), 4);

        assert!(cooling_sequence_on(&path(5).unwrap()).is_err());
        assert!(cooling_sequence_strong(1, 2).is_err());
    }
}
