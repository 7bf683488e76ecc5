//! Exact solvers used as ground truth: burning number, cooling number and
//! the k-liminal minimax value.

mod burning;
mod cooling;
mod liminal;

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Graph;

pub use burning::burning_number;
pub use cooling::cooling_number;
pub use liminal::{
    liminal_sweep, liminal_value, liminal_value_with, GameState, LiminalRules, LiminalSolver, Phase,
    Sweep, SweepEntry,
};

/// Search limits. Exceeding any of them yields [`Error::BudgetExhausted`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub node_limit: u64,
    pub time_limit: Option<Duration>,
}

pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

impl Budget {
    pub const fn burning() -> Self {
        Budget { max_vertices: 64, node_limit: DEFAULT_NODE_LIMIT, time_limit: None }
    }

    pub const fn cooling() -> Self {
        Budget { max_vertices: 16, node_limit: DEFAULT_NODE_LIMIT, time_limit: None }
    }

    pub const fn liminal() -> Self {
        Budget { max_vertices: 14, node_limit: DEFAULT_NODE_LIMIT, time_limit: None }
    }

    pub fn with_node_limit(self, node_limit: u64) -> Self {
        Budget { node_limit, ..self }
    }

    pub fn with_max_vertices(self, max_vertices: usize) -> Self {
        Budget { max_vertices, ..self }
    }

    pub fn with_time_limit(self, time_limit: Option<Duration>) -> Self {
        Budget { time_limit, ..self }
    }

    fn admit(&self, g: &Graph) -> Result<()> {
        let limit = self.max_vertices.min(128);
        if g.order() > limit {
            return Err(Error::SizeLimit {
                what: "vertex count for exact search",
                actual: g.order() as u128,
                limit: limit as u128,
            });
        }
        Ok(())
    }
}

/// Node counter with budget enforcement.
#[derive(Debug)]
pub(crate) struct Meter {
    nodes: u64,
    limit: u64,
    deadline: Option<Instant>,
}

impl Meter {
    pub(crate) fn new(budget: &Budget) -> Self {
        Meter {
            nodes: 0,
            limit: budget.node_limit,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::BudgetExhausted { nodes: self.nodes });
        }
        if self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::BudgetExhausted { nodes: self.nodes });
        }
        Ok(())
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}

/// A graph on at most 128 vertices with closed neighborhoods as bitmasks.
#[derive(Debug, Clone)]
pub(crate) struct MaskGraph {
    pub n: usize,
    pub full: u128,
    pub closed: Vec<u128>,
}

impl MaskGraph {
    pub(crate) fn new(g: &Graph) -> Self {
        assert!(g.order() <= 128);
        let n = g.order();
        let closed = (0..n)
            .map(|v| g.neighbors(v).iter().fold(1u128 << v, |m, &w| m | 1u128 << w))
            .collect();
        MaskGraph {
            n,
            full: if n == 128 { u128::MAX } else { (1u128 << n) - 1 },
            closed,
        }
    }

    #[inline]
    pub(crate) fn spread(&self, burned: u128) -> u128 {
        let mut out = burned;
        let mut rest = burned;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.closed[v];
        }
        out
    }

    /// Rounds of free propagation needed to burn everything from `burned`.
    pub(crate) fn rounds_to_fill(&self, burned: u128) -> u32 {
        debug_assert!(burned != 0);
        let mut b = burned;
        let mut steps = 0;
        while b != self.full {
            b = self.spread(b);
            steps += 1;
        }
        steps
    }
}

#[inline]
pub(crate) fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GameKind {
    Burn,
    Cool,
    Liminal,
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GameKind::Burn => "burn",
            GameKind::Cool => "cool",
            GameKind::Liminal => "liminal",
        })
    }
}

/// A single ply. On the wire: `{"type": "reveal" | "burn" | "pass", "vertices": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MoveWire", into = "MoveWire")]
pub enum Move {
    Reveal(Vec<usize>),
    Burn(usize),
    Pass,
}

#[derive(Serialize, Deserialize)]
struct MoveWire {
    #[serde(rename = "type")]
    kind: String,
    #[serde(default)]
    vertices: Vec<usize>,
}

impl TryFrom<MoveWire> for Move {
    type Error = String;

    fn try_from(w: MoveWire) -> std::result::Result<Self, String> {
        match (w.kind.as_str(), w.vertices.as_slice()) {
            ("reveal", _) => Ok(Move::Reveal(w.vertices)),
            ("burn", [v]) => Ok(Move::Burn(*v)),
            ("burn", other) => Err(format!("a burn names exactly one vertex, got {}", other.len())),
            ("pass", []) => Ok(Move::Pass),
            ("pass", _) => Err("a pass names no vertices".into()),
            (other, _) => Err(format!("unknown move type {other:?}")),
        }
    }
}

impl From<Move> for MoveWire {
    fn from(m: Move) -> Self {
        match m {
            Move::Reveal(vertices) => MoveWire { kind: "reveal".into(), vertices },
            Move::Burn(v) => MoveWire { kind: "burn".into(), vertices: vec![v] },
            Move::Pass => MoveWire { kind: "pass".into(), vertices: vec![] },
        }
    }
}

/// Value of a game under optimal play, with the line that realizes it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub kind: GameKind,
    pub value: u32,
    pub principal_line: Vec<Move>,
    pub nodes_expanded: u64,
}
