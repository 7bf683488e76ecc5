//! The k-liminal burning game.
//!
//! Round 1: the saboteur reveals `k` vertices and the arsonist burns one of
//! them. Every later round: propagation, terminal check, the saboteur reveals
//! `min(k, pool)` more vertices, then the arsonist burns one revealed,
//! unburned vertex (or passes when none exists). The saboteur maximizes the
//! completion round and the arsonist minimizes it.
//!
//! The reveal pool is the set of unrevealed vertices, restricted to unburned
//! ones unless [`LiminalRules::reveal_burned`] is set. With burned reveals
//! disallowed the arsonist always has a move and `b_1 = CL`, `b_|V| = b`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{bits, burning_number, cooling_number, Budget, GameKind, MaskGraph, Meter, Move, SolveResult};
use crate::burn::spread;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    SaboteurReveal,
    ArsonistBurn,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameState {
    pub burned: VertexSet,
    pub revealed: VertexSet,
    pub round: u32,
    pub phase: Phase,
}

impl GameState {
    pub fn initial(g: &Graph) -> Self {
        GameState {
            burned: VertexSet::new(g.order()),
            revealed: VertexSet::new(g.order()),
            round: 1,
            phase: Phase::SaboteurReveal,
        }
    }

    pub fn is_terminal(&self) -> bool {
        self.burned.is_full()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiminalRules {
    pub k: usize,
    /// Let the saboteur reveal vertices that are already burned.
    pub reveal_burned: bool,
}

impl LiminalRules {
    pub fn new(k: usize) -> Self {
        LiminalRules { k, reveal_burned: false }
    }

    pub fn reveal_pool(&self, state: &GameState) -> VertexSet {
        let n = state.burned.capacity();
        VertexSet::from_iter_with_capacity(
            n,
            (0..n).filter(|&v| {
                !state.revealed.contains(v) && (self.reveal_burned || !state.burned.contains(v))
            }),
        )
    }

    /// Number of vertices the saboteur must reveal now.
    pub fn reveal_size(&self, state: &GameState) -> usize {
        self.k.min(self.reveal_pool(state).len())
    }

    pub fn burn_options(&self, state: &GameState) -> VertexSet {
        let n = state.burned.capacity();
        VertexSet::from_iter_with_capacity(
            n,
            state.revealed.iter().filter(|&v| !state.burned.contains(v)),
        )
    }

    /// The only legal move, when the rules leave no choice.
    pub fn forced_move(&self, state: &GameState) -> Option<Move> {
        if state.is_terminal() {
            return None;
        }
        match state.phase {
            Phase::SaboteurReveal => {
                let pool = self.reveal_pool(state);
                (pool.len() <= self.k).then(|| Move::Reveal(pool.to_vec()))
            }
            Phase::ArsonistBurn => {
                let options = self.burn_options(state);
                match options.len() {
                    0 => Some(Move::Pass),
                    1 => Some(Move::Burn(options.iter().next().unwrap())),
                    _ => None,
                }
            }
        }
    }

    /// Validates and applies one move, including the propagation that opens
    /// the next round.
    pub fn apply(&self, g: &Graph, state: &GameState, mv: &Move) -> Result<GameState> {
        if state.is_terminal() {
            return Err(Error::GameOver);
        }
        let n = g.order();
        let mut next = state.clone();
        match (state.phase, mv) {
            (Phase::SaboteurReveal, Move::Reveal(vertices)) => {
                let pool = self.reveal_pool(state);
                let want = self.k.min(pool.len());
                let mut seen = VertexSet::new(n);
                for &v in vertices {
                    if v >= n {
                        return Err(Error::VertexOutOfRange { vertex: v, n });
                    }
                    if !seen.insert(v) {
                        return Err(Error::IllegalMove(format!("vertex {v} revealed twice")));
                    }
                    if !pool.contains(v) {
                        let why = if state.revealed.contains(v) { "already revealed" } else { "already burned" };
                        return Err(Error::IllegalMove(format!("vertex {v} cannot be revealed: {why}")));
                    }
                }
                if vertices.len() != want {
                    return Err(Error::IllegalMove(format!(
                        "must reveal exactly {want} vertices, got {}",
                        vertices.len()
                    )));
                }
                next.revealed.union_with(&seen);
                next.phase = Phase::ArsonistBurn;
                Ok(next)
            }
            (Phase::ArsonistBurn, Move::Burn(v)) => {
                let v = *v;
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if !state.revealed.contains(v) {
                    return Err(Error::IllegalMove(format!("vertex {v} is not revealed")));
                }
                if state.burned.contains(v) {
                    return Err(Error::IllegalMove(format!("vertex {v} is already burned")));
                }
                next.burned.insert(v);
                Ok(self.close_round(g, next))
            }
            (Phase::ArsonistBurn, Move::Pass) => {
                if !self.burn_options(state).is_empty() {
                    return Err(Error::IllegalMove("cannot pass while a revealed vertex is unburned".into()));
                }
                Ok(self.close_round(g, next))
            }
            (phase, mv) => Err(Error::IllegalMove(format!("{mv:?} is not a move for phase {phase:?}"))),
        }
    }

    fn close_round(&self, g: &Graph, mut state: GameState) -> GameState {
        if state.is_terminal() {
            return state;
        }
        state.round += 1;
        state.burned = spread(g, &state.burned);
        state.phase = Phase::SaboteurReveal;
        state
    }
}

/// Memoized minimax for one graph and rule set. The table persists across
/// queries, so an interactive session can ask for many positions cheaply.
#[derive(Debug)]
pub struct LiminalSolver {
    mg: MaskGraph,
    rules: LiminalRules,
    memo: HashMap<(u128, u128, Phase), u32>,
    meter: Meter,
}

impl LiminalSolver {
    pub fn new(g: &Graph, rules: LiminalRules, budget: &Budget) -> Result<Self> {
        budget.admit(g)?;
        if rules.k == 0 {
            return Err(Error::OutOfRange("liminal number k must be at least 1".into()));
        }
        Ok(LiminalSolver {
            mg: MaskGraph::new(g),
            rules,
            memo: HashMap::new(),
            meter: Meter::new(budget),
        })
    }

    pub fn rules(&self) -> LiminalRules {
        self.rules
    }

    pub fn nodes_expanded(&self) -> u64 {
        self.meter.nodes()
    }

    fn key(&self, burned: u128, revealed: u128, phase: Phase) -> (u128, u128, Phase) {
        // burned vertices can be neither revealed nor burned again
        let revealed = if self.rules.reveal_burned { revealed } else { revealed & !burned };
        (burned, revealed, phase)
    }

    fn pool(&self, burned: u128, revealed: u128) -> u128 {
        let unrevealed = !revealed & self.mg.full;
        if self.rules.reveal_burned {
            unrevealed
        } else {
            unrevealed & !burned
        }
    }

    /// Upper bound on the rounds left, counting the current one.
    fn ceiling(&self, burned: u128) -> u32 {
        if burned == 0 {
            u32::MAX
        } else {
            1 + self.mg.rounds_to_fill(burned)
        }
    }

    /// Rounds left (counting the current one) at the saboteur's turn.
    fn reveal_value(&mut self, burned: u128, revealed: u128) -> Result<u32> {
        let key = self.key(burned, revealed, Phase::SaboteurReveal);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.meter.tick()?;
        let ceiling = self.ceiling(burned);
        let pool: Vec<usize> = bits(self.pool(burned, revealed)).collect();
        let size = self.rules.k.min(pool.len());
        let mut best = 0;
        let mut combo = Combinations::new(pool.len(), size);
        while let Some(idx) = combo.next() {
            let chosen = idx.iter().fold(0u128, |m, &i| m | 1u128 << pool[i]);
            let value = self.burn_value(burned, revealed | chosen)?;
            if value > best {
                best = value;
                if best >= ceiling {
                    break;
                }
            }
        }
        self.memo.insert(key, best);
        Ok(best)
    }

    /// Rounds left (counting the current one) at the arsonist's turn.
    fn burn_value(&mut self, burned: u128, revealed: u128) -> Result<u32> {
        let key = self.key(burned, revealed, Phase::ArsonistBurn);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.meter.tick()?;
        let options = revealed & !burned;
        let value = if options == 0 {
            self.after_burn(burned, revealed)?
        } else {
            let mut best = u32::MAX;
            for v in bits(options) {
                let value = self.after_burn(burned | 1u128 << v, revealed)?;
                if value < best {
                    best = value;
                    if best == 1 {
                        break;
                    }
                }
            }
            best
        };
        self.memo.insert(key, value);
        Ok(value)
    }

    fn after_burn(&mut self, burned: u128, revealed: u128) -> Result<u32> {
        if burned == self.mg.full {
            return Ok(1);
        }
        let next = self.mg.spread(burned);
        if next == self.mg.full {
            return Ok(2);
        }
        Ok(1 + self.reveal_value(next, revealed)?)
    }

    fn masks(&self, state: &GameState) -> Result<(u128, u128)> {
        if state.burned.capacity() != self.mg.n {
            return Err(Error::OutOfRange("state does not belong to this graph".into()));
        }
        Ok((state.burned.to_mask().unwrap(), state.revealed.to_mask().unwrap()))
    }

    /// Completion round under optimal play from `state`.
    pub fn game_value(&mut self, state: &GameState) -> Result<u32> {
        if state.is_terminal() {
            return Ok(state.round);
        }
        let (burned, revealed) = self.masks(state)?;
        let left = match state.phase {
            Phase::SaboteurReveal => self.reveal_value(burned, revealed)?,
            Phase::ArsonistBurn => self.burn_value(burned, revealed)?,
        };
        Ok(state.round - 1 + left)
    }

    /// An optimal move for the side to act; ties go to the lowest vertex
    /// indices (lexicographically first reveal set).
    pub fn best_move(&mut self, state: &GameState) -> Result<Move> {
        if state.is_terminal() {
            return Err(Error::GameOver);
        }
        let (burned, revealed) = self.masks(state)?;
        match state.phase {
            Phase::SaboteurReveal => {
                let target = self.reveal_value(burned, revealed)?;
                let pool: Vec<usize> = bits(self.pool(burned, revealed)).collect();
                let size = self.rules.k.min(pool.len());
                let mut combo = Combinations::new(pool.len(), size);
                while let Some(idx) = combo.next() {
                    let chosen = idx.iter().fold(0u128, |m, &i| m | 1u128 << pool[i]);
                    if self.burn_value(burned, revealed | chosen)? == target {
                        return Ok(Move::Reveal(idx.iter().map(|&i| pool[i]).collect()));
                    }
                }
                unreachable!("the optimal reveal is among the enumerated ones")
            }
            Phase::ArsonistBurn => {
                let options = revealed & !burned;
                if options == 0 {
                    return Ok(Move::Pass);
                }
                let target = self.burn_value(burned, revealed)?;
                for v in bits(options) {
                    if self.after_burn(burned | 1u128 << v, revealed)? == target {
                        return Ok(Move::Burn(v));
                    }
                }
                unreachable!("the optimal burn is among the options")
            }
        }
    }

    /// Optimal line from `state` to the end of the game.
    pub fn principal_line(&mut self, g: &Graph, state: &GameState) -> Result<Vec<Move>> {
        let mut line = Vec::new();
        let mut s = state.clone();
        while !s.is_terminal() {
            let mv = self.best_move(&s)?;
            s = self.rules.apply(g, &s, &mv)?;
            line.push(mv);
        }
        Ok(line)
    }
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    idx: Vec<usize>,
    n: usize,
    started: bool,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            idx: (0..k).collect(),
            n,
            started: false,
            done: k > n,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let k = self.idx.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        self.done = true;
        None
    }
}

/// The k-liminal burning number under the default rules.
pub fn liminal_value(g: &Graph, k: usize, budget: &Budget) -> Result<SolveResult> {
    liminal_value_with(g, LiminalRules::new(k), budget)
}

pub fn liminal_value_with(g: &Graph, rules: LiminalRules, budget: &Budget) -> Result<SolveResult> {
    let mut solver = LiminalSolver::new(g, rules, budget)?;
    let root = GameState::initial(g);
    let value = solver.game_value(&root)?;
    let principal_line = solver.principal_line(g, &root)?;
    Ok(SolveResult {
        kind: GameKind::Liminal,
        value,
        principal_line,
        nodes_expanded: solver.nodes_expanded(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub k: usize,
    pub value: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sweep {
    pub entries: Vec<SweepEntry>,
    pub burning_number: u32,
    pub cooling_number: u32,
    /// Smallest k in the sweep with `b_k = b`.
    pub k_star: Option<usize>,
    /// Largest k in the sweep with `b_k = CL`.
    pub k_prime: Option<usize>,
}

/// `b_k(G)` for `k = 1..=k_max`, computed in parallel, plus the endpoints.
pub fn liminal_sweep(g: &Graph, k_max: usize, budget: &Budget) -> Result<Sweep> {
    let values: Vec<Result<SweepEntry>> = (1..=k_max)
        .into_par_iter()
        .map(|k| liminal_value(g, k, budget).map(|r| SweepEntry { k, value: r.value }))
        .collect();
    let entries = values.into_iter().collect::<Result<Vec<_>>>()?;
    let burning = burning_number(g, &Budget::burning().with_node_limit(budget.node_limit))?.value;
    let cooling = cooling_number(g, &Budget { max_vertices: budget.max_vertices.max(16), ..*budget })?.value;
    let k_star = entries.iter().find(|e| e.value == burning).map(|e| e.k);
    let k_prime = entries.iter().rev().find(|e| e.value == cooling).map(|e| e.k);
    Ok(Sweep {
        entries,
        burning_number: burning,
        cooling_number: cooling,
        k_star,
        k_prime,
    })
}
