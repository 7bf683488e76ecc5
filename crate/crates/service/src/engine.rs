//! Move selection for the engine side: exact minimax when the board fits the
//! solver budget, a greedy fallback otherwise.

use liminal_core::solve::{Budget, GameState, LiminalRules, LiminalSolver, Move, Phase};
use liminal_core::{Error, Graph, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineMode {
    Exact,
    Heuristic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Suggestion {
    #[serde(rename = "move")]
    pub mv: Move,
    /// Minimax value of the position; absent for heuristic moves.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u32>,
    pub certified: bool,
}

#[derive(Debug)]
pub struct Engine {
    rules: LiminalRules,
    solver: Option<LiminalSolver>,
}

impl Engine {
    pub fn new(g: &Graph, rules: LiminalRules, budget: &Budget) -> Engine {
        Engine { rules, solver: LiminalSolver::new(g, rules, budget).ok() }
    }

    pub fn mode(&self) -> EngineMode {
        if self.solver.is_some() {
            EngineMode::Exact
        } else {
            EngineMode::Heuristic
        }
    }

    pub fn suggest(&mut self, g: &Graph, state: &GameState) -> Result<Suggestion> {
        if state.is_terminal() {
            return Err(Error::GameOver);
        }
        if let Some(solver) = self.solver.as_mut() {
            let exact = solver.best_move(state).and_then(|mv| Ok((mv, solver.game_value(state)?)));
            match exact {
                Ok((mv, value)) => return Ok(Suggestion { mv, value: Some(value), certified: true }),
                // out of budget mid-game: the rest of the session is uncertified
                Err(Error::BudgetExhausted { .. }) => self.solver = None,
                Err(e) => return Err(e),
            }
        }
        Ok(Suggestion { mv: greedy_move(g, &self.rules, state), value: None, certified: false })
    }
}

/// Unburned vertices that burning `v` would reach by the next propagation.
fn coverage(g: &Graph, state: &GameState, v: usize) -> usize {
    std::iter::once(v)
        .chain(g.neighbors(v).iter().copied())
        .filter(|&w| !state.burned.contains(w))
        .count()
}

/// Arsonist burns the revealed vertex with the largest coverage; saboteur
/// reveals the vertices with the smallest coverage. Ties go to the lowest index.
pub fn greedy_move(g: &Graph, rules: &LiminalRules, state: &GameState) -> Move {
    match state.phase {
        Phase::ArsonistBurn => rules
            .burn_options(state)
            .iter()
            .max_by_key(|&v| (coverage(g, state, v), std::cmp::Reverse(v)))
            .map_or(Move::Pass, Move::Burn),
        Phase::SaboteurReveal => {
            let mut pool = rules.reveal_pool(state).to_vec();
            pool.sort_by_key(|&v| (coverage(g, state, v), v));
            pool.truncate(rules.reveal_size(state));
            pool.sort_unstable();
            Move::Reveal(pool)
        }
    }
}
