use std::collections::HashMap;

use super::{bits, Budget, GameKind, MaskGraph, Meter, Move, SolveResult};
use crate::error::Result;
use crate::Graph;

struct Cooler {
    mg: MaskGraph,
    memo: HashMap<u128, u32>,
    meter: Meter,
}

impl Cooler {
    /// Rounds left, counting the current one, when the player must place a
    /// source on the non-full set `burned`.
    fn value(&mut self, burned: u128) -> Result<u32> {
        if let Some(&v) = self.memo.get(&burned) {
            return Ok(v);
        }
        self.meter.tick()?;
        // placements only speed things up, so free propagation bounds the game
        let ceiling = if burned == 0 { u32::MAX } else { 1 + self.mg.rounds_to_fill(burned) };
        let mut best = 0;
        for v in bits(!burned & self.mg.full) {
            let value = self.after_placing(burned | 1u128 << v)?;
            if value > best {
                best = value;
                if best >= ceiling {
                    break;
                }
            }
        }
        self.memo.insert(burned, best);
        Ok(best)
    }

    fn after_placing(&mut self, burned: u128) -> Result<u32> {
        if burned == self.mg.full {
            return Ok(1);
        }
        let next = self.mg.spread(burned);
        if next == self.mg.full {
            return Ok(2);
        }
        Ok(1 + self.value(next)?)
    }
}

/// Exact cooling number: the longest game when every round must place a
/// source on an unburned vertex while one exists.
pub fn cooling_number(g: &Graph, budget: &Budget) -> Result<SolveResult> {
    budget.admit(g)?;
    let mut c = Cooler {
        mg: MaskGraph::new(g),
        memo: HashMap::new(),
        meter: Meter::new(budget),
    };
    let value = c.value(0)?;

    let mut line = Vec::new();
    let mut burned = 0u128;
    let mut remaining = value;
    loop {
        let v = bits(!burned & c.mg.full)
            .find(|&v| c.after_placing(burned | 1u128 << v).ok() == Some(remaining))
            .expect("an optimal placement exists");
        line.push(Move::Burn(v));
        burned |= 1u128 << v;
        if burned == c.mg.full {
            break;
        }
        burned = c.mg.spread(burned);
        remaining -= 1;
        if burned == c.mg.full {
            break;
        }
    }
    Ok(SolveResult {
        kind: GameKind::Cool,
        value,
        principal_line: line,
        nodes_expanded: c.meter.nodes(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burn::{play_sequence, SourceSequence};
    use crate::graph::{path, strong_path};

    fn cl(g: &Graph) -> SolveResult {
        cooling_number(g, &Budget::cooling()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(cl(&path(3).unwrap()).value, 2);
        assert_eq!(cl(&strong_path(3, 2).unwrap()).value, 3);
        assert_eq!(cl(&path(1).unwrap()).value, 1);
    }

    #[test]
    fn line_replays_to_value() {
        for g in [path(7).unwrap(), strong_path(3, 2).unwrap(), strong_path(4, 2).unwrap()] {
            let r = cl(&g);
            let seq = r
                .principal_line
                .iter()
                .map(|m| match m {
                    Move::Burn(v) => *v,
                    _ => unreachable!(),
                })
                .collect();
            assert_eq!(play_sequence(&g, &SourceSequence::new(seq)).unwrap(), r.value);
        }
    }
}
