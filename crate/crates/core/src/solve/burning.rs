//! Burning number by iterative deepening over ball coverings.
//!
//! A game finishing in round `m` burns, for the source placed in round `i`,
//! exactly the ball of radius `m - i` around it, so `b(G) <= m` iff `V` is
//! covered by balls of distinct radii drawn from `{m-1, ..., 0}`. The search
//! branches on the lowest uncovered vertex: some ball must contain it.

use std::collections::HashSet;

use super::{bits, Budget, GameKind, MaskGraph, Meter, Move, SolveResult};
use crate::burn::{play_sequence, SourceSequence};
use crate::error::{Error, Result};
use crate::Graph;

struct CoverSearch<'a> {
    balls: Vec<Vec<u128>>,
    max_ball: Vec<u32>,
    root_stabilizer: Vec<&'a [usize]>,
    failed: HashSet<(u128, u128)>,
    meter: Meter,
}

impl CoverSearch<'_> {
    /// `avail` is a bitmask of unused radii. On success `placed` holds
    /// `(radius, center)` pairs.
    fn search(&mut self, uncovered: u128, avail: u128, placed: &mut Vec<(u32, usize)>) -> Result<bool> {
        if uncovered == 0 {
            return Ok(true);
        }
        if avail == 0 {
            return Ok(false);
        }
        self.meter.tick()?;
        let capacity: u32 = bits(avail).map(|r| self.max_ball[r]).sum();
        if uncovered.count_ones() > capacity {
            return Ok(false);
        }
        if self.failed.contains(&(uncovered, avail)) {
            return Ok(false);
        }

        let target = uncovered.trailing_zeros() as usize;
        let mut radii: Vec<usize> = bits(avail).collect();
        radii.reverse();
        for r in radii {
            let mut candidates: Vec<(usize, u128)> = bits(self.balls[r][target])
                .map(|c| (c, self.balls[r][c] & uncovered))
                .collect();
            if placed.is_empty() {
                candidates.retain(|&(c, _)| self.root_stabilizer.iter().all(|p| c <= p[c]));
            }
            let kept: Vec<(usize, u128)> = candidates
                .iter()
                .filter(|&&(c, gain)| {
                    !candidates.iter().any(|&(c2, gain2)| {
                        gain & !gain2 == 0 && (gain != gain2 || c2 < c)
                    })
                })
                .copied()
                .collect();
            let mut kept = kept;
            kept.sort_by_key(|&(c, gain)| (std::cmp::Reverse(gain.count_ones()), c));
            for (c, gain) in kept {
                placed.push((r as u32, c));
                if self.search(uncovered & !gain, avail & !(1u128 << r), placed)? {
                    return Ok(true);
                }
                placed.pop();
            }
        }
        self.failed.insert((uncovered, avail));
        Ok(false)
    }
}

/// Exact burning number, certified by replaying a valid source sequence.
pub fn burning_number(g: &Graph, budget: &Budget) -> Result<SolveResult> {
    budget.admit(g)?;
    let mg = MaskGraph::new(g);
    let n = g.order();

    let dist: Vec<Vec<u32>> = (0..n)
        .map(|v| g.bfs_distances(v).into_iter().map(|d| d.unwrap()).collect())
        .collect();
    let radius = (0..n).map(|v| *dist[v].iter().max().unwrap()).min().unwrap() as usize;
    let balls: Vec<Vec<u128>> = (0..=radius)
        .map(|r| {
            (0..n)
                .map(|c| (0..n).filter(|&v| dist[c][v] as usize <= r).fold(0u128, |m, v| m | 1u128 << v))
                .collect()
        })
        .collect();
    let max_ball = balls.iter().map(|row| row.iter().map(|b| b.count_ones()).max().unwrap()).collect();
    let symmetries = g.symmetries();
    let root_stabilizer: Vec<&[usize]> =
        symmetries.iter().filter(|p| p[0] == 0).map(Vec::as_slice).collect();

    let mut search = CoverSearch {
        balls,
        max_ball,
        root_stabilizer,
        failed: HashSet::new(),
        meter: Meter::new(budget),
    };

    // one ball of radius `radius` always suffices, so m never exceeds radius + 1
    for m in 1..=radius as u32 + 1 {
        search.failed.clear();
        let avail = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
        let mut placed = Vec::new();
        if search.search(mg.full, avail, &mut placed)? {
            let sequence = certificate(&mg, m, &placed);
            let rounds = play_sequence(g, &sequence)?;
            if rounds != m {
                return Err(Error::Domain(format!(
                    "covering certificate replays in {rounds} rounds, expected {m}"
                )));
            }
            return Ok(SolveResult {
                kind: GameKind::Burn,
                value: m,
                principal_line: sequence.sources.into_iter().map(Move::Burn).collect(),
                nodes_expanded: search.meter.nodes(),
            });
        }
    }
    unreachable!("a ball of radius equal to the graph radius covers every vertex")
}

/// Turns a ball covering into a legal source sequence.
///
/// The center of the radius-`(m - i)` ball is placed in round `i`. When that
/// center is already burned, or no ball uses that radius, the lowest unburned
/// vertex is placed instead; the burned set still contains every scheduled
/// ball, so the sequence finishes by round `m`.
fn certificate(mg: &MaskGraph, m: u32, placed: &[(u32, usize)]) -> SourceSequence {
    let mut scheduled = vec![None; m as usize];
    for &(r, c) in placed {
        scheduled[(m - 1 - r) as usize] = Some(c);
    }
    let mut burned = 0u128;
    let mut sources = Vec::new();
    for (i, slot) in scheduled.into_iter().enumerate() {
        if i > 0 {
            burned = mg.spread(burned);
        }
        if burned == mg.full {
            break;
        }
        let v = match slot {
            Some(c) if burned >> c & 1 == 0 => c,
            _ => (!burned & mg.full).trailing_zeros() as usize,
        };
        burned |= 1u128 << v;
        sources.push(v);
    }
    SourceSequence::new(sources)
}
