use serde::Serialize;

use super::TilePlacement;
use crate::error::{Error, Result};

fn check_sides(sides: &[usize]) -> Result<()> {
    match sides.iter().find(|&&s| s % 2 == 0) {
        Some(s) => Err(Error::OutOfRange(format!("tile sides must be odd, got {s}"))),
        None => Ok(()),
    }
}

/// Places the tiles disjointly inside `[1, n]`, trying tiles before gaps and
/// tiles in the given order at each cell.
pub fn pack_1d(n: usize, sides: &[usize]) -> Result<Option<Vec<TilePlacement>>> {
    check_sides(sides)?;
    let mut found = None;
    walk_1d(n, sides, &mut |p| {
        found = Some(p.to_vec());
        false
    });
    Ok(found)
}

/// Every disjoint placement of the tiles inside `[1, n]`, each sorted by position.
pub fn enumerate_1d(n: usize, sides: &[usize]) -> Result<Vec<Vec<TilePlacement>>> {
    check_sides(sides)?;
    let mut all = Vec::new();
    walk_1d(n, sides, &mut |p| {
        all.push(p.to_vec());
        true
    });
    Ok(all)
}

/// Visits placements until `visit` returns false.
fn walk_1d(n: usize, sides: &[usize], visit: &mut dyn FnMut(&[TilePlacement]) -> bool) {
    let total: usize = sides.iter().sum();
    if total > n {
        return;
    }
    let mut used = vec![false; sides.len()];
    let mut placed = Vec::with_capacity(sides.len());
    step_1d(1, n - total, sides, &mut used, &mut placed, visit);
}

fn step_1d(
    pos: usize,
    slack: usize,
    sides: &[usize],
    used: &mut [bool],
    placed: &mut Vec<TilePlacement>,
    visit: &mut dyn FnMut(&[TilePlacement]) -> bool,
) -> bool {
    if placed.len() == sides.len() {
        return visit(placed);
    }
    for i in 0..sides.len() {
        // equal sides are interchangeable; only the first unused one branches
        if used[i] || (0..i).any(|j| !used[j] && sides[j] == sides[i]) {
            continue;
        }
        used[i] = true;
        placed.push(TilePlacement { side: sides[i], corner: vec![pos] });
        let go_on = step_1d(pos + sides[i], slack, sides, used, placed, visit);
        placed.pop();
        used[i] = false;
        if !go_on {
            return false;
        }
    }
    if slack > 0 {
        return step_1d(pos + 1, slack - 1, sides, used, placed, visit);
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackOutcome {
    pub placements: Option<Vec<TilePlacement>>,
    /// The packing also covers every cell.
    pub is_tiling: bool,
    pub nodes: u64,
}

pub const MAX_PACK_2D_N: usize = 12;
pub const MAX_PACK_2D_M: usize = 5;

/// Packs the squares of sides `2m - 1, ..., 3, 1` into the `n x n` board.
pub fn pack_small_2d(n: usize, m: usize, node_limit: u64) -> Result<PackOutcome> {
    if n == 0 || n > MAX_PACK_2D_N || m == 0 || m > MAX_PACK_2D_M {
        return Err(Error::OutOfRange(format!(
            "2-d packing needs 1 <= n <= {MAX_PACK_2D_N} and 1 <= m <= {MAX_PACK_2D_M}, got n={n}, m={m}"
        )));
    }
    // area of the tiles is g_bar(2)(m) = m(2m-1)(2m+1)/3
    let area = m * (2 * m - 1) * (2 * m + 1) / 3;
    if area > n * n {
        return Ok(PackOutcome { placements: None, is_tiling: false, nodes: 0 });
    }
    let sides: Vec<usize> = (1..=m).rev().map(|i| 2 * i - 1).collect();
    let mut search = Pack2d {
        n,
        rows: vec![0u16; n],
        sides,
        placed: Vec::new(),
        nodes: 0,
        node_limit,
    };
    let found = search.place(0)?;
    Ok(PackOutcome {
        placements: found.then(|| search.placed.clone()),
        is_tiling: found && area == n * n,
        nodes: search.nodes,
    })
}

struct Pack2d {
    n: usize,
    rows: Vec<u16>,
    sides: Vec<usize>,
    placed: Vec<TilePlacement>,
    nodes: u64,
    node_limit: u64,
}

impl Pack2d {
    fn place(&mut self, i: usize) -> Result<bool> {
        if i == self.sides.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::BudgetExhausted { nodes: self.nodes });
        }
        let s = self.sides[i];
        let span = self.n - s;
        let row_mask = ((1u32 << s) - 1) as u16;
        for y in 0..=span {
            for x in 0..=span {
                // the first tile only needs one representative per board symmetry
                if i == 0 && (x > span - x || y > span - y || x > y) {
                    continue;
                }
                let mask = row_mask << x;
                if (y..y + s).any(|r| self.rows[r] & mask != 0) {
                    continue;
                }
                for r in y..y + s {
                    self.rows[r] |= mask;
                }
                self.placed.push(TilePlacement { side: s, corner: vec![x + 1, y + 1] });
                if self.place(i + 1)? {
                    return Ok(true);
                }
                self.placed.pop();
                for r in y..y + s {
                    self.rows[r] &= !mask;
                }
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::is_packing;

    #[test]
    fn pack_1d_examples() {
        let p = pack_1d(9, &[5, 3, 1]).unwrap().unwrap();
        let spans: Vec<(usize, usize)> = p.iter().map(|t| t.span(0)).collect();
        assert_eq!(spans, vec![(1, 5), (6, 8), (9, 9)]);
        assert_eq!(pack_1d(2, &[3]).unwrap(), None);
        assert!(pack_1d(4, &[2]).is_err());
    }

    #[test]
    fn enumerate_1d_examples() {
        let all = enumerate_1d(4, &[3, 1]).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|p| is_packing(4, p)));
        assert_eq!(enumerate_1d(9, &[5, 3, 1]).unwrap().len(), 6);
        // two gaps of one cell around a single tile of 1 in [1, 3]: 3 placements
        assert_eq!(enumerate_1d(3, &[1]).unwrap().len(), 3);
        assert_eq!(enumerate_1d(2, &[1, 1]).unwrap().len(), 1);
    }

    #[test]
    fn pack_2d_examples() {
        let o = pack_small_2d(2, 2, 1_000).unwrap();
        assert_eq!((o.placements, o.nodes), (None, 0));

        let o = pack_small_2d(3, 1, 1_000).unwrap();
        assert!(o.placements.is_some());
        assert!(!o.is_tiling);

        let o = pack_small_2d(4, 2, 1_000).unwrap();
        let tiles = o.placements.unwrap();
        assert!(is_packing(4, &tiles));
        assert_eq!(tiles.iter().map(|t| t.side).collect::<Vec<_>>(), vec![3, 1]);
        assert!(!o.is_tiling);

        assert!(pack_small_2d(1, 1, 10).unwrap().is_tiling);
        assert!(pack_small_2d(13, 1, 10).is_err());
        assert!(pack_small_2d(4, 6, 10).is_err());
    }

    #[test]
    fn pack_2d_geometry_beats_area() {
        // area 35 <= 36 but a 5x5 and a 3x3 cannot share a 6x6 board
        let o = pack_small_2d(6, 3, 1_000_000).unwrap();
        assert_eq!(o.placements, None);
        assert!(o.nodes > 0);
    }
}
