//! Burning as packing: the ball burned around each source is a cube of odd
//! side, so a game of `m` rounds on `[n]^d` corresponds to disjoint cubes of
//! sides `2m - 1, ..., 3, 1`.

mod genfun;
mod pack;

use serde::{Deserialize, Serialize};

pub use genfun::{f_value, f_values, genfun, k_star_lower_bound, GenFunTable, KStarReport, MAX_GENFUN_N};
pub use pack::{enumerate_1d, pack_1d, pack_small_2d, PackOutcome};

/// An axis-aligned cube of odd side with its lowest corner at `corner`
/// (1-based coordinates).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TilePlacement {
    pub side: usize,
    pub corner: Vec<usize>,
}

impl TilePlacement {
    /// Inclusive coordinate range covered along `axis`.
    pub fn span(&self, axis: usize) -> (usize, usize) {
        (self.corner[axis], self.corner[axis] + self.side - 1)
    }

    pub fn fits_in(&self, n: usize) -> bool {
        (0..self.corner.len()).all(|a| self.corner[a] >= 1 && self.span(a).1 <= n)
    }

    pub fn overlaps(&self, other: &TilePlacement) -> bool {
        (0..self.corner.len()).all(|a| {
            let (lo1, hi1) = self.span(a);
            let (lo2, hi2) = other.span(a);
            lo1 <= hi2 && lo2 <= hi1
        })
    }
}

/// True when every tile fits in `[1, n]^d` and no two tiles overlap.
pub fn is_packing(n: usize, tiles: &[TilePlacement]) -> bool {
    tiles.iter().all(|t| t.side % 2 == 1 && t.fits_in(n))
        && tiles
            .iter()
            .enumerate()
            .all(|(i, a)| tiles[i + 1..].iter().all(|b| !a.overlaps(b)))
}
