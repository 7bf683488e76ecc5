//! Cross-check tables: solver values next to the closed forms and bounds
//! they are supposed to satisfy. A row never asserts a formula the solver
//! refutes; it records `paper_differs` instead.

use num::integer::Roots;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{cube3_bound, kings_bound, strong_path_root, default_tolerance, rational_string};
use crate::burn::{cooling_sequence_strong, play_sequence};
use crate::error::{Error, Result};
use crate::graph::{path, strong_path};
use crate::solve::{burning_number, cooling_number, liminal_sweep, liminal_value, Budget};
use crate::tiling::k_star_lower_bound;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    PaperDiffers,
    Unsolved,
}

fn solved<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BudgetExhausted { .. }) | Err(Error::SizeLimit { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `floor(n / (k + 1)) + floor((-1 + sqrt(5 + 4k)) / 2)`
pub fn liminal_path_lower(n: u64, k: u64) -> u64 {
    // largest t with 2t + 1 <= sqrt(5 + 4k)
    let t = ((5 + 4 * k).sqrt() - 1) / 2;
    n / (k + 1) + t
}

/// `ceil(n / k) + k - 1`
pub fn liminal_path_upper(n: u64, k: u64) -> u64 {
    n.div_ceil(k) + k - 1
}

/// Closed form for `b_2(P_n)`: `ceil((n + 2) / 3)`.
pub fn two_liminal_formula(n: u64) -> u64 {
    (n + 2).div_ceil(3)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathRow {
    pub n: u64,
    pub k: u64,
    pub minimax: Option<u32>,
    /// Only known in closed form for `k = 2`.
    pub formula: Option<u64>,
    pub lower: u64,
    pub upper: u64,
    pub status: Status,
}

/// `b_k(P_n)` for `n <= n_max`, `k <= k_max` against the path bounds and, for
/// `k = 2`, the closed form.
pub fn paths_report(n_max: u64, k_max: u64, budget: &Budget) -> Result<Vec<PathRow>> {
    let keys: Vec<(u64, u64)> = (1..=n_max).flat_map(|n| (1..=k_max).map(move |k| (n, k))).collect();
    keys.into_par_iter()
        .map(|(n, k)| {
            let g = path(n as usize)?;
            let minimax = solved(liminal_value(&g, k as usize, budget))?.map(|r| r.value);
            let formula = (k == 2).then(|| two_liminal_formula(n));
            let lower = liminal_path_lower(n, k);
            let upper = liminal_path_upper(n, k);
            let status = match minimax {
                None => Status::Unsolved,
                Some(v) => {
                    let v = v as u64;
                    if v < lower || v > upper || formula.is_some_and(|f| f != v) {
                        Status::PaperDiffers
                    } else {
                        Status::Match
                    }
                }
            };
            Ok(PathRow { n, k, minimax, formula, lower, upper, status })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KingsRow {
    pub n: u64,
    pub x_star_lower: String,
    pub x_star_upper: String,
    pub kings_bound: u64,
    pub burning_number: Option<u32>,
    pub closed_form_agrees: bool,
    pub status: Status,
}

pub fn kings_report(n_max: u64, budget: &Budget) -> Result<Vec<KingsRow>> {
    (2..=n_max.max(1))
        .filter(|&n| n >= 2)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let kb = kings_bound(n)?;
            let b = solved(strong_path(n as usize, 2).and_then(|g| burning_number(&g, budget)))?.map(|r| r.value);
            let status = match b {
                None => Status::Unsolved,
                Some(b) if kb.bound <= b as u64 && kb.closed_form_agrees => Status::Match,
                Some(_) => Status::PaperDiffers,
            };
            Ok(KingsRow {
                n,
                x_star_lower: rational_string(&kb.root.lower),
                x_star_upper: rational_string(&kb.root.upper),
                kings_bound: kb.bound,
                burning_number: b,
                closed_form_agrees: kb.closed_form_agrees,
                status,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubeRow {
    pub n: u64,
    pub bound: u64,
    pub is_integral: bool,
    pub burning_number: Option<u32>,
    pub closed_form_agrees: bool,
    pub status: Status,
}

/// The three-fold product: `b >= floor(m*)`, with equality exactly when `m*`
/// is an integer.
pub fn cube_report(n_max: u64, budget: &Budget) -> Result<Vec<CubeRow>> {
    (1..=n_max)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let cb = cube3_bound(n)?;
            let b = solved(strong_path(n as usize, 3).and_then(|g| burning_number(&g, budget)))?.map(|r| r.value);
            let status = match b {
                None => Status::Unsolved,
                Some(b) => {
                    let b = b as u64;
                    if cb.bound <= b && cb.is_integral == (cb.bound == b) && cb.closed_form_agrees {
                        Status::Match
                    } else {
                        Status::PaperDiffers
                    }
                }
            };
            Ok(CubeRow {
                n,
                bound: cb.bound,
                is_integral: cb.is_integral,
                burning_number: b,
                closed_form_agrees: cb.closed_form_agrees,
                status,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpPathRow {
    pub n: u64,
    pub vertices: u64,
    pub x_star: String,
    pub is_integral: bool,
    pub burning_number: Option<u32>,
    pub status: Status,
}

/// `b(P_{n^2}) = n` and the root of `n^2 - x^2` is exactly `n`.
pub fn sharp_paths_report(n_max: u64, budget: &Budget) -> Result<Vec<SharpPathRow>> {
    (1..=n_max)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let root = strong_path_root(n * n, 1, &default_tolerance())?;
            let b = solved(path((n * n) as usize).and_then(|g| burning_number(&g, budget)))?.map(|r| r.value);
            let status = match b {
                None => Status::Unsolved,
                Some(b) if b as u64 == n && root.is_integral && root.bound == n => Status::Match,
                Some(_) => Status::PaperDiffers,
            };
            Ok(SharpPathRow {
                n,
                vertices: n * n,
                x_star: rational_string(&root.midpoint()),
                is_integral: root.is_integral,
                burning_number: b,
                status,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoolingRow {
    pub n: u64,
    pub d: u64,
    pub construction_rounds: u32,
    pub cooling_number: Option<u32>,
    pub status: Status,
}

/// The explicit cooling sequence lasts `n` rounds; the exact cooling number is
/// added where the exhaustive search fits the budget.
pub fn cooling_report(n_max: u64, d: u64, budget: &Budget) -> Result<Vec<CoolingRow>> {
    (2..=n_max.max(2))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let g = strong_path(n as usize, d as usize)?;
            let seq = cooling_sequence_strong(n as usize, d as usize)?;
            let rounds = play_sequence(&g, &seq)?;
            let exact = solved(cooling_number(&g, budget))?.map(|r| r.value);
            let status = if rounds as u64 != n || exact.is_some_and(|c| c as u64 != n) {
                Status::PaperDiffers
            } else {
                Status::Match
            };
            Ok(CoolingRow { n, d, construction_rounds: rounds, cooling_number: exact, status })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KStarRow {
    pub n: u64,
    /// `k*` on `P_{n^2}` must exceed this.
    pub lower_bound: i64,
    pub short_range_bound: i64,
    /// `ceil((n^2 + 2) / 3)`, the closed form for `b_2(P_{n^2})`.
    pub b2_formula: u64,
    pub b2_minimax: Option<u32>,
    pub k_star_minimax: Option<usize>,
    pub status: Status,
}

/// Three-way comparison on `P_{n^2}`: the `k*` bound from the generating
/// function, the `b_2` closed form, and the minimax values where feasible.
pub fn kstar_report(n_max: u64, budget: &Budget) -> Result<Vec<KStarRow>> {
    (2..=n_max.max(2))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let report = k_star_lower_bound(n as usize)?;
            let m = (n * n) as usize;
            let g = path(m)?;
            let sweep = solved(liminal_sweep(&g, m, budget))?;
            let b2 = sweep.as_ref().and_then(|s| s.entries.get(1)).map(|e| e.value);
            let k_star = sweep.as_ref().and_then(|s| s.k_star);
            let status = match k_star {
                None => Status::Unsolved,
                Some(k) if k as i64 > report.lower_bound => Status::Match,
                Some(_) => Status::PaperDiffers,
            };
            Ok(KStarRow {
                n,
                lower_bound: report.lower_bound,
                short_range_bound: report.short_range_bound,
                b2_formula: two_liminal_formula(m as u64),
                b2_minimax: b2,
                k_star_minimax: k_star,
                status,
            })
        })
        .collect()
}
