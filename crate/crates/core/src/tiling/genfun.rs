//! Counting tilings of `[1, n^2]` that start with the big tile.
//!
//! After the tile of length `2n - 1` is laid at `[l + 1, l + 2n - 1]`, the
//! tiles `T = {1, 3, ..., 2n - 3}` must split into a subset `S` summing to `l`
//! on the left and `T \ S` on the right. The coefficient `c[l][r]` of
//! `x^l y^r` in `prod_{i=1}^{n-1} (1 + x^{2i-1} y)` counts the `r`-subsets
//! summing to `l`, so
//! `f(n, l) = sum_r c[l][r] r! (n - 1 - r)!`
//! counts the orderings that finish the tiling.

use std::collections::BTreeMap;

use num::{BigUint, One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_GENFUN_N: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFunTable {
    pub n: usize,
    /// Dense `[l][r]`, `l <= (n-1)^2`, `r <= n - 1`.
    coeffs: Vec<Vec<BigUint>>,
}

impl GenFunTable {
    pub fn coeff(&self, l: usize, r: usize) -> BigUint {
        self.coeffs
            .get(l)
            .and_then(|row| row.get(r))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn max_offset(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Nonzero coefficients keyed by `(l, r)`.
    pub fn nonzero(&self) -> BTreeMap<(usize, usize), BigUint> {
        let mut out = BTreeMap::new();
        for (l, row) in self.coeffs.iter().enumerate() {
            for (r, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.insert((l, r), c.clone());
                }
            }
        }
        out
    }

    /// Sum of all coefficients, i.e. the number of subsets of `T`.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().flatten().sum()
    }
}

/// Expands `prod_{i=1}^{n-1} (1 + x^{2i-1} y)`.
pub fn genfun(n: usize) -> Result<GenFunTable> {
    if !(2..=MAX_GENFUN_N).contains(&n) {
        return Err(Error::OutOfRange(format!("generating function needs 2 <= n <= {MAX_GENFUN_N}, got {n}")));
    }
    let max_l = (n - 1) * (n - 1);
    let mut coeffs = vec![vec![BigUint::zero(); n]; max_l + 1];
    coeffs[0][0] = BigUint::one();
    let mut reach = 0; // largest l with a nonzero coefficient so far
    for i in 1..n {
        let tile = 2 * i - 1;
        for l in (0..=reach).rev() {
            for r in (0..i).rev() {
                if !coeffs[l][r].is_zero() {
                    let c = coeffs[l][r].clone();
                    coeffs[l + tile][r + 1] += c;
                }
            }
        }
        reach += tile;
    }
    Ok(GenFunTable { n, coeffs })
}

fn factorials(n: usize) -> Vec<BigUint> {
    let mut f = vec![BigUint::one()];
    for i in 1..=n {
        let next = &f[i - 1] * BigUint::from(i);
        f.push(next);
    }
    f
}

/// `f(n, l)` for every `l` in `0..=(n-1)^2`.
pub fn f_values(n: usize) -> Result<Vec<BigUint>> {
    let table = genfun(n)?;
    let fact = factorials(n);
    Ok((0..=table.max_offset())
        .map(|l| {
            (0..n)
                .map(|r| &table.coeffs[l][r] * &fact[r] * &fact[n - 1 - r])
                .sum()
        })
        .collect())
}

pub fn f_value(n: usize, l: usize) -> Result<BigUint> {
    let max_l = n.saturating_sub(1).pow(2);
    if l > max_l {
        return Err(Error::OutOfRange(format!("offset {l} outside 0..={max_l}")));
    }
    Ok(f_values(n)?.swap_remove(l))
}

fn big_map<S: Serializer>(m: &BTreeMap<usize, BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v.to_string())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KStarReport {
    pub n: usize,
    /// `k*` is strictly larger than this.
    pub lower_bound: i64,
    /// Offsets `l` where the big tile still admits a completion.
    pub good_offsets: Vec<usize>,
    #[serde(serialize_with = "big_map")]
    pub f_values: BTreeMap<usize, BigUint>,
    /// Same bound with the offset sum cut at `l <= n` instead of `(n-1)^2`.
    pub short_range_bound: i64,
}

/// `n^2 - #{l : f(n, l) > 0}`: the saboteur can spoil every offset where the
/// big tile leaves no completion, so `k*` must exceed this.
pub fn k_star_lower_bound(n: usize) -> Result<KStarReport> {
    let values = f_values(n)?;
    let good_offsets: Vec<usize> = (0..values.len()).filter(|&l| !values[l].is_zero()).collect();
    let n_sq = (n * n) as i64;
    let short_range = good_offsets.iter().filter(|&&l| l <= n).count() as i64;
    Ok(KStarReport {
        n,
        lower_bound: n_sq - good_offsets.len() as i64,
        short_range_bound: n_sq - short_range,
        good_offsets,
        f_values: values.into_iter().enumerate().collect(),
    })
}
