//! Lower bounds on the burning number of strong products of paths.
//!
//! Burning `[n]^d` in `x` rounds leaves at most `x` disjoint cubes of odd side
//! lengths `2x - 1, ..., 3, 1`, so `n^d >= 1^d + 3^d + ... + (2x - 1)^d` when
//! the cubes pack. The right side extends to a rational polynomial
//! `g_bar(d)` through an Euler-Maclaurin formula with Bernoulli coefficients;
//! the largest real root `x*` of `q(x) = n^d - g_bar(d)(x)` gives the bound
//! `floor(x*)`.
//!
//! Everything that decides a bound is exact rational arithmetic. Floating
//! point only appears in the closed-form cross-checks and in reporting.

mod bernoulli;
mod poly;

use num::integer::Roots;
use num::{BigInt, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

pub use bernoulli::{bernoulli, BernoulliTable, MAX_BERNOULLI_INDEX};
pub use poly::{rat, ratio, Polynomial, Rational};

use crate::error::{Error, Result};

pub const MAX_DIMENSION: usize = 50;

/// Closed-form roots must match the bisection midpoint this closely.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-9;

pub fn default_tolerance() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u64).pow(12))
}

/// Real extension of `m -> sum_{k=1}^{m} (2k - 1)^d`.
pub fn g_bar(d: usize) -> Result<Polynomial> {
    if d == 0 || d > MAX_DIMENSION {
        return Err(Error::OutOfRange(format!("dimension must be in 1..={MAX_DIMENSION}, got {d}")));
    }
    let bern = bernoulli(d + 1)?;
    let odd = Polynomial::linear(rat(2), rat(-1)); // 2x - 1
    let d_i = d as i64;

    let mut total = (&odd.pow(d as u32 + 1) - &Polynomial::constant(rat(1))).scale(&ratio(1, 2 * (d_i + 1)));

    let mut k_factorial = Rational::one(); // (k+1)!
    let mut falling = Rational::one(); // d! / (d-k)!
    let mut two_pow = Rational::one(); // 2^k
    for k in 0..=d {
        k_factorial *= rat(k as i64 + 1);
        if k > 0 {
            falling *= rat(d_i - k as i64 + 1);
            two_pow *= rat(2);
        }
        let coeff = bern.get(k + 1) / &k_factorial * &two_pow * &falling;
        if coeff.is_zero() {
            continue;
        }
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        let bracket = &odd.pow((d - k) as u32) + &Polynomial::constant(sign);
        total = &total + &bracket.scale(&coeff);
    }
    Ok(total)
}

/// `q(x) = n^d - g_bar(d)(x)`.
pub fn q_poly(n: u64, d: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let nd = Rational::from_integer(BigInt::from(n).pow(d as u32));
    Ok(&Polynomial::constant(nd) - &g_bar(d)?)
}

/// Bisection bracket around the largest root of a `q` polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    /// `q(lower) >= 0`
    pub lower: Rational,
    /// `q(upper) <= 0`
    pub upper: Rational,
    /// Set when bisection or the integer probe hit the root exactly.
    pub exact_root: Option<Rational>,
    pub floor_x_star: u64,
    pub is_integral: bool,
    /// `floor(x*)`
    pub bound: u64,
}

impl BoundResult {
    pub fn midpoint(&self) -> Rational {
        (&self.lower + &self.upper) / rat(2)
    }

    pub fn approx(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// Locates the root of `p` in `[lo, hi]` by exact bisection, for `p`
/// decreasing there with `p(lo) >= 0 >= p(hi)`, and decides `floor(x*)` and
/// integrality exactly.
pub fn largest_root(p: &Polynomial, lo: Rational, hi: Rational, tol: &Rational) -> Result<BoundResult> {
    if !tol.is_positive() || tol >= &rat(1) {
        return Err(Error::OutOfRange(format!("tolerance must be in (0, 1), got {tol}")));
    }
    let (mut lo, mut hi) = (lo, hi);
    let p_lo = p.eval(&lo);
    let p_hi = p.eval(&hi);
    if p_lo.is_negative() {
        return Err(Error::Domain(format!("q({lo}) = {p_lo} < 0, no root bracketed")));
    }
    if p_hi.is_positive() {
        return Err(Error::Domain(format!("q({hi}) = {p_hi} > 0, no root bracketed")));
    }

    let mut exact = if p_hi.is_zero() {
        Some(hi.clone())
    } else if p_lo.is_zero() {
        Some(lo.clone())
    } else {
        None
    };
    while exact.is_none() && &hi - &lo > *tol {
        let mid = (&lo + &hi) / rat(2);
        let v = p.eval(&mid);
        if v.is_zero() {
            exact = Some(mid);
        } else if v.is_positive() {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    if exact.is_none() {
        // at most one integer lies strictly inside a bracket narrower than 1
        let k = hi.ceil() - rat(1);
        if k > lo {
            let v = p.eval(&k);
            if v.is_zero() {
                exact = Some(k);
            } else if v.is_positive() {
                lo = k;
            } else {
                hi = k;
            }
        }
    }

    let to_u64 = |r: Rational| {
        r.floor()
            .to_integer()
            .to_u64()
            .ok_or_else(|| Error::Domain(format!("root {r} out of range")))
    };
    let (floor_x_star, is_integral) = match &exact {
        Some(r) => {
            lo = r.clone();
            hi = r.clone();
            (to_u64(r.clone())?, r.is_integer())
        }
        None => (to_u64(lo.clone())?, false),
    };
    Ok(BoundResult {
        lower: lo,
        upper: hi,
        exact_root: exact,
        floor_x_star,
        is_integral,
        bound: floor_x_star,
    })
}

/// Root of `q_poly(n, d)` on `[1, n + 1]`.
///
/// `g_bar(d)(1) = 1 <= n^d`, and at `n + 1` the largest cube alone has side
/// `2n + 1`, so the bracket always holds the root.
pub fn strong_path_root(n: u64, d: usize, tol: &Rational) -> Result<BoundResult> {
    let q = q_poly(n, d)?;
    largest_root(&q, rat(1), Rational::from_integer(BigInt::from(n) + 1), tol)
}

/// Floating-point closed form for `x*` where one is known (`d` = 1, 2, 3).
pub fn closed_form_root(n: u64, d: usize) -> Option<f64> {
    let nf = n as f64;
    match d {
        1 => Some(nf.sqrt()),
        2 => {
            // Cardano on 4x^3 - x - 3n^2 = 0; the two cube roots multiply to 1/3
            let s = ((243.0 * nf.powi(4) - 1.0) / 27.0).sqrt();
            let a = (3.0 * nf * nf + s).cbrt();
            Some(0.5 * (a + 1.0 / (3.0 * a)))
        }
        3 => Some(0.5 * (1.0 + (1.0 + 8.0 * nf.powi(3)).sqrt()).sqrt()),
        _ => None,
    }
}

fn closed_form_agrees(root: &BoundResult, closed: f64) -> bool {
    (closed - root.approx()).abs() <= CLOSED_FORM_TOLERANCE
}

#[derive(Debug, Clone, PartialEq)]
pub struct KingsBound {
    pub n: u64,
    pub root: BoundResult,
    /// `floor(x*) + 1`
    pub bound: u64,
    pub closed_form: f64,
    pub closed_form_agrees: bool,
}

/// Lower bound on the burning number of the `n x n` king graph.
///
/// The cubic never has an integer root for `n > 1` (see
/// [`non_square_check`]), so the odd squares never tile the board exactly and
/// one more round is always needed.
pub fn kings_bound(n: u64) -> Result<KingsBound> {
    if n < 2 {
        return Err(Error::OutOfRange("kings bound needs n >= 2".into()));
    }
    let root = strong_path_root(n, 2, &default_tolerance())?;
    let closed_form = closed_form_root(n, 2).unwrap();
    Ok(KingsBound {
        n,
        bound: root.floor_x_star + 1,
        closed_form_agrees: closed_form_agrees(&root, closed_form),
        closed_form,
        root,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cube3Bound {
    pub n: u64,
    pub root: BoundResult,
    pub bound: u64,
    pub is_integral: bool,
    pub closed_form: f64,
    pub closed_form_agrees: bool,
}

/// Lower bound for the three-fold strong product, `floor(m*)` with
/// `m* = sqrt(1 + sqrt(1 + 8 n^3)) / 2`.
pub fn cube3_bound(n: u64) -> Result<Cube3Bound> {
    let root = strong_path_root(n, 3, &default_tolerance())?;
    let closed_form = closed_form_root(n, 3).unwrap();
    Ok(Cube3Bound {
        n,
        bound: root.floor_x_star,
        is_integral: root.is_integral,
        closed_form_agrees: closed_form_agrees(&root, closed_form),
        closed_form,
        root,
    })
}

/// True iff `k (2k + 1)(2k - 1) / 3` is not a perfect square. Expected to hold
/// for every `k > 1`; `k = 1` gives 1.
pub fn non_square_check(k: u64) -> bool {
    let k = k as u128;
    let value = k * (2 * k + 1) * (2 * k - 1) / 3;
    let r = value.sqrt();
    r * r != value
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassicalBounds {
    /// `ceil((-3 + sqrt(24 n + 33)) / 4)`
    pub land: u64,
    /// `ceil(sqrt(n))`
    pub sqrt_ceiling: u64,
    pub radius_plus_one: u64,
}

/// Reference upper bounds on `b(G)` for a connected graph on `n` vertices.
pub fn classical_bounds(n_vertices: u64, radius: u64) -> ClassicalBounds {
    // smallest t with 4t + 3 >= sqrt(24n + 33)
    let target = 24 * n_vertices as u128 + 33;
    let mut land = (target.sqrt() as u64).saturating_sub(3) / 4;
    while ((4 * land + 3) as u128).pow(2) < target {
        land += 1;
    }
    let mut sqrt_ceiling = n_vertices.sqrt();
    if sqrt_ceiling * sqrt_ceiling < n_vertices {
        sqrt_ceiling += 1;
    }
    ClassicalBounds {
        land,
        sqrt_ceiling,
        radius_plus_one: radius + 1,
    }
}

/// `p/q` form used in reports; integers keep a `/1` denominator.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q`, a decimal such as `0.001`, or scientific notation such as `1e-12`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("{s:?} is not a rational number"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let negative = int_part.starts_with('-');
    let int_digits = int_part.trim_start_matches(['-', '+']);
    if int_digits.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_digits.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int_digits}{frac_part}").parse().map_err(|_| bad())?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        Rational::from_integer(digits * ten.pow(scale as u32))
    } else {
        Rational::new(digits, ten.pow((-scale) as u32))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}
