use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense univariate polynomial with exact rational coefficients, lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn x() -> Self {
        Polynomial::new(vec![rat(0), rat(1)])
    }

    /// `a x + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Polynomial::new(vec![b, a])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::constant(Rational::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Polynomial::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = Polynomial::from_integers(&[-1, 0, 1]); // x^2 - 1
        let q = Polynomial::from_integers(&[1, 1]); // x + 1
        assert_eq!(&p - &(&q * &Polynomial::from_integers(&[-1, 1])), Polynomial::zero());
        assert_eq!(q.pow(3), Polynomial::from_integers(&[1, 3, 3, 1]));
        assert_eq!(p.derivative(), Polynomial::from_integers(&[0, 2]));
        assert_eq!(p.eval(&ratio(3, 2)), ratio(5, 4));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::new(vec![rat(1), rat(0)]).coefficients().len(), 1);
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_integers(&[0, -1, 0, 0, 2]).to_string(), "2*x^4 - x");
        assert_eq!(Polynomial::new(vec![ratio(-1, 3), rat(0), rat(0), ratio(4, 3)]).to_string(), "4/3*x^3 - 1/3");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
