use num::{BigInt, One, Zero};
use serde::Serialize;

use super::poly::Rational;
use crate::error::{Error, Result};

pub const MAX_BERNOULLI_INDEX: usize = 200;

/// `B_0 ..= B_m` as the coefficients of `z / (1 - e^{-z}) = sum B_k z^k / k!`,
/// so `B_1 = +1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl Serialize for BernoulliTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.values.iter().map(|v| v.to_string()))
    }
}

/// Bernoulli numbers up to index `m` from `sum_{j<=m} C(m+1, j) B_j = 0`
/// (the `B_1 = -1/2` recurrence), with the sign of `B_1` flipped at the end.
pub fn bernoulli(m: usize) -> Result<BernoulliTable> {
    if m > MAX_BERNOULLI_INDEX {
        return Err(Error::OutOfRange(format!("Bernoulli index {m} exceeds {MAX_BERNOULLI_INDEX}")));
    }
    let mut values: Vec<Rational> = Vec::with_capacity(m + 1);
    values.push(Rational::one());
    for i in 1..=m {
        if i > 1 && i % 2 == 1 {
            values.push(Rational::zero());
            continue;
        }
        let mut binom = BigInt::one();
        let mut sum = Rational::zero();
        for (j, b) in values.iter().enumerate() {
            sum += b * Rational::from_integer(binom.clone());
            binom = binom * BigInt::from(i + 1 - j) / BigInt::from(j + 1);
        }
        // binom is now C(i+1, i)
        values.push(-sum / Rational::from_integer(binom));
    }
    if m >= 1 {
        values[1] = -values[1].clone();
    }
    Ok(BernoulliTable { values })
}
