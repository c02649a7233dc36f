//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A series of truncation `N` stores `c_0..=c_N`; every operation discards
//! exponents above `N`. Reciprocals are only ever of the form `1/(1 - q^d)`,
//! so there is no general division.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::TruncationMismatch;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(trunc: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        Series::monomial(1, 0, trunc)
    }

    /// `a·q^e`, or the zero series when `e > trunc`.
    pub fn monomial(a: impl Into<BigInt>, e: usize, trunc: usize) -> Self {
        let mut s = Series::zero(trunc);
        if e <= trunc {
            s.coeffs[e] = a.into();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least c_0");
        Series { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Series::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Largest retained exponent.
    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Drops every exponent above `trunc`. Panics if `trunc` exceeds the
    /// current truncation.
    pub fn truncate(&self, trunc: usize) -> Series {
        assert!(trunc <= self.trunc(), "cannot extend a truncated series");
        Series {
            coeffs: self.coeffs[..=trunc].to_vec(),
        }
    }

    fn check(&self, other: &Series) -> Result<(), TruncationMismatch> {
        if self.trunc() == other.trunc() {
            Ok(())
        } else {
            Err(TruncationMismatch {
                left: self.trunc(),
                right: other.trunc(),
            })
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series, TruncationMismatch> {
        self.check(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Series) -> Result<Series, TruncationMismatch> {
        self.check(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Result<Series, TruncationMismatch> {
        self.check(other)?;
        let n = self.trunc();
        let mut out = Series::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by `q^e` in place.
    pub fn shift(&mut self, e: usize) {
        let n = self.trunc();
        if e == 0 {
            return;
        }
        if e > n {
            self.coeffs.iter_mut().for_each(|c| c.set_zero());
            return;
        }
        self.coeffs.truncate(n + 1 - e);
        let mut zeros = vec![BigInt::zero(); e];
        zeros.append(&mut self.coeffs);
        self.coeffs = zeros;
    }

    /// Multiplies by `1 - q^d` in place. `d` must be positive.
    pub fn mul_one_minus_power(&mut self, d: usize) {
        assert!(d >= 1, "exponent must be positive");
        for i in (d..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - d];
        }
    }

    /// Multiplies by `1/(1 - q^d)` in place. `d` must be positive.
    pub fn mul_geometric_inverse(&mut self, d: usize) {
        assert!(d >= 1, "exponent must be positive");
        for i in d..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - d];
        }
    }

    /// Multiplies by `1 + q^j + ... + q^{cj}` in place.
    pub fn mul_finite_geometric(&mut self, j: usize, c: usize) {
        assert!(j >= 1, "exponent must be positive");
        // (1 - q^{(c+1)j}) / (1 - q^j); the numerator is 1 when it lies past trunc
        match (c + 1).checked_mul(j) {
            Some(top) if top <= self.trunc() => self.mul_one_minus_power(top),
            _ => {}
        }
        self.mul_geometric_inverse(j);
    }

    /// One `exponent<TAB>coefficient` line per retained exponent.
    pub fn to_table(&self) -> String {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| format!("{n}\t{c}\n"))
            .collect()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(if c.sign() == num_bigint::Sign::Minus { " - " } else { " + " })?;
            } else if c.sign() == num_bigint::Sign::Minus {
                f.write_str("-")?;
            }
            let mag = c.magnitude();
            match n {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "q^{n}")?,
                _ => write!(f, "{mag}q^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.trunc() + 1)
    }
}

/// `1/(1 - q^d)`: ones at every multiple of `d`.
pub fn geometric_inverse_factor(d: usize, trunc: usize) -> Series {
    let mut s = Series::one(trunc);
    s.mul_geometric_inverse(d);
    s
}

/// `1 + q^j + q^{2j} + ... + q^{cj}`.
pub fn finite_geometric_factor(j: usize, c: usize, trunc: usize) -> Series {
    assert!(j >= 1, "exponent must be positive");
    let mut s = Series::zero(trunc);
    for t in 0..=c {
        match t.checked_mul(j) {
            Some(e) if e <= trunc => s.coeffs[e] = BigInt::one(),
            _ => break,
        }
    }
    s
}

/// Product of `factor(j)` over `range`, all at truncation `trunc`.
pub fn product_over<F>(range: RangeInclusive<usize>, trunc: usize, mut factor: F) -> Series
where
    F: FnMut(usize) -> Series,
{
    range.fold(Series::one(trunc), |acc, j| {
        acc.mul(&factor(j)).expect("factor built at the product truncation")
    })
}

/// Outcome of comparing two series coefficient by coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SeriesComparison {
    Equal,
    Mismatch {
        exponent: usize,
        #[serde(serialize_with = "crate::series::bigint_as_string")]
        left: BigInt,
        #[serde(serialize_with = "crate::series::bigint_as_string")]
        right: BigInt,
    },
}

impl SeriesComparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, SeriesComparison::Equal)
    }
}

pub(crate) fn bigint_as_string<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn equal_up_to(a: &Series, b: &Series) -> Result<SeriesComparison, TruncationMismatch> {
    a.check(b)?;
    Ok(a.coeffs
        .iter()
        .zip(&b.coeffs)
        .position(|(x, y)| x != y)
        .map_or(SeriesComparison::Equal, |exponent| SeriesComparison::Mismatch {
            exponent,
            left: a.coeffs[exponent].clone(),
            right: b.coeffs[exponent].clone(),
        }))
}
