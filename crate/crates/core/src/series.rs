//! Exact integer combinatorics and truncated power series.
//!
//! Every Hilbert-function count in the crate bottoms out here: the ambient
//! series `1 / prod(1 - t^w)` of a weighted projective space and the formal
//! quotient `prod(1 - t^d) / prod(1 - t^w)` of a complete intersection.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};

/// Integer power series known exactly up to (and including) `truncation_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Builds a series from its coefficients; the truncation order is `len - 1`.
    ///
    /// Panics on an empty coefficient vector.
    pub fn from_coefficients(coefficients: Vec<BigInt>) -> Self {
        assert!(!coefficients.is_empty(), "a truncated series has at least one coefficient");
        Self { coefficients }
    }

    pub fn zero(truncation_order: usize) -> Self {
        Self { coefficients: vec![BigInt::zero(); truncation_order + 1] }
    }

    pub fn one(truncation_order: usize) -> Self {
        let mut s = Self::zero(truncation_order);
        s.coefficients[0] = BigInt::one();
        s
    }

    pub fn truncation_order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `t^degree`, `None` past the truncation order.
    /// Negative degrees are zero.
    pub fn get(&self, degree: i64) -> Option<BigInt> {
        if degree < 0 {
            return Some(BigInt::zero());
        }
        self.coefficients.get(degree as usize).cloned()
    }

    /// Coefficient of `t^degree`; panics past the truncation order.
    pub fn coefficient(&self, degree: i64) -> BigInt {
        self.get(degree).unwrap_or_else(|| {
            panic!("coefficient of degree {degree} requested beyond truncation order {}", self.truncation_order())
        })
    }

    /// Multiplies in place by `1 - t^exponent`.
    pub fn mul_one_minus_power(&mut self, exponent: usize) {
        if exponent == 0 {
            self.coefficients.iter_mut().for_each(|c| c.set_zero());
            return;
        }
        // descending so that each step reads the unmodified lower coefficient
        for d in (exponent..self.coefficients.len()).rev() {
            let lower = self.coefficients[d - exponent].clone();
            self.coefficients[d] -= lower;
        }
    }

    /// Multiplies in place by `1 / (1 - t^exponent)`; `exponent` must be positive.
    pub fn div_one_minus_power(&mut self, exponent: usize) {
        assert!(exponent > 0, "1 - t^0 is not invertible");
        for d in exponent..self.coefficients.len() {
            let lower = self.coefficients[d - exponent].clone();
            self.coefficients[d] += lower;
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.truncation_order().min(rhs.truncation_order());
        let mut out = TruncatedSeries::zero(order);
        for (i, a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate().take(order + 1 - i) {
                out.coefficients[i + j] += a * b;
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.truncation_order() + 1)
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        // exact at every step: acc = C(n - k + i, i)
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `h^0(P^n, O(k))`: the number of degree-`k` monomials in `n + 1` variables.
pub fn h_proj(n: u64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    binomial(n + k as u64, n as i64)
}

fn check_positive(values: &[u64], what: &str) -> Result<()> {
    if let Some(pos) = values.iter().position(|&v| v == 0) {
        return Err(invalid(format!("{what} must be positive (entry {pos} is 0)")));
    }
    Ok(())
}

/// Expansion of `prod_j 1 / (1 - t^{w_j})` up to `truncation`.
///
/// Coefficient `d` counts monomials of weighted degree `d`. An empty weight
/// list gives the constant series 1.
pub fn series_one_over_products(weights: &[u64], truncation: usize) -> Result<TruncatedSeries> {
    check_positive(weights, "weights")?;
    let mut s = TruncatedSeries::one(truncation);
    for &w in weights {
        s.div_one_minus_power(w as usize);
    }
    Ok(s)
}

/// Expansion of `prod_i (1 - t^{d_i}) / prod_j (1 - t^{w_j})` up to `truncation`.
///
/// Purely formal: whether the degrees cut a regular sequence is not checked.
pub fn series_ratio(numerator_degrees: &[u64], weights: &[u64], truncation: usize) -> Result<TruncatedSeries> {
    check_positive(numerator_degrees, "degrees")?;
    let mut s = series_one_over_products(weights, truncation)?;
    for &d in numerator_degrees {
        s.mul_one_minus_power(d as usize);
    }
    Ok(s)
}

/// Single coefficient of [`series_ratio`], truncating at exactly `degree`.
pub fn ratio_coefficient(numerator_degrees: &[u64], weights: &[u64], degree: i64) -> Result<BigInt> {
    if degree < 0 {
        check_positive(numerator_degrees, "degrees")?;
        check_positive(weights, "weights")?;
        return Ok(BigInt::zero());
    }
    Ok(series_ratio(numerator_degrees, weights, degree as usize)?.coefficient(degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Pascal's triangle, built additively and independent of `binomial`.
    fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
        let mut t: Vec<Vec<BigInt>> = vec![vec![big(1)]];
        for n in 1..=rows {
            let prev = &t[n - 1];
            let mut row = vec![big(1); n + 1];
            for k in 1..n {
                row[k] = &prev[k - 1] + &prev[k];
            }
            t.push(row);
        }
        t
    }

    /// Counts exponent vectors with sum of `a_i * w_i` equal to `degree`.
    fn brute_force_monomials(weights: &[u64], degree: u64) -> u64 {
        match weights.split_first() {
            None => u64::from(degree == 0),
            Some((&w, rest)) => (0..=degree / w).map(|a| brute_force_monomials(rest, degree - a * w)).sum(),
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(10, 5), big(252));
        assert_eq!(binomial(9, 3), pascal(9)[9][3]);
        assert_eq!(binomial(9, 3), big(84));
        assert_eq!(binomial(4, -1), big(0));
        assert_eq!(binomial(4, 5), big(0));
        assert_eq!(binomial(0, 0), big(1));
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let t = pascal(40);
        for n in 0..=40u64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), t[n as usize][k as usize], "C({n},{k})");
            }
        }
    }

    #[test]
    fn h_proj_examples() {
        assert_eq!(h_proj(3, 4), big(35));
        assert_eq!(h_proj(3, 3), big(20));
        assert_eq!(h_proj(4, 0), big(1));
        assert_eq!(h_proj(3, -1), big(0));
    }

    #[test]
    fn ambient_series_examples() {
        assert_eq!(brute_force_monomials(&[1, 1, 1, 1], 4), 35);
        let s = series_one_over_products(&[1, 1, 1, 1], 4).unwrap();
        assert_eq!(s.coefficient(4), big(35));

        let s = series_one_over_products(&[1, 1, 1, 1, 3, 3, 3, 3], 3).unwrap();
        assert_eq!(s.coefficient(3), big(24));

        let s = series_one_over_products(&[2], 3).unwrap();
        assert_eq!(s.coefficient(3), big(0));

        let s = series_one_over_products(&[], 5).unwrap();
        assert_eq!(s, TruncatedSeries::one(5));
    }

    #[test]
    fn ratio_examples() {
        let w = [1, 1, 1, 1, 1];
        assert_eq!(ratio_coefficient(&[2, 2, 3], &w, 2).unwrap(), big(13));
        // (1-t^2)^2 (1-t^3) / (1-t)^5 at degree 3: 35 - 2*5 - 1
        assert_eq!(ratio_coefficient(&[2, 2, 3], &w, 3).unwrap(), big(24));
        assert_eq!(ratio_coefficient(&[], &[1, 1, 1, 1], 4).unwrap(), big(35));
        assert_eq!(ratio_coefficient(&[2], &w, -3).unwrap(), big(0));
    }

    #[test]
    fn zero_weight_or_degree_is_rejected() {
        assert!(series_one_over_products(&[1, 0], 3).is_err());
        assert!(series_ratio(&[0], &[1, 1], 3).is_err());
        assert!(ratio_coefficient(&[1], &[0], -1).is_err());
    }

    #[test]
    fn negative_and_out_of_range_queries() {
        let s = series_one_over_products(&[1, 1], 3).unwrap();
        assert_eq!(s.get(-2), Some(big(0)));
        assert_eq!(s.get(4), None);
        assert_eq!(s.truncation_order(), 3);
    }

    #[test]
    fn product_truncates_to_shorter_order() {
        let a = series_one_over_products(&[1], 6).unwrap();
        let b = series_one_over_products(&[1], 3).unwrap();
        let c = &a * &b;
        assert_eq!(c.truncation_order(), 3);
        assert_eq!(c, series_one_over_products(&[1, 1], 3).unwrap());
    }

    #[test]
    fn display_is_readable() {
        let s = series_ratio(&[2], &[1], 3).unwrap();
        assert_eq!(s.to_string(), "1 + 1*t + O(t^4)");
        assert_eq!(TruncatedSeries::zero(1).to_string(), "0 + O(t^2)");
    }

    proptest! {
        #[test]
        fn ambient_series_matches_enumeration(
            weights in prop::collection::vec(1u64..=6, 0..=6),
            degree in 0u64..=12,
        ) {
            let s = series_one_over_products(&weights, degree as usize).unwrap();
            prop_assert_eq!(s.coefficient(degree as i64), big(brute_force_monomials(&weights, degree) as i64));
        }

        #[test]
        fn ratio_is_inclusion_exclusion(
            degrees in prop::collection::vec(1u64..=5, 0..=4),
            weights in prop::collection::vec(1u64..=4, 1..=6),
            truncation in 0usize..=15,
        ) {
            let ratio = series_ratio(&degrees, &weights, truncation).unwrap();
            let ambient = series_one_over_products(&weights, truncation).unwrap();
            for d in 0..=truncation as i64 {
                let mut expected = BigInt::zero();
                for mask in 0u32..(1 << degrees.len()) {
                    let shift: i64 = degrees.iter().enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &e)| e as i64)
                        .sum();
                    let term = ambient.get(d - shift).unwrap();
                    if mask.count_ones() % 2 == 0 { expected += term } else { expected -= term }
                }
                prop_assert_eq!(ratio.coefficient(d), expected);
            }
        }

        #[test]
        fn empty_numerator_is_ambient(weights in prop::collection::vec(1u64..=6, 0..=6), t in 0usize..=12) {
            prop_assert_eq!(series_ratio(&[], &weights, t).unwrap(), series_one_over_products(&weights, t).unwrap());
        }

        #[test]
        fn division_undoes_multiplication(e in 1usize..=6, weights in prop::collection::vec(1u64..=4, 0..=4)) {
            let s = series_one_over_products(&weights, 12).unwrap();
            let mut t = s.clone();
            t.mul_one_minus_power(e);
            t.div_one_minus_power(e);
            prop_assert_eq!(t, s);
        }
    }
}
