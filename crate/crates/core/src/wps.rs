//! Weighted projective spaces and weighted complete intersections.
//!
//! Only numerology is computed: section counts, the canonical weight from
//! adjunction, Fano index and the projective target of the embedding by a
//! given polarization. Smoothness and well-formedness are taken on trust.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{invalid, Error, Result};
use crate::series::ratio_coefficient;

/// Complete intersection of hypersurfaces of the given degrees in `P(weights)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedCompleteIntersection {
    weights: Vec<u64>,
    degrees: Vec<u64>,
}

impl WeightedCompleteIntersection {
    pub fn new(weights: Vec<u64>, degrees: Vec<u64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(invalid("ambient weight list is empty"));
        }
        if weights.iter().chain(&degrees).any(|&v| v == 0) {
            return Err(invalid("weights and degrees must be positive"));
        }
        if degrees.len() >= weights.len() {
            return Err(invalid(format!(
                "{} equations in a space with {} coordinates leave nothing positive-dimensional",
                degrees.len(),
                weights.len()
            )));
        }
        Ok(Self { weights, degrees })
    }

    /// The ambient space `P(weights)` itself.
    pub fn ambient(weights: Vec<u64>) -> Result<Self> {
        Self::new(weights, Vec::new())
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn dimension(&self) -> i64 {
        (self.weights.len() - 1 - self.degrees.len()) as i64
    }

    /// `h^0(O_X(m))`, the degree-`m` coefficient of the Hilbert series.
    pub fn section_count(&self, m: i64) -> BigInt {
        ratio_coefficient(&self.degrees, &self.weights, m).expect("validated on construction")
    }

    /// `K_X = O(sum of degrees - sum of weights)`.
    pub fn canonical_weight(&self) -> i64 {
        let d: u64 = self.degrees.iter().sum();
        let w: u64 = self.weights.iter().sum();
        d as i64 - w as i64
    }

    /// `q` with `-K_X = O(q * polarization)`.
    pub fn fano_index(&self, polarization: i64) -> Result<i64> {
        if polarization < 1 {
            return Err(invalid(format!("polarization weight must be positive, got {polarization}")));
        }
        let anticanonical = -self.canonical_weight();
        if anticanonical <= 0 {
            return Err(invalid(format!("not Fano: -K = O({anticanonical})")));
        }
        if anticanonical % polarization != 0 {
            return Err(Error::NotDivisible { anticanonical, polarization });
        }
        Ok(anticanonical / polarization)
    }

    pub fn with_degree(&self, degree: u64) -> Result<Self> {
        let mut degrees = self.degrees.clone();
        degrees.push(degree);
        Self::new(self.weights.clone(), degrees)
    }

    pub fn with_weight(&self, weight: u64) -> Result<Self> {
        let mut weights = self.weights.clone();
        weights.push(weight);
        Self::new(weights, self.degrees.clone())
    }
}

/// One universal-extension candidate: a weighted complete intersection and the
/// polarization weight embedding it, attached to the K3 family `(g1, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionCase {
    pub name: &'static str,
    pub g1: i64,
    pub k: i64,
    pub variety: WeightedCompleteIntersection,
    pub polarization: i64,
}

/// Dimension, Fano index and projective target dimension of an extension case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtensionRecord {
    pub dimension: i64,
    pub index: i64,
    pub target: i64,
}

fn weights(groups: &[(u64, usize)]) -> Vec<u64> {
    groups.iter().flat_map(|&(w, n)| std::iter::repeat_n(w, n)).collect()
}

fn case(name: &'static str, g1: i64, k: i64, w: &[(u64, usize)], degrees: &[u64]) -> ExtensionCase {
    ExtensionCase {
        name,
        g1,
        k,
        variety: WeightedCompleteIntersection::new(weights(w), degrees.to_vec())
            .expect("catalog entries are well formed"),
        polarization: k,
    }
}

/// The built-in catalog, keyed by `(g1, k)`.
pub fn extension_catalog() -> Vec<ExtensionCase> {
    vec![
        case("X_{6,2}", 2, 2, &[(1, 3), (3, 1), (2, 15)], &[6]),
        case("X_{6,3}", 2, 3, &[(1, 3), (3, 1), (3, 10)], &[6]),
        case("X_{6,4}", 2, 4, &[(1, 3), (3, 1), (4, 6)], &[6]),
        case("X_{6,5}", 2, 5, &[(1, 3), (3, 1), (5, 3)], &[6]),
        case("X_{6,6}", 2, 6, &[(1, 3), (3, 1), (6, 1)], &[6]),
        case("X_{4,2}", 3, 2, &[(1, 4), (2, 10)], &[4]),
        case("X_{4,3}", 3, 3, &[(1, 4), (3, 4)], &[4]),
        case("X_{4,4}", 3, 4, &[(1, 4), (4, 1)], &[4]),
        case("X_{(2,3),2}", 4, 2, &[(1, 5), (2, 6)], &[2, 3]),
        case("X_{(2,3),3}", 4, 3, &[(1, 5), (3, 1)], &[2, 3]),
        case("X_{(2^3),2}", 5, 2, &[(1, 6), (2, 3)], &[2, 2, 2]),
    ]
}

pub fn extension_case(g1: i64, k: i64) -> Result<ExtensionCase> {
    extension_catalog()
        .into_iter()
        .find(|c| c.g1 == g1 && c.k == k)
        .ok_or_else(|| invalid(format!("no catalogued extension for (g1, k) = ({g1}, {k})")))
}

pub fn extension_case_by_name(name: &str) -> Result<ExtensionCase> {
    extension_catalog()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| invalid(format!("no catalogued extension named {name:?}")))
}

pub fn universal_extension_check(case: &ExtensionCase) -> Result<ExtensionRecord> {
    let index = case.variety.fano_index(case.polarization)?;
    let sections = case.variety.section_count(case.polarization);
    let target = (sections - BigInt::from(1)).to_i64().ok_or(Error::Overflow("universal_extension_check"))?;
    Ok(ExtensionRecord { dimension: case.variety.dimension(), index, target })
}
