//! Mukai models of prime K3 surfaces of genus 7–10.
//!
//! The group/representation data is tabulated, not computed; only the
//! dimension identities built on top of it are.

use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MukaiRecord {
    pub g1: i64,
    pub dim_g: i64,
    pub dim_u: i64,
    pub dim_m: i64,
    pub k_g: i64,
    pub dim_m_prime: i64,
}

impl MukaiRecord {
    /// Projective dimension of `P(U)`.
    pub fn n(&self) -> i64 {
        self.dim_u - 1
    }
}

const TABLE: [MukaiRecord; 4] = [
    MukaiRecord { g1: 7, dim_g: 45, dim_u: 16, dim_m: 10, k_g: 4, dim_m_prime: 6 },
    MukaiRecord { g1: 8, dim_g: 35, dim_u: 15, dim_m: 8, k_g: 3, dim_m_prime: 4 },
    MukaiRecord { g1: 9, dim_g: 21, dim_u: 14, dim_m: 6, k_g: 2, dim_m_prime: 2 },
    MukaiRecord { g1: 10, dim_g: 14, dim_u: 14, dim_m: 5, k_g: 2, dim_m_prime: 1 },
];

pub fn mukai_record(g1: i64) -> Result<MukaiRecord> {
    TABLE
        .iter()
        .copied()
        .find(|r| r.g1 == g1)
        .ok_or_else(|| invalid(format!("Mukai data is tabulated for g1 in 7..=10, got {g1}")))
}

/// Dimension of the Grassmannian of projective `k`-planes in `P^n`.
pub fn grassmann_dim(k: i64, n: i64) -> Result<i64> {
    if k < 0 || k > n || n > 1 << 30 {
        return Err(invalid(format!("need 0 <= k <= n (k = {k}, n = {n})")));
    }
    Ok((k + 1) * (n - k))
}

/// Linear sections of the Mukai model modulo its group, against `M_{g1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuliMapCheck {
    pub source_dim: i64,
    pub target_dim: i64,
    pub defect: i64,
}

pub fn moduli_map_check(g1: i64) -> Result<ModuliMapCheck> {
    let r = mukai_record(g1)?;
    let source_dim = grassmann_dim(g1 - 1, r.n())? - r.dim_g;
    let target_dim = 3 * g1 - 3;
    Ok(ModuliMapCheck { source_dim, target_dim, defect: target_dim - source_dim })
}

/// Pairs (linear section, quadric section of it) against `KC_g` with `g = 4 g1 - 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IcFamilyCheck {
    pub ic_dim: i64,
    pub kc_dim: i64,
}

pub fn ic_family_check(g1: i64) -> Result<IcFamilyCheck> {
    let r = mukai_record(g1)?;
    // h^0(S, 2L) = 2 + (2L)^2 / 2 on a K3
    let h0_twice = 2 + 4 * (2 * g1 - 2) / 2;
    let ic_dim = grassmann_dim(g1, r.n())? + (h0_twice - 1);
    Ok(IcFamilyCheck { ic_dim, kc_dim: 19 + (4 * g1 - 3) })
}

/// Corank of the Gauss–Wahl map of a general curve on a general prime K3 of genus `g1`.
pub fn cork_general(g1: i64) -> Result<i64> {
    match g1 {
        3..=9 | 11 => Ok(23 - 2 * g1),
        10 => Ok(4),
        _ => Err(invalid(format!("cork is tabulated for g1 in 3..=11, got {g1}"))),
    }
}

pub fn ribbon_space_dim(g1: i64) -> Result<i64> {
    Ok(cork_general(g1)? - 1)
}
