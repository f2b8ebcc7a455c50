//! Numerical invariants of curves: genus formulas, Clifford index,
//! Riemann–Roch bookkeeping, Castelnuovo's bound and k-th roots of the
//! canonical bundle.

use num_traits::ToPrimitive;

use crate::error::{invalid, Error, Result};
use crate::series::binomial;

/// Genus, degree of a fixed line bundle, and target projective dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveInvariants {
    pub genus: i64,
    pub degree: i64,
    pub ambient_dim: i64,
}

impl CurveInvariants {
    pub fn new(genus: i64, degree: i64, ambient_dim: i64) -> Result<Self> {
        if genus < 0 || degree < 1 || ambient_dim < 1 {
            return Err(invalid(format!(
                "curve invariants need genus >= 0, degree >= 1, ambient >= 1 (got {genus}, {degree}, {ambient_dim})"
            )));
        }
        Ok(Self { genus, degree, ambient_dim })
    }

    /// Whether a nondegenerate curve with these numbers violates Castelnuovo's bound.
    pub fn exceeds_castelnuovo(&self) -> Result<bool> {
        Ok(self.genus > castelnuovo_genus(self.degree, self.ambient_dim)?)
    }
}

/// A curve of genus `g` with a line bundle `θ` such that `kθ = K_C` and `h^0(θ) = h0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinDatum {
    pub genus: i64,
    pub root_order: i64,
    pub h0: i64,
}

impl SpinDatum {
    pub fn new(genus: i64, root_order: i64, h0: i64) -> Result<Self> {
        if root_order < 2 {
            return Err(invalid(format!("root order must be >= 2, got {root_order}")));
        }
        if h0 < 0 {
            return Err(invalid(format!("h0 must be >= 0, got {h0}")));
        }
        theta_degree(genus, root_order)?;
        Ok(Self { genus, root_order, h0 })
    }

    pub fn theta_degree(&self) -> i64 {
        (2 * self.genus - 2) / self.root_order
    }

    /// `h^1(θ)` by Serre duality.
    pub fn h1(&self) -> i64 {
        serre_h1(self.theta_degree(), self.genus, self.h0)
    }
}

/// Genus of a curve in `|k L_1|` on a K3 surface with `L_1^2 = 2 g1 - 2`.
pub fn k3_curve_genus(g1: i64, k: i64) -> Result<i64> {
    if g1 < 2 || k < 1 {
        return Err(invalid(format!("k3_curve_genus needs g1 >= 2, k >= 1 (got {g1}, {k})")));
    }
    g1.checked_sub(1)
        .and_then(|a| k.checked_mul(k).and_then(|k2| a.checked_mul(k2)))
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::Overflow("k3_curve_genus"))
}

/// Genus of a smooth complete intersection curve in `P^n` cut by `n - 1` hypersurfaces.
pub fn ci_curve_genus(n: i64, degrees: &[i64]) -> Result<i64> {
    if n < 2 || degrees.len() as i64 != n - 1 {
        return Err(invalid(format!("a curve in P^{n} is cut by {} hypersurfaces, got {}", n - 1, degrees.len())));
    }
    if degrees.iter().any(|&d| d < 1) {
        return Err(invalid("hypersurface degrees must be positive"));
    }
    let product =
        degrees.iter().try_fold(1i64, |acc, &d| acc.checked_mul(d)).ok_or(Error::Overflow("ci_curve_genus"))?;
    let sum: i64 = degrees.iter().sum();
    let twice_g_minus_2 = product.checked_mul(sum - n - 1).ok_or(Error::Overflow("ci_curve_genus"))?;
    if twice_g_minus_2 % 2 != 0 {
        return Err(invalid(format!("malformed complete intersection: 2g - 2 = {twice_g_minus_2} is odd")));
    }
    Ok(1 + twice_g_minus_2 / 2)
}

/// Clifford index of `l L_1` restricted to `C ∈ |k L_1|`.
pub fn clifford_restriction(g1: i64, k: i64, l: i64) -> Result<i64> {
    if g1 < 2 || k < 2 {
        return Err(invalid(format!("clifford_restriction needs g1 >= 2, k >= 2 (got {g1}, {k})")));
    }
    if l < 1 || l > k - 1 {
        return Err(invalid(format!("l = {l} outside [1, {}]", k - 1)));
    }
    Ok((2 * g1 - 2) * l * (k - l) - 2)
}

/// Clifford index of a general `C ∈ |k L_1|` with `Pic(S) = Z L_1`.
pub fn clifford_general(g1: i64, k: i64) -> Result<i64> {
    clifford_restriction(g1, k, 1)?;
    Ok((2 * g1 - 2) * (k - 1) - 2)
}

/// True when a general curve of the family has Clifford index at most 2 or genus below 11.
pub fn exceptional_low(g1: i64, k: i64) -> Result<bool> {
    Ok(clifford_general(g1, k)? <= 2 || k3_curve_genus(g1, k)? < 11)
}

/// Largest `k >= 1` with `k3_curve_genus(g1, k) <= bound`, or 0 if none.
pub fn max_k_for_genus(g1: i64, bound: i64) -> Result<i64> {
    if g1 < 2 {
        return Err(invalid(format!("max_k_for_genus needs g1 >= 2, got {g1}")));
    }
    let mut k = 0;
    while k3_curve_genus(g1, k + 1)? <= bound {
        k += 1;
    }
    Ok(k)
}

/// Riemann–Roch: `h^0 = deg - g + 1 + h^1`.
pub fn rr_h0(degree: i64, genus: i64, h1: i64) -> i64 {
    degree - genus + 1 + h1
}

/// Riemann–Roch solved for `h^1`.
pub fn serre_h1(degree: i64, genus: i64, h0: i64) -> i64 {
    h0 - degree + genus - 1
}

/// `h^0` of a nonspecial bundle.
pub fn h0_nonspecial(degree: i64, genus: i64) -> Result<i64> {
    let v = degree - genus + 1;
    if v < 0 {
        return Err(Error::NotNonspecial { degree, genus });
    }
    Ok(v)
}

/// Clifford's theorem: a special bundle of degree `deg` has `h^0 <= deg/2 + 1`.
pub fn clifford_h0_bound(degree: i64) -> Result<i64> {
    if degree < 0 {
        return Err(invalid(format!("degree must be >= 0, got {degree}")));
    }
    Ok(degree / 2 + 1)
}

/// Castelnuovo's bound on the genus of a nondegenerate degree-`d` curve in `P^r`.
pub fn castelnuovo_genus(d: i64, r: i64) -> Result<i64> {
    if r < 2 || d < r {
        return Err(invalid(format!("no nondegenerate curve of degree {d} in P^{r}")));
    }
    let m = (d - 1) / (r - 1);
    let eps = d - 1 - m * (r - 1);
    Ok(m * (m - 1) / 2 * (r - 1) + m * eps)
}

/// Degree of `θ` with `kθ = K_C` on a genus-`g` curve.
pub fn theta_degree(g: i64, k: i64) -> Result<i64> {
    if g < 0 || k < 1 {
        return Err(invalid(format!("theta_degree needs g >= 0, k >= 1 (got {g}, {k})")));
    }
    let canonical = 2 * g - 2;
    if canonical % k != 0 {
        return Err(invalid(format!("{k} does not divide 2g - 2 = {canonical}")));
    }
    Ok(canonical / k)
}

/// Expected codimension `C(g1 + 1, 2)` of theta-characteristics with `g1 + 1` sections.
pub fn expected_theta_codim(g1: i64) -> Result<i64> {
    if g1 < 0 {
        return Err(invalid(format!("g1 must be >= 0, got {g1}")));
    }
    binomial(g1 as u64 + 1, 2).to_i64().ok_or(Error::Overflow("expected_theta_codim"))
}

/// Mod-2 invariance of `h^0` under deformation of a theta-characteristic.
pub fn same_parity(h0_a: i64, h0_b: i64) -> bool {
    (h0_a - h0_b).rem_euclid(2) == 0
}

/// Arithmetic genus of a plane curve of degree `d`.
pub fn plane_curve_genus(d: i64) -> Result<i64> {
    if d < 1 {
        return Err(invalid(format!("plane curve degree must be >= 1, got {d}")));
    }
    Ok((d - 1) * (d - 2) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn k3_genus_examples() {
        assert_eq!(k3_curve_genus(3, 2).unwrap(), 9);
        assert_eq!(k3_curve_genus(6, 2).unwrap(), 21);
        assert_eq!(k3_curve_genus(2, 1).unwrap(), 2);
        assert!(k3_curve_genus(1, 2).is_err());
        assert!(k3_curve_genus(2, 0).is_err());
    }

    #[test]
    fn ci_genus_examples() {
        assert_eq!(ci_curve_genus(3, &[4, 2]).unwrap(), 9);
        assert_eq!(ci_curve_genus(4, &[2, 3, 3]).unwrap(), 28);
        assert_eq!(ci_curve_genus(5, &[2, 2, 2, 2]).unwrap(), 17);
        assert_eq!(ci_curve_genus(2, &[3]).unwrap(), 1);
        assert!(ci_curve_genus(3, &[4]).is_err());
        assert!(ci_curve_genus(3, &[4, 0]).is_err());
    }

    #[test]
    fn clifford_examples() {
        assert_eq!(clifford_general(3, 2).unwrap(), 2);
        assert_eq!(clifford_general(4, 3).unwrap(), 10);
        assert_eq!(clifford_restriction(3, 4, 2).unwrap(), 14);
        assert_eq!(clifford_restriction(3, 4, 1).unwrap(), 10);
        assert_eq!(clifford_restriction(3, 4, 3).unwrap(), 10);
        assert!(clifford_restriction(3, 4, 0).is_err());
        assert!(clifford_restriction(3, 4, 4).is_err());
    }

    #[test]
    fn exceptional_examples() {
        assert!(exceptional_low(2, 2).unwrap());
        assert!(exceptional_low(2, 3).unwrap());
        assert!(exceptional_low(3, 2).unwrap());
        assert!(!exceptional_low(3, 3).unwrap());
        assert!(!exceptional_low(2, 4).unwrap());
        assert!(!exceptional_low(4, 2).unwrap());
        assert_eq!(max_k_for_genus(4, 37).unwrap(), 3);
        assert_eq!(max_k_for_genus(10, 37).unwrap(), 2);
        assert_eq!(max_k_for_genus(2, 37).unwrap(), 6);
        assert_eq!(max_k_for_genus(5, 4).unwrap(), 0);
    }

    #[test]
    fn riemann_roch_examples() {
        assert_eq!(rr_h0(36, 13, 0), 24);
        assert_eq!(rr_h0(36, 28, 5), 14);
        assert_eq!(h0_nonspecial(108, 28).unwrap(), 81);
        // 4 - 12 + 19 - 1
        assert_eq!(serre_h1(12, 19, 4), 10);
        assert_eq!(h0_nonspecial(3, 10), Err(Error::NotNonspecial { degree: 3, genus: 10 }));
    }

    #[test]
    fn clifford_bound_examples() {
        assert_eq!(clifford_h0_bound(12).unwrap(), 7);
        assert_eq!(clifford_h0_bound(16).unwrap(), 9);
        assert_eq!(clifford_h0_bound(0).unwrap(), 1);
        assert!(clifford_h0_bound(-1).is_err());
    }

    #[test]
    fn castelnuovo_examples() {
        assert_eq!(castelnuovo_genus(18, 5).unwrap(), 28);
        assert_eq!(castelnuovo_genus(8, 3).unwrap(), 9);
        assert_eq!(castelnuovo_genus(14, 5).unwrap(), 15);
        assert_eq!(castelnuovo_genus(7, 3).unwrap(), 6);
        // plane curves: Castelnuovo is the plane-curve genus
        for d in 2..20 {
            assert_eq!(castelnuovo_genus(d, 2).unwrap(), plane_curve_genus(d).unwrap());
        }
        assert!(castelnuovo_genus(4, 5).is_err());
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_degree(19, 3).unwrap(), 12);
        assert_eq!(theta_degree(28, 3).unwrap(), 18);
        assert_eq!(expected_theta_codim(5).unwrap(), 15);
        assert!(theta_degree(10, 4).is_err());
        let spin = SpinDatum::new(19, 3, 4).unwrap();
        assert_eq!(spin.theta_degree(), 12);
        assert_eq!(spin.h1(), 10);
        assert!(SpinDatum::new(10, 4, 1).is_err());
        assert!(same_parity(5, 3));
        assert!(!same_parity(4, 5));
    }

    #[test]
    fn curve_invariants_castelnuovo_check() {
        assert!(!CurveInvariants::new(28, 18, 5).unwrap().exceeds_castelnuovo().unwrap());
        assert!(CurveInvariants::new(7, 7, 3).unwrap().exceeds_castelnuovo().unwrap());
        assert!(CurveInvariants::new(-1, 3, 2).is_err());
    }

    #[test]
    fn k3_genus_minus_one_divisible_by_k_squared() {
        for g1 in 2..=12 {
            for k in 1..=8 {
                assert_eq!((k3_curve_genus(g1, k).unwrap() - 1) % (k * k), 0);
            }
        }
    }

    #[test]
    fn ci_families_realize_k3_genus() {
        for k in 1..=10 {
            assert_eq!(ci_curve_genus(3, &[4, k]).unwrap(), k3_curve_genus(3, k).unwrap());
            assert_eq!(ci_curve_genus(4, &[2, 3, k]).unwrap(), k3_curve_genus(4, k).unwrap());
            assert_eq!(ci_curve_genus(5, &[2, 2, 2, k]).unwrap(), k3_curve_genus(5, k).unwrap());
        }
    }

    #[test]
    fn clifford_general_is_minimum_over_l() {
        for g1 in 2..=12 {
            for k in 2..=10 {
                let min = (1..k).map(|l| clifford_restriction(g1, k, l).unwrap()).min().unwrap();
                assert_eq!(clifford_general(g1, k).unwrap(), min, "g1={g1} k={k}");
            }
        }
    }

    #[test]
    fn castelnuovo_monotone_in_degree() {
        for r in 2..=8 {
            let values: Vec<i64> = (r..=40).map(|d| castelnuovo_genus(d, r).unwrap()).collect();
            assert!(values.windows(2).all(|w| w[0] <= w[1]), "r={r}");
        }
    }

    proptest! {
        #[test]
        fn riemann_roch_round_trip(deg in -50i64..200, g in 0i64..60, h0 in 0i64..100) {
            prop_assert_eq!(rr_h0(deg, g, serre_h1(deg, g, h0)), h0);
        }
    }
}
