//! Moduli-dimension arithmetic: loci of covers and special theta-characteristics
//! in `M_g`, the fibre dimension of `(S, C) -> C` in the complete-intersection
//! range, and the superabundance difference for index 2.

use std::fmt;

use num_traits::ToPrimitive;

use crate::curves::expected_theta_codim;
use crate::error::{invalid, Error, Result};
use crate::mukai::grassmann_dim;
use crate::series::{h_proj, ratio_coefficient};

/// A locus of curves (or of pairs) whose dimension is known in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocusDescriptor {
    /// `k`-gonal curves of genus `g`.
    Gonal { g: i64, k: i64 },
    /// `k : 1` covers of elliptic curves.
    EllipticCover { g: i64, k: i64 },
    /// `k : 1` covers of a curve of genus `h >= 2`.
    GenusHCover { g: i64, k: i64, h: i64 },
    /// Hyperelliptic curves with `θ = a ι + p_1 + ... + p_h` (Weierstrass points `p_i`).
    Hyperelliptic { g: i64, a: i64, h: i64 },
    /// Bielliptic curves with the pulled-back `k`-th root of the hyperplane series.
    Bielliptic { g: i64, k: i64 },
    /// Double covers of genus 2 curves with the pulled-back `k`-th root.
    Genus2DoubleCover { g: i64, k: i64 },
    /// `M_g` itself.
    Curves { g: i64 },
    /// Pairs `(S, C)` with `S` a polarized K3 surface and `C` a genus-`g` curve on it.
    K3Pairs { g: i64 },
}

impl LocusDescriptor {
    /// Builds a descriptor from a family name and positional parameters, as used in claim recipes.
    pub fn from_parts(family: &str, params: &[i64]) -> Result<Self> {
        let want = |n: usize| -> Result<()> {
            if params.len() != n {
                return Err(invalid(format!("locus family {family:?} takes {n} parameters, got {}", params.len())));
            }
            Ok(())
        };
        let d = match family {
            "gonal" => {
                want(2)?;
                LocusDescriptor::Gonal { g: params[0], k: params[1] }
            }
            "elliptic_cover" => {
                want(2)?;
                LocusDescriptor::EllipticCover { g: params[0], k: params[1] }
            }
            "genus_h_cover" => {
                want(3)?;
                LocusDescriptor::GenusHCover { g: params[0], k: params[1], h: params[2] }
            }
            "hyperelliptic_H" => {
                want(3)?;
                LocusDescriptor::Hyperelliptic { g: params[0], a: params[1], h: params[2] }
            }
            "bielliptic_E" => {
                want(2)?;
                LocusDescriptor::Bielliptic { g: params[0], k: params[1] }
            }
            "genus2_D" => {
                want(2)?;
                LocusDescriptor::Genus2DoubleCover { g: params[0], k: params[1] }
            }
            "moduli_M" => {
                want(1)?;
                LocusDescriptor::Curves { g: params[0] }
            }
            "K3_pairs" => {
                want(1)?;
                LocusDescriptor::K3Pairs { g: params[0] }
            }
            other => return Err(invalid(format!("unknown locus family {other:?}"))),
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        const LIMIT: i64 = 1 << 40;
        let bad = |why: String| Err(invalid(format!("{self}: {why}")));
        let (g, k) = match *self {
            LocusDescriptor::Gonal { g, k }
            | LocusDescriptor::EllipticCover { g, k }
            | LocusDescriptor::GenusHCover { g, k, .. }
            | LocusDescriptor::Bielliptic { g, k }
            | LocusDescriptor::Genus2DoubleCover { g, k } => (g, k),
            LocusDescriptor::Hyperelliptic { g, .. }
            | LocusDescriptor::Curves { g }
            | LocusDescriptor::K3Pairs { g } => (g, 2),
        };
        if !(2..LIMIT).contains(&g) {
            return bad(format!("genus must be in [2, 2^40), got {g}"));
        }
        if !(2..LIMIT).contains(&k) {
            return bad(format!("covering degree must be in [2, 2^40), got {k}"));
        }
        match *self {
            LocusDescriptor::GenusHCover { h, .. } => {
                if !(2..LIMIT).contains(&h) {
                    return bad(format!("base genus must be >= 2, got {h}"));
                }
                // Riemann–Hurwitz: the number of branch points is non-negative
                if 2 * g - 2 - k * (2 * h - 2) < 0 {
                    return bad("negative number of branch points".into());
                }
            }
            LocusDescriptor::Hyperelliptic { a, h, .. } => {
                if a < 0 || !(0..=2 * g + 2).contains(&h) {
                    return bad(format!("need a >= 0 and 0 <= h <= 2g + 2 (a = {a}, h = {h})"));
                }
                let step = if h == 0 { a } else { 2 * a + h };
                if step == 0 || (g - 1) % step != 0 {
                    return bad("θ is not a root of the canonical bundle".into());
                }
            }
            LocusDescriptor::Bielliptic { .. } | LocusDescriptor::Genus2DoubleCover { .. }
                if (g - 1) % (k * k) != 0 =>
            {
                return bad(format!("g - 1 must be divisible by k^2 = {}", k * k));
            }
            _ => {}
        }
        Ok(())
    }
}

impl fmt::Display for LocusDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LocusDescriptor::Gonal { g, k } => write!(f, "M^1_{{{g},{k}}}"),
            LocusDescriptor::EllipticCover { g, k } => write!(f, "{k}-elliptic curves of genus {g}"),
            LocusDescriptor::GenusHCover { g, k, h } => write!(f, "{k}:1 covers of genus {h} by genus {g}"),
            LocusDescriptor::Hyperelliptic { g, a, h } => write!(f, "H^{h}_{{{g},{a}}}"),
            LocusDescriptor::Bielliptic { g, k } => write!(f, "E_{{{g},{k}}}"),
            LocusDescriptor::Genus2DoubleCover { g, k } => write!(f, "D_{{{g},{k}}}"),
            LocusDescriptor::Curves { g } => write!(f, "M_{g}"),
            LocusDescriptor::K3Pairs { g } => write!(f, "KC_{g}"),
        }
    }
}

pub fn locus_dim(locus: &LocusDescriptor) -> Result<i64> {
    locus.validate()?;
    Ok(match *locus {
        LocusDescriptor::Gonal { g, k } => 2 * g + 2 * k - 5,
        LocusDescriptor::EllipticCover { g, .. } => 2 * g - 2,
        LocusDescriptor::GenusHCover { g, k, h } => 2 * g + 2 * k - 5 + h * (3 - 2 * k),
        LocusDescriptor::Hyperelliptic { g, .. } => 2 * g - 1,
        LocusDescriptor::Bielliptic { g, .. } => 2 * g - 2,
        LocusDescriptor::Genus2DoubleCover { g, .. } => 2 * g - 3,
        LocusDescriptor::Curves { g } => 3 * g - 3,
        LocusDescriptor::K3Pairs { g } => 19 + g,
    })
}

/// `dim KC_g^2 - expdim T_g^{1/2, g1}` for `g = 4 g1 - 3`.
pub fn remarkable_difference(g1: i64) -> Result<i64> {
    if !(2..1 << 20).contains(&g1) {
        return Err(invalid(format!("remarkable_difference needs 2 <= g1 < 2^20, got {g1}")));
    }
    let g = 4 * g1 - 3;
    Ok((19 + g) - (3 * g - 3) + expected_theta_codim(g1)?)
}

/// Labeled integer summands, kept so reports can show where a count comes from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabeledSum {
    pub parts: Vec<(String, i64)>,
}

impl LabeledSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn part(mut self, label: impl Into<String>, value: i64) -> Self {
        self.parts.push((label.into(), value));
        self
    }

    pub fn total(&self) -> i64 {
        self.parts.iter().map(|(_, v)| v).sum()
    }
}

impl fmt::Display for LabeledSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, value) in &self.parts {
            writeln!(f, "{value:>6}  {label}")?;
        }
        write!(f, "{:>6}  total", self.total())
    }
}

/// Sum of labeled moduli contributions (choices, linear systems, automorphisms).
pub fn scenario_moduli(parts: &LabeledSum) -> i64 {
    parts.total()
}

/// `h^0(I_C(h))` for a projectively normal complete intersection `C` in `P^n`.
pub fn ideal_sheaf_h0(n: i64, ci_degrees: &[i64], h: i64) -> Result<i64> {
    if !(1..=64).contains(&n) {
        return Err(invalid(format!("ambient dimension must be in 1..=64, got {n}")));
    }
    if ci_degrees.len() as i64 > n || ci_degrees.iter().any(|&d| d < 1) {
        return Err(invalid("need at most n positive hypersurface degrees"));
    }
    let degrees: Vec<u64> = ci_degrees.iter().map(|&d| d as u64).collect();
    let weights = vec![1u64; n as usize + 1];
    let restricted = ratio_coefficient(&degrees, &weights, h)?;
    (h_proj(n as u64, h) - restricted).to_i64().ok_or(Error::Overflow("ideal_sheaf_h0"))
}

/// Dimension of the fibres of `(S, C) -> C` over general `C`, broken into summands.
pub fn fibre_breakdown(g1: i64, k: i64) -> Result<LabeledSum> {
    if !(1..1 << 20).contains(&k) {
        return Err(invalid(format!("k must be in [1, 2^20), got {k}")));
    }
    if k == 1 && g1 != 3 {
        if !(2..=5).contains(&g1) {
            return Err(invalid(format!("fibre dimension is tabulated for g1 in {{2,3,4,5}}, got {g1}")));
        }
        // the primitive map is dominant in this range
        return Ok(LabeledSum::new().part(format!("dim KC_{g1}"), 19 + g1).part(format!("dim M_{g1}"), -(3 * g1 - 3)));
    }
    match g1 {
        2 => {
            const TABLE: [i64; 5] = [15, 10, 6, 3, 1];
            let v = if k <= 6 { TABLE[(k - 2) as usize] } else { 0 };
            Ok(LabeledSum::new().part("stored value for sextic double planes", v))
        }
        3 => {
            let quartics = h_proj(3, 4 - k).to_i64().ok_or(Error::Overflow("fibre_breakdown"))?;
            let stabilizer = if k == 1 { 4 } else { 0 };
            Ok(LabeledSum::new()
                .part("quartic surfaces containing C: h^0(I_C(4)) - 1", quartics)
                .part("stabilizer of C in PGL(4)", -stabilizer))
        }
        4 => {
            let q = ideal_sheaf_h0(4, &[2, 3, k], 2)?;
            let c = ideal_sheaf_h0(4, &[2, 3, k], 3)?;
            let linear = h_proj(4, 1).to_i64().expect("small");
            Ok(LabeledSum::new()
                .part("choice of quadric: dim P(H^0(I_C(2)))", q - 1)
                .part("cubics containing C modulo linear multiples of the quadric", c - linear - 1))
        }
        5 => {
            let q = ideal_sheaf_h0(5, &[2, 2, 2, k], 2)?;
            Ok(LabeledSum::new().part("nets of quadrics in P(H^0(I_C(2)))", grassmann_dim(2, q - 1)?))
        }
        _ => Err(invalid(format!("fibre dimension is tabulated for g1 in {{2,3,4,5}}, got {g1}"))),
    }
}

pub fn fibre_dim_ci(g1: i64, k: i64) -> Result<i64> {
    Ok(fibre_breakdown(g1, k)?.total())
}
