//! Divisor calculus on Hirzebruch surfaces, the smooth quadric and del Pezzo
//! surfaces: intersection numbers, adjunction, section counts and the
//! dimensions of the relevant automorphism groups.
//!
//! Hirzebruch classes are written `a C_0 + b f` where `C_0` is the negative
//! section (`C_0^2 = -n`) and `f` a fibre. Scroll notation from the
//! literature (`E`, `L`, `H`, `F`) is translated into this basis by callers.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// The class `a C_0 + b f` on `F_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HirzebruchDivisor {
    pub a: i64,
    pub b: i64,
    pub n: i64,
}

impl HirzebruchDivisor {
    pub fn new(a: i64, b: i64, n: i64) -> Result<Self> {
        if n < 0 {
            return Err(invalid(format!("Hirzebruch surface F_{n} does not exist")));
        }
        Ok(Self { a, b, n })
    }

    pub fn section(n: i64) -> Result<Self> {
        Self::new(1, 0, n)
    }

    pub fn fibre(n: i64) -> Result<Self> {
        Self::new(0, 1, n)
    }

    /// `K = -2 C_0 - (n + 2) f`.
    pub fn canonical(n: i64) -> Result<Self> {
        Self::new(-2, -(n + 2), n)
    }

    fn same_surface(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SurfaceMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn intersect(&self, other: &Self) -> Result<i64> {
        self.same_surface(other)?;
        Ok(-self.n * self.a * other.a + self.a * other.b + other.a * self.b)
    }

    pub fn self_intersection(&self) -> i64 {
        self.intersect(self).expect("same surface")
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.same_surface(other)?;
        Ok(Self { a: self.a + other.a, b: self.b + other.b, n: self.n })
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.plus(&other.scaled(-1))
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self { a: k * self.a, b: k * self.b, n: self.n }
    }

    /// `D + K`, the adjoint class.
    pub fn adjoint(&self) -> Self {
        self.plus(&Self::canonical(self.n).expect("n >= 0")).expect("same surface")
    }

    /// `h^0(O(D))` from the toric description; 0 when `a < 0`.
    pub fn h0(&self) -> i64 {
        if self.a < 0 {
            return 0;
        }
        (0..=self.a).map(|i| (self.b - i * self.n + 1).max(0)).sum()
    }

    /// Arithmetic genus `1 + D.(D + K) / 2`.
    pub fn arithmetic_genus(&self) -> i64 {
        let dk = self.intersect(&self.adjoint()).expect("same surface");
        debug_assert!(dk % 2 == 0, "D.(D+K) is always even");
        1 + dk / 2
    }
}

impl fmt::Display for HirzebruchDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}C0 + {}f on F_{}", self.a, self.b, self.n)
    }
}

pub fn hirzebruch_intersect(d1: &HirzebruchDivisor, d2: &HirzebruchDivisor) -> Result<i64> {
    d1.intersect(d2)
}

pub fn hirzebruch_canonical(n: i64) -> Result<HirzebruchDivisor> {
    HirzebruchDivisor::canonical(n)
}

pub fn hirzebruch_h0(d: &HirzebruchDivisor) -> i64 {
    d.h0()
}

pub fn hirzebruch_pa(d: &HirzebruchDivisor) -> i64 {
    d.arithmetic_genus()
}

/// Class of bidegree `(a, b)` on `P^1 x P^1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadricDivisor {
    pub a: i64,
    pub b: i64,
}

impl QuadricDivisor {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn intersect(&self, other: &Self) -> i64 {
        self.a * other.b + other.a * self.b
    }

    pub fn h0(&self) -> i64 {
        quadric_h0(self.a, self.b)
    }

    pub fn arithmetic_genus(&self) -> i64 {
        quadric_pa(self.a, self.b)
    }
}

pub fn quadric_h0(a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 {
        return 0;
    }
    (a + 1) * (b + 1)
}

pub fn quadric_pa(a: i64, b: i64) -> i64 {
    (a - 1) * (b - 1)
}

/// `h^0(-mK)` on a del Pezzo surface of the given degree.
pub fn delpezzo_h0(degree: i64, m: i64) -> Result<i64> {
    if !(1..=9).contains(&degree) {
        return Err(invalid(format!("del Pezzo degree must be in 1..=9, got {degree}")));
    }
    if m < 0 {
        return Err(invalid(format!("multiple of -K must be >= 0, got {m}")));
    }
    Ok(m * (m + 1) * degree / 2 + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Singularity {
    Node,
    Cusp,
    OrdinaryTriplePoint,
}

impl Singularity {
    pub fn delta(self) -> i64 {
        match self {
            Singularity::Node | Singularity::Cusp => 1,
            Singularity::OrdinaryTriplePoint => 3,
        }
    }
}

/// Multiset of planar singularities on a curve.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SingularityBudget {
    entries: Vec<(Singularity, u32)>,
}

impl SingularityBudget {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, kind: Singularity, count: u32) -> Self {
        self.entries.push((kind, count));
        self
    }

    pub fn nodes(count: u32) -> Self {
        Self::new().with(Singularity::Node, count)
    }

    pub fn total_delta(&self) -> i64 {
        self.entries.iter().map(|&(s, c)| s.delta() * c as i64).sum()
    }
}

/// Geometric genus after resolving the budgeted singularities.
pub fn geometric_genus(arithmetic_genus: i64, sing: &SingularityBudget) -> Result<i64> {
    let delta = sing.total_delta();
    let g = arithmetic_genus - delta;
    if g < 0 {
        return Err(Error::NegativeGenus { arithmetic: arithmetic_genus, delta });
    }
    Ok(g)
}

/// Geometric genus of a plane curve of degree `d` with ordinary points of the given multiplicities.
pub fn plane_model_genus(d: i64, multiplicities: &[i64]) -> Result<i64> {
    if d < 1 || multiplicities.iter().any(|&m| m < 1) {
        return Err(invalid("plane model needs degree >= 1 and multiplicities >= 1"));
    }
    let arithmetic = (d - 1) * (d - 2) / 2;
    let delta: i64 = multiplicities.iter().map(|&m| m * (m - 1) / 2).sum();
    let g = arithmetic - delta;
    if g < 0 {
        return Err(Error::NegativeGenus { arithmetic, delta });
    }
    Ok(g)
}

/// Degree against `-K` of the image of a plane curve of degree `d` on the del
/// Pezzo surface obtained by blowing up its base points.
pub fn plane_model_anticanonical_degree(d: i64, multiplicities: &[i64]) -> Result<i64> {
    if multiplicities.len() > 8 {
        return Err(invalid("a del Pezzo surface blows up at most 8 points"));
    }
    Ok(3 * d - multiplicities.iter().sum::<i64>())
}

/// Surfaces and groups whose automorphism dimensions enter moduli counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    Hirzebruch(i64),
    ProjectivePlane,
    /// `PGL(size)` acting on `P^{size-1}`.
    Pgl(i64),
    Quadric,
}

pub fn aut_dim(kind: SurfaceKind) -> Result<i64> {
    match kind {
        SurfaceKind::Hirzebruch(0) | SurfaceKind::Quadric => Ok(6),
        SurfaceKind::Hirzebruch(n) if n >= 1 => Ok(n + 5),
        SurfaceKind::Hirzebruch(n) => Err(invalid(format!("F_{n} does not exist"))),
        SurfaceKind::ProjectivePlane => Ok(8),
        SurfaceKind::Pgl(size) if size >= 1 => Ok(size * size - 1),
        SurfaceKind::Pgl(size) => Err(invalid(format!("PGL({size}) is not a group"))),
    }
}

impl FromStr for SurfaceKind {
    type Err = Error;

    /// Accepts `F_n`, `Fn`, `P2`, `P^2`, `PGL(n)`, `P1xP1`, `quadric`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let number = |digits: &str| -> Result<i64> {
            if digits.is_empty() || digits.len() > 9 || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("bad number {digits:?} in surface kind {s:?}")));
            }
            digits.parse::<i64>().map_err(|e| Error::Parse(e.to_string()))
        };
        match t {
            "P2" | "P^2" => return Ok(SurfaceKind::ProjectivePlane),
            "P1xP1" | "P^1xP^1" | "quadric" => return Ok(SurfaceKind::Quadric),
            _ => {}
        }
        if let Some(inner) = t.strip_prefix("PGL(").and_then(|r| r.strip_suffix(')')) {
            return Ok(SurfaceKind::Pgl(number(inner)?));
        }
        if let Some(rest) = t.strip_prefix('F') {
            let digits = rest.strip_prefix('_').unwrap_or(rest);
            return Ok(SurfaceKind::Hirzebruch(number(digits)?));
        }
        Err(Error::Parse(format!("unknown surface kind {s:?}")))
    }
}
