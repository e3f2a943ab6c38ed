//! Staircase Newton polytopes, their `1/m` scalings and the limiting shape.
//!
//! All intercepts and areas are exact rationals.

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ginlab::GinStaircase;

pub type Rational = Ratio<i64>;

/// Serializes a rational as its exact string form, e.g. `"13/4"` or `"2"`.
pub fn serialize_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

/// `|a - b|`.
pub fn distance(a: Rational, b: Rational) -> Rational {
    (a - b).abs()
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Region above a staircase: the union of the orthants `(a, λ_a) + R²_{≥0}`
/// and `(α, 0) + R²_{≥0}`, scaled by `scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircasePolytope {
    corners: Vec<(u32, u32)>,
    scale: Rational,
}

impl StaircasePolytope {
    pub fn new(s: &GinStaircase, scale: Rational) -> Self {
        let mut corners: Vec<(u32, u32)> = s.lambdas().iter().enumerate().map(|(a, &l)| (a as u32, l)).collect();
        corners.push((s.alpha(), 0));
        StaircasePolytope { corners, scale }
    }

    /// `(1/m) · P_gin`.
    pub fn scaled(s: &GinStaircase, m: u32) -> Self {
        StaircasePolytope::new(s, rat(1, m as i64))
    }

    pub fn corners(&self) -> &[(u32, u32)] {
        &self.corners
    }

    pub fn scale(&self) -> Rational {
        self.scale
    }

    /// Corners after scaling.
    pub fn scaled_corners(&self) -> Vec<(Rational, Rational)> {
        self.corners.iter().map(|&(a, b)| (self.scale * a as i64, self.scale * b as i64)).collect()
    }

    pub fn contains(&self, u: Rational, v: Rational) -> bool {
        !u.is_negative() && !v.is_negative() && self.scaled_corners().iter().any(|&(a, b)| u >= a && v >= b)
    }
}

/// Region on or above the segment from `(γ₁, 0)` to `(0, γ₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LimitShape {
    #[serde(serialize_with = "serialize_rational")]
    pub gamma1: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub gamma2: Rational,
}

impl LimitShape {
    pub fn new(gamma1: Rational, gamma2: Rational) -> Result<Self> {
        if gamma1 <= Rational::zero() || gamma2 <= Rational::zero() {
            return Err(Error::DomainError("intercepts must be positive".into()));
        }
        Ok(LimitShape { gamma1, gamma2 })
    }

    pub fn contains(&self, u: Rational, v: Rational) -> bool {
        !u.is_negative() && !v.is_negative() && u / self.gamma1 + v / self.gamma2 >= Rational::from_integer(1)
    }

    /// Area of the triangle cut off below the boundary.
    pub fn complement_area(&self) -> Rational {
        self.gamma1 * self.gamma2 / 2
    }
}

/// `(2, r/2)` for `r ≥ 4`, `(r/2, 2)` for `r ∈ {2, 3}`.
pub fn limit_shape(r: u32) -> Result<LimitShape> {
    if r < 2 {
        return Err(Error::DomainError(format!("need r >= 2, got r={r}")));
    }
    let half = rat(r as i64, 2);
    let two = Rational::from_integer(2);
    if r >= 4 {
        LimitShape::new(two, half)
    } else {
        LimitShape::new(half, two)
    }
}

pub fn gamma_product_check(ls: &LimitShape, r: u32) -> bool {
    ls.gamma1 * ls.gamma2 == Rational::from_integer(r as i64)
}

/// Axis intercepts `(α/m, λ₀/m)` of `(1/m) · P_gin`.
pub fn scaled_intercepts(s: &GinStaircase, m: u32) -> (Rational, Rational) {
    (rat(s.alpha() as i64, m as i64), rat(s.lambda0() as i64, m as i64))
}

/// Area of the complement of the staircase in the quadrant, `Σ λ_a`.
pub fn covolume(s: &GinStaircase) -> u32 {
    s.colength()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvergenceRow {
    pub m: u32,
    pub alpha: u32,
    pub lambda0: u32,
    #[serde(serialize_with = "serialize_rational")]
    pub gamma1_m: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub gamma2_m: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub dev1: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub dev2: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub covol_scaled: Rational,
}

/// One row per `(m, staircase)`, in the given order.
pub fn convergence_report(r: u32, staircases: &[(u32, GinStaircase)]) -> Result<Vec<ConvergenceRow>> {
    let limit = limit_shape(r)?;
    Ok(staircases
        .iter()
        .map(|(m, s)| {
            let (g1, g2) = scaled_intercepts(s, *m);
            ConvergenceRow {
                m: *m,
                alpha: s.alpha(),
                lambda0: s.lambda0(),
                gamma1_m: g1,
                gamma2_m: g2,
                dev1: distance(g1, limit.gamma1),
                dev2: distance(g2, limit.gamma2),
                covol_scaled: rat(covolume(s) as i64, (*m as i64).pow(2)),
            }
        })
        .collect())
}
