//! Exact values of curvature functionals and minimal volumes.
//!
//! Every quantity in this module is a rational multiple of π², represented
//! exactly by [`PiSquared`]. For `M = X # k·CP̄² # ℓ·(S¹×S³)` with X minimal
//! of general type:
//!
//! ```text
//! I_s(M)        = inf ∫ s² dμ          = 32 c₁²(X) π²
//! I_r(M)        = inf ∫ |r|² dμ        =  8 (c₁²(X) + k + 4ℓ) π²
//! Vol_s(M)      = inf { Vol : s ≥ −12 } = (2/9) c₁²(X) π²
//! Vol_{K,s}(M)  ≥ (9/4) Vol_s(M)       = (1/2) c₁²(X) π²
//! Vol_{t}(M)    ≥ (1+t)² Vol_s(M)       for t ∈ [0, ½]
//! Vol(M)        ≥ I_r(M) / 36           (two-sided curvature bound |K| ≤ 1)
//! ```
//!
//! The identities I_s = 144·Vol_s and I_r ≥ ¼·I_s (equality iff k = ℓ = 0)
//! tie the family together; the scalar-curvature infimum is the square of the
//! (negative) Yamabe invariant. Mixed Weyl/scalar quadratic functionals are
//! bounded below through the normalized rationals of [`weyl_scalar_lower`].

use num_rational::Rational64;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::surface::{FourManifold, KodairaDim, SurfaceError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FunctionalError {
    #[error("{name}: surgery summands (l = {l}) are only supported on general-type models")]
    UnsupportedKodairaDim { name: String, l: u64 },
    #[error("{name} is not of general type")]
    NotGeneralType { name: String },
    #[error("t = {t} is outside [0, 1/2]")]
    TOutOfRange { t: Rational64 },
    #[error("{name} has no Seiberg-Witten hypothesis (has_nonzero_sw = false)")]
    NoSWHypothesis { name: String },
    #[error("{name} has c1^2(X) = {c1_squared} <= 0; the monopole bound needs c1^2(X) > 0")]
    NonPositiveC1Squared { name: String, c1_squared: i64 },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// An exact rational multiple of π².
///
/// Arithmetic and comparisons are exact; `approx()` gives the floating-point
/// value. Serializes as `{"num": .., "den": ..}` (the coefficient of π²).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PiSquared(Rational64);

impl PiSquared {
    pub fn new(num: i64, den: i64) -> Self {
        PiSquared(Rational64::new(num, den))
    }

    pub fn from_ratio(q: Rational64) -> Self {
        PiSquared(q)
    }

    pub fn zero() -> Self {
        PiSquared(Rational64::zero())
    }

    /// The exact coefficient q in q·π².
    pub fn coefficient(&self) -> Rational64 {
        self.0
    }

    pub fn approx(&self) -> f64 {
        let q = *self.0.numer() as f64 / *self.0.denom() as f64;
        q * std::f64::consts::PI * std::f64::consts::PI
    }

    pub fn scale(&self, q: Rational64) -> Self {
        PiSquared(self.0 * q)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl std::ops::Add for PiSquared {
    type Output = PiSquared;
    fn add(self, rhs: PiSquared) -> PiSquared {
        PiSquared(self.0 + rhs.0)
    }
}

impl std::ops::Sub for PiSquared {
    type Output = PiSquared;
    fn sub(self, rhs: PiSquared) -> PiSquared {
        PiSquared(self.0 - rhs.0)
    }
}

impl std::fmt::Display for PiSquared {
    /// `768*pi^2`, `(16/3)*pi^2`, `0`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        if self.0.denom() == &1 {
            write!(f, "{}*pi^2", self.0.numer())
        } else {
            write!(f, "({}/{})*pi^2", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for PiSquared {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            num: i64,
            den: i64,
        }
        Repr { num: *self.0.numer(), den: *self.0.denom() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PiSquared {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            num: i64,
            den: i64,
        }
        let r = Repr::deserialize(deserializer)?;
        if r.den == 0 {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(PiSquared(Rational64::new(r.num, r.den)))
    }
}

fn require_general_type(m: &FourManifold) -> Result<(), FunctionalError> {
    if m.minimal_model.kodaira_dim != KodairaDim::Two {
        return Err(FunctionalError::NotGeneralType { name: m.display_name() });
    }
    Ok(())
}

fn require_sw(m: &FourManifold) -> Result<(), FunctionalError> {
    if !m.minimal_model.has_nonzero_sw {
        return Err(FunctionalError::NoSWHypothesis { name: m.display_name() });
    }
    Ok(())
}

/// Scalar-curvature functional infimum I_s(M) = inf ∫ s² dμ = 32·c₁²(X)·π².
///
/// Zero for Kodaira dimension 0 and 1 (where the Yamabe invariant vanishes);
/// independent of k and ℓ.
pub fn i_s(m: &FourManifold) -> Result<PiSquared, FunctionalError> {
    let c1sq = match m.minimal_model.kodaira_dim {
        KodairaDim::Zero | KodairaDim::One => 0,
        KodairaDim::Two => m.minimal_model.c1_squared,
    };
    Ok(PiSquared::new(32 * c1sq, 1))
}

/// Ricci functional infimum I_r(M) = inf ∫ |r|² dμ = 8·(c₁²(X) + k + 4ℓ)·π².
///
/// For Kodaira dimension 0 or 1 the value is known only without S¹×S³
/// summands.
pub fn i_r(m: &FourManifold) -> Result<PiSquared, FunctionalError> {
    if m.minimal_model.kodaira_dim != KodairaDim::Two && m.l > 0 {
        return Err(FunctionalError::UnsupportedKodairaDim {
            name: m.display_name(),
            l: m.l,
        });
    }
    let c1sq = match m.minimal_model.kodaira_dim {
        KodairaDim::Zero | KodairaDim::One => 0,
        KodairaDim::Two => m.minimal_model.c1_squared,
    };
    Ok(PiSquared::new(8 * (c1sq + m.k as i64 + 4 * m.l as i64), 1))
}

/// Minimal volume with scalar curvature ≥ −12: Vol_s(M) = (2/9)·c₁²(X)·π².
pub fn vol_s(m: &FourManifold) -> Result<PiSquared, FunctionalError> {
    let c1sq = match m.minimal_model.kodaira_dim {
        KodairaDim::Zero | KodairaDim::One => 0,
        KodairaDim::Two => m.minimal_model.c1_squared,
    };
    Ok(PiSquared::new(2 * c1sq, 9))
}

/// Lower bound for the sectional/scalar minimal volume, with exactness flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VolKsLower {
    pub value: PiSquared,
    /// True when the bound is attained (compact quotients of the complex
    /// hyperbolic plane).
    pub exact: bool,
}

/// Vol_{K,s}(M) ≥ (9/4)·Vol_s(M) = (1/2)·c₁²(X)·π², general type only;
/// equality holds precisely on complex-hyperbolic models.
pub fn vol_ks_lower(m: &FourManifold) -> Result<VolKsLower, FunctionalError> {
    require_general_type(m)?;
    Ok(VolKsLower {
        value: vol_s(m)?.scale(Rational64::new(9, 4)),
        exact: m.minimal_model.complex_hyperbolic,
    })
}

/// The t-interpolated minimal volume bound Vol_t(M) ≥ (1+t)²·Vol_s(M) for
/// exact rational t ∈ [0, ½]; t = 0 recovers Vol_s, t = ½ the Vol_{K,s}
/// bound.
pub fn mixed_vol_lower(m: &FourManifold, t: Rational64) -> Result<PiSquared, FunctionalError> {
    if t < Rational64::zero() || t > Rational64::new(1, 2) {
        return Err(FunctionalError::TOutOfRange { t });
    }
    require_general_type(m)?;
    let one_plus_t = Rational64::new(1, 1) + t;
    Ok(vol_s(m)?.scale(one_plus_t * one_plus_t))
}

/// Normalized lower bounds for the mixed Weyl/scalar quadratic functionals,
/// i.e. bounds on (1/4π²)·∫(s²/24 + 2|W₊|²) and (1/32π²)·∫(s − √6|W₊|)².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylScalarLower {
    /// (2/3)·(2χ+3τ)(X): bound for (1/4π²)·∫(s²/24 + 2|W₊|²) dμ.
    pub west: Rational64,
    /// (1/2)·c₁²(X): bound for (1/32π²)·∫(s − √6·|W₊|)² dμ.
    pub glove: Rational64,
}

/// Weyl/scalar functional bounds from the Seiberg–Witten estimates; requires
/// a non-trivial invariant and c₁²(X) > 0.
pub fn weyl_scalar_lower(m: &FourManifold) -> Result<WeylScalarLower, FunctionalError> {
    require_sw(m)?;
    let x = &m.minimal_model;
    if x.c1_squared <= 0 {
        return Err(FunctionalError::NonPositiveC1Squared {
            name: m.display_name(),
            c1_squared: x.c1_squared,
        });
    }
    let cx = 2 * x.euler + 3 * x.tau()?;
    Ok(WeylScalarLower {
        west: Rational64::new(2 * cx, 3),
        glove: Rational64::new(x.c1_squared, 2),
    })
}

/// Ricci functional bound assembled through Gauss–Bonnet:
/// 8·(2c₁²(X) − (2χ+3τ)(M))·π².
///
/// Algebraically identical to [`i_r`] (since (2χ+3τ)(M) = c₁²(X) − k − 4ℓ),
/// but computed along the independent χ(M), τ(M) route; keeping both routes
/// separate lets tests pin the identity.
pub fn ricci_lower_gb(m: &FourManifold) -> Result<PiSquared, FunctionalError> {
    require_sw(m)?;
    let inv = m.invariants()?;
    Ok(PiSquared::new(
        8 * (2 * m.minimal_model.c1_squared - inv.two_chi_plus_3tau),
        1,
    ))
}

/// Scalar-curvature bound for anti-self-dual metrics: ∫ s² ≥ 72·c₁²(X)·π².
pub fn asd_scalar_lower(m: &FourManifold) -> Result<PiSquared, FunctionalError> {
    require_sw(m)?;
    Ok(PiSquared::new(72 * m.minimal_model.c1_squared.max(0), 1))
}

/// Volume bound under the two-sided sectional bound |K| ≤ 1:
/// Vol(M) ≥ I_r(M)/36.
pub fn two_sided_vol_lower(m: &FourManifold) -> Result<PiSquared, FunctionalError> {
    Ok(i_r(m)?.scale(Rational64::new(1, 36)))
}

/// Informational bound quoted for the full Riemann-tensor functional:
/// I_R(M) ≥ 8·χ(M)·π², with equality exactly for Einstein metrics.
pub fn i_riemann_lower(m: &FourManifold) -> Result<PiSquared, FunctionalError> {
    Ok(PiSquared::new(8 * m.chi(), 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum YamabeSign {
    Negative,
    Zero,
}

/// Square of the Yamabe invariant, Y(M)² = I_s(M) = 32·c₁²(X)·π², together
/// with its sign (never positive in the general-type regime handled here).
pub fn yamabe_squared(m: &FourManifold) -> Result<(PiSquared, YamabeSign), FunctionalError> {
    let value = i_s(m)?;
    let sign = if value.is_zero() { YamabeSign::Zero } else { YamabeSign::Negative };
    Ok((value, sign))
}
