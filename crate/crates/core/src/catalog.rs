//! Constructors for the minimal surfaces used throughout the crate.
//!
//! Three families are provided, each with exact characteristic numbers:
//!
//! * [`hypersurface`]: smooth degree-d hypersurfaces X_d ⊂ CP³,
//!   c₁² = d(d−4)², χ = d(d²−4d+6), p_g = C(d−1,3).
//! * [`horikawa`]: double covers of CP¹×CP¹ branched over a smooth curve of
//!   bidegree (2a,2b), c₁² = 2(K+L)² = 4(a−2)(b−2), χ_h = 2 + ½·L·(L+K).
//! * [`chen_surface`]: simply connected minimal general-type surfaces with
//!   τ = m and χ = 4m, available for every sufficiently large even m.

use thiserror::Error;

use crate::surface::{KodairaDim, MinimalSurfaceSpec, SpinStatus};

/// Chen's construction is quoted for even m strictly bigger than 17 million.
pub const CHEN_MIN_SIGNATURE: i64 = 17_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("hypersurface degree must be at least 4, got {degree}")]
    DegreeTooSmall { degree: i64 },
    #[error("branch bidegree (2a,2b) requires a >= 3 and b >= 3, got a = {a}, b = {b}")]
    BranchTooSmall { a: i64, b: i64 },
    #[error(
        "Chen surfaces are constructed only for even m > {CHEN_MIN_SIGNATURE}, got m = {m}"
    )]
    OutOfConstructedRange { m: i64 },
}

/// Smooth degree-d hypersurface in CP³.
///
/// d = 4 is the K3 surface (Kodaira dimension 0); d ≥ 5 is general type with
/// ample canonical class. Simply connected by the Lefschetz hyperplane
/// theorem; spin exactly when d is even (c₁ = (4−d)·H).
pub fn hypersurface(degree: i64) -> Result<MinimalSurfaceSpec, CatalogError> {
    if degree < 4 {
        return Err(CatalogError::DegreeTooSmall { degree });
    }
    let d = degree;
    let c1_squared = d * (d - 4) * (d - 4);
    let euler = d * (d * d - 4 * d + 6);
    let p_g = ((d - 1) * (d - 2) * (d - 3) / 6) as u64;
    Ok(MinimalSurfaceSpec {
        name: format!("hypersurface({d})"),
        c1_squared,
        euler,
        p_g,
        simply_connected: true,
        kodaira_dim: if d == 4 { KodairaDim::Zero } else { KodairaDim::Two },
        has_nonzero_sw: true,
        ample_canonical: d >= 5,
        spin: if d % 2 == 0 { SpinStatus::Yes } else { SpinStatus::No },
        complex_hyperbolic: false,
    })
}

/// Double cover of the quadric CP¹×CP¹ branched over a smooth curve of
/// bidegree (2a, 2b), a, b ≥ 3.
///
/// With L = (a,b) and K = K_{CP¹×CP¹} = (−2,−2):
///
/// * c₁² = 2(K+L)² = 4(a−2)(b−2)
/// * χ_h = 2 + ½·L·(L+K) = 2 + ab − a − b
/// * τ = c₁² − 8χ_h = −4ab
///
/// The signature rules out spin via Rochlin whenever τ ≢ 0 (mod 16); no
/// positive spin criterion is applied, so the flag is `Unknown` otherwise.
pub fn horikawa(a: i64, b: i64) -> Result<MinimalSurfaceSpec, CatalogError> {
    if a < 3 || b < 3 {
        return Err(CatalogError::BranchTooSmall { a, b });
    }
    let c1_squared = 4 * (a - 2) * (b - 2);
    let chi_h = 2 + a * b - a - b;
    let euler = 12 * chi_h - c1_squared;
    let tau = c1_squared - 8 * chi_h;
    Ok(MinimalSurfaceSpec {
        name: format!("horikawa({a},{b})"),
        c1_squared,
        euler,
        p_g: (chi_h - 1) as u64,
        simply_connected: true,
        kodaira_dim: KodairaDim::Two,
        has_nonzero_sw: true,
        ample_canonical: true,
        spin: if tau.rem_euclid(16) != 0 { SpinStatus::No } else { SpinStatus::Unknown },
        complex_hyperbolic: false,
    })
}

/// Simply connected minimal general-type surface with τ(X) = m and χ(X) = 4m,
/// hence c₁² = 2χ + 3τ = 11m, available for every even m > 17,000,000.
///
/// Noether integrality (12 | c₁² + χ = 15m) actually forces m ≡ 0 (mod 4);
/// for even m ≡ 2 (mod 4) the constructor still returns the quoted
/// characteristic numbers, stores the integer part of p_g = 5m/4 − 1, and the
/// discrepancy is reported through [`MinimalSurfaceSpec::violations`]. Callers
/// that only consume χ, τ, c₁² (ratio sweeps, Einstein obstructions, I_r) are
/// unaffected.
pub fn chen_surface(m: i64) -> Result<MinimalSurfaceSpec, CatalogError> {
    if m <= CHEN_MIN_SIGNATURE || m % 2 != 0 {
        return Err(CatalogError::OutOfConstructedRange { m });
    }
    Ok(MinimalSurfaceSpec {
        name: format!("chen({m})"),
        c1_squared: 11 * m,
        euler: 4 * m,
        p_g: (5 * m / 4 - 1) as u64,
        simply_connected: true,
        kodaira_dim: KodairaDim::Two,
        has_nonzero_sw: true,
        ample_canonical: false,
        spin: SpinStatus::No,
        complex_hyperbolic: false,
    })
}
