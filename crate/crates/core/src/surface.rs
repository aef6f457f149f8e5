//! Minimal complex surfaces and the 4-manifolds obtained from them by surgery.
//!
//! A [`MinimalSurfaceSpec`] records the characteristic data of a minimal compact
//! complex surface X: the self-intersection c₁²(X) of the first Chern class, the
//! topological Euler characteristic χ(X) = c₂(X), the geometric genus p_g, and a
//! few flags (Kodaira dimension, Seiberg–Witten non-triviality, canonical
//! ampleness, spin type). A [`FourManifold`] is the connected sum
//!
//! ```text
//! M = X # k·CP̄² # ℓ·(S¹×S³)
//! ```
//!
//! i.e. X blown up k times with ℓ handles of fundamental-group surgery attached.
//!
//! All invariant arithmetic here is exact integer arithmetic:
//!
//! * τ(X) = (c₁²(X) − 2χ(X)) / 3   (signature theorem; non-divisibility is an error)
//! * χ(M) = χ(X) + k − 2ℓ,  τ(M) = τ(X) − k
//! * (2χ+3τ)(M) = (2χ+3τ)(X) − k − 4ℓ
//! * b₊ = 2·p_g + 1 and b₋ = χ(M) − 2 − b₊, defined only when M is simply
//!   connected (ℓ = 0 and the minimal model is simply connected).

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Kodaira dimension of a minimal surface with non-negative Kodaira dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KodairaDim {
    Zero,
    One,
    Two,
}

/// Spin type of a smooth 4-manifold, allowing for honest ignorance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpinStatus {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurfaceError {
    /// The signature theorem requires 3 | (c₁² − 2χ); a spec violating this
    /// does not describe a complex surface.
    #[error("signature is not an integer: c1^2 = {c1_squared}, chi = {euler}, (c1^2 - 2*chi) = {} is not divisible by 3", c1_squared - 2 * euler)]
    IntegralityViolation { c1_squared: i64, euler: i64 },
}

/// Characteristic data of a minimal compact complex surface.
///
/// The JSON form uses exactly these field names; unknown fields are rejected.
/// `complex_hyperbolic` marks compact quotients of the complex hyperbolic plane
/// (where the Kähler–Einstein volume bound is attained) and defaults to `false`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinimalSurfaceSpec {
    pub name: String,
    pub c1_squared: i64,
    pub euler: i64,
    pub p_g: u64,
    pub simply_connected: bool,
    pub kodaira_dim: KodairaDim,
    pub has_nonzero_sw: bool,
    pub ample_canonical: bool,
    pub spin: SpinStatus,
    #[serde(default)]
    pub complex_hyperbolic: bool,
}

impl MinimalSurfaceSpec {
    /// Signature τ(X) = (c₁² − 2χ)/3.
    pub fn tau(&self) -> Result<i64, SurfaceError> {
        let num = self.c1_squared - 2 * self.euler;
        if num % 3 != 0 {
            return Err(SurfaceError::IntegralityViolation {
                c1_squared: self.c1_squared,
                euler: self.euler,
            });
        }
        Ok(num / 3)
    }

    /// Invariant violations of the spec itself, as human-readable warnings.
    ///
    /// An empty vector means the data is consistent with a minimal complex
    /// surface of the declared type. Constructors in [`crate::catalog`] produce
    /// consistent specs except where documented (Chen surfaces with
    /// m ≡ 2 mod 4 carry a Noether warning).
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let noether = self.c1_squared + self.euler;
        if noether % 12 != 0 {
            out.push(format!(
                "Noether integrality fails: c1^2 + chi = {noether} is not divisible by 12 \
                 (chi_h = {noether}/12 is not an integer)"
            ));
        }
        match self.kodaira_dim {
            KodairaDim::Two => {
                if self.c1_squared <= 0 {
                    out.push(format!(
                        "general type requires c1^2 > 0, got {}",
                        self.c1_squared
                    ));
                }
            }
            KodairaDim::Zero | KodairaDim::One => {
                if self.c1_squared != 0 {
                    out.push(format!(
                        "minimal surfaces of Kodaira dimension 0 or 1 have c1^2 = 0, got {}",
                        self.c1_squared
                    ));
                }
            }
        }
        if self.simply_connected && noether % 12 == 0 {
            let chi_h = noether / 12;
            let expected = 1 + self.p_g as i64;
            if chi_h != expected {
                out.push(format!(
                    "simply connected surfaces satisfy chi_h = 1 + p_g: \
                     chi_h = {chi_h} but 1 + p_g = {expected}"
                ));
            }
        }
        if self.ample_canonical && self.kodaira_dim != KodairaDim::Two {
            out.push("ample canonical class requires general type".to_string());
        }
        out
    }

    /// Parse a spec from its documented JSON form.
    pub fn from_json_str(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// `M = X # k·CP̄² # ℓ·(S¹×S³)` for a minimal surface X.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourManifold {
    pub minimal_model: MinimalSurfaceSpec,
    pub k: u64,
    pub l: u64,
}

/// Exact topological invariants derived from a [`FourManifold`].
///
/// `b_plus`/`b_minus` are `None` whenever the intersection-form Betti numbers
/// are not determined by the data (ℓ > 0 or a non-simply-connected model).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedInvariants {
    pub chi: i64,
    pub tau: i64,
    pub b_plus: Option<i64>,
    pub b_minus: Option<i64>,
    pub two_chi_plus_3tau: i64,
    pub c1sq_minimal: i64,
    /// Lower bound for (c₁⁺)² supplied by the monopole class of the minimal
    /// model: c₁²(X) when X has non-zero Seiberg–Witten invariant and
    /// c₁²(X) > 0, and 0 otherwise.
    pub sw_c1plus_sq_lower: i64,
}

impl FourManifold {
    /// A minimal surface viewed as a 4-manifold (k = ℓ = 0).
    pub fn minimal(spec: MinimalSurfaceSpec) -> Self {
        FourManifold { minimal_model: spec, k: 0, l: 0 }
    }

    pub fn new(spec: MinimalSurfaceSpec, k: u64, l: u64) -> Self {
        FourManifold { minimal_model: spec, k, l }
    }

    /// Connected sum with `n` further copies of CP̄².
    pub fn blow_up(&self, n: u64) -> Self {
        FourManifold {
            minimal_model: self.minimal_model.clone(),
            k: self.k + n,
            l: self.l,
        }
    }

    pub fn chi(&self) -> i64 {
        self.minimal_model.euler + self.k as i64 - 2 * self.l as i64
    }

    pub fn tau(&self) -> Result<i64, SurfaceError> {
        Ok(self.minimal_model.tau()? - self.k as i64)
    }

    /// M is simply connected iff no S¹×S³ summands were attached and the
    /// minimal model is simply connected.
    pub fn is_simply_connected(&self) -> bool {
        self.l == 0 && self.minimal_model.simply_connected
    }

    pub fn invariants(&self) -> Result<DerivedInvariants, SurfaceError> {
        let spec = &self.minimal_model;
        let chi = self.chi();
        let tau = self.tau()?;
        let (b_plus, b_minus) = if self.is_simply_connected() {
            let b_plus = 2 * spec.p_g as i64 + 1;
            (Some(b_plus), Some(chi - 2 - b_plus))
        } else {
            (None, None)
        };
        let sw_c1plus_sq_lower = if spec.has_nonzero_sw && spec.c1_squared > 0 {
            spec.c1_squared
        } else {
            0
        };
        Ok(DerivedInvariants {
            chi,
            tau,
            b_plus,
            b_minus,
            two_chi_plus_3tau: 2 * chi + 3 * tau,
            c1sq_minimal: spec.c1_squared,
            sw_c1plus_sq_lower,
        })
    }

    /// Spin type of M.
    ///
    /// Blowing up kills spin (CP̄² has an odd form); for simply connected M,
    /// Rochlin's theorem forces `No` when τ(M) ≢ 0 (mod 16); otherwise the
    /// answer is whatever is declared for the minimal model (connected sums
    /// with the spin manifold S¹×S³ preserve the spin type).
    pub fn spin_status(&self) -> Result<SpinStatus, SurfaceError> {
        if self.k >= 1 {
            return Ok(SpinStatus::No);
        }
        if self.is_simply_connected() && self.tau()?.rem_euclid(16) != 0 {
            return Ok(SpinStatus::No);
        }
        Ok(self.minimal_model.spin)
    }

    /// Display name, e.g. `hypersurface(6) # 8 CP2bar`.
    pub fn display_name(&self) -> String {
        let mut name = self.minimal_model.name.clone();
        if self.k > 0 {
            name.push_str(&format!(" # {} CP2bar", self.k));
        }
        if self.l > 0 {
            name.push_str(&format!(" # {} (S1xS3)", self.l));
        }
        name
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3ish() -> MinimalSurfaceSpec {
        MinimalSurfaceSpec {
            name: "k3".to_string(),
            c1_squared: 0,
            euler: 24,
            p_g: 1,
            simply_connected: true,
            kodaira_dim: KodairaDim::Zero,
            has_nonzero_sw: true,
            ample_canonical: false,
            spin: SpinStatus::Yes,
            complex_hyperbolic: false,
        }
    }

    #[test]
    fn tau_requires_divisibility_by_three() {
        let mut spec = k3ish();
        spec.euler = 25;
        assert_eq!(
            spec.tau(),
            Err(SurfaceError::IntegralityViolation { c1_squared: 0, euler: 25 })
        );
    }

    #[test]
    fn k3_invariants() {
        let m = FourManifold::minimal(k3ish());
        let inv = m.invariants().unwrap();
        assert_eq!(inv.chi, 24);
        assert_eq!(inv.tau, -16);
        assert_eq!(inv.b_plus, Some(3));
        assert_eq!(inv.b_minus, Some(19));
        assert_eq!(inv.two_chi_plus_3tau, 0);
        assert_eq!(m.spin_status().unwrap(), SpinStatus::Yes);
    }

    #[test]
    fn blow_up_shifts_chi_and_tau() {
        let m = FourManifold::minimal(k3ish()).blow_up(5);
        assert_eq!(m.chi(), 29);
        assert_eq!(m.tau().unwrap(), -21);
        assert_eq!(m.invariants().unwrap().two_chi_plus_3tau, -5);
        // blowing up is never spin
        assert_eq!(m.spin_status().unwrap(), SpinStatus::No);
    }

    #[test]
    fn blow_up_composes_additively() {
        let m = FourManifold::minimal(k3ish());
        assert_eq!(m.blow_up(2).blow_up(3), m.blow_up(5));
    }

    #[test]
    fn surgery_summands_kill_betti_reporting() {
        let m = FourManifold::new(k3ish(), 0, 2);
        assert_eq!(m.chi(), 20);
        let inv = m.invariants().unwrap();
        assert_eq!(inv.b_plus, None);
        assert_eq!(inv.b_minus, None);
        assert_eq!(inv.two_chi_plus_3tau, -8);
        assert!(!m.is_simply_connected());
        // k = 0 and not simply connected: declared flag passes through
        assert_eq!(m.spin_status().unwrap(), SpinStatus::Yes);
    }

    #[test]
    fn rochlin_forces_no() {
        let mut spec = k3ish();
        // shift chi so tau = -17, still divisible arithmetic: c1^2 - 2chi = 3*tau
        spec.c1_squared = 3;
        spec.euler = 27;
        let m = FourManifold::minimal(spec);
        assert_eq!(m.tau().unwrap(), -17);
        assert_eq!(m.spin_status().unwrap(), SpinStatus::No);
    }

    #[test]
    fn json_round_trip_and_unknown_field_rejection() {
        let spec = k3ish();
        let text = serde_json::to_string(&spec).unwrap();
        let back = MinimalSurfaceSpec::from_json_str(&text).unwrap();
        assert_eq!(spec, back);

        let with_extra = text.replace("{", "{\"surprise\": 1,");
        assert!(MinimalSurfaceSpec::from_json_str(&with_extra).is_err());
    }

    #[test]
    fn complex_hyperbolic_defaults_to_false() {
        let text = r#"{
            "name": "x", "c1_squared": 0, "euler": 24, "p_g": 1,
            "simply_connected": true, "kodaira_dim": "Zero",
            "has_nonzero_sw": true, "ample_canonical": false, "spin": "Yes"
        }"#;
        let spec = MinimalSurfaceSpec::from_json_str(text).unwrap();
        assert!(!spec.complex_hyperbolic);
    }

    #[test]
    fn violations_flag_inconsistent_data() {
        let spec = k3ish();
        assert!(spec.violations().is_empty());

        let mut bad = k3ish();
        bad.c1_squared = 5; // breaks Noether and the kodaira-dim constraint
        let v = bad.violations();
        assert!(v.iter().any(|w| w.contains("Noether")), "{v:?}");
        assert!(v.iter().any(|w| w.contains("Kodaira")), "{v:?}");
    }
}
