//! Einstein-metric obstructions for `M = X # k·CP̄² # ℓ·(S¹×S³)`.
//!
//! Three criteria are implemented, in decreasing strength of what they rule
//! out:
//!
//! * Hitchin–Thorpe: an Einstein 4-manifold satisfies 2χ(M) ≥ 3|τ(M)|.
//! * The Seiberg–Witten surgery obstruction: when X has a non-trivial
//!   Seiberg–Witten invariant, M admits no Einstein metric once
//!   3(k + 4ℓ) ≥ (2χ+3τ)(X).
//! * The anti-self-dual variant: M admits no ASD Einstein metric once
//!   4(k + 4ℓ) ≥ (2χ+3τ)(X).
//!
//! [`classify`] combines these with Yau's existence theorem (a minimal
//! general-type surface with ample canonical class carries a Kähler–Einstein
//! metric) into a single verdict.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::surface::{FourManifold, KodairaDim, SurfaceError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ObstructError {
    #[error("{name} has no Seiberg-Witten hypothesis (has_nonzero_sw = false)")]
    NoSWHypothesis { name: String },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Result of the Hitchin–Thorpe test 2χ ≥ 3|τ|.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitchinThorpe {
    pub passes: bool,
    /// Strict inequality; equality (e.g. K3) is the borderline flat/Calabi–Yau
    /// regime.
    pub strict: bool,
    pub two_chi: i64,
    pub three_abs_tau: i64,
}

/// Hitchin–Thorpe inequality for M. Passing is necessary, never sufficient,
/// for the existence of an Einstein metric.
pub fn hitchin_thorpe(m: &FourManifold) -> Result<HitchinThorpe, SurfaceError> {
    let two_chi = 2 * m.chi();
    let three_abs_tau = 3 * m.tau()?.abs();
    Ok(HitchinThorpe {
        passes: two_chi >= three_abs_tau,
        strict: two_chi > three_abs_tau,
        two_chi,
        three_abs_tau,
    })
}

fn two_chi_plus_3tau_minimal(m: &FourManifold) -> Result<i64, SurfaceError> {
    let x = &m.minimal_model;
    Ok(2 * x.euler + 3 * x.tau()?)
}

/// Threshold predicate of the surgery obstruction: 3(k + 4ℓ) ≥ (2χ+3τ)(X),
/// exact integer comparison.
///
/// Requires the Seiberg–Witten hypothesis on X. Callers wanting a sound
/// non-existence verdict should use [`classify`], which additionally demands
/// c₁²(X) > 0 (at the equality boundary with k = ℓ = 0 and (2χ+3τ)(X) = 0 the
/// inequality holds while Einstein metrics may exist, K3 being the example).
pub fn sw_einstein_obstruction(m: &FourManifold) -> Result<bool, ObstructError> {
    if !m.minimal_model.has_nonzero_sw {
        return Err(ObstructError::NoSWHypothesis { name: m.display_name() });
    }
    let budget = 3 * (m.k as i64 + 4 * m.l as i64);
    Ok(budget >= two_chi_plus_3tau_minimal(m)?)
}

/// Anti-self-dual variant with the ¼ threshold: 4(k + 4ℓ) ≥ (2χ+3τ)(X) rules
/// out Einstein metrics whose self-dual Weyl curvature vanishes.
pub fn asd_einstein_obstruction(m: &FourManifold) -> Result<bool, ObstructError> {
    if !m.minimal_model.has_nonzero_sw {
        return Err(ObstructError::NoSWHypothesis { name: m.display_name() });
    }
    let budget = 4 * (m.k as i64 + 4 * m.l as i64);
    Ok(budget >= two_chi_plus_3tau_minimal(m)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    ObstructedHitchinThorpe,
    ObstructedSW,
    /// Only the ¼ threshold fires: anti-self-dual Einstein metrics are ruled
    /// out, full Einstein existence stays open. Reported as an annotation on
    /// an otherwise Undetermined verdict.
    ObstructedSWASDOnly,
    AdmitsKE,
    Undetermined,
}

/// The inequality (or hypothesis list) a verdict rests on, with the numbers
/// filled in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub criterion: String,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
}

impl Witness {
    fn new(criterion: &str, lhs: String, relation: &str, rhs: String) -> Self {
        Witness {
            criterion: criterion.to_string(),
            lhs,
            relation: relation.to_string(),
            rhs,
        }
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.relation, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EinsteinVerdict {
    pub verdict: Verdict,
    pub witness: Witness,
    /// Present when only the anti-self-dual threshold is met.
    pub asd_note: Option<Witness>,
}

impl std::fmt::Display for EinsteinVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} ({})", self.verdict, self.witness)?;
        if let Some(note) = &self.asd_note {
            write!(f, " [note: ObstructedSWASDOnly ({note})]")?;
        }
        Ok(())
    }
}

/// Combined verdict, in priority order:
///
/// 1. `ObstructedHitchinThorpe` when 2χ(M) < 3|τ(M)|;
/// 2. `ObstructedSW` when X has non-zero Seiberg–Witten invariant,
///    c₁²(X) > 0, and 3(k+4ℓ) ≥ (2χ+3τ)(X);
/// 3. `AdmitsKE` when k = ℓ = 0 and X is general type with ample canonical
///    class (Yau);
/// 4. `Undetermined` otherwise, annotated with the ASD-only obstruction when
///    4(k+4ℓ) ≥ (2χ+3τ)(X) holds under the same hypotheses.
///
/// A missing Seiberg–Witten hypothesis degrades to `Undetermined`, never to a
/// false obstruction.
pub fn classify(m: &FourManifold) -> Result<EinsteinVerdict, SurfaceError> {
    let ht = hitchin_thorpe(m)?;
    if !ht.passes {
        return Ok(EinsteinVerdict {
            verdict: Verdict::ObstructedHitchinThorpe,
            witness: Witness::new(
                "hitchin_thorpe",
                format!("2chi = {}", ht.two_chi),
                "<",
                format!("3|tau| = {}", ht.three_abs_tau),
            ),
            asd_note: None,
        });
    }

    let x = &m.minimal_model;
    let budget = m.k as i64 + 4 * m.l as i64;
    let cx = two_chi_plus_3tau_minimal(m)?;
    let sw_applicable = x.has_nonzero_sw && x.c1_squared > 0;
    if sw_applicable && 3 * budget >= cx {
        return Ok(EinsteinVerdict {
            verdict: Verdict::ObstructedSW,
            witness: Witness::new(
                "sw_einstein_obstruction",
                format!("{budget}"),
                ">=",
                format!("{cx}/3"),
            ),
            asd_note: None,
        });
    }

    let asd_note = if sw_applicable && 4 * budget >= cx {
        Some(Witness::new(
            "asd_einstein_obstruction",
            format!("{budget}"),
            ">=",
            format!("{cx}/4"),
        ))
    } else {
        None
    };

    if m.k == 0 && m.l == 0 && x.kodaira_dim == KodairaDim::Two && x.ample_canonical {
        return Ok(EinsteinVerdict {
            verdict: Verdict::AdmitsKE,
            witness: Witness::new(
                "yau_existence",
                "minimal general type".to_string(),
                "with",
                "ample canonical class".to_string(),
            ),
            asd_note,
        });
    }

    Ok(EinsteinVerdict {
        verdict: Verdict::Undetermined,
        witness: Witness::new(
            "none",
            "no obstruction".to_string(),
            "and",
            "no existence criterion".to_string(),
        ),
        asd_note,
    })
}
