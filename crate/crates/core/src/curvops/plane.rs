//! Tangent 2-planes, sectional curvature, and certified lower bounds for the
//! bottom of the sectional-curvature spectrum of an operator.

use nalgebra::{Vector3, Vector4, Vector6};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::{pair_to_pm, CurvOpsError, CurvatureOperator, PAIRS, TOL_STRUCTURAL};

/// An oriented tangent 2-plane spanned by an orthonormal pair.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoPlane {
    u: Vector4<f64>,
    v: Vector4<f64>,
}

impl TwoPlane {
    /// Accepts an exactly orthonormal pair (gated at 1e−12).
    pub fn new(u: Vector4<f64>, v: Vector4<f64>) -> Result<Self, CurvOpsError> {
        let du = (u.norm() - 1.0).abs();
        if du > TOL_STRUCTURAL {
            return Err(CurvOpsError::PlaneInvalid {
                what: "u is not a unit vector".to_string(),
                deviation: du,
                tolerance: TOL_STRUCTURAL,
            });
        }
        let dv = (v.norm() - 1.0).abs();
        if dv > TOL_STRUCTURAL {
            return Err(CurvOpsError::PlaneInvalid {
                what: "v is not a unit vector".to_string(),
                deviation: dv,
                tolerance: TOL_STRUCTURAL,
            });
        }
        let dot = u.dot(&v).abs();
        if dot > TOL_STRUCTURAL {
            return Err(CurvOpsError::PlaneInvalid {
                what: "u and v are not orthogonal".to_string(),
                deviation: dot,
                tolerance: TOL_STRUCTURAL,
            });
        }
        Ok(TwoPlane { u, v })
    }

    /// Orthonormalizes an arbitrary spanning pair (Gram–Schmidt), rejecting
    /// nearly dependent spans.
    pub fn from_span(u: Vector4<f64>, v: Vector4<f64>) -> Result<Self, CurvOpsError> {
        const SPAN_TOL: f64 = 1e-9;
        let nu = u.norm();
        if nu < SPAN_TOL {
            return Err(CurvOpsError::PlaneInvalid {
                what: "first spanning vector is numerically zero".to_string(),
                deviation: nu,
                tolerance: SPAN_TOL,
            });
        }
        let e1 = u / nu;
        let w = v - e1 * e1.dot(&v);
        let nw = w.norm();
        if nw < SPAN_TOL {
            return Err(CurvOpsError::PlaneInvalid {
                what: "spanning vectors are linearly dependent".to_string(),
                deviation: nw,
                tolerance: SPAN_TOL,
            });
        }
        Ok(TwoPlane { u: e1, v: w / nw })
    }

    pub fn u(&self) -> &Vector4<f64> {
        &self.u
    }

    pub fn v(&self) -> &Vector4<f64> {
        &self.v
    }

    /// The 2-form u∧v in (ω⁺, ω⁻) coordinates: entries 0..3 are the
    /// self-dual part, 3..6 the anti-self-dual part (each of norm 1/√2).
    pub fn two_form(&self) -> Vector6<f64> {
        let mut pair = Vector6::zeros();
        for (a, &(i, j)) in PAIRS.iter().enumerate() {
            pair[a] = self.u[i] * self.v[j] - self.u[j] * self.v[i];
        }
        pair_to_pm() * pair
    }
}

/// Sectional curvature of the plane: the quadratic form of the assembled
/// operator on the unit 2-form u∧v.
pub fn sectional(op: &CurvatureOperator, plane: &TwoPlane) -> f64 {
    let psi = plane.two_form();
    let n = op.assemble();
    (n * psi).dot(&psi)
}

/// Result of a bottom-of-spectrum search over 2-planes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BottomSectional {
    /// Least sectional curvature found (random samples and the eigenvector
    /// witness plane together).
    pub estimate: f64,
    /// Sectional curvature of the witness plane built from the lowest
    /// eigenvectors of W₊ and W₋ with the B cross-term forced nonpositive.
    pub witness_value: f64,
    /// s/12 + w/2: lower bound ignoring W₋ and B.
    pub bound_wgl: f64,
    /// s/12 + w/2 + w̃/2: lower bound ignoring B.
    pub bound_crafty: f64,
}

/// Estimate the minimum sectional curvature of `op` from `samples` random
/// planes (seeded, reproducible) plus the deterministic witness plane.
///
/// The witness is ψ = e⁺/√2 + ε·e⁻/√2 with e± the lowest unit eigenvectors
/// of W± and ε ∈ {±1} chosen so the cross term 2⟨ψ⁺, Bψ⁻⟩ = ε⟨e⁺, Be⁻⟩ is
/// ≤ 0; the equal split |ψ⁺| = |ψ⁻| makes ψ decomposable, so this is the
/// curvature of an honest tangent plane and always satisfies
/// witness ≤ s/12 + w/2 + w̃/2 ≤ s/12 + w/2.
pub fn bottom_sectional(op: &CurvatureOperator, samples: u32, seed: u64) -> BottomSectional {
    let (w, e_plus) = CurvatureOperator::lowest_eigenpair(op.wp());
    let (w_tilde, e_minus) = CurvatureOperator::lowest_eigenpair(op.wm());
    let cross = (op.b() * e_minus).dot(&e_plus);
    let eps = if cross > 0.0 { -1.0 } else { 1.0 };
    let witness_value = op.s() / 12.0 + 0.5 * w + 0.5 * w_tilde + eps * cross;

    let n = op.assemble();
    let mut estimate = witness_value;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn = 0;
    while drawn < samples {
        let u = random_vector(&mut rng);
        let v = random_vector(&mut rng);
        let plane = match TwoPlane::from_span(u, v) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let psi = plane.two_form();
        let k = (n * psi).dot(&psi);
        if k < estimate {
            estimate = k;
        }
        drawn += 1;
    }

    BottomSectional {
        estimate,
        witness_value,
        bound_wgl: op.s() / 12.0 + 0.5 * w,
        bound_crafty: op.s() / 12.0 + 0.5 * w + 0.5 * w_tilde,
    }
}

fn random_vector(rng: &mut ChaCha8Rng) -> Vector4<f64> {
    Vector4::new(
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
    )
}

/// Witness 2-form halves in ω coordinates, exposed for diagnostics.
pub fn witness_form(op: &CurvatureOperator) -> (Vector3<f64>, Vector3<f64>) {
    let (_, e_plus) = CurvatureOperator::lowest_eigenpair(op.wp());
    let (_, e_minus) = CurvatureOperator::lowest_eigenpair(op.wm());
    let cross = (op.b() * e_minus).dot(&e_plus);
    let eps = if cross > 0.0 { -1.0 } else { 1.0 };
    let h = std::f64::consts::FRAC_1_SQRT_2;
    (e_plus * h, e_minus * (eps * h))
}
