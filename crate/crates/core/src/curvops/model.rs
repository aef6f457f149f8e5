//! Reference curvature operators for the closed model geometries, built from
//! their exact Riemann tensors (never from hand-entered blocks) so they
//! exercise the full `from_riemann` pipeline.

use super::riemann::{from_riemann, RiemannTensor};
use super::CurvatureOperator;

/// The model geometries. The `scale` argument of [`model`] multiplies all
/// lengths: `S4` is the round sphere of radius `scale` (times any `r` baked
/// into the variant), `CP2` has sectional curvature in [1/scale², 4/scale²],
/// and `CH2` uses the normalization with scalar curvature −8/scale², whose
/// sectional curvature fills [−4/(3 scale²), −1/(3 scale²)].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelSpace {
    S4,
    S2xS2 { r1: f64, r2: f64 },
    CP2,
    CH2,
}

/// Curvature operator of the model at the given positive length scale.
pub fn model(space: ModelSpace, scale: f64) -> CurvatureOperator {
    let tensor = match space {
        ModelSpace::S4 => space_form(1.0 / (scale * scale)),
        ModelSpace::S2xS2 { r1, r2 } => {
            product_of_spheres(1.0 / (scale * r1).powi(2), 1.0 / (scale * r2).powi(2))
        }
        ModelSpace::CP2 => complex_space_form(1.0 / (scale * scale)),
        ModelSpace::CH2 => complex_space_form(-1.0 / (3.0 * scale * scale)),
    };
    from_riemann(&tensor).expect("model tensors satisfy the curvature symmetries")
}

/// Total volume of the compact models (None for the noncompact CH²; its
/// bounds are per-unit-volume statements).
pub fn model_volume(space: ModelSpace, scale: f64) -> Option<f64> {
    let pi_sq = std::f64::consts::PI * std::f64::consts::PI;
    match space {
        ModelSpace::S4 => Some(8.0 * pi_sq / 3.0 * scale.powi(4)),
        ModelSpace::S2xS2 { r1, r2 } => Some(16.0 * pi_sq * (scale * r1 * scale * r2).powi(2)),
        ModelSpace::CP2 => Some(pi_sq / 2.0 * scale.powi(4)),
        ModelSpace::CH2 => None,
    }
}

/// R_ijkl = c(δ_ik δ_jl − δ_il δ_jk): constant sectional curvature c.
fn space_form(c: f64) -> RiemannTensor {
    let mut r = [[[[0.0; 4]; 4]; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    r[i][j][k][l] = c * (delta(i, k) * delta(j, l) - delta(i, l) * delta(j, k));
                }
            }
        }
    }
    r
}

/// Product of two surfaces of Gauss curvature k1 (directions 0,1) and k2
/// (directions 2,3): the only curvature lives tangent to the factors.
fn product_of_spheres(k1: f64, k2: f64) -> RiemannTensor {
    let mut r = [[[[0.0; 4]; 4]; 4]; 4];
    set_plane_curvature(&mut r, 0, 1, k1);
    set_plane_curvature(&mut r, 2, 3, k2);
    r
}

fn set_plane_curvature(r: &mut RiemannTensor, i: usize, j: usize, k: f64) {
    r[i][j][i][j] = k;
    r[j][i][j][i] = k;
    r[i][j][j][i] = -k;
    r[j][i][i][j] = -k;
}

/// Complex space form of constant holomorphic sectional curvature 4c, with
/// the standard complex structure J(e₁) = e₂, J(e₃) = e₄:
/// R_ijkl = c(δ_ik δ_jl − δ_il δ_jk + J_ik J_jl − J_il J_jk + 2 J_ij J_kl).
fn complex_space_form(c: f64) -> RiemannTensor {
    let mut jm = [[0.0f64; 4]; 4];
    jm[0][1] = 1.0;
    jm[1][0] = -1.0;
    jm[2][3] = 1.0;
    jm[3][2] = -1.0;
    let mut r = [[[[0.0; 4]; 4]; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    r[i][j][k][l] = c
                        * (delta(i, k) * delta(j, l) - delta(i, l) * delta(j, k)
                            + jm[i][k] * jm[j][l]
                            - jm[i][l] * jm[j][k]
                            + 2.0 * jm[i][j] * jm[k][l]);
                }
            }
        }
    }
    r
}

fn delta(i: usize, j: usize) -> f64 {
    (i == j) as u8 as f64
}
