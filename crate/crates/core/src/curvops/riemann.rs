//! Conversion from Riemann tensor components R_{ijkl} (orthonormal frame,
//! sign convention R_{ijij} = sectional curvature of the ij-plane) to the
//! block operator on Λ².

use nalgebra::Matrix6;
use serde::{Deserialize, Serialize};

use super::{pair_to_pm, CurvOpsError, CurvatureOperator, PAIRS, TOL_MODEL};

/// Full Riemann tensor components in an orthonormal frame.
pub type RiemannTensor = [[[[f64; 4]; 4]; 4]; 4];

fn check_identity(
    name: &str,
    deviation: f64,
) -> Result<(), CurvOpsError> {
    if deviation > TOL_MODEL {
        return Err(CurvOpsError::SymmetryViolation {
            identity: name.to_string(),
            deviation,
            tolerance: TOL_MODEL,
        });
    }
    Ok(())
}

/// Build the curvature operator of a Riemann tensor, gating all four
/// algebraic identities (antisymmetry in each index pair, pair exchange,
/// first Bianchi) at 1e−9 and naming the first one that fails.
pub fn from_riemann(r: &RiemannTensor) -> Result<CurvatureOperator, CurvOpsError> {
    let mut dev_first = 0.0f64;
    let mut dev_second = 0.0f64;
    let mut dev_pair = 0.0f64;
    let mut dev_bianchi = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    dev_first = dev_first.max((r[i][j][k][l] + r[j][i][k][l]).abs());
                    dev_second = dev_second.max((r[i][j][k][l] + r[i][j][l][k]).abs());
                    dev_pair = dev_pair.max((r[i][j][k][l] - r[k][l][i][j]).abs());
                    dev_bianchi =
                        dev_bianchi.max((r[i][j][k][l] + r[i][k][l][j] + r[i][l][j][k]).abs());
                }
            }
        }
    }
    check_identity("R_ijkl = -R_jikl", dev_first)?;
    check_identity("R_ijkl = -R_ijlk", dev_second)?;
    check_identity("R_ijkl = R_klij", dev_pair)?;
    check_identity("R_ijkl + R_iklj + R_iljk = 0", dev_bianchi)?;

    // operator matrix in the pair basis e^{ij} (i < j)
    let mut m = Matrix6::zeros();
    for (a, &(i, j)) in PAIRS.iter().enumerate() {
        for (b, &(k, l)) in PAIRS.iter().enumerate() {
            m[(a, b)] = r[i][j][k][l];
        }
    }
    let p = pair_to_pm();
    let n = p * m * p.transpose();
    CurvatureOperator::decompose(&n)
}

/// JSON form: 256 components flattened row-major over (i, j, k, l).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RiemannJson {
    pub riem: Vec<f64>,
}

impl RiemannJson {
    pub fn to_tensor(&self) -> Result<RiemannTensor, CurvOpsError> {
        if self.riem.len() != 256 {
            return Err(CurvOpsError::SymmetryViolation {
                identity: format!("component list has length {}, expected 256", self.riem.len()),
                deviation: f64::NAN,
                tolerance: TOL_MODEL,
            });
        }
        let mut t = [[[[0.0; 4]; 4]; 4]; 4];
        let mut idx = 0;
        for plane_i in t.iter_mut() {
            for plane_j in plane_i.iter_mut() {
                for plane_k in plane_j.iter_mut() {
                    for slot in plane_k.iter_mut() {
                        *slot = self.riem[idx];
                        idx += 1;
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn from_tensor(t: &RiemannTensor) -> Self {
        let mut riem = Vec::with_capacity(256);
        for plane_i in t.iter() {
            for plane_j in plane_i.iter() {
                for plane_k in plane_j.iter() {
                    for slot in plane_k.iter() {
                        riem.push(*slot);
                    }
                }
            }
        }
        RiemannJson { riem }
    }
}
