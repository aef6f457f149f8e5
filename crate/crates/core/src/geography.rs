//! Geography of simply connected 4-manifolds: signature-to-Euler ratio
//! sweeps, non-Einstein examples at prescribed ratios, and homeomorphic pairs
//! with different curvature invariants.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::catalog::chen_surface;
use crate::functional::{i_r, FunctionalError, PiSquared};
use crate::lattice::{homeomorphic, LatticeError};
use crate::obstruct::{classify, EinsteinVerdict};
use crate::surface::{FourManifold, MinimalSurfaceSpec, SurfaceError};

#[derive(Debug, Error)]
pub enum GeographyError {
    #[error("{name} has zero Euler characteristic; the ratio tau/chi is undefined")]
    ZeroEuler { name: String },
    #[error("no construction for ratio {q}: |q| must lie in [8/23, 1)")]
    RatioOutOfRange { q: Rational64 },
    #[error("precondition violated: {hypothesis}")]
    PreconditionViolation { hypothesis: String },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Functional(#[from] FunctionalError),
}

/// Signature-to-Euler ratio τ(M)/χ(M) in lowest terms.
pub fn ratio(m: &FourManifold) -> Result<Rational64, GeographyError> {
    let chi = m.chi();
    if chi == 0 {
        return Err(GeographyError::ZeroEuler { name: m.display_name() });
    }
    Ok(Rational64::new(m.tau()?, chi))
}

/// A requested ratio. Positive targets are realized with reversed
/// orientation: the constructed manifold itself always has τ/χ = −|q|, and
/// the flag records that the caller should read it with the opposite
/// orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioTarget {
    pub q: Rational64,
    pub orientation_reversed: bool,
}

impl RatioTarget {
    pub fn new(q: Rational64) -> Self {
        RatioTarget { q, orientation_reversed: q > Rational64::zero() }
    }
}

/// A blown-up Chen surface realizing a requested ratio.
#[derive(Debug, Clone)]
pub struct ConstructedManifold {
    pub manifold: FourManifold,
    /// Signature of the minimal model.
    pub m: i64,
    /// Number of blow-ups.
    pub k: i64,
    pub orientation_reversed: bool,
}

/// Build a simply connected 4-manifold with τ/χ = −|q| (for the stated
/// orientation) that carries a Seiberg–Witten obstruction to Einstein
/// metrics. Requires 8/23 ≤ |q| < 1.
///
/// Solving τ/χ = (m − k)/(4m + k) = −|q| gives k/m = (1 + 4|q|)/(1 − |q|),
/// which sweeps ℚ ∩ [11/3, ∞) exactly as |q| sweeps [8/23, 1). The base
/// signature m is the least even integer above the catalog threshold that
/// makes k integral.
pub fn non_einstein_for_ratio(
    target: &RatioTarget,
) -> Result<ConstructedManifold, GeographyError> {
    let q_abs = target.q.abs();
    let lo = Rational64::new(8, 23);
    if q_abs < lo || q_abs >= Rational64::new(1, 1) {
        return Err(GeographyError::RatioOutOfRange { q: target.q });
    }

    // k/m in lowest terms
    let one = Rational64::new(1, 1);
    let blowup_ratio = (one + Rational64::new(4, 1) * q_abs) / (one - q_abs);
    let d = *blowup_ratio.denom();
    let step = d.lcm(&2);
    let m = step
        .checked_mul(17_000_000 / step + 1)
        .ok_or_else(|| GeographyError::PreconditionViolation {
            hypothesis: "construction size fits in 64-bit integers".to_string(),
        })?;
    let k = (m / d)
        .checked_mul(*blowup_ratio.numer())
        .ok_or_else(|| GeographyError::PreconditionViolation {
            hypothesis: "construction size fits in 64-bit integers".to_string(),
        })?;

    let base = chen_surface(m).expect("m is even and above the catalog threshold");
    let manifold = FourManifold::new(base, k as u64, 0);
    Ok(ConstructedManifold {
        manifold,
        m,
        k,
        orientation_reversed: target.orientation_reversed,
    })
}

/// A homeomorphic pair with different Ricci-curvature invariants.
#[derive(Debug, Clone)]
pub struct HomeoPair {
    pub m1: FourManifold,
    pub m2: FourManifold,
    pub homeomorphic: bool,
    /// i_r(m2) − i_r(m1), computed by evaluating both sides.
    pub i_r_gap: PiSquared,
    pub verdicts: (EinsteinVerdict, EinsteinVerdict),
}

/// Pair x̃ # k blow-ups against x # (j + k) blow-ups, where
/// j = c₁²(x) − c₁²(x̃) > 0 equalizes the homeomorphism invariants. With
/// `allow_k_zero` the minimal x̃ itself is admitted as the first member,
/// which is how an Einstein manifold gets paired with an obstructed one.
pub fn homeo_pair(
    x: &MinimalSurfaceSpec,
    x_tilde: &MinimalSurfaceSpec,
    k: u64,
    allow_k_zero: bool,
) -> Result<HomeoPair, GeographyError> {
    let fail = |hypothesis: &str| GeographyError::PreconditionViolation {
        hypothesis: hypothesis.to_string(),
    };
    if !x.simply_connected {
        return Err(fail("x is simply connected"));
    }
    if !x_tilde.simply_connected {
        return Err(fail("x_tilde is simply connected"));
    }
    if x.p_g == 0 || x.p_g != x_tilde.p_g {
        return Err(fail("p_g(x) = p_g(x_tilde) != 0"));
    }
    let j = x.c1_squared - x_tilde.c1_squared;
    if j <= 0 {
        return Err(fail("c1^2(x) > c1^2(x_tilde)"));
    }
    if k == 0 && !allow_k_zero {
        return Err(fail("k >= 1"));
    }

    let m1 = FourManifold::new(x_tilde.clone(), k, 0);
    let m2 = FourManifold::new(x.clone(), j as u64 + k, 0);
    let homeomorphic = homeomorphic(&m1, &m2)?;
    let gap = i_r(&m2)? - i_r(&m1)?;
    let verdicts = (classify(&m1)?, classify(&m2)?);
    Ok(HomeoPair { m1, m2, homeomorphic, i_r_gap: gap, verdicts })
}

/// One scatter point for geography output.
#[derive(Debug, Clone, Serialize)]
pub struct PlotRow {
    pub name: String,
    pub chi: i64,
    pub tau: i64,
    pub c1sq: i64,
    pub b_plus: Option<i64>,
    pub b_minus: Option<i64>,
    pub verdict: String,
}

pub fn plot_rows(manifolds: &[FourManifold]) -> Result<Vec<PlotRow>, GeographyError> {
    manifolds
        .iter()
        .map(|m| {
            let inv = m.invariants()?;
            let verdict = classify(m)?;
            Ok(PlotRow {
                name: m.display_name(),
                chi: inv.chi,
                tau: inv.tau,
                c1sq: inv.two_chi_plus_3tau,
                b_plus: inv.b_plus,
                b_minus: inv.b_minus,
                verdict: format!("{:?}", verdict.verdict),
            })
        })
        .collect()
}

fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

pub fn to_csv(rows: &[PlotRow]) -> String {
    let mut out = String::from("name,chi,tau,c1sq,b_plus,b_minus,verdict\n");
    for r in rows {
        let bp = r.b_plus.map(|v| v.to_string()).unwrap_or_default();
        let bm = r.b_minus.map(|v| v.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            csv_field(&r.name),
            r.chi,
            r.tau,
            r.c1sq,
            bp,
            bm,
            csv_field(&r.verdict)
        ));
    }
    out
}

struct Frame {
    x0: f64,
    y0: f64,
    w: f64,
    h: f64,
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        self.x0 + (x - self.xmin) / (self.xmax - self.xmin) * self.w
    }

    fn py(&self, y: f64) -> f64 {
        self.y0 + self.h - (y - self.ymin) / (self.ymax - self.ymin) * self.h
    }

    /// Clip the segment of the line y = a + b·x to the frame and return SVG
    /// pixel endpoints, if any part is visible.
    fn clip_line(&self, a: f64, b: f64) -> Option<(f64, f64, f64, f64)> {
        let mut pts: Vec<(f64, f64)> = Vec::new();
        for x in [self.xmin, self.xmax] {
            let y = a + b * x;
            if y >= self.ymin - 1e-9 && y <= self.ymax + 1e-9 {
                pts.push((x, y));
            }
        }
        if b.abs() > 1e-12 {
            for y in [self.ymin, self.ymax] {
                let x = (y - a) / b;
                if x >= self.xmin - 1e-9 && x <= self.xmax + 1e-9 {
                    pts.push((x, y));
                }
            }
        }
        pts.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
        pts.dedup_by(|p, q| (p.0 - q.0).abs() < 1e-9 && (p.1 - q.1).abs() < 1e-9);
        if pts.len() < 2 {
            return None;
        }
        let (xa, ya) = pts[0];
        let (xb, yb) = pts[pts.len() - 1];
        Some((self.px(xa), self.py(ya), self.px(xb), self.py(yb)))
    }
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    let pad = 0.1 * (hi - lo).max(1.0);
    (lo - pad, hi + pad)
}

/// Two-panel scatter SVG: (χ_h, c₁²) with the Noether reference line
/// c₁² = 2χ_h − 6, and (χ, τ) with the Einstein wedge 2χ = 3|τ| and the
/// realized ratio window τ/χ ∈ [−1, −8/23].
pub fn to_svg(rows: &[PlotRow]) -> String {
    let chih: Vec<f64> = rows.iter().map(|r| (r.chi + r.tau) as f64 / 4.0).collect();
    let (x1min, x1max) = bounds(chih.iter().copied().chain([0.0]));
    let (y1min, y1max) = bounds(rows.iter().map(|r| r.c1sq as f64).chain([0.0]));
    let (x2min, x2max) = bounds(rows.iter().map(|r| r.chi as f64).chain([0.0]));
    let (y2min, y2max) = bounds(rows.iter().map(|r| r.tau as f64).chain([0.0]));

    let left = Frame {
        x0: 60.0,
        y0: 40.0,
        w: 360.0,
        h: 360.0,
        xmin: x1min,
        xmax: x1max,
        ymin: y1min,
        ymax: y1max,
    };
    let right = Frame {
        x0: 520.0,
        y0: 40.0,
        w: 360.0,
        h: 360.0,
        xmin: x2min,
        xmax: x2max,
        ymin: y2min,
        ymax: y2max,
    };

    let mut svg = String::new();
    svg.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"940\" height=\"460\" \
         viewBox=\"0 0 940 460\">\n",
    );
    svg.push_str("<rect width=\"940\" height=\"460\" fill=\"white\"/>\n");

    for (frame, title) in [(&left, "c1^2 vs chi_h"), (&right, "tau vs chi")] {
        svg.push_str(&format!(
            "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"none\" \
             stroke=\"black\"/>\n",
            frame.x0, frame.y0, frame.w, frame.h
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
            frame.x0 + frame.w / 2.0,
            frame.y0 - 12.0,
            title
        ));
    }

    // Noether reference line c1^2 = 2*chi_h - 6
    if let Some((xa, ya, xb, yb)) = left.clip_line(-6.0, 2.0) {
        svg.push_str(&format!(
            "<line x1=\"{xa:.2}\" y1=\"{ya:.2}\" x2=\"{xb:.2}\" y2=\"{yb:.2}\" \
             stroke=\"#888888\" stroke-dasharray=\"6,4\"/>\n"
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" fill=\"#888888\">Noether \
             c1^2 = 2chi_h - 6</text>\n",
            left.x0 + 8.0,
            left.y0 + 16.0
        ));
    }

    // Einstein wedge 2chi = 3|tau| and the ratio window rays on the (chi, tau) panel
    for (slope, color, label) in [
        (2.0 / 3.0, "#cc4444", "2chi = 3tau"),
        (-2.0 / 3.0, "#cc4444", "2chi = -3tau"),
        (-8.0 / 23.0, "#4466cc", "tau/chi = -8/23"),
        (-1.0, "#4466cc", "tau/chi = -1"),
    ] {
        if let Some((xa, ya, xb, yb)) = right.clip_line(0.0, slope) {
            svg.push_str(&format!(
                "<line x1=\"{xa:.2}\" y1=\"{ya:.2}\" x2=\"{xb:.2}\" y2=\"{yb:.2}\" \
                 stroke=\"{color}\" stroke-width=\"1\"/>\n"
            ));
            let _ = label;
        }
    }
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" fill=\"#cc4444\">2chi = 3|tau| \
         wedge</text>\n",
        right.x0 + 8.0,
        right.y0 + 16.0
    ));
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" fill=\"#4466cc\">ratio window \
         [-1, -8/23]</text>\n",
        right.x0 + 8.0,
        right.y0 + 30.0
    ));

    for (row, xh) in rows.iter().zip(chih.iter()) {
        let color = match row.verdict.as_str() {
            "AdmitsKE" => "#228833",
            "Undetermined" => "#999933",
            _ => "#882255",
        };
        svg.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"{color}\"><title>{}</title>\
             </circle>\n",
            left.px(*xh),
            left.py(row.c1sq as f64),
            row.name
        ));
        svg.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"{color}\"><title>{}</title>\
             </circle>\n",
            right.px(row.chi as f64),
            right.py(row.tau as f64),
            row.name
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
