//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Exact statements use integer/rational equality; floating
//! point statements pin their tolerances here.

use nalgebra::Vector4;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use fourfold::catalog::{chen_surface, horikawa, hypersurface};
use fourfold::curvops::{
    bottom_sectional, from_riemann, model, model_volume, sectional, CurvatureOperator,
    ModelSpace, RiemannTensor, TwoPlane,
};
use fourfold::functional::{i_r, i_s, mixed_vol_lower, ricci_lower_gb, vol_ks_lower, vol_s,
    PiSquared};
use fourfold::geography::{non_einstein_for_ratio, ratio, RatioTarget};
use fourfold::lattice::homeomorphic;
use fourfold::obstruct::{classify, sw_einstein_obstruction, Verdict};
use fourfold::surface::{FourManifold, SpinStatus};

const TOL_CROSS: f64 = 1e-10;
const TOL_MODEL: f64 = 1e-9;
const TOL_KAPPA_PIN: f64 = 1e-12;

fn criterion(number: u32, name: &str, failures: Vec<String>) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {number:02} {status} {name}");
    assert!(failures.is_empty(), "criterion {number} ({name}) failed:\n{}", failures.join("\n"));
}

fn check(failures: &mut Vec<String>, ok: bool, what: &str) {
    if !ok {
        failures.push(what.to_string());
    }
}

#[test]
fn criterion_01_degree_six_hypersurface() {
    let mut f = Vec::new();
    let sextic = hypersurface(6).unwrap();
    check(&mut f, sextic.c1_squared == 24, "c1^2 of the sextic is 24");
    let blown = FourManifold::new(sextic, 8, 0);
    let inv = blown.invariants().unwrap();
    check(&mut f, inv.b_plus == Some(21), "b+ = 21 after 8 blow-ups");
    check(&mut f, inv.b_minus == Some(93), "b- = 93 after 8 blow-ups");
    check(&mut f, inv.tau == -72, "tau = -72 after 8 blow-ups");
    check(
        &mut f,
        blown.spin_status().unwrap() == SpinStatus::No,
        "signature -72 is not 0 mod 16, so the manifold is not spin",
    );
    criterion(1, "degree-6 hypersurface invariants and spin status", f);
}

#[test]
fn criterion_02_horikawa_reproduction() {
    let mut f = Vec::new();
    let h = horikawa(3, 6).unwrap();
    check(&mut f, h.c1_squared == 16, "c1^2 = 16");
    check(&mut f, h.p_g == 10, "p_g = 10");
    let minimal = FourManifold::minimal(h);
    let inv = minimal.invariants().unwrap();
    check(&mut f, inv.b_plus == Some(21), "b+ = 21");
    check(&mut f, inv.b_minus == Some(93), "b- = 93");
    check(&mut f, inv.tau == -72, "tau = -72");
    let partner = FourManifold::new(hypersurface(6).unwrap(), 8, 0);
    check(
        &mut f,
        homeomorphic(&partner, &minimal).unwrap(),
        "sextic # 8 blow-ups is homeomorphic to horikawa(3,6)",
    );
    criterion(2, "horikawa(3,6) invariants and homeomorphism", f);
}

#[test]
fn criterion_03_einstein_dichotomy() {
    let mut f = Vec::new();
    let horikawa_min = FourManifold::minimal(horikawa(3, 6).unwrap());
    let blown_sextic = FourManifold::new(hypersurface(6).unwrap(), 8, 0);
    let v1 = classify(&horikawa_min).unwrap().verdict;
    let v2 = classify(&blown_sextic).unwrap().verdict;
    check(&mut f, v1 == Verdict::AdmitsKE, &format!("horikawa verdict was {v1:?}"));
    check(&mut f, v2 == Verdict::ObstructedSW, &format!("blown sextic verdict was {v2:?}"));
    criterion(3, "Einstein dichotomy of the homeomorphic pair", f);
}

#[test]
fn criterion_04_ricci_functional_formula() {
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1f);
    for case in 0..100 {
        let (spec, max_l) = match rng.gen_range(0..4u8) {
            0 => (hypersurface(rng.gen_range(5..10)).unwrap(), 4),
            1 => (hypersurface(4).unwrap(), 0),
            2 => (horikawa(rng.gen_range(3..7), rng.gen_range(3..7)).unwrap(), 4),
            _ => (chen_surface(17_000_002 + 2 * rng.gen_range(0..50)).unwrap(), 4),
        };
        let k = rng.gen_range(0..50u64);
        let l = if max_l == 0 { 0 } else { rng.gen_range(0..=max_l) };
        let m = FourManifold::new(spec.clone(), k, l);
        let expected =
            PiSquared::new(8 * (spec.c1_squared + k as i64 + 4 * l as i64), 1);
        let via_i_r = i_r(&m).unwrap();
        let via_gauss_bonnet = ricci_lower_gb(&m).unwrap();
        check(
            &mut f,
            via_i_r == expected,
            &format!("case {case}: i_r({}) = {via_i_r}, expected {expected}", m.display_name()),
        );
        check(
            &mut f,
            via_i_r == via_gauss_bonnet,
            &format!("case {case}: i_r disagrees with the Gauss-Bonnet route"),
        );
        let quarter_i_s = i_s(&m).unwrap().scale(Rational64::new(1, 4));
        let minimal = k == 0 && l == 0;
        check(
            &mut f,
            (via_i_r == quarter_i_s) == minimal,
            &format!("case {case}: i_r = i_s/4 must hold exactly when k = l = 0"),
        );
    }
    criterion(4, "Ricci functional formula on 100 randomized manifolds", f);
}

#[test]
fn criterion_05_minimal_volumes() {
    let mut f = Vec::new();
    let sextic = FourManifold::minimal(hypersurface(6).unwrap());
    let v = vol_s(&sextic).unwrap();
    check(&mut f, v == PiSquared::new(16, 3), &format!("vol_s = {v}, expected (16/3)*pi^2"));
    let ks = vol_ks_lower(&sextic).unwrap();
    check(&mut f, ks.value == PiSquared::new(12, 1), &format!("vol_ks = {}", ks.value));
    check(
        &mut f,
        ks.value == v.scale(Rational64::new(9, 4)),
        "vol_ks = (9/4) vol_s",
    );
    let mixed = mixed_vol_lower(&sextic, Rational64::new(1, 2)).unwrap();
    check(&mut f, mixed == ks.value, "mixed bound at t = 1/2 matches vol_ks");
    let general_type: Vec<FourManifold> = vec![
        FourManifold::minimal(hypersurface(5).unwrap()),
        FourManifold::minimal(hypersurface(6).unwrap()),
        FourManifold::minimal(hypersurface(7).unwrap()),
        FourManifold::minimal(horikawa(3, 6).unwrap()),
        FourManifold::minimal(horikawa(4, 5).unwrap()),
        FourManifold::minimal(chen_surface(17_000_002).unwrap()),
    ];
    for m in &general_type {
        let lhs = i_s(m).unwrap();
        let rhs = vol_s(m).unwrap().scale(Rational64::new(144, 1));
        check(
            &mut f,
            lhs == rhs,
            &format!("i_s = 144 vol_s failed on {}", m.display_name()),
        );
    }
    criterion(5, "minimal volume values and their exact ratios", f);
}

#[test]
fn criterion_06_geography_sweep() {
    let mut f = Vec::new();
    let threshold = non_einstein_for_ratio(&RatioTarget::new(Rational64::new(-8, 23))).unwrap();
    check(&mut f, 3 * threshold.k == 11 * threshold.m, "k/m = 11/3 at |q| = 8/23");
    let mut rng = ChaCha8Rng::seed_from_u64(0x2e);
    let mut tested = 0;
    while tested < 50 {
        let den = rng.gen_range(2i64..=400);
        let num = rng.gen_range(1i64..den);
        let q = Rational64::new(num, den);
        if q < Rational64::new(8, 23) {
            continue;
        }
        tested += 1;
        let built = non_einstein_for_ratio(&RatioTarget::new(q)).unwrap();
        let r = ratio(&built.manifold).unwrap();
        check(&mut f, r == -q, &format!("ratio for q = {q} came out {r}"));
        check(
            &mut f,
            sw_einstein_obstruction(&built.manifold).unwrap(),
            &format!("construction for q = {q} is not obstructed"),
        );
        check(&mut f, built.orientation_reversed, "positive targets set the orientation flag");
    }
    criterion(6, "prescribed-ratio constructions across the window", f);
}

#[test]
fn criterion_07_gauss_bonnet_models() {
    let mut f = Vec::new();
    let pi_sq = std::f64::consts::PI * std::f64::consts::PI;
    let sphere = model(ModelSpace::S4, 1.0).gauss_bonnet_integrand();
    let sphere_total = sphere.gb * (8.0 * pi_sq / 3.0);
    check(
        &mut f,
        (sphere_total - 4.0).abs() <= TOL_MODEL,
        &format!("sphere integral = {sphere_total}, expected 4"),
    );
    let product_space = ModelSpace::S2xS2 { r1: 1.0, r2: 2.0 };
    let product = model(product_space, 1.0).gauss_bonnet_integrand();
    let product_total = product.gb * 64.0 * pi_sq;
    check(
        &mut f,
        (product_total - 8.0).abs() <= TOL_MODEL,
        &format!("product integral = {product_total}, expected 8"),
    );
    check(
        &mut f,
        (model_volume(product_space, 1.0).unwrap() - 64.0 * pi_sq).abs() <= TOL_MODEL,
        "volume of S2(1) x S2(2) is 64 pi^2",
    );
    check(
        &mut f,
        (product.r0_sq - 9.0 / 16.0).abs() <= TOL_KAPPA_PIN,
        &format!(
            "|trace-free Ricci|^2 = {} but the eigenvalue oracle (1,1,1/4,1/4) gives 9/16",
            product.r0_sq
        ),
    );
    criterion(7, "Gauss-Bonnet totals on the sphere and sphere product", f);
}

/// Random tensor with all four Riemann symmetries: antisymmetrize a Gaussian
/// seed in both index pairs, symmetrize under pair exchange, then project out
/// the totally antisymmetric (volume-form) component to restore the first
/// Bianchi identity.
fn random_curvature_tensor(rng: &mut ChaCha8Rng) -> RiemannTensor {
    let mut seed = [[[[0.0f64; 4]; 4]; 4]; 4];
    for plane_i in seed.iter_mut() {
        for plane_j in plane_i.iter_mut() {
            for plane_k in plane_j.iter_mut() {
                for slot in plane_k.iter_mut() {
                    *slot = rng.sample(StandardNormal);
                }
            }
        }
    }
    let mut paired = [[[[0.0f64; 4]; 4]; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let anti = |a: usize, b: usize, c: usize, d: usize| {
                        0.25 * (seed[a][b][c][d] - seed[b][a][c][d] - seed[a][b][d][c]
                            + seed[b][a][d][c])
                    };
                    paired[i][j][k][l] = 0.5 * (anti(i, j, k, l) + anti(k, l, i, j));
                }
            }
        }
    }
    let mut out = paired;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let cyclic =
                        paired[i][j][k][l] + paired[i][k][l][j] + paired[i][l][j][k];
                    out[i][j][k][l] -= cyclic / 3.0;
                }
            }
        }
    }
    out
}

fn direct_contraction(r: &RiemannTensor, u: &Vector4<f64>, v: &Vector4<f64>) -> f64 {
    let mut total = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    total += r[i][j][k][l] * u[i] * v[j] * u[k] * v[l];
                }
            }
        }
    }
    total
}

fn random_vec(rng: &mut ChaCha8Rng) -> Vector4<f64> {
    Vector4::new(
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
    )
}

#[test]
fn criterion_08_sectional_formula_equivalence() {
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x8c);
    let mut worst = 0.0f64;
    for case in 0..10_000 {
        let tensor = random_curvature_tensor(&mut rng);
        let op = match from_riemann(&tensor) {
            Ok(op) => op,
            Err(e) => {
                check(&mut f, false, &format!("case {case}: projection left a violation: {e}"));
                continue;
            }
        };
        let plane = match TwoPlane::from_span(random_vec(&mut rng), random_vec(&mut rng)) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let via_operator = sectional(&op, &plane);
        let via_contraction = direct_contraction(&tensor, plane.u(), plane.v());
        let gap = (via_operator - via_contraction).abs();
        worst = worst.max(gap);
        if gap > TOL_CROSS {
            check(
                &mut f,
                false,
                &format!("case {case}: block formula {via_operator} vs contraction {via_contraction}"),
            );
        }
    }
    check(&mut f, worst <= TOL_CROSS, &format!("worst deviation {worst:.3e}"));
    criterion(8, "sectional curvature formula vs direct contraction (10^4 cases)", f);
}

fn random_sym_tracefree(rng: &mut ChaCha8Rng) -> nalgebra::Matrix3<f64> {
    let mut m = nalgebra::Matrix3::zeros();
    for i in 0..3 {
        for j in i..3 {
            let x: f64 = rng.sample(StandardNormal);
            m[(i, j)] = x;
            m[(j, i)] = x;
        }
    }
    let tr = m.trace() / 3.0;
    for i in 0..3 {
        m[(i, i)] -= tr;
    }
    m
}

#[test]
fn criterion_09_bottom_sectional_bound_chain() {
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9d);
    for case in 0..10_000 {
        let wp = random_sym_tracefree(&mut rng);
        let wm = random_sym_tracefree(&mut rng);
        let mut b = nalgebra::Matrix3::zeros();
        for i in 0..3 {
            for j in 0..3 {
                b[(i, j)] = rng.sample::<f64, _>(StandardNormal);
            }
        }
        let s: f64 = 10.0 * rng.sample::<f64, _>(StandardNormal);
        let op = CurvatureOperator::from_blocks(s, wp, wm, b).unwrap();
        let bottom = bottom_sectional(&op, 0, 0);
        if !(bottom.witness_value <= bottom.bound_crafty + TOL_CROSS
            && bottom.bound_crafty <= bottom.bound_wgl + TOL_CROSS)
        {
            check(
                &mut f,
                false,
                &format!(
                    "case {case}: witness {} / crafty {} / wgl {}",
                    bottom.witness_value, bottom.bound_crafty, bottom.bound_wgl
                ),
            );
        }
    }
    let ch2 = model(ModelSpace::CH2, 1.0);
    check(&mut f, ch2.wm().norm() <= TOL_MODEL, "CH2 has W- = 0");
    let bottom = bottom_sectional(&ch2, 0, 0);
    check(
        &mut f,
        (bottom.witness_value - bottom.bound_crafty).abs() <= TOL_MODEL,
        &format!(
            "CH2 equality: witness {} vs bound {}",
            bottom.witness_value, bottom.bound_crafty
        ),
    );
    let mean_of_extremes = 0.5 * (bottom.witness_value + ch2.s() / 12.0);
    check(
        &mut f,
        (mean_of_extremes + 1.0).abs() <= TOL_MODEL,
        &format!("CH2 mean of extreme curvatures = {mean_of_extremes}, expected -1"),
    );
    criterion(9, "witness/crafty/wgl bound chain (10^4 cases) and CH2 equality", f);
}

#[test]
fn criterion_10_kaehler_saturation() {
    let mut f = Vec::new();
    for (name, op) in [
        ("CP2", model(ModelSpace::CP2, 1.0)),
        ("CH2", model(ModelSpace::CH2, 1.0)),
    ] {
        let s = op.s();
        let scalars = op.scalars();
        check(
            &mut f,
            (scalars.wp_norm.powi(2) - s * s / 24.0).abs() <= TOL_MODEL,
            &format!("{name}: |W+|^2 = {} but s^2/24 = {}", scalars.wp_norm.powi(2), s * s / 24.0),
        );
        // the Kähler form spans the simple eigenvalue s/6 of W+
        let eig = nalgebra::linalg::SymmetricEigen::new(*op.wp());
        let mut idx = 0;
        for i in 1..3 {
            if (eig.eigenvalues[i] - s / 6.0).abs() < (eig.eigenvalues[idx] - s / 6.0).abs() {
                idx = i;
            }
        }
        let omega = eig.eigenvectors.column(idx) * 2.0f64.sqrt();
        let s_star = op.s_star(&omega.into_owned());
        check(
            &mut f,
            (s_star - s).abs() <= TOL_MODEL,
            &format!("{name}: s*(omega) = {s_star}, expected s = {s}"),
        );
        let family: Vec<f64> = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5]
            .iter()
            .map(|&t| op.sw_integrands(t).unwrap().family)
            .collect();
        let spread = family.iter().fold(0.0f64, |acc, &x| acc.max((x - family[0]).abs()));
        check(
            &mut f,
            spread <= TOL_MODEL,
            &format!("{name}: family integrand varies by {spread:.3e} across t"),
        );
        if s < 0.0 {
            check(
                &mut f,
                (family[0] - s * s).abs() <= TOL_MODEL,
                &format!("{name}: family = {} but s^2 = {}", family[0], s * s),
            );
        }
    }
    criterion(10, "Kähler saturation identities on CP2 and CH2", f);
}
