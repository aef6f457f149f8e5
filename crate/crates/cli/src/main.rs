//! `fourfold`: invariants, Einstein obstructions, curvature functionals, and
//! pointwise curvature-operator numerics for blown-up complex surfaces.
//!
//! Exit codes: 0 success (verdicts are data, not errors), 1 domain error,
//! 2 usage error.

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nalgebra::Vector4;
use num_rational::Rational64;
use serde_json::json;

use fourfold::catalog::{chen_surface, horikawa, hypersurface};
use fourfold::curvops::{
    bottom_sectional, from_riemann, model, model_volume, sectional, CurvOpJson,
    CurvatureOperator, ModelSpace, RiemannJson, TwoPlane,
};
use fourfold::functional::{
    asd_scalar_lower, i_r, i_riemann_lower, i_s, mixed_vol_lower, ricci_lower_gb,
    two_sided_vol_lower, vol_ks_lower, vol_s, weyl_scalar_lower, yamabe_squared, PiSquared,
};
use fourfold::geography::{
    homeo_pair, non_einstein_for_ratio, plot_rows, ratio, to_csv, to_svg, RatioTarget,
};
use fourfold::obstruct::{classify, hitchin_thorpe};
use fourfold::surface::{FourManifold, MinimalSurfaceSpec};

#[derive(Parser)]
#[command(
    name = "fourfold",
    version,
    about = "Invariants, Einstein obstructions, and curvature analysis of 4-manifolds \
             built from minimal complex surfaces"
)]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Built-in families of minimal complex surfaces
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Topological invariants of a surface spec with blow-ups and surgeries
    Invariants(SpecArgs),
    /// Einstein-metric obstruction verdict
    Obstruct(SpecArgs),
    /// Curvature-functional infima and minimal-volume bounds
    Functional {
        #[command(flatten)]
        spec: SpecArgs,
        /// Mixing parameter for the interpolated volume bound, e.g. 1/4
        #[arg(long)]
        t: Option<String>,
    },
    /// Pointwise curvature-operator computations
    Curv {
        #[command(subcommand)]
        action: CurvAction,
    },
    /// Geography: ratios, constructions, pairs, plots
    Geography {
        #[command(subcommand)]
        action: GeographyAction,
    },
    /// Shorthand for `geography pair`
    Pair(PairArgs),
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the families and their parameters
    List,
    /// Print the full spec of one entry as JSON
    Show(SpecArgs),
}

#[derive(Subcommand)]
enum CurvAction {
    /// Split an operator document (blocks or Riemann tensor) into s, W+, W-, B
    Decompose {
        /// Input file, or - for stdin
        input: String,
    },
    /// Sectional curvature of one tangent 2-plane
    Sectional {
        /// Input file, or - for stdin
        input: String,
        /// The plane as 8 comma-separated components: u1,u2,u3,u4,v1,v2,v3,v4
        #[arg(long)]
        plane: String,
        /// Gram-Schmidt the spanning pair instead of requiring orthonormality
        #[arg(long)]
        orthonormalize: bool,
    },
    /// Estimate the minimum sectional curvature (random planes + eigen witness)
    Bottom {
        /// Input file, or - for stdin
        input: String,
        #[arg(long, default_value_t = 1024)]
        samples: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Emit a model-space operator as an operator JSON document
    Model {
        /// One of: S4, S2xS2, CP2, CH2
        name: String,
        /// Length scale (all models)
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// First sphere radius (S2xS2 only)
        #[arg(long, default_value_t = 1.0)]
        r1: f64,
        /// Second sphere radius (S2xS2 only)
        #[arg(long, default_value_t = 1.0)]
        r2: f64,
    },
    /// Verify every pointwise invariant of an operator document
    Check {
        /// Input file, or - for stdin
        input: String,
    },
}

#[derive(Subcommand)]
enum GeographyAction {
    /// Signature-to-Euler ratio tau/chi in lowest terms
    Ratio(SpecArgs),
    /// Build a non-Einstein manifold with tau/chi = -|q|
    Construct {
        /// Target ratio as a fraction, e.g. -8/23 (8/23 <= |q| < 1)
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Homeomorphic pair with different Ricci invariants
    Pair(PairArgs),
    /// Write scatter data for a list of manifolds to CSV or SVG
    Plot {
        /// Selectors: FAMILY:ARGS[+K[+L]] (e.g. hypersurface:6+8) or spec-file paths
        #[arg(required = true)]
        selectors: Vec<String>,
        /// Output file; the extension (.csv or .svg) picks the format
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct PairArgs {
    /// Larger-c1^2 minimal surface: FAMILY:ARGS (e.g. hypersurface:6) or a spec file
    #[arg(long)]
    x: String,
    /// Smaller-c1^2 minimal surface, same syntax
    #[arg(long)]
    xtilde: String,
    /// Blow-ups added to both sides
    #[arg(long, default_value_t = 1)]
    k: u64,
    /// Allow k = 0, pairing the minimal surface itself with a blown-up partner
    #[arg(long)]
    allow_k_zero: bool,
}

/// Spec source: a JSON file, or a catalog family with its parameters.
#[derive(Args)]
struct SpecArgs {
    /// Path to a minimal-surface spec JSON file (alternative to --catalog)
    spec: Option<PathBuf>,
    /// Catalog family: hypersurface, horikawa, or chen
    #[arg(long)]
    catalog: Option<String>,
    /// Degree (hypersurface)
    #[arg(long)]
    d: Option<i64>,
    /// First branch parameter (horikawa)
    #[arg(long)]
    a: Option<i64>,
    /// Second branch parameter (horikawa)
    #[arg(long)]
    b: Option<i64>,
    /// Signature of the minimal model (chen)
    #[arg(long)]
    m: Option<i64>,
    /// Blow-ups: connected sums with the reversed projective plane
    #[arg(long, default_value_t = 0)]
    k: u64,
    /// Surgeries: connected sums with S1 x S3
    #[arg(long, default_value_t = 0)]
    l: u64,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn domain(err: impl std::fmt::Display) -> Failure {
    Failure::Domain(err.to_string())
}

impl SpecArgs {
    fn minimal(&self) -> Result<MinimalSurfaceSpec, Failure> {
        let spec = match (&self.spec, &self.catalog) {
            (Some(_), Some(_)) => {
                return Err(usage("give either a spec file or --catalog, not both"))
            }
            (None, None) => return Err(usage("a spec file or --catalog is required")),
            (Some(path), None) => {
                if self.d.is_some() || self.a.is_some() || self.b.is_some() || self.m.is_some() {
                    return Err(usage("family flags apply only with --catalog"));
                }
                let text = std::fs::read_to_string(path)
                    .map_err(|e| domain(format!("cannot read {}: {e}", path.display())))?;
                MinimalSurfaceSpec::from_json_str(&text)
                    .map_err(|e| domain(format!("invalid spec {}: {e}", path.display())))?
            }
            (None, Some(family)) => match family.as_str() {
                "hypersurface" => {
                    if self.a.is_some() || self.b.is_some() || self.m.is_some() {
                        return Err(usage("hypersurface takes only --d"));
                    }
                    let d = self.d.ok_or_else(|| usage("hypersurface requires --d"))?;
                    hypersurface(d).map_err(domain)?
                }
                "horikawa" => {
                    if self.d.is_some() || self.m.is_some() {
                        return Err(usage("horikawa takes only --a and --b"));
                    }
                    let a = self.a.ok_or_else(|| usage("horikawa requires --a and --b"))?;
                    let b = self.b.ok_or_else(|| usage("horikawa requires --a and --b"))?;
                    horikawa(a, b).map_err(domain)?
                }
                "chen" => {
                    if self.d.is_some() || self.a.is_some() || self.b.is_some() {
                        return Err(usage("chen takes only --m"));
                    }
                    let m = self.m.ok_or_else(|| usage("chen requires --m"))?;
                    chen_surface(m).map_err(domain)?
                }
                other => {
                    return Err(usage(format!(
                        "unknown catalog family {other:?}; expected hypersurface, horikawa, or chen"
                    )))
                }
            },
        };
        for warning in spec.violations() {
            eprintln!("warning: {warning}");
        }
        Ok(spec)
    }

    fn manifold(&self) -> Result<FourManifold, Failure> {
        Ok(FourManifold::new(self.minimal()?, self.k, self.l))
    }
}

/// FAMILY:ARGS[+K[+L]] or a spec-file path [+K[+L]].
fn parse_selector(selector: &str) -> Result<FourManifold, Failure> {
    let mut parts = selector.split('+');
    let head = parts.next().expect("split yields at least one part");
    let k: u64 = match parts.next() {
        Some(text) => text
            .parse()
            .map_err(|_| usage(format!("bad blow-up count in selector {selector:?}")))?,
        None => 0,
    };
    let l: u64 = match parts.next() {
        Some(text) => text
            .parse()
            .map_err(|_| usage(format!("bad surgery count in selector {selector:?}")))?,
        None => 0,
    };
    if parts.next().is_some() {
        return Err(usage(format!("selector {selector:?} has too many + sections")));
    }
    let spec = parse_minimal_selector(head)?;
    Ok(FourManifold::new(spec, k, l))
}

fn parse_minimal_selector(head: &str) -> Result<MinimalSurfaceSpec, Failure> {
    let Some((family, args)) = head.split_once(':') else {
        let text = std::fs::read_to_string(head)
            .map_err(|e| domain(format!("cannot read {head}: {e}")))?;
        return MinimalSurfaceSpec::from_json_str(&text)
            .map_err(|e| domain(format!("invalid spec {head}: {e}")));
    };
    let nums: Vec<i64> = args
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("bad numeric arguments in selector {head:?}")))?;
    match (family, nums.as_slice()) {
        ("hypersurface", [d]) => hypersurface(*d).map_err(domain),
        ("horikawa", [a, b]) => horikawa(*a, *b).map_err(domain),
        ("chen", [m]) => chen_surface(*m).map_err(domain),
        _ => Err(usage(format!(
            "selector {head:?} not understood; use hypersurface:D, horikawa:A,B, chen:M, \
             or a file path"
        ))),
    }
}

fn parse_rational(text: &str) -> Result<Rational64, Failure> {
    let make_err = || usage(format!("cannot parse {text:?} as a fraction p/q"));
    match text.split_once('/') {
        Some((num, den)) => {
            let num: i64 = num.trim().parse().map_err(|_| make_err())?;
            let den: i64 = den.trim().parse().map_err(|_| make_err())?;
            if den == 0 {
                return Err(usage("fraction denominator must be nonzero"));
            }
            Ok(Rational64::new(num, den))
        }
        None => {
            let num: i64 = text.trim().parse().map_err(|_| make_err())?;
            Ok(Rational64::new(num, 1))
        }
    }
}

/// Render to 12 significant digits.
fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}

fn show_pi2(p: &PiSquared) -> String {
    if p.is_zero() {
        "0".to_string()
    } else {
        format!("{p} = {}", sig12(p.approx()))
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable value"));
}

fn read_input(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| domain(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(input).map_err(|e| domain(format!("cannot read {input}: {e}")))
    }
}

/// Accepts either an operator-blocks document or a Riemann-tensor document.
fn read_operator(input: &str) -> Result<CurvatureOperator, Failure> {
    let text = read_input(input)?;
    if let Ok(doc) = serde_json::from_str::<CurvOpJson>(&text) {
        return doc.to_operator().map_err(domain);
    }
    match serde_json::from_str::<RiemannJson>(&text) {
        Ok(doc) => from_riemann(&doc.to_tensor().map_err(domain)?).map_err(domain),
        Err(e) => Err(domain(format!(
            "input is neither an operator document {{s, wp, wm, b}} nor a Riemann document \
             {{riem}}: {e}"
        ))),
    }
}

fn main() -> ExitCode {
    // Die quietly when the read end of a pipe closes, like other line tools.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Catalog { action } => match action {
            CatalogAction::List => cmd_catalog_list(json),
            CatalogAction::Show(spec) => cmd_catalog_show(&spec, json),
        },
        Command::Invariants(spec) => cmd_invariants(&spec, json),
        Command::Obstruct(spec) => cmd_obstruct(&spec, json),
        Command::Functional { spec, t } => cmd_functional(&spec, t.as_deref(), json),
        Command::Curv { action } => match action {
            CurvAction::Decompose { input } => cmd_curv_decompose(&input, json),
            CurvAction::Sectional { input, plane, orthonormalize } => {
                cmd_curv_sectional(&input, &plane, orthonormalize, json)
            }
            CurvAction::Bottom { input, samples, seed } => {
                cmd_curv_bottom(&input, samples, seed, json)
            }
            CurvAction::Model { name, scale, r1, r2 } => cmd_curv_model(&name, scale, r1, r2),
            CurvAction::Check { input } => cmd_curv_check(&input, json),
        },
        Command::Geography { action } => match action {
            GeographyAction::Ratio(spec) => cmd_geo_ratio(&spec, json),
            GeographyAction::Construct { q } => cmd_geo_construct(&q, json),
            GeographyAction::Pair(args) => cmd_geo_pair(&args, json),
            GeographyAction::Plot { selectors, out } => cmd_geo_plot(&selectors, &out, json),
        },
        Command::Pair(args) => cmd_geo_pair(&args, json),
    }
}

fn cmd_catalog_list(json: bool) -> Result<(), Failure> {
    if json {
        print_json(&json!([
            {
                "family": "hypersurface",
                "parameters": {"d": "degree, integer >= 4"},
                "description": "smooth degree-d hypersurface in complex projective 3-space",
            },
            {
                "family": "horikawa",
                "parameters": {"a": "integer >= 3", "b": "integer >= 3"},
                "description": "double cover of the quadric branched over a bidegree (2a, 2b) curve",
            },
            {
                "family": "chen",
                "parameters": {"m": "even integer > 17000000"},
                "description": "simply connected minimal general-type surface with tau = m, chi = 4m",
            },
        ]));
    } else {
        println!("hypersurface  --d N        smooth degree-N hypersurface in CP3 (N >= 4)");
        println!("horikawa      --a A --b B  double cover of the quadric, branch bidegree (2A, 2B) (A, B >= 3)");
        println!("chen          --m M        general-type surface with tau = M, chi = 4M (even M > 17000000)");
    }
    Ok(())
}

fn cmd_catalog_show(spec: &SpecArgs, _json: bool) -> Result<(), Failure> {
    let minimal = spec.minimal()?;
    println!("{}", serde_json::to_string_pretty(&minimal).expect("spec serializes"));
    Ok(())
}

fn cmd_invariants(spec: &SpecArgs, json: bool) -> Result<(), Failure> {
    let m = spec.manifold()?;
    let inv = m.invariants().map_err(domain)?;
    let spin = m.spin_status().map_err(domain)?;
    if json {
        print_json(&json!({
            "name": m.display_name(),
            "chi": inv.chi,
            "tau": inv.tau,
            "b_plus": inv.b_plus,
            "b_minus": inv.b_minus,
            "c1sq_minimal": inv.c1sq_minimal,
            "sw_c1plus_sq_lower": inv.sw_c1plus_sq_lower,
            "spin": spin,
            "two_chi_plus_3tau": inv.two_chi_plus_3tau,
        }));
    } else {
        println!("name = {}", m.display_name());
        println!("chi = {}", inv.chi);
        println!("tau = {}", inv.tau);
        match (inv.b_plus, inv.b_minus) {
            (Some(bp), Some(bm)) => {
                println!("b+ = {bp}");
                println!("b- = {bm}");
            }
            _ => {
                println!("b+ = unknown (not simply connected)");
                println!("b- = unknown (not simply connected)");
            }
        }
        println!("c1^2 of the minimal model = {}", inv.c1sq_minimal);
        println!("spin = {spin:?}");
        println!("2chi+3tau = {}", inv.two_chi_plus_3tau);
    }
    Ok(())
}

fn cmd_obstruct(spec: &SpecArgs, json: bool) -> Result<(), Failure> {
    let m = spec.manifold()?;
    let verdict = classify(&m).map_err(domain)?;
    let ht = hitchin_thorpe(&m).map_err(domain)?;
    if json {
        print_json(&json!({
            "verdict": format!("{:?}", verdict.verdict),
            "witness": verdict.witness,
            "asd_note": verdict.asd_note,
            "hitchin_thorpe": ht,
        }));
    } else {
        println!("{verdict}");
        let relation = if ht.passes { ">=" } else { "<" };
        println!(
            "hitchin-thorpe: {} (2chi = {} {relation} {} = 3|tau|)",
            if ht.passes { "passes" } else { "fails" },
            ht.two_chi,
            ht.three_abs_tau
        );
    }
    Ok(())
}

fn cmd_functional(spec: &SpecArgs, t: Option<&str>, json: bool) -> Result<(), Failure> {
    let m = spec.manifold()?;
    let t = t.map(parse_rational).transpose()?;

    let i_s_value = i_s(&m).map_err(domain)?;
    let vol_s_value = vol_s(&m).map_err(domain)?;
    let ricci_gb = ricci_lower_gb(&m).map_err(domain)?;
    let asd = asd_scalar_lower(&m).map_err(domain)?;
    let informational = i_riemann_lower(&m).map_err(domain)?;
    let (yamabe, sign) = yamabe_squared(&m).map_err(domain)?;
    let i_r_result = i_r(&m);
    let two_sided = two_sided_vol_lower(&m);
    let vol_ks = vol_ks_lower(&m);
    let weyl = weyl_scalar_lower(&m);
    let mixed = t.map(|t| mixed_vol_lower(&m, t));

    if json {
        let option_pi2 = |r: &Result<PiSquared, _>| match r {
            Ok(v) => serde_json::to_value(v).expect("serializable"),
            Err(_) => serde_json::Value::Null,
        };
        let mut notes = serde_json::Map::new();
        let mut note = |key: &str, err: &dyn std::fmt::Display| {
            notes.insert(key.to_string(), json!(err.to_string()));
        };
        if let Err(e) = &i_r_result {
            note("i_r", e);
        }
        if let Err(e) = &two_sided {
            note("two_sided_vol_lower", e);
        }
        if let Err(e) = &vol_ks {
            note("vol_ks_lower", e);
        }
        if let Err(e) = &weyl {
            note("weyl_scalar_lower", e);
        }
        if let Some(Err(e)) = &mixed {
            note("mixed_vol_lower", e);
        }
        print_json(&json!({
            "name": m.display_name(),
            "i_s": i_s_value,
            "i_r": option_pi2(&i_r_result),
            "vol_s": vol_s_value,
            "vol_ks_lower": match &vol_ks {
                Ok(v) => json!({"value": v.value, "exact": v.exact}),
                Err(_) => serde_json::Value::Null,
            },
            "mixed_vol_lower": match &mixed {
                Some(Ok(v)) => serde_json::to_value(v).expect("serializable"),
                _ => serde_json::Value::Null,
            },
            "weyl_scalar_lower": match &weyl {
                Ok(w) => json!({
                    "west": {"num": *w.west.numer(), "den": *w.west.denom()},
                    "glove": {"num": *w.glove.numer(), "den": *w.glove.denom()},
                }),
                Err(_) => serde_json::Value::Null,
            },
            "ricci_lower_gb": ricci_gb,
            "asd_scalar_lower": asd,
            "two_sided_vol_lower": option_pi2(&two_sided),
            "i_riemann_lower": informational,
            "yamabe_squared": yamabe,
            "yamabe_sign": format!("{sign:?}"),
            "notes": notes,
        }));
        return Ok(());
    }

    println!("name = {}", m.display_name());
    println!("i_s = {}", show_pi2(&i_s_value));
    match &i_r_result {
        Ok(v) => println!("i_r = {}", show_pi2(v)),
        Err(e) => println!("i_r = unavailable ({e})"),
    }
    println!("vol_s = {}", show_pi2(&vol_s_value));
    match &vol_ks {
        Ok(v) => println!(
            "vol_ks_lower = {}{}",
            show_pi2(&v.value),
            if v.exact { " (attained)" } else { "" }
        ),
        Err(e) => println!("vol_ks_lower = unavailable ({e})"),
    }
    if let Some(mixed) = &mixed {
        match mixed {
            Ok(v) => println!("mixed_vol_lower = {}", show_pi2(v)),
            Err(e) => println!("mixed_vol_lower = unavailable ({e})"),
        }
    }
    match &weyl {
        Ok(w) => {
            println!("weyl_scalar_west = {}", w.west);
            println!("weyl_scalar_glove = {}", w.glove);
        }
        Err(e) => println!("weyl_scalar_lower = unavailable ({e})"),
    }
    println!("ricci_lower_gb = {}", show_pi2(&ricci_gb));
    println!("asd_scalar_lower = {}", show_pi2(&asd));
    match &two_sided {
        Ok(v) => println!("two_sided_vol_lower = {}", show_pi2(v)),
        Err(e) => println!("two_sided_vol_lower = unavailable ({e})"),
    }
    println!("i_riemann_lower = {} (informational)", show_pi2(&informational));
    println!("yamabe_squared = {} (sign: {sign:?})", show_pi2(&yamabe));
    Ok(())
}

fn scalars_json(op: &CurvatureOperator) -> serde_json::Value {
    json!({
        "operator": CurvOpJson::from_operator(op),
        "scalars": op.scalars(),
        "gauss_bonnet": op.gauss_bonnet_integrand(),
    })
}

fn cmd_curv_decompose(input: &str, json: bool) -> Result<(), Failure> {
    let op = read_operator(input)?;
    if json {
        print_json(&scalars_json(&op));
    } else {
        let sc = op.scalars();
        let gb = op.gauss_bonnet_integrand();
        println!("s = {}", sig12(sc.s));
        println!("w = {} (lowest eigenvalue of W+)", sig12(sc.w));
        println!("w_tilde = {} (lowest eigenvalue of W-)", sig12(sc.w_tilde));
        println!("frak_s = {} (s + 3w)", sig12(sc.frak_s));
        println!("|W+| = {}", sig12(sc.wp_norm));
        println!("|W-| = {}", sig12(sc.wm_norm));
        println!("|B| = {}", sig12(sc.b_norm));
        println!("gauss_bonnet_integrand = {}", sig12(gb.gb));
        println!("|ric|^2 = {}", sig12(gb.ricci_sq));
        println!("|ric0|^2 = {}", sig12(gb.r0_sq));
    }
    Ok(())
}

fn parse_plane(text: &str, orthonormalize: bool) -> Result<TwoPlane, Failure> {
    let vals: Vec<f64> = text
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage("--plane needs 8 comma-separated numbers"))?;
    if vals.len() != 8 {
        return Err(usage(format!("--plane needs exactly 8 components, got {}", vals.len())));
    }
    let u = Vector4::new(vals[0], vals[1], vals[2], vals[3]);
    let v = Vector4::new(vals[4], vals[5], vals[6], vals[7]);
    if orthonormalize {
        TwoPlane::from_span(u, v).map_err(domain)
    } else {
        TwoPlane::new(u, v).map_err(domain)
    }
}

fn cmd_curv_sectional(
    input: &str,
    plane: &str,
    orthonormalize: bool,
    json: bool,
) -> Result<(), Failure> {
    let op = read_operator(input)?;
    let plane = parse_plane(plane, orthonormalize)?;
    let k = sectional(&op, &plane);
    if json {
        print_json(&json!({"sectional": k}));
    } else {
        println!("K = {}", sig12(k));
    }
    Ok(())
}

fn cmd_curv_bottom(input: &str, samples: u32, seed: u64, json: bool) -> Result<(), Failure> {
    let op = read_operator(input)?;
    let bottom = bottom_sectional(&op, samples, seed);
    if json {
        print_json(&serde_json::to_value(bottom).expect("serializable"));
    } else {
        println!("estimate = {}", sig12(bottom.estimate));
        println!("witness_value = {}", sig12(bottom.witness_value));
        println!("bound_crafty = {} (s/12 + w/2 + w~/2)", sig12(bottom.bound_crafty));
        println!("bound_wgl = {} (s/12 + w/2)", sig12(bottom.bound_wgl));
    }
    Ok(())
}

fn cmd_curv_model(name: &str, scale: f64, r1: f64, r2: f64) -> Result<(), Failure> {
    if scale <= 0.0 || r1 <= 0.0 || r2 <= 0.0 {
        return Err(usage("model scales and radii must be positive"));
    }
    let space = match name.to_ascii_lowercase().as_str() {
        "s4" => ModelSpace::S4,
        "s2xs2" => ModelSpace::S2xS2 { r1, r2 },
        "cp2" => ModelSpace::CP2,
        "ch2" => ModelSpace::CH2,
        other => {
            return Err(usage(format!(
                "unknown model {other:?}; expected S4, S2xS2, CP2, or CH2"
            )))
        }
    };
    let op = model(space, scale);
    if let Some(volume) = model_volume(space, scale) {
        eprintln!("volume = {}", sig12(volume));
    }
    println!(
        "{}",
        serde_json::to_string(&CurvOpJson::from_operator(&op)).expect("operator serializes")
    );
    Ok(())
}

fn cmd_curv_check(input: &str, json: bool) -> Result<(), Failure> {
    let op = read_operator(input)?;
    let report = op.check();
    if json {
        print_json(&serde_json::to_value(&report).expect("serializable"));
    } else {
        for item in &report.items {
            let status = if item.passed { "ok  " } else { "FAIL" };
            println!("{status} {} ({})", item.name, item.detail);
        }
    }
    if report.all_passed() {
        if !json {
            println!("all pointwise invariants pass");
        }
        Ok(())
    } else {
        Err(domain("pointwise invariant check failed"))
    }
}

fn cmd_geo_ratio(spec: &SpecArgs, json: bool) -> Result<(), Failure> {
    let m = spec.manifold()?;
    let r = ratio(&m).map_err(domain)?;
    if json {
        print_json(&json!({"num": *r.numer(), "den": *r.denom()}));
    } else {
        println!("tau/chi = {r}");
    }
    Ok(())
}

fn cmd_geo_construct(q_text: &str, json: bool) -> Result<(), Failure> {
    let q = parse_rational(q_text)?;
    let built = non_einstein_for_ratio(&RatioTarget::new(q)).map_err(domain)?;
    let r = ratio(&built.manifold).map_err(domain)?;
    let verdict = classify(&built.manifold).map_err(domain)?;
    if json {
        print_json(&json!({
            "name": built.manifold.display_name(),
            "m": built.m,
            "k": built.k,
            "ratio": {"num": *r.numer(), "den": *r.denom()},
            "orientation_reversed": built.orientation_reversed,
            "verdict": format!("{:?}", verdict.verdict),
        }));
    } else {
        println!("name = {}", built.manifold.display_name());
        println!("m = {}", built.m);
        println!("k = {}", built.k);
        println!("tau/chi = {r}");
        println!("orientation_reversed = {}", built.orientation_reversed);
        println!("verdict = {verdict}");
    }
    Ok(())
}

fn cmd_geo_pair(args: &PairArgs, json: bool) -> Result<(), Failure> {
    let x = parse_minimal_selector(&args.x)?;
    let x_tilde = parse_minimal_selector(&args.xtilde)?;
    let pair = homeo_pair(&x, &x_tilde, args.k, args.allow_k_zero).map_err(domain)?;
    let i_r_1 = i_r(&pair.m1).map_err(domain)?;
    let i_r_2 = i_r(&pair.m2).map_err(domain)?;
    if json {
        print_json(&json!({
            "m1": pair.m1.display_name(),
            "m2": pair.m2.display_name(),
            "homeomorphic": pair.homeomorphic,
            "i_r_m1": i_r_1,
            "i_r_m2": i_r_2,
            "i_r_gap": pair.i_r_gap,
            "verdict_m1": format!("{:?}", pair.verdicts.0.verdict),
            "verdict_m2": format!("{:?}", pair.verdicts.1.verdict),
        }));
    } else {
        println!("m1 = {}", pair.m1.display_name());
        println!("m2 = {}", pair.m2.display_name());
        println!("homeomorphic = {}", pair.homeomorphic);
        println!("i_r(m1) = {}", show_pi2(&i_r_1));
        println!("i_r(m2) = {}", show_pi2(&i_r_2));
        println!("i_r gap = {}", show_pi2(&pair.i_r_gap));
        println!("verdict(m1) = {}", pair.verdicts.0);
        println!("verdict(m2) = {}", pair.verdicts.1);
    }
    Ok(())
}

fn cmd_geo_plot(selectors: &[String], out: &std::path::Path, json: bool) -> Result<(), Failure> {
    let manifolds: Vec<FourManifold> = selectors
        .iter()
        .map(|s| parse_selector(s))
        .collect::<Result<_, _>>()?;
    let rows = plot_rows(&manifolds).map_err(domain)?;
    let content = match out.extension().and_then(|e| e.to_str()) {
        Some("csv") => to_csv(&rows),
        Some("svg") => to_svg(&rows),
        _ => return Err(usage("--out must end in .csv or .svg")),
    };
    std::fs::write(out, content).map_err(|e| domain(format!("cannot write {}: {e}", out.display())))?;
    if json {
        print_json(&json!({
            "rows": rows,
            "out": out.display().to_string(),
        }));
    } else {
        println!("wrote {} rows to {}", rows.len(), out.display());
    }
    Ok(())
}
