//! Invariants, Einstein-metric obstructions, curvature-functional infima, and
//! pointwise curvature-operator numerics for smooth compact oriented
//! 4-manifolds of the form
//!
//! ```text
//! M = X # k·CP²bar # ℓ·(S¹×S³)
//! ```
//!
//! where X is a minimal compact complex surface. Everything topological is
//! exact integer or rational arithmetic; only the pointwise curvature engine
//! works in floating point, under explicit tolerances.
//!
//! Module map:
//! - [`surface`]: minimal-surface specs, blow-ups, connected sums, and the
//!   derived invariants (χ, τ, b±, 2χ+3τ).
//! - [`catalog`]: built-in families (degree-d hypersurfaces, Horikawa
//!   double covers, large-signature Chen surfaces).
//! - [`lattice`]: intersection-form classes and homeomorphism classification
//!   of simply connected members.
//! - [`obstruct`]: Hitchin–Thorpe and Seiberg–Witten obstructions to
//!   Einstein metrics, with a one-line verdict per manifold.
//! - [`functional`]: exact π²-rational infima of curvature functionals and
//!   minimal-volume lower bounds.
//! - [`curvops`]: the 2-form curvature operator engine (block decomposition,
//!   sectional curvature, Gauss–Bonnet and Seiberg–Witten integrands, model
//!   spaces).
//! - [`geography`]: ratio sweeps, prescribed-ratio non-Einstein examples,
//!   and homeomorphic pairs with different Ricci invariants.

pub mod catalog;
pub mod curvops;
pub mod functional;
pub mod geography;
pub mod lattice;
pub mod obstruct;
pub mod surface;

pub use curvops::{CurvatureOperator, ModelSpace, TwoPlane};
pub use functional::PiSquared;
pub use obstruct::{EinsteinVerdict, Verdict};
pub use surface::{FourManifold, MinimalSurfaceSpec};
