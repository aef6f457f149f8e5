//! Intersection forms of simply connected 4-manifolds and the homeomorphism
//! oracle built on them.
//!
//! Indefinite unimodular symmetric bilinear forms over ℤ are classified by
//! rank, signature, and parity: odd forms diagonalize as p⟨1⟩ ⊕ q⟨−1⟩ and even
//! forms split as a·E₈ ⊕ b·H (Hasse–Minkowski plus the Eichler/Wall theory).
//! Freedman's classification then says two simply connected smooth
//! 4-manifolds are homeomorphic iff their intersection forms are isomorphic.
//!
//! The definite regime (rank = |signature| ≠ 0) is deliberately unsupported:
//! by Donaldson's theorem the only smoothly realizable definite forms are
//! diagonal and the three-invariant comparison would be misleading there.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::surface::{FourManifold, SpinStatus, SurfaceError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("{name} is not simply connected; intersection-form classification needs pi_1 = 0")]
    NotSimplyConnected { name: String },
    #[error("definite forms (rank = |signature| = {rank} != 0) are not supported")]
    DefiniteFormUnsupported { rank: u64 },
    #[error("not a valid unimodular form class: {reason}")]
    FormInvariantViolation { reason: String },
    #[error("parity of {name} is undetermined (declared spin status is Unknown)")]
    ParityUndetermined { name: String },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Isomorphism class of a unimodular symmetric bilinear form over ℤ,
/// recorded by the complete set of invariants for the indefinite case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectionFormClass {
    rank: u64,
    signature: i64,
    parity: Parity,
}

impl IntersectionFormClass {
    pub fn new(rank: u64, signature: i64, parity: Parity) -> Result<Self, LatticeError> {
        if signature.unsigned_abs() > rank {
            return Err(LatticeError::FormInvariantViolation {
                reason: format!("|signature| = {} exceeds rank = {rank}", signature.abs()),
            });
        }
        if (rank as i64 - signature) % 2 != 0 {
            return Err(LatticeError::FormInvariantViolation {
                reason: format!("signature {signature} and rank {rank} have different parity"),
            });
        }
        if parity == Parity::Even && signature.rem_euclid(8) != 0 {
            return Err(LatticeError::FormInvariantViolation {
                reason: format!("even forms have signature divisible by 8, got {signature}"),
            });
        }
        Ok(IntersectionFormClass { rank, signature, parity })
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn signature(&self) -> i64 {
        self.signature
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    fn is_definite(&self) -> bool {
        self.rank != 0 && self.signature.unsigned_abs() == self.rank
    }
}

/// Intersection form class of a simply connected `M = X # k·CP̄²`.
///
/// Requires ℓ = 0 and a simply connected minimal model; the parity comes from
/// the spin type (even iff spin), so an `Unknown` spin status is an error
/// rather than a guess.
pub fn form_of(m: &FourManifold) -> Result<IntersectionFormClass, LatticeError> {
    if !m.is_simply_connected() {
        return Err(LatticeError::NotSimplyConnected { name: m.display_name() });
    }
    let parity = match m.spin_status()? {
        SpinStatus::Yes => Parity::Even,
        SpinStatus::No => Parity::Odd,
        SpinStatus::Unknown => {
            return Err(LatticeError::ParityUndetermined { name: m.display_name() })
        }
    };
    let rank = (m.chi() - 2) as u64;
    IntersectionFormClass::new(rank, m.tau()?, parity)
}

/// Isomorphism of indefinite unimodular forms: rank, signature, and parity
/// decide it. Non-zero definite forms are rejected; two rank-0 forms are
/// trivially isomorphic.
pub fn equivalent(
    a: &IntersectionFormClass,
    b: &IntersectionFormClass,
) -> Result<bool, LatticeError> {
    for f in [a, b] {
        if f.is_definite() {
            return Err(LatticeError::DefiniteFormUnsupported { rank: f.rank });
        }
    }
    Ok(a == b)
}

/// Freedman's criterion: simply connected smooth 4-manifolds are homeomorphic
/// iff their intersection forms are isomorphic.
pub fn homeomorphic(m1: &FourManifold, m2: &FourManifold) -> Result<bool, LatticeError> {
    let f1 = form_of(m1)?;
    let f2 = form_of(m2)?;
    equivalent(&f1, &f2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{horikawa, hypersurface};
    use proptest::prelude::*;

    #[test]
    fn k3_form_is_even_of_rank_22() {
        let m = FourManifold::minimal(hypersurface(4).unwrap());
        let f = form_of(&m).unwrap();
        assert_eq!(f.rank(), 22);
        assert_eq!(f.signature(), -16);
        assert_eq!(f.parity(), Parity::Even);
    }

    #[test]
    fn blow_up_makes_forms_odd_and_shifts_invariants() {
        let m = FourManifold::minimal(hypersurface(4).unwrap());
        let f = form_of(&m).unwrap();
        let g = form_of(&m.blow_up(1)).unwrap();
        assert_eq!(g.rank(), f.rank() + 1);
        assert_eq!(g.signature(), f.signature() - 1);
        assert_eq!(g.parity(), Parity::Odd);
    }

    #[test]
    fn horikawa_3_6_matches_blown_up_sextic() {
        let h = FourManifold::minimal(horikawa(3, 6).unwrap());
        let s = FourManifold::minimal(hypersurface(6).unwrap()).blow_up(8);
        assert_eq!(homeomorphic(&h, &s), Ok(true));
        // both are (21, 93) odd forms
        let f = form_of(&h).unwrap();
        assert_eq!((f.rank(), f.signature(), f.parity()), (114, -72, Parity::Odd));
    }

    #[test]
    fn surgery_summands_block_classification() {
        let m = FourManifold::new(hypersurface(4).unwrap(), 0, 1);
        assert!(matches!(
            form_of(&m),
            Err(LatticeError::NotSimplyConnected { .. })
        ));
    }

    #[test]
    fn unknown_spin_is_an_error_not_a_guess() {
        // horikawa(4,4) has tau = -64, so Rochlin says nothing and the flag is Unknown
        let m = FourManifold::minimal(horikawa(4, 4).unwrap());
        assert!(matches!(form_of(&m), Err(LatticeError::ParityUndetermined { .. })));
    }

    #[test]
    fn definite_forms_are_refused() {
        let pos = IntersectionFormClass::new(8, 8, Parity::Even).unwrap();
        let other = IntersectionFormClass::new(10, 8, Parity::Even).unwrap();
        assert!(matches!(
            equivalent(&pos, &other),
            Err(LatticeError::DefiniteFormUnsupported { rank: 8 })
        ));
        // the vacuous rank-0 form is fine (S^4 vs S^4)
        let zero = IntersectionFormClass::new(0, 0, Parity::Even).unwrap();
        assert_eq!(equivalent(&zero, &zero), Ok(true));
    }

    #[test]
    fn class_invariants_are_enforced() {
        assert!(IntersectionFormClass::new(3, 5, Parity::Odd).is_err());
        assert!(IntersectionFormClass::new(4, 3, Parity::Odd).is_err());
        assert!(IntersectionFormClass::new(10, 4, Parity::Even).is_err());
        assert!(IntersectionFormClass::new(10, 4, Parity::Odd).is_ok());
    }

    proptest! {
        // rank/signature/parity comparison is an equivalence relation on the
        // indefinite classes
        #[test]
        fn equivalence_relation(
            seeds in proptest::collection::vec((0u64..40, 0i64..40, any::<bool>(), any::<bool>()), 3)
        ) {
            let mut forms = Vec::new();
            for (half_rank, sig_raw, sig_neg, odd) in seeds {
                // build a guaranteed-valid indefinite class
                let parity = if odd { Parity::Odd } else { Parity::Even };
                let signature = match parity {
                    Parity::Even => (sig_raw - sig_raw % 8) * if sig_neg { -1 } else { 1 },
                    Parity::Odd => sig_raw * if sig_neg { -1 } else { 1 },
                };
                let mut rank = signature.unsigned_abs() + 2 * half_rank + 2;
                if (rank as i64 - signature) % 2 != 0 {
                    rank += 1;
                }
                forms.push(IntersectionFormClass::new(rank, signature, parity).unwrap());
            }
            let (a, b, c) = (&forms[0], &forms[1], &forms[2]);
            prop_assert!(equivalent(a, a).unwrap());
            prop_assert_eq!(equivalent(a, b).unwrap(), equivalent(b, a).unwrap());
            if equivalent(a, b).unwrap() && equivalent(b, c).unwrap() {
                prop_assert!(equivalent(a, c).unwrap());
            }
        }
    }
}
