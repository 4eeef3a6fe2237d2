//! Deformations: `π + π′` is a structure of the same kind exactly when `π′`
//! is a Maurer-Cartan element of the dgLa with differential `[π, ·]`.

use crate::brackets::{mc_check, Differential};
use crate::cochains::{Cochain, CochainSpace};
use crate::error::{Error, Result};
use crate::structures::{validate_structure, Algebra, Witness};

#[derive(Debug, Clone)]
pub struct DeformationReport {
    /// `d_π π′ + ½[π′, π′] = 0`
    pub mc: bool,
    /// `π + π′` satisfies the defining identities
    pub direct: bool,
    pub mc_defect: Cochain,
    pub witnesses: Vec<Witness>,
}

/// Decides by both routes whether `π + π′` is again a structure and errors
/// if the routes disagree.
pub fn deformation_check(pi: &Algebra, direction: &Cochain) -> Result<DeformationReport> {
    let base = validate_structure(pi);
    if !base.valid {
        return Err(Error::InvalidStructure(
            "base structure",
            format!("{} identity fails at {} basis tuples", pi.kind(), base.failures),
        ));
    }
    let want = CochainSpace::graded(pi.kind(), 1, pi.dim());
    if *direction.space() != want {
        return Err(Error::Shape {
            what: "deformation direction (graded degree 1 on the same algebra)",
            expected: want.dim(),
            found: direction.space().dim(),
        });
    }
    let pi_c = pi.to_cochain();
    let mc = mc_check(Differential::Bracket(&pi_c), direction)?;
    let deformed = pi.add(&Algebra::from_cochain(direction)?)?;
    let direct = validate_structure(&deformed);
    if mc.is_mc != direct.valid {
        return Err(Error::RouteDisagreement(format!(
            "deformation of {}: Maurer-Cartan {}, direct {}",
            pi.kind(),
            mc.is_mc,
            direct.valid
        )));
    }
    Ok(DeformationReport {
        mc: mc.is_mc,
        direct: direct.valid,
        mc_defect: mc.defect,
        witnesses: direct.witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use crate::structures::AlgebraKind;

    #[test]
    fn zero_direction() {
        for a in samples::named_algebras() {
            let z = Cochain::zero(CochainSpace::graded(a.kind(), 1, a.dim()));
            let r = deformation_check(&a, &z).unwrap();
            assert!(r.mc && r.direct);
        }
    }

    #[test]
    fn abelian_to_aff1() {
        let r = deformation_check(&samples::abelian(AlgebraKind::Lie, 2), &samples::aff1().to_cochain()).unwrap();
        assert!(r.mc && r.direct);
    }

    #[test]
    fn dual_numbers_direction_routes_agree() {
        // π′(e2, e2) = e1 + e2
        let a = samples::dual_numbers();
        let dir = Algebra::from_int_products(AlgebraKind::Associative, 2, &[(&[1, 1], &[(0, 1), (1, 1)])]).unwrap();
        let r = deformation_check(&a, &dir.to_cochain()).unwrap();
        // oracle: e2∘e2 = e1 + e2 with e1 a unit is associative (k[x]/(x²-x-1))
        assert!(r.direct);
        assert_eq!(r.mc, r.direct);
    }

    #[test]
    fn broken_direction_has_defect_and_witnesses() {
        // sl2 + [e, f] += e breaks Jacobi
        let a = samples::sl2();
        let dir = Algebra::from_int_products(AlgebraKind::Lie, 3, &[(&[1, 2], &[(1, 1)])]).unwrap();
        let r = deformation_check(&a, &dir.to_cochain()).unwrap();
        assert!(!r.mc && !r.direct);
        assert!(!r.mc_defect.is_zero());
        assert!(!r.witnesses.is_empty());
    }

    #[test]
    fn rejects_bad_inputs() {
        let a = samples::aff1();
        let bad = samples::sl2().to_cochain();
        assert!(deformation_check(&a, &bad).is_err());
        let broken = Algebra::from_int_products(
            AlgebraKind::Lie,
            3,
            &[(&[0, 1], &[(2, 1)]), (&[1, 2], &[(0, 1)]), (&[0, 2], &[(0, 1)])],
        )
        .unwrap();
        let z = Cochain::zero(CochainSpace::graded(AlgebraKind::Lie, 1, 3));
        assert!(matches!(
            deformation_check(&broken, &z),
            Err(Error::InvalidStructure(..))
        ));
    }
}
