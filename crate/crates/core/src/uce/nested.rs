//! Comparison of universal central extensions for the nested varieties
//! `Lie ⊆ Leib`.

use super::{build_uce, lift_universal};
use crate::algebra::AlgebraRef;
use crate::error::{ensure, Error, Result};
use crate::extension::{is_isomorphism_of_extensions, is_perfect, Extension};
use crate::scalar::Scalar;
use crate::variety::{reflect_map, satisfies, verbal_subobject, Variety};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedReport {
    pub dim_b: usize,
    pub dim_u_leib: usize,
    pub dim_u_lie: usize,
    pub h2_leib: usize,
    pub h2_lie: usize,
    /// `dim [U, U]_Lie` for the Leibniz universal central extension `U`.
    pub lie_verbal_of_u_leib: usize,
    /// `dim H2` of the Lie universal central extension, taken in `Leib`.
    pub h2_of_u_lie_in_leib: usize,
    pub reflection_iso: bool,
    pub exact_sequence: bool,
    pub dimension_identity: bool,
    pub refinement_identity: bool,
}

impl NestedReport {
    pub fn all_hold(&self) -> bool {
        self.reflection_iso && self.exact_sequence && self.dimension_identity && self.refinement_identity
    }
}

/// Compares the Leibniz and Lie universal central extensions of a perfect Lie algebra.
pub fn nested_compare<S: Scalar>(b: &AlgebraRef<S>) -> Result<NestedReport> {
    let (leib, lie, vect) = (Variety::leib(), Variety::lie(), Variety::vect());
    if !satisfies(b, &lie)? {
        return Err(Error::LawViolation(lie.name().to_string()));
    }
    if !is_perfect(b, &vect)? {
        return Err(Error::NotPerfect("nested comparison needs [B,B] = B".into()));
    }
    let r_leib = build_uce(b, &leib)?;
    let r_lie = build_uce(b, &lie)?;

    // I(u_Leib) : I(U_Leib) → I(B) = B.
    let reflected = reflect_map(r_leib.u.map(), &lie)?;
    let reflected = Extension::new(reflected, lie.clone(), vect.clone())?;
    let phi = lift_universal(&r_lie, &reflected)?;
    let reflection_iso = is_isomorphism_of_extensions(&r_lie.u, &reflected, &phi);

    // 0 → [U,U]_Lie → H2(B, Leib) → H2(B, Lie) → 0, with the middle map
    // induced by the reflection unit of U_Leib.
    let u_leib = r_leib.domain();
    let verbal = verbal_subobject(u_leib, &lie)?.subspace;
    let inside = verbal.is_subspace_of(&r_leib.h2);
    let (_, eta) = crate::variety::reflect(u_leib, &lie)?;
    let image = r_leib.h2.map(eta.matrix())?;
    let exact_sequence = inside && image == reflected.kernel().subspace;

    let lie_verbal_of_u_leib = verbal.dim();
    let dimension_identity = r_leib.h2.dim() == lie_verbal_of_u_leib + r_lie.h2.dim();

    let r_refined = build_uce(r_lie.domain(), &leib)?;
    let h2_of_u_lie_in_leib = r_refined.h2.dim();
    let refinement_identity = h2_of_u_lie_in_leib == lie_verbal_of_u_leib && r_refined.domain().dim() == u_leib.dim();

    let report = NestedReport {
        dim_b: b.dim(),
        dim_u_leib: u_leib.dim(),
        dim_u_lie: r_lie.domain().dim(),
        h2_leib: r_leib.h2.dim(),
        h2_lie: r_lie.h2.dim(),
        lie_verbal_of_u_leib,
        h2_of_u_lie_in_leib,
        reflection_iso,
        exact_sequence,
        dimension_identity,
        refinement_identity,
    };
    ensure(report.all_hold(), || format!("nested comparison failed: {report:?}"))?;
    Ok(report)
}
