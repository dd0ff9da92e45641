//! Extensions of algebras and their centrality theory relative to a
//! coefficient variety.
//!
//! An [`Extension`] is a surjective morphism `f : B → A` between algebras
//! of an ambient variety, together with the subvariety `V` that decides what
//! "central" means. The relative commutator `[K, B]_V` is computed from the
//! kernel pair of `f`: it is the part of the verbal subobject of `B ×_A B`
//! lying over zero in the first coordinate, read off in the second.

use crate::algebra::{
    fibre_product, is_subalgebra, kernel_pair, quotient_algebra, subalgebra, AlgebraRef, IdealWitness, LinearMap,
};
use crate::error::{ensure, Error, Result};
use crate::linalg::{quotient_map, Matrix, Subspace};
use crate::scalar::Scalar;
use crate::variety::{reflect, reflect_map, satisfies, verbal_subobject, Variety};

#[derive(Clone)]
pub struct Extension<S> {
    map: LinearMap<S>,
    kernel: IdealWitness<S>,
    ambient: Variety,
    coefficient: Variety,
}

impl<S: Scalar> std::fmt::Debug for Extension<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Extension")
            .field("map", &self.map)
            .field("kernel_dim", &self.kernel.dim())
            .field("ambient", &self.ambient.name())
            .field("coefficient", &self.coefficient.name())
            .finish()
    }
}

impl<S: Scalar> Extension<S> {
    /// Certifies `map` as a surjective morphism between members of `ambient`.
    pub fn new(map: LinearMap<S>, ambient: Variety, coefficient: Variety) -> Result<Self> {
        let map = map.certify()?;
        if !map.is_surjective() {
            return Err(Error::NotSurjective {
                rank: map.rank(),
                codomain: map.codomain().dim(),
            });
        }
        for obj in [map.domain(), map.codomain()] {
            if !satisfies(obj, &ambient)? {
                return Err(Error::LawViolation(ambient.name().to_string()));
            }
        }
        coefficient.check_field::<S>()?;
        // The coefficient variety must sit inside the ambient one.
        let (reflected, _) = reflect(map.domain(), &coefficient)?;
        if !satisfies(&reflected, &ambient)? {
            return Err(Error::VarietyMismatch(format!(
                "{} is not contained in {}",
                coefficient.name(),
                ambient.name()
            )));
        }
        let kernel = IdealWitness::certify(map.domain(), map.kernel())?;
        Ok(Extension {
            map,
            kernel,
            ambient,
            coefficient,
        })
    }

    pub fn identity(a: AlgebraRef<S>, ambient: Variety, coefficient: Variety) -> Result<Self> {
        Self::new(LinearMap::identity(a), ambient, coefficient)
    }

    pub fn map(&self) -> &LinearMap<S> {
        &self.map
    }

    pub fn domain(&self) -> &AlgebraRef<S> {
        self.map.domain()
    }

    pub fn codomain(&self) -> &AlgebraRef<S> {
        self.map.codomain()
    }

    pub fn kernel(&self) -> &IdealWitness<S> {
        &self.kernel
    }

    pub fn ambient(&self) -> &Variety {
        &self.ambient
    }

    pub fn coefficient(&self) -> &Variety {
        &self.coefficient
    }

    /// The same morphism viewed with another coefficient variety.
    pub fn with_coefficient(&self, coefficient: Variety) -> Result<Self> {
        Self::new(self.map.clone(), self.ambient.clone(), coefficient)
    }

    fn sibling(&self, map: LinearMap<S>) -> Result<Self> {
        Self::new(map, self.ambient.clone(), self.coefficient.clone())
    }
}

/// `[K, B]_V`, as a subspace of the domain.
pub fn relative_commutator<S: Scalar>(e: &Extension<S>) -> Result<Subspace<S>> {
    let kp = kernel_pair(e.map())?;
    let verbal = verbal_subobject(&kp.algebra, e.coefficient())?;
    let over_zero = kp.p1.kernel();
    let w = verbal.subspace.intersect(&over_zero)?;
    let commutator = w.map(kp.p2.matrix())?;
    ensure(commutator.is_subspace_of(&e.kernel().subspace), || {
        "relative commutator lies in the kernel".into()
    })?;
    ensure(crate::algebra::is_ideal(e.domain(), &commutator), || {
        "relative commutator is an ideal of the domain".into()
    })?;
    Ok(commutator)
}

pub fn is_central<S: Scalar>(e: &Extension<S>) -> Result<bool> {
    Ok(relative_commutator(e)?.is_zero())
}

/// Matrix of `b ↦ (f(b), η_B(b))` into `A × I(B)`, together with the
/// subspace of `A × I(B)` occupied by the fibre product `A ×_{I(A)} I(B)`.
fn comparison_with_fibre_product<S: Scalar>(e: &Extension<S>) -> Result<(Matrix<S>, Subspace<S>, usize)> {
    let v = e.coefficient();
    let (_, eta_b) = reflect(e.domain(), v)?;
    let (_, eta_a) = reflect(e.codomain(), v)?;
    let i_f = reflect_map(e.map(), v)?;
    let fp = fibre_product(&eta_a, &i_f)?;
    let fibre = Subspace::row_space(&fp.p1.matrix().hstack(fp.p2.matrix())?);
    let comparison = e.map().matrix().hstack(eta_b.matrix())?;
    Ok((comparison, fibre, fp.algebra.dim()))
}

/// Whether the square formed by `f` and the units of the reflector is a pullback.
pub fn is_trivial<S: Scalar>(e: &Extension<S>) -> Result<bool> {
    let (comparison, fibre, fibre_dim) = comparison_with_fibre_product(e)?;
    ensure(comparison.image().is_subspace_of(&fibre), || {
        "comparison map lands in the fibre product".into()
    })?;
    Ok(comparison.rank() == e.domain().dim() && fibre_dim == e.domain().dim())
}

/// Whether the first kernel-pair projection is a trivial extension.
pub fn is_normal<S: Scalar>(e: &Extension<S>) -> Result<bool> {
    let kp = kernel_pair(e.map())?;
    is_trivial(&e.sibling(kp.p1)?)
}

/// Quotient of the domain by `[K, B]_V` and the induced central extension.
pub fn centralise<S: Scalar>(e: &Extension<S>) -> Result<(Extension<S>, LinearMap<S>)> {
    let commutator = relative_commutator(e)?;
    let ideal = IdealWitness::certify(e.domain(), commutator)?;
    let (quotient, quot) = quotient_algebra(e.domain(), &ideal)?;
    let (_, section) = quotient_map(e.domain().dim(), &ideal.subspace)?;
    let induced = LinearMap::morphism(quotient, e.codomain().clone(), section.mul(e.map().matrix())?)?;
    let central = e.sibling(induced)?;
    ensure(is_central(&central)?, || "centralisation is central".into())?;
    ensure(quot.then(central.map())?.matrix() == e.map().matrix(), || {
        "centralisation factors the original extension".into()
    })?;
    Ok((central, quot))
}

pub struct Pullback<S> {
    pub extension: Extension<S>,
    /// The projection from the pullback onto the domain of the original extension.
    pub projection: LinearMap<S>,
}

/// Pulls `e : B → A` back along `g : D → A`.
pub fn pullback_extension<S: Scalar>(e: &Extension<S>, g: &LinearMap<S>) -> Result<Pullback<S>> {
    let fp = fibre_product(g, e.map())?;
    let extension = e.sibling(fp.p1)?;
    if is_central(e)? {
        ensure(is_central(&extension)?, || {
            "pullback of a central extension is central".into()
        })?;
    }
    Ok(Pullback {
        extension,
        projection: fp.p2,
    })
}

/// `outer ∘ inner` for `inner : C → B` and `outer : B → A`.
pub fn compose<S: Scalar>(outer: &Extension<S>, inner: &Extension<S>) -> Result<Extension<S>> {
    if outer.ambient() != inner.ambient() || outer.coefficient() != inner.coefficient() {
        return Err(Error::VarietyMismatch(
            "composed extensions must share their varieties".into(),
        ));
    }
    let map = inner.map().then(outer.map())?;
    outer.sibling(map)
}

/// Restriction of `e` to a subalgebra of its domain that still covers the codomain.
pub fn sub_extension<S: Scalar>(e: &Extension<S>, b_sub: &Subspace<S>) -> Result<Extension<S>> {
    if !is_subalgebra(e.domain(), b_sub) {
        return Err(Error::NotSubalgebra);
    }
    let (_, incl) = subalgebra(e.domain(), b_sub)?;
    let sub = e.sibling(incl.then(e.map())?)?;
    if is_central(e)? {
        ensure(is_central(&sub)?, || {
            "sub-extension of a central extension is central".into()
        })?;
    }
    Ok(sub)
}

/// Perfect means the reflection vanishes: `[A, A]_V = A`.
pub fn is_perfect<S: Scalar>(a: &crate::algebra::Algebra<S>, v: &Variety) -> Result<bool> {
    Ok(verbal_subobject(a, v)?.subspace.is_whole())
}

/// Restriction of a central extension of a perfect object to `[B, B]_V`.
pub fn perfect_subobject<S: Scalar>(e: &Extension<S>) -> Result<Extension<S>> {
    if !is_central(e)? {
        return Err(Error::NotCentral("perfect subobject needs a central extension".into()));
    }
    if !is_perfect(e.codomain(), e.coefficient())? {
        return Err(Error::NotPerfect("codomain is not perfect".into()));
    }
    let verbal = verbal_subobject(e.domain(), e.coefficient())?;
    let sub = sub_extension(e, &verbal.subspace)?;
    ensure(is_perfect(sub.domain(), e.coefficient())?, || {
        "perfect subobject has a perfect domain".into()
    })?;
    Ok(sub)
}

/// For a split epimorphism with section `s`, triviality and centrality agree.
pub fn split_trivial_check<S: Scalar>(e: &Extension<S>, s: &LinearMap<S>) -> Result<bool> {
    let s = s.clone().certify()?;
    let round_trip = s.then(e.map()).map_err(|_| Error::NotSection)?;
    if round_trip.matrix() != &Matrix::identity(e.codomain().dim()) {
        return Err(Error::NotSection);
    }
    let trivial = is_trivial(e)?;
    let central = is_central(e)?;
    ensure(trivial == central, || {
        format!("split epimorphism: trivial = {trivial} but central = {central}")
    })?;
    Ok(trivial)
}

/// The unique `b : P → B` with `f∘b = a_map`, for a trivial `f` and perfect `P`.
pub fn lift_along_trivial<S: Scalar>(a_map: &LinearMap<S>, e: &Extension<S>) -> Result<LinearMap<S>> {
    let a_map = a_map.clone().certify()?;
    if !a_map.codomain().same_structure(e.codomain()) {
        return Err(Error::CodomainMismatch);
    }
    if !is_trivial(e)? {
        return Err(Error::NotTrivial);
    }
    if !is_perfect(a_map.domain(), e.coefficient())? {
        return Err(Error::NotPerfect("domain of the map to lift is not perfect".into()));
    }
    let (comparison, _, _) = comparison_with_fibre_product(e)?;
    let ib_dim = comparison.cols() - e.codomain().dim();
    let p = a_map.domain();
    let mut rows = Vec::with_capacity(p.dim());
    for i in 0..p.dim() {
        // (a(p), 0) lies in the fibre product because I(P) = 0.
        let mut target = a_map.matrix().row(i).to_vec();
        target.extend(std::iter::repeat_n(S::zero(), ib_dim));
        let x = comparison
            .solve_left(&target)
            .ok_or_else(|| Error::Assertion("lift exists through the pullback".into()))?;
        rows.push(x);
    }
    let m = Matrix::from_rows(e.domain().dim(), rows)?;
    let lift = LinearMap::morphism(p.clone(), e.domain().clone(), m)?;
    ensure(lift.then(e.map())?.matrix() == a_map.matrix(), || {
        "lift factors the map".into()
    })?;
    Ok(lift)
}

/// Checks that `phi : B1 → B2` is an isomorphism of extensions over the common codomain.
pub fn is_isomorphism_of_extensions<S: Scalar>(e1: &Extension<S>, e2: &Extension<S>, phi: &LinearMap<S>) -> bool {
    let Ok(phi) = phi.clone().certify() else {
        return false;
    };
    if !phi.domain().same_structure(e1.domain()) || !phi.codomain().same_structure(e2.domain()) {
        return false;
    }
    if !e1.codomain().same_structure(e2.codomain()) {
        return false;
    }
    phi.is_isomorphism() && phi.matrix().mul(e2.map().matrix()).ok().as_ref() == Some(e1.map().matrix())
}
