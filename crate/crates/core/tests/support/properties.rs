//! Seeded property checks shared by the property-test suite and the
//! acceptance runner. Each check draws one random instance from a seed and
//! returns a description of the first discrepancy, if any.

use centrex::algebra::{direct_product, ideal_generated, is_ideal, quotient_algebra, subalgebra_generated, LinearMap};
use centrex::extension::{
    centralise, is_central, is_normal, is_trivial, pullback_extension, relative_commutator, sub_extension, Extension,
};
use centrex::linalg::{unit_vector, Subspace};
use centrex::random::{
    random_central_extension, random_extension, random_split_epi, random_subalgebra_inclusion, random_subspace,
};
use centrex::variety::{reflect_map, Variety};
use centrex::{Algebra, AlgebraRef, Fp, Matrix, Rational, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_DIM: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Q,
    F5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    CentralIffNormal,
    TrivialImpliesCentral,
    SplitTrivialIffCentral,
    PullbackStability,
    SubExtensionCentral,
    CentraliseIdempotent,
    VectCommutatorOracle,
    SubspaceLatticeDimensions,
    ReflectorFunctoriality,
}

pub const PROPERTIES: [Property; 9] = [
    Property::CentralIffNormal,
    Property::TrivialImpliesCentral,
    Property::SplitTrivialIffCentral,
    Property::PullbackStability,
    Property::SubExtensionCentral,
    Property::CentraliseIdempotent,
    Property::VectCommutatorOracle,
    Property::SubspaceLatticeDimensions,
    Property::ReflectorFunctoriality,
];

impl Property {
    pub fn label(self) -> &'static str {
        match self {
            Property::CentralIffNormal => "central <=> normal",
            Property::TrivialImpliesCentral => "trivial => central",
            Property::SplitTrivialIffCentral => "split epi: trivial <=> central",
            Property::PullbackStability => "pullback of central is central",
            Property::SubExtensionCentral => "sub-extension of central is central",
            Property::CentraliseIdempotent => "centralisation is central and idempotent",
            Property::VectCommutatorOracle => "relative commutator matches the Vect formula",
            Property::SubspaceLatticeDimensions => "dim(U+V) + dim(U^V) = dim U + dim V",
            Property::ReflectorFunctoriality => "reflector is a functor",
        }
    }
}

type Check = Result<(), String>;

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn lib<T>(r: centrex::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("library error: {e}"))
}

pub fn check(property: Property, field: Field, seed: u64) -> Check {
    match field {
        Field::Q => check_in::<Rational>(property, seed),
        Field::F5 => check_in::<Fp<5>>(property, seed),
    }
}

/// An ambient variety with a coefficient subvariety containing the abelian algebras.
fn setting(rng: &mut ChaCha8Rng) -> (Variety, Variety) {
    match rng.gen_range(0..4) {
        0 => (Variety::naalg(), Variety::vect()),
        1 => (Variety::lie(), Variety::vect()),
        2 => (Variety::leib(), Variety::vect()),
        _ => (Variety::leib(), Variety::lie()),
    }
}

fn any_extension<S: Scalar>(
    rng: &mut ChaCha8Rng,
    ambient: &Variety,
    coefficient: &Variety,
) -> Result<Extension<S>, String> {
    lib(match rng.gen_range(0..4) {
        0 => random_extension(rng, ambient, coefficient, MAX_DIM),
        1 => random_split_epi(rng, ambient, coefficient, MAX_DIM).map(|s| s.extension),
        _ => random_central_extension(rng, ambient, coefficient, MAX_DIM),
    })
}

fn check_in<S: Scalar>(property: Property, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (ambient, coefficient) = setting(&mut rng);
    match property {
        Property::CentralIffNormal => {
            let e = any_extension::<S>(&mut rng, &ambient, &coefficient)?;
            let (c, n) = (lib(is_central(&e))?, lib(is_normal(&e))?);
            if c != n {
                return fail(format!("central = {c}, normal = {n} for {e:?}"));
            }
        }
        Property::TrivialImpliesCentral => {
            let e = any_extension::<S>(&mut rng, &ambient, &coefficient)?;
            if lib(is_trivial(&e))? && !lib(is_central(&e))? {
                return fail(format!("trivial but not central: {e:?}"));
            }
        }
        Property::SplitTrivialIffCentral => {
            let split = lib(random_split_epi::<S, _>(&mut rng, &ambient, &coefficient, MAX_DIM))?;
            let e = &split.extension;
            let (t, c) = (lib(is_trivial(e))?, lib(is_central(e))?);
            if t != c {
                return fail(format!("split epi: trivial = {t}, central = {c}"));
            }
        }
        Property::PullbackStability => {
            let e = lib(random_central_extension::<S, _>(
                &mut rng,
                &ambient,
                &coefficient,
                MAX_DIM,
            ))?;
            let g = if rng.gen_bool(0.5) {
                lib(random_subalgebra_inclusion(&mut rng, e.codomain()))?
            } else {
                // A surjection onto the codomain from a larger algebra.
                let other = lib(random_extension::<S, _>(&mut rng, &ambient, &coefficient, MAX_DIM))?;
                direct_product(e.codomain(), other.domain()).p1
            };
            let pb = lib(pullback_extension(&e, &g))?;
            if !lib(is_central(&pb.extension))? {
                return fail("pullback of a central extension is not central");
            }
        }
        Property::SubExtensionCentral => {
            let e = lib(random_central_extension::<S, _>(
                &mut rng,
                &ambient,
                &coefficient,
                MAX_DIM,
            ))?;
            let b = e.domain();
            // A section image covers the codomain; add random vectors and close up.
            let n = e.codomain().dim();
            let lifts = (0..n).map(|i| e.map().matrix().solve_left(&unit_vector(n, i)).expect("surjective"));
            let cover = Subspace::from_vectors(b.dim(), lifts);
            let extra = random_subspace(&mut rng, &Subspace::whole(b.dim()));
            let sub = subalgebra_generated(b, &lib(cover.sum(&extra))?);
            let restricted = lib(sub_extension(&e, &sub))?;
            if !lib(is_central(&restricted))? {
                return fail("sub-extension of a central extension is not central");
            }
        }
        Property::CentraliseIdempotent => {
            let e = any_extension::<S>(&mut rng, &ambient, &coefficient)?;
            let (c, quot) = lib(centralise(&e))?;
            if !lib(is_central(&c))? {
                return fail("centralisation is not central");
            }
            let (again, _) = lib(centralise(&c))?;
            if again.domain().dim() != c.domain().dim() {
                return fail("centralising twice changes the domain");
            }
            if quot.then(c.map()).map_err(|e| e.to_string())?.matrix() != e.map().matrix() {
                return fail("centralisation does not factor the extension");
            }
        }
        Property::VectCommutatorOracle => {
            let vect = Variety::vect();
            let e = any_extension::<S>(&mut rng, &ambient, &vect)?;
            let computed = lib(relative_commutator(&e))?;
            let expected = vect_commutator_oracle(e.domain(), &e.kernel().subspace);
            if computed != expected {
                return fail(format!(
                    "commutator dim {} but direct formula gives {}",
                    computed.dim(),
                    expected.dim()
                ));
            }
        }
        Property::SubspaceLatticeDimensions => {
            let n = rng.gen_range(0..=MAX_DIM);
            let whole = Subspace::<S>::whole(n);
            let u = random_subspace(&mut rng, &whole);
            let v = random_subspace(&mut rng, &whole);
            let (sum, meet) = (lib(u.sum(&v))?, lib(u.intersect(&v))?);
            if sum.dim() + meet.dim() != u.dim() + v.dim() {
                return fail(format!(
                    "dims: U {} V {} U+V {} U^V {}",
                    u.dim(),
                    v.dim(),
                    sum.dim(),
                    meet.dim()
                ));
            }
            if !meet.is_subspace_of(&u)
                || !meet.is_subspace_of(&v)
                || !u.is_subspace_of(&sum)
                || !v.is_subspace_of(&sum)
            {
                return fail("lattice inclusions fail");
            }
        }
        Property::ReflectorFunctoriality => {
            let f = any_extension::<S>(&mut rng, &ambient, &coefficient)?;
            let g = lib(random_extension_of(&mut rng, f.codomain(), &ambient, &coefficient))?;
            let gf = lib(f.map().then(g.map()))?;
            let i_gf = lib(reflect_map(&gf, &coefficient))?;
            let i_f = lib(reflect_map(f.map(), &coefficient))?;
            let i_g = lib(reflect_map(g.map(), &coefficient))?;
            let composed = lib(i_f.then(&i_g))?;
            if composed.matrix() != i_gf.matrix() {
                return fail("I(g.f) differs from I(g).I(f)");
            }
            let id = lib(reflect_map(&LinearMap::identity(f.domain().clone()), &coefficient))?;
            if id.matrix() != &Matrix::identity(id.domain().dim()) {
                return fail("I(id) is not the identity");
            }
        }
    }
    Ok(())
}

/// `A → A/J` for a random ideal `J` of `A`.
fn random_extension_of<S: Scalar>(
    rng: &mut ChaCha8Rng,
    a: &AlgebraRef<S>,
    ambient: &Variety,
    coefficient: &Variety,
) -> centrex::Result<Extension<S>> {
    let gens = random_subspace(rng, &Subspace::whole(a.dim()));
    let ideal = ideal_generated(a, &gens);
    let (_, q) = quotient_algebra(a, &ideal)?;
    Extension::new(q, ambient.clone(), coefficient.clone())
}

/// Independent oracle: the smallest ideal containing every `[k, b]` and
/// `[b, k]` for `k` in the kernel, computed by closing under brackets with
/// basis vectors until the span stops growing.
pub fn vect_commutator_oracle<S: Scalar>(b: &Algebra<S>, kernel: &Subspace<S>) -> Subspace<S> {
    let n = b.dim();
    let basis: Vec<Vec<S>> = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut vectors: Vec<Vec<S>> = Vec::new();
    for k in kernel.basis_vectors() {
        for e in &basis {
            vectors.push(b.bracket(&k, e));
            vectors.push(b.bracket(e, &k));
        }
    }
    let mut span = Subspace::from_vectors(n, vectors);
    loop {
        let mut more: Vec<Vec<S>> = span.basis_vectors().collect();
        for v in span.basis_vectors() {
            for e in &basis {
                more.push(b.bracket(&v, e));
                more.push(b.bracket(e, &v));
            }
        }
        let next = Subspace::from_vectors(n, more);
        if next.dim() == span.dim() {
            debug_assert!(is_ideal(b, &next));
            return next;
        }
        span = next;
    }
}
