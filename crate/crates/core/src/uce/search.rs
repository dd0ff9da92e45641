//! Randomised search for composable central extensions whose composite is
//! not central, over a perfect middle object.
//!
//! Trial `t` draws from `ChaCha8Rng` seeded with `seed` on stream `t`, so
//! any reported trial can be regenerated on its own.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{build_uce, UceResult};
use crate::algebra::{centre, direct_product, quotient_algebra, Algebra, AlgebraRef, IdealWitness, LinearMap};
use crate::error::{ensure, Error, Result};
use crate::extension::{compose, is_central, is_perfect, relative_commutator, Extension};
use crate::io::{matrix_from_strings, matrix_to_strings, AlgebraFile};
use crate::linalg::{quotient_map, Matrix};
use crate::random::{
    direct_sum_abelian, extend_labels, random_algebra, random_invertible, random_subspace, small_scalar,
};
use crate::samples;
use crate::scalar::Scalar;
use crate::variety::Variety;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub trials: usize,
    /// Upper bound on the dimension of the perfect middle object.
    pub dim_bound: usize,
    pub seed: u64,
    /// Prepend the non-associative counterexample as trial 0.
    pub inject_counterexample: bool,
}

/// A composable pair `f : B → A`, `g : C → B` of central extensions with
/// perfect `B` whose composite is not central.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub trial: usize,
    pub source: String,
    pub ambient: String,
    pub a: AlgebraFile,
    pub b: AlgebraFile,
    pub c: AlgebraFile,
    pub f: Vec<Vec<String>>,
    pub g: Vec<Vec<String>>,
    /// `dim [Ker(f∘g), C]` relative to abelian algebras.
    pub commutator_dim: usize,
}

impl Violation {
    /// Rebuilds the pair and re-checks that it violates the condition.
    pub fn replay<S: Scalar>(&self, ambient: &Variety) -> Result<bool> {
        let a = self.a.to_algebra::<S>()?.into_ref();
        let b = self.b.to_algebra::<S>()?.into_ref();
        let c = self.c.to_algebra::<S>()?.into_ref();
        let f = LinearMap::morphism(b.clone(), a.clone(), matrix_from_strings(&self.f, (b.dim(), a.dim()))?)?;
        let g = LinearMap::morphism(c.clone(), b.clone(), matrix_from_strings(&self.g, (c.dim(), b.dim()))?)?;
        Ok(examine(&f, &g, ambient)?.is_some())
    }

    /// Whether this is the built-in non-associative counterexample.
    pub fn is_known_counterexample<S: Scalar>(&self) -> bool {
        let f = samples::example_f::<S>();
        let g = samples::example_g::<S>();
        self.a == AlgebraFile::from_algebra(f.codomain(), None)
            && self.b == AlgebraFile::from_algebra(f.domain(), None)
            && self.c == AlgebraFile::from_algebra(g.domain(), None)
            && self.f == matrix_to_strings(f.matrix())
            && self.g == matrix_to_strings(g.matrix())
    }
}

/// The non-associative counterexample `C → B → A` as a violation record.
pub fn known_counterexample<S: Scalar>() -> Result<Option<Violation>> {
    let f = samples::example_f::<S>();
    let g = samples::example_g::<S>();
    Ok(examine(&f, &g, &Variety::naalg())?.map(|dim| record(0, "counterexample", &Variety::naalg(), &f, &g, dim)))
}

fn record<S: Scalar>(
    trial: usize,
    source: &str,
    ambient: &Variety,
    f: &LinearMap<S>,
    g: &LinearMap<S>,
    dim: usize,
) -> Violation {
    Violation {
        trial,
        source: source.to_string(),
        ambient: ambient.name().to_string(),
        a: AlgebraFile::from_algebra(f.codomain(), None),
        b: AlgebraFile::from_algebra(f.domain(), None),
        c: AlgebraFile::from_algebra(g.domain(), None),
        f: matrix_to_strings(f.matrix()),
        g: matrix_to_strings(g.matrix()),
        commutator_dim: dim,
    }
}

/// `Some(dim [K, C])` when `f`, `g` are central over a perfect `B` but `f∘g` is not.
fn examine<S: Scalar>(f: &LinearMap<S>, g: &LinearMap<S>, ambient: &Variety) -> Result<Option<usize>> {
    let vect = Variety::vect();
    let e_f = Extension::new(f.clone(), ambient.clone(), vect.clone())?;
    let e_g = Extension::new(g.clone(), ambient.clone(), vect.clone())?;
    ensure(is_perfect(e_f.domain(), &vect)?, || "middle object is perfect".into())?;
    ensure(is_central(&e_f)? && is_central(&e_g)?, || {
        "both factors are central".into()
    })?;
    let composite = compose(&e_f, &e_g)?;
    let commutator = relative_commutator(&composite)?;
    Ok((!commutator.is_zero()).then_some(commutator.dim()))
}

/// Runs the search and returns every violation found, in trial order.
pub fn check_uce_condition<S: Scalar>(ambient: &Variety, config: &SearchConfig) -> Result<Vec<Violation>> {
    ambient.check_field::<S>()?;
    let mut found = Vec::new();
    if config.inject_counterexample {
        if ambient.name() != "NAAlg" {
            return Err(Error::VarietyMismatch(
                "the injected counterexample lives in NAAlg".into(),
            ));
        }
        found.extend(known_counterexample::<S>()?);
    }
    let pool = if config.trials > 0 {
        perfect_pool::<S>(ambient, config.dim_bound)?
    } else {
        Vec::new()
    };
    for trial in 1..=config.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(trial as u64);
        let (f, g) = random_pair::<S>(&mut rng, ambient, &pool, config.dim_bound)?;
        if let Some(dim) = examine(&f, &g, ambient)? {
            found.push(record(trial, "random", ambient, &f, &g, dim));
        }
    }
    Ok(found)
}

/// Perfect algebras of `ambient` with dimension at most `bound`, each with
/// its universal central extension.
fn perfect_pool<S: Scalar>(ambient: &Variety, bound: usize) -> Result<Vec<(AlgebraRef<S>, UceResult<S>)>> {
    let mut bases = match ambient.name() {
        "Lie" => vec![samples::sl2(), samples::so3(), samples::sl2_ltimes_v2()],
        "Leib" => vec![
            samples::sl2(),
            samples::so3(),
            samples::sl2_ltimes_v2(),
            samples::sl2_hemisemidirect_v2(),
        ],
        _ => Vec::new(),
    };
    // Universal central extensions are perfect with nonzero centres.
    let mut covers = Vec::new();
    for base in &bases {
        let r = build_uce(&base.clone().into_ref(), ambient)?;
        if !r.h2.is_zero() {
            covers.push(r.domain().as_ref().clone());
        }
    }
    bases.extend(covers);
    bases.retain(|b| b.dim() <= bound);
    bases
        .into_iter()
        .map(|b| {
            let b = b.into_ref();
            let r = build_uce(&b, ambient)?;
            Ok((b, r))
        })
        .collect()
}

/// A perfect non-associative algebra `A ⊕ K^s` with bracket
/// `[(x,k), (y,l)] = ([x,y], ω(x,y))` over a random perfect `A`.
fn random_perfect_naalg<S: Scalar, R: Rng + ?Sized>(rng: &mut R, bound: usize) -> Option<Algebra<S>> {
    if bound < 2 {
        return None;
    }
    for _ in 0..32 {
        let d = rng.gen_range(2..=bound.min(3));
        let a = if rng.gen_bool(0.2) {
            samples::example_a()
        } else {
            random_algebra::<S, R>(rng, d, 0.4)
        };
        if !is_perfect(&a, &Variety::vect()).ok()? {
            continue;
        }
        let s = rng.gen_range(0..=(bound - a.dim()).min(2));
        let mut b = direct_sum_abelian(&a, s);
        let dim = b.dim();
        let mut sc = b.structure_constants().to_vec();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                for k in a.dim()..dim {
                    if rng.gen_bool(0.4) {
                        sc[(i * dim + j) * dim + k] = small_scalar(rng, 2);
                    }
                }
            }
        }
        b = Algebra::new(b.labels().to_vec(), sc).ok()?;
        if is_perfect(&b, &Variety::vect()).ok()? {
            return Some(b);
        }
    }
    None
}

fn random_pair<S: Scalar>(
    rng: &mut ChaCha8Rng,
    ambient: &Variety,
    pool: &[(AlgebraRef<S>, UceResult<S>)],
    bound: usize,
) -> Result<(LinearMap<S>, LinearMap<S>)> {
    let entry = if ambient.laws().is_empty() {
        random_perfect_naalg::<S, _>(rng, bound).map(|b| (b.into_ref(), None))
    } else {
        (!pool.is_empty()).then(|| {
            let (b, r) = &pool[rng.gen_range(0..pool.len())];
            (b.clone(), Some(r))
        })
    };
    let (b0, cover) = entry.unwrap_or_else(|| (Algebra::zero().into_ref(), None));
    let change = random_invertible(rng, b0.dim());
    let b = b0.change_basis(&change)?.into_ref();
    let to_new = change.inverse().expect("unimodular");

    // f : B → B/Z'' with Z'' inside the centre.
    let z = random_subspace(rng, &centre(&b));
    let (_, f) = quotient_algebra(&b, &IdealWitness::certify(&b, z)?)?;

    let cover = match cover {
        // U(B)/S with S inside H2(B); U(B) is transported along the basis change.
        Some(r) => {
            let u = r.domain();
            let s = random_subspace(rng, &r.h2);
            let (u_mod_s, _) = quotient_algebra(u, &IdealWitness::certify(u, s.clone())?)?;
            let (_, section) = quotient_map(u.dim(), &s)?;
            let m = section.mul(r.u.map().matrix())?.mul(&to_new)?;
            LinearMap::morphism(u_mod_s, b.clone(), m)?
        }
        // Without laws every bilinear ω gives a central extension B ⊕_ω K^t.
        None => {
            let t = rng.gen_range(1..=2);
            cocycle_extension(rng, &b, t)?
        }
    };
    // g : cover × K^r → B.
    let r = rng.gen_range(0..=1);
    let extra: AlgebraRef<S> = Algebra::abelian("k", r).into_ref();
    let prod = direct_product(cover.domain(), &extra);
    let g = prod.p1.then(&cover)?;
    Ok((f, g))
}

/// `B ⊕_ω K^t → B` for a random bilinear `ω : B × B → K^t`.
fn cocycle_extension<S: Scalar, R: Rng + ?Sized>(rng: &mut R, b: &AlgebraRef<S>, t: usize) -> Result<LinearMap<S>> {
    let n = b.dim();
    let dim = n + t;
    let mut sc = direct_sum_abelian(b, t).structure_constants().to_vec();
    for i in 0..n {
        for j in 0..n {
            for k in n..dim {
                if rng.gen_bool(0.4) {
                    sc[(i * dim + j) * dim + k] = small_scalar(rng, 2);
                }
            }
        }
    }
    let c = Algebra::new(extend_labels(b.labels(), "z", t), sc)?.into_ref();
    let proj = Matrix::identity(n).vstack(&Matrix::zeros(t, n))?;
    LinearMap::morphism(c, b.clone(), proj)
}
