//! Seeded generators of small random algebras, morphisms and extensions.
//!
//! Every generator takes an explicit RNG so that a `(seed, trial)` pair
//! reproduces the instance exactly.

use rand::Rng;

use crate::algebra::{
    centre, ideal_generated, quotient_algebra, subalgebra, subalgebra_generated, Algebra, AlgebraRef, LinearMap,
};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;
use crate::variety::{satisfies, Variety};

const ATTEMPTS: usize = 64;

pub fn small_scalar<S: Scalar, R: Rng + ?Sized>(rng: &mut R, bound: i64) -> S {
    S::from_i64(rng.gen_range(-bound..=bound))
}

pub fn random_vector<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<S> {
    (0..n).map(|_| small_scalar(rng, 2)).collect()
}

pub fn random_matrix<S: Scalar, R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix<S> {
    let data = (0..rows * cols).map(|_| small_scalar(rng, 2)).collect();
    Matrix::from_vec(rows, cols, data).expect("shape")
}

/// A product of a few elementary integer matrices with determinant `±1`,
/// so that both it and its inverse have small integer entries.
pub fn random_invertible<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix<S> {
    let mut m = Matrix::identity(n);
    if n == 0 {
        return m;
    }
    for i in 0..n {
        if rng.gen_bool(0.5) {
            m.set(i, i, -S::one());
        }
    }
    for _ in 0..n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let c: S = if rng.gen_bool(0.5) { S::one() } else { -S::one() };
        // row_i += c · row_j
        for k in 0..n {
            let v = m.get(i, k).clone() + c.clone() * m.get(j, k).clone();
            m.set(i, k, v);
        }
    }
    m
}

/// A random subspace of `within`, of uniformly chosen dimension.
pub fn random_subspace<S: Scalar, R: Rng + ?Sized>(rng: &mut R, within: &Subspace<S>) -> Subspace<S> {
    let target = rng.gen_range(0..=within.dim());
    random_subspace_of_dim(rng, within, target)
}

pub fn random_subspace_of_dim<S: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    within: &Subspace<S>,
    dim: usize,
) -> Subspace<S> {
    let n = within.ambient_dim();
    let mut s = Subspace::zero(n);
    for _ in 0..ATTEMPTS {
        if s.dim() >= dim {
            break;
        }
        let coeffs: Vec<S> = random_vector(rng, within.dim());
        let v = combine(within.basis(), &coeffs);
        s = s.sum(&Subspace::from_vectors(n, [v])).expect("same ambient");
    }
    s
}

fn combine<S: Scalar>(basis: &Matrix<S>, coeffs: &[S]) -> Vec<S> {
    basis.apply(coeffs)
}

/// Sparse random structure constants with entries in `[-2, 2]`.
pub fn random_algebra<S: Scalar, R: Rng + ?Sized>(rng: &mut R, dim: usize, density: f64) -> Algebra<S> {
    let sc = (0..dim * dim * dim)
        .map(|_| {
            if rng.gen_bool(density) {
                small_scalar(rng, 2)
            } else {
                S::zero()
            }
        })
        .collect();
    Algebra::new(crate::algebra::default_labels("e", dim), sc).expect("shape")
}

fn commutator<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>) -> Matrix<S> {
    x.mul(y)
        .expect("square")
        .add(&y.mul(x).expect("square").scale(&-S::one()))
        .expect("square")
}

fn as_matrix<S: Scalar>(v: &[S], n: usize) -> Matrix<S> {
    Matrix::from_vec(n, n, v.to_vec()).expect("square")
}

/// A Lie subalgebra of `gl_n` together with its basis matrices.
#[derive(Clone, Debug)]
pub struct MatrixLie<S: Scalar> {
    pub algebra: Algebra<S>,
    pub matrices: Vec<Matrix<S>>,
}

/// Structure constants of a commutator-closed subspace of `gl_n`.
pub fn matrix_lie_algebra<S: Scalar>(n: usize, span: &Subspace<S>) -> Result<MatrixLie<S>> {
    let matrices: Vec<Matrix<S>> = span.basis_vectors().map(|v| as_matrix(&v, n)).collect();
    let d = matrices.len();
    let mut sc = Vec::with_capacity(d * d * d);
    for x in &matrices {
        for y in &matrices {
            let c = commutator(x, y);
            let coords = span.coordinates(c.row_iter().flatten().cloned().collect::<Vec<_>>().as_slice());
            sc.extend(coords.ok_or(Error::NotSubalgebra)?);
        }
    }
    let algebra = Algebra::new(crate::algebra::default_labels("x", d), sc)?;
    Ok(MatrixLie { algebra, matrices })
}

/// The Lie subalgebra of `gl_n` generated by a few random matrices, if its
/// dimension stays within `max_dim`.
pub fn random_matrix_lie<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, max_dim: usize) -> MatrixLie<S> {
    for _ in 0..ATTEMPTS {
        let generators = rng.gen_range(1..=2);
        let vectors = (0..generators).map(|_| sparse_vector(rng, n * n));
        let mut span = Subspace::from_vectors(n * n, vectors);
        loop {
            if span.dim() > max_dim {
                break;
            }
            let ms: Vec<Matrix<S>> = span.basis_vectors().map(|v| as_matrix(&v, n)).collect();
            let brackets = ms.iter().flat_map(|x| ms.iter().map(move |y| commutator(x, y)));
            let next = span
                .sum(&Subspace::from_vectors(
                    n * n,
                    brackets.map(|c| c.row_iter().flatten().cloned().collect()),
                ))
                .expect("same ambient");
            if next.dim() == span.dim() {
                return matrix_lie_algebra(n, &span).expect("closed under commutators");
            }
            span = next;
        }
    }
    matrix_lie_algebra(n, &Subspace::zero(n * n)).expect("zero algebra")
}

fn sparse_vector<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<S> {
    (0..n)
        .map(|_| {
            if rng.gen_bool(0.4) {
                small_scalar(rng, 2)
            } else {
                S::zero()
            }
        })
        .collect()
}

/// `L ⋉ K^n` for a matrix Lie algebra acting on columns, or, when
/// `right_only`, the hemisemidirect product `[v, x] = -v·x`, `[x, v] = 0`,
/// which is Leibniz but generally not Lie.
pub fn semidirect<S: Scalar>(lie: &MatrixLie<S>, n: usize, right_only: bool) -> Algebra<S> {
    let d = lie.matrices.len();
    let dim = d + n;
    let mut sc = vec![S::zero(); dim * dim * dim];
    let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                sc[idx(i, j, k)] = lie.algebra.structure_constant(i, j, k).clone();
            }
        }
        // x_i · v_j = X_i e_j, read as a column.
        for j in 0..n {
            for k in 0..n {
                let c = lie.matrices[i].get(k, j).clone();
                if !right_only {
                    sc[idx(i, d + j, d + k)] = c.clone();
                }
                sc[idx(d + j, i, d + k)] = -c;
            }
        }
    }
    Algebra::new(crate::algebra::default_labels("e", dim), sc).expect("shape")
}

/// A random member of `v` of dimension at most `max_dim`.
pub fn random_algebra_in<S: Scalar, R: Rng + ?Sized>(rng: &mut R, v: &Variety, max_dim: usize) -> Result<Algebra<S>> {
    let a = match v.name() {
        "NAAlg" => {
            let d = rng.gen_range(0..=max_dim);
            random_algebra(rng, d, 0.3)
        }
        "Vect" => Algebra::abelian("e", rng.gen_range(0..=max_dim)),
        "Lie" | "Leib" => {
            let n = rng.gen_range(1..=3);
            let lie = random_matrix_lie(rng, n, max_dim);
            let room = max_dim.saturating_sub(lie.algebra.dim());
            if room >= n && rng.gen_bool(0.5) {
                semidirect(&lie, n, v.name() == "Leib" && rng.gen_bool(0.5))
            } else {
                lie.algebra
            }
        }
        other => {
            return Err(Error::VarietyMismatch(format!(
                "no random generator for variety {other}"
            )));
        }
    };
    let t = random_invertible(rng, a.dim());
    let a = a.change_basis(&t)?;
    if !satisfies(&a, v)? {
        return Err(Error::Assertion(format!("random generator left {}", v.name())));
    }
    Ok(a)
}

/// `B → B/I` for a random ideal `I`.
pub fn random_extension<S: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    ambient: &Variety,
    coefficient: &Variety,
    max_dim: usize,
) -> Result<Extension<S>> {
    let b = random_algebra_in(rng, ambient, max_dim)?.into_ref();
    let generators = random_subspace(rng, &Subspace::whole(b.dim()));
    let ideal = ideal_generated(&b, &generators);
    let (_, q) = quotient_algebra(&b, &ideal)?;
    Extension::new(q, ambient.clone(), coefficient.clone())
}

/// `B × K^s → B/Z` with `Z` a random subspace of the centre; central
/// relative to abelian algebras, hence relative to any coefficient variety.
pub fn random_central_extension<S: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    ambient: &Variety,
    coefficient: &Variety,
    max_dim: usize,
) -> Result<Extension<S>> {
    let base = random_algebra_in(rng, ambient, max_dim)?;
    let extra = rng.gen_range(0..=max_dim.saturating_sub(base.dim()).min(2));
    let b = direct_sum_abelian(&base, extra).into_ref();
    let z = random_subspace(rng, &centre(&b));
    let ideal = crate::algebra::IdealWitness::certify(&b, z)?;
    let (_, q) = quotient_algebra(&b, &ideal)?;
    Extension::new(q, ambient.clone(), coefficient.clone())
}

/// `A × K^s`.
pub fn direct_sum_abelian<S: Scalar>(a: &Algebra<S>, s: usize) -> Algebra<S> {
    let (n, dim) = (a.dim(), a.dim() + s);
    let mut sc = vec![S::zero(); dim * dim * dim];
    for (i, j, k, c) in a.nonzero_products() {
        sc[(i * dim + j) * dim + k] = c.clone();
    }
    let _ = n;
    Algebra::new(extend_labels(a.labels(), "k", s), sc).expect("shape")
}

/// `existing` followed by `count` fresh labels `prefix1, prefix2, …`
/// that avoid the existing ones.
pub fn extend_labels(existing: &[String], prefix: &str, count: usize) -> Vec<String> {
    let mut labels = existing.to_vec();
    let mut i = 1;
    while labels.len() < existing.len() + count {
        let l = format!("{prefix}{i}");
        if !labels.contains(&l) {
            labels.push(l);
        }
        i += 1;
    }
    labels
}

/// A split epimorphism together with its section.
#[derive(Clone, Debug)]
pub struct SplitEpi<S: Scalar> {
    pub extension: Extension<S>,
    pub section: LinearMap<S>,
}

/// `A ⋉ M → A` with its inclusion as section. In `NAAlg` the actions of
/// `A` on `M` are arbitrary bilinear maps; in `Lie`/`Leib` they come from
/// a matrix representation.
pub fn random_split_epi<S: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    ambient: &Variety,
    coefficient: &Variety,
    max_dim: usize,
) -> Result<SplitEpi<S>> {
    let (b, base_dim) = match ambient.name() {
        "NAAlg" => {
            let d = rng.gen_range(0..=max_dim);
            let m = rng.gen_range(0..=max_dim - d);
            let a = random_algebra::<S, R>(rng, d, 0.3);
            let dim = d + m;
            let mut sc = vec![S::zero(); dim * dim * dim];
            let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
            for (i, j, k, c) in a.nonzero_products() {
                sc[idx(i, j, k)] = c.clone();
            }
            for i in 0..d {
                for j in d..dim {
                    for k in d..dim {
                        if rng.gen_bool(0.3) {
                            sc[idx(i, j, k)] = small_scalar(rng, 2);
                        }
                        if rng.gen_bool(0.3) {
                            sc[idx(j, i, k)] = small_scalar(rng, 2);
                        }
                    }
                }
            }
            if rng.gen_bool(0.3) {
                // Abelian ideal with trivial action: a trivial extension.
                for i in 0..d {
                    for j in d..dim {
                        for k in d..dim {
                            sc[idx(i, j, k)] = S::zero();
                            sc[idx(j, i, k)] = S::zero();
                        }
                    }
                }
            }
            (Algebra::new(crate::algebra::default_labels("e", dim), sc)?, d)
        }
        "Lie" | "Leib" => {
            let n = rng.gen_range(1..=2);
            let lie = random_matrix_lie::<S, R>(rng, n, max_dim.saturating_sub(n).max(1));
            let d = lie.algebra.dim();
            let action = if rng.gen_bool(0.3) {
                MatrixLie {
                    algebra: lie.algebra.clone(),
                    matrices: vec![Matrix::zeros(n, n); d],
                }
            } else {
                lie
            };
            let right_only = ambient.name() == "Leib" && rng.gen_bool(0.5);
            (semidirect(&action, n, right_only), d)
        }
        other => return Err(Error::VarietyMismatch(format!("no split generator for {other}"))),
    };
    let b = b.into_ref();
    let a_span = Subspace::coordinate(b.dim(), &(0..base_dim).collect::<Vec<_>>());
    let (a, incl) = subalgebra(&b, &a_span)?;
    let proj = Matrix::from_rows(
        base_dim,
        (0..b.dim()).map(|i| {
            (0..base_dim)
                .map(|j| if i == j { S::one() } else { S::zero() })
                .collect()
        }),
    )?;
    let map = LinearMap::new(b.clone(), a.clone(), proj)?;
    let extension = Extension::new(map, ambient.clone(), coefficient.clone())?;
    let section = incl.with_objects(a, b)?;
    Ok(SplitEpi { extension, section })
}

/// Inclusion of a random subalgebra of `a`.
pub fn random_subalgebra_inclusion<S: Scalar, R: Rng + ?Sized>(rng: &mut R, a: &AlgebraRef<S>) -> Result<LinearMap<S>> {
    let gens = random_subspace(rng, &Subspace::whole(a.dim()));
    let span = subalgebra_generated(a, &gens);
    Ok(subalgebra(a, &span)?.1)
}
