//! Finite-dimensional algebras given by structure constants, their
//! morphisms, ideals, quotients, products and fibre products.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{free_columns, quotient_map, unit_vector, Matrix, Subspace};
use crate::scalar::Scalar;

/// A vector space with a bilinear bracket `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Algebra<S> {
    dim: usize,
    labels: Vec<String>,
    sc: Vec<S>,
}

pub type AlgebraRef<S> = Arc<Algebra<S>>;

impl<S: Scalar> Algebra<S> {
    /// `sc` is the flattened tensor, index `(i * dim + j) * dim + k`.
    pub fn new(labels: Vec<String>, sc: Vec<S>) -> Result<Self> {
        let dim = labels.len();
        if sc.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: sc.len(),
            });
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != dim {
            return Err(Error::InvalidAlgebra("basis labels must be distinct".into()));
        }
        Ok(Algebra { dim, labels, sc })
    }

    /// Builds an algebra from its nonzero products `[e_i, e_j] += c·e_k`.
    /// Repeated `(i, j, k)` triples are rejected.
    pub fn from_products<I>(labels: Vec<String>, products: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, S)>,
    {
        let dim = labels.len();
        let mut sc = vec![S::zero(); dim * dim * dim];
        let mut seen = HashSet::new();
        for (i, j, k, c) in products {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "product index ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate product entry ({i}, {j}, {k})"
                )));
            }
            sc[(i * dim + j) * dim + k] = c;
        }
        Self::new(labels, sc)
    }

    /// Integer structure constants with labels `prefix1, prefix2, …`.
    pub fn from_int_products(prefix: &str, dim: usize, products: &[(usize, usize, usize, i64)]) -> Self {
        Self::from_products(
            default_labels(prefix, dim),
            products.iter().map(|&(i, j, k, c)| (i, j, k, S::from_i64(c))),
        )
        .expect("valid integer structure constants")
    }

    pub fn abelian(prefix: &str, dim: usize) -> Self {
        Algebra {
            dim,
            labels: default_labels(prefix, dim),
            sc: vec![S::zero(); dim * dim * dim],
        }
    }

    pub fn zero() -> Self {
        Self::abelian("z", 0)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != self.dim {
            return Err(Error::InvalidAlgebra("basis labels must be distinct".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &S {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn product(&self, i: usize, j: usize) -> &[S] {
        let start = (i * self.dim + j) * self.dim;
        &self.sc[start..start + self.dim]
    }

    pub fn structure_constants(&self) -> &[S] {
        &self.sc
    }

    /// Nonzero entries of the structure tensor, in index order.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, usize, &S)> + '_ {
        let d = self.dim;
        self.sc
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / (d * d), (idx / d) % d, idx % d, c))
    }

    pub fn is_abelian(&self) -> bool {
        self.sc.iter().all(|c| c.is_zero())
    }

    /// Same dimension and structure constants; labels are ignored.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.dim == other.dim && self.sc == other.sc
    }

    /// Bilinear evaluation of `[u, v]`.
    pub fn bracket(&self, u: &[S], v: &[S]) -> Vec<S> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = vec![S::zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let coeff = ui.clone() * vj.clone();
                for (o, c) in out.iter_mut().zip(self.product(i, j)) {
                    if !c.is_zero() {
                        *o = o.clone() + coeff.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// `[u, e_j]`.
    pub fn bracket_with_basis_right(&self, u: &[S], j: usize) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(self.product(i, j)) {
                if !c.is_zero() {
                    *o = o.clone() + ui.clone() * c.clone();
                }
            }
        }
        out
    }

    /// `[e_j, u]`.
    pub fn bracket_with_basis_left(&self, j: usize, u: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(self.product(j, i)) {
                if !c.is_zero() {
                    *o = o.clone() + ui.clone() * c.clone();
                }
            }
        }
        out
    }

    /// The same algebra written in a new basis: row `a` of `change` is the
    /// `a`-th new basis vector in old coordinates.
    pub fn change_basis(&self, change: &Matrix<S>) -> Result<Self> {
        let inv = change
            .inverse()
            .ok_or_else(|| Error::InvalidAlgebra("change of basis must be invertible".into()))?;
        let d = self.dim;
        let mut sc = Vec::with_capacity(d * d * d);
        for a in 0..d {
            for b in 0..d {
                let prod = self.bracket(change.row(a), change.row(b));
                sc.extend(inv.apply(&prod));
            }
        }
        Self::new(self.labels.clone(), sc)
    }

    /// Span of all products `[e_i, e_j]`.
    pub fn derived_span(&self) -> Subspace<S> {
        let d = self.dim;
        Subspace::from_vectors(
            d,
            (0..d)
                .flat_map(|i| (0..d).map(move |j| (i, j)))
                .map(|(i, j)| self.product(i, j).to_vec()),
        )
    }

    pub fn into_ref(self) -> AlgebraRef<S> {
        Arc::new(self)
    }
}

impl<S: Scalar> fmt::Debug for Algebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}", self.dim)?;
        for (i, j, k, c) in self.nonzero_products() {
            write!(
                f,
                "; [{},{}] += {}·{}",
                self.labels[i], self.labels[j], c, self.labels[k]
            )?;
        }
        write!(f, ")")
    }
}

pub fn default_labels(prefix: &str, dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("{prefix}{i}")).collect()
}

fn same_object<S: Scalar>(a: &AlgebraRef<S>, b: &AlgebraRef<S>) -> bool {
    Arc::ptr_eq(a, b) || a.same_structure(b)
}

/// A linear map between algebras, optionally certified multiplicative.
#[derive(Clone)]
pub struct LinearMap<S> {
    domain: AlgebraRef<S>,
    codomain: AlgebraRef<S>,
    matrix: Matrix<S>,
    certified: bool,
}

impl<S: Scalar> fmt::Debug for LinearMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearMap")
            .field("domain_dim", &self.domain.dim())
            .field("codomain_dim", &self.codomain.dim())
            .field("certified", &self.certified)
            .field("matrix", &self.matrix)
            .finish()
    }
}

impl<S: Scalar> PartialEq for LinearMap<S> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
            && same_object(&self.domain, &other.domain)
            && same_object(&self.codomain, &other.codomain)
    }
}

impl<S: Scalar> LinearMap<S> {
    /// An uncertified linear map; `matrix` is `dim(domain) × dim(codomain)`.
    pub fn new(domain: AlgebraRef<S>, codomain: AlgebraRef<S>, matrix: Matrix<S>) -> Result<Self> {
        if matrix.rows() != domain.dim() || matrix.cols() != codomain.dim() {
            return Err(Error::DimensionMismatch {
                expected: domain.dim() * codomain.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        Ok(LinearMap {
            domain,
            codomain,
            matrix,
            certified: false,
        })
    }

    /// A certified morphism, or `NotMorphism` naming the first failing pair.
    pub fn morphism(domain: AlgebraRef<S>, codomain: AlgebraRef<S>, matrix: Matrix<S>) -> Result<Self> {
        Self::new(domain, codomain, matrix)?.certify()
    }

    pub fn identity(a: AlgebraRef<S>) -> Self {
        let n = a.dim();
        LinearMap {
            domain: a.clone(),
            codomain: a,
            matrix: Matrix::identity(n),
            certified: true,
        }
    }

    pub fn zero(domain: AlgebraRef<S>, codomain: AlgebraRef<S>) -> Self {
        let m = Matrix::zeros(domain.dim(), codomain.dim());
        LinearMap {
            domain,
            codomain,
            matrix: m,
            certified: true,
        }
    }

    pub fn domain(&self) -> &AlgebraRef<S> {
        &self.domain
    }

    pub fn codomain(&self) -> &AlgebraRef<S> {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.matrix.apply(v)
    }

    /// First basis pair on which multiplicativity fails.
    pub fn morphism_violation(&self) -> Option<(usize, usize)> {
        let d = self.domain.dim();
        let images: Vec<Vec<S>> = self.matrix.row_iter().map(|r| r.to_vec()).collect();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.matrix.apply(self.domain.product(i, j));
                let rhs = self.codomain.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_morphism(&self) -> bool {
        self.morphism_violation().is_none()
    }

    pub fn certify(mut self) -> Result<Self> {
        if !self.certified {
            if let Some((i, j)) = self.morphism_violation() {
                return Err(Error::NotMorphism { i, j });
            }
            self.certified = true;
        }
        Ok(self)
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &LinearMap<S>) -> Result<LinearMap<S>> {
        if !same_object(&self.codomain, &then.domain) {
            return Err(Error::NotComposable);
        }
        Ok(LinearMap {
            domain: self.domain.clone(),
            codomain: then.codomain.clone(),
            matrix: self.matrix.mul(&then.matrix)?,
            certified: self.certified && then.certified,
        })
    }

    pub fn kernel(&self) -> Subspace<S> {
        self.matrix.kernel()
    }

    pub fn image(&self) -> Subspace<S> {
        self.matrix.image()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.codomain.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.certified && self.is_injective() && self.is_surjective()
    }

    /// Same matrix with a different (structurally equal) domain/codomain handle.
    pub fn with_objects(&self, domain: AlgebraRef<S>, codomain: AlgebraRef<S>) -> Result<Self> {
        if !same_object(&self.domain, &domain) || !same_object(&self.codomain, &codomain) {
            return Err(Error::NotComposable);
        }
        Ok(LinearMap {
            domain,
            codomain,
            matrix: self.matrix.clone(),
            certified: self.certified,
        })
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<Self> {
        let inv = self.matrix.inverse()?;
        Some(LinearMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            matrix: inv,
            certified: self.certified,
        })
    }
}

/// A subspace together with a record of whether it was verified to be a
/// two-sided ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealWitness<S> {
    pub subspace: Subspace<S>,
    pub closure_certified: bool,
}

impl<S: Scalar> IdealWitness<S> {
    pub fn certify(a: &Algebra<S>, s: Subspace<S>) -> Result<Self> {
        if !is_ideal(a, &s) {
            return Err(Error::NotIdeal);
        }
        Ok(IdealWitness {
            subspace: s,
            closure_certified: true,
        })
    }

    pub fn zero(a: &Algebra<S>) -> Self {
        IdealWitness {
            subspace: Subspace::zero(a.dim()),
            closure_certified: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

pub fn is_ideal<S: Scalar>(a: &Algebra<S>, s: &Subspace<S>) -> bool {
    s.ambient_dim() == a.dim()
        && s.basis_vectors().all(|v| {
            (0..a.dim()).all(|j| {
                s.contains(&a.bracket_with_basis_right(&v, j)) && s.contains(&a.bracket_with_basis_left(j, &v))
            })
        })
}

pub fn is_subalgebra<S: Scalar>(a: &Algebra<S>, s: &Subspace<S>) -> bool {
    let basis: Vec<Vec<S>> = s.basis_vectors().collect();
    s.ambient_dim() == a.dim() && basis.iter().all(|u| basis.iter().all(|v| s.contains(&a.bracket(u, v))))
}

/// Smallest two-sided ideal containing `s`, by fixpoint iteration.
pub fn ideal_generated<S: Scalar>(a: &Algebra<S>, s: &Subspace<S>) -> IdealWitness<S> {
    assert_eq!(s.ambient_dim(), a.dim(), "subspace must live in the algebra");
    let d = a.dim();
    let mut current = s.clone();
    // Each round either grows the dimension or stabilises.
    for _ in 0..=d {
        let mut vectors: Vec<Vec<S>> = current.basis_vectors().collect();
        for v in current.basis_vectors() {
            for j in 0..d {
                vectors.push(a.bracket_with_basis_right(&v, j));
                vectors.push(a.bracket_with_basis_left(j, &v));
            }
        }
        let next = Subspace::from_vectors(d, vectors);
        if next.dim() == current.dim() {
            break;
        }
        current = next;
    }
    IdealWitness {
        subspace: current,
        closure_certified: true,
    }
}

/// Smallest subalgebra containing `s`.
pub fn subalgebra_generated<S: Scalar>(a: &Algebra<S>, s: &Subspace<S>) -> Subspace<S> {
    let d = a.dim();
    let mut current = s.clone();
    for _ in 0..=d {
        let basis: Vec<Vec<S>> = current.basis_vectors().collect();
        let mut vectors = basis.clone();
        for u in &basis {
            for v in &basis {
                vectors.push(a.bracket(u, v));
            }
        }
        let next = Subspace::from_vectors(d, vectors);
        if next.dim() == current.dim() {
            break;
        }
        current = next;
    }
    current
}

/// The centre `{z : [z, x] = 0 = [x, z] for all x}`.
pub fn centre<S: Scalar>(a: &Algebra<S>) -> Subspace<S> {
    let d = a.dim();
    let mut system = Matrix::zeros(d, 2 * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                system.set(i, j * d + k, a.structure_constant(i, j, k).clone());
                system.set(i, d * d + j * d + k, a.structure_constant(j, i, k).clone());
            }
        }
    }
    system.kernel()
}

fn labels_for_basis<S: Scalar>(a: &Algebra<S>, basis: &Subspace<S>, fallback: &str) -> Vec<String> {
    let mut labels: Vec<String> = basis
        .basis_vectors()
        .enumerate()
        .map(|(k, v)| {
            let nz: Vec<usize> = v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, _)| i)
                .collect();
            if nz.len() == 1 && v[nz[0]] == S::one() {
                a.labels()[nz[0]].clone()
            } else {
                format!("{fallback}{}", k + 1)
            }
        })
        .collect();
    let distinct: HashSet<&String> = labels.iter().collect();
    if distinct.len() != labels.len() {
        labels = default_labels(fallback, labels.len());
    }
    labels
}

/// Quotient by a certified ideal, with the projection morphism.
pub fn quotient_algebra<S: Scalar>(
    a: &AlgebraRef<S>,
    ideal: &IdealWitness<S>,
) -> Result<(AlgebraRef<S>, LinearMap<S>)> {
    if !ideal.closure_certified {
        return Err(Error::NotIdeal);
    }
    let (proj, section) = quotient_map(a.dim(), &ideal.subspace)?;
    let q = proj.cols();
    let mut sc = Vec::with_capacity(q * q * q);
    for x in 0..q {
        for y in 0..q {
            sc.extend(proj.apply(&a.bracket(section.row(x), section.row(y))));
        }
    }
    let labels: Vec<String> = free_columns(&ideal.subspace)
        .into_iter()
        .map(|j| a.labels()[j].clone())
        .collect();
    let quotient = Algebra::new(labels, sc)?.into_ref();
    let map = LinearMap::morphism(a.clone(), quotient.clone(), proj)?;
    Ok((quotient, map))
}

/// A subalgebra as an algebra of its own, with its inclusion.
pub fn subalgebra<S: Scalar>(a: &AlgebraRef<S>, s: &Subspace<S>) -> Result<(AlgebraRef<S>, LinearMap<S>)> {
    if s.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: s.ambient_dim(),
        });
    }
    let basis: Vec<Vec<S>> = s.basis_vectors().collect();
    let n = basis.len();
    let mut sc = Vec::with_capacity(n * n * n);
    for u in &basis {
        for v in &basis {
            let coords = s.coordinates(&a.bracket(u, v)).ok_or(Error::NotSubalgebra)?;
            sc.extend(coords);
        }
    }
    let sub = Algebra::new(labels_for_basis(a, s, "v"), sc)?.into_ref();
    let incl = LinearMap::morphism(sub.clone(), a.clone(), s.basis().clone())?;
    Ok((sub, incl))
}

pub struct DirectProduct<S> {
    pub algebra: AlgebraRef<S>,
    pub p1: LinearMap<S>,
    pub p2: LinearMap<S>,
    pub i1: LinearMap<S>,
    pub i2: LinearMap<S>,
}

pub fn direct_product<S: Scalar>(a: &AlgebraRef<S>, b: &AlgebraRef<S>) -> DirectProduct<S> {
    let (da, db) = (a.dim(), b.dim());
    let n = da + db;
    let mut products = Vec::new();
    for (i, j, k, c) in a.nonzero_products() {
        products.push((i, j, k, c.clone()));
    }
    for (i, j, k, c) in b.nonzero_products() {
        products.push((da + i, da + j, da + k, c.clone()));
    }
    let labels: Vec<String> = a
        .labels()
        .iter()
        .map(|l| format!("({l},0)"))
        .chain(b.labels().iter().map(|l| format!("(0,{l})")))
        .collect();
    let labels = if labels.iter().collect::<HashSet<_>>().len() == n {
        labels
    } else {
        default_labels("p", n)
    };
    let prod = Algebra::from_products(labels, products)
        .expect("product is well formed")
        .into_ref();
    let id_n = Matrix::<S>::identity(n);
    let first: Vec<usize> = (0..da).collect();
    let second: Vec<usize> = (da..n).collect();
    let p1 = LinearMap::morphism(prod.clone(), a.clone(), id_n.select_cols(&first)).expect("projection");
    let p2 = LinearMap::morphism(prod.clone(), b.clone(), id_n.select_cols(&second)).expect("projection");
    let i1 = LinearMap::morphism(a.clone(), prod.clone(), id_n.select_rows(&first)).expect("injection");
    let i2 = LinearMap::morphism(b.clone(), prod.clone(), id_n.select_rows(&second)).expect("injection");
    DirectProduct {
        algebra: prod,
        p1,
        p2,
        i1,
        i2,
    }
}

pub struct FibreProduct<S> {
    pub algebra: AlgebraRef<S>,
    pub p1: LinearMap<S>,
    pub p2: LinearMap<S>,
}

/// `{(b, c) : f(b) = g(c)}` as a subalgebra of the direct product.
pub fn fibre_product<S: Scalar>(f: &LinearMap<S>, g: &LinearMap<S>) -> Result<FibreProduct<S>> {
    if !same_object(f.codomain(), g.codomain()) {
        return Err(Error::CodomainMismatch);
    }
    let f = f.clone().certify()?;
    let g = g.clone().certify()?;
    let prod = direct_product(f.domain(), g.domain());
    let stacked = f.matrix().vstack(&g.matrix().scale(&(-S::one())))?;
    let s = stacked.kernel();
    let (sub, incl) = subalgebra(&prod.algebra, &s)?;
    let p1 = incl.then(&prod.p1)?;
    let p2 = incl.then(&prod.p2)?;
    Ok(FibreProduct { algebra: sub, p1, p2 })
}

pub struct KernelPair<S> {
    pub algebra: AlgebraRef<S>,
    pub p1: LinearMap<S>,
    pub p2: LinearMap<S>,
    pub diagonal: LinearMap<S>,
}

pub fn kernel_pair<S: Scalar>(f: &LinearMap<S>) -> Result<KernelPair<S>> {
    let fp = fibre_product(f, f)?;
    let b = f.domain();
    let d = b.dim();
    // The fibre product is spanned by the stacked rows of its inclusion into B×B.
    let embedding = Subspace::row_space(&fp.p1.matrix().hstack(fp.p2.matrix())?);
    let mut diag = Matrix::zeros(d, fp.algebra.dim());
    for i in 0..d {
        let mut v = unit_vector::<S>(d, i);
        v.extend(unit_vector::<S>(d, i));
        let coords = embedding
            .coordinates(&v)
            .ok_or_else(|| Error::Assertion("diagonal lies in the kernel pair".into()))?;
        for (k, c) in coords.into_iter().enumerate() {
            diag.set(i, k, c);
        }
    }
    let diagonal = LinearMap::morphism(b.clone(), fp.algebra.clone(), diag)?;
    Ok(KernelPair {
        algebra: fp.algebra,
        p1: fp.p1,
        p2: fp.p2,
        diagonal,
    })
}
