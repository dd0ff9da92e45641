use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A subspace of `K^n`, stored canonically as the nonzero rows of a
/// reduced row-echelon matrix. Two subspaces are equal iff their bases are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<S> {
    ambient_dim: usize,
    basis: Matrix<S>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary rows of `m`.
    pub fn row_space(m: &Matrix<S>) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace {
            ambient_dim: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn from_vectors<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<S>>,
    {
        let m = Matrix::from_rows(ambient_dim, vectors).expect("vector length must equal ambient dimension");
        Self::row_space(&m)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        Self::from_vectors(ambient_dim, indices.iter().map(|&i| unit_vector(ambient_dim, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// The canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix<S> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = Vec<S>> + '_ {
        self.basis.row_iter().map(|r| r.to_vec())
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection via the null space of `[U; -V]`: every pair `(a, b)`
    /// with `a·U = b·V` gives the common vector `a·U`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient_dim));
        }
        let neg_v = other.basis.scale(&(-S::one()));
        let stacked = self.basis.vstack(&neg_v)?;
        let kernel = stacked.kernel();
        let du = self.dim();
        let vectors = kernel.basis_vectors().map(|coeffs| self.basis.apply(&coeffs[..du]));
        Ok(Self::from_vectors(self.ambient_dim, vectors))
    }

    /// Reduces `v` against the basis: the result vanishes on every pivot column.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    *o = o.clone() - c.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis_vectors().all(|v| other.contains(&v))
    }

    /// Image of the subspace under `v ↦ v·m`.
    pub fn map(&self, m: &Matrix<S>) -> Result<Self> {
        if m.rows() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: m.rows(),
            });
        }
        Ok(Self::row_space(&self.basis.mul(m)?))
    }

    /// Preimage of the subspace under `v ↦ v·m`.
    pub fn preimage(&self, m: &Matrix<S>) -> Result<Self> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: m.cols(),
            });
        }
        let (proj, _) = quotient_map(self.ambient_dim, self)?;
        Ok(m.mul(&proj)?.kernel())
    }
}

pub fn unit_vector<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

/// Projection onto `K^n / w` together with a linear section.
///
/// The quotient is identified with the coordinates on the non-pivot columns
/// of `w`'s canonical basis; `section` sends the `k`-th quotient basis
/// vector to the corresponding standard basis vector.
pub fn quotient_map<S: Scalar>(ambient_dim: usize, w: &Subspace<S>) -> Result<(Matrix<S>, Matrix<S>)> {
    if w.ambient_dim() != ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: ambient_dim,
            found: w.ambient_dim(),
        });
    }
    let free = free_columns(w);
    let q = free.len();
    let mut proj = Matrix::zeros(ambient_dim, q);
    for i in 0..ambient_dim {
        let r = w.reduce(&unit_vector(ambient_dim, i));
        for (k, &j) in free.iter().enumerate() {
            proj.set(i, k, r[j].clone());
        }
    }
    let mut section = Matrix::zeros(q, ambient_dim);
    for (k, &j) in free.iter().enumerate() {
        section.set(k, j, S::one());
    }
    Ok((proj, section))
}

/// Columns of the ambient space that are not pivots of `w`'s canonical basis.
pub fn free_columns<S: Scalar>(w: &Subspace<S>) -> Vec<usize> {
    let mut is_pivot = vec![false; w.ambient_dim()];
    for &p in w.pivots() {
        is_pivot[p] = true;
    }
    (0..w.ambient_dim()).filter(|&j| !is_pivot[j]).collect()
}
