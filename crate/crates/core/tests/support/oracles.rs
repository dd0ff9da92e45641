//! Homology computed directly from structure constants, independent of
//! the tensor-quotient construction.

use centrex::{Algebra, Matrix, Scalar};

/// `dim H2` of a Lie algebra from the Chevalley–Eilenberg complex
/// `Λ³A → Λ²A → A`, with `d(x∧y) = [x,y]` and
/// `d(x∧y∧z) = [x,y]∧z − [x,z]∧y + [y,z]∧x`.
pub fn chevalley_eilenberg_h2<S: Scalar>(a: &Algebra<S>) -> usize {
    let n = a.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let pair_index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j));
    // x ∧ e_k for a vector x, as coordinates in Λ².
    let wedge = |x: &[S], k: usize| -> Vec<S> {
        let mut out = vec![S::zero(); pairs.len()];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() || i == k {
                continue;
            }
            let (idx, sign) = if i < k {
                (pair_index(i, k).unwrap(), c.clone())
            } else {
                (pair_index(k, i).unwrap(), -c.clone())
            };
            out[idx] = out[idx].clone() + sign;
        }
        out
    };
    let d2 = Matrix::from_rows(n, pairs.iter().map(|&(i, j)| a.product(i, j).to_vec())).unwrap();
    let mut d3_rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let terms = [
                    (wedge(a.product(i, j), k), S::one()),
                    (wedge(a.product(i, k), j), -S::one()),
                    (wedge(a.product(j, k), i), S::one()),
                ];
                let mut row = vec![S::zero(); pairs.len()];
                for (t, s) in terms {
                    for (r, x) in row.iter_mut().zip(t) {
                        *r = r.clone() + s.clone() * x;
                    }
                }
                d3_rows.push(row);
            }
        }
    }
    let cycles = pairs.len() - d2.rank();
    let boundaries = if d3_rows.is_empty() {
        0
    } else {
        Matrix::from_rows(pairs.len(), d3_rows).unwrap().rank()
    };
    cycles - boundaries
}

/// `n² − rank μ` with `μ(e_i ⊗ e_j) = e_i e_j`, read straight off the products.
pub fn free_h2<S: Scalar>(a: &Algebra<S>) -> usize {
    let n = a.dim();
    let rows = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| a.product(i, j).to_vec());
    n * n - Matrix::from_rows(n, rows).unwrap().rank()
}
