//! Bundled algebras: the non-associative counterexample triple `C → B → A`,
//! and a few perfect Lie and Leibniz algebras used throughout the tests.

use crate::algebra::{Algebra, LinearMap};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `[a2,a1] = a2`, `[a2,a2] = a1`.
pub fn example_a<S: Scalar>() -> Algebra<S> {
    Algebra::from_int_products("a", 2, &[(1, 0, 1, 1), (1, 1, 0, 1)])
}

/// `[b2,b2] = b1`, `[b3,b2] = b3`, `[b3,b3] = b2`.
pub fn example_b<S: Scalar>() -> Algebra<S> {
    Algebra::from_int_products("b", 3, &[(1, 1, 0, 1), (2, 1, 2, 1), (2, 2, 1, 1)])
}

/// `[c3,c2] = c1`, `[c3,c3] = c2`, `[c4,c3] = c4`, `[c4,c4] = c3`.
pub fn example_c<S: Scalar>() -> Algebra<S> {
    Algebra::from_int_products("c", 4, &[(2, 1, 0, 1), (2, 2, 1, 1), (3, 2, 3, 1), (3, 3, 2, 1)])
}

/// `f : B → A`, `(b1, b2, b3) ↦ (0, a1, a2)`.
pub fn example_f<S: Scalar>() -> LinearMap<S> {
    LinearMap::morphism(
        example_b().into_ref(),
        example_a().into_ref(),
        Matrix::from_i64(&[&[0, 0], &[1, 0], &[0, 1]]),
    )
    .expect("f is a morphism")
}

/// `g : C → B`, `(c1, c2, c3, c4) ↦ (0, b1, b2, b3)`.
pub fn example_g<S: Scalar>() -> LinearMap<S> {
    LinearMap::morphism(
        example_c().into_ref(),
        example_b().into_ref(),
        Matrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
    )
    .expect("g is a morphism")
}

/// `sl2` with basis `e, f, h`: `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2<S: Scalar>() -> Algebra<S> {
    Algebra::from_int_products(
        "",
        3,
        &[
            (0, 1, 2, 1),
            (1, 0, 2, -1),
            (2, 0, 0, 2),
            (0, 2, 0, -2),
            (2, 1, 1, -2),
            (1, 2, 1, 2),
        ],
    )
    .with_labels(vec!["e".into(), "f".into(), "h".into()])
    .expect("labels")
}

/// The cross-product algebra on `x, y, z`.
pub fn so3<S: Scalar>() -> Algebra<S> {
    Algebra::from_int_products(
        "",
        3,
        &[
            (0, 1, 2, 1),
            (1, 0, 2, -1),
            (1, 2, 0, 1),
            (2, 1, 0, -1),
            (2, 0, 1, 1),
            (0, 2, 1, -1),
        ],
    )
    .with_labels(vec!["x".into(), "y".into(), "z".into()])
    .expect("labels")
}

// Standard representation of sl2 on v1, v2 (indices 3, 4): (x, v, target, coefficient).
const SL2_ON_V2: [(usize, usize, usize, i64); 4] = [(0, 4, 3, 1), (1, 3, 4, 1), (2, 3, 3, 1), (2, 4, 4, -1)];

/// `sl2 ⋉ K²` with the standard representation: a perfect Lie algebra
/// whose universal central extension is 6-dimensional.
pub fn sl2_ltimes_v2<S: Scalar>() -> Algebra<S> {
    let mut products: Vec<(usize, usize, usize, i64)> = sl2_products();
    for (x, v, t, c) in SL2_ON_V2 {
        products.push((x, v, t, c));
        products.push((v, x, t, -c));
    }
    Algebra::from_int_products("", 5, &products)
        .with_labels(["e", "f", "h", "v1", "v2"].iter().map(|s| s.to_string()).collect())
        .expect("labels")
}

/// `sl2` acting from the right on `K²` with `[sl2, K²] = 0`: a perfect
/// Leibniz algebra that is not a Lie algebra.
pub fn sl2_hemisemidirect_v2<S: Scalar>() -> Algebra<S> {
    let mut products: Vec<(usize, usize, usize, i64)> = sl2_products();
    for (x, v, t, c) in SL2_ON_V2 {
        products.push((v, x, t, -c));
    }
    Algebra::from_int_products("", 5, &products)
        .with_labels(["e", "f", "h", "v1", "v2"].iter().map(|s| s.to_string()).collect())
        .expect("labels")
}

fn sl2_products() -> Vec<(usize, usize, usize, i64)> {
    vec![
        (0, 1, 2, 1),
        (1, 0, 2, -1),
        (2, 0, 0, 2),
        (0, 2, 0, -2),
        (2, 1, 1, -2),
        (1, 2, 1, 2),
    ]
}

/// Two-dimensional Leibniz algebra `[e1,e1] = e2`.
pub fn leibniz_e1e1<S: Scalar>() -> Algebra<S> {
    Algebra::from_int_products("e", 2, &[(0, 0, 1, 1)])
}
