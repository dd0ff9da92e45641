//! Universal central extensions against independently computed homology,
//! and the universal property of the lift.

use centrex::algebra::{centre, direct_product, quotient_algebra};
use centrex::extension::{centralise, compose, is_central};
use centrex::linalg::{quotient_map, unit_vector};
use centrex::random::{random_subspace, random_vector};
use centrex::samples;
use centrex::uce::{build_uce, composite_universality, lift_solution_dimension, lift_universal};
use centrex::{
    Algebra, AlgebraRef, Extension, Fp, IdealWitness, LinearMap, Matrix, Rational, Scalar, Subspace, Variety,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod support;

use support::oracles::{chevalley_eilenberg_h2, free_h2};

type Q = Rational;
type F5 = Fp<5>;

fn lie_battery<S: Scalar>() -> Vec<(&'static str, Algebra<S>)> {
    vec![
        ("sl2", samples::sl2()),
        ("so3", samples::so3()),
        ("sl2 ⋉ V2", samples::sl2_ltimes_v2()),
    ]
}

fn lie_h2_matches_chevalley_eilenberg<S: Scalar>() {
    for (name, a) in lie_battery::<S>() {
        let expected = chevalley_eilenberg_h2(&a);
        let r = build_uce(&a.into_ref(), &Variety::lie()).unwrap();
        assert_eq!(r.h2.dim(), expected, "{name}");
        assert_eq!(r.domain().dim(), r.codomain().dim() + expected, "{name}");
    }
}

#[test]
fn lie_h2_matches_chevalley_eilenberg_q() {
    lie_h2_matches_chevalley_eilenberg::<Q>();
}

#[test]
fn lie_h2_matches_chevalley_eilenberg_f5() {
    lie_h2_matches_chevalley_eilenberg::<F5>();
}

#[test]
fn chevalley_eilenberg_oracle_values() {
    assert_eq!(chevalley_eilenberg_h2(&samples::sl2::<Q>()), 0);
    assert_eq!(chevalley_eilenberg_h2(&samples::sl2_ltimes_v2::<Q>()), 1);
    // The two-dimensional abelian algebra has Λ² of dimension one and no boundaries.
    assert_eq!(chevalley_eilenberg_h2(&Algebra::<Q>::abelian("x", 2)), 1);
}

#[test]
fn free_h2_of_counterexample_middle() {
    let b = samples::example_b::<Q>();
    let expected = free_h2(&b);
    let r = build_uce(&b.into_ref(), &Variety::naalg()).unwrap();
    assert_eq!(r.h2.dim(), expected);
    assert_eq!(r.domain().dim(), 9);
    let a = samples::example_a::<F5>();
    let r = build_uce(&a.clone().into_ref(), &Variety::naalg()).unwrap();
    assert_eq!(r.h2.dim(), free_h2(&a));
}

#[test]
fn h2_lies_in_the_centre() {
    for (_, a) in lie_battery::<Q>() {
        let r = build_uce(&a.into_ref(), &Variety::lie()).unwrap();
        assert!(r.h2.is_subspace_of(&centre(r.domain())));
        assert!(r.construction_log.iter().all(|c| c.passed));
    }
}

/// `U/S → A` for a subspace `S` of `H2`.
fn partial_cover<S: Scalar>(r: &centrex::UceResult<S>, s: &Subspace<S>) -> Extension<S> {
    let u = r.domain();
    let ideal = IdealWitness::certify(u, s.clone()).unwrap();
    let (quotient, _) = quotient_algebra(u, &ideal).unwrap();
    let (_, section) = quotient_map(u.dim(), s).unwrap();
    let m = section.mul(r.u.map().matrix()).unwrap();
    let map = LinearMap::morphism(quotient, r.codomain().clone(), m).unwrap();
    Extension::new(map, r.u.ambient().clone(), Variety::vect()).unwrap()
}

#[test]
fn lift_into_quotients_of_the_cover_is_surjective() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (a, v) in [
        (samples::example_b::<Q>(), Variety::naalg()),
        (samples::sl2_ltimes_v2::<Q>(), Variety::lie()),
    ] {
        let r = build_uce(&a.into_ref(), &v).unwrap();
        for _ in 0..5 {
            let s = random_subspace(&mut rng, &r.h2);
            let e = partial_cover(&r, &s);
            assert!(is_central(&e).unwrap());
            let h = lift_universal(&r, &e).unwrap();
            assert!(h.is_surjective());
            assert_eq!(h.then(e.map()).unwrap().matrix(), r.u.map().matrix());
            assert_eq!(lift_solution_dimension(&r, &e).unwrap(), 0);
        }
    }
}

#[test]
fn lift_into_trivial_product_is_u_paired_with_zero() {
    let r = build_uce(&samples::sl2::<Q>().into_ref(), &Variety::lie()).unwrap();
    let v = Algebra::<Q>::abelian("v", 2).into_ref();
    let prod = direct_product(r.codomain(), &v);
    let e = Extension::new(prod.p1.clone(), Variety::lie(), Variety::vect()).unwrap();
    let h = lift_universal(&r, &e).unwrap();
    let expected = r.u.map().matrix().hstack(&Matrix::zeros(r.domain().dim(), 2)).unwrap();
    assert_eq!(h.matrix(), &expected);
}

#[test]
fn lift_into_centralised_composite() {
    let f = Extension::new(samples::example_f::<Q>(), Variety::naalg(), Variety::vect()).unwrap();
    let g = Extension::new(samples::example_g::<Q>(), Variety::naalg(), Variety::vect()).unwrap();
    let fg = compose(&f, &g).unwrap();
    assert!(!is_central(&fg).unwrap());
    let (central, _) = centralise(&fg).unwrap();
    let r = build_uce(fg.codomain(), &Variety::naalg()).unwrap();
    let e = Extension::new(
        central
            .map()
            .with_objects(central.domain().clone(), r.codomain().clone())
            .unwrap(),
        Variety::naalg(),
        Variety::vect(),
    )
    .unwrap();
    let h = lift_universal(&r, &e).unwrap();
    assert_eq!(h.then(e.map()).unwrap().matrix(), r.u.map().matrix());
}

/// Σ t_ij [s(e_i), s(e_j)] for an arbitrary linear section `s` of `e`.
fn bracket_through_section<S: Scalar>(e: &Extension<S>, section: &[Vec<S>], t: &[S]) -> Vec<S> {
    let b = e.domain();
    let n = section.len();
    let mut out = vec![S::zero(); b.dim()];
    for i in 0..n {
        for j in 0..n {
            let c = &t[i * n + j];
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b.bracket(&section[i], &section[j])) {
                *o = o.clone() + c.clone() * x;
            }
        }
    }
    out
}

fn lift_is_independent_of_choices<S: Scalar>(seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = samples::example_b::<S>().into_ref();
    let r = build_uce(&a, &Variety::naalg()).unwrap();
    let e = partial_cover(&r, &random_subspace(&mut rng, &r.h2));
    let h = lift_universal(&r, &e).unwrap();
    let n = a.dim();
    let kernel: Vec<Vec<S>> = e.kernel().subspace.basis_vectors().collect();
    // A section perturbed by random kernel elements.
    let section: Vec<Vec<S>> = (0..n)
        .map(|i| {
            let mut s = e.map().matrix().solve_left(&unit_vector(n, i)).unwrap();
            for k in &kernel {
                let c: S = random_vector::<S, _>(&mut rng, 1).remove(0);
                for (x, y) in s.iter_mut().zip(k) {
                    *x = x.clone() + c.clone() * y.clone();
                }
            }
            s
        })
        .collect();
    // Relations in a shuffled basis: random combinations of W.
    let w: Vec<Vec<S>> = r.relations().basis_vectors().collect();
    for _ in 0..5 {
        let coeffs = random_vector::<S, _>(&mut rng, w.len());
        let mut t = vec![S::zero(); n * n];
        for (c, v) in coeffs.iter().zip(&w) {
            for (x, y) in t.iter_mut().zip(v) {
                *x = x.clone() + c.clone() * y.clone();
            }
        }
        assert!(bracket_through_section(&e, &section, &t).iter().all(|x| x.is_zero()));
    }
    for (row, t) in r.tensor_section().row_iter().enumerate() {
        assert_eq!(bracket_through_section(&e, &section, t), h.matrix().row(row).to_vec());
    }
}

#[test]
fn lift_is_independent_of_choices_q() {
    for seed in 0..10 {
        lift_is_independent_of_choices::<Q>(seed);
    }
}

#[test]
fn lift_is_independent_of_choices_f5() {
    for seed in 0..10 {
        lift_is_independent_of_choices::<F5>(seed);
    }
}

#[test]
fn lift_of_the_cover_into_itself_is_the_identity() {
    for (_, a) in lie_battery::<F5>() {
        let r = build_uce(&a.into_ref(), &Variety::lie()).unwrap();
        let h = lift_universal(&r, &r.u).unwrap();
        assert_eq!(h.matrix(), &Matrix::identity(r.domain().dim()));
        assert_eq!(lift_solution_dimension(&r, &r.u).unwrap(), 0);
    }
}

#[test]
fn lift_rejects_non_central_targets() {
    let f = Extension::new(samples::example_f::<Q>(), Variety::naalg(), Variety::vect()).unwrap();
    let g = Extension::new(samples::example_g::<Q>(), Variety::naalg(), Variety::vect()).unwrap();
    let fg = compose(&f, &g).unwrap();
    let r = build_uce(fg.codomain(), &Variety::naalg()).unwrap();
    assert!(lift_universal(&r, &fg).is_err());
}

#[test]
fn non_perfect_algebras_have_no_cover() {
    let err = build_uce(&samples::leibniz_e1e1::<Q>().into_ref(), &Variety::leib());
    assert!(matches!(err, Err(centrex::Error::NotPerfect(_))));
}

/// `U ⊕ K` with `[(x,a),(y,b)] = ([x,y], φ([x,y]))`: central, and split only
/// because the cocycle is a coboundary.
fn coboundary_extension<S: Scalar>(u: &AlgebraRef<S>, phi: &[S]) -> Extension<S> {
    let q = u.dim();
    let n = q + 1;
    let mut sc = vec![S::zero(); n * n * n];
    for x in 0..q {
        for y in 0..q {
            let p = u.product(x, y);
            let value = p
                .iter()
                .zip(phi)
                .fold(S::zero(), |acc, (c, f)| acc + c.clone() * f.clone());
            let base = (x * n + y) * n;
            sc[base..base + q].clone_from_slice(p);
            sc[base + q] = value;
        }
    }
    let mut labels = u.labels().to_vec();
    labels.push("z".into());
    let e = Algebra::new(labels, sc).unwrap().into_ref();
    let proj = Matrix::identity(q).vstack(&Matrix::zeros(1, q)).unwrap();
    let map = LinearMap::morphism(e, u.clone(), proj).unwrap();
    Extension::new(map, Variety::lie(), Variety::vect()).unwrap()
}

#[test]
fn central_extensions_of_a_cover_split() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let r = build_uce(&samples::sl2_ltimes_v2::<Q>().into_ref(), &Variety::lie()).unwrap();
    let u = r.domain().clone();
    let cover_of_cover = build_uce(&u, &Variety::lie()).unwrap();
    assert!(cover_of_cover.u.map().is_isomorphism());
    let back = cover_of_cover.u.map().inverse().unwrap();
    for _ in 0..5 {
        let e = coboundary_extension(&u, &random_vector::<Q, _>(&mut rng, u.dim()));
        assert!(is_central(&e).unwrap());
        let h = lift_universal(&cover_of_cover, &e).unwrap();
        let split = back.then(&h).unwrap();
        assert!(split.is_morphism());
        assert_eq!(split.then(e.map()).unwrap().matrix(), &Matrix::identity(u.dim()));
    }
}

#[test]
fn composites_with_a_cover_are_universal() {
    let a = samples::sl2_ltimes_v2::<Q>().into_ref();
    let r = build_uce(&a, &Variety::lie()).unwrap();
    let f = Extension::identity(a.clone(), Variety::lie(), Variety::vect()).unwrap();
    assert!(composite_universality(&f, &r.u).unwrap());
    let rr = build_uce(r.domain(), &Variety::lie()).unwrap();
    assert!(composite_universality(&r.u, &rr.u).unwrap());
}

#[test]
fn composites_over_non_perfect_domains_are_not_universal() {
    let v = Algebra::<Q>::abelian("v", 2).into_ref();
    let id = Extension::identity(v, Variety::lie(), Variety::vect()).unwrap();
    assert!(!composite_universality(&id, &id).unwrap());
}

#[test]
fn counterexample_composite_is_a_condition_violation() {
    let f = Extension::new(samples::example_f::<Q>(), Variety::naalg(), Variety::vect()).unwrap();
    let g = Extension::new(samples::example_g::<Q>(), Variety::naalg(), Variety::vect()).unwrap();
    assert!(matches!(
        composite_universality(&f, &g),
        Err(centrex::Error::UceViolation(_))
    ));
}
