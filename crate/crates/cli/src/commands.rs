//! Subcommand implementations. Each returns its report text; nothing is
//! printed here so that output stays byte-for-byte deterministic.

use std::fmt::Write;
use std::path::Path;

use centrex::algebra::centre;
use centrex::extension::{centralise as centralise_extension, is_central, is_perfect, relative_commutator};
use centrex::io::{self, bundled, load_algebra, load_morphism, parse_variety, peek_field, save_morphism};
use centrex::pruefer::check_pruefer;
use centrex::uce::{check_uce_condition, nested_compare, SearchConfig};
use centrex::variety::verbal_subobject;
use centrex::{build_uce, Error, Extension, Rational, Result, Scalar, Variety};

use crate::field::{parse_field, with_field};
use crate::Outcome;

fn ok_or_failed(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn passed(text: String) -> Outcome {
    Outcome { text, ok: true }
}

pub fn check_central(ext: &Path, coeff: &str) -> Result<Outcome> {
    let coeff = parse_variety(coeff)?;
    with_field!(peek_field(ext)?, check_central_in(ext, &coeff))
}

fn check_central_in<S: Scalar>(ext: &Path, coeff: &Variety) -> Result<Outcome> {
    let loaded = load_morphism::<S>(ext)?;
    let ambient = loaded.ambient_or_default()?;
    let e = Extension::new(loaded.map, ambient, coeff.clone())?;
    let commutator = relative_commutator(&e)?;
    let mut out = String::new();
    writeln!(
        out,
        "extension: dim {} -> dim {}, ambient {}, coefficient {}",
        e.domain().dim(),
        e.codomain().dim(),
        e.ambient(),
        e.coefficient()
    )
    .unwrap();
    let verdict = if commutator.is_zero() { "CENTRAL" } else { "NOT-CENTRAL" };
    writeln!(out, "{verdict}").unwrap();
    writeln!(out, "dim [K,B]_{} = {}", e.coefficient(), commutator.dim()).unwrap();
    Ok(passed(out))
}

pub fn centralise(ext: &Path, coeff: &str, target: &Path) -> Result<Outcome> {
    let coeff = parse_variety(coeff)?;
    with_field!(peek_field(ext)?, centralise_in(ext, &coeff, target))
}

fn centralise_in<S: Scalar>(ext: &Path, coeff: &Variety, target: &Path) -> Result<Outcome> {
    let loaded = load_morphism::<S>(ext)?;
    let ambient = loaded.ambient_or_default()?;
    let e = Extension::new(loaded.map, ambient.clone(), coeff.clone())?;
    let commutator = relative_commutator(&e)?;
    let (centralised, _) = centralise_extension(&e)?;
    let central = is_central(&centralised)?;
    save_morphism(target, centralised.map(), Some(&ambient))?;
    let mut out = String::new();
    writeln!(out, "dim [K,B]_{} = {}", coeff, commutator.dim()).unwrap();
    writeln!(
        out,
        "centralised: dim {} -> dim {}",
        centralised.domain().dim(),
        centralised.codomain().dim()
    )
    .unwrap();
    writeln!(out, "centralised extension is CENTRAL: {}", ok_or_failed(central)).unwrap();
    writeln!(out, "wrote {}", target.display()).unwrap();
    Ok(Outcome { text: out, ok: central })
}

fn variety_for(file: &io::AlgebraFile, arg: Option<&str>) -> Result<Variety> {
    match arg {
        Some(v) => parse_variety(v),
        None => file
            .variety()?
            .ok_or_else(|| Error::Format("no variety given and none declared in the algebra file".into())),
    }
}

pub fn uce(algebra: &Path, variety: Option<&str>, target: Option<&Path>) -> Result<Outcome> {
    with_field!(peek_field(algebra)?, uce_in(algebra, variety, target))
}

fn uce_in<S: Scalar>(algebra: &Path, variety: Option<&str>, target: Option<&Path>) -> Result<Outcome> {
    let (a, file) = load_algebra::<S>(algebra)?;
    let v = variety_for(&file, variety)?;
    let r = build_uce(&a, &v)?;
    let mut out = String::new();
    writeln!(out, "dim U = {}, dim H2 = {}", r.domain().dim(), r.h2.dim()).unwrap();
    writeln!(out, "dim H1 = {}", r.h1_dim).unwrap();
    for check in &r.construction_log {
        writeln!(out, "check {}: {}", check.name, ok_or_failed(check.passed)).unwrap();
    }
    if let Some(target) = target {
        save_morphism(target, r.u.map(), Some(&v))?;
        writeln!(out, "wrote {}", target.display()).unwrap();
    }
    Ok(passed(out))
}

pub fn h2(algebra: &Path, variety: Option<&str>) -> Result<Outcome> {
    with_field!(peek_field(algebra)?, h2_in(algebra, variety))
}

fn h2_in<S: Scalar>(algebra: &Path, variety: Option<&str>) -> Result<Outcome> {
    let (a, file) = load_algebra::<S>(algebra)?;
    let v = variety_for(&file, variety)?;
    let r = build_uce(&a, &v).map_err(|e| match e {
        Error::NotPerfect(_) => Error::NotPerfect("H2 unavailable".into()),
        other => other,
    })?;
    Ok(passed(format!("dim H2 = {}\n", r.h2.dim())))
}

pub fn perfect(algebra: &Path, coeff: &str) -> Result<Outcome> {
    let coeff = parse_variety(coeff)?;
    with_field!(peek_field(algebra)?, perfect_in(algebra, &coeff))
}

fn perfect_in<S: Scalar>(algebra: &Path, coeff: &Variety) -> Result<Outcome> {
    let (a, _) = load_algebra::<S>(algebra)?;
    let verbal = verbal_subobject(&a, coeff)?;
    let verdict = if verbal.subspace.is_whole() {
        "PERFECT"
    } else {
        "NOT-PERFECT"
    };
    Ok(passed(format!(
        "{verdict}\ndim [A,A]_{} = {} of {}\n",
        coeff,
        verbal.dim(),
        a.dim()
    )))
}

pub fn paper_examples() -> Result<Outcome> {
    type Q = Rational;
    let a = io::bundled_algebra::<Q>(bundled::COUNTEREXAMPLE_A)?;
    let b = io::bundled_algebra::<Q>(bundled::COUNTEREXAMPLE_B)?;
    let c = io::bundled_algebra::<Q>(bundled::COUNTEREXAMPLE_C)?;
    let f = io::bundled_morphism(bundled::COUNTEREXAMPLE_F, b.clone(), a.clone())?;
    let g = io::bundled_morphism(bundled::COUNTEREXAMPLE_G, c.clone(), b.clone())?;
    let (naalg, vect) = (Variety::naalg(), Variety::vect());
    let e_f = Extension::new(f, naalg.clone(), vect.clone())?;
    let e_g = Extension::new(g, naalg.clone(), vect.clone())?;
    let e_fg = centrex::extension::compose(&e_f, &e_g)?;

    let mut out = String::new();
    let mut all = true;
    let mut expect = |out: &mut String, line: String, holds: bool| {
        all &= holds;
        writeln!(out, "  {line}: {}", ok_or_failed(holds)).unwrap();
    };
    writeln!(
        out,
        "non-associative counterexample C -> B -> A (ambient NAAlg, coefficient Vect)"
    )
    .unwrap();
    for (name, e, want_central) in [
        ("f : B -> A", &e_f, true),
        ("g : C -> B", &e_g, true),
        ("f.g : C -> A", &e_fg, false),
    ] {
        let commutator = relative_commutator(e)?;
        let verdict = if commutator.is_zero() { "CENTRAL" } else { "NOT-CENTRAL" };
        expect(
            &mut out,
            format!("{name} {verdict} (dim [K,-]_Vect = {})", commutator.dim()),
            commutator.is_zero() == want_central,
        );
    }
    for (name, obj, e) in [("B", &b, &e_f), ("C", &c, &e_g)] {
        let (z, k) = (centre(obj).dim(), e.kernel().dim());
        expect(
            &mut out,
            format!("dim Z({name}) = {z}, dim Ker = {k}"),
            z == 1 && k == 1,
        );
    }
    for (name, obj) in [("B", &b), ("A", &a)] {
        let p = is_perfect(obj, &vect)?;
        let verdict = if p { "PERFECT" } else { "NOT-PERFECT" };
        expect(&mut out, format!("{name} {verdict}"), p);
    }
    let report = check_pruefer(3, 6)?;
    let pruefer_ok = report.all_hold();
    writeln!(out, "{report}").unwrap();
    writeln!(out, "  every stage H2 has order 3: {}", ok_or_failed(pruefer_ok)).unwrap();
    all &= pruefer_ok;
    writeln!(
        out,
        "{}",
        if all {
            "all expectations hold"
        } else {
            "SOME EXPECTATIONS FAILED"
        }
    )
    .unwrap();
    Ok(Outcome { text: out, ok: all })
}

pub fn search(ambient: &str, field: &str, config: SearchConfig, target: Option<&Path>) -> Result<Outcome> {
    let ambient = parse_variety(ambient)?;
    let tag = parse_field(field)?;
    with_field!(tag, search_in(&ambient, &config, target))
}

fn search_in<S: Scalar>(ambient: &Variety, config: &SearchConfig, target: Option<&Path>) -> Result<Outcome> {
    let found = check_uce_condition::<S>(ambient, config)?;
    for v in &found {
        if !v.replay::<S>(ambient)? {
            return Err(Error::Assertion(format!("trial {} does not replay", v.trial)));
        }
    }
    let mut out = String::new();
    writeln!(
        out,
        "search: ambient {}, field {}, trials {}, dim <= {}, seed {}, counterexample injected: {}",
        ambient,
        S::field_tag(),
        config.trials,
        config.dim_bound,
        config.seed,
        if config.inject_counterexample { "yes" } else { "no" }
    )
    .unwrap();
    writeln!(out, "violations: {}", found.len()).unwrap();
    for v in &found {
        writeln!(
            out,
            "trial {} [{}]: dim A = {}, dim B = {}, dim C = {}, dim [K,C]_Vect = {}",
            v.trial, v.source, v.a.dim, v.b.dim, v.c.dim, v.commutator_dim
        )
        .unwrap();
    }
    if let Some(target) = target {
        io::write_json(target, &found)?;
        writeln!(out, "wrote {}", target.display()).unwrap();
    }
    // A hit in a variety flagged as satisfying the condition is a bug.
    let ok = found.is_empty() || !ambient.uce_condition();
    Ok(Outcome { text: out, ok })
}

pub fn nested(algebra: &Path) -> Result<Outcome> {
    with_field!(peek_field(algebra)?, nested_in(algebra))
}

fn nested_in<S: Scalar>(algebra: &Path) -> Result<Outcome> {
    let (b, _) = load_algebra::<S>(algebra)?;
    let r = nested_compare(&b)?;
    let mut out = String::new();
    writeln!(out, "dim B = {}", r.dim_b).unwrap();
    writeln!(
        out,
        "dim U(B, Leib) = {}, dim H2(B, Leib) = {}",
        r.dim_u_leib, r.h2_leib
    )
    .unwrap();
    writeln!(out, "dim U(B, Lie) = {}, dim H2(B, Lie) = {}", r.dim_u_lie, r.h2_lie).unwrap();
    writeln!(out, "dim [U,U]_Lie in U(B, Leib) = {}", r.lie_verbal_of_u_leib).unwrap();
    writeln!(
        out,
        "reflection of u_Leib is isomorphic to u_Lie: {}",
        ok_or_failed(r.reflection_iso)
    )
    .unwrap();
    writeln!(
        out,
        "exact sequence 0 -> [U,U]_Lie -> H2(B, Leib) -> H2(B, Lie) -> 0: {}",
        ok_or_failed(r.exact_sequence)
    )
    .unwrap();
    writeln!(
        out,
        "dimension identity {} = {} + {}: {}",
        r.h2_leib,
        r.lie_verbal_of_u_leib,
        r.h2_lie,
        ok_or_failed(r.dimension_identity)
    )
    .unwrap();
    writeln!(
        out,
        "refinement dim H2(U(B, Lie), Leib) = {} = dim [U,U]_Lie: {}",
        r.h2_of_u_lie_in_leib,
        ok_or_failed(r.refinement_identity)
    )
    .unwrap();
    Ok(Outcome {
        text: out,
        ok: r.all_hold(),
    })
}

pub fn pruefer(p: u64, k_max: u32) -> Result<Outcome> {
    let report = check_pruefer(p, k_max)?;
    Ok(Outcome {
        text: format!("{report}\n"),
        ok: report.all_hold(),
    })
}
