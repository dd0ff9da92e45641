//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Diagnostics for failing criteria go to stderr.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use centrex::algebra::centre;
use centrex::extension::{compose, is_central, is_perfect, relative_commutator};
use centrex::pruefer::check_pruefer;
use centrex::samples;
use centrex::uce::{build_uce, check_theorem_h1h2, nested_compare, Violation};
use centrex::{Extension, Fp, Rational, Scalar, Variety};
use support::oracles::{chevalley_eilenberg_h2, free_h2};
use support::properties::{check, Field, PROPERTIES};

type Q = Rational;
type F5 = Fp<5>;

const PROPERTY_SEEDS: u64 = 500;
const DESK_RUNTIME: Duration = Duration::from_secs(1);

/// Outcome of one criterion: a one-line summary, or the reasons it failed.
type Verdict = Result<String, Vec<String>>;

type Criterion = (&'static str, fn() -> Verdict);

struct Findings(Vec<String>);

impl Findings {
    fn new() -> Self {
        Findings(Vec::new())
    }

    fn require(&mut self, holds: bool, what: impl Into<String>) {
        if !holds {
            self.0.push(what.into());
        }
    }

    fn verdict(self, summary: impl Into<String>) -> Verdict {
        if self.0.is_empty() {
            Ok(summary.into())
        } else {
            Err(self.0)
        }
    }
}

fn lib<T>(r: centrex::Result<T>) -> Result<T, Vec<String>> {
    r.map_err(|e| vec![format!("library error: {e}")])
}

fn centrex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centrex"))
        .args(args)
        .output()
        .expect("the centrex binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn counterexample_triple() -> centrex::Result<(Extension<Q>, Extension<Q>, Extension<Q>)> {
    let f = Extension::new(samples::example_f::<Q>(), Variety::naalg(), Variety::vect())?;
    let g = Extension::new(samples::example_g::<Q>(), Variety::naalg(), Variety::vect())?;
    let fg = compose(&f, &g)?;
    Ok((f, g, fg))
}

fn criterion_counterexample() -> Verdict {
    let start = Instant::now();
    let (f, g, fg) = lib(counterexample_triple())?;
    let mut out = Findings::new();
    out.require(lib(is_central(&f))?, "f is central");
    out.require(lib(is_central(&g))?, "g is central");
    out.require(!lib(is_central(&fg))?, "f.g is not central");
    out.require(lib(relative_commutator(&fg))?.dim() == 1, "dim [K,C]_Vect = 1 for f.g");
    out.require(centre(f.domain()).dim() == 1, "dim Z(B) = 1");
    out.require(f.kernel().dim() == 1, "dim Ker f = 1");
    out.require(centre(g.domain()).dim() == 1, "dim Z(C) = 1");
    out.require(g.kernel().dim() == 1, "dim Ker g = 1");
    out.require(lib(is_perfect(f.domain(), &Variety::vect()))?, "B is perfect");
    out.require(lib(is_perfect(f.codomain(), &Variety::vect()))?, "A is perfect");
    let computed = start.elapsed();

    let run_start = Instant::now();
    let run = centrex(&["paper-examples"]);
    let cli = run_start.elapsed();
    let text = stdout(&run);
    out.require(
        run.status.code() == Some(0),
        format!("paper-examples exits 0, got {:?}", run.status.code()),
    );
    for line in [
        "f : B -> A CENTRAL (dim [K,-]_Vect = 0): ok",
        "g : C -> B CENTRAL (dim [K,-]_Vect = 0): ok",
        "f.g : C -> A NOT-CENTRAL (dim [K,-]_Vect = 1): ok",
        "dim Z(B) = 1, dim Ker = 1: ok",
        "dim Z(C) = 1, dim Ker = 1: ok",
        "B PERFECT: ok",
        "A PERFECT: ok",
    ] {
        out.require(text.contains(line), format!("paper-examples prints `{line}`"));
    }
    out.require(computed < DESK_RUNTIME, format!("library runtime {computed:?} < 1 s"));
    out.require(cli < DESK_RUNTIME, format!("CLI runtime {cli:?} < 1 s"));
    out.verdict(format!("library {computed:.2?}, CLI {cli:.2?}"))
}

fn criterion_pruefer() -> Verdict {
    let start = Instant::now();
    let r = lib(check_pruefer(3, 6))?;
    let elapsed = start.elapsed();
    let mut out = Findings::new();
    out.require(r.perfect && r.perfectness_witnesses > 0, "perfectness witnesses exist");
    out.require(r.kernel_order == 3, format!("|Ker(u)| = 3, got {}", r.kernel_order));
    out.require(r.kernel_fixed_by_c, "c acts trivially on Ker(u)");
    out.require(r.stages.len() == 6, "stages k = 1..6");
    for s in &r.stages {
        out.require(
            s.hopf_order == 3,
            format!("stage {}: |H2| = 3, got {}", s.k, s.hopf_order),
        );
        out.require(
            s.torsion_order == 3,
            format!("stage {}: |ker(p·)| = 3, got {}", s.k, s.torsion_order),
        );
    }
    out.require(r.stage_inclusions_commute, "stage inclusions commute with c and u");
    out.require(elapsed < DESK_RUNTIME, format!("runtime {elapsed:?} < 1 s"));
    out.verdict(format!(
        "{} witnesses, every stage H2 of order 3, {elapsed:.2?}",
        r.perfectness_witnesses
    ))
}

fn sl2_cover<S: Scalar>(out: &mut Findings) -> Result<(), Vec<String>> {
    let sl2 = samples::sl2::<S>();
    let oracle = chevalley_eilenberg_h2(&sl2);
    let r = lib(build_uce(&sl2.into_ref(), &Variety::lie()))?;
    let field = S::field_tag();
    out.require(
        oracle == 0,
        format!("Chevalley–Eilenberg H2(sl2) = 0 over {field}, got {oracle}"),
    );
    out.require(
        r.h2.dim() == oracle,
        format!("dim H2(sl2) over {field} matches the oracle"),
    );
    out.require(
        r.u.map().is_isomorphism(),
        format!("u : U(sl2) -> sl2 is an isomorphism over {field}"),
    );
    Ok(())
}

fn criterion_uce_battery() -> Verdict {
    let mut out = Findings::new();
    let b = samples::example_b::<Q>();
    let oracle = free_h2(&b);
    let r = lib(build_uce(&b.into_ref(), &Variety::naalg()))?;
    out.require(r.domain().dim() == 9, format!("dim U(B) = 9, got {}", r.domain().dim()));
    out.require(r.h2.dim() == 6, format!("dim H2(B) = 6, got {}", r.h2.dim()));
    out.require(
        oracle == 6,
        format!("9 - rank of the multiplication matrix = 6, got {oracle}"),
    );
    sl2_cover::<Q>(&mut out)?;
    sl2_cover::<F5>(&mut out)?;
    out.verdict("dim U(B) = 9, dim H2(B) = 6; U(sl2) = sl2 over Q and F_5")
}

fn criterion_h1h2() -> Verdict {
    let mut out = Findings::new();
    let mut checked = 0;
    let lie_covers = [
        (
            "sl2 over Q",
            lib(build_uce(&samples::sl2::<Q>().into_ref(), &Variety::lie()))?.u,
        ),
        (
            "so3 over Q",
            lib(build_uce(&samples::so3::<Q>().into_ref(), &Variety::lie()))?.u,
        ),
        (
            "sl2 ⋉ V2 over Q",
            lib(build_uce(&samples::sl2_ltimes_v2::<Q>().into_ref(), &Variety::lie()))?.u,
        ),
    ];
    for (name, u) in &lie_covers {
        let cert = lib(check_theorem_h1h2(u))?;
        out.require(
            cert.within_uce_scope,
            format!("{name}: Lie is flagged as satisfying (UCE)"),
        );
        out.require(cert.h1_dim == 0, format!("{name}: H1(U) = 0, got {}", cert.h1_dim));
        out.require(
            cert.h2_dim == Some(0),
            format!("{name}: H2(U) = 0, got {:?}", cert.h2_dim),
        );
        out.require(cert.universal, format!("{name}: recognised as universal"));
        checked += 1;
    }
    let u = lib(build_uce(&samples::sl2::<F5>().into_ref(), &Variety::lie()))?.u;
    let cert = lib(check_theorem_h1h2(&u))?;
    out.require(
        cert.within_uce_scope && cert.h1_dim == 0 && cert.h2_dim == Some(0),
        "sl2 over F_5: H1(U) = H2(U) = 0",
    );
    checked += 1;
    let naalg = lib(build_uce(&samples::example_b::<Q>().into_ref(), &Variety::naalg()))?.u;
    let cert = lib(check_theorem_h1h2(&naalg))?;
    out.require(!cert.within_uce_scope, "the NAAlg cover is flagged outside (UCE) scope");
    out.verdict(format!(
        "{checked} Lie covers with H1 = H2 = 0; NAAlg cover flagged out of scope"
    ))
}

fn criterion_properties() -> Verdict {
    let mut out = Findings::new();
    let mut instances = 0;
    for property in PROPERTIES {
        for field in [Field::Q, Field::F5] {
            for seed in 0..PROPERTY_SEEDS {
                if let Err(msg) = check(property, field, seed) {
                    out.require(
                        false,
                        format!("{} over {field:?}, seed {seed}: {msg}", property.label()),
                    );
                }
                instances += 1;
            }
        }
    }
    out.verdict(format!(
        "{} properties x {PROPERTY_SEEDS} seeds x 2 fields = {instances} instances, 0 failures",
        PROPERTIES.len()
    ))
}

fn criterion_nested() -> Verdict {
    let mut out = Findings::new();
    for (name, b) in [("sl2", samples::sl2::<Q>()), ("so3", samples::so3::<Q>())] {
        let r = lib(nested_compare(&b.into_ref()))?;
        out.require(r.reflection_iso, format!("{name}: I(u_Leib) is isomorphic to u_Lie"));
        out.require(r.exact_sequence, format!("{name}: exact sequence holds"));
        out.require(
            r.dimension_identity && r.h2_leib == r.lie_verbal_of_u_leib + r.h2_lie,
            format!(
                "{name}: dim H2(B, Leib) {} = {} + {}",
                r.h2_leib, r.lie_verbal_of_u_leib, r.h2_lie
            ),
        );
        out.require(r.refinement_identity, format!("{name}: refinement identity holds"));
    }
    out.verdict("sl2 and so3: reflection, exact sequence, dimension and refinement identities")
}

fn read_violations(path: &std::path::Path) -> Result<Vec<Violation>, Vec<String>> {
    let text = std::fs::read_to_string(path).map_err(|e| vec![e.to_string()])?;
    serde_json::from_str(&text).map_err(|e| vec![e.to_string()])
}

fn criterion_search() -> Verdict {
    let mut out = Findings::new();
    let dir = tempfile::tempdir().map_err(|e| vec![e.to_string()])?;

    let lie = centrex(&["search-uce-violation", "--ambient", "Lie", "--trials", "500"]);
    out.require(
        lie.status.code() == Some(0),
        format!("Lie search exits 0, got {:?}", lie.status.code()),
    );
    out.require(
        stdout(&lie).contains("violations: 0\n"),
        "Lie search over 500 trials is empty",
    );

    let injected_path = dir.path().join("injected.json");
    let injected = centrex(&[
        "search-uce-violation",
        "--ambient",
        "NAAlg",
        "--inject-paper",
        "--trials",
        "0",
        "--out",
        injected_path.to_str().expect("utf-8 temp path"),
    ]);
    out.require(injected.status.code() == Some(0), "NAAlg injected search exits 0");
    let found = read_violations(&injected_path)?;
    out.require(found.len() == 1, format!("exactly one violation, got {}", found.len()));
    out.require(
        found.first().is_some_and(|v| v.is_known_counterexample::<Q>()),
        "the violation is the bundled counterexample",
    );
    for v in &found {
        out.require(
            lib(v.replay::<Q>(&Variety::naalg()))?,
            format!("trial {} replays", v.trial),
        );
    }

    let random_path = dir.path().join("random.json");
    let args = [
        "search-uce-violation",
        "--ambient",
        "NAAlg",
        "--inject-paper",
        "--trials",
        "50",
        "--seed",
        "11",
        "--out",
        random_path.to_str().expect("utf-8 temp path"),
    ];
    let first = centrex(&args);
    let found = read_violations(&random_path)?;
    out.require(
        found
            .first()
            .is_some_and(|v| v.trial == 0 && v.is_known_counterexample::<Q>()),
        "with random trials the first violation is still the bundled counterexample",
    );
    for v in &found {
        out.require(
            lib(v.replay::<Q>(&Variety::naalg()))?,
            format!("trial {} replays", v.trial),
        );
    }
    let second = centrex(&args);
    let again = read_violations(&random_path)?;
    out.require(
        stdout(&first) == stdout(&second) && found == again,
        "same seed, same output",
    );
    let lie_again = centrex(&["search-uce-violation", "--ambient", "Lie", "--trials", "500"]);
    out.require(stdout(&lie) == stdout(&lie_again), "Lie search is deterministic");
    out.verdict(format!(
        "Lie: 0 of 500; NAAlg injected: 1 (the counterexample); NAAlg seed 11: {} violations, all replayed",
        found.len()
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 non-associative counterexample", criterion_counterexample),
        ("2 Prüfer module, p = 3, k <= 6", criterion_pruefer),
        ("3 universal central extension battery", criterion_uce_battery),
        ("4 H1/H2 recognition in Lie", criterion_h1h2),
        ("5 property suites", criterion_properties),
        ("6 Leibniz versus Lie covers", criterion_nested),
        ("7 (UCE) violation search", criterion_search),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        match run() {
            Ok(summary) => println!("PASS criterion {name}: {summary}"),
            Err(reasons) => {
                failures += 1;
                println!("FAIL criterion {name}: {}", reasons.join("; "));
                for r in reasons {
                    eprintln!("  {name}: {r}");
                }
            }
        }
    }
    println!("{} of 7 criteria passed", 7 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
