use std::path::PathBuf;
use std::time::{Duration, Instant};

use cobord::corpus::{preset, theorem_corpus};
use cobord::khovanov::{apply_U, HomologyState, LaurentPoly2};
use cobord::loop_braid::{check_relations, concat_reduce, to_permutations, Letter, LoopBraidWord};
use cobord::rewrite::{instantiate, prove_equal, standard_axioms, Budget, RewriteRule, Subst};
use cobord::semantics::{closed_surface_value, equal_in, validate_model, FrobeniusModel, Law, Q};
use cobord::term::{build, Atom, Generator, MorphismTerm, Term};
use cobord::tptp::{emit, normalize_whitespace, parse, parse_szs, SzsStatus};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("cobord").chain(args.iter().copied());
    let code = cobord_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn models() -> [FrobeniusModel; 2] {
    [FrobeniusModel::khovanov(), FrobeniusModel::lee()]
}

fn tangle_polynomials() -> Outcome {
    let start = Instant::now();
    let expected = [
        ("barnatan", "A^2 + A^4 + t^2*A^8 + t^2*A^12"),
        ("khovanov", "A^2 + A^4 + t*A^6 + t*A^8 + t^2*A^8 + 2*t^2*A^10 + t^2*A^12"),
    ];
    for (table, want) in expected {
        let (code, out, err) = cli(&["khovanov", "--table", table]);
        ensure(code == 0, || format!("{table}: exit {code}: {err}"))?;
        ensure(out.trim_end() == want, || format!("{table}: printed {out:?}"))?;
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("{} | {}", expected[0].1, expected[1].1))
}

fn eigen_action() -> Outcome {
    let (p, s) = apply_U(&HomologyState::new(2, 10, 2));
    ensure(p == LaurentPoly2::monomial(2, 2, 10), || format!("(2,10,2) gives {p}"))?;
    ensure(s == HomologyState::new(2, 10, 2), || "state changed".into())?;
    let (q, _) = apply_U(&HomologyState::new(0, 2, 1));
    ensure(q == LaurentPoly2::monomial(1, 0, 2), || format!("(0,2,1) gives {q}"))?;
    Ok(format!("{p}, {q}"))
}

fn model_validity() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for m in models() {
        let report = validate_model(&m);
        for law in Law::ALL {
            for atom in Atom::ALL {
                let c = report.law(law, atom).ok_or_else(|| format!("{}: {} on {atom} not checked", m.name, law.name()))?;
                ensure(c.passed(), || format!("{}: {} on {atom} fails at {:?}", m.name, law.name(), c.witness))?;
                n += 1;
            }
        }
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("{n} law checks"))
}

/// Non-trivial endomorphisms of `A` for morphism variables.
fn endomorphisms() -> Vec<MorphismTerm> {
    let g = |g: Generator| Term::gen(g);
    vec![
        Term::id(build::a()),
        Term::seq(g(Generator::Mu(Atom::A)), g(Generator::Delta(Atom::A))),
        Term::seq(g(Generator::Eta(Atom::A)), g(Generator::Epsilon(Atom::A))),
    ]
}

fn instances_at_a(rule: &RewriteRule) -> Vec<(MorphismTerm, MorphismTerm)> {
    let mut substs = vec![Subst::new()];
    for v in rule.variables() {
        let c = v.trim_start_matches('?').chars().next().unwrap();
        substs = substs
            .into_iter()
            .flat_map(|s| {
                if v.starts_with('?') {
                    endomorphisms().into_iter().map(|f| s.clone().with_morphism(c, f)).collect::<Vec<_>>()
                } else {
                    vec![s.with_object(c, build::a())]
                }
            })
            .collect();
    }
    substs
        .iter()
        .filter_map(|s| Some((instantiate(&rule.lhs, s).ok()?, instantiate(&rule.rhs, s).ok()?)))
        .collect()
}

fn rule_soundness() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for rule in standard_axioms() {
        let inst = instances_at_a(&rule);
        ensure(!inst.is_empty(), || format!("{} has no instance at A", rule.name))?;
        for (l, r) in inst {
            for m in models() {
                let eq = equal_in(&l, &r, &m).map_err(|e| format!("{}: {e}", rule.name))?;
                ensure(eq, || format!("{} fails in {}: {l} = {r}", rule.name, m.name))?;
                n += 1;
            }
        }
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!("{} rules, {n} instance checks", standard_axioms().len()))
}

fn theorem_corpus_holds() -> Outcome {
    let corpus = theorem_corpus();
    let mut required: Vec<String> = vec!["conj".into(), "zigzag".into()];
    required.extend((2..=18).map(|i| format!("conj{i}")));
    for name in &required {
        for atom in ["A", "C"] {
            let full = format!("{name}@{atom}");
            ensure(corpus.iter().any(|p| p.name == full), || format!("{full} missing from the corpus"))?;
        }
    }
    for p in &corpus {
        let eq = p.ground().ok_or_else(|| format!("{} is not ground", p.name))?;
        for m in models() {
            let ok = equal_in(&eq.lhs, &eq.rhs, &m).map_err(|e| format!("{}: {e}", p.name))?;
            ensure(ok, || format!("{} fails in {}", p.name, m.name))?;
        }
    }
    let mut steps = Vec::new();
    for name in ["yang-baxter@A,A,A", "frobenius@A", "frobenius-right@A", "braid-inverse@A,A"] {
        let eq = preset(name).map_err(|e| e.to_string())?.ground().unwrap();
        let trace = prove_equal(&eq, Budget::states(10_000)).map_err(|e| format!("{name}: {e}"))?;
        trace.replay().map_err(|e| format!("{name}: {e}"))?;
        steps.push(format!("{name} in {}", trace.rule_steps()));
    }
    Ok(format!("{} theorems in K and L; traces: {}", corpus.len(), steps.join(", ")))
}

fn surface_values() -> Outcome {
    let k = FrobeniusModel::khovanov();
    let s0 = closed_surface_value(&k, 0).map_err(|e| e.to_string())?;
    let s1 = closed_surface_value(&k, 1).map_err(|e| e.to_string())?;
    ensure(s0 == Q::from_integer(0), || format!("sphere is {s0}"))?;
    ensure(s1 == Q::from_integer(2), || format!("torus is {s1}"))?;
    Ok(format!("sphere {s0}, torus {s1}"))
}

fn tptp_fidelity() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden");
    let goldens = [
        ("pentagon@A,A,A,A", "pentagon"),
        ("triangle@A,A", "triangle"),
        ("braid-naturality", "braiding"),
        ("hexagon@A,A,A", "hexagon"),
        ("yang-baxter@A,A,A", "yang-baxter"),
    ];
    let axioms = standard_axioms();
    for (name, file) in goldens {
        let path = dir.join(format!("{file}.p"));
        let reference = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let problem = preset(name).map_err(|e| e.to_string())?.encode(&axioms, false).map_err(|e| e.to_string())?;
        let emitted = emit(&problem);
        ensure(normalize_whitespace(&emitted) == normalize_whitespace(&reference), || format!("{file}.p differs"))?;
    }
    let mut n = 0;
    for p in theorem_corpus() {
        for strict in [false, true] {
            let problem = p.encode(&axioms, strict).map_err(|e| format!("{}: {e}", p.name))?;
            let back = parse(&emit(&problem)).map_err(|e| format!("{}: {e}", p.name))?;
            ensure(back == problem, || format!("{} does not round-trip", p.name))?;
            n += 1;
        }
    }
    let line = "% RESULT: SOT_19PD5B - LEO-II---1.6.2 says Theorem - CPU = 0.01 WC = 0.04";
    let r = parse_szs(line);
    ensure(r.len() == 1, || format!("{} results", r.len()))?;
    ensure(
        (r[0].status, r[0].cpu, r[0].wc) == (SzsStatus::Theorem, Some(0.01), Some(0.04)),
        || format!("parsed {:?}", r[0]),
    )?;
    Ok(format!("5 goldens, {n} round trips, SZS (Theorem, 0.01, 0.04)"))
}

fn arb_word(n: usize) -> impl Strategy<Value = LoopBraidWord> {
    let letter = (0..3u8, 1..n).prop_map(|(k, i)| match k {
        0 => Letter::sigma(i),
        1 => Letter::sigma_inv(i),
        _ => Letter::rho(i),
    });
    prop::collection::vec(letter, 0..16).prop_map(move |ls| LoopBraidWord::new(n, ls).unwrap())
}

fn loop_braid() -> Outcome {
    for n in [3, 4] {
        let report = check_relations(n);
        ensure(!report.checks.is_empty(), || format!("n={n}: no relations checked"))?;
        ensure(report.all_hold(), || format!("n={n}:\n{report}"))?;
    }
    let mut runner = TestRunner::deterministic();
    let pair = (arb_word(4), arb_word(4));
    for i in 0..1000 {
        let (a, b) = pair.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        let lhs = to_permutations(&concat_reduce(&a, &b).map_err(|e| e.to_string())?);
        let rhs = to_permutations(&a).compose(&to_permutations(&b));
        ensure(lhs == rhs, || format!("pair {i}: {a} / {b}"))?;
    }
    Ok(format!("{} + {} relations, 1000 word pairs", check_relations(3).checks.len(), check_relations(4).checks.len()))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut traces = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("run{run}.trace"));
        let (code, _, err) = cli(&["prove", "yang-baxter@A,A,A", "-o", path.to_str().unwrap()]);
        ensure(code == 0, || format!("exit {code}: {err}"))?;
        traces.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(!traces[0].is_empty() && traces[0] == traces[1], || "traces differ".into())?;
    Ok(format!("{} identical bytes", traces[0].len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("tangle polynomials", tangle_polynomials),
        ("eigen-action", eigen_action),
        ("model validity", model_validity),
        ("rule soundness sweep", rule_soundness),
        ("theorem corpus", theorem_corpus_holds),
        ("surface values", surface_values),
        ("TPTP fidelity", tptp_fidelity),
        ("loop braid", loop_braid),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} ({name}): PASS - {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL - {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
