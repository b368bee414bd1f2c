use cobord::corpus::preset;
use cobord::rewrite::{prove_equal, Budget, ProofTrace};
use cobord::semantics::{equal_in, FrobeniusModel};

fn prove(name: &str) -> ProofTrace {
    let eq = preset(name).unwrap().ground().unwrap();
    let trace = prove_equal(&eq, Budget::states(10_000)).unwrap_or_else(|e| panic!("{name}: {e}"));
    trace.replay().unwrap_or_else(|e| panic!("{name}: {e}"));
    assert_eq!(trace.lhs, eq.lhs);
    assert_eq!(trace.rhs, eq.rhs);
    trace
}

#[test]
fn yang_baxter_is_derived() {
    let t = prove("yang-baxter@A,A,A");
    assert!(t.rule_steps() > 0);
}

#[test]
fn frobenius_relation_is_derived() {
    for name in ["frobenius@A", "frobenius-right@A", "frobenius@C"] {
        assert!(prove(name).rule_steps() > 0);
    }
}

#[test]
fn braid_invertibility_is_derived() {
    prove("braid-inverse@A,A");
    prove("braid-inverse@A,C");
}

#[test]
fn traces_are_deterministic() {
    let a = prove("yang-baxter@A,A,A").to_text();
    let b = prove("yang-baxter@A,A,A").to_text();
    assert_eq!(a, b);
}

#[test]
fn trace_text_round_trips_and_replays() {
    let t = prove("assoc@A");
    let back = ProofTrace::from_text(&t.to_text()).unwrap();
    assert_eq!(back, t);
    back.replay().unwrap();
}

#[test]
fn every_intermediate_term_has_the_same_meaning() {
    let t = prove("yang-baxter@A,A,A");
    for m in [FrobeniusModel::khovanov(), FrobeniusModel::lee()] {
        for s in &t.steps {
            assert!(equal_in(&s.before, &s.after, &m).unwrap());
        }
    }
}

#[test]
fn tiny_budget_is_exhausted() {
    let eq = preset("yang-baxter@A,A,A").unwrap().ground().unwrap();
    let e = prove_equal(&eq, Budget::states(3)).unwrap_err();
    assert!(e.states <= 3 + e.forward_frontier + e.backward_frontier);
}

#[test]
fn whole_corpus_is_derived_within_budget() {
    for p in cobord::corpus::theorem_corpus() {
        prove(&p.name);
    }
}

#[test]
fn zigzag_needs_both_halves() {
    let t = prove("zigzag@A");
    assert!(t.steps.iter().any(|s| s.pos.window.is_some_and(|(_, len)| len == 0)));
}
