//! Bounded bidirectional breadth-first search for equational proofs.
//!
//! Both sides are coherence-normalized first; search then works on normal
//! forms with [`rewrite_step_modulo`]. Rules are tried in registration
//! order, positions leftmost-outermost, queues are FIFO, and a forward level
//! is always expanded before the matching backward level, so the same
//! input always yields the same trace.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use super::{
    normalize_coherence, positions, rewrite_step_modulo, slots, standard_axioms, Direction, Equation, Position,
    RewriteRule,
};
use crate::syntax::parse_term;
use crate::term::MorphismTerm;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Distinct terms visited across both directions.
    pub max_states: usize,
    /// Terms larger than this multiple of the larger side are pruned.
    pub size_factor: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_states: 10_000, size_factor: 4 }
    }
}

impl Budget {
    pub fn states(max_states: usize) -> Self {
        Budget { max_states, ..Budget::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepRule {
    /// Passage between a term and its coherence normal form. Forward goes
    /// from a term to its normal form, backward the other way.
    Coherence,
    Rule(String),
}

impl fmt::Display for StepRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepRule::Coherence => f.write_str("coherence"),
            StepRule::Rule(name) => f.write_str(name),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofStep {
    pub rule: StepRule,
    pub dir: Direction,
    pub pos: Position,
    pub before: MorphismTerm,
    pub after: MorphismTerm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTrace {
    pub lhs: MorphismTerm,
    pub rhs: MorphismTerm,
    pub steps: Vec<ProofStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exhausted {
    pub states: usize,
    pub forward_frontier: usize,
    pub backward_frontier: usize,
    pub pruned: usize,
    pub depth: usize,
}

impl fmt::Display for Exhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "search exhausted: {} states, depth {}, frontiers {}/{}, {} pruned by size",
            self.states, self.depth, self.forward_frontier, self.backward_frontier, self.pruned
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("step {index}: unknown rule '{rule}'")]
    UnknownRule { index: usize, rule: String },
    #[error("step {index}: does not start from the current term")]
    Discontinuous { index: usize },
    #[error("step {index}: recorded result differs from the rewrite ({detail})")]
    WrongResult { index: usize, detail: String },
    #[error("trace ends at {found}, expected {expected}")]
    WrongEnd { found: String, expected: String },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

impl ProofTrace {
    /// Steps that use an axiom, ignoring coherence passages.
    pub fn rule_steps(&self) -> usize {
        self.steps.iter().filter(|s| s.rule != StepRule::Coherence).count()
    }

    pub fn replay(&self) -> Result<(), ReplayError> {
        self.replay_with(&standard_axioms())
    }

    /// Re-executes every step from `lhs` and checks that it ends at `rhs`.
    pub fn replay_with(&self, rules: &[RewriteRule]) -> Result<(), ReplayError> {
        let mut current = self.lhs.clone();
        for (index, step) in self.steps.iter().enumerate() {
            if step.before != current {
                return Err(ReplayError::Discontinuous { index });
            }
            let ok = match &step.rule {
                StepRule::Coherence => match step.dir {
                    Direction::Forward => normalize_coherence(&step.before) == step.after,
                    Direction::Backward => normalize_coherence(&step.after) == step.before,
                },
                StepRule::Rule(name) => {
                    let rule = rules
                        .iter()
                        .find(|r| &r.name == name)
                        .ok_or_else(|| ReplayError::UnknownRule { index, rule: name.clone() })?;
                    match rewrite_step_modulo(&step.before, rule, &step.pos, step.dir) {
                        Ok(t) => t == step.after,
                        Err(e) => return Err(ReplayError::WrongResult { index, detail: e.to_string() }),
                    }
                }
            };
            if !ok {
                return Err(ReplayError::WrongResult { index, detail: format!("expected {}", step.after) });
            }
            current = step.after.clone();
        }
        if current != self.rhs {
            return Err(ReplayError::WrongEnd { found: current.to_string(), expected: self.rhs.to_string() });
        }
        Ok(())
    }

    /// Line-oriented text: `lhs | term`, `rhs | term`, then one
    /// `rule | dir | position | resulting term` line per step.
    pub fn to_text(&self) -> String {
        let mut out = format!("lhs | {}\nrhs | {}\n", self.lhs, self.rhs);
        for s in &self.steps {
            out.push_str(&format!("{} | {} | {} | {}\n", s.rule, s.dir, s.pos, s.after));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<ProofTrace, ReplayError> {
        let fmt_err = |line: usize, message: String| ReplayError::Format { line, message };
        let term = |line: usize, src: &str| parse_term(src.trim()).map_err(|e| fmt_err(line, e.to_string()));
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let mut header = |key: &str| -> Result<MorphismTerm, ReplayError> {
            let (n, l) = lines.next().ok_or_else(|| fmt_err(0, format!("missing '{key}' line")))?;
            let rest = l
                .strip_prefix(key)
                .and_then(|r| r.trim_start().strip_prefix('|'))
                .ok_or_else(|| fmt_err(n + 1, format!("expected '{key} | term'")))?;
            term(n + 1, rest)
        };
        let lhs = header("lhs")?;
        let rhs = header("rhs")?;
        let mut steps = Vec::new();
        let mut current = lhs.clone();
        for (n, l) in lines {
            let parts: Vec<&str> = l.splitn(4, '|').map(str::trim).collect();
            if parts.len() != 4 {
                return Err(fmt_err(n + 1, "expected 'rule | dir | position | term'".into()));
            }
            let rule = match parts[0] {
                "coherence" => StepRule::Coherence,
                name => StepRule::Rule(name.to_string()),
            };
            let dir = parts[1].parse().map_err(|e| fmt_err(n + 1, e))?;
            let pos = parts[2].parse().map_err(|e| fmt_err(n + 1, e))?;
            let after = term(n + 1, parts[3])?;
            steps.push(ProofStep { rule, dir, pos, before: current, after: after.clone() });
            current = after;
        }
        Ok(ProofTrace { lhs, rhs, steps })
    }
}

struct Edge {
    from: MorphismTerm,
    rule: usize,
    dir: Direction,
    pos: Position,
}

/// Searches with the standard axioms.
pub fn prove_equal(eq: &Equation, budget: Budget) -> Result<ProofTrace, Exhausted> {
    prove_equal_with(eq, &standard_axioms(), budget)
}

pub fn prove_equal_with(eq: &Equation, rules: &[RewriteRule], budget: Budget) -> Result<ProofTrace, Exhausted> {
    let mut trace = ProofTrace { lhs: eq.lhs.clone(), rhs: eq.rhs.clone(), steps: Vec::new() };
    if eq.lhs == eq.rhs {
        return Ok(trace);
    }
    let nl = normalize_coherence(&eq.lhs);
    let nr = normalize_coherence(&eq.rhs);
    if nl != eq.lhs {
        trace.steps.push(ProofStep {
            rule: StepRule::Coherence,
            dir: Direction::Forward,
            pos: Position::root(),
            before: eq.lhs.clone(),
            after: nl.clone(),
        });
    }
    let middle = search(&nl, &nr, rules, budget)?;
    trace.steps.extend(middle);
    if nr != eq.rhs {
        trace.steps.push(ProofStep {
            rule: StepRule::Coherence,
            dir: Direction::Backward,
            pos: Position::root(),
            before: nr,
            after: eq.rhs.clone(),
        });
    }
    Ok(trace)
}

fn successors<'r>(
    t: &MorphismTerm,
    rules: &'r [RewriteRule],
) -> impl Iterator<Item = (usize, Direction, Position, MorphismTerm)> + 'r {
    let positions = positions(t);
    let t = t.clone();
    rules
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_coherence_trivial())
        .flat_map(move |(ri, r)| {
            let t = t.clone();
            let positions = positions.clone();
            r.orientation.directions().iter().flat_map(move |&dir| {
                let t = t.clone();
                positions.clone().into_iter().filter_map(move |p| {
                    rewrite_step_modulo(&t, r, &p, dir).ok().map(|out| (ri, dir, p, out))
                })
            })
        })
}

fn search(
    start: &MorphismTerm,
    goal: &MorphismTerm,
    rules: &[RewriteRule],
    budget: Budget,
) -> Result<Vec<ProofStep>, Exhausted> {
    if start == goal {
        return Ok(Vec::new());
    }
    let cap = budget.size_factor * start.size().max(goal.size());
    // Forward parents: term <- (from, rule, dir, pos) with from => term.
    let mut fwd: HashMap<MorphismTerm, Option<Edge>> = HashMap::new();
    // Backward parents: term -> (from, rule, dir, pos) with term => from;
    // both halves rewrite with the allowed directions, so they meet at a
    // common reduct.
    let mut bwd: HashMap<MorphismTerm, Option<Edge>> = HashMap::new();
    fwd.insert(start.clone(), None);
    bwd.insert(goal.clone(), None);
    let mut fq = vec![start.clone()];
    let mut bq = vec![goal.clone()];
    let mut pruned = 0;
    let mut depth = 0;
    let exhausted = |fwd: &HashMap<_, _>, bwd: &HashMap<_, _>, fq: &Vec<_>, bq: &Vec<_>, pruned, depth| Exhausted {
        states: fwd.len() + bwd.len(),
        forward_frontier: fq.len(),
        backward_frontier: bq.len(),
        pruned,
        depth,
    };

    while !fq.is_empty() || !bq.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for t in &fq {
            for (ri, dir, pos, out) in successors(t, rules) {
                if fwd.contains_key(&out) {
                    continue;
                }
                if out.size() > cap {
                    pruned += 1;
                    continue;
                }
                let meet = bwd.contains_key(&out);
                fwd.insert(out.clone(), Some(Edge { from: t.clone(), rule: ri, dir, pos }));
                if meet {
                    return Ok(assemble(&out, &fwd, &bwd, rules));
                }
                if fwd.len() + bwd.len() >= budget.max_states {
                    return Err(exhausted(&fwd, &bwd, &next, &bq, pruned, depth));
                }
                next.push(out);
            }
        }
        fq = next;

        let mut next = Vec::new();
        for t in &bq {
            for (ri, dir, _, out) in successors(t, rules) {
                if bwd.contains_key(&out) {
                    continue;
                }
                if out.size() > cap {
                    pruned += 1;
                    continue;
                }
                // The trace walks this edge the other way, out => t.
                let dir = dir.flip();
                let Some(pos) = positions(&out)
                    .into_iter()
                    .chain(slots(&out))
                    .find(|p| rewrite_step_modulo(&out, &rules[ri], p, dir).ok().as_ref() == Some(t))
                else {
                    continue;
                };
                let meet = fwd.contains_key(&out);
                bwd.insert(out.clone(), Some(Edge { from: t.clone(), rule: ri, dir, pos }));
                if meet {
                    return Ok(assemble(&out, &fwd, &bwd, rules));
                }
                if fwd.len() + bwd.len() >= budget.max_states {
                    return Err(exhausted(&fwd, &bwd, &fq, &next, pruned, depth));
                }
                next.push(out);
            }
        }
        bq = next;
    }
    Err(exhausted(&fwd, &bwd, &fq, &bq, pruned, depth))
}

fn assemble(
    meet: &MorphismTerm,
    fwd: &HashMap<MorphismTerm, Option<Edge>>,
    bwd: &HashMap<MorphismTerm, Option<Edge>>,
    rules: &[RewriteRule],
) -> Vec<ProofStep> {
    let step = |e: &Edge, before: &MorphismTerm, after: &MorphismTerm| ProofStep {
        rule: StepRule::Rule(rules[e.rule].name.clone()),
        dir: e.dir,
        pos: e.pos.clone(),
        before: before.clone(),
        after: after.clone(),
    };
    let mut head = Vec::new();
    let mut cur = meet;
    while let Some(Some(e)) = fwd.get(cur) {
        head.push(step(e, &e.from, cur));
        cur = &e.from;
    }
    head.reverse();
    let mut cur = meet;
    while let Some(Some(e)) = bwd.get(cur) {
        head.push(step(e, cur, &e.from));
        cur = &e.from;
    }
    head
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_equation_sides;

    fn eq(src: &str) -> Equation {
        let (l, r) = parse_equation_sides(src).unwrap();
        Equation::new(l, r).unwrap()
    }

    #[test]
    fn syntactic_equality_needs_no_steps() {
        let t = prove_equal(&eq("mu[A] ; delta[A] = mu[A] ; delta[A]"), Budget::default()).unwrap();
        assert!(t.steps.is_empty());
        t.replay().unwrap();
    }

    #[test]
    fn frobenius_relation_in_one_rule_step() {
        let e = eq("mu[A] ; delta[A] = id[A] * delta[A] ; alpha[A,A,A]~ ; mu[A] * id[A]");
        let t = prove_equal(&e, Budget::default()).unwrap();
        assert_eq!(t.rule_steps(), 1);
        t.replay().unwrap();
    }

    #[test]
    fn braid_invertibility() {
        let e = eq("sigma[A,A] ; sigma[A,A]~ = id[A*A]");
        let t = prove_equal(&e, Budget::default()).unwrap();
        t.replay().unwrap();
    }

    #[test]
    fn yang_baxter_trace() {
        let e = eq(
            "sigma[A,A] * id[A] ; id[A] * sigma[A,A] ; sigma[A,A] * id[A] = \
             id[A] * sigma[A,A] ; sigma[A,A] * id[A] ; id[A] * sigma[A,A]",
        );
        let t = prove_equal(&e, Budget::default()).unwrap();
        t.replay().unwrap();
        let rules: Vec<String> = t.steps.iter().map(|s| format!("{} {}", s.rule, s.dir)).collect();
        assert_eq!(
            rules,
            ["braid.hexagon.left fwd", "braid.naturality bwd", "braid.hexagon.left bwd"]
        );
    }

    #[test]
    fn text_round_trip_replays() {
        let e = eq("id[A] * delta[A] ; alpha[A,A,A]~ ; mu[A] * id[A] = mu[A] ; delta[A]");
        let t = prove_equal(&e, Budget::default()).unwrap();
        let back = ProofTrace::from_text(&t.to_text()).unwrap();
        assert_eq!(back, t);
        back.replay().unwrap();
    }

    #[test]
    fn tampered_trace_is_rejected() {
        let e = eq("mu[A] ; delta[A] = id[A] * delta[A] ; alpha[A,A,A]~ ; mu[A] * id[A]");
        let mut t = prove_equal(&e, Budget::default()).unwrap();
        t.rhs = crate::syntax::parse_term("mu[A] ; delta[A]").unwrap();
        assert!(t.replay().is_err());
    }

    #[test]
    fn unprovable_reports_exhaustion() {
        // Commutativity is not an axiom. It holds in the built-in models but
        // not in matrix algebras.
        let e = eq("sigma[A,A] ; mu[A] = mu[A]");
        let ex = prove_equal(&e, Budget::states(500)).unwrap_err();
        assert!(ex.states > 0);
    }
}
