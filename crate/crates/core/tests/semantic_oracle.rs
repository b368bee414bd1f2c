use std::collections::BTreeMap;

use cobord::corpus::theorem_corpus;
use cobord::rewrite::{instantiate, normalize_coherence, standard_axioms, Subst};
use cobord::semantics::{equal_in, evaluate, FrobeniusModel, Q};
use cobord::syntax::parse_term;
use cobord::term::{Atom, Generator, MorphismTerm, Obj, ObjectExpr, Term};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Sparse vectors over tensor powers of `span{1, x}`, keyed by the list of
/// basis indices of the factors (0 for `1`, 1 for `x`).
type Vector = BTreeMap<Vec<u8>, Q>;

/// `x² = s`, `ε(1) = 0`, `ε(x) = 1`; `s = 0` is K and `s = 1` is L.
struct Oracle {
    s: Q,
}

impl Oracle {
    fn mul(&self, i: u8, j: u8) -> Vec<(Vec<u8>, Q)> {
        match (i, j) {
            (0, k) | (k, 0) => vec![(vec![k], Q::one())],
            _ => vec![(vec![0], self.s)],
        }
    }

    fn comul(&self, i: u8) -> Vec<(Vec<u8>, Q)> {
        if i == 0 {
            vec![(vec![0, 1], Q::one()), (vec![1, 0], Q::one())]
        } else {
            vec![(vec![1, 1], Q::one()), (vec![0, 0], self.s)]
        }
    }

    fn basis(&self, g: &Generator, idx: &[u8]) -> Vec<(Vec<u8>, Q)> {
        use Generator::*;
        match g {
            Mu(_) => self.mul(idx[0], idx[1]),
            Eta(_) => vec![(vec![0], Q::one())],
            Delta(_) => self.comul(idx[0]),
            Epsilon(_) => vec![(vec![], if idx[0] == 1 { Q::one() } else { Q::zero() })],
            Sigma(x, _) | SigmaInv(_, x) => {
                let n = x.atoms().len();
                vec![([&idx[n..], &idx[..n]].concat(), Q::one())]
            }
            _ => vec![(idx.to_vec(), Q::one())],
        }
    }

    fn apply(&self, t: &MorphismTerm, v: &Vector) -> Vector {
        let mut out = Vector::new();
        let mut add = |k: Vec<u8>, c: Q| {
            if !c.is_zero() {
                let e = out.entry(k).or_insert_with(Q::zero);
                *e += c;
            }
        };
        match t {
            Term::Id(_) => return v.clone(),
            Term::Seq(after, before) => return self.apply(after, &self.apply(before, v)),
            Term::Var(m) => match *m {},
            Term::Par(l, r) => {
                let n = l.dom().atoms().len();
                for (idx, c) in v {
                    let lv = self.apply(l, &single(&idx[..n]));
                    let rv = self.apply(r, &single(&idx[n..]));
                    for (li, lc) in &lv {
                        for (ri, rc) in &rv {
                            add([&li[..], &ri[..]].concat(), *c * lc * rc);
                        }
                    }
                }
            }
            Term::Gen(g) => {
                for (idx, c) in v {
                    for (k, d) in self.basis(g, idx) {
                        add(k, *c * d);
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

fn single(idx: &[u8]) -> Vector {
    Vector::from([(idx.to_vec(), Q::one())])
}

fn digits(mut n: usize, len: usize) -> Vec<u8> {
    let mut d = vec![0; len];
    for i in (0..len).rev() {
        d[i] = (n % 2) as u8;
        n /= 2;
    }
    d
}

fn index(d: &[u8]) -> usize {
    d.iter().fold(0, |acc, &b| acc * 2 + b as usize)
}

fn models() -> [(FrobeniusModel, Oracle); 2] {
    [
        (FrobeniusModel::khovanov(), Oracle { s: Q::zero() }),
        (FrobeniusModel::lee(), Oracle { s: Q::one() }),
    ]
}

fn agrees(t: &MorphismTerm) -> Result<(), String> {
    for (m, oracle) in models() {
        let mat = evaluate(t, &m).map_err(|e| e.to_string())?;
        let (n_in, n_out) = (t.dom().atoms().len(), t.cod().atoms().len());
        assert_eq!((mat.cols, mat.rows), (1 << n_in, 1 << n_out));
        for c in 0..mat.cols {
            let v = oracle.apply(t, &single(&digits(c, n_in)));
            for r in 0..mat.rows {
                let want = v.get(&digits(r, n_out)).copied().unwrap_or_else(Q::zero);
                if mat.get(r, c) != want {
                    return Err(format!("{t} in {}: entry ({r}, {c}) is {} but oracle gives {want}", m.name, mat.get(r, c)));
                }
            }
            assert!(v.keys().all(|k| index(k) < mat.rows));
        }
    }
    Ok(())
}

/// A step acting on the current list of factors: `(kind, position, extra)`.
type Step = (u8, usize, u8);

fn atom(b: bool) -> Atom {
    if b {
        Atom::C
    } else {
        Atom::A
    }
}

fn obj(atoms: &[Atom]) -> ObjectExpr {
    Obj::from_factors(atoms.iter().map(|&a| Obj::Atom(a)).collect())
}

/// Builds a strictly typed chain of layers `id ⊗ g ⊗ id`; steps that do not
/// fit the current factors are skipped.
fn layered(start: &[bool], steps: &[Step]) -> MorphismTerm {
    layered_on(start.iter().map(|&b| atom(b)).collect(), steps)
}

fn layered_on(mut cur: Vec<Atom>, steps: &[Step]) -> MorphismTerm {
    let mut chain = vec![Term::id(obj(&cur))];
    for &(kind, pos, extra) in steps {
        let n = cur.len();
        let p = pos % (n + 1);
        let window = |len: usize| (p + len <= n).then(|| cur[p..p + len].to_vec());
        let (g, width, out): (Generator, usize, Vec<Atom>) = match kind % 9 {
            0 => match window(2) {
                Some(w) if w[0] == w[1] => (Generator::Mu(w[0]), 2, vec![w[0]]),
                _ => continue,
            },
            1 => {
                let a = atom(extra % 2 == 1);
                (Generator::Eta(a), 0, vec![a])
            }
            2 => match window(1) {
                Some(w) => (Generator::Delta(w[0]), 1, vec![w[0], w[0]]),
                None => continue,
            },
            3 => match window(1) {
                Some(w) => (Generator::Epsilon(w[0]), 1, vec![]),
                None => continue,
            },
            k @ (4 | 5) => {
                let (lx, ly) = (1 + (extra % 2) as usize, 1 + (extra / 2 % 2) as usize);
                let Some(w) = window(lx + ly) else { continue };
                let (x, y) = (obj(&w[..lx]), obj(&w[lx..]));
                let swapped = [&w[lx..], &w[..lx]].concat();
                if k == 4 {
                    (Generator::Sigma(x, y), lx + ly, swapped)
                } else {
                    (Generator::SigmaInv(y, x), lx + ly, swapped)
                }
            }
            6 => match window(3) {
                Some(w) => (Generator::Alpha(obj(&w[..1]), obj(&w[1..2]), obj(&w[2..])), 3, w),
                None => continue,
            },
            7 => match window(1) {
                Some(w) => (Generator::LambdaInv(obj(&w)), 1, w),
                None => continue,
            },
            _ => match window(1) {
                Some(w) => (Generator::RhoInv(obj(&w)), 1, w),
                None => continue,
            },
        };
        let layer = Term::tensor(
            Term::id(obj(&cur[..p])),
            Term::tensor(Term::gen(g), Term::id(obj(&cur[p + width..]))),
        );
        chain.push(layer);
        cur.splice(p..p + width, out);
    }
    Term::from_chain(chain)
}

fn arb_steps() -> impl Strategy<Value = Vec<Step>> {
    prop::collection::vec((any::<u8>(), 0usize..6, any::<u8>()), 0..8)
}

fn arb_term() -> impl Strategy<Value = MorphismTerm> {
    (prop::collection::vec(any::<bool>(), 0..4), arb_steps()).prop_map(|(start, steps)| layered(&start, &steps))
}

#[test]
fn generators_match_the_oracle() {
    for src in [
        "mu[A]",
        "eta[A]",
        "delta[A]",
        "epsilon[A]",
        "mu[C]",
        "delta[C]",
        "sigma[A,C]",
        "sigma[A*C,A]",
        "sigma[A,C*A]",
        "sigma[A*A,C]~",
        "alpha[A,C,A]",
        "lambda[A]",
        "rho[C*A]~",
        "delta[A] ; mu[A]",
        "(delta[A] * id[A]) ; (id[A] * mu[A])",
    ] {
        let t = parse_term(src).unwrap_or_else(|e| panic!("{src}: {e}"));
        agrees(&t).unwrap();
    }
}

#[test]
fn layered_terms_are_strictly_typed() {
    let t = layered(&[false, false], &[(0, 0, 0), (2, 0, 0), (4, 0, 0), (1, 2, 1), (6, 0, 0)]);
    t.typecheck_strict().unwrap();
    assert!(t.generators().len() >= 5);
}

#[test]
fn every_corpus_theorem_holds_in_both_models() {
    let corpus = theorem_corpus();
    assert!(corpus.len() >= 20);
    for p in corpus {
        let eq = p.ground().unwrap_or_else(|| panic!("{} is not ground", p.name));
        for (m, _) in models() {
            assert!(equal_in(&eq.lhs, &eq.rhs, &m).unwrap(), "{} fails in {}", p.name, m.name);
        }
        agrees(&eq.lhs).unwrap();
        agrees(&eq.rhs).unwrap();
    }
}

fn objects() -> Vec<ObjectExpr> {
    ["A", "C", "A*C", "(A*A)*C", "I"]
        .iter()
        .map(|s| cobord::syntax::parse_object(s).unwrap())
        .collect()
}

/// Morphism variables get non-identity endomorphisms so that naturality
/// squares are not vacuous.
fn morphisms(x: &ObjectExpr) -> Vec<MorphismTerm> {
    let mut out = vec![Term::id(x.clone())];
    if let [Obj::Atom(a)] = x.factors().as_slice() {
        let a = *a;
        out.push(Term::seq(Term::gen(Generator::Mu(a)), Term::gen(Generator::Delta(a))));
        out.push(Term::seq(Term::gen(Generator::Eta(a)), Term::gen(Generator::Epsilon(a))));
    }
    out
}

fn instances(rule: &cobord::rewrite::RewriteRule, xs: &[ObjectExpr]) -> Vec<(MorphismTerm, MorphismTerm)> {
    let vars = rule.variables();
    let mut substs = vec![Subst::new()];
    let mut k = 0;
    for v in &vars {
        let mut next = Vec::new();
        for s in &substs {
            if let Some(m) = v.strip_prefix('?') {
                let c = m.chars().next().unwrap();
                let x = &xs[k % xs.len()];
                for f in morphisms(x) {
                    next.push(s.clone().with_morphism(c, f));
                }
            } else {
                let c = v.chars().next().unwrap();
                next.push(s.clone().with_object(c, xs[k % xs.len()].clone()));
            }
            k += 1;
        }
        substs = next;
    }
    substs
        .into_iter()
        .filter_map(|s| Some((instantiate(&rule.lhs, &s).ok()?, instantiate(&rule.rhs, &s).ok()?)))
        .collect()
}

#[test]
fn every_rule_is_sound_at_a() {
    let a = vec![cobord::term::build::a()];
    for rule in standard_axioms() {
        let inst = instances(&rule, &a);
        assert!(!inst.is_empty(), "{} has no instance at A", rule.name);
        for (l, r) in inst {
            for (m, _) in models() {
                assert!(equal_in(&l, &r, &m).unwrap(), "{} fails in {}: {l} = {r}", rule.name, m.name);
            }
        }
    }
}

#[test]
fn every_rule_is_sound_at_mixed_objects() {
    let xs = objects();
    for rule in standard_axioms() {
        for shift in 0..xs.len() {
            let rotated: Vec<_> = xs.iter().cycle().skip(shift).take(xs.len()).cloned().collect();
            for (l, r) in instances(&rule, &rotated) {
                if l.typecheck_strict().is_err() || r.typecheck_strict().is_err() {
                    continue;
                }
                for (m, _) in models() {
                    assert!(equal_in(&l, &r, &m).unwrap(), "{} fails in {}: {l} = {r}", rule.name, m.name);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn evaluation_matches_the_oracle(t in arb_term()) {
        agrees(&t).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn coherence_normal_form_is_idempotent(t in arb_term()) {
        let n = normalize_coherence(&t);
        prop_assert_eq!(normalize_coherence(&n), n);
    }

    #[test]
    fn coherence_normal_form_preserves_meaning(t in arb_term()) {
        let n = normalize_coherence(&t);
        for (m, _) in models() {
            prop_assert!(equal_in(&t, &n, &m).unwrap());
        }
    }

    #[test]
    fn composition_is_matrix_product(f in arb_term(), steps in arb_steps()) {
        let g = layered_on(f.cod().atoms(), &steps);
        let gf = Term::seq(g.clone(), f.clone());
        for (m, _) in models() {
            let lhs = evaluate(&gf, &m).unwrap();
            let rhs = evaluate(&g, &m).unwrap().compose(&evaluate(&f, &m).unwrap());
            prop_assert!(lhs.same_entries(&rhs));
        }
        agrees(&gf).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn tensor_is_kronecker_product(f in arb_term(), g in arb_term()) {
        let fg = Term::tensor(f.clone(), g.clone());
        for (m, _) in models() {
            let lhs = evaluate(&fg, &m).unwrap();
            let rhs = evaluate(&f, &m).unwrap().kron(&evaluate(&g, &m).unwrap());
            prop_assert!(lhs.same_entries(&rhs));
        }
    }
}
