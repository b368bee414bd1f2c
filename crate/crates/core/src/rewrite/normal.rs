//! Coherence normalization.
//!
//! Objects are strictified (right-associated, unit leaves deleted), every
//! associator and unitor becomes an identity, identities are dropped from
//! composite chains, adjacent identities inside tensor lists merge, and
//! tensor lists are right-nested. The result is typed only up to
//! strictification (see [`Term::typecheck_strict`]).

use crate::term::{Leaf, MorphVar, Obj, Term};

pub fn normalize_coherence<L: Leaf, M: MorphVar<L>>(t: &Term<L, M>) -> Term<L, M> {
    match t {
        Term::Gen(g) if g.is_structural() => Term::Id(g.dom().strict()),
        Term::Gen(g) => Term::Gen(g.map_objects(|o| o.strict())),
        Term::Id(x) => Term::Id(x.strict()),
        Term::Var(m) => Term::Var(m.clone()),
        Term::Par(..) => {
            let mut items = Vec::new();
            flatten_par(t, &mut items);
            build_par(items)
        }
        Term::Seq(..) => {
            let mut items = Vec::new();
            for part in t.chain() {
                let n = normalize_coherence(part);
                for piece in n.chain() {
                    if !matches!(piece, Term::Id(_)) {
                        items.push(piece.clone());
                    }
                }
            }
            if items.is_empty() {
                Term::Id(t.dom().strict())
            } else {
                Term::from_chain(items)
            }
        }
    }
}

fn flatten_par<L: Leaf, M: MorphVar<L>>(t: &Term<L, M>, out: &mut Vec<Term<L, M>>) {
    match t {
        Term::Par(l, r) => {
            flatten_par(l, out);
            flatten_par(r, out);
        }
        other => {
            let n = normalize_coherence(other);
            if let Term::Par(..) = n {
                flatten_par(&n, out);
            } else {
                out.push(n);
            }
        }
    }
}

fn build_par<L: Leaf, M: MorphVar<L>>(items: Vec<Term<L, M>>) -> Term<L, M> {
    let mut merged: Vec<Term<L, M>> = Vec::new();
    for item in items {
        if let Term::Id(x) = &item {
            if x.is_unit() {
                continue;
            }
            if let Some(Term::Id(prev)) = merged.last() {
                let joined = Obj::tensor(prev.clone(), x.clone()).strict();
                *merged.last_mut().unwrap() = Term::Id(joined);
                continue;
            }
        }
        merged.push(item);
    }
    let mut iter = merged.into_iter().rev();
    match iter.next() {
        None => Term::Id(Obj::Unit),
        Some(last) => iter.fold(last, |acc, item| Term::par(item, acc)),
    }
}
