use super::{ObjVar, Orientation, PatObj, Pattern, RewriteRule};
use crate::term::{Atom, Generator, Obj, Term};

/// Rule families, in registration order. Frobenius families are
/// instantiated once per atom with a `.A` / `.C` suffix.
pub const FAMILIES: &[&str] = &[
    "monoidal.pentagon",
    "monoidal.triangle",
    "frobenius.unit.left",
    "frobenius.unit.right",
    "frobenius.assoc",
    "frobenius.coassoc",
    "frobenius.counit.left",
    "frobenius.counit.right",
    "frobenius.relation.left",
    "frobenius.relation.right",
    "braid.naturality",
    "braid.inverse",
    "braid.inverse.right",
    "braid.hexagon.left",
    "braid.hexagon.right",
];

fn v(x: char) -> PatObj {
    Obj::Leaf(ObjVar::Var(x))
}

fn t(l: PatObj, r: PatObj) -> PatObj {
    Obj::tensor(l, r)
}

fn gen(g: Generator<ObjVar>) -> Pattern {
    Term::Gen(g)
}

fn id(o: PatObj) -> Pattern {
    Term::Id(o)
}

fn par(l: Pattern, r: Pattern) -> Pattern {
    Term::par(l, r)
}

/// Composite listed in application order.
fn chain(parts: Vec<Pattern>) -> Pattern {
    Term::from_chain(parts)
}

fn mvar(m: char) -> Pattern {
    Term::Var(super::MVar(m))
}

fn rule(name: &str, family: &'static str, lhs: Pattern, rhs: Pattern, o: Orientation) -> RewriteRule {
    RewriteRule::new(name, family, lhs, rhs, o).unwrap_or_else(|e| panic!("built-in rule rejected: {e}"))
}

fn frobenius(atom: Atom) -> Vec<RewriteRule> {
    use Generator::*;
    let o = || Obj::Atom(atom);
    let mu = || gen(Mu(atom));
    let eta = || gen(Eta(atom));
    let delta = || gen(Delta(atom));
    let eps = || gen(Epsilon(atom));
    let idx = || id(o());
    let alpha = || gen(Alpha(o(), o(), o()));
    let alpha_inv = || gen(AlphaInv(o(), o(), o()));
    let name = |family: &str| format!("{family}.{atom}");
    vec![
        rule(
            &name("frobenius.unit.left"),
            "frobenius.unit.left",
            gen(Lambda(o())),
            chain(vec![par(eta(), idx()), mu()]),
            Orientation::Backward,
        ),
        rule(
            &name("frobenius.unit.right"),
            "frobenius.unit.right",
            gen(Rho(o())),
            chain(vec![par(idx(), eta()), mu()]),
            Orientation::Backward,
        ),
        rule(
            &name("frobenius.assoc"),
            "frobenius.assoc",
            chain(vec![par(mu(), idx()), mu()]),
            chain(vec![alpha(), par(idx(), mu()), mu()]),
            Orientation::Both,
        )
        .reversed_in_emission(),
        rule(
            &name("frobenius.coassoc"),
            "frobenius.coassoc",
            chain(vec![delta(), par(idx(), delta())]),
            chain(vec![delta(), par(delta(), idx()), alpha()]),
            Orientation::Both,
        ),
        rule(
            &name("frobenius.counit.left"),
            "frobenius.counit.left",
            chain(vec![delta(), par(eps(), idx())]),
            gen(LambdaInv(o())),
            Orientation::Forward,
        ),
        rule(
            &name("frobenius.counit.right"),
            "frobenius.counit.right",
            chain(vec![delta(), par(idx(), eps())]),
            gen(RhoInv(o())),
            Orientation::Forward,
        ),
        rule(
            &name("frobenius.relation.left"),
            "frobenius.relation.left",
            chain(vec![par(idx(), delta()), alpha_inv(), par(mu(), idx())]),
            chain(vec![mu(), delta()]),
            Orientation::Both,
        ),
        rule(
            &name("frobenius.relation.right"),
            "frobenius.relation.right",
            chain(vec![par(delta(), idx()), alpha(), par(idx(), mu())]),
            chain(vec![mu(), delta()]),
            Orientation::Both,
        ),
    ]
}

/// The fixed rule set, in registration order.
pub fn standard_axioms() -> Vec<RewriteRule> {
    use Generator::*;
    let (w, x, y, z) = (|| v('w'), || v('x'), || v('y'), || v('z'));
    let mut rules = vec![
        rule(
            "monoidal.pentagon",
            "monoidal.pentagon",
            chain(vec![
                par(gen(Alpha(w(), x(), y())), id(z())),
                gen(Alpha(w(), t(x(), y()), z())),
                par(id(w()), gen(Alpha(x(), y(), z()))),
            ]),
            chain(vec![gen(Alpha(t(w(), x()), y(), z())), gen(Alpha(w(), x(), t(y(), z())))]),
            Orientation::Both,
        ),
        rule(
            "monoidal.triangle",
            "monoidal.triangle",
            chain(vec![gen(Alpha(x(), Obj::Unit, y())), par(id(x()), gen(Lambda(y())))]),
            par(gen(Rho(x())), id(y())),
            Orientation::Both,
        ),
    ];
    rules.extend(frobenius(Atom::A));
    rules.extend(frobenius(Atom::C));
    let dom = |m| Obj::Leaf(ObjVar::DomOf(m));
    let cod = |m| Obj::Leaf(ObjVar::CodOf(m));
    rules.extend([
        rule(
            "braid.naturality",
            "braid.naturality",
            chain(vec![par(mvar('f'), mvar('g')), gen(Sigma(cod('f'), cod('g')))]),
            chain(vec![gen(Sigma(dom('f'), dom('g'))), par(mvar('g'), mvar('f'))]),
            Orientation::Both,
        ),
        rule(
            "braid.inverse",
            "braid.inverse",
            chain(vec![gen(Sigma(x(), y())), gen(SigmaInv(x(), y()))]),
            par(id(x()), id(y())),
            Orientation::Forward,
        ),
        rule(
            "braid.inverse.right",
            "braid.inverse.right",
            chain(vec![gen(SigmaInv(x(), y())), gen(Sigma(x(), y()))]),
            par(id(y()), id(x())),
            Orientation::Forward,
        ),
        rule(
            "braid.hexagon.left",
            "braid.hexagon.left",
            chain(vec![
                gen(AlphaInv(x(), y(), z())),
                par(gen(Sigma(x(), y())), id(z())),
                gen(Alpha(y(), x(), z())),
                par(id(y()), gen(Sigma(x(), z()))),
                gen(AlphaInv(y(), z(), x())),
            ]),
            gen(Sigma(x(), t(y(), z()))),
            Orientation::Both,
        ),
        rule(
            "braid.hexagon.right",
            "braid.hexagon.right",
            chain(vec![
                gen(Alpha(x(), y(), z())),
                par(id(x()), gen(Sigma(y(), z()))),
                gen(AlphaInv(x(), z(), y())),
                par(gen(Sigma(x(), z())), id(y())),
                gen(Alpha(z(), x(), y())),
            ]),
            gen(Sigma(t(x(), y()), z())),
            Orientation::Both,
        ),
    ]);
    rules
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_is_present_and_typed() {
        let rules = standard_axioms();
        for fam in FAMILIES {
            assert!(rules.iter().any(|r| r.family == *fam), "missing {fam}");
        }
        for r in &rules {
            assert_eq!(r.lhs.typecheck().unwrap(), r.rhs.typecheck().unwrap(), "{}", r.name);
        }
        let mut names: Vec<_> = rules.iter().map(|r| r.name.clone()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), rules.len());
    }

    #[test]
    fn assoc_shape() {
        let rules = standard_axioms();
        let r = rules.iter().find(|r| r.name == "frobenius.assoc.A").unwrap();
        assert_eq!(r.lhs.to_string(), "mu[A] * id[A] ; mu[A]");
        assert_eq!(r.rhs.to_string(), "alpha[A,A,A] ; id[A] * mu[A] ; mu[A]");
        assert!(rules.iter().any(|r| r.name == "frobenius.assoc.C"));
    }

    #[test]
    fn coherence_trivial_rules() {
        let trivial: Vec<_> =
            standard_axioms().into_iter().filter(|r| r.is_coherence_trivial()).map(|r| r.name).collect();
        assert_eq!(trivial, vec!["monoidal.pentagon", "monoidal.triangle"]);
    }
}
