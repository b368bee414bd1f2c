//! Objects and typed morphism terms of the open-closed cobordism category.
//!
//! Objects are binary tensor trees over the unit `I` and the two Frobenius
//! atoms `A` (open string) and `C` (closed string). Parenthesization is part
//! of an object's identity; reassociation only happens through explicit
//! `alpha` generators.
//!
//! Both types are generic over a leaf type so that the same machinery
//! (typing, normalization, printing) serves concrete terms and rewrite
//! patterns. Concrete terms use [`Infallible`] leaves, which makes the
//! variable cases statically unreachable.

use std::convert::Infallible;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

/// A Frobenius object: `A` for open strings, `C` for closed strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    A,
    C,
}

impl Atom {
    pub const ALL: [Atom; 2] = [Atom::A, Atom::C];

    pub fn letter(self) -> char {
        match self {
            Atom::A => 'A',
            Atom::C => 'C',
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Bound for leaf payloads of objects and terms.
pub trait Leaf: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {}
impl<T: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static> Leaf for T {}

/// A tensor tree of atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Obj<L = Infallible> {
    Unit,
    Atom(Atom),
    Tensor(Arc<Obj<L>>, Arc<Obj<L>>),
    Leaf(L),
}

/// A concrete object expression.
pub type ObjectExpr = Obj<Infallible>;

impl<L: Leaf> Obj<L> {
    pub fn tensor(left: Obj<L>, right: Obj<L>) -> Obj<L> {
        Obj::Tensor(Arc::new(left), Arc::new(right))
    }

    /// The non-unit leaves, left to right.
    pub fn factors(&self) -> Vec<Obj<L>> {
        let mut out = Vec::new();
        self.collect_factors(&mut out);
        out
    }

    fn collect_factors(&self, out: &mut Vec<Obj<L>>) {
        match self {
            Obj::Unit => {}
            Obj::Tensor(l, r) => {
                l.collect_factors(out);
                r.collect_factors(out);
            }
            other => out.push(other.clone()),
        }
    }

    /// Right-nested tensor of the given factors; the unit when empty.
    pub fn from_factors(factors: Vec<Obj<L>>) -> Obj<L> {
        let mut iter = factors.into_iter().rev();
        match iter.next() {
            None => Obj::Unit,
            Some(last) => iter.fold(last, |acc, f| Obj::tensor(f, acc)),
        }
    }

    /// Strictified form: right-associated with unit leaves deleted.
    pub fn strict(&self) -> Obj<L> {
        Obj::from_factors(self.factors())
    }

    /// Equality after strictification.
    pub fn strict_eq(&self, other: &Obj<L>) -> bool {
        self.factors() == other.factors()
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Obj::Unit)
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Obj::Tensor(l, r) => 1 + l.size() + r.size(),
            _ => 1,
        }
    }

    pub fn map_leaves<K: Leaf>(&self, f: &mut impl FnMut(&L) -> Obj<K>) -> Obj<K> {
        match self {
            Obj::Unit => Obj::Unit,
            Obj::Atom(a) => Obj::Atom(*a),
            Obj::Tensor(l, r) => Obj::tensor(l.map_leaves(f), r.map_leaves(f)),
            Obj::Leaf(x) => f(x),
        }
    }
}

impl ObjectExpr {
    /// Atoms left to right (units dropped).
    pub fn atoms(&self) -> Vec<Atom> {
        self.factors()
            .into_iter()
            .map(|f| match f {
                Obj::Atom(a) => a,
                Obj::Leaf(never) => match never {},
                Obj::Unit | Obj::Tensor(..) => unreachable!("factors are leaves"),
            })
            .collect()
    }

    /// Lift into any leaf type.
    pub fn lift<L: Leaf>(&self) -> Obj<L> {
        self.map_leaves(&mut |never: &Infallible| match *never {})
    }
}

impl<L: Leaf> fmt::Display for Obj<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obj::Unit => write!(f, "I"),
            Obj::Atom(a) => write!(f, "{a}"),
            Obj::Leaf(x) => write!(f, "{x}"),
            Obj::Tensor(l, r) => {
                write!(f, "{l}*")?;
                if matches!(**r, Obj::Tensor(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}

/// The generators: Frobenius structure maps on an atom, the structural
/// isomorphisms of the monoidal structure, and the braiding.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator<L = Infallible> {
    Mu(Atom),
    Eta(Atom),
    Delta(Atom),
    Epsilon(Atom),
    Alpha(Obj<L>, Obj<L>, Obj<L>),
    AlphaInv(Obj<L>, Obj<L>, Obj<L>),
    Lambda(Obj<L>),
    LambdaInv(Obj<L>),
    Rho(Obj<L>),
    RhoInv(Obj<L>),
    Sigma(Obj<L>, Obj<L>),
    SigmaInv(Obj<L>, Obj<L>),
}

impl<L: Leaf> Generator<L> {
    pub fn dom(&self) -> Obj<L> {
        use Generator::*;
        let at = |a: &Atom| Obj::Atom(*a);
        match self {
            Mu(a) => Obj::tensor(at(a), at(a)),
            Eta(_) => Obj::Unit,
            Delta(a) | Epsilon(a) => at(a),
            Alpha(x, y, z) => Obj::tensor(Obj::tensor(x.clone(), y.clone()), z.clone()),
            AlphaInv(x, y, z) => Obj::tensor(x.clone(), Obj::tensor(y.clone(), z.clone())),
            Lambda(x) => Obj::tensor(Obj::Unit, x.clone()),
            Rho(x) => Obj::tensor(x.clone(), Obj::Unit),
            LambdaInv(x) | RhoInv(x) => x.clone(),
            Sigma(x, y) => Obj::tensor(x.clone(), y.clone()),
            SigmaInv(x, y) => Obj::tensor(y.clone(), x.clone()),
        }
    }

    pub fn cod(&self) -> Obj<L> {
        use Generator::*;
        let at = |a: &Atom| Obj::Atom(*a);
        match self {
            Mu(a) | Eta(a) => at(a),
            Delta(a) => Obj::tensor(at(a), at(a)),
            Epsilon(_) => Obj::Unit,
            Alpha(x, y, z) => AlphaInv(x.clone(), y.clone(), z.clone()).dom(),
            AlphaInv(x, y, z) => Alpha(x.clone(), y.clone(), z.clone()).dom(),
            Lambda(x) | Rho(x) => x.clone(),
            LambdaInv(x) => Lambda(x.clone()).dom(),
            RhoInv(x) => Rho(x.clone()).dom(),
            Sigma(x, y) => Obj::tensor(y.clone(), x.clone()),
            SigmaInv(x, y) => Obj::tensor(x.clone(), y.clone()),
        }
    }

    /// Associator and unitors (and their inverses).
    pub fn is_structural(&self) -> bool {
        use Generator::*;
        matches!(
            self,
            Alpha(..) | AlphaInv(..) | Lambda(_) | LambdaInv(_) | Rho(_) | RhoInv(_)
        )
    }

    pub fn is_inverse(&self) -> bool {
        use Generator::*;
        matches!(self, AlphaInv(..) | LambdaInv(_) | RhoInv(_) | SigmaInv(..))
    }

    /// Base name in the text syntax.
    pub fn name(&self) -> &'static str {
        use Generator::*;
        match self {
            Mu(_) => "mu",
            Eta(_) => "eta",
            Delta(_) => "delta",
            Epsilon(_) => "epsilon",
            Alpha(..) | AlphaInv(..) => "alpha",
            Lambda(_) | LambdaInv(_) => "lambda",
            Rho(_) | RhoInv(_) => "rho",
            Sigma(..) | SigmaInv(..) => "sigma",
        }
    }

    pub fn frobenius_atom(&self) -> Option<Atom> {
        use Generator::*;
        match self {
            Mu(a) | Eta(a) | Delta(a) | Epsilon(a) => Some(*a),
            _ => None,
        }
    }

    pub fn objects(&self) -> Vec<&Obj<L>> {
        use Generator::*;
        match self {
            Mu(_) | Eta(_) | Delta(_) | Epsilon(_) => vec![],
            Alpha(x, y, z) | AlphaInv(x, y, z) => vec![x, y, z],
            Lambda(x) | LambdaInv(x) | Rho(x) | RhoInv(x) => vec![x],
            Sigma(x, y) | SigmaInv(x, y) => vec![x, y],
        }
    }

    pub fn map_objects<K: Leaf>(&self, mut f: impl FnMut(&Obj<L>) -> Obj<K>) -> Generator<K> {
        use Generator::*;
        match self {
            Mu(a) => Mu(*a),
            Eta(a) => Eta(*a),
            Delta(a) => Delta(*a),
            Epsilon(a) => Epsilon(*a),
            Alpha(x, y, z) => Alpha(f(x), f(y), f(z)),
            AlphaInv(x, y, z) => AlphaInv(f(x), f(y), f(z)),
            Lambda(x) => Lambda(f(x)),
            LambdaInv(x) => LambdaInv(f(x)),
            Rho(x) => Rho(f(x)),
            RhoInv(x) => RhoInv(f(x)),
            Sigma(x, y) => Sigma(f(x), f(y)),
            SigmaInv(x, y) => SigmaInv(f(x), f(y)),
        }
    }
}

impl<L: Leaf> fmt::Display for Generator<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.name())?;
        match self.frobenius_atom() {
            Some(a) => write!(f, "{a}")?,
            None => {
                for (i, o) in self.objects().into_iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{o}")?;
                }
            }
        }
        write!(f, "]")?;
        if self.is_inverse() {
            write!(f, "~")?;
        }
        Ok(())
    }
}

/// Typing of morphism variables inside patterns.
pub trait MorphVar<L>: Leaf {
    fn var_dom(&self) -> Obj<L>;
    fn var_cod(&self) -> Obj<L>;
}

impl<L> MorphVar<L> for Infallible {
    fn var_dom(&self) -> Obj<L> {
        match *self {}
    }
    fn var_cod(&self) -> Obj<L> {
        match *self {}
    }
}

/// A morphism term. `Seq(after, before)` is `after ∘ before`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term<L = Infallible, M = Infallible> {
    Gen(Generator<L>),
    Id(Obj<L>),
    Seq(Arc<Term<L, M>>, Arc<Term<L, M>>),
    Par(Arc<Term<L, M>>, Arc<Term<L, M>>),
    Var(M),
}

/// A concrete morphism term.
pub type MorphismTerm = Term<Infallible, Infallible>;

/// Sequential composition whose side condition failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeMismatch<L: Leaf = Infallible> {
    /// Codomain of the morphism applied first.
    pub produced: Obj<L>,
    /// Domain of the morphism applied second.
    pub expected: Obj<L>,
    /// Child indices (text order) from the root to the offending node.
    pub path: Vec<usize>,
}

impl<L: Leaf> fmt::Display for TypeMismatch<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "type mismatch at /{}: {} does not match {}",
            self.path.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("/"),
            self.produced,
            self.expected
        )
    }
}

impl<L: Leaf> std::error::Error for TypeMismatch<L> {}

impl<L: Leaf, M: MorphVar<L>> Term<L, M> {
    pub fn gen(g: Generator<L>) -> Self {
        Term::Gen(g)
    }

    pub fn id(x: Obj<L>) -> Self {
        Term::Id(x)
    }

    /// `after ∘ before` without checking types.
    pub fn seq(after: Self, before: Self) -> Self {
        Term::Seq(Arc::new(after), Arc::new(before))
    }

    pub fn par(left: Self, right: Self) -> Self {
        Term::Par(Arc::new(left), Arc::new(right))
    }

    /// `g ∘ f`, checking that the codomain of `f` is the domain of `g`.
    pub fn compose(g: Self, f: Self) -> Result<Self, TypeMismatch<L>> {
        let (_, f_cod) = f.typecheck()?;
        let (g_dom, _) = g.typecheck()?;
        if f_cod != g_dom {
            return Err(TypeMismatch { produced: f_cod, expected: g_dom, path: vec![] });
        }
        Ok(Term::seq(g, f))
    }

    /// `f ⊗ g`; always well formed when the parts are.
    pub fn tensor(f: Self, g: Self) -> Self {
        Term::par(f, g)
    }

    /// Structural domain, without checking composites.
    pub fn dom(&self) -> Obj<L> {
        match self {
            Term::Gen(g) => g.dom(),
            Term::Id(x) => x.clone(),
            Term::Seq(_, before) => before.dom(),
            Term::Par(l, r) => Obj::tensor(l.dom(), r.dom()),
            Term::Var(m) => m.var_dom(),
        }
    }

    /// Structural codomain, without checking composites.
    pub fn cod(&self) -> Obj<L> {
        match self {
            Term::Gen(g) => g.cod(),
            Term::Id(x) => x.clone(),
            Term::Seq(after, _) => after.cod(),
            Term::Par(l, r) => Obj::tensor(l.cod(), r.cod()),
            Term::Var(m) => m.var_cod(),
        }
    }

    /// Domain and codomain, requiring exact (parenthesization-sensitive)
    /// agreement at every composite. Reports the leftmost-innermost failure.
    pub fn typecheck(&self) -> Result<(Obj<L>, Obj<L>), TypeMismatch<L>> {
        self.check_with(&mut Vec::new(), &|a, b| a == b)
    }

    /// Like [`Term::typecheck`] but compares objects after strictification,
    /// returning strictified domain and codomain.
    pub fn typecheck_strict(&self) -> Result<(Obj<L>, Obj<L>), TypeMismatch<L>> {
        let (d, c) = self.check_with(&mut Vec::new(), &|a, b| a.strict_eq(b))?;
        Ok((d.strict(), c.strict()))
    }

    fn check_with(
        &self,
        path: &mut Vec<usize>,
        same: &dyn Fn(&Obj<L>, &Obj<L>) -> bool,
    ) -> Result<(Obj<L>, Obj<L>), TypeMismatch<L>> {
        match self {
            Term::Gen(g) => Ok((g.dom(), g.cod())),
            Term::Id(x) => Ok((x.clone(), x.clone())),
            Term::Var(m) => Ok((m.var_dom(), m.var_cod())),
            Term::Seq(after, before) => {
                path.push(0);
                let (d, mid) = before.check_with(path, same)?;
                path.pop();
                path.push(1);
                let (mid2, c) = after.check_with(path, same)?;
                path.pop();
                if !same(&mid, &mid2) {
                    return Err(TypeMismatch { produced: mid, expected: mid2, path: path.clone() });
                }
                Ok((d, c))
            }
            Term::Par(l, r) => {
                path.push(0);
                let (ld, lc) = l.check_with(path, same)?;
                path.pop();
                path.push(1);
                let (rd, rc) = r.check_with(path, same)?;
                path.pop();
                Ok((Obj::tensor(ld, rd), Obj::tensor(lc, rc)))
            }
        }
    }

    /// Node count.
    pub fn size(&self) -> usize {
        match self {
            Term::Seq(a, b) | Term::Par(a, b) => 1 + a.size() + b.size(),
            _ => 1,
        }
    }

    /// The maximal composite chain rooted here, in application order.
    /// A non-composite term is a chain of length one.
    pub fn chain(&self) -> Vec<&Term<L, M>> {
        let mut out = Vec::new();
        self.collect_chain(&mut out);
        out
    }

    fn collect_chain<'a>(&'a self, out: &mut Vec<&'a Term<L, M>>) {
        match self {
            Term::Seq(after, before) => {
                before.collect_chain(out);
                after.collect_chain(out);
            }
            other => out.push(other),
        }
    }

    /// Canonical nesting of a non-empty chain given in application order:
    /// `[f, g, h]` becomes `h ∘ (g ∘ f)`, the shape `f ; g ; h` parses to.
    pub fn from_chain(chain: Vec<Term<L, M>>) -> Self {
        let mut iter = chain.into_iter();
        let first = iter.next().expect("from_chain needs at least one element");
        iter.fold(first, |acc, next| Term::seq(next, acc))
    }

    pub fn is_seq(&self) -> bool {
        matches!(self, Term::Seq(..))
    }

    pub fn is_par(&self) -> bool {
        matches!(self, Term::Par(..))
    }

    /// Every generator occurring in the term, in text order.
    pub fn generators(&self) -> Vec<&Generator<L>> {
        let mut out = Vec::new();
        self.visit(&mut |t| {
            if let Term::Gen(g) = t {
                out.push(g);
            }
        });
        out
    }

    /// Pre-order traversal in text order.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Term<L, M>)) {
        f(self);
        match self {
            Term::Seq(after, before) => {
                before.visit(f);
                after.visit(f);
            }
            Term::Par(l, r) => {
                l.visit(f);
                r.visit(f);
            }
            _ => {}
        }
    }
}

impl MorphismTerm {
    /// Lift a concrete term into any pattern leaf types.
    pub fn lift<L: Leaf, M: MorphVar<L>>(&self) -> Term<L, M> {
        match self {
            Term::Gen(g) => Term::Gen(g.map_objects(|o| o.lift())),
            Term::Id(x) => Term::Id(x.lift()),
            Term::Seq(a, b) => Term::seq(a.lift(), b.lift()),
            Term::Par(a, b) => Term::par(a.lift(), b.lift()),
            Term::Var(never) => match *never {},
        }
    }
}

impl<L: Leaf, M: Leaf> fmt::Display for Term<L, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Gen(g) => write!(f, "{g}"),
            Term::Id(x) => write!(f, "id[{x}]"),
            Term::Var(m) => write!(f, "{m}"),
            Term::Seq(after, before) => {
                write!(f, "{before} ; ")?;
                if after.is_seq_node() {
                    write!(f, "({after})")
                } else {
                    write!(f, "{after}")
                }
            }
            Term::Par(l, r) => {
                if l.is_seq_node() {
                    write!(f, "({l})")?;
                } else {
                    write!(f, "{l}")?;
                }
                write!(f, " * ")?;
                if r.is_seq_node() || r.is_par_node() {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}

impl<L, M> Term<L, M> {
    fn is_seq_node(&self) -> bool {
        matches!(self, Term::Seq(..))
    }
    fn is_par_node(&self) -> bool {
        matches!(self, Term::Par(..))
    }
}

/// Shorthands for building concrete terms in code and tests.
pub mod build {
    use super::*;

    pub fn a() -> ObjectExpr {
        Obj::Atom(Atom::A)
    }
    pub fn c() -> ObjectExpr {
        Obj::Atom(Atom::C)
    }
    pub fn unit() -> ObjectExpr {
        Obj::Unit
    }
    pub fn at(atom: Atom) -> ObjectExpr {
        Obj::Atom(atom)
    }
    pub fn ot(l: ObjectExpr, r: ObjectExpr) -> ObjectExpr {
        Obj::tensor(l, r)
    }
    pub fn g(gen: Generator) -> MorphismTerm {
        Term::Gen(gen)
    }
    pub fn id(x: ObjectExpr) -> MorphismTerm {
        Term::Id(x)
    }
    /// `after ∘ before`.
    pub fn comp(after: MorphismTerm, before: MorphismTerm) -> MorphismTerm {
        Term::seq(after, before)
    }
    pub fn tens(l: MorphismTerm, r: MorphismTerm) -> MorphismTerm {
        Term::par(l, r)
    }
    /// Diagram order: the first element is applied first.
    pub fn then(chain: Vec<MorphismTerm>) -> MorphismTerm {
        Term::from_chain(chain)
    }
}

#[cfg(test)]
mod tests {
    use super::build::*;
    use super::*;
    use Generator::*;

    #[test]
    fn compose_identity() {
        let t = MorphismTerm::compose(id(a()), g(Mu(Atom::A))).unwrap();
        assert_eq!(t.typecheck().unwrap(), (ot(a(), a()), a()));
    }

    #[test]
    fn compose_delta_then_mu() {
        let t = MorphismTerm::compose(g(Mu(Atom::A)), g(Delta(Atom::A))).unwrap();
        assert_eq!(t.typecheck().unwrap(), (a(), a()));
    }

    #[test]
    fn compose_through_unit() {
        let t = MorphismTerm::compose(g(Eta(Atom::A)), g(Epsilon(Atom::A))).unwrap();
        assert_eq!(t.typecheck().unwrap(), (a(), a()));
    }

    #[test]
    fn compose_mismatch_carries_objects() {
        let err = MorphismTerm::compose(g(Mu(Atom::A)), g(Epsilon(Atom::A))).unwrap_err();
        assert_eq!(err.produced, unit());
        assert_eq!(err.expected, ot(a(), a()));
    }

    #[test]
    fn tensor_examples() {
        let t = MorphismTerm::tensor(g(Mu(Atom::A)), id(a()));
        assert_eq!(t.typecheck().unwrap(), (ot(ot(a(), a()), a()), ot(a(), a())));
        let t = MorphismTerm::tensor(id(a()), g(Delta(Atom::A)));
        assert_eq!(t.typecheck().unwrap(), (ot(a(), a()), ot(a(), ot(a(), a()))));
        let t = MorphismTerm::tensor(id(unit()), id(unit()));
        assert_eq!(t.typecheck().unwrap(), (ot(unit(), unit()), ot(unit(), unit())));
    }

    #[test]
    fn typecheck_examples() {
        assert_eq!(
            g(Sigma(a(), c())).typecheck().unwrap(),
            (ot(a(), c()), ot(c(), a()))
        );
        // λ_A ∘ (ε_A ⊗ 1_A)
        let t = comp(g(Lambda(a())), tens(g(Epsilon(Atom::A)), id(a())));
        assert_eq!(t.typecheck().unwrap(), (ot(a(), a()), a()));
        let bad = comp(g(Mu(Atom::A)), g(Mu(Atom::A)));
        let err = bad.typecheck().unwrap_err();
        assert!(err.path.is_empty());
    }

    #[test]
    fn mismatch_path_points_at_inner_node() {
        let bad = tens(id(a()), comp(g(Mu(Atom::A)), g(Mu(Atom::A))));
        assert_eq!(bad.typecheck().unwrap_err().path, vec![1]);
    }

    #[test]
    fn parenthesization_matters() {
        let left = ot(ot(a(), a()), a());
        let right = ot(a(), ot(a(), a()));
        assert_ne!(left, right);
        assert!(left.strict_eq(&right));
        assert_eq!(left.strict(), right);
        assert_eq!(ot(unit(), a()).strict(), a());
        assert_eq!(ot(unit(), unit()).strict(), unit());
    }

    #[test]
    fn generator_signatures() {
        let x = ot(a(), c());
        assert_eq!(g(Alpha(a(), c(), a())).typecheck().unwrap().1, ot(a(), ot(c(), a())));
        assert_eq!(g(Rho(x.clone())).dom(), ot(x.clone(), unit()));
        assert_eq!(g(SigmaInv(a(), c())).dom(), ot(c(), a()));
        assert_eq!(g(LambdaInv(x.clone())).cod(), ot(unit(), x));
    }

    #[test]
    fn chain_round_trip() {
        let t = then(vec![g(Delta(Atom::A)), g(Mu(Atom::A)), g(Epsilon(Atom::A))]);
        let chain: Vec<MorphismTerm> = t.chain().into_iter().cloned().collect();
        assert_eq!(chain.len(), 3);
        assert_eq!(MorphismTerm::from_chain(chain), t);
    }
}
