//! Equational theory as oriented rewrite rules, with pattern matching,
//! positional rewriting, coherence normalization and bounded proof search.

mod axioms;
mod normal;
mod prove;

pub use axioms::{standard_axioms, FAMILIES};
pub use normal::normalize_coherence;
pub use prove::{prove_equal, Budget, Exhausted, ProofStep, ProofTrace, ReplayError, StepRule};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::term::{Generator, MorphVar, MorphismTerm, Obj, ObjectExpr, Term, TypeMismatch};

/// Leaves of pattern objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjVar {
    /// An object variable.
    Var(char),
    /// The domain of a bound morphism variable.
    DomOf(char),
    /// The codomain of a bound morphism variable.
    CodOf(char),
}

impl fmt::Display for ObjVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjVar::Var(x) => write!(f, "?{x}"),
            ObjVar::DomOf(m) => write!(f, "dom(?{m})"),
            ObjVar::CodOf(m) => write!(f, "cod(?{m})"),
        }
    }
}

/// A morphism variable in a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MVar(pub char);

impl fmt::Display for MVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "?{}", self.0)
    }
}

impl MorphVar<ObjVar> for MVar {
    fn var_dom(&self) -> Obj<ObjVar> {
        Obj::Leaf(ObjVar::DomOf(self.0))
    }
    fn var_cod(&self) -> Obj<ObjVar> {
        Obj::Leaf(ObjVar::CodOf(self.0))
    }
}

pub type PatObj = Obj<ObjVar>;
pub type Pattern = Term<ObjVar, MVar>;

/// Which way a rule may be used by proof search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Forward,
    Backward,
    Both,
}

/// The side a rewrite starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// lhs to rhs
    Forward,
    /// rhs to lhs
    Backward,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        })
    }
}

impl FromStr for Direction {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "fwd" => Ok(Direction::Forward),
            "bwd" => Ok(Direction::Backward),
            other => Err(format!("unknown direction '{other}'")),
        }
    }
}

impl Orientation {
    pub fn allows(self, dir: Direction) -> bool {
        matches!(
            (self, dir),
            (Orientation::Both, _)
                | (Orientation::Forward, Direction::Forward)
                | (Orientation::Backward, Direction::Backward)
        )
    }

    pub fn directions(self) -> &'static [Direction] {
        match self {
            Orientation::Forward => &[Direction::Forward],
            Orientation::Backward => &[Direction::Backward],
            Orientation::Both => &[Direction::Forward, Direction::Backward],
        }
    }
}

/// A position in the n-ary view of a term: composite chains are flattened
/// (child `i` of a chain is its `i`-th morphism in application order),
/// tensors have children 0 and 1. A trailing window selects a contiguous
/// sub-chain `start .. start + len` of the chain at the end of the path.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub path: Vec<usize>,
    pub window: Option<(usize, usize)>,
}

impl Position {
    pub fn root() -> Self {
        Position::default()
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "/")?;
        let parts: Vec<String> = self.path.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join("/"))?;
        if let Some((s, l)) = self.window {
            write!(f, "[{s}+{l}]")?;
        }
        Ok(())
    }
}

impl FromStr for Position {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let body = s.strip_prefix('/').ok_or_else(|| format!("position must start with '/': {s}"))?;
        let (path_part, window) = match body.find('[') {
            Some(i) => {
                let w = body[i..]
                    .strip_prefix('[')
                    .and_then(|w| w.strip_suffix(']'))
                    .ok_or_else(|| format!("bad window in {s}"))?;
                let (a, b) = w.split_once('+').ok_or_else(|| format!("bad window in {s}"))?;
                let start = a.parse().map_err(|_| format!("bad window in {s}"))?;
                let len = b.parse().map_err(|_| format!("bad window in {s}"))?;
                (&body[..i], Some((start, len)))
            }
            None => (body, None),
        };
        let path = if path_part.is_empty() {
            vec![]
        } else {
            path_part
                .split('/')
                .map(|p| p.parse::<usize>().map_err(|_| format!("bad path segment '{p}'")))
                .collect::<Result<_, _>>()?
        };
        Ok(Position { path, window })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("rule '{rule}' does not match at {position}")]
    NoMatch { rule: String, position: String },
    #[error("invalid position {0}")]
    BadPosition(String),
    #[error("rule '{rule}' leaves variable {var} unbound in this direction")]
    Unbound { rule: String, var: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("rule '{rule}': side is ill-typed: {source}")]
    IllTyped { rule: String, source: TypeMismatch<ObjVar> },
    #[error("rule '{rule}': sides differ in type ({lhs} vs {rhs})")]
    SideMismatch { rule: String, lhs: String, rhs: String },
    #[error("rule '{rule}': variable {var} is unbound when rewriting {dir}")]
    OpenDirection { rule: String, var: String, dir: Direction },
}

/// How objects bound by matching are compared and how derived objects are
/// computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Exact tree equality; terms are structurally typed.
    Raw,
    /// Equality after strictification; terms are coherence-normal.
    Strict,
}

/// A named equation between two patterns, usable in either direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: String,
    pub family: &'static str,
    pub lhs: Pattern,
    pub rhs: Pattern,
    pub orientation: Orientation,
    /// The THF rendering of this rule states the rhs first.
    pub emit_reversed: bool,
    strict_lhs: Pattern,
    strict_rhs: Pattern,
}

impl RewriteRule {
    /// Registers a rule, checking that both sides typecheck to the same
    /// domain and codomain and that every allowed direction binds all of
    /// its target's variables.
    pub fn new(
        name: impl Into<String>,
        family: &'static str,
        lhs: Pattern,
        rhs: Pattern,
        orientation: Orientation,
    ) -> Result<Self, RuleError> {
        let name = name.into();
        let ill = |e| RuleError::IllTyped { rule: name.clone(), source: e };
        let lt = lhs.typecheck().map_err(ill)?;
        let rt = rhs.typecheck().map_err(ill)?;
        if lt != rt {
            return Err(RuleError::SideMismatch {
                rule: name,
                lhs: format!("{} -> {}", lt.0, lt.1),
                rhs: format!("{} -> {}", rt.0, rt.1),
            });
        }
        for &dir in orientation.directions() {
            let (src, dst) = match dir {
                Direction::Forward => (&lhs, &rhs),
                Direction::Backward => (&rhs, &lhs),
            };
            let bound = pattern_vars(src);
            if let Some(var) = pattern_vars(dst).into_iter().find(|v| !bound.contains(v)) {
                return Err(RuleError::OpenDirection { rule: name, var, dir });
            }
        }
        let strict_lhs = normalize_coherence(&lhs);
        let strict_rhs = normalize_coherence(&rhs);
        Ok(RewriteRule {
            name,
            family,
            lhs,
            rhs,
            orientation,
            emit_reversed: false,
            strict_lhs,
            strict_rhs,
        })
    }

    pub fn reversed_in_emission(mut self) -> Self {
        self.emit_reversed = true;
        self
    }

    /// Both sides coincide after coherence normalization, so the rule has
    /// no effect on normalized terms.
    pub fn is_coherence_trivial(&self) -> bool {
        self.strict_lhs == self.strict_rhs
    }

    pub fn strict_sides(&self) -> (&Pattern, &Pattern) {
        (&self.strict_lhs, &self.strict_rhs)
    }

    fn sides(&self, dir: Direction, mode: Mode) -> (&Pattern, &Pattern) {
        let (l, r) = match mode {
            Mode::Raw => (&self.lhs, &self.rhs),
            Mode::Strict => (&self.strict_lhs, &self.strict_rhs),
        };
        match dir {
            Direction::Forward => (l, r),
            Direction::Backward => (r, l),
        }
    }

    /// Object and morphism variables occurring in either side.
    pub fn variables(&self) -> Vec<String> {
        let mut v = pattern_vars(&self.lhs);
        for x in pattern_vars(&self.rhs) {
            if !v.contains(&x) {
                v.push(x);
            }
        }
        v
    }
}

/// Variable names: object variables as `x`, morphism variables as `?f`.
fn pattern_vars(p: &Pattern) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut push = |s: String| {
        if !out.contains(&s) {
            out.push(s)
        }
    };
    fn obj_vars(o: &PatObj, push: &mut dyn FnMut(String)) {
        match o {
            Obj::Leaf(ObjVar::Var(x)) => push(x.to_string()),
            Obj::Leaf(ObjVar::DomOf(m)) | Obj::Leaf(ObjVar::CodOf(m)) => push(format!("?{m}")),
            Obj::Tensor(l, r) => {
                obj_vars(l, push);
                obj_vars(r, push);
            }
            _ => {}
        }
    }
    p.visit(&mut |t| match t {
        Term::Gen(g) => {
            for o in g.objects() {
                obj_vars(o, &mut push);
            }
        }
        Term::Id(o) => obj_vars(o, &mut push),
        Term::Var(m) => push(format!("?{}", m.0)),
        _ => {}
    });
    out
}

/// A substitution produced by matching.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subst {
    pub objects: BTreeMap<char, ObjectExpr>,
    pub morphisms: BTreeMap<char, MorphismTerm>,
}

impl Subst {
    pub fn new() -> Self {
        Subst::default()
    }

    pub fn with_object(mut self, var: char, o: ObjectExpr) -> Self {
        self.objects.insert(var, o);
        self
    }

    pub fn with_morphism(mut self, var: char, t: MorphismTerm) -> Self {
        self.morphisms.insert(var, t);
        self
    }
}

struct Matcher {
    mode: Mode,
    subst: Subst,
    deferred: Vec<(PatObj, ObjectExpr)>,
}

impl Matcher {
    fn new(mode: Mode) -> Self {
        Matcher { mode, subst: Subst::new(), deferred: Vec::new() }
    }

    fn same_obj(&self, a: &ObjectExpr, b: &ObjectExpr) -> bool {
        match self.mode {
            Mode::Raw => a == b,
            Mode::Strict => a.strict_eq(b),
        }
    }

    fn obj(&mut self, p: &PatObj, o: &ObjectExpr) -> bool {
        match (p, o) {
            (Obj::Leaf(ObjVar::Var(x)), _) => match self.subst.objects.get(x) {
                Some(bound) => self.same_obj(bound, o),
                None => {
                    self.subst.objects.insert(*x, o.clone());
                    true
                }
            },
            (Obj::Leaf(_), _) => {
                self.deferred.push((p.clone(), o.clone()));
                true
            }
            (Obj::Unit, Obj::Unit) => true,
            (Obj::Atom(x), Obj::Atom(y)) => x == y,
            (Obj::Tensor(pl, pr), Obj::Tensor(l, r)) => self.obj(pl, l) && self.obj(pr, r),
            _ => false,
        }
    }

    fn term(&mut self, p: &Pattern, t: &MorphismTerm) -> bool {
        match (p, t) {
            (Term::Var(m), _) => match self.subst.morphisms.get(&m.0) {
                Some(bound) => bound == t,
                None => {
                    self.subst.morphisms.insert(m.0, t.clone());
                    true
                }
            },
            (Term::Gen(pg), Term::Gen(tg)) => {
                if !same_generator_kind(pg, tg) {
                    return false;
                }
                let objs: Vec<(PatObj, ObjectExpr)> = pg
                    .objects()
                    .into_iter()
                    .cloned()
                    .zip(tg.objects().into_iter().cloned())
                    .collect();
                objs.iter().all(|(po, o)| self.obj(po, o))
            }
            (Term::Id(po), Term::Id(o)) => self.obj(po, o),
            (Term::Seq(..), Term::Seq(..)) => {
                let pc = p.chain();
                let tc = t.chain();
                pc.len() == tc.len() && pc.iter().zip(tc.iter()).all(|(a, b)| self.term(a, b))
            }
            (Term::Par(pl, pr), Term::Par(l, r)) => self.term(pl, l) && self.term(pr, r),
            _ => false,
        }
    }

    fn finish(self) -> Option<Subst> {
        for (p, o) in &self.deferred {
            let inst = instantiate_obj(p, &self.subst, self.mode).ok()?;
            if !self.same_obj(&inst, o) {
                return None;
            }
        }
        Some(self.subst)
    }
}

fn same_generator_kind<L: crate::term::Leaf, K: crate::term::Leaf>(
    a: &Generator<L>,
    b: &Generator<K>,
) -> bool {
    a.name() == b.name() && a.is_inverse() == b.is_inverse() && a.frobenius_atom() == b.frobenius_atom()
}

fn unbound(var: String) -> RewriteError {
    RewriteError::Unbound { rule: String::new(), var }
}

fn instantiate_obj(p: &PatObj, s: &Subst, mode: Mode) -> Result<ObjectExpr, RewriteError> {
    Ok(match p {
        Obj::Unit => Obj::Unit,
        Obj::Atom(a) => Obj::Atom(*a),
        Obj::Tensor(l, r) => Obj::tensor(instantiate_obj(l, s, mode)?, instantiate_obj(r, s, mode)?),
        Obj::Leaf(ObjVar::Var(x)) => s.objects.get(x).cloned().ok_or_else(|| unbound(x.to_string()))?,
        Obj::Leaf(ObjVar::DomOf(m)) | Obj::Leaf(ObjVar::CodOf(m)) => {
            let f = s.morphisms.get(m).ok_or_else(|| unbound(format!("?{m}")))?;
            let o = if matches!(p, Obj::Leaf(ObjVar::DomOf(_))) { f.dom() } else { f.cod() };
            match mode {
                Mode::Raw => o,
                Mode::Strict => o.strict(),
            }
        }
    })
}

fn instantiate_in(p: &Pattern, s: &Subst, mode: Mode) -> Result<MorphismTerm, RewriteError> {
    Ok(match p {
        Term::Gen(g) => {
            let mut err = None;
            let gen = g.map_objects(|o| {
                instantiate_obj(o, s, mode).unwrap_or_else(|e| {
                    err.get_or_insert(e);
                    Obj::Unit
                })
            });
            if let Some(e) = err {
                return Err(e);
            }
            Term::Gen(gen)
        }
        Term::Id(o) => Term::Id(instantiate_obj(o, s, mode)?),
        Term::Seq(a, b) => Term::seq(instantiate_in(a, s, mode)?, instantiate_in(b, s, mode)?),
        Term::Par(a, b) => Term::par(instantiate_in(a, s, mode)?, instantiate_in(b, s, mode)?),
        Term::Var(m) => s.morphisms.get(&m.0).cloned().ok_or_else(|| unbound(format!("?{}", m.0)))?,
    })
}

/// Instantiates a pattern with concrete objects and morphisms.
pub fn instantiate(p: &Pattern, s: &Subst) -> Result<MorphismTerm, RewriteError> {
    instantiate_in(p, s, Mode::Raw)
}

/// Matches a pattern against a whole concrete term, comparing objects
/// exactly.
pub fn match_pattern(p: &Pattern, t: &MorphismTerm) -> Option<Subst> {
    let mut m = Matcher::new(Mode::Raw);
    if m.term(p, t) {
        m.finish()
    } else {
        None
    }
}

fn children(t: &MorphismTerm) -> Vec<&MorphismTerm> {
    match t {
        Term::Seq(..) => t.chain(),
        Term::Par(l, r) => vec![l, r],
        _ => vec![],
    }
}

/// The subterm addressed by `pos`; a window yields a fresh sub-chain.
pub fn subterm_at(t: &MorphismTerm, pos: &Position) -> Option<MorphismTerm> {
    let mut node = t;
    for &i in &pos.path {
        node = *children(node).get(i)?;
    }
    match pos.window {
        None => Some(node.clone()),
        Some((start, 0)) => {
            let chain = node.chain();
            match chain.get(start) {
                Some(next) => Some(Term::id(next.dom())),
                None if start == chain.len() => Some(Term::id(chain[start - 1].cod())),
                None => None,
            }
        }
        Some((start, len)) => {
            if !node.is_seq() || len < 2 {
                return None;
            }
            let chain = node.chain();
            if start + len > chain.len() {
                return None;
            }
            Some(Term::from_chain(chain[start..start + len].iter().map(|t| (*t).clone()).collect()))
        }
    }
}

fn splice_chain(items: Vec<MorphismTerm>) -> MorphismTerm {
    let mut flat = Vec::new();
    for item in &items {
        for piece in item.chain() {
            flat.push(piece.clone());
        }
    }
    Term::from_chain(flat)
}

fn replace_at(t: &MorphismTerm, path: &[usize], window: Option<(usize, usize)>, new: MorphismTerm) -> Option<MorphismTerm> {
    match path.split_first() {
        None => match window {
            None => Some(new),
            Some((start, len)) => {
                let chain: Vec<MorphismTerm> = t.chain().into_iter().cloned().collect();
                if start + len > chain.len() {
                    return None;
                }
                let mut items = chain[..start].to_vec();
                items.push(new);
                items.extend_from_slice(&chain[start + len..]);
                Some(splice_chain(items))
            }
        },
        Some((&i, rest)) => match t {
            Term::Seq(..) => {
                let mut items: Vec<MorphismTerm> = t.chain().into_iter().cloned().collect();
                let child = items.get(i)?;
                items[i] = replace_at(child, rest, window, new)?;
                Some(splice_chain(items))
            }
            Term::Par(l, r) => match i {
                0 => Some(Term::par(replace_at(l, rest, window, new)?, (**r).clone())),
                1 => Some(Term::par((**l).clone(), replace_at(r, rest, window, new)?)),
                _ => None,
            },
            _ => None,
        },
    }
}

/// All positions of a term: leftmost-outermost order, whole nodes before
/// their windows, longer windows first.
pub fn positions(t: &MorphismTerm) -> Vec<Position> {
    let mut out = Vec::new();
    collect_positions(t, &mut Vec::new(), &mut out);
    out
}

/// Empty windows `[i+0]` between the morphisms of every maximal chain
/// that is not an identity. Rewriting at a slot inserts a sub-chain.
pub fn slots(t: &MorphismTerm) -> Vec<Position> {
    fn walk(t: &MorphismTerm, path: &mut Vec<usize>, out: &mut Vec<Position>) {
        if !matches!(t, Term::Id(_)) {
            let n = t.chain().len();
            out.extend((0..=n).map(|i| Position { path: path.clone(), window: Some((i, 0)) }));
        }
        let items: Vec<&MorphismTerm> = if t.is_seq() { t.chain() } else { vec![t] };
        for (i, item) in items.into_iter().enumerate() {
            if let Term::Par(l, r) = item {
                if t.is_seq() {
                    path.push(i);
                }
                for (j, k) in [l, r].into_iter().enumerate() {
                    path.push(j);
                    walk(k, path, out);
                    path.pop();
                }
                if t.is_seq() {
                    path.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    walk(t, &mut Vec::new(), &mut out);
    out
}

fn collect_positions(t: &MorphismTerm, path: &mut Vec<usize>, out: &mut Vec<Position>) {
    out.push(Position { path: path.clone(), window: None });
    let kids = children(t);
    if t.is_seq() {
        let n = kids.len();
        for len in (2..n).rev() {
            for start in 0..=n - len {
                out.push(Position { path: path.clone(), window: Some((start, len)) });
            }
        }
    }
    for (i, k) in kids.into_iter().enumerate() {
        path.push(i);
        collect_positions(k, path, out);
        path.pop();
    }
}

fn apply_rule(
    t: &MorphismTerm,
    rule: &RewriteRule,
    pos: &Position,
    dir: Direction,
    mode: Mode,
) -> Result<MorphismTerm, RewriteError> {
    let target = subterm_at(t, pos).ok_or_else(|| RewriteError::BadPosition(pos.to_string()))?;
    let (src, dst) = rule.sides(dir, mode);
    let mut m = Matcher::new(mode);
    let no_match = || RewriteError::NoMatch { rule: rule.name.clone(), position: pos.to_string() };
    if !m.term(src, &target) {
        return Err(no_match());
    }
    let subst = m.finish().ok_or_else(no_match)?;
    let replacement = instantiate_in(dst, &subst, mode).map_err(|e| match e {
        RewriteError::Unbound { var, .. } => RewriteError::Unbound { rule: rule.name.clone(), var },
        other => other,
    })?;
    replace_at(t, &pos.path, pos.window, replacement).ok_or_else(|| RewriteError::BadPosition(pos.to_string()))
}

/// Rewrites the subterm at `pos` with `rule` in direction `dir`, matching
/// objects exactly. The result has the same domain and codomain as `t`.
pub fn rewrite_step(
    t: &MorphismTerm,
    rule: &RewriteRule,
    pos: &Position,
    dir: Direction,
) -> Result<MorphismTerm, RewriteError> {
    apply_rule(t, rule, pos, dir, Mode::Raw)
}

/// Rewrites a coherence-normal term with the normalized form of `rule` and
/// renormalizes the result. This is the step relation of proof search.
pub fn rewrite_step_modulo(
    t: &MorphismTerm,
    rule: &RewriteRule,
    pos: &Position,
    dir: Direction,
) -> Result<MorphismTerm, RewriteError> {
    apply_rule(t, rule, pos, dir, Mode::Strict).map(|r| normalize_coherence(&r))
}

/// An equation between two concrete terms with the same strictified type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub lhs: MorphismTerm,
    pub rhs: MorphismTerm,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquationError {
    #[error(transparent)]
    IllTyped(#[from] TypeMismatch),
    #[error("sides have different types: {lhs} vs {rhs}")]
    SideMismatch { lhs: String, rhs: String },
}

impl Equation {
    /// Both sides must typecheck, structurally or after strictification,
    /// and agree on domain and codomain up to coherence.
    pub fn new(lhs: MorphismTerm, rhs: MorphismTerm) -> Result<Self, EquationError> {
        let ty = |t: &MorphismTerm| t.typecheck().or_else(|e| t.typecheck_strict().map_err(|_| e));
        let (ld, lc) = ty(&lhs)?;
        let (rd, rc) = ty(&rhs)?;
        if !(ld.strict_eq(&rd) && lc.strict_eq(&rc)) {
            return Err(EquationError::SideMismatch {
                lhs: format!("{ld} -> {lc}"),
                rhs: format!("{rd} -> {rc}"),
            });
        }
        Ok(Equation { lhs, rhs })
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}
