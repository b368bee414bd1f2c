use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{parse, preamble, AnnotatedFormula, Expr, Formula, Role, ThfProblem, ThfType};
use crate::rewrite::{instantiate, Equation, PatObj, Pattern, RewriteRule, Subst};
use crate::term::{Atom, Generator, Obj, Term};

/// An equation whose sides may contain object and morphism variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternEquation {
    pub lhs: Pattern,
    pub rhs: Pattern,
}

impl PatternEquation {
    pub fn new(lhs: Pattern, rhs: Pattern) -> Self {
        PatternEquation { lhs, rhs }
    }

    /// The concrete equation, when there are no variables.
    pub fn ground(&self) -> Option<Equation> {
        let s = Subst::new();
        let lhs = instantiate(&self.lhs, &s).ok()?;
        let rhs = instantiate(&self.rhs, &s).ok()?;
        Equation::new(lhs, rhs).ok()
    }
}

impl From<&Equation> for PatternEquation {
    fn from(eq: &Equation) -> Self {
        PatternEquation { lhs: eq.lhs.lift(), rhs: eq.rhs.lift() }
    }
}

impl fmt::Display for PatternEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Which vocabulary and background theory a problem is written in.
///
/// `Monoidal` and the four braided profiles describe morphisms by their
/// action on points built with `multo`; `Frobenius` uses one typed
/// constant per generator and per whiskered generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Profile {
    Monoidal,
    Naturality,
    BraidInverse,
    Hexagon,
    YangBaxter,
    Frobenius,
}

impl Profile {
    pub const ALL: [Profile; 6] = [
        Profile::Monoidal,
        Profile::Naturality,
        Profile::BraidInverse,
        Profile::Hexagon,
        Profile::YangBaxter,
        Profile::Frobenius,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Profile::Monoidal => "monoidal",
            Profile::Naturality => "naturality",
            Profile::BraidInverse => "braid-inverse",
            Profile::Hexagon => "hexagon",
            Profile::YangBaxter => "yang-baxter",
            Profile::Frobenius => "frobenius",
        }
    }

    pub fn default_conjecture(self) -> &'static str {
        match self {
            Profile::BraidInverse => "conje1",
            Profile::YangBaxter => "conjeYB",
            Profile::Frobenius => "conj",
            _ => "conje",
        }
    }

    fn braided(self) -> bool {
        matches!(self, Profile::Naturality | Profile::BraidInverse | Profile::Hexagon | Profile::YangBaxter)
    }

    /// Frobenius generators select `Frobenius`; braidings select a braided
    /// profile by the number of strands; anything else is `Monoidal`.
    pub fn infer(eq: &PatternEquation) -> Profile {
        let gens: Vec<&Generator<_>> = eq.lhs.generators().into_iter().chain(eq.rhs.generators()).collect();
        if gens.iter().any(|g| g.frobenius_atom().is_some()) {
            return Profile::Frobenius;
        }
        if gens.iter().any(|g| matches!(g, Generator::Sigma(..) | Generator::SigmaInv(..))) {
            if leaves(&eq.lhs.dom()) >= 3 {
                return Profile::YangBaxter;
            }
            if gens.iter().any(|g| matches!(g, Generator::SigmaInv(..))) {
                return Profile::BraidInverse;
            }
            return Profile::Naturality;
        }
        Profile::Monoidal
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Profile::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown profile '{s}'"))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EncodeOptions {
    /// Inferred from the equation when absent.
    pub profile: Option<Profile>,
    pub conjecture_name: Option<String>,
    /// Replace `$`-prefixed user types by plain names declared as
    /// `$tType`.
    pub strict_tptp: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("{what} has no {profile} encoding")]
    Unencodable { profile: Profile, what: String },
    #[error("the sides start from different objects ({lhs} and {rhs}), which one variable cannot cover")]
    DomainMismatch { lhs: String, rhs: String },
    #[error("emitted problem is inconsistent: {0}")]
    Malformed(String),
}

fn is_leaf(o: &PatObj) -> bool {
    matches!(o, Obj::Atom(_) | Obj::Leaf(_))
}

fn leaves(o: &PatObj) -> usize {
    match o {
        Obj::Unit => 0,
        Obj::Atom(_) | Obj::Leaf(_) => 1,
        Obj::Tensor(l, r) => leaves(l) + leaves(r),
    }
}

/// Point variables: `X, Y, Z` for up to three leaves, `W, X, Y, Z` for
/// four, numbered beyond.
fn leaf_names(n: usize) -> Vec<String> {
    match n {
        0..=3 => ["X", "Y", "Z"][..n].iter().map(|s| s.to_string()).collect(),
        4 => ["W", "X", "Y", "Z"].iter().map(|s| s.to_string()).collect(),
        _ => (1..=n).map(|i| format!("X{i}")).collect(),
    }
}

fn binder_rank(name: &str) -> (usize, usize) {
    match name {
        "X" => (0, 0),
        "Y" => (1, 0),
        "Z" => (2, 0),
        "W" => (3, 0),
        _ => match name.strip_prefix('X').and_then(|n| n.parse().ok()) {
            Some(i) => (4, i),
            None => (5, name.chars().next().map_or(0, |c| c as usize)),
        },
    }
}

fn sorted_binder(names: BTreeSet<String>, ty: &ThfType) -> Vec<(String, ThfType)> {
    let mut v: Vec<String> = names.into_iter().collect();
    v.sort_by_key(|n| binder_rank(n));
    v.into_iter().map(|n| (n, ty.clone())).collect()
}

fn equation_formula(name: &str, role: Role, binder: Vec<(String, ThfType)>, l: Expr, r: Expr) -> AnnotatedFormula {
    let body = Expr::paren(Expr::eq(l, r));
    AnnotatedFormula::logic(name, role, Expr::paren(Expr::forall(binder, body)))
}

fn var_of(m: char) -> String {
    m.to_ascii_uppercase().to_string()
}

fn fixed(text: &str) -> Vec<AnnotatedFormula> {
    parse(text).expect("built-in preamble parses").formulas
}

struct Encoder {
    profile: Profile,
    morph_vars: Vec<(String, ThfType)>,
    instances: Vec<Pattern>,
}

impl Encoder {
    fn unenc(&self, what: impl fmt::Display) -> EncodeError {
        EncodeError::Unencodable { profile: self.profile, what: what.to_string() }
    }

    fn braided_type(&self, o: &PatObj) -> Result<&'static str, EncodeError> {
        match o {
            o if is_leaf(o) => Ok("c"),
            Obj::Tensor(l, r) => match (is_leaf(l), is_leaf(r)) {
                (true, true) => Ok("cc"),
                (false, true) if self.braided_type(l)? == "cc" => Ok("ccxc"),
                (true, false) if self.braided_type(r)? == "cc" => Ok("cxcc"),
                _ => Err(self.unenc(format!("object {o}"))),
            },
            _ => Err(self.unenc(format!("object {o}"))),
        }
    }

    fn point(&self, o: &PatObj, names: &mut impl Iterator<Item = String>) -> Result<Expr, EncodeError> {
        match o {
            Obj::Unit if self.profile == Profile::Monoidal => Ok(Expr::cnst("one")),
            Obj::Unit => Err(self.unenc("the unit object")),
            Obj::Atom(_) | Obj::Leaf(_) => Ok(Expr::Var(names.next().expect("one name per leaf"))),
            Obj::Tensor(l, r) => {
                let ctor = if self.profile == Profile::Monoidal {
                    "multo"
                } else {
                    match self.braided_type(o)? {
                        "ccxc" => "multo1",
                        "cxcc" => "multo2",
                        _ => "multo",
                    }
                };
                let (pl, pr) = (self.point(l, names)?, self.point(r, names)?);
                Ok(Expr::apply(Expr::cnst(ctor), vec![pl, pr]))
            }
        }
    }

    fn fresh_point(&self, o: &PatObj) -> Result<(Expr, BTreeSet<String>), EncodeError> {
        let names = leaf_names(leaves(o));
        let set = names.iter().cloned().collect();
        Ok((self.point(o, &mut names.into_iter())?, set))
    }

    fn gen_name(&self, g: &Generator<crate::rewrite::ObjVar>) -> Result<String, EncodeError> {
        use Generator::*;
        let name = match self.profile {
            Profile::Monoidal => match g {
                Alpha(..) => "alpha",
                Lambda(_) => "left",
                Rho(_) => "right",
                _ => return Err(self.unenc(format!("generator {g}"))),
            },
            Profile::Frobenius => return self.frobenius_gen(g),
            _ => match g {
                Sigma(x, y) => match (self.braided_type(x)?, self.braided_type(y)?) {
                    ("c", "c") => "braid",
                    ("c", "cc") => "braid1",
                    ("cc", "c") => "braid2",
                    _ => return Err(self.unenc(format!("generator {g}"))),
                },
                SigmaInv(x, y) if is_leaf(x) && is_leaf(y) => "invbraid",
                Alpha(x, y, z) if is_leaf(x) && is_leaf(y) && is_leaf(z) => "alpha",
                AlphaInv(x, y, z) if is_leaf(x) && is_leaf(y) && is_leaf(z) => "invalpha",
                _ => return Err(self.unenc(format!("generator {g}"))),
            },
        };
        Ok(name.to_string())
    }

    fn frobenius_gen(&self, g: &Generator<crate::rewrite::ObjVar>) -> Result<String, EncodeError> {
        use Generator::*;
        let atom_of = |o: &PatObj| match o {
            Obj::Atom(a) => Some(*a),
            _ => None,
        };
        let same = |x: &PatObj, y: &PatObj, z: &PatObj| match (atom_of(x), atom_of(y), atom_of(z)) {
            (Some(a), Some(b), Some(c)) if a == b && b == c => Some(a),
            _ => None,
        };
        let (base, atom) = match g {
            Mu(a) => ("mu", Some(*a)),
            Eta(a) => ("eta", Some(*a)),
            Delta(a) => ("delta", Some(*a)),
            Epsilon(a) => ("epsilon", Some(*a)),
            Alpha(x, y, z) => ("alpha", same(x, y, z)),
            AlphaInv(x, y, z) => ("invalpha", same(x, y, z)),
            Lambda(x) => ("lamb", atom_of(x)),
            Rho(x) => ("rho", atom_of(x)),
            LambdaInv(x) => ("invlamb", atom_of(x)),
            RhoInv(x) => ("invrho", atom_of(x)),
            _ => ("", None),
        };
        match atom {
            Some(a) => Ok(format!("{base}{}", suffix(a))),
            None => Err(self.unenc(format!("generator {g}"))),
        }
    }

    fn id_name(&self, x: &PatObj) -> Result<String, EncodeError> {
        match (self.profile, x) {
            (Profile::Monoidal, _) => Ok("iden".into()),
            (Profile::Frobenius, Obj::Atom(a)) => Ok(format!("id{}", suffix(*a))),
            (p, x) if p.braided() && is_leaf(x) => Ok("iden".into()),
            _ => Err(self.unenc(format!("identity on {x}"))),
        }
    }

    fn note_var(&mut self, m: char, t: &Pattern) -> Result<String, EncodeError> {
        let name = var_of(m);
        if !self.profile.braided() {
            return Err(self.unenc(format!("morphism variable ?{m}")));
        }
        let ty = ThfType::fun(vec![
            ThfType::base(self.braided_type(&t.dom())?),
            ThfType::base(self.braided_type(&t.cod())?),
        ]);
        if !self.morph_vars.iter().any(|(n, _)| *n == name) {
            self.morph_vars.push((name.clone(), ty));
        }
        Ok(name)
    }

    /// A component of a tensor, as a function symbol.
    fn component(&mut self, t: &Pattern) -> Result<Expr, EncodeError> {
        match t {
            Term::Gen(g) if self.profile != Profile::Monoidal || g.is_structural() => {
                Ok(Expr::Const(self.gen_name(g)?))
            }
            Term::Id(x) => Ok(Expr::Const(self.id_name(x)?)),
            Term::Var(m) => Ok(Expr::Var(self.note_var(m.0, t)?)),
            _ => Err(self.unenc(format!("tensor component {t}"))),
        }
    }

    fn par_fn(&mut self, t: &Pattern, l: &Pattern, r: &Pattern) -> Result<Expr, EncodeError> {
        if self.profile == Profile::Frobenius {
            return self.frobenius_par(t, l, r);
        }
        let (fl, fr) = (self.component(l)?, self.component(r)?);
        let ctor = if self.profile == Profile::Monoidal {
            if !self.instances.contains(t) {
                self.instances.push(t.clone());
            }
            "multm"
        } else {
            let endo = |e: &Encoder, p: &Pattern| -> Result<&'static str, EncodeError> {
                let (d, c) = (e.braided_type(&p.dom())?, e.braided_type(&p.cod())?);
                if d == c {
                    Ok(d)
                } else {
                    Err(e.unenc(format!("tensor component {p}")))
                }
            };
            match (endo(self, l)?, endo(self, r)?) {
                ("c", "c") => "multm",
                ("cc", "c") => "multm1",
                ("c", "cc") => "multm2",
                _ => return Err(self.unenc(format!("tensor {t}"))),
            }
        };
        Ok(Expr::apply(Expr::cnst(ctor), vec![fl, fr]))
    }

    fn frobenius_par(&self, t: &Pattern, l: &Pattern, r: &Pattern) -> Result<Expr, EncodeError> {
        use Generator::*;
        let (g, atom, gen_left) = match (l, r) {
            (Term::Gen(g), Term::Id(Obj::Atom(a))) => (g, *a, true),
            (Term::Id(Obj::Atom(a)), Term::Gen(g)) => (g, *a, false),
            _ => return Err(self.unenc(format!("tensor {t}"))),
        };
        let base = match g {
            Mu(b) if *b == atom => "mu",
            Delta(b) if *b == atom => "delta",
            Eta(b) if *b == atom => "eta",
            Epsilon(b) if *b == atom => "epsilon",
            _ => return Err(self.unenc(format!("tensor {t}"))),
        };
        let name = if gen_left { format!("{base}id") } else { format!("id{base}") };
        Ok(Expr::Const(format!("{name}{}", suffix(atom))))
    }

    /// The term applied to the point `p`.
    fn at(&mut self, t: &Pattern, p: Expr) -> Result<Expr, EncodeError> {
        match t {
            Term::Seq(after, before) => {
                let inner = self.at(before, p)?;
                self.at(after, inner)
            }
            Term::Gen(g) => Ok(Expr::apply(Expr::Const(self.gen_name(g)?), vec![p])),
            Term::Id(x) => Ok(Expr::apply(Expr::Const(self.id_name(x)?), vec![p])),
            Term::Par(l, r) => {
                let f = self.par_fn(t, l, r)?;
                Ok(Expr::apply(f, vec![p]))
            }
            Term::Var(m) => {
                let v = self.note_var(m.0, t)?;
                Ok(Expr::apply(Expr::Var(v), vec![p]))
            }
        }
    }

    fn side(&mut self, t: &Pattern) -> Result<(Expr, BTreeSet<String>), EncodeError> {
        let (p, names) = self.fresh_point(&t.dom())?;
        Ok((self.at(t, p)?, names))
    }
}

fn suffix(a: Atom) -> &'static str {
    match a {
        Atom::A => "",
        Atom::C => "_c",
    }
}

fn frobenius_type(o: &PatObj) -> Option<String> {
    let letter = |o: &PatObj| match o {
        Obj::Atom(a) => Some(a.letter().to_ascii_lowercase()),
        _ => None,
    };
    match o {
        Obj::Unit => Some("$i".into()),
        Obj::Atom(a) => Some(format!("${}", a.letter().to_ascii_lowercase())),
        Obj::Tensor(l, r) => match (&**l, &**r) {
            (Obj::Unit, x) => letter(x).map(|c| format!("$j{c}")),
            (x, Obj::Unit) => letter(x).map(|c| format!("${c}i")),
            (Obj::Tensor(a, b), z) => match (letter(a), letter(b), letter(z)) {
                (Some(a), Some(b), Some(z)) if a == b && b == z => Some(format!("${a}{a}x{a}")),
                _ => None,
            },
            (x, Obj::Tensor(b, c)) => match (letter(x), letter(b), letter(c)) {
                (Some(a), Some(b), Some(c)) if a == b && b == c => Some(format!("${a}x{a}{a}")),
                _ => None,
            },
            (x, y) => match (letter(x), letter(y)) {
                (Some(a), Some(b)) if a == b => Some(format!("${a}{a}")),
                _ => None,
            },
        },
        Obj::Leaf(_) => None,
    }
}

const FROBENIUS_NUMBERING: [&str; 8] = [
    "frobenius.unit.left",
    "frobenius.unit.right",
    "frobenius.assoc",
    "frobenius.coassoc",
    "frobenius.counit.left",
    "frobenius.counit.right",
    "frobenius.relation.left",
    "frobenius.relation.right",
];

fn rename_expr(e: &mut Expr, f: &impl Fn(&str) -> String) {
    match e {
        Expr::Const(c) => *c = f(c),
        Expr::Var(_) => {}
        Expr::App(h, args) => {
            rename_expr(h, f);
            args.iter_mut().for_each(|a| rename_expr(a, f));
        }
        Expr::Eq(l, r) => {
            rename_expr(l, f);
            rename_expr(r, f);
        }
        Expr::Forall(_, b) | Expr::Paren(b) => rename_expr(b, f),
    }
}

/// Rewrites open-atom formulas for the closed atom: `_c` on symbols and
/// formula names, `c` for `a` in the user types.
fn for_closed(mut formulas: Vec<AnnotatedFormula>) -> Vec<AnnotatedFormula> {
    let sym = |s: &str| format!("{s}_c");
    for f in &mut formulas {
        f.name = match f.name.strip_suffix("_decl") {
            Some(base) => format!("{base}_c_decl"),
            None => format!("{}_c", f.name),
        };
        match &mut f.formula {
            Formula::TypeDecl(s, _) => *s = sym(s),
            Formula::Logic(e) => rename_expr(e, &sym),
        }
    }
    let mut p = ThfProblem { formulas };
    p.rename_types(|t| if t.starts_with('$') && t != "$i" && t != "$tType" { t.replace('a', "c") } else { t.into() });
    p.formulas
}

fn frobenius_atoms(eq: &PatternEquation) -> Vec<Atom> {
    let mut set = BTreeSet::new();
    for t in [&eq.lhs, &eq.rhs] {
        for g in t.generators() {
            if let Some(a) = g.frobenius_atom() {
                set.insert(a);
            }
            for o in g.objects() {
                collect_atoms(o, &mut set);
            }
        }
        t.visit(&mut |s| {
            if let Term::Id(o) = s {
                collect_atoms(o, &mut set)
            }
        });
    }
    if set.is_empty() {
        set.insert(Atom::A);
    }
    set.into_iter().collect()
}

fn collect_atoms(o: &PatObj, set: &mut BTreeSet<Atom>) {
    match o {
        Obj::Atom(a) => {
            set.insert(*a);
        }
        Obj::Tensor(l, r) => {
            collect_atoms(l, set);
            collect_atoms(r, set);
        }
        _ => {}
    }
}

fn encode_frobenius(
    enc: &mut Encoder,
    eq: &PatternEquation,
    axioms: &[RewriteRule],
    conj: &str,
) -> Result<Vec<AnnotatedFormula>, EncodeError> {
    let ty = |e: &Encoder, o: &PatObj| frobenius_type(o).ok_or_else(|| e.unenc(format!("object {o}")));
    let (ld, rd) = (ty(enc, &eq.lhs.dom())?, ty(enc, &eq.rhs.dom())?);
    if ld != rd {
        return Err(EncodeError::DomainMismatch { lhs: eq.lhs.dom().to_string(), rhs: eq.rhs.dom().to_string() });
    }
    let mut out = Vec::new();
    for atom in frobenius_atoms(eq) {
        let mut block = fixed(preamble::FROBENIUS_DECLS);
        for (i, family) in FROBENIUS_NUMBERING.iter().enumerate() {
            let Some(rule) = axioms.iter().find(|r| r.family == *family && r.name.ends_with(&format!(".{}", Atom::A)))
            else {
                continue;
            };
            let (l, r) = if rule.emit_reversed { (&rule.rhs, &rule.lhs) } else { (&rule.lhs, &rule.rhs) };
            let x = || Expr::var("X");
            let binder = vec![("X".to_string(), ThfType::Base(ty(enc, &l.dom())?))];
            let (el, er) = (enc.at(l, x())?, enc.at(r, x())?);
            block.push(equation_formula(&format!("axio{}", i + 1), Role::Axiom, binder, el, er));
        }
        block.extend(fixed(preamble::FROBENIUS_EXTRA));
        if atom == Atom::C {
            block = for_closed(block);
        }
        out.extend(block);
    }
    let x = || Expr::var("X");
    let (el, er) = (enc.at(&eq.lhs, x())?, enc.at(&eq.rhs, x())?);
    out.push(equation_formula(conj, Role::Conjecture, vec![("X".into(), ThfType::Base(ld))], el, er));
    Ok(out)
}

fn encode_points(enc: &mut Encoder, eq: &PatternEquation, conj: &str) -> Result<Vec<AnnotatedFormula>, EncodeError> {
    let c = ThfType::base("c");
    let mut out = match enc.profile {
        Profile::Monoidal => fixed(preamble::MONOIDAL),
        Profile::Naturality => fixed(preamble::NATURALITY),
        Profile::BraidInverse => fixed(preamble::BRAID_INVERSE),
        Profile::Hexagon => fixed(preamble::HEXAGON),
        _ => fixed(preamble::YANG_BAXTER),
    };
    // Instances of tensored structure maps are collected rhs first.
    let (er, rnames) = enc.side(&eq.rhs)?;
    let (el, lnames) = enc.side(&eq.lhs)?;
    if enc.profile == Profile::Monoidal {
        let unitors = [&eq.lhs, &eq.rhs].iter().any(|t| {
            t.generators().iter().any(|g| matches!(g, Generator::Lambda(_) | Generator::Rho(_)))
        });
        if unitors {
            out.extend(fixed(preamble::MONOIDAL_UNITORS));
        }
        let instances = std::mem::take(&mut enc.instances);
        for (i, inst) in instances.iter().enumerate() {
            let name = match (unitors, i) {
                (true, i) => format!("axio2{}", (b'C' + i as u8) as char),
                (false, 0) => "axio3".to_string(),
                (false, i) => format!("axio3{}", (b'A' + (i - 1) as u8) as char),
            };
            let Term::Par(l, r) = inst else { unreachable!() };
            let f = enc.par_fn(inst, l, r)?;
            let (dom_point, names) = enc.fresh_point(&inst.dom())?;
            let mut ordered = leaf_names(names.len()).into_iter();
            let cod_point = enc.point(&inst.cod(), &mut ordered)?;
            let lhs = Expr::apply(f, vec![dom_point]);
            out.push(equation_formula(&name, Role::Axiom, sorted_binder(names, &c), lhs, cod_point));
        }
        enc.instances.clear();
    }
    let mut binder = sorted_binder(lnames.union(&rnames).cloned().collect(), &c);
    let mut vars = enc.morph_vars.clone();
    vars.sort_by(|a, b| a.0.cmp(&b.0));
    binder.extend(vars);
    out.push(equation_formula(conj, Role::Conjecture, binder, el, er));
    Ok(out)
}

/// Builds a THF problem whose conjecture is `eq`.
///
/// In the `Frobenius` profile the Frobenius rules among `axioms` become
/// the numbered axioms, for each atom the equation mentions. The point
/// profiles carry their own fixed theory of actions on points and ignore
/// `axioms`; the monoidal profile adds one action axiom for every
/// tensor of structure maps the conjecture applies.
pub fn encode_equation(
    eq: &PatternEquation,
    axioms: &[RewriteRule],
    opts: &EncodeOptions,
) -> Result<ThfProblem, EncodeError> {
    let profile = opts.profile.unwrap_or_else(|| Profile::infer(eq));
    let conj = opts.conjecture_name.clone().unwrap_or_else(|| profile.default_conjecture().to_string());
    let mut enc = Encoder { profile, morph_vars: Vec::new(), instances: Vec::new() };
    let formulas = if profile == Profile::Frobenius {
        encode_frobenius(&mut enc, eq, axioms, &conj)?
    } else {
        encode_points(&mut enc, eq, &conj)?
    };
    let mut problem = ThfProblem { formulas };
    if opts.strict_tptp {
        strictify(&mut problem);
    }
    problem.check().map_err(EncodeError::Malformed)?;
    Ok(problem)
}

fn is_user_type(t: &str) -> bool {
    t.starts_with('$') && !matches!(t, "$i" | "$o" | "$tType")
}

fn collect_types(t: &ThfType, out: &mut Vec<String>) {
    match t {
        ThfType::Base(n) => {
            if is_user_type(n) && !out.contains(n) {
                out.push(n.clone())
            }
        }
        ThfType::Fun(parts) => parts.iter().for_each(|p| collect_types(p, out)),
    }
}

fn strictify(p: &mut ThfProblem) {
    let mut types = Vec::new();
    for f in &p.formulas {
        match &f.formula {
            Formula::TypeDecl(_, t) => collect_types(t, &mut types),
            Formula::Logic(e) => binder_types(e, &mut types),
        }
    }
    p.rename_types(|t| if is_user_type(t) { t[1..].to_string() } else { t.to_string() });
    let decls = types.iter().map(|t| {
        let plain = &t[1..];
        AnnotatedFormula::decl(&format!("{plain}_type"), plain, ThfType::base("$tType"))
    });
    p.formulas.splice(0..0, decls);
}

fn binder_types(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Forall(vs, b) => {
            vs.iter().for_each(|(_, t)| collect_types(t, out));
            binder_types(b, out);
        }
        Expr::Paren(b) => binder_types(b, out),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::standard_axioms;
    use crate::syntax::parse_term;
    use crate::tptp::{emit, normalize_whitespace};

    fn eq(l: &str, r: &str) -> PatternEquation {
        PatternEquation::new(parse_term(l).unwrap().lift(), parse_term(r).unwrap().lift())
    }

    fn formula_text(p: &ThfProblem, name: &str) -> String {
        normalize_whitespace(&p.get(name).unwrap_or_else(|| panic!("no {name}")).to_string())
    }

    #[test]
    fn frobenius_associativity_axiom_is_stated_rhs_first() {
        let p = encode_equation(&eq("mu[A] ; delta[A]", "mu[A] ; delta[A]"), &standard_axioms(), &Default::default())
            .unwrap();
        assert_eq!(
            formula_text(&p, "axio3"),
            "thf(axio3,axiom,(![X:$aaxa]:((mu@(idmu@(alpha@X)))=(mu@(muid@X)))))."
        );
        assert_eq!(
            formula_text(&p, "axio7"),
            "thf(axio7,axiom,(![X:$aa]:((muid@(invalpha@(iddelta@X)))=(delta@(mu@X)))))."
        );
        assert_eq!(formula_text(&p, "axio1"), "thf(axio1,axiom,(![X:$ja]:((lamb@X)=(mu@(etaid@X)))))." );
    }

    #[test]
    fn closed_atom_gets_its_own_names() {
        let p = encode_equation(&eq("mu[C]", "sigma[C,C] ; mu[C]"), &[], &EncodeOptions {
            profile: Some(Profile::Frobenius),
            ..Default::default()
        });
        assert!(matches!(p, Err(EncodeError::Unencodable { .. })));
        let p = encode_equation(&eq("delta[C] ; mu[C]", "delta[C] ; mu[C]"), &standard_axioms(), &Default::default())
            .unwrap();
        assert_eq!(formula_text(&p, "conj"), "thf(conj,conjecture,(![X:$c]:((mu_c@(delta_c@X))=(mu_c@(delta_c@X)))))." );
        assert!(p.get("mu_c_decl").is_some());
        assert!(p.get("axio3_c").is_some());
    }

    #[test]
    fn point_binders_follow_leaf_count() {
        let p = encode_equation(
            &eq("alpha[A,A,A] * id[A] ; alpha[A,A*A,A] ; id[A] * alpha[A,A,A]", "alpha[A*A,A,A] ; alpha[A,A,A*A]"),
            &[],
            &Default::default(),
        )
        .unwrap();
        assert_eq!(
            formula_text(&p, "axio3"),
            "thf(axio3,axiom,(![X:c,Y:c,Z:c,W:c]:(((multm@alpha@iden)@(multo@(multo@(multo@W@X)@Y)@Z))=(multo@(multo@W@(multo@X@Y))@Z))))."
        );
        assert!(p.get("axio3A").is_some());
        assert_eq!(p.conjecture().unwrap().name, "conje");
    }

    #[test]
    fn naturality_conjecture_quantifies_over_functions() {
        let rule = standard_axioms().into_iter().find(|r| r.name == "braid.naturality").unwrap();
        let p = encode_equation(&PatternEquation::new(rule.lhs, rule.rhs), &[], &Default::default()).unwrap();
        assert_eq!(
            formula_text(&p, "conje"),
            "thf(conje,conjecture,(![X:c,Y:c,F:c>c,G:c>c]:((braid@((multm@F@G)@(multo@X@Y)))=((multm@G@F)@(braid@(multo@X@Y))))))."
        );
    }

    #[test]
    fn unencodable_objects_are_reported() {
        let e = encode_equation(
            &eq("sigma[A*A*A,A]", "sigma[A*A*A,A]"),
            &[],
            &EncodeOptions { profile: Some(Profile::YangBaxter), ..Default::default() },
        );
        assert!(matches!(e, Err(EncodeError::Unencodable { .. })));
    }

    #[test]
    fn undeclared_symbols_are_caught() {
        let e = encode_equation(
            &eq("sigma[A,A] ; sigma[A,A]~", "id[A] * id[A]"),
            &[],
            &EncodeOptions { profile: Some(Profile::Naturality), ..Default::default() },
        );
        assert!(matches!(e, Err(EncodeError::Malformed(_))));
    }

    #[test]
    fn strict_mode_declares_user_types() {
        let p = encode_equation(
            &eq("mu[A] ; delta[A]", "id[A] * delta[A] ; alpha[A,A,A]~ ; mu[A] * id[A]"),
            &standard_axioms(),
            &EncodeOptions { strict_tptp: true, ..Default::default() },
        )
        .unwrap();
        let text = emit(&p);
        assert!(!text.contains("$a"));
        assert!(text.contains("$i"));
        assert!(text.starts_with("thf(aaxa_type,type,(aaxa: $tType))."));
        assert!(p.get("aa_type").is_some());
    }

    #[test]
    fn profiles_are_inferred() {
        assert_eq!(Profile::infer(&eq("mu[A]", "mu[A]")), Profile::Frobenius);
        assert_eq!(Profile::infer(&eq("sigma[A,A]", "sigma[A,A]")), Profile::Naturality);
        assert_eq!(Profile::infer(&eq("sigma[A,A] ; sigma[A,A]~", "id[A]*id[A]")), Profile::BraidInverse);
        assert_eq!(Profile::infer(&eq("sigma[A,A*A]", "sigma[A,A*A]")), Profile::YangBaxter);
        assert_eq!(Profile::infer(&eq("alpha[A,A,A]", "alpha[A,A,A]")), Profile::Monoidal);
    }
}
