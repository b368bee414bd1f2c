//! The THF fragment used for equational problems: type declarations,
//! universally quantified equations between applications, and ATP result
//! lines.

mod encode;
mod parse;
mod preamble;
mod szs;

pub use encode::{encode_equation, EncodeError, EncodeOptions, PatternEquation, Profile};
pub use parse::{parse, ParseError};
pub use szs::{parse_szs, SzsResult, SzsStatus};

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ThfType {
    Base(String),
    /// `t1 > t2 > ... > tn`, kept n-ary so that grouping survives
    /// printing; components that are themselves functions are
    /// parenthesized.
    Fun(Vec<ThfType>),
}

impl ThfType {
    pub fn base(name: &str) -> Self {
        ThfType::Base(name.to_string())
    }

    pub fn fun(parts: Vec<ThfType>) -> Self {
        ThfType::Fun(parts)
    }

    fn rename(&mut self, f: &impl Fn(&str) -> String) {
        match self {
            ThfType::Base(n) => *n = f(n),
            ThfType::Fun(parts) => parts.iter_mut().for_each(|p| p.rename(f)),
        }
    }
}

impl fmt::Display for ThfType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThfType::Base(n) => f.write_str(n),
            ThfType::Fun(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" > ")?;
                    }
                    match p {
                        ThfType::Fun(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(String),
    Var(String),
    /// `head @ a1 @ ... @ an`, left-associated.
    App(Box<Expr>, Vec<Expr>),
    Eq(Box<Expr>, Box<Expr>),
    Forall(Vec<(String, ThfType)>, Box<Expr>),
    /// Parentheses are kept as written so that transcribed problems print
    /// back unchanged.
    Paren(Box<Expr>),
}

impl Expr {
    pub fn cnst(name: &str) -> Self {
        Expr::Const(name.to_string())
    }

    pub fn var(name: &str) -> Self {
        Expr::Var(name.to_string())
    }

    pub fn app(head: Expr, args: Vec<Expr>) -> Self {
        Expr::App(Box::new(head), args)
    }

    /// `(head @ args...)`
    pub fn apply(head: Expr, args: Vec<Expr>) -> Self {
        Expr::paren(Expr::app(head, args))
    }

    pub fn paren(e: Expr) -> Self {
        Expr::Paren(Box::new(e))
    }

    /// The same expression with every redundant parenthesis removed.
    pub fn unparen(&self) -> Expr {
        match self {
            Expr::Paren(e) => e.unparen(),
            Expr::App(h, args) => Expr::app(h.unparen(), args.iter().map(Expr::unparen).collect()),
            Expr::Eq(l, r) => Expr::eq(l.unparen(), r.unparen()),
            Expr::Forall(vs, b) => Expr::Forall(vs.clone(), Box::new(b.unparen())),
            e => e.clone(),
        }
    }

    fn is_atomic(&self) -> bool {
        matches!(self, Expr::Const(_) | Expr::Var(_) | Expr::Paren(_))
    }

    pub fn eq(l: Expr, r: Expr) -> Self {
        Expr::Eq(Box::new(l), Box::new(r))
    }

    pub fn forall(vars: Vec<(String, ThfType)>, body: Expr) -> Self {
        if vars.is_empty() {
            body
        } else {
            Expr::Forall(vars, Box::new(body))
        }
    }

    /// Constants in order of first occurrence.
    pub fn constants(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_constants(&mut out);
        out
    }

    fn collect_constants(&self, out: &mut Vec<String>) {
        match self {
            Expr::Const(c) => {
                if !out.contains(c) {
                    out.push(c.clone())
                }
            }
            Expr::Var(_) => {}
            Expr::App(h, args) => {
                h.collect_constants(out);
                args.iter().for_each(|a| a.collect_constants(out));
            }
            Expr::Eq(l, r) => {
                l.collect_constants(out);
                r.collect_constants(out);
            }
            Expr::Forall(_, b) | Expr::Paren(b) => b.collect_constants(out),
        }
    }

    fn rename_types(&mut self, f: &impl Fn(&str) -> String) {
        match self {
            Expr::App(h, args) => {
                h.rename_types(f);
                args.iter_mut().for_each(|a| a.rename_types(f));
            }
            Expr::Eq(l, r) => {
                l.rename_types(f);
                r.rename_types(f);
            }
            Expr::Forall(vars, b) => {
                vars.iter_mut().for_each(|(_, t)| t.rename(f));
                b.rename_types(f);
            }
            Expr::Paren(b) => b.rename_types(f),
            _ => {}
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(n) | Expr::Var(n) => f.write_str(n),
            Expr::App(h, args) => {
                let part = |e: &Expr| if e.is_atomic() { e.to_string() } else { format!("({e})") };
                f.write_str(&part(h))?;
                for a in args {
                    write!(f, " @ {}", part(a))?;
                }
                Ok(())
            }
            Expr::Eq(l, r) => write!(f, "{l} = {r}"),
            Expr::Forall(vars, body) => {
                let vs: Vec<String> = vars.iter().map(|(v, t)| format!("{v}: {t}")).collect();
                write!(f, "! [{}] : {body}", vs.join(", "))
            }
            Expr::Paren(e) => write!(f, "({e})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Type,
    Axiom,
    Conjecture,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Type => "type",
            Role::Axiom => "axiom",
            Role::Conjecture => "conjecture",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    TypeDecl(String, ThfType),
    Logic(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnnotatedFormula {
    pub name: String,
    pub role: Role,
    pub formula: Formula,
}

impl AnnotatedFormula {
    pub fn decl(name: &str, symbol: &str, ty: ThfType) -> Self {
        AnnotatedFormula { name: name.into(), role: Role::Type, formula: Formula::TypeDecl(symbol.into(), ty) }
    }

    pub fn logic(name: &str, role: Role, e: Expr) -> Self {
        AnnotatedFormula { name: name.into(), role, formula: Formula::Logic(e) }
    }
}

impl fmt::Display for AnnotatedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.formula {
            Formula::TypeDecl(sym, ty) => write!(f, "thf({},{},({sym}: {ty})).", self.name, self.role.as_str()),
            Formula::Logic(e) => write!(f, "thf({},{},{e}).", self.name, self.role.as_str()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ThfProblem {
    pub formulas: Vec<AnnotatedFormula>,
}

impl ThfProblem {
    pub fn get(&self, name: &str) -> Option<&AnnotatedFormula> {
        self.formulas.iter().find(|f| f.name == name)
    }

    pub fn conjecture(&self) -> Option<&AnnotatedFormula> {
        self.formulas.iter().find(|f| f.role == Role::Conjecture)
    }

    /// Names are unique and every constant is declared before use.
    pub fn check(&self) -> Result<(), String> {
        let mut names = std::collections::HashSet::new();
        let mut declared = std::collections::HashSet::new();
        for f in &self.formulas {
            if !names.insert(&f.name) {
                return Err(format!("duplicate formula name '{}'", f.name));
            }
            match &f.formula {
                Formula::TypeDecl(sym, _) => {
                    declared.insert(sym.clone());
                }
                Formula::Logic(e) => {
                    if let Some(c) = e.constants().into_iter().find(|c| !declared.contains(c)) {
                        return Err(format!("'{c}' used in {} before its declaration", f.name));
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn rename_types(&mut self, f: impl Fn(&str) -> String) {
        for af in &mut self.formulas {
            match &mut af.formula {
                Formula::TypeDecl(_, ty) => ty.rename(&f),
                Formula::Logic(e) => e.rename_types(&f),
            }
        }
    }
}

/// One formula per line.
pub fn emit(p: &ThfProblem) -> String {
    let mut out = String::new();
    for f in &p.formulas {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out
}

/// Comparison key for problem text: `%` comment lines dropped and all
/// whitespace deleted.
pub fn normalize_whitespace(text: &str) -> String {
    text.lines()
        .filter(|l| !l.trim_start().starts_with('%'))
        .flat_map(|l| l.chars())
        .filter(|c| !c.is_whitespace())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_declaration_text() {
        let p = ThfProblem { formulas: vec![AnnotatedFormula::decl("c_type", "c", ThfType::base("$tType"))] };
        assert_eq!(emit(&p), "thf(c_type,type,(c: $tType)).\n");
    }

    #[test]
    fn function_types_keep_grouping() {
        let cc = ThfType::fun(vec![ThfType::base("c"), ThfType::base("c")]);
        let t = ThfType::fun(vec![cc.clone(), cc.clone(), cc]);
        assert_eq!(t.to_string(), "(c > c) > (c > c) > (c > c)");
    }

    #[test]
    fn parentheses_are_explicit() {
        let multm = Expr::apply(Expr::cnst("multm"), vec![Expr::var("F"), Expr::var("G")]);
        let e = Expr::apply(multm, vec![Expr::var("X")]);
        assert_eq!(e.to_string(), "((multm @ F @ G) @ X)");
        let q = Expr::forall(vec![("X".into(), ThfType::base("c"))], Expr::paren(Expr::eq(e.clone(), Expr::var("X"))));
        assert_eq!(q.to_string(), "! [X: c] : (((multm @ F @ G) @ X) = X)");
        let bare = Expr::app(Expr::app(Expr::cnst("f"), vec![Expr::var("X")]), vec![Expr::var("Y")]);
        assert_eq!(bare.to_string(), "(f @ X) @ Y");
        assert_eq!(Expr::paren(e.clone()).unparen(), e.unparen());
    }

    #[test]
    fn whitespace_key() {
        assert_eq!(normalize_whitespace("% note\nthf(a, type,\n  (a: $tType))."), "thf(a,type,(a:$tType)).");
    }

    #[test]
    fn undeclared_constant_is_reported() {
        let p = ThfProblem {
            formulas: vec![AnnotatedFormula::logic(
                "ax",
                Role::Axiom,
                Expr::eq(Expr::app(Expr::cnst("f"), vec![Expr::var("X")]), Expr::var("X")),
            )],
        };
        assert!(p.check().is_err());
    }
}
