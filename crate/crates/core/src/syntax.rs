//! Text syntax for objects, morphism terms and equations.
//!
//! ```text
//! equation := seq '=' seq
//! seq      := par (';' par)*            f ; g  means  g ∘ f (left associative)
//! par      := prim ('*' prim)*          left associative
//! prim     := '(' seq ')' | gen
//! gen      := name '[' args ']' '~'?    '~' selects the inverse
//!           | 'id' '[' obj ']'
//! name     := mu | eta | delta | epsilon        (one atom: A or C)
//!           | alpha                              (three objects)
//!           | lambda | rho                       (one object)
//!           | sigma                              (two objects)
//! obj      := oprim ('*' oprim)*        left associative
//! oprim    := 'I' | 'A' | 'C' | '(' obj ')'
//! ```
//!
//! Printing with `Display` produces text that parses back to the same tree.

use crate::term::{Atom, Generator, MorphismTerm, Obj, ObjectExpr, Term};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at column {column}: {message}")]
pub struct SyntaxError {
    pub column: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src: src.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError { column: self.pos + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn ident(&mut self) -> Result<&'a str, SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a name");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn obj(&mut self) -> Result<ObjectExpr, SyntaxError> {
        let mut acc = self.obj_prim()?;
        while self.eat(b'*') {
            let rhs = self.obj_prim()?;
            acc = Obj::tensor(acc, rhs);
        }
        Ok(acc)
    }

    fn obj_prim(&mut self) -> Result<ObjectExpr, SyntaxError> {
        if self.eat(b'(') {
            let o = self.obj()?;
            self.expect(b')')?;
            return Ok(o);
        }
        let save = self.pos;
        match self.ident()? {
            "I" => Ok(Obj::Unit),
            "A" => Ok(Obj::Atom(Atom::A)),
            "C" => Ok(Obj::Atom(Atom::C)),
            other => {
                self.pos = save;
                self.err(format!("expected an object (I, A or C), found '{other}'"))
            }
        }
    }

    fn atom_arg(&mut self) -> Result<Atom, SyntaxError> {
        let save = self.pos;
        match self.ident()? {
            "A" => Ok(Atom::A),
            "C" => Ok(Atom::C),
            other => {
                self.pos = save;
                self.err(format!("expected A or C, found '{other}'"))
            }
        }
    }

    fn obj_args(&mut self, n: usize) -> Result<Vec<ObjectExpr>, SyntaxError> {
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            if i > 0 {
                self.expect(b',')?;
            }
            out.push(self.obj()?);
        }
        Ok(out)
    }

    fn seq(&mut self) -> Result<MorphismTerm, SyntaxError> {
        let mut acc = self.par()?;
        while self.eat(b';') {
            let next = self.par()?;
            acc = Term::seq(next, acc);
        }
        Ok(acc)
    }

    fn par(&mut self) -> Result<MorphismTerm, SyntaxError> {
        let mut acc = self.prim()?;
        while self.eat(b'*') {
            let rhs = self.prim()?;
            acc = Term::par(acc, rhs);
        }
        Ok(acc)
    }

    fn prim(&mut self) -> Result<MorphismTerm, SyntaxError> {
        if self.eat(b'(') {
            let t = self.seq()?;
            self.expect(b')')?;
            return Ok(t);
        }
        let save = self.pos;
        let name = self.ident()?;
        self.expect(b'[')?;
        let t = match name {
            "mu" | "eta" | "delta" | "epsilon" => {
                let a = self.atom_arg()?;
                Term::Gen(match name {
                    "mu" => Generator::Mu(a),
                    "eta" => Generator::Eta(a),
                    "delta" => Generator::Delta(a),
                    _ => Generator::Epsilon(a),
                })
            }
            "id" => Term::Id(self.obj()?),
            "alpha" => {
                let mut v = self.obj_args(3)?.into_iter();
                let (x, y, z) = (v.next().unwrap(), v.next().unwrap(), v.next().unwrap());
                Term::Gen(Generator::Alpha(x, y, z))
            }
            "lambda" => Term::Gen(Generator::Lambda(self.obj()?)),
            "rho" => Term::Gen(Generator::Rho(self.obj()?)),
            "sigma" => {
                let mut v = self.obj_args(2)?.into_iter();
                Term::Gen(Generator::Sigma(v.next().unwrap(), v.next().unwrap()))
            }
            other => {
                self.pos = save;
                return self.err(format!("unknown generator '{other}'"));
            }
        };
        self.expect(b']')?;
        if self.eat(b'~') {
            return match t {
                Term::Gen(g) => match invert(g) {
                    Some(inv) => Ok(Term::Gen(inv)),
                    None => self.err(format!("'{name}' has no inverse")),
                },
                _ => self.err("'id' has no inverse marker"),
            };
        }
        Ok(t)
    }
}

fn invert(g: Generator) -> Option<Generator> {
    use Generator::*;
    Some(match g {
        Alpha(x, y, z) => AlphaInv(x, y, z),
        Lambda(x) => LambdaInv(x),
        Rho(x) => RhoInv(x),
        Sigma(x, y) => SigmaInv(x, y),
        _ => return None,
    })
}

fn finish<T>(mut p: Parser<'_>, value: T) -> Result<T, SyntaxError> {
    if !p.at_end() {
        return p.err("unexpected trailing input");
    }
    Ok(value)
}

pub fn parse_object(src: &str) -> Result<ObjectExpr, SyntaxError> {
    let mut p = Parser::new(src);
    let o = p.obj()?;
    finish(p, o)
}

pub fn parse_term(src: &str) -> Result<MorphismTerm, SyntaxError> {
    let mut p = Parser::new(src);
    let t = p.seq()?;
    finish(p, t)
}

/// Parses `lhs = rhs`.
pub fn parse_equation_sides(src: &str) -> Result<(MorphismTerm, MorphismTerm), SyntaxError> {
    let mut p = Parser::new(src);
    let lhs = p.seq()?;
    p.expect(b'=')?;
    let rhs = p.seq()?;
    finish(p, (lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::build::*;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        let t = parse_term("mu[A] ; epsilon[A]").unwrap();
        assert_eq!(t, comp(g(Generator::Epsilon(Atom::A)), g(Generator::Mu(Atom::A))));
        let (d, c) = t.typecheck().unwrap();
        assert_eq!(format!("{d} -> {c}"), "A*A -> I");
    }

    #[test]
    fn object_associativity() {
        assert_eq!(parse_object("A*A*A").unwrap(), ot(ot(a(), a()), a()));
        assert_eq!(parse_object("A*(A*A)").unwrap(), ot(a(), ot(a(), a())));
        assert_eq!(parse_object("I").unwrap(), unit());
    }

    #[test]
    fn inverse_suffix() {
        let t = parse_term("alpha[A,A,A]~").unwrap();
        assert_eq!(t, g(Generator::AlphaInv(a(), a(), a())));
        assert!(parse_term("mu[A]~").is_err());
    }

    #[test]
    fn errors_report_column() {
        let e = parse_term("mu[A] ; bogus[A]").unwrap_err();
        assert_eq!(e.column, 9);
        assert!(parse_term("mu[A").is_err());
        assert!(parse_term("mu[A] extra").is_err());
        assert!(parse_object("B").is_err());
    }

    #[test]
    fn equation_sides() {
        let (l, r) = parse_equation_sides("sigma[A,A] ; sigma[A,A]~ = id[A] * id[A]").unwrap();
        assert_eq!(l.typecheck().unwrap(), r.typecheck().unwrap());
    }

    fn arb_obj() -> impl Strategy<Value = ObjectExpr> {
        let leaf = prop_oneof![Just(unit()), Just(a()), Just(c())];
        leaf.prop_recursive(3, 8, 2, |inner| {
            (inner.clone(), inner).prop_map(|(l, r)| ot(l, r))
        })
    }

    fn arb_term() -> impl Strategy<Value = MorphismTerm> {
        let atom = prop_oneof![Just(Atom::A), Just(Atom::C)];
        let leaf = prop_oneof![
            atom.clone().prop_map(|x| g(Generator::Mu(x))),
            atom.clone().prop_map(|x| g(Generator::Eta(x))),
            atom.prop_map(|x| g(Generator::Delta(x))),
            arb_obj().prop_map(id),
            (arb_obj(), arb_obj(), arb_obj()).prop_map(|(x, y, z)| g(Generator::AlphaInv(x, y, z))),
            arb_obj().prop_map(|x| g(Generator::Rho(x))),
            (arb_obj(), arb_obj()).prop_map(|(x, y)| g(Generator::Sigma(x, y))),
        ];
        leaf.prop_recursive(3, 12, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| comp(l, r)),
                (inner.clone(), inner).prop_map(|(l, r)| tens(l, r)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(t in arb_term()) {
            let text = t.to_string();
            prop_assert_eq!(parse_term(&text).unwrap(), t);
        }

        #[test]
        fn object_round_trip(o in arb_obj()) {
            prop_assert_eq!(parse_object(&o.to_string()).unwrap(), o);
        }
    }
}
