use thiserror::Error;

use super::{AnnotatedFormula, Expr, Formula, Role, ThfProblem, ThfType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Lower(String),
    Upper(String),
    Punct(char),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Lower(s) | Tok::Upper(s) => format!("'{s}'"),
            Tok::Punct(c) => format!("'{c}'"),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexed {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Lexed>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, column);
        if c == '%' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                column += 1;
            }
        } else if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c.is_ascii_alphanumeric() || c == '$' || c == '_' {
            let mut word = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '$' || c == '_' {
                    word.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            let tok = if word.starts_with(|c: char| c.is_ascii_uppercase()) { Tok::Upper(word) } else { Tok::Lower(word) };
            out.push(Lexed { tok, line: l0, column: c0 });
        } else if "()[],:.@=!>".contains(c) {
            chars.next();
            column += 1;
            out.push(Lexed { tok: Tok::Punct(c), line: l0, column: c0 });
        } else {
            return Err(ParseError { line, column, expected: vec!["a THF token".into()], found: format!("'{c}'") });
        }
    }
    out.push(Lexed { tok: Tok::Eof, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let l = &self.toks[self.pos];
        ParseError {
            line: l.line,
            column: l.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: l.tok.describe(),
        }
    }

    fn punct(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Punct(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Lower(s) | Tok::Upper(s) => {
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error(&["a name"])),
        }
    }

    fn upper(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Upper(s) => {
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error(&["a variable"])),
        }
    }

    fn formula(&mut self) -> Result<AnnotatedFormula, ParseError> {
        match self.peek() {
            Tok::Lower(s) if s == "thf" => self.pos += 1,
            _ => return Err(self.error(&["'thf'"])),
        }
        self.punct('(')?;
        let name = self.word()?;
        self.punct(',')?;
        let role = match self.peek() {
            Tok::Lower(s) if s == "type" => Role::Type,
            Tok::Lower(s) if s == "axiom" => Role::Axiom,
            Tok::Lower(s) if s == "conjecture" => Role::Conjecture,
            _ => return Err(self.error(&["'type'", "'axiom'", "'conjecture'"])),
        };
        self.pos += 1;
        self.punct(',')?;
        let formula = if role == Role::Type { self.type_decl()? } else { Formula::Logic(self.logic()?) };
        self.punct(')')?;
        self.punct('.')?;
        Ok(AnnotatedFormula { name, role, formula })
    }

    fn type_decl(&mut self) -> Result<Formula, ParseError> {
        if self.eat('(') {
            let f = self.type_decl()?;
            self.punct(')')?;
            return Ok(f);
        }
        let sym = self.word()?;
        self.punct(':')?;
        Ok(Formula::TypeDecl(sym, self.ty()?))
    }

    fn ty(&mut self) -> Result<ThfType, ParseError> {
        let mut parts = vec![self.ty_atom()?];
        while self.eat('>') {
            parts.push(self.ty_atom()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { ThfType::Fun(parts) })
    }

    fn ty_atom(&mut self) -> Result<ThfType, ParseError> {
        if self.eat('(') {
            let t = self.ty()?;
            self.punct(')')?;
            return Ok(t);
        }
        match self.peek().clone() {
            Tok::Lower(s) => {
                self.pos += 1;
                Ok(ThfType::Base(s))
            }
            _ => Err(self.error(&["a type", "'('"])),
        }
    }

    fn logic(&mut self) -> Result<Expr, ParseError> {
        if self.eat('!') {
            self.punct('[')?;
            let mut vars = Vec::new();
            loop {
                let v = self.upper()?;
                self.punct(':')?;
                vars.push((v, self.ty()?));
                if !self.eat(',') {
                    break;
                }
            }
            self.punct(']')?;
            self.punct(':')?;
            return Ok(Expr::Forall(vars, Box::new(self.logic()?)));
        }
        let lhs = self.app()?;
        if self.eat('=') {
            let rhs = self.app()?;
            return Ok(Expr::eq(lhs, rhs));
        }
        Ok(lhs)
    }

    fn app(&mut self) -> Result<Expr, ParseError> {
        let head = self.atom()?;
        let mut args = Vec::new();
        while self.eat('@') {
            args.push(self.atom()?);
        }
        Ok(if args.is_empty() { head } else { Expr::App(Box::new(head), args) })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Punct('(') => {
                self.pos += 1;
                let e = self.logic()?;
                self.punct(')')?;
                Ok(Expr::paren(e))
            }
            Tok::Lower(s) => {
                self.pos += 1;
                Ok(Expr::Const(s))
            }
            Tok::Upper(s) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            _ => Err(self.error(&["a name", "a variable", "'('"])),
        }
    }
}

/// Parses a sequence of `thf(name, role, formula).` entries; `%` starts a
/// comment running to the end of the line. Parentheses are kept.
pub fn parse(src: &str) -> Result<ThfProblem, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let mut formulas = Vec::new();
    while *p.peek() != Tok::Eof {
        formulas.push(p.formula()?);
    }
    Ok(ThfProblem { formulas })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tptp::emit;

    #[test]
    fn reads_declarations_and_axioms() {
        let src = "% comment\nthf(c_type,type,(c: $tType)).\nthf(multm_decl, type, (multm: (c > c) > (c > c) > (c > c) )).\n\
                   thf(axio2, axiom, (! [X: c] : ( ( iden @ X ) = X ) )).";
        let p = parse(src).unwrap();
        assert_eq!(p.formulas.len(), 3);
        assert_eq!(p.formulas[1].to_string(), "thf(multm_decl,type,(multm: (c > c) > (c > c) > (c > c))).");
        assert_eq!(p.formulas[2].to_string(), "thf(axio2,axiom,(! [X: c] : ((iden @ X) = X))).");
    }

    #[test]
    fn application_heads_keep_their_grouping() {
        let p = parse("thf(a,axiom,(! [F: c > c, X: c] : ((multm @ F @ F) @ X = multm @ F @ F @ X))).").unwrap();
        let Formula::Logic(e) = &p.formulas[0].formula else { panic!() };
        let Expr::Forall(_, body) = e.unparen() else { panic!() };
        let Expr::Eq(l, r) = *body else { panic!() };
        assert_ne!(l, r);
    }

    #[test]
    fn truncated_input_reports_position() {
        let e = parse("thf(x,axiom,(").unwrap_err();
        assert_eq!(e.line, 1);
        assert_eq!(e.column, 14);
        assert!(e.found.contains("end of input"));
        assert!(!e.expected.is_empty());
    }

    #[test]
    fn unknown_role_is_rejected() {
        let e = parse("thf(x,lemma,(a = b)).").unwrap_err();
        assert!(e.expected.contains(&"'axiom'".to_string()));
    }

    #[test]
    fn round_trip() {
        let src = "thf(conje,conjecture,(! [X: c, Y: c] : ((braid @ (multo @ X @ Y)) = (multo @ (up @ Y) @ (down @ X))))).\n";
        let p = parse(src).unwrap();
        assert_eq!(emit(&p), src);
        assert_eq!(parse(&emit(&p)).unwrap(), p);
    }
}
