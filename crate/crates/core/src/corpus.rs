//! Named equations: the coherence and braiding identities, the Frobenius
//! axioms in emitted form, and a corpus of derived Frobenius theorems.
//!
//! A preset is named `name` or `name@arg,arg,...`; arguments are objects
//! (or atoms, for the Frobenius presets) and default to `A`.

use thiserror::Error;

use crate::rewrite::{standard_axioms, Equation, RewriteRule};
use crate::syntax::{parse_object, parse_term};
use crate::term::ObjectExpr;
use crate::tptp::{encode_equation, EncodeError, EncodeOptions, PatternEquation, Profile, ThfProblem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preset {
    /// The canonical spelling, with arguments.
    pub name: String,
    pub equation: PatternEquation,
    pub profile: Profile,
    pub conjecture: String,
}

impl Preset {
    pub fn ground(&self) -> Option<Equation> {
        self.equation.ground()
    }

    pub fn encode(&self, axioms: &[RewriteRule], strict_tptp: bool) -> Result<ThfProblem, EncodeError> {
        encode_equation(
            &self.equation,
            axioms,
            &EncodeOptions {
                profile: Some(self.profile),
                conjecture_name: Some(self.conjecture.clone()),
                strict_tptp,
            },
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresetError {
    #[error("unknown preset '{0}'")]
    Unknown(String),
    #[error("preset '{name}' takes {expected} argument(s), got {got}")]
    Arity { name: String, expected: usize, got: usize },
    #[error("bad argument '{arg}': {message}")]
    Argument { arg: String, message: String },
    #[error("preset '{name}' is ill-typed for these arguments: {message}")]
    IllTyped { name: String, message: String },
}

enum Args {
    /// Objects substituted for `{0}`, `{1}`, ...
    Objects(usize),
    /// One atom substituted for `O`.
    Atom,
    None,
}

struct Def {
    name: &'static str,
    args: Args,
    profile: Profile,
    conjecture: &'static str,
    lhs: &'static str,
    rhs: &'static str,
}

const fn obj(n: usize, name: &'static str, profile: Profile, conjecture: &'static str, lhs: &'static str, rhs: &'static str) -> Def {
    Def { name, args: Args::Objects(n), profile, conjecture, lhs, rhs }
}

const fn frob(name: &'static str, conjecture: &'static str, lhs: &'static str, rhs: &'static str) -> Def {
    Def { name, args: Args::Atom, profile: Profile::Frobenius, conjecture, lhs, rhs }
}

const ZIG: &str = "rho[O]~ ; id[O] * eta[O] ; id[O] * delta[O] ; alpha[O,O,O]~ ; mu[O] * id[O] ; epsilon[O] * id[O] ; lambda[O]";
const ZAG: &str = "lambda[O]~ ; eta[O] * id[O] ; delta[O] * id[O] ; alpha[O,O,O] ; id[O] * mu[O] ; id[O] * epsilon[O] ; rho[O]";
const COPAIR_L: &str = "rho[O]~ ; id[O] * eta[O] ; id[O] * delta[O] ; alpha[O,O,O]~ ; mu[O] * id[O]";
const COPAIR_R: &str = "lambda[O]~ ; eta[O] * id[O] ; delta[O] * id[O] ; alpha[O,O,O] ; id[O] * mu[O]";
const HANDLE_L: &str = "delta[O] ; delta[O] * id[O] ; alpha[O,O,O] ; alpha[O,O,O]~ ; mu[O] * id[O]";
const HANDLE_R: &str = "delta[O] ; id[O] * delta[O] ; id[O] * mu[O]";
const HANDLE_M_L: &str = "id[O] * delta[O] ; alpha[O,O,O]~ ; alpha[O,O,O] ; id[O] * mu[O] ; mu[O]";
const HANDLE_M_R: &str = "delta[O] * id[O] ; mu[O] * id[O] ; mu[O]";

const DEFS: &[Def] = &[
    obj(
        4,
        "pentagon",
        Profile::Monoidal,
        "conje",
        "alpha[{0},{1},{2}] * id[{3}] ; alpha[{0},{1}*{2},{3}] ; id[{0}] * alpha[{1},{2},{3}]",
        "alpha[{0}*{1},{2},{3}] ; alpha[{0},{1},{2}*{3}]",
    ),
    obj(2, "triangle", Profile::Monoidal, "conje2", "alpha[{0},I,{1}] ; id[{0}] * lambda[{1}]", "rho[{0}] * id[{1}]"),
    Def { name: "braid-naturality", args: Args::None, profile: Profile::Naturality, conjecture: "conje", lhs: "", rhs: "" },
    obj(2, "braid-inverse", Profile::BraidInverse, "conje1", "sigma[{0},{1}] ; sigma[{0},{1}]~", "id[{0}] * id[{1}]"),
    obj(
        3,
        "hexagon",
        Profile::Hexagon,
        "conje",
        "alpha[{0},{1},{2}]~ ; sigma[{0},{1}] * id[{2}] ; alpha[{1},{0},{2}] ; id[{1}] * sigma[{0},{2}] ; alpha[{1},{2},{0}]~",
        "sigma[{0},{1}*{2}]",
    ),
    obj(
        3,
        "hexagon2",
        Profile::Hexagon,
        "conj1",
        "alpha[{0},{1},{2}] ; id[{0}] * sigma[{1},{2}] ; alpha[{0},{2},{1}]~ ; sigma[{0},{2}] * id[{1}] ; alpha[{2},{0},{1}]",
        "sigma[{0}*{1},{2}]",
    ),
    obj(
        3,
        "yang-baxter",
        Profile::YangBaxter,
        "conjeYB",
        "sigma[{0},{1}] * id[{2}] ; alpha[{1},{0},{2}] ; id[{1}] * sigma[{0},{2}] ; alpha[{1},{2},{0}]~ ; sigma[{1},{2}] * id[{0}]",
        "id[{0}] * sigma[{1},{2}] ; alpha[{0},{2},{1}]~ ; sigma[{0},{2}] * id[{1}] ; alpha[{2},{0},{1}] ; id[{2}] * sigma[{0},{1}] ; alpha[{2},{1},{0}]~",
    ),
    frob("frobenius", "conj", "id[O] * delta[O] ; alpha[O,O,O]~ ; mu[O] * id[O]", "mu[O] ; delta[O]"),
    frob("frobenius-right", "conj", "delta[O] * id[O] ; alpha[O,O,O] ; id[O] * mu[O]", "mu[O] ; delta[O]"),
    frob("assoc", "conj", "alpha[O,O,O] ; id[O] * mu[O] ; mu[O]", "mu[O] * id[O] ; mu[O]"),
    frob("coassoc", "conj", "delta[O] ; id[O] * delta[O]", "delta[O] ; delta[O] * id[O] ; alpha[O,O,O]"),
    frob("zigzag", "conj7", ZIG, ZAG),
    frob(
        "conj",
        "conj",
        "eta[O] * id[O] ; delta[O] * id[O] ; alpha[O,O,O] ; id[O] * mu[O] ; id[O] * epsilon[O]",
        "eta[O] * id[O] ; mu[O] ; delta[O] ; id[O] * epsilon[O]",
    ),
    frob("conj2", "conj2", "lambda[O]~ ; eta[O] * id[O] ; mu[O] ; delta[O] ; id[O] * epsilon[O] ; rho[O]", "id[O]"),
    frob(
        "conj3",
        "conj3",
        "id[O] * eta[O] ; id[O] * delta[O] ; alpha[O,O,O]~ ; mu[O] * id[O] ; epsilon[O] * id[O]",
        "id[O] * eta[O] ; mu[O] ; delta[O] ; epsilon[O] * id[O]",
    ),
    frob("conj4", "conj4", "rho[O]~ ; id[O] * eta[O] ; mu[O] ; delta[O] ; epsilon[O] * id[O] ; lambda[O]", "id[O]"),
    frob("conj5", "conj5", ZIG, "id[O]"),
    frob("conj6", "conj6", ZAG, "id[O]"),
    frob("conj7", "conj7", ZIG, ZAG),
    frob("conj8", "conj8", "mu[O] * id[O] ; mu[O] ; epsilon[O]", "alpha[O,O,O] ; id[O] * mu[O] ; mu[O] ; epsilon[O]"),
    frob("conj9", "conj9", "eta[O] ; delta[O] ; delta[O] * id[O] ; alpha[O,O,O]", "eta[O] ; delta[O] ; id[O] * delta[O]"),
    frob("conj10", "conj10", COPAIR_L, "delta[O]"),
    frob("conj11", "conj11", COPAIR_R, "delta[O]"),
    frob("conj12", "conj12", COPAIR_L, COPAIR_R),
    frob("conj13", "conj13", HANDLE_L, "delta[O] ; mu[O] ; delta[O]"),
    frob("conj14", "conj14", HANDLE_L, HANDLE_R),
    frob("conj15", "conj15", HANDLE_R, "delta[O] ; mu[O] ; delta[O]"),
    frob("conj16", "conj16", HANDLE_M_L, HANDLE_M_R),
    frob("conj17", "conj17", HANDLE_M_R, "mu[O] ; delta[O] ; mu[O]"),
    frob("conj18", "conj18", HANDLE_M_L, "mu[O] ; delta[O] ; mu[O]"),
];

/// Preset names in listing order.
pub fn preset_names() -> Vec<&'static str> {
    DEFS.iter().map(|d| d.name).collect()
}

fn parse_args(text: &str) -> Result<Vec<ObjectExpr>, PresetError> {
    text.split(',')
        .map(|a| {
            parse_object(a.trim())
                .map_err(|e| PresetError::Argument { arg: a.trim().to_string(), message: e.to_string() })
        })
        .collect()
}

pub fn preset(spec: &str) -> Result<Preset, PresetError> {
    let (name, args) = match spec.split_once('@') {
        Some((n, a)) => (n.trim(), Some(parse_args(a)?)),
        None => (spec.trim(), None),
    };
    let def = DEFS.iter().find(|d| d.name == name).ok_or_else(|| PresetError::Unknown(name.to_string()))?;
    let arity = |n: usize, args: &Option<Vec<ObjectExpr>>| -> Result<Vec<ObjectExpr>, PresetError> {
        match args {
            None => Ok(vec![crate::term::build::a(); n]),
            Some(v) if v.len() == n => Ok(v.clone()),
            Some(v) => Err(PresetError::Arity { name: name.to_string(), expected: n, got: v.len() }),
        }
    };
    let ill = |e: &dyn std::fmt::Display| PresetError::IllTyped { name: name.to_string(), message: e.to_string() };
    let (lhs, rhs, canonical) = match def.args {
        Args::None => {
            if let Some(a) = args {
                return Err(PresetError::Arity { name: name.to_string(), expected: 0, got: a.len() });
            }
            let rule = standard_axioms().into_iter().find(|r| r.name == "braid.naturality").expect("built-in rule");
            (rule.lhs, rule.rhs, name.to_string())
        }
        Args::Objects(n) => {
            let objs = arity(n, &args)?;
            let fill = |t: &str| {
                objs.iter().enumerate().fold(t.to_string(), |s, (i, o)| s.replace(&format!("{{{i}}}"), &format!("({o})")))
            };
            let l = parse_term(&fill(def.lhs)).map_err(|e| ill(&e))?;
            let r = parse_term(&fill(def.rhs)).map_err(|e| ill(&e))?;
            let shown: Vec<String> = objs.iter().map(|o| o.to_string()).collect();
            (l.lift(), r.lift(), format!("{name}@{}", shown.join(",")))
        }
        Args::Atom => {
            let objs = arity(1, &args)?;
            let atom = match &objs[0] {
                crate::term::Obj::Atom(a) => *a,
                o => return Err(PresetError::Argument { arg: o.to_string(), message: "expected an atom, A or C".into() }),
            };
            let fill = |t: &str| t.replace('O', &atom.to_string());
            let l = parse_term(&fill(def.lhs)).map_err(|e| ill(&e))?;
            let r = parse_term(&fill(def.rhs)).map_err(|e| ill(&e))?;
            (l.lift(), r.lift(), format!("{name}@{atom}"))
        }
    };
    let equation = PatternEquation::new(lhs, rhs);
    if !matches!(def.args, Args::None) && equation.ground().is_none() {
        return Err(ill(&format!("sides of {equation} do not agree")));
    }
    Ok(Preset { name: canonical, equation, profile: def.profile, conjecture: def.conjecture.to_string() })
}

/// Every ground preset at its default arguments, and the Frobenius ones
/// on both atoms.
pub fn theorem_corpus() -> Vec<Preset> {
    let mut out = Vec::new();
    for d in DEFS {
        match d.args {
            Args::None => {}
            Args::Objects(_) => out.push(preset(d.name).expect("built-in preset")),
            Args::Atom => {
                out.push(preset(&format!("{}@A", d.name)).expect("built-in preset"));
                out.push(preset(&format!("{}@C", d.name)).expect("built-in preset"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_parse_and_typecheck() {
        for name in preset_names() {
            let p = preset(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            if name != "braid-naturality" {
                assert!(p.ground().is_some(), "{name}");
            }
        }
    }

    #[test]
    fn arguments() {
        assert_eq!(preset("yang-baxter@A,A,A").unwrap().name, "yang-baxter@A,A,A");
        assert_eq!(preset("pentagon@A,C,A*A,I").unwrap().name, "pentagon@A,C,A*A,I");
        assert!(matches!(preset("pentagon@A"), Err(PresetError::Arity { expected: 4, got: 1, .. })));
        assert!(matches!(preset("zigzag@A*A"), Err(PresetError::Argument { .. })));
        assert!(matches!(preset("nope"), Err(PresetError::Unknown(_))));
        assert!(matches!(preset("pentagon@A,Q"), Err(PresetError::Argument { .. })));
    }

    #[test]
    fn corpus_covers_both_atoms() {
        let c = theorem_corpus();
        assert!(c.iter().any(|p| p.name == "conj18@C"));
        assert!(c.iter().any(|p| p.name == "yang-baxter@A,A,A"));
        assert!(c.len() > 40);
    }
}
