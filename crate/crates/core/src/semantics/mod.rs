//! Exact evaluation of terms as rational matrices in a finite-dimensional
//! Frobenius model.
//!
//! The space of `x ⊗ y` has basis `e_i ⊗ f_j` at index `i * dim(y) + j`,
//! so tensor products of maps are Kronecker products and the associators
//! and unitors are identity matrices.

mod matrix;
mod model;

pub use matrix::{invert, LinearMap, Q};
pub use model::{
    load_model, model_to_toml, validate_model, Algebra, FrobeniusModel, Law, LawCheck, ModelError,
    ValidationReport,
};

use thiserror::Error;

use crate::term::{Generator, MorphismTerm, ObjectExpr, Term, TypeMismatch};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Type(#[from] TypeMismatch),
    #[error("object {0} has no comultiplication in this model (singular pairing)")]
    NoComultiplication(String),
}

pub fn dimension(x: &ObjectExpr, m: &FrobeniusModel) -> usize {
    x.atoms().into_iter().map(|a| m.algebra(a).dim()).product()
}

/// Evaluates a term that typechecks up to strictification.
pub fn evaluate(t: &MorphismTerm, m: &FrobeniusModel) -> Result<LinearMap, EvalError> {
    let (dom, cod) = t.typecheck_strict()?;
    let mut out = eval(t, m)?;
    out.dom = dom;
    out.cod = cod;
    Ok(out)
}

fn eval(t: &MorphismTerm, m: &FrobeniusModel) -> Result<LinearMap, EvalError> {
    Ok(match t {
        Term::Id(x) => LinearMap::identity(dimension(x, m), x.clone()),
        Term::Seq(after, before) => eval(after, m)?.compose(&eval(before, m)?),
        Term::Par(l, r) => eval(l, m)?.kron(&eval(r, m)?),
        Term::Var(v) => match *v {},
        Term::Gen(g) => match g {
            Generator::Mu(a) => m.algebra(*a).mu_matrix(*a),
            Generator::Eta(a) => m.algebra(*a).eta_matrix(*a),
            Generator::Epsilon(a) => m.algebra(*a).epsilon_matrix(*a),
            Generator::Delta(a) => m
                .algebra(*a)
                .delta_matrix(*a)
                .ok_or_else(|| EvalError::NoComultiplication(a.to_string()))?,
            Generator::Sigma(x, y) => {
                LinearMap::swap(dimension(x, m), dimension(y, m), g.dom(), g.cod())
            }
            Generator::SigmaInv(x, y) => {
                LinearMap::swap(dimension(y, m), dimension(x, m), g.dom(), g.cod())
            }
            _ => {
                let mut id = LinearMap::identity(dimension(&g.dom(), m), g.dom());
                id.cod = g.cod();
                id
            }
        },
    })
}

/// `ε ∘ (μ∘Δ)^genus ∘ η` on the closed object.
pub fn closed_surface_value(m: &FrobeniusModel, genus: usize) -> Result<Q, EvalError> {
    use crate::term::Atom::C;
    let mut chain = vec![Term::Gen(Generator::Eta(C))];
    for _ in 0..genus {
        chain.push(Term::Gen(Generator::Delta(C)));
        chain.push(Term::Gen(Generator::Mu(C)));
    }
    chain.push(Term::Gen(Generator::Epsilon(C)));
    let v = evaluate(&Term::from_chain(chain), m)?;
    Ok(v.scalar().expect("closed surfaces evaluate to scalars"))
}

/// Whether both sides evaluate to the same matrix.
pub fn equal_in(lhs: &MorphismTerm, rhs: &MorphismTerm, m: &FrobeniusModel) -> Result<bool, EvalError> {
    Ok(evaluate(lhs, m)?.same_entries(&evaluate(rhs, m)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_term;

    fn k() -> FrobeniusModel {
        FrobeniusModel::khovanov()
    }

    fn ev(src: &str) -> LinearMap {
        evaluate(&parse_term(src).unwrap(), &k()).unwrap()
    }

    #[test]
    fn identity_and_swap() {
        assert!(ev("id[A]").is_identity());
        assert_eq!(ev("id[A]").rows, 2);
        let s = ev("sigma[A,A]");
        assert_eq!(s.rows, 4);
        assert!(s.compose(&s).is_identity());
        assert!(!s.is_identity());
    }

    #[test]
    fn structural_maps_are_identities() {
        assert!(ev("alpha[A,A,A]").is_identity());
        assert!(ev("lambda[A]").is_identity());
        assert!(ev("rho[A*A]~").is_identity());
    }

    #[test]
    fn surfaces_in_k() {
        assert_eq!(closed_surface_value(&k(), 0).unwrap(), Q::from_integer(0));
        assert_eq!(closed_surface_value(&k(), 1).unwrap(), Q::from_integer(2));
    }

    #[test]
    fn type_errors_propagate() {
        assert!(matches!(evaluate(&parse_term("mu[A] ; mu[A]").unwrap(), &k()), Err(EvalError::Type(_))));
    }

    /// 2×2 matrices with the trace as counit: a noncommutative
    /// Frobenius algebra.
    fn matrices() -> FrobeniusModel {
        let d = 4;
        let mut mult = vec![vec![vec![Q::from_integer(0); d]; d]; d];
        for (i, row) in mult.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                // E_ab E_cd = [b == c] E_ad
                let (a, b, c, e) = (i / 2, i % 2, j / 2, j % 2);
                if b == c {
                    out[a * 2 + e] = Q::from_integer(1);
                }
            }
        }
        let q = |v: [i64; 4]| v.iter().map(|&x| Q::from_integer(x)).collect();
        let basis = ["E00", "E01", "E10", "E11"].map(String::from).to_vec();
        let alg = Algebra::new(basis, mult, q([1, 0, 0, 1]), q([1, 0, 0, 1]));
        FrobeniusModel { name: "M2".into(), open: alg.clone(), closed: alg }
    }

    #[test]
    fn commutativity_depends_on_the_model() {
        let lhs = parse_term("sigma[A,A] ; mu[A]").unwrap();
        let rhs = parse_term("mu[A]").unwrap();
        assert!(equal_in(&lhs, &rhs, &k()).unwrap());
        let m2 = matrices();
        assert!(validate_model(&m2).all_passed());
        assert!(!equal_in(&lhs, &rhs, &m2).unwrap());
    }
}
