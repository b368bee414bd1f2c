//! Browser bindings for three operations: the tangle polynomial of a rank
//! table, a term evaluated in a built-in model, and the permutation of a
//! loop braid word. See `www/index.html`.

use wasm_bindgen::prelude::*;

use cobord::khovanov::{builtin_table, tangle_polynomial, RankTable};
use cobord::loop_braid::{to_permutations, LoopBraidWord};
use cobord::semantics::{evaluate, FrobeniusModel};
use cobord::syntax::parse_term;

/// `table` is either a built-in name or lines of `r k rank`.
pub fn polynomial(table: &str) -> Result<String, String> {
    let t = match builtin_table(table.trim()) {
        Some(t) => t,
        None => RankTable::parse("input", table).map_err(|e| e.to_string())?,
    };
    Ok(tangle_polynomial(&t).to_string())
}

pub fn evaluate_in(term: &str, model: &str) -> Result<String, String> {
    let m = FrobeniusModel::builtin(model).ok_or_else(|| format!("unknown model '{model}'"))?;
    let t = parse_term(term).map_err(|e| e.to_string())?;
    evaluate(&t, &m).map(|v| v.to_string()).map_err(|e| e.to_string())
}

pub fn permutation(word: &str, n: usize) -> Result<String, String> {
    let w = LoopBraidWord::parse(n, word).map_err(|e| e.to_string())?;
    Ok(format!("{}\n{}", w.reduced(), to_permutations(&w)))
}

#[wasm_bindgen]
pub fn tangle_poly(table: &str) -> Result<String, JsError> {
    polynomial(table).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn eval_term(term: &str, model: &str) -> Result<String, JsError> {
    evaluate_in(term, model).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn braid_perm(word: &str, n: usize) -> Result<String, JsError> {
    permutation(word, n).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials() {
        assert_eq!(polynomial("barnatan").unwrap(), "A^2 + A^4 + t^2*A^8 + t^2*A^12");
        assert_eq!(polynomial("0 2 1\n2 10 2").unwrap(), "A^2 + 2*t^2*A^10");
        assert!(polynomial("0 x").is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(evaluate_in("eta[C] ; epsilon[C]", "K").unwrap(), "I -> I (1x1)\n[0]\n");
        assert!(evaluate_in("mu[A] ; mu[A]", "K").is_err());
        assert!(evaluate_in("mu[A]", "Z").is_err());
    }

    #[test]
    fn braids() {
        assert_eq!(permutation("s1 s1^-1 r2", 3).unwrap(), "r2\n(2 3)");
        assert!(permutation("s9", 3).is_err());
    }
}
