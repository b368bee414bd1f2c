//! Terms, rewriting and semantic models for open-closed cobordisms and
//! braided monoidal categories, with TPTP export and knot-invariant
//! helpers.

pub mod corpus;
pub mod khovanov;
pub mod loop_braid;
pub mod rewrite;
pub mod semantics;
pub mod syntax;
pub mod term;
pub mod tptp;
