//! First-order syntax over the stratified languages and its arithmetization.

mod formula;
mod godel;
mod language;
mod term;
mod text;

pub use formula::{Formula, PrRel};
pub use godel::{conj_code, godel_decode, godel_encode, subst_numeral, term_decode, term_encode};
pub(crate) use godel::{read_formula, write_formula};
pub use language::{in_language, Layer, LanguageId, ParseLanguageError};
pub use term::{numeral, PrFun, Term};
pub use text::{parse_formula, parse_index, parse_term, print_index, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("not a Gödel code of a formula")]
    InvalidCode,
    #[error("formula does not have exactly one free variable")]
    NotAPredicate,
}

/// Universal closure, quantifying free variables in ascending order.
pub fn universal_closure(f: &Formula) -> Formula {
    f.universal_closure()
}

pub fn is_predicate(f: &Formula) -> bool {
    f.is_predicate()
}
