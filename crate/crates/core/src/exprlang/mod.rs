//! Surface syntax for theta identities.
//!
//! ```text
//! identity := expr "=" expr ;
//! expr     := term (("+" | "-") term)* ;
//! term     := factor ("*" factor)* ;
//! factor   := ("-")? atom ("^" signed_integer)? ;
//! atom     := integer | integer "/" integer | "a" | "b" | "q" | "i" | "omega"
//!           | "zeta" "(" integer "," integer ")" | "f" "(" expr "," expr ")"
//!           | "Re" "(" expr ")" | "Im" "(" expr ")" | "specq" "(" expr ")"
//!           | "(" expr ")" ;
//! ```
//!
//! `*` is mandatory between factors and `^` does not chain (`a^2^3` is rejected).

mod lexer;
mod parser;
mod printer;

use thiserror::Error;

pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse_expr, parse_identity};
pub use printer::print_expr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {}, found {found}", expected.join(" | "))]
    Syntax {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },

    #[error("exponent at offset {offset} is not an integer")]
    ExponentNotInteger { offset: usize },

    #[error("identity has no top-level '='")]
    MissingEquals,

    #[error("identity has more than one '=' (second at offset {offset})")]
    MultipleEquals { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::ExponentNotInteger { offset }
            | ParseError::MultipleEquals { offset } => Some(*offset),
            ParseError::MissingEquals => None,
        }
    }
}
