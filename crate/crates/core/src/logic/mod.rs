//! Symbols, literals, clauses and terms, the query formula language, CNF
//! conversion, subsumption and binary resolution.

mod clause;
mod formula;
mod symbol;

use thiserror::Error;

pub use clause::{mu_minimize, subsumes, Clause, ClauseSet, LiteralSet, Term};
pub use formula::{parse_formula, to_cnf, Formula, FormulaDisplay};
pub use symbol::{Alphabet, Literal, Symbol, SymbolId, SymbolKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("symbol `{0}` is declared twice")]
    DuplicateSymbol(String),
    #[error("pivot symbol #{} does not occur with opposite signs in the two clauses", .0 .0)]
    NotComplementary(SymbolId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    Undeclared(String),
}

/// Formula parse failure at a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}", self.message())]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn syntax(offset: usize, message: String) -> Self {
        ParseError {
            offset,
            kind: ParseErrorKind::Syntax(message),
        }
    }

    pub(crate) fn undeclared(offset: usize, name: &str) -> Self {
        ParseError {
            offset,
            kind: ParseErrorKind::Undeclared(name.to_owned()),
        }
    }

    fn message(&self) -> String {
        match &self.kind {
            ParseErrorKind::Syntax(m) => format!("syntax error at offset {}: {m}", self.offset),
            ParseErrorKind::Undeclared(name) => {
                format!("undeclared identifier `{name}` at offset {}", self.offset)
            }
        }
    }
}
