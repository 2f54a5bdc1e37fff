use std::collections::BTreeSet;
use std::fmt;

use super::{mu_minimize, Alphabet, Clause, Literal, LiteralSet, ParseError, SymbolId};

/// Propositional formula over declared symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(SymbolId),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(symbol: SymbolId) -> Self {
        Formula::Atom(symbol)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn literal(literal: Literal) -> Self {
        let atom = Formula::Atom(literal.symbol());
        if literal.is_positive() {
            atom
        } else {
            Formula::not(atom)
        }
    }

    /// The disjunction of the clause's literals. The empty clause has no
    /// formula in the query language, so `None` is returned for it.
    pub fn from_clause(clause: &Clause) -> Option<Self> {
        clause.iter().map(Formula::literal).reduce(Formula::or)
    }

    pub fn eval<F: Fn(SymbolId) -> bool + Copy>(&self, value: F) -> bool {
        match self {
            Formula::Atom(s) => value(*s),
            Formula::Not(f) => !f.eval(value),
            Formula::And(a, b) => a.eval(value) && b.eval(value),
            Formula::Or(a, b) => a.eval(value) || b.eval(value),
            Formula::Implies(a, b) => !a.eval(value) || b.eval(value),
        }
    }

    pub fn symbols(&self) -> BTreeSet<SymbolId> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut BTreeSet<SymbolId>) {
        match self {
            Formula::Atom(s) => {
                out.insert(*s);
            }
            Formula::Not(f) => f.collect_symbols(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> FormulaDisplay<'a> {
        FormulaDisplay {
            formula: self,
            alphabet,
        }
    }
}

pub struct FormulaDisplay<'a> {
    formula: &'a Formula,
    alphabet: &'a Alphabet,
}

impl FormulaDisplay<'_> {
    // precedence levels: 0 implies, 1 or, 2 and, 3 unary
    fn write(&self, f: &mut fmt::Formatter<'_>, node: &Formula, ctx: u8) -> fmt::Result {
        let level = match node {
            Formula::Atom(_) | Formula::Not(_) => 3,
            Formula::And(..) => 2,
            Formula::Or(..) => 1,
            Formula::Implies(..) => 0,
        };
        let paren = level < ctx;
        if paren {
            f.write_str("(")?;
        }
        match node {
            Formula::Atom(s) => f.write_str(self.alphabet.name(*s))?,
            Formula::Not(g) => {
                f.write_str("!")?;
                self.write(f, g, 3)?;
            }
            Formula::And(a, b) => {
                self.write(f, a, 2)?;
                f.write_str(" & ")?;
                self.write(f, b, 3)?;
            }
            Formula::Or(a, b) => {
                self.write(f, a, 1)?;
                f.write_str(" | ")?;
                self.write(f, b, 2)?;
            }
            Formula::Implies(a, b) => {
                self.write(f, a, 1)?;
                f.write_str(" -> ")?;
                self.write(f, b, 0)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, self.formula, 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Token<'a> {
    Ident(&'a str),
    Not,
    And,
    Or,
    Implies,
    LParen,
    RParen,
    End,
}

impl Token<'_> {
    fn describe(&self) -> String {
        match self {
            Token::Ident(name) => format!("identifier `{name}`"),
            Token::Not => "`!`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Implies => "`->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::End => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn next_token(&mut self) -> Result<(usize, Token<'a>), ParseError> {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&b) = bytes.get(start) else {
            return Ok((start, Token::End));
        };
        let token = match b {
            b'!' => Token::Not,
            b'&' => Token::And,
            b'|' => Token::Or,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'-' if bytes.get(start + 1) == Some(&b'>') => {
                self.pos += 2;
                return Ok((start, Token::Implies));
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                let mut end = start + 1;
                while end < bytes.len()
                    && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_')
                {
                    end += 1;
                }
                self.pos = end;
                return Ok((start, Token::Ident(&self.text[start..end])));
            }
            _ => {
                let ch = self.text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::syntax(
                    start,
                    format!("unexpected character `{ch}`"),
                ));
            }
        };
        self.pos += 1;
        Ok((start, token))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: (usize, Token<'a>),
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn advance(&mut self) -> Result<(usize, Token<'a>), ParseError> {
        let next = self.lexer.next_token()?;
        Ok(std::mem::replace(&mut self.peeked, next))
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.peeked.1 == Token::Implies {
            self.advance()?;
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conjunction()?;
        while self.peeked.1 == Token::Or {
            self.advance()?;
            acc = Formula::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while self.peeked.1 == Token::And {
            self.advance()?;
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let (offset, token) = self.advance()?;
        match token {
            Token::Not => Ok(Formula::not(self.unary()?)),
            Token::LParen => {
                let inner = self.implication()?;
                let (offset, close) = self.advance()?;
                if close != Token::RParen {
                    return Err(ParseError::syntax(
                        offset,
                        format!("expected `)`, found {}", close.describe()),
                    ));
                }
                Ok(inner)
            }
            Token::Ident(name) => match self.alphabet.lookup(name) {
                Some(id) => Ok(Formula::Atom(id)),
                None => Err(ParseError::undeclared(offset, name)),
            },
            other => Err(ParseError::syntax(
                offset,
                format!(
                    "expected identifier, `!` or `(`, found {}",
                    other.describe()
                ),
            )),
        }
    }
}

/// Parses a query formula. Precedence from tightest: `!`, `&`, `|`, `->`;
/// `->` associates to the right.
pub fn parse_formula(text: &str, alphabet: &Alphabet) -> Result<Formula, ParseError> {
    let mut lexer = Lexer { text, pos: 0 };
    let first = lexer.next_token()?;
    let mut parser = Parser {
        lexer,
        peeked: first,
        alphabet,
    };
    let formula = parser.implication()?;
    let (offset, token) = parser.peeked;
    if token != Token::End {
        return Err(ParseError::syntax(
            offset,
            format!("unexpected {} after formula", token.describe()),
        ));
    }
    Ok(formula)
}

type Cnf = Vec<LiteralSet>;

fn conjoin(mut a: Cnf, b: Cnf) -> Cnf {
    a.extend(b);
    mu_minimize(a)
}

fn disjoin(a: &Cnf, b: &Cnf) -> Cnf {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            let c = x.union(y);
            if !c.has_complementary_pair() {
                out.push(c);
            }
        }
    }
    mu_minimize(out)
}

fn cnf(f: &Formula, positive: bool) -> Cnf {
    match (f, positive) {
        (Formula::Atom(s), _) => vec![LiteralSet::new([Literal::new(*s, positive)])],
        (Formula::Not(g), _) => cnf(g, !positive),
        (Formula::And(a, b), true) | (Formula::Or(a, b), false) => {
            conjoin(cnf(a, positive), cnf(b, positive))
        }
        (Formula::Or(a, b), true) | (Formula::And(a, b), false) => {
            disjoin(&cnf(a, positive), &cnf(b, positive))
        }
        (Formula::Implies(a, b), true) => disjoin(&cnf(a, false), &cnf(b, true)),
        (Formula::Implies(a, b), false) => conjoin(cnf(a, true), cnf(b, false)),
    }
}

/// Equivalence-preserving CNF by negation pushing and distribution. No
/// auxiliary symbols; tautological clauses are dropped and the result is
/// μ-minimized. A valid formula yields the empty clause set.
pub fn to_cnf(f: &Formula) -> Vec<Clause> {
    cnf(f, true).into_iter().map(Clause::from_set).collect()
}
