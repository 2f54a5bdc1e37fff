//! Text formats: the knowledge-base document and the compiled snapshot.
//!
//! Knowledge bases are line oriented:
//!
//! ```text
//! # burglar alarm
//! assumption a1 0.95
//! assumption a2 0.01
//! prop burglary alarm
//! clause -burglary | -a1 | alarm
//! clause -a2 | -a1 | alarm
//! clause burglary | a2 | -alarm
//! fact alarm
//! ```
//!
//! `clause` lines go to the stable knowledge, `fact` lines to the facts.
//! Literals are negated with `-` or `!`; `[]` is the empty clause.
//! Snapshots hold one clause per line under `[carc]`, `[pi]` and
//! `[processed]` headers.

use std::fmt::Write as _;

use thiserror::Error;

use crate::consequence::{CompiledState, ProductionField};
use crate::logic::{Alphabet, Clause, Literal};
use crate::probability::AssumptionTable;
use crate::support::KnowledgeBase;

/// Error with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl FormatError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        FormatError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AssumptionDecl {
    pub name: String,
    pub probability: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClauseRole {
    Knowledge,
    Fact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiteralText {
    pub name: String,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseLine {
    pub role: ClauseRole,
    pub literals: Vec<LiteralText>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct KbDocument {
    pub assumptions: Vec<AssumptionDecl>,
    pub propositions: Vec<String>,
    pub clauses: Vec<ClauseLine>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_decimal(s: &str) -> bool {
    let (int, frac) = match s.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (s, None),
    };
    let digits = |t: &str| t.chars().all(|c| c.is_ascii_digit());
    match frac {
        None => !int.is_empty() && digits(int),
        Some(f) => digits(int) && digits(f) && !(int.is_empty() && f.is_empty()),
    }
}

/// Whitespace-separated words with their 0-based byte offsets.
fn words(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_ascii_whitespace()
        .map(move |w| (w.as_ptr() as usize - text.as_ptr() as usize, w))
}

/// Parses `lit | lit | …` or `[]`; `base` is the 0-based column of `text`.
fn parse_literals(text: &str, line: usize, base: usize) -> Result<Vec<LiteralText>, FormatError> {
    if text.trim() == "[]" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for chunk in text.split('|') {
        let start = base + offset + (chunk.len() - chunk.trim_start().len());
        offset += chunk.len() + 1;
        let trimmed = chunk.trim();
        let (positive, name) = match trimmed.strip_prefix(['-', '!']) {
            Some(rest) => (false, rest.trim_start()),
            None => (true, trimmed),
        };
        if name.is_empty() {
            return Err(FormatError::new(line, start + 1, "expected a literal"));
        }
        if !is_identifier(name) {
            return Err(FormatError::new(
                line,
                start + 1,
                format!("invalid literal `{trimmed}`"),
            ));
        }
        out.push(LiteralText {
            name: name.to_owned(),
            positive,
        });
    }
    Ok(out)
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(code, _)| code)
}

impl KbDocument {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut doc = KbDocument::default();
        let mut declared: std::collections::HashSet<String> = Default::default();
        // (line, column) of every literal, checked once all declarations are known
        let mut positions: Vec<Vec<(usize, usize)>> = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let code = strip_comment(raw);
            let mut ws = words(code);
            let Some((kw_at, keyword)) = ws.next() else {
                continue;
            };
            let rest_at = kw_at + keyword.len();
            let mut declare = |name: &str, at: usize| -> Result<(), FormatError> {
                if !is_identifier(name) {
                    return Err(FormatError::new(
                        line_no,
                        at + 1,
                        format!("invalid identifier `{name}`"),
                    ));
                }
                if !declared.insert(name.to_owned()) {
                    return Err(FormatError::new(
                        line_no,
                        at + 1,
                        format!("symbol `{name}` declared twice"),
                    ));
                }
                Ok(())
            };
            match keyword {
                "assumption" => {
                    let args: Vec<(usize, &str)> = ws.collect();
                    if args.len() != 2 {
                        return Err(FormatError::new(
                            line_no,
                            kw_at + 1,
                            "expected `assumption <name> <probability>`",
                        ));
                    }
                    let (name_at, name) = args[0];
                    let (prob_at, prob) = args[1];
                    declare(name, name_at)?;
                    let probability = prob
                        .parse::<f64>()
                        .ok()
                        .filter(|p| is_decimal(prob) && (0.0..=1.0).contains(p))
                        .ok_or_else(|| {
                            FormatError::new(
                                line_no,
                                prob_at + 1,
                                format!("probability `{prob}` is not a decimal in [0, 1]"),
                            )
                        })?;
                    doc.assumptions.push(AssumptionDecl {
                        name: name.to_owned(),
                        probability,
                    });
                }
                "prop" => {
                    let mut any = false;
                    for (at, name) in ws {
                        declare(name, at)?;
                        doc.propositions.push(name.to_owned());
                        any = true;
                    }
                    if !any {
                        return Err(FormatError::new(
                            line_no,
                            kw_at + 1,
                            "expected proposition names",
                        ));
                    }
                }
                "clause" | "fact" => {
                    let role = if keyword == "clause" {
                        ClauseRole::Knowledge
                    } else {
                        ClauseRole::Fact
                    };
                    let body = &code[rest_at..];
                    if body.trim().is_empty() {
                        return Err(FormatError::new(line_no, rest_at + 1, "expected a literal"));
                    }
                    let literals = parse_literals(body, line_no, rest_at)?;
                    positions.push(literal_columns(body, rest_at, line_no, literals.len()));
                    doc.clauses.push(ClauseLine { role, literals });
                }
                other => {
                    return Err(FormatError::new(
                        line_no,
                        kw_at + 1,
                        format!("unknown directive `{other}`"),
                    ))
                }
            }
        }

        for (clause, cols) in doc.clauses.iter().zip(&positions) {
            for (lit, &(line, column)) in clause.literals.iter().zip(cols) {
                if !declared.contains(&lit.name) {
                    return Err(FormatError::new(
                        line,
                        column,
                        format!("undeclared identifier `{}`", lit.name),
                    ));
                }
            }
        }
        Ok(doc)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for a in &self.assumptions {
            let _ = writeln!(out, "assumption {} {}", a.name, a.probability);
        }
        if !self.propositions.is_empty() {
            let _ = writeln!(out, "prop {}", self.propositions.join(" "));
        }
        for c in &self.clauses {
            let keyword = match c.role {
                ClauseRole::Knowledge => "clause",
                ClauseRole::Fact => "fact",
            };
            let body = if c.literals.is_empty() {
                "[]".to_owned()
            } else {
                c.literals
                    .iter()
                    .map(|l| {
                        if l.positive {
                            l.name.clone()
                        } else {
                            format!("-{}", l.name)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" | ")
            };
            let _ = writeln!(out, "{keyword} {body}");
        }
        out
    }

    /// Assumptions first, then propositions, each in declaration order.
    pub fn alphabet(&self) -> Alphabet {
        let mut alphabet = Alphabet::new();
        for a in &self.assumptions {
            alphabet
                .assumption(&a.name)
                .expect("names are unique after parsing");
        }
        for p in &self.propositions {
            alphabet
                .proposition(p)
                .expect("names are unique after parsing");
        }
        alphabet
    }

    pub fn knowledge_base(&self) -> KnowledgeBase {
        let alphabet = self.alphabet();
        let clauses: Vec<(ClauseRole, Clause)> = self
            .clauses
            .iter()
            .map(|c| {
                let lits = c.literals.iter().map(|l| {
                    let id = alphabet
                        .lookup(&l.name)
                        .expect("identifiers are checked while parsing");
                    Literal::new(id, l.positive)
                });
                (c.role, Clause::new(lits))
            })
            .collect();
        let mut kb = KnowledgeBase::new(alphabet);
        for (role, clause) in clauses {
            let added = match role {
                ClauseRole::Knowledge => kb.add_knowledge(clause),
                ClauseRole::Fact => kb.add_fact(clause),
            };
            added.expect("clauses only mention declared symbols");
        }
        kb
    }

    pub fn assumption_table(&self, alphabet: &Alphabet) -> AssumptionTable<f64> {
        AssumptionTable::from_entries(self.assumptions.iter().map(|a| {
            (
                alphabet.lookup(&a.name).expect("assumption is declared"),
                a.probability,
            )
        }))
        .expect("probabilities are range checked while parsing")
    }
}

fn literal_columns(body: &str, base: usize, line: usize, count: usize) -> Vec<(usize, usize)> {
    let mut cols = Vec::with_capacity(count);
    let mut offset = 0;
    for chunk in body.split('|') {
        let lead = chunk.len() - chunk.trim_start().len();
        let trimmed = chunk.trim();
        let name_shift = match trimmed.strip_prefix(['-', '!']) {
            Some(rest) => trimmed.len() - rest.trim_start().len(),
            None => 0,
        };
        cols.push((line, base + offset + lead + name_shift + 1));
        offset += chunk.len() + 1;
    }
    cols.truncate(count);
    cols
}

/// Serialized [`CompiledState`] for the assumption field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    pub carc: Vec<Clause>,
    pub pi: Option<Vec<Clause>>,
    pub processed: Vec<Clause>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Carc,
    Pi,
    Processed,
}

fn write_clause(out: &mut String, clause: &Clause, alphabet: &Alphabet) {
    let _ = writeln!(out, "{}", clause.display(alphabet));
}

impl Snapshot {
    pub fn from_state(state: &CompiledState) -> Self {
        Snapshot {
            carc: state.carc().as_slice().to_vec(),
            pi: state.pi().map(|p| p.as_slice().to_vec()),
            processed: state.processed().to_vec(),
        }
    }

    pub fn into_state(self, alphabet: &Alphabet) -> CompiledState {
        CompiledState::from_parts(
            ProductionField::assumptions(alphabet),
            self.carc,
            self.pi,
            self.processed,
        )
    }

    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let mut out = String::from("# compiled knowledge base\n[carc]\n");
        for c in &self.carc {
            write_clause(&mut out, c, alphabet);
        }
        if let Some(pi) = &self.pi {
            out.push_str("[pi]\n");
            for c in pi {
                write_clause(&mut out, c, alphabet);
            }
        }
        out.push_str("[processed]\n");
        for c in &self.processed {
            write_clause(&mut out, c, alphabet);
        }
        out
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self, FormatError> {
        let mut section = Section::None;
        let mut seen = Vec::new();
        let mut snapshot = Snapshot {
            carc: Vec::new(),
            pi: None,
            processed: Vec::new(),
        };
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let code = strip_comment(raw);
            let trimmed = code.trim();
            if trimmed.is_empty() {
                continue;
            }
            let header = match trimmed {
                "[carc]" => Some(Section::Carc),
                "[pi]" => Some(Section::Pi),
                "[processed]" => Some(Section::Processed),
                _ => None,
            };
            if let Some(h) = header {
                if seen.contains(&h) {
                    return Err(FormatError::new(
                        line_no,
                        1,
                        format!("duplicate section {trimmed}"),
                    ));
                }
                seen.push(h);
                section = h;
                if h == Section::Pi {
                    snapshot.pi = Some(Vec::new());
                }
                continue;
            }
            let base = code.len() - code.trim_start().len();
            let literals = parse_literals(trimmed, line_no, base)?;
            let cols = literal_columns(trimmed, base, line_no, literals.len());
            let mut lits = Vec::with_capacity(literals.len());
            for (l, (line, column)) in literals.iter().zip(cols) {
                let id = alphabet.lookup(&l.name).ok_or_else(|| {
                    FormatError::new(line, column, format!("undeclared identifier `{}`", l.name))
                })?;
                lits.push(Literal::new(id, l.positive));
            }
            let clause = Clause::new(lits);
            match section {
                Section::None => {
                    return Err(FormatError::new(
                        line_no,
                        base + 1,
                        "clause outside of a section",
                    ))
                }
                Section::Carc => snapshot.carc.push(clause),
                Section::Pi => snapshot.pi.get_or_insert_with(Vec::new).push(clause),
                Section::Processed => snapshot.processed.push(clause),
            }
        }
        for required in [Section::Carc, Section::Processed] {
            if !seen.contains(&required) {
                let name = if required == Section::Carc {
                    "[carc]"
                } else {
                    "[processed]"
                };
                return Err(FormatError::new(
                    text.lines().count().max(1),
                    1,
                    format!("missing section {name}"),
                ));
            }
        }
        Ok(snapshot)
    }
}
