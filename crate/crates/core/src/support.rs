//! Minimal contradictions and minimal quasi-supports.
//!
//! Two routes are provided. The interpretive route extends the compiled
//! characteristic clauses (w.r.t. the assumption field) with the CNF of the
//! negated hypothesis; the compiled route reads them off the prime
//! implicates for clause hypotheses. Both convert assumption clauses into
//! assumption terms by literal-wise negation.

use thiserror::Error;

use crate::consequence::{CompiledState, ProductionField};
use crate::logic::{mu_minimize, to_cnf, Alphabet, Clause, Formula, Literal, SymbolId, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SupportError {
    #[error("literal over non-assumption symbol `{0}`")]
    NonAssumptionLiteral(String),
    #[error("clause references undeclared symbol #{}", .0 .0)]
    UnknownSymbol(SymbolId),
}

/// Σ = Σ_K ∪ Σ_F over a shared alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnowledgeBase {
    alphabet: Alphabet,
    sigma_k: Vec<Clause>,
    sigma_f: Vec<Clause>,
}

impl KnowledgeBase {
    pub fn new(alphabet: Alphabet) -> Self {
        KnowledgeBase {
            alphabet,
            ..Default::default()
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn knowledge(&self) -> &[Clause] {
        &self.sigma_k
    }

    pub fn facts(&self) -> &[Clause] {
        &self.sigma_f
    }

    /// All clauses, knowledge first.
    pub fn clauses(&self) -> impl Iterator<Item = &Clause> + '_ {
        self.sigma_k.iter().chain(self.sigma_f.iter())
    }

    fn check(&self, clause: &Clause) -> Result<(), SupportError> {
        match clause.iter().find(|l| !self.alphabet.contains(l.symbol())) {
            Some(l) => Err(SupportError::UnknownSymbol(l.symbol())),
            None => Ok(()),
        }
    }

    pub fn add_knowledge(&mut self, clause: Clause) -> Result<(), SupportError> {
        self.check(&clause)?;
        self.sigma_k.push(clause);
        Ok(())
    }

    pub fn add_fact(&mut self, clause: Clause) -> Result<(), SupportError> {
        self.check(&clause)?;
        self.sigma_f.push(clause);
        Ok(())
    }

    /// Characteristic clauses of Σ_K w.r.t. the assumption field.
    pub fn compile_knowledge(&self, with_pi: bool) -> CompiledState {
        CompiledState::new(
            &self.alphabet,
            ProductionField::assumptions(&self.alphabet),
            with_pi,
        )
        .extend(&self.sigma_k)
    }

    /// Characteristic clauses of the whole Σ w.r.t. the assumption field.
    pub fn compile(&self, with_pi: bool) -> CompiledState {
        self.compile_knowledge(with_pi).extend(&self.sigma_f)
    }
}

/// Minimal quasi-supports and minimal contradictions of one query.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SupportSets {
    pub mqs: Vec<Term>,
    pub mc: Vec<Term>,
}

/// `~S`: negates every assumption clause into an assumption term.
pub fn tilde<'a, I>(clauses: I, alphabet: &Alphabet) -> Result<Vec<Term>, SupportError>
where
    I: IntoIterator<Item = &'a Clause>,
{
    clauses
        .into_iter()
        .map(|c| match c.iter().find(|l| !is_assumption(alphabet, *l)) {
            Some(l) => Err(SupportError::NonAssumptionLiteral(
                alphabet.name(l.symbol()).to_owned(),
            )),
            None => Ok(c.negate()),
        })
        .collect()
}

fn is_assumption(alphabet: &Alphabet, l: Literal) -> bool {
    alphabet.contains(l.symbol()) && alphabet.is_assumption(l.symbol())
}

/// Negates assumption clauses and drops the `a ∧ ¬a` terms coming from
/// tautological seeds.
fn reported_terms<'a, I>(clauses: I) -> Vec<Term>
where
    I: IntoIterator<Item = &'a Clause>,
{
    let mut terms: Vec<Term> = clauses
        .into_iter()
        .map(Clause::negate)
        .filter(|t| !t.is_inconsistent())
        .collect();
    terms.sort();
    terms
}

/// `MC(Σ)` from a state compiled against the assumption field.
pub fn contradictions_of(state: &CompiledState) -> Vec<Term> {
    reported_terms(state.carc())
}

/// Minimal quasi-supports of `h` and minimal contradictions, extending a
/// copy of `state` with the CNF of `¬h`.
pub fn quasi_supports_of(state: &CompiledState, h: &Formula) -> SupportSets {
    let negated = to_cnf(&Formula::not(h.clone()));
    let extended = state.extend(&negated);
    SupportSets {
        mqs: reported_terms(extended.carc()),
        mc: contradictions_of(state),
    }
}

pub fn minimal_contradictions(kb: &KnowledgeBase) -> Vec<Term> {
    contradictions_of(&kb.compile(false))
}

pub fn minimal_quasi_supports(kb: &KnowledgeBase, h: &Formula) -> SupportSets {
    quasi_supports_of(&kb.compile(false), h)
}

/// Supports of a clause hypothesis read off the prime implicates: `f − h`
/// for every prime implicate `f`, kept when it is an assumption clause.
pub fn compiled_mqs(pi: &[Clause], h: &Clause, alphabet: &Alphabet) -> SupportSets {
    let field = ProductionField::assumptions(alphabet);
    let residues = mu_minimize(pi.iter().map(|f| f.minus(h)).filter(|r| field.contains(r)));
    let contradictions: Vec<&Clause> = pi.iter().filter(|f| field.contains(f)).collect();
    SupportSets {
        mqs: reported_terms(&residues),
        mc: reported_terms(contradictions),
    }
}
