//! Production fields, consequence finding and incremental maintenance of
//! characteristic clauses and prime implicates.
//!
//! `produce` saturates from a top clause with set-of-support resolution:
//! only derivations that descend from the top clause are explored, against
//! the side clauses and earlier descendants. Together with `carc_add` this
//! gives `Carc(Σ ∪ {c}, P) = μ(Carc(Σ, P) ∪ produce(Σ, c, P))`.

use std::collections::VecDeque;

use crate::logic::{Alphabet, Clause, ClauseSet, Literal};

/// A stable production field: membership is closed under subclauses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductionField {
    /// Clauses whose literals are all over assumption symbols.
    AssumptionOnly { assumption: Vec<bool> },
    /// Every clause.
    AllClauses,
}

impl ProductionField {
    pub fn assumptions(alphabet: &Alphabet) -> Self {
        ProductionField::AssumptionOnly {
            assumption: alphabet
                .ids()
                .map(|id| alphabet.is_assumption(id))
                .collect(),
        }
    }

    pub fn all() -> Self {
        ProductionField::AllClauses
    }

    pub fn contains(&self, clause: &Clause) -> bool {
        match self {
            ProductionField::AssumptionOnly { assumption } => clause
                .iter()
                .all(|l| assumption.get(l.symbol().index()).copied().unwrap_or(false)),
            ProductionField::AllClauses => true,
        }
    }

    /// The `p ∨ ¬p` seeds that lie in the field.
    pub fn seeds(&self, alphabet: &Alphabet) -> ClauseSet {
        alphabet
            .ids()
            .map(Clause::tautology_of)
            .filter(|c| self.contains(c))
            .collect()
    }
}

/// Produced clauses: implicates of `sigma ∪ {top}` that lie in `field` and
/// are reachable by resolution descending from `top`, μ-minimized.
pub fn produce(sigma: &[Clause], top: &Clause, field: &ProductionField) -> Vec<Clause> {
    if top.is_tautology() {
        return Vec::new();
    }
    let mut support = ClauseSet::new();
    let mut active: Vec<Clause> = Vec::new();
    let mut queue = VecDeque::new();
    support.insert(top.clone());
    queue.push_back(top.clone());

    while let Some(given) = queue.pop_front() {
        // dropped by a later, smaller descendant
        if !support.contains(&given) {
            continue;
        }
        if given.is_empty() {
            break;
        }
        let mut resolvents = Vec::new();
        for partner in sigma
            .iter()
            .chain(active.iter())
            .chain(std::iter::once(&given))
        {
            if let Some(r) = resolve_once(&given, partner) {
                resolvents.push(r);
            }
        }
        active.push(given);
        for r in resolvents {
            if support.insert(r.clone()) {
                queue.push_back(r);
            }
        }
        active.retain(|c| support.contains(c));
    }

    support
        .into_vec()
        .into_iter()
        .filter(|c| field.contains(c))
        .collect()
}

/// The resolvent of two clauses when they clash on exactly one symbol;
/// clashing on two or more only yields tautologies.
fn resolve_once(a: &Clause, b: &Clause) -> Option<Clause> {
    let mut clashes = a.literals().clashes(b.literals());
    let pivot: Literal = clashes.next()?;
    if clashes.next().is_some() {
        return None;
    }
    a.resolve(b, pivot.symbol())
        .ok()
        .filter(|r| !r.is_tautology())
}

/// `Carc(Σ ∪ {c}, P)` from `Carc(Σ, P)`.
pub fn carc_add(
    carc: &ClauseSet,
    sigma: &[Clause],
    c: &Clause,
    field: &ProductionField,
) -> ClauseSet {
    let mut next = carc.clone();
    for produced in produce(sigma, c, field) {
        next.insert(produced);
    }
    next
}

/// `PI(∅)`: one `p ∨ ¬p` per symbol.
pub fn pi_seed(alphabet: &Alphabet) -> ClauseSet {
    ProductionField::AllClauses.seeds(alphabet)
}

/// `PI(Σ ∪ {c})` from `PI(Σ)`.
pub fn pi_add(pi: &ClauseSet, c: &Clause) -> ClauseSet {
    carc_add(pi, pi.as_slice(), c, &ProductionField::AllClauses)
}

/// Immutable compilation snapshot: characteristic clauses with respect to a
/// fixed field, optionally the prime implicates, and the clauses folded in
/// so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompiledState {
    field: ProductionField,
    carc: ClauseSet,
    pi: Option<ClauseSet>,
    processed: Vec<Clause>,
}

impl CompiledState {
    /// The seeded state for the empty clause set.
    pub fn new(alphabet: &Alphabet, field: ProductionField, with_pi: bool) -> Self {
        CompiledState {
            carc: field.seeds(alphabet),
            field,
            pi: with_pi.then(|| pi_seed(alphabet)),
            processed: Vec::new(),
        }
    }

    /// Reassembles a state from stored parts, μ-minimizing both sets.
    pub fn from_parts(
        field: ProductionField,
        carc: Vec<Clause>,
        pi: Option<Vec<Clause>>,
        processed: Vec<Clause>,
    ) -> Self {
        CompiledState {
            field,
            carc: carc.into_iter().collect(),
            pi: pi.map(|p| p.into_iter().collect()),
            processed,
        }
    }

    pub fn field(&self) -> &ProductionField {
        &self.field
    }

    pub fn carc(&self) -> &ClauseSet {
        &self.carc
    }

    pub fn pi(&self) -> Option<&ClauseSet> {
        self.pi.as_ref()
    }

    pub fn processed(&self) -> &[Clause] {
        &self.processed
    }

    /// Whether the empty clause has been derived.
    pub fn is_inconsistent(&self) -> bool {
        self.carc.contains(&Clause::empty())
    }

    /// Folds `c` into the characteristic clauses (and the prime implicates,
    /// when tracked).
    pub fn add(&self, c: &Clause) -> Self {
        let carc = if c.is_tautology() {
            self.carc.clone()
        } else {
            carc_add(&self.carc, &self.processed, c, &self.field)
        };
        let pi = self.pi.as_ref().map(|pi| pi_add(pi, c));
        let mut processed = self.processed.clone();
        processed.push(c.clone());
        CompiledState {
            field: self.field.clone(),
            carc,
            pi,
            processed,
        }
    }

    pub fn extend<'a, I: IntoIterator<Item = &'a Clause>>(&self, clauses: I) -> Self {
        clauses
            .into_iter()
            .fold(self.clone(), |state, c| state.add(c))
    }
}
