//! Probabilities of assumption terms and of their disjunctions.
//!
//! Every routine is generic over [`Scalar`], so the same code runs on `f64`,
//! `f32` or an exact rational type.

mod disjoint;
mod evaluate;
mod inclusion_exclusion;

use std::collections::HashMap;
use std::fmt::Debug;

use num_traits::Num;
use thiserror::Error;

use crate::logic::{SymbolId, Term};

pub use disjoint::{disjoint_products, sum_of_disjoint_products};
pub use evaluate::{
    evaluate, quasi_support_terms, EvaluationMethod, Method, MethodPolicy, SupportReport,
};
pub use inclusion_exclusion::{bonferroni_bounds, inclusion_exclusion, subset_sums};

/// Numeric type used for probabilities.
pub trait Scalar: Num + Clone + PartialOrd + Debug {}

impl<T: Num + Clone + PartialOrd + Debug> Scalar for T {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProbabilityError {
    #[error("symbol #{} has no assumption probability", .0 .0)]
    NonAssumptionLiteral(SymbolId),
    #[error("probability for symbol #{} is outside [0, 1]", .0 .0)]
    OutOfRange(SymbolId),
    #[error("symbol #{} already has a probability", .0 .0)]
    DuplicateAssumption(SymbolId),
    #[error("term contains complementary literals")]
    InconsistentTerm,
    #[error("bounds need 2l + 1 <= r (l = {l}, r = {r}); use an exact method")]
    BoundsPrecondition { l: usize, r: usize },
    #[error("the knowledge base excludes every assumption configuration")]
    TotalInconsistency,
}

/// Independent truth probabilities of the assumption symbols, in
/// declaration order.
#[derive(Clone, Debug, PartialEq)]
pub struct AssumptionTable<T> {
    entries: Vec<(SymbolId, T)>,
    index: HashMap<SymbolId, usize>,
}

impl<T> Default for AssumptionTable<T> {
    fn default() -> Self {
        AssumptionTable {
            entries: Vec::new(),
            index: HashMap::new(),
        }
    }
}

impl<T: Scalar> AssumptionTable<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (SymbolId, T)>>(
        entries: I,
    ) -> Result<Self, ProbabilityError> {
        let mut table = AssumptionTable::new();
        for (s, q) in entries {
            table.insert(s, q)?;
        }
        Ok(table)
    }

    pub fn insert(&mut self, symbol: SymbolId, q: T) -> Result<(), ProbabilityError> {
        if !(q >= T::zero() && q <= T::one()) {
            return Err(ProbabilityError::OutOfRange(symbol));
        }
        if self.index.contains_key(&symbol) {
            return Err(ProbabilityError::DuplicateAssumption(symbol));
        }
        self.index.insert(symbol, self.entries.len());
        self.entries.push((symbol, q));
        Ok(())
    }

    pub fn get(&self, symbol: SymbolId) -> Option<&T> {
        self.index.get(&symbol).map(|&i| &self.entries[i].1)
    }

    /// Position of `symbol` in declaration order.
    pub fn position(&self, symbol: SymbolId) -> Option<usize> {
        self.index.get(&symbol).copied()
    }

    pub fn entries(&self) -> &[(SymbolId, T)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Probability of a conjunction of assumption literals: the product of `q`
/// for positive and `1 − q` for negative literals. Inconsistent terms have
/// probability zero, the empty term probability one.
pub fn term_prob<T: Scalar>(
    term: &Term,
    table: &AssumptionTable<T>,
) -> Result<T, ProbabilityError> {
    if term.is_inconsistent() {
        for l in term.iter() {
            table
                .get(l.symbol())
                .ok_or(ProbabilityError::NonAssumptionLiteral(l.symbol()))?;
        }
        return Ok(T::zero());
    }
    term.iter().try_fold(T::one(), |acc, l| {
        let q = table
            .get(l.symbol())
            .ok_or(ProbabilityError::NonAssumptionLiteral(l.symbol()))?
            .clone();
        Ok(acc * if l.is_positive() { q } else { T::one() - q })
    })
}

/// `(qs − contra) / (1 − contra)`.
pub fn degree_of_support<T: Scalar>(qs_prob: T, contra_prob: T) -> Result<T, ProbabilityError> {
    if contra_prob >= T::one() {
        return Err(ProbabilityError::TotalInconsistency);
    }
    let denominator = T::one() - contra_prob.clone();
    Ok((qs_prob - contra_prob) / denominator)
}
