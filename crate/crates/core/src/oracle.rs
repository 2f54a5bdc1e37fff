//! Reference semantics by exhaustive enumeration.
//!
//! Every interpretation of the whole alphabet is tested against Σ and
//! bucketed by its assumption configuration `x`, giving `Γ(x)`; the prior of
//! `x` is the product of independent assumption probabilities. Supports are
//! then read off directly. Only usable on small alphabets, but exact.

use thiserror::Error;

use crate::logic::{Clause, Formula, Term};
use crate::probability::{AssumptionTable, Scalar};
use crate::support::KnowledgeBase;

/// Default cap on the number of symbols (2^20 interpretations).
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

const HARD_LIMIT: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{symbols} symbols exceed the enumeration limit of {limit}")]
    TooLarge { symbols: usize, limit: usize },
    #[error("assumption `{0}` has no probability")]
    MissingProbability(String),
    #[error("symbol `{0}` has a probability but is not an assumption")]
    NotAnAssumption(String),
    #[error("term mentions `{0}`, which is not an assumption")]
    NonAssumptionLiteral(String),
    #[error("the knowledge base excludes every assumption configuration")]
    TotalInconsistency,
}

/// A truth assignment to the assumptions, bit `i` for the `i`-th entry of
/// the assumption table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Configuration {
    bits: u32,
    len: usize,
}

impl Configuration {
    pub fn index(self) -> usize {
        self.bits as usize
    }

    pub fn len(self) -> usize {
        self.len
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn value(self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }
}

/// The quasi-hint: prior and `Γ` for every configuration, contradictory
/// ones included.
#[derive(Clone, Debug)]
pub struct HintModel<T> {
    /// Bit position of each assumption inside an interpretation mask.
    assumption_bits: Vec<u32>,
    prior: Vec<T>,
    /// Interpretations (bit per symbol id) allowed by each configuration.
    gamma: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleSupport<T> {
    pub qs_prob: T,
    pub contra_prob: T,
    pub support: T,
}

fn clause_masks(clause: &Clause) -> (u32, u32) {
    clause.iter().fold((0, 0), |(pos, neg), l| {
        let bit = 1u32 << l.symbol().0;
        if l.is_positive() {
            (pos | bit, neg)
        } else {
            (pos, neg | bit)
        }
    })
}

pub fn build_hint<T: Scalar>(
    kb: &KnowledgeBase,
    table: &AssumptionTable<T>,
    limit: usize,
) -> Result<HintModel<T>, OracleError> {
    let alphabet = kb.alphabet();
    let symbols = alphabet.len();
    let limit = limit.min(HARD_LIMIT);
    if symbols > limit {
        return Err(OracleError::TooLarge { symbols, limit });
    }
    for id in alphabet.assumptions() {
        if table.get(id).is_none() {
            return Err(OracleError::MissingProbability(
                alphabet.name(id).to_owned(),
            ));
        }
    }
    for (id, _) in table.entries() {
        if !alphabet.contains(*id) || !alphabet.is_assumption(*id) {
            let name = if alphabet.contains(*id) {
                alphabet.name(*id).to_owned()
            } else {
                format!("#{}", id.0)
            };
            return Err(OracleError::NotAnAssumption(name));
        }
    }

    let assumption_bits: Vec<u32> = table.entries().iter().map(|(id, _)| id.0).collect();
    let configurations = 1usize << assumption_bits.len();
    let prior = (0..configurations)
        .map(|x| {
            table
                .entries()
                .iter()
                .enumerate()
                .fold(T::one(), |acc, (i, (_, q))| {
                    acc * if x >> i & 1 == 1 {
                        q.clone()
                    } else {
                        T::one() - q.clone()
                    }
                })
        })
        .collect();

    let masks: Vec<(u32, u32)> = kb.clauses().map(clause_masks).collect();
    let mut gamma = vec![Vec::new(); configurations];
    for m in 0..(1u64 << symbols) {
        let m = m as u32;
        if masks
            .iter()
            .all(|&(pos, neg)| m & pos != 0 || !m & neg != 0)
        {
            let x = assumption_bits
                .iter()
                .enumerate()
                .fold(0usize, |x, (i, &bit)| x | (((m >> bit) & 1) as usize) << i);
            gamma[x].push(m);
        }
    }
    Ok(HintModel {
        assumption_bits,
        prior,
        gamma,
    })
}

impl<T: Scalar> HintModel<T> {
    pub fn configurations(&self) -> impl Iterator<Item = Configuration> + '_ {
        let len = self.assumption_bits.len();
        (0..self.prior.len() as u32).map(move |bits| Configuration { bits, len })
    }

    /// Non-contradictory configurations.
    pub fn omega(&self) -> Vec<Configuration> {
        self.configurations()
            .filter(|x| !self.gamma[x.index()].is_empty())
            .collect()
    }

    pub fn prior(&self, x: Configuration) -> &T {
        &self.prior[x.index()]
    }

    pub fn gamma(&self, x: Configuration) -> &[u32] {
        &self.gamma[x.index()]
    }

    pub fn is_contradictory(&self, x: Configuration) -> bool {
        self.gamma[x.index()].is_empty()
    }

    /// `{x : Γ(x) ⊆ N(h)}` as a membership vector indexed by configuration.
    pub fn quasi_support_set<F: Fn(u32) -> bool>(&self, holds: F) -> Vec<bool> {
        self.gamma
            .iter()
            .map(|g| g.iter().all(|&m| holds(m)))
            .collect()
    }

    pub fn formula_quasi_support_set(&self, h: &Formula) -> Vec<bool> {
        self.quasi_support_set(|m| h.eval(|s| m >> s.0 & 1 == 1))
    }

    /// `N(t_1) ∪ … ∪ N(t_r)` over configurations.
    pub fn term_configurations(&self, terms: &[Term]) -> Result<Vec<bool>, OracleError> {
        let position = |bit: u32| self.assumption_bits.iter().position(|&b| b == bit);
        let mut constraints = Vec::with_capacity(terms.len());
        for t in terms {
            let mut c = Vec::with_capacity(t.len());
            for l in t.iter() {
                let i = position(l.symbol().0).ok_or_else(|| {
                    OracleError::NonAssumptionLiteral(format!("#{}", l.symbol().0))
                })?;
                c.push((i, l.is_positive()));
            }
            constraints.push(c);
        }
        Ok(self
            .configurations()
            .map(|x| {
                constraints
                    .iter()
                    .any(|c| c.iter().all(|&(i, positive)| x.value(i) == positive))
            })
            .collect())
    }

    /// Degrees of quasi-support of `h` and of the inconsistency, and the
    /// degree of support after conditioning on the non-contradictory
    /// configurations.
    pub fn support_of<F: Fn(u32) -> bool>(
        &self,
        holds: F,
    ) -> Result<OracleSupport<T>, OracleError> {
        let mut qs = T::zero();
        let mut contra = T::zero();
        let mut omega = T::zero();
        let mut supported = T::zero();
        for (g, p) in self.gamma.iter().zip(&self.prior) {
            let inside = g.iter().all(|&m| holds(m));
            if g.is_empty() {
                contra = contra + p.clone();
            } else {
                omega = omega + p.clone();
                if inside {
                    supported = supported + p.clone();
                }
            }
            if inside {
                qs = qs + p.clone();
            }
        }
        if omega == T::zero() {
            return Err(OracleError::TotalInconsistency);
        }
        Ok(OracleSupport {
            qs_prob: qs,
            contra_prob: contra,
            support: supported / omega,
        })
    }
}

pub fn oracle_support<T: Scalar>(
    model: &HintModel<T>,
    h: &Formula,
) -> Result<OracleSupport<T>, OracleError> {
    model.support_of(|m| h.eval(|s| m >> s.0 & 1 == 1))
}

/// Support of a clause hypothesis; the empty clause gives the inconsistency.
pub fn oracle_clause_support<T: Scalar>(
    model: &HintModel<T>,
    h: &Clause,
) -> Result<OracleSupport<T>, OracleError> {
    let (pos, neg) = clause_masks(h);
    model.support_of(|m| m & pos != 0 || !m & neg != 0)
}
