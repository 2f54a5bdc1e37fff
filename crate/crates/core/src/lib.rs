//! Probabilistic assumption-based reasoning.
//!
//! A knowledge base of propositional clauses mentions two kinds of symbols:
//! ordinary propositions and *assumptions*, each true independently with a
//! known probability. For a hypothesis `h` the engine finds the minimal
//! conjunctions of assumption literals that, together with the knowledge
//! base, entail `h` (minimal quasi-supports) and those that contradict it
//! (minimal contradictions), then turns them into the degree of support of
//! `h`: the probability that the assumptions force `h`, conditioned on the
//! assumptions being consistent with the knowledge base.
//!
//! Modules, bottom up:
//! - [`logic`]: literals, clauses, terms, formulas, CNF, subsumption.
//! - [`consequence`]: production fields and incremental characteristic
//!   clauses / prime implicates.
//! - [`support`]: minimal quasi-supports and contradictions.
//! - [`probability`]: term probabilities, inclusion-exclusion, bounds,
//!   disjoint products, normalization.
//! - [`oracle`]: brute-force reference semantics.
//! - [`format`], [`session`]: file formats and the compile/assert/query
//!   workflow.
//!
//! Numeric code is generic over [`probability::Scalar`]; the aliases below
//! fix it to `f64`.

pub mod consequence;
pub mod format;
pub mod logic;
pub mod oracle;
pub mod probability;
pub mod session;
pub mod support;

pub use consequence::{CompiledState, ProductionField};
pub use logic::{Alphabet, Clause, Formula, Literal, SymbolId, SymbolKind, Term};
pub use probability::{Method, MethodPolicy, Scalar};
pub use session::{QueryMethod, SessionError};
pub use support::{KnowledgeBase, SupportSets};

/// Default probability type.
pub type Prob = f64;
pub type AssumptionTable = probability::AssumptionTable<Prob>;
pub type SupportReport = probability::SupportReport<Prob>;
pub type HintModel = oracle::HintModel<Prob>;
pub type OracleSupport = oracle::OracleSupport<Prob>;
pub type Session = session::Session<Prob>;
