//! Compile the stable knowledge once, fold in facts as they arrive, and
//! answer queries against the current snapshot.

use thiserror::Error;

use crate::consequence::CompiledState;
use crate::logic::{Clause, Formula, Term};
use crate::oracle::{build_hint, oracle_support, OracleError, DEFAULT_ENUMERATION_LIMIT};
use crate::probability::{
    evaluate, AssumptionTable, EvaluationMethod, Method, MethodPolicy, ProbabilityError, Scalar,
    SupportReport,
};
use crate::support::{
    contradictions_of, quasi_supports_of, KnowledgeBase, SupportError, SupportSets,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueryMethod {
    Engine(Method),
    /// Exhaustive enumeration; supports still come from the engine.
    Oracle,
}

impl Default for QueryMethod {
    fn default() -> Self {
        QueryMethod::Engine(Method::Auto)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SessionError {
    #[error("the knowledge base excludes every assumption configuration")]
    TotalInconsistency,
    #[error(transparent)]
    Probability(ProbabilityError),
    #[error(transparent)]
    Oracle(OracleError),
    #[error(transparent)]
    Support(#[from] SupportError),
    #[error("snapshot was compiled from different knowledge clauses")]
    StaleSnapshot,
}

impl From<ProbabilityError> for SessionError {
    fn from(e: ProbabilityError) -> Self {
        match e {
            ProbabilityError::TotalInconsistency => SessionError::TotalInconsistency,
            other => SessionError::Probability(other),
        }
    }
}

impl From<OracleError> for SessionError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::TotalInconsistency => SessionError::TotalInconsistency,
            other => SessionError::Oracle(other),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Session<T> {
    kb: KnowledgeBase,
    table: AssumptionTable<T>,
    state: CompiledState,
    pub policy: MethodPolicy,
    pub enumeration_limit: usize,
}

impl<T: Scalar> Session<T> {
    /// Compiles the knowledge, then folds in the facts.
    pub fn new(kb: KnowledgeBase, table: AssumptionTable<T>) -> Self {
        let state = kb.compile(false);
        Self::assemble(kb, table, state)
    }

    /// Starts from a precompiled knowledge snapshot; its processed clauses
    /// must be the knowledge clauses of `kb`, in order.
    pub fn from_compiled(
        kb: KnowledgeBase,
        table: AssumptionTable<T>,
        knowledge: CompiledState,
    ) -> Result<Self, SessionError> {
        if knowledge.processed() != kb.knowledge() {
            return Err(SessionError::StaleSnapshot);
        }
        let state = knowledge.extend(kb.facts());
        Ok(Self::assemble(kb, table, state))
    }

    fn assemble(kb: KnowledgeBase, table: AssumptionTable<T>, state: CompiledState) -> Self {
        Session {
            kb,
            table,
            state,
            policy: MethodPolicy::default(),
            enumeration_limit: DEFAULT_ENUMERATION_LIMIT,
        }
    }

    pub fn knowledge_base(&self) -> &KnowledgeBase {
        &self.kb
    }

    pub fn table(&self) -> &AssumptionTable<T> {
        &self.table
    }

    pub fn state(&self) -> &CompiledState {
        &self.state
    }

    pub fn assert_fact(&mut self, fact: Clause) -> Result<(), SessionError> {
        self.kb.add_fact(fact.clone())?;
        self.state = self.state.add(&fact);
        Ok(())
    }

    pub fn contradictions(&self) -> Vec<Term> {
        contradictions_of(&self.state)
    }

    /// Σ is inconsistent without any assumption.
    pub fn is_inconsistent(&self) -> bool {
        self.state.is_inconsistent()
    }

    pub fn supports(&self, h: &Formula) -> SupportSets {
        quasi_supports_of(&self.state, h)
    }

    pub fn query(
        &self,
        h: &Formula,
        method: QueryMethod,
    ) -> Result<SupportReport<T>, SessionError> {
        let sets = self.supports(h);
        match method {
            QueryMethod::Engine(m) => Ok(evaluate(&sets, &self.table, m, self.policy)?),
            QueryMethod::Oracle => {
                let model = build_hint(&self.kb, &self.table, self.enumeration_limit)?;
                let s = oracle_support(&model, h)?;
                Ok(SupportReport {
                    mqs: sets.mqs,
                    mc: sets.mc,
                    qs_prob: s.qs_prob,
                    contra_prob: s.contra_prob,
                    support: s.support,
                    method: EvaluationMethod::Oracle,
                    bounds: None,
                })
            }
        }
    }
}
