use crate::logic::{mu_minimize, Term};
use crate::support::SupportSets;

use super::{
    bonferroni_bounds, degree_of_support, inclusion_exclusion, sum_of_disjoint_products,
    AssumptionTable, ProbabilityError, Scalar,
};

/// Requested evaluation strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Auto,
    InclusionExclusion,
    DisjointProducts,
    /// Exact value plus truncated inclusion-exclusion bounds at depth `l`.
    Bounds {
        l: usize,
    },
}

/// Strategy that actually produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvaluationMethod {
    InclusionExclusion,
    DisjointProducts,
    Bounds,
    Oracle,
}

impl EvaluationMethod {
    pub fn name(self) -> &'static str {
        match self {
            EvaluationMethod::InclusionExclusion => "incexc",
            EvaluationMethod::DisjointProducts => "sdp",
            EvaluationMethod::Bounds => "bounds",
            EvaluationMethod::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MethodPolicy {
    /// `Auto` uses inclusion-exclusion up to this many terms and disjoint
    /// products beyond.
    pub max_incexc_terms: usize,
}

impl Default for MethodPolicy {
    fn default() -> Self {
        MethodPolicy {
            max_incexc_terms: 20,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SupportReport<T> {
    pub mqs: Vec<Term>,
    pub mc: Vec<Term>,
    /// Degree of quasi-support of the hypothesis.
    pub qs_prob: T,
    /// Degree of quasi-support of the inconsistency.
    pub contra_prob: T,
    pub support: T,
    pub method: EvaluationMethod,
    /// Bounds on `qs_prob`, for `Method::Bounds`.
    pub bounds: Option<(T, T)>,
}

/// The terms whose disjunction is the quasi-support formula: minimal
/// quasi-supports together with minimal contradictions, μ-minimized.
pub fn quasi_support_terms(sets: &SupportSets) -> Vec<Term> {
    mu_minimize(sets.mqs.iter().chain(sets.mc.iter()).cloned())
}

/// Turns support sets into probabilities.
pub fn evaluate<T: Scalar>(
    sets: &SupportSets,
    table: &AssumptionTable<T>,
    method: Method,
    policy: MethodPolicy,
) -> Result<SupportReport<T>, ProbabilityError> {
    if sets.mc.iter().any(Term::is_empty) {
        return Err(ProbabilityError::TotalInconsistency);
    }
    let qs_terms = quasi_support_terms(sets);
    let largest = qs_terms.len().max(sets.mc.len());

    let (resolved, bounds) = match method {
        Method::Auto if largest <= policy.max_incexc_terms => {
            (EvaluationMethod::InclusionExclusion, None)
        }
        Method::Auto | Method::DisjointProducts => (EvaluationMethod::DisjointProducts, None),
        Method::InclusionExclusion => (EvaluationMethod::InclusionExclusion, None),
        Method::Bounds { l } => (
            EvaluationMethod::Bounds,
            Some(bonferroni_bounds(&qs_terms, table, l)?),
        ),
    };
    let union = |terms: &[Term]| match resolved {
        EvaluationMethod::InclusionExclusion => inclusion_exclusion(terms, table),
        _ => sum_of_disjoint_products(terms, table),
    };
    let qs_prob = union(&qs_terms)?;
    let contra_prob = union(&sets.mc)?;
    let support = degree_of_support(qs_prob.clone(), contra_prob.clone())?;
    Ok(SupportReport {
        mqs: sets.mqs.clone(),
        mc: sets.mc.clone(),
        qs_prob,
        contra_prob,
        support,
        method: resolved,
        bounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_formula, Literal};
    use crate::logic::{Alphabet, Clause};
    use crate::probability::AssumptionTable;
    use crate::support::{minimal_quasi_supports, tests::alarm_kb, KnowledgeBase};

    #[test]
    fn burglary_support() {
        let alarm = alarm_kb(true);
        let table =
            AssumptionTable::<f64>::from_entries([(alarm.a1, 0.95), (alarm.a2, 0.01)]).unwrap();
        let h = parse_formula("burglary", alarm.kb.alphabet()).unwrap();
        let sets = minimal_quasi_supports(&alarm.kb, &h);
        let report = evaluate(
            &sets,
            &table,
            Method::InclusionExclusion,
            MethodPolicy::default(),
        )
        .unwrap();
        assert!((report.support - 0.99).abs() < 1e-12);
        assert_eq!(report.contra_prob, 0.0);
        assert_eq!(report.method, EvaluationMethod::InclusionExclusion);
    }

    fn contradictory_kb() -> KnowledgeBase {
        let mut alphabet = Alphabet::new();
        let p = alphabet.proposition("p").unwrap();
        let a1 = alphabet.assumption("a1").unwrap();
        let mut kb = KnowledgeBase::new(alphabet);
        kb.add_knowledge(Clause::new([Literal::negative(a1), Literal::positive(p)]))
            .unwrap();
        kb.add_knowledge(Clause::new([Literal::negative(p)]))
            .unwrap();
        kb
    }

    #[test]
    fn support_only_from_contradictions() {
        let kb = contradictory_kb();
        let table =
            AssumptionTable::from_entries([(kb.alphabet().lookup("a1").unwrap(), 0.5)]).unwrap();
        for (text, qs, support) in [("p", 0.5, 0.0), ("!p", 1.0, 1.0)] {
            let h = parse_formula(text, kb.alphabet()).unwrap();
            let sets = minimal_quasi_supports(&kb, &h);
            for method in [
                Method::Auto,
                Method::InclusionExclusion,
                Method::DisjointProducts,
            ] {
                let r = evaluate(&sets, &table, method, MethodPolicy::default()).unwrap();
                assert_eq!(
                    (r.qs_prob, r.contra_prob, r.support),
                    (qs, 0.5, support),
                    "{text}"
                );
            }
        }
    }

    #[test]
    fn auto_switches_on_term_count() {
        let kb = contradictory_kb();
        let table =
            AssumptionTable::from_entries([(kb.alphabet().lookup("a1").unwrap(), 0.5)]).unwrap();
        let h = parse_formula("p", kb.alphabet()).unwrap();
        let sets = minimal_quasi_supports(&kb, &h);
        let policy = MethodPolicy {
            max_incexc_terms: 0,
        };
        let r = evaluate(&sets, &table, Method::Auto, policy).unwrap();
        assert_eq!(r.method, EvaluationMethod::DisjointProducts);
    }

    #[test]
    fn total_inconsistency_is_an_error() {
        let sets = SupportSets {
            mqs: vec![Term::tautology()],
            mc: vec![Term::tautology()],
        };
        let table = AssumptionTable::<f64>::new();
        assert_eq!(
            evaluate(&sets, &table, Method::Auto, MethodPolicy::default()),
            Err(ProbabilityError::TotalInconsistency)
        );
    }
}
