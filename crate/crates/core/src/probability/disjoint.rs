use crate::logic::Term;

use super::{term_prob, AssumptionTable, ProbabilityError, Scalar};

/// Rewrites `f_1 ∨ … ∨ f_r` as a sum of pairwise disjoint terms.
///
/// Each `f_j` starts as the single fragment `{f_j}` and is sharpened against
/// every earlier `f_i`. A fragment `d` already disjoint from `f_i` is kept.
/// Otherwise let `x_1 … x_s` be the literals of `f_i` missing from `d`: with
/// none, `d` lies inside `f_i` and is dropped; else `d` is replaced by
/// `¬x_1 d`, `x_1 ¬x_2 d`, …, `x_1 … x_{s−1} ¬x_s d`.
///
/// Output size depends on the order of `terms`; the order is kept as given.
pub fn disjoint_products(terms: &[Term]) -> Result<Vec<Term>, ProbabilityError> {
    if terms.iter().any(Term::is_inconsistent) {
        return Err(ProbabilityError::InconsistentTerm);
    }
    let mut out = Vec::new();
    for (j, f_j) in terms.iter().enumerate() {
        let mut fragments = vec![f_j.clone()];
        for f_i in &terms[..j] {
            let mut next = Vec::with_capacity(fragments.len());
            for d in fragments {
                if d.is_disjoint_from(f_i) {
                    next.push(d);
                    continue;
                }
                let missing = f_i.literals().difference(d.literals());
                let mut prefix = d;
                for x in missing.iter() {
                    next.push(Term::from_set(prefix.literals().with(x.negate())));
                    prefix = Term::from_set(prefix.literals().with(x));
                }
            }
            fragments = next;
        }
        out.extend(fragments);
    }
    Ok(out)
}

/// Probability of the disjunction of `terms` as the sum over its disjoint
/// decomposition.
pub fn sum_of_disjoint_products<T: Scalar>(
    terms: &[Term],
    table: &AssumptionTable<T>,
) -> Result<T, ProbabilityError> {
    disjoint_products(terms)?
        .iter()
        .try_fold(T::zero(), |acc, d| Ok(acc + term_prob(d, table)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{Literal, SymbolId};
    use crate::probability::inclusion_exclusion;
    use crate::probability::tests::table;

    fn a(i: u32) -> Literal {
        Literal::positive(SymbolId(i))
    }

    #[test]
    fn two_term_expansion() {
        let out = disjoint_products(&[Term::new([a(0)]), Term::new([a(1)])]).unwrap();
        assert_eq!(
            out,
            vec![Term::new([a(0)]), Term::new([a(0).negate(), a(1)])]
        );
    }

    #[test]
    fn already_disjoint_terms_pass_through() {
        let input = vec![Term::new([a(0)]), Term::new([a(0).negate()])];
        assert_eq!(disjoint_products(&input).unwrap(), input);
    }

    #[test]
    fn three_fragment_expansion_matches_inclusion_exclusion() {
        let input = [Term::new([a(0), a(1)]), Term::new([a(2)])];
        let out = disjoint_products(&input).unwrap();
        assert_eq!(
            out,
            vec![
                Term::new([a(0), a(1)]),
                Term::new([a(0).negate(), a(2)]),
                Term::new([a(0), a(1).negate(), a(2)]),
            ]
        );
        let t = table(&[0.5; 3]);
        assert_eq!(sum_of_disjoint_products(&input, &t).unwrap(), 0.625);
        assert_eq!(inclusion_exclusion(&input, &t).unwrap(), 0.625);
    }

    #[test]
    fn subsumed_fragment_is_dropped() {
        let out = disjoint_products(&[Term::new([a(0)]), Term::new([a(0), a(1)])]).unwrap();
        assert_eq!(out, vec![Term::new([a(0)])]);
    }

    #[test]
    fn inconsistent_input_rejected() {
        assert_eq!(
            disjoint_products(&[Term::new([a(0), a(0).negate()])]),
            Err(ProbabilityError::InconsistentTerm)
        );
    }
}
