use crate::logic::Term;

use super::{term_prob, AssumptionTable, ProbabilityError, Scalar};

/// `S_1 … S_max_k`: `S_k` sums the probability of the conjunction of every
/// `k`-subset of `terms`. Subsets whose conjunction is inconsistent
/// contribute zero, as do all their supersets, so such branches are pruned.
/// Summation order is fixed by the input order.
pub fn subset_sums<T: Scalar>(
    terms: &[Term],
    table: &AssumptionTable<T>,
    max_k: usize,
) -> Result<Vec<T>, ProbabilityError> {
    let max_k = max_k.min(terms.len());
    let mut sums = vec![T::zero(); max_k];
    for t in terms {
        // surface unknown symbols even in pruned branches
        term_prob(t, table)?;
    }
    if max_k > 0 {
        accumulate(terms, table, 0, &Term::tautology(), 0, &mut sums)?;
    }
    Ok(sums)
}

fn accumulate<T: Scalar>(
    terms: &[Term],
    table: &AssumptionTable<T>,
    start: usize,
    prefix: &Term,
    depth: usize,
    sums: &mut [T],
) -> Result<(), ProbabilityError> {
    for i in start..terms.len() {
        let conj = prefix.conjoin(&terms[i]);
        if conj.is_inconsistent() {
            continue;
        }
        let p = term_prob(&conj, table)?;
        sums[depth] = sums[depth].clone() + p;
        if depth + 1 < sums.len() {
            accumulate(terms, table, i + 1, &conj, depth + 1, sums)?;
        }
    }
    Ok(())
}

fn alternating<T: Scalar>(sums: &[T]) -> T {
    sums.iter().enumerate().fold(T::zero(), |acc, (k, s)| {
        if k % 2 == 0 {
            acc + s.clone()
        } else {
            acc - s.clone()
        }
    })
}

/// Exact probability of the disjunction of `terms` by inclusion-exclusion.
/// Cost grows with the number of consistent subsets, up to `2^r`.
pub fn inclusion_exclusion<T: Scalar>(
    terms: &[Term],
    table: &AssumptionTable<T>,
) -> Result<T, ProbabilityError> {
    Ok(alternating(&subset_sums(terms, table, terms.len())?))
}

/// Truncated inclusion-exclusion bounds for `l ≥ 1` with `2l + 1 ≤ r`:
/// the sum to `2l` is a lower bound; the sum to `2l + 1`, capped by `S_1`
/// and by one, an upper bound.
pub fn bonferroni_bounds<T: Scalar>(
    terms: &[Term],
    table: &AssumptionTable<T>,
    l: usize,
) -> Result<(T, T), ProbabilityError> {
    let r = terms.len();
    if l == 0 || 2 * l + 1 > r {
        return Err(ProbabilityError::BoundsPrecondition { l, r });
    }
    let sums = subset_sums(terms, table, 2 * l + 1)?;
    let lower = alternating(&sums[..2 * l]);
    let mut upper = alternating(&sums);
    for cap in [sums[0].clone(), T::one()] {
        if cap < upper {
            upper = cap;
        }
    }
    Ok((lower, upper))
}
