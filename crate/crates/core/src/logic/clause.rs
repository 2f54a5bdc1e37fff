use std::fmt;

use super::{Alphabet, Literal, LogicError, SymbolId};

/// Sorted, duplicate-free set of literals. Shared representation of
/// clauses (disjunctions) and terms (conjunctions).
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiteralSet(Vec<Literal>);

impl LiteralSet {
    pub fn new<I: IntoIterator<Item = Literal>>(literals: I) -> Self {
        let mut v: Vec<Literal> = literals.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        LiteralSet(v)
    }

    pub fn empty() -> Self {
        LiteralSet(Vec::new())
    }

    pub fn literals(&self) -> &[Literal] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, literal: Literal) -> bool {
        self.0.binary_search(&literal).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Literal> + '_ {
        self.0.iter().copied()
    }

    /// `self ⊆ other`, by a merge walk over both sorted vectors.
    pub fn is_subset(&self, other: &LiteralSet) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut rest = other.0.iter();
        'outer: for l in &self.0 {
            for m in rest.by_ref() {
                if m == l {
                    continue 'outer;
                }
                if m > l {
                    return false;
                }
            }
            return false;
        }
        true
    }

    /// True when some symbol occurs with both polarities. Complementary
    /// literals are adjacent in canonical order.
    pub fn has_complementary_pair(&self) -> bool {
        self.0.windows(2).any(|w| w[0].symbol() == w[1].symbol())
    }

    pub fn union(&self, other: &LiteralSet) -> LiteralSet {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            if a < b {
                out.push(a);
                i += 1;
            } else if b < a {
                out.push(b);
                j += 1;
            } else {
                out.push(a);
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        LiteralSet(out)
    }

    /// Literals of `self` that do not occur in `other`.
    pub fn difference(&self, other: &LiteralSet) -> LiteralSet {
        LiteralSet(
            self.0
                .iter()
                .copied()
                .filter(|&l| !other.contains(l))
                .collect(),
        )
    }

    /// Literal-wise negation.
    pub fn negated(&self) -> LiteralSet {
        LiteralSet::new(self.0.iter().map(|l| l.negate()))
    }

    /// Literals of `self` whose negation occurs in `other`.
    pub fn clashes<'a>(&'a self, other: &'a LiteralSet) -> impl Iterator<Item = Literal> + 'a {
        self.0
            .iter()
            .copied()
            .filter(|l| other.contains(l.negate()))
    }

    pub fn without(&self, literal: Literal) -> LiteralSet {
        LiteralSet(self.0.iter().copied().filter(|&l| l != literal).collect())
    }

    pub fn with(&self, literal: Literal) -> LiteralSet {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&literal) {
            v.insert(pos, literal);
        }
        LiteralSet(v)
    }

    pub fn symbols(&self) -> impl Iterator<Item = SymbolId> + '_ {
        self.0.iter().map(|l| l.symbol())
    }

    fn render(&self, alphabet: &Alphabet, sep: &str, empty: &str) -> String {
        if self.0.is_empty() {
            return empty.to_owned();
        }
        self.0
            .iter()
            .map(|&l| alphabet.literal_name(l))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Debug for LiteralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Literal> for LiteralSet {
    fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> Self {
        LiteralSet::new(iter)
    }
}

/// A disjunction of literals. The empty clause is the inconsistency.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause(LiteralSet);

/// A conjunction of literals. The empty term is the tautology.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term(LiteralSet);

impl AsRef<LiteralSet> for LiteralSet {
    fn as_ref(&self) -> &LiteralSet {
        self
    }
}

impl AsRef<LiteralSet> for Clause {
    fn as_ref(&self) -> &LiteralSet {
        &self.0
    }
}

impl AsRef<LiteralSet> for Term {
    fn as_ref(&self) -> &LiteralSet {
        &self.0
    }
}

impl Clause {
    pub fn new<I: IntoIterator<Item = Literal>>(literals: I) -> Self {
        Clause(LiteralSet::new(literals))
    }

    pub fn empty() -> Self {
        Clause(LiteralSet::empty())
    }

    pub fn from_set(set: LiteralSet) -> Self {
        Clause(set)
    }

    /// `p ∨ ¬p`.
    pub fn tautology_of(symbol: SymbolId) -> Self {
        Clause::new([Literal::positive(symbol), Literal::negative(symbol)])
    }

    pub fn literals(&self) -> &LiteralSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_tautology(&self) -> bool {
        self.0.has_complementary_pair()
    }

    pub fn contains(&self, literal: Literal) -> bool {
        self.0.contains(literal)
    }

    pub fn iter(&self) -> impl Iterator<Item = Literal> + '_ {
        self.0.iter()
    }

    pub fn subsumes(&self, other: &Clause) -> bool {
        other.0.is_subset(&self.0)
    }

    /// `self − other`: drops the literals shared with `other`.
    pub fn minus(&self, other: &Clause) -> Clause {
        Clause(self.0.difference(&other.0))
    }

    /// Binary resolution on `pivot`, which must occur positively in one
    /// clause and negatively in the other. Tautological resolvents are
    /// returned as is.
    pub fn resolve(&self, other: &Clause, pivot: SymbolId) -> Result<Clause, LogicError> {
        let pos = Literal::positive(pivot);
        let neg = Literal::negative(pivot);
        let (drop_self, drop_other) = if self.contains(pos) && other.contains(neg) {
            (pos, neg)
        } else if self.contains(neg) && other.contains(pos) {
            (neg, pos)
        } else {
            return Err(LogicError::NotComplementary(pivot));
        };
        Ok(Clause(
            self.0
                .without(drop_self)
                .union(&other.0.without(drop_other)),
        ))
    }

    /// `¬(l1 ∨ … ∨ lk) = ¬l1 ∧ … ∧ ¬lk`.
    pub fn negate(&self) -> Term {
        Term(self.0.negated())
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        Rendered(self.0.render(alphabet, " | ", "[]"))
    }
}

impl Term {
    pub fn new<I: IntoIterator<Item = Literal>>(literals: I) -> Self {
        Term(LiteralSet::new(literals))
    }

    pub fn tautology() -> Self {
        Term(LiteralSet::empty())
    }

    pub fn from_set(set: LiteralSet) -> Self {
        Term(set)
    }

    pub fn literals(&self) -> &LiteralSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_inconsistent(&self) -> bool {
        self.0.has_complementary_pair()
    }

    pub fn contains(&self, literal: Literal) -> bool {
        self.0.contains(literal)
    }

    pub fn iter(&self) -> impl Iterator<Item = Literal> + '_ {
        self.0.iter()
    }

    pub fn subsumes(&self, other: &Term) -> bool {
        other.0.is_subset(&self.0)
    }

    pub fn conjoin(&self, other: &Term) -> Term {
        Term(self.0.union(&other.0))
    }

    /// Two terms are disjoint when one contains the negation of a literal
    /// of the other.
    pub fn is_disjoint_from(&self, other: &Term) -> bool {
        self.0.clashes(&other.0).next().is_some()
    }

    pub fn negate(&self) -> Clause {
        Clause(self.0.negated())
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        Rendered(self.0.render(alphabet, " & ", "true"))
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clause{:?}", self.0)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term{:?}", self.0)
    }
}

struct Rendered(String);

impl fmt::Display for Rendered {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `f` subsumes `g` when `f ⊇ g`, for clauses and terms alike.
pub fn subsumes<S: AsRef<LiteralSet>>(f: &S, g: &S) -> bool {
    g.as_ref().is_subset(f.as_ref())
}

/// Keeps the elements that strictly subsume no other element, collapsing
/// duplicates. The result is in canonical order.
pub fn mu_minimize<S, I>(items: I) -> Vec<S>
where
    S: AsRef<LiteralSet> + Ord,
    I: IntoIterator<Item = S>,
{
    let mut all: Vec<S> = items.into_iter().collect();
    all.sort_by(|a, b| {
        a.as_ref()
            .len()
            .cmp(&b.as_ref().len())
            .then_with(|| a.cmp(b))
    });
    all.dedup();
    let mut kept: Vec<S> = Vec::with_capacity(all.len());
    for candidate in all {
        // only shorter (or equal-length, hence distinct) sets can be subsets
        if !kept
            .iter()
            .any(|k| k.as_ref().is_subset(candidate.as_ref()))
        {
            kept.push(candidate);
        }
    }
    kept.sort();
    kept
}

/// A μ-minimal set of clauses kept in canonical order. Insertion performs
/// forward and backward subsumption.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClauseSet {
    clauses: Vec<Clause>,
}

impl ClauseSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Clause> {
        self.clauses.iter()
    }

    pub fn as_slice(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn contains(&self, clause: &Clause) -> bool {
        self.clauses.binary_search(clause).is_ok()
    }

    /// Whether some member is a subset of `clause`.
    pub fn covers(&self, clause: &Clause) -> bool {
        self.clauses
            .iter()
            .any(|m| m.literals().is_subset(clause.literals()))
    }

    /// Inserts `clause` unless a member is a subset of it; removes members
    /// that are supersets of it. Returns whether the set changed.
    pub fn insert(&mut self, clause: Clause) -> bool {
        if self.covers(&clause) {
            return false;
        }
        self.clauses
            .retain(|m| !clause.literals().is_subset(m.literals()));
        let pos = self.clauses.binary_search(&clause).unwrap_err();
        self.clauses.insert(pos, clause);
        true
    }

    pub fn into_vec(self) -> Vec<Clause> {
        self.clauses
    }
}

impl FromIterator<Clause> for ClauseSet {
    fn from_iter<I: IntoIterator<Item = Clause>>(iter: I) -> Self {
        ClauseSet {
            clauses: mu_minimize(iter),
        }
    }
}

impl<'a> IntoIterator for &'a ClauseSet {
    type Item = &'a Clause;
    type IntoIter = std::slice::Iter<'a, Clause>;

    fn into_iter(self) -> Self::IntoIter {
        self.clauses.iter()
    }
}
