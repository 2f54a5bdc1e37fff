#![allow(dead_code)]

use std::ops::RangeInclusive;

use pabr_core::logic::mu_minimize;
use pabr_core::{Alphabet, AssumptionTable, Clause, KnowledgeBase, Literal, SymbolId, SymbolKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct Sizes {
    pub propositions: RangeInclusive<usize>,
    pub assumptions: RangeInclusive<usize>,
    pub clauses: RangeInclusive<usize>,
    pub max_width: usize,
}

impl Sizes {
    pub fn sweep() -> Self {
        Sizes {
            propositions: 2..=6,
            assumptions: 2..=6,
            clauses: 3..=10,
            max_width: 3,
        }
    }

    /// At most eight symbols, small enough for implicate enumeration.
    pub fn small() -> Self {
        Sizes {
            propositions: 1..=4,
            assumptions: 1..=4,
            clauses: 1..=8,
            max_width: 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub kb: KnowledgeBase,
    pub table: AssumptionTable,
    pub hypothesis: Clause,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_clause<R: Rng>(rng: &mut R, symbols: &[SymbolId], max_width: usize) -> Clause {
    let width = rng.gen_range(1..=max_width.min(symbols.len()));
    Clause::new(
        symbols
            .choose_multiple(rng, width)
            .map(|&s| Literal::new(s, rng.gen_bool(0.5))),
    )
}

/// Symbols of both kinds in shuffled declaration order; roughly a third of
/// the clauses become facts.
pub fn random_instance<R: Rng>(rng: &mut R, sizes: &Sizes) -> Instance {
    let n = rng.gen_range(sizes.propositions.clone());
    let s = rng.gen_range(sizes.assumptions.clone());
    let mut kinds: Vec<SymbolKind> = std::iter::repeat_n(SymbolKind::Proposition, n)
        .chain(std::iter::repeat_n(SymbolKind::Assumption, s))
        .collect();
    kinds.shuffle(rng);

    let mut alphabet = Alphabet::new();
    let (mut p, mut a) = (0, 0);
    for kind in kinds {
        let name = match kind {
            SymbolKind::Proposition => {
                p += 1;
                format!("p{p}")
            }
            SymbolKind::Assumption => {
                a += 1;
                format!("a{a}")
            }
        };
        alphabet.declare(&name, kind).unwrap();
    }
    let symbols: Vec<SymbolId> = alphabet.ids().collect();
    let table = AssumptionTable::from_entries(
        alphabet
            .assumptions()
            .map(|id| (id, rng.gen_range(1..=9) as f64 / 10.0))
            .collect::<Vec<_>>(),
    )
    .unwrap();

    let mut kb = KnowledgeBase::new(alphabet);
    for _ in 0..rng.gen_range(sizes.clauses.clone()) {
        let clause = random_clause(rng, &symbols, sizes.max_width);
        if rng.gen_bool(0.3) {
            kb.add_fact(clause).unwrap();
        } else {
            kb.add_knowledge(clause).unwrap();
        }
    }
    let hypothesis = random_clause(rng, &symbols, sizes.max_width);
    Instance {
        kb,
        table,
        hypothesis,
    }
}

pub fn instances(seed: u64, count: usize, sizes: &Sizes) -> Vec<Instance> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random_instance(&mut rng, sizes))
        .collect()
}

pub fn masks(clause: &Clause) -> (u32, u32) {
    clause.iter().fold((0, 0), |(pos, neg), l| {
        let bit = 1u32 << l.symbol().0;
        if l.is_positive() {
            (pos | bit, neg)
        } else {
            (pos, neg | bit)
        }
    })
}

pub fn satisfies(model: u32, clause: &Clause) -> bool {
    let (pos, neg) = masks(clause);
    model & pos != 0 || !model & neg != 0
}

pub fn models<'a, I: IntoIterator<Item = &'a Clause>>(clauses: I, symbols: usize) -> Vec<u32> {
    let clauses: Vec<&Clause> = clauses.into_iter().collect();
    (0..1u32 << symbols)
        .filter(|&m| clauses.iter().all(|c| satisfies(m, c)))
        .collect()
}

fn clause_from_masks(pos: u32, neg: u32, symbols: usize) -> Clause {
    Clause::new((0..symbols as u32).flat_map(|i| {
        let id = SymbolId(i);
        let p = (pos >> i & 1 == 1).then(|| Literal::positive(id));
        let n = (neg >> i & 1 == 1).then(|| Literal::negative(id));
        p.into_iter().chain(n)
    }))
}

/// Every clause over the first `symbols` ids, tautologies included.
pub fn all_clauses(symbols: usize) -> Vec<Clause> {
    let full = 1u32 << symbols;
    let mut out = Vec::new();
    for pos in 0..full {
        for neg in 0..full {
            out.push(clause_from_masks(pos, neg, symbols));
        }
    }
    out
}

/// Prime implicates by brute force: the μ-minimal clauses true in every
/// model. Tautologies count as implicates.
pub fn prime_implicates<'a, I: IntoIterator<Item = &'a Clause>>(
    clauses: I,
    symbols: usize,
) -> Vec<Clause> {
    let ms = models(clauses, symbols);
    let full = 1u32 << symbols;
    let mut implied = Vec::new();
    for pos in 0..full {
        for neg in 0..full {
            if ms.iter().all(|&m| m & pos != 0 || !m & neg != 0) {
                implied.push(clause_from_masks(pos, neg, symbols));
            }
        }
    }
    mu_minimize(implied)
}

pub fn is_assumption_clause(alphabet: &Alphabet, clause: &Clause) -> bool {
    clause.iter().all(|l| alphabet.is_assumption(l.symbol()))
}
