use std::collections::HashMap;
use std::fmt;

use super::LogicError;

/// Index of a symbol inside its [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolId(pub u32);

impl SymbolId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    Proposition,
    Assumption,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol {
    name: String,
    kind: SymbolKind,
}

impl Symbol {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> SymbolKind {
        self.kind
    }
}

/// Symbol table shared by propositions and assumptions. Names are unique
/// across both kinds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    index: HashMap<String, SymbolId>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn declare(&mut self, name: &str, kind: SymbolKind) -> Result<SymbolId, LogicError> {
        if self.index.contains_key(name) {
            return Err(LogicError::DuplicateSymbol(name.to_owned()));
        }
        let id = SymbolId(self.symbols.len() as u32);
        self.symbols.push(Symbol {
            name: name.to_owned(),
            kind,
        });
        self.index.insert(name.to_owned(), id);
        Ok(id)
    }

    pub fn proposition(&mut self, name: &str) -> Result<SymbolId, LogicError> {
        self.declare(name, SymbolKind::Proposition)
    }

    pub fn assumption(&mut self, name: &str) -> Result<SymbolId, LogicError> {
        self.declare(name, SymbolKind::Assumption)
    }

    pub fn lookup(&self, name: &str) -> Option<SymbolId> {
        self.index.get(name).copied()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn contains(&self, id: SymbolId) -> bool {
        id.index() < self.symbols.len()
    }

    pub fn symbol(&self, id: SymbolId) -> &Symbol {
        &self.symbols[id.index()]
    }

    pub fn name(&self, id: SymbolId) -> &str {
        &self.symbols[id.index()].name
    }

    pub fn kind(&self, id: SymbolId) -> SymbolKind {
        self.symbols[id.index()].kind
    }

    pub fn is_assumption(&self, id: SymbolId) -> bool {
        self.kind(id) == SymbolKind::Assumption
    }

    pub fn ids(&self) -> impl Iterator<Item = SymbolId> + '_ {
        (0..self.symbols.len() as u32).map(SymbolId)
    }

    pub fn assumptions(&self) -> impl Iterator<Item = SymbolId> + '_ {
        self.ids().filter(move |&id| self.is_assumption(id))
    }

    pub fn propositions(&self) -> impl Iterator<Item = SymbolId> + '_ {
        self.ids().filter(move |&id| !self.is_assumption(id))
    }

    /// Renders a literal as `name` or `-name`.
    pub fn literal_name(&self, literal: Literal) -> String {
        if literal.is_positive() {
            self.name(literal.symbol()).to_owned()
        } else {
            format!("-{}", self.name(literal.symbol()))
        }
    }
}

/// A symbol with a polarity. Ordered by `(symbol, polarity)` with the
/// positive literal first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal(u32);

impl Literal {
    pub fn new(symbol: SymbolId, positive: bool) -> Self {
        Literal((symbol.0 << 1) | u32::from(!positive))
    }

    pub fn positive(symbol: SymbolId) -> Self {
        Self::new(symbol, true)
    }

    pub fn negative(symbol: SymbolId) -> Self {
        Self::new(symbol, false)
    }

    pub fn symbol(self) -> SymbolId {
        SymbolId(self.0 >> 1)
    }

    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    pub fn negate(self) -> Self {
        Literal(self.0 ^ 1)
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "s{}", self.symbol().0)
        } else {
            write!(f, "-s{}", self.symbol().0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_names_rejected_across_kinds() {
        let mut alphabet = Alphabet::new();
        alphabet.proposition("p").unwrap();
        assert_eq!(
            alphabet.assumption("p"),
            Err(LogicError::DuplicateSymbol("p".into()))
        );
    }

    #[test]
    fn negation_is_involution() {
        for id in 0..50 {
            for positive in [true, false] {
                let l = Literal::new(SymbolId(id), positive);
                assert_eq!(l.negate().negate(), l);
                assert_ne!(l.negate(), l);
                assert_eq!(l.negate().symbol(), l.symbol());
            }
        }
    }

    #[test]
    fn literal_order_is_symbol_then_polarity() {
        let a = Literal::positive(SymbolId(0));
        let na = Literal::negative(SymbolId(0));
        let b = Literal::negative(SymbolId(1));
        assert!(a < na && na < b);
    }
}
