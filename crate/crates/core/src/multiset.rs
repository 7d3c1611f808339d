//! Finite multisets over an ordered, exact value domain.

use std::collections::BTreeMap;
use std::fmt;

/// A finite multiset: a map from values to positive multiplicities.
/// Cardinality is the sum of multiplicities.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Multiset<K: Ord> {
    entries: BTreeMap<K, u64>,
}

impl<K: Ord + Clone> Multiset<K> {
    pub fn new() -> Self {
        Multiset {
            entries: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, value: K, multiplicity: u64) {
        if multiplicity == 0 {
            return;
        }
        *self.entries.entry(value).or_insert(0) += multiplicity;
    }

    pub fn multiplicity(&self, value: &K) -> u64 {
        self.entries.get(value).copied().unwrap_or(0)
    }

    pub fn contains(&self, value: &K) -> bool {
        self.multiplicity(value) > 0
    }

    /// |S| = sum of multiplicities.
    pub fn cardinality(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, u64)> {
        self.entries.iter().map(|(k, &m)| (k, m))
    }

    pub fn support(&self) -> impl Iterator<Item = &K> {
        self.entries.keys()
    }

    /// Multiset union: multiplicities add.
    pub fn union(&self, other: &Multiset<K>) -> Multiset<K> {
        let mut out = self.clone();
        for (k, m) in other.iter() {
            out.insert(k.clone(), m);
        }
        out
    }

    /// Image of the multiset under a map, multiplicities carried along.
    pub fn map<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> Multiset<L> {
        let mut out = Multiset::new();
        for (k, m) in self.iter() {
            out.insert(f(k), m);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, u64)> for Multiset<K> {
    fn from_iter<I: IntoIterator<Item = (K, u64)>>(iter: I) -> Self {
        let mut out = Multiset::new();
        for (k, m) in iter {
            out.insert(k, m);
        }
        out
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for Multiset<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for (k, m) in self.iter() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{}", k)?;
            } else {
                write!(f, "{}×{}", k, m)?;
            }
        }
        write!(f, "}}")
    }
}
