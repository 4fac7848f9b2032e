//! Sparse bigraded dimension tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A finitely supported map `(a, b) → dim`. Zero entries are never stored, so
/// two tables are equal iff they agree at every bidegree.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BidegreeTable {
    entries: BTreeMap<(i64, i64), usize>,
}

/// One serialised table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub a: i64,
    pub b: i64,
    pub dim: usize,
}

impl BidegreeTable {
    /// The empty table.
    pub fn new() -> Self {
        Self::default()
    }

    /// Dimension at `(a, b)` (zero when absent).
    pub fn get(&self, a: i64, b: i64) -> usize {
        self.entries.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Sets the dimension at `(a, b)`; setting zero removes the entry.
    pub fn set(&mut self, a: i64, b: i64, dim: usize) {
        if dim == 0 {
            self.entries.remove(&(a, b));
        } else {
            self.entries.insert((a, b), dim);
        }
    }

    /// Adds `dim` to the entry at `(a, b)`.
    pub fn add(&mut self, a: i64, b: i64, dim: usize) {
        if dim > 0 {
            *self.entries.entry((a, b)).or_insert(0) += dim;
        }
    }

    /// Nonzero entries in lexicographic `(a, b)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Number of nonzero entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// True iff every entry is zero.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all dimensions.
    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// The sub-table of entries satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(i64, i64) -> bool) -> BidegreeTable {
        BidegreeTable {
            entries: self
                .entries
                .iter()
                .filter(|((a, b), _)| keep(*a, *b))
                .map(|(&k, &v)| (k, v))
                .collect(),
        }
    }

    /// Applies a bijective relabelling of bidegrees.
    pub fn relabel(&self, mut f: impl FnMut(i64, i64) -> (i64, i64)) -> BidegreeTable {
        let mut out = BidegreeTable::new();
        for ((a, b), d) in self.iter() {
            let (x, y) = f(a, b);
            out.add(x, y, d);
        }
        out
    }

    /// Sum of dimensions over each fixed first index.
    pub fn row_sums(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for ((a, _), d) in self.iter() {
            *out.entry(a).or_insert(0) += d;
        }
        out
    }

    /// Entries where `self` and `other` differ, as `(a, b, self, other)`.
    pub fn diff(&self, other: &BidegreeTable) -> Vec<(i64, i64, usize, usize)> {
        let mut keys: Vec<(i64, i64)> = self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(a, b)| {
                let (x, y) = (self.get(a, b), other.get(a, b));
                (x != y).then_some((a, b, x, y))
            })
            .collect()
    }

    /// The serialised row list.
    pub fn to_entries(&self) -> Vec<TableEntry> {
        self.iter()
            .map(|((a, b), dim)| TableEntry { a, b, dim })
            .collect()
    }
}

impl FromIterator<((i64, i64), usize)> for BidegreeTable {
    fn from_iter<I: IntoIterator<Item = ((i64, i64), usize)>>(iter: I) -> Self {
        let mut t = BidegreeTable::new();
        for ((a, b), d) in iter {
            t.add(a, b, d);
        }
        t
    }
}

impl fmt::Debug for BidegreeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

impl Serialize for BidegreeTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_entries().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BidegreeTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<TableEntry> = Vec::deserialize(deserializer)?;
        Ok(rows.into_iter().map(|e| ((e.a, e.b), e.dim)).collect())
    }
}
