//! Element labels, ground sets and the bitset encoding of their subsets.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Label of a ground element: `xI` for a plain element, `xI.J` for copy `J` of `xI`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementLabel {
    pub base_id: u32,
    pub copy_id: Option<u32>,
}

impl ElementLabel {
    pub const fn new(base_id: u32) -> Self {
        Self { base_id, copy_id: None }
    }

    pub const fn copy(base_id: u32, copy_id: u32) -> Self {
        Self {
            base_id,
            copy_id: Some(copy_id),
        }
    }

    pub fn is_expanded(&self) -> bool {
        self.copy_id.is_some()
    }
}

impl Ord for ElementLabel {
    // An absent copy index sorts as copy 1; `xI` precedes `xI.1` to keep the order total.
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |l: &Self| (l.base_id, l.copy_id.unwrap_or(1), l.copy_id.is_some());
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for ElementLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.copy_id {
            Some(j) => write!(f, "x{}.{}", self.base_id, j),
            None => write!(f, "x{}", self.base_id),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseLabelError(pub String);

impl fmt::Display for ParseLabelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed element label `{}`", self.0)
    }
}

impl std::error::Error for ParseLabelError {}

impl FromStr for ElementLabel {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseLabelError(s.to_string());
        let body = s.strip_prefix('x').ok_or_else(err)?;
        let positive = |t: &str| -> std::result::Result<u32, ParseLabelError> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            match t.parse::<u32>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(err()),
            }
        };
        match body.split_once('.') {
            Some((i, j)) => Ok(Self::copy(positive(i)?, positive(j)?)),
            None => Ok(Self::new(positive(body)?)),
        }
    }
}

/// A subset of a ground set, stored as a bitmask over ground positions.
///
/// The ordering is lexicographic on the sorted position lists, which is the
/// canonical order for basis listings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: Self = Self(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Self(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Self(it.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Self {
        Self(self.0 | 1u64 << i)
    }

    pub fn remove(self, i: usize) -> Self {
        Self(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        Self(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Below the lowest differing position both lists agree. The set holding
        // that position comes first unless the other list ends before it.
        let p = diff.trailing_zeros();
        let self_holds = self.0 >> p & 1 == 1;
        let rest = if self_holds { other.0 } else { self.0 };
        let holder_first = rest >> p != 0;
        if self_holds == holder_first {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Indices {}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(ElementSet(cur))
    }
}

/// Ground set: distinct labels kept in canonical label order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroundSet {
    labels: Vec<ElementLabel>,
}

impl GroundSet {
    /// Builds a ground set, sorting the labels into canonical order.
    pub fn new<I: IntoIterator<Item = ElementLabel>>(labels: I) -> Result<Self> {
        let mut labels: Vec<_> = labels.into_iter().collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0]));
        }
        if labels.len() > 64 {
            return Err(Error::GroundTooLarge(labels.len()));
        }
        Ok(Self { labels })
    }

    /// `x1, ..., xn`.
    pub fn standard(n: usize) -> Self {
        Self::new((1..=n as u32).map(ElementLabel::new)).expect("standard ground set")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[ElementLabel] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> ElementLabel {
        self.labels[i]
    }

    pub fn index_of(&self, label: &ElementLabel) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    pub fn contains(&self, label: &ElementLabel) -> bool {
        self.index_of(label).is_some()
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn subset<'a, I>(&self, labels: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = &'a ElementLabel>,
    {
        labels.into_iter().try_fold(ElementSet::EMPTY, |acc, l| {
            self.index_of(l).map(|i| acc.insert(i)).ok_or(Error::OutsideGround(*l))
        })
    }

    pub fn labels_of(&self, set: ElementSet) -> Vec<ElementLabel> {
        set.iter().map(|i| self.labels[i]).collect()
    }

    /// Space separated labels of `set`, e.g. `x1 x3.2`.
    pub fn format_set(&self, set: ElementSet) -> String {
        let parts: Vec<String> = set.iter().map(|i| self.labels[i].to_string()).collect();
        parts.join(" ")
    }
}
