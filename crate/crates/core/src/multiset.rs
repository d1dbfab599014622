//! Finite multisets with positive multiplicities, used for direct sums of
//! indecomposables and for Grothendieck classes.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

/// A finite multiset. Entries with multiplicity zero are never stored, so
/// equality is equality of multisets and iteration follows the `Ord` of `T`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset<T: Ord> {
    items: BTreeMap<T, u64>,
}

impl<T: Ord> Default for Multiset<T> {
    fn default() -> Self {
        Multiset { items: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> Multiset<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(item: T) -> Self {
        let mut m = Self::new();
        m.insert(item, 1);
        m
    }

    pub fn insert(&mut self, item: T, mult: u64) {
        if mult > 0 {
            *self.items.entry(item).or_insert(0) += mult;
        }
    }

    pub fn get(&self, item: &T) -> u64 {
        self.items.get(item).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Number of distinct entries.
    pub fn len(&self) -> usize {
        self.items.len()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> u64 {
        self.items.values().sum()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, T, u64> {
        self.items.iter()
    }

    pub fn add_all(&mut self, other: &Multiset<T>) {
        self.add_scaled(other, 1);
    }

    pub fn add_scaled(&mut self, other: &Multiset<T>, factor: u64) {
        for (item, mult) in other.iter() {
            self.insert(item.clone(), mult * factor);
        }
    }

    pub fn scaled(&self, factor: u64) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, factor);
        out
    }

    /// Exact multiset difference `self - other`, or the first entry that would
    /// go negative.
    pub fn checked_sub(&self, other: &Multiset<T>) -> Result<Self, T> {
        let mut out = self.clone();
        for (item, mult) in other.iter() {
            let have = out.get(item);
            if have < *mult {
                return Err(item.clone());
            }
            if have == *mult {
                out.items.remove(item);
            } else {
                out.items.insert(item.clone(), have - mult);
            }
        }
        Ok(out)
    }

    /// Applies `f` to every entry and collects the images with the same
    /// multiplicities.
    pub fn map<U: Ord + Clone>(&self, mut f: impl FnMut(&T) -> U) -> Multiset<U> {
        let mut out = Multiset::new();
        for (item, mult) in self.iter() {
            out.insert(f(item), *mult);
        }
        out
    }

    /// Fallible version of [`Multiset::map`] whose images are themselves sums.
    pub fn try_flat_map<U: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&T) -> Result<Multiset<U>, E>,
    ) -> Result<Multiset<U>, E> {
        let mut out = Multiset::new();
        for (item, mult) in self.iter() {
            out.add_scaled(&f(item)?, *mult);
        }
        Ok(out)
    }

    /// All entries expanded by multiplicity, in canonical order.
    pub fn expanded(&self) -> Vec<T> {
        let mut out = Vec::new();
        for (item, mult) in self.iter() {
            for _ in 0..*mult {
                out.push(item.clone());
            }
        }
        out
    }
}

impl<T: Ord + Clone> FromIterator<T> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for item in iter {
            m.insert(item, 1);
        }
        m
    }
}

impl<T: Ord + Clone> FromIterator<(T, u64)> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = (T, u64)>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for (item, mult) in iter {
            m.insert(item, mult);
        }
        m
    }
}

impl<'a, T: Ord> IntoIterator for &'a Multiset<T> {
    type Item = (&'a T, &'a u64);
    type IntoIter = btree_map::Iter<'a, T, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// Renders `a + 2*b + c`; the empty sum renders as `0`.
impl<T: Ord + fmt::Display> fmt::Display for Multiset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.items.is_empty() {
            return write!(f, "0");
        }
        for (i, (item, mult)) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *mult == 1 {
                write!(f, "{item}")?;
            } else {
                write!(f, "{mult}*{item}")?;
            }
        }
        Ok(())
    }
}

impl<T: Ord + fmt::Display> fmt::Debug for Multiset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}
