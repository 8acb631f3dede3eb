//! Fixed-width sets of element indices.
//!
//! Every group handled by this crate has at most [`MAX_ORDER`] elements, so a
//! subset of a group is a single `u64` mask. Iteration is always ascending.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Element index into a Cayley table.
pub type Elem = usize;

/// Hard upper bound on group order (width of [`ElemSet`]).
pub const MAX_ORDER: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        if n == MAX_ORDER {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(a: Elem) -> Self {
        let mut s = ElemSet::EMPTY;
        s.insert(a);
        s
    }

    pub fn contains(self, a: Elem) -> bool {
        a < MAX_ORDER && self.0 & (1u64 << a) != 0
    }

    pub fn insert(&mut self, a: Elem) -> bool {
        assert!(a < MAX_ORDER, "element {a} out of range");
        let fresh = !self.contains(a);
        self.0 |= 1u64 << a;
        fresh
    }

    pub fn remove(&mut self, a: Elem) {
        if a < MAX_ORDER {
            self.0 &= !(1u64 << a);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElemSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<Elem> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Elem)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<Elem> {
        self.iter().collect()
    }

    /// Canonical order used for every list of sets: size first, then the
    /// ascending element sequences compared lexicographically.
    pub fn canonical_cmp(&self, other: &ElemSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl IntoIterator for ElemSet {
    type Item = Elem;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        if self.0 == 0 {
            return None;
        }
        let a = self.0.trailing_zeros() as Elem;
        self.0 &= self.0 - 1;
        Some(a)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<Elem>::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&a| a >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!(
                "element {bad} out of range"
            )));
        }
        Ok(v.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let a: ElemSet = [0, 2, 4].into_iter().collect();
        let b: ElemSet = [0, 3].into_iter().collect();
        assert_eq!(a.intersection(b).to_vec(), vec![0]);
        assert_eq!(a.union(b).to_vec(), vec![0, 2, 3, 4]);
        assert_eq!(a.difference(b).to_vec(), vec![2, 4]);
        assert_eq!(a.min(), Some(0));
        assert_eq!(ElemSet::full(64).len(), 64);
        assert_eq!(format!("{a}"), "{0,2,4}");
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut v: Vec<ElemSet> = vec![
            [0, 1, 2].into_iter().collect(),
            [0, 3].into_iter().collect(),
            [0, 2].into_iter().collect(),
            [0].into_iter().collect(),
        ];
        v.sort_by(ElemSet::canonical_cmp);
        let got: Vec<Vec<Elem>> = v.iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![0], vec![0, 2], vec![0, 3], vec![0, 1, 2]]);
    }

    proptest! {
        #[test]
        fn iter_matches_vec_semantics(bits in any::<u64>()) {
            let s = ElemSet::from_bits(bits);
            let v = s.to_vec();
            prop_assert!(v.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(v.len(), s.len());
            prop_assert_eq!(v.iter().copied().collect::<ElemSet>(), s);
        }
    }
}
