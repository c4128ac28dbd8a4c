//! Bitsets over the dense element indices `0..n` of a finite structure.
//!
//! A [`Subset`] is the carrier for ideals (over semiring elements) and
//! subsemimodules (over module elements). Ordering is by the numeric value of
//! the bitset, element 0 being the least significant bit, so sorted lists of
//! subsets come out in ascending bitset order.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    universe: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn singleton(universe: usize, index: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(index);
        s
    }

    /// Panics if an index is outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// The subset whose bitset value is `bits`; only meaningful for `universe <= 64`.
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        assert!(universe <= WORD, "from_bits needs a universe of at most 64");
        let mut s = Self::empty(universe);
        if universe > 0 {
            let mask = if universe == WORD {
                u64::MAX
            } else {
                (1u64 << universe) - 1
            };
            s.words[0] = bits & mask;
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, index: usize) -> bool {
        assert!(index < self.universe, "index {index} outside universe {}", self.universe);
        let (w, b) = (index / WORD, index % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, index: usize) {
        if index < self.universe {
            self.words[index / WORD] &= !(1 << (index % WORD));
        }
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe && self.words[index / WORD] & (1 << (index % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &Subset) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn union(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.universe, other.universe);
        Subset {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.universe, other.universe);
        Subset {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union_with(&mut self, other: &Subset) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// The complement within the universe.
    pub fn complement(&self) -> Subset {
        let mut out = Subset::empty(self.universe);
        for i in 0..self.universe {
            if !self.contains(i) {
                out.insert(i);
            }
        }
        out
    }

    /// Two subsets are comparable when one contains the other.
    pub fn comparable(&self, other: &Subset) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }
}

impl Subset {
    /// The cartesian product `self × other`, with the pair `(a, b)` at index
    /// `a * other.universe() + b`.
    pub fn product(&self, other: &Subset) -> Subset {
        let mut out = Subset::empty(self.universe * other.universe);
        for a in self.iter() {
            for b in other.iter() {
                out.insert(a * other.universe + b);
            }
        }
        out
    }
}

/// Every set closed under `close`, found by adjoining one element at a time
/// to sets already known, starting from the closure of the empty set.
///
/// Every closed set of a finite structure is reachable this way, since it is
/// generated by finitely many elements. Results are in ascending order.
pub(crate) fn enumerate_closed<F>(universe: usize, close: F) -> Vec<Subset>
where
    F: Fn(&Subset) -> Subset,
{
    use std::collections::BTreeSet;

    let bottom = close(&Subset::empty(universe));
    let mut seen = BTreeSet::new();
    let mut stack = vec![bottom.clone()];
    seen.insert(bottom);
    while let Some(set) = stack.pop() {
        for x in 0..universe {
            if set.contains(x) {
                continue;
            }
            let mut grown = set.clone();
            grown.insert(x);
            let closed = close(&grown);
            if seen.insert(closed.clone()) {
                stack.push(closed);
            }
        }
    }
    seen.into_iter().collect()
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            // most significant word first
            self.words.iter().rev().cmp(other.words.iter().rev())
        })
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset({}/{})", self, self.universe)
    }
}
