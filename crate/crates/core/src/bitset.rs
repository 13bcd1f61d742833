//! Fixed-capacity dense bitsets.
//!
//! Every set in this crate (object sets, attribute sets, context rows and
//! columns) is a `BitSet` over a fixed domain `0..domain`, packed into `u64`
//! words so that the derivation operators reduce to word-parallel AND loops.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = u64::BITS as usize;

/// Dense bitset over the fixed domain `0..domain`.
///
/// Bits at positions `>= domain` are kept zero at all times, so `Eq` and
/// `Hash` can be derived over the raw words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    domain: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn empty(domain: usize) -> Self {
        BitSet {
            domain,
            words: vec![0; domain.div_ceil(WORD_BITS)],
        }
    }

    /// The set `{0, 1, .., domain-1}`.
    pub fn full(domain: usize) -> Self {
        let mut set = BitSet::empty(domain);
        for word in set.words.iter_mut() {
            *word = u64::MAX;
        }
        set.clear_tail();
        set
    }

    /// Size of the index space, not the number of members.
    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, bit: usize) -> bool {
        debug_assert!(bit < self.domain);
        self.words[bit / WORD_BITS] & (1 << (bit % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, bit: usize) {
        assert!(bit < self.domain, "bit {bit} out of domain {}", self.domain);
        self.words[bit / WORD_BITS] |= 1 << (bit % WORD_BITS);
    }

    pub fn remove(&mut self, bit: usize) {
        assert!(bit < self.domain, "bit {bit} out of domain {}", self.domain);
        self.words[bit / WORD_BITS] &= !(1 << (bit % WORD_BITS));
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.domain, other.domain);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.domain, other.domain);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.domain, other.domain);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    /// True if `self` holds some bit `< bound` that `other` does not.
    ///
    /// This is the acceptance test of lectic (next-closure) enumeration: a
    /// candidate closure is canonical only when it adds nothing below the
    /// pivot index.
    pub fn has_extra_below(&self, other: &BitSet, bound: usize) -> bool {
        debug_assert_eq!(self.domain, other.domain);
        let full_words = bound / WORD_BITS;
        for w in 0..full_words {
            if self.words[w] & !other.words[w] != 0 {
                return true;
            }
        }
        let rem = bound % WORD_BITS;
        if rem > 0 {
            let mask = (1u64 << rem) - 1;
            if self.words[full_words] & !other.words[full_words] & mask != 0 {
                return true;
            }
        }
        false
    }

    /// Lectic (canonical) total order: `a < b` iff the smallest index where
    /// the two sets differ belongs to `b`.
    pub fn lectic_cmp(&self, other: &BitSet) -> Ordering {
        debug_assert_eq!(self.domain, other.domain);
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return if b & (1 << bit) != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            next_word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    fn clear_tail(&mut self) {
        let rem = self.domain % WORD_BITS;
        if rem > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    next_word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.next_word += 1;
            if self.next_word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.next_word];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.next_word * WORD_BITS + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_bits(domain: usize, bits: &[usize]) -> BitSet {
        let mut s = BitSet::empty(domain);
        for &b in bits {
            s.insert(b);
        }
        s
    }

    #[test]
    fn basic_ops() {
        let mut s = BitSet::empty(130);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.len(), 3);
        assert!(s.contains(64));
        assert!(!s.contains(63));
        s.remove(64);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 129]);
    }

    #[test]
    fn full_masks_tail() {
        let s = BitSet::full(70);
        assert_eq!(s.len(), 70);
        assert_eq!(s.iter().max(), Some(69));
        assert_eq!(BitSet::full(0).len(), 0);
    }

    #[test]
    fn subset_and_intersection() {
        let a = from_bits(10, &[1, 3, 5]);
        let b = from_bits(10, &[1, 2, 3, 5, 7]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersection(&b), a);
        assert_eq!(a.union(&b), b);
    }

    #[test]
    fn lectic_order() {
        // {} < {1} < {0} < {0,1}: the smallest differing index decides.
        let empty = BitSet::empty(2);
        let one = from_bits(2, &[1]);
        let zero = from_bits(2, &[0]);
        let both = from_bits(2, &[0, 1]);
        assert_eq!(empty.lectic_cmp(&one), Ordering::Less);
        assert_eq!(one.lectic_cmp(&zero), Ordering::Less);
        assert_eq!(zero.lectic_cmp(&both), Ordering::Less);
        assert_eq!(both.lectic_cmp(&both), Ordering::Equal);
        assert_eq!(zero.lectic_cmp(&one), Ordering::Greater);
    }

    #[test]
    fn extra_below() {
        let a = from_bits(100, &[2, 70]);
        let b = from_bits(100, &[70]);
        assert!(a.has_extra_below(&b, 3));
        assert!(!a.has_extra_below(&b, 2));
        assert!(a.has_extra_below(&b, 80));
        assert!(!b.has_extra_below(&a, 100));
    }
}
