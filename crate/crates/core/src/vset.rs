//! Vertex subsets backed by bit words.
//!
//! Sets over vertex labels `0..n` are stored inline in a single `u64` for
//! `n <= 64` and spill to a word vector beyond that. All set algebra is
//! word-parallel. Iteration is always in ascending label order, and the
//! `Ord` implementation compares sets by their numeric bitset value
//! (`sum of 2^v`), which is the tie-breaking order used for witnesses
//! throughout the crate.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Words {
    Inline(u64),
    // Invariant: at least two words and the last word is nonzero, so each
    // set of vertices has exactly one representation.
    Spilled(Vec<u64>),
}

/// A subset of vertex labels with word-parallel set algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Words,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet {
            words: Words::Inline(0),
        }
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::new();
        for word_idx in 0..n.div_ceil(64) {
            let lo = word_idx * 64;
            let bits_here = (n - lo).min(64);
            let word = if bits_here == 64 {
                u64::MAX
            } else {
                (1u64 << bits_here) - 1
            };
            s.set_word(word_idx, word);
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    /// Builds a set from the low 64 labels given as a bit mask.
    pub fn from_mask(mask: u64) -> Self {
        VertexSet {
            words: Words::Inline(mask),
        }
    }

    fn word(&self, idx: usize) -> u64 {
        match &self.words {
            Words::Inline(w) => {
                if idx == 0 {
                    *w
                } else {
                    0
                }
            }
            Words::Spilled(ws) => ws.get(idx).copied().unwrap_or(0),
        }
    }

    fn word_len(&self) -> usize {
        match &self.words {
            Words::Inline(_) => 1,
            Words::Spilled(ws) => ws.len(),
        }
    }

    fn set_word(&mut self, idx: usize, value: u64) {
        match &mut self.words {
            Words::Inline(w) if idx == 0 => {
                *w = value;
                return;
            }
            Words::Inline(w) => {
                if value == 0 {
                    return;
                }
                let mut ws = vec![*w];
                ws.resize(idx + 1, 0);
                ws[idx] = value;
                self.words = Words::Spilled(ws);
            }
            Words::Spilled(ws) => {
                if idx >= ws.len() {
                    if value == 0 {
                        return;
                    }
                    ws.resize(idx + 1, 0);
                }
                ws[idx] = value;
            }
        }
        self.normalize();
    }

    fn normalize(&mut self) {
        if let Words::Spilled(ws) = &mut self.words {
            while ws.len() > 1 && *ws.last().unwrap() == 0 {
                ws.pop();
            }
            if ws.len() == 1 {
                self.words = Words::Inline(ws[0]);
            }
        }
    }

    pub fn insert(&mut self, v: usize) {
        let (idx, bit) = (v / 64, v % 64);
        self.set_word(idx, self.word(idx) | (1u64 << bit));
    }

    pub fn remove(&mut self, v: usize) {
        let (idx, bit) = (v / 64, v % 64);
        self.set_word(idx, self.word(idx) & !(1u64 << bit));
    }

    pub fn contains(&self, v: usize) -> bool {
        (self.word(v / 64) >> (v % 64)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        match &self.words {
            Words::Inline(w) => w.count_ones() as usize,
            Words::Spilled(ws) => ws.iter().map(|w| w.count_ones() as usize).sum(),
        }
    }

    pub fn is_empty(&self) -> bool {
        match &self.words {
            Words::Inline(w) => *w == 0,
            Words::Spilled(_) => false,
        }
    }

    /// Smallest member, if any.
    pub fn min_element(&self) -> Option<usize> {
        for idx in 0..self.word_len() {
            let w = self.word(idx);
            if w != 0 {
                return Some(idx * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    fn zip_words(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        let len = self.word_len().max(other.word_len());
        let mut out = VertexSet::new();
        for idx in 0..len {
            out.set_word(idx, f(self.word(idx), other.word(idx)));
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        let len = self.word_len().min(other.word_len());
        (0..len)
            .map(|i| (self.word(i) & other.word(i)).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        let len = self.word_len().min(other.word_len());
        (0..len).all(|i| self.word(i) & other.word(i) == 0)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        (0..self.word_len()).all(|i| self.word(i) & !other.word(i) == 0)
    }

    /// Complement within the universe `{0, ..., n-1}`.
    pub fn complement(&self, n: usize) -> Self {
        VertexSet::full(n).difference(self)
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word_idx: 0,
            current: self.word(0),
        }
    }

    /// The bit mask of the members, valid only when all labels are < 64.
    pub fn as_mask(&self) -> Option<u64> {
        match &self.words {
            Words::Inline(w) => Some(*w),
            Words::Spilled(_) => None,
        }
    }

    /// Numeric-value comparison: compares the sets as the integers
    /// `sum of 2^v`. Used for deterministic lexicographic tie-breaking.
    pub fn value_cmp(&self, other: &Self) -> std::cmp::Ordering {
        let len = self.word_len().max(other.word_len());
        for idx in (0..len).rev() {
            match self.word(idx).cmp(&other.word(idx)) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl Default for VertexSet {
    fn default() -> Self {
        VertexSet::new()
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.value_cmp(other)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * 64 + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.set.word_len() {
                return None;
            }
            self.current = self.set.word(self.word_idx);
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_remove() {
        let mut s = VertexSet::new();
        assert!(s.is_empty());
        s.insert(3);
        s.insert(70);
        s.insert(3);
        assert_eq!(s.len(), 2);
        assert!(s.contains(3));
        assert!(s.contains(70));
        assert!(!s.contains(4));
        s.remove(70);
        assert_eq!(s.len(), 1);
        // Removal of the high bit must demote back to the inline form so
        // equality with an inline-built set holds.
        assert_eq!(s, VertexSet::singleton(3));
    }

    #[test]
    fn full_and_complement() {
        let s = VertexSet::full(5);
        assert_eq!(s.len(), 5);
        assert_eq!(s.as_mask(), Some(0b11111));
        let t = VertexSet::singleton(2).complement(5);
        assert_eq!(t.iter().collect::<Vec<_>>(), vec![0, 1, 3, 4]);
        assert_eq!(VertexSet::full(130).len(), 130);
        assert_eq!(VertexSet::full(64).as_mask(), Some(u64::MAX));
    }

    #[test]
    fn algebra_across_word_boundary() {
        let a: VertexSet = [1, 63, 64, 200].into_iter().collect();
        let b: VertexSet = [63, 64, 65].into_iter().collect();
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![63, 64]);
        assert_eq!(
            a.union(&b).iter().collect::<Vec<_>>(),
            vec![1, 63, 64, 65, 200]
        );
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![1, 200]);
        assert_eq!(a.intersection_len(&b), 2);
        assert!(!a.is_disjoint(&b));
        assert!(a.intersection(&b).is_subset_of(&a));
    }

    #[test]
    fn ascending_iteration_and_min() {
        let s: VertexSet = [9, 0, 100, 64].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 9, 64, 100]);
        assert_eq!(s.min_element(), Some(0));
        assert_eq!(VertexSet::new().min_element(), None);
    }

    #[test]
    fn value_order_matches_mask_order() {
        let a = VertexSet::from_mask(0b0011);
        let b = VertexSet::from_mask(0b0101);
        assert!(a < b);
        let big: VertexSet = [70].into_iter().collect();
        assert!(a < big);
        assert_eq!(a.cmp(&a.clone()), std::cmp::Ordering::Equal);
    }
}
