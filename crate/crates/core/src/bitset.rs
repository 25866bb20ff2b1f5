//! Fixed-width bit sets.
//!
//! One type serves two roles: edge-id sets (perfect matchings, face
//! boundaries) and binary codes of hypercube vertices. Ordering is
//! lexicographic on the ascending list of set positions, so sorting a list of
//! matchings sorts them by their sorted edge-id arrays.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn from_positions(len: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut set = BitSet::new(len);
        for p in positions {
            set.insert(p);
        }
        set
    }

    /// Width of the set (the number of addressable positions).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn insert(&mut self, pos: usize) {
        assert!(pos < self.len, "bit {pos} out of range {}", self.len);
        self.words[pos / WORD] |= 1 << (pos % WORD);
    }

    pub fn remove(&mut self, pos: usize) {
        assert!(pos < self.len, "bit {pos} out of range {}", self.len);
        self.words[pos / WORD] &= !(1 << (pos % WORD));
    }

    pub fn toggle(&mut self, pos: usize) {
        assert!(pos < self.len, "bit {pos} out of range {}", self.len);
        self.words[pos / WORD] ^= 1 << (pos % WORD);
    }

    pub fn contains(&self, pos: usize) -> bool {
        pos < self.len && self.words[pos / WORD] & (1 << (pos % WORD)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_width(&self, other: &BitSet) {
        assert_eq!(self.len, other.len, "bit set width mismatch");
    }

    pub fn xor(&self, other: &BitSet) -> BitSet {
        self.check_width(other);
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect(),
            len: self.len,
        }
    }

    pub fn and(&self, other: &BitSet) -> BitSet {
        self.check_width(other);
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
            len: self.len,
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn and_count(&self, other: &BitSet) -> usize {
        self.check_width(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Hamming distance between two sets of equal width.
    pub fn hamming(&self, other: &BitSet) -> usize {
        self.check_width(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Componentwise order of binary codes: every set bit of `self` is set in `other`.
    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Concatenation `self · other` of two codes.
    pub fn concat(&self, other: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.len + other.len);
        for p in self.iter() {
            out.insert(p);
        }
        for p in other.iter() {
            out.insert(self.len + p);
        }
        out
    }

    /// Renders the set as a binary code, position 0 first.
    pub fn to_code_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }

    pub fn from_code_string(code: &str) -> Option<BitSet> {
        let mut set = BitSet::new(code.len());
        for (i, c) in code.chars().enumerate() {
            match c {
                '0' => {}
                '1' => set.insert(i),
                _ => return None,
            }
        }
        Some(set)
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then_with(|| self.len.cmp(&other.len))
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
