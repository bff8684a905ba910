//! Fixed-width and chunked vertex bitsets.
//!
//! The solver core is generic over [`BitBlock`]; instances with at most 64 or
//! 128 elements run on a single machine word, larger ones on [`ChunkedBits`].

use std::fmt::Debug;

pub trait BitBlock: Clone + Debug + PartialEq + Eq {
    /// Empty set able to hold elements `0..width`.
    fn empty(width: usize) -> Self;
    fn insert(&mut self, i: usize);
    fn remove(&mut self, i: usize);
    fn contains(&self, i: usize) -> bool;
    fn count(&self) -> usize;
    fn is_empty(&self) -> bool;
    fn and(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn or_assign(&mut self, other: &Self);
    fn intersects(&self, other: &Self) -> bool;
    /// `|self ∩ other|` without materializing the intersection.
    fn count_and(&self, other: &Self) -> usize;
    /// Smallest element, if any.
    fn first(&self) -> Option<usize>;
    /// Elements in ascending order.
    fn ones(&self) -> Vec<usize>;

    fn from_indices(width: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Self::empty(width);
        for i in items {
            b.insert(i);
        }
        b
    }
}

macro_rules! word_block {
    ($t:ty, $bits:expr) => {
        impl BitBlock for $t {
            fn empty(width: usize) -> Self {
                debug_assert!(width <= $bits);
                0
            }
            #[inline]
            fn insert(&mut self, i: usize) {
                *self |= 1 << i;
            }
            #[inline]
            fn remove(&mut self, i: usize) {
                *self &= !(1 << i);
            }
            #[inline]
            fn contains(&self, i: usize) -> bool {
                (*self >> i) & 1 == 1
            }
            #[inline]
            fn count(&self) -> usize {
                self.count_ones() as usize
            }
            #[inline]
            fn is_empty(&self) -> bool {
                *self == 0
            }
            #[inline]
            fn and(&self, other: &Self) -> Self {
                *self & *other
            }
            #[inline]
            fn and_not(&self, other: &Self) -> Self {
                *self & !*other
            }
            #[inline]
            fn or_assign(&mut self, other: &Self) {
                *self |= *other;
            }
            #[inline]
            fn intersects(&self, other: &Self) -> bool {
                *self & *other != 0
            }
            #[inline]
            fn count_and(&self, other: &Self) -> usize {
                (*self & *other).count_ones() as usize
            }
            #[inline]
            fn first(&self) -> Option<usize> {
                if *self == 0 {
                    None
                } else {
                    Some(self.trailing_zeros() as usize)
                }
            }
            fn ones(&self) -> Vec<usize> {
                let mut out = Vec::with_capacity(self.count());
                let mut w = *self;
                while w != 0 {
                    out.push(w.trailing_zeros() as usize);
                    w &= w - 1;
                }
                out
            }
        }
    };
}

word_block!(u64, 64);
word_block!(u128, 128);

/// Bitset over any number of elements, stored as 64-bit chunks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChunkedBits {
    words: Vec<u64>,
}

impl ChunkedBits {
    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl BitBlock for ChunkedBits {
    fn empty(width: usize) -> Self {
        ChunkedBits {
            words: vec![0; width.div_ceil(64).max(1)],
        }
    }
    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }
    fn contains(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }
    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
    fn and(&self, other: &Self) -> Self {
        ChunkedBits {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }
    fn and_not(&self, other: &Self) -> Self {
        ChunkedBits {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }
    fn or_assign(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }
    fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }
    fn count_and(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &word) in self.words.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                out.push(i * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }
}
