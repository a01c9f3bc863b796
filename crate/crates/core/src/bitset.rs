use std::cmp::Ordering;
use std::fmt;

/// A set of element indices of a finite module.
///
/// Ordering is by size, then by the bit string read from element 0 upwards
/// with absence before presence; this is the canonical order used for
/// every tie-break in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    len: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(len: usize) -> Self {
        ElemSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = ElemSet::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(len: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = ElemSet::empty(len);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Capacity (the size of the ambient module).
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i >> 6];
        let bit = 1u64 << (i & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// True when the only common element is at most `0`.
    pub fn meets_only_in_zero(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .all(|(i, (a, b))| {
                let m = a & b;
                if i == 0 {
                    m & !1 == 0
                } else {
                    m == 0
                }
            })
    }

    pub fn bit_order(&self, other: &ElemSet) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let x = a ^ b;
            if x != 0 {
                let low = x & x.wrapping_neg();
                return if a & low == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.count()
            .cmp(&other.count())
            .then_with(|| self.bit_order(other))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_size_then_bits() {
        let a = ElemSet::from_indices(8, [0, 1]);
        let b = ElemSet::from_indices(8, [0, 2]);
        let c = ElemSet::from_indices(8, [0]);
        assert!(c < a && c < b);
        assert!(b < a);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 1]);
        assert!(a.meets_only_in_zero(&b));
        assert!(!a.meets_only_in_zero(&ElemSet::from_indices(8, [1])));
    }

    #[test]
    fn wide_sets() {
        let mut s = ElemSet::empty(200);
        s.insert(0);
        s.insert(130);
        assert_eq!(s.count(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 130]);
        assert!(s.is_subset(&ElemSet::full(200)));
    }
}
