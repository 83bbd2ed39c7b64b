//! Word-packed bit vectors used for adjacency rows and GF(2) matrix rows.

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn new(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// XOR another vector of the same length into this one.
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(other.words.iter()) {
            *w ^= *o;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, w)| {
            let mut w = *w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// True if `self` and `other` share no set bit.
    pub fn is_disjoint(&self, other: &BitVec) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    /// First set bit of `self & !mask`, if any.
    pub fn first_one_outside(&self, mask: &BitVec) -> Option<usize> {
        for (wi, (a, b)) in self.words.iter().zip(mask.words.iter()).enumerate() {
            let w = a & !b;
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// True if `self & !mask == other & !mask`.
    pub fn eq_outside(&self, other: &BitVec, mask: &BitVec) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .zip(mask.words.iter())
            .all(|((a, b), m)| a & !m == b & !m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_toggle() {
        let mut v = BitVec::new(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert!(v.get(0) && v.get(64) && v.get(129));
        assert!(!v.get(1));
        v.toggle(129);
        assert!(!v.get(129));
        assert_eq!(v.count_ones(), 2);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64]);
    }

    #[test]
    fn xor_and_masks() {
        let mut a = BitVec::new(10);
        let mut b = BitVec::new(10);
        a.set(1, true);
        a.set(3, true);
        b.set(3, true);
        b.set(5, true);
        a.xor_assign(&b);
        assert_eq!(a.ones().collect::<Vec<_>>(), vec![1, 5]);
        let mut mask = BitVec::new(10);
        mask.set(5, true);
        assert_eq!(a.first_one_outside(&mask), Some(1));
        assert!(!a.is_disjoint(&b));
    }
}
