//! Fixed-width bit sets of residues modulo `n`.

use std::fmt;

const WORD: usize = 64;

/// A subset of the vertex set `Z/nZ`, stored as a packed bit set.
///
/// This is the support of the characteristic vector of `U`. Bits at
/// positions `>= n` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    n: usize,
    words: Vec<u64>,
}

impl VertexSubset {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            words: vec![0; n.div_ceil(WORD)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.clear_tail();
        set
    }

    /// Builds a subset from arbitrary integers, reduced mod `n`. Duplicates
    /// collapse.
    pub fn from_members<I>(n: usize, members: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(n);
        for v in members {
            set.insert(v);
        }
        set
    }

    /// Builds a subset from the low `n` bits of `mask` (requires `n <= 64`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD, "from_mask needs n <= 64");
        let mut set = Self::empty(n);
        if n > 0 {
            set.words[0] = mask;
            set.clear_tail();
        }
        set
    }

    /// Cycle length of the ambient `Z/nZ`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let v = v % self.n;
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let v = v % self.n;
        let (w, b) = (v / WORD, v % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, v: usize) -> bool {
        let v = v % self.n;
        self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Number of members in the cyclic window `start, start+1, ..., start+len-1`.
    ///
    /// `len` is clamped to `n`.
    pub fn count_window(&self, start: usize, len: usize) -> usize {
        let len = len.min(self.n);
        if len == 0 {
            return 0;
        }
        let start = start % self.n;
        let end = start + len;
        if end <= self.n {
            self.count_range(start, end)
        } else {
            self.count_range(start, self.n) + self.count_range(0, end - self.n)
        }
    }

    /// Popcount over the half-open linear range `[lo, hi)`, `hi <= n`.
    fn count_range(&self, lo: usize, hi: usize) -> usize {
        if lo >= hi {
            return 0;
        }
        let (lw, lb) = (lo / WORD, lo % WORD);
        let (hw, hb) = (hi / WORD, hi % WORD);
        let low_mask = u64::MAX << lb;
        if lw == hw {
            let high_mask = (1u64 << hb) - 1;
            return (self.words[lw] & low_mask & high_mask).count_ones() as usize;
        }
        let mut total = (self.words[lw] & low_mask).count_ones() as usize;
        total += self.words[lw + 1..hw]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>();
        if hb > 0 {
            total += (self.words[hw] & ((1u64 << hb) - 1)).count_ones() as usize;
        }
        total
    }

    /// `U + c (mod n)`.
    pub fn rotate(&self, c: usize) -> Self {
        Self::from_members(self.n, self.iter().map(|v| v + c % self.n))
    }

    /// `-U (mod n)`.
    pub fn reflect(&self) -> Self {
        Self::from_members(self.n, self.iter().map(|v| self.n - v))
    }

    /// The low word, when the whole set fits in one.
    pub fn as_mask(&self) -> Option<u64> {
        (self.n <= WORD).then(|| self.words.first().copied().unwrap_or(0))
    }

    fn clear_tail(&mut self) {
        let tail = self.n % WORD;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSubset(n={}, ", self.n)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for VertexSubset {
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
    fn members_are_reduced_and_deduplicated() {
        let u = VertexSubset::from_members(5, [0, 5, 7, 2, 12]);
        assert_eq!(u.to_vec(), vec![0, 2]);
        assert_eq!(u.len(), 2);
    }

    #[test]
    fn full_set_has_no_stray_bits() {
        for n in [1, 3, 63, 64, 65, 130] {
            let u = VertexSubset::full(n);
            assert_eq!(u.len(), n);
            assert_eq!(u.iter().last(), Some(n - 1));
        }
    }

    #[test]
    fn window_counts_wrap() {
        let u = VertexSubset::from_members(10, [0, 1, 8, 9]);
        assert_eq!(u.count_window(8, 4), 4);
        assert_eq!(u.count_window(2, 6), 0);
        assert_eq!(u.count_window(9, 100), 4);
    }

    #[test]
    fn window_counts_across_words() {
        let n = 200;
        let u = VertexSubset::from_members(n, (0..n).step_by(3));
        for start in [0, 60, 63, 64, 127, 190] {
            for len in [0, 1, 5, 64, 65, 130, 200] {
                let brute = (0..len).filter(|i| u.contains(start + i)).count();
                assert_eq!(u.count_window(start, len), brute, "start={start} len={len}");
            }
        }
    }

    #[test]
    fn rotate_and_reflect() {
        let u = VertexSubset::from_members(6, [1, 3, 5]);
        assert_eq!(u.rotate(1).to_vec(), vec![0, 2, 4]);
        assert_eq!(u.reflect().to_vec(), vec![1, 3, 5]);
        let w = VertexSubset::from_members(7, [0, 1, 4]);
        assert_eq!(w.reflect().to_vec(), vec![0, 3, 6]);
    }

    #[test]
    fn display_is_braced_list() {
        let u = VertexSubset::from_members(9, [4, 1]);
        assert_eq!(u.to_string(), "{1,4}");
    }
}
