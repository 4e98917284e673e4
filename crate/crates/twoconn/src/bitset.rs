//! Word-packed vertex sets backing the enumeration and subset-testing cores.
//!
//! Sets live in `[u64]` slices of a fixed word count per host graph. All
//! routines here are allocation-free; callers hold the scratch buffers.

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

#[inline]
pub(crate) fn set_bit(w: &mut [u64], i: usize) {
    w[i >> 6] |= 1u64 << (i & 63);
}

#[inline]
pub(crate) fn clear_bit(w: &mut [u64], i: usize) {
    w[i >> 6] &= !(1u64 << (i & 63));
}

#[inline]
pub(crate) fn test_bit(w: &[u64], i: usize) -> bool {
    w[i >> 6] & (1u64 << (i & 63)) != 0
}

#[inline]
pub(crate) fn count(w: &[u64]) -> usize {
    w.iter().map(|x| x.count_ones() as usize).sum()
}

pub(crate) fn clear(w: &mut [u64]) {
    w.fill(0);
}

pub(crate) fn copy_from(dst: &mut [u64], src: &[u64]) {
    dst.copy_from_slice(src);
}

pub(crate) fn first_bit(w: &[u64]) -> Option<usize> {
    for (i, &x) in w.iter().enumerate() {
        if x != 0 {
            return Some(i * 64 + x.trailing_zeros() as usize);
        }
    }
    None
}

/// Ascending iterator over set bits.
pub(crate) fn iter_bits(w: &[u64]) -> BitIter<'_> {
    BitIter { words: w, word: 0, cur: w.first().copied().unwrap_or(0) }
}

pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.word];
        }
    }
}

/// Scratch workspace for connectivity tests on masked induced subgraphs.
pub(crate) struct SubsetTester {
    reach: Vec<u64>,
    frontier: Vec<u64>,
    next: Vec<u64>,
    hole: Vec<u64>,
}

impl SubsetTester {
    pub(crate) fn new(words: usize) -> Self {
        SubsetTester {
            reach: vec![0; words],
            frontier: vec![0; words],
            next: vec![0; words],
            hole: vec![0; words],
        }
    }

    /// Is the subgraph induced by `set` connected? Empty sets count as not
    /// connected.
    pub(crate) fn connected(&mut self, adj: &[Box<[u64]>], set: &[u64]) -> bool {
        let Some(start) = first_bit(set) else {
            return false;
        };
        clear(&mut self.reach);
        clear(&mut self.frontier);
        set_bit(&mut self.reach, start);
        set_bit(&mut self.frontier, start);
        loop {
            clear(&mut self.next);
            for v in iter_bits(&self.frontier) {
                for (w, a) in self.next.iter_mut().zip(adj[v].iter()) {
                    *w |= a;
                }
            }
            let mut grew = false;
            for i in 0..self.next.len() {
                let fresh = self.next[i] & set[i] & !self.reach[i];
                self.frontier[i] = fresh;
                self.reach[i] |= fresh;
                grew |= fresh != 0;
            }
            if !grew {
                break;
            }
        }
        self.reach
            .iter()
            .zip(set.iter())
            .all(|(r, s)| r & s == *s)
    }

    /// Is the subgraph induced by `set` 2-connected? Requires order >= 3,
    /// connectivity, and no cut vertex; checked by one flood fill per member.
    pub(crate) fn two_connected(&mut self, adj: &[Box<[u64]>], set: &[u64]) -> bool {
        if count(set) < 3 {
            return false;
        }
        if !self.connected(adj, set) {
            return false;
        }
        let members: Vec<usize> = iter_bits(set).collect();
        for &v in &members {
            copy_from(&mut self.hole, set);
            clear_bit(&mut self.hole, v);
            let Some(start) = first_bit(&self.hole) else {
                return false;
            };
            clear(&mut self.reach);
            clear(&mut self.frontier);
            set_bit(&mut self.reach, start);
            set_bit(&mut self.frontier, start);
            loop {
                clear(&mut self.next);
                for u in iter_bits(&self.frontier) {
                    for (w, a) in self.next.iter_mut().zip(adj[u].iter()) {
                        *w |= a;
                    }
                }
                let mut grew = false;
                for i in 0..self.next.len() {
                    let fresh = self.next[i] & self.hole[i] & !self.reach[i];
                    self.frontier[i] = fresh;
                    self.reach[i] |= fresh;
                    grew |= fresh != 0;
                }
                if !grew {
                    break;
                }
            }
            let whole = self
                .reach
                .iter()
                .zip(self.hole.iter())
                .all(|(r, h)| r & h == *h);
            if !whole {
                return false;
            }
        }
        true
    }
}
