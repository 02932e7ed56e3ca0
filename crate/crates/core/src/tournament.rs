//! Labeled tournaments on `{1, ..., n}`.
//!
//! A tournament stores one orientation bit per unordered pair `{i, j}` with
//! `i < j`, in lexicographic pair order `(1,2), (1,3), ..., (1,n), (2,3), ...`.
//! A set bit means `i -> j` (an ascent), a clear bit means `j -> i` (a descent).

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    bits: Vec<u64>,
}

/// Number of unordered pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Tournament {
    /// The tournament on `n` vertices in which every edge is a descent.
    pub fn all_descents(n: usize) -> Self {
        Tournament {
            n,
            bits: vec![0; pair_count(n).div_ceil(64)],
        }
    }

    /// The transitive tournament `i -> j` for all `i < j`.
    pub fn transitive(n: usize) -> Self {
        let mut t = Self::all_descents(n);
        for k in 0..pair_count(n) {
            t.bits[k / 64] |= 1 << (k % 64);
        }
        t
    }

    /// Builds a tournament from a list of directed edges `(u, v)` meaning
    /// `u -> v`. Every unordered pair must appear exactly once.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut t = Self::all_descents(n);
        let mut seen = vec![false; pair_count(n)];
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::BadTournament(format!("edge {u} {v} out of range")));
            }
            if u == v {
                return Err(Error::BadTournament(format!("loop at {u}")));
            }
            let k = t.pair_index(u.min(v), u.max(v));
            if seen[k] {
                return Err(Error::BadTournament(format!(
                    "pair {{{u}, {v}}} listed twice"
                )));
            }
            seen[k] = true;
            t.set_edge(u, v);
        }
        if let Some(k) = seen.iter().position(|s| !s) {
            let (i, j) = t.pair_at(k);
            return Err(Error::BadTournament(format!("pair {{{i}, {j}}} missing")));
        }
        Ok(t)
    }

    /// Builds a tournament from the raw pair bits. Bits past the last pair are
    /// ignored.
    pub(crate) fn from_bits(n: usize, mut bits: Vec<u64>) -> Self {
        let pairs = pair_count(n);
        bits.resize(pairs.div_ceil(64), 0);
        if !pairs.is_multiple_of(64) {
            if let Some(last) = bits.last_mut() {
                *last &= (1u64 << (pairs % 64)) - 1;
            }
        }
        Tournament { n, bits }
    }

    pub(crate) fn bits(&self) -> &[u64] {
        &self.bits
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Index of the pair `(i, j)`, `1 <= i < j <= n`, in lexicographic order.
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i < j && j <= self.n);
        (i - 1) * (2 * self.n - i) / 2 + (j - i - 1)
    }

    fn pair_at(&self, mut k: usize) -> (usize, usize) {
        for i in 1..self.n {
            let row = self.n - i;
            if k < row {
                return (i, i + 1 + k);
            }
            k -= row;
        }
        unreachable!("pair index out of range")
    }

    fn bit(&self, k: usize) -> bool {
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    /// Orients the pair `{u, v}` as `u -> v`.
    pub fn set_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u >= 1 && v >= 1 && u <= self.n && v <= self.n);
        let (i, j) = (u.min(v), u.max(v));
        let k = self.pair_index(i, j);
        if u < v {
            self.bits[k / 64] |= 1 << (k % 64);
        } else {
            self.bits[k / 64] &= !(1 << (k % 64));
        }
    }

    /// Whether `u -> v`. Both labels are 1-based; `u == v` is never an edge.
    pub fn beats(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        if u < v {
            self.bit(self.pair_index(u, v))
        } else {
            !self.bit(self.pair_index(v, u))
        }
    }

    /// All directed edges, one per pair, in lexicographic pair order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n).flat_map(move |i| {
            (i + 1..=self.n).map(move |j| if self.beats(i, j) { (i, j) } else { (j, i) })
        })
    }

    pub fn edge_count(&self) -> usize {
        pair_count(self.n)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        (1..=self.n).filter(|&u| self.beats(v, u)).count()
    }

    /// Subtournament on `subset`, relabeled `1..k` preserving relative order.
    pub fn induced(&self, subset: &[usize]) -> Result<Tournament> {
        for w in subset.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::BadSubset(format!(
                    "labels must be distinct and increasing, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
        if let Some(&v) = subset.iter().find(|&&v| v == 0 || v > self.n) {
            return Err(Error::BadSubset(format!(
                "label {v} out of range 1..={}",
                self.n
            )));
        }
        Ok(self.subtournament(subset))
    }

    /// Subtournament on the listed vertices in the listed order: the `k`-th
    /// listed vertex receives label `k`. No validation.
    pub(crate) fn subtournament(&self, vertices: &[usize]) -> Tournament {
        let k = vertices.len();
        let mut t = Tournament::all_descents(k);
        for a in 0..k {
            for b in a + 1..k {
                if self.beats(vertices[a], vertices[b]) {
                    t.set_edge(a + 1, b + 1);
                }
            }
        }
        t
    }

    /// Relabels vertex `v` as `perm[v - 1]`. `perm` must be a bijection on
    /// `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Tournament {
        assert_eq!(perm.len(), self.n);
        let mut t = Tournament::all_descents(self.n);
        for (u, v) in self.edges() {
            t.set_edge(perm[u - 1], perm[v - 1]);
        }
        t
    }

    /// Maps every edge `u -> v` to `(n+1-v) -> (n+1-u)`.
    pub fn mirror(&self) -> Tournament {
        let n = self.n;
        let mut t = Tournament::all_descents(n);
        for (u, v) in self.edges() {
            t.set_edge(n + 1 - v, n + 1 - u);
        }
        t
    }

    /// Lexicographic direct product. Vertex `(u1, u2)` gets label
    /// `(u1 - 1) * n2 + u2`; `(u1,u2) -> (v1,v2)` iff `u1 -> v1`, or `u1 == v1`
    /// and `u2 -> v2`.
    pub fn direct_product(&self, other: &Tournament) -> Tournament {
        let (n1, n2) = (self.n, other.n);
        let label = |u1: usize, u2: usize| (u1 - 1) * n2 + u2;
        let mut t = Tournament::all_descents(n1 * n2);
        for p in 1..=n1 * n2 {
            let (u1, u2) = ((p - 1) / n2 + 1, (p - 1) % n2 + 1);
            for q in p + 1..=n1 * n2 {
                let (v1, v2) = ((q - 1) / n2 + 1, (q - 1) % n2 + 1);
                let forward = if u1 == v1 {
                    other.beats(u2, v2)
                } else {
                    self.beats(u1, v1)
                };
                if forward {
                    t.set_edge(label(u1, u2), label(v1, v2));
                }
            }
        }
        t
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(n={}; ", self.n)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{u}->{v}")?;
        }
        write!(f, ")")
    }
}
