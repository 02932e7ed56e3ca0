//! Ascending cycles and the semiacyclicity test.
//!
//! Edges are weighted `+1` for an ascent (`i -> j`, `i < j`) and `-1` for a
//! descent. A cycle is ascending iff its weight is nonnegative, so a
//! tournament is semiacyclic iff its maximum cycle mean is negative. The
//! maximum cycle mean is computed per strongly connected component with
//! Karp's walk-length recurrence, and a critical cycle is read back from the
//! optimal walk when the mean is nonnegative.

use std::fmt;

use num_rational::Rational64;

use crate::tournament::Tournament;

/// A directed simple cycle `(c_1, ..., c_m)` together with its ascent and
/// descent counts. Returned witnesses are always ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub asc: usize,
    pub desc: usize,
}

impl CycleWitness {
    /// Builds a witness from a vertex sequence, counting ascents and descents
    /// including the closing edge.
    pub fn from_cycle(vertices: Vec<usize>) -> Self {
        let m = vertices.len();
        let asc = (0..m)
            .filter(|&k| vertices[k] < vertices[(k + 1) % m])
            .count();
        CycleWitness {
            vertices,
            asc,
            desc: m - asc,
        }
    }

    /// Checks the witness against `t`: a simple cycle of length at least 3
    /// whose edges all exist, with correct counts and `asc >= desc`.
    pub fn validate(&self, t: &Tournament) -> bool {
        let m = self.vertices.len();
        if m < 3 || self.asc + self.desc != m || self.asc < self.desc {
            return false;
        }
        let mut seen = vec![false; t.n() + 1];
        for &v in &self.vertices {
            if v == 0 || v > t.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        let mut asc = 0;
        for k in 0..m {
            let (u, v) = (self.vertices[k], self.vertices[(k + 1) % m]);
            if !t.beats(u, v) {
                return false;
            }
            asc += usize::from(u < v);
        }
        asc == self.asc
    }
}

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.vertices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ") asc={} desc={}", self.asc, self.desc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Semiacyclicity {
    Yes,
    No(CycleWitness),
}

impl Semiacyclicity {
    pub fn is_yes(&self) -> bool {
        matches!(self, Semiacyclicity::Yes)
    }
}

/// Strongly connected components of a tournament, as lists of 1-based labels.
///
/// Sort vertices by out-degree, highest first. A prefix of size `k` dominates
/// its complement exactly when its score sum is `C(k,2) + k(n-k)`; the cut
/// points between such prefixes separate the components.
pub fn strong_components(t: &Tournament) -> Vec<Vec<usize>> {
    let n = t.n();
    let mut by_score: Vec<(usize, usize)> = (1..=n).map(|v| (t.out_degree(v), v)).collect();
    by_score.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut blocks = Vec::new();
    let mut current = Vec::new();
    let mut sum = 0;
    for (k, &(score, v)) in by_score.iter().enumerate() {
        sum += score;
        current.push(v);
        let size = k + 1;
        if sum == size * (size - 1) / 2 + size * (n - size) {
            current.sort_unstable();
            blocks.push(std::mem::take(&mut current));
        }
    }
    blocks
}

struct BlockMean {
    mean: Rational64,
    critical: Vec<usize>,
}

/// Karp's recurrence on one strongly connected block. Returns `None` for
/// blocks without cycles (single vertices).
fn block_max_mean(t: &Tournament, block: &[usize]) -> Option<BlockMean> {
    let m = block.len();
    if m < 3 {
        return None;
    }
    let weight = |a: usize, b: usize| if block[a] < block[b] { 1i64 } else { -1 };
    // best[k][v]: maximum weight of a walk with exactly k edges from block[0]
    // to block[v]; pred[k][v] is the previous vertex on one such walk.
    let mut best = vec![vec![None::<i64>; m]; m + 1];
    let mut pred = vec![vec![usize::MAX; m]; m + 1];
    best[0][0] = Some(0);
    for k in 1..=m {
        for v in 0..m {
            for u in 0..m {
                if u == v || !t.beats(block[u], block[v]) {
                    continue;
                }
                if let Some(d) = best[k - 1][u] {
                    let cand = d + weight(u, v);
                    if best[k][v].is_none_or(|cur| cand > cur) {
                        best[k][v] = Some(cand);
                        pred[k][v] = u;
                    }
                }
            }
        }
    }

    let mut answer: Option<(Rational64, usize)> = None;
    for v in 0..m {
        let Some(full) = best[m][v] else { continue };
        let worst = (0..m)
            .filter_map(|k| best[k][v].map(|d| Rational64::new(full - d, (m - k) as i64)))
            .min();
        if let Some(value) = worst {
            if answer.as_ref().is_none_or(|(a, _)| value > *a) {
                answer = Some((value, v));
            }
        }
    }
    let (mean, end) = answer?;

    // The optimal m-edge walk into `end` repeats a vertex; every cycle on it
    // has the maximum mean.
    let mut walk = vec![end];
    let mut v = end;
    for k in (1..=m).rev() {
        v = pred[k][v];
        walk.push(v);
    }
    walk.reverse();
    let mut last_seen = vec![usize::MAX; m];
    let mut cycle = None;
    for (pos, &v) in walk.iter().enumerate() {
        if last_seen[v] != usize::MAX {
            cycle = Some(walk[last_seen[v]..pos].to_vec());
            break;
        }
        last_seen[v] = pos;
    }
    let cycle = cycle.expect("walk with m edges on m vertices repeats a vertex");
    Some(BlockMean {
        mean,
        critical: cycle.into_iter().map(|v| block[v]).collect(),
    })
}

fn rotate_to_min(mut cycle: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(p, _)| p)
    {
        cycle.rotate_left(pos);
    }
    cycle
}

/// Maximum of `(asc(C) - desc(C)) / |C|` over all directed cycles, or `None`
/// when the tournament is acyclic.
pub fn max_cycle_mean(t: &Tournament) -> Option<Rational64> {
    strong_components(t)
        .iter()
        .filter_map(|b| block_max_mean(t, b))
        .map(|b| b.mean)
        .max()
}

/// Decides whether `t` contains no ascending cycle. On a negative answer the
/// witness is a critical cycle of some component with nonnegative mean.
pub fn is_semiacyclic(t: &Tournament) -> Semiacyclicity {
    for block in strong_components(t) {
        if let Some(b) = block_max_mean(t, &block) {
            if b.mean >= Rational64::from_integer(0) {
                let witness = CycleWitness::from_cycle(rotate_to_min(b.critical));
                debug_assert!(witness.validate(t), "bad witness {witness} for {t:?}");
                return Semiacyclicity::No(witness);
            }
        }
    }
    Semiacyclicity::Yes
}

impl Tournament {
    pub fn is_semiacyclic(&self) -> Semiacyclicity {
        is_semiacyclic(self)
    }

    pub fn max_cycle_mean(&self) -> Option<Rational64> {
        max_cycle_mean(self)
    }
}
