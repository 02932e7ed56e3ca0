//! Searching for vertex numberings that make a tournament semiacyclic, and
//! for winner/loser vertex partitions.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

pub const DEFAULT_ORDERING_CAP: usize = 10;
pub const DEFAULT_PARTITION_CAP: usize = 12;

/// A relabeling of `1..=n`: original vertex `v` receives label `perm[v - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    perm: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for &p in &perm {
            if p == 0 || p > n || seen[p] {
                return Err(Error::BadSubset(format!(
                    "{perm:?} is not a permutation of 1..={n}"
                )));
            }
            seen[p] = true;
        }
        Ok(VertexOrdering { perm })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            perm: (1..=n).collect(),
        }
    }

    /// New label of original vertex `v`.
    pub fn label(&self, v: usize) -> usize {
        self.perm[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, t: &Tournament) -> Tournament {
        t.relabel(&self.perm)
    }
}

/// A disjoint split of the vertex set into two sides, each of which admits a
/// semiacyclic numbering. Existence of such a split is necessary for a
/// tournament to be the dominance graph of some coin system (winner and fair
/// coins on one side, loser coins on the other). It is not known to be
/// sufficient, so a returned partition is evidence only; `None` from the
/// search certifies that no coin system has this dominance graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub ordering_cap: usize,
    pub partition_cap: usize,
    /// Scan bipartitions on the rayon pool. The result is the same either way.
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            ordering_cap: DEFAULT_ORDERING_CAP,
            partition_cap: DEFAULT_PARTITION_CAP,
            parallel: true,
        }
    }
}

/// Depth-first label assignment. Labels `1, 2, ...` are handed out in turn,
/// trying unused vertices in increasing order; a prefix is abandoned as soon
/// as the tournament it induces (in label order) has an ascending cycle.
fn search_ordering(t: &Tournament) -> Option<VertexOrdering> {
    fn extend(t: &Tournament, assigned: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if assigned.len() == t.n() {
            return true;
        }
        for v in 1..=t.n() {
            if used[v] {
                continue;
            }
            assigned.push(v);
            if t.subtournament(assigned).is_semiacyclic().is_yes() {
                used[v] = true;
                if extend(t, assigned, used) {
                    return true;
                }
                used[v] = false;
            }
            assigned.pop();
        }
        false
    }

    let mut assigned = Vec::with_capacity(t.n());
    let mut used = vec![false; t.n() + 1];
    if !extend(t, &mut assigned, &mut used) {
        return None;
    }
    let mut perm = vec![0; t.n()];
    for (pos, &v) in assigned.iter().enumerate() {
        perm[v - 1] = pos + 1;
    }
    Some(VertexOrdering { perm })
}

/// Finds a numbering under which `t` is semiacyclic, or `None` if none exists.
pub fn find_semiacyclic_ordering(
    t: &Tournament,
    config: &SearchConfig,
) -> Result<Option<VertexOrdering>> {
    if t.n() > config.ordering_cap {
        return Err(Error::BudgetExceeded {
            what: "ordering search on vertex count",
            requested: t.n(),
            cap: config.ordering_cap,
        });
    }
    Ok(search_ordering(t))
}

fn split(n: usize, index: u64) -> Partition {
    // vertex 1 always on side v1; bit k places vertex k + 2 on side v2
    let mut p = Partition {
        v1: vec![1],
        v2: Vec::new(),
    };
    for v in 2..=n {
        if index >> (v - 2) & 1 == 1 {
            p.v2.push(v);
        } else {
            p.v1.push(v);
        }
    }
    p
}

fn side_orderable(t: &Tournament, side: &[usize]) -> bool {
    search_ordering(&t.subtournament(side)).is_some()
}

/// Checks that `p` splits the vertices of `t` disjointly and that each side
/// admits a semiacyclic numbering.
pub fn validate_partition(t: &Tournament, p: &Partition) -> bool {
    let mut side = vec![0u8; t.n() + 1];
    for (mark, vs) in [(1, &p.v1), (2, &p.v2)] {
        for &v in vs.iter() {
            if v == 0 || v > t.n() || side[v] != 0 {
                return false;
            }
            side[v] = mark;
        }
    }
    if side[1..].contains(&0) {
        return false;
    }
    let sorted = |vs: &[usize]| {
        let mut vs = vs.to_vec();
        vs.sort_unstable();
        vs
    };
    side_orderable(t, &sorted(&p.v1)) && side_orderable(t, &sorted(&p.v2))
}

/// Scans the `2^(n-1)` bipartitions with vertex 1 on side `v1`, in increasing
/// index order, and returns the first one whose sides both admit semiacyclic
/// numberings.
pub fn find_winner_loser_partition(
    t: &Tournament,
    config: &SearchConfig,
) -> Result<Option<Partition>> {
    let n = t.n();
    if n > config.partition_cap {
        return Err(Error::BudgetExceeded {
            what: "partition search on vertex count",
            requested: n,
            cap: config.partition_cap,
        });
    }
    if n == 0 {
        return Ok(Some(Partition {
            v1: Vec::new(),
            v2: Vec::new(),
        }));
    }
    let total = 1u64 << (n - 1);
    let works = |index: &u64| {
        let p = split(n, *index);
        side_orderable(t, &p.v1) && side_orderable(t, &p.v2)
    };
    let found = if config.parallel {
        (0..total).into_par_iter().find_first(works)
    } else {
        (0..total).find(works)
    };
    Ok(found.map(|index| split(n, index)))
}
