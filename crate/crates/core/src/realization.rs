//! Explicit coin systems for semiacyclic tournaments.
//!
//! A semiacyclic tournament `T` on `1..=n` corresponds to an open region of
//! the arrangement `x_i - x_j = 1` (`i < j`) in the zero-sum hyperplane: for
//! `i < j`, `i -> j` iff `x_i > x_j + 1`. A point of that region is found by
//! solving strict difference constraints, and then shifted into odds for
//! winner coins `(i, n+1, x_i + r)` or loser coins `(0, i, 1 / (r - x_i))`.

use crate::coin::{CoinSystem, CoinType};
use crate::cycles::Semiacyclicity;
use crate::error::{Error, Result};
use crate::rational::{int, one, zero, Rational};
use crate::tournament::Tournament;

/// Fixed shift offset `c > 1` used by both constructions.
pub const SHIFT_OFFSET: i64 = 2;

const MAX_HALVINGS: usize = 256;

/// A point `(x_1, ..., x_n)` with zero coordinate sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionPoint {
    coords: Vec<Rational>,
}

impl RegionPoint {
    /// Wraps coordinates; fails unless they sum to zero.
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let sum: Rational = coords.iter().sum();
        if sum != zero() {
            return Err(Error::BadTournament(format!(
                "region point coordinates sum to {sum}, not 0"
            )));
        }
        Ok(RegionPoint { coords })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Whether the point lies strictly inside the region of `t`.
    pub fn lies_in_region_of(&self, t: &Tournament) -> bool {
        if self.coords.len() != t.n() || self.coords.iter().sum::<Rational>() != zero() {
            return false;
        }
        for i in 1..=t.n() {
            for j in i + 1..=t.n() {
                let shifted = &self.coords[j - 1] + one();
                let x_i = &self.coords[i - 1];
                let ok = if t.beats(i, j) {
                    *x_i > shifted
                } else {
                    *x_i < shifted
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftParams {
    pub c: Rational,
    pub r: Rational,
}

/// Solves, for the given margin `eps > 0`,
///
/// * `x_i - x_j >= 1 + eps` for every ascent `i -> j`,
/// * `x_i - x_j <= 1 - eps` for every descent `j -> i`,
///
/// by Bellman-Ford from a virtual source joined to every vertex with weight 0.
/// Returns `None` when the constraint graph has a negative cycle.
pub fn difference_constraint_point(t: &Tournament, eps: &Rational) -> Option<Vec<Rational>> {
    let n = t.n();
    // A constraint x_u - x_v <= w is the edge v -> u of weight w.
    let mut arcs: Vec<(usize, usize, Rational)> = Vec::with_capacity(t.edge_count());
    for i in 0..n {
        for j in i + 1..n {
            if t.beats(i + 1, j + 1) {
                arcs.push((i, j, -(one() + eps)));
            } else {
                arcs.push((j, i, one() - eps));
            }
        }
    }
    let mut dist = vec![zero(); n];
    for round in 0..=n {
        let mut changed = false;
        for (from, to, w) in &arcs {
            let cand = &dist[*from] + w;
            if cand < dist[*to] {
                dist[*to] = cand;
                changed = true;
            }
        }
        if !changed {
            return Some(dist);
        }
        if round == n {
            return None;
        }
    }
    None
}

/// A point in the open region of the arrangement corresponding to `t`.
///
/// The margin starts at 1 and is halved until the constraints are feasible,
/// then the solution is translated to zero sum.
pub fn linial_region_point(t: &Tournament) -> Result<RegionPoint> {
    if let Semiacyclicity::No(witness) = t.is_semiacyclic() {
        return Err(Error::NotSemiacyclic(witness));
    }
    let n = t.n();
    let mut eps = one();
    for _ in 0..MAX_HALVINGS {
        if let Some(mut coords) = difference_constraint_point(t, &eps) {
            if n > 0 {
                let mean = coords.iter().sum::<Rational>() / int(n as i64);
                for c in &mut coords {
                    *c -= &mean;
                }
            }
            return RegionPoint::new(coords);
        }
        eps /= int(2);
    }
    unreachable!("semiacyclic tournaments have a nonempty open region")
}

/// Winner coins `(i, n+1, x_i + r)` with `r = max_i(c - x_i)`.
pub fn winners_from_point(point: &RegionPoint) -> (CoinSystem, ShiftParams) {
    let c = int(SHIFT_OFFSET);
    let n = point.len();
    let r = point
        .coords
        .iter()
        .map(|x| &c - x)
        .max()
        .unwrap_or_else(|| c.clone());
    let coins = point
        .coords
        .iter()
        .enumerate()
        .map(|(i, x)| {
            CoinType::new(int(i as i64 + 1), int(n as i64 + 1), x + &r)
                .expect("shifted odds are at least c > 1")
        })
        .collect();
    let system = CoinSystem::new(coins).expect("low faces are distinct");
    (system, ShiftParams { c, r })
}

/// Loser coins `(0, i, 1 / (r - x_i))` with `r = max_i(x_i + c)`.
pub fn losers_from_point(point: &RegionPoint) -> (CoinSystem, ShiftParams) {
    let c = int(SHIFT_OFFSET);
    let r = point
        .coords
        .iter()
        .map(|x| x + &c)
        .max()
        .unwrap_or_else(|| c.clone());
    let coins = point
        .coords
        .iter()
        .enumerate()
        .map(|(i, x)| {
            CoinType::new(zero(), int(i as i64 + 1), one() / (&r - x))
                .expect("reciprocal odds are at least c > 1")
        })
        .collect();
    let system = CoinSystem::new(coins).expect("high faces are distinct");
    (system, ShiftParams { c, r })
}

/// Winner coins sharing the high face `n + 1` whose dominance graph is `t`.
pub fn realize_winners(t: &Tournament) -> Result<CoinSystem> {
    linial_region_point(t).map(|p| winners_from_point(&p).0)
}

/// Loser coins sharing the low face `0` whose dominance graph is `t`.
pub fn realize_losers(t: &Tournament) -> Result<CoinSystem> {
    linial_region_point(t).map(|p| losers_from_point(&p).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coin::dominance_graph;
    use crate::rational::rat;

    fn t(n: usize, edges: &[(usize, usize)]) -> Tournament {
        Tournament::from_edges(n, edges).unwrap()
    }

    fn descending_cycle() -> Tournament {
        t(3, &[(2, 1), (3, 2), (1, 3)])
    }

    fn sample_point() -> RegionPoint {
        RegionPoint::new(vec![rat(4, 5), rat(-1, 10), rat(-7, 10)]).unwrap()
    }

    #[test]
    fn sample_point_is_in_region() {
        assert!(sample_point().lies_in_region_of(&descending_cycle()));
        assert!(!sample_point().lies_in_region_of(&Tournament::transitive(3)));
    }

    #[test]
    fn region_point_examples() {
        let tr = Tournament::transitive(3);
        let p = linial_region_point(&tr).unwrap();
        assert!(p.lies_in_region_of(&tr));
        let known = RegionPoint::new(vec![int(2), int(0), int(-2)]).unwrap();
        assert!(known.lies_in_region_of(&tr));

        let d = descending_cycle();
        assert!(linial_region_point(&d).unwrap().lies_in_region_of(&d));

        let single = Tournament::transitive(1);
        assert_eq!(linial_region_point(&single).unwrap().coords(), &[zero()]);
    }

    #[test]
    fn region_point_rejects_ascending_cycle() {
        let c = t(3, &[(1, 2), (2, 3), (3, 1)]);
        match linial_region_point(&c) {
            Err(Error::NotSemiacyclic(w)) => assert_eq!(w.vertices, vec![1, 2, 3]),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(realize_winners(&c), Err(Error::NotSemiacyclic(_))));
        assert!(matches!(realize_losers(&c), Err(Error::NotSemiacyclic(_))));
    }

    #[test]
    fn winners_from_sample_point() {
        let (s, shift) = winners_from_point(&sample_point());
        assert_eq!(shift.r, rat(27, 10));
        let expected = [(1, rat(7, 2)), (2, rat(13, 5)), (3, int(2))];
        for (i, x) in expected {
            assert_eq!(s.coin(i), &CoinType::new(int(i as i64), int(4), x).unwrap());
        }
        assert_eq!(dominance_graph(&s).unwrap(), descending_cycle());
    }

    #[test]
    fn losers_from_sample_point() {
        let (s, shift) = losers_from_point(&sample_point());
        assert_eq!(shift.r, rat(14, 5));
        let expected = [(1, rat(1, 2)), (2, rat(10, 29)), (3, rat(2, 7))];
        for (i, x) in expected {
            assert_eq!(s.coin(i), &CoinType::new(zero(), int(i as i64), x).unwrap());
        }
        assert_eq!(dominance_graph(&s).unwrap(), descending_cycle());
    }

    #[test]
    fn two_vertex_winners() {
        let tr = Tournament::transitive(2);
        let s = realize_winners(&tr).unwrap();
        assert!(s.coin(1).x() > &(s.coin(2).x() + one()));
        assert_eq!(dominance_graph(&s).unwrap(), tr);
    }

    #[test]
    fn single_loser() {
        let s = realize_losers(&Tournament::transitive(1)).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.coin(1).is_loser());
        assert_eq!(s.coin(1).a(), &zero());
        assert_eq!(s.coin(1).b(), &one());
    }

    #[test]
    fn infeasible_margin_detected() {
        // ascending cycle: no margin works
        let c = t(3, &[(1, 2), (2, 3), (3, 1)]);
        assert!(difference_constraint_point(&c, &rat(1, 1024)).is_none());
    }
}
