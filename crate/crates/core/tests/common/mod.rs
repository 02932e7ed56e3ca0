//! Test-only oracles, independent of the library's algorithms.
#![allow(dead_code)]

use coin_tournaments::rational::Rational;
use coin_tournaments::{CoinType, Tournament};
use num_traits::{One, Zero};

/// Every directed simple cycle, each listed once starting at its smallest
/// vertex.
pub fn simple_cycles(t: &Tournament) -> Vec<Vec<usize>> {
    fn dfs(
        t: &Tournament,
        start: usize,
        path: &mut Vec<usize>,
        on: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for v in start..=t.n() {
            if !t.beats(last, v) {
                continue;
            }
            if v == start {
                if path.len() >= 3 {
                    out.push(path.clone());
                }
                continue;
            }
            if on[v] {
                continue;
            }
            on[v] = true;
            path.push(v);
            dfs(t, start, path, on, out);
            path.pop();
            on[v] = false;
        }
    }
    let mut out = Vec::new();
    for start in 1..=t.n() {
        let mut on = vec![false; t.n() + 1];
        on[start] = true;
        dfs(t, start, &mut vec![start], &mut on, &mut out);
    }
    out
}

/// Semiacyclic by definition: no simple cycle with asc >= desc.
pub fn naive_semiacyclic(t: &Tournament) -> bool {
    simple_cycles(t).iter().all(|c| {
        let m = c.len();
        let asc = (0..m).filter(|&k| c[k] < c[(k + 1) % m]).count();
        asc < m - asc
    })
}

/// Maximum cycle mean by enumeration, as (numerator, denominator).
pub fn naive_max_cycle_mean(t: &Tournament) -> Option<(i64, i64)> {
    simple_cycles(t)
        .iter()
        .map(|c| {
            let m = c.len();
            let asc = (0..m).filter(|&k| c[k] < c[(k + 1) % m]).count() as i64;
            (2 * asc - m as i64, m as i64)
        })
        .max_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)))
}

/// Exact (first wins, second wins) by enumerating the four outcomes directly
/// from the odds.
pub fn brute_force_wins(c1: &CoinType, c2: &CoinType) -> (Rational, Rational) {
    let faces = |c: &CoinType| {
        let one = Rational::one();
        let p_low = &one / (&one + c.x());
        let p_high = &one - &p_low;
        [(c.a().clone(), p_low), (c.b().clone(), p_high)]
    };
    let mut first = Rational::zero();
    let mut second = Rational::zero();
    for (f, pf) in faces(c1) {
        for (s, ps) in faces(c2) {
            if f > s {
                first += &pf * &ps;
            } else if s > f {
                second += &pf * &ps;
            }
        }
    }
    (first, second)
}

pub fn tournament_from_code(n: usize, code: u64) -> Tournament {
    let mut t = Tournament::all_descents(n);
    let mut k = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if code >> k & 1 == 1 {
                t.set_edge(i, j);
            }
            k += 1;
        }
    }
    t
}
