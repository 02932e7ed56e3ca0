//! The concrete constructions: the 3-cycle and its direct powers, and the
//! nine-coin mixed winner/loser system whose dominance graph is `C3 x C3`.
//!
//! The 3-cycle uses vertices `1, 2, 3` with `1 -> 2 -> 3 -> 1` (the digits
//! `0, 1, 2` shifted by one). Vertices of `C3^k` follow the direct-product
//! flattening, so the tuple `(d_1, ..., d_k)` of 0-based digits has label
//! `1 + sum d_i 3^(k-i)`.

use std::fmt;
use std::time::Instant;

use num_traits::Signed;

use crate::coin::{dominance_graph, dominance_probabilities, CoinSystem, CoinType, Direction};
use crate::error::{Error, Result};
use crate::montecarlo::{simulate_system, SimConfig};
use crate::ordering::{
    find_semiacyclic_ordering, find_winner_loser_partition, validate_partition, Partition,
    SearchConfig,
};
use crate::rational::{int, one, rat, zero, Rational};
use crate::tournament::Tournament;

pub const MAX_C3_POWER: u32 = 4;

/// Row labels of the nine-coin table, in the order the coins are listed.
/// Coin `k` of [`paper_example_system`] carries label `TABLE2_LABELS[k - 1]`
/// and is vertex `k` of `C3 x C3`.
///
/// The table prints the first digit of the `4`-coins as `1` and of the
/// `5`-coins as `2`, while its dominance argument treats the `4`-coins as the
/// `2v` vertices. Listing the rows in table order gives the product labeling
/// directly: `00..02 -> 1..3`, the `5`-coins `-> 4..6`, the `4`-coins `-> 7..9`.
pub const TABLE2_LABELS: [&str; 9] = ["00", "01", "02", "20", "21", "22", "10", "11", "12"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// `0 < delta < 1/4`
    Delta,
    /// `0 < eps < 1/4`
    Eps,
    /// `r < 2 / (1 + delta) - 2 eps`
    R,
    /// `s > (2 + delta) / delta - eps`
    S,
    RAboveOne,
    SAboveOne,
    /// `r < 2 / (1 + 2 delta) - 2 eps`; see [`ExampleParams::sufficient_r_bound`].
    RSufficient,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constraint::Delta => "0<delta<1/4",
            Constraint::Eps => "0<eps<1/4",
            Constraint::R => "r<2/(1+delta)-2eps",
            Constraint::S => "s>(2+delta)/delta-eps",
            Constraint::RAboveOne => "r>1",
            Constraint::SAboveOne => "s>1",
            Constraint::RSufficient => "r<2/(1+2delta)-2eps",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleParams {
    pub delta: Rational,
    pub eps: Rational,
    pub r: Rational,
    pub s: Rational,
}

impl ExampleParams {
    /// `delta = 1/10, eps = 1/10, r = 8/5, s = 22`.
    pub fn reference() -> Self {
        ExampleParams {
            delta: rat(1, 10),
            eps: rat(1, 10),
            r: rat(8, 5),
            s: int(22),
        }
    }

    /// Upper bound on `r`.
    pub fn r_bound(delta: &Rational, eps: &Rational) -> Rational {
        int(2) / (one() + delta) - int(2) * eps
    }

    /// Upper bound on `r` that actually makes every `4`-coin dominate every
    /// coin with high face `6`. The binding pair is the largest winner odds
    /// `2 + 2 delta` against the smallest `4`-coin odds `1 / (r + 1 + 2 eps)`,
    /// which gives `(1 + 1/(2+2delta)) (1 + 1/(r+1+2eps)) > 2`, i.e. this bound.
    /// It is strictly below [`ExampleParams::r_bound`] for `delta > 0`.
    pub fn sufficient_r_bound(delta: &Rational, eps: &Rational) -> Rational {
        int(2) / (one() + int(2) * delta) - int(2) * eps
    }

    /// Lower bound on `s`. Requires `delta > 0`.
    pub fn s_bound(delta: &Rational, eps: &Rational) -> Rational {
        (int(2) + delta) / delta - eps
    }

    /// First violated constraint, checked in the order of [`Constraint`].
    pub fn check(&self) -> std::result::Result<(), Constraint> {
        let quarter = rat(1, 4);
        if !(self.delta > zero() && self.delta < quarter) {
            return Err(Constraint::Delta);
        }
        if !(self.eps > zero() && self.eps < quarter) {
            return Err(Constraint::Eps);
        }
        if self.r >= Self::r_bound(&self.delta, &self.eps) {
            return Err(Constraint::R);
        }
        if self.s <= Self::s_bound(&self.delta, &self.eps) {
            return Err(Constraint::S);
        }
        if self.r <= one() {
            return Err(Constraint::RAboveOne);
        }
        if self.s <= one() {
            return Err(Constraint::SAboveOne);
        }
        Ok(())
    }

    /// [`ExampleParams::check`] plus `r` below the sufficient bound.
    pub fn check_sufficient(&self) -> std::result::Result<(), Constraint> {
        self.check()?;
        if self.r >= Self::sufficient_r_bound(&self.delta, &self.eps) {
            return Err(Constraint::RSufficient);
        }
        Ok(())
    }
}

/// The nine coins of the mixed representation of `C3 x C3`, in table row
/// order (see [`TABLE2_LABELS`]).
pub fn paper_example_system(p: &ExampleParams) -> Result<CoinSystem> {
    p.check().map_err(Error::ConstraintViolated)?;
    let ExampleParams { delta, eps, r, s } = p;
    let half = rat(1, 2);
    let two_eps = int(2) * eps;
    let recip = |v: Rational| one() / v;
    let coin = |a: i64, b: i64, x: Rational| CoinType::new(int(a), int(b), x);
    CoinSystem::new(vec![
        coin(3, 6, one() + delta)?,
        coin(2, 6, rat(3, 2))?,
        coin(1, 6, int(2) + int(2) * delta)?,
        coin(5, 12, recip(s + one() + &two_eps))?,
        coin(5, 11, recip(s + &half))?,
        coin(5, 10, recip(s + eps))?,
        coin(4, 9, recip(r + one() + &two_eps))?,
        coin(4, 8, recip(r + &half))?,
        coin(4, 7, recip(r + eps))?,
    ])
}

/// Coin of [`paper_example_system`] carrying the given table label.
pub fn coin_for_label<'a>(system: &'a CoinSystem, label: &str) -> Option<&'a CoinType> {
    TABLE2_LABELS
        .iter()
        .position(|l| *l == label)
        .map(|k| system.coin(k + 1))
}

pub fn c3() -> Tournament {
    let mut t = Tournament::all_descents(3);
    t.set_edge(1, 2);
    t.set_edge(2, 3);
    t.set_edge(3, 1);
    t
}

/// `k`-fold direct product of `C3`.
pub fn c3_pow(k: u32) -> Result<Tournament> {
    if k == 0 || k > MAX_C3_POWER {
        return Err(Error::BudgetExceeded {
            what: "C3 power",
            requested: k as usize,
            cap: MAX_C3_POWER as usize,
        });
    }
    let base = c3();
    Ok((1..k).fold(base.clone(), |acc, _| acc.direct_product(&base)))
}

/// 0-based digits of vertex `label` of `C3^k`, most significant first.
pub fn c3_pow_digits(label: usize, k: u32) -> Vec<usize> {
    let mut rest = label - 1;
    let mut digits = vec![0; k as usize];
    for d in digits.iter_mut().rev() {
        *d = rest % 3;
        rest /= 3;
    }
    digits
}

/// The winner/loser split realized by the nine-coin system: `{1, 2, 3}` and
/// the other six vertices.
pub fn reference_partition() -> Partition {
    Partition {
        v1: vec![1, 2, 3],
        v2: (4..=9).collect(),
    }
}

/// Seed pinned for the Monte Carlo cross-check of the nine-coin system.
pub const MONTE_CARLO_SEED: u64 = 0x5EED_C0FF;
pub const MONTE_CARLO_TRIALS: u64 = 100_000;
const MONTE_CARLO_MARGIN: (i64, i64) = (1, 20);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

fn timed(name: &'static str, f: impl FnOnce() -> (bool, String)) -> FixtureCheck {
    let start = Instant::now();
    let (passed, detail) = f();
    FixtureCheck {
        name,
        passed,
        detail,
        millis: start.elapsed().as_millis(),
    }
}

/// `delta = 1/10, eps = 1/10, r = 7/5, s = 22`: the reference point with `r`
/// moved below the sufficient bound `22/15`.
pub fn corrected_params() -> ExampleParams {
    ExampleParams {
        r: rat(7, 5),
        ..ExampleParams::reference()
    }
}

/// Checks that the nine-coin system's dominance graph is `C3 x C3`.
pub fn check_example_graph(p: &ExampleParams) -> Result<bool> {
    let system = paper_example_system(p)?;
    Ok(dominance_graph(&system)? == c3_pow(2)?)
}

/// Pairs `i < j` of the nine-coin system whose dominance direction differs
/// from `C3 x C3` (ties included).
pub fn example_graph_mismatches(p: &ExampleParams) -> Result<Vec<(usize, usize)>> {
    let system = paper_example_system(p)?;
    let target = c3_pow(2)?;
    let mut bad = Vec::new();
    for i in 1..=9 {
        for j in i + 1..=9 {
            let want = if target.beats(i, j) {
                Direction::First
            } else {
                Direction::Second
            };
            if crate::coin::dominates(system.coin(i), system.coin(j)) != want {
                bad.push((i, j));
            }
        }
    }
    Ok(bad)
}

fn describe_mismatches(p: &ExampleParams) -> (bool, String) {
    let system = match paper_example_system(p) {
        Ok(s) => s,
        Err(e) => return (false, e.to_string()),
    };
    match example_graph_mismatches(p) {
        Ok(bad) if bad.is_empty() => (true, "all 36 edges match".into()),
        Ok(bad) => {
            let parts: Vec<String> = bad
                .iter()
                .map(|&(i, j)| {
                    let o = dominance_probabilities(system.coin(i), system.coin(j));
                    format!(
                        "{}={} vs {}={}: P(win)={} vs {}",
                        TABLE2_LABELS[i - 1],
                        system.coin(i),
                        TABLE2_LABELS[j - 1],
                        system.coin(j),
                        o.p_first_wins,
                        o.p_second_wins
                    )
                })
                .collect();
            (
                false,
                format!("{} edge(s) reversed: {}", bad.len(), parts.join("; ")),
            )
        }
        Err(e) => (false, e.to_string()),
    }
}

/// Pairs of the nine-coin system whose exact winning margin is at least
/// 1/20 and whose simulated majority disagrees with the exact direction.
pub fn monte_carlo_disagreements(cfg: &SimConfig) -> Result<Vec<(usize, usize)>> {
    let system = paper_example_system(&ExampleParams::reference())?;
    let sim = simulate_system(&system, cfg)?;
    let margin = rat(MONTE_CARLO_MARGIN.0, MONTE_CARLO_MARGIN.1);
    let mut bad = Vec::new();
    let mut checked = 0;
    for pair in &sim.pairs {
        let exact = dominance_probabilities(system.coin(pair.first), system.coin(pair.second));
        let gap = &exact.p_first_wins - &exact.p_second_wins;
        let exact_dir = if gap > zero() {
            Direction::First
        } else {
            Direction::Second
        };
        if gap.abs() < margin {
            continue;
        }
        checked += 1;
        if pair.outcome.direction() != exact_dir {
            bad.push((pair.first, pair.second));
        }
    }
    debug_assert!(checked > 0);
    Ok(bad)
}

/// Runs every fixture assertion.
pub fn verify_paper() -> Vec<FixtureCheck> {
    let reference = ExampleParams::reference();
    let search = SearchConfig::default();
    let mut checks = Vec::new();

    checks.push(timed(
        "nine-coin system at delta=1/10 eps=1/10 r=8/5 s=22 has dominance graph C3xC3",
        || describe_mismatches(&reference),
    ));

    checks.push(timed(
        "nine-coin system at delta=1/10 eps=1/10 r=7/5 s=22 has dominance graph C3xC3",
        || describe_mismatches(&corrected_params()),
    ));

    checks.push(timed(
        "only coins 00, 01, 02 are winners",
        || match paper_example_system(&reference) {
            Ok(s) => {
                let winners: Vec<usize> = (1..=9).filter(|&i| s.coin(i).is_winner()).collect();
                let losers = (4..=9).all(|i| s.coin(i).is_loser());
                (
                    winners == [1, 2, 3] && losers,
                    format!("winners {winners:?}"),
                )
            }
            Err(e) => (false, e.to_string()),
        },
    ));

    checks.push(timed(
        "reference parameters satisfy all constraints",
        || match reference.check() {
            Ok(()) => (true, "delta=1/10 eps=1/10 r=8/5 s=22".into()),
            Err(c) => (false, format!("violates {c}")),
        },
    ));

    checks.push(timed("each constraint rejects its own violation", || {
        let cases = [
            (
                ExampleParams {
                    delta: rat(3, 10),
                    ..reference.clone()
                },
                Constraint::Delta,
            ),
            (
                ExampleParams {
                    eps: rat(3, 10),
                    ..reference.clone()
                },
                Constraint::Eps,
            ),
            (
                ExampleParams {
                    r: int(2),
                    ..reference.clone()
                },
                Constraint::R,
            ),
            (
                ExampleParams {
                    s: int(20),
                    ..reference.clone()
                },
                Constraint::S,
            ),
            (
                ExampleParams {
                    r: one(),
                    ..reference.clone()
                },
                Constraint::RAboveOne,
            ),
        ];
        let failures: Vec<String> = cases
            .iter()
            .filter(|(p, c)| p.check() != Err(*c))
            .map(|(_, c)| c.to_string())
            .collect();
        (
            failures.is_empty(),
            if failures.is_empty() {
                "5 perturbations rejected".into()
            } else {
                format!("not rejected: {failures:?}")
            },
        )
    }));

    checks.push(timed(
        "C3xC3 has no semiacyclic numbering",
        || match c3_pow(2).and_then(|t| find_semiacyclic_ordering(&t, &search)) {
            Ok(None) => (true, "exhaustive search returned NONE".into()),
            Ok(Some(o)) => (false, format!("found numbering {:?}", o.as_slice())),
            Err(e) => (false, e.to_string()),
        },
    ));

    checks.push(timed("C3xC3 splits into two orderable sides", || {
        let t = match c3_pow(2) {
            Ok(t) => t,
            Err(e) => return (false, e.to_string()),
        };
        let reference_ok = validate_partition(&t, &reference_partition());
        match find_winner_loser_partition(&t, &search) {
            Ok(Some(p)) => (
                reference_ok && validate_partition(&t, &p),
                format!(
                    "found {:?} | {:?}; winner/loser split valid: {reference_ok}",
                    p.v1, p.v2
                ),
            ),
            Ok(None) => (false, "no partition".into()),
            Err(e) => (false, e.to_string()),
        }
    }));

    checks.push(timed(
        "C3^4 has 81 vertices and the product edge rule",
        || {
            let t = match c3_pow(4) {
                Ok(t) => t,
                Err(e) => return (false, e.to_string()),
            };
            let c = c3();
            let mut ok = t.n() == 81 && t.edges().count() == 81 * 80 / 2;
            for u in 1..=81 {
                for v in u + 1..=81 {
                    let (du, dv) = (c3_pow_digits(u, 4), c3_pow_digits(v, 4));
                    let k = (0..4).find(|&k| du[k] != dv[k]).expect("distinct labels");
                    ok &= t.beats(u, v) == c.beats(du[k] + 1, dv[k] + 1);
                }
            }
            (ok, format!("{} vertices, {} edges", t.n(), t.edge_count()))
        },
    ));

    checks.push(timed("simulated directions match exact ones", || {
        let cfg = SimConfig {
            trials: MONTE_CARLO_TRIALS,
            seed: MONTE_CARLO_SEED,
        };
        match monte_carlo_disagreements(&cfg) {
            Ok(bad) if bad.is_empty() => (true, format!("{} trials per pair", cfg.trials)),
            Ok(bad) => (false, format!("disagreeing pairs {bad:?}")),
            Err(e) => (false, e.to_string()),
        }
    }));

    checks
}
