//! Two-sided biased coins and their dominance relation.
//!
//! A coin of type `(a, b, x)` shows `b` with probability `x / (1 + x)` and `a`
//! with probability `1 / (1 + x)`. Everything here is exact rational
//! arithmetic so that ties are detected exactly.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{int, is_positive, midpoint, one, zero, Rational};
use crate::tournament::Tournament;

/// Type of a coin: low face `a`, high face `b`, odds `x > 0`.
///
/// The derived ordering is the lexicographic order on `(a, b, x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoinType {
    a: Rational,
    b: Rational,
    x: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bias {
    /// `x > 1`: more likely to show the larger face.
    Winner,
    /// `x < 1`: more likely to show the smaller face.
    Loser,
    Fair,
}

impl CoinType {
    pub fn new(a: Rational, b: Rational, x: Rational) -> Result<Self> {
        if a > b {
            return Err(Error::InvalidCoin(format!(
                "low face {a} exceeds high face {b}"
            )));
        }
        if !is_positive(&x) {
            return Err(Error::InvalidCoin(format!("odds {x} must be positive")));
        }
        Ok(CoinType { a, b, x })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    /// Probability of showing the high face `b`.
    pub fn p_high(&self) -> Rational {
        &self.x / (one() + &self.x)
    }

    /// Probability of showing the low face `a`.
    pub fn p_low(&self) -> Rational {
        one() / (one() + &self.x)
    }

    pub fn bias(&self) -> Bias {
        match self.x.cmp(&one()) {
            Ordering::Greater => Bias::Winner,
            Ordering::Less => Bias::Loser,
            Ordering::Equal => Bias::Fair,
        }
    }

    pub fn is_winner(&self) -> bool {
        self.bias() == Bias::Winner
    }

    pub fn is_loser(&self) -> bool {
        self.bias() == Bias::Loser
    }

    pub fn is_fair(&self) -> bool {
        self.bias() == Bias::Fair
    }

    /// Both faces carry the same number.
    pub fn is_flat(&self) -> bool {
        self.a == self.b
    }

    fn faces(&self) -> [(&Rational, Rational); 2] {
        [(&self.a, self.p_low()), (&self.b, self.p_high())]
    }
}

impl fmt::Display for CoinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.x)
    }
}

/// An ordered list of coins with pairwise distinct types. Coin `i` (1-based)
/// is vertex `i` of the dominance graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinSystem {
    coins: Vec<CoinType>,
}

impl CoinSystem {
    pub fn new(coins: Vec<CoinType>) -> Result<Self> {
        for i in 0..coins.len() {
            for j in i + 1..coins.len() {
                if coins[i] == coins[j] {
                    return Err(Error::DuplicateType {
                        first: i + 1,
                        second: j + 1,
                    });
                }
            }
        }
        Ok(CoinSystem { coins })
    }

    pub fn coins(&self) -> &[CoinType] {
        &self.coins
    }

    pub fn len(&self) -> usize {
        self.coins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coins.is_empty()
    }

    /// 1-based access.
    pub fn coin(&self, i: usize) -> &CoinType {
        &self.coins[i - 1]
    }

    /// The same coins in increasing lexicographic order of their types.
    pub fn canonical(&self) -> CoinSystem {
        let mut coins = self.coins.clone();
        coins.sort();
        CoinSystem { coins }
    }

    /// Distinct face values appearing anywhere in the system.
    pub fn face_values(&self) -> Vec<Rational> {
        let mut values: Vec<Rational> = self
            .coins
            .iter()
            .flat_map(|c| [c.a.clone(), c.b.clone()])
            .collect();
        values.sort();
        values.dedup();
        values
    }
}

/// Exact outcome probabilities of tossing two coins together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceOutcome {
    pub p_first_wins: Rational,
    pub p_second_wins: Rational,
    pub p_draw: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    First,
    Second,
    Tie,
}

pub fn dominance_probabilities(first: &CoinType, second: &CoinType) -> DominanceOutcome {
    let mut out = DominanceOutcome {
        p_first_wins: zero(),
        p_second_wins: zero(),
        p_draw: zero(),
    };
    for (f, pf) in first.faces() {
        for (s, ps) in second.faces() {
            let p = &pf * &ps;
            match f.cmp(s) {
                Ordering::Greater => out.p_first_wins += p,
                Ordering::Less => out.p_second_wins += p,
                Ordering::Equal => out.p_draw += p,
            }
        }
    }
    out
}

pub fn dominates(first: &CoinType, second: &CoinType) -> Direction {
    let out = dominance_probabilities(first, second);
    match out.p_first_wins.cmp(&out.p_second_wins) {
        Ordering::Greater => Direction::First,
        Ordering::Less => Direction::Second,
        Ordering::Equal => Direction::Tie,
    }
}

/// The row of the face-value characterization table that applies to a
/// lexicographically ordered pair, and the value of that row's inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Case {
    /// 1..=6.
    pub line: u8,
    /// Whether the lexicographically smaller coin dominates.
    pub condition_holds: bool,
}

/// Classifies a normalized pair with `first < second` lexicographically.
///
/// | line | faces                   | first dominates iff         |
/// |------|-------------------------|-----------------------------|
/// | 1    | `a1 = a2, b1 = b2`      | `x1 > x2` (never here)      |
/// | 2    | `a1 = a2 < b1 < b2`     | `1/x2 > 1/x1 + 1`           |
/// | 3    | `a1 < a2 < b2 < b1`     | `x1 > 1`                    |
/// | 4    | `a1 < a2 < b1 = b2`     | `x1 > x2 + 1`               |
/// | 5    | `a1 < a2 < b1 < b2`     | `(1/x1 + 1)(x2 + 1) < 2`    |
/// | 6    | `a1 < b1 <= a2 < b2`    | never                       |
pub fn classify_pair(first: &CoinType, second: &CoinType) -> Result<Table1Case> {
    if first.is_flat() || second.is_flat() {
        return Err(Error::Unnormalized);
    }
    if first >= second {
        return Err(Error::Precedence);
    }
    let (a1, b1, x1) = (&first.a, &first.b, &first.x);
    let (a2, b2, x2) = (&second.a, &second.b, &second.x);
    let case = |line, condition_holds| Table1Case {
        line,
        condition_holds,
    };
    let recip = |x: &Rational| one() / x;
    Ok(if a1 == a2 && b1 == b2 {
        case(1, x1 > x2)
    } else if a1 == a2 {
        case(2, recip(x2) > recip(x1) + one())
    } else if b2 < b1 {
        case(3, *x1 > one())
    } else if b1 == b2 {
        case(4, *x1 > x2 + one())
    } else if b1 > a2 {
        case(5, (recip(x1) + one()) * (x2 + one()) < int(2))
    } else {
        case(6, false)
    })
}

/// Replaces every flat coin `(a, a, x)` with `(a', a, y)`, where `a'` is the
/// midpoint between `a` and the largest face value of the system below `a`
/// (or `a - 1` if there is none). Flat coins are processed in system order,
/// each against the current values.
///
/// `y` is 1 unless some coin `j` has high face `b_j = a`. Against such a
/// coin the replacement loses with probability `x_j / ((1 + x_j)(1 + y))` and
/// wins with probability `1 / (1 + x_j)`, so fair odds would flip the edge
/// once `x_j >= 2`; `y` is raised to the largest such `x_j`, which keeps the
/// original direction. Every pair that was not tied keeps its direction. Two
/// flat coins showing the same value tie, and they do not stay tied.
pub fn normalize_system(system: &CoinSystem) -> CoinSystem {
    let mut coins = system.coins.clone();
    for i in 0..coins.len() {
        if !coins[i].is_flat() {
            continue;
        }
        let a = coins[i].a.clone();
        let below = coins
            .iter()
            .flat_map(|c| [&c.a, &c.b])
            .filter(|v| **v < a)
            .max()
            .cloned();
        let lowered = match below {
            Some(m) => midpoint(&m, &a),
            None => &a - one(),
        };
        let odds = coins
            .iter()
            .enumerate()
            .filter(|(j, c)| *j != i && c.b == a)
            .map(|(_, c)| &c.x)
            .fold(one(), |acc, x| if *x > acc { x.clone() } else { acc });
        coins[i] = CoinType {
            a: lowered,
            b: a,
            x: odds,
        };
    }
    CoinSystem { coins }
}

/// Pairwise dominance directions; entry `[i][j]` describes coin `i+1` versus
/// coin `j+1`.
pub fn dominance_matrix(system: &CoinSystem) -> Vec<Vec<Direction>> {
    let n = system.len();
    let mut m = vec![vec![Direction::Tie; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let d = dominates(&system.coins[i], &system.coins[j]);
            m[i][j] = d;
            m[j][i] = match d {
                Direction::First => Direction::Second,
                Direction::Second => Direction::First,
                Direction::Tie => Direction::Tie,
            };
        }
    }
    m
}

/// Dominance graph: `i -> j` iff coin `i` dominates coin `j`. Fails with the
/// first tied pair in lexicographic pair order.
pub fn dominance_graph(system: &CoinSystem) -> Result<Tournament> {
    let n = system.len();
    let mut t = Tournament::all_descents(n);
    for i in 0..n {
        for j in i + 1..n {
            match dominates(&system.coins[i], &system.coins[j]) {
                Direction::First => t.set_edge(i + 1, j + 1),
                Direction::Second => t.set_edge(j + 1, i + 1),
                Direction::Tie => {
                    return Err(Error::Tie {
                        first: i + 1,
                        second: j + 1,
                    })
                }
            }
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn coin(a: i64, b: i64, x: Rational) -> CoinType {
        CoinType::new(int(a), int(b), x).unwrap()
    }

    #[test]
    fn rejects_invalid_types() {
        assert!(CoinType::new(int(2), int(1), int(1)).is_err());
        assert!(CoinType::new(int(0), int(1), int(0)).is_err());
        assert!(CoinType::new(int(0), int(1), int(-1)).is_err());
        assert!(CoinType::new(int(1), int(1), int(1)).is_ok());
    }

    #[test]
    fn bias_classification() {
        assert_eq!(coin(0, 1, int(2)).bias(), Bias::Winner);
        assert_eq!(coin(0, 1, rat(1, 2)).bias(), Bias::Loser);
        assert_eq!(coin(0, 1, int(1)).bias(), Bias::Fair);
    }

    #[test]
    fn probabilities_symmetric_pair() {
        let out = dominance_probabilities(&coin(0, 3, int(1)), &coin(1, 2, int(1)));
        assert_eq!(out.p_first_wins, rat(1, 2));
        assert_eq!(out.p_second_wins, rat(1, 2));
        assert_eq!(out.p_draw, zero());
    }

    #[test]
    fn probabilities_shared_high_face() {
        let out = dominance_probabilities(&coin(2, 6, rat(3, 2)), &coin(3, 6, rat(11, 10)));
        assert_eq!(out.p_first_wins, rat(2, 7));
        assert_eq!(out.p_second_wins, rat(2, 5));
        assert_eq!(out.p_draw, rat(11, 35));
    }

    #[test]
    fn probabilities_with_draw_at_shared_face() {
        let out = dominance_probabilities(&coin(0, 1, int(5)), &coin(1, 2, rat(1, 5)));
        assert_eq!(out.p_first_wins, zero());
        assert_eq!(out.p_second_wins, rat(11, 36));
        assert_eq!(out.p_draw, rat(25, 36));
    }

    #[test]
    fn dominates_examples() {
        assert_eq!(
            dominates(&coin(0, 10, int(2)), &coin(1, 2, int(1))),
            Direction::First
        );
        assert_eq!(
            dominates(&coin(0, 3, int(1)), &coin(1, 2, int(1))),
            Direction::Tie
        );
        assert_eq!(
            dominates(&coin(0, 1, int(1)), &coin(0, 2, int(1))),
            Direction::Second
        );
    }

    #[test]
    fn classify_examples() {
        let c = classify_pair(&coin(1, 5, int(2)), &coin(1, 7, rat(1, 4))).unwrap();
        assert_eq!((c.line, c.condition_holds), (2, true));
        let c = classify_pair(&coin(0, 10, int(2)), &coin(1, 2, int(1))).unwrap();
        assert_eq!((c.line, c.condition_holds), (3, true));
        let c = classify_pair(&coin(0, 1, int(5)), &coin(1, 2, rat(1, 5))).unwrap();
        assert_eq!((c.line, c.condition_holds), (6, false));
        let c = classify_pair(&coin(0, 1, int(2)), &coin(0, 1, int(3))).unwrap();
        assert_eq!((c.line, c.condition_holds), (1, false));
        let c = classify_pair(&coin(1, 6, int(3)), &coin(3, 6, rat(11, 10))).unwrap();
        assert_eq!((c.line, c.condition_holds), (4, true));
        let c = classify_pair(&coin(1, 6, int(5)), &coin(3, 9, rat(1, 3))).unwrap();
        assert_eq!(c.line, 5);
    }

    #[test]
    fn classify_errors() {
        assert_eq!(
            classify_pair(&coin(1, 2, int(1)), &coin(0, 3, int(1))),
            Err(Error::Precedence)
        );
        assert_eq!(
            classify_pair(&coin(1, 2, int(1)), &coin(1, 2, int(1))),
            Err(Error::Precedence)
        );
        assert_eq!(
            classify_pair(&coin(1, 1, int(1)), &coin(2, 3, int(1))),
            Err(Error::Unnormalized)
        );
    }

    #[test]
    fn system_rejects_duplicate_types() {
        let err = CoinSystem::new(vec![
            coin(0, 1, int(2)),
            coin(1, 2, int(1)),
            coin(0, 1, int(2)),
        ]);
        assert_eq!(
            err,
            Err(Error::DuplicateType {
                first: 1,
                second: 3
            })
        );
    }

    #[test]
    fn canonical_sorts_lexicographically() {
        let s = CoinSystem::new(vec![
            coin(1, 2, int(1)),
            coin(0, 5, int(3)),
            coin(0, 5, int(2)),
        ])
        .unwrap();
        let c = s.canonical();
        assert_eq!(
            c.coins(),
            &[coin(0, 5, int(2)), coin(0, 5, int(3)), coin(1, 2, int(1))]
        );
    }

    #[test]
    fn normalize_examples() {
        let s = CoinSystem::new(vec![coin(1, 4, int(1)), coin(2, 2, int(3))]).unwrap();
        let n = normalize_system(&s);
        assert_eq!(n.coin(1), &coin(1, 4, int(1)));
        assert_eq!(
            n.coin(2),
            &CoinType::new(rat(3, 2), int(2), int(1)).unwrap()
        );
        assert_eq!(dominance_matrix(&s), dominance_matrix(&n));

        let s = CoinSystem::new(vec![coin(0, 0, int(1))]).unwrap();
        assert_eq!(normalize_system(&s).coin(1), &coin(-1, 0, int(1)));

        let s = CoinSystem::new(vec![coin(0, 3, int(2)), coin(1, 2, rat(1, 3))]).unwrap();
        assert_eq!(normalize_system(&s), s);
    }

    #[test]
    fn normalize_keeps_edge_against_heavy_winner() {
        // fair odds here would turn 2 -> 1 into 1 -> 2
        let s = CoinSystem::new(vec![coin(3, 6, int(4)), coin(6, 6, int(1))]).unwrap();
        let n = normalize_system(&s);
        assert_eq!(
            n.coin(2),
            &CoinType::new(rat(9, 2), int(6), int(4)).unwrap()
        );
        assert_eq!(dominance_matrix(&s), dominance_matrix(&n));
        assert_eq!(dominates(n.coin(2), n.coin(1)), Direction::First);
    }

    #[test]
    fn normalize_handles_several_flat_coins() {
        let s = CoinSystem::new(vec![
            coin(3, 3, int(2)),
            coin(2, 2, int(1)),
            coin(1, 5, int(4)),
        ])
        .unwrap();
        let n = normalize_system(&s);
        assert!(n.coins().iter().all(|c| !c.is_flat()));
        assert_eq!(n.coin(1).a(), &rat(5, 2));
        assert_eq!(n.coin(2).a(), &rat(3, 2));
        assert_eq!(dominance_matrix(&s), dominance_matrix(&n));
        assert_eq!(normalize_system(&n), n);
    }

    #[test]
    fn graph_examples() {
        let s = CoinSystem::new(vec![coin(0, 3, int(1)), coin(1, 2, int(1))]).unwrap();
        assert_eq!(
            dominance_graph(&s),
            Err(Error::Tie {
                first: 1,
                second: 2
            })
        );
        let s = CoinSystem::new(vec![coin(0, 1, int(1)), coin(0, 2, int(1))]).unwrap();
        let t = dominance_graph(&s).unwrap();
        assert!(t.beats(2, 1));
    }
}
