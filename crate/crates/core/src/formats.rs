//! Text file formats.
//!
//! Coin files hold one coin per line as three whitespace-separated rationals
//! `a b x` (integers or `p/q`). Tournament files start with `n <count>`,
//! followed by one `i j` line per unordered pair meaning `i -> j`. In both,
//! blank lines and lines starting with `#` are ignored.

use crate::coin::{CoinSystem, CoinType};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};
use crate::realization::RegionPoint;
use crate::tournament::Tournament;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

pub fn parse_coins(text: &str) -> Result<CoinSystem> {
    let mut coins = Vec::new();
    for (line, content) in content_lines(text) {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(parse_err(
                line,
                format!("expected `a b x`, got {} fields", fields.len()),
            ));
        }
        let values: Vec<Rational> = fields
            .iter()
            .map(|f| parse_rational(f).map_err(|e| parse_err(line, e)))
            .collect::<Result<_>>()?;
        let [a, b, x]: [Rational; 3] = values.try_into().expect("three fields");
        let coin = CoinType::new(a, b, x).map_err(|e| parse_err(line, e.to_string()))?;
        coins.push(coin);
    }
    CoinSystem::new(coins)
}

pub fn write_coins(system: &CoinSystem) -> String {
    system
        .coins()
        .iter()
        .map(|c| format!("{} {} {}\n", c.a(), c.b(), c.x()))
        .collect()
}

pub fn parse_tournament(text: &str) -> Result<Tournament> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n <count>` header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| parse_err(line, format!("bad vertex count `{count}`")))?,
        _ => return Err(parse_err(line, "expected `n <count>` header")),
    };
    let mut edges = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(parse_err(line, "expected `i j`"));
        };
        let label = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(line, format!("bad vertex label `{s}`")))
        };
        edges.push((label(u)?, label(v)?));
    }
    Tournament::from_edges(n, &edges).map_err(|e| match e {
        Error::BadTournament(reason) => parse_err(0, reason),
        other => other,
    })
}

/// Canonical form: header, then pairs in lexicographic order.
pub fn write_tournament(t: &Tournament) -> String {
    let mut out = format!("n {}\n", t.n());
    for (u, v) in t.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One coordinate per line.
pub fn write_region_point(point: &RegionPoint) -> String {
    point.coords().iter().map(|c| format!("{c}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn parses_coin_file() {
        let s = parse_coins("# table row 00\n3 6 11/10\n\n2 6 3/2\n").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(
            s.coin(1),
            &CoinType::new(int(3), int(6), rat(11, 10)).unwrap()
        );
        assert_eq!(write_coins(&s), "3 6 11/10\n2 6 3/2\n");
    }

    #[test]
    fn coin_file_errors() {
        assert!(matches!(
            parse_coins("1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_coins("#c\n1 2 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_coins("1 2 1/0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_coins("2 1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_coins("0 1 1\n0 1 1\n"),
            Err(Error::DuplicateType {
                first: 1,
                second: 2
            })
        ));
    }

    #[test]
    fn parses_tournament_file() {
        let t = parse_tournament("n 3\n# cycle\n3 1\n1 2\n2 3\n").unwrap();
        assert!(t.beats(1, 2) && t.beats(2, 3) && t.beats(3, 1));
        assert_eq!(write_tournament(&t), "n 3\n1 2\n3 1\n2 3\n");
    }

    #[test]
    fn tournament_file_errors() {
        assert!(parse_tournament("").is_err());
        assert!(parse_tournament("m 3\n").is_err());
        assert!(parse_tournament("n x\n").is_err());
        assert!(parse_tournament("n 3\n1 2\n2 3\n").is_err());
        assert!(parse_tournament("n 2\n1 2 3\n").is_err());
        assert!(parse_tournament("n 2\n1 a\n").is_err());
        assert!(parse_tournament("n 2\n1 2\n2 1\n").is_err());
    }

    #[test]
    fn empty_tournament_file() {
        let t = parse_tournament("n 1\n").unwrap();
        assert_eq!(t.n(), 1);
        assert_eq!(write_tournament(&t), "n 1\n");
    }
}
