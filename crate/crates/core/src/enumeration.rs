//! Integer codes for labeled tournaments and brute-force counting of the
//! semiacyclic ones.
//!
//! Bit `k` of a code is the orientation of the `k`-th pair `(i, j)`, `i < j`,
//! in lexicographic pair order; a set bit means `i -> j`.

use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tournament::{pair_count, Tournament};

pub const DEFAULT_COUNT_CAP: usize = 7;

/// Largest vertex count whose codes fit in 64 bits.
pub const MAX_CODE_VERTICES: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TournamentCode {
    pub n: usize,
    pub code: u64,
}

/// Number of distinct codes on `n` vertices.
pub fn code_space(n: usize) -> Result<u64> {
    if n > MAX_CODE_VERTICES {
        return Err(Error::BudgetExceeded {
            what: "tournament code width in vertices",
            requested: n,
            cap: MAX_CODE_VERTICES,
        });
    }
    Ok(1u64 << pair_count(n))
}

pub fn encode(t: &Tournament) -> Result<TournamentCode> {
    code_space(t.n())?;
    Ok(TournamentCode {
        n: t.n(),
        code: t.bits().first().copied().unwrap_or(0),
    })
}

pub fn decode(c: TournamentCode) -> Result<Tournament> {
    if c.code >= code_space(c.n)? {
        return Err(Error::Range {
            n: c.n,
            code: c.code,
        });
    }
    Ok(Tournament::from_bits(c.n, vec![c.code]))
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::BudgetExceeded {
            what: "enumeration vertex count",
            requested: n,
            cap,
        });
    }
    code_space(n).map(|_| ())
}

fn count_range(n: usize, codes: Range<u64>) -> u64 {
    codes
        .filter(|&code| {
            Tournament::from_bits(n, vec![code])
                .is_semiacyclic()
                .is_yes()
        })
        .count() as u64
}

/// Number of semiacyclic tournaments on `1..=n`, counted sequentially.
pub fn count_semiacyclic(n: usize, cap: usize) -> Result<u64> {
    check_cap(n, cap)?;
    Ok(count_range(n, 0..code_space(n)?))
}

/// Same count, with the code space cut into `chunks` contiguous ranges that
/// are counted on the rayon pool and summed.
pub fn count_semiacyclic_parallel(n: usize, cap: usize, chunks: usize) -> Result<u64> {
    check_cap(n, cap)?;
    let total = code_space(n)?;
    let chunks = (chunks.max(1) as u64).min(total);
    let step = total.div_ceil(chunks);
    Ok((0..chunks)
        .into_par_iter()
        .map(|k| count_range(n, k * step..((k + 1) * step).min(total)))
        .sum())
}

/// Semiacyclic tournaments on `1..=n` in increasing code order.
pub fn enumerate_semiacyclic(n: usize, cap: usize) -> Result<impl Iterator<Item = Tournament>> {
    check_cap(n, cap)?;
    let total = code_space(n)?;
    Ok((0..total)
        .map(move |code| Tournament::from_bits(n, vec![code]))
        .filter(|t| t.is_semiacyclic().is_yes()))
}
