use std::fmt;
use std::str::FromStr;

use super::FiniteSpace;
use crate::error::{Error, Result};
use crate::eval::valuation_count;
use crate::worlds::WorldSet;

/// Default cap on colourings or subsets visited by the searches below.
pub const DEFAULT_SEARCH_CAP: u128 = 1 << 24;

/// Whether `S` splits into `n` pairwise disjoint subsets, each dense in the
/// subspace `S` (`S ⊆ cl Y`).
pub fn is_n_resolvable(s: &FiniteSpace, subspace: WorldSet, n: usize, cap: u128) -> Result<bool> {
    if subspace.is_empty() {
        return Err(Error::EmptySubspace);
    }
    subspace.check_within(s.points())?;
    let size = subspace.len();
    let required = (n as u128 + 1)
        .checked_pow(size as u32)
        .unwrap_or(u128::MAX);
    if required > cap {
        return Err(Error::BudgetExceeded {
            what: "resolvability colourings",
            required,
            cap,
        });
    }
    if n <= 1 {
        return Ok(true);
    }
    let points: Vec<usize> = subspace.to_vec();
    // A colour class is dense in S iff it meets every U_x ∩ S, x ∈ S.
    let hoods: Vec<WorldSet> = points
        .iter()
        .map(|&x| s.neighbourhood(x).intersection(subspace))
        .collect();
    if hoods.iter().any(|h| h.len() < n) {
        return Ok(false);
    }
    // Constraint x becomes checkable once the last point of U_x ∩ S is coloured.
    let position = |p: usize| points.iter().position(|&q| q == p).expect("point of S");
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for (i, h) in hoods.iter().enumerate() {
        let last = h
            .iter()
            .map(position)
            .max()
            .expect("x lies in its own neighbourhood");
        due[last].push(i);
    }
    let mut colour = vec![usize::MAX; points.len()];
    Ok(colour_from(0, 0, n, &points, &hoods, &due, &mut colour))
}

// Colours n stands for "unused"; classes are opened in order to skip
// permutations of colour names.
fn colour_from(
    i: usize,
    opened: usize,
    n: usize,
    points: &[usize],
    hoods: &[WorldSet],
    due: &[Vec<usize>],
    colour: &mut Vec<usize>,
) -> bool {
    if i == points.len() {
        return opened == n;
    }
    let choices: Vec<usize> = (0..(opened + 1).min(n)).chain(std::iter::once(n)).collect();
    for c in choices {
        colour[i] = c;
        let ok = due[i].iter().all(|&x| {
            let mut seen = vec![false; n];
            for p in hoods[x] {
                let k = colour[points.iter().position(|&q| q == p).unwrap()];
                if k < n {
                    seen[k] = true;
                }
            }
            seen.iter().all(|&b| b)
        });
        if ok
            && colour_from(
                i + 1,
                opened.max(if c < n { c + 1 } else { 0 }),
                n,
                points,
                hoods,
                due,
                colour,
            )
        {
            return true;
        }
    }
    colour[i] = usize::MAX;
    false
}

/// No non-empty subspace is `n`-resolvable.
pub fn is_hered_n_irresolvable(s: &FiniteSpace, n: usize, cap: u128) -> Result<bool> {
    let subsets = valuation_count(s.points(), 1);
    if subsets > cap {
        return Err(Error::BudgetExceeded {
            what: "subspaces",
            required: subsets,
            cap,
        });
    }
    for bits in 1..(1u64 << s.points()) {
        if is_n_resolvable(s, WorldSet::from_bits(bits), n, cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Separation {
    T0,
    TD,
    T1,
    Scattered,
    WeaklyScattered,
}

impl Separation {
    pub const ALL: [Separation; 5] = [
        Separation::T0,
        Separation::TD,
        Separation::T1,
        Separation::Scattered,
        Separation::WeaklyScattered,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Separation::T0 => "T0",
            Separation::TD => "TD",
            Separation::T1 => "T1",
            Separation::Scattered => "scattered",
            Separation::WeaklyScattered => "weaklyScattered",
        }
    }
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Separation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['_', '-'], "");
        Separation::ALL
            .into_iter()
            .find(|p| p.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::Precondition(format!("unknown separation property `{s}`")))
    }
}

pub fn separation(s: &FiniteSpace, prop: Separation) -> bool {
    let n = s.points();
    let single_derived = |x: usize| s.derived_set(WorldSet::singleton(x));
    match prop {
        Separation::T0 => (0..n).all(|x| (0..x).all(|y| s.neighbourhood(x) != s.neighbourhood(y))),
        Separation::TD => (0..n).all(|x| s.is_closed(single_derived(x))),
        Separation::T1 => (0..n).all(|x| single_derived(x).is_empty()),
        Separation::Scattered => (1..1u64 << n).map(WorldSet::from_bits).all(|sub| {
            sub.iter()
                .any(|x| s.neighbourhood(x).intersection(sub) == WorldSet::singleton(x))
        }),
        Separation::WeaklyScattered => s.closure(s.isolated_points()) == s.universe(),
    }
}
