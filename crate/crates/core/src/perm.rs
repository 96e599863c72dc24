//! Permutations of `[n]` in one-line notation.
//!
//! Positions and values are 1-based throughout: `p.get(i)` is π(i) for
//! `1 <= i <= n`.

use std::fmt;
use std::str::FromStr;

use crate::comp::Composition;
use crate::error::{Error, Result};

/// A bijection on `{1, ..., n}`, `n >= 1`, stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates that `values` is a permutation of `1..=values.len()`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation {
                len: 0,
                reason: "empty".into(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(Error::InvalidPermutation {
                    len: n,
                    reason: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::InvalidPermutation {
                    len: n,
                    reason: format!("value {v} repeated"),
                });
            }
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    /// The identity `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity needs n >= 1");
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// π(i), 1-based. Panics when `i` is outside `1..=n`.
    pub fn get(&self, i: usize) -> u32 {
        self.values[i - 1]
    }

    /// One-line notation.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { values: inv }
    }

    /// `i -> n + 1 - π(n + 1 - i)`, i.e. conjugation by the reversal
    /// `n ... 2 1`. Preserves cycle type.
    pub fn reverse_complement(&self) -> Permutation {
        let n = self.len() as u32;
        Permutation {
            values: self.values.iter().rev().map(|&v| n + 1 - v).collect(),
        }
    }

    /// The skew sum `self ⊖ other`: `self` shifted up by `other.len()`,
    /// followed by `other`.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        skew_sum(self, other)
    }

    /// The reverse layered permutation `I_{a_1} ⊖ ... ⊖ I_{a_k}`.
    pub fn from_composition(c: &Composition) -> Permutation {
        let n = c.total();
        let mut values = Vec::with_capacity(n as usize);
        let mut above = n;
        for &a in c.parts() {
            values.extend(above - a + 1..=above);
            above -= a;
        }
        Permutation { values }
    }

    /// Layer lengths of a reverse layered permutation.
    pub fn to_composition(&self) -> Result<Composition> {
        let mut parts = Vec::new();
        let mut run = 1u32;
        for w in self.values.windows(2) {
            if w[1] == w[0] + 1 {
                run += 1;
            } else {
                parts.push(run);
                run = 1;
            }
        }
        parts.push(run);
        let c = Composition::from_parts_unchecked(parts);
        if Permutation::from_composition(&c) == *self {
            Ok(c)
        } else {
            Err(Error::NotLayered(self.to_string()))
        }
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        // Starting each cycle at the smallest unvisited point yields the
        // canonical form directly.
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32 + 1);
                i = self.values[i] as usize - 1;
            }
            cycles.push(cycle);
        }
        CycleDecomposition { n, cycles }
    }

    /// True iff the permutation is a single n-cycle. The one-point
    /// permutation counts as cyclic.
    pub fn is_cyclic(&self) -> bool {
        let n = self.len();
        let mut i = 0usize;
        for step in 1..=n {
            i = self.values[i] as usize - 1;
            if i == 0 {
                return step == n;
            }
        }
        false
    }

    /// Pattern containment by a pruned scan over increasing index tuples.
    pub fn contains(&self, pattern: &Pattern) -> bool {
        let sigma = pattern.values();
        let k = sigma.len();
        if k > self.len() {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        self.extend_match(sigma, 0, &mut chosen)
    }

    fn extend_match(&self, sigma: &[u32], from: usize, chosen: &mut Vec<u32>) -> bool {
        let j = chosen.len();
        if j == sigma.len() {
            return true;
        }
        let remaining = sigma.len() - j;
        for idx in from..=self.len() - remaining {
            let v = self.values[idx];
            let consistent = chosen
                .iter()
                .zip(sigma)
                .all(|(&w, &s)| (w < v) == (s < sigma[j]));
            if consistent {
                chosen.push(v);
                if self.extend_match(sigma, idx + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    pub fn avoids(&self, pattern: &Pattern) -> bool {
        !self.contains(pattern)
    }

    /// `n` is even and π(i) > n/2 exactly when i <= n/2.
    pub fn is_balanced(&self) -> bool {
        let n = self.len();
        if n % 2 == 1 {
            return false;
        }
        let half = (n / 2) as u32;
        self.values
            .iter()
            .enumerate()
            .all(|(i, &v)| (v > half) == (i < half as usize))
    }
}

/// `pi ⊖ tau`. Associative.
pub fn skew_sum(pi: &Permutation, tau: &Permutation) -> Permutation {
    let shift = tau.len() as u32;
    let values = pi
        .values
        .iter()
        .map(|&v| v + shift)
        .chain(tau.values.iter().copied())
        .collect();
    Permutation { values }
}

impl fmt::Display for Permutation {
    /// Digits run together for `n <= 9`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.values.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |reason: String| Error::Parse {
            what: "permutation",
            input: s.to_string(),
            reason,
        };
        let values: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|e| parse_err(format!("{t:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .ok_or_else(|| parse_err(format!("unexpected character {ch:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

/// Disjoint cycles of a permutation in canonical form: each cycle starts
/// at its minimum, and cycles are ordered by minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<u32>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    /// Rebuilds the one-line notation from the cycles.
    pub fn to_permutation(&self) -> Permutation {
        let mut values = vec![0u32; self.n];
        for cycle in &self.cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                values[x as usize - 1] = y;
            }
        }
        Permutation::from_values_unchecked(values)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// A pattern is an ordinary permutation used as a containment template.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(p: Permutation) -> Self {
        Pattern(p)
    }

    pub fn values(&self) -> &[u32] {
        self.0.values()
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl From<Permutation> for Pattern {
    fn from(p: Permutation) -> Self {
        Pattern(p)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse().map(Pattern)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
