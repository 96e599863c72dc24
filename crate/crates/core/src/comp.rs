//! Compositions of `n`, the balanced/unbalanced split, and equalization.
//!
//! A composition `(a_1, ..., a_k)` encodes the reverse layered permutation
//! `I_{a_1} ⊖ ... ⊖ I_{a_k}`. It is *balanced* when some proper prefix sums
//! to exactly `n/2`; balanced compositions are displayed with a bar at that
//! point, e.g. `1,2|1,2`. Every other composition has a *dividing index*
//! where the prefix sums jump over `n/2`, and equalization inserts one new
//! part there to make it balanced without changing cyclicity.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordered tuple of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition("parts must be positive".into()));
        }
        if parts
            .iter()
            .try_fold(0u32, |acc, &a| acc.checked_add(a))
            .is_none()
        {
            return Err(Error::InvalidComposition("sum overflows u32".into()));
        }
        Ok(Composition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.is_empty() && !parts.contains(&0));
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The `n` this is a composition of.
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn odd_part_count(&self) -> usize {
        self.parts.iter().filter(|&&a| a % 2 == 1).count()
    }

    /// The number of parts before the bar, if some proper prefix sums to
    /// `n/2`.
    pub fn balanced_split(&self) -> Option<usize> {
        balanced_split(&self.parts)
    }

    pub fn is_balanced(&self) -> bool {
        self.balanced_split().is_some()
    }

    /// This composition with its bar, if it is balanced.
    pub fn as_balanced(&self) -> Option<BalancedComposition> {
        self.balanced_split().map(|split| BalancedComposition {
            parts: self.parts.clone(),
            split,
        })
    }

    /// The 1-based index `i` with `a_1 + ... + a_{i-1} < n/2 < a_1 + ... + a_i`.
    pub fn dividing_index(&self) -> Result<usize> {
        dividing_index(&self.parts).ok_or_else(|| Error::IsBalanced(self.to_string()))
    }

    /// Splits an unbalanced composition around its dividing part, which
    /// joins the left half when the parts before it weigh no more than the
    /// parts after it.
    pub fn nearly_equal_division(&self) -> Result<NearlyEqualDivision> {
        let i = self.dividing_index()?;
        let j = division_point(&self.parts, i);
        Ok(NearlyEqualDivision {
            left: self.parts[..j].to_vec(),
            right: self.parts[j..].to_vec(),
        })
    }

    /// `|sum(left) - sum(right)|` over the nearly-equal division.
    pub fn unequalness(&self) -> Result<u32> {
        Ok(self.nearly_equal_division()?.unequalness())
    }

    /// The balanced composition with the same cyclicity: balanced input is
    /// returned as is, otherwise the unequalness is inserted between the
    /// halves of the nearly-equal division, on the lighter side of the bar.
    pub fn equalize(&self) -> BalancedComposition {
        if let Some(b) = self.as_balanced() {
            return b;
        }
        let div = self
            .nearly_equal_division()
            .expect("unbalanced composition has a division");
        let (left_sum, right_sum) = (div.left_sum(), div.right_sum());
        let u = left_sum.abs_diff(right_sum);
        let j = div.left.len();
        let mut parts = div.left;
        parts.push(u);
        parts.extend(div.right);
        let split = if left_sum < right_sum { j + 1 } else { j };
        BalancedComposition { parts, split }
    }
}

pub(crate) fn balanced_split(parts: &[u32]) -> Option<usize> {
    let n: u64 = parts.iter().map(|&a| a as u64).sum();
    if n % 2 == 1 {
        return None;
    }
    let mut prefix = 0u64;
    for (j, &a) in parts[..parts.len() - 1].iter().enumerate() {
        prefix += a as u64;
        if 2 * prefix == n {
            return Some(j + 1);
        }
        if 2 * prefix > n {
            break;
        }
    }
    None
}

pub(crate) fn dividing_index(parts: &[u32]) -> Option<usize> {
    let n: u64 = parts.iter().map(|&a| a as u64).sum();
    let mut prefix = 0u64;
    for (idx, &a) in parts.iter().enumerate() {
        let next = prefix + a as u64;
        if 2 * prefix < n && n < 2 * next {
            return Some(idx + 1);
        }
        if 2 * next == n {
            return None;
        }
        prefix = next;
    }
    None
}

/// Number of parts in the left half of the nearly-equal division, given
/// the 1-based dividing index `i`.
pub(crate) fn division_point(parts: &[u32], i: usize) -> usize {
    let before: u64 = parts[..i - 1].iter().map(|&a| a as u64).sum();
    let after: u64 = parts[i..].iter().map(|&a| a as u64).sum();
    if before <= after {
        i
    } else {
        i - 1
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    for (i, a) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}

/// Parses `1,2,1,2` or `1,2|1,2`; returns the parts and the bar position.
fn parse_parts(s: &str) -> Result<(Vec<u32>, Option<usize>)> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let err = |reason: String| Error::Parse {
        what: "composition",
        input: s.to_string(),
        reason,
    };
    let mut parts = Vec::new();
    let mut bar = None;
    for (side_idx, side) in s.split('|').enumerate() {
        if side_idx > 1 {
            return Err(err("more than one '|'".into()));
        }
        if side_idx == 1 {
            bar = Some(parts.len());
        }
        for tok in side.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(err("empty part".into()));
            }
            let a: u32 = tok.parse().map_err(|e| err(format!("part {tok:?}: {e}")))?;
            if a == 0 {
                return Err(err("parts must be positive".into()));
            }
            parts.push(a);
        }
    }
    Ok((parts, bar))
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts an optional bar, which must sit at the balanced split.
    fn from_str(s: &str) -> Result<Self> {
        let (parts, bar) = parse_parts(s)?;
        let c = Composition::new(parts)?;
        if let Some(bar) = bar {
            if c.balanced_split() != Some(bar) {
                return Err(Error::Parse {
                    what: "composition",
                    input: s.to_string(),
                    reason: "'|' is not at a prefix summing to n/2".into(),
                });
            }
        }
        Ok(c)
    }
}

/// A composition of an even `n` with the bar after the prefix that sums to
/// `n/2`: `(a_1, ..., a_k | b_m, ..., b_1)`.
///
/// The part right after the bar is the innermost right layer `b_m`; the
/// last part is `b_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BalancedComposition {
    parts: Vec<u32>,
    split: usize,
}

impl BalancedComposition {
    pub fn new(parts: Vec<u32>, split: usize) -> Result<Self> {
        let c = Composition::new(parts)?;
        match c.balanced_split() {
            Some(s) if s == split => Ok(BalancedComposition {
                parts: c.parts,
                split,
            }),
            _ => Err(Error::InvalidComposition(format!(
                "{c} has no bar after part {split}"
            ))),
        }
    }

    /// Builds from the two sides in written order.
    pub fn from_sides(left: &[u32], right: &[u32]) -> Result<Self> {
        let mut parts = left.to_vec();
        parts.extend_from_slice(right);
        Self::new(parts, left.len())
    }

    pub(crate) fn from_sides_unchecked(left: &[u32], right: &[u32]) -> Self {
        let mut parts = left.to_vec();
        parts.extend_from_slice(right);
        let b = BalancedComposition {
            parts,
            split: left.len(),
        };
        debug_assert_eq!(balanced_split(&b.parts), Some(b.split));
        b
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts before the bar.
    pub fn split(&self) -> usize {
        self.split
    }

    /// `a_1, ..., a_k`.
    pub fn left(&self) -> &[u32] {
        &self.parts[..self.split]
    }

    /// `b_m, ..., b_1` in written order.
    pub fn right(&self) -> &[u32] {
        &self.parts[self.split..]
    }

    /// `a_k`.
    pub fn innermost_left(&self) -> u32 {
        self.parts[self.split - 1]
    }

    /// `b_m`.
    pub fn innermost_right(&self) -> u32 {
        self.parts[self.split]
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `n/2`, the sum of each side.
    pub fn half(&self) -> u32 {
        self.total() / 2
    }

    pub fn odd_part_count(&self) -> usize {
        self.parts.iter().filter(|&&a| a % 2 == 1).count()
    }

    /// Drops the bar.
    pub fn flatten(&self) -> Composition {
        Composition::from_parts_unchecked(self.parts.clone())
    }

    /// True for `(1|1)`.
    pub fn is_unit_pair(&self) -> bool {
        self.parts == [1, 1]
    }
}

impl fmt::Display for BalancedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, self.left())?;
        f.write_str("|")?;
        write_parts(f, self.right())
    }
}

impl FromStr for BalancedComposition {
    type Err = Error;

    /// The bar is optional; without it the split is computed.
    fn from_str(s: &str) -> Result<Self> {
        let c: Composition = s.parse()?;
        c.as_balanced().ok_or_else(|| Error::Parse {
            what: "balanced composition",
            input: s.to_string(),
            reason: "no prefix sums to n/2".into(),
        })
    }
}

/// The two halves of an unbalanced composition split at its dividing
/// index. `right` is empty only for the one-part composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearlyEqualDivision {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

impl NearlyEqualDivision {
    pub fn left_sum(&self) -> u32 {
        self.left.iter().sum()
    }

    pub fn right_sum(&self) -> u32 {
        self.right.iter().sum()
    }

    pub fn unequalness(&self) -> u32 {
        self.left_sum().abs_diff(self.right_sum())
    }
}

/// All compositions of `n` in lexicographic order of their parts,
/// starting from `(1, ..., 1)` and ending at `(n)`.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u32>>,
}

impl Compositions {
    pub fn new(n: u32) -> Self {
        Compositions {
            current: (n > 0).then(|| vec![1; n as usize]),
        }
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let cur = self.current.as_mut()?;
        let out = Composition::from_parts_unchecked(cur.clone());
        if cur.len() == 1 {
            self.current = None;
        } else {
            let last = cur.pop().unwrap();
            *cur.last_mut().unwrap() += 1;
            cur.extend(std::iter::repeat_n(1, last as usize - 1));
        }
        Some(out)
    }
}

/// Shorthand for [`Compositions::new`].
pub fn compositions(n: u32) -> Compositions {
    Compositions::new(n)
}
