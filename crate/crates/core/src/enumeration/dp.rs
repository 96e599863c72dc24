//! Memoized counting of balanced cyclic compositions.
//!
//! Repeated reduction only ever touches the innermost layer on each side,
//! so a balanced composition can be viewed as two stacks whose tops are the
//! innermost layers. The subproblem is
//!
//! ```text
//! F(h, S) = #{ (A ++ S | B) cyclic : sum(A ++ S) = sum(B) = h }
//! ```
//!
//! where `S` is a fixed suffix of the left side (its last entry innermost),
//! and `A` and `B` range over all compositions of the remaining sums (`A`
//! may be empty when `sum(S) = h`). To expand `F(h, S)` pick the innermost
//! right layer `y` and reduce. When `y` is smaller than the top `x` of `S`,
//! the result is again of the form `F(h - y, S')`. When `y` is larger, the
//! new layers land on the right; reduction keeps running deterministically
//! while both sides still have fixed layers, and once one side runs out the
//! fixed layers that remain are moved to the left by the reversal symmetry
//! (`C` and its reversal are simultaneously cyclic, and reversal swaps the
//! two stacks).
//!
//! Unbalanced compositions are counted through equalization: every
//! balanced `(A, x | y, B)` with `x != y` is the equalization of exactly
//! one unbalanced composition, the one with the smaller of `x`, `y`
//! removed, whose sum is `2h - min(x, y)`. Equal innermost layers only
//! arise from `(1)`.
//!
//! Reduction preserves the number of odd parts and `(1|1)` has two, so any
//! state whose fixed layers already hold three odd parts counts zero.

use std::collections::HashMap;

use super::checked_sum;
use crate::error::{Error, Result};
use crate::reduction::reduce_pair;

/// Largest `n` whose parts fit the compact memo keys.
pub const DP_MAX_N: u32 = u8::MAX as u32;

enum Settled {
    Finished(bool),
    Open(u32, Vec<u8>),
}

/// Counting engine with a memo that persists across calls, so building a
/// table reuses every subproblem.
#[derive(Debug, Default)]
pub struct DpCounter {
    memo: HashMap<(u32, Vec<u8>), u64>,
}

impl DpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized subproblems so far.
    pub fn states(&self) -> usize {
        self.memo.len()
    }

    fn check_n(n: u32) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroN);
        }
        if n > DP_MAX_N {
            return Err(Error::MethodCap {
                method: "dp",
                n,
                cap: DP_MAX_N,
            });
        }
        Ok(())
    }

    /// `C^B_n(132,213)` for even `n`.
    pub fn balanced_cyclic(&mut self, n: u32) -> Result<u64> {
        Self::check_n(n)?;
        if n % 2 == 1 {
            return Err(Error::OddN(n));
        }
        let h = n / 2;
        let mut total = u64::from(h == 1);
        let mut one_side = 0u64;
        for y in 1..h {
            for d in 1..=h - y {
                let c = self.completions(h - y, &innermost_pair(y, d), n)?;
                one_side = checked_sum(n, one_side, c)?;
            }
        }
        total = checked_sum(n, total, checked_sum(n, one_side, one_side)?)?;
        Ok(total)
    }

    /// `C_n(132,213)`.
    pub fn cyclic(&mut self, n: u32) -> Result<u64> {
        Self::check_n(n)?;
        let mut total = if n.is_multiple_of(2) {
            self.balanced_cyclic(n)?
        } else {
            0
        };
        total = checked_sum(n, total, u64::from(n == 1))?;
        let mut one_side = 0u64;
        // y is the removed (smaller) innermost layer; the equalization has
        // half-sum (n + y) / 2, so y has the parity of n.
        let mut y = if n.is_multiple_of(2) { 2 } else { 1 };
        while y + 2 <= n {
            let h = (n - y) / 2;
            for d in 1..=h {
                let c = self.completions(h, &innermost_pair(y, d), n)?;
                one_side = checked_sum(n, one_side, c)?;
            }
            y += 2;
        }
        checked_sum(n, total, checked_sum(n, one_side, one_side)?)
    }

    /// `F(h, stack)`; `n` is only used to label overflow errors.
    fn completions(&mut self, h: u32, stack: &[u8], n: u32) -> Result<u64> {
        if stack.iter().filter(|&&a| a % 2 == 1).count() > 2 {
            return Ok(0);
        }
        let key = (h, stack.to_vec());
        if let Some(&hit) = self.memo.get(&key) {
            return Ok(hit);
        }
        let (&top, below) = stack.split_last().expect("fixed suffix is nonempty");
        let x = u32::from(top);
        let mut total = 0u64;
        for y in 1..=h {
            let c = if y == x {
                u64::from(h == 1)
            } else if y < x {
                let (u, v) = reduce_pair(x, y);
                let mut next = below.to_vec();
                push_pair(&mut next, u, v);
                self.completions(h - y, &next, n)?
            } else {
                let (u, v) = reduce_pair(x, y);
                let mut right = Vec::with_capacity(2);
                push_pair(&mut right, u, v);
                match settle(h - x, below.to_vec(), right) {
                    Settled::Finished(cyclic) => u64::from(cyclic),
                    Settled::Open(h2, fixed) => self.completions(h2, &fixed, n)?,
                }
            };
            total = checked_sum(n, total, c)?;
        }
        self.memo.insert(key, total);
        Ok(total)
    }
}

/// Pushes `u` (when nonzero) then `v`, so `v` ends up innermost.
fn push_pair(stack: &mut Vec<u8>, u: u32, v: u32) {
    if u > 0 {
        stack.push(u as u8);
    }
    stack.push(v as u8);
}

/// The fixed left suffix after reducing innermost layers `y + d` (left)
/// against `y` (right).
fn innermost_pair(y: u32, d: u32) -> Vec<u8> {
    let (u, v) = reduce_pair(y + d, y);
    let mut s = Vec::with_capacity(2);
    push_pair(&mut s, u, v);
    s
}

/// Reduces while both sides have fixed layers. Returns the verdict if the
/// innermost pair became equal, otherwise the remaining half-sum and the
/// surviving fixed stack, oriented as a left suffix.
fn settle(mut h: u32, mut left: Vec<u8>, mut right: Vec<u8>) -> Settled {
    loop {
        let (x, y) = match (left.last(), right.last()) {
            (Some(&x), Some(&y)) => (u32::from(x), u32::from(y)),
            (None, _) => return Settled::Open(h, right),
            (_, None) => return Settled::Open(h, left),
        };
        if x == y {
            return Settled::Finished(h == 1);
        }
        left.pop();
        right.pop();
        h -= x.min(y);
        let (u, v) = reduce_pair(x, y);
        push_pair(if x > y { &mut left } else { &mut right }, u, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::compositions;
    use crate::perm::Permutation;

    /// Brute-force F(h, S) over explicit permutations.
    fn oracle_completions(h: u32, suffix: &[u32]) -> u64 {
        let fixed: u32 = suffix.iter().sum();
        let lefts: Vec<Vec<u32>> = if fixed == h {
            vec![suffix.to_vec()]
        } else {
            compositions(h - fixed)
                .map(|a| {
                    let mut v = a.into_parts();
                    v.extend_from_slice(suffix);
                    v
                })
                .collect()
        };
        let mut count = 0;
        for left in &lefts {
            for b in compositions(h) {
                let mut parts = left.clone();
                parts.extend_from_slice(b.parts());
                let c = crate::comp::Composition::new(parts).unwrap();
                if Permutation::from_composition(&c).is_cyclic() {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn completions_match_oracle() {
        let mut dp = DpCounter::new();
        for h in 1..=7u32 {
            for s in [
                vec![1u32],
                vec![2],
                vec![1, 2],
                vec![3, 1],
                vec![2, 1, 2],
                vec![h],
            ] {
                if s.iter().sum::<u32>() > h {
                    continue;
                }
                let s8: Vec<u8> = s.iter().map(|&a| a as u8).collect();
                assert_eq!(
                    dp.completions(h, &s8, 2 * h).unwrap(),
                    oracle_completions(h, &s),
                    "h={h} S={s:?}"
                );
            }
        }
    }

    #[test]
    fn small_values() {
        let mut dp = DpCounter::new();
        let c: Vec<u64> = (1..=10).map(|n| dp.cyclic(n).unwrap()).collect();
        assert_eq!(c, [1, 1, 2, 4, 6, 12, 14, 32, 30, 76]);
        let b: Vec<u64> = (1..=5)
            .map(|h| dp.balanced_cyclic(2 * h).unwrap())
            .collect();
        assert_eq!(b, [1, 2, 6, 14, 34]);
        assert!(dp.states() > 0);
    }

    #[test]
    fn rejects_bad_n() {
        let mut dp = DpCounter::new();
        assert_eq!(dp.balanced_cyclic(3), Err(Error::OddN(3)));
        assert_eq!(dp.cyclic(0), Err(Error::ZeroN));
        assert!(matches!(dp.cyclic(300), Err(Error::MethodCap { .. })));
    }
}
