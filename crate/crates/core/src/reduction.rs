//! Deciding cyclicity of a composition without building its permutation.
//!
//! For a balanced composition `(a_1, ..., a_k | b_m, ..., b_1)` with
//! `a_k != b_m`, let `D = |a_k - b_m|`, `u = a_k mod D` and `v = D - u`.
//! Reduction replaces the two innermost opposing layers by the consecutive
//! layers `u, v` on the side of the larger one (dropping `u` when it is 0):
//!
//! ```text
//! a_k > b_m:  (a_1, ..., a_{k-1}, u, v | b_{m-1}, ..., b_1)
//! a_k < b_m:  (a_1, ..., a_{k-1} | v, u, b_{m-1}, ..., b_1)
//! ```
//!
//! Cyclicity is invariant under reduction, and each step shrinks the sum
//! by `2 * min(a_k, b_m)`. Repeating until the innermost pair is equal
//! leaves either `(1|1)` (cyclic) or a composition containing the 2-cycle
//! formed by two equal innermost layers (not cyclic). Unbalanced
//! compositions are equalized first.

use std::fmt;

use crate::comp::{
    balanced_split, dividing_index, division_point, BalancedComposition, Composition,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Cyclic,
    NotCyclic,
}

impl Verdict {
    pub fn is_cyclic(self) -> bool {
        self == Verdict::Cyclic
    }

    fn from_bool(cyclic: bool) -> Self {
        if cyclic {
            Verdict::Cyclic
        } else {
            Verdict::NotCyclic
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Cyclic => "CYCLIC",
            Verdict::NotCyclic => "NOT-CYCLIC",
        })
    }
}

/// Which innermost layer was larger, i.e. which side received `u, v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `(u, v)` for innermost layers `x != y`. `u` may be 0.
#[inline]
pub(crate) fn reduce_pair(x: u32, y: u32) -> (u32, u32) {
    let d = x.abs_diff(y);
    let u = x % d;
    (u, d - u)
}

/// One application of the reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub before: BalancedComposition,
    pub after: BalancedComposition,
    pub a_k: u32,
    pub b_m: u32,
    pub d: u32,
    pub u: u32,
    pub v: u32,
    pub side: Side,
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} → {} [a_k={}, b_m={}, u={}, v={}]",
            self.before, self.after, self.a_k, self.b_m, self.u, self.v
        )
    }
}

/// Applies one reduction step. Fails when the innermost layers are equal.
pub fn reduce(c: &BalancedComposition) -> Result<ReductionStep> {
    let (a_k, b_m) = (c.innermost_left(), c.innermost_right());
    if a_k == b_m {
        return Err(Error::InnermostEqual(a_k));
    }
    let (u, v) = reduce_pair(a_k, b_m);
    let outer_left = &c.left()[..c.split() - 1];
    let outer_right = &c.right()[1..];
    let mut inserted = Vec::with_capacity(2);
    let (after, side) = if a_k > b_m {
        let mut left = outer_left.to_vec();
        if u > 0 {
            left.push(u);
        }
        left.push(v);
        (
            BalancedComposition::from_sides_unchecked(&left, outer_right),
            Side::Left,
        )
    } else {
        inserted.push(v);
        if u > 0 {
            inserted.push(u);
        }
        inserted.extend_from_slice(outer_right);
        (
            BalancedComposition::from_sides_unchecked(outer_left, &inserted),
            Side::Right,
        )
    };
    Ok(ReductionStep {
        before: c.clone(),
        after,
        a_k,
        b_m,
        d: u + v,
        u,
        v,
        side,
    })
}

/// The full run of repeated reduction from a balanced composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub start: BalancedComposition,
    pub steps: Vec<ReductionStep>,
    /// Innermost layers are equal here.
    pub terminal: BalancedComposition,
    pub verdict: Verdict,
}

impl ReductionTrace {
    /// One line per step, then the terminal line.
    pub fn lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        out.push(format!(
            "terminal {} verdict {}",
            self.terminal, self.verdict
        ));
        out
    }
}

/// Reduces until the innermost pair is equal; cyclic iff that is `(1|1)`.
pub fn repeated_reduction(c: &BalancedComposition) -> ReductionTrace {
    let mut steps = Vec::new();
    let mut current = c.clone();
    while current.innermost_left() != current.innermost_right() {
        let step = reduce(&current).expect("innermost pair is unequal");
        current = step.after.clone();
        steps.push(step);
    }
    let verdict = Verdict::from_bool(current.is_unit_pair());
    ReductionTrace {
        start: c.clone(),
        steps,
        terminal: current,
        verdict,
    }
}

/// Result of deciding a composition, with the full explanation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicityReport {
    pub input: Composition,
    /// `None` when the input was already balanced.
    pub unequalness: Option<u32>,
    pub equalized: BalancedComposition,
    pub trace: ReductionTrace,
}

impl CyclicityReport {
    pub fn verdict(&self) -> Verdict {
        self.trace.verdict
    }

    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.trace.steps.len() + 2);
        if let Some(u) = self.unequalness {
            out.push(format!(
                "equalize {} → {} [U={}]",
                self.input, self.equalized, u
            ));
        }
        out.extend(self.trace.lines());
        out
    }
}

/// Equalizes, then runs repeated reduction, recording every step.
pub fn is_cyclic(c: &Composition) -> CyclicityReport {
    let unequalness = if c.is_balanced() {
        None
    } else {
        Some(c.unequalness().expect("unbalanced"))
    };
    let equalized = c.equalize();
    let trace = repeated_reduction(&equalized);
    CyclicityReport {
        input: c.clone(),
        unequalness,
        equalized,
        trace,
    }
}

/// Number of odd parts.
pub fn odd_part_count(c: &Composition) -> usize {
    c.odd_part_count()
}

/// Reusable stacks for [`is_cyclic_parts_with`].
#[derive(Debug, Default, Clone)]
pub struct Scratch {
    left: Vec<u32>,
    right: Vec<u32>,
}

impl Scratch {
    pub fn new() -> Self {
        Self::default()
    }
}

/// Allocation-free cyclicity decision on raw parts (all positive, nonempty).
///
/// Both sides are kept as stacks whose top is the innermost layer.
pub fn is_cyclic_parts_with(parts: &[u32], scratch: &mut Scratch) -> bool {
    let Scratch { left, right } = scratch;
    left.clear();
    right.clear();
    if let Some(j) = balanced_split(parts) {
        left.extend_from_slice(&parts[..j]);
        right.extend(parts[j..].iter().rev());
    } else {
        let i = dividing_index(parts).expect("unbalanced composition has a dividing index");
        let j = division_point(parts, i);
        let left_sum: u32 = parts[..j].iter().sum();
        let right_sum: u32 = parts[j..].iter().sum();
        left.extend_from_slice(&parts[..j]);
        right.extend(parts[j..].iter().rev());
        let u = left_sum.abs_diff(right_sum);
        if left_sum < right_sum {
            left.push(u);
        } else {
            right.push(u);
        }
    }
    balanced_stacks_cyclic(left, right)
}

/// Repeated reduction on stacks (top = innermost). Sums must be equal.
pub(crate) fn balanced_stacks_cyclic(left: &mut Vec<u32>, right: &mut Vec<u32>) -> bool {
    loop {
        let x = *left.last().expect("left side nonempty");
        let y = *right.last().expect("right side nonempty");
        if x == y {
            return x == 1 && left.len() == 1 && right.len() == 1;
        }
        left.pop();
        right.pop();
        let (u, v) = reduce_pair(x, y);
        let grow = if x > y { &mut *left } else { &mut *right };
        if u > 0 {
            grow.push(u);
        }
        grow.push(v);
    }
}

/// Allocating convenience wrapper around [`is_cyclic_parts_with`].
pub fn is_cyclic_parts(parts: &[u32]) -> bool {
    is_cyclic_parts_with(parts, &mut Scratch::new())
}
