//! Decides only compositions with the odd-part signature of cyclic ones.
//!
//! A composition of odd `n` with exactly one odd part is an all-even
//! composition of `n + 1` with one part decremented; with two odd parts and
//! even `n`, an all-even composition of `n + 2` with two parts decremented.
//! The map is injective (incrementing the odd parts inverts it), so every
//! candidate is visited once. All-even compositions of `2m` are indexed by
//! `(m-1)`-bit cut masks and split into prefix blocks across workers.

use rayon::prelude::*;

use super::brute::decode;
use super::{checked_sum, Kind};
use crate::comp::{balanced_split, Composition};
use crate::error::{Error, Result};
use crate::reduction::{is_cyclic_parts_with, Scratch};

const PREFIX_BITS: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) struct FilteredRun {
    pub count: u64,
    pub candidates: u64,
}

/// Half-size `m` of the all-even base compositions, and how many parts to
/// decrement.
fn base(n: u32) -> (u32, usize) {
    if n % 2 == 1 {
        (n.div_ceil(2), 1)
    } else {
        ((n + 2) / 2, 2)
    }
}

/// Calls `visit` on every candidate composition of `n` whose base has the
/// given cut mask. The slice passed to `visit` is only valid for the call.
fn for_each_in_base(n: u32, mask: u64, parts: &mut Vec<u32>, mut visit: impl FnMut(&[u32])) {
    let (m, odd) = base(n);
    decode(m, mask, parts);
    for p in parts.iter_mut() {
        *p *= 2;
    }
    let k = parts.len();
    if odd == 1 {
        for i in 0..k {
            parts[i] -= 1;
            visit(parts);
            parts[i] += 1;
        }
    } else {
        for i in 0..k {
            parts[i] -= 1;
            for j in i + 1..k {
                parts[j] -= 1;
                visit(parts);
                parts[j] += 1;
            }
            parts[i] += 1;
        }
    }
}

pub(super) fn count(n: u32, kind: Kind) -> Result<FilteredRun> {
    let (m, _) = base(n);
    let bits = m - 1;
    let high = bits.min(PREFIX_BITS);
    let low = bits - high;
    let (count, candidates) = (0u64..1 << high)
        .into_par_iter()
        .map(|prefix| {
            let mut scratch = Scratch::new();
            let mut parts = Vec::with_capacity(m as usize);
            let (mut local, mut seen) = (0u64, 0u64);
            for tail in 0..1u64 << low {
                for_each_in_base(n, prefix << low | tail, &mut parts, |cand| {
                    seen += 1;
                    if kind == Kind::BalancedOnly && balanced_split(cand).is_none() {
                        return;
                    }
                    if is_cyclic_parts_with(cand, &mut scratch) {
                        local += 1;
                    }
                });
            }
            Ok::<_, Error>((local, seen))
        })
        .try_reduce(
            || (0, 0),
            |a, b| Ok((checked_sum(n, a.0, b.0)?, checked_sum(n, a.1, b.1)?)),
        )?;
    Ok(FilteredRun { count, candidates })
}

fn candidates_vec(n: u32) -> Vec<Vec<u32>> {
    let (m, _) = base(n);
    let mut out = Vec::new();
    let mut parts = Vec::new();
    for mask in 0..1u64 << (m - 1) {
        for_each_in_base(n, mask, &mut parts, |cand| out.push(cand.to_vec()));
    }
    out
}

/// Every candidate the filtered engine decides for `n`, in generation
/// order. Intended for small `n`.
pub fn filtered_candidates(n: u32) -> Vec<Composition> {
    candidates_vec(n)
        .into_iter()
        .map(Composition::from_parts_unchecked)
        .collect()
}

/// `binom(ceil(n/2) + 1, 2) * 2^ceil(n/2)`, an upper bound on the number of
/// candidates for `n`.
pub fn filtered_candidate_bound(n: u32) -> u64 {
    let h = n.div_ceil(2) as u64;
    (h + 1) * h / 2 * (1u64 << h)
}
