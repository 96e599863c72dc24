//! Decides every composition of `n`.
//!
//! Compositions of `n` are the `(n-1)`-bit cut masks; the most significant
//! bit is the cut after the first element, so fixing the high bits fixes a
//! prefix of parts. Work is split into prefix blocks.

use rayon::prelude::*;

use super::{checked_sum, Kind};
use crate::comp::balanced_split;
use crate::error::{Error, Result};
use crate::reduction::{is_cyclic_parts_with, Scratch};

const PREFIX_BITS: u32 = 10;

/// Writes the parts of the composition encoded by `mask` into `parts`.
pub(crate) fn decode(n: u32, mask: u64, parts: &mut Vec<u32>) {
    parts.clear();
    let mut run = 1u32;
    for b in (0..n - 1).rev() {
        if mask >> b & 1 == 1 {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
}

pub(super) fn count(n: u32, kind: Kind) -> Result<u64> {
    let bits = n - 1;
    let high = bits.min(PREFIX_BITS);
    let low = bits - high;
    (0u64..1 << high)
        .into_par_iter()
        .map(|prefix| {
            let mut scratch = Scratch::new();
            let mut parts = Vec::with_capacity(n as usize);
            let mut local = 0u64;
            for tail in 0..1u64 << low {
                decode(n, prefix << low | tail, &mut parts);
                if kind == Kind::BalancedOnly && balanced_split(&parts).is_none() {
                    continue;
                }
                if is_cyclic_parts_with(&parts, &mut scratch) {
                    local = local.checked_add(1).ok_or(Error::Overflow { n })?;
                }
            }
            Ok(local)
        })
        .try_reduce(|| 0, |a, b| checked_sum(n, a, b))
}
