//! Checks counts against `n^2 * 2^(n/2)` and the sharper bounds from
//! counting the odd-part-signature candidates:
//! `(n+1)/2 * 2^((n-1)/2)` for odd `n`, `binom(n/2+1, 2) * 2^(n/2)` for even `n`.

use super::CountTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub n: u32,
    pub count: u64,
    /// `count <= n^2 * 2^(n/2)`, decided exactly.
    pub within_main: bool,
    /// The sharper parity-dependent bound.
    pub sharper_bound: u128,
    pub within_sharper: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundAudit {
    pub rows: Vec<BoundRow>,
}

impl BoundAudit {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.within_main && r.within_sharper)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundRow> {
        self.rows
            .iter()
            .filter(|r| !(r.within_main && r.within_sharper))
    }
}

/// `count <= n^2 * 2^(n/2)`, compared as `count^2 <= n^4 * 2^n` so odd `n`
/// needs no irrational arithmetic.
pub fn within_main_bound(n: u32, count: u64) -> bool {
    let lhs = (count as u128) * (count as u128);
    let n4 = (n as u128).pow(4);
    match 1u128
        .checked_shl(n)
        .filter(|_| n < 128)
        .and_then(|p| p.checked_mul(n4))
    {
        Some(rhs) => lhs <= rhs,
        // the bound exceeds 2^128 > count^2
        None => true,
    }
}

pub fn sharper_bound(n: u32) -> u128 {
    let n = n as u128;
    if n % 2 == 1 {
        n.div_ceil(2) * (1u128 << ((n - 1) / 2))
    } else {
        let h = n / 2;
        (h + 1) * h / 2 * (1u128 << h)
    }
}

pub fn audit_bound(table: &CountTable) -> BoundAudit {
    let rows = table
        .entries
        .iter()
        .map(|(&n, &count)| {
            let sharper = sharper_bound(n);
            BoundRow {
                n,
                count,
                within_main: within_main_bound(n, count),
                sharper_bound: sharper,
                within_sharper: count as u128 <= sharper,
            }
        })
        .collect();
    BoundAudit { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn main_bound() {
        assert!(within_main_bound(10, 76));
        assert!(within_main_bound(10, 3200));
        assert!(!within_main_bound(10, 3201));
        assert!(within_main_bound(1, 1));
        // 1^2 * 2^(1/2) = 1.414...
        assert!(!within_main_bound(1, 2));
        assert!(within_main_bound(20, 3060));
        assert!(within_main_bound(200, u64::MAX));
    }

    #[test]
    fn sharper() {
        assert_eq!(sharper_bound(1), 1);
        assert_eq!(sharper_bound(2), 2);
        assert_eq!(sharper_bound(10), 15 * 32);
        assert_eq!(sharper_bound(9), 5 * 16);
    }
}
