//! Exact counts of cyclic compositions.
//!
//! Three engines count the cyclic compositions of `n`, optionally restricted
//! to balanced ones:
//!
//! * [`Method::Brute`] decides every one of the `2^(n-1)` compositions.
//! * [`Method::Filtered`] only decides compositions with the odd-part
//!   signature every cyclic composition has (one odd part for odd `n`, two
//!   for even `n`), generated by decrementing parts of all-even
//!   compositions of `n + 1` or `n + 2`.
//! * [`Method::Dp`] counts balanced cyclic compositions by memoizing over
//!   the unreduced suffix of the left side, and recovers unbalanced ones
//!   from their equalizations.
//!
//! Every engine accumulates with checked 64-bit arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::ThreadPool;

use crate::comp::{compositions, Composition, Compositions};
use crate::error::{Error, Result};
use crate::reduction::{is_cyclic_parts_with, Scratch};

mod audit;
mod brute;
pub mod dp;
mod filtered;
mod growth;
pub mod reference;

pub use audit::{audit_bound, sharper_bound, within_main_bound, BoundAudit, BoundRow};
pub use filtered::{filtered_candidate_bound, filtered_candidates};
pub use growth::{growth_report, GrowthReport, GrowthRow};
pub use reference::{
    brute_cyclic_avoiders, closed_form, euler_phi, known_closed_forms, mobius, reference_count,
    ClosedForm, PatternPair,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Brute,
    Filtered,
    Dp,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Filtered => "filtered",
            Method::Dp => "dp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "filtered" => Ok(Method::Filtered),
            "dp" => Ok(Method::Dp),
            _ => Err(Error::Parse {
                what: "method",
                input: s.to_string(),
                reason: "expected brute, filtered or dp".into(),
            }),
        }
    }
}

/// Whether a count covers all cyclic compositions or only balanced ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    All,
    BalancedOnly,
}

/// Per-engine size limits and the worker count.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub brute_cap: u32,
    pub filtered_cap: u32,
    pub dp_cap: u32,
    /// Largest `n` for [`enumerate_cyclic`].
    pub stream_cap: u32,
    /// `None` uses rayon's global pool.
    pub threads: Option<usize>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            brute_cap: 26,
            filtered_cap: 44,
            dp_cap: 75,
            stream_cap: 24,
            threads: None,
        }
    }
}

impl EngineConfig {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    fn cap(&self, method: Method) -> u32 {
        match method {
            Method::Brute => self.brute_cap,
            Method::Filtered => self.filtered_cap,
            Method::Dp => self.dp_cap,
        }
    }

    fn check_cap(&self, method: Method, n: u32) -> Result<()> {
        let cap = self.cap(method);
        if n > cap {
            return Err(Error::MethodCap {
                method: method.name(),
                n,
                cap,
            });
        }
        Ok(())
    }

    fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> R {
        match self.threads {
            Some(t) => pool(t).install(job),
            None => job(),
        }
    }
}

fn pool(threads: usize) -> ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("failed to build thread pool")
}

pub(crate) fn checked_sum(n: u32, a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow { n })
}

/// Number of cyclic compositions of `n`, i.e. `C_n(132,213)`.
pub fn count_cyclic(n: u32, method: Method, config: &EngineConfig) -> Result<u64> {
    count(n, method, Kind::All, config)
}

/// Number of balanced cyclic compositions of an even `n`.
pub fn count_balanced_cyclic(n: u32, method: Method, config: &EngineConfig) -> Result<u64> {
    if n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    count(n, method, Kind::BalancedOnly, config)
}

pub fn count(n: u32, method: Method, kind: Kind, config: &EngineConfig) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    if kind == Kind::BalancedOnly && n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    config.check_cap(method, n)?;
    match method {
        Method::Brute => config.run(|| brute::count(n, kind)),
        Method::Filtered => config.run(|| filtered::count(n, kind)).map(|run| run.count),
        Method::Dp => {
            let mut engine = dp::DpCounter::new();
            match kind {
                Kind::All => engine.cyclic(n),
                Kind::BalancedOnly => engine.balanced_cyclic(n),
            }
        }
    }
}

/// Counts keyed by `n`, all produced by one method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub entries: BTreeMap<u32, u64>,
    pub method: Method,
    pub kind: Kind,
}

/// Column separator for [`CountTable::render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Tsv,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "tsv" => Ok(TableFormat::Tsv),
            _ => Err(Error::Parse {
                what: "table format",
                input: s.to_string(),
                reason: "expected csv or tsv".into(),
            }),
        }
    }
}

impl CountTable {
    /// Counts every `n` in `1..=max` (even `n` only for balanced tables).
    /// The dp engine shares one memo across the whole table.
    pub fn compute(max: u32, method: Method, kind: Kind, config: &EngineConfig) -> Result<Self> {
        config.check_cap(method, max)?;
        let ns = (1..=max).filter(|n| kind == Kind::All || n % 2 == 0);
        let mut entries = BTreeMap::new();
        if method == Method::Dp {
            let mut engine = dp::DpCounter::new();
            for n in ns {
                let c = match kind {
                    Kind::All => engine.cyclic(n)?,
                    Kind::BalancedOnly => engine.balanced_cyclic(n)?,
                };
                entries.insert(n, c);
            }
        } else {
            for n in ns {
                entries.insert(n, count(n, method, kind, config)?);
            }
        }
        Ok(CountTable {
            entries,
            method,
            kind,
        })
    }

    pub fn get(&self, n: u32) -> Option<u64> {
        self.entries.get(&n).copied()
    }

    /// Header `n,count,method`, one row per entry.
    pub fn render(&self, format: TableFormat) -> String {
        let sep = match format {
            TableFormat::Csv => ",",
            TableFormat::Tsv => "\t",
        };
        let mut out = format!("n{sep}count{sep}method\n");
        for (n, c) in &self.entries {
            out.push_str(&format!("{n}{sep}{c}{sep}{}\n", self.method));
        }
        out
    }
}

/// Lazily yields the cyclic compositions of `n` in lexicographic order.
pub fn enumerate_cyclic(n: u32, kind: Kind, config: &EngineConfig) -> Result<CyclicCompositions> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    if n > config.stream_cap {
        return Err(Error::MethodCap {
            method: "stream",
            n,
            cap: config.stream_cap,
        });
    }
    Ok(CyclicCompositions {
        inner: compositions(n),
        scratch: Scratch::new(),
        kind,
    })
}

pub struct CyclicCompositions {
    inner: Compositions,
    scratch: Scratch,
    kind: Kind,
}

impl Iterator for CyclicCompositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        for c in self.inner.by_ref() {
            if self.kind == Kind::BalancedOnly && !c.is_balanced() {
                continue;
            }
            if is_cyclic_parts_with(c.parts(), &mut self.scratch) {
                return Some(c);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts_every_method() {
        let cfg = EngineConfig::default();
        for method in [Method::Brute, Method::Filtered, Method::Dp] {
            assert_eq!(count_cyclic(1, method, &cfg).unwrap(), 1, "{method}");
            assert_eq!(count_cyclic(10, method, &cfg).unwrap(), 76, "{method}");
            assert_eq!(count_cyclic(20, method, &cfg).unwrap(), 3060, "{method}");
            assert_eq!(
                count_balanced_cyclic(2, method, &cfg).unwrap(),
                1,
                "{method}"
            );
            assert_eq!(
                count_balanced_cyclic(10, method, &cfg).unwrap(),
                34,
                "{method}"
            );
        }
    }

    #[test]
    fn error_paths() {
        let cfg = EngineConfig::default();
        assert_eq!(
            count_balanced_cyclic(7, Method::Brute, &cfg),
            Err(Error::OddN(7))
        );
        assert_eq!(count_cyclic(0, Method::Dp, &cfg), Err(Error::ZeroN));
        assert!(matches!(
            count_cyclic(27, Method::Brute, &cfg),
            Err(Error::MethodCap { cap: 26, .. })
        ));
        assert!(matches!(
            enumerate_cyclic(25, Kind::All, &cfg),
            Err(Error::MethodCap { .. })
        ));
    }

    #[test]
    fn streaming() {
        let cfg = EngineConfig::default();
        let two: Vec<String> = enumerate_cyclic(2, Kind::All, &cfg)
            .unwrap()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(two, ["1,1"]);
        let one: Vec<String> = enumerate_cyclic(1, Kind::All, &cfg)
            .unwrap()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(one, ["1"]);
        assert_eq!(enumerate_cyclic(3, Kind::All, &cfg).unwrap().count(), 2);
        let twelve: Vec<_> = enumerate_cyclic(12, Kind::All, &cfg).unwrap().collect();
        assert_eq!(twelve.len(), 170);
        assert!(twelve.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn table_render() {
        let cfg = EngineConfig::default();
        let t = CountTable::compute(4, Method::Brute, Kind::All, &cfg).unwrap();
        assert_eq!(
            t.render(TableFormat::Csv),
            "n,count,method\n1,1,brute\n2,1,brute\n3,2,brute\n4,4,brute\n"
        );
        let t = CountTable::compute(6, Method::Dp, Kind::BalancedOnly, &cfg).unwrap();
        assert_eq!(
            t.render(TableFormat::Tsv),
            "n\tcount\tmethod\n2\t1\tdp\n4\t2\tdp\n6\t6\tdp\n"
        );
    }
}
