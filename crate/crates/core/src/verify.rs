//! Self-checks that compare the algorithms against direct computation on
//! permutations. Each suite is exhaustive up to a size limit.

use std::fmt;

use crate::comp::{compositions, Composition};
use crate::diagram::build_diagram;
use crate::enumeration::{
    audit_bound, brute_cyclic_avoiders, closed_form, count, CountTable, EngineConfig, Kind, Method,
    PatternPair,
};
use crate::perm::{Pattern, Permutation};
use crate::reduction::{is_cyclic, reduce};

/// Failures kept per suite; the rest are only counted.
const KEEP_FAILURES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: u64,
    pub failed: u64,
    pub examples: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            checked: 0,
            failed: 0,
            examples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < KEEP_FAILURES {
                self.examples.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} checked, {} failed)",
            self.name, self.checked, self.failed
        )?;
        for e in &self.examples {
            write!(f, "\n  {e}")?;
        }
        Ok(())
    }
}

fn oracle(c: &Composition) -> bool {
    Permutation::from_composition(c).is_cyclic()
}

/// The decision procedure agrees with the cycle decomposition.
pub fn algorithm_matches_oracle(max: u32) -> SuiteResult {
    let mut r = SuiteResult::new("algorithm vs cycle oracle");
    for n in 1..=max {
        for c in compositions(n) {
            let fast = is_cyclic(&c).verdict().is_cyclic();
            r.check(fast == oracle(&c), || format!("{c}: algorithm says {fast}"));
        }
    }
    r
}

/// A single reduction step and equalization leave cyclicity unchanged.
pub fn steps_preserve_cyclicity(max: u32) -> SuiteResult {
    let mut r = SuiteResult::new("reduce and equalize preserve cyclicity");
    for n in 1..=max {
        for c in compositions(n) {
            let before = oracle(&c);
            match c.as_balanced() {
                Some(b) => {
                    if let Ok(step) = reduce(&b) {
                        let after = oracle(&step.after.flatten());
                        r.check(before == after, || format!("reduce {b} -> {}", step.after));
                    }
                }
                None => {
                    let e = c.equalize();
                    r.check(before == oracle(&e.flatten()), || {
                        format!("equalize {c} -> {e}")
                    });
                }
            }
        }
    }
    r
}

/// Cyclic compositions have one odd part for odd `n` and two for even
/// `n`; balanced cyclic compositions have two.
pub fn parity(max: u32) -> SuiteResult {
    let mut r = SuiteResult::new("odd-part counts of cyclic compositions");
    for n in 1..=max {
        let expected = if n % 2 == 1 { 1 } else { 2 };
        for c in compositions(n).filter(oracle) {
            let odd = c.odd_part_count();
            r.check(odd == expected, || format!("{c}: {odd} odd parts"));
        }
    }
    r
}

/// Loops of the cycle diagram match cycles of the permutation.
pub fn diagram_loops(max: u32) -> SuiteResult {
    let mut r = SuiteResult::new("diagram loops vs cycles");
    for n in 1..=max {
        for c in compositions(n) {
            let p = Permutation::from_composition(&c);
            let loops = build_diagram(&p).loop_count();
            let cycles = p.cycle_decomposition().num_cycles();
            r.check(loops == cycles, || {
                format!("{p}: {loops} loops, {cycles} cycles")
            });
        }
    }
    r
}

/// Compositions give `2^(n-1)` distinct permutations avoiding 132 and 213,
/// each converting back to its composition; up to `scan_max` every
/// avoider is found by scanning all permutations.
pub fn census(max: u32, scan_max: u32) -> SuiteResult {
    let mut r = SuiteResult::new("reverse layered census");
    let p132: Pattern = "132".parse().expect("literal pattern");
    let p213: Pattern = "213".parse().expect("literal pattern");
    for n in 1..=max {
        let mut seen = std::collections::HashSet::new();
        for c in compositions(n) {
            let p = Permutation::from_composition(&c);
            let ok = p.avoids(&p132) && p.avoids(&p213) && p.to_composition().as_ref() == Ok(&c);
            r.check(ok, || format!("{c} -> {p}"));
            seen.insert(p);
        }
        r.check(seen.len() as u64 == 1u64 << (n - 1), || {
            format!("n={n}: {} distinct", seen.len())
        });
    }
    for n in 1..=scan_max.min(8) {
        let mut values: Vec<u32> = (1..=n).collect();
        let mut avoiders = 0u64;
        loop {
            let p = Permutation::new(values.clone()).expect("valid permutation");
            if p.avoids(&p132) && p.avoids(&p213) {
                avoiders += 1;
            }
            if !next_permutation(&mut values) {
                break;
            }
        }
        r.check(avoiders == 1u64 << (n - 1), || {
            format!("n={n}: scan found {avoiders}")
        });
    }
    r
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("a larger element exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Brute, filtered and dp counts coincide, for all and balanced counts.
pub fn engines_agree(max: u32, config: &EngineConfig) -> SuiteResult {
    let mut r = SuiteResult::new("brute, filtered and dp engines agree");
    for n in 1..=max {
        let kinds: &[Kind] = if n % 2 == 0 {
            &[Kind::All, Kind::BalancedOnly]
        } else {
            &[Kind::All]
        };
        for &kind in kinds {
            let counts: Vec<_> = [Method::Brute, Method::Filtered, Method::Dp]
                .iter()
                .map(|&m| count(n, m, kind, config))
                .collect();
            let agree = counts.iter().all(|c| c.is_ok() && *c == counts[0]);
            r.check(agree, || format!("n={n} {kind:?}: {counts:?}"));
        }
    }
    r
}

/// Counts respect `C_n^2 <= n^4 2^n` and the sharper intermediate bounds.
pub fn bounds(max: u32, config: &EngineConfig) -> SuiteResult {
    let mut r = SuiteResult::new("growth bounds");
    match CountTable::compute(max, Method::Dp, Kind::All, config) {
        Ok(table) => {
            for row in audit_bound(&table).rows {
                r.check(row.within_main && row.within_sharper, || {
                    format!(
                        "n={} count={} sharper={}",
                        row.n, row.count, row.sharper_bound
                    )
                });
            }
        }
        Err(e) => r.check(false, || e.to_string()),
    }
    r
}

/// Closed forms for other pattern pairs against a scan of all `n!`
/// permutations, on the range where each form is stated to hold.
pub fn reference_pairs(max: u32) -> SuiteResult {
    let mut r = SuiteResult::new("closed forms for other pattern pairs");
    let pairs = [
        ("123", "132"),
        ("231", "321"),
        ("123", "321"),
        ("231", "312"),
        ("123", "231"),
        ("132", "321"),
        ("132", "231"),
    ];
    for (a, b) in pairs {
        let pair: PatternPair = format!("{a},{b}").parse().expect("literal pair");
        let form = closed_form(&pair).expect("registered pair");
        let [s, t] = pair.patterns();
        for n in (1..=max.min(9)).filter(|&n| form.holds_for(n)) {
            let scanned = brute_cyclic_avoiders(&[s.clone(), t.clone()], n);
            let formula = form.evaluate(n);
            let ok = scanned.is_ok() && scanned == formula;
            r.check(ok, || {
                format!("{pair} n={n}: scan {scanned:?}, formula {formula:?}")
            });
        }
    }
    r
}

/// Every suite, with sizes derived from `max`.
pub fn run_all(max: u32, config: &EngineConfig) -> Vec<SuiteResult> {
    vec![
        algorithm_matches_oracle(max),
        steps_preserve_cyclicity(max),
        parity(max),
        diagram_loops(max.min(10)),
        census(max.min(14), 8),
        engines_agree(max.min(config.brute_cap), config),
        bounds(max.min(config.dp_cap), config),
        reference_pairs(max.min(9)),
    ]
}
