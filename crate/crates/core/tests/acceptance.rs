//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All tolerances are exact equality;
//! runtime budgets are pinned below.

use std::collections::HashSet;
use std::io::Write;
use std::time::{Duration, Instant};

use revlayer::comp::compositions;
use revlayer::enumeration::dp::DpCounter;
use revlayer::enumeration::{
    brute_cyclic_avoiders, filtered_candidate_bound, filtered_candidates, growth_report,
    sharper_bound, within_main_bound,
};
use revlayer::{
    build_diagram, is_cyclic, reduce, CountTable, EngineConfig, Kind, Method, Pattern, Permutation,
};

/// Published `C_n(132,213)` for n = 1..=75.
const TABLE_ALL: [u64; 75] = [
    1,
    1,
    2,
    4,
    6,
    12,
    14,
    32,
    30,
    76,
    62,
    170,
    122,
    370,
    232,
    762,
    440,
    1548,
    818,
    3060,
    1490,
    5960,
    2720,
    11404,
    4894,
    21596,
    8790,
    40446,
    15654,
    74906,
    27892,
    138200,
    49276,
    252032,
    87276,
    459102,
    153586,
    827884,
    270876,
    1494032,
    475282,
    2671066,
    835998,
    4784840,
    1464206,
    8501562,
    2570744,
    15140024,
    4498100,
    26777982,
    7886792,
    47470826,
    13792064,
    83680928,
    24162342,
    147821872,
    42241704,
    259952664,
    73959542,
    457955944,
    129285010,
    803955498,
    226271426,
    1413400762,
    395525678,
    2478240778,
    692053810,
    4350163074,
    1209749736,
    7621011834,
    2116321814,
    13362224638,
    3699626596,
    23395287534,
    6471271704,
];

/// Published `C^B_n(132,213)` for even n = 2..=74.
const TABLE_BALANCED: [u64; 37] = [
    1, 2, 6, 14, 34, 68, 150, 296, 586, 1140, 2182, 4130, 7678, 14368, 26068, 48248, 86572, 158146,
    281410, 509442, 901014, 1618544, 2852464, 5089580, 8948694, 15884762, 27882762, 49291952,
    86435358, 152316976, 266907560, 469232204, 821844316, 1442300988, 2525295380, 4426185044,
    7747801190,
];

const BUDGET_ORACLE: Duration = Duration::from_secs(30);
const BUDGET_FILTERED_40: Duration = Duration::from_secs(15 * 60);
const BUDGET_DP_75: Duration = Duration::from_secs(60 * 60);

fn published(n: u32) -> u64 {
    TABLE_ALL[n as usize - 1]
}

fn published_balanced(n: u32) -> u64 {
    TABLE_BALANCED[n as usize / 2 - 1]
}

fn oracle(parts: &[u32]) -> bool {
    let c = revlayer::Composition::new(parts.to_vec()).unwrap();
    Permutation::from_composition(&c).is_cyclic()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Rows of `table` that differ from `expected`.
fn mismatches(table: &CountTable, expected: impl Fn(u32) -> u64) -> Vec<String> {
    table
        .entries
        .iter()
        .filter(|(&n, &c)| c != expected(n))
        .map(|(n, c)| format!("n={n}: got {c}, want {}", expected(*n)))
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut checked = 0u64;
    let mut bad = Vec::new();
    for n in 1..=18 {
        for c in compositions(n) {
            checked += 1;
            if is_cyclic(&c).verdict().is_cyclic() != oracle(c.parts()) {
                bad.push(c.to_string());
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && checked == (1 << 18) - 1 && elapsed < BUDGET_ORACLE,
        format!(
            "{checked} compositions, {} disagreements, {elapsed:.1?}",
            bad.len()
        ),
    )
}

fn criterion_2(brute: &CountTable, filtered: &CountTable) -> Outcome {
    let mut bad = mismatches(brute, published);
    bad.extend(mismatches(filtered, published));
    let spot = [10, 15, 20, 26]
        .iter()
        .all(|&n| brute.get(n) == Some(published(n)));
    outcome(
        bad.is_empty() && spot && brute.entries.len() == 26,
        format!("brute n<=26 and filtered n<=26 vs published; mismatches {bad:?}"),
    )
}

fn criterion_3(filtered: &CountTable, elapsed: Duration) -> Outcome {
    let bad = mismatches(filtered, published);
    let spot = filtered.get(35) == Some(87276) && filtered.get(40) == Some(1494032);
    outcome(
        bad.is_empty() && spot && filtered.entries.len() == 40 && elapsed < BUDGET_FILTERED_40,
        format!("filtered n<=40 in {elapsed:.1?}; mismatches {bad:?}"),
    )
}

fn criterion_4(config: &EngineConfig) -> Outcome {
    let mut bad = Vec::new();
    for method in [Method::Brute, Method::Filtered, Method::Dp] {
        let t = CountTable::compute(26, method, Kind::BalancedOnly, config).unwrap();
        if t.entries.len() != 13 {
            bad.push(format!("{method}: {} rows", t.entries.len()));
        }
        bad.extend(
            mismatches(&t, published_balanced)
                .into_iter()
                .map(|m| format!("{method} {m}")),
        );
    }
    let dp = CountTable::compute(74, Method::Dp, Kind::BalancedOnly, config).unwrap();
    bad.extend(
        mismatches(&dp, published_balanced)
            .into_iter()
            .map(|m| format!("dp {m}")),
    );
    let spot = dp.get(10) == Some(34)
        && dp.get(20) == Some(1140)
        && dp.get(26) == Some(7678)
        && dp.get(40) == Some(509442);
    outcome(
        bad.is_empty() && spot,
        format!("three engines for even n<=26, dp for even n<=74; mismatches {bad:?}"),
    )
}

fn criterion_5(filtered: &CountTable, config: &EngineConfig) -> Outcome {
    let mut bad = Vec::new();
    let mut dp = DpCounter::new();
    for n in 1..=40 {
        let d = dp.cyclic(n).unwrap();
        if Some(d) != filtered.get(n) {
            bad.push(format!("n={n}: dp {d}, filtered {:?}", filtered.get(n)));
        }
        if n % 2 == 0 {
            let fb = revlayer::count(n, Method::Filtered, Kind::BalancedOnly, config).unwrap();
            let db = dp.balanced_cyclic(n).unwrap();
            if fb != db {
                bad.push(format!("balanced n={n}: dp {db}, filtered {fb}"));
            }
        }
    }
    let start = Instant::now();
    let table = CountTable::compute(75, Method::Dp, Kind::All, config).unwrap();
    let elapsed = start.elapsed();
    bad.extend(mismatches(&table, published));
    outcome(
        bad.is_empty() && table.get(75) == Some(6471271704) && elapsed < BUDGET_DP_75,
        format!("dp = filtered for n<=40; dp n<=75 in {elapsed:.2?}; mismatches {bad:?}"),
    )
}

fn criterion_6() -> Outcome {
    let (mut reduced, mut equalized, mut bad) = (0u64, 0u64, Vec::new());
    for n in 1..=16 {
        for c in compositions(n) {
            let before = oracle(c.parts());
            match c.as_balanced() {
                Some(b) => {
                    if let Ok(step) = reduce(&b) {
                        reduced += 1;
                        if oracle(step.after.parts()) != before {
                            bad.push(format!("reduce {b}"));
                        }
                    }
                }
                None => {
                    equalized += 1;
                    let e = c.equalize();
                    if !e.flatten().is_balanced() || oracle(e.parts()) != before {
                        bad.push(format!("equalize {c}"));
                    }
                }
            }
        }
    }
    // balanced compositions of n<=16 with unequal innermost pair, and the
    // unbalanced ones, both counted independently
    let balanced_unequal: u64 = (1..=8u32)
        .map(|h| {
            let comps: Vec<Vec<u32>> = compositions(h).map(|c| c.into_parts()).collect();
            comps
                .iter()
                .flat_map(|a| comps.iter().map(move |b| (a.last() != b.first()) as u64))
                .sum::<u64>()
        })
        .sum();
    let total: u64 = (1..=16u32).map(|n| 1u64 << (n - 1)).sum();
    let balanced_all: u64 = (1..=8u32).map(|h| 1u64 << (2 * (h - 1))).sum();
    outcome(
        bad.is_empty() && reduced == balanced_unequal && equalized == total - balanced_all,
        format!("{reduced} reductions, {equalized} equalizations, failures {bad:?}"),
    )
}

fn criterion_7() -> Outcome {
    let (mut cyclic, mut balanced, mut bad) = (0u64, 0u64, Vec::new());
    for n in 1..=18 {
        let want = if n % 2 == 1 { 1 } else { 2 };
        for c in compositions(n).filter(|c| oracle(c.parts())) {
            cyclic += 1;
            let odd = c.parts().iter().filter(|&&a| a % 2 == 1).count();
            if odd != want {
                bad.push(c.to_string());
            }
            if c.is_balanced() {
                balanced += 1;
                if odd != 2 {
                    bad.push(format!("balanced {c}"));
                }
            }
        }
    }
    let expected_cyclic: u64 = TABLE_ALL[..18].iter().sum();
    outcome(
        bad.is_empty() && cyclic == expected_cyclic,
        format!("{cyclic} cyclic ({balanced} balanced) compositions, violations {bad:?}"),
    )
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=75u32 {
        let c = published(n) as u128;
        let nn = n as u128;
        // C_n <= n^2 2^(n/2), squared to stay in integers
        if c * c > nn.pow(4) * (1u128 << n) || !within_main_bound(n, published(n)) {
            bad.push(format!("main n={n}"));
        }
        let h = nn.div_ceil(2);
        let sharper = if n % 2 == 1 {
            h * (1 << (h - 1))
        } else {
            h * (h + 1) / 2 * (1 << h)
        };
        if c > sharper || sharper_bound(n) != sharper {
            bad.push(format!("sharper n={n}"));
        }
    }
    for n in 1..=22u32 {
        let candidates = filtered_candidates(n);
        let distinct: HashSet<_> = candidates.iter().collect();
        if candidates.len() as u64 > filtered_candidate_bound(n)
            || distinct.len() != candidates.len()
        {
            bad.push(format!("candidates n={n}"));
        }
        let cyclic = candidates.iter().filter(|c| oracle(c.parts())).count() as u64;
        if cyclic != published(n) {
            bad.push(format!("candidate coverage n={n}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("n<=75 bounds, candidate sets n<=22; violations {bad:?}"),
    )
}

fn phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn criterion_9() -> Outcome {
    let pats = |a: &str, b: &str| -> Vec<Pattern> { vec![a.parse().unwrap(), b.parse().unwrap()] };
    let scan = |a: &str, b: &str, n: u32| brute_cyclic_avoiders(&pats(a, b), n).unwrap();
    let mut bad = Vec::new();
    for n in 1..=9u32 {
        let m = n as u64;
        let mut expect = |name: &str, got: u64, want: u64| {
            if got != want {
                bad.push(format!("{name} n={n}: scan {got}, formula {want}"));
            }
        };
        expect("(123,132)", scan("123", "132", n), 1 << ((m - 1) / 2));
        expect("(231,321)", scan("231", "321", n), 1);
        if n >= 5 {
            expect("(123,321)", scan("123", "321", n), 0);
        }
        if n >= 3 {
            expect("(231,312)", scan("231", "312", n), 0);
        }
        let totient_cases = match m % 4 {
            0 => phi(m / 2),
            2 => phi((m + 2) / 4) + phi(m / 2),
            _ => phi(m.div_ceil(2)),
        };
        if n != 2 {
            expect("(123,231)", scan("123", "231", n), totient_cases);
        }
        expect("(132,321)", scan("132", "321", n), phi(m));
    }
    // the case formula is off at n = 2; recorded, not hidden
    let n2_gap = scan("123", "231", 2) == 1;
    outcome(
        bad.is_empty() && n2_gap,
        format!(
            "n!-scan n<=9; (123,231) checked for n != 2; (132,321) = phi(n); violations {bad:?}"
        ),
    )
}

fn criterion_10() -> Outcome {
    let (mut checked, mut bad) = (0u64, Vec::new());
    for n in 1..=10 {
        for c in compositions(n) {
            checked += 1;
            let p = Permutation::from_composition(&c);
            if build_diagram(&p).loop_count() != p.cycle_decomposition().num_cycles() {
                bad.push(c.to_string());
            }
        }
    }
    outcome(
        bad.is_empty() && checked == (1 << 10) - 1,
        format!("{checked} diagrams, mismatches {bad:?}"),
    )
}

fn criterion_11() -> Outcome {
    let p132: Pattern = "132".parse().unwrap();
    let p213: Pattern = "213".parse().unwrap();
    let mut bad = Vec::new();
    for n in 1..=14u32 {
        let perms: HashSet<Permutation> = compositions(n)
            .map(|c| Permutation::from_composition(&c))
            .filter(|p| p.avoids(&p132) && p.avoids(&p213))
            .collect();
        if perms.len() as u64 != 1 << (n - 1) {
            bad.push(format!("compositions n={n}: {}", perms.len()));
        }
    }
    for n in 1..=8u32 {
        let mut v: Vec<u32> = (1..=n).collect();
        let mut found = 0u64;
        loop {
            let p = Permutation::new(v.clone()).unwrap();
            if p.avoids(&p132) && p.avoids(&p213) {
                found += 1;
                if p.to_composition().is_err() {
                    bad.push(format!("{p} not layered"));
                }
            }
            // lexicographic successor
            let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
                break;
            };
            let j = v.iter().rposition(|&x| x > v[i]).unwrap();
            v.swap(i, j);
            v[i + 1..].reverse();
        }
        if found != 1 << (n - 1) {
            bad.push(format!("scan n={n}: {found}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("2^(n-1) for n<=14, n!-scan n<=8; violations {bad:?}"),
    )
}

fn main() {
    let config = EngineConfig::default();
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    let mut report = |id: u32, name: &'static str, o: Outcome| {
        let status = if o.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            std::io::stdout(),
            "criterion {id:>2} {status} {name}: {}",
            o.detail
        );
        results.push((id, name, o));
    };

    report(1, "algorithm vs cycle oracle, n<=18", criterion_1());

    let brute = CountTable::compute(26, Method::Brute, Kind::All, &config).unwrap();
    let start = Instant::now();
    let filtered = CountTable::compute(40, Method::Filtered, Kind::All, &config).unwrap();
    let filtered_time = start.elapsed();
    let filtered_26 = CountTable {
        entries: filtered
            .entries
            .range(..=26)
            .map(|(&n, &c)| (n, c))
            .collect(),
        method: Method::Filtered,
        kind: Kind::All,
    };
    report(
        2,
        "published counts, brute and filtered, n<=26",
        criterion_2(&brute, &filtered_26),
    );
    report(
        3,
        "published counts, filtered, n<=40",
        criterion_3(&filtered, filtered_time),
    );
    report(4, "published balanced counts", criterion_4(&config));
    report(5, "dp engine", criterion_5(&filtered, &config));
    report(
        6,
        "reduce and equalize preserve cyclicity, n<=16",
        criterion_6(),
    );
    report(7, "odd-part counts, n<=18", criterion_7());
    report(8, "bound audit", criterion_8());
    report(9, "closed forms for other pattern pairs", criterion_9());
    report(10, "diagram loops vs cycles, n<=10", criterion_10());
    report(11, "reverse layered census", criterion_11());

    // growth is reported, not asserted
    let all = CountTable::compute(75, Method::Dp, Kind::All, &config).unwrap();
    let balanced = CountTable::compute(74, Method::Dp, Kind::BalancedOnly, &config).unwrap();
    let growth = growth_report(&all, &balanced);
    for n in [74, 75] {
        let row = growth.get(n).unwrap();
        println!(
            "growth (info) n={n}: log2 C_n / n = {:.4}, C^B_n / C_n = {}",
            row.exponent_per_n,
            row.balanced_ratio.map_or("-".into(), |r| format!("{r:.4}"))
        );
    }

    let failed: Vec<u32> = results.iter().filter(|r| !r.2.pass).map(|r| r.0).collect();
    if failed.is_empty() {
        println!("acceptance: all 11 criteria pass");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
