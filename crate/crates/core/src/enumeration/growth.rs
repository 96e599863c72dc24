//! Per-n growth figures for a count table. Reports only; nothing here is
//! asserted about the asymptotic exponent.

use super::CountTable;

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    pub n: u32,
    pub count: u64,
    pub log2: f64,
    /// `log2(count) / n`.
    pub exponent_per_n: f64,
    /// `C^B_n / C_n`, for even `n` present in the balanced table.
    pub balanced_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub rows: Vec<GrowthRow>,
}

impl GrowthReport {
    pub fn get(&self, n: u32) -> Option<&GrowthRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// Header `n,count,log2,exponent_per_n,balanced_ratio`; the ratio
    /// column is empty for odd `n`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count,log2,exponent_per_n,balanced_ratio\n");
        for r in &self.rows {
            let ratio = r
                .balanced_ratio
                .map(|x| format!("{x:.6}"))
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{:.6},{:.6},{}\n",
                r.n, r.count, r.log2, r.exponent_per_n, ratio
            ));
        }
        out
    }
}

pub fn growth_report(all: &CountTable, balanced: &CountTable) -> GrowthReport {
    let rows = all
        .entries
        .iter()
        .map(|(&n, &count)| {
            let log2 = (count as f64).log2();
            GrowthRow {
                n,
                count,
                log2,
                exponent_per_n: log2 / n as f64,
                balanced_ratio: balanced
                    .get(n)
                    .filter(|_| count > 0)
                    .map(|b| b as f64 / count as f64),
            }
        })
        .collect();
    GrowthReport { rows }
}
