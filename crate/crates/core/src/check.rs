//! Cross-method consistency sweep.
//!
//! For every family, `n <= n_max` and `k <= k_max`, each pipeline that admits
//! the instance is run and all results must agree exactly.

use std::fmt;

use crate::{count, BigCount, CountError, Family, Method};

/// One disagreement between two pipelines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub reference: (Method, String),
    pub other: (Method, String),
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MISMATCH {} n={} k={}: {}={} vs {}={}",
            self.family,
            self.n,
            self.k,
            self.reference.0,
            self.reference.1,
            self.other.0,
            self.other.1
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    /// Number of `(family, n, k)` instances visited.
    pub instances: usize,
    /// Number of pairwise comparisons made against the reference pipeline.
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Sweep using the library's own pipelines.
pub fn run_check(n_max: usize, k_max: usize) -> CheckReport {
    run_check_with(n_max, k_max, count_value)
}

fn count_value(family: Family, n: usize, k: usize, method: Method) -> Result<BigCount, CountError> {
    count(family, n, k, method).map(|c| c.value)
}

/// Sweep with an arbitrary counting function, so that faulty pipelines can
/// be substituted in tests.
pub fn run_check_with<F>(n_max: usize, k_max: usize, counter: F) -> CheckReport
where
    F: Fn(Family, usize, usize, Method) -> Result<BigCount, CountError>,
{
    let mut report = CheckReport::default();
    for family in Family::ALL {
        for k in 1..=k_max {
            for n in 0..=n_max {
                report.instances += 1;
                let results: Vec<(Method, String)> = Method::CONCRETE
                    .into_iter()
                    .filter(|m| m.admits(n, k))
                    .map(|m| {
                        let shown = match counter(family, n, k, m) {
                            Ok(v) => v.to_string(),
                            Err(e) => format!("error({e})"),
                        };
                        (m, shown)
                    })
                    .collect();
                let (reference, rest) = results.split_first().expect("matrix always admits");
                for other in rest {
                    report.comparisons += 1;
                    if other.1 != reference.1 {
                        report.mismatches.push(Mismatch {
                            family,
                            n,
                            k,
                            reference: reference.clone(),
                            other: other.clone(),
                        });
                    }
                }
            }
        }
    }
    report
}
