//! Grid verification: for every `n in [3, max_n]`, `s in [1, n)`, `k in [1, n]`
//! the brute-force maximum must equal the edge count of an interval, match the
//! closed form where it applies, and sit below both bounds.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{spectral_bound, turan_bound};
use crate::error::Result;
use crate::exact::{closed_form, interval_degree_profile};
use crate::graph::GraphSpec;
use crate::search::{brute_force_max, projected_subsets, SearchResult};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    IntervalNotOptimal {
        n: usize,
        s: usize,
        k: usize,
        oracle: u64,
        interval: u64,
        witness: Vec<usize>,
    },
    ClosedFormMismatch {
        n: usize,
        s: usize,
        k: usize,
        closed_form: u64,
        oracle: u64,
    },
    DegreeProfileMismatch {
        n: usize,
        s: usize,
        k: usize,
        half_sum: u64,
        closed_form: u64,
    },
    SpectralBelowMax {
        n: usize,
        s: usize,
        k: usize,
        spectral: i64,
        oracle: u64,
    },
    TuranBelowMax {
        n: usize,
        s: usize,
        k: usize,
        turan: u64,
        oracle: u64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IntervalNotOptimal { n, s, k, oracle, interval, witness } => write!(
                f,
                "n={n} s={s} k={k}: oracle max {oracle} (witness {witness:?}) exceeds interval count {interval}"
            ),
            Violation::ClosedFormMismatch { n, s, k, closed_form, oracle } => {
                write!(f, "n={n} s={s} k={k}: closed form {closed_form} != oracle {oracle}")
            }
            Violation::DegreeProfileMismatch { n, s, k, half_sum, closed_form } => write!(
                f,
                "n={n} s={s} k={k}: degree profile half-sum {half_sum} != closed form {closed_form}"
            ),
            Violation::SpectralBelowMax { n, s, k, spectral, oracle } => {
                write!(f, "n={n} s={s} k={k}: spectral bound {spectral} < oracle {oracle}")
            }
            Violation::TuranBelowMax { n, s, k, turan, oracle } => {
                write!(f, "n={n} s={s} k={k}: Turan bound {turan} < oracle {oracle}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct GridReport {
    pub max_n: usize,
    pub cases: u64,
    pub closed_form_cases: u64,
    pub turan_cases: u64,
    pub subsets_examined: u64,
    pub violations: Vec<Violation>,
}

impl GridReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Budget needed to run the grid up to `max_n` with symmetry reduction.
pub fn grid_budget(max_n: usize) -> u128 {
    (3..=max_n)
        .flat_map(|n| (1..=n).map(move |k| projected_subsets(n, k, true)))
        .max()
        .unwrap_or(0)
}

pub fn verify_theorem_grid(max_n: usize) -> Result<GridReport> {
    let cases: Vec<(usize, usize, usize)> = (3..=max_n)
        .flat_map(|n| (1..n).flat_map(move |s| (1..=n).map(move |k| (n, s, k))))
        .collect();

    let outcomes: Vec<CaseOutcome> = cases
        .par_iter()
        .map(|&(n, s, k)| check_case(n, s, k))
        .collect::<Result<_>>()?;

    let mut report = GridReport {
        max_n,
        ..GridReport::default()
    };
    for o in outcomes {
        report.cases += 1;
        report.closed_form_cases += o.closed_form_checked as u64;
        report.turan_cases += o.turan_checked as u64;
        report.subsets_examined += o.examined;
        report.violations.extend(o.violations);
    }
    Ok(report)
}

struct CaseOutcome {
    closed_form_checked: bool,
    turan_checked: bool,
    examined: u64,
    violations: Vec<Violation>,
}

fn check_case(n: usize, s: usize, k: usize) -> Result<CaseOutcome> {
    let spec = GraphSpec::new(n, s)?;
    let SearchResult {
        max_edges: oracle,
        witness,
        subsets_examined,
        ..
    } = brute_force_max(&spec, k, true)?;
    let mut violations = Vec::new();

    let interval = spec.edge_count(&spec.interval(0, k)?)?;
    if oracle != interval {
        violations.push(Violation::IntervalNotOptimal {
            n,
            s,
            k,
            oracle,
            interval,
            witness: witness.to_vec(),
        });
    }

    let closed_form_checked = k > s && k + s < n;
    if closed_form_checked {
        let cf = closed_form(&spec, k)?;
        if cf != oracle || cf != interval {
            violations.push(Violation::ClosedFormMismatch {
                n,
                s,
                k,
                closed_form: cf,
                oracle,
            });
        }
        let half_sum = interval_degree_profile(&spec, k)?.iter().sum::<u64>() / 2;
        if half_sum != cf {
            violations.push(Violation::DegreeProfileMismatch {
                n,
                s,
                k,
                half_sum,
                closed_form: cf,
            });
        }
    }

    let spectral = spectral_bound(&spec, k)?.floored;
    if spectral < oracle as i64 {
        violations.push(Violation::SpectralBelowMax {
            n,
            s,
            k,
            spectral,
            oracle,
        });
    }

    let turan_checked = k >= s + 2 && spec.strict_regime();
    if turan_checked {
        let turan = turan_bound(&spec, k)?;
        if turan < oracle {
            violations.push(Violation::TuranBelowMax {
                n,
                s,
                k,
                turan,
                oracle,
            });
        }
    }

    Ok(CaseOutcome {
        closed_form_checked,
        turan_checked,
        examined: subsets_examined,
        violations,
    })
}
