//! Exhaustive comparison of every maximal outerplanar 3-uniform hypergraph
//! on `n` vertices against the fan.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::outerplanar::{enumerate_triangulations, fan, triangulation_count, Triangulation};
use crate::spectral::{spectral_radius, SolverConfig};

/// Values closer than this are one tie class.
pub const TIE_TOLERANCE: f64 = 1e-9;
/// The fan is reported as a clear winner when it leads the best non-fan
/// class by more than this.
pub const GAP_THRESHOLD: f64 = 1e-8;
/// Non-fan values above `lambda_fan + VIOLATION_SLACK` are violations.
pub const VIOLATION_SLACK: f64 = 1e-9;
/// Default largest `n` accepted by [`extremal_scan`].
pub const DEFAULT_MAX_N: usize = 12;

/// One row of the scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRecord {
    /// 1-based position under descending lambda, ties ordered by canonical
    /// form and then by the triangulation itself.
    pub rank: usize,
    pub triangulation: Triangulation,
    pub canonical: Triangulation,
    pub lambda: f64,
    /// `lambda(F_n) - lambda`.
    pub gap_to_fan: f64,
    pub residual: f64,
    pub iterations: usize,
    pub is_fan: bool,
    /// Solver failure for this row, if any; `lambda` is NaN then.
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub n: usize,
    pub dedupe: bool,
    pub config: SolverConfig,
    pub lambda_fan: f64,
    /// Catalan(n-2).
    pub raw_count: usize,
    /// Number of dihedral classes seen.
    pub class_count: usize,
    pub records: Vec<ScanRecord>,
    /// Rank 1 belongs to the fan's class.
    pub top_is_fan: bool,
    /// Lambda at rank 1 minus the best lambda of any other class.
    pub top_gap: Option<f64>,
    pub top_gap_exceeds_threshold: bool,
    /// Tie classes containing more than one dihedral class, as rank lists.
    pub mixed_ties: Vec<Vec<usize>>,
    /// Ranks of non-fan rows with lambda above the fan's.
    pub violations: Vec<usize>,
    /// Ranks of rows whose solve failed.
    pub failures: Vec<usize>,
}

impl ScanReport {
    /// Rows of one representative per class, in rank order.
    pub fn class_representatives(&self) -> Vec<&ScanRecord> {
        let mut seen = std::collections::HashSet::new();
        self.records
            .iter()
            .filter(|r| seen.insert(r.canonical.clone()))
            .collect()
    }
}

/// [`extremal_scan_bounded`] with the default ceiling.
pub fn extremal_scan(n: usize, cfg: &SolverConfig, dedupe: bool) -> Result<ScanReport> {
    extremal_scan_bounded(n, cfg, dedupe, DEFAULT_MAX_N)
}

/// Solves every triangulation hypergraph on `n` vertices (one per dihedral
/// class with `dedupe`) in parallel and ranks them. Row order depends only
/// on the inputs, not on scheduling.
pub fn extremal_scan_bounded(
    n: usize,
    cfg: &SolverConfig,
    dedupe: bool,
    max_n: usize,
) -> Result<ScanReport> {
    if n < 4 {
        return Err(Error::InvalidSize { what: "scan", n, min: 4 });
    }
    if n > max_n {
        return Err(Error::InvalidConfig(format!(
            "scan n = {n} exceeds the ceiling {max_n}"
        )));
    }
    cfg.validate()?;
    let lambda_fan = spectral_radius(&fan(n)?, cfg)?.lambda;
    let fan_class = Triangulation::fan(n, 0)?;

    let items: Vec<Triangulation> = enumerate_triangulations(n, dedupe).collect();
    let mut records: Vec<ScanRecord> = items
        .into_par_iter()
        .map(|t| {
            let canonical = t.canonical_form();
            let is_fan = canonical == fan_class;
            let (lambda, residual, iterations, error) = match spectral_radius(&t.to_hypergraph(), cfg) {
                Ok(res) => (res.lambda, res.residual, res.iterations, None),
                Err(e) => (f64::NAN, f64::NAN, 0, Some(e.to_string())),
            };
            ScanRecord {
                rank: 0,
                triangulation: t,
                canonical,
                lambda,
                gap_to_fan: lambda_fan - lambda,
                residual,
                iterations,
                is_fan,
                error,
            }
        })
        .collect();

    let ties = rank_records(&mut records);

    let mut classes: Vec<&Triangulation> = records.iter().map(|r| &r.canonical).collect();
    classes.sort();
    classes.dedup();
    let class_count = classes.len();

    let top_is_fan = records.first().is_some_and(|r| r.is_fan);
    let top_gap = records.first().and_then(|top| {
        records
            .iter()
            .find(|r| r.canonical != top.canonical && r.error.is_none())
            .map(|r| top.lambda - r.lambda)
    });
    let top_gap_exceeds_threshold = top_gap.is_some_and(|g| g > GAP_THRESHOLD);
    let violations = records
        .iter()
        .filter(|r| !r.is_fan && r.lambda > lambda_fan + VIOLATION_SLACK)
        .map(|r| r.rank)
        .collect();
    let failures = records.iter().filter(|r| r.error.is_some()).map(|r| r.rank).collect();
    let mixed_ties = ties
        .into_iter()
        .filter(|class| {
            let first = &records[class[0] - 1].canonical;
            class.iter().any(|&rank| &records[rank - 1].canonical != first)
        })
        .collect();

    Ok(ScanReport {
        n,
        dedupe,
        config: *cfg,
        lambda_fan,
        raw_count: triangulation_count(n) as usize,
        class_count,
        records,
        top_is_fan,
        top_gap,
        top_gap_exceeds_threshold,
        mixed_ties,
        violations,
        failures,
    })
}

/// Sorts by descending lambda, groups values within [`TIE_TOLERANCE`] of
/// the group's leader, orders each group by canonical form, and assigns
/// ranks. Failed rows go last. Returns the tie classes of successful rows
/// as rank lists.
fn rank_records(records: &mut [ScanRecord]) -> Vec<Vec<usize>> {
    records.sort_by(|a, b| {
        match (a.lambda.is_nan(), b.lambda.is_nan()) {
            (false, false) => b.lambda.total_cmp(&a.lambda),
            (x, y) => x.cmp(&y),
        }
        .then_with(|| a.canonical.cmp(&b.canonical))
        .then_with(|| a.triangulation.cmp(&b.triangulation))
    });
    let mut classes = Vec::new();
    let mut start = 0;
    while start < records.len() {
        let lead = records[start].lambda;
        let mut end = start + 1;
        while end < records.len()
            && (records[end].lambda.is_nan() == lead.is_nan())
            && (lead.is_nan() || lead - records[end].lambda < TIE_TOLERANCE)
        {
            end += 1;
        }
        records[start..end].sort_by(|a, b| {
            a.canonical
                .cmp(&b.canonical)
                .then_with(|| a.triangulation.cmp(&b.triangulation))
        });
        if !lead.is_nan() {
            classes.push((start + 1..=end).collect());
        }
        start = end;
    }
    for (i, r) in records.iter_mut().enumerate() {
        r.rank = i + 1;
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_and_pentagon_are_all_fans() {
        let cfg = SolverConfig::default();
        for (n, count) in [(4, 2), (5, 5)] {
            let report = extremal_scan(n, &cfg, false).unwrap();
            assert_eq!(report.records.len(), count);
            assert_eq!(report.class_count, 1);
            assert!(report.records.iter().all(|r| r.is_fan));
            let top = report.records[0].lambda;
            assert!(report.records.iter().all(|r| (r.lambda - top).abs() < 2.0 * cfg.tol));
            assert_eq!(report.top_gap, None);
            assert!(report.violations.is_empty());
        }
    }

    #[test]
    fn hexagon_classes() {
        let cfg = SolverConfig::default();
        let raw = extremal_scan(6, &cfg, false).unwrap();
        assert_eq!(raw.records.len(), 14);
        assert_eq!(raw.class_count, 3);
        let deduped = extremal_scan(6, &cfg, true).unwrap();
        assert_eq!(deduped.records.len(), 3);
        assert_eq!(
            deduped.records.iter().map(|r| r.rank).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
        assert!(deduped.records.windows(2).all(|w| w[0].lambda >= w[1].lambda));
    }

    #[test]
    fn range_checks() {
        let cfg = SolverConfig::default();
        assert!(extremal_scan(3, &cfg, false).is_err());
        assert!(extremal_scan(13, &cfg, true).is_err());
        assert!(extremal_scan_bounded(13, &cfg, true, 13).is_ok());
    }

    #[test]
    fn ranking_breaks_ties_by_canonical_form() {
        let cfg = SolverConfig::default();
        let report = extremal_scan(7, &cfg, false).unwrap();
        for w in report.records.windows(2) {
            assert!(w[0].lambda >= w[1].lambda - TIE_TOLERANCE);
            if (w[0].lambda - w[1].lambda).abs() < 1e-12 && w[0].canonical == w[1].canonical {
                assert!(w[0].triangulation < w[1].triangulation);
            }
        }
        // rotations of one class share a lambda and sit next to each other
        let reps = report.class_representatives();
        assert_eq!(reps.len(), report.class_count);
    }

    #[test]
    fn fan_solve_failure_is_an_error() {
        let cfg = SolverConfig {
            max_iter: 3,
            ..SolverConfig::default()
        };
        assert!(matches!(
            extremal_scan(6, &cfg, true),
            Err(Error::NotConverged { .. })
        ));
    }

    #[test]
    fn failed_rows_rank_last() {
        let row = |diag: &[(usize, usize)], lambda: f64| {
            let t = Triangulation::new(6, diag.iter().copied()).unwrap();
            ScanRecord {
                rank: 0,
                canonical: t.canonical_form(),
                triangulation: t,
                lambda,
                gap_to_fan: 0.0,
                residual: 0.0,
                iterations: 0,
                is_fan: false,
                error: lambda.is_nan().then(|| "failed".to_string()),
            }
        };
        let mut rows = vec![
            row(&[(0, 2), (0, 3), (0, 4)], f64::NAN),
            row(&[(1, 3), (3, 5), (1, 5)], 2.0),
            row(&[(0, 2), (2, 4), (0, 4)], 2.0 + 1e-10),
            row(&[(0, 2), (2, 5), (2, 4)], 3.0),
        ];
        let ties = rank_records(&mut rows);
        assert_eq!(rows[0].lambda, 3.0);
        // the two central-triangle rotations tie and are ordered by text
        assert_eq!(rows[1].triangulation.to_string(), "6; 0-2, 0-4, 2-4");
        assert_eq!(rows[2].triangulation.to_string(), "6; 1-3, 1-5, 3-5");
        assert!(rows[3].lambda.is_nan());
        assert_eq!(rows.iter().map(|r| r.rank).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(ties, vec![vec![1], vec![2, 3]]);
    }
}
