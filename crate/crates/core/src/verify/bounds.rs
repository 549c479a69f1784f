use crate::error::{Error, Result};
use crate::outerplanar::fan;
use crate::spectral::{spectral_radius, SolverConfig};

/// Slack allowed when comparing a computed spectral radius with the fan
/// lower bound.
pub const BOUND_SLACK: f64 = 1e-9;

/// `cbrt(4(n-1)) * (1 - 1/(n-1))`, the value of the fan polynomial at the
/// witness vector with hub entry `3^{-1/3}` and rim entries
/// `(2 / (3(n-1)))^{1/3}`.
pub fn fan_lower_bound(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidSize {
            what: "fan lower bound",
            n,
            min: 3,
        });
    }
    let m = (n - 1) as f64;
    Ok((4.0 * m).cbrt() * (1.0 - 1.0 / m))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub lambda_fan: f64,
    pub bound: f64,
    /// `lambda_fan / cbrt(4n)`.
    pub ratio_to_cbrt4n: f64,
    pub ok: bool,
}

/// Solves for the fan's spectral radius and compares it with the bound.
pub fn check_fan_bound(n: usize, cfg: &SolverConfig) -> Result<BoundReport> {
    let bound = fan_lower_bound(n)?;
    let lambda_fan = spectral_radius(&fan(n)?, cfg)?.lambda;
    Ok(BoundReport {
        n,
        lambda_fan,
        bound,
        ratio_to_cbrt4n: lambda_fan / (4.0 * n as f64).cbrt(),
        ok: lambda_fan >= bound - BOUND_SLACK,
    })
}

/// One [`check_fan_bound`] row per `n`; failures stay in their row.
pub fn asymptotic_table(ns: &[usize], cfg: &SolverConfig) -> Vec<Result<BoundReport>> {
    ns.iter().map(|&n| check_fan_bound(n, cfg)).collect()
}

/// True when each ratio is at least the previous one minus `noise`.
pub fn ratios_nondecreasing(reports: &[BoundReport], noise: f64) -> bool {
    reports
        .windows(2)
        .all(|w| w[1].ratio_to_cbrt4n >= w[0].ratio_to_cbrt4n - noise)
}
