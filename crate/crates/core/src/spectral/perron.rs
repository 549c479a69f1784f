use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{apply_into, r_norm_pow};
use crate::error::{Error, Result};
use crate::hypercore::{shadow, UniformHypergraph};

/// Settings for the shifted power iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Stop once the Collatz-Wielandt bracket is narrower than this.
    pub tol: f64,
    pub max_iter: usize,
    /// Diagonal shift added to each iterate; subtracted from the reported
    /// values.
    pub shift: f64,
    /// Seed for the perturbation of the uniform starting vector.
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 1_000_000,
            shift: 1.0,
            seed: 0,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidConfig(format!("tol must be positive, got {}", self.tol)));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidConfig("max_iter must be at least 1".into()));
        }
        if !(self.shift >= 0.0 && self.shift.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "shift must be non-negative, got {}",
                self.shift
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SolverConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tol={:e} max_iter={} shift={} seed={}",
            self.tol, self.max_iter, self.shift, self.seed
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// `sum_i x_i^r = 1`.
    UnitRNorm,
    /// Largest entry equal to one.
    MaxEntryOne,
}

impl Normalization {
    pub fn as_str(self) -> &'static str {
        match self {
            Normalization::UnitRNorm => "unit-r-norm",
            Normalization::MaxEntryOne => "max-entry-one",
        }
    }
}

/// Spectral radius estimate together with its certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct PerronResult {
    pub lambda: f64,
    /// Perron vector of the winning component, zero elsewhere.
    pub vector: Vec<f64>,
    pub bracket_low: f64,
    pub bracket_high: f64,
    pub residual: f64,
    pub iterations: usize,
    pub normalization: Normalization,
    /// Uniformity of the hypergraph the result belongs to.
    pub r: usize,
    /// Vertices of the component achieving `lambda`.
    pub component: Vec<usize>,
    /// Set when the hypergraph has no edges; `lambda` is then 0 and the
    /// vector is zero.
    pub degenerate: bool,
}

impl PerronResult {
    /// Rescales the vector; the residual scales along with `x^{r-1}`.
    pub fn with_normalization(&self, normalization: Normalization) -> PerronResult {
        let scale = match normalization {
            Normalization::UnitRNorm => {
                let norm = r_norm_pow(&self.vector, self.r);
                if norm > 0.0 {
                    norm.powf(-1.0 / self.r as f64)
                } else {
                    1.0
                }
            }
            Normalization::MaxEntryOne => {
                let max = self.vector.iter().copied().fold(0.0, f64::max);
                if max > 0.0 {
                    1.0 / max
                } else {
                    1.0
                }
            }
        };
        PerronResult {
            vector: self.vector.iter().map(|v| v * scale).collect(),
            residual: self.residual * scale.powi(self.r as i32 - 1),
            normalization,
            ..self.clone()
        }
    }
}

/// Collatz-Wielandt bracket `(min_i, max_i)` of `(A x^{r-1})_i / x_i^{r-1}`
/// for an entrywise positive `x`.
pub fn collatz_wielandt(h: &UniformHypergraph, x: &[f64]) -> Result<(f64, f64)> {
    if x.len() != h.n() {
        return Err(Error::LengthMismatch {
            expected: h.n(),
            got: x.len(),
        });
    }
    if x.iter().any(|&v| !(v > 0.0 && v.is_finite())) {
        return Err(Error::InvalidVector);
    }
    let mut ax = vec![0.0; h.n()];
    apply_into(h, x, &mut ax);
    Ok(bracket(&ax, x, h.r()))
}

fn bracket(ax: &[f64], x: &[f64], r: usize) -> (f64, f64) {
    let p = r as i32 - 1;
    ax.iter()
        .zip(x)
        .map(|(&y, &xi)| y / xi.powi(p))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), q| (lo.min(q), hi.max(q)))
}

struct ComponentSolution {
    lambda: f64,
    x: Vec<f64>,
    low: f64,
    high: f64,
    residual: f64,
    iterations: usize,
}

/// Shifted power iteration on one connected hypergraph with positive start.
fn solve_connected(h: &UniformHypergraph, mut x: Vec<f64>, cfg: &SolverConfig) -> Result<ComponentSolution> {
    let r = h.r();
    let p = r as i32 - 1;
    let root = 1.0 / (r as f64 - 1.0);
    let normalize = |x: &mut [f64]| {
        let s = r_norm_pow(x, r).powf(-1.0 / r as f64);
        x.iter_mut().for_each(|v| *v *= s);
    };
    normalize(&mut x);
    let mut ax = vec![0.0; h.n()];
    let (mut low, mut high) = (0.0, f64::INFINITY);
    for iteration in 1..=cfg.max_iter {
        apply_into(h, &x, &mut ax);
        (low, high) = bracket(&ax, &x, r);
        if high - low < cfg.tol {
            let dot: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
            let lambda = (dot / r_norm_pow(&x, r)).clamp(low, high);
            let residual = x
                .iter()
                .zip(&ax)
                .map(|(&xi, &yi)| (lambda * xi.powi(p) - yi).abs())
                .fold(0.0, f64::max);
            return Ok(ComponentSolution {
                lambda,
                x,
                low,
                high,
                residual,
                iterations: iteration,
            });
        }
        for (xi, &yi) in x.iter_mut().zip(&ax) {
            let y = yi + cfg.shift * xi.powi(p);
            *xi = if r == 3 { y.sqrt() } else { y.powf(root) };
        }
        normalize(&mut x);
    }
    Err(Error::NotConverged {
        iterations: cfg.max_iter,
        low,
        high,
    })
}

/// Spectral radius of `h` by shifted power iteration on each connected
/// component of the shadow. Returns the largest component value with the
/// vector supported on that component, in unit r-norm.
pub fn spectral_radius(h: &UniformHypergraph, cfg: &SolverConfig) -> Result<PerronResult> {
    cfg.validate()?;
    let n = h.n();
    let r = h.r();
    if h.edge_count() == 0 {
        return Ok(PerronResult {
            lambda: 0.0,
            vector: vec![0.0; n],
            bracket_low: 0.0,
            bracket_high: 0.0,
            residual: 0.0,
            iterations: 0,
            normalization: Normalization::UnitRNorm,
            r,
            component: Vec::new(),
            degenerate: true,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let start: Vec<f64> = (0..n).map(|_| 1.0 + 1e-3 * rng.gen::<f64>()).collect();

    let mut best: Option<(Vec<usize>, ComponentSolution)> = None;
    let mut local = vec![usize::MAX; n];
    for comp in shadow(h).components() {
        if comp.len() < r {
            continue;
        }
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let edges = h
            .edges()
            .filter(|e| comp.binary_search(&e[0]).is_ok())
            .map(|e| e.iter().map(|&v| local[v]).collect::<Vec<_>>());
        let sub = UniformHypergraph::new(comp.len(), r, edges)?;
        let x0 = comp.iter().map(|&v| start[v]).collect();
        let solution = solve_connected(&sub, x0, cfg)?;
        if best.as_ref().is_none_or(|(_, b)| solution.lambda > b.lambda) {
            best = Some((comp, solution));
        }
    }
    let (component, sol) = best.expect("a hypergraph with edges has a nontrivial component");
    let mut vector = vec![0.0; n];
    for (i, &v) in component.iter().enumerate() {
        vector[v] = sol.x[i];
    }
    Ok(PerronResult {
        lambda: sol.lambda,
        vector,
        bracket_low: sol.low,
        bracket_high: sol.high,
        residual: sol.residual,
        iterations: sol.iterations,
        normalization: Normalization::UnitRNorm,
        r,
        component,
        degenerate: false,
    })
}
