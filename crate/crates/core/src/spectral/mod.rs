//! Adjacency-tensor operator and the polynomial form of a uniform
//! hypergraph.
//!
//! The tensor is never materialized. For an `r`-uniform hypergraph,
//! `(A x^{r-1})_i` is the sum over hyperedges `e` containing `i` of the
//! product of the other `r - 1` entries of `x`, and
//! `P_H(x) = r * sum_e prod_{j in e} x_j`.

mod oracle;
mod perron;

pub use oracle::brute_force_lambda;
pub use perron::{collatz_wielandt, spectral_radius, Normalization, PerronResult, SolverConfig};

use crate::error::{Error, Result};
use crate::hypercore::UniformHypergraph;

fn check_len(h: &UniformHypergraph, x: &[f64]) -> Result<()> {
    if x.len() == h.n() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            expected: h.n(),
            got: x.len(),
        })
    }
}

/// Writes `A x^{r-1}` into `out` (overwriting). Lengths must already match.
pub(crate) fn apply_into(h: &UniformHypergraph, x: &[f64], out: &mut [f64]) {
    out.iter_mut().for_each(|o| *o = 0.0);
    if h.r() == 3 {
        for e in h.edges() {
            let (a, b, c) = (e[0], e[1], e[2]);
            out[a] += x[b] * x[c];
            out[b] += x[a] * x[c];
            out[c] += x[a] * x[b];
        }
        return;
    }
    let r = h.r();
    let mut prefix = vec![1.0; r + 1];
    for e in h.edges() {
        for k in 0..r {
            prefix[k + 1] = prefix[k] * x[e[k]];
        }
        let mut suffix = 1.0;
        for k in (0..r).rev() {
            out[e[k]] += prefix[k] * suffix;
            suffix *= x[e[k]];
        }
    }
}

/// `(A x^{r-1})_i` for every vertex `i`.
pub fn apply_adjacency(h: &UniformHypergraph, x: &[f64]) -> Result<Vec<f64>> {
    check_len(h, x)?;
    let mut out = vec![0.0; h.n()];
    apply_into(h, x, &mut out);
    Ok(out)
}

/// `P_H(x) = r * sum over hyperedges of the product of their entries`.
pub fn poly_eval(h: &UniformHypergraph, x: &[f64]) -> Result<f64> {
    check_len(h, x)?;
    let sum: f64 = h
        .edges()
        .map(|e| e.iter().map(|&v| x[v]).product::<f64>())
        .sum();
    Ok(h.r() as f64 * sum)
}

/// `sum_i |x_i|^r`.
pub fn r_norm_pow(x: &[f64], r: usize) -> f64 {
    x.iter().map(|v| v.abs().powi(r as i32)).sum()
}

/// `P_H(x) / ||x||_r^r` for a nonnegative, nonzero `x`. Never exceeds the
/// spectral radius.
pub fn rayleigh(h: &UniformHypergraph, x: &[f64]) -> Result<f64> {
    check_len(h, x)?;
    if x.iter().any(|&v| v < 0.0 || !v.is_finite()) || x.iter().all(|&v| v == 0.0) {
        return Err(Error::InvalidVector);
    }
    Ok(poly_eval(h, x)? / r_norm_pow(x, h.r()))
}

/// Largest eigenequation defect `|lambda x_i^{r-1} - (A x^{r-1})_i|` over
/// the positive entries of `x`.
pub fn eigen_residual(h: &UniformHypergraph, lambda: f64, x: &[f64]) -> Result<f64> {
    let ax = apply_adjacency(h, x)?;
    let p = (h.r() - 1) as i32;
    Ok(x
        .iter()
        .zip(&ax)
        .filter(|(&xi, _)| xi > 0.0)
        .map(|(&xi, &yi)| (lambda * xi.powi(p) - yi).abs())
        .fold(0.0, f64::max))
}
