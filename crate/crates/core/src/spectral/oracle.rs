//! Independent estimate of the spectral radius from the variational form
//! `lambda = max P_H(x)` over the nonnegative unit r-norm sphere, by
//! projected gradient ascent. It shares only the operator with the power
//! iteration and is meant as a cross-check on small inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{apply_into, r_norm_pow};
use crate::hypercore::UniformHypergraph;

const ORACLE_SEED: u64 = 0x0bad_5eed;

fn poly(h: &UniformHypergraph, x: &[f64]) -> f64 {
    let s: f64 = h.edges().map(|e| e.iter().map(|&v| x[v]).product::<f64>()).sum();
    h.r() as f64 * s
}

fn project_to_sphere(x: &mut [f64], r: usize) -> bool {
    let norm = r_norm_pow(x, r);
    if norm.is_nan() || norm <= 0.0 {
        return false;
    }
    let s = norm.powf(-1.0 / r as f64);
    x.iter_mut().for_each(|v| *v *= s);
    true
}

/// Best value of `P_H` found on the nonnegative unit r-norm sphere from
/// `restarts` random positive starts, each running at most `steps`
/// accepted-or-rejected gradient steps with an adaptive step size.
pub fn brute_force_lambda(h: &UniformHypergraph, restarts: usize, steps: usize) -> f64 {
    if h.edge_count() == 0 {
        return 0.0;
    }
    let n = h.n();
    let r = h.r();
    let p = r as i32 - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let mut best = 0.0f64;
    let mut grad = vec![0.0; n];
    let mut cand = vec![0.0; n];
    for _ in 0..restarts.max(1) {
        let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..1.0)).collect();
        project_to_sphere(&mut x, r);
        let mut value = poly(h, &x);
        let mut step = 0.1;
        for _ in 0..steps {
            apply_into(h, &x, &mut grad);
            // tangent part of the gradient r * A x^{r-1}; the sphere normal
            // at x is x^{[r-1]}
            let normal: Vec<f64> = x.iter().map(|v| v.powi(p)).collect();
            let gn: f64 = grad.iter().zip(&normal).map(|(g, m)| g * m).sum();
            let nn: f64 = normal.iter().map(|m| m * m).sum();
            let coef = gn / nn;
            for i in 0..n {
                let g = r as f64 * (grad[i] - coef * normal[i]);
                cand[i] = (x[i] + step * g).max(0.0);
            }
            if !project_to_sphere(&mut cand, r) {
                step *= 0.5;
                continue;
            }
            let v = poly(h, &cand);
            if v > value {
                std::mem::swap(&mut x, &mut cand);
                value = v;
                step *= 1.5;
            } else {
                step *= 0.5;
                if step < 1e-18 {
                    break;
                }
            }
        }
        best = best.max(value);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::{enumerate_triangulations, fan};
    use crate::spectral::{spectral_radius, SolverConfig};

    #[test]
    fn single_edge() {
        let h = UniformHypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert!((brute_force_lambda(&h, 5, 2000) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn fan4_matches_lagrange_value() {
        let v = brute_force_lambda(&fan(4).unwrap(), 10, 5000);
        assert!((v - 2f64.powf(2.0 / 3.0)).abs() < 1e-6);
    }

    #[test]
    fn agrees_with_solver_on_pentagon() {
        let cfg = SolverConfig::default();
        for t in enumerate_triangulations(5, false) {
            let h = t.to_hypergraph();
            let lambda = spectral_radius(&h, &cfg).unwrap().lambda;
            assert!((brute_force_lambda(&h, 10, 5000) - lambda).abs() < 1e-6, "{t}");
        }
    }

    #[test]
    fn empty_hypergraph() {
        assert_eq!(brute_force_lambda(&UniformHypergraph::empty(3, 3).unwrap(), 3, 10), 0.0);
    }
}
