use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hyperfan::io::{read_hypergraph, write_hypergraph, write_scan_csv};
use hyperfan::outerplanar::{dual_tree, is_outerplanar_hypergraph, random_triangulation};
use hyperfan::spectral::{eigen_residual, rayleigh};
use hyperfan::verify::{extremal_scan, flip_transform};
use hyperfan::{spectral_radius, SolverConfig, Triangulation};

fn triangulation(n: usize, seed: u64) -> Triangulation {
    random_triangulation(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dihedral_images_share_canonical_form(n in 4usize..14, seed: u64, offset in 0usize..14, reflect: bool) {
        let t = triangulation(n, seed);
        let image = t.transformed(offset % n, reflect);
        prop_assert_eq!(image.canonical_form(), t.canonical_form());
        prop_assert!(t.canonical_form() <= t);
    }

    #[test]
    fn triangulations_are_recognized(n in 3usize..16, seed: u64) {
        let t = triangulation(n, seed);
        let h = t.to_hypergraph();
        prop_assert_eq!(h.edge_count(), n - 2);
        prop_assert_eq!(t.shadow().edge_count(), 2 * n - 3);
        let rep = is_outerplanar_hypergraph(&h).unwrap();
        prop_assert!(rep.ok && rep.maximal);
        prop_assert_eq!(rep.outer_cycle, Some((0..n).collect::<Vec<_>>()));
        let dual = dual_tree(&t);
        prop_assert!(dual.is_tree());
    }

    #[test]
    fn text_forms_round_trip(n in 3usize..16, seed: u64) {
        let t = triangulation(n, seed);
        prop_assert_eq!(t.to_string().parse::<Triangulation>().unwrap(), t.clone());
        let h = t.to_hypergraph();
        let text = write_hypergraph(&h, &["x".into()]);
        prop_assert_eq!(read_hypergraph(&text).unwrap(), h);
    }

    #[test]
    fn perron_pair_certifies_itself(n in 3usize..14, seed: u64) {
        let h = triangulation(n, seed).to_hypergraph();
        let cfg = SolverConfig::default();
        let res = spectral_radius(&h, &cfg).unwrap();
        prop_assert!(res.bracket_low <= res.lambda && res.lambda <= res.bracket_high);
        prop_assert!(res.bracket_high - res.bracket_low <= cfg.tol * res.lambda.max(1.0) * 1.0001);
        prop_assert!(eigen_residual(&h, res.lambda, &res.vector).unwrap() < 1e-8);
        // any positive vector gives a lower bound
        let probe: Vec<f64> = (0..n).map(|i| 1.0 + (i as f64 * 0.37).sin().abs()).collect();
        prop_assert!(rayleigh(&h, &probe).unwrap() <= res.lambda + 1e-9);
    }

    #[test]
    fn flips_stay_maximal_outerplanar(n in 6usize..11, seed: u64) {
        let t = triangulation(n, seed);
        let h = t.to_hypergraph();
        for v0 in 0..n {
            for v1 in [(v0 + 1) % n, (v0 + n - 1) % n] {
                for v2 in 0..n {
                    if let Ok(out) = flip_transform(&h, &t, v0, v1, v2) {
                        prop_assert_eq!(out.hypergraph.edge_count(), n - 2);
                        let rep = is_outerplanar_hypergraph(&out.hypergraph).unwrap();
                        prop_assert!(rep.ok && rep.maximal);
                        prop_assert!(dual_tree(&out.triangulation).is_tree());
                    }
                }
            }
        }
    }
}

#[test]
fn scan_bytes_do_not_depend_on_thread_count() {
    let cfg = SolverConfig::default();
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| write_scan_csv(&extremal_scan(9, &cfg, false).unwrap(), &[cfg.to_string()]))
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(4));
    assert_eq!(one.lines().filter(|l| !l.starts_with('#')).count(), 1 + 429);
}
