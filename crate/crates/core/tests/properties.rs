//! Structural property suites beyond the acceptance criteria: the extremal
//! family's behavior across the full parameter space, clique forcing on
//! random closed graphs, reference graph6 encodings, and cross-cutting
//! bounds.

mod common;

use rand::Rng;

use fcrit_core::closure::l_closure;
use fcrit_core::connectivity::{is_t_connected, vertex_connectivity};
use fcrit_core::graph6::to_graph6;
use fcrit_core::invariants::{independence_number, is_extremal, lemma8_check};
use fcrit_core::matching::{is_k_factor_critical, max_matching};
use fcrit_core::spectral::spectral_radius;
use fcrit_core::verify::{derive_seed, random_t_connected};
use fcrit_core::ExtremalParams;

use common::*;

/// Reference encodings produced by an independent graph6 implementation on
/// the same fixed vertex layout.
#[test]
fn extremal_graph6_matches_reference_encoder() {
    let g17 = ExtremalParams::new(17, 1, 1).unwrap().construct();
    assert_eq!(to_graph6(&g17), "P~~~~~~~~~~~~~~~~~~~~_??");
    let g25 = ExtremalParams::new(25, 2, 1).unwrap().construct();
    assert_eq!(
        to_graph6(&g25),
        "X~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~w???o???"
    );
}

/// Every valid parameter triple with n ≤ 60 yields a non-critical
/// construction, and any k hub vertices witness the failure.
#[test]
fn extremal_family_hub_witness_across_parameter_space() {
    for n in 3..=60usize {
        for t in 1..=n {
            for k in 1..=t {
                let Ok(p) = ExtremalParams::new(n, t, k) else {
                    continue;
                };
                let g = p.construct();
                let verdict = is_k_factor_critical(&g, k).unwrap();
                assert!(!verdict.is_critical, "{p:?}");
                let witness = verdict.witness.unwrap();
                assert!(witness.iter().all(|&v| v < t), "{p:?}: {witness:?}");
                // deleting the last k hub vertices (not the reported
                // witness) strands the independent set on too few shared
                // neighbors just the same
                let hub: Vec<usize> = (t - k..t).collect();
                assert!(
                    !deletion_leaves_pm(&g, &hub),
                    "{p:?}: hub deletion should kill the perfect matching"
                );
            }
        }
    }

    fn deletion_leaves_pm(g: &fcrit_core::Graph, removed: &[usize]) -> bool {
        let h = g.induced_without(removed);
        2 * max_matching(&h).len() == h.n()
    }
}

/// The quotient value clears the clique floor for every valid parameter
/// triple with n ≤ 60, with the stated slack.
#[test]
fn quotient_rho_floor_across_parameter_space() {
    use fcrit_core::spectral::extremal_quotient_rho;
    for n in 3..=60usize {
        for t in 1..=n {
            for k in 1..=t {
                let Ok(p) = ExtremalParams::new(n, t, k) else {
                    continue;
                };
                let floor = (n + k - t - 2) as f64;
                let rho = extremal_quotient_rho(&p);
                assert!(rho > floor + 1e-9, "{p:?}: rho = {rho}, floor = {floor}");
            }
        }
    }
}

/// The recognizer and the connectivity value hold across the same space.
#[test]
fn extremal_family_recognizer_and_kappa_sampled() {
    for n in [20usize, 41] {
        for t in 1..=n {
            for k in 1..=t {
                let Ok(p) = ExtremalParams::new(n, t, k) else {
                    continue;
                };
                let g = p.construct();
                assert!(is_extremal(&g, &p), "{p:?}");
                assert!(is_t_connected(&g, t), "{p:?}");
                assert!(!is_t_connected(&g, t + 1), "{p:?}");
            }
        }
    }
}

/// Clique forcing on generated t-connected closed graphs above the edge
/// threshold: 200 accepted samples must all pass.
#[test]
fn clique_forcing_on_random_closed_graphs() {
    let mut accepted = 0usize;
    let mut seed = 0u64;
    while accepted < 200 {
        seed += 1;
        let (t, k) = [(1usize, 1usize), (2, 1), (2, 2)][(seed % 3) as usize];
        let n = ExtremalParams::min_order_thm4(t, k);
        let p = ExtremalParams::new(n, t, k).unwrap();
        let threshold = p.thm4_threshold();
        // aim just above the threshold, then close
        let backbone = random_t_connected(n, t, 0, derive_seed(0xF0, &[seed])).unwrap();
        let surplus = (threshold + 1 + seed % 20).saturating_sub(backbone.edge_count() as u64);
        let g = random_t_connected(n, t, surplus as usize, derive_seed(0xF1, &[seed])).unwrap();
        let (closed, _) = l_closure(&g, n + k - 1);
        if (closed.edge_count() as u64) <= threshold {
            continue;
        }
        let report = lemma8_check(&closed, t, k);
        if !report.hypotheses_met {
            continue;
        }
        assert_eq!(
            report.pass,
            Some(true),
            "clique forcing failed on {} (t = {t}, k = {k}): {report:?}",
            to_graph6(&closed)
        );
        accepted += 1;
    }
}

/// κ(G) ≤ δ(G) and the matching validity invariants on random graphs.
#[test]
fn connectivity_and_matching_bounds_on_randoms() {
    let mut rng = seeded_rng(0xB0);
    for _ in 0..500 {
        let n = rng.gen_range(1..=14usize);
        let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
        let kappa = vertex_connectivity(&g).kappa;
        assert!(kappa <= g.min_degree().unwrap_or(0).max(n.saturating_sub(1)));
        if n >= 2 {
            assert!(kappa <= g.min_degree().unwrap());
        }
        let m = max_matching(&g);
        assert!(m.is_valid_for(&g));
    }
}

/// α via complement-clique equals the independent-set oracle on small
/// graphs (the definitional bridge, exact search on both sides).
#[test]
fn alpha_equals_complement_clique_on_small_graphs() {
    let mut rng = seeded_rng(0xA1FA);
    for _ in 0..400 {
        let n = rng.gen_range(0..=10usize);
        let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
        assert_eq!(independence_number(&g), brute_alpha(&g));
    }
}

/// Spectral radius lies in [0, n−1] on random connected graphs.
#[test]
fn spectral_radius_range_on_randoms() {
    let mut rng = seeded_rng(0x5BEC);
    for _ in 0..200 {
        let n = rng.gen_range(1..=30usize);
        let g = random_connected_graph(n, rng.gen_range(0.2..0.9), &mut rng);
        let est = spectral_radius(&g, 1e-10).unwrap();
        assert!(est.rho >= 0.0);
        assert!(est.rho <= (n as f64 - 1.0) + 1e-9);
        assert!(est.residual <= 1e-10);
    }
}
