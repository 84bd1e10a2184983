//! Acceptance suite: one test per criterion, each asserting at the stated
//! tolerance and printing a pass line (visible with `--nocapture`).
//!
//! Run with `cargo test -p fcrit-core --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use rand::Rng;

use fcrit_core::closure::{closure_degree_condition, l_closure, lemma2_equivalence};
use fcrit_core::connectivity::vertex_connectivity;
use fcrit_core::graph6::{parse_graph6, to_graph6};
use fcrit_core::invariants::{clique_number, favaron_condition, independence_number, is_extremal};
use fcrit_core::matching::{is_k_factor_critical, max_matching};
use fcrit_core::spectral::{extremal_quotient_rho, hong_bound, spectral_radius};
use fcrit_core::verify::{
    search_counterexample, CampaignConfig, SurplusSpec, TheoremKind,
};
use fcrit_core::{ExtremalParams, Graph};

use common::*;

/// The (t, k) grid of criteria 1–3: all pairs with 1 ≤ k ≤ t ≤ 5, each at
/// the smallest parity-correct order meeting the edge-condition bound, plus
/// the next two parity-correct orders.
fn golden_grid() -> Vec<ExtremalParams> {
    let mut grid = Vec::new();
    for t in 1..=5usize {
        for k in 1..=t {
            let n0 = ExtremalParams::min_order_thm4(t, k);
            for n in [n0, n0 + 2, n0 + 4] {
                grid.push(ExtremalParams::new(n, t, k).expect("grid parameters are valid"));
            }
        }
    }
    grid
}

#[test]
fn criterion_01_extremal_family_golden_suite() {
    let start = Instant::now();
    for p in golden_grid() {
        let (n, t, k) = (p.n(), p.t(), p.k());
        let g = p.construct();
        assert_eq!(g.n(), n, "vertex count at {p:?}");
        assert_eq!(
            g.edge_count() as u64,
            p.extremal_edge_count(),
            "edge formula at {p:?}"
        );
        assert_eq!(clique_number(&g).omega, n + k - t - 1, "omega at {p:?}");
        assert_eq!(independence_number(&g), t - k + 2, "alpha at {p:?}");
        assert_eq!(vertex_connectivity(&g).kappa, t, "kappa at {p:?}");
        let verdict = is_k_factor_critical(&g, k).unwrap();
        assert!(!verdict.is_critical, "criticality at {p:?}");
        let witness = verdict.witness.expect("non-parity failure carries a witness");
        assert_eq!(witness.len(), k);
        assert!(
            witness.iter().all(|&v| v < t),
            "witness {witness:?} must sit inside the hub [0, {t}) at {p:?}"
        );
        assert!(is_extremal(&g, &p), "recognizer at {p:?}");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "golden suite exceeded its runtime target: {elapsed:?}"
    );
    println!("acceptance criterion 1 (extremal-family golden suite): PASS in {elapsed:?}");
}

#[test]
fn criterion_02_threshold_inequality() {
    for p in golden_grid() {
        assert!(
            p.extremal_edge_count() > p.thm4_threshold(),
            "threshold inequality fails at {p:?}: {} vs {}",
            p.extremal_edge_count(),
            p.thm4_threshold()
        );
    }
    println!("acceptance criterion 2 (edge count exceeds threshold, exact): PASS");
}

#[test]
fn criterion_03_quotient_rho_floor_and_power_iteration_agreement() {
    for p in golden_grid() {
        let floor = (p.n() + p.k() - p.t() - 2) as f64;
        let rho = extremal_quotient_rho(&p);
        assert!(
            rho > floor + 1e-9,
            "quotient rho {rho} does not clear {floor} at {p:?}"
        );
    }
    // independent computations agree up to order 200
    for t in 1..=5usize {
        for k in 1..=t {
            let n0 = ExtremalParams::min_order_thm4(t, k);
            let mut orders = vec![n0];
            for target in [100usize, 200] {
                let n = if target % 2 == k % 2 { target } else { target - 1 };
                if n > n0 {
                    orders.push(n);
                }
            }
            for n in orders {
                let p = ExtremalParams::new(n, t, k).unwrap();
                let est = spectral_radius(&p.construct(), 1e-10).unwrap();
                let quot = extremal_quotient_rho(&p);
                assert!(
                    (est.rho - quot).abs() <= 1e-8,
                    "power iteration {} vs quotient {} at {p:?}",
                    est.rho,
                    quot
                );
            }
        }
    }
    println!("acceptance criterion 3 (quotient rho floor + power-iteration agreement): PASS");
}

#[test]
fn criterion_04_closure_criticality_equivalence() {
    let mut rng = seeded_rng(0x4C45_4D4D_4132);
    let mut checked = 0usize;
    while checked < 1000 {
        let n = rng.gen_range(4..=10usize);
        let p = rng.gen_range(0.25..0.85);
        let g = random_connected_graph(n, p, &mut rng);
        for k in [1usize, 2] {
            if k + 2 > n {
                continue;
            }
            let (closed, _) = l_closure(&g, n + k - 1);
            let direct = brute_is_k_factor_critical(&g, k);
            let through_closure = brute_is_k_factor_critical(&closed, k);
            assert_eq!(
                direct, through_closure,
                "closure equivalence fails on {} with k = {k}",
                to_graph6(&g)
            );
            // the library decision must match the oracle on both sides
            assert_eq!(
                is_k_factor_critical(&g, k).unwrap().is_critical,
                direct,
                "library verdict diverges from oracle on {}",
                to_graph6(&g)
            );
            assert_eq!(
                is_k_factor_critical(&closed, k).unwrap().is_critical,
                through_closure
            );
            // and the packaged equivalence harness must agree with itself
            let report = lemma2_equivalence(&g, k).unwrap();
            assert!(report.equivalent, "harness mismatch on {}", to_graph6(&g));
            assert_eq!(report.input_verdict.is_critical, direct);
        }
        checked += 1;
    }
    println!("acceptance criterion 4 (closure preserves criticality, 1000 graphs): PASS");
}

#[test]
fn criterion_05_closure_well_definedness() {
    let mut rng = seeded_rng(0xC10);
    for _ in 0..100 {
        let n = rng.gen_range(3..=12usize);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(n, p, &mut rng);
        let l = rng.gen_range(0..=2 * n);
        let (closed, _) = l_closure(&g, l);
        for _ in 0..10 {
            let other = closure_random_order(&g, l, &mut rng);
            assert_eq!(
                other,
                closed,
                "processing order changed the closure of {} at l = {l}",
                to_graph6(&g)
            );
        }
        let (again, trace) = l_closure(&closed, l);
        assert_eq!(again, closed, "closure is not idempotent");
        assert!(trace.added.is_empty());
    }
    println!("acceptance criterion 5 (closure order-independence + idempotence): PASS");
}

#[test]
fn criterion_06_independence_bound_implies_criticality() {
    let mut rng = seeded_rng(0xFA7A);
    let mut hits = 0usize;
    let mut attempts = 0usize;
    while hits < 2000 {
        attempts += 1;
        assert!(
            attempts < 200_000,
            "sampling stalled: {hits} qualifying graphs after {attempts} attempts"
        );
        let n = rng.gen_range(4..=12usize);
        let g = random_graph(n, rng.gen_range(0.55..0.95), &mut rng);
        let t = brute_kappa(&g);
        if t == 0 {
            continue;
        }
        let alpha = brute_alpha(&g);
        if t + 1 < alpha {
            continue;
        }
        // largest parity-correct k with alpha ≤ t − k + 1
        let mut k = t + 1 - alpha;
        if k % 2 != n % 2 {
            if k == 0 {
                continue;
            }
            k -= 1;
        }
        if k > n {
            continue;
        }
        assert!(
            favaron_condition(&g, k, t),
            "condition should hold by construction on {} (t = {t}, k = {k})",
            to_graph6(&g)
        );
        let verdict = is_k_factor_critical(&g, k).unwrap();
        assert!(
            verdict.is_critical,
            "sufficient condition violated on {} (t = {t}, k = {k}, witness {:?})",
            to_graph6(&g),
            verdict.witness
        );
        hits += 1;
    }
    println!("acceptance criterion 6 (independence-number condition, 2000 graphs): PASS");
}

#[test]
fn criterion_07_edge_bound_on_spectral_radius() {
    let mut rng = seeded_rng(0x4846);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=40usize);
        let g = random_connected_graph(n, rng.gen_range(0.15..0.9), &mut rng);
        let est = spectral_radius(&g, 1e-10).unwrap();
        let bound = hong_bound(&g);
        assert!(
            est.rho <= bound + 1e-9,
            "edge bound violated on {}: rho = {}, bound = {bound}",
            to_graph6(&g),
            est.rho
        );
    }
    for n in 2..=50usize {
        let g = Graph::complete(n);
        let est = spectral_radius(&g, 1e-10).unwrap();
        assert!(
            (est.rho - hong_bound(&g)).abs() <= 1e-9,
            "equality fails on K_{n}"
        );
    }
    println!("acceptance criterion 7 (edge bound on rho, 1000 graphs + equality on K_n): PASS");
}

#[test]
fn criterion_08_strict_spectral_monotonicity() {
    let mut rng = seeded_rng(0x104E);
    let mut pairs = 0usize;
    while pairs < 200 {
        let n = rng.gen_range(4..=24usize);
        let h = random_connected_graph(n, rng.gen_range(0.3..0.8), &mut rng);
        let edges = h.edges();
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        let mut g = h.clone();
        g.remove_edge(u, v).unwrap();
        if !g.is_connected() {
            continue;
        }
        let rho_g = spectral_radius(&g, 1e-12).unwrap().rho;
        let rho_h = spectral_radius(&h, 1e-12).unwrap().rho;
        assert!(
            rho_h - rho_g > 1e-12,
            "strict monotonicity fails removing ({u}, {v}) from {}: {rho_g} vs {rho_h}",
            to_graph6(&h)
        );
        pairs += 1;
    }
    println!("acceptance criterion 8 (strict spectral monotonicity, 200 pairs): PASS");
}

#[test]
fn criterion_09_matching_and_connectivity_oracles() {
    // matching: complete enumeration over every graph on at most 6 vertices
    for n in 0..=6usize {
        for g in all_graphs(n) {
            let m = max_matching(&g);
            assert!(m.is_valid_for(&g));
            assert_eq!(
                m.len(),
                brute_matching_size(&g),
                "matching size differs on {}",
                to_graph6(&g)
            );
        }
    }
    // matching: 2000 random graphs on up to 8 vertices
    let mut rng = seeded_rng(0x4D41);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=8usize);
        let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
        assert_eq!(max_matching(&g).len(), brute_matching_size(&g));
    }
    // connectivity: every graph on at most 5 vertices, then ≥ 10^5 random
    // graphs on 6 and 7 vertices
    for n in 0..=5usize {
        for g in all_graphs(n) {
            assert_eq!(vertex_connectivity(&g).kappa, brute_kappa(&g));
        }
    }
    let mut rng = seeded_rng(0x4B41);
    for i in 0..100_000usize {
        let n = 6 + (i % 2);
        let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
        let result = vertex_connectivity(&g);
        assert_eq!(
            result.kappa,
            brute_kappa(&g),
            "kappa differs on {}",
            to_graph6(&g)
        );
        if let Some(sep) = &result.separator {
            assert_eq!(sep.len(), result.kappa);
            assert!(!connected_oracle(&g.induced_without(sep)));
        }
    }
    println!("acceptance criterion 9 (matching + connectivity oracle equivalence): PASS");
}

#[test]
fn criterion_10_falsification_campaigns() {
    let start = Instant::now();
    let edge_campaign = CampaignConfig {
        t_range: (1, 3),
        k_range: None,
        n_offsets: vec![0],
        samples_per_cell: 500,
        seed: 0x7431,
        surplus: SurplusSpec::Straddle { below: 5, above: 25 },
        theorems: vec![TheoremKind::Thm4],
        include_extremal: true,
    };
    let spectral_campaign = CampaignConfig {
        t_range: (1, 3),
        k_range: None,
        n_offsets: vec![0],
        samples_per_cell: 500,
        seed: 0x7435,
        surplus: SurplusSpec::Dense { min: 0, max: 8 },
        theorems: vec![TheoremKind::Thm5],
        include_extremal: true,
    };
    for cfg in [&edge_campaign, &spectral_campaign] {
        let reports = search_counterexample(cfg).unwrap();
        assert_eq!(reports.len(), 1);
        let report = &reports[0];
        assert_eq!(report.cells.len(), 6, "cells for t ≤ 3, k ≤ t, minimum n");
        assert_eq!(
            report.violations, 0,
            "{:?} campaign found violations: {:?}",
            report.theorem,
            report
                .cells
                .iter()
                .map(|c| c.seeds_of_violations.clone())
                .collect::<Vec<_>>()
        );
        for cell in &report.cells {
            assert_eq!(cell.counts.violation, 0);
            assert_eq!(
                cell.extremal_check,
                Some(fcrit_core::verify::Conclusion::ExtremalException),
                "extremal graph misclassified in cell (t={}, k={}, n={})",
                cell.t,
                cell.k,
                cell.n
            );
        }
        // the grid actually exercises the theorems
        let critical_total: usize = report.cells.iter().map(|c| c.counts.critical).sum();
        assert!(critical_total > 0, "{:?} campaign never met its hypotheses", report.theorem);
        // seed replay reproduces the report byte for byte
        let replay = search_counterexample(cfg).unwrap();
        assert_eq!(
            serde_json::to_string(&reports).unwrap(),
            serde_json::to_string(&replay).unwrap(),
            "campaign replay is not byte-identical"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(600),
        "campaigns exceeded their runtime target: {elapsed:?}"
    );
    println!("acceptance criterion 10 (falsification campaigns, zero violations): PASS in {elapsed:?}");
}

#[test]
fn criterion_support_graph6_round_trip_bulk() {
    // round-trip identity on 10000 random graphs up to order 30
    let mut rng = seeded_rng(0x67_36);
    for _ in 0..10_000 {
        let n = rng.gen_range(0..=30usize);
        let g = random_graph(n, rng.gen_range(0.0..1.0), &mut rng);
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }
    println!("acceptance support (graph6 round-trip, 10000 graphs): PASS");
}

#[test]
fn criterion_support_closure_condition_on_outputs() {
    // the closure output certifies itself via the degree condition
    let mut rng = seeded_rng(0xC04D);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=12usize);
        let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
        let l = rng.gen_range(0..=2 * n);
        let (closed, _) = l_closure(&g, l);
        assert!(closure_degree_condition(&closed, l));
    }
    println!("acceptance support (degree condition on 1000 closure outputs): PASS");
}
