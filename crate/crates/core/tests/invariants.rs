use proptest::prelude::*;

use spectra_rho::census::canonical_form;
use spectra_rho::eigen::{gershgorin_intervals, in_union, sym_eigen};
use spectra_rho::family::{build, FamilySpec as F};
use spectra_rho::graph::{complement, delete_vertices, line_graph, Graph};
use spectra_rho::graph6;
use spectra_rho::quotient::{random_quotient_corpus, verify_hjoin_signless};
use spectra_rho::spectral::{
    cross_checked_spectrum, energy_of_spectrum, line_bridge, matrix_of, q_min, spectrum_of,
    MatrixKind,
};
use spectra_rho::spectrum::Spectrum;

const TOL: f64 = 1e-8;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn adjacency_desc(g: &Graph) -> Vec<f64> {
    spectrum_of(g, MatrixKind::Adjacency).expanded()
}

fn regular_corpus() -> Vec<Graph> {
    [
        F::Cycle(5),
        F::Cycle(6),
        F::Complete(5),
        F::CompleteBipartite(3, 3),
        F::Petersen,
        F::Hypercube(3),
        F::Circulant(8, vec![1, 4]),
        F::Circulant(12, vec![1, 6]),
        F::DisjointUnion(vec![F::Cycle(3), F::Cycle(3)]),
        F::Turan { n: 6, r: 3 },
        F::Line(Box::new(F::Complete(5))),
    ]
    .iter()
    .map(|s| build(s).unwrap())
    .collect()
}

fn without_one(values: &[f64], x: f64) -> Vec<f64> {
    let mut v = values.to_vec();
    let idx = v
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - x).abs().total_cmp(&(b.1 - x).abs()))
        .map(|(i, _)| i)
        .unwrap();
    v.remove(idx);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn least_eigenvalue_between_q_min_shifts(g in graph_strategy(9)) {
        let lmin = spectrum_of(&g, MatrixKind::Adjacency).min().unwrap();
        let q = q_min(&g).unwrap();
        let (delta, big_delta) = (g.min_degree().unwrap() as f64, g.max_degree().unwrap() as f64);
        prop_assert!(q - big_delta <= lmin + TOL);
        prop_assert!(lmin <= q - delta + TOL);
    }

    #[test]
    fn q_min_monotone_under_added_edge(g in graph_strategy(8), pick in any::<prop::sample::Index>()) {
        let missing: Vec<(usize, usize)> = (0..g.order())
            .flat_map(|i| (i + 1..g.order()).map(move |j| (i, j)))
            .filter(|&(i, j)| !g.has_edge(i, j))
            .collect();
        prop_assume!(!missing.is_empty());
        let mut edges = g.edges();
        edges.push(*pick.get(&missing));
        let sup = Graph::from_edges(g.order(), &edges).unwrap();
        prop_assert!(q_min(&g).unwrap() <= q_min(&sup).unwrap() + TOL);
    }

    #[test]
    fn q_min_drops_at_most_one_per_deleted_vertex(g in graph_strategy(9), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.order() >= 2);
        let v = pick.index(g.order());
        let gv = delete_vertices(&g, &[v]).unwrap();
        prop_assert!(q_min(&g).unwrap() - 1.0 <= q_min(&gv).unwrap() + TOL);
    }

    #[test]
    fn line_spectrum_from_signless_spectrum(g in graph_strategy(8)) {
        let bridge = line_bridge(&g, TOL).unwrap();
        prop_assert!(bridge.agree, "{:?}", bridge.max_deviation);
        prop_assert!(bridge.rule.holds, "{:?}", bridge.rule);
    }

    #[test]
    fn line_graph_eigenvalues_at_least_minus_2(g in graph_strategy(8)) {
        let l = line_graph(&g);
        if let Some(lmin) = spectrum_of(&l, MatrixKind::Adjacency).min() {
            prop_assert!(lmin >= -2.0 - TOL, "{lmin}");
        }
    }

    #[test]
    fn line_graph_min_degree(g in graph_strategy(9)) {
        prop_assume!(g.size() > 0);
        let non_isolated: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
        let delta = non_isolated.iter().map(|&v| g.degree(v)).min().unwrap();
        let l = line_graph(&g);
        prop_assert!(l.min_degree().unwrap() + 2 >= 2 * delta);
    }

    #[test]
    fn graph_with_complement_inequality(g in graph_strategy(9)) {
        let n = g.order();
        let a = adjacency_desc(&g);
        let c = adjacency_desc(&complement(&g));
        for j in 2..=n {
            prop_assert!(a[j - 1] + c[n - j + 1] <= -1.0 + TOL, "j = {j}");
        }
    }

    #[test]
    fn energy_from_either_sign(g in graph_strategy(9)) {
        let e = energy_of_spectrum(&spectrum_of(&g, MatrixKind::Adjacency));
        prop_assert!((e.via_positive - e.via_negative).abs() <= TOL * e.energy.max(1.0));
        prop_assert!((e.energy - e.via_positive).abs() <= TOL * e.energy.max(1.0));
    }

    #[test]
    fn trace_and_frobenius(g in graph_strategy(9)) {
        let two_m = 2.0 * g.size() as f64;
        let a = adjacency_desc(&g);
        prop_assert!(a.iter().sum::<f64>().abs() <= TOL * g.order() as f64);
        prop_assert!((a.iter().map(|x| x * x).sum::<f64>() - two_m).abs() <= 1e-7);
        for kind in [MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
            let s: f64 = spectrum_of(&g, kind).expanded().iter().sum();
            prop_assert!((s - two_m).abs() <= 1e-7);
        }
    }

    #[test]
    fn gershgorin_containment(g in graph_strategy(9)) {
        for kind in [MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
            let m = matrix_of(&g, kind);
            let discs = gershgorin_intervals(&m);
            for x in spectrum_of(&g, kind).expanded() {
                prop_assert!(in_union(&discs, x, TOL));
            }
        }
    }

    #[test]
    fn numeric_and_exact_spectra_agree(g in graph_strategy(9)) {
        for kind in [MatrixKind::Adjacency, MatrixKind::SignlessLaplacian] {
            let c = cross_checked_spectrum(&g, kind).unwrap();
            prop_assert!(c.agree, "{} vs {}", c.numeric, c.exact);
        }
    }

    #[test]
    fn minus_2_eigenvectors_orthogonal_to_ones(g in graph_strategy(7)) {
        let l = line_graph(&g);
        prop_assume!(l.order() > 0);
        let eig = sym_eigen(&matrix_of(&l, MatrixKind::Adjacency), true).unwrap();
        let vectors = eig.vectors.unwrap();
        for (value, y) in eig.values.iter().zip(&vectors) {
            if (value + 2.0).abs() < 1e-6 {
                prop_assert!(y.iter().sum::<f64>().abs() <= 1e-7);
            }
        }
    }

    #[test]
    fn graph6_round_trip_and_canonical_stability(g in graph_strategy(11), seed in any::<u64>()) {
        let code = graph6::encode(&g);
        let back = graph6::decode(&code).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        let mut perm: Vec<usize> = (0..g.order()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&g.permuted(&perm)).unwrap(), canonical_form(&back).unwrap());
    }
}

#[test]
fn regular_complement_pairing() {
    for g in regular_corpus() {
        let (n, r) = (g.order() as f64, g.regular_degree().unwrap() as f64);
        let mut predicted = vec![n - r - 1.0];
        predicted.extend(without_one(&adjacency_desc(&g), r).iter().map(|l| -1.0 - l));
        let computed = spectrum_of(&complement(&g), MatrixKind::Adjacency);
        let predicted = Spectrum::from_values(&predicted);
        assert!(
            predicted.approx_eq(&computed, TOL),
            "{}: {predicted} vs {computed}",
            g.label()
        );
    }
}

#[test]
fn regular_line_graph_spectrum() {
    for g in regular_corpus() {
        let r = g.regular_degree().unwrap() as f64;
        let mut predicted = vec![2.0 * r - 2.0];
        predicted.extend(
            without_one(&adjacency_desc(&g), r)
                .iter()
                .map(|l| l + r - 2.0),
        );
        predicted.extend(std::iter::repeat_n(-2.0, g.size() - g.order()));
        let computed = spectrum_of(&line_graph(&g), MatrixKind::Adjacency);
        let predicted = Spectrum::from_values(&predicted);
        assert!(
            predicted.approx_eq(&computed, TOL),
            "{}: {predicted} vs {computed}",
            g.label()
        );
    }
}

#[test]
fn eigenvector_orthogonal_to_ones_gives_complement_eigenvalue() {
    for g in regular_corpus().into_iter().chain([
        build(&F::Path(5)).unwrap(),
        build(&F::KaNP { n: 7, p: 3 }).unwrap(),
    ]) {
        let eig = sym_eigen(&matrix_of(&g, MatrixKind::Adjacency), true).unwrap();
        let comp = spectrum_of(&complement(&g), MatrixKind::Adjacency);
        for (value, y) in eig.values.iter().zip(eig.vectors.as_ref().unwrap()) {
            let shared = eig.spectrum.multiplicity_near(*value, 1e-6) > 1;
            if shared || y.iter().sum::<f64>().abs() < 1e-9 {
                assert!(
                    comp.multiplicity_near(-1.0 - value, 1e-6) > 0,
                    "{} lambda {value}",
                    g.label()
                );
            }
        }
    }
}

#[test]
fn seeded_random_hjoins_have_equal_quotient_spectra() {
    for seed in [1, 2] {
        for r in random_quotient_corpus(seed, 50).unwrap() {
            assert!(r.pass, "{:?}: {:?}", r.inputs, r.failures());
        }
    }
    assert_eq!(
        serde_json::to_string(&random_quotient_corpus(5, 3).unwrap()).unwrap(),
        serde_json::to_string(&random_quotient_corpus(5, 3).unwrap()).unwrap()
    );
}

#[test]
fn signless_assembly_on_joins() {
    let k2 = build(&F::Complete(2)).unwrap();
    let c4 = build(&F::Cycle(4)).unwrap();
    let p3 = build(&F::Path(3)).unwrap();
    for (pattern, parts) in [
        (k2.clone(), vec![k2.clone(), c4.clone()]),
        (
            p3,
            vec![
                c4.clone(),
                build(&F::Complete(3)).unwrap(),
                build(&F::Cycle(5)).unwrap(),
            ],
        ),
        (
            build(&F::Cycle(4)).unwrap(),
            vec![k2.clone(), c4.clone(), k2, c4],
        ),
    ] {
        let r = verify_hjoin_signless(&pattern, &parts).unwrap();
        assert!(r.pass, "{:?}", r.failures());
    }
}
