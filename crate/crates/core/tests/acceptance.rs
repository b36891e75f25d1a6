//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the lines are printed on every run; exits non-zero if any
//! criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spectra_rho::census::{
    enumerate_connected, find_line_rho_graphs, min_order_connected_complement, named_matches,
    NAMED_HITS,
};
use spectra_rho::eigen::{exact_spectrum, gershgorin_intervals, in_union, sym_eigen};
use spectra_rho::family::{build, FamilySpec as F};
use spectra_rho::graph::{complement, independence_number, line_graph, Graph};
use spectra_rho::matrix::DenseMatrix;
use spectra_rho::quotient::random_quotient_corpus;
use spectra_rho::report::TheoremReport;
use spectra_rho::spectral::{energy_of_spectrum, inertia, line_bridge, spectrum_of, MatrixKind};
use spectra_rho::theorems::{self, ebd_spectrum_law, equienergetic_pair};

type Outcome = Result<String, String>;

fn g(spec: F) -> Graph {
    build(&spec).expect("valid family")
}

fn k2() -> Graph {
    g(F::Complete(2))
}

fn require(report: &TheoremReport) -> Result<(), String> {
    if report.pass {
        Ok(())
    } else {
        Err(format!(
            "{} {:?}: hypothesis={} failures={:?}",
            report.theorem_id,
            report.inputs,
            report.hypothesis_check,
            report.failures()
        ))
    }
}

fn turan_printed_spectra() -> Outcome {
    let r = theorems::check_turan_printed_q_spectra().map_err(|e| e.to_string())?;
    require(&r)?;
    let worst = r
        .residuals
        .iter()
        .filter(|(k, _)| k.ends_with("signless_spectrum"))
        .map(|(_, v)| v.value)
        .fold(0.0, f64::max);
    Ok(format!("4 spectra, worst deviation {worst:.1e} <= 5e-4"))
}

fn kan_quotient() -> Outcome {
    for n in 6..=12 {
        let r = theorems::check_kan_rho(n, n - 4, 1).map_err(|e| e.to_string())?;
        require(&r)?;
        for key in ["Q_pi_spectrum", "signless_spectrum"] {
            let res = r
                .residuals
                .get(key)
                .ok_or(format!("n={n}: missing {key}"))?;
            if !(res.ok() && res.tolerance <= 1e-8) {
                return Err(format!("n={n}: {key} residual {:e}", res.value));
            }
        }
        if r.checks.get("Q_pi_entrywise") != Some(&true) {
            return Err(format!("n={n}: quotient matrix differs"));
        }
    }
    Ok("n = 6..12 quotient, closed-form roots and full signless spectrum".into())
}

fn random_hjoin_quotients() -> Outcome {
    let reports = random_quotient_corpus(2024, 100).map_err(|e| e.to_string())?;
    for r in &reports {
        require(r)?;
    }
    Ok(format!(
        "{} seeded joins (seed 2024), A/L/Q exact vs symmetric",
        reports.len()
    ))
}

fn line_bridge_census() -> Outcome {
    let mut count = 0;
    for n in 1..=7 {
        for gr in enumerate_connected(n).map_err(|e| e.to_string())? {
            let b = line_bridge(&gr, 1e-8).map_err(|e| e.to_string())?;
            if !b.agree || !b.rule.holds {
                return Err(format!(
                    "{}: deviation {:?}, rule {:?}",
                    spectra_rho::graph6::encode(&gr),
                    b.max_deviation,
                    b.rule
                ));
            }
            count += 1;
        }
    }
    Ok(format!("{count} connected graphs of order <= 7"))
}

fn census() -> Outcome {
    let hits = find_line_rho_graphs(6).map_err(|e| e.to_string())?;
    if hits.len() != 13 {
        return Err(format!("{} hits of order <= 6, expected 13", hits.len()));
    }
    let named = named_matches(&hits).map_err(|e| e.to_string())?;
    if named.len() != NAMED_HITS.len() {
        return Err(format!(
            "only {} of the named graphs found: {named:?}",
            named.len()
        ));
    }
    if hits.iter().any(|e| e.complement_connected) {
        return Err("an order <= 6 hit has connected complement".into());
    }
    let m = min_order_connected_complement().map_err(|e| e.to_string())?;
    if m.order != Some(7) || m.witnesses.len() != 1 {
        return Err(format!(
            "least order {:?} with {} witnesses",
            m.order,
            m.witnesses.len()
        ));
    }
    Ok(format!(
        "13 hits incl. 7 named; least order 7, witness {}",
        m.witnesses[0].graph6
    ))
}

fn rho_theorems() -> Outcome {
    let reports = [
        theorems::check_iterated_rho_edge_degree(&g(F::Caterpillar(vec![4, 3, 4])), 2),
        theorems::check_iterated_rho_min_degree(&g(F::Petersen), 2),
        theorems::check_hjoin_line_rho(&k2(), &[k2(), g(F::Cycle(6))], 2, &[]),
        theorems::check_path_join_rho(3, 3, 2),
        theorems::check_kan_rho(8, 2, 1),
        theorems::check_turan_rho(5, 10, 1),
        theorems::check_min_deg4_rho(&g(F::CompleteMultipartite(vec![2, 2, 2])), 2),
        theorems::check_das_iterated(&g(F::Complete(6)), 2),
        theorems::check_regular_complement_rho(&g(F::Petersen), 1),
        theorems::check_complement_line_regular_rho(&g(F::Hypercube(3)), 1),
    ];
    let mut energies = 0;
    for r in reports {
        let r = r.map_err(|e| e.to_string())?;
        require(&r)?;
        let energy: Vec<_> = r
            .residuals
            .iter()
            .filter(|(k, _)| k.ends_with(".energy"))
            .collect();
        if energy.is_empty() {
            return Err(format!(
                "{} {:?}: no energy residual",
                r.theorem_id, r.inputs
            ));
        }
        energies += energy.len();
    }
    Ok(format!(
        "10 checks, {energies} energy residuals within 1e-6 n_k"
    ))
}

fn complement_structure() -> Outcome {
    for spec in [F::Complete(6), F::CompleteMultipartite(vec![2, 2, 2])] {
        let r = theorems::check_complement_structure(&g(spec), 2).map_err(|e| e.to_string())?;
        require(&r)?;
        for k in 1..=2 {
            if r.checks.get(&format!("L{k}.two_positive_eigenvalues")) != Some(&true)
                || !r.residuals.contains_key(&format!("L{k}.complement_energy"))
            {
                return Err(format!("{:?}: level {k} not checked", r.inputs));
            }
        }
    }
    Ok("K_6 and K_{2,2,2}, k = 1, 2".into())
}

fn ebd_energies() -> Outcome {
    for (spec, want) in [(F::Complete(4), 20.0), (F::Complete(6), 66.0)] {
        let base = g(spec);
        let r = theorems::check_ebd_energies(&base, 1).map_err(|e| e.to_string())?;
        require(&r)?;
        let ebd = spectra_rho::graph::extended_bipartite_double(&line_graph(&base));
        let e = energy_of_spectrum(&spectrum_of(&ebd, MatrixKind::Adjacency)).energy;
        if (e - want).abs() > 1e-6 {
            return Err(format!("{}: Ebd energy {e}, expected {want}", base.label()));
        }
    }
    let mut count = 0;
    for n in 1..=6 {
        for gr in enumerate_connected(n).map_err(|e| e.to_string())? {
            let (predicted, computed) = ebd_spectrum_law(&gr);
            if !predicted.approx_eq(&computed, 1e-8) {
                return Err(format!(
                    "{}: {predicted} vs {computed}",
                    spectra_rho::graph6::encode(&gr)
                ));
            }
            count += 1;
        }
    }
    Ok(format!(
        "energies 20 and 66; spectrum law on {count} graphs"
    ))
}

fn equienergetic_pair_check() -> Outcome {
    let (a, b) = equienergetic_pair().map_err(|e| e.to_string())?;
    let energy = |h: &Graph| energy_of_spectrum(&spectrum_of(h, MatrixKind::Adjacency)).energy;
    let (la, lb) = (line_graph(&a), line_graph(&b));
    let d_line = (energy(&la) - energy(&lb)).abs();
    let d_comp = (energy(&complement(&la)) - energy(&complement(&lb))).abs();
    let sa = spectrum_of(&a, MatrixKind::Adjacency).expanded();
    let sb = spectrum_of(&b, MatrixKind::Adjacency).expanded();
    let gap = sa
        .iter()
        .zip(&sb)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    if d_line > 1e-6 || d_comp > 1e-6 || gap <= 1e-3 {
        return Err(format!(
            "line gap {d_line:e}, complement gap {d_comp:e}, spectral gap {gap}"
        ));
    }
    Ok(format!(
        "energy gaps {d_line:.1e}, {d_comp:.1e}; eigenvalue gap {gap:.3}"
    ))
}

fn independence_bounds() -> Outcome {
    let hits = find_line_rho_graphs(6).map_err(|e| e.to_string())?;
    for e in &hits {
        let l = line_graph(&e.graph);
        let neg = inertia(&spectrum_of(&l, MatrixKind::Adjacency)).negative;
        let a_line = independence_number(&l).map_err(|e| e.to_string())?;
        let a_comp = independence_number(&complement(&l)).map_err(|e| e.to_string())?;
        if a_line > e.order || a_comp > neg + 1 {
            return Err(format!(
                "{}: alpha(L) = {a_line} vs {}, alpha(complement) = {a_comp} vs {}",
                e.graph6,
                e.order,
                neg + 1
            ));
        }
    }
    Ok(format!(
        "{} census graphs, exact independence numbers",
        hits.len()
    ))
}

fn eigensolver_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..200 {
        let dim = rng.gen_range(1..=10);
        let mut rows = vec![vec![0i64; dim]; dim];
        for i in 0..dim {
            for j in i..dim {
                let v = rng.gen_range(-6..=6);
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        let m = DenseMatrix::from_int_rows(&rows);
        let eig = sym_eigen(&m, true).map_err(|e| e.to_string())?;
        let exact = exact_spectrum(&m).map_err(|e| e.to_string())?;
        if !eig.spectrum.approx_eq(&exact, 1e-8) {
            return Err(format!("trial {trial}: {} vs {exact}", eig.spectrum));
        }
        let discs = gershgorin_intervals(&m);
        if !eig.values.iter().all(|&x| in_union(&discs, x, 1e-8)) {
            return Err(format!(
                "trial {trial}: eigenvalue outside Gershgorin union"
            ));
        }
        let norm = m.frobenius_norm();
        for (value, v) in eig.values.iter().zip(eig.vectors.as_ref().unwrap()) {
            let mv = m.mul_vec(v);
            let res = mv
                .iter()
                .zip(v)
                .map(|(a, b)| (a - value * b).powi(2))
                .sum::<f64>()
                .sqrt();
            if res > 1e-8 * norm.max(1.0) {
                return Err(format!("trial {trial}: eigenvector residual {res:e}"));
            }
        }
    }
    Ok("200 seeded matrices (seed 11), dimension <= 10".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 11] = [
        (
            "turan signless spectra match printed values",
            turan_printed_spectra,
            Duration::from_secs(1),
        ),
        (
            "Ka_n(n-4) quotient and closed-form spectrum",
            kan_quotient,
            Duration::from_secs(1),
        ),
        (
            "random H-join quotient spectra agree",
            random_hjoin_quotients,
            Duration::from_secs(10),
        ),
        (
            "line spectrum from signless spectrum on census",
            line_bridge_census,
            Duration::from_secs(300),
        ),
        (
            "census of line graphs with the -2 property",
            census,
            Duration::from_secs(300),
        ),
        (
            "iterated line graph property checks",
            rho_theorems,
            Duration::from_secs(60),
        ),
        (
            "complement positive eigenvalues and energy",
            complement_structure,
            Duration::from_secs(60),
        ),
        (
            "extended bipartite double energies",
            ebd_energies,
            Duration::from_secs(60),
        ),
        (
            "equienergetic non-cospectral pair",
            equienergetic_pair_check,
            Duration::from_secs(60),
        ),
        (
            "independence number bounds",
            independence_bounds,
            Duration::from_secs(60),
        ),
        (
            "eigensolver oracle agreement",
            eigensolver_oracles,
            Duration::from_secs(60),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *budget => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name} ({elapsed:.2?}): {detail}",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
