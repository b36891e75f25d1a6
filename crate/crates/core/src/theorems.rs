//! Executable checks of the line-graph results: one function per result,
//! each returning a [`TheoremReport`], plus a registry that runs every check
//! on a default corpus.
//!
//! A check first evaluates its hypothesis. If the hypothesis fails the report
//! is returned without testing the conclusion. Predictions come from closed
//! forms; computed values come from the eigensolvers on constructed graphs.

use rayon::prelude::*;

use crate::eigen::exact_spectrum;
use crate::error::Result;
use crate::family::{build, FamilySpec as F};
use crate::graph::{
    complement, delete_vertices, extended_bipartite_double, h_join, independence_at_most,
    independence_number, line_graph, Graph, DEFAULT_GROWTH_CAP, DEFAULT_INDEPENDENCE_CAP,
};
use crate::quotient::{
    coarsest_equitable_partition, quotient_matrices, verify_hjoin_signless,
    verify_quotient_spectra_equal, Partition,
};
use crate::report::TheoremReport;
use crate::spectral::{
    energy_of_spectrum, inertia, is_hyperenergetic, rho_of_spectrum, spectrum_of, MatrixKind,
    HYPERENERGETIC_GUARD, RHO_TOL,
};
use crate::spectrum::Spectrum;

/// Energy residuals are compared against `ENERGY_REL_TOL * n_k`.
pub const ENERGY_REL_TOL: f64 = 1e-6;
/// Closed-form spectra against numeric spectra.
pub const SPECTRUM_TOL: f64 = 1e-8;
/// Four-decimal values printed in the literature.
pub const PRINTED_TOL: f64 = 5e-4;

pub mod ids {
    pub const ITERATED_RHO_EDGE_DEGREE: &str = "iterated-rho-edge-degree";
    pub const ITERATED_RHO_MIN_DEGREE: &str = "iterated-rho-min-degree";
    pub const HJOIN_LINE_RHO: &str = "hjoin-line-rho";
    pub const VERTEX_DELETION_RHO: &str = "vertex-deletion-rho";
    pub const PATH_JOIN_RHO: &str = "path-join-rho";
    pub const KAN_QUOTIENT_RHO: &str = "kan-quotient-rho";
    pub const MIN_DEGREE_FOUR_RHO: &str = "min-degree-four-rho";
    pub const DENSE_ITERATED_RHO: &str = "dense-iterated-rho";
    pub const TURAN_RHO: &str = "turan-rho";
    pub const TURAN_PRINTED_Q_SPECTRA: &str = "turan-printed-q-spectra";
    pub const REGULAR_COMPLEMENT_RHO: &str = "regular-complement-rho";
    pub const COMPLEMENT_LINE_REGULAR_RHO: &str = "complement-line-regular-rho";
    pub const HYPERENERGETIC_ITERATED: &str = "hyperenergetic-iterated";
    pub const COMPLEMENT_STRUCTURE: &str = "complement-structure";
    pub const EQUIENERGETIC_COMPLEMENT_IFF: &str = "equienergetic-complement-iff";
    pub const COMPLEMENT_HYPERENERGETIC: &str = "complement-hyperenergetic";
    pub const EBD_ENERGIES: &str = "ebd-energies";
    pub const INDEPENDENCE_BOUNDS: &str = "independence-bounds";
    pub const QUOTIENT_SPECTRA_EQUAL: &str = "quotient-spectra-equal";
    pub const HJOIN_SIGNLESS_ASSEMBLY: &str = "hjoin-signless-assembly";
}

/// Every check id, in suite order.
pub const THEOREM_IDS: [&str; 20] = [
    ids::QUOTIENT_SPECTRA_EQUAL,
    ids::HJOIN_SIGNLESS_ASSEMBLY,
    ids::ITERATED_RHO_EDGE_DEGREE,
    ids::ITERATED_RHO_MIN_DEGREE,
    ids::HJOIN_LINE_RHO,
    ids::VERTEX_DELETION_RHO,
    ids::PATH_JOIN_RHO,
    ids::KAN_QUOTIENT_RHO,
    ids::MIN_DEGREE_FOUR_RHO,
    ids::DENSE_ITERATED_RHO,
    ids::TURAN_RHO,
    ids::TURAN_PRINTED_Q_SPECTRA,
    ids::REGULAR_COMPLEMENT_RHO,
    ids::COMPLEMENT_LINE_REGULAR_RHO,
    ids::HYPERENERGETIC_ITERATED,
    ids::COMPLEMENT_STRUCTURE,
    ids::EQUIENERGETIC_COMPLEMENT_IFF,
    ids::COMPLEMENT_HYPERENERGETIC,
    ids::EBD_ENERGIES,
    ids::INDEPENDENCE_BOUNDS,
];

fn adjacency(g: &Graph) -> Spectrum {
    spectrum_of(g, MatrixKind::Adjacency)
}

/// `L^0 .. L^k_max`, stopping early (with a note) at the growth cap.
fn build_levels(r: &mut TheoremReport, g: &Graph, k_max: usize) -> Vec<Graph> {
    let mut levels = vec![g.clone()];
    while levels.len() <= k_max {
        let last = levels.last().expect("non-empty");
        if last.size() > DEFAULT_GROWTH_CAP {
            r.note(format!(
                "levels {}..={k_max} skipped: order {} exceeds growth cap {DEFAULT_GROWTH_CAP}",
                levels.len(),
                last.size()
            ));
            break;
        }
        let next = line_graph(last);
        levels.push(next);
    }
    r.computed(
        "growth",
        levels
            .iter()
            .map(|l| (l.order(), l.size()))
            .collect::<Vec<_>>(),
    );
    levels
}

/// Property check at levels `from..`, with the energy prediction
/// `4 (n_k - n_{k-1})` when `with_energy` is set.
fn check_rho_levels(r: &mut TheoremReport, levels: &[Graph], from: usize, with_energy: bool) {
    let mut checked = 0;
    for k in from.max(1)..levels.len() {
        let lk = &levels[k];
        let sp = adjacency(lk);
        let verdict = rho_of_spectrum(&sp);
        r.check(format!("L{k}.rho_holds"), verdict.holds && !verdict.vacuous);
        r.computed(format!("L{k}.rho"), &verdict);
        if with_energy {
            let nk = lk.order() as f64;
            let predicted = 4.0 * (nk - levels[k - 1].order() as f64);
            let e = energy_of_spectrum(&sp).energy;
            r.predicted(format!("L{k}.energy"), predicted);
            r.computed(format!("L{k}.energy"), e);
            r.residual(
                format!("L{k}.energy"),
                (e - predicted).abs(),
                ENERGY_REL_TOL * nk,
            );
        }
        checked += 1;
    }
    r.check("some_level_checked", checked > 0);
}

fn edge_degree_hypothesis(r: &mut TheoremReport, g: &Graph) -> bool {
    let s = g.min_edge_degree_sum();
    r.computed("min_edge_degree_sum", s);
    r.hypothesis("edge_degree_sum_at_least_6", s.is_some_and(|s| s >= 6))
}

/// Edge-degree condition `d_u + d_v >= 6` gives the property for `L^k`,
/// `k >= 2`, with energy `4 (n_k - n_{k-1})`.
pub fn check_iterated_rho_edge_degree(g: &Graph, k_max: usize) -> Result<TheoremReport> {
    let mut r = TheoremReport::new(ids::ITERATED_RHO_EDGE_DEGREE, vec![g.label()]);
    if edge_degree_hypothesis(&mut r, g) {
        let levels = build_levels(&mut r, g, k_max);
        check_rho_levels(&mut r, &levels, 2, true);
    }
    Ok(r.finish())
}

/// Minimum degree at least 3 gives the property for `L^k`, `k >= 2`.
pub fn check_iterated_rho_min_degree(g: &Graph, k_max: usize) -> Result<TheoremReport> {
    let mut r = TheoremReport::new(ids::ITERATED_RHO_MIN_DEGREE, vec![g.label()]);
    r.computed("min_degree", g.min_degree());
    if r.hypothesis(
        "min_degree_at_least_3",
        g.min_degree().is_some_and(|d| d >= 3),
    ) {
        let levels = build_levels(&mut r, g, k_max);
        check_rho_levels(&mut r, &levels, 2, true);
    }
    Ok(r.finish())
}

fn join_hypothesis(
    r: &mut TheoremReport,
    pattern: &Graph,
    parts: &[Graph],
    min_degree: usize,
) -> bool {
    let connected = r.hypothesis(
        "pattern_connected_order_at_least_2",
        pattern.order() >= 2 && pattern.is_connected(),
    );
    let arity = r.hypothesis(
        "one_part_per_pattern_vertex",
        parts.len() == pattern.order(),
    );
    let degrees: Vec<Option<usize>> = parts.iter().map(Graph::regular_degree).collect();
    r.computed("part_degrees", &degrees);
    let regular = r.hypothesis(
        &format!("parts_regular_degree_at_least_{min_degree}"),
        degrees.iter().all(|d| d.is_some_and(|d| d >= min_degree)),
    );
    connected && arity && regular
}

/// Line graphs of an H-join with connected pattern and regular parts of
/// degree at least 1 have the property for `k >= 1`. Adding `extra_edges`
/// to the join keeps it for the line graph, with energy `4 (m' - n)`.
pub fn check_hjoin_line_rho(
    pattern: &Graph,
    parts: &[Graph],
    k_max: usize,
    extra_edges: &[(usize, usize)],
) -> Result<TheoremReport> {
    let mut inputs = vec![pattern.label()];
    inputs.extend(parts.iter().map(Graph::label));
    let mut r = TheoremReport::new(ids::HJOIN_LINE_RHO, inputs);
    if !join_hypothesis(&mut r, pattern, parts, 1) {
        return Ok(r.finish());
    }
    let g = h_join(pattern, parts)?.graph;
    let levels = build_levels(&mut r, &g, k_max);
    check_rho_levels(&mut r, &levels, 1, true);

    if !extra_edges.is_empty() {
        let fresh = extra_edges
            .iter()
            .all(|&(u, v)| u != v && u.max(v) < g.order() && !g.has_edge(u, v));
        if r.hypothesis("extra_edges_are_non_edges", fresh) {
            let mut edges = g.edges();
            edges.extend_from_slice(extra_edges);
            let sup = Graph::from_edges(g.order(), &edges)?;
            let sp = adjacency(&line_graph(&sup));
            let verdict = rho_of_spectrum(&sp);
            r.check(
                "supergraph.line_rho_holds",
                verdict.holds && !verdict.vacuous,
            );
            let predicted = 4.0 * (sup.size() as f64 - sup.order() as f64);
            let e = energy_of_spectrum(&sp).energy;
            r.computed("supergraph.order_size", (sup.order(), sup.size()));
            r.predicted("supergraph.line_energy", predicted);
            r.computed("supergraph.line_energy", e);
            r.residual(
                "supergraph.line_energy",
                (e - predicted).abs(),
                ENERGY_REL_TOL * sup.size() as f64,
            );
        }
    }
    Ok(r.finish())
}

/// Deletion set: `count` vertices taken one per part in turn, lowest id first.
pub fn cyclic_deletion_set(blocks: &[Vec<usize>], count: usize) -> Vec<usize> {
    let mut cursor = vec![0; blocks.len()];
    let mut out = Vec::with_capacity(count);
    let mut b = 0;
    while out.len() < count && blocks.iter().zip(&cursor).any(|(bl, &c)| c < bl.len()) {
        if cursor[b] < blocks[b].len() {
            out.push(blocks[b][cursor[b]]);
            cursor[b] += 1;
        }
        b = (b + 1) % blocks.len();
    }
    out
}

/// Deleting one vertex (`s = 1`) or `2 (s - 1)` vertices (`s >= 2`) from an
/// H-join with parts of degree at least 2 keeps the property for `L^k`.
///
/// For `s >= 2` every part must have degree at least `s` and order at least
/// `min{2 r_j : r_j >= s}`. When `s = 1` and the join has at most 12
/// vertices, every single-vertex deletion is checked at `k = 1` as well.
pub fn check_vertex_deletion_rho(
    pattern: &Graph,
    parts: &[Graph],
    s: usize,
    k_max: usize,
) -> Result<TheoremReport> {
    let mut inputs = vec![pattern.label()];
    inputs.extend(parts.iter().map(Graph::label));
    inputs.push(format!("s={s}"));
    let mut r = TheoremReport::new(ids::VERTEX_DELETION_RHO, inputs);
    let base = join_hypothesis(&mut r, pattern, parts, 2);
    let s_ok = r.hypothesis("s_at_least_1", s >= 1);
    if !(base && s_ok) {
        return Ok(r.finish());
    }
    if s >= 2 {
        let degrees: Vec<usize> = parts.iter().filter_map(Graph::regular_degree).collect();
        let threshold = degrees.iter().filter(|&&d| d >= s).map(|d| 2 * d).min();
        let ok = degrees.iter().all(|&d| d >= s)
            && threshold.is_some_and(|t| parts.iter().all(|p| p.order() >= t));
        r.computed("part_order_threshold", threshold);
        if !r.hypothesis("multi_deletion_size_condition", ok) {
            return Ok(r.finish());
        }
    }
    let hj = h_join(pattern, parts)?;
    let count = if s == 1 { 1 } else { 2 * (s - 1) };
    let removed = cyclic_deletion_set(&hj.blocks, count);
    r.computed("deleted_vertices", &removed);
    let g = delete_vertices(&hj.graph, &removed)?;
    let levels = build_levels(&mut r, &g, k_max);
    check_rho_levels(&mut r, &levels, 1, true);

    if s == 1 && hj.graph.order() <= 12 {
        let all = (0..hj.graph.order()).all(|v| {
            let gv = delete_vertices(&hj.graph, &[v]).expect("vertex in range");
            rho_of_spectrum(&adjacency(&line_graph(&gv))).holds
        });
        r.check("every_single_deletion.L1.rho_holds", all);
    }
    Ok(r.finish())
}

/// `L^k(K_2[P_n, P_m])` has the property for `n, m >= 3`.
pub fn check_path_join_rho(n: usize, m: usize, k_max: usize) -> Result<TheoremReport> {
    let mut r = TheoremReport::new(
        ids::PATH_JOIN_RHO,
        vec![format!("hjoin(k(2); p({n}), p({m}))")],
    );
    if r.hypothesis("n_and_m_at_least_3", n >= 3 && m >= 3) {
        let g = h_join(
            &build(&F::Complete(2))?,
            &[build(&F::Path(n))?, build(&F::Path(m))?],
        )?
        .graph;
        let levels = build_levels(&mut r, &g, k_max);
        check_rho_levels(&mut r, &levels, 1, true);
    }
    Ok(r.finish())
}

/// Blocks `{v}`, `N(v)`, rest for `Ka_n(p)` with `v = 0`, matching the
/// pattern `P_3[K_1, K_3, K_{n-4}]` when `p = n - 4`.
pub fn kan_role_partition(n: usize, p: usize) -> Result<Partition> {
    Partition::new(n, vec![vec![0], (p + 1..n).collect(), (1..=p).collect()])
}

/// Quotient of `Ka_n(n-4)`, its closed-form spectrum, the full signless
/// spectrum, and the property for `L^k(Ka_n(p))`.
pub fn check_kan_rho(n: usize, p: usize, k_max: usize) -> Result<TheoremReport> {
    let mut r = TheoremReport::new(ids::KAN_QUOTIENT_RHO, vec![format!("kanp({n},{p})")]);
    let n_ok = r.hypothesis("n_at_least_6", n >= 6);
    let p_ok = r.hypothesis("p_between_1_and_n_minus_4", p >= 1 && p + 4 <= n);
    if !(n_ok && p_ok) {
        return Ok(r.finish());
    }
    let nf = n as f64;
    let ka = build(&F::KaNP { n, p: n - 4 })?;
    let pi = kan_role_partition(n, n - 4)?;
    let mut coarsest: Vec<Vec<usize>> = coarsest_equitable_partition(&ka).blocks().to_vec();
    let mut roles = pi.blocks().to_vec();
    coarsest.sort();
    roles.sort();
    r.check("role_partition_is_coarsest_equitable", coarsest == roles);

    let qs = quotient_matrices(&ka, &pi)?;
    let n_i = n as i64;
    let want = crate::matrix::DenseMatrix::from_int_rows(&[
        vec![3, 3, 0],
        vec![1, n_i + 1, n_i - 4],
        vec![0, 3, 2 * n_i - 7],
    ]);
    r.predicted("Q_pi", crate::quotient::matrix_json(&want));
    r.computed("Q_pi", crate::quotient::matrix_json(&qs.q));
    r.check("Q_pi_entrywise", qs.q == want);

    let disc = (4.0 * nf * (nf - 7.0) + 73.0).sqrt();
    let closed = Spectrum::from_values(&[nf - 0.5 + 0.5 * disc, nf - 0.5 - 0.5 * disc, nf - 2.0]);
    let exact = exact_spectrum(&qs.q)?;
    r.compare_spectra("Q_pi_spectrum", &closed, &exact, SPECTRUM_TOL);

    let mut full = vec![nf - 2.0, nf - 2.0];
    full.extend(std::iter::repeat_n(nf - 3.0, n - 5));
    full.extend(exact.expanded());
    let direct = spectrum_of(&ka, MatrixKind::SignlessLaplacian);
    r.compare_spectra(
        "signless_spectrum",
        &Spectrum::from_values(&full),
        &direct,
        SPECTRUM_TOL,
    );

    let g = build(&F::KaNP { n, p })?;
    let levels = build_levels(&mut r, &g, k_max);
    check_rho_levels(&mut r, &levels, 1, true);
    Ok(r.finish())
}

/// Least eigenvalue at least -2 and minimum degree at least 4 give the
/// property for `L^k`, `k >= 1`.
pub fn check_min_deg4_rho(g: &Graph, k_max: usize) -> Result<TheoremReport> {
    let mut r = TheoremReport::new(ids::MIN_DEGREE_FOUR_RHO, vec![g.label()]);
    let lmin = adjacency(g).min();
    r.computed("least_eigenvalue", lmin);
    let a = r.hypothesis(
        "least_eigenvalue_at_least_minus_2",
        lmin.is_some_and(|l| l >= -2.0 - SPECTRUM_TOL),
    );
    let b = r.hypothesis(
        "min_degree_at_least_4",
        g.min_degree().is_some_and(|d| d >= 4),
    );
    if a && b {
        let levels = build_levels(&mut r, g, k_max);
        check_rho_levels(&mut r, &levels, 1, true);
    }
    Ok(r.finish())
}

/// Minimum degree at least `n/2 + 1` gives the property for `L^k`, `k >= 1`,
/// with `E(L(G)) = 4 (m - n)`.
pub fn check_das_iterated(g: &Graph, k_max: usize) -> Result<TheoremReport> {
    let mut r = TheoremReport::new(ids::DENSE_ITERATED_RHO, vec![g.label()]);
    let n = g.order();
    let a = r.hypothesis("order_above_2", n > 2);
    let b = r.hypothesis(
        "min_degree_at_least_half_order_plus_1",
        g.min_degree().is_some_and(|d| 2 * d >= n + 2),
    );
    if a && b {
        let levels = build_levels(&mut r, g, k_max);
        check_rho_levels(&mut r, &levels, 1, true);
    }
    Ok(r.finish())
}

/// Parameter range where `q_min(T_r(n)) >= 2` follows from the literature
/// bound, so the property holds for `L^k(T_r(n))`.
pub fn turan_rho_hypothesis(r: usize, n: usize) -> bool {
    n >= r && ((r == 3 && n >= 6 && n != 7) || (r == 4 && n != 5) || r >= 5)
}

pub fn check_turan_rho(r_parts: usize, n: usize, k_max: usize) -> Result<TheoremReport> {
    let mut r = TheoremReport::new(ids::TURAN_RHO, vec![format!("turan({n},{r_parts})")]);
    if r.hypothesis("turan_parameter_range", turan_rho_hypothesis(r_parts, n)) {
        let g = build(&F::Turan { n, r: r_parts })?;
        let levels = build_levels(&mut r, &g, k_max);
        check_rho_levels(&mut r, &levels, 1, true);
    }
    Ok(r.finish())
}

/// Printed signless spectra: `(r, n, spectrum, q_min)`.
pub const TURAN_PRINTED: [(usize, usize, &[(f64, usize)], f64); 4] = [
    (3, 6, &[(8.0, 1), (4.0, 3), (2.0, 2)], 2.0),
    (
        3,
        7,
        &[(9.2745, 1), (5.0, 2), (4.0, 2), (3.0, 1), (1.7251, 1)],
        1.7251,
    ),
    (
        3,
        8,
        &[(10.6056, 1), (6.0, 1), (5.0, 4), (3.3944, 1), (2.0, 1)],
        2.0,
    ),
    (4, 5, &[(7.3723, 1), (3.0, 3), (1.6277, 1)], 1.6277),
];

/// The four printed Turán signless spectra, their least eigenvalues, failure
/// of the strict lower bound `(r-2) floor(n/r) < q_min` on each, and the
/// property on `L(T_r(n))` holding exactly when `q_min >= 2`.
pub fn check_turan_printed_q_spectra() -> Result<TheoremReport> {
    let inputs = TURAN_PRINTED
        .iter()
        .map(|(r, n, _, _)| format!("turan({n},{r})"))
        .collect();
    let mut rep = TheoremReport::new(ids::TURAN_PRINTED_Q_SPECTRA, inputs);
    for (r, n, printed, qmin) in TURAN_PRINTED {
        let key = format!("T_{r}({n})");
        let g = build(&F::Turan { n, r })?;
        let sp = spectrum_of(&g, MatrixKind::SignlessLaplacian);
        let printed = Spectrum::from_grouped(printed.to_vec(), 1e-12);
        rep.compare_spectra(
            &format!("{key}.signless_spectrum"),
            &printed,
            &sp,
            PRINTED_TOL,
        );
        let computed_min = sp.min().unwrap_or(f64::NAN);
        rep.predicted(format!("{key}.q_min"), qmin);
        rep.computed(format!("{key}.q_min"), computed_min);
        rep.residual(
            format!("{key}.q_min"),
            (computed_min - qmin).abs(),
            PRINTED_TOL,
        );
        let bound = ((r - 2) * (n / r)) as f64;
        rep.check(
            format!("{key}.strict_lower_bound_fails"),
            !(bound < computed_min - RHO_TOL),
        );
        let line_rho = rho_of_spectrum(&adjacency(&line_graph(&g))).holds;
        rep.computed(format!("{key}.line_rho_holds"), line_rho);
        rep.check(
            format!("{key}.line_rho_iff_q_min_at_least_2"),
            line_rho == (computed_min >= 2.0 - RHO_TOL),
        );
    }
    Ok(rep.finish())
}

/// Multiset with signed multiplicities; values within `tol` are merged.
/// Fails if any multiplicity stays negative after cancellation.
pub fn signed_spectrum(parts: &[(f64, i64)], tol: f64) -> std::result::Result<Spectrum, String> {
    let mut acc: Vec<(f64, i64)> = Vec::new();
    for &(v, m) in parts {
        match acc.iter_mut().find(|e| (e.0 - v).abs() <= tol) {
            Some(e) => e.1 += m,
            None => acc.push((v, m)),
        }
    }
    if let Some(&(v, m)) = acc.iter().find(|e| e.1 < 0) {
        return Err(format!("value {v} keeps negative multiplicity {m}"));
    }
    Ok(Spectrum::from_grouped(
        acc.into_iter()
            .filter(|e| e.1 > 0)
            .map(|(v, m)| (v, m as usize))
            .collect(),
        tol,
    ))
}

/// Adjacency eigenvalues of an `r`-regular graph without one copy of `r`.
fn non_principal(g: &Graph, r: usize) -> Vec<f64> {
    let mut vals = adjacency(g).expanded();
    let idx = vals
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - r as f64).abs().total_cmp(&(b.1 - r as f64).abs()))
        .map(|(i, _)| i)
        .expect("non-empty graph");
    vals.remove(idx);
    vals
}

fn compare_closed_form(
    rep: &mut TheoremReport,
    key: &str,
    closed: std::result::Result<Spectrum, String>,
    computed: &Spectrum,
) {
    match closed {
        Ok(s) => {
            rep.compare_spectra(key, &s, computed, SPECTRUM_TOL);
        }
        Err(e) => {
            rep.note(format!("{key}: closed form invalid: {e}"));
            rep.check(format!("{key}.closed_form_valid"), false);
        }
    }
}

/// For `r`-regular `G` with `3 <= r <= (n-1)/3`, `L^k(complement(G))` has the
/// property; `Sp(L(complement G))` matches the closed form
/// `{2(n-1)-2r-2} U {n-r-lambda_i-4} U {-2^(n(n-r-3)/2)}`.
pub fn check_regular_complement_rho(g: &Graph, k_max: usize) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(ids::REGULAR_COMPLEMENT_RHO, vec![g.label()]);
    let n = g.order();
    let reg = g.regular_degree();
    rep.computed("regular_degree", reg);
    let a = rep.hypothesis("regular", reg.is_some());
    let b = rep.hypothesis(
        "degree_between_3_and_third_of_n_minus_1",
        reg.is_some_and(|r| r >= 3 && 3 * r < n),
    );
    if !(a && b) {
        return Ok(rep.finish());
    }
    let r = reg.expect("checked");
    let (nf, rf) = (n as f64, r as f64);
    let mut parts = vec![(2.0 * (nf - 1.0) - 2.0 * rf - 2.0, 1i64)];
    parts.extend(
        non_principal(g, r)
            .into_iter()
            .map(|l| (nf - rf - l - 4.0, 1)),
    );
    parts.push((-2.0, (n as i64) * (n as i64 - r as i64 - 3) / 2));
    let gc = complement(g);
    let levels = build_levels(&mut rep, &gc, k_max);
    if levels.len() > 1 {
        compare_closed_form(
            &mut rep,
            "L1.spectrum",
            signed_spectrum(&parts, SPECTRUM_TOL),
            &adjacency(&levels[1]),
        );
    }
    check_rho_levels(&mut rep, &levels, 1, true);
    Ok(rep.finish())
}

/// For `r`-regular `G` of order `n >= 8`, `L^k(complement(L(G)))` has the
/// property; the first level matches `{r(n-4), ((n-4)r/2)^(n(r-2)/2),
/// ((n-6)r/2 - lambda_i), (-2)^(nr(nr-4r-2)/8)}` with signed multiplicities.
pub fn check_complement_line_regular_rho(g: &Graph, k_max: usize) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(ids::COMPLEMENT_LINE_REGULAR_RHO, vec![g.label()]);
    let n = g.order();
    let reg = g.regular_degree();
    rep.computed("regular_degree", reg);
    let a = rep.hypothesis("regular_degree_at_least_1", reg.is_some_and(|r| r >= 1));
    let b = rep.hypothesis("order_at_least_8", n >= 8);
    if !(a && b) {
        return Ok(rep.finish());
    }
    let r = reg.expect("checked");
    let (nf, rf) = (n as f64, r as f64);
    let (ni, ri) = (n as i64, r as i64);
    let mut parts = vec![
        (rf * (nf - 4.0), 1i64),
        ((nf - 4.0) * rf / 2.0, ni * (ri - 2) / 2),
    ];
    parts.extend(
        non_principal(g, r)
            .into_iter()
            .map(|l| ((nf - 6.0) * rf / 2.0 - l, 1)),
    );
    parts.push((-2.0, ni * ri * (ni * ri - 4 * ri - 2) / 8));
    let base = complement(&line_graph(g));
    let levels = build_levels(&mut rep, &base, k_max);
    if levels.len() > 1 {
        compare_closed_form(
            &mut rep,
            "L1.spectrum",
            signed_spectrum(&parts, SPECTRUM_TOL),
            &adjacency(&levels[1]),
        );
    }
    check_rho_levels(&mut rep, &levels, 1, true);
    Ok(rep.finish())
}

/// Edge-degree condition gives hyperenergetic `L^k`, `k >= 2`.
pub fn check_hyperenergetic_iterated(g: &Graph, k_max: usize) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(ids::HYPERENERGETIC_ITERATED, vec![g.label()]);
    if edge_degree_hypothesis(&mut rep, g) {
        let levels = build_levels(&mut rep, g, k_max);
        let mut checked = 0;
        for (k, lk) in levels.iter().enumerate().skip(2) {
            let e = energy_of_spectrum(&adjacency(lk)).energy;
            rep.computed(format!("L{k}.energy"), e);
            rep.predicted(
                format!("L{k}.energy_lower_bound"),
                2.0 * (lk.order() as f64 - 1.0),
            );
            rep.check(format!("L{k}.hyperenergetic"), is_hyperenergetic(lk));
            checked += 1;
        }
        rep.check("some_level_checked", checked > 0);
    }
    Ok(rep.finish())
}

/// Levels `1..=k_max` where `L^k` has the property with -2 of multiplicity
/// `m_{k-1} - n_{k-1}`. Returns `None` (hypothesis failed) otherwise.
fn rho_with_expected_multiplicity(
    rep: &mut TheoremReport,
    g: &Graph,
    k_max: usize,
) -> Option<Vec<Graph>> {
    let levels = build_levels(rep, g, k_max);
    let mut ok = levels.len() > 1;
    for k in 1..levels.len() {
        let v = rho_of_spectrum(&adjacency(&levels[k]));
        let prev = &levels[k - 1];
        let expected = prev.size() as i64 - prev.order() as i64;
        rep.computed(
            format!("L{k}.minus2_multiplicity"),
            v.multiplicity_of_minus2,
        );
        ok &= v.holds && !v.vacuous && v.multiplicity_of_minus2 as i64 == expected;
    }
    rep.hypothesis("rho_with_multiplicity_m_minus_n", ok)
        .then_some(levels)
}

/// Complement of `L^k` has exactly two distinct positive eigenvalues, its
/// spectral radius and 1 with multiplicity `m_{k-1} - n_{k-1}`, and
/// `E(complement) = 2 lambda_bar_1 + E(L^k)/2`.
pub fn check_complement_structure(g: &Graph, k_max: usize) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(ids::COMPLEMENT_STRUCTURE, vec![g.label()]);
    let Some(levels) = rho_with_expected_multiplicity(&mut rep, g, k_max) else {
        return Ok(rep.finish());
    };
    for k in 1..levels.len() {
        let lk = &levels[k];
        let prev = &levels[k - 1];
        let mult = prev.size() - prev.order();
        let sp = adjacency(lk);
        let csp = adjacency(&complement(lk));
        let radius = csp.max().unwrap_or(0.0);
        let positives: Vec<(f64, usize)> = csp
            .entries()
            .iter()
            .copied()
            .filter(|e| e.0 > RHO_TOL)
            .collect();
        rep.computed(format!("L{k}.complement_spectral_radius"), radius);
        rep.computed(
            format!("L{k}.complement_positive_eigenvalues"),
            Spectrum::from_grouped(positives.clone(), csp.tolerance()).to_string(),
        );
        let near_one = |v: f64| (v - 1.0).abs() <= SPECTRUM_TOL * radius.max(1.0);
        let structure_ok = if near_one(radius) {
            rep.note(format!("L{k}: complement spectral radius coincides with 1"));
            positives.len() == 1 && positives[0].1 == mult + 1
        } else {
            positives.len() == 2
                && positives[0].1 == 1
                && near_one(positives[1].0)
                && positives[1].1 == mult
        };
        rep.predicted(format!("L{k}.multiplicity_of_1"), mult);
        rep.check(format!("L{k}.two_positive_eigenvalues"), structure_ok);
        let ones = csp.multiplicity_near(1.0, RHO_TOL);
        rep.check(
            format!("L{k}.each_minus2_gives_a_1"),
            ones >= sp.multiplicity_near(-2.0, RHO_TOL),
        );
        let e_line = energy_of_spectrum(&sp).energy;
        let e_comp = energy_of_spectrum(&csp).energy;
        let predicted = 2.0 * radius + e_line / 2.0;
        rep.predicted(format!("L{k}.complement_energy"), predicted);
        rep.computed(format!("L{k}.complement_energy"), e_comp);
        rep.residual(
            format!("L{k}.complement_energy"),
            (e_comp - predicted).abs(),
            ENERGY_REL_TOL * lk.order() as f64,
        );
    }
    Ok(rep.finish())
}

struct ComplementEnergies {
    line: f64,
    complement: f64,
    negative_inertia: usize,
    complement_radius: f64,
    order: usize,
    size: usize,
}

fn complement_energies(lk: &Graph) -> ComplementEnergies {
    let sp = adjacency(lk);
    let csp = adjacency(&complement(lk));
    ComplementEnergies {
        line: energy_of_spectrum(&sp).energy,
        complement: energy_of_spectrum(&csp).energy,
        negative_inertia: inertia(&sp).negative,
        complement_radius: csp.max().unwrap_or(0.0),
        order: lk.order(),
        size: lk.size(),
    }
}

/// `L^k` and its complement are equienergetic iff `n^-(L^k)` equals the
/// complement's spectral radius. Across `others`, graphs whose `L^k` share
/// order and size have equienergetic complements iff the complements share
/// their spectral radius.
pub fn check_equienergetic_complement_iff(
    g: &Graph,
    k: usize,
    others: &[Graph],
) -> Result<TheoremReport> {
    let mut inputs = vec![g.label()];
    inputs.extend(others.iter().map(Graph::label));
    let mut rep = TheoremReport::new(ids::EQUIENERGETIC_COMPLEMENT_IFF, inputs);
    rep.computed("k", k);
    let k_ok = rep.hypothesis("k_at_least_1", k >= 1);
    let mut all = Vec::new();
    for (i, h) in std::iter::once(g).chain(others).enumerate() {
        let mut scratch = TheoremReport::new("", vec![]);
        match k_ok
            .then(|| rho_with_expected_multiplicity(&mut scratch, h, k))
            .flatten()
        {
            Some(levels) if levels.len() == k + 1 => all.push((i, complement_energies(&levels[k]))),
            _ => {
                rep.hypothesis(&format!("input_{i}.rho_with_multiplicity_m_minus_n"), false);
            }
        }
    }
    if !rep.hypothesis_check {
        return Ok(rep.finish());
    }
    for (i, c) in &all {
        let tol = ENERGY_REL_TOL * c.order as f64;
        let lhs = (c.line - c.complement).abs() <= tol;
        let rhs = (c.negative_inertia as f64 - c.complement_radius).abs() <= tol;
        rep.computed(format!("input_{i}.line_energy"), c.line);
        rep.computed(format!("input_{i}.complement_energy"), c.complement);
        rep.computed(format!("input_{i}.negative_inertia"), c.negative_inertia);
        rep.computed(
            format!("input_{i}.complement_spectral_radius"),
            c.complement_radius,
        );
        rep.check(
            format!("input_{i}.equienergetic_iff_inertia_equals_radius"),
            lhs == rhs,
        );
    }
    for (a, ca) in &all {
        for (b, cb) in all.iter().filter(|(b, _)| b > a) {
            if (ca.order, ca.size) != (cb.order, cb.size) {
                continue;
            }
            let tol = ENERGY_REL_TOL * ca.order as f64;
            let same_radius = (ca.complement_radius - cb.complement_radius).abs() <= tol;
            let same_energy = (ca.complement - cb.complement).abs() <= tol;
            rep.computed(format!("pair_{a}_{b}.same_complement_radius"), same_radius);
            rep.check(
                format!("pair_{a}_{b}.complement_equienergetic_iff_same_radius"),
                same_radius == same_energy,
            );
        }
    }
    Ok(rep.finish())
}

/// For `k >= 2` with `lambda_1(L^k) <= (n_k - 1)/2`, the complement of
/// `L^k` is hyperenergetic (edge-degree condition on `G`).
pub fn check_complement_hyperenergetic(g: &Graph, k_max: usize) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(ids::COMPLEMENT_HYPERENERGETIC, vec![g.label()]);
    if !edge_degree_hypothesis(&mut rep, g) {
        return Ok(rep.finish());
    }
    let levels = build_levels(&mut rep, g, k_max);
    let mut qualifying = 0;
    for (k, lk) in levels.iter().enumerate().skip(2) {
        let radius = adjacency(lk).max().unwrap_or(0.0);
        let limit = (lk.order() as f64 - 1.0) / 2.0;
        rep.computed(format!("L{k}.spectral_radius"), radius);
        rep.computed(format!("L{k}.radius_limit"), limit);
        if radius <= limit + HYPERENERGETIC_GUARD {
            qualifying += 1;
            let c = complement(lk);
            rep.computed(
                format!("L{k}.complement_energy"),
                energy_of_spectrum(&adjacency(&c)).energy,
            );
            rep.check(
                format!("L{k}.complement_hyperenergetic"),
                is_hyperenergetic(&c),
            );
        }
    }
    rep.hypothesis("some_level_meets_radius_condition", qualifying > 0);
    Ok(rep.finish())
}

/// `Sp(Ebd(H)) = (-Sp(H) - 1) U (Sp(H) + 1)`.
pub fn ebd_spectrum_law(h: &Graph) -> (Spectrum, Spectrum) {
    let sp = adjacency(h).expanded();
    let mut predicted: Vec<f64> = sp.iter().map(|l| -l - 1.0).collect();
    predicted.extend(sp.iter().map(|l| l + 1.0));
    (
        Spectrum::from_values(&predicted),
        adjacency(&extended_bipartite_double(h)),
    )
}

/// Energies of `Ebd(L^k)` and `Ebd(complement L^k)` against their closed
/// forms, the equienergeticity criterion between them, and the Ebd spectrum
/// law on both.
pub fn check_ebd_energies(g: &Graph, k: usize) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(ids::EBD_ENERGIES, vec![g.label(), format!("k={k}")]);
    let k_ok = rep.hypothesis("k_at_least_1", k >= 1);
    let levels = match k_ok
        .then(|| rho_with_expected_multiplicity(&mut rep, g, k))
        .flatten()
    {
        Some(l) if l.len() == k + 1 => l,
        _ => return Ok(rep.finish()),
    };
    let (lk, prev) = (&levels[k], &levels[k - 1]);
    let (m, n) = (prev.size() as f64, prev.order() as f64);
    let c = complement(lk);
    let radius = adjacency(&c).max().unwrap_or(0.0);
    let tol = ENERGY_REL_TOL * 2.0 * lk.order() as f64;

    for (key, h) in [("ebd_line", lk), ("ebd_complement", &c)] {
        let (predicted, computed) = ebd_spectrum_law(h);
        rep.compare_spectra(
            &format!("{key}.spectrum_law"),
            &predicted,
            &computed,
            SPECTRUM_TOL,
        );
    }
    let e_line = energy_of_spectrum(&adjacency(&extended_bipartite_double(lk))).energy;
    let e_comp = energy_of_spectrum(&adjacency(&extended_bipartite_double(&c))).energy;
    let p_line = 2.0 * (3.0 * m - 2.0 * n);
    let p_comp = 2.0 * (2.0 * (radius + 1.0) + 3.0 * m - 4.0 * n);
    rep.predicted("ebd_line.energy", p_line);
    rep.computed("ebd_line.energy", e_line);
    rep.residual("ebd_line.energy", (e_line - p_line).abs(), tol);
    rep.predicted("ebd_complement.energy", p_comp);
    rep.computed("ebd_complement.energy", e_comp);
    rep.residual("ebd_complement.energy", (e_comp - p_comp).abs(), tol);

    let neg = inertia(&adjacency(&c)).negative;
    rep.computed("complement_negative_inertia", neg);
    rep.check(
        "complement_negative_inertia_is_n_minus_1",
        neg as f64 == n - 1.0,
    );
    let equi = (e_line - e_comp).abs() <= tol;
    let criterion = (radius - (n - 1.0)).abs() <= tol;
    rep.computed("ebd_pair_equienergetic", equi);
    rep.check(
        "ebd_equienergetic_iff_radius_is_n_minus_1",
        equi == criterion,
    );
    Ok(rep.finish())
}

/// `alpha(L^k) <= n_{k-1}` and `alpha(complement L^k) <= n^-(L^k) + 1`.
pub fn check_independence_bounds(g: &Graph, k: usize) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new(ids::INDEPENDENCE_BOUNDS, vec![g.label(), format!("k={k}")]);
    let k_ok = rep.hypothesis("k_at_least_1", k >= 1);
    let levels = match k_ok
        .then(|| rho_with_expected_multiplicity(&mut rep, g, k))
        .flatten()
    {
        Some(l) if l.len() == k + 1 => l,
        _ => return Ok(rep.finish()),
    };
    let lk = &levels[k];
    if !rep.hypothesis("order_within_independence_cap", lk.order() <= 128) {
        return Ok(rep.finish());
    }
    let c = complement(lk);
    let n_prev = levels[k - 1].order();
    let neg = inertia(&adjacency(lk)).negative;
    rep.predicted("alpha_line_upper", n_prev);
    rep.predicted("alpha_complement_upper", neg + 1);
    if lk.order() <= DEFAULT_INDEPENDENCE_CAP {
        rep.computed("alpha_line", independence_number(lk)?);
        rep.computed("alpha_complement", independence_number(&c)?);
    }
    rep.check("alpha_line_within_bound", independence_at_most(lk, n_prev)?);
    rep.check(
        "alpha_complement_within_bound",
        independence_at_most(&c, neg + 1)?,
    );
    Ok(rep.finish())
}

/// One registry entry: a check id and its default corpus.
pub struct SuiteEntry {
    pub id: &'static str,
    pub summary: &'static str,
    pub run: fn() -> Result<Vec<TheoremReport>>,
}

fn g(spec: F) -> Result<Graph> {
    build(&spec)
}

fn k2() -> Result<Graph> {
    g(F::Complete(2))
}

fn two_triangles() -> F {
    F::DisjointUnion(vec![F::Cycle(3), F::Cycle(3)])
}

/// The pair `K_2[K_2, C_6]`, `K_2[K_2, C_3 U C_3]`.
pub fn equienergetic_pair() -> Result<(Graph, Graph)> {
    let a = h_join(&k2()?, &[k2()?, g(F::Cycle(6))?])?.graph;
    let b = h_join(&k2()?, &[k2()?, g(two_triangles())?])?.graph;
    Ok((a, b))
}

fn default_joins() -> Result<Vec<(Graph, Vec<Graph>)>> {
    Ok(vec![
        (k2()?, vec![k2()?, k2()?]),
        (k2()?, vec![k2()?, g(F::Cycle(4))?]),
        (
            g(F::Path(3))?,
            vec![g(F::Complete(1))?, g(F::Complete(3))?, g(F::Complete(2))?],
        ),
        (k2()?, vec![g(F::Cycle(6))?, g(two_triangles())?]),
        (
            g(F::Cycle(4))?,
            vec![g(F::Cycle(5))?, k2()?, g(F::Complete(4))?, g(F::Cycle(3))?],
        ),
    ])
}

pub fn registry() -> Vec<SuiteEntry> {
    vec![
        SuiteEntry {
            id: ids::QUOTIENT_SPECTRA_EQUAL,
            summary: "integer and symmetrized quotients of an H-join share A, L and Q spectra",
            run: || {
                default_joins()?
                    .iter()
                    .map(|(p, parts)| verify_quotient_spectra_equal(&h_join(p, parts)?))
                    .collect()
            },
        },
        SuiteEntry {
            id: ids::HJOIN_SIGNLESS_ASSEMBLY,
            summary: "signless spectrum of an H-join from its parts and quotient",
            run: || {
                default_joins()?
                    .iter()
                    .map(|(p, parts)| verify_hjoin_signless(p, parts))
                    .collect()
            },
        },
        SuiteEntry {
            id: ids::ITERATED_RHO_EDGE_DEGREE,
            summary: "d_u + d_v >= 6 on every edge: L^k has the property for k >= 2",
            run: || {
                Ok(vec![
                    check_iterated_rho_edge_degree(&g(F::Caterpillar(vec![4, 3, 4]))?, 2)?,
                    check_iterated_rho_edge_degree(&g(F::Complete(4))?, 3)?,
                    check_iterated_rho_edge_degree(&g(F::Path(4))?, 2)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::ITERATED_RHO_MIN_DEGREE,
            summary: "minimum degree >= 3: L^k has the property for k >= 2",
            run: || {
                Ok(vec![
                    check_iterated_rho_min_degree(&g(F::Petersen)?, 2)?,
                    check_iterated_rho_min_degree(&g(F::CompleteBipartite(3, 3))?, 2)?,
                    check_iterated_rho_min_degree(&g(F::Cycle(6))?, 2)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::HJOIN_LINE_RHO,
            summary: "line graphs of H-joins with regular parts, and of their supergraphs",
            run: || {
                Ok(vec![
                    check_hjoin_line_rho(&k2()?, &[k2()?, k2()?], 1, &[])?,
                    check_hjoin_line_rho(&k2()?, &[k2()?, g(F::Cycle(6))?], 2, &[(2, 4), (3, 6)])?,
                    check_hjoin_line_rho(&g(F::Complete(1))?, &[k2()?], 1, &[])?,
                ])
            },
        },
        SuiteEntry {
            id: ids::VERTEX_DELETION_RHO,
            summary: "vertex-deleted H-joins keep the property",
            run: || {
                Ok(vec![
                    check_vertex_deletion_rho(&k2()?, &[g(F::Cycle(5))?, g(F::Cycle(5))?], 1, 1)?,
                    check_vertex_deletion_rho(&k2()?, &[g(F::Cycle(6))?, g(F::Cycle(6))?], 2, 1)?,
                    check_vertex_deletion_rho(&k2()?, &[k2()?, g(F::Cycle(4))?], 1, 1)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::PATH_JOIN_RHO,
            summary: "L^k(K_2[P_n, P_m]) has the property for n, m >= 3",
            run: || {
                Ok(vec![
                    check_path_join_rho(3, 3, 2)?,
                    check_path_join_rho(4, 3, 2)?,
                    check_path_join_rho(2, 3, 1)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::KAN_QUOTIENT_RHO,
            summary: "quotient of Ka_n(n-4), its spectrum, and the property for L^k(Ka_n(p))",
            run: || {
                let mut out: Vec<TheoremReport> = (6..=12)
                    .map(|n| check_kan_rho(n, n - 4, 1))
                    .collect::<Result<_>>()?;
                out.push(check_kan_rho(8, 2, 1)?);
                out.push(check_kan_rho(6, 3, 1)?);
                Ok(out)
            },
        },
        SuiteEntry {
            id: ids::MIN_DEGREE_FOUR_RHO,
            summary: "least eigenvalue >= -2 and minimum degree >= 4",
            run: || {
                Ok(vec![
                    check_min_deg4_rho(&g(F::Line(Box::new(F::Complete(5))))?, 2)?,
                    check_min_deg4_rho(&g(F::Turan { n: 6, r: 3 })?, 2)?,
                    check_min_deg4_rho(&g(F::Complete(4))?, 1)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::DENSE_ITERATED_RHO,
            summary: "minimum degree >= n/2 + 1",
            run: || {
                Ok(vec![
                    check_das_iterated(&g(F::Complete(6))?, 2)?,
                    check_das_iterated(&g(F::Turan { n: 6, r: 3 })?, 2)?,
                    check_das_iterated(&g(F::Cycle(8))?, 1)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::TURAN_RHO,
            summary: "Turán graphs in the admissible parameter range",
            run: || {
                Ok(vec![
                    check_turan_rho(3, 6, 2)?,
                    check_turan_rho(3, 8, 1)?,
                    check_turan_rho(4, 8, 1)?,
                    check_turan_rho(5, 10, 1)?,
                    check_turan_rho(3, 7, 1)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::TURAN_PRINTED_Q_SPECTRA,
            summary: "printed Turán signless spectra and the failing strict lower bound",
            run: || Ok(vec![check_turan_printed_q_spectra()?]),
        },
        SuiteEntry {
            id: ids::REGULAR_COMPLEMENT_RHO,
            summary: "line graphs of complements of sparse regular graphs",
            run: || {
                Ok(vec![
                    check_regular_complement_rho(&g(F::Petersen)?, 1)?,
                    check_regular_complement_rho(&g(F::Circulant(12, vec![1, 6]))?, 1)?,
                    check_regular_complement_rho(&g(F::Complete(4))?, 1)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::COMPLEMENT_LINE_REGULAR_RHO,
            summary: "line graphs of complements of line graphs of regular graphs",
            run: || {
                Ok(vec![
                    check_complement_line_regular_rho(&g(F::Cycle(8))?, 1)?,
                    check_complement_line_regular_rho(&g(F::Hypercube(3))?, 1)?,
                    check_complement_line_regular_rho(&g(F::Circulant(8, vec![4]))?, 1)?,
                    check_complement_line_regular_rho(&g(F::Complete(4))?, 1)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::HYPERENERGETIC_ITERATED,
            summary: "iterated line graphs are hyperenergetic for k >= 2",
            run: || {
                Ok(vec![
                    check_hyperenergetic_iterated(&g(F::Complete(4))?, 3)?,
                    check_hyperenergetic_iterated(&g(F::Caterpillar(vec![4, 3, 4]))?, 2)?,
                    check_hyperenergetic_iterated(&g(F::Cycle(6))?, 2)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::COMPLEMENT_STRUCTURE,
            summary: "positive eigenvalues and energy of complements of iterated line graphs",
            run: || {
                Ok(vec![
                    check_complement_structure(&g(F::Complete(4))?, 1)?,
                    check_complement_structure(&g(F::Complete(6))?, 2)?,
                    check_complement_structure(&g(F::Turan { n: 6, r: 3 })?, 2)?,
                    check_complement_structure(&g(F::Path(4))?, 1)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::EQUIENERGETIC_COMPLEMENT_IFF,
            summary: "equienergetic complement iff negative inertia equals its spectral radius",
            run: || {
                let (a, b) = equienergetic_pair()?;
                Ok(vec![
                    check_equienergetic_complement_iff(&g(F::Complete(6))?, 1, &[])?,
                    check_equienergetic_complement_iff(&a, 1, &[b])?,
                ])
            },
        },
        SuiteEntry {
            id: ids::COMPLEMENT_HYPERENERGETIC,
            summary: "complements of iterated line graphs are hyperenergetic under a radius bound",
            run: || {
                Ok(vec![
                    check_complement_hyperenergetic(&g(F::Complete(4))?, 3)?,
                    check_complement_hyperenergetic(&g(F::Caterpillar(vec![4, 3, 4]))?, 2)?,
                    check_complement_hyperenergetic(&g(F::Cycle(6))?, 2)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::EBD_ENERGIES,
            summary: "energies of extended bipartite doubles of L^k and its complement",
            run: || {
                Ok(vec![
                    check_ebd_energies(&g(F::Complete(4))?, 1)?,
                    check_ebd_energies(&g(F::Complete(6))?, 1)?,
                    check_ebd_energies(&g(F::Path(4))?, 1)?,
                ])
            },
        },
        SuiteEntry {
            id: ids::INDEPENDENCE_BOUNDS,
            summary: "independence numbers of L^k and its complement",
            run: || {
                Ok(vec![
                    check_independence_bounds(&g(F::Complete(4))?, 1)?,
                    check_independence_bounds(&g(F::Complete(5))?, 1)?,
                    check_independence_bounds(&g(F::CompleteBipartite(3, 3))?, 1)?,
                    check_independence_bounds(&g(F::Path(4))?, 1)?,
                ])
            },
        },
    ]
}

/// Runs the registry (or the entry with `id`) and returns the reports in
/// registry order. Unknown ids give `Ok(None)`.
pub fn run_suite(id: Option<&str>) -> Result<Option<Vec<TheoremReport>>> {
    let entries: Vec<SuiteEntry> = registry()
        .into_iter()
        .filter(|e| id.is_none_or(|id| e.id == id))
        .collect();
    if entries.is_empty() {
        return Ok(None);
    }
    let batches: Vec<Result<Vec<TheoremReport>>> = entries.par_iter().map(|e| (e.run)()).collect();
    let mut out = Vec::new();
    for b in batches {
        out.extend(b?);
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_matches_id_list() {
        let ids: Vec<&str> = registry().iter().map(|e| e.id).collect();
        assert_eq!(ids, THEOREM_IDS.to_vec());
    }

    #[test]
    fn signed_multiplicities_cancel() {
        let s = signed_spectrum(&[(4.0, 1), (2.0, -4), (2.0, 4), (0.0, 3)], 1e-9).unwrap();
        assert_eq!(s.to_string(), "4 0^3");
        assert!(signed_spectrum(&[(2.0, -1)], 1e-9).is_err());
    }

    #[test]
    fn deletion_set_cycles_through_parts() {
        let blocks = vec![vec![0, 1, 2], vec![3, 4]];
        assert_eq!(cyclic_deletion_set(&blocks, 1), vec![0]);
        assert_eq!(cyclic_deletion_set(&blocks, 4), vec![0, 3, 1, 4]);
        assert_eq!(cyclic_deletion_set(&blocks, 9), vec![0, 3, 1, 4, 2]);
    }

    #[test]
    fn turan_range() {
        assert!(turan_rho_hypothesis(3, 6) && turan_rho_hypothesis(3, 8));
        assert!(!turan_rho_hypothesis(3, 7) && !turan_rho_hypothesis(4, 5));
        assert!(turan_rho_hypothesis(5, 10) && !turan_rho_hypothesis(3, 5));
    }

    #[test]
    fn inapplicable_inputs_make_no_claim() {
        let p4 = g(F::Path(4)).unwrap();
        for r in [
            check_iterated_rho_edge_degree(&p4, 2).unwrap(),
            check_iterated_rho_min_degree(&g(F::Cycle(6)).unwrap(), 2).unwrap(),
            check_kan_rho(6, 3, 1).unwrap(),
            check_path_join_rho(2, 3, 1).unwrap(),
            check_complement_structure(&p4, 1).unwrap(),
            check_ebd_energies(&p4, 1).unwrap(),
        ] {
            assert!(
                !r.hypothesis_check && !r.pass && !r.is_discrepancy(),
                "{}",
                r.theorem_id
            );
        }
    }

    #[test]
    fn degenerate_complement_structure_of_k4() {
        let r = check_complement_structure(&g(F::Complete(4)).unwrap(), 1).unwrap();
        assert!(r.pass, "{:?}", r.failures());
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn ebd_examples() {
        let r = check_ebd_energies(&g(F::Complete(4)).unwrap(), 1).unwrap();
        assert!(r.pass, "{:?}", r.failures());
        assert_eq!(r.predicted["ebd_line.energy"], serde_json::json!(20.0));
    }

    #[test]
    fn independence_examples() {
        let r = check_independence_bounds(&g(F::Complete(4)).unwrap(), 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.computed["alpha_line"], serde_json::json!(2));
        assert_eq!(r.computed["alpha_complement"], serde_json::json!(3));
        let r = check_independence_bounds(&g(F::Complete(5)).unwrap(), 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.computed["alpha_line"], serde_json::json!(2));
        // the -2 multiplicity of a bipartite root is one more than m - n
        let r = check_independence_bounds(&g(F::CompleteBipartite(3, 3)).unwrap(), 1).unwrap();
        assert!(!r.hypothesis_check);
    }
}
