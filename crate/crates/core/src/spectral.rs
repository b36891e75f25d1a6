//! Graph matrices and graph-level spectral quantities: energy, inertia, the
//! property that every negative eigenvalue equals -2, hyperenergeticity and
//! the line-graph / signless-Laplacian bridge.

use std::str::FromStr;

use serde::Serialize;

use crate::eigen::{exact_spectrum, sym_eigen};
use crate::error::{Error, Result};
use crate::graph::{line_graph, Graph};
use crate::matrix::DenseMatrix;
use crate::spectrum::Spectrum;

/// Tolerance for "equals -2" and for deciding that an eigenvalue is negative.
pub const RHO_TOL: f64 = 1e-6;

/// Slack for the hyperenergetic comparison `E(G) > 2(n-1)`.
pub const HYPERENERGETIC_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" | "adjacency" => Ok(MatrixKind::Adjacency),
            "l" | "laplacian" => Ok(MatrixKind::Laplacian),
            "q" | "signless" | "signless_laplacian" | "signless-laplacian" => {
                Ok(MatrixKind::SignlessLaplacian)
            }
            _ => Err(Error::Parse {
                token: s.to_string(),
                reason: "matrix kind must be A, L or Q".into(),
            }),
        }
    }
}

/// `A`, `L = D - A` or `Q = D + A` as a dense integer matrix.
pub fn matrix_of(g: &Graph, kind: MatrixKind) -> DenseMatrix {
    let degrees = g.degrees();
    DenseMatrix::from_fn(g.order(), |i, j| {
        let a = if g.has_edge(i, j) { 1.0 } else { 0.0 };
        match kind {
            MatrixKind::Adjacency => a,
            MatrixKind::Laplacian if i == j => degrees[i] as f64,
            MatrixKind::Laplacian => -a,
            MatrixKind::SignlessLaplacian if i == j => degrees[i] as f64,
            MatrixKind::SignlessLaplacian => a,
        }
    })
}

/// Numeric spectrum (Jacobi). The null graph has an empty spectrum.
pub fn spectrum_of(g: &Graph, kind: MatrixKind) -> Spectrum {
    if g.order() == 0 {
        return Spectrum::from_values(&[]);
    }
    sym_eigen(&matrix_of(g, kind), false)
        .expect("graph matrices are symmetric and Jacobi converges on them")
        .spectrum
}

/// Both engines on the same graph matrix.
#[derive(Debug, Clone, Serialize)]
pub struct OracleCrossCheck {
    pub numeric: Spectrum,
    pub exact: Spectrum,
    pub max_deviation: Option<f64>,
    pub agree: bool,
}

/// Largest order for which [`cross_checked_spectrum`] runs the exact route.
pub const CROSS_CHECK_MAX_ORDER: usize = 12;

/// Jacobi spectrum compared against exact characteristic-polynomial roots.
pub fn cross_checked_spectrum(g: &Graph, kind: MatrixKind) -> Result<OracleCrossCheck> {
    if g.order() > CROSS_CHECK_MAX_ORDER {
        return Err(Error::SizeCap {
            what: "exact spectrum cross-check",
            order: g.order(),
            cap: CROSS_CHECK_MAX_ORDER,
        });
    }
    let numeric = spectrum_of(g, kind);
    let exact = if g.order() == 0 {
        Spectrum::from_values(&[])
    } else {
        exact_spectrum(&matrix_of(g, kind))?
    };
    let max_deviation = numeric.max_deviation(&exact);
    let agree = numeric.approx_eq(&exact, 1e-8);
    Ok(OracleCrossCheck {
        numeric,
        exact,
        max_deviation,
        agree,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyReport {
    pub energy: f64,
    /// `2 * sum of positive eigenvalues`
    pub via_positive: f64,
    /// `-2 * sum of negative eigenvalues`
    pub via_negative: f64,
}

pub fn energy(g: &Graph) -> EnergyReport {
    energy_of_spectrum(&spectrum_of(g, MatrixKind::Adjacency))
}

pub fn energy_of_spectrum(s: &Spectrum) -> EnergyReport {
    let (mut pos, mut neg, mut abs) = (0.0, 0.0, 0.0);
    for &(v, m) in s.entries() {
        let m = m as f64;
        abs += v.abs() * m;
        if v > 0.0 {
            pos += v * m;
        } else {
            neg += v * m;
        }
    }
    EnergyReport {
        energy: abs,
        via_positive: 2.0 * pos,
        via_negative: -2.0 * neg,
    }
}

/// Counts of positive and negative eigenvalues (zero band `RHO_TOL`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

pub fn inertia(s: &Spectrum) -> Inertia {
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for &(v, m) in s.entries() {
        if v > RHO_TOL {
            out.positive += m;
        } else if v < -RHO_TOL {
            out.negative += m;
        } else {
            out.zero += m;
        }
    }
    out
}

/// Outcome of testing whether every negative adjacency eigenvalue is -2.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RhoVerdict {
    pub holds: bool,
    /// No negative eigenvalues at all; `holds` is then true vacuously.
    pub vacuous: bool,
    pub negative_eigen_count: usize,
    pub positive_eigen_count: usize,
    pub multiplicity_of_minus2: usize,
    /// `max |lambda + 2|` over negative eigenvalues (0 when there are none).
    pub worst_deviation: f64,
    pub tolerance: f64,
}

pub fn check_rho(g: &Graph) -> RhoVerdict {
    rho_of_spectrum(&spectrum_of(g, MatrixKind::Adjacency))
}

pub fn rho_of_spectrum(s: &Spectrum) -> RhoVerdict {
    rho_of_spectrum_with_tol(s, RHO_TOL)
}

/// As [`rho_of_spectrum`] with a caller-chosen tolerance. Eigenvalues in
/// `[-tol, tol]` count as zero.
pub fn rho_of_spectrum_with_tol(s: &Spectrum, tol: f64) -> RhoVerdict {
    let negative: Vec<(f64, usize)> = s.entries().iter().copied().filter(|e| e.0 < -tol).collect();
    let worst = negative
        .iter()
        .fold(0.0f64, |w, e| w.max((e.0 + 2.0).abs()));
    let count = |pred: &dyn Fn(f64) -> bool| -> usize {
        s.entries().iter().filter(|e| pred(e.0)).map(|e| e.1).sum()
    };
    RhoVerdict {
        holds: worst <= tol,
        vacuous: negative.is_empty(),
        negative_eigen_count: negative.iter().map(|e| e.1).sum(),
        positive_eigen_count: count(&|v| v > tol),
        multiplicity_of_minus2: s.multiplicity_near(-2.0, tol),
        worst_deviation: worst,
        tolerance: tol,
    }
}

/// Multiplicity of -2 in `L(root)` against the rule `m - n + 1` per
/// bipartite component and `m - n` per non-bipartite component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinusTwoRule {
    pub root_bipartite: bool,
    pub expected: usize,
    pub observed: usize,
    pub holds: bool,
}

pub fn minus_two_rule(root: &Graph, line_spectrum: &Spectrum) -> MinusTwoRule {
    let mut expected: i64 = 0;
    for comp in components(root) {
        let sub = crate::graph::delete_vertices(
            root,
            &(0..root.order())
                .filter(|v| !comp.contains(v))
                .collect::<Vec<_>>(),
        )
        .expect("component vertices are in range");
        if sub.size() == 0 {
            continue;
        }
        expected += sub.size() as i64 - sub.order() as i64 + i64::from(sub.is_bipartite());
    }
    let expected = expected.max(0) as usize;
    let observed = line_spectrum.multiplicity_near(-2.0, RHO_TOL);
    MinusTwoRule {
        root_bipartite: root.is_bipartite(),
        expected,
        observed,
        holds: expected == observed,
    }
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for s in 0..g.order() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for u in g.neighbors(comp[i]) {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        out.push(comp);
    }
    out
}

/// `Sp(L(G))` assembled as `{-2^(m-n)} ∪ (Sp_Q(G) - 2)`.
///
/// When `m < n` the shifted signless spectrum has `n - m` surplus entries;
/// these are zeros of `Q` (one per bipartite component) and are removed.
/// An error is returned if the surplus is not made of values at -2.
pub fn line_spectrum_via_q(g: &Graph) -> Result<Spectrum> {
    let (n, m) = (g.order(), g.size());
    let shifted = spectrum_of(g, MatrixKind::SignlessLaplacian).shifted(-2.0);
    let tol = 1e-8 * (2.0 * g.max_degree().unwrap_or(0) as f64).max(1.0);
    if m >= n {
        let extra = Spectrum::from_grouped(vec![(-2.0, m - n)], tol);
        return Ok(shifted.union(&extra));
    }
    let mut surplus = n - m;
    let mut entries = Vec::new();
    for &(v, mult) in shifted.entries() {
        if (v + 2.0).abs() <= RHO_TOL && surplus > 0 {
            let removed = surplus.min(mult);
            surplus -= removed;
            entries.push((v, mult - removed));
        } else {
            entries.push((v, mult));
        }
    }
    if surplus > 0 {
        return Err(Error::Structure(format!(
            "signless Laplacian has {} fewer zero eigenvalues than n - m = {}",
            surplus,
            n - m
        )));
    }
    Ok(Spectrum::from_grouped(entries, shifted.tolerance()))
}

/// Direct line-graph spectrum next to the signless-Laplacian assembly.
#[derive(Debug, Clone, Serialize)]
pub struct LineBridge {
    pub direct: Spectrum,
    pub via_q: Spectrum,
    pub max_deviation: Option<f64>,
    pub agree: bool,
    pub rule: MinusTwoRule,
}

pub fn line_bridge(g: &Graph, tol: f64) -> Result<LineBridge> {
    let direct = spectrum_of(&line_graph(g), MatrixKind::Adjacency);
    let via_q = line_spectrum_via_q(g)?;
    let max_deviation = direct.max_deviation(&via_q);
    Ok(LineBridge {
        agree: direct.approx_eq(&via_q, tol),
        rule: minus_two_rule(g, &direct),
        direct,
        via_q,
        max_deviation,
    })
}

pub fn is_hyperenergetic(g: &Graph) -> bool {
    energy(g).energy > 2.0 * (g.order() as f64 - 1.0) + HYPERENERGETIC_GUARD
}

/// Least signless-Laplacian eigenvalue; `None` for the null graph.
pub fn q_min(g: &Graph) -> Option<f64> {
    spectrum_of(g, MatrixKind::SignlessLaplacian).min()
}
