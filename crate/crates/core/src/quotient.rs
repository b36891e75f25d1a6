//! Equitable partitions and their quotient matrices.
//!
//! Integer quotients (`A_pi`, `L_pi`, `Q_pi`) are generally non-symmetric and
//! their spectra always go through the exact characteristic-polynomial route.
//! The symmetrized `H` variants go through Jacobi. Comparing the two is a
//! genuine check because neither side is derived from the other.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::eigen::{
    exact_char_poly, exact_spectrum, gershgorin_intervals, poly_from_values, sym_eigen,
};
use crate::error::{Error, Result};
use crate::family::{build, FamilySpec};
use crate::graph::{complement, h_join, line_graph, Graph, HJoin};
use crate::matrix::DenseMatrix;
use crate::report::TheoremReport;
use crate::spectral::{energy, spectrum_of, MatrixKind};
use crate::spectrum::Spectrum;

/// Tolerance for spectrum agreement between the exact and numeric routes.
pub const SPECTRUM_TOL: f64 = 1e-8;

/// Relative tolerance for characteristic-polynomial coefficients rebuilt
/// from numeric eigenvalues of irrational-entry matrices.
pub const COEFF_REL_TOL: f64 = 1e-6;

/// Ordered vertex partition; blocks are non-empty, disjoint and exhaustive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(order: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; order];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Partition(format!("block {b} is empty")));
            }
            for &v in block {
                if v >= order {
                    return Err(Error::VertexIndex { vertex: v, order });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Partition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Partition(format!("vertex {v} is not covered")));
        }
        Ok(Partition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.order()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                out[v] = b;
            }
        }
        out
    }
}

/// Coarsest equitable partition by iterated refinement from a single block.
/// Blocks are ordered by their smallest vertex.
pub fn coarsest_equitable_partition(g: &Graph) -> Partition {
    let n = g.order();
    if n == 0 {
        return Partition { blocks: Vec::new() };
    }
    let mut color = vec![0usize; n];
    let mut cells = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0; cells];
                for u in g.neighbors(v) {
                    counts[color[u]] += 1;
                }
                (color[v], counts)
            })
            .collect();
        // new ids in order of first appearance, i.e. by smallest vertex
        let mut seen: Vec<&(usize, Vec<usize>)> = Vec::new();
        let mut next = vec![0; n];
        for v in 0..n {
            next[v] = match seen.iter().position(|s| **s == sigs[v]) {
                Some(i) => i,
                None => {
                    seen.push(&sigs[v]);
                    seen.len() - 1
                }
            };
        }
        let new_cells = seen.len();
        color = next;
        if new_cells == cells {
            break;
        }
        cells = new_cells;
    }
    let mut blocks = vec![Vec::new(); cells];
    for v in 0..n {
        blocks[color[v]].push(v);
    }
    Partition { blocks }
}

/// Neighbour-count table `c_ij` if `pi` is equitable, `None` otherwise.
pub fn is_equitable(g: &Graph, pi: &Partition) -> Result<Option<Vec<Vec<usize>>>> {
    match equitability_table(g, pi) {
        Ok(c) => Ok(Some(c)),
        Err(Error::NotEquitable { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn equitability_table(g: &Graph, pi: &Partition) -> Result<Vec<Vec<usize>>> {
    if pi.order() != g.order() {
        return Err(Error::Partition(format!(
            "partition covers {} vertices, graph has {}",
            pi.order(),
            g.order()
        )));
    }
    let block_of = pi.block_of();
    let p = pi.len();
    let mut table: Vec<Option<Vec<usize>>> = vec![None; p];
    for (b, block) in pi.blocks().iter().enumerate() {
        for &v in block {
            let mut counts = vec![0; p];
            for u in g.neighbors(v) {
                counts[block_of[u]] += 1;
            }
            match &table[b] {
                None => table[b] = Some(counts),
                Some(expected) => {
                    if let Some(to) = (0..p).find(|&j| counts[j] != expected[j]) {
                        return Err(Error::NotEquitable {
                            vertex: v,
                            to,
                            count: counts[to],
                            expected: expected[to],
                        });
                    }
                }
            }
        }
    }
    Ok(table
        .into_iter()
        .map(|c| c.expect("blocks are non-empty"))
        .collect())
}

/// Symmetrized quotients with `sqrt(n_i n_j)` on pattern edges.
#[derive(Debug, Clone)]
pub struct HQuotients {
    pub a: DenseMatrix,
    pub l: DenseMatrix,
    pub q: DenseMatrix,
}

#[derive(Debug, Clone)]
pub struct QuotientSet {
    pub block_sizes: Vec<usize>,
    /// `c_ij`: neighbours in block `j` of any vertex of block `i`.
    pub a: DenseMatrix,
    pub l: DenseMatrix,
    pub q: DenseMatrix,
    pub d: DenseMatrix,
    /// `J_pi - I - A_pi` with `J_ij = m_j`.
    pub complement_a: DenseMatrix,
    /// Present when every off-diagonal `c_ij` is 0 or `m_j`.
    pub h: Option<HQuotients>,
}

impl QuotientSet {
    pub fn require_h(&self) -> Result<&HQuotients> {
        self.h.as_ref().ok_or_else(|| {
            Error::Structure(
                "symmetrized quotients need complete-or-empty joins between blocks".into(),
            )
        })
    }

    pub fn matrix(&self, kind: MatrixKind) -> &DenseMatrix {
        match kind {
            MatrixKind::Adjacency => &self.a,
            MatrixKind::Laplacian => &self.l,
            MatrixKind::SignlessLaplacian => &self.q,
        }
    }
}

impl HQuotients {
    pub fn matrix(&self, kind: MatrixKind) -> &DenseMatrix {
        match kind {
            MatrixKind::Adjacency => &self.a,
            MatrixKind::Laplacian => &self.l,
            MatrixKind::SignlessLaplacian => &self.q,
        }
    }
}

/// Integral entries become JSON integers, others decimal strings.
pub fn matrix_json(m: &DenseMatrix) -> Value {
    Value::Array(
        m.rows()
            .into_iter()
            .map(|row| {
                Value::Array(
                    row.into_iter()
                        .map(|x| {
                            if x.fract() == 0.0 && x.abs() < 9.0e15 {
                                json!(x as i64)
                            } else {
                                Value::String(format!("{x:.12}"))
                            }
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

impl Serialize for QuotientSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut v = json!({
            "block_sizes": self.block_sizes,
            "A": matrix_json(&self.a),
            "L": matrix_json(&self.l),
            "Q": matrix_json(&self.q),
            "D": matrix_json(&self.d),
            "complement_A": matrix_json(&self.complement_a),
        });
        if let Some(h) = &self.h {
            v["A_H"] = matrix_json(&h.a);
            v["L_H"] = matrix_json(&h.l);
            v["Q_H"] = matrix_json(&h.q);
        }
        v.serialize(s)
    }
}

pub fn quotient_matrices(g: &Graph, pi: &Partition) -> Result<QuotientSet> {
    let c = equitability_table(g, pi)?;
    let sizes = pi.sizes();
    let p = sizes.len();
    let degree: Vec<f64> = c
        .iter()
        .map(|row| row.iter().sum::<usize>() as f64)
        .collect();
    let a = DenseMatrix::from_fn(p, |i, j| c[i][j] as f64);
    let d = DenseMatrix::from_fn(p, |i, j| if i == j { degree[i] } else { 0.0 });
    let l = DenseMatrix::from_fn(p, |i, j| d.get(i, j) - a.get(i, j));
    let q = DenseMatrix::from_fn(p, |i, j| d.get(i, j) + a.get(i, j));
    let complement_a = DenseMatrix::from_fn(p, |i, j| {
        sizes[j] as f64 - f64::from(u8::from(i == j)) - c[i][j] as f64
    });
    let is_h = (0..p).all(|i| (0..p).all(|j| i == j || c[i][j] == 0 || c[i][j] == sizes[j]));
    let h = is_h.then(|| {
        let ah = DenseMatrix::from_fn(p, |i, j| {
            if i == j {
                c[i][i] as f64
            } else if c[i][j] > 0 {
                ((sizes[i] * sizes[j]) as f64).sqrt()
            } else {
                0.0
            }
        });
        let lh = DenseMatrix::from_fn(p, |i, j| d.get(i, j) - ah.get(i, j));
        let qh = DenseMatrix::from_fn(p, |i, j| d.get(i, j) + ah.get(i, j));
        HQuotients {
            a: ah,
            l: lh,
            q: qh,
        }
    });
    Ok(QuotientSet {
        block_sizes: sizes,
        a,
        l,
        q,
        d,
        complement_a,
        h,
    })
}

/// Partition of an H-join into its part blocks.
pub fn join_partition(hj: &HJoin) -> Partition {
    Partition {
        blocks: hj.blocks.clone(),
    }
}

fn require_regular_parts(parts: &[Graph]) -> Result<Vec<usize>> {
    parts
        .iter()
        .enumerate()
        .map(|(index, p)| p.regular_degree().ok_or(Error::NotRegular { index }))
        .collect()
}

fn max_relative_coeff_gap(numeric: &[f64], exact: &[f64]) -> f64 {
    if numeric.len() != exact.len() {
        return f64::INFINITY;
    }
    numeric
        .iter()
        .zip(exact)
        .map(|(a, b)| (a - b).abs() / b.abs().max(1.0))
        .fold(0.0, f64::max)
}

/// Integer quotients (exact route) against symmetrized quotients (Jacobi)
/// for `A`, `L` and `Q` of an H-join with regular parts.
pub fn verify_quotient_spectra_equal(hj: &HJoin) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("quotient-spectra-equal", vec![hj.graph.label()]);
    let degrees = require_regular_parts(&hj.parts)?;
    report.computed("part_degrees", &degrees);
    let qs = quotient_matrices(&hj.graph, &join_partition(hj))
        .map_err(|e| Error::Structure(format!("join partition not equitable: {e}")))?;
    let h = qs.require_h()?;
    for (name, kind) in [
        ("A", MatrixKind::Adjacency),
        ("L", MatrixKind::Laplacian),
        ("Q", MatrixKind::SignlessLaplacian),
    ] {
        let integer = qs.matrix(kind);
        let exact = exact_spectrum(integer)?;
        let sym = sym_eigen(h.matrix(kind), false)?;
        report.compare_spectra(
            &format!("spectrum_{name}"),
            &exact,
            &sym.spectrum,
            SPECTRUM_TOL,
        );
        let exact_coeffs = exact_char_poly(integer)?.coeffs_f64();
        let rebuilt = poly_from_values(&sym.values);
        report.residual(
            format!("char_poly_{name}"),
            max_relative_coeff_gap(&rebuilt, &exact_coeffs),
            COEFF_REL_TOL,
        );
    }
    Ok(report.finish())
}

/// Parts drawn by [`random_hjoin`].
pub const RANDOM_PARTS: [&str; 7] = [
    "complete(2)",
    "complete(3)",
    "cycle(4)",
    "cycle(5)",
    "cycle(6)",
    "complete(4)",
    "union(cycle(3),cycle(3))",
];

/// Random H-join: pattern of order 1..=5 with edge probability 1/2, parts
/// drawn uniformly from [`RANDOM_PARTS`].
pub fn random_hjoin<R: Rng>(rng: &mut R) -> Result<HJoin> {
    let p = rng.gen_range(1..=5);
    let pattern = Graph::from_fn(p, |_, _| rng.gen_bool(0.5));
    let parts = (0..p)
        .map(|_| {
            let text = RANDOM_PARTS[rng.gen_range(0..RANDOM_PARTS.len())];
            build(&text.parse::<FamilySpec>()?)
        })
        .collect::<Result<Vec<_>>>()?;
    h_join(&pattern, &parts)
}

/// [`verify_quotient_spectra_equal`] over `count` joins from a seeded
/// generator. The seed and draw index are recorded in every report.
pub fn random_quotient_corpus(seed: u64, count: usize) -> Result<Vec<TheoremReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let hj = random_hjoin(&mut rng)?;
            let mut r = verify_quotient_spectra_equal(&hj)?;
            r.computed("seed", seed);
            r.computed("draw", i);
            Ok(r)
        })
        .collect()
}

/// Signless spectrum of `pattern[parts]` assembled from the parts and the
/// quotient: `U_i (R_i + (Sp_Q(H_i) minus one copy of 2 r_i)) U Sp(Q_pi)`,
/// where `R_i` is the number of neighbours outside the own block.
pub fn hjoin_signless_spectrum(pattern: &Graph, parts: &[Graph]) -> Result<Spectrum> {
    let degrees = require_regular_parts(parts)?;
    let hj = h_join(pattern, parts)?;
    let qs = quotient_matrices(&hj.graph, &join_partition(&hj))?;
    let mut values = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let outside: usize = pattern.neighbors(i).map(|j| parts[j].order()).sum();
        let mut sp = spectrum_of(part, MatrixKind::SignlessLaplacian).expanded();
        let top = 2.0 * degrees[i] as f64;
        let idx = sp
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - top).abs().total_cmp(&(b.1 - top).abs()))
            .map(|(k, _)| k)
            .expect("parts are non-empty");
        sp.remove(idx);
        values.extend(sp.into_iter().map(|x| x + outside as f64));
    }
    values.extend(exact_spectrum(&qs.q)?.expanded());
    Ok(Spectrum::from_values(&values))
}

/// Signless assembly against the direct spectrum, plus the diagonal identity
/// `q_ii = 2 r_i + R_i` and the Gershgorin lower bound of 2 on `Q_pi` when
/// every part has degree at least 1.
pub fn verify_hjoin_signless(pattern: &Graph, parts: &[Graph]) -> Result<TheoremReport> {
    let hj = h_join(pattern, parts)?;
    let mut report = TheoremReport::new("hjoin-signless-assembly", vec![hj.graph.label()]);
    let degrees = require_regular_parts(parts)?;
    let assembled = hjoin_signless_spectrum(pattern, parts)?;
    let direct = spectrum_of(&hj.graph, MatrixKind::SignlessLaplacian);
    report.compare_spectra("signless_spectrum", &assembled, &direct, SPECTRUM_TOL);

    let qs = quotient_matrices(&hj.graph, &join_partition(&hj))?;
    let diagonal_ok = (0..parts.len()).all(|i| {
        let outside: usize = pattern.neighbors(i).map(|j| parts[j].order()).sum();
        qs.q.get(i, i) == (2 * degrees[i] + outside) as f64
    });
    report.check("diagonal_is_2r_plus_R", diagonal_ok);

    if degrees.iter().all(|&r| r >= 1) && pattern.is_connected() && pattern.order() >= 2 {
        let lo = gershgorin_intervals(&qs.q)
            .iter()
            .map(|iv| iv.lo)
            .fold(f64::INFINITY, f64::min);
        report.computed("gershgorin_min_left_endpoint", lo);
        report.check("gershgorin_left_endpoints_at_least_2", lo >= 2.0);
        let qmin = exact_spectrum(&qs.q)?.min().unwrap_or(f64::NAN);
        report.computed("quotient_q_min", qmin);
        report.check("quotient_q_min_at_least_2", qmin >= 2.0 - SPECTRUM_TOL);
    }
    Ok(report.finish())
}

/// Comparison of two H-joins over the same pattern with matching parts.
#[derive(Debug, Clone, Serialize)]
pub struct CospectralityWitness {
    pub inputs: (String, String),
    pub same_quotient: bool,
    pub cospectral: bool,
    pub complements_cospectral: bool,
    /// Largest gap between sorted adjacency eigenvalues.
    pub max_eigenvalue_gap: f64,
    pub line_energies: (f64, f64),
    pub complement_line_energies: (f64, f64),
    /// Same quotient, equal line and complement-of-line energies, yet not cospectral.
    pub certified_equienergetic_pair: bool,
}

/// Tolerance for energy equality in the witness.
pub const ENERGY_TOL: f64 = 1e-6;

pub fn quotient_cospectrality_witness(h1: &HJoin, h2: &HJoin) -> Result<CospectralityWitness> {
    if h1.pattern != h2.pattern {
        return Err(Error::Structure(
            "H-joins use different pattern graphs".into(),
        ));
    }
    for (i, (p, q)) in h1.parts.iter().zip(&h2.parts).enumerate() {
        let (dp, dq) = (p.regular_degree(), q.regular_degree());
        if p.order() != q.order() || dp.is_none() || dp != dq {
            return Err(Error::Structure(format!(
                "part {i} differs in order or regular degree"
            )));
        }
    }
    let q1 = quotient_matrices(&h1.graph, &join_partition(h1))?;
    let q2 = quotient_matrices(&h2.graph, &join_partition(h2))?;
    let s1 = spectrum_of(&h1.graph, MatrixKind::Adjacency);
    let s2 = spectrum_of(&h2.graph, MatrixKind::Adjacency);
    let (c1, c2) = (complement(&h1.graph), complement(&h2.graph));
    let gap = s1
        .expanded()
        .iter()
        .zip(s2.expanded())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let (l1, l2) = (line_graph(&h1.graph), line_graph(&h2.graph));
    let line_energies = (energy(&l1).energy, energy(&l2).energy);
    let complement_line_energies = (
        energy(&complement(&l1)).energy,
        energy(&complement(&l2)).energy,
    );
    let same_quotient = q1.a == q2.a;
    let cospectral = s1.approx_eq(&s2, SPECTRUM_TOL);
    Ok(CospectralityWitness {
        inputs: (h1.graph.label(), h2.graph.label()),
        same_quotient,
        cospectral,
        complements_cospectral: spectrum_of(&c1, MatrixKind::Adjacency)
            .approx_eq(&spectrum_of(&c2, MatrixKind::Adjacency), SPECTRUM_TOL),
        max_eigenvalue_gap: gap,
        line_energies,
        complement_line_energies,
        certified_equienergetic_pair: same_quotient
            && !cospectral
            && (line_energies.0 - line_energies.1).abs() <= ENERGY_TOL
            && (complement_line_energies.0 - complement_line_energies.1).abs() <= ENERGY_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build, FamilySpec as F};

    fn g(spec: F) -> Graph {
        build(&spec).unwrap()
    }

    fn part(blocks: &[&[usize]], n: usize) -> Partition {
        Partition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
        assert!(Partition::new(2, vec![vec![0, 5]]).is_err());
    }

    #[test]
    fn equitable_examples() {
        let c6 = g(F::Cycle(6));
        assert_eq!(
            is_equitable(&c6, &part(&[&[0, 2, 4], &[1, 3, 5]], 6)).unwrap(),
            Some(vec![vec![0, 2], vec![2, 0]])
        );
        assert_eq!(
            is_equitable(&g(F::Path(3)), &part(&[&[0, 2], &[1]], 3)).unwrap(),
            Some(vec![vec![0, 1], vec![2, 0]])
        );
        assert_eq!(
            is_equitable(&g(F::Path(4)), &part(&[&[0, 3], &[1, 2]], 4)).unwrap(),
            Some(vec![vec![0, 1], vec![1, 1]])
        );
        assert_eq!(
            is_equitable(&g(F::Path(4)), &part(&[&[0, 1], &[2, 3]], 4)).unwrap(),
            None
        );
    }

    #[test]
    fn coarsest_partitions() {
        assert_eq!(coarsest_equitable_partition(&g(F::Complete(5))).len(), 1);
        let ka = coarsest_equitable_partition(&g(F::KaNP { n: 6, p: 2 }));
        assert_eq!(ka.blocks(), &[vec![0], vec![1, 2], vec![3, 4, 5]]);
        let two_c3 = g(F::DisjointUnion(vec![F::Cycle(3), F::Cycle(3)]));
        let hj = h_join(&g(F::Complete(2)), &[g(F::Cycle(6)), two_c3]).unwrap();
        // the join is 8-regular, so one block is already equitable
        assert_eq!(coarsest_equitable_partition(&hj.graph).len(), 1);
        assert!(is_equitable(&hj.graph, &join_partition(&hj))
            .unwrap()
            .is_some());
        let hj = h_join(&g(F::Complete(2)), &[g(F::Cycle(6)), g(F::Complete(3))]).unwrap();
        assert_eq!(
            coarsest_equitable_partition(&hj.graph).blocks(),
            &hj.blocks[..]
        );
    }

    #[test]
    fn refinement_is_coarsest_among_merges() {
        for spec in [
            F::Petersen,
            F::Caterpillar(vec![2, 1, 2]),
            F::KaNP { n: 7, p: 3 },
            F::Path(6),
        ] {
            let gr = g(spec);
            let p = coarsest_equitable_partition(&gr);
            assert!(is_equitable(&gr, &p).unwrap().is_some());
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    let mut blocks = p.blocks().to_vec();
                    let moved = blocks.remove(j);
                    blocks[i].extend(moved);
                    let merged = Partition::new(gr.order(), blocks).unwrap();
                    assert!(is_equitable(&gr, &merged).unwrap().is_none());
                }
            }
        }
    }

    #[test]
    fn kan_quotient() {
        let ka = g(F::KaNP { n: 6, p: 2 });
        let pi = part(&[&[0], &[3, 4, 5], &[1, 2]], 6);
        let qs = quotient_matrices(&ka, &pi).unwrap();
        assert_eq!(
            qs.q,
            DenseMatrix::from_int_rows(&[vec![3, 3, 0], vec![1, 7, 2], vec![0, 3, 5]])
        );
        assert_eq!(exact_spectrum(&qs.q).unwrap().to_string(), "9 4 2");
    }

    #[test]
    fn h_variants() {
        let k2 = g(F::Complete(2));
        let hj = h_join(&k2, &[k2.clone(), k2.clone()]).unwrap();
        let qs = quotient_matrices(&hj.graph, &join_partition(&hj)).unwrap();
        assert_eq!(qs.a, DenseMatrix::from_int_rows(&[vec![1, 2], vec![2, 1]]));
        assert_eq!(qs.require_h().unwrap().a, qs.a);

        let hj = h_join(&k2, &[k2.clone(), g(F::Cycle(4))]).unwrap();
        let qs = quotient_matrices(&hj.graph, &join_partition(&hj)).unwrap();
        // C4 is 2-regular, so c_22 = 2
        assert_eq!(qs.a, DenseMatrix::from_int_rows(&[vec![1, 4], vec![2, 2]]));
        let ah = &qs.require_h().unwrap().a;
        assert!((ah.get(0, 1) - 8f64.sqrt()).abs() < 1e-15 && ah.is_symmetric());
        let r = 33f64.sqrt();
        let want = Spectrum::from_values(&[(3.0 + r) / 2.0, (3.0 - r) / 2.0]);
        assert!(exact_spectrum(&qs.a).unwrap().approx_eq(&want, 1e-9));

        let pi = coarsest_equitable_partition(&g(F::Path(4)));
        let qs = quotient_matrices(&g(F::Path(4)), &pi).unwrap();
        assert!(matches!(qs.require_h(), Err(Error::Structure(_))));
        // the complement of P4 is a P4 whose interior is {0, 3}
        assert_eq!(
            qs.complement_a,
            DenseMatrix::from_int_rows(&[vec![1, 1], vec![1, 0]])
        );
    }

    #[test]
    fn quotient_json_mixes_ints_and_strings() {
        let k2 = g(F::Complete(2));
        let hj = h_join(&k2, &[k2.clone(), g(F::Cycle(4))]).unwrap();
        let qs = quotient_matrices(&hj.graph, &join_partition(&hj)).unwrap();
        let v = serde_json::to_value(&qs).unwrap();
        assert_eq!(v["A"], json!([[1, 4], [2, 2]]));
        assert!(v["A_H"][0][1].is_string());
    }

    #[test]
    fn spectral_equality_examples() {
        let k2 = g(F::Complete(2));
        for parts in [
            vec![k2.clone(), k2.clone()],
            vec![k2.clone(), g(F::Cycle(4))],
        ] {
            let r = verify_quotient_spectra_equal(&h_join(&k2, &parts).unwrap()).unwrap();
            assert!(r.pass, "{:?}", r.failures());
        }
        let hj = h_join(
            &g(F::Path(3)),
            &[g(F::Complete(1)), g(F::Complete(3)), g(F::Complete(2))],
        )
        .unwrap();
        let r = verify_quotient_spectra_equal(&hj).unwrap();
        assert!(r.pass);
        assert_eq!(r.computed["spectrum_Q"], json!("9 4 2"));
        let bad = h_join(&k2, &[g(F::Path(3)), k2.clone()]).unwrap();
        assert!(matches!(
            verify_quotient_spectra_equal(&bad),
            Err(Error::NotRegular { index: 0 })
        ));
    }

    #[test]
    fn signless_assembly() {
        let k2 = g(F::Complete(2));
        let s = hjoin_signless_spectrum(&k2, &[k2.clone(), k2.clone()]).unwrap();
        assert_eq!(s.to_string(), "6 2^3");
        let s = hjoin_signless_spectrum(
            &g(F::Path(3)),
            &[g(F::Complete(1)), g(F::Complete(3)), g(F::Complete(2))],
        )
        .unwrap();
        assert_eq!(s.to_string(), "9 4^3 3 2");
        let two_c3 = g(F::DisjointUnion(vec![F::Cycle(3), F::Cycle(3)]));
        let r = verify_hjoin_signless(&k2, &[g(F::Cycle(6)), two_c3]).unwrap();
        assert!(r.pass, "{:?}", r.failures());
    }

    #[test]
    fn cospectrality_witnesses() {
        let k2 = g(F::Complete(2));
        let c6 = g(F::Cycle(6));
        let two_c3 = g(F::DisjointUnion(vec![F::Cycle(3), F::Cycle(3)]));
        let a = h_join(&k2, &[k2.clone(), c6.clone()]).unwrap();
        let b = h_join(&k2, &[k2.clone(), two_c3.clone()]).unwrap();
        let w = quotient_cospectrality_witness(&a, &b).unwrap();
        assert!(w.same_quotient && !w.cospectral && w.certified_equienergetic_pair);
        assert!(w.max_eigenvalue_gap > 1e-3);

        let same = quotient_cospectrality_witness(&a, &a).unwrap();
        assert!(
            same.cospectral && same.complements_cospectral && !same.certified_equienergetic_pair
        );

        let a = h_join(&k2, &[c6.clone(), c6.clone()]).unwrap();
        let b = h_join(&k2, &[two_c3.clone(), two_c3.clone()]).unwrap();
        let w = quotient_cospectrality_witness(&a, &b).unwrap();
        assert!(w.same_quotient && !w.cospectral);

        let c = h_join(&k2, &[k2.clone(), g(F::Complete(4))]).unwrap();
        assert!(quotient_cospectrality_witness(&a, &c).is_err());
    }
}
