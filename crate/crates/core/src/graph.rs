//! Simple undirected graphs and the transforms built on them: line graphs,
//! complements, vertex deletion, H-joins and extended bipartite doubles.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default vertex cap for [`iterated_line_graph`].
pub const DEFAULT_GROWTH_CAP: usize = 5000;

/// Default order cap for the exact independence-number search.
pub const DEFAULT_INDEPENDENCE_CAP: usize = 40;

/// Immutable simple undirected graph stored as a dense symmetric boolean matrix.
#[derive(Clone)]
pub struct Graph {
    order: usize,
    adj: Vec<bool>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph {
            order,
            adj: vec![false; order * order],
            name: None,
        }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexIndex { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::Structure(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from a predicate evaluated on every pair `i < j`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(order);
        for i in 0..order {
            for j in (i + 1)..order {
                if adjacent(i, j) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        self.adj[u * self.order + v] = present;
        self.adj[v * self.order + u] = present;
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name if set, graph6 string otherwise.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => crate::graph6::encode(self),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.order + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.order..(v + 1) * self.order];
        row.iter()
            .enumerate()
            .filter_map(|(u, &b)| if b { Some(u) } else { None })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.order..(v + 1) * self.order]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// Edge list `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().into_iter().min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.degrees().into_iter().max()
    }

    /// `Some(r)` if every vertex has degree `r`. The null graph is not regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        let first = *d.first()?;
        d.iter().all(|&x| x == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.order
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.order];
        for start in 0..self.order {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let s = side[v].unwrap();
                for u in self.neighbors(v) {
                    match side[u] {
                        None => {
                            side[u] = Some(!s);
                            queue.push_back(u);
                        }
                        Some(t) if t == s => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Smallest `d_u + d_v` over all edges; `None` for edgeless graphs.
    pub fn min_edge_degree_sum(&self) -> Option<usize> {
        let d = self.degrees();
        self.edges().iter().map(|&(u, v)| d[u] + d[v]).min()
    }

    /// Permutes vertex labels: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut g = Graph::empty(self.order);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g.name = self.name.clone();
        g
    }
}

/// Structural summary used by hypothesis checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub order: usize,
    pub size: usize,
    pub is_connected: bool,
    pub is_bipartite: bool,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub min_edge_degree_sum: Option<usize>,
    pub regular_degree: Option<usize>,
}

pub fn structure_queries(g: &Graph) -> Structure {
    Structure {
        order: g.order(),
        size: g.size(),
        is_connected: g.is_connected(),
        is_bipartite: g.is_bipartite(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        min_edge_degree_sum: g.min_edge_degree_sum(),
        regular_degree: g.regular_degree(),
    }
}

/// Line graph. Vertex `e` of the result is the `e`-th edge of `g` in
/// lexicographic order.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let m = edges.len();
    // incidence lists: edges touching each vertex
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (idx, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(idx);
        incident[v].push(idx);
    }
    let mut out = Graph::empty(m);
    for list in &incident {
        for (a, &e) in list.iter().enumerate() {
            for &f in &list[a + 1..] {
                out.set_edge(e, f, true);
            }
        }
    }
    out
}

/// Orders and sizes `(n_j, m_j)` of `L^0(G), ..., L^k(G)`.
pub type GrowthTable = Vec<(usize, usize)>;

/// Applies [`line_graph`] `k` times. Fails before building any level whose
/// order would exceed `cap`.
pub fn iterated_line_graph(g: &Graph, k: usize, cap: usize) -> Result<(Graph, GrowthTable)> {
    let mut current = g.clone();
    let mut table = vec![(current.order(), current.size())];
    for level in 1..=k {
        let next_order = current.size();
        if next_order > cap {
            return Err(Error::GrowthLimit {
                cap,
                level,
                order: next_order,
            });
        }
        current = line_graph(&current);
        table.push((current.order(), current.size()));
    }
    if k == 0 {
        current.name = g.name.clone();
    }
    Ok((current, table))
}

pub fn complement(g: &Graph) -> Graph {
    Graph::from_fn(g.order(), |i, j| !g.has_edge(i, j))
}

/// Induced subgraph on the vertices not in `removed`; survivors keep their
/// relative order.
pub fn delete_vertices(g: &Graph, removed: &[usize]) -> Result<Graph> {
    let n = g.order();
    let mut gone = vec![false; n];
    for &v in removed {
        if v >= n {
            return Err(Error::VertexIndex {
                vertex: v,
                order: n,
            });
        }
        gone[v] = true;
    }
    let keep: Vec<usize> = (0..n).filter(|&v| !gone[v]).collect();
    Ok(Graph::from_fn(keep.len(), |i, j| {
        g.has_edge(keep[i], keep[j])
    }))
}

/// Vertex-disjoint union; components are laid out in the given order.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let total = parts.iter().map(Graph::order).sum();
    let mut out = Graph::empty(total);
    let mut offset = 0;
    for p in parts {
        for (u, v) in p.edges() {
            out.set_edge(offset + u, offset + v, true);
        }
        offset += p.order();
    }
    out
}

/// Result of [`h_join`]: the joined graph plus the block of each part.
#[derive(Debug, Clone)]
pub struct HJoin {
    pub pattern: Graph,
    pub parts: Vec<Graph>,
    pub graph: Graph,
    /// Contiguous vertex ranges, one per pattern vertex.
    pub blocks: Vec<Vec<usize>>,
}

/// Generalized composition `G[H_1, ..., H_p]`: part `i` occupies a contiguous
/// block and blocks `i`, `j` are completely joined iff `ij` is a pattern edge.
pub fn h_join(pattern: &Graph, parts: &[Graph]) -> Result<HJoin> {
    if parts.len() != pattern.order() {
        return Err(Error::Arity {
            pattern: pattern.order(),
            parts: parts.len(),
        });
    }
    let mut blocks = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for p in parts {
        blocks.push((offset..offset + p.order()).collect::<Vec<_>>());
        offset += p.order();
    }
    let mut graph = disjoint_union(parts);
    for (i, j) in pattern.edges() {
        for &u in &blocks[i] {
            for &v in &blocks[j] {
                graph.set_edge(u, v, true);
            }
        }
    }
    let names: Vec<String> = parts.iter().map(Graph::label).collect();
    graph.name = Some(format!("hjoin({};{})", pattern.label(), names.join(",")));
    Ok(HJoin {
        pattern: pattern.clone(),
        parts: parts.to_vec(),
        graph,
        blocks,
    })
}

/// Extended bipartite double: `x_i ~ y_j` iff `i == j` or `v_i ~ v_j`.
/// X occupies ids `0..n`, Y occupies `n..2n`.
pub fn extended_bipartite_double(g: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(2 * n);
    for i in 0..n {
        out.set_edge(i, n + i, true);
        for j in g.neighbors(i) {
            out.set_edge(i, n + j, true);
        }
    }
    out
}

fn check_independence_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap.min(128) {
        return Err(Error::SizeCap {
            what: "exact independence number (use independence_at_most for a bound check)",
            order: g.order(),
            cap: cap.min(128),
        });
    }
    Ok(())
}

/// Exact independence number with the default cap of 40 vertices.
pub fn independence_number(g: &Graph) -> Result<usize> {
    independence_number_capped(g, DEFAULT_INDEPENDENCE_CAP)
}

pub fn independence_number_capped(g: &Graph, cap: usize) -> Result<usize> {
    check_independence_cap(g, cap)?;
    let mut search = IndependentSetSearch::new(g, None);
    let all = full_mask(g.order());
    search.run(all, 0);
    Ok(search.best)
}

/// Verifies `alpha(g) <= bound` without computing `alpha` exactly; the search
/// stops as soon as an independent set larger than `bound` appears. Works up
/// to 128 vertices.
pub fn independence_at_most(g: &Graph, bound: usize) -> Result<bool> {
    check_independence_cap(g, 128)?;
    let mut search = IndependentSetSearch::new(g, Some(bound));
    search.run(full_mask(g.order()), 0);
    Ok(search.best <= bound)
}

fn full_mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

struct IndependentSetSearch {
    closed_nbhd: Vec<u128>,
    nbhd: Vec<u128>,
    best: usize,
    cutoff: Option<usize>,
}

impl IndependentSetSearch {
    fn new(g: &Graph, cutoff: Option<usize>) -> Self {
        let nbhd: Vec<u128> = (0..g.order())
            .map(|v| g.neighbors(v).fold(0u128, |acc, u| acc | (1u128 << u)))
            .collect();
        let closed_nbhd = nbhd
            .iter()
            .enumerate()
            .map(|(v, &m)| m | (1u128 << v))
            .collect();
        IndependentSetSearch {
            closed_nbhd,
            nbhd,
            best: 0,
            cutoff,
        }
    }

    fn done(&self) -> bool {
        matches!(self.cutoff, Some(b) if self.best > b)
    }

    /// Number of cliques in a greedy clique cover of `cand`; an upper bound
    /// on the independence number of the induced subgraph.
    fn clique_cover_bound(&self, mut cand: u128) -> usize {
        let mut cliques = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let mut clique_ok = self.nbhd[v] & cand;
            cand &= !(1u128 << v);
            while clique_ok != 0 {
                let u = clique_ok.trailing_zeros() as usize;
                clique_ok &= self.nbhd[u];
                cand &= !(1u128 << u);
            }
            cliques += 1;
        }
        cliques
    }

    fn run(&mut self, cand: u128, size: usize) {
        if self.done() {
            return;
        }
        if cand == 0 {
            self.best = self.best.max(size);
            return;
        }
        if size + self.clique_cover_bound(cand) <= self.best {
            return;
        }
        // branch on a vertex of minimum degree within the candidate set
        let mut pick = cand.trailing_zeros() as usize;
        let mut pick_deg = u32::MAX;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.nbhd[v] & cand).count_ones();
            if d < pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        self.run(cand & !self.closed_nbhd[pick], size + 1);
        if pick_deg > 0 {
            self.run(cand & !(1u128 << pick), size);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build, FamilySpec};

    fn cycle(n: usize) -> Graph {
        build(&FamilySpec::Cycle(n)).unwrap()
    }

    fn complete(n: usize) -> Graph {
        build(&FamilySpec::Complete(n)).unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.order();
        (0u32..(1 << n))
            .filter(|&s| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| s & (1 << u) == 0 || s & (1 << v) == 0)
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn line_graph_of_cycle_is_cycle() {
        let l = line_graph(&cycle(4));
        assert_eq!(l.order(), 4);
        assert_eq!(l.regular_degree(), Some(2));
        assert!(l.is_connected());
    }

    #[test]
    fn line_graph_of_p3_is_k2() {
        let p3 = build(&FamilySpec::Path(3)).unwrap();
        assert_eq!(line_graph(&p3), complete(2));
    }

    #[test]
    fn line_graph_counts() {
        let g = build(&FamilySpec::Caterpillar(vec![4, 3, 4])).unwrap();
        let d = g.degrees();
        let l = line_graph(&g);
        assert_eq!(l.order(), g.size());
        let expected: usize = d.iter().map(|&x| x * x.saturating_sub(1) / 2).sum();
        assert_eq!(l.size(), expected);
    }

    #[test]
    fn iterated_line_graph_levels() {
        let (g, table) = iterated_line_graph(&cycle(5), 3, DEFAULT_GROWTH_CAP).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(table, vec![(5, 5); 4]);

        let (l2, table) = iterated_line_graph(&complete(4), 2, DEFAULT_GROWTH_CAP).unwrap();
        // L(K_4) has 6 vertices of degree 4, hence 12 edges
        assert_eq!(table[1], (6, 12));
        assert_eq!(l2.order(), 12);

        let (same, _) = iterated_line_graph(&complete(4), 0, DEFAULT_GROWTH_CAP).unwrap();
        assert_eq!(same, complete(4));
    }

    #[test]
    fn growth_cap_reports_level() {
        let err = iterated_line_graph(&complete(6), 3, 100).unwrap_err();
        assert_eq!(
            err,
            Error::GrowthLimit {
                cap: 100,
                level: 3,
                order: 420
            }
        );
    }

    #[test]
    fn complement_examples() {
        let c5 = cycle(5);
        assert!(crate::census::is_isomorphic(&complement(&c5), &c5).unwrap());
        assert_eq!(complement(&complete(6)).size(), 0);
        let m = complement(&line_graph(&complete(4)));
        assert_eq!(m.regular_degree(), Some(1));
        assert_eq!(m.order(), 6);
    }

    #[test]
    fn delete_vertices_examples() {
        assert_eq!(delete_vertices(&complete(5), &[0]).unwrap(), complete(4));
        let p5 = build(&FamilySpec::Path(5)).unwrap();
        assert!(
            crate::census::is_isomorphic(&delete_vertices(&cycle(6), &[0]).unwrap(), &p5).unwrap()
        );
        assert_eq!(
            delete_vertices(&cycle(3), &[3]).unwrap_err(),
            Error::VertexIndex {
                vertex: 3,
                order: 3
            }
        );
    }

    #[test]
    fn delete_then_degrees_drop_by_deleted_neighbors() {
        let g = build(&FamilySpec::Petersen).unwrap();
        let removed = [0, 7];
        let h = delete_vertices(&g, &removed).unwrap();
        let keep: Vec<usize> = (0..10).filter(|v| !removed.contains(v)).collect();
        for (new, &old) in keep.iter().enumerate() {
            let lost = removed.iter().filter(|&&r| g.has_edge(old, r)).count();
            assert_eq!(h.degree(new), g.degree(old) - lost);
        }
    }

    #[test]
    fn cycle_join_minus_two_vertices_is_path_join() {
        let k2 = complete(2);
        let j = h_join(&k2, &[cycle(5), cycle(5)]).unwrap();
        let cut = delete_vertices(&j.graph, &[0, 5]).unwrap();
        let p4 = build(&FamilySpec::Path(4)).unwrap();
        let direct = h_join(&k2, &[p4.clone(), p4]).unwrap().graph;
        assert!(crate::census::is_isomorphic(&cut, &direct).unwrap());
    }

    #[test]
    fn h_join_examples() {
        let k2 = complete(2);
        let j = h_join(&k2, &[k2.clone(), k2.clone()]).unwrap();
        assert_eq!(j.graph, complete(4));
        assert_eq!(j.blocks, vec![vec![0, 1], vec![2, 3]]);

        let c33 = disjoint_union(&[cycle(3), cycle(3)]);
        let j = h_join(&k2, &[cycle(6), c33]).unwrap();
        assert_eq!(j.graph.order(), 12);
        assert_eq!(j.graph.regular_degree(), Some(8));

        let err = h_join(&k2, std::slice::from_ref(&k2)).unwrap_err();
        assert_eq!(
            err,
            Error::Arity {
                pattern: 2,
                parts: 1
            }
        );
    }

    #[test]
    fn h_join_size_formula() {
        let a = cycle(5);
        let b = build(&FamilySpec::Petersen).unwrap();
        let j = h_join(&complete(2), &[a.clone(), b.clone()]).unwrap();
        assert_eq!(j.graph.size(), a.size() + b.size() + a.order() * b.order());
    }

    #[test]
    fn ebd_examples() {
        let e = extended_bipartite_double(&complete(2));
        assert_eq!(e.order(), 4);
        assert_eq!(e.size(), 4);
        assert_eq!(e.regular_degree(), Some(2));
        assert!(e.is_bipartite());
        assert_eq!(extended_bipartite_double(&complete(1)), complete(2));
    }

    #[test]
    fn structure_examples() {
        let s = structure_queries(&cycle(6));
        assert!(s.is_connected && s.is_bipartite);
        assert_eq!((s.min_degree, s.max_degree), (Some(2), Some(2)));
        assert_eq!(s.min_edge_degree_sum, Some(4));
        assert_eq!(s.regular_degree, Some(2));

        let cat = build(&FamilySpec::Caterpillar(vec![4, 3, 4])).unwrap();
        let s = structure_queries(&cat);
        assert!(s.is_connected && s.is_bipartite);
        assert_eq!(s.size, s.order - 1);
        assert_eq!(s.min_degree, Some(1));

        let k33 = build(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let s = structure_queries(&k33);
        assert!(s.is_connected && s.is_bipartite);
        assert_eq!(s.regular_degree, Some(3));

        let s = structure_queries(&Graph::empty(3));
        assert_eq!(s.min_edge_degree_sum, None);
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&complete(7)).unwrap(), 1);
        assert_eq!(independence_number(&cycle(6)).unwrap(), 3);
        let lk4 = line_graph(&complete(4));
        assert_eq!(brute_alpha(&lk4), 2);
        assert_eq!(independence_number(&lk4).unwrap(), 2);
        assert_eq!(independence_number(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn independence_cap_and_bound_variant() {
        let big = cycle(41);
        assert!(matches!(
            independence_number(&big),
            Err(Error::SizeCap { .. })
        ));
        assert!(independence_at_most(&big, 20).unwrap());
        assert!(!independence_at_most(&big, 19).unwrap());
    }

    #[test]
    fn independence_matches_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let p: f64 = rng.gen_range(0.1..0.9);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
            assert_eq!(independence_number(&g).unwrap(), brute_alpha(&g));
        }
    }
}
