//! Canonical forms, isomorphism testing and the exhaustive census of small
//! connected graphs.
//!
//! Canonical forms use individualization-refinement: colour refinement to a
//! stable ordered partition, then branching on every vertex of the first
//! non-singleton cell. The canonical code is the smallest adjacency code over
//! all discrete leaves, so equal codes mean isomorphic graphs for any order
//! the code can hold.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{complement, line_graph, Graph};
use crate::graph6;
use crate::spectral::{check_rho, RhoVerdict};

/// Largest order a canonical code can hold (55 adjacency bits).
pub const MAX_CANONICAL_ORDER: usize = 11;

/// Order cap for [`is_isomorphic`].
pub const ISOMORPHISM_CAP: usize = 10;

/// Largest order accepted by [`enumerate_connected`].
pub const CENSUS_MAX_ORDER: usize = 7;

/// Number of connected graphs on 1..=7 vertices, up to isomorphism.
pub const CONNECTED_COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];

/// Order byte followed by the big-endian canonical adjacency code.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm(pub Vec<u8>);

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::SizeCap {
            what: "canonical form",
            order: n,
            cap: MAX_CANONICAL_ORDER,
        });
    }
    let rows = rows_of(g);
    let code = canonical_code(n, &rows);
    let mut bytes = vec![n as u8];
    bytes.extend_from_slice(&code.to_be_bytes());
    Ok(CanonicalForm(bytes))
}

/// Graph relabelled into its canonical order.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::SizeCap {
            what: "canonical form",
            order: n,
            cap: MAX_CANONICAL_ORDER,
        });
    }
    Ok(graph_from_code(n, canonical_code(n, &rows_of(g))))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    for g in [a, b] {
        if g.order() > ISOMORPHISM_CAP {
            return Err(Error::SizeCap {
                what: "isomorphism test",
                order: g.order(),
                cap: ISOMORPHISM_CAP,
            });
        }
    }
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn rows_of(g: &Graph) -> Vec<u16> {
    (0..g.order())
        .map(|v| g.neighbors(v).fold(0u16, |acc, u| acc | (1 << u)))
        .collect()
}

/// Adjacency code of the labelled graph: pairs `(i, j)`, `i < j`, ordered by
/// `j` then `i`, first pair in the most significant position.
fn labelled_code(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> u64 {
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | u64::from(adjacent(i, j));
        }
    }
    code
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    g
}

fn canonical_code(n: usize, rows: &[u16]) -> u64 {
    if n <= 1 {
        return 0;
    }
    let mut colors = vec![0u8; n];
    let mut best = None;
    search(n, rows, &mut colors, &mut best);
    best.expect("search visits at least one leaf")
}

/// Refines `colors` to the coarsest stable ordered partition below it.
/// Returns the number of cells.
fn refine(n: usize, rows: &[u16], colors: &mut [u8]) -> usize {
    let mut cells = colors.iter().copied().max().map_or(0, |c| c as usize + 1);
    loop {
        let mut masks = [0u16; 16];
        for (v, &c) in colors.iter().enumerate() {
            masks[c as usize] |= 1 << v;
        }
        let mut sigs = [0u64; 16];
        for v in 0..n {
            let mut sig = u64::from(colors[v]) << 44;
            for (c, mask) in masks.iter().enumerate().take(cells) {
                sig |= u64::from((rows[v] & mask).count_ones()) << (40 - 4 * c);
            }
            sigs[v] = sig;
        }
        let mut distinct: Vec<u64> = sigs[..n].to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        for v in 0..n {
            colors[v] = distinct.binary_search(&sigs[v]).expect("present") as u8;
        }
        if distinct.len() == cells {
            return cells;
        }
        cells = distinct.len();
    }
}

fn search(n: usize, rows: &[u16], colors: &mut [u8], best: &mut Option<u64>) {
    let cells = refine(n, rows, colors);
    if cells == n {
        let mut inverse = [0usize; 16];
        for (v, &c) in colors.iter().enumerate() {
            inverse[c as usize] = v;
        }
        let code = labelled_code(n, |i, j| rows[inverse[i]] & (1 << inverse[j]) != 0);
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    }
    // first non-singleton cell
    let mut counts = [0u8; 16];
    for &c in colors.iter() {
        counts[c as usize] += 1;
    }
    let target = (0..cells)
        .find(|&c| counts[c] > 1)
        .expect("partition not discrete") as u8;
    let saved = colors.to_vec();
    for v in 0..n {
        if saved[v] != target {
            continue;
        }
        for u in 0..n {
            let c = saved[u];
            colors[u] = if c > target || (c == target && u != v) {
                c + 1
            } else {
                c
            };
        }
        search(n, rows, colors, best);
    }
    colors.copy_from_slice(&saved);
}

fn connected_mask(n: usize, rows: &[u16]) -> bool {
    if n == 0 {
        return true;
    }
    let all = (1u16 << n) - 1;
    let mut seen = 1u16;
    let mut frontier = 1u16;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros();
            f &= f - 1;
            next |= rows[v as usize];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// Number of label-space shards used by [`enumerate_connected`].
pub const SHARDS: usize = 64;

/// All connected graphs of order `n` up to isomorphism, as canonical
/// representatives sorted by canonical code.
///
/// Every labelled graph on `n` vertices is visited; the label space is split
/// into contiguous shards processed independently and merged at the end.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > CENSUS_MAX_ORDER {
        return Err(Error::SizeCap {
            what: "connected-graph census (orders 1..=7)",
            order: n,
            cap: CENSUS_MAX_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total: u64 = 1 << pairs.len();
    let shard_len = total.div_ceil(SHARDS as u64).max(1);
    let codes: BTreeSet<u64> = (0..SHARDS as u64)
        .into_par_iter()
        .map(|s| {
            let lo = s * shard_len;
            let hi = ((s + 1) * shard_len).min(total);
            let mut local = BTreeSet::new();
            let mut rows = vec![0u16; n];
            for bits in lo..hi {
                rows.iter_mut().for_each(|r| *r = 0);
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    if bits >> k & 1 == 1 {
                        rows[i] |= 1 << j;
                        rows[j] |= 1 << i;
                    }
                }
                if connected_mask(n, &rows) {
                    local.insert(canonical_code(n, &rows));
                }
            }
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(codes.into_iter().map(|c| graph_from_code(n, c)).collect())
}

/// One census hit: a connected graph whose line graph has all negative
/// eigenvalues equal to -2 (non-vacuously).
#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub complement_connected: bool,
    pub line_rho: RhoVerdict,
    #[serde(skip)]
    pub graph: Graph,
}

fn line_rho_entry(g: &Graph) -> Option<CensusEntry> {
    let verdict = check_rho(&line_graph(g));
    // graphs whose line graph has no negative eigenvalue are excluded
    (verdict.holds && !verdict.vacuous).then(|| CensusEntry {
        graph6: graph6::encode(g),
        order: g.order(),
        size: g.size(),
        complement_connected: complement(g).is_connected(),
        line_rho: verdict,
        graph: g.clone(),
    })
}

/// Connected graphs of order `<= n_max` whose line graph satisfies the
/// property, excluding vacuous cases (line graphs without negative eigenvalues).
pub fn find_line_rho_graphs(n_max: usize) -> Result<Vec<CensusEntry>> {
    if n_max > CENSUS_MAX_ORDER {
        return Err(Error::SizeCap {
            what: "connected-graph census (orders 1..=7)",
            order: n_max,
            cap: CENSUS_MAX_ORDER,
        });
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        let graphs = enumerate_connected(n)?;
        out.extend(
            graphs
                .par_iter()
                .filter_map(line_rho_entry)
                .collect::<Vec<_>>(),
        );
    }
    Ok(out)
}

/// Census hits of order at most 6 known by name.
pub const NAMED_HITS: [&str; 7] = [
    "cycle(4)",
    "complete(4)",
    "kbip(3,2)",
    "complete(5)",
    "kbip(4,2)",
    "kbip(3,3)",
    "complete(6)",
];

/// `(name, graph6 of the isomorphic entry)` for each of [`NAMED_HITS`]
/// found among `entries`.
pub fn named_matches(entries: &[CensusEntry]) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for name in NAMED_HITS {
        let named = crate::family::build(&name.parse()?)?;
        let form = canonical_form(&named)?;
        for e in entries.iter().filter(|e| e.order == named.order()) {
            if canonical_form(&e.graph)? == form {
                out.push((name.to_string(), e.graph6.clone()));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct MinOrderResult {
    pub order: Option<usize>,
    pub witnesses: Vec<CensusEntry>,
    /// Census hits below the reported order; all have disconnected complement.
    pub smaller_hits: usize,
}

/// Least order of a connected graph with connected complement whose line
/// graph satisfies the property, searched up to order 7.
pub fn min_order_connected_complement() -> Result<MinOrderResult> {
    let mut smaller_hits = 0;
    for n in 1..=CENSUS_MAX_ORDER {
        let hits = find_line_rho_graphs_of_order(n)?;
        let witnesses: Vec<CensusEntry> = hits
            .iter()
            .filter(|e| e.complement_connected)
            .cloned()
            .collect();
        if !witnesses.is_empty() {
            return Ok(MinOrderResult {
                order: Some(n),
                witnesses,
                smaller_hits,
            });
        }
        smaller_hits += hits.len();
    }
    Ok(MinOrderResult {
        order: None,
        witnesses: Vec::new(),
        smaller_hits,
    })
}

pub fn find_line_rho_graphs_of_order(n: usize) -> Result<Vec<CensusEntry>> {
    let graphs = enumerate_connected(n)?;
    Ok(graphs.par_iter().filter_map(line_rho_entry).collect())
}
