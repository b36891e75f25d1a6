//! Parametric graph families and their compact text form, e.g. `turan(8,3)`,
//! `kanp(6,2)`, `cat(4,3,4)` or `hjoin(complete(2); complete(2), cycle(6))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{
    complement, disjoint_union, extended_bipartite_double, h_join, line_graph, Graph,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    /// Turán graph `T_r(n)`: balanced complete `r`-partite graph on `n` vertices.
    Turan {
        n: usize,
        r: usize,
    },
    /// `K_n` with `p` edges at vertex 0 removed (to vertices `1..=p`).
    KaNP {
        n: usize,
        p: usize,
    },
    /// Spine path of `a.len()` vertices; spine vertex `i` carries `a[i]` pendants.
    Caterpillar(Vec<usize>),
    Petersen,
    Empty(usize),
    DisjointUnion(Vec<FamilySpec>),
    /// Circulant graph on `n` vertices with the given jumps.
    Circulant(usize, Vec<usize>),
    Hypercube(usize),
    HJoin(Box<FamilySpec>, Vec<FamilySpec>),
    Line(Box<FamilySpec>),
    Complement(Box<FamilySpec>),
    Ebd(Box<FamilySpec>),
}

fn domain(family: &str, bound: impl Into<String>) -> Error {
    Error::ParameterDomain {
        family: family.to_string(),
        bound: bound.into(),
    }
}

pub fn build(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    let g = match spec {
        Path(n) => {
            if *n < 1 {
                return Err(domain("path", "n >= 1"));
            }
            Graph::from_fn(*n, |i, j| j == i + 1)
        }
        Cycle(n) => {
            if *n < 3 {
                return Err(domain("cycle", "n >= 3"));
            }
            let n = *n;
            Graph::from_fn(n, |i, j| j == i + 1 || (i == 0 && j == n - 1))
        }
        Complete(n) => {
            if *n < 1 {
                return Err(domain("complete", "n >= 1"));
            }
            Graph::from_fn(*n, |_, _| true)
        }
        CompleteBipartite(a, b) => {
            if *a < 1 || *b < 1 {
                return Err(domain("complete-bipartite", "both parts >= 1"));
            }
            multipartite(&[*a, *b])
        }
        CompleteMultipartite(parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(domain(
                    "complete-multipartite",
                    "at least one part, all parts >= 1",
                ));
            }
            multipartite(parts)
        }
        Turan { n, r } => {
            if *r < 1 || n < r {
                return Err(domain("turan", "n >= r >= 1"));
            }
            let (q, extra) = (n / r, n % r);
            let sizes: Vec<usize> = (0..*r).map(|i| q + usize::from(i < extra)).collect();
            multipartite(&sizes)
        }
        KaNP { n, p } => {
            if *n < 3 {
                return Err(domain("ka_n_p", "n >= 3"));
            }
            if *p > n - 1 {
                return Err(domain("ka_n_p", "0 <= p <= n-1"));
            }
            let p = *p;
            Graph::from_fn(*n, |i, j| !(i == 0 && j <= p))
        }
        Caterpillar(a) => {
            if a.is_empty() {
                return Err(domain("caterpillar", "at least one spine vertex"));
            }
            let t = a.len();
            let total = t + a.iter().sum::<usize>();
            let mut edges: Vec<(usize, usize)> = (1..t).map(|i| (i - 1, i)).collect();
            let mut next = t;
            for (i, &pendants) in a.iter().enumerate() {
                for _ in 0..pendants {
                    edges.push((i, next));
                    next += 1;
                }
            }
            Graph::from_edges(total, &edges)?
        }
        Petersen => {
            // outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
                edges.push((i, i + 5));
            }
            Graph::from_edges(10, &edges)?
        }
        Empty(n) => Graph::empty(*n),
        DisjointUnion(parts) => {
            let built = parts.iter().map(build).collect::<Result<Vec<_>>>()?;
            disjoint_union(&built)
        }
        Circulant(n, jumps) => {
            if *n < 3 {
                return Err(domain("circulant", "n >= 3"));
            }
            if jumps.iter().any(|&s| s == 0 || s > n / 2) {
                return Err(domain("circulant", "jumps in 1..=n/2"));
            }
            let n = *n;
            Graph::from_fn(n, |i, j| {
                let d = j - i;
                jumps.iter().any(|&s| d == s || d == n - s)
            })
        }
        Hypercube(d) => {
            if *d < 1 || *d > 12 {
                return Err(domain("hypercube", "1 <= d <= 12"));
            }
            Graph::from_fn(1 << d, |i, j| (i ^ j).count_ones() == 1)
        }
        HJoin(pattern, parts) => {
            let pattern = build(pattern)?;
            let parts = parts.iter().map(build).collect::<Result<Vec<_>>>()?;
            h_join(&pattern, &parts)?.graph
        }
        Line(inner) => line_graph(&build(inner)?),
        Complement(inner) => complement(&build(inner)?),
        Ebd(inner) => extended_bipartite_double(&build(inner)?),
    };
    Ok(g.with_name(spec.to_string()))
}

fn multipartite(sizes: &[usize]) -> Graph {
    let part: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(idx, &s)| std::iter::repeat_n(idx, s))
        .collect();
    Graph::from_fn(part.len(), |i, j| part[i] != part[j])
}

fn join_list<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path({n})"),
            Cycle(n) => write!(f, "cycle({n})"),
            Complete(n) => write!(f, "complete({n})"),
            CompleteBipartite(a, b) => write!(f, "kbip({a},{b})"),
            CompleteMultipartite(p) => write!(f, "multipartite({})", join_list(p)),
            Turan { n, r } => write!(f, "turan({n},{r})"),
            KaNP { n, p } => write!(f, "kanp({n},{p})"),
            Caterpillar(a) => write!(f, "cat({})", join_list(a)),
            Petersen => write!(f, "petersen"),
            Empty(n) => write!(f, "empty({n})"),
            DisjointUnion(parts) => write!(f, "union({})", join_list(parts)),
            Circulant(n, jumps) => write!(f, "circulant({n};{})", join_list(jumps)),
            Hypercube(d) => write!(f, "cube({d})"),
            HJoin(pattern, parts) => write!(f, "hjoin({pattern};{})", join_list(parts)),
            Line(g) => write!(f, "line({g})"),
            Complement(g) => write!(f, "complement({g})"),
            Ebd(g) => write!(f, "ebd({g})"),
        }
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser { src: s, pos: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, reason: &str) -> Error {
        let rest = &self.src[self.pos..];
        let token: String = rest.chars().take_while(|c| !c.is_whitespace()).collect();
        Error::Parse {
            token: if token.is_empty() {
                "<end of input>".into()
            } else {
                token
            },
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_' || c == '-'))
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.error("expected a family name"));
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.error("expected a non-negative integer"));
        }
        self.pos += len;
        self.src[start..start + len]
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }

    fn numbers(&mut self) -> Result<Vec<usize>> {
        let mut out = vec![self.number()?];
        while self.eat(',') {
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn specs(&mut self) -> Result<Vec<FamilySpec>> {
        let mut out = vec![self.spec()?];
        while self.eat(',') {
            out.push(self.spec()?);
        }
        Ok(out)
    }

    fn int_args(&mut self, name: &str, arity: Option<usize>) -> Result<Vec<usize>> {
        self.expect('(')?;
        let args = self.numbers()?;
        self.expect(')')?;
        if let Some(k) = arity {
            if args.len() != k {
                return Err(Error::Parse {
                    token: name.to_string(),
                    reason: format!("expects {k} integer argument(s), got {}", args.len()),
                });
            }
        }
        Ok(args)
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        use FamilySpec::*;
        let start = self.pos;
        let name = self.ident()?;
        let lower = name.to_ascii_lowercase();
        let spec = match lower.as_str() {
            "path" | "p" => Path(self.int_args(name, Some(1))?[0]),
            "cycle" | "c" => Cycle(self.int_args(name, Some(1))?[0]),
            "complete" | "k" => Complete(self.int_args(name, Some(1))?[0]),
            "kbip" | "complete-bipartite" | "complete_bipartite" => {
                let a = self.int_args(name, Some(2))?;
                CompleteBipartite(a[0], a[1])
            }
            "multipartite" | "complete-multipartite" | "complete_multipartite" => {
                CompleteMultipartite(self.int_args(name, None)?)
            }
            "turan" => {
                let a = self.int_args(name, Some(2))?;
                Turan { n: a[0], r: a[1] }
            }
            "kanp" | "ka" | "ka_n_p" => {
                let a = self.int_args(name, Some(2))?;
                KaNP { n: a[0], p: a[1] }
            }
            "cat" | "caterpillar" => Caterpillar(self.int_args(name, None)?),
            "petersen" => {
                // optional empty parens
                if self.eat('(') {
                    self.expect(')')?;
                }
                Petersen
            }
            "empty" => Empty(self.int_args(name, Some(1))?[0]),
            "cube" | "hypercube" => Hypercube(self.int_args(name, Some(1))?[0]),
            "circulant" => {
                self.expect('(')?;
                let n = self.number()?;
                self.expect(';')?;
                let jumps = self.numbers()?;
                self.expect(')')?;
                Circulant(n, jumps)
            }
            "union" | "disjoint-union" | "disjoint_union" => {
                self.expect('(')?;
                let parts = self.specs()?;
                self.expect(')')?;
                DisjointUnion(parts)
            }
            "hjoin" => {
                self.expect('(')?;
                let pattern = self.spec()?;
                self.expect(';')?;
                let parts = self.specs()?;
                self.expect(')')?;
                HJoin(Box::new(pattern), parts)
            }
            "line" | "complement" | "ebd" => {
                self.expect('(')?;
                let inner = Box::new(self.spec()?);
                self.expect(')')?;
                match lower.as_str() {
                    "line" => Line(inner),
                    "complement" => Complement(inner),
                    _ => Ebd(inner),
                }
            }
            _ => {
                self.pos = start;
                self.skip_ws();
                return Err(self.error("unknown family"));
            }
        };
        Ok(spec)
    }
}
