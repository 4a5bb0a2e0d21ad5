//! Named graph families with fixed vertex numbering.
//!
//! Numbering conventions:
//! - `Path`/`Cycle`: vertices in path/cycle order starting at 0.
//! - `Star(q)`: center 0, leaves 1..=q.
//! - `CompleteBipartite(p,q)` and `CompleteMultipartite`: parts are consecutive blocks.
//! - `Flower(r,s)`: center 0, petal i is the path `1+i(s-1) ..= (i+1)(s-1)` closed through 0.
//! - `FullHouse`: edges 0-3, 0-4, 1-2, 1-3, 1-4, 2-3, 2-4, 3-4.
//! - `FHTwins(r)`: FullHouse plus independent twins of 0 numbered 5, 6, ...
//! - `HMatch(r)`: cliques on `0..r+2` and `r+2..2r+4`, matching `i -- r+2+i` for `i < r`.
//! - `HTwins(r)`: an 8-vertex graph with twins 6 and 7 (neighborhood {3,4,5}); further
//!   twins of 6 are numbered 8, 9, ...
//! - `GN(n)`: `u_j` is `j-1`; `v^i_j` is `(n-1) + (i-1)n + (j-1)`.
//! - `K2Q(q, H)`: every edge of H is replaced by q common neighbors of its endpoints; H keeps
//!   its labels and the new vertices follow in edge order.
//! - `DoubleBroom(r,s,t)`: path `0..r`, s leaves on 0, then t leaves on r-1.
//! - `HalfGraph(s)`: clique `x_i = i-1`, independent `y_j = s+j-1`, edges `x_i y_j` for `i+j <= s+1`.
//! - `Corona(H)`: pendant of vertex v is `n(H)+v`.
//! - `FlowerOfTriangles(r)`: hub 0 joined to `1+3i`, triangle `{1+3i, 2+3i, 3+3i}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{combine, CombineOp, Graph, VertexSet, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Flower(usize, usize),
    FullHouse,
    FHTwins(usize),
    HMatch(usize),
    HTwins(usize),
    GN(usize),
    K2Q(usize, Box<FamilySpec>),
    DoubleBroom(usize, usize, usize),
    HalfGraph(usize),
    Corona(Box<FamilySpec>),
    FlowerOfTriangles(usize),
    Union(Box<FamilySpec>, Box<FamilySpec>),
    Cartesian(Box<FamilySpec>, Box<FamilySpec>),
}

fn bad<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::BadArgument(msg.into()))
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::OrderTooLarge(n))
    } else if n == 0 {
        bad("order must be positive")
    } else {
        Ok(())
    }
}

fn clique(g: &mut Graph, vs: &[usize]) {
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            g.add_edge(u, v);
        }
    }
}

const FULL_HOUSE: [(usize, usize); 8] = [(0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

const H2_EDGES: [(usize, usize); 19] = [
    (0, 1), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3), (0, 5), (1, 5), (1, 4), (4, 7),
    (3, 7), (3, 6), (4, 6), (0, 4), (2, 4), (2, 3), (1, 3), (5, 7), (5, 6),
];

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match spec {
        Complete(n) => {
            check_order(*n)?;
            let mut g = Graph::empty(*n)?;
            clique(&mut g, &(0..*n).collect::<Vec<_>>());
            Ok(g)
        }
        Empty(n) => {
            check_order(*n)?;
            Graph::empty(*n)
        }
        Path(n) => {
            check_order(*n)?;
            let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(*n, &edges)
        }
        Cycle(n) => {
            if *n < 3 {
                return bad("cycle needs at least 3 vertices");
            }
            check_order(*n)?;
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(*n, &edges)
        }
        Star(q) => {
            if *q == 0 {
                return bad("star needs at least one leaf");
            }
            check_order(q + 1)?;
            let edges: Vec<_> = (1..=*q).map(|i| (0, i)).collect();
            Graph::from_edges(q + 1, &edges)
        }
        CompleteBipartite(p, q) => build_family(&CompleteMultipartite(vec![*p, *q])),
        CompleteMultipartite(parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return bad("multipartite parts must be nonempty");
            }
            let n: usize = parts.iter().sum();
            check_order(n)?;
            let mut part_of = Vec::with_capacity(n);
            for (i, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat(i).take(p));
            }
            let mut g = Graph::empty(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        g.add_edge(u, v);
                    }
                }
            }
            Ok(g)
        }
        Flower(r, s) => {
            if *r < 2 || *s < 3 {
                return bad("flower needs r >= 2 and s >= 3");
            }
            let n = (s - 1) * r + 1;
            check_order(n)?;
            let mut g = Graph::empty(n)?;
            for i in 0..*r {
                let first = 1 + i * (s - 1);
                let last = (i + 1) * (s - 1);
                g.add_edge(0, first);
                g.add_edge(0, last);
                for v in first..last {
                    g.add_edge(v, v + 1);
                }
            }
            Ok(g)
        }
        FullHouse => Graph::from_edges(5, &FULL_HOUSE),
        FHTwins(r) => {
            if *r == 0 {
                return bad("FH(r) needs r >= 1");
            }
            let mut g = Graph::from_edges(5, &FULL_HOUSE)?;
            for _ in 1..*r {
                g = g.with_vertex(VertexSet::from_vertices([3, 4]))?;
            }
            Ok(g)
        }
        HMatch(r) => {
            if *r == 0 {
                return bad("H(r) needs r >= 1");
            }
            let k = r + 2;
            check_order(2 * k)?;
            let mut g = Graph::empty(2 * k)?;
            clique(&mut g, &(0..k).collect::<Vec<_>>());
            clique(&mut g, &(k..2 * k).collect::<Vec<_>>());
            for i in 0..*r {
                g.add_edge(i, k + i);
            }
            Ok(g)
        }
        HTwins(r) => {
            if *r < 2 {
                return bad("H_r needs r >= 2");
            }
            check_order(r + 6)?;
            let mut g = Graph::from_edges(8, &H2_EDGES)?;
            for _ in 2..*r {
                g = g.with_vertex(VertexSet::from_vertices([3, 4, 5]))?;
            }
            Ok(g)
        }
        GN(n) => {
            if *n < 2 {
                return bad("G_n needs n >= 2");
            }
            let order = n - 1 + n * n;
            check_order(order)?;
            let mut g = Graph::empty(order)?;
            let v = |i: usize, j: usize| n - 1 + (i - 1) * n + (j - 1);
            for i in 1..=*n {
                let block: Vec<usize> = (1..*n).map(|j| v(i, j)).collect();
                clique(&mut g, &block);
                for j in 1..*n {
                    g.add_edge(v(i, j), v(i, *n));
                    g.add_edge(v(i, j), j - 1);
                }
            }
            Ok(g)
        }
        K2Q(q, inner) => {
            if *q == 0 {
                return bad("K^{2,q} needs q >= 1");
            }
            let h = build_family(inner)?;
            let edges = h.edges();
            let n = h.order() + q * edges.len();
            check_order(n)?;
            if edges.is_empty() {
                return bad("K^{2,q}(H) needs H to have an edge");
            }
            let mut g = Graph::empty(n)?;
            let mut next = h.order();
            for &(a, b) in &edges {
                for _ in 0..*q {
                    g.add_edge(a, next);
                    g.add_edge(b, next);
                    next += 1;
                }
            }
            Ok(g)
        }
        DoubleBroom(r, s, t) => {
            if *r < 2 || *s == 0 || *t == 0 {
                return bad("double broom needs r >= 2 and s, t >= 1");
            }
            let n = r + s + t;
            check_order(n)?;
            let mut g = build_family(&Path(*r))?;
            for _ in 0..*s {
                g = g.with_vertex(VertexSet::singleton(0))?;
            }
            for _ in 0..*t {
                g = g.with_vertex(VertexSet::singleton(r - 1))?;
            }
            Ok(g)
        }
        HalfGraph(s) => {
            if *s == 0 {
                return bad("half graph needs s >= 1");
            }
            check_order(2 * s)?;
            let mut g = Graph::empty(2 * s)?;
            clique(&mut g, &(0..*s).collect::<Vec<_>>());
            for i in 1..=*s {
                for j in 1..=*s {
                    if i + j <= s + 1 {
                        g.add_edge(i - 1, s + j - 1);
                    }
                }
            }
            Ok(g)
        }
        Corona(inner) => {
            let h = build_family(inner)?;
            let n = h.order();
            check_order(2 * n)?;
            let mut g = combine(CombineOp::Union, &h, &Graph::empty(n)?)?;
            for v in 0..n {
                g.add_edge(v, n + v);
            }
            Ok(g)
        }
        FlowerOfTriangles(r) => {
            if *r == 0 {
                return bad("F(r) needs r >= 1");
            }
            let n = 3 * r + 1;
            check_order(n)?;
            let mut g = Graph::empty(n)?;
            for i in 0..*r {
                let a = 1 + 3 * i;
                g.add_edge(0, a);
                clique(&mut g, &[a, a + 1, a + 2]);
            }
            Ok(g)
        }
        Union(a, b) => combine(CombineOp::Union, &build_family(a)?, &build_family(b)?),
        Cartesian(a, b) => combine(CombineOp::Cartesian, &build_family(a)?, &build_family(b)?),
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        build_family(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Complete(n) => write!(f, "complete:{n}"),
            Empty(n) => write!(f, "empty:{n}"),
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Star(q) => write!(f, "star:{q}"),
            CompleteBipartite(p, q) => write!(f, "complete_bipartite:{p},{q}"),
            CompleteMultipartite(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "complete_multipartite:{}", s.join(","))
            }
            Flower(r, s) => write!(f, "flower:{r},{s}"),
            FullHouse => write!(f, "fullhouse"),
            FHTwins(r) => write!(f, "fh:{r}"),
            HMatch(r) => write!(f, "hmatch:{r}"),
            HTwins(r) => write!(f, "htwins:{r}"),
            GN(n) => write!(f, "gn:{n}"),
            K2Q(q, inner) => write!(f, "k2q:{q}({inner})"),
            DoubleBroom(r, s, t) => write!(f, "double_broom:{r},{s},{t}"),
            HalfGraph(s) => write!(f, "half:{s}"),
            Corona(inner) => write!(f, "corona({inner})"),
            FlowerOfTriangles(r) => write!(f, "flower_triangles:{r}"),
            Union(a, b) => write!(f, "union({a};{b})"),
            Cartesian(a, b) => write!(f, "cartesian({a};{b})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Grammar: `name[:n1,n2,...][(inner[;inner])]`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        use FamilySpec::*;
        let s = s.trim();
        let (head, inner) = match s.find('(') {
            Some(open) => {
                let body = s[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s:?}")))?;
                (&s[..open], Some(body))
            }
            None => (s, None),
        };
        let (name, args) = match head.split_once(':') {
            Some((name, args)) => (name, args),
            None => (head, ""),
        };
        let nums: Vec<usize> = args
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad number {t:?} in {s:?}"))))
            .collect::<Result<_>>()?;
        let inners: Vec<FamilySpec> = match inner {
            Some(body) => split_top_level(body)?
                .into_iter()
                .map(str::parse)
                .collect::<Result<_>>()?,
            None => Vec::new(),
        };
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!("{name} takes {k} numeric argument(s), got {}", nums.len())))
            }
        };
        let nested = |k: usize| -> Result<()> {
            if inners.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!("{name} takes {k} nested spec(s), got {}", inners.len())))
            }
        };
        let spec = match name.trim() {
            "complete" => { arity(1)?; nested(0)?; Complete(nums[0]) }
            "empty" => { arity(1)?; nested(0)?; Empty(nums[0]) }
            "path" => { arity(1)?; nested(0)?; Path(nums[0]) }
            "cycle" => { arity(1)?; nested(0)?; Cycle(nums[0]) }
            "star" => { arity(1)?; nested(0)?; Star(nums[0]) }
            "complete_bipartite" => { arity(2)?; nested(0)?; CompleteBipartite(nums[0], nums[1]) }
            "complete_multipartite" => { nested(0)?; CompleteMultipartite(nums.clone()) }
            "flower" => { arity(2)?; nested(0)?; Flower(nums[0], nums[1]) }
            "fullhouse" => { arity(0)?; nested(0)?; FullHouse }
            "fh" => { arity(1)?; nested(0)?; FHTwins(nums[0]) }
            "hmatch" => { arity(1)?; nested(0)?; HMatch(nums[0]) }
            "htwins" => { arity(1)?; nested(0)?; HTwins(nums[0]) }
            "gn" => { arity(1)?; nested(0)?; GN(nums[0]) }
            "k2q" => { arity(1)?; nested(1)?; K2Q(nums[0], Box::new(inners[0].clone())) }
            "double_broom" => { arity(3)?; nested(0)?; DoubleBroom(nums[0], nums[1], nums[2]) }
            "half" => { arity(1)?; nested(0)?; HalfGraph(nums[0]) }
            "corona" => { arity(0)?; nested(1)?; Corona(Box::new(inners[0].clone())) }
            "flower_triangles" => { arity(1)?; nested(0)?; FlowerOfTriangles(nums[0]) }
            "union" => { arity(0)?; nested(2)?; Union(Box::new(inners[0].clone()), Box::new(inners[1].clone())) }
            "cartesian" => {
                arity(0)?;
                nested(2)?;
                Cartesian(Box::new(inners[0].clone()), Box::new(inners[1].clone()))
            }
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        Ok(spec)
    }
}

fn split_top_level(body: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in body.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ';' if depth == 0 => {
                parts.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in {body:?}")));
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {body:?}")));
    }
    parts.push(&body[start..]);
    Ok(parts)
}
