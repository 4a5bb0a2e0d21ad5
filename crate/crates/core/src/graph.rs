use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 32;

/// Subset of the vertices of a base graph, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        VertexSet(vs.into_iter().fold(0, |acc, v| acc | (1 << v)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    pub fn insert(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1 << v)
    }

    pub fn remove(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn toggle(self, v: usize) -> VertexSet {
        VertexSet(self.0 ^ 1 << v)
    }

    pub fn union(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 & o.0)
    }

    pub fn difference(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 & !o.0)
    }

    pub fn sym_diff(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ o.0)
    }

    pub fn is_subset(self, o: VertexSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn complement(self, n: usize) -> VertexSet {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl std::str::FromStr for VertexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<VertexSet> {
        let body = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("set {s:?} is not in brace notation")))?;
        let mut set = VertexSet::EMPTY;
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex {tok:?}")))?;
            if v >= MAX_ORDER {
                return Err(Error::Parse(format!("vertex {v} out of range")));
            }
            set = set.insert(v);
        }
        Ok(set)
    }
}

pub struct Members(u32);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// Simple undirected graph on at most 32 vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_ORDER],
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::BadArgument("a graph needs at least one vertex".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph { n, adj: [0; MAX_ORDER] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::BadArgument(format!("edge ({u},{v}) on {n} vertices")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds from neighborhood masks; the masks must already be symmetric.
    pub fn from_adjacency(rows: &[u32]) -> Result<Graph> {
        let mut g = Graph::empty(rows.len())?;
        let full = VertexSet::full(rows.len()).0;
        for (i, &row) in rows.iter().enumerate() {
            if row & !full != 0 || row >> i & 1 == 1 {
                return Err(Error::BadArgument(format!("row {i} is out of range or has a loop")));
            }
            g.adj[i] = row;
        }
        for i in 0..g.n {
            for j in g.neighbors(i).iter() {
                if !g.has_edge(j, i) {
                    return Err(Error::BadArgument(format!("adjacency not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_vertices((0..self.n).filter(|&v| self.adj[v] == 0))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        !self.isolated_vertices().is_empty()
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start).intersection(within);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u32;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            frontier = VertexSet(next & within.0 & !seen.0);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn components_of(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            out.push(c);
            rest = rest.difference(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_of(self.all())
    }

    /// True when the induced subgraph on `s` is connected; the empty set is not.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            Some(v) => self.reach(v, s) == s,
            None => false,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.all())
    }

    /// Induced subgraph on `s`, vertices renumbered in increasing order.
    pub fn induced(&self, s: VertexSet) -> Option<Graph> {
        if s.is_empty() {
            return None;
        }
        let verts = s.to_vec();
        let mut g = Graph { n: verts.len(), adj: [0; MAX_ORDER] };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        Some(g)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: [0; MAX_ORDER] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let full = self.all().0;
        let mut g = *self;
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        g
    }

    /// Adds a vertex adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        if self.n == MAX_ORDER {
            return Err(Error::OrderTooLarge(self.n + 1));
        }
        let mut g = *self;
        let v = self.n;
        g.n += 1;
        for u in nbrs.iter() {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn edge_list_text(&self) -> String {
        self.edges().iter().map(|(u, v)| format!("{u} {v}\n")).collect()
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut n = 0;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad edge line {line:?}"))))
                .collect::<Result<_>>()?;
            match nums[..] {
                [u, v] => {
                    n = n.max(u + 1).max(v + 1);
                    edges.push((u, v));
                }
                _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
            }
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Graph::from_edges(n, &edges)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CombineOp {
    Union,
    Cartesian,
}

pub fn combine(op: CombineOp, g: &Graph, h: &Graph) -> Result<Graph> {
    match op {
        CombineOp::Union => {
            let n = g.n + h.n;
            if n > MAX_ORDER {
                return Err(Error::OrderTooLarge(n));
            }
            let mut out = Graph { n, adj: [0; MAX_ORDER] };
            out.adj[..g.n].copy_from_slice(g.rows());
            for (i, &row) in h.rows().iter().enumerate() {
                out.adj[g.n + i] = row << g.n;
            }
            Ok(out)
        }
        CombineOp::Cartesian => {
            let n = g.n * h.n;
            if n > MAX_ORDER {
                return Err(Error::OrderTooLarge(n));
            }
            let mut out = Graph { n, adj: [0; MAX_ORDER] };
            let id = |i: usize, j: usize| i * h.n + j;
            for i in 0..g.n {
                for j in 0..h.n {
                    for k in g.neighbors(i).iter() {
                        out.add_edge(id(i, j), id(k, j));
                    }
                    for k in h.neighbors(j).iter() {
                        out.add_edge(id(i, j), id(i, k));
                    }
                }
            }
            Ok(out)
        }
    }
}
