//! TAR and token-jumping reconfiguration graphs.

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form_adj, CanonicalForm};
use crate::error::{Error, Result};
use crate::feasibility::{
    extremal_from_table, irrelevant_from_extremal, values_from_extremal, Feasibility, ParameterValues,
};
use crate::graph::{Graph, VertexSet};
use crate::kind::{Direction, ParameterKind};

/// Largest base order accepted by [`build_tar`].
pub const MAX_TAR_BASE_ORDER: usize = 24;

const ABSENT: u32 = u32::MAX;

/// A materialized graph whose vertices are labelled by vertex sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetGraph {
    pub labels: Vec<VertexSet>,
    pub adj: Vec<Vec<usize>>,
}

impl SetGraph {
    /// Graph on `labels` where two labels are adjacent when `adjacent` says so.
    pub fn from_rule(labels: Vec<VertexSet>, adjacent: impl Fn(VertexSet, VertexSet) -> bool) -> SetGraph {
        let mut adj = vec![Vec::new(); labels.len()];
        for i in 0..labels.len() {
            for j in i + 1..labels.len() {
                if adjacent(labels[i], labels[j]) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        SetGraph { labels, adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    pub fn index_of(&self, s: VertexSet) -> Option<usize> {
        self.labels.iter().position(|&t| t == s)
    }

    /// Component id of every vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().1 == 1
    }

    /// A proper 2-colouring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            stack.push(s);
            while let Some(v) = stack.pop() {
                let sv = side[v].expect("coloured");
                for &w in &self.adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.expect("coloured")).collect())
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form_adj(&self.adj, &[])
    }

    pub fn is_isomorphic(&self, other: &SetGraph) -> bool {
        if self.order() != other.order() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut d1: Vec<usize> = (0..self.order()).map(|i| self.degree(i)).collect();
        let mut d2: Vec<usize> = (0..other.order()).map(|i| other.degree(i)).collect();
        d1.sort_unstable();
        d2.sort_unstable();
        d1 == d2 && self.canonical_form() == other.canonical_form()
    }

    /// Articulation points (iterative Tarjan).
    pub fn articulation_points(&self) -> Vec<usize> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour position)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(top) = stack.len().checked_sub(1) {
                let (v, parent, pos) = stack[top];
                if pos < self.adj[v].len() {
                    let w = self.adj[v][pos];
                    stack[top].2 += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }
}

/// The d-dimensional hypercube, labelled by the subsets of `{0..d-1}`.
pub fn hypercube(d: usize) -> SetGraph {
    let labels: Vec<VertexSet> = (0u32..1 << d).map(VertexSet).collect();
    let adj = (0usize..1 << d).map(|v| (0..d).map(|b| v ^ (1 << b)).collect()).collect();
    SetGraph { labels, adj }
}

/// Cartesian product; vertex `(i, j)` is `i * |b| + j` and is labelled by
/// `a.labels[i]` joined with `b.labels[j]` shifted by `shift` bits.
pub fn cartesian_product(a: &SetGraph, b: &SetGraph, shift: usize) -> SetGraph {
    let nb = b.order();
    let mut labels = Vec::with_capacity(a.order() * nb);
    let mut adj = Vec::with_capacity(a.order() * nb);
    for i in 0..a.order() {
        for j in 0..nb {
            labels.push(VertexSet(a.labels[i].0 | b.labels[j].0 << shift));
            let mut nbrs: Vec<usize> = a.adj[i].iter().map(|&k| k * nb + j).collect();
            nbrs.extend(b.adj[j].iter().map(|&k| i * nb + k));
            adj.push(nbrs);
        }
    }
    SetGraph { labels, adj }
}

/// All feasible sets of one parameter on one base graph. Adjacency (symmetric
/// difference of size one) is derived on demand.
#[derive(Clone, Debug)]
pub struct TarGraph {
    kind: ParameterKind,
    base: Graph,
    sets: Vec<VertexSet>,
    index: Vec<u32>,
    values: ParameterValues,
    extremal: Vec<VertexSet>,
}

pub fn build_tar(kind: ParameterKind, g: &Graph) -> Result<TarGraph> {
    let n = g.order();
    if n > MAX_TAR_BASE_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let table = Feasibility::new(kind, g)?.table();
    let mut index = vec![ABSENT; table.len()];
    let mut sets = Vec::new();
    for (m, &ok) in table.iter().enumerate() {
        if ok {
            index[m] = sets.len() as u32;
            sets.push(VertexSet(m as u32));
        }
    }
    let extremal = extremal_from_table(kind, n, &table);
    let values = values_from_extremal(kind, &extremal);
    Ok(TarGraph { kind, base: *g, sets, index, values, extremal })
}

impl TarGraph {
    pub fn kind(&self) -> ParameterKind {
        self.kind
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.order()
    }

    /// Feasible sets in increasing bitmask order.
    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn order(&self) -> usize {
        self.sets.len()
    }

    pub fn values(&self) -> ParameterValues {
        self.values
    }

    pub fn extremal_sets(&self) -> &[VertexSet] {
        &self.extremal
    }

    pub fn irrelevant(&self) -> VertexSet {
        irrelevant_from_extremal(self.kind, self.n(), &self.extremal)
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        (s.0 as usize) < self.index.len() && self.index[s.0 as usize] != ABSENT
    }

    pub fn index_of(&self, s: VertexSet) -> Option<usize> {
        self.contains(s).then(|| self.index[s.0 as usize] as usize)
    }

    pub fn neighbors(&self, s: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        (0..self.n()).map(move |v| s.toggle(v)).filter(move |&t| self.contains(t))
    }

    pub fn degree(&self, s: VertexSet) -> usize {
        self.neighbors(s).count()
    }

    pub fn edge_count(&self) -> usize {
        self.sets.iter().map(|&s| self.degree(s)).sum::<usize>() / 2
    }

    /// Materializes the TAR graph restricted to sets accepted by `keep`.
    pub fn induced(&self, keep: impl Fn(VertexSet) -> bool) -> SetGraph {
        let labels: Vec<VertexSet> = self.sets.iter().copied().filter(|&s| keep(s)).collect();
        let mut pos = vec![ABSENT; self.index.len()];
        for (i, s) in labels.iter().enumerate() {
            pos[s.0 as usize] = i as u32;
        }
        let adj = labels
            .iter()
            .map(|&s| {
                (0..self.n())
                    .map(|v| pos[s.toggle(v).0 as usize])
                    .filter(|&p| p != ABSENT)
                    .map(|p| p as usize)
                    .collect()
            })
            .collect();
        SetGraph { labels, adj }
    }

    pub fn to_set_graph(&self) -> SetGraph {
        self.induced(|_| true)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        self.to_set_graph().canonical_form()
    }

    fn in_slice(&self, s: VertexSet, k: usize) -> bool {
        match self.kind.direction() {
            Direction::X => s.len() <= k,
            Direction::Y => s.len() >= k,
        }
    }
}

/// Sets of size at most k (X kinds) or at least k (Y kinds).
pub fn k_slice(tar: &TarGraph, k: usize) -> SetGraph {
    tar.induced(|s| tar.in_slice(s, k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityProfile {
    pub kind: ParameterKind,
    pub direction: Direction,
    /// `connected[k]` for the k-slice, k = 0..=n. Empty slices are disconnected.
    pub connected: Vec<bool>,
    /// x0 (least k0 with every slice k >= k0 connected) or y0 (greatest k0 with every
    /// slice k <= k0 connected).
    pub threshold: usize,
    /// Underline x0 (least connected k) or overline y0 (greatest connected k).
    pub extreme: usize,
}

struct UnionFind {
    parent: Vec<u32>,
    sets: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect(), sets: 0 }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = p;
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra as usize] = rb;
            self.sets -= 1;
        }
    }
}

pub fn connectivity_profile(tar: &TarGraph) -> ConnectivityProfile {
    let n = tar.n();
    let dir = tar.kind.direction();
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); n + 1];
    for &s in &tar.sets {
        by_size[s.len()].push(s);
    }
    let mut uf = UnionFind::new(tar.order());
    let mut added = 0usize;
    let mut connected = vec![false; n + 1];
    let order: Vec<usize> = match dir {
        Direction::X => (0..=n).collect(),
        Direction::Y => (0..=n).rev().collect(),
    };
    for k in order {
        for &s in &by_size[k] {
            let i = tar.index[s.0 as usize];
            uf.sets += 1;
            added += 1;
            for t in tar.neighbors(s) {
                let older = match dir {
                    Direction::X => t.len() < k,
                    Direction::Y => t.len() > k,
                };
                if older {
                    uf.union(i, tar.index[t.0 as usize]);
                }
            }
        }
        connected[k] = added > 0 && uf.sets == 1;
    }
    let (threshold, extreme) = match dir {
        Direction::X => {
            let mut t = n + 1;
            while t > 0 && connected[t - 1] {
                t -= 1;
            }
            (t.min(n), (0..=n).find(|&k| connected[k]).unwrap_or(n))
        }
        Direction::Y => {
            let mut t = 0;
            while t < n && connected[t + 1] {
                t += 1;
            }
            (t, (0..=n).rev().find(|&k| connected[k]).unwrap_or(0))
        }
    };
    ConnectivityProfile { kind: tar.kind, direction: dir, connected, threshold, extreme }
}

/// Token-jumping graph: feasible sets of size exactly k, adjacent when they differ by
/// exchanging one vertex.
pub fn build_tj(kind: ParameterKind, g: &Graph, k: usize) -> Result<SetGraph> {
    let f = Feasibility::new(kind, g)?;
    let labels: Vec<VertexSet> = (0u32..1 << g.order())
        .map(VertexSet)
        .filter(|s| s.len() == k && f.test(*s))
        .collect();
    Ok(SetGraph::from_rule(labels, |a, b| a.sym_diff(b).len() == 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
}

pub fn degree_stats(tar: &TarGraph) -> DegreeStats {
    let degs = tar.sets.iter().map(|&s| tar.degree(s));
    DegreeStats {
        max_degree: degs.clone().max().unwrap_or(0),
        min_degree: degs.min().unwrap_or(0),
    }
}

/// Largest d such that the TAR graph has an induced d-cube, which is n - X(G).
pub fn hypercube_dimension(tar: &TarGraph) -> Result<usize> {
    if !tar.kind.is_x() {
        return Err(Error::WrongDirection(tar.kind.name()));
    }
    Ok(tar.n() - tar.values.value)
}

/// Largest |W| over intervals `[S, S ∪ W]` consisting entirely of feasible sets,
/// found by exhaustive search over pairs of feasible sets.
pub fn largest_feasible_interval(tar: &TarGraph) -> usize {
    let mut best = 0;
    for &lo in &tar.sets {
        for &hi in &tar.sets {
            if !lo.is_subset(hi) || hi.len() - lo.len() <= best {
                continue;
            }
            let w = hi.difference(lo);
            let free = w.to_vec();
            let all = (0u32..1 << free.len()).all(|m| {
                let extra = free.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v);
                tar.contains(VertexSet::from_vertices(extra).union(lo))
            });
            if all {
                best = w.len();
            }
        }
    }
    best
}

pub fn cut_vertices(tar: &TarGraph) -> Vec<VertexSet> {
    let sg = tar.to_set_graph();
    sg.articulation_points().into_iter().map(|i| sg.labels[i]).collect()
}

/// Whether `S -> S xor r` maps the feasible family onto itself (it then preserves
/// adjacency automatically).
pub fn nu_automorphism_check(tar: &TarGraph, r: VertexSet) -> Result<bool> {
    if !tar.kind.is_x() {
        return Err(Error::WrongDirection(tar.kind.name()));
    }
    if !r.is_subset(tar.base.all()) {
        return Ok(false);
    }
    Ok(tar.sets.iter().all(|&s| tar.contains(s.sym_diff(r))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec, FamilySpec::*};
    use ParameterKind::*;

    fn b(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    fn tar(kind: ParameterKind, spec: FamilySpec) -> TarGraph {
        build_tar(kind, &b(spec)).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    fn star_graph(leaves: usize) -> SetGraph {
        let labels = (0..=leaves as u32).map(VertexSet).collect();
        let mut adj = vec![(1..=leaves).collect::<Vec<_>>()];
        adj.extend((1..=leaves).map(|_| vec![0]));
        SetGraph { labels, adj }
    }

    #[test]
    fn build_examples() {
        let zk4 = tar(StandardZeroForcing, Complete(4));
        assert_eq!(zk4.order(), 5);
        assert!(zk4.to_set_graph().is_isomorphic(&star_graph(4)));
        let sp4 = tar(SkewZeroForcing, Path(4));
        assert_eq!(sp4.order(), 16);
        assert!(sp4.to_set_graph().is_isomorphic(&hypercube(4)));
        let cstar = tar(ConnectedDomination, Star(3));
        assert_eq!(cstar.order(), 8);
        assert!(cstar.to_set_graph().is_isomorphic(&hypercube(3)));
    }

    #[test]
    fn slices() {
        let t = tar(Domination, Complete(4));
        let s1 = k_slice(&t, 1);
        assert_eq!(s1.order(), 4);
        assert_eq!(s1.edge_count(), 0);
        assert!(k_slice(&t, 2).is_connected());
        assert_eq!(k_slice(&t, 4).order(), t.order());
        assert_eq!(k_slice(&t, 4).edge_count(), t.edge_count());
        assert_eq!(k_slice(&t, 0).order(), 0);
    }

    fn profile(kind: ParameterKind, spec: FamilySpec) -> (usize, usize) {
        let p = connectivity_profile(&tar(kind, spec));
        (p.extreme, p.threshold)
    }

    #[test]
    fn profile_examples() {
        assert_eq!(profile(StandardZeroForcing, Path(5)), (3, 3));
        assert_eq!(profile(SkewZeroForcing, HMatch(2)).1, 4);
        assert_eq!(profile(Domination, CompleteBipartite(4, 5)), (3, 6));
        let t = tar(SkewZeroForcing, FHTwins(2));
        let p = connectivity_profile(&t);
        assert_eq!(
            (t.values().value, t.values().extremal, p.extreme, p.threshold),
            (2, 4, 3, 5)
        );
        let ind = connectivity_profile(&tar(Independence, CompleteBipartite(2, 3)));
        assert_eq!(ind.threshold, 0);
        assert_eq!(ind.extreme, 3);
    }

    #[test]
    fn profile_matches_slice_construction() {
        for kind in ParameterKind::ALL {
            for spec in [Path(5), Cycle(5), FullHouse, CompleteBipartite(2, 3), Star(4)] {
                let t = tar(kind, spec);
                let p = connectivity_profile(&t);
                for k in 0..=t.n() {
                    assert_eq!(p.connected[k], k_slice(&t, k).is_connected(), "{kind} k={k}");
                }
            }
        }
    }

    #[test]
    fn tj_examples() {
        let tj = build_tj(Domination, &b(Complete(4)), 1).unwrap();
        assert_eq!((tj.order(), tj.edge_count()), (4, 6));
    }

    #[test]
    fn hypercube_examples() {
        assert_eq!(hypercube_dimension(&tar(StandardZeroForcing, Complete(4))).unwrap(), 1);
        assert_eq!(hypercube_dimension(&tar(SkewZeroForcing, Path(4))).unwrap(), 4);
        let tree = b(DoubleBroom(2, 2, 1));
        let t = build_tar(PsdZeroForcing, &tree).unwrap();
        assert_eq!(hypercube_dimension(&t).unwrap(), tree.order() - 1);
        assert_eq!(largest_feasible_interval(&t), tree.order() - 1);
        assert!(matches!(
            hypercube_dimension(&tar(Independence, Path(3))),
            Err(Error::WrongDirection(_))
        ));
    }

    #[test]
    fn cut_vertex_examples() {
        let k23 = b(CompleteBipartite(2, 3));
        assert_eq!(cut_vertices(&build_tar(VertexCover, &k23).unwrap()), vec![k23.all()]);
        assert_eq!(cut_vertices(&build_tar(Independence, &k23).unwrap()), vec![VertexSet::EMPTY]);
        let p3 = b(Path(3));
        assert!(cut_vertices(&build_tar(StandardZeroForcing, &p3).unwrap())
            .iter()
            .all(|&s| s == p3.all()));
    }

    #[test]
    fn articulation_points_of_a_path() {
        let p = SetGraph::from_rule((0u32..5).map(VertexSet).collect(), |a, b| a.0.abs_diff(b.0) == 1);
        assert_eq!(p.articulation_points(), vec![1, 2, 3]);
        assert_eq!(hypercube(3).articulation_points(), Vec::<usize>::new());
    }

    #[test]
    fn nu_examples() {
        let f3 = tar(SkewZeroForcing, FlowerOfTriangles(3));
        assert!(nu_automorphism_check(&f3, set(&[0])).unwrap());
        assert!(nu_automorphism_check(&f3, VertexSet::EMPTY).unwrap());
        let k4 = tar(Domination, Complete(4));
        assert!(!nu_automorphism_check(&k4, set(&[0])).unwrap());
        assert!(nu_automorphism_check(&tar(Independence, Path(3)), VertexSet::EMPTY).is_err());
    }

    #[test]
    fn product_helper_builds_grids() {
        let p2 = hypercube(1);
        let sq = cartesian_product(&p2, &p2, 1);
        assert!(sq.is_isomorphic(&hypercube(2)));
        assert_eq!(sq.labels, vec![set(&[]), set(&[1]), set(&[0]), set(&[0, 1])]);
    }
}
