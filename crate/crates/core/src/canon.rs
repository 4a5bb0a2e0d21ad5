//! Canonical labeling by colour refinement and individualization, with automorphism
//! pruning. Works on arbitrary adjacency lists so it serves base graphs and
//! reconfiguration graphs alike.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Order, vertex colours (if any) and upper-triangle adjacency bits of the canonical
/// relabeling. Equal exactly for isomorphic (colour-preserving) inputs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(pub Vec<u8>);

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0100_0000_01b3;

fn fnv(h: u64, x: u64) -> u64 {
    x.to_le_bytes().iter().fold(h, |h, &b| (h ^ b as u64).wrapping_mul(FNV_PRIME))
}

/// Colours are "cell starts": a vertex's colour is the number of vertices in strictly
/// smaller cells.
fn normalize(keys: &[u64]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by_key(|&v| keys[v]);
    let mut col = vec![0u32; keys.len()];
    for (i, &v) in order.iter().enumerate() {
        col[v] = if i > 0 && keys[order[i - 1]] == keys[v] { col[order[i - 1]] } else { i as u32 };
    }
    col
}

fn cell_count(col: &[u32]) -> usize {
    let mut seen = vec![false; col.len()];
    col.iter().filter(|&&c| !std::mem::replace(&mut seen[c as usize], true)).count()
}

fn refine(adj: &[Vec<usize>], col: &mut Vec<u32>) {
    let n = col.len();
    let mut cells = cell_count(col);
    let mut sig: Vec<Vec<u32>> = vec![Vec::new(); n];
    loop {
        for v in 0..n {
            let s = &mut sig[v];
            s.clear();
            s.push(col[v]);
            s.extend(adj[v].iter().map(|&w| col[w]));
            s[1..].sort_unstable();
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sig[a].cmp(&sig[b]));
        let mut next = vec![0u32; n];
        for (i, &v) in order.iter().enumerate() {
            next[v] = if i > 0 && sig[order[i - 1]] == sig[v] { next[order[i - 1]] } else { i as u32 };
        }
        let now = cell_count(&next);
        *col = next;
        if now == cells {
            return;
        }
        cells = now;
    }
}

fn node_invariant(adj: &[Vec<usize>], col: &[u32]) -> u64 {
    let n = col.len();
    let mut rep = vec![usize::MAX; n];
    for v in 0..n {
        if rep[col[v] as usize] == usize::MAX {
            rep[col[v] as usize] = v;
        }
    }
    let mut h = FNV_OFFSET;
    let mut nbr = Vec::new();
    for (c, &v) in rep.iter().enumerate() {
        if v == usize::MAX {
            continue;
        }
        nbr.clear();
        nbr.extend(adj[v].iter().map(|&w| col[w]));
        nbr.sort_unstable();
        h = fnv(h, c as u64);
        h = fnv(h, nbr.len() as u64);
        for &x in &nbr {
            h = fnv(h, x as u64);
        }
    }
    h
}

fn certificate(adj: &[Vec<usize>], col: &[u32]) -> Vec<u64> {
    let n = col.len();
    let words = n.div_ceil(64).max(1);
    let mut rows = vec![0u64; n * words];
    for v in 0..n {
        let p = col[v] as usize;
        for &w in &adj[v] {
            let q = col[w] as usize;
            rows[p * words + q / 64] |= 1 << (63 - q % 64);
        }
    }
    rows
}

struct Best {
    invs: Vec<u64>,
    cert: Vec<u64>,
    lab: Vec<u32>,
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    best: Option<Best>,
    autos: Vec<Vec<usize>>,
    invs: Vec<u64>,
}

const MAX_AUTOS: usize = 256;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    fn visit(&mut self, mut col: Vec<u32>, fixed: &mut Vec<usize>) {
        refine(self.adj, &mut col);
        self.invs.push(node_invariant(self.adj, &col));
        if let Some(best) = &self.best {
            let m = self.invs.len().min(best.invs.len());
            if self.invs[..m] < best.invs[..m] {
                self.invs.pop();
                return;
            }
        }
        let n = col.len();
        if cell_count(&col) == n {
            self.leaf(col);
            self.invs.pop();
            return;
        }
        let mut size = vec![0usize; n];
        for &c in &col {
            size[c as usize] += 1;
        }
        let target = (0..n)
            .filter(|&c| size[c] > 1)
            .min_by_key(|&c| (size[c], c))
            .expect("non-discrete colouring has a non-singleton cell") as u32;
        let cell: Vec<usize> = (0..n).filter(|&v| col[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() && self.same_orbit(fixed, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = col.clone();
            for &u in &cell {
                if u != v {
                    child[u] = target + 1;
                }
            }
            fixed.push(v);
            self.visit(child, fixed);
            fixed.pop();
        }
        self.invs.pop();
    }

    fn same_orbit(&self, fixed: &[usize], tried: &[usize], v: usize) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut any = false;
        for g in &self.autos {
            if fixed.iter().all(|&f| g[f] == f) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, g[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn leaf(&mut self, col: Vec<u32>) {
        let cert = certificate(self.adj, &col);
        let cmp = match &self.best {
            None => Ordering::Greater,
            Some(b) => (&self.invs, &cert).cmp(&(&b.invs, &b.cert)),
        };
        match cmp {
            Ordering::Greater => {
                self.best = Some(Best { invs: self.invs.clone(), cert, lab: col });
            }
            Ordering::Equal => {
                if self.autos.len() < MAX_AUTOS {
                    let best = self.best.as_ref().expect("equal implies present");
                    let mut at = vec![0usize; col.len()];
                    for (v, &p) in best.lab.iter().enumerate() {
                        at[p as usize] = v;
                    }
                    let gamma: Vec<usize> = col.iter().map(|&p| at[p as usize]).collect();
                    if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                        self.autos.push(gamma);
                    }
                }
            }
            Ordering::Less => {}
        }
    }
}

/// Canonical position of every vertex: `lab[v]` is the position of `v` in the
/// canonical ordering. `colors` may be empty for an uncoloured graph.
pub fn canonical_labeling(adj: &[Vec<usize>], colors: &[u64]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let keys: Vec<u64> = if colors.is_empty() { vec![0; n] } else { colors.to_vec() };
    let col = normalize(&keys);
    let mut search = Search { adj, best: None, autos: Vec::new(), invs: Vec::new() };
    search.visit(col, &mut Vec::new());
    search.best.expect("search reaches a leaf").lab.into_iter().map(|p| p as usize).collect()
}

pub fn canonical_form_adj(adj: &[Vec<usize>], colors: &[u64]) -> CanonicalForm {
    let n = adj.len();
    let lab = canonical_labeling(adj, colors);
    let mut bytes = (n as u32).to_be_bytes().to_vec();
    if !colors.is_empty() {
        let mut by_pos = vec![0u64; n];
        for v in 0..n {
            by_pos[lab[v]] = colors[v];
        }
        for c in by_pos {
            bytes.extend_from_slice(&c.to_be_bytes());
        }
    }
    let mut cur = 0u8;
    let mut k = 0;
    let mut at = vec![0usize; n];
    for v in 0..n {
        at[lab[v]] = v;
    }
    let mut is_adj = vec![false; n];
    for j in 1..n {
        for &w in &adj[at[j]] {
            is_adj[lab[w]] = true;
        }
        for flag in is_adj.iter().take(j) {
            cur = cur << 1 | *flag as u8;
            k += 1;
            if k % 8 == 0 {
                bytes.push(cur);
                cur = 0;
            }
        }
        for &w in &adj[at[j]] {
            is_adj[lab[w]] = false;
        }
    }
    if k % 8 != 0 {
        bytes.push(cur << (8 - k % 8));
    }
    CanonicalForm(bytes)
}

pub fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect()
}

/// The canonical relabeling of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let lab = canonical_labeling(&adjacency_lists(g), &[]);
    g.relabel(&lab)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_adj(&adjacency_lists(g), &[])
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec::*};
    use crate::graph::{combine, CombineOp};

    fn p4() -> Graph {
        build_family(&Path(4)).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn relabelings_share_a_form() {
        let g = p4();
        let f = canonical_form(&g);
        for perm in permutations(4) {
            assert_eq!(canonical_form(&g.relabel(&perm)), f);
        }
    }

    #[test]
    fn distinguishes_small_pairs() {
        let star = build_family(&Star(3)).unwrap();
        assert_ne!(canonical_form(&star), canonical_form(&p4()));
        assert!(!is_isomorphic(&star, &p4()));
        let k33 = build_family(&CompleteBipartite(3, 3)).unwrap();
        let prism = combine(
            CombineOp::Cartesian,
            &build_family(&Complete(3)).unwrap(),
            &build_family(&Complete(2)).unwrap(),
        )
        .unwrap();
        assert_ne!(canonical_form(&k33), canonical_form(&prism));
        assert!(!is_isomorphic(&k33, &prism));
    }

    // Brute force over all labelings: the minimum graph6 string is a canonical form.
    fn brute_canon(g: &Graph) -> String {
        permutations(g.order())
            .iter()
            .map(|p| crate::graph6::write_graph6(&g.relabel(p)))
            .min()
            .unwrap()
    }

    #[test]
    fn agrees_with_brute_force_on_order_5() {
        let pairs: Vec<(usize, usize)> = (1..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut by_brute = std::collections::HashMap::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> =
                pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            let key = brute_canon(&g);
            let form = canonical_form(&g);
            let prev = by_brute.entry(key).or_insert_with(|| form.clone());
            assert_eq!(*prev, form);
        }
        assert_eq!(by_brute.len(), 34);
        let distinct: std::collections::HashSet<_> = by_brute.values().collect();
        assert_eq!(distinct.len(), 34);
    }

    #[test]
    fn symmetric_graphs_terminate() {
        // Petersen graph and a 6-cube exercise automorphism pruning.
        let mut outer = Vec::new();
        for i in 0..5 {
            outer.push((i, (i + 1) % 5));
            outer.push((i, i + 5));
            outer.push((5 + i, 5 + (i + 2) % 5));
        }
        let pet = Graph::from_edges(10, &outer).unwrap();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        assert_eq!(canonical_form(&pet), canonical_form(&pet.relabel(&perm)));

        let q6: Vec<Vec<usize>> = (0..64).map(|v| (0..6).map(|b| v ^ (1 << b)).collect()).collect();
        let shuffled: Vec<usize> = (0..64).map(|v| (v * 37 + 11) % 64).collect();
        let mut q6b = vec![Vec::new(); 64];
        for v in 0..64 {
            q6b[shuffled[v]] = q6[v].iter().map(|&w| shuffled[w]).collect();
        }
        assert_eq!(canonical_form_adj(&q6, &[]), canonical_form_adj(&q6b, &[]));
    }

    #[test]
    fn colours_are_respected() {
        let adj = adjacency_lists(&p4());
        let a = canonical_form_adj(&adj, &[1, 0, 0, 0]);
        let b = canonical_form_adj(&adj, &[0, 0, 0, 1]);
        let c = canonical_form_adj(&adj, &[0, 1, 0, 0]);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
