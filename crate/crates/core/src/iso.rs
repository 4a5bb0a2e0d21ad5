//! Isomorphism of TAR graphs, either through the extremal set systems of the base
//! graphs or directly through canonical forms of the TAR graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::kind::ParameterKind;
use crate::tar::{build_tar, TarGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IsoMethod {
    SetSystem,
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TarIsoResult {
    pub isomorphic: bool,
    pub method: IsoMethod,
    /// For the set-system method: `relabeling[v]` is the vertex of h matched with v.
    pub relabeling: Option<Vec<usize>>,
}

/// Whether comparing extremal set systems decides TAR isomorphism for this pair.
pub fn setsystem_valid(kind: ParameterKind, g: &Graph, h: &Graph) -> bool {
    kind.robust()
        && (!kind.is_x() || kind.value_at_k1() == 0 || (!g.has_isolated_vertex() && !h.has_isolated_vertex()))
}

fn profile(n: usize, family: &[VertexSet]) -> Vec<Vec<usize>> {
    (0..n)
        .map(|v| {
            let mut p: Vec<usize> = family.iter().filter(|s| s.contains(v)).map(|s| s.len()).collect();
            p.sort_unstable();
            p
        })
        .collect()
}

fn keyed(sizes: &[u64], masks: &[u32]) -> Vec<u64> {
    let mut k: Vec<u64> = sizes.iter().zip(masks).map(|(&s, &m)| s << 32 | m as u64).collect();
    k.sort_unstable();
    k
}

struct Matcher<'a> {
    a: &'a [VertexSet],
    b: &'a [VertexSet],
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    sizes_a: Vec<u64>,
    sizes_b: Vec<u64>,
    img_a: Vec<u32>,
    seen_b: Vec<u32>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for ci in 0..self.candidates[v].len() {
            let w = self.candidates[v][ci];
            if self.used[w] {
                continue;
            }
            for (i, s) in self.a.iter().enumerate() {
                if s.contains(v) {
                    self.img_a[i] |= 1 << w;
                }
            }
            for (i, t) in self.b.iter().enumerate() {
                if t.contains(w) {
                    self.seen_b[i] |= 1 << w;
                }
            }
            if keyed(&self.sizes_a, &self.img_a) == keyed(&self.sizes_b, &self.seen_b) {
                self.used[w] = true;
                self.map[v] = w;
                if self.search(depth + 1) {
                    return true;
                }
                self.used[w] = false;
            }
            for (i, s) in self.a.iter().enumerate() {
                if s.contains(v) {
                    self.img_a[i] &= !(1 << w);
                }
            }
            for (i, t) in self.b.iter().enumerate() {
                if t.contains(w) {
                    self.seen_b[i] &= !(1 << w);
                }
            }
        }
        false
    }
}

/// A bijection of `0..n` carrying family `a` onto family `b`, if one exists.
pub fn set_system_isomorphism(n: usize, a: &[VertexSet], b: &[VertexSet]) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let mut sa: Vec<usize> = a.iter().map(|s| s.len()).collect();
    let mut sb: Vec<usize> = b.iter().map(|s| s.len()).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let (pa, pb) = (profile(n, a), profile(n, b));
    let mut qa = pa.clone();
    let mut qb = pb.clone();
    qa.sort();
    qb.sort();
    if qa != qb {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&w| pb[w] == pa[v]).collect()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (candidates[v].len(), std::cmp::Reverse(pa[v].len()), v));
    let mut m = Matcher {
        a,
        b,
        order,
        candidates,
        sizes_a: a.iter().map(|s| s.len() as u64).collect(),
        sizes_b: b.iter().map(|s| s.len() as u64).collect(),
        img_a: vec![0; a.len()],
        seen_b: vec![0; b.len()],
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    m.search(0).then_some(m.map)
}

fn precondition_error(kind: ParameterKind) -> Error {
    Error::MethodPreconditionViolated(format!(
        "{kind}: needs a robust kind and, for minimizing kinds with value 1 on K1, \
         base graphs without isolated vertices"
    ))
}

pub fn tar_isomorphic_built(ta: &TarGraph, tb: &TarGraph, method: Option<IsoMethod>) -> Result<TarIsoResult> {
    let kind = ta.kind();
    let (g, h) = (ta.base(), tb.base());
    let valid = setsystem_valid(kind, g, h);
    let method = method.unwrap_or(if valid { IsoMethod::SetSystem } else { IsoMethod::Direct });
    match method {
        IsoMethod::SetSystem => {
            if !valid {
                return Err(precondition_error(kind));
            }
            let relabeling = if g.order() == h.order() {
                set_system_isomorphism(g.order(), ta.extremal_sets(), tb.extremal_sets())
            } else {
                None
            };
            Ok(TarIsoResult { isomorphic: relabeling.is_some(), method, relabeling })
        }
        IsoMethod::Direct => {
            let isomorphic = ta.order() == tb.order()
                && ta.edge_count() == tb.edge_count()
                && ta.to_set_graph().is_isomorphic(&tb.to_set_graph());
            Ok(TarIsoResult { isomorphic, method, relabeling: None })
        }
    }
}

/// Decides whether the TAR graphs of `g` and `h` are isomorphic. Without an explicit
/// method the set-system comparison is used whenever it is valid.
pub fn tar_isomorphic(kind: ParameterKind, g: &Graph, h: &Graph, method: Option<IsoMethod>) -> Result<TarIsoResult> {
    if method == Some(IsoMethod::SetSystem) && !setsystem_valid(kind, g, h) {
        return Err(precondition_error(kind));
    }
    tar_isomorphic_built(&build_tar(kind, g)?, &build_tar(kind, h)?, method)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec::*};
    use crate::graph::{combine, CombineOp};
    use ParameterKind::*;

    #[test]
    fn domination_k33_vs_prism() {
        let k33 = build_family(&CompleteBipartite(3, 3)).unwrap();
        let prism = build_family(&Cartesian(Box::new(Complete(3)), Box::new(Complete(2)))).unwrap();
        for m in [IsoMethod::SetSystem, IsoMethod::Direct] {
            assert!(tar_isomorphic(Domination, &k33, &prism, Some(m)).unwrap().isomorphic);
        }
        let r = tar_isomorphic(Domination, &k33, &prism, None).unwrap();
        assert_eq!(r.method, IsoMethod::SetSystem);
        let perm = r.relabeling.unwrap();
        let fa = crate::feasibility::extremal_feasible_sets(Domination, &k33).unwrap();
        let fb = crate::feasibility::extremal_feasible_sets(Domination, &prism).unwrap();
        let mapped: std::collections::BTreeSet<u32> = fa
            .iter()
            .map(|s| VertexSet::from_vertices(s.iter().map(|v| perm[v])).0)
            .collect();
        assert_eq!(mapped, fb.iter().map(|s| s.0).collect());
    }

    #[test]
    fn zir_cycle_with_chord() {
        let c5 = build_family(&Cycle(5)).unwrap();
        let mut chord = c5;
        chord.add_edge(0, 2);
        assert!(tar_isomorphic(ZeroForcingIrredundance, &c5, &chord, None).unwrap().isomorphic);
        assert!(tar_isomorphic(ZeroForcingIrredundance, &c5, &chord, Some(IsoMethod::Direct))
            .unwrap()
            .isomorphic);
    }

    #[test]
    fn preconditions() {
        let star = build_family(&Star(3)).unwrap();
        let p4 = build_family(&Path(4)).unwrap();
        assert!(matches!(
            tar_isomorphic(ConnectedDomination, &star, &p4, Some(IsoMethod::SetSystem)),
            Err(Error::MethodPreconditionViolated(_))
        ));
        let with_iso = combine(CombineOp::Union, &p4, &Graph::empty(1).unwrap()).unwrap();
        assert!(tar_isomorphic(Domination, &with_iso, &p4, Some(IsoMethod::SetSystem)).is_err());
        assert!(tar_isomorphic(VertexCover, &with_iso, &p4, Some(IsoMethod::SetSystem)).is_ok());
        assert!(tar_isomorphic(Independence, &with_iso, &p4, Some(IsoMethod::SetSystem)).is_ok());
        assert_eq!(
            tar_isomorphic(ConnectedDomination, &star, &p4, None).unwrap().method,
            IsoMethod::Direct
        );
    }
}
