//! Feasibility predicates, colour-change closures and extremal sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::kind::ParameterKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ForcingRule {
    Standard,
    Psd,
    Skew,
}

pub fn closed_neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter().fold(s, |acc, v| acc.union(g.neighbors(v)))
}

pub fn forcing_closure(rule: ForcingRule, g: &Graph, s: VertexSet) -> VertexSet {
    let n = g.order();
    let mut blue = s;
    match rule {
        ForcingRule::Standard | ForcingRule::Skew => loop {
            let white = blue.complement(n);
            let forcers = if rule == ForcingRule::Standard { blue } else { g.all() };
            let mut next = blue;
            for u in forcers.iter() {
                let w = g.neighbors(u).intersection(white);
                if w.len() == 1 {
                    next = next.union(w);
                }
            }
            if next == blue {
                return blue;
            }
            blue = next;
        },
        ForcingRule::Psd => 'outer: loop {
            let white = blue.complement(n);
            for comp in g.components_of(white) {
                for u in blue.iter() {
                    let w = g.neighbors(u).intersection(comp);
                    if w.len() == 1 {
                        blue = blue.union(w);
                        continue 'outer;
                    }
                }
            }
            return blue;
        },
    }
}

pub fn is_fort(g: &Graph, f: VertexSet) -> bool {
    !f.is_empty()
        && f.complement(g.order())
            .iter()
            .all(|v| g.neighbors(v).intersection(f).len() != 1)
}

/// Exhaustive search for a fort meeting `t` exactly in `{x}`.
pub fn has_private_fort(g: &Graph, t: VertexSet, x: usize) -> Result<bool> {
    if !t.contains(x) {
        return Err(Error::VertexNotInSet(x));
    }
    let free = t.complement(g.order()).to_vec();
    let base = VertexSet::singleton(x);
    Ok((0u64..1 << free.len()).any(|mask| {
        let f = free
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(base, |acc, (_, &v)| acc.insert(v));
        is_fort(g, f)
    }))
}

/// Feasibility test for one kind on one graph, with the per-graph checks done once.
#[derive(Clone, Copy, Debug)]
pub struct Feasibility<'a> {
    kind: ParameterKind,
    g: &'a Graph,
}

impl<'a> Feasibility<'a> {
    pub fn new(kind: ParameterKind, g: &'a Graph) -> Result<Self> {
        if kind == ParameterKind::ConnectedDomination && !g.is_connected() {
            return Err(Error::KindUnsupportedOnGraph {
                kind: kind.name(),
                reason: "connected domination needs a connected graph".into(),
            });
        }
        Ok(Feasibility { kind, g })
    }

    pub fn kind(&self) -> ParameterKind {
        self.kind
    }

    pub fn graph(&self) -> &'a Graph {
        self.g
    }

    pub fn test(&self, s: VertexSet) -> bool {
        let g = self.g;
        let all = g.all();
        match self.kind {
            ParameterKind::Domination => closed_neighborhood(g, s) == all,
            ParameterKind::PowerDomination => {
                forcing_closure(ForcingRule::Standard, g, closed_neighborhood(g, s)) == all
            }
            ParameterKind::StandardZeroForcing => forcing_closure(ForcingRule::Standard, g, s) == all,
            ParameterKind::PsdZeroForcing => forcing_closure(ForcingRule::Psd, g, s) == all,
            ParameterKind::SkewZeroForcing => forcing_closure(ForcingRule::Skew, g, s) == all,
            ParameterKind::VertexCover => s
                .complement(g.order())
                .iter()
                .all(|v| g.neighbors(v).is_subset(s)),
            ParameterKind::ConnectedDomination => closed_neighborhood(g, s) == all && g.is_connected_set(s),
            ParameterKind::Independence => s.iter().all(|v| g.neighbors(v).intersection(s).is_empty()),
            ParameterKind::Irredundance => s.iter().all(|x| {
                let others = closed_neighborhood(g, s.remove(x));
                !g.closed_neighbors(x).difference(others).is_empty()
            }),
            // The union of all forts avoiding B is exactly what standard forcing from B
            // leaves white, so x has a private fort iff x stays white from T \ {x}.
            ParameterKind::ZeroForcingIrredundance => s
                .iter()
                .all(|x| !forcing_closure(ForcingRule::Standard, g, s.remove(x)).contains(x)),
        }
    }

    /// Feasibility of every subset, indexed by its bitmask.
    pub fn table(&self) -> Vec<bool> {
        (0u32..1 << self.g.order()).map(|m| self.test(VertexSet(m))).collect()
    }
}

pub fn is_feasible(kind: ParameterKind, g: &Graph, s: VertexSet) -> Result<bool> {
    Ok(Feasibility::new(kind, g)?.test(s))
}

fn sort_sets(sets: &mut [VertexSet]) {
    sets.sort_by_key(|s| (s.len(), s.to_vec()));
}

/// Minimal (X) or maximal (Y) feasible sets from a full feasibility table.
pub fn extremal_from_table(kind: ParameterKind, n: usize, table: &[bool]) -> Vec<VertexSet> {
    let full = VertexSet::full(n);
    let mut out: Vec<VertexSet> = (0u32..1 << n)
        .map(VertexSet)
        .filter(|&s| table[s.0 as usize])
        .filter(|&s| {
            if kind.is_x() {
                s.iter().all(|v| !table[s.remove(v).0 as usize])
            } else {
                s.complement(n).iter().all(|v| !table[s.insert(v).0 as usize])
            }
        })
        .collect();
    debug_assert!(out.iter().all(|s| s.is_subset(full)));
    sort_sets(&mut out);
    out
}

pub fn extremal_feasible_sets(kind: ParameterKind, g: &Graph) -> Result<Vec<VertexSet>> {
    let table = Feasibility::new(kind, g)?.table();
    Ok(extremal_from_table(kind, g.order(), &table))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterValues {
    pub kind: ParameterKind,
    /// X(G) for minimizing kinds, Y(G) for maximizing kinds.
    pub value: usize,
    /// Largest minimal set (X) or smallest maximal set (Y).
    pub extremal: usize,
}

pub fn values_from_extremal(kind: ParameterKind, extremal: &[VertexSet]) -> ParameterValues {
    let sizes = extremal.iter().map(|s| s.len());
    let (lo, hi) = (sizes.clone().min().unwrap_or(0), sizes.max().unwrap_or(0));
    if kind.is_x() {
        ParameterValues { kind, value: lo, extremal: hi }
    } else {
        ParameterValues { kind, value: hi, extremal: lo }
    }
}

pub fn parameter_values(kind: ParameterKind, g: &Graph) -> Result<ParameterValues> {
    Ok(values_from_extremal(kind, &extremal_feasible_sets(kind, g)?))
}

pub fn irrelevant_from_extremal(kind: ParameterKind, n: usize, extremal: &[VertexSet]) -> VertexSet {
    if kind.is_x() {
        extremal
            .iter()
            .fold(VertexSet::EMPTY, |acc, &s| acc.union(s))
            .complement(n)
    } else {
        extremal.iter().fold(VertexSet::full(n), |acc, &s| acc.intersection(s))
    }
}

pub fn irrelevant_vertices(kind: ParameterKind, g: &Graph) -> Result<VertexSet> {
    Ok(irrelevant_from_extremal(kind, g.order(), &extremal_feasible_sets(kind, g)?))
}

/// Vertices left after repeatedly deleting a leaf together with its neighbour
/// (lowest-numbered leaf first).
pub fn leaf_strip_set(g: &Graph) -> VertexSet {
    let mut rest = g.all();
    while let Some(leaf) = rest.iter().find(|&v| g.neighbors(v).intersection(rest).len() == 1) {
        let nbr = g.neighbors(leaf).intersection(rest);
        rest = rest.remove(leaf).difference(nbr);
    }
    rest
}

/// Residual graph of the leaf-stripping procedure; `None` when nothing remains.
pub fn leaf_strip(g: &Graph) -> Option<Graph> {
    g.induced(leaf_strip_set(g))
}

pub const MAX_HOLE_SEARCH_ORDER: usize = 12;

pub fn is_even_hole_free(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n > MAX_HOLE_SEARCH_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let hole = (0u32..1 << n).map(VertexSet).any(|s| {
        s.len() >= 4
            && s.len() % 2 == 0
            && s.iter().all(|v| g.neighbors(v).intersection(s).len() == 2)
            && g.is_connected_set(s)
    });
    Ok(!hole)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec, FamilySpec::*};
    use crate::graph::{combine, CombineOp};
    use ParameterKind::*;

    fn b(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    #[test]
    fn neighborhoods() {
        let p4 = b(Path(4));
        assert_eq!(closed_neighborhood(&p4, set(&[1])), set(&[0, 1, 2]));
        assert_eq!(closed_neighborhood(&p4, VertexSet::EMPTY), VertexSet::EMPTY);
        let k23 = b(CompleteBipartite(2, 3));
        assert_eq!(closed_neighborhood(&k23, set(&[0])), set(&[0, 2, 3, 4]));
    }

    #[test]
    fn closures() {
        let p4 = b(Path(4));
        assert_eq!(forcing_closure(ForcingRule::Standard, &p4, set(&[0])), p4.all());
        assert_eq!(forcing_closure(ForcingRule::Skew, &p4, VertexSet::EMPTY), p4.all());
        let star = b(Star(3));
        assert_eq!(forcing_closure(ForcingRule::Psd, &star, set(&[0])), star.all());
        assert_eq!(forcing_closure(ForcingRule::Standard, &star, set(&[0])), set(&[0]));
        let c4 = b(Cycle(4));
        assert_eq!(forcing_closure(ForcingRule::Standard, &c4, set(&[0])), set(&[0]));
    }

    #[test]
    fn feasibility_examples() {
        let k23 = b(CompleteBipartite(2, 3));
        assert!(is_feasible(Domination, &k23, set(&[0, 2])).unwrap());
        assert!(is_feasible(SkewZeroForcing, &b(FullHouse), set(&[3])).unwrap());
        assert!(is_feasible(VertexCover, &b(Path(4)), set(&[1, 2])).unwrap());
        assert!(!is_feasible(Independence, &b(Complete(3)), set(&[1, 2])).unwrap());
        let two = b(Empty(2));
        assert!(matches!(
            is_feasible(ConnectedDomination, &two, two.all()),
            Err(Error::KindUnsupportedOnGraph { .. })
        ));
    }

    #[test]
    fn forts() {
        let g = b(Cycle(5));
        assert!(is_fort(&g, g.all()));
        assert!(!is_fort(&g, VertexSet::EMPTY));
        let star = b(Star(3));
        assert!(is_fort(&star, set(&[1, 2])));
        assert!(is_fort(&star, set(&[2, 3])));
        assert!(!is_fort(&b(Path(4)), set(&[0, 3])));
    }

    #[test]
    fn private_forts() {
        let k4 = b(Complete(4));
        assert!(has_private_fort(&k4, set(&[2]), 2).unwrap());
        let star = b(Star(3));
        assert!(!has_private_fort(&star, set(&[0, 1]), 0).unwrap());
        assert!(has_private_fort(&b(Path(4)), set(&[0]), 0).unwrap());
        assert_eq!(has_private_fort(&k4, set(&[1]), 0), Err(Error::VertexNotInSet(0)));
    }

    #[test]
    fn extremal_examples() {
        let k23 = b(CompleteBipartite(2, 3));
        let dom = extremal_feasible_sets(Domination, &k23).unwrap();
        assert_eq!(dom.len(), 8);
        assert!(dom.contains(&set(&[0, 1])));
        assert!(dom.contains(&set(&[2, 3, 4])));
        assert_eq!(dom.iter().filter(|s| s.len() == 2).count(), 7);
        assert_eq!(
            extremal_feasible_sets(SkewZeroForcing, &b(FullHouse)).unwrap(),
            vec![set(&[3]), set(&[4]), set(&[0, 1, 2])]
        );
        assert_eq!(
            extremal_feasible_sets(Independence, &k23).unwrap(),
            vec![set(&[0, 1]), set(&[2, 3, 4])]
        );
    }

    #[test]
    fn value_examples() {
        let pv = |k, g: &Graph| {
            let v = parameter_values(k, g).unwrap();
            (v.value, v.extremal)
        };
        assert_eq!(pv(PsdZeroForcing, &b(CompleteBipartite(2, 4))), (2, 4));
        assert_eq!(pv(SkewZeroForcing, &b(Complete(5))), (3, 3));
        assert_eq!(pv(VertexCover, &b(Path(5))).0, 2);
        assert_eq!(pv(ZeroForcingIrredundance, &b(Complete(4))), (3, 3));
    }

    #[test]
    fn irrelevant_examples() {
        assert_eq!(irrelevant_vertices(SkewZeroForcing, &b(FlowerOfTriangles(3))).unwrap(), set(&[0]));
        let p4k1 = combine(CombineOp::Union, &b(Path(4)), &b(Complete(1))).unwrap();
        assert_eq!(irrelevant_vertices(VertexCover, &p4k1).unwrap(), set(&[4]));
        assert_eq!(irrelevant_vertices(Domination, &b(Complete(4))).unwrap(), VertexSet::EMPTY);
    }

    #[test]
    fn leaf_stripping() {
        assert!(leaf_strip(&b(Path(4))).is_none());
        assert!(leaf_strip(&b(HalfGraph(3))).is_none());
        let c5 = b(Cycle(5));
        assert_eq!(leaf_strip(&c5), Some(c5));
    }

    #[test]
    fn even_holes() {
        assert!(!is_even_hole_free(&b(Cycle(4))).unwrap());
        assert!(is_even_hole_free(&b(Cycle(5))).unwrap());
        assert!(is_even_hole_free(&b(DoubleBroom(3, 2, 2))).unwrap());
        assert!(!is_even_hole_free(&b(Cycle(6))).unwrap());
        assert!(matches!(is_even_hole_free(&b(Path(13))), Err(Error::OrderTooLarge(13))));
    }

    #[test]
    fn zir_matches_exhaustive_fort_search() {
        for n in 1..=6 {
            for g in crate::generate::generate_nonisomorphic(n, crate::generate::GraphFilter::All).unwrap() {
                let f = Feasibility::new(ZeroForcingIrredundance, &g).unwrap();
                for m in 0u32..1 << n {
                    let t = VertexSet(m);
                    let brute = t.iter().all(|x| has_private_fort(&g, t, x).unwrap());
                    assert_eq!(f.test(t), brute, "{g:?} {t}");
                }
            }
        }
    }

    #[test]
    fn minimality_shortcut_matches_full_subset_check() {
        for n in 1..=5 {
            for g in crate::generate::generate_nonisomorphic(n, crate::generate::GraphFilter::Connected).unwrap() {
                for kind in ParameterKind::ALL {
                    let table = Feasibility::new(kind, &g).unwrap().table();
                    let fast = extremal_from_table(kind, n, &table);
                    let mut slow: Vec<VertexSet> = (0u32..1 << n)
                        .map(VertexSet)
                        .filter(|&s| table[s.0 as usize])
                        .filter(|&s| {
                            (0u32..1 << n).map(VertexSet).all(|t| {
                                let comparable = if kind.is_x() { t.is_subset(s) } else { s.is_subset(t) };
                                t == s || !comparable || !table[t.0 as usize]
                            })
                        })
                        .collect();
                    sort_sets(&mut slow);
                    assert_eq!(fast, slow);
                }
            }
        }
    }
}
