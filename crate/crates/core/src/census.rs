//! Uniqueness census: partition a universe of base graphs into TAR-isomorphism classes.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::generate::{generate_nonisomorphic, GraphFilter, MAX_GENERATED_ORDER};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{parse_graph6_stream, write_graph6};
use crate::iso::{set_system_isomorphism, setsystem_valid, IsoMethod};
use crate::kind::ParameterKind;
use crate::tar::build_tar;

#[derive(Clone, Debug)]
pub enum GraphSource {
    Builtin,
    /// Graphs read from a graph6 stream; records of other orders are skipped.
    Graphs(Vec<Graph>),
}

impl GraphSource {
    pub fn from_graph6_text(text: &str) -> Result<GraphSource> {
        Ok(GraphSource::Graphs(parse_graph6_stream(text)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Universe {
    NoIsolated,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub universe: Universe,
    /// Forces a comparison method; by default the set-system method is used when valid.
    pub method: Option<IsoMethod>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { universe: Universe::NoIsolated, method: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub kind: ParameterKind,
    pub n: usize,
    pub universe: usize,
    pub unique: usize,
    pub ratio: f64,
}

impl CensusRow {
    pub const CSV_HEADER: &'static str = "kind,n,universe,unique,ratio";

    pub fn to_csv(&self) -> String {
        format!("{},{},{},{},{:.4}", self.kind, self.n, self.universe, self.unique, self.ratio)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusClasses {
    pub kind: ParameterKind,
    pub n: usize,
    pub method: IsoMethod,
    pub graphs: Vec<String>,
    /// Indices into `graphs`; each class sorted, classes ordered by first member.
    pub classes: Vec<Vec<usize>>,
}

impl CensusClasses {
    pub fn row(&self) -> CensusRow {
        let universe = self.graphs.len();
        let unique = self.classes.iter().filter(|c| c.len() == 1).count();
        let ratio = if universe == 0 { 0.0 } else { unique as f64 / universe as f64 };
        CensusRow { kind: self.kind, n: self.n, universe, unique, ratio }
    }

    /// Classes with their members written as graph6 records.
    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<Vec<&str>> = self
            .classes
            .iter()
            .map(|c| c.iter().map(|&i| self.graphs[i].as_str()).collect())
            .collect();
        let row = self.row();
        serde_json::json!({
            "kind": self.kind.name(),
            "n": self.n,
            "method": self.method,
            "universe": row.universe,
            "unique": row.unique,
            "classes": classes,
        })
    }
}

/// Universe of order-`n` graphs for a census of `kind`. Connected domination is only
/// defined on connected graphs, so its universe is restricted to them.
pub fn census_universe(kind: ParameterKind, n: usize, source: &GraphSource, universe: Universe) -> Result<Vec<Graph>> {
    let filter = if kind == ParameterKind::ConnectedDomination {
        GraphFilter::Connected
    } else {
        match universe {
            Universe::NoIsolated => GraphFilter::NoIsolated,
            Universe::All => GraphFilter::All,
        }
    };
    match source {
        GraphSource::Builtin => {
            if n > MAX_GENERATED_ORDER {
                return Err(Error::SourceRequired(n));
            }
            generate_nonisomorphic(n, filter)
        }
        GraphSource::Graphs(gs) => {
            let mut seen: HashSet<CanonicalForm> = HashSet::new();
            Ok(gs
                .iter()
                .filter(|g| g.order() == n && filter.accepts(g))
                .filter(|g| seen.insert(canonical_form(g)))
                .copied()
                .collect())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Invariants {
    value: usize,
    extremal: usize,
    tar_order: usize,
    degrees: Vec<usize>,
}

struct Summary {
    inv: Invariants,
    family: Vec<VertexSet>,
    form: Option<CanonicalForm>,
}

fn summarize(kind: ParameterKind, g: &Graph, direct: bool) -> Result<Summary> {
    let tar = build_tar(kind, g)?;
    let mut degrees: Vec<usize> = tar.sets().iter().map(|&s| tar.degree(s)).collect();
    degrees.sort_unstable();
    let v = tar.values();
    Ok(Summary {
        inv: Invariants { value: v.value, extremal: v.extremal, tar_order: tar.order(), degrees },
        family: tar.extremal_sets().to_vec(),
        form: direct.then(|| tar.canonical_form()),
    })
}

pub fn uniqueness_classes_in(kind: ParameterKind, graphs: &[Graph], method: Option<IsoMethod>) -> Result<Vec<Vec<usize>>> {
    let all_valid = graphs.iter().all(|g| setsystem_valid(kind, g, g));
    let method = method.unwrap_or(if all_valid { IsoMethod::SetSystem } else { IsoMethod::Direct });
    if method == IsoMethod::SetSystem && !all_valid {
        return Err(Error::MethodPreconditionViolated(format!(
            "{kind}: set-system comparison is not valid on this universe"
        )));
    }
    let direct = method == IsoMethod::Direct;
    let summaries: Vec<Summary> = graphs
        .par_iter()
        .map(|g| summarize(kind, g, direct))
        .collect::<Result<_>>()?;
    let mut groups: BTreeMap<&Invariants, Vec<usize>> = BTreeMap::new();
    for (i, s) in summaries.iter().enumerate() {
        groups.entry(&s.inv).or_default().push(i);
    }
    let groups: Vec<Vec<usize>> = groups.into_values().collect();
    let mut classes: Vec<Vec<usize>> = groups
        .par_iter()
        .flat_map_iter(|members| {
            let mut local: Vec<Vec<usize>> = Vec::new();
            for &i in members {
                let n = graphs[i].order();
                let found = local.iter_mut().find(|c| {
                    let r = c[0];
                    if direct {
                        summaries[r].form == summaries[i].form
                    } else {
                        graphs[r].order() == n
                            && set_system_isomorphism(n, &summaries[i].family, &summaries[r].family).is_some()
                    }
                });
                match found {
                    Some(c) => c.push(i),
                    None => local.push(vec![i]),
                }
            }
            local
        })
        .collect();
    classes.sort();
    Ok(classes)
}

pub fn uniqueness_classes_with(
    kind: ParameterKind,
    n: usize,
    source: &GraphSource,
    opts: CensusOptions,
) -> Result<CensusClasses> {
    let graphs = census_universe(kind, n, source, opts.universe)?;
    let all_valid = graphs.iter().all(|g| setsystem_valid(kind, g, g));
    let method = opts.method.unwrap_or(if all_valid { IsoMethod::SetSystem } else { IsoMethod::Direct });
    let classes = uniqueness_classes_in(kind, &graphs, Some(method))?;
    Ok(CensusClasses { kind, n, method, graphs: graphs.iter().map(write_graph6).collect(), classes })
}

pub fn uniqueness_classes(kind: ParameterKind, n: usize, source: &GraphSource) -> Result<CensusClasses> {
    uniqueness_classes_with(kind, n, source, CensusOptions::default())
}

pub fn run_census(kind: ParameterKind, n: usize, source: &GraphSource) -> Result<CensusRow> {
    Ok(uniqueness_classes(kind, n, source)?.row())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec::*};
    use crate::graph6::parse_graph6;
    use ParameterKind::*;

    #[test]
    fn small_rows() {
        assert_eq!(run_census(PsdZeroForcing, 5, &GraphSource::Builtin).unwrap().to_csv(), "psd,5,23,10,0.4348");
        assert_eq!(run_census(StandardZeroForcing, 6, &GraphSource::Builtin).unwrap().unique, 34);
        assert_eq!(run_census(Domination, 6, &GraphSource::Builtin).unwrap().unique, 55);
    }

    #[test]
    fn k33_class() {
        let c = uniqueness_classes(Domination, 6, &GraphSource::Builtin).unwrap();
        let k33 = canonical_form(&build_family(&CompleteBipartite(3, 3)).unwrap());
        let prism = canonical_form(&build_family(&Cartesian(Box::new(Complete(3)), Box::new(Complete(2)))).unwrap());
        let class = c
            .classes
            .iter()
            .find(|cl| cl.iter().any(|&i| canonical_form(&parse_graph6(&c.graphs[i]).unwrap()) == k33))
            .unwrap();
        let forms: Vec<CanonicalForm> =
            class.iter().map(|&i| canonical_form(&parse_graph6(&c.graphs[i]).unwrap())).collect();
        assert_eq!(forms.len(), 2);
        assert!(forms.contains(&prism));
    }

    #[test]
    fn stream_source_and_errors() {
        let text: String = generate_nonisomorphic(4, GraphFilter::All)
            .unwrap()
            .iter()
            .map(|g| write_graph6(g) + "\n")
            .collect();
        let src = GraphSource::from_graph6_text(&text).unwrap();
        let a = run_census(Domination, 4, &src).unwrap();
        let b = run_census(Domination, 4, &GraphSource::Builtin).unwrap();
        assert_eq!(a, b);
        assert_eq!(run_census(Domination, 9, &GraphSource::Builtin), Err(Error::SourceRequired(9)));
    }

    #[test]
    fn methods_agree() {
        for kind in [Domination, SkewZeroForcing, Independence] {
            let a = uniqueness_classes_with(kind, 5, &GraphSource::Builtin, CensusOptions::default()).unwrap();
            let b = uniqueness_classes_with(
                kind,
                5,
                &GraphSource::Builtin,
                CensusOptions { method: Some(IsoMethod::Direct), ..Default::default() },
            )
            .unwrap();
            assert_eq!(a.classes, b.classes);
        }
    }
}
