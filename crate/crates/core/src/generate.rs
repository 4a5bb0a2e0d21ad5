//! Isomorphism-class enumeration by vertex augmentation.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order the built-in generator handles.
pub const MAX_GENERATED_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFilter {
    All,
    NoIsolated,
    Connected,
}

impl GraphFilter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            GraphFilter::All => true,
            GraphFilter::NoIsolated => !g.has_isolated_vertex(),
            GraphFilter::Connected => g.is_connected(),
        }
    }
}

fn all_classes(n: usize) -> Vec<Graph> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<Graph>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("cache lock").get(&n) {
        return v.clone();
    }
    let graphs = if n == 1 {
        vec![Graph::empty(1).expect("order 1")]
    } else {
        let smaller = all_classes(n - 1);
        let found: BTreeMap<CanonicalForm, Graph> = smaller
            .par_iter()
            .flat_map_iter(|g| {
                (0u32..1 << (n - 1)).map(move |mask| {
                    let h = canonical_graph(&g.with_vertex(VertexSet(mask)).expect("order <= 8"));
                    (canonical_form(&h), h)
                })
            })
            .collect();
        found.into_values().collect()
    };
    cache.lock().expect("cache lock").insert(n, graphs.clone());
    graphs
}

/// One canonical representative per isomorphism class of order `n` passing `filter`,
/// ordered by canonical form.
pub fn generate_nonisomorphic(n: usize, filter: GraphFilter) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::BadArgument("order must be positive".into()));
    }
    if n > MAX_GENERATED_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    Ok(all_classes(n).into_iter().filter(|g| filter.accepts(g)).collect())
}
