//! Exact Hamilton path/cycle search with pruning and a node budget.

use serde::{Deserialize, Serialize};

use crate::tar::SetGraph;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HamiltonMode {
    Path,
    Cycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "verdict", content = "witness")]
pub enum Verdict {
    /// Vertex order of a Hamilton path or cycle.
    Yes(Vec<usize>),
    No,
    /// Budget exhausted before a decision.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonResult {
    pub verdict: Verdict,
    pub nodes_explored: u64,
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    mode: HamiltonMode,
    budget: u64,
    nodes: u64,
    visited: Vec<bool>,
    free_deg: Vec<usize>,
    path: Vec<usize>,
    remaining: usize,
    out_of_budget: bool,
    scratch: Vec<bool>,
}

impl Search<'_> {
    fn visit(&mut self, v: usize) {
        self.visited[v] = true;
        self.remaining -= 1;
        self.path.push(v);
        for &w in &self.adj[v] {
            self.free_deg[w] -= 1;
        }
    }

    fn unvisit(&mut self, v: usize) {
        for &w in &self.adj[v] {
            self.free_deg[w] += 1;
        }
        self.path.pop();
        self.remaining += 1;
        self.visited[v] = false;
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    /// False when the current partial path provably cannot be completed.
    fn viable(&mut self) -> bool {
        let head = *self.path.last().expect("nonempty path");
        let start = self.path[0];
        let n = self.adj.len();
        let mut ends = 0;
        for w in 0..n {
            if self.visited[w] {
                continue;
            }
            let mut avail = self.free_deg[w];
            if self.adjacent(w, head) {
                avail += 1;
            }
            match self.mode {
                HamiltonMode::Path => {
                    if avail == 0 {
                        return false;
                    }
                    if avail == 1 {
                        ends += 1;
                        if ends > 1 {
                            return false;
                        }
                    }
                }
                HamiltonMode::Cycle => {
                    if start != head && self.adjacent(w, start) {
                        avail += 1;
                    }
                    if avail < 2 {
                        return false;
                    }
                }
            }
        }
        self.rest_connected(head)
    }

    fn rest_connected(&mut self, head: usize) -> bool {
        let seen = &mut self.scratch;
        seen.iter_mut().for_each(|s| *s = false);
        seen[head] = true;
        let mut stack = vec![head];
        let mut count = 0;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !self.visited[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.remaining
    }

    fn extend(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.out_of_budget = true;
            return false;
        }
        let head = *self.path.last().expect("nonempty path");
        if self.remaining == 0 {
            return match self.mode {
                HamiltonMode::Path => true,
                HamiltonMode::Cycle => self.path.len() >= 3 && self.adjacent(head, self.path[0]),
            };
        }
        if !self.viable() {
            return false;
        }
        let mut next: Vec<usize> = self.adj[head].iter().copied().filter(|&w| !self.visited[w]).collect();
        next.sort_by_key(|&w| (self.free_deg[w], w));
        for w in next {
            self.visit(w);
            if self.extend() {
                return true;
            }
            self.unvisit(w);
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

fn run(adj: &[Vec<usize>], mode: HamiltonMode, budget: u64) -> HamiltonResult {
    let n = adj.len();
    let no = |nodes| HamiltonResult { verdict: Verdict::No, nodes_explored: nodes };
    if n == 0 || (mode == HamiltonMode::Cycle && n < 3) {
        return no(0);
    }
    let g = SetGraph { labels: Vec::new(), adj: adj.to_vec() };
    if g.components().1 != 1 {
        return no(0);
    }
    let degree = |v: usize| adj[v].len();
    let leaves: Vec<usize> = (0..n).filter(|&v| degree(v) == 1).collect();
    let mut starts: Vec<usize> = (0..n).collect();
    if let Some(sides) = g.bipartition() {
        let a = sides.iter().filter(|&&s| s).count();
        let b = n - a;
        match mode {
            HamiltonMode::Cycle if a != b => return no(0),
            HamiltonMode::Path if a.abs_diff(b) > 1 => return no(0),
            HamiltonMode::Path if a != b => {
                let big = a > b;
                starts.retain(|&v| sides[v] == big);
            }
            _ => {}
        }
    }
    match mode {
        HamiltonMode::Cycle => {
            if (0..n).any(|v| degree(v) < 2) {
                return no(0);
            }
            starts = vec![(0..n).min_by_key(|&v| (degree(v), v)).expect("n > 0")];
        }
        HamiltonMode::Path => {
            if leaves.len() > 2 {
                return no(0);
            }
            // A leaf must be an endpoint, and reversing a path lets us start there.
            if let Some(&leaf) = leaves.iter().find(|l| starts.contains(l)) {
                starts = vec![leaf];
            } else if !leaves.is_empty() {
                return no(0);
            }
        }
    }
    let mut search = Search {
        adj,
        mode,
        budget,
        nodes: 0,
        visited: vec![false; n],
        free_deg: adj.iter().map(Vec::len).collect(),
        path: Vec::with_capacity(n),
        remaining: n,
        out_of_budget: false,
        scratch: vec![false; n],
    };
    for s in starts {
        search.visit(s);
        if search.extend() {
            return HamiltonResult { verdict: Verdict::Yes(search.path.clone()), nodes_explored: search.nodes };
        }
        search.unvisit(s);
        if search.out_of_budget {
            return HamiltonResult { verdict: Verdict::Unknown, nodes_explored: search.nodes };
        }
    }
    no(search.nodes)
}

/// Searches `adj` for a Hamilton path or cycle. `Yes` and `No` are exact; `Unknown`
/// means the node budget ran out.
pub fn hamilton_search(adj: &[Vec<usize>], mode: HamiltonMode, budget: u64) -> HamiltonResult {
    if adj.len() <= 4096 {
        return run(adj, mode, budget);
    }
    let owned = adj.to_vec();
    std::thread::Builder::new()
        .stack_size(64 << 20)
        .spawn(move || run(&owned, mode, budget))
        .expect("spawn search thread")
        .join()
        .expect("search thread")
}

pub fn is_hamilton_witness(adj: &[Vec<usize>], mode: HamiltonMode, order: &[usize]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return false;
    }
    let linked = order.windows(2).all(|w| adj[w[0]].contains(&w[1]));
    match mode {
        HamiltonMode::Path => linked,
        HamiltonMode::Cycle => linked && n >= 3 && adj[order[n - 1]].contains(&order[0]),
    }
}
