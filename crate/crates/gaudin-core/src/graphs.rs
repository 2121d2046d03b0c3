//! Simple connected graphs and nested sets on them: families of connected
//! proper subgraphs that are pairwise nested or disjoint, where disjoint
//! means no edge joins the two vertex sets.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Parse("graph needs at least one vertex".into()));
        }
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Parse(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::Parse("loops are not allowed".into()));
            }
            let e = (a.min(b), a.max(b));
            if !norm.contains(&e) {
                norm.push(e);
            }
        }
        norm.sort_unstable();
        Ok(Graph { n, edges: norm })
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect())
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Parse("cycle needs at least 3 vertices".into()));
        }
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::new(n, edges)
    }

    /// Star with one center (vertex 0) and n-1 leaves.
    pub fn star(n: usize) -> Result<Graph> {
        Graph::new(n, (1..n).map(|i| (0, i)).collect())
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        self.subset_connected(&(0..self.n).collect::<Vec<_>>())
    }

    pub fn subset_connected(&self, vs: &[usize]) -> bool {
        if vs.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut inset = vec![false; self.n];
        for &v in vs {
            inset[v] = true;
        }
        let mut stack = vec![vs[0]];
        seen[vs[0]] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && inset[y] && !seen[y] {
                        seen[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
        }
        count == vs.len()
    }

    /// All nonempty proper vertex subsets inducing connected subgraphs,
    /// sorted canonically.
    pub fn connected_subgraphs(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        let mut out = Vec::new();
        for mask in 1u64..(1 << self.n) - 1 {
            let vs: Vec<usize> = (0..self.n).filter(|&i| mask & (1 << i) != 0).collect();
            if self.subset_connected(&vs) {
                out.push(vs);
            }
        }
        out.sort_by_key(|v| (v.len(), v.clone()));
        Ok(out)
    }

    /// No edge joins the two vertex sets (and they share no vertex).
    fn separated(&self, a: &[usize], b: &[usize]) -> bool {
        for &x in a {
            if b.contains(&x) {
                return false;
            }
            for &y in b {
                if self.has_edge(x, y) {
                    return false;
                }
            }
        }
        true
    }

    fn compatible(&self, a: &[usize], b: &[usize]) -> bool {
        let subset = |x: &[usize], y: &[usize]| x.iter().all(|v| y.contains(v));
        subset(a, b) || subset(b, a) || self.separated(a, b)
    }
}

/// Nested sets on the graph: pairwise compatible families of connected
/// proper subgraphs. With `maximal_only` set, only the maximal families
/// (which have exactly |vertices| - 1 members) are returned.
pub fn graph_nested_sets(g: &Graph, maximal_only: bool) -> Result<Vec<Vec<Vec<usize>>>> {
    let subs = g.connected_subgraphs()?;
    if subs.len() > 40 {
        return Err(Error::SizeGuard(format!(
            "{} connected subgraphs exceed the enumeration guard",
            subs.len()
        )));
    }
    let k = subs.len();
    let mut compat = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            compat[i][j] = g.compatible(&subs[i], &subs[j]);
        }
    }
    let mut families: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn extend(
        start: usize,
        k: usize,
        compat: &Vec<Vec<bool>>,
        current: &mut Vec<usize>,
        families: &mut Vec<Vec<usize>>,
    ) {
        families.push(current.clone());
        for i in start..k {
            if current.iter().all(|&j| compat[i][j]) {
                current.push(i);
                extend(i + 1, k, compat, current, families);
                current.pop();
            }
        }
    }
    extend(0, k, &compat, &mut current, &mut families);
    let is_maximal = |fam: &Vec<usize>| -> bool {
        (0..k).all(|i| fam.contains(&i) || !fam.iter().all(|&j| compat[i][j]))
    };
    let mut out: Vec<Vec<Vec<usize>>> = families
        .into_iter()
        .filter(|fam| !maximal_only || is_maximal(fam))
        .map(|fam| fam.into_iter().map(|i| subs[i].clone()).collect())
        .collect();
    out.sort();
    Ok(out)
}
