//! Simple undirected graphs without geometric information.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbstractGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl AbstractGraph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::NotSimple(format!("loop at {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::NotSimple(format!("repeated edge ({u}, {v})")));
            }
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(AbstractGraph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the edge `{u, v}` in [`AbstractGraph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// A proper 2-colouring (`false`/`true`) if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// Cut vertices, sorted.
    pub fn articulation_points(&self) -> Vec<usize> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, parent, next neighbour position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[u].len() {
                    let w = self.adj[u][*pos];
                    *pos += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if p != root && low[u] >= disc[p] {
                            is_cut[p] = true;
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

    /// Connected, at least 3 vertices and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }

    /// Edges whose removal disconnects their component.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let rest: Vec<(usize, usize)> =
                self.edges.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
            let g = AbstractGraph::new(self.n, &rest).expect("subgraph of a simple graph");
            if !g.reachable(u).contains(&v) {
                out.push((u, v));
            }
        }
        out
    }

    fn reachable(&self, s: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([s]);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Every cycle of length 6, each listed once as a vertex sequence that
    /// starts at its smallest vertex and continues to the smaller of its two
    /// neighbours on the cycle.
    pub fn six_cycles(&self) -> Vec<[usize; 6]> {
        let mut out = Vec::new();
        let mut path = [0usize; 6];
        for s in 0..self.n {
            path[0] = s;
            self.extend_cycle(&mut path, 1, &mut out);
        }
        out
    }

    fn extend_cycle(&self, path: &mut [usize; 6], len: usize, out: &mut Vec<[usize; 6]>) {
        let last = path[len - 1];
        let s = path[0];
        if len == 6 {
            if path[1] < path[5] && self.has_edge(last, s) {
                out.push(*path);
            }
            return;
        }
        for &w in &self.adj[last] {
            if w > s && !path[1..len].contains(&w) {
                path[len] = w;
                self.extend_cycle(path, len + 1, out);
            }
        }
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<AbstractGraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidInput("permutation length differs from vertex count".into()));
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        AbstractGraph::new(self.n, &edges)
    }

    /// Induced subgraph on `keep`, renumbered in the given order.
    pub fn induced(&self, keep: &[usize]) -> AbstractGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        AbstractGraph::new(keep.len(), &edges).expect("induced subgraph of a simple graph")
    }

    /// Parses the text format `"n m"` followed by `m` lines `"u v"`.
    pub fn parse_edge_list(text: &str) -> std::result::Result<AbstractGraph, EdgeListError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or(EdgeListError::MissingHeader)?;
        let (n, m) = parse_pair(header, 1)?;
        let mut edges = Vec::with_capacity(m);
        for (i, line) in lines.enumerate() {
            edges.push(parse_pair(line, i + 2)?);
        }
        if edges.len() != m {
            return Err(EdgeListError::EdgeCount { declared: m, found: edges.len() });
        }
        AbstractGraph::new(n, &edges).map_err(EdgeListError::Invalid)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn parse_pair(line: &str, line_no: usize) -> std::result::Result<(usize, usize), EdgeListError> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(EdgeListError::BadLine(line_no, line.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeListError {
    #[error("missing \"n m\" header line")]
    MissingHeader,
    #[error("line {0}: expected two non-negative integers, got {1:?}")]
    BadLine(usize, String),
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Invalid(Error),
}
