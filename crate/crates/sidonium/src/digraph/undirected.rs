//! Simple undirected graphs: girth, fixed-length cycle detection, Hamilton
//! cycle enumeration, and the bipartite Cayley construction.

use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup};
use std::collections::VecDeque;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u},{v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            list.push((u.min(v) as u32, u.max(v) as u32));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        adj.iter_mut().for_each(|a| a.sort_unstable());
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[u32] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .binary_search(&(u.min(v) as u32, u.max(v) as u32))
            .is_ok()
    }

    /// Length of a shortest cycle; `None` for forests.
    ///
    /// Per-root BFS: a non-tree edge seen from root `r` closes a cycle of
    /// length at most `dist[u] + dist[w] + 1`, and the minimum over all
    /// roots is exact.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    let w = w as usize;
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && dist[w] != usize::MAX {
                        let cyc = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| cyc < b) {
                            best = Some(cyc);
                        }
                    }
                }
            }
        }
        best
    }

    /// Whether the graph contains a cycle of length exactly `l`.
    pub fn has_cycle_of_length(&self, l: usize) -> bool {
        if l < 3 {
            return false;
        }
        // canonical cycles: smallest vertex first, second neighbor < last
        fn dfs(
            g: &Graph,
            start: usize,
            current: usize,
            remaining: usize,
            used: &mut Vec<bool>,
        ) -> bool {
            if remaining == 0 {
                return g.has_edge(current, start);
            }
            for &w in g.neighbors(current) {
                let w = w as usize;
                if w <= start || used[w] {
                    continue;
                }
                used[w] = true;
                if dfs(g, start, w, remaining - 1, used) {
                    return true;
                }
                used[w] = false;
            }
            false
        }
        let mut used = vec![false; self.n];
        for start in 0..self.n {
            used[start] = true;
            if dfs(self, start, start, l - 1, &mut used) {
                return true;
            }
            used[start] = false;
        }
        false
    }

    /// All Hamilton cycles, one representative per undirected cycle: vertex
    /// sequences starting at 0 with `seq[1] < seq[n-1]`.
    pub fn hamilton_cycles(&self, step_budget: u64) -> Result<Vec<Vec<usize>>> {
        if self.n < 3 {
            return Ok(Vec::new());
        }
        struct State<'g> {
            g: &'g Graph,
            used: Vec<bool>,
            seq: Vec<usize>,
            out: Vec<Vec<usize>>,
            steps: u64,
            budget: u64,
        }
        fn dfs(s: &mut State) -> Result<()> {
            s.steps += 1;
            if s.steps > s.budget {
                return Err(Error::EnumerationBudget { budget: s.budget });
            }
            let current = *s.seq.last().unwrap();
            if s.seq.len() == s.g.n {
                if s.g.has_edge(current, 0) && s.seq[1] < s.seq[s.g.n - 1] {
                    s.out.push(s.seq.clone());
                }
                return Ok(());
            }
            for i in 0..s.g.adj[current].len() {
                let w = s.g.adj[current][i] as usize;
                if s.used[w] {
                    continue;
                }
                s.used[w] = true;
                s.seq.push(w);
                dfs(s)?;
                s.seq.pop();
                s.used[w] = false;
            }
            Ok(())
        }
        let mut state = State {
            g: self,
            used: {
                let mut u = vec![false; self.n];
                u[0] = true;
                u
            },
            seq: vec![0],
            out: Vec::new(),
            steps: 0,
            budget: step_budget,
        };
        dfs(&mut state)?;
        Ok(state.out)
    }

    /// Edge-list file: optional first line with the vertex count, then one
    /// `u v` line per edge, 1-indexed.
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse_text(&text)
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.len() {
                0 => continue,
                1 if i == 0 => {
                    n = Some(
                        toks[0]
                            .parse()
                            .map_err(|_| Error::parse("bad vertex count"))?,
                    );
                }
                2 => {
                    let u: usize = toks[0]
                        .parse()
                        .map_err(|_| Error::parse(format!("bad edge line '{line}'")))?;
                    let v: usize = toks[1]
                        .parse()
                        .map_err(|_| Error::parse(format!("bad edge line '{line}'")))?;
                    if u < 1 || v < 1 {
                        return Err(Error::parse("vertices are 1-indexed"));
                    }
                    pairs.push((u - 1, v - 1));
                }
                _ => return Err(Error::parse(format!("bad line '{line}'"))),
            }
        }
        let n = n.unwrap_or_else(|| pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
        Graph::new(n, pairs)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }
}

/// Bipartite Cayley graph: vertices `(x, 0)` and `(x, 1)` for `x` in the
/// group (indices `x` and `|G| + x`), with an edge `(x, 0) - (xb, 1)` for
/// every `b` in the connection set.
pub fn bipartite_cayley(group: &FiniteGroup, set: &ElementSet) -> Result<Graph> {
    let n = group.order();
    let mut edges = Vec::with_capacity(n * set.len());
    for x in group.elements() {
        for &b in set.members() {
            if b >= n {
                return Err(Error::IndexRange { index: b, order: n });
            }
            edges.push((x, n + group.mul(x, b)));
        }
    }
    Graph::new(2 * n, edges)
}

pub fn cycle_graph(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("complete")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::new(a + b, edges).expect("complete bipartite")
}

/// Generalized Petersen graph `GP(n, k)`: outer cycle `u_0..u_{n-1}`, inner
/// vertices `v_i ~ v_{i+k}`, spokes `u_i ~ v_i`.
pub fn generalized_petersen(n: usize, k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n)); // outer
        edges.push((i, n + i)); // spoke
        edges.push((n + i, n + (i + k) % n)); // inner
    }
    Graph::new(2 * n, edges).expect("generalized petersen")
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2)
}

/// The dodecahedron graph: 20 vertices, cubic, girth 5.
pub fn dodecahedron() -> Graph {
    generalized_petersen(10, 2)
}
