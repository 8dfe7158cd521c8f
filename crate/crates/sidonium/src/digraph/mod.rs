//! Directed-graph machinery: generators, forbidden-pattern detection, walk
//! types, random sparsifications, and exact cycle counting.

pub mod counting;
pub mod glm;
pub mod paths;
pub mod patterns;
pub mod random;
pub mod undirected;

use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// A loop-free digraph without parallel arcs; opposite arcs are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(u32, u32)>,
    out_adj: Vec<Vec<u32>>,
    in_adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(u32, u32)> = Vec::new();
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("arc ({u},{v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            list.push((u as u32, v as u32));
        }
        list.sort_unstable();
        list.dedup();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            out_adj[u as usize].push(v);
            in_adj[v as usize].push(u);
        }
        in_adj.iter_mut().for_each(|v| v.sort_unstable());
        Ok(Digraph {
            n,
            arcs: list,
            out_adj,
            in_adj,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::invalid("label count must equal vertex count"));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u as u32, v as u32)).is_ok()
    }

    pub fn out_neighbors(&self, u: usize) -> &[u32] {
        &self.out_adj[u]
    }

    pub fn in_neighbors(&self, u: usize) -> &[u32] {
        &self.in_adj[u]
    }

    pub fn label(&self, u: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[u].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Adds one arc (used by tests that perturb a construction).
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        let mut arcs = self.arcs.clone();
        arcs.push((
            u32::try_from(u).map_err(|_| Error::invalid("vertex too large"))?,
            u32::try_from(v).map_err(|_| Error::invalid("vertex too large"))?,
        ));
        let mut d = Digraph::new(self.n, arcs.iter().map(|&(a, b)| (a as usize, b as usize)))?;
        d.labels = self.labels.clone();
        Ok(d)
    }

    /// Induced subgraph on `keep` (sorted, distinct); vertices are
    /// renumbered in the order given.
    pub fn induced(&self, keep: &[usize]) -> Result<Digraph> {
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.n {
                return Err(Error::invalid(format!("vertex {v} out of range")));
            }
            if position[v] != usize::MAX {
                return Err(Error::invalid(format!("vertex {v} repeated")));
            }
            position[v] = i;
        }
        let arcs = self.arcs.iter().filter_map(|&(u, v)| {
            let (pu, pv) = (position[u as usize], position[v as usize]);
            (pu != usize::MAX && pv != usize::MAX).then_some((pu, pv))
        });
        let mut d = Digraph::new(keep.len(), arcs)?;
        if let Some(labels) = &self.labels {
            d.labels = Some(keep.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(d)
    }

    /// File format: first line `n`, then one `u v` line per arc, 1-indexed.
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse_text(&text)
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::parse("empty digraph file"))?
            .trim()
            .parse()
            .map_err(|_| Error::parse("first line must be the vertex count"))?;
        let mut arcs = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .ok_or_else(|| Error::parse("missing arc tail"))?
                .parse()
                .map_err(|_| Error::parse(format!("bad arc line '{line}'")))?;
            let v: usize = it
                .next()
                .ok_or_else(|| Error::parse("missing arc head"))?
                .parse()
                .map_err(|_| Error::parse(format!("bad arc line '{line}'")))?;
            if it.next().is_some() {
                return Err(Error::parse(format!("trailing tokens in '{line}'")));
            }
            if u < 1 || v < 1 {
                return Err(Error::parse("vertices are 1-indexed"));
            }
            arcs.push((u - 1, v - 1));
        }
        Digraph::new(n, arcs)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(u, v) in &self.arcs {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text()).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

/// Extremes of the in- and out-degree sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub min_out: usize,
    pub min_in: usize,
    pub max_out: usize,
    pub max_in: usize,
}

impl DegreeProfile {
    pub fn min_semidegree(&self) -> usize {
        self.min_out.min(self.min_in)
    }
}

pub fn degree_profile(d: &Digraph) -> DegreeProfile {
    let outs: Vec<usize> = (0..d.n).map(|v| d.out_adj[v].len()).collect();
    let ins: Vec<usize> = (0..d.n).map(|v| d.in_adj[v].len()).collect();
    DegreeProfile {
        min_out: outs.iter().copied().min().unwrap_or(0),
        min_in: ins.iter().copied().min().unwrap_or(0),
        max_out: outs.iter().copied().max().unwrap_or(0),
        max_in: ins.iter().copied().max().unwrap_or(0),
    }
}

/// Cayley digraph: one vertex per group element, arc `x -> xa` for `a` in
/// the connection set. The identity is rejected since it would create loops.
pub fn cayley_digraph(group: &FiniteGroup, set: &ElementSet) -> Result<Digraph> {
    if set.contains(group.identity()) {
        return Err(Error::invalid(
            "connection set contains the identity (loops are not allowed)",
        ));
    }
    let n = group.order();
    let mut arcs = Vec::with_capacity(n * set.len());
    for x in group.elements() {
        for &a in set.members() {
            if a >= n {
                return Err(Error::IndexRange { index: a, order: n });
            }
            arcs.push((x, group.mul(x, a)));
        }
    }
    Digraph::new(n, arcs)
}

/// One step of a closed walk in the underlying graph of a digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepDir {
    Forward,
    Backward,
}

/// A closed walk `v₀ e₀ v₁ e₁ … v_{k-1} e_{k-1} v₀`; step `i` joins
/// `vertices[i]` to `vertices[(i+1) % k]` and `dirs[i]` records whether the
/// arc is traversed forward or against its orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    pub vertices: Vec<usize>,
    pub dirs: Vec<StepDir>,
}

impl ClosedWalk {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn validate(&self, d: &Digraph) -> Result<()> {
        if self.vertices.len() != self.dirs.len() || self.vertices.is_empty() {
            return Err(Error::invalid("walk must pair every vertex with a step"));
        }
        let k = self.vertices.len();
        for i in 0..k {
            let u = self.vertices[i];
            let v = self.vertices[(i + 1) % k];
            let ok = match self.dirs[i] {
                StepDir::Forward => d.has_arc(u, v),
                StepDir::Backward => d.has_arc(v, u),
            };
            if !ok {
                return Err(Error::invalid(format!(
                    "step {i} ({u} to {v}) does not follow an arc"
                )));
            }
        }
        Ok(())
    }
}

/// The type of a closed walk: the absolute net number of forward steps.
pub fn walk_type(d: &Digraph, w: &ClosedWalk) -> Result<u64> {
    w.validate(d)?;
    let forward = w.dirs.iter().filter(|&&s| s == StepDir::Forward).count() as i64;
    let backward = w.dirs.len() as i64 - forward;
    Ok((forward - backward).unsigned_abs())
}

/// Searches all closed walks of length at most `max_len` in the underlying
/// graph for one of nonzero type; `None` means every such walk is balanced.
pub fn find_unbalanced_closed_walk(d: &Digraph, max_len: usize) -> Option<ClosedWalk> {
    fn dfs(
        d: &Digraph,
        start: usize,
        current: usize,
        net: i64,
        vertices: &mut Vec<usize>,
        dirs: &mut Vec<StepDir>,
        max_len: usize,
    ) -> bool {
        if !vertices.is_empty() && current == start && net != 0 {
            return true;
        }
        if vertices.len() == max_len {
            return false;
        }
        for &w in d.out_neighbors(current) {
            vertices.push(current);
            dirs.push(StepDir::Forward);
            if dfs(d, start, w as usize, net + 1, vertices, dirs, max_len) {
                return true;
            }
            vertices.pop();
            dirs.pop();
        }
        for &w in d.in_neighbors(current) {
            vertices.push(current);
            dirs.push(StepDir::Backward);
            if dfs(d, start, w as usize, net - 1, vertices, dirs, max_len) {
                return true;
            }
            vertices.pop();
            dirs.pop();
        }
        false
    }

    for start in 0..d.n {
        let mut vertices = Vec::new();
        let mut dirs = Vec::new();
        if dfs(d, start, start, 0, &mut vertices, &mut dirs, max_len) {
            return Some(ClosedWalk { vertices, dirs });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn z(n: usize) -> FiniteGroup {
        build_group(&GroupSpec::parse(&format!("Z:{n}")).unwrap()).unwrap()
    }

    #[test]
    fn cayley_of_z4_is_a_directed_cycle() {
        let g = z(4);
        let a = ElementSet::new(&g, [1]).unwrap();
        let d = cayley_digraph(&g, &a).unwrap();
        assert_eq!(d.arc_count(), 4);
        assert!(d.has_arc(0, 1) && d.has_arc(3, 0));
        let p = degree_profile(&d);
        assert_eq!((p.min_out, p.min_in, p.max_out, p.max_in), (1, 1, 1, 1));
    }

    #[test]
    fn cayley_rejects_identity() {
        let g = z(4);
        let a = ElementSet::new(&g, [0, 1]).unwrap();
        assert!(cayley_digraph(&g, &a).is_err());
    }

    #[test]
    fn empty_connection_set() {
        let g = z(3);
        let d = cayley_digraph(&g, &ElementSet::empty()).unwrap();
        assert_eq!(d.arc_count(), 0);
        let p = degree_profile(&d);
        assert_eq!(p.min_semidegree(), 0);
    }

    #[test]
    fn walk_types() {
        let tri = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let fwd = ClosedWalk {
            vertices: vec![0, 1, 2],
            dirs: vec![StepDir::Forward; 3],
        };
        assert_eq!(walk_type(&tri, &fwd).unwrap(), 3);

        // antidirected 4-cycle: arcs 0->1 <-2 ->3 <-0
        let anti = Digraph::new(4, [(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap();
        let w = ClosedWalk {
            vertices: vec![0, 1, 2, 3],
            dirs: vec![
                StepDir::Forward,
                StepDir::Backward,
                StepDir::Forward,
                StepDir::Backward,
            ],
        };
        assert_eq!(walk_type(&anti, &w).unwrap(), 0);

        let bad = ClosedWalk {
            vertices: vec![0, 2],
            dirs: vec![StepDir::Forward, StepDir::Forward],
        };
        assert!(walk_type(&tri, &bad).is_err());
    }

    #[test]
    fn mixed_walk_net_two() {
        // path 0->1->2->3 plus arc 0->3: walk forward 3 steps then back along 0->3
        let d = Digraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let w = ClosedWalk {
            vertices: vec![0, 1, 2, 3],
            dirs: vec![
                StepDir::Forward,
                StepDir::Forward,
                StepDir::Forward,
                StepDir::Backward,
            ],
        };
        assert_eq!(walk_type(&d, &w).unwrap(), 2);
    }

    #[test]
    fn file_roundtrip() {
        let d = Digraph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        let text = d.to_text();
        assert_eq!(Digraph::parse_text(&text).unwrap(), d);
    }

    #[test]
    fn no_loops_or_duplicates() {
        assert!(Digraph::new(2, [(0, 0)]).is_err());
        let d = Digraph::new(2, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(d.arc_count(), 2);
    }
}
