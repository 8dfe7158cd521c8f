//! Forbidden patterns: equal-endpoint directed walk pairs (detected through
//! powers of the counting adjacency matrix) and pairs of internally
//! disjoint equal-endpoint directed paths.

use super::Digraph;
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Two distinct directed walks of the same length sharing both endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkPairWitness {
    pub walks: [Vec<usize>; 2],
}

/// Entry-wise `k`-th power of the counting adjacency matrix.
fn walk_count_matrix(d: &Digraph, k: u32) -> Vec<BigUint> {
    let n = d.n();
    let mut cur: Vec<BigUint> = vec![BigUint::zero(); n * n];
    for &(u, v) in d.arcs() {
        cur[u as usize * n + v as usize] = BigUint::one();
    }
    for _ in 1..k {
        let mut next: Vec<BigUint> = vec![BigUint::zero(); n * n];
        for u in 0..n {
            for w in 0..n {
                let c = &cur[u * n + w];
                if c.is_zero() {
                    continue;
                }
                for &v in d.out_neighbors(w) {
                    next[u * n + v as usize] += c;
                }
            }
        }
        cur = next;
    }
    cur
}

/// Whether no two distinct directed walks of length `k` share both their
/// initial and terminal vertex. When they do, reconstructs the
/// lexicographically first such pair.
pub fn is_fk_free(d: &Digraph, k: u32) -> Result<(bool, Option<WalkPairWitness>)> {
    if k < 2 {
        return Err(Error::invalid("k must be at least 2"));
    }
    let n = d.n();
    let counts = walk_count_matrix(d, k);
    let two = BigUint::from(2u32);
    let mut pair: Option<(usize, usize)> = None;
    'scan: for u in 0..n {
        for v in 0..n {
            if counts[u * n + v] >= two {
                pair = Some((u, v));
                break 'scan;
            }
        }
    }
    let Some((from, to)) = pair else {
        return Ok((true, None));
    };

    // suffix counts: walks x -> to of each remaining length
    let mut suffix: Vec<Vec<u64>> = vec![vec![0; n]; k as usize + 1];
    suffix[0][to] = 1;
    for j in 1..=k as usize {
        for x in 0..n {
            let mut c: u64 = 0;
            for &y in d.out_neighbors(x) {
                c = c.saturating_add(suffix[j - 1][y as usize]);
            }
            suffix[j][x] = c;
        }
    }

    fn dfs(
        d: &Digraph,
        suffix: &[Vec<u64>],
        k: usize,
        walk: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if found.len() == 2 {
            return;
        }
        if walk.len() == k + 1 {
            found.push(walk.clone());
            return;
        }
        let cur = *walk.last().unwrap();
        let remaining = k - (walk.len() - 1) - 1;
        for &y in d.out_neighbors(cur) {
            if suffix[remaining][y as usize] == 0 {
                continue;
            }
            walk.push(y as usize);
            dfs(d, suffix, k, walk, found);
            walk.pop();
            if found.len() == 2 {
                return;
            }
        }
    }

    let mut found = Vec::new();
    let mut walk = vec![from];
    dfs(d, &suffix, k as usize, &mut walk, &mut found);
    debug_assert_eq!(found.len(), 2);
    let second = found.pop().unwrap();
    let first = found.pop().unwrap();
    Ok((
        false,
        Some(WalkPairWitness {
            walks: [first, second],
        }),
    ))
}

/// Two internally disjoint directed paths of length `l` with a common
/// source and a common sink.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPathWitness {
    pub from: usize,
    pub to: usize,
    pub paths: [Vec<usize>; 2],
}

impl TwoPathWitness {
    pub fn validate(&self, d: &Digraph, l: usize) -> Result<()> {
        for p in &self.paths {
            if p.len() != l + 1 || p[0] != self.from || p[l] != self.to {
                return Err(Error::invalid("path endpoints do not match"));
            }
            let mut sorted = p.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != p.len() {
                return Err(Error::invalid("path repeats a vertex"));
            }
            for i in 0..l {
                if !d.has_arc(p[i], p[i + 1]) {
                    return Err(Error::invalid(format!(
                        "missing arc ({},{})",
                        p[i],
                        p[i + 1]
                    )));
                }
            }
        }
        for x in &self.paths[0][1..l] {
            if self.paths[1][1..l].contains(x) {
                return Err(Error::invalid("paths share an internal vertex"));
            }
        }
        if self.paths[0] == self.paths[1] {
            return Err(Error::invalid("paths are identical"));
        }
        Ok(())
    }
}

/// Searches for two internally disjoint directed `l`-paths with common
/// endpoints. `None` means the digraph has no such pair. Endpoint pairs are
/// tried in decreasing order of `outdeg(source) * indeg(sink)`; within a
/// pair, simple paths are enumerated in lexicographic DFS order, capped at
/// `path_budget` extensions.
pub fn find_cll(d: &Digraph, l: usize, path_budget: u64) -> Result<Option<TwoPathWitness>> {
    if l < 2 {
        return Err(Error::invalid("l must be at least 2"));
    }
    let n = d.n();
    // walk counts prune endpoint pairs: two paths need at least two walks
    let counts = walk_count_matrix(d, l as u32);
    let two = BigUint::from(2u32);
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && counts[u * n + v] >= two {
                candidates.push((u, v));
            }
        }
    }
    candidates.sort_by_key(|&(u, v)| {
        (
            std::cmp::Reverse(d.out_neighbors(u).len() * d.in_neighbors(v).len()),
            u,
            v,
        )
    });

    let mut steps: u64 = 0;
    for (from, to) in candidates {
        let mut paths: Vec<Vec<usize>> = Vec::new();
        let mut stack = vec![from];
        let mut used = vec![false; n];
        used[from] = true;
        collect_paths(
            d,
            to,
            l,
            &mut stack,
            &mut used,
            &mut paths,
            &mut steps,
            path_budget,
        )?;
        for i in 0..paths.len() {
            for j in i + 1..paths.len() {
                let disjoint = paths[i][1..l].iter().all(|x| !paths[j][1..l].contains(x));
                if disjoint {
                    let w = TwoPathWitness {
                        from,
                        to,
                        paths: [paths[i].clone(), paths[j].clone()],
                    };
                    debug_assert!(w.validate(d, l).is_ok());
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn collect_paths(
    d: &Digraph,
    to: usize,
    l: usize,
    stack: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
    steps: &mut u64,
    budget: u64,
) -> Result<()> {
    *steps += 1;
    if *steps > budget {
        return Err(Error::EnumerationBudget { budget });
    }
    if stack.len() == l + 1 {
        if *stack.last().unwrap() == to {
            out.push(stack.clone());
        }
        return Ok(());
    }
    let cur = *stack.last().unwrap();
    for &y in d.out_neighbors(cur) {
        let y = y as usize;
        if used[y] {
            continue;
        }
        used[y] = true;
        stack.push(y);
        collect_paths(d, to, l, stack, used, out, steps, budget)?;
        stack.pop();
        used[y] = false;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::glm::{glm, glm_vertex, GlmSide};

    fn directed_cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn directed_cycle_is_walk_unique() {
        let c5 = directed_cycle(5);
        let (free, w) = is_fk_free(&c5, 3).unwrap();
        assert!(free);
        assert!(w.is_none());
    }

    #[test]
    fn bidirected_triangle_has_walk_pairs() {
        let mut arcs = Vec::new();
        for u in 0..3 {
            for v in 0..3 {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        let k3 = Digraph::new(3, arcs).unwrap();
        let (free, w) = is_fk_free(&k3, 2).unwrap();
        assert!(!free);
        let w = w.unwrap();
        assert_ne!(w.walks[0], w.walks[1]);
        assert_eq!(w.walks[0][0], w.walks[1][0]);
        assert_eq!(w.walks[0][2], w.walks[1][2]);
    }

    #[test]
    fn the_pattern_graph_itself_is_found() {
        // two disjoint directed 2-paths 0->1->3 and 0->2->3
        let d = Digraph::new(4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let w = find_cll(&d, 2, 1 << 20).unwrap().unwrap();
        assert_eq!(w.from, 0);
        assert_eq!(w.to, 3);
        w.validate(&d, 2).unwrap();
    }

    #[test]
    fn glm_has_no_equal_endpoint_path_pairs() {
        for (l, m) in [(2, 2), (3, 2), (3, 3)] {
            let d = glm(l, m).unwrap();
            assert!(find_cll(&d, l, 1 << 22).unwrap().is_none(), "G({l},{m})");
        }
    }

    #[test]
    fn adversarial_arc_creates_witness() {
        let (l, m) = (3, 2);
        let d = glm(l, m).unwrap();
        // Existing 3-path: v011 -> v111 -> w021 -> w121. Adding the arc
        // w011 -> w121 closes the internally disjoint second route
        // v011 -> v121 -> w011 -> w121.
        let v011 = glm_vertex(l, m, GlmSide::V, 0, 1, 1);
        let v111 = glm_vertex(l, m, GlmSide::V, 1, 1, 1);
        let v121 = glm_vertex(l, m, GlmSide::V, 1, 2, 1);
        let w011 = glm_vertex(l, m, GlmSide::W, 0, 1, 1);
        let w021 = glm_vertex(l, m, GlmSide::W, 0, 2, 1);
        let w121 = glm_vertex(l, m, GlmSide::W, 1, 2, 1);
        assert!(d.has_arc(v011, v111) && d.has_arc(v111, w021) && d.has_arc(w021, w121));
        assert!(d.has_arc(v011, v121) && d.has_arc(v121, w011));
        let d2 = d.with_arc(w011, w121).unwrap();
        let w = find_cll(&d2, l, 1 << 22).unwrap();
        assert!(w.is_some());
        w.unwrap().validate(&d2, l).unwrap();
    }
}
