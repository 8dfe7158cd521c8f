//! Exact cycle counting: directed Hamilton cycles (bitmask dynamic
//! programming on small graphs, pruned backtracking above), and Eulerian
//! circuits through the arborescence-determinant product formula.

use super::Digraph;
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

pub const DEFAULT_HAMILTON_CAP: usize = 20;

/// Number of directed Hamilton cycles, each cyclic sequence counted once
/// (rotations identified, orientation significant).
pub fn count_hamilton_cycles(d: &Digraph, vertex_cap: usize) -> Result<BigUint> {
    let n = d.n();
    if n > vertex_cap {
        return Err(Error::invalid(format!(
            "Hamilton counting capped at {vertex_cap} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(BigUint::zero());
    }
    if n == 1 {
        return Ok(BigUint::zero()); // loops are impossible
    }
    if n <= 16 {
        Ok(BigUint::from(count_hamilton_dp(d)))
    } else {
        let mut visited = vec![false; n];
        visited[0] = true;
        let mut count = BigUint::zero();
        backtrack_hamilton(d, 0, 1, &mut visited, &mut count);
        Ok(count)
    }
}

/// Held-Karp style count: paths from vertex 0 keyed by (visited mask, last).
fn count_hamilton_dp(d: &Digraph) -> u128 {
    let n = d.n();
    let full: usize = (1 << n) - 1;
    let mut dp = vec![0u128; (1 << n) * n];
    dp[(1 << 0) * n] = 1; // mask {0}, last 0
    for mask in 1..=full {
        if mask & 1 == 0 {
            continue;
        }
        for last in 0..n {
            if mask >> last & 1 == 0 {
                continue;
            }
            let c = dp[mask * n + last];
            if c == 0 {
                continue;
            }
            for &next in d.out_neighbors(last) {
                let next = next as usize;
                if mask >> next & 1 == 1 {
                    continue;
                }
                dp[(mask | 1 << next) * n + next] += c;
            }
        }
    }
    let mut total = 0u128;
    for last in 1..n {
        if dp[full * n + last] > 0 && d.has_arc(last, 0) {
            total += dp[full * n + last];
        }
    }
    total
}

fn backtrack_hamilton(
    d: &Digraph,
    current: usize,
    depth: usize,
    visited: &mut [bool],
    count: &mut BigUint,
) {
    if depth == d.n() {
        if d.has_arc(current, 0) {
            *count += BigUint::one();
        }
        return;
    }
    // forcing check: any unvisited vertex with no unvisited in-neighbor
    // (other than along the future path) cannot be reached
    for &next in d.out_neighbors(current) {
        let next = next as usize;
        if visited[next] {
            continue;
        }
        visited[next] = true;
        backtrack_hamilton(d, next, depth + 1, visited, count);
        visited[next] = false;
    }
}

/// Enumerates directed Hamilton cycles as vertex sequences starting at 0.
pub fn hamilton_cycles_directed(d: &Digraph, step_budget: u64) -> Result<Vec<Vec<usize>>> {
    let n = d.n();
    if n < 2 {
        return Ok(Vec::new());
    }
    struct St<'g> {
        d: &'g Digraph,
        visited: Vec<bool>,
        seq: Vec<usize>,
        out: Vec<Vec<usize>>,
        steps: u64,
        budget: u64,
    }
    fn dfs(s: &mut St) -> Result<()> {
        s.steps += 1;
        if s.steps > s.budget {
            return Err(Error::EnumerationBudget { budget: s.budget });
        }
        let cur = *s.seq.last().unwrap();
        if s.seq.len() == s.d.n() {
            if s.d.has_arc(cur, 0) {
                s.out.push(s.seq.clone());
            }
            return Ok(());
        }
        for i in 0..s.d.out_neighbors(cur).len() {
            let next = s.d.out_neighbors(cur)[i] as usize;
            if s.visited[next] {
                continue;
            }
            s.visited[next] = true;
            s.seq.push(next);
            dfs(s)?;
            s.seq.pop();
            s.visited[next] = false;
        }
        Ok(())
    }
    let mut st = St {
        d,
        visited: {
            let mut v = vec![false; n];
            v[0] = true;
            v
        },
        seq: vec![0],
        out: Vec::new(),
        steps: 0,
        budget: step_budget,
    };
    dfs(&mut st)?;
    Ok(st.out)
}

/// Exact integer determinant by fraction-free Gaussian elimination.
fn determinant_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact in the Bareiss scheme
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

fn is_strongly_connected(d: &Digraph) -> bool {
    let n = d.n();
    if n == 0 {
        return false;
    }
    let reach = |forward: bool| -> usize {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            let neighbors = if forward {
                d.out_neighbors(u)
            } else {
                d.in_neighbors(u)
            };
            for &w in neighbors {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w as usize);
                }
            }
        }
        count
    };
    reach(true) == n && reach(false) == n
}

/// Number of spanning arborescences oriented toward `root`: the determinant
/// of the out-degree Laplacian with the root row and column removed.
pub fn arborescence_count(d: &Digraph, root: usize) -> Result<BigUint> {
    let n = d.n();
    if root >= n {
        return Err(Error::invalid("root out of range"));
    }
    if n == 1 {
        return Ok(BigUint::one());
    }
    let idx: Vec<usize> = (0..n).filter(|&v| v != root).collect();
    let mut m = vec![vec![BigInt::zero(); n - 1]; n - 1];
    for (i, &u) in idx.iter().enumerate() {
        m[i][i] = BigInt::from(d.out_neighbors(u).len());
        for (j, &v) in idx.iter().enumerate() {
            if d.has_arc(u, v) {
                m[i][j] -= 1;
            }
        }
    }
    let det = determinant_bigint(m);
    if det.is_negative() {
        return Err(Error::invalid("Laplacian minor came out negative"));
    }
    Ok(det.to_biguint().expect("nonnegative"))
}

/// Eulerian circuit count with a distinguished starting arc:
/// `t_v(D) * Π (d⁺(v) - 1)!` for any root `v` (the value is root
/// independent on Eulerian digraphs). Requires `d⁺ = d⁻` everywhere and
/// strong connectivity.
pub fn best_eulerian_count(d: &Digraph) -> Result<BigUint> {
    let n = d.n();
    if n == 0 {
        return Err(Error::invalid("empty digraph"));
    }
    for v in 0..n {
        if d.out_neighbors(v).len() != d.in_neighbors(v).len() {
            return Err(Error::invalid(format!(
                "vertex {v} has unequal in- and out-degree"
            )));
        }
    }
    if !is_strongly_connected(d) {
        return Err(Error::invalid("digraph is not strongly connected"));
    }
    let trees = arborescence_count(d, 0)?;
    let mut product = BigUint::one();
    for v in 0..n {
        let deg = d.out_neighbors(v).len() as u64;
        for i in 2..deg {
            product *= i;
        }
    }
    Ok(trees * product)
}

/// The bidirected complete bipartite digraph: arcs both ways between the
/// two sides `0..m` and `m..2m`.
pub fn bidirected_complete_bipartite(a: usize, b: usize) -> Digraph {
    let mut arcs = Vec::with_capacity(2 * a * b);
    for u in 0..a {
        for v in 0..b {
            arcs.push((u, a + v));
            arcs.push((a + v, u));
        }
    }
    Digraph::new(a + b, arcs).expect("bidirected complete bipartite")
}
