//! The layered two-block digraph `G(l, m)` on `(2l-2)m²` vertices with all
//! semidegrees `m` and no pair of internally disjoint equal-endpoint
//! directed `l`-paths, plus its Hamilton-cycle bookkeeping (transition
//! vectors and the closed-form count).

use crate::error::{Error, Result};
use crate::Result as CrateResult;
use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::Digraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlmSide {
    V,
    W,
}

/// Vertex id of `v_{ijk}` / `w_{ijk}` (1-indexed `j, k` in `1..=m`,
/// layer `i` in `0..=l-2`).
pub fn glm_vertex(l: usize, m: usize, side: GlmSide, i: usize, j: usize, k: usize) -> usize {
    let layer = match side {
        GlmSide::V => i,
        GlmSide::W => (l - 1) + i,
    };
    layer * m * m + (j - 1) * m + (k - 1)
}

/// Inverse of [`glm_vertex`].
pub fn glm_coords(l: usize, m: usize, vertex: usize) -> (GlmSide, usize, usize, usize) {
    let layer = vertex / (m * m);
    let rem = vertex % (m * m);
    let (j, k) = (rem / m + 1, rem % m + 1);
    if layer < l - 1 {
        (GlmSide::V, layer, j, k)
    } else {
        (GlmSide::W, layer - (l - 1), j, k)
    }
}

/// Builds `G(l, m)`: `V`-layers advance varying `j` and preserving `k`,
/// `W`-layers advance varying `k` and preserving `j`, with wrap arcs
/// `V_{l-2} -> W_0` and `W_{l-2} -> V_0`.
pub fn glm(l: usize, m: usize) -> CrateResult<Digraph> {
    if l < 2 {
        return Err(Error::invalid("l must be at least 2"));
    }
    if m < 1 {
        return Err(Error::invalid("m must be at least 1"));
    }
    let layers = l - 1;
    let n = 2 * layers * m * m;
    let mut arcs = Vec::with_capacity(n * m);
    for i in 0..layers {
        for j in 1..=m {
            for k in 1..=m {
                let from_v = glm_vertex(l, m, GlmSide::V, i, j, k);
                let from_w = glm_vertex(l, m, GlmSide::W, i, j, k);
                if i + 1 < layers {
                    for jp in 1..=m {
                        arcs.push((from_v, glm_vertex(l, m, GlmSide::V, i + 1, jp, k)));
                    }
                    for kp in 1..=m {
                        arcs.push((from_w, glm_vertex(l, m, GlmSide::W, i + 1, j, kp)));
                    }
                } else {
                    for jp in 1..=m {
                        arcs.push((from_v, glm_vertex(l, m, GlmSide::W, 0, jp, k)));
                    }
                    for kp in 1..=m {
                        arcs.push((from_w, glm_vertex(l, m, GlmSide::V, 0, j, kp)));
                    }
                }
            }
        }
    }
    let labels = (0..n)
        .map(|v| {
            let (side, i, j, k) = glm_coords(l, m, v);
            let s = match side {
                GlmSide::V => 'v',
                GlmSide::W => 'w',
            };
            format!("{s} {i} {j} {k}")
        })
        .collect();
    Digraph::new(n, arcs)?.with_labels(labels)
}

/// The label-map file for `glm`: one `index v|w i j k` line per vertex,
/// 1-indexed vertex ids.
pub fn glm_label_map_text(d: &Digraph) -> String {
    let mut out = String::new();
    for v in 0..d.n() {
        let label = d.label(v).unwrap_or("");
        out.push_str(&format!("{} {}\n", v + 1, label));
    }
    out
}

fn factorial_big(n: u64) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=n {
        f *= i;
    }
    f
}

/// `m^{2(m-1)} ((m-1)!)^{2m}`: the number of transition vectors, equal to
/// the number of Eulerian circuits of the bidirected `K_{m,m}` with a fixed
/// starting arc.
pub fn transition_vector_count(m: u64) -> BigUint {
    BigUint::from(m).pow(2 * (m as u32 - 1)) * factorial_big(m - 1).pow(2 * m as u32)
}

/// Total number of directed Hamilton cycles of `G(r, m)`:
/// `m^{2(m-1)} ((m-1)!)^{2m} (m!)^{2m(r-2)}`.
pub fn glm_hamilton_formula(r: u64, m: u64) -> CrateResult<BigUint> {
    if r < 2 || m < 1 {
        return Err(Error::invalid("need r >= 2 and m >= 1"));
    }
    Ok(transition_vector_count(m) * factorial_big(m).pow((2 * m * (r - 2)) as u32))
}

/// The order in which a Hamilton cycle of `G(r, m)` meets the `m²`
/// crossing points: a cyclic word `X_{f(1)} Y_{g(1)} … X_{f(m²)} Y_{g(m²)}`
/// in which every ordered pair `X_i Y_j` and `Y_j X_i` occurs exactly once,
/// normalized by `f(1) = g(1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionVector {
    pub m: usize,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
}

impl TransitionVector {
    pub fn validate(&self) -> Result<()> {
        let m = self.m;
        let len = m * m;
        if self.f.len() != len || self.g.len() != len {
            return Err(Error::invalid("f and g must have length m^2"));
        }
        if self.f[0] != 1 || self.g[0] != 1 {
            return Err(Error::invalid("normalization requires f(1) = g(1) = 1"));
        }
        let mut seen_xy = vec![false; m * m];
        let mut seen_yx = vec![false; m * m];
        for s in 0..len {
            let (x, y) = (self.f[s], self.g[s]);
            if x < 1 || x > m || y < 1 || y > m {
                return Err(Error::invalid("component index out of range"));
            }
            let xy = (x - 1) * m + (y - 1);
            if seen_xy[xy] {
                return Err(Error::invalid(format!("pair X{x}Y{y} repeats")));
            }
            seen_xy[xy] = true;
            // cyclically, Y_{g(s)} X_{f(s+1)}
            let xn = self.f[(s + 1) % len];
            let yx = (y - 1) * m + (xn - 1);
            if seen_yx[yx] {
                return Err(Error::invalid(format!("pair Y{y}X{xn} repeats")));
            }
            seen_yx[yx] = true;
        }
        Ok(())
    }
}

/// Enumerates all transition vectors for small `m` as Eulerian trails of
/// the bidirected `K_{m,m}` starting with the arc `X_1 -> Y_1`, and checks
/// the closed-form count. Enumeration is capped at `m <= 3`.
pub fn transition_vectors(m: usize) -> CrateResult<Vec<TransitionVector>> {
    if m < 1 {
        return Err(Error::invalid("m must be at least 1"));
    }
    if m > 3 {
        return Err(Error::invalid("enumeration is supported for m <= 3"));
    }
    // arcs: X_i -> Y_j has id i*m + j; Y_j -> X_i has id m^2 + j*m + i (0-indexed)
    let arc_count = 2 * m * m;
    let mut result = Vec::new();
    let mut xs = vec![1usize]; // f values, 1-indexed
    let mut ys = vec![1usize]; // g values

    fn dfs(
        m: usize,
        used: &mut Vec<bool>,
        xs: &mut Vec<usize>,
        ys: &mut Vec<usize>,
        at_x_side: bool,
        current: usize,
        used_count: usize,
        arc_count: usize,
        out: &mut Vec<TransitionVector>,
    ) {
        if used_count == arc_count {
            // trail must have returned to X_1
            if at_x_side && current == 1 {
                out.push(TransitionVector {
                    m,
                    f: xs.clone(),
                    g: ys.clone(),
                });
            }
            return;
        }
        if at_x_side {
            for j in 1..=m {
                let id = (current - 1) * m + (j - 1);
                if used[id] {
                    continue;
                }
                used[id] = true;
                ys.push(j);
                dfs(m, used, xs, ys, false, j, used_count + 1, arc_count, out);
                ys.pop();
                used[id] = false;
            }
        } else {
            for i in 1..=m {
                let id = m * m + (current - 1) * m + (i - 1);
                if used[id] {
                    continue;
                }
                used[id] = true;
                let closing = used_count + 1 == arc_count;
                if !closing {
                    xs.push(i);
                }
                dfs(m, used, xs, ys, true, i, used_count + 1, arc_count, out);
                if !closing {
                    xs.pop();
                }
                used[id] = false;
            }
        }
    }

    // first arc X_1 -> Y_1 is forced by the normalization
    let mut used = vec![false; arc_count];
    used[0] = true;
    dfs(
        m,
        &mut used,
        &mut xs,
        &mut ys,
        false,
        1,
        1,
        arc_count,
        &mut result,
    );

    let expected = transition_vector_count(m as u64);
    if BigUint::from(result.len()) != expected {
        return Err(Error::invalid(format!(
            "enumeration found {} transition vectors, formula gives {expected}",
            result.len()
        )));
    }
    for t in &result {
        t.validate()?;
    }
    Ok(result)
}
