//! Seeded random sparsifications: the layered spanning subgraph in which
//! every short closed walk is balanced, and induced subgraphs of prescribed
//! size with proportional degree guarantees. Both retry until the exact
//! rational degree condition holds or the attempt budget runs out.

use super::Digraph;
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A ratio `num/den` strictly between 0 and 1; the `(1 - eps)` thresholds
/// are compared by exact cross-multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eps {
    pub num: u64,
    pub den: u64,
}

impl Eps {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num == 0 || num >= den {
            return Err(Error::invalid("eps must satisfy 0 < eps < 1"));
        }
        Ok(Eps { num, den })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (n, d) = text
            .split_once('/')
            .ok_or_else(|| Error::parse(format!("eps must be a fraction 'a/b': {text}")))?;
        Eps::new(
            n.trim()
                .parse()
                .map_err(|_| Error::parse("bad numerator"))?,
            d.trim()
                .parse()
                .map_err(|_| Error::parse("bad denominator"))?,
        )
    }
}

pub(crate) fn attempt_rng(seed: u64, attempt: u64) -> ChaCha8Rng {
    // splitmix64 step keyed by attempt gives independent per-try streams
    let mut z = seed ^ attempt.wrapping_mul(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    ChaCha8Rng::seed_from_u64(z ^ (z >> 31))
}

#[derive(Debug, Clone)]
pub struct LayeredResult {
    pub digraph: Digraph,
    /// Class of each vertex in `0..2h`.
    pub classes: Vec<u32>,
    pub tries: u64,
    /// Whether the degree condition was met within the budget.
    pub met: bool,
}

/// Random partition into `2h` classes keeping only arcs from class `i` to
/// class `i+1 (mod 2h)`. Every closed walk of length at most `2h-1` in the
/// output has type 0: class labels force the net displacement of a closed
/// walk to be a multiple of `2h`. Retries until
/// `δ⁺(output) >= (1-eps)/(2h) · δ⁺(input)`.
pub fn layered_subgraph(
    d: &Digraph,
    h: u32,
    eps: Eps,
    seed: u64,
    max_tries: u64,
) -> Result<LayeredResult> {
    if h < 1 {
        return Err(Error::invalid("h must be at least 1"));
    }
    if max_tries < 1 {
        return Err(Error::invalid("need at least one attempt"));
    }
    let classes_count = 2 * h as usize;
    let min_out_full = super::degree_profile(d).min_out as u64;
    let mut best: Option<LayeredResult> = None;

    for attempt in 0..max_tries {
        let mut rng = attempt_rng(seed, attempt);
        let classes: Vec<u32> = (0..d.n())
            .map(|_| rng.gen_range(0..classes_count as u32))
            .collect();
        let arcs = d.arcs().iter().filter_map(|&(u, v)| {
            let cu = classes[u as usize];
            let cv = classes[v as usize];
            (cv == (cu + 1) % classes_count as u32).then_some((u as usize, v as usize))
        });
        let sub = Digraph::new(d.n(), arcs)?;
        let min_out_sub = super::degree_profile(&sub).min_out as u64;
        // δ⁺(sub) >= (den-num)/(den · 2h) · δ⁺(d), compared exactly
        let met = min_out_sub * eps.den * 2 * h as u64 >= (eps.den - eps.num) * min_out_full;
        let result = LayeredResult {
            digraph: sub,
            classes,
            tries: attempt + 1,
            met,
        };
        if met {
            return Ok(result);
        }
        let better = match &best {
            None => true,
            Some(b) => {
                super::degree_profile(&result.digraph).min_out
                    > super::degree_profile(&b.digraph).min_out
            }
        };
        if better {
            best = Some(result);
        }
    }
    let mut best = best.expect("at least one attempt ran");
    best.tries = max_tries;
    Ok(best)
}

#[derive(Debug, Clone)]
pub struct InducedResult {
    pub digraph: Digraph,
    /// Original vertex ids of the kept vertices, in increasing order.
    pub kept: Vec<usize>,
    pub tries: u64,
    pub met: bool,
}

/// Deletes each vertex independently with probability `1 - m/n` until the
/// survivor count is exactly `m` and both minimum degrees satisfy
/// `δ(output) >= (1-eps) (m/n) δ(input)`.
pub fn random_induced_subgraph(
    d: &Digraph,
    m: usize,
    eps: Eps,
    seed: u64,
    max_tries: u64,
) -> Result<InducedResult> {
    let n = d.n();
    if m > n || 2 * m < n {
        return Err(Error::invalid(format!(
            "target size must satisfy n/2 <= m <= n (n = {n}, m = {m})"
        )));
    }
    if max_tries < 1 {
        return Err(Error::invalid("need at least one attempt"));
    }
    let profile = super::degree_profile(d);
    let (dout, din) = (profile.min_out as u64, profile.min_in as u64);
    let mut best: Option<InducedResult> = None;

    for attempt in 0..max_tries {
        let mut rng = attempt_rng(seed, attempt);
        let kept: Vec<usize> = if m == n {
            (0..n).collect()
        } else {
            (0..n)
                .filter(|_| {
                    // keep with probability m/n
                    rng.gen_range(0..n as u64) < m as u64
                })
                .collect()
        };
        if kept.len() != m {
            if best.is_none() && attempt + 1 == max_tries {
                // ensure a result exists even if no attempt hit the size
                let mut ids: Vec<usize> = (0..n).collect();
                ids.shuffle(&mut rng);
                ids.truncate(m);
                ids.sort_unstable();
                let digraph = d.induced(&ids)?;
                best = Some(InducedResult {
                    digraph,
                    kept: ids,
                    tries: attempt + 1,
                    met: false,
                });
            }
            continue;
        }
        let sub = d.induced(&kept)?;
        let p = super::degree_profile(&sub);
        // δ(sub) * den * n >= (den-num) * m * δ(d), both sides exact
        let ok_out = p.min_out as u64 * eps.den * n as u64 >= (eps.den - eps.num) * m as u64 * dout;
        let ok_in = p.min_in as u64 * eps.den * n as u64 >= (eps.den - eps.num) * m as u64 * din;
        let met = ok_out && ok_in;
        let result = InducedResult {
            digraph: sub,
            kept,
            tries: attempt + 1,
            met,
        };
        if met {
            return Ok(result);
        }
        let better = match &best {
            None => true,
            Some(b) => {
                super::degree_profile(&result.digraph).min_semidegree()
                    > super::degree_profile(&b.digraph).min_semidegree()
            }
        };
        if better {
            best = Some(result);
        }
    }
    let mut best = best.expect("at least one attempt ran");
    best.tries = max_tries;
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::counting::bidirected_complete_bipartite;
    use crate::digraph::find_unbalanced_closed_walk;
    use crate::digraph::glm::glm;

    fn bidirected_complete(n: usize) -> Digraph {
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        Digraph::new(n, arcs).unwrap()
    }

    #[test]
    fn layered_output_has_no_short_unbalanced_walk() {
        let k8 = bidirected_complete(8);
        let r = layered_subgraph(&k8, 2, Eps::new(1, 2).unwrap(), 7, 200).unwrap();
        assert!(find_unbalanced_closed_walk(&r.digraph, 3).is_none());
        // arcs only go class i -> i+1
        for &(u, v) in r.digraph.arcs() {
            assert_eq!((r.classes[u as usize] + 1) % 4, r.classes[v as usize]);
        }
    }

    #[test]
    fn layered_arcless_succeeds_vacuously() {
        let empty = Digraph::new(5, std::iter::empty()).unwrap();
        let r = layered_subgraph(&empty, 3, Eps::new(1, 2).unwrap(), 0, 5).unwrap();
        assert!(r.met);
        assert_eq!(r.tries, 1);
    }

    #[test]
    fn induced_identity_when_m_equals_n() {
        let d = glm(2, 2).unwrap();
        let r = random_induced_subgraph(&d, d.n(), Eps::new(1, 2).unwrap(), 1, 10).unwrap();
        assert!(r.met);
        assert_eq!(r.digraph.n(), d.n());
        assert_eq!(r.tries, 1);
    }

    #[test]
    fn induced_on_kmm() {
        let d = bidirected_complete_bipartite(8, 8);
        let r = random_induced_subgraph(&d, 12, Eps::new(1, 2).unwrap(), 42, 500).unwrap();
        assert_eq!(r.digraph.n(), 12);
        assert!(r.met);
    }

    #[test]
    fn layered_retry_budget_is_reported() {
        // a directed 6-cycle almost never keeps an arc at every vertex when
        // split into 6 classes, so the budget runs out and the best attempt
        // comes back flagged
        let c6 = Digraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let r = layered_subgraph(&c6, 3, Eps::new(1, 2).unwrap(), 1, 50).unwrap();
        if !r.met {
            assert_eq!(r.tries, 50);
        }
    }

    #[test]
    fn induced_with_isolated_vertices() {
        // the degree condition is vacuous at minimum degree 0
        let d = Digraph::new(4, [(0, 1), (1, 0)]).unwrap();
        let r = random_induced_subgraph(&d, 2, Eps::new(1, 2).unwrap(), 3, 500).unwrap();
        assert!(r.met);
        assert_eq!(r.digraph.n(), 2);
    }

    #[test]
    fn eps_validation() {
        assert!(Eps::new(0, 2).is_err());
        assert!(Eps::new(2, 2).is_err());
        assert!(Eps::new(3, 2).is_err());
        assert_eq!(Eps::parse("1/2").unwrap(), Eps::new(1, 2).unwrap());
    }
}
