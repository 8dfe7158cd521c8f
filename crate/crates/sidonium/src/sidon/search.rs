//! Exhaustive maximum-set searches: branch and bound over canonically
//! ordered element indices, pruned by the counting bound `(g|Γ|)^{1/k}`.

use super::{sk_prime_violation_exists, SkPrimeIndexing};
use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup};

#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Maximum number of candidate-set verifications.
    pub max_nodes: u64,
    /// Stop as soon as a valid set of this size is found.
    pub target: Option<usize>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 10_000_000,
            target: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    /// Size of the best set found; equals the true maximum when `exact`.
    pub value: usize,
    pub witness: ElementSet,
    pub nodes: u64,
    /// True when the search ran to completion (neither the node budget nor
    /// an early target stop intervened).
    pub exact: bool,
}

/// Largest integer `r` with `r^k <= x`.
pub fn integer_kth_root(x: u128, k: u32) -> u64 {
    if x == 0 {
        return 0;
    }
    let mut lo: u128 = 1;
    let mut hi: u128 = 1 << (128 / k.max(1) as u32).min(63);
    while hi.saturating_pow(k) <= x {
        hi *= 2;
    }
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if mid.saturating_pow(k) <= x {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo as u64
}

#[derive(PartialEq, Clone, Copy)]
enum Stop {
    Running,
    /// The counting bound was met with equality; the result is optimal.
    ProvedOptimal,
    /// The requested target size was reached; optimality not established.
    TargetReached,
    Budget,
}

struct SkContext<'g> {
    group: &'g FiniteGroup,
    k: u32,
    g_bound: u64,
    candidates: Vec<usize>,
    budget: SearchBudget,
    best: Vec<usize>,
    nodes: u64,
    stop: Stop,
    size_cap: usize,
    cur_counts: Vec<u64>,
    next_counts: Vec<u64>,
}

impl SkContext<'_> {
    /// Exact multiplicity test: every product of a length-`k` word over
    /// `members` occurs at most `g_bound` times.
    fn passes(&mut self, members: &[usize]) -> bool {
        let n = self.group.order();
        self.cur_counts.iter_mut().for_each(|c| *c = 0);
        for &a in members {
            self.cur_counts[a] += 1;
        }
        for _ in 1..self.k {
            self.next_counts.iter_mut().for_each(|c| *c = 0);
            for p in 0..n {
                let c = self.cur_counts[p];
                if c == 0 {
                    continue;
                }
                for &a in members {
                    self.next_counts[self.group.mul(p, a)] += c;
                }
            }
            std::mem::swap(&mut self.cur_counts, &mut self.next_counts);
        }
        self.cur_counts.iter().all(|&c| c <= self.g_bound)
    }

    fn dfs(&mut self, start: usize, current: &mut Vec<usize>) {
        for idx in start..self.candidates.len() {
            if self.stop != Stop::Running {
                return;
            }
            // even taking every remaining candidate cannot beat the best
            if current.len() + (self.candidates.len() - idx) <= self.best.len() {
                return;
            }
            let e = self.candidates[idx];
            if self.nodes >= self.budget.max_nodes {
                self.stop = Stop::Budget;
                return;
            }
            self.nodes += 1;
            current.push(e);
            if self.passes(current) {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                    if self.best.len() >= self.size_cap {
                        // counting bound met with equality: nothing larger exists
                        self.stop = Stop::ProvedOptimal;
                    } else if let Some(t) = self.budget.target {
                        if self.best.len() >= t {
                            self.stop = Stop::TargetReached;
                        }
                    }
                }
                if self.stop == Stop::Running && current.len() < self.size_cap {
                    self.dfs(idx + 1, current);
                }
            }
            current.pop();
        }
    }
}

/// Maximum size of a subset of `candidates` in which every element of the
/// group is the product of at most `g` length-`k` words.
pub fn max_sk_in(
    group: &FiniteGroup,
    k: u32,
    g: u64,
    candidates: &[usize],
    budget: &SearchBudget,
) -> Result<SearchResult> {
    if k < 2 {
        return Err(Error::invalid("k must be at least 2"));
    }
    if g < 1 {
        return Err(Error::invalid("g must be at least 1"));
    }
    let mut cands: Vec<usize> = candidates.to_vec();
    cands.sort_unstable();
    cands.dedup();
    for &c in &cands {
        if c >= group.order() {
            return Err(Error::IndexRange {
                index: c,
                order: group.order(),
            });
        }
    }
    let size_cap = integer_kth_root(g as u128 * group.order() as u128, k) as usize;
    let mut ctx = SkContext {
        group,
        k,
        g_bound: g,
        candidates: cands,
        budget: *budget,
        best: Vec::new(),
        nodes: 0,
        stop: Stop::Running,
        size_cap: size_cap.max(1),
        cur_counts: vec![0; group.order()],
        next_counts: vec![0; group.order()],
    };
    let mut current = Vec::new();
    ctx.dfs(0, &mut current);
    Ok(SearchResult {
        value: ctx.best.len(),
        witness: ElementSet::from_indices(ctx.best.iter().copied()),
        nodes: ctx.nodes,
        exact: matches!(ctx.stop, Stop::Running | Stop::ProvedOptimal),
    })
}

/// `M_{k,g}`: maximum size of a set with word-product multiplicity at most
/// `g`, over the whole group.
pub fn max_sk(group: &FiniteGroup, k: u32, g: u64, budget: &SearchBudget) -> Result<SearchResult> {
    let all: Vec<usize> = group.elements().collect();
    max_sk_in(group, k, g, &all, budget)
}

struct SkPrimeContext<'g> {
    group: &'g FiniteGroup,
    k: u32,
    indexing: SkPrimeIndexing,
    budget: SearchBudget,
    best: Vec<usize>,
    nodes: u64,
    stop: Stop,
    scratch: Vec<u64>,
}

impl SkPrimeContext<'_> {
    fn dfs(&mut self, start: usize, current: &mut Vec<usize>) {
        let n = self.group.order();
        for e in start..n {
            if self.stop != Stop::Running {
                return;
            }
            if current.len() + (n - e) <= self.best.len() {
                return;
            }
            if self.nodes >= self.budget.max_nodes {
                self.stop = Stop::Budget;
                return;
            }
            self.nodes += 1;
            current.push(e);
            if !sk_prime_violation_exists(
                self.group,
                current,
                self.k,
                self.indexing,
                &mut self.scratch,
            ) {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                    if let Some(t) = self.budget.target {
                        if self.best.len() >= t {
                            self.stop = Stop::TargetReached;
                        }
                    }
                }
                if self.stop == Stop::Running {
                    self.dfs(e + 1, current);
                }
            }
            current.pop();
        }
    }
}

/// `M_k'`: maximum size of a set with the alternating-word property.
///
/// Left translates of valid sets are valid, so some maximum set contains the
/// identity; the search fixes element 0 and explores only its supersets.
pub fn max_sk_prime(group: &FiniteGroup, k: u32, budget: &SearchBudget) -> Result<SearchResult> {
    max_sk_prime_with(group, k, budget, SkPrimeIndexing::Cyclic)
}

pub fn max_sk_prime_with(
    group: &FiniteGroup,
    k: u32,
    budget: &SearchBudget,
    indexing: SkPrimeIndexing,
) -> Result<SearchResult> {
    if k < 2 {
        return Err(Error::invalid("k must be at least 2"));
    }
    let mut ctx = SkPrimeContext {
        group,
        k,
        indexing,
        budget: *budget,
        best: vec![0],
        nodes: 1,
        stop: Stop::Running,
        scratch: Vec::new(),
    };
    let mut current = vec![0usize];
    if budget.target.map(|t| t <= 1).unwrap_or(false) {
        ctx.stop = Stop::TargetReached;
    } else {
        ctx.dfs(1, &mut current);
    }
    Ok(SearchResult {
        value: ctx.best.len(),
        witness: ElementSet::from_indices(ctx.best.iter().copied()),
        nodes: ctx.nodes,
        exact: matches!(ctx.stop, Stop::Running | Stop::ProvedOptimal),
    })
}
