//! Exact computation of `n(2,k)` for small `k`.
//!
//! The search runs iterative deepening on the target `n`. For a fixed target it
//! extends `{0}` in increasing element order, subject to two rules:
//!
//! * the next element never exceeds the smallest uncovered integer `c`, since
//!   `c` can only be written as `a + x` with `x <= c`;
//! * the number of still uncovered integers in `[0, n-1]` cannot exceed the
//!   number of pairs the remaining elements can create.
//!
//! Extremal bases contain `{0, 1}` and lie in `[0, n-1]`, so restricting to
//! subsets of `[0, n-1]` loses nothing. The first rule forces `1` as the
//! second element.
//!
//! Top-level prefixes are searched in parallel. Each prefix runs its own
//! deterministic search, so node counts and witnesses do not depend on the
//! worker count (unless the node budget runs out).

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sumset::{n2, Basis};

/// Largest `k` accepted by [`n2k_exact`].
pub const MAX_EXACT_K: usize = 12;

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// Depth at which the search fans out to worker threads.
const SPLIT_DEPTH: usize = 5;

/// Nodes are flushed to the shared counter in chunks of this size.
const FLUSH_EVERY: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub k: usize,
    pub n_best: u64,
    /// Extremal bases in lexicographic order.
    pub witnesses: Vec<Basis>,
    pub nodes_explored: u64,
    /// True when the search covered every candidate; false after the budget ran out.
    pub exhaustive: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    FirstOnly,
    All,
}

struct Shared {
    budget: u64,
    nodes: AtomicU64,
    out_of_budget: AtomicBool,
}

impl Shared {
    fn charge(&self, local: &mut u64) -> bool {
        let total = self.nodes.fetch_add(*local, Ordering::Relaxed) + *local;
        *local = 0;
        if total > self.budget {
            self.out_of_budget.store(true, Ordering::Relaxed);
        }
        !self.out_of_budget.load(Ordering::Relaxed)
    }
}

#[derive(Clone)]
struct State {
    elems: Vec<u64>,
    elem_mask: u128,
    cover: u128,
}

impl State {
    fn root() -> Self {
        Self {
            elems: vec![0],
            elem_mask: 1,
            cover: 1,
        }
    }

    fn push(&self, x: u64, full: u128) -> Self {
        let mut elems = self.elems.clone();
        elems.push(x);
        let elem_mask = self.elem_mask | (1u128 << x);
        let cover = (self.cover | (elem_mask << x)) & full;
        Self {
            elems,
            elem_mask,
            cover,
        }
    }
}

struct Target<'a> {
    n: u64,
    k: usize,
    full: u128,
    mode: Mode,
    shared: &'a Shared,
}

impl Target<'_> {
    fn new(n: u64, k: usize, mode: Mode, shared: &Shared) -> Target<'_> {
        let full = if n >= 128 {
            u128::MAX
        } else {
            (1u128 << n) - 1
        };
        Target {
            n,
            k,
            full,
            mode,
            shared,
        }
    }

    /// Range of admissible next elements, `None` when the state is pruned.
    fn children(&self, s: &State) -> Option<std::ops::RangeInclusive<u64>> {
        let i = s.elems.len();
        let remaining = (self.k - i) as u64;
        let uncovered = self.n - s.cover.count_ones() as u64;
        let new_pairs = remaining * i as u64 + remaining * (remaining + 1) / 2;
        let last = *s.elems.last().expect("state always holds 0");
        if uncovered > new_pairs {
            return None;
        }
        let c = (!s.cover).trailing_zeros() as u64;
        let hi = c.min(self.n - 1);
        // room for the remaining elements below n
        let hi = hi.min(self.n - remaining);
        Some(last + 1..=hi)
    }

    fn is_leaf(&self, s: &State) -> bool {
        s.elems.len() == self.k
    }

    /// Depth-first search below `s`. Returns true when the caller should stop.
    fn dfs(&self, s: &State, local: &mut u64, out: &mut Vec<Basis>) -> bool {
        *local += 1;
        if *local >= FLUSH_EVERY && !self.shared.charge(local) {
            return true;
        }
        if self.is_leaf(s) {
            if s.cover == self.full {
                out.push(Basis::new(s.elems.clone()).expect("search keeps elements increasing"));
                return self.mode == Mode::FirstOnly;
            }
            return false;
        }
        for x in self.children(s).into_iter().flatten() {
            if self.dfs(&s.push(x, self.full), local, out) {
                return true;
            }
        }
        false
    }

    /// Collects every non-pruned state at `depth` (or leaves reached earlier).
    fn frontier(&self, s: &State, depth: usize, local: &mut u64, acc: &mut Vec<State>) {
        if s.elems.len() >= depth || self.is_leaf(s) {
            acc.push(s.clone());
            return;
        }
        *local += 1;
        for x in self.children(s).into_iter().flatten() {
            self.frontier(&s.push(x, self.full), depth, local, acc);
        }
    }

    /// Runs the search and returns the witnesses found (all, or one per prefix).
    fn run(&self) -> Vec<Basis> {
        let mut local = 0;
        let mut prefixes = Vec::new();
        self.frontier(
            &State::root(),
            SPLIT_DEPTH.min(self.k),
            &mut local,
            &mut prefixes,
        );
        self.shared.charge(&mut local);

        let per_prefix: Vec<Vec<Basis>> = prefixes
            .par_iter()
            .map(|p| {
                let mut local = 0;
                let mut out = Vec::new();
                // each prefix stops at its own first witness in FirstOnly mode
                self.dfs(p, &mut local, &mut out);
                self.shared.charge(&mut local);
                out
            })
            .collect();
        let mut all: Vec<Basis> = per_prefix.into_iter().flatten().collect();
        all.sort();
        all
    }
}

/// Computes `n(2,k)` and all extremal `k`-bases by exhaustive search.
pub fn n2k_exact(k: usize, node_budget: u64) -> Result<SearchResult> {
    if k == 0 {
        return Err(Error::KTooSmall);
    }
    if k > MAX_EXACT_K {
        return Err(Error::KTooLarge {
            k,
            max: MAX_EXACT_K,
        });
    }
    if node_budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let shared = Shared {
        budget: node_budget,
        nodes: AtomicU64::new(0),
        out_of_budget: AtomicBool::new(false),
    };
    let upper = (k * (k + 1) / 2) as u64;

    // {0, 1, ..., k-1} covers [0, 2k-2]
    let mut n_best = 2 * k as u64 - 1;
    let mut witnesses = vec![Basis::new((0..k as u64).collect())?];
    let mut exhaustive = true;

    while n_best < upper {
        let found = Target::new(n_best + 1, k, Mode::FirstOnly, &shared).run();
        if shared.out_of_budget.load(Ordering::Relaxed) {
            exhaustive = false;
            if let Some(w) = found.into_iter().max_by_key(n2) {
                n_best = n2(&w);
                witnesses = vec![w];
            }
            break;
        }
        match found.into_iter().max_by_key(n2) {
            // a witness for target n may cover more than n
            Some(w) => {
                n_best = n2(&w);
                witnesses = vec![w];
            }
            None => break,
        }
    }

    if exhaustive {
        let all = Target::new(n_best, k, Mode::All, &shared).run();
        if shared.out_of_budget.load(Ordering::Relaxed) {
            exhaustive = false;
            if !all.is_empty() {
                witnesses = all;
            }
        } else {
            witnesses = all;
        }
    }
    // a partial witness list may still contain bases with a larger n2; keep only exact ones
    witnesses.retain(|w| n2(w) == n_best);
    witnesses.sort();
    witnesses.dedup();

    Ok(SearchResult {
        k,
        n_best,
        witnesses,
        nodes_explored: shared.nodes.load(Ordering::Relaxed),
        exhaustive,
    })
}

/// Checks a claimed witness independently of the search: `n(2,A) >= claimed_n`.
pub fn verify_extremal(a: &Basis, claimed_n: u64) -> bool {
    n2(a) >= claimed_n
}
