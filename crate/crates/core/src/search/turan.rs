use fixedbitset::FixedBitSet;

use crate::budget::Budget;
use crate::combinatorics::binomial;
use crate::embed::{contains_copy, copies_in_complete};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::pattern::Pattern;

/// Largest host (number of r-sets) the Turán search accepts.
pub const MAX_TURAN_EDGES: u64 = 4096;

#[derive(Debug, Clone)]
pub struct TuranResult {
    /// Edge count of the best copy-free hypergraph found.
    pub value: u64,
    /// True when the search finished, so `value` equals ex(n, p).
    pub exact: bool,
    pub witness: UniformHypergraph,
    pub nodes: u64,
}

struct Bnb<'a> {
    conflict: Vec<FixedBitSet>,
    big: Vec<Vec<u32>>,
    big_of: Vec<Vec<u32>>,
    big_cnt: Vec<u32>,
    order: Vec<usize>,
    in_s: FixedBitSet,
    chosen: Vec<usize>,
    best: Vec<usize>,
    budget: &'a mut Budget,
}

impl Bnb<'_> {
    /// Greedy partition of `cand` into cliques of the conflict graph, in the
    /// fixed branching order. Returns (edge, number of cliques so far) pairs.
    fn cover(&self, cand: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut classes: Vec<FixedBitSet> = Vec::new();
        let mut out = Vec::with_capacity(cand.count_ones(..));
        for &e in &self.order {
            if !cand.contains(e) {
                continue;
            }
            let slot = classes
                .iter()
                .position(|cl| cl.is_subset(&self.conflict[e]));
            let idx = match slot {
                Some(i) => i,
                None => {
                    classes.push(FixedBitSet::with_capacity(cand.len()));
                    classes.len() - 1
                }
            };
            classes[idx].insert(e);
            out.push((e, idx + 1));
        }
        // branch on high clique numbers first; stable within a clique
        out.sort_by_key(|&(_, c)| c);
        out
    }

    fn expand(&mut self, mut cand: FixedBitSet) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        let cover = self.cover(&cand);
        for &(e, bound) in cover.iter().rev() {
            if self.chosen.len() + bound <= self.best.len() {
                return;
            }
            if !self.budget.tick() {
                return;
            }
            let mut next = cand.clone();
            next.difference_with(&self.conflict[e]);
            next.set(e, false);
            self.in_s.insert(e);
            self.chosen.push(e);
            for &id in &self.big_of[e] {
                let i = id as usize;
                self.big_cnt[i] += 1;
                if self.big_cnt[i] as usize + 1 == self.big[i].len() {
                    if let Some(&f) = self.big[i]
                        .iter()
                        .find(|&&f| !self.in_s.contains(f as usize))
                    {
                        next.set(f as usize, false);
                    }
                }
            }
            self.expand(next);
            for &id in &self.big_of[e] {
                self.big_cnt[id as usize] -= 1;
            }
            self.chosen.pop();
            self.in_s.set(e, false);
            cand.set(e, false);
            if self.budget.exceeded() {
                return;
            }
        }
    }
}

/// ex(n, p): the maximum number of r-sets on `[0,n)` with no copy of `p`.
/// Branch and bound over the copy hypergraph. If the budget runs out the
/// best value found is returned with `exact = false`.
pub fn turan_number(p: &Pattern, n: usize, budget: u64) -> Result<TuranResult> {
    let r = p.r();
    if n < r {
        return Err(Error::InvalidParams(format!(
            "n = {n} is smaller than r = {r}"
        )));
    }
    let m = binomial(n as u64, r as u64);
    if m > MAX_TURAN_EDGES {
        return Err(Error::HostTooLarge(format!("C({n},{r}) = {m} r-sets")));
    }
    let m = m as usize;
    let mut budget = Budget::new(budget);
    let mut cand = FixedBitSet::with_capacity(m);
    cand.insert_range(..);
    let mut conflict = vec![FixedBitSet::with_capacity(m); m];
    let mut big = Vec::new();
    let mut degree = vec![0usize; m];
    for copy in copies_in_complete(p, n) {
        for &e in &copy {
            degree[e as usize] += 1;
        }
        match copy[..] {
            [e] => cand.set(e as usize, false),
            [a, b] => {
                conflict[a as usize].insert(b as usize);
                conflict[b as usize].insert(a as usize);
            }
            _ => big.push(copy.into_iter().map(|x| x as u32).collect::<Vec<u32>>()),
        }
    }
    let mut big_of = vec![Vec::new(); m];
    for (id, c) in big.iter().enumerate() {
        for &e in c {
            big_of[e as usize].push(id as u32);
        }
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&e| std::cmp::Reverse(degree[e]));
    let mut bnb = Bnb {
        conflict,
        big_cnt: vec![0; big.len()],
        big,
        big_of,
        order,
        in_s: FixedBitSet::with_capacity(m),
        chosen: Vec::new(),
        best: Vec::new(),
        budget: &mut budget,
    };
    // All r-sets are equivalent under relabeling, so a nonempty optimum can be
    // assumed to contain {0,..,r-1}, which has rank 0.
    if cand.contains(0) {
        bnb.budget.tick();
        let mut next = cand.clone();
        next.difference_with(&bnb.conflict[0]);
        next.set(0, false);
        bnb.in_s.insert(0);
        bnb.chosen.push(0);
        for &id in &bnb.big_of[0] {
            bnb.big_cnt[id as usize] += 1;
        }
        // big copies always have at least three edges, so none is completed yet
        bnb.expand(next);
    }
    let exact = !bnb.budget.exceeded();
    let best = std::mem::take(&mut bnb.best);
    let witness = UniformHypergraph::from_ranks(r, n, best.iter().map(|&e| e as u64))?;
    debug_assert!(
        contains_copy(&witness, p)?.is_none(),
        "Turán witness contains a copy"
    );
    Ok(TuranResult {
        value: witness.edge_count() as u64,
        exact,
        witness,
        nodes: budget.used(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuranUpper {
    /// Smallest n at which every k-coloring of K_n^r has a monochromatic copy.
    pub n: usize,
    pub ex: u64,
    pub edges: u64,
}

/// Pigeonhole bound: if C(n,r) > k * ex(n, p) then some color class has more
/// than ex(n, p) edges, so r_k(p) <= n. Returns the smallest such n up to
/// `n_cap` for which ex(n, p) could be computed exactly.
pub fn ramsey_upper_from_turan(
    p: &Pattern,
    k: u16,
    n_cap: usize,
    budget: u64,
) -> Result<Option<TuranUpper>> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let r = p.r();
    for n in p.vertex_count().max(r)..=n_cap {
        if binomial(n as u64, r as u64) > MAX_TURAN_EDGES {
            break;
        }
        let t = turan_number(p, n, budget)?;
        if !t.exact {
            continue;
        }
        let edges = binomial(n as u64, r as u64);
        if u128::from(edges) > u128::from(k) * u128::from(t.value) {
            return Ok(Some(TuranUpper {
                n,
                ex: t.value,
                edges,
            }));
        }
    }
    Ok(None)
}
