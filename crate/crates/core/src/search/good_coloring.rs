use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::coloring::Coloring;
use crate::combinatorics::binomial;
use crate::embed::{copies_in_complete, find_mono_copy};
use crate::error::{Error, Result};
use crate::pattern::Pattern;

/// Largest host (number of r-sets) the coloring search accepts.
pub const MAX_SEARCH_EDGES: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    NotFound,
    BudgetExceeded,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// A k-coloring of K_n^r with no monochromatic copy, when found.
    pub certificate: Option<Coloring>,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    /// Maximum number of search nodes (color trials).
    pub budget: u64,
    pub threads: usize,
}

impl SearchConfig {
    pub fn new(budget: u64) -> Self {
        SearchConfig { budget, threads: 1 }
    }
}

const MIXED: u16 = u16::MAX;

struct Instance {
    k: u16,
    edges: usize,
    copies: Vec<Vec<u32>>,
    copies_of: Vec<Vec<u32>>,
}

impl Instance {
    fn new(p: &Pattern, k: u16, n: usize) -> Self {
        let edges = binomial(n as u64, p.r() as u64) as usize;
        let copies: Vec<Vec<u32>> = copies_in_complete(p, n)
            .into_iter()
            .map(|c| c.into_iter().map(|x| x as u32).collect())
            .collect();
        let mut copies_of = vec![Vec::new(); edges];
        for (id, c) in copies.iter().enumerate() {
            for &e in c {
                copies_of[e as usize].push(id as u32);
            }
        }
        Instance {
            k,
            edges,
            copies,
            copies_of,
        }
    }
}

enum Undo {
    Copy { id: u32, col: u16 },
    Forbid { edge: u32, color: u16 },
}

struct Shared<'a> {
    nodes: &'a AtomicU64,
    stop: &'a AtomicBool,
    best: &'a AtomicUsize,
    index: usize,
}

struct Solver<'a> {
    inst: &'a Instance,
    color: Vec<u16>,
    cnt: Vec<u8>,
    col: Vec<u16>,
    forbid: Vec<u32>,
    nforb: Vec<u16>,
    trail: Vec<Undo>,
    nodes: u64,
    limit: u64,
    shared: Option<Shared<'a>>,
    out_of_budget: bool,
    cancelled: bool,
}

const FLUSH: u64 = 1 << 12;

impl<'a> Solver<'a> {
    fn new(inst: &'a Instance, limit: u64, shared: Option<Shared<'a>>) -> Self {
        Solver {
            inst,
            color: vec![u16::MAX; inst.edges],
            cnt: vec![0; inst.copies.len()],
            col: vec![0; inst.copies.len()],
            forbid: vec![0; inst.edges * inst.k as usize],
            nforb: vec![0; inst.edges],
            trail: Vec::new(),
            nodes: 0,
            limit,
            shared,
            out_of_budget: false,
            cancelled: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        match &self.shared {
            None => {
                if self.nodes > self.limit {
                    self.out_of_budget = true;
                }
            }
            Some(s) => {
                if self.nodes.is_multiple_of(FLUSH) {
                    let total = s.nodes.fetch_add(FLUSH, Ordering::Relaxed) + FLUSH;
                    if total > self.limit {
                        self.out_of_budget = true;
                        s.stop.store(true, Ordering::Relaxed);
                    }
                }
                if s.stop.load(Ordering::Relaxed) {
                    self.out_of_budget = true;
                }
                if s.best.load(Ordering::Relaxed) < s.index {
                    self.cancelled = true;
                }
            }
        }
        !(self.out_of_budget || self.cancelled)
    }

    /// Color `e` and propagate; `false` if some edge lost every color.
    fn assign(&mut self, e: usize, c: u16) -> bool {
        let inst = self.inst;
        let k = inst.k as usize;
        self.color[e] = c;
        let mut ok = true;
        for &id in &inst.copies_of[e] {
            let i = id as usize;
            self.trail.push(Undo::Copy {
                id,
                col: self.col[i],
            });
            if self.cnt[i] == 0 {
                self.col[i] = c;
            } else if self.col[i] != c {
                self.col[i] = MIXED;
            }
            self.cnt[i] += 1;
            let size = inst.copies[i].len();
            if self.col[i] == MIXED || (self.cnt[i] as usize) < size - 1 {
                continue;
            }
            debug_assert!(
                (self.cnt[i] as usize) < size,
                "monochromatic copy completed"
            );
            let f = inst.copies[i]
                .iter()
                .copied()
                .find(|&f| self.color[f as usize] == u16::MAX)
                .expect("copy has one open edge") as usize;
            let slot = f * k + c as usize;
            self.forbid[slot] += 1;
            self.trail.push(Undo::Forbid {
                edge: f as u32,
                color: c,
            });
            if self.forbid[slot] == 1 {
                self.nforb[f] += 1;
                if self.nforb[f] as usize == k {
                    ok = false;
                }
            }
        }
        ok
    }

    fn undo_to(&mut self, e: usize, mark: usize) {
        let k = self.inst.k as usize;
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Undo::Copy { id, col } => {
                    self.cnt[id as usize] -= 1;
                    self.col[id as usize] = col;
                }
                Undo::Forbid { edge, color } => {
                    let slot = edge as usize * k + color as usize;
                    self.forbid[slot] -= 1;
                    if self.forbid[slot] == 0 {
                        self.nforb[edge as usize] -= 1;
                    }
                }
            }
        }
        self.color[e] = u16::MAX;
    }

    /// Colors worth trying at edge `depth` given `used` colors so far. Unused
    /// colors are interchangeable, so only the first of them is tried.
    fn choices(&self, depth: usize, used: u16) -> impl Iterator<Item = u16> + '_ {
        let top = used.min(self.inst.k - 1);
        let k = self.inst.k as usize;
        (0..=top).filter(move |&c| self.forbid[depth * k + c as usize] == 0)
    }

    fn dfs(&mut self, depth: usize, used: u16) -> bool {
        if depth == self.inst.edges {
            return true;
        }
        let choices: Vec<u16> = self.choices(depth, used).collect();
        for c in choices {
            if !self.tick() {
                return false;
            }
            let mark = self.trail.len();
            if self.assign(depth, c) && self.dfs(depth + 1, used.max(c + 1)) {
                return true;
            }
            self.undo_to(depth, mark);
            if self.out_of_budget || self.cancelled {
                return false;
            }
        }
        false
    }

    /// All consistent colorings of the first `depth` edges, in search order.
    fn prefixes(
        &mut self,
        at: usize,
        depth: usize,
        used: u16,
        acc: &mut Vec<u16>,
        out: &mut Vec<Vec<u16>>,
    ) {
        if at == depth {
            out.push(acc.clone());
            return;
        }
        let choices: Vec<u16> = self.choices(at, used).collect();
        for c in choices {
            let mark = self.trail.len();
            if self.assign(at, c) {
                acc.push(c);
                self.prefixes(at + 1, depth, used.max(c + 1), acc, out);
                acc.pop();
            }
            self.undo_to(at, mark);
        }
    }
}

pub fn exists_good_coloring(p: &Pattern, k: u16, n: usize, budget: u64) -> Result<SearchOutcome> {
    exists_good_coloring_with(p, k, n, &SearchConfig::new(budget))
}

/// Decide whether some k-coloring of the r-subsets of `[0,n)` has no
/// monochromatic copy of `p`. Exhaustive up to color permutation. With more
/// than one thread the first few edges are split across workers and the
/// lowest-indexed successful branch is reported.
pub fn exists_good_coloring_with(
    p: &Pattern,
    k: u16,
    n: usize,
    cfg: &SearchConfig,
) -> Result<SearchOutcome> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let r = p.r();
    if n < r {
        return Err(Error::InvalidParams(format!(
            "n = {n} is smaller than r = {r}"
        )));
    }
    let edges = binomial(n as u64, r as u64);
    if edges > MAX_SEARCH_EDGES {
        return Err(Error::HostTooLarge(format!("C({n},{r}) = {edges} r-sets")));
    }
    let inst = Instance::new(p, k, n);
    if inst.copies.iter().any(|c| c.len() == 1) {
        // unreachable for valid patterns (they have at least two edges), kept for safety
        return Ok(finish(p, &inst, r, n, None, 0, false));
    }
    let threads = cfg.threads.max(1);
    if threads == 1 || inst.edges < 4 {
        let mut s = Solver::new(&inst, cfg.budget, None);
        let found = s.dfs(0, 0);
        let cert = found.then(|| s.color.clone());
        let nodes = s.nodes.min(cfg.budget);
        return Ok(finish(p, &inst, r, n, cert, nodes, s.out_of_budget));
    }
    parallel(p, &inst, r, n, cfg.budget, threads)
}

fn parallel(
    p: &Pattern,
    inst: &Instance,
    r: usize,
    n: usize,
    budget: u64,
    threads: usize,
) -> Result<SearchOutcome> {
    let depth = inst.edges.min(6);
    let mut prefixes = Vec::new();
    Solver::new(inst, budget, None).prefixes(0, depth, 0, &mut Vec::new(), &mut prefixes);
    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let next = AtomicU64::new(0);
    // (prefix index, coloring) of the best success so far
    let best: Mutex<Option<(usize, Vec<u16>)>> = Mutex::new(None);
    let best_idx = AtomicUsize::new(usize::MAX);
    let exhausted = AtomicBool::new(false);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed) as usize;
                if i >= prefixes.len() || stop.load(Ordering::Relaxed) {
                    break;
                }
                if best_idx.load(Ordering::Relaxed) < i {
                    break;
                }
                let shared = Shared {
                    nodes: &nodes,
                    stop: &stop,
                    best: &best_idx,
                    index: i,
                };
                let mut s = Solver::new(inst, budget, Some(shared));
                let mut used = 0;
                let mut ok = true;
                for (e, &c) in prefixes[i].iter().enumerate() {
                    ok &= s.assign(e, c);
                    used = used.max(c + 1);
                }
                debug_assert!(ok);
                let found = s.dfs(depth, used);
                nodes.fetch_add(s.nodes % FLUSH, Ordering::Relaxed);
                if found {
                    let mut b = best.lock().unwrap();
                    if b.as_ref().is_none_or(|(j, _)| i < *j) {
                        *b = Some((i, s.color.clone()));
                        best_idx.fetch_min(i, Ordering::Relaxed);
                    }
                } else if s.out_of_budget {
                    exhausted.store(true, Ordering::Relaxed);
                }
            });
        }
    });
    let total = nodes.load(Ordering::Relaxed).min(budget);
    let cert = best.into_inner().unwrap().map(|(_, c)| c);
    let out_of_budget =
        cert.is_none() && (exhausted.load(Ordering::Relaxed) || stop.load(Ordering::Relaxed));
    Ok(finish(p, inst, r, n, cert, total, out_of_budget))
}

fn finish(
    p: &Pattern,
    inst: &Instance,
    r: usize,
    n: usize,
    cert: Option<Vec<u16>>,
    nodes: u64,
    out_of_budget: bool,
) -> SearchOutcome {
    let status = match (&cert, out_of_budget) {
        (Some(_), _) => SearchStatus::Found,
        (None, true) => SearchStatus::BudgetExceeded,
        (None, false) => SearchStatus::NotFound,
    };
    let certificate = cert.map(|colors| {
        let c =
            Coloring::from_colors(r, n, inst.k, colors).expect("search produced a total coloring");
        assert!(
            find_mono_copy(&c, p).expect("total coloring").is_none(),
            "search certificate contains a monochromatic copy"
        );
        c
    });
    SearchOutcome {
        status,
        certificate,
        nodes_explored: nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::pattern_catalog;

    fn status(name: &str, k: u16, n: usize) -> SearchStatus {
        let p = pattern_catalog(name, &[]).unwrap();
        exists_good_coloring(&p, k, n, 100_000_000).unwrap().status
    }

    #[test]
    fn small_bow_values() {
        assert_eq!(status("bow", 2, 4), SearchStatus::Found);
        assert_eq!(status("bow", 2, 5), SearchStatus::NotFound);
        assert_eq!(status("bow", 3, 5), SearchStatus::Found);
        assert_eq!(status("bow", 3, 6), SearchStatus::NotFound);
    }

    #[test]
    fn one_color_is_the_vertex_count() {
        for name in ["bow", "kite", "F5", "K43e", "C33"] {
            let p = pattern_catalog(name, &[]).unwrap();
            let v = p.vertex_count();
            let below = exists_good_coloring(&p, 1, v - 1, 1_000).unwrap();
            assert_eq!(below.status, SearchStatus::Found, "{name}");
            let at = exists_good_coloring(&p, 1, v, 1_000).unwrap();
            assert_eq!(at.status, SearchStatus::NotFound, "{name}");
        }
    }

    #[test]
    fn budget_is_reported() {
        let p = pattern_catalog("kite", &[]).unwrap();
        let out = exists_good_coloring(&p, 5, 6, 10).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert!(out.certificate.is_none());
        assert!(out.nodes_explored <= 10);
    }

    #[test]
    fn threads_agree() {
        let p = pattern_catalog("bow", &[]).unwrap();
        for (k, n) in [(3u16, 5usize), (3, 6), (4, 6), (2, 5)] {
            let one = exists_good_coloring(&p, k, n, 10_000_000).unwrap();
            let cfg = SearchConfig {
                budget: 10_000_000,
                threads: 4,
            };
            let many = exists_good_coloring_with(&p, k, n, &cfg).unwrap();
            assert_eq!(one.status, many.status, "k={k} n={n}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        let p = pattern_catalog("bow", &[]).unwrap();
        assert!(exists_good_coloring(&p, 0, 5, 10).is_err());
        assert!(exists_good_coloring(&p, 2, 2, 10).is_err());
    }
}
