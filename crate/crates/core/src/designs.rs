//! Block designs: t-design checks, small exhaustive design search,
//! resolutions into parallel classes, and bow-free colorings built from
//! Steiner quadruple systems.

use crate::budget::{Budget, Outcome};
use crate::coloring::{Coloring, UNASSIGNED};
use crate::combinatorics::{binomial, colex_subsets, rank_unchecked, validate_subset};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

/// Blocks are kept sorted in colex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    v: usize,
    block_size: usize,
    blocks: Vec<Vec<u32>>,
}

impl Design {
    pub fn new(v: usize, block_size: usize, mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        if block_size == 0 || block_size > v {
            return Err(Error::InvalidParams(format!(
                "block size {block_size} invalid for {v} points"
            )));
        }
        for b in &blocks {
            if b.len() != block_size {
                return Err(Error::InvalidParams(format!(
                    "block {b:?} does not have size {block_size}"
                )));
            }
            validate_subset(b, v)?;
        }
        blocks.sort_by_key(|b| rank_unchecked(b));
        if blocks.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParams("duplicate block".into()));
        }
        Ok(Design {
            v,
            block_size,
            blocks,
        })
    }

    /// All distinct translates `{b + i mod v}` of a base block.
    pub fn cyclic(v: usize, base: &[u32]) -> Result<Self> {
        let mut blocks: Vec<Vec<u32>> = (0..v as u32)
            .map(|i| {
                let mut b: Vec<u32> = base.iter().map(|&x| (x + i) % v as u32).collect();
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        blocks.dedup();
        Design::new(v, base.len(), blocks)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn as_hypergraph(&self) -> Result<UniformHypergraph> {
        UniformHypergraph::from_edges(self.block_size, self.v, &self.blocks)
    }
}

// t-subsets of a sorted block, by colex rank.
fn subset_ranks(block: &[u32], t: usize) -> impl Iterator<Item = u64> + '_ {
    colex_subsets(block.len(), t).map(move |idx| {
        let s: Vec<u32> = idx.iter().map(|&i| block[i as usize]).collect();
        rank_unchecked(&s)
    })
}

/// Whether every t-subset of the points lies in exactly `lambda` blocks.
pub fn is_t_design(d: &Design, t: usize, lambda: u64) -> bool {
    if t == 0 || t > d.block_size {
        return false;
    }
    let mut counts = vec![0u64; binomial(d.v as u64, t as u64) as usize];
    for b in &d.blocks {
        for x in subset_ranks(b, t) {
            counts[x as usize] += 1;
        }
    }
    counts.iter().all(|&c| c == lambda)
}

/// Divisibility conditions `C(k-i,t-i) | λ C(v-i,t-i)` for `0 <= i <= t`.
pub fn admissible(t: usize, v: usize, k: usize, lambda: u64) -> std::result::Result<(), String> {
    for i in 0..=t {
        let num = lambda * binomial((v - i) as u64, (t - i) as u64);
        let den = binomial((k - i) as u64, (t - i) as u64);
        if !num.is_multiple_of(den) {
            return Err(format!(
                "counting obstruction: C({},{}) = {den} does not divide {lambda}*C({},{}) = {num}",
                k - i,
                t - i,
                v - i,
                t - i
            ));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesignResult {
    Found(Design),
    CountingObstruction(String),
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignSearch {
    pub result: DesignResult,
    pub nodes: u64,
}

struct DesignSearcher {
    lambda: u16,
    block_list: Vec<Vec<u32>>,
    block_tsubs: Vec<Vec<usize>>,
    through: Vec<Vec<usize>>,
    cover: Vec<u16>,
    chosen: Vec<usize>,
    budget: Budget,
}

impl DesignSearcher {
    fn fits(&self, b: usize) -> bool {
        self.block_tsubs[b]
            .iter()
            .all(|&x| self.cover[x] < self.lambda)
    }

    fn apply(&mut self, b: usize, delta: i32) {
        for &x in &self.block_tsubs[b] {
            self.cover[x] = (self.cover[x] as i32 + delta) as u16;
        }
    }

    // Cover the colex-first under-covered t-subset. When the same t-subset
    // is still first after a choice, later choices for it must have larger
    // block index so that each block set is generated once.
    fn run(&mut self, prev: Option<(usize, usize)>) -> Outcome<()> {
        let Some(target) = self.cover.iter().position(|&c| c < self.lambda) else {
            return Outcome::Found(());
        };
        let min_block = match prev {
            Some((t, b)) if t == target => b + 1,
            _ => 0,
        };
        let candidates: Vec<usize> = self.through[target]
            .iter()
            .copied()
            .filter(|&b| b >= min_block && !self.chosen.contains(&b))
            .collect();
        // The first block is forced to be {0..k-1} (index 0).
        let candidates = if self.chosen.is_empty() {
            candidates.into_iter().take(1).collect()
        } else {
            candidates
        };
        for b in candidates {
            if !self.fits(b) {
                continue;
            }
            if !self.budget.tick() {
                return Outcome::BudgetExceeded;
            }
            self.apply(b, 1);
            self.chosen.push(b);
            match self.run(Some((target, b))) {
                Outcome::Exhausted => {}
                other => return other,
            }
            self.chosen.pop();
            self.apply(b, -1);
        }
        Outcome::Exhausted
    }
}

/// Exhaustive search for a simple `t-(v, block_size, λ)` design.
pub fn find_design(
    t: usize,
    v: usize,
    block_size: usize,
    lambda: u64,
    budget: u64,
) -> Result<DesignSearch> {
    if t == 0 || t > block_size || block_size > v || lambda == 0 {
        return Err(Error::InvalidParams(format!(
            "need 1 <= t <= k <= v and λ >= 1 (got t={t}, v={v}, k={block_size}, λ={lambda})"
        )));
    }
    if lambda > u16::MAX as u64 - 1 || binomial(v as u64, block_size as u64) > 1 << 22 {
        return Err(Error::InvalidParams("design search space too large".into()));
    }
    if let Err(reason) = admissible(t, v, block_size, lambda) {
        return Ok(DesignSearch {
            result: DesignResult::CountingObstruction(reason),
            nodes: 0,
        });
    }
    let block_list: Vec<Vec<u32>> = colex_subsets(v, block_size).collect();
    let block_tsubs: Vec<Vec<usize>> = block_list
        .iter()
        .map(|b| subset_ranks(b, t).map(|x| x as usize).collect())
        .collect();
    let mut through = vec![Vec::new(); binomial(v as u64, t as u64) as usize];
    for (bi, subs) in block_tsubs.iter().enumerate() {
        for &x in subs {
            through[x].push(bi);
        }
    }
    let mut s = DesignSearcher {
        lambda: lambda as u16,
        block_list,
        block_tsubs,
        cover: vec![0; through.len()],
        through,
        chosen: Vec::new(),
        budget: Budget::new(budget),
    };
    let result = match s.run(None) {
        Outcome::Found(()) => {
            let blocks = s.chosen.iter().map(|&b| s.block_list[b].clone()).collect();
            let d = Design::new(v, block_size, blocks)?;
            debug_assert!(is_t_design(&d, t, lambda));
            DesignResult::Found(d)
        }
        Outcome::Exhausted => DesignResult::Exhausted,
        Outcome::BudgetExceeded => DesignResult::BudgetExceeded,
    };
    Ok(DesignSearch {
        result,
        nodes: s.budget.used(),
    })
}

/// A partition of a design's blocks into parallel classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    design: Design,
    /// Block indices of each class.
    classes: Vec<Vec<usize>>,
}

impl Resolution {
    /// Checks that every class partitions the points and that the classes
    /// partition the blocks.
    pub fn new(design: Design, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_seen = vec![false; design.blocks.len()];
        for (ci, class) in classes.iter().enumerate() {
            let mut point_seen = vec![false; design.v];
            for &b in class {
                let block = design
                    .blocks
                    .get(b)
                    .ok_or_else(|| Error::InvalidParams(format!("block index {b} out of range")))?;
                if std::mem::replace(&mut block_seen[b], true) {
                    return Err(Error::InvalidParams(format!("block {b} in two classes")));
                }
                for &p in block {
                    if std::mem::replace(&mut point_seen[p as usize], true) {
                        return Err(Error::InvalidParams(format!(
                            "class {ci} covers point {p} twice"
                        )));
                    }
                }
            }
            if point_seen.iter().any(|s| !s) {
                return Err(Error::InvalidParams(format!("class {ci} misses a point")));
            }
        }
        if block_seen.iter().any(|s| !s) {
            return Err(Error::InvalidParams("some block is in no class".into()));
        }
        Ok(Resolution { design, classes })
    }

    pub fn design(&self) -> &Design {
        &self.design
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }
}

struct Resolver<'a> {
    d: &'a Design,
    used: Vec<bool>,
    classes: Vec<Vec<usize>>,
    covered: Vec<bool>,
    budget: Budget,
}

impl Resolver<'_> {
    fn disjoint_from_class(&self, b: usize) -> bool {
        self.d.blocks[b].iter().all(|&p| !self.covered[p as usize])
    }

    fn mark(&mut self, b: usize, on: bool) {
        self.used[b] = on;
        for &p in &self.d.blocks[b] {
            self.covered[p as usize] = on;
        }
    }

    fn run(&mut self) -> Outcome<()> {
        let open = self.covered.iter().position(|&c| !c);
        match open {
            None => {
                // current class complete (or no class yet)
                let Some(first) = self.used.iter().position(|&u| !u) else {
                    return Outcome::Found(());
                };
                if !self.budget.tick() {
                    return Outcome::BudgetExceeded;
                }
                self.covered.iter_mut().for_each(|c| *c = false);
                self.classes.push(vec![first]);
                self.mark(first, true);
                let res = self.run();
                if !matches!(res, Outcome::Exhausted) {
                    return res;
                }
                self.mark(first, false);
                self.classes.pop();
                self.covered.iter_mut().for_each(|c| *c = true);
                Outcome::Exhausted
            }
            Some(point) => {
                for b in 0..self.d.blocks.len() {
                    if self.used[b]
                        || !self.d.blocks[b].contains(&(point as u32))
                        || !self.disjoint_from_class(b)
                    {
                        continue;
                    }
                    if !self.budget.tick() {
                        return Outcome::BudgetExceeded;
                    }
                    self.classes.last_mut().unwrap().push(b);
                    self.mark(b, true);
                    let res = self.run();
                    if !matches!(res, Outcome::Exhausted) {
                        return res;
                    }
                    self.mark(b, false);
                    self.classes.last_mut().unwrap().pop();
                }
                Outcome::Exhausted
            }
        }
    }
}

/// Searches for a partition of the blocks into parallel classes.
pub fn resolve(d: &Design, budget: u64) -> (Outcome<Resolution>, u64) {
    let per_class = d.v / d.block_size;
    if !d.v.is_multiple_of(d.block_size)
        || d.blocks.is_empty()
        || !d.blocks.len().is_multiple_of(per_class)
    {
        return (Outcome::Exhausted, 0);
    }
    let mut r = Resolver {
        d,
        used: vec![false; d.blocks.len()],
        classes: Vec::new(),
        covered: vec![true; d.v],
        budget: Budget::new(budget),
    };
    let outcome = r.run();
    let nodes = r.budget.used();
    let outcome = match outcome {
        Outcome::Found(()) => {
            let res = Resolution::new(d.clone(), r.classes).expect("search builds valid classes");
            Outcome::Found(res)
        }
        Outcome::Exhausted => Outcome::Exhausted,
        Outcome::BudgetExceeded => Outcome::BudgetExceeded,
    };
    (outcome, nodes)
}

// For a 3-(v,4,1) design: index of the unique block through each triple.
fn triple_owner(d: &Design) -> Result<Vec<usize>> {
    if d.block_size != 4 {
        return Err(Error::NotSteinerQuadruple(format!(
            "block size {}",
            d.block_size
        )));
    }
    let mut owner = vec![usize::MAX; binomial(d.v as u64, 3) as usize];
    for (bi, b) in d.blocks.iter().enumerate() {
        for x in subset_ranks(b, 3) {
            let slot = &mut owner[x as usize];
            if *slot != usize::MAX {
                return Err(Error::NotSteinerQuadruple(format!(
                    "triple of rank {x} lies in two blocks"
                )));
            }
            *slot = bi;
        }
    }
    if let Some(x) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::NotSteinerQuadruple(format!(
            "triple of rank {x} lies in no block"
        )));
    }
    Ok(owner)
}

fn coloring_from_groups(d: &Design, groups: &[Vec<usize>]) -> Result<Coloring> {
    let owner = triple_owner(d)?;
    let mut group_of = vec![UNASSIGNED; d.blocks.len()];
    for (gi, g) in groups.iter().enumerate() {
        for &b in g {
            group_of[b] = gi as u16;
        }
    }
    let colors = owner.iter().map(|&b| group_of[b]).collect();
    Coloring::from_colors(3, d.v, groups.len() as u16, colors)
}

/// Triple T gets color i iff the block containing T is in class i. Every
/// class is a union of disjoint `K_4^3`s, hence bow-free.
pub fn coloring_from_resolution(res: &Resolution) -> Result<Coloring> {
    coloring_from_groups(&res.design, &res.classes)
}

struct PairMatcher<'a> {
    d: &'a Design,
    matched: Vec<bool>,
    groups: Vec<Vec<usize>>,
    singles_left: usize,
    budget: Budget,
}

impl PairMatcher<'_> {
    fn disjoint(&self, a: usize, b: usize) -> bool {
        let (x, y) = (&self.d.blocks[a], &self.d.blocks[b]);
        x.iter().all(|p| !y.contains(p))
    }

    fn run(&mut self) -> Outcome<()> {
        let Some(a) = self.matched.iter().position(|&m| !m) else {
            return Outcome::Found(());
        };
        self.matched[a] = true;
        for b in a + 1..self.d.blocks.len() {
            if self.matched[b] || !self.disjoint(a, b) {
                continue;
            }
            if !self.budget.tick() {
                return Outcome::BudgetExceeded;
            }
            self.matched[b] = true;
            self.groups.push(vec![a, b]);
            let res = self.run();
            if !matches!(res, Outcome::Exhausted) {
                return res;
            }
            self.groups.pop();
            self.matched[b] = false;
        }
        if self.singles_left > 0 {
            if !self.budget.tick() {
                return Outcome::BudgetExceeded;
            }
            self.singles_left -= 1;
            self.groups.push(vec![a]);
            let res = self.run();
            if !matches!(res, Outcome::Exhausted) {
                return res;
            }
            self.groups.pop();
            self.singles_left += 1;
        }
        self.matched[a] = false;
        Outcome::Exhausted
    }
}

/// Groups the blocks of a 3-(v,4,1) design into disjoint pairs (one single
/// block is allowed when the block count is odd) and colors each group.
pub fn pair_partition_coloring(d: &Design, budget: u64) -> Result<(Outcome<Coloring>, u64)> {
    if !is_t_design(d, 3, 1) || d.block_size != 4 {
        return Err(Error::NotSteinerQuadruple(
            "input is not a 3-(v,4,1) design".into(),
        ));
    }
    let mut m = PairMatcher {
        d,
        matched: vec![false; d.blocks.len()],
        groups: Vec::new(),
        singles_left: d.blocks.len() % 2,
        budget: Budget::new(budget),
    };
    let outcome = m.run();
    let nodes = m.budget.used();
    let outcome = match outcome {
        Outcome::Found(()) => Outcome::Found(coloring_from_groups(d, &m.groups)?),
        Outcome::Exhausted => Outcome::Exhausted,
        Outcome::BudgetExceeded => Outcome::BudgetExceeded,
    };
    Ok((outcome, nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::find_mono_copy;
    use crate::pattern::Pattern;

    fn fano() -> Design {
        Design::cyclic(7, &[0, 1, 3]).unwrap()
    }

    fn found(s: DesignSearch) -> Design {
        match s.result {
            DesignResult::Found(d) => d,
            other => panic!("expected a design, got {other:?}"),
        }
    }

    #[test]
    fn fano_checks() {
        let f = fano();
        assert_eq!(f.blocks().len(), 7);
        assert!(is_t_design(&f, 2, 1));
        assert!(!is_t_design(&f, 3, 1));
        assert!(!is_t_design(&f, 1, 1));
        assert!(is_t_design(&f, 1, 3));
    }

    #[test]
    fn design_validation() {
        assert!(Design::new(4, 3, vec![vec![0, 1, 2], vec![0, 1, 2]]).is_err());
        assert!(Design::new(4, 3, vec![vec![0, 1, 4]]).is_err());
        assert!(Design::new(4, 3, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn searches() {
        let d = found(find_design(3, 8, 4, 1, 1_000_000).unwrap());
        assert_eq!(d.blocks().len(), 14);
        assert!(is_t_design(&d, 3, 1));
        let f = found(find_design(2, 7, 3, 1, 1_000_000).unwrap());
        assert_eq!(f.blocks().len(), 7);
        assert!(is_t_design(&f, 2, 1));
        let none = find_design(3, 7, 4, 1, 1_000_000).unwrap();
        assert!(matches!(none.result, DesignResult::CountingObstruction(_)));
    }

    #[test]
    fn exhausted_without_obstruction() {
        // 2-(6,3,2) is admissible (10 blocks) and exists; 2-(6,3,1) is not admissible.
        assert!(matches!(
            find_design(2, 6, 3, 1, 1_000).unwrap().result,
            DesignResult::CountingObstruction(_)
        ));
        let d = found(find_design(2, 6, 3, 2, 1_000_000).unwrap());
        assert!(is_t_design(&d, 2, 2));
        // 1-(4,2,4) passes divisibility but needs 8 distinct pairs out of 6.
        let s = find_design(1, 4, 2, 4, 1_000_000).unwrap();
        assert_eq!(s.result, DesignResult::Exhausted);
    }

    #[test]
    fn budget_is_respected() {
        let s = find_design(3, 10, 4, 1, 3).unwrap();
        assert_eq!(s.result, DesignResult::BudgetExceeded);
    }

    #[test]
    fn resolutions() {
        let d = found(find_design(3, 8, 4, 1, 1_000_000).unwrap());
        let (res, _) = resolve(&d, 1_000_000);
        let res = res.found().unwrap();
        assert_eq!(res.classes().len(), 7);
        assert!(res.classes().iter().all(|c| c.len() == 2));
        assert_eq!(resolve(&fano(), 1000).0, Outcome::Exhausted);
        let single = Design::new(4, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        let (res, _) = resolve(&single, 10);
        assert_eq!(res.found().unwrap().classes().len(), 1);
    }

    #[test]
    fn resolution_validation() {
        let d = found(find_design(3, 8, 4, 1, 1_000_000).unwrap());
        assert!(Resolution::new(d.clone(), vec![(0..14).collect()]).is_err());
        assert!(Resolution::new(d, vec![vec![0]]).is_err());
    }

    #[test]
    fn colorings() {
        let bow = Pattern::parse("bow").unwrap();
        let d = found(find_design(3, 8, 4, 1, 1_000_000).unwrap());
        let res = resolve(&d, 1_000_000).0.found().unwrap();
        let c = coloring_from_resolution(&res).unwrap();
        assert_eq!(c.k(), 7);
        assert_eq!(find_mono_copy(&c, &bow).unwrap(), None);
        for color in 0..7 {
            let comps = c.color_class(color).components();
            assert_eq!(comps.len(), 2);
            assert!(comps.iter().all(|comp| comp.len() == 4));
        }
        let (pairs, _) = pair_partition_coloring(&d, 1_000_000).unwrap();
        assert_eq!(pairs.found().unwrap().k(), 7);

        let single = Design::new(4, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        let res = resolve(&single, 10).0.found().unwrap();
        let c = coloring_from_resolution(&res).unwrap();
        assert_eq!(c.k(), 1);
        assert_eq!(find_mono_copy(&c, &bow).unwrap(), None);
        let (pairs, _) = pair_partition_coloring(&single, 10).unwrap();
        assert_eq!(pairs.found().unwrap().k(), 1);

        let fano_res = Resolution::new(
            Design::new(3, 3, vec![vec![0, 1, 2]]).unwrap(),
            vec![vec![0]],
        )
        .unwrap();
        assert!(matches!(
            coloring_from_resolution(&fano_res),
            Err(Error::NotSteinerQuadruple(_))
        ));
        assert!(pair_partition_coloring(&fano(), 10).is_err());
    }
}
