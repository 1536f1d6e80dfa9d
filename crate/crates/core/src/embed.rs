//! Copy detection: injective embeddings of a pattern into a colored or
//! uncolored host, found by backtracking over pattern vertices.

use std::ops::ControlFlow;

use crate::coloring::{Coloring, UNASSIGNED};
use crate::combinatorics::rank_unchecked;
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::pattern::Pattern;

/// Pattern vertex `i` is sent to host vertex `map[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<u32>,
    /// Common color of the image edges; `None` for uncolored containment.
    pub color: Option<u16>,
}

impl Embedding {
    /// Sorted host edge of each pattern edge under this map.
    pub fn image_edges(&self, p: &Pattern) -> Vec<Vec<u32>> {
        p.edges()
            .iter()
            .map(|e| {
                let mut img: Vec<u32> = e.iter().map(|&x| self.map[x as usize]).collect();
                img.sort_unstable();
                img
            })
            .collect()
    }

    fn is_injective(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        self.map
            .iter()
            .all(|&h| (h as usize) < n && !std::mem::replace(&mut seen[h as usize], true))
    }

    /// Re-checks the witness from scratch: injective, and every image edge
    /// carries `self.color`.
    pub fn is_mono_in(&self, c: &Coloring, p: &Pattern) -> bool {
        let Some(color) = self.color else {
            return false;
        };
        self.map.len() == p.vertex_count()
            && self.is_injective(c.n())
            && self.image_edges(p).iter().all(|e| c.get(e) == Some(color))
    }

    pub fn is_copy_in(&self, host: &UniformHypergraph, p: &Pattern) -> bool {
        self.map.len() == p.vertex_count()
            && self.is_injective(host.n())
            && self.image_edges(p).iter().all(|e| host.contains(e))
    }
}

/// Static placement order plus, per depth, the pattern edges whose last
/// vertex is placed at that depth.
#[derive(Debug, Clone)]
struct Plan {
    order: Vec<usize>,
    completed: Vec<Vec<usize>>,
}

impl Plan {
    fn new(p: &Pattern) -> Plan {
        let v = p.vertex_count();
        let deg = p.hypergraph().degrees();
        let mut placed = vec![false; v];
        let mut order = Vec::with_capacity(v);
        while order.len() < v {
            // Highest degree first; afterwards prefer vertices that close edges
            // or touch the placed set.
            let best = (0..v)
                .filter(|&x| !placed[x])
                .max_by_key(|&x| {
                    let mut closes = 0;
                    let mut touches = 0;
                    for e in p.edges() {
                        if e.contains(&(x as u32)) {
                            let others = e.iter().filter(|&&y| y as usize != x);
                            let placed_others =
                                others.clone().filter(|&&y| placed[y as usize]).count();
                            if placed_others == e.len() - 1 {
                                closes += 1;
                            }
                            if placed_others > 0 {
                                touches += 1;
                            }
                        }
                    }
                    (closes, touches, deg[x], std::cmp::Reverse(x))
                })
                .expect("unplaced vertex exists");
            placed[best] = true;
            order.push(best);
        }
        let mut position = vec![0; v];
        for (i, &x) in order.iter().enumerate() {
            position[x] = i;
        }
        let mut completed = vec![Vec::new(); v];
        for (ei, e) in p.edges().iter().enumerate() {
            let last = e.iter().map(|&x| position[x as usize]).max().unwrap();
            completed[last].push(ei);
        }
        Plan { order, completed }
    }
}

struct Matcher<'a, L, V> {
    p: &'a Pattern,
    plan: Plan,
    n: usize,
    same_label: bool,
    label: L,
    visit: V,
    map: Vec<u32>,
    used: Vec<bool>,
}

impl<L, V> Matcher<'_, L, V>
where
    L: FnMut(u64) -> Option<u16>,
    V: FnMut(&[u32], Option<u16>) -> ControlFlow<()>,
{
    fn run(&mut self, depth: usize, current: Option<u16>) -> ControlFlow<()> {
        if depth == self.plan.order.len() {
            return (self.visit)(&self.map, current);
        }
        let pv = self.plan.order[depth];
        for h in 0..self.n as u32 {
            if self.used[h as usize] {
                continue;
            }
            self.map[pv] = h;
            let mut label = current;
            let mut ok = true;
            for &ei in &self.plan.completed[depth] {
                let e = &self.p.edges()[ei];
                let mut img = [0u32; 8];
                let img = &mut img[..e.len()];
                for (slot, &x) in img.iter_mut().zip(e) {
                    *slot = self.map[x as usize];
                }
                img.sort_unstable();
                match (self.label)(rank_unchecked(img)) {
                    None => ok = false,
                    Some(c) => match label {
                        Some(prev) if self.same_label && prev != c => ok = false,
                        _ => label = Some(c),
                    },
                }
                if !ok {
                    break;
                }
            }
            if ok {
                self.used[h as usize] = true;
                let flow = self.run(depth + 1, label);
                self.used[h as usize] = false;
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Visits every injective map of `p` into `[0,n)` whose image edges all have
/// a label (and a common one when `same_label`). `label(rank)` returns `None`
/// for absent edges.
fn for_each_embedding<L, V>(p: &Pattern, n: usize, same_label: bool, label: L, visit: V)
where
    L: FnMut(u64) -> Option<u16>,
    V: FnMut(&[u32], Option<u16>) -> ControlFlow<()>,
{
    if p.vertex_count() > n {
        return;
    }
    let mut m = Matcher {
        p,
        plan: Plan::new(p),
        n,
        same_label,
        label,
        visit,
        map: vec![0; p.vertex_count()],
        used: vec![false; n],
    };
    let _ = m.run(0, None);
}

fn check_uniformity(expected: usize, p: &Pattern) -> Result<()> {
    if p.r() != expected {
        return Err(Error::UniformityMismatch {
            expected,
            found: p.r(),
        });
    }
    Ok(())
}

fn first_mono(c: &Coloring, p: &Pattern) -> Option<Embedding> {
    let mut found = None;
    for_each_embedding(
        p,
        c.n(),
        true,
        |rank| {
            let x = c.get_rank(rank);
            (x != UNASSIGNED).then_some(x)
        },
        |map, color| {
            found = Some(Embedding {
                map: map.to_vec(),
                color,
            });
            ControlFlow::Break(())
        },
    );
    if let Some(emb) = &found {
        debug_assert!(emb.is_mono_in(c, p), "unsound witness {emb:?}");
    }
    found
}

/// A monochromatic copy of `p` in the total coloring `c`, if one exists.
pub fn find_mono_copy(c: &Coloring, p: &Pattern) -> Result<Option<Embedding>> {
    check_uniformity(c.r(), p)?;
    c.require_total()?;
    Ok(first_mono(c, p))
}

/// Like [`find_mono_copy`] but unassigned edges simply cannot be used.
pub fn find_mono_copy_partial(c: &Coloring, p: &Pattern) -> Result<Option<Embedding>> {
    check_uniformity(c.r(), p)?;
    Ok(first_mono(c, p))
}

/// Number of monochromatic copies of `p`, i.e. monochromatic embeddings
/// divided by the automorphism group order.
pub fn count_mono_copies(c: &Coloring, p: &Pattern) -> Result<u64> {
    check_uniformity(c.r(), p)?;
    c.require_total()?;
    let mut count = 0u64;
    for_each_embedding(
        p,
        c.n(),
        true,
        |rank| Some(c.get_rank(rank)),
        |_, _| {
            count += 1;
            ControlFlow::Continue(())
        },
    );
    debug_assert_eq!(count % p.automorphisms(), 0);
    Ok(count / p.automorphisms())
}

/// An uncolored copy of `p` inside `host`.
pub fn contains_copy(host: &UniformHypergraph, p: &Pattern) -> Result<Option<Embedding>> {
    check_uniformity(host.r(), p)?;
    let mut found = None;
    for_each_embedding(
        p,
        host.n(),
        false,
        |rank| host.contains_rank(rank).then_some(0),
        |map, _| {
            found = Some(Embedding {
                map: map.to_vec(),
                color: None,
            });
            ControlFlow::Break(())
        },
    );
    if let Some(emb) = &found {
        debug_assert!(emb.is_copy_in(host, p));
    }
    Ok(found)
}

/// Number of copies of `p` in `host` (embeddings up to automorphism).
pub fn count_copies(host: &UniformHypergraph, p: &Pattern) -> Result<u64> {
    check_uniformity(host.r(), p)?;
    let mut count = 0u64;
    for_each_embedding(
        p,
        host.n(),
        false,
        |rank| host.contains_rank(rank).then_some(0),
        |_, _| {
            count += 1;
            ControlFlow::Continue(())
        },
    );
    Ok(count / p.automorphisms())
}

/// Every copy of `p` in the complete host on `n` vertices, each given as the
/// sorted list of colex ranks of its edges. Copies are distinct edge sets.
pub fn copies_in_complete(p: &Pattern, n: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for_each_embedding(
        p,
        n,
        false,
        |_| Some(0),
        |map, _| {
            let mut ranks: Vec<u64> = p
                .edges()
                .iter()
                .map(|e| {
                    let mut img: Vec<u32> = e.iter().map(|&x| map[x as usize]).collect();
                    img.sort_unstable();
                    rank_unchecked(&img)
                })
                .collect();
            ranks.sort_unstable();
            out.push(ranks);
            ControlFlow::Continue(())
        },
    );
    out.sort_unstable();
    out.dedup();
    out
}
