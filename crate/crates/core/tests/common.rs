#![allow(dead_code)]
//! Independent reference implementations used as oracles.

use ramseylab::{Coloring, Pattern};

/// Colex rank by definition: position in the sorted list of all r-subsets
/// compared from the largest element down.
pub fn rank_by_sorting(s: &[u32], n: u32) -> u64 {
    let r = s.len();
    let mut all: Vec<Vec<u32>> = Vec::new();
    let mut cur: Vec<u32> = (0..r as u32).collect();
    loop {
        all.push(cur.clone());
        let mut i = 0;
        while i < r && cur[i] + 1 == if i + 1 < r { cur[i + 1] } else { n } {
            i += 1;
        }
        if i == r {
            break;
        }
        cur[i] += 1;
        for (j, slot) in cur.iter_mut().enumerate().take(i) {
            *slot = j as u32;
        }
    }
    all.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    all.iter().position(|x| x == s).unwrap() as u64
}

pub fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

/// Every injection of the pattern vertices into `[0,n)`.
pub fn injections(v: usize, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(v: usize, n: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == v {
            out.push(cur.clone());
            return;
        }
        for x in 0..n as u32 {
            if !cur.contains(&x) {
                cur.push(x);
                go(v, n, cur, out);
                cur.pop();
            }
        }
    }
    go(v, n, &mut cur, &mut out);
    out
}

/// Colors of the image edges of `p` under `map`.
pub fn image_colors(c: &Coloring, p: &Pattern, map: &[u32]) -> Vec<u16> {
    p.edges()
        .iter()
        .map(|e| {
            c.get(&sorted(e.iter().map(|&x| map[x as usize]).collect()))
                .unwrap()
        })
        .collect()
}

pub fn naive_has_mono(c: &Coloring, p: &Pattern) -> bool {
    injections(p.vertex_count(), c.n()).iter().any(|m| {
        let cols = image_colors(c, p, m);
        cols.iter().all(|&x| x == cols[0])
    })
}

pub fn naive_mono_count(c: &Coloring, p: &Pattern) -> u64 {
    let maps = injections(p.vertex_count(), c.n());
    let mut sets: Vec<Vec<Vec<u32>>> = maps
        .iter()
        .filter(|m| {
            let cols = image_colors(c, p, m);
            cols.iter().all(|&x| x == cols[0])
        })
        .map(|m| {
            let mut es: Vec<Vec<u32>> = p
                .edges()
                .iter()
                .map(|e| sorted(e.iter().map(|&x| m[x as usize]).collect()))
                .collect();
            es.sort();
            es
        })
        .collect();
    sets.sort();
    sets.dedup();
    sets.len() as u64
}

/// All triples of `[0,n)` in lexicographic order (not colex).
pub fn triples(n: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Copies of `p` in K_n^3, each as a bitmask over lexicographic triple indices.
pub fn copy_masks(p: &Pattern, n: usize) -> Vec<u32> {
    let ts = triples(n as u32);
    let idx = |t: Vec<u32>| ts.iter().position(|x| x[..] == t[..]).unwrap();
    let mut masks: Vec<u32> = injections(p.vertex_count(), n)
        .iter()
        .map(|m| {
            p.edges().iter().fold(0u32, |acc, e| {
                acc | 1 << idx(sorted(e.iter().map(|&x| m[x as usize]).collect()))
            })
        })
        .collect();
    masks.sort_unstable();
    masks.dedup();
    masks
}

/// Whether some k-coloring of K_n^3 avoids monochromatic copies, by
/// enumerating all k^C(n,3) colorings.
pub fn brute_good_coloring_exists(p: &Pattern, k: u32, n: usize) -> bool {
    let m = triples(n as u32).len();
    let masks = copy_masks(p, n);
    let total = (k as u64).pow(m as u32);
    (0..total).any(|mut code| {
        let mut class = vec![0u32; k as usize];
        for e in 0..m {
            class[(code % k as u64) as usize] |= 1 << e;
            code /= k as u64;
        }
        masks
            .iter()
            .all(|&cm| class.iter().all(|&cl| cl & cm != cm))
    })
}

/// ex(n, p) by enumerating all subsets of the triples.
pub fn brute_ex(p: &Pattern, n: usize) -> u64 {
    let m = triples(n as u32).len();
    let masks = copy_masks(p, n);
    (0u32..1 << m)
        .filter(|&s| masks.iter().all(|&cm| s & cm != cm))
        .map(|s| s.count_ones() as u64)
        .max()
        .unwrap()
}
