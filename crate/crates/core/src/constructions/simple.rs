use crate::coloring::Coloring;
use crate::combinatorics::colex_subsets;
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

/// Triple `{i,j,l}` of `Z_n` gets color `(i+j+l) mod m`.
pub fn sum_mod(n: usize, m: u16) -> Result<Coloring> {
    if n < 3 || m < 1 {
        return Err(Error::InvalidParams(format!(
            "sum_mod needs n >= 3, m >= 1 (got {n}, {m})"
        )));
    }
    Coloring::from_fn(3, n, m, |t| {
        (t.iter().map(|&x| x as u64).sum::<u64>() % m as u64) as u16
    })
}

/// Coloring of the r-subsets of `[0, k+2r-2)` with `min(min(S), k-1)`; two
/// disjoint r-sets never share a color.
pub fn kneser_matching_coloring(r: usize, k: u16) -> Result<Coloring> {
    if r < 2 || k < 1 {
        return Err(Error::InvalidParams(format!(
            "kneser coloring needs r >= 2, k >= 1 (got {r}, {k})"
        )));
    }
    let n = k as usize + 2 * r - 2;
    Coloring::from_fn(r, n, k, |s| (s[0] as u16).min(k - 1))
}

/// Complete r-partite r-uniform hypergraph on `n` vertices with contiguous
/// parts whose sizes differ by at most one.
pub fn balanced_rpartite(n: usize, r: usize) -> Result<UniformHypergraph> {
    if r < 2 || n < r {
        return Err(Error::InvalidParams(format!(
            "balanced r-partite needs n >= r >= 2 (got n={n}, r={r})"
        )));
    }
    // Vertex v lies in part p with boundaries floor(p*n/r).
    let part = |v: u32| -> usize { ((v as usize + 1) * r - 1) / n };
    let edges = colex_subsets(n, r).filter(|s| {
        let mut seen = vec![false; r];
        s.iter()
            .all(|&v| !std::mem::replace(&mut seen[part(v)], true))
    });
    UniformHypergraph::from_edges(r, n, edges)
}

/// The 2-coloring of `K_5` whose color classes are the pentagons
/// `0-1-2-3-4-0` (color 0) and `0-2-4-1-3-0` (color 1).
pub fn two_pentagon_coloring() -> Coloring {
    Coloring::from_fn(2, 5, 2, |e| {
        let d = e[1] - e[0];
        u16::from(!(d == 1 || d == 4))
    })
    .expect("valid parameters")
}
