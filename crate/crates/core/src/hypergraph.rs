use fixedbitset::FixedBitSet;
use num_rational::Ratio;

use crate::combinatorics::{binomial, colex_unrank, rank_unchecked, validate_subset, RSubset};
use crate::error::{Error, Result};

/// Hosts with at most this many potential edges get a dense membership bitmap.
const DENSE_LIMIT: u64 = 1 << 26;

/// An r-uniform hypergraph on `[0,n)`. Edges are kept as sorted colex ranks.
#[derive(Debug, Clone)]
pub struct UniformHypergraph {
    r: usize,
    n: usize,
    ranks: Vec<u64>,
    dense: Option<FixedBitSet>,
}

impl PartialEq for UniformHypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.n == other.n && self.ranks == other.ranks
    }
}

impl Eq for UniformHypergraph {}

impl UniformHypergraph {
    pub fn empty(r: usize, n: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParams(format!("uniformity {r} < 2")));
        }
        let total = binomial(n as u64, r as u64);
        let dense = (total <= DENSE_LIMIT).then(|| FixedBitSet::with_capacity(total as usize));
        Ok(UniformHypergraph {
            r,
            n,
            ranks: Vec::new(),
            dense,
        })
    }

    pub fn complete(r: usize, n: usize) -> Result<Self> {
        let total = binomial(n as u64, r as u64);
        Self::from_ranks(r, n, 0..total)
    }

    pub fn from_edges<I, E>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        let mut ranks = Vec::new();
        for e in edges {
            let e = e.as_ref();
            if e.len() != r {
                return Err(Error::UniformityMismatch {
                    expected: r,
                    found: e.len(),
                });
            }
            validate_subset(e, n)?;
            ranks.push(rank_unchecked(e));
        }
        let before = ranks.len();
        ranks.sort_unstable();
        ranks.dedup();
        if ranks.len() != before {
            return Err(Error::InvalidParams("duplicate edge".into()));
        }
        Self::from_sorted_ranks(r, n, ranks)
    }

    /// Builds from arbitrary ranks; duplicates are merged.
    pub fn from_ranks<I: IntoIterator<Item = u64>>(r: usize, n: usize, ranks: I) -> Result<Self> {
        let mut ranks: Vec<u64> = ranks.into_iter().collect();
        ranks.sort_unstable();
        ranks.dedup();
        Self::from_sorted_ranks(r, n, ranks)
    }

    fn from_sorted_ranks(r: usize, n: usize, ranks: Vec<u64>) -> Result<Self> {
        let mut h = Self::empty(r, n)?;
        let total = binomial(n as u64, r as u64);
        if let Some(&last) = ranks.last() {
            if last >= total {
                return Err(Error::InvalidSubset(format!(
                    "rank {last} outside [0,{total})"
                )));
            }
        }
        if let Some(bits) = h.dense.as_mut() {
            for &x in &ranks {
                bits.insert(x as usize);
            }
        }
        h.ranks = ranks;
        Ok(h)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    pub fn contains_rank(&self, rank: u64) -> bool {
        match &self.dense {
            Some(bits) => bits.contains(rank as usize),
            None => self.ranks.binary_search(&rank).is_ok(),
        }
    }

    /// `edge` must be strictly increasing; out-of-range input is simply absent.
    pub fn contains(&self, edge: &[u32]) -> bool {
        edge.len() == self.r
            && validate_subset(edge, self.n).is_ok()
            && self.contains_rank(rank_unchecked(edge))
    }

    pub fn edges(&self) -> impl Iterator<Item = RSubset> + '_ {
        self.ranks.iter().map(move |&x| RSubset::unrank(x, self.r))
    }

    pub fn edge_lists(&self) -> Vec<Vec<u32>> {
        self.ranks
            .iter()
            .map(|&x| colex_unrank(x, self.r))
            .collect()
    }

    /// Exact `|E| / C(n,r)`; zero for an empty host.
    pub fn density(&self) -> Ratio<u64> {
        let total = binomial(self.n as u64, self.r as u64);
        if total == 0 {
            return Ratio::from_integer(0);
        }
        Ratio::new(self.ranks.len() as u64, total)
    }

    /// Number of edges through each vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in self.edge_lists() {
            for v in e {
                deg[v as usize] += 1;
            }
        }
        deg
    }

    /// Vertex sets of the connected components that carry at least one edge.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut touched = vec![false; self.n];
        for e in self.edge_lists() {
            for &v in &e {
                touched[v as usize] = true;
            }
            for w in e.windows(2) {
                let a = find(&mut parent, w[0] as usize);
                let b = find(&mut parent, w[1] as usize);
                parent[a] = b;
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<u32>> = Default::default();
        for v in (0..self.n).filter(|&v| touched[v]) {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().push(v as u32);
        }
        let mut out: Vec<Vec<u32>> = groups.into_values().collect();
        out.sort();
        out
    }
}

/// Exact `|E| / C(n,r)`.
pub fn density(h: &UniformHypergraph) -> Ratio<u64> {
    h.density()
}
