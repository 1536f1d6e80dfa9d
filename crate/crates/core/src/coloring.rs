use crate::combinatorics::{
    binomial, colex_subsets, colex_unrank, rank_unchecked, validate_subset,
};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

/// Reserved value for an edge without a color. Never a valid color.
pub const UNASSIGNED: u16 = u16::MAX;

/// A total or partial k-coloring of the r-subsets of `[0,n)`, stored as a
/// flat array indexed by colex rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    r: usize,
    n: usize,
    k: u16,
    colors: Vec<u16>,
}

impl Coloring {
    pub fn unassigned(r: usize, n: usize, k: u16) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidParams("uniformity must be positive".into()));
        }
        if k == 0 || k == UNASSIGNED {
            return Err(Error::InvalidParams(format!(
                "color count {k} out of range"
            )));
        }
        let total = binomial(n as u64, r as u64);
        if total > (1 << 32) {
            return Err(Error::HostTooLarge(format!("C({n},{r}) = {total} edges")));
        }
        Ok(Coloring {
            r,
            n,
            k,
            colors: vec![UNASSIGNED; total as usize],
        })
    }

    /// Total coloring given by `f` on every r-subset (called in colex order).
    pub fn from_fn<F>(r: usize, n: usize, k: u16, mut f: F) -> Result<Self>
    where
        F: FnMut(&[u32]) -> u16,
    {
        let mut c = Self::unassigned(r, n, k)?;
        for (rank, s) in colex_subsets(n, r).enumerate() {
            let color = f(&s);
            c.set_rank(rank as u64, color)?;
        }
        Ok(c)
    }

    pub fn from_colors(r: usize, n: usize, k: u16, colors: Vec<u16>) -> Result<Self> {
        let mut c = Self::unassigned(r, n, k)?;
        if colors.len() != c.colors.len() {
            return Err(Error::InvalidParams(format!(
                "expected {} colors, got {}",
                c.colors.len(),
                colors.len()
            )));
        }
        if let Some(&bad) = colors.iter().find(|&&x| x != UNASSIGNED && x >= k) {
            return Err(Error::ColorOutOfRange { color: bad, k });
        }
        c.colors = colors;
        Ok(c)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u16 {
        self.k
    }

    pub fn edge_count(&self) -> u64 {
        self.colors.len() as u64
    }

    pub fn colors(&self) -> &[u16] {
        &self.colors
    }

    #[inline]
    pub fn get_rank(&self, rank: u64) -> u16 {
        self.colors[rank as usize]
    }

    /// Color of a strictly increasing r-subset; `None` if unassigned.
    pub fn get(&self, edge: &[u32]) -> Option<u16> {
        debug_assert!(validate_subset(edge, self.n).is_ok());
        let c = self.colors[rank_unchecked(edge) as usize];
        (c != UNASSIGNED).then_some(c)
    }

    pub fn set_rank(&mut self, rank: u64, color: u16) -> Result<()> {
        if color != UNASSIGNED && color >= self.k {
            return Err(Error::ColorOutOfRange { color, k: self.k });
        }
        let slot = self
            .colors
            .get_mut(rank as usize)
            .ok_or_else(|| Error::InvalidSubset(format!("rank {rank} out of range")))?;
        *slot = color;
        Ok(())
    }

    pub fn set(&mut self, edge: &[u32], color: u16) -> Result<()> {
        if edge.len() != self.r {
            return Err(Error::UniformityMismatch {
                expected: self.r,
                found: edge.len(),
            });
        }
        validate_subset(edge, self.n)?;
        self.set_rank(rank_unchecked(edge), color)
    }

    pub fn assigned_count(&self) -> u64 {
        self.colors.iter().filter(|&&c| c != UNASSIGNED).count() as u64
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c != UNASSIGNED)
    }

    pub fn require_total(&self) -> Result<()> {
        let unassigned = self.edge_count() - self.assigned_count();
        if unassigned > 0 {
            return Err(Error::PartialColoring { unassigned });
        }
        Ok(())
    }

    /// Number of edges of each color `0..k`.
    pub fn class_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.k as usize];
        for &c in &self.colors {
            if c != UNASSIGNED {
                sizes[c as usize] += 1;
            }
        }
        sizes
    }

    /// Colors that actually occur, ascending.
    pub fn used_colors(&self) -> Vec<u16> {
        self.class_sizes()
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 0)
            .map(|(c, _)| c as u16)
            .collect()
    }

    pub fn color_class(&self, color: u16) -> UniformHypergraph {
        let ranks = self
            .colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == color)
            .map(|(i, _)| i as u64);
        UniformHypergraph::from_ranks(self.r, self.n, ranks).expect("ranks are in range")
    }

    /// Assigned edges in colex order with their colors.
    pub fn assigned_edges(&self) -> impl Iterator<Item = (Vec<u32>, u16)> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != UNASSIGNED)
            .map(move |(i, &c)| (colex_unrank(i as u64, self.r), c))
    }

    /// The same assignment read as a coloring with more colors.
    pub fn with_k(&self, k: u16) -> Result<Self> {
        Self::from_colors(self.r, self.n, k, self.colors.clone())
    }
}
