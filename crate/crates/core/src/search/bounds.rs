use std::fmt;

use crate::certificates::{catalog, certificate};
use crate::constructions::{kneser_matching_coloring, sum_mod};
use crate::embed::find_mono_copy;
use crate::error::{Error, Result};
use crate::pattern::Pattern;

use super::good_coloring::{exists_good_coloring_with, SearchConfig, SearchStatus};
use super::turan::ramsey_upper_from_turan;

#[derive(Debug, Clone, Copy)]
pub struct BoundsConfig {
    pub search_budget: u64,
    pub turan_budget: u64,
    /// Largest host size tried by the pigeonhole bound.
    pub turan_n_cap: usize,
    /// Largest host size tried by direct search.
    pub search_n_cap: usize,
    pub threads: usize,
}

impl Default for BoundsConfig {
    fn default() -> Self {
        BoundsConfig {
            search_budget: 50_000_000,
            turan_budget: 5_000_000,
            turan_n_cap: 12,
            search_n_cap: 10,
            threads: 1,
        }
    }
}

/// Where a lower bound `r_k(H) >= value` comes from: a good coloring of
/// K_{value-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerSource {
    /// Any coloring of fewer vertices than the pattern has.
    Trivial,
    Certificate(String),
    Construction(String),
    Search {
        n: usize,
        nodes: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UpperSource {
    Turan {
        r: usize,
        k: u16,
        n: usize,
        ex: u64,
        edges: u64,
    },
    Search {
        n: usize,
        nodes: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyBounds {
    pub pattern: String,
    pub k: u16,
    pub lower: usize,
    pub lower_source: LowerSource,
    pub upper: Option<usize>,
    pub upper_source: Option<UpperSource>,
}

impl RamseyBounds {
    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower)
    }
}

impl fmt::Display for LowerSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerSource::Trivial => write!(f, "trivial (fewer vertices than the pattern)"),
            LowerSource::Certificate(name) => write!(f, "certificate {name}"),
            LowerSource::Construction(what) => write!(f, "construction {what}"),
            LowerSource::Search { n, nodes } => {
                write!(f, "search found a good coloring of K_{n} ({nodes} nodes)")
            }
        }
    }
}

impl fmt::Display for UpperSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpperSource::Turan { r, k, n, ex, edges } => {
                write!(
                    f,
                    "pigeonhole: C({n},{r}) = {edges} > {k} * ex({n}) = {k} * {ex}"
                )
            }
            UpperSource::Search { n, nodes } => write!(f, "search exhausted K_{n} ({nodes} nodes)"),
        }
    }
}

impl fmt::Display for RamseyBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let upper = self
            .upper
            .map_or_else(|| "?".to_string(), |u| u.to_string());
        write!(f, "[{},{}]", self.lower, upper)
    }
}

/// Known colorings of K_n that avoid `p` with at most `k` colors. Each is
/// checked before it is trusted.
fn constructions(p: &Pattern, k: u16) -> Result<Vec<(usize, LowerSource)>> {
    let mut out = Vec::new();
    let mut push = |n: usize, c: crate::coloring::Coloring, src: LowerSource| -> Result<()> {
        if c.k() <= k && find_mono_copy(&c, p)?.is_none() {
            out.push((n, src));
        }
        Ok(())
    };
    for info in catalog() {
        let same = Pattern::parse(info.pattern)
            .map(|q| q.name() == p.name())
            .unwrap_or(false);
        if same && info.k <= k {
            push(
                info.n,
                certificate(info.name)?,
                LowerSource::Certificate(info.name.to_string()),
            )?;
        }
    }
    let fa2 = match p.name() {
        "kite" => Some(2),
        name => name
            .strip_prefix("F(")
            .and_then(|s| s.strip_suffix(",2)"))
            .and_then(|a| a.parse::<usize>().ok()),
    };
    if let Some(a) = fa2 {
        let n = k as usize * (a - 1);
        if (3..=64).contains(&n) {
            push(
                n,
                sum_mod(n, k)?,
                LowerSource::Construction(format!("sum_mod({n},{k})")),
            )?;
        }
    }
    if p.name().starts_with("matching2") && p.edge_count() == 2 {
        let r = p.r();
        let c = kneser_matching_coloring(r, k)?;
        let n = c.n();
        push(
            n,
            c,
            LowerSource::Construction(format!("kneser_matching_coloring({r},{k})")),
        )?;
    }
    Ok(out)
}

/// Best known bounds on r_k(p) from certificates, constructions, the Turán
/// pigeonhole bound and direct search, in that order.
pub fn ramsey_bounds(p: &Pattern, k: u16, cfg: &BoundsConfig) -> Result<RamseyBounds> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let mut lower = p.vertex_count();
    let mut lower_source = LowerSource::Trivial;
    for (n, src) in constructions(p, k)? {
        if n + 1 > lower {
            lower = n + 1;
            lower_source = src;
        }
    }
    let mut upper = None;
    let mut upper_source = None;
    if let Some(t) = ramsey_upper_from_turan(p, k, cfg.turan_n_cap, cfg.turan_budget)? {
        assert!(
            t.n >= lower,
            "pigeonhole bound {} below lower bound {lower}",
            t.n
        );
        upper = Some(t.n);
        upper_source = Some(UpperSource::Turan {
            r: p.r(),
            k,
            n: t.n,
            ex: t.ex,
            edges: t.edges,
        });
    }
    let search = SearchConfig {
        budget: cfg.search_budget,
        threads: cfg.threads,
    };
    let mut n = lower;
    while n <= cfg.search_n_cap && upper.is_none_or(|u| n < u) {
        let out = match exists_good_coloring_with(p, k, n, &search) {
            Ok(out) => out,
            Err(Error::HostTooLarge(_)) => break,
            Err(e) => return Err(e),
        };
        match out.status {
            SearchStatus::Found => {
                lower = n + 1;
                lower_source = LowerSource::Search {
                    n,
                    nodes: out.nodes_explored,
                };
            }
            SearchStatus::NotFound => {
                upper = Some(n);
                upper_source = Some(UpperSource::Search {
                    n,
                    nodes: out.nodes_explored,
                });
            }
            SearchStatus::BudgetExceeded => break,
        }
        n += 1;
    }
    Ok(RamseyBounds {
        pattern: p.name().to_string(),
        k,
        lower,
        lower_source,
        upper,
        upper_source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::pattern_catalog;

    #[test]
    fn bow_two_colors() {
        let p = pattern_catalog("bow", &[]).unwrap();
        let b = ramsey_bounds(&p, 2, &BoundsConfig::default()).unwrap();
        assert_eq!((b.lower, b.upper), (5, Some(5)));
        assert_eq!(b.to_string(), "[5,5]");
    }

    #[test]
    fn bow_six_colors_from_certificate_and_pigeonhole() {
        let p = pattern_catalog("bow", &[]).unwrap();
        let b = ramsey_bounds(&p, 6, &BoundsConfig::default()).unwrap();
        assert_eq!(b.to_string(), "[7,7]");
        assert_eq!(b.lower_source, LowerSource::Certificate("bow_k6_n6".into()));
        assert!(matches!(
            b.upper_source,
            Some(UpperSource::Turan {
                n: 7,
                ex: 5,
                edges: 35,
                ..
            })
        ));
    }

    #[test]
    fn matching_uses_kneser() {
        let p = pattern_catalog("matching2", &[]).unwrap();
        let b = ramsey_bounds(&p, 1, &BoundsConfig::default()).unwrap();
        assert_eq!((b.lower, b.upper), (6, Some(6)));
    }
}
