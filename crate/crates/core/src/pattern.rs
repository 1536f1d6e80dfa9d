//! Catalog of small labeled patterns.
//!
//! Vertices are `0..v`. Labelings (letters `a, b, c, ...` map to `0, 1, 2, ...`):
//!
//! | name            | edges                                    |
//! |-----------------|------------------------------------------|
//! | `bow`           | 012, 034                                 |
//! | `kite`          | 012, 013                                 |
//! | `matching2(r)`  | `{0..r}`, `{r..2r}` (r = 3 by default)   |
//! | `F5`            | 012, 013, 234                            |
//! | `K43e`          | 012, 013, 023                            |
//! | `clique(s,r)`   | every r-subset of `[0,s)`                |
//! | `C33`           | 012, 234, 045                            |
//! | `windmill`      | 012, 013, 124, 025 (center edge 012)     |
//! | `tightpath`     | 012, 123, 234                            |
//! | `pasch`         | 012, 134, 245, 035                       |
//! | `F(a,b)`        | `A = [0,a)`, `B = [a,a+b)`, one vertex of A and two of B |
//! | `Hr(r,s,t)`     | `r-2` singleton parts, then parts of sizes s and t; all transversals |
//!
//! Automorphism group orders are recorded per pattern; copy counting divides
//! the number of injective embeddings by them.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::colex_subsets;
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    edges: Vec<Vec<u32>>,
    hypergraph: UniformHypergraph,
    automorphisms: u64,
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

impl Pattern {
    /// A pattern from an explicit edge list. Vertices used must be exactly
    /// `0..v` for some v.
    pub fn new(
        name: impl Into<String>,
        r: usize,
        edges: Vec<Vec<u32>>,
        automorphisms: u64,
    ) -> Result<Self> {
        let name = name.into();
        let v = edges
            .iter()
            .flat_map(|e| e.iter())
            .map(|&x| x as usize + 1)
            .max()
            .unwrap_or(0);
        let hypergraph = UniformHypergraph::from_edges(r, v, &edges)?;
        let mut used = vec![false; v];
        for e in &edges {
            for &x in e {
                used[x as usize] = true;
            }
        }
        if used.iter().any(|u| !u) {
            return Err(Error::InvalidParams(format!(
                "pattern {name} has an isolated vertex"
            )));
        }
        Ok(Pattern {
            name,
            edges,
            hypergraph,
            automorphisms,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn r(&self) -> usize {
        self.hypergraph.r()
    }

    pub fn vertex_count(&self) -> usize {
        self.hypergraph.n()
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn hypergraph(&self) -> &UniformHypergraph {
        &self.hypergraph
    }

    /// Order of the automorphism group.
    pub fn automorphisms(&self) -> u64 {
        self.automorphisms
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (name, params) = match text.find('(') {
            Some(open) => {
                let close = text
                    .strip_suffix(')')
                    .ok_or_else(|| Error::UnknownPattern(text.to_string()))?;
                let inner = &close[open + 1..];
                let params = inner
                    .split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::UnknownPattern(text.to_string()))?;
                (&text[..open], params)
            }
            None => (text, Vec::new()),
        };
        pattern_catalog(name, &params)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::parse(s)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn no_params(name: &str, params: &[usize]) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("{name} takes no parameters")))
    }
}

fn triples(list: &[[u32; 3]]) -> Vec<Vec<u32>> {
    list.iter().map(|t| t.to_vec()).collect()
}

/// Looks up a catalog pattern by name (case-insensitive) and parameters.
pub fn pattern_catalog(name: &str, params: &[usize]) -> Result<Pattern> {
    let key = name.to_ascii_lowercase();
    match key.as_str() {
        "bow" => {
            no_params(name, params)?;
            Pattern::new("bow", 3, triples(&[[0, 1, 2], [0, 3, 4]]), 8)
        }
        "kite" => {
            no_params(name, params)?;
            Pattern::new("kite", 3, triples(&[[0, 1, 2], [0, 1, 3]]), 4)
        }
        "matching2" => {
            let r = match params {
                [] => 3,
                [r] => *r,
                _ => {
                    return Err(Error::InvalidParams(
                        "matching2 takes at most one parameter".into(),
                    ))
                }
            };
            if r < 2 {
                return Err(Error::InvalidParams(format!(
                    "matching2 needs r >= 2, got {r}"
                )));
            }
            let r32 = r as u32;
            let edges = vec![(0..r32).collect(), (r32..2 * r32).collect()];
            let aut = 2 * factorial(r) * factorial(r);
            let name = if r == 3 {
                "matching2".to_string()
            } else {
                format!("matching2({r})")
            };
            Pattern::new(name, r, edges, aut)
        }
        "f5" => {
            no_params(name, params)?;
            Pattern::new("F5", 3, triples(&[[0, 1, 2], [0, 1, 3], [2, 3, 4]]), 4)
        }
        "k43e" | "k43-e" => {
            no_params(name, params)?;
            Pattern::new("K43e", 3, triples(&[[0, 1, 2], [0, 1, 3], [0, 2, 3]]), 6)
        }
        "clique" => {
            let [s, r] = params else {
                return Err(Error::InvalidParams("clique takes (s, r)".into()));
            };
            let (s, r) = (*s, *r);
            if r < 2 || s <= r || s > 8 {
                return Err(Error::InvalidParams(format!(
                    "clique({s},{r}) needs 2 <= r < s <= 8"
                )));
            }
            let edges: Vec<Vec<u32>> = colex_subsets(s, r).collect();
            Pattern::new(format!("clique({s},{r})"), r, edges, factorial(s))
        }
        "c33" => {
            no_params(name, params)?;
            Pattern::new("C33", 3, triples(&[[0, 1, 2], [2, 3, 4], [0, 4, 5]]), 6)
        }
        "windmill" => {
            no_params(name, params)?;
            Pattern::new(
                "windmill",
                3,
                triples(&[[0, 1, 2], [0, 1, 3], [1, 2, 4], [0, 2, 5]]),
                6,
            )
        }
        "tightpath" => {
            no_params(name, params)?;
            Pattern::new(
                "tightpath",
                3,
                triples(&[[0, 1, 2], [1, 2, 3], [2, 3, 4]]),
                2,
            )
        }
        "pasch" => {
            no_params(name, params)?;
            Pattern::new(
                "pasch",
                3,
                triples(&[[0, 1, 2], [1, 3, 4], [2, 4, 5], [0, 3, 5]]),
                24,
            )
        }
        "f" => {
            let [a, b] = params else {
                return Err(Error::InvalidParams("F takes (a, b)".into()));
            };
            let (a, b) = (*a, *b);
            if a < 1 || b < 2 || a + b > 8 {
                return Err(Error::InvalidParams(format!(
                    "F({a},{b}) needs a >= 1, b >= 2, a + b <= 8"
                )));
            }
            let mut edges = Vec::new();
            for x in 0..a as u32 {
                for y in a as u32..(a + b) as u32 {
                    for z in y + 1..(a + b) as u32 {
                        edges.push(vec![x, y, z]);
                    }
                }
            }
            // F(1,2) is a single edge.
            let aut = if (a, b) == (1, 2) {
                6
            } else {
                factorial(a) * factorial(b)
            };
            Pattern::new(format!("F({a},{b})"), 3, edges, aut)
        }
        "hr" => {
            let [r, s, t] = params else {
                return Err(Error::InvalidParams("Hr takes (r, s, t)".into()));
            };
            let (r, s, t) = (*r, *s, *t);
            if r < 2 || s < 2 || t < 2 || r - 2 + s + t > 8 {
                return Err(Error::InvalidParams(format!(
                    "Hr({r},{s},{t}) needs r, s, t >= 2 and at most 8 vertices"
                )));
            }
            let singles: Vec<u32> = (0..(r - 2) as u32).collect();
            let s0 = (r - 2) as u32;
            let t0 = s0 + s as u32;
            let mut edges = Vec::new();
            for x in s0..t0 {
                for y in t0..t0 + t as u32 {
                    let mut e = singles.clone();
                    e.push(x);
                    e.push(y);
                    edges.push(e);
                }
            }
            let swap = if s == t { 2 } else { 1 };
            let aut = factorial(r - 2) * factorial(s) * factorial(t) * swap;
            Pattern::new(format!("Hr({r},{s},{t})"), r, edges, aut)
        }
        _ => Err(Error::UnknownPattern(name.to_string())),
    }
}

/// Names accepted by [`pattern_catalog`] without parameters.
pub const SIMPLE_PATTERNS: &[&str] = &[
    "bow",
    "kite",
    "matching2",
    "F5",
    "K43e",
    "C33",
    "windmill",
    "tightpath",
    "pasch",
];
