//! Named colorings that certify lower bounds `r_k(H) > n`. Each one is
//! rebuilt from its defining rule; names are stable.

use crate::budget::Outcome;
use crate::coloring::{Coloring, UNASSIGNED};
use crate::combinatorics::{colex_subsets, rank_unchecked, validate_subset};
use crate::constructions::{sum_mod, two_pentagon_coloring};
use crate::designs::{
    coloring_from_resolution, find_design, pair_partition_coloring, resolve, DesignResult,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateInfo {
    pub name: &'static str,
    /// Pattern the coloring avoids, as accepted by `Pattern::parse`.
    pub pattern: &'static str,
    pub k: u16,
    pub n: usize,
    pub description: &'static str,
}

pub const CATALOG: &[CertificateInfo] = &[
    CertificateInfo {
        name: "bow_k1_n4",
        pattern: "bow",
        k: 1,
        n: 4,
        description: "all triples of K_4^3 in one color",
    },
    CertificateInfo {
        name: "bow_k3_n5",
        pattern: "bow",
        k: 3,
        n: 5,
        description: "triples of {0,1,2,3}; triples x y 4 with x,y in {0,1,2}; triples x 3 4",
    },
    CertificateInfo {
        name: "bow_k6_n6",
        pattern: "bow",
        k: 6,
        n: 6,
        description: "two K_4^3 classes and four K_4^3-minus-an-edge classes",
    },
    CertificateInfo {
        name: "bow_k7_n8",
        pattern: "bow",
        k: 7,
        n: 8,
        description: "parallel classes of the 3-(8,4,1) design",
    },
    CertificateInfo {
        name: "bow_k15_n10",
        pattern: "bow",
        k: 15,
        n: 10,
        description: "disjoint block pairs of the 3-(10,4,1) design",
    },
    CertificateInfo {
        name: "kite_k5_n5",
        pattern: "kite",
        k: 5,
        n: 5,
        description: "triple ijl colored i+j+l mod 5",
    },
    CertificateInfo {
        name: "kite_k6_n7",
        pattern: "kite",
        k: 6,
        n: 7,
        description: "two Fano planes, two Fano-minus-a-line, Fano-minus-two-lines, Pasch",
    },
    CertificateInfo {
        name: "k43e_k2_n6",
        pattern: "K43e",
        k: 2,
        n: 6,
        description: "two-pentagon coloring of K_5 lifted by an apex vertex",
    },
    CertificateInfo {
        name: "f5_k2_n5",
        pattern: "F5",
        k: 2,
        n: 5,
        description: "star at vertex 0 versus the rest",
    },
    CertificateInfo {
        name: "f5_k3_n6",
        pattern: "F5",
        k: 3,
        n: 6,
        description: "nested stars at vertices 0 and 1, rest in color 2",
    },
];

pub fn catalog() -> &'static [CertificateInfo] {
    CATALOG
}

pub fn certificate_info(name: &str) -> Result<&'static CertificateInfo> {
    CATALOG
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCertificate(name.to_string()))
}

/// Coloring of the triples of `[0,n)` given by explicit classes. Every triple
/// must appear in exactly one class.
pub fn from_triple_classes(n: usize, classes: &[Vec<[u32; 3]>]) -> Result<Coloring> {
    let mut c = Coloring::unassigned(3, n, classes.len() as u16)?;
    for (color, class) in classes.iter().enumerate() {
        for t in class {
            validate_subset(t, n)?;
            let rank = rank_unchecked(t);
            if c.get_rank(rank) != UNASSIGNED {
                return Err(Error::InvalidParams(format!("triple {t:?} in two classes")));
            }
            c.set_rank(rank, color as u16)?;
        }
    }
    c.require_total()?;
    Ok(c)
}

fn triples_of(set: &[u32]) -> Vec<[u32; 3]> {
    colex_subsets(set.len(), 3)
        .map(|idx| {
            [
                set[idx[0] as usize],
                set[idx[1] as usize],
                set[idx[2] as usize],
            ]
        })
        .collect()
}

fn triples_minus(set: &[u32], drop: [u32; 3]) -> Vec<[u32; 3]> {
    triples_of(set).into_iter().filter(|t| *t != drop).collect()
}

fn shifts(base: [u32; 3], v: u32) -> Vec<[u32; 3]> {
    (0..v)
        .map(|i| {
            let mut t = base.map(|x| (x + i) % v);
            t.sort_unstable();
            t
        })
        .collect()
}

// 1-based triples as written in the classic lists, shifted to 0-based.
fn one_based(list: &[[u32; 3]]) -> Vec<[u32; 3]> {
    list.iter().map(|t| t.map(|x| x - 1)).collect()
}

fn kite_k6_n7() -> Result<Coloring> {
    let classes = vec![
        // shifts of 124 and 134 (mod 7), 1-based, i.e. 013 and 023 0-based
        shifts([0, 1, 3], 7),
        shifts([0, 2, 3], 7),
        one_based(&[
            [1, 3, 5],
            [1, 6, 7],
            [2, 3, 6],
            [2, 5, 7],
            [3, 4, 7],
            [4, 5, 6],
        ]),
        one_based(&[
            [1, 2, 3],
            [1, 4, 6],
            [2, 4, 7],
            [2, 5, 6],
            [3, 4, 5],
            [3, 6, 7],
        ]),
        one_based(&[[1, 2, 7], [1, 3, 6], [1, 4, 5], [2, 4, 6], [5, 6, 7]]),
        one_based(&[[1, 2, 5], [1, 4, 7], [2, 3, 4], [3, 5, 7]]),
    ];
    from_triple_classes(7, &classes)
}

fn bow_k6_n6() -> Result<Coloring> {
    let classes = vec![
        triples_of(&[0, 1, 2, 3]),
        triples_of(&[2, 3, 4, 5]),
        triples_minus(&[0, 3, 4, 5], [3, 4, 5]),
        triples_minus(&[1, 3, 4, 5], [3, 4, 5]),
        triples_minus(&[0, 1, 2, 4], [0, 1, 2]),
        triples_minus(&[0, 1, 2, 5], [0, 1, 2]),
    ];
    from_triple_classes(6, &classes)
}

fn bow_k3_n5() -> Result<Coloring> {
    let classes = vec![
        triples_of(&[0, 1, 2, 3]),
        vec![[0, 1, 4], [0, 2, 4], [1, 2, 4]],
        vec![[0, 3, 4], [1, 3, 4], [2, 3, 4]],
    ];
    from_triple_classes(5, &classes)
}

fn k43e_k2_n6() -> Result<Coloring> {
    let pentagons = two_pentagon_coloring();
    Coloring::from_fn(3, 6, 2, |t| {
        if t[2] == 5 {
            pentagons.get(&t[..2]).unwrap()
        } else {
            let rest: Vec<u32> = (0..5).filter(|x| !t.contains(x)).collect();
            1 - pentagons.get(&rest).unwrap()
        }
    })
}

const DESIGN_BUDGET: u64 = 50_000_000;

fn steiner_quadruples(v: usize) -> Result<crate::designs::Design> {
    match find_design(3, v, 4, 1, DESIGN_BUDGET)?.result {
        DesignResult::Found(d) => Ok(d),
        other => Err(Error::Precondition(format!(
            "3-({v},4,1) design search: {other:?}"
        ))),
    }
}

pub fn certificate(name: &str) -> Result<Coloring> {
    let info = certificate_info(name)?;
    let c = match info.name {
        "bow_k1_n4" => Coloring::from_fn(3, 4, 1, |_| 0)?,
        "bow_k3_n5" => bow_k3_n5()?,
        "bow_k6_n6" => bow_k6_n6()?,
        "bow_k7_n8" => {
            let d = steiner_quadruples(8)?;
            let res = resolve(&d, DESIGN_BUDGET)
                .0
                .found()
                .ok_or_else(|| Error::Precondition("3-(8,4,1) design did not resolve".into()))?;
            coloring_from_resolution(&res)?
        }
        "bow_k15_n10" => {
            let d = steiner_quadruples(10)?;
            match pair_partition_coloring(&d, DESIGN_BUDGET)?.0 {
                Outcome::Found(c) => c,
                _ => {
                    return Err(Error::Precondition(
                        "no pairing of 3-(10,4,1) blocks".into(),
                    ))
                }
            }
        }
        "kite_k5_n5" => sum_mod(5, 5)?,
        "kite_k6_n7" => kite_k6_n7()?,
        "k43e_k2_n6" => k43e_k2_n6()?,
        "f5_k2_n5" => Coloring::from_fn(3, 5, 2, |t| u16::from(t[0] != 0))?,
        "f5_k3_n6" => Coloring::from_fn(3, 6, 3, |t| match t[0] {
            0 => 0,
            1 => 1,
            _ => 2,
        })?,
        _ => unreachable!("catalog entry without a builder"),
    };
    debug_assert_eq!((c.k(), c.n()), (info.k, info.n));
    Ok(c)
}
