use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

/// `PG(2,q)` for a prime `q`, built from homogeneous coordinates.
#[derive(Debug, Clone)]
pub struct ProjectivePlane {
    pub q: u32,
    /// Normalized coordinates (first nonzero entry is 1).
    pub points: Vec<[u32; 3]>,
    /// Point indices on each line, ascending. Line `j` has the coordinates
    /// of point `j` as its normal vector.
    pub lines: Vec<Vec<u32>>,
}

impl ProjectivePlane {
    pub fn order(&self) -> usize {
        self.points.len()
    }

    /// Incident (point, line) pairs.
    pub fn incidences(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.lines
            .iter()
            .enumerate()
            .flat_map(|(l, pts)| pts.iter().map(move |&p| (p, l as u32)))
    }
}

fn is_small_prime(q: u32) -> bool {
    matches!(q, 2 | 3 | 5 | 7)
}

pub fn projective_plane(q: u32) -> Result<ProjectivePlane> {
    if !is_small_prime(q) {
        return Err(Error::InvalidParams(format!(
            "projective plane of order {q} not supported (primes 2, 3, 5, 7 only)"
        )));
    }
    let mut points = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    points.push(v);
                }
            }
        }
    }
    let lines = points
        .iter()
        .map(|normal| {
            points
                .iter()
                .enumerate()
                .filter(|(_, p)| (0..3).map(|i| p[i] * normal[i]).sum::<u32>() % q == 0)
                .map(|(i, _)| i as u32)
                .collect()
        })
        .collect();
    Ok(ProjectivePlane { q, points, lines })
}

/// Pasch-free host: with `N = q^2+q+1`, vertices `[0,N)` are points,
/// `[N,2N)` lines and `[2N,3N)` apex vertices; every apex forms a triple
/// with every incident point-line pair.
pub fn pasch_free_host(q: u32) -> Result<UniformHypergraph> {
    if !matches!(q, 2 | 3) {
        return Err(Error::InvalidParams(format!(
            "pasch_free_host supports q in {{2, 3}}, got {q}"
        )));
    }
    let plane = projective_plane(q)?;
    let n = plane.order() as u32;
    let incidences: Vec<(u32, u32)> = plane.incidences().collect();
    let edges = (0..n).flat_map(|apex| {
        incidences
            .iter()
            .map(move |&(p, l)| [p, n + l, 2 * n + apex])
    });
    UniformHypergraph::from_edges(3, 3 * n as usize, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_axioms() {
        for q in [2u32, 3, 5] {
            let plane = projective_plane(q).unwrap();
            let n = (q * q + q + 1) as usize;
            assert_eq!(plane.order(), n);
            assert!(plane.lines.iter().all(|l| l.len() == q as usize + 1));
            // Any two points lie on exactly one common line.
            for a in 0..n as u32 {
                for b in a + 1..n as u32 {
                    let common = plane
                        .lines
                        .iter()
                        .filter(|l| l.contains(&a) && l.contains(&b))
                        .count();
                    assert_eq!(common, 1);
                }
            }
        }
    }

    #[test]
    fn host_sizes() {
        let h = pasch_free_host(2).unwrap();
        assert_eq!((h.n(), h.edge_count()), (21, 147));
        let h = pasch_free_host(3).unwrap();
        assert_eq!((h.n(), h.edge_count()), (39, 676));
        assert!(pasch_free_host(4).is_err());
        assert!(pasch_free_host(5).is_err());
    }
}
