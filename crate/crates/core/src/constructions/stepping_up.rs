//! Stepping-up: an r-uniform coloring φ on `n` vertices becomes an
//! (r+1)-uniform coloring ψ on `2^n` vertices.
//!
//! Vertex `u` is read as an n-bit string whose coordinate 1 is the most
//! significant bit, so string order is integer order. For `u < v`,
//! `f(uv)` is the first coordinate where they differ. For
//! `u_1 < ... < u_{r+1}` put `f_i = f(u_i u_{i+1})`; consecutive values
//! differ, and
//!
//! * increasing `f`: color `(φ(f_1..f_r), 1)`, encoded `c`
//! * decreasing `f`: color `(φ(f_1..f_r), 2)`, encoded `k + c`
//! * first rise then fall, peak at `i`: `(i, 3)`, encoded `2k + (i-2)`
//! * first fall then rise, valley at `i`: `(i, 4)`, encoded `2k + (r-2) + (i-2)`
//!
//! for `2 <= i <= r-1`, giving `2k + 2r - 4` color slots. If φ has no
//! monochromatic `K_{r+1}^r` then ψ has no monochromatic `K_{r+2}^{r+1}`.

use crate::coloring::Coloring;
use crate::combinatorics::binomial;
use crate::error::{Error, Result};

/// Largest edge count the materialized output may have.
const MAX_OUTPUT_EDGES: u64 = 1 << 25;

#[derive(Debug, Clone)]
pub struct SteppingUpInput {
    pub phi: Coloring,
}

/// Largest `n` for which an r-uniform input is accepted by [`stepping_up`]:
/// the output has at most 2^25 edges (9 for r = 2, 7 for r = 3).
pub fn default_bit_cap(r: usize) -> usize {
    let mut n = r;
    while n < 31 && binomial(1u64 << (n + 1), r as u64 + 1) <= MAX_OUTPUT_EDGES {
        n += 1;
    }
    n
}

pub fn stepping_up_color_count(r: usize, k: u16) -> u32 {
    2 * k as u32 + 2 * r as u32 - 4
}

// 0-based coordinate (from the most significant bit) of the first difference.
#[inline]
fn first_difference(u: u32, v: u32, bits: usize) -> u32 {
    let msb = 31 - (u ^ v).leading_zeros();
    (bits as u32 - 1) - msb
}

/// Color of one (r+1)-subset of `[0, 2^n)` (strictly increasing) under ψ.
pub fn stepping_up_color(phi: &Coloring, vertices: &[u32]) -> u16 {
    let r = phi.r();
    let k = phi.k();
    debug_assert_eq!(vertices.len(), r + 1);
    let f: Vec<u32> = vertices
        .windows(2)
        .map(|w| first_difference(w[0], w[1], phi.n()))
        .collect();
    debug_assert!(f.windows(2).all(|w| w[0] != w[1]));
    if f[0] < f[1] {
        match (1..r - 1).find(|&i| f[i] > f[i + 1]) {
            None => phi.get(&f).expect("total coloring"),
            // 0-based turning index i is the 1-based peak i+1.
            Some(i) => 2 * k + (i as u16 - 1),
        }
    } else {
        match (1..r - 1).find(|&i| f[i] < f[i + 1]) {
            None => {
                let mut sorted = f.clone();
                sorted.reverse();
                k + phi.get(&sorted).expect("total coloring")
            }
            Some(i) => 2 * k + (r as u16 - 2) + (i as u16 - 1),
        }
    }
}

/// ψ with the default host-size cap.
pub fn stepping_up(input: &SteppingUpInput) -> Result<Coloring> {
    stepping_up_with_cap(input, default_bit_cap(input.phi.r()))
}

pub fn stepping_up_with_cap(input: &SteppingUpInput, max_bits: usize) -> Result<Coloring> {
    let phi = &input.phi;
    let (r, n) = (phi.r(), phi.n());
    if r < 2 || n < r {
        return Err(Error::InvalidParams(format!(
            "stepping-up needs n >= r >= 2 (got n={n}, r={r})"
        )));
    }
    phi.require_total()?;
    if n > max_bits || n > 31 {
        return Err(Error::HostTooLarge(format!(
            "2^{n} vertices exceeds the cap 2^{max_bits} for r={r}"
        )));
    }
    let colors = stepping_up_color_count(r, phi.k());
    if colors >= u16::MAX as u32 {
        return Err(Error::InvalidParams(format!("{colors} colors is too many")));
    }
    Coloring::from_fn(r + 1, 1usize << n, colors as u16, |s| {
        stepping_up_color(phi, s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::two_pentagon_coloring;

    #[test]
    fn caps() {
        assert_eq!(default_bit_cap(2), 9);
        assert_eq!(default_bit_cap(3), 7);
    }

    #[test]
    fn two_bit_example() {
        let phi = Coloring::from_fn(2, 2, 1, |_| 0).unwrap();
        let psi = stepping_up(&SteppingUpInput { phi }).unwrap();
        assert_eq!((psi.r(), psi.n(), psi.k()), (3, 4, 2));
        assert_eq!(psi.get(&[0, 1, 2]), Some(1));
        assert_eq!(psi.get(&[0, 1, 3]), Some(1));
        assert_eq!(psi.get(&[0, 2, 3]), Some(0));
        assert_eq!(psi.get(&[1, 2, 3]), Some(0));
    }

    #[test]
    fn hypothesis_failure_still_produces() {
        let phi = Coloring::from_fn(2, 3, 1, |_| 0).unwrap();
        let psi = stepping_up(&SteppingUpInput { phi }).unwrap();
        assert_eq!(psi.n(), 8);
        assert!(psi.is_total());
    }

    #[test]
    fn rejects_partial_and_oversized() {
        let phi = Coloring::unassigned(2, 4, 2).unwrap();
        assert!(stepping_up(&SteppingUpInput { phi }).is_err());
        let phi = Coloring::from_fn(2, 10, 2, |_| 0).unwrap();
        assert!(matches!(
            stepping_up(&SteppingUpInput { phi }),
            Err(Error::HostTooLarge(_))
        ));
        let phi = two_pentagon_coloring();
        assert!(stepping_up_with_cap(&SteppingUpInput { phi }, 4).is_err());
    }

    #[test]
    fn r3_uses_turning_colors() {
        // k = 1 on K_4^3; vertices are 4-bit strings.
        let phi = Coloring::from_fn(3, 4, 1, |_| 0).unwrap();
        let psi = stepping_up(&SteppingUpInput { phi }).unwrap();
        assert_eq!(psi.k(), 4);
        // 0000 < 0001 < 0010 < 0100: f = (4,3,2) 1-based, decreasing.
        assert_eq!(psi.get(&[0, 1, 2, 4]), Some(1));
        // 0000 < 0100 < 0110 < 0111: f = (2,3,4), increasing.
        assert_eq!(psi.get(&[0, 4, 6, 7]), Some(0));
        // 0000 < 0100 < 0110 < 1000: f = (2,3,1), peak at 2.
        assert_eq!(psi.get(&[0, 4, 6, 8]), Some(2));
        // 0000 < 0001 < 0100 < 0110: f = (4,2,3), valley at 2.
        assert_eq!(psi.get(&[0, 1, 4, 6]), Some(3));
    }
}
