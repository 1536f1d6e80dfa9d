use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// Lifts a triangle-free-in-each-color pair coloring with k colors to a
/// 4k-coloring of triples with no monochromatic `K43e`.
///
/// For `i < j < l` with pair colors `a = φ(ij)`, `b = φ(il)`, `c = φ(jl)`:
/// a rainbow triple gets `(0, c)`; otherwise two equal pairs form a path
/// with center i, j or l (type 1, 2, 3) and the triple gets
/// `(type, color of the third pair)`. `(t, x)` is encoded as `t*k + x`.
pub fn k43e_from_graph(phi: &Coloring) -> Result<Coloring> {
    if phi.r() != 2 {
        return Err(Error::UniformityMismatch {
            expected: 2,
            found: phi.r(),
        });
    }
    phi.require_total()?;
    let k = phi.k();
    if (k as u32) * 4 >= u16::MAX as u32 {
        return Err(Error::InvalidParams(format!("{k} colors is too many")));
    }
    let mut error = None;
    let psi = Coloring::from_fn(3, phi.n(), 4 * k, |t| {
        let (i, j, l) = (t[0], t[1], t[2]);
        let a = phi.get(&[i, j]).unwrap();
        let b = phi.get(&[i, l]).unwrap();
        let c = phi.get(&[j, l]).unwrap();
        let (ty, x) = if a == b && b == c {
            error.get_or_insert(Error::Precondition(format!(
                "monochromatic triangle {{{i},{j},{l}}} in color {a}"
            )));
            (0, 0)
        } else if a == b {
            (1, c)
        } else if a == c {
            (2, b)
        } else if b == c {
            (3, a)
        } else {
            (0, c)
        };
        ty * k + x
    })?;
    match error {
        Some(e) => Err(e),
        None => Ok(psi),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::two_pentagon_coloring;
    use crate::embed::find_mono_copy;
    use crate::pattern::Pattern;

    #[test]
    fn rainbow_triangle() {
        let phi = Coloring::from_colors(2, 3, 3, vec![0, 1, 2]).unwrap();
        // colex order of pairs: 01, 02, 12
        let psi = k43e_from_graph(&phi).unwrap();
        assert_eq!(psi.get(&[0, 1, 2]), Some(2));
        assert_eq!(psi.k(), 12);
    }

    #[test]
    fn path_centered_at_smallest() {
        let phi = Coloring::from_colors(2, 3, 2, vec![0, 0, 1]).unwrap();
        let psi = k43e_from_graph(&phi).unwrap();
        assert_eq!(psi.get(&[0, 1, 2]), Some(3));
    }

    #[test]
    fn rejects_monochromatic_triangle() {
        let phi = Coloring::from_colors(2, 3, 2, vec![1, 1, 1]).unwrap();
        assert!(matches!(k43e_from_graph(&phi), Err(Error::Precondition(_))));
    }

    #[test]
    fn pentagons_lift() {
        let psi = k43e_from_graph(&two_pentagon_coloring()).unwrap();
        assert_eq!(psi.k(), 8);
        assert_eq!(
            find_mono_copy(&psi, &Pattern::parse("K43e").unwrap()).unwrap(),
            None
        );
    }
}
