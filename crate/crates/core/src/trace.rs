use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// Pair coloring on the other `n-1` vertices (relabeled in order) with
/// `c'(ij) = c(ijv)`.
pub fn trace(c: &Coloring, v: u32) -> Result<Coloring> {
    if c.r() != 3 {
        return Err(Error::UniformityMismatch {
            expected: 3,
            found: c.r(),
        });
    }
    c.require_total()?;
    if v as usize >= c.n() {
        return Err(Error::InvalidParams(format!(
            "vertex {v} outside [0,{})",
            c.n()
        )));
    }
    let lift = |x: u32| if x >= v { x + 1 } else { x };
    Coloring::from_fn(2, c.n() - 1, c.k(), |pair| {
        let mut t = [lift(pair[0]), lift(pair[1]), v];
        t.sort_unstable();
        c.get(&t).expect("total coloring")
    })
}
