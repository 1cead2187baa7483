//! Double coverings from two cooperative colorings.

use crate::coloring::cooperative_color;
use crate::error::Error;
use crate::matroid::Matroid;
use crate::set::Subset;

/// For `2k` matroids, each `k`-colorable, returns sets `A_1, …, A_{2k}` with
/// `A_i` independent in `M_i` and every element covered exactly twice.
///
/// Built by splitting the system in half and cooperatively coloring each
/// half; each coloring covers every element once. Infeasibility (some
/// chromatic number above `k`) surfaces as [`Error::Infeasible`] with a
/// certificate.
pub fn two_covering(matroids: &[Matroid]) -> Result<Vec<Subset>, Error> {
    if matroids.is_empty() || !matroids.len().is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "a 2-covering needs an even, positive number of matroids, got {}",
            matroids.len()
        )));
    }
    let k = matroids.len() / 2;
    let first = cooperative_color(&matroids[..k])?;
    let second = cooperative_color(&matroids[k..])?;
    let mut parts: Vec<Subset> = (1..=k).map(|i| first.class(i)).collect();
    parts.extend((1..=k).map(|i| second.class(i)));
    Ok(parts)
}
