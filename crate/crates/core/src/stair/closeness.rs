//! Sampled closeness between segments and stair-paths on explicit grids.

use num_bigint::BigInt;

use super::grid::{close_to_piece, close_to_segment, BoxPoint, GridPoint, StretchedGrid};
use super::path::stair_path;

/// Checks that the point of `ab` at parameter `k/steps` is 1-close to
/// `σ(a, b)`, and that the point of `σ(a, b)` at the same fraction of its
/// pieces is 1-close to `ab`.
pub fn sample_closeness(g: &StretchedGrid, a: GridPoint, b: GridPoint, k: u64, steps: u64) -> (bool, bool) {
    let (pa, pb) = (g.point(a), g.point(b));
    let path = stair_path(&pa, &pb);
    let arr = |v: &Vec<BigInt>| -> [BigInt; 3] { [v[0].clone(), v[1].clone(), v[2].clone()] };
    let on_seg = BoxPoint::interpolate(&pa, &pb, k, steps);
    let forward = path.pieces.is_empty()
        || path.pieces.iter().any(|p| close_to_piece(g, &on_seg, &arr(&p.from), &arr(&p.to)));
    let backward = if path.pieces.is_empty() {
        close_to_segment(g, &BoxPoint::from_ints(pa.clone()), &pa, &pb)
    } else {
        // Spread the parameter evenly over the pieces.
        let np = path.pieces.len() as u64;
        let scaled = k * np;
        let (i, local) = ((scaled / steps).min(np - 1), scaled - (scaled / steps).min(np - 1) * steps);
        let piece = &path.pieces[i as usize];
        let q = BoxPoint::interpolate(&arr(&piece.from), &arr(&piece.to), local, steps);
        close_to_segment(g, &q, &pa, &pb)
    };
    (forward, backward)
}
