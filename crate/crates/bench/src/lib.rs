//! Fixtures shared by the benchmarks.

use spacecross::crossing::{lift_to_sphere, SpatialDrawing};
use spacecross::generate::{disjoint_k6s, random_planar_drawing, rational_points};
use spacecross::geom::{Point3, Rational, Segment3};

/// `count` random quadruples of segments with rational endpoints.
pub fn segment_quadruples(count: usize, seed: u64) -> Vec<[Segment3; 4]> {
    let pts = rational_points(8 * count, 64, seed).expect("points");
    pts.chunks(8)
        .map(|c| std::array::from_fn(|i| Segment3::new(c[2 * i].clone(), c[2 * i + 1].clone()).expect("segment")))
        .collect()
}

/// Four lines around the z axis, each crossing it at a different height.
pub fn around_axis() -> [Segment3; 4] {
    let r = |v: i64| Rational::from_integer(v.into());
    let p = |x, y, z| Point3::new(r(x), r(y), r(z));
    [
        Segment3::new(p(-1, 0, 0), p(1, 0, 0)).unwrap(),
        Segment3::new(p(0, -1, 1), p(0, 1, 1)).unwrap(),
        Segment3::new(p(-1, -1, 2), p(1, 1, 2)).unwrap(),
        Segment3::new(p(-1, 1, 3), p(1, -1, 3)).unwrap(),
    ]
}

/// A lifted planar drawing of `copies` disjoint `K_6`s.
pub fn lifted_k6s(copies: usize, subdivision: usize) -> SpatialDrawing {
    let g = disjoint_k6s(copies);
    let planar = random_planar_drawing(&g, 7, 1000).expect("planar drawing");
    lift_to_sphere(&planar, subdivision).expect("lift")
}
