//! Exact planar predicates on rational points.

use num_traits::Zero;

use super::scalar::{sign_of, Rational};

pub type Point2 = [Rational; 2];

/// Sign of the signed area of `(a, b, c)`: +1 counter-clockwise.
pub fn orient2d(a: &Point2, b: &Point2, c: &Point2) -> i8 {
    let det = (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0]);
    sign_of(&det)
}

fn on_box(a: &Point2, b: &Point2, p: &Point2) -> bool {
    (0..2).all(|i| {
        let (lo, hi) = if a[i] <= b[i] { (&a[i], &b[i]) } else { (&b[i], &a[i]) };
        lo <= &p[i] && &p[i] <= hi
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentRelation {
    Disjoint,
    /// Interiors meet transversally at a single point.
    Crossing,
    /// Any other contact: shared endpoint, endpoint on the other segment, overlap.
    Touching,
}

/// Exact relation of the closed segments `ab` and `cd`.
pub fn segments_intersect_2d(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> SegmentRelation {
    let o1 = orient2d(a, b, c);
    let o2 = orient2d(a, b, d);
    let o3 = orient2d(c, d, a);
    let o4 = orient2d(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return SegmentRelation::Crossing;
    }
    if (o1 == 0 && on_box(a, b, c))
        || (o2 == 0 && on_box(a, b, d))
        || (o3 == 0 && on_box(c, d, a))
        || (o4 == 0 && on_box(c, d, b))
    {
        SegmentRelation::Touching
    } else {
        SegmentRelation::Disjoint
    }
}

/// Intersection point of two properly crossing segments, if they cross at a single point.
pub fn crossing_point(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> Option<Point2> {
    let r = [&b[0] - &a[0], &b[1] - &a[1]];
    let s = [&d[0] - &c[0], &d[1] - &c[1]];
    let den = &r[0] * &s[1] - &r[1] * &s[0];
    if den.is_zero() {
        return None;
    }
    let qp = [&c[0] - &a[0], &c[1] - &a[1]];
    let t = (&qp[0] * &s[1] - &qp[1] * &s[0]) / &den;
    let u = (&qp[0] * &r[1] - &qp[1] * &r[0]) / &den;
    let zero = Rational::zero();
    let one = Rational::from_integer(1.into());
    if t < zero || t > one || u < zero || u > one {
        return None;
    }
    Some([&a[0] + &r[0] * &t, &a[1] + &r[1] * &t])
}
