//! Linking numbers by signed crossings in a generic projection.

use num_traits::Zero;

use super::cycle::PolygonalCycle;
use crate::error::{Error, Result};
use crate::geom::planar::{crossing_point, orient2d, segments_intersect_2d, Point2, SegmentRelation};
use crate::geom::scalar::{int, sign_of};
use crate::geom::{Point3, Rational, Segment3};

/// Directions `(1, t, t²)` tried before giving up.
const MAX_DIRECTIONS: i64 = 4096;

/// The `t`-th candidate projection direction.
pub fn direction(t: i64) -> Point3 {
    Point3::new(int(1), int(t), int(t * t))
}

struct Projection {
    u1: Point3,
    u2: Point3,
    v: Point3,
}

impl Projection {
    fn new(v: &Point3) -> Self {
        let axis = if v.coords()[0].is_zero() && v.coords()[1].is_zero() {
            Point3::from_ints(1, 0, 0)
        } else {
            Point3::from_ints(0, 0, 1)
        };
        let u1 = v.cross(&axis);
        let u2 = v.cross(&u1);
        Projection { u1, u2, v: v.clone() }
    }

    fn flat(&self, p: &Point3) -> Point2 {
        [p.dot(&self.u1), p.dot(&self.u2)]
    }

    fn depth(&self, p: &Point3) -> Rational {
        p.dot(&self.v)
    }
}

/// Linking number of two disjoint cycles.
pub fn linking_number(c1: &PolygonalCycle, c2: &PolygonalCycle) -> Result<i64> {
    if !c1.disjoint_from(c2) {
        return Err(Error::NotDisjoint("the two cycles intersect".into()));
    }
    for t in 1..=MAX_DIRECTIONS {
        if let Some(lk) = linking_number_along(c1, c2, &direction(t))? {
            return Ok(lk);
        }
    }
    Err(Error::RetryExhausted(MAX_DIRECTIONS as usize))
}

/// Linking number read off the projection along `v`, or `None` when the
/// projection is not generic. The cycles must be disjoint.
pub fn linking_number_along(c1: &PolygonalCycle, c2: &PolygonalCycle, v: &Point3) -> Result<Option<i64>> {
    if v.is_zero() {
        return Err(Error::DegenerateInput("zero projection direction".into()));
    }
    let pr = Projection::new(v);
    let s1 = c1.segments();
    let s2 = c2.segments();
    let all: Vec<&Segment3> = s1.iter().chain(s2.iter()).collect();
    let flat: Vec<[Point2; 2]> = all.iter().map(|s| [pr.flat(&s.p), pr.flat(&s.q)]).collect();
    // No segment projects to a point.
    if flat.iter().any(|f| f[0] == f[1]) {
        return Ok(None);
    }
    let verts: Vec<Point2> = c1.points().iter().chain(c2.points()).map(|p| pr.flat(p)).collect();
    for i in 0..verts.len() {
        for j in (i + 1)..verts.len() {
            if verts[i] == verts[j] {
                return Ok(None);
            }
        }
    }
    // No vertex projects onto a segment other than its own two.
    for p in &verts {
        for f in &flat {
            if f[0] != *p && f[1] != *p && orient2d(&f[0], &f[1], p) == 0 && on_segment(&f[0], &f[1], p) {
                return Ok(None);
            }
        }
    }
    let mut lk = 0i64;
    for (i, a) in s1.iter().enumerate() {
        for (j, b) in s2.iter().enumerate() {
            let (fa, fb) = (&flat[i], &flat[s1.len() + j]);
            match segments_intersect_2d(&fa[0], &fa[1], &fb[0], &fb[1]) {
                SegmentRelation::Disjoint => continue,
                SegmentRelation::Touching => return Ok(None),
                SegmentRelation::Crossing => {}
            }
            let x = crossing_point(&fa[0], &fa[1], &fb[0], &fb[1]).expect("proper crossing");
            // No third segment through the crossing.
            let through = flat
                .iter()
                .filter(|f| orient2d(&f[0], &f[1], &x) == 0 && on_segment(&f[0], &f[1], &x))
                .count();
            if through > 2 {
                return Ok(None);
            }
            let da = pr.depth(&lift(a, fa, &x));
            let db = pr.depth(&lift(b, fb, &x));
            let dir_a = [&fa[1][0] - &fa[0][0], &fa[1][1] - &fa[0][1]];
            let dir_b = [&fb[1][0] - &fb[0][0], &fb[1][1] - &fb[0][1]];
            let turn = sign_of(&(&dir_a[0] * &dir_b[1] - &dir_a[1] * &dir_b[0]));
            match sign_of(&(&da - &db)) {
                // c1 above c2.
                1 => lk += turn as i64,
                0 => return Err(Error::NotDisjoint("the two cycles intersect".into())),
                _ => {}
            }
        }
    }
    Ok(Some(lk))
}

fn on_segment(a: &Point2, b: &Point2, p: &Point2) -> bool {
    (0..2).all(|i| {
        let (lo, hi) = if a[i] <= b[i] { (&a[i], &b[i]) } else { (&b[i], &a[i]) };
        lo <= &p[i] && &p[i] <= hi
    })
}

/// Point of `s` whose projection is `x`.
fn lift(s: &Segment3, f: &[Point2; 2], x: &Point2) -> Point3 {
    let k = if f[0][0] != f[1][0] { 0 } else { 1 };
    let t = (&x[k] - &f[0][k]) / (&f[1][k] - &f[0][k]);
    s.point_at(&t)
}
