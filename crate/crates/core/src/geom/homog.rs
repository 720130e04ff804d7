//! Four-segment transversals in integer homogeneous coordinates.
//!
//! Lines meeting four lines form the intersection of a 2-dimensional null
//! space of the incidence rows with the Klein quadric. Working with integer
//! Plücker vectors avoids rational normalization entirely; only the final
//! witness is converted to rational form.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::plucker::PluckerLine;
use super::scalar::{QuadExt, Rational};
use super::vector::{Point3, Segment3, Vec3};

type I6 = [BigInt; 6];

/// Point `x / w` with `w > 0`.
struct HPoint {
    x: [BigInt; 3],
    w: BigInt,
}

impl HPoint {
    fn from_point(p: &Point3) -> HPoint {
        let c = p.coords();
        let w = c.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let x = c.map(|r| r.numer() * (&w / r.denom()));
        HPoint { x, w }
    }

    /// The point shifted by one unit along axis `k`.
    fn shifted(&self, k: usize) -> HPoint {
        let mut x = self.x.clone();
        x[k] += &self.w;
        HPoint { x, w: self.w.clone() }
    }
}

fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Plücker vector `(d, m)` of the line from `a` to `b`, up to a positive factor.
fn join(a: &HPoint, b: &HPoint) -> I6 {
    let m = cross(&a.x, &b.x);
    let d: Vec<BigInt> = (0..3).map(|i| &a.w * &b.x[i] - &b.w * &a.x[i]).collect();
    [d[0].clone(), d[1].clone(), d[2].clone(), m[0].clone(), m[1].clone(), m[2].clone()]
}

/// Reciprocal product `d_a · m_b + d_b · m_a`.
fn side(a: &I6, b: &I6) -> BigInt {
    (0..3).map(|i| &a[i] * &b[i + 3] + &b[i] * &a[i + 3]).sum()
}

fn det4(m: &[[&BigInt; 4]; 4]) -> BigInt {
    let mut total = BigInt::zero();
    // Laplace expansion along the first row over 3×3 minors.
    for c in 0..4 {
        let cols: Vec<usize> = (0..4).filter(|&j| j != c).collect();
        let e = |r: usize, k: usize| m[r][cols[k]];
        let minor = e(1, 0) * (e(2, 1) * e(3, 2) - e(2, 2) * e(3, 1))
            - e(1, 1) * (e(2, 0) * e(3, 2) - e(2, 2) * e(3, 0))
            + e(1, 2) * (e(2, 0) * e(3, 1) - e(2, 1) * e(3, 0));
        let term = m[0][c] * minor;
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Basis of the null space of a rank-4 matrix of 4 rows and 6 columns.
fn null_space(rows: &[I6; 4]) -> Option<[I6; 2]> {
    for a in 0..6 {
        for b in (a + 1)..6 {
            let piv: Vec<usize> = (0..6).filter(|&c| c != a && c != b).collect();
            let sub = |cols: &[usize]| -> BigInt {
                let m: [[&BigInt; 4]; 4] = std::array::from_fn(|r| std::array::from_fn(|k| &rows[r][cols[k]]));
                det4(&m)
            };
            let det = sub(&piv);
            if det.is_zero() {
                continue;
            }
            // Cramer: x_free = det, x_piv[j] = -det(with column j replaced by the free column).
            let vec_for = |free: usize| -> I6 {
                let mut x: I6 = Default::default();
                x[free] = det.clone();
                for j in 0..4 {
                    let mut cols = piv.clone();
                    cols[j] = free;
                    x[piv[j]] = -sub(&cols);
                }
                x
            };
            return Some([vec_for(a), vec_for(b)]);
        }
    }
    None
}

/// Sign of `u + v √d` for `d ≥ 0`.
fn sign_sqrt(u: &BigInt, v: &BigInt, d: &BigInt) -> i8 {
    let su = sgn(u);
    let sv = sgn(v);
    if sv == 0 || d.is_zero() {
        return su;
    }
    if su == 0 || su == sv {
        return sv;
    }
    match (u * u).cmp(&(v * v * d)) {
        std::cmp::Ordering::Greater => su,
        std::cmp::Ordering::Less => sv,
        std::cmp::Ordering::Equal => 0,
    }
}

fn sgn(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// A line `u + v √d` in Plücker space.
struct QLine {
    u: I6,
    v: I6,
    d: BigInt,
}

impl QLine {
    fn side_sign(&self, l: &I6) -> i8 {
        sign_sqrt(&side(&self.u, l), &side(&self.v, l), &self.d)
    }

    fn side_value(&self, l: &I6) -> QuadExt {
        quad(&side(&self.u, l), &side(&self.v, l), &self.d)
    }

    /// Axis used to probe the segment from `p`, with the two probe values.
    fn probe(&self, p: &HPoint, q: &HPoint) -> Option<(usize, i8, i8)> {
        (0..3).find_map(|k| {
            let r = p.shifted(k);
            let sp = self.side_sign(&join(&r, p));
            let sq = self.side_sign(&join(&r, q));
            (sp != 0 || sq != 0).then_some((k, sp, sq))
        })
    }

    /// Whether the line meets the closed segment `pq`, given it is coplanar with it.
    fn hits(&self, p: &HPoint, q: &HPoint) -> bool {
        match self.probe(p, q) {
            // Through both endpoints.
            None => true,
            Some((_, sp, sq)) => sp * sq <= 0,
        }
    }

    /// Parameter of the meeting point along `pq`.
    fn param(&self, p: &HPoint, q: &HPoint) -> QuadExt {
        let Some((k, _, _)) = self.probe(p, q) else {
            return QuadExt::rational(Rational::zero());
        };
        let r = p.shifted(k);
        // Undo the positive scaling of `join` so the probe is affine in the point.
        let fp = self.side_value(&join(&r, p)) / QuadExt::rational(Rational::from_integer(&p.w * &p.w));
        let fq = self.side_value(&join(&r, q)) / QuadExt::rational(Rational::from_integer(&p.w * &q.w));
        fp.clone() / (fp - fq)
    }

    fn to_plucker(&self) -> Option<PluckerLine<QuadExt>> {
        let c = |i: usize| quad(&self.u[i], &self.v[i], &self.d);
        PluckerLine::from_coords(Vec3::new(c(0), c(1), c(2)), Vec3::new(c(3), c(4), c(5))).ok()
    }
}

fn quad(u: &BigInt, v: &BigInt, d: &BigInt) -> QuadExt {
    let r = |x: &BigInt| Rational::from_integer(x.clone());
    if v.is_zero() || d.is_zero() {
        QuadExt::rational(r(u))
    } else {
        QuadExt::new(r(u), r(v), r(d)).expect("nonnegative radicand")
    }
}

fn lin(a: &BigInt, x: &I6, b: &BigInt, y: &I6) -> I6 {
    std::array::from_fn(|i| a * &x[i] + b * &y[i])
}

/// Outcome of the integer route.
pub(crate) enum Route {
    /// The transversal set of the supporting lines is finite; this is the answer.
    Decided(Option<(PluckerLine<QuadExt>, Vec<QuadExt>)>),
    /// Rank-deficient incidence or a full pencil of transversals.
    Degenerate,
}

/// Decides the four-segment transversal problem when the supporting lines
/// have finitely many common transversals.
pub(crate) fn four_segments(segs: &[Segment3]) -> Route {
    let pts: Vec<(HPoint, HPoint)> = segs
        .iter()
        .map(|s| (HPoint::from_point(&s.p), HPoint::from_point(&s.q)))
        .collect();
    let lines: Vec<I6> = pts.iter().map(|(p, q)| join(p, q)).collect();
    // X meets L iff d_X · m_L + m_X · d_L = 0.
    let rows: [I6; 4] = std::array::from_fn(|i| {
        let l = &lines[i];
        [l[3].clone(), l[4].clone(), l[5].clone(), l[0].clone(), l[1].clone(), l[2].clone()]
    });
    let Some([a, b]) = null_space(&rows) else {
        return Route::Degenerate;
    };
    let k = |x: &I6, y: &I6| -> BigInt { (0..3).map(|i| &x[i] * &y[i + 3]).sum() };
    let qa = k(&a, &a);
    let qb = k(&a, &b) + k(&b, &a);
    let qc = k(&b, &b);
    if qa.is_zero() && qb.is_zero() && qc.is_zero() {
        return Route::Degenerate;
    }
    let zero = BigInt::zero();
    let one = BigInt::one();
    let mut cands: Vec<QLine> = Vec::new();
    if qa.is_zero() {
        // β (qb α + qc β) = 0.
        cands.push(QLine { u: a.clone(), v: Default::default(), d: zero.clone() });
        if !qb.is_zero() {
            cands.push(QLine { u: lin(&-&qc, &a, &qb, &b), v: Default::default(), d: zero.clone() });
        }
    } else {
        let disc = &qb * &qb - BigInt::from(4) * &qa * &qc;
        if disc.is_negative() {
            return Route::Decided(None);
        }
        let two_qa = BigInt::from(2) * &qa;
        let root = disc.sqrt();
        if &root * &root == disc {
            for r in [&root, &-&root] {
                cands.push(QLine { u: lin(&(-&qb + r), &a, &two_qa, &b), v: Default::default(), d: zero.clone() });
            }
        } else {
            let base = lin(&-&qb, &a, &two_qa, &b);
            for s in [&one, &-&one] {
                cands.push(QLine { u: base.clone(), v: lin(s, &a, &zero, &b), d: disc.clone() });
            }
        }
    }
    for c in &cands {
        if pts.iter().all(|(p, q)| c.hits(p, q)) {
            if let Some(line) = c.to_plucker() {
                let params = pts.iter().map(|(p, q)| c.param(p, q)).collect();
                return Route::Decided(Some((line, params)));
            }
        }
    }
    Route::Decided(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::transversal::verify_witness;

    fn seg(a: [i64; 3], b: [i64; 3]) -> Segment3 {
        Segment3::new(Point3::from_ints(a[0], a[1], a[2]), Point3::from_ints(b[0], b[1], b[2])).unwrap()
    }

    #[test]
    fn axis_found_with_params() {
        let mk = |c: i64, s: i64, z: i64| seg([c, s, z], [-c, -s, z]);
        let segs = [mk(1, 0, 1), mk(0, 1, 2), mk(1, 1, 3), mk(2, -1, 4)];
        match four_segments(&segs) {
            Route::Decided(Some((line, params))) => {
                assert!(verify_witness(&line, &segs));
                let half = QuadExt::rational(crate::geom::scalar::rat(1, 2));
                assert!(params.iter().all(|p| *p == half));
            }
            _ => panic!("expected a witness"),
        }
    }

    #[test]
    fn coplanar_input_is_degenerate() {
        let segs = [seg([0, 0, 0], [0, 1, 0]), seg([1, 0, 0], [1, 1, 0]), seg([2, 0, 0], [2, 1, 0]), seg([3, 0, 0], [3, 1, 0])];
        assert!(matches!(four_segments(&segs), Route::Degenerate));
    }
}
