//! Exact line transversals to lines and to segments.
//!
//! Lines meeting four lines: when three of them are pairwise skew, the lines
//! meeting those three form a regulus, parametrized here by a point running
//! along the first line; incidence with the fourth line is a quadratic in that
//! parameter. Configurations with no skew triple split on a coplanar pair.
//!
//! Lines meeting segments: every transversal of `k` segments can be slid,
//! keeping it a transversal, until it is pinned by incidences. A pinned line is
//! a supporting line, passes through two endpoints, passes through one endpoint
//! and meets two supporting lines, or is an isolated transversal of all four
//! supporting lines. Testing that finite candidate set decides existence.

use num_traits::Zero;

use super::plucker::PluckerLine;
use super::scalar::{Field, QuadExt, Rational};
use super::vector::{Point3, Segment3, Vec3};
use crate::error::{Error, Result};

/// Affine line meeting all four inputs at finite points, or a 1-parameter family.
#[derive(Clone, Debug, PartialEq)]
pub enum Transversals {
    Finite(Vec<PluckerLine<QuadExt>>),
    Infinite,
}

impl Transversals {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Transversals::Infinite)
    }

    pub fn len(&self) -> Option<usize> {
        match self {
            Transversals::Finite(v) => Some(v.len()),
            Transversals::Infinite => None,
        }
    }
}

/// Point/direction form used internally.
#[derive(Clone, Debug)]
struct Line<T> {
    p: Vec3<T>,
    d: Vec3<T>,
}

impl<T: Field> Line<T> {
    fn to_plucker(&self) -> PluckerLine<T> {
        PluckerLine::through(&self.p, &self.d).expect("nonzero direction")
    }

    fn contains(&self, x: &Vec3<T>) -> bool {
        (x - &self.p).cross(&self.d).is_zero()
    }
}

impl Line<Rational> {
    fn from_plucker(l: &PluckerLine<Rational>) -> Self {
        Line {
            p: l.point(),
            d: l.direction().clone(),
        }
    }

    fn lift(&self) -> Line<QuadExt> {
        Line {
            p: self.p.lift(),
            d: self.d.lift(),
        }
    }
}

fn reciprocal(a: &Line<Rational>, b: &Line<Rational>) -> Rational {
    // (p_b - p_a) · (d_a × d_b) vanishes iff the lines are coplanar.
    (&b.p - &a.p).dot(&a.d.cross(&b.d))
}

fn parallel<T: Field>(a: &Vec3<T>, b: &Vec3<T>) -> bool {
    a.cross(b).is_zero()
}

/// Intersection of two coplanar, non-parallel lines.
fn intersect_coplanar(a: &Line<Rational>, b: &Line<Rational>) -> Point3 {
    let n = a.d.cross(&b.d);
    let s = (&b.p - &a.p).cross(&b.d).dot(&n) / n.norm2();
    &a.p + &a.d.scale(&s)
}

enum PlaneHit {
    Point(Point3),
    Parallel,
    Inside,
}

fn line_plane(l: &Line<Rational>, q: &Point3, n: &Point3) -> PlaneHit {
    let nd = n.dot(&l.d);
    let off = n.dot(&(q - &l.p));
    if nd.is_zero() {
        if off.is_zero() {
            PlaneHit::Inside
        } else {
            PlaneHit::Parallel
        }
    } else {
        PlaneHit::Point(&l.p + &l.d.scale(&(off / nd)))
    }
}

/// True when `t` meets `l` at a finite point (coplanar and not strictly parallel).
fn meets_finitely<T: Field>(t: &Line<T>, l: &Line<T>) -> bool {
    let cop = (&l.p - &t.p).dot(&t.d.cross(&l.d)).is_zero();
    if !cop {
        return false;
    }
    !parallel(&t.d, &l.d) || t.contains(&l.p)
}

// Polynomials in one variable with vector or scalar coefficients, lowest degree first.
type VPoly = Vec<Point3>;
type SPoly = Vec<Rational>;

fn vp_cross(a: &VPoly, b: &VPoly) -> VPoly {
    let mut out = vec![Point3::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &x.cross(y);
        }
    }
    out
}

fn vp_dot(a: &VPoly, b: &VPoly) -> SPoly {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x.dot(y);
        }
    }
    out
}

fn sp_add(a: &SPoly, b: &SPoly) -> SPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(Rational::zero)
                + b.get(i).cloned().unwrap_or_else(Rational::zero)
        })
        .collect()
}

/// Real roots of `c0 + c1 t + c2 t²` (not identically zero).
fn real_roots(c: &SPoly) -> Vec<QuadExt> {
    let get = |i: usize| c.get(i).cloned().unwrap_or_else(Rational::zero);
    let (c0, c1, c2) = (get(0), get(1), get(2));
    if c2.is_zero() {
        if c1.is_zero() {
            return vec![];
        }
        return vec![QuadExt::rational(-c0 / c1)];
    }
    let disc = &c1 * &c1 - Rational::from_integer(4.into()) * &c2 * &c0;
    let two_a = &c2 * Rational::from_integer(2.into());
    match super::scalar::sign_of(&disc) {
        -1 => vec![],
        0 => vec![QuadExt::rational(-c1 / two_a)],
        _ => {
            let base = -&c1 / &two_a;
            let coef = Rational::from_integer(1.into()) / &two_a;
            vec![
                QuadExt::new(base.clone(), coef.clone(), disc.clone()).expect("disc > 0"),
                QuadExt::new(base, -coef, disc).expect("disc > 0"),
            ]
        }
    }
}

/// A root of the incidence polynomial `omega`, lowest degree first.
struct Root {
    t: QuadExt,
    omega: SPoly,
}

impl Root {
    /// Value of a polynomial at the root, reducing modulo `omega` first so the
    /// irrational part is computed once.
    fn eval(&self, p: &SPoly) -> QuadExt {
        if let Some(t) = self.t.as_rational() {
            let mut acc = Rational::zero();
            for c in p.iter().rev() {
                acc = acc * t + c;
            }
            return QuadExt::rational(acc);
        }
        let mut c = p.clone();
        let (c0, c1, c2) = (&self.omega[0], &self.omega[1], &self.omega[2]);
        for k in (2..c.len()).rev() {
            let lead = std::mem::take(&mut c[k]);
            if lead.is_zero() {
                continue;
            }
            let q = lead / c2;
            c[k - 1] -= &q * c1;
            c[k - 2] -= &q * c0;
        }
        let get = |i: usize| c.get(i).cloned().unwrap_or_else(Rational::zero);
        QuadExt::rational(get(0)) + QuadExt::rational(get(1)) * self.t.clone()
    }

    fn eval_v(&self, p: &VPoly) -> Vec3<QuadExt> {
        let coord = |f: fn(&Point3) -> &Rational| -> SPoly { p.iter().map(|v| f(v).clone()).collect() };
        Vec3::new(
            self.eval(&coord(|v| &v.x)),
            self.eval(&coord(|v| &v.y)),
            self.eval(&coord(|v| &v.z)),
        )
    }
}

/// An isolated transversal candidate.
enum Cand {
    Rat(Line<Rational>),
    /// The line through `pt(t)` with direction `dir(t)` at a root `t`.
    Regulus { pt: VPoly, dir: VPoly, root: Root },
}

impl Cand {
    fn line(&self) -> Line<QuadExt> {
        match self {
            Cand::Rat(l) => l.lift(),
            Cand::Regulus { pt, dir, root } => Line {
                p: root.eval_v(pt),
                d: root.eval_v(dir),
            },
        }
    }

    /// `(a - P) × D` and `w × D` for the line `a + s w`, evaluated at the candidate.
    fn incidence(&self, a: &Point3, w: &Point3) -> (Vec3<QuadExt>, Vec3<QuadExt>) {
        match self {
            Cand::Rat(l) => {
                let ad = (a - &l.p).cross(&l.d);
                let wd = w.cross(&l.d);
                (ad.lift(), wd.lift())
            }
            Cand::Regulus { pt, dir, root } => {
                let rel: VPoly = vec![a - &pt[0], -&pt[1]];
                (root.eval_v(&vp_cross(&rel, dir)), root.eval_v(&vp_cross(&vec![w.clone()], dir)))
            }
        }
    }

    fn hit(&self, a: &Point3, w: &Point3) -> Option<QuadExt> {
        let (ad, wd) = self.incidence(a, w);
        hit_from_incidence(ad, wd)
    }

    /// Meets the full line `l` at a finite point.
    fn meets(&self, l: &Line<Rational>) -> bool {
        let (ad, wd) = self.incidence(&l.p, &l.d);
        if wd.is_zero() {
            return ad.is_zero();
        }
        // Coplanar iff ad and wd are parallel.
        ad.cross(&wd).is_zero()
    }
}

struct RawTransversals {
    isolated: Vec<Cand>,
    infinite: bool,
}

fn push_unique(out: &mut Vec<Cand>, l: Line<Rational>) {
    let pl = l.to_plucker();
    let dup = out.iter().any(|o| match o {
        Cand::Rat(o) => o.to_plucker().same_line(&pl),
        Cand::Regulus { .. } => false,
    });
    if !dup {
        out.push(Cand::Rat(l));
    }
}

/// Lines through the point on `l1` at parameter `t` meeting `l2` and `l3`,
/// with `l1, l2, l3` pairwise skew, intersected with the incidence condition of `l4`.
fn regulus_case(l1: &Line<Rational>, l2: &Line<Rational>, l3: &Line<Rational>, l4: &Line<Rational>) -> RawTransversals {
    let pt: VPoly = vec![l1.p.clone(), l1.d.clone()];
    // n_i(t) = d_i × (P(t) - p_i), normal of the plane spanned by P(t) and line i.
    let normal = |li: &Line<Rational>| -> VPoly {
        vec![li.d.cross(&(&l1.p - &li.p)), li.d.cross(&l1.d)]
    };
    let dir = vp_cross(&normal(l2), &normal(l3));
    let moment = vp_cross(&pt, &dir);
    let m4 = l4.p.cross(&l4.d);
    let mut omega = sp_add(
        &vp_dot(&dir, &vec![m4]),
        &vp_dot(&vec![l4.d.clone()], &moment),
    );
    debug_assert!(omega.get(3).is_none_or(|c| c.is_zero()));
    omega.truncate(3);
    if omega.iter().all(|c| c.is_zero()) {
        return RawTransversals {
            isolated: vec![],
            infinite: true,
        };
    }
    let mut isolated = Vec::new();
    for t in real_roots(&omega) {
        let cand = Cand::Regulus {
            pt: pt.clone(),
            dir: dir.clone(),
            root: Root { t, omega: omega.clone() },
        };
        if let Cand::Regulus { dir, root, .. } = &cand {
            if root.eval_v(dir).is_zero() {
                continue;
            }
        }
        if [l1, l2, l3, l4].iter().all(|l| cand.meets(l)) {
            isolated.push(cand);
        }
    }
    RawTransversals {
        isolated,
        infinite: false,
    }
}

/// Some pair among the lines is coplanar; every transversal of the pair passes
/// through their common point or lies in their common plane.
fn coplanar_pair_case(ls: &[Line<Rational>; 4], a: usize, b: usize) -> RawTransversals {
    let (la, lb) = (&ls[a], &ls[b]);
    let rest: Vec<&Line<Rational>> = (0..4).filter(|&i| i != a && i != b).map(|i| &ls[i]).collect();
    let (lc, ld) = (rest[0], rest[1]);
    let all = |cand: &Line<Rational>| ls.iter().all(|l| meets_finitely(cand, l));
    let mut out = RawTransversals {
        isolated: vec![],
        infinite: false,
    };

    if parallel(&la.d, &lb.d) && la.contains(&lb.p) {
        // Same line twice: transversals of three lines.
        out.infinite = true;
        return out;
    }

    // Lines through the common point.
    if !parallel(&la.d, &lb.d) {
        let x = intersect_coplanar(la, lb);
        if lc.contains(&x) || ld.contains(&x) {
            out.infinite = true;
        } else {
            let nc = lc.d.cross(&(&x - &lc.p));
            let nd = ld.d.cross(&(&x - &ld.p));
            let dir = nc.cross(&nd);
            if dir.is_zero() {
                out.infinite = true;
            } else {
                let cand = Line { p: x, d: dir };
                if all(&cand) {
                    push_unique(&mut out.isolated, cand);
                }
            }
        }
    }

    // Lines inside the common plane.
    let q = la.p.clone();
    let n = if parallel(&la.d, &lb.d) {
        la.d.cross(&(&lb.p - &la.p))
    } else {
        la.d.cross(&lb.d)
    };
    let hc = line_plane(lc, &q, &n);
    let hd = line_plane(ld, &q, &n);
    match (hc, hd) {
        (PlaneHit::Parallel, _) | (_, PlaneHit::Parallel) => {}
        (PlaneHit::Inside, _) | (_, PlaneHit::Inside) => out.infinite = true,
        (PlaneHit::Point(yc), PlaneHit::Point(yd)) => {
            if yc == yd {
                out.infinite = true;
            } else {
                let cand = Line {
                    d: &yd - &yc,
                    p: yc,
                };
                if all(&cand) {
                    push_unique(&mut out.isolated, cand);
                }
            }
        }
    }
    out
}

fn raw_transversals(ls: &[Line<Rational>; 4]) -> RawTransversals {
    let skew = |i: usize, j: usize| !reciprocal(&ls[i], &ls[j]).is_zero();
    for omit in (0..4).rev() {
        let tri: Vec<usize> = (0..4).filter(|&i| i != omit).collect();
        if skew(tri[0], tri[1]) && skew(tri[0], tri[2]) && skew(tri[1], tri[2]) {
            return regulus_case(&ls[tri[0]], &ls[tri[1]], &ls[tri[2]], &ls[omit]);
        }
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if !skew(i, j) {
                return coplanar_pair_case(ls, i, j);
            }
        }
    }
    unreachable!("four lines with no skew triple have a coplanar pair")
}

/// All lines meeting four given lines at finite points.
///
/// Returns [`Transversals::Infinite`] whenever the solution set contains a
/// one-parameter family (e.g. four lines of one ruling of a hyperboloid).
pub fn transversals_of_4_lines(lines: &[PluckerLine<Rational>; 4]) -> Transversals {
    let ls = lines.each_ref().map(Line::from_plucker);
    let raw = raw_transversals(&ls);
    if raw.infinite {
        Transversals::Infinite
    } else {
        Transversals::Finite(raw.isolated.iter().map(|c| c.line().to_plucker()).collect())
    }
}

/// A certified line through every segment, with the parameter of a meeting
/// point along each segment (`p + s (q - p)`, `0 ≤ s ≤ 1`).
#[derive(Clone, Debug, PartialEq)]
pub struct TransversalWitness {
    pub line: PluckerLine<QuadExt>,
    pub params: Vec<QuadExt>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransversalSearch {
    pub exists: bool,
    pub witness: Option<TransversalWitness>,
}

/// Parameter where the line `(p, d)` meets the closed segment `a + s w`, if any.
fn segment_hit<T: Field>(p: &Vec3<T>, d: &Vec3<T>, a: &Vec3<T>, w: &Vec3<T>) -> Option<T> {
    hit_from_incidence((a - p).cross(d), w.cross(d))
}

/// Segment parameter from `ad = (a - P) × D` and `wd = w × D`.
fn hit_from_incidence<T: Field>(ad: Vec3<T>, wd: Vec3<T>) -> Option<T> {
    if wd.is_zero() {
        // Parallel: hit iff the segment lies on the line.
        return ad.is_zero().then(T::zero);
    }
    // Coplanarity: ad must be parallel to wd.
    if !ad.cross(&wd).is_zero() {
        return None;
    }
    let (num, den) = [(ad.x, wd.x), (ad.y, wd.y), (ad.z, wd.z)]
        .into_iter()
        .find(|(_, den)| !den.is_zero())
        .expect("nonzero component");
    // s = -num/den lies in [0, 1] iff num·den ≤ 0 and (num + den)·den ≥ 0.
    let sd = den.sign();
    if num.sign() * sd > 0 || (num.clone() + den.clone()).sign() * sd < 0 {
        return None;
    }
    Some(-num / den)
}

fn check_line<T: Field>(p: &Vec3<T>, d: &Vec3<T>, segs: &[(Vec3<T>, Vec3<T>)]) -> Option<Vec<T>> {
    segs.iter().map(|(a, w)| segment_hit(p, d, a, w)).collect()
}

/// Lines pinned by endpoint incidences: supporting lines, lines through two
/// endpoints, and lines through an endpoint meeting two supporting lines.
fn endpoint_candidates(segs: &[Segment3]) -> Vec<Line<Rational>> {
    let k = segs.len();
    let lines: Vec<Line<Rational>> = segs
        .iter()
        .map(|s| Line {
            p: s.p.clone(),
            d: s.direction(),
        })
        .collect();
    let mut out: Vec<Line<Rational>> = lines.clone();
    let ends: Vec<(usize, &Point3)> = segs
        .iter()
        .enumerate()
        .flat_map(|(i, s)| [(i, &s.p), (i, &s.q)])
        .collect();
    for (x, &(i, e)) in ends.iter().enumerate() {
        for &(j, f) in &ends[x + 1..] {
            if i != j && e != f {
                out.push(Line {
                    p: e.clone(),
                    d: f - e,
                });
            }
        }
    }
    for &(i, e) in &ends {
        let normals: Vec<Point3> = (0..k)
            .filter(|&j| j != i && !lines[j].contains(e))
            .map(|j| lines[j].d.cross(&(e - &lines[j].p)))
            .collect();
        for a in 0..normals.len() {
            for b in (a + 1)..normals.len() {
                let d = normals[a].cross(&normals[b]);
                if !d.is_zero() {
                    out.push(Line { p: e.clone(), d });
                }
            }
        }
    }
    out
}

/// Decides exactly whether one line meets all `k ∈ {3, 4}` closed segments.
pub fn transversal_exists_segments(segs: &[Segment3]) -> Result<TransversalSearch> {
    if !(3..=4).contains(&segs.len()) {
        return Err(Error::OutOfRange(format!(
            "transversal search needs 3 or 4 segments, got {}",
            segs.len()
        )));
    }
    for (i, s) in segs.iter().enumerate() {
        if s.p == s.q {
            return Err(Error::DegenerateInput(format!("segment {i} has zero length")));
        }
    }
    if segs.len() == 4 {
        if let super::homog::Route::Decided(hit) = super::homog::four_segments(segs) {
            return Ok(match hit {
                Some((line, params)) => found(line, params),
                None => TransversalSearch {
                    exists: false,
                    witness: None,
                },
            });
        }
    }
    Ok(search_rational(segs))
}

fn search_rational(segs: &[Segment3]) -> TransversalSearch {
    let rat_segs: Vec<(Point3, Point3)> = segs.iter().map(|s| (s.p.clone(), s.direction())).collect();

    let mut need_endpoints = true;
    if segs.len() == 4 {
        let ls: [Line<Rational>; 4] = std::array::from_fn(|i| Line {
            p: segs[i].p.clone(),
            d: segs[i].direction(),
        });
        let raw = raw_transversals(&ls);
        for c in &raw.isolated {
            let params: Option<Vec<QuadExt>> = rat_segs.iter().map(|(a, w)| c.hit(a, w)).collect();
            if let Some(params) = params {
                return found(c.line().to_plucker(), params);
            }
        }
        // A finite transversal set of the supporting lines already contains
        // every transversal of the segments.
        need_endpoints = raw.infinite;
    }
    if need_endpoints {
        for l in endpoint_candidates(segs) {
            if let Some(params) = check_line(&l.p, &l.d, &rat_segs) {
                let params = params.into_iter().map(QuadExt::from).collect();
                return found(l.lift().to_plucker(), params);
            }
        }
    }
    TransversalSearch {
        exists: false,
        witness: None,
    }
}

fn found(line: PluckerLine<QuadExt>, params: Vec<QuadExt>) -> TransversalSearch {
    TransversalSearch {
        exists: true,
        witness: Some(TransversalWitness { line, params }),
    }
}

/// Re-checks a witness line against segments from scratch.
pub fn verify_witness(line: &PluckerLine<QuadExt>, segs: &[Segment3]) -> bool {
    let p = line.point();
    let d = line.direction().clone();
    segs.iter()
        .all(|s| segment_hit(&p, &d, &s.p.lift(), &s.direction().lift()).is_some())
}

/// Closed-segment hit parameter for an exact line, used by callers that
/// need per-segment certificates.
pub fn line_hits_segment(line: &PluckerLine<QuadExt>, s: &Segment3) -> Option<QuadExt> {
    segment_hit(&line.point(), line.direction(), &s.p.lift(), &s.direction().lift())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::plucker::plucker_from_segment;
    use crate::geom::scalar::{int, rat};

    fn p(x: i64, y: i64, z: i64) -> Point3 {
        Point3::from_ints(x, y, z)
    }

    fn seg(a: Point3, b: Point3) -> Segment3 {
        Segment3::new(a, b).unwrap()
    }

    fn line(a: Point3, b: Point3) -> PluckerLine {
        plucker_from_segment(&seg(a, b)).unwrap()
    }

    fn z_axis() -> PluckerLine {
        line(p(0, 0, 0), p(0, 0, 1))
    }

    #[test]
    fn four_skew_lines_through_z_axis() {
        // Each line passes through (0,0,i) in a different horizontal direction.
        let ls = [
            line(p(0, 0, 1), p(1, 0, 1)),
            line(p(0, 0, 2), p(0, 1, 2)),
            line(p(0, 0, 3), p(1, 1, 3)),
            line(p(0, 0, 4), p(1, -2, 4)),
        ];
        match transversals_of_4_lines(&ls) {
            Transversals::Finite(v) => {
                assert!(v.iter().any(|t| t.same_line(&z_axis().lift())));
                for t in &v {
                    for l in &ls {
                        assert_eq!(t.side(&l.lift()), 0);
                    }
                }
            }
            Transversals::Infinite => panic!("expected finitely many transversals"),
        }
    }

    #[test]
    fn hyperboloid_ruling_is_infinite() {
        // x² + y² - z² = 1 contains (cos a - t sin a, sin a + t cos a, t).
        let ruling = |c: i64, s: i64, den: i64| {
            // rational point on the unit circle (c/den, s/den)
            let a = Vec3::new(rat(c, den), rat(s, den), int(0));
            let d = Vec3::new(rat(-s, den), rat(c, den), int(1));
            PluckerLine::through(&a, &d).unwrap()
        };
        let ls = [ruling(1, 0, 1), ruling(0, 1, 1), ruling(3, 4, 5), ruling(-5, 12, 13)];
        assert_eq!(transversals_of_4_lines(&ls), Transversals::Infinite);
    }

    #[test]
    fn segments_through_common_axis() {
        let mk = |c: i64, s: i64, z: i64| seg(p(c, s, z), p(-c, -s, z));
        let segs = [mk(1, 0, 1), mk(0, 1, 2), mk(1, 1, 3), mk(2, -1, 4)];
        let r = transversal_exists_segments(&segs).unwrap();
        assert!(r.exists);
        let w = r.witness.unwrap();
        assert!(verify_witness(&w.line, &segs));
        assert!(w.line.same_line(&z_axis().lift()));
    }

    #[test]
    fn half_segments_miss_axis() {
        // Keep only the halves away from the axis.
        let mk = |c: i64, s: i64, z: i64| seg(p(2 * c, 2 * s, 2 * z), p(c, s, 2 * z));
        let segs = [mk(1, 0, 1), mk(0, 1, 2), mk(-1, -1, 3), mk(2, -1, 4)];
        let r = transversal_exists_segments(&segs).unwrap();
        assert!(!r.exists);
    }

    #[test]
    fn three_segments_sharing_a_point() {
        let o = p(1, 1, 1);
        let segs = [
            seg(o.clone(), p(5, 0, 2)),
            seg(p(-3, 2, 7), o.clone()),
            seg(p(0, 0, 0), p(2, 2, 2)),
        ];
        assert!(transversal_exists_segments(&segs).unwrap().exists);
    }

    #[test]
    fn degenerate_segment_is_an_error() {
        let s = Segment3 {
            p: p(0, 0, 0),
            q: p(0, 0, 0),
        };
        let t = seg(p(1, 0, 0), p(2, 0, 0));
        let r = transversal_exists_segments(&[s, t.clone(), t]);
        assert!(matches!(r, Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn coplanar_segments_use_planar_stabbing() {
        // All in z = 0; a line y = 1/2 stabs the vertical unit segments.
        let segs = [
            seg(p(0, 0, 0), p(0, 1, 0)),
            seg(p(1, 0, 0), p(1, 1, 0)),
            seg(p(2, 0, 0), p(2, 1, 0)),
            seg(p(3, 0, 0), p(3, 1, 0)),
        ];
        assert!(transversal_exists_segments(&segs).unwrap().exists);
        // Zig-zag that no line stabs.
        let segs = [
            seg(p(0, 0, 0), p(0, 1, 0)),
            seg(p(1, 3, 0), p(1, 4, 0)),
            seg(p(2, 0, 0), p(2, 1, 0)),
            seg(p(3, 3, 0), p(3, 4, 0)),
        ];
        assert!(!transversal_exists_segments(&segs).unwrap().exists);
    }

    #[test]
    fn transversal_through_intersecting_pair() {
        // Segments 0 and 1 cross at the origin; segments 2, 3 are skew elsewhere.
        let segs = [
            seg(p(-1, 0, 0), p(1, 0, 0)),
            seg(p(0, -1, 0), p(0, 1, 0)),
            seg(p(-1, 1, 1), p(1, -1, 1)),
            seg(p(-2, -1, 2), p(2, 1, 2)),
        ];
        let r = transversal_exists_segments(&segs).unwrap();
        assert!(r.exists);
        assert!(verify_witness(&r.witness.unwrap().line, &segs));
    }

    mod props {
        use super::*;
        use crate::geom::fast::{transversal_verdict, Normalizer, Verdict};
        use proptest::prelude::*;

        fn segs_from(c: &[i64]) -> Option<Vec<Segment3>> {
            c.chunks(6)
                .map(|v| Segment3::new(Point3::from_ints(v[0], v[1], v[2]), Point3::from_ints(v[3], v[4], v[5])).ok())
                .collect()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(400))]

            #[test]
            fn integer_route_matches_rational(c in proptest::collection::vec(-4i64..=4, 24)) {
                let Some(segs) = segs_from(&c) else { return Ok(()) };
                let fast = transversal_exists_segments(&segs).unwrap();
                let slow = search_rational(&segs);
                prop_assert_eq!(fast.exists, slow.exists);
                if let Some(w) = fast.witness {
                    prop_assert!(verify_witness(&w.line, &segs));
                }
            }

            #[test]
            fn float_verdict_never_contradicts(c in proptest::collection::vec(-50i64..=50, 24)) {
                let Some(segs) = segs_from(&c) else { return Ok(()) };
                let exact = transversal_exists_segments(&segs).unwrap().exists;
                let pts: Vec<_> = segs.iter().flat_map(|s| [s.p.approx(), s.q.approx()]).collect();
                let norm = Normalizer::fit(pts.iter());
                let f: Vec<_> = segs.iter().map(|s| norm.segment(s)).collect();
                match transversal_verdict(&f, 1e-9) {
                    Verdict::Yes => prop_assert!(exact),
                    Verdict::No => prop_assert!(!exact),
                    Verdict::Unsure => {}
                }
            }
        }
    }
}
