//! Plücker coordinates of lines in R³.
//!
//! A line through `p` with direction `d` is stored as `(d, p × d)`. Every
//! constructor preserves `⟨d, m⟩ = 0` exactly. Two representations are the
//! same line iff their 6-vectors are proportional.

use serde::{Deserialize, Serialize};

use super::scalar::{Field, QuadExt, QuadExtDoc, Rational};
use super::vector::{Point3, Segment3, Vec3};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PluckerLine<T = Rational> {
    direction: Vec3<T>,
    moment: Vec3<T>,
}

impl<T: Field> PluckerLine<T> {
    /// Line through `p` with direction `d`.
    pub fn through(p: &Vec3<T>, d: &Vec3<T>) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DegenerateInput("zero line direction".into()));
        }
        Ok(PluckerLine {
            moment: p.cross(d),
            direction: d.clone(),
        })
    }

    /// Builds a line from raw coordinates, rejecting anything off the Klein quadric.
    pub fn from_coords(direction: Vec3<T>, moment: Vec3<T>) -> Result<Self> {
        if direction.is_zero() {
            return Err(Error::DegenerateInput("zero line direction".into()));
        }
        if !direction.dot(&moment).is_zero() {
            return Err(Error::DegenerateInput(
                "coordinates violate the Plücker relation".into(),
            ));
        }
        Ok(PluckerLine { direction, moment })
    }

    pub fn direction(&self) -> &Vec3<T> {
        &self.direction
    }

    pub fn moment(&self) -> &Vec3<T> {
        &self.moment
    }

    /// Point of the line closest to the origin.
    pub fn point(&self) -> Vec3<T> {
        self.direction
            .cross(&self.moment)
            .div(&self.direction.norm2())
    }

    /// The reciprocal product `⟨d₁, m₂⟩ + ⟨d₂, m₁⟩`.
    pub fn reciprocal(&self, other: &Self) -> T {
        self.direction.dot(&other.moment) + other.direction.dot(&self.moment)
    }

    /// Sign of the reciprocal product: zero iff the lines are coplanar.
    pub fn side(&self, other: &Self) -> i8 {
        self.reciprocal(other).sign()
    }

    pub fn reversed(&self) -> Self {
        PluckerLine {
            direction: -&self.direction,
            moment: -&self.moment,
        }
    }

    pub fn plucker_relation_holds(&self) -> bool {
        self.direction.dot(&self.moment).is_zero()
    }

    fn six(&self) -> [&T; 6] {
        let [a, b, c] = self.direction.coords();
        let [d, e, f] = self.moment.coords();
        [a, b, c, d, e, f]
    }

    /// Projective equality: same line regardless of scaling or orientation.
    pub fn same_line(&self, other: &Self) -> bool {
        let u = self.six();
        let v = other.six();
        for i in 0..6 {
            for j in (i + 1)..6 {
                let lhs = u[i].clone() * v[j].clone();
                let rhs = u[j].clone() * v[i].clone();
                if lhs != rhs && !(lhs - rhs).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn contains_point(&self, p: &Vec3<T>) -> bool {
        p.cross(&self.direction) == self.moment
            || (&p.cross(&self.direction) - &self.moment).is_zero()
    }
}

impl PluckerLine<Rational> {
    /// Supporting line of a segment, `(q - p, p × q)`.
    pub fn from_segment(s: &Segment3) -> Result<Self> {
        if s.p == s.q {
            return Err(Error::DegenerateInput("zero-length segment".into()));
        }
        Ok(PluckerLine {
            direction: s.direction(),
            moment: s.p.cross(&s.q),
        })
    }

    pub fn lift(&self) -> PluckerLine<QuadExt> {
        PluckerLine {
            direction: self.direction.lift(),
            moment: self.moment.lift(),
        }
    }
}

/// Convenience wrapper over [`PluckerLine::from_segment`].
pub fn plucker_from_segment(s: &Segment3) -> Result<PluckerLine> {
    PluckerLine::from_segment(s)
}

/// Sign of the incidence form between two lines.
pub fn side_product<T: Field>(a: &PluckerLine<T>, b: &PluckerLine<T>) -> i8 {
    a.side(b)
}

pub fn point_line_distance2_approx(line: &PluckerLine<Rational>, p: &Point3) -> f64 {
    let d = line.direction().approx();
    let m = line.moment().approx();
    let p = p.approx();
    let c = [
        p[1] * d[2] - p[2] * d[1] - m[0],
        p[2] * d[0] - p[0] * d[2] - m[1],
        p[0] * d[1] - p[1] * d[0] - m[2],
    ];
    (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]) / (d[0] * d[0] + d[1] * d[1] + d[2] * d[2])
}

/// Wire form of a line with possibly irrational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PluckerLineDoc {
    pub direction: [QuadExtDoc; 3],
    pub moment: [QuadExtDoc; 3],
}

impl From<&PluckerLine<QuadExt>> for PluckerLineDoc {
    fn from(l: &PluckerLine<QuadExt>) -> Self {
        let f = |v: &Vec3<QuadExt>| {
            [
                QuadExtDoc::from(&v.x),
                QuadExtDoc::from(&v.y),
                QuadExtDoc::from(&v.z),
            ]
        };
        PluckerLineDoc {
            direction: f(&l.direction),
            moment: f(&l.moment),
        }
    }
}

impl TryFrom<&PluckerLineDoc> for PluckerLine<QuadExt> {
    type Error = Error;
    fn try_from(doc: &PluckerLineDoc) -> Result<Self> {
        let f = |v: &[QuadExtDoc; 3]| -> Result<Vec3<QuadExt>> {
            Ok(Vec3::new(
                QuadExt::try_from(&v[0])?,
                QuadExt::try_from(&v[1])?,
                QuadExt::try_from(&v[2])?,
            ))
        };
        PluckerLine::from_coords(f(&doc.direction)?, f(&doc.moment)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(a: [i64; 3], b: [i64; 3]) -> Segment3 {
        Segment3::new(
            Point3::from_ints(a[0], a[1], a[2]),
            Point3::from_ints(b[0], b[1], b[2]),
        )
        .unwrap()
    }

    #[test]
    fn from_segment_examples() {
        let l = plucker_from_segment(&seg([0, 0, 0], [1, 0, 0])).unwrap();
        assert_eq!(l.direction(), &Point3::from_ints(1, 0, 0));
        assert_eq!(l.moment(), &Point3::from_ints(0, 0, 0));
        let l = plucker_from_segment(&seg([0, 0, 0], [0, 1, 0])).unwrap();
        assert_eq!(l.direction(), &Point3::from_ints(0, 1, 0));
        assert!(l.moment().is_zero());
        let l = plucker_from_segment(&seg([1, 0, 0], [1, 1, 0])).unwrap();
        assert_eq!(l.direction(), &Point3::from_ints(0, 1, 0));
        assert_eq!(l.moment(), &Point3::from_ints(0, 0, 1));
        assert!(l.plucker_relation_holds());
    }

    #[test]
    fn degenerate_segment_rejected() {
        let p = Point3::from_ints(1, 2, 3);
        assert!(Segment3::new(p.clone(), p.clone()).is_err());
        let s = Segment3 { p: p.clone(), q: p };
        assert!(matches!(
            plucker_from_segment(&s),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn side_product_examples() {
        let x = plucker_from_segment(&seg([0, 0, 0], [1, 0, 0])).unwrap();
        let y = plucker_from_segment(&seg([0, 0, 0], [0, 1, 0])).unwrap();
        let par = plucker_from_segment(&seg([0, 0, 1], [1, 0, 1])).unwrap();
        let skew = plucker_from_segment(&seg([0, 0, 1], [0, 1, 1])).unwrap();
        assert_eq!(side_product(&x, &y), 0);
        assert_eq!(side_product(&x, &par), 0);
        // d1·m2 + d2·m1 with d1=(1,0,0), m1=0, d2=(0,1,0), m2=(0,0,1)×(0,1,0)=(-1,0,0)
        assert_eq!(x.reciprocal(&skew), crate::geom::scalar::int(-1));
        assert_eq!(side_product(&x, &skew), -1);
        assert_eq!(side_product(&x.reversed(), &skew), 1);
    }

    #[test]
    fn projective_equality() {
        let a = plucker_from_segment(&seg([0, 0, 0], [1, 1, 1])).unwrap();
        let b = plucker_from_segment(&seg([3, 3, 3], [-2, -2, -2])).unwrap();
        assert!(a.same_line(&b));
        let c = plucker_from_segment(&seg([0, 0, 1], [1, 1, 2])).unwrap();
        assert!(!a.same_line(&c));
        assert!(a.contains_point(&Point3::from_ints(5, 5, 5)));
        assert_eq!(a.point(), Point3::from_ints(0, 0, 0));
    }
}
