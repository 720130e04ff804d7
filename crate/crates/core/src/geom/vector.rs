use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use num_traits::Zero;

use super::planar::{segments_intersect_2d, Point2, SegmentRelation};
use super::scalar::{format_rational, parse_rational, Field, QuadExt, Rational};
use crate::error::{Error, Result};

/// A 3-vector over an exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

pub type Point3 = Vec3<Rational>;

impl<T: Field> Vec3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Vec3 { x, y, z }
    }

    pub fn zero() -> Self {
        Vec3::new(T::zero(), T::zero(), T::zero())
    }

    pub fn dot(&self, o: &Self) -> T {
        self.x.clone() * o.x.clone() + self.y.clone() * o.y.clone() + self.z.clone() * o.z.clone()
    }

    pub fn cross(&self, o: &Self) -> Self {
        Vec3::new(
            self.y.clone() * o.z.clone() - self.z.clone() * o.y.clone(),
            self.z.clone() * o.x.clone() - self.x.clone() * o.z.clone(),
            self.x.clone() * o.y.clone() - self.y.clone() * o.x.clone(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        Vec3::new(
            self.x.clone() * s.clone(),
            self.y.clone() * s.clone(),
            self.z.clone() * s.clone(),
        )
    }

    pub fn div(&self, s: &T) -> Self {
        Vec3::new(
            self.x.clone() / s.clone(),
            self.y.clone() / s.clone(),
            self.z.clone() / s.clone(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn coords(&self) -> [&T; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn norm2(&self) -> T {
        self.dot(self)
    }

    pub fn approx(&self) -> [f64; 3] {
        [self.x.approx(), self.y.approx(), self.z.approx()]
    }
}

impl Vec3<Rational> {
    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        use super::scalar::int;
        Vec3::new(int(x), int(y), int(z))
    }

    pub fn lift(&self) -> Vec3<QuadExt> {
        Vec3::new(
            QuadExt::from(self.x.clone()),
            QuadExt::from(self.y.clone()),
            QuadExt::from(self.z.clone()),
        )
    }

    pub fn to_doc(&self) -> [String; 3] {
        [
            format_rational(&self.x),
            format_rational(&self.y),
            format_rational(&self.z),
        ]
    }

    pub fn from_doc(doc: &[String; 3]) -> Result<Self> {
        Ok(Vec3::new(
            parse_rational(&doc[0])?,
            parse_rational(&doc[1])?,
            parse_rational(&doc[2])?,
        ))
    }
}

impl<T: Field> Add for &Vec3<T> {
    type Output = Vec3<T>;
    fn add(self, o: &Vec3<T>) -> Vec3<T> {
        Vec3::new(
            self.x.clone() + o.x.clone(),
            self.y.clone() + o.y.clone(),
            self.z.clone() + o.z.clone(),
        )
    }
}

impl<T: Field> Sub for &Vec3<T> {
    type Output = Vec3<T>;
    fn sub(self, o: &Vec3<T>) -> Vec3<T> {
        Vec3::new(
            self.x.clone() - o.x.clone(),
            self.y.clone() - o.y.clone(),
            self.z.clone() - o.z.clone(),
        )
    }
}

impl<T: Field> Neg for &Vec3<T> {
    type Output = Vec3<T>;
    fn neg(self) -> Vec3<T> {
        Vec3::new(-self.x.clone(), -self.y.clone(), -self.z.clone())
    }
}

/// A closed segment with distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment3 {
    pub p: Point3,
    pub q: Point3,
}

impl Segment3 {
    pub fn new(p: Point3, q: Point3) -> Result<Self> {
        if p == q {
            return Err(Error::DegenerateInput("zero-length segment".into()));
        }
        Ok(Segment3 { p, q })
    }

    pub fn direction(&self) -> Point3 {
        &self.q - &self.p
    }

    pub fn reversed(&self) -> Self {
        Segment3 {
            p: self.q.clone(),
            q: self.p.clone(),
        }
    }

    pub fn point_at(&self, t: &Rational) -> Point3 {
        &self.p + &self.direction().scale(t)
    }

    /// Whether the closed segments share a point.
    pub fn intersects(&self, o: &Segment3) -> bool {
        let d1 = self.direction();
        let w = &o.p - &self.p;
        let d2 = o.direction();
        let mut n = d1.cross(&d2);
        if !n.dot(&w).is_zero() {
            return false;
        }
        if n.is_zero() {
            n = d1.cross(&w);
        }
        // Drop a coordinate along which the common plane (or line) projects injectively.
        let drop = if n.is_zero() {
            (0..3).find(|&k| d1.coords()[k].is_zero()).unwrap_or(0)
        } else {
            (0..3).find(|&k| !n.coords()[k].is_zero()).unwrap()
        };
        let flat = |p: &Point3| -> Point2 {
            let c = p.coords();
            let keep: Vec<&Rational> = (0..3).filter(|&k| k != drop).map(|k| c[k]).collect();
            [keep[0].clone(), keep[1].clone()]
        };
        segments_intersect_2d(&flat(&self.p), &flat(&self.q), &flat(&o.p), &flat(&o.q)) != SegmentRelation::Disjoint
    }
}

/// Serializable point in the `"p/q"` scalar format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointDoc(pub [String; 3]);

impl From<&Point3> for PointDoc {
    fn from(p: &Point3) -> Self {
        PointDoc(p.to_doc())
    }
}

impl TryFrom<&PointDoc> for Point3 {
    type Error = Error;
    fn try_from(d: &PointDoc) -> Result<Self> {
        Point3::from_doc(&d.0)
    }
}
