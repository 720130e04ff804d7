use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::drawing::SpatialDrawing;
use crate::error::{Error, Result};
use crate::geom::{Point3, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct LiftOptions {
    /// Segments per edge.
    pub subdivision: usize,
    /// Sphere radius as a multiple of the drawing's extent.
    pub radius_factor: Rational,
    /// Jitter of subdivision points as a fraction of the radius; zero disables it.
    pub jitter: Rational,
    pub seed: u64,
}

impl Default for LiftOptions {
    fn default() -> Self {
        LiftOptions {
            subdivision: 8,
            radius_factor: Rational::one(),
            jitter: Rational::new(BigInt::one(), BigInt::one() << 40),
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiftedDrawing {
    pub drawing: SpatialDrawing,
    pub center: Point3,
    pub radius: Rational,
}

/// Lifts a planar straight-line drawing onto a sphere with default options.
pub fn lift_to_sphere(planar: &SpatialDrawing, subdivision: usize) -> Result<SpatialDrawing> {
    let opts = LiftOptions {
        subdivision,
        ..Default::default()
    };
    Ok(lift_to_sphere_with(planar, &opts)?.drawing)
}

/// Inverse stereographic projection onto the sphere of radius `r` tangent to
/// `z = 0` at `c`, from the antipode of the tangent point.
fn project(c: &(Rational, Rational), r: &Rational, x: &Rational, y: &Rational) -> Point3 {
    let ux = x - &c.0;
    let uy = y - &c.1;
    let w = &ux * &ux + &uy * &uy;
    let four_r2 = r * r * Rational::from_integer(4.into());
    let den = &w + &four_r2;
    let s = &four_r2 / &den;
    Point3::new(
        &c.0 + &ux * &s,
        &c.1 + &uy * &s,
        r * Rational::from_integer(2.into()) * &w / &den,
    )
}

/// Lifts a planar straight-line drawing onto a large sphere.
///
/// Each edge is subdivided into `subdivision` equal pieces in the plane; interior
/// subdivision points get a seeded rational jitter in the plane before
/// projection, so every vertex of the result lies exactly on the sphere.
pub fn lift_to_sphere_with(planar: &SpatialDrawing, opts: &LiftOptions) -> Result<LiftedDrawing> {
    if opts.subdivision == 0 {
        return Err(Error::OutOfRange("subdivision must be at least 1".into()));
    }
    if !planar.is_straight() {
        return Err(Error::validation("edges", "lift needs a straight-line drawing"));
    }
    if let Some(v) = planar.positions().iter().position(|p| !p.z.is_zero()) {
        return Err(Error::validation(format!("vertices[{v}].pos"), "point not in the plane z = 0"));
    }
    let pos = planar.positions();
    let (c, extent) = if pos.is_empty() {
        ((Rational::zero(), Rational::zero()), Rational::one())
    } else {
        let min_max = |f: fn(&Point3) -> &Rational| {
            let lo = pos.iter().map(f).min().expect("nonempty").clone();
            let hi = pos.iter().map(f).max().expect("nonempty").clone();
            (lo, hi)
        };
        let (x0, x1) = min_max(|p| &p.x);
        let (y0, y1) = min_max(|p| &p.y);
        let two = Rational::from_integer(2.into());
        let ext = (&x1 - &x0).max(&y1 - &y0);
        let ext = if ext.is_zero() { Rational::one() } else { ext };
        (((x0 + x1) / &two, (y0 + y1) / &two), ext)
    };
    let r = &opts.radius_factor * &extent;
    if !r.is_positive() {
        return Err(Error::OutOfRange("radius factor must be positive".into()));
    }
    let amp = &opts.jitter * &r;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    const STEPS: i64 = 1 << 20;
    let mut jitter = || -> Rational {
        if amp.is_zero() {
            return Rational::zero();
        }
        &amp * Rational::new(rng.gen_range(-STEPS..=STEPS).into(), STEPS.into())
    };
    let positions: Vec<Point3> = pos.iter().map(|p| project(&c, &r, &p.x, &p.y)).collect();
    let s = opts.subdivision as i64;
    let g = planar.graph();
    let mut interiors = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        let (a, b) = (&pos[u], &pos[v]);
        let mut pts = Vec::with_capacity(opts.subdivision - 1);
        for j in 1..s {
            let t = Rational::new(j.into(), s.into());
            let x = &a.x + (&b.x - &a.x) * &t + jitter();
            let y = &a.y + (&b.y - &a.y) * &t + jitter();
            pts.push(project(&c, &r, &x, &y));
        }
        interiors.push(pts);
    }
    let drawing = SpatialDrawing::new(g.clone(), positions, interiors)?;
    Ok(LiftedDrawing {
        drawing,
        center: Point3::new(c.0, c.1, r.clone()),
        radius: r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossing::{count_line_crossings, CountOptions, Graph};

    #[test]
    fn lifted_points_are_on_the_sphere() {
        let pos = vec![
            Point3::from_ints(0, 0, 0),
            Point3::from_ints(3, 0, 0),
            Point3::from_ints(3, 2, 0),
            Point3::from_ints(0, 2, 0),
        ];
        let d = SpatialDrawing::straight(Graph::complete(4), pos).unwrap();
        let l = lift_to_sphere_with(&d, &LiftOptions::default()).unwrap();
        let r2 = &l.radius * &l.radius;
        for id in 0..l.drawing.graph().m() {
            assert_eq!(l.drawing.segments(id).len(), 8);
            for p in l.drawing.points(id) {
                assert_eq!((&p - &l.center).norm2(), r2);
            }
        }
        let r = count_line_crossings(&l.drawing, 4, &CountOptions::default()).unwrap();
        assert_eq!(r.count, 0);
    }

    #[test]
    fn deterministic_in_seed() {
        let pos = vec![Point3::from_ints(0, 0, 0), Point3::from_ints(1, 0, 0)];
        let d = SpatialDrawing::straight(Graph::complete(2), pos).unwrap();
        let a = lift_to_sphere_with(&d, &LiftOptions::default()).unwrap();
        let b = lift_to_sphere_with(&d, &LiftOptions::default()).unwrap();
        assert_eq!(a, b);
        let c = lift_to_sphere_with(&d, &LiftOptions { seed: 7, ..Default::default() }).unwrap();
        assert_ne!(a, c);
    }
}
