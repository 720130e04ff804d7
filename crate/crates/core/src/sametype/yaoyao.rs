//! Equipartitions of point multisets into `2^d` cones, `d ≤ 2`.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::scalar::{format_rational, parse_rational};
use crate::geom::Rational;

/// A finite multiset of points of one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMultiset {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PointMultiset {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(k) = points.iter().position(|p| p.len() != dim) {
            return Err(Error::validation(format!("points[{k}]"), format!("expected dimension {dim}")));
        }
        Ok(PointMultiset { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[Rational] {
        &self.points[i]
    }

    pub fn to_doc(&self) -> MultisetDoc {
        MultisetDoc {
            dim: self.dim,
            points: self.points.iter().map(|p| p.iter().map(format_rational).collect()).collect(),
        }
    }

    pub fn from_doc(doc: &MultisetDoc) -> Result<Self> {
        let pts = doc
            .points
            .iter()
            .map(|p| p.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PointMultiset::new(doc.dim, pts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultisetDoc {
    pub dim: usize,
    pub points: Vec<Vec<String>>,
}

/// Center and `2^d` cones, each spanned by `d` generators; cone `j` truncated
/// at `center + scale·g` is the simplex `Δ_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YaoYaoPartition {
    pub dim: usize,
    pub center: Vec<Rational>,
    pub cells: Vec<Vec<Vec<Rational>>>,
    pub scale: Rational,
    /// Whether the construction ran on a perturbed copy of the input.
    pub perturbed: bool,
    /// Points per closed cell, counted on the points the construction used.
    pub counts: Vec<usize>,
}

type P2 = [Rational; 2];

fn cross(a: &P2, b: &P2) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn angle_cmp(a: &P2, b: &P2) -> Ordering {
    let upper = |p: &P2| p[1].is_positive() || (p[1].is_zero() && p[0].is_positive());
    match (upper(a), upper(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => {
            let c = cross(a, b);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        }
    }
}

fn p2(v: &[Rational]) -> P2 {
    [v[0].clone(), v[1].clone()]
}

impl YaoYaoPartition {
    /// Coefficients of `x − center` in cell `j`'s generators, if it lies in the closed cone.
    pub fn cone_coords(&self, j: usize, x: &[Rational]) -> Option<Vec<Rational>> {
        let g = &self.cells[j];
        let w: Vec<Rational> = x.iter().zip(&self.center).map(|(a, c)| a - c).collect();
        let coords = match self.dim {
            1 => vec![&w[0] / &g[0][0]],
            _ => {
                let (g1, g2, w) = (p2(&g[0]), p2(&g[1]), p2(&w));
                let det = cross(&g1, &g2);
                vec![cross(&w, &g2) / &det, cross(&g1, &w) / det]
            }
        };
        coords.iter().all(|c| !c.is_negative()).then_some(coords)
    }

    /// Simplex vertices: the center, then every `center + scale·g`.
    pub fn vertices(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![self.center.clone()];
        for g in self.cells.iter().flatten() {
            let v: Vec<Rational> = self.center.iter().zip(g).map(|(c, x)| c + &self.scale * x).collect();
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    /// Indices into [`Self::vertices`] of the vertices of `Δ_j`, center first.
    pub fn cell_vertices(&self, j: usize) -> Vec<usize> {
        let vs = self.vertices();
        let mut idx = vec![0];
        for g in &self.cells[j] {
            let v: Vec<Rational> = self.center.iter().zip(g).map(|(c, x)| c + &self.scale * x).collect();
            idx.push(vs.iter().position(|w| *w == v).expect("listed vertex"));
        }
        idx
    }

    /// Barycentric coordinates of `x` in `Δ_j` (ordered as [`Self::cell_vertices`]), if inside.
    pub fn barycentric(&self, j: usize, x: &[Rational]) -> Option<Vec<Rational>> {
        let c = self.cone_coords(j, x)?;
        let mut out: Vec<Rational> = c.iter().map(|a| a / &self.scale).collect();
        let rest = Rational::one() - out.iter().fold(Rational::zero(), |s, a| s + a);
        if rest.is_negative() {
            return None;
        }
        out.insert(0, rest);
        Some(out)
    }

    fn count(&self, pts: &[Vec<Rational>]) -> Vec<usize> {
        (0..self.cells.len())
            .map(|j| pts.iter().filter(|p| self.barycentric(j, p).is_some()).count())
            .collect()
    }

    /// Cones are consecutive, convex and wind once around the center.
    fn check_cover(&self) -> bool {
        if self.dim == 1 {
            return self.cells.len() == 2 && self.cells[0][0][0].is_positive() && self.cells[1][0][0].is_negative();
        }
        let firsts: Vec<P2> = self.cells.iter().map(|c| p2(&c[0])).collect();
        let n = self.cells.len();
        let convex = self.cells.iter().all(|c| cross(&p2(&c[0]), &p2(&c[1])).is_positive());
        let chained = (0..n).all(|j| self.cells[j][1] == self.cells[(j + 1) % n][0]);
        let descents = (0..n).filter(|&j| angle_cmp(&firsts[j], &firsts[(j + 1) % n]) != Ordering::Less).count();
        n == 4 && convex && chained && descents == 1
    }

    /// Every closed halfspace whose boundary passes through the center contains a cell,
    /// checked over all combinatorially distinct boundary directions.
    pub fn check_halfspaces(&self) -> bool {
        if self.dim == 1 {
            let one = Rational::one();
            return [one.clone(), -one]
                .iter()
                .all(|n| self.cells.iter().any(|c| !(n * &c[0][0]).is_negative()));
        }
        let mut dirs: Vec<P2> = Vec::new();
        for g in self.cells.iter().flatten() {
            let g = p2(g);
            let neg = [-g[0].clone(), -g[1].clone()];
            for d in [g, neg] {
                if !dirs.iter().any(|e| angle_cmp(e, &d) == Ordering::Equal) {
                    dirs.push(d);
                }
            }
        }
        dirs.sort_by(angle_cmp);
        let mut bounds = dirs.clone();
        for i in 0..dirs.len() {
            let (a, b) = (&dirs[i], &dirs[(i + 1) % dirs.len()]);
            bounds.push(if cross(a, b).is_positive() {
                [&a[0] + &b[0], &a[1] + &b[1]]
            } else {
                [-a[1].clone(), a[0].clone()]
            });
        }
        bounds.iter().all(|u| {
            let n = [-u[1].clone(), u[0].clone()];
            [1i32, -1].iter().all(|&s| {
                self.cells.iter().any(|c| {
                    c.iter().all(|g| {
                        let dot = &n[0] * &g[0] + &n[1] * &g[1];
                        if s > 0 { !dot.is_negative() } else { !dot.is_positive() }
                    })
                })
            })
        })
    }
}

fn median(mut v: Vec<Rational>) -> Rational {
    v.sort();
    let n = v.len();
    (&v[(n - 1) / 2] + &v[n / 2]) / Rational::from_integer(2.into())
}

/// Vertical median line and a line halving both of its closed sides.
fn two_lines(pts: &[Vec<Rational>]) -> Option<(Vec<Rational>, Vec<Vec<Vec<Rational>>>)> {
    let c = median(pts.iter().map(|p| p[0].clone()).collect());
    let left: Vec<&Vec<Rational>> = pts.iter().filter(|p| p[0] <= c).collect();
    let right: Vec<&Vec<Rational>> = pts.iter().filter(|p| p[0] >= c).collect();
    let halves = |side: &[&Vec<Rational>], s: &Rational, b: &Rational| {
        let (mut above, mut below) = (0, 0);
        for p in side {
            let h = &p[1] - (b + s * &p[0]);
            above += usize::from(!h.is_negative());
            below += usize::from(!h.is_positive());
        }
        2 * above >= side.len() && 2 * below >= side.len()
    };
    let mut tried = HashSet::new();
    let mut candidates = pts.iter().map(|p| (Rational::zero(), p[1].clone())).collect::<Vec<_>>();
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            if p[0] != q[0] {
                let s = (&q[1] - &p[1]) / (&q[0] - &p[0]);
                let b = &p[1] - &s * &p[0];
                candidates.push((s, b));
            }
        }
    }
    for (s, b) in candidates {
        if !tried.insert((s.clone(), b.clone())) {
            continue;
        }
        if halves(&left, &s, &b) && halves(&right, &s, &b) {
            let one = Rational::one();
            let z = Rational::zero();
            let g = [
                vec![one.clone(), s.clone()],
                vec![z.clone(), one.clone()],
                vec![-one.clone(), -s.clone()],
                vec![z.clone(), -one],
            ];
            let cells = (0..4).map(|j| vec![g[j].clone(), g[(j + 1) % 4].clone()]).collect();
            let center = vec![c.clone(), b + s * &c];
            return Some((center, cells));
        }
    }
    None
}

fn perturb(pts: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let unit = Rational::new(BigInt::one(), BigInt::one() << 64);
    pts.iter()
        .enumerate()
        .map(|(i, p)| {
            let e = &unit * Rational::from_integer((i as i64 + 1).into());
            vec![&p[0] + &e, &p[1] + &e * &e]
        })
        .collect()
}

/// Builds and checks a partition of `f` into `2^d` cells, each holding at least `|f|/2^d` points.
pub fn yao_yao_partition(f: &PointMultiset) -> Result<YaoYaoPartition> {
    let d = f.dim();
    if !(1..=2).contains(&d) {
        return Err(Error::PreconditionViolated(format!("partition dimension {d} not in 1..=2")));
    }
    if f.len() < 1 << d {
        return Err(Error::PreconditionViolated(format!("{} points, need at least {}", f.len(), 1 << d)));
    }
    let (pts, center, cells, perturbed): (Vec<Vec<Rational>>, _, _, _) = if d == 1 {
        let c = median(f.points().iter().map(|p| p[0].clone()).collect());
        let one = Rational::one();
        (f.points().to_vec(), vec![c], vec![vec![vec![one.clone()]], vec![vec![-one]]], false)
    } else if let Some((c, cells)) = two_lines(f.points()) {
        (f.points().to_vec(), c, cells, false)
    } else {
        let pts = perturb(f.points());
        let (c, cells) = two_lines(&pts).ok_or_else(|| Error::Invariant("no halving line after perturbation".into()))?;
        (pts, c, cells, true)
    };
    let mut yy = YaoYaoPartition { dim: d, center, cells, scale: Rational::one(), perturbed, counts: Vec::new() };
    let mut scale = Rational::one();
    for p in &pts {
        for j in 0..yy.cells.len() {
            if let Some(c) = yy.cone_coords(j, p) {
                let s = c.iter().fold(Rational::zero(), |s, a| s + a);
                if s > scale {
                    scale = s;
                }
            }
        }
    }
    yy.scale = scale;
    yy.counts = yy.count(&pts);
    if yy.counts.iter().any(|&c| c << d < f.len()) {
        return Err(Error::Invariant(format!("cell counts {:?} below |F|/2^d", yy.counts)));
    }
    if !yy.check_cover() || !yy.check_halfspaces() {
        return Err(Error::Invariant("partition cells fail the cover or halfspace check".into()));
    }
    Ok(yy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::scalar::{int, rat};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ms(dim: usize, pts: Vec<Vec<i64>>) -> PointMultiset {
        PointMultiset::new(dim, pts.into_iter().map(|p| p.into_iter().map(int).collect()).collect()).unwrap()
    }

    #[test]
    fn one_dimensional_median() {
        let yy = yao_yao_partition(&ms(1, (1..=10).map(|x| vec![x]).collect())).unwrap();
        assert_eq!(yy.center, vec![rat(11, 2)]);
        assert_eq!(yy.counts, vec![5, 5]);
        assert_eq!(yy.vertices().len(), 3);
    }

    #[test]
    fn grid_cells_hold_a_quarter() {
        let pts: Vec<Vec<i64>> = (0..6).flat_map(|x| (0..6).map(move |y| vec![x, y])).collect();
        let f = ms(2, pts);
        let yy = yao_yao_partition(&f).unwrap();
        // Exhaustive recount on the input.
        for j in 0..4 {
            let c = f.points().iter().filter(|p| yy.barycentric(j, p).is_some()).count();
            assert!(4 * c >= 36);
        }
        assert!(yy.vertices().len() <= 9);
    }

    #[test]
    fn collinear_and_repeated_points() {
        let f = ms(2, (0..9).map(|i| vec![i, 2 * i]).collect());
        let yy = yao_yao_partition(&f).unwrap();
        assert!(yy.counts.iter().all(|&c| 4 * c >= 9));
        let same = ms(2, vec![vec![3, 3]; 8]);
        assert!(yao_yao_partition(&same).unwrap().counts.iter().all(|&c| c == 8));
        let vertical = ms(2, (0..8).map(|i| vec![1, i]).collect());
        assert!(yao_yao_partition(&vertical).is_ok());
    }

    #[test]
    fn rejects_small_or_high_dimensional() {
        assert!(yao_yao_partition(&ms(2, vec![vec![0, 0]; 3])).is_err());
        assert!(yao_yao_partition(&ms(3, vec![vec![0, 0, 0]; 9])).is_err());
    }

    #[test]
    fn broken_partition_fails_halfspace_check() {
        let f = ms(2, (0..6).flat_map(|x| (0..6).map(move |y| vec![x, y])).collect());
        let mut yy = yao_yao_partition(&f).unwrap();
        assert!(yy.check_halfspaces());
        // Drop a cell: the halfplane opposite it no longer contains a whole cell.
        yy.cells.remove(0);
        assert!(!yy.check_halfspaces());
    }

    #[test]
    fn random_multisets() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let n = rng.gen_range(4..40);
            let pts = (0..n).map(|_| vec![rng.gen_range(-5..=5), rng.gen_range(-5..=5)]).collect();
            let yy = yao_yao_partition(&ms(2, pts)).unwrap();
            assert!(yy.counts.iter().all(|&c| 4 * c >= n));
        }
    }
}
