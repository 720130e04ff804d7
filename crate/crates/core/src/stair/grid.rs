//! Stretched grids, grid distance and closeness of points in the bounding box.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::borrow::Cow;
use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Index triple `(i₁, i₂, i₃)`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridPoint {
    pub idx: [usize; 3],
}

impl GridPoint {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        GridPoint { idx: [i, j, k] }
    }

    pub fn diagonal(i: usize) -> Self {
        GridPoint { idx: [i; 3] }
    }
}

/// Product grid `X₁ × X₂ × X₃` with `n` values per axis.
///
/// A symbolic grid carries indices only; an explicit one stores the
/// coordinate sequences as integers.
#[derive(Clone, Debug)]
pub struct StretchedGrid {
    n: usize,
    axes: Option<[Vec<BigInt>; 3]>,
}

impl StretchedGrid {
    pub fn symbolic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("grid needs at least one point per axis".into()));
        }
        Ok(StretchedGrid { n, axes: None })
    }

    /// `x₁ⱼ = j` and `xᵢⱼ = 2^(base_bits·(j−1)·m^(i−1))` for `i = 2, 3`.
    pub fn power(n: usize, base_bits: u64, m: u64) -> Result<Self> {
        if n == 0 || base_bits == 0 || m == 0 {
            return Err(Error::OutOfRange("grid size, base and growth must be positive".into()));
        }
        let exp = |j: usize, i: u32| base_bits * (j as u64 - 1) * m.pow(i);
        let axes = [
            (1..=n).map(BigInt::from).collect(),
            (1..=n).map(|j| BigInt::one() << exp(j, 1)).collect(),
            (1..=n).map(|j| BigInt::one() << exp(j, 2)).collect(),
        ];
        Ok(StretchedGrid { n, axes: Some(axes) })
    }

    /// Grid `G_s(5n)` for an `n`-vertex drawing: base `2⁶⁴`, growth `16n`.
    pub fn standard(n: usize) -> Result<Self> {
        Self::power(5 * n, 64, 16 * n as u64)
    }

    pub fn custom(axes: [Vec<BigInt>; 3]) -> Result<Self> {
        let n = axes[0].len();
        if n == 0 || axes.iter().any(|a| a.len() != n) {
            return Err(Error::Validation {
                location: "axes".into(),
                message: "axes must be nonempty and of equal length".into(),
            });
        }
        for (i, a) in axes.iter().enumerate() {
            if !a[0].is_one() || a.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Validation {
                    location: format!("axes[{i}]"),
                    message: "sequence must start at 1 and increase strictly".into(),
                });
            }
        }
        Ok(StretchedGrid { n, axes: Some(axes) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_symbolic(&self) -> bool {
        self.axes.is_none()
    }

    pub fn axis(&self, c: usize) -> Option<&[BigInt]> {
        self.axes.as_ref().map(|a| a[c].as_slice())
    }

    /// Coordinate value of index `i` on axis `c`; the index itself in symbolic mode.
    pub fn value(&self, c: usize, i: usize) -> BigInt {
        match &self.axes {
            Some(a) => a[c][i - 1].clone(),
            None => BigInt::from(i),
        }
    }

    pub fn point(&self, p: GridPoint) -> [BigInt; 3] {
        std::array::from_fn(|c| self.value(c, p.idx[c]))
    }

    pub fn check(&self, p: GridPoint) -> Result<()> {
        match p.idx.iter().position(|&i| i == 0 || i > self.n) {
            Some(c) => Err(Error::OutOfRange(format!(
                "grid index {} on axis {} outside 1..={}",
                p.idx[c],
                c + 1,
                self.n
            ))),
            None => Ok(()),
        }
    }

    fn values(&self, c: usize) -> Cow<'_, [BigInt]> {
        match &self.axes {
            Some(a) => Cow::Borrowed(&a[c]),
            None => Cow::Owned((1..=self.n).map(BigInt::from).collect()),
        }
    }
}

/// Least `k` such that `a` and `b` are `k`-close.
pub fn grid_distance(g: &StretchedGrid, a: GridPoint, b: GridPoint) -> Result<u64> {
    g.check(a)?;
    g.check(b)?;
    Ok((0..3).map(|c| a.idx[c].abs_diff(b.idx[c]) as u64).max().unwrap().max(1))
}

/// Point of the bounding box with coordinates `num / den`, `den > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoxPoint {
    pub num: [BigInt; 3],
    pub den: BigInt,
}

impl BoxPoint {
    pub fn from_ints(v: [BigInt; 3]) -> Self {
        BoxPoint { num: v, den: BigInt::one() }
    }

    /// `a + (k/steps)(b − a)`.
    pub fn interpolate(a: &[BigInt; 3], b: &[BigInt; 3], k: u64, steps: u64) -> Self {
        let (k, s) = (BigInt::from(k), BigInt::from(steps));
        BoxPoint {
            num: std::array::from_fn(|c| &a[c] * (&s - &k) + &b[c] * &k),
            den: s,
        }
    }
}

/// Number of grid values strictly below / at most `num/den`.
fn rank(vals: &[BigInt], num: &BigInt, den: &BigInt) -> (usize, usize) {
    let one = BigInt::one();
    let below = vals.partition_point(|g| cmp_frac(g, &one, num, den) == Ordering::Less);
    let at_most = vals.partition_point(|g| cmp_frac(g, &one, num, den) != Ordering::Greater);
    (below, at_most)
}

/// Least `k` such that the two box points are `k`-close.
pub fn point_distance(g: &StretchedGrid, p: &BoxPoint, q: &BoxPoint) -> u64 {
    (0..3)
        .map(|c| {
            let vals = g.values(c);
            let (pb, pa) = rank(&vals, &p.num[c], &p.den);
            let (qb, qa) = rank(&vals, &q.num[c], &q.den);
            let between = if pa <= qb { qb - pa } else { pb.saturating_sub(qa) };
            between as u64 + 1
        })
        .max()
        .unwrap()
}

/// Whether `p` is 1-close to some point of the axis-parallel piece
/// `from`–`to` (integer endpoints differing in one coordinate).
pub fn close_to_piece(g: &StretchedGrid, p: &BoxPoint, from: &[BigInt; 3], to: &[BigInt; 3]) -> bool {
    let num: [BigInt; 3] = std::array::from_fn(|c| {
        let (lo, hi) = if from[c] <= to[c] { (&from[c], &to[c]) } else { (&to[c], &from[c]) };
        // Nearest point of the piece in each coordinate.
        let v = &p.num[c];
        if *v < lo * &p.den {
            lo * &p.den
        } else if *v > hi * &p.den {
            hi * &p.den
        } else {
            v.clone()
        }
    });
    let near = BoxPoint { num, den: p.den.clone() };
    point_distance(g, p, &near) <= 1
}

/// Closed range of values that are 1-close to `num/den` on one axis.
fn close_range(vals: &[BigInt], num: &BigInt, den: &BigInt) -> (BigInt, BigInt) {
    let (below, at_most) = rank(vals, num, den);
    let last = vals.len() - 1;
    let at = |i: Option<usize>, fallback: usize| vals[i.unwrap_or(fallback).min(last)].clone();
    let lo = at(below.checked_sub(1), below);
    let hi = if at_most <= last { vals[at_most].clone() } else { at(None, at_most.saturating_sub(1)) };
    (lo, hi)
}

/// Approximate `log₂ |x|`.
fn log2(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 60 {
        return x.magnitude().to_f64().unwrap().log2();
    }
    let top = (x.magnitude() >> (bits - 60)).to_f64().unwrap();
    top.log2() + (bits - 60) as f64
}

/// Compares `a/b` with `c/d` for `b, d > 0`.
fn cmp_frac(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Ordering {
    let (sa, sc) = (a.signum(), c.signum());
    if sa != sc || sa.is_zero() {
        return sa.cmp(&sc);
    }
    let diff = (log2(a) - log2(b)) - (log2(c) - log2(d));
    if diff.abs() > 1e-6 {
        let mag = if diff > 0.0 { Ordering::Greater } else { Ordering::Less };
        return if sa.is_positive() { mag } else { mag.reverse() };
    }
    (a * d).cmp(&(c * b))
}

/// Whether `q` is 1-close to some point of the segment `ab`.
pub fn close_to_segment(g: &StretchedGrid, q: &BoxPoint, a: &[BigInt; 3], b: &[BigInt; 3]) -> bool {
    // Feasible parameters s ∈ [0, 1] as fractions with positive denominators.
    let mut lo = (BigInt::zero(), BigInt::one());
    let mut hi = (BigInt::one(), BigInt::one());
    for c in 0..3 {
        let vals = g.values(c);
        let (l, h) = close_range(&vals, &q.num[c], &q.den);
        let dir = &b[c] - &a[c];
        if dir.is_zero() {
            if a[c] < l || a[c] > h {
                return false;
            }
            continue;
        }
        let (mut s0, mut s1) = ((&l - &a[c], dir.clone()), (&h - &a[c], dir.clone()));
        if dir.is_negative() {
            s0 = (-s0.0, -s0.1);
            s1 = (-s1.0, -s1.1);
            std::mem::swap(&mut s0, &mut s1);
        }
        if cmp_frac(&s0.0, &s0.1, &lo.0, &lo.1) == Ordering::Greater {
            lo = s0;
        }
        if cmp_frac(&s1.0, &s1.1, &hi.0, &hi.1) == Ordering::Less {
            hi = s1;
        }
    }
    cmp_frac(&lo.0, &lo.1, &hi.0, &hi.1) != Ordering::Greater
}
