//! Same-type refinement of point multisets for a family of sign conditions.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::Rational;

use super::poly::{block_term_count, linearize_last_block, SparsePolynomial};
use super::yaoyao::{yao_yao_partition, PointMultiset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SameType {
    /// Retained point indices per multiset.
    pub retained: Vec<Vec<usize>>,
    /// Constant sign of each polynomial on the retained product.
    pub signs: Vec<i8>,
    /// `ε = 3^(−exponent)`.
    pub epsilon_exponent: BigUint,
}

/// Exponent `Σ_j 3^(t₂(f_j)+⋯+t_k(f_j))` of the guaranteed fraction.
pub fn epsilon_exponent(polys: &[SparsePolynomial]) -> Result<BigUint> {
    let mut e = BigUint::zero();
    for f in polys {
        let mut t = 0u32;
        for i in 1..f.blocks().len() {
            t += block_term_count(f, i)? as u32;
        }
        e += BigUint::from(3u32).pow(t);
    }
    Ok(e)
}

/// Whether `kept ≥ 3^(−e)·total`.
pub fn meets_epsilon(kept: usize, total: usize, e: &BigUint) -> bool {
    match e.to_u32() {
        Some(e) if e < 64 => BigUint::from(kept) * BigUint::from(3u32).pow(e) >= BigUint::from(total),
        _ => kept >= 1 || total == 0,
    }
}

/// Most frequent sign of a one-block polynomial; nonzero signs win ties against zero,
/// and between `+` and `−` the class holding the earliest point wins.
fn base_case(f: &SparsePolynomial, ms: &[PointMultiset], set: &[usize]) -> (Vec<usize>, i8) {
    let mut classes: [Vec<usize>; 3] = Default::default();
    for &i in set {
        let s = f.sign_at(&[ms[0].point(i)]);
        classes[(s + 1) as usize].push(i);
    }
    let rank = |s: i8| {
        let c = &classes[(s + 1) as usize];
        (c.len(), s != 0, std::cmp::Reverse(c.first().copied().unwrap_or(usize::MAX)))
    };
    let s = [1i8, -1, 0].into_iter().max_by_key(|&s| rank(s)).unwrap();
    (classes[(s + 1) as usize].clone(), s)
}

/// Refines `sets` (one per block of `f`) so that `f` has constant sign.
fn refine_one(f: &SparsePolynomial, ms: &[PointMultiset], sets: &[Vec<usize>]) -> Result<(Vec<Vec<usize>>, i8)> {
    let k = f.blocks().len();
    if k == 1 {
        let (s0, sign) = base_case(f, ms, &sets[0]);
        return Ok((vec![s0], sign));
    }
    let lin = linearize_last_block(f);
    let t = lin.t();
    if t > 2 {
        return Err(Error::PreconditionViolated(format!(
            "last block linearizes to dimension {t}, at most 2 supported"
        )));
    }
    let last = &sets[k - 1];
    if t == 0 {
        let g = f.drop_last().expect("no last-block terms");
        let (mut out, sign) = refine_one(&g, ms, &sets[..k - 1])?;
        out.push(last.clone());
        return Ok((out, sign));
    }
    if last.len() < 1 << t {
        // Any single point keeps the required fraction.
        let q = last[0];
        let g = f.substitute_last(ms[k - 1].point(q));
        let (mut out, sign) = refine_one(&g, ms, &sets[..k - 1])?;
        out.push(vec![q]);
        return Ok((out, sign));
    }
    let z: Vec<Vec<Rational>> = last.iter().map(|&i| lin.map(ms[k - 1].point(i))).collect();
    let yy = yao_yao_partition(&PointMultiset::new(t, z.clone())?)?;
    let verts = yy.vertices();
    let gs: Vec<SparsePolynomial> = verts.iter().map(|v| lin.linear.substitute_last(v)).collect();
    let (mut out, eps) = refine_all(&gs, ms, &sets[..k - 1])?;
    // A point in a cell whose vertex signs are one-sided has a determined sign:
    // zero on the face spanned by zero-sign vertices, the common sign elsewhere.
    let one_sided: Vec<(usize, i8)> = (0..yy.cells.len())
        .filter_map(|j| {
            let cv = yy.cell_vertices(j);
            if cv.iter().all(|&m| eps[m] >= 0) {
                Some((j, 1))
            } else if cv.iter().all(|&m| eps[m] <= 0) {
                Some((j, -1))
            } else {
                None
            }
        })
        .collect();
    if one_sided.is_empty() {
        return Err(Error::Invariant("no partition cell lies on one side of the hyperplane".into()));
    }
    let mut classes: [Vec<usize>; 3] = Default::default();
    for (pos, &i) in last.iter().enumerate() {
        let determined = one_sided.iter().find_map(|&(j, s)| {
            let lam = yy.barycentric(j, &z[pos])?;
            let cv = yy.cell_vertices(j);
            let on_face = cv.iter().zip(&lam).all(|(&m, l)| eps[m] == 0 || l.is_zero());
            Some(if on_face { 0 } else { s })
        });
        if let Some(s) = determined {
            classes[(s + 1) as usize].push(i);
        }
    }
    let rank = |s: i8| {
        let c = &classes[(s + 1) as usize];
        (c.len(), s == 0, std::cmp::Reverse(c.first().copied().unwrap_or(usize::MAX)))
    };
    let sign = [0i8, 1, -1].into_iter().max_by_key(|&s| rank(s)).unwrap();
    let kept = std::mem::take(&mut classes[(sign + 1) as usize]);
    out.push(kept);
    Ok((out, sign))
}

/// Refines for each polynomial in turn.
fn refine_all(fs: &[SparsePolynomial], ms: &[PointMultiset], sets: &[Vec<usize>]) -> Result<(Vec<Vec<usize>>, Vec<i8>)> {
    let mut cur = sets.to_vec();
    let mut signs = Vec::with_capacity(fs.len());
    for f in fs {
        let (next, s) = refine_one(f, ms, &cur)?;
        cur = next;
        signs.push(s);
    }
    Ok((cur, signs))
}

/// Whether every polynomial has sign `signs[j]` on the whole product of `sets`.
pub fn verify_sign_constancy(
    polys: &[SparsePolynomial],
    ms: &[PointMultiset],
    sets: &[Vec<usize>],
    signs: &[i8],
) -> bool {
    let k = sets.len();
    if sets.iter().any(|s| s.is_empty()) {
        return true;
    }
    let at = |b: usize, i: usize| ms[b].point(i);
    sets[0].par_iter().all(|&first| {
        let mut idx = vec![0usize; k];
        loop {
            let mut pt: Vec<&[Rational]> = vec![at(0, first)];
            pt.extend((1..k).map(|b| at(b, sets[b][idx[b]])));
            if polys.iter().zip(signs).any(|(f, &s)| f.sign_at(&pt) != s) {
                return false;
            }
            let mut b = k - 1;
            loop {
                if b == 0 {
                    return true;
                }
                idx[b] += 1;
                if idx[b] < sets[b].len() {
                    break;
                }
                idx[b] = 0;
                b -= 1;
            }
        }
    })
}

/// Large sub-multisets on whose product every polynomial has constant sign.
pub fn same_type_refine(multisets: &[PointMultiset], polys: &[SparsePolynomial]) -> Result<SameType> {
    let k = multisets.len();
    if k == 0 {
        return Err(Error::PreconditionViolated("need at least one multiset".into()));
    }
    for (b, m) in multisets.iter().enumerate() {
        if m.is_empty() {
            return Err(Error::validation(format!("multisets[{b}]"), "empty multiset"));
        }
    }
    let dims: Vec<usize> = multisets.iter().map(|m| m.dim()).collect();
    for (j, f) in polys.iter().enumerate() {
        if f.blocks() != dims {
            return Err(Error::validation(
                format!("polys[{j}].blocks"),
                format!("{:?} does not match multiset dimensions {dims:?}", f.blocks()),
            ));
        }
    }
    let all: Vec<Vec<usize>> = multisets.iter().map(|m| (0..m.len()).collect()).collect();
    let (retained, signs) = refine_all(polys, multisets, &all)?;
    if !verify_sign_constancy(polys, multisets, &retained, &signs) {
        return Err(Error::Invariant("refined product is not sign-constant".into()));
    }
    let e = epsilon_exponent(polys)?;
    for (b, r) in retained.iter().enumerate() {
        if !meets_epsilon(r.len(), multisets[b].len(), &e) {
            return Err(Error::Invariant(format!("multiset {b} kept {} of {}, below ε", r.len(), multisets[b].len())));
        }
    }
    Ok(SameType { retained, signs, epsilon_exponent: e })
}

/// `3^(−e)` as an exact rational, for small exponents.
pub fn epsilon_value(e: &BigUint) -> Option<Rational> {
    let e = e.to_u32().filter(|&e| e <= 4096)?;
    Some(Rational::new(One::one(), num_bigint::BigInt::from(3u32).pow(e)))
}
