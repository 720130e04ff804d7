//! Exhaustive search for sign-constant products of given sizes.

use crate::error::{Error, Result};

use super::poly::SparsePolynomial;
use super::yaoyao::PointMultiset;

/// Largest number of enumerated subset tuples.
pub const BRUTE_FORCE_LIMIT: f64 = 1e7;

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Index subsets of given sizes, one per multiset, with `f` of constant sign on their product.
///
/// Subsets of every block but the one with the most candidate subsets are enumerated;
/// the remaining block is then filled greedily, which is exact.
pub fn brute_force_same_type(
    multisets: &[PointMultiset],
    f: &SparsePolynomial,
    sizes: &[usize],
) -> Result<Option<Vec<Vec<usize>>>> {
    let k = multisets.len();
    if sizes.len() != k || f.blocks().len() != k {
        return Err(Error::PreconditionViolated("sizes and blocks must match the multisets".into()));
    }
    if sizes.iter().zip(multisets).any(|(&s, m)| s > m.len()) {
        return Ok(None);
    }
    let space: Vec<f64> = sizes.iter().zip(multisets).map(|(&s, m)| binomial(m.len(), s)).collect();
    let free = (0..k).max_by(|&a, &b| space[a].total_cmp(&space[b])).unwrap();
    let total: f64 = (0..k).filter(|&b| b != free).map(|b| space[b]).product();
    if total > BRUTE_FORCE_LIMIT {
        return Err(Error::SearchSpaceTooLarge(format!("{total:.3e} subset tuples")));
    }
    let fixed: Vec<usize> = (0..k).filter(|&b| b != free).collect();
    let mut combos: Vec<Vec<usize>> = fixed.iter().map(|&b| (0..sizes[b]).collect()).collect();
    loop {
        for s in [1i8, -1, 0] {
            let good: Vec<usize> = (0..multisets[free].len())
                .filter(|&q| all_sign(f, multisets, &fixed, &combos, free, q, s))
                .collect();
            if good.len() >= sizes[free] {
                let mut out = vec![Vec::new(); k];
                for (c, &b) in combos.iter().zip(&fixed) {
                    out[b] = c.clone();
                }
                out[free] = good[..sizes[free]].to_vec();
                return Ok(Some(out));
            }
        }
        if !advance(&mut combos, &fixed, multisets) {
            return Ok(None);
        }
    }
}

fn all_sign(
    f: &SparsePolynomial,
    ms: &[PointMultiset],
    fixed: &[usize],
    combos: &[Vec<usize>],
    free: usize,
    q: usize,
    s: i8,
) -> bool {
    let k = ms.len();
    let mut idx = vec![0usize; fixed.len()];
    loop {
        let mut pt = vec![ms[free].point(q); k];
        for (t, &b) in fixed.iter().enumerate() {
            pt[b] = ms[b].point(combos[t][idx[t]]);
        }
        if f.sign_at(&pt) != s {
            return false;
        }
        let mut t = fixed.len();
        loop {
            if t == 0 {
                return true;
            }
            t -= 1;
            idx[t] += 1;
            if idx[t] < combos[t].len() {
                break;
            }
            idx[t] = 0;
        }
    }
}

/// Next tuple of combinations in lexicographic order.
fn advance(combos: &mut [Vec<usize>], fixed: &[usize], ms: &[PointMultiset]) -> bool {
    for t in (0..combos.len()).rev() {
        if next_combination(&mut combos[t], ms[fixed[t]].len()) {
            return true;
        }
        let s = combos[t].len();
        combos[t] = (0..s).collect();
    }
    false
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let s = c.len();
    for i in (0..s).rev() {
        if c[i] < n - s + i {
            c[i] += 1;
            for j in i + 1..s {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
