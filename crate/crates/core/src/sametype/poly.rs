//! Sparse polynomials over blocks of variables.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::scalar::{format_rational, parse_rational};
use crate::geom::Rational;

/// Polynomial in variables grouped into blocks of sizes `blocks`.
///
/// Monomials are exponent vectors over all variables, block by block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolynomial {
    blocks: Vec<usize>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SparsePolynomial {
    pub fn new(blocks: Vec<usize>, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<Self> {
        let nvars: usize = blocks.iter().sum();
        let mut map: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (k, (exp, c)) in terms.into_iter().enumerate() {
            if exp.len() != nvars {
                return Err(Error::validation(
                    format!("monomials[{k}]"),
                    format!("expected {nvars} exponents, got {}", exp.len()),
                ));
            }
            *map.entry(exp).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(SparsePolynomial { blocks, terms: map })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn nvars(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Variable index range of block `i`.
    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = self.blocks[..i].iter().sum();
        start..start + self.blocks[i]
    }

    /// Value at the concatenation of one point per block.
    pub fn eval(&self, point: &[&[Rational]]) -> Rational {
        let vars: Vec<&Rational> = point.iter().flat_map(|p| p.iter()).collect();
        assert_eq!(vars.len(), self.nvars(), "point dimension");
        let mut sum = Rational::zero();
        for (exp, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in vars.iter().zip(exp) {
                for _ in 0..e {
                    t *= *x;
                }
            }
            sum += t;
        }
        sum
    }

    pub fn sign_at(&self, point: &[&[Rational]]) -> i8 {
        let v = self.eval(point);
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn scale(&self, s: &Rational) -> SparsePolynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * s));
        SparsePolynomial::new(self.blocks.clone(), terms).expect("same shape")
    }

    /// Substitutes fixed values for the last block, leaving the others.
    pub fn substitute_last(&self, values: &[Rational]) -> SparsePolynomial {
        let k = self.blocks.len();
        let r = self.block_range(k - 1);
        assert_eq!(values.len(), r.len(), "last block dimension");
        let terms = self.terms.iter().map(|(exp, c)| {
            let mut t = c.clone();
            for (x, &e) in values.iter().zip(&exp[r.clone()]) {
                for _ in 0..e {
                    t *= x;
                }
            }
            (exp[..r.start].to_vec(), t)
        });
        SparsePolynomial::new(self.blocks[..k - 1].to_vec(), terms).expect("same shape")
    }

    /// Drops the last block; only valid when no monomial uses it.
    pub fn drop_last(&self) -> Option<SparsePolynomial> {
        let r = self.block_range(self.blocks.len() - 1);
        if self.terms.keys().any(|e| e[r.clone()].iter().any(|&x| x > 0)) {
            return None;
        }
        let terms = self.terms.iter().map(|(e, c)| (e[..r.start].to_vec(), c.clone()));
        Some(SparsePolynomial::new(self.blocks[..self.blocks.len() - 1].to_vec(), terms).expect("same shape"))
    }

    pub fn to_doc(&self) -> PolynomialDoc {
        PolynomialDoc {
            blocks: self.blocks.clone(),
            monomials: self
                .terms
                .iter()
                .map(|(exp, c)| MonomialDoc {
                    coeff: format_rational(c),
                    exponents: exp
                        .iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(i, &e)| (format!("x{}", i + 1), e))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &PolynomialDoc) -> Result<Self> {
        let nvars: usize = doc.blocks.iter().sum();
        let mut terms = Vec::new();
        for (k, m) in doc.monomials.iter().enumerate() {
            let mut exp = vec![0u32; nvars];
            for (name, &e) in &m.exponents {
                let i = name
                    .strip_prefix('x')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|&i| (1..=nvars).contains(&i))
                    .ok_or_else(|| Error::validation(format!("monomials[{k}].exponents"), format!("unknown variable {name:?}")))?;
                exp[i - 1] = e;
            }
            terms.push((exp, parse_rational(&m.coeff)?));
        }
        SparsePolynomial::new(doc.blocks.clone(), terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialDoc {
    pub coeff: String,
    pub exponents: BTreeMap<String, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub blocks: Vec<usize>,
    pub monomials: Vec<MonomialDoc>,
}

/// Distinct monomials of `f` in the variables of block `i`, constant included.
pub fn block_term_count(f: &SparsePolynomial, i: usize) -> Result<usize> {
    if i >= f.blocks.len() {
        return Err(Error::OutOfRange(format!("block {i} of {}", f.blocks.len())));
    }
    let r = f.block_range(i);
    Ok(f.terms.keys().map(|e| &e[r.clone()]).collect::<BTreeSet<_>>().len())
}

/// `f = f′ ∘ π` with `f′` affine in its last block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linearization {
    /// Non-constant monomials of the last block, as exponent vectors over its variables.
    pub monomials: Vec<Vec<u32>>,
    pub linear: SparsePolynomial,
}

impl Linearization {
    pub fn t(&self) -> usize {
        self.monomials.len()
    }

    /// `π(x)` for a point of the last block.
    pub fn map(&self, x: &[Rational]) -> Vec<Rational> {
        self.monomials
            .iter()
            .map(|exp| {
                let mut t = Rational::one();
                for (v, &e) in x.iter().zip(exp) {
                    for _ in 0..e {
                        t *= v;
                    }
                }
                t
            })
            .collect()
    }
}

/// Linearizes `f` in its last block.
pub fn linearize_last_block(f: &SparsePolynomial) -> Linearization {
    let k = f.blocks.len();
    let r = f.block_range(k - 1);
    let mut monomials: Vec<Vec<u32>> = f
        .terms
        .keys()
        .map(|e| e[r.clone()].to_vec())
        .filter(|e| e.iter().any(|&x| x > 0))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    monomials.sort_by(|a, b| {
        let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    let t = monomials.len();
    let mut blocks = f.blocks[..k - 1].to_vec();
    blocks.push(t);
    let terms = f.terms.iter().map(|(exp, c)| {
        let mut e = exp[..r.start].to_vec();
        let mut z = vec![0u32; t];
        if let Some(j) = monomials.iter().position(|m| m[..] == exp[r.clone()]) {
            z[j] = 1;
        }
        e.extend(z);
        (e, c.clone())
    });
    let linear = SparsePolynomial::new(blocks, terms).expect("same shape");
    let lin = Linearization { monomials, linear };
    assert_eq!(compose(&lin, f.blocks[k - 1]), *f, "linearization identity");
    lin
}

/// `f′ ∘ π` expanded back into the original variables.
fn compose(lin: &Linearization, d: usize) -> SparsePolynomial {
    let f = &lin.linear;
    let k = f.blocks.len();
    let r = f.block_range(k - 1);
    let mut blocks = f.blocks[..k - 1].to_vec();
    blocks.push(d);
    let terms = f.terms.iter().map(|(exp, c)| {
        let mut e = exp[..r.start].to_vec();
        match exp[r.clone()].iter().position(|&x| x > 0) {
            Some(j) => e.extend(&lin.monomials[j]),
            None => e.extend(std::iter::repeat_n(0, d)),
        }
        (e, c.clone())
    });
    SparsePolynomial::new(blocks, terms).expect("same shape")
}
