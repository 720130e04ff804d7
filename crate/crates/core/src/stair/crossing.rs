//! Stair-lines and the space stair-crossing decision for diagonal stair-paths.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{format_rational, Rational};

/// The three stair-line families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StairLineKind {
    /// `σ((x₀,y₀,0), (+∞,y₁,z₁))`
    L1,
    /// `σ((x₀,y₀,0), (−∞,y₁,z₁))`
    L2,
    /// `σ((x₀,y₀,0), (x₁,−∞,z₁))`
    L3,
}

/// Stair-line with coordinates `(x₀, y₀, c, z₁)`, where `c` is `y₁` for
/// `L1`/`L2` and `x₁` for `L3`.
#[derive(Clone, Debug, PartialEq)]
pub struct StairLine {
    pub kind: StairLineKind,
    pub coords: [Rational; 4],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StairLineDoc {
    pub kind: StairLineKind,
    pub coords: [String; 4],
}

impl StairLine {
    pub fn to_doc(&self) -> StairLineDoc {
        StairLineDoc { kind: self.kind, coords: self.coords.clone().map(|c| format_rational(&c)) }
    }
}

#[derive(Clone, Debug)]
pub struct StairCrossing {
    pub exists: bool,
    pub witness: Option<StairLine>,
}

const INF: i64 = 1 << 40;

/// Closed axis-parallel box, possibly unbounded.
#[derive(Clone, Copy, Debug)]
struct Cell {
    lo: [i64; 3],
    hi: [i64; 3],
}

impl Cell {
    fn seg(from: [i64; 3], to: [i64; 3]) -> Cell {
        Cell {
            lo: std::array::from_fn(|c| from[c].min(to[c])),
            hi: std::array::from_fn(|c| from[c].max(to[c])),
        }
    }

    fn meets(&self, o: &Cell) -> bool {
        (0..3).all(|c| self.lo[c] <= o.hi[c] && o.lo[c] <= self.hi[c])
    }
}

/// Pieces of `σ((u,u,u), (v,v,v))` for `u < v`.
fn diagonal_cells(u: i64, v: i64) -> [Cell; 3] {
    [
        Cell::seg([u, u, u], [u, u, v]),
        Cell::seg([u, u, v], [u, v, v]),
        Cell::seg([u, v, v], [v, v, v]),
    ]
}

/// Pieces of a stair-line; the base height 0 lies below every coordinate.
fn line_cells(kind: StairLineKind, x0: i64, y0: i64, c: i64, z1: i64) -> Vec<Cell> {
    let mut out = vec![Cell::seg([x0, y0, 0], [x0, y0, z1])];
    match kind {
        StairLineKind::L1 | StairLineKind::L2 => {
            let end = if kind == StairLineKind::L1 { INF } else { -INF };
            let y1 = c;
            if y0 <= y1 {
                out.push(Cell::seg([x0, y0, z1], [x0, y1, z1]));
                out.push(Cell::seg([x0, y1, z1], [end, y1, z1]));
            } else {
                out.push(Cell::seg([x0, y0, z1], [end, y0, z1]));
            }
        }
        StairLineKind::L3 => {
            let x1 = c;
            out.push(Cell::seg([x0, y0, z1], [x1, y0, z1]));
            out.push(Cell::seg([x1, y0, z1], [x1, -INF, z1]));
        }
    }
    out
}

/// Sorted anchor values after checking they are positive and distinct.
fn sorted_anchors(anchors: &[(Rational, Rational); 4]) -> Result<Vec<Rational>> {
    let mut all: Vec<Rational> = anchors.iter().flat_map(|(s, t)| [s.clone(), t.clone()]).collect();
    if all.iter().any(|v| !v.is_positive()) {
        return Err(Error::Validation {
            location: "anchors".into(),
            message: "anchor values must be positive".into(),
        });
    }
    all.sort();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Validation {
            location: "anchors".into(),
            message: "the eight anchor values must be distinct".into(),
        });
    }
    Ok(all)
}

/// Decides whether some stair-line meets the four diagonal stair-paths
/// `σ((sᵢ,sᵢ,sᵢ), (tᵢ,tᵢ,tᵢ))`.
///
/// Incidence depends only on the order of the stair-line coordinates
/// relative to the anchors, so coordinates range over the anchors, one value
/// per gap between consecutive anchors, and one value beyond each end.
pub fn stair_crossing_exists(anchors: &[(Rational, Rational); 4]) -> Result<StairCrossing> {
    let sorted = sorted_anchors(anchors)?;
    let rank = |v: &Rational| 2 * sorted.iter().position(|x| x == v).unwrap() as i64 + 2;
    let paths: Vec<[Cell; 3]> = anchors
        .iter()
        .map(|(s, t)| {
            let (a, b) = (rank(s), rank(t));
            diagonal_cells(a.min(b), a.max(b))
        })
        .collect();
    let back = |r: i64| -> Rational {
        match r {
            1 => &sorted[0] / Rational::from_integer(2.into()),
            17 => &sorted[7] + Rational::from_integer(1.into()),
            r if r % 2 == 0 => sorted[(r / 2 - 1) as usize].clone(),
            r => {
                let i = (r / 2 - 1) as usize;
                (&sorted[i] + &sorted[i + 1]) / Rational::from_integer(2.into())
            }
        }
    };
    for kind in [StairLineKind::L1, StairLineKind::L2, StairLineKind::L3] {
        for x0 in 1..=17 {
            for y0 in 1..=17 {
                for c in 1..=17 {
                    for z1 in 1..=17 {
                        let cells = line_cells(kind, x0, y0, c, z1);
                        let hit = paths.iter().all(|p| p.iter().any(|pc| cells.iter().any(|lc| lc.meets(pc))));
                        if hit {
                            let coords = [x0, y0, c, z1].map(back);
                            return Ok(StairCrossing {
                                exists: true,
                                witness: Some(StairLine { kind, coords }),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(StairCrossing { exists: false, witness: None })
}

/// Every interval meets at least one other interval.
pub fn pairing_condition(anchors: &[(Rational, Rational); 4]) -> bool {
    let iv: Vec<(Rational, Rational)> = anchors
        .iter()
        .map(|(s, t)| if s <= t { (s.clone(), t.clone()) } else { (t.clone(), s.clone()) })
        .collect();
    (0..4).all(|i| (0..4).any(|j| j != i && iv[i].0 <= iv[j].1 && iv[j].0 <= iv[i].1))
}

/// Whether a stair-line meets the diagonal stair-path between `s` and `t`,
/// evaluated directly on rational coordinates.
pub fn line_meets_diagonal(line: &StairLine, s: &Rational, t: &Rational) -> bool {
    let (u, v) = if s <= t { (s, t) } else { (t, s) };
    let mut vals: Vec<Rational> = line.coords.to_vec();
    vals.push(u.clone());
    vals.push(v.clone());
    vals.push(Rational::zero());
    vals.sort();
    vals.dedup();
    let r = |x: &Rational| 2 * vals.iter().position(|y| y == x).unwrap() as i64 + 2;
    let [x0, y0, c, z1] = line.coords.clone().map(|x| r(&x));
    let mut cells = line_cells(line.kind, x0, y0, c, z1);
    // Re-base the vertical piece at the rank of 0.
    cells[0].lo[2] = r(&Rational::zero()).min(z1);
    cells[0].hi[2] = r(&Rational::zero()).max(z1);
    diagonal_cells(r(u), r(v)).iter().any(|pc| cells.iter().any(|lc| lc.meets(pc)))
}
