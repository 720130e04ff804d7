//! Stair-paths in arbitrary dimension.

/// Axis-parallel closed segment of a stair-path.
#[derive(Clone, Debug, PartialEq)]
pub struct Piece<T> {
    pub axis: usize,
    pub from: Vec<T>,
    pub to: Vec<T>,
}

/// Stair-path `σ(a, b)`, oriented from `a` to `b`.
#[derive(Clone, Debug, PartialEq)]
pub struct StairPath<T> {
    pub a: Vec<T>,
    pub b: Vec<T>,
    pub pieces: Vec<Piece<T>>,
}

impl<T: Clone + PartialOrd> StairPath<T> {
    /// Corner points from `a` to `b`.
    pub fn corners(&self) -> Vec<Vec<T>> {
        let mut out = vec![self.a.clone()];
        out.extend(self.pieces.iter().map(|p| p.to.clone()));
        out
    }
}

/// Builds `σ(a, b)`: the last coordinate is resolved first, from the
/// endpoint with the smaller last coordinate. Zero-length pieces are dropped.
pub fn stair_path<T: Clone + PartialOrd>(a: &[T], b: &[T]) -> StairPath<T> {
    assert_eq!(a.len(), b.len(), "points of different dimension");
    let mut pieces = Vec::new();
    build(a.to_vec(), b.to_vec(), a.len(), &mut pieces);
    // `build` may have walked from b to a.
    let starts_at_a = pieces.first().map_or(true, |p: &Piece<T>| p.from.as_slice() == a);
    if !starts_at_a {
        pieces.reverse();
        for p in &mut pieces {
            std::mem::swap(&mut p.from, &mut p.to);
        }
    }
    StairPath { a: a.to_vec(), b: b.to_vec(), pieces }
}

/// Appends the pieces of σ restricted to the first `d` coordinates; the
/// remaining coordinates of `a` and `b` agree.
fn build<T: Clone + PartialOrd>(mut a: Vec<T>, mut b: Vec<T>, d: usize, out: &mut Vec<Piece<T>>) {
    if d == 0 {
        return;
    }
    let k = d - 1;
    if d > 1 && a[k] > b[k] {
        std::mem::swap(&mut a, &mut b);
    }
    let mut a1 = a.clone();
    a1[k] = b[k].clone();
    let mut rest = Vec::new();
    build(a1.clone(), b.clone(), k, &mut rest);
    // The recursion may orient its pieces from b; chain them from a1.
    if rest.first().is_some_and(|p| p.from != a1) {
        rest.reverse();
        for p in &mut rest {
            std::mem::swap(&mut p.from, &mut p.to);
        }
    }
    let mut walk = Vec::new();
    if a[k] != a1[k] {
        walk.push(Piece { axis: k, from: a, to: a1 });
    }
    walk.extend(rest);
    out.extend(walk);
}
