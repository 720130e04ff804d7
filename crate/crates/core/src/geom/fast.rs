//! Floating-point prefilters for the transversal predicate.
//!
//! A verdict is `Yes` or `No` only when every quantity it depends on clears
//! the tolerance by a wide margin; anything close to a decision boundary is
//! reported as `Unsure` and must be settled by the exact kernel.

use super::vector::Segment3;

pub type F3 = [f64; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unsure,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FSeg {
    pub p: F3,
    pub q: F3,
}

/// Affine map sending a point cloud into `[-1, 1]³`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Normalizer {
    center: F3,
    inv_scale: f64,
}

impl Normalizer {
    pub fn fit<'a>(points: impl IntoIterator<Item = &'a F3>) -> Self {
        let mut lo = [f64::INFINITY; 3];
        let mut hi = [f64::NEG_INFINITY; 3];
        for p in points {
            for i in 0..3 {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        if !lo[0].is_finite() {
            return Normalizer {
                center: [0.0; 3],
                inv_scale: 1.0,
            };
        }
        let center = [0, 1, 2].map(|i| 0.5 * (lo[i] + hi[i]));
        let half = (0..3).map(|i| 0.5 * (hi[i] - lo[i])).fold(0.0, f64::max);
        Normalizer {
            center,
            inv_scale: if half > 0.0 { 1.0 / half } else { 1.0 },
        }
    }

    pub fn length(&self, l: f64) -> f64 {
        l * self.inv_scale
    }

    pub fn apply(&self, p: &F3) -> F3 {
        [0, 1, 2].map(|i| (p[i] - self.center[i]) * self.inv_scale)
    }

    pub fn segment(&self, s: &Segment3) -> FSeg {
        FSeg {
            p: self.apply(&s.p.approx()),
            q: self.apply(&s.q.approx()),
        }
    }
}

fn sub(a: &F3, b: &F3) -> F3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: &F3, b: &F3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &F3, b: &F3) -> F3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm(a: &F3) -> f64 {
    dot(a, a).sqrt()
}

fn axpy(a: &F3, s: f64, b: &F3) -> F3 {
    [a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]]
}

/// How a line `(p, d)` relates to a closed segment.
fn classify_hit(p: &F3, d: &F3, s: &FSeg, tol: f64) -> Verdict {
    let dn = norm(d);
    if !(dn > tol) {
        return Verdict::Unsure;
    }
    let d = [d[0] / dn, d[1] / dn, d[2] / dn];
    let w = sub(&s.q, &s.p);
    let wl = norm(&w);
    let ad = cross(&sub(&s.p, p), &d);
    let wd = cross(&w, &d);
    let wdn2 = dot(&wd, &wd);
    let margin = tol.sqrt();
    if wdn2.sqrt() < margin * wl {
        // Nearly parallel: decide only if clearly apart.
        let gap = norm(&ad).min(norm(&cross(&sub(&s.q, p), &d)));
        return if gap > margin { Verdict::No } else { Verdict::Unsure };
    }
    let t = -dot(&ad, &wd) / wdn2;
    let resid = norm(&axpy(&ad, t, &wd));
    // Parameter error grows like resid / sin(angle).
    let slack = margin / (wdn2.sqrt() / wl);
    if resid > margin || t < -slack || t > 1.0 + slack {
        if resid > 4.0 * margin || t < -4.0 * slack || t > 1.0 + 4.0 * slack {
            return Verdict::No;
        }
        return Verdict::Unsure;
    }
    if resid < tol && t > slack && t < 1.0 - slack {
        Verdict::Yes
    } else {
        Verdict::Unsure
    }
}

fn classify_line(p: &F3, d: &F3, segs: &[FSeg], tol: f64) -> Verdict {
    let mut all_yes = true;
    for s in segs {
        match classify_hit(p, d, s, tol) {
            Verdict::No => return Verdict::No,
            Verdict::Unsure => all_yes = false,
            Verdict::Yes => {}
        }
    }
    if all_yes {
        Verdict::Yes
    } else {
        Verdict::Unsure
    }
}

/// Combines per-candidate verdicts: any `Yes` wins, `No` needs every candidate to fail.
fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    let mut unsure = false;
    for v in verdicts {
        match v {
            Verdict::Yes => return Verdict::Yes,
            Verdict::Unsure => unsure = true,
            Verdict::No => {}
        }
    }
    if unsure {
        Verdict::Unsure
    } else {
        Verdict::No
    }
}

/// Candidates pinned by endpoints; mirrors the exact enumeration.
fn endpoint_verdict(segs: &[FSeg], tol: f64) -> Verdict {
    let k = segs.len();
    let mut out = Vec::new();
    for s in segs {
        out.push(classify_line(&s.p, &sub(&s.q, &s.p), segs, tol));
    }
    let ends: Vec<(usize, F3)> = segs
        .iter()
        .enumerate()
        .flat_map(|(i, s)| [(i, s.p), (i, s.q)])
        .collect();
    for (x, &(i, e)) in ends.iter().enumerate() {
        for &(j, f) in &ends[x + 1..] {
            if i != j {
                let d = sub(&f, &e);
                if norm(&d) < tol.sqrt() {
                    out.push(Verdict::Unsure);
                } else {
                    out.push(classify_line(&e, &d, segs, tol));
                }
            }
        }
    }
    for &(i, e) in &ends {
        let normals: Vec<F3> = (0..k)
            .filter(|&j| j != i)
            .map(|j| cross(&sub(&segs[j].q, &segs[j].p), &sub(&e, &segs[j].p)))
            .collect();
        for a in 0..normals.len() {
            for b in (a + 1)..normals.len() {
                let d = cross(&normals[a], &normals[b]);
                if norm(&d) < tol.sqrt() {
                    // Covers endpoints lying on another line and coplanar triples.
                    out.push(Verdict::Unsure);
                } else {
                    out.push(classify_line(&e, &d, segs, tol));
                }
            }
        }
    }
    combine(out)
}

/// Null space of a 4×6 matrix of full rank, or `None` when ill-conditioned.
fn null_space_4x6(mut m: [[f64; 6]; 4], tol: f64) -> Option<[[f64; 6]; 2]> {
    let mut cols = [0usize, 1, 2, 3, 4, 5];
    let scale = m.iter().flatten().fold(0.0f64, |a, &b| a.max(b.abs()));
    if !(scale > 0.0) || !scale.is_finite() {
        return None;
    }
    for r in 0..4 {
        let (mut br, mut bc, mut best) = (r, r, 0.0);
        for (i, row) in m.iter().enumerate().skip(r) {
            for c in r..6 {
                if row[cols[c]].abs() > best {
                    best = row[cols[c]].abs();
                    br = i;
                    bc = c;
                }
            }
        }
        if best < tol * scale {
            return None;
        }
        m.swap(r, br);
        cols.swap(r, bc);
        let piv = m[r][cols[r]];
        for c in 0..6 {
            m[r][c] /= piv;
        }
        for i in 0..4 {
            if i != r {
                let f = m[i][cols[r]];
                if f != 0.0 {
                    for c in 0..6 {
                        m[i][c] -= f * m[r][c];
                    }
                }
            }
        }
    }
    let mut basis = [[0.0; 6]; 2];
    for (b, free) in [cols[4], cols[5]].into_iter().enumerate() {
        basis[b][free] = 1.0;
        for r in 0..4 {
            basis[b][cols[r]] = -m[r][free];
        }
    }
    Some(basis)
}

/// Float verdict on the four-line transversal route.
fn four_line_verdict(segs: &[FSeg; 4], tol: f64) -> Verdict {
    let mut m = [[0.0; 6]; 4];
    for (row, s) in m.iter_mut().zip(segs) {
        let d = sub(&s.q, &s.p);
        let mo = cross(&s.p, &s.q);
        // X meets L iff d_X · m_L + m_X · d_L = 0.
        *row = [mo[0], mo[1], mo[2], d[0], d[1], d[2]];
    }
    let Some([a, b]) = null_space_4x6(m, tol) else {
        return Verdict::Unsure;
    };
    let dm = |x: &[f64; 6], y: &[f64; 6]| {
        x[0] * y[3] + x[1] * y[4] + x[2] * y[5]
    };
    let qa = dm(&a, &a);
    let qb = dm(&a, &b) + dm(&b, &a);
    let qc = dm(&b, &b);
    let size = qa.abs().max(qb.abs()).max(qc.abs());
    if !(size > tol) || !size.is_finite() {
        return Verdict::Unsure;
    }
    let (qa, qb, qc) = (qa / size, qb / size, qc / size);
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < -tol.sqrt() {
        return Verdict::No;
    }
    if disc < tol.sqrt() {
        return Verdict::Unsure;
    }
    let sq = disc.sqrt();
    // Roots (alpha : beta) of qa α² + qb αβ + qc β².
    let roots: [(f64, f64); 2] = if qa.abs() >= qc.abs() {
        [(-qb + sq, 2.0 * qa), (-qb - sq, 2.0 * qa)]
    } else {
        [(2.0 * qc, -qb + sq), (2.0 * qc, -qb - sq)]
    };
    combine(roots.iter().map(|&(al, be)| {
        let x: Vec<f64> = (0..6).map(|i| al * a[i] + be * b[i]).collect();
        let d = [x[0], x[1], x[2]];
        let mo = [x[3], x[4], x[5]];
        let dn2 = dot(&d, &d);
        let total = dn2 + dot(&mo, &mo);
        if dn2 < tol * total {
            // Line at or near infinity.
            return if dn2 == 0.0 { Verdict::No } else { Verdict::Unsure };
        }
        let c = cross(&d, &mo);
        let p = [c[0] / dn2, c[1] / dn2, c[2] / dn2];
        classify_line(&p, &d, segs, tol)
    }))
}

/// Float verdict for "some line meets all these segments", `k ∈ {3, 4}`.
pub fn transversal_verdict(segs: &[FSeg], tol: f64) -> Verdict {
    if segs.iter().any(|s| norm(&sub(&s.q, &s.p)) < tol.sqrt()) {
        return Verdict::Unsure;
    }
    match segs.len() {
        4 => {
            let arr = [segs[0], segs[1], segs[2], segs[3]];
            four_line_verdict(&arr, tol)
        }
        _ => endpoint_verdict(segs, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: F3, q: F3) -> FSeg {
        FSeg { p, q }
    }

    #[test]
    fn axis_through_four_segments() {
        let mk = |c: f64, sn: f64, z: f64| s([c, sn, z], [-c, -sn, z]);
        let segs = [mk(1.0, 0.0, 0.1), mk(0.0, 1.0, 0.2), mk(0.7, 0.7, 0.3), mk(0.9, -0.4, 0.4)];
        assert_eq!(transversal_verdict(&segs, 1e-9), Verdict::Yes);
    }

    #[test]
    fn half_segments_are_missed() {
        let mk = |c: f64, sn: f64, z: f64| s([c, sn, z], [0.5 * c, 0.5 * sn, z]);
        let segs = [mk(1.0, 0.0, 0.1), mk(0.0, 1.0, 0.2), mk(-0.7, -0.7, 0.3), mk(0.9, -0.4, 0.4)];
        assert_ne!(transversal_verdict(&segs, 1e-9), Verdict::Yes);
    }

    #[test]
    fn coplanar_input_is_not_decided_by_the_line_route() {
        let segs = [
            s([0.0, 0.0, 0.0], [0.0, 1.0, 0.0]),
            s([1.0, 0.0, 0.0], [1.0, 1.0, 0.0]),
            s([2.0, 0.0, 0.0], [2.0, 1.0, 0.0]),
            s([3.0, 0.0, 0.0], [3.0, 1.0, 0.0]),
        ];
        assert_eq!(transversal_verdict(&segs, 1e-9), Verdict::Unsure);
    }

    #[test]
    fn normalizer_maps_into_unit_box() {
        let pts = [[0.0, 0.0, 0.0], [4.0, 2.0, -2.0]];
        let n = Normalizer::fit(pts.iter());
        assert_eq!(n.apply(&pts[1]), [1.0, 0.5, -0.5]);
    }
}
