use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::drawing::SpatialDrawing;
use super::graph::{enumerate_disjoint_tuples, Edge};
use crate::error::{Error, Result};
use crate::geom::fast::{transversal_verdict, FSeg, Normalizer, Verdict, F3};
use crate::geom::planar::{segments_intersect_2d, SegmentRelation};
use crate::geom::transversal::{transversal_exists_segments, TransversalWitness};
use crate::geom::{PluckerLine, PluckerLineDoc, Point3, QuadExt, QuadExtDoc, Rational, Segment3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CountOptions {
    pub mode: Mode,
    pub tol: f64,
    pub witnesses: bool,
    /// In float mode, re-check every float positive exactly.
    pub certify: bool,
    pub threads: Option<usize>,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            mode: Mode::Exact,
            tol: 1e-9,
            witnesses: false,
            certify: true,
            threads: None,
        }
    }
}

/// A crossing tuple with its certified line.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossingWitness {
    pub edges: Vec<usize>,
    pub endpoints: Vec<Edge>,
    pub line: PluckerLine<QuadExt>,
    /// Per edge: index of the polyline segment hit, and the hit parameter on it.
    pub segments: Vec<usize>,
    pub params: Vec<QuadExt>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrossingReport {
    pub mode: Mode,
    pub k: usize,
    pub count: usize,
    pub tuples: usize,
    pub exact_checks: usize,
    pub witnesses: Option<Vec<CrossingWitness>>,
    pub elapsed_ms: f64,
}

/// A sphere carrying every point of the drawing, in normalized float units.
#[derive(Clone, Debug)]
struct Shell {
    radius: f64,
    /// Largest sagitta among an edge's chords.
    edge_sag: Vec<f64>,
    seg_box: Vec<Vec<[F3; 2]>>,
    edge_gap: Vec<Vec<f64>>,
}

/// Exact sphere through all points, if one exists and the points span space.
pub fn common_sphere(points: &[Point3]) -> Option<(Point3, Rational)> {
    let p0 = points.first()?;
    // Pick three more points spanning a tetrahedron with p0.
    let mut basis: Vec<Point3> = Vec::new();
    for p in points {
        let d = p - p0;
        let ok = match basis.len() {
            0 => !d.is_zero(),
            1 => !basis[0].cross(&d).is_zero(),
            2 => !basis[0].cross(&basis[1]).dot(&d).is_zero(),
            _ => break,
        };
        if ok {
            basis.push(d);
        }
    }
    if basis.len() < 3 {
        return None;
    }
    // 2 (p_i - p0) · c = |p_i|² - |p0|², solved by Cramer's rule.
    let two = Rational::from_integer(2.into());
    let rows: Vec<Point3> = basis.iter().map(|b| b.scale(&two)).collect();
    let rhs: Vec<Rational> = basis.iter().map(|b| (b + p0).norm2() - p0.norm2()).collect();
    let det = rows[0].cross(&rows[1]).dot(&rows[2]);
    let col = |i: usize| -> Rational {
        let m: Vec<Point3> = (0..3)
            .map(|r| {
                let mut v = rows[r].clone();
                match i {
                    0 => v.x = rhs[r].clone(),
                    1 => v.y = rhs[r].clone(),
                    _ => v.z = rhs[r].clone(),
                }
                v
            })
            .collect();
        m[0].cross(&m[1]).dot(&m[2]) / &det
    };
    let c = Point3::new(col(0), col(1), col(2));
    let r2 = (p0 - &c).norm2();
    points.iter().all(|p| (p - &c).norm2() == r2).then_some((c, r2))
}

fn box_of(s: &FSeg) -> [F3; 2] {
    [
        [0, 1, 2].map(|i| s.p[i].min(s.q[i])),
        [0, 1, 2].map(|i| s.p[i].max(s.q[i])),
    ]
}

fn box_gap(a: &[F3; 2], b: &[F3; 2]) -> f64 {
    let mut g2 = 0.0;
    for i in 0..3 {
        let g = (a[0][i] - b[1][i]).max(b[0][i] - a[1][i]).max(0.0);
        g2 += g * g;
    }
    g2.sqrt()
}

impl Shell {
    fn build(fsegs: &[Vec<FSeg>], radius: f64) -> Shell {
        let sag = |s: &FSeg| {
            let l2: f64 = (0..3).map(|i| (s.q[i] - s.p[i]).powi(2)).sum();
            let h = radius - (radius * radius - l2 / 4.0).max(0.0).sqrt();
            h * (1.0 + 1e-6) + 1e-12 * radius
        };
        let edge_sag = fsegs.iter().map(|ss| ss.iter().map(sag).fold(0.0, f64::max)).collect();
        let seg_box: Vec<Vec<[F3; 2]>> = fsegs.iter().map(|ss| ss.iter().map(box_of).collect()).collect();
        let m = fsegs.len();
        let mut edge_gap = vec![vec![0.0; m]; m];
        for i in 0..m {
            for j in (i + 1)..m {
                let g = seg_box[i]
                    .iter()
                    .flat_map(|a| seg_box[j].iter().map(move |b| box_gap(a, b)))
                    .fold(f64::INFINITY, f64::min);
                edge_gap[i][j] = g;
                edge_gap[j][i] = g;
            }
        }
        Shell {
            radius,
            edge_sag,
            seg_box,
            edge_gap,
        }
    }

    /// A line meets the shell of depth `h` in at most two pieces, each of length
    /// at most this window.
    fn window(&self, h: f64) -> f64 {
        2.0 * (2.0 * self.radius * h).sqrt() * (1.0 + 1e-6) + 1e-9 * self.radius
    }
}

/// True when the items can be split into two groups with no far pair inside a group.
fn two_groups(far: impl Fn(usize, usize) -> bool, k: usize) -> bool {
    (0..(1usize << k.saturating_sub(1))).any(|mask| {
        (0..k).all(|i| ((i + 1)..k).all(|j| (mask >> i & 1) != (mask >> j & 1) || !far(i, j)))
    })
}

struct Ctx<'a> {
    segs: Vec<Vec<Segment3>>,
    fsegs: Vec<Vec<FSeg>>,
    shell: Option<Shell>,
    opts: &'a CountOptions,
}

struct TupleOutcome {
    /// Chosen segment per edge, with a certified line unless float-only.
    witness: Option<(Vec<usize>, Option<TransversalWitness>)>,
    exact_checks: usize,
}

impl Ctx<'_> {
    fn new<'a>(d: &SpatialDrawing, opts: &'a CountOptions) -> Ctx<'a> {
        let m = d.graph().m();
        let segs: Vec<Vec<Segment3>> = (0..m).map(|id| d.segments(id)).collect();
        let approx: Vec<F3> = d
            .positions()
            .iter()
            .chain(segs.iter().flatten().map(|s| &s.p))
            .map(Point3::approx)
            .collect();
        let norm = Normalizer::fit(approx.iter());
        let fsegs: Vec<Vec<FSeg>> = segs
            .iter()
            .map(|ss| ss.iter().map(|s| norm.segment(s)).collect())
            .collect();
        let mut pts: Vec<Point3> = d.positions().to_vec();
        for id in 0..m {
            pts.extend(d.interior(id).iter().cloned());
        }
        let shell = common_sphere(&pts).map(|(_, r2)| {
            let r = crate::geom::scalar::to_f64(&r2).sqrt();
            Shell::build(&fsegs, norm.length(r))
        });
        Ctx {
            segs,
            fsegs,
            shell,
            opts,
        }
    }

    fn tuple(&self, tuple: &[usize]) -> TupleOutcome {
        let k = tuple.len();
        let mut out = TupleOutcome {
            witness: None,
            exact_checks: 0,
        };
        let window = self.shell.as_ref().map(|sh| {
            let h = tuple.iter().map(|&e| sh.edge_sag[e]).fold(0.0, f64::max);
            sh.window(h)
        });
        if let (Some(sh), Some(w)) = (&self.shell, window) {
            if !two_groups(|i, j| sh.edge_gap[tuple[i]][tuple[j]] > w, k) {
                return out;
            }
        }
        let mut pick = vec![0usize; k];
        self.search(tuple, window, 0, &mut pick, &mut out);
        out
    }

    fn search(&self, tuple: &[usize], window: Option<f64>, depth: usize, pick: &mut Vec<usize>, out: &mut TupleOutcome) {
        if out.witness.is_some() {
            return;
        }
        let k = tuple.len();
        if depth == k {
            self.combo(tuple, pick, out);
            return;
        }
        for s in 0..self.segs[tuple[depth]].len() {
            pick[depth] = s;
            if let (Some(sh), Some(w)) = (&self.shell, window) {
                let far = |i: usize, j: usize| {
                    box_gap(&sh.seg_box[tuple[i]][pick[i]], &sh.seg_box[tuple[j]][pick[j]]) > w
                };
                if !two_groups(far, depth + 1) {
                    continue;
                }
            }
            self.search(tuple, window, depth + 1, pick, out);
            if out.witness.is_some() {
                return;
            }
        }
    }

    fn combo(&self, tuple: &[usize], pick: &[usize], out: &mut TupleOutcome) {
        let fs: Vec<FSeg> = tuple.iter().zip(pick).map(|(&e, &s)| self.fsegs[e][s]).collect();
        let verdict = transversal_verdict(&fs, self.opts.tol);
        let exact = match (self.opts.mode, verdict) {
            (_, Verdict::No) => false,
            (Mode::Float, Verdict::Yes) if !self.opts.certify && !self.opts.witnesses => {
                out.witness = Some((pick.to_vec(), None));
                return;
            }
            _ => true,
        };
        if !exact {
            return;
        }
        out.exact_checks += 1;
        let segs: Vec<Segment3> = tuple.iter().zip(pick).map(|(&e, &s)| self.segs[e][s].clone()).collect();
        if let Ok(r) = transversal_exists_segments(&segs) {
            if let Some(w) = r.witness {
                out.witness = Some((pick.to_vec(), Some(w)));
            }
        }
    }
}

/// Counts vertex-disjoint `k`-tuples of edges met by a common line.
pub fn count_line_crossings(d: &SpatialDrawing, k: usize, opts: &CountOptions) -> Result<CrossingReport> {
    if !(3..=4).contains(&k) {
        return Err(Error::OutOfRange(format!("k must be 3 or 4, got {k}")));
    }
    if opts.mode == Mode::Float && !(opts.tol > 0.0) {
        return Err(Error::OutOfRange("tolerance must be positive".into()));
    }
    let start = Instant::now();
    let tuples = enumerate_disjoint_tuples(d.graph(), k);
    if tuples.is_empty() {
        return Ok(CrossingReport {
            mode: opts.mode,
            k,
            count: 0,
            tuples: 0,
            exact_checks: 0,
            witnesses: opts.witnesses.then(Vec::new),
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        });
    }
    let ctx = Ctx::new(d, opts);
    let run = || -> Vec<TupleOutcome> { tuples.par_iter().map(|t| ctx.tuple(t)).collect() };
    let results = match opts.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Invariant(e.to_string()))?
            .install(run),
        None => run(),
    };
    let mut count = 0;
    let mut exact_checks = 0;
    let mut witnesses = Vec::new();
    for (t, r) in tuples.iter().zip(results) {
        exact_checks += r.exact_checks;
        if let Some((pick, w)) = r.witness {
            count += 1;
            if let (true, Some(w)) = (opts.witnesses, w) {
                witnesses.push(CrossingWitness {
                    edges: t.clone(),
                    endpoints: t.iter().map(|&e| d.graph().edge(e)).collect(),
                    line: w.line,
                    segments: pick,
                    params: w.params,
                });
            }
        }
    }
    Ok(CrossingReport {
        mode: opts.mode,
        k,
        count,
        tuples: tuples.len(),
        exact_checks,
        witnesses: opts.witnesses.then_some(witnesses),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Re-derives a witness from scratch against the drawing.
pub fn verify_crossing_witness(d: &SpatialDrawing, w: &CrossingWitness) -> bool {
    let g = d.graph();
    let disjoint = w.edges.iter().enumerate().all(|(i, &a)| {
        w.edges[i + 1..].iter().all(|&b| {
            let (x, y) = (g.edge(a), g.edge(b));
            x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1
        })
    });
    disjoint
        && w.edges.iter().zip(&w.segments).all(|(&e, &s)| {
            d.segments(e)
                .get(s)
                .is_some_and(|seg| crate::geom::transversal::line_hits_segment(&w.line, seg).is_some())
        })
}

/// Number of pairs of vertex-disjoint edges whose interiors cross in a drawing in `z = 0`.
pub fn count_planar_crossings(d: &SpatialDrawing) -> Result<usize> {
    if !d.is_straight() {
        return Err(Error::validation("edges", "planar counting needs straight edges"));
    }
    if let Some(v) = d.positions().iter().position(|p| !p.z.is_zero()) {
        return Err(Error::validation(format!("vertices[{v}].pos"), "point not in the plane z = 0"));
    }
    let g = d.graph();
    let p2 = |v: usize| [d.position(v).x.clone(), d.position(v).y.clone()];
    let mut count = 0;
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        for &(c, e) in &g.edges()[i + 1..] {
            if a == c || a == e || b == c || b == e {
                continue;
            }
            if segments_intersect_2d(&p2(a), &p2(b), &p2(c), &p2(e)) == SegmentRelation::Crossing {
                count += 1;
            }
        }
    }
    Ok(count)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub edges: Vec<[usize; 2]>,
    pub edge_ids: Vec<usize>,
    pub line: PluckerLineDoc,
    pub segments: Vec<usize>,
    pub params: Vec<QuadExtDoc>,
}

impl From<&CrossingWitness> for WitnessDoc {
    fn from(w: &CrossingWitness) -> Self {
        WitnessDoc {
            edges: w.endpoints.iter().map(|&(u, v)| [u, v]).collect(),
            edge_ids: w.edges.clone(),
            line: PluckerLineDoc::from(&w.line),
            segments: w.segments.clone(),
            params: w.params.iter().map(QuadExtDoc::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossingReportDoc {
    pub mode: Mode,
    pub k: usize,
    pub count: usize,
    pub tuples: usize,
    pub exact_checks: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witnesses: Option<Vec<WitnessDoc>>,
    pub elapsed_ms: f64,
}

impl From<&CrossingReport> for CrossingReportDoc {
    fn from(r: &CrossingReport) -> Self {
        CrossingReportDoc {
            mode: r.mode,
            k: r.k,
            count: r.count,
            tuples: r.tuples,
            exact_checks: r.exact_checks,
            witnesses: r.witnesses.as_ref().map(|ws| ws.iter().map(WitnessDoc::from).collect()),
            elapsed_ms: r.elapsed_ms,
        }
    }
}
