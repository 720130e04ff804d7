use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use serde_json::{json, Value};

use spacecross::crossing::{
    count_line_crossings, count_planar_crossings, lift_to_sphere, CountOptions, CrossingReportDoc, DrawingDoc, Mode,
    SpatialDrawing, WitnessDoc,
};
use spacecross::generate;
use spacecross::geom::scalar::format_rational;
use spacecross::geom::{PluckerLineDoc, PointDoc, QuadExtDoc};
use spacecross::pipeline::{boost_witness_pipeline, hexgrid_construction};
use spacecross::sametype::{same_type_refine, yao_yao_partition, MultisetDoc, PointMultiset, PolynomialDoc, SparsePolynomial};
use spacecross::stair::{enumerate_order_types, stair_report, standard_stair_drawing, StretchedGrid};
use spacecross::topology::{conway_gordon_check, linking_number, transversal_through_cycles, PolygonalCycle};
use spacecross::Point3;

use crate::{Cli, Command, Common, GenKind, ModeArg};

fn read<T: for<'de> Deserialize<'de>>(common: &Common) -> Result<T> {
    let path = common.input.as_ref().context("--input is required")?;
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn drawing(common: &Common) -> Result<SpatialDrawing> {
    Ok(SpatialDrawing::from_doc(&read::<DrawingDoc>(common)?)?)
}

#[derive(Deserialize)]
struct CyclesDoc {
    cycles: Vec<Vec<PointDoc>>,
}

fn cycles(common: &Common, want: usize) -> Result<Vec<PolygonalCycle>> {
    let doc: CyclesDoc = read(common)?;
    if doc.cycles.len() != want {
        bail!(spacecross::Error::validation("cycles", format!("expected {want} cycles, got {}", doc.cycles.len())));
    }
    Ok(doc.cycles.iter().map(|c| PolygonalCycle::from_doc(c)).collect::<spacecross::Result<_>>()?)
}

#[derive(Deserialize)]
struct PointsDoc {
    points: Vec<PointDoc>,
}

#[derive(Deserialize)]
struct SameTypeInput {
    multisets: Vec<MultisetDoc>,
    polys: Vec<PolynomialDoc>,
}

fn count_options(common: &Common, witnesses: bool) -> Result<CountOptions> {
    let mode = match common.mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Float => Mode::Float,
    };
    if mode == Mode::Float && common.tol <= 0.0 {
        bail!(spacecross::Error::OutOfRange(format!("tolerance {} must be positive", common.tol)));
    }
    Ok(CountOptions {
        mode,
        tol: common.tol,
        witnesses,
        threads: common.threads.map(|t| t as usize),
        ..CountOptions::default()
    })
}

fn rationals(v: &[spacecross::Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn run(cli: &Cli) -> Result<Value> {
    let c = &cli.common;
    Ok(match &cli.command {
        Command::CountCrossings { k, witnesses } => {
            let d = drawing(c)?;
            let r = count_line_crossings(&d, *k as usize, &count_options(c, *witnesses)?)?;
            serde_json::to_value(CrossingReportDoc::from(&r))?
        }
        Command::CountPlanar => json!({"count": count_planar_crossings(&drawing(c)?)?}),
        Command::LiftSphere => serde_json::to_value(lift_to_sphere(&drawing(c)?, c.subdivision as usize)?.to_doc())?,
        Command::GenStair { n, m, check_bounds } => {
            let grid = StretchedGrid::symbolic(5 * n)?;
            let sd = standard_stair_drawing(*n, *m, &grid)?;
            let edges: Vec<Value> = sd
                .graph
                .edges()
                .iter()
                .zip(&sd.paths)
                .map(|(&(u, v), p)| {
                    let corners: Vec<Vec<String>> =
                        p.corners().iter().map(|x| x.iter().map(|i| i.to_string()).collect()).collect();
                    json!({"u": u, "v": v, "corners": corners})
                })
                .collect();
            let mut doc = json!({
                "grid": {"points_per_axis": 5 * n, "coordinates": "index"},
                "vertices": sd.vertices.iter().map(|g| g.idx).collect::<Vec<_>>(),
                "edges": edges,
            });
            if *check_bounds {
                doc["report"] = serde_json::to_value(stair_report(*n, *m)?)?;
            }
            doc
        }
        Command::GenHexgrid { k } => {
            let hg = hexgrid_construction(*k, c.subdivision as usize)?;
            json!({
                "rings": hg.rings,
                "special_edge": [hg.special_edge.0, hg.special_edge.1],
                "face_distance": hg.face_distance,
                "planar": hg.planar.to_doc(),
                "drawing": hg.drawing.to_doc(),
            })
        }
        Command::Linking => {
            let cs = cycles(c, 2)?;
            json!({"lk": linking_number(&cs[0], &cs[1])?})
        }
        Command::ConwayGordon => {
            let doc: PointsDoc = read(c)?;
            let pts: Vec<Point3> = doc.points.iter().map(Point3::try_from).collect::<spacecross::Result<_>>()?;
            let pts: [Point3; 6] = pts
                .try_into()
                .map_err(|_| spacecross::Error::validation("points", "expected 6 points"))?;
            let cg = conway_gordon_check(&pts)?;
            json!({
                "pairs": cg.pairs.iter().map(|(a, b, lk)| json!({"triangles": [a, b], "lk": lk})).collect::<Vec<_>>(),
                "parity_sum": cg.parity_sum,
                "odd_pair": [cg.odd_pair.0, cg.odd_pair.1],
                "odd_lk": cg.odd_lk,
            })
        }
        Command::Transversal4cycles => {
            let cs: [PolygonalCycle; 4] = cycles(c, 4)?.try_into().expect("four cycles");
            let t = transversal_through_cycles(&cs)?;
            json!({
                "found": t.witness.is_some(),
                "line": t.witness.as_ref().map(|(w, _)| PluckerLineDoc::from(&w.line)),
                "segments": t.witness.as_ref().map(|(_, idx)| idx.to_vec()),
                "params": t.witness.as_ref().map(|(w, _)| w.params.iter().map(QuadExtDoc::from).collect::<Vec<_>>()),
                "diagnostic": t.diagnostic,
            })
        }
        Command::WitnessPipeline => {
            let r = boost_witness_pipeline(&drawing(c)?, c.seed, c.budget)?;
            json!({
                "bisection": {"e1": r.bisection.e1, "e2": r.bisection.e2, "retries": r.bisection.retries, "attempts": r.attempts},
                "subdivisions": [r.subdivisions.0, r.subdivisions.1],
                "witnesses": r.witnesses.iter().map(WitnessDoc::from).collect::<Vec<_>>(),
                "diagnostics": r.diagnostics,
            })
        }
        Command::OrderTypes => {
            let types = enumerate_order_types();
            let mut by: BTreeMap<String, usize> = BTreeMap::new();
            for (_, comps) in &types {
                *by.entry(comps.to_string()).or_default() += 1;
            }
            json!({
                "total": types.len(),
                "by_components": by,
                "types": types.iter().map(|(t, comps)| json!({"pairs": t.pairs, "components": comps})).collect::<Vec<_>>(),
            })
        }
        Command::YaoYao => {
            let f = PointMultiset::from_doc(&read::<MultisetDoc>(c)?)?;
            let yy = yao_yao_partition(&f)?;
            json!({
                "dim": yy.dim,
                "center": rationals(&yy.center),
                "cells": yy.cells.iter().map(|g| g.iter().map(|v| rationals(v)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "scale": format_rational(&yy.scale),
                "counts": yy.counts,
                "perturbed": yy.perturbed,
            })
        }
        Command::SameType => {
            let doc: SameTypeInput = read(c)?;
            let ms = doc.multisets.iter().map(PointMultiset::from_doc).collect::<spacecross::Result<Vec<_>>>()?;
            let ps = doc.polys.iter().map(SparsePolynomial::from_doc).collect::<spacecross::Result<Vec<_>>>()?;
            let r = same_type_refine(&ms, &ps)?;
            json!({
                "retained": r.retained,
                "signs": r.signs,
                "epsilon": format!("3^-{}", r.epsilon_exponent),
            })
        }
        Command::Generate { kind, n, m, p, den, range, dim } => generate_doc(*kind, *n, *m, *p, *den, *range, *dim, c.seed)?,
    })
}

fn graph_doc(g: &spacecross::crossing::Graph) -> Value {
    json!({"n": g.n(), "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>()})
}

#[allow(clippy::too_many_arguments)]
fn generate_doc(kind: GenKind, n: usize, m: usize, p: f64, den: i64, range: i64, dim: usize, seed: u64) -> Result<Value> {
    let cycles = |cs: Vec<PolygonalCycle>| json!({"cycles": cs.iter().map(|c| c.to_doc()).collect::<Vec<_>>()});
    Ok(match kind {
        GenKind::Points => {
            let pts = generate::rational_points(n, den, seed)?;
            json!({"points": pts.iter().map(PointDoc::from).collect::<Vec<_>>()})
        }
        GenKind::Gnp => graph_doc(&generate::gnp(n, p, seed)?),
        GenKind::Gnm => graph_doc(&generate::gnm(n, m, seed)?),
        GenKind::Drawing => {
            let g = generate::gnm(n, m, seed)?;
            serde_json::to_value(generate::random_straight_drawing(&g, seed, range)?.to_doc())?
        }
        GenKind::PlanarDrawing => {
            let g = generate::gnm(n, m, seed)?;
            serde_json::to_value(generate::random_planar_drawing(&g, seed, range)?.to_doc())?
        }
        GenKind::Hopf => {
            let (a, b) = generate::hopf_pair();
            cycles(vec![a, b])
        }
        GenKind::Stacked => cycles(generate::stacked_hopf_pairs(2)),
        GenKind::K6s => {
            let g = generate::disjoint_k6s(n);
            serde_json::to_value(generate::random_straight_drawing(&g, seed, range)?.to_doc())?
        }
        GenKind::Multiset => serde_json::to_value(generate::random_multiset(dim, n, range, seed)?.to_doc())?,
    })
}
