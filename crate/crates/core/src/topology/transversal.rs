//! Lines meeting four polygonal cycles.

use crate::error::{Error, Result};
use crate::geom::fast::{transversal_verdict, Normalizer, Verdict};
use crate::geom::{transversal_exists_segments, Segment3, TransversalWitness};

use super::cycle::PolygonalCycle;
use super::linking::linking_number;

#[derive(Clone, Debug)]
pub struct CycleTransversal {
    /// A line with the indices of the segment it meets on each cycle.
    pub witness: Option<(TransversalWitness, [usize; 4])>,
    /// Set when both pairs are linked but no line was found.
    pub diagnostic: Option<String>,
}

/// Searches one segment per cycle for a common transversal.
pub fn transversal_through_cycles(cycles: &[PolygonalCycle; 4]) -> Result<CycleTransversal> {
    for i in 0..4 {
        for j in (i + 1)..4 {
            if !cycles[i].disjoint_from(&cycles[j]) {
                return Err(Error::NotDisjoint(format!("cycles {i} and {j} intersect")));
            }
        }
    }
    let segs: Vec<Vec<Segment3>> = cycles.iter().map(|c| c.segments()).collect();
    let approx: Vec<[f64; 3]> = cycles.iter().flat_map(|c| c.points().iter().map(|p| p.approx())).collect();
    let norm = Normalizer::fit(approx.iter());
    let fsegs: Vec<Vec<_>> = segs.iter().map(|v| v.iter().map(|s| norm.segment(s)).collect()).collect();
    for a in 0..segs[0].len() {
        for b in 0..segs[1].len() {
            for c in 0..segs[2].len() {
                for d in 0..segs[3].len() {
                    let idx = [a, b, c, d];
                    let f: Vec<_> = (0..4).map(|k| fsegs[k][idx[k]]).collect();
                    if transversal_verdict(&f, 1e-9) == Verdict::No {
                        continue;
                    }
                    let quad: Vec<Segment3> = (0..4).map(|k| segs[k][idx[k]].clone()).collect();
                    let r = transversal_exists_segments(&quad)?;
                    if let Some(w) = r.witness {
                        return Ok(CycleTransversal { witness: Some((w, idx)), diagnostic: None });
                    }
                }
            }
        }
    }
    let linked = linking_number(&cycles[0], &cycles[1])? != 0 && linking_number(&cycles[2], &cycles[3])? != 0;
    let diagnostic = linked.then(|| {
        let msg = "both cycle pairs are linked but no common transversal was found".to_string();
        log::error!("{msg}");
        msg
    });
    Ok(CycleTransversal { witness: None, diagnostic })
}
