use std::collections::BTreeMap;

use serde::Serialize;

use crate::exact::EdgeLabel;
use crate::model::{geom_tol, MaximalSegment, Side, Tiling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Link {
    pub tail: usize,
    pub head: usize,
    pub segment: usize,
    /// Side of the segment carrying the `label` edges.
    pub side: Side,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NodeDegree {
    pub in_degree: usize,
    pub out_degree: usize,
    pub f: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaGraph {
    pub label: EdgeLabel,
    pub links: Vec<Link>,
    pub nodes: BTreeMap<usize, NodeDegree>,
}

impl GammaGraph {
    pub fn in_degree(&self, v: usize) -> usize {
        self.nodes.get(&v).map_or(0, |n| n.in_degree)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.nodes.get(&v).map_or(0, |n| n.out_degree)
    }

    pub fn f_total(&self) -> i64 {
        self.nodes.values().map(|n| n.f).sum()
    }
}

#[derive(Clone, Copy)]
struct Iv {
    t0: f64,
    t1: f64,
    label: EdgeLabel,
}

/// Intervals of one side, in the walking direction given by `sign`.
fn oriented(t: &Tiling, ids: &[usize], sign: f64) -> Vec<Iv> {
    let mut v: Vec<Iv> = ids
        .iter()
        .map(|&f| {
            let fr = &t.fragments[f];
            let (x, y) = (fr.t0 * sign, fr.t1 * sign);
            Iv { t0: x.min(y), t1: x.max(y), label: fr.label }
        })
        .collect();
    v.sort_by(|a, b| a.t0.total_cmp(&b.t0));
    v
}

fn covers(ivs: &[Iv], p: f64, q: f64, tol: f64) -> bool {
    let mut reach = p;
    for iv in ivs {
        if iv.t1 <= reach + tol {
            continue;
        }
        if iv.t0 > reach + tol {
            break;
        }
        reach = iv.t1;
    }
    reach >= q - tol
}

fn links_on(t: &Tiling, seg: &MaximalSegment, label: EdgeLabel, out: &mut Vec<Link>) {
    let tol = geom_tol();
    let vertex_at = |pos: f64| seg.points.iter().find(|(x, _)| (x - pos).abs() <= tol).map(|(_, v)| *v);
    for side in [Side::Left, Side::Right] {
        for sign in [1.0, -1.0] {
            let own = oriented(t, seg.side(side), sign);
            let other = oriented(t, seg.side(side.other()), sign);
            let joined = |x: &Iv, y: &Iv| (y.t0 - x.t1).abs() <= tol;
            for k in 0..own.len() {
                if own[k].label != label {
                    continue;
                }
                // Q ends the run and the next edge on the same side continues the line with another label.
                let Some(next) = own.get(k + 1).filter(|n| joined(&own[k], n)) else { continue };
                if next.label == label {
                    continue;
                }
                let q = own[k].t1;
                if !other.iter().any(|o| o.t0 + tol < q && q < o.t1 - tol) {
                    continue;
                }
                let mut i = k;
                while i > 0 && own[i - 1].label == label && joined(&own[i - 1], &own[i]) {
                    i -= 1;
                }
                let tail = (i..=k).map(|m| own[m].t0).find(|&p| {
                    other.iter().any(|o| (o.t0 - p).abs() <= tol || (o.t1 - p).abs() <= tol) && covers(&other, p, q, tol)
                });
                if let Some(p) = tail {
                    if let (Some(tv), Some(hv)) = (vertex_at(p * sign), vertex_at(q * sign)) {
                        out.push(Link { tail: tv, head: hv, segment: seg.id, side });
                    }
                }
            }
        }
    }
}

/// Links ⟨P, Q⟩ of the graph for `label`: `PQ` is terminated at `P`, carries only
/// `label` edges on one side, `Q` is interior to an edge on the other side, and the
/// edge after `Q` on the first side has a different label.
pub fn build_gamma_graph(t: &Tiling, label: EdgeLabel) -> GammaGraph {
    let mut links = Vec::new();
    for seg in &t.segments {
        links_on(t, seg, label, &mut links);
    }
    let mut nodes: BTreeMap<usize, NodeDegree> = BTreeMap::new();
    for l in &links {
        nodes.entry(l.tail).or_default().out_degree += 1;
        nodes.entry(l.head).or_default().in_degree += 1;
    }
    for n in nodes.values_mut() {
        n.f = n.out_degree as i64 - n.in_degree as i64;
    }
    GammaGraph { label, links, nodes }
}
