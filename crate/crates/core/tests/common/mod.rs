//! Test-only oracles that share no code with the search module.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::f64::consts::PI;

pub type Pt = (f64, f64);
pub type Tri = [Pt; 3];

const TOL: f64 = 1e-7;

fn cross(o: Pt, a: Pt, b: Pt) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn on_segment(p: Pt, a: Pt, b: Pt) -> bool {
    let len = (b.0 - a.0).hypot(b.1 - a.1);
    let t = ((p.0 - a.0) * (b.0 - a.0) + (p.1 - a.1) * (b.1 - a.1)) / (len * len);
    (-1e-12..=1.0 + 1e-12).contains(&t) && cross(a, b, p).abs() / len < TOL
}

/// Inside or on the boundary of a CCW simple polygon.
fn in_polygon(p: Pt, poly: &[Pt]) -> bool {
    let n = poly.len();
    if (0..n).any(|i| on_segment(p, poly[i], poly[(i + 1) % n])) {
        return true;
    }
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        if (a.1 > p.1) != (b.1 > p.1) && p.0 < a.0 + (p.1 - a.1) / (b.1 - a.1) * (b.0 - a.0) {
            inside = !inside;
        }
    }
    inside
}

fn proper_cross(a: Pt, b: Pt, c: Pt, d: Pt) -> bool {
    let s = |x: f64| if x > TOL { 1 } else if x < -TOL { -1 } else { 0 };
    let (d1, d2) = (s(cross(a, b, c)), s(cross(a, b, d)));
    let (d3, d4) = (s(cross(c, d, a)), s(cross(c, d, b)));
    d1 * d2 < 0 && d3 * d4 < 0
}

fn centroid(t: &Tri) -> Pt {
    ((t[0].0 + t[1].0 + t[2].0) / 3.0, (t[0].1 + t[1].1 + t[2].1) / 3.0)
}

fn strictly_inside_tri(p: Pt, t: &Tri) -> bool {
    (0..3).all(|i| cross(t[i], t[(i + 1) % 3], p) > TOL)
}

/// Triangles inside a CCW polygon: all vertices inside, no edge crossing the boundary,
/// and the centroid inside.
fn tri_in_polygon(t: &Tri, poly: &[Pt]) -> bool {
    let n = poly.len();
    t.iter().all(|&v| in_polygon(v, poly))
        && in_polygon(centroid(t), poly)
        && (0..3).all(|i| (0..n).all(|j| !proper_cross(t[i], t[(i + 1) % 3], poly[j], poly[(j + 1) % n])))
        && poly.iter().all(|&v| !strictly_inside_tri(v, t))
}

/// Interiors of two CCW triangles intersect.
pub fn tris_overlap(s: &Tri, t: &Tri) -> bool {
    for (p, q) in [(s, t), (t, s)] {
        for i in 0..3 {
            if q.iter().all(|&v| cross(p[i], p[(i + 1) % 3], v) <= TOL) {
                return false;
            }
        }
    }
    true
}

/// A tile of sides `a, b` with the 2π/3 angle between them.
pub struct RefTile {
    pub sides: [f64; 3],
    /// Interior angle opposite each side.
    pub angles: [f64; 3],
}

impl RefTile {
    pub fn new(a: f64, b: f64) -> RefTile {
        let c = (a * a + a * b + b * b).sqrt();
        let alpha = (a * (PI / 3.0).sin() * 2.0 / (2.0 * c)).asin();
        let beta = PI / 3.0 - alpha;
        RefTile { sides: [a, b, c], angles: [alpha, beta, 2.0 * PI / 3.0] }
    }

    /// Every congruent copy with a vertex at `p` and an edge leaving `p` in direction `theta`.
    fn copies_at(&self, p: Pt, theta: f64) -> Vec<Tri> {
        let mut out = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let k = 3 - i - j;
                let phi = self.angles[k];
                let q = (p.0 + self.sides[i] * theta.cos(), p.1 + self.sides[i] * theta.sin());
                let r = (p.0 + self.sides[j] * (theta + phi).cos(), p.1 + self.sides[j] * (theta + phi).sin());
                out.push([p, q, r]);
            }
        }
        out
    }
}

fn key(t: &Tri) -> [i64; 6] {
    let mut v: Vec<(i64, i64)> = t.iter().map(|p| ((p.0 * 1e6).round() as i64, (p.1 * 1e6).round() as i64)).collect();
    v.sort();
    [v[0].0, v[0].1, v[1].0, v[1].1, v[2].0, v[2].1]
}

/// A tiling as the sorted list of its triangles' rounded vertex sets.
pub type RefTiling = Vec<[i64; 6]>;

pub fn tiling_signature(tris: &[Tri]) -> RefTiling {
    let mut v: Vec<_> = tris.iter().map(key).collect();
    v.sort();
    v
}

/// Enumerates every tiling of `poly` by exactly `n` copies of the tile.
///
/// Candidate triangles come from closing the region vertices under placement: at each
/// known point, every copy whose edge leaves in one of the directions `jπ/3 + kα`,
/// `|k| <= kmax`, and that fits in the region is kept. Points at distances given by
/// short sums of side lengths along known edges are added too.
pub fn reference_tilings(tile: &RefTile, poly: &[Pt], n: usize, kmax: i64, rounds: usize) -> BTreeSet<RefTiling> {
    let dirs: Vec<f64> = (0..6).flat_map(|j| (-kmax..=kmax).map(move |k| (j, k))).map(|(j, k)| j as f64 * PI / 3.0 + k as f64 * tile.angles[0]).collect();
    let mut lengths = vec![0.0];
    for _ in 0..2 {
        let cur = lengths.clone();
        for l in cur {
            for s in tile.sides {
                lengths.push(l + s);
            }
        }
    }
    let mut points: Vec<Pt> = poly.to_vec();
    let mut point_keys: BTreeSet<(i64, i64)> = points.iter().map(|p| ((p.0 * 1e6).round() as i64, (p.1 * 1e6).round() as i64)).collect();
    let mut tris: Vec<Tri> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut add_point = |points: &mut Vec<Pt>, p: Pt| {
        if in_polygon(p, poly) && point_keys.insert(((p.0 * 1e6).round() as i64, (p.1 * 1e6).round() as i64)) {
            points.push(p);
        }
    };
    let mut done = 0;
    for _ in 0..rounds {
        let mut segments: Vec<(Pt, Pt)> = (0..poly.len()).map(|i| (poly[i], poly[(i + 1) % poly.len()])).collect();
        segments.extend(tris.iter().flat_map(|t| (0..3).map(move |i| (t[i], t[(i + 1) % 3]))));
        for (a, b) in segments {
            let len = (b.0 - a.0).hypot(b.1 - a.1);
            for &l in &lengths {
                for (s, e) in [(a, b), (b, a)] {
                    if l > TOL && l < len - TOL {
                        add_point(&mut points, (s.0 + (e.0 - s.0) * l / len, s.1 + (e.1 - s.1) * l / len));
                    }
                }
            }
        }
        let upto = points.len();
        if upto == done {
            break;
        }
        for pi in done..upto {
            for &d in &dirs {
                for t in tile.copies_at(points[pi], d) {
                    if tri_in_polygon(&t, poly) && seen.insert(key(&t)) {
                        for &v in &t {
                            add_point(&mut points, v);
                        }
                        tris.push(t);
                    }
                }
            }
        }
        done = upto;
    }

    // Branch on an uncovered sample point: in a tiling every generic point lies inside
    // exactly one tile, so trying each candidate containing it misses nothing.
    let (xmin, xmax) = poly.iter().fold((f64::MAX, f64::MIN), |m, p| (m.0.min(p.0), m.1.max(p.0)));
    let (ymin, ymax) = poly.iter().fold((f64::MAX, f64::MIN), |m, p| (m.0.min(p.1), m.1.max(p.1)));
    let mut samples = Vec::new();
    let steps = 40;
    for i in 0..steps {
        for j in 0..steps {
            // Irrational offsets keep samples off tile edges.
            let fx = (i as f64 + 0.5 + 0.123 * (j as f64 * 0.618).fract()) / steps as f64;
            let fy = (j as f64 + 0.5 + 0.271 * (i as f64 * 0.414).fract()) / steps as f64;
            let p = (xmin + fx * (xmax - xmin), ymin + fy * (ymax - ymin));
            if in_polygon(p, poly) && !tris.iter().any(|t| (0..3).any(|k| on_segment(p, t[k], t[(k + 1) % 3]))) {
                samples.push(p);
            }
        }
    }
    let containing: Vec<Vec<usize>> = samples.iter().map(|&p| (0..tris.len()).filter(|&i| strictly_inside_tri(p, &tris[i])).collect()).collect();
    let mut out = BTreeSet::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(tris: &[Tri], samples: &[Pt], containing: &[Vec<usize>], n: usize, chosen: &mut Vec<usize>, out: &mut BTreeSet<RefTiling>) {
        if chosen.len() == n {
            let ts: Vec<Tri> = chosen.iter().map(|&i| tris[i]).collect();
            out.insert(tiling_signature(&ts));
            return;
        }
        let Some(s) = (0..samples.len()).find(|&s| !chosen.iter().any(|&i| strictly_inside_tri(samples[s], &tris[i]))) else { return };
        for &i in &containing[s] {
            if chosen.iter().all(|&j| !tris_overlap(&tris[i], &tris[j])) {
                chosen.push(i);
                rec(tris, samples, containing, n, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(&tris, &samples, &containing, n, &mut chosen, &mut out);
    out
}
