//! Floating-point plane geometry: points, polygons, triangle overlap and rigid motions.
//! All comparisons take an explicit distance tolerance.

use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::exact::AngleClass;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Rotate counterclockwise about the origin by `theta` radians.
    pub fn rotate(self, theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Lexicographic order on (y, x), the "lowest then leftmost" order.
    pub fn lowest_leftmost_cmp(self, o: Point, tol: f64) -> std::cmp::Ordering {
        if (self.y - o.y).abs() > tol {
            return self.y.total_cmp(&o.y);
        }
        if (self.x - o.x).abs() > tol {
            return self.x.total_cmp(&o.x);
        }
        std::cmp::Ordering::Equal
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

/// Distance from `p` to the segment `[a, b]`.
pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let d = b - a;
    let len2 = d.dot(d);
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(d) / len2).clamp(0.0, 1.0);
    p.dist(a + d * t)
}

/// Whether `p` lies strictly inside segment `[a, b]` (farther than `tol` from both ends).
pub fn point_in_segment_interior(p: Point, a: Point, b: Point, tol: f64) -> bool {
    point_segment_distance(p, a, b) <= tol && p.dist(a) > tol && p.dist(b) > tol
}

/// Whether two convex CCW polygons have interiors that overlap by more than `tol`.
pub fn convex_interiors_overlap(p: &[Point], q: &[Point], tol: f64) -> bool {
    fn separated(p: &[Point], q: &[Point], tol: f64) -> bool {
        let n = p.len();
        (0..n).any(|i| {
            let a = p[i];
            let b = p[(i + 1) % n];
            let e = b - a;
            let len = e.norm();
            q.iter().all(|&r| e.cross(r - a) / len <= tol)
        })
    }
    !(separated(p, q, tol) || separated(q, p, tol))
}

/// A simple polygon given by its vertices in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Polygon {
    pub points: Vec<Point>,
}

impl Polygon {
    pub fn new(points: Vec<Point>) -> Self {
        Polygon { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.points.len();
        (0..n).map(move |i| (self.points[i], self.points[(i + 1) % n]))
    }

    pub fn signed_area(&self) -> f64 {
        self.edges().map(|(a, b)| a.cross(b)).sum::<f64>() / 2.0
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(a, b)| a.dist(b)).sum()
    }

    /// Drops repeated points and merges collinear consecutive edges.
    pub fn simplified(&self, tol: f64) -> Polygon {
        let mut pts: Vec<Point> = Vec::with_capacity(self.points.len());
        for &p in &self.points {
            if pts.last().is_none_or(|q: &Point| q.dist(p) > tol) {
                pts.push(p);
            }
        }
        while pts.len() > 1 && pts[0].dist(*pts.last().unwrap()) <= tol {
            pts.pop();
        }
        loop {
            let n = pts.len();
            if n < 3 {
                break;
            }
            let idx = (0..n).find(|&i| {
                let prev = pts[(i + n - 1) % n];
                let next = pts[(i + 1) % n];
                let cur = pts[i];
                point_segment_distance(cur, prev, next) <= tol && (cur - prev).dot(next - cur) > 0.0
            });
            match idx {
                Some(i) => {
                    pts.remove(i);
                }
                None => break,
            }
        }
        Polygon { points: pts }
    }

    /// Whether `p` lies on the boundary, within `tol`.
    pub fn on_boundary(&self, p: Point, tol: f64) -> bool {
        self.edges().any(|(a, b)| point_segment_distance(p, a, b) <= tol)
    }

    /// Index of a vertex within `tol` of `p`.
    pub fn vertex_index(&self, p: Point, tol: f64) -> Option<usize> {
        self.points.iter().position(|q| q.dist(p) <= tol)
    }

    /// Even-odd point containment; points on the boundary count as inside.
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        if self.on_boundary(p, tol) {
            return true;
        }
        let mut inside = false;
        for (a, b) in self.edges() {
            if (a.y > p.y) != (b.y > p.y) {
                let x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if p.x < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Whether no two non-adjacent edges touch and the orientation is counterclockwise.
    pub fn is_simple_ccw(&self, tol: f64) -> Result<(), String> {
        let n = self.points.len();
        if n < 3 {
            return Err(format!("{n} vertices"));
        }
        if self.signed_area() <= tol {
            return Err("non-positive signed area".into());
        }
        let edges: Vec<(Point, Point)> = self.edges().collect();
        for i in 0..n {
            for j in i + 1..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                if segments_touch(edges[i].0, edges[i].1, edges[j].0, edges[j].1, tol) {
                    return Err(format!("edges {i} and {j} intersect"));
                }
            }
        }
        Ok(())
    }

    pub fn transformed(&self, m: &RigidMotion, alpha: f64) -> Polygon {
        Polygon { points: self.points.iter().map(|&p| m.apply(p, alpha)).collect() }
    }
}

/// Whether closed segments `[a, b]` and `[c, d]` intersect (within `tol`).
pub fn segments_touch(a: Point, b: Point, c: Point, d: Point, tol: f64) -> bool {
    let d1 = (b - a).cross(c - a);
    let d2 = (b - a).cross(d - a);
    let d3 = (d - c).cross(a - c);
    let d4 = (d - c).cross(b - c);
    let ab = (b - a).norm().max(1e-300);
    let cd = (d - c).norm().max(1e-300);
    if ((d1 / ab > tol && d2 / ab < -tol) || (d1 / ab < -tol && d2 / ab > tol))
        && ((d3 / cd > tol && d4 / cd < -tol) || (d3 / cd < -tol && d4 / cd > tol))
    {
        return true;
    }
    point_segment_distance(c, a, b) <= tol
        || point_segment_distance(d, a, b) <= tol
        || point_segment_distance(a, c, d) <= tol
        || point_segment_distance(b, c, d) <= tol
}

/// Whether the open segments `(a, b)` and `(c, d)` cross at a single interior point.
pub fn segments_cross_properly(a: Point, b: Point, c: Point, d: Point, tol: f64) -> bool {
    let ab = (b - a).norm();
    let cd = (d - c).norm();
    let d1 = (b - a).cross(c - a) / ab;
    let d2 = (b - a).cross(d - a) / ab;
    let d3 = (d - c).cross(a - c) / cd;
    let d4 = (d - c).cross(b - c) / cd;
    ((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol)) && ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol))
}

/// A proper rigid motion: rotation about the origin by an angle class, then translation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RigidMotion {
    pub rotation: AngleClass,
    pub translation: Point,
}

impl RigidMotion {
    pub fn identity() -> Self {
        RigidMotion { rotation: AngleClass::ZERO, translation: Point::new(0.0, 0.0) }
    }

    pub fn rotation(rotation: AngleClass) -> Self {
        RigidMotion { rotation, translation: Point::new(0.0, 0.0) }
    }

    pub fn apply(&self, p: Point, alpha: f64) -> Point {
        let (c, s) = self.rotation.unit(alpha);
        Point::new(c * p.x - s * p.y, s * p.x + c * p.y) + self.translation
    }
}
