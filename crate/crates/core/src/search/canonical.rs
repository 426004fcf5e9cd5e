use crate::geometry::{Point, Polygon};
use crate::model::PlacedTile;

/// Grid used to round coordinates in keys.
const KEY_GRID: f64 = 1e-6;

/// A tile as its three (rounded x, rounded y, angle index) corners, sorted.
pub type TileKey = [i64; 9];
/// A tiling as its sorted tile keys.
pub type TilingKey = Vec<TileKey>;

/// A planar isometry `p ↦ M·p + t`, possibly orientation-reversing.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Isometry {
    pub m: [[f64; 2]; 2],
    pub t: Point,
}

impl Isometry {
    pub fn identity() -> Isometry {
        Isometry { m: [[1.0, 0.0], [0.0, 1.0]], t: Point::new(0.0, 0.0) }
    }

    pub fn apply(&self, p: Point) -> Point {
        Point::new(self.m[0][0] * p.x + self.m[0][1] * p.y, self.m[1][0] * p.x + self.m[1][1] * p.y) + self.t
    }

    pub fn is_proper(&self) -> bool {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0] > 0.0
    }

    /// The isometry sending `p0 → q0` and the direction of `p1 − p0` to that of `q1 − q0`,
    /// reflecting when `flip` is set.
    fn from_frames(p0: Point, p1: Point, q0: Point, q1: Point, flip: bool) -> Isometry {
        let a = (p1 - p0).y.atan2((p1 - p0).x);
        let b = (q1 - q0).y.atan2((q1 - q0).x);
        let m = if flip {
            // Reflect across the direction a, then rotate onto b: reflection across angle (a+b)/2.
            let th = a + b;
            [[th.cos(), th.sin()], [th.sin(), -th.cos()]]
        } else {
            let th = b - a;
            [[th.cos(), -th.sin()], [th.sin(), th.cos()]]
        };
        let iso = Isometry { m, t: Point::new(0.0, 0.0) };
        let t = q0 - iso.apply(p0);
        Isometry { m, t }
    }
}

/// Isometries mapping the polygon onto itself. Reflections are included only when
/// `with_reflections` is set.
pub fn symmetries(region: &Polygon, with_reflections: bool, tol: f64) -> Vec<Isometry> {
    let n = region.len();
    let pts = &region.points;
    let mut out = Vec::new();
    for i in 0..n {
        for flip in [false, true] {
            if flip && !with_reflections {
                continue;
            }
            // Proper motions keep the counterclockwise order; reflections reverse it.
            let (q0, q1) = if flip { (pts[(i + 1) % n], pts[i]) } else { (pts[i], pts[(i + 1) % n]) };
            if ((pts[1] - pts[0]).norm() - (q1 - q0).norm()).abs() > tol {
                continue;
            }
            let g = Isometry::from_frames(pts[0], pts[1], q0, q1, flip);
            if pts.iter().all(|p| pts.iter().any(|q| g.apply(*p).dist(*q) <= tol)) {
                out.push(g);
            }
        }
    }
    out
}

fn round(x: f64) -> i64 {
    (x / KEY_GRID).round() as i64
}

pub fn tile_key(t: &PlacedTile, g: &Isometry) -> TileKey {
    let mut corners: Vec<[i64; 3]> = (0..3)
        .map(|i| {
            let p = g.apply(t.vertices()[i]);
            [round(p.x), round(p.y), t.angle_at(i).index() as i64]
        })
        .collect();
    corners.sort_unstable();
    let mut k = [0i64; 9];
    for (i, c) in corners.iter().enumerate() {
        k[3 * i..3 * i + 3].copy_from_slice(c);
    }
    k
}

pub fn tiling_key(tiles: &[PlacedTile], g: &Isometry) -> TilingKey {
    let mut k: TilingKey = tiles.iter().map(|t| tile_key(t, g)).collect();
    k.sort_unstable();
    k
}

/// Smallest key over the given symmetries.
pub fn canonical_key(tiles: &[PlacedTile], syms: &[Isometry]) -> TilingKey {
    syms.iter().map(|g| tiling_key(tiles, g)).min().unwrap_or_else(|| tiling_key(tiles, &Isometry::identity()))
}
