use std::collections::HashMap;
use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::tile::{AngleLabel, Chirality, PlacedTile, Placement};
use crate::error::TilingError;
use crate::exact::{check_tile_spec, tol, AngleClass, AngleMode, EdgeLabel, SymLen, TileSpec};
use crate::geometry::{convex_interiors_overlap, segments_cross_properly, Point, Polygon, RigidMotion};

/// Whether coverage of the region is validated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TilingMode {
    /// A tiling of the region: coverage, boundary and vertex-angle checks apply.
    Full,
    /// An open patch; only overlap and snapping checks apply.
    Fragment,
}

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub mode: TilingMode,
    pub allow_mirrored: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { mode: TilingMode::Full, allow_mirrored: true }
    }
}

impl BuildOptions {
    pub fn fragment() -> Self {
        BuildOptions { mode: TilingMode::Fragment, allow_mirrored: true }
    }
}

/// Side of a maximal segment, relative to its canonical direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// One directed tile edge placed on a maximal segment.
#[derive(Clone, Debug, Serialize)]
pub struct Fragment {
    pub id: usize,
    pub tile: usize,
    pub label: EdgeLabel,
    pub class: AngleClass,
    pub from: usize,
    pub to: usize,
    pub segment: usize,
    pub side: Side,
    /// Position interval along the segment's canonical direction, `t0 < t1`.
    pub t0: f64,
    pub t1: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SegmentKind {
    /// Both sides covered over the whole segment.
    Internal,
    /// One side covers the whole segment, the other side is empty.
    Boundary,
    /// Anything else: partly one-sided, or gaps on both sides of an open patch.
    Mixed,
}

/// A maximal straight union of tile edges.
#[derive(Clone, Debug, Serialize)]
pub struct MaximalSegment {
    pub id: usize,
    /// Canonical direction of the line (`j ∈ {0,1,2}` for incommensurable angles).
    pub class: AngleClass,
    pub dir: Point,
    pub start: Point,
    pub end: Point,
    pub t_start: f64,
    pub t_end: f64,
    /// Fragment ids on the left, sorted by position.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// Vertices lying on the segment, sorted by position.
    pub points: Vec<(f64, usize)>,
    pub kind: SegmentKind,
    pub is_boundary: bool,
}

impl MaximalSegment {
    pub fn side(&self, s: Side) -> &[usize] {
        match s {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn length(&self) -> f64 {
        self.t_end - self.t_start
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexLocation {
    Corner,
    Boundary,
    InternalPi,
    Internal2Pi,
    /// A vertex of an open patch whose surroundings are not fully tiled.
    Open,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Wedge {
    pub tile: usize,
    pub angle: AngleLabel,
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexRecord {
    pub id: usize,
    pub point: Point,
    pub wedges: Vec<Wedge>,
    pub location: VertexLocation,
    /// A fragment passing straight through this vertex, if any.
    pub through: Option<usize>,
}

impl VertexRecord {
    /// Counts of (α, β, γ) wedges.
    pub fn counts(&self) -> [usize; 3] {
        let mut c = [0; 3];
        for w in &self.wedges {
            c[w.angle.index()] += 1;
        }
        c
    }
}

/// A validated tiling together with its derived planar structure.
#[derive(Clone, Debug)]
pub struct Tiling {
    pub spec: TileSpec,
    pub mode: TilingMode,
    pub region: Option<Polygon>,
    pub tiles: Vec<PlacedTile>,
    pub vertices: Vec<VertexRecord>,
    pub fragments: Vec<Fragment>,
    pub segments: Vec<MaximalSegment>,
    /// `tile_vertices[t][i]` is the vertex id of vertex `i` of tile `t`.
    pub tile_vertices: Vec<[usize; 3]>,
}

/// Distance tolerance for snapping and collinearity.
pub fn geom_tol() -> f64 {
    tol::snap_radius()
}

/// Builds and validates a tiling from placements.
pub fn build_tiling(spec: &TileSpec, placements: &[Placement], region: Option<Polygon>, opts: BuildOptions) -> Result<Tiling, TilingError> {
    check_tile_spec(spec)?;
    let tiles = placements
        .iter()
        .enumerate()
        .map(|(i, p)| PlacedTile::new(i, *p, spec))
        .collect::<Result<Vec<_>, _>>()?;
    Tiling::from_tiles(spec.clone(), tiles, region, opts)
}

struct SnapGrid {
    cell: f64,
    radius: f64,
    cells: HashMap<(i64, i64), Vec<usize>>,
    points: Vec<Point>,
}

impl SnapGrid {
    fn new(radius: f64) -> Self {
        SnapGrid { cell: radius, radius, cells: HashMap::new(), points: Vec::new() }
    }

    fn key(&self, p: Point) -> (i64, i64) {
        ((p.x / self.cell).floor() as i64, (p.y / self.cell).floor() as i64)
    }

    fn find(&self, p: Point) -> Result<Option<usize>, TilingError> {
        let (kx, ky) = self.key(p);
        let mut hit: Option<usize> = None;
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.cells.get(&(kx + dx, ky + dy)) {
                    for &id in ids {
                        if self.points[id].dist(p) <= self.radius {
                            match hit {
                                Some(h) if h != id => return Err(TilingError::SnapAmbiguity { x: p.x, y: p.y }),
                                _ => hit = Some(id),
                            }
                        }
                    }
                }
            }
        }
        Ok(hit)
    }

    fn insert(&mut self, p: Point) -> Result<usize, TilingError> {
        if let Some(id) = self.find(p)? {
            return Ok(id);
        }
        let id = self.points.len();
        self.points.push(p);
        let k = self.key(p);
        self.cells.entry(k).or_default().push(id);
        Ok(id)
    }
}

fn angle_close(x: f64, y: f64, tol: f64) -> bool {
    let d = (x - y).rem_euclid(TAU);
    d <= tol || TAU - d <= tol
}

impl Tiling {
    /// Derives the planar structure of `tiles` and validates it.
    pub fn from_tiles(spec: TileSpec, tiles: Vec<PlacedTile>, region: Option<Polygon>, opts: BuildOptions) -> Result<Tiling, TilingError> {
        let tol = geom_tol();
        let alpha = spec.alpha();
        for t in &tiles {
            if t.signed_area() <= 0.0 {
                return Err(TilingError::Orientation(t.id));
            }
            if !opts.allow_mirrored && t.chirality == Chirality::Mirrored {
                return Err(TilingError::MirroredNotAllowed(t.id));
            }
        }
        for (i, t) in tiles.iter().enumerate() {
            if t.id != i {
                return Err(TilingError::Malformed(format!("tile ids must be 0..N in order; found {} at {i}", t.id)));
            }
        }
        let region = match region {
            Some(r) => {
                let r = r.simplified(tol);
                r.is_simple_ccw(tol).map_err(TilingError::NonSimpleBoundary)?;
                Some(r)
            }
            None if opts.mode == TilingMode::Full => {
                return Err(TilingError::Malformed("a full tiling needs a region".into()));
            }
            None => None,
        };

        // Vertices.
        let mut grid = SnapGrid::new(tol);
        let mut tile_vertices = Vec::with_capacity(tiles.len());
        for t in &tiles {
            let v = t.vertices();
            tile_vertices.push([grid.insert(v[0])?, grid.insert(v[1])?, grid.insert(v[2])?]);
        }
        for tv in &tile_vertices {
            if tv[0] == tv[1] || tv[1] == tv[2] || tv[0] == tv[2] {
                return Err(TilingError::Malformed("degenerate tile after snapping".into()));
            }
        }
        if let Some(r) = &region {
            for &p in &r.points {
                grid.insert(p)?;
            }
        }

        check_overlaps(&tiles, tol)?;

        // Group edges into lines: first by exact line class, then merge numerically
        // coincident directions (only possible for commensurable angles).
        let mut classes: Vec<AngleClass> = tiles.iter().flat_map(|t| t.edges.iter().map(|e| e.class.line_class())).collect();
        classes.sort();
        classes.dedup();
        let mut dir_groups: Vec<(AngleClass, f64, Vec<AngleClass>)> = Vec::new();
        for c in classes {
            let th = c.radians(alpha).rem_euclid(PI);
            if let Some(g) = dir_groups.iter_mut().find(|g| angle_close(2.0 * g.1, 2.0 * th, 1e-12_f64.max(tol * 1e-2))) {
                if spec.angle_mode() == AngleMode::Incommensurable {
                    return Err(TilingError::Malformed(format!(
                        "distinct angle classes {} and {} share a direction; α/π cannot be irrational",
                        g.0, c
                    )));
                }
                g.2.push(c);
            } else {
                dir_groups.push((c, th, vec![c]));
            }
        }
        let group_of = |c: AngleClass| dir_groups.iter().position(|g| g.2.contains(&c.line_class())).unwrap();

        struct EdgeRef {
            tile: usize,
            idx: usize,
            offset: f64,
            t0: f64,
            t1: f64,
            side: Side,
        }
        let mut by_dir: Vec<Vec<EdgeRef>> = (0..dir_groups.len()).map(|_| Vec::new()).collect();
        for t in &tiles {
            for (idx, e) in t.edges.iter().enumerate() {
                let g = group_of(e.class);
                let canon = dir_groups[g].0;
                let (ux, uy) = canon.unit(alpha);
                let u = Point::new(ux, uy);
                let n = Point::new(-uy, ux);
                let (ex, ey) = e.class.unit(alpha);
                let side = if u.dot(Point::new(ex, ey)) > 0.0 { Side::Left } else { Side::Right };
                let (a, b) = (u.dot(e.from), u.dot(e.to));
                by_dir[g].push(EdgeRef { tile: t.id, idx, offset: n.dot(e.from), t0: a.min(b), t1: a.max(b), side });
            }
        }

        let mut fragments: Vec<Option<Fragment>> = vec![None; tiles.len() * 3];
        let mut segments: Vec<MaximalSegment> = Vec::new();
        let vertex_points = grid.points.clone();
        for (g, mut refs) in by_dir.into_iter().enumerate() {
            let canon = dir_groups[g].0;
            let (ux, uy) = canon.unit(alpha);
            let u = Point::new(ux, uy);
            let n = Point::new(-uy, ux);
            refs.sort_by(|x, y| x.offset.total_cmp(&y.offset));
            let mut lines: Vec<Vec<EdgeRef>> = Vec::new();
            for r in refs {
                match lines.last_mut() {
                    Some(l) if (r.offset - l.last().unwrap().offset).abs() <= tol => l.push(r),
                    _ => lines.push(vec![r]),
                }
            }
            for mut line in lines {
                let offset = line.iter().map(|r| r.offset).sum::<f64>() / line.len() as f64;
                let on_line: Vec<(f64, usize)> = vertex_points
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| (n.dot(**p) - offset).abs() <= tol)
                    .map(|(i, p)| (u.dot(*p), i))
                    .collect();
                line.sort_by(|x, y| x.t0.total_cmp(&y.t0));
                let mut groups: Vec<Vec<EdgeRef>> = Vec::new();
                let mut reach = f64::NEG_INFINITY;
                for r in line {
                    if r.t0 <= reach + tol {
                        reach = reach.max(r.t1);
                        groups.last_mut().unwrap().push(r);
                    } else {
                        reach = r.t1;
                        groups.push(vec![r]);
                    }
                }
                for grp in groups {
                    let sid = segments.len();
                    let ts = grp.iter().map(|r| r.t0).fold(f64::INFINITY, f64::min);
                    let te = grp.iter().map(|r| r.t1).fold(f64::NEG_INFINITY, f64::max);
                    let base = n * offset;
                    let mut left = Vec::new();
                    let mut right = Vec::new();
                    for r in &grp {
                        let fid = r.tile * 3 + r.idx;
                        let e = &tiles[r.tile].edges[r.idx];
                        let tv = tile_vertices[r.tile];
                        fragments[fid] = Some(Fragment {
                            id: fid,
                            tile: r.tile,
                            label: e.label,
                            class: e.class,
                            from: tv[r.idx],
                            to: tv[(r.idx + 1) % 3],
                            segment: sid,
                            side: r.side,
                            t0: r.t0,
                            t1: r.t1,
                        });
                        match r.side {
                            Side::Left => left.push(fid),
                            Side::Right => right.push(fid),
                        }
                    }
                    let key = |f: &usize| fragments[*f].as_ref().unwrap().t0;
                    left.sort_by(|x, y| key(x).total_cmp(&key(y)));
                    right.sort_by(|x, y| key(x).total_cmp(&key(y)));
                    let mut points: Vec<(f64, usize)> =
                        on_line.iter().filter(|(t, _)| *t >= ts - tol && *t <= te + tol).cloned().collect();
                    points.sort_by(|x, y| x.0.total_cmp(&y.0));
                    segments.push(MaximalSegment {
                        id: sid,
                        class: canon,
                        dir: u,
                        start: base + u * ts,
                        end: base + u * te,
                        t_start: ts,
                        t_end: te,
                        left,
                        right,
                        points,
                        kind: SegmentKind::Mixed,
                        is_boundary: false,
                    });
                }
            }
        }
        let fragments: Vec<Fragment> = fragments.into_iter().map(|f| f.expect("every edge is assigned")).collect();

        for seg in &mut segments {
            let cover = |ids: &[usize]| -> Result<bool, TilingError> {
                let mut reach = seg.t_start;
                let mut prev: Option<usize> = None;
                let mut gap = false;
                for &f in ids {
                    let fr = &fragments[f];
                    if fr.t0 < reach - tol {
                        if let Some(p) = prev {
                            return Err(TilingError::Overlap(fragments[p].tile, fr.tile));
                        }
                    }
                    if fr.t0 > reach + tol {
                        gap = true;
                    }
                    reach = reach.max(fr.t1);
                    prev = Some(f);
                }
                Ok(!gap && reach >= seg.t_end - tol)
            };
            let lf = !seg.left.is_empty() && cover(&seg.left)?;
            let rf = !seg.right.is_empty() && cover(&seg.right)?;
            seg.kind = match (lf, rf) {
                (true, true) => SegmentKind::Internal,
                (true, false) if seg.right.is_empty() => SegmentKind::Boundary,
                (false, true) if seg.left.is_empty() => SegmentKind::Boundary,
                _ => SegmentKind::Mixed,
            };
            seg.is_boundary = seg.kind != SegmentKind::Internal;
        }

        // Vertex records.
        let mut wedges: Vec<Vec<Wedge>> = vec![Vec::new(); vertex_points.len()];
        for (t, tv) in tiles.iter().zip(&tile_vertices) {
            for i in 0..3 {
                wedges[tv[i]].push(Wedge { tile: t.id, angle: t.angle_at(i) });
            }
        }
        let mut through: Vec<Option<usize>> = vec![None; vertex_points.len()];
        for seg in &segments {
            for &(t, v) in &seg.points {
                for &f in seg.left.iter().chain(&seg.right) {
                    let fr = &fragments[f];
                    if t > fr.t0 + tol && t < fr.t1 - tol {
                        through[v] = Some(f);
                    }
                }
            }
        }
        let mut vertices = Vec::with_capacity(vertex_points.len());
        for (id, p) in vertex_points.iter().enumerate() {
            let sum: f64 = wedges[id].iter().map(|w| w.angle.radians(&spec)).sum::<f64>() + if through[id].is_some() { PI } else { 0.0 };
            let corner = region.as_ref().and_then(|r| r.vertex_index(*p, tol));
            let on_boundary = region.as_ref().is_some_and(|r| r.on_boundary(*p, tol));
            let close = |x: f64| (sum - x).abs() <= 1e-7;
            let location = if corner.is_some() {
                VertexLocation::Corner
            } else if on_boundary {
                VertexLocation::Boundary
            } else if close(TAU) {
                if through[id].is_some() {
                    VertexLocation::InternalPi
                } else {
                    VertexLocation::Internal2Pi
                }
            } else {
                VertexLocation::Open
            };
            if opts.mode == TilingMode::Full {
                let expected = match (location, corner) {
                    (VertexLocation::Corner, Some(ci)) => {
                        let r = region.as_ref().unwrap();
                        let m = r.len();
                        let prev = r.points[(ci + m - 1) % m];
                        let next = r.points[(ci + 1) % m];
                        let (v1, v2) = (next - *p, prev - *p);
                        Some(v1.cross(v2).atan2(v1.dot(v2)).rem_euclid(TAU))
                    }
                    (VertexLocation::Boundary, _) => Some(PI),
                    (VertexLocation::Open, _) => None,
                    _ => Some(TAU),
                };
                match expected {
                    Some(x) if close(x) => {}
                    _ => {
                        return Err(TilingError::Coverage(format!(
                            "vertex {id} at ({:.9}, {:.9}) has uncovered angle (wedge sum {:.9})",
                            p.x, p.y, sum
                        )))
                    }
                }
            }
            vertices.push(VertexRecord { id, point: *p, wedges: std::mem::take(&mut wedges[id]), location, through: through[id] });
        }

        let tiling = Tiling { spec, mode: opts.mode, region, tiles, vertices, fragments, segments, tile_vertices };
        if opts.mode == TilingMode::Full {
            tiling.check_coverage()?;
        }
        Ok(tiling)
    }

    fn check_coverage(&self) -> Result<(), TilingError> {
        let tol = geom_tol();
        let region = self.region.as_ref().expect("full mode has region");
        for t in &self.tiles {
            for v in t.vertices() {
                if !region.contains(v, tol) {
                    return Err(TilingError::Coverage(format!("tile {} has a vertex outside the region", t.id)));
                }
            }
            for e in &t.edges {
                for (a, b) in region.edges() {
                    if segments_cross_properly(e.from, e.to, a, b, tol) {
                        return Err(TilingError::Coverage(format!("tile {} crosses the region boundary", t.id)));
                    }
                }
            }
        }
        let area = self.tiles.len() as f64 * self.spec.area();
        let region_area = region.signed_area();
        if (area - region_area).abs() > 1e-7 * region_area.max(1.0) {
            return Err(TilingError::Coverage(format!("tile area {area:.9} ≠ region area {region_area:.9}")));
        }
        let mut one_sided = 0.0;
        for (seg, piece) in self.one_sided_pieces() {
            let mid = (piece.0 + piece.1) * 0.5;
            if !region.on_boundary(mid, tol) || !region.on_boundary(piece.0, tol) || !region.on_boundary(piece.1, tol) {
                return Err(TilingError::DanglingEdge(format!(
                    "segment {} has an unmatched side between ({:.9}, {:.9}) and ({:.9}, {:.9})",
                    seg, piece.0.x, piece.0.y, piece.1.x, piece.1.y
                )));
            }
            one_sided += piece.0.dist(piece.1);
        }
        let perim = region.perimeter();
        if (one_sided - perim).abs() > 1e-7 * perim.max(1.0) {
            return Err(TilingError::Coverage(format!("boundary covered by tiles has length {one_sided:.9}, region perimeter is {perim:.9}")));
        }
        Ok(())
    }

    /// Elementary pieces of segments covered on exactly one side, directed with the
    /// covered side on the left.
    pub fn one_sided_pieces(&self) -> Vec<(usize, (Point, Point))> {
        let tol = geom_tol();
        let mut out = Vec::new();
        for seg in &self.segments {
            if seg.kind == SegmentKind::Internal {
                continue;
            }
            let mut cuts: Vec<f64> = seg
                .left
                .iter()
                .chain(&seg.right)
                .flat_map(|&f| [self.fragments[f].t0, self.fragments[f].t1])
                .collect();
            cuts.sort_by(f64::total_cmp);
            cuts.dedup_by(|a, b| (*a - *b).abs() <= tol);
            let covered = |ids: &[usize], m: f64| ids.iter().any(|&f| self.fragments[f].t0 <= m && m <= self.fragments[f].t1);
            let base = seg.start - seg.dir * seg.t_start;
            for w in cuts.windows(2) {
                let m = (w[0] + w[1]) / 2.0;
                let (l, r) = (covered(&seg.left, m), covered(&seg.right, m));
                let (p, q) = (base + seg.dir * w[0], base + seg.dir * w[1]);
                match (l, r) {
                    (true, false) => out.push((seg.id, (p, q))),
                    (false, true) => out.push((seg.id, (q, p))),
                    _ => {}
                }
            }
        }
        out
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    pub fn fragment(&self, tile: usize, edge: usize) -> &Fragment {
        &self.fragments[tile * 3 + edge]
    }

    /// Sum of the fragment labels on one side of a segment.
    pub fn side_sum(&self, seg: &MaximalSegment, side: Side) -> SymLen {
        seg.side(side).iter().map(|&f| SymLen::label(self.fragments[f].label)).sum()
    }

    /// Position of a vertex along a segment, if it lies on it.
    pub fn position_on(&self, seg: &MaximalSegment, v: usize) -> Option<f64> {
        seg.points.iter().find(|(_, id)| *id == v).map(|(t, _)| *t)
    }

    pub fn placements(&self) -> Vec<Placement> {
        self.tiles.iter().map(PlacedTile::placement).collect()
    }

    /// The same tiling moved by a proper rigid motion whose rotation lies in the class group.
    pub fn transformed(&self, m: &RigidMotion) -> Result<Tiling, TilingError> {
        let alpha = self.spec.alpha();
        let tiles = self.tiles.iter().map(|t| t.transformed(m, &self.spec)).collect();
        let region = self.region.as_ref().map(|r| r.transformed(m, alpha));
        Tiling::from_tiles(self.spec.clone(), tiles, region, BuildOptions { mode: self.mode, allow_mirrored: true })
    }

    pub fn opts(&self) -> BuildOptions {
        BuildOptions { mode: self.mode, allow_mirrored: true }
    }
}

fn check_overlaps(tiles: &[PlacedTile], tol: f64) -> Result<(), TilingError> {
    let boxes: Vec<(f64, f64, f64, f64)> = tiles
        .iter()
        .map(|t| {
            let v = t.vertices();
            (
                v.iter().map(|p| p.x).fold(f64::INFINITY, f64::min),
                v.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max),
                v.iter().map(|p| p.y).fold(f64::INFINITY, f64::min),
                v.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max),
            )
        })
        .collect();
    let mut order: Vec<usize> = (0..tiles.len()).collect();
    order.sort_by(|&i, &j| boxes[i].0.total_cmp(&boxes[j].0));
    for (oi, &i) in order.iter().enumerate() {
        for &j in &order[oi + 1..] {
            if boxes[j].0 > boxes[i].1 - tol {
                break;
            }
            if boxes[j].2 > boxes[i].3 - tol || boxes[i].2 > boxes[j].3 - tol {
                continue;
            }
            if convex_interiors_overlap(&tiles[i].vertices(), &tiles[j].vertices(), tol) {
                return Err(TilingError::Overlap(i.min(j), i.max(j)));
            }
        }
    }
    Ok(())
}

/// Infers the region covered by a set of tiles from its one-sided pieces.
pub fn infer_region(spec: &TileSpec, tiles: &[PlacedTile]) -> Result<Polygon, TilingError> {
    let patch = Tiling::from_tiles(spec.clone(), tiles.to_vec(), None, BuildOptions::fragment())?;
    patch.outline()
}

impl Tiling {
    /// Chains the one-sided pieces into a single counterclockwise polygon.
    pub fn outline(&self) -> Result<Polygon, TilingError> {
        let tol = geom_tol();
        let pieces: Vec<(Point, Point)> = self.one_sided_pieces().into_iter().map(|(_, p)| p).collect();
        if pieces.is_empty() {
            return Err(TilingError::NonSimpleBoundary("no boundary pieces".into()));
        }
        let find_start = |p: Point, used: &[bool]| -> Result<Option<usize>, TilingError> {
            let hits: Vec<usize> = (0..pieces.len()).filter(|&i| !used[i] && pieces[i].0.dist(p) <= tol).collect();
            match hits.len() {
                0 => Ok(None),
                1 => Ok(Some(hits[0])),
                _ => Err(TilingError::NonSimpleBoundary(format!("boundary pinches at ({:.9}, {:.9})", p.x, p.y))),
            }
        };
        let mut used = vec![false; pieces.len()];
        let first = (0..pieces.len())
            .min_by(|&i, &j| pieces[i].0.lowest_leftmost_cmp(pieces[j].0, tol))
            .unwrap();
        let mut pts = vec![pieces[first].0];
        used[first] = true;
        let mut cur = pieces[first].1;
        while cur.dist(pts[0]) > tol {
            let next = find_start(cur, &used)?
                .ok_or_else(|| TilingError::NonSimpleBoundary(format!("boundary does not close at ({:.9}, {:.9})", cur.x, cur.y)))?;
            pts.push(pieces[next].0);
            used[next] = true;
            cur = pieces[next].1;
        }
        if used.iter().any(|u| !u) {
            return Err(TilingError::NonSimpleBoundary("boundary has more than one component".into()));
        }
        let poly = Polygon::new(pts).simplified(tol);
        poly.is_simple_ccw(tol).map_err(TilingError::NonSimpleBoundary)?;
        Ok(poly)
    }
}
