//! SVG rendering of tilings with optional structural overlays.

use std::fmt::Write;

use crate::analysis::{build_gamma_graph, VertexType};
use crate::exact::EdgeLabel;
use crate::geometry::Point;
use crate::invariant::match_c_internal;
use crate::model::{Tiling, TilingMode, VertexLocation};

#[derive(Clone, Debug)]
pub struct RenderStyle {
    pub stroke_width: f64,
    /// Edge colors for labels a, b, c.
    pub colors: [String; 3],
    /// Pixels per unit length.
    pub scale: f64,
    /// Mark interior vertices with a letter for their type.
    pub vertex_glyphs: bool,
    pub segments: bool,
    /// Draw the links of this Γ-graph as arrows.
    pub gamma: Option<EdgeLabel>,
    /// Join matched c-internal tiles.
    pub matching: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            stroke_width: 1.5,
            colors: ["#d62728".into(), "#1f77b4".into(), "#2ca02c".into()],
            scale: 40.0,
            vertex_glyphs: false,
            segments: false,
            gamma: None,
            matching: false,
        }
    }
}

fn glyph(t: VertexType) -> &'static str {
    match t {
        VertexType::Simple => "s",
        VertexType::Star => "*",
        VertexType::Center => "o",
        VertexType::DoubleStar => "**",
        VertexType::GammaStar => "g",
        VertexType::DoubleSimple => "ss",
        VertexType::Other => "?",
    }
}

fn centroid(p: [Point; 3]) -> Point {
    (p[0] + p[1] + p[2]) * (1.0 / 3.0)
}

pub fn render_svg(t: &Tiling, style: &RenderStyle) -> String {
    let mut pts: Vec<Point> = t.tiles.iter().flat_map(|x| x.vertices()).collect();
    if let Some(r) = &t.region {
        pts.extend(r.points.iter().copied());
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in &pts {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    if pts.is_empty() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let s = style.scale;
    let margin = 10.0;
    let w = (x1 - x0) * s + 2.0 * margin;
    let h = (y1 - y0) * s + 2.0 * margin;
    // SVG's y axis points down.
    let map = |p: Point| ((p.x - x0) * s + margin, (y1 - p.y) * s + margin);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#);
    let _ = writeln!(
        out,
        r##"<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z" fill="#9467bd"/></marker></defs>"##
    );
    if t.mode == TilingMode::Full {
        if let Some(r) = &t.region {
            let list: Vec<String> = r.points.iter().map(|&p| map(p)).map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
            let _ = writeln!(out, r##"<polygon class="region" points="{}" fill="none" stroke="#000" stroke-width="{:.2}"/>"##, list.join(" "), 2.0 * style.stroke_width);
        }
    }
    for tile in &t.tiles {
        let list: Vec<String> = tile.vertices().iter().map(|&p| map(p)).map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
        let _ = writeln!(out, r##"<polygon class="tile" data-id="{}" points="{}" fill="#f4f1e8" stroke="none"/>"##, tile.id, list.join(" "));
        for e in &tile.edges {
            let (ax, ay) = map(e.from);
            let (bx, by) = map(e.to);
            let _ = writeln!(
                out,
                r#"<line class="edge-{}" x1="{ax:.3}" y1="{ay:.3}" x2="{bx:.3}" y2="{by:.3}" stroke="{}" stroke-width="{:.2}"/>"#,
                e.label.as_char(),
                style.colors[e.label.index()],
                style.stroke_width
            );
        }
    }
    if style.segments {
        for seg in &t.segments {
            let (ax, ay) = map(seg.start);
            let (bx, by) = map(seg.end);
            let _ = writeln!(
                out,
                r##"<line class="segment" x1="{ax:.3}" y1="{ay:.3}" x2="{bx:.3}" y2="{by:.3}" stroke="#7f7f7f" stroke-width="{:.2}" stroke-dasharray="4 3"/>"##,
                style.stroke_width * 0.6
            );
        }
    }
    if let Some(label) = style.gamma {
        for l in build_gamma_graph(t, label).links {
            let (ax, ay) = map(t.vertices[l.tail].point);
            let (bx, by) = map(t.vertices[l.head].point);
            let _ = writeln!(
                out,
                r##"<line class="gamma" x1="{ax:.3}" y1="{ay:.3}" x2="{bx:.3}" y2="{by:.3}" stroke="#9467bd" stroke-width="{:.2}" marker-end="url(#arrow)"/>"##,
                style.stroke_width
            );
        }
    }
    if style.matching {
        for (i, j) in match_c_internal(t).pairs {
            let (ax, ay) = map(centroid(t.tiles[i].vertices()));
            let (bx, by) = map(centroid(t.tiles[j].vertices()));
            let _ = writeln!(
                out,
                r##"<line class="match" x1="{ax:.3}" y1="{ay:.3}" x2="{bx:.3}" y2="{by:.3}" stroke="#ff7f0e" stroke-width="{:.2}"/>"##,
                style.stroke_width
            );
        }
    }
    if style.vertex_glyphs {
        for v in &t.vertices {
            if matches!(v.location, VertexLocation::InternalPi | VertexLocation::Internal2Pi) {
                let (x, y) = map(v.point);
                let g = glyph(VertexType::from_counts(v.counts()));
                let _ = writeln!(out, r#"<text class="vertex" x="{x:.3}" y="{y:.3}" font-size="10" text-anchor="middle">{g}</text>"#);
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
