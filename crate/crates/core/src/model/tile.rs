use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::TilingError;
use crate::exact::{AngleClass, EdgeLabel, TileSpec};
use crate::geometry::{Point, RigidMotion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    /// Counterclockwise label order is a rotation of `abc`.
    Direct,
    /// Counterclockwise label order is a rotation of `acb`.
    Mirrored,
}

/// A tile angle, named by the side it is opposite to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleLabel {
    Alpha,
    Beta,
    Gamma,
}

impl AngleLabel {
    pub const ALL: [AngleLabel; 3] = [AngleLabel::Alpha, AngleLabel::Beta, AngleLabel::Gamma];

    pub fn opposite(l: EdgeLabel) -> AngleLabel {
        match l {
            EdgeLabel::A => AngleLabel::Alpha,
            EdgeLabel::B => AngleLabel::Beta,
            EdgeLabel::C => AngleLabel::Gamma,
        }
    }

    pub fn opposite_edge(self) -> EdgeLabel {
        match self {
            AngleLabel::Alpha => EdgeLabel::A,
            AngleLabel::Beta => EdgeLabel::B,
            AngleLabel::Gamma => EdgeLabel::C,
        }
    }

    pub fn index(self) -> usize {
        self.opposite_edge().index()
    }

    pub fn class(self) -> AngleClass {
        match self {
            AngleLabel::Alpha => AngleClass::ALPHA,
            AngleLabel::Beta => AngleClass::BETA,
            AngleLabel::Gamma => AngleClass::GAMMA,
        }
    }

    /// Left turn made when a counterclockwise walk passes a vertex with this angle.
    pub fn exterior_turn(self) -> AngleClass {
        AngleClass::PI - self.class()
    }

    pub fn radians(self, spec: &TileSpec) -> f64 {
        spec.angle_opposite(self.opposite_edge())
    }
}

impl fmt::Display for AngleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AngleLabel::Alpha => "α",
            AngleLabel::Beta => "β",
            AngleLabel::Gamma => "γ",
        })
    }
}

/// Counterclockwise order of edge labels, starting with the first edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelOrder(pub [EdgeLabel; 3]);

impl LabelOrder {
    pub fn parse(s: &str) -> Option<LabelOrder> {
        let mut chars = s.chars();
        let l = [
            EdgeLabel::from_char(chars.next()?)?,
            EdgeLabel::from_char(chars.next()?)?,
            EdgeLabel::from_char(chars.next()?)?,
        ];
        if chars.next().is_some() || l[0] == l[1] || l[1] == l[2] || l[0] == l[2] {
            return None;
        }
        Some(LabelOrder(l))
    }

    /// The order starting with `first` for the given chirality.
    pub fn starting_with(first: EdgeLabel, chirality: Chirality) -> LabelOrder {
        use EdgeLabel::*;
        let cyc = match chirality {
            Chirality::Direct => [A, B, C],
            Chirality::Mirrored => [A, C, B],
        };
        let i = cyc.iter().position(|&l| l == first).unwrap();
        LabelOrder([cyc[i], cyc[(i + 1) % 3], cyc[(i + 2) % 3]])
    }

    pub fn chirality(self) -> Chirality {
        let [x, y, _] = self.0;
        let next = match x {
            EdgeLabel::A => EdgeLabel::B,
            EdgeLabel::B => EdgeLabel::C,
            EdgeLabel::C => EdgeLabel::A,
        };
        if y == next {
            Chirality::Direct
        } else {
            Chirality::Mirrored
        }
    }
}

impl fmt::Display for LabelOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A placement request: the first edge leaves `anchor` in direction `dir`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Placement {
    pub anchor: Point,
    pub dir: AngleClass,
    pub labels: LabelOrder,
}

/// A directed tile edge, traversed counterclockwise around its tile.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TileEdge {
    pub label: EdgeLabel,
    pub class: AngleClass,
    pub from: Point,
    pub to: Point,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlacedTile {
    pub id: usize,
    pub anchor: Point,
    pub first_edge_dir: AngleClass,
    pub chirality: Chirality,
    pub labels: LabelOrder,
    pub edges: [TileEdge; 3],
}

impl PlacedTile {
    /// Walks the three edges counterclockwise from the anchor.
    #[allow(clippy::needless_range_loop)]
    pub fn new(id: usize, p: Placement, spec: &TileSpec) -> Result<PlacedTile, TilingError> {
        let alpha = spec.alpha();
        let mut class = p.dir;
        let mut at = p.anchor;
        let mut edges = [TileEdge { label: EdgeLabel::A, class, from: at, to: at }; 3];
        for i in 0..3 {
            let label = p.labels.0[i];
            let (ux, uy) = class.unit(alpha);
            let len = spec.side(label);
            let to = if i == 2 { p.anchor } else { at + Point::new(ux * len, uy * len) };
            if i == 2 {
                let predicted = at + Point::new(ux * len, uy * len);
                let tol = 1e3 * crate::exact::tol::eps() * spec.c().max(1.0);
                if predicted.dist(p.anchor) > tol {
                    return Err(TilingError::Malformed(format!("tile {id} does not close (residual {:e})", predicted.dist(p.anchor))));
                }
            }
            edges[i] = TileEdge { label, class, from: at, to };
            at = to;
            let next_opposite = p.labels.0[(i + 2) % 3];
            class = class + AngleLabel::opposite(next_opposite).exterior_turn();
        }
        Ok(PlacedTile {
            id,
            anchor: p.anchor,
            first_edge_dir: p.dir,
            chirality: p.labels.chirality(),
            labels: p.labels,
            edges,
        })
    }

    pub fn placement(&self) -> Placement {
        Placement { anchor: self.anchor, dir: self.first_edge_dir, labels: self.labels }
    }

    pub fn vertices(&self) -> [Point; 3] {
        [self.edges[0].from, self.edges[1].from, self.edges[2].from]
    }

    /// Angle at vertex `i` (the start of edge `i`).
    pub fn angle_at(&self, i: usize) -> AngleLabel {
        AngleLabel::opposite(self.labels.0[(i + 1) % 3])
    }

    pub fn edge(&self, l: EdgeLabel) -> &TileEdge {
        self.edges.iter().find(|e| e.label == l).unwrap()
    }

    pub fn signed_area(&self) -> f64 {
        let [p, q, r] = self.vertices();
        (q - p).cross(r - p) / 2.0
    }

    pub fn transformed(&self, m: &RigidMotion, spec: &TileSpec) -> PlacedTile {
        let p = Placement { anchor: m.apply(self.anchor, spec.alpha()), dir: self.first_edge_dir + m.rotation, labels: self.labels };
        PlacedTile::new(self.id, p, spec).expect("rigid motion preserves closure")
    }

    /// The same tile rotated by π about `center`.
    pub fn point_reflected(&self, center: Point, spec: &TileSpec) -> PlacedTile {
        let p = Placement { anchor: center * 2.0 - self.anchor, dir: self.first_edge_dir.negate(), labels: self.labels };
        PlacedTile::new(self.id, p, spec).expect("point reflection preserves closure")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> TileSpec {
        TileSpec::from_integer_sides(3, 5).unwrap()
    }

    #[test]
    fn label_orders() {
        assert_eq!(LabelOrder::parse("abc").unwrap().chirality(), Chirality::Direct);
        assert_eq!(LabelOrder::parse("cab").unwrap().chirality(), Chirality::Direct);
        assert_eq!(LabelOrder::parse("cba").unwrap().chirality(), Chirality::Mirrored);
        assert!(LabelOrder::parse("aab").is_none());
        assert_eq!(LabelOrder::starting_with(EdgeLabel::C, Chirality::Mirrored).to_string(), "cba");
    }

    #[test]
    fn direct_and_mirrored_tiles_close_ccw() {
        let s = spec();
        for labels in ["abc", "bca", "cab", "acb", "cba", "bac"] {
            let p = Placement { anchor: Point::new(1.0, 2.0), dir: AngleClass::new(1, 2), labels: LabelOrder::parse(labels).unwrap() };
            let t = PlacedTile::new(0, p, &s).unwrap();
            assert!((t.signed_area() - s.area()).abs() < 1e-9, "{labels}");
            // interior angles: α opposite a etc.
            for i in 0..3 {
                let v = t.vertices();
                let u = v[(i + 1) % 3] - v[i];
                let w = v[(i + 2) % 3] - v[i];
                let ang = u.cross(w).atan2(u.dot(w));
                assert!((ang - t.angle_at(i).radians(&s)).abs() < 1e-9);
            }
            let total = t.edges[2].class + t.angle_at(0).exterior_turn();
            assert_eq!(total, p.dir);
        }
    }

    #[test]
    fn edge_classes_for_cab() {
        let s = spec();
        let p = Placement { anchor: Point::new(0.0, 0.0), dir: AngleClass::ZERO, labels: LabelOrder::parse("cab").unwrap() };
        let t = PlacedTile::new(0, p, &s).unwrap();
        assert_eq!(t.edge(EdgeLabel::C).class, AngleClass::new(0, 0));
        assert_eq!(t.edge(EdgeLabel::A).class, AngleClass::new(2, 1));
        assert_eq!(t.edge(EdgeLabel::B).class, AngleClass::new(3, 1));
    }
}
