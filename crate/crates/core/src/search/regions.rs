use crate::error::{SearchError, TilingError};
use crate::exact::{AngleClass, EdgeLabel, TileSpec};
use crate::generators::{gen_kite, gen_parallelogram};
use crate::geometry::{Point, Polygon};
use crate::model::{geom_tol, region_from_json};

/// A target region with the angle class of each side (side `i` runs from vertex `i`).
#[derive(Clone, Debug)]
pub struct Region {
    pub polygon: Polygon,
    pub classes: Vec<AngleClass>,
}

impl Region {
    /// Derives side classes numerically; fails when a side direction is not of the form
    /// `jπ/3 + kα` with small `k`.
    pub fn from_polygon(spec: &TileSpec, polygon: Polygon) -> Result<Region, SearchError> {
        let tol = geom_tol();
        let polygon = polygon.simplified(tol);
        polygon.is_simple_ccw(tol).map_err(|e| SearchError::Tiling(TilingError::NonSimpleBoundary(e)))?;
        let classes = polygon
            .edges()
            .map(|(p, q)| {
                let d = q - p;
                AngleClass::from_radians(d.y.atan2(d.x), spec.alpha(), 64, 1e-9)
                    .ok_or_else(|| SearchError::InvalidConfig(format!("region side from ({:.6}, {:.6}) has no angle class", p.x, p.y)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Region { polygon, classes })
    }

    fn from_sides(spec: &TileSpec, sides: &[(f64, AngleClass)]) -> Region {
        let mut p = Point::new(0.0, 0.0);
        let mut pts = Vec::new();
        for (len, cl) in sides {
            pts.push(p);
            let (ux, uy) = cl.unit(spec.alpha());
            p = p + Point::new(ux, uy) * *len;
        }
        Region { polygon: Polygon::new(pts), classes: sides.iter().map(|s| s.1).collect() }
    }

    /// Triangle similar to the tile, scaled by `n`.
    pub fn scaled_tile(spec: &TileSpec, n: f64) -> Region {
        // Counterclockwise c, a, b as in the `cab` placement.
        Region::from_sides(spec, &[(n * spec.c(), AngleClass::ZERO), (n * spec.a(), AngleClass::new(2, 1)), (n * spec.b(), AngleClass::new(3, 1))])
    }

    /// Equilateral triangle of side `m·c`.
    pub fn equilateral(spec: &TileSpec, m: f64) -> Region {
        let s = m * spec.c();
        Region::from_sides(spec, &[(s, AngleClass::ZERO), (s, AngleClass::new(2, 0)), (s, AngleClass::new(4, 0))])
    }

    /// Parses `parallelogram[:L]`, `kite[:L]`, `triangle:n`, `equilateral:m`, or a JSON
    /// file holding either a point list or an object with a `region` point list.
    pub fn parse(spec: &TileSpec, s: &str) -> Result<Region, SearchError> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let label = |a: Option<&str>| -> Result<EdgeLabel, SearchError> {
            match a {
                None => Ok(EdgeLabel::C),
                Some(x) => x
                    .chars()
                    .next()
                    .and_then(EdgeLabel::from_char)
                    .filter(|_| x.len() == 1)
                    .ok_or_else(|| SearchError::InvalidConfig(format!("bad edge label {x:?}"))),
            }
        };
        let number = |a: Option<&str>| -> Result<f64, SearchError> {
            a.and_then(|x| x.parse::<f64>().ok())
                .filter(|x| *x > 0.0)
                .ok_or_else(|| SearchError::InvalidConfig(format!("region {s:?} needs a positive size")))
        };
        match name {
            "parallelogram" => {
                let t = gen_parallelogram(spec, label(arg)?, AngleClass::ZERO)?;
                Region::from_polygon(spec, t.region.expect("full tiling has a region"))
            }
            "kite" => {
                let t = gen_kite(spec, label(arg)?, AngleClass::ZERO)?;
                Region::from_polygon(spec, t.region.expect("full tiling has a region"))
            }
            "triangle" => Ok(Region::scaled_tile(spec, number(arg)?)),
            "equilateral" => Ok(Region::equilateral(spec, number(arg)?)),
            _ => {
                let text = std::fs::read_to_string(s)
                    .map_err(|e| SearchError::InvalidConfig(format!("region {s:?} is neither a builtin nor a readable file: {e}")))?;
                Region::from_polygon(spec, region_from_json(&text)?)
            }
        }
    }
}
