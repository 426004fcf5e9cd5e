use serde::Serialize;

use crate::exact::AngleClass;

/// Integer bookkeeping for the 1215-tile tiling of an equilateral triangle by the (3,5,7) tile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WorkedExample {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    /// Side of the triangle as the count `27a + b + 7c`.
    pub side_counts: [i64; 3],
    pub side: i64,
    pub tiles: i64,
    /// `N·a·b`, twice the tiled area in units of `√3/2`.
    pub tile_area: i64,
    pub side_squared: i64,
    /// ζ of the triangle boundary, sides at classes (0,0), (2,0), (4,0).
    pub zh_triangle: i64,
    /// Trapezoid side lengths and their classes.
    pub trapezoid: Vec<(i64, AngleClass)>,
    pub zh_trapezoid: i64,
    pub trapezoids: i64,
}

fn zh_sum(sides: &[(i64, AngleClass)]) -> i64 {
    sides.iter().map(|(len, cl)| len * cl.zh_sign() as i64).sum()
}

pub fn worked_example_arithmetic() -> WorkedExample {
    let (a, b, c) = (3, 5, 7);
    let side_counts = [27, 1, 7];
    let side = side_counts[0] * a + side_counts[1] * b + side_counts[2] * c;
    let tiles = 1215;
    let triangle: Vec<(i64, AngleClass)> = (0..3).map(|s| (side, AngleClass::new(2 * s, 0))).collect();
    let trapezoid = vec![
        (49, AngleClass::new(0, 0)),
        (15, AngleClass::new(2, 0)),
        (34, AngleClass::new(3, 0)),
        (15, AngleClass::new(4, 0)),
    ];
    WorkedExample {
        a,
        b,
        c,
        side_counts,
        side,
        tiles,
        tile_area: tiles * a * b,
        side_squared: side * side,
        zh_triangle: zh_sum(&triangle),
        zh_trapezoid: zh_sum(&trapezoid),
        trapezoid,
        trapezoids: 9,
    }
}
