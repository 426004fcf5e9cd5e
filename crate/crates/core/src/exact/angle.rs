use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An exact direction `j·(π/3) + k·α` with `j` taken mod 6.
///
/// When α/π is irrational the pair `(j, k)` is unique for every direction that
/// occurs in a tiling by the tile, so equality of classes is equality of directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AngleClass {
    j: u8,
    k: i64,
}

impl AngleClass {
    pub const ZERO: AngleClass = AngleClass { j: 0, k: 0 };
    /// Rotation by π.
    pub const PI: AngleClass = AngleClass { j: 3, k: 0 };
    /// The tile angle α.
    pub const ALPHA: AngleClass = AngleClass { j: 0, k: 1 };
    /// The tile angle β = π/3 − α.
    pub const BETA: AngleClass = AngleClass { j: 1, k: -1 };
    /// The tile angle γ = 2π/3.
    pub const GAMMA: AngleClass = AngleClass { j: 2, k: 0 };

    pub fn new(j: i64, k: i64) -> Self {
        AngleClass { j: j.rem_euclid(6) as u8, k }
    }

    pub fn j(self) -> u8 {
        self.j
    }

    pub fn k(self) -> i64 {
        self.k
    }

    /// Rotation by π: `j → j + 3 (mod 6)`.
    pub fn negate(self) -> Self {
        AngleClass::new(self.j as i64 + 3, self.k)
    }

    /// The additive inverse in the class group (`-θ`), not to be confused with [`negate`](Self::negate).
    pub fn inverse(self) -> Self {
        AngleClass::new(-(self.j as i64), -self.k)
    }

    /// `(−1)^j`.
    pub fn zh_sign(self) -> i32 {
        if self.j.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The class modulo π, used to identify undirected lines.
    pub fn line_class(self) -> Self {
        AngleClass { j: self.j % 3, k: self.k }
    }

    /// Whether this direction is the canonical orientation of its line.
    pub fn is_canonical_direction(self) -> bool {
        self.j < 3
    }

    /// Numeric angle in `[0, 2π)` for a tile with angle `alpha`.
    pub fn radians(self, alpha: f64) -> f64 {
        (self.j as f64 * PI / 3.0 + self.k as f64 * alpha).rem_euclid(TAU)
    }

    /// Unit vector pointing in this direction.
    pub fn unit(self, alpha: f64) -> (f64, f64) {
        let t = self.j as f64 * PI / 3.0 + self.k as f64 * alpha;
        (t.cos(), t.sin())
    }

    /// Finds the class of a numeric direction, trying `|k| <= kmax`.
    pub fn from_radians(theta: f64, alpha: f64, kmax: i64, tol: f64) -> Option<Self> {
        let mut best: Option<(f64, AngleClass)> = None;
        for k in std::iter::once(0).chain((1..=kmax).flat_map(|k| [k, -k])) {
            let rest = theta - k as f64 * alpha;
            let j = (rest / (PI / 3.0)).round();
            let residual = rest - j * PI / 3.0;
            let err = residual.abs();
            if err <= tol && best.is_none_or(|(e, _)| err < e - tol) {
                best = Some((err, AngleClass::new(j as i64, k)));
            }
        }
        best.map(|(_, c)| c)
    }
}

impl Add for AngleClass {
    type Output = AngleClass;
    fn add(self, rhs: AngleClass) -> AngleClass {
        AngleClass::new(self.j as i64 + rhs.j as i64, self.k + rhs.k)
    }
}

impl Sub for AngleClass {
    type Output = AngleClass;
    fn sub(self, rhs: AngleClass) -> AngleClass {
        AngleClass::new(self.j as i64 - rhs.j as i64, self.k - rhs.k)
    }
}

/// `-x` is the group inverse; rotation by π is [`AngleClass::negate`].
impl Neg for AngleClass {
    type Output = AngleClass;
    fn neg(self) -> AngleClass {
        self.inverse()
    }
}

impl fmt::Display for AngleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.j, self.k)
    }
}

/// ζ on directions: `(−1)^j`.
pub fn zh_sign(x: AngleClass) -> i32 {
    x.zh_sign()
}

pub fn angle_add(x: AngleClass, y: AngleClass) -> AngleClass {
    x + y
}

pub fn angle_negate(x: AngleClass) -> AngleClass {
    x.negate()
}
