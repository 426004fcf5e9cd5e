use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::symlen::{parse_rational, EdgeLabel};
use crate::error::SpecError;

pub const GAMMA: f64 = 2.0 * PI / 3.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AngleMode {
    Incommensurable,
    Commensurable,
    Unknown,
}

/// Commensurability of the side lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SideMode {
    /// All pairwise ratios rational.
    Commensurable,
    /// `a/b` rational, `c` irrational after scaling `a, b` to integers.
    AbRationalCIrrational,
    Incommensurable,
    Unknown,
}

/// Exact side data: `a`, `b` rational and `c² = a² + ab + b²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSides {
    pub a: BigRational,
    pub b: BigRational,
    pub c_squared: BigRational,
    /// `Some` when `c` is itself rational.
    pub c: Option<BigRational>,
}

impl ExactSides {
    pub fn c_display(&self) -> String {
        match &self.c {
            Some(c) => c.to_string(),
            None => format!("sqrt({})", self.c_squared),
        }
    }
}

/// The tile: sides `(a, b, c)` opposite angles `(α, β, γ = 2π/3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TileSpec {
    alpha: f64,
    a: f64,
    b: f64,
    c: f64,
    exact: Option<ExactSides>,
    angle_mode: AngleMode,
    side_mode: SideMode,
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Niven: if θ/π is rational and cos θ is rational then cos θ ∈ {0, ±1/2, ±1}.
fn niven_special(cos: &BigRational) -> bool {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let one = BigRational::one();
    cos.is_zero() || cos.abs() == half || cos.abs() == one
}

/// Outcome of the rational-cosine commensurability test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NivenOutcome {
    Commensurable,
    Incommensurable,
    Inconclusive,
}

impl TileSpec {
    /// Builds a tile from exact rational `a, b`; `c`, α and both modes are derived.
    pub fn from_rational_sides(a: BigRational, b: BigRational) -> Result<TileSpec, SpecError> {
        if !a.is_positive() || !b.is_positive() {
            return Err(SpecError::InvalidSpec("side lengths must be positive".into()));
        }
        let c_squared = &a * &a + &a * &b + &b * &b;
        let c = rational_sqrt(&c_squared);
        let exact = ExactSides { a: a.clone(), b: b.clone(), c_squared: c_squared.clone(), c };
        let (af, bf) = (to_f64(&a), to_f64(&b));
        let cf = match &exact.c {
            Some(c) => to_f64(c),
            None => to_f64(&c_squared).sqrt(),
        };
        let alpha = ((2.0 * bf + af) / (2.0 * cf)).acos();
        let angle_mode = match niven(&exact) {
            NivenOutcome::Commensurable => AngleMode::Commensurable,
            NivenOutcome::Incommensurable => AngleMode::Incommensurable,
            NivenOutcome::Inconclusive => AngleMode::Unknown,
        };
        let side_mode = if exact.c.is_some() {
            SideMode::Commensurable
        } else {
            SideMode::AbRationalCIrrational
        };
        Ok(TileSpec { alpha, a: af, b: bf, c: cf, exact: Some(exact), angle_mode, side_mode })
    }

    pub fn from_integer_sides(a: i64, b: i64) -> Result<TileSpec, SpecError> {
        TileSpec::from_rational_sides(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    /// Builds a tile from floating side lengths. Missing `c` and α are derived from `a, b`.
    /// The modes are taken as declared; nothing is inferred from floating data.
    pub fn from_numeric(
        a: f64,
        b: f64,
        c: Option<f64>,
        alpha: Option<f64>,
        angle_mode: AngleMode,
        side_mode: SideMode,
    ) -> Result<TileSpec, SpecError> {
        if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
            return Err(SpecError::InvalidSpec("side lengths must be positive and finite".into()));
        }
        let c = c.unwrap_or_else(|| (a * a + a * b + b * b).sqrt());
        let alpha = alpha.unwrap_or_else(|| ((2.0 * b + a) / (2.0 * c)).clamp(-1.0, 1.0).acos());
        let spec = TileSpec { alpha, a, b, c, exact: None, angle_mode, side_mode };
        check_tile_spec(&spec)?;
        Ok(spec)
    }

    /// Parses `a,b[,c]`. Integer and `p/q` entries are exact; decimal entries make the spec
    /// numeric. `c` may be omitted, `auto`, a rational, `sqrt(q)` or a decimal.
    pub fn parse_sides(s: &str, angle_mode: Option<AngleMode>, side_mode: Option<SideMode>) -> Result<TileSpec, SpecError> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() < 2 || parts.len() > 3 {
            return Err(SpecError::Parse(format!("expected a,b[,c], got {s:?}")));
        }
        let exact_token = |t: &str| (!t.contains('.')).then(|| parse_rational(t)).flatten();
        let c_tok = parts.get(2).copied().filter(|t| !t.is_empty() && *t != "auto");
        match (exact_token(parts[0]), exact_token(parts[1])) {
            (Some(a), Some(b)) => {
                let mut spec = TileSpec::from_rational_sides(a, b)?;
                if let Some(ct) = c_tok {
                    spec.check_c_token(ct)?;
                }
                if let Some(m) = angle_mode {
                    spec.angle_mode = m;
                }
                if let Some(m) = side_mode {
                    spec.side_mode = m;
                }
                check_tile_spec(&spec)?;
                Ok(spec)
            }
            _ => {
                let num = |t: &str| t.parse::<f64>().map_err(|_| SpecError::Parse(format!("bad side length {t:?}")));
                let a = num(parts[0])?;
                let b = num(parts[1])?;
                let c = match c_tok {
                    Some(t) => Some(parse_c_numeric(t)?),
                    None => None,
                };
                TileSpec::from_numeric(a, b, c, None, angle_mode.unwrap_or(AngleMode::Unknown), side_mode.unwrap_or(SideMode::Unknown))
            }
        }
    }

    fn check_c_token(&self, t: &str) -> Result<(), SpecError> {
        let ex = self.exact.as_ref().expect("exact spec");
        let ok = if let Some(inner) = t.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
            parse_rational(inner).map(|q| q == ex.c_squared)
        } else if !t.contains('.') {
            parse_rational(t).map(|c| &c * &c == ex.c_squared)
        } else {
            t.parse::<f64>().ok().map(|c| ((c * c - self.c * self.c) / (self.c * self.c)).abs() <= super::tol::eps())
        };
        match ok {
            Some(true) => Ok(()),
            Some(false) => Err(SpecError::InvalidSpec(format!(
                "c = {t} violates c² = a² + ab + b² = {}",
                ex.c_squared
            ))),
            None => Err(SpecError::Parse(format!("bad side length {t:?}"))),
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        PI / 3.0 - self.alpha
    }
    pub fn gamma(&self) -> f64 {
        GAMMA
    }
    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn exact(&self) -> Option<&ExactSides> {
        self.exact.as_ref()
    }
    pub fn angle_mode(&self) -> AngleMode {
        self.angle_mode
    }
    pub fn side_mode(&self) -> SideMode {
        self.side_mode
    }

    pub fn with_angle_mode(mut self, m: AngleMode) -> Self {
        self.angle_mode = m;
        self
    }

    pub fn with_side_mode(mut self, m: SideMode) -> Self {
        self.side_mode = m;
        self
    }

    pub fn side(&self, l: EdgeLabel) -> f64 {
        match l {
            EdgeLabel::A => self.a,
            EdgeLabel::B => self.b,
            EdgeLabel::C => self.c,
        }
    }

    /// Interior angle opposite the side `l`.
    pub fn angle_opposite(&self, l: EdgeLabel) -> f64 {
        match l {
            EdgeLabel::A => self.alpha,
            EdgeLabel::B => self.beta(),
            EdgeLabel::C => GAMMA,
        }
    }

    /// Tile area `ab·sin(2π/3)/2`.
    pub fn area(&self) -> f64 {
        self.a * self.b * GAMMA.sin() / 2.0
    }

    /// Side strings for serialization: exact rationals, `sqrt(q)`, or decimals.
    pub fn side_strings(&self) -> [String; 3] {
        match &self.exact {
            Some(ex) => [ex.a.to_string(), ex.b.to_string(), ex.c_display()],
            None => [fmt_f64(self.a), fmt_f64(self.b), fmt_f64(self.c)],
        }
    }
}

fn parse_c_numeric(t: &str) -> Result<f64, SpecError> {
    if let Some(inner) = t.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
        let q = inner.parse::<f64>().map_err(|_| SpecError::Parse(format!("bad side length {t:?}")))?;
        return Ok(q.sqrt());
    }
    t.parse::<f64>().map_err(|_| SpecError::Parse(format!("bad side length {t:?}")))
}

pub(crate) fn fmt_f64(x: f64) -> String {
    format!("{x:.17e}").parse::<f64>().map(|v| format!("{v:?}")).unwrap_or_else(|_| x.to_string())
}

impl fmt::Display for TileSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.side_strings();
        write!(f, "({a}, {b}, {c}) α={:.12}", self.alpha)
    }
}

/// Niven classification of α from exact sides, using cos α when rational and cos 2α otherwise.
pub fn niven(ex: &ExactSides) -> NivenOutcome {
    let two = BigRational::from_integer(2.into());
    let num = &two * &ex.b + &ex.a;
    // cos²α = (2b + a)² / (4c²), always rational here.
    let cos_sq = (&num * &num) / (BigRational::from_integer(4.into()) * &ex.c_squared);
    let cos2 = &two * &cos_sq - BigRational::one();
    let special = match &ex.c {
        Some(c) => niven_special(&(num / (&two * c))),
        None => niven_special(&cos2),
    };
    if special {
        NivenOutcome::Commensurable
    } else {
        NivenOutcome::Incommensurable
    }
}

/// Result of [`check_tile_spec`].
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub law_of_cosines_residual: f64,
    pub law_of_sines_residual: f64,
    pub alpha_in_range: bool,
    pub cos_alpha: Option<String>,
    pub cos_two_alpha: Option<String>,
    pub niven: NivenOutcome,
    pub angle_mode: AngleMode,
    pub side_mode: SideMode,
}

/// Consistency gate for a tile spec.
pub fn check_tile_spec(t: &TileSpec) -> Result<ValidationReport, SpecError> {
    let eps = super::tol::eps();
    let (a, b, c, alpha) = (t.a, t.b, t.c, t.alpha);
    let loc = (c * c - (a * a + a * b + b * b)).abs() / (c * c).max(1.0);
    let ratios = [a / alpha.sin(), b / t.beta().sin(), c / GAMMA.sin()];
    let scale = ratios.iter().cloned().fold(1.0f64, f64::max);
    let los = (ratios.iter().cloned().fold(f64::MIN, f64::max) - ratios.iter().cloned().fold(f64::MAX, f64::min)) / scale;
    let alpha_in_range = alpha > 0.0 && alpha < PI / 3.0;

    let mut cos_alpha = None;
    let mut cos_two_alpha = None;
    let mut outcome = NivenOutcome::Inconclusive;
    if let Some(ex) = &t.exact {
        if ex.c_squared != &ex.a * &ex.a + &ex.a * &ex.b + &ex.b * &ex.b {
            return Err(SpecError::InvalidSpec("c² ≠ a² + ab + b²".into()));
        }
        let two = BigRational::from_integer(2.into());
        let num = &two * &ex.b + &ex.a;
        let cos_sq = (&num * &num) / (BigRational::from_integer(4.into()) * &ex.c_squared);
        cos_two_alpha = Some((&two * &cos_sq - BigRational::one()).to_string());
        if let Some(cr) = &ex.c {
            cos_alpha = Some((num / (&two * cr)).to_string());
        }
        outcome = niven(ex);
    }

    if loc > eps {
        return Err(SpecError::InvalidSpec(format!("law of cosines violated: residual {loc:e}")));
    }
    if !alpha_in_range {
        return Err(SpecError::InvalidSpec(format!("α = {alpha} not in (0, π/3)")));
    }
    if los > 1e3 * eps {
        return Err(SpecError::InvalidSpec(format!("law of sines violated: residual {los:e}")));
    }
    let equal_ab = match &t.exact {
        Some(ex) => ex.a == ex.b,
        None => (a - b).abs() <= eps * a.max(b),
    };
    if t.angle_mode == AngleMode::Incommensurable && (equal_ab || outcome == NivenOutcome::Commensurable) {
        return Err(SpecError::InvalidSpec(
            "angle_mode=incommensurable but α/π is rational for these sides".into(),
        ));
    }
    if t.angle_mode == AngleMode::Commensurable && outcome == NivenOutcome::Incommensurable {
        return Err(SpecError::InvalidSpec("angle_mode=commensurable but α/π is irrational for these sides".into()));
    }
    Ok(ValidationReport {
        law_of_cosines_residual: loc,
        law_of_sines_residual: los,
        alpha_in_range,
        cos_alpha,
        cos_two_alpha,
        niven: outcome,
        angle_mode: t.angle_mode,
        side_mode: t.side_mode,
    })
}
