use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Side label of a tile edge; the angle opposite `A` is α, opposite `B` is β, opposite `C` is γ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeLabel {
    A,
    B,
    C,
}

impl EdgeLabel {
    pub const ALL: [EdgeLabel; 3] = [EdgeLabel::A, EdgeLabel::B, EdgeLabel::C];

    pub fn index(self) -> usize {
        match self {
            EdgeLabel::A => 0,
            EdgeLabel::B => 1,
            EdgeLabel::C => 2,
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a' | 'A' => Some(EdgeLabel::A),
            'b' | 'B' => Some(EdgeLabel::B),
            'c' | 'C' => Some(EdgeLabel::C),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            EdgeLabel::A => 'a',
            EdgeLabel::B => 'b',
            EdgeLabel::C => 'c',
        }
    }

    /// The other two labels, in `a < b < c` order.
    pub fn others(self) -> [EdgeLabel; 2] {
        match self {
            EdgeLabel::A => [EdgeLabel::B, EdgeLabel::C],
            EdgeLabel::B => [EdgeLabel::A, EdgeLabel::C],
            EdgeLabel::C => [EdgeLabel::A, EdgeLabel::B],
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A length `pa·a + pb·b + pc·c` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SymLen {
    coeffs: [BigRational; 3],
}

impl SymLen {
    pub fn zero() -> Self {
        SymLen::default()
    }

    pub fn label(l: EdgeLabel) -> Self {
        let mut s = SymLen::zero();
        s.coeffs[l.index()] = BigRational::from_integer(1.into());
        s
    }

    pub fn from_ints(pa: i64, pb: i64, pc: i64) -> Self {
        SymLen {
            coeffs: [pa, pb, pc].map(|v| BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn from_rationals(pa: BigRational, pb: BigRational, pc: BigRational) -> Self {
        SymLen { coeffs: [pa, pb, pc] }
    }

    pub fn coeff(&self, l: EdgeLabel) -> &BigRational {
        &self.coeffs[l.index()]
    }

    pub fn coeffs(&self) -> &[BigRational; 3] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Integer coefficients, if all of them are integral and fit in `i64`.
    pub fn integer_coeffs(&self) -> Option<[i64; 3]> {
        let mut out = [0i64; 3];
        for (o, c) in out.iter_mut().zip(&self.coeffs) {
            if !c.is_integer() {
                return None;
            }
            *o = c.to_integer().to_i64()?;
        }
        Some(out)
    }

    pub fn scale(&self, factor: i64) -> SymLen {
        let f = BigRational::from_integer(factor.into());
        SymLen {
            coeffs: [&self.coeffs[0] * &f, &self.coeffs[1] * &f, &self.coeffs[2] * &f],
        }
    }

    /// Numeric value for concrete side lengths.
    pub fn eval(&self, a: f64, b: f64, c: f64) -> f64 {
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        f(&self.coeffs[0]) * a + f(&self.coeffs[1]) * b + f(&self.coeffs[2]) * c
    }
}

impl Add for SymLen {
    type Output = SymLen;
    fn add(mut self, rhs: SymLen) -> SymLen {
        self += &rhs;
        self
    }
}

impl Add<&SymLen> for &SymLen {
    type Output = SymLen;
    fn add(self, rhs: &SymLen) -> SymLen {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&SymLen> for SymLen {
    fn add_assign(&mut self, rhs: &SymLen) {
        for (l, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *l += r;
        }
    }
}

impl Neg for SymLen {
    type Output = SymLen;
    fn neg(self) -> SymLen {
        SymLen { coeffs: self.coeffs.map(|c| -c) }
    }
}

impl Sub for SymLen {
    type Output = SymLen;
    fn sub(self, rhs: SymLen) -> SymLen {
        self + (-rhs)
    }
}

impl Sub<&SymLen> for &SymLen {
    type Output = SymLen;
    fn sub(self, rhs: &SymLen) -> SymLen {
        self + &(-rhs.clone())
    }
}

impl Mul<i32> for &SymLen {
    type Output = SymLen;
    fn mul(self, rhs: i32) -> SymLen {
        self.scale(rhs as i64)
    }
}

impl Mul<i32> for SymLen {
    type Output = SymLen;
    fn mul(self, rhs: i32) -> SymLen {
        self.scale(rhs as i64)
    }
}

impl std::iter::Sum for SymLen {
    fn sum<I: Iterator<Item = SymLen>>(iter: I) -> SymLen {
        iter.fold(SymLen::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for SymLen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in EdgeLabel::ALL {
            let c = self.coeff(l);
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag == BigRational::from_integer(1.into()) {
                write!(f, "{l}")?;
            } else {
                write!(f, "{mag}{l}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for SymLen {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymLen {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = <[String; 3]>::deserialize(d)?;
        let mut coeffs: [BigRational; 3] = Default::default();
        for (c, p) in coeffs.iter_mut().zip(parts.iter()) {
            *c = parse_rational(p).ok_or_else(|| serde::de::Error::custom(format!("bad rational {p:?}")))?;
        }
        Ok(SymLen { coeffs })
    }
}

/// Parses `p`, `p/q` or a terminating decimal such as `2.75` as an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let mut n: BigInt = digits.parse().ok()?;
        if neg {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10), frac.len());
        return Some(BigRational::new(n, d));
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_arith() {
        let s = SymLen::from_ints(2, -1, 0) + SymLen::label(EdgeLabel::C);
        assert_eq!(s.to_string(), "2a - b + c");
        assert_eq!((&s - &s).to_string(), "0");
        assert_eq!((-s.clone()).to_string(), "-2a + b - c");
        assert_eq!(s.integer_coeffs(), Some([2, -1, 1]));
        assert!((s.eval(3.0, 5.0, 7.0) - 8.0).abs() < 1e-12);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("5/2"), Some(BigRational::new(5.into(), 2.into())));
        assert_eq!(parse_rational("2.75"), Some(BigRational::new(11.into(), 4.into())));
        assert_eq!(parse_rational("-3"), Some(BigRational::from_integer((-3).into())));
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn serde_round_trip() {
        let s = SymLen::from_ints(27, 1, 7);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"["27","1","7"]"#);
        let back: SymLen = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
