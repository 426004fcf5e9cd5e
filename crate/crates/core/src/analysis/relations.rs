use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::AnalysisError;
use crate::exact::EdgeLabel;
use crate::model::{SegmentKind, Side, Tiling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Segment(usize),
    Derived,
}

/// `j·x = p·y + q·z` where `x` is `kind` and `y, z` are the other two labels in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Relation {
    pub kind: EdgeLabel,
    pub j: i64,
    pub p: i64,
    pub q: i64,
    pub witness: Witness,
}

impl Relation {
    pub fn new(kind: EdgeLabel, j: i64, p: i64, q: i64, witness: Witness) -> Relation {
        Relation { kind, j, p, q, witness }
    }

    /// Row of the homogeneous system over `(a, b, c)`: `j` at `kind`, `−p, −q` at the others.
    pub fn coeffs(&self) -> [i64; 3] {
        let mut r = [0; 3];
        let [y, z] = self.kind.others();
        r[self.kind.index()] = self.j;
        r[y.index()] = -self.p;
        r[z.index()] = -self.q;
        r
    }

    /// Normalizes an integer combination `d·(a, b, c) = 0`. Returns `None` for the zero
    /// vector and `Err` when no positive `(a, b, c)` can satisfy it.
    pub fn from_difference(d: [i64; 3], witness: Witness) -> Result<Option<Relation>, [i64; 3]> {
        let g = d.iter().fold(0i64, |g, x| g.gcd(x));
        if g == 0 {
            return Ok(None);
        }
        let d = d.map(|x| x / g);
        let pos = d.iter().filter(|x| **x > 0).count();
        let neg = d.iter().filter(|x| **x < 0).count();
        // The isolated label is the one alone on its side of the equation.
        let isolated = match (pos, neg) {
            (1, 1) => {
                let (i, j) = {
                    let nz: Vec<usize> = (0..3).filter(|&i| d[i] != 0).collect();
                    (nz[0], nz[1])
                };
                if d[j].abs() > d[i].abs() {
                    j
                } else {
                    i
                }
            }
            (1, _) => (0..3).find(|&i| d[i] > 0).unwrap(),
            (_, 1) => (0..3).find(|&i| d[i] < 0).unwrap(),
            _ => return Err(d),
        };
        let s = d[isolated].signum();
        let d = d.map(|x| x * s);
        let kind = EdgeLabel::ALL[isolated];
        let [y, z] = kind.others();
        Ok(Some(Relation { kind, j: d[isolated], p: -d[y.index()], q: -d[z.index()], witness }))
    }

    /// Rewrites the relation in the other orientation when both sides are single labels.
    pub fn as_kind(&self, kind: EdgeLabel) -> Option<Relation> {
        if kind == self.kind {
            return Some(self.clone());
        }
        let c = self.coeffs();
        let [y, z] = kind.others();
        let flipped = c.map(|x| -x);
        (flipped[kind.index()] > 0 && flipped[y.index()] <= 0 && flipped[z.index()] <= 0).then(|| Relation {
            kind,
            j: flipped[kind.index()],
            p: -flipped[y.index()],
            q: -flipped[z.index()],
            witness: self.witness,
        })
    }
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [y, z] = self.kind.others();
        write!(f, "{}{} = {}{} + {}{}", self.j, self.kind, self.p, y, self.q, z)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationSet {
    pub relations: Vec<Relation>,
    /// Segments whose side difference has no positive solution.
    pub impossible: Vec<(usize, [i64; 3])>,
}

/// One relation per internal maximal segment with unequal side sums, deduplicated.
pub fn extract_relations(t: &Tiling) -> RelationSet {
    let mut out = RelationSet::default();
    for seg in &t.segments {
        if seg.kind != SegmentKind::Internal {
            continue;
        }
        let d = t.side_sum(seg, Side::Left) - t.side_sum(seg, Side::Right);
        let Some(ints) = d.integer_coeffs() else { continue };
        match Relation::from_difference(ints, Witness::Segment(seg.id)) {
            Ok(Some(r)) => {
                if !out.relations.iter().any(|x| (x.kind, x.j, x.p, x.q) == (r.kind, r.j, r.p, r.q)) {
                    out.relations.push(r);
                }
            }
            Ok(None) => {}
            Err(d) => out.impossible.push((seg.id, d)),
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Ratios {
    #[serde(serialize_with = "ser_opt_ratio")]
    pub a_over_b: Option<BigRational>,
    #[serde(serialize_with = "ser_opt_ratio")]
    pub c_over_b: Option<BigRational>,
    pub kernel_dim: usize,
}

fn ser_opt_ratio<S: serde::Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_str("undetermined"),
    }
}

/// Basis of the rational kernel of `rows` (each a vector over `(a, b, c)`).
#[allow(clippy::needless_range_loop)]
pub fn rational_kernel(rows: &[[BigRational; 3]]) -> Vec<[BigRational; 3]> {
    let mut m: Vec<[BigRational; 3]> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..3 {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, pr);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for k in 0..3 {
                    let v = &m[r][k] * &f;
                    m[i][k] -= v;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..3).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v: [BigRational; 3] = std::array::from_fn(|_| BigRational::zero());
            v[fc] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][fc].clone();
            }
            v
        })
        .collect()
}

fn ratio_in_kernel(basis: &[[BigRational; 3]], i: usize, j: usize) -> Option<BigRational> {
    // x_i / x_j is constant on the kernel iff every basis vector has the same ratio
    // (vectors with x_i = x_j = 0 impose nothing, but some vector must have x_j ≠ 0).
    let mut ratio: Option<BigRational> = None;
    for v in basis {
        if v[j].is_zero() {
            if !v[i].is_zero() {
                return None;
            }
            continue;
        }
        let r = &v[i] / &v[j];
        match &ratio {
            Some(x) if *x != r => return None,
            _ => ratio = Some(r),
        }
    }
    ratio
}

fn admits_positive(basis: &[[BigRational; 3]], rows: &[[BigRational; 3]]) -> bool {
    match basis.len() {
        0 => false,
        1 => {
            let v = &basis[0];
            v.iter().all(|x| x.is_positive()) || v.iter().all(|x| x.is_negative())
        }
        2 => {
            // A plane n·x = 0 meets the open positive orthant iff n has entries of both signs.
            let n = rows.iter().find(|r| r.iter().any(|x| !x.is_zero())).expect("rank one");
            n.iter().any(|x| x.is_positive()) && n.iter().any(|x| x.is_negative())
        }
        _ => true,
    }
}

/// Ratios forced by the relations, from the kernel of their coefficient matrix.
pub fn deduce_ratios(rels: &[Relation]) -> Result<Ratios, AnalysisError> {
    let rows: Vec<[BigRational; 3]> =
        rels.iter().map(|r| r.coeffs().map(|x| BigRational::from_integer(BigInt::from(x)))).collect();
    let basis = rational_kernel(&rows);
    if !admits_positive(&basis, &rows) {
        return Err(AnalysisError::InconsistentRelations);
    }
    Ok(Ratios { a_over_b: ratio_in_kernel(&basis, 0, 1), c_over_b: ratio_in_kernel(&basis, 2, 1), kernel_dim: basis.len() })
}

/// `a/b = (Jq + pQ)/(jQ + qP)` for an a-relation `ja = pb + qc` and a b-relation
/// `Jb = Pa + Qc`, obtained by eliminating `c`. `None` when the denominator vanishes.
pub fn two_relation_ratio(a_rel: (i64, i64, i64), b_rel: (i64, i64, i64)) -> Option<BigRational> {
    let (j, p, q) = a_rel;
    let (jj, pp, qq) = b_rel;
    let num = BigInt::from(jj) * q + BigInt::from(p) * qq;
    let den = BigInt::from(j) * qq + BigInt::from(q) * pp;
    (!den.is_zero()).then(|| BigRational::new(num, den))
}
