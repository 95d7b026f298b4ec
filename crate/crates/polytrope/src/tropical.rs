//! Exact max-plus matrix algebra.
//!
//! A square matrix `A` with finite rational entries is read as the weighted
//! complete digraph on nodes `1..n` with `A[i][j]` the weight of edge
//! `i -> j`. The max-plus eigenvalue `lambda(A)` is the maximum cycle mean.
//! With `B = A - lambda(A)` entrywise, the Kleene plus `B+` collects maximum
//! path weights, `B* = I (+) B+` adds the zero diagonal, and the columns of
//! `B*` carry the tropical vertices of the polytrope of `A`; the columns with
//! `B+[j][j] = 0` carry the tropical eigenvectors.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, rat, Rational};

/// Square matrix of finite rationals, row-major; nodes are `1..n` externally
/// and `0..n` internally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl TropMatrix {
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::DimensionMismatch(n * n, entries.len()));
        }
        Ok(TropMatrix { n, entries })
    }

    pub fn zero(n: usize) -> Self {
        TropMatrix {
            n,
            entries: vec![rat(0); n * n],
        }
    }

    /// Build from integer entries, row-major rows.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "ragged matrix");
            entries.extend(row.iter().map(|&v| rat(v)));
        }
        TropMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn transpose(&self) -> TropMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        TropMatrix { n, entries }
    }

    /// Entrywise `A + c`.
    pub fn shift(&self, c: &Rational) -> TropMatrix {
        TropMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e + c).collect(),
        }
    }

    /// Tropical matrix product: `(A (*) B)[i][j] = max_k (A[i][k] + B[k][j])`.
    pub fn trop_mul(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut best = self.get(i, 0) + other.get(0, j);
                for k in 1..n {
                    let cand = self.get(i, k) + other.get(k, j);
                    if cand > best {
                        best = cand;
                    }
                }
                entries.push(best);
            }
        }
        Ok(TropMatrix { n, entries })
    }

    /// Max-plus eigenvalue: the maximum cycle mean, by dynamic programming
    /// over closed walks of length `1..=n`. Every closed walk splits into
    /// simple cycles, so the maximum of `(A^k)[i][i] / k` is exactly the
    /// maximum mean over simple cycles.
    pub fn eigenvalue(&self) -> Rational {
        let n = self.n;
        let mut best: Option<Rational> = None;
        let mut power = self.clone();
        for k in 1..=n {
            for i in 0..n {
                let mean = power.get(i, i) / rat(k as i64);
                if best.as_ref().is_none_or(|b| &mean > b) {
                    best = Some(mean);
                }
            }
            if k < n {
                power = power.trop_mul(self).expect("same dimension");
            }
        }
        best.expect("n >= 1")
    }

    /// `A - lambda(A)` entrywise; has eigenvalue zero.
    pub fn normalize(&self) -> TropMatrix {
        let lambda = self.eigenvalue();
        self.shift(&(-lambda))
    }

    /// `A (+) A^2 (+) ... (+) A^n`: maximum weight of a path with >= 1 edge.
    /// Requires `eigenvalue(A) <= 0`, otherwise entries diverge.
    pub fn kleene_plus(&self) -> Result<TropMatrix> {
        let lambda = self.eigenvalue();
        if lambda > rat(0) {
            return Err(Error::PositiveCycle(format_rational(&lambda)));
        }
        let n = self.n;
        let mut acc = self.clone();
        let mut power = self.clone();
        for _ in 2..=n {
            power = power.trop_mul(self)?;
            for idx in 0..n * n {
                if power.entries[idx] > acc.entries[idx] {
                    acc.entries[idx] = power.entries[idx].clone();
                }
            }
        }
        Ok(acc)
    }

    /// `A* = I (+) A+` where `I` is the tropical identity (zero diagonal,
    /// minus infinity off the diagonal). The identity never materializes:
    /// only the diagonal of `A+` is clamped up to zero.
    pub fn kleene_star(&self) -> Result<TropMatrix> {
        let mut plus = self.kleene_plus()?;
        let zero = rat(0);
        for i in 0..self.n {
            if *plus.get(i, i) < zero {
                plus.set(i, i, zero.clone());
            }
        }
        Ok(plus)
    }

    /// Tropical vertices of the polytrope: deduplicated canonical columns of
    /// `normalize(A)*`.
    pub fn polytrope_vertices(&self) -> TropPolytopeVertices {
        let star = self.normalize().kleene_star().expect("normalized matrix has eigenvalue 0");
        let mut pts: Vec<TropPoint> = (0..self.n).map(|j| TropPoint::new(star.column(j))).collect();
        pts.sort();
        pts.dedup();
        TropPolytopeVertices {
            source: VertexSource::Polytrope,
            vertices: pts,
        }
    }

    /// Tropical vertices of the eigenspace: canonical columns `j` of
    /// `normalize(A)*` with `normalize(A)+[j][j] = 0`, i.e. the columns the
    /// star shares with the plus.
    pub fn eigenspace_vertices(&self) -> TropPolytopeVertices {
        let plus = self.normalize().kleene_plus().expect("normalized matrix has eigenvalue 0");
        let zero = rat(0);
        let mut pts: Vec<TropPoint> = (0..self.n)
            .filter(|&j| *plus.get(j, j) == zero)
            .map(|j| TropPoint::new(plus.column(j)))
            .collect();
        pts.sort();
        pts.dedup();
        TropPolytopeVertices {
            source: VertexSource::Eigenspace,
            vertices: pts,
        }
    }

    fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    /// Max-plus eigenvector test: `max_j (A[i][j] + x[j]) = lambda(A) + x[i]`
    /// for every row `i`.
    pub fn check_eigenpair(&self, x: &TropPoint) -> Result<bool> {
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch(self.n, x.dim()));
        }
        let lambda = self.eigenvalue();
        for i in 0..self.n {
            let mut best = self.get(i, 0) + &x.coords[0];
            for j in 1..self.n {
                let cand = self.get(i, j) + &x.coords[j];
                if cand > best {
                    best = cand;
                }
            }
            if best != &lambda + &x.coords[i] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Polytrope membership: `max_{i,j} (A[i][j] + x[j] - x[i]) = lambda(A)`.
    pub fn check_polytrope_member(&self, x: &TropPoint) -> Result<bool> {
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch(self.n, x.dim()));
        }
        let lambda = self.eigenvalue();
        let mut best: Option<Rational> = None;
        for i in 0..self.n {
            for j in 0..self.n {
                let cand = self.get(i, j) + &x.coords[j] - &x.coords[i];
                if best.as_ref().is_none_or(|b| &cand > b) {
                    best = Some(cand);
                }
            }
        }
        Ok(best.expect("n >= 1") == lambda)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for TropMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = (0..self.n)
            .map(|i| (0..self.n).map(|j| format_rational(self.get(i, j))).collect())
            .collect();
        MatrixJson { n: self.n, entries }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for TropMatrix {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(de)?;
        if raw.n == 0 {
            return Err(D::Error::custom("matrix must have n >= 1"));
        }
        if raw.entries.len() != raw.n {
            return Err(D::Error::custom("row count does not match n"));
        }
        let mut entries = Vec::with_capacity(raw.n * raw.n);
        for row in &raw.entries {
            if row.len() != raw.n {
                return Err(D::Error::custom("column count does not match n"));
            }
            for s in row {
                entries.push(parse_rational(s).map_err(|e| D::Error::custom(e.to_string()))?);
            }
        }
        Ok(TropMatrix { n: raw.n, entries })
    }
}

/// Point of the tropical torus (coordinates modulo a common additive
/// constant), stored with the first coordinate pinned to zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TropPoint {
    coords: Vec<Rational>,
}

impl TropPoint {
    pub fn new(mut coords: Vec<Rational>) -> Self {
        assert!(!coords.is_empty());
        let base = coords[0].clone();
        for c in &mut coords {
            *c -= &base;
        }
        TropPoint { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        TropPoint::new(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Entrywise affine combination `t*a + (1-t)*b` of canonical
    /// representatives; the result is canonicalized again.
    pub fn affine(t: &Rational, a: &TropPoint, b: &TropPoint) -> TropPoint {
        assert_eq!(a.dim(), b.dim());
        let one_minus = rat(1) - t;
        TropPoint::new(
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| t * x + &one_minus * y)
                .collect(),
        )
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_rational).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexSource {
    Polytrope,
    Eigenspace,
}

/// Deduplicated canonical tropical extreme points, tagged by origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropPolytopeVertices {
    pub source: VertexSource,
    pub vertices: Vec<TropPoint>,
}

impl TropPolytopeVertices {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, p: &TropPoint) -> bool {
        self.vertices.binary_search(p).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn m(rows: &[&[i64]]) -> TropMatrix {
        TropMatrix::from_int_rows(rows)
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(m(&[&[0, -1], &[-1, 0]]).eigenvalue(), rat(0));
        assert_eq!(TropMatrix::zero(4).eigenvalue(), rat(0));
        assert_eq!(m(&[&[0, 3], &[2, 1]]).eigenvalue(), ratio(5, 2));
        assert_eq!(m(&[&[7]]).eigenvalue(), rat(7));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(m(&[&[0, -1], &[-1, 0]]).normalize(), m(&[&[0, -1], &[-1, 0]]));
        let a = m(&[&[0, 3], &[2, 1]]).normalize();
        assert_eq!(a.get(0, 0), &ratio(-5, 2));
        assert_eq!(a.get(0, 1), &ratio(1, 2));
        assert_eq!(a.get(1, 0), &ratio(-1, 2));
        assert_eq!(a.get(1, 1), &ratio(-3, 2));
        assert_eq!(a.eigenvalue(), rat(0));
        assert_eq!(m(&[&[9]]).normalize(), m(&[&[0]]));
    }

    #[test]
    fn trop_mul_examples() {
        let a = m(&[&[0, -1], &[-1, 0]]);
        assert_eq!(a.trop_mul(&a).unwrap(), a);
        let b = m(&[&[0, 3], &[2, 1]]);
        assert_eq!(b.trop_mul(&b).unwrap(), m(&[&[5, 4], &[3, 5]]));
        // The tropical identity is only modeled inside kleene_star, but
        // multiplying by a very negative off-diagonal approximates it.
        let near_id = m(&[&[0, -1000], &[-1000, 0]]);
        assert_eq!(b.trop_mul(&near_id).unwrap(), b);
    }

    #[test]
    fn trop_mul_dimension_mismatch() {
        let a = m(&[&[0]]);
        let b = m(&[&[0, 0], &[0, 0]]);
        assert!(matches!(a.trop_mul(&b), Err(Error::DimensionMismatch(1, 2))));
    }

    #[test]
    fn kleene_examples() {
        let a = m(&[&[0, -1], &[-1, 0]]);
        assert_eq!(a.kleene_plus().unwrap(), a);
        assert_eq!(a.kleene_star().unwrap(), a);

        let nb = m(&[&[0, 3], &[2, 1]]).normalize();
        let plus = nb.kleene_plus().unwrap();
        assert_eq!(plus.get(0, 0), &rat(0));
        assert_eq!(plus.get(0, 1), &ratio(1, 2));
        assert_eq!(plus.get(1, 0), &ratio(-1, 2));
        assert_eq!(plus.get(1, 1), &rat(0));
        assert_eq!(nb.kleene_star().unwrap(), plus);

        assert_eq!(TropMatrix::zero(3).kleene_star().unwrap(), TropMatrix::zero(3));
        assert!(matches!(
            m(&[&[1, 0], &[0, 0]]).kleene_plus(),
            Err(Error::PositiveCycle(_))
        ));
    }

    #[test]
    fn star_is_tropically_idempotent() {
        for a in [m(&[&[0, -1], &[-1, 0]]), m(&[&[0, 3], &[2, 1]]), m(&[&[-1, 2, 0], &[1, -3, 1], &[0, 0, -2]])] {
            let star = a.normalize().kleene_star().unwrap();
            assert_eq!(star.trop_mul(&star).unwrap(), star);
        }
    }

    #[test]
    fn polytrope_vertices_examples() {
        let v = m(&[&[0, 3], &[2, 1]]).polytrope_vertices();
        assert_eq!(v.len(), 1);
        assert_eq!(v.vertices[0], TropPoint::new(vec![rat(0), ratio(-1, 2)]));

        let v = m(&[&[0, -1], &[-1, 0]]).polytrope_vertices();
        assert_eq!(v.len(), 2);
        assert!(v.contains(&TropPoint::from_ints(&[0, -1])));
        assert!(v.contains(&TropPoint::from_ints(&[0, 1])));

        assert_eq!(TropMatrix::zero(2).polytrope_vertices().len(), 1);
    }

    #[test]
    fn eigenspace_vertices_examples() {
        assert_eq!(m(&[&[0, -1], &[-1, 0]]).eigenspace_vertices().len(), 2);
        let v = m(&[&[0, 3], &[2, 1]]).eigenspace_vertices();
        assert_eq!(v.len(), 1);
        assert_eq!(v.vertices[0], TropPoint::new(vec![rat(0), ratio(-1, 2)]));
        assert_eq!(TropMatrix::zero(3).eigenspace_vertices().len(), 1);
    }

    #[test]
    fn eigenspace_within_polytrope() {
        for a in [m(&[&[0, -1], &[-1, 0]]), m(&[&[0, 3], &[2, 1]]), m(&[&[-1, 2, 0], &[1, -3, 1], &[0, 0, -2]])] {
            let pol = a.polytrope_vertices();
            for v in &a.eigenspace_vertices().vertices {
                assert!(pol.contains(v));
                assert!(a.check_eigenpair(v).unwrap());
            }
            for v in &pol.vertices {
                assert!(a.check_polytrope_member(v).unwrap());
            }
        }
    }

    #[test]
    fn check_eigenpair_examples() {
        let a = m(&[&[0, 3], &[2, 1]]);
        assert!(a.check_eigenpair(&TropPoint::new(vec![rat(0), ratio(-1, 2)])).unwrap());
        // (0,0) lies on the tropical segment between the two extreme
        // eigenvectors (0,-1) and (0,1), so it is a genuine eigenvector.
        let b = m(&[&[0, -1], &[-1, 0]]);
        assert!(b.check_eigenpair(&TropPoint::from_ints(&[0, 0])).unwrap());
        assert!(!b.check_eigenpair(&TropPoint::from_ints(&[0, 5])).unwrap());
        assert!(TropMatrix::zero(3)
            .check_eigenpair(&TropPoint::from_ints(&[0, 0, 0]))
            .unwrap());
    }

    #[test]
    fn check_polytrope_member_examples() {
        let b = m(&[&[0, -1], &[-1, 0]]);
        assert!(b.check_polytrope_member(&TropPoint::from_ints(&[0, 0])).unwrap());
        assert!(!b.check_polytrope_member(&TropPoint::from_ints(&[0, 5])).unwrap());
        assert!(matches!(
            b.check_polytrope_member(&TropPoint::from_ints(&[0, 0, 0])),
            Err(Error::DimensionMismatch(2, 3))
        ));
    }

    #[test]
    fn eigenvalue_shift_invariance() {
        let a = m(&[&[-1, 2, 0], &[1, -3, 1], &[0, 0, -2]]);
        let c = ratio(7, 3);
        assert_eq!(a.shift(&c).eigenvalue(), a.eigenvalue() + &c);
    }

    #[test]
    fn matrix_json_round_trip() {
        let a = m(&[&[0, 3], &[2, 1]]).normalize();
        let s = a.to_json();
        assert_eq!(TropMatrix::from_json(&s).unwrap(), a);
        let parsed = TropMatrix::from_json(r#"{"n":2,"entries":[["0","3"],["2","1"]]}"#).unwrap();
        assert_eq!(parsed, m(&[&[0, 3], &[2, 1]]));
        assert!(TropMatrix::from_json(r#"{"n":2,"entries":[["0","3"]]}"#).is_err());
        assert!(TropMatrix::from_json(r#"{"n":1,"entries":[["1/0"]]}"#).is_err());
    }
}
