//! Exact rational row reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rational::Rational;

pub type Vector = Vec<Rational>;

/// Reduced row echelon form, zero rows dropped, rows ordered by pivot
/// column; pivots are 1 and their columns are cleared.
pub fn rref(mut rows: Vec<Vector>) -> Vec<Vector> {
    if rows.is_empty() {
        return rows;
    }
    let width = rows[0].len();
    let mut out: Vec<Vector> = Vec::new();
    for col in 0..width {
        let Some(idx) = rows.iter().position(|r| !r[col].is_zero()) else {
            continue;
        };
        let mut pivot = rows.swap_remove(idx);
        let lead = pivot[col].clone();
        for c in &mut pivot {
            *c /= &lead;
        }
        for r in rows.iter_mut().chain(out.iter_mut()) {
            if !r[col].is_zero() {
                let factor = r[col].clone();
                for (rc, pc) in r.iter_mut().zip(&pivot) {
                    *rc -= &factor * pc;
                }
            }
        }
        out.push(pivot);
        if rows.is_empty() {
            break;
        }
    }
    out.sort_by_key(|r| r.iter().position(|c| !c.is_zero()).unwrap_or(usize::MAX));
    out
}

pub fn rank(rows: &[Vector]) -> usize {
    rref(rows.to_vec()).len()
}

/// Reduce `v` modulo a reduced basis: eliminate every pivot column.
pub fn reduce_mod(basis: &[Vector], v: &mut Vector) {
    for row in basis {
        let pivot_col = row.iter().position(|c| !c.is_zero()).expect("no zero rows in a basis");
        if !v[pivot_col].is_zero() {
            let factor = v[pivot_col].clone();
            for (vc, rc) in v.iter_mut().zip(row) {
                *vc -= &factor * rc;
            }
        }
    }
}

/// Basis of the right nullspace of the rows (each of length `dim`).
pub fn nullspace(rows: &[Vector], dim: usize) -> Vec<Vector> {
    let basis = rref(rows.to_vec());
    let mut pivot_cols = Vec::new();
    for row in &basis {
        pivot_cols.push(row.iter().position(|c| !c.is_zero()).unwrap());
    }
    let mut out = Vec::new();
    for free in 0..dim {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); dim];
        v[free] = Rational::from_integer(BigInt::from(1));
        for (row, &pc) in basis.iter().zip(&pivot_cols) {
            v[pc] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

/// Scale a rational vector to a primitive integer vector (gcd 1); the sign
/// is preserved. Returns `None` for the zero vector.
pub fn primitive_int(v: &[Rational]) -> Option<Vec<BigInt>> {
    if v.iter().all(|c| c.is_zero()) {
        return None;
    }
    let mut lcm = BigInt::from(1);
    for c in v {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    Some(ints.into_iter().map(|c| c / &g).collect())
}

/// Primitive integer vector with positive leading coefficient.
pub fn primitive_int_signed(v: &[Rational]) -> Option<Vec<BigInt>> {
    let ints = primitive_int(v)?;
    let lead = ints.iter().find(|c| !c.is_zero()).unwrap();
    if lead.is_negative() {
        Some(ints.iter().map(|c| -c).collect())
    } else {
        Some(ints)
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn int_to_rational(v: &[BigInt]) -> Vector {
    v.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn v(vals: &[i64]) -> Vector {
        vals.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_rank_nullspace() {
        let rows = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
        assert_eq!(rank(&rows), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for row in &rows {
            assert!(dot(row, &ns[0]).is_zero());
        }
    }

    #[test]
    fn reduce_and_primitive() {
        let basis = rref(vec![v(&[1, 0, -1]), v(&[0, 1, 2])]);
        let mut x = v(&[3, 4, 5]);
        reduce_mod(&basis, &mut x);
        assert!(x[0].is_zero() && x[1].is_zero());
        assert_eq!(primitive_int(&v(&[-2, 4, -6])).unwrap(), vec![
            BigInt::from(-1),
            BigInt::from(2),
            BigInt::from(-3)
        ]);
        assert_eq!(primitive_int_signed(&v(&[-2, 4, -6])).unwrap()[0], BigInt::from(1));
        assert!(primitive_int(&v(&[0, 0])).is_none());
    }
}
