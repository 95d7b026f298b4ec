//! Double description of polyhedral cones.
//!
//! From a homogeneous system `E x = 0, B x <= 0` the incremental insertion
//! procedure maintains a lineality basis plus extreme rays, with the usual
//! combinatorial adjacency test on tight sets. Sizes here are tiny (a few
//! dozen constraints in at most 16 ambient dimensions), so rays are kept as
//! primitive integer vectors inside rationals.

use num_traits::Zero;

use crate::linalg::{dot, int_to_rational, primitive_int, rank, Vector};
use crate::rational::Rational;

#[derive(Debug, Clone)]
pub struct Generators {
    pub dim: usize,
    pub lineality: Vec<Vector>,
    pub rays: Vec<Vector>,
}

impl Generators {
    /// Dimension of the cone's linear span.
    pub fn cone_dim(&self) -> usize {
        let all: Vec<Vector> = self.lineality.iter().chain(&self.rays).cloned().collect();
        rank(&all)
    }
}

struct Ray {
    dir: Vector,
    tight: u128,
}

/// Constraints are processed equalities-first; a ray's tight set records
/// which constraints it satisfies with equality (bit per constraint, at
/// most 128 of them).
pub fn generators(dim: usize, equalities: &[Vector], inequalities: &[Vector]) -> Generators {
    let total = equalities.len() + inequalities.len();
    assert!(total <= 128, "too many constraints for the tight-set mask");

    let mut lineality: Vec<Vector> = (0..dim)
        .map(|k| {
            let mut v = vec![Rational::zero(); dim];
            v[k] = Rational::from_integer(1.into());
            v
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    let all_before = |idx: usize| -> u128 {
        if idx == 0 {
            0
        } else {
            (1u128 << idx) - 1
        }
    };

    for (idx, (h, is_eq)) in equalities
        .iter()
        .map(|h| (h, true))
        .chain(inequalities.iter().map(|h| (h, false)))
        .enumerate()
    {
        // Lineality pivot: some basis vector not orthogonal to h.
        if let Some(p) = lineality.iter().position(|l| !dot(l, h).is_zero()) {
            let pivot = lineality.swap_remove(p);
            let dp = dot(&pivot, h);
            for l in &mut lineality {
                let c = dot(l, h) / &dp;
                for (lc, pc) in l.iter_mut().zip(&pivot) {
                    *lc -= &c * pc;
                }
                normalize(l);
            }
            for r in &mut rays {
                let c = dot(&r.dir, h) / &dp;
                for (rc, pc) in r.dir.iter_mut().zip(&pivot) {
                    *rc -= &c * pc;
                }
                normalize(&mut r.dir);
                r.tight |= 1 << idx;
            }
            if !is_eq {
                // The pivot direction survives on the feasible side only.
                let mut dir = pivot;
                if dp > Rational::zero() {
                    for c in &mut dir {
                        *c = -c.clone();
                    }
                }
                normalize(&mut dir);
                rays.push(Ray {
                    dir,
                    tight: all_before(idx),
                });
            }
            continue;
        }

        let vals: Vec<Rational> = rays.iter().map(|r| dot(&r.dir, h)).collect();
        let zero = Rational::zero();
        let mut keep: Vec<Ray> = Vec::new();
        let mut pos_idx = Vec::new();
        let mut neg_idx = Vec::new();
        for (i, v) in vals.iter().enumerate() {
            if *v > zero {
                pos_idx.push(i);
            } else if *v < zero {
                neg_idx.push(i);
            }
        }
        // Combine adjacent (positive, negative) pairs onto the hyperplane.
        let mut combos: Vec<Ray> = Vec::new();
        for &p in &pos_idx {
            for &q in &neg_idx {
                let common = rays[p].tight & rays[q].tight;
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == q || r.tight & common != common);
                if !adjacent {
                    continue;
                }
                let (vp, vq) = (&vals[p], &vals[q]);
                let mut dir: Vector = rays[p]
                    .dir
                    .iter()
                    .zip(&rays[q].dir)
                    .map(|(a, b)| vp * b - vq * a)
                    .collect();
                normalize(&mut dir);
                combos.push(Ray {
                    dir,
                    tight: common | (1 << idx),
                });
            }
        }
        for (i, r) in rays.into_iter().enumerate() {
            let keep_it = if is_eq {
                vals[i].is_zero()
            } else {
                vals[i] <= zero
            };
            if keep_it {
                let mut r = r;
                if vals[i].is_zero() {
                    r.tight |= 1 << idx;
                }
                keep.push(r);
            }
        }
        keep.extend(combos);
        rays = keep;
    }

    Generators {
        dim,
        lineality,
        rays: rays.into_iter().map(|r| r.dir).collect(),
    }
}

fn normalize(v: &mut Vector) {
    if let Some(p) = primitive_int(v) {
        *v = int_to_rational(&p);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn v(vals: &[i64]) -> Vector {
        vals.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn orthant() {
        // x <= 0, y <= 0 in the plane: two rays, no lineality.
        let g = generators(2, &[], &[v(&[1, 0]), v(&[0, 1])]);
        assert!(g.lineality.is_empty());
        assert_eq!(g.rays.len(), 2);
        assert_eq!(g.cone_dim(), 2);
    }

    #[test]
    fn halfplane_and_line() {
        // Single inequality: lineality dim 1 plus one ray.
        let g = generators(2, &[], &[v(&[1, 1])]);
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays.len(), 1);
        // Single equality: a line.
        let g = generators(2, &[v(&[1, -1])], &[]);
        assert_eq!(g.lineality.len(), 1);
        assert!(g.rays.is_empty());
    }

    #[test]
    fn simplex_cone_in_3d() {
        // x <= y <= z <= 0 has three extreme rays.
        let sys = [v(&[1, -1, 0]), v(&[0, 1, -1]), v(&[0, 0, 1])];
        let g = generators(3, &[], &sys);
        assert!(g.lineality.is_empty());
        assert_eq!(g.rays.len(), 3);
        for r in &g.rays {
            for h in &sys {
                assert!(dot(r, h) <= rat(0));
            }
        }
        assert_eq!(g.cone_dim(), 3);
    }

    #[test]
    fn square_cone_has_four_rays() {
        // Cone over a square: z <= 0, |x| <= -z, |y| <= -z.
        let sys = [
            v(&[1, 0, 1]),
            v(&[-1, 0, 1]),
            v(&[0, 1, 1]),
            v(&[0, -1, 1]),
        ];
        let g = generators(3, &[], &sys);
        assert_eq!(g.rays.len(), 4);
    }
}
