//! Yang-Baxter residuals and projective matrix comparison.
//!
//! The triplet form of the equation is `A12 B13 C23 = C23 B13 A12`; a
//! triplet solves it exactly when the residual matrix vanishes.

use crate::matrix::{embed, SpacePair, TripleSpaceMatrix, Triplet, VertexMatrix};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// `A12 B13 C23 - C23 B13 A12` on the 8x8 triple space.
pub fn ybe_residual<T: Scalar>(t: &Triplet<T>) -> TripleSpaceMatrix<T> {
    let a12 = embed(&t.a, SpacePair::S12);
    let b13 = embed(&t.b, SpacePair::S13);
    let c23 = embed(&t.c, SpacePair::S23);
    let lhs = a12.mul(&b13).mul(&c23);
    let rhs = c23.mul(&b13).mul(&a12);
    lhs.sub(&rhs)
}

/// Residual of the constant equation `R12 R13 R23 = R23 R13 R12`.
pub fn constant_ybe_residual<T: Scalar>(r: &VertexMatrix<T>) -> TripleSpaceMatrix<T> {
    ybe_residual(&Triplet::constant(r.clone()))
}

pub fn solves_ybe<T: Scalar>(t: &Triplet<T>, atol: f64) -> bool {
    ybe_residual(t).is_zero_tol(atol)
}

/// Max-entry magnitude of the residual, for reporting.
pub fn residual_magnitude<T: Scalar>(t: &Triplet<T>) -> f64 {
    ybe_residual(t).max_magnitude()
}

fn projective_eq_entries<T: Scalar>(xs: &[&T], ys: &[&T], atol: f64) -> Result<bool> {
    let x_zero = xs.iter().all(|v| v.is_zero_tol(atol));
    let y_zero = ys.iter().all(|v| v.is_zero_tol(atol));
    if x_zero && y_zero {
        return Err(Error::BothZero);
    }
    if x_zero || y_zero {
        return Ok(false);
    }
    if T::EXACT {
        // cross-multiplication against the first nonzero pivot of xs
        let p = xs.iter().position(|v| !v.is_zero_tol(0.0)).expect("nonzero");
        if ys[p].is_zero_tol(0.0) {
            return Ok(false);
        }
        for i in 0..xs.len() {
            let lhs = xs[i].clone() * ys[p].clone();
            let rhs = ys[i].clone() * xs[p].clone();
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        // normalize both by the max-magnitude pivot of xs, compare entrywise
        let p = (0..xs.len())
            .max_by(|&i, &j| {
                xs[i].magnitude()
                    .partial_cmp(&xs[j].magnitude())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("nonempty");
        if ys[p].magnitude() == 0.0 {
            return Ok(false);
        }
        let xp = xs[p].clone();
        let yp = ys[p].clone();
        for i in 0..xs.len() {
            let xn = xs[i].clone() / xp.clone();
            let yn = ys[i].clone() / yp.clone();
            if !xn.eq_tol(&yn, atol) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// True when `M = c N` for some nonzero scalar `c`. Errs if both matrices
/// vanish (the projective class is undefined there).
pub fn projective_eq<T: Scalar>(
    m: &VertexMatrix<T>,
    n: &VertexMatrix<T>,
    atol: f64,
) -> Result<bool> {
    let xs: Vec<&T> = m.entries().collect();
    let ys: Vec<&T> = n.entries().collect();
    projective_eq_entries(&xs, &ys, atol)
}

/// Componentwise projective comparison: each of A, B, C may carry its own
/// scalar factor.
pub fn triplet_projective_eq<T: Scalar>(s: &Triplet<T>, t: &Triplet<T>, atol: f64) -> Result<bool> {
    Ok(projective_eq(&s.a, &t.a, atol)?
        && projective_eq(&s.b, &t.b, atol)?
        && projective_eq(&s.c, &t.c, atol)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, Scalar};

    fn ri(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn identity_triplet_solves() {
        let t = Triplet::constant(VertexMatrix::<Rational>::identity());
        assert!(ybe_residual(&t).is_zero_tol(0.0));
    }

    #[test]
    fn swap_matrix_solves_constant_equation() {
        let p = VertexMatrix::<Rational>::swap();
        assert!(constant_ybe_residual(&p).is_zero_tol(0.0));
    }

    #[test]
    fn non_solution_detected() {
        // note: (I, I, D) is a solution for any D since both sides reduce
        // to D23; a genuine non-solution needs non-commuting slots
        let t = Triplet::new(
            VertexMatrix::swap(),
            VertexMatrix::diagonal([ri(1), ri(1), ri(1), ri(2)]),
            VertexMatrix::swap(),
        );
        assert!(!ybe_residual(&t).is_zero_tol(0.0));
        let trivial = Triplet::new(
            VertexMatrix::identity(),
            VertexMatrix::identity(),
            VertexMatrix::diagonal([ri(1), ri(1), ri(1), ri(2)]),
        );
        assert!(ybe_residual(&trivial).is_zero_tol(0.0));
    }

    #[test]
    fn scaling_one_slot_scales_the_residual() {
        let t = Triplet::new(
            VertexMatrix::swap(),
            VertexMatrix::diagonal([ri(1), ri(1), ri(1), ri(2)]),
            VertexMatrix::swap(),
        );
        let scaled = Triplet::new(t.a.scale(&ri(3)), t.b.clone(), t.c.clone());
        let r = ybe_residual(&t);
        let rs = ybe_residual(&scaled);
        for (u, v) in r.entries().zip(rs.entries()) {
            assert_eq!(u.clone() * ri(3), v.clone());
        }
    }

    #[test]
    fn projective_eq_scaling_and_counterexample() {
        let m = VertexMatrix::diagonal([ri(1), ri(2), ri(3), ri(4)]);
        assert!(projective_eq(&m, &m.scale(&ri(3)), 0.0).unwrap());
        let p = VertexMatrix::<Rational>::swap();
        assert!(!projective_eq(&VertexMatrix::identity(), &p, 0.0).unwrap());
        let z = VertexMatrix::<Rational>::zero();
        assert!(matches!(projective_eq(&z, &z, 0.0), Err(Error::BothZero)));
        assert!(!projective_eq(&z, &m, 0.0).unwrap());
    }
}
