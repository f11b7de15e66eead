//! The two five-vertex solution families (zero pattern: six-vertex form
//! with the (3,2) entry also zero).

use crate::matrix::{Triplet, VertexMatrix};
use crate::scalar::Scalar;
use crate::{Error, Result};

fn require_nonzero<T: Scalar>(v: &T, name: &str) -> Result<()> {
    if v.is_zero_tol(0.0) {
        return Err(Error::ZeroParameter(name.into()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// First solution
// ---------------------------------------------------------------------------

/// Parameters of the first five-vertex family: global invariant `d`, color
/// parameters `q1..q3` attached to the tensor legs, gauge parameters
/// `g1..g3`.
#[derive(Clone, PartialEq, Debug)]
pub struct FirstParams<T> {
    pub d: T,
    pub q: [T; 3],
    pub g: [T; 3],
}

/// Building block of the first family:
///
/// ```text
/// R5a(i,j) = [ 1      0                  0        0       ]
///            [ 0    d q_i   (1 - d^2) g_i / g_j   0       ]
///            [ 0      0               d / q_j     0       ]
///            [ 0      0                  0      q_i / q_j ]
/// ```
pub fn r5a<T: Scalar>(d: &T, q_i: &T, q_j: &T, g_i: &T, g_j: &T) -> Result<VertexMatrix<T>> {
    for (v, name) in [(d, "d"), (q_i, "q_i"), (q_j, "q_j"), (g_i, "g_i"), (g_j, "g_j")] {
        require_nonzero(v, name)?;
    }
    let off = (T::one() - d.clone() * d.clone()) * g_i.clone() / g_j.clone();
    let mut m = VertexMatrix::diagonal([
        T::one(),
        d.clone() * q_i.clone(),
        d.clone() / q_j.clone(),
        q_i.clone() / q_j.clone(),
    ]);
    m.set(1, 2, off);
    Ok(m)
}

/// `A = R5a(1,2), B = R5a(1,3), C = R5a(2,3)`. The construction satisfies
/// the family constraint `a c = b (1 - d^2)` identically in the gauges.
pub fn build_first<T: Scalar>(p: &FirstParams<T>) -> Result<Triplet<T>> {
    let [q1, q2, q3] = &p.q;
    let [g1, g2, g3] = &p.g;
    Ok(Triplet::new(
        r5a(&p.d, q1, q2, g1, g2)?,
        r5a(&p.d, q1, q3, g1, g3)?,
        r5a(&p.d, q2, q3, g2, g3)?,
    ))
}

/// Constant limit of the first family (all colors equal):
/// `diag(1, p, q, 1)` with off-diagonal entry `1 - pq`.
pub fn constant_first<T: Scalar>(p: &T, q: &T) -> VertexMatrix<T> {
    let mut m = VertexMatrix::diagonal([T::one(), p.clone(), q.clone(), T::one()]);
    m.set(1, 2, T::one() - p.clone() * q.clone());
    m
}

// ---------------------------------------------------------------------------
// Second solution (free-fermion type)
// ---------------------------------------------------------------------------

/// Gauge choice for the free-fermion family. `Explicit` entries must
/// satisfy `g12 g23 = g13 (1 - p2 q2)`; `Uniform` realizes
/// `g_ij = (1 - p_i q_i)^alpha (1 - p_j q_j)^(1-alpha)`, which satisfies the
/// constraint identically but brings in the two spurious color products
/// `p1 q1` and `p3 q3`, carried here as the extra parameters `q1` and `p3`.
#[derive(Clone, PartialEq, Debug)]
pub enum FreeFermionGauge<T> {
    Explicit { g12: T, g13: T, g23: T },
    Uniform { alpha: T, q1: T, p3: T },
}

#[derive(Clone, PartialEq, Debug)]
pub struct FreeFermionParams<T> {
    pub p1: T,
    pub p2: T,
    pub q2: T,
    pub q3: T,
    pub gauge: FreeFermionGauge<T>,
}

impl<T: Scalar> FreeFermionParams<T> {
    /// Resolve the gauge choice into concrete `(g12, g13, g23)`.
    pub fn gauges(&self) -> Result<(T, T, T)> {
        match &self.gauge {
            FreeFermionGauge::Explicit { g12, g13, g23 } => {
                let residual = g12.clone() * g23.clone()
                    - g13.clone() * (T::one() - self.p2.clone() * self.q2.clone());
                if !residual.is_zero_tol(crate::DEFAULT_TOL) {
                    return Err(Error::ConstraintViolated {
                        relation: "g12*g23 != g13*(1-p2*q2)".into(),
                        residual: residual.to_string(),
                    });
                }
                Ok((g12.clone(), g13.clone(), g23.clone()))
            }
            FreeFermionGauge::Uniform { alpha, q1, p3 } => {
                let one = T::one();
                let f = [
                    one.clone() - self.p1.clone() * q1.clone(),
                    one.clone() - self.p2.clone() * self.q2.clone(),
                    one.clone() - p3.clone() * self.q3.clone(),
                ];
                for v in &f {
                    require_nonzero(v, "1 - p_i q_i")?;
                }
                let co_alpha = one - alpha.clone();
                let g = |i: usize, j: usize| -> Result<T> {
                    Ok(f[i].try_pow(alpha)? * f[j].try_pow(&co_alpha)?)
                };
                Ok((g(0, 1)?, g(0, 2)?, g(1, 2)?))
            }
        }
    }
}

/// Building block `R5b(i,j) = diag(1, p_i, q_j, -p_i q_j)` with off-diagonal
/// entry `g_ij` at (2,3).
pub fn r5b<T: Scalar>(p_i: &T, q_j: &T, g_ij: &T) -> VertexMatrix<T> {
    let mut m = VertexMatrix::diagonal([
        T::one(),
        p_i.clone(),
        q_j.clone(),
        -(p_i.clone() * q_j.clone()),
    ]);
    m.set(1, 2, g_ij.clone());
    m
}

/// `A = R5b(1,2), B = R5b(1,3), C = R5b(2,3)`.
pub fn build_free_fermion<T: Scalar>(p: &FreeFermionParams<T>) -> Result<Triplet<T>> {
    for (v, name) in [(&p.p1, "p1"), (&p.p2, "p2"), (&p.q2, "q2"), (&p.q3, "q3")] {
        require_nonzero(v, name)?;
    }
    let (g12, g13, g23) = p.gauges()?;
    Ok(Triplet::new(
        r5b(&p.p1, &p.q2, &g12),
        r5b(&p.p1, &p.q3, &g13),
        r5b(&p.p2, &p.q3, &g23),
    ))
}

/// Constant limit: `p_i = p, q_j = q, g_ij = 1 - pq`.
pub fn constant_free_fermion<T: Scalar>(p: &T, q: &T) -> VertexMatrix<T> {
    r5b(p, q, &(T::one() - p.clone() * q.clone()))
}
