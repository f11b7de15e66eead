//! The quadratic polynomials p1, p2, p5, p6, p9 and the invariants built
//! from them.
//!
//! Entry positions (flat, 0-based) entering the polynomials:
//!
//! ```text
//! X11=(0,0)  X22=(1,1)  X33=(2,2)  X44=(3,3)   diagonal
//! X23=(1,2)  X32=(2,1)                          inner anti-diagonal
//! X14=(0,3)  X41=(3,0)                          corner anti-diagonal
//! ```
//!
//! p9 carries the corner product `X14 X41`; the term vanishes identically
//! on six-vertex matrices and is what keeps `Delta1 = -2 p9 / p5` equal
//! across all three members of an eight-vertex triplet.

use crate::families::eight_vertex;
use crate::matrix::VertexMatrix;
use crate::scalar::Scalar;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct PVector<T> {
    pub p1: T,
    pub p2: T,
    pub p5: T,
    pub p6: T,
    pub p9: T,
}

/// The five quadratics surviving on six- and eight-vertex zero patterns:
///
/// ```text
/// p1 = X11 X22 + X33 X44        p2 = X11 X22 - X33 X44
/// p5 = X11 X33 + X22 X44        p6 = X11 X33 - X22 X44
/// p9 = X11 X44 + X22 X33 - X23 X32 - X14 X41
/// ```
pub fn p_polys<T: Scalar>(m: &VertexMatrix<T>) -> PVector<T> {
    let e = |r: usize, c: usize| m.at(r, c).clone();
    PVector {
        p1: e(0, 0) * e(1, 1) + e(2, 2) * e(3, 3),
        p2: e(0, 0) * e(1, 1) - e(2, 2) * e(3, 3),
        p5: e(0, 0) * e(2, 2) + e(1, 1) * e(3, 3),
        p6: e(0, 0) * e(2, 2) - e(1, 1) * e(3, 3),
        p9: e(0, 0) * e(3, 3) + e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1) - e(0, 3) * e(3, 0),
    }
}

/// Ratios of the p-polynomials for six-vertex-type matrices. A field is
/// `None` when its denominator vanishes exactly (`p9 = 0` is the
/// free-fermion case, where the global `Delta` is undefined).
#[derive(Clone, PartialEq, Debug)]
pub struct SixVertexInvariants<T> {
    /// `Delta = (p1^2 - p2^2) / p9^2`
    pub delta_global: Option<T>,
    /// `delta = (p1 + p2) / (p1 - p2)`
    pub delta: Option<T>,
    /// `delta' = (p5 - p6) / (p5 + p6)`
    pub delta_prime: Option<T>,
}

pub fn six_vertex_invariants<T: Scalar>(m: &VertexMatrix<T>) -> SixVertexInvariants<T> {
    let p = p_polys(m);
    let ratio = |num: T, den: T| (!den.is_zero_tol(0.0)).then(|| num / den);
    SixVertexInvariants {
        delta_global: ratio(
            p.p1.clone() * p.p1.clone() - p.p2.clone() * p.p2.clone(),
            p.p9.clone() * p.p9.clone(),
        ),
        delta: ratio(p.p1.clone() + p.p2.clone(), p.p1.clone() - p.p2.clone()),
        delta_prime: ratio(p.p5.clone() - p.p6.clone(), p.p5.clone() + p.p6.clone()),
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct EightVertexInvariants<T> {
    pub delta1: T,
    pub delta2: T,
}

/// `Delta1 = v (2v - xyz - x - y - z) / (xyz)` and
/// `Delta2 = (v-x)(v-y)(v-z)(v-xyz) / (xyz)^2`.
pub fn eight_vertex_invariants_from_params<T: Scalar>(
    p: &eight_vertex::Params<T>,
) -> EightVertexInvariants<T> {
    let (x, y, z, v) = (p.x.clone(), p.y.clone(), p.z.clone(), p.v.clone());
    let w = x.clone() * y.clone() * z.clone();
    let delta1 = v.clone()
        * (T::from_int(2) * v.clone() - w.clone() - x.clone() - y.clone() - z.clone())
        / w.clone();
    let delta2 = (v.clone() - x) * (v.clone() - y) * (v.clone() - z) * (v - w.clone())
        / (w.clone() * w);
    EightVertexInvariants { delta1, delta2 }
}

/// The same invariants read off a single matrix of the eight-vertex
/// pattern: `Delta1 = -2 p9 / p5` and `Delta2` is the ratio of the
/// anti-diagonal entry product to the diagonal entry product.
pub fn eight_vertex_invariants_from_matrix<T: Scalar>(
    m: &VertexMatrix<T>,
) -> Result<EightVertexInvariants<T>> {
    let p = p_polys(m);
    if p.p5.is_zero_tol(0.0) {
        return Err(Error::ZeroParameter("p5".into()));
    }
    let delta1 = -(T::from_int(2) * p.p9) / p.p5;
    let diag = m.at(0, 0).clone() * m.at(1, 1).clone() * m.at(2, 2).clone() * m.at(3, 3).clone();
    if diag.is_zero_tol(0.0) {
        return Err(Error::ZeroParameter("diagonal entry product".into()));
    }
    let anti = m.at(0, 3).clone() * m.at(1, 2).clone() * m.at(2, 1).clone() * m.at(3, 0).clone();
    Ok(EightVertexInvariants { delta1, delta2: anti / diag })
}

/// Free-fermion test `p9 = 0`. In the approximate realization the
/// comparison is scale-aware: `|p9| <= rel_tol * max_entry^2` (the p's are
/// quadratic in the entries). Exact scalars ignore the tolerance.
pub fn is_free_fermion<T: Scalar>(m: &VertexMatrix<T>, rel_tol: f64) -> bool {
    let scale = m.max_magnitude();
    p_polys(m).p9.is_zero_tol(rel_tol * scale * scale)
}
