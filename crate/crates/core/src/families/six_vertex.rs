//! The two six-vertex solution families: the asymmetric one (rational and
//! trigonometric forms) and the free-fermion one with its SL(2)
//! composition law. All constructors normalize the off-diagonal entries
//! to 1.

use num_complex::Complex64;

use crate::invariants::{p_polys, six_vertex_invariants};
use crate::matrix::{Mat2, Triplet, VertexMatrix};
use crate::scalar::Scalar;
use crate::{Error, Result};

type Cpx = Complex64;

fn require_nonzero<T: Scalar>(v: &T, name: &str) -> Result<()> {
    if v.is_zero_tol(0.0) {
        return Err(Error::ZeroParameter(name.into()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Asymmetric family, rational form
// ---------------------------------------------------------------------------

/// Six free parameters of the asymmetric solution in its rational form.
/// `C` carries the diagonal `[a, b, c, d]` directly.
#[derive(Clone, PartialEq, Debug)]
pub struct AsymParams<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
    pub e: T,
    pub f: T,
}

impl<T: Scalar> AsymParams<T> {
    /// `h = e f + (a d e - b c f)(e - f)`, the denominator of the solved
    /// diagonal entries.
    pub fn h(&self) -> T {
        let ade = self.a.clone() * self.d.clone() * self.e.clone();
        let bcf = self.b.clone() * self.c.clone() * self.f.clone();
        self.e.clone() * self.f.clone() + (ade - bcf) * (self.e.clone() - self.f.clone())
    }
}

/// Diagonals:
///
/// ```text
/// dp(C) = [a, b, c, d]
/// dp(B) = [a e, b f / h, c f, d e / h]
/// dp(A) = [e + b c (f - e), b d (f - e) / h, c a (f - e), (e + b c (f - e)) / h]
/// ```
pub fn build_asym<T: Scalar>(p: &AsymParams<T>) -> Result<Triplet<T>> {
    for (v, name) in [
        (&p.a, "a"),
        (&p.b, "b"),
        (&p.c, "c"),
        (&p.d, "d"),
        (&p.e, "e"),
        (&p.f, "f"),
    ] {
        require_nonzero(v, name)?;
    }
    let h = p.h();
    require_nonzero(&h, "h")?;
    let fe = p.f.clone() - p.e.clone();
    let a1 = p.e.clone() + p.b.clone() * p.c.clone() * fe.clone();
    let mk = |d: [T; 4]| VertexMatrix::six_vertex(d, T::one(), T::one());
    Ok(Triplet::new(
        mk([
            a1.clone(),
            p.b.clone() * p.d.clone() * fe.clone() / h.clone(),
            p.c.clone() * p.a.clone() * fe,
            a1 / h.clone(),
        ]),
        mk([
            p.a.clone() * p.e.clone(),
            p.b.clone() * p.f.clone() / h.clone(),
            p.c.clone() * p.f.clone(),
            p.d.clone() * p.e.clone() / h,
        ]),
        mk([p.a.clone(), p.b.clone(), p.c.clone(), p.d.clone()]),
    ))
}

/// The two factors of the six-vertex compatibility equation, evaluated on
/// the diagonals of the B and C slots (off-diagonals normalized to 1).
/// Every solution kills one of them: the asymmetric family the first, the
/// free-fermion family the second (`1 - c2 c3 - c1 c4`).
pub fn factors<T: Scalar>(t: &Triplet<T>) -> (T, T) {
    let b = |i: usize| t.b.at(i, i).clone();
    let c = |i: usize| t.c.at(i, i).clone();
    let first = b(0).clone() * b(1).clone() * b(2).clone()
        + c(2) * c(3) * b(0).clone() * b(0) * b(1).clone()
        - c(1) * c(2) * b(0).clone() * b(1).clone() * b(2).clone()
        - c(0) * c(3) * b(0).clone() * b(1).clone() * b(2).clone()
        - c(0) * c(1) * b(2).clone()
        + c(0) * c(1) * b(1) * b(2).clone() * b(2);
    let second = T::one() - c(1) * c(2) - c(0) * c(3);
    (first, second)
}

// ---------------------------------------------------------------------------
// Asymmetric family, trigonometric form
// ---------------------------------------------------------------------------

/// Trigonometric parametrization: global `gamma`, color parameters
/// `q1..q3`, spectral parameters `lambda_a` and `lambda_c`
/// (`lambda_b = lambda_a + lambda_c` is the addition rule).
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct TrigParams {
    pub gamma: Cpx,
    pub q1: Cpx,
    pub q2: Cpx,
    pub q3: Cpx,
    pub lambda_a: Cpx,
    pub lambda_c: Cpx,
}

/// One member of the trigonometric family, colors `(q_i, q_j)` attached to
/// the two legs the matrix acts on:
///
/// ```text
/// R11 = (q_j/q_i) sin(g-l)/sin(g)      R22 = q_i q_j sin(l)/sin(g)
/// R33 = 1/(q_i q_j) sin(l)/sin(g)      R44 = (q_i/q_j) sin(g-l)/sin(g)
/// ```
/// with both off-diagonal entries 1.
pub fn r_trig(gamma: Cpx, q_i: Cpx, q_j: Cpx, lambda: Cpx) -> Result<VertexMatrix<Cpx>> {
    let sg = gamma.sin();
    if sg.norm() <= f64::EPSILON {
        return Err(Error::ZeroParameter("sin(gamma)".into()));
    }
    require_nonzero(&q_i, "q_i")?;
    require_nonzero(&q_j, "q_j")?;
    let u = (gamma - lambda).sin() / sg;
    let v = lambda.sin() / sg;
    Ok(VertexMatrix::six_vertex(
        [
            q_j / q_i * u,
            q_i * q_j * v,
            v / (q_i * q_j),
            q_i / q_j * u,
        ],
        Cpx::new(1.0, 0.0),
        Cpx::new(1.0, 0.0),
    ))
}

/// `A = R(g, q1, q2, lA), B = R(g, q1, q3, lA + lC), C = R(g, q2, q3, lC)`.
pub fn build_trig(p: &TrigParams) -> Result<Triplet<Cpx>> {
    Ok(Triplet::new(
        r_trig(p.gamma, p.q1, p.q2, p.lambda_a)?,
        r_trig(p.gamma, p.q1, p.q3, p.lambda_a + p.lambda_c)?,
        r_trig(p.gamma, p.q2, p.q3, p.lambda_c)?,
    ))
}

/// `P + u I`, the singular limit of the trigonometric family
/// (`q -> sqrt(-1)`, `lambda = -gamma u`, `gamma -> 0`).
pub fn p_plus_u<T: Scalar>(u: &T) -> VertexMatrix<T> {
    VertexMatrix::swap().add(&VertexMatrix::identity().scale(u))
}

// ---------------------------------------------------------------------------
// Spectral-parameter relations on the trigonometric curve
// ---------------------------------------------------------------------------

/// Residual report of the curve relations obeyed by a six-vertex solution
/// triplet with off-diagonal entries 1. The `u`, `v` pairs come from the
/// fourth-root normal form `R11 = u (delta/delta')^(1/4)`,
/// `R22 = v (delta delta')^(1/4)` under principal branches; since branches
/// are only fixed up to sign, the addition residuals are minimized over
/// per-slot sign flips and the chosen flips are reported.
#[derive(Clone, Debug)]
pub struct TrigRelations {
    pub u: [Cpx; 3],
    pub v: [Cpx; 3],
    /// `|2uv/(u^2+v^2-1) -+ sqrt(Delta)|` per slot, minimized over the sign.
    pub sqrt_delta_residual: [f64; 3],
    /// Whether the minus branch of `sqrt(Delta)` matched better.
    pub sqrt_delta_flipped: [bool; 3],
    /// `|v_A - (v_B u_C - v_C u_B)|` minimized over sign flips.
    pub v_addition_residual: f64,
    /// `|u_B - (u_A u_C - v_A v_C)|` under the same flips.
    pub u_addition_residual: f64,
    /// The sign flips (one per slot) realizing the minimum.
    pub addition_signs: [i8; 3],
}

fn quarter_root(z: Cpx) -> Cpx {
    z.powf(0.25)
}

/// Extract `(u, v)` per slot and evaluate the curve and addition relations.
pub fn trig_relations_check(t: &Triplet<Cpx>) -> Result<TrigRelations> {
    let mut u = [Cpx::default(); 3];
    let mut v = [Cpx::default(); 3];
    let mut sqrt_delta = [Cpx::default(); 3];
    let mut sqrt_delta_residual = [0.0; 3];
    let mut sqrt_delta_flipped = [false; 3];

    for (s, m) in t.slots().into_iter().enumerate() {
        let inv = six_vertex_invariants(m);
        let (delta, delta_prime) = match (inv.delta, inv.delta_prime) {
            (Some(d), Some(dp)) => (d, dp),
            _ => return Err(Error::ZeroParameter("fourth-root base".into())),
        };
        if delta.is_zero_tol(0.0) || delta_prime.is_zero_tol(0.0) {
            return Err(Error::ZeroParameter("fourth-root base".into()));
        }
        let r1 = quarter_root(delta / delta_prime);
        let r2 = quarter_root(delta * delta_prime);
        u[s] = m.at(0, 0) / r1;
        v[s] = m.at(1, 1) / r2;

        let p = p_polys(m);
        if p.p9.is_zero_tol(0.0) {
            return Err(Error::ZeroParameter("p9".into()));
        }
        let big_delta = (p.p1 * p.p1 - p.p2 * p.p2) / (p.p9 * p.p9);
        let root = big_delta.sqrt();
        let s_val = 2.0 * u[s] * v[s] / (u[s] * u[s] + v[s] * v[s] - Cpx::new(1.0, 0.0));
        let plus = (s_val - root).norm();
        let minus = (s_val + root).norm();
        sqrt_delta[s] = s_val;
        sqrt_delta_residual[s] = plus.min(minus);
        sqrt_delta_flipped[s] = minus < plus;
    }

    let mut best = (f64::INFINITY, f64::INFINITY, [1i8; 3]);
    for mask in 0..8u8 {
        let sg = |i: usize| if mask & (1 << i) != 0 { -1.0 } else { 1.0 };
        let (ua, ub, uc) = (u[0] * sg(0), u[1] * sg(1), u[2] * sg(2));
        let (va, vb, vc) = (v[0] * sg(0), v[1] * sg(1), v[2] * sg(2));
        let rv = (va - (vb * uc - vc * ub)).norm();
        let ru = (ub - (ua * uc - va * vc)).norm();
        if rv + ru < best.0 + best.1 {
            best = (rv, ru, [sg(0) as i8, sg(1) as i8, sg(2) as i8]);
        }
    }

    Ok(TrigRelations {
        u,
        v,
        sqrt_delta_residual,
        sqrt_delta_flipped,
        v_addition_residual: best.0,
        u_addition_residual: best.1,
        addition_signs: best.2,
    })
}

// ---------------------------------------------------------------------------
// Free-fermion family via SL(2)
// ---------------------------------------------------------------------------

/// The pair of unimodular 2x2 matrices generating the free-fermion
/// solution; the third member is the product `hat_c^{-1} hat_b`.
#[derive(Clone, PartialEq, Debug)]
pub struct Sl2Pair<T> {
    hat_b: Mat2<T>,
    hat_c: Mat2<T>,
}

impl<T: Scalar> Sl2Pair<T> {
    pub fn new(hat_b: Mat2<T>, hat_c: Mat2<T>) -> Result<Self> {
        for m in [&hat_b, &hat_c] {
            if !m.is_unimodular(crate::DEFAULT_TOL) {
                return Err(Error::NotUnimodular(format!("{:?}", m.determinant())));
            }
        }
        Ok(Sl2Pair { hat_b, hat_c })
    }

    pub fn hat_b(&self) -> &Mat2<T> {
        &self.hat_b
    }

    pub fn hat_c(&self) -> &Mat2<T> {
        &self.hat_c
    }
}

/// Spread a 2x2 matrix `[[u, w], [s, t]]` over the six-vertex diagonal as
/// `diag(u, -w, s, t)` with off-diagonal entries 1. Unimodularity of the
/// 2x2 is exactly the free-fermion condition `p9 = det - 1 = 0` of the
/// image.
pub fn sl2_embed<T: Scalar>(m: &Mat2<T>) -> VertexMatrix<T> {
    VertexMatrix::six_vertex(
        [
            m.at(0, 0).clone(),
            -m.at(0, 1).clone(),
            m.at(1, 0).clone(),
            m.at(1, 1).clone(),
        ],
        T::one(),
        T::one(),
    )
}

/// `A = embed(hat_c^{-1} hat_b), B = embed(hat_b), C = embed(hat_c)`.
pub fn build_free_fermion<T: Scalar>(p: &Sl2Pair<T>) -> Result<Triplet<T>> {
    let hat_a = p.hat_c.inverse()?.mul(&p.hat_b);
    Ok(Triplet::new(
        sl2_embed(&hat_a),
        sl2_embed(&p.hat_b),
        sl2_embed(&p.hat_c),
    ))
}

/// Euler-style decomposition `diag(q, 1/q) rot(theta) diag(1/q', q')` of a
/// unimodular 2x2; the composition law adds the angles when the colors
/// match.
pub fn euler_sl2(q: Cpx, theta: Cpx, q_prime: Cpx) -> Result<Mat2<Cpx>> {
    require_nonzero(&q, "q")?;
    require_nonzero(&q_prime, "q'")?;
    let rot = Mat2::new([[theta.cos(), -theta.sin()], [theta.sin(), theta.cos()]]);
    let left = Mat2::diagonal(q, q.finv());
    let right = Mat2::diagonal(q_prime.finv(), q_prime);
    Ok(left.mul(&rot).mul(&right))
}
