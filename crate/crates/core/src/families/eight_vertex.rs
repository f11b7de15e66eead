//! The seven-parameter symmetric eight-vertex family: construction,
//! birational parameter maps of the inversion generators, the derived
//! q-coordinates, and the gauge-fixed one-parameter form living on the
//! spectral quadratic.

use num_complex::Complex64;

use crate::invariants::{eight_vertex_invariants_from_params, EightVertexInvariants};
use crate::matrix::{Triplet, VertexMatrix};
use crate::scalar::Scalar;
use crate::symmetry::KGen;
use crate::{Error, Result};

type Cpx = Complex64;

/// Seven parameters `(a, b, c, x, y, z, v)`. The gauge moves only
/// `(a, b, c)`; `(x, y, z, v)` coordinatize the orbit space. Fixing the
/// gauge `a = b = c = 1` makes the C slot determine A and B completely
/// (parameter content (4,0,0)); spectral-parameter families need gauge
/// functions of `(x, y, z, v)` instead, see [`symmetric_gauge_abc`].
#[derive(Clone, PartialEq, Debug)]
pub struct Params<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub x: T,
    pub y: T,
    pub z: T,
    pub v: T,
}

impl<T: Scalar> Params<T> {
    /// All entry denominators reduce to `a, b, c, x, y, z` nonzero.
    pub fn new(a: T, b: T, c: T, x: T, y: T, z: T, v: T) -> Result<Self> {
        for (val, name) in [
            (&a, "a"),
            (&b, "b"),
            (&c, "c"),
            (&x, "x"),
            (&y, "y"),
            (&z, "z"),
        ] {
            if val.is_zero_tol(0.0) {
                return Err(Error::ZeroParameter(name.into()));
            }
        }
        Ok(Params { a, b, c, x, y, z, v })
    }

    pub fn xyz(&self) -> T {
        self.x.clone() * self.y.clone() * self.z.clone()
    }

    /// Vanishing anti-diagonal entries take the triplet off the strict
    /// eight-vertex stratum; callers may warn.
    pub fn degeneracies(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if (self.v.clone() - self.x.clone()).is_zero_tol(0.0) {
            out.push("v = x");
        }
        if (self.v.clone() - self.y.clone()).is_zero_tol(0.0) {
            out.push("v = y");
        }
        if (self.v.clone() - self.z.clone()).is_zero_tol(0.0) {
            out.push("v = z");
        }
        if (self.v.clone() - self.xyz()).is_zero_tol(0.0) {
            out.push("v = xyz");
        }
        out
    }

    pub fn invariants(&self) -> EightVertexInvariants<T> {
        eight_vertex_invariants_from_params(self)
    }
}

/// The three matrices of the family. Each is symmetric about the secondary
/// diagonal, with unit corners on the main diagonal:
///
/// ```text
/// A = [ 1        0              0          a ]
///     [ 0        x        b(v-x)/(cy)      0 ]
///     [ 0  c(v-xyz)/(bz)        x          0 ]
///     [ (v-y)(v-z)/(ayz)  0     0          1 ]
/// ```
/// and the analogous displays for B and C.
pub fn build<T: Scalar>(p: &Params<T>) -> Result<Triplet<T>> {
    let Params { a, b, c, x, y, z, v } = p.clone();
    let w = p.xyz();
    let one = T::one();
    let mk = |diag: T, x14: T, x23: T, x32: T, x41: T| {
        let mut m = VertexMatrix::diagonal([one.clone(), diag.clone(), diag, one.clone()]);
        m.set(0, 3, x14);
        m.set(1, 2, x23);
        m.set(2, 1, x32);
        m.set(3, 0, x41);
        m
    };
    let va = v.clone();
    let slot_a = mk(
        x.clone(),
        a.clone(),
        b.clone() * (va.clone() - x.clone()) / (c.clone() * y.clone()),
        c.clone() * (va.clone() - w.clone()) / (b.clone() * z.clone()),
        (va.clone() - y.clone()) * (va.clone() - z.clone()) / (a.clone() * y.clone() * z.clone()),
    );
    let slot_b = mk(
        y.clone(),
        b.clone(),
        a.clone() * (va.clone() - x.clone()) / (c.clone() * x.clone()),
        c.clone() * (va.clone() - z.clone()) / (a.clone() * z.clone()),
        (va.clone() - y.clone()) * (va.clone() - w.clone())
            / (b.clone() * x.clone() * z.clone()),
    );
    let slot_c = mk(
        z.clone(),
        c.clone(),
        a.clone() * (va.clone() - w.clone()) / (b.clone() * x.clone()),
        b.clone() * (va.clone() - z.clone()) / (a.clone() * y.clone()),
        (va.clone() - y.clone()) * (va - x.clone()) / (c * x * y),
    );
    Ok(Triplet::new(slot_a, slot_b, slot_c))
}

/// The birational action of a generator on the parameters. Each map is an
/// involution on `(x, y, z, v)` and matches the matrix-level action of
/// `apply_k` projectively, slot by slot.
pub fn k_map<T: Scalar>(gen: KGen, p: &Params<T>) -> Result<Params<T>> {
    let Params { a, b, c, x, y, z, v } = p.clone();
    let w = p.xyz();
    let denom_err = |name: &str| Error::ZeroParameter(format!("k_map denominator {name}"));
    match gen {
        KGen::Ka => {
            let den = v.clone() - x.clone() - w.clone();
            if den.is_zero_tol(0.0) {
                return Err(denom_err("v - x - xyz"));
            }
            Params::new(
                -((v.clone() - y.clone()) * (v.clone() - z.clone())
                    / (a.clone() * y.clone() * z.clone())),
                c * (v.clone() - z.clone()) / (a.clone() * z.clone()),
                b * (v.clone() - z.clone()) / (a * y.clone()),
                (v.clone() - z.clone() - y.clone()) * x / den,
                y.clone(),
                z.clone(),
                z - v + y,
            )
        }
        KGen::Kb => {
            let den = v.clone() - w.clone() - y.clone();
            if den.is_zero_tol(0.0) {
                return Err(denom_err("v - xyz - y"));
            }
            Params::new(
                c * (v.clone() - w.clone()) / (b.clone() * z.clone()),
                -((v.clone() - z.clone() - x.clone())
                    * (v.clone() - y.clone())
                    * (v.clone() - w.clone())
                    / (b.clone() * x.clone() * z.clone() * den.clone())),
                a * (v.clone() - w.clone()) / (b * x.clone()),
                x.clone(),
                (v.clone() - z.clone() - x.clone()) * y / den,
                z.clone(),
                z - v + x,
            )
        }
        KGen::Kc => {
            let den = v.clone() - w.clone() - z.clone();
            if den.is_zero_tol(0.0) {
                return Err(denom_err("v - xyz - z"));
            }
            Params::new(
                b * (v.clone() - x.clone()) / (c.clone() * y.clone()),
                a * (v.clone() - x.clone()) / (c.clone() * x.clone()),
                -((v.clone() - y.clone()) * (v.clone() - x.clone())
                    / (c * x.clone() * y.clone())),
                x.clone(),
                y.clone(),
                (v.clone() - x.clone() - y.clone()) * z / den,
                x - v + y,
            )
        }
    }
}

// ---------------------------------------------------------------------------
// Derived q-coordinates
// ---------------------------------------------------------------------------

/// The coordinates exchanged for `(x, y, z, v)`:
/// `q1 = (v-x)/s, q2 = (v-xyz)/s, q3 = (v-z)/s, q4 = (v-y)/s` with
/// `s = sqrt(xyz)`, `lambda = v/s` satisfying `prod(lambda - q_i) = 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct Derived<T> {
    pub q: [T; 4],
    pub lambda: T,
    pub delta1: T,
    pub delta2: T,
}

pub fn derived<T: Scalar>(p: &Params<T>) -> Result<Derived<T>> {
    let s = p.xyz().try_sqrt()?;
    if s.is_zero_tol(0.0) {
        return Err(Error::ZeroParameter("sqrt(xyz)".into()));
    }
    let v = p.v.clone();
    let q = [
        (v.clone() - p.x.clone()) / s.clone(),
        (v.clone() - p.xyz()) / s.clone(),
        (v.clone() - p.z.clone()) / s.clone(),
        (v.clone() - p.y.clone()) / s.clone(),
    ];
    let inv = p.invariants();
    Ok(Derived {
        q,
        lambda: v / s,
        delta1: inv.delta1,
        delta2: inv.delta2,
    })
}

/// Squared q-coordinates `q_i^2 = (v - .)^2 / xyz`, available in the exact
/// realization even when `xyz` is not a perfect square.
pub fn q_squared<T: Scalar>(p: &Params<T>) -> [T; 4] {
    let w = p.xyz();
    let v = p.v.clone();
    let sq = |t: T| t.clone() * t / w.clone();
    [
        sq(v.clone() - p.x.clone()),
        sq(v.clone() - w.clone()),
        sq(v.clone() - p.z.clone()),
        sq(v - p.y.clone()),
    ]
}

/// Inverse relations: `x = (L-q1)(L-q2), y = (L-q4)(L-q2),
/// z = (L-q3)(L-q2), v = L(L-q2)`.
pub fn xyzv_from_q<T: Scalar>(lambda: &T, q: &[T; 4]) -> (T, T, T, T) {
    let f = |i: usize| lambda.clone() - q[i].clone();
    (
        f(0) * f(1),
        f(3) * f(1),
        f(2) * f(1),
        lambda.clone() * f(1),
    )
}

/// All four roots of the quartic `prod(lambda - q_i) = 1`, by
/// Durand-Kerner iteration on the product form.
pub fn lambda_roots(q: &[Cpx; 4]) -> [Cpx; 4] {
    let poly = |lam: Cpx| {
        q.iter().fold(Cpx::new(1.0, 0.0), |acc, qi| acc * (lam - qi)) - Cpx::new(1.0, 0.0)
    };
    let seed = Cpx::new(0.4, 0.9);
    let mut roots = [seed, seed * seed, seed * seed * seed, seed * seed * seed * seed];
    for _ in 0..256 {
        let mut moved = 0.0f64;
        for i in 0..4 {
            let mut den = Cpx::new(1.0, 0.0);
            for j in 0..4 {
                if j != i {
                    den *= roots[i] - roots[j];
                }
            }
            if den.norm() == 0.0 {
                continue;
            }
            let delta = poly(roots[i]) / den;
            roots[i] -= delta;
            moved = moved.max(delta.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    roots
}

/// Among the quartic roots, pick the one reproducing a reference `x`
/// through `x = (lambda - q1)(lambda - q2)`.
pub fn select_lambda(q: &[Cpx; 4], x_ref: Cpx) -> Result<Cpx> {
    let best = lambda_roots(q)
        .into_iter()
        .map(|lam| (((lam - q[0]) * (lam - q[1]) - x_ref).norm(), lam))
        .min_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
    match best {
        Some((residual, lam)) if residual.is_finite() => {
            if residual > 1e-6 * (1.0 + x_ref.norm()) {
                return Err(Error::RootSelection(format!(
                    "no quartic root reproduces x (best residual {residual:.3e})"
                )));
            }
            Ok(lam)
        }
        _ => Err(Error::RootSelection("quartic iteration failed".into())),
    }
}

// ---------------------------------------------------------------------------
// Gauge-fixed one-parameter form
// ---------------------------------------------------------------------------

/// Root choice of the spectral quadratic
/// `tau Q^2 - Q (tau^2 + tau Delta1 + 1) + tau Delta2 = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QBranch {
    /// The `+` root under the principal square root of the discriminant;
    /// at elliptic reference points this is the branch matching
    /// `Q(x) = sn(gamma)^2 / (sn(chi) sn(gamma - chi))`.
    Auto,
    Plus,
    Minus,
}

/// Gauge function `f` of the one-parameter form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GaugeFn {
    One,
    Tau,
    /// `f(tau) = sqrt(tau Delta2 / Q)`, the choice that symmetrizes the
    /// matrices.
    BaxterSqrt,
}

/// Solve the spectral quadratic for Q at a given `tau`.
pub fn q_root(tau: Cpx, delta1: Cpx, delta2: Cpx, branch: QBranch) -> Result<Cpx> {
    if tau.norm() == 0.0 {
        return Err(Error::ZeroParameter("tau".into()));
    }
    let one = Cpx::new(1.0, 0.0);
    let s = tau * tau + tau * delta1 + one;
    let disc = (s * s - 4.0 * tau * tau * delta2).sqrt();
    let q = match branch {
        QBranch::Auto | QBranch::Plus => (s + disc) / (2.0 * tau),
        QBranch::Minus => (s - disc) / (2.0 * tau),
    };
    if q.norm() == 0.0 {
        return Err(Error::ZeroParameter("Q".into()));
    }
    Ok(q)
}

/// The one-parameter matrix
///
/// ```text
/// R(tau) = [ 1        0                0       f(tau)          ]
///          [ 0       tau        w f(tau) Q     0               ]
///          [ 0   tau/(w f(tau))    tau         0               ]
///          [ tau D2/(f(tau) Q)     0      0    1               ]
/// ```
/// with `Q` a root of the spectral quadratic and `w` the free function
/// `omega`.
pub fn r_gauge_fixed(
    tau: Cpx,
    delta1: Cpx,
    delta2: Cpx,
    f: GaugeFn,
    omega: Cpx,
    branch: QBranch,
) -> Result<VertexMatrix<Cpx>> {
    let q = q_root(tau, delta1, delta2, branch)?;
    let one = Cpx::new(1.0, 0.0);
    let f_val = match f {
        GaugeFn::One => one,
        GaugeFn::Tau => tau,
        GaugeFn::BaxterSqrt => (tau * delta2 / q).sqrt(),
    };
    if f_val.norm() == 0.0 {
        return Err(Error::ZeroParameter("f(tau)".into()));
    }
    if omega.norm() == 0.0 {
        return Err(Error::ZeroParameter("omega".into()));
    }
    let mut m = VertexMatrix::diagonal([one, tau, tau, one]);
    m.set(0, 3, f_val);
    m.set(1, 2, omega * f_val * q);
    m.set(2, 1, tau / (omega * f_val));
    m.set(3, 0, tau * delta2 / (f_val * q));
    Ok(m)
}

/// The symmetric gauge `a = sqrt(x/(q1 q2)) phi1 phi2`,
/// `b = sqrt(y/(q1 q3)) phi1 phi3`, `c = sqrt(z/(q2 q3)) phi2 phi3`. With
/// `phi_i = Delta2^(1/4)` the built matrices become symmetric under
/// ordinary transposition.
pub fn symmetric_gauge_abc(
    x: Cpx,
    y: Cpx,
    z: Cpx,
    v: Cpx,
    phi: [Cpx; 3],
) -> Result<(Cpx, Cpx, Cpx)> {
    let p = Params::new(Cpx::new(1.0, 0.0), Cpx::new(1.0, 0.0), Cpx::new(1.0, 0.0), x, y, z, v)?;
    let d = derived(&p)?;
    let [q1, q2, q3, _] = d.q;
    for (prod, name) in [
        (q1 * q2, "q1 q2"),
        (q1 * q3, "q1 q3"),
        (q2 * q3, "q2 q3"),
    ] {
        if prod.norm() == 0.0 {
            return Err(Error::ZeroParameter(name.into()));
        }
    }
    Ok((
        (x / (q1 * q2)).sqrt() * phi[0] * phi[1],
        (y / (q1 * q3)).sqrt() * phi[0] * phi[2],
        (z / (q2 * q3)).sqrt() * phi[1] * phi[2],
    ))
}
