//! The elliptic parametrization of the symmetric eight-vertex family and
//! the one-parameter triplet it produces.
//!
//! With `sn, cn, dn` of modulus `k` and crossing parameter `gamma`, the
//! invariant surface is
//!
//! ```text
//! Delta1 = 2 cn(gamma) dn(gamma),    Delta2 = sn(gamma)^4 k^2,
//! ```
//!
//! and the spectral arguments `sigma, chi` (with `rho = sigma + chi`) land
//! on it through
//!
//! ```text
//! x = sn(chi)/sn(gamma-chi),  y = sn(rho)/sn(gamma-rho),
//! z = sn(sigma)/sn(gamma-sigma),
//! v = sn(rho) [sn(sigma) sn(chi) + sn(gamma) sn(gamma-rho)]
//!       / [sn(gamma-chi) sn(gamma-rho) sn(gamma-sigma)].
//! ```
//!
//! The conjugate point `2K - gamma` carries the opposite sign of `Delta1`
//! at the same `Delta2`, so the sign convention above is the one realized
//! by the matrices built here.

use num_complex::Complex64;

use crate::elliptic::jacobi;
use crate::matrix::{Triplet, VertexMatrix};
use crate::symmetry::{apply_aut_word, AutWord, KGen};
use crate::ybe::triplet_projective_eq;
use crate::{Error, Result};

type Cpx = Complex64;

/// Spectral arguments `sigma`, `chi`, crossing parameter `gamma`,
/// modulus `k` with `0 <= k < 1`; `rho = sigma + chi`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Params {
    pub sigma: f64,
    pub chi: f64,
    pub gamma: f64,
    pub k: f64,
}

impl Params {
    pub fn rho(&self) -> f64 {
        self.sigma + self.chi
    }
}

fn sn(u: f64, k: f64) -> Result<f64> {
    Ok(jacobi(u, k)?.sn)
}

/// One member of the elliptic family:
///
/// ```text
/// R(alpha) = [ sn(g-a)   0        0      d     ]
///            [ 0       sn(a)    sn(g)    0     ]
///            [ 0       sn(g)    sn(a)    0     ]
///            [ d         0        0    sn(g-a) ]
/// ```
/// with anti-corner `d = k sn(alpha) sn(gamma) sn(gamma - alpha)`. The
/// corner needs all three sn factors: with fewer the anti/diagonal entry
/// ratio is not constant along the triplet and the equation fails.
pub fn r_baxter(alpha: f64, gamma: f64, k: f64) -> Result<VertexMatrix<Cpx>> {
    let sa = sn(alpha, k)?;
    let sg = sn(gamma, k)?;
    let sga = sn(gamma - alpha, k)?;
    let corner = Cpx::new(k * sa * sg * sga, 0.0);
    let mut m = VertexMatrix::diagonal([
        Cpx::new(sga, 0.0),
        Cpx::new(sa, 0.0),
        Cpx::new(sa, 0.0),
        Cpx::new(sga, 0.0),
    ]);
    m.set(0, 3, corner);
    m.set(1, 2, Cpx::new(sg, 0.0));
    m.set(2, 1, Cpx::new(sg, 0.0));
    m.set(3, 0, corner);
    Ok(m)
}

/// `A = R(chi), B = R(rho), C = R(sigma)`.
pub fn build(p: &Params) -> Result<Triplet<Cpx>> {
    Ok(Triplet::new(
        r_baxter(p.chi, p.gamma, p.k)?,
        r_baxter(p.rho(), p.gamma, p.k)?,
        r_baxter(p.sigma, p.gamma, p.k)?,
    ))
}

/// `(Delta1, Delta2) = (2 cn dn, sn^4 k^2)` at the crossing parameter.
pub fn modulus_invariants(gamma: f64, k: f64) -> Result<(f64, f64)> {
    let j = jacobi(gamma, k)?;
    Ok((2.0 * j.cn * j.dn, j.sn.powi(4) * k * k))
}

/// Orbit-space coordinates `(x, y, z, v)` of the triplet.
pub fn xyzv(p: &Params) -> Result<[f64; 4]> {
    let k = p.k;
    let (g, s, c, r) = (p.gamma, p.sigma, p.chi, p.rho());
    let den = |u: f64| -> Result<f64> {
        let v = sn(g - u, k)?;
        if v == 0.0 {
            return Err(Error::ZeroParameter(format!("sn(gamma - {u})")));
        }
        Ok(v)
    };
    let x = sn(c, k)? / den(c)?;
    let y = sn(r, k)? / den(r)?;
    let z = sn(s, k)? / den(s)?;
    let v = sn(r, k)? * (sn(s, k)? * sn(c, k)? + sn(g, k)? * sn(g - r, k)?)
        / (den(c)? * den(r)? * den(s)?);
    Ok([x, y, z, v])
}

/// The q-coordinates in elliptic form, e.g.
/// `q1 = sn(g) sqrt(sn(s) sn(g-s) / (sn(r) sn(g-r) sn(c) sn(g-c)))`.
pub fn q_values(p: &Params) -> Result<[f64; 4]> {
    let k = p.k;
    let pair = |u: f64| -> Result<f64> { Ok(sn(u, k)? * sn(p.gamma - u, k)?) };
    let (ps, pr, pc) = (pair(p.sigma)?, pair(p.rho())?, pair(p.chi)?);
    let sg = sn(p.gamma, k)?;
    for (v, name) in [(ps, "sigma"), (pr, "rho"), (pc, "chi")] {
        if v == 0.0 {
            return Err(Error::ZeroParameter(format!("sn pair at {name}")));
        }
        // the real parametrization needs positive radicands
        if v < 0.0 {
            return Err(Error::RootSelection(format!(
                "sn pair at {name} is negative; the real q-coordinates live where all pair products are positive"
            )));
        }
    }
    Ok([
        sg * (ps / (pr * pc)).sqrt(),
        sg * (pr / (ps * pc)).sqrt(),
        sg * (pc / (ps * pr)).sqrt(),
        sg * k * k * (ps * pr * pc).sqrt(),
    ])
}

/// The spectral-quadratic root at `tau = x`:
/// `Q(x) = sn(gamma)^2 / (sn(chi) sn(gamma - chi))`.
pub fn elliptic_q_of_x(p: &Params) -> Result<f64> {
    let sg = sn(p.gamma, p.k)?;
    let den = sn(p.chi, p.k)? * sn(p.gamma - p.chi, p.k)?;
    if den == 0.0 {
        return Err(Error::ZeroParameter("sn(chi) sn(gamma - chi)".into()));
    }
    Ok(sg * sg / den)
}

/// Verify how the inversion group moves the spectral arguments, at matrix
/// level. Single generator pairs act as reflections and drag a continuous
/// gauge along; their squares are clean translations by `2 gamma`:
///
/// ```text
/// (Kb Ka)^2 : (chi, rho, sigma) -> (chi + 2g, rho + 2g, sigma)
/// (Kb Kc)^2 : (chi, rho, sigma) -> (chi, rho + 2g, sigma + 2g)
/// ```
///
/// Both are checked projectively, slot by slot, against triplets rebuilt
/// at the shifted arguments.
pub fn aut_elliptic_action_check(p: &Params, atol: f64) -> Result<bool> {
    let t = build(p)?;
    let g = p.gamma;

    let word_ab = AutWord::new(vec![KGen::Ka, KGen::Kb, KGen::Ka, KGen::Kb]);
    let image_ab = apply_aut_word(&word_ab, &t)?;
    let shifted_ab = build(&Params { sigma: p.sigma, chi: p.chi + 2.0 * g, ..*p })?;
    let ok_ab = triplet_projective_eq(&image_ab, &shifted_ab, atol)?;

    let word_cb = AutWord::new(vec![KGen::Kc, KGen::Kb, KGen::Kc, KGen::Kb]);
    let image_cb = apply_aut_word(&word_cb, &t)?;
    let shifted_cb = build(&Params { sigma: p.sigma + 2.0 * g, chi: p.chi, ..*p })?;
    let ok_cb = triplet_projective_eq(&image_cb, &shifted_cb, atol)?;

    Ok(ok_ab && ok_cb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::complete_k;
    use crate::families::eight_vertex;
    use crate::invariants::eight_vertex_invariants_from_matrix;
    use crate::symmetry::{apply_k, orbit};
    use crate::ybe::residual_magnitude;

    fn reference() -> Params {
        Params { sigma: 0.3, chi: 0.5, gamma: 1.1, k: 0.6 }
    }

    #[test]
    fn reference_triplet_solves() {
        let t = build(&reference()).unwrap();
        assert!(residual_magnitude(&t) < 1e-9);
    }

    #[test]
    fn rejects_bad_modulus() {
        assert!(r_baxter(0.3, 1.1, 1.0).is_err());
        assert!(build(&Params { k: -0.2, ..reference() }).is_err());
    }

    #[test]
    fn k_zero_reduces_to_six_vertex() {
        let t = build(&Params { k: 0.0, ..reference() }).unwrap();
        for m in t.slots() {
            assert!(m.at(0, 3).norm() < 1e-14);
            assert!(m.at(3, 0).norm() < 1e-14);
        }
        assert!(residual_magnitude(&t) < 1e-9);
    }

    #[test]
    fn invariants_match_the_modulus_relations() {
        let p = reference();
        let (d1, d2) = modulus_invariants(p.gamma, p.k).unwrap();
        // from the matrices
        let t = build(&p).unwrap();
        for m in t.slots() {
            let inv = eight_vertex_invariants_from_matrix(m).unwrap();
            assert!((inv.delta1 - Cpx::new(d1, 0.0)).norm() < 1e-10);
            assert!((inv.delta2 - Cpx::new(d2, 0.0)).norm() < 1e-10);
        }
        // from the parametrized coordinates
        let [x, y, z, v] = xyzv(&p).unwrap();
        let w = x * y * z;
        let d1_coords = v * (2.0 * v - w - x - y - z) / w;
        let d2_coords = (v - x) * (v - y) * (v - z) * (v - w) / (w * w);
        assert!((d1_coords - d1).abs() < 1e-10);
        assert!((d2_coords - d2).abs() < 1e-10);
    }

    #[test]
    fn conjugate_crossing_point_flips_delta1() {
        let p = reference();
        let quarter = complete_k(p.k).unwrap();
        let (d1, d2) = modulus_invariants(p.gamma, p.k).unwrap();
        let (d1c, d2c) = modulus_invariants(2.0 * quarter - p.gamma, p.k).unwrap();
        assert!((d1 + d1c).abs() < 1e-12);
        assert!((d2 - d2c).abs() < 1e-12);
    }

    #[test]
    fn q_values_match_the_coordinate_definition() {
        let p = reference();
        let [x, y, z, v] = xyzv(&p).unwrap();
        let s = (x * y * z).sqrt();
        let expect = [(v - x) / s, (v - x * y * z) / s, (v - z) / s, (v - y) / s];
        let got = q_values(&p).unwrap();
        for (g, e) in got.iter().zip(expect) {
            assert!((g - e).abs() < 1e-10, "{g} vs {e}");
        }
    }

    #[test]
    fn elliptic_q_is_the_plus_branch() {
        let p = reference();
        let [x, y, z, v] = xyzv(&p).unwrap();
        let w = x * y * z;
        let d1 = v * (2.0 * v - w - x - y - z) / w;
        let d2 = (v - x) * (v - y) * (v - z) * (v - w) / (w * w);
        let q = eight_vertex::q_root(
            Cpx::new(x, 0.0),
            Cpx::new(d1, 0.0),
            Cpx::new(d2, 0.0),
            eight_vertex::QBranch::Auto,
        )
        .unwrap();
        let expect = elliptic_q_of_x(&p).unwrap();
        assert!((q - Cpx::new(expect, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn symmetric_gauge_reproduces_the_elliptic_triplet() {
        let p = reference();
        let [x, y, z, v] = xyzv(&p).unwrap();
        let (d2,) = (modulus_invariants(p.gamma, p.k).unwrap().1,);
        let phi = Cpx::new(d2, 0.0).powf(0.25);
        let (a, b, c) = eight_vertex::symmetric_gauge_abc(
            Cpx::new(x, 0.0),
            Cpx::new(y, 0.0),
            Cpx::new(z, 0.0),
            Cpx::new(v, 0.0),
            [phi, phi, phi],
        )
        .unwrap();
        let built = eight_vertex::build(
            &eight_vertex::Params::new(
                a,
                b,
                c,
                Cpx::new(x, 0.0),
                Cpx::new(y, 0.0),
                Cpx::new(z, 0.0),
                Cpx::new(v, 0.0),
            )
            .unwrap(),
        )
        .unwrap();
        let elliptic = build(&p).unwrap();
        assert!(triplet_projective_eq(&built, &elliptic, 1e-9).unwrap());
    }

    #[test]
    fn generator_pairs_translate_by_two_gamma() {
        assert!(aut_elliptic_action_check(&reference(), 1e-8).unwrap());
    }

    #[test]
    fn single_pair_reflects_the_spectral_arguments() {
        // Ka Kb (apply Kb then Ka) fixes sigma and sends the orbit-space
        // point to the one at (2g - chi, 2g - rho); the gauge moves too, so
        // the comparison is at invariant level.
        let p = reference();
        let t = build(&p).unwrap();
        let image = apply_k(KGen::Ka, &apply_k(KGen::Kb, &t).unwrap()).unwrap();
        let x_img = image.a.at(1, 1) / image.a.at(0, 0);
        let z_img = image.c.at(1, 1) / image.c.at(0, 0);
        let k = p.k;
        let refl = |u: f64| -> f64 {
            let j = jacobi(2.0 * p.gamma - u, k).unwrap();
            let jd = jacobi(p.gamma - (2.0 * p.gamma - u), k).unwrap();
            j.sn / jd.sn
        };
        assert!((x_img - Cpx::new(refl(p.chi), 0.0)).norm() < 1e-9);
        assert!((z_img - Cpx::new(sn(p.sigma, k).unwrap() / sn(p.gamma - p.sigma, k).unwrap(), 0.0)).norm() < 1e-9);
    }

    #[test]
    fn aut_shifts_survive_the_circular_limit() {
        // at k = 0 the family reduces to the six-vertex stratum and the
        // 2-gamma translations become the trigonometric shift law
        let p = Params { sigma: 0.3, chi: 0.5, gamma: 1.1, k: 0.0 };
        assert!(aut_elliptic_action_check(&p, 1e-8).unwrap());
    }

    #[test]
    fn full_period_crossing_gives_finite_orbit() {
        // gamma = K: four pair-steps move the arguments by 4K, a full sn
        // period.
        let k = 0.6;
        let quarter = complete_k(k).unwrap();
        let p = Params { sigma: 0.3, chi: 0.5, gamma: quarter, k };
        let t = build(&p).unwrap();
        let step = AutWord::new(vec![KGen::Kb, KGen::Ka]);
        let o = orbit(&t, &step, 16, 1e-7).unwrap();
        assert_eq!(o.period, Some(4));
    }
}
