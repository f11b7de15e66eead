//! Real Jacobi elliptic functions sn, cn, dn and the complete elliptic
//! integral of the first kind, for modulus 0 <= k < 1.
//!
//! Both are computed from the arithmetic-geometric mean: `K(k) =
//! pi / (2 agm(1, k'))`, and sn/cn/dn by the descending Landen ladder with
//! backward recurrence. Real arguments only.

use crate::{Error, Result};

fn check_modulus(k: f64) -> Result<()> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::ModulusOutOfRange(k));
    }
    Ok(())
}

/// Arithmetic-geometric mean of two positive reals.
pub fn agm(a0: f64, b0: f64) -> f64 {
    let (mut a, mut b) = (a0, b0);
    for _ in 0..64 {
        if (a - b).abs() <= 1e-17 * a.abs() {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    a
}

/// Complete elliptic integral of the first kind, `K(k) = pi/(2 agm(1, k'))`.
pub fn complete_k(k: f64) -> Result<f64> {
    check_modulus(k)?;
    let kp = (1.0 - k * k).sqrt();
    Ok(std::f64::consts::PI / (2.0 * agm(1.0, kp)))
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Jacobi {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// sn, cn, dn at real argument `u`, modulus `k`. The argument is reduced
/// modulo the real period 4K before the Landen ladder runs, so large
/// arguments stay accurate.
pub fn jacobi(u: f64, k: f64) -> Result<Jacobi> {
    check_modulus(k)?;
    if k < 1e-12 {
        // dn = 1 - O(k^2); below 1e-12 the circular limit is exact to 1e-24
        return Ok(Jacobi { sn: u.sin(), cn: u.cos(), dn: 1.0 });
    }
    let quarter = complete_k(k)?;
    let u = u.rem_euclid(4.0 * quarter);

    // descending ladder: a_{n+1} = (a_n + b_n)/2 until b/a reaches 1
    let mut emc = 1.0 - k * k;
    let mut a = 1.0;
    let mut dn = 1.0;
    let mut em = [0.0f64; 24];
    let mut en = [0.0f64; 24];
    let mut c = 0.0;
    let mut level = 0;
    for i in 0..24 {
        level = i;
        em[i] = a;
        emc = emc.sqrt();
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (a - emc).abs() <= 1e-16 * a {
            break;
        }
        emc *= a;
        a = c;
    }

    let phase = u * c;
    let mut sn = phase.sin();
    let mut cn = phase.cos();
    if sn.abs() > 0.0 {
        // backward recurrence through the ladder levels
        let mut aa = cn / sn;
        c *= aa;
        for i in (0..=level).rev() {
            let b = em[i];
            aa *= c;
            c *= dn;
            dn = (en[i] + aa) / (b + aa);
            aa = c / b;
        }
        let inv = 1.0 / (c * c + 1.0).sqrt();
        sn = if sn >= 0.0 { inv } else { -inv };
        cn = c * sn;
    }
    Ok(Jacobi { sn, cn, dn })
}
