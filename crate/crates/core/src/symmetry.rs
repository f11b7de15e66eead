//! The discrete and continuous symmetries acting on triplets: partial
//! transpositions and the projective inverse, the inversion-group
//! generators Ka, Kb, Kc, orbit iteration, and the gauge group with its
//! intertwining against the generators.

use std::fmt;
use std::str::FromStr;

use crate::matrix::{kron2, Mat2, Triplet, VertexMatrix};
use crate::scalar::Scalar;
use crate::ybe::triplet_projective_eq;
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Elementary operations on a single vertex matrix
// ---------------------------------------------------------------------------

/// Full transposition `(tR)^{ij}_{kl} = R^{kl}_{ij}`.
pub fn transpose_full<T: Scalar>(m: &VertexMatrix<T>) -> VertexMatrix<T> {
    m.transpose()
}

/// Left partial transposition `(tl R)^{ij}_{kl} = R^{kj}_{il}`.
pub fn transpose_left<T: Scalar>(m: &VertexMatrix<T>) -> VertexMatrix<T> {
    let mut out = VertexMatrix::zero();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out.set(2 * i + j, 2 * k + l, m.at(2 * k + j, 2 * i + l).clone());
                }
            }
        }
    }
    out
}

/// Right partial transposition `(tr R)^{ij}_{kl} = R^{il}_{kj}`.
pub fn transpose_right<T: Scalar>(m: &VertexMatrix<T>) -> VertexMatrix<T> {
    let mut out = VertexMatrix::zero();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out.set(2 * i + j, 2 * k + l, m.at(2 * i + l, 2 * k + j).clone());
                }
            }
        }
    }
    out
}

/// The projective matrix inverse, normalized to the true inverse. All
/// downstream comparisons are projective, so the normalization carries no
/// information.
pub fn projective_inverse<T: Scalar>(m: &VertexMatrix<T>) -> Result<VertexMatrix<T>> {
    m.inverse()
}

/// `t I`, the inverse transpose (the two commute).
pub fn inverse_transpose<T: Scalar>(m: &VertexMatrix<T>) -> Result<VertexMatrix<T>> {
    Ok(m.inverse()?.transpose())
}

// ---------------------------------------------------------------------------
// Inversion-group generators
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KGen {
    Ka,
    Kb,
    Kc,
}

impl KGen {
    pub const ALL: [KGen; 3] = [KGen::Ka, KGen::Kb, KGen::Kc];

    pub fn letter(self) -> char {
        match self {
            KGen::Ka => 'a',
            KGen::Kb => 'b',
            KGen::Kc => 'c',
        }
    }
}

/// Apply one inversion-group generator:
///
/// ```text
/// Ka: (A, B, C) -> (tI A,       tl B,  tl C)
/// Kb: (A, B, C) -> (tl A,  tr I tl B,  tr C)
/// Kc: (A, B, C) -> (tr A,       tr B,  tI C)
/// ```
///
/// Composite operator strings act right to left, `tr I tl B` meaning
/// `tr(I(tl(B)))`. The two reading orders in fact agree:
/// `tr . I . tl = tl . I . tr` follows from `tl = t . tr`, `t^2 = 1` and
/// `I t = t I`.
pub fn apply_k<T: Scalar>(gen: KGen, t: &Triplet<T>) -> Result<Triplet<T>> {
    Ok(match gen {
        KGen::Ka => Triplet::new(
            inverse_transpose(&t.a)?,
            transpose_left(&t.b),
            transpose_left(&t.c),
        ),
        KGen::Kb => Triplet::new(
            transpose_left(&t.a),
            transpose_right(&projective_inverse(&transpose_left(&t.b))?),
            transpose_right(&t.c),
        ),
        KGen::Kc => Triplet::new(
            transpose_right(&t.a),
            transpose_right(&t.b),
            inverse_transpose(&t.c)?,
        ),
    })
}

/// A free word in the generators, applied left to right.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AutWord(pub Vec<KGen>);

impl AutWord {
    pub fn new(gens: impl Into<Vec<KGen>>) -> Self {
        AutWord(gens.into())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for AutWord {
    type Err = Error;

    /// Parses `"a,b,c"` (commas and whitespace both accepted as separators).
    fn from_str(s: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for tok in s.split([',', ' ']).filter(|t| !t.is_empty()) {
            gens.push(match tok {
                "a" | "A" => KGen::Ka,
                "b" | "B" => KGen::Kb,
                "c" | "C" => KGen::Kc,
                other => return Err(Error::BadGenerator(other.to_string())),
            });
        }
        Ok(AutWord(gens))
    }
}

impl fmt::Display for AutWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.0.iter().map(|g| g.letter().to_string()).collect();
        write!(f, "{}", letters.join(","))
    }
}

pub fn apply_aut_word<T: Scalar>(word: &AutWord, t: &Triplet<T>) -> Result<Triplet<T>> {
    let mut cur = t.clone();
    for &gen in &word.0 {
        cur = apply_k(gen, &cur)?;
    }
    Ok(cur)
}

// ---------------------------------------------------------------------------
// Orbits
// ---------------------------------------------------------------------------

/// Divide all entries by the max-magnitude entry. A projective normal form
/// keeps orbit entries bounded over long float iterations; in exact mode it
/// just fixes a scale.
pub fn normalize_projective<T: Scalar>(m: &VertexMatrix<T>) -> VertexMatrix<T> {
    let pivot = m
        .entries()
        .max_by(|a, b| {
            a.magnitude()
                .partial_cmp(&b.magnitude())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .cloned();
    match pivot {
        Some(p) if !p.is_zero_tol(0.0) => m.map(|v| v.clone() / p.clone()),
        _ => m.clone(),
    }
}

fn normalize_triplet<T: Scalar>(t: &Triplet<T>) -> Triplet<T> {
    t.map_matrices(|m| normalize_projective(m))
}

#[derive(Clone, Debug)]
pub struct Orbit<T> {
    /// Distinct points visited, starting with the (normalized) seed.
    pub points: Vec<Triplet<T>>,
    /// Smallest recurrence length found within `max_iter` steps, if any.
    pub period: Option<usize>,
    /// Index of the earlier point the trajectory returned to.
    pub matched_index: Option<usize>,
}

/// Iterate `step`, comparing each new point projectively (componentwise)
/// against all previous ones.
pub fn orbit<T: Scalar>(
    start: &Triplet<T>,
    step: &AutWord,
    max_iter: usize,
    atol: f64,
) -> Result<Orbit<T>> {
    if step.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut points = vec![normalize_triplet(start)];
    let mut current = points[0].clone();
    for n in 1..=max_iter {
        current = normalize_triplet(&apply_aut_word(step, &current)?);
        for (m, past) in points.iter().enumerate() {
            if triplet_projective_eq(&current, past, atol)? {
                return Ok(Orbit {
                    points,
                    period: Some(n - m),
                    matched_index: Some(m),
                });
            }
        }
        points.push(current.clone());
    }
    Ok(Orbit { points, period: None, matched_index: None })
}

// ---------------------------------------------------------------------------
// Gauge group
// ---------------------------------------------------------------------------

/// A triple of unimodular 2x2 matrices acting by similarity on the tensor
/// legs: `A -> (g1 x g2)^{-1} A (g1 x g2)` and cyclically for B (legs 1,3)
/// and C (legs 2,3).
#[derive(Clone, PartialEq, Debug)]
pub struct GaugeElement<T> {
    g1: Mat2<T>,
    g2: Mat2<T>,
    g3: Mat2<T>,
}

impl<T: Scalar> GaugeElement<T> {
    pub fn new(g1: Mat2<T>, g2: Mat2<T>, g3: Mat2<T>) -> Result<Self> {
        for g in [&g1, &g2, &g3] {
            if !g.is_unimodular(crate::DEFAULT_TOL) {
                return Err(Error::NotUnimodular(format!("{:?}", g.determinant())));
            }
        }
        Ok(GaugeElement { g1, g2, g3 })
    }

    pub fn identity() -> Self {
        GaugeElement {
            g1: Mat2::identity(),
            g2: Mat2::identity(),
            g3: Mat2::identity(),
        }
    }

    pub fn factors(&self) -> (&Mat2<T>, &Mat2<T>, &Mat2<T>) {
        (&self.g1, &self.g2, &self.g3)
    }
}

/// The diagonal subgroup: `g_i = diag(t_i, 1/t_i)`.
#[derive(Clone, PartialEq, Debug)]
pub struct DiagonalGauge<T> {
    pub t1: T,
    pub t2: T,
    pub t3: T,
}

impl<T: Scalar> DiagonalGauge<T> {
    pub fn new(t1: T, t2: T, t3: T) -> Result<Self> {
        for t in [&t1, &t2, &t3] {
            if t.is_zero_tol(0.0) {
                return Err(Error::ZeroParameter("diagonal gauge parameter".into()));
            }
        }
        Ok(DiagonalGauge { t1, t2, t3 })
    }

    pub fn to_gauge(&self) -> Result<GaugeElement<T>> {
        let mk = |t: &T| -> Result<Mat2<T>> { Ok(Mat2::diagonal(t.clone(), t.try_recip()?)) };
        GaugeElement::new(mk(&self.t1)?, mk(&self.t2)?, mk(&self.t3)?)
    }
}

pub fn apply_gauge<T: Scalar>(g: &GaugeElement<T>, t: &Triplet<T>) -> Result<Triplet<T>> {
    let (g1, g2, g3) = g.factors();
    let (i1, i2, i3) = (g1.inverse()?, g2.inverse()?, g3.inverse()?);
    let conj = |m: &VertexMatrix<T>, gi: &Mat2<T>, gii: &Mat2<T>, gj: &Mat2<T>, gji: &Mat2<T>| {
        kron2(gii, gji).mul(m).mul(&kron2(gi, gj))
    };
    Ok(Triplet::new(
        conj(&t.a, g1, &i1, g2, &i2),
        conj(&t.b, g1, &i1, g3, &i3),
        conj(&t.c, g2, &i2, g3, &i3),
    ))
}

/// The gauge element `g'` with `K . g = g' . K`: applying a generator after
/// a gauge transformation equals gauging the image by `g'`. The slots whose
/// legs get transposed pick up the inverse transpose of their factor.
pub fn conjugate_gauge<T: Scalar>(gen: KGen, g: &GaugeElement<T>) -> Result<GaugeElement<T>> {
    let (g1, g2, g3) = g.factors();
    let it = |m: &Mat2<T>| -> Result<Mat2<T>> { Ok(m.inverse()?.transpose()) };
    match gen {
        KGen::Ka => GaugeElement::new(it(g1)?, it(g2)?, g3.clone()),
        KGen::Kb => GaugeElement::new(it(g1)?, g2.clone(), it(g3)?),
        KGen::Kc => GaugeElement::new(g1.clone(), it(g2)?, it(g3)?),
    }
}
