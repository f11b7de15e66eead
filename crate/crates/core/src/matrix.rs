//! Dense 2x2, 4x4 and 8x8 matrices over a scalar realization.
//!
//! Double-index conventions used throughout the crate: a 4x4 vertex matrix
//! entry `R^{ij}_{kl}` (i, j, k, l in {1, 2}) sits at flat row
//! `2(i-1)+(j-1)` and column `2(k-1)+(l-1)`, i.e. the left index labels the
//! 2x2 block and the right index the position inside the block. An 8x8
//! triple-space entry `R^{i1 i2 i3}_{j1 j2 j3}` sits at row
//! `4(i1-1)+2(i2-1)+(i3-1)`, analogously for columns.

use num_complex::Complex64;

use crate::scalar::Scalar;
use crate::{Error, Result};

fn grid<T: Scalar, const N: usize>(mut f: impl FnMut(usize, usize) -> T) -> [[T; N]; N] {
    std::array::from_fn(|r| std::array::from_fn(|c| f(r, c)))
}

// ---------------------------------------------------------------------------
// 2x2
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Debug)]
pub struct Mat2<T> {
    e: [[T; 2]; 2],
}

impl<T: Scalar> Mat2<T> {
    pub fn new(rows: [[T; 2]; 2]) -> Self {
        Mat2 { e: rows }
    }

    pub fn identity() -> Self {
        Mat2::new([[T::one(), T::zero()], [T::zero(), T::one()]])
    }

    pub fn diagonal(d0: T, d1: T) -> Self {
        Mat2::new([[d0, T::zero()], [T::zero(), d1]])
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.e[r][c]
    }

    pub fn determinant(&self) -> T {
        self.e[0][0].clone() * self.e[1][1].clone() - self.e[0][1].clone() * self.e[1][0].clone()
    }

    pub fn transpose(&self) -> Self {
        Mat2::new([
            [self.e[0][0].clone(), self.e[1][0].clone()],
            [self.e[0][1].clone(), self.e[1][1].clone()],
        ])
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.determinant();
        if det.is_zero_tol(0.0) {
            return Err(Error::Singular("2x2 inverse"));
        }
        Ok(Mat2::new([
            [
                self.e[1][1].clone() / det.clone(),
                -(self.e[0][1].clone() / det.clone()),
            ],
            [
                -(self.e[1][0].clone() / det.clone()),
                self.e[0][0].clone() / det,
            ],
        ]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = |r: usize, c: usize| {
            self.e[r][0].clone() * other.e[0][c].clone() + self.e[r][1].clone() * other.e[1][c].clone()
        };
        Mat2::new([[p(0, 0), p(0, 1)], [p(1, 0), p(1, 1)]])
    }

    pub fn is_unimodular(&self, atol: f64) -> bool {
        self.determinant().eq_tol(&T::one(), atol)
    }
}

// ---------------------------------------------------------------------------
// 4x4 vertex matrices
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Debug)]
pub struct VertexMatrix<T> {
    e: [[T; 4]; 4],
}

impl<T: Scalar> VertexMatrix<T> {
    pub fn from_rows(rows: [[T; 4]; 4]) -> Self {
        VertexMatrix { e: rows }
    }

    pub fn zero() -> Self {
        VertexMatrix { e: grid(|_, _| T::zero()) }
    }

    pub fn identity() -> Self {
        VertexMatrix {
            e: grid(|r, c| if r == c { T::one() } else { T::zero() }),
        }
    }

    /// The permutation matrix `P^{ij}_{kl} = d^i_l d^j_k` swapping the two
    /// tensor factors.
    pub fn swap() -> Self {
        VertexMatrix {
            e: grid(|r, c| {
                let (i, j) = (r / 2, r % 2);
                let (k, l) = (c / 2, c % 2);
                if i == l && j == k {
                    T::one()
                } else {
                    T::zero()
                }
            }),
        }
    }

    pub fn diagonal(d: [T; 4]) -> Self {
        let mut m = Self::zero();
        for (r, v) in d.into_iter().enumerate() {
            m.e[r][r] = v;
        }
        m
    }

    /// Matrix of the six-vertex zero pattern: diagonal entries plus the two
    /// inner off-diagonal positions (2,3) and (3,2).
    pub fn six_vertex(diag: [T; 4], x23: T, x32: T) -> Self {
        let mut m = Self::diagonal(diag);
        m.e[1][2] = x23;
        m.e[2][1] = x32;
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.e[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.e[r][c] = v;
    }

    /// Entry `R^{ij}_{kl}` with 1-based double indices in {1, 2}.
    pub fn double_index(&self, i: usize, j: usize, k: usize, l: usize) -> &T {
        &self.e[2 * (i - 1) + (j - 1)][2 * (k - 1) + (l - 1)]
    }

    pub fn rows(&self) -> &[[T; 4]; 4] {
        &self.e
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.e.iter().flatten()
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> VertexMatrix<U> {
        VertexMatrix { e: grid(|r, c| f(&self.e[r][c])) }
    }

    pub fn to_complex(&self) -> VertexMatrix<Complex64> {
        self.map(|v| v.to_complex())
    }

    pub fn transpose(&self) -> Self {
        VertexMatrix { e: grid(|r, c| self.e[c][r].clone()) }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|v| v.clone() * s.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        VertexMatrix { e: grid(|r, c| self.e[r][c].clone() + other.e[r][c].clone()) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        VertexMatrix { e: grid(|r, c| self.e[r][c].clone() - other.e[r][c].clone()) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        VertexMatrix {
            e: grid(|r, c| {
                let mut acc = T::zero();
                for k in 0..4 {
                    acc = acc + self.e[r][k].clone() * other.e[k][c].clone();
                }
                acc
            }),
        }
    }

    pub fn max_magnitude(&self) -> f64 {
        self.entries().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn is_zero_tol(&self, atol: f64) -> bool {
        self.entries().all(|v| v.is_zero_tol(atol))
    }

    fn minor3(&self, rs: [usize; 3], cs: [usize; 3]) -> T {
        let m = |r: usize, c: usize| self.e[rs[r]][cs[c]].clone();
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    }

    fn complement(idx: usize) -> [usize; 3] {
        let mut out = [0; 3];
        let mut n = 0;
        for v in 0..4 {
            if v != idx {
                out[n] = v;
                n += 1;
            }
        }
        out
    }

    pub fn determinant(&self) -> T {
        let rows = Self::complement(0);
        let mut det = T::zero();
        for c in 0..4 {
            let term = self.e[0][c].clone() * self.minor3(rows, Self::complement(c));
            det = if c % 2 == 0 { det + term } else { det - term };
        }
        det
    }

    /// True inverse computed from the adjugate (normalization factor 1).
    pub fn inverse(&self) -> Result<Self> {
        let det = self.determinant();
        if det.is_zero_tol(0.0) {
            return Err(Error::Singular("4x4 inverse"));
        }
        Ok(VertexMatrix {
            e: grid(|r, c| {
                // adj[r][c] = (-1)^{r+c} minor(c, r)
                let m = self.minor3(Self::complement(c), Self::complement(r));
                let signed = if (r + c) % 2 == 0 { m } else { -m };
                signed / det.clone()
            }),
        })
    }
}

// ---------------------------------------------------------------------------
// 8x8 triple-space matrices
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Debug)]
pub struct TripleSpaceMatrix<T> {
    e: [[T; 8]; 8],
}

impl<T: Scalar> TripleSpaceMatrix<T> {
    pub fn zero() -> Self {
        TripleSpaceMatrix { e: grid(|_, _| T::zero()) }
    }

    pub fn identity() -> Self {
        TripleSpaceMatrix {
            e: grid(|r, c| if r == c { T::one() } else { T::zero() }),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.e[r][c]
    }

    /// Entry `R^{i1 i2 i3}_{j1 j2 j3}` with 1-based indices in {1, 2}.
    pub fn triple_index(&self, i: [usize; 3], j: [usize; 3]) -> &T {
        let r = 4 * (i[0] - 1) + 2 * (i[1] - 1) + (i[2] - 1);
        let c = 4 * (j[0] - 1) + 2 * (j[1] - 1) + (j[2] - 1);
        &self.e[r][c]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.e.iter().flatten()
    }

    pub fn mul(&self, other: &Self) -> Self {
        TripleSpaceMatrix {
            e: grid(|r, c| {
                let mut acc = T::zero();
                for k in 0..8 {
                    // embeddings are three-quarters zeros; skipping exact
                    // zeros saves most of the big-rational work
                    if self.e[r][k].is_zero_tol(0.0) {
                        continue;
                    }
                    acc = acc + self.e[r][k].clone() * other.e[k][c].clone();
                }
                acc
            }),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        TripleSpaceMatrix { e: grid(|r, c| self.e[r][c].clone() - other.e[r][c].clone()) }
    }

    pub fn max_magnitude(&self) -> f64 {
        self.entries().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn is_zero_tol(&self, atol: f64) -> bool {
        self.entries().all(|v| v.is_zero_tol(atol))
    }
}

// ---------------------------------------------------------------------------
// Kronecker products and tensor-leg embeddings
// ---------------------------------------------------------------------------

/// Kronecker product of two 2x2 matrices in the block convention above.
pub fn kron2<T: Scalar>(m: &Mat2<T>, n: &Mat2<T>) -> VertexMatrix<T> {
    VertexMatrix::from_rows(grid(|r, c| {
        m.at(r / 2, c / 2).clone() * n.at(r % 2, c % 2).clone()
    }))
}

/// Kronecker product of a 4x4 with a 2x2 (the 2x2 acting on the last leg).
pub fn kron42<T: Scalar>(m: &VertexMatrix<T>, n: &Mat2<T>) -> TripleSpaceMatrix<T> {
    TripleSpaceMatrix {
        e: grid(|r, c| m.at(r / 2, c / 2).clone() * n.at(r % 2, c % 2).clone()),
    }
}

/// Kronecker product of a 2x2 with a 4x4 (the 2x2 acting on the first leg).
pub fn kron24<T: Scalar>(m: &Mat2<T>, n: &VertexMatrix<T>) -> TripleSpaceMatrix<T> {
    TripleSpaceMatrix {
        e: grid(|r, c| m.at(r / 4, c / 4).clone() * n.at(r % 4, c % 4).clone()),
    }
}

/// Which pair of tensor legs a 4x4 matrix acts on inside the triple space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpacePair {
    S12,
    S13,
    S23,
}

/// Embed a 4x4 matrix into the 8x8 triple space:
/// `(M12)^{i1 i2 i3}_{j1 j2 j3} = M^{i1 i2}_{j1 j2} d^{i3}_{j3}` and the
/// analogous delta placements for the 13 and 23 pairs.
pub fn embed<T: Scalar>(m: &VertexMatrix<T>, pair: SpacePair) -> TripleSpaceMatrix<T> {
    TripleSpaceMatrix {
        e: grid(|r, c| {
            let i = [r / 4, (r / 2) % 2, r % 2];
            let j = [c / 4, (c / 2) % 2, c % 2];
            let (row, col, fixed) = match pair {
                SpacePair::S12 => (2 * i[0] + i[1], 2 * j[0] + j[1], i[2] == j[2]),
                SpacePair::S13 => (2 * i[0] + i[2], 2 * j[0] + j[2], i[1] == j[1]),
                SpacePair::S23 => (2 * i[1] + i[2], 2 * j[1] + j[2], i[0] == j[0]),
            };
            if fixed {
                m.at(row, col).clone()
            } else {
                T::zero()
            }
        }),
    }
}

// ---------------------------------------------------------------------------
// Triplets
// ---------------------------------------------------------------------------

/// An ordered triple (A, B, C) of vertex matrices. A triplet need not solve
/// the Yang-Baxter equation; the symmetry actions are defined regardless.
#[derive(Clone, PartialEq, Debug)]
pub struct Triplet<T> {
    pub a: VertexMatrix<T>,
    pub b: VertexMatrix<T>,
    pub c: VertexMatrix<T>,
}

impl<T: Scalar> Triplet<T> {
    pub fn new(a: VertexMatrix<T>, b: VertexMatrix<T>, c: VertexMatrix<T>) -> Self {
        Triplet { a, b, c }
    }

    pub fn constant(r: VertexMatrix<T>) -> Self {
        Triplet { a: r.clone(), b: r.clone(), c: r }
    }

    pub fn slots(&self) -> [&VertexMatrix<T>; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn map_matrices(&self, mut f: impl FnMut(&VertexMatrix<T>) -> VertexMatrix<T>) -> Self {
        Triplet { a: f(&self.a), b: f(&self.b), c: f(&self.c) }
    }

    pub fn to_complex(&self) -> Triplet<Complex64> {
        Triplet {
            a: self.a.to_complex(),
            b: self.b.to_complex(),
            c: self.c.to_complex(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn ri(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn kron_identity_cases() {
        let i2: Mat2<Rational> = Mat2::identity();
        assert_eq!(kron2(&i2, &i2), VertexMatrix::identity());
        let d = Mat2::diagonal(ri(1), ri(2));
        assert_eq!(
            kron2(&d, &i2),
            VertexMatrix::diagonal([ri(1), ri(1), ri(2), ri(2)])
        );
    }

    #[test]
    fn kron_matches_index_formula() {
        // brute force over all 16 index tuples, including a non-diagonal factor
        let m = Mat2::new([[ri(0), ri(1)], [ri(1), ri(0)]]);
        let n = Mat2::new([[ri(2), ri(3)], [ri(5), ri(7)]]);
        let k = kron2(&m, &n);
        for i in 1..=2usize {
            for j in 1..=2usize {
                for kk in 1..=2usize {
                    for l in 1..=2usize {
                        let expect = m.at(i - 1, kk - 1).clone() * n.at(j - 1, l - 1).clone();
                        assert_eq!(k.double_index(i, j, kk, l), &expect);
                    }
                }
            }
        }
    }

    #[test]
    fn embed_identity_and_adjacent_pairs() {
        let i4: VertexMatrix<Rational> = VertexMatrix::identity();
        assert_eq!(embed(&i4, SpacePair::S13), TripleSpaceMatrix::identity());

        let m = VertexMatrix::from_rows(std::array::from_fn(|r| {
            std::array::from_fn(|c| ri((r * 4 + c + 1) as i64))
        }));
        assert_eq!(embed(&m, SpacePair::S12), kron42(&m, &Mat2::identity()));
        assert_eq!(embed(&m, SpacePair::S23), kron24(&Mat2::identity(), &m));
    }

    #[test]
    fn embed_13_elementary_matrix() {
        // E^{12,21}: single 1 at double index (1,2),(2,1); its 13-embedding has
        // exactly two nonzero entries, located by the delta formula.
        let mut m: VertexMatrix<Rational> = VertexMatrix::zero();
        m.set(1, 2, ri(1));
        let e = embed(&m, SpacePair::S13);
        let mut nonzero = 0;
        for i1 in 1..=2 {
            for i2 in 1..=2 {
                for i3 in 1..=2 {
                    for j1 in 1..=2 {
                        for j2 in 1..=2 {
                            for j3 in 1..=2 {
                                let v = e.triple_index([i1, i2, i3], [j1, j2, j3]);
                                let expect = m.double_index(i1, i3, j1, j3).clone()
                                    * if i2 == j2 { ri(1) } else { ri(0) };
                                assert_eq!(v, &expect);
                                if !v.is_zero_tol(0.0) {
                                    nonzero += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(nonzero, 2);
    }

    #[test]
    fn inverse_diagonal() {
        let m = VertexMatrix::diagonal([ri(1), ri(2), ri(3), ri(4)]);
        let inv = m.inverse().unwrap();
        assert_eq!(
            inv,
            VertexMatrix::diagonal([
                ri(1),
                Rational::from_ratio(1, 2),
                Rational::from_ratio(1, 3),
                Rational::from_ratio(1, 4)
            ])
        );
        assert!(VertexMatrix::<Rational>::zero().inverse().is_err());
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = VertexMatrix::from_rows([
            [ri(2), ri(1), ri(0), ri(3)],
            [ri(1), ri(-1), ri(2), ri(0)],
            [ri(0), ri(4), ri(1), ri(1)],
            [ri(5), ri(0), ri(1), ri(2)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv.mul(&m), VertexMatrix::identity());
        assert_eq!(m.mul(&inv), VertexMatrix::identity());
    }
}
