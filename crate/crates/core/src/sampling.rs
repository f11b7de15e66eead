//! Seeded random sampling of family parameters, gauge elements and generic
//! triplets for property tests and the CLI self-test. Samples draw small
//! integers in [-9, 9] \ {0}; singular loci (vanishing h, zero family
//! denominators, degenerate eight-vertex points, K-singular triplets) are
//! rejected and the rejections counted.

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::families::{baxter, eight_vertex, five_vertex, six_vertex};
use crate::matrix::{Mat2, Triplet, VertexMatrix};
use crate::symmetry::{apply_k, GaugeElement, KGen};
use crate::{Rational, Scalar};

pub struct Sampler {
    rng: StdRng,
    /// Rejected draws across all sampling calls so far.
    pub rejections: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: StdRng::seed_from_u64(seed), rejections: 0 }
    }

    /// A nonzero integer in [-9, 9] as an exact rational.
    pub fn nonzero_int(&mut self) -> Rational {
        loop {
            let n: i64 = self.rng.random_range(-9..=9);
            if n != 0 {
                return Rational::from_int(n);
            }
        }
    }

    pub fn real_in(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    fn reject(&mut self) {
        self.rejections += 1;
    }

    pub fn five_vertex_first(&mut self) -> five_vertex::FirstParams<Rational> {
        loop {
            let p = five_vertex::FirstParams {
                d: self.nonzero_int(),
                q: [self.nonzero_int(), self.nonzero_int(), self.nonzero_int()],
                g: [self.nonzero_int(), self.nonzero_int(), self.nonzero_int()],
            };
            if five_vertex::build_first(&p).is_ok() {
                return p;
            }
            self.reject();
        }
    }

    pub fn five_vertex_ff_explicit(&mut self) -> five_vertex::FreeFermionParams<Rational> {
        loop {
            let (p1, p2, q2, q3) = (
                self.nonzero_int(),
                self.nonzero_int(),
                self.nonzero_int(),
                self.nonzero_int(),
            );
            let factor = Rational::from_int(1) - p2.clone() * q2.clone();
            if factor.is_zero_tol(0.0) {
                self.reject();
                continue;
            }
            let (g12, g23) = (self.nonzero_int(), self.nonzero_int());
            let g13 = g12.clone() * g23.clone() / factor;
            let p = five_vertex::FreeFermionParams {
                p1,
                p2,
                q2,
                q3,
                gauge: five_vertex::FreeFermionGauge::Explicit { g12, g13, g23 },
            };
            if five_vertex::build_free_fermion(&p).is_ok() {
                return p;
            }
            self.reject();
        }
    }

    /// Uniform gauge with exponent 0 or 1 (the exact-arithmetic cases).
    pub fn five_vertex_ff_uniform(&mut self, alpha: i64) -> five_vertex::FreeFermionParams<Rational> {
        loop {
            let p = five_vertex::FreeFermionParams {
                p1: self.nonzero_int(),
                p2: self.nonzero_int(),
                q2: self.nonzero_int(),
                q3: self.nonzero_int(),
                gauge: five_vertex::FreeFermionGauge::Uniform {
                    alpha: Rational::from_int(alpha),
                    q1: self.nonzero_int(),
                    p3: self.nonzero_int(),
                },
            };
            if five_vertex::build_free_fermion(&p).is_ok() {
                return p;
            }
            self.reject();
        }
    }

    pub fn six_vertex_asym(&mut self) -> six_vertex::AsymParams<Rational> {
        loop {
            let p = six_vertex::AsymParams {
                a: self.nonzero_int(),
                b: self.nonzero_int(),
                c: self.nonzero_int(),
                d: self.nonzero_int(),
                e: self.nonzero_int(),
                f: self.nonzero_int(),
            };
            match six_vertex::build_asym(&p) {
                // all diagonal entries nonzero keeps the sample in the
                // strict six-vertex stratum
                Ok(t) if t.slots().iter().all(|m| {
                    (0..4).all(|i| !m.at(i, i).is_zero_tol(0.0))
                }) =>
                {
                    return p;
                }
                _ => self.reject(),
            }
        }
    }

    pub fn six_vertex_ff(&mut self) -> six_vertex::Sl2Pair<Rational> {
        loop {
            let mk = |s: &mut Self| -> Option<Mat2<Rational>> {
                let a = s.nonzero_int();
                let b = s.nonzero_int();
                let c = s.nonzero_int();
                // d from det = 1
                let d = (Rational::from_int(1) + b.clone() * c.clone()) / a.clone();
                Some(Mat2::new([[a, b], [c, d]]))
            };
            let (Some(hb), Some(hc)) = (mk(self), mk(self)) else {
                self.reject();
                continue;
            };
            match six_vertex::Sl2Pair::new(hb, hc) {
                Ok(pair) if six_vertex::build_free_fermion(&pair).is_ok() => return pair,
                _ => self.reject(),
            }
        }
    }

    pub fn eight_vertex(&mut self) -> eight_vertex::Params<Rational> {
        loop {
            let p = eight_vertex::Params::new(
                self.nonzero_int(),
                self.nonzero_int(),
                self.nonzero_int(),
                self.nonzero_int(),
                self.nonzero_int(),
                self.nonzero_int(),
                self.nonzero_int(),
            );
            match p {
                Ok(p) if p.degeneracies().is_empty() => return p,
                _ => self.reject(),
            }
        }
    }

    /// An eight-vertex sample on which the given generator applies without
    /// hitting a singular partial transpose.
    pub fn eight_vertex_k_regular(&mut self, gen: KGen) -> eight_vertex::Params<Rational> {
        loop {
            let p = self.eight_vertex();
            let regular = eight_vertex::build(&p)
                .ok()
                .and_then(|t| apply_k(gen, &t).ok())
                .is_some()
                && eight_vertex::k_map(gen, &p).is_ok();
            if regular {
                return p;
            }
            self.reject();
        }
    }

    pub fn trig_params(&mut self) -> six_vertex::TrigParams {
        let c = |x: f64| Complex64::new(x, 0.0);
        loop {
            let gamma = self.real_in(0.3, 1.4);
            let p = six_vertex::TrigParams {
                gamma: c(gamma),
                q1: c(self.real_in(0.5, 1.8)),
                q2: c(self.real_in(0.5, 1.8)),
                q3: c(self.real_in(0.5, 1.8)),
                lambda_a: c(self.real_in(0.05, 1.2)),
                lambda_c: c(self.real_in(0.05, 1.2)),
            };
            if six_vertex::build_trig(&p).is_ok() {
                return p;
            }
            self.reject();
        }
    }

    pub fn baxter_params(&mut self) -> baxter::Params {
        loop {
            let p = baxter::Params {
                sigma: self.real_in(0.05, 0.6),
                chi: self.real_in(0.05, 0.6),
                gamma: self.real_in(0.7, 1.5),
                k: self.real_in(0.0, 0.95),
            };
            if baxter::build(&p).is_ok() {
                return p;
            }
            self.reject();
        }
    }

    /// A random unimodular 2x2 over the rationals.
    pub fn sl2(&mut self) -> Mat2<Rational> {
        let a = self.nonzero_int();
        let b = self.nonzero_int();
        let c = self.nonzero_int();
        let d = (Rational::from_int(1) + b.clone() * c.clone()) / a.clone();
        Mat2::new([[a, b], [c, d]])
    }

    pub fn gauge(&mut self) -> GaugeElement<Rational> {
        loop {
            match GaugeElement::new(self.sl2(), self.sl2(), self.sl2()) {
                Ok(g) => return g,
                Err(_) => self.reject(),
            }
        }
    }

    /// A generic triplet, nonsingular together with its partial transposes
    /// (so every generator applies). Usually not a solution.
    pub fn triplet(&mut self) -> Triplet<Rational> {
        let matrix = |s: &mut Self| loop {
            let m = VertexMatrix::from_rows(std::array::from_fn(|_| {
                std::array::from_fn(|_| {
                    let n: i64 = s.rng.random_range(-5..=5);
                    Rational::from_int(n)
                })
            }));
            let ok = !m.determinant().is_zero_tol(0.0)
                && !crate::symmetry::transpose_left(&m).determinant().is_zero_tol(0.0)
                && !crate::symmetry::transpose_right(&m).determinant().is_zero_tol(0.0);
            if ok {
                return m;
            }
            s.reject();
        };
        Triplet::new(matrix(self), matrix(self), matrix(self))
    }
}
