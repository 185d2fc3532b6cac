use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::liealg::LieAlgebra;
use crate::parabolic::ParabolicData;
use crate::ratmat::{rat, vector, Matrix, Rational, Subspace, Vector};
use crate::rootdata::Frame;

/// Seeded source of small exact samples.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Uniform in `-2..=2`.
    pub fn coefficient(&mut self) -> Rational {
        rat(self.rng.gen_range(-2..=2))
    }

    pub fn nonzero_coefficient(&mut self) -> Rational {
        let c = self.rng.gen_range(1..=2);
        rat(if self.rng.gen_bool(0.5) { c } else { -c })
    }

    /// Random combination of a basis of `s`; may be zero.
    pub fn element(&mut self, s: &Subspace) -> Vector {
        let mut v = vector::zero(s.ambient());
        for b in s.basis() {
            let c = self.coefficient();
            vector::axpy(&mut v, &c, b);
        }
        v
    }

    /// Random subset of `0..r`.
    pub fn subset(&mut self, r: usize) -> BTreeSet<usize> {
        (0..r).filter(|_| self.rng.gen_bool(0.5)).collect()
    }

    /// Span of `k` sparse vectors with at most three nonzero coordinates.
    pub fn subspace(&mut self, n: usize, k: usize) -> Subspace {
        let vectors: Vec<Vector> = (0..k)
            .map(|_| {
                let mut v = vector::zero(n);
                for _ in 0..self.rng.gen_range(1..=3) {
                    let i = self.below(n);
                    v[i] = self.nonzero_coefficient();
                }
                v
            })
            .collect();
        Subspace::span(n, vectors)
    }

    /// Random subspace of `s` of dimension at most `k`.
    pub fn subspace_of(&mut self, s: &Subspace, k: usize) -> Subspace {
        let vectors: Vec<Vector> = (0..k).map(|_| self.element(s)).collect();
        Subspace::span(s.ambient(), vectors)
    }

    /// `exp(ad x₁) exp(ad y) exp(ad x₂)` with `x_i` in the nilradical of the
    /// frame's chamber and `y` in that of its opposite.
    pub fn conjugator(&mut self, frame: &Frame) -> Result<Matrix> {
        let g = frame.root_datum().ambient();
        let lower = frame.chamber().nilradical().clone();
        let upper = frame.chamber().opposite(frame.xi())?.nilradical().clone();
        let mut a = Matrix::identity(g.dim());
        for s in [&lower, &upper, &lower] {
            let x = self.element(s);
            a = g.exp_ad(&x)?.mul(&a);
        }
        Ok(a)
    }

    /// A single `exp(ad x)` with `x` in the nilradical of the frame's
    /// chamber or of its opposite.
    pub fn exp_ad(&mut self, frame: &Frame) -> Result<Matrix> {
        let g = frame.root_datum().ambient();
        let n = if self.rng.gen_bool(0.5) {
            frame.chamber().nilradical().clone()
        } else {
            frame.chamber().opposite(frame.xi())?.nilradical().clone()
        };
        g.exp_ad(&self.element(&n))
    }

    /// A conjugate of the standard parabolic of a random type.
    pub fn parabolic(&mut self, frame: &Frame, a: &Matrix) -> Result<(BTreeSet<usize>, ParabolicData)> {
        let j = self.subset(frame.rank());
        let p = frame.parabolic_from_subset(&j)?;
        Ok((j, conjugate(frame.root_datum().ambient(), &p, a)?))
    }
}

pub fn conjugate(g: &std::sync::Arc<LieAlgebra>, p: &ParabolicData, a: &Matrix) -> Result<ParabolicData> {
    ParabolicData::new(g, p.space().image(a))
}
