use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ratmat::{vector, BilinearForm, Matrix, Rational, Subspace, Vector};

use super::LieAlgebra;

/// `space / ideal` as an algebra, with maps back and forth.
///
/// Quotient basis vectors are represented in the ambient algebra by the
/// reduced basis of the image of `space` modulo `ideal`; that is the
/// section. The projection reads coordinates off after reducing modulo the
/// ideal, so it is only meaningful on `space`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Arc<LieAlgebra>,
    /// `dim quotient × dim ambient`; correct on `space`.
    pub projection: Matrix,
    /// `dim ambient × dim quotient`; columns lie in `space`.
    pub section: Matrix,
    pub space: Subspace,
    pub ideal: Subspace,
}

impl Quotient {
    pub fn new(g: &LieAlgebra, space: &Subspace, ideal: &Subspace) -> Result<Self> {
        let n = g.dim();
        if space.ambient() != n || ideal.ambient() != n {
            return Err(Error::DimensionMismatch("subspaces must live in the algebra".into()));
        }
        if !g.is_subalgebra(space) {
            return Err(Error::NotSubalgebra);
        }
        if !space.contains(ideal) || !g.is_ideal_in(ideal, space) {
            return Err(Error::NotIdeal);
        }
        let reps = Subspace::span(n, space.basis().iter().map(|b| ideal.reduce(b)));
        let q = reps.dim();
        let section_vecs: Vec<Vector> = reps.basis().to_vec();
        let section = Matrix::from_columns(&section_vecs, n);

        // projection = (pivot rows of reps) ∘ (x ↦ x reduced modulo the ideal)
        let mut reduce = Matrix::identity(n);
        for (row, &p) in ideal.basis().iter().zip(ideal.pivots()) {
            for (j, c) in row.iter().enumerate() {
                reduce[(j, p)] -= c;
            }
        }
        let projection = Matrix::from_fn(q, n, |k, j| reduce[(reps.pivots()[k], j)].clone());

        let mut structure = vec![vec![vector::zero(q); q]; q];
        for a in 0..q {
            for b in a + 1..q {
                let br = g.bracket(&section_vecs[a], &section_vecs[b]);
                let c = projection.mul_vec(&br);
                structure[b][a] = vector::neg(&c);
                structure[a][b] = c;
            }
        }
        let labels = reps.pivots().iter().map(|&p| g.labels()[p].clone()).collect();
        let mut algebra = LieAlgebra::new(labels, structure)
            .map_err(|e| Error::Internal(format!("quotient failed validation: {e}")))?;

        if ideal.is_zero() {
            if g.realization().is_some() {
                let restricted = section_vecs.iter().map(|s| g.represent(s).expect("realization present")).collect();
                algebra = algebra.with_realization(restricted)?;
            } else if let Ok(f) = g.trace_form() {
                algebra = algebra.with_form(f.pullback(&section))?;
            }
        } else if let Ok(f) = g.trace_form() {
            // the form descends when the ideal is orthogonal to the space
            if space.perp(f).contains(ideal) {
                algebra = algebra.with_form(f.pullback(&section))?;
            }
        }
        Ok(Quotient { algebra: Arc::new(algebra), projection, section, space: space.clone(), ideal: ideal.clone() })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Image of an element of `space`.
    pub fn project(&self, x: &[Rational]) -> Result<Vector> {
        if !self.space.contains_vector(x) {
            return Err(Error::Precondition("element outside the quotiented subalgebra".into()));
        }
        Ok(self.projection.mul_vec(x))
    }

    /// Image of a subspace of `space`.
    pub fn project_space(&self, s: &Subspace) -> Result<Subspace> {
        if !self.space.contains(s) {
            return Err(Error::Precondition("subspace not inside the quotiented subalgebra".into()));
        }
        Ok(s.image(&self.projection))
    }

    pub fn lift(&self, y: &[Rational]) -> Vector {
        self.section.mul_vec(y)
    }

    /// Full preimage in `space` of a subspace of the quotient.
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        s.image(&self.section).sum(&self.ideal)
    }

    pub fn form(&self) -> Option<&BilinearForm> {
        self.algebra.trace_form().ok()
    }
}
