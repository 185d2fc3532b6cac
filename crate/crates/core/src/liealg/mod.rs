//! Lie algebras given by structure constants in a fixed basis.

mod filtration;
mod quotient;

pub use filtration::Filtration;
pub use quotient::Quotient;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ratmat::{kernel, minimal_polynomial, rat, vector, BilinearForm, Matrix, Rational, Subspace, Vector};

/// Element coordinates in the algebra's basis.
pub type Element = Vector;

/// Outcome of the one-sided reductivity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reductivity {
    /// The attached form is nondegenerate.
    Reductive,
    /// The attached form is degenerate, which proves nothing either way.
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    labels: Vec<String>,
    structure: Vec<Vec<Vector>>,
    sparse: Vec<Vec<Vec<(usize, Rational)>>>,
    ad_basis: Vec<Matrix>,
    realization: Option<Vec<Matrix>>,
    form: Option<BilinearForm>,
    derived: std::sync::OnceLock<Subspace>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.structure == other.structure
            && self.labels == other.labels
            && self.realization == other.realization
            && self.form == other.form
    }
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity on all basis triples.
    pub fn new(labels: Vec<String>, structure: Vec<Vec<Vector>>) -> Result<Self> {
        let n = labels.len();
        if structure.len() != n || structure.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::DimensionMismatch(format!("structure tensor is not {n}x{n}x{n}")));
        }
        for i in 0..n {
            for j in i..n {
                if vector::add(&structure[i][j], &structure[j][i]).iter().any(|c| !c.is_zero()) {
                    return Err(Error::Antisymmetry { i, j });
                }
            }
        }
        let sparse: Vec<Vec<Vec<(usize, Rational)>>> = structure
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect())
                    .collect()
            })
            .collect();
        let ad_basis = (0..n)
            .map(|i| Matrix::from_fn(n, n, |k, j| structure[i][j][k].clone()))
            .collect();
        let g = LieAlgebra {
            labels,
            structure,
            sparse,
            ad_basis,
            realization: None,
            form: None,
            derived: Default::default(),
        };
        if let Some((i, j, k)) = g.first_jacobi_failure() {
            return Err(Error::Jacobi { i, j, k });
        }
        Ok(g)
    }

    /// Builds the algebra spanned by linearly independent matrices closed
    /// under the commutator, with those matrices as realization.
    pub fn from_matrices(labels: Vec<String>, mats: Vec<Matrix>) -> Result<Self> {
        let n = mats.len();
        if labels.len() != n {
            return Err(Error::DimensionMismatch("one label per matrix".into()));
        }
        let coords = MatrixCoordinates::new(&mats)?;
        let mut structure = vec![vec![vector::zero(n); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let c = coords
                    .coords(&mats[i].commutator(&mats[j]))
                    .ok_or_else(|| Error::Realization(format!("[{}, {}] leaves the span", labels[i], labels[j])))?;
                structure[j][i] = vector::neg(&c);
                structure[i][j] = c;
            }
        }
        LieAlgebra::new(labels, structure)?.with_realization(mats)
    }

    /// Attaches a faithful realization and its trace form.
    pub fn with_realization(mut self, mats: Vec<Matrix>) -> Result<Self> {
        let n = self.dim();
        if mats.len() != n {
            return Err(Error::Realization(format!("expected {n} matrices, got {}", mats.len())));
        }
        let size = mats.first().map_or(0, Matrix::rows);
        if mats.iter().any(|m| m.rows() != size || m.cols() != size) {
            return Err(Error::Realization("matrices must be square of one size".into()));
        }
        MatrixCoordinates::new(&mats).map_err(|_| Error::Realization("matrices are linearly dependent".into()))?;
        for i in 0..n {
            for j in i + 1..n {
                let lhs = mats[i].commutator(&mats[j]);
                let mut rhs = Matrix::zeros(size, size);
                for (k, c) in &self.sparse[i][j] {
                    rhs.add_scaled(c, &mats[*k]);
                }
                if lhs != rhs {
                    return Err(Error::Realization(format!(
                        "commutator of {} and {} disagrees with the structure constants",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        let gram = Matrix::from_fn(n, n, |i, j| mats[i].trace_of_product(&mats[j]));
        self.form = Some(BilinearForm::new(gram));
        self.realization = Some(mats);
        Ok(self)
    }

    /// Attaches an invariant symmetric form (used for quotients, which have
    /// no realization of their own).
    pub fn with_form(mut self, form: BilinearForm) -> Result<Self> {
        let n = self.dim();
        if form.dim() != n || !form.is_symmetric() {
            return Err(Error::Invalid("form must be symmetric of the algebra's dimension".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let bij = &self.structure[i][j];
                for k in 0..n {
                    // <[b_i,b_j], b_k> = <b_i, [b_j,b_k]>
                    let lhs = vector::dot(bij, form.gram.row(k));
                    let rhs = vector::dot(form.gram.row(i), &self.structure[j][k]);
                    if lhs != rhs {
                        return Err(Error::Invalid(format!("form not invariant at ({i}, {j}, {k})")));
                    }
                }
            }
        }
        self.form = Some(form);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure(&self) -> &[Vec<Vector>] {
        &self.structure
    }

    pub fn realization(&self) -> Option<&[Matrix]> {
        self.realization.as_deref()
    }

    /// The attached admissible form: the realization's trace form, or the
    /// induced form on a quotient.
    pub fn trace_form(&self) -> Result<&BilinearForm> {
        self.form.as_ref().ok_or(Error::NoForm)
    }

    /// The trace form, required to be nondegenerate.
    pub fn admissible_form(&self) -> Result<&BilinearForm> {
        let f = self.trace_form()?;
        if f.is_nondegenerate() {
            Ok(f)
        } else {
            Err(Error::NoForm)
        }
    }

    pub fn is_reductive(&self) -> Result<Reductivity> {
        Ok(if self.trace_form()?.is_nondegenerate() { Reductivity::Reductive } else { Reductivity::Inconclusive })
    }

    pub fn zero(&self) -> Element {
        vector::zero(self.dim())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        vector::unit(self.dim(), i)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Element {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "element length mismatch");
        let mut out = vector::zero(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || self.sparse[i][j].is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in &self.sparse[i][j] {
                    out[*k] += &c * s;
                }
            }
        }
        out
    }

    /// Matrix of `ad(x)`; column `j` holds `[x, b_j]`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m.add_scaled(xi, &self.ad_basis[i]);
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad_basis[i]
    }

    /// Image of an element in the realization.
    pub fn represent(&self, x: &[Rational]) -> Option<Matrix> {
        let mats = self.realization.as_ref()?;
        let size = mats.first().map_or(0, Matrix::rows);
        let mut m = Matrix::zeros(size, size);
        for (c, r) in x.iter().zip(mats) {
            if !c.is_zero() {
                m.add_scaled(c, r);
            }
        }
        Some(m)
    }

    pub fn bracket_spaces(&self, s: &Subspace, t: &Subspace) -> Subspace {
        self.check_ambient(s);
        self.check_ambient(t);
        let mut out = Vec::with_capacity(s.dim() * t.dim());
        for x in s.basis() {
            for y in t.basis() {
                out.push(self.bracket(x, y));
            }
        }
        Subspace::span(self.dim(), out)
    }

    /// `c_g(a, b) = {x : [x, a] ⊆ b}`.
    pub fn transporter(&self, a: &Subspace, b: &Subspace) -> Subspace {
        self.check_ambient(a);
        self.check_ambient(b);
        let n = self.dim();
        let ann = b.annihilator();
        if ann.is_zero() || a.is_zero() {
            return self.full();
        }
        // [x, a_k] = -ad(a_k) x, so the constraints are (ann · ad(a_k)) x = 0
        let mut rows = Vec::with_capacity(a.dim() * ann.dim());
        for ak in a.basis() {
            let adk = self.ad(ak);
            let t = adk.transpose();
            for w in ann.basis() {
                rows.push(t.mul_vec(w));
            }
        }
        kernel(&Matrix::from_rows_with_cols(rows, n))
    }

    pub fn normalizer(&self, s: &Subspace) -> Subspace {
        self.transporter(s, s)
    }

    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        self.transporter(s, &Subspace::zero(self.dim()))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.full())
    }

    pub fn derived_algebra(&self) -> Subspace {
        self.derived
            .get_or_init(|| {
                let all = self.full();
                self.bracket_spaces(&all, &all)
            })
            .clone()
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains(&self.bracket_spaces(s, s))
    }

    /// `[p, s] ⊆ s`
    pub fn is_ideal_in(&self, s: &Subspace, p: &Subspace) -> bool {
        s.contains(&self.bracket_spaces(p, s))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.is_ideal_in(s, &self.full())
    }

    pub fn is_abelian(&self, s: &Subspace) -> bool {
        self.bracket_spaces(s, s).is_zero()
    }

    /// `s, [s,s], [s,[s,s]], ...` until it stabilizes.
    pub fn lower_central_series(&self, s: &Subspace) -> Result<Vec<Subspace>> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotSubalgebra);
        }
        let mut series = vec![s.clone()];
        loop {
            let next = self.bracket_spaces(s, series.last().unwrap());
            if &next == series.last().unwrap() {
                return Ok(series);
            }
            series.push(next);
        }
    }

    pub fn is_nilpotent_subalgebra(&self, s: &Subspace) -> Result<bool> {
        Ok(self.lower_central_series(s)?.last().unwrap().is_zero())
    }

    /// Whether `s` acts nilpotently on the whole algebra:
    /// `[s, [s, ... [s, g]]]` reaches zero.
    pub fn acts_nilpotently(&self, s: &Subspace) -> bool {
        let mut w = self.full();
        for _ in 0..=self.dim() {
            if w.is_zero() {
                return true;
            }
            let next = self.bracket_spaces(s, &w);
            if next == w {
                return false;
            }
            w = next;
        }
        w.is_zero()
    }

    pub fn is_ad_nilpotent(&self, x: &[Rational]) -> bool {
        self.ad(x).nilpotency_index().is_some()
    }

    /// `x ∈ [g,g]` and `ad(x)` nilpotent.
    pub fn in_nilpotent_cone(&self, x: &[Rational]) -> bool {
        self.derived_algebra().contains_vector(x) && self.is_ad_nilpotent(x)
    }

    pub fn induced_filtration(&self, n: &Subspace, p: &Subspace) -> Result<Filtration> {
        Filtration::induced(self, n, p)
    }

    /// `exp(ad x)`, defined when `ad x` is nilpotent.
    pub fn exp_ad(&self, x: &[Rational]) -> Result<Matrix> {
        let a = self.ad(x);
        let n = self.dim();
        let mut term = Matrix::identity(n);
        let mut total = Matrix::identity(n);
        for k in 1..=n + 1 {
            term = term.mul(&a).scale(&rat(k as i64).recip());
            if term.is_zero() {
                return Ok(total);
            }
            total = total.add(&term);
        }
        Err(Error::NotNilpotent)
    }

    /// Checks `A[y,z] = [Ay, Az]` on basis pairs.
    pub fn is_automorphism(&self, a: &Matrix) -> bool {
        let n = self.dim();
        if a.rows() != n || a.cols() != n || a.inverse().is_none() {
            return false;
        }
        let images: Vec<Vector> = (0..n).map(|i| a.column(i)).collect();
        (0..n).all(|i| {
            (i + 1..n).all(|j| a.mul_vec(&self.structure[i][j]) == self.bracket(&images[i], &images[j]))
        })
    }

    pub fn ad_semisimple_part(&self, x: &[Rational]) -> Matrix {
        semisimple_part(&self.ad(x))
    }

    pub fn is_ad_semisimple(&self, x: &[Rational]) -> bool {
        minimal_polynomial(&self.ad(x)).is_squarefree()
    }

    /// Gram matrix of `(x, y) ↦ tr(ad x · ad y)` restricted to `s`, in the
    /// stored basis of `s`.
    pub fn ad_trace_form_on(&self, s: &Subspace) -> BilinearForm {
        let ads: Vec<Matrix> = s.basis().iter().map(|x| self.ad(x)).collect();
        let d = ads.len();
        let mut gram = Matrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let t = ads[i].trace_of_product(&ads[j]);
                gram[(j, i)] = t.clone();
                gram[(i, j)] = t;
            }
        }
        BilinearForm::new(gram)
    }

    /// Radical of the Killing form of `s` (as an algebra in its own right)
    /// intersected with `[s,s]`. By the Cartan criterion this is the
    /// nilpotent radical of `s`.
    pub fn nilpotent_radical(&self, s: &Subspace) -> Result<Subspace> {
        let sub = self.subalgebra(s)?;
        let h = &sub.algebra;
        let killing = h.ad_trace_form_on(&h.full());
        let rad = killing.radical().intersect(&h.derived_algebra());
        Ok(rad.image(&sub.section))
    }

    /// Largest ideal of `s` contained in the nilpotent cone of `g`, computed
    /// as the radical of the `ad_g` trace form on `s` intersected with
    /// `[g,g]`. `None` if that candidate fails to act nilpotently, in which
    /// case the construction does not decide the answer.
    pub fn nilpotent_cone_ideal(&self, s: &Subspace) -> Option<Subspace> {
        let tau = self.ad_trace_form_on(s);
        let rad = tau.radical();
        let rad_in_g = Subspace::span(self.dim(), rad.basis().iter().map(|c| s.element(c)));
        let candidate = rad_in_g.intersect(&self.derived_algebra());
        (self.is_ideal_in(&candidate, s) && self.acts_nilpotently(&candidate)).then_some(candidate)
    }

    pub fn quotient_algebra(&self, ideal: &Subspace) -> Result<Quotient> {
        Quotient::new(self, &self.full(), ideal)
    }

    /// A subalgebra as an algebra in its own right, with restricted
    /// realization and form.
    pub fn subalgebra(&self, s: &Subspace) -> Result<Quotient> {
        Quotient::new(self, s, &Subspace::zero(self.dim()))
    }

    /// First failing basis triple `i < j < k` of the Jacobi identity.
    fn first_jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let bi = self.basis_element(i);
                    let bj = self.basis_element(j);
                    let bk = self.basis_element(k);
                    let t1 = self.bracket(&bi, &self.structure[j][k]);
                    let t2 = self.bracket(&bj, &self.structure[k][i]);
                    let t3 = self.bracket(&bk, &self.structure[i][j]);
                    if !vector::is_zero(&vector::add(&vector::add(&t1, &t2), &t3)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    fn check_ambient(&self, s: &Subspace) {
        assert_eq!(s.ambient(), self.dim(), "subspace lives in a different ambient space");
    }
}

/// Coordinates of matrices in the span of a fixed independent family.
struct MatrixCoordinates {
    positions: Vec<usize>,
    inverse: Matrix,
    flat: Vec<Vector>,
}

impl MatrixCoordinates {
    fn new(mats: &[Matrix]) -> Result<Self> {
        let flat: Vec<Vector> = mats.iter().map(|m| m.data().to_vec()).collect();
        let n = flat.len();
        if n == 0 {
            return Ok(MatrixCoordinates { positions: Vec::new(), inverse: Matrix::zeros(0, 0), flat });
        }
        let width = flat[0].len();
        let (_, positions) = crate::ratmat::rref_with_pivots(&Matrix::from_rows(flat.clone()));
        if positions.len() != n {
            return Err(Error::Invalid("matrices are linearly dependent".into()));
        }
        let square = Matrix::from_fn(n, n, |r, c| flat[c][positions[r]].clone());
        let inverse = square.inverse().ok_or_else(|| Error::Internal("pivot minor singular".into()))?;
        debug_assert!(positions.iter().all(|&p| p < width));
        Ok(MatrixCoordinates { positions, inverse, flat })
    }

    fn coords(&self, m: &Matrix) -> Option<Vector> {
        let v = m.data();
        let picked: Vector = self.positions.iter().map(|&p| v[p].clone()).collect();
        let c = self.inverse.mul_vec(&picked);
        let back = vector::combine(v.len(), &c, &self.flat);
        (back == v).then_some(c)
    }
}

/// Semisimple part of a matrix in its additive Jordan decomposition, by
/// Newton iteration on the squarefree part of the minimal polynomial.
pub fn semisimple_part(m: &Matrix) -> Matrix {
    let s = minimal_polynomial(m).squarefree_part();
    let ds = s.derivative();
    let mut a = m.clone();
    for _ in 0..=2 * m.rows().max(1) {
        let sa = s.eval_matrix(&a);
        if sa.is_zero() {
            return a;
        }
        let inv = ds
            .eval_matrix(&a)
            .inverse()
            .expect("derivative of a squarefree polynomial is invertible on the iterate");
        a = a.sub(&sa.mul(&inv));
    }
    unreachable!("Newton iteration for the semisimple part converges quadratically")
}

#[cfg(test)]
mod tests;
