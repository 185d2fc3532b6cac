use num_traits::Zero;

use super::matrix::echelon;
use super::{vector, Matrix, Rational, Vector};

/// Linear subspace of `Q^ambient`, stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| vector::unit(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I: IntoIterator<Item = Vector>>(ambient: usize, vectors: I) -> Self {
        let mut rows: Vec<Vector> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector length does not match ambient"))
            .filter(|v| !vector::is_zero(v))
            .collect();
        let pivots = echelon(&mut rows, ambient);
        Subspace { ambient, basis: rows, pivots }
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        Self::span(m.cols(), m.to_rows())
    }

    /// Image of `self` under a linear map given as a matrix acting on columns.
    pub fn image(&self, map: &Matrix) -> Self {
        assert_eq!(map.cols(), self.ambient);
        Self::span(map.rows(), self.basis.iter().map(|b| map.mul_vec(b)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots; the unit vectors on them span a
    /// complement of this subspace.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Remainder of `v` after eliminating the pivot coordinates. It is zero
    /// exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = r[p].clone();
                for (x, y) in r.iter_mut().zip(row).skip(p) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        vector::is_zero(&self.reduce(v))
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        other.dim() <= self.dim() && other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Element with the given coordinates in the stored basis.
    pub fn element(&self, coords: &[Rational]) -> Vector {
        assert_eq!(coords.len(), self.dim());
        vector::combine(self.ambient, coords, &self.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Zassenhaus intersection: eliminate on `[s | s]` stacked over `[t | 0]`;
    /// rows with vanishing left half span the intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let n = self.ambient;
        if self.is_zero() || other.is_zero() {
            return Self::zero(n);
        }
        if self.contains(other) {
            return other.clone();
        }
        if other.contains(self) {
            return self.clone();
        }
        let mut rows: Vec<Vector> = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.basis {
            let mut r = v.clone();
            r.extend(v.iter().cloned());
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(vector::zero(n));
            rows.push(r);
        }
        echelon(&mut rows, 2 * n);
        Self::span(
            n,
            rows.into_iter().filter(|r| vector::is_zero(&r[..n])).map(|r| r[n..].to_vec()),
        )
    }

    /// Orthogonal complement for the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        kernel(&Matrix::from_rows_with_cols(self.basis.clone(), self.ambient))
    }

    pub fn perp(&self, form: &BilinearForm) -> Subspace {
        assert_eq!(form.dim(), self.ambient);
        let rows: Vec<Vector> = self.basis.iter().map(|b| form.gram.mul_vec(b)).collect();
        kernel(&Matrix::from_rows_with_cols(rows, self.ambient))
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows_with_cols(self.basis.clone(), self.ambient)
    }
}

/// Null space `{x : m x = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let n = m.cols();
    let mut rows = m.to_rows();
    let pivots = echelon(&mut rows, n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..n).filter(|&c| !is_pivot[c]).map(|f| {
        let mut v = vector::unit(n, f);
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -row[f].clone();
        }
        v
    });
    Subspace::span(n, vectors)
}

pub fn sum(s: &Subspace, t: &Subspace) -> Subspace {
    s.sum(t)
}

pub fn intersect(s: &Subspace, t: &Subspace) -> Subspace {
    s.intersect(t)
}

pub fn contains(s: &Subspace, t: &Subspace) -> bool {
    s.contains(t)
}

pub fn perp(s: &Subspace, form: &BilinearForm) -> Subspace {
    s.perp(form)
}

/// Solution set of a linear system: a particular solution plus the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vector,
    pub kernel: Subspace,
}

impl AffineSolution {
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.kernel.contains_vector(&vector::sub(x, &self.particular))
    }
}

/// Solves `a x = b`; `None` when inconsistent. The particular solution has
/// zeros on all free coordinates.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<AffineSolution> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let mut rows: Vec<Vector> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = echelon(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut particular = vector::zero(n);
    for (row, &p) in rows.iter().zip(&pivots) {
        particular[p] = row[n].clone();
    }
    Some(AffineSolution { particular, kernel: kernel(a) })
}

/// Bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Self {
        assert!(gram.is_square(), "Gram matrix must be square");
        BilinearForm { gram }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        vector::dot(x, &self.gram.mul_vec(y))
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    pub fn radical(&self) -> Subspace {
        kernel(&self.gram)
    }

    /// Gram matrix of the restriction to a subspace, in its stored basis.
    pub fn restrict(&self, s: &Subspace) -> BilinearForm {
        let b = s.basis();
        let g: Vec<Vector> = b.iter().map(|x| self.gram.mul_vec(x)).collect();
        BilinearForm::new(Matrix::from_fn(b.len(), b.len(), |i, j| vector::dot(&b[i], &g[j])))
    }

    /// Pullback along a linear map `x ↦ m x`.
    pub fn pullback(&self, m: &Matrix) -> BilinearForm {
        BilinearForm::new(m.transpose().mul(&self.gram).mul(m))
    }

    /// Symmetric definiteness test by exact symmetric elimination: `Some(1)`
    /// for positive definite, `Some(-1)` for negative definite, `None`
    /// otherwise. The empty form counts as positive definite.
    pub fn definite_sign(&self) -> Option<i8> {
        let n = self.dim();
        let mut a = self.gram.clone();
        let mut sign = 0i8;
        for k in 0..n {
            let d = a[(k, k)].clone();
            if d.is_zero() {
                return None;
            }
            let s = if d > Rational::zero() { 1 } else { -1 };
            if sign == 0 {
                sign = s;
            } else if sign != s {
                return None;
            }
            for i in k + 1..n {
                let f = &a[(i, k)] / &d;
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let t = &f * &a[(k, j)];
                    a[(i, j)] -= t;
                }
            }
        }
        Some(if sign == 0 { 1 } else { sign })
    }
}
