//! Exact linear algebra over the rationals.
//!
//! Subspaces are stored by their reduced row echelon basis, so two subspaces
//! are equal exactly when their stored bases are equal.

mod matrix;
mod poly;
mod subspace;

pub use matrix::{rref, rref_with_pivots, Matrix};
pub use poly::{minimal_polynomial, Poly};
pub use subspace::{contains, intersect, kernel, perp, solve, sum, AffineSolution, BilinearForm, Subspace};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number, normalized after every operation.
pub type Rational = BigRational;

/// Coordinate vector in some ambient space.
pub type Vector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
            let d: BigInt = d.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(t.parse().map_err(|_| format!("bad rational {s:?}"))?),
    };
    Ok(parsed)
}

pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub mod vector {
    //! Small helpers on coordinate vectors.
    use super::{Rational, Vector};
    use num_traits::Zero;

    pub fn zero(n: usize) -> Vector {
        vec![Rational::zero(); n]
    }

    pub fn unit(n: usize, i: usize) -> Vector {
        let mut v = zero(n);
        v[i] = super::rat(1);
        v
    }

    pub fn is_zero(v: &[Rational]) -> bool {
        v.iter().all(Zero::is_zero)
    }

    pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(a: &[Rational]) -> Vector {
        a.iter().map(|x| -x).collect()
    }

    pub fn scale(c: &Rational, a: &[Rational]) -> Vector {
        if c.is_zero() {
            return zero(a.len());
        }
        a.iter().map(|x| c * x).collect()
    }

    /// `acc += c * v`
    pub fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
        if c.is_zero() {
            return;
        }
        for (a, x) in acc.iter_mut().zip(v) {
            if !x.is_zero() {
                *a += c * x;
            }
        }
    }

    pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (x, y) in a.iter().zip(b) {
            if !x.is_zero() && !y.is_zero() {
                s += x * y;
            }
        }
        s
    }

    /// Linear combination `Σ c_i v_i` of equally long vectors.
    pub fn combine(n: usize, coeffs: &[Rational], vs: &[Vector]) -> Vector {
        let mut out = zero(n);
        for (c, v) in coeffs.iter().zip(vs) {
            axpy(&mut out, c, v);
        }
        out
    }
}

/// Least common multiple of the denominators, used to clear fractions.
pub(crate) fn denominator_lcm<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Eigenspaces of a matrix that is diagonalizable over the rationals,
/// sorted by eigenvalue. `None` if the minimal polynomial is not a product
/// of distinct rational linear factors.
pub fn split_eigenspaces(m: &Matrix) -> Option<Vec<(Rational, Subspace)>> {
    let minpoly = minimal_polynomial(m);
    let (mut roots, rest) = minpoly.rational_roots();
    if rest.degree() != Some(0) || !minpoly.is_squarefree() {
        return None;
    }
    roots.sort();
    let n = m.rows();
    Some(
        roots
            .into_iter()
            .map(|r| {
                let shifted = m.sub(&Matrix::identity(n).scale(&r));
                (r, kernel(&shifted))
            })
            .collect(),
    )
}
