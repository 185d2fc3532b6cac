use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::echelon;
use super::{denominator_lcm, vector, Matrix, Rational, Vector};

/// Univariate rational polynomial, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Rational::one()] }
    }

    /// `x - r`
    pub fn linear(r: &Rational) -> Self {
        Poly { coeffs: vec![-r.clone(), Rational::one()] }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading().recip();
        Poly::new(self.coeffs.iter().map(|c| c * &l).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vector::zero(self.coeffs.len() + o.coeffs.len() - 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vector::zero(rem.len() - dd);
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        self.mul(o).div_rem(&self.gcd(o)).0.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// `p / gcd(p, p')`: same roots, each with multiplicity one.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        m.eval_poly(&self.coeffs)
    }

    /// Rational roots (sorted, without multiplicity) and the monic cofactor
    /// left after dividing them out. Roots are isolated by Sturm sequences
    /// on the lattice `(1/L)ℤ`, `L` the denominator of the monic squarefree
    /// part, which contains every rational root.
    pub fn rational_roots(&self) -> (Vec<Rational>, Poly) {
        let mut rest = self.monic();
        if rest.degree().unwrap_or(0) == 0 {
            return (Vec::new(), rest);
        }
        let s = rest.squarefree_part().monic();
        let l = Rational::from_integer(denominator_lcm(&s.coeffs));
        let bound = s.coeffs.iter().map(Signed::abs).max().expect("nonzero") + Rational::from_integer(2.into());
        let top = (bound * &l).ceil().to_integer();
        let chain = sturm_chain(&s);
        let changes = |y: &BigInt| sign_changes(&chain, &(Rational::from_integer(y.clone()) / &l));
        let mut roots = Vec::new();
        // intervals (lo, hi] of lattice indices, with their sign-change counts
        let mut stack = vec![(-top.clone(), changes(&-top.clone()), top.clone(), changes(&top))];
        while let Some((lo, vlo, hi, vhi)) = stack.pop() {
            if vlo == vhi {
                continue;
            }
            if &hi - &lo == BigInt::one() {
                let x = Rational::from_integer(hi) / &l;
                if s.eval(&x).is_zero() {
                    roots.push(x);
                }
                continue;
            }
            let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
            let vmid = changes(&mid);
            stack.push((lo, vlo, mid.clone(), vmid));
            stack.push((mid, vmid, hi, vhi));
        }
        roots.sort();
        for r in &roots {
            let linear = Poly::linear(r);
            while rest.degree().unwrap_or(0) > 0 && rest.eval(r).is_zero() {
                rest = rest.div_rem(&linear).0;
            }
        }
        (roots, rest.monic())
    }
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.is_zero() {
            return chain;
        }
        chain.push(Poly::new(r.coeffs.iter().map(|c| -c).collect()));
    }
}

fn sign_changes(chain: &[Poly], x: &Rational) -> usize {
    let signs: Vec<bool> = chain.iter().map(|p| p.eval(x)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Minimal polynomial of a square matrix: lcm over the standard basis of the
/// minimal polynomials of the Krylov sequences `e_i, A e_i, A² e_i, ...`.
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let n = m.rows();
    let mut acc = Poly::one();
    // vectors already known to be annihilated by `acc` need no Krylov run
    for i in 0..n {
        let e = vector::unit(n, i);
        if vector::is_zero(&acc.eval_matrix(m).mul_vec(&e)) {
            continue;
        }
        acc = acc.lcm(&vector_minimal_polynomial(m, &e));
    }
    acc
}

fn vector_minimal_polynomial(m: &Matrix, v: &[Rational]) -> Poly {
    let n = m.rows();
    let mut krylov: Vec<Vector> = vec![v.to_vec()];
    loop {
        let next = m.mul_vec(krylov.last().unwrap());
        // solve Σ c_j krylov_j = next
        let k = krylov.len();
        let mut rows: Vec<Vector> = (0..n)
            .map(|r| {
                let mut row: Vector = krylov.iter().map(|kv| kv[r].clone()).collect();
                row.push(next[r].clone());
                row
            })
            .collect();
        let piv = echelon(&mut rows, k + 1);
        if piv.last() != Some(&k) {
            let mut c = vector::zero(k);
            for (row, &p) in rows.iter().zip(&piv) {
                c[p] = row[k].clone();
            }
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            return Poly::new(coeffs);
        }
        krylov.push(next);
    }
}
