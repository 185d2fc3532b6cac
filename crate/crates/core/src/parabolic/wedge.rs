//! The line `Λ^d nil(q)` in the `d`-th exterior power of the adjoint
//! representation, and its stabilizer.

use num_traits::Zero;

use super::ParabolicData;
use crate::error::{Error, Result};
use crate::ratmat::{kernel, rat, Matrix, Rational, Subspace, Vector};

/// Environment variable overriding [`DEFAULT_WEDGE_BUDGET`].
pub const WEDGE_BUDGET_ENV: &str = "PARABOLICA_WEDGE_BUDGET";

/// Largest exterior power dimension attempted by default.
pub const DEFAULT_WEDGE_BUDGET: u128 = 512;

pub fn wedge_budget() -> u128 {
    std::env::var(WEDGE_BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_WEDGE_BUDGET)
}

#[derive(Clone, Debug)]
pub struct LowestWeightLine {
    /// `d = dim nil(q)`.
    pub degree: usize,
    /// `binomial(dim g, d)`.
    pub wedge_dim: usize,
    /// Dimension of the `g`-submodule generated by the line.
    pub module_dim: usize,
    /// Plücker coordinates of the line, indexed by increasing `d`-subsets.
    pub line: Vector,
    /// `{x : ad_Λ(x) L ⊆ L}`.
    pub stabilizer: Subspace,
    pub stabilizer_matches: bool,
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn subsets(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < d - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, d, cur, out);
            cur.pop();
        }
    }
    rec(0, n, d, &mut cur, &mut out);
    out
}

/// Action of a matrix on `Λ^d` in the basis of increasing subsets.
fn wedge_action(a: &Matrix, sets: &[Vec<usize>], index: &std::collections::HashMap<Vec<usize>, usize>) -> Matrix {
    let n = a.rows();
    let big = sets.len();
    let mut out = Matrix::zeros(big, big);
    for (col, s) in sets.iter().enumerate() {
        for pos in 0..s.len() {
            for t in 0..n {
                let c = &a[(t, s[pos])];
                if c.is_zero() || (t != s[pos] && s.contains(&t)) {
                    continue;
                }
                let mut new = s.clone();
                new[pos] = t;
                // sort with sign
                let mut sign = 1i64;
                let mut v = new;
                for i in 0..v.len() {
                    for j in 0..v.len() - 1 - i {
                        if v[j] > v[j + 1] {
                            v.swap(j, j + 1);
                            sign = -sign;
                        }
                    }
                }
                let row = index[&v];
                let add = c * rat(sign);
                out[(row, col)] += add;
            }
        }
    }
    out
}

fn determinant(m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut a = m;
    let mut det = rat(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            let f = &a[i][k] / &pivot;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

/// Builds `Λ^d ad`, the line of a nilradical basis, its stabilizer and the
/// cyclic submodule it generates. Errors when `binomial(dim g, d)` exceeds
/// `budget`.
pub fn lowest_weight_line(q: &ParabolicData, budget: u128) -> Result<LowestWeightLine> {
    let g = q.ambient();
    let n = g.dim();
    let d = q.nilradical().dim();
    let needed = binomial(n, d);
    if needed > budget {
        return Err(Error::Budget { needed, budget });
    }
    let sets = subsets(n, d);
    let index: std::collections::HashMap<Vec<usize>, usize> =
        sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let basis = q.nilradical().basis();
    let line: Vector = sets
        .iter()
        .map(|s| determinant(basis.iter().map(|v| s.iter().map(|&j| v[j].clone()).collect()).collect()))
        .collect();

    let actions: Vec<Matrix> = (0..n).map(|k| wedge_action(g.ad_basis(k), &sets, &index)).collect();
    let big = sets.len();
    // Σ c_k A_k L - t L = 0, unknowns (c, t)
    let images: Vec<Vector> = actions.iter().map(|a| a.mul_vec(&line)).collect();
    let mut cols = images.clone();
    cols.push(line.iter().map(|x| -x).collect());
    let system = Matrix::from_columns(&cols, big);
    let sol = kernel(&system);
    let stabilizer = Subspace::span(n, sol.basis().iter().map(|v| v[..n].to_vec()));

    // cyclic submodule generated by the line
    let mut module = Subspace::span(big, [line.clone()]);
    let mut frontier = vec![line.clone()];
    while let Some(v) = frontier.pop() {
        for a in &actions {
            let w = a.mul_vec(&v);
            if !module.contains_vector(&w) {
                module = module.sum(&Subspace::span(big, [w.clone()]));
                frontier.push(w);
            }
        }
    }

    Ok(LowestWeightLine {
        degree: d,
        wedge_dim: big,
        module_dim: module.dim(),
        line,
        stabilizer_matches: stabilizer == *q.space(),
        stabilizer,
    })
}
