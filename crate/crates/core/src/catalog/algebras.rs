use crate::liealg::LieAlgebra;
use crate::ratmat::{rat, vector, Matrix};

fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = rat(1);
    m
}

fn index_label(prefix: &str, n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("{prefix}{}{}", i + 1, j + 1)
    } else {
        format!("{prefix}{}_{}", i + 1, j + 1)
    }
}

/// `gl(n)` in the basis of elementary matrices `E_ij`, row-major.
pub fn gl(n: usize) -> LieAlgebra {
    assert!(n >= 1, "gl(n) needs n >= 1");
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            labels.push(index_label("E", n, i, j));
            mats.push(elementary(n, i, j));
        }
    }
    LieAlgebra::from_matrices(labels, mats).expect("gl(n) is a Lie algebra")
}

/// `sl(n)`: off-diagonal `E_ij` followed by `H_i = E_ii - E_(i+1)(i+1)`.
pub fn sl(n: usize) -> LieAlgebra {
    assert!(n >= 2, "sl(n) needs n >= 2");
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                labels.push(index_label("E", n, i, j));
                mats.push(elementary(n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        labels.push(format!("H{}", i + 1));
        mats.push(elementary(n, i, i).sub(&elementary(n, i + 1, i + 1)));
    }
    LieAlgebra::from_matrices(labels, mats).expect("sl(n) is a Lie algebra")
}

/// Coordinates of the defining space of `so(p, q)`: `e_1..e_q`, `f_1..f_q`
/// spanning hyperbolic planes, then `w_1..w_(p-q)` spanning a positive
/// definite complement.
pub fn orthogonal_coordinate_names(p: usize, q: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=q).map(|i| format!("e{i}")).collect();
    names.extend((1..=q).map(|i| format!("f{i}")));
    names.extend((1..=p - q).map(|i| format!("w{i}")));
    names
}

/// Gram matrix `S` of the defining form of `so(p, q)`: `B(e_i, f_j) = δ_ij`,
/// `B(w_a, w_b) = δ_ab`, everything else zero. Signature `(p, q)`.
pub fn orthogonal_gram(p: usize, q: usize) -> Matrix {
    let m = p + q;
    let mut s = Matrix::zeros(m, m);
    for i in 0..q {
        s[(i, q + i)] = rat(1);
        s[(q + i, i)] = rat(1);
    }
    for a in 2 * q..m {
        s[(a, a)] = rat(1);
    }
    s
}

/// `so(p, q)` for `p ≥ q ≥ 1`, in the basis `S (E_ab - E_ba)`, `a < b`,
/// which preserves the hyperbolic form above. The diagonal elements
/// `E_(e_i e_i) - E_(f_i f_i)` are (up to sign) basis vectors, so the
/// standard Cartan is split.
pub fn so(p: usize, q: usize) -> LieAlgebra {
    assert!(p >= q && q >= 1, "so(p, q) needs p >= q >= 1");
    let m = p + q;
    let s = orthogonal_gram(p, q);
    let names = orthogonal_coordinate_names(p, q);
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let skew = elementary(m, a, b).sub(&elementary(m, b, a));
            labels.push(format!("{}^{}", names[a], names[b]));
            mats.push(s.mul(&skew));
        }
    }
    LieAlgebra::from_matrices(labels, mats).expect("so(p, q) is a Lie algebra")
}

/// The 2-dimensional nonabelian algebra `[e1, e2] = e2`, realized by its
/// adjoint representation.
pub fn two_dim_nonabelian() -> LieAlgebra {
    let mut structure = vec![vec![vector::zero(2); 2]; 2];
    structure[0][1] = vec![rat(0), rat(1)];
    structure[1][0] = vec![rat(0), rat(-1)];
    let g = LieAlgebra::new(vec!["e1".into(), "e2".into()], structure).expect("valid structure");
    let ads = (0..2).map(|i| g.ad_basis(i).clone()).collect();
    g.with_realization(ads).expect("adjoint representation is a realization")
}

/// Abelian algebra of the given dimension realized by diagonal matrices.
pub fn abelian(n: usize) -> LieAlgebra {
    let labels = (1..=n).map(|i| format!("t{i}")).collect();
    let mats = (0..n).map(|i| elementary(n, i, i)).collect();
    LieAlgebra::from_matrices(labels, mats).expect("diagonal matrices commute")
}

