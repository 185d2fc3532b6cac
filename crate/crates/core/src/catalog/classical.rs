use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use super::algebras::{gl, orthogonal_gram, sl, so};
use crate::error::{ensure, Error, Result};
use crate::liealg::{Element, LieAlgebra};
use crate::parabolic::ParabolicData;
use crate::ratmat::{kernel, rat, solve, vector, Matrix, Subspace, Vector};
use crate::rootdata::{Frame, RootDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Gl(usize),
    Sl(usize),
    So(usize, usize),
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Gl(n) => write!(f, "gl({n})"),
            Family::Sl(n) => write!(f, "sl({n})"),
            Family::So(p, q) => write!(f, "so({p},{q})"),
        }
    }
}

/// Strictly increasing chain of nonzero proper subspaces of the defining
/// space, optionally required to be isotropic for a symmetric form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagSpec {
    pub dim: usize,
    pub members: Vec<Subspace>,
    pub form: Option<Matrix>,
}

impl FlagSpec {
    pub fn new(dim: usize, members: Vec<Subspace>, form: Option<Matrix>) -> Result<Self> {
        let f = FlagSpec { dim, members, form };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        for (k, w) in self.members.iter().enumerate() {
            if w.ambient() != self.dim {
                return Err(Error::Invalid(format!("flag member {k} lives in the wrong space")));
            }
            if w.is_zero() || w.is_full() {
                return Err(Error::Invalid(format!("flag member {k} is zero or everything")));
            }
            if k > 0 && !(w.contains(&self.members[k - 1]) && w.dim() > self.members[k - 1].dim()) {
                return Err(Error::Invalid(format!("flag member {k} does not strictly contain member {}", k - 1)));
            }
            if let Some(s) = &self.form {
                if !is_isotropic(s, w) {
                    return Err(Error::Invalid(format!("flag member {k} is not isotropic")));
                }
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.members.iter().map(Subspace::dim).collect()
    }
}

/// Whether the form with Gram matrix `s` vanishes identically on `w`.
pub fn is_isotropic(s: &Matrix, w: &Subspace) -> bool {
    w.basis().iter().all(|x| w.basis().iter().all(|y| vector::dot(x, &s.mul_vec(y)).is_zero()))
}

/// A catalog algebra with its defining representation and standard data.
#[derive(Clone, Debug)]
pub struct Classical {
    family: Family,
    algebra: Arc<LieAlgebra>,
    frame: Arc<OnceLock<std::result::Result<Frame, Error>>>,
}

impl Classical {
    pub fn new(family: Family) -> Result<Self> {
        let algebra = match family {
            Family::Gl(n) if n >= 1 => gl(n),
            Family::Sl(n) if n >= 2 => sl(n),
            Family::So(p, q) if p >= q && q >= 1 => so(p, q),
            _ => return Err(Error::Invalid(format!("{family} is not in the catalog"))),
        };
        Ok(Classical { family, algebra: Arc::new(algebra), frame: Arc::new(OnceLock::new()) })
    }

    pub fn gl(n: usize) -> Result<Self> {
        Classical::new(Family::Gl(n))
    }

    pub fn sl(n: usize) -> Result<Self> {
        Classical::new(Family::Sl(n))
    }

    pub fn so(p: usize, q: usize) -> Result<Self> {
        Classical::new(Family::So(p, q))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn defining_dim(&self) -> usize {
        match self.family {
            Family::Gl(n) | Family::Sl(n) => n,
            Family::So(p, q) => p + q,
        }
    }

    /// Gram matrix of the invariant form on the defining space (orthogonal
    /// case only).
    pub fn form(&self) -> Option<Matrix> {
        match self.family {
            Family::So(p, q) => Some(orthogonal_gram(p, q)),
            _ => None,
        }
    }

    /// Number of types of maximal parabolics.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::Gl(n) | Family::Sl(n) => n - 1,
            Family::So(_, q) => q,
        }
    }

    /// The algebra element realized by a matrix, if any.
    pub fn element_of(&self, m: &Matrix) -> Option<Element> {
        let real = self.algebra.realization()?;
        let cols: Vec<Vector> = real.iter().map(|r| r.data().to_vec()).collect();
        let a = Matrix::from_columns(&cols, m.rows() * m.cols());
        solve(&a, m.data()).map(|s| s.particular)
    }

    fn diagonal(&self, entries: &[(usize, i64)]) -> Element {
        let d = self.defining_dim();
        let mut m = Matrix::zeros(d, d);
        for &(i, v) in entries {
            m[(i, i)] = rat(v);
        }
        self.element_of(&m).expect("diagonal element lies in the algebra")
    }

    /// Diagonal Cartan for gl/sl; `E_(e_i e_i) - E_(f_i f_i)` for so.
    pub fn standard_cartan(&self) -> Subspace {
        let n = self.algebra.dim();
        let gens: Vec<Element> = match self.family {
            Family::Gl(d) => (0..d).map(|i| self.diagonal(&[(i, 1)])).collect(),
            Family::Sl(d) => (0..d - 1).map(|i| self.diagonal(&[(i, 1), (i + 1, -1)])).collect(),
            Family::So(_, q) => (0..q).map(|i| self.diagonal(&[(i, 1), (q + i, -1)])).collect(),
        };
        Subspace::span(n, gens)
    }

    pub fn root_datum(&self) -> Result<RootDatum> {
        RootDatum::new(&self.algebra, &self.standard_cartan())
    }

    /// `c_g(a)` for the standard Cartan.
    pub fn standard_minimal_levi(&self) -> Subspace {
        self.algebra.centralizer(&self.standard_cartan())
    }

    /// Standard full flag: `<e_d> ⊂ <e_(d-1), e_d> ⊂ ...` for gl/sl (the
    /// lower triangular Borel), `<e_1> ⊂ <e_1, e_2> ⊂ ...` isotropic for so.
    pub fn standard_flag(&self) -> FlagSpec {
        let d = self.defining_dim();
        let members = match self.family {
            Family::Gl(_) | Family::Sl(_) => {
                (1..d).map(|k| Subspace::span(d, (d - k..d).map(|i| vector::unit(d, i)))).collect()
            }
            Family::So(_, q) => (1..=q).map(|k| Subspace::span(d, (0..k).map(|i| vector::unit(d, i)))).collect(),
        };
        FlagSpec { dim: d, members, form: self.form() }
    }

    pub fn standard_borel(&self) -> Result<ParabolicData> {
        self.flag_stabilizer(&self.standard_flag())
    }

    /// `{x : x·W ⊆ W for every member W}` computed in the realization.
    pub fn flag_stabilizer(&self, f: &FlagSpec) -> Result<ParabolicData> {
        f.validate()?;
        if f.dim != self.defining_dim() {
            return Err(Error::DimensionMismatch("flag lives in a space of the wrong dimension".into()));
        }
        if matches!(self.family, Family::So(..)) && f.form.as_ref() != self.form().as_ref() {
            return Err(Error::Invalid("orthogonal flags must carry the defining form".into()));
        }
        let real = self.algebra.realization().expect("catalog algebras are realized");
        let mut rows: Vec<Vector> = Vec::new();
        for w in &f.members {
            let ann = w.annihilator();
            for x in w.basis() {
                let images: Vec<Vector> = real.iter().map(|r| r.mul_vec(x)).collect();
                for u in ann.basis() {
                    rows.push(images.iter().map(|im| vector::dot(u, im)).collect());
                }
            }
        }
        let n = self.algebra.dim();
        let stab = kernel(&Matrix::from_rows_with_cols(rows, n));
        ParabolicData::new(&self.algebra, stab)
            .map_err(|e| Error::Internal(format!("flag stabilizer is not parabolic: {e}")))
    }

    /// Stabilizer of a single subspace.
    pub fn subspace_stabilizer(&self, w: &Subspace) -> Result<ParabolicData> {
        self.flag_stabilizer(&FlagSpec::new(self.defining_dim(), vec![w.clone()], self.form())?)
    }

    /// Flag of images `nil(p)^j · V`, ascending, keeping isotropic members
    /// in the orthogonal case; verified by recomputing the stabilizer.
    pub fn flag_from_parabolic(&self, p: &ParabolicData) -> Result<FlagSpec> {
        let d = self.defining_dim();
        let nil: Vec<Matrix> = p
            .nilradical()
            .basis()
            .iter()
            .map(|x| self.algebra.represent(x).expect("catalog algebras are realized"))
            .collect();
        let mut chain = Vec::new();
        let mut current = Subspace::full(d);
        loop {
            let next = Subspace::span(d, current.basis().iter().flat_map(|v| nil.iter().map(move |m| m.mul_vec(v))));
            if next.is_zero() {
                break;
            }
            ensure(next.dim() < current.dim(), || "nilradical does not act nilpotently".into())?;
            chain.push(next.clone());
            current = next;
        }
        chain.reverse();
        let form = self.form();
        if let Some(s) = &form {
            chain.retain(|w| is_isotropic(s, w));
        }
        let flag = FlagSpec::new(d, chain, form)?;
        let back = self.flag_stabilizer(&flag)?;
        ensure(back.space() == p.space(), || "flag of the parabolic does not stabilize back to it".into())?;
        Ok(flag)
    }

    /// Frame on the standard Cartan and Borel, labels ordered by the
    /// dimension of the subspace stabilized by the maximal parabolic of
    /// each type and named by it. Falls back to root order when those
    /// dimensions do not separate the types.
    pub fn standard_frame(&self) -> Result<&Frame> {
        self.frame.get_or_init(|| self.build_frame()).as_ref().map_err(Clone::clone)
    }

    fn build_frame(&self) -> Result<Frame> {
        let rd = Arc::new(self.root_datum()?);
        let frame = Frame::new(rd, self.standard_borel()?)?;
        let mut dims = Vec::with_capacity(frame.rank());
        for i in 0..frame.rank() {
            let q = frame.parabolic_from_subset(&BTreeSet::from([i]))?;
            let f = self.flag_from_parabolic(&q)?;
            dims.push(if f.members.len() == 1 { Some(f.members[0].dim()) } else { None });
        }
        let separated = dims.iter().all(Option::is_some)
            && dims.iter().collect::<BTreeSet<_>>().len() == dims.len();
        if !separated {
            return Ok(frame);
        }
        let mut order: Vec<usize> = (0..frame.rank()).collect();
        order.sort_by_key(|&i| dims[i]);
        let names = order.iter().map(|&i| dims[i].expect("checked").to_string()).collect();
        frame.reordered(&order)?.with_names(names)
    }

    /// Dimension of the subspace stabilized by the maximal standard
    /// parabolic of label `i`.
    pub fn label_dim(&self, i: usize) -> Result<usize> {
        let frame = self.standard_frame()?;
        frame.names()[i].parse().map_err(|_| Error::Precondition("labels are not subspace dimensions".into()))
    }
}
