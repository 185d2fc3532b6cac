//! Parabolic subalgebras of a reductive algebra carrying a nondegenerate
//! trace form: recognition, nilradicals, Levi quotients, grading lifts and
//! the relations between pairs.

mod types;
mod wedge;

pub use types::TypeMap;
pub use wedge::{lowest_weight_line, wedge_budget, LowestWeightLine, WEDGE_BUDGET_ENV};

use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::error::{ensure, Error, Result};
use crate::liealg::{Element, Filtration, LieAlgebra, Quotient};
use crate::ratmat::{rat, solve, split_eigenspaces, vector, Matrix, Rational, Subspace, Vector};

/// Outcome of the recognizer: the four equivalent conditions evaluated
/// independently, with the subspaces they were computed from.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub perp: Subspace,
    pub normalizer: Subspace,
    /// Largest ideal of `p` inside the nilpotent cone of `g`, when the
    /// trace-form construction decides it.
    pub nil_in_g: Option<Subspace>,
    /// Nilpotent radical of `p` as an algebra.
    pub nil: Subspace,
    /// `p^⊥ ⊆ p` and `n_g(p) = p`.
    pub perp_and_normalizer: bool,
    /// `p = n_g(nil_g(p))`; `None` if `nil_g(p)` was not decided.
    pub normalizes_nil: Option<bool>,
    /// `p^⊥ = nil_g(p) = nil(p)`.
    pub perp_is_nil: bool,
    /// `dim g - dim p = dim nil(p) - dim nil(g)`.
    pub dimension_identity: bool,
}

impl Certificate {
    pub fn is_parabolic(&self) -> bool {
        self.perp_and_normalizer
    }

    /// Whether every decided condition agrees with the first one.
    pub fn is_consistent(&self) -> bool {
        let v = self.perp_and_normalizer;
        self.normalizes_nil.is_none_or(|b| b == v) && self.perp_is_nil == v && self.dimension_identity == v
    }

    /// The decided conditions in order (4), (5), (6), (7).
    pub fn conditions(&self) -> [Option<bool>; 4] {
        [
            Some(self.perp_and_normalizer),
            self.normalizes_nil,
            Some(self.perp_is_nil),
            Some(self.dimension_identity),
        ]
    }
}

/// Evaluates the parabolic conditions for a subalgebra of `g`. Fails with
/// an internal error when they disagree.
pub fn is_parabolic(g: &LieAlgebra, p: &Subspace) -> Result<Certificate> {
    if p.ambient() != g.dim() {
        return Err(Error::DimensionMismatch("subspace lives in a different algebra".into()));
    }
    if !g.is_subalgebra(p) {
        return Err(Error::NotSubalgebra);
    }
    let form = g.admissible_form()?;
    let perp = p.perp(form);
    let normalizer = g.normalizer(p);
    let perp_and_normalizer = p.contains(&perp) && normalizer == *p;

    let nil = g.nilpotent_radical(p)?;
    // nil(p) ⊆ nil_g(p) ⊆ p^⊥ always, so equality of the ends decides the middle
    let nil_in_g = if nil == perp { Some(perp.clone()) } else { g.nilpotent_cone_ideal(p) };
    let normalizes_nil = nil_in_g.as_ref().map(|m| g.normalizer(m) == *p);
    let perp_is_nil = perp == nil;
    // nil(g) = 0 because the form is nondegenerate
    let dimension_identity = g.dim() - p.dim() == nil.dim();

    let cert = Certificate {
        perp,
        normalizer,
        nil_in_g,
        nil,
        perp_and_normalizer,
        normalizes_nil,
        perp_is_nil,
        dimension_identity,
    };
    ensure(cert.is_consistent(), || format!("parabolic conditions disagree: {:?}", cert.conditions()))?;
    Ok(cert)
}

/// An element `ξ` acting by `j` on `f(j)/f(j-1)`, together with the
/// subspace its alternatives differ by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingLift {
    pub xi: Element,
    /// `ξ + torsor` is the full solution set.
    pub torsor: Subspace,
}

#[derive(Clone)]
struct Levi {
    quotient: Quotient,
}

/// A parabolic subalgebra with its nilradical and induced filtration.
/// The Levi quotient is built on first use.
#[derive(Clone)]
pub struct ParabolicData {
    ambient: Arc<LieAlgebra>,
    space: Subspace,
    nilradical: Subspace,
    filtration: Filtration,
    levi: Arc<OnceLock<std::result::Result<Levi, Error>>>,
}

impl std::fmt::Debug for ParabolicData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ParabolicData")
            .field("dim", &self.space.dim())
            .field("space", &self.space)
            .field("nilradical", &self.nilradical)
            .finish()
    }
}

impl PartialEq for ParabolicData {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && (Arc::ptr_eq(&self.ambient, &other.ambient) || *self.ambient == *other.ambient)
    }
}

impl ParabolicData {
    pub fn new(g: &Arc<LieAlgebra>, space: Subspace) -> Result<Self> {
        let cert = is_parabolic(g, &space)?;
        if !cert.is_parabolic() {
            return Err(Error::NotParabolic(if space.contains(&cert.perp) {
                "subalgebra is not self-normalizing".into()
            } else {
                "trace-form perp is not contained in the subalgebra".into()
            }));
        }
        let filtration = g.induced_filtration(&cert.perp, &space)?;
        Ok(ParabolicData {
            ambient: Arc::clone(g),
            space,
            nilradical: cert.perp,
            filtration,
            levi: Arc::new(OnceLock::new()),
        })
    }

    /// `g` as a parabolic subalgebra of itself.
    pub fn whole(g: &Arc<LieAlgebra>) -> Result<Self> {
        ParabolicData::new(g, g.full())
    }

    pub fn ambient(&self) -> &Arc<LieAlgebra> {
        &self.ambient
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn nilradical(&self) -> &Subspace {
        &self.nilradical
    }

    pub fn filtration(&self) -> &Filtration {
        &self.filtration
    }

    fn levi(&self) -> Result<&Levi> {
        self.levi
            .get_or_init(|| {
                Quotient::new(&self.ambient, &self.space, &self.nilradical).map(|quotient| Levi { quotient })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `p / nil(p)` with projection and section.
    pub fn levi_quotient(&self) -> Result<&Quotient> {
        Ok(&self.levi()?.quotient)
    }

    pub fn levi_algebra(&self) -> Result<Arc<LieAlgebra>> {
        Ok(Arc::clone(&self.levi()?.quotient.algebra))
    }

    /// Certified minimality: the induced form on the derived Levi quotient
    /// is definite, so the Levi quotient has no nonzero nilpotent elements
    /// and hence no proper parabolic subalgebras.
    pub fn is_certified_minimal(&self) -> Result<bool> {
        let q0 = self.levi_algebra()?;
        let derived = q0.derived_algebra();
        if derived.is_zero() {
            return Ok(true);
        }
        Ok(q0.trace_form()?.restrict(&derived).definite_sign().is_some())
    }

    pub fn contains(&self, other: &ParabolicData) -> bool {
        self.space.contains(&other.space)
    }

    /// Solves for lifts of the grading element inside `constraint ∩ [g,g]`.
    pub fn grading_lift(&self, constraint: &Subspace) -> Result<GradingLift> {
        if !self.space.contains(constraint) {
            return Err(Error::Precondition("constraint must lie in the parabolic".into()));
        }
        let g = &self.ambient;
        let c = constraint.intersect(&g.derived_algebra());
        let m = c.dim();
        let mut rows: Vec<Vector> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        for j in self.filtration.indices() {
            let ann = self.filtration.level(j - 1).annihilator();
            if ann.is_zero() {
                continue;
            }
            let jr = rat(j as i64);
            for x in self.filtration.level(j).basis() {
                let images: Vec<Vector> = c.basis().iter().map(|s| g.bracket(s, x)).collect();
                for w in ann.basis() {
                    rows.push(images.iter().map(|im| vector::dot(w, im)).collect());
                    rhs.push(&jr * vector::dot(w, x));
                }
            }
        }
        let a = Matrix::from_rows_with_cols(rows, m);
        let sol = solve(&a, &rhs).ok_or(Error::NoLift)?;
        let xi = c.element(&sol.particular);
        let torsor = Subspace::span(g.dim(), sol.kernel.basis().iter().map(|k| c.element(k)));
        Ok(GradingLift { xi, torsor })
    }

    /// Whether `ξ ∈ p ∩ [g,g]` acts by `j` on every `f(j)/f(j-1)`.
    pub fn is_grading_lift(&self, xi: &[Rational]) -> bool {
        let g = &self.ambient;
        if !self.space.contains_vector(xi) || !g.derived_algebra().contains_vector(xi) {
            return false;
        }
        self.filtration.indices().all(|j| {
            let lower = self.filtration.level(j - 1);
            self.filtration.level(j).basis().iter().all(|x| {
                let d = vector::sub(&g.bracket(xi, x), &vector::scale(&rat(j as i64), x));
                lower.contains_vector(&d)
            })
        })
    }

    /// Levi subalgebra `c_g(ξ)` determined by a lift.
    pub fn levi_subalgebra(&self, xi: &[Rational]) -> Result<Subspace> {
        if !self.is_grading_lift(xi) {
            return Err(Error::Precondition("element is not a grading lift".into()));
        }
        Ok(self.ambient.centralizer(&Subspace::span(self.ambient.dim(), [xi.to_vec()])))
    }

    /// Opposite parabolic: the nonnegative eigenspaces of `ad ξ`.
    pub fn opposite(&self, xi: &[Rational]) -> Result<ParabolicData> {
        if !self.is_grading_lift(xi) {
            return Err(Error::Precondition("element is not a grading lift".into()));
        }
        let g = &self.ambient;
        let eig = integer_eigenspaces(g, xi)?;
        let space = eig
            .iter()
            .filter(|(l, _)| *l >= 0)
            .fold(Subspace::zero(g.dim()), |acc, (_, s)| acc.sum(s));
        let op = ParabolicData::new(g, space)?;
        let form = g.admissible_form()?;
        let common = self.space.intersect(&op.space);
        ensure(
            common.dim() + self.nilradical.dim() == self.dim() && common.dim() + op.nilradical.dim() == op.dim(),
            || "p ∩ opposite is not a common Levi".into(),
        )?;
        ensure(self.space.sum(&op.space.perp(form)).is_full(), || "p + opposite^⊥ ≠ g".into())?;
        ensure(self.nilradical.intersect(&op.space).is_zero(), || "p^⊥ ∩ opposite ≠ 0".into())?;
        Ok(op)
    }

    /// Each contains the other's nilradical.
    pub fn is_costandard(&self, q: &ParabolicData) -> Result<bool> {
        self.check_same_ambient(q)?;
        let costd = q.space.contains(&self.nilradical);
        if costd {
            let both = is_parabolic(&self.ambient, &self.space.intersect(&q.space))?;
            ensure(both.is_parabolic(), || "costandard pair with non-parabolic intersection".into())?;
            ensure(self.space.contains(&q.nilradical), || "costandardness is not symmetric".into())?;
        }
        Ok(costd)
    }

    pub fn is_weakly_opposite(&self, q: &ParabolicData) -> Result<bool> {
        self.check_same_ambient(q)?;
        Ok(self.space.sum(&q.space).is_full())
    }

    pub fn is_opposite(&self, q: &ParabolicData) -> Result<bool> {
        self.check_same_ambient(q)?;
        Ok(self.space.intersect(&q.nilradical).is_zero() && self.nilradical.intersect(&q.space).is_zero())
    }

    /// Parabolic projection of `p` along `self`: `r = p∩q + nil(q)` in `g`
    /// and its image in the Levi quotient.
    pub fn project(&self, p: &ParabolicData) -> Result<Projection> {
        self.check_same_ambient(p)?;
        let q = self;
        let r = p.space.intersect(&q.space).sum(&q.nilradical);
        let in_g = ParabolicData::new(&q.ambient, r)
            .map_err(|e| Error::Internal(format!("p ∩ q + nil(q) is not parabolic: {e}")))?;
        let expected = p.nilradical.intersect(&q.space).sum(&q.nilradical);
        ensure(in_g.nilradical == expected, || "nil(r) ≠ nil(p) ∩ q + nil(q)".into())?;
        let levi = q.levi_quotient()?;
        let image = levi.project_space(&in_g.space)?;
        let in_levi = ParabolicData::new(&levi.algebra, image)
            .map_err(|e| Error::Internal(format!("projection is not parabolic in the Levi quotient: {e}")))?;
        Ok(Projection { in_g, in_levi })
    }

    /// Preimage in `g` of a parabolic of the Levi quotient.
    pub fn inflate(&self, p0: &ParabolicData) -> Result<ParabolicData> {
        let levi = self.levi_quotient()?;
        if p0.space.ambient() != levi.dim() {
            return Err(Error::DimensionMismatch("parabolic does not live in the Levi quotient".into()));
        }
        ParabolicData::new(&self.ambient, levi.preimage(&p0.space))
    }

    /// Image of a subspace of `p` in the Levi quotient.
    pub fn project_subspace(&self, s: &Subspace) -> Result<Subspace> {
        self.levi_quotient()?.project_space(s)
    }

    /// The automorphism `A = exp(ad z_m)···exp(ad z_1)`, `z_k ∈ nil(p)`,
    /// with `A ξ_from = ξ_to`, for two lifts of this parabolic.
    pub fn conjugator(&self, from: &[Rational], to: &[Rational]) -> Result<Matrix> {
        if !self.is_grading_lift(from) || !self.is_grading_lift(to) {
            return Err(Error::Precondition("both elements must be grading lifts".into()));
        }
        let g = &self.ambient;
        let n = g.dim();
        let mut total = Matrix::identity(n);
        let mut current = from.to_vec();
        for k in 1..=(n as i64 + 1) {
            let diff = vector::sub(to, &current);
            if vector::is_zero(&diff) {
                return Ok(total);
            }
            let level = self.filtration.level(-k as i32);
            ensure(level.contains_vector(&diff), || format!("lifts differ outside f({})", -k))?;
            // component of diff in the (-k)-eigenspace of ad(current)
            let eig = integer_eigenspaces(g, &current)?;
            let mut parts = Vec::new();
            let mut basis = Vec::new();
            for (l, s) in &eig {
                for b in s.basis() {
                    parts.push(*l);
                    basis.push(b.clone());
                }
            }
            let c = Matrix::from_columns(&basis, n)
                .inverse()
                .ok_or_else(|| Error::Internal("eigenvectors do not form a basis".into()))?
                .mul_vec(&diff);
            let mut z = vector::zero(n);
            for (i, l) in parts.iter().enumerate() {
                if *l == -k && !c[i].is_zero() {
                    vector::axpy(&mut z, &c[i], &basis[i]);
                }
            }
            let z = vector::scale(&rat(k).recip(), &z);
            let step = g.exp_ad(&z)?;
            current = step.mul_vec(&current);
            total = step.mul(&total);
        }
        Err(Error::Internal("conjugation of lifts did not terminate".into()))
    }

    fn check_same_ambient(&self, other: &ParabolicData) -> Result<()> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) || *self.ambient == *other.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch("parabolics live in different algebras".into()))
        }
    }
}

/// Result of projecting `p` along `q`.
#[derive(Clone, Debug)]
pub struct Projection {
    /// `p ∩ q + nil(q)`.
    pub in_g: ParabolicData,
    /// Its image in `q / nil(q)`.
    pub in_levi: ParabolicData,
}

/// Eigenspaces of `ad ξ` when they are all integral.
pub fn integer_eigenspaces(g: &LieAlgebra, xi: &[Rational]) -> Result<Vec<(i64, Subspace)>> {
    let eig = split_eigenspaces(&g.ad(xi)).ok_or_else(|| Error::NotSplit("ad ξ is not split semisimple".into()))?;
    eig.into_iter()
        .map(|(l, s)| {
            if !l.is_integer() {
                return Err(Error::NotSplit(format!("eigenvalue {l} of ad ξ is not an integer")));
            }
            let v: i64 = l.to_integer().try_into().map_err(|_| Error::NotSplit("eigenvalue too large".into()))?;
            Ok((v, s))
        })
        .collect()
}

/// Lifts `ξ_p, ξ_q` of both grading elements inside `p ∩ q` that commute.
pub fn compatible_lifts(p: &ParabolicData, q: &ParabolicData) -> Result<(GradingLift, GradingLift)> {
    p.check_same_ambient(q)?;
    let g = &p.ambient;
    let both = p.space.intersect(&q.space);
    let xi_q = q
        .grading_lift(&both)
        .map_err(|e| Error::Internal(format!("no lift of q inside p ∩ q: {e}")))?;
    let commuting = both.intersect(&g.centralizer(&Subspace::span(g.dim(), [xi_q.xi.clone()])));
    let xi_p = p
        .grading_lift(&commuting)
        .map_err(|e| Error::Internal(format!("no lift of p commuting with the lift of q: {e}")))?;
    ensure(vector::is_zero(&g.bracket(&xi_p.xi, &xi_q.xi)), || "compatible lifts do not commute".into())?;
    Ok((xi_p, xi_q))
}

/// A Levi subalgebra common to `p` and `q`: the joint centralizer of
/// compatible lifts.
pub fn common_levi(p: &ParabolicData, q: &ParabolicData) -> Result<Subspace> {
    let g = &p.ambient;
    let (xi_p, xi_q) = compatible_lifts(p, q)?;
    let n = g.dim();
    let l = g
        .centralizer(&Subspace::span(n, [xi_p.xi.clone()]))
        .intersect(&g.centralizer(&Subspace::span(n, [xi_q.xi.clone()])));
    ensure(p.space.intersect(&q.space).contains(&l), || "common Levi not inside p ∩ q".into())?;
    ensure(g.is_subalgebra(&l), || "common Levi is not a subalgebra".into())?;
    for r in [p, q] {
        if r.is_certified_minimal()? {
            ensure(l.dim() + r.nilradical.dim() == r.dim() && l.sum(&r.nilradical) == r.space, || {
                "joint centralizer is not a Levi complement of a minimal parabolic".into()
            })?;
        }
    }
    Ok(l)
}

#[cfg(test)]
mod tests;
