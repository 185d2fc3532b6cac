//! Restricted root data of split Cartan subspaces.

mod frame;

pub use frame::{Frame, Located};

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::error::{ensure, Error, Result};
use crate::liealg::{Element, LieAlgebra};
use crate::ratmat::{is_integer, rat, split_eigenspaces, vector, Matrix, Rational, Subspace, Vector};

/// Root space decomposition of `g` with respect to a split Cartan `a`.
/// Roots are stored as their values on the stored basis of `a`, sorted in
/// decreasing lexicographic order.
#[derive(Clone, Debug)]
pub struct RootDatum {
    ambient: Arc<LieAlgebra>,
    cartan: Subspace,
    levi: Subspace,
    roots: Vec<Vector>,
    root_spaces: Vec<Subspace>,
    coroots: Vec<Element>,
    negatives: Vec<usize>,
    index: HashMap<Vector, usize>,
    derived_cartan: Subspace,
}

impl RootDatum {
    pub fn new(g: &Arc<LieAlgebra>, a: &Subspace) -> Result<Self> {
        if a.ambient() != g.dim() {
            return Err(Error::DimensionMismatch("Cartan lives in a different algebra".into()));
        }
        if !g.is_abelian(a) {
            return Err(Error::Precondition("Cartan subspace is not abelian".into()));
        }
        let n = g.dim();
        // simultaneous eigenspaces, refined one basis vector at a time
        let mut pieces: Vec<(Vector, Subspace)> = vec![(Vec::new(), g.full())];
        for (k, h) in a.basis().iter().enumerate() {
            let eig = split_eigenspaces(&g.ad(h))
                .ok_or_else(|| Error::NotSplit(format!("ad of Cartan basis vector {k} is not split semisimple")))?;
            let mut next = Vec::new();
            for (f, v) in &pieces {
                for (lambda, e) in &eig {
                    let w = v.intersect(e);
                    if !w.is_zero() {
                        let mut f2 = f.clone();
                        f2.push(lambda.clone());
                        next.push((f2, w));
                    }
                }
            }
            pieces = next;
        }
        let total: usize = pieces.iter().map(|(_, s)| s.dim()).sum();
        ensure(total == n, || "eigenspaces do not span the algebra".into())?;

        let zero = vector::zero(a.dim());
        let mut levi = Subspace::zero(n);
        let mut rs: Vec<(Vector, Subspace)> = Vec::new();
        for (f, s) in pieces {
            if f == zero {
                levi = s;
            } else {
                rs.push((f, s));
            }
        }
        rs.sort_by(|x, y| y.0.cmp(&x.0));
        ensure(levi == g.centralizer(a), || "zero weight space differs from the centralizer of a".into())?;

        let roots: Vec<Vector> = rs.iter().map(|(f, _)| f.clone()).collect();
        let root_spaces: Vec<Subspace> = rs.into_iter().map(|(_, s)| s).collect();
        let index: HashMap<Vector, usize> = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let negatives = roots
            .iter()
            .map(|r| {
                index
                    .get(&vector::neg(r))
                    .copied()
                    .ok_or_else(|| Error::Internal("root system not symmetric".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let derived_cartan = a.intersect(&g.derived_algebra());

        let mut rd = RootDatum {
            ambient: Arc::clone(g),
            cartan: a.clone(),
            levi,
            roots,
            root_spaces,
            coroots: Vec::new(),
            negatives,
            index,
            derived_cartan,
        };
        rd.coroots = (0..rd.roots.len()).map(|i| rd.compute_coroot(i)).collect::<Result<_>>()?;
        for i in 0..rd.roots.len() {
            for j in 0..rd.roots.len() {
                let p = rd.pairing(j, i);
                ensure(is_integer(&p), || format!("pairing of roots {j} and {i} is not an integer"))?;
            }
        }
        Ok(rd)
    }

    fn compute_coroot(&self, i: usize) -> Result<Element> {
        let g = &self.ambient;
        let b = g
            .bracket_spaces(&self.root_spaces[i], &self.root_spaces[self.negatives[i]])
            .intersect(&self.cartan);
        ensure(b.dim() == 1, || format!("a ∩ [g_α, g_-α] has dimension {} for root {i}", b.dim()))?;
        let h = &b.basis()[0];
        let v = self.eval(i, h);
        ensure(!v.is_zero(), || format!("root {i} vanishes on a ∩ [g_α, g_-α]"))?;
        Ok(vector::scale(&(rat(2) / v), h))
    }

    pub fn ambient(&self) -> &Arc<LieAlgebra> {
        &self.ambient
    }

    pub fn cartan(&self) -> &Subspace {
        &self.cartan
    }

    /// Minimal Levi `c_g(a)`.
    pub fn levi(&self) -> &Subspace {
        &self.levi
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root_space(&self, i: usize) -> &Subspace {
        &self.root_spaces[i]
    }

    pub fn coroot(&self, i: usize) -> &Element {
        &self.coroots[i]
    }

    pub fn negative(&self, i: usize) -> usize {
        self.negatives[i]
    }

    pub fn index_of(&self, functional: &[Rational]) -> Option<usize> {
        self.index.get(functional).copied()
    }

    /// Rank of the root lattice, `dim a ∩ [g,g]`.
    pub fn rank(&self) -> usize {
        self.derived_cartan.dim()
    }

    pub fn derived_cartan(&self) -> &Subspace {
        &self.derived_cartan
    }

    /// Coordinates of an element of `a` in its stored basis.
    pub fn cartan_coords(&self, h: &[Rational]) -> Result<Vector> {
        self.cartan.coords(h).ok_or_else(|| Error::Precondition("element is not in the Cartan subspace".into()))
    }

    /// `α_i(h)` for `h ∈ a`.
    pub fn eval(&self, i: usize, h: &[Rational]) -> Rational {
        let c = self.cartan.coords(h).expect("element of the Cartan subspace");
        vector::dot(&self.roots[i], &c)
    }

    /// `β(h_α)` for root indices `beta`, `alpha`.
    pub fn pairing(&self, beta: usize, alpha: usize) -> Rational {
        self.eval(beta, &self.coroots[alpha])
    }

    /// `σ_α(β) = β - β(h_α) α`.
    pub fn reflect(&self, alpha: usize, beta: usize) -> usize {
        let c = self.pairing(beta, alpha);
        let image = vector::sub(&self.roots[beta], &vector::scale(&c, &self.roots[alpha]));
        self.index[&image]
    }

    pub fn reflection_permutation(&self, alpha: usize) -> Vec<usize> {
        (0..self.len()).map(|b| self.reflect(alpha, b)).collect()
    }

    /// Positive rational `c` with `root_j = c · root_i`, if any.
    pub fn multiple(&self, i: usize, j: usize) -> Option<Rational> {
        let ri = &self.roots[i];
        let rj = &self.roots[j];
        let k = ri.iter().position(|x| !x.is_zero())?;
        let c = &rj[k] / &ri[k];
        (c.is_positive() && vector::scale(&c, ri) == *rj).then_some(c)
    }

    /// `ml ⊕ ⊕_{β ∈ set} g_β`.
    pub fn span_of(&self, set: impl IntoIterator<Item = usize>) -> Subspace {
        set.into_iter().fold(self.levi.clone(), |acc, b| acc.sum(&self.root_spaces[b]))
    }

    /// The roots whose spaces lie in `space`, provided `space` is exactly
    /// the minimal Levi plus those root spaces.
    pub fn root_set(&self, space: &Subspace) -> Result<std::collections::BTreeSet<usize>> {
        if !space.contains(&self.levi) {
            return Err(Error::Precondition("subspace does not contain the minimal Levi".into()));
        }
        let set: std::collections::BTreeSet<usize> =
            (0..self.len()).filter(|&b| space.contains(&self.root_spaces[b])).collect();
        if self.span_of(set.iter().copied()) != *space {
            return Err(Error::Precondition("subspace is not a sum of root spaces".into()));
        }
        Ok(set)
    }

    /// Reflection automorphism `exp(ad x) exp(ad -y) exp(ad x)` for the
    /// first basis vector `x` of `g_α`, with its action on roots.
    pub fn root_reflection(&self, alpha: usize) -> Result<Reflection> {
        let g = &self.ambient;
        let n = g.dim();
        let x = self.root_spaces[alpha].basis()[0].clone();
        let h = &self.coroots[alpha];
        let neg = &self.root_spaces[self.negatives[alpha]];
        let images: Vec<Vector> = neg.basis().iter().map(|y| g.bracket(&x, y)).collect();
        let sol = crate::ratmat::solve(&Matrix::from_columns(&images, n), h)
            .ok_or_else(|| Error::Internal("no y in g_-α with [x, y] = h_α".into()))?;
        let y = neg.element(&sol.particular);
        let ex = g.exp_ad(&x)?;
        let ey = g.exp_ad(&vector::neg(&y))?;
        let automorphism = ex.mul(&ey).mul(&ex);
        let permutation = self.reflection_permutation(alpha);

        // h ↦ h - α(h) h_α on a
        for b in self.cartan.basis() {
            let expected = vector::sub(b, &vector::scale(&self.eval(alpha, b), h));
            ensure(automorphism.mul_vec(b) == expected, || "reflection acts wrongly on the Cartan".into())?;
        }
        for (beta, &image) in permutation.iter().enumerate() {
            ensure(self.root_spaces[beta].image(&automorphism) == self.root_spaces[image], || {
                format!("reflection does not carry g_{beta} onto g_{image}")
            })?;
        }
        Ok(Reflection { automorphism, permutation })
    }

    /// Root data of `A·a`, for an automorphism `A`, with roots matched to
    /// the transported root spaces.
    pub fn transport(&self, a: &Matrix) -> Result<(RootDatum, Vec<usize>)> {
        let moved = RootDatum::new(&self.ambient, &self.cartan.image(a))?;
        let matching = (0..self.len())
            .map(|i| {
                let image = self.root_spaces[i].image(a);
                (0..moved.len())
                    .find(|&j| moved.root_spaces[j] == image)
                    .ok_or_else(|| Error::Internal("transported root space is not a root space".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((moved, matching))
    }
}

/// Root reflection as an algebra automorphism and a root permutation.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub automorphism: Matrix,
    pub permutation: Vec<usize>,
}

/// Chamber data of a minimal parabolic containing the minimal Levi.
#[derive(Clone, Debug)]
pub struct SimpleSystem {
    /// Unique lift of the grading element inside `a`.
    pub xi: Element,
    /// `β(ξ)` for every root.
    pub levels: Vec<i64>,
    /// Root indices of `Φ¹`, in label order.
    pub simples: Vec<usize>,
    /// `β(ξ^α) = δ_αβ` on `Φ¹`, with `ξ^α ∈ a ∩ [g,g]`.
    pub coweights: Vec<Element>,
    /// `λ^α(h_β) = δ_αβ`, vanishing on `z(g) ∩ a`; values on the Cartan basis.
    pub weights: Vec<Vector>,
    /// Coordinates of every root in the basis `Φ¹`.
    pub coordinates: Vec<Vec<i64>>,
}

impl SimpleSystem {
    pub fn new(rd: &RootDatum, pb: &crate::parabolic::ParabolicData) -> Result<Self> {
        if !pb.space().contains(rd.levi()) {
            return Err(Error::Precondition("minimal parabolic does not contain the minimal Levi".into()));
        }
        let lift = pb.grading_lift(rd.cartan())?;
        ensure(lift.torsor.is_zero(), || "grading lift in the Cartan is not unique".into())?;
        let xi = lift.xi;
        let levels = (0..rd.len())
            .map(|b| {
                let v = rd.eval(b, &xi);
                if !is_integer(&v) {
                    return Err(Error::Internal(format!("root {b} has non-integral level {v}")));
                }
                Ok(v.to_integer().try_into().expect("small level"))
            })
            .collect::<Result<Vec<i64>>>()?;
        ensure(levels.iter().all(|&l| l != 0), || "chamber lift is not regular".into())?;
        ensure(rd.span_of((0..rd.len()).filter(|&b| levels[b] < 0)) == *pb.space(), || {
            "minimal parabolic is not the nonpositive part of its lift".into()
        })?;
        let simples: Vec<usize> = (0..rd.len()).filter(|&b| levels[b] == 1).collect();
        let mut ss = SimpleSystem { xi, levels, simples, coweights: Vec::new(), weights: Vec::new(), coordinates: Vec::new() };
        ss.complete(rd)?;
        Ok(ss)
    }

    /// Recomputes the label-dependent data after `simples` was reordered.
    fn complete(&mut self, rd: &RootDatum) -> Result<()> {
        let r = self.simples.len();
        ensure(r == rd.rank(), || format!("{r} simple roots for a root lattice of rank {}", rd.rank()))?;
        let dc = rd.derived_cartan();
        // coweights: solve β(ξ^α) = δ over a ∩ [g,g]
        let rows: Vec<Vector> =
            self.simples.iter().map(|&b| dc.basis().iter().map(|h| rd.eval(b, h)).collect()).collect();
        let m = Matrix::from_rows_with_cols(rows, dc.dim());
        let inv = m.inverse().ok_or_else(|| Error::Internal("simple roots are not a basis on a ∩ [g,g]".into()))?;
        self.coweights = (0..r).map(|k| dc.element(&inv.column(k))).collect();

        // weights: λ(h_β) = δ and λ = 0 on z(g) ∩ a
        let g = rd.ambient();
        let central = rd.cartan().intersect(&g.center());
        let mut rows: Vec<Vector> = Vec::new();
        for &b in &self.simples {
            rows.push(rd.cartan_coords(rd.coroot(b))?);
        }
        for z in central.basis() {
            rows.push(rd.cartan_coords(z)?);
        }
        let m = Matrix::from_rows_with_cols(rows, rd.cartan().dim());
        let inv = m.inverse().ok_or_else(|| Error::Internal("coroots and center do not span a".into()))?;
        // λ^k is the row vector solving λ · c(h_β) = δ, λ · c(z) = 0
        self.weights = (0..r).map(|k| inv.column(k)).collect();

        // integral coordinates of all roots
        let basis: Vec<Vector> = self.simples.iter().map(|&b| rd.roots()[b].clone()).collect();
        let span = Subspace::span(rd.cartan().dim(), basis.clone());
        let to_coords = Matrix::from_columns(&basis, rd.cartan().dim());
        self.coordinates = Vec::with_capacity(rd.len());
        for (b, root) in rd.roots().iter().enumerate() {
            ensure(span.contains_vector(root), || format!("root {b} is not in the span of Φ¹"))?;
            let sol = crate::ratmat::solve(&to_coords, root)
                .ok_or_else(|| Error::Internal("root coordinates unsolvable".into()))?;
            let c = sol.particular;
            ensure(c.iter().all(is_integer), || format!("root {b} has non-integral Φ¹ coordinates"))?;
            let ints: Vec<i64> = c.iter().map(|x| x.to_integer().try_into().expect("small")).collect();
            ensure(ints.iter().all(|&x| x >= 0) || ints.iter().all(|&x| x <= 0), || {
                format!("root {b} has mixed-sign Φ¹ coordinates")
            })?;
            self.coordinates.push(ints);
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    /// `A_ij = α_j(h_{α_i})`.
    pub fn cartan_matrix(&self, rd: &RootDatum) -> Vec<Vec<i64>> {
        self.simples
            .iter()
            .map(|&a| {
                self.simples
                    .iter()
                    .map(|&b| rd.pairing(b, a).to_integer().try_into().expect("small"))
                    .collect()
            })
            .collect()
    }

    pub fn positive_roots(&self) -> Vec<usize> {
        (0..self.levels.len()).filter(|&b| self.levels[b] > 0).collect()
    }
}

/// Whether every eigenvalue of `ad h` is rational; a sanity check on
/// elements claimed to be split.
pub fn is_split_element(g: &LieAlgebra, h: &[Rational]) -> bool {
    split_eigenspaces(&g.ad(h)).is_some()
}

#[cfg(test)]
mod tests;
