use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use super::{Reflection, RootDatum, SimpleSystem};
use crate::error::{ensure, Error, Result};
use crate::liealg::Element;
use crate::parabolic::{compatible_lifts, ParabolicData, TypeMap};
use crate::ratmat::{rat, vector, Matrix, Subspace};

/// A split Cartan with a chosen minimal parabolic containing its
/// centralizer, and labelled simple roots. Everything combinatorial about
/// parabolics of the ambient algebra is computed relative to a frame.
#[derive(Clone, Debug)]
pub struct Frame {
    rd: Arc<RootDatum>,
    chamber: ParabolicData,
    ss: SimpleSystem,
    chamber_roots: BTreeSet<usize>,
    names: Vec<String>,
    reflections: Arc<OnceLock<std::result::Result<Vec<Reflection>, Error>>>,
}

/// Position of an arbitrary parabolic relative to a frame.
#[derive(Clone, Debug)]
pub struct Located {
    /// Inner automorphism with `U·p ⊇ ml`.
    pub conjugator: Matrix,
    /// Roots of `U·p`.
    pub roots: BTreeSet<usize>,
    /// Type, as a set of labels.
    pub ty: BTreeSet<usize>,
}

impl Frame {
    pub fn new(rd: Arc<RootDatum>, chamber: ParabolicData) -> Result<Self> {
        if !Arc::ptr_eq(rd.ambient(), chamber.ambient()) && **rd.ambient() != **chamber.ambient() {
            return Err(Error::DimensionMismatch("chamber and root data live in different algebras".into()));
        }
        let ss = SimpleSystem::new(&rd, &chamber)?;
        let chamber_roots = rd.root_set(chamber.space())?;
        let names = (1..=ss.rank()).map(|i| i.to_string()).collect();
        Ok(Frame { rd, chamber, ss, chamber_roots, names, reflections: Arc::new(OnceLock::new()) })
    }

    /// Relabels: the new label `k` is the old label `order[k]`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let r = self.rank();
        let distinct: BTreeSet<usize> = order.iter().copied().collect();
        if order.len() != r || distinct.len() != r || order.iter().any(|&k| k >= r) {
            return Err(Error::Invalid(format!("{order:?} is not a permutation of the labels")));
        }
        let mut ss = self.ss.clone();
        ss.simples = order.iter().map(|&k| self.ss.simples[k]).collect();
        ss.complete(&self.rd)?;
        let names = order.iter().map(|&k| self.names[k].clone()).collect();
        Ok(Frame { ss, names, reflections: Arc::new(OnceLock::new()), ..self.clone() })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.rank() {
            return Err(Error::Invalid("wrong number of label names".into()));
        }
        self.names = names;
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.ss.rank()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn root_datum(&self) -> &Arc<RootDatum> {
        &self.rd
    }

    pub fn chamber(&self) -> &ParabolicData {
        &self.chamber
    }

    pub fn simple_system(&self) -> &SimpleSystem {
        &self.ss
    }

    /// Root index of the simple root with label `i`.
    pub fn simple_root(&self, i: usize) -> usize {
        self.ss.simples[i]
    }

    pub fn chamber_roots(&self) -> &BTreeSet<usize> {
        &self.chamber_roots
    }

    /// Lift of the chamber's grading element in `a`.
    pub fn xi(&self) -> &Element {
        &self.ss.xi
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.ss.cartan_matrix(&self.rd)
    }

    /// Root permutation of the simple reflection `σ_i`.
    pub fn simple_permutation(&self, i: usize) -> Vec<usize> {
        self.rd.reflection_permutation(self.ss.simples[i])
    }

    /// Reflection automorphisms for the simple roots, in label order.
    pub fn reflections(&self) -> Result<&[Reflection]> {
        self.reflections
            .get_or_init(|| self.ss.simples.iter().map(|&a| self.rd.root_reflection(a)).collect())
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Roots of `q_J = ml ⊕ ⊕_{β(ξ_J) ≤ 0} g_β`.
    pub fn subset_roots(&self, j: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.rd.len())
            .filter(|&b| j.iter().map(|&i| self.ss.coordinates[b][i]).sum::<i64>() <= 0)
            .collect()
    }

    /// The standard parabolic of type `J`: `∅` gives `g`, all labels give
    /// the chamber.
    pub fn parabolic_from_subset(&self, j: &BTreeSet<usize>) -> Result<ParabolicData> {
        if j.iter().any(|&i| i >= self.rank()) {
            return Err(Error::Invalid(format!("type {j:?} has labels outside 0..{}", self.rank())));
        }
        let space = self.rd.span_of(self.subset_roots(j));
        ParabolicData::new(self.rd.ambient(), space)
            .map_err(|e| Error::Internal(format!("standard parabolic rejected: {e}")))
    }

    /// Type of a parabolic containing the chamber.
    pub fn type_of(&self, q: &ParabolicData) -> Result<BTreeSet<usize>> {
        if !q.contains(&self.chamber) {
            return Err(Error::Precondition("parabolic does not contain the chamber".into()));
        }
        Ok((0..self.rank()).filter(|&i| !q.space().contains(self.rd.root_space(self.ss.simples[i]))).collect())
    }

    /// Type of a parabolic root set, by reflecting it to a standard one.
    pub fn classify_roots(&self, roots: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        let mut s = roots.clone();
        let perms: Vec<Vec<usize>> = (0..self.rank()).map(|i| self.simple_permutation(i)).collect();
        for _ in 0..=self.rd.len() {
            let step = (0..self.rank()).find(|&i| !s.contains(&self.rd.negative(self.ss.simples[i])));
            let Some(i) = step else {
                let ty: BTreeSet<usize> = (0..self.rank()).filter(|&i| !s.contains(&self.ss.simples[i])).collect();
                ensure(self.subset_roots(&ty) == s, || "reflected root set is not standard".into())?;
                return Ok(ty);
            };
            ensure(s.contains(&self.ss.simples[i]), || "root set misses both ±α".into())?;
            s = s.iter().map(|&b| perms[i][b]).collect();
        }
        Err(Error::Internal("reflecting a parabolic root set did not terminate".into()))
    }

    /// Root set of the chamber `w·C` for a word `w = i_1 ... i_k`.
    pub fn chamber_of_word(&self, word: &[usize]) -> BTreeSet<usize> {
        let mut s = self.chamber_roots.clone();
        for &i in word.iter().rev() {
            let p = self.simple_permutation(i);
            s = s.iter().map(|&b| p[b]).collect();
        }
        s
    }

    /// Shortlex reduced word `w` with `w·C = target`, for a chamber root set.
    pub fn word_of_chamber(&self, target: &BTreeSet<usize>) -> Result<Vec<usize>> {
        let perms: Vec<Vec<usize>> = (0..self.rank()).map(|i| self.simple_permutation(i)).collect();
        let mut word = Vec::new();
        // w as a root permutation, starting at the identity
        let mut w: Vec<usize> = (0..self.rd.len()).collect();
        for _ in 0..=self.rd.len() {
            let current: BTreeSet<usize> = self.chamber_roots.iter().map(|&b| w[b]).collect();
            if current == *target {
                return Ok(word);
            }
            let i = (0..self.rank())
                .find(|&i| target.contains(&w[self.ss.simples[i]]))
                .ok_or_else(|| Error::Precondition("root set is not a chamber".into()))?;
            w = (0..w.len()).map(|b| w[perms[i][b]]).collect();
            word.push(i);
        }
        Err(Error::Precondition("root set is not a chamber".into()))
    }

    /// `R_{i_1} ··· R_{i_k}`.
    pub fn word_automorphism(&self, word: &[usize]) -> Result<Matrix> {
        let refl = self.reflections()?;
        let mut m = Matrix::identity(self.rd.ambient().dim());
        for &i in word {
            m = m.mul(&refl[i].automorphism);
        }
        Ok(m)
    }

    /// Weyl word of a minimal parabolic containing `ml`, verified by
    /// applying the reflection automorphisms to the chamber.
    pub fn weyl_word(&self, pc: &ParabolicData) -> Result<Vec<usize>> {
        let target = self.rd.root_set(pc.space())?;
        let word = self.word_of_chamber(&target)?;
        let moved = self.chamber.space().image(&self.word_automorphism(&word)?);
        ensure(moved == *pc.space(), || format!("reflections along {word:?} miss the target chamber"))?;
        Ok(word)
    }

    /// Conjugates `p` into a parabolic containing `ml` and types it.
    pub fn locate(&self, p: &ParabolicData) -> Result<Located> {
        let (xi_b, _) = compatible_lifts(&self.chamber, p)?;
        let conjugator = self.chamber.conjugator(&xi_b.xi, &self.ss.xi)?;
        let moved = p.space().image(&conjugator);
        let roots = self
            .rd
            .root_set(&moved)
            .map_err(|e| Error::Internal(format!("conjugated parabolic is not standard: {e}")))?;
        let ty = self.classify_roots(&roots)?;
        Ok(Located { conjugator, roots, ty })
    }

    pub fn type_of_any(&self, p: &ParabolicData) -> Result<BTreeSet<usize>> {
        Ok(self.locate(p)?.ty)
    }

    /// An automorphism `A` with `A·pb = chamber` and `A·ξ_b = ξ`, for a
    /// minimal parabolic `pb` with lift `ξ_b`.
    pub fn standardize(&self, pb: &ParabolicData, xi_b: &[crate::ratmat::Rational]) -> Result<Matrix> {
        let loc = self.locate(pb)?;
        ensure(loc.ty.len() == self.rank(), || "parabolic is not minimal".into())?;
        let word = self.word_of_chamber(&loc.roots)?;
        let rw = self.word_automorphism(&word)?;
        let rw_inv = rw.inverse().ok_or_else(|| Error::Internal("reflection product not invertible".into()))?;
        let b = rw_inv.mul(&loc.conjugator);
        ensure(pb.space().image(&b) == *self.chamber.space(), || "chamber not reached".into())?;
        let moved_lift = b.mul_vec(xi_b);
        let v = self.chamber.conjugator(&moved_lift, &self.ss.xi)?;
        let a = v.mul(&b);
        ensure(a.mul_vec(xi_b) == self.ss.xi, || "lift not carried to the chamber lift".into())?;
        Ok(a)
    }

    /// Opposition involution on labels, computed from the opposites of the
    /// maximal standard parabolics through their coweight lifts.
    pub fn duality_involution(&self) -> Result<TypeMap> {
        let mut mapping = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let q = self.parabolic_from_subset(&BTreeSet::from([i]))?;
            let op = q.opposite(&self.ss.coweights[i])?;
            let roots = self.rd.root_set(op.space())?;
            let expected: BTreeSet<usize> =
                (0..self.rd.len()).filter(|&b| self.ss.coordinates[b][i] >= 0).collect();
            ensure(roots == expected, || "opposite is not the nonnegative part".into())?;
            let ty = self.classify_roots(&roots)?;
            ensure(ty.len() == 1, || format!("opposite of a maximal parabolic has type {ty:?}"))?;
            mapping.push(*ty.iter().next().expect("one label"));
        }
        TypeMap::involution(mapping)
    }

    /// A frame of the Levi quotient `q/nil(q)`.
    pub fn levi_frame(&self, q: &ParabolicData) -> Result<Frame> {
        let loc = self.locate(q)?;
        let u_inv = loc
            .conjugator
            .inverse()
            .ok_or_else(|| Error::Internal("conjugator not invertible".into()))?;
        let g = self.rd.ambient();
        let moved = ParabolicData::new(g, q.space().image(&loc.conjugator))?;
        let lift = moved.grading_lift(self.rd.cartan())?;
        // a regular element whose nonpositive part is a chamber inside U·q
        let bound = self.ss.levels.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0) as i64 + 1;
        let eta = vector::add(&vector::scale(&rat(bound), &lift.xi), &self.ss.xi);
        let inner: Vec<usize> = (0..self.rd.len()).filter(|&b| self.rd.eval(b, &eta) < rat(0)).collect();
        let chamber = self.rd.span_of(inner);
        ensure(moved.space().contains(&chamber), || "chamber escapes the conjugated parabolic".into())?;

        let a_q = self.rd.cartan().image(&u_inv);
        let c_q = chamber.image(&u_inv);
        let levi = q.levi_quotient()?;
        let q0 = Arc::clone(&levi.algebra);
        let rd0 = Arc::new(RootDatum::new(&q0, &levi.project_space(&a_q)?)?);
        let pb0 = ParabolicData::new(&q0, levi.project_space(&c_q)?)
            .map_err(|e| Error::Internal(format!("projected chamber is not parabolic: {e}")))?;
        Frame::new(rd0, pb0)
    }

    /// `ι_q`: labels of `q0 = q/nil(q)` (in the order of `frame0`) to labels
    /// of `g` outside the type of `q`.
    pub fn iota(&self, q: &ParabolicData, frame0: &Frame) -> Result<TypeMap> {
        let jq = self.type_of_any(q)?;
        let mut mapping = Vec::with_capacity(frame0.rank());
        for k in 0..frame0.rank() {
            let p0 = frame0.parabolic_from_subset(&BTreeSet::from([k]))?;
            let p = q.inflate(&p0)?;
            let ty = self.type_of_any(&p)?;
            ensure(ty.is_superset(&jq), || "preimage does not refine the type of q".into())?;
            let extra: Vec<usize> = ty.difference(&jq).copied().collect();
            ensure(extra.len() == 1, || format!("preimage adds labels {extra:?}"))?;
            mapping.push(extra[0]);
        }
        let map = TypeMap::new(self.rank(), mapping)?;
        let covered: BTreeSet<usize> = map.mapping().iter().copied().collect();
        let complement: BTreeSet<usize> = (0..self.rank()).filter(|i| !jq.contains(i)).collect();
        ensure(covered == complement, || "ι_q does not hit the complement of the type".into())?;
        Ok(map)
    }

    /// `ν_q = op_g ∘ ι_q ∘ op_{q0}`.
    pub fn nu(&self, q: &ParabolicData, frame0: &Frame) -> Result<TypeMap> {
        let iota = self.iota(q, frame0)?;
        self.duality_involution()?.compose(&iota)?.compose(&frame0.duality_involution()?)
    }

    /// Labels of the type of the opposite-type parabolic `op_g(J)`.
    pub fn opposite_type(&self, j: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        Ok(self.duality_involution()?.image(j))
    }

    /// Subspace of a root set.
    pub fn span_of(&self, roots: &BTreeSet<usize>) -> Subspace {
        self.rd.span_of(roots.iter().copied())
    }
}
