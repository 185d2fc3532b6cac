//! Configurations: incidence morphisms from a combinatorial model into the
//! maximal parabolics, the standard ones built from point sets and
//! isotropic frames, and their projections along a parabolic.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde_json::json;

use crate::building::IncidenceSystem;
use crate::catalog::{admissible_model, is_isotropic, subsets_model, Classical, Family};
use crate::error::{ensure, Error, Result};
use crate::parabolic::{compatible_lifts, ParabolicData};
use crate::ratmat::{vector, Subspace, Vector};
use crate::rootdata::Frame;

#[cfg(test)]
mod tests;

/// Incidence system whose elements are assigned maximal parabolics; the
/// type of an element is the label of its parabolic in `frame`.
#[derive(Clone, Debug)]
pub struct Configuration {
    pub source: IncidenceSystem,
    pub targets: Vec<ParabolicData>,
    pub frame: Frame,
}

/// Geometric data generating a standard configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `n + 1` spanning points of an `(n + 1)`-dimensional space.
    Points(Vec<Vector>),
    /// Isotropic vectors `(e_i, f_i)` spanning hyperbolic planes.
    IsotropicPairs(Vec<(Vector, Vector)>),
}

#[derive(Clone, Debug)]
pub struct StandardConfiguration {
    pub configuration: Configuration,
    pub witness: Witness,
    /// Intersection of all targets: the minimal Levi of the apartment.
    pub minimal_levi: Subspace,
}

impl Configuration {
    /// Checks that every target is maximal of the element's type and that
    /// incident elements go to costandard parabolics.
    pub fn verify(&self) -> Result<()> {
        let s = &self.source;
        ensure(self.targets.len() == s.len(), || "one target per element is required".into())?;
        for v in 0..s.len() {
            let ty = self.frame.type_of_any(&self.targets[v])?;
            ensure(ty == BTreeSet::from([s.type_of(v)]), || {
                format!("{} has type {} but its parabolic has type {ty:?}", s.name(v), s.type_of(v))
            })?;
        }
        for (a, b) in s.edges() {
            ensure(self.targets[a].is_costandard(&self.targets[b])?, || {
                format!("{} and {} are incident but their parabolics are not costandard", s.name(a), s.name(b))
            })?;
        }
        Ok(())
    }

    pub fn report(&self) -> IncidenceReport {
        IncidenceReport::new(&self.source)
    }
}

fn catalog_frame(c: &Classical) -> Result<Frame> {
    let frame = c.standard_frame()?;
    for i in 0..frame.rank() {
        ensure(c.label_dim(i)? == i + 1, || "labels of the standard frame are not ordered by dimension".into())?;
    }
    Ok(frame.clone())
}

fn intersection(targets: &[ParabolicData], n: usize) -> Subspace {
    targets.iter().fold(Subspace::full(n), |acc, p| acc.intersect(p.space()))
}

/// Each proper nonempty subset of the points goes to the stabilizer of its
/// span.
pub fn simplex_configuration(c: &Classical, points: &[Vector]) -> Result<StandardConfiguration> {
    if !matches!(c.family(), Family::Gl(_) | Family::Sl(_)) {
        return Err(Error::Precondition("simplex configurations live in gl or sl".into()));
    }
    let d = c.defining_dim();
    if !(2..=9).contains(&d) || points.len() != d || points.iter().any(|p| p.len() != d) {
        return Err(Error::Precondition(format!("a simplex in dimension {d} needs {d} points of length {d}")));
    }
    if Subspace::span(d, points.iter().cloned()).dim() != d {
        return Err(Error::Precondition("points do not span".into()));
    }
    let model = subsets_model(d - 1)?;
    let targets = (0..model.len())
        .map(|v| {
            let span = Subspace::span(d, subset_indices(model.name(v)).map(|i| points[i].clone()));
            c.subspace_stabilizer(&span)
        })
        .collect::<Result<Vec<_>>>()?;
    finish(c, model, targets, Witness::Points(points.to_vec()))
}

/// Each admissible subset of `{±1..±n}` goes to the stabilizer of the span
/// of the matching `e_i` (for `+i`) and `f_i` (for `-i`).
pub fn cross_configuration(c: &Classical, pairs: &[(Vector, Vector)]) -> Result<StandardConfiguration> {
    let Family::So(_, q) = c.family() else {
        return Err(Error::Precondition("cross configurations live in so(p, q)".into()));
    };
    let d = c.defining_dim();
    let form = c.form().expect("orthogonal family");
    if q > 9 || pairs.len() != q || pairs.iter().any(|(e, f)| e.len() != d || f.len() != d) {
        return Err(Error::Precondition(format!("an isotropic frame of so(p, {q}) needs {q} pairs of length {d}")));
    }
    let pairing = |x: &Vector, y: &Vector| vector::dot(x, &form.mul_vec(y));
    for (i, (e, f)) in pairs.iter().enumerate() {
        if pairing(e, f).is_zero() {
            return Err(Error::Precondition(format!("pair {} does not span a hyperbolic plane", i + 1)));
        }
        for (j, (e2, f2)) in pairs.iter().enumerate().skip(i + 1) {
            if [pairing(e, e2), pairing(e, f2), pairing(f, e2), pairing(f, f2)].iter().any(|x| !x.is_zero()) {
                return Err(Error::Precondition(format!("pairs {} and {} are not orthogonal", i + 1, j + 1)));
            }
        }
    }
    let model = admissible_model(q)?;
    let mut targets = Vec::with_capacity(model.len());
    for v in 0..model.len() {
        let span = Subspace::span(
            d,
            signed_indices(model.name(v)).map(|(i, plus)| if plus { pairs[i].0.clone() } else { pairs[i].1.clone() }),
        );
        if !is_isotropic(&form, &span) {
            return Err(Error::Precondition(format!("span of {} is not isotropic", model.name(v))));
        }
        targets.push(c.subspace_stabilizer(&span)?);
    }
    finish(c, model, targets, Witness::IsotropicPairs(pairs.to_vec()))
}

fn finish(
    c: &Classical,
    model: IncidenceSystem,
    targets: Vec<ParabolicData>,
    witness: Witness,
) -> Result<StandardConfiguration> {
    let configuration = Configuration { source: model, targets, frame: catalog_frame(c)? };
    configuration.verify()?;
    let distinct: BTreeSet<&Subspace> = configuration.targets.iter().map(|p| p.space()).collect();
    ensure(distinct.len() == configuration.targets.len(), || "assignment is not injective".into())?;
    let g = c.algebra();
    let minimal_levi = intersection(&configuration.targets, g.dim());
    ensure(
        g.is_subalgebra(&minimal_levi) && minimal_levi.dim() == c.standard_minimal_levi().dim(),
        || "targets do not share a minimal Levi".into(),
    )?;
    Ok(StandardConfiguration { configuration, witness, minimal_levi })
}

/// Names of the subset model are the 1-based members, one digit each.
fn subset_indices(name: &str) -> impl Iterator<Item = usize> + '_ {
    name.chars().map(|ch| ch.to_digit(10).expect("subset name") as usize - 1)
}

/// Names of the admissible model are `+i` / `-i` blocks.
fn signed_indices(name: &str) -> impl Iterator<Item = (usize, bool)> + '_ {
    name.as_bytes()
        .chunks(2)
        .map(|ch| ((ch[1] - b'1') as usize, ch[0] == b'+'))
}

/// A Levi-quotient frame of `q` with labels ordered so that `ν_q` is
/// increasing, and `ν_q` itself.
pub fn quotient_frame(frame: &Frame, q: &ParabolicData) -> Result<(Frame, Vec<usize>)> {
    let frame0 = frame.levi_frame(q)?;
    let nu = frame.nu(q, &frame0)?;
    let mut order: Vec<usize> = (0..frame0.rank()).collect();
    order.sort_by_key(|&k| nu.apply(k));
    let frame0 = frame0.reordered(&order)?;
    let nu = frame.nu(q, &frame0)?;
    ensure(nu.mapping().windows(2).all(|w| w[0] < w[1]), || "reordered ν_q is not increasing".into())?;
    Ok((frame0, nu.mapping().to_vec()))
}

/// Restricts `c` to the elements whose type lies in the image of `ν_q` and
/// projects each along `q` into `q / nil(q)`. Elements kept must be weakly
/// opposite to `q`; the projected type is `ν_q⁻¹` of the original.
pub fn project_configuration(q: &ParabolicData, c: &Configuration) -> Result<Configuration> {
    let (frame0, nu) = quotient_frame(&c.frame, q)?;
    let s = &c.source;
    let kept: Vec<usize> = (0..s.len()).filter(|&v| nu.contains(&s.type_of(v))).collect();
    let mut violators = Vec::new();
    for &v in &kept {
        if !c.targets[v].is_weakly_opposite(q)? {
            violators.push(s.name(v).to_string());
        }
    }
    if !violators.is_empty() {
        return Err(Error::Precondition(format!("not weakly opposite to q: {}", violators.join(", "))));
    }
    let elements = kept
        .iter()
        .map(|&v| (s.name(v).to_string(), nu.iter().position(|&j| j == s.type_of(v)).expect("kept")))
        .collect();
    let source = IncidenceSystem::from_relation(nu.len(), elements, |a, b| s.incident(kept[a], kept[b]))?;
    let targets = kept
        .iter()
        .map(|&v| Ok(q.project(&c.targets[v])?.in_levi))
        .collect::<Result<Vec<_>>>()?;
    let out = Configuration { source, targets, frame: frame0 };
    out.verify().map_err(|e| match e {
        Error::Internal(m) => Error::Internal(format!("projected configuration: {m}")),
        other => other,
    })?;
    Ok(out)
}

/// A minimal parabolic of `g`, weakly opposite to `q`, whose projection
/// is the minimal parabolic `b0` of `q / nil(q)`: the Levi part of the
/// preimage of `b0` plus the nilradical of an opposite of `q`.
pub fn opposite_lift(q: &ParabolicData, b0: &ParabolicData) -> Result<ParabolicData> {
    let inflated = q.inflate(b0)?;
    let (_, xi_q) = compatible_lifts(&inflated, q)?;
    let levi = q.levi_subalgebra(&xi_q.xi)?;
    let q_op = q.opposite(&xi_q.xi)?;
    let space = inflated.space().intersect(&levi).sum(q_op.nilradical());
    let pb = ParabolicData::new(q.ambient(), space)?;
    ensure(pb.is_weakly_opposite(q)?, || "lift is not weakly opposite".into())?;
    ensure(q.project(&pb)?.in_levi.space() == b0.space(), || "lift does not project back".into())?;
    Ok(pb)
}

/// Elements grouped by type with the 0/1 incidence matrices between
/// consecutive types present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceReport {
    pub types: Vec<usize>,
    pub elements: Vec<Vec<String>>,
    pub matrices: Vec<Vec<Vec<u8>>>,
    dot: String,
}

impl IncidenceReport {
    pub fn new(s: &IncidenceSystem) -> Self {
        let types: Vec<usize> = (0..s.type_count()).filter(|&t| !s.elements_of_type(t).is_empty()).collect();
        let members: Vec<Vec<usize>> = types.iter().map(|&t| s.elements_of_type(t)).collect();
        let elements = members.iter().map(|m| m.iter().map(|&v| s.name(v).to_string()).collect()).collect();
        let matrices = members
            .windows(2)
            .map(|w| w[0].iter().map(|&a| w[1].iter().map(|&b| u8::from(s.incident(a, b))).collect()).collect())
            .collect();
        IncidenceReport { types, elements, matrices, dot: s.to_dot("configuration") }
    }

    pub fn row_sums(&self, k: usize) -> Vec<usize> {
        self.matrices[k].iter().map(|r| r.iter().map(|&x| x as usize).sum()).collect()
    }

    pub fn column_sums(&self, k: usize) -> Vec<usize> {
        let m = &self.matrices[k];
        let cols = m.first().map_or(0, Vec::len);
        (0..cols).map(|j| m.iter().map(|r| r[j] as usize).sum()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "types": self.types.iter().map(|t| t + 1).collect::<Vec<_>>(),
            "elements": self.elements,
            "incidence": (0..self.matrices.len())
                .map(|k| json!({
                    "rows": self.types[k] + 1,
                    "columns": self.types[k + 1] + 1,
                    "matrix": self.matrices[k],
                    "row_sums": self.row_sums(k),
                    "column_sums": self.column_sums(k),
                }))
                .collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self) -> &str {
        &self.dot
    }
}
