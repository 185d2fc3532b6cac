use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::chamber::ChamberSystem;
use super::thin::ThinChamberSystem;
use crate::error::{ensure, Error, Result};
use crate::liealg::Element;
use crate::parabolic::{common_levi, compatible_lifts, ParabolicData};
use crate::ratmat::{Matrix, Subspace};
use crate::rootdata::{Frame, RootDatum};

/// Minimal parabolics containing the minimal Levi of a frame, as a thin
/// chamber system.
#[derive(Clone, Debug)]
pub struct LieApartment {
    pub thin: ThinChamberSystem,
    /// Shortlex Weyl word of each chamber from the frame's chamber.
    pub words: Vec<Vec<usize>>,
    pub roots: Vec<BTreeSet<usize>>,
    pub spaces: Vec<Subspace>,
}

impl LieApartment {
    pub fn chamber_of(&self, space: &Subspace) -> Option<usize> {
        self.spaces.iter().position(|s| s == space)
    }
}

/// Enumerates the chambers `w·C` and groups `i`-panels by the parabolic
/// of cotype `{i}` containing them.
pub fn lie_apartment(frame: &Frame) -> Result<LieApartment> {
    let rd = frame.root_datum();
    let r = frame.rank();
    let perms: Vec<Vec<usize>> = (0..r).map(|i| frame.simple_permutation(i)).collect();
    let identity: Vec<usize> = (0..rd.len()).collect();

    let mut index: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    let mut roots = vec![frame.chamber_roots().clone()];
    let mut words = vec![Vec::new()];
    let mut maps = vec![identity];
    index.insert(roots[0].clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for (i, p) in perms.iter().enumerate() {
            let w: Vec<usize> = (0..rd.len()).map(|b| maps[k][p[b]]).collect();
            let set: BTreeSet<usize> = frame.chamber_roots().iter().map(|&b| w[b]).collect();
            if index.contains_key(&set) {
                continue;
            }
            index.insert(set.clone(), roots.len());
            let mut word = words[k].clone();
            word.push(i);
            queue.push_back(roots.len());
            roots.push(set);
            words.push(word);
            maps.push(w);
        }
    }

    let all: BTreeSet<usize> = (0..r).collect();
    let keys: Vec<Vec<BTreeSet<usize>>> = (0..r)
        .map(|i| {
            let mut cotype = all.clone();
            cotype.remove(&i);
            let standard = frame.subset_roots(&cotype);
            maps.iter().map(|w| standard.iter().map(|&b| w[b]).collect()).collect()
        })
        .collect();
    let names = words
        .iter()
        .map(|w| if w.is_empty() { "e".to_string() } else { w.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(".") })
        .collect();
    let system = ChamberSystem::from_keys(r, names, &keys)?;
    let thin = ThinChamberSystem::new(system).map_err(|e| Error::Internal(format!("apartment is not thin: {e}")))?;
    let spaces = roots.iter().map(|s| frame.span_of(s)).collect();
    for (k, w) in words.iter().enumerate() {
        ensure(frame.word_of_chamber(&roots[k])? == *w, || "BFS word is not shortlex".into())?;
    }
    Ok(LieApartment { thin, words, roots, spaces })
}

/// Weyl distance between two minimal parabolics, through a common minimal
/// Levi carried to the frame's.
pub fn delta_parabolic(frame: &Frame, pb: &ParabolicData, pc: &ParabolicData) -> Result<Vec<usize>> {
    let (xi_b, xi_c) = compatible_lifts(pb, pc)?;
    let levi = common_levi(pb, pc)?;
    let a = frame.standardize(pb, &xi_b.xi)?;
    let rd = frame.root_datum();
    ensure(levi.image(&a) == *rd.levi(), || "common Levi is not carried to the minimal Levi".into())?;
    let moved = ParabolicData::new(rd.ambient(), pc.space().image(&a))?;
    let word = frame.weyl_word(&moved)?;
    // the same word read in the apartment of the common Levi itself
    let a_inv = a.inverse().ok_or_else(|| Error::Internal("standardizing map not invertible".into()))?;
    let local = RootDatum::new(rd.ambient(), &rd.cartan().image(&a_inv))?;
    ensure(*local.levi() == levi, || "pulled back Cartan does not centralize to the common Levi".into())?;
    ensure(levi.contains_vector(&xi_c.xi), || "lift of pc escapes the common Levi".into())?;
    Ok(word)
}

/// Result of [`verify_building`].
#[derive(Clone, Debug, Default)]
pub struct BuildingReport {
    pub chambers: usize,
    pub pairs: usize,
    pub overlap: usize,
    pub violations: Vec<String>,
}

impl BuildingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks two apartments glued along the frame's chamber by `exp(ad x)`,
/// `x ∈ nil(pb)`: every pair of chambers has a common minimal Levi, δ is
/// the same in either apartment on the overlap, and δ computed through
/// common Levis agrees with δ inside an apartment containing both.
pub fn verify_building(frame: &Frame, x: &Element) -> Result<BuildingReport> {
    let g = frame.root_datum().ambient();
    if !frame.chamber().nilradical().contains_vector(x) {
        return Err(Error::Precondition("gluing element must lie in the nilradical of the chamber".into()));
    }
    let a = g.exp_ad(x)?;
    let first = lie_apartment(frame)?;
    let moved = transport_frame(frame, &a)?;
    let second = lie_apartment(&moved)?;

    let mut chambers: Vec<Subspace> = first.spaces.clone();
    for s in &second.spaces {
        if !chambers.contains(s) {
            chambers.push(s.clone());
        }
    }
    let parabolics =
        chambers.iter().map(|s| ParabolicData::new(g, s.clone())).collect::<Result<Vec<_>>>()?;
    let overlap = second.spaces.iter().filter(|s| first.chamber_of(s).is_some()).count();
    let mut report = BuildingReport { chambers: chambers.len(), overlap, ..Default::default() };
    for b in 0..chambers.len() {
        for c in 0..chambers.len() {
            report.pairs += 1;
            let delta = match delta_parabolic(frame, &parabolics[b], &parabolics[c]) {
                Ok(w) => w,
                Err(e) => {
                    report.violations.push(format!("δ({b},{c}) failed: {e}"));
                    continue;
                }
            };
            for apt in [&first, &second] {
                if let (Some(i), Some(j)) = (apt.chamber_of(&chambers[b]), apt.chamber_of(&chambers[c])) {
                    let inside = shortlex_between(frame, apt, i, j);
                    if inside != delta {
                        report.violations.push(format!("δ({b},{c}) = {delta:?} but an apartment gives {inside:?}"));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `δ` inside one apartment: `w_b⁻¹ w_c` in shortlex form.
fn shortlex_between(frame: &Frame, apt: &LieApartment, b: usize, c: usize) -> Vec<usize> {
    let mut word: Vec<usize> = apt.words[b].iter().rev().copied().collect();
    word.extend(&apt.words[c]);
    let target = frame.chamber_of_word(&word);
    frame.word_of_chamber(&target).expect("chamber of a word")
}

/// The frame `A·(a, pb)` for an automorphism fixing the frame's chamber,
/// with labels matched through `A`.
pub fn transport_frame(frame: &Frame, a: &Matrix) -> Result<Frame> {
    let rd = frame.root_datum();
    let g = rd.ambient();
    let chamber = ParabolicData::new(g, frame.chamber().space().image(a))?;
    let (moved, matching) = rd.transport(a)?;
    let out = Frame::new(std::sync::Arc::new(moved), chamber)?;
    let order = (0..frame.rank())
        .map(|i| {
            let target = matching[frame.simple_root(i)];
            (0..out.rank())
                .find(|&k| out.simple_root(k) == target)
                .ok_or_else(|| Error::Internal("transported simple root is not simple".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    out.reordered(&order)?.with_names(frame.names().to_vec())
}
