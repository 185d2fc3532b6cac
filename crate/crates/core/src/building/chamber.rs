use std::collections::{BTreeMap, BTreeSet};

use super::incidence::{escape, IncidenceSystem};
use crate::error::{Error, Result};

/// Chambers with one adjacency partition (into panels) per label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberSystem {
    labels: usize,
    names: Vec<String>,
    panels: Vec<Vec<Vec<usize>>>,
    panel_of: Vec<Vec<usize>>,
}

/// `E Δ` together with the chamber-to-coresidue assignment.
#[derive(Clone, Debug)]
pub struct Coresidues {
    pub system: IncidenceSystem,
    /// `component[i][c]`: element of `system` that is the `i`-coresidue of `c`.
    pub component: Vec<Vec<usize>>,
}

/// The co-unit `E C Γ → Γ`.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub coresidues: Coresidues,
    /// Element of `Γ` assigned to each coresidue.
    pub counit: Vec<usize>,
    pub is_isomorphism: bool,
}

impl ChamberSystem {
    /// Panels are the classes of equal keys, per label.
    pub fn from_keys<K: Ord + Clone>(labels: usize, names: Vec<String>, keys: &[Vec<K>]) -> Result<Self> {
        if keys.len() != labels || keys.iter().any(|k| k.len() != names.len()) {
            return Err(Error::DimensionMismatch("one key per chamber and label is required".into()));
        }
        let mut panels = Vec::with_capacity(labels);
        let mut panel_of = Vec::with_capacity(labels);
        for ks in keys {
            let mut classes: BTreeMap<K, Vec<usize>> = BTreeMap::new();
            for (c, k) in ks.iter().enumerate() {
                classes.entry(k.clone()).or_default().push(c);
            }
            let mut list: Vec<Vec<usize>> = classes.into_values().collect();
            list.sort();
            let mut of = vec![0; names.len()];
            for (p, members) in list.iter().enumerate() {
                for &c in members {
                    of[c] = p;
                }
            }
            panels.push(list);
            panel_of.push(of);
        }
        Ok(ChamberSystem { labels, names, panels, panel_of })
    }

    /// Chambers are the full flags; `i`-adjacent flags agree away from type `i`.
    pub fn from_incidence(g: &IncidenceSystem) -> Result<(Self, Vec<Vec<usize>>)> {
        let flags = g.full_flags();
        if flags.is_empty() {
            return Err(Error::Invalid("incidence system has no full flags".into()));
        }
        let names = flags
            .iter()
            .map(|f| f.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join("<"))
            .collect();
        let keys: Vec<Vec<Vec<usize>>> = (0..g.type_count())
            .map(|i| {
                flags
                    .iter()
                    .map(|f| f.iter().enumerate().filter(|(t, _)| *t != i).map(|(_, &v)| v).collect())
                    .collect()
            })
            .collect();
        Ok((ChamberSystem::from_keys(g.type_count(), names, &keys)?, flags))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn labels(&self) -> usize {
        self.labels
    }

    pub fn name(&self, c: usize) -> &str {
        &self.names[c]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn panel(&self, i: usize, c: usize) -> &[usize] {
        &self.panels[i][self.panel_of[i][c]]
    }

    pub fn panels(&self, i: usize) -> &[Vec<usize>] {
        &self.panels[i]
    }

    pub fn adjacent(&self, i: usize, b: usize, c: usize) -> bool {
        self.panel_of[i][b] == self.panel_of[i][c]
    }

    pub fn is_thin(&self) -> bool {
        self.panels.iter().all(|ps| ps.iter().all(|p| p.len() == 2))
    }

    /// Connected components of the graph keeping only the given labels.
    pub fn components(&self, keep: &BTreeSet<usize>) -> Vec<usize> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut stack = vec![start];
            while let Some(c) = stack.pop() {
                for &i in keep {
                    for &d in self.panel(i, c) {
                        if comp[d] == usize::MAX {
                            comp[d] = next;
                            stack.push(d);
                        }
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.components(&(0..self.labels).collect()).iter().all(|&c| c == 0)
    }

    /// `E Δ`: the `i`-coresidues as elements of type `i`, incident when
    /// they share a chamber.
    pub fn coresidues(&self) -> Result<Coresidues> {
        let mut elements = Vec::new();
        let mut component = Vec::with_capacity(self.labels);
        let mut members: Vec<BTreeSet<usize>> = Vec::new();
        for i in 0..self.labels {
            let keep: BTreeSet<usize> = (0..self.labels).filter(|&j| j != i).collect();
            let comp = self.components(&keep);
            let count = comp.iter().max().map_or(0, |m| m + 1);
            let offset = elements.len();
            for k in 0..count {
                elements.push((format!("{i}:{k}"), i));
                members.push(comp.iter().enumerate().filter(|(_, &x)| x == k).map(|(c, _)| c).collect());
            }
            component.push(comp.iter().map(|&k| offset + k).collect::<Vec<_>>());
        }
        let system = IncidenceSystem::from_relation(self.labels, elements, |a, b| {
            !members[a].is_disjoint(&members[b])
        })?;
        Ok(Coresidues { system, component })
    }

    pub fn to_dot(&self, title: &str) -> String {
        let mut s = format!("graph \"{}\" {{\n", escape(title));
        for c in 0..self.len() {
            s.push_str(&format!("  c{c} [label=\"{}\"];\n", escape(&self.names[c])));
        }
        for i in 0..self.labels {
            for p in &self.panels[i] {
                for (k, &a) in p.iter().enumerate() {
                    for &b in &p[k + 1..] {
                        s.push_str(&format!("  c{a} -- c{b} [label=\"{}\"];\n", i + 1));
                    }
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

impl IncidenceSystem {
    /// For each type `i`, full flags through a common element of type `i`
    /// lie in one `i`-coresidue.
    pub fn is_residually_connected(&self) -> Result<bool> {
        let (cs, flags) = ChamberSystem::from_incidence(self)?;
        for i in 0..self.type_count() {
            let keep: BTreeSet<usize> = (0..self.type_count()).filter(|&j| j != i).collect();
            let comp = cs.components(&keep);
            let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
            for (c, f) in flags.iter().enumerate() {
                if let Some(&k) = seen.get(&f[i]) {
                    if k != comp[c] {
                        return Ok(false);
                    }
                } else {
                    seen.insert(f[i], comp[c]);
                }
            }
        }
        Ok(true)
    }

    /// Rebuilds `E C Γ` and the co-unit to `Γ`.
    pub fn reconstruct(&self) -> Result<Reconstruction> {
        let (cs, flags) = ChamberSystem::from_incidence(self)?;
        let coresidues = cs.coresidues()?;
        let mut counit = vec![usize::MAX; coresidues.system.len()];
        for i in 0..cs.labels() {
            for (c, f) in flags.iter().enumerate() {
                let v = coresidues.component[i][c];
                if counit[v] == usize::MAX {
                    counit[v] = f[i];
                } else if counit[v] != f[i] {
                    return Err(Error::Internal(format!("{i}-coresidue contains flags with different type-{i} elements")));
                }
            }
        }
        let is_isomorphism = coresidues.system.is_isomorphism(self, &counit);
        Ok(Reconstruction { coresidues, counit, is_isomorphism })
    }
}
