use std::collections::BTreeSet;

use serde_json::json;

use crate::error::{Error, Result};

/// A multipartite graph with typed vertices: incident elements of equal
/// type are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceSystem {
    type_count: usize,
    names: Vec<String>,
    types: Vec<usize>,
    adjacency: Vec<BTreeSet<usize>>,
}

impl IncidenceSystem {
    pub fn new(
        type_count: usize,
        elements: Vec<(String, usize)>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = elements.len();
        let mut names = Vec::with_capacity(n);
        let mut types = Vec::with_capacity(n);
        for (name, t) in elements {
            if t >= type_count {
                return Err(Error::Invalid(format!("element {name} has type {t} outside 0..{type_count}")));
            }
            names.push(name);
            types.push(t);
        }
        let mut adjacency = vec![BTreeSet::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Invalid(format!("edge ({a}, {b}) refers to a missing element")));
            }
            if types[a] == types[b] {
                return Err(Error::Invalid(format!("{} and {} are incident but have the same type", names[a], names[b])));
            }
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        Ok(IncidenceSystem { type_count, names, types, adjacency })
    }

    /// Builds the edges from a symmetric predicate on distinct elements of
    /// distinct types.
    pub fn from_relation(
        type_count: usize,
        elements: Vec<(String, usize)>,
        incident: impl Fn(usize, usize) -> bool,
    ) -> Result<Self> {
        let n = elements.len();
        let types: Vec<usize> = elements.iter().map(|e| e.1).collect();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if types[a] != types[b] && incident(a, b) {
                    edges.push((a, b));
                }
            }
        }
        IncidenceSystem::new(type_count, elements, edges)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn type_count(&self) -> usize {
        self.type_count
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn type_of(&self, v: usize) -> usize {
        self.types[v]
    }

    pub fn incident(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    pub fn elements_of_type(&self, t: usize) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.types[v] == t).collect()
    }

    /// Unordered incident pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for &b in &self.adjacency[a] {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Flags of type `J`: one element per type in `J`, pairwise incident,
    /// listed in increasing type order.
    pub fn flags(&self, j: &BTreeSet<usize>) -> Vec<Vec<usize>> {
        let order: Vec<usize> = j.iter().copied().collect();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(order.len());
        self.extend_flags(&order, &mut cur, &mut out);
        out
    }

    fn extend_flags(&self, order: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == order.len() {
            out.push(cur.clone());
            return;
        }
        for v in self.elements_of_type(order[cur.len()]) {
            if cur.iter().all(|&u| self.incident(u, v)) {
                cur.push(v);
                self.extend_flags(order, cur, out);
                cur.pop();
            }
        }
    }

    pub fn full_flags(&self) -> Vec<Vec<usize>> {
        self.flags(&(0..self.type_count).collect())
    }

    /// Face map of the flag complex: the subflag of type `target` of a
    /// flag of type `source`.
    pub fn restrict(&self, flag: &[usize], source: &BTreeSet<usize>, target: &BTreeSet<usize>) -> Result<Vec<usize>> {
        if !target.is_subset(source) || flag.len() != source.len() {
            return Err(Error::Invalid("face map needs a subtype of the flag's type".into()));
        }
        Ok(source.iter().zip(flag).filter(|(t, _)| target.contains(t)).map(|(_, &v)| v).collect())
    }

    /// Every element lies on a full flag.
    pub fn is_flag_regular(&self) -> bool {
        let mut covered = vec![false; self.len()];
        for f in self.full_flags() {
            for v in f {
                covered[v] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }

    /// Whether `map` (indexed by elements of `self`) is a type-preserving
    /// bijection onto `other` that preserves and reflects incidence.
    pub fn is_isomorphism(&self, other: &IncidenceSystem, map: &[usize]) -> bool {
        if map.len() != self.len() || other.len() != self.len() || self.type_count != other.type_count {
            return false;
        }
        let image: BTreeSet<usize> = map.iter().copied().collect();
        if image.len() != self.len() || map.iter().any(|&m| m >= other.len()) {
            return false;
        }
        (0..self.len()).all(|v| self.types[v] == other.types[map[v]])
            && (0..self.len()).all(|a| (0..self.len()).all(|b| self.incident(a, b) == other.incident(map[a], map[b])))
    }

    pub fn to_dot(&self, title: &str) -> String {
        let mut s = format!("graph \"{}\" {{\n", escape(title));
        for v in 0..self.len() {
            s.push_str(&format!("  v{v} [label=\"{}\", type={}];\n", escape(&self.names[v]), self.types[v]));
        }
        for (a, b) in self.edges() {
            s.push_str(&format!("  v{a} -- v{b};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "types": self.type_count,
            "elements": (0..self.len())
                .map(|v| json!({"name": self.names[v], "type": self.types[v]}))
                .collect::<Vec<_>>(),
            "edges": self.edges(),
        })
    }
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
