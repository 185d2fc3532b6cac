use std::collections::{HashMap, VecDeque};

use serde_json::json;

use super::chamber::ChamberSystem;
use crate::error::{Error, Result};

/// Largest structure group built by closure.
const GROUP_LIMIT: usize = 100_000;

/// A chamber system whose panels all have two chambers, with the panel
/// swaps and the permutation group they generate.
#[derive(Clone, Debug)]
pub struct ThinChamberSystem {
    system: ChamberSystem,
    involutions: Vec<Vec<usize>>,
    group: Vec<Vec<usize>>,
    group_words: Vec<Vec<usize>>,
}

/// `δ(b, c)` as shortlex words in the labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WDistance {
    table: Vec<Vec<Vec<usize>>>,
}

/// Chamber bijection intertwining the panel swaps up to a label bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    /// Label `i` of the source corresponds to label `labels[i]` of the target.
    pub labels: Vec<usize>,
    pub chambers: Vec<usize>,
}

impl ThinChamberSystem {
    pub fn new(system: ChamberSystem) -> Result<Self> {
        if !system.is_thin() {
            return Err(Error::Invalid("some panel does not have exactly two chambers".into()));
        }
        let involutions: Vec<Vec<usize>> = (0..system.labels())
            .map(|i| {
                (0..system.len())
                    .map(|c| *system.panel(i, c).iter().find(|&&d| d != c).expect("two chambers"))
                    .collect()
            })
            .collect();
        // closure of the generated permutation group, breadth first
        let n = system.len();
        let id: Vec<usize> = (0..n).collect();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id.clone(), 0)]);
        let mut group = vec![id];
        let mut group_words = vec![Vec::new()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (i, s) in involutions.iter().enumerate() {
                let next: Vec<usize> = group[k].iter().map(|&c| s[c]).collect();
                if index.contains_key(&next) {
                    continue;
                }
                if group.len() >= GROUP_LIMIT {
                    return Err(Error::Invalid("structure group too large to enumerate".into()));
                }
                index.insert(next.clone(), group.len());
                let mut w = group_words[k].clone();
                w.push(i);
                group_words.push(w);
                queue.push_back(group.len());
                group.push(next);
            }
        }
        Ok(ThinChamberSystem { system, involutions, group, group_words })
    }

    /// Builds the system from per-label involutions on named chambers.
    pub fn from_involutions(names: Vec<String>, involutions: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        for (i, s) in involutions.iter().enumerate() {
            if s.len() != n || (0..n).any(|c| s[c] >= n || s[c] == c || s[s[c]] != c) {
                return Err(Error::Invalid(format!("label {i} is not a fixed-point-free involution")));
            }
        }
        let keys: Vec<Vec<(usize, usize)>> =
            involutions.iter().map(|s| (0..n).map(|c| (c.min(s[c]), c.max(s[c]))).collect()).collect();
        ThinChamberSystem::new(ChamberSystem::from_keys(involutions.len(), names, &keys)?)
    }

    pub fn system(&self) -> &ChamberSystem {
        &self.system
    }

    pub fn len(&self) -> usize {
        self.system.len()
    }

    pub fn is_empty(&self) -> bool {
        self.system.is_empty()
    }

    pub fn labels(&self) -> usize {
        self.system.labels()
    }

    pub fn involution(&self, i: usize) -> &[usize] {
        &self.involutions[i]
    }

    pub fn group_order(&self) -> usize {
        self.group.len()
    }

    /// The `k`-th element of the structure group, as a chamber permutation,
    /// with a shortest word producing it.
    pub fn group_element(&self, k: usize) -> (&[usize], &[usize]) {
        (&self.group[k], &self.group_words[k])
    }

    /// Chamber reached from `b` by crossing the panels `word` in order.
    pub fn walk(&self, b: usize, word: &[usize]) -> usize {
        word.iter().fold(b, |c, &i| self.involutions[i][c])
    }

    /// Orders `m_ij` of `s_i s_j` in the structure group.
    pub fn coxeter_matrix(&self) -> Vec<Vec<usize>> {
        let r = self.labels();
        let n = self.len();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let step = |c: usize| self.involutions[j][self.involutions[i][c]];
                        let mut m = 1;
                        let mut cur: Vec<usize> = (0..n).map(step).collect();
                        while cur.iter().enumerate().any(|(c, &d)| c != d) {
                            cur = cur.into_iter().map(step).collect();
                            m += 1;
                        }
                        m
                    })
                    .collect()
            })
            .collect()
    }

    /// Shortlex words of a connected thin system on which the structure
    /// group acts freely.
    pub fn w_distance(&self) -> Result<WDistance> {
        if !self.system.is_connected() {
            return Err(Error::Invalid("chamber system is not connected".into()));
        }
        if self.group.len() != self.len() {
            return Err(Error::Invalid(format!(
                "structure group of order {} does not act freely on {} chambers",
                self.group.len(),
                self.len()
            )));
        }
        let table = (0..self.len()).map(|b| self.bfs_words(b)).collect();
        Ok(WDistance { table })
    }

    fn bfs_words(&self, b: usize) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
        words[b] = Some(Vec::new());
        let mut queue = VecDeque::from([b]);
        while let Some(c) = queue.pop_front() {
            for i in 0..self.labels() {
                let d = self.involutions[i][c];
                if words[d].is_none() {
                    let mut w = words[c].clone().expect("visited");
                    w.push(i);
                    words[d] = Some(w);
                    queue.push_back(d);
                }
            }
        }
        words.into_iter().map(|w| w.expect("connected")).collect()
    }

    /// Searches for an isomorphism onto `other`, trying label bijections in
    /// lexicographic order (identity first) and extending from chamber 0.
    pub fn isomorphism_to(&self, other: &ThinChamberSystem) -> Option<Isomorphism> {
        let r = self.labels();
        if other.labels() != r || other.len() != self.len() || !self.system.is_connected() {
            return None;
        }
        let mut perm: Vec<usize> = (0..r).collect();
        loop {
            if let Some(chambers) = self.extend(other, &perm) {
                return Some(Isomorphism { labels: perm, chambers });
            }
            if !next_permutation(&mut perm) {
                return None;
            }
        }
    }

    fn extend(&self, other: &ThinChamberSystem, labels: &[usize]) -> Option<Vec<usize>> {
        let n = self.len();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[0] = 0;
        used[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for i in 0..self.labels() {
                let d = self.involutions[i][c];
                let image = other.involutions[labels[i]][map[c]];
                if map[d] == usize::MAX {
                    if used[image] {
                        return None;
                    }
                    map[d] = image;
                    used[image] = true;
                    queue.push_back(d);
                } else if map[d] != image {
                    return None;
                }
            }
        }
        Some(map)
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).expect("exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

impl WDistance {
    pub fn get(&self, b: usize, c: usize) -> &[usize] {
        &self.table[b][c]
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Shortlex form of an arbitrary word, read off at chamber `0`.
    pub fn normal_form(&self, thin: &ThinChamberSystem, word: &[usize]) -> Vec<usize> {
        self.table[0][thin.walk(0, word)].clone()
    }

    /// Checks `δ(b,b) = 1`, `δ(c,b) = δ(b,c)⁻¹`, compatibility with
    /// adjacency and multiplicativity along paths. Returns the violations.
    pub fn violations(&self, thin: &ThinChamberSystem) -> Vec<String> {
        let n = self.len();
        let mut out = Vec::new();
        for b in 0..n {
            if !self.table[b][b].is_empty() {
                out.push(format!("δ({b},{b}) is not the identity"));
            }
            for c in 0..n {
                let w = &self.table[b][c];
                if thin.walk(b, w) != c {
                    out.push(format!("δ({b},{c}) does not lead from {b} to {c}"));
                }
                let inverse: Vec<usize> = w.iter().rev().copied().collect();
                if self.normal_form(thin, &inverse) != self.normal_form(thin, &self.table[c][b]) {
                    out.push(format!("δ({c},{b}) is not the inverse of δ({b},{c})"));
                }
                for i in 0..thin.labels() {
                    let c2 = thin.involution(i)[c];
                    let mut wi = w.clone();
                    wi.push(i);
                    if self.normal_form(thin, &wi) != self.table[b][c2] {
                        out.push(format!("δ({b},{c2}) is not δ({b},{c})·s_{i}"));
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self, thin: &ThinChamberSystem) -> serde_json::Value {
        let names = thin.system().names();
        json!({
            "chambers": names,
            "delta": self.table.iter().map(|row| row.iter().map(|w| w.iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

fn sequence_name(seq: &[i64], signed: bool) -> String {
    seq.iter()
        .map(|&x| if signed { format!("{}{}", if x < 0 { '-' } else { '+' }, x.abs()) } else { x.to_string() })
        .collect::<Vec<_>>()
        .concat()
}

/// Enumerates the orbit of `start` under the given moves, breadth first,
/// and returns it with the moves as chamber involutions.
fn orbit_model(start: Vec<i64>, moves: &[Box<dyn Fn(&[i64]) -> Vec<i64>>], signed: bool) -> Result<ThinChamberSystem> {
    let mut index: HashMap<Vec<i64>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut chambers = vec![start];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for m in moves {
            let next = m(&chambers[k]);
            if !index.contains_key(&next) {
                index.insert(next.clone(), chambers.len());
                queue.push_back(chambers.len());
                chambers.push(next);
            }
        }
    }
    let involutions = moves.iter().map(|m| chambers.iter().map(|c| index[&m(c)]).collect()).collect();
    let names = chambers.iter().map(|c| sequence_name(c, signed)).collect();
    ThinChamberSystem::from_involutions(names, involutions)
}

/// Orderings of `{1..n+1}`; label `j` swaps positions `j` and `j+1`.
pub fn apartment_model_a(n: usize) -> Result<ThinChamberSystem> {
    if n == 0 {
        return Err(Error::Invalid("model A(n) needs n >= 1".into()));
    }
    let moves: Vec<Box<dyn Fn(&[i64]) -> Vec<i64>>> = (0..n)
        .map(|j| {
            Box::new(move |s: &[i64]| {
                let mut t = s.to_vec();
                t.swap(j, j + 1);
                t
            }) as Box<dyn Fn(&[i64]) -> Vec<i64>>
        })
        .collect();
    orbit_model((1..=n as i64 + 1).collect(), &moves, false)
}

/// Signed orderings of `{1..n}`; label `j < n` swaps positions `j`, `j+1`
/// and label `n` flips the sign in the last position.
pub fn apartment_model_b(n: usize) -> Result<ThinChamberSystem> {
    if n == 0 {
        return Err(Error::Invalid("model B(n) needs n >= 1".into()));
    }
    let mut moves: Vec<Box<dyn Fn(&[i64]) -> Vec<i64>>> = (0..n - 1)
        .map(|j| {
            Box::new(move |s: &[i64]| {
                let mut t = s.to_vec();
                t.swap(j, j + 1);
                t
            }) as Box<dyn Fn(&[i64]) -> Vec<i64>>
        })
        .collect();
    moves.push(Box::new(move |s: &[i64]| {
        let mut t = s.to_vec();
        t[n - 1] = -t[n - 1];
        t
    }));
    orbit_model((1..=n as i64).collect(), &moves, true)
}
