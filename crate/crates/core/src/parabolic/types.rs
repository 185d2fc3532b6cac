use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Injective map between finite type sets `{0..source}` → `{0..target}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeMap {
    target: usize,
    mapping: Vec<usize>,
}

impl TypeMap {
    pub fn new(target: usize, mapping: Vec<usize>) -> Result<Self> {
        let distinct: BTreeSet<usize> = mapping.iter().copied().collect();
        if distinct.len() != mapping.len() || mapping.iter().any(|&t| t >= target) {
            return Err(Error::Invalid(format!("type map {mapping:?} is not injective into 0..{target}")));
        }
        Ok(TypeMap { target, mapping })
    }

    pub fn identity(n: usize) -> Self {
        TypeMap { target: n, mapping: (0..n).collect() }
    }

    /// A self-map that must square to the identity.
    pub fn involution(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let m = TypeMap::new(n, mapping)?;
        if !m.is_involution() {
            return Err(Error::Invalid("map is not an involution".into()));
        }
        Ok(m)
    }

    pub fn source_len(&self) -> usize {
        self.mapping.len()
    }

    pub fn target_len(&self) -> usize {
        self.target
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn apply(&self, i: usize) -> usize {
        self.mapping[i]
    }

    pub fn image(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        set.iter().map(|&i| self.mapping[i]).collect()
    }

    pub fn preimage(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.mapping.len()).filter(|i| set.contains(&self.mapping[*i])).collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &TypeMap) -> Result<TypeMap> {
        if inner.target != self.mapping.len() {
            return Err(Error::DimensionMismatch("type maps do not compose".into()));
        }
        TypeMap::new(self.target, inner.mapping.iter().map(|&i| self.mapping[i]).collect())
    }

    pub fn is_involution(&self) -> bool {
        self.target == self.mapping.len() && self.mapping.iter().enumerate().all(|(i, &j)| self.mapping[j] == i)
    }
}
