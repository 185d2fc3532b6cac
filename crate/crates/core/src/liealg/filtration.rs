use crate::error::{Error, Result};
use crate::ratmat::Subspace;

use super::LieAlgebra;

/// Increasing filtration `f(k)`, stored between its stable ends: below
/// `min_index` every level equals the first stored one, above `max_index`
/// every level equals the last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    start: i32,
    levels: Vec<Subspace>,
}

impl Filtration {
    /// Filtration induced by a subalgebra `n` normalized by `p ⊇ n`:
    /// `f(-1) = n`, `f(0) = p`, `f(-j-1) = [n, f(-j)]`,
    /// `f(j) = c_g(n, f(j-1))`.
    pub fn induced(g: &LieAlgebra, n: &Subspace, p: &Subspace) -> Result<Self> {
        if !g.is_subalgebra(n) || !g.is_subalgebra(p) {
            return Err(Error::NotSubalgebra);
        }
        if !p.contains(n) || !g.is_ideal_in(n, p) {
            return Err(Error::Precondition("need n ⊆ p with p normalizing n".into()));
        }
        let cap = 2 * g.dim() + 1;
        let mut below = vec![n.clone()];
        loop {
            let next = g.bracket_spaces(n, below.last().unwrap());
            if &next == below.last().unwrap() {
                break;
            }
            below.push(next);
            if below.len() > cap {
                return Err(Error::FiltrationUnstable(cap));
            }
        }
        let mut above = vec![p.clone()];
        loop {
            let next = g.transporter(n, above.last().unwrap());
            if &next == above.last().unwrap() {
                break;
            }
            above.push(next);
            if below.len() + above.len() > cap {
                return Err(Error::FiltrationUnstable(cap));
            }
        }
        let start = -(below.len() as i32);
        let mut levels: Vec<Subspace> = below.into_iter().rev().collect();
        levels.extend(above);
        Ok(Filtration { start, levels })
    }

    pub fn min_index(&self) -> i32 {
        self.start
    }

    pub fn max_index(&self) -> i32 {
        self.start + self.levels.len() as i32 - 1
    }

    pub fn level(&self, k: i32) -> &Subspace {
        let i = (k - self.start).clamp(0, self.levels.len() as i32 - 1);
        &self.levels[i as usize]
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<i32> {
        self.min_index()..=self.max_index()
    }

    /// Number of distinct subspaces among the stored levels.
    pub fn distinct_levels(&self) -> usize {
        let mut v = self.levels.clone();
        v.dedup();
        v.len()
    }

    pub fn is_monotone(&self) -> bool {
        self.levels.windows(2).all(|w| w[1].contains(&w[0]))
    }

    /// `[f(i), f(j)] ⊆ f(i+j)` for all stored indices.
    pub fn is_compatible(&self, g: &LieAlgebra) -> bool {
        self.indices().all(|i| {
            self.indices()
                .all(|j| self.level(i + j).contains(&g.bracket_spaces(self.level(i), self.level(j))))
        })
    }
}
