use crate::building::IncidenceSystem;
use crate::error::{Error, Result};

/// Proper nonempty subsets of `{1..n+1}` ordered by inclusion; a subset
/// with `k` elements has type `k - 1`.
pub fn subsets_model(n: usize) -> Result<IncidenceSystem> {
    if n == 0 {
        return Err(Error::Invalid("the subset model needs n >= 1".into()));
    }
    let m = n + 1;
    let mut subsets: Vec<Vec<usize>> = (1..(1usize << m) - 1)
        .map(|mask| (0..m).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    subsets.sort_by_key(|s| (s.len(), s.clone()));
    let elements = subsets
        .iter()
        .map(|s| (s.iter().map(|i| (i + 1).to_string()).collect::<String>(), s.len() - 1))
        .collect();
    IncidenceSystem::from_relation(n, elements, |a, b| nested(&subsets[a], &subsets[b]))
}

/// Nonempty subsets of `{±1..±n}` containing no pair `{i, -i}`, ordered by
/// inclusion; a subset with `k` elements has type `k - 1`.
pub fn admissible_model(n: usize) -> Result<IncidenceSystem> {
    if n == 0 {
        return Err(Error::Invalid("the admissible subset model needs n >= 1".into()));
    }
    // each index is absent, positive or negative
    let mut subsets: Vec<Vec<i64>> = Vec::new();
    for code in 1..3usize.pow(n as u32) {
        let mut c = code;
        let mut s = Vec::new();
        for i in 1..=n as i64 {
            match c % 3 {
                1 => s.push(i),
                2 => s.push(-i),
                _ => {}
            }
            c /= 3;
        }
        subsets.push(s);
    }
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| key(a).cmp(&key(b))));
    let elements = subsets
        .iter()
        .map(|s| (s.iter().map(|&i| format!("{}{}", if i < 0 { '-' } else { '+' }, i.abs())).collect::<String>(), s.len() - 1))
        .collect();
    IncidenceSystem::from_relation(n, elements, |a, b| nested(&subsets[a], &subsets[b]))
}

fn key(s: &[i64]) -> Vec<(i64, bool)> {
    s.iter().map(|&i| (i.abs(), i < 0)).collect()
}

fn nested<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    a.iter().all(|x| b.contains(x)) || b.iter().all(|x| a.contains(x))
}
