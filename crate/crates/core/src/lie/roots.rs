//! Root systems from Cartan matrices, in simple-root coordinates.
//!
//! Convention: `cartan[i][j] = ⟨α_j, α_i^∨⟩ = α_j(h_i)`.

use std::collections::HashSet;

/// A positive root built as `roots[beta] + α_i`, where `p` is the largest
/// integer with `roots[beta] − p·α_i` a root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Extension {
    pub simple: usize,
    pub beta: usize,
    pub p: i64,
}

#[derive(Clone, Debug)]
pub struct PositiveRoots {
    /// Sorted by height; the first `rank` entries are the simple roots.
    pub roots: Vec<Vec<i64>>,
    /// `None` for simple roots.
    pub extensions: Vec<Option<Extension>>,
}

/// `⟨β, α_i^∨⟩`.
pub fn pairing(cartan: &[Vec<i64>], beta: &[i64], i: usize) -> i64 {
    beta.iter().zip(&cartan[i]).map(|(b, a)| b * a).sum()
}

/// Enumerates positive roots level by level using `α_i`-strings.
pub fn positive_roots(cartan: &[Vec<i64>]) -> PositiveRoots {
    let rank = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut extensions: Vec<Option<Extension>> = vec![None; rank];
    let mut seen: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut level_start = 0;
    while level_start < roots.len() {
        let level_end = roots.len();
        for b in level_start..level_end {
            for i in 0..rank {
                let beta = roots[b].clone();
                let mut p = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pairing(cartan, &beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        roots.push(up);
                        extensions.push(Some(Extension { simple: i, beta: b, p }));
                    }
                }
            }
        }
        level_start = level_end;
    }
    PositiveRoots { roots, extensions }
}

/// Closes the simple roots under simple reflections
/// `s_i(β) = β − ⟨β, α_i^∨⟩ α_i`; returns every root, positive and negative.
pub fn reflection_closure(cartan: &[Vec<i64>]) -> HashSet<Vec<i64>> {
    let rank = cartan.len();
    let mut found: HashSet<Vec<i64>> = HashSet::new();
    let mut stack: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect();
    while let Some(beta) = stack.pop() {
        if !found.insert(beta.clone()) {
            continue;
        }
        for i in 0..rank {
            let mut r = beta.clone();
            r[i] -= pairing(cartan, &beta, i);
            if !found.contains(&r) {
                stack.push(r);
            }
        }
    }
    found
}

pub fn height(root: &[i64]) -> i64 {
    root.iter().sum()
}
