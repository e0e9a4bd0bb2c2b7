//! Irreducible characters of the symmetric group.
//!
//! `χ^λ(μ)` is evaluated with the Murnaghan–Nakayama rule: remove a border
//! strip whose size is the largest remaining cycle of `μ`, weight it by
//! `(−1)^height` where height is the number of rows it occupies minus one,
//! and recurse on the smaller shape. Border strips are found on the beta-set
//! (first-column hook lengths) of the shape: removing a strip of size `r`
//! moves one bead from `b` to `b − r`, and the beads strictly between the two
//! positions count the strip's height.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::partitions::{ConjugacyClass, YoungDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("shape has {boxes} boxes but the cycle type has weight {weight}")]
    WeightMismatch { boxes: usize, weight: usize },
}

/// A validated pair `(λ, μ)` with `|λ| = |μ|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterQuery {
    shape: YoungDiagram,
    cycle_type: ConjugacyClass,
}

impl CharacterQuery {
    pub fn new(shape: YoungDiagram, cycle_type: ConjugacyClass) -> Result<Self, CharacterError> {
        let (boxes, weight) = (shape.boxes(), cycle_type.weight());
        if boxes != weight {
            return Err(CharacterError::WeightMismatch { boxes, weight });
        }
        Ok(Self { shape, cycle_type })
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn cycle_type(&self) -> &ConjugacyClass {
        &self.cycle_type
    }
}

/// Centralizer order `z_μ = Π_j j^{k_j} k_j!`.
pub fn z_order(mu: &ConjugacyClass) -> BigUint {
    let mut z = BigUint::one();
    for (&j, &k) in mu.multiplicities() {
        for i in 1..=k {
            z *= BigUint::from(j) * BigUint::from(i);
        }
    }
    z
}

/// Hook-length formula `n! / Π hooks`.
pub fn dimension(shape: &YoungDiagram) -> BigUint {
    let mut num = BigUint::one();
    for i in 2..=shape.boxes() {
        num *= BigUint::from(i);
    }
    let den: BigUint = shape.hook_lengths().map(BigUint::from).product();
    num / den
}

/// `χ^λ(μ)`, stripping the largest cycles first.
pub fn character(q: &CharacterQuery) -> i64 {
    let cycles = q.cycle_type.cycles_descending();
    strip(&beta_set(q.shape.parts()), &cycles)
}

/// Murnaghan–Nakayama with cycles consumed in the given order.
#[cfg(test)]
pub(crate) fn character_with_cycle_order(shape: &YoungDiagram, cycles: &[usize]) -> i64 {
    strip(&beta_set(shape.parts()), cycles)
}

fn beta_set(parts: &[usize]) -> Vec<usize> {
    let len = parts.len();
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect()
}

/// Every way of removing a border strip of size `r`, as (new beta-set, sign).
fn strip_moves(beta: &[usize], r: usize) -> impl Iterator<Item = (Vec<usize>, i64)> + '_ {
    beta.iter().enumerate().filter_map(move |(idx, &b)| {
        if b < r || beta.contains(&(b - r)) {
            return None;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut next: Vec<usize> = beta.to_vec();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if height % 2 == 0 { 1 } else { -1 };
        Some((next, sign))
    })
}

fn strip(beta: &[usize], cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        // Weights agree, so the shape is empty here.
        return 1;
    };
    strip_moves(beta, r)
        .map(|(next, sign)| sign * strip(&next, rest))
        .sum()
}

/// Normalizes a beta-set to the partition it encodes, so that memo keys do
/// not depend on the number of beads.
fn shape_of(beta: &[usize]) -> Vec<usize> {
    let len = beta.len();
    beta.iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i))
        .filter(|&p| p > 0)
        .collect()
}

/// Memoized character evaluation; results equal [`character`].
///
/// The memo is keyed on (remaining shape, remaining cycles) and is confined
/// to one instance. Create one per thread.
#[derive(Debug, Default)]
pub struct CharacterCache {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn character(&mut self, q: &CharacterQuery) -> i64 {
        let cycles = q.cycle_type.cycles_descending();
        self.strip(q.shape.parts().to_vec(), &cycles)
    }

    fn strip(&mut self, shape: Vec<usize>, cycles: &[usize]) -> i64 {
        let Some((&r, rest)) = cycles.split_first() else {
            return 1;
        };
        let key = (shape, cycles.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let beta = beta_set(&key.0);
        let moves: Vec<_> = strip_moves(&beta, r).collect();
        let value = moves
            .into_iter()
            .map(|(next, sign)| sign * self.strip(shape_of(&next), rest))
            .sum();
        self.memo.insert(key, value);
        value
    }
}
