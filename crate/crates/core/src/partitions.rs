//! Integer partitions in two representations.
//!
//! A [`YoungDiagram`] stores the weakly decreasing sequence of positive parts
//! `(λ_1, …, λ_m)`. A [`ConjugacyClass`] stores the same partition as the
//! multiplicity vector `(1^{k_1} 2^{k_2} …)`, i.e. the cycle type of a
//! conjugacy class of the symmetric group.
//!
//! Enumeration of all partitions of `n` uses the accelerated ascending
//! composition generator (ACCELASC). Partitions are emitted in the generator's
//! native order: ascending compositions in lexicographic order, each reversed
//! into a weakly decreasing [`YoungDiagram`]. For `n = 4` that is
//! `(1,1,1,1), (2,1,1), (3,1), (2,2), (4)`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("negative part {value} at position {position}")]
    NegativePart { position: usize, value: i64 },
    #[error("parts must be weakly decreasing: {previous} is followed by {next}")]
    Increasing { previous: i64, next: i64 },
    #[error("cycle length must be positive, got {0}")]
    NonPositiveCycle(i64),
    #[error("multiplicity of cycle length {cycle} must be nonnegative, got {count}")]
    NegativeMultiplicity { cycle: i64, count: i64 },
    #[error("symbol index {0} is out of range 0..=4")]
    SymbolIndex(usize),
}

/// Symbols available to [`YoungDiagram::draw`], indexed `0..=4`.
pub const DRAW_SYMBOLS: [&str; 5] = ["*", "■", "□", "●", "#"];

/// An integer partition as a weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

/// Row, column, box and diagonal counts of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeProfile {
    pub rows: usize,
    pub columns: usize,
    pub boxes: usize,
    pub diagonal: usize,
}

/// Frobenius coordinates `(a_1 … a_d | b_1 … b_d)` with `a_i = λ_i − i` and
/// `b_i = λ'_i − i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

/// Validates an integer sequence as a partition. Trailing zeros are stripped.
pub fn make_partition(seq: &[i64]) -> Result<YoungDiagram, PartitionError> {
    if let Some((position, &value)) = seq.iter().enumerate().find(|(_, v)| **v < 0) {
        return Err(PartitionError::NegativePart { position, value });
    }
    let end = seq.iter().rposition(|&v| v != 0).map_or(0, |i| i + 1);
    let trimmed = &seq[..end];
    for w in trimmed.windows(2) {
        if w[1] > w[0] {
            return Err(PartitionError::Increasing {
                previous: w[0],
                next: w[1],
            });
        }
    }
    // A zero followed by a nonzero entry is an increase, so `trimmed` has no zeros.
    Ok(YoungDiagram {
        parts: trimmed.iter().map(|&v| v as usize).collect(),
    })
}

impl YoungDiagram {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validating constructor from unsigned parts.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let seq: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        make_partition(&seq)
    }

    /// Builds a diagram from parts that may be in any order (zeros dropped).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn columns(&self) -> usize {
        self.part(0)
    }

    pub fn boxes(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Durfee length: the largest `d` with `λ_d ≥ d`.
    pub fn diagonal(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    pub fn profile(&self) -> ShapeProfile {
        ShapeProfile {
            rows: self.rows(),
            columns: self.columns(),
            boxes: self.boxes(),
            diagonal: self.diagonal(),
        }
    }

    /// Conjugate partition: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn transpose(&self) -> YoungDiagram {
        let parts = (1..=self.columns())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        YoungDiagram { parts }
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let d = self.diagonal();
        let conj = self.transpose();
        FrobeniusCoords {
            arms: (0..d).map(|i| self.parts[i] - i - 1).collect(),
            legs: (0..d).map(|i| conj.parts[i] - i - 1).collect(),
        }
    }

    /// True iff `inner_i ≤ self_i` for every row.
    pub fn contains(&self, inner: &YoungDiagram) -> bool {
        inner.rows() <= self.rows() && inner.parts.iter().zip(&self.parts).all(|(i, o)| i <= o)
    }

    /// Hook length of the box in row `i`, column `j` (both 0-based).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.parts[i] - j - 1;
        let leg = self.parts[i + 1..].iter().take_while(|&&p| p > j).count();
        arm + leg + 1
    }

    pub fn hook_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(move |(i, &p)| (0..p).map(move |j| self.hook_length(i, j)))
    }

    pub fn to_conjugacy(&self) -> ConjugacyClass {
        let mut multiplicities = BTreeMap::new();
        for &p in &self.parts {
            *multiplicities.entry(p).or_insert(0) += 1;
        }
        ConjugacyClass { multiplicities }
    }

    /// Renders one line per part, shortest row first.
    pub fn draw(&self, symbol_index: usize) -> Result<String, PartitionError> {
        let symbol = DRAW_SYMBOLS
            .get(symbol_index)
            .ok_or(PartitionError::SymbolIndex(symbol_index))?;
        let lines: Vec<String> = self
            .parts
            .iter()
            .rev()
            .map(|&p| vec![*symbol; p].join(" "))
            .collect();
        Ok(lines.join("\n"))
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({}|{})", join(&self.arms), join(&self.legs))
    }
}

/// Cycle-type multiplicities `{j → k_j}`; only nonzero counts are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ConjugacyClass {
    multiplicities: BTreeMap<usize, usize>,
}

impl ConjugacyClass {
    /// Validates a multiplicity map. Zero counts are accepted and dropped.
    pub fn new<I>(entries: I) -> Result<Self, PartitionError>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut multiplicities = BTreeMap::new();
        for (cycle, count) in entries {
            if cycle <= 0 {
                return Err(PartitionError::NonPositiveCycle(cycle));
            }
            if count < 0 {
                return Err(PartitionError::NegativeMultiplicity { cycle, count });
            }
            if count > 0 {
                *multiplicities.entry(cycle as usize).or_insert(0) += count as usize;
            }
        }
        Ok(Self { multiplicities })
    }

    pub fn multiplicities(&self) -> &BTreeMap<usize, usize> {
        &self.multiplicities
    }

    /// Count `k_j` of cycles of length `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.multiplicities.get(&j).copied().unwrap_or(0)
    }

    /// `N = Σ j·k_j`.
    pub fn weight(&self) -> usize {
        self.multiplicities.iter().map(|(j, k)| j * k).sum()
    }

    /// Number of cycles `ℓ(μ) = Σ k_j`.
    pub fn length(&self) -> usize {
        self.multiplicities.values().sum()
    }

    /// Cycle lengths in decreasing order.
    pub fn cycles_descending(&self) -> Vec<usize> {
        self.multiplicities
            .iter()
            .rev()
            .flat_map(|(&j, &k)| std::iter::repeat_n(j, k))
            .collect()
    }

    pub fn to_young(&self) -> YoungDiagram {
        YoungDiagram {
            parts: self.cycles_descending(),
        }
    }

    pub fn draw(&self, symbol_index: usize) -> Result<String, PartitionError> {
        self.to_young().draw(symbol_index)
    }
}

impl From<&YoungDiagram> for ConjugacyClass {
    fn from(d: &YoungDiagram) -> Self {
        d.to_conjugacy()
    }
}

impl From<&ConjugacyClass> for YoungDiagram {
    fn from(c: &ConjugacyClass) -> Self {
        c.to_young()
    }
}

impl fmt::Display for ConjugacyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (j, k)) in self.multiplicities.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{j}: {k}")?;
        }
        write!(f, "}}")
    }
}

/// Streaming ACCELASC generator over the partitions of `n`.
///
/// Internally produces ascending compositions `a_1 ≤ a_2 ≤ … ≤ a_k`; each
/// one is yielded as the reversed, weakly decreasing diagram.
#[derive(Debug, Clone)]
pub struct AscendingPartitions {
    a: Vec<usize>,
    k: usize,
    x: usize,
    y: usize,
    state: AccelState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AccelState {
    Empty,
    Outer,
    Inner,
    Done,
}

impl AscendingPartitions {
    pub fn new(n: usize) -> Self {
        if n == 0 {
            return Self {
                a: Vec::new(),
                k: 0,
                x: 0,
                y: 0,
                state: AccelState::Empty,
            };
        }
        Self {
            a: vec![0; n + 1],
            k: 1,
            x: 0,
            y: n - 1,
            state: AccelState::Outer,
        }
    }

    /// Advances the generator and returns the next ascending composition.
    pub fn next_ascending(&mut self) -> Option<&[usize]> {
        loop {
            match self.state {
                AccelState::Empty => {
                    self.state = AccelState::Done;
                    return Some(&[]);
                }
                AccelState::Done => return None,
                AccelState::Outer => {
                    if self.k == 0 {
                        self.state = AccelState::Done;
                        return None;
                    }
                    self.x = self.a[self.k - 1] + 1;
                    self.k -= 1;
                    while 2 * self.x <= self.y {
                        self.a[self.k] = self.x;
                        self.y -= self.x;
                        self.k += 1;
                    }
                    self.state = AccelState::Inner;
                }
                AccelState::Inner => {
                    let k = self.k;
                    if self.x <= self.y {
                        self.a[k] = self.x;
                        self.a[k + 1] = self.y;
                        self.x += 1;
                        self.y -= 1;
                        return Some(&self.a[..k + 2]);
                    }
                    self.a[k] = self.x + self.y;
                    self.y = self.x + self.y - 1;
                    self.state = AccelState::Outer;
                    return Some(&self.a[..k + 1]);
                }
            }
        }
    }
}

impl Iterator for AscendingPartitions {
    type Item = YoungDiagram;

    fn next(&mut self) -> Option<YoungDiagram> {
        self.next_ascending().map(|asc| YoungDiagram {
            parts: asc.iter().rev().copied().collect(),
        })
    }
}

/// All partitions of `n` in ACCELASC order.
pub fn enumerate_partitions(n: usize) -> Vec<YoungDiagram> {
    AscendingPartitions::new(n).collect()
}

/// All partitions with at most `max_boxes` boxes, by increasing size.
pub fn partitions_up_to(max_boxes: usize) -> Vec<YoungDiagram> {
    (0..=max_boxes).flat_map(enumerate_partitions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn yd(parts: &[usize]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    // Independent counting oracle: p(n) via the standard coin-change DP.
    fn partition_count_dp(n: usize) -> u64 {
        let mut ways = vec![0u64; n + 1];
        ways[0] = 1;
        for part in 1..=n {
            for total in part..=n {
                ways[total] += ways[total - part];
            }
        }
        ways[n]
    }

    // Independent enumeration oracle: naive recursion on the largest part.
    fn naive_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in naive_partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn make_partition_examples() {
        assert_eq!(make_partition(&[3, 2, 1]).unwrap().parts(), &[3, 2, 1]);
        assert!(make_partition(&[]).unwrap().is_empty());
        assert_eq!(
            make_partition(&[3, 2, 1, 0, 0]).unwrap().parts(),
            &[3, 2, 1]
        );
        assert_eq!(make_partition(&[0, 0]).unwrap(), YoungDiagram::empty());
    }

    #[test]
    fn make_partition_rejects() {
        assert!(matches!(
            make_partition(&[3, -1]),
            Err(PartitionError::NegativePart {
                position: 1,
                value: -1
            })
        ));
        assert!(matches!(
            make_partition(&[1, 2]),
            Err(PartitionError::Increasing {
                previous: 1,
                next: 2
            })
        ));
        assert!(make_partition(&[2, 0, 1]).is_err());
    }

    #[test]
    fn conjugacy_examples() {
        let c = yd(&[3, 2, 1]).to_conjugacy();
        assert_eq!(c, ConjugacyClass::new([(1, 1), (2, 1), (3, 1)]).unwrap());
        assert_eq!(
            YoungDiagram::empty().to_conjugacy(),
            ConjugacyClass::default()
        );
        let c = yd(&[2, 2, 2]).to_conjugacy();
        assert_eq!(
            c.multiplicities().iter().collect::<Vec<_>>(),
            vec![(&2, &3)]
        );
        assert_eq!(c.weight(), 6);

        let back = ConjugacyClass::new([(1, 1), (2, 1), (3, 1)])
            .unwrap()
            .to_young();
        assert_eq!(back, yd(&[3, 2, 1]));
        assert_eq!(ConjugacyClass::default().to_young(), YoungDiagram::empty());
        assert_eq!(
            ConjugacyClass::new([(2, 3)]).unwrap().to_young(),
            yd(&[2, 2, 2])
        );
    }

    #[test]
    fn conjugacy_validation() {
        assert!(matches!(
            ConjugacyClass::new([(0, 1)]),
            Err(PartitionError::NonPositiveCycle(0))
        ));
        assert!(matches!(
            ConjugacyClass::new([(-2, 1)]),
            Err(PartitionError::NonPositiveCycle(-2))
        ));
        assert!(ConjugacyClass::new([(2, -1)]).is_err());
        let c = ConjugacyClass::new([(1, 2), (4, 0)]).unwrap();
        assert_eq!(c.multiplicities().len(), 1);
        assert_eq!(c.multiplicity(4), 0);
    }

    #[test]
    fn profile_examples() {
        let p = yd(&[3, 2, 1]).profile();
        assert_eq!((p.rows, p.columns, p.boxes, p.diagonal), (3, 3, 6, 2));
        let p = YoungDiagram::empty().profile();
        assert_eq!((p.rows, p.columns, p.boxes, p.diagonal), (0, 0, 0, 0));
        let p = yd(&[5]).profile();
        assert_eq!((p.rows, p.columns, p.boxes, p.diagonal), (1, 5, 5, 1));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(yd(&[3, 2, 1]).transpose(), yd(&[3, 2, 1]));
        assert_eq!(yd(&[3, 1]).transpose(), yd(&[2, 1, 1]));
        assert_eq!(YoungDiagram::empty().transpose(), YoungDiagram::empty());
    }

    #[test]
    fn frobenius_examples() {
        let f = yd(&[3, 2, 1]).frobenius();
        assert_eq!((f.arms, f.legs), (vec![2, 0], vec![2, 0]));
        let f = YoungDiagram::empty().frobenius();
        assert!(f.arms.is_empty() && f.legs.is_empty());
        let f = yd(&[4, 1]).frobenius();
        assert_eq!((f.arms, f.legs), (vec![3], vec![1]));
        assert_eq!(yd(&[4, 1]).frobenius().to_string(), "(3|1)");
    }

    #[test]
    fn contains_examples() {
        assert!(yd(&[3, 2, 1]).contains(&yd(&[1])));
        assert!(yd(&[3, 2, 1]).contains(&yd(&[3, 2, 1])));
        assert!(!yd(&[2, 2]).contains(&yd(&[3])));
        assert!(!yd(&[2]).contains(&yd(&[1, 1])));
        assert!(yd(&[2]).contains(&YoungDiagram::empty()));
    }

    #[test]
    fn draw_examples() {
        assert_eq!(yd(&[3, 2, 1]).draw(4).unwrap(), "#\n# #\n# # #");
        for i in 0..5 {
            assert_eq!(YoungDiagram::empty().draw(i).unwrap(), "");
        }
        assert_eq!(yd(&[2, 2]).draw(4).unwrap(), "# #\n# #");
        assert_eq!(yd(&[2, 1]).draw(0).unwrap(), "*\n* *");
        assert!(matches!(
            yd(&[1]).draw(5),
            Err(PartitionError::SymbolIndex(5))
        ));
        let c = ConjugacyClass::new([(1, 1), (2, 1), (3, 1)]).unwrap();
        assert_eq!(c.draw(4).unwrap(), yd(&[3, 2, 1]).draw(4).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(0), vec![YoungDiagram::empty()]);
        assert_eq!(enumerate_partitions(6).len(), 11);
        assert_eq!(enumerate_partitions(30).len(), 5604);
        let order: Vec<String> = enumerate_partitions(4)
            .iter()
            .map(|d| d.to_string())
            .collect();
        assert_eq!(order, ["(1,1,1,1)", "(2,1,1)", "(3,1)", "(2,2)", "(4)"]);
    }

    #[test]
    fn enumeration_matches_naive_oracle() {
        for n in 0..=12 {
            let got: HashSet<Vec<usize>> = enumerate_partitions(n)
                .into_iter()
                .map(|d| d.parts().to_vec())
                .collect();
            let want: HashSet<Vec<usize>> = naive_partitions(n, n).into_iter().collect();
            assert_eq!(got, want, "n = {n}");
        }
    }

    #[test]
    fn enumeration_counts_match_dp() {
        for n in 0..=45 {
            let all = enumerate_partitions(n);
            assert_eq!(all.len() as u64, partition_count_dp(n), "n = {n}");
            let distinct: HashSet<&YoungDiagram> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|d| d.boxes() == n));
        }
    }

    #[test]
    fn exhaustive_structural_properties() {
        for n in 0..=14 {
            for d in enumerate_partitions(n) {
                assert_eq!(d.to_conjugacy().to_young(), d);
                let t = d.transpose();
                assert_eq!(t.transpose(), d);
                let (p, pt) = (d.profile(), t.profile());
                assert_eq!((pt.rows, pt.columns), (p.columns, p.rows));
                assert_eq!((pt.boxes, pt.diagonal), (p.boxes, p.diagonal));
                assert!(p.diagonal <= p.rows.min(p.columns));
                let f = d.frobenius();
                let ft = t.frobenius();
                assert_eq!((ft.arms, ft.legs), (f.legs.clone(), f.arms.clone()));
                let total: usize = f.arms.iter().zip(&f.legs).map(|(a, b)| a + b + 1).sum();
                assert_eq!(total, n);
                assert!(f.arms.windows(2).all(|w| w[0] > w[1]));
                assert!(f.legs.windows(2).all(|w| w[0] > w[1]));
                assert_eq!(d.hook_lengths().count(), n);
            }
        }
    }

    #[test]
    fn containment_is_partial_order() {
        let all = partitions_up_to(7);
        for a in &all {
            assert!(a.contains(a));
            for b in &all {
                if a.contains(b) && b.contains(a) {
                    assert_eq!(a, b);
                }
                if !a.contains(b) {
                    continue;
                }
                for c in &all {
                    if b.contains(c) {
                        assert!(a.contains(c));
                    }
                }
            }
        }
    }

    #[test]
    fn hook_lengths_of_staircase() {
        let mut hooks: Vec<usize> = yd(&[3, 2, 1]).hook_lengths().collect();
        hooks.sort_unstable();
        assert_eq!(hooks, vec![1, 1, 1, 3, 3, 5]);
    }
}
