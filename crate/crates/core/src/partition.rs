//! Integer partitions / Young diagrams.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored, so structural equality is equality of diagrams.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates `parts`; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Single row `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// Single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Row length `λ_i` with 0-based `i`; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Column length `λ'_j` for 1-based `j`.
    pub fn column_length(&self, j: usize) -> usize {
        debug_assert!(j >= 1);
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Hook lengths, row by row, left to right.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.transpose();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push((row - j - 1) + (conj.parts[j] - i - 1) + 1);
            }
        }
        hooks
    }

    /// Multiplicity `m_i(λ)` of the part value `i`.
    pub fn multiplicity(&self, value: usize) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// `(value, multiplicity)` pairs for the distinct part values, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z_factor(&self) -> BigInt {
        let mut z = BigInt::one();
        for (value, mult) in self.multiplicities() {
            for k in 1..=mult {
                z *= BigInt::from(value) * BigInt::from(k);
            }
        }
        z
    }

    /// 1-based `(row, column)` cells where a box can be added, sorted by row.
    pub fn addable_corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let here = self.part(i);
            if i == 0 || self.part(i - 1) > here {
                out.push((i + 1, here + 1));
            }
        }
        out
    }

    /// 1-based `(row, column)` cells whose removal leaves a partition, sorted by row.
    pub fn removable_corners(&self) -> Vec<(usize, usize)> {
        (0..self.parts.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i + 1, self.parts[i]))
            .collect()
    }

    /// Adds a box at the end of 1-based `row`; `None` if that is not a corner.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        let i = row.checked_sub(1)?;
        if i > self.parts.len() || (i > 0 && self.part(i - 1) == self.part(i)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if i == parts.len() {
            parts.push(1);
        } else {
            parts[i] += 1;
        }
        Some(Partition { parts })
    }

    /// Removes the last box of 1-based `row`; `None` if that is not a corner.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        let i = row.checked_sub(1)?;
        if i >= self.parts.len() || self.part(i) == self.part(i + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        if parts[i] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// All partitions obtained by adding one box, in row order.
    pub fn successors(&self) -> Vec<Partition> {
        self.addable_corners()
            .into_iter()
            .filter_map(|(r, _)| self.add_box(r))
            .collect()
    }

    /// All partitions obtained by removing one box, in row order.
    pub fn predecessors(&self) -> Vec<Partition> {
        self.removable_corners()
            .into_iter()
            .filter_map(|(r, _)| self.remove_box(r))
            .collect()
    }

    /// If `larger` is `self` plus exactly one box, its 1-based `(row, column)`.
    pub fn added_box(&self, larger: &Partition) -> Option<(usize, usize)> {
        if larger.size() != self.size() + 1 || larger.len() > self.len() + 1 {
            return None;
        }
        let mut found = None;
        for i in 0..larger.len() {
            match larger.part(i).checked_sub(self.part(i)) {
                Some(0) => {}
                Some(1) if found.is_none() => found = Some((i + 1, larger.part(i))),
                _ => return None,
            }
        }
        found
    }

    /// Dominance order `λ ≤ μ`; both must have the same size.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.to_string(),
                left_size: self.size(),
                right: other.to_string(),
                right_size: other.size(),
            });
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(nλ_1, nλ_2, …)`.
    pub fn scaled(&self, factor: usize) -> Partition {
        Partition::from_unsorted(self.parts.iter().map(|p| p * factor).collect())
    }

    /// Concatenation of parts, re-sorted (product of power sums `p_λ p_μ`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Partitions {
        Partitions {
            next: Some(Partition::row(n)),
        }
    }

    /// All partitions of every size `0..=max`, grouped by size.
    pub fn up_to(max: usize) -> impl Iterator<Item = Partition> {
        (0..=max).flat_map(Partition::all)
    }
}

/// Iterator over the partitions of a fixed integer.
pub struct Partitions {
    next: Option<Partition>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let parts = &current.parts;
        // rightmost part larger than one
        if let Some(k) = parts.iter().rposition(|&p| p > 1) {
            let mut next: Vec<usize> = parts[..k].to_vec();
            let v = parts[k] - 1;
            let mut rest = parts[k + 1..].len() + 1;
            next.push(v);
            while rest > 0 {
                let take = rest.min(v);
                next.push(take);
                rest -= take;
            }
            self.next = Some(Partition { parts: next });
        }
        Some(current)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `"3,1,1"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                let p = p.trim();
                if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) || p.len() > 6 {
                    None
                } else {
                    p.parse::<usize>().ok().filter(|&v| v > 0)
                }
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidPartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::InvalidPartition(s.to_string()))
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
