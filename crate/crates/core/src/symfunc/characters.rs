//! Symmetric group characters by the Murnaghan–Nakayama rule.

use std::collections::HashMap;

use crate::partition::Partition;

/// Memoizing evaluator of `χ^λ_ρ`.
#[derive(Default)]
pub struct CharacterTable {
    memo: HashMap<(Partition, Partition), i64>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ_ρ`; zero when the sizes differ.
    pub fn value(&mut self, lambda: &Partition, rho: &Partition) -> i64 {
        if lambda.size() != rho.size() {
            return 0;
        }
        if rho.is_empty() {
            return 1;
        }
        let key = (lambda.clone(), rho.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        // strip the largest part of ρ as a rim hook
        let k = rho.part(0);
        let rest = Partition::new(rho.parts()[1..].to_vec()).expect("suffix of a partition");
        let value = remove_rim_hooks(lambda, k)
            .into_iter()
            .map(|(sign, inner)| sign * self.value(&inner, &rest))
            .sum();
        self.memo.insert(key, value);
        value
    }
}

/// Every way to remove a rim hook of length `k` from `λ`, as
/// `(sign = (-1)^{height}, remaining partition)`.
pub fn remove_rim_hooks(lambda: &Partition, k: usize) -> Vec<(i64, Partition)> {
    let len = lambda.len();
    // beta numbers β_i = λ_i + (len - 1 - i), strictly decreasing
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let Some(target) = b.checked_sub(k) else { continue };
        if beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts = (0..len).map(|j| next[j] - (len - 1 - j)).collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::from_unsorted(parts)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(parts: [usize; N]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn s3_table() {
        let mut t = CharacterTable::new();
        // rows (3), (2,1), (1,1,1); columns 1^3, (2,1), (3)
        let cols = [p([1, 1, 1]), p([2, 1]), p([3])];
        let expect = [[1, 1, 1], [2, 0, -1], [1, -1, 1]];
        for (lam, row) in [p([3]), p([2, 1]), p([1, 1, 1])].iter().zip(expect) {
            for (rho, want) in cols.iter().zip(row) {
                assert_eq!(t.value(lam, rho), want, "{lam:?} {rho:?}");
            }
        }
    }

    #[test]
    fn dimensions_match_hook_formula() {
        let mut t = CharacterTable::new();
        for n in 1..=9usize {
            let fact: u64 = (1..=n as u64).product();
            for lam in Partition::all(n) {
                let hooks: u64 = lam.hook_lengths().iter().map(|&h| h as u64).product();
                assert_eq!(t.value(&lam, &Partition::column(n)), (fact / hooks) as i64);
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        // Σ_λ χ^λ_ρ χ^λ_σ = z_ρ δ_{ρσ}
        let mut t = CharacterTable::new();
        for n in 1..=7 {
            let parts: Vec<_> = Partition::all(n).collect();
            for rho in &parts {
                for sigma in &parts {
                    let s: i64 = parts
                        .iter()
                        .map(|l| t.value(l, rho) * t.value(l, sigma))
                        .sum();
                    let want = if rho == sigma {
                        rho.z_factor().try_into().unwrap()
                    } else {
                        0
                    };
                    assert_eq!(s, want);
                }
            }
        }
    }
}
