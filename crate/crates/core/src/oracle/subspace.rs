use std::collections::BTreeMap;

use super::field::FqField;
use super::matrix::{row_reduce, FqMatrix};

/// A subspace of `F_q^n` stored by its reduced row-echelon basis, which is
/// canonical: equal subspaces have identical bases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubspaceBasis {
    n: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    /// Span of arbitrary vectors of length `n`.
    pub fn span(field: &FqField, n: usize, vectors: &[Vec<u8>]) -> Self {
        let data: Vec<u8> = vectors.iter().flatten().copied().collect();
        let rows = row_reduce(field, data, vectors.len(), n);
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero row"))
            .collect();
        SubspaceBasis { n, rows, pivots }
    }

    pub fn whole(field: &FqField, n: usize) -> Self {
        let basis: Vec<Vec<u8>> = (0..n)
            .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
            .collect();
        Self::span(field, n, &basis)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn contains_vector(&self, field: &FqField, v: &[u8]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = field.sub(*x, field.mul(c, r));
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn contains(&self, field: &FqField, other: &SubspaceBasis) -> bool {
        other.dim() <= self.dim() && other.rows.iter().all(|v| self.contains_vector(field, v))
    }

    /// `mX = X` (for invertible `m`, `mX ⊆ X` suffices).
    pub fn is_invariant(&self, m: &FqMatrix) -> bool {
        let f = m.field();
        self.rows.iter().all(|v| self.contains_vector(f, &m.apply(v)))
    }
}

/// Every `d`-dimensional subspace of `F_q^n`, generated directly from
/// pivot patterns: pivot columns carry the identity, free entries sit to
/// the right of each pivot in non-pivot columns.
pub fn subspaces(field: &FqField, n: usize, d: usize) -> Vec<SubspaceBasis> {
    let mut out = Vec::new();
    if d > n {
        return out;
    }
    let mut pivots = Vec::with_capacity(d);
    pivot_sets(n, d, 0, &mut pivots, &mut |pivots| {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                (p + 1..n)
                    .filter(|c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let q = field.order();
        let total = q.pow(free.len() as u32);
        for code in 0..total {
            let mut rows = vec![vec![0u8; n]; d];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            let mut c = code;
            for &(r, col) in &free {
                rows[r][col] = (c % q) as u8;
                c /= q;
            }
            out.push(SubspaceBasis {
                n,
                rows,
                pivots: pivots.to_vec(),
            });
        }
    });
    out
}

fn pivot_sets(n: usize, d: usize, start: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if cur.len() == d {
        visit(cur);
        return;
    }
    for p in start..n {
        if n - p < d - cur.len() {
            break;
        }
        cur.push(p);
        pivot_sets(n, d, p + 1, cur, visit);
        cur.pop();
    }
}

/// `g`-invariant subspaces of dimension `d`.
pub fn invariant_subspaces(m: &FqMatrix, d: usize) -> Vec<SubspaceBasis> {
    subspaces(m.field(), m.rows(), d)
        .into_iter()
        .filter(|x| x.is_invariant(m))
        .collect()
}

/// `#{X : dim X = d, mX = X}`.
pub fn count_fixed_subspaces(m: &FqMatrix, d: usize) -> u64 {
    invariant_subspaces(m, d).len() as u64
}

/// Number of `m`-invariant flags `V_1 ⊂ … ⊂ V_r` with
/// `dim V_k = μ_1 + … + μ_k`.
///
/// Invariant subspaces are listed per required dimension and chains are
/// counted level by level through containment.
pub fn count_fixed_flags(m: &FqMatrix, mu: &[usize]) -> u64 {
    let n = m.rows();
    if mu.iter().sum::<usize>() != n {
        return 0;
    }
    let f = m.field();
    let mut level: Vec<(SubspaceBasis, u64)> = vec![(SubspaceBasis::span(f, n, &[]), 1)];
    let mut dim = 0;
    for &part in mu {
        dim += part;
        let next: Vec<(SubspaceBasis, u64)> = invariant_subspaces(m, dim)
            .into_iter()
            .map(|w| {
                let count = level
                    .iter()
                    .filter(|(v, _)| w.contains(f, v))
                    .map(|(_, c)| c)
                    .sum();
                (w, count)
            })
            .filter(|(_, c)| *c > 0)
            .collect();
        level = next;
    }
    level.iter().map(|(_, c)| c).sum()
}

/// Schubert symbol `x_i = dim(X ∩ V_i) - dim(X ∩ V_{i-1})` with
/// `V_i = span(e_1, …, e_i)`.
pub fn schubert_symbol(field: &FqField, x: &SubspaceBasis) -> Vec<u8> {
    let n = x.ambient();
    let mut prev = 0;
    (1..=n)
        .map(|i| {
            let mut vectors = x.basis().to_vec();
            vectors.extend((0..i).map(|k| (0..n).map(|j| u8::from(j == k)).collect()));
            let sum_dim = SubspaceBasis::span(field, n, &vectors).dim();
            let meet = x.dim() + i - sum_dim;
            let jump = (meet - prev) as u8;
            prev = meet;
            jump
        })
        .collect()
}

/// Number of subspaces of `F_q^n` whose Schubert symbol is `x`.
pub fn schubert_cell_count(field: &FqField, x: &[u8]) -> u64 {
    let n = x.len();
    let d = x.iter().filter(|&&b| b == 1).count();
    subspaces(field, n, d)
        .iter()
        .filter(|s| schubert_symbol(field, s) == x)
        .count() as u64
}

/// Subspaces of `F_q^n` of every dimension, tallied by Schubert symbol.
pub fn schubert_histogram(field: &FqField, n: usize) -> BTreeMap<Vec<u8>, u64> {
    let mut out = BTreeMap::new();
    for d in 0..=n {
        for s in subspaces(field, n, d) {
            *out.entry(schubert_symbol(field, &s)).or_insert(0) += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian_binomial(n: usize, k: usize, q: u64) -> u64 {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num *= q.pow((n - i) as u32) - 1;
            den *= q.pow((i + 1) as u32) - 1;
        }
        num / den
    }

    #[test]
    fn subspace_counts_are_gaussian_binomials() {
        for q in [2u32, 3, 4] {
            let f = FqField::get(q).unwrap();
            for n in 0..=4 {
                for d in 0..=n {
                    let subs = subspaces(f, n, d);
                    assert_eq!(subs.len() as u64, gaussian_binomial(n, d, q as u64));
                    let mut dedup = subs.clone();
                    dedup.sort_by(|a, b| a.rows.cmp(&b.rows));
                    dedup.dedup();
                    assert_eq!(dedup.len(), subs.len());
                    for s in &subs {
                        assert_eq!(SubspaceBasis::span(f, n, s.basis()), *s);
                    }
                }
            }
        }
        let f = FqField::get(2).unwrap();
        let total: usize = (0..=4).map(|d| subspaces(f, 4, d).len()).sum();
        assert_eq!(total, 67);
    }

    #[test]
    fn fixed_subspace_examples() {
        let f = FqField::get(2).unwrap();
        let id = FqMatrix::identity(f, 2);
        let u = FqMatrix::from_rows(f, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(count_fixed_subspaces(&id, 1), 3);
        assert_eq!(count_fixed_subspaces(&u, 1), 1);
        assert_eq!(count_fixed_subspaces(&u, 0), 1);
        assert_eq!(count_fixed_flags(&id, &[1, 1]), 3);
        assert_eq!(count_fixed_flags(&u, &[1, 1]), 1);
        assert_eq!(count_fixed_flags(&u, &[2]), 1);
    }

    #[test]
    fn full_flags_of_identity() {
        // [n]_q! complete flags
        let f = FqField::get(3).unwrap();
        let id = FqMatrix::identity(f, 3);
        assert_eq!(count_fixed_flags(&id, &[1, 1, 1]), 4 * 13);
        assert_eq!(count_fixed_flags(&id, &[2, 1]), 13);
    }

    #[test]
    fn schubert_examples() {
        let f = FqField::get(2).unwrap();
        assert_eq!(schubert_cell_count(f, &[1, 0, 0]), 1);
        assert_eq!(schubert_cell_count(f, &[0, 1]), 2);
        assert_eq!(schubert_cell_count(f, &[1, 1, 1]), 1);
    }
}
