//! Census of one-step unipotent extensions, classified by Jordan type.
//!
//! For `h = [[g, v], [0, 1]]` with `g = I + N` unipotent,
//! `(h - I)^k = [[N^k, N^{k-1} v], [0, 0]]`, so
//! `rank (h - I)^k = rank N^k + [N^{k-1} v ∉ col N^k]`. Column spaces of
//! the powers of `N` are tabulated once per `g`, after which each of the
//! `q^n` extensions costs a handful of table lookups.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use super::classes::{ext_enumerate, unipotent_class_of, ExtVariant};
use super::field::FqField;
use super::matrix::FqMatrix;
use crate::error::{Error, Result};
use crate::measures::extension_count;
use crate::partition::Partition;
use crate::rational::Rational;

struct NilpotentTables {
    n: usize,
    q: usize,
    apply: Vec<u32>,
    in_col: Vec<Vec<bool>>,
    rank: Vec<usize>,
}

impl NilpotentTables {
    fn new(field: &FqField, n: usize, entries: &[u8]) -> Self {
        let q = field.order();
        let size = q.pow(n as u32);
        let mut apply = vec![0u32; size];
        let mut v = vec![0u8; n];
        for (code, slot) in apply.iter_mut().enumerate() {
            let mut c = code;
            for x in v.iter_mut() {
                *x = (c % q) as u8;
                c /= q;
            }
            let mut out = 0usize;
            for i in (0..n).rev() {
                let row = &entries[i * n..(i + 1) * n];
                let y = row
                    .iter()
                    .zip(&v)
                    .fold(0u8, |acc, (&a, &b)| field.add(acc, field.mul(a, b)));
                out = out * q + y as usize;
            }
            *slot = out as u32;
        }
        let mut in_col = vec![vec![true; size]];
        let mut rank = vec![n];
        let mut images: Vec<u32> = (0..size as u32).collect();
        for _ in 1..=n {
            let mut col = vec![false; size];
            for x in images.iter_mut() {
                *x = apply[*x as usize];
                col[*x as usize] = true;
            }
            let count = col.iter().filter(|&&b| b).count();
            rank.push(log_q(count, q));
            in_col.push(col);
        }
        NilpotentTables {
            n,
            q,
            apply,
            in_col,
            rank,
        }
    }

    fn is_nilpotent(&self) -> bool {
        self.rank[self.n] == 0
    }

    fn jordan_type(&self) -> Partition {
        let cols: Vec<usize> = (1..=self.n)
            .map(|k| self.rank[k - 1] - self.rank[k])
            .filter(|&c| c > 0)
            .collect();
        Partition::new(cols).expect("kernel jumps decrease").transpose()
    }

    /// Kernel jumps of `[[N, v], [0, 0]]` (the column lengths of the
    /// extended Jordan type), packed four bits per column.
    fn extended_key(&self, v: usize) -> u64 {
        let n = self.n;
        let mut y = v;
        let mut prev_kernel = 0;
        let mut key = 0u64;
        for k in 1..=n + 1 {
            let (base_rank, member) = if k <= n {
                (self.rank[k], self.in_col[k][y])
            } else {
                (0, y == 0)
            };
            let kernel = n + 1 - base_rank - usize::from(!member);
            if kernel == prev_kernel {
                break;
            }
            key |= ((kernel - prev_kernel) as u64) << (4 * (k - 1));
            prev_kernel = kernel;
            y = self.apply[y] as usize;
        }
        key
    }

    fn extension_counts(&self) -> BTreeMap<Partition, u64> {
        let mut tally: Vec<(u64, u64)> = Vec::new();
        for v in 0..self.q.pow(self.n as u32) {
            let key = self.extended_key(v);
            match tally.iter_mut().find(|(k, _)| *k == key) {
                Some((_, c)) => *c += 1,
                None => tally.push((key, 1)),
            }
        }
        tally
            .into_iter()
            .map(|(mut key, c)| {
                let mut cols = Vec::new();
                while key != 0 {
                    cols.push((key & 0xf) as usize);
                    key >>= 4;
                }
                let mu = Partition::new(cols).expect("kernel jumps decrease").transpose();
                (mu, c)
            })
            .collect()
    }
}

fn log_q(mut count: usize, q: usize) -> usize {
    let mut k = 0;
    while count > 1 {
        count /= q;
        k += 1;
    }
    k
}

/// Jordan types of the `q^n` GLU extensions of a unipotent `g`, tallied,
/// through the column-space tables.
pub fn extension_type_counts(g: &FqMatrix) -> Result<BTreeMap<Partition, u64>> {
    let n = g.rows();
    let nil = g.sub(&FqMatrix::identity(g.field(), n));
    let entries: Vec<u8> = (0..n).flat_map(|i| nil.row(i).to_vec()).collect();
    let tables = NilpotentTables::new(g.field(), n, &entries);
    if !tables.is_nilpotent() {
        return Err(Error::Matrix("matrix is not unipotent".into()));
    }
    Ok(tables.extension_counts())
}

/// The same tally by explicit enumeration of the extensions.
pub fn extension_type_counts_brute(g: &FqMatrix) -> Result<BTreeMap<Partition, u64>> {
    let mut counts = BTreeMap::new();
    for h in ext_enumerate(g, ExtVariant::Glu)? {
        *counts.entry(unipotent_class_of(&h)?).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Outcome of checking every unipotent element of `GL(n, q)`.
#[derive(Clone, Debug, Default)]
pub struct ExtensionCensus {
    /// Number of unipotent elements visited, per Jordan type.
    pub elements: BTreeMap<Partition, u64>,
    /// Human-readable descriptions of elements whose tallies disagree
    /// with `N_{λ,μ}`.
    pub mismatches: Vec<String>,
}

impl ExtensionCensus {
    pub fn total(&self) -> u64 {
        self.elements.values().sum()
    }
}

/// Visits every nilpotent `n × n` matrix (entries row-major). The last
/// diagonal entry is forced to make the trace vanish.
fn for_each_nilpotent(field: &FqField, n: usize, mut visit: impl FnMut(&[u8], &NilpotentTables)) {
    if n == 0 {
        let t = NilpotentTables::new(field, 0, &[]);
        visit(&[], &t);
        return;
    }
    assert!(n <= 8, "nilpotent enumeration is limited to n <= 8");
    let q = field.order();
    let free: Vec<usize> = (0..n * n).filter(|&c| c != n * n - 1).collect();
    let mut entries = vec![0u8; n * n];
    let mut scratch = vec![0u8; n * n];
    q.checked_pow(free.len() as u32).expect("too many matrices");
    loop {
        let partial = (0..n - 1).fold(0u8, |acc, i| field.add(acc, entries[i * n + i]));
        entries[n * n - 1] = field.neg(partial);
        if power_vanishes(field, n, &entries, &mut scratch) {
            let tables = NilpotentTables::new(field, n, &entries);
            visit(&entries, &tables);
        }
        // odometer step over the free cells
        let mut carry = true;
        for &cell in &free {
            if entries[cell] as usize + 1 < q {
                entries[cell] += 1;
                carry = false;
                break;
            }
            entries[cell] = 0;
        }
        if carry {
            return;
        }
    }
}

/// `N^n = 0`, by repeated squaring. The sum of principal 2×2 minors
/// must vanish for a nilpotent matrix, which rejects most candidates first.
fn power_vanishes(field: &FqField, n: usize, entries: &[u8], scratch: &mut [u8]) -> bool {
    let mut e2 = 0u8;
    for i in 0..n {
        for j in i + 1..n {
            let diag = field.mul(entries[i * n + i], entries[j * n + j]);
            let off = field.mul(entries[i * n + j], entries[j * n + i]);
            e2 = field.add(e2, field.sub(diag, off));
        }
    }
    if e2 != 0 {
        return false;
    }
    let mut power = [0u8; 64];
    power[..n * n].copy_from_slice(entries);
    let mut exp = 1;
    while exp < n {
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u8;
                for k in 0..n {
                    let a = power[i * n + k];
                    if a != 0 {
                        acc = field.add(acc, field.mul(a, power[k * n + j]));
                    }
                }
                scratch[i * n + j] = acc;
            }
        }
        power[..n * n].copy_from_slice(scratch);
        exp *= 2;
    }
    power[..n * n].iter().all(|&x| x == 0)
}

/// Checks, for every unipotent `g ∈ GL(n, q)`, that exactly
/// `N_{λ,μ}` of its `q^n` extensions have Jordan type `μ`.
pub fn glu_extension_census(field: &FqField, n: usize) -> ExtensionCensus {
    let q = Rational::from_integer(field.q().into());
    let mut expected: BTreeMap<Partition, BTreeMap<Partition, u64>> = BTreeMap::new();
    for lambda in Partition::all(n) {
        let row = lambda
            .successors()
            .into_iter()
            .filter_map(|mu| {
                let c = extension_count(&lambda, &mu, &q).expect("sizes match");
                let c = c.to_integer().to_u64().expect("non-negative integer count");
                (c > 0).then_some((mu, c))
            })
            .collect();
        expected.insert(lambda, row);
    }
    let mut census = ExtensionCensus::default();
    for_each_nilpotent(field, n, |entries, tables| {
        let lambda = tables.jordan_type();
        let counts = tables.extension_counts();
        if counts != expected[&lambda] {
            census
                .mismatches
                .push(format!("N = {entries:?} of type {lambda:?}: {counts:?}"));
        }
        *census.elements.entry(lambda).or_insert(0) += 1;
    });
    census
}
