//! Per-degree basis-change tables, built lazily and shared read-only.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::characters::CharacterTable;
use super::tableaux::kostka_foulkes;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::TPolynomial;
use crate::rational::Rational;

/// Largest degree for which Hall–Littlewood tables are built.
pub const HL_DEGREE_CAP: usize = 12;

pub struct DegreeTables {
    pub n: usize,
    /// All partitions of `n` in decreasing lexicographic order.
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `chars[λ][ρ] = χ^λ_ρ`.
    pub chars: Vec<Vec<i64>>,
    /// `z[ρ]`.
    pub z: Vec<BigInt>,
    kf: OnceLock<Vec<Vec<TPolynomial>>>,
    kf_inv: OnceLock<Vec<Vec<TPolynomial>>>,
    kf_inv_at: RwLock<HashMap<Rational, Arc<Vec<Vec<Rational>>>>>,
}

impl DegreeTables {
    fn build(n: usize) -> Self {
        let partitions: Vec<Partition> = Partition::all(n).collect();
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut table = CharacterTable::new();
        let chars = partitions
            .iter()
            .map(|lam| partitions.iter().map(|rho| table.value(lam, rho)).collect())
            .collect();
        let z = partitions.iter().map(Partition::z_factor).collect();
        DegreeTables {
            n,
            partitions,
            index,
            chars,
            z,
            kf: OnceLock::new(),
            kf_inv: OnceLock::new(),
            kf_inv_at: RwLock::new(HashMap::new()),
        }
    }

    pub fn index_of(&self, lambda: &Partition) -> usize {
        self.index[lambda]
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    /// `K[μ][λ] = K_{μ,λ}(t)`, upper unitriangular in the table order.
    pub fn kostka_foulkes_matrix(&self) -> &[Vec<TPolynomial>] {
        self.kf.get_or_init(|| {
            let m = self.len();
            let mut k = vec![vec![TPolynomial::zero(); m]; m];
            for (i, mu) in self.partitions.iter().enumerate() {
                for (j, lam) in self.partitions.iter().enumerate() {
                    if !lam.dominance_leq(mu).expect("same degree") {
                        continue;
                    }
                    assert!(i <= j, "order is not a linear extension of dominance");
                    k[i][j] = kostka_foulkes(mu, lam).expect("same degree");
                }
                assert_eq!(k[i][i], TPolynomial::one(), "K_{{μμ}}(t) must be 1");
            }
            k
        })
    }

    /// Exact inverse of the Kostka–Foulkes matrix over `Z[t]`.
    pub fn kostka_foulkes_inverse(&self) -> &[Vec<TPolynomial>] {
        self.kf_inv.get_or_init(|| {
            let k = self.kostka_foulkes_matrix();
            let m = self.len();
            let mut inv = vec![vec![TPolynomial::zero(); m]; m];
            for i in 0..m {
                inv[i][i] = TPolynomial::one();
                for j in i + 1..m {
                    let mut acc = TPolynomial::zero();
                    for l in i..j {
                        if !inv[i][l].is_zero() && !k[l][j].is_zero() {
                            acc = &acc + &(&inv[i][l] * &k[l][j]);
                        }
                    }
                    inv[i][j] = -&acc;
                }
            }
            inv
        })
    }

    /// The inverse Kostka–Foulkes matrix evaluated at a rational `t`.
    pub fn kostka_foulkes_inverse_at(&self, t: &Rational) -> Arc<Vec<Vec<Rational>>> {
        if let Some(hit) = self.kf_inv_at.read().expect("poisoned").get(t) {
            return hit.clone();
        }
        let k = self.kostka_foulkes_matrix();
        let m = self.len();
        let kt: Vec<Vec<Rational>> = k
            .iter()
            .map(|row| row.iter().map(|p| p.eval(t)).collect())
            .collect();
        let mut inv = vec![vec![Rational::zero(); m]; m];
        for i in 0..m {
            inv[i][i] = Rational::one();
            for j in i + 1..m {
                let mut acc = Rational::zero();
                for l in i..j {
                    if !inv[i][l].is_zero() && !kt[l][j].is_zero() {
                        acc += &inv[i][l] * &kt[l][j];
                    }
                }
                inv[i][j] = -acc;
            }
        }
        let inv = Arc::new(inv);
        self.kf_inv_at
            .write()
            .expect("poisoned")
            .insert(t.clone(), inv.clone());
        inv
    }
}

/// Shared tables for degree `n`.
pub fn tables(n: usize) -> Arc<DegreeTables> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().expect("poisoned").get(&n) {
        return t.clone();
    }
    let built = Arc::new(DegreeTables::build(n));
    cache
        .write()
        .expect("poisoned")
        .entry(n)
        .or_insert(built)
        .clone()
}

pub(crate) fn check_hl_degree(n: usize) -> Result<()> {
    if n > HL_DEGREE_CAP {
        return Err(Error::DegreeCapExceeded {
            degree: n,
            cap: HL_DEGREE_CAP,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_is_inverse() {
        for n in 0..=6 {
            let t = tables(n);
            let k = t.kostka_foulkes_matrix();
            let inv = t.kostka_foulkes_inverse();
            for i in 0..t.len() {
                for j in 0..t.len() {
                    let mut acc = TPolynomial::zero();
                    for l in 0..t.len() {
                        acc = &acc + &(&inv[i][l] * &k[l][j]);
                    }
                    let want = if i == j { TPolynomial::one() } else { TPolynomial::zero() };
                    assert_eq!(acc, want);
                }
            }
        }
    }

    #[test]
    fn numeric_inverse_matches_symbolic() {
        let t = tables(5);
        let x = Rational::new(1.into(), 3.into());
        let numeric = t.kostka_foulkes_inverse_at(&x);
        for (row, sym) in numeric.iter().zip(t.kostka_foulkes_inverse()) {
            for (a, b) in row.iter().zip(sym) {
                assert_eq!(*a, b.eval(&x));
            }
        }
    }
}
