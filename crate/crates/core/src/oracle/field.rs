use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Supported field orders.
pub const SUPPORTED: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

/// A finite field given by tables over element indices `0..q`; index 0 is
/// zero and index 1 is one. For prime powers `p^k`, index
/// `c_0 + c_1 p + … ` stands for the residue class of `c_0 + c_1 x + …`.
#[derive(Debug)]
pub struct FqField {
    q: u32,
    p: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FqField {
    /// The shared field of order `q`.
    pub fn get(q: u32) -> Result<&'static FqField> {
        static FIELDS: [OnceLock<FqField>; 7] = [const { OnceLock::new() }; 7];
        let slot = SUPPORTED
            .iter()
            .position(|&s| s == q)
            .ok_or(Error::UnsupportedField(q))?;
        Ok(FIELDS[slot].get_or_init(|| FqField::build(q).expect("built-in field tables are valid")))
    }

    fn build(q: u32) -> Result<FqField> {
        // (characteristic, degree, low coefficients of the monic modulus)
        let (p, k, modulus): (u32, u32, &[u32]) = match q {
            2 | 3 | 5 | 7 => (q, 1, &[]),
            4 => (2, 2, &[1, 1]),
            8 => (2, 3, &[1, 1, 0]),
            9 => (3, 2, &[1, 0]),
            _ => return Err(Error::UnsupportedField(q)),
        };
        let digits = |mut v: u32| -> Vec<u32> {
            (0..k)
                .map(|_| {
                    let d = v % p;
                    v /= p;
                    d
                })
                .collect()
        };
        let undigits = |d: &[u32]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        let size = (q * q) as usize;
        let mut add = vec![0u8; size];
        let mut mul = vec![0u8; size];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                // schoolbook product, then reduce x^k = -(modulus)
                let mut prod = vec![0u32; (2 * k - 1) as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for top in (k as usize..prod.len()).rev() {
                    let c = prod[top];
                    if c == 0 {
                        continue;
                    }
                    prod[top] = 0;
                    for (i, m) in modulus.iter().enumerate() {
                        let at = top - k as usize + i;
                        prod[at] = (prod[at] + c * (p - m % p)) % p;
                    }
                }
                let idx = (a * q + b) as usize;
                add[idx] = undigits(&sum) as u8;
                mul[idx] = undigits(&prod[..k as usize]) as u8;
            }
        }
        let mut field = FqField {
            q,
            p,
            add,
            mul,
            neg: vec![0; q as usize],
            inv: vec![0; q as usize],
        };
        for a in 0..q as u8 {
            field.neg[a as usize] = (0..q as u8)
                .find(|&b| field.add(a, b) == 0)
                .ok_or(Error::UnsupportedField(q))?;
            if a != 0 {
                field.inv[a as usize] = (1..q as u8)
                    .find(|&b| field.mul(a, b) == 1)
                    .ok_or(Error::UnsupportedField(q))?;
            }
        }
        field.validate()?;
        Ok(field)
    }

    fn validate(&self) -> Result<()> {
        let q = self.q as u8;
        let bad = || Error::UnsupportedField(self.q);
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return Err(bad());
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(bad());
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return Err(bad());
                    }
                }
            }
        }
        Ok(())
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn order(&self) -> usize {
        self.q as usize
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }
}

// one field per order, so the order identifies it
impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for FqField {}

impl std::hash::Hash for FqField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.q.hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_fields_build() {
        for q in SUPPORTED {
            let f = FqField::get(q).unwrap();
            assert_eq!(f.order(), q as usize);
            for a in 1..q as u8 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
        assert_eq!(FqField::get(6).unwrap_err(), Error::UnsupportedField(6));
        assert!(FqField::get(16).is_err());
    }

    #[test]
    fn gf4_multiplication() {
        let f = FqField::get(4).unwrap();
        // x = 2, x + 1 = 3
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.add(2, 1), 3);
        assert_eq!(f.add(3, 3), 0);
    }

    #[test]
    fn gf9_has_square_root_of_minus_one() {
        let f = FqField::get(9).unwrap();
        // x = 3 with x^2 = -1 = 2
        assert_eq!(f.mul(3, 3), 2);
        assert_eq!(f.characteristic(), 3);
    }

    #[test]
    fn multiplicative_groups_are_cyclic() {
        for q in SUPPORTED {
            let f = FqField::get(q).unwrap();
            let generator = (2..q as u8).chain([1]).find(|&g| {
                let mut x = g;
                let mut order = 1;
                while x != 1 {
                    x = f.mul(x, g);
                    order += 1;
                }
                order == q - 1
            });
            assert!(generator.is_some(), "F_{q}");
        }
    }
}
