use super::field::FqField;
use super::matrix::FqMatrix;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::traces::{Block, FamilyOfDiagrams};

/// A monic polynomial over `F_q`, coefficients constant term first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FqPoly {
    pub coeffs: Vec<u8>,
}

impl FqPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `x - a` is tagged `x-a` by the element index of `a`; higher degrees
    /// list their coefficients.
    pub fn tag(&self, field: &FqField) -> String {
        if self.degree() == 1 {
            format!("x-{}", field.neg(self.coeffs[0]))
        } else {
            let c: Vec<String> = self.coeffs.iter().map(u8::to_string).collect();
            format!("poly:{}", c.join(","))
        }
    }

    fn rem(&self, field: &FqField, divisor: &FqPoly) -> Vec<u8> {
        let mut r = self.coeffs.clone();
        let d = divisor.degree();
        while r.len() > d {
            let lead = *r.last().expect("nonempty");
            let shift = r.len() - 1 - d;
            if lead != 0 {
                // divisor is monic
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    r[shift + i] = field.sub(r[shift + i], field.mul(lead, c));
                }
            }
            r.pop();
        }
        r
    }
}

/// Monic irreducible polynomials of degree `d` other than `x`, by trial
/// division.
pub fn irreducible_polys(field: &FqField, d: usize) -> Vec<FqPoly> {
    assert!(d >= 1, "degree must be positive");
    let q = field.order();
    if d == 1 {
        return (1..q as u8)
            .map(|a| FqPoly {
                coeffs: vec![field.neg(a), 1],
            })
            .collect();
    }
    let smaller: Vec<FqPoly> = (1..=d / 2).flat_map(|k| irreducible_polys(field, k)).collect();
    let mut out = Vec::new();
    for code in 0..q.pow(d as u32) {
        let mut coeffs: Vec<u8> = (0..d).map(|i| ((code / q.pow(i as u32)) % q) as u8).collect();
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1);
        let p = FqPoly { coeffs };
        if smaller.iter().all(|s| p.rem(field, s).iter().any(|&c| c != 0)) {
            out.push(p);
        }
    }
    out
}

/// All families of total degree `n` over the actual irreducible
/// polynomials of `F_q`, tagged as in [`FqPoly::tag`].
pub fn families_enumerate(field: &FqField, n: usize) -> Vec<FamilyOfDiagrams> {
    let polys: Vec<FqPoly> = (1..=n).flat_map(|d| irreducible_polys(field, d)).collect();
    let mut out = Vec::new();
    let mut blocks = Vec::new();
    choose_blocks(field, &polys, 0, n, &mut blocks, &mut out);
    out
}

fn choose_blocks(
    field: &FqField,
    polys: &[FqPoly],
    at: usize,
    remaining: usize,
    blocks: &mut Vec<Block>,
    out: &mut Vec<FamilyOfDiagrams>,
) {
    if remaining == 0 {
        out.push(FamilyOfDiagrams::new(blocks.clone()).expect("distinct tags"));
        return;
    }
    if at == polys.len() {
        return;
    }
    choose_blocks(field, polys, at + 1, remaining, blocks, out);
    let d = polys[at].degree();
    for size in 1..=remaining / d {
        for lambda in Partition::all(size) {
            blocks.push(Block::new(polys[at].tag(field), d, lambda));
            choose_blocks(field, polys, at + 1, remaining - size * d, blocks, out);
            blocks.pop();
        }
    }
}

/// Partition `λ` with `d (λ'_1 + … + λ'_k) = dim ker A^k`.
fn kernel_filtration(a: &FqMatrix, d: usize) -> Partition {
    let mut cols = Vec::new();
    let mut power = a.clone();
    let mut prev = 0;
    loop {
        let k = power.nullity();
        if k == prev {
            break;
        }
        cols.push((k - prev) / d);
        prev = k;
        power = power.mul(a);
    }
    Partition::new(cols).expect("kernel jumps decrease").transpose()
}

/// Conjugacy class label of an invertible matrix: for each irreducible
/// factor `φ` of the characteristic polynomial, the partition read off the
/// kernels of `φ(m)^k`.
pub fn class_of(m: &FqMatrix) -> Result<FamilyOfDiagrams> {
    if !m.is_invertible() {
        return Err(Error::Matrix("class labels need an invertible matrix".into()));
    }
    let n = m.rows();
    let field = m.field();
    let mut blocks = Vec::new();
    let mut covered = 0;
    for d in 1..=n {
        for phi in irreducible_polys(field, d) {
            if covered == n {
                break;
            }
            let a = m.eval_poly(&phi.coeffs);
            if a.nullity() == 0 {
                continue;
            }
            let lambda = kernel_filtration(&a, d);
            covered += d * lambda.size();
            blocks.push(Block::new(phi.tag(field), d, lambda));
        }
    }
    if covered != n {
        return Err(Error::Matrix("primary decomposition does not cover the space".into()));
    }
    FamilyOfDiagrams::new(blocks)
}

/// Jordan type of a unipotent matrix.
pub fn unipotent_class_of(m: &FqMatrix) -> Result<Partition> {
    if !m.is_square() {
        return Err(Error::Matrix("matrix is not square".into()));
    }
    let n = m.rows();
    let nil = m.sub(&FqMatrix::identity(m.field(), n));
    if !nil.pow(n).is_zero() {
        return Err(Error::Matrix("matrix is not unipotent".into()));
    }
    if n == 0 {
        return Ok(Partition::empty());
    }
    Ok(kernel_filtration(&nil, 1))
}

/// Which corner entry the one-step extension fixes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtVariant {
    /// `h_{n+1,n+1}` any nonzero element.
    Glb,
    /// `h_{n+1,n+1} = 1`.
    Glu,
}

/// All `(n+1) × (n+1)` matrices with upper-left corner `g`, last row
/// `(0, …, 0, a)` and arbitrary last column above the diagonal.
pub fn ext_enumerate(g: &FqMatrix, variant: ExtVariant) -> Result<Vec<FqMatrix>> {
    if !g.is_invertible() {
        return Err(Error::Matrix("extension base must be invertible".into()));
    }
    let field = g.field();
    let n = g.rows();
    let q = field.order();
    let corners: Vec<u8> = match variant {
        ExtVariant::Glb => (1..q as u8).collect(),
        ExtVariant::Glu => vec![1],
    };
    let mut out = Vec::with_capacity(corners.len() * q.pow(n as u32));
    for &a in &corners {
        for code in 0..q.pow(n as u32) {
            let mut h = FqMatrix::zero(field, n + 1, n + 1);
            for i in 0..n {
                for j in 0..n {
                    h.set(i, j, g.get(i, j));
                }
                h.set(i, n, ((code / q.pow(i as u32)) % q) as u8);
            }
            h.set(n, n, a);
            out.push(h);
        }
    }
    Ok(out)
}

/// Every `n × n` matrix over the field, in a fixed order.
pub fn all_matrices(field: &'static FqField, n: usize) -> impl Iterator<Item = FqMatrix> {
    let q = field.order();
    let cells = n * n;
    let total = q.checked_pow(cells as u32).expect("matrix space too large to enumerate");
    (0..total).map(move |code| {
        let data = (0..cells).map(|i| ((code / q.pow(i as u32)) % q) as u8).collect();
        FqMatrix::from_data(field, n, n, data)
    })
}

/// `GL(n, q)` by brute force.
pub fn general_linear_group(field: &'static FqField, n: usize) -> impl Iterator<Item = FqMatrix> {
    all_matrices(field, n).filter(FqMatrix::is_invertible)
}

/// Unipotent elements of `GL(n, q)` by brute force.
pub fn unipotent_elements(field: &'static FqField, n: usize) -> impl Iterator<Item = FqMatrix> {
    let id = FqMatrix::identity(field, n);
    all_matrices(field, n).filter(move |m| m.sub(&id).pow(n).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn mat(q: u32, rows: &[Vec<u8>]) -> FqMatrix {
        FqMatrix::from_rows(FqField::get(q).unwrap(), rows).unwrap()
    }

    #[test]
    fn irreducible_examples() {
        let f2 = FqField::get(2).unwrap();
        let lin = irreducible_polys(f2, 1);
        assert_eq!(lin.len(), 1);
        assert_eq!(lin[0].tag(f2), "x-1");
        assert_eq!(irreducible_polys(f2, 2)[0].coeffs, vec![1, 1, 1]);
        assert_eq!(irreducible_polys(f2, 3).len(), 2);
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // q = 2: 1, 1, 2, 3, 6; q = 3: 2, 3, 8, 18
        let f2 = FqField::get(2).unwrap();
        let counts: Vec<usize> = (1..=5).map(|d| irreducible_polys(f2, d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 6]);
        let f3 = FqField::get(3).unwrap();
        let counts: Vec<usize> = (1..=4).map(|d| irreducible_polys(f3, d).len()).collect();
        assert_eq!(counts, vec![2, 3, 8, 18]);
        let f4 = FqField::get(4).unwrap();
        assert_eq!(irreducible_polys(f4, 2).len(), 6);
    }

    #[test]
    fn family_examples() {
        let f2 = FqField::get(2).unwrap();
        assert_eq!(families_enumerate(f2, 0), vec![FamilyOfDiagrams::empty()]);
        assert_eq!(families_enumerate(f2, 1).len(), 1);
        let two = families_enumerate(f2, 2);
        assert_eq!(two.len(), 3);
        assert!(two.contains(&FamilyOfDiagrams::from_json(r#"[{"tag":"poly:1,1,1","d":2,"lambda":"1"}]"#).unwrap()));
        // number of conjugacy classes of GL(3,2) and GL(3,3)
        assert_eq!(families_enumerate(f2, 3).len(), 6);
        assert_eq!(families_enumerate(FqField::get(3).unwrap(), 3).len(), 24);
    }

    #[test]
    fn unipotent_class_examples() {
        let f2 = FqField::get(2).unwrap();
        assert_eq!(unipotent_class_of(&FqMatrix::identity(f2, 3)).unwrap(), Partition::column(3));
        let j = mat(2, &[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]);
        assert_eq!(unipotent_class_of(&j).unwrap(), Partition::row(3));
        let e12 = mat(2, &[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(unipotent_class_of(&e12).unwrap(), Partition::from([2, 1]));
        assert!(unipotent_class_of(&mat(3, &[vec![2]])).is_err());
    }

    #[test]
    fn ext_examples() {
        let f2 = FqField::get(2).unwrap();
        let empty = FqMatrix::identity(f2, 0);
        let e = ext_enumerate(&empty, ExtVariant::Glu).unwrap();
        assert_eq!(e, vec![FqMatrix::identity(f2, 1)]);
        let one = FqMatrix::identity(f2, 1);
        let e = ext_enumerate(&one, ExtVariant::Glu).unwrap();
        assert_eq!(e.len(), 2);
        assert!(e.contains(&FqMatrix::identity(f2, 2)));
        assert!(e.contains(&mat(2, &[vec![1, 1], vec![0, 1]])));
        let f3 = FqField::get(3).unwrap();
        assert_eq!(ext_enumerate(&FqMatrix::identity(f3, 1), ExtVariant::Glb).unwrap().len(), 6);
    }

    #[test]
    fn classes_cover_families() {
        for q in [2, 3] {
            let field = FqField::get(q).unwrap();
            for n in 1..=3 {
                let fams: HashSet<FamilyOfDiagrams> =
                    families_enumerate(field, n).iter().map(FamilyOfDiagrams::canonical).collect();
                let seen: HashSet<FamilyOfDiagrams> = general_linear_group(field, n)
                    .map(|g| class_of(&g).unwrap().canonical())
                    .collect();
                assert_eq!(seen, fams, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn unipotent_count_is_q_to_n_n_minus_1() {
        let f2 = FqField::get(2).unwrap();
        assert_eq!(unipotent_elements(f2, 3).count(), 64);
        let f3 = FqField::get(3).unwrap();
        assert_eq!(unipotent_elements(f3, 2).count(), 9);
    }
}
