//! Closed-form representation-theoretic quantities: dimensions of
//! irreducible representations of `GL(n, q)`, unipotent trace values on
//! conjugacy classes, and decomposition coefficients.

mod family;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

pub use family::{Block, ClassLabel, FamilyOfDiagrams, UNIT};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{pow, Rational};
use crate::symfunc::{modified_hl_q, schur_in_p, Sequence, Specialization};

/// Which parabolic extension the branching rule refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Glb,
    Glu,
}

fn check_q(q: &Rational) -> Result<()> {
    if *q <= Rational::one() {
        return Err(Error::param("q", format!("{q} must exceed 1")));
    }
    Ok(())
}

fn check_gamma_one(sp: &Specialization) -> Result<()> {
    if !sp.gamma().is_one() {
        return Err(Error::InvalidSpecialization(format!(
            "γ must be 1, got {}",
            sp.gamma()
        )));
    }
    Ok(())
}

/// `Π_□ (q^{d·h(□)} - 1)`.
fn hook_product(lambda: &Partition, d: usize, q: &Rational) -> Rational {
    lambda
        .hook_lengths()
        .into_iter()
        .map(|h| pow(q, (d * h) as i64) - Rational::one())
        .product()
}

/// `Π_blocks q^{d·n(λ)} / Π_□ (q^{d·h(□)} - 1)`.
fn block_hook_factor(f: &FamilyOfDiagrams, q: &Rational) -> Rational {
    f.blocks()
        .iter()
        .map(|b| pow(q, (b.d * b.lambda.n_stat()) as i64) / hook_product(&b.lambda, b.d, q))
        .product()
}

/// Dimension of the irreducible representation of `GL(|f|, q)` labelled by
/// `f`, by the q-hook formula.
pub fn green_dimension(f: &FamilyOfDiagrams, q: &Rational) -> Result<Rational> {
    check_q(q)?;
    let order_part: Rational = (1..=f.degree())
        .map(|i| pow(q, i as i64) - Rational::one())
        .product();
    Ok(order_part * block_hook_factor(f, q))
}

/// Families obtained by removing one box at `x - 1` (GLB) or at any linear
/// tag (GLU).
pub fn branching_predecessors(f: &FamilyOfDiagrams, variant: Variant) -> Vec<FamilyOfDiagrams> {
    let mut out = Vec::new();
    for (i, block) in f.blocks().iter().enumerate() {
        let eligible = match variant {
            Variant::Glb => block.is_unit(),
            Variant::Glu => block.d == 1,
        };
        if !eligible {
            continue;
        }
        for smaller in block.lambda.predecessors() {
            out.push(f.with_diagram(i, smaller));
        }
    }
    out
}

/// `q^{d·n(λ)} · (Sp ∘ Pl_d)[Q̃_λ(·; q^{-d})]`.
pub fn unipotent_block_value(
    sp: &Specialization,
    d: usize,
    lambda: &Partition,
    q: &Rational,
) -> Result<Rational> {
    check_q(q)?;
    check_gamma_one(sp)?;
    if d == 0 {
        return Err(Error::param("d", "block degree must be positive"));
    }
    let t = pow(q, -(d as i64));
    let qt = modified_hl_q(lambda, &t)?;
    Ok(pow(q, (d * lambda.n_stat()) as i64) * sp.plethysm(d).specialize(&qt))
}

/// Value of the extreme unipotent trace with parameters `sp` on the class
/// `class`: the product of its block values.
pub fn unipotent_trace_value(
    sp: &Specialization,
    class: &ClassLabel,
    q: &Rational,
) -> Result<Rational> {
    check_q(q)?;
    check_gamma_one(sp)?;
    let mut value = Rational::one();
    for b in class.blocks() {
        value *= unipotent_block_value(sp, b.d, &b.lambda, q)?;
        if value.is_zero() {
            break;
        }
    }
    Ok(value)
}

/// `λ ↦ Sp[s_λ]` over all `λ ⊢ n`.
pub fn trace_coefficients(sp: &Specialization, n: usize) -> Result<BTreeMap<Partition, Rational>> {
    check_gamma_one(sp)?;
    Ok(schur_values(sp, n))
}

fn schur_values(sp: &Specialization, n: usize) -> BTreeMap<Partition, Rational> {
    Partition::all(n)
        .map(|lam| {
            let v = sp.specialize(&schur_in_p(&lam));
            (lam, v)
        })
        .collect()
}

/// Coefficient `C(f)` of the biregular decomposition, for `f` without the
/// `x - 1` block.
pub fn biregular_coefficient(f: &FamilyOfDiagrams, q: &Rational) -> Result<Rational> {
    check_q(q)?;
    if f.unit().is_some() {
        return Err(Error::InvalidFamily(format!("{UNIT} block is not allowed here")));
    }
    f.check_linear_tags(q, 1)?;
    Ok(pow(&(q - Rational::one()), f.degree() as i64) * block_hook_factor(f, q))
}

/// `Sp_{0, 1^{(q)}, 1}[s_λ]`, with the geometric spread of `(1)` in the β slot.
pub fn sp_principal_schur(lambda: &Partition, q: &Rational) -> Result<Rational> {
    check_q(q)?;
    let beta = Sequence::spread(vec![Rational::one()], q.clone())?;
    let sp = Specialization::thoma(Sequence::empty(), beta, Rational::one())?;
    Ok(sp.specialize(&schur_in_p(lambda)))
}

/// `(q-1)^{|λ|} q^{n(λ)} / Π_□ (q^{h(□)} - 1)`.
pub fn principal_schur_closed_form(lambda: &Partition, q: &Rational) -> Result<Rational> {
    check_q(q)?;
    Ok(pow(&(q - Rational::one()), lambda.size() as i64) * pow(q, lambda.n_stat() as i64)
        / hook_product(lambda, 1, q))
}

/// Parameters of an extreme trace of the unitriangular-diagonal group: one
/// Thoma triple per linear tag plus a background family without linear
/// blocks.
#[derive(Clone, Debug)]
pub struct GLUTraceParams {
    triples: Vec<(String, Specialization)>,
    background: FamilyOfDiagrams,
}

impl GLUTraceParams {
    pub fn new(triples: Vec<(String, Specialization)>, background: FamilyOfDiagrams) -> Result<Self> {
        let total: Rational = triples.iter().map(|(_, sp)| sp.gamma()).sum();
        if !total.is_one() {
            return Err(Error::InvalidSpecialization(format!("Σγ = {total}, expected 1")));
        }
        let mut tags: Vec<&str> = triples.iter().map(|(t, _)| t.as_str()).collect();
        tags.sort_unstable();
        if tags.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSpecialization("duplicate linear tag".into()));
        }
        if let Some(b) = background.blocks().iter().find(|b| b.d == 1) {
            return Err(Error::InvalidFamily(format!(
                "background family has a linear block {:?}",
                b.tag
            )));
        }
        Ok(GLUTraceParams {
            triples,
            background,
        })
    }

    pub fn tags(&self) -> impl Iterator<Item = &str> {
        self.triples.iter().map(|(t, _)| t.as_str())
    }

    pub fn background(&self) -> &FamilyOfDiagrams {
        &self.background
    }
}

/// `(λ^j)_j ↦ Π_j Sp_j[s_{λ^j}]` over tuples with `Σ|λ^j| = n - |f|`.
pub fn glu_trace_coefficients(
    params: &GLUTraceParams,
    n: usize,
) -> BTreeMap<Vec<Partition>, Rational> {
    let mut out = BTreeMap::new();
    let Some(rest) = n.checked_sub(params.background.degree()) else {
        return out;
    };
    let k = params.triples.len();
    // values[j][m] = Schur values of triple j in degree m
    let values: Vec<Vec<BTreeMap<Partition, Rational>>> = params
        .triples
        .iter()
        .map(|(_, sp)| (0..=rest).map(|m| schur_values(sp, m)).collect())
        .collect();
    let mut sizes = vec![0; k];
    compositions(rest, 0, &mut sizes, &mut |sizes| {
        let mut partial: Vec<(Vec<Partition>, Rational)> = vec![(Vec::new(), Rational::one())];
        for (j, &m) in sizes.iter().enumerate() {
            let mut next = Vec::new();
            for (key, c) in &partial {
                for (lam, v) in &values[j][m] {
                    let mut key = key.clone();
                    key.push(lam.clone());
                    next.push((key, c * v));
                }
            }
            partial = next;
        }
        out.extend(partial);
    });
    out
}

fn compositions(total: usize, at: usize, sizes: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if at == sizes.len() {
        if total == 0 {
            visit(sizes);
        }
        return;
    }
    for m in 0..=total {
        sizes[at] = m;
        compositions(total - m, at + 1, sizes, visit);
    }
    sizes[at] = 0;
}
