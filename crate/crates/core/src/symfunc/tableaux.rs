//! Semistandard tableaux, the Lascoux–Schützenberger charge statistic,
//! Kostka numbers and Kostka–Foulkes polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::TPolynomial;

/// A tableau as rows of entries (English notation).
pub type Tableau = Vec<Vec<u32>>;

fn check_sizes(shape: &Partition, content: &Partition) -> Result<()> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch {
            left: shape.to_string(),
            left_size: shape.size(),
            right: content.to_string(),
            right_size: content.size(),
        });
    }
    Ok(())
}

/// Calls `visit` on every semistandard tableau of the given shape and content.
pub fn for_each_ssyt(shape: &Partition, content: &Partition, mut visit: impl FnMut(&Tableau)) {
    if shape.size() != content.size() {
        return;
    }
    let mut rows: Tableau = vec![Vec::new(); shape.len()];
    fill_letter(shape, content.parts(), 0, &mut rows, &mut visit);
}

fn fill_letter(
    shape: &Partition,
    content: &[usize],
    letter: usize,
    rows: &mut Tableau,
    visit: &mut impl FnMut(&Tableau),
) {
    if letter == content.len() {
        visit(rows);
        return;
    }
    let current: Vec<usize> = rows.iter().map(Vec::len).collect();
    add_strip(shape, content, letter, &current, 0, content[letter], rows, visit);
}

/// Adds a horizontal strip of `remaining` copies of `letter + 1`, choosing
/// the count for row `row` and recursing downward.
#[allow(clippy::too_many_arguments)]
fn add_strip(
    shape: &Partition,
    content: &[usize],
    letter: usize,
    before: &[usize],
    row: usize,
    remaining: usize,
    rows: &mut Tableau,
    visit: &mut impl FnMut(&Tableau),
) {
    if remaining == 0 {
        fill_letter(shape, content, letter + 1, rows, visit);
        return;
    }
    if row >= rows.len() {
        return;
    }
    let cap = if row == 0 {
        shape.part(0)
    } else {
        shape.part(row).min(before[row - 1])
    };
    let room = cap.saturating_sub(before[row]);
    for take in (0..=room.min(remaining)).rev() {
        for _ in 0..take {
            rows[row].push(letter as u32 + 1);
        }
        add_strip(shape, content, letter, before, row + 1, remaining - take, rows, visit);
        for _ in 0..take {
            rows[row].pop();
        }
    }
}

/// Row reading word: rows from bottom to top, each left to right.
pub fn reading_word(t: &Tableau) -> Vec<u32> {
    t.iter().rev().flatten().copied().collect()
}

/// Charge of a word whose content is a partition (letter `i` occurs at least
/// as often as letter `i + 1`).
pub fn charge(word: &[u32]) -> usize {
    let len = word.len();
    let mut used = vec![false; len];
    let mut total = 0;
    loop {
        let Some(top) = (0..len).filter(|&i| !used[i]).map(|i| word[i]).max() else {
            break;
        };
        // position just right of the word; scan leftward cyclically
        let mut pos = len;
        let mut index = 0;
        for letter in 1..=top {
            let mut found = None;
            let mut wrapped = false;
            for step in 1..=len {
                let (i, w) = if step <= pos {
                    (pos - step, false)
                } else {
                    (len + pos - step, true)
                };
                if !used[i] && word[i] == letter {
                    found = Some(i);
                    wrapped = w;
                    break;
                }
            }
            let i = found.expect("word content must be a partition");
            if letter > 1 && wrapped {
                index += 1;
            }
            total += index;
            used[i] = true;
            pos = i;
        }
    }
    total
}

/// Kostka number `K_{λ,μ}`: semistandard tableaux of shape `λ`, content `μ`.
pub fn kostka(shape: &Partition, content: &Partition) -> Result<BigInt> {
    check_sizes(shape, content)?;
    // count chains of horizontal strips without materializing tableaux
    fn count(shape: &Partition, content: &[usize], current: Vec<usize>) -> BigInt {
        let Some((&first, rest)) = content.split_first() else {
            return BigInt::one();
        };
        let mut total = BigInt::zero();
        let mut next = current.clone();
        strips(shape, &current, 0, first, &mut next, &mut |nxt| {
            total += count(shape, rest, nxt.to_vec());
        });
        total
    }
    fn strips(
        shape: &Partition,
        before: &[usize],
        row: usize,
        remaining: usize,
        next: &mut Vec<usize>,
        out: &mut dyn FnMut(&[usize]),
    ) {
        if remaining == 0 {
            out(next);
            return;
        }
        if row >= before.len() {
            return;
        }
        let cap = if row == 0 {
            shape.part(0)
        } else {
            shape.part(row).min(before[row - 1])
        };
        let room = cap.saturating_sub(before[row]);
        for take in 0..=room.min(remaining) {
            next[row] = before[row] + take;
            strips(shape, before, row + 1, remaining - take, next, out);
        }
        next[row] = before[row];
    }
    Ok(count(shape, content.parts(), vec![0; shape.len()]))
}

/// Kostka–Foulkes polynomial `K_{λ,μ}(t) = Σ_T t^{charge(T)}` over
/// semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka_foulkes(shape: &Partition, content: &Partition) -> Result<TPolynomial> {
    check_sizes(shape, content)?;
    let mut counts: Vec<i64> = Vec::new();
    for_each_ssyt(shape, content, |t| {
        let c = charge(&reading_word(t));
        if counts.len() <= c {
            counts.resize(c + 1, 0);
        }
        counts[c] += 1;
    });
    Ok(TPolynomial::from_i64s(&counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(parts: [usize; N]) -> Partition {
        Partition::from(parts)
    }

    fn kf(a: Partition, b: Partition) -> TPolynomial {
        kostka_foulkes(&a, &b).unwrap()
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p([2]), &p([1, 1])).unwrap(), BigInt::from(1));
        assert_eq!(kostka(&p([1, 1]), &p([2])).unwrap(), BigInt::from(0));
        assert_eq!(kostka(&p([2, 1]), &p([1, 1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(kostka(&p([3, 2]), &p([2, 2, 1])).unwrap(), BigInt::from(2));
        for lam in Partition::up_to(7) {
            assert_eq!(kostka(&lam, &lam).unwrap(), BigInt::from(1));
        }
        assert!(kostka(&p([2]), &p([1])).is_err());
    }

    #[test]
    fn kostka_foulkes_examples() {
        assert_eq!(kf(p([2]), p([1, 1])), TPolynomial::from_i64s(&[0, 1]));
        assert_eq!(kf(p([1, 1]), p([1, 1])), TPolynomial::one());
        assert_eq!(kf(p([2, 1]), p([1, 1, 1])), TPolynomial::from_i64s(&[0, 1, 1]));
        assert_eq!(kf(p([3]), p([1, 1, 1])), TPolynomial::from_i64s(&[0, 0, 0, 1]));
        // K_{(3,1),(2,1,1)}(t) = t + t^2, K_{(2,2),(2,1,1)}(t) = t
        assert_eq!(kf(p([3, 1]), p([2, 1, 1])), TPolynomial::from_i64s(&[0, 1, 1]));
        assert_eq!(kf(p([2, 2]), p([2, 1, 1])), TPolynomial::from_i64s(&[0, 1]));
        assert!(kostka_foulkes(&p([3]), &p([1])).is_err());
    }

    #[test]
    fn single_row_gives_t_to_n() {
        for n in 1..=7 {
            for mu in Partition::all(n) {
                let want = TPolynomial::monomial(BigInt::one(), mu.n_stat());
                assert_eq!(kf(Partition::row(n), mu.clone()), want);
            }
        }
    }

    #[test]
    fn diagonal_and_triangularity() {
        for n in 0..=6 {
            for lam in Partition::all(n) {
                for mu in Partition::all(n) {
                    let k = kf(mu.clone(), lam.clone());
                    if mu == lam {
                        assert_eq!(k, TPolynomial::one());
                    } else if !lam.dominance_leq(&mu).unwrap() {
                        assert!(k.is_zero(), "K_{mu:?},{lam:?} = {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn t_equals_one_gives_kostka() {
        for n in 0..=6 {
            for lam in Partition::all(n) {
                for mu in Partition::all(n) {
                    let k = kf(mu.clone(), lam.clone()).eval_int(&BigInt::one());
                    assert_eq!(k, kostka(&mu, &lam).unwrap());
                }
            }
        }
    }

    #[test]
    fn charge_of_standard_words() {
        assert_eq!(charge(&[1, 2]), 1);
        assert_eq!(charge(&[2, 1]), 0);
        assert_eq!(charge(&[1, 2, 3]), 3);
        assert_eq!(charge(&[3, 1, 2]), 2);
        assert_eq!(charge(&[2, 1, 3]), 1);
    }
}
