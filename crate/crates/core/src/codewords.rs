//! Streaming enumeration of GF(q)-spans and codeword sets over R.
//!
//! Words over R use the `[u^0 block | u^1 block]` layout of length `2n`.
//! Enumeration walks GF(p)-combinations of additive generators in odometer
//! order, so each step is a single row addition: wrapping a digit past `p-1`
//! needs no correction because `p * row = 0`.

use std::ops::ControlFlow;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Subspace;
use crate::poly::Word;
use crate::ring::{raw, RElement};

pub const DEFAULT_BUDGET: u64 = 1 << 16;
pub const MAX_BUDGET: u64 = 1 << 24;
pub const BUDGET_ENV: &str = "CHAINCODE_BUDGET";

/// Budget from `CHAINCODE_BUDGET`, else the default; clamped to [`MAX_BUDGET`].
pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u64>().ok())
        .unwrap_or(DEFAULT_BUDGET)
        .min(MAX_BUDGET)
}

/// `q^dim`, or `BudgetExceeded` if it is larger than `budget`.
pub(crate) fn check_budget(q: u32, dim: usize, budget: u64) -> Result<u64> {
    let budget = budget.min(MAX_BUDGET);
    let mut count: u128 = 1;
    for _ in 0..dim {
        count = count.saturating_mul(q as u128);
    }
    if count > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: count,
            budget,
        });
    }
    Ok(count as u64)
}

fn additive_generators(field: &Field, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let p = field.characteristic();
    let mut out = Vec::with_capacity(rows.len() * field.degree() as usize);
    for row in rows {
        let mut basis = 1u32;
        for _ in 0..field.degree() {
            out.push(row.iter().map(|&c| field.mul(basis, c)).collect());
            basis *= p;
        }
    }
    out
}

fn odometer<B>(
    field: &Field,
    gens: &[Vec<u32>],
    mut word: Vec<u32>,
    visit: &mut impl FnMut(&[u32]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let p = field.characteristic();
    let mut digits = vec![0u32; gens.len()];
    visit(&word)?;
    loop {
        let mut j = 0;
        loop {
            if j == gens.len() {
                return ControlFlow::Continue(());
            }
            raw::axpy(field, &mut word, 1, &gens[j]);
            digits[j] += 1;
            if digits[j] < p {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
        visit(&word)?;
    }
}

/// Visits every vector of the span of the linearly independent `rows`
/// exactly once, starting with zero.
pub fn for_each_in_span<B>(
    field: &Field,
    rows: &[Vec<u32>],
    width: usize,
    mut visit: impl FnMut(&[u32]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let gens = additive_generators(field, rows);
    odometer(field, &gens, vec![0; width], &mut visit)
}

/// Minimum of `weight` over the nonzero vectors of the span of the
/// independent `rows`; `None` when there are no rows. Work is split across
/// threads on the top generators; the result does not depend on scheduling.
pub fn min_weight_in_span<W>(field: &Field, rows: &[Vec<u32>], width: usize, weight: W) -> Option<usize>
where
    W: Fn(&[u32]) -> usize + Sync,
{
    if rows.is_empty() {
        return None;
    }
    let gens = additive_generators(field, rows);
    let p = field.characteristic() as usize;
    let mut split = 0;
    let mut chunks = 1usize;
    while split < gens.len() && chunks < 256 && gens.len() - split > 4 {
        split += 1;
        chunks *= p;
    }
    let (low, high) = gens.split_at(gens.len() - split);
    (0..chunks)
        .into_par_iter()
        .map(|mut c| {
            let mut start = vec![0u32; width];
            for g in high {
                raw::axpy(field, &mut start, field.from_int((c % p) as i64), g);
                c /= p;
            }
            let mut best = usize::MAX;
            let _ = odometer(field, low, start, &mut |w: &[u32]| {
                if w.iter().any(|&x| x != 0) {
                    best = best.min(weight(w));
                    if best <= 1 {
                        return ControlFlow::Break(());
                    }
                }
                ControlFlow::Continue(())
            });
            best
        })
        .min()
        .filter(|&d| d != usize::MAX)
}

/// A cyclic code as a set of words over R, held as its reduced
/// GF(q)-basis in the `[u^0 | u^1]` layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodewordSet {
    n: usize,
    span: Subspace,
}

impl CodewordSet {
    pub fn from_span(n: usize, span: Subspace) -> CodewordSet {
        assert_eq!(span.ncols(), 2 * n, "span width must be 2n");
        CodewordSet { n, span }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        self.span.field()
    }

    /// Dimension over GF(q); the set has `q^dim` words.
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn size(&self) -> BigUint {
        BigUint::from(self.field().size()).pow(self.dim() as u32)
    }

    pub fn basis_rows(&self) -> &[Vec<u32>] {
        self.span.rows()
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn contains(&self, word: &Word<RElement>) -> bool {
        word.len() == self.n
            && word.entries().iter().all(|e| e.field() == self.field())
            && self.contains_raw(&word_to_raw(word))
    }

    pub fn contains_raw(&self, word: &[u32]) -> bool {
        self.span.contains(word)
    }

    pub fn is_subset_of(&self, other: &CodewordSet) -> bool {
        self.span.is_subspace_of(&other.span)
    }

    /// Whether every word of `self` has zero Euclidean inner product over R
    /// with every word of `other`.
    pub fn is_orthogonal_to(&self, other: &CodewordSet) -> bool {
        self.basis_rows().iter().all(|c| {
            other
                .basis_rows()
                .iter()
                .all(|v| raw::inner(self.field(), c, v) == (0, 0))
        })
    }

    /// Streams every word in raw layout. Fails up front if `q^dim > budget`.
    pub fn for_each<B>(
        &self,
        budget: u64,
        visit: impl FnMut(&[u32]) -> ControlFlow<B>,
    ) -> Result<ControlFlow<B>> {
        check_budget(self.field().size(), self.dim(), budget)?;
        Ok(for_each_in_span(self.field(), self.basis_rows(), 2 * self.n, visit))
    }

    pub fn words(&self, budget: u64) -> Result<Vec<Word<RElement>>> {
        let mut out = Vec::new();
        let field = self.field().clone();
        let _ = self.for_each(budget, |w| {
            out.push(raw_to_word(&field, w));
            ControlFlow::<()>::Continue(())
        })?;
        Ok(out)
    }
}

pub(crate) fn word_to_raw(word: &Word<RElement>) -> Vec<u32> {
    let n = word.len();
    let mut v = vec![0; 2 * n];
    for (i, e) in word.entries().iter().enumerate() {
        v[i] = e.unit_part().value();
        v[n + i] = e.u_part().value();
    }
    v
}

pub(crate) fn raw_to_word(field: &Field, raw: &[u32]) -> Word<RElement> {
    let n = raw.len() / 2;
    Word::new(
        (0..n)
            .map(|i| RElement::from_raw(field, raw[i], raw[n + i]))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn odometer_visits_each_vector_once() {
        for field in [
            Field::prime(3).unwrap(),
            "GF(4; x^2+x+1)".parse::<Field>().unwrap(),
        ] {
            let rows = vec![vec![1, 0, 2], vec![0, 1, 1]];
            let mut seen = HashSet::new();
            let _ = for_each_in_span(&field, &rows, 3, |w| {
                assert!(seen.insert(w.to_vec()));
                ControlFlow::<()>::Continue(())
            });
            let q = field.size() as usize;
            assert_eq!(seen.len(), q * q);
            let span = Subspace::from_rows(&field, 3, rows.clone());
            assert!(seen.iter().all(|w| span.contains(w)));
        }
    }

    #[test]
    fn min_weight_matches_serial_scan() {
        let f2 = Field::prime(2).unwrap();
        // [7,4] Hamming code
        let rows: Vec<Vec<u32>> = (0..4)
            .map(|i| {
                let mut r = vec![0; 7];
                for (j, &c) in [1, 1, 0, 1].iter().enumerate() {
                    r[i + j] = c;
                }
                r
            })
            .collect();
        let w = |v: &[u32]| v.iter().filter(|&&c| c != 0).count();
        assert_eq!(min_weight_in_span(&f2, &rows, 7, w), Some(3));
        assert_eq!(min_weight_in_span(&f2, &[], 7, w), None);
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(check_budget(3, 4, 81).unwrap(), 81);
        assert!(matches!(
            check_budget(3, 5, 81),
            Err(Error::BudgetExceeded { needed: 243, .. })
        ));
        assert!(check_budget(2, 30, u64::MAX).is_err());
    }
}
