//! Reversibility of cyclic codes over R.
//!
//! Write `tau` for word reversal. `tau(C)` is again cyclic with residue
//! `<g*>`, torsion `<a*>` and first generator `g + u eps x^i p*`, where
//! `eps = g(0)` and `i = deg g - deg p`. So `C` is reversible iff `g` and `a`
//! are self-reciprocal up to a unit and `a | eps x^i p* - p`. In
//! characteristic 2, `eps = 1` and self-reciprocity up to a unit is exact
//! self-reciprocity.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::code::{enumerate_codes, CyclicCode};
use crate::codewords::check_budget;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::Subspace;
use crate::poly::Poly;
use crate::ring::raw;

/// Which criterion decided the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReversibilityBranch {
    /// `gcd(n, q) = 1`: `g` and `a` self-reciprocal.
    Coprime,
    /// `a != g`: additionally `a | eps x^i p* - p`.
    TwoGenerator,
    /// `a = g`: `eps x^i p* - p = b g` for some `b` in GF(q).
    SingleGenerator,
    /// Decided by enumeration only.
    OracleOnly,
}

impl ReversibilityBranch {
    pub fn name(self) -> &'static str {
        match self {
            ReversibilityBranch::Coprime => "coprime",
            ReversibilityBranch::TwoGenerator => "two-generator",
            ReversibilityBranch::SingleGenerator => "single-generator",
            ReversibilityBranch::OracleOnly => "oracle",
        }
    }
}

/// Facts checked on the way to a verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReversibilityWitnesses {
    pub g_self_reciprocal: bool,
    pub a_self_reciprocal: bool,
    /// `g* = eps g`.
    pub sign: Option<u32>,
    /// `i = deg g - deg p`; absent when `p = 0`.
    pub exponent: Option<usize>,
    /// Whether `a | eps x^i p* - p`; absent when `p = 0`.
    pub torsion_divides: Option<bool>,
    /// Single-generator scalar with `eps x^i p* - p = b g`.
    pub scalar: Option<u32>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversibilityVerdict {
    pub reversible: bool,
    pub branch: ReversibilityBranch,
    pub witnesses: ReversibilityWitnesses,
}

/// `eps` with `f* = eps f` when `f` is monic and self-reciprocal up to a unit.
fn reciprocal_sign(f: &Poly) -> Option<u32> {
    let r = f.reciprocal().ok()?;
    (r.monic() == *f).then(|| r.leading())
}

/// Decides reversibility from the canonical triple.
pub fn is_reversible(code: &CyclicCode) -> ReversibilityVerdict {
    let field = code.field();
    let g = code.g();
    let a = code.a();
    let p = code.p();
    let g_sign = reciprocal_sign(g);
    let mut w = ReversibilityWitnesses {
        g_self_reciprocal: g_sign.is_some(),
        a_self_reciprocal: reciprocal_sign(a).is_some(),
        sign: g_sign,
        ..Default::default()
    };
    let branch = if code.is_coprime_case() {
        if code.n().is_multiple_of(2) {
            w.notes.push(format!(
                "length {} is even but prime to {}",
                code.n(),
                field.size()
            ));
        }
        ReversibilityBranch::Coprime
    } else if code.is_single_generator() {
        ReversibilityBranch::SingleGenerator
    } else {
        ReversibilityBranch::TwoGenerator
    };
    let mut reversible = w.g_self_reciprocal && w.a_self_reciprocal;
    if p.is_zero() {
        if branch != ReversibilityBranch::Coprime {
            w.notes.push("p = 0: no condition on p".into());
        }
    } else if let Some(eps) = g_sign {
        let i = code.deg_g() - p.degree().unwrap_or(0);
        w.exponent = Some(i);
        let diff = &p.reciprocal().expect("nonzero").shift(i).scale(eps) - p;
        let divides = a.divides(&diff).expect("a is monic");
        w.torsion_divides = Some(divides);
        if branch == ReversibilityBranch::SingleGenerator {
            // deg diff <= deg g, so a quotient by g must be a constant
            w.scalar = if diff.is_zero() {
                Some(0)
            } else {
                (1..field.size()).find(|&b| g.scale(b) == diff)
            };
            reversible &= w.scalar.is_some();
        } else {
            reversible &= divides;
        }
    } else {
        reversible = false;
    }
    ReversibilityVerdict {
        reversible,
        branch,
        witnesses: w,
    }
}

/// Streams every codeword and tests its reversal for membership.
pub fn is_reversible_oracle(code: &CyclicCode, budget: u64) -> Result<bool> {
    let set = code.codewords();
    check_budget(code.field().size(), set.dim(), budget)?;
    let flow = set.for_each(budget, |w| {
        if set.contains_raw(&raw::reverse(w)) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })?;
    Ok(flow.is_continue())
}

/// Reversal is linear, so testing the basis rows is enough.
pub fn is_reversible_by_basis(code: &CyclicCode) -> bool {
    let set = code.codewords();
    set.basis_rows()
        .iter()
        .all(|r| set.contains_raw(&raw::reverse(r)))
}

/// Whether the q-ary cyclic code `<f>` of length `n` is closed under reversal,
/// by reducing the reversed basis rows.
pub fn is_field_code_reversible(f: &Poly, n: usize) -> bool {
    let field = f.field();
    let gen = f.reduce_cyclic(n);
    let rows: Vec<Vec<u32>> = (0..n)
        .map(|i| (0..n).map(|j| gen.shift(i).reduce_cyclic(n).coeff(j)).collect())
        .collect();
    let span = Subspace::from_rows(field, n, rows);
    span.rows().iter().all(|r| {
        let rev: Vec<u32> = r.iter().rev().copied().collect();
        span.contains(&rev)
    })
}

/// Every code of length `n` with its verdict, in enumeration order.
pub fn classify_all(n: usize, field: &Field) -> Result<Vec<(CyclicCode, ReversibilityVerdict)>> {
    let codes = enumerate_codes(n, field)?;
    Ok(codes
        .into_par_iter()
        .map(|c| {
            let v = is_reversible(&c);
            (c, v)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;

    fn code(n: usize, q: u32, text: &str) -> CyclicCode {
        CyclicCode::parse(n, &Field::prime(q).unwrap(), text).unwrap()
    }

    #[test]
    fn worked_examples() {
        let v = is_reversible(&code(5, 2, "x+1, u"));
        assert!(v.reversible);
        assert_eq!(v.branch, ReversibilityBranch::Coprime);
        let v = is_reversible(&code(7, 2, "x^3+x+1"));
        assert!(!v.reversible);
        assert!(!v.witnesses.g_self_reciprocal);
        assert!(is_reversible(&CyclicCode::whole(4, &Field::prime(3).unwrap())).reversible);
    }

    #[test]
    fn odd_characteristic_sign() {
        // g = x+2 = x-1 has g* = -g
        let c = code(3, 3, "x+2");
        assert!(c.p().is_zero());
        let v = is_reversible(&c);
        assert!(v.reversible);
        assert_eq!(v.witnesses.sign, Some(2));
        assert!(is_reversible_oracle(&c, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn agrees_with_oracles() {
        for (n, q) in [(4, 3), (4, 2), (6, 2), (3, 3), (2, 2)] {
            let f = Field::prime(q).unwrap();
            for (c, v) in classify_all(n, &f).unwrap() {
                let by_words = is_reversible_oracle(&c, 1 << 20).unwrap();
                assert_eq!(v.reversible, by_words, "{c} at n={n}, q={q}: {v:?}");
                assert_eq!(by_words, is_reversible_by_basis(&c));
            }
        }
    }

    #[test]
    fn zero_code_and_length_one() {
        let f2 = Field::prime(2).unwrap();
        assert!(is_reversible_oracle(&CyclicCode::zero(3, &f2), 16).unwrap());
        for (_, v) in classify_all(1, &f2).unwrap() {
            assert!(v.reversible);
        }
    }

    #[test]
    fn field_level_reversibility() {
        let f2 = Field::prime(2).unwrap();
        assert!(!is_field_code_reversible(&Poly::parse(&f2, "x^3+x+1").unwrap(), 7));
        assert!(is_field_code_reversible(&Poly::parse(&f2, "x^2+x+1").unwrap(), 3));
    }
}
