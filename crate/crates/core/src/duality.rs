//! Annihilators and Euclidean duals.
//!
//! With `A = (x^n - 1)/a`, `G = (x^n - 1)/g` and `m2 = p G / a`:
//!
//! * `gcd(n, q) = 1`: `Ann(C) = <A, u G>`;
//! * over GF(2): `Ann(C) = <A + u m2, u G>`, or `<G + u m2>` when `a = g`.
//!
//! `C^perp` is the image of `Ann(C)` under `f(x) -> f(1/x)`, which on
//! generators amounts to taking reciprocals. Other cases are solved as a
//! linear system.

use std::ops::ControlFlow;

use crate::code::{canonicalize_ideal, from_span, CyclicCode};
use crate::codewords::{check_budget, for_each_in_span, CodewordSet};
use crate::error::Result;
use crate::linalg::Subspace;
use crate::poly::Poly;
use crate::reversibility::{is_reversible, is_reversible_by_basis};
use crate::ring::{raw, RPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualMethod {
    /// `Ann(C) = <A, u G>`, any q, `gcd(n, q) = 1`.
    CoprimeFormula,
    /// `Ann(C) = <A + u m2, u G>` over GF(2).
    TwoGeneratorFormula,
    /// `Ann(C) = <G + u m2>` over GF(2), `a = g`.
    SingleGeneratorFormula,
    /// Orthogonal complement by linear algebra.
    OracleOnly,
}

impl DualMethod {
    pub fn name(self) -> &'static str {
        match self {
            DualMethod::CoprimeFormula => "coprime-formula",
            DualMethod::TwoGeneratorFormula => "two-generator-formula",
            DualMethod::SingleGeneratorFormula => "single-generator-formula",
            DualMethod::OracleOnly => "oracle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilator {
    /// Nonzero generators modulo `x^n - 1`.
    pub generators: Vec<RPoly>,
    pub method: DualMethod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualReversibilityReason {
    /// `C` reversible with `gcd(n, q) = 1`.
    CoprimeReversible,
    /// `C` reversible over GF(2), `a != g`, `p != 0` and `a | p* + x^j p`.
    TorsionCondition { i: usize, j: usize },
    /// Reversal closure of the computed dual.
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualReversibility {
    pub reversible: bool,
    pub reason: DualReversibilityReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualReport {
    pub annihilator: Vec<RPoly>,
    /// Reciprocals of the annihilator generators.
    pub dual_generators: Vec<RPoly>,
    pub dual: CyclicCode,
    pub method: DualMethod,
    pub dual_reversible: DualReversibility,
}

/// `p (x^n - 1)/g / a`, exact by the torsion condition.
pub fn m2(code: &CyclicCode) -> Poly {
    (code.p() * &code.g_cofactor())
        .div_exact(code.a())
        .expect("a divides p (x^n-1)/g")
}

fn nonzero_reduced(n: usize, gens: impl IntoIterator<Item = RPoly>) -> Vec<RPoly> {
    gens.into_iter()
        .map(|g| g.reduce_cyclic(n))
        .filter(|g| !g.is_zero())
        .collect()
}

fn reciprocals(gens: &[RPoly]) -> Vec<RPoly> {
    gens.iter()
        .map(|g| g.reciprocal().expect("generators are nonzero"))
        .collect()
}

pub fn annihilator(code: &CyclicCode) -> Result<Annihilator> {
    let n = code.n();
    let big_a = code.a_cofactor();
    let big_g = code.g_cofactor();
    if code.is_coprime_case() {
        return Ok(Annihilator {
            generators: nonzero_reduced(
                n,
                [RPoly::from_unit_part(big_a), RPoly::u_times(big_g)],
            ),
            method: DualMethod::CoprimeFormula,
        });
    }
    if code.field().size() == 2 {
        let m2 = m2(code);
        if code.is_single_generator() {
            return Ok(Annihilator {
                generators: nonzero_reduced(n, [RPoly::new(big_g, m2)?]),
                method: DualMethod::SingleGeneratorFormula,
            });
        }
        return Ok(Annihilator {
            generators: nonzero_reduced(n, [RPoly::new(big_a, m2)?, RPoly::u_times(big_g)]),
            method: DualMethod::TwoGeneratorFormula,
        });
    }
    let dual = dual_nullspace(code)?;
    let ann = canonicalize_ideal(n, code.field(), &reciprocals(&dual.generators()))?;
    Ok(Annihilator {
        generators: ann.generators(),
        method: DualMethod::OracleOnly,
    })
}

/// `C^perp` as the null space of the conditions `v . c = 0` in R for the
/// basis rows `c`: with `v = v0 + u v1`, `c = c0 + u c1` these are
/// `v0 . c0 = 0` and `v0 . c1 + v1 . c0 = 0` over GF(q).
pub fn dual_nullspace(code: &CyclicCode) -> Result<CyclicCode> {
    let n = code.n();
    let field = code.field();
    let mut conditions = Subspace::new(field, 2 * n);
    for row in code.basis_rows() {
        let (c0, c1) = row.split_at(n);
        let mut first = c0.to_vec();
        first.extend(std::iter::repeat_n(0, n));
        conditions.insert(first);
        let mut second = c1.to_vec();
        second.extend_from_slice(c0);
        conditions.insert(second);
    }
    let span = Subspace::from_rows(field, 2 * n, conditions.annihilator_basis());
    from_span(n, &span)
}

/// All of `R^n` scanned for words orthogonal to `C`. Needs `q^{2n} <= budget`.
pub fn dual_oracle(code: &CyclicCode, budget: u64) -> Result<CodewordSet> {
    let n = code.n();
    let field = code.field();
    check_budget(field.size(), 2 * n, budget)?;
    let rows = code.codewords().basis_rows().to_vec();
    let unit: Vec<Vec<u32>> = (0..2 * n)
        .map(|i| {
            let mut v = vec![0; 2 * n];
            v[i] = 1;
            v
        })
        .collect();
    let mut span = Subspace::new(field, 2 * n);
    let _ = for_each_in_span(field, &unit, 2 * n, |w| {
        if rows.iter().all(|c| raw::inner(field, w, c) == (0, 0)) && !span.contains(w) {
            span.insert(w.to_vec());
        }
        ControlFlow::<()>::Continue(())
    });
    Ok(CodewordSet::from_span(n, span))
}

fn dual_parts(code: &CyclicCode) -> Result<(Annihilator, Vec<RPoly>, CyclicCode)> {
    let ann = annihilator(code)?;
    let gens = reciprocals(&ann.generators);
    let dual = if ann.method == DualMethod::OracleOnly {
        dual_nullspace(code)?
    } else {
        canonicalize_ideal(code.n(), code.field(), &gens)?
    };
    Ok((ann, gens, dual))
}

pub fn dual(code: &CyclicCode) -> Result<DualReport> {
    let (ann, gens, dual) = dual_parts(code)?;
    let dual_reversible = dual_reversibility(code, &dual);
    Ok(DualReport {
        annihilator: ann.generators,
        dual_generators: gens,
        dual,
        method: ann.method,
        dual_reversible,
    })
}

/// Whether `C^perp` is reversible, by the sufficient conditions where they
/// apply and otherwise by reversal closure of the dual.
pub fn is_dual_reversible(code: &CyclicCode) -> Result<DualReversibility> {
    if let Some(r) = dual_reversibility_by_conditions(code) {
        return Ok(r);
    }
    let (_, _, dual) = dual_parts(code)?;
    Ok(dual_reversibility(code, &dual))
}

fn dual_reversibility(code: &CyclicCode, dual: &CyclicCode) -> DualReversibility {
    dual_reversibility_by_conditions(code).unwrap_or_else(|| DualReversibility {
        reversible: is_reversible_by_basis(dual),
        reason: DualReversibilityReason::Oracle,
    })
}

fn dual_reversibility_by_conditions(code: &CyclicCode) -> Option<DualReversibility> {
    if !is_reversible(code).reversible {
        return None;
    }
    if code.is_coprime_case() {
        return Some(DualReversibility {
            reversible: true,
            reason: DualReversibilityReason::CoprimeReversible,
        });
    }
    if code.field().size() != 2 || code.is_single_generator() || code.p().is_zero() {
        return None;
    }
    let m2 = m2(code);
    let m2_star = m2.reciprocal().ok()?;
    let deg_big_a = code.a_cofactor().degree()?;
    let i = deg_big_a.checked_sub(m2.degree()?)?;
    let j = deg_big_a.checked_sub(m2_star.degree()?)?.checked_sub(i)?;
    let p = code.p();
    let cond = &p.reciprocal().ok()? + &p.shift(j);
    code.a().divides(&cond).ok()?.then_some(DualReversibility {
        reversible: true,
        reason: DualReversibilityReason::TorsionCondition { i, j },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::enumerate_codes;
    use crate::field::Field;

    fn code(n: usize, q: u32, text: &str) -> CyclicCode {
        CyclicCode::parse(n, &Field::prime(q).unwrap(), text).unwrap()
    }

    fn annihilates(c: &CyclicCode, gens: &[RPoly]) -> bool {
        gens.iter().all(|h| {
            c.generators()
                .iter()
                .all(|g| (h * g).reduce_cyclic(c.n()).is_zero())
        })
    }

    #[test]
    fn small_annihilators() {
        let c = code(3, 2, "x+1, u");
        let ann = annihilator(&c).unwrap();
        assert_eq!(
            ann.generators,
            vec![RPoly::u_times(Poly::parse(c.field(), "x^2+x+1").unwrap())]
        );
        assert!(annihilates(&c, &ann.generators));
        let c = code(7, 2, "(x+1)(x^3+x+1), u(x+1)");
        assert!(annihilates(&c, &annihilator(&c).unwrap().generators));
        let whole = CyclicCode::whole(4, c.field());
        assert!(annihilator(&whole).unwrap().generators.is_empty());
    }

    #[test]
    fn dual_matches_nullspace_and_oracle() {
        for (n, q) in [(3, 2), (4, 2), (4, 3), (2, 3), (2, 5)] {
            let f = Field::prime(q).unwrap();
            for c in enumerate_codes(n, &f).unwrap() {
                let report = dual(&c).unwrap();
                assert!(annihilates(&c, &annihilator(&c).unwrap().generators), "{c}");
                assert_eq!(report.dual, dual_nullspace(&c).unwrap(), "{c} n={n} q={q}");
                let oracle = dual_oracle(&c, 1 << 16).unwrap();
                assert_eq!(&oracle, &report.dual.codewords(), "{c} n={n} q={q}");
                assert_eq!(report.dual.log_size() + c.log_size(), 2 * n);
                assert_eq!(dual(&report.dual).unwrap().dual, c);
                assert_eq!(
                    report.dual_reversible.reversible,
                    is_reversible_by_basis(&report.dual)
                );
            }
        }
    }

    #[test]
    fn degenerate_cases() {
        let f2 = Field::prime(2).unwrap();
        assert!(dual(&CyclicCode::zero(3, &f2)).unwrap().dual == CyclicCode::whole(3, &f2));
        assert!(dual(&CyclicCode::whole(3, &f2)).unwrap().dual.is_zero());
        assert_eq!(dual_oracle(&CyclicCode::whole(2, &f2), 16).unwrap().dim(), 0);
    }
}
