//! Cross-checks of the closed-form results against enumeration and linear
//! algebra, run over every code of one length.

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::code::{canonicalize_ideal, enumerate_codes, CyclicCode};
use crate::codewords::check_budget;
use crate::distance::{min_distance, min_distance_oracle, residue_code};
use crate::duality::{annihilator, dual, dual_nullspace, dual_oracle};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::reversibility::{
    is_field_code_reversible, is_reversible, is_reversible_by_basis, is_reversible_oracle,
};
use crate::ring::raw;

pub const CHECKS: [&str; 16] = [
    "reversibility-oracle",
    "reversibility-basis",
    "residue-reversibility",
    "distance",
    "torsion",
    "canonical-form",
    "ideal-closure",
    "cardinality",
    "uniqueness",
    "annihilator",
    "dual-formula",
    "dual-oracle",
    "dual-cardinality",
    "orthogonality",
    "double-dual",
    "dual-reversibility",
];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Outcome {
    Pass,
    Fail(String),
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub skipped: usize,
    /// `code: detail`, in enumeration order.
    pub failures: Vec<String>,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub field: Field,
    pub budget: u64,
    pub codes: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verify n={} field={} codes={} budget={}",
            self.n, self.field, self.codes, self.budget
        )?;
        for c in &self.checks {
            write!(f, "{}: {}/{} passed", c.name, c.passed, c.total)?;
            if c.skipped > 0 {
                write!(f, ", {} skipped", c.skipped)?;
            }
            writeln!(f)?;
            for fail in &c.failures {
                writeln!(f, "  FAIL {fail}")?;
            }
        }
        write!(f, "RESULT: {}", if self.ok() { "PASS" } else { "FAIL" })
    }
}

fn compare<T: PartialEq + fmt::Debug>(what: &str, left: T, right: T) -> Outcome {
    if left == right {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("{what}: {left:?} vs {right:?}"))
    }
}

fn within_budget<T>(r: Result<T>, f: impl FnOnce(T) -> Outcome) -> Outcome {
    match r {
        Ok(v) => f(v),
        Err(Error::BudgetExceeded { .. }) => Outcome::Skip,
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn shift_raw(word: &[u32]) -> Vec<u32> {
    let n = word.len() / 2;
    let mut out = Vec::with_capacity(word.len());
    for block in [&word[..n], &word[n..]] {
        out.push(block[n - 1]);
        out.extend_from_slice(&block[..n - 1]);
    }
    out
}

fn times_u_raw(word: &[u32]) -> Vec<u32> {
    let n = word.len() / 2;
    let mut out = vec![0; word.len()];
    out[n..].copy_from_slice(&word[..n]);
    out
}

fn check_code(code: &CyclicCode, budget: u64) -> Vec<Outcome> {
    let n = code.n();
    let field = code.field();
    let set = code.codewords();
    let verdict = is_reversible(code);
    let mut out = Vec::with_capacity(CHECKS.len());

    out.push(within_budget(is_reversible_oracle(code, budget), |o| {
        compare("closed form vs words", verdict.reversible, o)
    }));
    out.push(compare(
        "closed form vs basis",
        verdict.reversible,
        is_reversible_by_basis(code),
    ));
    out.push(if verdict.reversible {
        compare(
            "<g>, <a> reversible",
            (true, true),
            (
                is_field_code_reversible(code.g(), n),
                is_field_code_reversible(code.a(), n),
            ),
        )
    } else {
        Outcome::Skip
    });
    out.push(within_budget(
        min_distance(code, budget).and_then(|r| Ok((r.d, min_distance_oracle(code, budget)?))),
        |(residue, brute)| compare("residue vs brute force", residue, brute),
    ));
    let res = residue_code(code);
    out.push(compare("torsion vs a", &res.torsion, &res.a));
    out.push(match canonicalize_ideal(n, field, &code.generators()) {
        Ok(c) => match CyclicCode::parse(n, field, &code.literal()) {
            Ok(p) => compare("canonical form", (&c, &p), (code, code)),
            Err(e) => Outcome::Fail(format!("literal: {e}")),
        },
        Err(e) => Outcome::Fail(e.to_string()),
    });
    out.push(
        match set.basis_rows().iter().find(|r| {
            !set.contains_raw(&shift_raw(r)) || !set.contains_raw(&times_u_raw(r))
        }) {
            None => Outcome::Pass,
            Some(r) => Outcome::Fail(format!("row {r:?} leaves the code")),
        },
    );
    out.push(within_budget(
        check_budget(field.size(), code.log_size(), budget),
        |expected| {
            let mut count = 0u64;
            let _ = set.for_each(budget, |_| {
                count += 1;
                ControlFlow::<()>::Continue(())
            });
            compare("streamed vs formula", count, expected)
        },
    ));
    // uniqueness is filled in afterwards
    out.push(Outcome::Skip);
    out.push(match annihilator(code) {
        Ok(ann) => {
            let bad = ann.generators.iter().any(|h| {
                code.generators()
                    .iter()
                    .any(|g| !(h * g).reduce_cyclic(n).is_zero())
            });
            compare("annihilates", false, bad)
        }
        Err(e) => Outcome::Fail(e.to_string()),
    });
    let report = match dual(code) {
        Ok(r) => r,
        Err(e) => {
            let msg = e.to_string();
            while out.len() < CHECKS.len() {
                out.push(Outcome::Fail(msg.clone()));
            }
            return out;
        }
    };
    let d = &report.dual;
    out.push(match dual_nullspace(code) {
        Ok(ns) => compare("formula vs null space", d, &ns),
        Err(e) => Outcome::Fail(e.to_string()),
    });
    out.push(within_budget(dual_oracle(code, budget), |o| {
        compare("dual vs exhaustive", &d.codewords(), &o)
    }));
    out.push(compare("log|C| + log|C^perp|", code.log_size() + d.log_size(), 2 * n));
    let dual_rows = d.basis_rows();
    let orthogonal = set
        .basis_rows()
        .iter()
        .all(|c| dual_rows.iter().all(|v| raw::inner(field, c, v) == (0, 0)));
    out.push(compare("orthogonal", true, orthogonal));
    out.push(match dual(d) {
        Ok(dd) => compare("dual of dual", &dd.dual, code),
        Err(e) => Outcome::Fail(e.to_string()),
    });
    out.push(compare(
        "dual reversibility",
        report.dual_reversible.reversible,
        is_reversible_by_basis(d),
    ));
    out
}

/// Runs every check over every code of length `n`. Enumeration-based checks
/// are skipped for codes whose word count exceeds `budget`.
pub fn verify(n: usize, field: &Field, budget: u64) -> Result<VerifyReport> {
    let codes = enumerate_codes(n, field)?;
    let mut outcomes: Vec<Vec<Outcome>> = codes.par_iter().map(|c| check_code(c, budget)).collect();
    let unique = CHECKS.iter().position(|&c| c == "uniqueness").expect("listed");
    let mut seen: HashMap<Vec<Vec<u32>>, usize> = HashMap::new();
    for (i, c) in codes.iter().enumerate() {
        let rows = c.codewords().basis_rows().to_vec();
        outcomes[i][unique] = match seen.insert(rows, i) {
            None => Outcome::Pass,
            Some(j) => Outcome::Fail(format!("same words as {}", codes[j])),
        };
    }
    let checks = CHECKS
        .iter()
        .enumerate()
        .map(|(k, &name)| {
            let mut check = Check {
                name,
                passed: 0,
                total: 0,
                skipped: 0,
                failures: Vec::new(),
            };
            for (code, o) in codes.iter().zip(&outcomes) {
                match &o[k] {
                    Outcome::Pass => {
                        check.passed += 1;
                        check.total += 1;
                    }
                    Outcome::Fail(msg) => {
                        check.total += 1;
                        check.failures.push(format!("{code}: {msg}"));
                    }
                    Outcome::Skip => check.skipped += 1,
                }
            }
            check
        })
        .collect();
    Ok(VerifyReport {
        n,
        field: field.clone(),
        budget: budget.min(crate::codewords::MAX_BUDGET),
        codes: codes.len(),
        checks,
    })
}
