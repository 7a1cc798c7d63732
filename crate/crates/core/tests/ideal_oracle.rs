use std::collections::HashSet;

use chaincode::code::ideal_span;
use chaincode::linalg::Subspace;
use chaincode::{canonicalize_ideal, enumerate_codes, from_span, CyclicCode, Field, Poly, RPoly};

fn key(s: &Subspace) -> Vec<Vec<u32>> {
    s.rows().to_vec()
}

/// Every ideal of R[x]/(x^n - 1): the principal ones, closed under sums.
fn all_ideals(n: usize, f: &Field) -> Vec<Subspace> {
    let q = f.size() as usize;
    let mut seen = HashSet::new();
    let mut ideals = Vec::new();
    for idx in 0..q.pow(2 * n as u32) {
        let digits: Vec<u32> = (0..2 * n).map(|i| ((idx / q.pow(i as u32)) % q) as u32).collect();
        let gen = RPoly::new(
            Poly::from_coeffs(f, digits[..n].to_vec()),
            Poly::from_coeffs(f, digits[n..].to_vec()),
        )
        .unwrap();
        let span = ideal_span(n, f, &[gen]).unwrap();
        if seen.insert(key(&span)) {
            ideals.push(span);
        }
    }
    let mut i = 0;
    while i < ideals.len() {
        for j in 0..i {
            let rows = ideals[i].rows().iter().chain(ideals[j].rows()).cloned();
            let sum = Subspace::from_rows(f, 2 * n, rows);
            if seen.insert(key(&sum)) {
                ideals.push(sum);
            }
        }
        i += 1;
    }
    ideals
}

const PAIRS: [(usize, u32, usize); 9] = [
    (1, 2, 3),
    (2, 2, 7),
    (3, 2, 9),
    (4, 2, 23),
    (5, 2, 9),
    (6, 2, 63),
    (2, 3, 9),
    (3, 3, 16),
    (2, 5, 9),
];

#[test]
fn enumeration_matches_brute_force() {
    for (n, q, frozen) in PAIRS {
        let f = Field::prime(q).unwrap();
        let oracle = all_ideals(n, &f);
        let codes = enumerate_codes(n, &f).unwrap();
        assert_eq!(oracle.len(), frozen, "oracle count n={n} q={q}");
        assert_eq!(codes.len(), frozen, "enumerated count n={n} q={q}");
        let enumerated: HashSet<_> = codes.iter().map(|c| key(c.codewords().span())).collect();
        assert_eq!(enumerated.len(), codes.len(), "duplicates n={n} q={q}");
        for s in &oracle {
            assert!(enumerated.contains(&key(s)), "missing ideal n={n} q={q}");
            let c = from_span(n, s).unwrap();
            assert_eq!(key(c.codewords().span()), key(s));
        }
    }
}

#[test]
fn cardinality_formula() {
    for (n, q, _) in PAIRS {
        let f = Field::prime(q).unwrap();
        for c in enumerate_codes(n, &f).unwrap() {
            assert_eq!(c.codewords().dim(), (n - c.deg_g()) + (n - c.deg_a()), "{c}");
            assert_eq!(c.cardinality(), c.codewords().size());
        }
    }
}

#[test]
fn coprime_pair_collapses_to_one_generator() {
    // gcd(n, q) = 1: <g, u a> = <g + u a>
    for (n, q) in [(3, 2), (5, 2), (7, 2), (4, 3), (2, 5)] {
        let f = Field::prime(q).unwrap();
        for c in enumerate_codes(n, &f).unwrap() {
            if c.is_zero() {
                continue;
            }
            let two = canonicalize_ideal(
                n,
                &f,
                &[RPoly::from_unit_part(c.g().clone()), RPoly::u_times(c.a().clone())],
            )
            .unwrap();
            let one = canonicalize_ideal(n, &f, &[RPoly::new(c.g().clone(), c.a().clone()).unwrap()])
                .unwrap();
            assert_eq!(two, one, "{c}");
            assert_eq!(two, c);
        }
    }
}

#[test]
fn canonical_literal_round_trips() {
    for (n, q, _) in PAIRS {
        let f = Field::prime(q).unwrap();
        for c in enumerate_codes(n, &f).unwrap() {
            assert_eq!(CyclicCode::parse(n, &f, &c.literal()).unwrap(), c);
        }
    }
}
