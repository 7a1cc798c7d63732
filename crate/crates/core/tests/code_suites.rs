use chaincode::reversibility::is_reversible_by_basis;
use chaincode::{
    dual, dual_oracle, enumerate_codes, is_dual_reversible, is_reversible, is_reversible_oracle,
    min_distance, CyclicCode, Field,
};

const BUDGET: u64 = 1 << 16;

fn codes(n: usize, q: u32) -> Vec<CyclicCode> {
    enumerate_codes(n, &Field::prime(q).unwrap()).unwrap()
}

#[test]
fn reversibility_agrees_with_basis_test() {
    for (n, q) in [(4, 3), (5, 2), (4, 2), (6, 2), (6, 3), (7, 2), (8, 2), (3, 5), (9, 3)] {
        for c in codes(n, q) {
            assert_eq!(is_reversible(&c).reversible, is_reversible_by_basis(&c), "n={n} q={q} {c}");
        }
    }
}

#[test]
fn reversibility_oracle_on_odd_characteristic() {
    for (n, q) in [(3, 3), (2, 5), (4, 5), (3, 7)] {
        for c in codes(n, q) {
            if let Ok(o) = is_reversible_oracle(&c, BUDGET) {
                assert_eq!(is_reversible(&c).reversible, o, "n={n} q={q} {c}");
            }
        }
    }
}

#[test]
fn distance_is_antitone_in_inclusion() {
    for (n, q) in [(4, 2), (6, 2), (4, 3), (6, 3)] {
        let all = codes(n, q);
        let d: Vec<_> = all.iter().map(|c| min_distance(c, BUDGET).unwrap().d).collect();
        for (i, c) in all.iter().enumerate() {
            for (j, e) in all.iter().enumerate() {
                if c.codewords().is_subset_of(&e.codewords()) && !c.is_zero() {
                    assert!(d[j] <= d[i], "{c} inside {e}");
                }
            }
        }
    }
}

#[test]
fn distance_bounded_by_weight_of_a() {
    for (n, q) in [(6, 2), (6, 3), (10, 5), (7, 2)] {
        for c in codes(n, q) {
            let r = min_distance(&c, BUDGET).unwrap();
            if c.is_zero() {
                assert_eq!(r.d, None);
                continue;
            }
            let wt = c.a().coeffs().iter().filter(|&&x| x != 0).count();
            assert!(r.d.unwrap() <= wt, "{c}");
            assert!(r.d.unwrap() <= n + 1 - r.k, "{c}");
        }
    }
}

#[test]
fn duals_in_odd_characteristic() {
    for (n, q) in [(3, 3), (2, 3), (2, 5), (3, 5)] {
        for c in codes(n, q) {
            let report = dual(&c).unwrap();
            if let Ok(oracle) = dual_oracle(&c, 1 << 20) {
                assert_eq!(report.dual.codewords(), oracle, "n={n} q={q} {c}");
            }
            assert_eq!(c.log_size() + report.dual.log_size(), 2 * n);
            assert_eq!(dual(&report.dual).unwrap().dual, c);
        }
    }
}

#[test]
fn dual_reversibility_verdicts_hold() {
    for (n, q) in [(4, 2), (6, 2), (8, 2), (5, 2), (4, 3)] {
        for c in codes(n, q) {
            let verdict = is_dual_reversible(&c).unwrap();
            let d = dual(&c).unwrap().dual;
            assert_eq!(verdict.reversible, is_reversible_by_basis(&d), "n={n} q={q} {c}");
        }
    }
}
