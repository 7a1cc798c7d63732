use chaincode::factor::cyclotomic_cosets;
use chaincode::{factor_xn_minus_1, Error, Field, Poly};
use chaincode::factor::factor_xn_minus_1_with;

/// Irreducible iff no monic polynomial of degree 1..=deg/2 divides it.
fn irreducible_by_trial(f: &Poly) -> bool {
    let field = f.field();
    let q = field.size() as usize;
    let deg = f.degree().unwrap();
    for d in 1..=deg / 2 {
        for idx in 0..q.pow(d as u32) {
            let mut coeffs: Vec<u32> = (0..d).map(|i| ((idx / q.pow(i as u32)) % q) as u32).collect();
            coeffs.push(1);
            if Poly::from_coeffs(field, coeffs).divides(f).unwrap() {
                return false;
            }
        }
    }
    true
}

fn fields() -> Vec<Field> {
    let mut out: Vec<Field> = [2, 3, 5, 7].iter().map(|&p| Field::prime(p).unwrap()).collect();
    out.push("GF(4; x^2+x+1)".parse().unwrap());
    out
}

#[test]
fn factors_are_irreducible_and_multiply_out() {
    for f in fields() {
        for n in 1..=20 {
            let fact = match factor_xn_minus_1(n, &f) {
                Ok(fact) => fact,
                Err(Error::UnsupportedFieldSize(_)) => continue,
                Err(e) => panic!("{e}"),
            };
            let mut prod = Poly::one(&f);
            let mut count = 1;
            for (g, e) in fact.factors() {
                assert!(g.is_monic() && irreducible_by_trial(g), "{g} n={n} {f}");
                prod = prod.try_mul(&g.pow(*e as u64)).unwrap();
                count *= *e as usize + 1;
            }
            assert_eq!(prod, Poly::x_n_minus_1(&f, n), "n={n} {f}");
            assert_eq!(fact.divisor_count(), count);
            assert_eq!(fact.divisors().count(), count);
        }
    }
}

#[test]
fn coprime_degrees_follow_cosets() {
    for f in fields() {
        let q = f.size() as u64;
        for n in (1..=30u64).filter(|n| n % f.characteristic() as u64 != 0) {
            let fact = match factor_xn_minus_1(n as usize, &f) {
                Ok(fact) => fact,
                Err(Error::UnsupportedFieldSize(_)) => continue,
                Err(e) => panic!("{e}"),
            };
            let mut coset_sizes: Vec<usize> = cyclotomic_cosets(n, q)
                .unwrap()
                .iter()
                .map(|c| c.members.len())
                .collect();
            let mut degrees: Vec<usize> = fact
                .factors()
                .iter()
                .map(|(g, e)| {
                    assert_eq!(*e, 1);
                    g.degree().unwrap()
                })
                .collect();
            coset_sizes.sort();
            degrees.sort();
            assert_eq!(degrees, coset_sizes, "n={n} {f}");
        }
    }
}

#[test]
fn independent_of_root_choice() {
    let f2 = Field::prime(2).unwrap();
    let f3 = Field::prime(3).unwrap();
    for (n, f) in [(15, &f2), (21, &f2), (13, &f3), (20, &f3)] {
        let base = factor_xn_minus_1(n, f).unwrap();
        for choice in 1..4 {
            let other = factor_xn_minus_1_with(n, f, choice).unwrap();
            assert_eq!(base.factors(), other.factors(), "n={n} choice={choice}");
        }
    }
}

#[test]
fn goldens() {
    let cases: [(usize, u32, &[(&str, u32)]); 5] = [
        (15, 2, &[("x+1", 1), ("x^2+x+1", 1), ("x^4+x+1", 1), ("x^4+x^3+1", 1), ("x^4+x^3+x^2+x+1", 1)]),
        (9, 2, &[("x+1", 1), ("x^2+x+1", 1), ("x^6+x^3+1", 1)]),
        (8, 3, &[("x+1", 1), ("x+2", 1), ("x^2+1", 1), ("x^2+x+2", 1), ("x^2+2x+2", 1)]),
        (12, 2, &[("x+1", 4), ("x^2+x+1", 4)]),
        (6, 2, &[("x+1", 2), ("x^2+x+1", 2)]),
    ];
    for (n, q, expected) in cases {
        let f = Field::prime(q).unwrap();
        let mut got = factor_xn_minus_1(n, &f).unwrap().factors().to_vec();
        let mut want: Vec<(Poly, u32)> = expected
            .iter()
            .map(|(t, e)| (Poly::parse(&f, t).unwrap(), *e))
            .collect();
        got.sort_by_key(|(p, _)| p.coeffs().to_vec());
        want.sort_by_key(|(p, _)| p.coeffs().to_vec());
        assert_eq!(got, want, "n={n} q={q}");
    }
}
