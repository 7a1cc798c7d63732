//! Cyclic codes over R in canonical form `<g + u p, u a>`.

use std::fmt;

use num_bigint::BigUint;

use crate::codewords::{word_to_raw, CodewordSet};
use crate::error::{Error, Result};
use crate::factor::factor_xn_minus_1;
use crate::field::{self, Field};
use crate::linalg::Subspace;
use crate::literal::parse_generators;
use crate::poly::{Poly, Word};
use crate::ring::{RElement, RPoly};

/// An ideal of `R[x]/(x^n - 1)` given by its canonical triple `(g, p, a)`:
///
/// * `a | g | x^n - 1`, both monic;
/// * `deg p < deg a` (so `p = 0` when `a = 1`);
/// * `a | p (x^n - 1)/g`;
/// * `p = 0` whenever `gcd(n, q) = 1`.
///
/// `a = g` is the single-generator code `<g + u p>`; the zero code has
/// `g = a = x^n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    field: Field,
    g: Poly,
    p: Poly,
    a: Poly,
}

impl CyclicCode {
    /// Validates a canonical triple. `p` must already be reduced below
    /// `deg a`; use [`canonicalize_ideal`] for arbitrary generators.
    pub fn new(n: usize, field: &Field, g: Poly, p: Poly, a: Poly) -> Result<CyclicCode> {
        for f in [&g, &p, &a] {
            field.check(f.field())?;
        }
        if n == 0 {
            return Err(Error::InvalidArgument("length must be positive".into()));
        }
        for f in [&g, &a] {
            if !f.is_monic() {
                return Err(Error::NotMonic(f.to_string()));
            }
        }
        let xn1 = Poly::x_n_minus_1(field, n);
        if !g.divides(&xn1)? {
            return Err(Error::NotDivisor(format!("{g} does not divide x^{n}-1")));
        }
        if !a.divides(&g)? {
            return Err(Error::ChainViolation {
                g: g.to_string(),
                a: a.to_string(),
            });
        }
        if p.degree_i64() >= a.degree_i64() {
            return Err(Error::DegreeViolation(format!(
                "deg p = {} must be below deg a = {}",
                p.degree_i64(),
                a.degree_i64()
            )));
        }
        if field::gcd(n as u64, field.characteristic() as u64) == 1 && !p.is_zero() {
            return Err(Error::CoprimeCaseNonzeroP(p.to_string()));
        }
        let cofactor = xn1.div_exact(&g)?;
        if !a.divides(&(&p * &cofactor))? {
            return Err(Error::TorsionViolation {
                a: a.to_string(),
                p: p.to_string(),
            });
        }
        Ok(CyclicCode {
            n,
            field: field.clone(),
            g,
            p,
            a,
        })
    }

    /// `R^n = <1>`.
    pub fn whole(n: usize, field: &Field) -> CyclicCode {
        CyclicCode {
            n,
            field: field.clone(),
            g: Poly::one(field),
            p: Poly::zero(field),
            a: Poly::one(field),
        }
    }

    pub fn zero(n: usize, field: &Field) -> CyclicCode {
        let xn1 = Poly::x_n_minus_1(field, n);
        CyclicCode {
            n,
            field: field.clone(),
            g: xn1.clone(),
            p: Poly::zero(field),
            a: xn1,
        }
    }

    pub fn parse(n: usize, field: &Field, text: &str) -> Result<CyclicCode> {
        let gens = parse_generators(field, text)?;
        canonicalize_ideal(n, field, &gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn deg_g(&self) -> usize {
        self.g.degree().unwrap_or(0)
    }

    pub fn deg_a(&self) -> usize {
        self.a.degree().unwrap_or(0)
    }

    /// `gcd(n, q) = 1`, where `x^n - 1` is squarefree.
    pub fn is_coprime_case(&self) -> bool {
        field::gcd(self.n as u64, self.field.characteristic() as u64) == 1
    }

    pub fn is_single_generator(&self) -> bool {
        self.a == self.g
    }

    pub fn is_zero(&self) -> bool {
        self.deg_a() == self.n
    }

    /// `k = n - deg a`, the dimension of the torsion code `<a>`.
    pub fn dimension(&self) -> usize {
        self.n - self.deg_a()
    }

    /// `log_q |C| = (n - deg g) + (n - deg a)`.
    pub fn log_size(&self) -> usize {
        (self.n - self.deg_g()) + (self.n - self.deg_a())
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.field.size()).pow(self.log_size() as u32)
    }

    /// `(x^n - 1)/g`.
    pub fn g_cofactor(&self) -> Poly {
        Poly::x_n_minus_1(&self.field, self.n)
            .div_exact(&self.g)
            .expect("g divides x^n-1")
    }

    /// `(x^n - 1)/a`.
    pub fn a_cofactor(&self) -> Poly {
        Poly::x_n_minus_1(&self.field, self.n)
            .div_exact(&self.a)
            .expect("a divides x^n-1")
    }

    /// `g + u p` and `u a`, omitting generators that are zero in
    /// `R[x]/(x^n - 1)` and the second one when `a = g`.
    pub fn generators(&self) -> Vec<RPoly> {
        let mut out = Vec::new();
        let first = RPoly::new(self.g.clone(), self.p.clone())
            .expect("same field")
            .reduce_cyclic(self.n);
        if !first.is_zero() {
            out.push(first);
        }
        if !self.is_single_generator() {
            let second = RPoly::u_times(self.a.clone()).reduce_cyclic(self.n);
            if !second.is_zero() {
                out.push(second);
            }
        }
        out
    }

    /// GF(q)-basis in `[u^0 | u^1]` layout: `x^i (g + u p)` for
    /// `i < n - deg g` and `u x^j a` for `j < n - deg a`. None of these
    /// need reduction modulo `x^n - 1`.
    pub fn basis_rows(&self) -> Vec<Vec<u32>> {
        let n = self.n;
        let first = RPoly::new(self.g.clone(), self.p.clone()).expect("same field");
        let second = RPoly::u_times(self.a.clone());
        let mut rows = Vec::with_capacity(self.log_size());
        for i in 0..n - self.deg_g() {
            rows.push(first.shift(i).to_raw(n));
        }
        for j in 0..n - self.deg_a() {
            rows.push(second.shift(j).to_raw(n));
        }
        rows
    }

    pub fn codewords(&self) -> CodewordSet {
        CodewordSet::from_span(
            self.n,
            Subspace::from_rows(&self.field, 2 * self.n, self.basis_rows()),
        )
    }

    /// Membership by row reduction; no enumeration.
    pub fn contains(&self, word: &Word<RElement>) -> bool {
        word.len() == self.n
            && word.entries().iter().all(|e| e.field() == &self.field)
            && self.codewords().contains_raw(&word_to_raw(word))
    }

    /// Generator text accepted by [`CyclicCode::parse`].
    pub fn literal(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = self.g.to_string();
        if !self.p.is_zero() {
            out.push_str(&format!("+u*({})", self.p));
        }
        if !self.is_single_generator() {
            if self.a.is_one() {
                out.push_str(", u");
            } else {
                out.push_str(&format!(", u*({})", self.a));
            }
        }
        out
    }
}

impl fmt::Display for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

/// Every cyclic code of length `n` over `GF(q) + u GF(q)`, each exactly once.
///
/// Order: `g` over the divisors of `x^n - 1`, then `a | g` in divisor
/// order, then `p` in base-q counter order over the admissible residues.
/// With `D = gcd(a, (x^n - 1)/g)` the admissible `p` are `(a/D) r` for
/// `deg r < deg D`.
pub fn enumerate_codes(n: usize, field: &Field) -> Result<Vec<CyclicCode>> {
    let fact = factor_xn_minus_1(n, field)?;
    let xn1 = Poly::x_n_minus_1(field, n);
    let divisors: Vec<_> = fact.divisors().collect();
    let q = field.size() as u64;
    let mut out = Vec::new();
    for g in &divisors {
        let cofactor = xn1.div_exact(&g.poly)?;
        for a in &divisors {
            if a.exponents.iter().zip(&g.exponents).any(|(x, y)| x > y) {
                continue;
            }
            let d = a.poly.gcd(&cofactor)?;
            let base = a.poly.div_exact(&d)?;
            let free = d.degree().unwrap_or(0);
            let count = q.checked_pow(free as u32).ok_or_else(|| {
                Error::InvalidArgument(format!("too many codes at length {n} over {field}"))
            })?;
            for counter in 0..count {
                let mut c = counter;
                let r: Vec<u32> = (0..free)
                    .map(|_| {
                        let v = (c % q) as u32;
                        c /= q;
                        v
                    })
                    .collect();
                let p = &base * &Poly::from_coeffs(field, r);
                out.push(CyclicCode::new(n, field, g.poly.clone(), p, a.poly.clone())?);
            }
        }
    }
    Ok(out)
}

/// GF(q)-span of the ideal generated by `gens` in `R[x]/(x^n - 1)`.
pub fn ideal_span(n: usize, field: &Field, gens: &[RPoly]) -> Result<Subspace> {
    let mut span = Subspace::new(field, 2 * n);
    for gen in gens {
        field.check(gen.field())?;
        let mut cur = gen.reduce_cyclic(n);
        for _ in 0..n {
            span.insert(cur.to_raw(n));
            span.insert(cur.times_u().to_raw(n));
            cur = cur.shift(1).reduce_cyclic(n);
        }
    }
    Ok(span)
}

/// Canonical triple of the ideal generated by arbitrary `gens`.
pub fn canonicalize_ideal(n: usize, field: &Field, gens: &[RPoly]) -> Result<CyclicCode> {
    if n == 0 {
        return Err(Error::InvalidArgument("length must be positive".into()));
    }
    from_span(n, &ideal_span(n, field, gens)?)
}

/// Canonical triple of a span that is an ideal. `g` generates the image of
/// `u -> 0`, `a` the torsion `{b : u b in C}`, and `p` is read off the
/// element of the span whose `u^0` part is `g`.
pub fn from_span(n: usize, span: &Subspace) -> Result<CyclicCode> {
    let field = span.field();
    if span.ncols() != 2 * n {
        return Err(Error::InvalidArgument(format!(
            "span has {} columns, expected {}",
            span.ncols(),
            2 * n
        )));
    }
    let xn1 = Poly::x_n_minus_1(field, n);
    let mut g = xn1.clone();
    let mut a = xn1.clone();
    let mut image_rows = Vec::new();
    for (row, &pc) in span.rows().iter().zip(span.pivots()) {
        if pc < n {
            g = g.gcd(&Poly::from_coeffs(field, row[..n].to_vec()))?;
            image_rows.push((row, pc));
        } else {
            a = a.gcd(&Poly::from_coeffs(field, row[n..].to_vec()))?;
        }
    }
    let p = if g == xn1 {
        Poly::zero(field)
    } else {
        let mut c = vec![0u32; 2 * n];
        for (row, pc) in &image_rows {
            crate::ring::raw::axpy(field, &mut c, g.coeff(*pc), row);
        }
        if Poly::from_coeffs(field, c[..n].to_vec()) != g {
            return Err(Error::NonCanonical("span is not an ideal".into()));
        }
        Poly::from_coeffs(field, c[n..].to_vec()).rem(&a)?
    };
    let code = CyclicCode::new(n, field, g, p, a)
        .map_err(|e| Error::NonCanonical(format!("span is not an ideal: {e}")))?;
    if code.codewords().span() != span {
        return Err(Error::NonCanonical("span is not an ideal".into()));
    }
    Ok(code)
}

/// `(c_0, ..., c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2})`.
pub fn cyclic_shift<T: Clone>(word: &Word<T>) -> Word<T> {
    let e = word.entries();
    if e.is_empty() {
        return word.clone();
    }
    let mut out = Vec::with_capacity(e.len());
    out.push(e[e.len() - 1].clone());
    out.extend_from_slice(&e[..e.len() - 1]);
    Word::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    fn poly(f: &Field, s: &str) -> Poly {
        Poly::parse(f, s).unwrap()
    }

    #[test]
    fn validation() {
        let f3 = gf(3);
        let ok = CyclicCode::new(
            4,
            &f3,
            poly(&f3, "(x+1)(x^2+1)"),
            Poly::zero(&f3),
            poly(&f3, "x+1"),
        )
        .unwrap();
        assert_eq!(ok.log_size(), 4);
        assert!(matches!(
            CyclicCode::new(4, &f3, poly(&f3, "x+1"), Poly::zero(&f3), poly(&f3, "x^2+1")),
            Err(Error::ChainViolation { .. })
        ));
        assert!(matches!(
            CyclicCode::new(4, &f3, poly(&f3, "x^2+x+1"), Poly::zero(&f3), poly(&f3, "x+2")),
            Err(Error::NotDivisor(_))
        ));
        let f2 = gf(2);
        assert!(matches!(
            CyclicCode::new(4, &f2, poly(&f2, "x^2+1"), poly(&f2, "x"), poly(&f2, "x+1")),
            Err(Error::DegreeViolation(_))
        ));
        assert!(matches!(
            CyclicCode::new(4, &f2, poly(&f2, "(x+1)^3"), poly(&f2, "1"), poly(&f2, "(x+1)^2")),
            Err(Error::TorsionViolation { .. })
        ));
        assert!(matches!(
            CyclicCode::new(3, &f2, poly(&f2, "x^2+x+1"), poly(&f2, "1"), poly(&f2, "x^2+x+1")),
            Err(Error::CoprimeCaseNonzeroP(_))
        ));
        assert!(matches!(
            CyclicCode::new(3, &f2, poly(&f2, "x^2+x+1"), Poly::zero(&f2), poly(&f2, "0")),
            Err(Error::NotMonic(_))
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_codes(4, &gf(3)).unwrap().len(), 27);
        let codes = enumerate_codes(1, &gf(2)).unwrap();
        assert_eq!(codes.len(), 3);
        assert_eq!(codes[0], CyclicCode::whole(1, &gf(2)));
        assert!(codes[2].is_zero());
    }

    #[test]
    fn canonicalization_round_trips() {
        for (n, q) in [(4, 2), (4, 3), (6, 2), (3, 2)] {
            let f = gf(q);
            for c in enumerate_codes(n, &f).unwrap() {
                let back = canonicalize_ideal(n, &f, &c.generators()).unwrap();
                assert_eq!(back, c);
                assert_eq!(CyclicCode::parse(n, &f, &c.literal()).unwrap(), c);
            }
        }
    }

    #[test]
    fn non_canonical_generators() {
        let f2 = gf(2);
        let c = CyclicCode::parse(5, &f2, "x+1+u").unwrap();
        assert_eq!(c.g(), &poly(&f2, "x+1"));
        assert!(c.a().is_one());
        assert_eq!(c.dimension(), 5);
        let c = CyclicCode::parse(5, &f2, "(u+1)(x^4+x^3+x^2+x+1)").unwrap();
        assert!(c.is_single_generator());
        assert_eq!(c.literal(), "x^4+x^3+x^2+x+1");
    }

    #[test]
    fn cardinalities() {
        let f3 = gf(3);
        let c = CyclicCode::parse(4, &f3, "(x+1)(x^2+1), u(x^2+1)").unwrap();
        assert_eq!(c.cardinality(), BigUint::from(27u32));
        let c = CyclicCode::parse(4, &f3, "x+1").unwrap();
        assert_eq!(c.cardinality(), BigUint::from(729u32));
        assert_eq!(CyclicCode::whole(2, &gf(2)).cardinality(), BigUint::from(16u32));
        assert_eq!(CyclicCode::zero(2, &gf(2)).literal(), "0");
    }

    #[test]
    fn membership() {
        let f3 = gf(3);
        let c = CyclicCode::parse(4, &f3, "x+1, u").unwrap();
        let u = RElement::u(&f3);
        let z = RElement::zero(&f3);
        assert!(c.contains(&Word::new(vec![u.clone(), u.clone(), z.clone(), z.clone()])));
        let one = RElement::one(&f3);
        assert!(!c.contains(&Word::new(vec![one, z.clone(), z.clone(), z])));
    }

    #[test]
    fn shift_rotates() {
        let w = Word::new(vec![1, 0, 0, 0]);
        assert_eq!(cyclic_shift(&w).entries(), &[0, 1, 0, 0]);
        let mut v = w.clone();
        for _ in 0..4 {
            v = cyclic_shift(&v);
        }
        assert_eq!(v, w);
    }
}
