//! Dense univariate polynomials over GF(q), reciprocals, and fixed-length words.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// A polynomial over a finite field, lowest degree first.
///
/// Always normalized: no trailing zero coefficients, so the zero polynomial
/// is the empty vector and [`Poly::degree`] returns `None` for it.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl Poly {
    /// Builds a polynomial from residue indices, lowest degree first.
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<u32>) -> Poly {
        assert!(
            coeffs.iter().all(|&c| c < field.size()),
            "coefficient out of range for {field}"
        );
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_elements(field: &Field, coeffs: &[FieldElement]) -> Result<Poly> {
        let raw = coeffs
            .iter()
            .map(|c| field.check(c.field()).map(|_| c.value()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(field, raw))
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::from_coeffs(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, 1)
    }

    pub fn constant(field: &Field, c: u32) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    /// `c x^e`.
    pub fn monomial(field: &Field, c: u32, e: usize) -> Poly {
        let mut coeffs = vec![0; e + 1];
        coeffs[e] = c;
        Poly::from_coeffs(field, coeffs)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_1(field: &Field, n: usize) -> Poly {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = field.add(coeffs[n], 1);
        Poly::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeff_element(&self, i: usize) -> FieldElement {
        self.field.element(self.coeff(i))
    }

    /// `None` encodes the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` standing in for the zero polynomial.
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Lowest power of `x` dividing `self` (zero for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|&c| c != 0).unwrap_or(0)
    }

    pub fn eval(&self, at: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.field.add(self.field.mul(acc, at), c))
    }

    pub fn scale(&self, c: u32) -> Poly {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    /// Multiplies by `x^e`.
    pub fn shift(&self, e: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; e];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::from_coeffs(&self.field, coeffs)
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.field.inv(self.leading()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.field.check(&other.field)?;
        Ok(self.zip_with(other, |f, a, b| f.add(a, b)))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.field.check(&other.field)?;
        Ok(self.zip_with(other, |f, a, b| f.sub(a, b)))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.field.check(&other.field)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::from_coeffs(f, out))
    }

    fn zip_with(&self, other: &Poly, op: impl Fn(&Field, u32, u32) -> u32) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| op(&self.field, self.coeff(i), other.coeff(i)))
            .collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    /// Euclidean division: `self = quotient * divisor + remainder`,
    /// `deg remainder < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.field.check(&divisor.field)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![0; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c == 0 {
                continue;
            }
            quot[top - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + j;
                rem[idx] = f.sub(rem[idx], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(f, quot), Poly::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    /// Quotient of an exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Internal(format!("{divisor} does not divide {self}")))
        }
    }

    /// Whether `self` divides `other`. The zero polynomial divides nothing
    /// but is itself divisible by everything.
    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.field.check(&other.field)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Returns `(d, s, t)` with `s*self + t*other = d`, `d` the monic gcd.
    pub fn ext_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.field.check(&other.field)?;
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        match f.inv(r0.leading()) {
            Some(c) => Ok((r0.scale(c), s0.scale(c), t0.scale(c))),
            None => Ok((r0, s0, t0)),
        }
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^e mod modulus`.
    pub fn powmod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Reduction modulo `x^n - 1`: exponents fold modulo `n`.
    pub fn reduce_cyclic(&self, n: usize) -> Poly {
        let mut coeffs = vec![0; n.min(self.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i % n] = self.field.add(coeffs[i % n], c);
        }
        Poly::from_coeffs(&self.field, coeffs)
    }

    /// `x^{deg f} f(1/x)`: the coefficient vector reversed, then normalized.
    pub fn reciprocal(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let coeffs = self.coeffs.iter().rev().copied().collect();
        Ok(Poly::from_coeffs(&self.field, coeffs))
    }

    /// Exact palindrome test: `f* == f`.
    pub fn is_self_reciprocal(&self) -> Result<bool> {
        Ok(self.reciprocal()? == *self)
    }

    /// `f* == c f` for some nonzero scalar `c`, i.e. `<f*> = <f>` as ideals.
    pub fn is_self_reciprocal_up_to_unit(&self) -> Result<bool> {
        Ok(self.reciprocal()?.monic() == self.monic())
    }

    /// Irreducibility by the distinct-degree criterion: no factor of degree
    /// `d <= deg/2`, detected as `gcd(x^{q^d} - x, f) != 1`.
    pub fn is_irreducible(&self) -> bool {
        let Some(deg) = self.degree() else {
            return false;
        };
        if deg == 0 {
            return false;
        }
        if deg == 1 {
            return true;
        }
        let q = self.field.size() as u64;
        let x = Poly::x(&self.field);
        let mut frob = x.clone();
        for _ in 1..=deg / 2 {
            frob = frob.powmod(q, self).expect("nonzero modulus");
            let g = (&frob - &x).gcd(self).expect("same field");
            if !g.is_one() {
                return false;
            }
        }
        true
    }

    /// Coefficients as a length-`n` word. Panics if `deg >= n`.
    pub fn to_word(&self, n: usize) -> Word<FieldElement> {
        assert!(self.coeffs.len() <= n, "polynomial does not fit in length {n}");
        Word::new((0..n).map(|i| self.coeff_element(i)).collect())
    }

    /// Parses text such as `x^3+2x+1` or `(x+1)*(x^2+1)`.
    pub fn parse(field: &Field, text: &str) -> Result<Poly> {
        let r = crate::literal::parse_rpoly(field, text)?;
        if !r.u_part().is_zero() {
            return Err(Error::Parse(format!("{text:?} has a u-component")));
        }
        Ok(r.unit_part().clone())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics if the operands live in different fields.
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomials over different fields")
            }
        }

        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Poly::from_coeffs(&self.field, coeffs)
    }
}

/// Descending powers, e.g. `x^3+2x+1`; `0` for the zero polynomial.
pub(crate) fn format_terms(coeffs: &[u32], var: char, coeff: &dyn Fn(u32) -> String) -> String {
    let mut terms = Vec::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mut cs = coeff(c);
        if cs.contains('+') {
            cs = format!("({cs})");
        }
        terms.push(match (e, cs.as_str()) {
            (0, _) => cs,
            (1, "1") => var.to_string(),
            (1, _) => format!("{cs}{var}"),
            (_, "1") => format!("{var}^{e}"),
            _ => format!("{cs}{var}^{e}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = &self.field;
        f.write_str(&format_terms(&self.coeffs, 'x', &|c| {
            field.element(c).to_string()
        }))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

/// A word of fixed length `n`, identified with `c_0 + c_1 x + ... + c_{n-1} x^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word<T> {
    entries: Vec<T>,
}

impl<T: Clone> Word<T> {
    pub fn new(entries: Vec<T>) -> Self {
        Word { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }
}

impl<T> Index<usize> for Word<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.entries[i]
    }
}

/// `(c_0, ..., c_{n-1}) -> (c_{n-1}, ..., c_0)`.
pub fn word_reverse<T: Clone>(word: &Word<T>) -> Word<T> {
    Word::new(word.entries.iter().rev().cloned().collect())
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
    fn products_from_small_factorizations() {
        let f3 = gf(3);
        assert_eq!(&poly(&f3, "x+1") * &poly(&f3, "x+2"), poly(&f3, "x^2+2"));
        let f2 = gf(2);
        assert_eq!(poly(&f2, "x+1").pow(2), poly(&f2, "x^2+1"));
    }

    #[test]
    fn divmod_reconstructs() {
        let f3 = gf(3);
        let (a, b) = (poly(&f3, "x^2+1"), poly(&f3, "x+1"));
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(q, poly(&f3, "x+2"));
        assert_eq!(r, Poly::constant(&f3, 2));
        assert_eq!(&(&q * &b) + &r, a);
        assert_eq!(a.divmod(&Poly::zero(&f3)).unwrap_err(), Error::DivisionByZero);
        let f5 = gf(5);
        assert_eq!(
            a.try_add(&Poly::one(&f5)).unwrap_err(),
            Error::FieldMismatch
        );
    }

    #[test]
    fn gcd_examples() {
        let f2 = gf(2);
        let g = poly(&f2, "x+1")
            .gcd(&poly(&f2, "x^4+x^3+x^2+x+1"))
            .unwrap();
        assert!(g.is_one());
        let f3 = gf(3);
        assert_eq!(
            poly(&f3, "2x+2").gcd(&Poly::zero(&f3)).unwrap(),
            poly(&f3, "x+1")
        );
        let a = poly(&f2, "x+1");
        assert_eq!(a.pow(2).gcd(&a.pow(3)).unwrap(), a.pow(2));
    }

    #[test]
    fn ext_gcd_bezout() {
        let f5 = gf(5);
        let a = poly(&f5, "x^4+3x+2");
        let b = poly(&f5, "x^2+4");
        let (d, s, t) = a.ext_gcd(&b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), d);
        assert_eq!(d, a.gcd(&b).unwrap());
    }

    #[test]
    fn reciprocal_examples() {
        let f2 = gf(2);
        assert_eq!(
            poly(&f2, "x^3+x+1").reciprocal().unwrap(),
            poly(&f2, "x^3+x^2+1")
        );
        assert_eq!(poly(&f2, "x+1").reciprocal().unwrap(), poly(&f2, "x+1"));
        let f3 = gf(3);
        let f = poly(&f3, "x^2+2x+2");
        let r = f.reciprocal().unwrap();
        assert_eq!(r, poly(&f3, "2x^2+2x+1"));
        assert_eq!(r.reciprocal().unwrap(), f);
        // x^2 + x: reciprocal drops degree since f(0) = 0
        assert_eq!(poly(&f3, "x^2+x").reciprocal().unwrap(), poly(&f3, "x+1"));
        assert_eq!(Poly::zero(&f3).reciprocal().unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn self_reciprocal_examples() {
        let f2 = gf(2);
        assert!(poly(&f2, "x^4+x^3+x^2+x+1").is_self_reciprocal().unwrap());
        assert!(!poly(&f2, "x^3+x+1").is_self_reciprocal().unwrap());
        assert!(Poly::one(&f2).is_self_reciprocal().unwrap());
        let f3 = gf(3);
        // x - 1 is anti-palindromic: reciprocal is -(x - 1)
        let x_minus_1 = poly(&f3, "x+2");
        assert!(!x_minus_1.is_self_reciprocal().unwrap());
        assert!(x_minus_1.is_self_reciprocal_up_to_unit().unwrap());
        assert!(!poly(&f3, "x^2+x+2").is_self_reciprocal_up_to_unit().unwrap());
    }

    #[test]
    fn divides_examples() {
        let f3 = gf(3);
        let xn1 = Poly::x_n_minus_1(&f3, 4);
        assert!(poly(&f3, "x+1").divides(&xn1).unwrap());
        assert!(!poly(&f3, "x^2+1").divides(&poly(&f3, "x+1")).unwrap());
        assert!(poly(&f3, "x^2+1").divides(&Poly::zero(&f3)).unwrap());
        assert_eq!(
            Poly::zero(&f3).divides(&xn1).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn word_reversal() {
        let w = Word::new(vec![1, 0, 2, 0]);
        assert_eq!(word_reverse(&w), Word::new(vec![0, 2, 0, 1]));
        let z = Word::new(vec![0u32; 5]);
        assert_eq!(word_reverse(&z), z);
    }

    #[test]
    fn irreducibility() {
        let f2 = gf(2);
        assert!(poly(&f2, "x^3+x+1").is_irreducible());
        assert!(poly(&f2, "x^4+x^3+x^2+x+1").is_irreducible());
        assert!(!poly(&f2, "x^4+x^2+1").is_irreducible());
        assert!(!Poly::one(&f2).is_irreducible());
        let f3 = gf(3);
        assert!(poly(&f3, "x^2+1").is_irreducible());
        assert!(!poly(&f3, "x^2+2").is_irreducible());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let f3 = gf(3);
        let f = poly(&f3, "1 + 2*x + x^3");
        assert_eq!(f.to_string(), "x^3+2x+1");
        assert_eq!(poly(&f3, &f.to_string()), f);
        assert_eq!(Poly::zero(&f3).to_string(), "0");
        assert_eq!(poly(&f3, "(x+1)(x+2)(x^2+1)"), Poly::x_n_minus_1(&f3, 4));
        assert!(Poly::parse(&f3, "x+u").is_err());
        let f4: Field = "GF(4; x^2+x+1)".parse().unwrap();
        let g = poly(&f4, "x^2+(a+1)x+a");
        assert_eq!(g.to_string(), "x^2+(a+1)x+a");
        assert_eq!(poly(&f4, &g.to_string()), g);
    }

    #[test]
    fn cyclic_reduction() {
        let f2 = gf(2);
        assert!(Poly::x_n_minus_1(&f2, 5).reduce_cyclic(5).is_zero());
        assert_eq!(poly(&f2, "x^6+x").reduce_cyclic(5), Poly::zero(&f2));
        assert_eq!(poly(&f2, "x^7+1").reduce_cyclic(5), poly(&f2, "x^2+1"));
    }
}
