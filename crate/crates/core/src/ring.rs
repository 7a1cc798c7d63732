//! Arithmetic in R = GF(q) + uGF(q) with u^2 = 0, and in R[x].

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::Result;
use crate::field::{Field, FieldElement};
use crate::poly::{Poly, Word};

/// `a + u b`.
#[derive(Clone, PartialEq, Eq)]
pub struct RElement {
    a: FieldElement,
    b: FieldElement,
}

impl RElement {
    pub fn new(a: FieldElement, b: FieldElement) -> Result<RElement> {
        a.field().check(b.field())?;
        Ok(RElement { a, b })
    }

    pub fn from_raw(field: &Field, a: u32, b: u32) -> RElement {
        RElement {
            a: field.element(a),
            b: field.element(b),
        }
    }

    pub fn zero(field: &Field) -> RElement {
        RElement::from_raw(field, 0, 0)
    }

    pub fn one(field: &Field) -> RElement {
        RElement::from_raw(field, 1, 0)
    }

    pub fn u(field: &Field) -> RElement {
        RElement::from_raw(field, 0, 1)
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    /// The u^0 component.
    pub fn unit_part(&self) -> &FieldElement {
        &self.a
    }

    /// The u^1 component.
    pub fn u_part(&self) -> &FieldElement {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        !self.a.is_zero()
    }

    pub fn is_zero_divisor(&self) -> bool {
        self.a.is_zero() && !self.b.is_zero()
    }

    pub fn add(&self, other: &RElement) -> Result<RElement> {
        Ok(RElement {
            a: self.a.add(&other.a)?,
            b: self.b.add(&other.b)?,
        })
    }

    pub fn sub(&self, other: &RElement) -> Result<RElement> {
        Ok(RElement {
            a: self.a.sub(&other.a)?,
            b: self.b.sub(&other.b)?,
        })
    }

    pub fn neg(&self) -> RElement {
        RElement {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    /// `(a + ub)(c + ud) = ac + u(ad + bc)`.
    pub fn mul(&self, other: &RElement) -> Result<RElement> {
        let ac = self.a.mul(&other.a)?;
        let ad = self.a.mul(&other.b)?;
        let bc = self.b.mul(&other.a)?;
        Ok(RElement { a: ac, b: ad.add(&bc)? })
    }

    /// Inverse of a unit: `(a + ub)^{-1} = a^{-1} - u b a^{-2}`.
    pub fn inv(&self) -> Result<RElement> {
        let ai = self.a.inv()?;
        let b = self.b.mul(&ai)?.mul(&ai)?.neg();
        Ok(RElement { a: ai, b })
    }
}

fn fmt_coeff(c: &FieldElement) -> String {
    let s = c.to_string();
    if s.contains('+') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let upart = match self.b.value() {
            0 => None,
            1 => Some("u".to_string()),
            _ => Some(format!("{}u", fmt_coeff(&self.b))),
        };
        match (self.a.is_zero(), upart) {
            (true, None) => f.write_str("0"),
            (false, None) => write!(f, "{}", self.a),
            (true, Some(u)) => f.write_str(&u),
            (false, Some(u)) => write!(f, "{}+{u}", fmt_coeff(&self.a)),
        }
    }
}

impl fmt::Debug for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `f0(x) + u f1(x)` in R[x].
#[derive(Clone, PartialEq, Eq)]
pub struct RPoly {
    f0: Poly,
    f1: Poly,
}

impl RPoly {
    pub fn new(f0: Poly, f1: Poly) -> Result<RPoly> {
        f0.field().check(f1.field())?;
        Ok(RPoly { f0, f1 })
    }

    pub fn zero(field: &Field) -> RPoly {
        RPoly::from_unit_part(Poly::zero(field))
    }

    pub fn from_unit_part(f0: Poly) -> RPoly {
        let f1 = Poly::zero(f0.field());
        RPoly { f0, f1 }
    }

    /// `u f`.
    pub fn u_times(f: Poly) -> RPoly {
        let f0 = Poly::zero(f.field());
        RPoly { f0, f1: f }
    }

    pub fn field(&self) -> &Field {
        self.f0.field()
    }

    pub fn unit_part(&self) -> &Poly {
        &self.f0
    }

    pub fn u_part(&self) -> &Poly {
        &self.f1
    }

    pub fn is_zero(&self) -> bool {
        self.f0.is_zero() && self.f1.is_zero()
    }

    /// Degree over R: the larger of the two component degrees.
    pub fn degree(&self) -> Option<usize> {
        self.f0.degree().max(self.f1.degree())
    }

    pub fn try_add(&self, other: &RPoly) -> Result<RPoly> {
        Ok(RPoly {
            f0: self.f0.try_add(&other.f0)?,
            f1: self.f1.try_add(&other.f1)?,
        })
    }

    pub fn try_sub(&self, other: &RPoly) -> Result<RPoly> {
        Ok(RPoly {
            f0: self.f0.try_sub(&other.f0)?,
            f1: self.f1.try_sub(&other.f1)?,
        })
    }

    pub fn try_mul(&self, other: &RPoly) -> Result<RPoly> {
        let f0 = self.f0.try_mul(&other.f0)?;
        let f1 = self.f0.try_mul(&other.f1)?.try_add(&self.f1.try_mul(&other.f0)?)?;
        Ok(RPoly { f0, f1 })
    }

    /// `u * self`, which kills the u-component.
    pub fn times_u(&self) -> RPoly {
        RPoly::u_times(self.f0.clone())
    }

    pub fn scale(&self, c: &RElement) -> Result<RPoly> {
        self.field().check(c.field())?;
        let (a, b) = (c.unit_part().value(), c.u_part().value());
        Ok(RPoly {
            f0: self.f0.scale(a),
            f1: &self.f1.scale(a) + &self.f0.scale(b),
        })
    }

    pub fn shift(&self, e: usize) -> RPoly {
        RPoly {
            f0: self.f0.shift(e),
            f1: self.f1.shift(e),
        }
    }

    pub fn reduce_cyclic(&self, n: usize) -> RPoly {
        RPoly {
            f0: self.f0.reduce_cyclic(n),
            f1: self.f1.reduce_cyclic(n),
        }
    }

    /// `x^D f(1/x)` with `D` the degree over R, so that
    /// `(f0 + u f1)* = x^{D - deg f0} f0* + u x^{D - deg f1} f1*`.
    pub fn reciprocal(&self) -> Result<RPoly> {
        let d = self.degree().ok_or(crate::Error::ZeroPolynomial)?;
        let part = |f: &Poly| -> Result<Poly> {
            match f.degree() {
                None => Ok(f.clone()),
                Some(df) => Ok(f.reciprocal()?.shift(d - df)),
            }
        };
        Ok(RPoly {
            f0: part(&self.f0)?,
            f1: part(&self.f1)?,
        })
    }

    /// Coefficients as a length-`n` word over R. Panics if `deg >= n`.
    pub fn to_word(&self, n: usize) -> Word<RElement> {
        assert!(
            self.degree().is_none_or(|d| d < n),
            "polynomial does not fit in length {n}"
        );
        let field = self.field();
        Word::new(
            (0..n)
                .map(|i| RElement::from_raw(field, self.f0.coeff(i), self.f1.coeff(i)))
                .collect(),
        )
    }

    pub fn from_word(field: &Field, word: &Word<RElement>) -> Result<RPoly> {
        let mut a = Vec::with_capacity(word.len());
        let mut b = Vec::with_capacity(word.len());
        for e in word.entries() {
            field.check(e.field())?;
            a.push(e.unit_part().value());
            b.push(e.u_part().value());
        }
        Ok(RPoly {
            f0: Poly::from_coeffs(field, a),
            f1: Poly::from_coeffs(field, b),
        })
    }

    /// Packs into the `[u^0 block | u^1 block]` layout used by the span machinery.
    pub(crate) fn to_raw(&self, n: usize) -> Vec<u32> {
        let mut v = vec![0; 2 * n];
        for i in 0..n {
            v[i] = self.f0.coeff(i);
            v[n + i] = self.f1.coeff(i);
        }
        v
    }

    pub fn parse(field: &Field, text: &str) -> Result<RPoly> {
        crate::literal::parse_rpoly(field, text)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics if the operands live over different fields.
        impl $trait<&RPoly> for &RPoly {
            type Output = RPoly;
            fn $method(self, rhs: &RPoly) -> RPoly {
                self.$checked(rhs).expect("polynomials over different fields")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let upart = if self.f1.is_zero() {
            None
        } else if self.f1.is_one() {
            Some("u".to_string())
        } else {
            let s = self.f1.to_string();
            Some(if s.contains('+') {
                format!("u*({s})")
            } else {
                format!("u*{s}")
            })
        };
        match (self.f0.is_zero(), upart) {
            (true, None) => f.write_str("0"),
            (false, None) => write!(f, "{}", self.f0),
            (true, Some(u)) => f.write_str(&u),
            (false, Some(u)) => write!(f, "{}+{u}", self.f0),
        }
    }
}

impl fmt::Debug for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field())
    }
}

/// Raw ring word helpers over the `[u^0 | u^1]` layout.
pub(crate) mod raw {
    use crate::field::Field;

    /// Componentwise `acc += c * row`.
    #[inline]
    pub fn axpy(field: &Field, acc: &mut [u32], c: u32, row: &[u32]) {
        if c == 0 {
            return;
        }
        if c == 1 {
            for (x, &y) in acc.iter_mut().zip(row) {
                *x = field.add(*x, y);
            }
        } else {
            for (x, &y) in acc.iter_mut().zip(row) {
                *x = field.add(*x, field.mul(c, y));
            }
        }
    }

    /// Word reversal applied to both blocks.
    pub fn reverse(word: &[u32]) -> Vec<u32> {
        let n = word.len() / 2;
        let mut out = Vec::with_capacity(word.len());
        out.extend(word[..n].iter().rev());
        out.extend(word[n..].iter().rev());
        out
    }

    /// Hamming weight over R: positions where either component is nonzero.
    #[inline]
    pub fn weight(word: &[u32]) -> usize {
        let n = word.len() / 2;
        (0..n).filter(|&i| word[i] != 0 || word[n + i] != 0).count()
    }

    /// Euclidean inner product over R, returned as `(u^0, u^1)` components.
    pub fn inner(field: &Field, v: &[u32], w: &[u32]) -> (u32, u32) {
        let n = v.len() / 2;
        let (mut s0, mut s1) = (0, 0);
        for i in 0..n {
            s0 = field.add(s0, field.mul(v[i], w[i]));
            s1 = field.add(s1, field.mul(v[i], w[n + i]));
            s1 = field.add(s1, field.mul(v[n + i], w[i]));
        }
        (s0, s1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_squares_to_zero() {
        let f2 = Field::prime(2).unwrap();
        let one_u = RElement::from_raw(&f2, 1, 1);
        assert_eq!(one_u.mul(&one_u).unwrap(), RElement::one(&f2));
        let u = RElement::u(&f2);
        assert!(u.mul(&u).unwrap().is_zero());
        let f3 = Field::prime(3).unwrap();
        let p = RElement::from_raw(&f3, 1, 1);
        let m = RElement::from_raw(&f3, 1, 2);
        assert_eq!(p.mul(&m).unwrap(), RElement::one(&f3));
        assert_eq!(p.inv().unwrap(), m);
    }

    #[test]
    fn units_and_zero_divisors() {
        let f3 = Field::prime(3).unwrap();
        let all: Vec<_> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .map(|(a, b)| RElement::from_raw(&f3, a, b))
            .collect();
        assert_eq!(all.iter().filter(|e| e.is_unit()).count(), 6);
        assert_eq!(all.iter().filter(|e| e.is_zero_divisor()).count(), 2);
        for e in all.iter().filter(|e| e.is_unit()) {
            assert_eq!(e.mul(&e.inv().unwrap()).unwrap(), RElement::one(&f3));
        }
    }

    #[test]
    fn rpoly_reciprocal_uses_joint_degree() {
        let f2 = Field::prime(2).unwrap();
        // x^2 + 1 + u x  ->  1 + x^2 + u x
        let f = RPoly::parse(&f2, "x^2+1+u*x").unwrap();
        assert_eq!(f.reciprocal().unwrap(), f);
        // x + u  -> 1 + u x
        let g = RPoly::parse(&f2, "x+u").unwrap();
        assert_eq!(g.reciprocal().unwrap(), RPoly::parse(&f2, "1+u*x").unwrap());
    }

    #[test]
    fn display() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(RElement::from_raw(&f3, 2, 1).to_string(), "2+u");
        assert_eq!(RElement::from_raw(&f3, 0, 2).to_string(), "2u");
        let f = RPoly::parse(&f3, "x^2+1+u(x+2)").unwrap();
        assert_eq!(f.to_string(), "x^2+1+u*(x+2)");
        assert_eq!(RPoly::parse(&f3, &f.to_string()).unwrap(), f);
        assert_eq!(RPoly::parse(&f3, "u").unwrap().to_string(), "u");
    }
}
