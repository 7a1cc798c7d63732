//! Exact arithmetic in GF(p^k).
//!
//! Elements are stored as residue indices: the polynomial-basis coordinates
//! `c_0 + c_1 a + ... + c_{k-1} a^{k-1}` packed as the base-`p` integer
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`. Index 0 is zero and index 1 is one.
//! Multiplication goes through exp/log tables built once per field.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{self, Poly};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// A finite field context. Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    /// Coefficients over GF(p), lowest degree first, monic, length k + 1.
    modulus: Option<Vec<u32>>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Field {
    /// Builds GF(p^k). Extension fields need a caller-supplied monic
    /// irreducible `modulus` over GF(p); none is synthesized.
    pub fn new(p: u32, k: u32, modulus: Option<&Poly>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: 0,
            });
        }
        let q = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if q > MAX_FIELD_SIZE {
            return Err(Error::UnsupportedFieldSize(q));
        }
        let modulus = match (k, modulus) {
            (1, None) => None,
            (1, Some(m)) => {
                if m.degree() != Some(1) {
                    return Err(Error::DegreeMismatch {
                        expected: 1,
                        found: m.degree_i64(),
                    });
                }
                None
            }
            (_, None) => {
                return Err(Error::DegreeMismatch {
                    expected: k,
                    found: -1,
                })
            }
            (_, Some(m)) => {
                let f = m.field();
                if f.degree() != 1 || f.characteristic() != p {
                    return Err(Error::FieldMismatch);
                }
                if m.degree() != Some(k as usize) {
                    return Err(Error::DegreeMismatch {
                        expected: k,
                        found: m.degree_i64(),
                    });
                }
                if !m.is_monic() {
                    return Err(Error::NotMonic(m.to_string()));
                }
                if !m.is_irreducible() {
                    return Err(Error::ReducibleModulus(m.to_string()));
                }
                Some(m.coeffs().to_vec())
            }
        };
        let mut inner = Inner {
            p,
            k,
            q: q as u32,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        inner.build_tables();
        Ok(Field {
            inner: Arc::new(inner),
        })
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    /// Extension degree k over the prime field.
    pub fn degree(&self) -> u32 {
        self.inner.k
    }

    /// Number of elements q = p^k.
    pub fn size(&self) -> u32 {
        self.inner.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.k == 1
    }

    /// Modulus coefficients over GF(p), lowest degree first.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.inner.modulus.as_deref()
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Element with the given residue index. Panics if `index >= q`.
    pub fn element(&self, index: u32) -> FieldElement {
        assert!(index < self.inner.q, "residue index out of range");
        FieldElement {
            field: self.clone(),
            value: index,
        }
    }

    /// Element from polynomial-basis coordinates (each reduced mod p).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.inner.k as usize {
            return Err(Error::InvalidArgument(format!(
                "{} coordinates for a degree-{} extension",
                coeffs.len(),
                self.inner.k
            )));
        }
        let p = self.inner.p;
        let mut value = 0u32;
        for &c in coeffs.iter().rev() {
            value = value * p + c % p;
        }
        Ok(self.element(value))
    }

    /// Image of an integer under Z -> GF(p) -> GF(q).
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.inner.p as i64) as u32
    }

    /// All elements in residue-index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.q).map(move |v| self.element(v))
    }

    /// Polynomial-basis coordinates of a residue index.
    pub fn coords(&self, mut a: u32) -> Vec<u32> {
        let p = self.inner.p;
        (0..self.inner.k)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.inner;
        if inner.k == 1 {
            let s = a + b;
            if s >= inner.p {
                s - inner.p
            } else {
                s
            }
        } else if inner.p == 2 {
            a ^ b
        } else {
            inner.digitwise(a, b, |x, y| (x + y) % inner.p)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let inner = &*self.inner;
        if a == 0 || inner.p == 2 {
            a
        } else if inner.k == 1 {
            inner.p - a
        } else {
            inner.digitwise(0, a, |_, y| (inner.p - y) % inner.p)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.inner;
        if a == 0 || b == 0 {
            0
        } else if inner.k == 1 {
            ((a as u64 * b as u64) % inner.p as u64) as u32
        } else {
            let s = inner.log[a as usize] + inner.log[b as usize];
            let m = inner.q - 1;
            inner.exp[(if s >= m { s - m } else { s }) as usize]
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let inner = &*self.inner;
        let m = inner.q - 1;
        let l = inner.log[a as usize];
        Some(inner.exp[((m - l) % m) as usize])
    }

    /// Square-and-multiply; `pow(0, 0) == 1`.
    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn same(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self == other
    }

    pub(crate) fn check(&self, other: &Field) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn fmt_element(&self, a: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.k == 1 {
            write!(f, "{a}")
        } else {
            f.write_str(&poly::format_terms(&self.coords(a), 'a', &|c| c.to_string()))
        }
    }
}

impl Inner {
    fn digitwise(&self, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += op(a % self.p, b % self.p) * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    /// Schoolbook product of packed coordinates modulo the field modulus.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let k = self.k as usize;
        let Some(m) = &self.modulus else {
            return ((a as u64 * b as u64) % p) as u32;
        };
        let digits = |mut v: u32| -> Vec<u64> {
            (0..k)
                .map(|_| {
                    let d = v % self.p;
                    v /= self.p;
                    d as u64
                })
                .collect()
        };
        let (da, db) = (digits(a), digits(b));
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (j, &mj) in m.iter().enumerate().take(k) {
                let idx = top - k + j;
                prod[idx] = (prod[idx] + (p - c) * mj as u64) % p;
            }
            prod[top] = 0;
        }
        prod[..k]
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * p + d) as u32
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&mut self) {
        let order = (self.q - 1) as u64;
        let primes = prime_factors(order);
        let generator = (1..self.q)
            .find(|&c| primes.iter().all(|&r| self.pow_slow(c, order / r) != 1))
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; self.q as usize];
        let mut cur = 1u32;
        for i in 0..order as u32 {
            exp.push(cur);
            log[cur as usize] = i;
            cur = self.mul_slow(cur, generator);
        }
        self.exp = exp;
        self.log = log;
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p
            && self.inner.k == other.inner.k
            && self.inner.modulus == other.inner.modulus
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.inner.modulus {
            None => write!(f, "GF({})", self.inner.p),
            Some(m) => write!(
                f,
                "GF({}; {})",
                self.inner.q,
                poly::format_terms(m, 'x', &|c| c.to_string())
            ),
        }
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `GF(q)`, `GF(p^k; modulus)` or `GF(q; modulus)`.
impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let bad = || Error::Parse(format!("field description {s:?}"));
        let body = s
            .trim()
            .strip_prefix("GF(")
            .or_else(|| s.trim().strip_prefix("gf("))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (size, modulus) = match body.split_once(';') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (body.trim(), None),
        };
        let (p, k) = match size.split_once('^') {
            Some((p, k)) => (
                p.trim().parse::<u32>().map_err(|_| bad())?,
                k.trim().parse::<u32>().map_err(|_| bad())?,
            ),
            None => {
                let q: u64 = size.parse().map_err(|_| bad())?;
                prime_power(q).ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?
            }
        };
        match modulus {
            None => Field::new(p, k, None),
            Some(m) => {
                let base = Field::prime(p)?;
                let m = Poly::parse(&base, m)?;
                Field::new(p, k, Some(&m))
            }
        }
    }
}

/// An element of a finite field, carrying its field context.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Residue index within the field.
    pub fn value(&self) -> u32 {
        self.value
    }

    /// Polynomial-basis coordinates.
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coords(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn lift(&self, value: u32) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.field.check(&other.field)?;
        Ok(self.lift(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.field.check(&other.field)?;
        Ok(self.lift(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.field.check(&other.field)?;
        Ok(self.lift(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.lift(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.field
            .inv(self.value)
            .map(|v| self.lift(v))
            .ok_or(Error::DivisionByZero)
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, e: u64) -> FieldElement {
        self.lift(self.field.pow(self.value, e))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.field.fmt_element(self.value, f)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.field)
    }
}

/// Least `t >= 1` with `q^t = 1 (mod m)`.
pub fn mult_order(q: u64, m: u64) -> Result<u64> {
    if m == 0 || gcd(q, m) != 1 {
        return Err(Error::NotCoprime(q, m));
    }
    if m == 1 {
        return Ok(1);
    }
    let q = q % m;
    let mut cur = q;
    let mut t = 1;
    while cur != 1 {
        cur = ((cur as u128 * q as u128) % m as u128) as u64;
        t += 1;
    }
    Ok(t)
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn prime_power(q: u64) -> Option<(u32, u32)> {
    let p = *prime_factors(q).first()?;
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p as u32, k))
}
