//! Factorization of `x^n - 1` over GF(q) through cyclotomic cosets.
//!
//! Write `n = p^s m` with `gcd(m, p) = 1`. Over GF(q), `x^m - 1` is squarefree
//! and its irreducible factors are the minimal polynomials of `alpha^c` for `c`
//! running over representatives of the q-cyclotomic cosets mod `m`, where
//! `alpha` has order `m` in GF(q^t), `t = ord_m(q)`. Then
//! `x^n - 1 = (x^m - 1)^{p^s}`.

use crate::error::{Error, Result};
use crate::field::{self, Field};
use crate::poly::Poly;

/// Bound on the splitting field size `q^t`.
pub const MAX_SPLITTING_FIELD_SIZE: u64 = 1 << 24;

/// An orbit of `Z_m` under multiplication by `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub representative: u64,
    /// Sorted ascending.
    pub members: Vec<u64>,
}

/// Partition of `{0, ..., m-1}` into q-cyclotomic cosets, ordered by
/// smallest member.
pub fn cyclotomic_cosets(m: u64, q: u64) -> Result<Vec<CyclotomicCoset>> {
    if m == 0 || field::gcd(m, q) != 1 {
        return Err(Error::NotCoprime(m, q));
    }
    let mut seen = vec![false; m as usize];
    let mut out = Vec::new();
    for s in 0..m {
        if seen[s as usize] {
            continue;
        }
        let mut members = Vec::new();
        let mut c = s;
        while !seen[c as usize] {
            seen[c as usize] = true;
            members.push(c);
            c = ((c as u128 * q as u128) % m as u128) as u64;
        }
        members.sort_unstable();
        out.push(CyclotomicCoset {
            representative: s,
            members,
        });
    }
    Ok(out)
}

/// GF(q^t) = GF(q)[y]/(h(y)) together with a chosen element of order `m`.
#[derive(Clone, Debug)]
pub struct SplittingField {
    base: Field,
    modulus: Poly,
    order: u64,
    alpha: Vec<u32>,
}

impl SplittingField {
    /// Smallest extension of `base` holding an element of order `m`; the
    /// element is the first one found by scanning the extension in index order.
    pub fn new(base: &Field, m: u64) -> Result<SplittingField> {
        SplittingField::with_generator_choice(base, m, 0)
    }

    /// As [`SplittingField::new`] but takes the `choice`-th distinct element
    /// of order `m` in scan order.
    pub fn with_generator_choice(base: &Field, m: u64, choice: usize) -> Result<SplittingField> {
        let q = base.size() as u64;
        let t = field::mult_order(q, m)?;
        let size = (q as u128).pow(t.min(64) as u32);
        if t >= 64 || size > MAX_SPLITTING_FIELD_SIZE as u128 {
            return Err(Error::UnsupportedFieldSize(size.min(u64::MAX as u128) as u64));
        }
        let size = size as u64;
        let modulus = first_irreducible(base, t as usize);
        let mut ext = SplittingField {
            base: base.clone(),
            modulus,
            order: m,
            alpha: Vec::new(),
        };
        let cofactor = (size - 1) / m;
        let primes = field::prime_factors(m);
        let one = ext.one();
        let mut found: Vec<Vec<u32>> = Vec::new();
        for idx in 1..size {
            let y = ext.unpack(idx);
            let z = ext.pow(&y, cofactor);
            let exact = primes.iter().all(|&r| ext.pow(&z, m / r) != one);
            if exact && !found.contains(&z) {
                if found.len() == choice {
                    ext.alpha = z;
                    return Ok(ext);
                }
                found.push(z);
            }
        }
        Err(Error::NoSubgroupGenerator(m))
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    /// Extension degree t.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Order of the chosen generator.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coordinates of the chosen generator over the base field.
    pub fn generator(&self) -> &[u32] {
        &self.alpha
    }

    fn one(&self) -> Vec<u32> {
        let mut v = vec![0; self.degree()];
        v[0] = 1;
        v
    }

    fn unpack(&self, mut idx: u64) -> Vec<u32> {
        let q = self.base.size() as u64;
        (0..self.degree())
            .map(|_| {
                let d = (idx % q) as u32;
                idx /= q;
                d
            })
            .collect()
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = &self.base;
        let t = self.degree();
        let mut prod = vec![0u32; 2 * t - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        let h = self.modulus.coeffs();
        for top in (t..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for j in 0..t {
                let idx = top - t + j;
                prod[idx] = f.sub(prod[idx], f.mul(c, h[j]));
            }
            prod[top] = 0;
        }
        prod.truncate(t);
        prod
    }

    fn pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

fn first_irreducible(base: &Field, t: usize) -> Poly {
    let q = base.size() as u64;
    let mut counter = 0u64;
    loop {
        let mut c = counter;
        let mut coeffs: Vec<u32> = (0..t)
            .map(|_| {
                let d = (c % q) as u32;
                c /= q;
                d
            })
            .collect();
        coeffs.push(1);
        let h = Poly::from_coeffs(base, coeffs);
        if h.is_irreducible() {
            return h;
        }
        counter += 1;
    }
}

/// `prod_{i in coset} (x - alpha^i)`, checked to have all coefficients in
/// the base field.
pub fn minimal_polynomial(
    coset: &CyclotomicCoset,
    m: u64,
    ext: &SplittingField,
) -> Result<Poly> {
    if ext.order() != m {
        return Err(Error::NoSubgroupGenerator(m));
    }
    let f = ext.base();
    let t = ext.degree();
    // Coefficients in GF(q^t), lowest degree first.
    let mut acc: Vec<Vec<u32>> = vec![ext.one()];
    for &i in &coset.members {
        let root = ext.pow(ext.generator(), i);
        let neg_root: Vec<u32> = root.iter().map(|&c| f.neg(c)).collect();
        let mut next = vec![vec![0u32; t]; acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            for (s, &v) in c.iter().enumerate() {
                next[j + 1][s] = f.add(next[j + 1][s], v);
            }
            let prod = ext.mul(c, &neg_root);
            for (s, &v) in prod.iter().enumerate() {
                next[j][s] = f.add(next[j][s], v);
            }
        }
        acc = next;
    }
    let coeffs = acc
        .iter()
        .map(|c| {
            if c[1..].iter().all(|&v| v == 0) {
                Ok(c[0])
            } else {
                Err(Error::Internal(format!(
                    "minimal polynomial of coset {:?} leaves the base field",
                    coset.members
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(f, coeffs))
}

/// `x^n - 1 = prod f_i^{e_i}` with distinct monic irreducible `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    n: usize,
    field: Field,
    factors: Vec<(Poly, u32)>,
}

/// A monic divisor of `x^n - 1` with its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    pub exponents: Vec<u32>,
    pub poly: Poly,
}

impl Factorization {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `(irreducible, multiplicity)` ordered by degree, then by coefficients
    /// from the top down.
    pub fn factors(&self) -> &[(Poly, u32)] {
        &self.factors
    }

    pub fn product(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::one(&self.field), |acc, (f, e)| &acc * &f.pow(*e as u64))
    }

    pub fn divisor_count(&self) -> usize {
        self.factors.iter().map(|(_, e)| *e as usize + 1).product()
    }

    /// Divisor for an exponent vector.
    pub fn divisor(&self, exponents: &[u32]) -> Poly {
        self.factors
            .iter()
            .zip(exponents)
            .fold(Poly::one(&self.field), |acc, ((f, _), &j)| &acc * &f.pow(j as u64))
    }

    /// All monic divisors, ordered by degree and then lexicographically by
    /// exponent vector.
    pub fn divisors(&self) -> impl Iterator<Item = Divisor> + '_ {
        let mut vectors: Vec<Vec<u32>> = vec![Vec::new()];
        for (_, e) in &self.factors {
            vectors = vectors
                .into_iter()
                .flat_map(|v| {
                    (0..=*e).map(move |j| {
                        let mut w = v.clone();
                        w.push(j);
                        w
                    })
                })
                .collect();
        }
        let degree = |v: &[u32]| -> usize {
            v.iter()
                .zip(&self.factors)
                .map(|(&j, (f, _))| j as usize * f.degree().unwrap_or(0))
                .sum()
        };
        vectors.sort_by(|a, b| degree(a).cmp(&degree(b)).then_with(|| a.cmp(b)));
        vectors.into_iter().map(move |exponents| Divisor {
            poly: self.divisor(&exponents),
            exponents,
        })
    }

    /// Exponent vector of a monic divisor of `x^n - 1`, if it is one.
    pub fn exponents_of(&self, d: &Poly) -> Option<Vec<u32>> {
        let mut rest = d.monic();
        let mut out = Vec::with_capacity(self.factors.len());
        for (f, e) in &self.factors {
            let mut j = 0;
            while j < *e {
                let (q, r) = rest.divmod(f).ok()?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                j += 1;
            }
            out.push(j);
        }
        (rest.is_one() && !d.is_zero()).then_some(out)
    }
}

/// Factors `x^n - 1` over `field`.
pub fn factor_xn_minus_1(n: usize, field: &Field) -> Result<Factorization> {
    factor_xn_minus_1_with(n, field, 0)
}

/// As [`factor_xn_minus_1`], using the `choice`-th element of order `m` in
/// the splitting field.
pub fn factor_xn_minus_1_with(n: usize, field: &Field, choice: usize) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidArgument("length must be positive".into()));
    }
    let p = field.characteristic() as usize;
    let (mut m, mut ps) = (n, 1u32);
    while m % p == 0 {
        m /= p;
        ps *= p as u32;
    }
    let q = field.size() as u64;
    let ext = SplittingField::with_generator_choice(field, m as u64, choice)?;
    let mut factors = cyclotomic_cosets(m as u64, q)?
        .iter()
        .map(|c| minimal_polynomial(c, m as u64, &ext).map(|f| (f, ps)))
        .collect::<Result<Vec<_>>>()?;
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
    let fact = Factorization {
        n,
        field: field.clone(),
        factors,
    };
    if fact.product() != Poly::x_n_minus_1(field, n) {
        return Err(Error::Internal(format!(
            "factor product differs from x^{n}-1 over {field}"
        )));
    }
    Ok(fact)
}
