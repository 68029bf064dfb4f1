//! Exact arithmetic in GF(p^k).
//!
//! Elements are stored by their canonical encoding `Σ cᵢ pⁱ`, where `cᵢ` are
//! the coefficients of the reduced polynomial representative. Multiplication
//! goes through exp/log tables built from the least primitive element, which
//! keeps every operation O(k) or O(1).

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest field order that may be constructed.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1, got {0}")]
    BadDegree(u32),
    #[error("field order {p}^{k} exceeds the size guard of {MAX_FIELD_ORDER}")]
    TooLarge { p: u64, k: u32 },
    #[error("no monic irreducible polynomial of degree {k} over Z_{p} was found")]
    NoIrreducible { p: u64, k: u32 },
    #[error("elements belong to different fields (orders {0} and {1})")]
    FieldMismatch(u32, u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero is excluded from the square test")]
    ZeroSquareTest,
    #[error("encoding {code} is not an element of GF({order})")]
    BadEncoding { code: u64, order: u32 },
}

/// An element of a finite field.
///
/// The field identifier is the field order: fields are built with a
/// deterministic modulus, so equal orders mean equal fields.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    field: u32,
    code: u32,
}

impl FieldElement {
    /// Base-p encoding of the coefficient vector.
    pub fn code(self) -> u32 {
        self.code
    }

    /// Order of the owning field.
    pub fn field_order(self) -> u32 {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.code == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self.code, self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    /// Exponentiation; the exponent is the second operand's `u64` argument.
    Pow(u64),
}

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for the primitive element `g`, with `exp[q-1] = exp[0]`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
    primitive: u32,
}

/// GF(p^k) with a deterministically chosen modulus. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.inner.p)
            .field("k", &self.inner.k)
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.q == other.inner.q
    }
}

impl Eq for FiniteField {}

pub fn is_prime(n: u64) -> bool {
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

/// Coefficient vector (low degree first) of a polynomial over Z_p, trimmed.
fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo the monic polynomial `m` over Z_p.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let t = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    trim(r)
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p
/// digits of `code`.
fn monic_from_code(mut code: u64, deg: u32, p: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(deg as usize + 1);
    for _ in 0..deg {
        v.push((code % p as u64) as u32);
        code /= p as u64;
    }
    v.push(1);
    v
}

/// Irreducibility by exhaustive trial division by every monic polynomial of
/// degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let poly = trim(poly.to_vec());
    let deg = match poly.len() {
        0 | 1 => return false,
        n => (n - 1) as u32,
    };
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d);
        for code in 0..count {
            let divisor = monic_from_code(code, d, p);
            if poly_rem(&poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Builds GF(p^k) using the monic irreducible polynomial of degree `k`
    /// whose lower coefficients have the least base-p encoding. For `k = 1`
    /// this is the polynomial `x`.
    pub fn new(p: u64, k: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k < 1 {
            return Err(FieldError::BadDegree(k));
        }
        let q = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(FieldError::TooLarge { p, k });
        }
        let p32 = p as u32;
        let q = q as u32;
        let modulus = (0..q as u64)
            .map(|code| monic_from_code(code, k, p32))
            .find(|m| is_irreducible(m, p32))
            .ok_or(FieldError::NoIrreducible { p, k })?;

        let mut inner = Inner {
            p: p32,
            k,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            primitive: 0,
        };
        let primitive = (1..q)
            .find(|&g| slow_order(&inner, g) == q - 1)
            .ok_or(FieldError::NoIrreducible { p, k })?;
        let mut exp = Vec::with_capacity(q as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = slow_mul(&inner, x, primitive);
        }
        exp.push(1);
        inner.exp = exp;
        inner.log = log;
        inner.primitive = primitive;
        Ok(FiniteField {
            inner: Arc::new(inner),
        })
    }

    /// Builds the field of order `q`, which must be a prime power.
    pub fn with_order(q: u64) -> Result<Self, FieldError> {
        if q < 2 {
            return Err(FieldError::NotPrime(q));
        }
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
        let mut k = 0;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(FieldError::NotPrime(q));
        }
        Self::new(p, k)
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.k
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    /// Modulus coefficients, constant term first; the last entry is 1.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn element(&self, code: u64) -> Result<FieldElement, FieldError> {
        if code >= self.inner.q as u64 {
            return Err(FieldError::BadEncoding {
                code,
                order: self.inner.q,
            });
        }
        Ok(self.elem(code as u32))
    }

    fn elem(&self, code: u32) -> FieldElement {
        FieldElement {
            field: self.inner.q,
            code,
        }
    }

    /// Image of the integer `n` under Z → GF(q).
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.inner.p as i64;
        self.elem(n.rem_euclid(p) as u32)
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    /// The least (by encoding) generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        self.elem(self.inner.primitive)
    }

    /// The elements `x⁰, x¹, …, x^{k-1}` of the polynomial basis.
    pub fn additive_basis(&self) -> Vec<FieldElement> {
        let p = self.inner.p;
        (0..self.inner.k).map(|i| self.elem(p.pow(i))).collect()
    }

    /// All elements in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.q).map(move |c| self.elem(c))
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        x.field == self.inner.q
    }

    fn check(&self, x: FieldElement) -> Result<(), FieldError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch(self.inner.q, x.field))
        }
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        debug_assert!(self.contains(x) && self.contains(y));
        let p = self.inner.p;
        if self.inner.k == 1 {
            return self.elem((x.code + y.code) % p);
        }
        let (mut a, mut b) = (x.code, y.code);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        self.elem(out)
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        debug_assert!(self.contains(x));
        let p = self.inner.p;
        let mut a = x.code;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        self.elem(out)
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        debug_assert!(self.contains(x) && self.contains(y));
        if x.code == 0 || y.code == 0 {
            return self.zero();
        }
        let n = self.inner.q - 1;
        let e = (self.inner.log[x.code as usize] + self.inner.log[y.code as usize]) % n;
        self.elem(self.inner.exp[e as usize])
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(x)?;
        if x.code == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let n = self.inner.q - 1;
        let e = (n - self.inner.log[x.code as usize]) % n;
        Ok(self.elem(self.inner.exp[e as usize]))
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(x)?;
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        debug_assert!(self.contains(x));
        if e == 0 {
            return self.one();
        }
        if x.code == 0 {
            return self.zero();
        }
        let n = (self.inner.q - 1) as u64;
        let l = self.inner.log[x.code as usize] as u64;
        self.elem(self.inner.exp[((l * (e % n)) % n) as usize])
    }

    /// Checked arithmetic. Unary operations ignore `y`.
    pub fn arith(
        &self,
        op: ArithOp,
        x: FieldElement,
        y: FieldElement,
    ) -> Result<FieldElement, FieldError> {
        self.check(x)?;
        self.check(y)?;
        Ok(match op {
            ArithOp::Add => self.add(x, y),
            ArithOp::Sub => self.sub(x, y),
            ArithOp::Mul => self.mul(x, y),
            ArithOp::Div => self.div(x, y)?,
            ArithOp::Neg => self.neg(x),
            ArithOp::Inv => self.inv(x)?,
            ArithOp::Pow(e) => self.pow(x, e),
        })
    }

    /// Whether a nonzero `x` is the square of a nonzero element.
    ///
    /// Odd characteristic uses Euler's criterion `x^((q-1)/2) = 1`; in
    /// characteristic 2 every element is a square.
    pub fn is_square(&self, x: FieldElement) -> Result<bool, FieldError> {
        self.check(x)?;
        if x.code == 0 {
            return Err(FieldError::ZeroSquareTest);
        }
        if self.inner.p == 2 {
            return Ok(true);
        }
        Ok(self.pow(x, ((self.inner.q - 1) / 2) as u64) == self.one())
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, x: FieldElement) -> Result<u32, FieldError> {
        self.check(x)?;
        if x.code == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let n = self.inner.q - 1;
        let l = self.inner.log[x.code as usize];
        Ok(n / gcd(n, l))
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn digits(mut code: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

fn slow_mul(f: &Inner, x: u32, y: u32) -> u32 {
    let (p, k) = (f.p, f.k);
    let a = digits(x, p, k);
    let b = digits(y, p, k);
    let mut prod = vec![0u32; 2 * k as usize];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + ai as u64 * bj as u64) % p as u64) as u32;
        }
    }
    let r = poly_rem(&trim(prod), &f.modulus, p);
    r.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn slow_order(f: &Inner, g: u32) -> u32 {
    let mut x = g;
    let mut n = 1;
    while x != 1 {
        x = slow_mul(f, x, g);
        n += 1;
        if n > f.q {
            return 0;
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = FiniteField::new(7, 1).unwrap();
        assert_eq!(f.order(), 7);
        assert_eq!(f.modulus(), &[0, 1]);
        let three = f.from_int(3);
        let five = f.from_int(5);
        assert_eq!(f.mul(three, five), f.one());
        assert_eq!(f.inv(f.from_int(2)).unwrap(), f.from_int(4));
        assert_eq!(f.inv(f.zero()), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(FiniteField::new(7, 0).unwrap_err(), FieldError::BadDegree(0));
        assert!(matches!(
            FiniteField::new(2, 21),
            Err(FieldError::TooLarge { .. })
        ));
        assert!(FiniteField::with_order(12).is_err());
    }

    #[test]
    fn cubic_modulus_over_z3() {
        // Oracle: a monic cubic is irreducible iff it has no root in Z_3.
        let no_root = |c: &[u32]| {
            (0..3u32).all(|x| !(c[0] + c[1] * x + c[2] * x * x + x * x * x).is_multiple_of(3))
        };
        let expected = (0..27u32)
            .map(|code| vec![code % 3, code / 3 % 3, code / 9, 1])
            .find(|c| no_root(c))
            .unwrap();
        let f = FiniteField::new(3, 3).unwrap();
        assert_eq!(f.order(), 27);
        assert_eq!(f.modulus(), expected.as_slice());
        assert_eq!(f.modulus(), &[1, 2, 0, 1]);
    }

    #[test]
    fn squares_in_gf7() {
        let f = FiniteField::new(7, 1).unwrap();
        assert!(!f.is_square(f.from_int(-1)).unwrap());
        assert!(f.is_square(f.from_int(2)).unwrap());
        assert!(f.is_square(f.one()).unwrap());
        assert_eq!(f.is_square(f.zero()), Err(FieldError::ZeroSquareTest));
    }

    #[test]
    fn mismatched_fields_are_reported() {
        let f7 = FiniteField::new(7, 1).unwrap();
        let f11 = FiniteField::new(11, 1).unwrap();
        let err = f7.arith(ArithOp::Add, f7.one(), f11.one()).unwrap_err();
        assert_eq!(err, FieldError::FieldMismatch(7, 11));
    }

    #[test]
    fn primitive_element_has_full_order() {
        for q in [7u64, 9, 11, 27, 49] {
            let f = FiniteField::with_order(q).unwrap();
            let g = f.primitive_element();
            assert_eq!(f.multiplicative_order(g).unwrap(), f.order() - 1);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u64, 4, 7, 8, 9, 25, 27, 49] {
            let f = FiniteField::with_order(q).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    // Distributivity against a few fixed multipliers keeps
                    // this quadratic rather than cubic.
                    for &c in els.iter().take(4) {
                        assert_eq!(
                            f.mul(c, f.add(a, b)),
                            f.add(f.mul(c, a), f.mul(c, b))
                        );
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn table_multiplication_matches_schoolbook() {
        let f = FiniteField::new(3, 3).unwrap();
        for a in 0..27 {
            for b in 0..27 {
                let fast = f.mul(f.element(a).unwrap(), f.element(b).unwrap());
                assert_eq!(fast.code(), slow_mul(&f.inner, a as u32, b as u32));
            }
        }
    }
}
