//! Arithmetic in `F_q`, `q = p^f`, as polynomial residues over `F_p`.
//!
//! Elements are stored as their integer code `c_0 + c_1 p + ... + c_{f-1} p^{f-1}`,
//! where `c_i` is the coefficient of `t^i`. The code doubles as the enumeration
//! order of the field, so `0, 1, ..., q-1` lists every element exactly once and
//! all "smallest element" tie-breaks downstream follow it.
//!
//! Construction builds full addition and multiplication tables from the
//! polynomial arithmetic; afterwards every operation is a table lookup.

use std::fmt;

use thiserror::Error;

/// Largest field order accepted by [`Field::new`].
pub const MAX_FIELD_ORDER: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field order {q} exceeds the configured cap {cap}")]
    OrderTooLarge { q: u32, cap: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("square test is not supported in characteristic 2")]
    EvenCharacteristic,
    #[error("coefficient sequence has length {got}, expected {expected}")]
    BadLength { got: usize, expected: usize },
}

/// An element of `F_q`, identified by its integer code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn code(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Parameters and lookup tables for one finite field.
#[derive(Clone)]
pub struct Field {
    p: u32,
    f: u32,
    q: u32,
    /// Monic modulus, low coefficient first, length `f + 1`.
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    generator: FieldElement,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("f", &self.f)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.f == other.f && self.modulus == other.modulus
    }
}

impl Eq for Field {}

/// Splits `q` as `p^f`, or returns `None` when `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut f = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

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

// Dense polynomial helpers over F_p; coefficient vectors are low-degree first.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    // m is monic
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn decode(code: u32, p: u32, len: u32) -> Vec<u32> {
    let mut c = code;
    (0..len)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = (m.len() - 1) as u32;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d) {
            let mut div = decode(low, p, d);
            div.push(1);
            if poly_rem(m, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Least monic irreducible of degree `f`, ordered by the code of its lower coefficients.
fn least_irreducible(p: u32, f: u32) -> Vec<u32> {
    for low in 0..p.pow(f) {
        let mut m = decode(low, p, f);
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

impl Field {
    /// Builds `F_q` with the lexicographically least monic irreducible modulus.
    pub fn new(q: u32) -> Result<Field, FieldError> {
        Self::with_cap(q, MAX_FIELD_ORDER)
    }

    pub fn with_cap(q: u32, cap: u32) -> Result<Field, FieldError> {
        let (p, f) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        if q > cap {
            return Err(FieldError::OrderTooLarge { q, cap });
        }
        let modulus = least_irreducible(p, f);
        debug_assert!(is_irreducible(&modulus, p));
        let qs = q as usize;
        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        for x in 0..q {
            let xa = decode(x, p, f);
            for y in 0..q {
                let ya = decode(y, p, f);
                let s: Vec<u32> = xa.iter().zip(&ya).map(|(a, b)| (a + b) % p).collect();
                add[(x * q + y) as usize] = encode(&s, p) as u16;
                let prod = poly_rem(&poly_mul(&xa, &ya, p), &modulus, p);
                mul[(x * q + y) as usize] = encode(&prod, p) as u16;
            }
        }
        let mut neg = vec![0u16; qs];
        let mut inv = vec![0u16; qs];
        for x in 0..qs {
            for y in 0..qs {
                if add[x * qs + y] == 0 {
                    neg[x] = y as u16;
                }
                if mul[x * qs + y] == 1 {
                    inv[x] = y as u16;
                }
            }
        }
        let mut field = Field {
            p,
            f,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
            generator: FieldElement::ONE,
        };
        field.generator = field.find_generator();
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first; the last entry is the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u16).map(FieldElement)
    }

    pub fn element(&self, code: u32) -> FieldElement {
        assert!(code < self.q, "field code {code} out of range");
        FieldElement(code as u16)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        if coeffs.len() != self.f as usize {
            return Err(FieldError::BadLength {
                got: coeffs.len(),
                expected: self.f as usize,
            });
        }
        let reduced: Vec<u32> = coeffs.iter().map(|c| c % self.p).collect();
        Ok(FieldElement(encode(&reduced, self.p) as u16))
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        decode(a.0 as u32, self.p, self.f)
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u16)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[a.code() * self.q as usize + b.code()])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.code()])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[a.code() * self.q as usize + b.code()])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            Err(FieldError::ZeroInverse)
        } else {
            Ok(FieldElement(self.inv[a.code()]))
        }
    }

    /// Inverse for callers that have already excluded zero.
    #[inline]
    pub(crate) fn inv_nonzero(&self, a: FieldElement) -> FieldElement {
        debug_assert!(!a.is_zero());
        FieldElement(self.inv[a.code()])
    }

    /// `a^e`; negative exponents invert first.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement, FieldError> {
        let base = if e < 0 { self.inv(a)? } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = FieldElement::ONE;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        Ok(acc)
    }

    fn pow_u(&self, a: FieldElement, e: u64) -> FieldElement {
        self.pow(a, e as i64).expect("non-negative exponent")
    }

    fn find_generator(&self) -> FieldElement {
        let m = (self.q - 1) as u64;
        let primes = prime_factors(m);
        self.elements()
            .skip(1)
            .find(|&x| {
                primes
                    .iter()
                    .all(|r| self.pow_u(x, m / r) != FieldElement::ONE)
            })
            .expect("F_q^* is cyclic")
    }

    /// Least element (in enumeration order) generating `F_q^*`.
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != FieldElement::ONE {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Euler's criterion; only meaningful in odd characteristic.
    pub fn is_square(&self, a: FieldElement) -> Result<bool, FieldError> {
        if self.p == 2 {
            return Err(FieldError::EvenCharacteristic);
        }
        Ok(a.is_zero() || self.pow_u(a, (self.q as u64 - 1) / 2) == FieldElement::ONE)
    }

    /// Square test valid in every characteristic (everything is a square when `p = 2`).
    pub(crate) fn is_square_any(&self, a: FieldElement) -> bool {
        self.p == 2 || self.is_square(a).expect("odd characteristic")
    }

    /// `a^(p^i)`.
    pub fn frobenius(&self, a: FieldElement, i: u32) -> FieldElement {
        let mut x = a;
        for _ in 0..i % self.f {
            x = self.pow_u(x, self.p as u64);
        }
        x
    }

    /// Human-readable rendering: integers for prime fields, polynomials in `t` otherwise.
    pub fn display(&self, a: FieldElement) -> String {
        if self.f == 1 {
            return a.0.to_string();
        }
        if a.is_zero() {
            return "0".to_string();
        }
        let coeffs = self.coeffs(a);
        let mut terms = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent polynomial arithmetic: coefficient vectors, naive reduction by
    // repeated subtraction of the shifted modulus.
    fn oracle_mul(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let f = m.len() - 1;
        let mut prod = vec![0u32; 2 * f];
        for i in 0..f {
            for j in 0..f {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
            }
        }
        for deg in (f..2 * f).rev() {
            let c = prod[deg];
            if c != 0 {
                for k in 0..=f {
                    prod[deg - f + k] = (prod[deg - f + k] + (p - c) * m[k]) % p;
                }
            }
        }
        prod.truncate(f);
        prod
    }

    #[test]
    fn f4_product_of_t_and_t_plus_one() {
        let f4 = Field::new(4).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let t = f4.from_coeffs(&[0, 1]).unwrap();
        let t1 = f4.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(oracle_mul(&[0, 1], &[1, 1], &[1, 1, 1], 2), vec![1, 0]);
        assert_eq!(f4.mul(t, t1), FieldElement::ONE);
    }

    #[test]
    fn f5_inverse_of_two() {
        let f5 = Field::new(5).unwrap();
        assert_eq!(f5.inv(f5.element(2)).unwrap(), f5.element(3));
        assert_eq!(f5.inv(FieldElement::ZERO), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn tables_match_polynomial_oracle() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32] {
            let fld = Field::new(q).unwrap();
            let (p, m) = (fld.characteristic(), fld.modulus().to_vec());
            for a in fld.elements() {
                assert_eq!(fld.mul(a, FieldElement::ONE), a);
                for b in fld.elements() {
                    let expect = oracle_mul(&fld.coeffs(a), &fld.coeffs(b), &m, p);
                    assert_eq!(fld.coeffs(fld.mul(a, b)), expect, "q={q}");
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let k = Field::new(q).unwrap();
            let els: Vec<_> = k.elements().collect();
            for &a in &els {
                if !a.is_zero() {
                    assert_eq!(k.mul(a, k.inv(a).unwrap()), FieldElement::ONE);
                }
                assert_eq!(k.add(a, k.neg(a)), FieldElement::ZERO);
                for &b in &els {
                    assert_eq!(k.add(a, b), k.add(b, a));
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    for &c in &els {
                        assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                        assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
                        assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn least_irreducible_moduli() {
        assert_eq!(Field::new(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(Field::new(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(16).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(Field::new(32).unwrap().modulus(), &[1, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn generators() {
        assert_eq!(Field::new(5).unwrap().generator(), FieldElement(2));
        assert_eq!(Field::new(7).unwrap().generator(), FieldElement(3));
        let f4 = Field::new(4).unwrap();
        assert_eq!(f4.coeffs(f4.generator()), vec![0, 1]);
        for q in [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 25, 27, 32] {
            let k = Field::new(q).unwrap();
            let g = k.generator();
            let mut seen = vec![false; q as usize];
            let mut x = FieldElement::ONE;
            for _ in 0..q - 1 {
                assert!(!seen[x.code()], "repeat power in F_{q}");
                seen[x.code()] = true;
                x = k.mul(x, g);
            }
            assert_eq!(x, FieldElement::ONE);
            assert_eq!(k.multiplicative_order(g), Some(q - 1));
        }
    }

    #[test]
    fn squares() {
        let f7 = Field::new(7).unwrap();
        assert!(!f7.is_square(f7.from_int(-1)).unwrap());
        let f5 = Field::new(5).unwrap();
        assert!(f5.is_square(f5.from_int(-1)).unwrap());
        for q in [3, 5, 7, 9, 11, 13, 25, 27] {
            let k = Field::new(q).unwrap();
            assert!(k.is_square(FieldElement::ONE).unwrap());
            let squares: std::collections::HashSet<_> = k.elements().map(|a| k.mul(a, a)).collect();
            for a in k.elements() {
                assert_eq!(k.is_square(a).unwrap(), squares.contains(&a));
            }
        }
        let f4 = Field::new(4).unwrap();
        assert_eq!(
            f4.is_square(FieldElement::ONE),
            Err(FieldError::EvenCharacteristic)
        );
    }

    #[test]
    fn frobenius_properties() {
        let f4 = Field::new(4).unwrap();
        let t = f4.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f4.coeffs(f4.frobenius(t, 1)), vec![1, 1]);
        for q in [4, 8, 9, 16, 25, 27, 32] {
            let k = Field::new(q).unwrap();
            let mut fixed = 0;
            for a in k.elements() {
                assert_eq!(k.frobenius(a, 0), a);
                assert_eq!(k.frobenius(a, k.degree()), a);
                if k.frobenius(a, 1) == a {
                    fixed += 1;
                }
                for b in k.elements() {
                    let fr = |x| k.frobenius(x, 1);
                    assert_eq!(fr(k.add(a, b)), k.add(fr(a), fr(b)));
                    assert_eq!(fr(k.mul(a, b)), k.mul(fr(a), fr(b)));
                }
            }
            assert_eq!(fixed, k.characteristic());
            assert_eq!(k.frobenius(FieldElement::ONE, 1), FieldElement::ONE);
        }
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(Field::new(6), Err(FieldError::NotPrimePower(6)));
        assert_eq!(Field::new(1), Err(FieldError::NotPrimePower(1)));
        assert_eq!(
            Field::new(49),
            Err(FieldError::OrderTooLarge { q: 49, cap: 32 })
        );
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn display_polynomials() {
        let f9 = Field::new(9).unwrap();
        assert_eq!(f9.display(f9.from_coeffs(&[2, 1]).unwrap()), "t+2");
        assert_eq!(f9.display(f9.from_coeffs(&[0, 2]).unwrap()), "2t");
        assert_eq!(Field::new(7).unwrap().display(FieldElement(5)), "5");
    }
}
