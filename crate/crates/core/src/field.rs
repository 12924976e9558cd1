//! Finite fields `F_q`, `q = p^f`, in a polynomial basis.
//!
//! An element is packed as the integer `Σ cᵢ pⁱ` of its coefficient vector.
//! The modulus is the smallest monic irreducible polynomial of degree `f` in
//! that same packing (i.e. lexicographic from the top coefficient down).
//! Multiplication goes through exp/log tables over the least primitive element.

use std::fmt;

use crate::error::{Error, Result};

/// Largest field order accepted by [`FiniteField::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub u32);

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    f: u32,
    q: u32,
    /// Coefficients `c₀ … c_f` of the monic modulus.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.f)
    }
}

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

/// Split a prime power into `(p, f)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut f = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        f += 1;
    }
    (r == 1).then_some((p as u32, f))
}

pub fn make_field(p: u64, f: u32) -> Result<FiniteField> {
    FiniteField::new(p, f)
}

impl FiniteField {
    pub fn new(p: u64, f: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if f == 0 {
            return Err(Error::BadParameter("extension degree must be positive".into()));
        }
        let q = (p as u128).checked_pow(f).unwrap_or(u128::MAX);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::TooLarge(format!("field of order {p}^{f}")));
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = least_irreducible(p, f);
        let mut field = FiniteField {
            p,
            f,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let order = (self.q - 1) as usize;
        for g in 1..self.q {
            let mut exp = Vec::with_capacity(order);
            let mut log = vec![u32::MAX; self.q as usize];
            let mut x = 1u32;
            let mut ok = true;
            for k in 0..order {
                if log[x as usize] != u32::MAX {
                    ok = false;
                    break;
                }
                log[x as usize] = k as u32;
                exp.push(x);
                x = self.poly_mul(x, g);
            }
            if ok && x == 1 {
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("every finite field has a primitive element");
    }

    fn digits(&self, mut x: u32) -> Vec<u32> {
        let mut d = vec![0u32; self.f as usize];
        for c in d.iter_mut() {
            *c = x % self.p;
            x /= self.p;
        }
        d
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// Schoolbook product reduced by the modulus; only used to build tables.
    fn poly_mul(&self, a: u32, b: u32) -> u32 {
        let (a, b) = (self.digits(a), self.digits(b));
        let f = self.f as usize;
        let p = self.p;
        let mut prod = vec![0u32; 2 * f];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for k in (f..2 * f).rev() {
            let c = prod[k];
            if c != 0 {
                for i in 0..=f {
                    let sub = c * self.modulus[i] % p;
                    prod[k - f + i] = (prod[k - f + i] + p - sub) % p;
                }
            }
        }
        self.pack(&prod[..f])
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

    /// Modulus coefficients `c₀ … c_f` (monic, so `c_f = 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The least primitive element in the packed order.
    pub fn primitive(&self) -> FieldElement {
        FieldElement(self.exp.get(1).copied().unwrap_or(1))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn coefficients(&self, x: FieldElement) -> Vec<u32> {
        self.digits(x.0)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> FieldElement {
        let mut d = vec![0u32; self.f as usize];
        for (i, &c) in coeffs.iter().enumerate().take(self.f as usize) {
            d[i] = c % self.p;
        }
        FieldElement(self.pack(&d))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.f {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let d: Vec<u32> = self
            .digits(a.0)
            .iter()
            .map(|&c| (self.p - c) % self.p)
            .collect();
        FieldElement(self.pack(&d))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let k = (self.log[a.0 as usize] + self.log[b.0 as usize]) % (self.q - 1);
        FieldElement(self.exp[k as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            return None;
        }
        let k = (self.q - 1 - self.log[a.0 as usize]) % (self.q - 1);
        Some(FieldElement(self.exp[k as usize]))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement(1);
        }
        if a.0 == 0 {
            return FieldElement(0);
        }
        let k = (self.log[a.0 as usize] as u64 * e) % (self.q as u64 - 1);
        FieldElement(self.exp[k as usize])
    }

    /// The Frobenius map `x ↦ x^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p as u64)
    }
}

/// Smallest monic irreducible polynomial of degree `f` over `F_p`, packed order.
fn least_irreducible(p: u32, f: u32) -> Vec<u32> {
    if f == 1 {
        return vec![0, 1];
    }
    let lower = (p as u64).pow(f);
    for code in 0..lower {
        let mut poly = unpack(code, p, f as usize);
        poly.push(1);
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree");
}

fn unpack(mut code: u64, p: u32, len: usize) -> Vec<u32> {
    let mut v = vec![0u32; len];
    for c in v.iter_mut() {
        *c = (code % p as u64) as u32;
        code /= p as u64;
    }
    v
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..(p as u64).pow(d as u32) {
            let mut divisor = unpack(code, p, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` by the monic polynomial `b` over `F_p`.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields_and_orders() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(f2.order(), 2);
        let f8 = make_field(2, 3).unwrap();
        assert_eq!(f8.order(), 8);
        assert_eq!(f8.modulus(), &[1, 1, 0, 1]); // x³ + x + 1
    }

    #[test]
    fn f4_reduction() {
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let x = f4.from_coefficients(&[0, 1]);
        let x_plus_1 = f4.from_coefficients(&[1, 1]);
        assert_eq!(f4.mul(x, x), x_plus_1);
    }

    #[test]
    fn errors() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(make_field(2, 21), Err(Error::TooLarge(_))));
        assert!(matches!(make_field(3, 0), Err(Error::BadParameter(_))));
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, f) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4)] {
            let k = make_field(p, f).unwrap();
            let els: Vec<_> = k.elements().collect();
            for &a in &els {
                assert_eq!(k.add(a, k.zero()), a);
                assert_eq!(k.mul(a, k.one()), a);
                assert_eq!(k.add(a, k.neg(a)), k.zero());
                if a != k.zero() {
                    assert_eq!(k.mul(a, k.inv(a).unwrap()), k.one());
                }
                for &b in &els {
                    assert_eq!(k.add(a, b), k.add(b, a));
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    // multiplication agrees with the schoolbook product
                    assert_eq!(k.mul(a, b).0, k.poly_mul(a.0, b.0));
                    for &c in &els {
                        assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
                        assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                        assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive_and_has_order_f() {
        let k = make_field(3, 2).unwrap();
        for a in k.elements() {
            for b in k.elements() {
                assert_eq!(k.frobenius(k.add(a, b)), k.add(k.frobenius(a), k.frobenius(b)));
            }
            assert_eq!(k.frobenius(k.frobenius(a)), a);
        }
    }
}
