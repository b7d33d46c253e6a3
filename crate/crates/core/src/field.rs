//! Table-driven arithmetic in GF(q) for prime powers q <= 49.
//!
//! Elements are dense indices in `0..q`. For a prime field the index is the
//! residue itself; for GF(p^k) it is the base-p digit vector of a polynomial
//! residue, lowest degree first, so `index = c0 + c1*p + ... + c_{k-1}*p^{k-1}`.
//! The modulus is the lexicographically least monic irreducible polynomial of
//! degree k (coefficients compared from the constant term upward), which fixes
//! GF(4) as `{0, 1, 2 = w, 3 = w^2}` with `w^2 = w + 1`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A field element, identified by its index in the owning field.
pub type Elem = u8;

pub const MAX_ORDER: u64 = 49;

/// The arithmetic operations exposed by [`Field::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow,
}

struct Tables {
    q: usize,
    p: usize,
    k: usize,
    modulus: Option<Vec<u8>>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    chi: Option<Vec<i8>>,
}

/// GF(q) with full addition and multiplication tables. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.q == other.0.q
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

/// Splits `q` into `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.

fn poly_trim(mut a: Vec<u8>) -> Vec<u8> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u8], b: &[u8], p: u32) -> Vec<u8> {
    let mut r = poly_trim(a.to_vec());
    let b = poly_trim(b.to_vec());
    let lead = *b.last().expect("nonzero divisor") as u32;
    let lead_inv = (1..p).find(|x| x * lead % p == 1).unwrap();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = (*r.last().unwrap() as u32 * lead_inv) % p;
        for (i, &bc) in b.iter().enumerate() {
            let idx = i + shift;
            r[idx] = ((r[idx] as u32 + p - (f * bc as u32) % p) % p) as u8;
        }
        r = poly_trim(r);
    }
    r
}

fn monic_polys(p: u32, degree: usize) -> impl Iterator<Item = Vec<u8>> {
    let count = (p as usize).pow(degree as u32);
    (0..count).map(move |mut idx| {
        let mut c = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            c.push((idx % p as usize) as u8);
            idx /= p as usize;
        }
        c.push(1);
        c
    })
}

fn is_irreducible(f: &[u8], p: u32) -> bool {
    let deg = f.len() - 1;
    (1..=deg / 2).all(|d| monic_polys(p, d).all(|g| !poly_rem(f, &g, p).is_empty()))
}

/// Least monic irreducible of the given degree, comparing coefficient vectors
/// from the constant term upward.
fn least_irreducible(p: u32, degree: usize) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    for f in monic_polys(p, degree) {
        if !is_irreducible(&f, p) {
            continue;
        }
        if best.as_ref().is_none_or(|b| f[..degree] < b[..degree]) {
            best = Some(f);
        }
    }
    best.expect("an irreducible polynomial exists for every degree")
}

impl Field {
    pub fn new(q: u64) -> Result<Field> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(Error::TooLarge(q));
        }
        let (q, p, k) = (q as usize, p as usize, k as usize);
        let modulus = (k > 1).then(|| least_irreducible(p as u32, k));
        let digits = |mut x: usize| -> Vec<usize> {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let undigits = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum) as Elem;
                let prod = match &modulus {
                    None => (a * b) % q,
                    Some(m) => {
                        let mut full = vec![0u8; 2 * k];
                        for (i, x) in da.iter().enumerate() {
                            for (j, y) in db.iter().enumerate() {
                                full[i + j] = ((full[i + j] as usize + x * y) % p) as u8;
                            }
                        }
                        let mut r = poly_rem(&full, m, p as u32);
                        r.resize(k, 0);
                        undigits(&r.iter().map(|&c| c as usize).collect::<Vec<_>>())
                    }
                };
                mul[a * q + b] = prod as Elem;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as Elem)
            .collect();
        let mut inv = vec![0; q];
        for a in 1..q {
            inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).ok_or(Error::NotPrimePower(q as u64))? as Elem;
        }
        let chi = (p != 2).then(|| {
            let mut c = vec![-1i8; q];
            c[0] = 0;
            for x in 1..q {
                c[mul[x * q + x] as usize] = 1;
            }
            c
        });
        Ok(Field(Arc::new(Tables { q, p, k, modulus, add, mul, neg, inv, chi })))
    }

    pub fn q(&self) -> usize {
        self.0.q
    }

    pub fn characteristic(&self) -> usize {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.k
    }

    /// Modulus coefficients (lowest degree first), present iff the degree exceeds 1.
    pub fn modulus(&self) -> Option<&[u8]> {
        self.0.modulus.as_deref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    pub fn contains(&self, a: u32) -> bool {
        (a as usize) < self.0.q
    }

    pub fn check(&self, a: u32) -> Result<Elem> {
        if self.contains(a) {
            Ok(a as Elem)
        } else {
            Err(Error::ForeignElement { index: a, q: self.0.q as u32 })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.0.add[a as usize * self.0.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.0.mul[a as usize * self.0.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.0.inv[a as usize])
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; negative exponents invert first.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        let base = if e < 0 { self.inv(a)? } else { a };
        let mut acc = 1;
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        Ok(acc)
    }

    /// Dispatches a [`FieldOp`]. Unary operations ignore `b`; `Pow` reads `b` as the exponent.
    pub fn apply(&self, op: FieldOp, a: Elem, b: i64) -> Result<Elem> {
        let elem = |x: i64| self.check(u32::try_from(x).unwrap_or(u32::MAX));
        self.check(a as u32)?;
        match op {
            FieldOp::Add => Ok(self.add(a, elem(b)?)),
            FieldOp::Sub => Ok(self.sub(a, elem(b)?)),
            FieldOp::Mul => Ok(self.mul(a, elem(b)?)),
            FieldOp::Div => self.div(a, elem(b)?),
            FieldOp::Neg => Ok(self.neg(a)),
            FieldOp::Inv => self.inv(a),
            FieldOp::Pow => self.pow(a, b),
        }
    }

    /// Embeds an integer via its residue mod p.
    pub fn from_int(&self, x: i64) -> Elem {
        x.rem_euclid(self.0.p as i64) as Elem
    }

    /// The quadratic character: 0 at 0, +1 on nonzero squares, -1 elsewhere.
    pub fn chi(&self, a: Elem) -> Result<i8> {
        self.0.chi.as_ref().map(|c| c[a as usize]).ok_or(Error::EvenCharacteristic)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(|a| a as Elem)
    }

    /// Scales a nonzero vector so its first nonzero entry is 1.
    pub fn normalize(&self, v: &mut [Elem]) {
        if let Some(&lead) = v.iter().find(|&&x| x != 0) {
            let s = self.0.inv[lead as usize];
            for x in v.iter_mut() {
                *x = self.mul(*x, s);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders() -> Vec<u64> {
        (2..=MAX_ORDER).filter(|&q| prime_power(q).is_some()).collect()
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(Field::new(6).unwrap_err(), Error::NotPrimePower(6));
        assert_eq!(Field::new(1).unwrap_err(), Error::NotPrimePower(1));
        assert_eq!(Field::new(53).unwrap_err(), Error::TooLarge(53));
        assert_eq!(Field::new(64).unwrap_err(), Error::TooLarge(64));
    }

    #[test]
    fn small_examples() {
        let f2 = Field::new(2).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        let f3 = Field::new(3).unwrap();
        assert_eq!(f3.add(2, 2), 1);
        let f7 = Field::new(7).unwrap();
        assert_eq!(f7.inv(3).unwrap(), 5);
        assert_eq!(f7.inv(0), Err(Error::DivisionByZero));
        assert_eq!(f7.apply(FieldOp::Pow, 3, 6).unwrap(), 1);
        assert_eq!(f7.apply(FieldOp::Div, 1, 3).unwrap(), 5);
    }

    #[test]
    fn gf4_labeling() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 1, 1][..]));
        // w*w = w^2 = w + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.add(2, 1), 3);
        assert_eq!(f.mul(2, 3), 1);
    }

    #[test]
    fn gf9_modulus_is_x2_plus_1() {
        let f = Field::new(9).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 0, 1][..]));
        // index 3 is x; x^2 = -1 = 2
        assert_eq!(f.mul(3, 3), f.neg(1));
    }

    #[test]
    fn chi_examples() {
        let f7 = Field::new(7).unwrap();
        assert_eq!(f7.chi(0).unwrap(), 0);
        assert_eq!(f7.chi(3).unwrap(), -1);
        assert_eq!(f7.chi(2).unwrap(), 1);
        assert_eq!(Field::new(11).unwrap().chi(5).unwrap(), 1);
        assert_eq!(Field::new(8).unwrap().chi(1), Err(Error::EvenCharacteristic));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in orders() {
            let f = Field::new(q).unwrap();
            let e: Vec<Elem> = f.elements().collect();
            for &a in &e {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for &b in &e {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &e {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)), "GF({q})");
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)), "GF({q})");
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn chi_is_a_character() {
        for q in [3, 5, 7, 9, 11, 13] {
            let f = Field::new(q).unwrap();
            for a in 1..q as Elem {
                for b in 1..q as Elem {
                    let lhs = f.chi(f.mul(a, b)).unwrap();
                    assert_eq!(lhs, f.chi(a).unwrap() * f.chi(b).unwrap());
                }
            }
        }
        for q in orders().into_iter().filter(|q| q % 2 == 1) {
            let f = Field::new(q).unwrap();
            let squares = f.elements().filter(|&a| f.chi(a).unwrap() == 1).count();
            assert_eq!(squares as u64, (q - 1) / 2);
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let a = Field::new(27).unwrap();
        let b = Field::new(27).unwrap();
        assert_eq!(a.0.mul, b.0.mul);
        assert_eq!(a.modulus(), b.modulus());
    }
}
