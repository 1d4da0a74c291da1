//! Exact arithmetic in the cyclotomic field `Q(zeta_n)`.
//!
//! Elements are residues in `Q[x] / Phi_n(x)`, stored as `phi(n)` rational
//! coefficients (lowest degree first). The primitive root `zeta` is the class
//! of `x`. Because `Phi_n` is irreducible over `Q`, every nonzero residue has
//! an inverse, found with the extended Euclidean algorithm.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::{cyclotomic_poly, IntPoly};
use super::rat::Rat;
use crate::error::{Error, Result};

/// The field `Q(zeta_n)` together with precomputed reductions of `x^m`.
pub struct CycloField {
    order: usize,
    phi: usize,
    modulus: IntPoly,
    /// `powers[m]` is `x^m mod Phi_n` as `phi` integers, for
    /// `m < max(order, 2 * phi - 1)`.
    powers: Vec<Vec<BigInt>>,
}

impl CycloField {
    pub fn new(order: usize) -> Result<Arc<Self>> {
        if order == 0 {
            return Err(Error::Domain("cyclotomic order must be positive".into()));
        }
        let modulus = cyclotomic_poly(order);
        let phi = modulus.degree().expect("cyclotomic polynomials are nonzero");
        let table_len = order.max(2 * phi - 1);

        let mut powers = Vec::with_capacity(table_len);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..table_len {
            powers.push(cur.clone());
            // multiply by x, then fold the x^phi term back using the monic modulus
            let top = cur.pop().expect("phi >= 1");
            cur.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (c, m) in cur.iter_mut().zip(modulus.coeffs()) {
                    *c -= &top * m;
                }
            }
        }

        Ok(Arc::new(CycloField {
            order,
            phi,
            modulus,
            powers,
        }))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Degree of the field over `Q`, i.e. Euler's `phi(order)`.
    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> CycloNum {
        CycloNum {
            field: Arc::clone(self),
            coeffs: vec![Rat::zero(); self.phi],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycloNum {
        self.from_rat(Rat::one())
    }

    pub fn from_rat(self: &Arc<Self>, r: Rat) -> CycloNum {
        let mut z = self.zero();
        z.coeffs[0] = r;
        z
    }

    /// `zeta^k` for any integer `k`, with the exponent reduced modulo the order.
    pub fn root_power(self: &Arc<Self>, k: i64) -> CycloNum {
        let m = k.rem_euclid(self.order as i64) as usize;
        CycloNum {
            field: Arc::clone(self),
            coeffs: self.powers[m].iter().cloned().map(Rat::from).collect(),
        }
    }

    /// Reduces an arbitrary polynomial (lowest degree first) into the field.
    pub fn from_poly(self: &Arc<Self>, coeffs: &[Rat]) -> CycloNum {
        let mut rem: Vec<Rat> = coeffs.to_vec();
        let d = self.phi;
        let m = self.modulus.coeffs();
        for k in (d..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[k]);
            if lead.is_zero() {
                continue;
            }
            for i in 0..d {
                let t = &lead * &Rat::from(m[i].clone());
                rem[k - d + i] -= &t;
            }
        }
        rem.resize(d, Rat::zero());
        CycloNum {
            field: Arc::clone(self),
            coeffs: rem,
        }
    }

    /// Evaluates an integer polynomial at an element of this field.
    pub fn eval(self: &Arc<Self>, p: &IntPoly, at: &CycloNum) -> Result<CycloNum> {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = acc.try_mul(at)?.try_add(&self.from_rat(Rat::from(c.clone())))?;
        }
        Ok(acc)
    }
}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{}) mod {}", self.order, self.modulus)
    }
}

/// An element of `Q(zeta_n)`.
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<CycloField>,
    coeffs: Vec<Rat>,
}

impl CycloNum {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rat::is_zero)
    }

    fn check_field(&self, other: &CycloNum) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.order == other.field.order {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.order,
                right: other.field.order,
            })
        }
    }

    pub fn try_add(&self, other: &CycloNum) -> Result<CycloNum> {
        self.check_field(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &CycloNum) -> Result<CycloNum> {
        self.check_field(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &CycloNum, f: impl Fn(&Rat, &Rat) -> Rat) -> CycloNum {
        CycloNum {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Clears denominators: returns integers `c_i` and `d > 0` with
    /// `coeffs[i] = c_i / d`.
    fn scaled(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }

    pub fn try_mul(&self, other: &CycloNum) -> Result<CycloNum> {
        self.check_field(other)?;
        let phi = self.field.phi;
        let (a, da) = self.scaled();
        let (b, db) = other.scaled();

        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                prod[i + j] += x * y;
            }
        }
        let mut reduced: Vec<BigInt> = prod[..phi].to_vec();
        for (m, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (r, p) in reduced.iter_mut().zip(&self.field.powers[m]) {
                *r += c * p;
            }
        }

        let den = da * db;
        Ok(CycloNum {
            field: Arc::clone(&self.field),
            coeffs: reduced
                .into_iter()
                .map(|c| Rat::new(c, den.clone()).expect("denominator is positive"))
                .collect(),
        })
    }

    /// Multiplicative inverse via extended Euclid on `(self, Phi_n)` over `Q`.
    pub fn inv(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<Rat> = self
            .field
            .modulus
            .coeffs()
            .iter()
            .cloned()
            .map(Rat::from)
            .collect();

        // Invariant: s_i * self == r_i (mod Phi_n).
        let mut r0 = modulus;
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<Rat> = Vec::new();
        let mut s1 = vec![Rat::one()];
        while !r1.is_empty() {
            let (q, r) = qpoly_div_rem(&r0, &r1);
            let s_next = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s_next);
        }
        // Phi_n is irreducible, so the gcd r0 is a nonzero constant.
        if r0.len() != 1 {
            return Err(Error::InternalInconsistency(format!(
                "gcd with Phi_{} has degree {}",
                self.field.order,
                r0.len().saturating_sub(1)
            )));
        }
        let scale = r0[0].recip()?;
        let coeffs: Vec<Rat> = s0.iter().map(|c| c * &scale).collect();
        Ok(self.field.from_poly(&coeffs))
    }

    pub fn try_div(&self, other: &CycloNum) -> Result<CycloNum> {
        self.check_field(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, mut exp: u64) -> CycloNum {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// The rational value if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(Rat::is_zero) {
        p.pop();
    }
    p
}

fn qpoly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let zero = Rat::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

/// Division of `a` by a nonzero `b` over `Q`.
fn qpoly_div_rem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    let lead_inv = b[db].recip().expect("trimmed divisor has nonzero lead");
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![Rat::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        let c = &rem[k] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for i in 0..=db {
            let t = &c * &b[i];
            rem[k - db + i] -= &t;
        }
        quot[k - db] = c;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNum {}

/// Coefficient tuple `(a0,a1,...)`, each entry in rational text form.
impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@Q(zeta_{})", self, self.field.order)
    }
}

impl CycloNum {
    /// Parses the `(a0,a1,...)` tuple form into `field`. Tuples longer than
    /// `phi` are reduced modulo the cyclotomic polynomial.
    pub fn parse_in(field: &Arc<CycloField>, s: &str) -> Result<CycloNum> {
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected `(a0,a1,...)`, got `{s}`")))?;
        let coeffs = body
            .split(',')
            .map(str::parse::<Rat>)
            .collect::<Result<Vec<_>>>()?;
        Ok(field.from_poly(&coeffs))
    }
}

// Operator forms panic on mismatched fields; matrices only ever hold entries
// of one field. Use the `try_*` methods at API boundaries.
impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &'a CycloNum) -> CycloNum {
        self.try_add(rhs).expect("cyclotomic add")
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &'a CycloNum) -> CycloNum {
        self.try_sub(rhs).expect("cyclotomic sub")
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &'a CycloNum) -> CycloNum {
        self.try_mul(rhs).expect("cyclotomic mul")
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn root_power_examples() {
        let f4 = CycloField::new(4).unwrap();
        assert_eq!(f4.root_power(1).coeffs(), &[q("0"), q("1")]);
        let f2 = CycloField::new(2).unwrap();
        assert_eq!(f2.root_power(1).as_rational(), Some(q("-1")));
        let f3 = CycloField::new(3).unwrap();
        assert!(f3.root_power(3).is_one());
        assert!(f3.root_power(0).is_one());
        assert_eq!(f3.root_power(-1), f3.root_power(2));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let f4 = CycloField::new(4).unwrap();
        let i = f4.root_power(1);
        assert_eq!((&i * &i).as_rational(), Some(q("-1")));
    }

    #[test]
    fn inverse_examples() {
        let f4 = CycloField::new(4).unwrap();
        let one_minus_i = &f4.one() - &f4.root_power(1);
        let expected = f4.from_poly(&[q("1/2"), q("1/2")]);
        assert_eq!(one_minus_i.inv().unwrap(), expected);
        assert!(f4.one().inv().unwrap().is_one());

        let f3 = CycloField::new(3).unwrap();
        assert_eq!(f3.root_power(1).inv().unwrap(), f3.root_power(2));
        assert_eq!(f3.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn as_rational_examples() {
        let f5 = CycloField::new(5).unwrap();
        assert_eq!(f5.from_rat(q("7/3")).as_rational(), Some(q("7/3")));
        let f4 = CycloField::new(4).unwrap();
        assert_eq!(f4.root_power(1).as_rational(), None);
        let f3 = CycloField::new(3).unwrap();
        let z = f3.root_power(1);
        let v = &(-&z) - &f3.root_power(2);
        assert_eq!(v.as_rational(), Some(q("1")));
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = CycloField::new(3).unwrap().one();
        let b = CycloField::new(4).unwrap().one();
        assert_eq!(
            a.try_add(&b),
            Err(Error::FieldMismatch { left: 3, right: 4 })
        );
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn parse_and_display() {
        let f5 = CycloField::new(5).unwrap();
        let a = CycloNum::parse_in(&f5, "(1,-2/3,0,5)").unwrap();
        assert_eq!(a.to_string(), "(1,-2/3,0,5)");
        // x^4 = -1 - x - x^2 - x^3 in Q(zeta_5)
        let b = CycloNum::parse_in(&f5, "(0,0,0,0,1)").unwrap();
        assert_eq!(b.to_string(), "(-1,-1,-1,-1)");
        assert!(CycloNum::parse_in(&f5, "1,2").is_err());
    }

    #[test]
    fn primitive_roots_have_exact_order() {
        for n in 1..=30usize {
            let f = CycloField::new(n).unwrap();
            for k in (1..=n).filter(|k| k.gcd(&n) == 1) {
                let z = f.root_power(k as i64);
                assert!(f.eval(f.modulus(), &z).unwrap().is_zero(), "n={n} k={k}");
                assert!(z.pow(n as u64).is_one());
                for m in 1..n {
                    assert!(!z.pow(m as u64).is_one(), "n={n} k={k} m={m}");
                }
            }
        }
    }
}
