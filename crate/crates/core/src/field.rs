//! Exact arithmetic in prime fields and their finite extensions.
//!
//! A [`Field`] describes either the prime field F_p or an extension
//! F_p[z]/(m(z)) for a monic irreducible m. Elements store their owning
//! field handle, so mixing elements of different fields is a checked error.

use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::Error;

/// Coefficient vector of one element, length = extension degree.
pub type Coeffs = SmallVec<[u64; 2]>;

#[derive(Debug)]
struct FieldCore {
    p: u64,
    d: usize,
    /// Monic defining polynomial over F_p, low-to-high, length d+1. None for d = 1.
    modulus: Option<Vec<u64>>,
}

/// A finite field F_{p^d}, shared by handle.
#[derive(Clone)]
pub struct Field(Arc<FieldCore>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.d == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{{{}^{}}}", self.0.p, self.0.d)
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.d == other.0.d && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

impl Field {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Field, Error> {
        if !is_prime_u64(p) || p > (1 << 16) {
            return Err(Error::BadField(format!("characteristic {p} is not a small prime")));
        }
        Ok(Field(Arc::new(FieldCore { p, d: 1, modulus: None })))
    }

    /// F_p[z]/(m) for a monic irreducible m given low-to-high over F_p.
    pub fn extension(p: u64, modulus: &[u64]) -> Result<Field, Error> {
        let base = Field::prime(p)?;
        let d = modulus.len().saturating_sub(1);
        if d == 0 {
            return Err(Error::BadField("defining polynomial must have degree >= 1".into()));
        }
        if d > 16 {
            return Err(Error::BadField(format!("extension degree {d} exceeds supported bound")));
        }
        let m: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if *m.last().unwrap() != 1 {
            return Err(Error::BadField("defining polynomial must be monic".into()));
        }
        if d == 1 {
            return Ok(base);
        }
        if !base.poly_is_irreducible(&m) {
            return Err(Error::BadField("defining polynomial is reducible".into()));
        }
        Ok(Field(Arc::new(FieldCore { p, d, modulus: Some(m) })))
    }

    /// F_{p^d} with a deterministically chosen defining polynomial: the
    /// lexicographically first monic irreducible of degree d.
    pub fn with_degree(p: u64, d: usize) -> Result<Field, Error> {
        if d == 1 {
            return Field::prime(p);
        }
        let base = Field::prime(p)?;
        if d > 16 {
            return Err(Error::BadField(format!("extension degree {d} exceeds supported bound")));
        }
        let mut tail = vec![0u64; d];
        loop {
            let mut m = tail.clone();
            m.push(1);
            if base.poly_is_irreducible(&m) {
                return Field::extension(p, &m);
            }
            // increment the tail as a base-p counter
            let mut i = 0;
            loop {
                if i == d {
                    return Err(Error::BadField(format!("no irreducible of degree {d} found")));
                }
                tail[i] += 1;
                if tail[i] < p {
                    break;
                }
                tail[i] = 0;
                i += 1;
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.d
    }

    /// Field size p^d.
    pub fn order(&self) -> u64 {
        self.0.p.pow(self.0.d as u32)
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        self.0.modulus.as_deref()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), c: SmallVec::from_elem(0, self.0.d) }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    pub fn from_u64(&self, n: u64) -> FieldElement {
        let mut c = SmallVec::from_elem(0, self.0.d);
        c[0] = n % self.0.p;
        FieldElement { field: self.clone(), c }
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        let p = self.0.p as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }

    /// Element from coefficient vector over F_p, low-to-high (length <= d).
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement, Error> {
        if coeffs.len() > self.0.d {
            return Err(Error::BadField("coefficient vector longer than extension degree".into()));
        }
        let mut c = SmallVec::from_elem(0, self.0.d);
        for (i, v) in coeffs.iter().enumerate() {
            c[i] = v % self.0.p;
        }
        Ok(FieldElement { field: self.clone(), c })
    }

    /// The residue class of z in F_p[z]/(m); for d = 1 this is 0.
    pub fn generator(&self) -> FieldElement {
        if self.0.d == 1 {
            return self.zero();
        }
        let mut c = SmallVec::from_elem(0, self.0.d);
        c[1] = 1;
        FieldElement { field: self.clone(), c }
    }

    /// All field elements in a fixed deterministic order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let q = self.order();
        (0..q).map(move |i| {
            let mut c = SmallVec::from_elem(0, self.0.d);
            let mut v = i;
            for slot in c.iter_mut() {
                *slot = v % self.0.p;
                v /= self.0.p;
            }
            FieldElement { field: self.clone(), c }
        })
    }

    // ---- raw slice arithmetic (coefficients mod p, length d) ----

    fn add_raw(&self, a: &[u64], b: &[u64]) -> Coeffs {
        let p = self.0.p;
        a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
    }

    fn sub_raw(&self, a: &[u64], b: &[u64]) -> Coeffs {
        let p = self.0.p;
        a.iter().zip(b).map(|(x, y)| (x + p - y) % p).collect()
    }

    fn neg_raw(&self, a: &[u64]) -> Coeffs {
        let p = self.0.p;
        a.iter().map(|x| (p - x) % p).collect()
    }

    fn mul_raw(&self, a: &[u64], b: &[u64]) -> Coeffs {
        let p = self.0.p;
        let d = self.0.d;
        if d == 1 {
            return SmallVec::from_elem(a[0] * b[0] % p, 1);
        }
        // schoolbook product then reduction by the monic modulus
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let m = self.0.modulus.as_ref().unwrap();
        for k in (d..2 * d - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &mj) in m.iter().enumerate().take(d) {
                let idx = k - d + j;
                prod[idx] = (prod[idx] + c * (p - mj)) % p;
            }
        }
        prod.truncate(d);
        SmallVec::from_vec(prod)
    }

    fn inv_mod_p(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        // Fermat: a^(p-2) mod p
        let p = self.0.p;
        let mut r = 1u64;
        let mut b = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        Some(r)
    }

    fn inv_raw(&self, a: &[u64]) -> Option<Coeffs> {
        if a.iter().all(|&x| x == 0) {
            return None;
        }
        if self.0.d == 1 {
            return self.inv_mod_p(a[0]).map(|v| SmallVec::from_elem(v, 1));
        }
        // extended Euclid in F_p[z] against the modulus
        let p = self.0.p;
        let trim = |v: &mut Vec<u64>| while v.last() == Some(&0) {
            v.pop();
        };
        let mut r0: Vec<u64> = self.0.modulus.as_ref().unwrap().clone();
        let mut r1: Vec<u64> = a.to_vec();
        trim(&mut r1);
        let mut s0: Vec<u64> = vec![];
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            // divide r0 by r1
            let lead_inv = self.inv_mod_p(*r1.last().unwrap()).unwrap();
            let mut rem = r0.clone();
            let mut q: Vec<u64> = vec![0; rem.len().saturating_sub(r1.len()) + 1];
            while rem.len() >= r1.len() && !rem.is_empty() {
                let shift = rem.len() - r1.len();
                let coef = rem.last().unwrap() * lead_inv % p;
                q[shift] = (q[shift] + coef) % p;
                for (j, &c) in r1.iter().enumerate() {
                    rem[shift + j] = (rem[shift + j] + coef * (p - c)) % p;
                }
                trim(&mut rem);
            }
            // s2 = s0 - q*s1
            let mut qs = vec![0u64; q.len() + s1.len()];
            for (i, &qi) in q.iter().enumerate() {
                if qi == 0 {
                    continue;
                }
                for (j, &sj) in s1.iter().enumerate() {
                    qs[i + j] = (qs[i + j] + qi * sj) % p;
                }
            }
            let n = s0.len().max(qs.len());
            let mut s2 = vec![0u64; n];
            for (i, slot) in s2.iter_mut().enumerate() {
                let x = s0.get(i).copied().unwrap_or(0);
                let y = qs.get(i).copied().unwrap_or(0);
                *slot = (x + p - y) % p;
            }
            trim(&mut s2);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 = gcd, a nonzero constant since the modulus is irreducible
        debug_assert_eq!(r0.len(), 1);
        let scale = self.inv_mod_p(r0[0]).unwrap();
        let mut out = SmallVec::from_elem(0, self.0.d);
        for (i, &c) in s0.iter().enumerate() {
            out[i] = c * scale % p;
        }
        Some(out)
    }

    // ---- irreducibility over F_p for defining polynomials ----

    /// Irreducibility of a monic polynomial over F_p (used for moduli only,
    /// so a direct x^(p^i) ladder is plenty).
    fn poly_is_irreducible(&self, m: &[u64]) -> bool {
        let p = self.0.p;
        let d = m.len() - 1;
        if d == 1 {
            return true;
        }
        let polymulmod = |a: &[u64], b: &[u64]| -> Vec<u64> {
            if a.is_empty() || b.is_empty() {
                return vec![];
            }
            let mut prod = vec![0u64; a.len() + b.len() - 1];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            // reduce mod m
            while prod.len() >= m.len() {
                let c = *prod.last().unwrap();
                let k = prod.len() - m.len();
                if c != 0 {
                    for (j, &mj) in m.iter().enumerate() {
                        prod[k + j] = (prod[k + j] + c * (p - mj)) % p;
                    }
                }
                while prod.last() == Some(&0) {
                    prod.pop();
                }
                if prod.len() < m.len() {
                    break;
                }
            }
            while prod.last() == Some(&0) {
                prod.pop();
            }
            prod
        };
        let polypow_p = |a: &[u64]| -> Vec<u64> {
            let mut r = vec![1u64];
            let mut b = a.to_vec();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    r = polymulmod(&r, &b);
                }
                b = polymulmod(&b, &b);
                e >>= 1;
            }
            r
        };
        let polygcd_nontrivial = |a: &[u64]| -> bool {
            // gcd(a, m) has positive degree?
            let mut r0 = m.to_vec();
            let mut r1 = a.to_vec();
            while !r1.is_empty() {
                let lead_inv = self.inv_mod_p(*r1.last().unwrap()).unwrap();
                let mut rem = r0.clone();
                while rem.len() >= r1.len() && !rem.is_empty() {
                    let shift = rem.len() - r1.len();
                    let coef = rem.last().unwrap() * lead_inv % p;
                    for (j, &c) in r1.iter().enumerate() {
                        rem[shift + j] = (rem[shift + j] + coef * (p - c)) % p;
                    }
                    while rem.last() == Some(&0) {
                        rem.pop();
                    }
                    if rem.len() < r1.len() {
                        break;
                    }
                }
                r0 = r1;
                r1 = rem;
            }
            r0.len() > 1
        };
        // m irreducible iff x^(p^d) = x mod m and gcd(x^(p^k) - x, m) = 1
        // for every proper divisor k of d
        let x = vec![0u64, 1];
        let mut xq = x.clone();
        for k in 1..=d {
            xq = polypow_p(&xq);
            let mut diff = xq.clone();
            if diff.len() < 2 {
                diff.resize(2, 0);
            }
            diff[1] = (diff[1] + p - 1) % p;
            while diff.last() == Some(&0) {
                diff.pop();
            }
            if k == d {
                if !diff.is_empty() {
                    return false;
                }
            } else if d % k == 0 && polygcd_nontrivial(&diff) {
                return false;
            }
        }
        true
    }
}

/// An element of a finite field, with its owning [`Field`] handle.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    c: Coeffs,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.c == other.c
    }
}
impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    /// Canonical order: compare coefficient vectors from the highest
    /// extension-degree coefficient down. Only meaningful within one field.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.c.iter().rev().cmp(other.c.iter().rev())
    }
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    pub fn is_one(&self) -> bool {
        self.c[0] == 1 && self.c[1..].iter().all(|&x| x == 0)
    }

    /// Value as an integer 0..p for prime-field elements.
    pub fn as_u64(&self) -> Result<u64, Error> {
        if self.field.degree() != 1 {
            return Err(Error::BadField("element is not in a prime field".into()));
        }
        Ok(self.c[0])
    }

    fn check_same(&self, other: &FieldElement) -> Result<(), Error> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, Error> {
        self.check_same(other)?;
        Ok(FieldElement { field: self.field.clone(), c: self.field.add_raw(&self.c, &other.c) })
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement, Error> {
        self.check_same(other)?;
        Ok(FieldElement { field: self.field.clone(), c: self.field.sub_raw(&self.c, &other.c) })
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, Error> {
        self.check_same(other)?;
        Ok(FieldElement { field: self.field.clone(), c: self.field.mul_raw(&self.c, &other.c) })
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement, Error> {
        self.check_same(other)?;
        let inv = other.inverse()?;
        Ok(FieldElement { field: self.field.clone(), c: self.field.mul_raw(&self.c, &inv.c) })
    }

    pub fn negate(&self) -> FieldElement {
        FieldElement { field: self.field.clone(), c: self.field.neg_raw(&self.c) }
    }

    pub fn inverse(&self) -> Result<FieldElement, Error> {
        match self.field.inv_raw(&self.c) {
            Some(c) => Ok(FieldElement { field: self.field.clone(), c }),
            None => Err(Error::DivisionByZero),
        }
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, k: i64) -> Result<FieldElement, Error> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut r = self.field.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                r = r.checked_mul(&b).unwrap();
            }
            b = b.checked_mul(&b).unwrap();
            e >>= 1;
        }
        Ok(r)
    }

    /// p-th root, always exists and is unique: a^(q/p).
    pub fn pth_root(&self) -> FieldElement {
        let q = self.field.order();
        let p = self.field.characteristic();
        self.pow((q / p) as i64).unwrap()
    }

    /// Frobenius x -> x^p iterated k times.
    pub fn frobenius(&self, k: usize) -> FieldElement {
        let p = self.field.characteristic() as i64;
        let mut r = self.clone();
        for _ in 0..k {
            r = r.pow(p).unwrap();
        }
        r
    }

    /// Minimal polynomial over F_p, monic, low-to-high coefficients.
    pub fn min_poly_over_prime(&self) -> Vec<u64> {
        let p = self.field.characteristic();
        // Frobenius orbit
        let mut orbit = vec![self.clone()];
        loop {
            let next = orbit.last().unwrap().frobenius(1);
            if next == orbit[0] {
                break;
            }
            orbit.push(next);
        }
        // product of (X - sigma) over the orbit, coefficients in the big field
        let mut poly = vec![self.field.one()];
        for sigma in &orbit {
            let mut next = vec![self.field.zero(); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = next[i + 1].checked_add(c).unwrap();
                next[i] = next[i].checked_sub(&c.checked_mul(sigma).unwrap()).unwrap();
            }
            poly = next;
        }
        // coefficients are Frobenius-fixed, hence in the prime subfield
        poly.iter()
            .map(|c| {
                debug_assert!(c.c[1..].iter().all(|&x| x == 0));
                c.c[0] % p
            })
            .collect()
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            return write!(f, "{}", self.c[0]);
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = vec![];
        for (i, &c) in self.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "z".into(),
                (1, c) => format!("{c}*z"),
                (i, 1) => format!("z^{i}"),
                (i, c) => format!("{c}*z^{i}"),
            };
            parts.push(part);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

macro_rules! elem_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field arithmetic")
            }
        }
        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$checked(&rhs).expect("field arithmetic")
            }
        }
    };
}
elem_binop!(Add, add, checked_add);
elem_binop!(Sub, sub, checked_sub);
elem_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.negate()
    }
}

/// The coefficient-domain abstraction shared by finite-field elements and
/// rational functions; lets curve formulas be written once.
pub trait FieldLike: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv_ref(&self) -> Result<Self, Error>;
    /// The image of the integer n in this field.
    fn small(&self, n: i64) -> Self;

    fn div_ref(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul_ref(&other.inv_ref()?))
    }

    fn pow_u(&self, mut e: u64) -> Self {
        let mut r = self.one_like();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul_ref(&b);
            }
            b = b.mul_ref(&b);
            e >>= 1;
        }
        r
    }
}

impl FieldLike for FieldElement {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.checked_add(other).expect("field arithmetic")
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("field arithmetic")
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("field arithmetic")
    }
    fn neg_ref(&self) -> Self {
        self.negate()
    }
    fn inv_ref(&self) -> Result<Self, Error> {
        self.inverse()
    }
    fn small(&self, n: i64) -> Self {
        self.field.from_i64(n)
    }
}
