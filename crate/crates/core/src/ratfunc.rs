//! Rational functions in t over a finite field, kept in lowest terms with a
//! monic denominator.

use std::fmt;

use crate::error::Error;
use crate::field::{Field, FieldElement, FieldLike};
use crate::poly::{Poly, UPoly};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = RatFunc { num, den };
        r.reduce();
        Ok(r)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one_over(self.den.field());
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.deg_or_zero() > 0 {
            self.num = self.num.div_exact(&g).unwrap();
            self.den = self.den.div_exact(&g).unwrap();
        }
        let lead_inv = self.den.leading().inverse().unwrap();
        self.den = self.den.scale(&lead_inv);
        self.num = self.num.scale(&lead_inv);
        // keep den monic: scale both by 1/lead(den)
        let lead = self.den.leading();
        debug_assert!(lead.is_one());
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let den = Poly::one_over(p.field());
        RatFunc { num: p, den }
    }

    pub fn constant(c: FieldElement) -> RatFunc {
        RatFunc::from_poly(UPoly::constant(c))
    }

    pub fn zero_over(field: &Field) -> RatFunc {
        RatFunc::from_poly(Poly::zero_over(field))
    }

    pub fn one(field: &Field) -> RatFunc {
        RatFunc::from_poly(Poly::one_over(field))
    }

    pub fn t(field: &Field) -> RatFunc {
        RatFunc::from_poly(Poly::x_over(field))
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.deg_or_zero() == 0
    }

    pub fn as_constant(&self) -> Option<FieldElement> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        let den = self.den.mul(&o.den);
        RatFunc::new(num, den).unwrap()
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        let num = self.num.mul(&o.den).sub(&o.num.mul(&self.den));
        let den = self.den.mul(&o.den);
        RatFunc::new(num, den).unwrap()
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        // cross-reduce before multiplying to keep degrees down
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = if g1.deg_or_zero() > 0 { self.num.div_exact(&g1).unwrap() } else { self.num.clone() };
        let d2 = if g1.deg_or_zero() > 0 { o.den.div_exact(&g1).unwrap() } else { o.den.clone() };
        let n2 = if g2.deg_or_zero() > 0 { o.num.div_exact(&g2).unwrap() } else { o.num.clone() };
        let d1 = if g2.deg_or_zero() > 0 { self.den.div_exact(&g2).unwrap() } else { self.den.clone() };
        RatFunc::new(n1.mul(&n2), d1.mul(&d2)).unwrap()
    }

    pub fn negate(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn inverse(&self) -> Result<RatFunc, Error> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc, Error> {
        Ok(self.mul(&o.inverse()?))
    }

    pub fn pow(&self, k: i64) -> Result<RatFunc, Error> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        Ok(base.pow_u(k.unsigned_abs()))
    }

    /// Specialize t to a value in an extension field; the coefficients embed
    /// through the prime field. Errors if the denominator vanishes there.
    pub fn eval_at(&self, at: &FieldElement) -> Result<FieldElement, Error> {
        let k = at.field();
        let num = eval_in(&self.num, k, at)?;
        let den = eval_in(&self.den, k, at)?;
        num.checked_div(&den)
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render("t")
        } else {
            let n = self.num.render("t");
            let d = self.den.render("t");
            let n = if self.num.coeffs().iter().filter(|c| !FieldElement::is_zero(c)).count() > 1 {
                format!("({n})")
            } else {
                n
            };
            let d = if self.den.coeffs().iter().filter(|c| !FieldElement::is_zero(c)).count() > 1 {
                format!("({d})")
            } else {
                d
            };
            format!("{n}/{d}")
        }
    }
}

/// Evaluate a polynomial over F_p at a point of an extension of F_p.
pub fn eval_in(f: &Poly, k: &Field, at: &FieldElement) -> Result<FieldElement, Error> {
    if f.field().characteristic() != k.characteristic() {
        return Err(Error::FieldMismatch);
    }
    if f.field().degree() != 1 {
        return Err(Error::Unsupported("coefficient embedding needs a prime base field".into()));
    }
    let mut acc = k.zero();
    for c in f.coeffs().iter().rev() {
        acc = acc.checked_mul(at)?.checked_add(&k.from_u64(c.coeffs()[0]))?;
    }
    Ok(acc)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl FieldLike for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero_over(self.field())
    }
    fn one_like(&self) -> Self {
        RatFunc::one(self.field())
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.negate()
    }
    fn inv_ref(&self) -> Result<Self, Error> {
        self.inverse()
    }
    fn small(&self, n: i64) -> Self {
        RatFunc::constant(self.field().from_i64(n))
    }
}
