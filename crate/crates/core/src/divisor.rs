//! Places of the projective t-line over F_p and formal Z-combinations of
//! them.
//!
//! A finite place is a monic irreducible polynomial in t; the place at
//! infinity is first-class with uniformizer 1/t. The empty divisor renders
//! as "1", matching the usual table convention for trivial terms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::field::{Field, FieldElement};
use crate::poly::{canonical_cmp, Poly};
use crate::ratfunc::{eval_in, RatFunc};

#[derive(Clone, Debug)]
pub enum Place {
    /// A monic irreducible polynomial of F_p[t].
    Finite(Poly),
    Infinity,
}

impl Place {
    pub fn finite(pi: Poly) -> Result<Place, Error> {
        if !pi.is_monic() || !pi.is_irreducible() {
            return Err(Error::Unsupported("finite places are monic irreducibles".into()));
        }
        Ok(Place::Finite(pi))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(pi) => pi.deg_or_zero(),
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    /// The residue field F_p[t]/(pi), or F_p at infinity.
    pub fn residue_field(&self, base: &Field) -> Result<Field, Error> {
        match self {
            Place::Infinity => Ok(base.clone()),
            Place::Finite(pi) => {
                if pi.deg_or_zero() == 1 {
                    return Ok(base.clone());
                }
                let coeffs: Vec<u64> = pi.coeffs().iter().map(|c| c.coeffs()[0]).collect();
                Field::extension(base.characteristic(), &coeffs)
            }
        }
    }
}

impl PartialEq for Place {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Place {}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Place {
    /// Canonical order: finite places by (degree, coefficients from the
    /// leading term down); infinity sorts last.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
            (Place::Infinity, _) => Ordering::Greater,
            (_, Place::Infinity) => Ordering::Less,
            (Place::Finite(a), Place::Finite(b)) => canonical_cmp(a, b),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Finite(pi) => write!(f, "({})", pi.render("t")),
        }
    }
}

/// Order of vanishing of a nonzero rational function at a place.
pub fn valuation(r: &RatFunc, v: &Place) -> Result<i64, Error> {
    if r.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    match v {
        Place::Infinity => {
            Ok(r.denominator().deg_or_zero() as i64 - r.numerator().deg_or_zero() as i64)
        }
        Place::Finite(pi) => {
            Ok(multiplicity(r.numerator(), pi) - multiplicity(r.denominator(), pi))
        }
    }
}

fn multiplicity(f: &Poly, pi: &Poly) -> i64 {
    let mut m = 0;
    let mut g = f.clone();
    loop {
        match g.divrem(pi) {
            Ok((q, rem)) if rem.is_zero() && !g.is_zero() => {
                g = q;
                m += 1;
            }
            _ => return m,
        }
    }
}

/// Image of r in the residue field at v; requires valuation(r, v) >= 0.
pub fn residue_reduce(r: &RatFunc, v: &Place) -> Result<FieldElement, Error> {
    if r.is_zero() {
        return Ok(v.residue_field(r.field())?.zero());
    }
    if valuation(r, v)? < 0 {
        return Err(Error::NegativeValuation);
    }
    let k = v.residue_field(r.field())?;
    match v {
        Place::Infinity => {
            if r.numerator().deg_or_zero() < r.denominator().deg_or_zero() {
                Ok(k.zero())
            } else {
                r.numerator().leading().checked_div(&r.denominator().leading())
            }
        }
        Place::Finite(pi) => {
            let theta = if pi.deg_or_zero() == 1 {
                pi.coeff(0).negate()
            } else {
                k.generator()
            };
            let num = eval_in(r.numerator(), &k, &theta)?;
            let den = eval_in(r.denominator(), &k, &theta)?;
            num.checked_div(&den)
        }
    }
}

/// A formal Z-linear combination of places; zero multiplicities are never
/// stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Divisor {
    mults: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn zero() -> Divisor {
        Divisor { mults: BTreeMap::new() }
    }

    pub fn single(v: Place, m: i64) -> Divisor {
        let mut d = Divisor::zero();
        d.set(v, m);
        d
    }

    pub fn set(&mut self, v: Place, m: i64) {
        if m == 0 {
            self.mults.remove(&v);
        } else {
            self.mults.insert(v, m);
        }
    }

    pub fn mult(&self, v: &Place) -> i64 {
        self.mults.get(v).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.mults.values().all(|&m| m > 0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.mults.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.mults.iter().map(|(v, &m)| (v, m))
    }

    pub fn degree(&self) -> i64 {
        self.mults.iter().map(|(v, m)| m * v.degree() as i64).sum()
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (v, m) in other.iter() {
            out.set(v.clone(), out.mult(v) + m);
        }
        out
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (v, m) in other.iter() {
            out.set(v.clone(), out.mult(v) - m);
        }
        out
    }

    /// Pointwise minimum over the union of supports, absent places counting
    /// as zero. This is the gcd of effective divisors.
    pub fn min(&self, other: &Divisor) -> Divisor {
        let mut out = Divisor::zero();
        for v in self.support().chain(other.support()) {
            let m = self.mult(v).min(other.mult(v));
            out.set(v.clone(), m);
        }
        out
    }

    /// Pointwise <= with absent places counting as zero.
    pub fn leq(&self, other: &Divisor) -> bool {
        self.support()
            .chain(other.support())
            .all(|v| self.mult(v) <= other.mult(v))
    }

    /// Principal divisor of a nonzero rational function (zeros minus poles,
    /// including infinity); its degree is always zero.
    pub fn principal(r: &RatFunc, seed: u64) -> Result<Divisor, Error> {
        if r.is_zero() {
            return Err(Error::ValuationOfZero);
        }
        let mut d = Divisor::zero();
        let (_, nf) = crate::poly::factor(r.numerator(), seed)?;
        for (pi, e) in nf {
            d.set(Place::Finite(pi), e as i64);
        }
        let (_, df) = crate::poly::factor(r.denominator(), seed)?;
        for (pi, e) in df {
            let cur = d.mult(&Place::Finite(pi.clone()));
            d.set(Place::Finite(pi), cur - e as i64);
        }
        d.set(
            Place::Infinity,
            r.denominator().deg_or_zero() as i64 - r.numerator().deg_or_zero() as i64,
        );
        Ok(d)
    }
}

impl fmt::Display for Divisor {
    /// Canonical rendering: "(f1)^e1 * (f2)^e2 * inf^k" with factors in
    /// canonical order, infinity last, and the empty divisor as "1".
    /// Single-term polynomials (only "t" arises) drop their parentheses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        let mut parts = vec![];
        for (v, m) in self.iter() {
            let base = match v {
                Place::Infinity => "inf".to_string(),
                Place::Finite(pi) => {
                    let s = pi.render("t");
                    if s.contains(' ') {
                        format!("({s})")
                    } else {
                        s
                    }
                }
            };
            if m == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{m}"));
            }
        }
        write!(f, "{}", parts.join(" * "))
    }
}
