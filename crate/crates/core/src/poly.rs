//! Dense univariate polynomials over any coefficient field, plus complete
//! factorization over finite fields (squarefree split, distinct-degree,
//! seeded equal-degree splitting).
//!
//! Every polynomial carries a zero element of its coefficient domain so the
//! zero polynomial still knows where it lives. Coefficients are stored
//! low-to-high with no trailing zeros; degree of the zero polynomial is the
//! `None` sentinel.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::field::{Field, FieldElement, FieldLike};

#[derive(Clone, Debug)]
pub struct UPoly<K: FieldLike> {
    zero: K,
    c: Vec<K>,
}

impl<K: FieldLike> PartialEq for UPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.zero == other.zero && self.c == other.c
    }
}
impl<K: FieldLike> Eq for UPoly<K> {}

impl<K: FieldLike> UPoly<K> {
    pub fn zero(sample: &K) -> Self {
        UPoly { zero: sample.zero_like(), c: vec![] }
    }

    pub fn constant(k: K) -> Self {
        let zero = k.zero_like();
        let c = if k.is_zero() { vec![] } else { vec![k] };
        UPoly { zero, c }
    }

    pub fn one(sample: &K) -> Self {
        UPoly::constant(sample.one_like())
    }

    /// The monomial x.
    pub fn x(sample: &K) -> Self {
        UPoly { zero: sample.zero_like(), c: vec![sample.zero_like(), sample.one_like()] }
    }

    pub fn from_coeffs(sample: &K, coeffs: Vec<K>) -> Self {
        let mut p = UPoly { zero: sample.zero_like(), c: coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.c.last().map_or(false, |k| k.is_zero()) {
            self.c.pop();
        }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> K {
        self.c.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn zero_coeff(&self) -> &K {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0] == self.zero.one_like()
    }

    /// None is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> K {
        self.c.last().cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn is_monic(&self) -> bool {
        self.c.last().map_or(false, |k| *k == self.zero.one_like())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i).add_ref(&other.coeff(i)));
        }
        UPoly::from_coeffs(&self.zero, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i).sub_ref(&other.coeff(i)));
        }
        UPoly::from_coeffs(&self.zero, c)
    }

    pub fn neg(&self) -> Self {
        UPoly { zero: self.zero.clone(), c: self.c.iter().map(|k| k.neg_ref()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(&self.zero);
        }
        let mut c = vec![self.zero.clone(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] = c[i + j].add_ref(&a.mul_ref(b));
            }
        }
        UPoly::from_coeffs(&self.zero, c)
    }

    pub fn scale(&self, k: &K) -> Self {
        UPoly::from_coeffs(&self.zero, self.c.iter().map(|a| a.mul_ref(k)).collect())
    }

    /// Multiply by x^n.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![self.zero.clone(); n];
        c.extend(self.c.iter().cloned());
        UPoly { zero: self.zero.clone(), c }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut r = UPoly::one(&self.zero);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    pub fn divrem(&self, d: &Self) -> Result<(Self, Self), Error> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.c.len() < d.c.len() {
            return Ok((UPoly::zero(&self.zero), self.clone()));
        }
        let lead_inv = d.leading().inv_ref()?;
        let mut rem = self.c.clone();
        let mut quot = vec![self.zero.clone(); rem.len() - d.c.len() + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + d.c.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.mul_ref(&lead_inv);
            for (j, dc) in d.c.iter().enumerate() {
                rem[i + j] = rem[i + j].sub_ref(&q.mul_ref(dc));
            }
            quot[i] = q;
        }
        Ok((UPoly::from_coeffs(&self.zero, quot), UPoly::from_coeffs(&self.zero, rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self, Error> {
        Ok(self.divrem(d)?.1)
    }

    /// Exact division; error if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Result<Self, Error> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::Inconsistency("polynomial division not exact".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv_ref().unwrap();
        self.scale(&inv)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, at: &K) -> K {
        let mut acc = self.zero.clone();
        for k in self.c.iter().rev() {
            acc = acc.mul_ref(at).add_ref(k);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return UPoly::zero(&self.zero);
        }
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, k)| k.mul_ref(&self.zero.small(i as i64)))
            .collect();
        UPoly::from_coeffs(&self.zero, c)
    }

    /// Substitute another polynomial for x.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = UPoly::zero(&self.zero);
        for k in self.c.iter().rev() {
            acc = acc.mul(inner).add(&UPoly::constant(k.clone()));
        }
        acc
    }

    pub fn render(&self, var: &str) -> String {
        render_terms(&self.c, var, |k| format_coeff(k))
    }
}

fn format_coeff<K: FieldLike + std::fmt::Debug>(k: &K) -> String {
    format!("{:?}", k)
}

/// Canonical polynomial rendering: terms from highest degree down, "^" powers,
/// "*" between a non-unit coefficient and its monomial.
fn render_terms<K: FieldLike>(c: &[K], var: &str, fmt: impl Fn(&K) -> String) -> String {
    if c.is_empty() {
        return "0".into();
    }
    let one = c[0].one_like();
    let mut parts = vec![];
    for (i, k) in c.iter().enumerate().rev() {
        if k.is_zero() {
            continue;
        }
        let coeff = fmt(k);
        let needs_parens = coeff.contains(' ') || coeff.contains('+') || coeff.contains('/');
        let coeff = if needs_parens { format!("({coeff})") } else { coeff };
        let part = match i {
            0 => coeff,
            _ => {
                let mon = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                if *k == one {
                    mon
                } else {
                    format!("{coeff}*{mon}")
                }
            }
        };
        parts.push(part);
    }
    parts.join(" + ")
}

/// Polynomials in t over a finite field: the concrete domain of places,
/// divisors and factorization.
pub type Poly = UPoly<FieldElement>;

impl Poly {
    pub fn field(&self) -> &Field {
        self.zero.field()
    }

    pub fn zero_over(field: &Field) -> Poly {
        UPoly::zero(&field.zero())
    }

    pub fn one_over(field: &Field) -> Poly {
        UPoly::one(&field.zero())
    }

    pub fn x_over(field: &Field) -> Poly {
        UPoly::x(&field.zero())
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        UPoly::from_coeffs(&field.zero(), coeffs.iter().map(|&n| field.from_i64(n)).collect())
    }

    /// x^e mod m, with e given directly (fits in u64 at our scales).
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut r = Poly::one_over(self.field());
        let mut b = self.rem(m).unwrap();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b).rem(m).unwrap();
            }
            b = b.mul(&b).rem(m).unwrap();
            e >>= 1;
        }
        r
    }

    /// Number of distinct roots in the coefficient field.
    pub fn count_roots(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        if self.degree() == Some(0) {
            return 0;
        }
        let q = self.field().order();
        let x = Poly::x_over(self.field());
        let xq = x.pow_mod(q, self);
        let g = self.gcd(&xq.sub(&x));
        g.deg_or_zero()
    }

    /// Distinct roots in the coefficient field, in canonical element order.
    pub fn roots(&self) -> Vec<FieldElement> {
        if self.is_zero() || self.degree() == Some(0) {
            return vec![];
        }
        let q = self.field().order();
        let x = Poly::x_over(self.field());
        let xq = x.pow_mod(q, self);
        let lin = self.gcd(&xq.sub(&x));
        let mut out = vec![];
        for (f, _) in factor(&lin, 0).unwrap().1 {
            if f.degree() == Some(1) {
                out.push(f.coeff(0).negate());
            }
        }
        out.sort();
        out
    }

    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(1) => true,
            Some(_) => {
                let (_, factors) = factor(self, 0).unwrap();
                factors.len() == 1 && factors[0].1 == 1
            }
        }
    }

    /// Coefficient-wise p-th root of a polynomial in x^p.
    fn pth_root_poly(&self) -> Poly {
        let p = self.field().characteristic() as usize;
        let mut c = vec![];
        let mut i = 0;
        while i < self.c.len() {
            debug_assert!(i % p == 0 || self.c[i].is_zero());
            if i % p == 0 {
                c.push(self.c[i].pth_root());
            }
            i += 1;
        }
        UPoly::from_coeffs(&self.zero, c)
    }

    /// Squarefree part times multiplicity bookkeeping is handled by `factor`;
    /// this is the plain radical: the product of the distinct monic
    /// irreducible factors.
    pub fn radical(&self, seed: u64) -> Result<Poly, Error> {
        let (_, factors) = factor(self, seed)?;
        let mut r = Poly::one_over(self.field());
        for (f, _) in factors {
            r = r.mul(&f);
        }
        Ok(r)
    }
}

/// Canonical factor order: by degree, then coefficient tuples compared from
/// the leading coefficient down.
pub fn canonical_cmp(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    a.c.len().cmp(&b.c.len()).then_with(|| a.c.iter().rev().cmp(b.c.iter().rev()))
}

/// Complete factorization of f over its finite coefficient field:
/// f = lead * prod f_i^(e_i) with the f_i monic irreducible, sorted
/// canonically. The seed drives equal-degree splitting only; the output is
/// canonical regardless.
pub fn factor(f: &Poly, seed: u64) -> Result<(FieldElement, Vec<(Poly, u32)>), Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = f.leading();
    let mut factors = factor_monic(&f.monic(), &mut ChaCha8Rng::seed_from_u64(seed));
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    Ok((lead, factors))
}

fn factor_monic(f: &Poly, rng: &mut ChaCha8Rng) -> Vec<(Poly, u32)> {
    if f.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let p = f.field().characteristic() as u32;
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f is a p-th power
        let root = f.pth_root_poly();
        return factor_monic(&root, rng).into_iter().map(|(g, e)| (g, e * p)).collect();
    }
    let sf = f.div_exact(&f.gcd(&deriv)).unwrap();
    let mut out = vec![];
    let mut rest = f.clone();
    for q in distinct_irreducibles(&sf, rng) {
        let mut e = 0u32;
        loop {
            match rest.divrem(&q) {
                Ok((quot, rem)) if rem.is_zero() => {
                    rest = quot;
                    e += 1;
                }
                _ => break,
            }
        }
        debug_assert!(e >= 1);
        out.push((q, e));
    }
    if rest.degree().unwrap_or(0) >= 1 {
        // leftover factors all had multiplicity divisible by p
        let root = rest.pth_root_poly();
        out.extend(factor_monic(&root, rng).into_iter().map(|(g, e)| (g, e * p)));
    }
    out
}

/// Factor a monic squarefree polynomial into its distinct irreducibles.
fn distinct_irreducibles(sf: &Poly, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let field = sf.field().clone();
    let q = field.order();
    let mut out = vec![];
    let mut h = sf.clone();
    let x = Poly::x_over(&field);
    let mut xq = x.clone();
    let mut d = 0usize;
    while h.deg_or_zero() > 0 {
        d += 1;
        if 2 * d > h.deg_or_zero() {
            out.push(h.monic());
            break;
        }
        xq = xq.pow_mod(q, &h);
        let g = h.gcd(&xq.sub(&x));
        if g.deg_or_zero() > 0 {
            out.extend(equal_degree_split(&g, d, rng));
            h = h.div_exact(&g).unwrap();
            xq = xq.rem(&h).unwrap();
        }
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting: f is monic squarefree, a
/// product of irreducibles all of degree d.
fn equal_degree_split(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    if f.deg_or_zero() == d {
        return vec![f.monic()];
    }
    let field = f.field().clone();
    let q = field.order();
    let n = f.deg_or_zero();
    loop {
        let coeffs: Vec<FieldElement> =
            (0..n).map(|_| nth_element(&field, rng.gen_range(0..q))).collect();
        let a = UPoly::from_coeffs(&field.zero(), coeffs);
        if a.deg_or_zero() < 1 {
            continue;
        }
        let g = f.gcd(&a);
        let splitter = if g.deg_or_zero() > 0 {
            g
        } else if field.characteristic() == 2 {
            // GF(2)-trace of a modulo f
            let bits = (q.ilog2() as usize) * d;
            let mut tr = a.rem(f).unwrap();
            let mut cur = tr.clone();
            for _ in 1..bits {
                cur = cur.mul(&cur).rem(f).unwrap();
                tr = tr.add(&cur);
            }
            f.gcd(&tr)
        } else {
            // b = a^((q^d - 1)/2) via the norm ladder, then gcd(b - 1, f)
            let mut frob = a.rem(f).unwrap();
            let mut norm = frob.clone();
            for _ in 1..d {
                frob = frob.pow_mod(q, f);
                norm = norm.mul(&frob).rem(f).unwrap();
            }
            let b = norm.pow_mod((q - 1) / 2, f);
            f.gcd(&b.sub(&Poly::one_over(&field)))
        };
        if splitter.deg_or_zero() > 0 && splitter.deg_or_zero() < n {
            let other = f.div_exact(&splitter).unwrap();
            let mut out = equal_degree_split(&splitter, d, rng);
            out.extend(equal_degree_split(&other, d, rng));
            return out;
        }
    }
}

fn nth_element(field: &Field, mut idx: u64) -> FieldElement {
    let p = field.characteristic();
    let mut coeffs = vec![];
    for _ in 0..field.degree() {
        coeffs.push(idx % p);
        idx /= p;
    }
    field.element(&coeffs).unwrap()
}
