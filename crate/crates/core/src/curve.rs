//! Elliptic curves in general Weierstrass form y^2 + a1*x*y + a3*y =
//! x^3 + a2*x^2 + a4*x + a6, over any coefficient field.
//!
//! The chord-tangent law is implemented with the full a1/a3 terms so it is
//! correct in characteristics 2 and 3, which carry most of the interesting
//! reduction behavior. Coordinate changes are the standard (u, r, s, t)
//! substitutions x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.

use std::fmt;

use crate::error::Error;
use crate::field::FieldLike;
use crate::poly::{factor, Poly};
use crate::ratfunc::RatFunc;

#[derive(Clone, PartialEq, Debug)]
pub struct Curve<K: FieldLike> {
    pub a1: K,
    pub a2: K,
    pub a3: K,
    pub a4: K,
    pub a6: K,
}

#[derive(Clone, PartialEq, Debug)]
pub enum Point<K: FieldLike> {
    Infinity,
    Affine(K, K),
}

impl<K: FieldLike> Point<K> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn xy(&self) -> Option<(&K, &K)> {
        match self {
            Point::Infinity => None,
            Point::Affine(x, y) => Some((x, y)),
        }
    }
}

/// Derived quantities of a Weierstrass equation.
#[derive(Clone, Debug)]
pub struct Invariants<K> {
    pub b2: K,
    pub b4: K,
    pub b6: K,
    pub b8: K,
    pub c4: K,
    pub c6: K,
    pub disc: K,
}

impl<K: FieldLike> Curve<K> {
    /// A nonsingular model; the discriminant must not vanish.
    pub fn new(a1: K, a2: K, a3: K, a4: K, a6: K) -> Result<Curve<K>, Error> {
        let e = Curve { a1, a2, a3, a4, a6 };
        if e.invariants().disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(e)
    }

    /// Short form y^2 = x^3 + a4 x + a6.
    pub fn short(a4: K, a6: K) -> Result<Curve<K>, Error> {
        let z = a4.zero_like();
        Curve::new(z.clone(), z.clone(), z.clone(), a4, a6)
    }

    pub fn invariants(&self) -> Invariants<K> {
        let Curve { a1, a2, a3, a4, a6 } = self;
        let n = |v: i64| a1.small(v);
        let b2 = a1.mul_ref(a1).add_ref(&n(4).mul_ref(a2));
        let b4 = n(2).mul_ref(a4).add_ref(&a1.mul_ref(a3));
        let b6 = a3.mul_ref(a3).add_ref(&n(4).mul_ref(a6));
        let b8 = a1
            .mul_ref(a1)
            .mul_ref(a6)
            .add_ref(&n(4).mul_ref(a2).mul_ref(a6))
            .sub_ref(&a1.mul_ref(a3).mul_ref(a4))
            .add_ref(&a2.mul_ref(a3).mul_ref(a3))
            .sub_ref(&a4.mul_ref(a4));
        let c4 = b2.mul_ref(&b2).sub_ref(&n(24).mul_ref(&b4));
        let c6 = b2
            .mul_ref(&b2)
            .mul_ref(&b2)
            .neg_ref()
            .add_ref(&n(36).mul_ref(&b2).mul_ref(&b4))
            .sub_ref(&n(216).mul_ref(&b6));
        let disc = b2
            .mul_ref(&b2)
            .mul_ref(&b8)
            .neg_ref()
            .sub_ref(&n(8).mul_ref(&b4).mul_ref(&b4).mul_ref(&b4))
            .sub_ref(&n(27).mul_ref(&b6).mul_ref(&b6))
            .add_ref(&n(9).mul_ref(&b2).mul_ref(&b4).mul_ref(&b6));
        Invariants { b2, b4, b6, b8, c4, c6, disc }
    }

    pub fn discriminant(&self) -> K {
        self.invariants().disc
    }

    /// j = c4^3 / disc; defined because construction rejects disc = 0.
    pub fn j_invariant(&self) -> K {
        let inv = self.invariants();
        let c4cube = inv.c4.mul_ref(&inv.c4).mul_ref(&inv.c4);
        c4cube.div_ref(&inv.disc).expect("nonsingular curve")
    }

    pub fn contains(&self, p: &Point<K>) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine(x, y) => {
                let lhs = y
                    .mul_ref(y)
                    .add_ref(&self.a1.mul_ref(x).mul_ref(y))
                    .add_ref(&self.a3.mul_ref(y));
                let rhs = x
                    .mul_ref(x)
                    .mul_ref(x)
                    .add_ref(&self.a2.mul_ref(x).mul_ref(x))
                    .add_ref(&self.a4.mul_ref(x))
                    .add_ref(&self.a6);
                lhs == rhs
            }
        }
    }

    /// -(x, y) = (x, -y - a1 x - a3).
    pub fn negate_point(&self, p: &Point<K>) -> Point<K> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => {
                let ny = y.neg_ref().sub_ref(&self.a1.mul_ref(x)).sub_ref(&self.a3);
                Point::Affine(x.clone(), ny)
            }
        }
    }

    /// Chord-tangent addition, all cases.
    pub fn add_points(&self, p: &Point<K>, q: &Point<K>) -> Result<Point<K>, Error> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::PointNotOnCurve);
        }
        Ok(self.add_unchecked(p, q))
    }

    pub(crate) fn add_unchecked(&self, p: &Point<K>, q: &Point<K>) -> Point<K> {
        let (x1, y1) = match p {
            Point::Infinity => return q.clone(),
            Point::Affine(x, y) => (x, y),
        };
        let (x2, y2) = match q {
            Point::Infinity => return p.clone(),
            Point::Affine(x, y) => (x, y),
        };
        let (lambda, nu) = if x1 == x2 {
            let minus_y1 = y1
                .neg_ref()
                .sub_ref(&self.a1.mul_ref(x1))
                .sub_ref(&self.a3);
            if *y2 == minus_y1 {
                return Point::Infinity;
            }
            // tangent line; the denominator 2y + a1 x + a3 is nonzero here
            let den = y1
                .small(2)
                .mul_ref(y1)
                .add_ref(&self.a1.mul_ref(x1))
                .add_ref(&self.a3);
            let num_l = x1
                .small(3)
                .mul_ref(x1)
                .mul_ref(x1)
                .add_ref(&x1.small(2).mul_ref(&self.a2).mul_ref(x1))
                .add_ref(&self.a4)
                .sub_ref(&self.a1.mul_ref(y1));
            let num_n = x1
                .mul_ref(x1)
                .mul_ref(x1)
                .neg_ref()
                .add_ref(&self.a4.mul_ref(x1))
                .add_ref(&x1.small(2).mul_ref(&self.a6))
                .sub_ref(&self.a3.mul_ref(y1));
            let dinv = den.inv_ref().expect("2-torsion handled above");
            (num_l.mul_ref(&dinv), num_n.mul_ref(&dinv))
        } else {
            let dx = x2.sub_ref(x1);
            let dinv = dx.inv_ref().expect("x1 != x2");
            let lambda = y2.sub_ref(y1).mul_ref(&dinv);
            let nu = y1.mul_ref(x2).sub_ref(&y2.mul_ref(x1)).mul_ref(&dinv);
            (lambda, nu)
        };
        let x3 = lambda
            .mul_ref(&lambda)
            .add_ref(&self.a1.mul_ref(&lambda))
            .sub_ref(&self.a2)
            .sub_ref(x1)
            .sub_ref(x2);
        let y3 = lambda
            .add_ref(&self.a1)
            .mul_ref(&x3)
            .neg_ref()
            .sub_ref(&nu)
            .sub_ref(&self.a3);
        Point::Affine(x3, y3)
    }

    /// Double-and-add; n = 0 gives the identity.
    pub fn scalar_mul(&self, p: &Point<K>, n: u64) -> Result<Point<K>, Error> {
        if !self.contains(p) {
            return Err(Error::PointNotOnCurve);
        }
        let mut acc = Point::Infinity;
        let mut base = p.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }

    pub fn apply_transform(&self, t: &Transform<K>) -> Result<Curve<K>, Error> {
        let Transform { u, r, s, t: tt } = t;
        if u.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let uinv = u.inv_ref()?;
        let u2 = uinv.mul_ref(&uinv);
        let u3 = u2.mul_ref(&uinv);
        let u4 = u2.mul_ref(&u2);
        let u6 = u3.mul_ref(&u3);
        let two = u.small(2);
        let three = u.small(3);
        let a1 = self.a1.add_ref(&two.mul_ref(s)).mul_ref(&uinv);
        let a2 = self
            .a2
            .sub_ref(&s.mul_ref(&self.a1))
            .add_ref(&three.mul_ref(r))
            .sub_ref(&s.mul_ref(s))
            .mul_ref(&u2);
        let a3 = self
            .a3
            .add_ref(&r.mul_ref(&self.a1))
            .add_ref(&two.mul_ref(tt))
            .mul_ref(&u3);
        let a4 = self
            .a4
            .sub_ref(&s.mul_ref(&self.a3))
            .add_ref(&two.mul_ref(r).mul_ref(&self.a2))
            .sub_ref(&tt.add_ref(&r.mul_ref(s)).mul_ref(&self.a1))
            .add_ref(&three.mul_ref(r).mul_ref(r))
            .sub_ref(&two.mul_ref(s).mul_ref(tt))
            .mul_ref(&u4);
        let a6 = self
            .a6
            .add_ref(&r.mul_ref(&self.a4))
            .add_ref(&r.mul_ref(r).mul_ref(&self.a2))
            .add_ref(&r.mul_ref(r).mul_ref(r))
            .sub_ref(&tt.mul_ref(&self.a3))
            .sub_ref(&tt.mul_ref(tt))
            .sub_ref(&r.mul_ref(tt).mul_ref(&self.a1))
            .mul_ref(&u6);
        Ok(Curve { a1, a2, a3, a4, a6 })
    }
}

impl<K: FieldLike + fmt::Display> Curve<K> {
    pub fn render(&self) -> String {
        let coeff = |k: &K| -> String {
            let s = format!("{k}");
            if s.contains(' ') || s.contains('/') {
                format!("({s})")
            } else {
                s
            }
        };
        let term = |k: &K, mon: &str| -> Option<String> {
            if k.is_zero() {
                return None;
            }
            if mon.is_empty() {
                return Some(coeff(k));
            }
            if *k == k.one_like() {
                Some(mon.to_string())
            } else {
                Some(format!("{}*{}", coeff(k), mon))
            }
        };
        let mut lhs = vec!["y^2".to_string()];
        lhs.extend(term(&self.a1, "x*y"));
        lhs.extend(term(&self.a3, "y"));
        let mut rhs = vec!["x^3".to_string()];
        rhs.extend(term(&self.a2, "x^2"));
        rhs.extend(term(&self.a4, "x"));
        rhs.extend(term(&self.a6, ""));
        format!("{} = {}", lhs.join(" + "), rhs.join(" + "))
    }
}

pub fn render_point<K: FieldLike + fmt::Display>(p: &Point<K>) -> String {
    match p {
        Point::Infinity => "O".to_string(),
        Point::Affine(x, y) => format!("({x}, {y})"),
    }
}

/// Coordinate change x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
#[derive(Clone, PartialEq, Debug)]
pub struct Transform<K: FieldLike> {
    pub u: K,
    pub r: K,
    pub s: K,
    pub t: K,
}

impl<K: FieldLike> Transform<K> {
    pub fn new(u: K, r: K, s: K, t: K) -> Result<Transform<K>, Error> {
        if u.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Transform { u, r, s, t })
    }

    pub fn identity(sample: &K) -> Transform<K> {
        Transform {
            u: sample.one_like(),
            r: sample.zero_like(),
            s: sample.zero_like(),
            t: sample.zero_like(),
        }
    }

    pub fn scaling(u: K) -> Result<Transform<K>, Error> {
        let z = u.zero_like();
        Transform::new(u, z.clone(), z.clone(), z)
    }

    pub fn translation(r: K, t: K) -> Transform<K> {
        Transform { u: r.one_like(), s: r.zero_like(), r, t }
    }

    pub fn shear(s: K) -> Transform<K> {
        Transform { u: s.one_like(), r: s.zero_like(), t: s.zero_like(), s }
    }

    pub fn is_identity(&self) -> bool {
        self.u == self.u.one_like() && self.r.is_zero() && self.s.is_zero() && self.t.is_zero()
    }

    /// First apply self, then `next` (to the model self produces).
    pub fn then(&self, next: &Transform<K>) -> Transform<K> {
        let u = self.u.mul_ref(&next.u);
        let r = self.u.mul_ref(&self.u).mul_ref(&next.r).add_ref(&self.r);
        let s = self.u.mul_ref(&next.s).add_ref(&self.s);
        let t = self
            .u
            .mul_ref(&self.u)
            .mul_ref(&self.u)
            .mul_ref(&next.t)
            .add_ref(&self.u.mul_ref(&self.u).mul_ref(&self.s).mul_ref(&next.r))
            .add_ref(&self.t);
        Transform { u, r, s, t }
    }

    pub fn inverse(&self) -> Transform<K> {
        let uinv = self.u.inv_ref().expect("u != 0");
        let u2 = uinv.mul_ref(&uinv);
        let u3 = u2.mul_ref(&uinv);
        let r = self.r.mul_ref(&u2).neg_ref();
        let s = self.s.mul_ref(&uinv).neg_ref();
        let t = self.s.mul_ref(&self.r).sub_ref(&self.t).mul_ref(&u3);
        Transform { u: uinv, r, s, t }
    }

    /// Map a point of the source model to the transformed model:
    /// x' = (x - r)/u^2, y' = (y - s(x - r) - t)/u^3.
    pub fn map_point(&self, p: &Point<K>) -> Point<K> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => {
                let uinv = self.u.inv_ref().expect("u != 0");
                let u2 = uinv.mul_ref(&uinv);
                let u3 = u2.mul_ref(&uinv);
                let xr = x.sub_ref(&self.r);
                let xp = xr.mul_ref(&u2);
                let yp = y.sub_ref(&self.s.mul_ref(&xr)).sub_ref(&self.t).mul_ref(&u3);
                Point::Affine(xp, yp)
            }
        }
    }

    /// Map a point of the transformed model back to the source model.
    pub fn unmap_point(&self, p: &Point<K>) -> Point<K> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(xp, yp) => {
                let u2 = self.u.mul_ref(&self.u);
                let u3 = u2.mul_ref(&self.u);
                let x = u2.mul_ref(xp).add_ref(&self.r);
                let y = u3.mul_ref(yp).add_ref(&u2.mul_ref(&self.s).mul_ref(xp)).add_ref(&self.t);
                Point::Affine(x, y)
            }
        }
    }
}

impl Curve<RatFunc> {
    /// Clear denominators with a transform u = 1/g, r = s = t = 0, where g is
    /// the smallest monic polynomial making every coefficient a polynomial.
    pub fn integralize(
        &self,
        point: &Point<RatFunc>,
    ) -> Result<(Curve<RatFunc>, Point<RatFunc>, Transform<RatFunc>), Error> {
        let field = self.a1.field().clone();
        let mut g = Poly::one_over(&field);
        let coeffs = [(&self.a1, 1u32), (&self.a2, 2), (&self.a3, 3), (&self.a4, 4), (&self.a6, 6)];
        let mut candidates: Vec<Poly> = vec![];
        for (a, _) in coeffs {
            if a.is_zero() {
                continue;
            }
            for (pi, _) in factor(a.denominator(), 0)?.1 {
                if !candidates.contains(&pi) {
                    candidates.push(pi);
                }
            }
        }
        for pi in candidates {
            let v = crate::divisor::Place::Finite(pi.clone());
            let mut e = 0i64;
            for (a, w) in coeffs {
                if a.is_zero() {
                    continue;
                }
                let val = crate::divisor::valuation(a, &v)?;
                if val < 0 {
                    // smallest e with val + w*e >= 0
                    let need = (-val + w as i64 - 1) / w as i64;
                    e = e.max(need);
                }
            }
            for _ in 0..e {
                g = g.mul(&pi);
            }
        }
        if g.is_one() {
            let id = Transform::identity(&self.a1);
            return Ok((self.clone(), point.clone(), id));
        }
        let u = RatFunc::from_poly(g).inverse()?;
        let tr = Transform::scaling(u)?;
        let model = self.apply_transform(&tr)?;
        let p = tr.map_point(point);
        Ok((model, p, tr))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::divisor::{valuation, Place};

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn rf_t(field: &Field) -> RatFunc {
        RatFunc::t(field)
    }

    /// y^2 = x^3 + t x - t over F_3(t) with P = (1, 1).
    fn ex_3_4() -> (Curve<RatFunc>, Point<RatFunc>) {
        let k = f(3);
        let t = rf_t(&k);
        let e = Curve::short(t.clone(), t.negate()).unwrap();
        let p = Point::Affine(RatFunc::one(&k), RatFunc::one(&k));
        assert!(e.contains(&p));
        (e, p)
    }

    #[test]
    fn discriminants_match_known_values() {
        let (e, _) = ex_3_4();
        let k = f(3);
        let t = rf_t(&k);
        // disc = -t^3 = 2t^3
        let expected = t.pow(3).unwrap().mul(&RatFunc::constant(k.from_u64(2)));
        assert_eq!(e.discriminant(), expected);

        // y^2 + t y = x^3 + t^2 x over F_2: disc = t^4
        let k2 = f(2);
        let t2 = rf_t(&k2);
        let z = RatFunc::zero_over(&k2);
        let e2 = Curve::new(z.clone(), z.clone(), t2.clone(), t2.pow(2).unwrap(), z).unwrap();
        assert_eq!(e2.discriminant(), t2.pow(4).unwrap());

        // y^2 = x^3 + 1 over F_5: j = 0
        let k5 = f(5);
        let e3: Curve<crate::field::FieldElement> =
            Curve::short(k5.zero(), k5.one()).unwrap();
        assert!(e3.j_invariant().is_zero());
    }

    #[test]
    fn identity_and_inverse_law() {
        let (e, p) = ex_3_4();
        assert_eq!(e.add_points(&p, &Point::Infinity).unwrap(), p);
        let np = e.negate_point(&p);
        assert!(e.contains(&np));
        assert_eq!(e.add_points(&p, &np).unwrap(), Point::Infinity);
    }

    #[test]
    fn duplication_formula_on_quadratic_twist_family() {
        // y^2 = x^3 + r^2 a x + r^3 b with r = t^3 + a t + b, P = (r t, r^2);
        // then x(2P) = (3t^2 + a)^2/4 - 2 r t.
        let k = f(5);
        let t = rf_t(&k);
        let a = RatFunc::one(&k);
        let b = RatFunc::one(&k);
        let r = t.pow(3).unwrap().add(&a.mul(&t)).add(&b);
        let e = Curve::short(
            r.pow(2).unwrap().mul(&a),
            r.pow(3).unwrap().mul(&b),
        )
        .unwrap();
        let p = Point::Affine(r.mul(&t), r.pow(2).unwrap());
        assert!(e.contains(&p));
        let two_p = e.scalar_mul(&p, 2).unwrap();
        let (x2, _) = two_p.xy().unwrap();
        let three_t2_plus_a = t.pow(2).unwrap().mul(&RatFunc::constant(k.from_u64(3))).add(&a);
        let quarter = RatFunc::constant(k.from_u64(4).inverse().unwrap());
        let expected = three_t2_plus_a
            .pow(2)
            .unwrap()
            .mul(&quarter)
            .sub(&r.mul(&t).mul(&RatFunc::constant(k.from_u64(2))));
        assert_eq!(*x2, expected);
    }

    #[test]
    fn triple_valuation_on_supersingular_example() {
        // In the t-minimal model of y^2 = x^3 + tx - t, v_t(x(3P)) = -4.
        let (e, p) = ex_3_4();
        let k = f(3);
        let three_p = e.scalar_mul(&p, 3).unwrap();
        let (x3, _) = three_p.xy().unwrap();
        let vt = Place::finite(Poly::from_ints(&k, &[0, 1])).unwrap();
        assert_eq!(valuation(x3, &vt).unwrap(), -4);
    }

    #[test]
    fn transform_examples() {
        let (e, p) = ex_3_4();
        let k = f(3);
        let id = Transform::identity(&RatFunc::one(&k));
        assert_eq!(e.apply_transform(&id).unwrap(), e);

        // u = t: x = t^2 x', y = t^3 y' gives y'^2 = x'^3 + t^-3 x' - t^-5
        let tr = Transform::scaling(rf_t(&k)).unwrap();
        let e2 = e.apply_transform(&tr).unwrap();
        let t = rf_t(&k);
        assert_eq!(e2.a4, t.pow(-3).unwrap());
        assert_eq!(e2.a6, t.pow(-5).unwrap().negate());
        // disc' = u^-12 disc = 2 t^-9
        let expected = t.pow(-9).unwrap().mul(&RatFunc::constant(k.from_u64(2)));
        assert_eq!(e2.discriminant(), expected);
        // j is preserved (here j = 0)
        assert_eq!(e2.j_invariant(), e.j_invariant());

        // round trip point map
        let q = tr.map_point(&p);
        assert!(e2.contains(&q));
        assert_eq!(tr.unmap_point(&q), p);
        let back = tr.then(&tr.inverse());
        assert!(back.is_identity());
    }

    #[test]
    fn random_transforms_preserve_j_and_scale_disc() {
        use rand::{Rng, SeedableRng};
        let (e, _) = ex_3_4();
        let k = f(3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let rnd_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
                let c: Vec<i64> = (0..3).map(|_| rng.gen_range(0..3)).collect();
                RatFunc::from_poly(Poly::from_ints(&k, &c))
            };
            let mut u = rnd_poly(&mut rng);
            if u.is_zero() {
                u = RatFunc::one(&k);
            }
            let tr = Transform::new(u.clone(), rnd_poly(&mut rng), rnd_poly(&mut rng), rnd_poly(&mut rng)).unwrap();
            let e2 = e.apply_transform(&tr).unwrap();
            assert_eq!(e2.j_invariant(), e.j_invariant());
            let u12 = u.pow(12).unwrap();
            assert_eq!(e2.discriminant().mul(&u12), e.discriminant());
        }
    }

    #[test]
    fn group_law_axioms_on_multiples() {
        use rand::{Rng, SeedableRng};
        let (e, p) = ex_3_4();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let multiples: Vec<Point<RatFunc>> =
            (0..=12u64).map(|n| e.scalar_mul(&p, n).unwrap()).collect();
        for _ in 0..8 {
            let a = &multiples[rng.gen_range(0..multiples.len())];
            let b = &multiples[rng.gen_range(0..multiples.len())];
            let c = &multiples[rng.gen_range(0..multiples.len())];
            let ab_c = e.add_unchecked(&e.add_unchecked(a, b), c);
            let a_bc = e.add_unchecked(a, &e.add_unchecked(b, c));
            assert_eq!(ab_c, a_bc);
            assert_eq!(e.add_unchecked(a, b), e.add_unchecked(b, a));
        }
    }

    #[test]
    fn integralize_clears_denominators() {
        let k = f(3);
        let t = rf_t(&k);
        // a4 = 1/t forces u = 1/t
        let e = Curve::short(t.inverse().unwrap(), RatFunc::one(&k)).unwrap();
        let (ei, _, tr) = e.integralize(&Point::Infinity).unwrap();
        assert!(ei.a4.is_polynomial() && ei.a6.is_polynomial());
        assert_eq!(ei.j_invariant(), e.j_invariant());
        assert!(!tr.is_identity());

        let (e2, _) = ex_3_4();
        let (same, _, tr2) = e2.integralize(&Point::Infinity).unwrap();
        assert_eq!(same, e2);
        assert!(tr2.is_identity());
    }

    #[test]
    fn curve_rendering() {
        let (e, _) = ex_3_4();
        assert_eq!(e.render(), "y^2 = x^3 + t*x + 2*t");
    }
}
