//! Tate normal form for a curve with a marked point of order at least 4,
//! constancy detection for curve/point pairs over F_p(t), and the
//! supersingularity test for j-invariants.

use crate::curve::{Curve, Point, Transform};
use crate::error::Error;
use crate::field::{FieldElement, FieldLike};
use crate::poly::UPoly;
use crate::ratfunc::RatFunc;

/// Bring (E, P) to y^2 + (1-c)xy - by = x^3 - bx^2 with P = (0,0).
///
/// The three steps are: translate P to the origin, kill a4 with a shear
/// (needs 2P != O), then scale to equate a2 and a3 (needs 3P != O). Any
/// degenerate division along the way proves the order-4 precondition fails
/// and is reported as such rather than patched over.
pub fn tate_normal_form<K: FieldLike>(
    curve: &Curve<K>,
    point: &Point<K>,
) -> Result<(K, K, Transform<K>), Error> {
    let (x0, y0) = match point {
        Point::Infinity => return Err(Error::SmallOrderPoint(1)),
        Point::Affine(x, y) => (x.clone(), y.clone()),
    };
    if !curve.contains(point) {
        return Err(Error::PointNotOnCurve);
    }
    let t1 = Transform::translation(x0, y0);
    let e1 = curve.apply_transform(&t1)?;
    debug_assert!(e1.a6.is_zero());
    if e1.a3.is_zero() {
        return Err(Error::SmallOrderPoint(2));
    }
    let s = e1.a4.div_ref(&e1.a3)?;
    let t2 = Transform::shear(s);
    let e2 = e1.apply_transform(&t2)?;
    debug_assert!(e2.a4.is_zero());
    if e2.a2.is_zero() {
        return Err(Error::SmallOrderPoint(3));
    }
    let u = e2.a3.div_ref(&e2.a2)?;
    let t3 = Transform::scaling(u)?;
    let e3 = e2.apply_transform(&t3)?;
    debug_assert!(e3.a2 == e3.a3 && e3.a4.is_zero() && e3.a6.is_zero());
    let b = e3.a2.neg_ref();
    let c = e3.a1.neg_ref().add_ref(&e3.a1.one_like());
    let tr = t1.then(&t2).then(&t3);
    debug_assert_eq!(tr.map_point(point), {
        let z = b.zero_like();
        Point::Affine(z.clone(), z)
    });
    Ok((b, c, tr))
}

/// Whether (E, P) is isomorphic over F_p(t) to a pair defined over F_p:
/// true exactly when both Tate normal form parameters are constants.
pub fn is_constant_pair(
    curve: &Curve<RatFunc>,
    point: &Point<RatFunc>,
) -> Result<bool, Error> {
    let (b, c, _) = tate_normal_form(curve, point)?;
    Ok(b.is_constant() && c.is_constant())
}

/// Supersingularity of the j-invariant in characteristic p.
///
/// In characteristic 2 and 3 the unique supersingular j-invariant is 0.
/// For p > 3 we pick any short-form curve with the given invariant and test
/// the Hasse invariant: supersingular iff the coefficient of x^(p-1) in
/// (x^3 + ax + b)^((p-1)/2) vanishes.
pub fn is_supersingular_j(j: &FieldElement, p: u64) -> Result<bool, Error> {
    let field = j.field().clone();
    if field.characteristic() != p {
        return Err(Error::FieldMismatch);
    }
    if p == 2 || p == 3 {
        return Ok(j.is_zero());
    }
    let (a, b) = if j.is_zero() {
        (field.zero(), field.one())
    } else if *j == field.from_u64(1728) {
        (field.one(), field.zero())
    } else {
        let ell = field.from_u64(1728).checked_sub(j)?;
        let a = field.from_u64(3).checked_mul(j)?.checked_mul(&ell)?;
        let b = field.from_u64(2).checked_mul(j)?.checked_mul(&ell)?.checked_mul(&ell)?;
        (a, b)
    };
    let x = UPoly::x(&field.zero());
    let cubic = x
        .pow(3)
        .add(&UPoly::constant(a).mul(&x))
        .add(&UPoly::constant(b));
    let power = cubic.pow((p - 1) / 2);
    Ok(power.coeff((p - 1) as usize).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn ex_3_4() -> (Curve<RatFunc>, Point<RatFunc>) {
        let k = Field::prime(3).unwrap();
        let t = RatFunc::t(&k);
        let e = Curve::short(t.clone(), t.negate()).unwrap();
        let p = Point::Affine(RatFunc::one(&k), RatFunc::one(&k));
        (e, p)
    }

    #[test]
    fn normal_form_shape_and_idempotence() {
        let (e, p) = ex_3_4();
        let (b, c, tr) = tate_normal_form(&e, &p).unwrap();
        let en = e.apply_transform(&tr).unwrap();
        // y^2 + (1-c)xy - by = x^3 - bx^2
        let k = Field::prime(3).unwrap();
        let one = RatFunc::one(&k);
        assert_eq!(en.a1, one.sub(&c));
        assert_eq!(en.a3, b.negate());
        assert_eq!(en.a2, b.negate());
        assert!(en.a4.is_zero() && en.a6.is_zero());
        // the pair is non-constant, so b, c are not both constants
        assert!(!(b.is_constant() && c.is_constant()));
        // renormalizing the normal form is the identity
        let origin = Point::Affine(RatFunc::zero_over(&k), RatFunc::zero_over(&k));
        let (b2, c2, tr2) = tate_normal_form(&en, &origin).unwrap();
        assert_eq!(b2, b);
        assert_eq!(c2, c);
        assert!(tr2.is_identity());
    }

    #[test]
    fn constant_pairs_stay_constant() {
        // a constant curve with a constant point of order >= 4:
        // y^2 + xy = x^3 + x^2 + x with P = (0, 0)? P must not be 2- or
        // 3-torsion; use y^2 = x^3 + x + 3 over F_7 with P = (1, 2)... easier:
        // take the normal form with b = c = 2 over F_5 directly.
        let k = Field::prime(5).unwrap();
        let b = RatFunc::constant(k.from_u64(2));
        let one = RatFunc::one(&k);
        let e = Curve::new(
            one.sub(&b),
            b.negate(),
            b.negate(),
            RatFunc::zero_over(&k),
            RatFunc::zero_over(&k),
        )
        .unwrap();
        let p = Point::Affine(RatFunc::zero_over(&k), RatFunc::zero_over(&k));
        assert!(is_constant_pair(&e, &p).unwrap());
        let (b2, c2, _) = tate_normal_form(&e, &p).unwrap();
        assert!(b2.is_constant() && c2.is_constant());
    }

    #[test]
    fn small_order_points_rejected() {
        let k = Field::prime(5).unwrap();
        // y^2 = x^3 + x has 2-torsion (0, 0)
        let e = Curve::short(RatFunc::one(&k), RatFunc::zero_over(&k)).unwrap();
        let p = Point::Affine(RatFunc::zero_over(&k), RatFunc::zero_over(&k));
        assert!(matches!(tate_normal_form(&e, &p), Err(Error::SmallOrderPoint(2))));
        assert!(matches!(
            tate_normal_form(&e, &Point::Infinity),
            Err(Error::SmallOrderPoint(1))
        ));
    }

    #[test]
    fn non_constant_pair_from_quadratic_twist_family() {
        // y^2 = x^3 + r^2 x + r^3 with r = t^3 + t + 1 over F_5, P = (rt, r^2)
        let k = Field::prime(5).unwrap();
        let t = RatFunc::t(&k);
        let r = t.pow(3).unwrap().add(&t).add(&RatFunc::one(&k));
        let e = Curve::short(r.pow(2).unwrap(), r.pow(3).unwrap()).unwrap();
        let p = Point::Affine(r.mul(&t), r.pow(2).unwrap());
        assert_eq!(is_constant_pair(&e, &p).unwrap(), false);
    }

    #[test]
    fn supersingular_j_invariants() {
        let f5 = Field::prime(5).unwrap();
        assert!(is_supersingular_j(&f5.zero(), 5).unwrap());
        assert!(!is_supersingular_j(&f5.one(), 5).unwrap());
        let f7 = Field::prime(7).unwrap();
        assert!(!is_supersingular_j(&f7.zero(), 7).unwrap());
        let f3 = Field::prime(3).unwrap();
        assert!(is_supersingular_j(&f3.zero(), 3).unwrap());
        assert!(!is_supersingular_j(&f3.one(), 3).unwrap());
        assert!(is_supersingular_j(&f3.zero(), 5).is_err());
    }

    #[test]
    fn j_zero_follows_the_mod_three_pattern() {
        for p in [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97] {
            let f = Field::prime(p).unwrap();
            let expected = p % 3 != 1;
            assert_eq!(is_supersingular_j(&f.zero(), p).unwrap(), expected, "p = {p}");
        }
    }
}
