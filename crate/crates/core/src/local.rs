//! Per-place local data: Tate's algorithm, minimal models, Kodaira types,
//! Tamagawa numbers, and orders of points in the component group.
//!
//! The residue fields of F_p(t) are finite, hence perfect, so the classical
//! algorithm applies at every place including residue characteristics 2 and
//! 3. The place at infinity runs through the same code path with uniformizer
//! 1/t; there is no global coordinate flip.

use std::fmt;

use crate::curve::{Curve, Point, Transform};
use crate::divisor::{residue_reduce, valuation, Place};
use crate::error::Error;
use crate::field::{Field, FieldElement};
use crate::poly::{factor, Poly, UPoly};
use crate::ratfunc::RatFunc;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KodairaType {
    /// I0 is good reduction; In for n >= 1 is multiplicative.
    I(u64),
    II,
    III,
    IV,
    /// I0* and In*.
    IStar(u64),
    IVStar,
    IIIStar,
    IIStar,
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

/// Geometric component group of the special fibre.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComponentGroup {
    Cyclic(u64),
    TwoTwo,
}

impl fmt::Display for ComponentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentGroup::Cyclic(n) => write!(f, "Z/{n}"),
            ComponentGroup::TwoTwo => write!(f, "Z/2 x Z/2"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionClass {
    Good,
    Multiplicative { split: bool },
    Additive,
}

#[derive(Clone, Debug)]
pub struct LocalData {
    pub place: Place,
    pub minimal: Curve<RatFunc>,
    /// Transform from the input model to the minimal model.
    pub transform: Transform<RatFunc>,
    pub kodaira: KodairaType,
    pub v_disc: i64,
    pub tamagawa: u64,
    pub group: ComponentGroup,
    pub class: ReductionClass,
}

impl LocalData {
    pub fn render_line(&self) -> String {
        format!(
            "v={}: type {}, c={}, vΔ={}",
            self.place, self.kodaira, self.tamagawa, self.v_disc
        )
    }
}

/// Valuation, residue and lifting machinery at one place of F_p(t).
pub struct LocalContext {
    pub place: Place,
    pub base: Field,
    pub residue: Field,
}

impl LocalContext {
    pub fn new(place: &Place, base: &Field) -> Result<LocalContext, Error> {
        if base.degree() != 1 {
            return Err(Error::Unsupported("function fields use a prime constant field".into()));
        }
        Ok(LocalContext {
            place: place.clone(),
            base: base.clone(),
            residue: place.residue_field(base)?,
        })
    }

    /// Valuation of r; None encodes +infinity for r = 0.
    pub fn val(&self, r: &RatFunc) -> Option<i64> {
        if r.is_zero() {
            None
        } else {
            Some(valuation(r, &self.place).unwrap())
        }
    }

    pub fn val_ge(&self, r: &RatFunc, m: i64) -> bool {
        self.val(r).map_or(true, |v| v >= m)
    }

    pub fn uniformizer(&self) -> RatFunc {
        match &self.place {
            Place::Infinity => RatFunc::t(&self.base).inverse().unwrap(),
            Place::Finite(pi) => RatFunc::from_poly(pi.clone()),
        }
    }

    pub fn pi_pow(&self, k: i64) -> RatFunc {
        self.uniformizer().pow(k).unwrap()
    }

    /// Reduce an element of nonnegative valuation into the residue field.
    pub fn reduce(&self, r: &RatFunc) -> FieldElement {
        residue_reduce(r, &self.place).expect("element is integral at the place")
    }

    /// Reduce r / pi^m.
    pub fn reduce_shifted(&self, r: &RatFunc, m: i64) -> FieldElement {
        self.reduce(&r.mul(&self.pi_pow(-m)))
    }

    /// Lift a residue element back into F_p(t): polynomials of degree below
    /// deg(pi) at a finite place, constants at infinity.
    pub fn lift(&self, e: &FieldElement) -> RatFunc {
        match &self.place {
            Place::Infinity => RatFunc::constant(self.base.from_u64(e.coeffs()[0])),
            Place::Finite(_) => {
                let coeffs: Vec<FieldElement> =
                    e.coeffs().iter().map(|&c| self.base.from_u64(c)).collect();
                RatFunc::from_poly(UPoly::from_coeffs(&self.base.zero(), coeffs))
            }
        }
    }

    fn char(&self) -> u64 {
        self.base.characteristic()
    }
}

/// Outcome of reducing a point on a model that is integral at v.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Reduction {
    /// v(x) < 0: the point meets the zero section.
    ToO,
    Nonsingular(FieldElement, FieldElement),
    Singular,
}

fn is_integral_at(curve: &Curve<RatFunc>, ctx: &LocalContext) -> bool {
    [&curve.a1, &curve.a2, &curve.a3, &curve.a4, &curve.a6]
        .iter()
        .all(|a| ctx.val_ge(a, 0))
}

/// The unique singular point of the reduced curve, or None for good
/// reduction. Multiple roots of the reduction are rational over the perfect
/// residue field, so no field extension is ever needed.
fn singular_point(curve: &Curve<RatFunc>, ctx: &LocalContext) -> Option<(FieldElement, FieldElement)> {
    if ctx.val(&curve.discriminant()).map_or(false, |v| v == 0) {
        return None;
    }
    let k = &ctx.residue;
    let a1 = ctx.reduce(&curve.a1);
    let a2 = ctx.reduce(&curve.a2);
    let a3 = ctx.reduce(&curve.a3);
    let a4 = ctx.reduce(&curve.a4);
    let a6 = ctx.reduce(&curve.a6);
    let (x0, y0) = if ctx.char() == 2 {
        if !a1.is_zero() {
            let x0 = a3.checked_div(&a1).unwrap();
            let y0 = (&x0 * &x0 + a4.clone()).checked_div(&a1).unwrap();
            (x0, y0)
        } else {
            // a3 reduces to zero whenever the reduction is singular here
            let x0 = a4.pth_root();
            let rhs = x0.pow(3).unwrap() + &a2 * &(&x0 * &x0) + &a4 * &x0 + a6.clone();
            (x0.clone(), rhs.pth_root())
        }
    } else {
        // multiple root of 4x^3 + b2 x^2 + 2 b4 x + b6 over k
        let inv = curve.invariants();
        let b2 = ctx.reduce(&inv.b2);
        let b4 = ctx.reduce(&inv.b4);
        let b6 = ctx.reduce(&inv.b6);
        let w = UPoly::from_coeffs(
            &k.zero(),
            vec![b6, &k.from_u64(2) * &b4, b2, k.from_u64(4)],
        );
        let x0 = match cubic_multiple_root(&w.monic()) {
            CubicRoots::Double(r) | CubicRoots::Triple(r) => r,
            CubicRoots::Distinct => unreachable!("singular reduction has a multiple root"),
        };
        let half = k.from_u64(2).inverse().unwrap();
        let y0 = (&a1 * &x0 + a3.clone()).negate() * half;
        (x0, y0)
    };
    debug_assert!({
        let lhs = &y0 * &y0 + &a1 * &(&x0 * &y0) + &a3 * &y0;
        let rhs = x0.pow(3).unwrap() + &a2 * &(&x0 * &x0) + &a4 * &x0 + a6;
        lhs == rhs
    });
    Some((x0, y0))
}

/// Reduce a point of E(F_p(t)) modulo v on a model integral at v.
pub fn reduce_point(
    curve: &Curve<RatFunc>,
    point: &Point<RatFunc>,
    place: &Place,
) -> Result<Reduction, Error> {
    let field = curve.a1.field().clone();
    let ctx = LocalContext::new(place, &field)?;
    if !is_integral_at(curve, &ctx) {
        return Err(Error::NotIntegralAt(place.to_string()));
    }
    let (x, y) = match point {
        Point::Infinity => return Ok(Reduction::ToO),
        Point::Affine(x, y) => (x, y),
    };
    if !ctx.val_ge(x, 0) {
        return Ok(Reduction::ToO);
    }
    let xr = ctx.reduce(x);
    let yr = ctx.reduce(y);
    match singular_point(curve, &ctx) {
        Some((sx, sy)) if sx == xr && sy == yr => Ok(Reduction::Singular),
        _ => Ok(Reduction::Nonsingular(xr, yr)),
    }
}

enum CubicRoots {
    Distinct,
    Double(FieldElement),
    Triple(FieldElement),
}

/// Multiple-root structure of a monic cubic over a finite field.
fn cubic_multiple_root(p: &Poly) -> CubicRoots {
    debug_assert!(p.is_monic() && p.deg_or_zero() == 3);
    let k = p.field().clone();
    let dp = p.derivative();
    let rho = if dp.is_zero() {
        // char 3 with x^3 + const: a perfect cube
        p.coeff(0).pth_root().negate()
    } else {
        let g = p.gcd(&dp);
        match g.deg_or_zero() {
            0 => return CubicRoots::Distinct,
            1 => g.coeff(0).negate(),
            2 => {
                // g = (x - rho)^2
                if k.characteristic() == 2 {
                    g.coeff(0).pth_root()
                } else {
                    let half = k.from_u64(2).inverse().unwrap();
                    g.coeff(1).negate() * half
                }
            }
            _ => unreachable!("gcd of a cubic with its derivative has degree <= 2"),
        }
    };
    let x = Poly::x_over(&k);
    let lin = x.sub(&UPoly::constant(rho.clone()));
    if *p == lin.pow(3) {
        CubicRoots::Triple(rho)
    } else {
        CubicRoots::Double(rho)
    }
}

/// Double root of A X^2 + B X + C (A a unit), or None when the roots are
/// distinct.
fn quadratic_double_root(
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
) -> Option<FieldElement> {
    let k = a.field().clone();
    if k.characteristic() == 2 {
        if !b.is_zero() {
            return None;
        }
        Some(c.checked_div(a).unwrap().pth_root())
    } else {
        let disc = b * b - k.from_u64(4) * (a * c).clone();
        if !disc.is_zero() {
            return None;
        }
        let denom = (k.from_u64(2) * a.clone()).inverse().unwrap();
        Some(b.negate() * denom)
    }
}

fn count_roots_in_k(coeffs: Vec<FieldElement>) -> u64 {
    let zero = coeffs[0].field().zero();
    UPoly::from_coeffs(&zero, coeffs).count_roots() as u64
}

/// Tate's algorithm at one place. Returns the minimal model, the Kodaira
/// type, the Tamagawa number and the geometric component group.
pub fn tate_algorithm(curve: &Curve<RatFunc>, place: &Place) -> Result<LocalData, Error> {
    let field = curve.a1.field().clone();
    let ctx = LocalContext::new(place, &field)?;
    if curve.discriminant().is_zero() {
        return Err(Error::SingularCurve);
    }

    let mut e = curve.clone();
    let mut tr = Transform::identity(&curve.a1);
    let mut step = |e: &Curve<RatFunc>, tr: &Transform<RatFunc>, next: Transform<RatFunc>| {
        let e2 = e.apply_transform(&next).unwrap();
        (e2, tr.then(&next))
    };

    // initial integral scaling: u = pi^m with m = floor(min v(a_i)/i)
    let mut m = i64::MAX;
    for (a, w) in [(&e.a1, 1i64), (&e.a2, 2), (&e.a3, 3), (&e.a4, 4), (&e.a6, 6)] {
        if let Some(v) = ctx.val(a) {
            m = m.min(v.div_euclid(w));
        }
    }
    if m != i64::MAX && m < 0 {
        let sc = Transform::scaling(ctx.pi_pow(m))?;
        let (e2, tr2) = step(&e, &tr, sc);
        e = e2;
        tr = tr2;
    }
    debug_assert!(is_integral_at(&e, &ctx));

    let p = ctx.char();
    let k = ctx.residue.clone();

    loop {
        let n = ctx.val(&e.discriminant()).expect("nonsingular curve");
        debug_assert!(n >= 0);
        if n == 0 {
            return Ok(LocalData {
                place: place.clone(),
                minimal: e,
                transform: tr,
                kodaira: KodairaType::I(0),
                v_disc: 0,
                tamagawa: 1,
                group: ComponentGroup::Cyclic(1),
                class: ReductionClass::Good,
            });
        }

        // move the singular point of the reduction to (0, 0)
        let (sx, sy) = singular_point(&e, &ctx).expect("positive discriminant valuation");
        let tmove = Transform::translation(ctx.lift(&sx), ctx.lift(&sy));
        let (e2, tr2) = step(&e, &tr, tmove);
        e = e2;
        tr = tr2;
        debug_assert!(ctx.val_ge(&e.a3, 1) && ctx.val_ge(&e.a4, 1) && ctx.val_ge(&e.a6, 1));

        let inv = e.invariants();
        if ctx.val(&inv.b2).map_or(false, |v| v == 0) {
            // multiplicative: type In with n = v(disc)
            let a1r = ctx.reduce(&e.a1);
            let a2r = ctx.reduce(&e.a2);
            let split = count_roots_in_k(vec![a2r.negate(), a1r, k.one()]) > 0;
            let c = if split {
                n as u64
            } else if n % 2 == 0 {
                2
            } else {
                1
            };
            return Ok(LocalData {
                place: place.clone(),
                minimal: e,
                transform: tr,
                kodaira: KodairaType::I(n as u64),
                v_disc: n,
                tamagawa: c,
                group: ComponentGroup::Cyclic(n as u64),
                class: ReductionClass::Multiplicative { split },
            });
        }

        // additive reduction from here on
        let done = |e: Curve<RatFunc>,
                    tr: Transform<RatFunc>,
                    kodaira: KodairaType,
                    tamagawa: u64,
                    group: ComponentGroup| {
            Ok(LocalData {
                place: place.clone(),
                minimal: e,
                transform: tr,
                kodaira,
                v_disc: n,
                tamagawa,
                group,
                class: ReductionClass::Additive,
            })
        };

        if !ctx.val_ge(&e.a6, 2) {
            return done(e, tr, KodairaType::II, 1, ComponentGroup::Cyclic(1));
        }
        if !ctx.val_ge(&inv.b8, 3) {
            return done(e, tr, KodairaType::III, 2, ComponentGroup::Cyclic(2));
        }
        if !ctx.val_ge(&inv.b6, 3) {
            let a31 = ctx.reduce_shifted(&e.a3, 1);
            let a62 = ctx.reduce_shifted(&e.a6, 2);
            let c = if count_roots_in_k(vec![a62.negate(), a31, k.one()]) > 0 { 3 } else { 1 };
            return done(e, tr, KodairaType::IV, c, ComponentGroup::Cyclic(3));
        }

        // arrange v(a1) >= 1, v(a2) >= 1, v(a3) >= 2, v(a6) >= 3
        let s = if p == 2 {
            ctx.lift(&ctx.reduce(&e.a2).pth_root())
        } else {
            let half = k.from_u64(2).inverse().unwrap();
            ctx.lift(&(ctx.reduce(&e.a1) * half).negate())
        };
        let (e2, tr2) = step(&e, &tr, Transform::shear(s));
        e = e2;
        tr = tr2;
        let tshift = if p == 2 {
            ctx.reduce_shifted(&e.a6, 2).pth_root()
        } else {
            let half = k.from_u64(2).inverse().unwrap();
            (ctx.reduce_shifted(&e.a3, 1) * half).negate()
        };
        let tmove = Transform::translation(
            RatFunc::zero_over(&field),
            ctx.lift(&tshift).mul(&ctx.pi_pow(1)),
        );
        let (e2, tr2) = step(&e, &tr, tmove);
        e = e2;
        tr = tr2;
        debug_assert!(
            ctx.val_ge(&e.a1, 1)
                && ctx.val_ge(&e.a2, 1)
                && ctx.val_ge(&e.a3, 2)
                && ctx.val_ge(&e.a4, 2)
                && ctx.val_ge(&e.a6, 3)
        );

        // P(T) = T^3 + a_{2,1} T^2 + a_{4,2} T + a_{6,3} over the residue field
        let a21 = ctx.reduce_shifted(&e.a2, 1);
        let a42 = ctx.reduce_shifted(&e.a4, 2);
        let a63 = ctx.reduce_shifted(&e.a6, 3);
        let cubic = UPoly::from_coeffs(&k.zero(), vec![a63.clone(), a42.clone(), a21.clone(), k.one()]);
        match cubic_multiple_root(&cubic) {
            CubicRoots::Distinct => {
                let c = 1 + cubic.count_roots() as u64;
                return done(e, tr, KodairaType::IStar(0), c, ComponentGroup::TwoTwo);
            }
            CubicRoots::Double(rho) => {
                // In* for some n >= 1
                let tmove =
                    Transform::translation(ctx.lift(&rho).mul(&ctx.pi_pow(1)), RatFunc::zero_over(&field));
                let (e2, tr2) = step(&e, &tr, tmove);
                e = e2;
                tr = tr2;
                let mut r: i64 = 1;
                loop {
                    // odd index n = 2r - 1: Y^2 + a_{3,r+1} Y - a_{6,2r+2}
                    let a3r = ctx.reduce_shifted(&e.a3, r + 1);
                    let a6r = ctx.reduce_shifted(&e.a6, 2 * r + 2);
                    match quadratic_double_root(&k.one(), &a3r, &a6r.negate()) {
                        None => {
                            let nn = (2 * r - 1) as u64;
                            let c =
                                2 + count_roots_in_k(vec![a6r.negate(), a3r, k.one()]);
                            return done(
                                e,
                                tr,
                                KodairaType::IStar(nn),
                                c,
                                ComponentGroup::Cyclic(4),
                            );
                        }
                        Some(sigma) => {
                            let tmove = Transform::translation(
                                RatFunc::zero_over(&field),
                                ctx.lift(&sigma).mul(&ctx.pi_pow(r + 1)),
                            );
                            let (e2, tr2) = step(&e, &tr, tmove);
                            e = e2;
                            tr = tr2;
                        }
                    }
                    // even index n = 2r: a_{2,1} X^2 + a_{4,r+2} X + a_{6,2r+3}
                    let a21 = ctx.reduce_shifted(&e.a2, 1);
                    let a4r = ctx.reduce_shifted(&e.a4, r + 2);
                    let a6r = ctx.reduce_shifted(&e.a6, 2 * r + 3);
                    match quadratic_double_root(&a21, &a4r, &a6r) {
                        None => {
                            let nn = (2 * r) as u64;
                            let c = 2 + count_roots_in_k(vec![a6r, a4r, a21]);
                            return done(
                                e,
                                tr,
                                KodairaType::IStar(nn),
                                c,
                                ComponentGroup::TwoTwo,
                            );
                        }
                        Some(sigma) => {
                            let rmove = Transform::translation(
                                ctx.lift(&sigma).mul(&ctx.pi_pow(r + 1)),
                                RatFunc::zero_over(&field),
                            );
                            let (e2, tr2) = step(&e, &tr, rmove);
                            e = e2;
                            tr = tr2;
                        }
                    }
                    r += 1;
                }
            }
            CubicRoots::Triple(rho) => {
                let tmove =
                    Transform::translation(ctx.lift(&rho).mul(&ctx.pi_pow(1)), RatFunc::zero_over(&field));
                let (e2, tr2) = step(&e, &tr, tmove);
                e = e2;
                tr = tr2;
                // Y^2 + a_{3,2} Y - a_{6,4}
                let a32 = ctx.reduce_shifted(&e.a3, 2);
                let a64 = ctx.reduce_shifted(&e.a6, 4);
                match quadratic_double_root(&k.one(), &a32, &a64.negate()) {
                    None => {
                        let c = if count_roots_in_k(vec![a64.negate(), a32, k.one()]) > 0 {
                            3
                        } else {
                            1
                        };
                        return done(e, tr, KodairaType::IVStar, c, ComponentGroup::Cyclic(3));
                    }
                    Some(sigma) => {
                        let tmove = Transform::translation(
                            RatFunc::zero_over(&field),
                            ctx.lift(&sigma).mul(&ctx.pi_pow(2)),
                        );
                        let (e2, tr2) = step(&e, &tr, tmove);
                        e = e2;
                        tr = tr2;
                    }
                }
                if !ctx.val_ge(&e.a4, 4) {
                    return done(e, tr, KodairaType::IIIStar, 2, ComponentGroup::Cyclic(2));
                }
                if !ctx.val_ge(&e.a6, 6) {
                    return done(e, tr, KodairaType::IIStar, 1, ComponentGroup::Cyclic(1));
                }
                // not minimal: rescale and restart
                let sc = Transform::scaling(ctx.pi_pow(1))?;
                let (e2, tr2) = step(&e, &tr, sc);
                e = e2;
                tr = tr2;
            }
        }
    }
}

/// The v-minimal model with the transform reaching it; idempotent.
pub fn minimal_model_at(
    curve: &Curve<RatFunc>,
    place: &Place,
) -> Result<(Curve<RatFunc>, Transform<RatFunc>), Error> {
    let data = tate_algorithm(curve, place)?;
    Ok((data.minimal, data.transform))
}

/// Finite places of bad reduction of a model with polynomial coefficients.
pub fn bad_places(curve: &Curve<RatFunc>) -> Result<Vec<Place>, Error> {
    let disc = curve.discriminant();
    for a in [&curve.a1, &curve.a2, &curve.a3, &curve.a4, &curve.a6] {
        if !a.is_zero() && !a.is_polynomial() {
            return Err(Error::NotIntegralAt("a finite place".into()));
        }
    }
    let mut out = vec![];
    for (pi, _) in factor(disc.numerator(), 0)?.1 {
        out.push(Place::Finite(pi));
    }
    Ok(out)
}

/// Order of a point in the rational component group at v, with the witness
/// chain of reductions consulted along the way.
#[derive(Clone, Debug)]
pub struct ComponentOrderRecord {
    pub place: Place,
    pub d: u64,
    pub witnesses: Vec<(u64, Reduction)>,
}

pub fn component_order(
    curve: &Curve<RatFunc>,
    point: &Point<RatFunc>,
    local: &LocalData,
) -> Result<ComponentOrderRecord, Error> {
    if !curve.contains(point) {
        return Err(Error::PointNotOnCurve);
    }
    let pmin = local.transform.map_point(point);
    debug_assert!(local.minimal.contains(&pmin));
    let c = local.tamagawa;
    let mut divisors: Vec<u64> = (1..=c).filter(|d| c % d == 0).collect();
    divisors.sort();
    let mut witnesses = vec![];
    for d in divisors {
        let mult = local.minimal.scalar_mul(&pmin, d)?;
        let red = reduce_point(&local.minimal, &mult, &local.place)?;
        let ok = !matches!(red, Reduction::Singular);
        witnesses.push((d, red));
        if ok {
            return Ok(ComponentOrderRecord { place: local.place.clone(), d, witnesses });
        }
    }
    Err(Error::Inconsistency(format!(
        "no divisor of c={} puts the point on the identity component at {}",
        c, local.place
    )))
}

/// Whether the rational component group contains an element of the given
/// prime order, judged from the Kodaira type and the Tamagawa number.
pub fn rational_component_group_has_order(data: &LocalData, order: u64) -> bool {
    match (data.kodaira, order) {
        (KodairaType::I(n), _) if n >= 1 => match data.class {
            ReductionClass::Multiplicative { split: true } => n % order == 0,
            // nonsplit rational group is cyclic of order c <= 2
            _ => order != 0 && data.tamagawa % order == 0 && order <= 2,
        },
        (KodairaType::IStar(n), 4) => n % 2 == 1 && data.tamagawa == 4,
        (KodairaType::IV, 3) | (KodairaType::IVStar, 3) => data.tamagawa == 3,
        (_, 2) => data.tamagawa % 2 == 0,
        _ => false,
    }
}

/// Evidence line used by the component-group exclusion scan.
#[derive(Clone, Debug)]
pub struct ExclusionEvidence {
    pub place: Place,
    pub kodaira: KodairaType,
    pub tamagawa: u64,
}

/// For a curve over F_p(t) with constant j != 0: in characteristic 2 the
/// rational component group never contains an element of order 4, and in
/// characteristic 3 never one of order 3. Any violation is surfaced as a
/// hard inconsistency, never swallowed.
pub fn component_group_exclusions(
    curve: &Curve<RatFunc>,
) -> Result<Vec<ExclusionEvidence>, Error> {
    let field = curve.a1.field().clone();
    let p = field.characteristic();
    let j = curve.j_invariant();
    let jc = j.as_constant().ok_or_else(|| {
        Error::Unsupported("component-group exclusions need a constant j-invariant".into())
    })?;
    if jc.is_zero() {
        return Err(Error::Unsupported("exclusions require j != 0".into()));
    }
    let (integral, _, _) = curve.integralize(&Point::Infinity)?;
    let mut places = bad_places(&integral)?;
    places.push(Place::Infinity);
    let mut evidence = vec![];
    for v in places {
        let data = tate_algorithm(&integral, &v)?;
        if data.kodaira == KodairaType::I(0) {
            continue;
        }
        let banned = match p {
            2 => 4,
            3 => 3,
            _ => 0,
        };
        if banned != 0 && rational_component_group_has_order(&data, banned) {
            return Err(Error::Inconsistency(format!(
                "component group at {} (type {}, c={}) has an element of order {}",
                v, data.kodaira, data.tamagawa, banned
            )));
        }
        evidence.push(ExclusionEvidence {
            place: data.place.clone(),
            kodaira: data.kodaira,
            tamagawa: data.tamagawa,
        });
    }
    Ok(evidence)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn place(field: &Field, coeffs: &[i64]) -> Place {
        Place::finite(Poly::from_ints(field, coeffs)).unwrap()
    }

    fn ex_3_4() -> (Curve<RatFunc>, Point<RatFunc>) {
        let k = fp(3);
        let t = RatFunc::t(&k);
        let e = Curve::short(t.clone(), t.negate()).unwrap();
        let p = Point::Affine(RatFunc::one(&k), RatFunc::one(&k));
        (e, p)
    }

    fn ex_7_3() -> Curve<RatFunc> {
        let k = fp(3);
        let t = RatFunc::t(&k);
        Curve::short(t.pow(3).unwrap(), t.pow(4).unwrap()).unwrap()
    }

    fn ex_7_4() -> Curve<RatFunc> {
        let k = fp(2);
        let t = RatFunc::t(&k);
        let z = RatFunc::zero_over(&k);
        Curve::new(z.clone(), z.clone(), t.clone(), t.pow(2).unwrap(), z).unwrap()
    }

    fn ex_7_5(kk: i64) -> Curve<RatFunc> {
        let k = fp(2);
        let t = RatFunc::t(&k);
        let z = RatFunc::zero_over(&k);
        Curve::new(
            z.clone(),
            t.pow(2).unwrap().mul(&t.add(&RatFunc::one(&k))),
            t.pow(2 * kk).unwrap(),
            t.clone(),
            z,
        )
        .unwrap()
    }

    #[test]
    fn supersingular_f3_example_types() {
        let (e, _) = ex_3_4();
        let k = fp(3);
        let d0 = tate_algorithm(&e, &place(&k, &[0, 1])).unwrap();
        assert_eq!(d0.kodaira, KodairaType::II);
        assert_eq!(d0.tamagawa, 1);
        assert_eq!(d0.v_disc, 3);
        assert!(d0.transform.is_identity());
        let di = tate_algorithm(&e, &Place::Infinity).unwrap();
        assert_eq!(di.kodaira, KodairaType::IIIStar);
        assert_eq!(di.tamagawa, 2);
        assert_eq!(di.v_disc, 9);
        // good place elsewhere
        let dg = tate_algorithm(&e, &place(&k, &[1, 1])).unwrap();
        assert_eq!(dg.kodaira, KodairaType::I(0));
        assert_eq!(dg.class, ReductionClass::Good);
    }

    #[test]
    fn char3_iv_star_and_iii() {
        let e = ex_7_3();
        let k = fp(3);
        let d0 = tate_algorithm(&e, &place(&k, &[0, 1])).unwrap();
        assert_eq!(d0.kodaira, KodairaType::IVStar);
        assert_eq!(d0.tamagawa, 3);
        assert_eq!(d0.v_disc, 9);
        assert_eq!(d0.group, ComponentGroup::Cyclic(3));
        let di = tate_algorithm(&e, &Place::Infinity).unwrap();
        assert_eq!(di.kodaira, KodairaType::III);
        assert_eq!(di.tamagawa, 2);
        assert_eq!(di.v_disc, 3);
    }

    #[test]
    fn char2_iv_and_i1_star() {
        let e = ex_7_4();
        let k = fp(2);
        let d0 = tate_algorithm(&e, &place(&k, &[0, 1])).unwrap();
        assert_eq!(d0.kodaira, KodairaType::IV);
        assert_eq!(d0.tamagawa, 3);
        assert_eq!(d0.v_disc, 4);
        let di = tate_algorithm(&e, &Place::Infinity).unwrap();
        assert_eq!(di.kodaira, KodairaType::IStar(1));
        assert_eq!(di.tamagawa, 4);
        assert_eq!(di.v_disc, 8);
        assert_eq!(di.group, ComponentGroup::Cyclic(4));
    }

    #[test]
    fn char2_iii_and_odd_star_fibres() {
        let k = fp(2);
        let e1 = ex_7_5(1);
        let d0 = tate_algorithm(&e1, &place(&k, &[0, 1])).unwrap();
        assert_eq!(d0.kodaira, KodairaType::III);
        let di = tate_algorithm(&e1, &Place::Infinity).unwrap();
        assert_eq!(di.kodaira, KodairaType::IStar(5));
        let e2 = ex_7_5(2);
        let d0 = tate_algorithm(&e2, &place(&k, &[0, 1])).unwrap();
        assert_eq!(d0.kodaira, KodairaType::III);
        let di = tate_algorithm(&e2, &Place::Infinity).unwrap();
        assert_eq!(di.kodaira, KodairaType::IStar(1));
    }

    #[test]
    fn char3_quadratic_twist_i0_star_with_tamagawa_numbers() {
        // y^2 = x^3 + j^2 d x^2 + 2 j^5 d^3 with d = t^3 + j^2 t^2 + 2 j^5
        let k = fp(3);
        let t = RatFunc::t(&k);
        let build = |j: i64| -> Curve<RatFunc> {
            let jc = RatFunc::constant(k.from_i64(j));
            let d = t
                .pow(3)
                .unwrap()
                .add(&jc.pow(2).unwrap().mul(&t.pow(2).unwrap()))
                .add(&jc.pow(5).unwrap().mul(&RatFunc::constant(k.from_u64(2))));
            let z = RatFunc::zero_over(&k);
            Curve::new(
                z.clone(),
                jc.pow(2).unwrap().mul(&d),
                z.clone(),
                z,
                jc.pow(5).unwrap().mul(&d.pow(3).unwrap()).mul(&RatFunc::constant(k.from_u64(2))),
            )
            .unwrap()
        };
        let e1 = build(1);
        let v = place(&k, &[2, 0, 1, 1]); // t^3 + t^2 + 2
        let d = tate_algorithm(&e1, &v).unwrap();
        assert_eq!(d.kodaira, KodairaType::IStar(0));
        assert_eq!(d.tamagawa, 4);
        assert_eq!(d.v_disc, 6);
        let di = tate_algorithm(&e1, &Place::Infinity).unwrap();
        assert_eq!(di.kodaira, KodairaType::IStar(0));
        assert_eq!(di.tamagawa, 1);
        assert_eq!(di.v_disc, 6);

        let e2 = build(2);
        let d = tate_algorithm(&e2, &place(&k, &[2, 2, 1])).unwrap();
        assert_eq!((d.kodaira, d.tamagawa), (KodairaType::IStar(0), 4));
        let d = tate_algorithm(&e2, &place(&k, &[2, 1])).unwrap();
        assert_eq!((d.kodaira, d.tamagawa), (KodairaType::IStar(0), 2));
        let d = tate_algorithm(&e2, &Place::Infinity).unwrap();
        assert_eq!((d.kodaira, d.tamagawa), (KodairaType::IStar(0), 2));
    }

    #[test]
    fn minimal_model_idempotent_and_stable_under_unimodular_transforms() {
        use rand::{Rng, SeedableRng};
        let (e, _) = ex_3_4();
        let k = fp(3);
        let v = place(&k, &[0, 1]);
        let (emin, _) = minimal_model_at(&e, &v).unwrap();
        let (emin2, tr2) = minimal_model_at(&emin, &v).unwrap();
        assert_eq!(emin2, emin);
        assert!(tr2.is_identity());

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let base = tate_algorithm(&e, &v).unwrap();
        for _ in 0..6 {
            let rnd = |rng: &mut rand_chacha::ChaCha8Rng| {
                let c: Vec<i64> = (0..2).map(|_| rng.gen_range(0..3)).collect();
                RatFunc::from_poly(Poly::from_ints(&k, &c))
            };
            // v(u) = 0: force a nonzero constant term
            let mut u = rnd(&mut rng);
            let cterm = RatFunc::one(&k);
            if crate::divisor::valuation(&u.add(&cterm), &v).unwrap_or(1) != 0 {
                u = u.add(&cterm);
            }
            if u.is_zero() || crate::divisor::valuation(&u, &v).unwrap() != 0 {
                u = cterm.clone();
            }
            let tr = Transform::new(u, rnd(&mut rng), rnd(&mut rng), rnd(&mut rng)).unwrap();
            let e2 = e.apply_transform(&tr).unwrap();
            let d2 = tate_algorithm(&e2, &v).unwrap();
            assert_eq!(d2.kodaira, base.kodaira);
            assert_eq!(d2.tamagawa, base.tamagawa);
            assert_eq!(d2.v_disc, base.v_disc);
        }
    }

    #[test]
    fn point_reduction_and_component_order() {
        let (e, p) = ex_3_4();
        let k = fp(3);
        let v = place(&k, &[0, 1]);
        // P = (1,1) reduces to a nonsingular point at t = 0
        assert!(matches!(
            reduce_point(&e, &p, &v).unwrap(),
            Reduction::Nonsingular(_, _)
        ));
        assert_eq!(reduce_point(&e, &Point::Infinity, &v).unwrap(), Reduction::ToO);
        let d0 = tate_algorithm(&e, &v).unwrap();
        assert_eq!(component_order(&e, &p, &d0).unwrap().d, 1);
        // at infinity P reduces to the singular point, d = 2
        let di = tate_algorithm(&e, &Place::Infinity).unwrap();
        let pmin = di.transform.map_point(&p);
        assert_eq!(
            reduce_point(&di.minimal, &pmin, &Place::Infinity).unwrap(),
            Reduction::Singular
        );
        let rec = component_order(&e, &p, &di).unwrap();
        assert_eq!(rec.d, 2);
        assert!(rec.d % 1 == 0 && di.tamagawa % rec.d == 0);
    }

    #[test]
    fn non_integral_input_rejected_by_reduce_point() {
        let k = fp(3);
        let t = RatFunc::t(&k);
        let e = Curve::short(t.inverse().unwrap(), RatFunc::one(&k)).unwrap();
        let v = place(&k, &[0, 1]);
        assert!(matches!(
            reduce_point(&e, &Point::Infinity, &v),
            Err(Error::NotIntegralAt(_))
        ));
    }

    #[test]
    fn minimality_certificate_away_from_small_characteristic() {
        // for residue characteristic > 3: v(disc_min) < 12 or v(c4) < 4
        let k = fp(5);
        let t = RatFunc::t(&k);
        // a deliberately non-minimal model: scale y^2 = x^3 + t x + 1 by u = 1/t^2
        let e = Curve::short(t.clone(), RatFunc::one(&k)).unwrap();
        let tr = Transform::scaling(t.pow(-2).unwrap()).unwrap();
        let e2 = e.apply_transform(&tr).unwrap();
        let v = place(&k, &[0, 1]);
        let d = tate_algorithm(&e2, &v).unwrap();
        let vdisc = d.v_disc;
        let c4 = d.minimal.invariants().c4;
        let vc4 = if c4.is_zero() { i64::MAX } else { valuation(&c4, &v).unwrap() };
        assert!(vdisc < 12 || vc4 < 4);
        assert_eq!(d.kodaira, KodairaType::I(0));
    }
}
