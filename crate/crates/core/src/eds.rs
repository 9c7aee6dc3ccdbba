//! The divisor sequence D_nP: for each place v, the term D_n has
//! multiplicity max(-v(x(nP))/2, 0) computed on a v-minimal model.
//!
//! Support discovery factors the denominator of x(nP) on an integral model
//! (good places read off directly there) and re-evaluates the finitely many
//! bad places and infinity on their minimal models. Whenever v(x) < 0 the
//! engine insists that v(x) is even and v(y) = 3 v(x) / 2; a violation is a
//! hard inconsistency, not a warning.

use std::collections::BTreeMap;

use crate::curve::{Curve, Point, Transform};
use crate::divisor::{valuation, Divisor, Place};
use crate::error::Error;
use crate::local::{bad_places, tate_algorithm, LocalData};
use crate::poly::factor;
use crate::ratfunc::RatFunc;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TorsionStatus {
    Torsion(u64),
    NoTorsionUpTo(u64),
}

/// Scan nP for n <= bound looking for the identity.
pub fn torsion_check(
    curve: &Curve<RatFunc>,
    point: &Point<RatFunc>,
    bound: u64,
) -> Result<TorsionStatus, Error> {
    if !curve.contains(point) {
        return Err(Error::PointNotOnCurve);
    }
    let mut acc = point.clone();
    for n in 1..=bound {
        if acc.is_infinity() {
            return Ok(TorsionStatus::Torsion(n));
        }
        acc = curve.add_unchecked(&acc, point);
    }
    Ok(TorsionStatus::NoTorsionUpTo(bound))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Apparition {
    Found(u64),
    NotFoundWithin(u64),
}

/// The computed sequence D_1..D_N with its per-place minimal-model cache.
pub struct EdsSequence {
    pub curve: Curve<RatFunc>,
    pub point: Point<RatFunc>,
    pub integral: Curve<RatFunc>,
    pub to_integral: Transform<RatFunc>,
    pub n_max: u64,
    terms: Vec<Divisor>,
    pub locals: BTreeMap<Place, LocalData>,
    multiples: Vec<Point<RatFunc>>,
}

impl EdsSequence {
    /// Compute D_1..D_n_max. Torsion encountered on the way out is reported
    /// with its exact order.
    pub fn compute(
        curve: &Curve<RatFunc>,
        point: &Point<RatFunc>,
        n_max: u64,
        seed: u64,
    ) -> Result<EdsSequence, Error> {
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        if !curve.contains(point) {
            return Err(Error::PointNotOnCurve);
        }
        let (integral, p_int, to_integral) = curve.integralize(point)?;
        let mut locals = BTreeMap::new();
        for v in bad_places(&integral)? {
            locals.insert(v.clone(), tate_algorithm(&integral, &v)?);
        }
        locals.insert(Place::Infinity, tate_algorithm(&integral, &Place::Infinity)?);

        let mut seq = EdsSequence {
            curve: curve.clone(),
            point: point.clone(),
            integral,
            to_integral,
            n_max,
            terms: vec![],
            locals,
            multiples: vec![Point::Infinity, p_int],
        };
        for n in 1..=n_max {
            while (seq.multiples.len() as u64) <= n {
                let len = seq.multiples.len();
                let next = seq.integral.add_unchecked(&seq.multiples[len - 1], &seq.multiples[1]);
                seq.multiples.push(next);
            }
            let npt = seq.multiples[n as usize].clone();
            if npt.is_infinity() {
                return Err(Error::TorsionEncountered(n));
            }
            let term = seq.term_divisor(&npt, seed)?;
            seq.terms.push(term);
        }
        Ok(seq)
    }

    fn term_divisor(&self, npt: &Point<RatFunc>, seed: u64) -> Result<Divisor, Error> {
        let (x, _) = npt.xy().expect("torsion handled by caller");
        let mut candidates: Vec<Place> = self.locals.keys().cloned().collect();
        for (pi, _) in factor(x.denominator(), seed)?.1 {
            let v = Place::Finite(pi);
            if !candidates.contains(&v) {
                candidates.push(v);
            }
        }
        let mut d = Divisor::zero();
        for v in candidates {
            let (xv, yv) = match self.locals.get(&v) {
                Some(local) => {
                    let mapped = local.transform.map_point(npt);
                    match mapped {
                        Point::Infinity => unreachable!("affine points stay affine"),
                        Point::Affine(x, y) => (x, y),
                    }
                }
                None => match npt {
                    Point::Affine(x, y) => (x.clone(), y.clone()),
                    Point::Infinity => unreachable!(),
                },
            };
            let val = valuation(&xv, &v)?;
            if val >= 0 {
                continue;
            }
            if val % 2 != 0 {
                return Err(Error::Inconsistency(format!(
                    "odd valuation v(x) = {val} at {v} on a minimal model"
                )));
            }
            let vy = valuation(&yv, &v)?;
            if 2 * vy != 3 * val {
                return Err(Error::Inconsistency(format!(
                    "v(y) = {vy} does not match 3/2 * v(x) = {val} at {v}"
                )));
            }
            d.set(v, -val / 2);
        }
        Ok(d)
    }

    /// D_n for 1 <= n <= n_max.
    pub fn term(&self, n: u64) -> &Divisor {
        &self.terms[(n - 1) as usize]
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Divisor)> {
        self.terms.iter().enumerate().map(|(i, d)| (i as u64 + 1, d))
    }

    /// Least n with v in the support of D_n.
    pub fn rank_of_apparition(&self, v: &Place) -> Apparition {
        for (n, d) in self.terms() {
            if d.mult(v) > 0 {
                return Apparition::Found(n);
            }
        }
        Apparition::NotFoundWithin(self.n_max)
    }

    /// Places of D_n absent from every earlier term.
    pub fn primitive_places(&self, n: u64) -> Vec<Place> {
        self.term(n)
            .support()
            .filter(|v| (1..n).all(|m| self.term(m).mult(v) == 0))
            .cloned()
            .collect()
    }

    pub fn has_primitive(&self, n: u64) -> bool {
        !self.primitive_places(n).is_empty()
    }

    /// min(D_m, D_n) must equal D_gcd(m, n).
    pub fn strong_divisibility_check(&self, m: u64, n: u64) -> bool {
        let g = gcd_u64(m, n);
        self.term(m).min(self.term(n)) == *self.term(g)
    }

    pub fn zsigmondy_report(&self) -> ZsigmondyReport {
        let rows: Vec<ZsigmondyRow> = (1..=self.n_max)
            .map(|n| {
                let witnesses = self.primitive_places(n);
                ZsigmondyRow { n, has_primitive: !witnesses.is_empty(), witnesses }
            })
            .collect();
        let largest_without = rows.iter().rev().find(|r| !r.has_primitive).map(|r| r.n);
        ZsigmondyReport { rows, largest_without }
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

#[derive(Clone, Debug)]
pub struct ZsigmondyRow {
    pub n: u64,
    pub has_primitive: bool,
    pub witnesses: Vec<Place>,
}

#[derive(Clone, Debug)]
pub struct ZsigmondyReport {
    pub rows: Vec<ZsigmondyRow>,
    /// Largest computed index lacking a primitive place.
    pub largest_without: Option<u64>,
}

/// Single divisor term; builds the chain up to n.
pub fn eds_term(
    curve: &Curve<RatFunc>,
    point: &Point<RatFunc>,
    n: u64,
    seed: u64,
) -> Result<Divisor, Error> {
    let seq = EdsSequence::compute(curve, point, n, seed)?;
    Ok(seq.term(n).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::Poly;

    fn fp(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn ex_3_4() -> (Curve<RatFunc>, Point<RatFunc>) {
        let k = fp(3);
        let t = RatFunc::t(&k);
        let e = Curve::short(t.clone(), t.negate()).unwrap();
        let p = Point::Affine(RatFunc::one(&k), RatFunc::one(&k));
        (e, p)
    }

    #[test]
    fn first_terms_of_the_f3_supersingular_sequence() {
        let (e, p) = ex_3_4();
        let seq = EdsSequence::compute(&e, &p, 6, 0).unwrap();
        assert_eq!(seq.term(1).to_string(), "1");
        assert_eq!(seq.term(2).to_string(), "1");
        assert_eq!(seq.term(3).to_string(), "t^2");
        assert_eq!(seq.term(4).to_string(), "(t + 2)^3");
        assert_eq!(seq.term(5).to_string(), "(t^2 + t + 2)^3");
        assert_eq!(seq.term(6).to_string(), "t^2 * inf^3");
    }

    #[test]
    fn apparition_ranks_match_component_orders() {
        let (e, p) = ex_3_4();
        let seq = EdsSequence::compute(&e, &p, 12, 0).unwrap();
        let k = fp(3);
        let vt = Place::finite(Poly::from_ints(&k, &[0, 1])).unwrap();
        assert_eq!(seq.rank_of_apparition(&vt), Apparition::Found(3));
        assert_eq!(seq.rank_of_apparition(&Place::Infinity), Apparition::Found(6));
        let unused = Place::finite(Poly::from_ints(&k, &[1, 1])).unwrap();
        assert_eq!(seq.rank_of_apparition(&unused), Apparition::NotFoundWithin(12));
    }

    #[test]
    fn primitive_places_and_zsigmondy_rows() {
        let (e, p) = ex_3_4();
        let seq = EdsSequence::compute(&e, &p, 12, 0).unwrap();
        assert!(seq.primitive_places(12).is_empty());
        assert!(!seq.has_primitive(9)); // t was seen at n = 3
        for n in [3u64, 4, 5, 7, 8, 10, 11] {
            assert!(seq.has_primitive(n), "n = {n}");
        }
        let report = seq.zsigmondy_report();
        assert_eq!(report.largest_without, Some(12));
    }

    #[test]
    fn strong_divisibility_and_divisibility() {
        let (e, p) = ex_3_4();
        let seq = EdsSequence::compute(&e, &p, 12, 0).unwrap();
        for m in 1..=12u64 {
            for n in 1..=12u64 {
                assert!(seq.strong_divisibility_check(m, n), "({m}, {n})");
                if n % m == 0 {
                    assert!(seq.term(m).leq(seq.term(n)), "divisibility ({m}, {n})");
                }
            }
        }
    }

    #[test]
    fn torsion_is_reported_with_its_order() {
        // y^2 = x^3 + x over F_5(t) has (0, 0) of order 2
        let k = fp(5);
        let e = Curve::short(RatFunc::one(&k), RatFunc::zero_over(&k)).unwrap();
        let p = Point::Affine(RatFunc::zero_over(&k), RatFunc::zero_over(&k));
        assert_eq!(torsion_check(&e, &p, 36).unwrap(), TorsionStatus::Torsion(2));
        assert!(matches!(
            EdsSequence::compute(&e, &p, 5, 0),
            Err(Error::TorsionEncountered(2))
        ));
        assert_eq!(
            torsion_check(&e, &Point::Infinity, 36).unwrap(),
            TorsionStatus::Torsion(1)
        );
        let (e34, p34) = ex_3_4();
        assert_eq!(
            torsion_check(&e34, &p34, 36).unwrap(),
            TorsionStatus::NoTorsionUpTo(36)
        );
    }

    #[test]
    fn good_place_valuations_agree_between_integral_and_minimal_models() {
        let (e, p) = ex_3_4();
        let seq = EdsSequence::compute(&e, &p, 8, 0).unwrap();
        let k = fp(3);
        // (t^2 + t + 2) is a good place in the support of D_5
        let v = Place::finite(Poly::from_ints(&k, &[2, 1, 1])).unwrap();
        assert_eq!(seq.term(5).mult(&v), 3);
        let data = tate_algorithm(&seq.integral, &v).unwrap();
        assert_eq!(data.kodaira, crate::local::KodairaType::I(0));
        // recompute the valuation on the v-minimal model
        let npt = seq.integral.scalar_mul(&seq.to_integral.map_point(&p), 5).unwrap();
        let mapped = data.transform.map_point(&npt);
        let (xv, _) = mapped.xy().unwrap();
        assert_eq!(valuation(xv, &v).unwrap(), -6);
    }
}
