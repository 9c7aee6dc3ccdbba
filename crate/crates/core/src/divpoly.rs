//! Division polynomials reduced to the x-line.
//!
//! For even index the polynomial psi_n carries one factor of psi_2, so we
//! store g_n with psi_n = g_n (n odd) and psi_n = g_n * psi_2 (n even), and
//! W = psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6 as a polynomial in x. All the
//! recurrences below are identities over Z[b2, b4, b6, b8][x], so they hold
//! in every characteristic. The pair (phi_n, psi_n^2) gives the x-coordinate
//! of multiplication by n.

use crate::curve::Curve;
use crate::error::Error;
use crate::field::FieldLike;
use crate::poly::UPoly;

#[derive(Clone, Debug)]
pub struct DivisionPolyPair<K: FieldLike> {
    pub n: u64,
    /// psi_n^2, a polynomial in x alone.
    pub psi_sq: UPoly<K>,
    /// phi_n = x psi_n^2 - psi_{n+1} psi_{n-1}.
    pub phi: UPoly<K>,
    /// Whether psi_n itself contains the psi_2 factor (n even).
    pub even: bool,
}

/// Memoizing calculator for the division polynomials of one curve.
pub struct DivisionPolys<K: FieldLike> {
    w: UPoly<K>,
    g: Vec<UPoly<K>>,
}

impl<K: FieldLike> DivisionPolys<K> {
    pub fn new(curve: &Curve<K>) -> DivisionPolys<K> {
        let inv = curve.invariants();
        let one = curve.a1.one_like();
        let n = |v: i64| one.small(v);
        let c = |k: &K| UPoly::constant(k.clone());
        let x = UPoly::x(&one);
        // W = 4x^3 + b2 x^2 + 2 b4 x + b6
        let w = c(&n(4))
            .mul(&x.pow(3))
            .add(&c(&inv.b2).mul(&x.pow(2)))
            .add(&c(&n(2).mul_ref(&inv.b4)).mul(&x))
            .add(&c(&inv.b6));
        // g3 = psi_3 = 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8
        let g3 = c(&n(3))
            .mul(&x.pow(4))
            .add(&c(&inv.b2).mul(&x.pow(3)))
            .add(&c(&n(3).mul_ref(&inv.b4)).mul(&x.pow(2)))
            .add(&c(&n(3).mul_ref(&inv.b6)).mul(&x))
            .add(&c(&inv.b8));
        // g4 = psi_4 / psi_2 = 2x^6 + b2 x^5 + 5 b4 x^4 + 10 b6 x^3
        //      + 10 b8 x^2 + (b2 b8 - b4 b6) x + (b4 b8 - b6^2)
        let g4 = c(&n(2))
            .mul(&x.pow(6))
            .add(&c(&inv.b2).mul(&x.pow(5)))
            .add(&c(&n(5).mul_ref(&inv.b4)).mul(&x.pow(4)))
            .add(&c(&n(10).mul_ref(&inv.b6)).mul(&x.pow(3)))
            .add(&c(&n(10).mul_ref(&inv.b8)).mul(&x.pow(2)))
            .add(&c(&inv.b2.mul_ref(&inv.b8).sub_ref(&inv.b4.mul_ref(&inv.b6))).mul(&x))
            .add(&c(&inv.b4.mul_ref(&inv.b8).sub_ref(&inv.b6.mul_ref(&inv.b6))));
        let g = vec![UPoly::zero(&one), UPoly::one(&one), UPoly::one(&one), g3, g4];
        DivisionPolys { w, g }
    }

    /// psi_2^2 as a polynomial in x.
    pub fn two_torsion_poly(&self) -> &UPoly<K> {
        &self.w
    }

    fn extend_to(&mut self, n: u64) {
        while (self.g.len() as u64) <= n {
            let k = self.g.len() as u64;
            let next = if k % 2 == 1 {
                // k = 2m+1
                let m = (k / 2) as usize;
                let lead = self.g[m + 2].mul(&self.g[m].pow(3));
                let tail = self.g[m - 1].mul(&self.g[m + 1].pow(3));
                let w2 = self.w.mul(&self.w);
                if m % 2 == 0 {
                    lead.mul(&w2).sub(&tail)
                } else {
                    lead.sub(&tail.mul(&w2))
                }
            } else {
                // k = 2m
                let m = (k / 2) as usize;
                let diff = self.g[m + 2]
                    .mul(&self.g[m - 1].pow(2))
                    .sub(&self.g[m - 2].mul(&self.g[m + 1].pow(2)));
                self.g[m].mul(&diff)
            };
            self.g.push(next);
        }
    }

    pub fn pair(&mut self, n: u64) -> Result<DivisionPolyPair<K>, Error> {
        if n < 1 {
            return Err(Error::Unsupported("division polynomial index must be >= 1".into()));
        }
        self.extend_to(n + 1);
        let even = n % 2 == 0;
        let gn = &self.g[n as usize];
        let psi_sq = if even { gn.mul(gn).mul(&self.w) } else { gn.mul(gn) };
        let x = UPoly::x(self.w.zero_coeff());
        let cross = self.g[(n + 1) as usize].mul(&self.g[(n - 1) as usize]);
        let phi = if even {
            x.mul(&psi_sq).sub(&cross)
        } else {
            x.mul(&psi_sq).sub(&cross.mul(&self.w))
        };
        Ok(DivisionPolyPair { n, psi_sq, phi, even })
    }
}

/// One-shot computation of (phi_n, psi_n^2) for a curve.
pub fn division_poly<K: FieldLike>(curve: &Curve<K>, n: u64) -> Result<DivisionPolyPair<K>, Error> {
    DivisionPolys::new(curve).pair(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Point;
    use crate::field::{Field, FieldElement};

    /// y^2 = x^3 + x over F_3, the supersingular constant curve.
    fn ss3() -> Curve<FieldElement> {
        let k = Field::prime(3).unwrap();
        Curve::short(k.one(), k.zero()).unwrap()
    }

    #[test]
    fn index_one_is_trivial() {
        let e = ss3();
        let pair = division_poly(&e, 1).unwrap();
        assert!(pair.psi_sq.is_one());
        let k = Field::prime(3).unwrap();
        assert_eq!(pair.phi, UPoly::x(&k.zero()));
        assert!(division_poly(&e, 0).is_err());
    }

    #[test]
    fn triple_on_supersingular_curve_is_frobenius_squared() {
        // psi_3 = b8 = 2 is constant (no affine 3-torsion) and x o [3] = x^9
        let e = ss3();
        let k = Field::prime(3).unwrap();
        let pair = division_poly(&e, 3).unwrap();
        assert_eq!(pair.psi_sq, UPoly::constant(k.one())); // psi_3^2 = 4 = 1
        assert_eq!(pair.phi, UPoly::x(&k.zero()).pow(9));
    }

    #[test]
    fn two_torsion_roots() {
        // psi_2^2 = x^3 + x mod 3 with roots {0, i, -i} in F_9
        let e = ss3();
        let pair = division_poly(&e, 2).unwrap();
        let k3 = Field::prime(3).unwrap();
        let expected = crate::poly::Poly::from_ints(&k3, &[0, 1, 0, 1]);
        assert_eq!(pair.psi_sq, expected);
        let f9 = Field::extension(3, &[1, 0, 1]).unwrap();
        let i = f9.generator();
        for x0 in [f9.zero(), i.clone(), i.negate()] {
            let val: FieldElement = pair
                .psi_sq
                .coeffs()
                .iter()
                .enumerate()
                .fold(f9.zero(), |acc, (j, c)| {
                    acc + f9.from_u64(c.coeffs()[0]) * x0.pow(j as i64).unwrap()
                });
            assert!(val.is_zero());
        }
    }

    #[test]
    fn matches_scalar_multiplication_on_finite_points() {
        // compare phi_n / psi_n^2 against the group law over a field large
        // enough to carry points of many orders
        let k = Field::with_degree(5, 2).unwrap();
        let e = Curve::short(k.one(), k.from_u64(3)).unwrap();
        let mut dp = DivisionPolys::new(&e);
        let mut checked = 0;
        'outer: for x0 in k.elements() {
            for y0 in k.elements() {
                let pt = Point::Affine(x0.clone(), y0.clone());
                if !e.contains(&pt) {
                    continue;
                }
                for n in 1..=10u64 {
                    let pair = dp.pair(n).unwrap();
                    let den = pair.psi_sq.eval(&x0);
                    let npt = e.scalar_mul(&pt, n).unwrap();
                    match npt {
                        Point::Infinity => assert!(den.is_zero()),
                        Point::Affine(xn, _) => {
                            if den.is_zero() {
                                continue;
                            }
                            let num = pair.phi.eval(&x0);
                            assert_eq!(num.checked_div(&den).unwrap(), xn);
                        }
                    }
                }
                checked += 1;
                if checked >= 12 {
                    break 'outer;
                }
            }
        }
        assert!(checked >= 12);
    }

    #[test]
    fn phi_degree_bound() {
        let e = ss3();
        let mut dp = DivisionPolys::new(&e);
        for n in 1..=12u64 {
            let pair = dp.pair(n).unwrap();
            assert!(pair.phi.deg_or_zero() as u64 <= n * n);
            assert_eq!(pair.even, n % 2 == 0);
        }
    }
}
