//! Closed-form Hilbert series of a polarized Calabi-Yau threefold.
//!
//! The series `P_X(t) = 1 + sum_{m>=1} h^0(X, O_X(mD)) t^m` is assembled as
//! an exact rational function
//!
//! ```text
//! P_X(t) = 1 + (D^3/6) (t^3+4t^2+t)/(1-t)^4 + (D.c_2/12) t/(1-t)^2
//!            + sum_Q P_Q(t) + sum_C P_C(t)
//! ```
//!
//! over the common denominator `(1-t)^4 prod_C (1-t^r)^2 prod_Q (1-t^s)`, and
//! re-verified coefficientwise against direct Riemann-Roch summation.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::basket::{CurveBasketEntry, PointBasketEntry, PolarizedData};
use crate::error::{Error, Result};
use crate::exactmath::poly::Poly;
use crate::exactmath::ratfunc::{RationalFunction, Weights};
use crate::exactmath::{rat_int, Rat};
use crate::rr;

/// The assembled Hilbert series together with its factored denominator and
/// the data it came from.
#[derive(Clone, Debug)]
pub struct HilbertSeries {
    closed: RationalFunction,
    denominator_weights: Weights,
    source: PolarizedData,
}

impl HilbertSeries {
    /// The closed form as an exact rational function.
    pub fn closed(&self) -> &RationalFunction {
        &self.closed
    }

    /// Multiset of w with denominator `prod (1-t^w)`; divides
    /// `(1-t)^4 prod_C (1-t^r)^2 prod_Q (1-t^s)`.
    pub fn denominator_weights(&self) -> &Weights {
        &self.denominator_weights
    }

    pub fn source(&self) -> &PolarizedData {
        &self.source
    }

    /// Coefficients of the series up to `t^order`.
    pub fn series(&self, order: usize) -> Vec<Rat> {
        self.closed.series(order).coeffs().to_vec()
    }
}

/// The point term `P_Q(t) = (1/(1-t^s)) sum_{i=1}^{s-1} c_Q(iD) t^i`, scaled
/// by the entry's multiplicity (folded into `c_Q` itself).
pub fn point_series(p: &PointBasketEntry) -> Result<RationalFunction> {
    let mut coeffs = rr::point_period_table(p)?;
    coeffs[0] = Rat::zero(); // the i = 0 slot is outside the sum (and is 0 anyway)
    Ok(RationalFunction::new(
        Poly::from_coeffs(coeffs),
        Weights::new(vec![p.s as u32]),
    ))
}

/// The curve term of the closed form, assembled exactly over the common
/// denominator `(1-t^r)^2`:
///
/// ```text
/// P_C(t) = -deg D|_C [ A(t)/(1-t^r) + r t^r B(t)/(1-t^r)^2 ]
///          + N_C/(12 r^2 tau) C(t)/(1-t^r)
/// ```
///
/// with `A = sum i rho_i(r-rho_i)/(2r) t^i`, `B = sum rho_i(r-rho_i)/(2r) t^i`,
/// `C = sum rho_i(r-rho_i)(r-2 rho_i) t^i` and `rho_i` the residue of `i k`.
///
/// Only available in the Calabi-Yau setting: errors if `deg K|_C != 0`.
pub fn curve_series(c: &CurveBasketEntry) -> Result<RationalFunction> {
    if !c.deg_k.is_zero() {
        return Err(Error::CurveCanonicalDegree(c.deg_k.to_string()));
    }
    let r = c.r;
    let mut a = vec![Rat::zero(); r as usize];
    let mut b = vec![Rat::zero(); r as usize];
    let mut n = vec![Rat::zero(); r as usize];
    for i in 1..r {
        let rho = (i * c.k).rem_euclid(r);
        let base = rho * (r - rho);
        b[i as usize] = Rat::new(base.into(), (2 * r).into());
        a[i as usize] = rat_int(i) * &b[i as usize];
        n[i as usize] = rat_int(base * (r - 2 * rho));
    }
    let (a, b, n) = (Poly::from_coeffs(a), Poly::from_coeffs(b), Poly::from_coeffs(n));
    let one_minus_tr = Poly::one_minus_t_pow(r as u32);
    let deg_part = &(&a * &one_minus_tr) + &(&Poly::monomial(rat_int(r), r as usize) * &b);
    let n_scale = Rat::new(c.n_c.into(), (12 * r * r * c.tau).into());
    let num = &deg_part.scale(&-&c.deg_d) + &(&n * &one_minus_tr).scale(&n_scale);
    Ok(RationalFunction::new(
        num,
        Weights::new(vec![r as u32, r as u32]),
    ))
}

/// Default verification order: `max(50, 2 lcm of all s and r)`, covering at
/// least two full quasi-periods of every basket entry.
pub fn default_verification_order(data: &PolarizedData) -> usize {
    let mut l: i64 = 1;
    for p in &data.points {
        l = l.lcm(&p.s);
    }
    for c in &data.curves {
        l = l.lcm(&c.r);
    }
    (2 * l).max(50) as usize
}

/// Assemble the closed-form Hilbert series, re-verifying it coefficientwise
/// against direct chi summation up to the default order.
pub fn assemble(data: &PolarizedData) -> Result<HilbertSeries> {
    assemble_with_order(data, default_verification_order(data))
}

/// Assemble with an explicit verification order (>= 1).
pub fn assemble_with_order(data: &PolarizedData, verify_order: usize) -> Result<HilbertSeries> {
    if !data.calabi_yau {
        return Err(Error::NotCalabiYau);
    }
    let mut acc = RationalFunction::one();
    // (D^3/6) (t^3 + 4t^2 + t)/(1-t)^4
    let cubic = Poly::from_coeffs(vec![Rat::zero(), Rat::one(), rat_int(4), Rat::one()]);
    acc = acc.add(
        &RationalFunction::new(cubic, Weights::new(vec![1, 1, 1, 1]))
            .scale(&(&data.d3 / rat_int(6))),
    );
    // (D.c_2/12) t/(1-t)^2
    acc = acc.add(
        &RationalFunction::new(Poly::t_pow(1), Weights::new(vec![1, 1]))
            .scale(&(&data.dc2 / rat_int(12))),
    );
    for p in &data.points {
        acc = acc.add(&point_series(p)?);
    }
    for c in &data.curves {
        acc = acc.add(&curve_series(c)?);
    }

    let series = HilbertSeries {
        denominator_weights: acc.den_weights().clone(),
        closed: acc,
        source: data.clone(),
    };
    verify_against_chi(&series, verify_order)?;
    Ok(series)
}

/// The defining identity of the closed form: its coefficient at t^m equals
/// chi(source, m) for 1 <= m <= order, and the constant term is 1.
fn verify_against_chi(series: &HilbertSeries, order: usize) -> Result<()> {
    let order = order.max(1);
    let coeffs = series.series(order);
    if !coeffs[0].is_one() {
        return Err(Error::SeriesMismatch {
            m: 0,
            closed: coeffs[0].to_string(),
            direct: "1".to_string(),
        });
    }
    let direct = rr::chi_values(&series.source, order as i64)?;
    for m in 1..=order {
        if coeffs[m] != direct[m - 1] {
            return Err(Error::SeriesMismatch {
                m,
                closed: coeffs[m].to_string(),
                direct: direct[m - 1].to_string(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basket;
    use crate::exactmath::rat;
    use num_traits::Zero;

    fn point(s: i64, a: [i64; 3], n: i64) -> PointBasketEntry {
        PointBasketEntry::new(s, a, n, 1).expect("valid point")
    }

    fn curve(r: i64, k: i64, deg_d: Rat, tau: i64, n_c: i64) -> CurveBasketEntry {
        CurveBasketEntry::new(r, k, deg_d, Rat::zero(), tau, n_c).expect("valid curve")
    }

    fn golden_codim3() -> PolarizedData {
        PolarizedData::calabi_yau(
            rat(29, 27),
            rat(86, 3),
            vec![point(3, [1, 1, 1], 2), point(9, [1, 3, 5], 8)],
            vec![curve(3, 1, rat(1, 9), 3, 22)],
        )
    }

    #[test]
    fn point_series_zero_for_trivial_eigenvalue() {
        let p = point(5, [1, 1, 3], 0);
        assert!(point_series(&p).expect("valid").is_zero());
    }

    #[test]
    fn point_series_frozen_example() {
        // s=3, a=(1,1,1), n=2: numerator (1/9) t - (1/9) t^2 over 1 - t^3
        let p = point(3, [1, 1, 1], 2);
        let ps = point_series(&p).expect("valid");
        assert_eq!(
            ps.num(),
            &Poly::from_coeffs(vec![Rat::zero(), rat(1, 9), rat(-1, 9)])
        );
        assert_eq!(ps.den_weights().as_slice(), &[3]);
    }

    #[test]
    fn point_series_expansion_matches_contributions() {
        for p in [point(3, [1, 1, 1], 2), point(9, [1, 3, 5], 8), point(5, [1, 1, 3], 4)] {
            let ps = point_series(&p).expect("valid");
            let coeffs = ps.series(4 * p.s as usize);
            for m in 1..=4 * p.s {
                assert_eq!(
                    coeffs.coeff(m as usize),
                    rr::point_contribution(&p, m).expect("exact"),
                    "s = {}, m = {m}",
                    p.s
                );
            }
        }
    }

    #[test]
    fn curve_series_expansion_matches_contributions() {
        for c in [
            curve(2, 1, rat(7, 4), 2, 0),
            curve(3, 1, rat(1, 9), 3, 22),
            curve(5, 2, rat(3, 2), 1, -7),
        ] {
            let cs = curve_series(&c).expect("CY curve");
            let coeffs = cs.series(20);
            for m in 1..=20 {
                assert_eq!(
                    coeffs.coeff(m as usize),
                    rr::curve_contribution(&c, m),
                    "r = {}, m = {m}",
                    c.r
                );
            }
        }
    }

    #[test]
    fn curve_series_frozen_coefficient() {
        let cs = curve_series(&curve(3, 1, rat(1, 9), 3, 22)).expect("CY curve");
        assert_eq!(cs.series(1).coeff(1), rat(8, 81));
    }

    #[test]
    fn curve_series_zero_when_trivial() {
        let c = curve(4, 1, Rat::zero(), 1, 0);
        assert!(curve_series(&c).expect("CY curve").is_zero());
    }

    #[test]
    fn curve_series_rejects_canonical_degree() {
        let c = CurveBasketEntry::new(3, 1, rat(1, 9), rat_int(2), 1, 0).expect("valid");
        assert!(matches!(
            curve_series(&c),
            Err(Error::CurveCanonicalDegree(_))
        ));
    }

    #[test]
    fn assemble_golden_codim3() {
        let data = golden_codim3();
        let hs = assemble(&data).expect("assembles");
        assert_eq!(hs.denominator_weights().as_slice(), &[1, 1, 1, 1, 3, 3, 9]);
        let coeffs = hs.series(8);
        let expected: Vec<i64> = vec![1, 3, 6, 12, 21, 34, 53, 78, 110];
        for (m, want) in expected.iter().enumerate() {
            assert_eq!(coeffs[m], rat_int(*want), "coefficient at t^{m}");
        }
    }

    #[test]
    fn assemble_requires_calabi_yau() {
        let mut data = golden_codim3();
        data.calabi_yau = false;
        assert_eq!(assemble(&data).unwrap_err(), Error::NotCalabiYau);
    }

    #[test]
    fn assemble_pure_cubic() {
        // empty baskets, D3 = 6, Dc2 = 0: P = 1 + sum m^3 t^m
        let data = PolarizedData::calabi_yau(rat_int(6), Rat::zero(), vec![], vec![]);
        let hs = assemble(&data).expect("assembles");
        let coeffs = hs.series(10);
        for (m, c) in coeffs.iter().enumerate() {
            let want = if m == 0 { 1 } else { (m * m * m) as i64 };
            assert_eq!(*c, rat_int(want));
        }
    }

    #[test]
    fn denominator_bound_holds() {
        let data = golden_codim3();
        let hs = assemble(&data).expect("assembles");
        // bound: (1-t)^4 (1-t^3)^2 (1-t^3) (1-t^9)
        let bound = Weights::new(vec![1, 1, 1, 1, 3, 3, 3, 9]);
        let extra = bound.difference(hs.denominator_weights());
        assert_eq!(
            bound.len() - extra.len(),
            hs.denominator_weights().len(),
            "denominator multiset must embed into the bound"
        );
    }

    #[test]
    fn default_order_covers_two_periods() {
        let data = golden_codim3();
        assert_eq!(default_verification_order(&data), 50);
        let wide = PolarizedData::calabi_yau(
            rat_int(1),
            Rat::zero(),
            vec![point(17, [1, 2, 3], 1)],
            vec![curve(5, 1, rat_int(1), 1, 0)],
        );
        assert_eq!(default_verification_order(&wide), 170);
    }

    #[test]
    fn validated_golden_data_is_accepted() {
        let data = golden_codim3();
        assert!(basket::validate(&data).is_valid());
        assert!(assemble(&data).is_ok());
    }
}
