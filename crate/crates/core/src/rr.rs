//! The orbifold Riemann-Roch formula for a polarized threefold (X, D):
//! point contributions c_P(mD) evaluated exactly in cyclotomic fields, curve
//! contributions s_C(mD), the full chi(X, O_X(mD)), and the inversion that
//! recovers (D^3, D.c_2) from the first two section counts in the Calabi-Yau
//! case.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::basket::{CurveBasketEntry, PointBasketEntry, PolarizedData};
use crate::error::{Error, Result};
use crate::exactmath::cyclo::CycloElem;
use crate::exactmath::{rat_int, Rat};

/// chi(X, O_X(mD)) together with its per-term breakdown.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiResult {
    pub m: i64,
    /// The full Euler characteristic; an integer for valid inputs.
    pub value: Rat,
    pub breakdown: ChiBreakdown,
}

/// Exact decomposition of a chi value: `value` is the sum of the polynomial
/// part and all basket contributions.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiBreakdown {
    pub polynomial_part: Rat,
    pub point_contribs: Vec<Rat>,
    pub curve_contribs: Vec<Rat>,
}

/// The smallest nonnegative residue of `x` mod `r`, i.e. `x mod r` in
/// [0, r-1]. Rejects nonpositive moduli.
pub fn smallest_residue(x: i64, r: i64) -> Result<i64> {
    if r < 1 {
        return Err(Error::NonPositiveModulus(r));
    }
    Ok(x.rem_euclid(r))
}

/// The point contribution c_P(mD), scaled by the entry's multiplicity:
///
/// ```text
/// c_P(mD) = (1/s) sum over eps in mu_s with eps^{a_i} != 1 for all i of
///           (eps^{-nm} - 1) / ((1-eps^{-a1})(1-eps^{-a2})(1-eps^{-a3}))
/// ```
///
/// The sum over mu_s is grouped by the order d of eps: for each divisor
/// d >= 2 of s whose terms survive the exclusion (d divides no a_i), the
/// orbit sum over primitive d-th roots is evaluated in Q(zeta_d) and is
/// Galois-stable, hence rational; `rational_part` enforces that per orbit.
pub fn point_contribution(p: &PointBasketEntry, m: i64) -> Result<Rat> {
    let s = p.s;
    let mut total = Rat::zero();
    for d in 2..=s {
        if s % d != 0 {
            continue;
        }
        // eps of exact order d has eps^{a_i} = 1 iff d divides a_i
        if p.a.iter().any(|&ai| ai % d == 0) {
            continue;
        }
        let d = d as u32;
        let one = CycloElem::one(d);
        let mut orbit = CycloElem::zero(d);
        for j in 1..d as i64 {
            if j.gcd(&(d as i64)) != 1 {
                continue;
            }
            let num = &CycloElem::zeta_pow(d, -(p.n as i128) * (m as i128) * (j as i128)) - &one;
            let mut den = one.clone();
            for &ai in &p.a {
                den = &den * &(&one - &CycloElem::zeta_pow(d, -(ai as i128) * (j as i128)));
            }
            orbit = &orbit + &(&num * &den.inv()?);
        }
        total += orbit.rational_part()?;
    }
    Ok(rat_int(p.multiplicity) * total / rat_int(s))
}

/// The curve contribution s_C(mD) with `rho` the smallest residue of `m k`
/// mod r:
///
/// ```text
/// s_C(mD) = -m rho(r-rho)/(2r) deg D|_C + rho(r-rho)/(4r) deg K_X|_C
///           + rho(r-rho)(r-2 rho)/(12 r^2 tau_C) N_C
/// ```
pub fn curve_contribution(c: &CurveBasketEntry, m: i64) -> Rat {
    let r = c.r as i128;
    let rho = ((m as i128) * (c.k as i128)).rem_euclid(r);
    let base = rho * (r - rho);
    let deg_term = Rat::new((-(m as i128) * base).into(), (2 * r).into()) * &c.deg_d;
    let k_term = Rat::new(base.into(), (4 * r).into()) * &c.deg_k;
    let n_term = Rat::new(
        (base * (r - 2 * rho) * (c.n_c as i128)).into(),
        (12 * r * r * (c.tau as i128)).into(),
    );
    deg_term + k_term + n_term
}

fn polynomial_part(data: &PolarizedData, m: i64) -> Rat {
    // m D (m D - K)(2 m D - K) = 2 m^3 D^3 - 3 m^2 D^2 K + m D K^2
    let m1 = rat_int(m);
    let m2 = &m1 * &m1;
    let m3 = &m2 * &m1;
    let twelfth = Rat::new(1.into(), 12.into());
    &data.chi_o
        + &twelfth
            * (m3 * rat_int(2) * &data.d3 - m2 * rat_int(3) * &data.d2k + &m1 * &data.dk2)
        + &twelfth * &m1 * &data.dc2
}

/// chi(X, O_X(mD)) for m >= 1. In the Calabi-Yau case this equals
/// h^0(X, O_X(mD)) by vanishing.
pub fn chi(data: &PolarizedData, m: i64) -> Result<ChiResult> {
    if m < 1 {
        return Err(Error::NonPositiveM(m));
    }
    let point_contribs: Vec<Rat> = data
        .points
        .iter()
        .map(|p| point_contribution(p, m))
        .collect::<Result<_>>()?;
    let curve_contribs: Vec<Rat> = data
        .curves
        .iter()
        .map(|c| curve_contribution(c, m))
        .collect();
    let polynomial_part = polynomial_part(data, m);
    let value = &polynomial_part
        + &point_contribs.iter().sum::<Rat>()
        + curve_contribs.iter().sum::<Rat>();
    Ok(ChiResult {
        m,
        value,
        breakdown: ChiBreakdown {
            polynomial_part,
            point_contribs,
            curve_contribs,
        },
    })
}

/// The full period table of a point contribution: entry `j` is `c_P(mD)`
/// for any `m` with `m = j mod s`.
///
/// Equivalent to `point_contribution` for each residue, but the denominator
/// products `(1 - eps^{-a_i})` do not depend on m, so their inverses are
/// formed once per orbit instead of once per residue.
pub fn point_period_table(p: &PointBasketEntry) -> Result<Vec<Rat>> {
    let s = p.s;
    let mut table = vec![Rat::zero(); s as usize];
    for d in 2..=s {
        if s % d != 0 || p.a.iter().any(|&ai| ai % d == 0) {
            continue;
        }
        let d32 = d as u32;
        let one = CycloElem::one(d32);
        let mut inverted = Vec::new();
        for j in 1..d {
            if j.gcd(&d) != 1 {
                continue;
            }
            let mut den = one.clone();
            for &ai in &p.a {
                den = &den * &(&one - &CycloElem::zeta_pow(d32, -(ai as i128) * (j as i128)));
            }
            inverted.push((j, den.inv()?));
        }
        for (m, slot) in table.iter_mut().enumerate() {
            let mut orbit = CycloElem::zero(d32);
            for (j, inv) in &inverted {
                let num = &CycloElem::zeta_pow(d32, -(p.n as i128) * (m as i128) * (*j as i128))
                    - &one;
                orbit = &orbit + &(&num * inv);
            }
            *slot += orbit.rational_part()?;
        }
    }
    let scale = rat_int(p.multiplicity) / rat_int(s);
    Ok(table.into_iter().map(|v| v * &scale).collect())
}

/// chi values for every m in 1..=m_max, as one list.
///
/// Point contributions are periodic in m with period s, so each entry's orbit
/// sums are evaluated once per residue class instead of once per m.
pub fn chi_values(data: &PolarizedData, m_max: i64) -> Result<Vec<Rat>> {
    if m_max < 1 {
        return Err(Error::NonPositiveM(m_max));
    }
    let point_tables: Vec<Vec<Rat>> = data
        .points
        .iter()
        .map(point_period_table)
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        let mut value = polynomial_part(data, m);
        for (p, table) in data.points.iter().zip(&point_tables) {
            value += &table[(m % p.s) as usize];
        }
        for c in &data.curves {
            value += curve_contribution(c, m);
        }
        out.push(value);
    }
    Ok(out)
}

/// Recover (D^3, D.c_2) from h^0(X, D) and h^0(X, 2D) in the Calabi-Yau
/// setting by inverting
///
/// ```text
/// h(m) = m^3 D^3 / 6 + m D.c_2 / 12 + sum c_P(mD) + sum s_C(mD),  m = 1, 2.
/// ```
///
/// The 2x2 system has determinant -1/12, so it is always solvable; ampleness
/// of the result (D^3 > 0) is the embedding search's concern, not this one's.
pub fn solve_invariants(
    h1: i64,
    h2: i64,
    points: &[PointBasketEntry],
    curves: &[CurveBasketEntry],
) -> Result<(Rat, Rat)> {
    let rest = |m: i64| -> Result<Rat> {
        let mut acc = Rat::zero();
        for p in points {
            acc += point_contribution(p, m)?;
        }
        for c in curves {
            acc += curve_contribution(c, m);
        }
        Ok(acc)
    };
    let b1 = rat_int(h1) - rest(1)?;
    let b2 = rat_int(h2) - rest(2)?;
    // b1 = D3/6 + Dc2/12, b2 = 8 D3/6 + 2 Dc2/12
    let d3 = &b2 - rat_int(2) * &b1;
    let dc2 = rat_int(12) * b1 - rat_int(2) * &d3;
    Ok((d3, dc2))
}

/// True iff the chi value is an integer (chi of a coherent sheaf must be).
pub fn is_integral(value: &Rat) -> bool {
    value.denom().is_one()
}
