//! The geometric side: stacky point counts of special divisors at nonsplit
//! primes, their finite Arakelov degree, and the Green-function contribution
//! for `α` negative at exactly one real place.

use std::f64::consts::PI;

use num_rational::Ratio;
use serde::Serialize;

use crate::beta::beta1;
use crate::deformation::{deformation_length, epsilon, LocalContext};
use crate::error::{Error, Result};
use crate::field::{ElementF, PrimeOfF};
use crate::ideal::{principal_ideal, rho, IdealF};
use crate::tower::{FieldTower, SplittingType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    TotallyPositive,
    OneNegativePlace,
    Zero,
}

impl CaseTag {
    pub fn of(alpha: &ElementF) -> CaseTag {
        let negative = alpha.signs().iter().filter(|&&s| s < 0).count();
        match negative {
            0 => CaseTag::TotallyPositive,
            1 => CaseTag::OneNegativePlace,
            _ => CaseTag::Zero,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::TotallyPositive => "totally_positive",
            CaseTag::OneNegativePlace => "one_negative_place",
            CaseTag::Zero => "zero",
        }
    }
}

/// One summand of the finite degree.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimeTerm {
    pub prime: PrimeOfF,
    pub splitting: SplittingType,
    pub ord: i64,
    /// `ρ(α·P^{−ε_P})`.
    pub rho_shifted: u64,
    /// Length of the local ring at a point above `P`.
    pub length: Ratio<i64>,
    pub term: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeBreakdown {
    pub total: f64,
    pub per_prime: Vec<PrimeTerm>,
    pub green_term: f64,
    pub case_tag: CaseTag,
}

/// Primes over which the finite sums run: the support of `(α)` together with
/// every finite prime ramified in `K` (the `ε`-shift leaves those in play even
/// when `ord_P α = 0`).
pub fn summation_primes(tower: &FieldTower, alpha: &ElementF) -> Vec<PrimeOfF> {
    let mut primes: Vec<PrimeOfF> = principal_ideal(alpha).support().copied().collect();
    primes.extend_from_slice(tower.finite_ramified());
    primes.sort();
    primes.dedup();
    primes
}

/// `|C_K| / w(K)`.
pub fn stacky_mass(tower: &FieldTower) -> Ratio<i64> {
    Ratio::new(tower.class_data().ck as i64, tower.w() as i64)
}

/// `ρ(α·P^{−ε_P})`.
pub fn rho_shifted(tower: &FieldTower, alpha: &ElementF, prime: &PrimeOfF) -> Result<u64> {
    let eps = epsilon(tower.splitting(prime))?;
    Ok(rho(tower, &principal_ideal(alpha).shifted(*prime, -eps)))
}

/// Stacky number of points of `Z(α)` over the residue field at a prime above
/// the nonsplit `P`: `|C_K|/w(K) · ρ(α·P^{−ε_P})`.
pub fn point_count(tower: &FieldTower, alpha: &ElementF, prime: &PrimeOfF) -> Result<Ratio<i64>> {
    if !alpha.is_totally_positive() {
        return Err(Error::Domain(format!("alpha = {alpha} is not totally positive")));
    }
    if tower.splitting(prime).is_split() {
        return Err(Error::Domain(format!("{prime} splits in K; Z(alpha) has no points there")));
    }
    Ok(stacky_mass(tower) * rho_shifted(tower, alpha, prime)? as i64)
}

/// Finite Arakelov degree of `Z(α)` for totally positive `α`.
pub fn finite_degree(tower: &FieldTower, alpha: &ElementF) -> Result<DegreeBreakdown> {
    if !alpha.is_totally_positive() {
        return Err(Error::Domain(format!("alpha = {alpha} is not totally positive; use arithmetic_degree")));
    }
    let mass = stacky_mass(tower);
    let k_degree = tower.k_degree() as i64;
    let mut per_prime = Vec::new();
    for prime in summation_primes(tower, alpha) {
        let st = tower.splitting(&prime);
        if st.is_split() {
            continue;
        }
        let ord = alpha.ord(&prime);
        let rho_shifted = rho_shifted(tower, alpha, &prime)?;
        let ctx = LocalContext::at(tower, &prime)?;
        let coefficient = mass * Ratio::new((ord + 1) * rho_shifted as i64, k_degree);
        let term = ratio_to_f64(coefficient) * prime.log_norm();
        per_prime.push(PrimeTerm {
            prime,
            splitting: st,
            ord,
            rho_shifted,
            length: deformation_length(&ctx, ord),
            term,
        });
    }
    let total = per_prime.iter().map(|t| t.term).sum();
    Ok(DegreeBreakdown { total, per_prime, green_term: 0.0, case_tag: CaseTag::TotallyPositive })
}

/// The same summand assembled from the point count and the local length,
/// undoing the residue-degree bookkeeping over the primes of `K̃` above `P`:
/// `term = #points · length · (2/ẽ) · log N(P) / [K:Q]`.
pub fn term_from_points(tower: &FieldTower, alpha: &ElementF, prime: &PrimeOfF) -> Result<f64> {
    let ctx = LocalContext::at(tower, prime)?;
    let points = point_count(tower, alpha, prime)?;
    let length = deformation_length(&ctx, alpha.ord(prime));
    let coefficient = points * length * Ratio::new(2, ctx.e_tilde as i64) / Ratio::from(tower.k_degree() as i64);
    Ok(ratio_to_f64(coefficient) * prime.log_norm())
}

/// Archimedean contribution for `α` negative at exactly one real place `v`:
/// `|C_K|/w(K) · ρ((α))/[K:Q] · β₁(4π|y_v α_v|)`.
pub fn green_contribution(tower: &FieldTower, alpha: &ElementF, y: &[f64]) -> Result<f64> {
    check_y(tower, y)?;
    let negative: Vec<usize> = (0..tower.field().places()).filter(|&v| alpha.sign_at(v) < 0).collect();
    let [v] = negative[..] else {
        return Err(Error::Domain(format!("alpha = {alpha} must be negative at exactly one real place")));
    };
    let rho_alpha = rho(tower, &principal_ideal(alpha));
    if rho_alpha == 0 {
        return Ok(0.0);
    }
    let coefficient = stacky_mass(tower) * Ratio::new(rho_alpha as i64, tower.k_degree() as i64);
    let t = 4.0 * PI * (y[v] * alpha.embedding(v)).abs();
    Ok(ratio_to_f64(coefficient) * beta1(t)?)
}

/// `deg Ẑ(α)` in all three sign cases.
pub fn arithmetic_degree(tower: &FieldTower, alpha: &ElementF, y: &[f64]) -> Result<DegreeBreakdown> {
    check_y(tower, y)?;
    match CaseTag::of(alpha) {
        CaseTag::TotallyPositive => finite_degree(tower, alpha),
        CaseTag::OneNegativePlace => {
            let green = green_contribution(tower, alpha, y)?;
            Ok(DegreeBreakdown {
                total: green,
                per_prime: Vec::new(),
                green_term: green,
                case_tag: CaseTag::OneNegativePlace,
            })
        }
        CaseTag::Zero => {
            Ok(DegreeBreakdown { total: 0.0, per_prime: Vec::new(), green_term: 0.0, case_tag: CaseTag::Zero })
        }
    }
}

pub(crate) fn check_y(tower: &FieldTower, y: &[f64]) -> Result<()> {
    if y.len() != tower.field().places() {
        return Err(Error::Domain(format!("need one y per real place ({}), got {}", tower.field().places(), y.len())));
    }
    if let Some(bad) = y.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
        return Err(Error::Domain(format!("y must be positive, got {bad}")));
    }
    Ok(())
}

pub(crate) fn ratio_to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// The ideal `α·P^{−ε_P}` whose `ρ` enters the summand at `P`.
pub fn shifted_ideal(tower: &FieldTower, alpha: &ElementF, prime: &PrimeOfF) -> Result<IdealF> {
    let eps = epsilon(tower.splitting(prime))?;
    Ok(principal_ideal(alpha).shifted(*prime, -eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::{build_tower, FieldConfig};

    fn q7() -> FieldTower {
        build_tower(&FieldConfig::imaginary_quadratic(-7)).unwrap()
    }

    fn int(t: &FieldTower, a: i128) -> ElementF {
        t.element(a, 0).unwrap()
    }

    #[test]
    fn point_counts() {
        let t = q7();
        let p = |n| t.factor_rational_prime(n)[0];
        assert_eq!(point_count(&t, &int(&t, 3), &p(3)).unwrap(), Ratio::new(1, 2));
        assert_eq!(point_count(&t, &int(&t, 1), &p(3)).unwrap(), Ratio::from(0));
        assert_eq!(point_count(&t, &int(&t, 7), &p(7)).unwrap(), Ratio::new(1, 2));
        assert!(point_count(&t, &int(&t, 2), &p(2)).is_err());
        assert!(point_count(&t, &int(&t, -3), &p(3)).is_err());
    }

    #[test]
    fn finite_degree_at_three() {
        let t = q7();
        let d = finite_degree(&t, &int(&t, 3)).unwrap();
        assert!((d.total - 3f64.ln() / 2.0).abs() < 1e-15);
        assert_eq!(d.case_tag, CaseTag::TotallyPositive);
        // (7) is listed with ρ(3) = 0
        let seven = d.per_prime.iter().find(|t| t.prime.p() == 7).unwrap();
        assert_eq!(seven.rho_shifted, 0);
        assert_eq!(seven.term, 0.0);
    }

    #[test]
    fn ramified_prime_with_zero_order_contributes() {
        let t = q7();
        // α = 1: only the ramified prime (7) enters, with (0+1)·ρ((1)) = 1
        let d = finite_degree(&t, &int(&t, 1)).unwrap();
        assert!((d.total - 7f64.ln() / 4.0).abs() < 1e-15);
        // α = 2: 2 splits, ρ((2)) = 2 at (7)
        let d = finite_degree(&t, &int(&t, 2)).unwrap();
        assert!((d.total - 7f64.ln() / 2.0).abs() < 1e-15);
        assert!(d.per_prime.iter().all(|t| t.prime.p() != 2));
    }

    #[test]
    fn green_cases() {
        let t = q7();
        assert_eq!(green_contribution(&t, &int(&t, -3), &[1.0]).unwrap(), 0.0);
        let g = green_contribution(&t, &int(&t, -2), &[1.0]).unwrap();
        let expected = 0.5 * 1.0 * beta1(8.0 * PI).unwrap();
        assert!((g - expected).abs() <= 1e-15 * expected);
        assert!(green_contribution(&t, &int(&t, 2), &[1.0]).is_err());

        let cfg = FieldConfig { base_disc: 5, delta: [-7, 0], h: Some(1), ck: Some(1) };
        let quartic = build_tower(&cfg).unwrap();
        let both_negative = quartic.element(-3, 0).unwrap();
        assert!(green_contribution(&quartic, &both_negative, &[1.0, 1.0]).is_err());
        let d = arithmetic_degree(&quartic, &both_negative, &[1.0, 1.0]).unwrap();
        assert_eq!((d.case_tag, d.total), (CaseTag::Zero, 0.0));
    }

    #[test]
    fn dispatch() {
        let t = q7();
        assert_eq!(arithmetic_degree(&t, &int(&t, 3), &[1.0]).unwrap().case_tag, CaseTag::TotallyPositive);
        let neg = arithmetic_degree(&t, &int(&t, -2), &[1.0]).unwrap();
        assert_eq!(neg.case_tag, CaseTag::OneNegativePlace);
        assert_eq!(neg.total, neg.green_term);
        assert!(arithmetic_degree(&t, &int(&t, 3), &[1.0, 1.0]).is_err());
        assert!(arithmetic_degree(&t, &int(&t, 3), &[0.0]).is_err());
    }

    #[test]
    fn terms_agree_with_point_count_route() {
        let t = q7();
        for a in 1..=60 {
            let alpha = int(&t, a);
            for term in finite_degree(&t, &alpha).unwrap().per_prime {
                let via = term_from_points(&t, &alpha, &term.prime).unwrap();
                assert!((via - term.term).abs() <= 1e-14 * term.term.max(1.0), "a={a}");
            }
        }
    }
}
