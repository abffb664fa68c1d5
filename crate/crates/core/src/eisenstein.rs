//! The analytic side: incoherent classes, `Diff` sets, stripped local
//! Whittaker values and derivatives at `s = 0`, and the central derivative
//! `b_Φ(α, y)` of the `α`-th Fourier coefficient.
//!
//! Local values omit the prefactor `χ_v(−1)·ε(½, χ_v, c_vψ_v)`; the product of
//! those prefactors over all places is `−1`, applied once per coefficient.
//! Archimedean values also omit `y_v^{1/2}·e^{2πiα_vτ_v}`, so everything is a
//! coefficient of `q^α`.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::fmt;

use crate::beta::beta1;
use crate::deformation::epsilon;
use crate::degree::{check_y, summation_primes};
use crate::error::{Error, Result};
use crate::field::{ElementF, PrimeOfF};
use crate::ideal::{principal_ideal, rho, rho_local};
use crate::tower::{FieldTower, SplittingType};

/// A sign datum on the finite ramified primes with product `−1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncoherentClass {
    signs: BTreeMap<PrimeOfF, i8>,
}

impl IncoherentClass {
    pub fn new(signs: BTreeMap<PrimeOfF, i8>) -> Result<Self> {
        if signs.values().any(|&s| s != 1 && s != -1) {
            return Err(Error::Domain("class signs must be +1 or -1".into()));
        }
        if signs.values().map(|&s| s as i32).product::<i32>() != -1 {
            return Err(Error::Domain("class signs must multiply to -1".into()));
        }
        Ok(IncoherentClass { signs })
    }

    /// `c_P` at a finite prime; `+1` away from the ramified primes.
    pub fn sign(&self, prime: &PrimeOfF) -> i32 {
        self.signs.get(prime).map_or(1, |&s| s as i32)
    }

    pub fn signs(&self) -> &BTreeMap<PrimeOfF, i8> {
        &self.signs
    }
}

impl fmt::Display for IncoherentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.signs.values().map(|&s| if s > 0 { "+" } else { "-" }).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All incoherent classes: sign vectors over the ramified primes, in order of
/// the bitmask whose bit `i` marks a `−` at the `i`-th ramified prime.
pub fn enumerate_xi(tower: &FieldTower) -> Vec<IncoherentClass> {
    let primes = tower.finite_ramified();
    let m = primes.len();
    (0u64..1 << m)
        .filter(|mask| mask.count_ones() % 2 == 1)
        .map(|mask| {
            let signs = primes.iter().enumerate().map(|(i, p)| (*p, if mask >> i & 1 == 1 { -1 } else { 1 })).collect();
            IncoherentClass { signs }
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffSet {
    pub finite: BTreeSet<PrimeOfF>,
    pub arch: BTreeSet<usize>,
}

impl DiffSet {
    pub fn len(&self) -> usize {
        self.finite.len() + self.arch.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for DiffSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.finite.iter().map(|p| p.to_string()).collect();
        parts.extend(self.arch.iter().map(|v| format!("inf{v}")));
        write!(f, "{{{}}}", parts.join(" "))
    }
}

/// `χ_P(αc)` at a finite prime.
pub fn chi_alpha_c(tower: &FieldTower, alpha: &ElementF, c: &IncoherentClass, prime: &PrimeOfF) -> i32 {
    tower.local_character(alpha, prime) * c.sign(prime)
}

/// Places where `χ_v(αc) = −1`.
pub fn diff_set(tower: &FieldTower, alpha: &ElementF, c: &IncoherentClass) -> DiffSet {
    let finite = summation_primes(tower, alpha).into_iter().filter(|p| chi_alpha_c(tower, alpha, c, p) == -1).collect();
    let arch = (0..tower.field().places()).filter(|&v| alpha.sign_at(v) < 0).collect();
    DiffSet { finite, arch }
}

/// Stripped local Whittaker data at `s = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WhittakerEval {
    pub value0: f64,
    pub deriv0: f64,
}

impl WhittakerEval {
    fn value(v: f64) -> Self {
        WhittakerEval { value0: v, deriv0: 0.0 }
    }

    fn vanishing(d: f64) -> Self {
        WhittakerEval { value0: 0.0, deriv0: d }
    }
}

pub fn whittaker_finite(tower: &FieldTower, prime: &PrimeOfF, alpha: &ElementF, c: &IncoherentClass) -> WhittakerEval {
    let ord = alpha.ord(prime);
    if ord < 0 {
        return WhittakerEval::value(0.0);
    }
    let half_ord_log = (ord + 1) as f64 / 2.0 * prime.log_norm();
    match tower.splitting(prime) {
        SplittingType::Split => WhittakerEval::value((ord + 1) as f64),
        SplittingType::Inert => {
            if ord % 2 == 0 {
                WhittakerEval::value(1.0)
            } else {
                let r = rho_local(SplittingType::Inert, ord - 1) as f64;
                WhittakerEval::vanishing(half_ord_log * r)
            }
        }
        SplittingType::RamifiedInK => {
            let base = 2.0 / (prime.norm() as f64).sqrt() * rho_local(SplittingType::RamifiedInK, ord) as f64;
            if chi_alpha_c(tower, alpha, c, prime) == 1 {
                WhittakerEval::value(base)
            } else {
                WhittakerEval::vanishing(half_ord_log * base)
            }
        }
    }
}

pub fn whittaker_arch(alpha_v: f64, y_v: f64) -> Result<WhittakerEval> {
    if alpha_v == 0.0 || !alpha_v.is_finite() {
        return Err(Error::Domain(format!("alpha_v must be nonzero and finite, got {alpha_v}")));
    }
    if !(y_v > 0.0 && y_v.is_finite()) {
        return Err(Error::Domain(format!("y_v must be positive, got {y_v}")));
    }
    if alpha_v > 0.0 {
        Ok(WhittakerEval::value(2.0))
    } else {
        Ok(WhittakerEval::vanishing(beta1(4.0 * PI * (y_v * alpha_v).abs())?))
    }
}

/// Finite and archimedean evaluations.
type LocalFactors = (Vec<(PrimeOfF, WhittakerEval)>, Vec<(usize, WhittakerEval)>);

/// Every place with a nontrivial local factor, each with its evaluation.
fn local_factors(tower: &FieldTower, alpha: &ElementF, y: &[f64], c: &IncoherentClass) -> Result<LocalFactors> {
    check_y(tower, y)?;
    let finite =
        summation_primes(tower, alpha).into_iter().map(|p| (p, whittaker_finite(tower, &p, alpha, c))).collect();
    let mut arch = Vec::new();
    for (v, &y_v) in y.iter().enumerate() {
        // the exact sign decides, not the rounded embedding
        let alpha_v = alpha.sign_at(v) as f64 * alpha.embedding(v).abs();
        arch.push((v, whittaker_arch(alpha_v, y_v)?));
    }
    Ok((finite, arch))
}

/// Derivative at `s = 0` of the `q^α` coefficient of the Eisenstein series
/// attached to `c`.
pub fn coeff_derivative_for_class(tower: &FieldTower, alpha: &ElementF, y: &[f64], c: &IncoherentClass) -> Result<f64> {
    let diff = diff_set(tower, alpha, c);
    let (finite, arch) = local_factors(tower, alpha, y, c)?;
    if diff.len() != 1 {
        return Ok(0.0);
    }
    let mut product = -1.0;
    for (p, w) in &finite {
        product *= if diff.finite.contains(p) { w.deriv0 } else { w.value0 };
    }
    for (v, w) in &arch {
        product *= if diff.arch.contains(v) { w.deriv0 } else { w.value0 };
    }
    Ok(product + 0.0)
}

/// The `q^α` coefficient at `s = 0`; an exact zero for incoherent `c`.
pub fn value_at_zero(tower: &FieldTower, alpha: &ElementF, y: &[f64], c: &IncoherentClass) -> Result<f64> {
    let (finite, arch) = local_factors(tower, alpha, y, c)?;
    let product = finite.iter().map(|(_, w)| w.value0).chain(arch.iter().map(|(_, w)| w.value0));
    Ok(-product.product::<f64>() + 0.0)
}

/// `b_Φ(α, y)`: the sum over `Ξ` of the per-class derivatives.
pub fn b_phi(tower: &FieldTower, alpha: &ElementF, y: &[f64]) -> Result<f64> {
    let mut total = 0.0;
    for c in enumerate_xi(tower) {
        total += coeff_derivative_for_class(tower, alpha, y, &c)?;
    }
    Ok(total)
}

/// `b_Φ(α, y)` from the closed form.
pub fn b_phi_closed(tower: &FieldTower, alpha: &ElementF, y: &[f64]) -> Result<f64> {
    b_phi_closed_with(tower, alpha, y, epsilon, -1.0)
}

/// The closed form with the shift exponent and global sign as parameters.
/// Exposed so that a corrupted convention can be shown to break the identity.
pub fn b_phi_closed_with(
    tower: &FieldTower,
    alpha: &ElementF,
    y: &[f64],
    eps: impl Fn(SplittingType) -> Result<i64>,
    global_sign: f64,
) -> Result<f64> {
    check_y(tower, y)?;
    let scale = global_sign * 2f64.powi(tower.r() as i32 - 1) / (tower.rel_disc_norm() as f64).sqrt();
    let negative: Vec<usize> = (0..tower.field().places()).filter(|&v| alpha.sign_at(v) < 0).collect();
    match negative[..] {
        [] => {
            let ideal = principal_ideal(alpha);
            let mut sum = 0.0;
            for p in summation_primes(tower, alpha) {
                let st = tower.splitting(&p);
                if st.is_split() {
                    continue;
                }
                let ord = alpha.ord(&p);
                let r = rho(tower, &ideal.shifted(p, -eps(st)?));
                sum += ((ord + 1) * r as i64) as f64 * p.log_norm();
            }
            Ok(scale * sum + 0.0)
        }
        [v] => {
            let r = rho(tower, &principal_ideal(alpha));
            if r == 0 {
                return Ok(0.0);
            }
            let t = 4.0 * PI * (y[v] * alpha.embedding(v)).abs();
            Ok(scale * r as f64 * beta1(t)?)
        }
        _ => Ok(0.0),
    }
}

/// `−|C_K|/w(K) · √N(d_{K/F}) / (2^{r−1}·[K:Q]) · b`.
pub fn degree_from_b_phi(tower: &FieldTower, b: f64) -> f64 {
    let cd = tower.class_data();
    let mass = cd.ck as f64 / tower.w() as f64;
    -mass * (tower.rel_disc_norm() as f64).sqrt() / (2f64.powi(tower.r() as i32 - 1) * tower.k_degree() as f64) * b
        + 0.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::{build_tower, FieldConfig};

    fn iq(d: i64) -> FieldTower {
        build_tower(&FieldConfig::imaginary_quadratic(d)).unwrap()
    }

    #[test]
    fn xi_sizes() {
        assert_eq!(enumerate_xi(&iq(-7)).len(), 1);
        let xi = enumerate_xi(&iq(-15));
        assert_eq!(xi.len(), 2);
        assert_eq!(xi[0].to_string(), "(-,+)");
        assert_eq!(xi[1].to_string(), "(+,-)");
        assert_eq!(enumerate_xi(&iq(-231)).len(), 4);
    }

    #[test]
    fn worked_instance() {
        let t = iq(-7);
        let alpha = t.element(3, 0).unwrap();
        let c = &enumerate_xi(&t)[0];
        let diff = diff_set(&t, &alpha, c);
        assert_eq!(diff.to_string(), "{(3)}");
        let expected = -(4.0 / 7f64.sqrt()) * 3f64.ln();
        let b = b_phi(&t, &alpha, &[1.0]).unwrap();
        assert!((b - expected).abs() < 1e-14);
        assert!((b_phi_closed(&t, &alpha, &[1.0]).unwrap() - expected).abs() < 1e-14);
        assert_eq!(value_at_zero(&t, &alpha, &[1.0], c).unwrap().to_bits(), 0f64.to_bits());
        assert!((degree_from_b_phi(&t, b) - 3f64.ln() / 2.0).abs() < 1e-14);
    }

    #[test]
    fn negative_alpha() {
        let t = iq(-7);
        let alpha = t.element(-2, 0).unwrap();
        let c = &enumerate_xi(&t)[0];
        assert_eq!(diff_set(&t, &alpha, c).to_string(), "{inf0}");
        let expected = -(2.0 / 7f64.sqrt()) * 2.0 * beta1(8.0 * PI).unwrap();
        let b = b_phi(&t, &alpha, &[1.0]).unwrap();
        assert!(((b - expected) / expected).abs() < 1e-13);
        let closed = b_phi_closed(&t, &alpha, &[1.0]).unwrap();
        assert!(((closed - expected) / expected).abs() < 1e-13);
    }

    #[test]
    fn local_values() {
        let t = iq(-7);
        let c = &enumerate_xi(&t)[0];
        let p = |n| t.factor_rational_prime(n)[0];
        let w = whittaker_finite(&t, &p(3), &t.element(3, 0).unwrap(), c);
        assert_eq!(w.value0, 0.0);
        assert!((w.deriv0 - 3f64.ln()).abs() < 1e-15);
        let w = whittaker_finite(&t, &p(2), &t.element(4, 0).unwrap(), c);
        assert_eq!(w.value0, 3.0);
        assert_eq!(whittaker_arch(3.0, 0.7).unwrap().value0, 2.0);
        assert!(whittaker_arch(0.0, 1.0).is_err());
        assert!(whittaker_arch(-2.0, 1e6).unwrap().deriv0 < 1e-300);
    }

    #[test]
    fn corrupted_conventions_are_visible() {
        let t = iq(-7);
        let alpha = t.element(3, 0).unwrap();
        let good = b_phi(&t, &alpha, &[1.0]).unwrap();
        let flipped = |st: SplittingType| epsilon(st).map(|e| 1 - e);
        let bad = b_phi_closed_with(&t, &alpha, &[1.0], flipped, -1.0).unwrap();
        assert!((bad - good).abs() > 1e-3);
        let sign = b_phi_closed_with(&t, &alpha, &[1.0], epsilon, 1.0).unwrap();
        assert!((sign + good).abs() < 1e-14);
    }
}
