//! `β₁(t) = ∫₁^∞ e^{−tu} du/u`, the exponential integral `E₁(t)`.
//!
//! Power series for `t ≤ 1`, modified-Lentz continued fraction above.

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const MAX_ITER: usize = 10_000;

pub fn beta1(t: f64) -> Result<f64> {
    check(t)?;
    if t <= 1.0 {
        Ok(series(t))
    } else {
        Ok(continued_fraction_scaled(t) * (-t).exp())
    }
}

/// `e^t·β₁(t)`, finite for every `t > 0` (no overflow or underflow for large `t`).
pub fn beta1_scaled(t: f64) -> Result<f64> {
    check(t)?;
    if t <= 1.0 {
        Ok(series(t) * t.exp())
    } else {
        Ok(continued_fraction_scaled(t))
    }
}

fn check(t: f64) -> Result<()> {
    if t.is_finite() && t > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("beta1 needs t > 0, got {t}")))
    }
}

fn series(t: f64) -> f64 {
    // E₁(t) = −γ − ln t − Σ_{k≥1} (−t)^k / (k·k!)
    let mut sum = 0.0;
    let mut fact_term = 1.0; // (−t)^k / k!
    for k in 1..MAX_ITER {
        fact_term *= -t / k as f64;
        let term = fact_term / k as f64;
        sum += term;
        if term.abs() < f64::EPSILON * sum.abs() * 0.25 {
            break;
        }
    }
    -EULER_GAMMA - t.ln() - sum
}

fn continued_fraction_scaled(t: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = t + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < f64::EPSILON {
            break;
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        // mpmath e1 at 30 digits
        let cases = [
            (1.0, 0.219_383_934_395_520_27),
            (0.1, 1.822_923_958_419_390_6),
            (2.0, 0.048_900_510_708_061_12),
            (10.0, 4.156_968_929_685_324e-6),
        ];
        for (t, v) in cases {
            let got = beta1(t).unwrap();
            assert!(((got - v) / v).abs() < 1e-13, "t={t}: {got} vs {v}");
        }
    }

    #[test]
    fn continuity_at_switch() {
        let below = series(1.0);
        let above = continued_fraction_scaled(1.0) * (-1.0f64).exp();
        assert!((below - above).abs() < 1e-14);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(beta1(0.0).is_err());
        assert!(beta1(-1.0).is_err());
        assert!(beta1(f64::NAN).is_err());
    }

    #[test]
    fn integrand_bound_and_scaling() {
        for t in [1.0, 2.0, 5.0, 20.0, 100.0] {
            assert!(beta1(t).unwrap() < (-t).exp() / t);
        }
        let t = 500.0;
        assert!((beta1_scaled(t).unwrap() * t - 1.0).abs() < 1e-2);
    }
}
