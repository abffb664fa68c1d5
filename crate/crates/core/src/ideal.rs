//! Fractional ideals of `O_F` as exponent maps, and the ideal-counting
//! function `ρ(I) = #{J ⊆ O_K : N_{K/F}(J) = I}` built from its local factors.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;

use crate::arith;
use crate::field::{ElementF, PrimeOfF};
use crate::tower::{FieldTower, SplittingType};

/// A fractional ideal `∏ P^{e_P}`; zero exponents are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IdealF {
    exponents: BTreeMap<PrimeOfF, i64>,
}

impl IdealF {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn prime(p: PrimeOfF) -> Self {
        Self::from_primes([(p, 1)])
    }

    pub fn from_primes(iter: impl IntoIterator<Item = (PrimeOfF, i64)>) -> Self {
        let mut ideal = Self::unit();
        for (p, e) in iter {
            ideal.add_exponent(p, e);
        }
        ideal
    }

    fn add_exponent(&mut self, p: PrimeOfF, e: i64) {
        let slot = self.exponents.entry(p).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exponents.remove(&p);
        }
    }

    pub fn exponent(&self, p: &PrimeOfF) -> i64 {
        self.exponents.get(p).copied().unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.exponents.values().all(|&e| e > 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PrimeOfF, &i64)> {
        self.exponents.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &PrimeOfF> {
        self.exponents.keys()
    }

    /// `I · P^k`.
    pub fn shifted(&self, p: PrimeOfF, k: i64) -> Self {
        let mut out = self.clone();
        out.add_exponent(p, k);
        out
    }

    pub fn inverse(&self) -> Self {
        IdealF { exponents: self.exponents.iter().map(|(p, e)| (*p, -e)).collect() }
    }
}

impl std::ops::Mul for &IdealF {
    type Output = IdealF;

    fn mul(self, rhs: &IdealF) -> IdealF {
        let mut out = self.clone();
        for (p, e) in &rhs.exponents {
            out.add_exponent(*p, *e);
        }
        out
    }
}

impl fmt::Display for IdealF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("(1)");
        }
        let parts: Vec<String> = self.exponents.iter().map(|(p, e)| format!("{p}^{e}")).collect();
        f.write_str(&parts.join("*"))
    }
}

/// The principal fractional ideal `(α)`.
pub fn principal_ideal(alpha: &ElementF) -> IdealF {
    let field = alpha.field();
    // every prime dividing (α) lies over a prime dividing the numerator's norm
    // or the denominator
    let numerator_norm = {
        let [a, b] = alpha.numerator();
        ElementF::new(field, a, b, 1).expect("nonzero").norm().0
    };
    let mut rational_primes: Vec<u64> = arith::factor(numerator_norm.unsigned_abs())
        .into_iter()
        .chain(arith::factor(alpha.denominator().unsigned_abs()))
        .map(|(p, _)| p)
        .collect();
    rational_primes.sort_unstable();
    rational_primes.dedup();
    IdealF::from_primes(
        rational_primes
            .into_iter()
            .flat_map(|p| field.factor_rational_prime(p))
            .map(|prime| (prime, alpha.ord(&prime))),
    )
}

/// Local factor of `ρ` at a prime of the given splitting type, for exponent `a`.
pub fn rho_local(st: SplittingType, a: i64) -> u64 {
    if a < 0 {
        return 0;
    }
    match st {
        SplittingType::Split => a as u64 + 1,
        SplittingType::Inert => u64::from(a % 2 == 0),
        SplittingType::RamifiedInK => 1,
    }
}

/// `ρ(I)`: the number of ideals of `O_K` whose relative norm is `I`.
pub fn rho(tower: &FieldTower, ideal: &IdealF) -> u64 {
    ideal.iter().map(|(p, &e)| rho_local(tower.splitting(p), e)).product()
}

/// `N(I) = ∏ N(P)^{e_P}` as an exact rational.
pub fn ideal_norm(ideal: &IdealF) -> Ratio<i128> {
    ideal.iter().fold(Ratio::from_integer(1), |acc, (p, &e)| {
        let base = Ratio::from_integer(p.norm() as i128);
        acc * if e >= 0 { base.pow(e as i32) } else { base.recip().pow((-e) as i32) }
    })
}
