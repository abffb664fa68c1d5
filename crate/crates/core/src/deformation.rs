//! Numeric output of the local deformation theory at a nonsplit prime: the
//! shift exponent `ε_P`, the lifting bound `k`, the length of the local ring
//! at a divisor point, and the order profile of a Dieudonné generator.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::field::PrimeOfF;
use crate::ideal::rho_local;
use crate::tower::{FieldTower, SplittingType};

/// `ε_P`: 1 when `K/F` is unramified (inert) at `P`, 0 when ramified.
pub fn epsilon(st: SplittingType) -> Result<i64> {
    match st {
        SplittingType::Inert => Ok(1),
        SplittingType::RamifiedInK => Ok(0),
        SplittingType::Split => {
            Err(Error::Domain("epsilon is undefined at split primes; special divisors have no points there".into()))
        }
    }
}

/// Data at a nonsplit prime needed by the deformation formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalContext {
    pub prime: PrimeOfF,
    pub splitting: SplittingType,
    /// Ramification index in `K̃/F` of the prime above `P` picked out by the
    /// special embedding.
    pub e_tilde: u32,
}

impl LocalContext {
    pub fn new(prime: PrimeOfF, splitting: SplittingType, e_tilde: u32) -> Result<Self> {
        if splitting.is_split() {
            return Err(Error::Domain(format!("{prime} is split; no local context")));
        }
        if e_tilde == 0 {
            return Err(Error::Domain("ramification index must be positive".into()));
        }
        Ok(LocalContext { prime, splitting, e_tilde })
    }

    /// Context at `P` read off the tower.
    pub fn at(tower: &FieldTower, prime: &PrimeOfF) -> Result<Self> {
        Self::new(*prime, tower.splitting(prime), tower.closure_ramification(prime))
    }
}

/// The largest `k` such that a homomorphism of norm `α` (with `ord_P α = a`)
/// lifts to `W̃/m^k`: `k = ½·ord_{K̃}(α·P) = ½·ẽ·(a+1)`.
///
/// Errors when no homomorphism of that norm exists, i.e. when
/// `ρ_P(α·P^{−ε}) = 0`.
pub fn lift_bound_k(ctx: &LocalContext, a: i64) -> Result<Ratio<i64>> {
    let eps = epsilon(ctx.splitting)?;
    if rho_local(ctx.splitting, a - eps) == 0 {
        return Err(Error::Domain(format!("no homomorphism with ord = {a} at {} ({})", ctx.prime, ctx.splitting)));
    }
    // ord at the prime of K̃ of α·p_F
    let ord_closure = ctx.e_tilde as i64 * (a + 1);
    Ok(Ratio::new(ord_closure, 2))
}

/// Length of the strictly Henselian local ring at a divisor point:
/// `½·ẽ·(a + 1)`.
pub fn deformation_length(ctx: &LocalContext, a: i64) -> Ratio<i64> {
    Ratio::new(ctx.e_tilde as i64 * (a + 1), 2)
}

/// Row `r ↦ ord_{ψ^r}(s)` for a generator `s` of the Hom-module when the
/// special embedding restricts to `ψ^i` and its conjugate to `ψ^{i+d/2}`:
/// 1 on the cyclic window `i+1, …, i+d/2`, 0 elsewhere.
pub fn order_profile(d: usize, i: usize) -> Result<Vec<u8>> {
    if d == 0 || !d.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "order profile needs an even positive degree (conjugation is an involution); got d = {d}"
        )));
    }
    if i >= d {
        return Err(Error::Domain(format!("index i = {i} out of range for d = {d}")));
    }
    let mut profile = vec![0u8; d];
    for step in 1..=d / 2 {
        profile[(i + step) % d] = 1;
    }
    Ok(profile)
}
