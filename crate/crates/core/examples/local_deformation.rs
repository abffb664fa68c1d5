//! Lifting bounds, local lengths and order profiles at nonsplit primes.

use cmdeg::deformation::{deformation_length, lift_bound_k, order_profile, LocalContext};
use cmdeg::tower::{build_tower, FieldConfig};

fn main() -> cmdeg::Result<()> {
    let t = build_tower(&FieldConfig::imaginary_quadratic(-7))?;
    for p in [3u64, 5, 7] {
        let prime = t.factor_rational_prime(p)[0];
        let ctx = LocalContext::at(&t, &prime)?;
        println!("{prime} {} e~={}", ctx.splitting, ctx.e_tilde);
        for ord in 0..6 {
            let k = lift_bound_k(&ctx, ord).map(|k| k.to_string()).unwrap_or_else(|_| "-".into());
            println!("  ord {ord}: k = {k:>3}, length = {}", deformation_length(&ctx, ord));
        }
    }
    for (d, i) in [(4, 0), (6, 4), (8, 3)] {
        println!("profile d={d} i={i}: {:?}", order_profile(d, i)?);
    }
    Ok(())
}
