//! `ρ((m))` from local factors against brute-force lattice enumeration.

use cmdeg::ideal::{principal_ideal, rho};
use cmdeg::oracle::ideals_of_norm;
use cmdeg::tower::{build_tower, FieldConfig};

fn main() -> cmdeg::Result<()> {
    for delta in [-7, -23] {
        let t = build_tower(&FieldConfig::imaginary_quadratic(delta))?;
        print!("Q(sqrt {delta}):");
        for m in 1..=30u64 {
            let ideal = principal_ideal(&t.element(m as i128, 0)?);
            let r = rho(&t, &ideal);
            assert_eq!(r, ideals_of_norm(delta, m));
            print!(" {m}:{r}");
        }
        println!();
    }
    Ok(())
}
