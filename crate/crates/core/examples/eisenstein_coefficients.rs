//! Incoherent classes, Diff sets and the central derivative b_phi by both routes.

use cmdeg::eisenstein::{b_phi, b_phi_closed, coeff_derivative_for_class, diff_set, enumerate_xi, value_at_zero};
use cmdeg::tower::{build_tower, FieldConfig};

fn main() -> cmdeg::Result<()> {
    let t = build_tower(&FieldConfig::imaginary_quadratic(-15))?;
    let y = [1.0];
    let classes = enumerate_xi(&t);
    for a in [1, 2, 3, 5, 17, -1] {
        let alpha = t.element(a, 0)?;
        for c in &classes {
            println!(
                "alpha {a:>3} c {}  Diff {:<14} E(0) = {}  E'(0) = {:.12}",
                c,
                diff_set(&t, &alpha, c).to_string(),
                value_at_zero(&t, &alpha, &y, c)?,
                coeff_derivative_for_class(&t, &alpha, &y, c)?
            );
        }
        println!("  b_phi sum {:.15e} closed {:.15e}", b_phi(&t, &alpha, &y)?, b_phi_closed(&t, &alpha, &y)?);
    }
    Ok(())
}
