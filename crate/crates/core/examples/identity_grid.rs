//! Both sides of the identity on a quadratic and a quartic tower.

use cmdeg::degree::arithmetic_degree;
use cmdeg::eisenstein::{b_phi, degree_from_b_phi};
use cmdeg::tower::{build_tower, FieldConfig};

fn main() -> cmdeg::Result<()> {
    let towers =
        [FieldConfig::imaginary_quadratic(-23), FieldConfig { base_disc: 5, delta: [-7, 0], h: Some(1), ck: Some(1) }];
    for cfg in &towers {
        let t = build_tower(cfg)?;
        let y = vec![0.75; t.field().places()];
        let mut worst: f64 = 0.0;
        let mut n = 0;
        for a in -6..=6 {
            for b in -3..=3 {
                if (a, b) == (0, 0) || (t.degree() == 1 && b != 0) {
                    continue;
                }
                let alpha = t.element(a, b)?;
                let deg = arithmetic_degree(&t, &alpha, &y)?.total;
                let rhs = degree_from_b_phi(&t, b_phi(&t, &alpha, &y)?);
                if deg != 0.0 {
                    worst = worst.max(((deg - rhs) / deg).abs());
                }
                n += 1;
                if n <= 6 {
                    println!("  alpha {alpha:<6} degree {deg:.15e} rhs {rhs:.15e}");
                }
            }
        }
        println!("delta {:?} over F disc {}: {n} points, max rel err {worst:.2e}", cfg.delta, cfg.base_disc);
    }
    Ok(())
}
