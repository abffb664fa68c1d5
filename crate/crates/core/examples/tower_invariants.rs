//! Build a few towers and print their invariants and how small primes split.

use cmdeg::tower::{build_tower, validate_conditions, FieldConfig};

fn main() -> cmdeg::Result<()> {
    let configs = [
        FieldConfig::imaginary_quadratic(-7),
        FieldConfig::imaginary_quadratic(-23),
        FieldConfig::imaginary_quadratic(-15),
        FieldConfig { base_disc: 5, delta: [-7, 0], h: Some(1), ck: Some(1) },
        FieldConfig { base_disc: 5, delta: [-2, -1], h: Some(1), ck: Some(1) },
    ];
    for cfg in &configs {
        let t = build_tower(cfg)?;
        let ram: Vec<String> = t.finite_ramified().iter().map(|p| p.to_string()).collect();
        println!(
            "F disc {:>2}, delta {:<8} [K:Q]={} r={} w={:<2} h={} |C_K|={} N(d)={} ramified {}",
            t.field().disc(),
            t.delta().to_string(),
            t.k_degree(),
            t.r(),
            t.w(),
            t.class_data().h,
            t.class_data().ck,
            t.rel_disc_norm(),
            ram.join(" ")
        );
        println!("  conditions: {}", validate_conditions(&t));
        let mut line = String::from("  ");
        for p in [2u64, 3, 5, 7, 11, 13] {
            for prime in t.factor_rational_prime(p) {
                line += &format!("{prime}:{} ", t.splitting(&prime));
            }
        }
        println!("{line}");
    }

    let unramified = FieldConfig { base_disc: 12, delta: [-1, 0], h: Some(1), ck: Some(1) };
    println!("F = Q(sqrt 3), delta = -1: {}", build_tower(&unramified).unwrap_err());
    Ok(())
}
