//! The exponential integral and the archimedean contribution as y grows.

use cmdeg::beta::{beta1, beta1_scaled};
use cmdeg::degree::green_contribution;
use cmdeg::oracle::beta1_quadrature;
use cmdeg::tower::{build_tower, FieldConfig};

fn main() -> cmdeg::Result<()> {
    for t in [0.1, 1.0, 2.0, 10.0, 50.0] {
        let b = beta1(t)?;
        println!("beta1({t:>4}) = {b:.15e}  quadrature {:.15e}", beta1_quadrature(t));
    }
    println!("e^t beta1(t) at t = 500: {:.15e}", beta1_scaled(500.0)?);

    let tower = build_tower(&FieldConfig::imaginary_quadratic(-7))?;
    let alpha = tower.element(-2, 0)?;
    for y in [0.01, 0.1, 0.5, 1.0, 5.0, 50.0] {
        println!("y = {y:>5}: green term {:.15e}", green_contribution(&tower, &alpha, &[y])?);
    }
    Ok(())
}
