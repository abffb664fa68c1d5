//! Per-prime Arakelov degree of special divisors over Q(sqrt -7).

use cmdeg::degree::arithmetic_degree;
use cmdeg::tower::{build_tower, FieldConfig};

fn main() -> cmdeg::Result<()> {
    let t = build_tower(&FieldConfig::imaginary_quadratic(-7))?;
    for a in [1, 2, 3, 7, 9, 15, 21, -2, -3] {
        let alpha = t.element(a, 0)?;
        let d = arithmetic_degree(&t, &alpha, &[1.0])?;
        println!("alpha = {a:>3}  {:<18} total {:.12}", d.case_tag.as_str(), d.total);
        for term in &d.per_prime {
            println!(
                "    {} {:<8} ord {} rho {} length {} term {:.12}",
                term.prime, term.splitting, term.ord, term.rho_shifted, term.length, term.term
            );
        }
    }
    println!("log(3)/2 = {:.12}", 3f64.ln() / 2.0);
    Ok(())
}
