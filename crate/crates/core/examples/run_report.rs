//! Drive the harness from an in-memory config and print the JSON report.

use cmdeg::config::RunConfig;
use cmdeg::verify::{check_identity, prepare};

fn main() -> cmdeg::Result<()> {
    let cfg: RunConfig = "
        # Q(sqrt -11), a handful of alphas at two heights
        delta = -11
        alphas = 3; -1; 5; 1/3
        y = 1; 4
    "
    .parse()?;
    let report = check_identity(&prepare(&cfg)?)?;
    print!("{}", report.to_json());
    eprintln!("{}/{} pass", report.summary.n_pass, report.summary.n_checked);
    Ok(())
}
