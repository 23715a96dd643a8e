//! Convergence tables: expected counts approaching the limit laws.
//!
//! At r = 1 the normalized count E[N]/n approaches 2/3 for disk-spanning
//! bases (the scaled monomials sit on it exactly); inside the disk the count
//! approaches 2r^2/(1-r^2). The gap column quantifies the approach.

use bergman_zeros::experiment::convergence_report;
use bergman_zeros::{BasisSpec, Result};

fn print_report(title: &str, spec: &BasisSpec, degrees: &[usize], r: f64) -> Result<()> {
    let rep = convergence_report(spec, degrees, r)?;
    println!("{title} (r = {r}):");
    println!("{:>6} {:>16} {:>16} {:>12}", "n", "count", "reference", "gap");
    for row in rep.rows {
        println!(
            "{:>6} {:>16.10} {:>16.10} {:>12.3e}",
            row.n, row.count, row.reference, row.gap
        );
    }
    println!();
    Ok(())
}

fn main() -> Result<()> {
    print_report(
        "scaled-monomial, whole disk: exactly on the 2n/3 law",
        &BasisSpec::ScaledMonomial,
        &[10, 50, 200],
        1.0,
    )?;
    print_report(
        "z-minus-one-squared, whole disk: converging to 2n/3",
        &BasisSpec::ZMinusOneSquared,
        &[25, 50, 100, 200],
        1.0,
    )?;
    print_report(
        "scaled-monomial, interior disk: converging to 2r^2/(1-r^2)",
        &BasisSpec::ScaledMonomial,
        &[5, 10, 20, 40, 80],
        0.6,
    )?;
    print_report(
        "z-minus-one-squared, interior disk",
        &BasisSpec::ZMinusOneSquared,
        &[25, 50, 100, 200],
        0.5,
    )?;
    Ok(())
}
