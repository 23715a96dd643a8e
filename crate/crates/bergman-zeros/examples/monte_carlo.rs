//! Monte Carlo zero counts against the analytic predictions.
//!
//! Draws 4000 degree-25 samples, counts roots inside several disks, and
//! compares with the exact expectations (including 2n/3 on the whole disk).
//! The histogram shows root moduli piling up near |z| = 1.

use bergman_zeros::counts::{expected_count_disk, expected_count_unit_disk};
use bergman_zeros::experiment::{run_mc, ExperimentConfig};
use bergman_zeros::{BasisSpec, Result};

fn main() -> Result<()> {
    let mut config = ExperimentConfig::new(
        BasisSpec::ScaledMonomial,
        25,
        vec![0.5, 0.9, 1.0],
        4000,
    );
    config.master_seed = 1;
    let result = run_mc(&config)?;

    println!(
        "degree {} | {} samples kept, {} discarded, max residual {:.1e}",
        result.degree, result.kept, result.discarded, result.max_residual
    );
    println!("{:>5} {:>12} {:>12} {:>10} {:>8}", "r", "MC mean", "analytic", "stderr", "z-score");
    for stat in &result.per_radius {
        let analytic = if stat.radius == 1.0 {
            expected_count_unit_disk(result.degree).value
        } else {
            expected_count_disk(result.degree, stat.radius)?.value
        };
        println!(
            "{:>5} {:>12.5} {:>12.5} {:>10.5} {:>8.2}",
            stat.radius,
            stat.mean,
            analytic,
            stat.stderr,
            (stat.mean - analytic) / stat.stderr
        );
    }

    if let Some(f) = result.fraction_inside() {
        println!(
            "\nfraction of roots inside the unit disk: {f:.4}  (expectation 2/3 = {:.4})",
            2.0 / 3.0
        );
    }

    println!("\nroot modulus histogram (bin width {:.3}):", result.histogram.bin_width());
    let peak = *result.histogram.counts.iter().max().unwrap() as f64;
    for (i, &count) in result.histogram.counts.iter().enumerate().step_by(3) {
        if i >= 60 {
            break;
        }
        let lo = i as f64 * result.histogram.bin_width();
        let bar = "#".repeat((count as f64 / peak * 60.0).round() as usize);
        println!("  {lo:>5.3} | {bar}");
    }
    println!(
        "  overflow (|z| >= 1.5): {} of {}",
        result.histogram.overflow(),
        result.histogram.total
    );
    Ok(())
}
