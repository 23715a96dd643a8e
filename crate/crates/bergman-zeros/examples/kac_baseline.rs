//! The classical Kac ensemble as a baseline, run through the same pipeline.
//!
//! Kac polynomials (plain monomial coefficients) put half their zeros in the
//! unit disk: E[N(D(0,1))] = n/2 exactly, against 2n/3 for the Bergman
//! ensemble. The custom-table basis route reproduces this with the same
//! sampler and counters.

use bergman_zeros::counts::{expected_count_unit_disk, kac_count_disk, kac_scaling, scaling_limit};
use bergman_zeros::experiment::{run_mc, ExperimentConfig};
use bergman_zeros::{BasisSpec, Result};

fn main() -> Result<()> {
    let n = 25;
    println!("expected count in the unit disk at n = {n}:");
    println!("  kac      n/2  = {:.6}", kac_count_disk(n, 1.0)?);
    println!("  bergman  2n/3 = {:.6}", expected_count_unit_disk(n).value);

    println!("\nkac counts in smaller disks (diagonal rational form):");
    for r in [0.3, 0.5, 0.7, 0.9] {
        println!("  r = {r}: {:.10}", kac_count_disk(n, r)?);
    }

    // Monte Carlo through the custom-table basis
    let mut config = ExperimentConfig::new(BasisSpec::kac_table(n), n, vec![0.5, 1.0], 4000);
    config.master_seed = 42;
    let result = run_mc(&config)?;
    println!("\nmonte carlo with the kac table ({} samples):", result.kept);
    for stat in &result.per_radius {
        let analytic = kac_count_disk(n, stat.radius)?;
        println!(
            "  r = {:>3}: MC {:.5} +- {:.5}   analytic {:.5}   z = {:+.2}",
            stat.radius,
            stat.mean,
            stat.stderr,
            analytic,
            (stat.mean - analytic) / stat.stderr
        );
    }

    println!("\nboundary scaling limits (t = 1):");
    println!("  kac      {:.8}  (-> 1/2 as t -> 0)", kac_scaling(1.0)?);
    println!("  bergman  {:.8}  (-> 2/3 as t -> 0)", scaling_limit(1.0)?);
    Ok(())
}
