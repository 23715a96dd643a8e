//! The boundary scaling limit of expected counts.
//!
//! Shrinking disks D(0, e^{-t/2n}) keep a fixed fraction of zeros as n grows;
//! the limit of E[N]/n is 2/t + t/(1 - e^t + t). Both terms blow up as
//! t -> 0+ yet the sum tends to 2/3, matching the whole-disk law. The Kac
//! baseline has its own limit 1/t + 1/(1 - e^t) tending to 1/2.

use bergman_zeros::counts::{expected_count_disk, kac_count_disk, kac_scaling, scaling_limit};
use bergman_zeros::Result;

fn main() -> Result<()> {
    println!("{:>8} {:>14} {:>14}", "t", "bergman", "kac");
    for t in [0.01, 0.1, 0.5, 1.0, 2.0, 4.0, 8.0] {
        println!("{:>8} {:>14.8} {:>14.8}", t, scaling_limit(t)?, kac_scaling(t)?);
    }
    println!(
        "{:>8} {:>14.8} {:>14.8}   (limits 2/3 and 1/2)",
        "t -> 0", scaling_limit(1e-9)?, kac_scaling(1e-9)?
    );

    // finite degrees approach the limit curve
    println!("\nE[N_n(D(0, e^(-t/2n)))]/n against the limit, t = 1:");
    let target = scaling_limit(1.0)?;
    for n in [50usize, 200, 2000] {
        let r = (-1.0 / (2.0 * n as f64)).exp();
        let ratio = expected_count_disk(n, r)?.value / n as f64;
        println!(
            "  n = {n:>4}: {ratio:.8}   limit {target:.8}   gap {:.2e}",
            (ratio - target).abs()
        );
    }

    println!("\nsame check for the Kac ensemble, t = 1:");
    let target = kac_scaling(1.0)?;
    for n in [50usize, 200, 2000] {
        let r = (-1.0 / (2.0 * n as f64)).exp();
        let ratio = kac_count_disk(n, r)? / n as f64;
        println!(
            "  n = {n:>4}: {ratio:.8}   limit {target:.8}   gap {:.2e}",
            (ratio - target).abs()
        );
    }
    Ok(())
}
