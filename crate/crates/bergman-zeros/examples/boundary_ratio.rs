//! The kernel ratio conj(K01)/(n K00) on the unit circle.
//!
//! For bases whose weight stays positive on the boundary this ratio tends to
//! (2/3) conj(z): modulus 2/3, phase -theta. The scaled monomials hit it
//! exactly at every degree; the |z-1|^2 family converges to it. A weight
//! vanishing on the whole circle changes the limit: 1-|z|^2 gives 3/4.

use bergman_zeros::counts::boundary_ratio;
use bergman_zeros::{BasisSpec, Result};
use std::f64::consts::PI;

fn main() -> Result<()> {
    let n = 1000;
    let families = [
        BasisSpec::ScaledMonomial,
        BasisSpec::ZMinusOneSquared,
        BasisSpec::weighted_power(1.0)?,
    ];

    println!("|conj(K01)/(n K00)| at n = {n} (compare 2/3 = {:.6}):", 2.0 / 3.0);
    print!("{:>8}", "theta/pi");
    for spec in &families {
        print!(" {:>22}", spec.to_string());
    }
    println!();
    for frac in [1.0 / 6.0, 1.0 / 3.0, 0.5, 2.0 / 3.0, 5.0 / 6.0] {
        print!("{frac:>8.4}");
        for spec in &families {
            let b = boundary_ratio(spec, n, frac * PI)?;
            print!(" {:>22.10}", b.norm());
        }
        println!();
    }

    println!("\nphase tracks -theta (scaled-monomial, exact):");
    for frac in [0.25, 0.5, 0.75] {
        let theta = frac * PI;
        let b = boundary_ratio(&BasisSpec::ScaledMonomial, n, theta)?;
        println!(
            "  theta = {frac:.2} pi: arg = {:+.10}   -theta = {:+.10}",
            b.arg(),
            -theta
        );
    }

    println!("\nconvergence in n for z-minus-one-squared at theta = pi/3:");
    for n in [50usize, 200, 1000, 4000] {
        let b = boundary_ratio(&BasisSpec::ZMinusOneSquared, n, PI / 3.0)?;
        println!(
            "  n = {n:>4}: modulus = {:.8}   gap to 2/3 = {:.2e}",
            b.norm(),
            (b.norm() - 2.0 / 3.0).abs()
        );
    }
    Ok(())
}
