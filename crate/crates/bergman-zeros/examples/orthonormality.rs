//! Gram-matrix verification of each basis family.
//!
//! Integrating p_a conj(p_b) h dA over the disk with an exactness-matched
//! quadrature must reproduce the identity matrix. Also prints the
//! square-root trick diagnostic: the k-th root of the leading coefficient,
//! which tends to 1 for bases spanning the full disk.

use bergman_zeros::basis::{gram_matrix, sut_diagnostic};
use bergman_zeros::{BasisSpec, Result};
use std::f64::consts::PI;

fn main() -> Result<()> {
    let n = 30;

    println!("max |Gram - I| entry at n = {n}:");
    for spec in [
        BasisSpec::ScaledMonomial,
        BasisSpec::weighted_power(1.0)?,
        BasisSpec::weighted_power(2.0)?,
        BasisSpec::ZMinusOneSquared,
    ] {
        let g = gram_matrix(&spec, n, None)?;
        println!(
            "  {:<22} deviation {:.3e}",
            spec.to_string(),
            g.max_identity_deviation()
        );
    }

    // the Kac table (plain monomials) is orthogonal but not normalized:
    // diagonal entries are pi/(k+1)
    let g = gram_matrix(&BasisSpec::kac_table(5), 5, None)?;
    println!("\nkac-table diagonal (expect pi/(k+1)):");
    for k in 0..=5 {
        println!(
            "  <z^{k}, z^{k}> = {:.12}   pi/{} = {:.12}",
            g.entry(k, k).re,
            k + 1,
            PI / (k as f64 + 1.0)
        );
    }

    // non-integer 2j: the radial integrand is not polynomial, quadrature
    // converges instead of being exact, and the result flags that
    let g = gram_matrix(&BasisSpec::weighted_power(0.75)?, 12, None)?;
    println!(
        "\nweighted-power j=0.75 at n=12: deviation {:.3e} (approximate quadrature: {})",
        g.max_identity_deviation(),
        g.approximate
    );

    // under-resolved quadrature is allowed but flagged
    let g = gram_matrix(&BasisSpec::ScaledMonomial, 20, Some((8, 16)))?;
    println!(
        "forced low orders (8, 16) at n=20: deviation {:.3e} (below exactness: {})",
        g.max_identity_deviation(),
        g.below_exactness
    );

    println!("\nsquare-root trick: kappa_k^(1/k) -> 1 along k");
    for spec in [BasisSpec::ScaledMonomial, BasisSpec::ZMinusOneSquared] {
        let rows = sut_diagnostic(&spec, 100)?;
        let picks: Vec<String> = rows
            .iter()
            .filter(|(k, _)| [2, 10, 50, 100].contains(k))
            .map(|(k, v)| format!("k={k}: {v:.6}"))
            .collect();
        println!("  {:<22} {}", spec.to_string(), picks.join("  "));
    }
    Ok(())
}
