//! Expected zero counts by every analytic route, side by side.
//!
//! The rational series, the contour integral of conj(K01)/K00, and area
//! quadrature of the intensity are three independent computations of the
//! same number; the table shows them agreeing to ~1e-10. The second table
//! is the exact whole-disk law E[N] = 2n/3.

use bergman_zeros::counts::{
    default_contour_nodes, expected_count_area, expected_count_contour, expected_count_disk,
    expected_count_limit, expected_count_unit_disk,
};
use bergman_zeros::{BasisSpec, Result};

fn main() -> Result<()> {
    let spec = BasisSpec::ScaledMonomial;

    println!("E[N_n(D(0,r))], scaled-monomial basis, three routes:");
    println!(
        "{:>4} {:>5} {:>16} {:>16} {:>16} {:>10}",
        "n", "r", "rational", "contour", "area", "max gap"
    );
    for n in [5usize, 25, 50] {
        for r in [0.3, 0.6, 0.9] {
            let rational = expected_count_disk(n, r)?.value;
            let contour =
                expected_count_contour(&spec, n, r, default_contour_nodes(n))?.estimate.value;
            let area = expected_count_area(&spec, n, r, None)?.value;
            let gap = (rational - contour)
                .abs()
                .max((rational - area).abs())
                .max((contour - area).abs());
            println!("{n:>4} {r:>5} {rational:>16.12} {contour:>16.12} {area:>16.12} {gap:>10.2e}");
        }
    }

    println!("\nwhole unit disk: E[N] = 2n/3 exactly");
    for n in [1usize, 3, 25, 100, 500] {
        let v = expected_count_unit_disk(n).value;
        println!("  n = {n:>3}:  {v:>12.8}  (2n/3 = {:>12.8})", 2.0 * n as f64 / 3.0);
    }

    println!("\nlarge-n limit inside the disk: 2r^2/(1-r^2)");
    for r in [0.5, 0.7] {
        let at_500 = expected_count_disk(500, r)?.value;
        let limit = expected_count_limit(r)?;
        println!(
            "  r = {r}:  E[N_500] = {at_500:.10}   limit = {limit:.10}   gap = {:.2e}",
            (at_500 - limit).abs()
        );
    }
    Ok(())
}
