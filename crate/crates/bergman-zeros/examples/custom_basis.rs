//! User-supplied bases via triangular coefficient tables.
//!
//! A table file lists one polynomial per line as `re im` coefficient pairs,
//! constant term first; line k must have k+1 pairs. This example writes a
//! small table (the degree-3 scaled monomials, perturbed rotationally by a
//! phase), loads it back through the `custom:<path>` CLI name, and runs the
//! kernel, contour count, and sampler on it.

use bergman_zeros::counts::{expected_count_area, expected_count_contour};
use bergman_zeros::sampler::sample_roots;
use bergman_zeros::{kernel_series, BasisSpec, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::io::Write;

fn main() -> Result<()> {
    let mut text = String::from("# p_k rows: re im pairs, constant term first\n");
    for k in 0..=3u32 {
        let scale = (((k + 1) as f64) / PI).sqrt();
        let phase = Complex64::from_polar(1.0, 0.3 * k as f64);
        let lead = scale * phase;
        for m in 0..=k {
            if m == k {
                text.push_str(&format!("{} {}\n", lead.re, lead.im));
            } else {
                text.push_str("0 0 ");
            }
        }
    }
    let path = std::env::temp_dir().join("rotated_monomials.table");
    std::fs::File::create(&path)?.write_all(text.as_bytes())?;
    println!("table written to {}:\n{text}", path.display());

    let spec = BasisSpec::from_cli(&format!("custom:{}", path.display()))?;
    println!("loaded basis: {spec} (max degree {})", spec.max_degree().unwrap());

    // unimodular phases leave |p_k| unchanged, so the kernel and all counts
    // match the scaled-monomial ensemble at this degree
    let z = Complex64::new(0.4, 0.3);
    let custom = kernel_series(&spec, 3, z)?;
    let reference = kernel_series(&BasisSpec::ScaledMonomial, 3, z)?;
    println!("\nK00 at z = {z}: custom {:.12}, scaled-monomial {:.12}", custom.k00, reference.k00);

    let c = expected_count_contour(&spec, 3, 0.8, 64)?;
    let a = expected_count_area(&spec, 3, 0.8, None)?;
    println!(
        "E[N(D(0,0.8))]: contour {:.10}, area {:.10} (imag residual {:.1e})",
        c.estimate.value, a.value, c.imag_residual
    );

    let rs = sample_roots(&spec, 3, 11, 0)?;
    println!(
        "\none sample: {} roots, max residual {:.1e}:",
        rs.roots.len(),
        rs.max_residual
    );
    for root in &rs.roots {
        println!("  {:.6} {:+.6}i  (|z| = {:.4})", root.re, root.im, root.norm());
    }

    // degree requests beyond the table fail cleanly
    let err = kernel_series(&spec, 10, z).unwrap_err();
    println!("\nasking for degree 10 from a degree-3 table: {err}");
    Ok(())
}
