//! Root clouds: every zero of a batch of samples, written for plotting.
//!
//! Draws 300 degree-80 samples, keeps all 24000 roots, writes them to
//! `root_cloud.csv` (`sample_index,re,im`), and summarizes how tightly they
//! concentrate in an annulus around the unit circle.

use bergman_zeros::experiment::{run_mc, write_roots_csv, ExperimentConfig};
use bergman_zeros::{BasisSpec, Result};
use std::fs::File;
use std::io::BufWriter;

fn main() -> Result<()> {
    let mut config = ExperimentConfig::new(BasisSpec::ScaledMonomial, 80, vec![1.0], 300);
    config.master_seed = 7;
    config.keep_roots = true;
    let result = run_mc(&config)?;

    let path = "root_cloud.csv";
    write_roots_csv(BufWriter::new(File::create(path)?), &result)?;
    println!("wrote {path}: {} roots from {} samples", result.roots_total, result.kept);

    let roots = result.roots.as_ref().unwrap();
    let mut moduli: Vec<f64> = roots.iter().map(|(_, z)| z.norm()).collect();
    moduli.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let q = |p: f64| moduli[((moduli.len() - 1) as f64 * p) as usize];
    println!(
        "modulus quantiles: 5% {:.4}  25% {:.4}  50% {:.4}  75% {:.4}  95% {:.4}",
        q(0.05),
        q(0.25),
        q(0.50),
        q(0.75),
        q(0.95)
    );

    for half_width in [0.05, 0.1, 0.2] {
        let inside = moduli
            .iter()
            .filter(|m| (**m - 1.0).abs() < half_width)
            .count();
        println!(
            "  fraction with ||z|-1| < {half_width:<4}: {:.4}",
            inside as f64 / moduli.len() as f64
        );
    }
    println!(
        "fraction inside the unit disk: {:.4}  (expectation 2/3)",
        result.fraction_inside().unwrap()
    );
    Ok(())
}
