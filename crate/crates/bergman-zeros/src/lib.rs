//! Zeros of random polynomials spanned by Bergman-orthonormal bases on the
//! unit disk.
//!
//! A degree-`n` sample is `P_n(z) = sum_k eta_k p_k(z)` with i.i.d. complex
//! Gaussian `eta_k` and `{p_k}` orthonormal for an area measure `h(z) dA` on
//! the disk. The crate provides:
//!
//! - the basis families and their Gram-matrix verification ([`basis`]),
//! - the reproducing kernel `K00, K01, K11` along the diagonal ([`kernel`]),
//! - the first zero intensity and its large-`n` limit ([`intensity`]),
//! - expected zero counts by closed form, contour, and area quadrature,
//!   the `2n/3` unit-disk law, boundary scaling limits, and the classical
//!   Kac baseline ([`counts`]),
//! - Monte Carlo sampling with a deterministic, thread-invariant driver
//!   ([`sampler`], [`experiment`]).
//!
//! Start with `examples/expected_count.rs` for the analytic routes or
//! `examples/monte_carlo.rs` for sampling.

pub mod basis;
pub mod counts;
pub mod error;
pub mod experiment;
pub mod intensity;
pub mod kernel;
pub mod quadrature;
pub mod sampler;

pub use basis::{BasisSpec, GramMatrix};
pub use counts::{
    boundary_ratio, expected_count_area, expected_count_contour, expected_count_disk,
    expected_count_limit, expected_count_unit_disk, kac_count_disk, kac_scaling, scaling_limit,
    ContourCount, CountEstimate, CountMethod,
};
pub use error::{Error, Result};
pub use experiment::{run_mc, ExperimentConfig, MCResult};
pub use intensity::{intensity_general, intensity_grid, intensity_limit, GridWindow};
pub use kernel::{kernel_closed_monomial, kernel_series, KernelTriple};
pub use sampler::{find_roots, sample_polynomial, RootSet, SampleStream};
