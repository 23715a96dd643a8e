//! Sampling random polynomials and finding their zeros.
//!
//! Coefficient draws come from per-sample counter-mode RNG streams, so sample
//! `i` of a run is the same no matter how samples are scheduled across
//! threads. Roots come from an Aberth-Ehrlich iteration with a residual
//! certificate.

use crate::basis::BasisSpec;
use crate::error::{Error, Result};
use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Relative threshold below which leading coefficients are treated as zero.
pub const TRIM_THRESHOLD: f64 = 1e-13;

/// Deterministic per-sample RNG: one master seed, one independent stream per
/// sample index.
pub struct SampleStream {
    rng: ChaCha12Rng,
}

impl SampleStream {
    pub fn new(master_seed: u64, sample_index: u64) -> Self {
        let mut rng = ChaCha12Rng::seed_from_u64(master_seed);
        rng.set_stream(sample_index);
        SampleStream { rng }
    }

    fn uniform_open(&mut self) -> f64 {
        // in (0, 1]: safe to pass to ln
        1.0 - (self.rng.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }

    /// One draw of `alpha + i beta` with independent standard normal parts
    /// (`E|eta|^2 = 2`), via Box-Muller.
    pub fn complex_gaussian(&mut self) -> Complex64 {
        let u1 = self.uniform_open();
        let u2 = self.uniform_open();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = std::f64::consts::TAU * u2;
        Complex64::new(radius * angle.cos(), radius * angle.sin())
    }
}

/// A drawn polynomial, stored as monomial coefficients (constant term first).
#[derive(Debug, Clone)]
pub struct PolynomialSample {
    pub coeffs: Vec<Complex64>,
    pub eta: Vec<Complex64>,
    pub degree: usize,
    pub sample_index: u64,
}

/// Draw `P_n = sum eta_k p_k` for the given basis and expand it onto
/// monomials.
pub fn sample_polynomial(
    spec: &BasisSpec,
    n: usize,
    master_seed: u64,
    sample_index: u64,
) -> Result<PolynomialSample> {
    spec.check_degree(n)?;
    let mut stream = SampleStream::new(master_seed, sample_index);
    let eta: Vec<Complex64> = (0..=n).map(|_| stream.complex_gaussian()).collect();
    let mut coeffs = vec![Complex64::ZERO; n + 1];
    for (k, &e) in eta.iter().enumerate() {
        let p = crate::basis::expand_to_monomials(spec, k)?;
        for (m, &c) in p.coefficients().iter().enumerate() {
            coeffs[m] += e * c;
        }
    }
    Ok(PolynomialSample {
        coeffs,
        eta,
        degree: n,
        sample_index,
    })
}

/// Roots of one sample plus solver diagnostics.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub iterations: usize,
    /// Largest relative backward error `|p(z)| / sum |c_k||z|^k` over roots.
    pub max_residual: f64,
    /// Leading coefficients dropped as numerically zero.
    pub trimmed: usize,
    pub original_degree: usize,
}

impl RootSet {
    pub fn count_in_disk(&self, r: f64) -> usize {
        self.roots.iter().filter(|z| z.norm() < r).count()
    }
}

/// Horner evaluation of `p`, `p'`, and the coefficient-magnitude bound
/// `sum |c_k||z|^k`, rescaled on the fly so the bound cannot overflow.
/// Returns `(p, p', bound, 2^exp scale)`: true values are `p * 2^exp` etc.
fn horner_with_bound(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64, f64, i32) {
    let az = z.norm();
    let mut v = *coeffs.last().unwrap();
    let mut dv = Complex64::ZERO;
    let mut bound = v.norm();
    let mut exp = 0i32;
    for &c in coeffs.iter().rev().skip(1) {
        dv = dv * z + v;
        v = v * z + c;
        bound = bound * az + c.norm();
        if bound > 1e200 {
            let scale = (2.0f64).powi(-600);
            v *= scale;
            dv *= scale;
            bound *= scale;
            exp += 600;
        }
    }
    (v, dv, bound, exp)
}

/// All roots of the polynomial with the given monomial coefficients
/// (constant term first) by the Aberth-Ehrlich method.
///
/// Leading coefficients within [`TRIM_THRESHOLD`] (relative) of zero are
/// dropped first; fails with a numerical diagnostic on the zero polynomial or
/// if the iteration cannot certify small residuals.
pub fn find_roots(coeffs: &[Complex64]) -> Result<RootSet> {
    let original_degree = coeffs.len().saturating_sub(1);
    let max_mag = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if max_mag <= 0.0 || !max_mag.is_finite() {
        return Err(Error::Conditioning(
            "cannot find roots of a zero or non-finite polynomial".into(),
        ));
    }
    let mut work: Vec<Complex64> = coeffs.to_vec();
    let mut trimmed = 0usize;
    while work.len() > 1 && work.last().unwrap().norm() <= TRIM_THRESHOLD * max_mag {
        work.pop();
        trimmed += 1;
    }
    // deflate roots at the origin: with vanishing low-order coefficients the
    // relative backward error near z = 0 is ~1 no matter how accurate the
    // approximant, so they must come out before the iteration
    let mut origin_roots = 0usize;
    while work.len() > 1 && work[0].norm() <= TRIM_THRESHOLD * max_mag {
        work.remove(0);
        origin_roots += 1;
    }
    let d = work.len() - 1;
    if d == 0 {
        return Ok(RootSet {
            roots: vec![Complex64::ZERO; origin_roots],
            iterations: 0,
            max_residual: 0.0,
            trimmed,
            original_degree,
        });
    }

    // initial guesses on a circle inside the Cauchy root bound
    let lead = work[d].norm();
    let cauchy = 1.0 + work[..d].iter().map(|c| c.norm()).fold(0.0f64, f64::max) / lead;
    let r0 = 0.8 * cauchy.min(1e3);
    let mut z: Vec<Complex64> = (0..d)
        .map(|m| Complex64::from_polar(r0, std::f64::consts::TAU * m as f64 / d as f64 + 0.4))
        .collect();

    const MAX_ITER: usize = 200;
    const STEP_TOL: f64 = 1e-13;
    let mut iterations = 0;
    for iter in 0..MAX_ITER {
        iterations = iter + 1;
        let mut max_step = 0.0f64;
        for i in 0..d {
            let (v, dv, _, _) = horner_with_bound(&work, z[i]);
            if v == Complex64::ZERO {
                continue;
            }
            let newton = if dv == Complex64::ZERO {
                // perturb off a critical point
                Complex64::new(1e-8, 1e-8)
            } else {
                v / dv
            };
            let mut repulsion = Complex64::ZERO;
            for j in 0..d {
                if j != i {
                    repulsion += (z[i] - z[j]).finv();
                }
            }
            let denom = Complex64::ONE - newton * repulsion;
            let step = if denom == Complex64::ZERO { newton } else { newton / denom };
            z[i] -= step;
            max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
        }
        if max_step <= STEP_TOL {
            break;
        }
    }

    let mut max_residual = 0.0f64;
    for &zi in &z {
        if !zi.re.is_finite() || !zi.im.is_finite() {
            return Err(Error::Conditioning("root iteration diverged".into()));
        }
        let (v, _, bound, _) = horner_with_bound(&work, zi);
        if bound > 0.0 {
            max_residual = max_residual.max(v.norm() / bound);
        }
    }
    // NaN must fail the certificate, hence the nan check rather than `> 1e-8`
    if max_residual.is_nan() || max_residual > 1e-8 {
        return Err(Error::Conditioning(format!(
            "root iteration failed to certify residuals: max relative residual {max_residual:.3e}"
        )));
    }
    z.extend(std::iter::repeat_n(Complex64::ZERO, origin_roots));
    Ok(RootSet {
        roots: z,
        iterations,
        max_residual,
        trimmed,
        original_degree,
    })
}

/// Convenience: draw a sample and return its roots.
pub fn sample_roots(
    spec: &BasisSpec,
    n: usize,
    master_seed: u64,
    sample_index: u64,
) -> Result<RootSet> {
    find_roots(&sample_polynomial(spec, n, master_seed, sample_index)?.coeffs)
}
