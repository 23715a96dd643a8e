//! Diagonal reproducing-kernel sums `K_n`, `K_n^{(0,1)}`, `K_n^{(1,1)}`.
//!
//! `kernel_series` sums the defining series for any basis and is the source
//! of truth. `kernel_closed_monomial` evaluates the rational closed forms
//! available for the scaled-monomial family; those forms subtract nearly
//! equal terms when `(1-|z|)(n+1)` is small, so inside that guard band the
//! closed path silently delegates to the series.

use crate::basis::{BasisSpec, BasisWalker};
use crate::error::Result;
use crate::quadrature::KahanSum;
use num_complex::Complex64;
use std::f64::consts::PI;

/// `(1-|z|)(n+1)` threshold below which closed forms delegate to the series.
pub const GUARD_BAND: f64 = 0.05;

pub(crate) fn in_guard_band(n: usize, z: Complex64) -> bool {
    (1.0 - z.norm()) * (n as f64 + 1.0) < GUARD_BAND
}

/// The three kernel diagonal values at one point.
///
/// `k00 = sum |p_j(z)|^2` and `k11 = sum |p_j'(z)|^2` are real by
/// construction and stored as such; `k01 = sum p_j(z) conj(p_j'(z))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelTriple {
    pub k00: f64,
    pub k01: Complex64,
    pub k11: f64,
    pub n: usize,
    pub z: Complex64,
}

impl KernelTriple {
    /// Cauchy-Schwarz slack `k00*k11 - |k01|^2 >= 0`.
    pub fn schwarz_gap(&self) -> f64 {
        self.k00 * self.k11 - self.k01.norm_sqr()
    }
}

/// Direct summation of the kernel series for `j = 0..=n`.
pub fn kernel_series(spec: &BasisSpec, n: usize, z: Complex64) -> Result<KernelTriple> {
    if let Some(max) = spec.max_degree() {
        if n > max {
            return Err(crate::error::Error::Domain(format!(
                "degree {n} exceeds custom table maximum {max}"
            )));
        }
    }
    let mut walker = BasisWalker::new(spec, z);
    let mut k00 = KahanSum::new();
    let mut k01re = KahanSum::new();
    let mut k01im = KahanSum::new();
    let mut k11 = KahanSum::new();
    for _ in 0..=n {
        let (p, d) = walker.next_value_and_derivative();
        k00.add(p.norm_sqr());
        let cross = p * d.conj();
        k01re.add(cross.re);
        k01im.add(cross.im);
        k11.add(d.norm_sqr());
    }
    Ok(KernelTriple {
        k00: k00.value(),
        k01: Complex64::new(k01re.value(), k01im.value()),
        k11: k11.value(),
        n,
        z,
    })
}

/// Closed forms for the scaled-monomial family, valid off the unit circle;
/// delegates to `kernel_series` inside the guard band.
pub fn kernel_closed_monomial(n: usize, z: Complex64) -> KernelTriple {
    if in_guard_band(n, z) {
        return kernel_series(&BasisSpec::ScaledMonomial, n, z)
            .expect("built-in family cannot fail");
    }
    let s = z.norm_sqr();
    let nf = n as f64;
    let np1 = nf + 1.0;
    let np2 = nf + 2.0;
    let one_m_s = 1.0 - s;
    let sn = s.powi(n as i32);
    // K_n(z,z) = (1 + s^{n+1}((n+1)s - (n+2))) / (pi (1-s)^2)
    let k00 = (1.0 + sn * s * (np1 * s - np2)) / (PI * one_m_s * one_m_s);
    // K_n^{(0,1)}(z,z) = 2 z K_n/(1-s) - (n+1)(n+2) z s^n / (pi (1-s))
    let k01 = z * (2.0 * k00 / one_m_s - np1 * np2 * sn / (PI * one_m_s));
    // K_n^{(1,1)}(z,z) = 2(1+2s) K_n/(1-s)^2
    //   - (n+1)(n+2) s^n (1+2s) / (pi (1-s)^2) - n(n+1)(n+2) s^n / (pi (1-s))
    let k11 = 2.0 * (1.0 + 2.0 * s) * k00 / (one_m_s * one_m_s)
        - np1 * np2 * sn * (1.0 + 2.0 * s) / (PI * one_m_s * one_m_s)
        - nf * np1 * np2 * sn / (PI * one_m_s);
    KernelTriple { k00, k01, k11, n, z }
}
