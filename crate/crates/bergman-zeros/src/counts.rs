//! Expected zero counts: exact forms, limits, contour and area routes, and
//! the Kac-ensemble baseline.
//!
//! Every route returns a [`CountEstimate`] labeled with its provenance so
//! cross-route agreement checks can name what they compared.

use crate::basis::BasisSpec;
use crate::error::{Error, Result};
use crate::intensity::intensity_general;
use crate::kernel::{in_guard_band, kernel_series};
use crate::quadrature::{DiskRule, KahanSum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::f64::consts::PI;
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    ClosedForm,
    RationalSeries,
    Contour,
    AreaQuadrature,
    MonteCarlo,
    LimitFormula,
    Kac,
}

impl CountMethod {
    pub fn label(&self) -> &'static str {
        match self {
            CountMethod::ClosedForm => "closed-form",
            CountMethod::RationalSeries => "rational-series",
            CountMethod::Contour => "contour",
            CountMethod::AreaQuadrature => "area-quadrature",
            CountMethod::MonteCarlo => "monte-carlo",
            CountMethod::LimitFormula => "limit-formula",
            CountMethod::Kac => "kac",
        }
    }
}

impl Serialize for CountMethod {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// An expected-count value with provenance; `stderr` only for Monte Carlo.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CountEstimate {
    pub value: f64,
    pub method: CountMethod,
    pub n: usize,
    pub radius: f64,
    pub stderr: Option<f64>,
}

/// CSV rows `method,n,r,value,stderr` (blank stderr for exact routes).
pub fn write_counts_csv<W: Write>(mut w: W, rows: &[CountEstimate]) -> std::io::Result<()> {
    writeln!(w, "method,n,r,value,stderr")?;
    for e in rows {
        match e.stderr {
            Some(s) => writeln!(w, "{},{},{},{},{}", e.method.label(), e.n, e.radius, e.value, s)?,
            None => writeln!(w, "{},{},{},{},", e.method.label(), e.n, e.radius, e.value)?,
        }
    }
    Ok(())
}

fn check_open_interval(r: f64) -> Result<()> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!(
            "radius must lie in (0,1), got {r}; use the unit-disk form for r = 1"
        )));
    }
    Ok(())
}

fn rational_series_value(n: usize, s: f64) -> f64 {
    // sum k(k+1) s^k / (1 + sum (k+1) s^k), both sums over k = 1..=n
    let mut num = KahanSum::new();
    let mut den = KahanSum::new();
    den.add(1.0);
    let mut sk = 1.0;
    for k in 1..=n {
        let kf = k as f64;
        sk *= s;
        num.add(kf * (kf + 1.0) * sk);
        den.add((kf + 1.0) * sk);
    }
    num.value() / den.value()
}

fn closed_form_value(n: usize, s: f64) -> f64 {
    let nf = n as f64;
    let snp1 = s.powi(n as i32 + 1);
    2.0 * s / (1.0 - s)
        - (nf + 1.0) * (nf + 2.0) * (1.0 - s) * snp1
            / (1.0 + snp1 * ((nf + 1.0) * s - (nf + 2.0)))
}

/// Expected number of zeros of the scaled-monomial ensemble in `D(0,r)`,
/// `0 < r < 1`, by the singularity-free rational series. Away from the
/// cancellation guard band the displayed closed form is evaluated too and
/// must agree to 1e-9 relative.
pub fn expected_count_disk(n: usize, r: f64) -> Result<CountEstimate> {
    check_open_interval(r)?;
    let s = r * r;
    let value = rational_series_value(n, s);
    if n > 0 && !in_guard_band(n, Complex64::new(r, 0.0)) {
        let closed = closed_form_value(n, s);
        if (value - closed).abs() > 1e-9 * (1.0 + value.abs()) {
            return Err(Error::Conditioning(format!(
                "rational-series and closed-form counts disagree at n={n}, r={r}: \
                 {value} vs {closed}"
            )));
        }
    }
    Ok(CountEstimate {
        value,
        method: CountMethod::RationalSeries,
        n,
        radius: r,
        stderr: None,
    })
}

/// The displayed closed form for the disk count; delegates to the rational
/// series inside the guard band where its subtractions lose precision.
pub fn expected_count_disk_closed_form(n: usize, r: f64) -> Result<CountEstimate> {
    check_open_interval(r)?;
    let s = r * r;
    let value = if in_guard_band(n, Complex64::new(r, 0.0)) {
        rational_series_value(n, s)
    } else {
        closed_form_value(n, s)
    };
    Ok(CountEstimate {
        value,
        method: CountMethod::ClosedForm,
        n,
        radius: r,
        stderr: None,
    })
}

/// Expected count over the whole unit disk: exactly `2n/3`, computed from the
/// r = 1 value of the rational form, `(n(n+1)(n+2)/3) / ((n+1)(n+2)/2)`.
pub fn expected_count_unit_disk(n: usize) -> CountEstimate {
    let n128 = n as u128;
    let num = (n128 * (n128 + 1) * (n128 + 2) / 3) as f64;
    let den = ((n128 + 1) * (n128 + 2) / 2) as f64;
    CountEstimate {
        value: num / den,
        method: CountMethod::ClosedForm,
        n,
        radius: 1.0,
        stderr: None,
    }
}

/// Large-degree limit of the disk count, `2r^2/(1-r^2)` for `0 < r < 1`.
pub fn expected_count_limit(r: f64) -> Result<f64> {
    check_open_interval(r)?;
    Ok(2.0 * r * r / (1.0 - r * r))
}

/// Scaling limit of `E[N_n(D(0, e^{-t/2n}))]/n`: `2/t + t/(1 - e^t + t)`.
///
/// The two terms diverge individually as `t -> 0+` but the sum tends to 2/3
/// (matching the full-disk law); a power series takes over below t = 0.5
/// where the direct expression cancels catastrophically.
pub fn scaling_limit(t: f64) -> Result<f64> {
    if t <= 0.0 || !t.is_finite() {
        return Err(Error::Domain(format!("scaling parameter must be positive, got {t}")));
    }
    if t < 0.5 {
        // 2/t + t/(t - (e^t - 1)) = 2*T/S with
        // S = sum_{m>=0} 2 t^m/(m+2)!,  T = sum_{m>=1} 2 t^{m-1}/(m+2)!
        let mut s_acc = 0.0;
        let mut t_acc = 0.0;
        let mut factorial = 2.0; // (m+2)! at m=0
        let mut tp = 1.0; // t^m
        for m in 0..=24u32 {
            if m > 0 {
                factorial *= (m + 2) as f64;
                let term = 2.0 * tp / factorial;
                t_acc += term; // uses t^{m-1} since tp not yet advanced
                tp *= t;
                s_acc += term * t;
            } else {
                s_acc += 2.0 / factorial;
                tp = 1.0;
            }
        }
        Ok(2.0 * t_acc / s_acc)
    } else {
        Ok(2.0 / t + t / (t - t.exp_m1()))
    }
}

/// Kac-baseline scaling limit `1/t + 1/(1 - e^t)`, with the same small-t
/// series treatment (limit 1/2 as `t -> 0+`).
pub fn kac_scaling(t: f64) -> Result<f64> {
    if t <= 0.0 || !t.is_finite() {
        return Err(Error::Domain(format!("scaling parameter must be positive, got {t}")));
    }
    if t < 0.5 {
        // 1/t - 1/(e^t - 1) = T/S with
        // S = sum_{m>=0} t^m/(m+1)!,  T = sum_{m>=1} t^{m-1}/(m+1)!
        let mut s_acc = 0.0;
        let mut t_acc = 0.0;
        let mut factorial = 1.0; // (m+1)! at m=0
        let mut tp = 1.0;
        for m in 0..=24u32 {
            if m > 0 {
                factorial *= (m + 1) as f64;
                let term = tp / factorial;
                t_acc += term;
                tp *= t;
                s_acc += term * t;
            } else {
                s_acc += 1.0;
            }
        }
        Ok(t_acc / s_acc)
    } else {
        Ok(1.0 / t - 1.0 / t.exp_m1())
    }
}

/// Kac-ensemble expected count in `D(0,r)`, `0 < r <= 1`; exactly `n/2` at
/// r = 1.
pub fn kac_count_disk(n: usize, r: f64) -> Result<f64> {
    if r == 1.0 {
        return Ok(n as f64 / 2.0);
    }
    check_open_interval(r)?;
    let s = r * r;
    let mut num = KahanSum::new();
    let mut den = KahanSum::new();
    den.add(1.0);
    let mut sk = 1.0;
    for k in 1..=n {
        sk *= s;
        num.add(k as f64 * sk);
        den.add(sk);
    }
    Ok(num.value() / den.value())
}

/// Default trapezoid node count for the contour route.
pub fn default_contour_nodes(n: usize) -> usize {
    (8 * (n + 1)).max(64)
}

/// Contour-route count with its convergence diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct ContourCount {
    pub estimate: CountEstimate,
    /// Imaginary part of the accumulated integral; should be ~0.
    pub imag_residual: f64,
    pub min_k00: f64,
    pub max_k00: f64,
}

/// Expected count in `D(0,r)` by the boundary formula
/// `(1/2 pi i) closed-integral conj(K01)/K00 dz`, trapezoid rule on
/// `z = r e^{i theta}`. Valid for any basis and for `r = 1`.
///
/// Fails with a conditioning error if `K00` nearly vanishes anywhere on the
/// contour (`min < 1e-12 max`).
pub fn expected_count_contour(
    spec: &BasisSpec,
    n: usize,
    r: f64,
    nodes: usize,
) -> Result<ContourCount> {
    if nodes < 8 {
        return Err(Error::Domain(format!("contour needs at least 8 nodes, got {nodes}")));
    }
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::Domain(format!("contour radius must lie in (0,1], got {r}")));
    }
    let mut re = KahanSum::new();
    let mut im = KahanSum::new();
    let mut min_k00 = f64::INFINITY;
    let mut max_k00 = 0.0f64;
    for m in 0..nodes {
        let theta = 2.0 * PI * m as f64 / nodes as f64;
        let z = Complex64::from_polar(r, theta);
        let t = kernel_series(spec, n, z)?;
        min_k00 = min_k00.min(t.k00);
        max_k00 = max_k00.max(t.k00);
        let integrand = t.k01.conj() / t.k00 * z;
        re.add(integrand.re);
        im.add(integrand.im);
    }
    if min_k00 < 1e-12 * max_k00 {
        return Err(Error::Conditioning(format!(
            "kernel nearly vanishes on the contour r={r}: min {min_k00:.3e} vs max {max_k00:.3e}"
        )));
    }
    let value = re.value() / nodes as f64;
    let imag_residual = (im.value() / nodes as f64).abs();
    Ok(ContourCount {
        estimate: CountEstimate {
            value: value.max(0.0),
            method: CountMethod::Contour,
            n,
            radius: r,
            stderr: None,
        },
        imag_residual,
        min_k00,
        max_k00,
    })
}

/// Default `(radial, angular)` orders for the area route.
pub fn default_area_orders(n: usize) -> (usize, usize) {
    ((n + 8).max(32), (2 * n + 16).max(64))
}

/// Expected count in `D(0,r)`, `r < 1`, by disk quadrature of the intensity.
pub fn expected_count_area(
    spec: &BasisSpec,
    n: usize,
    r: f64,
    quad_orders: Option<(usize, usize)>,
) -> Result<CountEstimate> {
    check_open_interval(r)?;
    if let Some(max) = spec.max_degree() {
        if n > max {
            return Err(Error::Domain(format!(
                "degree {n} exceeds custom table maximum {max}"
            )));
        }
    }
    let (m_rad, m_ang) = quad_orders.unwrap_or_else(|| default_area_orders(n));
    if m_rad == 0 || m_ang == 0 {
        return Err(Error::Domain("quadrature orders must be positive".into()));
    }
    let rule = DiskRule::new(r, m_rad, m_ang);
    let ring_sums: Vec<f64> = rule
        .radii
        .par_iter()
        .map(|&ri| {
            let mut ring = KahanSum::new();
            for &th in &rule.angles {
                let z = Complex64::from_polar(ri, th);
                ring.add(intensity_general(spec, n, z).expect("|z| <= r < 1"));
            }
            ring.value()
        })
        .collect();
    let mut total = KahanSum::new();
    for (w, ring) in rule.radial_weights.iter().zip(&ring_sums) {
        total.add(w * rule.angular_weight * ring);
    }
    Ok(CountEstimate {
        value: total.value().max(0.0),
        method: CountMethod::AreaQuadrature,
        n,
        radius: r,
        stderr: None,
    })
}

/// `conj(K01)/(n K00)` at `z = e^{i theta}`; tends to `(2/3) conj(z)` along
/// the circle (off the real axis) for bases whose weight stays positive on
/// the boundary.
pub fn boundary_ratio(spec: &BasisSpec, n: usize, theta: f64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::Domain("boundary ratio needs degree n >= 1".into()));
    }
    let cycles = theta / PI;
    if (cycles - cycles.round()).abs() < 1e-9 {
        return Err(Error::Domain(format!(
            "theta = {theta} is a multiple of pi; the boundary limit excludes the real points"
        )));
    }
    let z = Complex64::from_polar(1.0, theta);
    let t = kernel_series(spec, n, z)?;
    Ok(t.k01.conj() / (n as f64 * t.k00))
}
