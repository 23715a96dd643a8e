//! The first-intensity (density of expected zeros) of the random polynomial
//! ensemble, in kernel form, closed form, limit form, and on lattices.
//!
//! For any basis, `rho_n(z) = (K11 K00 - |K01|^2) / (pi K00^2)`; the
//! Cauchy-Schwarz inequality makes it nonnegative, and for a degree-0
//! ensemble it vanishes identically.

use crate::basis::BasisSpec;
use crate::error::{Error, Result};
use crate::kernel::{in_guard_band, kernel_series, KernelTriple};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::io::Write;

fn check_inside(z: Complex64) -> Result<()> {
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "intensity is defined on |z| < 1, got |z| = {}",
            z.norm()
        )));
    }
    Ok(())
}

fn rho_from_triple(t: &KernelTriple) -> f64 {
    (t.schwarz_gap() / (PI * t.k00 * t.k00)).max(0.0)
}

/// Kernel-form intensity for any basis; requires `|z| < 1`.
pub fn intensity_general(spec: &BasisSpec, n: usize, z: Complex64) -> Result<f64> {
    check_inside(z)?;
    Ok(rho_from_triple(&kernel_series(spec, n, z)?))
}

/// Closed-form intensity for the scaled-monomial family; delegates to the
/// series inside the cancellation guard band.
pub fn intensity_closed(n: usize, z: Complex64) -> Result<f64> {
    check_inside(z)?;
    if in_guard_band(n, z) {
        return intensity_general(&BasisSpec::ScaledMonomial, n, z);
    }
    let s = z.norm_sqr();
    let nf = n as f64;
    let one_m_s = 1.0 - s;
    let sn = s.powi(n as i32);
    let denom = 1.0 + sn * s * ((nf + 1.0) * s - (nf + 2.0));
    let rho = (1.0 / PI)
        * (2.0 / (one_m_s * one_m_s)
            - (nf + 1.0) * (nf + 2.0) * sn * (sn * s * s - (nf + 2.0) * s + nf + 1.0)
                / (denom * denom));
    Ok(rho.max(0.0))
}

/// Limiting intensity `2 / (pi (1-|z|^2)^2)` on the open disk.
pub fn intensity_limit(z: Complex64) -> Result<f64> {
    check_inside(z)?;
    let one_m_s = 1.0 - z.norm_sqr();
    Ok(2.0 / (PI * one_m_s * one_m_s))
}

/// Hammersley's intensity for the Kac ensemble of unscaled monomials:
/// `(1/pi) (1 - |h_{n+1}|^2) / (1-|z|^2)^2` with
/// `h_m(z) = (1-|z|^2) m z^{m-1} / (1-|z|^{2m})`.
pub fn kac_intensity(n: usize, z: Complex64) -> Result<f64> {
    check_inside(z)?;
    let s = z.norm_sqr();
    let m = n as f64 + 1.0;
    let one_m_s = 1.0 - s;
    // |h_{n+1}|^2 depends on |z| only
    let h2 = if s == 0.0 {
        if n == 0 {
            1.0
        } else {
            0.0
        }
    } else {
        let num = one_m_s * m * s.powf((m - 1.0) / 2.0) / (1.0 - s.powf(m));
        num * num
    };
    Ok(((1.0 - h2) / (PI * one_m_s * one_m_s)).max(0.0))
}

/// Rectangular evaluation window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridWindow {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl GridWindow {
    pub fn square(half_width: f64) -> Self {
        GridWindow {
            x_min: -half_width,
            x_max: half_width,
            y_min: -half_width,
            y_max: half_width,
        }
    }
}

/// One lattice point; `rho` is `None` outside the open unit disk, where the
/// intensity is not defined.
#[derive(Debug, Clone, Copy)]
pub struct GridPoint {
    pub x: f64,
    pub y: f64,
    pub rho: Option<f64>,
}

/// Row-major lattice of intensity values over a window.
#[derive(Debug, Clone)]
pub struct IntensityGrid {
    pub window: GridWindow,
    pub resolution: usize,
    pub n: usize,
    pub basis: BasisSpec,
    pub points: Vec<GridPoint>,
}

/// Evaluates `intensity_general` on a `resolution x resolution` lattice of
/// cell centers tiling the window, so odd resolutions over a centered window
/// contain the origin and cell sums are midpoint-rule integrals. Points with
/// `|z| >= 1` are flagged rather than evaluated.
pub fn intensity_grid(
    spec: &BasisSpec,
    n: usize,
    window: GridWindow,
    resolution: usize,
) -> Result<IntensityGrid> {
    if resolution < 2 {
        return Err(Error::Domain(format!(
            "grid resolution must be at least 2, got {resolution}"
        )));
    }
    let bounds = [window.x_min, window.x_max, window.y_min, window.y_max];
    if bounds.iter().any(|b| !b.is_finite())
        || window.x_min >= window.x_max
        || window.y_min >= window.y_max
    {
        return Err(Error::Domain("empty or non-finite grid window".into()));
    }
    let step = |lo: f64, hi: f64, i: usize| lo + (hi - lo) * (i as f64 + 0.5) / resolution as f64;
    let coords: Vec<(f64, f64)> = (0..resolution)
        .flat_map(|iy| {
            (0..resolution).map(move |ix| (ix, iy))
        })
        .map(|(ix, iy)| {
            (
                step(window.x_min, window.x_max, ix),
                step(window.y_min, window.y_max, iy),
            )
        })
        .collect();
    let points: Result<Vec<GridPoint>> = coords
        .par_iter()
        .map(|&(x, y)| {
            let z = Complex64::new(x, y);
            let rho = if z.norm() < 1.0 {
                Some(intensity_general(spec, n, z)?)
            } else {
                None
            };
            Ok(GridPoint { x, y, rho })
        })
        .collect();
    Ok(IntensityGrid {
        window,
        resolution,
        n,
        basis: spec.clone(),
        points: points?,
    })
}

impl IntensityGrid {
    /// Midpoint-rule integral of the intensity over the window, counting
    /// only in-disk cells.
    pub fn midpoint_integral(&self) -> f64 {
        let hx = (self.window.x_max - self.window.x_min) / self.resolution as f64;
        let hy = (self.window.y_max - self.window.y_min) / self.resolution as f64;
        hx * hy
            * self
                .points
                .iter()
                .filter_map(|p| p.rho)
                .sum::<f64>()
    }

    /// CSV with header `x,y,rho,inside`; outside-domain points carry
    /// `rho = NaN` and `inside = 0`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "x,y,rho,inside")?;
        for p in &self.points {
            match p.rho {
                Some(r) => writeln!(w, "{},{},{},1", p.x, p.y, r)?,
                None => writeln!(w, "{},{},NaN,0", p.x, p.y)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn degree_zero_vanishes() {
        for spec in [
            BasisSpec::ScaledMonomial,
            BasisSpec::weighted_power(1.0).unwrap(),
            BasisSpec::ZMinusOneSquared,
            BasisSpec::kac_table(4),
        ] {
            assert_abs_diff_eq!(intensity_general(&spec, 0, c(0.35, -0.6)).unwrap(), 0.0);
        }
        assert_abs_diff_eq!(intensity_closed(0, c(0.5, 0.0)).unwrap(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn value_at_origin_is_two_over_pi() {
        assert_relative_eq!(
            intensity_general(&BasisSpec::ScaledMonomial, 1, c(0.0, 0.0)).unwrap(),
            2.0 / PI,
            epsilon = 1e-14
        );
        for n in [1usize, 2, 25, 300] {
            assert_relative_eq!(intensity_closed(n, c(0.0, 0.0)).unwrap(), 2.0 / PI, epsilon = 1e-14);
        }
    }

    #[test]
    fn closed_matches_general() {
        let s = BasisSpec::ScaledMonomial;
        let g = intensity_general(&s, 6, c(0.4, -0.3)).unwrap();
        let cl = intensity_closed(6, c(0.4, -0.3)).unwrap();
        assert_relative_eq!(g, cl, max_relative = 1e-10);
        let g = intensity_general(&s, 25, c(0.8, 0.0)).unwrap();
        let cl = intensity_closed(25, c(0.8, 0.0)).unwrap();
        assert_relative_eq!(g, cl, max_relative = 1e-9);
        assert_relative_eq!(cl, 4.884374185217, epsilon = 1e-10);
    }

    #[test]
    fn frozen_cross_oracle_values() {
        assert_relative_eq!(
            intensity_general(&BasisSpec::ScaledMonomial, 6, c(0.4, -0.3)).unwrap(),
            1.109992342220,
            epsilon = 1e-10
        );
        assert_relative_eq!(
            intensity_general(&BasisSpec::weighted_power(1.0).unwrap(), 10, c(0.3, 0.2)).unwrap(),
            1.261629475922,
            epsilon = 1e-10
        );
        assert_relative_eq!(
            intensity_general(&BasisSpec::ZMinusOneSquared, 10, c(0.3, 0.2)).unwrap(),
            0.808907498256,
            epsilon = 1e-10
        );
        assert_relative_eq!(
            intensity_general(&BasisSpec::ZMinusOneSquared, 10, c(0.5, 0.0)).unwrap(),
            0.955822791771,
            epsilon = 1e-10
        );
    }

    #[test]
    fn limit_values() {
        assert_relative_eq!(intensity_limit(c(0.0, 0.0)).unwrap(), 2.0 / PI, epsilon = 1e-14);
        assert_relative_eq!(intensity_limit(c(0.5, 0.0)).unwrap(), 1.1317685, epsilon = 1e-7);
        assert_relative_eq!(
            intensity_limit(c(0.5, 0.0)).unwrap(),
            2.0 / (PI * 0.5625),
            epsilon = 1e-14
        );
        assert!(intensity_limit(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn domain_errors() {
        assert!(intensity_general(&BasisSpec::ScaledMonomial, 3, c(1.0, 0.0)).is_err());
        assert!(intensity_closed(3, c(0.0, 1.2)).is_err());
        assert!(kac_intensity(3, c(-1.0, 0.0)).is_err());
    }

    #[test]
    fn kac_values() {
        for n in [1usize, 5, 40] {
            assert_relative_eq!(kac_intensity(n, c(0.0, 0.0)).unwrap(), 1.0 / PI, epsilon = 1e-14);
        }
        for &z in &[c(0.0, 0.0), c(0.3, 0.55), c(-0.9, 0.1)] {
            assert_abs_diff_eq!(kac_intensity(0, z).unwrap(), 0.0, epsilon = 1e-13);
        }
        // kernel route through the unscaled-monomial table agrees pointwise
        let table = BasisSpec::kac_table(20);
        for &z in &[c(0.15, -0.4), c(0.5, 0.5), c(-0.77, 0.0), c(0.0, 0.9)] {
            assert_relative_eq!(
                kac_intensity(20, z).unwrap(),
                intensity_general(&table, 20, z).unwrap(),
                max_relative = 1e-11
            );
        }
    }

    #[test]
    fn pointwise_convergence_to_limit() {
        for &z in &[c(0.0, 0.0), c(0.3, 0.0), c(0.6, 0.0), Complex64::from_polar(0.9, PI / 4.0)] {
            let lim = intensity_limit(z).unwrap();
            let d50 = (intensity_closed(50, z).unwrap() - lim).abs();
            let d400 = (intensity_closed(400, z).unwrap() - lim).abs();
            assert!(d400 <= d50 + 1e-14, "z={z} d50={d50:.3e} d400={d400:.3e}");
        }
    }

    #[test]
    fn sup_convergence_on_half_disk() {
        // sup over |z| <= 0.5 of |rho_n - rho_limit| decreases with n for the
        // families whose intensities converge to the unweighted limit
        for spec in [BasisSpec::ScaledMonomial, BasisSpec::ZMinusOneSquared] {
            let mut sups = Vec::new();
            for n in [10usize, 20, 40, 80] {
                let mut worst = 0.0f64;
                for i in 0..=10 {
                    let r = 0.5 * i as f64 / 10.0;
                    for jt in 0..12 {
                        let z = Complex64::from_polar(r, 2.0 * PI * jt as f64 / 12.0);
                        let d = (intensity_general(&spec, n, z).unwrap()
                            - intensity_limit(z).unwrap())
                        .abs();
                        worst = worst.max(d);
                    }
                }
                sups.push(worst);
            }
            for w in sups.windows(2) {
                assert!(w[1] <= w[0] + 1e-13, "{spec}: sups={sups:?}");
            }
        }
        // the weighted-power family converges to a different limit:
        // 3/(pi (1-s)^2) at j=1, not 2/(pi (1-s)^2)
        let wp = BasisSpec::weighted_power(1.0).unwrap();
        for &z in &[c(0.0, 0.0), c(0.4, 0.0), c(0.0, -0.5)] {
            let s = z.norm_sqr();
            let its_limit = 3.0 / (PI * (1.0 - s) * (1.0 - s));
            let rho = intensity_general(&wp, 400, z).unwrap();
            assert_relative_eq!(rho, its_limit, max_relative = 1e-8);
            assert!((rho - intensity_limit(z).unwrap()).abs() > 0.3);
        }
    }

    #[test]
    fn finite_on_real_segment() {
        for i in 0..50 {
            let x = -0.98 + 1.96 * i as f64 / 49.0;
            let v = intensity_general(&BasisSpec::ScaledMonomial, 30, c(x, 0.0)).unwrap();
            assert!(v.is_finite() && v >= 0.0);
        }
    }

    #[test]
    fn grid_basics() {
        let g = intensity_grid(
            &BasisSpec::ScaledMonomial,
            0,
            GridWindow::square(0.5),
            3,
        )
        .unwrap();
        assert_eq!(g.points.len(), 9);
        assert!(g.points.iter().all(|p| p.rho == Some(0.0)));

        let g = intensity_grid(
            &BasisSpec::ScaledMonomial,
            4,
            GridWindow::square(0.8),
            5,
        )
        .unwrap();
        let center = &g.points[2 * 5 + 2];
        assert_abs_diff_eq!(center.x, 0.0);
        assert_abs_diff_eq!(center.y, 0.0);
        assert_relative_eq!(center.rho.unwrap(), 2.0 / PI, epsilon = 1e-13);

        // points outside the disk are flagged
        let g = intensity_grid(&BasisSpec::ScaledMonomial, 2, GridWindow::square(1.2), 7).unwrap();
        let corner = &g.points[0];
        assert!(corner.rho.is_none());
        assert!(corner.x < -1.0 && corner.y < -1.0);
        assert!(g.points.iter().any(|p| p.rho.is_some()));
        assert!(intensity_grid(&BasisSpec::ScaledMonomial, 2, GridWindow::square(1.0), 1).is_err());
    }

    #[test]
    fn grid_csv_format() {
        let g = intensity_grid(&BasisSpec::ScaledMonomial, 1, GridWindow::square(1.1), 3).unwrap();
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "x,y,rho,inside");
        assert_eq!(lines.clone().count(), 9);
        // corner row is outside the disk
        assert!(lines.next().unwrap().ends_with("NaN,0"));
        // center row is inside
        assert!(text.lines().nth(5).unwrap().ends_with(",1"));
    }

    #[test]
    fn grid_midpoint_integral_stable_under_refinement() {
        // same-window refinement: a coarse lattice integral of the intensity
        // is within 5% of a much finer one
        let w = GridWindow::square(0.7);
        let coarse = intensity_grid(&BasisSpec::ScaledMonomial, 10, w, 51).unwrap();
        let fine = intensity_grid(&BasisSpec::ScaledMonomial, 10, w, 401).unwrap();
        let a = coarse.midpoint_integral();
        let b = fine.midpoint_integral();
        assert!((a - b).abs() / b < 0.05, "a={a} b={b}");
        // reference value from an independent run
        assert_relative_eq!(b, 3.1167, max_relative = 1e-3);
    }
}
