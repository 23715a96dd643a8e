//! Gauss-Legendre nodes, the tensor rule over a disk, and compensated sums.
//!
//! The disk rule is a Gauss-Legendre grid in radius (with the Jacobian `r dr`
//! folded into the weights) crossed with a uniform trapezoid grid in angle.
//! The trapezoid rule is exact for trigonometric polynomials of degree below
//! the node count, which is what makes Gram matrices of polynomial bases
//! computable to near machine precision.

use num_complex::Complex64;

/// Kahan-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    c: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Sum an iterator with compensation.
pub fn kahan_sum<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    let mut acc = KahanSum::new();
    for x in it {
        acc.add(x);
    }
    acc.value()
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
///
/// Newton iteration on the three-term recurrence; accurate to machine
/// precision for the orders used here (tested against exact polynomial
/// integrals up to degree `2m-1`).
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(m >= 1, "need at least one node");
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    for i in 0..m.div_ceil(2) {
        // Chebyshev-like initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(m, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[m - 1 - i] = x;
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
    if m % 2 == 1 {
        nodes[m / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=m {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = m as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Tensor quadrature rule for integrals over the disk `D(0, r_max)`.
///
/// `int f dA ~= sum_i sum_j radial_weights[i] * angular_weight * f(radii[i] * e^{i angles[j]})`
/// with the `r dr` Jacobian already inside `radial_weights`.
#[derive(Debug, Clone)]
pub struct DiskRule {
    pub radii: Vec<f64>,
    pub radial_weights: Vec<f64>,
    pub angles: Vec<f64>,
    pub angular_weight: f64,
}

impl DiskRule {
    pub fn new(r_max: f64, m_rad: usize, m_ang: usize) -> Self {
        assert!(r_max > 0.0 && m_rad >= 1 && m_ang >= 1);
        let (x, w) = gauss_legendre(m_rad);
        let half = 0.5 * r_max;
        let radii: Vec<f64> = x.iter().map(|&xi| half * (xi + 1.0)).collect();
        let radial_weights: Vec<f64> = w
            .iter()
            .zip(&radii)
            .map(|(&wi, &ri)| half * wi * ri)
            .collect();
        let angles: Vec<f64> = (0..m_ang)
            .map(|j| 2.0 * std::f64::consts::PI * j as f64 / m_ang as f64)
            .collect();
        let angular_weight = 2.0 * std::f64::consts::PI / m_ang as f64;
        DiskRule {
            radii,
            radial_weights,
            angles,
            angular_weight,
        }
    }

    /// Integrate a real-valued integrand over the disk.
    pub fn integrate<F: Fn(Complex64) -> f64>(&self, f: F) -> f64 {
        let mut total = KahanSum::new();
        for (ri, wi) in self.radii.iter().zip(&self.radial_weights) {
            let mut ring = KahanSum::new();
            for th in &self.angles {
                ring.add(f(Complex64::from_polar(*ri, *th)));
            }
            total.add(wi * self.angular_weight * ring.value());
        }
        total.value()
    }
}
