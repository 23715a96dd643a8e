//! The orthonormal polynomial families on the unit disk and their plumbing.
//!
//! Three closed families are built in, each orthonormal with respect to its
//! own weight `h` against area measure on the unit disk:
//!
//! * `ScaledMonomial`: `p_k(z) = sqrt((k+1)/pi) z^k`, `h = 1`;
//! * `WeightedPower { j }`: `p_k(z) = sqrt((k+1)(k+j+1)/(pi j)) z^k`,
//!   `h = 1 - |z|^{2j}`, any `j > 0`;
//! * `ZMinusOneSquared`: degree-k polynomial with monomial coefficients
//!   `c_m = (m+1)(m+2)/sqrt(pi (k+1)(k+2)(k+3))`, `h = |z - 1|^2`.
//!
//! A `CustomTable` holds an arbitrary triangular coefficient table; the
//! unscaled monomial table (`BasisSpec::kac_table`) reproduces the classical
//! Kac ensemble as a cross-check baseline. Custom tables are treated as
//! carrying weight `h = 1` wherever a weight is needed.

use crate::error::{Error, Result};
use crate::quadrature::DiskRule;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum BasisSpec {
    ScaledMonomial,
    WeightedPower { j: f64 },
    ZMinusOneSquared,
    CustomTable { rows: Vec<Vec<Complex64>>, label: String },
}

impl BasisSpec {
    pub fn weighted_power(j: f64) -> Result<Self> {
        if j <= 0.0 || !j.is_finite() {
            return Err(Error::InvalidBasis(format!(
                "weighted-power requires j > 0, got {j}"
            )));
        }
        Ok(BasisSpec::WeightedPower { j })
    }

    /// Validates a triangular table: row `k` has exactly `k+1` entries and a
    /// nonzero leading entry.
    pub fn custom(rows: Vec<Vec<Complex64>>, label: impl Into<String>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidBasis("custom table has no rows".into()));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != k + 1 {
                return Err(Error::InvalidBasis(format!(
                    "custom table row {k} has {} entries, expected {}",
                    row.len(),
                    k + 1
                )));
            }
            if row[k].norm() == 0.0 {
                return Err(Error::InvalidBasis(format!(
                    "custom table row {k} has zero leading entry"
                )));
            }
        }
        Ok(BasisSpec::CustomTable {
            rows,
            label: label.into(),
        })
    }

    /// Parses a custom coefficient file: one row per `k`, whitespace-separated
    /// `re im` pairs. Blank lines and lines starting with `#` are skipped.
    pub fn custom_from_str(text: &str, label: impl Into<String>) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums: std::result::Result<Vec<f64>, _> =
                line.split_whitespace().map(str::parse::<f64>).collect();
            let nums = nums.map_err(|e| {
                Error::InvalidBasis(format!("custom table line {}: {e}", lineno + 1))
            })?;
            if nums.len() % 2 != 0 {
                return Err(Error::InvalidBasis(format!(
                    "custom table line {}: odd number of values (need re im pairs)",
                    lineno + 1
                )));
            }
            rows.push(
                nums.chunks(2)
                    .map(|p| Complex64::new(p[0], p[1]))
                    .collect(),
            );
        }
        BasisSpec::custom(rows, label)
    }

    pub fn custom_from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        BasisSpec::custom_from_str(&text, format!("custom:{}", path.display()))
    }

    /// The unscaled monomial table `p_k(z) = z^k` up to `max_degree`; the Kac
    /// ensemble baseline.
    pub fn kac_table(max_degree: usize) -> Self {
        let rows = (0..=max_degree)
            .map(|k| {
                let mut row = vec![Complex64::new(0.0, 0.0); k + 1];
                row[k] = Complex64::new(1.0, 0.0);
                row
            })
            .collect();
        BasisSpec::CustomTable {
            rows,
            label: "kac-table".into(),
        }
    }

    /// Parses a CLI basis name: `scaled-monomial`, `weighted-power:j=<real>`,
    /// `z-minus-one-squared`, or `custom:<path>`.
    pub fn from_cli(name: &str) -> Result<Self> {
        match name {
            "scaled-monomial" => Ok(BasisSpec::ScaledMonomial),
            "z-minus-one-squared" => Ok(BasisSpec::ZMinusOneSquared),
            _ => {
                if let Some(rest) = name.strip_prefix("weighted-power:") {
                    let j = rest
                        .strip_prefix("j=")
                        .ok_or_else(|| {
                            Error::InvalidBasis(format!(
                                "expected weighted-power:j=<real>, got {name}"
                            ))
                        })?
                        .parse::<f64>()
                        .map_err(|e| Error::InvalidBasis(format!("bad j in {name}: {e}")))?;
                    BasisSpec::weighted_power(j)
                } else if let Some(path) = name.strip_prefix("custom:") {
                    BasisSpec::custom_from_path(std::path::Path::new(path))
                } else {
                    Err(Error::InvalidBasis(format!(
                        "unknown basis {name}; expected scaled-monomial, \
                         weighted-power:j=<real>, z-minus-one-squared, or custom:<path>"
                    )))
                }
            }
        }
    }

    /// Highest supported degree, if the table is finite.
    pub fn max_degree(&self) -> Option<usize> {
        match self {
            BasisSpec::CustomTable { rows, .. } => Some(rows.len() - 1),
            _ => None,
        }
    }

    pub(crate) fn check_degree(&self, k: usize) -> Result<()> {
        if let Some(max) = self.max_degree() {
            if k > max {
                return Err(Error::Domain(format!(
                    "degree {k} exceeds custom table maximum {max}"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for BasisSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisSpec::ScaledMonomial => write!(f, "scaled-monomial"),
            BasisSpec::WeightedPower { j } => write!(f, "weighted-power:j={j}"),
            BasisSpec::ZMinusOneSquared => write!(f, "z-minus-one-squared"),
            BasisSpec::CustomTable { label, .. } => write!(f, "{label}"),
        }
    }
}

/// Dense polynomial in the monomial basis, coefficients lowest-first.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialPoly {
    coefficients: Vec<Complex64>,
}

impl MonomialPoly {
    /// Trailing exact-zero coefficients are trimmed so that the leading
    /// coefficient is nonzero unless the polynomial is identically zero.
    pub fn new(mut coefficients: Vec<Complex64>) -> Self {
        while coefficients.len() > 1 && coefficients.last().is_some_and(|c| c.norm() == 0.0) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            coefficients.push(Complex64::new(0.0, 0.0));
        }
        MonomialPoly { coefficients }
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|c| c.norm() == 0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coefficients.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> MonomialPoly {
        if self.coefficients.len() == 1 {
            return MonomialPoly::new(vec![Complex64::new(0.0, 0.0)]);
        }
        MonomialPoly::new(
            self.coefficients[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * (i as f64 + 1.0))
                .collect(),
        )
    }
}

/// `p_k(z)`.
pub fn eval_basis(spec: &BasisSpec, k: usize, z: Complex64) -> Result<Complex64> {
    Ok(expand_to_monomials(spec, k)?.eval(z))
}

/// `p_k'(z)`, by analytic differentiation of the coefficient form.
pub fn eval_basis_derivative(spec: &BasisSpec, k: usize, z: Complex64) -> Result<Complex64> {
    Ok(expand_to_monomials(spec, k)?.derivative().eval(z))
}

/// Monomial coefficients of `p_k`.
pub fn expand_to_monomials(spec: &BasisSpec, k: usize) -> Result<MonomialPoly> {
    spec.check_degree(k)?;
    let kf = k as f64;
    let coeffs = match spec {
        BasisSpec::ScaledMonomial => {
            let mut c = vec![Complex64::new(0.0, 0.0); k + 1];
            c[k] = Complex64::new(((kf + 1.0) / PI).sqrt(), 0.0);
            c
        }
        BasisSpec::WeightedPower { j } => {
            let mut c = vec![Complex64::new(0.0, 0.0); k + 1];
            c[k] = Complex64::new(((kf + 1.0) * (kf + j + 1.0) / (PI * j)).sqrt(), 0.0);
            c
        }
        BasisSpec::ZMinusOneSquared => {
            let norm = (PI * (kf + 1.0) * (kf + 2.0) * (kf + 3.0)).sqrt();
            (0..=k)
                .map(|m| {
                    let mf = m as f64;
                    Complex64::new((mf + 1.0) * (mf + 2.0) / norm, 0.0)
                })
                .collect()
        }
        BasisSpec::CustomTable { rows, .. } => rows[k].clone(),
    };
    Ok(MonomialPoly::new(coeffs))
}

/// Leading coefficient `kappa_k > 0`. For custom tables whose leading entry is
/// not a positive real, the modulus is returned.
pub fn leading_coefficient(spec: &BasisSpec, k: usize) -> Result<f64> {
    spec.check_degree(k)?;
    let kf = k as f64;
    Ok(match spec {
        BasisSpec::ScaledMonomial => ((kf + 1.0) / PI).sqrt(),
        BasisSpec::WeightedPower { j } => ((kf + 1.0) * (kf + j + 1.0) / (PI * j)).sqrt(),
        BasisSpec::ZMinusOneSquared => {
            // (k+1)(k+2)/sqrt(pi(k+1)(k+2)(k+3)) = sqrt((k+1)(k+2)/(pi(k+3)))
            ((kf + 1.0) * (kf + 2.0) / (PI * (kf + 3.0))).sqrt()
        }
        BasisSpec::CustomTable { rows, .. } => rows[k][k].norm(),
    })
}

/// The regularity diagnostic `(k, kappa_k^{1/k})` for `k = 1..=k_max`; the
/// values approach 1 for all built-in families.
pub fn sut_diagnostic(spec: &BasisSpec, k_max: usize) -> Result<Vec<(usize, f64)>> {
    if k_max < 2 {
        return Err(Error::Domain(format!("sut diagnostic needs k_max >= 2, got {k_max}")));
    }
    (1..=k_max)
        .map(|k| {
            let kappa = leading_coefficient(spec, k)?;
            Ok((k, (kappa.ln() / k as f64).exp()))
        })
        .collect()
}

/// Gram matrix of `p_0..p_n` under the family weight, by disk quadrature.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    pub n: usize,
    entries: Vec<Complex64>,
    /// Radial integrand is non-polynomial (non-integer `2j`); result is a
    /// converging approximation rather than an exact quadrature.
    pub approximate: bool,
    /// Caller forced quadrature orders below the exactness threshold.
    pub below_exactness: bool,
}

impl GramMatrix {
    pub fn entry(&self, a: usize, b: usize) -> Complex64 {
        self.entries[a * (self.n + 1) + b]
    }

    pub fn max_identity_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..=self.n {
            for b in 0..=self.n {
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((self.entry(a, b) - target).norm());
            }
        }
        worst
    }
}

/// Weight function of the family's orthogonality measure (1 for custom tables).
pub fn weight(spec: &BasisSpec, z: Complex64) -> f64 {
    match spec {
        BasisSpec::ScaledMonomial | BasisSpec::CustomTable { .. } => 1.0,
        BasisSpec::WeightedPower { j } => 1.0 - z.norm_sqr().powf(*j),
        BasisSpec::ZMinusOneSquared => (z - 1.0).norm_sqr(),
    }
}

/// Entry `(a, b)` is `int p_a conj(p_b) h dA` over the unit disk; an identity
/// matrix certifies orthonormality.
///
/// `quad_orders` is `(radial, angular)`; `None` picks defaults that integrate
/// the degree-`n` entries exactly with generous margin.
pub fn gram_matrix(
    spec: &BasisSpec,
    n: usize,
    quad_orders: Option<(usize, usize)>,
) -> Result<GramMatrix> {
    spec.check_degree(n)?;
    // Radial polynomial degree of the integrand (before the Jacobian) is
    // 2n + deg(h); GL with m nodes is exact through degree 2m-1. Angular
    // bandwidth is n plus 1 if the weight carries e^{+-i theta} terms.
    let (weight_radial_degree, weight_bandwidth, radial_poly) = match spec {
        BasisSpec::ScaledMonomial | BasisSpec::CustomTable { .. } => (0.0, 0usize, true),
        BasisSpec::WeightedPower { j } => (2.0 * j, 0, (2.0 * j).fract() == 0.0),
        BasisSpec::ZMinusOneSquared => (2.0, 1, true),
    };
    let min_rad = (n as f64 + 1.0 + weight_radial_degree / 2.0).ceil() as usize;
    let min_ang = n + 1 + weight_bandwidth;
    let approximate = !radial_poly;
    let (m_rad, m_ang, below_exactness) = match quad_orders {
        Some((r, a)) => {
            if r == 0 || a == 0 {
                return Err(Error::Domain("quadrature orders must be positive".into()));
            }
            (r, a, radial_poly && (r < min_rad || a < min_ang))
        }
        None => {
            let mut r = n + 4 + (weight_radial_degree / 2.0).ceil() as usize;
            if !radial_poly {
                r *= 2;
            }
            (r, (4 * n + 12).max(min_ang), false)
        }
    };

    let rule = DiskRule::new(1.0, m_rad, m_ang);
    let dim = n + 1;
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    let mut values = vec![Complex64::new(0.0, 0.0); dim];
    for (ri, wi) in rule.radii.iter().zip(&rule.radial_weights) {
        for th in &rule.angles {
            let z = Complex64::from_polar(*ri, *th);
            let mut walker = BasisWalker::new(spec, z);
            for v in values.iter_mut() {
                *v = walker.next_value_and_derivative().0;
            }
            let w = wi * rule.angular_weight * weight(spec, z);
            for a in 0..dim {
                let pa = values[a] * w;
                for b in 0..dim {
                    entries[a * dim + b] += pa * values[b].conj();
                }
            }
        }
    }
    Ok(GramMatrix {
        n,
        entries,
        approximate,
        below_exactness,
    })
}

/// Streaming evaluator yielding `(p_k(z), p_k'(z))` for `k = 0, 1, 2, ...` in
/// O(1) amortized work per step for the built-in families (O(k) for custom
/// rows). Keeps kernel sums at O(n) per point.
pub(crate) struct BasisWalker<'a> {
    spec: &'a BasisSpec,
    z: Complex64,
    k: usize,
    zp: Complex64,   // z^k
    prev: Complex64, // z^{k-1}
    // partial sums for ZMinusOneSquared: u = sum (m+1)(m+2) z^m, v = u'
    u: Complex64,
    v: Complex64,
}

impl<'a> BasisWalker<'a> {
    pub fn new(spec: &'a BasisSpec, z: Complex64) -> Self {
        BasisWalker {
            spec,
            z,
            k: 0,
            zp: Complex64::new(1.0, 0.0),
            prev: Complex64::new(0.0, 0.0),
            u: Complex64::new(2.0, 0.0),
            v: Complex64::new(0.0, 0.0),
        }
    }

    pub fn next_value_and_derivative(&mut self) -> (Complex64, Complex64) {
        let k = self.k;
        let kf = k as f64;
        let out = match self.spec {
            BasisSpec::ScaledMonomial => {
                let kappa = ((kf + 1.0) / PI).sqrt();
                (kappa * self.zp, kappa * kf * self.prev)
            }
            BasisSpec::WeightedPower { j } => {
                let kappa = ((kf + 1.0) * (kf + j + 1.0) / (PI * j)).sqrt();
                (kappa * self.zp, kappa * kf * self.prev)
            }
            BasisSpec::ZMinusOneSquared => {
                let norm = (PI * (kf + 1.0) * (kf + 2.0) * (kf + 3.0)).sqrt();
                (self.u / norm, self.v / norm)
            }
            BasisSpec::CustomTable { rows, .. } => {
                let poly = MonomialPoly::new(rows[k].clone());
                (poly.eval(self.z), poly.derivative().eval(self.z))
            }
        };
        // advance shared state to k+1
        self.v += (kf + 1.0) * (kf + 2.0) * (kf + 3.0) * self.zp;
        self.prev = self.zp;
        self.zp *= self.z;
        self.u += (kf + 2.0) * (kf + 3.0) * self.zp;
        self.k += 1;
        out
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
    fn scaled_monomial_values() {
        let s = BasisSpec::ScaledMonomial;
        let v = eval_basis(&s, 0, c(0.3, 0.4)).unwrap();
        assert_relative_eq!(v.re, (1.0 / PI).sqrt(), epsilon = 1e-14);
        assert_relative_eq!(v.re, 0.5641896, epsilon = 1e-7);
        assert_abs_diff_eq!(v.im, 0.0);
        let d = eval_basis_derivative(&s, 1, c(-2.0, 7.0)).unwrap();
        assert_relative_eq!(d.re, (2.0 / PI).sqrt(), epsilon = 1e-14);
        assert_relative_eq!(d.re, 0.7978846, epsilon = 1e-7);
        let d0 = eval_basis_derivative(&s, 0, c(0.5, 0.5)).unwrap();
        assert_abs_diff_eq!(d0.norm(), 0.0);
        let e = expand_to_monomials(&s, 2).unwrap();
        assert_eq!(e.degree(), 2);
        assert_abs_diff_eq!(e.coefficients()[0].norm(), 0.0);
        assert_abs_diff_eq!(e.coefficients()[1].norm(), 0.0);
        assert_relative_eq!(e.coefficients()[2].re, (3.0 / PI).sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn weighted_power_values() {
        let s = BasisSpec::weighted_power(1.0).unwrap();
        let v = eval_basis(&s, 1, c(0.0, 1.0)).unwrap();
        assert_abs_diff_eq!(v.re, 0.0, epsilon = 1e-14);
        assert_relative_eq!(v.im, (6.0 / PI).sqrt(), epsilon = 1e-14);
        assert_relative_eq!(v.im, 1.3819766, epsilon = 1e-7);
        let s2 = BasisSpec::weighted_power(2.0).unwrap();
        assert_relative_eq!(
            leading_coefficient(&s2, 3).unwrap(),
            (12.0 / PI).sqrt(),
            epsilon = 1e-14
        );
        assert_relative_eq!(leading_coefficient(&s2, 3).unwrap(), 1.9544100, epsilon = 1e-7);
        assert!(BasisSpec::weighted_power(0.0).is_err());
        assert!(BasisSpec::weighted_power(-1.5).is_err());
    }

    #[test]
    fn z_minus_one_squared_values() {
        let s = BasisSpec::ZMinusOneSquared;
        let v = eval_basis(&s, 1, c(0.0, 0.0)).unwrap();
        assert_relative_eq!(v.re, 2.0 / (24.0 * PI).sqrt(), epsilon = 1e-14);
        assert_relative_eq!(v.re, 0.2303294, epsilon = 1e-7);
        let e = expand_to_monomials(&s, 0).unwrap();
        assert_eq!(e.degree(), 0);
        assert_relative_eq!(e.coefficients()[0].re, 2.0 / (6.0 * PI).sqrt(), epsilon = 1e-14);
        assert_relative_eq!(e.coefficients()[0].re, 0.4606589, epsilon = 1e-7);
        // leading coefficient equals sqrt((k+1)(k+2)/(pi(k+3)))
        for k in [0usize, 2, 7, 30] {
            let lead = expand_to_monomials(&s, k).unwrap().coefficients()[k].re;
            assert_relative_eq!(lead, leading_coefficient(&s, k).unwrap(), epsilon = 1e-13);
        }
        assert_relative_eq!(
            leading_coefficient(&s, 4).unwrap(),
            (5.0 * 6.0 / (PI * 7.0)).sqrt(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn scaled_monomial_leading() {
        assert_relative_eq!(
            leading_coefficient(&BasisSpec::ScaledMonomial, 4).unwrap(),
            1.2615663,
            epsilon = 1e-7
        );
    }

    #[test]
    fn expansion_round_trip() {
        let specs = [
            BasisSpec::ScaledMonomial,
            BasisSpec::weighted_power(1.0).unwrap(),
            BasisSpec::weighted_power(2.5).unwrap(),
            BasisSpec::ZMinusOneSquared,
        ];
        // fixed low-discrepancy points with |z| <= 1.5
        let points: Vec<Complex64> = (0..100)
            .map(|i| {
                let r = 1.5 * ((i as f64 * 0.618_033_988_749_895).fract());
                let th = 2.0 * PI * ((i as f64 * 0.414_213_562_373_095).fract());
                Complex64::from_polar(r, th)
            })
            .collect();
        for spec in &specs {
            for k in [0usize, 1, 2, 5, 17, 50] {
                let poly = expand_to_monomials(spec, k).unwrap();
                for &z in &points {
                    let direct = eval_basis(spec, k, z).unwrap();
                    let horner = poly.eval(z);
                    assert!(
                        (direct - horner).norm() <= 1e-11 * (1.0 + direct.norm()),
                        "{spec} k={k} z={z}"
                    );
                }
            }
        }
    }

    #[test]
    fn walker_matches_direct_evaluation() {
        let specs = [
            BasisSpec::ScaledMonomial,
            BasisSpec::weighted_power(0.7).unwrap(),
            BasisSpec::ZMinusOneSquared,
            BasisSpec::kac_table(12),
        ];
        for spec in &specs {
            for &z in &[c(0.0, 0.0), c(0.3, -0.8), c(-1.1, 0.2)] {
                let mut w = BasisWalker::new(spec, z);
                for k in 0..=12 {
                    let (p, d) = w.next_value_and_derivative();
                    let pe = eval_basis(spec, k, z).unwrap();
                    let de = eval_basis_derivative(spec, k, z).unwrap();
                    assert!((p - pe).norm() <= 1e-11 * (1.0 + pe.norm()), "{spec} k={k} z={z}");
                    assert!((d - de).norm() <= 1e-11 * (1.0 + de.norm()), "{spec} k={k} z={z}");
                }
            }
        }
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let specs = [
            BasisSpec::ScaledMonomial,
            BasisSpec::weighted_power(1.0).unwrap(),
            BasisSpec::ZMinusOneSquared,
        ];
        let h = 1e-5;
        for spec in &specs {
            for k in [1usize, 2, 5, 12, 30] {
                for &z in &[c(0.1, 0.0), c(0.5, -0.6), c(-0.85, 0.2), c(1.0, 0.0)] {
                    if z.norm() > 0.9 && k > 2 {
                        continue; // FD error grows with |z|^k
                    }
                    let exact = eval_basis_derivative(spec, k, z).unwrap();
                    let fd = (eval_basis(spec, k, z + h).unwrap()
                        - eval_basis(spec, k, z - h).unwrap())
                        / (2.0 * h);
                    assert!((exact - fd).norm() < 1e-6, "{spec} k={k} z={z}");
                }
            }
        }
    }

    #[test]
    fn z_minus_one_derivative_at_one() {
        // central finite difference at z = 1 for k = 2
        let s = BasisSpec::ZMinusOneSquared;
        let h = 1e-5;
        let exact = eval_basis_derivative(&s, 2, c(1.0, 0.0)).unwrap();
        let fd = (eval_basis(&s, 2, c(1.0 + h, 0.0)).unwrap()
            - eval_basis(&s, 2, c(1.0 - h, 0.0)).unwrap())
            / (2.0 * h);
        assert!((exact - fd).norm() < 1e-7);
        assert_relative_eq!(exact.re, 30.0 / (60.0 * PI).sqrt(), epsilon = 1e-13);
    }

    #[test]
    fn sut_diagnostic_behavior() {
        let s = BasisSpec::ScaledMonomial;
        let vals = sut_diagnostic(&s, 100).unwrap();
        assert_eq!(vals.len(), 100);
        let at_100 = vals[99].1;
        assert_relative_eq!(at_100, (101.0 / PI).powf(1.0 / 200.0), epsilon = 1e-13);
        assert_relative_eq!(at_100, 1.0175, epsilon = 1e-4);
        let w = BasisSpec::weighted_power(1.0).unwrap();
        let vals = sut_diagnostic(&w, 200).unwrap();
        assert!((vals[199].1 - 1.0).abs() < 0.05);
        for spec in [s, w, BasisSpec::ZMinusOneSquared] {
            let vals = sut_diagnostic(&spec, 120).unwrap();
            assert!(vals.iter().all(|&(_, v)| v > 0.0));
            for &(k, v) in &vals {
                if k >= 5 {
                    assert!((1.0..=1.5).contains(&v), "{spec} k={k} v={v}");
                }
            }
            for win in vals[9..].windows(2) {
                assert!(win[1].1 <= win[0].1 + 1e-12, "{spec} not monotone at k={}", win[0].0);
            }
        }
        assert!(sut_diagnostic(&BasisSpec::ScaledMonomial, 1).is_err());
    }

    #[test]
    fn gram_identity_small() {
        let g = gram_matrix(&BasisSpec::ScaledMonomial, 5, None).unwrap();
        assert!(g.max_identity_deviation() < 1e-12, "{}", g.max_identity_deviation());
        assert!(!g.approximate && !g.below_exactness);
        let g = gram_matrix(&BasisSpec::weighted_power(1.0).unwrap(), 10, None).unwrap();
        assert!(g.max_identity_deviation() < 1e-10);
        let g = gram_matrix(&BasisSpec::ZMinusOneSquared, 10, None).unwrap();
        assert!(g.max_identity_deviation() < 1e-10);
    }

    #[test]
    fn gram_non_integer_2j_flagged_approximate() {
        let g = gram_matrix(&BasisSpec::weighted_power(0.7).unwrap(), 6, None).unwrap();
        assert!(g.approximate);
        // doubled radial order still converges well
        assert!(g.max_identity_deviation() < 1e-9, "{}", g.max_identity_deviation());
    }

    #[test]
    fn gram_below_exactness_flagged() {
        let g = gram_matrix(&BasisSpec::ScaledMonomial, 8, Some((4, 6))).unwrap();
        assert!(g.below_exactness);
        assert!(g.max_identity_deviation() > 1e-9);
        let g = gram_matrix(&BasisSpec::ScaledMonomial, 8, Some((12, 24))).unwrap();
        assert!(!g.below_exactness);
        assert!(g.max_identity_deviation() < 1e-12);
    }

    #[test]
    fn kac_table_is_unscaled_monomials() {
        let s = BasisSpec::kac_table(5);
        for k in 0..=5 {
            let p = expand_to_monomials(&s, k).unwrap();
            assert_eq!(p.degree(), k);
            assert_relative_eq!(p.coefficients()[k].re, 1.0);
            assert_relative_eq!(leading_coefficient(&s, k).unwrap(), 1.0);
        }
        assert!(eval_basis(&s, 6, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn custom_table_parsing() {
        let text = "1 0\n# comment\n0 0  2 1\n";
        let s = BasisSpec::custom_from_str(text, "custom:test").unwrap();
        assert_eq!(s.max_degree(), Some(1));
        let v = eval_basis(&s, 1, c(1.0, 0.0)).unwrap();
        assert_relative_eq!(v.re, 2.0);
        assert_relative_eq!(v.im, 1.0);
        // wrong row length
        assert!(BasisSpec::custom_from_str("1 0 2 0\n", "x").is_err());
        // zero leading entry
        assert!(BasisSpec::custom_from_str("1 0\n1 0 0 0\n", "x").is_err());
        // odd value count
        assert!(BasisSpec::custom_from_str("1 0 5\n", "x").is_err());
        // non-numeric
        assert!(BasisSpec::custom_from_str("1 q\n", "x").is_err());
    }

    #[test]
    fn cli_names() {
        assert_eq!(BasisSpec::from_cli("scaled-monomial").unwrap(), BasisSpec::ScaledMonomial);
        assert_eq!(
            BasisSpec::from_cli("weighted-power:j=2.5").unwrap(),
            BasisSpec::WeightedPower { j: 2.5 }
        );
        assert_eq!(
            BasisSpec::from_cli("z-minus-one-squared").unwrap(),
            BasisSpec::ZMinusOneSquared
        );
        assert!(BasisSpec::from_cli("weighted-power:j=-1").is_err());
        assert!(BasisSpec::from_cli("weighted-power:k=1").is_err());
        assert!(BasisSpec::from_cli("hermite").is_err());
        assert!(BasisSpec::from_cli("custom:/nonexistent/file.txt").is_err());
        assert_eq!(BasisSpec::ScaledMonomial.to_string(), "scaled-monomial");
    }

    #[test]
    fn monomial_poly_trimming() {
        let p = MonomialPoly::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(p.degree(), 1);
        let zero = MonomialPoly::new(vec![c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(zero.is_zero());
        assert_eq!(zero.degree(), 0);
        let d = MonomialPoly::new(vec![c(1.0, 0.0), c(0.0, 1.0), c(3.0, 0.0)]).derivative();
        assert_eq!(d.coefficients(), &[c(0.0, 1.0), c(6.0, 0.0)]);
    }
}
