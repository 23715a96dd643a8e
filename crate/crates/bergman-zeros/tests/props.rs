//! Property tests for the structural invariants: expansion round-trips,
//! Cauchy-Schwarz, monotonicity, and root-count conservation.

use bergman_zeros::basis::{eval_basis, eval_basis_derivative, expand_to_monomials};
use bergman_zeros::counts::{
    expected_count_contour, expected_count_disk, expected_count_unit_disk, scaling_limit,
};
use bergman_zeros::intensity::intensity_general;
use bergman_zeros::kernel::kernel_series;
use bergman_zeros::sampler::find_roots;
use bergman_zeros::BasisSpec;
use num_complex::Complex64;
use proptest::prelude::*;

fn family() -> impl Strategy<Value = BasisSpec> {
    prop_oneof![
        Just(BasisSpec::ScaledMonomial),
        (0.25f64..4.0).prop_map(|j| BasisSpec::weighted_power(j).unwrap()),
        Just(BasisSpec::ZMinusOneSquared),
    ]
}

fn disk_point(max_radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..max_radius, 0.0..std::f64::consts::TAU)
        .prop_map(|(r, th)| Complex64::from_polar(r, th))
}

proptest! {
    #[test]
    fn expansion_round_trips(spec in family(), k in 0usize..30, z in disk_point(1.3)) {
        let p = expand_to_monomials(&spec, k).unwrap();
        let direct = eval_basis(&spec, k, z).unwrap();
        let horner = p.eval(z);
        prop_assert!(
            (direct - horner).norm() <= 1e-10 * (1.0 + direct.norm()),
            "k={k} z={z}: {direct} vs {horner}"
        );
        let ddirect = eval_basis_derivative(&spec, k, z).unwrap();
        let dhorner = p.derivative().eval(z);
        prop_assert!(
            (ddirect - dhorner).norm() <= 1e-10 * (1.0 + ddirect.norm()),
            "derivative k={k} z={z}"
        );
    }

    #[test]
    fn cauchy_schwarz_everywhere(spec in family(), n in 0usize..60, z in disk_point(0.999)) {
        let t = kernel_series(&spec, n, z).unwrap();
        prop_assert!(t.k00 > 0.0);
        let product = t.k11 * t.k00;
        prop_assert!(
            t.k01.norm_sqr() <= product + 1e-10 * (1.0 + product),
            "n={n} z={z}: |K01|^2 = {} vs K11 K00 = {product}",
            t.k01.norm_sqr()
        );
    }

    #[test]
    fn intensity_nonnegative_and_bounded_by_kernel(
        spec in family(), n in 0usize..60, z in disk_point(0.999),
    ) {
        let rho = intensity_general(&spec, n, z).unwrap();
        prop_assert!(rho >= 0.0);
        // rho <= K11 / (pi K00) since the Cauchy-Schwarz term only subtracts
        let t = kernel_series(&spec, n, z).unwrap();
        let cap = t.k11 / (std::f64::consts::PI * t.k00);
        prop_assert!(rho <= cap + 1e-10 * (1.0 + cap), "rho = {rho}, cap = {cap}");
    }

    #[test]
    fn count_monotone_in_radius(n in 1usize..200, a in 0.02f64..0.97, b in 0.02f64..0.97) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let c_lo = expected_count_disk(n, lo).unwrap().value;
        let c_hi = expected_count_disk(n, hi).unwrap().value;
        prop_assert!(c_lo <= c_hi + 1e-12, "n={n}: N({lo}) = {c_lo} > N({hi}) = {c_hi}");
        prop_assert!(c_lo >= 0.0);
        prop_assert!(c_hi <= expected_count_unit_disk(n).value + 1e-9);
    }

    #[test]
    fn count_monotone_in_degree(r in 0.05f64..0.97, n in 1usize..100) {
        // more terms, more zeros: E[N_n] is nondecreasing in n at fixed r
        let small = expected_count_disk(n, r).unwrap().value;
        let large = expected_count_disk(n + 1, r).unwrap().value;
        prop_assert!(large + 1e-12 >= small, "n={n} r={r}: {small} -> {large}");
    }

    #[test]
    fn contour_agrees_with_rational(n in 1usize..50, r in 0.05f64..0.95) {
        let rational = expected_count_disk(n, r).unwrap().value;
        let contour = expected_count_contour(&BasisSpec::ScaledMonomial, n, r, 8 * (n + 1))
            .unwrap();
        prop_assert!(
            (rational - contour.estimate.value).abs() <= 1e-6 * (1.0 + rational),
            "n={n} r={r}: {rational} vs {}",
            contour.estimate.value
        );
        prop_assert!(contour.imag_residual <= 1e-8);
    }

    #[test]
    fn scaling_limit_decreasing_and_bracketed(a in 1e-3f64..20.0, b in 1e-3f64..20.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let f_lo = scaling_limit(lo).unwrap();
        let f_hi = scaling_limit(hi).unwrap();
        prop_assert!(f_hi <= f_lo + 1e-12, "f({lo}) = {f_lo} < f({hi}) = {f_hi}");
        prop_assert!(f_lo <= 2.0 / 3.0 + 1e-12);
        prop_assert!(f_hi > 0.0);
    }

    #[test]
    fn root_count_conserved(
        coeffs in proptest::collection::vec(
            (-3.0f64..3.0, -3.0f64..3.0).prop_map(|(re, im)| Complex64::new(re, im)),
            2..14,
        ),
    ) {
        // keep the polynomial honestly full-degree
        prop_assume!(coeffs.last().unwrap().norm() > 1e-3);
        prop_assume!(coeffs.iter().any(|c| c.norm() > 1e-3));
        let d = coeffs.len() - 1;
        let rs = find_roots(&coeffs).unwrap();
        prop_assert_eq!(rs.roots.len(), d);
        prop_assert!(rs.max_residual <= 1e-8);
        // Vieta: root sum matches -c_{d-1}/c_d
        let sum: Complex64 = rs.roots.iter().sum();
        let expect = -coeffs[d - 1] / coeffs[d];
        prop_assert!(
            (sum - expect).norm() <= 1e-6 * (1.0 + expect.norm()),
            "root sum {sum} vs {expect}"
        );
    }

    #[test]
    fn count_in_disk_monotone(seed in 0u64..500, r1 in 0.1f64..1.4, r2 in 0.1f64..1.4) {
        let rs = bergman_zeros::sampler::sample_roots(
            &BasisSpec::ScaledMonomial, 10, 99, seed,
        ).unwrap();
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        prop_assert!(rs.count_in_disk(lo) <= rs.count_in_disk(hi));
        prop_assert!(rs.count_in_disk(hi) <= 10);
    }
}
