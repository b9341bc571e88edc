#![allow(clippy::excessive_precision)] // reference digits kept as published
mod common;

use common::{gl_beta_weighted, gl_integrate, rel};
use proptest::prelude::*;
use whittaker_ext::kernels::{bessel_k, beta, gamma, gauss_2f1, kummer_phi, log_gamma};
use whittaker_ext::quadrature::{integrate_01, QuadratureSpec};

/// (order, x, K_order(x)) to 17 significant digits, 40-digit reference arithmetic.
const K_TABLE: &[(f64, f64, f64)] = &[
    (0.0, 0.001, 7.0236888005623813),
    (0.0, 0.01, 4.7212447301610949),
    (0.0, 0.3, 1.3724600605442974),
    (0.0, 1.0, 4.2102443824070833e-1),
    (0.0, 1.999, 1.1403383058923291e-1),
    (0.0, 2.0, 1.1389387274953344e-1),
    (0.0, 3.3, 2.4610632145839319e-2),
    (0.0, 7.5, 2.4917761635611439e-4),
    (0.0, 25.0, 3.4641615622131144e-12),
    (0.0, 120.0, 8.7635680998255777e-54),
    (0.0, 450.0, 2.1818069535391104e-197),
    (0.0, 700.0, 4.6697764316853769e-306),
    (0.2, 0.001, 9.8606209510981592),
    (0.2, 0.01, 5.6146709749639065),
    (0.2, 0.3, 1.4204576140205966),
    (0.2, 1.0, 4.2721999513673499e-1),
    (0.2, 1.999, 1.1498340466290945e-1),
    (0.2, 2.0, 1.1484187551823622e-1),
    (0.2, 3.3, 2.4742652273611117e-2),
    (0.2, 7.5, 2.4980386224433289e-4),
    (0.2, 25.0, 3.4668807769210107e-12),
    (0.2, 120.0, 8.7650227833020562e-54),
    (0.2, 450.0, 2.1819038174004908e-197),
    (0.2, 700.0, 4.6699097606171585e-306),
    (0.5, 0.001, 3.9593659513116643e+1),
    (0.5, 0.01, 1.240843453284693e+1),
    (0.5, 0.3, 1.6951610563392831),
    (0.5, 1.0, 4.6106850444789456e-1),
    (0.5, 1.999, 1.2008779543145005e-1),
    (0.5, 2.0, 1.1993777196806145e-1),
    (0.5, 3.3, 2.5446682920518307e-2),
    (0.5, 7.5, 2.5311663751514588e-4),
    (0.5, 25.0, 3.4811912768406952e-12),
    (0.5, 120.0, 8.7726638232031407e-54),
    (0.5, 450.0, 2.1824124231783071e-197),
    (0.5, 700.0, 4.6706097999361335e-306),
    (0.77, 0.001, 2.0884212988277647e+2),
    (0.77, 0.01, 3.5428065342309994e+1),
    (0.77, 0.3, 2.2358315953093983),
    (0.77, 1.0, 5.2138879011359345e-1),
    (0.77, 1.999, 1.2886782816420213e-1),
    (0.77, 2.0, 1.2870301324433576e-1),
    (0.77, 3.3, 2.6636647314495707e-2),
    (0.77, 7.5, 2.5861720124826891e-4),
    (0.77, 25.0, 3.5046837833619716e-12),
    (0.77, 120.0, 8.785154831732491e-54),
    (0.77, 450.0, 2.1832431584228923e-197),
    (0.77, 700.0, 4.6717530896086758e-306),
    (1.0, 0.001, 9.9999623815608555e+2),
    (1.0, 0.01, 9.9973894118296246e+1),
    (1.0, 0.3, 3.0559920334573251),
    (1.0, 1.0, 6.0190723019723457e-1),
    (1.0, 1.999, 1.4004984207710966e-1),
    (1.0, 2.0, 1.3986588181652243e-1),
    (1.0, 3.3, 2.8116934272716618e-2),
    (1.0, 7.5, 2.6529739012528953e-4),
    (1.0, 25.0, 3.5327780731999338e-12),
    (1.0, 120.0, 8.8000075200927614e-54),
    (1.0, 450.0, 2.1842298396756037e-197),
    (1.0, 700.0, 4.6731107967079661e-306),
    (1.5, 0.001, 3.9633253172629759e+4),
    (1.5, 0.01, 1.2532518878175399e+3),
    (1.5, 0.3, 7.3456979108035605),
    (1.5, 1.0, 9.2213700889578912e-1),
    (1.5, 1.999, 1.8016173011451661e-1),
    (1.5, 2.0, 1.7990665795209217e-1),
    (1.5, 3.3, 3.3157798957039007e-2),
    (1.5, 7.5, 2.8686552251716533e-4),
    (1.5, 25.0, 3.620438927914323e-12),
    (1.5, 120.0, 8.8457693550631668e-54),
    (1.5, 450.0, 2.1872622285631478e-197),
    (1.5, 700.0, 4.677282099650328e-306),
    (2.3, 0.001, 2.2819311682520396e+7),
    (2.3, 0.01, 1.1436529966112098e+5),
    (2.3, 0.3, 4.5034117620671674e+1),
    (2.3, 1.0, 2.4205579369209238),
    (2.3, 1.999, 3.2564385794380563e-1),
    (2.3, 2.0, 3.2510864704247955e-1),
    (2.3, 3.3, 4.9177668353879136e-2),
    (2.3, 7.5, 3.4661604695874043e-4),
    (2.3, 25.0, 3.8426968141106196e-12),
    (2.3, 120.0, 8.958054983233673e-54),
    (2.3, 450.0, 2.1946545661950241e-197),
    (2.3, 700.0, 4.687442246460431e-306),
    (2.7, 0.001, 6.3181669267201612e+8),
    (2.7, 0.01, 1.2606216837489591e+6),
    (2.7, 0.3, 1.2783914271458475e+2),
    (2.7, 1.0, 4.374241826191164),
    (2.7, 1.999, 4.7407590925862553e-1),
    (2.7, 2.0, 4.7323192055328012e-1),
    (2.7, 3.3, 6.342202176339142e-2),
    (2.7, 7.5, 3.9229888037683487e-4),
    (2.7, 25.0, 3.9962138916643033e-12),
    (2.7, 120.0, 9.0327011587182379e-54),
    (2.7, 450.0, 2.1995315562012541e-197),
    (2.7, 700.0, 4.6941385810800988e-306),
    (5.5, 0.001, 3.7453440881630043e+19),
    (5.5, 0.01, 1.1843752798874263e+14),
    (5.5, 0.3, 8.8543140269418461e+5),
    (5.5, 1.0, 1.1208575343128317e+3),
    (5.5, 1.999, 2.1152842172919793e+1),
    (5.5, 2.0, 2.1090307589508805e+1),
    (5.5, 3.3, 9.4808312994714915e-1),
    (5.5, 7.5, 1.5695031466472485e-3),
    (5.5, 25.0, 6.2570791648302373e-12),
    (5.5, 120.0, 9.935386698911274e-54),
    (5.5, 450.0, 2.2563012344690363e-197),
    (5.5, 700.0, 4.7717008781293484e-306),
    (9.99, 0.001, 1.6836264076733868e+38),
    (9.99, 0.01, 1.7228383615097225e+28),
    (9.99, 0.3, 3.0110476804895291e+13),
    (9.99, 1.0, 1.7546459276289595e+8),
    (9.99, 1.999, 1.5965933675049575e+5),
    (9.99, 2.0, 1.5884620092439479e+5),
    (9.99, 3.3, 8.8538381019089802e+2),
    (9.99, 7.5, 7.720715526525032e-2),
    (9.99, 25.0, 2.3984688964733778e-11),
    (9.99, 120.0, 1.3256471594741947e-53),
    (9.99, 450.0, 2.4373587498213247e-197),
    (9.99, 700.0, 5.0145562776603848e-306),
    (17.25, 0.001, 1.8516664830320127e+70),
    (17.25, 0.01, 1.0412669979479127e+53),
    (17.25, 0.3, 3.4404862358411058e+27),
    (17.25, 1.0, 3.2425350851862594e+18),
    (17.25, 1.999, 2.0039943245945692e+13),
    (17.25, 2.0, 1.9866581731831776e+13),
    (17.25, 3.3, 3.1683258294283331e+9),
    (17.25, 7.5, 1.1397645403709914e+3),
    (17.25, 25.0, 9.8360975550097753e-10),
    (17.25, 120.0, 3.0061834979099292e-53),
    (17.25, 450.0, 3.035486568808051e-197),
    (17.25, 700.0, 5.7747418190333117e-306),
    (30.0, 0.001, 4.7468847843445484e+129),
    (30.0, 0.01, 4.7468807331257052e+99),
    (30.0, 0.3, 2.3037434048109915e+55),
    (30.0, 1.0, 4.7061455267836269e+39),
    (30.0, 1.999, 4.3358411069312913e+30),
    (30.0, 2.0, 4.2711257548876876e+30),
    (30.0, 3.3, 1.2030599422739806e+24),
    (30.0, 7.5, 1.6434510635165441e+13),
    (30.0, 25.0, 3.7967299557087642e-5),
    (30.0, 120.0, 3.6010679401032151e-52),
    (30.0, 450.0, 5.9220195694648446e-197),
    (30.0, 700.0, 8.8765408976374651e-306),
];

#[test]
fn bessel_k_matches_reference_table() {
    for &(nu, x, expected) in K_TABLE {
        let got = bessel_k(nu, x).unwrap();
        assert!(got.converged);
        assert!(
            rel(got.value, expected) <= 1e-11,
            "K_{nu}({x}) = {} vs {expected}",
            got.value
        );
    }
}

#[test]
fn bessel_k_against_cosh_integral() {
    // K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt
    let oracle = gl_integrate(|t| (-3.3 * t.cosh()).exp() * (2.7 * t).cosh(), 0.0, 12.0, 1e-16);
    let frozen = 6.342_202_176_339_142e-2;
    assert!(rel(oracle, frozen) < 1e-12);
    assert!(rel(bessel_k(2.7, 3.3).unwrap().value, frozen) < 1e-13);
}

#[test]
fn gamma_against_euler_integral() {
    let oracle = gl_integrate(|t: f64| t.powf(6.3) * (-t).exp(), 0.0, 120.0, 1e-10);
    let frozen = 1.271_423_633_663_908_8e3;
    assert!(rel(oracle, frozen) < 1e-12);
    assert!(rel(gamma(7.3).unwrap(), frozen) < 1e-13);
}

#[test]
fn log_gamma_against_euler_integral() {
    let oracle = gl_integrate(|t: f64| t.powf(9.5) * (-t).exp(), 0.0, 150.0, 1e-6).ln();
    let frozen = 1.394_062_521_940_376_4e1;
    assert!((oracle - frozen).abs() < 1e-11);
    assert!((log_gamma(10.5).unwrap() - frozen).abs() < 1e-13);
}

#[test]
fn beta_against_euler_integral() {
    let oracle = gl_beta_weighted(2.3, 4.1, |_| 1.0, 1e-15);
    let frozen = 3.300_354_377_385_548_2e-2;
    assert!(rel(oracle, frozen) < 1e-12);
    assert!(rel(beta(2.3, 4.1).unwrap(), frozen) < 1e-13);
    assert!(rel(beta(2.0, 3.0).unwrap(), 1.0 / 12.0) < 1e-14);
}

#[test]
fn kummer_against_integral_representation() {
    let (b, c, z) = (1.7, 3.4, 2.5);
    let norm = gl_beta_weighted(b, c - b, |_| 1.0, 1e-15);
    let oracle = gl_beta_weighted(b, c - b, |t| (z * t).exp(), 1e-15) / norm;
    let frozen = 4.149_097_691_071_685_9;
    assert!(rel(oracle, frozen) < 1e-12);
    let got = kummer_phi(b, c, z).unwrap();
    assert!(got.converged);
    assert!(rel(got.value, frozen) < 1e-14);
}

#[test]
fn gauss_against_euler_integral() {
    let (a, b, c, z) = (1.2, 2.1, 3.7, 0.4);
    let norm = gl_beta_weighted(b, c - b, |_| 1.0, 1e-15);
    let oracle = gl_beta_weighted(b, c - b, |t: f64| (1.0 - z * t).powf(-a), 1e-15) / norm;
    let frozen = 1.387_393_116_601_874_3;
    assert!(rel(oracle, frozen) < 1e-12);
    assert!(rel(gauss_2f1(a, b, c, z).unwrap().value, frozen) < 1e-14);
}

#[test]
fn exp_log_gamma_tracks_gamma() {
    let mut x = 0.1_f64;
    while x <= 30.0 {
        let g = gamma(x).unwrap();
        assert!(rel(log_gamma(x).unwrap().exp(), g) <= 1e-12, "x = {x}");
        x += 0.173;
    }
}

proptest! {
    #[test]
    fn beta_is_symmetric(a in 0.05f64..40.0, b in 0.05f64..40.0) {
        prop_assert!(rel(beta(a, b).unwrap(), beta(b, a).unwrap()) <= 1e-13);
    }

    #[test]
    fn beta_matches_quadrature(a in 0.6f64..5.0, b in 0.6f64..5.0) {
        let spec = QuadratureSpec::default();
        let q = integrate_01(|t: f64, tc: f64| t.powf(a - 1.0) * tc.powf(b - 1.0), &spec).unwrap();
        prop_assert!(q.converged);
        prop_assert!(rel(q.value, beta(a, b).unwrap()) <= 1e-10);
    }

    #[test]
    fn gamma_recurrence(x in 0.1f64..40.0) {
        prop_assert!(rel(gamma(x + 1.0).unwrap(), x * gamma(x).unwrap()) <= 1e-13);
    }

    #[test]
    fn legendre_duplication(r in 0.2f64..20.0) {
        let lhs = 2f64.powf(r - 1.0) * gamma(r / 2.0).unwrap() * gamma((r + 1.0) / 2.0).unwrap()
            / std::f64::consts::PI.sqrt();
        prop_assert!(rel(lhs, gamma(r).unwrap()) <= 1e-12);
    }

    #[test]
    fn bessel_recurrence(nu in 1.0f64..29.0, x in 1e-3f64..700.0) {
        let km = bessel_k(nu - 1.0, x).unwrap().value;
        let k0 = bessel_k(nu, x).unwrap().value;
        let kp = bessel_k(nu + 1.0, x).unwrap().value;
        let residual = (kp - km - 2.0 * nu / x * k0).abs() / kp.abs();
        prop_assert!(residual <= 1e-10, "residual {residual}");
    }

    #[test]
    fn kummer_matches_integral(b in 0.3f64..4.0, gap in 0.3f64..4.0, z in -5.0f64..5.0) {
        let c = b + gap;
        let spec = QuadratureSpec::default().with_rel_tol(1e-12);
        let num = integrate_01(|t: f64, tc: f64| t.powf(b - 1.0) * tc.powf(gap - 1.0) * (z * t).exp(), &spec).unwrap();
        let den = beta(b, gap).unwrap();
        let series = kummer_phi(b, c, z).unwrap();
        prop_assert!(rel(series.value, num.value / den) <= 1e-9);
    }

    #[test]
    fn gauss_matches_integral(a in -2.0f64..3.0, b in 0.3f64..4.0, gap in 0.3f64..4.0, z in -0.9f64..0.9) {
        let c = b + gap;
        let spec = QuadratureSpec::default().with_rel_tol(1e-12);
        let num = integrate_01(|t: f64, tc: f64| t.powf(b - 1.0) * tc.powf(gap - 1.0) * (1.0 - z * t).powf(-a), &spec).unwrap();
        let den = beta(b, gap).unwrap();
        let series = gauss_2f1(a, b, c, z).unwrap();
        prop_assert!(series.converged);
        prop_assert!(rel(series.value, num.value / den) <= 1e-9);
    }
}
