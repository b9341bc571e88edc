//! The evaluable functions and the parameters each one takes.

use std::collections::BTreeMap;

use whittaker_ext::{
    bessel_k, beta, beta_p, beta_pq, beta_v, f_p, f_p_integral, f_pq, f_pq_integral, f_pv_integral, f_pv_series,
    gauss_2f1, kummer_phi, m_classical, m_p, m_pq, m_pv, phi_p, phi_p_integral, phi_pq, phi_pq_integral,
    phi_pv_integral, phi_pv_series, EvalResult, QuadratureSpec, Result, WhittakerParams,
};

/// Function id and its parameter names, in the order tables iterate them.
pub const FUNCTIONS: [(&str, &[&str]); 17] = [
    ("beta", &["a", "b"]),
    ("beta_p", &["a", "b", "p"]),
    ("beta_pq", &["a", "b", "p", "q"]),
    ("beta_v", &["a", "b", "p", "v"]),
    ("phi", &["b", "c", "z"]),
    ("2f1", &["a", "b", "c", "z"]),
    ("phi_p", &["b", "c", "p", "z"]),
    ("phi_pq", &["b", "c", "p", "q", "z"]),
    ("phi_pv", &["b", "c", "p", "v", "z"]),
    ("f_p", &["a", "b", "c", "p", "z"]),
    ("f_pq", &["a", "b", "c", "p", "q", "z"]),
    ("f_pv", &["a", "b", "c", "p", "v", "z"]),
    ("m", &["lambda", "rho", "z"]),
    ("m_p", &["p", "lambda", "rho", "z"]),
    ("m_pq", &["p", "q", "lambda", "rho", "z"]),
    ("m_pv", &["p", "v", "lambda", "rho", "z"]),
    ("bessel_k", &["nu", "x"]),
];

pub fn parameters(id: &str) -> Option<&'static [&'static str]> {
    FUNCTIONS.iter().find(|(f, _)| *f == id).map(|(_, p)| *p)
}

/// Series or Euler-integral path for the extended hypergeometric families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Method {
    #[default]
    Series,
    Integral,
}

/// Evaluates `id` at `args`, which must hold every name from [`parameters`].
pub fn evaluate(
    id: &str,
    args: &BTreeMap<&str, f64>,
    method: Method,
    spec: &QuadratureSpec<f64>,
) -> Result<EvalResult<f64>> {
    let g = |k: &str| args[k];
    let integral = method == Method::Integral;
    let (a, b, c, p, q, v, z) = (
        args.get("a").copied().unwrap_or(0.0),
        args.get("b").copied().unwrap_or(0.0),
        args.get("c").copied().unwrap_or(0.0),
        args.get("p").copied().unwrap_or(0.0),
        args.get("q").copied().unwrap_or(0.0),
        args.get("v").copied().unwrap_or(0.0),
        args.get("z").copied().unwrap_or(0.0),
    );
    match id {
        "beta" => beta(a, b).map(EvalResult::exact),
        "beta_p" => beta_p(a, b, p, spec),
        "beta_pq" => beta_pq(a, b, p, q, spec),
        "beta_v" => beta_v(a, b, p, v, spec),
        "phi" => kummer_phi(b, c, z),
        "2f1" => gauss_2f1(a, b, c, z),
        "phi_p" if integral => phi_p_integral(b, c, p, z, spec),
        "phi_p" => phi_p(b, c, p, z, spec),
        "phi_pq" if integral => phi_pq_integral(b, c, p, q, z, spec),
        "phi_pq" => phi_pq(b, c, p, q, z, spec),
        "phi_pv" if integral => phi_pv_integral(b, c, p, v, z, spec),
        "phi_pv" => phi_pv_series(b, c, p, v, z, spec),
        "f_p" if integral => f_p_integral(a, b, c, p, z, spec),
        "f_p" => f_p(a, b, c, p, z, spec),
        "f_pq" if integral => f_pq_integral(a, b, c, p, q, z, spec),
        "f_pq" => f_pq(a, b, c, p, q, z, spec),
        "f_pv" if integral => f_pv_integral(a, b, c, p, v, z, spec),
        "f_pv" => f_pv_series(a, b, c, p, v, z, spec),
        "m" => m_classical(g("lambda"), g("rho"), z),
        "m_p" => m_p(p, g("lambda"), g("rho"), z, spec),
        "m_pq" => m_pq(p, q, g("lambda"), g("rho"), z, spec),
        "m_pv" => m_pv(&WhittakerParams::new(p, v, g("lambda"), g("rho"))?, z, spec),
        "bessel_k" => bessel_k(g("nu"), g("x")),
        _ => unreachable!("unregistered function {id}"),
    }
}
