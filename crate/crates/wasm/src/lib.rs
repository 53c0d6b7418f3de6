//! Browser bindings. Every export returns a JSON string; errors surface as
//! thrown JavaScript strings.

use operadic_core::bianchi::{dynamical_deformation, BianchiLabel, BianchiType, TABLE_HEADERS};
use operadic_core::ncalg::render::{render_coeff, Style};
use operadic_core::ncalg::Alphabet;
use operadic_core::oscillator::{trajectory, HOParams};
use operadic_core::qjacobi::{
    corollary_he, derivative_algebra, spectrum_determinant, verify_theorem_q, Convention,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

const MAX_STEPS: usize = 20_000;

/// Structure constants and quasi-canonical coordinates sampled over
/// `[0, 4π/ω]`.
pub fn deformation_json(label: &str, a: f64, omega: f64, energy: f64, steps: usize) -> Result<String, String> {
    let ty: BianchiType = label.parse().map_err(|e| format!("{e}"))?;
    let label = BianchiLabel::new(ty, a).map_err(|e| e.to_string())?;
    let params = HOParams::from_energy(omega, energy).map_err(|e| e.to_string())?;
    if steps == 0 || steps > MAX_STEPS {
        return Err(format!("steps must be in 1..={MAX_STEPS}"));
    }
    let t1 = 4.0 * std::f64::consts::PI / omega;
    let mut t = Vec::with_capacity(steps + 1);
    let mut coords: Vec<Vec<f64>> = (0..4).map(|_| Vec::with_capacity(steps + 1)).collect();
    let mut mu: Vec<Vec<f64>> = (0..9).map(|_| Vec::with_capacity(steps + 1)).collect();
    for k in 0..=steps {
        let tk = t1 * k as f64 / steps as f64;
        let pt = trajectory(&params, tk);
        let sc = dynamical_deformation(&label, &params, tk).map_err(|e| e.to_string())?;
        t.push(tk);
        for (col, v) in coords.iter_mut().zip([pt.q, pt.p, pt.big_q, pt.big_p]) {
            col.push(v);
        }
        for (col, v) in mu.iter_mut().zip(sc.table()) {
            col.push(v);
        }
    }
    Ok(json!({
        "t": t,
        "q": coords[0], "p": coords[1], "Q": coords[2], "P": coords[3],
        "headers": TABLE_HEADERS,
        "mu": mu,
    })
    .to_string())
}

/// Closed-form check of the quantum Jacobi operator plus its energy
/// conserving reduction and derivative algebra.
pub fn jacobi_json(label: &str, convention: &str, alphabet: &str) -> Result<String, String> {
    let ty: BianchiType = label.parse().map_err(|e| format!("{e}"))?;
    let conv: Convention = convention.parse().map_err(|e| format!("{e}"))?;
    let alphabet: Alphabet = alphabet.parse().map_err(|e| format!("{e}"))?;
    let report = verify_theorem_q(ty, conv, alphabet).map_err(|e| e.to_string())?;
    let he = corollary_he(ty).map_err(|e| e.to_string())?;
    let d = derivative_algebra(ty).map_err(|e| e.to_string())?;
    Ok(json!({
        "theorem": report,
        "energy_conservation": he.components.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "C": render_coeff(&d.c, Style::Hbar),
        "beta_sq": render_coeff(&d.beta_sq, Style::Hbar),
        "heisenberg": d.heisenberg,
    })
    .to_string())
}

/// Rows `(n, n + 1/2, |Δ|)`.
pub fn spectrum_json(n_max: u32) -> Result<String, String> {
    if n_max > 1000 {
        return Err("n_max must be at most 1000".into());
    }
    let rows: Vec<_> = (0..=n_max)
        .map(|n| json!({"n": n, "energy": f64::from(n) + 0.5, "delta": spectrum_determinant(n)}))
        .collect();
    Ok(json!(rows).to_string())
}

#[wasm_bindgen]
pub fn deformation_series(label: &str, a: f64, omega: f64, energy: f64, steps: usize) -> Result<String, JsValue> {
    deformation_json(label, a, omega, energy, steps).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn jacobi_report(label: &str, convention: &str, alphabet: &str) -> Result<String, JsValue> {
    jacobi_json(label, convention, alphabet).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn spectrum(n_max: u32) -> Result<String, JsValue> {
    spectrum_json(n_max).map_err(|e| JsValue::from_str(&e))
}
