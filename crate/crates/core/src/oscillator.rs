//! Harmonic oscillator `H = (p² + ω²q²)/2` started at `q = 0, p = p₀ > 0`.
//!
//! Quasi-canonical coordinates are defined by `P² − Q² = 2p`, `QP = ωq`.
//! Along the exact flow they rotate at half the oscillator frequency:
//! `Q = √(2p₀) sin(ωt/2)`, `P = √(2p₀) cos(ωt/2)`.
//!
//! Poisson brackets use the convention `{p, q} = +1`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Default central-difference step.
pub const DEFAULT_FD_STEP: f64 = 1e-6;

/// Below this, `√(2H) + p` is treated as the `P = 0` branch point.
pub const BRANCH_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HOParams {
    omega: f64,
    p0: f64,
}

impl HOParams {
    pub fn new(omega: f64, p0: f64) -> Result<Self> {
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Error::InvalidOscillator(format!(
                "omega must be positive, got {omega}"
            )));
        }
        if !(p0.is_finite() && p0 > 0.0) {
            return Err(Error::InvalidOscillator(format!(
                "p0 must be positive, got {p0}"
            )));
        }
        Ok(Self { omega, p0 })
    }

    /// Parameters from the energy; `p₀ = √(2E)`.
    pub fn from_energy(omega: f64, energy: f64) -> Result<Self> {
        if !(energy.is_finite() && energy > 0.0) {
            return Err(Error::InvalidOscillator(format!(
                "energy must be positive, got {energy}"
            )));
        }
        Self::new(omega, (2.0 * energy).sqrt())
    }

    /// Same as [`HOParams::new`] but allows `ω = 0`; used for degenerate
    /// Lax checks.
    pub fn degenerate(omega: f64, p0: f64) -> Result<Self> {
        if omega == 0.0 && p0.is_finite() && p0 > 0.0 {
            return Ok(Self { omega, p0 });
        }
        Self::new(omega, p0)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn p0(&self) -> f64 {
        self.p0
    }

    pub fn energy(&self) -> f64 {
        0.5 * self.p0 * self.p0
    }

    pub fn hamiltonian(&self, q: f64, p: f64) -> f64 {
        0.5 * (p * p + self.omega * self.omega * q * q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhasePoint {
    pub t: f64,
    pub q: f64,
    pub p: f64,
    #[serde(rename = "Q")]
    pub big_q: f64,
    #[serde(rename = "P")]
    pub big_p: f64,
    #[serde(rename = "H")]
    pub energy: f64,
}

/// Residuals of the three phase-point constraints, each relative to the
/// magnitude of its own terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstraintResiduals {
    pub difference: f64,
    pub product: f64,
    pub sum: f64,
}

impl ConstraintResiduals {
    pub fn max(&self) -> f64 {
        self.difference.max(self.product).max(self.sum)
    }
}

impl PhasePoint {
    pub fn constraint_residuals(&self, omega: f64) -> ConstraintResiduals {
        let (qq, pp) = (self.big_q, self.big_p);
        let rel = |lhs: f64, rhs: f64, scale: f64| (lhs - rhs).abs() / scale.max(1.0);
        ConstraintResiduals {
            difference: rel(pp * pp - qq * qq, 2.0 * self.p, pp * pp + qq * qq),
            product: rel(qq * pp, omega * self.q, (qq * pp).abs()),
            sum: rel(
                pp * pp + qq * qq,
                2.0 * (2.0 * self.energy).sqrt(),
                pp * pp + qq * qq,
            ),
        }
    }
}

/// Exact solution with `q(0) = 0`, `p(0) = p₀`.
pub fn trajectory(params: &HOParams, t: f64) -> PhasePoint {
    let w = params.omega;
    let p0 = params.p0;
    let r = (2.0 * p0).sqrt();
    let (s, c) = (w * t).sin_cos();
    let (sh, ch) = (0.5 * w * t).sin_cos();
    let q = if w == 0.0 { p0 * t } else { p0 / w * s };
    PhasePoint {
        t,
        q,
        p: p0 * c,
        big_q: r * sh,
        big_p: r * ch,
        energy: params.energy(),
    }
}

/// Time derivatives `(q̇, ṗ, Q̇, Ṗ)` at a point of the flow.
pub fn velocities(params: &HOParams, point: &PhasePoint) -> [f64; 4] {
    let w = params.omega;
    [
        point.p,
        -w * w * point.q,
        0.5 * w * point.big_p,
        -0.5 * w * point.big_q,
    ]
}

/// Principal-branch reconstruction `P = √(√(2H) + p)`, `Q = ωq / P`.
pub fn quasi_from_phase(params: &HOParams, q: f64, p: f64) -> Result<(f64, f64)> {
    let h = params.hamiltonian(q, p);
    let base = (2.0 * h).sqrt() + p;
    if base <= BRANCH_TOLERANCE {
        return Err(Error::BranchPoint(base));
    }
    let big_p = base.sqrt();
    Ok((params.omega * q / big_p, big_p))
}

/// Central-difference Poisson bracket
/// `{f, g} = ∂f/∂p ∂g/∂q − ∂f/∂q ∂g/∂p`.
pub fn poisson_bracket<F, G>(f: F, g: G, q: f64, p: f64, step: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<f64>,
    G: Fn(f64, f64) -> Result<f64>,
{
    if step.is_nan() || step <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "finite-difference step must be positive, got {step}"
        )));
    }
    let dq = |h: &dyn Fn(f64, f64) -> Result<f64>| -> Result<f64> {
        Ok((h(q + step, p)? - h(q - step, p)?) / (2.0 * step))
    };
    let dp = |h: &dyn Fn(f64, f64) -> Result<f64>| -> Result<f64> {
        Ok((h(q, p + step)? - h(q, p - step)?) / (2.0 * step))
    };
    Ok(dp(&f)? * dq(&g)? - dq(&f)? * dp(&g)?)
}

/// `{P, Q} = ω / (2√(2H))`.
pub fn quasi_bracket_exact(params: &HOParams, q: f64, p: f64) -> f64 {
    params.omega / (2.0 * (2.0 * params.hamiltonian(q, p)).sqrt())
}
