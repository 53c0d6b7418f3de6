//! Matrix and operadic Lax pairs of the harmonic oscillator.
//!
//! The operadic pair is `(μ, M)` with `M` the constant unary operation of the
//! matrix pair and `μ` a binary anti-commutative operation on `ℝ³`,
//! parametrised by nine constants `C₁…C₉`. The Lax equation
//! `dμ/dt = [M, μ]` (Gerstenhaber bracket, `M` first) holds along the flow.

use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::Serialize;

use crate::bianchi::StructureConstants;
use crate::error::{Error, Result};
use crate::ncalg::{rat, CoeffPoly, Symbol};
use crate::operad::{gerstenhaber, MultiOp};
use crate::oscillator::{trajectory, velocities, HOParams, PhasePoint};

pub type Matrix3 = [[f64; 3]; 3];

/// `L(q, p)` of the matrix Lax pair.
pub fn build_l(params: &HOParams, point: &PhasePoint) -> Matrix3 {
    let wq = params.omega() * point.q;
    [[point.p, wq, 0.0], [wq, -point.p, 0.0], [0.0, 0.0, 1.0]]
}

/// `M = (ω/2)·J₁₂`, generator of rotations in the 1-2 plane.
pub fn build_m(omega: f64) -> Matrix3 {
    let h = 0.5 * omega;
    [[0.0, -h, 0.0], [h, 0.0, 0.0], [0.0, 0.0, 0.0]]
}

/// The matrix pair; `L` is evaluated on demand.
#[derive(Debug, Clone, Copy)]
pub struct MatrixLax {
    params: HOParams,
}

impl MatrixLax {
    pub fn new(params: HOParams) -> Self {
        Self { params }
    }

    pub fn l(&self, point: &PhasePoint) -> Matrix3 {
        build_l(&self.params, point)
    }

    pub fn m(&self) -> Matrix3 {
        build_m(self.params.omega())
    }
}

fn mat_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = (0..3).map(|s| a[i][s] * b[s][j]).sum();
        }
    }
    out
}

fn max_abs_diff(a: &Matrix3, b: &Matrix3) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Residual {
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Residual {
    fn new(residual: f64, tolerance: f64) -> Self {
        Self {
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }
}

/// Central-difference `dL/dt` against `ML − LM` at `trajectory(t)`.
pub fn verify_matrix_lax(params: &HOParams, t: f64, dt: f64, tol: f64) -> Residual {
    let lax = MatrixLax::new(*params);
    let fwd = lax.l(&trajectory(params, t + dt));
    let bwd = lax.l(&trajectory(params, t - dt));
    let mut fd = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            fd[i][j] = (fwd[i][j] - bwd[i][j]) / (2.0 * dt);
        }
    }
    let l = lax.l(&trajectory(params, t));
    let m = lax.m();
    let ml = mat_mul(&m, &l);
    let lm = mat_mul(&l, &m);
    let mut rhs = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            rhs[i][j] = ml[i][j] - lm[i][j];
        }
    }
    Residual::new(max_abs_diff(&fd, &rhs), tol)
}

/// The nine parameters `C₁…C₉` (stored 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OperadicParams(pub [f64; 9]);

impl OperadicParams {
    /// Parameter `C_ν` for `ν = 1..=9`.
    pub fn c(&self, nu: usize) -> f64 {
        self.0[nu - 1]
    }

    /// Requires `C₂² + C₃² + C₅² + C₆² + C₇² + C₈² ≠ 0`.
    pub fn is_admissible(&self) -> bool {
        [2, 3, 5, 6, 7, 8].iter().any(|&nu| self.c(nu) != 0.0)
    }

    /// Admissible parameters uniform in `[-2, 2)`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let mut c = [0.0; 9];
            for v in c.iter_mut() {
                *v = rng.gen_range(-2.0..2.0);
            }
            let params = Self(c);
            if params.is_admissible() {
                return params;
            }
        }
    }
}

/// Arithmetic needed to evaluate the ansatz symbolically or numerically.
pub trait Ring:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

/// The nine independent components, in table order
/// `[μ¹₁₂, μ²₁₂, μ³₁₂, μ¹₂₃, μ²₂₃, μ³₂₃, μ¹₃₁, μ²₃₁, μ³₃₁]`, as functions of
/// `(ωq, p, Q, P)`.
pub fn ansatz<T: Ring>(c: &[T; 9], omega_q: &T, p: &T, big_q: &T, big_p: &T) -> [T; 9] {
    let cc = |nu: usize| c[nu - 1].clone();
    let (wq, p, bq, bp) = (omega_q.clone(), p.clone(), big_q.clone(), big_p.clone());
    let mu_2_13 = cc(2) * p.clone() - cc(3) * wq.clone() + cc(4);
    let mu_3_13 = cc(7) * bp.clone() + cc(8) * bq.clone();
    [
        cc(5) * bp.clone() + cc(6) * bq.clone(),
        cc(5) * bq.clone() - cc(6) * bp.clone(),
        cc(9),
        cc(2) * p.clone() - cc(3) * wq.clone() - cc(4),
        cc(2) * wq.clone() + cc(3) * p.clone() + cc(1),
        cc(7) * bq - cc(8) * bp,
        cc(2) * wq + cc(3) * p - cc(1),
        -mu_2_13,
        -mu_3_13,
    ]
}

/// Inverts the ansatz at `q = 0, p = p₀, Q = 0, P = √(2p₀)` given the
/// table-order initial components, `1/(2p₀)` and `1/√(2p₀)`.
pub fn initial_value_solution<T: Ring>(table: &[T; 9], half: &T, inv_2p0: &T, inv_r: &T) -> [T; 9] {
    let m = |k: usize| table[k].clone();
    let (m1_12, m2_12, m3_12) = (m(0), m(1), m(2));
    let (m1_23, m2_23, m3_23) = (m(3), m(4), m(5));
    let m1_31 = m(6);
    let m2_13 = -m(7);
    let m3_13 = -m(8);
    [
        half.clone() * (m2_23.clone() - m1_31.clone()),
        inv_2p0.clone() * (m2_13.clone() + m1_23.clone()),
        inv_2p0.clone() * (m2_23 + m1_31),
        half.clone() * (m2_13 - m1_23),
        inv_r.clone() * m1_12,
        -(inv_r.clone() * m2_12),
        inv_r.clone() * m3_13,
        -(inv_r.clone() * m3_23),
        m3_12,
    ]
}

fn mu_at(c: &OperadicParams, omega_q: f64, p: f64, big_q: f64, big_p: f64) -> StructureConstants {
    StructureConstants::from_table(&ansatz(&c.0, &omega_q, &p, &big_q, &big_p))
}

/// `μ` of the operadic pair without the admissibility check.
pub fn mu_components(c: &OperadicParams, params: &HOParams, point: &PhasePoint) -> StructureConstants {
    mu_at(c, params.omega() * point.q, point.p, point.big_q, point.big_p)
}

/// `μ` of the operadic pair at a phase point as a degree-2 operation.
pub fn build_mu(c: &OperadicParams, params: &HOParams, point: &PhasePoint) -> Result<MultiOp> {
    if !c.is_admissible() {
        return Err(Error::InadmissibleParams);
    }
    Ok(mu_components(c, params, point).to_multi_op())
}

/// Solves for `C₁…C₉` from `μ|_{t=0}`.
pub fn solve_c(initial: &StructureConstants, p0: f64) -> Result<OperadicParams> {
    if p0.is_nan() || p0 <= 0.0 {
        return Err(Error::InvalidOscillator(format!(
            "p0 must be positive, got {p0}"
        )));
    }
    initial.check_anticommutative()?;
    let r = (2.0 * p0).sqrt();
    Ok(OperadicParams(initial_value_solution(
        &initial.table(),
        &0.5,
        &(1.0 / (2.0 * p0)),
        &(1.0 / r),
    )))
}

/// Exact counterpart of [`solve_c`] for rational initial data and symbolic
/// `p₀`; the results live in `ℚ[p₀^{±1}, r]`.
pub fn solve_c_exact(table: &[CoeffPoly; 9]) -> [CoeffPoly; 9] {
    let half = CoeffPoly::ratio(1, 2);
    let inv_2p0 = CoeffPoly::monomial(rat(1, 2), &[(Symbol::P0, -1)]);
    let inv_r = CoeffPoly::symbol(Symbol::R).inverse_monomial().expect("monomial");
    initial_value_solution(table, &half, &inv_2p0, &inv_r)
}

/// Exact ansatz at the initial point `q = 0, p = p₀, Q = 0, P = r`.
pub fn initial_mu_exact(c: &[CoeffPoly; 9]) -> [CoeffPoly; 9] {
    let zero = CoeffPoly::zero();
    ansatz(
        c,
        &zero,
        &CoeffPoly::symbol(Symbol::P0),
        &zero,
        &CoeffPoly::symbol(Symbol::R),
    )
}

/// How `dμ/dt` is obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DerivativeMode {
    /// Central differences over trajectory time with the given step.
    FiniteDifference(f64),
    /// Chain rule with `q̇ = p`, `ṗ = −ω²q`, `Q̇ = (ω/2)P`, `Ṗ = −(ω/2)Q`.
    Analytic,
}

/// Residual of `dμ/dt = [M, μ]` at `trajectory(t)`.
pub fn verify_operadic_lax(
    c: &OperadicParams,
    params: &HOParams,
    t: f64,
    mode: DerivativeMode,
    tol: f64,
) -> Residual {
    let point = trajectory(params, t);
    let mu = mu_components(c, params, &point).to_multi_op();
    let m = MultiOp::from_matrix(&build_m(params.omega())).expect("3x3 matrix");
    let rhs = gerstenhaber(&m, &mu).expect("matching dimensions");
    let lhs = match mode {
        DerivativeMode::Analytic => {
            // μ is affine in (ωq, p, Q, P): its derivative is the linear part
            // evaluated on the velocities.
            let [qd, pd, bqd, bpd] = velocities(params, &point);
            let at_vel = mu_at(c, params.omega() * qd, pd, bqd, bpd);
            let at_zero = mu_at(c, 0.0, 0.0, 0.0, 0.0);
            at_vel.sub(&at_zero).to_multi_op()
        }
        DerivativeMode::FiniteDifference(dt) => {
            let fwd = mu_components(c, params, &trajectory(params, t + dt));
            let bwd = mu_components(c, params, &trajectory(params, t - dt));
            fwd.sub(&bwd).scale(1.0 / (2.0 * dt)).to_multi_op()
        }
    };
    Residual::new(lhs.max_abs_diff(&rhs), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bianchi::{structure_constants, BianchiLabel, BianchiType};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn hp() -> HOParams {
        HOParams::new(1.7, 1.3).unwrap()
    }

    #[test]
    fn l_at_special_points() {
        let p = hp();
        let l = build_l(&p, &trajectory(&p, 0.0));
        assert_eq!(l, [[1.3, 0.0, 0.0], [0.0, -1.3, 0.0], [0.0, 0.0, 1.0]]);
        let origin = PhasePoint {
            t: 0.0,
            q: 0.0,
            p: 0.0,
            big_q: 0.0,
            big_p: 0.0,
            energy: 0.0,
        };
        assert_eq!(build_l(&p, &origin), [[0.0; 3], [0.0; 3], [0.0, 0.0, 1.0]]);
        for k in 0..10 {
            let l = build_l(&p, &trajectory(&p, 0.3 * k as f64));
            assert!((l[0][0] + l[1][1] + l[2][2] - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn matrix_lax_at_t0() {
        let p = hp();
        let l = build_l(&p, &trajectory(&p, 0.0));
        let m = build_m(p.omega());
        let ml = mat_mul(&m, &l);
        let lm = mat_mul(&l, &m);
        let wp = p.omega() * p.p0();
        let expected = [[0.0, wp, 0.0], [wp, 0.0, 0.0], [0.0, 0.0, 0.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((ml[i][j] - lm[i][j] - expected[i][j]).abs() < 1e-15);
            }
        }
        assert!(verify_matrix_lax(&p, 0.0, 1e-5, 1e-8).pass);
    }

    #[test]
    fn matrix_lax_along_flow() {
        let p = hp();
        let tol = 1e-6 * (p.omega() * p.p0()).max(1.0);
        for k in 0..50 {
            let r = verify_matrix_lax(&p, 0.23 * k as f64, 1e-5, tol);
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn degenerate_frequency() {
        let p = HOParams::degenerate(0.0, 1.0).unwrap();
        let r = verify_matrix_lax(&p, 0.7, 1e-5, 1e-12);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn solve_c_for_vii() {
        let a = 2.0;
        let p0 = 1.3;
        let sc = structure_constants(&BianchiLabel::new(BianchiType::VIIa, a).unwrap());
        let c = solve_c(&sc, p0).unwrap();
        let r = (2.0 * p0).sqrt();
        let expected = [0.0, -1.0 / (2.0 * p0), 0.0, -0.5, 0.0, a / r, -a / r, 0.0, 1.0];
        for (x, y) in c.0.iter().zip(expected) {
            assert!((x - y).abs() < 1e-15, "{c:?}");
        }
    }

    #[test]
    fn solve_c_for_iii_and_pure_c9() {
        let p0: f64 = 0.9;
        let r = (2.0 * p0).sqrt();
        let sc = structure_constants(&BianchiLabel::new(BianchiType::IIIa1, 1.0).unwrap());
        let c = solve_c(&sc, p0).unwrap();
        assert_eq!(c.c(9), -1.0);
        assert!((c.c(6) - 1.0 / r).abs() < 1e-15);
        assert!((c.c(7) + 1.0 / r).abs() < 1e-15);

        let mut table = [0.0; 9];
        table[2] = 1.0;
        let c = solve_c(&StructureConstants::from_table(&table), p0).unwrap();
        assert_eq!(c.0, [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        assert!(!c.is_admissible());
    }

    #[test]
    fn solve_c_rejects_non_representable() {
        let mut sc = StructureConstants::zero();
        sc.mu[0][0][0] = 1.0;
        assert!(matches!(solve_c(&sc, 1.0), Err(Error::NotRepresentable(_))));
        let mut sc = StructureConstants::zero();
        sc.mu[0][1][2] = 1.0;
        assert!(matches!(solve_c(&sc, 1.0), Err(Error::NotRepresentable(_))));
        assert!(solve_c(&StructureConstants::zero(), -1.0).is_err());
    }

    #[test]
    fn c9_only_is_constant() {
        let c = OperadicParams([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let p = hp();
        assert_eq!(build_mu(&c, &p, &trajectory(&p, 0.3)), Err(Error::InadmissibleParams));
        for k in 0..5 {
            let mu = mu_components(&c, &p, &trajectory(&p, k as f64));
            let mut expected = [0.0; 9];
            expected[2] = 1.0;
            assert_eq!(mu.table(), expected);
            assert_eq!(mu.mu[2][1][0], -1.0);
            let r = verify_operadic_lax(&c, &p, k as f64, DerivativeMode::Analytic, 0.0);
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn symbolic_component_check() {
        // dμ¹₁₂/dt = (ω/2)(C₆P − C₅Q) must equal [M, μ]¹₁₂.
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let p = hp();
        let c = OperadicParams::random(&mut rng);
        let pt = trajectory(&p, 0.8);
        let mu = build_mu(&c, &p, &pt).unwrap();
        let m = MultiOp::from_matrix(&build_m(p.omega())).unwrap();
        let bracket = gerstenhaber(&m, &mu).unwrap();
        let expected = 0.5 * p.omega() * (c.c(6) * pt.big_p - c.c(5) * pt.big_q);
        assert!((bracket.get(&[0, 0, 1]) - expected).abs() < 1e-14);
    }

    #[test]
    fn operadic_lax_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let p = hp();
        for _ in 0..20 {
            let c = OperadicParams::random(&mut rng);
            for k in 0..10 {
                let t = 0.37 * k as f64 - 1.0;
                let a = verify_operadic_lax(&c, &p, t, DerivativeMode::Analytic, 1e-12);
                assert!(a.pass, "{a:?}");
                let f = verify_operadic_lax(&c, &p, t, DerivativeMode::FiniteDifference(1e-5), 1e-6);
                assert!(f.pass, "{f:?}");
            }
        }
    }

    #[test]
    fn unary_case_is_matrix_lax() {
        let p = hp();
        let t = PI / 5.0;
        let m = MultiOp::from_matrix(&build_m(p.omega())).unwrap();
        let l = MultiOp::from_matrix(&build_l(&p, &trajectory(&p, t))).unwrap();
        let bracket = gerstenhaber(&m, &l).unwrap();
        let mm = build_m(p.omega());
        let ll = build_l(&p, &trajectory(&p, t));
        let ml = mat_mul(&mm, &ll);
        let lm = mat_mul(&ll, &mm);
        for i in 0..3 {
            for j in 0..3 {
                assert!((bracket.get(&[i, j]) - (ml[i][j] - lm[i][j])).abs() < 1e-15);
            }
        }
    }
}
