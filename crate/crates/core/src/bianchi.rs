//! Bianchi types II, VII_a, III_{a=1}, VI_{a≠1} and their dynamical
//! deformations along the oscillator flow.
//!
//! Structure constants follow `[e_j, e_k] = μ^i_{jk} e_i`. Arrays are
//! 0-based (`mu[i][j][k]`); the table order used throughout is
//! `[μ¹₁₂, μ²₁₂, μ³₁₂, μ¹₂₃, μ²₂₃, μ³₂₃, μ¹₃₁, μ²₃₁, μ³₃₁]`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lax::{build_mu, solve_c};
use crate::operad::MultiOp;
use crate::oscillator::{trajectory, HOParams, PhasePoint};

/// `(i, j, k)` index triples (0-based) of the nine table columns.
pub const TABLE_INDICES: [(usize, usize, usize); 9] = [
    (0, 0, 1),
    (1, 0, 1),
    (2, 0, 1),
    (0, 1, 2),
    (1, 1, 2),
    (2, 1, 2),
    (0, 2, 0),
    (1, 2, 0),
    (2, 2, 0),
];

/// Column headers in 1-based index notation.
pub const TABLE_HEADERS: [&str; 9] = [
    "mu_12^1", "mu_12^2", "mu_12^3", "mu_23^1", "mu_23^2", "mu_23^3", "mu_31^1", "mu_31^2",
    "mu_31^3",
];

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct StructureConstants {
    pub mu: [[[f64; 3]; 3]; 3],
}

impl StructureConstants {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Anti-commutative constants from the nine table-order components.
    pub fn from_table(table: &[f64; 9]) -> Self {
        let mut mu = [[[0.0; 3]; 3]; 3];
        for (&(i, j, k), &v) in TABLE_INDICES.iter().zip(table) {
            mu[i][j][k] = v;
            mu[i][k][j] = -v;
        }
        Self { mu }
    }

    pub fn table(&self) -> [f64; 9] {
        TABLE_INDICES.map(|(i, j, k)| self.mu[i][j][k])
    }

    pub fn to_multi_op(&self) -> MultiOp {
        let coeffs = self.mu.iter().flatten().flatten().copied().collect();
        MultiOp::new(2, 3, coeffs).expect("27 coefficients")
    }

    pub fn from_multi_op(op: &MultiOp) -> Result<Self> {
        if op.degree() != 2 || op.dim() != 3 {
            return Err(Error::InvalidArgument(format!(
                "expected a binary operation on R^3, got degree {} dim {}",
                op.degree(),
                op.dim()
            )));
        }
        let mut mu = [[[0.0; 3]; 3]; 3];
        for (i, plane) in mu.iter_mut().enumerate() {
            for (j, row) in plane.iter_mut().enumerate() {
                for (k, v) in row.iter_mut().enumerate() {
                    *v = op.get(&[i, j, k]);
                }
            }
        }
        Ok(Self { mu })
    }

    /// Zero diagonal and `μ^i_{jk} = −μ^i_{kj}`, exactly.
    pub fn check_anticommutative(&self) -> Result<()> {
        for i in 0..3 {
            for j in 0..3 {
                if self.mu[i][j][j] != 0.0 {
                    return Err(Error::NotRepresentable(format!(
                        "mu^{}_{}{} = {} must vanish",
                        i + 1,
                        j + 1,
                        j + 1,
                        self.mu[i][j][j]
                    )));
                }
                for k in j + 1..3 {
                    if self.mu[i][j][k] != -self.mu[i][k][j] {
                        return Err(Error::NotRepresentable(format!(
                            "mu^{}_{}{} is not antisymmetric",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.mu
            .iter()
            .flatten()
            .flatten()
            .zip(other.mu.iter().flatten().flatten())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out
            .mu
            .iter_mut()
            .flatten()
            .flatten()
            .zip(other.mu.iter().flatten().flatten())
        {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut out = *self;
        out.mu.iter_mut().flatten().flatten().for_each(|v| *v *= factor);
        out
    }

    /// `[x, y]^i = μ^i_{jk} x^j y^k`.
    pub fn bracket(&self, x: &[f64; 3], y: &[f64; 3]) -> [f64; 3] {
        let mut out = [0.0; 3];
        for (o, mu_i) in out.iter_mut().zip(&self.mu) {
            for (row, xj) in mu_i.iter().zip(x) {
                for (m, yk) in row.iter().zip(y) {
                    *o += m * xj * yk;
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BianchiType {
    II,
    VIIa,
    IIIa1,
    VIa,
}

impl BianchiType {
    pub const DEFORMABLE: [BianchiType; 3] = [BianchiType::VIIa, BianchiType::IIIa1, BianchiType::VIa];

    pub fn name(self) -> &'static str {
        match self {
            BianchiType::II => "II",
            BianchiType::VIIa => "VIIa",
            BianchiType::IIIa1 => "IIIa1",
            BianchiType::VIa => "VIa",
        }
    }

    /// `μ³₁₂` of the deformed algebras: `+1` for VII_a, `−1` otherwise.
    pub fn mu3_12(self) -> f64 {
        match self {
            BianchiType::VIIa => 1.0,
            BianchiType::IIIa1 | BianchiType::VIa => -1.0,
            BianchiType::II => 0.0,
        }
    }
}

impl fmt::Display for BianchiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BianchiType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "II" => Ok(BianchiType::II),
            "VIIa" | "VII" => Ok(BianchiType::VIIa),
            "IIIa1" | "III" => Ok(BianchiType::IIIa1),
            "VIa" | "VI" => Ok(BianchiType::VIa),
            _ => Err(Error::InvalidBianchi(format!("unknown type {s}"))),
        }
    }
}

/// A Bianchi type with its parameter `a` (fixed to 1 for III).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BianchiLabel {
    ty: BianchiType,
    a: f64,
}

impl BianchiLabel {
    pub fn new(ty: BianchiType, a: f64) -> Result<Self> {
        let a = match ty {
            BianchiType::II | BianchiType::IIIa1 => 1.0,
            BianchiType::VIIa | BianchiType::VIa => {
                if !(a.is_finite() && a > 0.0) {
                    return Err(Error::InvalidBianchi(format!("a must be positive, got {a}")));
                }
                if ty == BianchiType::VIa && a == 1.0 {
                    return Err(Error::InvalidBianchi("VI requires a != 1".into()));
                }
                a
            }
        };
        Ok(Self { ty, a })
    }

    pub fn ty(&self) -> BianchiType {
        self.ty
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// `(α, n¹, n², n³)` of `[e₁,e₂] = −αe₂ + n³e₃, [e₂,e₃] = n¹e₁,
    /// [e₃,e₁] = n²e₂ + αe₃`.
    pub fn parameters(&self) -> (f64, f64, f64, f64) {
        match self.ty {
            BianchiType::II => (0.0, 1.0, 0.0, 0.0),
            BianchiType::VIIa => (self.a, 0.0, 1.0, 1.0),
            BianchiType::IIIa1 => (1.0, 0.0, 1.0, -1.0),
            BianchiType::VIa => (self.a, 0.0, 1.0, -1.0),
        }
    }
}

/// Table row of the undeformed algebra.
pub fn structure_constants(label: &BianchiLabel) -> StructureConstants {
    let a = label.a;
    let row = match label.ty {
        BianchiType::II => [0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        BianchiType::VIIa => [0.0, -a, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, a],
        BianchiType::IIIa1 => [0.0, -1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0],
        BianchiType::VIa => [0.0, -a, -1.0, 0.0, 0.0, 0.0, 0.0, 1.0, a],
    };
    StructureConstants::from_table(&row)
}

/// Structure constants rebuilt from `(α, n¹, n², n³)`.
pub fn from_parameters(label: &BianchiLabel) -> StructureConstants {
    let (alpha, n1, n2, n3) = label.parameters();
    StructureConstants::from_table(&[0.0, -alpha, n3, n1, 0.0, 0.0, 0.0, n2, alpha])
}

fn require_deformable(label: &BianchiLabel) -> Result<()> {
    if label.ty == BianchiType::II {
        return Err(Error::Unsupported(label.ty.to_string()));
    }
    Ok(())
}

/// Deformation generated by the operadic Lax pair whose initial value is
/// the undeformed algebra.
pub fn dynamical_deformation(
    label: &BianchiLabel,
    params: &HOParams,
    t: f64,
) -> Result<StructureConstants> {
    require_deformable(label)?;
    let c = solve_c(&structure_constants(label), params.p0())?;
    let mu = build_mu(&c, params, &trajectory(params, t))?;
    StructureConstants::from_multi_op(&mu)
}

/// Closed-form deformation written out directly in `(q, p, Q, P)`.
pub fn deformation_closed_form(
    label: &BianchiLabel,
    params: &HOParams,
    point: &PhasePoint,
) -> Result<StructureConstants> {
    require_deformable(label)?;
    let a = label.a;
    let p0 = params.p0();
    let r = (2.0 * p0).sqrt();
    let wq = params.omega() * point.q;
    let (p, bq, bp) = (point.p, point.big_q, point.big_p);
    Ok(StructureConstants::from_table(&[
        a * bq / r,
        -a * bp / r,
        label.ty.mu3_12(),
        (p - p0) / (-2.0 * p0),
        wq / (-2.0 * p0),
        -a * bq / r,
        wq / (-2.0 * p0),
        (p + p0) / (2.0 * p0),
        a * bp / r,
    ]))
}

/// `J(x;y;z) = [x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
pub fn classical_jacobiator(
    sc: &StructureConstants,
    x: &[f64; 3],
    y: &[f64; 3],
    z: &[f64; 3],
) -> [f64; 3] {
    let a = sc.bracket(x, &sc.bracket(y, z));
    let b = sc.bracket(y, &sc.bracket(z, x));
    let c = sc.bracket(z, &sc.bracket(x, y));
    [a[0] + b[0] + c[0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn label(ty: BianchiType, a: f64) -> BianchiLabel {
        BianchiLabel::new(ty, a).unwrap()
    }

    fn norm(v: &[f64; 3]) -> f64 {
        v.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    #[test]
    fn table_rows() {
        let ii = structure_constants(&label(BianchiType::II, 1.0));
        assert_eq!(ii.table(), [0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let iii = structure_constants(&label(BianchiType::IIIa1, 7.0));
        assert_eq!(iii.table(), [0.0, -1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0]);
        let vii = structure_constants(&label(BianchiType::VIIa, 2.0));
        assert_eq!(vii.mu[1][0][1], -2.0);
        assert_eq!(vii.mu[2][2][0], 2.0);
        assert_eq!(vii.mu[2][0][1], 1.0);
        assert_eq!(vii.mu[1][2][0], 1.0);
        assert_eq!(vii.mu[2][0][2], -2.0);
    }

    #[test]
    fn table_agrees_with_parameters() {
        for (ty, a) in [
            (BianchiType::II, 1.0),
            (BianchiType::VIIa, 0.5),
            (BianchiType::IIIa1, 1.0),
            (BianchiType::VIa, 2.0),
        ] {
            let l = label(ty, a);
            assert_eq!(structure_constants(&l), from_parameters(&l));
        }
    }

    #[test]
    fn parameter_domain() {
        assert!(BianchiLabel::new(BianchiType::VIIa, 0.0).is_err());
        assert!(BianchiLabel::new(BianchiType::VIa, 1.0).is_err());
        assert!(BianchiLabel::new(BianchiType::VIa, -2.0).is_err());
        assert_eq!(BianchiLabel::new(BianchiType::IIIa1, 5.0).unwrap().a(), 1.0);
        assert_eq!("VIIa".parse::<BianchiType>().unwrap(), BianchiType::VIIa);
        assert!("IX".parse::<BianchiType>().is_err());
    }

    #[test]
    fn undeformed_algebras_are_lie() {
        let vs = [[1.0, 2.0, -1.0], [0.5, -3.0, 2.0], [4.0, 1.0, 1.0]];
        for ty in [BianchiType::II, BianchiType::VIIa, BianchiType::IIIa1, BianchiType::VIa] {
            let sc = structure_constants(&label(ty, 3.0));
            let j = classical_jacobiator(&sc, &vs[0], &vs[1], &vs[2]);
            assert_eq!(j, [0.0; 3], "{ty}");
        }
    }

    #[test]
    fn deformation_starts_at_table_one() {
        let hp = HOParams::new(1.1, 0.7).unwrap();
        for ty in BianchiType::DEFORMABLE {
            let l = label(ty, 0.5);
            let d = dynamical_deformation(&l, &hp, 0.0).unwrap();
            assert!(d.max_abs_diff(&structure_constants(&l)) < 1e-15, "{ty}");
        }
        assert!(matches!(
            dynamical_deformation(&label(BianchiType::II, 1.0), &hp, 0.0),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn vii_at_half_period() {
        let hp = HOParams::new(1.5, 0.8).unwrap();
        let a = 2.0;
        let d = dynamical_deformation(&label(BianchiType::VIIa, a), &hp, PI / hp.omega()).unwrap();
        assert!(d.mu[1][2][0].abs() < 1e-15);
        assert!((d.mu[0][1][2] - 1.0).abs() < 1e-15);
        assert!((d.mu[0][0][1] - a).abs() < 1e-15);
        assert!(d.mu[1][0][1].abs() < 1e-15);
    }

    #[test]
    fn generated_matches_closed_form() {
        let hp = HOParams::new(0.9, 1.4).unwrap();
        for (ty, a) in [(BianchiType::VIIa, 2.0), (BianchiType::IIIa1, 1.0), (BianchiType::VIa, 0.5)] {
            let l = label(ty, a);
            for k in 0..40 {
                let t = 0.31 * k as f64;
                let gen = dynamical_deformation(&l, &hp, t).unwrap();
                let closed = deformation_closed_form(&l, &hp, &trajectory(&hp, t)).unwrap();
                assert!(gen.max_abs_diff(&closed) < 1e-12, "{ty} t={t}");
                if ty == BianchiType::IIIa1 {
                    assert_eq!(gen.mu[2][0][1], -1.0);
                }
            }
        }
    }

    #[test]
    fn jacobi_along_flow() {
        let hp = HOParams::new(1.3, 0.6).unwrap();
        let (x, y, z) = ([1.0, -2.0, 3.0], [0.0, 4.0, -1.0], [2.0, 2.0, 5.0]);
        let scale = norm(&x) * norm(&y) * norm(&z);
        for k in 0..50 {
            let d = dynamical_deformation(&label(BianchiType::VIIa, 1.5), &hp, 0.21 * k as f64).unwrap();
            let j = classical_jacobiator(&d, &x, &y, &z);
            assert!(norm(&j) <= 1e-10 * scale);
            assert!(norm(&classical_jacobiator(&d, &x, &x, &z)) <= 1e-12 * scale);
        }
    }

    #[test]
    fn multi_op_round_trip() {
        let sc = structure_constants(&label(BianchiType::VIa, 3.0));
        assert_eq!(StructureConstants::from_multi_op(&sc.to_multi_op()).unwrap(), sc);
        assert!(StructureConstants::from_multi_op(&MultiOp::zero(1, 3).unwrap()).is_err());
    }
}
