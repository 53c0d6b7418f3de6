//! Invariants exercised through the public API on generated inputs.

use operadic_core::bianchi::{
    classical_jacobiator, deformation_closed_form, dynamical_deformation, structure_constants,
    BianchiLabel, BianchiType, StructureConstants,
};
use operadic_core::lax::{solve_c, verify_operadic_lax, DerivativeMode, OperadicParams};
use operadic_core::operad::{gerstenhaber, MultiOp};
use operadic_core::oscillator::{trajectory, HOParams};
use proptest::prelude::*;

fn op(degree: usize, dim: usize) -> impl Strategy<Value = MultiOp> {
    let len = dim.pow(degree as u32 + 1);
    prop::collection::vec(-1.0..1.0f64, len)
        .prop_map(move |c| MultiOp::new(degree, dim, c).unwrap())
}

fn triple() -> impl Strategy<Value = (MultiOp, MultiOp, MultiOp)> {
    (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3)
        .prop_flat_map(|(dim, a, b, c)| (op(a, dim), op(b, dim), op(c, dim)))
}

fn parity(f: &MultiOp, g: &MultiOp) -> f64 {
    if ((f.degree() - 1) * (g.degree() - 1)).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn label() -> impl Strategy<Value = BianchiLabel> {
    prop_oneof![
        (0.1..3.0f64).prop_map(|a| BianchiLabel::new(BianchiType::VIIa, a).unwrap()),
        Just(BianchiLabel::new(BianchiType::IIIa1, 1.0).unwrap()),
        (0.1..0.9f64).prop_map(|a| BianchiLabel::new(BianchiType::VIa, a).unwrap()),
        (1.1..3.0f64).prop_map(|a| BianchiLabel::new(BianchiType::VIa, a).unwrap()),
    ]
}

fn oscillator() -> impl Strategy<Value = HOParams> {
    (0.2..3.0f64, 0.2..3.0f64).prop_map(|(w, e)| HOParams::from_energy(w, e).unwrap())
}

fn vec3() -> impl Strategy<Value = [f64; 3]> {
    prop::array::uniform3(-1.0..1.0f64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_graded_antisymmetric((f, g, _) in triple()) {
        let fg = gerstenhaber(&f, &g).unwrap();
        let gf = gerstenhaber(&g, &f).unwrap();
        let sum = fg.try_add(&gf.scale(parity(&f, &g))).unwrap();
        prop_assert!(sum.max_abs() <= 1e-12 * fg.max_abs().max(1.0));
    }

    #[test]
    fn bracket_satisfies_graded_jacobi((f, g, h) in triple()) {
        let t1 = gerstenhaber(&f, &gerstenhaber(&g, &h).unwrap()).unwrap().scale(parity(&f, &h));
        let t2 = gerstenhaber(&g, &gerstenhaber(&h, &f).unwrap()).unwrap().scale(parity(&g, &f));
        let t3 = gerstenhaber(&h, &gerstenhaber(&f, &g).unwrap()).unwrap().scale(parity(&h, &g));
        let scale = t1.max_abs().max(t2.max_abs()).max(t3.max_abs()).max(1.0);
        let sum = t1.try_add(&t2).unwrap().try_add(&t3).unwrap();
        prop_assert!(sum.max_abs() <= 1e-12 * scale);
    }

    #[test]
    fn operadic_lax_holds_for_any_parameters(
        c in prop::array::uniform9(-2.0..2.0f64),
        hp in oscillator(),
        t in -10.0..10.0f64,
    ) {
        let r = verify_operadic_lax(&OperadicParams(c), &hp, t, DerivativeMode::Analytic, 1e-10);
        prop_assert!(r.pass, "residual {}", r.residual);
    }

    #[test]
    fn deformation_agrees_with_closed_form(l in label(), hp in oscillator(), t in -10.0..10.0f64) {
        let flow = dynamical_deformation(&l, &hp, t).unwrap();
        let closed = deformation_closed_form(&l, &hp, &trajectory(&hp, t)).unwrap();
        prop_assert!(flow.max_abs_diff(&closed) <= 1e-12 * (1.0 + l.a()));
    }

    #[test]
    fn deformation_keeps_jacobi(
        l in label(), hp in oscillator(), t in -10.0..10.0f64,
        x in vec3(), y in vec3(), z in vec3(),
    ) {
        let sc = dynamical_deformation(&l, &hp, t).unwrap();
        let j = classical_jacobiator(&sc, &x, &y, &z);
        let scale = 1.0 + l.a() * l.a();
        prop_assert!(j.iter().all(|v| v.abs() <= 1e-10 * scale), "{j:?}");
    }

    #[test]
    fn deformation_starts_at_table(l in label(), hp in oscillator()) {
        let c = solve_c(&structure_constants(&l), hp.p0()).unwrap();
        prop_assert!(c.is_admissible());
        let at_zero = dynamical_deformation(&l, &hp, 0.0).unwrap();
        prop_assert!(at_zero.max_abs_diff(&structure_constants(&l)) <= 1e-12 * (1.0 + l.a()));
    }

    #[test]
    fn table_round_trips(table in prop::array::uniform9(-5.0..5.0f64)) {
        let sc = StructureConstants::from_table(&table);
        let back = StructureConstants::from_multi_op(&sc.to_multi_op()).unwrap();
        prop_assert_eq!(back.table(), table);
    }
}
