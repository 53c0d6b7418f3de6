use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;

use super::*;

fn pq() -> Arc<CommutationTable> {
    Arc::new(CommutationTable::quasi_ccr())
}

fn ext() -> Arc<CommutationTable> {
    Arc::new(CommutationTable::quasi_ccr_extended())
}

fn lam_eps() -> CoeffPoly {
    &CoeffPoly::symbol(Symbol::Lambda) * &CoeffPoly::symbol(Symbol::Eps)
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `Qⁿ Pᵐ = Σₖ k! C(n,k) C(m,k) (−λε)ᵏ P^{m−k} Q^{n−k}`.
fn reorder_oracle(t: &Arc<CommutationTable>, n: u32, m: u32) -> NCPoly {
    let mut out = NCPoly::zero(t);
    let minus_c = -lam_eps();
    for k in 0..=n.min(m) {
        let fact: i64 = (1..=k as i64).product();
        let c = CoeffPoly::integer(fact * binom(n, k) * binom(m, k));
        let coeff = &c * &minus_c.pow(k as i32).unwrap();
        let mut word = vec![Letter::P; (m - k) as usize];
        word.extend(vec![Letter::Q; (n - k) as usize]);
        out = out.add(&NCPoly::from_word(t, word, coeff));
    }
    out
}

#[test]
fn basic_reordering() {
    let t = pq();
    let qp = NCPoly::from_word(&t, vec![Letter::Q, Letter::P], CoeffPoly::one());
    let expected = NCPoly::from_word(&t, vec![Letter::P, Letter::Q], CoeffPoly::one())
        .sub(&NCPoly::scalar(&t, lam_eps()));
    assert_eq!(qp, expected);
    assert!(qp.is_normal());

    let pq_word = NCPoly::from_word(&t, vec![Letter::P, Letter::Q], CoeffPoly::one());
    assert_eq!(pq_word.len(), 1);
    assert_eq!(pq_word.coefficient(&[Letter::P, Letter::Q]), CoeffPoly::one());

    let qqp = NCPoly::from_word(&t, vec![Letter::Q, Letter::Q, Letter::P], CoeffPoly::one());
    let expected = NCPoly::from_word(&t, vec![Letter::P, Letter::Q, Letter::Q], CoeffPoly::one())
        .sub(&NCPoly::from_word(&t, vec![Letter::Q], &CoeffPoly::integer(2) * &lam_eps()));
    assert_eq!(qqp, expected);
}

#[test]
fn reordering_matches_closed_form() {
    let t = pq();
    for n in 0..=4 {
        for m in 0..=4 {
            let mut word = vec![Letter::Q; n as usize];
            word.extend(vec![Letter::P; m as usize]);
            let got = NCPoly::from_word(&t, word, CoeffPoly::one());
            assert_eq!(got, reorder_oracle(&t, n, m), "Q^{n} P^{m}");
        }
    }
}

#[test]
fn algebra_operations() {
    let t = pq();
    let p = NCPoly::letter(&t, Letter::P);
    let q = NCPoly::letter(&t, Letter::Q);
    assert_eq!(p.commutator(&q), NCPoly::scalar(&t, lam_eps()));
    assert!(p.add(&q).commutator(&p.add(&q)).is_zero());
    let prod = p.add(&q).mul(&p.sub(&q));
    let expected = p
        .mul(&p)
        .sub(&q.mul(&q))
        .sub(&NCPoly::scalar(&t, lam_eps()));
    assert_eq!(prod, expected);
}

#[test]
fn alphabet_mismatch_is_reported() {
    let a = NCPoly::letter(&pq(), Letter::P);
    let b = NCPoly::letter(&ext(), Letter::P);
    assert_eq!(a.try_mul(&b), Err(crate::Error::AlphabetMismatch));
    assert!(NCPoly::try_letter(&pq(), Letter::SmallQ).is_err());
}

#[test]
fn extended_table_canonical_pair() {
    let t = ext();
    let q = NCPoly::letter(&t, Letter::SmallQ);
    let p = NCPoly::letter(&t, Letter::SmallP);
    let big_p = NCPoly::letter(&t, Letter::P);
    assert_eq!(p.commutator(&q), NCPoly::symbol(&t, Symbol::Lambda));
    assert!(q.commutator(&big_p).is_zero());
    assert!(p.commutator(&NCPoly::letter(&t, Letter::Q)).is_zero());
}

#[test]
fn semiclassical_substitutions() {
    let t = ext();
    let defs = semiclassical_defs(&t);
    let p_hat = NCPoly::letter(&t, Letter::SmallP);
    let got = p_hat.substitute(&defs).unwrap();
    let big_p = NCPoly::letter(&t, Letter::P);
    let big_q = NCPoly::letter(&t, Letter::Q);
    let expected = big_p
        .mul(&big_p)
        .sub(&big_q.mul(&big_q))
        .scale_rational(&rat(1, 2));
    assert_eq!(got, expected);

    let omega_q = NCPoly::letter(&t, Letter::SmallQ).scale(&CoeffPoly::symbol(Symbol::Omega));
    let got = omega_q.substitute(&defs).unwrap();
    let expected = big_p
        .mul(&big_q)
        .sub(&NCPoly::scalar(&t, lam_eps().scale(&rat(1, 2))));
    assert_eq!(got, expected);
    assert_eq!(got.to_string(), "-1/2 * lambda * eps + P * Q");

    let h = NCPoly::symbol(&t, Symbol::H);
    assert_eq!(
        h.substitute(&energy_conservation_defs(&t)).unwrap(),
        NCPoly::symbol(&t, Symbol::P0)
    );
}

#[test]
fn substitution_errors() {
    let t = ext();
    let p_hat = NCPoly::letter(&t, Letter::SmallP);
    let q_hat = NCPoly::letter(&t, Letter::SmallQ);
    let cyclic = BTreeMap::from([
        (Var::Letter(Letter::SmallP), q_hat.clone()),
        (Var::Letter(Letter::SmallQ), p_hat.clone()),
    ]);
    assert!(matches!(
        p_hat.substitute(&cyclic),
        Err(crate::Error::CyclicDefinitions(_))
    ));
    let non_central = BTreeMap::from([(Var::Sym(Symbol::H), energy_root_def(&t))]);
    assert!(matches!(
        NCPoly::symbol(&t, Symbol::H).substitute(&non_central),
        Err(crate::Error::NonCentralSubstitution(_))
    ));
}

#[test]
fn chained_definitions_resolve() {
    let t = ext();
    let defs = BTreeMap::from([
        (Var::Sym(Symbol::H), NCPoly::symbol(&t, Symbol::P0)),
        (Var::Sym(Symbol::P0), NCPoly::scalar(&t, CoeffPoly::integer(3))),
    ]);
    let got = NCPoly::symbol(&t, Symbol::H).substitute(&defs).unwrap();
    assert_eq!(got.as_scalar(), Some(CoeffPoly::integer(3)));
}

#[test]
fn truncation() {
    let t = pq();
    let lam = CoeffPoly::symbol(Symbol::Lambda);
    let x = NCPoly::scalar(&t, lam_eps()).add(&NCPoly::from_word(&t, vec![Letter::P], &lam * &lam));
    assert_eq!(hbar_truncate(&x, 1), NCPoly::scalar(&t, lam_eps()));
    assert_eq!(hbar_truncate(&x, 10), x);
}

#[test]
fn positional_expansion() {
    let t = pq();
    let p = NCPoly::letter(&t, Letter::P);
    let q = NCPoly::letter(&t, Letter::Q);
    let h = energy_root_def(&t);
    // Q·h versus h·Q differ by reordering.
    let q_h = q.scale(&CoeffPoly::symbol(Symbol::H));
    let right = q_h.expand_central_right(Symbol::H, &h).unwrap();
    assert_eq!(right, q.mul(&h));
    assert_ne!(right, h.mul(&q));
    assert_eq!(
        right.sub(&h.mul(&q)),
        p.scale(&lam_eps()).neg()
    );
}

#[test]
fn retargeting() {
    let e = ext();
    let x = NCPoly::from_word(&e, vec![Letter::P, Letter::Q], CoeffPoly::one());
    let moved = normal_order(&x, &pq()).unwrap();
    assert_eq!(moved.alphabet(), Alphabet::PQ);
    let y = NCPoly::letter(&e, Letter::SmallP);
    assert!(normal_order(&y, &pq()).is_err());
}

fn small_coeff() -> impl Strategy<Value = CoeffPoly> {
    (
        -3i64..=3,
        1i64..=3,
        prop::sample::select(vec![
            Symbol::Lambda,
            Symbol::Eps,
            Symbol::R,
            Symbol::P0,
            Symbol::A,
            Symbol::Omega,
        ]),
        -1i32..=2,
    )
        .prop_map(|(n, d, s, e)| CoeffPoly::monomial(rat(n, d), &[(s, e)]))
}

fn small_poly() -> impl Strategy<Value = NCPoly> {
    prop::collection::vec(
        (
            prop::collection::vec(prop::sample::select(vec![Letter::P, Letter::Q]), 0..4),
            small_coeff(),
        ),
        0..4,
    )
    .prop_map(|terms| NCPoly::from_terms(&pq(), terms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn normal_order_idempotent(x in small_poly()) {
        prop_assert!(x.is_normal());
        prop_assert_eq!(x.normal_order(), x.clone());
    }

    #[test]
    fn multiplication_associative(x in small_poly(), y in small_poly(), z in small_poly()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn commutator_jacobi(x in small_poly(), y in small_poly(), z in small_poly()) {
        let j = x.commutator(&y.commutator(&z))
            .add(&y.commutator(&z.commutator(&x)))
            .add(&z.commutator(&x.commutator(&y)));
        prop_assert!(j.is_zero());
        prop_assert!(x.commutator(&y).add(&y.commutator(&x)).is_zero());
    }

    #[test]
    fn product_of_normal_forms(
        a in prop::collection::vec(prop::sample::select(vec![Letter::P, Letter::Q]), 0..5),
        b in prop::collection::vec(prop::sample::select(vec![Letter::P, Letter::Q]), 0..5),
    ) {
        let t = pq();
        let mut ab = a.clone();
        ab.extend(b.iter().copied());
        let direct = NCPoly::from_word(&t, ab, CoeffPoly::one());
        let via = NCPoly::from_word(&t, a, CoeffPoly::one())
            .mul(&NCPoly::from_word(&t, b, CoeffPoly::one()));
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn radical_reduction_sound(x in small_poly()) {
        let r2 = CoeffPoly::symbol(Symbol::R).pow(2).unwrap();
        let two_p0 = CoeffPoly::monomial(int(2), &[(Symbol::P0, 1)]);
        prop_assert_eq!(x.scale(&r2), x.scale(&two_p0));
    }
}
