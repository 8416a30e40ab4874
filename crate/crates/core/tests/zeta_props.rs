use num_traits::Zero;
use zetareg::bernoulli::BernoulliTable;
use zetareg::zeta::{
    cross_checked, eta_euler_oracle_sequence, eta_neg, functional_relation_residual, zeta_neg,
    SpecialFunction,
};

const MAX_M: usize = 50;

#[test]
fn three_routes_agree() {
    let table = BernoulliTable::global();
    for m in 0..=MAX_M {
        for function in [SpecialFunction::Zeta, SpecialFunction::Eta] {
            cross_checked(table, function, m).unwrap_or_else(|e| panic!("{e}"));
        }
    }
}

#[test]
fn euler_sequence_matches_closed_form() {
    let oracle = eta_euler_oracle_sequence(MAX_M);
    for (m, v) in oracle.iter().enumerate() {
        assert_eq!(v, &eta_neg(m).value, "m = {m}");
    }
}

#[test]
fn relation_holds() {
    for m in 0..=MAX_M {
        assert!(functional_relation_residual(m).is_zero(), "m = {m}");
    }
}

#[test]
fn trivial_zeros() {
    for k in 1..=20 {
        assert!(zeta_neg(2 * k).value.is_zero(), "zeta(-{})", 2 * k);
        assert!(eta_neg(2 * k).value.is_zero(), "eta(-{})", 2 * k);
        assert!(!zeta_neg(2 * k - 1).value.is_zero());
    }
}
