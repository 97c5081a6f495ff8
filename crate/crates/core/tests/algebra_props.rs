use std::collections::BTreeMap;
use std::sync::OnceLock;

use proptest::prelude::*;
use qsp_core::algebra::{
    build_rule_table, CalculusType, Element, ElementParity, Generator, Letter, RuleTable,
};
use qsp_core::Rational;

fn tables() -> &'static [RuleTable; 3] {
    static T: OnceLock<[RuleTable; 3]> = OnceLock::new();
    T.get_or_init(|| {
        [CalculusType::type_i(), CalculusType::type_ii(), CalculusType::type_iii()]
            .map(|ct| build_rule_table(&ct).unwrap())
    })
}

fn word(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    let letters = Letter::all();
    prop::collection::vec(0..letters.len(), 0..=max)
        .prop_map(move |v| v.into_iter().map(|i| letters[i]).collect())
}

fn normal(t: &RuleTable, w: &[Letter]) -> Element {
    t.normalize_word(w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normalize_is_idempotent(ti in 0usize..3, w in word(6)) {
        let t = &tables()[ti];
        let once = normal(t, &w);
        let mut again = Element::zero(t.nvars());
        for (m, c) in once.terms() {
            again.add_scaled(&normal(t, &m.letters()), c);
        }
        prop_assert_eq!(again, once);
    }

    #[test]
    fn multiplication_is_associative(ti in 0usize..3, a in word(2), b in word(2), c in word(2)) {
        let t = &tables()[ti];
        let (a, b, c) = (normal(t, &a), normal(t, &b), normal(t, &c));
        let left = t.multiply(&t.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = t.multiply(&a, &t.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parity_is_additive(ti in 0usize..3, a in word(3), b in word(3)) {
        let t = &tables()[ti];
        let (ea, eb) = (normal(t, &a), normal(t, &b));
        if let (ElementParity::Homogeneous(pa), ElementParity::Homogeneous(pb)) =
            (ea.parity_of(), eb.parity_of())
        {
            let prod = t.multiply(&ea, &eb).unwrap();
            if !prod.is_zero() {
                prop_assert_eq!(prod.parity_of(), ElementParity::Homogeneous(pa.add(pb)));
            }
        }
    }

    #[test]
    fn d_squared_kills_every_word(ti in 0usize..3, w in word(4)) {
        let t = &tables()[ti];
        let mut dd = vec![Letter::Gen(Generator::D), Letter::Gen(Generator::D)];
        dd.extend(w);
        prop_assert!(normal(t, &dd).is_zero());
    }

    #[test]
    fn specialization_commutes(w in word(4), num in 2i64..5) {
        let ct = CalculusType::type_ii();
        let t = &tables()[1];
        let mut a = BTreeMap::new();
        a.insert("r".to_owned(), Rational::from_integer(num.into()));
        a.insert("q".to_owned(), Rational::new(3.into(), 2.into()));
        let spec = build_rule_table(&ct.specialize(&a).unwrap()).unwrap();
        let lhs = normal(t, &w).substitute_params(t.names(), &a).unwrap();
        prop_assert_eq!(lhs, normal(&spec, &w));
    }
}

#[test]
fn families_collapse_to_type_i_rule_by_rule() {
    let base = &tables()[0];
    for (ti, name) in [(1, "r"), (2, "p")] {
        let ct = [CalculusType::type_ii(), CalculusType::type_iii()][ti - 1].clone();
        let mut a = BTreeMap::new();
        a.insert(name.to_owned(), Rational::from_integer(1.into()));
        let spec = build_rule_table(&ct.specialize(&a).unwrap()).unwrap();
        let mut count = 0;
        for (key, rhs) in base.rules() {
            let lifted = rhs.try_map_coeffs(2, |c| Ok(c.embed(2, &[0]))).unwrap();
            assert_eq!(spec.rule(key.0, key.1), Some(&lifted), "{} * {}", key.0, key.1);
            count += 1;
        }
        assert_eq!(count, spec.rules().count());
    }
}
