use qsp_core::algebra::{
    build_rule_table, check_confluence, CalculusType, Element, ElementParity, Generator, Letter,
    Parity, RuleTable,
};

use Generator::*;

fn table(ct: &CalculusType) -> RuleTable {
    build_rule_table(ct).expect("rule table")
}

fn norm(t: &RuleTable, word: &[Letter]) -> String {
    t.normalize_word(word).unwrap().text(t.names())
}

fn g(x: Generator) -> Letter {
    Letter::Gen(x)
}

const XI: Letter = Letter::XInv;

#[test]
fn type_ii_rule_entries() {
    let t = table(&CalculusType::type_ii());
    assert_eq!(norm(&t, &[g(Px), g(X)]), "1 + r*x*px + (r-1)*th*pth");
    assert_eq!(norm(&t, &[g(Th), g(X)]), "q^-1*x*th");
    assert_eq!(norm(&t, &[g(Ix), g(X)]), "r*x*ix + (r-1)*th*ith");
    assert_eq!(norm(&t, &[g(Pth), g(Th)]), "1 - th*pth");
    assert_eq!(norm(&t, &[g(Ix), g(Dx)]), "1 - dx*ix + (-1+r^-1)*dth*ith");
    assert_eq!(norm(&t, &[g(Dth), g(Dx)]), "q^-1*r*dx*dth");
}

#[test]
fn nilpotent_and_unit_words() {
    let t = table(&CalculusType::type_iii());
    for l in [Th, Dx, Pth, Ix] {
        assert_eq!(norm(&t, &[g(l), g(l)]), "0", "{l}");
    }
    assert_eq!(norm(&t, &[g(Th), g(Th), g(X)]), "0");
    assert_eq!(norm(&t, &[g(X), XI]), "1");
    assert_eq!(norm(&t, &[XI, g(X)]), "1");
    assert_eq!(norm(&t, &[]), "1");
}

#[test]
fn derived_inverse_rules_match_hand_oracles() {
    // px x^-1 = Q^-1 x^-1 px - Q^-1 x^-2 - q Q^-1 Q12 Q11^-1 x^-2 th pth, etc.
    let t = table(&CalculusType::type_ii());
    assert_eq!(norm(&t, &[g(Th), XI]), "q*x^-1*th");
    assert_eq!(norm(&t, &[XI, g(Dx)]), "r^-1*dx*x^-1");
    assert_eq!(
        norm(&t, &[g(Px), XI]),
        "r^-1*x^-1*px - r^-1*x^-2 + (-1+r^-1)*x^-2*th*pth"
    );
    assert_eq!(
        norm(&t, &[XI, g(Dth)]),
        "q^-1*dth*x^-1 + (-1+r^-1)*dx*x^-2*th"
    );
}

#[test]
fn parity_examples() {
    let t = table(&CalculusType::type_ii());
    let xth = t.normalize_word(&[g(X), g(Th)]).unwrap();
    assert_eq!(xth.parity_of(), ElementParity::Homogeneous(Parity::Odd));
    let dth = t.letter(g(Dth));
    assert_eq!(dth.parity_of(), ElementParity::Homogeneous(Parity::Even));
    let mixed = t.letter(g(X)).add(&t.letter(g(Th)));
    assert_eq!(mixed.parity_of(), ElementParity::Mixed);
}

#[test]
fn multiply_by_one_is_identity() {
    let t = table(&CalculusType::type_ii());
    let w = t.normalize_word(&[g(Ix), g(Px), g(X)]).unwrap();
    assert_eq!(t.multiply(&t.one(), &w).unwrap(), w);
    assert_eq!(t.multiply(&w, &t.one()).unwrap(), w);
    assert_eq!(t.multiply(&Element::zero(t.nvars()), &w).unwrap(), Element::zero(t.nvars()));
}

#[test]
fn d_is_expanded_in_normal_forms() {
    let t = table(&CalculusType::type_ii());
    assert_eq!(norm(&t, &[g(D)]), "dx*px + dth*pth");
    // Leibniz on the vacuum: the operator-free part of d x is dx.
    let dx_x = t.normalize_word(&[g(D), g(X)]).unwrap();
    assert_eq!(dx_x.filter(|m| m.is_function_form()).text(t.names()), "dx");
}

#[test]
fn rules_are_locally_confluent() {
    for ct in [CalculusType::type_i(), CalculusType::type_ii(), CalculusType::type_iii()] {
        let t = table(&ct);
        let rep = check_confluence(&t, 3).unwrap();
        assert!(rep.words_checked > 1000);
        assert!(rep.is_confluent(), "{:?}: {} violations", ct.mode(), rep.violations.len());
    }
}

#[test]
fn confluence_detects_a_broken_rule() {
    let t = table(&CalculusType::type_ii());
    let mut rules: Vec<_> = t.rules().map(|(k, v)| (*k, v.clone())).collect();
    for (k, v) in &mut rules {
        if *k == (g(Th), g(X)) {
            *v = v.scale(&qsp_core::Rf::int(t.nvars(), 2));
        }
    }
    let broken = RuleTable::from_rules(t.params().clone(), rules);
    let rep = check_confluence(&broken, 3).unwrap();
    assert!(!rep.is_confluent());
    assert!(rep.violations.iter().any(|v| v.word.contains(&g(Th))));
}
