use proptest::prelude::*;
use qsp_core::algebra::{CalculusType, Element, Generator, Letter};
use qsp_core::calculus::Calculus;
use qsp_core::hopf::{
    act_tensor, antipode_a, antipode_u, antipode_w, coproduct_a, coproduct_u, coproduct_w, counit_a,
    hopf_axiom_check, hopf_axiom_check_w, left_act, pair, AntipodeVariant, OmegaLetter, Tensor,
    UElement,
};

fn calc() -> Calculus {
    Calculus::new(CalculusType::type_ii()).expect("calculus")
}

fn el(c: &Calculus, s: &str) -> Element {
    c.parse(s).unwrap()
}

fn pure(c: &Calculus, a: &str, b: &str) -> Tensor {
    Tensor::pure(&[el(c, a), el(c, b)])
}

#[test]
fn koszul_products() {
    let c = calc();
    let t = c.table();
    let names = c.names();
    let p = pure(&c, "x", "x").multiply(&pure(&c, "th", "x"), t).unwrap();
    assert_eq!(p.text(names), "x*th (x) x^2");
    let p = pure(&c, "th", "1").multiply(&pure(&c, "1", "th"), t).unwrap();
    assert_eq!(p.text(names), "th (x) th");
    let p = pure(&c, "1", "th").multiply(&pure(&c, "th", "1"), t).unwrap();
    assert_eq!(p.text(names), "-th (x) th");
    let ab = pure(&c, "x^2*th", "x^-1");
    assert_eq!(Tensor::unit(2, c.nvars()).multiply(&ab, t).unwrap(), ab);
}

#[test]
fn function_coproduct_counit_antipode() {
    let c = calc();
    let names = c.names();
    let d = |s: &str| coproduct_a(&c, &el(&c, s)).unwrap().text(names);
    assert_eq!(d("x"), "x (x) x");
    assert_eq!(d("x*th"), "x^2 (x) x*th + x*th (x) x^2");
    assert_eq!(d("x^-1"), "x^-1 (x) x^-1");
    let eps = |s: &str| counit_a(&c, &el(&c, s)).unwrap();
    assert!(eps("x^5").is_one());
    assert!(eps("x*th").is_zero());
    let s = |e: &str| c.text(&antipode_a(&c, &el(&c, e)).unwrap());
    assert_eq!(s("x"), "x^-1");
    assert_eq!(s("th"), "-q*x^-2*th");
    assert_eq!(s("x*th"), "-q^2*x^-3*th");
}

#[test]
fn axioms_on_generators_and_products() {
    let c = calc();
    for w in ["th", "x", "x*th", "x^-2*th", "x^3"] {
        let r = hopf_axiom_check(&c, &el(&c, w)).unwrap();
        assert!(r.is_zero(), "{w}: {:?}", r.first_nonzero(c.names()));
    }
    let relation = el(&c, "x*th - q*th*x");
    assert!(coproduct_a(&c, &relation).unwrap().is_zero());
}

#[test]
fn form_costructures() {
    use OmegaLetter::{Theta, X};
    let c = calc();
    let names = c.names();
    let wx = c.text(&X.element(&c));
    let expected = format!("{wx} (x) 1 + 1 (x) {wx}");
    let got = coproduct_w(&c, &[X]).unwrap();
    let mut alt = Tensor::zero(2, c.nvars());
    alt.add_scaled(&Tensor::pure(&[X.element(&c), Element::one(c.nvars())]), &qsp_core::Rf::one(c.nvars()));
    alt.add_scaled(&Tensor::pure(&[Element::one(c.nvars()), X.element(&c)]), &qsp_core::Rf::one(c.nvars()));
    assert_eq!(got, alt, "expected {expected}, got {}", got.text(names));
    let commutator = coproduct_w(&c, &[X, Theta]).unwrap().sub(&coproduct_w(&c, &[Theta, X]).unwrap());
    assert!(commutator.is_zero());
    assert_eq!(antipode_w(&c, &[Theta]).unwrap(), Theta.element(&c).neg());
    for w in [vec![X], vec![Theta], vec![X, Theta], vec![Theta, Theta, X]] {
        assert!(hopf_axiom_check_w(&c, &w).unwrap().is_zero(), "{w:?}");
    }
}

#[test]
fn pairing_and_left_action() {
    let c = calc();
    let n = c.nvars();
    let p = |u: &UElement, s: &str| pair(&c, u, &el(&c, s)).unwrap().fmt_with(c.names());
    assert_eq!(p(&UElement::t(n), "x"), "r");
    assert_eq!(p(&UElement::t(n), "x*th"), "0");
    assert_eq!(p(&UElement::nabla(n), "x*th"), "q");
    assert_eq!(p(&UElement::one(n), "x*th"), "0");
    assert_eq!(p(&UElement::one(n), "x^3"), "1");
    let a = |u: &UElement, s: &str| c.text(&left_act(&c, u, &el(&c, s)).unwrap());
    assert_eq!(a(&UElement::t(n), "x"), "r*x");
    assert_eq!(a(&UElement::nabla(n), "th"), "x");
    assert_eq!(a(&UElement::t(n), "x*th"), "r^2*x*th");
}

#[test]
fn left_action_matches_operators() {
    let c = calc();
    let n = c.nvars();
    let t_op = el(&c, "1 + (r - 1)*H");
    let nb_op = el(&c, "x*pth");
    for s in ["1", "x", "th", "x^-3*th", "x^4", "x^2*th"] {
        let f = el(&c, s);
        assert_eq!(left_act(&c, &UElement::t(n), &f).unwrap(), c.act(&t_op, &f).unwrap(), "T on {s}");
        assert_eq!(left_act(&c, &UElement::nabla(n), &f).unwrap(), c.act(&nb_op, &f).unwrap(), "Nb on {s}");
    }
}

#[test]
fn dual_coproduct_and_antipode() {
    let c = calc();
    let n = c.nvars();
    let d = coproduct_u(&UElement::nabla(n));
    assert!(d.mul(&d).is_zero());
    assert_eq!(d.text(c.names()), "Nb (x) 1 + K (x) Nb");
    let s = |v| antipode_u(&UElement::nabla(n), v).text(c.names());
    assert_eq!(s(AntipodeVariant::AsPrinted), "-K*Nb");
    assert_eq!(s(AntipodeVariant::Corrected), "-K^-1*Nb");
}

fn function_word() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        prop_oneof![Just(Letter::X), Just(Letter::XInv), Just(Letter::Gen(Generator::Th))],
        0..=3,
    )
}

fn word_element(c: &Calculus, w: &[Letter]) -> Element {
    c.table().normalize_word(w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn koszul_product_is_associative(a in function_word(), b in function_word(), e in function_word(),
                                     f in function_word(), g in function_word(), h in function_word()) {
        let c = calc();
        let t = c.table();
        let x = Tensor::pure(&[word_element(&c, &a), word_element(&c, &b)]);
        let y = Tensor::pure(&[word_element(&c, &e), word_element(&c, &f)]);
        let z = Tensor::pure(&[word_element(&c, &g), word_element(&c, &h)]);
        let left = x.multiply(&y, t).unwrap().multiply(&z, t).unwrap();
        let right = x.multiply(&y.multiply(&z, t).unwrap(), t).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn coproduct_is_an_algebra_map(a in function_word(), b in function_word()) {
        let c = calc();
        let (ea, eb) = (word_element(&c, &a), word_element(&c, &b));
        let product = coproduct_a(&c, &c.multiply(&ea, &eb).unwrap()).unwrap();
        let separate = coproduct_a(&c, &ea).unwrap().multiply(&coproduct_a(&c, &eb).unwrap(), c.table()).unwrap();
        prop_assert_eq!(product, separate);
    }

    #[test]
    fn action_respects_the_dual_coproduct(a in function_word(), b in function_word(), which in 0usize..3) {
        let c = calc();
        let n = c.nvars();
        let u = [UElement::t(n), UElement::k(n), UElement::nabla(n)][which].clone();
        let (ea, eb) = (word_element(&c, &a), word_element(&c, &b));
        let direct = left_act(&c, &u, &c.multiply(&ea, &eb).unwrap()).unwrap();
        let split = act_tensor(&c, &coproduct_u(&u), &ea, &eb).unwrap();
        prop_assert_eq!(direct, split);
    }
}
