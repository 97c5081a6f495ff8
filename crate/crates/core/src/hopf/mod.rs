//! Graded tensor products, the Hopf costructures on functions, forms and
//! the dual algebra, the dual pairing and the left action.

mod costructures;
mod dual;
mod tensor;

pub use costructures::{
    antipode_a, antipode_w, antipode_word, coproduct_a, coproduct_monomial, coproduct_w,
    coproduct_word, counit_a, counit_w, hopf_axiom_check, hopf_axiom_check_w, omega_word,
    HopfResiduals, OmegaLetter,
};
pub use dual::{
    act_tensor, antipode_u, coproduct_u, counit_u, left_act, pair, pair_word, AntipodeVariant,
    UElement, UTensor, UWord,
};
pub use tensor::Tensor;

use thiserror::Error;

use crate::algebra::{AlgebraError, Element, Generator, Letter, Monomial, Parity};
use crate::calculus::{custom, known, Calculus, CalculusError, DerivedSymbol, IdentityKind, IdentitySpec};
use crate::coeffs::CoeffError;
use crate::Rf;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("not in the function sector: {0}")]
    NotAFunction(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

type CheckResult = Result<Option<String>, CalculusError>;

const FUNCTION_LETTERS: [Letter; 3] = [Letter::X, Letter::XInv, Letter::Gen(Generator::Th)];

/// Every word over `letters` of length `1..=max_len`.
fn words<T: Copy>(letters: &[T], max_len: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn word_text(word: &[Letter]) -> String {
    word.iter().map(Letter::to_string).collect::<Vec<_>>().join(" ")
}

/// Basis functions `x^m th^eps`, `|m| <= bound`.
fn function_basis(calc: &Calculus, bound: i32) -> Vec<Element> {
    Calculus::action_basis(bound)
        .into_iter()
        .filter(Monomial::is_function)
        .map(|m| Element::monomial(calc.nvars(), m))
        .collect()
}

fn first_on(calc: &Calculus, f: &Element, r: &Element) -> Option<String> {
    (!r.is_zero()).then(|| format!("on {}: {}", calc.text(f), calc.text(r)))
}

fn is_odd(e: &Element) -> bool {
    e.terms().any(|(m, _)| m.parity() == Parity::Odd)
}

fn homomorphism(calc: &Calculus, _bound: i32) -> CheckResult {
    for w in words(&FUNCTION_LETTERS, 3) {
        let direct = coproduct_a(calc, &calc.table().normalize_word(&w)?)?;
        let product = coproduct_word(calc, &w)?;
        let r = direct.sub(&product);
        if !r.is_zero() {
            return Ok(Some(format!("on {}: {}", word_text(&w), r.text(calc.names()))));
        }
    }
    Ok(None)
}

fn axioms_a(calc: &Calculus, bound: i32) -> CheckResult {
    let mut samples: Vec<(String, Element)> = Vec::new();
    for w in words(&FUNCTION_LETTERS, 3) {
        samples.push((word_text(&w), calc.table().normalize_word(&w)?));
    }
    for f in function_basis(calc, bound) {
        samples.push((calc.text(&f), f));
    }
    for (label, e) in samples {
        if let Some(r) = hopf_axiom_check(calc, &e)?.first_nonzero(calc.names()) {
            return Ok(Some(format!("on {label}: {r}")));
        }
    }
    Ok(None)
}

fn forms_w(calc: &Calculus, _bound: i32) -> CheckResult {
    use OmegaLetter::{Theta, X};
    let names = calc.names();
    let relations: [(&[OmegaLetter], &[OmegaLetter]); 2] = [(&[X, Theta], &[Theta, X]), (&[X, X], &[])];
    for (lhs, rhs) in relations {
        let lt = coproduct_w(calc, lhs)?;
        let rt = if rhs.is_empty() {
            Tensor::zero(2, calc.nvars())
        } else {
            coproduct_w(calc, rhs)?
        };
        let r = lt.sub(&rt);
        if !r.is_zero() {
            return Ok(Some(format!("coproduct of relation {lhs:?}: {}", r.text(names))));
        }
        let ls = antipode_w(calc, lhs)?;
        let rs = if rhs.is_empty() {
            Element::zero(calc.nvars())
        } else {
            antipode_w(calc, rhs)?
        };
        if ls != rs {
            return Ok(Some(format!("antipode of relation {lhs:?}: {}", calc.text(&ls.sub(&rs)))));
        }
    }
    for w in words(&OmegaLetter::ALL, 3) {
        if let Some(r) = hopf_axiom_check_w(calc, &w)?.first_nonzero(names) {
            return Ok(Some(format!("on {w:?}: {r}")));
        }
    }
    Ok(None)
}

fn h_coproduct(calc: &Calculus, bound: i32) -> CheckResult {
    let h = calc.derived(DerivedSymbol::H);
    let t = calc.derived(DerivedSymbol::T);
    let basis = function_basis(calc, bound);
    for f in &basis {
        let (hf, tf) = (calc.act(h, f)?, calc.act(t, f)?);
        for g in &basis {
            let fg = calc.multiply(f, g)?;
            let hg = calc.act(h, g)?;
            let rhs = calc.multiply(&hf, g)?.add(&calc.multiply(&tf, &hg)?);
            let r = calc.act(h, &fg)?.sub(&rhs);
            if !r.is_zero() {
                return Ok(Some(format!("on {} * {}: {}", calc.text(f), calc.text(g), calc.text(&r))));
            }
        }
    }
    Ok(None)
}

fn nabla_coproduct(calc: &Calculus, bound: i32) -> CheckResult {
    let nb = calc.derived(DerivedSymbol::Nabla);
    let k = UElement::k(calc.nvars());
    let basis = function_basis(calc, bound);
    for f in &basis {
        let nf = calc.act(nb, f)?;
        let kf = left_act(calc, &k, f)?;
        let kf = if is_odd(f) { kf.neg() } else { kf };
        for g in &basis {
            let fg = calc.multiply(f, g)?;
            let ng = calc.act(nb, g)?;
            let rhs = calc.multiply(&nf, g)?.add(&calc.multiply(&kf, &ng)?);
            let r = calc.act(nb, &fg)?.sub(&rhs);
            if !r.is_zero() {
                return Ok(Some(format!("on {} * {}: {}", calc.text(f), calc.text(g), calc.text(&r))));
            }
        }
    }
    Ok(None)
}

fn nabla_coproduct_square(calc: &Calculus, _bound: i32) -> CheckResult {
    let d = coproduct_u(&UElement::nabla(calc.nvars()));
    let sq = d.mul(&d);
    Ok((!sq.is_zero()).then(|| sq.text(calc.names())))
}

fn dual_samples(n: usize) -> Vec<UElement> {
    vec![
        UElement::t(n),
        UElement::k(n),
        UElement::nabla(n),
        UElement::t(n).mul(&UElement::k(n)).mul(&UElement::nabla(n)),
    ]
}

fn counit_dual(calc: &Calculus, _bound: i32) -> CheckResult {
    let n = calc.nvars();
    let eps = |w: UWord| UElement::one(n).scale(&counit_u(&UElement::word(n, w)));
    let id = |w: UWord| UElement::word(n, w);
    for u in dual_samples(n) {
        let d = coproduct_u(&u);
        for r in [d.map(eps, id).contract().sub(&u), d.map(id, eps).contract().sub(&u)] {
            if !r.is_zero() {
                return Ok(Some(format!("on {}: {}", u.text(calc.names()), r.text(calc.names()))));
            }
        }
    }
    Ok(None)
}

fn antipode_dual(calc: &Calculus, bound: i32, variant: AntipodeVariant) -> CheckResult {
    let n = calc.nvars();
    let s = |w: UWord| antipode_u(&UElement::word(n, w), variant);
    let id = |w: UWord| UElement::word(n, w);
    let basis = function_basis(calc, bound);
    for u in dual_samples(n) {
        let d = coproduct_u(&u);
        let unit = UElement::one(n).scale(&counit_u(&u));
        for r in [d.map(id, s).contract().sub(&unit), d.map(s, id).contract().sub(&unit)] {
            for f in &basis {
                let rf = left_act(calc, &r, f)?;
                if let Some(text) = first_on(calc, f, &rf) {
                    return Ok(Some(format!("{} {text}", u.text(calc.names()))));
                }
            }
        }
    }
    Ok(None)
}

fn pairing_table(calc: &Calculus, _bound: i32) -> CheckResult {
    let n = calc.nvars();
    let ct = calc.ct();
    let cases = [
        (UElement::t(n), "x", ct.q_big.clone()),
        (UElement::t(n), "th", Rf::zero(n)),
        (UElement::nabla(n), "x", Rf::zero(n)),
        (UElement::nabla(n), "th", Rf::one(n)),
        (UElement::nabla(n), "x*th", ct.q()),
        (UElement::t(n), "x*th", Rf::zero(n)),
        (UElement::k(n), "x^-1", ct.q().inv().map_err(AlgebraError::from)?),
        (UElement::one(n), "x*th", Rf::zero(n)),
        (UElement::nabla(n), "1", Rf::zero(n)),
    ];
    for (u, a, expect) in cases {
        let got = pair(calc, &u, &calc.parse(a)?)?;
        if got != expect {
            let r = &got - &expect;
            return Ok(Some(format!("<{}, {a}>: {}", u.text(calc.names()), r.fmt_with(calc.names()))));
        }
    }
    Ok(None)
}

fn pairing_matches_action(calc: &Calculus, bound: i32) -> CheckResult {
    let n = calc.nvars();
    let pairs = [
        (UElement::t(n), calc.derived(DerivedSymbol::T)),
        (UElement::nabla(n), calc.derived(DerivedSymbol::Nabla)),
    ];
    for f in function_basis(calc, bound) {
        for (u, op) in &pairs {
            let r = left_act(calc, u, &f)?.sub(&calc.act(op, &f)?);
            if let Some(text) = first_on(calc, &f, &r) {
                return Ok(Some(format!("{} {text}", u.text(calc.names()))));
            }
        }
    }
    Ok(None)
}

fn action_compatibility(calc: &Calculus, bound: i32) -> CheckResult {
    let n = calc.nvars();
    let basis = function_basis(calc, bound.min(3));
    for u in dual_samples(n) {
        let d = coproduct_u(&u);
        for a in &basis {
            for b in &basis {
                let lhs = left_act(calc, &u, &calc.multiply(a, b)?)?;
                let r = lhs.sub(&act_tensor(calc, &d, a, b)?);
                if !r.is_zero() {
                    return Ok(Some(format!(
                        "{} on {} * {}: {}",
                        u.text(calc.names()),
                        calc.text(a),
                        calc.text(b),
                        calc.text(&r)
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// `U[g f] = lhs(f)` against `rhs(f)` for basis `f`.
fn operator_relation(
    calc: &Calculus,
    bound: i32,
    u: UElement,
    g: &str,
    rhs: impl Fn(&Element, &Element) -> Result<Element, CalculusError>,
) -> CheckResult {
    let g = calc.parse(g)?;
    for f in function_basis(calc, bound) {
        let lhs = left_act(calc, &u, &calc.multiply(&g, &f)?)?;
        let uf = left_act(calc, &u, &f)?;
        if let Some(text) = first_on(calc, &f, &lhs.sub(&rhs(&f, &uf)?)) {
            return Ok(Some(text));
        }
    }
    Ok(None)
}

fn t_x(calc: &Calculus, bound: i32) -> CheckResult {
    let c = calc.ct().q_big.clone();
    operator_relation(calc, bound, UElement::t(calc.nvars()), "x", |_, tf| {
        Ok(calc.multiply(&calc.parse("x")?, tf)?.scale(&c))
    })
}

fn t_th(calc: &Calculus, bound: i32) -> CheckResult {
    let c = calc.ct().q_big.clone();
    operator_relation(calc, bound, UElement::t(calc.nvars()), "th", |_, tf| {
        Ok(calc.multiply(&calc.parse("th")?, tf)?.scale(&c))
    })
}

fn nabla_x(calc: &Calculus, bound: i32) -> CheckResult {
    let c = calc.ct().q();
    operator_relation(calc, bound, UElement::nabla(calc.nvars()), "x", |_, nf| {
        Ok(calc.multiply(&calc.parse("x")?, nf)?.scale(&c))
    })
}

fn nabla_th(calc: &Calculus, bound: i32) -> CheckResult {
    let c = calc.ct().q();
    operator_relation(calc, bound, UElement::nabla(calc.nvars()), "th", |f, nf| {
        let x = calc.parse("x")?;
        let th = calc.parse("th")?;
        Ok(calc.multiply(&x, f)?.sub(&calc.multiply(&th, nf)?.scale(&c)))
    })
}

fn no_q22(ct: &crate::algebra::CalculusType) -> bool {
    ct.q22.is_zero()
}

fn always(_: &crate::algebra::CalculusType) -> bool {
    true
}

pub(crate) fn catalog_entries() -> Vec<IdentitySpec> {
    use IdentityKind::{ActionLevel, WordLevel};
    vec![
        custom("eq6-coproduct-homomorphism", "Eq. 6", WordLevel, homomorphism, always),
        custom("eq9-hopf-axioms", "Eq. 9", WordLevel, axioms_a, always),
        custom("eq30-form-costructures", "Eqs. 30-32", WordLevel, forms_w, always),
        custom("eq59-H-coproduct", "Eq. 59", ActionLevel, h_coproduct, always),
        custom("eq62-nabla-coproduct", "Eq. 62", ActionLevel, nabla_coproduct, no_q22),
        custom("eq62-nabla-coproduct-square", "Eq. 62", WordLevel, nabla_coproduct_square, always),
        custom("eq63-dual-counit", "Eq. 63", WordLevel, counit_dual, always),
        known(custom("eq64-antipode-as-printed", "Eq. 64", ActionLevel, |c, b| {
            antipode_dual(c, b, AntipodeVariant::AsPrinted)
        }, always)),
        custom("eq64-antipode-corrected", "Eq. 64", ActionLevel, |c, b| {
            antipode_dual(c, b, AntipodeVariant::Corrected)
        }, always),
        custom("eq67-pairing-table", "Eq. 67", WordLevel, pairing_table, always),
        custom("eq67-pairing-matches-action", "Eq. 67", ActionLevel, pairing_matches_action, no_q22),
        custom("eq68-action-compatibility", "Eq. 68", ActionLevel, action_compatibility, always),
        custom("eq70-T-x", "Eq. 70", ActionLevel, t_x, always),
        custom("eq71-T-th", "Eq. 71", ActionLevel, t_th, always),
        custom("eq71-nabla-x", "Eq. 71", ActionLevel, nabla_x, always),
        custom("eq71-nabla-th", "Eq. 71", ActionLevel, nabla_th, always),
    ]
}
