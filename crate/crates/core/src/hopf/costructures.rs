//! Coproduct, counit and antipode on the function algebra and on the
//! algebra of Cartan-Maurer forms, with axiom residuals.

use super::{HopfError, Tensor};
use crate::algebra::{Element, Generator, Letter, Monomial, Parity};
use crate::calculus::{Calculus, DerivedSymbol};
use crate::Rf;

fn function_letters(m: &Monomial) -> Result<Vec<Letter>, HopfError> {
    if !m.is_function() {
        return Err(HopfError::NotAFunction(m.text()));
    }
    Ok(m.letters())
}

fn letter_coproduct(calc: &Calculus, l: Letter) -> Result<Tensor, HopfError> {
    let t = calc.table();
    Ok(match l {
        Letter::Gen(Generator::X) | Letter::XInv => {
            let e = t.letter(l);
            Tensor::pure(&[e.clone(), e])
        }
        Letter::Gen(Generator::Th) => {
            let (x, th) = (t.letter(Letter::X), calc.letter(Generator::Th));
            Tensor::pure(&[th.clone(), x.clone()]).add(&Tensor::pure(&[x, th]))
        }
        other => return Err(HopfError::NotAFunction(other.to_string())),
    })
}

/// Coproduct of a word of function letters, as the product of the letter
/// coproducts.
pub fn coproduct_word(calc: &Calculus, word: &[Letter]) -> Result<Tensor, HopfError> {
    let mut acc = Tensor::unit(2, calc.nvars());
    for &l in word {
        acc = acc.multiply(&letter_coproduct(calc, l)?, calc.table())?;
    }
    Ok(acc)
}

pub fn coproduct_monomial(calc: &Calculus, m: &Monomial) -> Result<Tensor, HopfError> {
    coproduct_word(calc, &function_letters(m)?)
}

/// `Delta(x) = x (x) x`, `Delta(th) = th (x) x + x (x) th`, extended
/// multiplicatively.
pub fn coproduct_a(calc: &Calculus, e: &Element) -> Result<Tensor, HopfError> {
    let mut out = Tensor::zero(2, calc.nvars());
    for (m, c) in e.terms() {
        out.add_scaled(&coproduct_monomial(calc, m)?, c);
    }
    Ok(out)
}

fn counit_monomial(calc: &Calculus, m: &Monomial) -> Result<Rf, HopfError> {
    function_letters(m)?;
    Ok(if m.exp(Generator::Th) == 0 {
        Rf::one(calc.nvars())
    } else {
        Rf::zero(calc.nvars())
    })
}

/// `eps(x) = 1`, `eps(th) = 0`.
pub fn counit_a(calc: &Calculus, e: &Element) -> Result<Rf, HopfError> {
    let mut out = Rf::zero(calc.nvars());
    for (m, c) in e.terms() {
        out = &out + &(c * &counit_monomial(calc, m)?);
    }
    Ok(out)
}

/// Graded antihomomorphic extension of `S` over `factors`:
/// `S(a b) = (-1)^(|a||b|) S(b) S(a)`.
fn antihomomorphic(
    calc: &Calculus,
    factors: &[(Element, Parity)],
) -> Result<Element, HopfError> {
    let odd = factors.iter().filter(|(_, p)| *p == Parity::Odd).count();
    let images: Vec<Element> = factors.iter().rev().map(|(e, _)| e.clone()).collect();
    let prod = calc.product(&images)?;
    // Reversing k odd factors costs k(k-1)/2 transpositions.
    Ok(if (odd * odd.saturating_sub(1) / 2) % 2 == 1 {
        prod.neg()
    } else {
        prod
    })
}

fn antipode_letter(calc: &Calculus, l: Letter) -> Result<Element, HopfError> {
    let t = calc.table();
    Ok(match l {
        Letter::Gen(Generator::X) => t.letter(Letter::XInv),
        Letter::XInv => t.letter(Letter::X),
        Letter::Gen(Generator::Th) => {
            let xi = t.letter(Letter::XInv);
            calc.product(&[xi.clone(), calc.letter(Generator::Th), xi])?.neg()
        }
        other => return Err(HopfError::NotAFunction(other.to_string())),
    })
}

pub fn antipode_word(calc: &Calculus, word: &[Letter]) -> Result<Element, HopfError> {
    let factors = word
        .iter()
        .map(|&l| Ok((antipode_letter(calc, l)?, l.parity())))
        .collect::<Result<Vec<_>, HopfError>>()?;
    antihomomorphic(calc, &factors)
}

/// `S(x) = x^-1`, `S(th) = -x^-1 th x^-1`, graded antihomomorphism.
pub fn antipode_a(calc: &Calculus, e: &Element) -> Result<Element, HopfError> {
    let mut out = Element::zero(calc.nvars());
    for (m, c) in e.terms() {
        out.add_scaled(&antipode_word(calc, &function_letters(m)?)?, c);
    }
    Ok(out)
}

/// Residuals of the Hopf axioms on one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfResiduals {
    pub coassociativity: Tensor,
    pub counit_left: Element,
    pub counit_right: Element,
    pub antipode_left: Element,
    pub antipode_right: Element,
}

impl HopfResiduals {
    pub fn is_zero(&self) -> bool {
        self.coassociativity.is_zero()
            && self.counit_left.is_zero()
            && self.counit_right.is_zero()
            && self.antipode_left.is_zero()
            && self.antipode_right.is_zero()
    }

    /// Text of the first nonzero residual, labelled by the axiom.
    pub fn first_nonzero(&self, names: &[String]) -> Option<String> {
        if !self.coassociativity.is_zero() {
            return Some(format!("coassociativity: {}", self.coassociativity.text(names)));
        }
        [
            ("left counit", &self.counit_left),
            ("right counit", &self.counit_right),
            ("left antipode", &self.antipode_left),
            ("right antipode", &self.antipode_right),
        ]
        .into_iter()
        .find(|(_, e)| !e.is_zero())
        .map(|(label, e)| format!("{label}: {}", e.text(names)))
    }
}

/// Coassociativity, both counit laws and both antipode laws for `w`.
pub fn hopf_axiom_check(calc: &Calculus, w: &Element) -> Result<HopfResiduals, HopfError> {
    let t = calc.table();
    let delta = coproduct_a(calc, w)?;
    let co = |m: &Monomial| coproduct_monomial(calc, m);
    let left = delta.expand_slot(0, 2, co)?;
    let right = delta.expand_slot(1, 2, co)?;
    let eps = |m: &Monomial| counit_monomial(calc, m).map(Element::scalar);
    let s = |m: &Monomial| antipode_word(calc, &function_letters(m)?);
    let unit = Element::scalar(counit_a(calc, w)?);
    Ok(HopfResiduals {
        coassociativity: left.sub(&right),
        counit_left: delta.map_slot(0, eps)?.contract(t)?.sub(w),
        counit_right: delta.map_slot(1, eps)?.contract(t)?.sub(w),
        antipode_left: delta.map_slot(0, s)?.contract(t)?.sub(&unit),
        antipode_right: delta.map_slot(1, s)?.contract(t)?.sub(&unit),
    })
}

/// Generators of the form algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OmegaLetter {
    X,
    Theta,
}

impl OmegaLetter {
    pub const ALL: [OmegaLetter; 2] = [OmegaLetter::X, OmegaLetter::Theta];

    /// `w_x = dx x^-1` is odd, `w_th = dth x^-1 - dx x^-1 th x^-1` even.
    pub fn parity(self) -> Parity {
        match self {
            OmegaLetter::X => Parity::Odd,
            OmegaLetter::Theta => Parity::Even,
        }
    }

    pub fn element(self, calc: &Calculus) -> Element {
        calc.derived(match self {
            OmegaLetter::X => DerivedSymbol::OmegaX,
            OmegaLetter::Theta => DerivedSymbol::OmegaTheta,
        })
        .clone()
    }
}

pub fn omega_word(calc: &Calculus, word: &[OmegaLetter]) -> Result<Element, HopfError> {
    let factors: Vec<Element> = word.iter().map(|l| l.element(calc)).collect();
    Ok(calc.product(&factors)?)
}

/// Primitive coproduct `w (x) 1 + 1 (x) w`, extended multiplicatively.
pub fn coproduct_w(calc: &Calculus, word: &[OmegaLetter]) -> Result<Tensor, HopfError> {
    let n = calc.nvars();
    let one = Element::one(n);
    let mut acc = Tensor::unit(2, n);
    for l in word {
        let w = l.element(calc);
        let d = Tensor::pure(&[w.clone(), one.clone()]).add(&Tensor::pure(&[one.clone(), w]));
        acc = acc.multiply(&d, calc.table())?;
    }
    Ok(acc)
}

/// `eps(w) = 0` on generators.
pub fn counit_w(calc: &Calculus, word: &[OmegaLetter]) -> Rf {
    if word.is_empty() {
        Rf::one(calc.nvars())
    } else {
        Rf::zero(calc.nvars())
    }
}

/// `S(w) = -w` on generators, graded antihomomorphism.
pub fn antipode_w(calc: &Calculus, word: &[OmegaLetter]) -> Result<Element, HopfError> {
    let factors: Vec<(Element, Parity)> = word
        .iter()
        .map(|l| (l.element(calc).neg(), l.parity()))
        .collect();
    antihomomorphic(calc, &factors)
}

/// Splittings of `word` into a left and a right subword, with the Koszul
/// sign of the corresponding term of the product of primitive coproducts.
fn splittings(word: &[OmegaLetter]) -> Vec<(bool, Vec<OmegaLetter>, Vec<OmegaLetter>)> {
    let n = word.len();
    (0..1u32 << n)
        .map(|mask| {
            let left_of = |i: usize| mask >> i & 1 == 1;
            let mut odd = false;
            for j in 0..n {
                for i in 0..j {
                    // A right factor at i passes a left factor at j.
                    if !left_of(i)
                        && left_of(j)
                        && word[i].parity() == Parity::Odd
                        && word[j].parity() == Parity::Odd
                    {
                        odd = !odd;
                    }
                }
            }
            let l = (0..n).filter(|&i| left_of(i)).map(|i| word[i]).collect();
            let r = (0..n).filter(|&i| !left_of(i)).map(|i| word[i]).collect();
            (odd, l, r)
        })
        .collect()
}

/// Hopf axioms for a form word. Maps are applied at the level of
/// subwords and then evaluated in the algebra.
pub fn hopf_axiom_check_w(
    calc: &Calculus,
    word: &[OmegaLetter],
) -> Result<HopfResiduals, HopfError> {
    let n = calc.nvars();
    let w = omega_word(calc, word)?;
    let mut coassoc = Tensor::zero(3, n);
    let mut cl = Element::zero(n);
    let mut cr = Element::zero(n);
    let mut al = Element::zero(n);
    let mut ar = Element::zero(n);
    for (odd, l, r) in splittings(word) {
        let sign = if odd { Rf::int(n, -1) } else { Rf::one(n) };
        let (el, er) = (omega_word(calc, &l)?, omega_word(calc, &r)?);
        let dl = coproduct_w(calc, &l)?;
        let dr = coproduct_w(calc, &r)?;
        let mut lhs = Tensor::zero(3, n);
        for (k, c) in dl.terms() {
            let mut t = Tensor::pure(&[
                Element::monomial(n, k[0]),
                Element::monomial(n, k[1]),
                er.clone(),
            ]);
            t = t.scale(c);
            lhs = lhs.add(&t);
        }
        let mut rhs = Tensor::zero(3, n);
        for (k, c) in dr.terms() {
            let t = Tensor::pure(&[
                el.clone(),
                Element::monomial(n, k[0]),
                Element::monomial(n, k[1]),
            ]);
            rhs = rhs.add(&t.scale(c));
        }
        coassoc.add_scaled(&lhs.sub(&rhs), &sign);
        cl.add_scaled(&er, &(&sign * &counit_w(calc, &l)));
        cr.add_scaled(&el, &(&sign * &counit_w(calc, &r)));
        al.add_scaled(&calc.multiply(&antipode_w(calc, &l)?, &er)?, &sign);
        ar.add_scaled(&calc.multiply(&el, &antipode_w(calc, &r)?)?, &sign);
    }
    let unit = Element::scalar(counit_w(calc, word));
    Ok(HopfResiduals {
        coassociativity: coassoc,
        counit_left: cl.sub(&w),
        counit_right: cr.sub(&w),
        antipode_left: al.sub(&unit),
        antipode_right: ar.sub(&unit),
    })
}
