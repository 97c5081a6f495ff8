//! The dual algebra generated by the group-like `T`, the diagonal operator
//! `K = q^N` and the odd `Nb`, its pairing with functions and its left
//! action.
//!
//! `T`, `K` and `Nb` commute and `Nb^2 = 0`, so every element is a
//! combination of words `T^t K^k Nb^e`. `T` pairs with `x` as `Q`, `K` as
//! `q`; the relation `th x = q^-1 x th` admits no other value for `K`.

use std::collections::BTreeMap;

use super::{coproduct_monomial, HopfError};
use crate::algebra::{Element, Generator, Letter, Monomial, Parity};
use crate::calculus::Calculus;
use crate::exprio::{join_terms, signed_term};
use crate::Rf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct UWord {
    pub t: i32,
    pub k: i32,
    pub nabla: bool,
}

impl UWord {
    pub const ONE: UWord = UWord {
        t: 0,
        k: 0,
        nabla: false,
    };

    pub fn parity(self) -> Parity {
        if self.nabla {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    fn group_part(self) -> UWord {
        UWord {
            nabla: false,
            ..self
        }
    }

    /// Product, or `None` when two `Nb` meet.
    fn mul(self, other: UWord) -> Option<UWord> {
        if self.nabla && other.nabla {
            return None;
        }
        Some(UWord {
            t: self.t + other.t,
            k: self.k + other.k,
            nabla: self.nabla || other.nabla,
        })
    }

    pub fn text(self) -> String {
        let mut parts = Vec::new();
        for (sym, e) in [("T", self.t), ("K", self.k)] {
            match e {
                0 => {}
                1 => parts.push(sym.to_owned()),
                _ => parts.push(format!("{sym}^{e}")),
            }
        }
        if self.nabla {
            parts.push("Nb".to_owned());
        }
        if parts.is_empty() {
            "1".to_owned()
        } else {
            parts.join("*")
        }
    }
}

fn add_into<K: Ord>(terms: &mut BTreeMap<K, Rf>, key: K, c: Rf) {
    if c.is_zero() {
        return;
    }
    let merged = match terms.remove(&key) {
        Some(old) => &old + &c,
        None => c,
    };
    if !merged.is_zero() {
        terms.insert(key, merged);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UElement {
    nvars: usize,
    terms: BTreeMap<UWord, Rf>,
}

impl UElement {
    pub fn zero(nvars: usize) -> Self {
        UElement {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(nvars: usize, w: UWord) -> Self {
        let mut e = Self::zero(nvars);
        e.add_term(w, Rf::one(nvars));
        e
    }

    pub fn one(nvars: usize) -> Self {
        Self::word(nvars, UWord::ONE)
    }

    pub fn t(nvars: usize) -> Self {
        Self::word(nvars, UWord { t: 1, ..UWord::ONE })
    }

    pub fn k(nvars: usize) -> Self {
        Self::word(nvars, UWord { k: 1, ..UWord::ONE })
    }

    pub fn nabla(nvars: usize) -> Self {
        Self::word(
            nvars,
            UWord {
                nabla: true,
                ..UWord::ONE
            },
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UWord, &Rf)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: UWord, c: Rf) {
        add_into(&mut self.terms, w, c);
    }

    pub fn add_scaled(&mut self, other: &UElement, c: &Rf) {
        for (w, d) in &other.terms {
            self.add_term(*w, d * c);
        }
    }

    pub fn add(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rf::one(self.nvars));
        out
    }

    pub fn sub(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rf::int(self.nvars, -1));
        out
    }

    pub fn scale(&self, c: &Rf) -> UElement {
        let mut out = Self::zero(self.nvars);
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &UElement) -> UElement {
        let mut out = Self::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(w) = a.mul(*b) {
                    out.add_term(w, ca * cb);
                }
            }
        }
        out
    }

    pub fn text(&self, names: &[String]) -> String {
        let alone = self.terms.len() == 1;
        join_terms(self.terms.iter().map(|(w, c)| {
            let word = (*w != UWord::ONE).then(|| w.text());
            signed_term(c, word, names, alone)
        }))
    }
}

/// Element of the graded tensor square of the dual algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UTensor {
    nvars: usize,
    terms: BTreeMap<(UWord, UWord), Rf>,
}

impl UTensor {
    pub fn zero(nvars: usize) -> Self {
        UTensor {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn pure(a: &UElement, b: &UElement) -> Self {
        let mut out = Self::zero(a.nvars);
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                add_into(&mut out.terms, (*x, *y), cx * cy);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(UWord, UWord), &Rf)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &UTensor) -> UTensor {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_into(&mut out.terms, *k, c.clone());
        }
        out
    }

    /// Koszul product `(a (x) b)(c (x) d) = (-1)^(|b||c|) ac (x) bd`.
    pub fn mul(&self, other: &UTensor) -> UTensor {
        let mut out = Self::zero(self.nvars);
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let (Some(ac), Some(bd)) = (a.mul(*c), b.mul(*d)) else {
                    continue;
                };
                let coeff = c1 * c2;
                let coeff = if b.nabla && c.nabla { -coeff } else { coeff };
                add_into(&mut out.terms, (ac, bd), coeff);
            }
        }
        out
    }

    /// `a (x) b -> a b`.
    pub fn contract(&self) -> UElement {
        let mut out = UElement::zero(self.nvars);
        for ((a, b), c) in &self.terms {
            if let Some(w) = a.mul(*b) {
                out.add_term(w, c.clone());
            }
        }
        out
    }

    /// Applies the even maps `f` and `g` slotwise.
    pub fn map(&self, f: impl Fn(UWord) -> UElement, g: impl Fn(UWord) -> UElement) -> UTensor {
        let mut out = Self::zero(self.nvars);
        for ((a, b), c) in &self.terms {
            let t = UTensor::pure(&f(*a), &g(*b));
            for (k, d) in t.terms {
                add_into(&mut out.terms, k, &d * c);
            }
        }
        out
    }

    pub fn text(&self, names: &[String]) -> String {
        let alone = self.terms.len() == 1;
        join_terms(self.terms.iter().map(|((a, b), c)| {
            signed_term(c, Some(format!("{} (x) {}", a.text(), b.text())), names, alone)
        }))
    }
}

/// `Delta(T) = T (x) T`, `Delta(K) = K (x) K`, `Delta(Nb) = Nb (x) 1 + K (x) Nb`.
pub fn coproduct_u(u: &UElement) -> UTensor {
    let n = u.nvars;
    let mut out = UTensor::zero(n);
    for (w, c) in u.terms() {
        let g = UElement::word(n, w.group_part());
        let mut d = UTensor::pure(&g, &g);
        if w.nabla {
            let nb = UTensor::pure(&UElement::nabla(n), &UElement::one(n))
                .add(&UTensor::pure(&UElement::k(n), &UElement::nabla(n)));
            d = d.mul(&nb);
        }
        for (k, e) in d.terms {
            add_into(&mut out.terms, k, &e * c);
        }
    }
    out
}

/// `eps(T) = eps(K) = 1`, `eps(Nb) = 0`.
pub fn counit_u(u: &UElement) -> Rf {
    let mut out = Rf::zero(u.nvars);
    for (w, c) in u.terms() {
        if !w.nabla {
            out = &out + c;
        }
    }
    out
}

/// Antipode of `Nb`: the printed `-K Nb` or `-K^-1 Nb`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntipodeVariant {
    AsPrinted,
    Corrected,
}

/// `S(T) = T^-1`, `S(K) = K^-1`, `S(Nb)` per `variant`; antihomomorphic.
pub fn antipode_u(u: &UElement, variant: AntipodeVariant) -> UElement {
    let n = u.nvars;
    let s = match variant {
        AntipodeVariant::AsPrinted => 1,
        AntipodeVariant::Corrected => -1,
    };
    let mut out = UElement::zero(n);
    for (w, c) in u.terms() {
        // S(g Nb) = S(Nb) S(g) since g is even.
        let img = UWord {
            t: -w.t,
            k: if w.nabla { s - w.k } else { -w.k },
            nabla: w.nabla,
        };
        out.add_term(img, if w.nabla { -c } else { c.clone() });
    }
    out
}

#[derive(Clone, Copy)]
enum UGen {
    T,
    K,
    Nabla,
}

/// `<T, x> = Q`, `<K, x> = q`, `<Nb, th> = 1`; every other generator
/// pairing vanishes.
fn base_pairing(calc: &Calculus, g: UGen, l: Letter) -> Result<Rf, HopfError> {
    let ct = calc.ct();
    let zero = Rf::zero(calc.nvars());
    let base = match g {
        UGen::T => &ct.q_big,
        UGen::K => &ct.q(),
        UGen::Nabla => {
            return Ok(if l == Letter::Gen(Generator::Th) {
                Rf::one(calc.nvars())
            } else {
                zero
            })
        }
    };
    Ok(match l {
        Letter::Gen(Generator::X) => base.clone(),
        Letter::XInv => base.inv()?,
        _ => zero,
    })
}

/// Pairing of `T^t K^k` with a word: a character, zero on `th`.
fn pair_group(calc: &Calculus, w: UWord, letters: &[Letter]) -> Result<Rf, HopfError> {
    let mut acc = Rf::one(calc.nvars());
    if letters.contains(&Letter::Gen(Generator::Th)) {
        return Ok(Rf::zero(calc.nvars()));
    }
    for &l in letters {
        let t = base_pairing(calc, UGen::T, l)?.pow(w.t.into())?;
        let k = base_pairing(calc, UGen::K, l)?.pow(w.k.into())?;
        acc = &acc * &(&t * &k);
    }
    Ok(acc)
}

/// `<Nb, l rest> = <Nb, l> eps(rest) + (-1)^|l| <K, l> <Nb, rest>`.
fn pair_nabla(calc: &Calculus, letters: &[Letter]) -> Result<Rf, HopfError> {
    let Some((&l, rest)) = letters.split_first() else {
        return Ok(Rf::zero(calc.nvars()));
    };
    let eps_rest = if rest.contains(&Letter::Gen(Generator::Th)) { 0 } else { 1 };
    let head = &base_pairing(calc, UGen::Nabla, l)? * &Rf::int(calc.nvars(), eps_rest);
    let k = base_pairing(calc, UGen::K, l)?;
    let k = if l.parity() == Parity::Odd { -k } else { k };
    Ok(&head + &(&k * &pair_nabla(calc, rest)?))
}

/// `<g Nb, a> = <g (x) Nb, Delta a>` with the sign `(-1)^(|Nb||a_(1)|)`.
pub fn pair_word(calc: &Calculus, w: UWord, m: &Monomial) -> Result<Rf, HopfError> {
    if !m.is_function() {
        return Err(HopfError::NotAFunction(m.text()));
    }
    if !w.nabla {
        return pair_group(calc, w, &m.letters());
    }
    let mut out = Rf::zero(calc.nvars());
    for (key, c) in coproduct_monomial(calc, m)?.terms() {
        let g = pair_group(calc, w.group_part(), &key[0].letters())?;
        let nb = pair_nabla(calc, &key[1].letters())?;
        let term = &(c * &g) * &nb;
        out = if key[0].parity() == Parity::Odd {
            &out - &term
        } else {
            &out + &term
        };
    }
    Ok(out)
}

pub fn pair(calc: &Calculus, u: &UElement, a: &Element) -> Result<Rf, HopfError> {
    let mut out = Rf::zero(calc.nvars());
    for (w, c) in u.terms() {
        for (m, d) in a.terms() {
            out = &out + &(&(c * d) * &pair_word(calc, *w, m)?);
        }
    }
    Ok(out)
}

/// `U[a] = a_(1) <U, a_(2)>`.
pub fn left_act(calc: &Calculus, u: &UElement, a: &Element) -> Result<Element, HopfError> {
    let n = calc.nvars();
    let mut out = Element::zero(n);
    for (m, c) in a.terms() {
        for (key, d) in coproduct_monomial(calc, m)?.terms() {
            let mut p = Rf::zero(n);
            for (w, e) in u.terms() {
                p = &p + &(e * &pair_word(calc, *w, &key[1])?);
            }
            out.add_term(key[0], &(c * d) * &p);
        }
    }
    Ok(out)
}

/// `(U (x) V)[a (x) b] = (-1)^(|V||a|) U[a] V[b]`, multiplied out.
pub fn act_tensor(
    calc: &Calculus,
    t: &UTensor,
    a: &Element,
    b: &Element,
) -> Result<Element, HopfError> {
    let n = calc.nvars();
    let mut out = Element::zero(n);
    let odd_a = a.terms().all(|(m, _)| m.parity() == Parity::Odd) && !a.is_zero();
    for ((u, v), c) in t.terms() {
        let ua = left_act(calc, &UElement::word(n, *u), a)?;
        let vb = left_act(calc, &UElement::word(n, *v), b)?;
        let prod = calc.multiply(&ua, &vb)?;
        let sign = if v.nabla && odd_a { Rf::int(n, -1) } else { Rf::one(n) };
        out.add_scaled(&prod, &(c * &sign));
    }
    Ok(out)
}
