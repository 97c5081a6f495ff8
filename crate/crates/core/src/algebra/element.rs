use std::collections::BTreeMap;
use std::fmt;

use super::generator::{Generator, Parity};
use super::monomial::Monomial;
use crate::coeffs::CoeffError;
use crate::{Rational, Rf};

/// A finite linear combination of normal-ordered monomials.
///
/// Zero coefficients are never stored, so `is_zero` is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    nvars: usize,
    terms: BTreeMap<Monomial, Rf>,
}

/// Result of [`Element::parity_of`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementParity {
    Homogeneous(Parity),
    Mixed,
}

impl Element {
    pub fn zero(nvars: usize) -> Self {
        Element {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::term(Monomial::ONE, Rf::one(nvars))
    }

    pub fn scalar(c: Rf) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: Rf) -> Self {
        let mut e = Self::zero(c.nvars());
        e.add_term(m, c);
        e
    }

    pub fn monomial(nvars: usize, m: Monomial) -> Self {
        Self::term(m, Rf::one(nvars))
    }

    pub fn generator(nvars: usize, g: Generator) -> Self {
        Self::monomial(nvars, Monomial::generator(g))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rf)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rf {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Rf::zero(self.nvars))
    }

    /// Scalar part when the element is a multiple of the empty word.
    pub fn as_scalar(&self) -> Option<Rf> {
        match self.terms.len() {
            0 => Some(Rf::zero(self.nvars)),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rf) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Rf) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(*m, v * c);
        }
    }

    pub fn scale(&self, c: &Rf) -> Element {
        let mut out = Element::zero(self.nvars);
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Rf::one(self.nvars));
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Rf::int(self.nvars, -1));
        out
    }

    pub fn neg(&self) -> Element {
        self.scale(&Rf::int(self.nvars, -1))
    }

    pub fn parity_of(&self) -> ElementParity {
        let mut it = self.terms.keys().map(Monomial::parity);
        match it.next() {
            None => ElementParity::Homogeneous(Parity::Even),
            Some(p) => {
                if it.all(|o| o == p) {
                    ElementParity::Homogeneous(p)
                } else {
                    ElementParity::Mixed
                }
            }
        }
    }

    /// Keeps only the terms selected by `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Element {
        Element {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Coefficient-wise map; zero results are pruned.
    pub fn try_map_coeffs(
        &self,
        nvars: usize,
        f: impl Fn(&Rf) -> Result<Rf, CoeffError>,
    ) -> Result<Element, CoeffError> {
        let mut out = Element::zero(nvars);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }

    /// Specialises named parameters to exact rationals, keeping the ring.
    pub fn substitute_params(
        &self,
        names: &[String],
        assignment: &BTreeMap<String, Rational>,
    ) -> Result<Element, CoeffError> {
        self.try_map_coeffs(self.nvars, |c| substitute_rf(c, names, assignment))
    }

    /// Plain-text rendering using the given parameter names.
    pub fn text(&self, names: &[String]) -> String {
        crate::exprio::print_element(self, names)
    }
}

pub(crate) fn substitute_rf(
    c: &Rf,
    names: &[String],
    assignment: &BTreeMap<String, Rational>,
) -> Result<Rf, CoeffError> {
    let mut out = c.clone();
    for (name, value) in assignment {
        match names.iter().position(|n| n == name) {
            Some(i) => out = out.substitute(i, value)?,
            None => return Err(CoeffError::MissingVariable(name.clone())),
        }
    }
    Ok(out)
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        f.write_str(&self.text(&names))
    }
}

