//! Adjacent-transposition rules and the normal-ordering engine.

use std::collections::HashMap;
use std::sync::RwLock;

use super::element::Element;
use super::generator::{Generator, Letter, PowerDomain};
use super::monomial::Monomial;
use super::AlgebraError;
use crate::coeffs::ParamSet;
use crate::Rf;

/// Rewrite rules `left * right -> normal-ordered element`, keyed by the
/// out-of-order pair of letters.
///
/// Normal forms are computed by multiplying letters onto an already
/// normal monomial from the right: the new letter is moved past the
/// right-most generator that exceeds it, one rule application at a time.
/// Partial products are memoised per `(monomial, letter)`.
pub struct RuleTable {
    params: ParamSet,
    rules: HashMap<(Letter, Letter), Element>,
    cache: RwLock<HashMap<(Monomial, Letter), Element>>,
}

impl std::fmt::Debug for RuleTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RuleTable")
            .field("params", &self.params)
            .field("rules", &self.rules.len())
            .finish()
    }
}

impl RuleTable {
    /// A table from explicit rules. Each right-hand side must already be
    /// normal-ordered; this is not re-checked.
    pub fn from_rules(
        params: ParamSet,
        rules: impl IntoIterator<Item = ((Letter, Letter), Element)>,
    ) -> Self {
        RuleTable {
            params,
            rules: rules.into_iter().collect(),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn names(&self) -> &[String] {
        self.params.vars()
    }

    pub fn nvars(&self) -> usize {
        self.params.len()
    }

    pub fn rule(&self, left: Letter, right: Letter) -> Option<&Element> {
        self.rules.get(&(left, right))
    }

    pub fn rules(&self) -> impl Iterator<Item = (&(Letter, Letter), &Element)> {
        self.rules.iter()
    }

    pub(crate) fn insert_rule(&mut self, left: Letter, right: Letter, rhs: Element) {
        self.rules.insert((left, right), rhs);
        self.cache.get_mut().expect("cache lock").clear();
    }

    /// Whether `left * right` is out of order and needs a rule.
    pub fn needs_rule(left: Letter, right: Letter) -> bool {
        left.generator().index() > right.generator().index()
    }

    pub fn one(&self) -> Element {
        Element::one(self.nvars())
    }

    pub fn letter(&self, l: Letter) -> Element {
        let m = match l {
            Letter::Gen(g) => Monomial::generator(g),
            Letter::XInv => Monomial::power(Generator::X, -1).expect("x^-1"),
        };
        Element::monomial(self.nvars(), m)
    }

    pub fn scalar(&self, c: Rf) -> Element {
        Element::scalar(c)
    }

    /// Normal form of a word of letters.
    pub fn normalize_word(&self, word: &[Letter]) -> Result<Element, AlgebraError> {
        let mut acc = self.one();
        for &l in word {
            acc = self.mul_letter(&acc, l)?;
        }
        Ok(acc)
    }

    /// Normal form of a word given as a sequence of elements.
    pub fn product(&self, factors: &[Element]) -> Result<Element, AlgebraError> {
        let mut acc = self.one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(self.nvars());
        for (mb, cb) in b.terms() {
            let letters = mb.letters();
            for (ma, ca) in a.terms() {
                let mut part = Element::monomial(self.nvars(), *ma);
                for &l in &letters {
                    part = self.mul_letter(&part, l)?;
                }
                out.add_scaled(&part, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// `a * b` for two normal monomials.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Result<Element, AlgebraError> {
        let mut part = Element::monomial(self.nvars(), *a);
        for l in b.letters() {
            part = self.mul_letter(&part, l)?;
        }
        Ok(part)
    }

    pub fn mul_letter(&self, e: &Element, l: Letter) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(self.nvars());
        for (m, c) in e.terms() {
            let part = self.mul_monomial_letter(m, l)?;
            out.add_scaled(&part, c);
        }
        Ok(out)
    }

    /// Normal form of `m * l` for a normal monomial `m`.
    pub fn mul_monomial_letter(&self, m: &Monomial, l: Letter) -> Result<Element, AlgebraError> {
        if l == Letter::Gen(Generator::D) {
            return self.mul_monomial_d(m);
        }
        let idx = l.generator().index();
        let h = match m.highest() {
            Some(h) if h >= idx => h,
            _ => return Ok(self.append(m, l)),
        };
        if h == idx {
            return Ok(self.append(m, l));
        }
        if let Some(hit) = self.cache.read().expect("cache lock").get(&(*m, l)) {
            return Ok(hit.clone());
        }
        let e = m.exps()[h];
        let hl = if e < 0 {
            Letter::XInv
        } else {
            Letter::Gen(Generator::from_index(h))
        };
        let reduced = m.with_exp(h, e - hl.step());
        let rhs = self.rules.get(&(hl, l)).ok_or_else(|| {
            AlgebraError::MissingRule(format!("{hl} * {l}"))
        })?;
        let mut out = Element::zero(self.nvars());
        for (w, c) in rhs.terms() {
            let part = self.mul_monomials(&reduced, w)?;
            out.add_scaled(&part, c);
        }
        self.cache
            .write()
            .expect("cache lock")
            .insert((*m, l), out.clone());
        Ok(out)
    }

    /// `m * d` with `d` expanded as `dx*px + dth*pth`.
    fn mul_monomial_d(&self, m: &Monomial) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(self.nvars());
        for (form, partial) in [(Generator::Dx, Generator::Px), (Generator::Dth, Generator::Pth)] {
            let a = self.mul_monomial_letter(m, Letter::Gen(form))?;
            out = out.add(&self.mul_letter(&a, Letter::Gen(partial))?);
        }
        Ok(out)
    }

    /// `m * l` when `l` is not smaller than any letter of `m`.
    fn append(&self, m: &Monomial, l: Letter) -> Element {
        let g = l.generator();
        let e = m.exp(g) + l.step();
        let allowed = match g.power_domain() {
            PowerDomain::AllIntegers => true,
            PowerDomain::Naturals => e >= 0,
            PowerDomain::ZeroOne => e <= 1,
        };
        if !allowed {
            return Element::zero(self.nvars());
        }
        Element::monomial(self.nvars(), m.with_exp(g.index(), e))
    }

    /// Applies one rewrite step at position `i` of a raw word
    /// (`word[i] * word[i+1]`), returning the resulting raw words.
    /// `None` when that adjacent pair is already in order.
    pub fn rewrite_at(
        &self,
        word: &[Letter],
        i: usize,
    ) -> Result<Option<Vec<(Rf, Vec<Letter>)>>, AlgebraError> {
        let (a, b) = (word[i], word[i + 1]);
        let ga = a.generator();
        let replacement: Vec<(Rf, Vec<Letter>)> = if ga == b.generator() {
            if ga == Generator::X && a != b {
                vec![(Rf::one(self.nvars()), vec![])]
            } else if ga.power_domain() == PowerDomain::ZeroOne {
                vec![]
            } else {
                return Ok(None);
            }
        } else if Self::needs_rule(a, b) {
            let rhs = self
                .rules
                .get(&(a, b))
                .ok_or_else(|| AlgebraError::MissingRule(format!("{a} * {b}")))?;
            rhs.terms().map(|(m, c)| (c.clone(), m.letters())).collect()
        } else {
            return Ok(None);
        };
        Ok(Some(
            replacement
                .into_iter()
                .map(|(c, mid)| {
                    let mut w = word[..i].to_vec();
                    w.extend(mid);
                    w.extend_from_slice(&word[i + 2..]);
                    (c, w)
                })
                .collect(),
        ))
    }

    /// Specialises every rule coefficient (see [`Element::substitute_params`]).
    pub fn try_map(
        &self,
        f: impl Fn(&Element) -> Result<Element, AlgebraError>,
    ) -> Result<RuleTable, AlgebraError> {
        let mut rules = HashMap::new();
        for (k, v) in &self.rules {
            rules.insert(*k, f(v)?);
        }
        Ok(RuleTable::from_rules(self.params.clone(), rules))
    }
}
