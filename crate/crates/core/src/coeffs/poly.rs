//! Sparse multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::Scalar;

/// Exponent vector of a polynomial term.
///
/// Ordered graded-lexicographically, with ties broken starting from the
/// *last* variable, so that for variables `[q, r]` we get `q < r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn sub(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F: Scalar> {
    nvars: usize,
    terms: BTreeMap<Exponent, F>,
}

impl<F: Scalar> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Exponent::zero(nvars), c);
        }
        p
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut e = Exponent::zero(nvars);
        e.0[index] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(exp: Exponent, c: F) -> Self {
        let nvars = exp.0.len();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(Exponent(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Exponent::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    /// Returns the constant coefficient when the polynomial is constant.
    pub fn as_constant(&self) -> Option<F> {
        if self.is_zero() {
            Some(F::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &F)> {
        self.terms.iter()
    }

    /// Leading term under the graded-lex order.
    pub fn leading(&self) -> Option<(&Exponent, &F)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> F {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(F::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Exponent::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.0[var]).max().unwrap_or(0)
    }

    /// Lowest exponent of `var` over all terms (0 for the zero polynomial).
    pub fn min_degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.0[var]).min().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: Exponent, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(exp.0.len(), self.nvars);
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    fn mul_term(&self, exp: &Exponent, c: &F) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.add(exp), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Makes the leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv();
                self.scale(&inv)
            }
        }
    }

    /// Coefficient of `var^d`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, var: usize, d: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.0[var] == d {
                let mut e2 = e.clone();
                e2.0[var] = 0;
                out.terms.insert(e2, c.clone());
            }
        }
        out
    }

    /// All coefficients with respect to `var`, indexed by degree.
    pub fn coeffs_in(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var);
        let mut out = vec![Self::zero(self.nvars); deg as usize + 1];
        for (e, c) in &self.terms {
            let d = e.0[var] as usize;
            let mut e2 = e.clone();
            e2.0[var] = 0;
            out[d].terms.insert(e2, c.clone());
        }
        out
    }

    /// Multiplies by `var^d`.
    pub fn shift(&self, var: usize, d: u32) -> Self {
        let mut e = Exponent::zero(self.nvars);
        e.0[var] = d;
        self.mul_term(&e, &F::one())
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lexp, lc) = divisor.leading()?;
        let (lexp, lc) = (lexp.clone(), lc.clone());
        if divisor.is_constant() {
            return Some(self.scale(&lc.inv()));
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rem.leading() {
            if !lexp.divides(e) {
                return None;
            }
            let te = e.sub(&lexp);
            let tc = c.clone() / lc.clone();
            rem = &rem - &divisor.mul_term(&te, &tc);
            quot.add_term(te, tc);
        }
        Some(quot)
    }

    /// Evaluates at a full assignment of field values.
    pub fn eval(&self, values: &[F]) -> F {
        assert_eq!(values.len(), self.nvars);
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in values.iter().zip(&e.0) {
                for _ in 0..k {
                    t = t * v.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Maps every term through `f(exponent, coeff)` and sums the results.
    pub fn map_terms<R, A, M>(&self, zero: R, mut f: M, add: A) -> R
    where
        M: FnMut(&Exponent, &F) -> R,
        A: Fn(R, R) -> R,
    {
        let mut acc = zero;
        for (e, c) in &self.terms {
            acc = add(acc, f(e, c));
        }
        acc
    }

    /// Re-indexes variables: variable `i` of `self` becomes variable
    /// `index_map[i]` of a ring with `nvars` variables.
    pub fn embed(&self, nvars: usize, index_map: &[usize]) -> Self {
        assert_eq!(index_map.len(), self.nvars);
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = Exponent::zero(nvars);
            for (i, &k) in e.0.iter().enumerate() {
                ne.0[index_map[i]] += k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Greatest common monomial divisor of all terms, as an exponent.
    pub fn monomial_content(&self) -> Exponent {
        let mut out = Exponent::zero(self.nvars);
        for v in 0..self.nvars {
            out.0[v] = self.min_degree_in(v);
        }
        out
    }

    pub fn div_monomial(&self, exp: &Exponent) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.sub(exp), c.clone()))
                .collect(),
        }
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            out.push_str(&format_term(e, &abs, names, &|_| 0));
        }
        out
    }
}

/// Formats `c * prod names[i]^(e[i] - shift(i))`; shared with the Laurent printer.
pub(crate) fn format_term<F: Scalar>(
    e: &Exponent,
    c: &F,
    names: &[String],
    shift: &dyn Fn(usize) -> u32,
) -> String {
    let mut factors = Vec::new();
    for (i, &k) in e.0.iter().enumerate() {
        let k = i64::from(k) - i64::from(shift(i));
        if k == 0 {
            continue;
        }
        if k == 1 {
            factors.push(names[i].clone());
        } else {
            factors.push(format!("{}^{}", names[i], k));
        }
    }
    let coeff = if c.is_integral() {
        format!("{c}")
    } else {
        format!("({c})")
    };
    if factors.is_empty() {
        coeff
    } else if c.is_one() {
        factors.join("*")
    } else {
        format!("{}*{}", coeff, factors.join("*"))
    }
}

impl<F: Scalar> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        write!(f, "{}", self.fmt_with(&names))
    }
}

impl<F: Scalar> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<F: Scalar> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<F: Scalar> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<F: Scalar> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.add(e2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Poly<BigRational>;

    fn c(v: i64) -> BigRational {
        BigRational::from_i64(v)
    }

    #[test]
    fn grlex_puts_r_above_q() {
        let q = Exponent(vec![1, 0]);
        let r = Exponent(vec![0, 1]);
        assert!(q < r);
        assert!(r < Exponent(vec![2, 0]));
    }

    #[test]
    fn exact_division() {
        let q = P::var(2, 0);
        let r = P::var(2, 1);
        let one = P::one(2);
        let a = &(&q - &one) * &(&r + &q);
        assert_eq!(a.div_exact(&(&q - &one)).unwrap(), &r + &q);
        assert!(a.div_exact(&(&q + &one)).is_none());
    }

    #[test]
    fn formatting() {
        let names = vec!["q".to_owned(), "r".to_owned()];
        let p = &(&P::var(2, 1) - &P::one(2)) * &P::constant(2, c(2));
        assert_eq!(p.fmt_with(&names), "2*r-2");
        assert_eq!(P::var(2, 0).pow(3).fmt_with(&names), "q^3");
    }
}
