//! Graded tensor powers of the normal-ordered algebra.

use std::collections::BTreeMap;

use crate::algebra::{AlgebraError, Element, Monomial, Parity, RuleTable};
use crate::exprio::{join_terms, signed_term};
use crate::Rf;

/// A finite sum of pure tensors `c * m_1 (x) ... (x) m_rank`.
///
/// Every slot holds a normal-ordered monomial and no zero coefficient is
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    rank: usize,
    nvars: usize,
    terms: BTreeMap<Vec<Monomial>, Rf>,
}

fn sign_of(odd: bool, c: Rf) -> Rf {
    if odd {
        -c
    } else {
        c
    }
}

fn is_odd(m: &Monomial) -> bool {
    m.parity() == Parity::Odd
}

impl Tensor {
    pub fn zero(rank: usize, nvars: usize) -> Self {
        Tensor {
            rank,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// `1 (x) ... (x) 1`.
    pub fn unit(rank: usize, nvars: usize) -> Self {
        let mut t = Self::zero(rank, nvars);
        t.add_term(vec![Monomial::ONE; rank], Rf::one(nvars));
        t
    }

    /// Multilinear expansion of `slots[0] (x) slots[1] (x) ...`.
    pub fn pure(slots: &[Element]) -> Self {
        let nvars = slots.first().map_or(0, Element::nvars);
        let mut acc = vec![(Vec::new(), Rf::one(nvars))];
        for slot in slots {
            let mut next = Vec::new();
            for (key, c) in &acc {
                for (m, d) in slot.terms() {
                    let mut k: Vec<Monomial> = key.clone();
                    k.push(*m);
                    next.push((k, c * d));
                }
            }
            acc = next;
        }
        let mut t = Self::zero(slots.len(), nvars);
        for (k, c) in acc {
            t.add_term(k, c);
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &Rf)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[Monomial]) -> Rf {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(|| Rf::zero(self.nvars))
    }

    pub fn add_term(&mut self, key: Vec<Monomial>, c: Rf) {
        assert_eq!(key.len(), self.rank, "tensor rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor, c: &Rf) {
        for (k, d) in &other.terms {
            self.add_term(k.clone(), d * c);
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(other, &Rf::one(self.nvars));
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(other, &Rf::int(self.nvars, -1));
        out
    }

    pub fn scale(&self, c: &Rf) -> Tensor {
        let mut out = Self::zero(self.rank, self.nvars);
        out.add_scaled(self, c);
        out
    }

    /// Koszul product `(a_1 (x) a_2)(b_1 (x) b_2) = (-1)^(|a_2||b_1|) a_1 b_1 (x) a_2 b_2`,
    /// generalised to any rank; slots are normal-ordered by `table`.
    pub fn multiply(&self, other: &Tensor, table: &RuleTable) -> Result<Tensor, AlgebraError> {
        assert_eq!(self.rank, other.rank, "tensor rank mismatch");
        let mut out = Self::zero(self.rank, self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut odd = false;
                for (i, ai) in a.iter().enumerate() {
                    if is_odd(ai) {
                        odd ^= b[..i].iter().filter(|m| is_odd(m)).count() % 2 == 1;
                    }
                }
                let slots = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| table.mul_monomials(x, y))
                    .collect::<Result<Vec<_>, _>>()?;
                out.add_scaled(&Tensor::pure(&slots), &sign_of(odd, ca * cb));
            }
        }
        Ok(out)
    }

    /// Replaces slot `slot` by the tensor `f(m)` of rank `k`, giving rank
    /// `rank + k - 1`. `f` must be an even map.
    pub fn expand_slot<F, E>(&self, slot: usize, k: usize, f: F) -> Result<Tensor, E>
    where
        F: Fn(&Monomial) -> Result<Tensor, E>,
    {
        let mut out = Self::zero(self.rank + k - 1, self.nvars);
        for (key, c) in &self.terms {
            let image = f(&key[slot])?;
            for (inner, d) in image.terms() {
                let mut nk = key[..slot].to_vec();
                nk.extend_from_slice(inner);
                nk.extend_from_slice(&key[slot + 1..]);
                out.add_term(nk, c * d);
            }
        }
        Ok(out)
    }

    /// Applies the even linear map `f` in slot `slot`.
    pub fn map_slot<F, E>(&self, slot: usize, f: F) -> Result<Tensor, E>
    where
        F: Fn(&Monomial) -> Result<Element, E>,
    {
        self.expand_slot(slot, 1, |m| Ok(Tensor::pure(&[f(m)?])))
    }

    /// Multiplication map: `a_1 (x) ... (x) a_n -> a_1 ... a_n`.
    pub fn contract(&self, table: &RuleTable) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(self.nvars);
        for (key, c) in &self.terms {
            let factors: Vec<Element> = key
                .iter()
                .map(|m| Element::monomial(self.nvars, *m))
                .collect();
            out.add_scaled(&table.product(&factors)?, c);
        }
        Ok(out)
    }

    /// Canonical text, e.g. `x*th (x) x^2 + x^2 (x) x*th`.
    pub fn text(&self, names: &[String]) -> String {
        if self.rank == 1 {
            let mut e = Element::zero(self.nvars);
            for (k, c) in &self.terms {
                e.add_term(k[0], c.clone());
            }
            return e.text(names);
        }
        let alone = self.terms.len() == 1;
        join_terms(self.terms.iter().map(|(key, c)| {
            let body = key.iter().map(Monomial::text).collect::<Vec<_>>().join(" (x) ");
            signed_term(c, Some(body), names, alone)
        }))
    }
}
