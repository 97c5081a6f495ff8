//! A small pair-rewriting engine over the letters `dx, dth, x, th, ix, ith`
//! with coefficients in an arbitrary rational-function ring, and graded
//! tensors of its normal words.
//!
//! Unlike the main rule table it accepts symbolic coefficients, so ansatz
//! relations with unknowns can be normal-ordered before they are solved.

use std::collections::BTreeMap;
use std::fmt;

use crate::exprio::{join_terms, signed_term};
use crate::Rf;

/// Letters in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    Dx,
    Dth,
    X,
    Th,
    Ix,
    Ith,
}

impl Sym {
    pub fn is_odd(self) -> bool {
        matches!(self, Sym::Dx | Sym::Th | Sym::Ix)
    }

    /// Image under `d`, if the letter is a coordinate.
    pub fn differential(self) -> Option<Sym> {
        match self {
            Sym::X => Some(Sym::Dx),
            Sym::Th => Some(Sym::Dth),
            _ => None,
        }
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sym::Dx => "dx",
            Sym::Dth => "dth",
            Sym::X => "x",
            Sym::Th => "th",
            Sym::Ix => "ix",
            Sym::Ith => "ith",
        })
    }
}

pub type Word = Vec<Sym>;

pub fn word_is_odd(w: &[Sym]) -> bool {
    w.iter().filter(|s| s.is_odd()).count() % 2 == 1
}

pub fn word_text(w: &[Sym]) -> String {
    if w.is_empty() {
        return "1".to_owned();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < w.len() {
        let run = w[i..].iter().take_while(|&&s| s == w[i]).count();
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(&w[i].to_string());
        if run > 1 {
            out.push_str(&format!("^{run}"));
        }
        i += run;
    }
    out
}

/// A linear combination of words; no zero coefficient is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Combo {
    nvars: usize,
    terms: BTreeMap<Word, Rf>,
}

impl Combo {
    pub fn zero(nvars: usize) -> Self {
        Combo {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(nvars: usize, w: &[Sym]) -> Self {
        let mut c = Self::zero(nvars);
        c.add_term(w.to_vec(), Rf::one(nvars));
        c
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rf)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Word, c: Rf) {
        add_entry(&mut self.terms, w, c);
    }

    pub fn add_scaled(&mut self, other: &Combo, c: &Rf) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn sub(&self, other: &Combo) -> Combo {
        let mut out = self.clone();
        out.add_scaled(other, &Rf::int(self.nvars, -1));
        out
    }

    pub fn text(&self, names: &[String]) -> String {
        let alone = self.terms.len() == 1;
        join_terms(self.terms.iter().map(|(w, c)| {
            let body = (!w.is_empty()).then(|| word_text(w));
            signed_term(c, body, names, alone)
        }))
    }
}

fn add_entry<K: Ord>(map: &mut BTreeMap<K, Rf>, key: K, c: Rf) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Rewrites the leftmost adjacent pair that has a rule until none applies.
///
/// Pairs without a rule are treated as ordered; a rule with an empty
/// right-hand side annihilates the pair.
#[derive(Debug, Clone)]
pub struct Rewriter {
    nvars: usize,
    rules: BTreeMap<(Sym, Sym), Vec<(Word, Rf)>>,
}

impl Rewriter {
    pub fn new(nvars: usize) -> Self {
        Rewriter {
            nvars,
            rules: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rule(&mut self, lhs: (Sym, Sym), rhs: Vec<(Word, Rf)>) {
        self.rules.insert(lhs, rhs);
    }

    pub fn normalize_word(&self, w: &[Sym]) -> Combo {
        let mut out = Combo::zero(self.nvars);
        let mut stack = vec![(w.to_vec(), Rf::one(self.nvars))];
        while let Some((w, c)) = stack.pop() {
            let hit = w
                .windows(2)
                .enumerate()
                .find_map(|(i, p)| self.rules.get(&(p[0], p[1])).map(|r| (i, r)));
            match hit {
                None => out.add_term(w, c),
                Some((i, rhs)) => {
                    for (mid, d) in rhs {
                        let mut nw = w[..i].to_vec();
                        nw.extend_from_slice(mid);
                        nw.extend_from_slice(&w[i + 2..]);
                        stack.push((nw, &c * d));
                    }
                }
            }
        }
        out
    }

    pub fn normalize(&self, e: &Combo) -> Combo {
        let mut out = Combo::zero(self.nvars);
        for (w, c) in e.terms() {
            out.add_scaled(&self.normalize_word(w), c);
        }
        out
    }
}

/// A finite sum of pure tensors of normal words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordTensor {
    rank: usize,
    nvars: usize,
    terms: BTreeMap<Vec<Word>, Rf>,
}

impl WordTensor {
    pub fn zero(rank: usize, nvars: usize) -> Self {
        WordTensor {
            rank,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(rank: usize, nvars: usize) -> Self {
        let mut t = Self::zero(rank, nvars);
        t.add_term(vec![Vec::new(); rank], Rf::one(nvars));
        t
    }

    /// Multilinear expansion of `slots[0] (x) slots[1] (x) ...`.
    pub fn pure(nvars: usize, slots: &[Combo]) -> Self {
        let mut acc: Vec<(Vec<Word>, Rf)> = vec![(Vec::new(), Rf::one(nvars))];
        for slot in slots {
            let mut next = Vec::new();
            for (key, c) in &acc {
                for (w, d) in slot.terms() {
                    let mut k = key.clone();
                    k.push(w.clone());
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Rf)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: Vec<Word>, c: Rf) {
        assert_eq!(key.len(), self.rank, "tensor rank mismatch");
        add_entry(&mut self.terms, key, c);
    }

    pub fn add_scaled(&mut self, other: &WordTensor, c: &Rf) {
        for (k, d) in &other.terms {
            self.add_term(k.clone(), d * c);
        }
    }

    pub fn sub(&self, other: &WordTensor) -> WordTensor {
        let mut out = self.clone();
        out.add_scaled(other, &Rf::int(self.nvars, -1));
        out
    }

    /// Koszul product with each slot normal-ordered by `rw`.
    pub fn multiply(&self, other: &WordTensor, rw: &Rewriter) -> WordTensor {
        assert_eq!(self.rank, other.rank, "tensor rank mismatch");
        let mut out = Self::zero(self.rank, self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut odd = false;
                for (i, ai) in a.iter().enumerate() {
                    if word_is_odd(ai) {
                        odd ^= b[..i].iter().filter(|w| word_is_odd(w)).count() % 2 == 1;
                    }
                }
                let slots: Vec<Combo> = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| {
                        let mut w = x.clone();
                        w.extend_from_slice(y);
                        rw.normalize_word(&w)
                    })
                    .collect();
                let c = ca * cb;
                let c = if odd { -c } else { c };
                out.add_scaled(&WordTensor::pure(self.nvars, &slots), &c);
            }
        }
        out
    }

    /// Replaces slot `slot` by the rank-`k` tensor `f(word)`. `f` must be even.
    pub fn expand_slot(&self, slot: usize, k: usize, f: impl Fn(&[Sym]) -> WordTensor) -> WordTensor {
        let mut out = Self::zero(self.rank + k - 1, self.nvars);
        for (key, c) in &self.terms {
            for (inner, d) in f(&key[slot]).terms() {
                let mut nk = key[..slot].to_vec();
                nk.extend(inner.iter().cloned());
                nk.extend_from_slice(&key[slot + 1..]);
                out.add_term(nk, c * d);
            }
        }
        out
    }

    pub fn text(&self, names: &[String]) -> String {
        let alone = self.terms.len() == 1;
        join_terms(self.terms.iter().map(|(key, c)| {
            let body = key.iter().map(|w| word_text(w)).collect::<Vec<_>>().join(" (x) ");
            signed_term(c, Some(body), names, alone)
        }))
    }
}
