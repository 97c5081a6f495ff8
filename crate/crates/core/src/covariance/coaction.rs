//! Right and left coactions on the differential algebra and the
//! covariance properties they must satisfy.

use super::rewrite::{word_is_odd, word_text, Combo, Rewriter, Sym, Word, WordTensor};
use crate::algebra::CalculusType;
use crate::coeffs::CoeffError;
use crate::Rf;

/// The commutation coefficients of functions with differentials, over any
/// coefficient ring; `q` is the function-algebra parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deformation {
    pub names: Vec<String>,
    pub q: Rf,
    pub q_big: Rf,
    pub q11: Rf,
    pub q12: Rf,
    pub q21: Rf,
    pub q22: Rf,
    pub q_prime: Rf,
}

/// Variable names of the symbolic deformation, in index order.
pub const SYMBOLIC_NAMES: [&str; 7] = ["q", "Q", "Q11", "Q12", "Q21", "Q22", "Qp"];

impl Deformation {
    /// Every coefficient an independent unknown.
    pub fn symbolic() -> Self {
        let n = SYMBOLIC_NAMES.len();
        let v = |i| Rf::var(n, i);
        Deformation {
            names: SYMBOLIC_NAMES.iter().map(|s| (*s).to_owned()).collect(),
            q: v(0),
            q_big: v(1),
            q11: v(2),
            q12: v(3),
            q21: v(4),
            q22: v(5),
            q_prime: v(6),
        }
    }

    pub fn of_type(ct: &CalculusType) -> Self {
        Deformation {
            names: ct.names().to_vec(),
            q: ct.q(),
            q_big: ct.q_big.clone(),
            q11: ct.q11.clone(),
            q12: ct.q12.clone(),
            q21: ct.q21.clone(),
            q22: ct.q22.clone(),
            q_prime: ct.q_prime.clone(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Images of the symbolic variables, for [`Rf::compose`].
    pub fn images(&self) -> Vec<Rf> {
        vec![
            self.q.clone(),
            self.q_big.clone(),
            self.q11.clone(),
            self.q12.clone(),
            self.q21.clone(),
            self.q22.clone(),
            self.q_prime.clone(),
        ]
    }

    /// Normal ordering of functions and differentials: differentials to
    /// the left, `dx` before `dth`, `x` before `th`.
    pub fn rewriter(&self) -> Result<Rewriter, CoeffError> {
        use Sym::{Dth, Dx, Th, X};
        let n = self.nvars();
        let mut rw = Rewriter::new(n);
        rw.rule((Th, X), vec![(vec![X, Th], self.q.inv()?)]);
        rw.rule((Th, Th), Vec::new());
        rw.rule((X, Dx), vec![(vec![Dx, X], self.q_big.clone())]);
        rw.rule(
            (X, Dth),
            vec![(vec![Dth, X], self.q11.clone()), (vec![Dx, Th], self.q12.clone())],
        );
        rw.rule(
            (Th, Dx),
            vec![(vec![Dx, Th], self.q21.clone()), (vec![Dth, X], self.q22.clone())],
        );
        rw.rule((Th, Dth), vec![(vec![Dth, Th], Rf::one(n))]);
        rw.rule((Dth, Dx), vec![(vec![Dx, Dth], self.q_prime.inv()?)]);
        rw.rule((Dx, Dx), Vec::new());
        Ok(rw)
    }
}

/// Which coaction to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `Omega -> Omega (x) A`
    Right,
    /// `Omega -> A (x) Omega`
    Left,
}

fn pair(n: usize, parts: &[(&[Sym], &[Sym], i64)]) -> WordTensor {
    let mut t = WordTensor::zero(2, n);
    for (a, b, c) in parts {
        t.add_term(vec![a.to_vec(), b.to_vec()], Rf::int(n, *c));
    }
    t
}

/// Image of one letter; coordinates go through the function coproduct.
fn letter_image(n: usize, side: Side, s: Sym) -> WordTensor {
    use Sym::{Dth, Dx, Th, X};
    match (side, s) {
        (_, X) => pair(n, &[(&[X], &[X], 1)]),
        (_, Th) => pair(n, &[(&[Th], &[X], 1), (&[X], &[Th], 1)]),
        (Side::Right, Dx) => pair(n, &[(&[Dx], &[X], 1)]),
        (Side::Right, Dth) => pair(n, &[(&[Dth], &[X], 1), (&[Dx], &[Th], 1)]),
        (Side::Left, Dx) => pair(n, &[(&[X], &[Dx], 1)]),
        (Side::Left, Dth) => pair(n, &[(&[X], &[Dth], 1), (&[Th], &[Dx], -1)]),
        (_, Sym::Ix | Sym::Ith) => panic!("coactions are defined on forms only"),
    }
}

/// Multiplicative extension over the letters of `w`, slots normal-ordered.
pub fn coact_word(rw: &Rewriter, side: Side, w: &[Sym]) -> WordTensor {
    let n = rw.nvars();
    w.iter()
        .fold(WordTensor::unit(2, n), |acc, &s| acc.multiply(&letter_image(n, side, s), rw))
}

pub fn coact(rw: &Rewriter, side: Side, e: &Combo) -> WordTensor {
    let mut out = WordTensor::zero(2, rw.nvars());
    for (w, c) in e.terms() {
        out.add_scaled(&coact_word(rw, side, w), c);
    }
    out
}

/// The exterior derivative on words in coordinates and differentials.
pub fn d_word(rw: &Rewriter, w: &[Sym]) -> Combo {
    let n = rw.nvars();
    let mut out = Combo::zero(n);
    let mut odd = false;
    for (i, &s) in w.iter().enumerate() {
        if let Some(ds) = s.differential() {
            let mut nw = w[..i].to_vec();
            nw.push(ds);
            nw.extend_from_slice(&w[i + 1..]);
            out.add_term(nw, Rf::int(n, if odd { -1 } else { 1 }));
        }
        odd ^= s.is_odd();
    }
    rw.normalize(&out)
}

/// `d` applied in slot `slot` of a rank-2 tensor, with the Koszul sign of
/// passing the odd map over slot 0.
fn d_in_slot(rw: &Rewriter, t: &WordTensor, slot: usize) -> WordTensor {
    let n = rw.nvars();
    let mut out = WordTensor::zero(2, n);
    for (key, c) in t.terms() {
        let image = d_word(rw, &key[slot]);
        let sign = slot == 1 && word_is_odd(&key[0]);
        for (w, d) in image.terms() {
            let mut nk = key.clone();
            nk[slot] = w.clone();
            let v = c * d;
            out.add_term(nk, if sign { -v } else { v });
        }
    }
    out
}

/// Counit of a normal function word: 1 on powers of `x`, 0 otherwise.
fn counit(w: &[Sym]) -> bool {
    w.iter().all(|&s| s == Sym::X)
}

fn counit_in_slot(t: &WordTensor, slot: usize, n: usize) -> Combo {
    let mut out = Combo::zero(n);
    for (key, c) in t.terms() {
        if counit(&key[slot]) {
            out.add_term(key[1 - slot].clone(), c.clone());
        }
    }
    out
}

/// Every word over `letters` of length `1..=max_len`.
pub fn words(letters: &[Sym], max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer: Vec<Word> = vec![Vec::new()];
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

pub const FORM_LETTERS: [Sym; 4] = [Sym::Dx, Sym::Dth, Sym::X, Sym::Th];
pub const FUNCTION_LETTERS: [Sym; 2] = [Sym::X, Sym::Th];

fn first_failure(samples: Vec<Word>, mut residual: impl FnMut(&[Sym]) -> Option<String>) -> Option<String> {
    samples
        .into_iter()
        .find_map(|w| residual(&w).map(|r| format!("on {}: {r}", word_text(&w))))
}

/// Coassociativity and counit laws of one coaction on form words of
/// length `<= max_len`. Returns the first non-zero residual.
pub fn coaction_axioms(rw: &Rewriter, names: &[String], side: Side, max_len: usize) -> Option<String> {
    let n = rw.nvars();
    let coproduct = |w: &[Sym]| coact_word(rw, Side::Right, w);
    first_failure(words(&FORM_LETTERS, max_len), |w| {
        let once = coact_word(rw, side, w);
        let (twice, split, counit_slot) = match side {
            Side::Right => (
                once.expand_slot(0, 2, |u| coact_word(rw, side, u)),
                once.expand_slot(1, 2, coproduct),
                1,
            ),
            Side::Left => (
                once.expand_slot(1, 2, |u| coact_word(rw, side, u)),
                once.expand_slot(0, 2, coproduct),
                0,
            ),
        };
        let r = twice.sub(&split);
        if !r.is_zero() {
            return Some(format!("coassociativity {}", r.text(names)));
        }
        let back = counit_in_slot(&once, counit_slot, n).sub(&rw.normalize_word(w));
        (!back.is_zero()).then(|| format!("counit {}", back.text(names)))
    })
}

/// The three bicovariance identities: `d` intertwines the function
/// coproduct with each coaction, and the two coactions commute.
pub fn bicovariance(rw: &Rewriter, names: &[String], max_len: usize) -> [Option<String>; 3] {
    let right = first_failure(words(&FUNCTION_LETTERS, max_len), |w| {
        let delta = coact_word(rw, Side::Right, w);
        let r = d_in_slot(rw, &delta, 0).sub(&coact(rw, Side::Right, &d_word(rw, w)));
        (!r.is_zero()).then(|| r.text(names))
    });
    let left = first_failure(words(&FUNCTION_LETTERS, max_len), |w| {
        let delta = coact_word(rw, Side::Left, w);
        let r = d_in_slot(rw, &delta, 1).sub(&coact(rw, Side::Left, &d_word(rw, w)));
        (!r.is_zero()).then(|| r.text(names))
    });
    let commute = first_failure(words(&FORM_LETTERS, max_len), |w| {
        let lr = coact_word(rw, Side::Right, w).expand_slot(0, 2, |u| coact_word(rw, Side::Left, u));
        let rl = coact_word(rw, Side::Left, w).expand_slot(1, 2, |u| coact_word(rw, Side::Right, u));
        let r = lr.sub(&rl);
        (!r.is_zero()).then(|| r.text(names))
    });
    [right, left, commute]
}
