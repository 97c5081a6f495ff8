use std::cmp::Ordering;
use std::fmt;

use super::generator::{Generator, Letter, Parity, PowerDomain, GENERATORS};

/// A normal-ordered word, stored as one exponent per generator in the
/// canonical order `dx < dth < x < th < d < px < pth < ix < ith`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [i32; 9],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; 9] };

    /// Returns `None` if an exponent falls outside its generator's domain.
    pub fn from_exps(exps: [i32; 9]) -> Option<Monomial> {
        for (g, &e) in GENERATORS.iter().zip(&exps) {
            let ok = match g.power_domain() {
                PowerDomain::AllIntegers => true,
                PowerDomain::Naturals => e >= 0,
                PowerDomain::ZeroOne => e == 0 || e == 1,
            };
            if !ok {
                return None;
            }
        }
        Some(Monomial { exps })
    }

    pub fn generator(g: Generator) -> Monomial {
        Self::power(g, 1).expect("exponent 1 is always allowed")
    }

    pub fn power(g: Generator, e: i32) -> Option<Monomial> {
        let mut exps = [0; 9];
        exps[g.index()] = e;
        Self::from_exps(exps)
    }

    /// `dth^b x^m th^eps`, the basis of the forms-times-functions sector
    /// used by action-level checks.
    pub fn basis(m: i32, eps: i32, b: i32) -> Monomial {
        let mut exps = [0; 9];
        exps[Generator::Dth.index()] = b;
        exps[Generator::X.index()] = m;
        exps[Generator::Th.index()] = eps;
        Self::from_exps(exps).expect("basis exponents in range")
    }

    pub fn exps(&self) -> &[i32; 9] {
        &self.exps
    }

    pub fn exp(&self, g: Generator) -> i32 {
        self.exps[g.index()]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn parity(&self) -> Parity {
        let bits: i32 = GENERATORS
            .iter()
            .zip(&self.exps)
            .map(|(g, &e)| g.parity().bit() as i32 * e)
            .sum();
        Parity::from_bit(bits.unsigned_abs())
    }

    /// Total word length counting `|exponent|`.
    pub fn length(&self) -> u32 {
        self.exps.iter().map(|e| e.unsigned_abs()).sum()
    }

    /// Index of the right-most generator present.
    pub fn highest(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e != 0)
    }

    /// True when no operator generator (d, px, pth, ix, ith) occurs.
    pub fn is_function_form(&self) -> bool {
        GENERATORS
            .iter()
            .zip(&self.exps)
            .all(|(g, &e)| !g.is_operator() || e == 0)
    }

    /// True for `x^m th^eps` only.
    pub fn is_function(&self) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || i == Generator::X.index() || i == Generator::Th.index())
    }

    pub(crate) fn with_exp(&self, index: usize, e: i32) -> Monomial {
        let mut m = *self;
        m.exps[index] = e;
        m
    }

    /// Letters of the word, left to right.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for (g, &e) in GENERATORS.iter().zip(&self.exps) {
            let l = if e < 0 { Letter::XInv } else { Letter::Gen(*g) };
            for _ in 0..e.unsigned_abs() {
                out.push(l);
            }
        }
        out
    }

    /// Canonical text, e.g. `x^-2*th*pth`; `1` for the empty word.
    pub fn text(&self) -> String {
        if self.is_one() {
            return "1".to_owned();
        }
        let mut parts = Vec::new();
        for (g, &e) in GENERATORS.iter().zip(&self.exps) {
            match e {
                0 => {}
                1 => parts.push(g.symbol().to_owned()),
                _ => parts.push(format!("{}^{}", g.symbol(), e)),
            }
        }
        parts.join("*")
    }
}

/// Graded order: shorter words first, then by exponents with earlier
/// generators weighing more.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_examples() {
        let xth = Monomial::from_exps([0, 0, 1, 1, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(xth.parity(), Parity::Odd);
        assert_eq!(Monomial::generator(Generator::Dth).parity(), Parity::Even);
        assert_eq!(Monomial::power(Generator::X, -3).unwrap().parity(), Parity::Even);
    }

    #[test]
    fn domains_enforced() {
        assert!(Monomial::power(Generator::Th, 2).is_none());
        assert!(Monomial::power(Generator::Px, -1).is_none());
        assert!(Monomial::power(Generator::X, -4).is_some());
    }

    #[test]
    fn print_order() {
        let a = Monomial::from_exps([0, 0, 1, 0, 0, 1, 0, 0, 0]).unwrap();
        let b = Monomial::from_exps([0, 0, 0, 1, 0, 0, 1, 0, 0]).unwrap();
        assert!(Monomial::ONE < a && a < b);
        assert_eq!(
            Monomial::from_exps([0, 0, -2, 1, 0, 0, 1, 0, 0]).unwrap().text(),
            "x^-2*th*pth"
        );
    }
}
