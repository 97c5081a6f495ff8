//! Exact coefficient arithmetic: rational functions in the deformation
//! parameters of a calculus type.

mod gcd;
mod poly;
mod rational;
mod scalar;

pub use gcd::{content, gcd};
pub use poly::{Exponent, Poly};
pub use rational::{qnumber, RationalFunction};
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("coefficient has a pole at the given assignment")]
    PoleAtAssignment,
    #[error("assignment does not cover variable `{0}`")]
    MissingVariable(String),
}

/// Which parameter family a ring of coefficients belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    TypeI,
    TypeII,
    TypeIII,
    /// Ad-hoc rings, e.g. the unknowns of a covariance ansatz.
    Custom,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::TypeI => "I",
            Mode::TypeII => "II",
            Mode::TypeIII => "III",
            Mode::Custom => "custom",
        }
    }
}

/// Ordered, duplicate-free parameter names of a coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamSet {
    mode: Mode,
    vars: Vec<String>,
}

impl ParamSet {
    pub fn for_mode(mode: Mode) -> Self {
        let vars: &[&str] = match mode {
            Mode::TypeI => &["q"],
            Mode::TypeII => &["q", "r"],
            Mode::TypeIII => &["q", "p"],
            Mode::Custom => &[],
        };
        ParamSet {
            mode,
            vars: vars.iter().map(|s| (*s).to_owned()).collect(),
        }
    }

    /// A custom ring; panics on duplicate names.
    pub fn custom<S: AsRef<str>>(vars: &[S]) -> Self {
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_owned()).collect();
        for (i, v) in vars.iter().enumerate() {
            assert!(!vars[..i].contains(v), "duplicate parameter `{v}`");
        }
        ParamSet {
            mode: Mode::Custom,
            vars,
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var<F: Scalar>(&self, name: &str) -> Option<RationalFunction<F>> {
        self.index_of(name)
            .map(|i| RationalFunction::var(self.len(), i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    type Rf = RationalFunction<BigRational>;
    type P = Poly<BigRational>;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn q1() -> Rf {
        Rf::var(1, 0)
    }

    #[test]
    fn make_divides_out_common_factor() {
        let q = P::var(1, 0);
        let one = P::one(1);
        let f = Rf::new(&one - &(&q * &q), &one - &q).unwrap();
        assert_eq!(f, Rf::from_poly(&one + &q));

        let zero = Rf::new(P::zero(1), P::constant(1, rat(7, 1))).unwrap();
        assert!(zero.is_zero());
        assert!(zero.denom().is_one());

        let q2 = P::var(2, 0);
        let r2 = P::var(2, 1);
        let f = Rf::new(&(&q2 * &r2) - &r2, r2.clone()).unwrap();
        assert_eq!(f, Rf::from_poly(&q2 - &P::one(2)));

        assert_eq!(
            Rf::new(q.clone(), P::zero(1)),
            Err(CoeffError::ZeroDenominator)
        );
    }

    #[test]
    fn arithmetic_examples() {
        let q = q1();
        assert!((&q + &(-&q)).is_zero());
        let q2 = Rf::var(2, 0);
        let r2 = Rf::var(2, 1);
        let a = q2.checked_div(&r2).unwrap();
        let b = -&r2.checked_div(&q2).unwrap();
        assert_eq!(&a * &b, Rf::int(2, -1));
        let inv = Rf::one(1).checked_div(&q).unwrap();
        assert_eq!(inv.fmt_with(&["q".to_owned()]), "q^-1");
        assert_eq!(
            Rf::one(1).checked_div(&Rf::zero(1)),
            Err(CoeffError::DivisionByZero)
        );
    }

    #[test]
    fn eval_examples() {
        let names = vec!["q".to_owned()];
        let one = Rf::one(1);
        let q = q1();
        let mut asg = BTreeMap::new();
        asg.insert("q".to_owned(), rat(3, 2));
        assert_eq!((&one + &q).eval_named(&names, &asg).unwrap(), rat(5, 2));

        let geo = (&one - &q.pow(3).unwrap())
            .checked_div(&(&one - &q))
            .unwrap();
        asg.insert("q".to_owned(), rat(2, 1));
        assert_eq!(geo.eval_named(&names, &asg).unwrap(), rat(7, 1));

        let pole = one.checked_div(&(&one - &q)).unwrap();
        asg.insert("q".to_owned(), rat(1, 1));
        assert_eq!(
            pole.eval_named(&names, &asg),
            Err(CoeffError::PoleAtAssignment)
        );
        assert_eq!(
            q.eval_named(&names, &BTreeMap::new()),
            Err(CoeffError::MissingVariable("q".to_owned()))
        );
    }

    #[test]
    fn qnumber_examples() {
        let big_q = q1();
        let one = Rf::one(1);
        let expect = &(&one + &big_q) + &big_q.pow(2).unwrap();
        assert_eq!(qnumber(3, &big_q), expect);
        assert!(qnumber(0, &big_q).is_zero());
        // (1 - Q^-1)/(1 - Q) = (Q - 1)/(Q (1 - Q)) = -Q^-1
        assert_eq!(qnumber(-1, &big_q), -&big_q.inv().unwrap());
    }

    #[test]
    fn qnumber_geometric_identity() {
        let big_q = Rf::var(2, 1);
        let one = Rf::one(2);
        for m in -8..=8 {
            let lhs = &(&qnumber(m, &big_q) * &(&one - &big_q)) + &big_q.pow(m).unwrap();
            assert!(lhs.is_one(), "m = {m}");
        }
    }

    #[test]
    fn printing_fractions() {
        let names = vec!["q".to_owned(), "r".to_owned()];
        let q = Rf::var(2, 0);
        let r = Rf::var(2, 1);
        let one = Rf::one(2);
        let f = q.checked_div(&r).unwrap();
        assert_eq!(f.fmt_with(&names), "q*r^-1");
        let g = one.checked_div(&(&one - &q)).unwrap();
        assert_eq!(g.fmt_with(&names), "(-1)/(q-1)");
        assert_eq!((&r - &one).fmt_with(&names), "r-1");
    }

    fn small_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(((0u32..3, 0u32..3), -3i64..=3), 0..4).prop_map(|ts| {
            P::from_terms(
                2,
                ts.into_iter()
                    .map(|((a, b), c)| (vec![a, b], BigRational::from_i64(c))),
            )
        })
    }

    fn small_rf() -> impl Strategy<Value = Rf> {
        (small_poly(), small_poly()).prop_map(|(n, d)| {
            if d.is_zero() {
                Rf::from_poly(n)
            } else {
                Rf::new(n, d).unwrap()
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in small_rf(), b in small_rf(), c in small_rf()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn canonical_representatives(n in small_poly(), d in small_poly(), k in small_poly()) {
            prop_assume!(!d.is_zero() && !k.is_zero());
            let a = Rf::new(n.clone(), d.clone()).unwrap();
            let b = Rf::new(&n * &k, &d * &k).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn eval_is_homomorphism(a in small_rf(), b in small_rf(), x in -4i64..=4, y in 1i64..=4) {
            let v = [BigRational::from_i64(x), BigRational::new(1.into(), y.into())];
            if let (Ok(ea), Ok(eb)) = (a.eval(&v), b.eval(&v)) {
                prop_assert_eq!((&a + &b).eval(&v).unwrap(), ea.clone() + eb.clone());
                prop_assert_eq!((&a * &b).eval(&v).unwrap(), ea * eb);
            }
        }
    }
}
