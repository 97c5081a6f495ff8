use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gcd::gcd;
use super::poly::{format_term, Poly};
use super::scalar::Scalar;
use super::CoeffError;

/// A reduced fraction of multivariate polynomials.
///
/// Canonical form: `gcd(num, den) = 1`, the graded-lex leading
/// coefficient of `den` is 1, and zero is `0/1`. Two equal fractions are
/// therefore structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction<F: Scalar> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Scalar> RationalFunction<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly<F>, den: Poly<F>) -> Self {
        let n = num.nvars();
        if num.is_zero() {
            return Self::from_poly(Poly::zero(n));
        }
        if let Some(c) = den.as_constant() {
            return RationalFunction {
                num: num.scale(&c.inv()),
                den: Poly::one(n),
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coeff().inv();
        RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let n = p.nvars();
        RationalFunction {
            num: p,
            den: Poly::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(Poly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(Poly::one(nvars))
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::from_poly(Poly::constant(nvars, c))
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, F::from_i64(c))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::from_poly(Poly::var(nvars, index))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<F> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CoeffError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: i64) -> Result<Self, CoeffError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let k = n.unsigned_abs() as u32;
        Ok(RationalFunction {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::reduce(self.num.scale(c), self.den.clone())
    }

    /// Exact evaluation at a complete assignment.
    pub fn eval(&self, values: &[F]) -> Result<F, CoeffError> {
        let d = self.den.eval(values);
        if d.is_zero() {
            return Err(CoeffError::PoleAtAssignment);
        }
        Ok(self.num.eval(values) / d)
    }

    /// Evaluation with a name-keyed assignment.
    pub fn eval_named(
        &self,
        names: &[String],
        assignment: &BTreeMap<String, F>,
    ) -> Result<F, CoeffError> {
        let mut values = Vec::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            match assignment.get(name) {
                Some(v) => values.push(v.clone()),
                None if self.num.degree_in(i) == 0 && self.den.degree_in(i) == 0 => {
                    values.push(F::zero())
                }
                None => return Err(CoeffError::MissingVariable(name.clone())),
            }
        }
        self.eval(&values)
    }

    /// Replaces every variable `i` by `images[i]` (all in one target ring).
    pub fn compose(&self, images: &[Self]) -> Result<Self, CoeffError> {
        assert_eq!(images.len(), self.nvars());
        let target = images
            .first()
            .map(Self::nvars)
            .unwrap_or_else(|| self.nvars());
        let eval_poly = |p: &Poly<F>| -> Self {
            p.map_terms(
                Self::zero(target),
                |e, c| {
                    let mut t = Self::constant(target, c.clone());
                    for (i, &k) in e.0.iter().enumerate() {
                        if k > 0 {
                            t = &t * &images[i].pow(i64::from(k)).expect("non-negative power");
                        }
                    }
                    t
                },
                |a, b| &a + &b,
            )
        };
        let n = eval_poly(&self.num);
        let d = eval_poly(&self.den);
        if d.is_zero() {
            return Err(CoeffError::PoleAtAssignment);
        }
        n.checked_div(&d)
    }

    /// Specialises a single variable to a field value, keeping the ring.
    pub fn substitute(&self, var: usize, value: &F) -> Result<Self, CoeffError> {
        let n = self.nvars();
        let images: Vec<Self> = (0..n)
            .map(|i| {
                if i == var {
                    Self::constant(n, value.clone())
                } else {
                    Self::var(n, i)
                }
            })
            .collect();
        self.compose(&images)
    }

    /// Moves into a ring with `nvars` variables; see [`Poly::embed`].
    pub fn embed(&self, nvars: usize, index_map: &[usize]) -> Self {
        RationalFunction {
            num: self.num.embed(nvars, index_map),
            den: self.den.embed(nvars, index_map),
        }
    }

    /// True when the value is `±c * monomial` with a Laurent-monomial
    /// shape, i.e. prints without parentheses as a product.
    pub fn is_signed_term(&self) -> bool {
        self.num.is_monomial() && self.den.is_monomial()
    }

    /// Whether the printed form starts with a minus sign.
    pub fn leading_negative(&self) -> bool {
        self.num
            .terms()
            .next_back()
            .is_some_and(|(_, c)| c.is_negative())
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.den.is_one() {
            return self.num.fmt_with(names);
        }
        if self.den.is_monomial() {
            // Laurent form: divide every numerator term by the monomial.
            let (dexp, dc) = self.den.leading().expect("nonzero denominator");
            let dinv = dc.inv();
            let mut out = String::new();
            for (i, (e, c)) in self.num.terms().rev().enumerate() {
                let c = c.clone() * dinv.clone();
                let neg = c.is_negative();
                if i == 0 {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push(if neg { '-' } else { '+' });
                }
                out.push_str(&format_term(e, &c.abs(), names, &|v| dexp.0[v]));
            }
            return out;
        }
        format!(
            "({})/({})",
            self.num.fmt_with(names),
            self.den.fmt_with(names)
        )
    }
}

/// `(1 - base^m) / (1 - base)`; for `m >= 0` the sum `1 + base + ... + base^(m-1)`.
pub fn qnumber<F: Scalar>(m: i64, base: &RationalFunction<F>) -> RationalFunction<F> {
    let n = base.nvars();
    let one = RationalFunction::one(n);
    if m >= 0 {
        let mut acc = RationalFunction::zero(n);
        let mut p = one;
        for _ in 0..m {
            acc = &acc + &p;
            p = &p * base;
        }
        acc
    } else {
        // [−k] = −base^{−k} [k] for k > 0.
        let k = -m;
        let pos = qnumber(k, base);
        let scale = base
            .pow(m)
            .expect("q-number of negative index needs an invertible base");
        -&(&scale * &pos)
    }
}

impl<F: Scalar> fmt::Debug for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars()).map(|i| format!("v{i}")).collect();
        write!(f, "{}", self.fmt_with(&names))
    }
}

impl<F: Scalar> Add for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn add(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<F: Scalar> Sub for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn sub(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        self + &(-rhs)
    }
}

impl<F: Scalar> Neg for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<F: Scalar> Mul for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn mul(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.nvars());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<F: Scalar> Neg for RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        -&self
    }
}
