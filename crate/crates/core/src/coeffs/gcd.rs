//! Multivariate GCD by recursive primitive pseudo-remainder sequences.
//!
//! A polynomial in `n` variables is viewed as univariate in its highest
//! occurring variable with coefficients in the remaining ones; contents
//! are computed recursively, so each recursion level strictly loses a
//! variable.

use super::poly::Poly;
use super::scalar::Scalar;

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd<F: Scalar>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let n = a.nvars();
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(n);
    }
    // Monomial fast path: the common part is a monomial divisor.
    if a.is_monomial() || b.is_monomial() {
        let ca = a.monomial_content();
        let cb = b.monomial_content();
        let e = super::poly::Exponent(ca.0.iter().zip(&cb.0).map(|(x, y)| *x.min(y)).collect());
        return Poly::monomial(e, F::one());
    }
    let Some(var) = main_var(a, b) else {
        return Poly::one(n);
    };
    let da = a.degree_in(var);
    let db = b.degree_in(var);
    if da == 0 {
        return gcd(a, &content(b, var));
    }
    if db == 0 {
        return gcd(&content(a, var), b);
    }
    let ca = content(a, var);
    let cb = content(b, var);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (mut r0, mut r1) = if da >= db { (pa, pb) } else { (pb, pa) };
    let g = loop {
        let r = prem(&r0, &r1, var);
        if r.is_zero() {
            break r1;
        }
        if r.degree_in(var) == 0 {
            break Poly::one(n);
        }
        r0 = r1;
        // Monic scaling keeps rational coefficient growth in check.
        r1 = primitive_part(&r, var).monic();
    };
    let g = primitive_part(&g, var);
    (&c * &g).monic()
}

fn main_var<F: Scalar>(a: &Poly<F>, b: &Poly<F>) -> Option<usize> {
    (0..a.nvars())
        .rev()
        .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
}

/// GCD of the coefficients of `p` viewed as univariate in `var`.
pub fn content<F: Scalar>(p: &Poly<F>, var: usize) -> Poly<F> {
    let mut acc = Poly::zero(p.nvars());
    for c in p.coeffs_in(var) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn primitive_part<F: Scalar>(p: &Poly<F>, var: usize) -> Poly<F> {
    let c = content(p, var);
    if c.is_zero() {
        return p.clone();
    }
    p.div_exact(&c).expect("content divides")
}

/// Pseudo-remainder of `a` by `b` with respect to `var`.
fn prem<F: Scalar>(a: &Poly<F>, b: &Poly<F>, var: usize) -> Poly<F> {
    let n = b.degree_in(var);
    let lb = b.coeff_in(var, n);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= n {
        let dr = r.degree_in(var);
        let lr = r.coeff_in(var, dr);
        r = &(&r * &lb) - &(&lr * &b.shift(var, dr - n));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Poly<BigRational>;

    #[test]
    fn gcd_of_products() {
        let q = P::var(2, 0);
        let r = P::var(2, 1);
        let one = P::one(2);
        let f1 = &q - &one;
        let f2 = &(&q * &r) + &one;
        let f3 = &r + &q;
        let a = &(&f1 * &f2) * &f3;
        let b = &(&f1 * &f3) * &(&r - &one);
        let g = gcd(&a, &b);
        assert_eq!(g, (&f1 * &f3).monic());
    }

    #[test]
    fn coprime() {
        let q = P::var(2, 0);
        let r = P::var(2, 1);
        assert!(gcd(&(&q + &r), &(&q - &r)).is_one());
    }

    #[test]
    fn univariate() {
        let q = P::var(1, 0);
        let one = P::one(1);
        let a = &(&q * &q) - &one;
        let b = &(&(&q * &q) * &q) - &one;
        assert_eq!(gcd(&a, &b), &q - &one);
    }
}
