//! The rule table of a calculus type, including the derived `x^-1` rules.

use super::calculus_type::CalculusType;
use super::element::Element;
use super::generator::{Generator, Letter};
use super::monomial::Monomial;
use super::rules::RuleTable;
use super::AlgebraError;
use crate::Rf;

use Generator::*;

/// Word of distinct generators, given in canonical order.
fn word(gs: &[Generator]) -> Monomial {
    let mut exps = [0; 9];
    for g in gs {
        exps[g.index()] += 1;
    }
    Monomial::from_exps(exps).expect("generator word in range")
}

fn el(n: usize, terms: &[(Rf, &[Generator])]) -> Element {
    let mut e = Element::zero(n);
    for (c, gs) in terms {
        e.add_term(word(gs), c.clone());
    }
    e
}

fn inv(name: &str, c: &Rf) -> Result<Rf, AlgebraError> {
    c.inv()
        .map_err(|_| AlgebraError::NonInvertibleRule(format!("{name} vanishes")))
}

/// The 36 rules between distinct generators, in the form
/// `(left, right) -> rhs` with `left > right`.
fn base_rules(ct: &CalculusType) -> Result<Vec<((Letter, Letter), Element)>, AlgebraError> {
    let n = ct.nvars();
    let one = ct.one();
    let m1 = ct.int(-1);
    let q = ct.q();
    let (qb, q11, q12, q21, q22, qp) = (
        &ct.q_big, &ct.q11, &ct.q12, &ct.q21, &ct.q22, &ct.q_prime,
    );
    let qi = inv("q", &q)?;
    let qbi = inv("Q", qb)?;
    let q11i = inv("Q11", q11)?;
    let q21i = inv("Q21", q21)?;
    let qpi = inv("Q'", qp)?;
    let ix_ith = -&(q11 * &inv("Q12 - Q", &(q12 - qb))?);
    let ith_ix = inv("the inner-product coefficient", &ix_ith)?;
    let neg = |c: &Rf| -c;

    let rules: Vec<(Generator, Generator, Element)> = vec![
        (Th, X, el(n, &[(qi.clone(), &[X, Th])])),
        (X, Dx, el(n, &[(qb.clone(), &[Dx, X])])),
        (X, Dth, el(n, &[(q11.clone(), &[Dth, X]), (q12.clone(), &[Dx, Th])])),
        (Th, Dx, el(n, &[(q21.clone(), &[Dx, Th]), (q22.clone(), &[Dth, X])])),
        (Th, Dth, el(n, &[(one.clone(), &[Dth, Th])])),
        (Dth, Dx, el(n, &[(qpi.clone(), &[Dx, Dth])])),
        (D, Dx, el(n, &[(m1.clone(), &[Dx, D])])),
        (D, Dth, el(n, &[(one.clone(), &[Dth, D])])),
        (D, X, el(n, &[(one.clone(), &[Dx]), (one.clone(), &[X, D])])),
        (D, Th, el(n, &[(one.clone(), &[Dth]), (m1.clone(), &[Th, D])])),
        (
            Px,
            Dx,
            el(
                n,
                &[
                    (qbi.clone(), &[Dx, Px]),
                    (neg(&(&one + &(&qpi * &q21i))), &[Dth, Pth]),
                ],
            ),
        ),
        (Px, Dth, el(n, &[(q11i.clone(), &[Dth, Px])])),
        (
            Px,
            X,
            el(
                n,
                &[(one.clone(), &[]), (qb.clone(), &[X, Px]), (q12.clone(), &[Th, Pth])],
            ),
        ),
        (Px, Th, el(n, &[(neg(q21), &[Th, Px])])),
        (Px, D, el(n, &[(qbi.clone(), &[D, Px])])),
        (Pth, Dx, el(n, &[(q21i.clone(), &[Dx, Pth])])),
        (
            Pth,
            Dth,
            el(
                n,
                &[
                    (one.clone(), &[Dth, Pth]),
                    (&one - &(qp * &q11i), &[Dx, Px]),
                ],
            ),
        ),
        (Pth, X, el(n, &[(q11.clone(), &[X, Pth])])),
        (
            Pth,
            Th,
            el(
                n,
                &[(one.clone(), &[]), (m1.clone(), &[Th, Pth]), (neg(q22), &[X, Px])],
            ),
        ),
        (Pth, D, el(n, &[(neg(&qbi), &[D, Pth])])),
        (Pth, Px, el(n, &[(qpi.clone(), &[Px, Pth])])),
        (
            Ix,
            Dx,
            el(
                n,
                &[
                    (one.clone(), &[]),
                    (m1.clone(), &[Dx, Ix]),
                    (neg(&(&qbi * q12)), &[Dth, Ith]),
                ],
            ),
        ),
        (Ix, Dth, el(n, &[(neg(&(&qbi * q21)), &[Dth, Ix])])),
        (Ix, X, el(n, &[(qb.clone(), &[X, Ix]), (q12.clone(), &[Th, Ith])])),
        (Ix, Th, el(n, &[(q21.clone(), &[Th, Ix])])),
        (Ix, D, el(n, &[(one.clone(), &[Px]), (neg(&qbi), &[D, Ix])])),
        (Ix, Px, el(n, &[(qbi.clone(), &[Px, Ix])])),
        (
            Ix,
            Pth,
            el(
                n,
                &[
                    (q21i.clone(), &[Pth, Ix]),
                    (neg(&(&(&q11i * &q21i) * q12)), &[Px, Ith]),
                ],
            ),
        ),
        (Ith, Dx, el(n, &[(&qbi * q11, &[Dx, Ith])])),
        (
            Ith,
            Dth,
            el(
                n,
                &[
                    (one.clone(), &[]),
                    (qbi.clone(), &[Dth, Ith]),
                    (&qbi * q22, &[Dx, Ix]),
                ],
            ),
        ),
        (Ith, X, el(n, &[(q11.clone(), &[X, Ith])])),
        (Ith, Th, el(n, &[(one.clone(), &[Th, Ith]), (q22.clone(), &[X, Ix])])),
        (Ith, D, el(n, &[(one.clone(), &[Pth]), (qbi.clone(), &[D, Ith])])),
        (
            Ith,
            Px,
            el(
                n,
                &[
                    (q11i.clone(), &[Px, Ith]),
                    (neg(&(&(&q11i * &q21i) * q22)), &[Pth, Ix]),
                ],
            ),
        ),
        (Ith, Pth, el(n, &[(one.clone(), &[Pth, Ith])])),
        (Ith, Ix, el(n, &[(ith_ix, &[Ix, Ith])])),
    ];
    Ok(rules
        .into_iter()
        .map(|(a, b, e)| ((Letter::Gen(a), Letter::Gen(b)), e))
        .collect())
}

/// Order in which the `x^-1` rules are derived; each step only needs
/// rules produced earlier.
const INVERSE_ORDER: [(Letter, Letter); 8] = [
    (Letter::Gen(Th), Letter::XInv),
    (Letter::XInv, Letter::Gen(Dx)),
    (Letter::XInv, Letter::Gen(Dth)),
    (Letter::Gen(Pth), Letter::XInv),
    (Letter::Gen(Ith), Letter::XInv),
    (Letter::Gen(D), Letter::XInv),
    (Letter::Gen(Px), Letter::XInv),
    (Letter::Gen(Ix), Letter::XInv),
];

/// From `a x = c x a + R` derives `a x^-1 = c^-1 (x^-1 a - x^-1 R x^-1)`;
/// from `x b = c b x + R` derives `x^-1 b = c^-1 (b x^-1 - x^-1 R x^-1)`.
fn derive_inverse_rule(
    table: &RuleTable,
    key: (Letter, Letter),
) -> Result<Element, AlgebraError> {
    let n = table.nvars();
    let (other, base) = match key {
        (a, Letter::XInv) => (a, table.rule(a, Letter::X)),
        (Letter::XInv, b) => (b, table.rule(Letter::X, b)),
        _ => unreachable!("inverse rules involve x^-1"),
    };
    let base = base.ok_or_else(|| AlgebraError::MissingRule(format!("{other} with x")))?;
    // Both `x a` and `b x` are the monomial with x and the other letter once.
    let mut exps = [0; 9];
    exps[other.generator().index()] = 1;
    exps[X.index()] = 1;
    let swapped = Monomial::from_exps(exps).expect("x with one generator");
    let c = base.coeff(&swapped);
    let ci = c.inv().map_err(|_| {
        AlgebraError::NonInvertibleRule(format!("{} * {} has no leading swap term", key.0, key.1))
    })?;
    let rest = base.sub(&Element::term(swapped, c));
    let xi = table.letter(Letter::XInv);
    let sandwiched = table.product(&[xi.clone(), rest, xi])?;
    exps[X.index()] = -1;
    let lead = Element::monomial(n, Monomial::from_exps(exps).expect("x^-1 with one generator"));
    Ok(lead.sub(&sandwiched).scale(&ci))
}

/// Checks `rule(a, x^-1) * x == a` and `x * rule(x^-1, b) == b`.
pub fn round_trip_failures(table: &RuleTable) -> Result<Vec<String>, AlgebraError> {
    let x = table.letter(Letter::X);
    let mut bad = Vec::new();
    for key in INVERSE_ORDER {
        let rhs = table
            .rule(key.0, key.1)
            .ok_or_else(|| AlgebraError::MissingRule(format!("{} * {}", key.0, key.1)))?;
        let (back, expected) = match key {
            (a, Letter::XInv) => (table.multiply(rhs, &x)?, table.normalize_word(&[a])?),
            (_, b) => (table.multiply(&x, rhs)?, table.normalize_word(&[b])?),
        };
        if back != expected {
            bad.push(format!("{} * {}", key.0, key.1));
        }
    }
    Ok(bad)
}

/// Builds and validates the full rule table of `ct`.
pub fn build_rule_table(ct: &CalculusType) -> Result<RuleTable, AlgebraError> {
    let mut table = RuleTable::from_rules(ct.params().clone(), base_rules(ct)?);
    for key in INVERSE_ORDER {
        let rhs = derive_inverse_rule(&table, key)?;
        table.insert_rule(key.0, key.1, rhs);
    }
    let bad = round_trip_failures(&table)?;
    if !bad.is_empty() {
        return Err(AlgebraError::InconsistentType(format!(
            "inverse rules fail the round trip: {}",
            bad.join(", ")
        )));
    }
    Ok(table)
}
