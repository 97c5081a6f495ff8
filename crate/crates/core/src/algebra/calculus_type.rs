use std::collections::BTreeMap;

use super::AlgebraError;
use crate::coeffs::{CoeffError, Mode, ParamSet};
use crate::{Rational, Rf};

/// The commutation coefficients of one bicovariant calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CalculusType {
    params: ParamSet,
    /// Value of the base parameter `q`; a variable unless specialised.
    q: Rf,
    pub q_big: Rf,
    pub q11: Rf,
    pub q12: Rf,
    pub q21: Rf,
    pub q22: Rf,
    pub q_prime: Rf,
}

impl CalculusType {
    /// Validates the covariance and consistency identities.
    pub fn new(
        params: ParamSet,
        q_big: Rf,
        q11: Rf,
        q12: Rf,
        q21: Rf,
        q22: Rf,
        q_prime: Rf,
    ) -> Result<Self, AlgebraError> {
        let ct = CalculusType {
            q: Rf::var(params.len(), 0),
            params,
            q_big,
            q11,
            q12,
            q21,
            q22,
            q_prime,
        };
        ct.validate()?;
        Ok(ct)
    }

    pub fn for_mode(mode: Mode) -> Self {
        match mode {
            Mode::TypeI => Self::type_i(),
            Mode::TypeII => Self::type_ii(),
            Mode::TypeIII => Self::type_iii(),
            Mode::Custom => panic!("custom rings have no calculus type"),
        }
    }

    pub fn type_i() -> Self {
        let ps = ParamSet::for_mode(Mode::TypeI);
        let q = Rf::var(1, 0);
        let qi = q.inv().expect("q is nonzero");
        Self::new(
            ps,
            Rf::one(1),
            q.clone(),
            Rf::zero(1),
            -&qi,
            Rf::zero(1),
            q,
        )
        .expect("type I is consistent")
    }

    pub fn type_ii() -> Self {
        let ps = ParamSet::for_mode(Mode::TypeII);
        let q = Rf::var(2, 0);
        let r = Rf::var(2, 1);
        let one = Rf::one(2);
        let qi = q.inv().expect("q is nonzero");
        let ri = r.inv().expect("r is nonzero");
        Self::new(
            ps,
            r.clone(),
            q.clone(),
            &r - &one,
            -&(&qi * &r),
            Rf::zero(2),
            &q * &ri,
        )
        .expect("type II is consistent")
    }

    pub fn type_iii() -> Self {
        let ps = ParamSet::for_mode(Mode::TypeIII);
        let q = Rf::var(2, 0);
        let p = Rf::var(2, 1);
        let one = Rf::one(2);
        let qi = q.inv().expect("q is nonzero");
        Self::new(
            ps,
            p.clone(),
            &p * &q,
            Rf::zero(2),
            -&qi,
            &one - &p,
            &p * &q,
        )
        .expect("type III is consistent")
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

    pub fn mode(&self) -> Mode {
        self.params.mode()
    }

    /// The base deformation parameter `q`.
    pub fn q(&self) -> Rf {
        self.q.clone()
    }

    pub fn one(&self) -> Rf {
        Rf::one(self.nvars())
    }

    pub fn int(&self, n: i64) -> Rf {
        Rf::int(self.nvars(), n)
    }

    /// The four covariance constraints; all vanish for a valid type.
    pub fn covariance_residuals(&self) -> [Rf; 4] {
        let q = self.q();
        let one = self.one();
        [
            &(&self.q11 + &(&q * &self.q12)) - &(&q * &self.q_big),
            &(&self.q11 + &(&q * &self.q22)) - &q,
            &(&self.q12 + &(&q * &self.q21)) + &one,
            &(&(&q * &self.q21) + &self.q22) + &self.q_big,
        ]
    }

    /// The five coefficient identities used for the vector-field relations.
    pub fn vector_field_residuals(&self) -> Result<[Rf; 5], CoeffError> {
        let qpi = self.q_prime.inv()?;
        let one = self.one();
        Ok([
            &(&self.q22 - &(&self.q11 * &self.q21)) - &(&self.q11 * &qpi),
            &self.q12 + &(&self.q21 * &(&self.q11 - &self.q_prime)),
            &(&self.q_big * &(&self.q11 - &self.q_prime)) - &(&self.q11 * &self.q12),
            &self.q12 * &(&one + &(&self.q_prime * &self.q21)),
            &self.q22 * &(&self.q11 - &self.q_prime),
        ])
    }

    /// `Q12 - Q22 - (Q - 1)`.
    pub fn t_identity_residual(&self) -> Rf {
        &(&self.q12 - &self.q22) - &(&self.q_big - &self.one())
    }

    /// `Q12 - Q' Q21 - rhs` for the partial-derivative relations.
    pub fn partial_identity_residual(&self, rhs: &Rf) -> Rf {
        &(&self.q12 - &(&self.q_prime * &self.q21)) - rhs
    }

    /// `Q11 - Q'(Q + Q22)`.
    pub fn partial_identity_second(&self) -> Rf {
        &self.q11 - &(&self.q_prime * &(&self.q_big + &self.q22))
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        let mut bad = Vec::new();
        for (i, r) in self.covariance_residuals().iter().enumerate() {
            if !r.is_zero() {
                bad.push(format!("covariance constraint {} = {}", i + 1, r.fmt_with(self.names())));
            }
        }
        match self.vector_field_residuals() {
            Ok(rs) => {
                for (i, r) in rs.iter().enumerate() {
                    if !r.is_zero() {
                        bad.push(format!("coefficient identity {} = {}", i + 1, r.fmt_with(self.names())));
                    }
                }
            }
            Err(_) => bad.push("Q' is zero".to_owned()),
        }
        let t = self.t_identity_residual();
        if !t.is_zero() {
            bad.push(format!("Q12 - Q22 - (Q - 1) = {}", t.fmt_with(self.names())));
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(AlgebraError::InconsistentType(bad.join("; ")))
        }
    }

    fn coefficients(&self) -> [&Rf; 6] {
        [
            &self.q_big,
            &self.q11,
            &self.q12,
            &self.q21,
            &self.q22,
            &self.q_prime,
        ]
    }

    /// Substitutes exact values for some parameters. The parameter set is
    /// kept so that printed output stays comparable across types.
    pub fn specialize(&self, assignment: &BTreeMap<String, Rational>) -> Result<Self, AlgebraError> {
        let names = self.names().to_vec();
        let sub = |c: &Rf| super::element::substitute_rf(c, &names, assignment);
        let [a, b, c, d, e, f] = self.coefficients();
        let ct = CalculusType {
            params: self.params.clone(),
            q: sub(&self.q)?,
            q_big: sub(a)?,
            q11: sub(b)?,
            q12: sub(c)?,
            q21: sub(d)?,
            q22: sub(e)?,
            q_prime: sub(f)?,
        };
        ct.validate()?;
        Ok(ct)
    }

    /// All six coefficients in the order `Q, Q11, Q12, Q21, Q22, Q'`.
    pub fn values(&self) -> [Rf; 6] {
        self.coefficients().map(Rf::clone)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn embed_i_into(target: &CalculusType) -> [Rf; 6] {
        CalculusType::type_i()
            .values()
            .map(|c| c.embed(target.nvars(), &[0]))
    }

    #[test]
    fn families_specialize_to_type_i() {
        let one = Rational::from_integer(1.into());
        for (ct, name) in [
            (CalculusType::type_ii(), "r"),
            (CalculusType::type_iii(), "p"),
        ] {
            let mut a = BTreeMap::new();
            a.insert(name.to_owned(), one.clone());
            let s = ct.specialize(&a).unwrap();
            assert_eq!(s.values(), embed_i_into(&ct));
        }
    }

    #[test]
    fn inconsistent_values_rejected() {
        let mut ct = CalculusType::type_ii();
        ct.q11 = ct.one();
        assert!(matches!(ct.validate(), Err(AlgebraError::InconsistentType(_))));
    }

    #[test]
    fn partial_identities() {
        // Q12 - Q'Q21 equals Q, not 1, for the two-parameter families.
        for ct in [CalculusType::type_ii(), CalculusType::type_iii()] {
            assert!(ct.partial_identity_residual(&ct.q_big).is_zero());
            assert!(ct.partial_identity_second().is_zero());
        }
    }
}
