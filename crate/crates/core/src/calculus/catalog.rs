//! The identity catalog and its verifier.
//!
//! Relations are stored as pairs of expressions and checked at word level
//! (normal form of `lhs - rhs`). Identities involving closed forms in the
//! exponent `m` are checked for every `|m| <= bound`, and those stated as
//! actions on functions are checked on the whole action basis.

use std::time::Instant;

use super::{Calculus, CalculusError};
use crate::algebra::{CalculusType, Element, Generator, Monomial};
use crate::coeffs::qnumber;
use crate::Rf;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    WordLevel,
    ActionLevel,
}

impl IdentityKind {
    pub fn label(self) -> &'static str {
        match self {
            IdentityKind::WordLevel => "word-level",
            IdentityKind::ActionLevel => "action-level",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

/// Outcome of one catalog check. `residual` is the canonical text of the
/// first nonzero residual found, or `"0"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyResult {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub residual: String,
    pub elapsed_millis: u64,
    pub known_discrepancy: bool,
}

type Pair = (Element, Element);
type CheckResult = Result<Option<String>, CalculusError>;

#[derive(Clone, Copy)]
pub(crate) enum Check {
    /// `lhs == rhs` as normal-ordered elements.
    Relation(&'static str, &'static str),
    /// A coefficient that must vanish.
    Scalar(fn(&CalculusType) -> Rf),
    /// A relation indexed by an exponent `m`, for `|m| <= bound`.
    Family(fn(&Calculus, i32) -> Result<Pair, CalculusError>),
    /// Both sides are functions of a basis element of the function/form
    /// sector.
    Action(fn(&Calculus, &Element) -> Result<Pair, CalculusError>),
    /// Arbitrary check returning the first residual.
    Custom(fn(&Calculus, i32) -> CheckResult),
}

/// A catalog entry. `applies` restricts entries to types where the
/// underlying structure exists.
#[derive(Clone, Copy)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub anchor: &'static str,
    pub kind: IdentityKind,
    pub(crate) check: Check,
    pub(crate) applies: fn(&CalculusType) -> bool,
    /// Printed form that is expected to fail; reported but not counted.
    pub known_discrepancy: bool,
}

impl std::fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("kind", &self.kind)
            .field("known_discrepancy", &self.known_discrepancy)
            .finish()
    }
}

impl IdentitySpec {
    pub fn applies_to(&self, ct: &CalculusType) -> bool {
        (self.applies)(ct)
    }
}

pub(crate) const fn known(spec: IdentitySpec) -> IdentitySpec {
    IdentitySpec {
        known_discrepancy: true,
        ..spec
    }
}

fn always(_: &CalculusType) -> bool {
    true
}

const fn rel(
    id: &'static str,
    anchor: &'static str,
    lhs: &'static str,
    rhs: &'static str,
) -> IdentitySpec {
    IdentitySpec {
        id,
        anchor,
        kind: IdentityKind::WordLevel,
        check: Check::Relation(lhs, rhs),
        applies: always,
        known_discrepancy: false,
    }
}

const fn scalar(id: &'static str, anchor: &'static str, f: fn(&CalculusType) -> Rf) -> IdentitySpec {
    IdentitySpec {
        id,
        anchor,
        kind: IdentityKind::WordLevel,
        check: Check::Scalar(f),
        applies: always,
        known_discrepancy: false,
    }
}

const fn family(
    id: &'static str,
    anchor: &'static str,
    f: fn(&Calculus, i32) -> Result<Pair, CalculusError>,
) -> IdentitySpec {
    IdentitySpec {
        id,
        anchor,
        kind: IdentityKind::WordLevel,
        check: Check::Family(f),
        applies: always,
        known_discrepancy: false,
    }
}

const fn action(
    id: &'static str,
    anchor: &'static str,
    f: fn(&Calculus, &Element) -> Result<Pair, CalculusError>,
) -> IdentitySpec {
    IdentitySpec {
        id,
        anchor,
        kind: IdentityKind::ActionLevel,
        check: Check::Action(f),
        applies: always,
        known_discrepancy: false,
    }
}

pub(crate) const fn custom(
    id: &'static str,
    anchor: &'static str,
    kind: IdentityKind,
    f: fn(&Calculus, i32) -> CheckResult,
    applies: fn(&CalculusType) -> bool,
) -> IdentitySpec {
    IdentitySpec {
        id,
        anchor,
        kind,
        check: Check::Custom(f),
        applies,
        known_discrepancy: false,
    }
}

fn p(calc: &Calculus, text: &str) -> Result<Element, CalculusError> {
    Ok(calc.parse(text)?)
}

fn scaled(calc: &Calculus, c: Rf, text: &str) -> Result<Element, CalculusError> {
    Ok(p(calc, text)?.scale(&c))
}

fn qpow(c: &Rf, m: i32) -> Result<Rf, CalculusError> {
    Ok(c.pow(i64::from(m)).map_err(crate::algebra::AlgebraError::from)?)
}

fn h_on_xm(calc: &Calculus, m: i32) -> Result<Pair, CalculusError> {
    let q = &calc.ct().q_big;
    let lhs = p(calc, &format!("H*x^{m}"))?;
    let rhs = scaled(calc, qnumber(m.into(), q), &format!("x^{m}"))?
        .add(&scaled(calc, qpow(q, m)?, &format!("x^{m}*H"))?);
    Ok((lhs, rhs))
}

fn h_on_xmth(calc: &Calculus, m: i32) -> Result<Pair, CalculusError> {
    let q = &calc.ct().q_big;
    let lhs = p(calc, &format!("H*x^{m}*th"))?;
    let rhs = scaled(calc, qnumber(i64::from(m) + 1, q), &format!("x^{m}*th"))?
        .add(&scaled(calc, qpow(q, m + 1)?, &format!("x^{m}*th*H"))?);
    Ok((lhs, rhs))
}

/// `Nb x^m th = Q11^m x^(m+1) - Q11^(m+1) x^m th Nb - c x^(m+1) H`.
fn nabla_on_xmth(calc: &Calculus, m: i32, c: Rf) -> Result<Pair, CalculusError> {
    let ct = calc.ct();
    let lhs = p(calc, &format!("Nb*x^{m}*th"))?;
    let rhs = scaled(calc, qpow(&ct.q11, m)?, &format!("x^{}", m + 1))?
        .sub(&scaled(calc, qpow(&ct.q11, m + 1)?, &format!("x^{m}*th*Nb"))?)
        .sub(&scaled(calc, c, &format!("x^{}*H", m + 1))?);
    Ok((lhs, rhs))
}

fn nabla_printed(calc: &Calculus, m: i32) -> Result<Pair, CalculusError> {
    let ct = calc.ct();
    nabla_on_xmth(calc, m, &ct.q11 * &ct.q22)
}

fn nabla_corrected(calc: &Calculus, m: i32) -> Result<Pair, CalculusError> {
    let ct = calc.ct();
    nabla_on_xmth(calc, m, &qpow(&ct.q11, m)? * &ct.q22)
}

/// `x^m th wx = -Q^(m+1) wx x^m th + c^m Q22 wth x^(m+1)`.
fn xmth_omega_x(calc: &Calculus, m: i32, c: &Rf) -> Result<Pair, CalculusError> {
    let ct = calc.ct();
    let lhs = p(calc, &format!("x^{m}*th*wx"))?;
    let rhs = scaled(calc, -&qpow(&ct.q_big, m + 1)?, &format!("wx*x^{m}*th"))?.add(&scaled(
        calc,
        &qpow(c, m)? * &ct.q22,
        &format!("wth*x^{}", m + 1),
    )?);
    Ok((lhs, rhs))
}

fn xmth_omega_th(calc: &Calculus, m: i32) -> Result<Pair, CalculusError> {
    let ct = calc.ct();
    let lhs = p(calc, &format!("x^{m}*th*wth"))?;
    let rhs = scaled(calc, qpow(&ct.q11, m + 1)?, &format!("wth*x^{m}*th"))?;
    Ok((lhs, rhs))
}

fn d_decomposition(calc: &Calculus, f: &Element) -> Result<Pair, CalculusError> {
    let lhs = calc.exterior_derivative(f)?;
    let rhs = calc.act(&p(calc, "dx*px + dth*pth")?, f)?;
    Ok((lhs, rhs))
}

fn d_squared(calc: &Calculus, f: &Element) -> Result<Pair, CalculusError> {
    let df = calc.exterior_derivative(f)?;
    Ok((calc.exterior_derivative(&df)?, Element::zero(calc.nvars())))
}

/// `H` acts on `x^m th^eps` (times `dth^b`) as `[m + eps]`.
fn h_number_operator(calc: &Calculus, f: &Element) -> Result<Pair, CalculusError> {
    let (m, _) = f.terms().next().expect("basis element");
    let n = super::number_op(m.exp(Generator::X).into(), m.exp(Generator::Th).into());
    let lhs = calc.act(calc.derived(super::DerivedSymbol::H), f)?;
    Ok((lhs, f.scale(&qnumber(n, &calc.ct().q_big))))
}

fn eq45_first(ct: &CalculusType) -> Rf {
    ct.vector_field_residuals().map_or_else(|_| ct.one(), |r| r[0].clone())
}

fn eq45_all(ct: &CalculusType) -> Rf {
    // Sum of squares would hide nothing over Q(q, r); the first nonzero
    // residual is reported instead.
    match ct.vector_field_residuals() {
        Ok(rs) => rs.into_iter().find(|r| !r.is_zero()).unwrap_or_else(|| Rf::zero(ct.nvars())),
        Err(_) => eq45_first(ct),
    }
}

fn eq18_all(ct: &CalculusType) -> Rf {
    ct.covariance_residuals()
        .into_iter()
        .find(|r| !r.is_zero())
        .unwrap_or_else(|| Rf::zero(ct.nvars()))
}

/// Every catalog entry, in report order.
pub fn identity_catalog() -> Vec<IdentitySpec> {
    let mut out = vec![
        rel("eq28-x-omegax", "Eq. 28", "x*wx", "Q*wx*x"),
        rel("eq28-x-omegath", "Eq. 28", "x*wth", "Q11*wth*x"),
        rel("eq28-th-omegax", "Eq. 28", "th*wx", "-Q*wx*th + Q22*wth*x"),
        rel("eq28-th-omegath", "Eq. 28", "th*wth", "Q11*wth*th"),
        rel("eq29-omega-commute", "Eq. 29", "wx*wth", "wth*wx"),
        rel("eq29-omegax-square", "Eq. 29", "wx*wx", "0"),
        action("eq33-d-decomposition", "Eq. 33", d_decomposition),
        rel("eq33-d-leibniz-x", "Eq. 33", "d*x", "dx + x*d"),
        rel("eq33-d-leibniz-th", "Eq. 33", "d*th", "dth - th*d"),
        rel("eq34-px-x", "Eq. 34", "px*x", "1 + Q*x*px + Q12*th*pth"),
        rel("eq34-pth-th", "Eq. 34", "pth*th", "1 - th*pth - Q22*x*px"),
        rel("eq35-partials-commute", "Eq. 35", "px*pth", "Qp*pth*px"),
        rel("eq35-pth-square", "Eq. 35", "pth*pth", "0"),
        rel("eq37-px-dsum", "Eq. 37", "px*d", "Q^-1*d*px"),
        rel("eq37-pth-dsum", "Eq. 37", "pth*d", "-Q^-1*d*pth"),
        action("eq40-d-omega", "Eq. 40", |calc, f| {
            // w_x is odd and w_th even, so d(w f) = -w_x df, resp. w_th df.
            let df = calc.exterior_derivative(f)?;
            let wx = calc.derived(super::DerivedSymbol::OmegaX);
            let wth = calc.derived(super::DerivedSymbol::OmegaTheta);
            let dwx = calc.exterior_derivative(&calc.multiply(wx, f)?)?;
            let dwth = calc.exterior_derivative(&calc.multiply(wth, f)?)?;
            let t = calc.letter(Generator::Dth);
            let lhs = dwx.add(&calc.multiply(&t, &dwth)?);
            let rhs = calc.multiply(wx, &df)?.neg().add(&calc.multiply(&t, &calc.multiply(wth, &df)?)?);
            Ok((lhs, rhs))
        }),
        action("d2-action", "Eq. 37", d_squared),
        rel("eq41-Hnabla", "Eq. 41", "H*Nb", "Nb*H"),
        rel("eq41-nabla-square", "Eq. 41", "Nb*Nb", "0"),
        rel("eq42-H-x", "Eq. 42", "H*x", "x + Q*x*H"),
        rel("eq42-H-th", "Eq. 42", "H*th", "th + Q*th*H"),
        rel("eq42-nabla-x", "Eq. 42", "Nb*x", "Q11*x*Nb"),
        rel("eq42-nabla-th", "Eq. 42", "Nb*th", "x - Q11*th*Nb - Q22*x*H"),
        rel("eq44-H-dx", "Eq. 44", "H*dx", "dx*H"),
        rel("eq44-H-dth", "Eq. 44", "H*dth", "dth*H"),
        rel("eq44-nabla-dx", "Eq. 44", "Nb*dx", "Q*Q21^-1*dx*Nb"),
        rel("eq44-nabla-dth", "Eq. 44", "Nb*dth", "Q11*dth*Nb + Q12*dx*H"),
        scalar("eq45-identities", "Eq. 45", eq45_all),
        rel("eq46-H-omegax", "Eq. 46", "H*wx", "-Q^-1*wx + Q^-1*wx*H"),
        rel("eq46-H-omegath", "Eq. 46", "H*wth", "-Q^-1*wth + Q^-1*wth*H"),
        rel("eq46-nabla-omegax", "Eq. 46", "Nb*wx", "-wx*Nb"),
        known(rel(
            "eq46-nabla-omegath-as-printed",
            "Eq. 46",
            "Nb*wth",
            "Q^-1*wx + wth*Nb + (Q - 1)*wx*H",
        )),
        rel(
            "eq46-nabla-omegath-corrected",
            "Eq. 46",
            "Nb*wth",
            "Q^-1*wx + wth*Nb + (1 - Q^-1)*wx*H",
        ),
        rel("eq48-T-omegax", "Eq. 48", "T*wx", "Q^-1*wx*T"),
        rel("eq48-T-omegath", "Eq. 48", "T*wth", "Q^-1*wth*T"),
        rel("eq48-nabla-omegath", "Eq. 48", "Nb*wth", "wth*Nb + Q^-1*wx*T"),
        scalar("eq49-identity", "Eq. 49", CalculusType::t_identity_residual),
        rel("eq50-px-H", "Eq. 50", "px*H", "px + Q*H*px"),
        rel("eq50-pth-H", "Eq. 50", "pth*H", "pth + Q*H*pth"),
        rel("eq50-px-nabla", "Eq. 50", "px*Nb", "pth + Q*Qp*Nb*px"),
        rel("eq50-pth-nabla", "Eq. 50", "pth*Nb", "-Nb*pth"),
        known(scalar("eq51-first-as-printed", "Eq. 51", |ct| {
            ct.partial_identity_residual(&ct.one())
        })),
        scalar("eq51-first-corrected", "Eq. 51", |ct| {
            ct.partial_identity_residual(&ct.q_big)
        }),
        scalar("eq51-second", "Eq. 51", CalculusType::partial_identity_second),
        family("eq52-H-xm", "Eq. 52", h_on_xm),
        family("eq53-H-xmth", "Eq. 53", h_on_xmth),
        action("eq54-H-number-operator", "Eq. 54", h_number_operator),
        known(family("eq56-nabla-xmth-as-printed", "Eq. 56", nabla_printed)),
        family("eq56-nabla-xmth-corrected", "Eq. 56", nabla_corrected),
        known(family("eq58-xmth-omegax-as-printed", "Eq. 58", |c, m| {
            xmth_omega_x(c, m, &c.ct().q_big)
        })),
        family("eq58-xmth-omegax-corrected", "Eq. 58", |c, m| {
            xmth_omega_x(c, m, &c.ct().q11)
        }),
        family("eq58-xmth-omegath", "Eq. 58", xmth_omega_th),
        rel(
            "eq93-Lx-x",
            "Eq. 93",
            "Lx*x",
            "1 + Q*x*Lx + Q12*th*Lth + (Q - 1)*(dx*ix + Q^-1*Q12*dth*ith)",
        ),
        rel("eq94-Lx-th", "Eq. 94", "Lx*th", "-Q21*th*Lx + Q21*(1 - Q^-1)*dth*ix"),
        rel("eq94-Lth-x", "Eq. 94", "Lth*x", "Q11*x*Lth + Q11*(Q^-1 - 1)*dx*ith"),
        known(rel(
            "eq94-Lth-th-as-printed",
            "Eq. 94",
            "Lth*th",
            "1 - th*Lth - Q22*x*Lx - Q22*((Q*Qp)^-1 - 1)*dx*ix + (Q^-1 - 1)*dth*ith",
        )),
        rel(
            "eq94-Lth-th-corrected",
            "Eq. 94",
            "Lth*th",
            "1 - th*Lth - Q22*x*Lx + Q22*(Q^-1 - 1)*dx*ix + (Q^-1 - 1)*dth*ith",
        ),
        rel("eq95-Lx-dx", "Eq. 95", "Lx*dx", "dx*Lx + Q^-1*Q12*dth*Lth"),
        rel("eq95-Lx-dth", "Eq. 95", "Lx*dth", "-Q^-1*Q21*dth*Lx"),
        rel("eq95-Lth-dx", "Eq. 95", "Lth*dx", "-Q^-1*Q11*dx*Lth"),
        known(rel(
            "eq95-Lth-dth-as-printed",
            "Eq. 95",
            "Lth*dth",
            "Q^-1*dth*Lth + (Q*Qp)^-1*Q22*dx*Lx",
        )),
        rel(
            "eq95-Lth-dth-corrected",
            "Eq. 95",
            "Lth*dth",
            "Q^-1*dth*Lth + Q^-1*Q22*dx*Lx",
        ),
        rel("eq96-Lx-px", "Eq. 96", "Lx*px", "px*Lx"),
        rel(
            "eq96-Lx-pth",
            "Eq. 96",
            "Lx*pth",
            "-Q*Q21^-1*pth*Lx + Q*(Q11*Q21)^-1*Q12*px*Lth",
        ),
        rel(
            "eq96-Lth-px",
            "Eq. 96",
            "Lth*px",
            "Q*Q11^-1*px*Lth - Q*(Q11*Q21)^-1*Q22*pth*Lx",
        ),
        rel("eq96-Lth-pth", "Eq. 96", "Lth*pth", "-Q*pth*Lth"),
        rel("eq97-innersquare", "Eq. 97", "ix*ith", "-Q11*(Q12 - Q)^-1*ith*ix"),
        rel("eq97-ix-square", "Eq. 97", "ix*ix", "0"),
        rel("eq98-Lx-ix", "Eq. 98", "Lx*ix", "ix*Lx"),
        rel(
            "eq98-Lx-ith",
            "Eq. 98",
            "Lx*ith",
            "-Q*Q21^-1*ith*Lx + Q12*(Q - Q12)^-1*ix*Lth",
        ),
        rel(
            "eq98-Lth-ix",
            "Eq. 98",
            "Lth*ix",
            "-Q*Q11^-1*ix*Lth - (Qp*Q21)^-1*Q*Q22*ith*Lx",
        ),
        known(rel("eq98-Lth-ith-as-printed", "Eq. 98", "Lth*ith", "Q^-1*ith*Lth")),
        rel("eq98-Lth-ith-corrected", "Eq. 98", "Lth*ith", "Q*ith*Lth"),
        rel("eq99-Lx-Lth", "Eq. 99", "Lx*Lth", "Q21^-1*(Q12 - Q)*Lth*Lx"),
        rel("eq99-Lth-square", "Eq. 99", "Lth*Lth", "0"),
        rel("eq100-lie-as-partial", "Eq. 100", "Lx", "px + (1 - Q^-1)*d*ix"),
        rel("eq100-lie-theta-as-partial", "Eq. 100", "Lth", "pth - (1 - Q^-1)*d*ith"),
        rel(
            "eq101-lie-as-vector-fields",
            "Eq. 101",
            "Lx",
            "xi*H - xi*th*xi*Nb + (1 - Q^-1)*d*ix",
        ),
        rel(
            "eq101-lie-theta-as-vector-fields",
            "Eq. 101",
            "Lth",
            "xi*Nb - (1 - Q^-1)*d*ith",
        ),
        scalar("eq18-constraints", "Eq. 18", eq18_all),
    ];
    out.extend(crate::hopf::catalog_entries());
    out.extend(crate::covariance::catalog_entries());
    out
}

fn residual_text(calc: &Calculus, lhs: &Element, rhs: &Element) -> Option<String> {
    let r = lhs.sub(rhs);
    (!r.is_zero()).then(|| calc.text(&r))
}

fn run_check(spec: &IdentitySpec, calc: &Calculus, bound: i32) -> CheckResult {
    match spec.check {
        Check::Relation(lhs, rhs) => Ok(residual_text(calc, &p(calc, lhs)?, &p(calc, rhs)?)),
        Check::Scalar(f) => {
            let r = f(calc.ct());
            Ok((!r.is_zero()).then(|| r.fmt_with(calc.names())))
        }
        Check::Family(f) => {
            for m in -bound..=bound {
                let (lhs, rhs) = f(calc, m)?;
                if let Some(r) = residual_text(calc, &lhs, &rhs) {
                    return Ok(Some(format!("m={m}: {r}")));
                }
            }
            Ok(None)
        }
        Check::Action(f) => {
            for m in Calculus::action_basis(bound) {
                let basis = Element::monomial(calc.nvars(), m);
                let (lhs, rhs) = f(calc, &basis)?;
                if let Some(r) = residual_text(calc, &lhs, &rhs) {
                    return Ok(Some(format!("on {}: {r}", Monomial::text(&m))));
                }
            }
            Ok(None)
        }
        Check::Custom(f) => f(calc, bound),
    }
}

/// Runs a single catalog entry with basis bound `bound`.
pub fn verify_identity(id: &str, calc: &Calculus, bound: i32) -> Result<VerifyResult, CalculusError> {
    let spec = identity_catalog()
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| CalculusError::UnknownIdentity(id.to_owned()))?;
    if !spec.applies_to(calc.ct()) {
        return Err(CalculusError::NotApplicable(id.to_owned()));
    }
    run_spec(&spec, calc, bound)
}

fn run_spec(spec: &IdentitySpec, calc: &Calculus, bound: i32) -> Result<VerifyResult, CalculusError> {
    let start = Instant::now();
    let residual = run_check(spec, calc, bound)?;
    Ok(VerifyResult {
        id: spec.id.to_owned(),
        anchor: spec.anchor.to_owned(),
        status: if residual.is_none() { Status::Pass } else { Status::Fail },
        residual: residual.unwrap_or_else(|| "0".to_owned()),
        elapsed_millis: start.elapsed().as_millis() as u64,
        known_discrepancy: spec.known_discrepancy,
    })
}

/// Runs every entry that applies to the calculus type.
pub fn verify_all(calc: &Calculus, bound: i32) -> Result<Vec<VerifyResult>, CalculusError> {
    identity_catalog()
        .iter()
        .filter(|s| s.applies_to(calc.ct()))
        .map(|s| run_spec(s, calc, bound))
        .collect()
}
