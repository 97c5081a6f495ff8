//! Covariance constraints on the deformation coefficients, their linear
//! solution with side conditions, and the consistency systems of the
//! inner-derivation ansatz.

use std::fmt;

use super::coaction::{coact, coact_word, Deformation, Side};
use super::rewrite::{word_text, Combo, Rewriter, Sym};
use super::CovarianceError;
use crate::algebra::CalculusType;
use crate::coeffs::{Mode, ParamSet};
use crate::Rf;

/// The linearly solved coefficients; `Q'` is fixed afterwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unknown {
    Q,
    Q11,
    Q12,
    Q21,
    Q22,
}

impl Unknown {
    pub const ALL: [Unknown; 5] = [Unknown::Q, Unknown::Q11, Unknown::Q12, Unknown::Q21, Unknown::Q22];

    pub fn name(self) -> &'static str {
        match self {
            Unknown::Q => "Q",
            Unknown::Q11 => "Q11",
            Unknown::Q12 => "Q12",
            Unknown::Q21 => "Q21",
            Unknown::Q22 => "Q22",
        }
    }

    pub fn from_name(s: &str) -> Option<Unknown> {
        Unknown::ALL.into_iter().find(|u| u.name() == s)
    }

    /// Index of the variable in the symbolic deformation ring.
    fn var(self) -> usize {
        self as usize + 1
    }
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One coefficient of a coaction applied to a defining relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    /// Which relation and which tensor basis element produced it.
    pub origin: String,
    /// In the symbolic deformation ring.
    pub value: Rf,
}

/// The four relations between functions and differentials, as
/// `(lhs word, rhs terms)` with symbolic coefficients.
fn bimodule_relations(def: &Deformation) -> Vec<(Vec<Sym>, Combo)> {
    use Sym::{Dth, Dx, Th, X};
    let n = def.nvars();
    let combo = |parts: &[(&[Sym], &Rf)]| {
        let mut c = Combo::zero(n);
        for (w, k) in parts {
            c.add_term(w.to_vec(), (*k).clone());
        }
        c
    };
    let one = Rf::one(n);
    vec![
        (vec![X, Dx], combo(&[(&[Dx, X], &def.q_big)])),
        (vec![X, Dth], combo(&[(&[Dth, X], &def.q11), (&[Dx, Th], &def.q12)])),
        (vec![Th, Dx], combo(&[(&[Dx, Th], &def.q21), (&[Dth, X], &def.q22)])),
        (vec![Th, Dth], combo(&[(&[Dth, Th], &one)])),
    ]
}

/// Applies a coaction to each relation and collects the coefficients of
/// the residual on the normal tensor basis.
pub fn generate_covariance_constraints(side: Side) -> Result<Vec<Constraint>, CovarianceError> {
    let def = Deformation::symbolic();
    let rw = def.rewriter()?;
    let mut out = Vec::new();
    for (lhs, rhs) in bimodule_relations(&def) {
        let r = coact_word(&rw, side, &lhs).sub(&coact(&rw, side, &rhs));
        for (key, c) in r.terms() {
            let basis = key.iter().map(|w| word_text(w)).collect::<Vec<_>>().join(" (x) ");
            out.push(Constraint {
                origin: format!("{}: {basis}", word_text(&lhs)),
                value: c.clone(),
            });
        }
    }
    Ok(out)
}

/// The four covariance constraints in their reference form.
pub fn reference_constraints() -> Vec<Rf> {
    let d = Deformation::symbolic();
    let one = Rf::one(d.nvars());
    vec![
        &(&d.q11 + &(&d.q * &d.q12)) - &(&d.q * &d.q_big),
        &(&d.q11 + &(&d.q * &d.q22)) - &d.q,
        &(&d.q12 + &(&d.q * &d.q21)) + &one,
        &(&(&d.q * &d.q21) + &d.q22) + &d.q_big,
    ]
}

/// Writes a constraint linear in the unknowns as `[c0, c_Q, c_Q11, ...]`,
/// each coefficient a function of `q` alone, moved into a ring of `target`
/// variables where `q` is variable 0.
pub fn linear_form(value: &Rf, target: usize) -> Result<Vec<Rf>, CovarianceError> {
    let n = value.nvars();
    let at = |hot: Option<usize>| -> Result<Rf, CovarianceError> {
        let mut images = vec![Rf::zero(n); n];
        images[0] = Rf::var(n, 0);
        if let Some(i) = hot {
            images[i] = Rf::one(n);
        }
        Ok(value.compose(&images)?)
    };
    let c0 = at(None)?;
    let mut row = vec![c0.clone()];
    for u in Unknown::ALL {
        row.push(&at(Some(u.var()))? - &c0);
    }
    let mut rebuilt = c0;
    for (u, c) in Unknown::ALL.iter().zip(&row[1..]) {
        rebuilt = &rebuilt + &(c * &Rf::var(n, u.var()));
    }
    if rebuilt != *value {
        return Err(CovarianceError::NotLinear(value.fmt_with(&Deformation::symbolic().names)));
    }
    let mut images = vec![Rf::zero(target); n];
    images[0] = Rf::var(target, 0);
    row.iter().map(|c| Ok(c.compose(&images)?)).collect()
}

/// Row-reduces in place; returns the pivot column of each kept row.
fn row_reduce(rows: &mut [Vec<Rf>], cols: std::ops::Range<usize>) -> Result<Vec<usize>, CovarianceError> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][col].clone();
        let normalized: Vec<Rf> = rows[r]
            .iter()
            .map(|c| c.checked_div(&lead))
            .collect::<Result<_, _>>()?;
        rows[r] = normalized;
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pivot_row = rows[r].clone();
                for (c, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *c = &*c - &(&f * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    Ok(pivots)
}

fn rank(rows: &[Vec<Rf>]) -> Result<usize, CovarianceError> {
    let mut m = rows.to_vec();
    let width = m.first().map_or(0, Vec::len);
    Ok(row_reduce(&mut m, 0..width)?.len())
}

/// Whether two families of linear constraints cut out the same affine
/// subspace: equal ranks, and the rank does not grow when combined.
pub fn same_linear_span(a: &[Rf], b: &[Rf]) -> Result<bool, CovarianceError> {
    let ra: Vec<Vec<Rf>> = a.iter().map(|c| linear_form(c, 1)).collect::<Result<_, _>>()?;
    let rb: Vec<Vec<Rf>> = b.iter().map(|c| linear_form(c, 1)).collect::<Result<_, _>>()?;
    let both: Vec<Vec<Rf>> = ra.iter().chain(&rb).cloned().collect();
    let (ka, kb, kab) = (rank(&ra)?, rank(&rb)?, rank(&both)?);
    Ok(ka == kb && kb == kab)
}

/// Whether every constraint in `a` is a linear consequence of `b`.
pub fn implied_by(a: &[Rf], b: &[Rf]) -> Result<bool, CovarianceError> {
    let rb: Vec<Vec<Rf>> = b.iter().map(|c| linear_form(c, 1)).collect::<Result<_, _>>()?;
    let mut both = rb.clone();
    for c in a {
        both.push(linear_form(c, 1)?);
    }
    Ok(rank(&rb)? == rank(&both)?)
}

/// Solves the covariance constraints together with `side` conditions
/// `unknown = value`, values in the ring of `params` (with `q` first).
/// `Q'` is then fixed by `Q11 = Q'(Q + Q22)`.
pub fn solve_family(params: ParamSet, side: &[(Unknown, Rf)]) -> Result<CalculusType, CovarianceError> {
    let n = params.len();
    let mut rows: Vec<Vec<Rf>> = reference_constraints()
        .iter()
        .map(|c| linear_form(c, n))
        .collect::<Result<_, _>>()?;
    for (u, v) in side {
        let mut row = vec![Rf::zero(n); 6];
        row[0] = -v;
        row[u.var()] = Rf::one(n);
        rows.push(row);
    }
    let pivots = row_reduce(&mut rows, 1..6)?;
    if let Some(bad) = rows.iter().skip(pivots.len()).find(|row| !row[0].is_zero()) {
        return Err(CovarianceError::InconsistentSideConditions(format!(
            "0 = {}",
            bad[0].fmt_with(params.vars())
        )));
    }
    if pivots.len() < Unknown::ALL.len() {
        let free: Vec<&str> = Unknown::ALL
            .iter()
            .filter(|u| !pivots.contains(&u.var()))
            .map(|u| u.name())
            .collect();
        return Err(CovarianceError::UnderdeterminedSystem(free.join(", ")));
    }
    let value = |u: Unknown| {
        let i = pivots.iter().position(|&p| p == u.var()).expect("pivot exists");
        -&rows[i][0]
    };
    let (q_big, q11, q12, q21, q22) = (
        value(Unknown::Q),
        value(Unknown::Q11),
        value(Unknown::Q12),
        value(Unknown::Q21),
        value(Unknown::Q22),
    );
    let q_prime = q11.checked_div(&(&q_big + &q22))?;
    Ok(CalculusType::new(params, q_big, q11, q12, q21, q22, q_prime)?)
}

/// The side conditions that single out each family, and its ring.
pub fn family_side_conditions(mode: Mode) -> (ParamSet, Vec<(Unknown, Rf)>) {
    let ps = ParamSet::for_mode(mode);
    let n = ps.len();
    let side = match mode {
        Mode::TypeI => vec![(Unknown::Q12, Rf::zero(n)), (Unknown::Q22, Rf::zero(n))],
        Mode::TypeII => vec![(Unknown::Q22, Rf::zero(n)), (Unknown::Q, Rf::var(n, 1))],
        Mode::TypeIII => vec![(Unknown::Q12, Rf::zero(n)), (Unknown::Q, Rf::var(n, 1))],
        Mode::Custom => Vec::new(),
    };
    (ps, side)
}

/// Which ansatz system to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnsatzKind {
    /// Inner derivations past coordinates, with unknowns `A1..A8`.
    InnerCoordinate,
    /// Inner derivations past differentials, with unknowns `a1..a8`.
    InnerDifferential,
}

impl AnsatzKind {
    /// Variable names: the fixed parameter, then the eight unknowns.
    pub fn names(self) -> Vec<String> {
        let (first, stem) = match self {
            AnsatzKind::InnerCoordinate => ("q", "A"),
            AnsatzKind::InnerDifferential => ("Qp", "a"),
        };
        std::iter::once(first.to_owned())
            .chain((1..=8).map(|k| format!("{stem}{k}")))
            .collect()
    }

    fn rewriter(self) -> Result<Rewriter, CovarianceError> {
        use Sym::{Dth, Dx, Ith, Ix, Th, X};
        let n = 9;
        let a = |k: usize| Rf::var(n, k);
        let one = Rf::one(n);
        let base = Rf::var(n, 0);
        let mut rw = Rewriter::new(n);
        match self {
            AnsatzKind::InnerCoordinate => {
                rw.rule((Th, X), vec![(vec![X, Th], base.inv()?)]);
                rw.rule((Th, Th), Vec::new());
                rw.rule((Ix, X), vec![(vec![X, Ix], a(1)), (vec![Th, Ith], a(2))]);
                rw.rule((Ix, Th), vec![(vec![Th, Ix], a(3)), (vec![X, Ith], a(4))]);
                rw.rule((Ith, X), vec![(vec![X, Ith], a(5)), (vec![Th, Ix], a(6))]);
                rw.rule((Ith, Th), vec![(vec![Th, Ith], a(7)), (vec![X, Ix], a(8))]);
            }
            AnsatzKind::InnerDifferential => {
                rw.rule((Dth, Dx), vec![(vec![Dx, Dth], base.inv()?)]);
                rw.rule((Dx, Dx), Vec::new());
                rw.rule(
                    (Ix, Dx),
                    vec![(Vec::new(), one.clone()), (vec![Dx, Ix], a(1)), (vec![Dth, Ith], a(2))],
                );
                rw.rule((Ix, Dth), vec![(vec![Dth, Ix], a(3)), (vec![Dx, Ith], a(4))]);
                rw.rule((Ith, Dx), vec![(vec![Dx, Ith], a(5)), (vec![Dth, Ix], a(6))]);
                rw.rule(
                    (Ith, Dth),
                    vec![(Vec::new(), one), (vec![Dth, Ith], a(7)), (vec![Dx, Ix], a(8))],
                );
            }
        }
        Ok(rw)
    }
}

/// Moves each inner derivation through both sides of the relations it
/// must respect and collects the coefficients of the difference.
pub fn generate_ansatz_constraints(kind: AnsatzKind) -> Result<Vec<Constraint>, CovarianceError> {
    use Sym::{Dth, Dx, Ith, Ix, Th, X};
    let rw = kind.rewriter()?;
    let n = rw.nvars();
    let base = Rf::var(n, 0);
    // (lhs, coefficient, rhs): lhs - coefficient * rhs = 0
    let relations: Vec<(Vec<Sym>, Rf, Vec<Sym>)> = match kind {
        AnsatzKind::InnerCoordinate => vec![
            (vec![X, Th], base, vec![Th, X]),
            (vec![Th, Th], Rf::zero(n), Vec::new()),
        ],
        AnsatzKind::InnerDifferential => vec![
            (vec![Dx, Dth], base, vec![Dth, Dx]),
            (vec![Dx, Dx], Rf::zero(n), Vec::new()),
        ],
    };
    let mut out = Vec::new();
    for inner in [Ix, Ith] {
        for (lhs, c, rhs) in &relations {
            let with = |w: &[Sym]| {
                let mut v = vec![inner];
                v.extend_from_slice(w);
                rw.normalize_word(&v)
            };
            let mut r = with(lhs);
            if !c.is_zero() {
                r.add_scaled(&with(rhs), &-c);
            }
            for (w, k) in r.terms() {
                out.push(Constraint {
                    origin: format!("{inner} {}: {}", word_text(lhs), word_text(w)),
                    value: k.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// The closed-form ansatz values, in the ring of `ct`; `a1` and `A*` are
/// fixed, and `a8` is `Q^-1 Q22` (`printed_a8` divides also by `Q'`).
pub fn ansatz_values(kind: AnsatzKind, ct: &CalculusType, printed_a8: bool) -> Result<Vec<Rf>, CovarianceError> {
    let zero = Rf::zero(ct.nvars());
    let one = ct.one();
    Ok(match kind {
        AnsatzKind::InnerCoordinate => vec![
            ct.q(),
            ct.q_big.clone(),
            ct.q12.clone(),
            ct.q21.clone(),
            zero.clone(),
            ct.q11.clone(),
            zero,
            one,
            ct.q22.clone(),
        ],
        AnsatzKind::InnerDifferential => {
            let qi = ct.q_big.inv()?;
            let a8 = if printed_a8 {
                &(&qi * &ct.q22) * &ct.q_prime.inv()?
            } else {
                &qi * &ct.q22
            };
            vec![
                ct.q_prime.clone(),
                -&one,
                -&(&qi * &ct.q12),
                -&(&qi * &ct.q21),
                zero.clone(),
                &qi * &ct.q11,
                zero,
                qi,
                a8,
            ]
        }
    })
}
