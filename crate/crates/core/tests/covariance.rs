use qsp_core::algebra::CalculusType;
use qsp_core::coeffs::{Mode, ParamSet};
use qsp_core::covariance::*;
use qsp_core::Rf;

fn concrete(ct: &CalculusType) -> (Rewriter, Vec<String>) {
    let def = Deformation::of_type(ct);
    (def.rewriter().unwrap(), def.names)
}

#[test]
fn coaction_examples() {
    use Sym::{Dth, Dx, X};
    let (rw, names) = concrete(&CalculusType::type_ii());
    let t = |side, w: &[Sym]| coact_word(&rw, side, w).text(&names);
    assert_eq!(t(Side::Right, &[Dth]), "dx (x) th + dth (x) x");
    assert_eq!(t(Side::Left, &[Dth]), "x (x) dth - th (x) dx");
    assert_eq!(t(Side::Right, &[Dx, X]), "dx*x (x) x^2");
}

#[test]
fn right_constraints_match_reference_system() {
    let gen: Vec<Rf> = generate_covariance_constraints(Side::Right)
        .unwrap()
        .into_iter()
        .map(|c| c.value)
        .collect();
    assert!(same_linear_span(&gen, &reference_constraints()).unwrap());
    let names = Deformation::symbolic().names;
    let printed: Vec<String> = gen.iter().map(|c| c.fmt_with(&names)).collect();
    assert!(printed.contains(&"Q22+q^-1*Q11-1".to_owned()), "{printed:?}");
}

#[test]
fn left_constraints_are_not_new() {
    let gen: Vec<Rf> = generate_covariance_constraints(Side::Left)
        .unwrap()
        .into_iter()
        .map(|c| c.value)
        .collect();
    assert!(implied_by(&gen, &reference_constraints()).unwrap());
}

#[test]
fn family_values_annihilate_constraints() {
    let gen = generate_covariance_constraints(Side::Right).unwrap();
    for ct in [CalculusType::type_i(), CalculusType::type_ii(), CalculusType::type_iii()] {
        let images = Deformation::of_type(&ct).images();
        for c in &gen {
            assert!(c.value.compose(&images).unwrap().is_zero(), "{} at {:?}", c.origin, ct.mode());
        }
    }
}

#[test]
fn families_are_solved_from_side_conditions() {
    for (mode, ct) in [
        (Mode::TypeI, CalculusType::type_i()),
        (Mode::TypeII, CalculusType::type_ii()),
        (Mode::TypeIII, CalculusType::type_iii()),
    ] {
        let (ps, side) = family_side_conditions(mode);
        assert_eq!(solve_family(ps, &side).unwrap(), ct);
    }
    let ii = solve_family(family_side_conditions(Mode::TypeII).0, &family_side_conditions(Mode::TypeII).1).unwrap();
    assert_eq!(ii.q12.fmt_with(ii.names()), "r-1");
    assert_eq!(ii.q21.fmt_with(ii.names()), "-q^-1*r");
}

#[test]
fn solver_reports_bad_side_conditions() {
    let ps = ParamSet::for_mode(Mode::TypeII);
    let n = ps.len();
    let under = solve_family(ps.clone(), &[(Unknown::Q22, Rf::zero(n))]);
    assert!(matches!(under, Err(CovarianceError::UnderdeterminedSystem(_))));
    let clash = [
        (Unknown::Q12, Rf::zero(n)),
        (Unknown::Q22, Rf::zero(n)),
        (Unknown::Q, Rf::var(n, 1)),
    ];
    assert!(matches!(
        solve_family(ps, &clash),
        Err(CovarianceError::InconsistentSideConditions(_))
    ));
}

#[test]
fn bicovariance_and_coaction_axioms_hold() {
    for ct in [CalculusType::type_i(), CalculusType::type_ii(), CalculusType::type_iii()] {
        let (rw, names) = concrete(&ct);
        assert_eq!(bicovariance(&rw, &names, 2), [None, None, None], "{:?}", ct.mode());
        assert_eq!(coaction_axioms(&rw, &names, Side::Right, 2), None);
        assert_eq!(coaction_axioms(&rw, &names, Side::Left, 2), None);
    }
}

#[test]
fn bicovariance_detects_a_broken_deformation() {
    let mut def = Deformation::of_type(&CalculusType::type_ii());
    def.q12 = &def.q12 + &Rf::one(def.nvars());
    let rw = def.rewriter().unwrap();
    let [right, _, _] = bicovariance(&rw, &def.names, 2);
    assert!(right.is_some());
}

#[test]
fn ansatz_systems() {
    let names = AnsatzKind::InnerDifferential.names();
    let diff: Vec<String> = generate_ansatz_constraints(AnsatzKind::InnerDifferential)
        .unwrap()
        .iter()
        .map(|c| c.value.fmt_with(&names))
        .collect();
    assert!(diff.contains(&"a1+1".to_owned()), "{diff:?}");
    assert!(diff.contains(&"-Qp*a3+a2+1".to_owned()), "{diff:?}");
    for kind in [AnsatzKind::InnerCoordinate, AnsatzKind::InnerDifferential] {
        let gen = generate_ansatz_constraints(kind).unwrap();
        for ct in [CalculusType::type_i(), CalculusType::type_ii(), CalculusType::type_iii()] {
            let images = ansatz_values(kind, &ct, false).unwrap();
            for c in &gen {
                assert!(c.value.compose(&images).unwrap().is_zero(), "{kind:?} {} at {:?}", c.origin, ct.mode());
            }
        }
    }
}

#[test]
fn printed_last_ansatz_coefficient_fails_only_with_both_couplings() {
    let gen = generate_ansatz_constraints(AnsatzKind::InnerDifferential).unwrap();
    let survives = |ct: &CalculusType| {
        let images = ansatz_values(AnsatzKind::InnerDifferential, ct, true).unwrap();
        gen.iter().any(|c| !c.value.compose(&images).unwrap().is_zero())
    };
    assert!(!survives(&CalculusType::type_ii()));
    assert!(survives(&CalculusType::type_iii()));
}
