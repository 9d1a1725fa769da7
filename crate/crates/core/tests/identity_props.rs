mod common;

use common::{int, regular_values, seeded};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use spinor_lfunc_core::characters::{EigenvalueList, NormalizationExponent};
use spinor_lfunc_core::identity::{
    resolve_normalization_exponent, symalg_shapes, verify_case_b_factorization, verify_symalg,
    verify_unramified_identity, SymAlgInstance, VerificationReport,
};
use spinor_lfunc_core::lfactors::{CaseKind, IdentityCase};
use spinor_lfunc_core::satake::{satake_gl, UnramifiedData};
use spinor_lfunc_core::Rational;

use NormalizationExponent::HalfTraceDelta;

/// `χ_0 = u²` followed by `m` regular torus values and `n` regular GL values,
/// all from distinct primes.
fn parameters(m: usize, n: usize) -> impl Strategy<Value = (Rational, Vec<Rational>, Vec<Rational>)> {
    regular_values(1 + m + n).prop_map(move |v| (&v[0] * &v[0], v[1..=m].to_vec(), v[m + 1..].to_vec()))
}

proptest! {
    #![proptest_config(seeded(10))]

    #[test]
    fn split_case_a_identities_hold_with_one_exponent(
        p11 in parameters(1, 1), p22 in parameters(2, 2), p23 in parameters(3, 2)
    ) {
        let shapes = [
            (CaseKind::AOdd, 1, 1, &p11),
            (CaseKind::AOdd, 2, 2, &p22),
            (CaseKind::AOdd, 2, 3, &p23),
            (CaseKind::AEvenSplit, 1, 2, &p22),
            (CaseKind::AEvenSplit, 2, 3, &p23),
        ];
        for (kind, n, m, (chi0, chi, tau)) in shapes {
            let case = IdentityCase::new(kind, n, m).unwrap();
            let pi = UnramifiedData::split(chi0.clone(), chi[..m].to_vec());
            let report = verify_unramified_identity(&case, &pi, &tau[..n], 8, HalfTraceDelta).unwrap();
            prop_assert!(report.passed(), "{} {:?}", case, report.mismatch);
            prop_assert_eq!(report.validating_exponents(), vec![HalfTraceDelta]);
        }
    }

    #[test]
    fn case_b_factorization_holds(p in parameters(2, 3)) {
        let (omega, sigma, tau) = p;
        for (kind, n, m) in [(CaseKind::BOdd, 1, 2), (CaseKind::BOdd, 2, 3), (CaseKind::BEvenSplit, 1, 1), (CaseKind::BEvenSplit, 2, 2)] {
            let case = IdentityCase::new(kind, n, m).unwrap();
            let data = UnramifiedData::split(omega.clone(), sigma[..n].to_vec());
            let t_tau = satake_gl(&tau[..m]).unwrap();
            prop_assert!(verify_case_b_factorization(&case, &data, &t_tau, 8).unwrap().passed());
        }
    }
}

#[test]
fn symmetric_algebra_battery_fixes_the_exponent() {
    let mut runner = proptest::test_runner::TestRunner::new(seeded(5));
    let mut reports: Vec<VerificationReport> = Vec::new();
    for (family, m, n) in symalg_shapes(2, 2) {
        let strategy = (parameters(m, n), proptest::collection::vec(-3i64..=3, 12));
        for r in 0..=4 {
            for _ in 0..5 {
                let ((mu, torus, g2), mixing) = strategy.new_tree(&mut runner).unwrap().current();
                let inst = SymAlgInstance::conjugated(
                    family,
                    EigenvalueList::new(torus).unwrap(),
                    mu,
                    EigenvalueList::new(g2).unwrap(),
                    r,
                    &mixing,
                    &mixing[6..],
                )
                .unwrap();
                let report = verify_symalg(&inst, HalfTraceDelta).unwrap();
                assert!(report.passed(), "{family:?} m={m} n={n} r={r}");
                reports.push(report);
            }
        }
    }
    assert_eq!(resolve_normalization_exponent(&reports).unwrap(), HalfTraceDelta);
}

#[test]
fn quasi_split_reports_localize_the_residual() {
    let case = IdentityCase::new(CaseKind::AEvenQuasiSplit, 2, 3).unwrap();
    // u = 5/2, a = 3, s = 1: α = (5/2)·4/(−2) = −5, β = 5/(−2)
    let alpha = int(-5);
    let beta = Rational::new((-5).into(), 2.into());
    let pi = UnramifiedData::quasi_split(Rational::new(25.into(), 4.into()), vec![int(7), int(-11)], int(3), alpha, beta);
    let report = verify_unramified_identity(&case, &pi, &[int(13), Rational::new(1.into(), 17.into())], 8, HalfTraceDelta).unwrap();
    let again = verify_unramified_identity(&case, &pi, &[int(13), Rational::new(1.into(), 17.into())], 8, HalfTraceDelta).unwrap();
    assert_eq!(report, again);
    let location = report.mismatch.as_ref().expect("the Galois block leaves a residual");
    assert_eq!(location.coefficient, 1);
    assert_eq!(location.strata.len(), 1);
    assert!(report.finding("reduced_rhs_equal").unwrap().holds);
    assert!(report.finding("galois_block_factor_explains_residual").unwrap().holds);
}
