mod common;

use common::{int, seeded};
use proptest::prelude::*;
use spinor_lfunc_core::characters::{enumerate_dominant, DominantWeight};
use spinor_lfunc_core::lfactors::{CaseKind, IdentityCase};
use spinor_lfunc_core::root_data::{
    build_root_datum, galois_act, modulus_exponent, modulus_exponent_from_root_datum, modulus_relation_constant,
    pairing, weyl_act, Family, GroupKind, LatticeVector, ModulusRole, RootDatum, Side, WeylElement,
};
use spinor_lfunc_core::Rational;

fn kinds() -> Vec<GroupKind> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push(GroupKind::gspin_odd(n).unwrap());
        out.push(GroupKind::gspin_even_split(n).unwrap());
        out.push(GroupKind::gspin_even_quasi_split(n, int(3)).unwrap());
        out.push(GroupKind::gl(n).unwrap());
    }
    out
}

fn kind_strategy() -> impl Strategy<Value = GroupKind> {
    proptest::sample::select(kinds())
}

fn vectors(rank: usize) -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (proptest::collection::vec(-6i64..=6, rank + 1), proptest::collection::vec(-6i64..=6, rank + 1))
}

fn weyl_element(kind: &GroupKind) -> impl Strategy<Value = WeylElement> {
    let kind = kind.clone();
    let n = kind.rank();
    (Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n)).prop_map(
        move |(perm, flips)| {
            let mut signs: Vec<i8> = flips.iter().map(|&f| if f { -1 } else { 1 }).collect();
            match kind.family() {
                Family::GL => signs.iter_mut().for_each(|s| *s = 1),
                Family::GSpinEvenSplit | Family::GSpinEvenQuasiSplit => {
                    if signs.iter().filter(|&&s| s == -1).count() % 2 == 1 {
                        signs[0] = -signs[0];
                    }
                }
                Family::GSpinOdd => {}
            }
            WeylElement::new(&kind, perm, signs).unwrap()
        },
    )
}

fn datum_with_data() -> impl Strategy<Value = (RootDatum, WeylElement, Vec<i64>, Vec<i64>)> {
    kind_strategy().prop_flat_map(|kind| {
        let datum = build_root_datum(kind.clone()).unwrap();
        (Just(datum), weyl_element(&kind), vectors(kind.rank()))
            .prop_map(|(d, w, (x, y))| (d, w, x, y))
    })
}

#[test]
fn every_root_pairs_to_two_with_its_coroot() {
    for kind in kinds() {
        let datum = build_root_datum(kind).unwrap();
        for (root, coroot) in datum.roots().iter().zip(datum.coroots()) {
            assert_eq!(pairing(root, coroot).unwrap(), 2);
            assert_eq!(&datum.coroot_of(root).unwrap(), coroot);
        }
        assert_eq!(datum.simple_roots().len(), datum.simple_coroots().len());
    }
}

#[test]
fn cartan_matrices_have_the_expected_type() {
    for n in 2..=5 {
        let b = build_root_datum(GroupKind::gspin_odd(n).unwrap()).unwrap().cartan_matrix();
        let d = build_root_datum(GroupKind::gspin_even_split(n).unwrap()).unwrap().cartan_matrix();
        let a = build_root_datum(GroupKind::gl(n).unwrap()).unwrap().cartan_matrix();
        for i in 0..n {
            assert_eq!(b[i][i], 2);
            assert_eq!(d[i][i], 2);
        }
        // type B: the last simple root is short
        assert_eq!((b[n - 2][n - 1], b[n - 1][n - 2]), (-2, -1));
        assert_eq!(a.len(), n - 1);
        if n >= 3 {
            // type D: the fork
            assert_eq!(d[n - 3][n - 1], -1);
            assert_eq!(d[n - 2][n - 1], 0);
        }
    }
}

#[test]
fn simple_reflections_preserve_the_pairing() {
    let mut runner = proptest::test_runner::TestRunner::new(seeded(100));
    for kind in kinds() {
        let datum = build_root_datum(kind.clone()).unwrap();
        for i in 0..datum.simple_roots().len() {
            let w = datum.simple_reflection(i).unwrap();
            runner
                .run(&vectors(kind.rank()), |(x, y)| {
                    let x = LatticeVector::from_coeffs(Side::Char, x);
                    let y = LatticeVector::from_coeffs(Side::Cochar, y);
                    let wx = weyl_act(&datum, &w, &x).unwrap();
                    let wy = weyl_act(&datum, &w, &y).unwrap();
                    prop_assert_eq!(pairing(&wx, &wy).unwrap(), pairing(&x, &y).unwrap());
                    Ok(())
                })
                .unwrap();
        }
    }
}

proptest! {
    #![proptest_config(seeded(200))]

    #[test]
    fn weyl_elements_preserve_the_pairing((datum, w, x, y) in datum_with_data()) {
        let x = LatticeVector::from_coeffs(Side::Char, x);
        let y = LatticeVector::from_coeffs(Side::Cochar, y);
        let wx = weyl_act(&datum, &w, &x).unwrap();
        let wy = weyl_act(&datum, &w, &y).unwrap();
        prop_assert_eq!(pairing(&wx, &wy).unwrap(), pairing(&x, &y).unwrap());
    }

    #[test]
    fn weyl_elements_permute_the_roots((datum, w, _x, _y) in datum_with_data()) {
        for root in datum.roots() {
            let image = weyl_act(&datum, &w, root).unwrap();
            prop_assert!(datum.roots().contains(&image));
        }
        for coroot in datum.coroots() {
            let image = weyl_act(&datum, &w, coroot).unwrap();
            prop_assert!(datum.coroots().contains(&image));
        }
    }

    #[test]
    fn galois_is_an_involution(n in 1usize..=5, x in proptest::collection::vec(-6i64..=6, 6)) {
        let datum = build_root_datum(GroupKind::gspin_even_quasi_split(n, int(5)).unwrap()).unwrap();
        for side in [Side::Char, Side::Cochar] {
            let v = LatticeVector::from_coeffs(side, x[..=n].to_vec());
            let twice = galois_act(&datum, &galois_act(&datum, &v).unwrap()).unwrap();
            prop_assert_eq!(twice, v);
        }
    }
}

#[test]
fn galois_permutes_the_simple_roots() {
    for n in 2..=5 {
        let datum = build_root_datum(GroupKind::gspin_even_quasi_split(n, int(7)).unwrap()).unwrap();
        let simple = datum.simple_roots();
        let images: Vec<LatticeVector> = simple.iter().map(|a| galois_act(&datum, a).unwrap()).collect();
        for img in &images {
            assert!(simple.contains(img));
        }
        assert_eq!(images[n - 2], simple[n - 1]);
        assert_eq!(images[n - 1], simple[n - 2]);
        for coroot in datum.simple_coroots() {
            assert!(datum.simple_coroots().contains(&galois_act(&datum, coroot).unwrap()));
        }
    }
}

#[test]
fn galois_needs_the_quasi_split_kind() {
    let datum = build_root_datum(GroupKind::gspin_even_split(3).unwrap()).unwrap();
    let v = LatticeVector::basis(Side::Char, 3, 1);
    assert!(galois_act(&datum, &v).is_err());
}

fn case_a_instances(max_n: usize) -> Vec<IdentityCase> {
    let mut out = Vec::new();
    for kind in [CaseKind::AOdd, CaseKind::AEvenSplit, CaseKind::AEvenQuasiSplit] {
        for n in 1..=max_n {
            for m in n..=n + 2 {
                if let Ok(case) = IdentityCase::new(kind, n, m) {
                    out.push(case);
                }
            }
        }
    }
    out
}

/// All dominant `δ` with `n` parts, each part at most `bound`.
fn bounded_weights(n: usize, bound: u32) -> Vec<DominantWeight> {
    (0..=n as u32 * bound)
        .flat_map(|j| enumerate_dominant(n, j))
        .filter(|d| d.parts().first().is_none_or(|&k| k <= bound))
        .collect()
}

#[test]
fn explicit_modulus_exponents_match_two_rho() {
    for case in case_a_instances(4) {
        for delta in bounded_weights(case.n(), 5) {
            for role in [ModulusRole::DeltaG, ModulusRole::DeltaH, ModulusRole::DeltaGL] {
                assert_eq!(
                    modulus_exponent(role, &case, &delta).unwrap(),
                    modulus_exponent_from_root_datum(role, &case, &delta).unwrap(),
                    "{case} {delta} {role:?}"
                );
            }
        }
    }
}

#[test]
fn modulus_relation_holds() {
    let half = Rational::new(1.into(), 2.into());
    for case in case_a_instances(4) {
        let c = modulus_relation_constant(&case).unwrap();
        assert_eq!(c, case.shift_u() - int(case.shift_ell()));
        for delta in bounded_weights(case.n(), 5) {
            let e = |role| modulus_exponent(role, &case, &delta).unwrap().0;
            let trace = int(delta.trace() as i64);
            assert_eq!(
                e(ModulusRole::DeltaG),
                &half * e(ModulusRole::DeltaH) + &half * e(ModulusRole::DeltaGL) + &c * &trace,
                "{case} {delta}"
            );
        }
    }
}
