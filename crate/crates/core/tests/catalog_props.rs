//! Catalog-wide structural properties: reality, normalization, slices,
//! jet identities, and residual certificates.

use calabi::{
    extension, int, lee2_ode, lee3_ode, mii_closed_jet, ode_residual, rat, slice_extension,
    solve_profile_jet, MetricSpec, Rational,
};

fn catalog() -> Vec<MetricSpec> {
    vec![
        MetricSpec::Flat { dim: 2 },
        MetricSpec::FubiniStudy { dim: 2 },
        MetricSpec::LeeII { n: 1 },
        MetricSpec::LeeII { n: 2 },
        MetricSpec::LeeIII { n: 1 },
        MetricSpec::TaubNut { m: rat(1, 3) },
    ]
}

#[test]
fn reality_symmetry_everywhere() {
    for spec in catalog() {
        let cutoff = if spec.var_count() > 4 { 2 } else { 3 };
        let e = extension(&spec, cutoff).unwrap();
        assert!(e.is_reality_symmetric(), "{spec:?}");
    }
}

#[test]
fn normalized_basepoint_everywhere() {
    for spec in catalog() {
        let e = extension(&spec, 2).unwrap();
        assert_eq!(e.constant_term(), int(0), "{spec:?}");
    }
}

#[test]
fn slices_agree_with_full_restriction() {
    for spec in catalog() {
        let cutoff = if spec.var_count() > 4 { 2 } else { 3 };
        let full = extension(&spec, cutoff).unwrap();
        for var in 0..spec.var_count() {
            assert_eq!(
                full.restrict_to_pair(var).unwrap(),
                slice_extension(&spec, var, cutoff).unwrap(),
                "{spec:?} var {var}"
            );
        }
    }
}

#[test]
fn projective_jets_are_n_independent_and_closed_form() {
    let reference = mii_closed_jet(8);
    for n in 1..=10 {
        let jet = solve_profile_jet(&lee2_ode(n).unwrap(), 8).unwrap();
        for k in 0..=8 {
            assert_eq!(
                jet.taylor_coeff(k),
                reference.taylor_coeff(k),
                "n={n}, k={k}"
            );
        }
    }
}

#[test]
fn residual_identity_for_both_families() {
    for n in 1..=10 {
        for (name, ode) in [
            ("lee2", lee2_ode(n).unwrap()),
            ("lee3", lee3_ode(n).unwrap()),
        ] {
            for order in 2..=8 {
                let jet = solve_profile_jet(&ode, order).unwrap();
                let res = ode_residual(&ode, &jet).unwrap();
                assert_eq!(res.coeff(0), int(1), "{name} n={n} K={order}");
                for m in 1..=order - 2 {
                    assert_eq!(res.coeff(m), int(0), "{name} n={n} K={order} t^{m}");
                }
            }
        }
    }
}

#[test]
fn quaternionic_jet_formulas() {
    for n in 1..=10i64 {
        let jet = solve_profile_jet(&lee3_ode(n as u32).unwrap(), 4).unwrap();
        let nn = int(n);
        let d = int(2 * n + 1);
        assert_eq!(jet.derivative(2), -nn.clone() / d.clone(), "f'' at n={n}");
        let f3: Rational = (int(6) * nn.clone() * nn.clone() + int(2) * nn.clone() + int(1))
            / (int(2) * d.clone() * d.clone());
        assert_eq!(jet.derivative(3), f3, "f''' at n={n}");
        let f4: Rational = -(int(30) * nn.clone() * nn.clone() * nn.clone()
            + int(22) * nn.clone() * nn.clone()
            + int(15) * nn
            + int(2))
            / (int(2) * d.clone() * d.clone() * d);
        assert_eq!(jet.derivative(4), f4, "f'''' at n={n}");
    }
}

#[test]
fn taubnut_interpolates_to_flat() {
    let e = extension(&MetricSpec::TaubNut { m: int(0) }, 4).unwrap();
    let flat = extension(&MetricSpec::Flat { dim: 2 }, 4).unwrap();
    assert_eq!(e, flat);
}

#[test]
fn extension_truncation_exactness() {
    for spec in catalog() {
        let (big, small) = if spec.var_count() > 4 { (3, 2) } else { (4, 2) };
        let wide = extension(&spec, big).unwrap();
        let narrow = extension(&spec, small).unwrap();
        assert_eq!(wide.truncate(small).unwrap(), narrow, "{spec:?}");
    }
}
