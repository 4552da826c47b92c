use std::path::PathBuf;

use shapeinv_core::wavefunction::{cylinder_roots, integrate, w_tilde_central, Limit};
use shapeinv_core::*;

fn cfg() -> PhysicsConfig {
    PhysicsConfig::default()
}

fn all_families() -> Vec<Family> {
    vec![
        Family::harmonic(1.0),
        Family::upside_down(1.0),
        Family::central_poschl_teller(1.0),
        Family::coulomb(1.0),
        Family::general(3.0, 1.0, 0.0),
    ]
}

#[test]
fn closed_form_families_are_shape_invariant() {
    let grid = RadialGrid::uniform(1e-2, 20.0, 1000).unwrap();
    let tol = Tolerances::default();
    for fam in [Family::harmonic(1.0), Family::upside_down(1.0), Family::coulomb(1.0)] {
        for ell in 0..=6 {
            let rep = shape_invariance_check(&fam, ell as f64, &grid, &cfg(), &tol).unwrap();
            assert!(rep.matches_remainder(&tol), "{} l={ell}: {rep:?}", fam.id());
        }
    }
}

#[test]
fn remainder_profiles_are_constant() {
    let grid = RadialGrid::uniform(1e-2, 20.0, 1000).unwrap();
    for fam in all_families() {
        for ell in 0..=4 {
            let ell = ell as f64;
            let expected = remainder_of(&fam, ell, &cfg()).unwrap();
            for v in remainder_profile(&fam, ell, &grid, &cfg()).unwrap() {
                assert!((v - expected).abs() < 1e-6 * expected.abs().max(1.0), "{} l={ell}", fam.id());
            }
        }
    }
}

#[test]
fn general_w_tilde_matches_numerical_antiderivative() {
    for (fam, ell) in [
        (Family::general(3.0, 1.0, 0.0), 0.0),
        (Family::general(1.5, 2.0, 0.0), 2.0),
    ] {
        let (a, b) = (0.4, 2.6);
        let numeric = integrate(
            |r| central_w_family(&fam, ell, r, &cfg()).unwrap().w,
            a,
            b,
            1e-13,
            0.0,
            200,
        )
        .unwrap()
        .value;
        let analytic = w_tilde_central(&fam, ell, b, &cfg()).unwrap()
            - w_tilde_central(&fam, ell, a, &cfg()).unwrap();
        assert!((numeric - analytic).abs() < 1e-11, "{numeric} vs {analytic}");
    }
}

#[test]
fn three_dimensions_bit_identical() {
    let grid = RadialGrid::uniform(1e-2, 20.0, 1000).unwrap();
    let tol = Tolerances::default();
    for fam in all_families() {
        for ell in [0.0, 1.0, 4.0] {
            let ctx = DimensionalContext::new(ell, 3).unwrap();
            for &r in grid.points() {
                assert_eq!(ctx.full_w(&fam, r, &cfg()).unwrap(), full_w(&fam, ell, r, &cfg()).unwrap());
                assert_eq!(
                    ctx.w_tilde(&fam, r, &cfg()).unwrap().to_bits(),
                    w_tilde(&fam, ell, r, &cfg()).unwrap().to_bits()
                );
            }
            assert_eq!(
                ctx.partners(&fam, &grid, &cfg()).unwrap(),
                partners_from_w(&fam, ell, &grid, &cfg()).unwrap()
            );
            assert_eq!(
                ctx.shape_invariance_check(&fam, &grid, &cfg(), &tol).unwrap(),
                shape_invariance_check(&fam, ell, &grid, &cfg(), &tol).unwrap()
            );
            assert_eq!(ctx.classify(&fam, &cfg()).unwrap(), classify(&fam, ell, &cfg()).unwrap());
        }
    }
}

#[test]
fn even_dimensions_need_half_integral_support() {
    // l_eff = 0.5 is fine for the Pöschl-Teller family but not for the parity-signed one
    let ctx = DimensionalContext::new(0.0, 4).unwrap();
    assert!(ctx.full_w(&Family::central_poschl_teller(1.0), 1.0, &cfg()).is_ok());
    assert!(matches!(
        ctx.full_w(&Family::upside_down(1.0), 1.0, &cfg()),
        Err(Error::NonIntegralEll(_))
    ));
}

#[test]
fn classification_table() {
    let phase = |fam: &Family, ell: f64| classify(fam, ell, &cfg()).unwrap().phase;
    for ell in 0..6 {
        let l = ell as f64;
        assert_eq!(phase(&Family::harmonic(1.0), l), SusyPhase::Unbroken);
        let expect = if ell % 2 == 0 { SusyPhase::Unbroken } else { SusyPhase::Broken };
        assert_eq!(phase(&Family::upside_down(1.0), l), expect);
    }
    assert_eq!(phase(&Family::general(2.0, 0.0, 0.0), 1.0), SusyPhase::SpontaneouslyBroken);
    assert_eq!(ddim_broken_check(0.0, 5).unwrap().phase, SusyPhase::Broken);
    let cpt = classify(&Family::central_poschl_teller(1.0), 2.0, &cfg()).unwrap();
    assert_eq!(cpt.phase, SusyPhase::Unbroken);
    assert_eq!(cpt.infinity.u, Limit::Zero);
}

#[test]
fn localization_places_a_pole() {
    let c = localization_constant(1.0, 1.0, 5.0).unwrap();
    let fam = Family::general_from_coefficients(1.0, 1.0, 0.0, c, &cfg()).unwrap();
    let coeffs = coefficients(fam.ratio_g(0.0).unwrap(), remainder_of(&fam, 0.0, &cfg()).unwrap(), 0.0, &cfg())
        .unwrap();
    assert!((coeffs.a - 1.0).abs() < 1e-15 && (coeffs.b - 1.0).abs() < 1e-15);
    assert!(full_w(&fam, 0.0, 5.0, &cfg()).unwrap().pole);
    let roots = cylinder_roots(1.0, 1.0, c, 0.5, 15.0, 300).unwrap();
    assert!(roots.iter().any(|r| (r - 5.0).abs() < 1e-9));
}

#[test]
fn ground_state_vanishes_at_grid_ends() {
    let grid = RadialGrid::uniform(1e-3, 30.0, 3000).unwrap();
    for (fam, ell) in [
        (Family::harmonic(1.0), 0.0),
        (Family::central_poschl_teller(1.0), 2.0),
        (Family::coulomb(4.0), 1.0),
    ] {
        let gs = ground_state(&fam, ell, &grid, &cfg()).unwrap();
        let peak = gs.u.iter().copied().fold(0.0, f64::max);
        assert!(gs.u[0] < 1e-2 * peak);
        assert!(gs.u[gs.u.len() - 1] < 1e-6 * peak, "{}", fam.id());
    }
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/errata.json")
}

#[test]
fn erratum_report_is_stable() {
    let json = erratum_report(&cfg()).unwrap().to_json();
    let path = golden_path();
    if std::env::var_os("SHAPEINV_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &json).unwrap();
    }
    let golden = std::fs::read_to_string(&path).expect("golden erratum report exists");
    assert_eq!(json, golden);
    let parsed: errata::ErratumReport = serde_json::from_str(&golden).unwrap();
    assert!(parsed.errata.iter().any(|e| e.id == "cpt-shape-invariance"));
    assert!(parsed.errata.iter().any(|e| e.id == "updown-remainder-ratio"));
}
