//! Acceptance suite: one PASS/FAIL line per criterion, details indented below.
//! Exits nonzero when any criterion fails.

// NaN has to fail every bound
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::f64::consts::PI;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use shapeinv_core::specfun::{bessel_j, bessel_jy, bessel_y};
use shapeinv_core::wavefunction::{
    cylinder_roots, residual_convergence, schrodinger_residual, STENCIL_ORDER,
};
use shapeinv_core::*;

type Criterion = (&'static str, fn() -> Outcome);

const TIME_LIMIT: Duration = Duration::from_secs(5);

struct Outcome {
    passed: bool,
    details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            passed: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, line: String) {
        self.passed &= ok;
        self.details.push(format!("{} {line}", if ok { "ok  " } else { "FAIL" }));
    }

    fn note(&mut self, line: String) {
        self.details.push(format!("     {line}"));
    }
}

fn cfg() -> PhysicsConfig {
    PhysicsConfig::default()
}

fn shape_invariance() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    let cfg = cfg();
    let tol = Tolerances::default();
    let grid = RadialGrid::uniform(1e-2, 20.0, 1000).unwrap();
    let (hbar, m, s2) = (cfg.hbar(), cfg.mass(), cfg.hbar2_over_2m());

    let rel = |a: f64, b: f64| (a - b).abs() / b.abs();
    let families: [(&str, Family); 4] = [
        ("harmonic", Family::harmonic(1.0)),
        ("updown", Family::upside_down(1.0)),
        ("cpt", Family::central_poschl_teller(1.0)),
        ("coulomb", Family::coulomb(1.0)),
    ];
    for (name, fam) in &families {
        let mut inferred = Vec::new();
        let mut worst = 0.0f64;
        let mut failures = Vec::new();
        for ell in 0..=6 {
            let l = f64::from(ell);
            let rep = shape_invariance_check(fam, l, &grid, &cfg, &tol).unwrap();
            worst = worst.max(rep.rel_deviation);
            if !rep.passed {
                failures.push(ell);
            }
            inferred.push(rep.r_inferred);
        }
        out.check(
            failures.is_empty(),
            format!(
                "{name}: V2(r,l) - V1(r,l+1) constant for l = 0..6, worst rel. spread {worst:.3e} (non-constant at l = {failures:?})"
            ),
        );
        // published remainders
        let matches: Vec<(i32, f64)> = match *name {
            "harmonic" => (0..=6).map(|l| (l, rel(inferred[l as usize], 2.0 * hbar))).collect(),
            "cpt" => (0..=6)
                .map(|l| (l, rel(inferred[l as usize], s2 * (2.0 * f64::from(l) + 3.0))))
                .collect(),
            "coulomb" => (0..=6)
                .map(|l| {
                    let l_ = f64::from(l);
                    let published = m / (2.0 * hbar * hbar) * (2.0 * l_ + 3.0)
                        / ((l_ + 1.0) * (l_ + 2.0)).powi(2);
                    (l, rel(inferred[l as usize], published))
                })
                .collect(),
            // only the ratio of successive remainders is published for this family
            _ => (0..6)
                .map(|l| {
                    let l_ = f64::from(l);
                    let published = -(2.0 * l_ + 3.0) / (2.0 * l_ + 5.0);
                    let ratio = inferred[l as usize + 1] / inferred[l as usize];
                    (l, rel(ratio, published))
                })
                .collect(),
        };
        let bad: Vec<i32> = matches.iter().filter(|(_, e)| !(*e < 1e-8)).map(|(l, _)| *l).collect();
        let worst_err = matches.iter().map(|(_, e)| *e).fold(0.0, f64::max);
        let what = if *name == "updown" {
            "ratio R(l+1)/R(l) vs published -(2l+3)/(2l+5)"
        } else {
            "inferred constant vs published remainder"
        };
        out.check(
            bad.is_empty(),
            format!("{name}: {what}, worst rel. error {worst_err:.3e} (mismatch at l = {bad:?})"),
        );
        if *name == "updown" {
            out.note(format!(
                "updown inferred remainders l = 0..6: {:?}",
                inferred.iter().map(|v| format!("{v:.6}")).collect::<Vec<_>>()
            ));
        }
    }
    let elapsed = start.elapsed();
    out.check(elapsed < TIME_LIMIT, format!("runtime {elapsed:.2?} < 5 s"));
    out
}

fn normalization_constants() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    let grid = RadialGrid::uniform(1e-3, 20.0, 4000).unwrap();
    let fam = Family::central_poschl_teller(1.0);
    let published = [(2.0, 5.76), (6.0, 42.24), (10.0, 255.01)];
    let mut matching = Vec::new();
    for measure in [NormMeasure::ReducedRadial, NormMeasure::RadialOnly] {
        let mut all = true;
        let mut parts = Vec::new();
        for (ell, want) in published {
            let n = ground_state_with_measure(&fam, ell, &grid, &cfg(), measure)
                .unwrap()
                .norm;
            let ok = (n / want - 1.0).abs() <= 5e-3;
            all &= ok;
            parts.push(format!("l={ell}: N={n:.4} (published {want}, {})", if ok { "within 0.5%" } else { "off" }));
        }
        out.note(format!("measure int {}: {}", measure.label(), parts.join("; ")));
        if all {
            matching.push(measure.label());
        }
    }
    out.check(
        !matching.is_empty(),
        format!("published N reproduced under measure(s): {matching:?}"),
    );
    let elapsed = start.elapsed();
    out.check(elapsed < TIME_LIMIT, format!("runtime {elapsed:.2?} < 5 s"));
    out
}

fn residuals() -> Outcome {
    let mut out = Outcome::new();
    let cfg = cfg();
    let grid = RadialGrid::uniform(1e-3, 20.0, 4000).unwrap();
    let coarse = RadialGrid::uniform(1e-3, 20.0, 400).unwrap();
    let cases = [
        (Family::harmonic(1.0), 0.0),
        (Family::harmonic(1.0), 1.0),
        (Family::harmonic(1.0), 2.0),
        (Family::central_poschl_teller(1.0), 2.0),
        (Family::central_poschl_teller(1.0), 6.0),
        (Family::central_poschl_teller(1.0), 10.0),
    ];
    for (fam, ell) in cases {
        let gs = ground_state(&fam, ell, &grid, &cfg).unwrap();
        let res = schrodinger_residual(&gs, &grid, &cfg).unwrap();
        out.check(res < 1e-6, format!("{} l={ell}: residual on 4000 points {res:.3e} < 1e-6", fam.id()));
        match residual_convergence(&fam, ell, &coarse, &cfg) {
            Ok(conv) => out.check(
                conv.observed_order >= STENCIL_ORDER - 0.5,
                format!(
                    "{} l={ell}: step halving 400 -> 799 points {:.3e} -> {:.3e}, observed order {:.2} (stencil order {STENCIL_ORDER})",
                    fam.id(),
                    conv.coarse,
                    conv.fine,
                    conv.observed_order
                ),
            ),
            Err(e) => out.check(false, format!("{} l={ell}: {e}", fam.id())),
        }
    }
    out
}

fn coulomb_spectrum() -> Outcome {
    let mut out = Outcome::new();
    let cfg = cfg();
    let kappa = 1.0;
    let scale = cfg.mass() * kappa * kappa / (2.0 * cfg.hbar().powi(2));
    let mut worst = 0.0f64;
    for ell in 0..=2 {
        let l = f64::from(ell);
        let levels = physical_spectrum(&Family::coulomb(kappa), l, 10, &cfg).unwrap();
        for (n, e) in levels.iter().enumerate() {
            let exact = -scale / (l + n as f64 + 1.0).powi(2);
            worst = worst.max(((e - exact) / exact).abs());
        }
    }
    out.check(worst < 1e-12, format!("worst rel. error over l = 0..2, n = 0..10: {worst:.3e} < 1e-12"));
    out
}

fn special_functions() -> Outcome {
    let mut out = Outcome::new();
    let mut worst = 0.0f64;
    let mut at = (0.0, 0.0);
    let mut misses = Vec::new();
    for i in 0..50 {
        let nu = -5.0 + 25.0 * f64::from(i) / 49.0;
        for k in 0..50 {
            let x = 0.1 + 49.9 * f64::from(k) / 49.0;
            let a = bessel_jy(nu, x).unwrap();
            let b = bessel_jy(nu + 1.0, x).unwrap();
            let w = (a.j * b.y - b.j * a.y + 2.0 / (PI * x)).abs();
            if w > worst {
                worst = w;
                at = (nu, x);
            }
            if !(w < 1e-10) {
                // eps * |J Y| is what correctly rounded J and Y would already cost
                let floor = f64::EPSILON * (a.j * b.y).abs().max((b.j * a.y).abs());
                misses.push(format!("(nu, x) = ({nu:.3}, {x:.3}): {w:.2e}, f64 floor {floor:.1e}"));
            }
        }
    }
    out.check(
        worst < 1e-10,
        format!("Wronskian on 50x50 lattice: max {worst:.3e} at (nu, x) = ({:.3}, {:.3})", at.0, at.1),
    );
    for m in misses {
        out.note(m);
    }
    let mut worst_half = 0.0f64;
    for k in 0..50 {
        let x = 0.1 + 49.9 * f64::from(k) / 49.0;
        let s = (2.0 / (PI * x)).sqrt();
        let (sn, cs) = x.sin_cos();
        let table = [
            (0.5, s * sn, -s * cs),
            (-0.5, s * cs, s * sn),
            (1.5, s * (sn / x - cs), -s * (cs / x + sn)),
            (-1.5, -s * (cs / x + sn), -s * (sn / x - cs)),
        ];
        for (nu, j, y) in table {
            worst_half = worst_half
                .max((bessel_j(nu, x).unwrap() - j).abs())
                .max((bessel_y(nu, x).unwrap() - y).abs());
        }
    }
    out.check(worst_half < 1e-10, format!("half-integer closed forms: max error {worst_half:.3e}"));
    out
}

fn localization() -> Outcome {
    let mut out = Outcome::new();
    let cfg = cfg();
    let c = localization_constant(1.0, 1.0, 5.0).unwrap();
    out.note(format!("C = -J(1,5)/Y(1,5) = {c:.15}"));
    let roots = cylinder_roots(1.0, 1.0, c, 0.5, 20.0, 400).unwrap();
    let nearest = roots
        .iter()
        .copied()
        .min_by(|a, b| (a - 5.0).abs().total_cmp(&(b - 5.0).abs()))
        .unwrap();
    out.check(
        (nearest - 5.0).abs() < 1e-9,
        format!("root of f2 nearest 5: {nearest:.15} (|dr| = {:.3e}); all roots in [0.5, 20]: {roots:.4?}", (nearest - 5.0).abs()),
    );
    let fam = Family::general_from_coefficients(1.0, 1.0, 0.0, c, &cfg).unwrap();
    let pole = full_w(&fam, 0.0, 5.0, &cfg).unwrap().pole && full_w(&fam, 0.0, nearest, &cfg).unwrap().pole;
    out.check(pole, "w flagged as a pole at r = 5 and at the located root".into());
    out
}

fn classification() -> Outcome {
    let mut out = Outcome::new();
    let cfg = cfg();
    let phase = |fam: &Family, ell: i32| classify(fam, f64::from(ell), &cfg).unwrap().phase;
    let harmonic: Vec<SusyPhase> = (0..=6).map(|l| phase(&Family::harmonic(1.0), l)).collect();
    out.check(
        harmonic.iter().all(|p| *p == SusyPhase::Unbroken),
        format!("harmonic l = 0..6: {harmonic:?}"),
    );
    let updown: Vec<SusyPhase> = (0..=6).map(|l| phase(&Family::upside_down(1.0), l)).collect();
    let updown_ok = updown.iter().enumerate().all(|(l, p)| {
        *p == if l % 2 == 0 { SusyPhase::Unbroken } else { SusyPhase::Broken }
    });
    out.check(updown_ok, format!("updown l = 0..6: {updown:?}"));
    let free = phase(&Family::general(3.0, 0.0, 0.0), 0);
    out.check(free == SusyPhase::SpontaneouslyBroken, format!("R = 0: {free:?}"));
    let dd = ddim_broken_check(0.0, 5).unwrap().phase;
    out.check(dd == SusyPhase::Broken, format!("harmonic D = 5, l' = 0: {dd:?}"));
    out
}

fn three_dimensional_consistency() -> Outcome {
    let mut out = Outcome::new();
    let cfg = cfg();
    let tol = Tolerances::default();
    let grid = RadialGrid::uniform(1e-2, 20.0, 1000).unwrap();
    let families = [
        Family::harmonic(1.0),
        Family::upside_down(1.0),
        Family::central_poschl_teller(1.0),
        Family::coulomb(1.0),
        Family::general(3.0, 1.0, 0.0),
    ];
    for fam in &families {
        let mut identical = true;
        for ell in 0..=3 {
            let l = f64::from(ell);
            let ctx = DimensionalContext::new(l, 3).unwrap();
            for &r in grid.points() {
                let a = ctx.full_w(fam, r, &cfg).unwrap();
                let b = full_w(fam, l, r, &cfg).unwrap();
                identical &= a.full.to_bits() == b.full.to_bits()
                    && a.full_prime.to_bits() == b.full_prime.to_bits()
                    && a.central.to_bits() == b.central.to_bits()
                    && ctx.w_tilde(fam, r, &cfg).unwrap().to_bits() == w_tilde(fam, l, r, &cfg).unwrap().to_bits();
            }
            identical &= ctx.partners(fam, &grid, &cfg).unwrap() == partners_from_w(fam, l, &grid, &cfg).unwrap();
            identical &= ctx.shape_invariance_check(fam, &grid, &cfg, &tol).unwrap()
                == shape_invariance_check(fam, l, &grid, &cfg, &tol).unwrap();
            identical &= ctx.classify(fam, &cfg).unwrap() == classify(fam, l, &cfg).unwrap();
        }
        out.check(identical, format!("{}: D = 3 bit-identical for l = 0..3", fam.id()));
    }
    out
}

fn cross_construction() -> Outcome {
    let mut out = Outcome::new();
    let report = erratum_report(&cfg()).unwrap();
    let agreeing = report.comparisons.iter().filter(|c| c.agrees).count();
    out.note(format!(
        "{agreeing} of {} comparisons agree to rel. 1e-9",
        report.comparisons.len()
    ));
    for fam in ["harmonic", "coulomb"] {
        let all = report
            .comparisons
            .iter()
            .filter(|c| c.family.starts_with(fam))
            .all(|c| c.agrees);
        out.check(all, format!("{fam}: published and constructed partners agree"));
    }
    let uncovered: Vec<String> = report
        .disagreements()
        .filter(|c| {
            let id = c.family.split('(').next().unwrap_or_default();
            !report.errata.iter().any(|e| e.family == id)
        })
        .map(|c| format!("{} l={} {}", c.family, c.ell, c.quantity))
        .collect();
    out.check(
        uncovered.is_empty(),
        format!("every disagreement is covered by an erratum entry (uncovered: {uncovered:?})"),
    );
    let ids: Vec<&str> = report.errata.iter().map(|e| e.id.as_str()).collect();
    out.note(format!("errata: {ids:?}"));
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/errata.json");
    let stable = std::fs::read_to_string(&golden)
        .map(|g| g == report.to_json())
        .unwrap_or(false);
    out.check(stable, format!("report matches {}", golden.display()));
    out
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("shape-invariance constancy", shape_invariance),
        ("normalization constants", normalization_constants),
        ("Schrödinger residual", residuals),
        ("Coulomb spectrum", coulomb_spectrum),
        ("special functions", special_functions),
        ("localization pole", localization),
        ("classification table", classification),
        ("D = 3 consistency", three_dimensional_consistency),
        ("cross-construction and erratum report", cross_construction),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let outcome = run();
        println!("{} criterion {}: {title}", if outcome.passed { "PASS" } else { "FAIL" }, i + 1);
        for line in &outcome.details {
            println!("    {line}");
        }
        if !outcome.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
