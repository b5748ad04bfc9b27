//! Acceptance criteria 1-6. Each test writes one `PASS`/`FAIL` line to
//! stderr (bypassing the test harness's output capture) before asserting.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scarf_core::fixtures;
use scarf_core::oracles::oracle_colength;
use scarf_core::random::{flip_sign, incidence_sites, random_generic_ideal};
use scarf_core::{
    build_scarf, check_complex, d_sigma_phi, differentials, outer_corners, pairing_multiplicity,
    parse_ideal, partition_cuboid, run_suite, scarf_to_complex, ExponentVector, LabeledComplex,
    Permutation, Resolution, SigmaReport, Staircase,
};
use serde_json::Value;

fn report(criterion: u32, title: &str, failures: &[String], summary: &str) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let detail = if failures.is_empty() {
        summary.to_string()
    } else {
        failures.join("; ")
    };
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "criterion {criterion} [{title}]: {status} - {detail}");
    drop(err);
    assert!(
        failures.is_empty(),
        "criterion {criterion} failed: {detail}"
    );
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn ev<const N: usize>(a: [u32; N]) -> ExponentVector {
    ExponentVector::from(a)
}

fn face_contribution(r: &SigmaReport, label: &ExponentVector) -> BigInt {
    r.faces
        .iter()
        .find(|f| &f.label == label)
        .map(|f| f.contribution.clone())
        .expect("face present")
}

fn run_cli(args: &[&str]) -> (Option<i32>, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_scarf"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code(),
        String::from_utf8(out.stdout).expect("utf-8 output"),
        start.elapsed(),
    )
}

#[test]
fn criterion_1_one_variable() {
    let mut failures = Vec::new();
    let (code, stdout, elapsed) = run_cli(&["dphi", "x1^3", "--format", "json"]);
    check(
        &mut failures,
        code == Some(0),
        format!("exit code {code:?}"),
    );
    let json: Value = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    let sigma = &json["sigmas"][0];
    let face = &sigma["faces"][0];
    check(
        &mut failures,
        face["computed"] == serde_json::json!([[[2], 3]]),
        format!("coefficient {} (expected 3*z^2)", face["computed"]),
    );
    check(
        &mut failures,
        sigma["orientation_sign"] == 1,
        "orientation sign not +1",
    );
    check(&mut failures, face["sign"] == 1, "face sign not +1");
    check(&mut failures, face["match"] == true, "prediction mismatch");
    check(
        &mut failures,
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:?}"),
    );
    report(
        1,
        "dphi x1^3",
        &failures,
        &format!("3*z^2 dz with sign +1 in {:.3}s", elapsed.as_secs_f64()),
    );
}

#[test]
fn criterion_2_genex() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let m = fixtures::genex();
    let corners = outer_corners(&m).unwrap();
    check(
        &mut failures,
        corners.len() == 5,
        format!("{} outer corners", corners.len()),
    );

    let scarf = build_scarf(&m).unwrap();
    let id = Permutation::identity(3);
    let mut cuboids: Vec<String> = scarf
        .top_faces()
        .iter()
        .map(|f| partition_cuboid(&scarf, &id, f).unwrap().to_string())
        .collect();
    cuboids.sort();
    let mut expected = vec![
        "]0,3]x]0,1]x]0,3]",
        "]0,2]x]1,4]x]0,1]",
        "]0,2]x]1,3]x]1,2]",
        "]0,2]x]1,2]x]2,3]",
        "]0,1]x]2,3]x]2,3]",
    ];
    expected.sort();
    check(
        &mut failures,
        cuboids == expected,
        format!("cuboids {cuboids:?}"),
    );

    let oracle = oracle_colength(&m).unwrap();
    let full = Resolution::scarf(&m).unwrap().verify_all().unwrap();
    for r in &full.sigmas {
        check(
            &mut failures,
            r.theorem_holds,
            format!("theorem fails for {}", r.sigma),
        );
        check(
            &mut failures,
            r.pairing == BigInt::from(22) && oracle == 22,
            format!(
                "pairing {} for {} (oracle colength {oracle})",
                r.pairing, r.sigma
            ),
        );
    }
    let (code, _, cli_time) = run_cli(&["dphi", fixtures::GENEX, "--format", "json"]);
    check(
        &mut failures,
        code == Some(0),
        format!("cli exit code {code:?}"),
    );
    let elapsed = start.elapsed();
    check(
        &mut failures,
        elapsed < Duration::from_secs(5),
        format!("took {elapsed:?}"),
    );
    report(
        2,
        "genex",
        &failures,
        &format!(
            "5 corners, printed cuboids for (1,2,3), theorem and pairing 22 for all 6 sigma in {:.3}s (cli {:.3}s)",
            elapsed.as_secs_f64(),
            cli_time.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_3_amsterdam() {
    let mut failures = Vec::new();
    let listed = parse_ideal(fixtures::AMSTERDAM_SWAPPED).unwrap();
    let witness = listed.genericity_witness();
    let z1z2 = ev([1, 1, 0]);
    let z1z3 = ev([1, 0, 1]);
    let ok = witness.as_ref().is_some_and(|w| {
        let (a, b) = &w.generators;
        w.variable == 0 && ((a, b) == (&z1z2, &z1z3) || (a, b) == (&z1z3, &z1z2))
    });
    check(&mut failures, ok, format!("witness {witness:?}"));
    check(
        &mut failures,
        fixtures::amsterdam().permute_variables(&[2, 1, 0]).unwrap() == listed,
        "listed ideal is not the x1<->x3 image of the fixture ideal",
    );

    let st = Staircase::new(&fixtures::amsterdam()).unwrap();
    let (a1, a2) = (ev([2, 2, 1]), ev([1, 1, 2]));
    for sigma in Permutation::all(3) {
        let p = st.partition(&sigma).unwrap();
        let vols = (p.volume_of(&a1).unwrap(), p.volume_of(&a2).unwrap());
        let want = if sigma.apply(0) == 2 { (3, 2) } else { (4, 1) };
        check(
            &mut failures,
            vols == want,
            format!("volumes {vols:?} for {sigma}"),
        );
        if sigma.apply(0) == 2 {
            let piece = &p.part(&a1).unwrap().cells;
            check(
                &mut failures,
                piece.as_cuboid().is_none() && piece.len() == 3,
                format!("alpha1 piece for {sigma} should be a 3-cell non-cuboid"),
            );
        }
    }

    let res = Resolution::from_complex(fixtures::amsterdam_hull().unwrap()).unwrap();
    for r in res.verify_all().unwrap().sigmas {
        check(
            &mut failures,
            r.theorem_holds,
            format!("coefficients differ from signed volumes for {}", r.sigma),
        );
        check(
            &mut failures,
            r.pairing == BigInt::from(5),
            format!("pairing {} for {}", r.pairing, r.sigma),
        );
    }
    report(
        3,
        "amsterdam",
        &failures,
        "witness (z1z2, z1z3) in z1; volumes {4,1} / {3,2} with non-cuboid alpha1; hull coefficients = signed volumes, pairing 5 for all sigma",
    );
}

#[test]
fn criterion_4_motex() {
    let mut failures = Vec::new();
    let (a1, a2, beta) = (ev([3, 2, 1]), ev([2, 3, 1]), ev([2, 2, 1]));
    let hull = Resolution::from_complex(fixtures::motex_hull().unwrap()).unwrap();
    for r in hull.verify_all().unwrap().sigmas {
        let s = r.sigma.to_string();
        if s == "(3,1,2)" {
            let f = r.faces.iter().find(|f| f.label == a1).unwrap();
            check(
                &mut failures,
                f.contribution == BigInt::from(4) && f.volume == 5 && !f.matches,
                format!(
                    "alpha1 for (3,1,2): coefficient {} volume {}",
                    f.contribution, f.volume
                ),
            );
        }
        let b = face_contribution(&r, &beta);
        let want = if s == "(3,1,2)" || s == "(3,2,1)" {
            1
        } else {
            0
        };
        check(
            &mut failures,
            b == BigInt::from(want),
            format!("beta coefficient {b} for {s}"),
        );
        check(
            &mut failures,
            r.pairing == BigInt::from(9),
            format!("hull pairing {} for {s}", r.pairing),
        );
    }

    let minimal = Resolution::from_complex(fixtures::motex_minimal().unwrap()).unwrap();
    let r = minimal.verify(&"3,2,1".parse().unwrap()).unwrap();
    for (label, shift) in [(&a1, 1i64), (&a2, -1)] {
        let f = r.faces.iter().find(|f| &f.label == label).unwrap();
        check(
            &mut failures,
            f.contribution == BigInt::from(f.volume as i64 + shift),
            format!(
                "minimal (3,2,1) {label}: coefficient {} volume {}",
                f.contribution, f.volume
            ),
        );
    }
    check(
        &mut failures,
        r.pairing == BigInt::from(9),
        format!("minimal pairing {}", r.pairing),
    );
    report(
        4,
        "motex",
        &failures,
        "hull: alpha1 = 4 vs Vol 5 for (3,1,2), beta = 1 exactly for (3,1,2),(3,2,1), pairing 9; minimal (3,2,1): Vol+1 / Vol-1, pairing 9",
    );
}

#[test]
fn criterion_5_property_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let mut failures = Vec::new();
    let mut checks = 0;
    for case in 0..200u64 {
        let n = 2 + (case % 3) as usize;
        let m = random_generic_ideal(&mut rng, n, 6, 10);
        let suite = run_suite(&m, case).unwrap();
        checks += suite.checks.len();
        if suite.checks.iter().any(|c| c.passed.is_none()) {
            failures.push(format!("case {case} ({m}): a check was skipped"));
        }
        for c in suite.failures() {
            failures.push(format!("case {case} ({m}): {} {}", c.name, c.detail));
        }
    }
    let elapsed = start.elapsed();
    check(
        &mut failures,
        elapsed < Duration::from_secs(300),
        format!("took {elapsed:?}"),
    );
    report(
        5,
        "property suite",
        &failures,
        &format!(
            "200 generic ideals (n = 2,3,4), {checks} checks passed in {:.2}s",
            elapsed.as_secs_f64()
        ),
    );
}

/// Per-sigma results of one complex under fixed top-cell signs: whether each
/// face matches its baseline prediction, and the pairing.
fn evaluate(
    x: &LabeledComplex,
    signs: &[i64],
    predicted: &[Vec<scarf_core::IntPolynomial>],
) -> (bool, Vec<Vec<bool>>, Vec<BigInt>) {
    let mats = differentials(x).unwrap();
    let mut matches = Vec::new();
    let mut pairings = Vec::new();
    for (sigma, pred) in Permutation::all(x.n).zip(predicted) {
        let form = d_sigma_phi(&mats, &sigma).unwrap();
        matches.push(
            (0..pred.len())
                .map(|t| form.relative_to_dz(t) == pred[t])
                .collect(),
        );
        pairings.push(pairing_multiplicity(&form, x, signs).unwrap().multiplicity);
    }
    (check_complex(&mats), matches, pairings)
}

#[test]
fn criterion_6_mutation_sensitivity() {
    let mut failures = Vec::new();
    let genex = scarf_to_complex(&build_scarf(&fixtures::genex()).unwrap());
    let complexes: Vec<(&str, LabeledComplex)> = vec![
        ("genex", genex),
        ("amsterdam-hull", fixtures::amsterdam_hull().unwrap()),
        ("motex-hull", fixtures::motex_hull().unwrap()),
        ("motex-minimal", fixtures::motex_minimal().unwrap()),
    ];
    let mut sites = Vec::new();
    for (i, (_, x)) in complexes.iter().enumerate() {
        sites.extend(incidence_sites(x).into_iter().map(|s| (i, s)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let chosen: Vec<_> = sites.choose_multiple(&mut rng, 10).cloned().collect();

    let mut lines = Vec::new();
    for (i, site) in chosen {
        let (name, x) = &complexes[i];
        let res = Resolution::from_complex(x.clone()).unwrap();
        let colength = BigInt::from(res.staircase().colength().unwrap());
        let predicted: Vec<_> = Permutation::all(x.n)
            .map(|s| res.predicted(&s).unwrap().0)
            .collect();
        let signs = res.signs().to_vec();
        let (_, base_matches, _) = evaluate(x, &signs, &predicted);
        let mutant = flip_sign(x, site);
        let (is_complex, matches, pairings) = evaluate(&mutant, &signs, &predicted);
        let broken_phi = !is_complex;
        let broken_theorem = matches != base_matches;
        let broken_pairing = pairings.iter().any(|p| *p != colength);
        lines.push(format!(
            "{name} {site:?}: phi*phi {}, theorem {}, pairing {}",
            if broken_phi { "broken" } else { "ok" },
            if broken_theorem { "broken" } else { "ok" },
            if broken_pairing { "broken" } else { "ok" },
        ));
        check(
            &mut failures,
            broken_phi || broken_theorem || broken_pairing,
            format!("mutation {name} {site:?} went undetected"),
        );
    }
    report(
        6,
        "mutation sensitivity",
        &failures,
        &format!("10/10 detected [{}]", lines.join("; ")),
    );
}
