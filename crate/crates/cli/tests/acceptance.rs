//! Acceptance suite. Each test prints one `acceptance <k> <name>: PASS|FAIL`
//! line and fails if any instance fails. Every criterion is exact; there are
//! no numerical tolerances.

use std::process::Command;
use std::sync::OnceLock;

use bracekit::brace::StarCheck;
use bracekit::enumeration::{enumerate_braces, Method};
use bracekit::group::library::{cyclic, elementary_abelian};
use bracekit::ideal::{ideal_lattice, is_simple, quotient_brace};
use bracekit::invariants::{
    brute_force_non_generators, check_a2_in_maximal_ideals, check_gaschutz, check_kutzko,
    check_maximal_prime_criterion, check_radical_characterizations, check_radical_of_ideals,
    check_square_free, non_generators, prime_radical, radical_ideal, schur_embedding,
    small_ideal_sum, wedderburn_decompose, weight, CheckOutcome,
};
use bracekit::ybe::{
    check_solution, derived_solution, indecomposable_derived, is_quandle, permutation_group,
    solution_from_brace, solution_orbits, SetSolution,
};
use bracekit::{trivial_brace, verify_brace, zero_brace, Limits, SkewBrace};

/// `(order, braces)` for orders `1..=10`, enumerated once.
fn corpus() -> &'static [(usize, Vec<SkewBrace>)] {
    static CORPUS: OnceLock<Vec<(usize, Vec<SkewBrace>)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (1..=10)
            .map(|n| {
                let c = enumerate_braces(n, Method::Holomorph).unwrap();
                (n, c.entries.into_iter().map(|e| e.brace).collect())
            })
            .collect()
    })
}

fn upto(max: usize) -> impl Iterator<Item = (usize, &'static SkewBrace)> {
    corpus()
        .iter()
        .filter(move |(n, _)| *n <= max)
        .flat_map(|(n, bs)| bs.iter().enumerate().map(move |(i, b)| (*n, i, b)))
        .map(|(n, _, b)| (n, b))
}

fn label(n: usize, a: &SkewBrace) -> String {
    let idx = corpus()[n - 1].1.iter().position(|b| b == a).unwrap();
    format!("order {n} #{idx}")
}

/// Prints the criterion line and panics with the first few failures.
fn conclude(k: usize, name: &str, checked: usize, failures: &[String], extra: &str) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "acceptance {k} {name}: {status} ({checked} checked, {} failures{extra})",
        failures.len()
    );
    assert!(
        failures.is_empty(),
        "{name}: {:?}",
        &failures[..failures.len().min(10)]
    );
}

fn lambda_is_homomorphism(a: &SkewBrace) -> Result<(), String> {
    let n = a.order();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if a.lambda(x, a.add(y, z)) != a.add(a.lambda(x, y), a.lambda(x, z)) {
                    return Err(format!("λ_{x} not additive at ({y},{z})"));
                }
                if a.lambda(a.circ(x, y), z) != a.lambda(x, a.lambda(y, z)) {
                    return Err(format!("λ not multiplicative at ({x},{y},{z})"));
                }
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance_1_axiom_suite() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (n, a) in upto(8) {
        checked += 1;
        if let Err(v) = verify_brace(&a.add_rows(), &a.circle_rows()) {
            failures.push(format!("{}: {v}", label(n, a)));
        }
        if let StarCheck::Witness { identity, x, y, z } = a.check_star_identities() {
            failures.push(format!("{}: {identity:?} at ({x},{y},{z})", label(n, a)));
        }
        if let Err(e) = lambda_is_homomorphism(a).and_then(|_| a.check_lambda_laws()) {
            failures.push(format!("{}: {e}", label(n, a)));
        }
    }
    conclude(1, "axiom suite", checked, &failures, "");
}

#[test]
fn acceptance_2_enumeration_cross_check() {
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=5 {
        let h = enumerate_braces(n, Method::Holomorph).unwrap().len();
        let e = enumerate_braces(n, Method::Exhaustive).unwrap().len();
        counts.push(format!("{n}:{h}"));
        if h != e {
            failures.push(format!("order {n}: holomorph {h}, exhaustive {e}"));
        }
    }
    conclude(
        2,
        "enumeration cross-check",
        5,
        &failures,
        &format!(", counts {}", counts.join(" ")),
    );
}

#[test]
fn acceptance_3_weight_ground_truth() {
    let lim = Limits::default();
    let cases = [
        ("C2", trivial_brace(&cyclic(2)), 1),
        ("C2^2", trivial_brace(&elementary_abelian(2, 2)), 2),
        ("C2^3", trivial_brace(&elementary_abelian(2, 3)), 3),
        ("C3^2", trivial_brace(&elementary_abelian(3, 2)), 2),
        ("zero", zero_brace(), 1),
    ];
    let mut failures = Vec::new();
    for (name, a, expected) in &cases {
        let w = weight(a, &lim).unwrap().weight;
        if w != *expected {
            failures.push(format!("{name}: weight {w}, expected {expected}"));
        }
    }
    conclude(3, "weight ground truth", cases.len(), &failures, "");
}

#[test]
fn acceptance_4_radical_laws() {
    let lim = Limits::default();
    let mut failures = Vec::new();
    let mut checked = 0;
    for (n, a) in upto(8) {
        checked += 1;
        let l = label(n, a);
        let rad = radical_ideal(a, &lim).unwrap();
        let q = quotient_brace(a, rad.members()).unwrap();
        let rad_q = radical_ideal(&q.brace, &lim).unwrap();
        if !rad_q.is_zero() {
            failures.push(format!("{l}: Rad(A/Rad A) has order {}", rad_q.len()));
        }
        if !rad.is_subset(&prime_radical(a, &lim).unwrap()) {
            failures.push(format!("{l}: Rad not inside Rad′"));
        }
        let brute = brute_force_non_generators(a).expect("order ≤ 8");
        if &brute != rad.members() || non_generators(a, &lim).unwrap() != brute {
            failures.push(format!("{l}: non-generators differ from Rad"));
        }
        if small_ideal_sum(a, &lim).unwrap().members() != rad.members() {
            failures.push(format!("{l}: sum of small ideals differs from Rad"));
        }
        for outcome in [
            check_radical_characterizations(a, &lim),
            check_radical_of_ideals(a, &lim),
        ] {
            if let CheckOutcome::Fail(why) = outcome.unwrap() {
                failures.push(format!("{l}: {why}"));
            }
        }
    }
    conclude(4, "radical laws", checked, &failures, "");
}

#[test]
fn acceptance_5_theorem_sweep() {
    type Check = fn(&SkewBrace, &Limits) -> bracekit::Result<CheckOutcome>;
    let checks: [(&str, Check); 5] = [
        ("gaschutz", check_gaschutz),
        ("maximal_prime_criterion", check_maximal_prime_criterion),
        ("kutzko", check_kutzko),
        ("a2_in_maximal_ideals", check_a2_in_maximal_ideals),
        ("square_free", check_square_free),
    ];
    let lim = Limits::default();
    let mut failures = Vec::new();
    let mut tallies = vec![(0usize, 0usize); checks.len()];
    let mut checked = 0;
    for (n, a) in upto(10) {
        checked += 1;
        for ((name, check), t) in checks.iter().zip(&mut tallies) {
            match check(a, &lim).unwrap() {
                CheckOutcome::Pass => t.0 += 1,
                CheckOutcome::NotApplicable(_) => t.1 += 1,
                CheckOutcome::Fail(why) => failures.push(format!("{} {name}: {why}", label(n, a))),
            }
        }
        if (n == 6 || n == 10) && weight(a, &lim).unwrap().weight != 1 {
            failures.push(format!("{}: square-free order but weight > 1", label(n, a)));
        }
    }
    let summary: Vec<String> = checks
        .iter()
        .zip(&tallies)
        .map(|((name, _), (pass, na))| format!("{name} {pass} pass/{na} n/a"))
        .collect();
    conclude(
        5,
        "theorem sweep",
        checked,
        &failures,
        &format!("; {}", summary.join(", ")),
    );
}

#[test]
fn acceptance_6_wedderburn() {
    let lim = Limits::default();
    let mut failures = Vec::new();
    let mut checked = 0;
    for (n, a) in upto(8) {
        checked += 1;
        let l = label(n, a);
        let d = match wedderburn_decompose(a, &lim) {
            Ok(d) => d,
            Err(e) => {
                failures.push(format!("{l}: {e}"));
                continue;
            }
        };
        if !d.factors.iter().all(|f| is_simple(f, &lim).unwrap()) {
            failures.push(format!("{l}: non-simple factor"));
        }
        let (q, p, f) = (&d.quotient.brace, &d.product, &d.iso);
        let mut image: Vec<usize> = (0..q.order()).map(|x| f.apply(x)).collect();
        image.sort_unstable();
        image.dedup();
        if q.order() != p.order() || image.len() != p.order() {
            failures.push(format!("{l}: not a bijection"));
            continue;
        }
        let preserves = (0..q.order()).all(|x| {
            (0..q.order()).all(|y| {
                f.apply(q.add(x, y)) == p.add(f.apply(x), f.apply(y))
                    && f.apply(q.circ(x, y)) == p.circ(f.apply(x), f.apply(y))
            })
        });
        if !preserves {
            failures.push(format!("{l}: tables not preserved"));
        }
        let maximal = ideal_lattice(a, &lim).unwrap();
        if !d.maximal_ideals.iter().all(|m| maximal.is_maximal(m)) {
            failures.push(format!("{l}: factor kernel not maximal"));
        }
    }
    conclude(6, "wedderburn", checked, &failures, "");
}

#[test]
fn acceptance_7_schur_embedding() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (n, a) in upto(8) {
        checked += 1;
        let r = schur_embedding(a);
        if !(r.well_defined && r.injective) {
            failures.push(format!("{}: witness {:?}", label(n, a), r.witness));
        }
    }
    conclude(7, "schur embedding", checked, &failures, "");
}

#[test]
fn acceptance_8_ybe_suite() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (n, a) in upto(8) {
        checked += 1;
        let c = check_solution(&solution_from_brace(a));
        if !(c.is_bijective && c.is_ybe && c.is_nondegenerate) {
            failures.push(format!("{}: brace solution fails {c:?}", label(n, a)));
        }
        if a.additive_group().is_abelian() && !c.is_involutive {
            failures.push(format!("{}: abelian but not involutive", label(n, a)));
        }
    }

    // σ_x = (0 1), τ_y = (2 3) on four points
    let (s, t) = ([1, 0, 2, 3], [0, 1, 3, 2]);
    let tf = SetSolution::from_fns(4, |_, y| s[y], |_, x| t[x]).unwrap();
    let c = check_solution(&tf);
    let orbits = solution_orbits(&tf);
    let group = permutation_group(&tf, 100).unwrap().order;
    checked += 1;
    if !(c.is_ybe && c.is_nondegenerate && !c.is_involutive && orbits.len() == 2 && group == 2) {
        failures.push(format!(
            "transposition pair: {c:?}, orbits {orbits:?}, group order {group}"
        ));
    }

    // r(x, y) = (2y, x + 2y) on C3
    let c3 = SetSolution::from_fns(3, |_, y| 2 * y % 3, |y, x| (x + 2 * y) % 3).unwrap();
    let c = check_solution(&c3);
    let d = derived_solution(&c3).unwrap();
    let expected = (0..3).all(|x| (0..3).all(|y| d.apply(x, y) == (y, (2 * x + 2 * y) % 3)));
    checked += 1;
    if !(c.is_ybe
        && c.is_nondegenerate
        && expected
        && is_quandle(&d).unwrap()
        && indecomposable_derived(&d).unwrap().indecomposable)
    {
        failures.push(format!("C3 example: {c:?}, derived {:?}", d.tau_rows()));
    }
    conclude(8, "ybe suite", checked, &failures, "");
}

#[test]
fn acceptance_9_determinism() {
    let cache = tempfile::tempdir().unwrap();
    let run = |args: &[&str]| {
        let o = Command::new(env!("CARGO_BIN_EXE_bracekit"))
            .args(args)
            .env("BRACEKIT_CACHE", cache.path())
            .output()
            .unwrap();
        assert_eq!(
            o.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
        o.stdout
    };
    let serial = run(&["sweep", "8", "--jobs", "1", "--no-cache"]);
    let parallel = run(&["sweep", "8", "--jobs", "8"]);
    let cached = run(&["sweep", "8", "--jobs", "8"]);
    let mut failures = Vec::new();
    if serial != parallel {
        failures.push("--jobs 1 and --jobs 8 differ".to_string());
    }
    if parallel != cached {
        failures.push("cached run differs".to_string());
    }
    if serde_json::from_slice::<serde_json::Value>(&serial).is_err() {
        failures.push("output is not JSON".to_string());
    }
    conclude(
        9,
        "determinism",
        3,
        &failures,
        &format!(", {} bytes", serial.len()),
    );
}
