use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use bracekit::brace::{verify_brace, SkewBrace, StarCheck};
use bracekit::enumeration::{BraceCatalog, Method};
use bracekit::ideal::{ideal_flags, ideal_lattice, Ideal};
use bracekit::invariants::{radical, wedderburn_decompose, weight_with, NamedCheck, WeightOptions};
use bracekit::report::{brace_report, catalog_invariant_sweep, GroupSummary, SweepTable};
use bracekit::{Error, Limits, Result};

use crate::args::{Bounds, Command, Format};
use crate::cache;

pub const CHECK_FAILED: u8 = 1;
pub const INVALID_INPUT: u8 = 2;
pub const BOUND_EXCEEDED: u8 = 3;

pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::BoundExceeded { .. } => BOUND_EXCEEDED,
        Error::CheckFailed(_) => CHECK_FAILED,
        _ => INVALID_INPUT,
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn emit(out: String) -> Result<ExitCode> {
    print!("{out}");
    if !out.ends_with('\n') {
        println!();
    }
    Ok(ExitCode::SUCCESS)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(command: Command, bounds: Bounds) -> Result<ExitCode> {
    let limits = bounds.limits();
    match command {
        Command::Verify { brace } => verify(&brace),
        Command::Report { brace, json } => report(&read_json(&brace)?, json, &limits),
        Command::Ideals { brace, dot, json } => {
            ideals(&read_json(&brace)?, dot.as_deref(), json, &limits)
        }
        Command::Radical { brace, json } => radical_cmd(&read_json(&brace)?, json, &limits),
        Command::Weight {
            brace,
            no_opt,
            json,
        } => weight_cmd(&read_json(&brace)?, no_opt, json, &limits),
        Command::Decompose { brace, json } => decompose(&read_json(&brace)?, json, &limits),
        Command::Theoremcheck { input, json } => theoremcheck(&input, json, &limits),
        Command::Enumerate {
            n,
            method,
            out,
            no_cache,
        } => enumerate(n, method, out.as_deref(), !no_cache),
        Command::Sweep {
            n,
            method,
            jobs,
            format,
            no_cache,
        } => sweep(n, method, jobs, format, !no_cache, &limits),
        Command::Ybe(cmd) => crate::ybe_cmd::run(cmd, bounds.max_perm_group),
    }
}

#[derive(Deserialize)]
struct RawBrace {
    order: usize,
    add: Vec<Vec<usize>>,
    circle: Vec<Vec<usize>>,
}

fn verify(path: &Path) -> Result<ExitCode> {
    let raw: RawBrace = read_json(path)?;
    if raw.add.len() != raw.order {
        return Err(Error::Brace(bracekit::BraceViolation::OrderMismatch {
            add: raw.add.len(),
            circle: raw.order,
        }));
    }
    let a = verify_brace(&raw.add, &raw.circle)?;
    if let StarCheck::Witness { identity, x, y, z } = a.check_star_identities() {
        println!("star identity {identity:?} fails at ({x}, {y}, {z})");
        return Ok(ExitCode::from(CHECK_FAILED));
    }
    if let Err(msg) = a.check_lambda_laws() {
        println!("λ law fails: {msg}");
        return Ok(ExitCode::from(CHECK_FAILED));
    }
    let mut out = String::new();
    writeln!(out, "valid skew brace").unwrap();
    writeln!(out, "order: {}", a.order()).unwrap();
    writeln!(
        out,
        "additive group: {}",
        GroupSummary::of(a.additive_group()).label()
    )
    .unwrap();
    writeln!(
        out,
        "circle group: {}",
        GroupSummary::of(a.circle_group()).label()
    )
    .unwrap();
    writeln!(out, "left brace: {}", yes(a.is_left_brace())).unwrap();
    writeln!(out, "trivial: {}", yes(a.is_trivial())).unwrap();
    emit(out)
}

fn report(a: &SkewBrace, json: bool, limits: &Limits) -> Result<ExitCode> {
    let r = brace_report(a, limits)?;
    if json {
        return emit(to_json(&r));
    }
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "order: {}", r.order).unwrap();
    writeln!(w, "additive group: {}", r.additive_group.label()).unwrap();
    writeln!(w, "circle group: {}", r.circle_group.label()).unwrap();
    writeln!(w, "trivial: {}", yes(r.is_trivial)).unwrap();
    writeln!(w, "ideals: {}", r.ideal_count).unwrap();
    writeln!(w, "Soc: {}", r.socle).unwrap();
    writeln!(w, "Ann: {}", r.annihilator).unwrap();
    writeln!(w, "Fix: {}", r.fix).unwrap();
    writeln!(w, "A2: {}", r.a2).unwrap();
    writeln!(w, "[A,A]+: {}", r.additive_commutator).unwrap();
    writeln!(w, "Rad: {}", r.radical.radical.members()).unwrap();
    writeln!(w, "Rad': {}", r.radical.radical_prime.members()).unwrap();
    writeln!(
        w,
        "weight: {} (generated by {})",
        r.weight.weight, r.weight.generating_set
    )
    .unwrap();
    writeln!(w, "simple: {}", yes(r.is_simple)).unwrap();
    writeln!(
        w,
        "solvable: {} (series sizes {:?})",
        yes(r.is_solvable),
        r.solvable_series_sizes
    )
    .unwrap();
    writeln!(w, "perfect: {}", yes(r.is_perfect)).unwrap();
    writeln!(
        w,
        "decomposition factor orders: {:?}",
        r.wedderburn_factor_orders
    )
    .unwrap();
    if let Some(d) = r.frattini_differs {
        writeln!(w, "Rad differs from the Frattini subgroup: {}", yes(d)).unwrap();
    }
    emit(out)
}

#[derive(Serialize)]
struct IdealRow {
    members: Vec<usize>,
    size: usize,
    maximal: bool,
    prime: bool,
    small: bool,
}

fn hasse_dot(ideals: &[Ideal]) -> String {
    let mut out = String::from("digraph ideals {\n  rankdir=BT;\n");
    for (i, id) in ideals.iter().enumerate() {
        writeln!(out, "  I{i} [label=\"{}\"];", id.members()).unwrap();
    }
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            let covers = i != j
                && a.is_subset(b)
                && !ideals
                    .iter()
                    .any(|c| c != a && c != b && a.is_subset(c) && c.is_subset(b));
            if covers {
                writeln!(out, "  I{i} -> I{j};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

fn ideals(a: &SkewBrace, dot: Option<&Path>, json: bool, limits: &Limits) -> Result<ExitCode> {
    let lattice = ideal_lattice(a, limits)?;
    let mut rows = Vec::new();
    for i in lattice.ideals() {
        let f = ideal_flags(a, i, limits)?;
        rows.push(IdealRow {
            members: i.members().to_vec(),
            size: i.len(),
            maximal: f.is_maximal,
            prime: f.is_prime,
            small: f.is_small,
        });
    }
    if let Some(path) = dot {
        fs::write(path, hasse_dot(lattice.ideals()))?;
    }
    if json {
        return emit(to_json(&rows));
    }
    let mut out = String::new();
    for (i, r) in lattice.ideals().iter().zip(&rows) {
        let mut flags = Vec::new();
        if r.maximal {
            flags.push("maximal");
        }
        if r.prime {
            flags.push("prime");
        }
        if r.small {
            flags.push("small");
        }
        writeln!(out, "{} size {} {}", i.members(), r.size, flags.join(" ")).unwrap();
    }
    emit(out)
}

fn radical_cmd(a: &SkewBrace, json: bool, limits: &Limits) -> Result<ExitCode> {
    let r = radical(a, limits)?;
    if json {
        return emit(to_json(&r));
    }
    let mut out = String::new();
    writeln!(out, "Rad: {}", r.radical.members()).unwrap();
    writeln!(out, "Rad': {}", r.radical_prime.members()).unwrap();
    writeln!(out, "maximal ideals: {}", r.maximal_ideal_count).unwrap();
    writeln!(out, "non-generators: {}", r.non_generators).unwrap();
    writeln!(out, "sum of small ideals: {}", r.small_ideal_sum.members()).unwrap();
    emit(out)
}

fn weight_cmd(a: &SkewBrace, no_opt: bool, json: bool, limits: &Limits) -> Result<ExitCode> {
    let c = weight_with(
        a,
        WeightOptions {
            use_radical: !no_opt,
        },
        limits,
    )?;
    if json {
        return emit(to_json(&c));
    }
    let mut out = String::new();
    writeln!(out, "weight = {}", c.weight).unwrap();
    writeln!(out, "generating set: {}", c.generating_set).unwrap();
    writeln!(
        out,
        "smaller sets refuted in a brace of order {}",
        c.searched_order
    )
    .unwrap();
    emit(out)
}

#[derive(Serialize)]
struct DecompositionJson<'a> {
    radical: &'a Ideal,
    maximal_ideals: &'a [Ideal],
    factors: &'a [SkewBrace],
    iso: &'a [usize],
}

fn decompose(a: &SkewBrace, json: bool, limits: &Limits) -> Result<ExitCode> {
    let d = wedderburn_decompose(a, limits)?;
    if json {
        return emit(to_json(&DecompositionJson {
            radical: &d.radical,
            maximal_ideals: &d.maximal_ideals,
            factors: &d.factors,
            iso: d.iso.map(),
        }));
    }
    let mut out = String::new();
    writeln!(out, "Rad: {}", d.radical.members()).unwrap();
    writeln!(out, "A/Rad(A) has order {}", d.quotient.brace.order()).unwrap();
    for (m, f) in d.maximal_ideals.iter().zip(&d.factors) {
        writeln!(
            out,
            "factor A/{}: order {}, additive {}, circle {}, trivial {}",
            m.members(),
            f.order(),
            GroupSummary::of(f.additive_group()).label(),
            GroupSummary::of(f.circle_group()).label(),
            yes(f.is_trivial())
        )
        .unwrap();
    }
    writeln!(out, "isomorphism onto the product verified").unwrap();
    emit(out)
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub order: usize,
    pub method: String,
    pub count: usize,
    pub files: Vec<String>,
}

#[derive(Serialize)]
struct CheckedBrace {
    source: String,
    checks: Vec<NamedCheck>,
}

fn theoremcheck(input: &Path, json: bool, limits: &Limits) -> Result<ExitCode> {
    let sources: Vec<PathBuf> = if input.is_dir() {
        let manifest: Manifest = read_json(&input.join("manifest.json"))?;
        manifest.files.iter().map(|f| input.join(f)).collect()
    } else {
        vec![input.to_path_buf()]
    };
    let mut results = Vec::new();
    for path in &sources {
        let a: SkewBrace = read_json(path)?;
        results.push(CheckedBrace {
            source: path.display().to_string(),
            checks: bracekit::invariants::run_all_checks(&a, limits)?,
        });
    }
    let failed = results
        .iter()
        .flat_map(|r| &r.checks)
        .any(|c| c.outcome.is_fail());
    let out = if json {
        to_json(&results)
    } else {
        let mut out = String::new();
        for r in &results {
            writeln!(out, "{}", r.source).unwrap();
            for c in &r.checks {
                let detail = match &c.outcome {
                    bracekit::invariants::CheckOutcome::Pass => String::new(),
                    bracekit::invariants::CheckOutcome::Fail(d)
                    | bracekit::invariants::CheckOutcome::NotApplicable(d) => {
                        format!("  ({d})")
                    }
                };
                writeln!(out, "  {:<28} {}{detail}", c.name, c.outcome.label()).unwrap();
            }
        }
        out
    };
    emit(out)?;
    Ok(if failed {
        ExitCode::from(CHECK_FAILED)
    } else {
        ExitCode::SUCCESS
    })
}

fn write_catalog(catalog: &BraceCatalog, dir: &Path) -> Result<Manifest> {
    fs::create_dir_all(dir)?;
    let mut files = Vec::new();
    for (i, b) in catalog.braces().enumerate() {
        let name = format!("brace-{:03}.json", i);
        fs::write(dir.join(&name), to_json(b) + "\n")?;
        files.push(name);
    }
    let manifest = Manifest {
        order: catalog.order,
        method: catalog.method.to_string(),
        count: catalog.len(),
        files,
    };
    fs::write(dir.join("manifest.json"), to_json(&manifest) + "\n")?;
    Ok(manifest)
}

fn enumerate(
    n: usize,
    method: Method,
    out_dir: Option<&Path>,
    use_cache: bool,
) -> Result<ExitCode> {
    let catalog = cache::catalog(n, method, use_cache)?;
    if let Some(dir) = out_dir {
        write_catalog(&catalog, dir)?;
    }
    let mut out = String::new();
    writeln!(out, "order {n}: {} braces ({method})", catalog.len()).unwrap();
    for (name, k) in catalog.counts_by_additive_group() {
        writeln!(out, "  {name}: {k}").unwrap();
    }
    emit(out)
}

fn sweep_csv(t: &SweepTable) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = [
        "index",
        "additive_group",
        "circle_group",
        "ideals",
        "socle",
        "annihilator",
        "a2",
        "radical",
        "radical_prime",
        "weight",
        "simple",
        "solvable",
        "perfect",
        "factor_orders",
        "involutive",
        "frattini_differs",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    header.extend(
        bracekit::invariants::CHECK_NAMES
            .iter()
            .map(|s| s.to_string()),
    );
    let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(&header).map_err(io)?;
    for r in &t.rows {
        let mut rec = vec![
            r.index.to_string(),
            r.additive_group.clone(),
            r.circle_group.clone(),
            r.ideal_count.to_string(),
            r.socle.to_string(),
            r.annihilator.to_string(),
            r.a2.to_string(),
            r.radical.to_string(),
            r.radical_prime.to_string(),
            r.weight.to_string(),
            r.is_simple.to_string(),
            r.is_solvable.to_string(),
            r.is_perfect.to_string(),
            r.wedderburn_factor_orders
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join("x"),
            r.solution_involutive.to_string(),
            r.frattini_differs.map_or(String::new(), |b| b.to_string()),
        ];
        rec.extend(r.checks.iter().map(|c| c.outcome.label().to_string()));
        w.write_record(&rec).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn sweep(
    n: usize,
    method: Method,
    jobs: usize,
    format: Format,
    use_cache: bool,
    limits: &Limits,
) -> Result<ExitCode> {
    let catalog = cache::catalog(n, method, use_cache)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    let table = pool.install(|| catalog_invariant_sweep(&catalog, limits))?;
    let out = match format {
        Format::Json => to_json(&table),
        Format::Csv => sweep_csv(&table)?,
    };
    emit(out)?;
    for t in &table.tally {
        eprintln!(
            "{:<28} pass {:>3}  fail {:>3}  n/a {:>3}",
            t.name, t.pass, t.fail, t.not_applicable
        );
    }
    eprintln!("perfect braces: {}", table.perfect_count);
    Ok(if table.failures() > 0 {
        ExitCode::from(CHECK_FAILED)
    } else {
        ExitCode::SUCCESS
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use bracekit::group::library::cyclic;
    use bracekit::trivial_brace;

    #[test]
    fn hasse_edges_are_covers() {
        let a = trivial_brace(&cyclic(4));
        let lattice = ideal_lattice(&a, &Limits::default()).unwrap();
        let dot = hasse_dot(lattice.ideals());
        assert!(dot.contains("I0 -> I1;"));
        assert!(dot.contains("I1 -> I2;"));
        assert!(!dot.contains("I0 -> I2;"));
    }

    #[test]
    fn exit_codes() {
        let bound = Error::BoundExceeded {
            what: "x",
            limit: 1,
            actual: 2,
        };
        assert_eq!(exit_code_for(&bound), BOUND_EXCEEDED);
        assert_eq!(exit_code_for(&Error::CheckFailed("x".into())), CHECK_FAILED);
        assert_eq!(exit_code_for(&Error::NotIdeal("x".into())), INVALID_INPUT);
    }
}
