use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use serde::Serialize;

use bracekit::ybe::{
    check_solution, derived_solution, indecomposable_derived, is_quandle, is_trivial_solution,
    permutation_group, solution_from_brace, solution_orbits, DerivedOrbits,
    PermutationGroupSummary, SetSolution, SolutionCheck,
};
use bracekit::{Result, SkewBrace};

use crate::args::YbeCommand;
use crate::commands::{read_json, to_json, CHECK_FAILED};

pub fn run(cmd: YbeCommand, max_perm_group: usize) -> Result<ExitCode> {
    match cmd {
        YbeCommand::Check {
            solution,
            witness,
            json,
        } => check(&read_json(&solution)?, witness, json),
        YbeCommand::FromBrace { brace, out } => {
            let a: SkewBrace = read_json(&brace)?;
            write_or_print(&solution_from_brace(&a), out.as_deref())
        }
        YbeCommand::Derived {
            solution,
            out,
            json,
        } => derived(&read_json(&solution)?, out.as_deref(), json),
        YbeCommand::Group { solution, json } => group(&read_json(&solution)?, json, max_perm_group),
    }
}

fn write_or_print(s: &SetSolution, out: Option<&Path>) -> Result<ExitCode> {
    let text = to_json(s) + "\n";
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
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

fn check(s: &SetSolution, witness: bool, json: bool) -> Result<ExitCode> {
    let c: SolutionCheck = check_solution(s);
    let solution = c.is_bijective && c.is_ybe;
    if json {
        println!("{}", to_json(&c));
    } else {
        let mut out = String::new();
        writeln!(out, "size: {}", s.size()).unwrap();
        writeln!(out, "bijective: {}", yes(c.is_bijective)).unwrap();
        writeln!(out, "braid relation: {}", yes(c.is_ybe)).unwrap();
        writeln!(out, "non-degenerate: {}", yes(c.is_nondegenerate)).unwrap();
        writeln!(out, "involutive: {}", yes(c.is_involutive)).unwrap();
        if !c.is_involutive {
            writeln!(out, "injectivity unknown").unwrap();
        }
        if witness {
            if let Some([p, q]) = c.bijectivity_witness {
                writeln!(out, "r{p:?} = r{q:?}").unwrap();
            }
            if let Some(t) = c.braid_witness {
                writeln!(out, "braid relation fails at {t:?}").unwrap();
            }
            if let Some(d) = c.degeneracy_witness {
                writeln!(out, "not a bijection: {d:?}").unwrap();
            }
            if let Some(p) = c.involutivity_witness {
                writeln!(out, "r² moves {p:?}").unwrap();
            }
        }
        print!("{out}");
    }
    Ok(if solution {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(CHECK_FAILED)
    })
}

#[derive(Serialize)]
struct DerivedJson {
    solution: SetSolution,
    is_quandle: bool,
    orbits: DerivedOrbits,
}

fn derived(s: &SetSolution, out: Option<&Path>, json: bool) -> Result<ExitCode> {
    let d = derived_solution(s)?;
    let quandle = is_quandle(&d)?;
    let orbits = indecomposable_derived(&d)?;
    if let Some(path) = out {
        fs::write(path, to_json(&d) + "\n")?;
    }
    if json {
        println!(
            "{}",
            to_json(&DerivedJson {
                solution: d,
                is_quandle: quandle,
                orbits,
            })
        );
        return Ok(ExitCode::SUCCESS);
    }
    let mut text = String::new();
    writeln!(text, "y ▷ x (row y, column x):").unwrap();
    for row in d.tau_rows() {
        writeln!(text, "  {row:?}").unwrap();
    }
    writeln!(text, "quandle: {}", yes(quandle)).unwrap();
    writeln!(text, "indecomposable: {}", yes(orbits.indecomposable)).unwrap();
    writeln!(text, "orbits: {:?}", orbits.orbits).unwrap();
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct GroupJson {
    permutation_group: PermutationGroupSummary,
    solution_orbits: Vec<Vec<usize>>,
    trivial: bool,
}

fn group(s: &SetSolution, json: bool, cap: usize) -> Result<ExitCode> {
    let g = permutation_group(s, cap)?;
    let orbits = solution_orbits(s);
    let trivial = is_trivial_solution(s);
    if json {
        println!(
            "{}",
            to_json(&GroupJson {
                permutation_group: g,
                solution_orbits: orbits,
                trivial,
            })
        );
        return Ok(ExitCode::SUCCESS);
    }
    let mut text = String::new();
    writeln!(text, "permutation group order: {}", g.order).unwrap();
    for p in &g.generators {
        writeln!(text, "  generator {p:?}").unwrap();
    }
    writeln!(text, "group orbits: {:?}", g.orbits).unwrap();
    writeln!(
        text,
        "solution orbits: {:?} ({} total)",
        orbits,
        orbits.len()
    )
    .unwrap();
    writeln!(text, "trivial solution: {}", yes(trivial)).unwrap();
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}
