//! Summary reports for a single brace and for whole catalogs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::brace::SkewBrace;
use crate::elements::ElementSet;
use crate::enumeration::{BraceCatalog, Method};
use crate::error::Result;
use crate::group::library::identify;
use crate::group::FiniteGroup;
use crate::ideal::{a2, additive_commutator, annihilator, fix, ideal_lattice, is_simple, socle};
use crate::invariants::{
    is_perfect, radical, run_all_checks, solvable_series, wedderburn_decompose, weight, NamedCheck,
    RadicalReport, WeightCertificate,
};
use crate::ybe::{check_solution, solution_from_brace};
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    /// Library name, when the order is covered by the built-in tables.
    pub name: Option<String>,
    pub abelian: bool,
    /// Invariant factors, for abelian groups.
    pub abelian_invariants: Option<Vec<usize>>,
    /// Sorted element orders.
    pub order_profile: Vec<usize>,
}

impl GroupSummary {
    pub fn of(g: &FiniteGroup) -> Self {
        let abelian = g.is_abelian();
        GroupSummary {
            name: identify(g).map(str::to_string),
            abelian,
            abelian_invariants: abelian.then(|| g.abelian_invariants()),
            order_profile: g.order_profile(),
        }
    }

    /// The library name, else the invariant factors, else the order profile.
    pub fn label(&self) -> String {
        if let Some(name) = &self.name {
            return name.clone();
        }
        match &self.abelian_invariants {
            Some(inv) if inv.is_empty() => "C1".to_string(),
            Some(inv) => inv
                .iter()
                .map(|k| format!("C{k}"))
                .collect::<Vec<_>>()
                .join("x"),
            None => format!("orders{:?}", self.order_profile),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceReport {
    pub order: usize,
    pub additive_group: GroupSummary,
    pub circle_group: GroupSummary,
    pub is_trivial: bool,
    pub ideal_count: usize,
    pub socle: ElementSet,
    pub annihilator: ElementSet,
    pub fix: ElementSet,
    pub a2: ElementSet,
    pub additive_commutator: ElementSet,
    pub radical: RadicalReport,
    pub weight: WeightCertificate,
    pub is_simple: bool,
    pub is_solvable: bool,
    pub is_perfect: bool,
    pub solvable_series_sizes: Vec<usize>,
    pub wedderburn_factor_orders: Vec<usize>,
    /// For trivial braces: whether `Rad(A)` differs from the Frattini
    /// subgroup of the additive group.
    pub frattini_differs: Option<bool>,
}

pub fn brace_report(a: &SkewBrace, limits: &Limits) -> Result<BraceReport> {
    let series = solvable_series(a);
    let rad = radical(a, limits)?;
    let frattini_differs = if a.is_trivial() {
        let phi = a.additive_group().frattini_subgroup(limits.max_order)?;
        Some(phi.members() != rad.radical.members())
    } else {
        None
    };
    Ok(BraceReport {
        order: a.order(),
        additive_group: GroupSummary::of(a.additive_group()),
        circle_group: GroupSummary::of(a.circle_group()),
        is_trivial: a.is_trivial(),
        ideal_count: ideal_lattice(a, limits)?.len(),
        socle: socle(a).into_members(),
        annihilator: annihilator(a).into_members(),
        fix: fix(a),
        a2: a2(a).into_members(),
        additive_commutator: additive_commutator(a),
        radical: rad,
        weight: weight(a, limits)?,
        is_simple: is_simple(a, limits)?,
        is_solvable: series.is_solvable(),
        is_perfect: is_perfect(a),
        solvable_series_sizes: series.terms.iter().map(ElementSet::len).collect(),
        wedderburn_factor_orders: wedderburn_decompose(a, limits)?.factor_orders(),
        frattini_differs,
    })
}

/// One catalog entry in a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub index: usize,
    pub additive_group: String,
    pub circle_group: String,
    pub ideal_count: usize,
    pub socle: usize,
    pub annihilator: usize,
    pub a2: usize,
    pub radical: usize,
    pub radical_prime: usize,
    pub weight: usize,
    pub is_simple: bool,
    pub is_solvable: bool,
    pub is_perfect: bool,
    pub wedderburn_factor_orders: Vec<usize>,
    pub solution_involutive: bool,
    pub frattini_differs: Option<bool>,
    pub checks: Vec<NamedCheck>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub name: String,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepTable {
    pub order: usize,
    pub method: Method,
    pub rows: Vec<SweepRow>,
    pub tally: Vec<CheckTally>,
    pub perfect_count: usize,
    pub frattini_mismatches: Vec<usize>,
}

impl SweepTable {
    pub fn failures(&self) -> usize {
        self.tally.iter().map(|t| t.fail).sum()
    }
}

fn sweep_row(
    index: usize,
    additive_group: &str,
    a: &SkewBrace,
    limits: &Limits,
) -> Result<SweepRow> {
    let r = brace_report(a, limits)?;
    Ok(SweepRow {
        index,
        additive_group: additive_group.to_string(),
        circle_group: r.circle_group.label(),
        ideal_count: r.ideal_count,
        socle: r.socle.len(),
        annihilator: r.annihilator.len(),
        a2: r.a2.len(),
        radical: r.radical.radical.len(),
        radical_prime: r.radical.radical_prime.len(),
        weight: r.weight.weight,
        is_simple: r.is_simple,
        is_solvable: r.is_solvable,
        is_perfect: r.is_perfect,
        wedderburn_factor_orders: r.wedderburn_factor_orders,
        solution_involutive: check_solution(&solution_from_brace(a)).is_involutive,
        frattini_differs: r.frattini_differs,
        checks: run_all_checks(a, limits)?,
    })
}

/// Report and theorem checks for every entry, computed in parallel on the
/// current rayon pool and returned in catalog order.
pub fn catalog_invariant_sweep(catalog: &BraceCatalog, limits: &Limits) -> Result<SweepTable> {
    let rows: Vec<SweepRow> = catalog
        .entries
        .par_iter()
        .enumerate()
        .map(|(i, e)| sweep_row(i, &e.additive_group, &e.brace, limits))
        .collect::<Result<_>>()?;
    let mut tally: Vec<CheckTally> = crate::invariants::CHECK_NAMES
        .iter()
        .map(|n| CheckTally {
            name: n.to_string(),
            ..Default::default()
        })
        .collect();
    for row in &rows {
        for (t, c) in tally.iter_mut().zip(&row.checks) {
            match c.outcome {
                crate::invariants::CheckOutcome::Pass => t.pass += 1,
                crate::invariants::CheckOutcome::Fail(_) => t.fail += 1,
                crate::invariants::CheckOutcome::NotApplicable(_) => t.not_applicable += 1,
            }
        }
    }
    Ok(SweepTable {
        order: catalog.order,
        method: catalog.method,
        perfect_count: rows.iter().filter(|r| r.is_perfect).count(),
        frattini_mismatches: rows
            .iter()
            .filter(|r| r.frattini_differs == Some(true))
            .map(|r| r.index)
            .collect(),
        tally,
        rows,
    })
}
