//! Executable forms of the structural theorems about radicals and weight.
//!
//! Each check returns [`CheckOutcome::Pass`] when the statement holds on the
//! given brace, a witness on failure, and [`CheckOutcome::NotApplicable`]
//! when the hypotheses do not hold.

use serde::{Deserialize, Serialize};

use super::{
    generates, is_perfect, is_solvable, prime_radical, radical, radical_ideal, small_ideal_sum,
    wedderburn_decompose, weight, weight_with, WeightOptions,
};
use crate::brace::{direct_product, semidirect_product, trivial_brace, SkewBrace};
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::{coset_labels, generating_set, library::cyclic};
use crate::ideal::{
    a2, additive_commutator, annihilator, ideal_closure, ideal_lattice, ideal_sum, is_prime_ideal,
    quotient_brace, socle, sub_brace, Ideal,
};
use crate::morphism::Morphism;
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail(String),
    NotApplicable(String),
}

impl CheckOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fail(_))
    }

    pub fn is_not_applicable(&self) -> bool {
        matches!(self, CheckOutcome::NotApplicable(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            CheckOutcome::Pass => "pass",
            CheckOutcome::Fail(_) => "FAIL",
            CheckOutcome::NotApplicable(_) => "n/a",
        }
    }
}

fn fail_unless(ok: bool, msg: impl FnOnce() -> String) -> CheckOutcome {
    if ok {
        CheckOutcome::Pass
    } else {
        CheckOutcome::Fail(msg())
    }
}

/// Every maximal ideal `M` contains `[A,A]_+ + A⁽²⁾` or `Soc(A)`, and
/// `A⁽²⁾ ∩ Soc(A) ⊆ Rad(A)`.
pub fn check_gaschutz(a: &SkewBrace, limits: &Limits) -> Result<CheckOutcome> {
    let comm = Ideal::new_unchecked(additive_commutator(a));
    let a2 = a2(a);
    let lower = ideal_sum(a, &comm, &a2);
    let soc = socle(a);
    for m in ideal_lattice(a, limits)?.maximal_ideals() {
        if !lower.is_subset(m) && !soc.is_subset(m) {
            return Ok(CheckOutcome::Fail(format!(
                "maximal ideal {} contains neither [A,A]+A2 = {} nor Soc = {}",
                m.members(),
                lower.members(),
                soc.members()
            )));
        }
    }
    let meet = a2.members().intersection(soc.members());
    let rad = radical_ideal(a, limits)?;
    Ok(fail_unless(meet.is_subset(rad.members()), || {
        format!("A2 ∩ Soc = {meet} not inside Rad = {}", rad.members())
    }))
}

/// A maximal ideal `M` is prime exactly when `A⁽²⁾ ⊄ M`.
pub fn check_maximal_prime_criterion(a: &SkewBrace, limits: &Limits) -> Result<CheckOutcome> {
    let a2 = a2(a);
    let maximal: Vec<Ideal> = ideal_lattice(a, limits)?
        .maximal_ideals()
        .cloned()
        .collect();
    if maximal.is_empty() {
        return Ok(CheckOutcome::NotApplicable("no maximal ideals".into()));
    }
    for m in &maximal {
        let prime = is_prime_ideal(a, m, limits)?;
        if prime == a2.is_subset(m) {
            return Ok(CheckOutcome::Fail(format!(
                "maximal ideal {}: prime = {prime}, A2 ⊆ M = {}",
                m.members(),
                a2.is_subset(m)
            )));
        }
    }
    Ok(CheckOutcome::Pass)
}

/// `ω(A) = ω(A/A⁽²⁾)`.
pub fn check_kutzko(a: &SkewBrace, limits: &Limits) -> Result<CheckOutcome> {
    let w = weight(a, limits)?.weight;
    let q = quotient_brace(a, a2(a).members())?;
    let wq = weight(&q.brace, limits)?.weight;
    Ok(fail_unless(w == wq, || {
        format!("ω(A) = {w} but ω(A/A2) = {wq}")
    }))
}

/// Perfect braces have weight one.
pub fn check_wiegold(a: &SkewBrace, limits: &Limits) -> Result<CheckOutcome> {
    if !is_perfect(a) {
        return Ok(CheckOutcome::NotApplicable("not perfect".into()));
    }
    let w = weight(a, limits)?.weight;
    Ok(fail_unless(w == 1, || {
        format!("perfect brace of weight {w}")
    }))
}

fn is_square_free(n: usize) -> bool {
    (2..=n)
        .take_while(|p| p * p <= n)
        .all(|p| !n.is_multiple_of(p * p))
}

/// `ω(A)` equals the minimal number of generators of the abelianized
/// additive group of `B/B⁽²⁾`, `B = A/Rad(A)` (one for the trivial group),
/// so braces of square-free order have weight one.
pub fn check_square_free(a: &SkewBrace, limits: &Limits) -> Result<CheckOutcome> {
    let w = weight(a, limits)?.weight;
    let rad = radical_ideal(a, limits)?;
    let b = quotient_brace(a, rad.members())?.brace;
    let c = quotient_brace(&b, a2(&b).members())?.brace;
    let ab = c
        .additive_group()
        .quotient_group(&additive_commutator(&c))?
        .group;
    let d = ab.abelian_rank().max(1);
    if w != d {
        return Ok(CheckOutcome::Fail(format!(
            "ω(A) = {w} but the abelianization {:?} needs {d} generators",
            ab.abelian_invariants()
        )));
    }
    Ok(fail_unless(!is_square_free(a.order()) || w == 1, || {
        format!("square-free order {} with ω(A) = {w}", a.order())
    }))
}

/// For every ideal `I`: `Rad(I) ⊆ Rad(A)` and `Rad′(I) ⊆ Rad′(A)`, with
/// `I` viewed as a brace in its own right.
pub fn check_radical_of_ideals(a: &SkewBrace, limits: &Limits) -> Result<CheckOutcome> {
    let rad = radical_ideal(a, limits)?;
    let rad_prime = prime_radical(a, limits)?;
    for i in ideal_lattice(a, limits)?.ideals() {
        let sub = sub_brace(a, i.members())?;
        let r = sub.lift(radical_ideal(&sub.brace, limits)?.members());
        if !r.is_subset(rad.members()) {
            return Ok(CheckOutcome::Fail(format!(
                "Rad of ideal {} is {r}, not inside Rad(A) = {}",
                i.members(),
                rad.members()
            )));
        }
        let rp = sub.lift(prime_radical(&sub.brace, limits)?.members());
        if !rp.is_subset(rad_prime.members()) {
            return Ok(CheckOutcome::Fail(format!(
                "Rad′ of ideal {} is {rp}, not inside Rad′(A) = {}",
                i.members(),
                rad_prime.members()
            )));
        }
    }
    Ok(CheckOutcome::Pass)
}

/// Largest order for which non-generators are brute-forced over all subsets.
pub const SUBSET_BRUTE_FORCE_MAX_ORDER: usize = 8;

/// Non-generators by definition, quantifying over every subset of `A`.
pub fn brute_force_non_generators(a: &SkewBrace) -> Option<ElementSet> {
    let n = a.order();
    if n > SUBSET_BRUTE_FORCE_MAX_ORDER {
        return None;
    }
    let spans: Vec<bool> = (0u64..1 << n)
        .map(|mask| generates(a, &ElementSet::from_mask(n, mask)))
        .collect();
    Some(ElementSet::from_indices(
        n,
        (0..n).filter(|&x| (0..1usize << n).all(|s| !spans[s | 1 << x] || spans[s])),
    ))
}

/// `Rad(A)` is the set of non-generators and also the sum of all small
/// ideals. Non-generators come from the ideal lattice, and additionally from
/// every subset when the order allows it.
pub fn check_radical_characterizations(a: &SkewBrace, limits: &Limits) -> Result<CheckOutcome> {
    let report = radical(a, limits)?;
    let rad = report.radical.members();
    if let Some(brute) = brute_force_non_generators(a) {
        if brute != *rad {
            return Ok(CheckOutcome::Fail(format!(
                "non-generators {brute} != Rad {rad}"
            )));
        }
    }
    if report.non_generators != *rad {
        return Ok(CheckOutcome::Fail(format!(
            "lattice non-generators {} != Rad {rad}",
            report.non_generators
        )));
    }
    let small = small_ideal_sum(a, limits)?;
    Ok(fail_unless(small.members() == rad, || {
        format!("sum of small ideals {} != Rad {rad}", small.members())
    }))
}

/// In a solvable brace every maximal ideal, hence `Rad(A)`, contains `A⁽²⁾`.
pub fn check_a2_in_maximal_ideals(a: &SkewBrace, limits: &Limits) -> Result<CheckOutcome> {
    if !is_solvable(a) {
        return Ok(CheckOutcome::NotApplicable("not solvable".into()));
    }
    let a2 = a2(a);
    for m in ideal_lattice(a, limits)?.maximal_ideals() {
        if !a2.is_subset(m) {
            return Ok(CheckOutcome::Fail(format!(
                "A2 = {} not inside maximal ideal {}",
                a2.members(),
                m.members()
            )));
        }
    }
    let rad = radical_ideal(a, limits)?;
    Ok(fail_unless(a2.is_subset(&rad), || {
        format!("A2 = {} not inside Rad = {}", a2.members(), rad.members())
    }))
}

/// `Rad(A/Rad(A)) = 0`.
pub fn check_radical_of_quotient(a: &SkewBrace, limits: &Limits) -> Result<CheckOutcome> {
    let rad = radical_ideal(a, limits)?;
    let q = quotient_brace(a, rad.members())?;
    let r = radical_ideal(&q.brace, limits)?;
    Ok(fail_unless(r.is_zero() || q.brace.order() == 1, || {
        format!("Rad(A/Rad(A)) = {}", r.members())
    }))
}

/// `Rad(A) ⊆ Rad′(A)`.
pub fn check_radical_in_prime_radical(a: &SkewBrace, limits: &Limits) -> Result<CheckOutcome> {
    let rad = radical_ideal(a, limits)?;
    let rp = prime_radical(a, limits)?;
    Ok(fail_unless(rad.is_subset(&rp), || {
        format!("Rad = {} not inside Rad′ = {}", rad.members(), rp.members())
    }))
}

/// The decomposition of `A/Rad(A)` exists, has simple factors and its map
/// is an isomorphism.
pub fn check_wedderburn(a: &SkewBrace, limits: &Limits) -> Result<CheckOutcome> {
    match wedderburn_decompose(a, limits) {
        Ok(_) => Ok(CheckOutcome::Pass),
        Err(crate::Error::CheckFailed(msg)) => Ok(CheckOutcome::Fail(msg)),
        Err(e) => Err(e),
    }
}

fn product_limits(limits: &Limits, order: usize) -> Limits {
    Limits {
        max_order: limits.max_order.max(order),
        ..*limits
    }
}

/// `ω(A × B) = ω(B)` for perfect `A` and trivial `B`.
pub fn check_omega_products(a: &SkewBrace, b: &SkewBrace, limits: &Limits) -> Result<CheckOutcome> {
    if !is_perfect(a) {
        return Ok(CheckOutcome::NotApplicable(
            "first factor not perfect".into(),
        ));
    }
    if !b.is_trivial() {
        return Ok(CheckOutcome::NotApplicable(
            "second factor not trivial".into(),
        ));
    }
    let p = direct_product(a, b)?;
    let lim = product_limits(limits, p.order());
    let opts = WeightOptions { use_radical: false };
    let (wp, wb) = (
        weight_with(&p, opts, &lim)?.weight,
        weight_with(b, opts, &lim)?.weight,
    );
    Ok(fail_unless(wp == wb, || {
        format!("ω(A×B) = {wp} but ω(B) = {wb}")
    }))
}

/// `ω(A ⋊ B) = ω(B)` for perfect `A` and any action `theta` of `B` on `A`.
pub fn check_omega_semidirect(
    a: &SkewBrace,
    b: &SkewBrace,
    theta: &[Morphism],
    limits: &Limits,
) -> Result<CheckOutcome> {
    if !is_perfect(a) {
        return Ok(CheckOutcome::NotApplicable(
            "first factor not perfect".into(),
        ));
    }
    let p = semidirect_product(a, b, theta)?;
    let lim = product_limits(limits, p.order());
    let opts = WeightOptions { use_radical: false };
    let (wp, wb) = (
        weight_with(&p, opts, &lim)?.weight,
        weight_with(b, opts, &lim)?.weight,
    );
    Ok(fail_unless(wp == wb, || {
        format!("ω(A⋊B) = {wp} but ω(B) = {wb}")
    }))
}

/// The map `A/Ann(A) → (A⁽²⁾)^k × (A⁽²⁾)^k × ([A,A]_+)^k` given by
/// `a ↦ (a∗x_i, x_i∗a, [a,x_i]_+)` for additive generators `x_1..x_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurReport {
    pub generators: Vec<usize>,
    /// Whether the generators also generate `(A,∘)`. Injectivity can fail
    /// when they do not.
    pub generates_circle_group: bool,
    /// `|A/Ann(A)|`
    pub quotient_order: usize,
    pub well_defined: bool,
    pub injective: bool,
    /// Two elements witnessing the first failure.
    pub witness: Option<(usize, usize)>,
}

/// The embedding for a minimal additive generating set.
pub fn schur_embedding(a: &SkewBrace) -> SchurReport {
    schur_embedding_with(a, &generating_set(a.additive_group())).expect("generating set generates")
}

/// The embedding for the given additive generators.
pub fn schur_embedding_with(a: &SkewBrace, gens: &[usize]) -> Result<SchurReport> {
    let n = a.order();
    let g = a.additive_group();
    if gens.iter().any(|&x| x >= n) {
        return Err(Error::InvalidMap(format!("generator outside 0..{n}")));
    }
    let set = ElementSet::from_indices(n, gens.iter().copied());
    if !g.subgroup_closure(&set).members().is_full() {
        return Err(Error::InvalidMap(format!(
            "{set} does not generate the additive group"
        )));
    }
    let gens = gens.to_vec();
    let image = |x: usize| -> Vec<usize> {
        let mut v = Vec::with_capacity(3 * gens.len());
        v.extend(gens.iter().map(|&y| a.star(x, y)));
        v.extend(gens.iter().map(|&y| a.star(y, x)));
        // [u,v]_+ = u + v - u - v
        v.extend(
            gens.iter()
                .map(|&y| g.mul(g.mul(g.mul(x, y), g.inv(x)), g.inv(y))),
        );
        v
    };
    let images: Vec<Vec<usize>> = (0..n).map(image).collect();
    let ann = annihilator(a);
    let (label, reps) = coset_labels(g, ann.members());
    let mut report = SchurReport {
        generates_circle_group: a.circle_group().subgroup_closure(&set).members().is_full(),
        generators: gens.clone(),
        quotient_order: reps.len(),
        well_defined: true,
        injective: true,
        witness: None,
    };
    for x in 0..n {
        for y in 0..n {
            let same_coset = label[x] == label[y];
            let same_image = images[x] == images[y];
            if same_coset && !same_image && report.well_defined {
                report.well_defined = false;
                report.witness.get_or_insert((x, y));
            }
            if same_image && !same_coset && report.injective {
                report.injective = false;
                report.witness.get_or_insert((x, y));
            }
        }
    }
    Ok(report)
}

pub fn check_schur_embedding(a: &SkewBrace) -> CheckOutcome {
    let r = schur_embedding(a);
    fail_unless(r.well_defined && r.injective, || {
        format!(
            "well-defined = {}, injective = {}, witness {:?}, generators {:?} generate (A,∘): {}",
            r.well_defined, r.injective, r.witness, r.generators, r.generates_circle_group
        )
    })
}

/// A labeled check outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub outcome: CheckOutcome,
}

/// Names of the checks run by [`run_all_checks`], in output order.
pub const CHECK_NAMES: [&str; 14] = [
    "gaschutz",
    "maximal_prime_criterion",
    "kutzko",
    "wiegold",
    "square_free",
    "radical_of_ideals",
    "radical_characterizations",
    "a2_in_maximal_ideals",
    "radical_of_quotient",
    "radical_in_prime_radical",
    "wedderburn",
    "omega_products",
    "schur_embedding",
    "ideal_closure_is_ideal",
];

/// Runs every check on `a`; the product check pairs `a` with trivial `C₂`.
pub fn run_all_checks(a: &SkewBrace, limits: &Limits) -> Result<Vec<NamedCheck>> {
    let c2 = trivial_brace(&cyclic(2));
    let outcomes = [
        check_gaschutz(a, limits)?,
        check_maximal_prime_criterion(a, limits)?,
        check_kutzko(a, limits)?,
        check_wiegold(a, limits)?,
        check_square_free(a, limits)?,
        check_radical_of_ideals(a, limits)?,
        check_radical_characterizations(a, limits)?,
        check_a2_in_maximal_ideals(a, limits)?,
        check_radical_of_quotient(a, limits)?,
        check_radical_in_prime_radical(a, limits)?,
        check_wedderburn(a, limits)?,
        check_omega_products(a, &c2, limits)?,
        check_schur_embedding(a),
        check_distinguished_ideals(a),
    ];
    Ok(CHECK_NAMES
        .iter()
        .zip(outcomes)
        .map(|(name, outcome)| NamedCheck {
            name: name.to_string(),
            outcome,
        })
        .collect())
}

/// `Soc`, `Ann`, `A⁽²⁾` and the closure of every singleton are ideals.
pub fn check_distinguished_ideals(a: &SkewBrace) -> CheckOutcome {
    use crate::ideal::check_ideal;
    let n = a.order();
    let named = [("Soc", socle(a)), ("Ann", annihilator(a)), ("A2", a2(a))];
    for (name, i) in &named {
        if let Err(w) = check_ideal(a, i.members()) {
            return CheckOutcome::Fail(format!("{name} = {} is not an ideal: {w}", i.members()));
        }
    }
    for x in 0..n {
        let c = ideal_closure(a, &ElementSet::from_indices(n, [x]));
        if let Err(w) = check_ideal(a, c.members()) {
            return CheckOutcome::Fail(format!("closure of {{{x}}} is not an ideal: {w}"));
        }
    }
    CheckOutcome::Pass
}
