//! Left ideals, ideals, distinguished ideals and the ideal lattice.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::brace::SkewBrace;
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::{coset_labels, FiniteGroup};
use crate::Limits;

/// An ideal (or, where documented, left ideal) of a brace.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ideal {
    members: ElementSet,
}

impl Ideal {
    pub(crate) fn new_unchecked(members: ElementSet) -> Self {
        Ideal { members }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn into_members(self) -> ElementSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.members.is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.members.is_full()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// Flags of an ideal relative to the full ideal lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFlags {
    pub is_left_ideal: bool,
    pub is_ideal: bool,
    pub is_maximal: bool,
    pub is_prime: bool,
    pub is_small: bool,
}

/// Why a subset fails to be a (left) ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IdealWitness {
    MissingZero,
    /// `a + b` or `-a` leaves the set.
    NotAdditiveSubgroup {
        a: usize,
        b: usize,
    },
    /// `λ_a(x)` leaves the set.
    NotLambdaStable {
        a: usize,
        x: usize,
    },
    /// `a + x - a` leaves the set.
    NotAdditivelyNormal {
        a: usize,
        x: usize,
    },
    /// `a∘x∘a'` leaves the set.
    NotCircleNormal {
        a: usize,
        x: usize,
    },
    /// `x * a` leaves the set.
    StarNotAbsorbed {
        x: usize,
        a: usize,
    },
}

impl std::fmt::Display for IdealWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IdealWitness::MissingZero => write!(f, "does not contain 0"),
            IdealWitness::NotAdditiveSubgroup { a, b } => {
                write!(f, "not an additive subgroup ({a} - {b} escapes)")
            }
            IdealWitness::NotLambdaStable { a, x } => write!(f, "λ_{a}({x}) escapes"),
            IdealWitness::NotAdditivelyNormal { a, x } => write!(f, "{a} + {x} - {a} escapes"),
            IdealWitness::NotCircleNormal { a, x } => write!(f, "{a}∘{x}∘{a}' escapes"),
            IdealWitness::StarNotAbsorbed { x, a } => write!(f, "{x} * {a} escapes"),
        }
    }
}

fn additive_subgroup_witness(a: &SkewBrace, s: &ElementSet) -> Option<IdealWitness> {
    if !s.contains(0) {
        return Some(IdealWitness::MissingZero);
    }
    for x in s.iter() {
        for y in s.iter() {
            if !s.contains(a.sub(x, y)) {
                return Some(IdealWitness::NotAdditiveSubgroup { a: x, b: y });
            }
        }
    }
    None
}

fn lambda_witness(a: &SkewBrace, s: &ElementSet) -> Option<IdealWitness> {
    for g in 0..a.order() {
        for x in s.iter() {
            if !s.contains(a.lambda(g, x)) {
                return Some(IdealWitness::NotLambdaStable { a: g, x });
            }
        }
    }
    None
}

/// `Ok(())` if `s` is an additive subgroup stable under every `λ_a`.
pub fn check_left_ideal(a: &SkewBrace, s: &ElementSet) -> Result<(), IdealWitness> {
    match additive_subgroup_witness(a, s).or_else(|| lambda_witness(a, s)) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

pub fn is_left_ideal(a: &SkewBrace, s: &ElementSet) -> bool {
    check_left_ideal(a, s).is_ok()
}

/// `Ok(())` if `s` is a left ideal normal in both groups with `s * A ⊆ s`.
pub fn check_ideal(a: &SkewBrace, s: &ElementSet) -> Result<(), IdealWitness> {
    check_left_ideal(a, s)?;
    let n = a.order();
    for g in 0..n {
        for x in s.iter() {
            if !s.contains(a.additive_group().conjugate(g, x)) {
                return Err(IdealWitness::NotAdditivelyNormal { a: g, x });
            }
        }
    }
    for g in 0..n {
        for x in s.iter() {
            if !s.contains(a.circle_group().conjugate(g, x)) {
                return Err(IdealWitness::NotCircleNormal { a: g, x });
            }
        }
    }
    for x in s.iter() {
        for g in 0..n {
            if !s.contains(a.star(x, g)) {
                return Err(IdealWitness::StarNotAbsorbed { x, a: g });
            }
        }
    }
    Ok(())
}

pub fn is_ideal(a: &SkewBrace, s: &ElementSet) -> bool {
    check_ideal(a, s).is_ok()
}

/// Smallest ideal containing `s`.
///
/// Worklist fixpoint: each new element is combined with the current members
/// additively, and pushed through additive conjugation, `λ`, circle
/// conjugation and `∗` on both sides.
pub fn ideal_closure(a: &SkewBrace, s: &ElementSet) -> Ideal {
    let n = a.order();
    let mut members = ElementSet::zero(n);
    let mut list = vec![0usize];
    let mut queue: Vec<usize> = Vec::new();
    let push = |x: usize, members: &mut ElementSet, queue: &mut Vec<usize>| {
        if members.insert(x) {
            queue.push(x);
        }
    };
    for x in s.iter() {
        push(x, &mut members, &mut queue);
    }
    while let Some(x) = queue.pop() {
        list.push(x);
        for g in 0..n {
            push(a.lambda(g, x), &mut members, &mut queue);
            push(a.additive_group().conjugate(g, x), &mut members, &mut queue);
            push(a.circle_group().conjugate(g, x), &mut members, &mut queue);
            push(a.star(x, g), &mut members, &mut queue);
            push(a.star(g, x), &mut members, &mut queue);
        }
        for &y in &list {
            push(a.add(x, y), &mut members, &mut queue);
            push(a.add(y, x), &mut members, &mut queue);
        }
        push(a.neg(x), &mut members, &mut queue);
        if members.is_full() {
            break;
        }
    }
    debug_assert!(is_ideal(a, &members));
    Ideal { members }
}

/// `I + J`, the additive subgroup generated by `I ∪ J`.
pub fn ideal_sum(a: &SkewBrace, i: &Ideal, j: &Ideal) -> Ideal {
    let gens: Vec<usize> = j.members.iter().collect();
    Ideal {
        members: a.additive_group().closure_from(i.members.clone(), &gens),
    }
}

pub fn ideal_intersection(i: &Ideal, j: &Ideal) -> Ideal {
    Ideal {
        members: i.members.intersection(&j.members),
    }
}

/// `Soc(A) = Ker λ ∩ Cen(A,+)`
pub fn socle(a: &SkewBrace) -> Ideal {
    let n = a.order();
    let center = a.additive_group().center();
    let members = ElementSet::from_indices(
        n,
        center
            .members()
            .iter()
            .filter(|&x| a.lambda_row(x).iter().enumerate().all(|(i, &y)| i == y)),
    );
    Ideal { members }
}

/// `Ann(A) = Soc(A) ∩ Cen(A,∘)`
pub fn annihilator(a: &SkewBrace) -> Ideal {
    let center = a.circle_group().center();
    Ideal {
        members: socle(a).members.intersection(center.members()),
    }
}

/// Elements fixed by every `λ_b`; a left ideal.
pub fn fix(a: &SkewBrace) -> ElementSet {
    let n = a.order();
    ElementSet::from_indices(n, (0..n).filter(|&x| (0..n).all(|b| a.lambda(b, x) == x)))
}

/// `[A,A]_+`, the commutator subgroup of the additive group.
pub fn additive_commutator(a: &SkewBrace) -> ElementSet {
    a.additive_group().commutator_subgroup().into_members()
}

/// Additive subgroup generated by `{ i * j : i ∈ I, j ∈ J }`.
pub fn star_product(a: &SkewBrace, i: &ElementSet, j: &ElementSet) -> ElementSet {
    let n = a.order();
    let mut stars = ElementSet::zero(n);
    for x in i.iter() {
        for y in j.iter() {
            stars.insert(a.star(x, y));
        }
    }
    a.additive_group().subgroup_closure(&stars).into_members()
}

/// `A⁽²⁾`, the additive subgroup generated by all `a * b`; always an ideal.
pub fn a2(a: &SkewBrace) -> Ideal {
    let whole = ElementSet::full(a.order());
    let members = star_product(a, &whole, &whole);
    debug_assert!(is_ideal(a, &members));
    Ideal { members }
}

/// A quotient brace together with its projection.
#[derive(Clone, Debug)]
pub struct QuotientBrace {
    pub brace: SkewBrace,
    /// `projection[x]` is the label of the coset `x + I`.
    pub projection: Vec<usize>,
    /// Smallest member of each coset, indexed by label.
    pub representatives: Vec<usize>,
}

impl QuotientBrace {
    /// Image of a set of elements of the original brace.
    pub fn image(&self, s: &ElementSet) -> ElementSet {
        s.map(self.brace.order(), |x| self.projection[x])
    }

    /// Full preimage of a set of cosets.
    pub fn preimage(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.projection.len(),
            (0..self.projection.len()).filter(|&x| s.contains(self.projection[x])),
        )
    }
}

pub fn quotient_brace(a: &SkewBrace, i: &ElementSet) -> Result<QuotientBrace> {
    check_ideal(a, i).map_err(|w| Error::NotIdeal(w.to_string()))?;
    let (projection, representatives) = coset_labels(a.additive_group(), i);
    let m = representatives.len();
    let mut add = Vec::with_capacity(m * m);
    let mut circle = Vec::with_capacity(m * m);
    for &x in &representatives {
        for &y in &representatives {
            add.push(projection[a.add(x, y)]);
            circle.push(projection[a.circ(x, y)]);
        }
    }
    let brace = SkewBrace::from_groups_unchecked(
        FiniteGroup::from_verified_table(m, add),
        FiniteGroup::from_verified_table(m, circle),
    );
    Ok(QuotientBrace {
        brace,
        projection,
        representatives,
    })
}

/// A sub-brace relabeled to `0..|I|`.
#[derive(Clone, Debug)]
pub struct SubBrace {
    pub brace: SkewBrace,
    /// `embedding[k]` is the element of the ambient brace labeled `k`.
    pub embedding: Vec<usize>,
    ambient_order: usize,
}

impl SubBrace {
    /// Maps a set of sub-brace labels back into the ambient brace.
    pub fn lift(&self, s: &ElementSet) -> ElementSet {
        s.map(self.ambient_order, |k| self.embedding[k])
    }
}

/// Restricts both operations to `s`, which must be closed under `+`, `-`,
/// `∘` and `'` (true for ideals and left ideals).
pub fn sub_brace(a: &SkewBrace, s: &ElementSet) -> Result<SubBrace> {
    let embedding: Vec<usize> = s.iter().collect();
    if embedding.first() != Some(&0) {
        return Err(Error::NotClosed("missing 0".into()));
    }
    let mut label = vec![usize::MAX; a.order()];
    for (k, &x) in embedding.iter().enumerate() {
        label[x] = k;
    }
    let m = embedding.len();
    let mut add = Vec::with_capacity(m * m);
    let mut circle = Vec::with_capacity(m * m);
    for &x in &embedding {
        for &y in &embedding {
            let (p, q) = (a.add(x, y), a.circ(x, y));
            if label[p] == usize::MAX {
                return Err(Error::NotClosed(format!("{x} + {y} = {p} escapes")));
            }
            if label[q] == usize::MAX {
                return Err(Error::NotClosed(format!("{x} ∘ {y} = {q} escapes")));
            }
            add.push(label[p]);
            circle.push(label[q]);
        }
    }
    // closed under both products in a finite group implies subgroup
    let brace = SkewBrace::from_groups_unchecked(
        FiniteGroup::from_verified_table(m, add),
        FiniteGroup::from_verified_table(m, circle),
    );
    Ok(SubBrace {
        brace,
        embedding,
        ambient_order: a.order(),
    })
}

/// The ideal lattice of a brace, sorted by size then members.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    ideals: Vec<Ideal>,
    maximal: Vec<usize>,
}

impl IdealLattice {
    fn build(a: &SkewBrace, limit: usize) -> Result<Self> {
        let normals = a.additive_group().all_normal_subgroups(limit)?;
        // cheapest filters first
        let ideals: Vec<Ideal> = normals
            .into_par_iter()
            .map(|s| s.into_members())
            .filter(|s| lambda_witness(a, s).is_none())
            .filter(|s| a.circle_group().normality_witness(s).is_none())
            .filter(|s| {
                s.iter()
                    .all(|x| (0..a.order()).all(|g| s.contains(a.star(x, g))))
            })
            .map(|members| Ideal { members })
            .collect();
        let n = a.order();
        let maximal = (0..ideals.len())
            .filter(|&k| {
                ideals[k].len() < n
                    && !ideals
                        .iter()
                        .any(|j| j.len() < n && j.len() > ideals[k].len() && ideals[k].is_subset(j))
            })
            .collect();
        Ok(IdealLattice { ideals, maximal })
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn maximal_ideals(&self) -> impl Iterator<Item = &Ideal> {
        self.maximal.iter().map(|&k| &self.ideals[k])
    }

    pub fn is_maximal(&self, i: &Ideal) -> bool {
        self.maximal_ideals().any(|m| m == i)
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }
}

/// The memoized ideal lattice of `a`.
pub fn ideal_lattice<'a>(a: &'a SkewBrace, limits: &Limits) -> Result<&'a IdealLattice> {
    if let Some(l) = a.lattice.get() {
        return Ok(l);
    }
    let built = IdealLattice::build(a, limits.max_order)?;
    Ok(a.lattice.get_or_init(|| built))
}

pub fn all_ideals(a: &SkewBrace, limits: &Limits) -> Result<Vec<Ideal>> {
    Ok(ideal_lattice(a, limits)?.ideals().to_vec())
}

/// Proper ideals with no ideal strictly between them and the whole brace.
pub fn maximal_ideals(a: &SkewBrace, limits: &Limits) -> Result<Vec<Ideal>> {
    Ok(ideal_lattice(a, limits)?
        .maximal_ideals()
        .cloned()
        .collect())
}

/// A brace is prime if `I * J ≠ 0` for all non-zero ideals `I`, `J`.
pub fn is_prime_brace(a: &SkewBrace, limits: &Limits) -> Result<bool> {
    let lattice = ideal_lattice(a, limits)?;
    let nonzero: Vec<&Ideal> = lattice.ideals().iter().filter(|i| !i.is_zero()).collect();
    Ok(nonzero.iter().all(|i| {
        nonzero.iter().all(|j| {
            i.members
                .iter()
                .any(|x| j.members.iter().any(|y| a.star(x, y) != 0))
        })
    }))
}

/// `P` is prime if it is proper and `A/P` is a prime brace.
pub fn is_prime_ideal(a: &SkewBrace, p: &Ideal, limits: &Limits) -> Result<bool> {
    if p.is_whole() {
        return Ok(false);
    }
    let q = quotient_brace(a, &p.members)?;
    is_prime_brace(&q.brace, limits)
}

/// `I` is small if `I + J = A` forces `J = A` for every ideal `J`.
pub fn is_small_ideal(a: &SkewBrace, i: &Ideal, limits: &Limits) -> Result<bool> {
    let lattice = ideal_lattice(a, limits)?;
    Ok(lattice
        .ideals()
        .iter()
        .filter(|j| !j.is_whole())
        .all(|j| !ideal_sum(a, i, j).is_whole()))
}

pub fn ideal_flags(a: &SkewBrace, i: &Ideal, limits: &Limits) -> Result<IdealFlags> {
    let is_ideal = is_ideal(a, &i.members);
    let lattice = ideal_lattice(a, limits)?;
    Ok(IdealFlags {
        is_left_ideal: is_left_ideal(a, &i.members),
        is_ideal,
        is_maximal: lattice.is_maximal(i),
        is_prime: is_ideal && is_prime_ideal(a, i, limits)?,
        is_small: is_ideal && is_small_ideal(a, i, limits)?,
    })
}

pub fn is_simple(a: &SkewBrace, limits: &Limits) -> Result<bool> {
    Ok(a.order() > 1 && ideal_lattice(a, limits)?.len() == 2)
}
