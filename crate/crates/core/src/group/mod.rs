//! Finite groups given by explicit operation tables.
//!
//! Elements are the indices `0..n`, with the identity always at index 0.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::elements::ElementSet;
use crate::error::{Error, GroupViolation, Result};

pub mod library;
mod search;

pub use search::{automorphism_group, find_isomorphism, generating_set, is_isomorphic};
pub(crate) use search::{for_each_assignment, Spanning};

/// Default upper bound on the order for lattice-style exhaustive operations.
pub const DEFAULT_MAX_ORDER: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupJson", into = "GroupJson")]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("table", &self.rows())
            .finish()
    }
}

/// A subgroup, stored as the set of its members.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: ElementSet,
}

impl Subgroup {
    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn into_members(self) -> ElementSet {
        self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.members.universe()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }
}

/// Group JSON: `{"order": n, "table": [[...]]}`.
#[derive(Serialize, Deserialize)]
struct GroupJson {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl TryFrom<GroupJson> for FiniteGroup {
    type Error = GroupViolation;

    fn try_from(j: GroupJson) -> Result<Self, GroupViolation> {
        if j.table.len() != j.order {
            return Err(GroupViolation::NotSquare {
                row: 0,
                len: j.table.len(),
                expected: j.order,
            });
        }
        verify_group_axioms(&j.table)
    }
}

impl From<FiniteGroup> for GroupJson {
    fn from(g: FiniteGroup) -> Self {
        GroupJson {
            order: g.order,
            table: g.rows(),
        }
    }
}

/// Result of factoring a group by a normal subgroup.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    pub group: FiniteGroup,
    /// `projection[g]` is the coset label of `g`.
    pub projection: Vec<usize>,
    /// Smallest member of each coset, indexed by label.
    pub representatives: Vec<usize>,
}

/// Validates an operation table and returns the group it defines.
///
/// If the identity is not at index 0 the labels of the identity and 0 are
/// swapped so that downstream code can rely on `0` being neutral.
pub fn verify_group_axioms(rows: &[Vec<usize>]) -> Result<FiniteGroup, GroupViolation> {
    let (identity, table) = check_table(rows)?;
    let n = rows.len();
    let table = relabel_identity(n, identity, &table);
    Ok(FiniteGroup::from_verified_table(n, table))
}

/// Swaps labels `0` and `identity` in a flat table.
pub(crate) fn relabel_identity(n: usize, identity: usize, table: &[usize]) -> Vec<usize> {
    if identity == 0 {
        return table.to_vec();
    }
    let swap = |x: usize| {
        if x == 0 {
            identity
        } else if x == identity {
            0
        } else {
            x
        }
    };
    let mut t = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            t[swap(a) * n + swap(b)] = swap(table[a * n + b]);
        }
    }
    t
}

/// Checks the group axioms without relabeling; returns the identity and the
/// flat table.
pub(crate) fn check_table(rows: &[Vec<usize>]) -> Result<(usize, Vec<usize>), GroupViolation> {
    let n = rows.len();
    if n == 0 {
        return Err(GroupViolation::Empty);
    }
    let mut table = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(GroupViolation::NotSquare {
                row: r,
                len: row.len(),
                expected: n,
            });
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(GroupViolation::OutOfRange {
                    row: r,
                    col: c,
                    value: v,
                    order: n,
                });
            }
        }
        table.extend_from_slice(row);
    }
    let at = |a: usize, b: usize| table[a * n + b];

    let identity = (0..n)
        .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
        .ok_or(GroupViolation::NoIdentity)?;

    for a in 0..n {
        if !(0..n).any(|b| at(a, b) == identity && at(b, a) == identity) {
            return Err(GroupViolation::NoInverse { element: a });
        }
    }

    let mut seen = vec![usize::MAX; n];
    for r in 0..n {
        seen.fill(usize::MAX);
        for c in 0..n {
            let v = at(r, c);
            if seen[v] != usize::MAX {
                return Err(GroupViolation::RowRepeat {
                    row: r,
                    value: v,
                    first: seen[v],
                    second: c,
                });
            }
            seen[v] = c;
        }
    }
    for c in 0..n {
        seen.fill(usize::MAX);
        for r in 0..n {
            let v = at(r, c);
            if seen[v] != usize::MAX {
                return Err(GroupViolation::ColumnRepeat {
                    col: c,
                    value: v,
                    first: seen[v],
                    second: r,
                });
            }
            seen[v] = r;
        }
    }

    for a in 0..n {
        for b in 0..n {
            let ab = at(a, b);
            for c in 0..n {
                let left = at(ab, c);
                let right = at(a, at(b, c));
                if left != right {
                    return Err(GroupViolation::NotAssociative {
                        a,
                        b,
                        c,
                        left,
                        right,
                    });
                }
            }
        }
    }

    Ok((identity, table))
}

impl FiniteGroup {
    /// Builds a group from a flat table that is already known to satisfy the
    /// axioms with identity 0.
    pub(crate) fn from_verified_table(order: usize, table: Vec<usize>) -> Self {
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| table[a * order + b] == 0)
                    .expect("verified table has inverses")
            })
            .collect();
        FiniteGroup {
            order,
            table,
            inverse,
        }
    }

    /// Builds and verifies the group on `0..n` with product `f`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, GroupViolation> {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        verify_group_axioms(&rows)
    }

    /// Group generated by the given permutations under composition
    /// `(p·q)(x) = p(q(x))`. The identity permutation becomes element 0 and
    /// the remaining elements are numbered in breadth-first discovery order.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Result<Self, GroupViolation> {
        let degree = generators.first().map_or(0, Vec::len);
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity];
        let mut index = std::collections::HashMap::new();
        index.insert(elements[0].clone(), 0usize);
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let p: Vec<usize> = elements[i].iter().map(|&x| g[x]).collect();
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            i += 1;
        }
        let n = elements.len();
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let p: Vec<usize> = elements[b].iter().map(|&x| elements[a][x]).collect();
                        index[&p]
                    })
                    .collect()
            })
            .collect();
        verify_group_axioms(&rows)
    }

    pub fn trivial() -> Self {
        FiniteGroup::from_verified_table(1, vec![0])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a * b * a⁻¹`
    #[inline]
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    /// `a * b * a⁻¹ * b⁻¹`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted list of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    pub fn identity_subgroup(&self) -> Subgroup {
        Subgroup {
            members: ElementSet::zero(self.order),
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: ElementSet::full(self.order),
        }
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        s.contains(0)
            && s.iter()
                .all(|a| s.contains(self.inv(a)) && s.iter().all(|b| s.contains(self.mul(a, b))))
    }

    /// Returns an element witnessing non-normality, if any.
    pub fn normality_witness(&self, s: &ElementSet) -> Option<usize> {
        for x in s.iter() {
            for g in 0..self.order {
                if !s.contains(self.conjugate(g, x)) {
                    return Some(x);
                }
            }
        }
        None
    }

    pub fn is_normal(&self, s: &ElementSet) -> bool {
        self.is_subgroup(s) && self.normality_witness(s).is_none()
    }

    /// Wraps a set that is already known to be a subgroup.
    pub fn subgroup_unchecked(&self, members: ElementSet) -> Subgroup {
        debug_assert!(self.is_subgroup(&members));
        Subgroup { members }
    }

    pub fn center(&self) -> Subgroup {
        let members = ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a))),
        );
        Subgroup { members }
    }

    pub fn subgroup_closure(&self, s: &ElementSet) -> Subgroup {
        let gens: Vec<usize> = s.iter().filter(|&g| g != 0).collect();
        Subgroup {
            members: self.closure_from(ElementSet::zero(self.order), &gens),
        }
    }

    /// Smallest subgroup containing `start` (assumed a subgroup) and `gens`.
    pub(crate) fn closure_from(&self, start: ElementSet, gens: &[usize]) -> ElementSet {
        let mut members = start;
        let mut all_gens: Vec<usize> = members.iter().filter(|&g| g != 0).collect();
        all_gens.extend_from_slice(gens);
        let mut queue: Vec<usize> = members.to_vec();
        for &g in gens {
            if members.insert(g) {
                queue.push(g);
            }
        }
        while let Some(x) = queue.pop() {
            for &g in &all_gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    queue.push(y);
                }
            }
        }
        members
    }

    pub fn normal_closure(&self, s: &ElementSet) -> Subgroup {
        let mut current = ElementSet::zero(self.order);
        let mut pending: Vec<usize> = s.iter().collect();
        // conjugates of the seeds; the closure of a conjugation-stable set is normal
        loop {
            let mut conj = Vec::new();
            for &x in &pending {
                for g in 0..self.order {
                    let y = self.conjugate(g, x);
                    if !current.contains(y) {
                        conj.push(y);
                    }
                }
            }
            if conj.is_empty() {
                break;
            }
            current = self.closure_from(current, &conj);
            pending = current.to_vec();
        }
        Subgroup { members: current }
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let comms = ElementSet::from_indices(
            self.order,
            (0..self.order)
                .flat_map(|a| (0..self.order).map(move |b| (a, b)))
                .map(|(a, b)| self.commutator(a, b)),
        );
        let sub = self.subgroup_closure(&comms);
        debug_assert!(self.is_normal(sub.members()));
        sub
    }

    /// Conjugacy classes, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<ElementSet> {
        let mut seen = ElementSet::empty(self.order);
        let mut classes = Vec::new();
        for a in 0..self.order {
            if seen.contains(a) {
                continue;
            }
            let class =
                ElementSet::from_indices(self.order, (0..self.order).map(|g| self.conjugate(g, a)));
            seen = seen.union(&class);
            classes.push(class);
        }
        classes
    }

    fn check_bound(&self, what: &'static str, limit: usize) -> Result<()> {
        if self.order > limit {
            return Err(Error::BoundExceeded {
                what,
                limit,
                actual: self.order,
            });
        }
        Ok(())
    }

    /// Every normal subgroup, sorted by size and then by members.
    ///
    /// Each normal subgroup is a union of conjugacy classes and hence the join
    /// of the normal closures of its classes; the list is grown by joining
    /// class closures until nothing new appears.
    pub fn all_normal_subgroups(&self, limit: usize) -> Result<Vec<Subgroup>> {
        self.check_bound("normal subgroup lattice", limit)?;
        let class_closures: Vec<ElementSet> = self
            .conjugacy_classes()
            .iter()
            .map(|c| self.normal_closure(c).members)
            .collect();
        Ok(join_closure(self, class_closures))
    }

    /// Every subgroup, sorted by size and then by members.
    pub fn all_subgroups(&self, limit: usize) -> Result<Vec<Subgroup>> {
        self.check_bound("subgroup lattice", limit)?;
        let cyclic: Vec<ElementSet> = (0..self.order)
            .map(|g| {
                self.subgroup_closure(&ElementSet::from_indices(self.order, [g]))
                    .members
            })
            .collect();
        Ok(join_closure(self, cyclic))
    }

    /// Intersection of all maximal subgroups (the whole group if trivial).
    pub fn frattini_subgroup(&self, limit: usize) -> Result<Subgroup> {
        let subs = self.all_subgroups(limit)?;
        let proper: Vec<&Subgroup> = subs.iter().filter(|s| s.order() < self.order).collect();
        let mut acc = ElementSet::full(self.order);
        for m in &proper {
            let maximal = !proper
                .iter()
                .any(|t| t.order() > m.order() && m.members.is_subset(&t.members));
            if maximal {
                acc = acc.intersection(&m.members);
            }
        }
        Ok(Subgroup { members: acc })
    }

    pub fn quotient_group(&self, n: &ElementSet) -> Result<QuotientGroup> {
        if !self.is_subgroup(n) {
            return Err(Error::NotNormal {
                witness: n.iter().next().unwrap_or(0),
            });
        }
        if let Some(w) = self.normality_witness(n) {
            return Err(Error::NotNormal { witness: w });
        }
        let (projection, representatives) = coset_labels(self, n);
        let m = representatives.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &representatives {
            for &b in &representatives {
                table.push(projection[self.mul(a, b)]);
            }
        }
        Ok(QuotientGroup {
            group: FiniteGroup::from_verified_table(m, table),
            projection,
            representatives,
        })
    }

    /// Direct product with element `(g, h)` at index `g * |H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order, other.order);
        let mut table = Vec::with_capacity(n * m * n * m);
        for x in 0..n * m {
            for y in 0..n * m {
                let g = self.mul(x / m, y / m);
                let h = other.mul(x % m, y % m);
                table.push(g * m + h);
            }
        }
        FiniteGroup::from_verified_table(n * m, table)
    }

    /// Minimal number of generators of an abelian group: the largest
    /// `p`-rank over primes `p` dividing the order.
    pub fn abelian_rank(&self) -> usize {
        debug_assert!(self.is_abelian());
        let mut best = 0;
        for p in prime_divisors(self.order) {
            // |G / pG| = p^rank
            let p_multiples =
                ElementSet::from_indices(self.order, (0..self.order).map(|g| self.power(g, p)));
            let mut quotient = self.order / p_multiples.len();
            let mut rank = 0;
            while quotient > 1 {
                quotient /= p;
                rank += 1;
            }
            best = best.max(rank);
        }
        best
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    /// Invariant factor decomposition of an abelian group, e.g. `[2, 6]`.
    pub fn abelian_invariants(&self) -> Vec<usize> {
        debug_assert!(self.is_abelian());
        // primary decomposition from counts of elements of order dividing p^k
        let mut primary: Vec<Vec<usize>> = Vec::new();
        for p in prime_divisors(self.order) {
            let mut exps = Vec::new();
            // number of elements with g^(p^k) = 0 is p^{sum_i min(k, e_i)}
            let mut counts = vec![1usize];
            let mut pk = 1;
            loop {
                pk *= p;
                let c = (0..self.order).filter(|&g| self.power(g, pk) == 0).count();
                counts.push(c);
                if c == counts[counts.len() - 2] {
                    break;
                }
            }
            // number of cyclic factors of exponent >= k is log_p(counts[k]/counts[k-1])
            let logs: Vec<usize> = counts
                .windows(2)
                .map(|w| {
                    let mut q = w[1] / w[0];
                    let mut l = 0;
                    while q > 1 {
                        q /= p;
                        l += 1;
                    }
                    l
                })
                .collect();
            for k in 0..logs.len() {
                let at_least = logs[k];
                let at_least_next = logs.get(k + 1).copied().unwrap_or(0);
                for _ in 0..at_least - at_least_next {
                    exps.push(p.pow(k as u32 + 1));
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            primary.push(exps);
        }
        let len = primary.iter().map(Vec::len).max().unwrap_or(0);
        let mut inv: Vec<usize> = (0..len)
            .map(|i| {
                primary
                    .iter()
                    .map(|e| e.get(i).copied().unwrap_or(1))
                    .product()
            })
            .collect();
        inv.reverse();
        inv
    }
}

pub(crate) fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Labels the left cosets `gN` by increasing smallest member.
pub(crate) fn coset_labels(g: &FiniteGroup, n: &ElementSet) -> (Vec<usize>, Vec<usize>) {
    let mut projection = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for a in 0..g.order() {
        if projection[a] != usize::MAX {
            continue;
        }
        let label = reps.len();
        reps.push(a);
        for x in n.iter() {
            projection[g.mul(a, x)] = label;
        }
    }
    (projection, reps)
}

/// Closes a family of subgroups (plus the trivial one) under joins.
fn join_closure(g: &FiniteGroup, seeds: Vec<ElementSet>) -> Vec<Subgroup> {
    let mut found: BTreeSet<ElementSet> = BTreeSet::new();
    found.insert(ElementSet::zero(g.order()));
    let seeds: Vec<ElementSet> = seeds
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut frontier: Vec<ElementSet> = found.iter().cloned().collect();
    while let Some(h) = frontier.pop() {
        for s in &seeds {
            if s.is_subset(&h) {
                continue;
            }
            let gens: Vec<usize> = s.iter().collect();
            let joined = g.closure_from(h.clone(), &gens);
            if found.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    found
        .into_iter()
        .map(|members| Subgroup { members })
        .collect()
}
