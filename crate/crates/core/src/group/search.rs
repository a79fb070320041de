//! Homomorphism search by mapping a generating set.

use super::FiniteGroup;
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::morphism::Morphism;

/// A small generating set, chosen greedily from elements of largest order.
pub fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    generating_set_by(
        g.order(),
        |x| g.element_order(x),
        |s| g.subgroup_closure(s).into_members(),
    )
}

/// Greedy generator selection: scan elements by decreasing rank (ties by
/// index) and keep each one that is not already in the closure.
fn generating_set_by(
    n: usize,
    rank: impl Fn(usize) -> usize,
    closure: impl Fn(&ElementSet) -> ElementSet,
) -> Vec<usize> {
    let mut candidates: Vec<usize> = (1..n).collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(rank(x)), x));
    let mut gens = Vec::new();
    let mut span = ElementSet::zero(n);
    for x in candidates {
        if span.is_full() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = closure(&ElementSet::from_indices(n, gens.iter().copied()));
        }
    }
    gens
}

/// Breadth-first spanning tree of a group over a generating set: every
/// element other than 0 is `parent * gens[k]` for a recorded `(parent, k)`.
pub(crate) struct Spanning {
    pub gens: Vec<usize>,
    bfs: Vec<usize>,
    parent: Vec<(usize, usize)>,
}

impl Spanning {
    pub fn new(gens: Vec<usize>, n: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let mut parent = vec![(usize::MAX, usize::MAX); n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut bfs = vec![0];
        let mut i = 0;
        while i < bfs.len() {
            let x = bfs[i];
            for (k, &g) in gens.iter().enumerate() {
                let y = mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = (x, k);
                    bfs.push(y);
                }
            }
            i += 1;
        }
        assert_eq!(bfs.len(), n, "generators do not span the group");
        Spanning { gens, bfs, parent }
    }

    /// Extends generator images to a map on all elements and checks that it
    /// is a homomorphism into the target operation.
    pub fn extend(
        &self,
        images: &[usize],
        source_mul: impl Fn(usize, usize) -> usize,
        target_mul: impl Fn(usize, usize) -> usize,
    ) -> Option<Vec<usize>> {
        let n = self.bfs.len();
        let mut f = vec![0; n];
        for &x in &self.bfs[1..] {
            let (p, k) = self.parent[x];
            f[x] = target_mul(f[p], images[k]);
        }
        // f(x g) = f(x) f(g) for all x and generators g implies f is a homomorphism
        for x in 0..n {
            for (k, &g) in self.gens.iter().enumerate() {
                if f[source_mul(x, g)] != target_mul(f[x], images[k]) {
                    return None;
                }
            }
        }
        Some(f)
    }
}

/// Enumerates every assignment of generator images drawn from `candidates`
/// (pairwise distinct), calling `visit` on each.
pub(crate) fn for_each_assignment(
    candidates: &[Vec<usize>],
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    fn rec(
        candidates: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let k = chosen.len();
        if k == candidates.len() {
            return visit(chosen);
        }
        for &c in &candidates[k] {
            if chosen.contains(&c) {
                continue;
            }
            chosen.push(c);
            let keep_going = rec(candidates, chosen, visit);
            chosen.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    rec(candidates, &mut Vec::new(), &mut visit);
}

fn is_bijection(f: &[usize]) -> bool {
    let mut hit = vec![false; f.len()];
    f.iter()
        .all(|&y| y < f.len() && !std::mem::replace(&mut hit[y], true))
}

/// All automorphisms of `g`, sorted lexicographically by map (identity first).
pub fn automorphism_group(g: &FiniteGroup, limit: usize) -> Result<Vec<Morphism>> {
    if g.order() > limit {
        return Err(Error::BoundExceeded {
            what: "automorphism group",
            limit,
            actual: g.order(),
        });
    }
    let n = g.order();
    let span = Spanning::new(generating_set(g), n, |a, b| g.mul(a, b));
    let candidates: Vec<Vec<usize>> = span
        .gens
        .iter()
        .map(|&x| {
            let o = g.element_order(x);
            (0..n).filter(|&y| g.element_order(y) == o).collect()
        })
        .collect();
    let mut out = Vec::new();
    for_each_assignment(&candidates, |images| {
        if let Some(f) = span.extend(images, |a, b| g.mul(a, b), |a, b| g.mul(a, b)) {
            if is_bijection(&f) {
                out.push(Morphism::new(f, n));
            }
        }
        true
    });
    out.sort();
    Ok(out)
}

/// An isomorphism `g -> h`, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Morphism> {
    if g.order() != h.order()
        || g.order_profile() != h.order_profile()
        || g.is_abelian() != h.is_abelian()
    {
        return None;
    }
    let n = g.order();
    let span = Spanning::new(generating_set(g), n, |a, b| g.mul(a, b));
    let candidates: Vec<Vec<usize>> = span
        .gens
        .iter()
        .map(|&x| {
            let o = g.element_order(x);
            (0..n).filter(|&y| h.element_order(y) == o).collect()
        })
        .collect();
    let mut found = None;
    for_each_assignment(&candidates, |images| {
        if let Some(f) = span.extend(images, |a, b| g.mul(a, b), |a, b| h.mul(a, b)) {
            if is_bijection(&f) {
                found = Some(Morphism::new(f, n));
                return false;
            }
        }
        true
    });
    found
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}
