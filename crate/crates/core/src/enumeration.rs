//! All skew braces of a small order up to isomorphism.
//!
//! The holomorph method reads braces off regular subgroups of
//! `Hol(G) = G ⋊ Aut(G)`; the exhaustive method searches circle tables
//! directly and serves as an independent cross-check.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::brace::{
    brace_isomorphic, element_signature, verify_brace, ElementSignature, SkewBrace,
};
use crate::error::{Error, Result};
use crate::group::library::groups_of_order;
use crate::group::{automorphism_group, FiniteGroup};
use crate::morphism::Morphism;

pub const HOLOMORPH_MAX_ORDER: usize = 12;
pub const EXHAUSTIVE_MAX_ORDER: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Holomorph,
    Exhaustive,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Holomorph => "holomorph",
            Method::Exhaustive => "exhaustive",
        }
    }

    pub fn max_order(self) -> usize {
        match self {
            Method::Holomorph => HOLOMORPH_MAX_ORDER,
            Method::Exhaustive => EXHAUSTIVE_MAX_ORDER,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "holomorph" => Ok(Method::Holomorph),
            "exhaustive" => Ok(Method::Exhaustive),
            _ => Err(format!(
                "unknown method `{s}` (expected holomorph or exhaustive)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// Library name of the additive group.
    pub additive_group: String,
    pub brace: SkewBrace,
}

/// Isomorphism-class representatives of the braces of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceCatalog {
    pub order: usize,
    pub method: Method,
    /// Sorted by additive group (library order), then circle table.
    pub entries: Vec<CatalogEntry>,
}

impl BraceCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn braces(&self) -> impl Iterator<Item = &SkewBrace> {
        self.entries.iter().map(|e| &e.brace)
    }

    /// Number of classes per additive group, in library order, including
    /// groups with none.
    pub fn counts_by_additive_group(&self) -> Vec<(String, usize)> {
        groups_of_order(self.order)
            .unwrap_or_default()
            .into_iter()
            .map(|(name, _)| {
                (
                    name.to_string(),
                    self.entries
                        .iter()
                        .filter(|e| e.additive_group == name)
                        .count(),
                )
            })
            .collect()
    }
}

pub fn enumerate_braces(n: usize, method: Method) -> Result<BraceCatalog> {
    if n == 0 || n > method.max_order() {
        return Err(Error::UnsupportedOrder {
            order: n,
            method: method.name(),
            max: method.max_order(),
        });
    }
    let groups = groups_of_order(n).expect("library covers every supported order");
    let mut entries = Vec::new();
    for (name, g) in groups {
        let found = match method {
            Method::Holomorph => holomorph_braces(&g)?,
            Method::Exhaustive => exhaustive_braces(&g)?,
        };
        let mut classes = dedupe(found);
        classes.sort_by_cached_key(|b| b.circle_rows());
        entries.extend(classes.into_iter().map(|brace| CatalogEntry {
            additive_group: name.to_string(),
            brace,
        }));
    }
    Ok(BraceCatalog {
        order: n,
        method,
        entries,
    })
}

fn signature_key(b: &SkewBrace) -> Vec<ElementSignature> {
    let mut sig: Vec<ElementSignature> = (0..b.order()).map(|x| element_signature(b, x)).collect();
    sig.sort();
    sig
}

/// Keeps the first brace of each isomorphism class, in input order.
fn dedupe(braces: Vec<SkewBrace>) -> Vec<SkewBrace> {
    let mut buckets: HashMap<Vec<ElementSignature>, Vec<usize>> = HashMap::new();
    let mut kept: Vec<SkewBrace> = Vec::new();
    for b in braces {
        let bucket = buckets.entry(signature_key(&b)).or_default();
        if bucket
            .iter()
            .any(|&k| brace_isomorphic(&kept[k], &b).is_some())
        {
            continue;
        }
        bucket.push(kept.len());
        kept.push(b);
    }
    kept
}

/// `Hol(G)` elements `(a, φ)` act by `x ↦ a + φ(x)` and multiply as
/// `(a, φ)(b, ψ) = (a + φ(b), φψ)`.
struct Holomorph<'g> {
    g: &'g FiniteGroup,
    auts: Vec<Morphism>,
    /// `compose[i * k + j]` is the index of `auts[i] ∘ auts[j]`.
    compose: Vec<usize>,
}

impl<'g> Holomorph<'g> {
    fn new(g: &'g FiniteGroup) -> Result<Self> {
        let auts = automorphism_group(g, HOLOMORPH_MAX_ORDER)?;
        let index: HashMap<&[usize], usize> =
            auts.iter().enumerate().map(|(i, f)| (f.map(), i)).collect();
        let k = auts.len();
        let mut compose = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                compose[i * k + j] = index[auts[i].after(&auts[j]).map()];
            }
        }
        Ok(Holomorph { g, auts, compose })
    }

    fn mul(&self, (a, f): (usize, usize), (b, h): (usize, usize)) -> (usize, usize) {
        (
            self.g.mul(a, self.auts[f].apply(b)),
            self.compose[f * self.auts.len() + h],
        )
    }
}

/// A semiregular subgroup of the holomorph, stored by translation part:
/// `phi[a]` is the automorphism paired with `a`, if `a` is covered.
#[derive(Clone)]
struct Partial {
    phi: Vec<Option<usize>>,
    gens: Vec<(usize, usize)>,
    covered: usize,
}

impl Partial {
    /// Adds a generator and closes; `None` if two elements share a
    /// translation part, so no regular subgroup extends this one.
    fn extend(&self, hol: &Holomorph, gen: (usize, usize)) -> Option<Partial> {
        let mut next = self.clone();
        next.gens.push(gen);
        let mut queue: Vec<(usize, usize)> = (0..self.phi.len())
            .filter_map(|a| self.phi[a].map(|f| (a, f)))
            .collect();
        while let Some(e) = queue.pop() {
            for &g in &next.gens {
                let (a, f) = hol.mul(e, g);
                match next.phi[a] {
                    Some(existing) if existing != f => return None,
                    Some(_) => {}
                    None => {
                        next.phi[a] = Some(f);
                        next.covered += 1;
                        queue.push((a, f));
                    }
                }
            }
        }
        self.phi.len().is_multiple_of(next.covered).then_some(next)
    }
}

fn search_regular(hol: &Holomorph, partial: Partial, out: &mut Vec<Vec<usize>>) {
    let n = partial.phi.len();
    let Some(a) = partial.phi.iter().position(Option::is_none) else {
        out.push(partial.phi.iter().map(|f| f.unwrap()).collect());
        return;
    };
    for f in 0..hol.auts.len() {
        if let Some(next) = partial.extend(hol, (a, f)) {
            debug_assert!(next.covered <= n);
            search_regular(hol, next, out);
        }
    }
}

/// All regular subgroups of `Hol(G)`, each as the map `a ↦ index of φ_a`.
fn regular_subgroups(hol: &Holomorph) -> Vec<Vec<usize>> {
    let n = hol.g.order();
    let mut phi = vec![None; n];
    phi[0] = Some(0);
    let root = Partial {
        phi,
        gens: Vec::new(),
        covered: 1,
    };
    if n == 1 {
        return vec![vec![0]];
    }
    // the smallest uncovered point of the root is 1
    (0..hol.auts.len())
        .into_par_iter()
        .map(|f| {
            let mut out = Vec::new();
            if let Some(next) = root.extend(hol, (1, f)) {
                search_regular(hol, next, &mut out);
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// One brace per regular subgroup: `λ_a = φ_a` and `a∘b = a + φ_a(b)`.
fn holomorph_braces(g: &FiniteGroup) -> Result<Vec<SkewBrace>> {
    let hol = Holomorph::new(g)?;
    let add = g.rows();
    let n = g.order();
    regular_subgroups(&hol)
        .into_iter()
        .map(|phi| {
            let circle: Vec<Vec<usize>> = (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| g.mul(a, hol.auts[phi[a]].apply(b)))
                        .collect()
                })
                .collect();
            Ok(verify_brace(&add, &circle)?)
        })
        .collect()
}

fn permutations_with_first(n: usize, first: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            acc.push(x);
            rec(rest, acc, out);
            acc.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    let mut rest: Vec<usize> = (0..n).filter(|&x| x != first).collect();
    rec(&mut rest, &mut vec![first], &mut out);
    out
}

/// Candidate circle tables over the fixed addition of `g`: each row
/// `b ↦ a∘b` is a permutation with `a∘0 = a` satisfying
/// `a∘(b+c) = a∘b - a + a∘c`; every combination of rows is then checked
/// with [`verify_brace`].
fn exhaustive_braces(g: &FiniteGroup) -> Result<Vec<SkewBrace>> {
    let n = g.order();
    let add = g.rows();
    let rows: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|a| {
            permutations_with_first(n, a)
                .into_iter()
                .filter(|f| {
                    (0..n).all(|b| {
                        (0..n).all(|c| f[g.mul(b, c)] == g.mul(g.mul(f[b], g.inv(a)), f[c]))
                    })
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<usize>> = Vec::with_capacity(n);
    fn rec(
        add: &[Vec<usize>],
        rows: &[Vec<Vec<usize>>],
        chosen: &mut Vec<Vec<usize>>,
        out: &mut Vec<SkewBrace>,
    ) {
        if chosen.len() == rows.len() {
            if let Ok(b) = verify_brace(add, chosen) {
                out.push(b);
            }
            return;
        }
        for r in &rows[chosen.len()] {
            chosen.push(r.clone());
            rec(add, rows, chosen, out);
            chosen.pop();
        }
    }
    rec(&add, &rows, &mut chosen, &mut out);
    Ok(out)
}

/// Catalogs for every order in `1..=max_order`.
pub fn corpus(max_order: usize, method: Method) -> Result<Vec<BraceCatalog>> {
    (1..=max_order)
        .map(|n| enumerate_braces(n, method))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        for n in 1..=5 {
            let h = enumerate_braces(n, Method::Holomorph).unwrap();
            let e = enumerate_braces(n, Method::Exhaustive).unwrap();
            assert_eq!(h.len(), e.len(), "order {n}");
        }
        assert_eq!(enumerate_braces(1, Method::Holomorph).unwrap().len(), 1);
        for p in [2, 3, 5, 7, 11] {
            let c = enumerate_braces(p, Method::Holomorph).unwrap();
            assert_eq!(c.len(), 1);
            assert!(c.entries[0].brace.is_trivial());
        }
    }

    #[test]
    fn unsupported() {
        assert!(matches!(
            enumerate_braces(6, Method::Exhaustive),
            Err(Error::UnsupportedOrder { .. })
        ));
        assert!(matches!(
            enumerate_braces(13, Method::Holomorph),
            Err(Error::UnsupportedOrder { .. })
        ));
        assert!(enumerate_braces(0, Method::Holomorph).is_err());
    }

    #[test]
    fn classes_are_distinct_and_valid() {
        let c = enumerate_braces(6, Method::Holomorph).unwrap();
        for (i, a) in c.braces().enumerate() {
            for b in c.braces().skip(i + 1) {
                assert!(brace_isomorphic(a, b).is_none());
            }
        }
        let total: usize = c.counts_by_additive_group().iter().map(|(_, k)| k).sum();
        assert_eq!(total, c.len());
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            enumerate_braces(4, Method::Holomorph).unwrap(),
            enumerate_braces(4, Method::Holomorph).unwrap()
        );
    }

    #[test]
    fn method_parsing() {
        assert_eq!("holomorph".parse::<Method>().unwrap(), Method::Holomorph);
        assert_eq!(Method::Exhaustive.to_string(), "exhaustive");
        assert!("x".parse::<Method>().is_err());
    }
}
