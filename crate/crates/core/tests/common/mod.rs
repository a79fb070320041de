#![allow(dead_code)]

use std::sync::OnceLock;

use bracekit::enumeration::{enumerate_braces, Method};
use bracekit::{ElementSet, SkewBrace};

/// Every brace of order `1..=max` from the holomorph enumeration.
pub fn corpus(max: usize) -> Vec<SkewBrace> {
    (1..=max)
        .flat_map(|n| enumerate_braces(n, Method::Holomorph).unwrap().entries)
        .map(|e| e.brace)
        .collect()
}

/// The braces of order at most 8, enumerated once per test binary.
pub fn corpus8() -> &'static [SkewBrace] {
    static CORPUS: OnceLock<Vec<SkewBrace>> = OnceLock::new();
    CORPUS.get_or_init(|| corpus(8))
}

/// All subsets of `0..n` by bitmask.
pub fn subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    (0u64..1 << n).map(move |m| ElementSet::from_mask(n, m))
}

/// Ideals by definition over every subset.
pub fn brute_force_ideals(a: &SkewBrace) -> Vec<ElementSet> {
    let n = a.order();
    let mut out: Vec<ElementSet> = subsets(n)
        .filter(|s| {
            s.contains(0)
                && s.iter().all(|x| s.iter().all(|y| s.contains(a.add(x, y))))
                && s.iter().all(|x| (0..n).all(|g| s.contains(a.lambda(g, x))))
                && s.iter()
                    .all(|x| (0..n).all(|g| s.contains(a.add(a.add(g, x), a.neg(g)))))
                && s.iter()
                    .all(|x| (0..n).all(|g| s.contains(a.circ(a.circ(g, x), a.circ_inv(g)))))
                && s.iter().all(|x| (0..n).all(|g| s.contains(a.star(x, g))))
        })
        .collect();
    out.sort();
    out
}
