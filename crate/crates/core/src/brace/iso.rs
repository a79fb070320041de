//! Isomorphism and automorphism search for braces.
//!
//! Elements are first bucketed by [`ElementSignature`], an isomorphism
//! invariant, and then additive generators are mapped to same-signature
//! candidates; each candidate assignment is extended to an additive
//! homomorphism and accepted if it is bijective and preserves `∘`.

use super::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{for_each_assignment, generating_set, Spanning};
use crate::morphism::Morphism;

/// Isomorphism-invariant data attached to a single brace element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSignature {
    pub additive_order: usize,
    pub circle_order: usize,
    /// Order of `λ_a` as a permutation.
    pub lambda_order: usize,
    pub lambda_fixed_points: usize,
    /// Size of the orbit `{λ_b(a)}`.
    pub lambda_orbit: usize,
}

pub fn element_signature(a: &SkewBrace, x: usize) -> ElementSignature {
    let n = a.order();
    let row = a.lambda_row(x);
    let mut seen = vec![false; n];
    let mut lambda_order = 1;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut y = start;
        while !seen[y] {
            seen[y] = true;
            y = row[y];
            len += 1;
        }
        lambda_order = lcm(lambda_order, len);
    }
    let mut orbit = vec![false; n];
    for b in 0..n {
        orbit[a.lambda(b, x)] = true;
    }
    ElementSignature {
        additive_order: a.additive_group().element_order(x),
        circle_order: a.circle_group().element_order(x),
        lambda_order,
        lambda_fixed_points: (0..n).filter(|&y| row[y] == y).count(),
        lambda_orbit: orbit.iter().filter(|&&b| b).count(),
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn signatures(a: &SkewBrace) -> Vec<ElementSignature> {
    (0..a.order()).map(|x| element_signature(a, x)).collect()
}

/// Visits every isomorphism `a -> b` until `visit` returns false.
fn search(a: &SkewBrace, b: &SkewBrace, mut visit: impl FnMut(Morphism) -> bool) {
    let n = a.order();
    if n != b.order() {
        return;
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let (mut sorted_a, mut sorted_b) = (sig_a.clone(), sig_b.clone());
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return;
    }
    let span = Spanning::new(generating_set(a.additive_group()), n, |x, y| a.add(x, y));
    let candidates: Vec<Vec<usize>> = span
        .gens
        .iter()
        .map(|&x| (0..n).filter(|&y| sig_b[y] == sig_a[x]).collect())
        .collect();
    for_each_assignment(&candidates, |images| {
        let Some(f) = span.extend(images, |x, y| a.add(x, y), |x, y| b.add(x, y)) else {
            return true;
        };
        let f = Morphism::new(f, n);
        if f.is_bijective()
            && (0..n)
                .all(|x| (0..n).all(|y| f.apply(a.circ(x, y)) == b.circ(f.apply(x), f.apply(y))))
        {
            return visit(f);
        }
        true
    });
}

/// An isomorphism `a -> b` preserving both operations, if one exists.
pub fn brace_isomorphic(a: &SkewBrace, b: &SkewBrace) -> Option<Morphism> {
    let mut found = None;
    search(a, b, |f| {
        found = Some(f);
        false
    });
    found
}

/// All automorphisms of the brace, sorted (identity first).
pub fn brace_automorphism_group(a: &SkewBrace, limit: usize) -> Result<Vec<Morphism>> {
    if a.order() > limit {
        return Err(Error::BoundExceeded {
            what: "brace automorphism group",
            limit,
            actual: a.order(),
        });
    }
    let mut out = Vec::new();
    search(a, a, |f| {
        out.push(f);
        true
    });
    out.sort();
    Ok(out)
}
