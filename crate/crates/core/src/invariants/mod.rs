//! Radicals, weight, the decomposition of `A/Rad(A)` into simple braces,
//! solvability and perfectness.

mod checks;

pub use checks::*;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::brace::{direct_product, zero_brace, SkewBrace};
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::ideal::{
    a2, ideal_closure, ideal_lattice, ideal_sum, is_prime_ideal, is_simple, is_small_ideal,
    quotient_brace, star_product, Ideal, QuotientBrace,
};
use crate::morphism::Morphism;
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalReport {
    /// Intersection of the maximal ideals, or the whole brace if there are none.
    pub radical: Ideal,
    /// Intersection of the maximal ideals that are prime.
    pub radical_prime: Ideal,
    pub maximal_ideal_count: usize,
    /// Elements `x` such that `S ∪ {x}` generates only when `S` does.
    pub non_generators: ElementSet,
    pub small_ideal_sum: Ideal,
}

fn intersect_all<'a>(n: usize, ideals: impl Iterator<Item = &'a Ideal>) -> Ideal {
    let mut acc = ElementSet::full(n);
    for i in ideals {
        acc = acc.intersection(i.members());
    }
    Ideal::new_unchecked(acc)
}

pub fn radical_ideal(a: &SkewBrace, limits: &Limits) -> Result<Ideal> {
    Ok(intersect_all(
        a.order(),
        ideal_lattice(a, limits)?.maximal_ideals(),
    ))
}

/// `Rad′(A)`, the intersection of the prime maximal ideals.
pub fn prime_radical(a: &SkewBrace, limits: &Limits) -> Result<Ideal> {
    let mut primes = Vec::new();
    for m in ideal_lattice(a, limits)?.maximal_ideals() {
        if is_prime_ideal(a, m, limits)? {
            primes.push(m);
        }
    }
    Ok(intersect_all(a.order(), primes.into_iter()))
}

/// Non-generating elements, found through the lattice: `x` generates
/// together with some set `S` that fails alone exactly when
/// `J + (x) = A` for some proper ideal `J`.
pub fn non_generators(a: &SkewBrace, limits: &Limits) -> Result<ElementSet> {
    let lattice = ideal_lattice(a, limits)?;
    let proper: Vec<&Ideal> = lattice.ideals().iter().filter(|j| !j.is_whole()).collect();
    let n = a.order();
    Ok(ElementSet::from_indices(
        n,
        (0..n).filter(|&x| {
            let cx = ideal_closure(a, &ElementSet::from_indices(n, [x]));
            proper.iter().all(|j| !ideal_sum(a, j, &cx).is_whole())
        }),
    ))
}

pub fn small_ideal_sum(a: &SkewBrace, limits: &Limits) -> Result<Ideal> {
    let mut acc = Ideal::new_unchecked(ElementSet::zero(a.order()));
    for i in ideal_lattice(a, limits)?.ideals() {
        if is_small_ideal(a, i, limits)? {
            acc = ideal_sum(a, &acc, i);
        }
    }
    Ok(acc)
}

pub fn radical(a: &SkewBrace, limits: &Limits) -> Result<RadicalReport> {
    Ok(RadicalReport {
        radical: radical_ideal(a, limits)?,
        radical_prime: prime_radical(a, limits)?,
        maximal_ideal_count: ideal_lattice(a, limits)?.maximal_ideals().count(),
        non_generators: non_generators(a, limits)?,
        small_ideal_sum: small_ideal_sum(a, limits)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightOptions {
    /// Search in `A/Rad(A)` and lift the generators.
    pub use_radical: bool,
}

impl Default for WeightOptions {
    fn default() -> Self {
        WeightOptions { use_radical: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCertificate {
    pub weight: usize,
    /// A generating set of size `weight`, first in (size, lexicographic) order.
    pub generating_set: ElementSet,
    /// Every smaller subset was refuted, in the brace itself or in `A/Rad(A)`.
    pub exhaustive: bool,
    /// Order of the brace the subset search actually ran in.
    pub searched_order: usize,
}

pub fn generates(a: &SkewBrace, s: &ElementSet) -> bool {
    ideal_closure(a, s).is_whole()
}

fn direct_weight(a: &SkewBrace) -> (usize, ElementSet) {
    let n = a.order();
    if n == 1 {
        return (1, ElementSet::zero(1));
    }
    for k in 1..n {
        for subset in (1..n).combinations(k) {
            let s = ElementSet::from_indices(n, subset);
            if generates(a, &s) {
                return (k, s);
            }
        }
    }
    unreachable!("the non-zero elements always generate")
}

pub fn weight(a: &SkewBrace, limits: &Limits) -> Result<WeightCertificate> {
    weight_with(a, WeightOptions::default(), limits)
}

pub fn weight_with(
    a: &SkewBrace,
    opts: WeightOptions,
    limits: &Limits,
) -> Result<WeightCertificate> {
    let n = a.order();
    if n > limits.max_order {
        return Err(Error::BoundExceeded {
            what: "weight search",
            limit: limits.max_order,
            actual: n,
        });
    }
    if opts.use_radical && n > 1 {
        let rad = radical_ideal(a, limits)?;
        if !rad.is_zero() {
            let q = quotient_brace(a, rad.members())?;
            let (k, s) = direct_weight(&q.brace);
            let lifted = s.map(n, |x| q.representatives[x]);
            if !generates(a, &lifted) {
                return Err(Error::CheckFailed(format!(
                    "lift {lifted} of a generating set of A/Rad(A) does not generate"
                )));
            }
            return Ok(WeightCertificate {
                weight: k,
                generating_set: lifted,
                exhaustive: true,
                searched_order: q.brace.order(),
            });
        }
    }
    let (k, s) = direct_weight(a);
    Ok(WeightCertificate {
        weight: k,
        generating_set: s,
        exhaustive: true,
        searched_order: n,
    })
}

/// `A/Rad(A)` as a direct product of simple braces.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub radical: Ideal,
    /// Irredundant maximal ideals whose intersection is the radical.
    pub maximal_ideals: Vec<Ideal>,
    /// `factors[i] = A/maximal_ideals[i]`.
    pub factors: Vec<SkewBrace>,
    /// `projections[i][x]` is the image of `x ∈ A` in `factors[i]`.
    pub projections: Vec<Vec<usize>>,
    pub quotient: QuotientBrace,
    /// Direct product of the factors, the first one most significant.
    pub product: SkewBrace,
    /// Isomorphism from `A/Rad(A)` onto `product`.
    pub iso: Morphism,
}

impl Decomposition {
    /// Factor orders, in factor order.
    pub fn factor_orders(&self) -> Vec<usize> {
        self.factors.iter().map(SkewBrace::order).collect()
    }

    /// Splits a product index into its factor coordinates.
    pub fn coordinates(&self, mut p: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (i, f) in self.factors.iter().enumerate().rev() {
            out[i] = p % f.order();
            p /= f.order();
        }
        out
    }
}

/// Picks maximal ideals until their intersection reaches `target`, then
/// drops any that have become redundant.
fn irredundant_family(n: usize, maximal: &[Ideal], target: &Ideal) -> Vec<Ideal> {
    let mut chosen: Vec<Ideal> = Vec::new();
    let mut acc = ElementSet::full(n);
    for m in maximal {
        if acc == *target.members() {
            break;
        }
        let next = acc.intersection(m.members());
        if next != acc {
            chosen.push(m.clone());
            acc = next;
        }
    }
    let mut k = 0;
    while k < chosen.len() {
        let rest = intersect_all(
            n,
            chosen
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, m)| m),
        );
        if rest == *target {
            chosen.remove(k);
        } else {
            k += 1;
        }
    }
    chosen
}

pub fn wedderburn_decompose(a: &SkewBrace, limits: &Limits) -> Result<Decomposition> {
    let n = a.order();
    let maximal: Vec<Ideal> = ideal_lattice(a, limits)?
        .maximal_ideals()
        .cloned()
        .collect();
    let rad = intersect_all(n, maximal.iter());
    let family = irredundant_family(n, &maximal, &rad);
    let mut factors = Vec::new();
    let mut projections = Vec::new();
    let mut product = zero_brace();
    for m in &family {
        let q = quotient_brace(a, m.members())?;
        if !is_simple(&q.brace, limits)? {
            return Err(Error::CheckFailed(format!(
                "A/{} is not simple",
                m.members()
            )));
        }
        product = direct_product(&product, &q.brace)?;
        factors.push(q.brace);
        projections.push(q.projection);
    }
    let quotient = quotient_brace(a, rad.members())?;
    // x + Rad ↦ (x + M_1, …, x + M_k); surjective because the M_i are
    // pairwise comaximal, injective because their intersection is Rad
    let map: Vec<usize> = quotient
        .representatives
        .iter()
        .map(|&x| {
            factors
                .iter()
                .zip(&projections)
                .fold(0, |acc, (f, p)| acc * f.order() + p[x])
        })
        .collect();
    let iso = Morphism::new(map, product.order());
    if !iso.is_bijective() || !quotient.brace.is_isomorphism_to(&product, &iso) {
        return Err(Error::CheckFailed(
            "natural map onto the product is not an isomorphism".into(),
        ));
    }
    Ok(Decomposition {
        radical: rad,
        maximal_ideals: family,
        factors,
        projections,
        quotient,
        product,
        iso,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvableSeries {
    /// `A_1 = A ⊋ A_2 ⊋ …`, ending at the first repeated term.
    pub terms: Vec<ElementSet>,
}

impl SolvableSeries {
    pub fn is_solvable(&self) -> bool {
        self.terms.last().is_some_and(ElementSet::is_zero)
    }
}

pub fn solvable_series(a: &SkewBrace) -> SolvableSeries {
    let mut terms = vec![ElementSet::full(a.order())];
    loop {
        let last = terms.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = star_product(a, last, last);
        if next == *last {
            break;
        }
        terms.push(next);
    }
    SolvableSeries { terms }
}

pub fn is_solvable(a: &SkewBrace) -> bool {
    solvable_series(a).is_solvable()
}

/// `A = A⁽²⁾`; true for the zero brace.
pub fn is_perfect(a: &SkewBrace) -> bool {
    a2(a).is_whole()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::tests::{r8, ring_2z8};
    use crate::brace::{brace_isomorphic, trivial_brace};
    use crate::group::library::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, xs.iter().copied())
    }

    #[test]
    fn radicals() {
        let r = radical(&trivial_brace(&klein4()), &lim()).unwrap();
        assert!(r.radical.is_zero());
        assert_eq!(r.maximal_ideal_count, 3);
        let c4 = cyclic(4);
        let two = (0..4).find(|&x| c4.element_order(x) == 2).unwrap();
        let r = radical(&trivial_brace(&c4), &lim()).unwrap();
        assert_eq!(r.radical.members(), &set(4, &[0, two]));
        assert_eq!(r.non_generators, set(4, &[0, two]));
        let r = radical(&ring_2z8(), &lim()).unwrap();
        assert_eq!(r.radical.members(), &set(4, &[0, r8(4)]));
        assert_eq!(r.non_generators, set(4, &[0, r8(4)]));
        assert_eq!(r.small_ideal_sum, r.radical);
        assert!(r.radical.is_subset(&r.radical_prime));
        let r = radical(&zero_brace(), &lim()).unwrap();
        assert!(r.radical.is_whole());
        assert_eq!(r.maximal_ideal_count, 0);
    }

    #[test]
    fn prime_radical_of_trivial_braces_is_whole() {
        // all stars vanish, so no quotient of a trivial brace is prime
        for (name, g) in small_groups(8) {
            let t = trivial_brace(&g);
            assert!(prime_radical(&t, &lim()).unwrap().is_whole(), "{name}");
        }
    }

    #[test]
    fn weights() {
        let w = |g: &crate::FiniteGroup| weight(&trivial_brace(g), &lim()).unwrap().weight;
        assert_eq!(w(&cyclic(2)), 1);
        assert_eq!(w(&klein4()), 2);
        assert_eq!(w(&elementary_abelian(2, 3)), 3);
        assert_eq!(w(&elementary_abelian(3, 2)), 2);
        assert_eq!(weight(&zero_brace(), &lim()).unwrap().weight, 1);
        let c = weight(&ring_2z8(), &lim()).unwrap();
        assert_eq!(c.weight, 1);
        assert_eq!(c.generating_set, set(4, &[r8(2)]));
        assert_eq!(c.searched_order, 2);
        let c = weight_with(&ring_2z8(), WeightOptions { use_radical: false }, &lim()).unwrap();
        assert_eq!(c.generating_set, set(4, &[r8(2)]));
        assert_eq!(c.searched_order, 4);
        // S3 is the normal closure of a transposition
        assert_eq!(w(&symmetric3()), 1);
    }

    #[test]
    fn weight_bound() {
        let big = trivial_brace(&cyclic(17));
        assert!(matches!(
            weight(&big, &lim()),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn decompositions() {
        let d = wedderburn_decompose(&trivial_brace(&cyclic(6)), &lim()).unwrap();
        let mut orders = d.factor_orders();
        orders.sort();
        assert_eq!(orders, vec![2, 3]);
        let d = wedderburn_decompose(&trivial_brace(&cyclic(4)), &lim()).unwrap();
        assert_eq!(d.factor_orders(), vec![2]);
        let c5 = trivial_brace(&cyclic(5));
        let d = wedderburn_decompose(&c5, &lim()).unwrap();
        assert_eq!(d.factors.len(), 1);
        assert!(brace_isomorphic(&d.factors[0], &c5).is_some());
        let d = wedderburn_decompose(&zero_brace(), &lim()).unwrap();
        assert!(d.factors.is_empty());
        assert_eq!(d.product.order(), 1);
        let d = wedderburn_decompose(&trivial_brace(&elementary_abelian(2, 3)), &lim()).unwrap();
        assert_eq!(d.factor_orders(), vec![2, 2, 2]);
    }

    #[test]
    fn decomposition_projections_commute() {
        for (name, g) in small_groups(12) {
            let t = trivial_brace(&g);
            let d = wedderburn_decompose(&t, &lim()).unwrap();
            for x in 0..t.order() {
                let coords = d.coordinates(d.iso.apply(d.quotient.projection[x]));
                for (i, p) in d.projections.iter().enumerate() {
                    assert_eq!(coords[i], p[x], "{name}");
                }
            }
        }
    }

    #[test]
    fn solvability() {
        let s = solvable_series(&trivial_brace(&cyclic(4)));
        assert_eq!(s.terms.len(), 2);
        assert!(s.is_solvable());
        let s = solvable_series(&ring_2z8());
        assert_eq!(
            s.terms,
            vec![
                ElementSet::full(4),
                set(4, &[0, r8(4)]),
                ElementSet::zero(4)
            ]
        );
        assert!(is_solvable(&trivial_brace(&alternating4())));
        assert!(is_solvable(&zero_brace()));
    }

    #[test]
    fn perfectness() {
        assert!(is_perfect(&zero_brace()));
        assert!(!is_perfect(&trivial_brace(&cyclic(3))));
        assert!(!is_perfect(&trivial_brace(&alternating4())));
        assert!(!is_perfect(&ring_2z8()));
    }
}
