//! Built-in groups of small order, constructed from standard presentations.

use super::FiniteGroup;

pub fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::from_fn(n, |a, b| (a + b) % n).expect("cyclic group table")
}

pub fn klein4() -> FiniteGroup {
    cyclic(2).direct_product(&cyclic(2))
}

/// Elementary abelian group `C_p^k`.
pub fn elementary_abelian(p: usize, k: usize) -> FiniteGroup {
    (0..k).fold(FiniteGroup::trivial(), |acc, _| {
        acc.direct_product(&cyclic(p))
    })
}

/// Dihedral group of order `2m`, as symmetries of an `m`-gon.
pub fn dihedral(m: usize) -> FiniteGroup {
    if m <= 2 {
        // D1 = C2, D2 = C2 x C2; the polygon action is not faithful here
        return if m == 1 { cyclic(2) } else { klein4() };
    }
    let rotation: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    let reflection: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    FiniteGroup::from_permutations(&[rotation, reflection]).expect("dihedral group table")
}

/// Dicyclic group of order `4m`: `<a, x | a^2m = 1, x^2 = a^m, x a x^-1 = a^-1>`.
/// Element `a^i x^j` has index `i + 2m j`.
pub fn dicyclic(m: usize) -> FiniteGroup {
    let n = 2 * m;
    FiniteGroup::from_fn(2 * n, |p, q| {
        let (i, j) = (p % n, p / n);
        let (k, l) = (q % n, q / n);
        if j == 0 {
            (i + k) % n + n * l
        } else if l == 0 {
            (i + n - k) % n + n
        } else {
            (i + n - k + m) % n
        }
    })
    .expect("dicyclic group table")
}

pub fn quaternion8() -> FiniteGroup {
    dicyclic(2)
}

pub fn symmetric3() -> FiniteGroup {
    FiniteGroup::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]).expect("S3 table")
}

pub fn alternating4() -> FiniteGroup {
    FiniteGroup::from_permutations(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).expect("A4 table")
}

/// All groups of order `n` up to isomorphism, for `1 <= n <= 12`.
pub fn groups_of_order(n: usize) -> Option<Vec<(&'static str, FiniteGroup)>> {
    let c = cyclic;
    let groups = match n {
        1 => vec![("C1", FiniteGroup::trivial())],
        2 => vec![("C2", c(2))],
        3 => vec![("C3", c(3))],
        4 => vec![("C4", c(4)), ("C2xC2", klein4())],
        5 => vec![("C5", c(5))],
        6 => vec![("C6", c(6)), ("S3", symmetric3())],
        7 => vec![("C7", c(7))],
        8 => vec![
            ("C8", c(8)),
            ("C2xC4", c(2).direct_product(&c(4))),
            ("C2xC2xC2", elementary_abelian(2, 3)),
            ("D4", dihedral(4)),
            ("Q8", quaternion8()),
        ],
        9 => vec![("C9", c(9)), ("C3xC3", elementary_abelian(3, 2))],
        10 => vec![("C10", c(10)), ("D5", dihedral(5))],
        11 => vec![("C11", c(11))],
        12 => vec![
            ("C12", c(12)),
            ("C2xC6", c(2).direct_product(&c(6))),
            ("A4", alternating4()),
            ("D6", dihedral(6)),
            ("Dic3", dicyclic(3)),
        ],
        _ => return None,
    };
    Some(groups)
}

/// Every built-in group of order at most `max_order`, by order.
pub fn small_groups(max_order: usize) -> Vec<(&'static str, FiniteGroup)> {
    (1..=max_order.min(12))
        .flat_map(|n| groups_of_order(n).unwrap())
        .collect()
}

/// Name of the built-in group isomorphic to `g`, if its order is covered.
pub fn identify(g: &FiniteGroup) -> Option<&'static str> {
    groups_of_order(g.order())?
        .into_iter()
        .find(|(_, h)| super::is_isomorphic(g, h))
        .map(|(name, _)| name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::verify_group_axioms;

    #[test]
    fn library_groups_reverify_and_are_pairwise_distinct() {
        for n in 1..=12 {
            let groups = groups_of_order(n).unwrap();
            for (name, g) in &groups {
                assert_eq!(g.order(), n, "{name}");
                assert!(verify_group_axioms(&g.rows()).is_ok(), "{name}");
            }
            for i in 0..groups.len() {
                for j in i + 1..groups.len() {
                    assert!(
                        !crate::group::is_isomorphic(&groups[i].1, &groups[j].1),
                        "{} vs {}",
                        groups[i].0,
                        groups[j].0
                    );
                }
            }
        }
        assert!(groups_of_order(13).is_none());
    }

    #[test]
    fn known_properties() {
        assert!(!dihedral(4).is_abelian());
        assert!(!quaternion8().is_abelian());
        // Q8 has a single involution, D4 has five
        assert_eq!(
            quaternion8()
                .order_profile()
                .iter()
                .filter(|&&o| o == 2)
                .count(),
            1
        );
        assert_eq!(
            dihedral(4)
                .order_profile()
                .iter()
                .filter(|&&o| o == 2)
                .count(),
            5
        );
        // A4 has no subgroup of order 6 and trivial center
        assert!(alternating4().center().members().is_zero());
        assert!(alternating4()
            .all_subgroups(16)
            .unwrap()
            .iter()
            .all(|s| s.order() != 6));
        // Dic3 has a unique involution
        assert_eq!(
            dicyclic(3)
                .order_profile()
                .iter()
                .filter(|&&o| o == 2)
                .count(),
            1
        );
    }

    #[test]
    fn identify_names() {
        assert_eq!(identify(&dihedral(3)), Some("S3"));
        assert_eq!(identify(&cyclic(3).direct_product(&cyclic(4))), Some("C12"));
        assert_eq!(
            identify(&cyclic(2).direct_product(&symmetric3())),
            Some("D6")
        );
        assert_eq!(identify(&cyclic(13)), None);
    }
}
