use serde::{Deserialize, Serialize};

/// A map between the index sets of two finite structures.
///
/// Used for group automorphisms, brace isomorphisms, and the actions that
/// feed semidirect products.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Morphism {
    map: Vec<usize>,
    target_order: usize,
}

/// Morphisms between braces and between groups share one representation.
pub type BraceMorphism = Morphism;

impl Morphism {
    pub fn new(map: Vec<usize>, target_order: usize) -> Self {
        debug_assert!(map.iter().all(|&x| x < target_order));
        Morphism { map, target_order }
    }

    pub fn identity(n: usize) -> Self {
        Morphism {
            map: (0..n).collect(),
            target_order: n,
        }
    }

    pub fn source_order(&self) -> usize {
        self.map.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_bijective(&self) -> bool {
        if self.map.len() != self.target_order {
            return false;
        }
        let mut hit = vec![false; self.target_order];
        self.map
            .iter()
            .all(|&y| !std::mem::replace(&mut hit[y], true))
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Morphism) -> Morphism {
        assert_eq!(first.target_order, self.source_order());
        Morphism {
            map: first.map.iter().map(|&x| self.map[x]).collect(),
            target_order: self.target_order,
        }
    }

    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (i, &y) in self.map.iter().enumerate() {
            inv[y] = i;
        }
        Some(Morphism {
            map: inv,
            target_order: self.map.len(),
        })
    }
}
