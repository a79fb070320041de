//! Skew left braces: two group structures `+` and `∘` on one set with
//! `a∘(b+c) = a∘b - a + a∘c`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{BraceViolation, Error, Result};
use crate::group::{check_table, relabel_identity, FiniteGroup};
use crate::ideal::IdealLattice;
use crate::morphism::Morphism;

mod iso;

pub use iso::{brace_automorphism_group, brace_isomorphic, element_signature, ElementSignature};

/// Largest order a product construction is allowed to produce.
pub const DEFAULT_MAX_PRODUCT_ORDER: usize = 1024;

#[derive(Serialize, Deserialize)]
#[serde(try_from = "BraceJson", into = "BraceJson")]
pub struct SkewBrace {
    add: FiniteGroup,
    circle: FiniteGroup,
    /// `lambda[a * n + b] = -a + a∘b`
    lambda: Vec<usize>,
    lambda_inv: Vec<usize>,
    pub(crate) lattice: OnceLock<IdealLattice>,
}

/// Brace JSON: `{"order": n, "add": [[...]], "circle": [[...]]}`.
#[derive(Serialize, Deserialize)]
struct BraceJson {
    order: usize,
    add: Vec<Vec<usize>>,
    circle: Vec<Vec<usize>>,
}

impl TryFrom<BraceJson> for SkewBrace {
    type Error = BraceViolation;

    fn try_from(j: BraceJson) -> Result<Self, BraceViolation> {
        if j.add.len() != j.order || j.circle.len() != j.order {
            return Err(BraceViolation::OrderMismatch {
                add: j.add.len(),
                circle: j.circle.len(),
            });
        }
        verify_brace(&j.add, &j.circle)
    }
}

impl From<SkewBrace> for BraceJson {
    fn from(b: SkewBrace) -> Self {
        BraceJson {
            order: b.order(),
            add: b.add_rows(),
            circle: b.circle_rows(),
        }
    }
}

impl Clone for SkewBrace {
    fn clone(&self) -> Self {
        SkewBrace {
            add: self.add.clone(),
            circle: self.circle.clone(),
            lambda: self.lambda.clone(),
            lambda_inv: self.lambda_inv.clone(),
            lattice: self.lattice.clone(),
        }
    }
}

impl PartialEq for SkewBrace {
    fn eq(&self, other: &Self) -> bool {
        self.add == other.add && self.circle == other.circle
    }
}

impl Eq for SkewBrace {}

impl std::fmt::Debug for SkewBrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SkewBrace")
            .field("order", &self.order())
            .field("add", &self.add.rows())
            .field("circle", &self.circle.rows())
            .finish()
    }
}

/// Which identity failed in [`SkewBrace::check_star_identities`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarIdentity {
    /// `x*(y+z) = x*y + y + x*z - y`
    LeftDistributive,
    /// `(x∘y)*z = x*(y*z) + y*z + x*z`
    CircleAssociative,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarCheck {
    Pass,
    Witness {
        identity: StarIdentity,
        x: usize,
        y: usize,
        z: usize,
    },
}

/// Validates two operation tables as a skew left brace.
///
/// Both tables must have the same identity; if it is not index 0 it is
/// relabeled to 0 in both.
pub fn verify_brace(
    add: &[Vec<usize>],
    circle: &[Vec<usize>],
) -> Result<SkewBrace, BraceViolation> {
    let (e_add, t_add) = check_table(add).map_err(BraceViolation::Additive)?;
    let (e_circ, t_circ) = check_table(circle).map_err(BraceViolation::Circle)?;
    let n = add.len();
    if circle.len() != n {
        return Err(BraceViolation::OrderMismatch {
            add: n,
            circle: circle.len(),
        });
    }
    if e_add != e_circ {
        return Err(BraceViolation::IdentityMismatch {
            add: e_add,
            circle: e_circ,
        });
    }
    let add = FiniteGroup::from_verified_table(n, relabel_identity(n, e_add, &t_add));
    let circle = FiniteGroup::from_verified_table(n, relabel_identity(n, e_add, &t_circ));
    check_compatibility(&add, &circle)?;
    Ok(SkewBrace::from_groups_unchecked(add, circle))
}

fn check_compatibility(add: &FiniteGroup, circle: &FiniteGroup) -> Result<(), BraceViolation> {
    let n = add.order();
    for a in 0..n {
        let neg_a = add.inv(a);
        for b in 0..n {
            let ab = circle.mul(a, b);
            for c in 0..n {
                let left = circle.mul(a, add.mul(b, c));
                let right = add.mul(add.mul(ab, neg_a), circle.mul(a, c));
                if left != right {
                    return Err(BraceViolation::Compatibility {
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
    Ok(())
}

/// The trivial brace `(G, ·, ·)`.
pub fn trivial_brace(g: &FiniteGroup) -> SkewBrace {
    SkewBrace::from_groups_unchecked(g.clone(), g.clone())
}

/// The brace with one element.
pub fn zero_brace() -> SkewBrace {
    trivial_brace(&FiniteGroup::trivial())
}

impl SkewBrace {
    /// Assembles a brace from two groups known to be compatible.
    pub(crate) fn from_groups_unchecked(add: FiniteGroup, circle: FiniteGroup) -> SkewBrace {
        let n = add.order();
        debug_assert_eq!(n, circle.order());
        let mut lambda = vec![0; n * n];
        let mut lambda_inv = vec![0; n * n];
        for a in 0..n {
            let neg_a = add.inv(a);
            for b in 0..n {
                let l = add.mul(neg_a, circle.mul(a, b));
                lambda[a * n + b] = l;
                lambda_inv[a * n + l] = b;
            }
        }
        SkewBrace {
            add,
            circle,
            lambda,
            lambda_inv,
            lattice: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn additive_group(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn circle_group(&self) -> &FiniteGroup {
        &self.circle
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.mul(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    /// `a - b`
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add.mul(a, self.add.inv(b))
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.circle.mul(a, b)
    }

    /// Inverse of `a` in the circle group, `a'`.
    #[inline]
    pub fn circ_inv(&self, a: usize) -> usize {
        self.circle.inv(a)
    }

    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.lambda[a * self.order() + b]
    }

    #[inline]
    pub fn lambda_inv(&self, a: usize, b: usize) -> usize {
        self.lambda_inv[a * self.order() + b]
    }

    /// `a * b = λ_a(b) - b = -a + a∘b - b`
    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.sub(self.lambda(a, b), b)
    }

    pub fn lambda_row(&self, a: usize) -> &[usize] {
        let n = self.order();
        &self.lambda[a * n..(a + 1) * n]
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add.rows()
    }

    pub fn circle_rows(&self) -> Vec<Vec<usize>> {
        self.circle.rows()
    }

    /// True if `+` and `∘` coincide.
    pub fn is_trivial(&self) -> bool {
        self.add == self.circle
    }

    pub fn is_left_brace(&self) -> bool {
        self.add.is_abelian()
    }

    /// Checks that every `λ_a` is an additive automorphism, that
    /// `λ_{a∘b} = λ_a λ_b`, and the identities `a∘b = a + λ_a(b)`,
    /// `a + b = a∘λ_a⁻¹(b)`, `-a = λ_a(a')`. Returns a description of the
    /// first failure.
    pub fn check_lambda_laws(&self) -> Result<(), String> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let la = self.lambda(a, b);
                if self.circ(a, b) != self.add(a, la) {
                    return Err(format!("a∘b != a + λ_a(b) at a={a}, b={b}"));
                }
                if self.add(a, b) != self.circ(a, self.lambda_inv(a, b)) {
                    return Err(format!("a+b != a∘λ_a⁻¹(b) at a={a}, b={b}"));
                }
                let ab = self.circ(a, b);
                for c in 0..n {
                    if self.lambda(a, self.add(b, c)) != self.add(la, self.lambda(a, c)) {
                        return Err(format!("λ_{a} not additive at b={b}, c={c}"));
                    }
                    if self.lambda(ab, c) != self.lambda(a, self.lambda(b, c)) {
                        return Err(format!("λ_(a∘b) != λ_a λ_b at a={a}, b={b}, c={c}"));
                    }
                }
            }
            let mut seen = vec![false; n];
            if self
                .lambda_row(a)
                .iter()
                .any(|&x| std::mem::replace(&mut seen[x], true))
            {
                return Err(format!("λ_{a} not bijective"));
            }
            if self.neg(a) != self.lambda(a, self.circ_inv(a)) {
                return Err(format!("-a != λ_a(a') at a={a}"));
            }
        }
        Ok(())
    }

    /// Exhaustive check of `x*(y+z) = x*y + y + x*z - y` and
    /// `(x∘y)*z = x*(y*z) + y*z + x*z`.
    pub fn check_star_identities(&self) -> StarCheck {
        let n = self.order();
        for x in 0..n {
            for y in 0..n {
                let xy_star = self.star(x, y);
                let xy_circ = self.circ(x, y);
                for z in 0..n {
                    let left = self.star(x, self.add(y, z));
                    let right = self.sub(self.add(self.add(xy_star, y), self.star(x, z)), y);
                    if left != right {
                        return StarCheck::Witness {
                            identity: StarIdentity::LeftDistributive,
                            x,
                            y,
                            z,
                        };
                    }
                    let yz = self.star(y, z);
                    let left = self.star(xy_circ, z);
                    let right = self.add(self.add(self.star(x, yz), yz), self.star(x, z));
                    if left != right {
                        return StarCheck::Witness {
                            identity: StarIdentity::CircleAssociative,
                            x,
                            y,
                            z,
                        };
                    }
                }
            }
        }
        StarCheck::Pass
    }

    /// True if `f` is a bijection onto `other` preserving both operations.
    pub fn is_isomorphism_to(&self, other: &SkewBrace, f: &Morphism) -> bool {
        let n = self.order();
        f.source_order() == n
            && f.target_order() == other.order()
            && f.is_bijective()
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    f.apply(self.add(a, b)) == other.add(f.apply(a), f.apply(b))
                        && f.apply(self.circ(a, b)) == other.circ(f.apply(a), f.apply(b))
                })
            })
    }

    /// Relabels elements by the bijection `perm` (which must fix 0).
    pub fn relabel(&self, perm: &[usize]) -> SkewBrace {
        let n = self.order();
        assert_eq!(perm[0], 0);
        let mut add = vec![0; n * n];
        let mut circle = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[perm[a] * n + perm[b]] = perm[self.add(a, b)];
                circle[perm[a] * n + perm[b]] = perm[self.circ(a, b)];
            }
        }
        SkewBrace::from_groups_unchecked(
            FiniteGroup::from_verified_table(n, add),
            FiniteGroup::from_verified_table(n, circle),
        )
    }
}

/// Direct product with componentwise operations; `(a, b)` has index
/// `a * |B| + b`.
pub fn direct_product(a: &SkewBrace, b: &SkewBrace) -> Result<SkewBrace> {
    let order = a.order() * b.order();
    if order > DEFAULT_MAX_PRODUCT_ORDER {
        return Err(Error::BoundExceeded {
            what: "direct product",
            limit: DEFAULT_MAX_PRODUCT_ORDER,
            actual: order,
        });
    }
    Ok(SkewBrace::from_groups_unchecked(
        a.add.direct_product(&b.add),
        a.circle.direct_product(&b.circle),
    ))
}

/// Semidirect product `A ⋊ B` for an action `theta` of `(B,∘)` on `A` by
/// brace automorphisms: addition is componentwise and
/// `(a1,b1)∘(a2,b2) = (a1∘θ(b1)(a2), b1∘b2)`.
pub fn semidirect_product(a: &SkewBrace, b: &SkewBrace, theta: &[Morphism]) -> Result<SkewBrace> {
    let (n, m) = (a.order(), b.order());
    if n * m > DEFAULT_MAX_PRODUCT_ORDER {
        return Err(Error::BoundExceeded {
            what: "semidirect product",
            limit: DEFAULT_MAX_PRODUCT_ORDER,
            actual: n * m,
        });
    }
    if theta.len() != m {
        return Err(Error::InvalidAction(format!(
            "expected {m} automorphisms, got {}",
            theta.len()
        )));
    }
    for (x, t) in theta.iter().enumerate() {
        if !a.is_isomorphism_to(a, t) {
            return Err(Error::InvalidAction(format!(
                "theta({x}) is not a brace automorphism"
            )));
        }
    }
    for x in 0..m {
        for y in 0..m {
            if theta[b.circ(x, y)] != theta[x].after(&theta[y]) {
                return Err(Error::InvalidAction(format!(
                    "not a homomorphism: theta({x}∘{y}) != theta({x}) theta({y})"
                )));
            }
        }
    }
    let idx = |x: usize, y: usize| x * m + y;
    let mut add = vec![vec![0; n * m]; n * m];
    let mut circle = vec![vec![0; n * m]; n * m];
    for p in 0..n * m {
        let (a1, b1) = (p / m, p % m);
        for q in 0..n * m {
            let (a2, b2) = (q / m, q % m);
            add[p][q] = idx(a.add(a1, a2), b.add(b1, b2));
            circle[p][q] = idx(a.circ(a1, theta[b1].apply(a2)), b.circ(b1, b2));
        }
    }
    Ok(verify_brace(&add, &circle)?)
}
