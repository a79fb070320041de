//! Finite set-theoretic solutions of the Yang–Baxter equation.
//!
//! A solution on `X = {0..n}` is `r(x,y) = (σ_x(y), τ_y(x))`, stored as
//! `sigma[x][y] = σ_x(y)` and `tau[y][x] = τ_y(x)`.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::brace::SkewBrace;
use crate::error::{Error, Result};

/// Default cap on the size of a generated permutation group.
pub const DEFAULT_MAX_PERMUTATION_GROUP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SolutionJson", into = "SolutionJson")]
pub struct SetSolution {
    size: usize,
    sigma: Vec<usize>,
    tau: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SolutionJson {
    size: usize,
    sigma: Vec<Vec<usize>>,
    tau: Vec<Vec<usize>>,
}

impl TryFrom<SolutionJson> for SetSolution {
    type Error = Error;

    fn try_from(j: SolutionJson) -> Result<Self> {
        let s = SetSolution::new(&j.sigma, &j.tau)?;
        if s.size != j.size {
            return Err(Error::MalformedSolution(format!(
                "declared size {} but tables have {} rows",
                j.size, s.size
            )));
        }
        Ok(s)
    }
}

impl From<SetSolution> for SolutionJson {
    fn from(s: SetSolution) -> Self {
        SolutionJson {
            size: s.size,
            sigma: s.sigma_rows(),
            tau: s.tau_rows(),
        }
    }
}

fn flatten(name: &str, rows: &[Vec<usize>], n: usize) -> Result<Vec<usize>> {
    if rows.len() != n {
        return Err(Error::MalformedSolution(format!(
            "{name} has {} rows, expected {n}",
            rows.len()
        )));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedSolution(format!(
                "{name} row {i} has length {}, expected {n}",
                row.len()
            )));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::MalformedSolution(format!(
                "{name} row {i} contains {v} outside 0..{n}"
            )));
        }
        flat.extend_from_slice(row);
    }
    Ok(flat)
}

impl SetSolution {
    /// `sigma[x][y] = σ_x(y)` and `tau[y][x] = τ_y(x)`.
    pub fn new(sigma: &[Vec<usize>], tau: &[Vec<usize>]) -> Result<Self> {
        let n = sigma.len();
        if n == 0 {
            return Err(Error::MalformedSolution("empty set".into()));
        }
        Ok(SetSolution {
            size: n,
            sigma: flatten("sigma", sigma, n)?,
            tau: flatten("tau", tau, n)?,
        })
    }

    /// Builds a solution from `σ(x, y) = σ_x(y)` and `τ(y, x) = τ_y(x)`.
    pub fn from_fns(
        n: usize,
        sigma: impl Fn(usize, usize) -> usize,
        tau: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let sigma: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| sigma(x, y)).collect())
            .collect();
        let tau: Vec<Vec<usize>> = (0..n)
            .map(|y| (0..n).map(|x| tau(y, x)).collect())
            .collect();
        SetSolution::new(&sigma, &tau)
    }

    /// `r(x,y) = (y,x)`
    pub fn flip(n: usize) -> Self {
        SetSolution::from_fns(n, |_, y| y, |_, x| x).expect("flip tables are well formed")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.sigma[x * self.size + y]
    }

    #[inline]
    pub fn tau(&self, y: usize, x: usize) -> usize {
        self.tau[y * self.size + x]
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma(x, y), self.tau(y, x))
    }

    pub fn sigma_rows(&self) -> Vec<Vec<usize>> {
        self.sigma
            .chunks(self.size)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn tau_rows(&self) -> Vec<Vec<usize>> {
        self.tau.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    fn sigma_map(&self, x: usize) -> &[usize] {
        &self.sigma[x * self.size..(x + 1) * self.size]
    }

    fn tau_map(&self, y: usize) -> &[usize] {
        &self.tau[y * self.size..(y + 1) * self.size]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Degeneracy {
    /// `σ_x` is not a bijection.
    Sigma(usize),
    /// `τ_y` is not a bijection.
    Tau(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionCheck {
    pub is_bijective: bool,
    pub is_ybe: bool,
    pub is_nondegenerate: bool,
    pub is_involutive: bool,
    /// Two pairs with the same image under `r`.
    pub bijectivity_witness: Option<[(usize, usize); 2]>,
    /// A triple where `r₁r₂r₁` and `r₂r₁r₂` differ.
    pub braid_witness: Option<(usize, usize, usize)>,
    pub degeneracy_witness: Option<Degeneracy>,
    /// A pair with `r²(x,y) ≠ (x,y)`.
    pub involutivity_witness: Option<(usize, usize)>,
}

fn is_permutation(f: &[usize]) -> bool {
    let mut hit = vec![false; f.len()];
    f.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
}

fn invert(f: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; f.len()];
    for (i, &y) in f.iter().enumerate() {
        inv[y] = i;
    }
    inv
}

fn degeneracy(s: &SetSolution) -> Option<Degeneracy> {
    let n = s.size;
    (0..n)
        .find(|&x| !is_permutation(s.sigma_map(x)))
        .map(Degeneracy::Sigma)
        .or_else(|| {
            (0..n)
                .find(|&y| !is_permutation(s.tau_map(y)))
                .map(Degeneracy::Tau)
        })
}

fn braid_witness(s: &SetSolution) -> Option<(usize, usize, usize)> {
    let n = s.size;
    let r1 = |(x, y, z): (usize, usize, usize)| {
        let (u, v) = s.apply(x, y);
        (u, v, z)
    };
    let r2 = |(x, y, z): (usize, usize, usize)| {
        let (u, v) = s.apply(y, z);
        (x, u, v)
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t = (x, y, z);
                if r1(r2(r1(t))) != r2(r1(r2(t))) {
                    return Some(t);
                }
            }
        }
    }
    None
}

pub fn check_solution(s: &SetSolution) -> SolutionCheck {
    let n = s.size;
    let mut seen = vec![None; n * n];
    let mut bijectivity_witness = None;
    'outer: for x in 0..n {
        for y in 0..n {
            let (u, v) = s.apply(x, y);
            if let Some(prev) = seen[u * n + v].replace((x, y)) {
                bijectivity_witness = Some([prev, (x, y)]);
                break 'outer;
            }
        }
    }
    let involutivity_witness = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| {
            let (u, v) = s.apply(x, y);
            s.apply(u, v) != (x, y)
        });
    let braid = braid_witness(s);
    let degeneracy_witness = degeneracy(s);
    SolutionCheck {
        is_bijective: bijectivity_witness.is_none(),
        is_ybe: braid.is_none(),
        is_nondegenerate: degeneracy_witness.is_none(),
        is_involutive: involutivity_witness.is_none(),
        bijectivity_witness,
        braid_witness: braid,
        degeneracy_witness,
        involutivity_witness,
    }
}

/// `r_A(a,b) = (λ_a(b), λ_a(b)′∘a∘b)`
pub fn solution_from_brace(a: &SkewBrace) -> SetSolution {
    let n = a.order();
    SetSolution::from_fns(
        n,
        |x, y| a.lambda(x, y),
        |y, x| {
            let l = a.lambda(x, y);
            a.circ(a.circ(a.circ_inv(l), x), y)
        },
    )
    .expect("brace tables give well-formed solutions")
}

/// `r▷(x,y) = (y, y▷x)` with `y▷x = σ_y(τ_{σ_x⁻¹(y)}(x))`.
pub fn derived_solution(s: &SetSolution) -> Result<SetSolution> {
    if let Some(d) = degeneracy(s) {
        return Err(Error::Degenerate(format!("{d:?}")));
    }
    let n = s.size;
    let sigma_inv: Vec<Vec<usize>> = (0..n).map(|x| invert(s.sigma_map(x))).collect();
    SetSolution::from_fns(n, |_, y| y, |y, x| s.sigma(y, s.tau(sigma_inv[x][y], x)))
}

/// `y ▷ x` of a derived-form solution.
fn triangle(s: &SetSolution, y: usize, x: usize) -> usize {
    s.tau(y, x)
}

pub fn is_derived_form(s: &SetSolution) -> bool {
    let n = s.size;
    (0..n).all(|x| (0..n).all(|y| s.sigma(x, y) == y))
}

fn require_derived(s: &SetSolution) -> Result<()> {
    if is_derived_form(s) {
        Ok(())
    } else {
        let n = s.size;
        let (x, y) = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| s.sigma(x, y) != y)
            .unwrap();
        Err(Error::NotDerivedForm(format!(
            "σ_{x}({y}) = {} != {y}",
            s.sigma(x, y)
        )))
    }
}

/// `x ▷ x = x` for every `x`.
pub fn is_quandle(s: &SetSolution) -> Result<bool> {
    require_derived(s)?;
    Ok((0..s.size).all(|x| triangle(s, x, x) == x))
}

/// Orbits of the group generated by a family of permutations, each sorted,
/// ordered by smallest member.
pub fn orbits_of(n: usize, perms: &[&[usize]]) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut orbit = vec![start];
        label[start] = id;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for p in perms {
                let y = p[x];
                if label[y] == usize::MAX {
                    label[y] = id;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedOrbits {
    pub indecomposable: bool,
    pub orbits: Vec<Vec<usize>>,
}

/// Transitivity of the group generated by the maps `x ↦ y ▷ x`.
pub fn indecomposable_derived(s: &SetSolution) -> Result<DerivedOrbits> {
    require_derived(s)?;
    let maps: Vec<&[usize]> = (0..s.size).map(|y| s.tau_map(y)).collect();
    let orbits = orbits_of(s.size, &maps);
    Ok(DerivedOrbits {
        indecomposable: orbits.len() == 1,
        orbits,
    })
}

pub fn is_indecomposable_derived(s: &SetSolution) -> Result<bool> {
    Ok(indecomposable_derived(s)?.indecomposable)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationGroupSummary {
    pub order: usize,
    /// The distinct non-identity `σ_x`, sorted.
    pub generators: Vec<Vec<usize>>,
    pub orbits: Vec<Vec<usize>>,
}

/// The group generated by all `σ_x`, closed breadth-first.
pub fn permutation_group(s: &SetSolution, cap: usize) -> Result<PermutationGroupSummary> {
    if let Some(d) = degeneracy(s) {
        return Err(Error::Degenerate(format!("{d:?}")));
    }
    let n = s.size;
    let identity: Vec<usize> = (0..n).collect();
    let mut generators: Vec<Vec<usize>> = (0..n)
        .map(|x| s.sigma_map(x).to_vec())
        .filter(|p| *p != identity)
        .collect();
    generators.sort();
    generators.dedup();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        for g in &generators {
            let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
            if seen.insert(q.clone()) {
                if seen.len() > cap {
                    return Err(Error::BoundExceeded {
                        what: "permutation group",
                        limit: cap,
                        actual: seen.len(),
                    });
                }
                queue.push_back(q);
            }
        }
    }
    let refs: Vec<&[usize]> = generators.iter().map(Vec::as_slice).collect();
    Ok(PermutationGroupSummary {
        order: seen.len(),
        orbits: orbits_of(n, &refs),
        generators,
    })
}

/// Orbits of the group generated by all `σ_x` and all `τ_y`.
pub fn solution_orbits(s: &SetSolution) -> Vec<Vec<usize>> {
    let n = s.size;
    let maps: Vec<&[usize]> = (0..n)
        .map(|x| s.sigma_map(x))
        .chain((0..n).map(|y| s.tau_map(y)))
        .collect();
    orbits_of(n, &maps)
}

pub fn is_trivial_solution(s: &SetSolution) -> bool {
    *s == SetSolution::flip(s.size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::tests::ring_2z8;
    use crate::brace::trivial_brace;
    use crate::group::library::*;

    /// Four points, `σ_x = (0 1)` and `τ_y = (2 3)` for all `x`, `y`.
    fn transposition_pair() -> SetSolution {
        let s = [1, 0, 2, 3];
        let t = [0, 1, 3, 2];
        SetSolution::from_fns(4, |_, y| s[y], |_, x| t[x]).unwrap()
    }

    /// `X = C₃` written additively: `r(x,y) = (2y, x + 2y)`.
    fn c3_example() -> SetSolution {
        SetSolution::from_fns(3, |_, y| 2 * y % 3, |y, x| (x + 2 * y) % 3).unwrap()
    }

    #[test]
    fn flip() {
        let f = SetSolution::flip(5);
        let c = check_solution(&f);
        assert!(c.is_bijective && c.is_ybe && c.is_nondegenerate && c.is_involutive);
        assert_eq!(derived_solution(&f).unwrap(), f);
        assert!(is_quandle(&derived_solution(&f).unwrap()).unwrap());
        assert_eq!(permutation_group(&f, 100).unwrap().order, 1);
        assert_eq!(solution_orbits(&f).len(), 5);
        assert!(is_trivial_solution(&f));
        assert!(is_indecomposable_derived(&SetSolution::flip(1)).unwrap());
    }

    #[test]
    fn transposition_pair_example() {
        let s = transposition_pair();
        let c = check_solution(&s);
        assert!(c.is_ybe && c.is_nondegenerate && c.is_bijective);
        assert!(!c.is_involutive);
        assert!(c.involutivity_witness.is_some());
        let d = derived_solution(&s).unwrap();
        for y in 0..4 {
            assert_eq!(d.tau_rows()[y], vec![1, 0, 3, 2]);
        }
        assert!(!is_quandle(&d).unwrap());
        let o = indecomposable_derived(&d).unwrap();
        assert!(!o.indecomposable);
        assert_eq!(o.orbits, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(solution_orbits(&s), vec![vec![0, 1], vec![2, 3]]);
        let g = permutation_group(&s, 100).unwrap();
        assert_eq!(g.order, 2);
        assert_eq!(g.generators, vec![vec![1, 0, 2, 3]]);
        assert!(!is_trivial_solution(&s));
    }

    #[test]
    fn c3_example_values() {
        let s = c3_example();
        let c = check_solution(&s);
        assert!(c.is_ybe && c.is_nondegenerate);
        let d = derived_solution(&s).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(d.tau(y, x), (2 * x + 2 * y) % 3);
            }
        }
        assert!(is_quandle(&d).unwrap());
        assert!(is_indecomposable_derived(&d).unwrap());
        assert_eq!(permutation_group(&s, 100).unwrap().order, 2);
        assert_eq!(solution_orbits(&s), vec![vec![0, 1, 2]]);
        assert!(!is_trivial_solution(&s));
    }

    #[test]
    fn brace_solutions() {
        assert!(is_trivial_solution(&solution_from_brace(&trivial_brace(
            &cyclic(6)
        ))));
        let s3 = trivial_brace(&symmetric3());
        let s = solution_from_brace(&s3);
        let g = s3.additive_group();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(s.apply(a, b), (b, g.mul(g.mul(g.inv(b), a), b)));
            }
        }
        let c = check_solution(&s);
        assert!(c.is_ybe && c.is_nondegenerate && !c.is_involutive);
        let c = check_solution(&solution_from_brace(&ring_2z8()));
        assert!(c.is_ybe && c.is_nondegenerate && c.is_involutive);
    }

    #[test]
    fn failures_have_witnesses() {
        // r(x,y) = (x, y) is bijective and satisfies the braid relation but σ_x is constant
        let id = SetSolution::from_fns(2, |x, _| x, |y, _| y).unwrap();
        let c = check_solution(&id);
        assert!(c.is_ybe && c.is_bijective && c.is_involutive);
        assert_eq!(c.degeneracy_witness, Some(Degeneracy::Sigma(0)));
        assert!(matches!(derived_solution(&id), Err(Error::Degenerate(_))));

        let constant = SetSolution::from_fns(2, |_, _| 0, |_, _| 0).unwrap();
        let c = check_solution(&constant);
        assert!(!c.is_bijective);
        assert_eq!(c.bijectivity_witness, Some([(0, 0), (0, 1)]));

        let s = SetSolution::from_fns(3, |x, y| (x + y) % 3, |_, x| x).unwrap();
        let c = check_solution(&s);
        assert!(!c.is_ybe && c.braid_witness.is_some());
        assert!(matches!(is_quandle(&s), Err(Error::NotDerivedForm(_))));
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(
            SetSolution::new(&[], &[]),
            Err(Error::MalformedSolution(_))
        ));
        assert!(SetSolution::new(&[vec![0, 1], vec![1]], &[vec![0, 1], vec![0, 1]]).is_err());
        assert!(SetSolution::new(&[vec![0, 2], vec![1, 0]], &[vec![0, 1], vec![0, 1]]).is_err());
        let bad = r#"{"size": 3, "sigma": [[0,1],[1,0]], "tau": [[0,1],[0,1]]}"#;
        assert!(serde_json::from_str::<SetSolution>(bad).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = c3_example();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(
            text,
            r#"{"size":3,"sigma":[[0,2,1],[0,2,1],[0,2,1]],"tau":[[0,1,2],[2,0,1],[1,2,0]]}"#
        );
        assert_eq!(serde_json::from_str::<SetSolution>(&text).unwrap(), s);
    }

    #[test]
    fn permutation_group_cap() {
        let s = c3_example();
        assert!(matches!(
            permutation_group(&s, 1),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
