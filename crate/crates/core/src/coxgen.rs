//! Finite Weyl groups of types A, B and D realized as signed permutations,
//! with Bruhat order by the lifting property and brute-force essential sets.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Reflection};

/// Largest group the enumerating routines will build.
pub const ENUMERATION_BUDGET: usize = 50_000;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CoxeterType {
    A,
    B,
    D,
}

impl FromStr for CoxeterType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(CoxeterType::A),
            "B" | "b" => Ok(CoxeterType::B),
            "D" | "d" => Ok(CoxeterType::D),
            other => Err(Error::UnsupportedGroup(other.to_string())),
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Signed permutation: entry `i` is `±(j+1)` when `e_i -> ±e_j`.
pub type SignedPerm = Vec<i8>;

fn compose(a: &[i8], b: &[i8]) -> SignedPerm {
    b.iter()
        .map(|&x| {
            let img = a[x.unsigned_abs() as usize - 1];
            if x < 0 {
                -img
            } else {
                img
            }
        })
        .collect()
}

fn invert(a: &[i8]) -> SignedPerm {
    let mut inv = vec![0i8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        let j = x.unsigned_abs() as usize - 1;
        inv[j] = if x < 0 { -(i as i8 + 1) } else { i as i8 + 1 };
    }
    inv
}

/// Applies a signed permutation to a coordinate vector.
fn act(w: &[i8], v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    for (i, &x) in w.iter().enumerate() {
        let j = x.unsigned_abs() as usize - 1;
        out[j] = if x < 0 { -v[i] } else { v[i] };
    }
    out
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

/// An element of a specific [`CoxeterGroup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterElement {
    group: u64,
    index: usize,
}

impl CoxeterElement {
    pub fn index(&self) -> usize {
        self.index
    }
}

pub struct CoxeterGroup {
    id: u64,
    kind: CoxeterType,
    rank: usize,
    dim: usize,
    simple_roots: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    generators: Vec<SignedPerm>,
    elements: Vec<SignedPerm>,
    index: HashMap<SignedPerm, usize>,
    lengths: Vec<usize>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    reflections: Vec<usize>,
    longest: usize,
}

impl CoxeterGroup {
    /// Builds `A_rank` (rank <= 7), `B_rank` (2 <= rank <= 4) or `D_4`.
    pub fn build(kind: CoxeterType, rank: usize) -> Result<Self> {
        let supported = match kind {
            CoxeterType::A => (1..=7).contains(&rank),
            CoxeterType::B => (2..=4).contains(&rank),
            CoxeterType::D => rank == 4,
        };
        if !supported {
            return Err(Error::UnsupportedGroup(format!("{kind}{rank}")));
        }
        let dim = if kind == CoxeterType::A { rank + 1 } else { rank };
        let unit = |i: usize| -> Vec<i64> {
            let mut v = vec![0; dim];
            v[i] = 1;
            v
        };
        let sub = |a: Vec<i64>, b: Vec<i64>| -> Vec<i64> { a.iter().zip(&b).map(|(x, y)| x - y).collect() };
        let add = |a: Vec<i64>, b: Vec<i64>| -> Vec<i64> { a.iter().zip(&b).map(|(x, y)| x + y).collect() };

        let identity: SignedPerm = (1..=dim as i8).collect();
        let swap = |k: usize| {
            let mut g = identity.clone();
            g.swap(k, k + 1);
            g
        };
        let mut generators = Vec::new();
        let mut simple_roots = Vec::new();
        let swaps = if kind == CoxeterType::A { rank } else { rank - 1 };
        for k in 0..swaps {
            generators.push(swap(k));
            simple_roots.push(sub(unit(k), unit(k + 1)));
        }
        let mut positive_roots = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                positive_roots.push(sub(unit(i), unit(j)));
                if kind != CoxeterType::A {
                    positive_roots.push(add(unit(i), unit(j)));
                }
            }
        }
        match kind {
            CoxeterType::A => {}
            CoxeterType::B => {
                let mut g = identity.clone();
                g[dim - 1] = -(dim as i8);
                generators.push(g);
                simple_roots.push(unit(dim - 1));
                positive_roots.extend((0..dim).map(unit));
            }
            CoxeterType::D => {
                let mut g = identity.clone();
                g[dim - 2] = -(dim as i8);
                g[dim - 1] = -(dim as i8 - 1);
                generators.push(g);
                simple_roots.push(add(unit(dim - 2), unit(dim - 1)));
            }
        }

        let expected_order = match kind {
            CoxeterType::A => (1..=dim).product::<usize>(),
            CoxeterType::B => (1..=dim).product::<usize>() << dim,
            CoxeterType::D => (1..=dim).product::<usize>() << (dim - 1),
        };
        if expected_order > ENUMERATION_BUDGET {
            return Err(Error::TooLarge(expected_order));
        }

        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for g in &generators {
                let next = compose(&elements[w], g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        assert_eq!(elements.len(), expected_order, "group order formula");

        let lengths: Vec<usize> = elements
            .iter()
            .map(|w| {
                positive_roots
                    .iter()
                    .filter(|a| !is_positive(&act(w, a)))
                    .count()
            })
            .collect();
        let right = generators
            .iter()
            .map(|g| elements.iter().map(|w| index[&compose(w, g)]).collect())
            .collect();
        let left = generators
            .iter()
            .map(|g| elements.iter().map(|w| index[&compose(g, w)]).collect())
            .collect();
        let inverse = elements.iter().map(|w| index[&invert(w)]).collect();
        let reflections = elements
            .iter()
            .flat_map(|x| {
                let xinv = invert(x);
                generators
                    .iter()
                    .map(|g| index[&compose(&compose(x, g), &xinv)])
                    .collect::<Vec<_>>()
            })
            .sorted()
            .dedup()
            .collect();
        let longest = (0..elements.len())
            .max_by_key(|&w| lengths[w])
            .expect("nonempty");

        Ok(CoxeterGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            kind,
            rank,
            dim,
            simple_roots,
            positive_roots,
            generators,
            elements,
            index,
            lengths,
            right,
            left,
            inverse,
            reflections,
            longest,
        })
    }

    pub fn kind(&self) -> CoxeterType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of coordinates of the ambient space.
    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn elements(&self) -> impl Iterator<Item = CoxeterElement> + '_ {
        (0..self.order()).map(|index| CoxeterElement { group: self.id, index })
    }

    pub fn element(&self, index: usize) -> CoxeterElement {
        assert!(index < self.order());
        CoxeterElement { group: self.id, index }
    }

    pub fn identity(&self) -> CoxeterElement {
        self.element(0)
    }

    pub fn longest(&self) -> CoxeterElement {
        self.element(self.longest)
    }

    fn check(&self, e: CoxeterElement) -> Result<usize> {
        if e.group == self.id {
            Ok(e.index)
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn signed_word(&self, e: CoxeterElement) -> Result<&[i8]> {
        Ok(&self.elements[self.check(e)?])
    }

    pub fn length(&self, e: CoxeterElement) -> Result<usize> {
        Ok(self.lengths[self.check(e)?])
    }

    pub(crate) fn length_of(&self, w: usize) -> usize {
        self.lengths[w]
    }

    pub(crate) fn right_mul(&self, w: usize, k: usize) -> usize {
        self.right[k][w]
    }

    pub(crate) fn left_mul(&self, w: usize, k: usize) -> usize {
        self.left[k][w]
    }

    /// Right descents, as 0-based generator indices.
    pub fn descents(&self, e: CoxeterElement) -> Result<Vec<usize>> {
        let w = self.check(e)?;
        Ok(self.descents_of(w))
    }

    fn descents_of(&self, w: usize) -> Vec<usize> {
        (0..self.rank)
            .filter(|&k| self.lengths[self.right[k][w]] < self.lengths[w])
            .collect()
    }

    pub fn inverse(&self, e: CoxeterElement) -> Result<CoxeterElement> {
        Ok(self.element(self.inverse[self.check(e)?]))
    }

    pub fn multiply(&self, a: CoxeterElement, b: CoxeterElement) -> Result<CoxeterElement> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        Ok(self.element(self.index[&compose(&self.elements[a], &self.elements[b])]))
    }

    pub fn is_grassmannian(&self, e: CoxeterElement) -> Result<bool> {
        Ok(self.descents(e)?.len() <= 1)
    }

    pub fn is_bigrassmannian(&self, e: CoxeterElement) -> Result<bool> {
        Ok(self.is_grassmannian(e)? && self.is_grassmannian(self.inverse(e)?)?)
    }

    /// Reduced word as 0-based generator indices, by repeatedly stripping
    /// right descents.
    pub fn reduced_word(&self, e: CoxeterElement) -> Result<Vec<usize>> {
        let mut w = self.check(e)?;
        let mut word = Vec::new();
        while let Some(&k) = self.descents_of(w).first() {
            word.push(k);
            w = self.right[k][w];
        }
        word.reverse();
        Ok(word)
    }

    pub fn parse_element(&self, s: &str) -> Result<CoxeterElement> {
        let word: SignedPerm = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<i8>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::MalformedPermutation(s.to_string()))?;
        self.index
            .get(&word)
            .map(|&index| self.element(index))
            .ok_or_else(|| Error::MalformedPermutation(format!("{s} is not in {}", self.name())))
    }

    /// Signed one-line word such as `2 -1 3`.
    pub fn format(&self, e: CoxeterElement) -> Result<String> {
        Ok(self.format_index(self.check(e)?))
    }

    pub(crate) fn format_index(&self, w: usize) -> String {
        self.elements[w].iter().join(" ")
    }

    /// The simple reflection `s_k` (0-based) as an operator on `k[x_1..x_dim]`.
    pub fn simple_reflection_operator(&self, k: usize) -> Reflection {
        let g = &self.generators[k];
        // s(x_i) is the i-th coordinate of s^{-1} v; generators are involutions.
        let ginv = invert(g);
        let images = (0..self.dim)
            .map(|i| {
                let x = ginv[i];
                (x.unsigned_abs() as usize - 1, x < 0)
            })
            .collect::<Vec<_>>();
        // images[i] describes where the variable x_i is sent.
        let mut by_var = vec![(0usize, false); self.dim];
        for (i, &(j, neg)) in images.iter().enumerate() {
            by_var[j] = (i, neg);
        }
        Reflection::new(by_var, Polynomial::linear(&self.simple_roots[k]))
    }

    /// Bruhat order by the lifting property: pick `s` with `sw < w`; then
    /// `u <= w` iff `su <= sw` when `su < u`, and iff `u <= sw` otherwise.
    pub fn bruhat_leq(&self, u: CoxeterElement, w: CoxeterElement) -> Result<bool> {
        Ok(self.leq(self.check(u)?, self.check(w)?))
    }

    pub(crate) fn leq(&self, mut u: usize, mut w: usize) -> bool {
        loop {
            if u == 0 {
                return true;
            }
            if self.lengths[u] > self.lengths[w] {
                return false;
            }
            if u == w {
                return true;
            }
            let k = (0..self.rank)
                .find(|&k| self.lengths[self.left[k][w]] < self.lengths[w])
                .expect("w is not the identity since ℓ(w) >= ℓ(u) > 0");
            let su = self.left[k][u];
            if self.lengths[su] < self.lengths[u] {
                u = su;
            }
            w = self.left[k][w];
        }
    }

    /// Elements covered by `u`: `u t` for reflections `t` with length one less.
    pub(crate) fn lower_covers(&self, u: usize) -> Vec<usize> {
        let target = self.lengths[u].checked_sub(1);
        self.reflections
            .iter()
            .map(|&t| self.index[&compose(&self.elements[u], &self.elements[t])])
            .filter(|&v| Some(self.lengths[v]) == target)
            .collect()
    }

    pub fn essential_set(&self, w: CoxeterElement) -> Result<Vec<CoxeterElement>> {
        let w = self.check(w)?;
        Ok(self
            .essential_indices(w)
            .into_iter()
            .map(|v| self.element(v))
            .collect())
    }

    pub(crate) fn essential_indices(&self, w: usize) -> Vec<usize> {
        let below: Vec<bool> = (0..self.order()).map(|u| self.leq(u, w)).collect();
        (0..self.order())
            .filter(|&u| !below[u] && self.lower_covers(u).iter().all(|&c| below[c]))
            .collect()
    }

    /// Join-irreducible elements: those that are not the least upper bound
    /// of the set of elements strictly below them.
    pub fn join_irreducibles(&self) -> Vec<CoxeterElement> {
        let n = self.order();
        (1..n)
            .filter(|&a| {
                let covers = self.lower_covers(a);
                (0..n).any(|b| {
                    b != a
                        && covers.iter().all(|&c| self.leq(c, b))
                        && !self.leq(a, b)
                })
            })
            .map(|a| self.element(a))
            .collect()
    }
}

impl fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterGroup({}, order {})", self.name(), self.order())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub w: String,
    pub essential: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub group: String,
    pub elements_scanned: usize,
    pub violations: Vec<Violation>,
    pub pass: bool,
}

/// Checks that every essential-set member of every element is bigrassmannian.
pub fn scan_bigrassmannian_property(group: &CoxeterGroup) -> ScanReport {
    use rayon::prelude::*;
    let violations: Vec<Violation> = (0..group.order())
        .into_par_iter()
        .flat_map_iter(|w| {
            group
                .essential_indices(w)
                .into_iter()
                .filter(|&v| {
                    !group
                        .is_bigrassmannian(group.element(v))
                        .expect("own element")
                })
                .map(move |v| Violation {
                    w: group.format_index(w),
                    essential: group.format_index(v),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    ScanReport {
        group: group.name(),
        elements_scanned: group.order(),
        pass: violations.is_empty(),
        violations,
    }
}
