//! Partitions and the Schur basis of Λ and Λ/I_{r,n-r}.
//!
//! Multiplication goes through the Pieri rule only: a product `s_λ · v`
//! expands `s_λ` by Jacobi–Trudi into h-monomials and applies each `h_k`
//! as a horizontal strip.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{rat, Polynomial};

/// An integer partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::MalformedPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `width^height`: `height` rows of length `width`.
    pub fn rectangle(width: u32, height: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![width; height] }
    }

    pub fn row(k: u32) -> Self {
        Partition::rectangle(k, 1)
    }

    pub fn column(k: usize) -> Self {
        Partition::rectangle(1, k)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-based, with zeros past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return self.parts.first().copied().unwrap_or(0);
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(1);
        Partition {
            parts: (1..=width)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        }
    }

    /// Young diagram containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(1) as usize <= cols
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        (1..=n).all(|i| {
            a += self.part(i);
            b += other.part(i);
            a >= b
        })
    }

    /// `(self, 1^k)`.
    pub fn with_column(&self, k: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat(1).take(k));
        Partition { parts }
    }

    /// All partitions of `d`, in [`Ord`] order.
    pub fn of_size(d: u32) -> Vec<Partition> {
        Partition::in_box(d, usize::MAX, d as usize)
    }

    /// Partitions of `d` with at most `rows` parts, each at most `cols`.
    pub fn in_box(d: u32, rows: usize, cols: usize) -> Vec<Partition> {
        fn go(rest: u32, max: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if rows == 0 {
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, rows - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        let cols = cols.min(d as usize) as u32;
        go(d, cols, rows, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Every `μ` with `lo ⊆ μ ⊆ hi`, in [`Ord`] order.
    pub fn interval(lo: &Partition, hi: &Partition) -> Vec<Partition> {
        if !lo.contained_in(hi) {
            return Vec::new();
        }
        let rows = hi.len();
        let mut out = Vec::new();
        let mut cur = vec![0u32; rows];
        fn go(i: usize, lo: &Partition, hi: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == cur.len() {
                out.push(Partition::new(cur.clone()).expect("weakly decreasing"));
                return;
            }
            let top = if i == 0 { hi.part(1) } else { hi.part(i + 1).min(cur[i - 1]) };
            for p in lo.part(i + 1)..=top {
                cur[i] = p;
                go(i + 1, lo, hi, cur, out);
            }
        }
        go(0, lo, hi, &mut cur, &mut out);
        out.sort();
        out
    }
}

/// Size first, then lexicographic. Within a size this refines dominance:
/// if `λ` dominates `μ` then `μ <= λ`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.parts.iter().join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `[2,2,1]`, `2,2,1`, `2 2 1` and `[]`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(str::parse::<u32>)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::MalformedPartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::MalformedPartition(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// Partitions `μ ⊇ λ` with `μ/λ` a horizontal strip of size `k` and at
/// most `max_rows` rows.
pub fn horizontal_strips(lambda: &Partition, k: u32, max_rows: usize) -> Vec<Partition> {
    let rows = (lambda.len() + 1).min(max_rows);
    if rows < lambda.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; rows];
    fn go(i: usize, rest: u32, lambda: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == cur.len() {
            if rest == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing"));
            }
            return;
        }
        let base = lambda.part(i + 1);
        // Interlacing: mu_{i+1} <= lambda_i.
        let cap = if i == 0 { base + rest } else { lambda.part(i).min(base + rest) };
        for p in base..=cap {
            cur[i] = p;
            go(i + 1, rest - (p - base), lambda, cur, out);
        }
    }
    go(0, k, lambda, &mut cur, &mut out);
    out.sort();
    out
}

/// Partitions `μ ⊇ λ` with `μ/λ` a vertical strip of size `k`.
pub fn vertical_strips(lambda: &Partition, k: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = horizontal_strips(&lambda.conjugate(), k, usize::MAX)
        .iter()
        .map(Partition::conjugate)
        .collect();
    out.sort();
    out
}

/// A finite integer combination of Schur functions. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurVector {
    terms: BTreeMap<Partition, i64>,
}

impl SchurVector {
    pub fn zero() -> Self {
        SchurVector::default()
    }

    pub fn one() -> Self {
        SchurVector::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        SchurVector { terms: BTreeMap::from([(lambda, 1)]) }
    }

    pub fn h(k: u32) -> Self {
        SchurVector::schur(Partition::row(k))
    }

    pub fn e(k: u32) -> Self {
        SchurVector::schur(Partition::column(k as usize))
    }

    pub fn add_term(&mut self, lambda: Partition, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.keys().map(Partition::size).dedup().count() <= 1
    }

    pub fn homogeneous_component(&self, d: u32) -> SchurVector {
        SchurVector {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == d)
                .map(|(p, &c)| (p.clone(), c))
                .collect(),
        }
    }

    pub fn scale(&self, c: i64) -> SchurVector {
        let mut out = SchurVector::zero();
        for (p, &a) in &self.terms {
            out.add_term(p.clone(), a * c);
        }
        out
    }

    pub fn add(&self, other: &SchurVector) -> SchurVector {
        let mut out = self.clone();
        for (p, &c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SchurVector) -> SchurVector {
        self.add(&other.scale(-1))
    }

    /// Product via Jacobi–Trudi on the terms of `self` and h-Pieri on `other`.
    pub fn mul(&self, other: &SchurVector) -> SchurVector {
        let mut out = SchurVector::zero();
        for (lambda, c) in self.terms() {
            for (sign, hs) in jacobi_trudi(lambda) {
                let mut acc = other.clone();
                for &k in &hs {
                    acc = pieri(Kind::H, k, &acc);
                }
                out = out.add(&acc.scale(sign * c));
            }
        }
        out
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "s{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// JSON map from `"[2,1]"` to coefficient.
impl Serialize for SchurVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (p, c) in &self.terms {
            map.serialize_entry(&p.to_string(), c)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    E,
    H,
}

/// Multiplies `v` by `e_k` or `h_k`.
pub fn pieri(kind: Kind, k: u32, v: &SchurVector) -> SchurVector {
    let mut out = SchurVector::zero();
    for (lambda, c) in v.terms() {
        let shapes = match kind {
            Kind::H => horizontal_strips(lambda, k, usize::MAX),
            Kind::E => vertical_strips(lambda, k),
        };
        for mu in shapes {
            out.add_term(mu, c);
        }
    }
    out
}

/// Drops every term whose shape does not fit in the `r x (n-r)` box.
pub fn project_quotient(v: &SchurVector, r: usize, n: usize) -> SchurVector {
    SchurVector {
        terms: v
            .terms
            .iter()
            .filter(|(p, _)| p.fits_in_box(r, n - r))
            .map(|(p, &c)| (p.clone(), c))
            .collect(),
    }
}

/// `s_λ ↦ s_λ'`.
pub fn omega(v: &SchurVector) -> SchurVector {
    SchurVector {
        terms: v.terms.iter().map(|(p, &c)| (p.conjugate(), c)).collect(),
    }
}

/// `det(h_{λ_i - i + j})` expanded into signed h-monomials. Each monomial
/// lists its indices in decreasing order, with `h_0` factors omitted;
/// monomials containing a negative index are dropped.
pub fn jacobi_trudi(lambda: &Partition) -> Vec<(i64, Vec<u32>)> {
    let l = lambda.len();
    let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for sigma in (0..l).permutations(l) {
        let inversions = (0..l)
            .flat_map(|a| (a + 1..l).map(move |b| (a, b)))
            .filter(|&(a, b)| sigma[a] > sigma[b])
            .count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let idx: Option<Vec<u32>> = (0..l)
            .map(|i| {
                let k = lambda.part(i + 1) as i64 - i as i64 + sigma[i] as i64;
                (k >= 0).then_some(k as u32)
            })
            .collect();
        if let Some(mut idx) = idx {
            idx.retain(|&k| k > 0);
            idx.sort_unstable_by(|a, b| b.cmp(a));
            *acc.entry(idx).or_insert(0) += sign;
        }
    }
    acc.into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(m, c)| (c, m))
        .collect()
}

/// Expands a product of complete homogeneous functions in the Schur basis.
pub fn h_product(ks: &[u32]) -> SchurVector {
    ks.iter()
        .fold(SchurVector::one(), |acc, &k| pieri(Kind::H, k, &acc))
}

/// Re-expands the Jacobi–Trudi determinant of `λ` and compares with `s_λ`.
pub fn verify_jacobi_trudi(lambda: &Partition) -> bool {
    let mut total = SchurVector::zero();
    for (sign, hs) in jacobi_trudi(lambda) {
        total = total.add(&h_product(&hs).scale(sign));
    }
    total == SchurVector::schur(lambda.clone())
}

/// `s_{(ν,1^k)} = Σ_ℓ (-1)^ℓ e_{k-ℓ} Σ_λ s_λ`, with `λ/ν` a horizontal
/// `ℓ`-strip inside the first `ℓ(ν)` rows.
pub fn hook_identity_check(nu: &Partition, k: usize) -> bool {
    let lhs = SchurVector::schur(nu.with_column(k));
    let mut rhs = SchurVector::zero();
    for l in 0..=k {
        let mut inner = SchurVector::zero();
        for lambda in horizontal_strips(nu, l as u32, nu.len()) {
            inner.add_term(lambda, 1);
        }
        let sign = if l % 2 == 0 { 1 } else { -1 };
        rhs = rhs.add(&pieri(Kind::E, (k - l) as u32, &inner).scale(sign));
    }
    lhs == rhs
}

/// The shapes `μ^(m)` and h-degrees of the column expansion, or an error
/// when fewer than `i + 1` parts exceed `i`.
pub fn column_identity_terms(mu: &Partition, i: u32) -> Result<Vec<(i64, i64, Partition)>> {
    let k = mu.parts().iter().filter(|&&p| p > i).count();
    if k <= i as usize {
        return Err(Error::Precondition(format!(
            "column {} of {mu} has length {k}, not more than {i}",
            i + 1
        )));
    }
    let mut terms = Vec::new();
    for m in 1..=k {
        let mut parts: Vec<u32> = (1..m).map(|a| mu.part(a)).collect();
        parts.extend((m + 1..=k).map(|a| mu.part(a) - 1));
        parts.push(i);
        parts.extend(mu.parts()[k..].iter().copied());
        let shape = Partition::new(parts).expect("μ^(m) is a partition");
        let degree = mu.part(m) as i64 + k as i64 - i as i64 - m as i64;
        let sign = if (k - m) % 2 == 0 { 1 } else { -1 };
        terms.push((sign, degree, shape));
    }
    Ok(terms)
}

/// `s_μ = Σ_m (-1)^{k-m} h_{μ_m+k-i-m} s_{μ^(m)}` where `k` counts the
/// parts of `μ` larger than `i`.
pub fn column_identity_check(mu: &Partition, i: u32) -> Result<bool> {
    let mut rhs = SchurVector::zero();
    for (sign, degree, shape) in column_identity_terms(mu, i)? {
        if degree < 0 {
            continue;
        }
        let term = pieri(Kind::H, degree as u32, &SchurVector::schur(shape));
        rhs = rhs.add(&term.scale(sign));
    }
    Ok(rhs == SchurVector::schur(mu.clone()))
}

/// Monomial expansion of `s_λ(x_1..x_r)` as a sum over semistandard tableaux.
pub fn schur_monomials(lambda: &Partition, r: usize) -> HashMap<Vec<u8>, i64> {
    let mut out = HashMap::new();
    if lambda.len() > r {
        return out;
    }
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
        .collect();
    let mut filling: Vec<Vec<u8>> = lambda.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let mut exps = vec![0u8; r];
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        r: usize,
        filling: &mut Vec<Vec<u8>>,
        exps: &mut Vec<u8>,
        out: &mut HashMap<Vec<u8>, i64>,
    ) {
        if idx == cells.len() {
            *out.entry(exps.clone()).or_insert(0) += 1;
            return;
        }
        let (i, j) = cells[idx];
        let left = if j > 0 { filling[i][j - 1] } else { 1 };
        let above = if i > 0 { filling[i - 1][j] + 1 } else { 1 };
        // Row i can only hold values up to r - (rows below it in this column).
        for v in left.max(above)..=r as u8 {
            filling[i][j] = v;
            exps[v as usize - 1] += 1;
            go(idx + 1, cells, r, filling, exps, out);
            exps[v as usize - 1] -= 1;
        }
    }
    go(0, &cells, r, &mut filling, &mut exps, &mut out);
    out
}

/// `s_λ(x_1, ..., x_r)`; zero when `λ` has more than `r` parts.
pub fn schur_in_variables(lambda: &Partition, r: usize) -> Polynomial {
    let mut p = Polynomial::zero(r);
    for (m, c) in schur_monomials(lambda, r) {
        p.add_term(m, rat(c));
    }
    p
}

/// Multiplies `s_λ(x_1..x_nvars)` by `e_k` or `h_k` as monomials and checks
/// the result against the Pieri expansion.
pub fn pieri_monomial_check(kind: Kind, lambda: &Partition, k: u32, nvars: usize) -> bool {
    let left = schur_monomials(lambda, nvars);
    let factor = match kind {
        Kind::H => schur_monomials(&Partition::row(k), nvars),
        Kind::E => schur_monomials(&Partition::column(k as usize), nvars),
    };
    let mut product: HashMap<Vec<u8>, i64> = HashMap::new();
    for (a, &c) in &left {
        for (b, &d) in &factor {
            let m: Vec<u8> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            *product.entry(m).or_insert(0) += c * d;
        }
    }
    let mut expected: HashMap<Vec<u8>, i64> = HashMap::new();
    for (mu, c) in pieri(kind, k, &SchurVector::schur(lambda.clone())).terms() {
        for (m, d) in schur_monomials(mu, nvars) {
            *expected.entry(m).or_insert(0) += c * d;
        }
    }
    product.retain(|_, c| *c != 0);
    expected.retain(|_, c| *c != 0);
    product == expected
}

/// Outcome of checking one identity over a range of inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub identity: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

fn sweep_report(identity: &str, results: Vec<(String, bool)>) -> SweepReport {
    let failures: Vec<String> = results.iter().filter(|(_, ok)| !ok).map(|(c, _)| c.clone()).collect();
    SweepReport {
        identity: identity.to_string(),
        cases: results.len(),
        pass: failures.is_empty(),
        failures,
    }
}

/// The hook identity for every `|ν| <= max_size`, `k <= max_k`.
pub fn hook_sweep(max_size: u32, max_k: usize) -> SweepReport {
    let results = (0..=max_size)
        .flat_map(Partition::of_size)
        .flat_map(|nu| (0..=max_k).map(move |k| (format!("{nu} k={k}"), hook_identity_check(&nu, k))))
        .collect();
    sweep_report("hook", results)
}

/// The column identity for every valid `(μ, i)` with `|μ| <= max_size`.
pub fn column_sweep(max_size: u32) -> SweepReport {
    let results = (0..=max_size)
        .flat_map(Partition::of_size)
        .flat_map(|mu| {
            (0..=mu.part(1))
                .filter_map(|i| column_identity_check(&mu, i).ok().map(|ok| (format!("{mu} i={i}"), ok)))
                .collect::<Vec<_>>()
        })
        .collect();
    sweep_report("column", results)
}

/// Jacobi–Trudi reconstruction for every `|λ| <= max_size`.
pub fn jacobi_trudi_sweep(max_size: u32) -> SweepReport {
    let results = (0..=max_size)
        .flat_map(Partition::of_size)
        .map(|l| (l.to_string(), verify_jacobi_trudi(&l)))
        .collect();
    sweep_report("jacobi-trudi", results)
}

/// Both Pieri rules against monomial products in `nvars` variables, for
/// `|λ| + k <= max_size`.
pub fn pieri_sweep(max_size: u32, nvars: usize) -> SweepReport {
    let results = (0..=max_size)
        .flat_map(Partition::of_size)
        .flat_map(|l| {
            (0..=max_size - l.size()).flat_map(move |k| {
                let l = l.clone();
                [Kind::H, Kind::E].map(move |kind| {
                    (format!("{kind:?} {l} k={k}"), pieri_monomial_check(kind, &l, k, nvars))
                })
            })
        })
        .collect();
    sweep_report("pieri", results)
}
