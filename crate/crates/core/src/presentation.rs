//! Generating sets for the ideals `J_v` of `Λ/I_{r,n-r}` and `I_w` of the
//! coinvariant algebra, and minimal generator counts over `ℤ`.
//!
//! Minimal counts use graded Nakayama: in degree `d` the number of new
//! generators is the minimal number of generators of `M_d / (R_+ M)_d`,
//! read off a Smith normal form.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::coxgen::{CoxeterGroup, CoxeterType};
use crate::error::{Error, Result};
use crate::lattice::{quotient, Lattice, Vector};
use crate::poly::{CoinvariantAlgebra, Polynomial, Rational, SchubertVector};
use crate::symfunc::{pieri, schur_monomials, Kind, Partition, SchurVector};
use crate::symgroup::{
    self, bigrassmannian_triple, essential_set, grassmannian_to_partition, parabolic_cosets,
    Permutation, RankTriple,
};

/// Default cap on the top degree `r(n-r)` of a quotient `Λ/I_{r,n-r}`.
pub const DEFAULT_DEGREE_BUDGET: usize = 64;

/// The numbers attached to a bigrassmannian `v_{r,s,t,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BigrassmannianData {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub a: usize,
    pub b: usize,
}

impl BigrassmannianData {
    pub fn from_triple(rt: RankTriple, n: usize) -> Result<Self> {
        let RankTriple { r, s, t } = RankTriple::new(rt.r, rt.s, rt.t, n)?;
        let i = s - t + 1;
        let j = r - t + 1;
        Ok(BigrassmannianData {
            r,
            s,
            t,
            n,
            i,
            j,
            a: (n - r - i).min(r - j),
            b: i.min(j),
        })
    }

    /// `i^j`: the smallest shape in the ideal.
    pub fn rectangle(&self) -> Partition {
        Partition::rectangle(self.i as u32, self.j)
    }

    /// `(n-r)^r`.
    pub fn ambient_box(&self) -> Partition {
        Partition::rectangle((self.n - self.r) as u32, self.r)
    }

    pub fn binomial(&self) -> usize {
        binomial(self.a + self.b, self.a)
    }
}

pub fn bigrassmannian_data(v: &Permutation) -> Result<BigrassmannianData> {
    BigrassmannianData::from_triple(bigrassmannian_triple(v)?, v.n())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, m| acc * (n - m) / (m + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Full,
    One,
    Two,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Variant::Full),
            "one" => Ok(Variant::One),
            "two" => Ok(Variant::Two),
            other => Err(Error::Precondition(format!("unknown variant {other}"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Full => "full",
            Variant::One => "one",
            Variant::Two => "two",
        })
    }
}

/// Shapes of a generating set of `J_v`, in (degree, dominance, lex) order.
pub fn gen_set_data(d: &BigrassmannianData, variant: Variant) -> Vec<Partition> {
    let (i, j, a, b) = (d.i as u32, d.j, d.a, d.b);
    let upper = match variant {
        Variant::Full => d.ambient_box(),
        Variant::One => {
            let mut parts = vec![i + a as u32; b];
            parts.extend(std::iter::repeat(i).take(j - b));
            Partition::new(parts).expect("weakly decreasing")
        }
        Variant::Two => {
            let mut parts = vec![i; j];
            parts.extend(std::iter::repeat(b as u32).take(a));
            Partition::new(parts).expect("weakly decreasing")
        }
    };
    Partition::interval(&d.rectangle(), &upper)
}

pub fn gen_set(v: &Permutation, variant: Variant) -> Result<Vec<Partition>> {
    Ok(gen_set_data(&bigrassmannian_data(v)?, variant))
}

/// A generator of `I_w` coming from one essential element `v`: the Schur
/// polynomial `s_shape(x_1..x_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurGenerator {
    pub v: Permutation,
    pub r: usize,
    pub shape: Partition,
}

impl SchurGenerator {
    pub fn polynomial(&self, nvars: usize) -> Polynomial {
        let mut p = Polynomial::zero(nvars);
        for (mut m, c) in schur_monomials(&self.shape, self.r) {
            m.resize(nvars, 0);
            p.add_term(m, crate::poly::rat(c));
        }
        p
    }
}

/// A grassmannian generator `𝔖_u` of `I_w`, with its descent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GrassmannianGenerator {
    pub u: Permutation,
    pub r: usize,
}

/// `{u grassmannian : u >= v, Des(u) = Des(v) for some v ∈ E(w)}`, sorted
/// by length and then lexicographically.
pub fn gen_set_iw_grassmannian(w: &Permutation) -> Vec<GrassmannianGenerator> {
    let essential = essential_set(w);
    let mut out: Vec<GrassmannianGenerator> = Permutation::all(w.n())
        .filter(|u| u.descents().len() == 1)
        .filter(|u| {
            essential.iter().any(|v| {
                v.descents() == u.descents() && symgroup::bruhat_leq(v, u).expect("same n")
            })
        })
        .map(|u| GrassmannianGenerator { r: u.descents()[0], u })
        .collect();
    out.sort_by(|x, y| (x.u.length(), &x.u).cmp(&(y.u.length(), &y.u)));
    out
}

/// Concatenation of the first generating set of each `J_v`, `v ∈ E(w)`.
pub fn gen_set_iw_schur(w: &Permutation) -> Vec<SchurGenerator> {
    essential_set(w)
        .into_iter()
        .flat_map(|v| {
            let d = bigrassmannian_data(&v).expect("essential elements are bigrassmannian");
            gen_set_data(&d, Variant::One)
                .into_iter()
                .map(move |shape| SchurGenerator { v: v.clone(), r: d.r, shape })
        })
        .collect()
}

/// Graded closure of a set of homogeneous generators under a family of
/// multiplications. `products(d, x)` lists `(degree, vector)` for every
/// product of the degree-`d` vector `x` with a ring generator.
struct Closure {
    /// `M_d`.
    module: Vec<Lattice>,
    /// `(R_+ M)_d`.
    decomposable: Vec<Lattice>,
}

fn close<F>(dims: &[usize], gens: &[(usize, Vector)], products: F) -> Closure
where
    F: Fn(usize, &Vector) -> Vec<(usize, Vector)>,
{
    let top = dims.len();
    let mut pending: Vec<Vec<Vector>> = vec![Vec::new(); top];
    let mut module = Vec::with_capacity(top);
    let mut decomposable = Vec::with_capacity(top);
    for d in 0..top {
        let n_d = Lattice::span(dims[d], std::mem::take(&mut pending[d]));
        let own: Vec<Vector> = gens
            .iter()
            .filter(|(deg, _)| *deg == d)
            .map(|(_, v)| v.clone())
            .collect();
        let m_d = n_d.sum(&Lattice::span(dims[d], own));
        for x in m_d.basis() {
            for (e, y) in products(d, x) {
                if e < top && e > d {
                    pending[e].push(y);
                }
            }
        }
        // Keep the pending lists small.
        for e in d + 1..top {
            if pending[e].len() > 4 * dims[e] + 8 {
                let reduced = Lattice::span(dims[e], std::mem::take(&mut pending[e]));
                pending[e] = reduced.basis().to_vec();
            }
        }
        module.push(m_d);
        decomposable.push(n_d);
    }
    Closure { module, decomposable }
}

/// One lattice per degree, in the Schur basis of `Λ/I_{r,n-r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLattice {
    pub r: usize,
    pub n: usize,
    bases: Vec<Vec<Partition>>,
    lattices: Vec<Lattice>,
}

impl GradedLattice {
    pub fn top_degree(&self) -> usize {
        self.lattices.len() - 1
    }

    pub fn degree(&self, d: usize) -> &Lattice {
        &self.lattices[d]
    }

    /// The Schur basis of degree `d`, indexing vector coordinates.
    pub fn basis(&self, d: usize) -> &[Partition] {
        &self.bases[d]
    }

    /// The elements of degree `d` as Schur vectors.
    pub fn vectors(&self, d: usize) -> Vec<SchurVector> {
        self.lattices[d]
            .basis()
            .iter()
            .map(|x| from_coords(&self.bases[d], x))
            .collect()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.lattices.iter().map(Lattice::rank).collect()
    }
}

/// The Schur basis of `Λ/I_{r,n-r}`, one list per degree `0..=r(n-r)`.
fn box_bases(r: usize, n: usize) -> Vec<Vec<Partition>> {
    (0..=r * (n - r))
        .map(|d| Partition::in_box(d as u32, r, n - r))
        .collect()
}

fn coords(basis: &[Partition], index: &HashMap<Partition, usize>, v: &SchurVector) -> Vector {
    let mut out = vec![BigInt::zero(); basis.len()];
    for (p, c) in v.terms() {
        if let Some(&k) = index.get(p) {
            out[k] = BigInt::from(c);
        }
    }
    out
}

fn from_coords(basis: &[Partition], x: &[BigInt]) -> SchurVector {
    let mut v = SchurVector::zero();
    for (p, c) in basis.iter().zip(x) {
        v.add_term(p.clone(), c.to_i64().expect("coefficient fits in i64"));
    }
    v
}

fn check_box(r: usize, n: usize, budget: usize) -> Result<()> {
    if r == 0 || r >= n {
        return Err(Error::Precondition(format!("need 1 <= r < n, got r={r}, n={n}")));
    }
    let top = r * (n - r);
    if top > budget {
        return Err(Error::DegreeBudget { requested: top, budget });
    }
    Ok(())
}

fn lambda_closure(
    gens: &[SchurVector],
    r: usize,
    n: usize,
    budget: usize,
    kind: Kind,
) -> Result<(Vec<Vec<Partition>>, Closure, Vec<(usize, Vector)>)> {
    check_box(r, n, budget)?;
    let bases = box_bases(r, n);
    let index: Vec<HashMap<Partition, usize>> = bases
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect())
        .collect();
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let top = dims.len() - 1;
    let mut graded = Vec::new();
    for g in gens {
        let g = crate::symfunc::project_quotient(g, r, n);
        if g.is_zero() {
            continue;
        }
        if !g.is_homogeneous() {
            return Err(Error::Precondition(format!("{g} is not homogeneous")));
        }
        let d = g.terms().next().expect("nonzero").0.size() as usize;
        graded.push((d, coords(&bases[d], &index[d], &g)));
    }
    let closure = close(&dims, &graded, |d, x| {
        let v = from_coords(&bases[d], x);
        (1..=top - d)
            .map(|k| {
                let y = crate::symfunc::project_quotient(&pieri(kind, k as u32, &v), r, n);
                (d + k, coords(&bases[d + k], &index[d + k], &y))
            })
            .collect()
    });
    Ok((bases, closure, graded))
}

/// The ideal of `Λ/I_{r,n-r}` generated by homogeneous `gens`, closing under
/// multiplication by every `h_k`.
pub fn ideal_graded_span(gens: &[SchurVector], r: usize, n: usize, budget: usize) -> Result<GradedLattice> {
    ideal_graded_span_with(gens, r, n, budget, Kind::H)
}

/// As [`ideal_graded_span`], closing under `e_k` (`Kind::E`) or `h_k` (`Kind::H`).
pub fn ideal_graded_span_with(
    gens: &[SchurVector],
    r: usize,
    n: usize,
    budget: usize,
    kind: Kind,
) -> Result<GradedLattice> {
    let (bases, closure, _) = lambda_closure(gens, r, n, budget, kind)?;
    Ok(GradedLattice { r, n, bases, lattices: closure.module })
}

pub fn shapes_to_vectors(shapes: &[Partition]) -> Vec<SchurVector> {
    shapes.iter().cloned().map(SchurVector::schur).collect()
}

/// `J_v` itself: the span of `s_μ` with `i^j ⊆ μ ⊆ (n-r)^r`.
pub fn j_v_span(d: &BigrassmannianData) -> GradedLattice {
    let bases = box_bases(d.r, d.n);
    let rect = d.rectangle();
    let lattices = bases
        .iter()
        .map(|b| {
            let units = b
                .iter()
                .enumerate()
                .filter(|(_, p)| rect.contained_in(p))
                .map(|(k, _)| {
                    let mut e = vec![BigInt::zero(); b.len()];
                    e[k] = BigInt::one();
                    e
                })
                .collect();
            Lattice::span(b.len(), units)
        })
        .collect();
    GradedLattice { r: d.r, n: d.n, bases, lattices }
}

/// Whether the named generating set generates `J_v` over `ℤ`, degree by degree.
pub fn verify_ideal_equality(v: &Permutation, variant: Variant) -> Result<bool> {
    let d = bigrassmannian_data(v)?;
    let gens = shapes_to_vectors(&gen_set_data(&d, variant));
    let span = ideal_graded_span(&gens, d.r, d.n, usize::MAX)?;
    Ok(span == j_v_span(&d))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionEntry {
    pub degree: usize,
    pub invariants: Vec<String>,
}

/// Minimal generator data for a graded ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorReport {
    /// Number of generators supplied.
    pub input_count: usize,
    /// Minimal number of new generators in each degree that needs any.
    pub counts_per_degree: BTreeMap<usize, usize>,
    pub total: usize,
    /// Degrees of a minimal generating set, with multiplicity.
    pub degrees: Vec<usize>,
    pub degree_polynomial: String,
    /// Whether the supplied set is already of minimal size.
    pub minimal: bool,
    /// Indices of supplied generators that the others already generate.
    pub redundant: Vec<usize>,
    pub torsion: Vec<TorsionEntry>,
}

impl GeneratorReport {
    /// Coefficients of the degree polynomial, lowest degree first.
    pub fn degree_coefficients(&self) -> Vec<usize> {
        let top = self.counts_per_degree.keys().max().copied().unwrap_or(0);
        (0..=top)
            .map(|d| self.counts_per_degree.get(&d).copied().unwrap_or(0))
            .collect()
    }
}

/// Renders `Σ c_d q^d`, e.g. `q + q^2` or `q^4 + 2q^6`.
pub fn render_q_polynomial(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(d, &c)| {
            let var = match d {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{d}"),
            };
            match (c, d) {
                (_, 0) => c.to_string(),
                (1, _) => var,
                _ => format!("{c}{var}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// `rational`: compare ℚ-spans only, ignoring torsion.
fn report(closure: &Closure, graded: &[(usize, Vector)], rational: bool) -> GeneratorReport {
    let mut counts = BTreeMap::new();
    let mut torsion = Vec::new();
    for (d, (m, n)) in closure.module.iter().zip(&closure.decomposable).enumerate() {
        let q = quotient(m, n).expect("decomposable part lies in the module");
        let count = if rational { q.free_rank } else { q.min_generators() };
        if count > 0 {
            counts.insert(d, count);
        }
        if !rational && !q.torsion.is_empty() {
            torsion.push(TorsionEntry {
                degree: d,
                invariants: q.torsion.iter().map(ToString::to_string).collect(),
            });
        }
    }
    let redundant = (0..graded.len())
        .filter(|&g| {
            let (d, x) = &graded[g];
            let others: Vec<Vector> = graded
                .iter()
                .enumerate()
                .filter(|&(h, (e, _))| h != g && e == d)
                .map(|(_, (_, y))| y.clone())
                .collect();
            let dim = closure.module[*d].dim();
            let rest = closure.decomposable[*d].sum(&Lattice::span(dim, others));
            if rational {
                rest.sum(&Lattice::span(dim, vec![x.clone()])).rank() == rest.rank()
            } else {
                rest.contains(x)
            }
        })
        .collect();
    let total: usize = counts.values().sum();
    let degrees = counts
        .iter()
        .flat_map(|(&d, &c)| std::iter::repeat(d).take(c))
        .collect();
    let mut r = GeneratorReport {
        input_count: graded.len(),
        counts_per_degree: counts,
        total,
        degrees,
        degree_polynomial: String::new(),
        minimal: total == graded.len(),
        redundant,
        torsion,
    };
    r.degree_polynomial = render_q_polynomial(&r.degree_coefficients());
    r
}

/// Minimal generators of the ideal of `Λ/I_{r,n-r}` generated by `gens`.
pub fn minimal_generators(gens: &[SchurVector], r: usize, n: usize, budget: usize) -> Result<GeneratorReport> {
    let (_, closure, graded) = lambda_closure(gens, r, n, budget, Kind::H)?;
    let mut rep = report(&closure, &graded, false);
    // Generators that vanish in the quotient are redundant too.
    rep.input_count = gens.len();
    rep.minimal = rep.total == gens.len();
    Ok(rep)
}

/// Gaussian binomial `[n choose k]_q`, by the q-Pascal recurrence.
pub fn q_binomial(n: usize, k: usize) -> Vec<usize> {
    if k > n {
        return vec![0];
    }
    let mut rows: Vec<Vec<Vec<usize>>> = vec![vec![vec![1]]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let row = (0..=m)
            .map(|j| {
                if j == 0 || j == m {
                    return vec![1];
                }
                // [m, j] = [m-1, j-1] + q^j [m-1, j]
                let a = &prev[j - 1];
                let b = &prev[j];
                let mut out = vec![0; (a.len()).max(b.len() + j)];
                for (d, &c) in a.iter().enumerate() {
                    out[d] += c;
                }
                for (d, &c) in b.iter().enumerate() {
                    out[d + j] += c;
                }
                out
            })
            .collect();
        rows.push(row);
    }
    rows[n][k].clone()
}

/// `q^{ij} [a+b choose a]_q` as a coefficient list.
pub fn expected_degree_profile(d: &BigrassmannianData) -> Vec<usize> {
    let mut out = vec![0; d.i * d.j];
    out.extend(q_binomial(d.a + d.b, d.a));
    out
}

fn degree_profile(shapes: &[Partition]) -> Vec<usize> {
    let mut out = Vec::new();
    for p in shapes {
        let d = p.size() as usize;
        if out.len() <= d {
            out.resize(d + 1, 0);
        }
        out[d] += 1;
    }
    out
}

/// Both generating sets have `binom(a+b, a)` elements with degrees
/// distributed as `q^{ij} [a+b choose a]_q`.
pub fn degree_genfun_check(v: &Permutation) -> Result<bool> {
    let d = bigrassmannian_data(v)?;
    let expected = expected_degree_profile(&d);
    Ok([Variant::One, Variant::Two].iter().all(|&variant| {
        let shapes = gen_set_data(&d, variant);
        shapes.len() == d.binomial() && degree_profile(&shapes) == expected
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureCase {
    pub v: Permutation,
    pub data: BigrassmannianData,
    pub variant: Variant,
    pub expected: usize,
    pub report: GeneratorReport,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub r_max: usize,
    pub k_max: usize,
    pub cases: Vec<ConjectureCase>,
    pub failures: usize,
    pub pass: bool,
}

/// All non-identity bigrassmannians with descent `r <= r_max` and
/// `n - r <= k_max`, by `n` and then `(r, s, t)`.
pub fn bigrassmannians_in_range(r_max: usize, k_max: usize) -> Vec<(Permutation, BigrassmannianData)> {
    (2..=r_max + k_max)
        .flat_map(|n| {
            symgroup::bigrassmannians(n)
                .into_iter()
                .filter(move |(rt, _)| rt.r <= r_max && n - rt.r <= k_max)
                .map(move |(rt, v)| (v, BigrassmannianData::from_triple(rt, n).expect("valid")))
        })
        .collect()
}

/// Checks that both generating sets are minimal, with the q-binomial degree
/// profile, for every bigrassmannian in range.
pub fn verify_minimality_conjecture(r_max: usize, k_max: usize, budget: usize) -> Result<ConjectureReport> {
    if r_max * k_max > budget {
        return Err(Error::DegreeBudget { requested: r_max * k_max, budget });
    }
    let jobs: Vec<(Permutation, BigrassmannianData, Variant)> = bigrassmannians_in_range(r_max, k_max)
        .into_iter()
        .flat_map(|(v, d)| [Variant::One, Variant::Two].map(|var| (v.clone(), d, var)))
        .collect();
    let cases: Vec<ConjectureCase> = jobs
        .into_par_iter()
        .map(|(v, d, variant)| {
            let gens = shapes_to_vectors(&gen_set_data(&d, variant));
            let report = minimal_generators(&gens, d.r, d.n, budget).expect("within budget");
            let expected = d.binomial();
            let pass = report.total == expected
                && report.minimal
                && report.redundant.is_empty()
                && report.torsion.is_empty()
                && report.degree_coefficients() == trim(expected_degree_profile(&d));
            ConjectureCase { v, data: d, variant, expected, report, pass }
        })
        .collect();
    let failures = cases.iter().filter(|c| !c.pass).count();
    Ok(ConjectureReport { r_max, k_max, cases, failures, pass: failures == 0 })
}

fn trim(mut v: Vec<usize>) -> Vec<usize> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// For `t = s`, the second generating set is the columns
/// `e_m(x_1..x_r)`, `m = r-s+1, ..., a+r-s+1`.
pub fn verify_inclusion_case(v: &Permutation) -> Result<bool> {
    let d = bigrassmannian_data(v)?;
    if d.t != d.s {
        return Err(Error::Precondition(format!("{v} has t = {} but s = {}", d.t, d.s)));
    }
    let expected: Vec<Partition> = (d.r - d.s + 1..=d.a + d.r - d.s + 1)
        .map(Partition::column)
        .collect();
    Ok(gen_set_data(&d, Variant::Two) == expected)
}

/// The central bigrassmannian of `S_{4m}`: `r = s = 2m`, `i = j = m`.
pub fn lower_bound_bigrassmannian(m: usize) -> Result<Permutation> {
    symgroup::make_bigrassmannian(RankTriple::new(2 * m, 2 * m, m + 1, 4 * m)?, 4 * m)
}

/// Minimal generators of `J_v` for the central bigrassmannian of `S_{4m}`,
/// computed from the full shape list so the count is intrinsic to `J_v`.
pub fn lower_bound_family(m: usize, budget: usize) -> Result<(Permutation, GeneratorReport)> {
    let v = lower_bound_bigrassmannian(m)?;
    let d = bigrassmannian_data(&v)?;
    let gens = shapes_to_vectors(&gen_set_data(&d, Variant::Full));
    Ok((v, minimal_generators(&gens, d.r, d.n, budget)?))
}

// ---------------------------------------------------------------------------
// Ideals of the coinvariant algebra.

/// Coordinates of Schubert vectors, one block per degree.
struct SchubertGrading {
    by_degree: Vec<Vec<usize>>,
    position: Vec<usize>,
}

impl SchubertGrading {
    fn new(alg: &CoinvariantAlgebra) -> Self {
        let by_degree: Vec<Vec<usize>> = (0..=alg.top_degree()).map(|d| alg.elements_of_length(d)).collect();
        let mut position = vec![0; alg.size()];
        for elems in &by_degree {
            for (k, &w) in elems.iter().enumerate() {
                position[w] = k;
            }
        }
        SchubertGrading { by_degree, position }
    }

    fn dims(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }

    /// Homogeneous vector to `(degree, integer coordinates)`. Rational
    /// coordinates are cleared of denominators unless `integral`.
    fn encode(&self, alg: &CoinvariantAlgebra, v: &SchubertVector, integral: bool) -> Option<(usize, Vector)> {
        let (&w0, _) = v.iter().find(|(_, c)| !c.is_zero())?;
        let d = alg.length(w0);
        let mut denom = BigInt::one();
        for c in v.values() {
            denom = denom.lcm(c.denom());
        }
        if integral {
            assert!(denom.is_one(), "integral algebra produced a fraction");
        }
        let mut x = vec![BigInt::zero(); self.by_degree[d].len()];
        for (&w, c) in v {
            if c.is_zero() {
                continue;
            }
            assert_eq!(alg.length(w), d, "inhomogeneous Schubert vector");
            x[self.position[w]] = (c * Rational::from_integer(denom.clone())).to_integer();
        }
        Some((d, x))
    }
}

fn coinvariant_closure(
    alg: &CoinvariantAlgebra,
    gens: &[SchubertVector],
) -> (SchubertGrading, Closure, Vec<(usize, Vector)>) {
    let grading = SchubertGrading::new(alg);
    let integral = alg.is_integral();
    let table = alg.variable_table();
    let graded: Vec<(usize, Vector)> = gens
        .iter()
        .filter_map(|g| grading.encode(alg, g, integral))
        .collect();
    let closure = close(&grading.dims(), &graded, |d, x| {
        table
            .iter()
            .filter_map(|row| {
                let mut acc = SchubertVector::new();
                for (k, c) in x.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let u = grading.by_degree[d][k];
                    for (&w, a) in &row[u] {
                        *acc.entry(w).or_insert_with(Rational::zero) += a * Rational::from_integer(c.clone());
                    }
                }
                acc.retain(|_, c| !c.is_zero());
                grading.encode(alg, &acc, integral)
            })
            .collect()
    });
    (grading, closure, graded)
}

/// Minimal generators of the ideal of the coinvariant algebra generated by
/// `gens`. Over `ℤ` for an integral algebra, otherwise over `ℚ`.
pub fn coinvariant_minimal_generators(alg: &CoinvariantAlgebra, gens: &[SchubertVector]) -> GeneratorReport {
    let (_, closure, graded) = coinvariant_closure(alg, gens);
    let mut rep = report(&closure, &graded, !alg.is_integral());
    rep.input_count = gens.len();
    rep.minimal = rep.total == gens.len();
    rep
}

/// Whether `gens` generate exactly the span of the Schubert classes in
/// `target`, degree by degree.
pub fn coinvariant_ideal_equals(alg: &CoinvariantAlgebra, gens: &[SchubertVector], target: &[usize]) -> bool {
    let (grading, closure, _) = coinvariant_closure(alg, gens);
    closure.module.iter().enumerate().all(|(d, m)| {
        let units: Vec<Vector> = grading.by_degree[d]
            .iter()
            .enumerate()
            .filter(|(_, w)| target.contains(w))
            .map(|(k, _)| {
                let mut e = vec![BigInt::zero(); grading.by_degree[d].len()];
                e[k] = BigInt::one();
                e
            })
            .collect();
        let t = Lattice::span(m.dim(), units);
        if alg.is_integral() {
            *m == t
        } else {
            m.rank() == t.rank() && m.sum(&t).rank() == t.rank()
        }
    })
}

fn unit(w: usize) -> SchubertVector {
    SchubertVector::from([(w, Rational::one())])
}

/// Everything needed to judge how many generators `I_w` needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchubertIdealReport {
    pub w: Permutation,
    pub essential: Vec<Permutation>,
    /// `Σ_{v ∈ E(w)} binom(a+b, a)`.
    pub concatenated: usize,
    pub generators: Vec<SchurGenerator>,
    /// Whether the concatenated Schur generators span `I_w`.
    pub generates: bool,
    pub report: GeneratorReport,
}

/// Minimal generators of `I_w ⊂ H^*(Fl_n)`, starting from the concatenated
/// Schur generating set.
pub fn schubert_ideal_minimal_generators(w: &Permutation) -> SchubertIdealReport {
    let alg = CoinvariantAlgebra::type_a(w.n());
    schubert_ideal_report_in(&alg, w)
}

pub fn schubert_ideal_report_in(alg: &CoinvariantAlgebra, w: &Permutation) -> SchubertIdealReport {
    let generators = gen_set_iw_schur(w);
    let vectors: Vec<SchubertVector> = generators
        .iter()
        .map(|g| alg.expand(&g.polynomial(w.n())))
        .collect();
    let target = complement_indices_a(alg, w);
    SchubertIdealReport {
        w: w.clone(),
        essential: essential_set(w),
        concatenated: generators.len(),
        generates: coinvariant_ideal_equals(alg, &vectors, &target),
        report: coinvariant_minimal_generators(alg, &vectors),
        generators,
    }
}

fn complement_indices_a(alg: &CoinvariantAlgebra, w: &Permutation) -> Vec<usize> {
    (0..alg.size())
        .filter(|&u| {
            let p: Permutation = alg.label(u).parse().expect("labels are one-line words");
            !symgroup::bruhat_leq(&p, w).expect("same n")
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupIdealReport {
    pub group: String,
    pub elements_checked: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// For every `w ∈ S_n`: the grassmannian Schubert polynomials attached to
/// `E(w)` generate `span{𝔖_u : u ≰ w}` over `ℤ`.
pub fn verify_schubert_ideals_a(n: usize) -> GroupIdealReport {
    let alg = CoinvariantAlgebra::type_a(n);
    alg.variable_table();
    let index: HashMap<String, usize> = (0..alg.size()).map(|u| (alg.label(u).to_string(), u)).collect();
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let failures: Vec<String> = perms
        .par_iter()
        .filter(|w| {
            let gens: Vec<SchubertVector> = gen_set_iw_grassmannian(w)
                .iter()
                .map(|g| unit(index[&g.u.to_string()]))
                .collect();
            let target = complement_indices_a(&alg, w);
            !coinvariant_ideal_equals(&alg, &gens, &target)
        })
        .map(ToString::to_string)
        .collect();
    GroupIdealReport {
        group: format!("A{}", n - 1),
        elements_checked: perms.len(),
        pass: failures.is_empty(),
        failures,
    }
}

/// The same statement in a Weyl group with Hiller's Schubert classes over `ℚ`.
pub fn verify_schubert_ideals_coxeter(kind: CoxeterType, rank: usize) -> Result<GroupIdealReport> {
    let group = CoxeterGroup::build(kind, rank)?;
    let alg = CoinvariantAlgebra::hiller(&group);
    alg.variable_table();
    let elements: Vec<_> = group.elements().collect();
    let grassmannian: Vec<_> = elements
        .iter()
        .copied()
        .filter(|&u| group.descents(u).expect("own").len() == 1)
        .collect();
    let failures: Vec<String> = elements
        .par_iter()
        .filter(|&&w| {
            let essential = group.essential_set(w).expect("own");
            let gens: Vec<SchubertVector> = grassmannian
                .iter()
                .filter(|&&u| {
                    essential.iter().any(|&v| {
                        group.descents(v).expect("own") == group.descents(u).expect("own")
                            && group.bruhat_leq(v, u).expect("own")
                    })
                })
                .map(|u| unit(u.index()))
                .collect();
            let target: Vec<usize> = elements
                .iter()
                .filter(|&&u| !group.bruhat_leq(u, w).expect("own"))
                .map(|u| u.index())
                .collect();
            !coinvariant_ideal_equals(&alg, &gens, &target)
        })
        .map(|&w| group.format(w).expect("own"))
        .collect();
    Ok(GroupIdealReport {
        group: group.name(),
        elements_checked: elements.len(),
        pass: failures.is_empty(),
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicReport {
    pub w: Permutation,
    pub j: Vec<usize>,
    pub w_max: Permutation,
    pub essential: Vec<Permutation>,
    pub generators: Vec<GrassmannianGenerator>,
    /// Every essential element has no descent in `J`.
    pub essential_in_w_j: bool,
    /// Every grassmannian generator has its descent outside `J`.
    pub generators_invariant: bool,
    pub pass: bool,
}

/// Checks for the largest element of `w W_J` that its essential set lies in
/// `W^J`, and that its grassmannian generators are `W_J`-invariant.
pub fn verify_parabolic(w: &Permutation, j: &[usize]) -> Result<ParabolicReport> {
    let w_max = parabolic_cosets(w, j)?.w_max;
    let essential = essential_set(&w_max);
    let generators = gen_set_iw_grassmannian(&w_max);
    let essential_in_w_j = essential
        .iter()
        .all(|v| v.descents().iter().all(|d| !j.contains(d)));
    let generators_invariant = generators.iter().all(|g| !j.contains(&g.r));
    Ok(ParabolicReport {
        w: w.clone(),
        j: j.to_vec(),
        w_max,
        essential,
        generators,
        pass: essential_in_w_j && generators_invariant,
        essential_in_w_j,
        generators_invariant,
    })
}

/// The Schur generators of `I_w` written as grassmannian permutations.
pub fn schur_generators_as_grassmannian(gens: &[SchurGenerator], n: usize) -> Result<Vec<Permutation>> {
    gens.iter()
        .map(|g| symgroup::partition_to_grassmannian(&g.shape, g.r, n))
        .collect()
}

/// Partition of a grassmannian generator.
pub fn grassmannian_shape(g: &GrassmannianGenerator) -> Partition {
    grassmannian_to_partition(&g.u, g.r).expect("generator is grassmannian")
}
