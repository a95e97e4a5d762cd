//! Exact sparse multivariate polynomials, divided differences and Demazure
//! operators, Schubert polynomials, and expansion in the Schubert basis of
//! a coinvariant algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coxgen::CoxeterGroup;
use crate::symgroup::Permutation;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u8>;

/// A polynomial in a fixed number of variables `x_1, ..., x_n` with exact
/// rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rational::one())
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "x_{i} out of range");
        let mut m = vec![0; nvars];
        m[i - 1] = 1;
        Polynomial::monomial(m, Rational::one())
    }

    pub fn monomial(exponents: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    /// `x^δ = x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
    pub fn staircase(n: usize) -> Self {
        Polynomial::monomial((0..n).map(|i| (n - 1 - i) as u8).collect(), Rational::one())
    }

    /// Builds a polynomial from a linear form given by integer coefficients.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Polynomial::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            let mut m = vec![0; n];
            m[i] = 1;
            p.add_term(m, rat(c));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &[u8]) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| deg(m)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| deg(m));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, d: usize) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| deg(m) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.nvars])
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Applies the variable substitution `x_i -> sign_i * x_{target_i}`.
    pub fn substitute(&self, images: &[(usize, bool)]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0u8; self.nvars];
            let mut negate = false;
            for (i, &k) in m.iter().enumerate() {
                let (target, neg) = images[i];
                e[target] += k;
                if neg && k % 2 == 1 {
                    negate = !negate;
                }
            }
            out.add_term(e, if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Exact quotient by a nonzero linear form, or `None` when the division
    /// leaves a remainder.
    pub fn div_linear(&self, form: &Polynomial) -> Option<Polynomial> {
        assert_eq!(form.nvars, self.nvars);
        assert!(
            form.terms.keys().all(|m| deg(m) == 1),
            "divisor must be a linear form"
        );
        // Under lex order with x_1 > x_2 > ..., the leading term of the form
        // is its first variable.
        let (lead, lead_c) = form.terms.iter().next_back()?;
        let pivot = lead.iter().position(|&e| e == 1).expect("linear");
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.terms.iter().next_back() {
            if m[pivot] == 0 {
                return None;
            }
            let mut q = m.clone();
            q[pivot] -= 1;
            let qc = c / lead_c;
            for (fm, fc) in &form.terms {
                let prod: Monomial = q.iter().zip(fm).map(|(a, b)| a + b).collect();
                rem.add_term(prod, -(&qc * fc));
            }
            quot.add_term(q, qc);
        }
        Some(quot)
    }

    fn render_coeff(c: &Rational) -> String {
        if c.is_integer() {
            c.to_integer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        }
    }
}

fn deg(m: &[u8]) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

impl fmt::Display for Polynomial {
    /// Graded lex: higher total degree first, then lex with `x_1 > x_2 > ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| deg(b).cmp(&deg(a)).then_with(|| b.cmp(a)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", Polynomial::render_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", Polynomial::render_coeff(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let m = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(m, x * y);
            }
        }
        out
    }
}

/// A reflection acting on polynomials by a signed permutation of the
/// variables, together with its root (a linear form).
#[derive(Clone, Debug)]
pub struct Reflection {
    images: Vec<(usize, bool)>,
    root: Polynomial,
}

impl Reflection {
    /// `images[i] = (k, negate)` encodes `s(x_i) = ±x_k`.
    pub fn new(images: Vec<(usize, bool)>, root: Polynomial) -> Self {
        assert_eq!(images.len(), root.nvars());
        Reflection { images, root }
    }

    /// The transposition `s_i = (i, i+1)` on `n` variables, root `x_i - x_{i+1}`.
    pub fn type_a(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let images = (0..n)
            .map(|k| match k {
                k if k == i - 1 => (i, false),
                k if k == i => (i - 1, false),
                k => (k, false),
            })
            .collect();
        let mut root = vec![0; n];
        root[i - 1] = 1;
        root[i] = -1;
        Reflection::new(images, Polynomial::linear(&root))
    }

    pub fn root(&self) -> &Polynomial {
        &self.root
    }

    pub fn act(&self, f: &Polynomial) -> Polynomial {
        f.substitute(&self.images)
    }
}

/// `∂_s f = (f - s(f)) / α_s`. The division is always exact; a remainder
/// means the reflection data is inconsistent and triggers a panic.
pub fn divided_difference(f: &Polynomial, s: &Reflection) -> Polynomial {
    let diff = f - &s.act(f);
    diff.div_linear(&s.root)
        .expect("f - s(f) is always divisible by the root of s")
}

/// Type-A divided difference `∂_i`.
pub fn divided_difference_a(f: &Polynomial, i: usize) -> Polynomial {
    divided_difference(f, &Reflection::type_a(f.nvars(), i))
}

/// Type-A Demazure operator `π_i(f) = ∂_i(x_i f)`.
pub fn demazure_a(f: &Polynomial, i: usize) -> Polynomial {
    divided_difference_a(&(&Polynomial::var(f.nvars(), i) * f), i)
}

/// `∂_{i_1} ... ∂_{i_l} f` for the word `[i_1, ..., i_l]` (type A).
pub fn apply_word(f: &Polynomial, word: &[usize]) -> Polynomial {
    word.iter()
        .rev()
        .fold(f.clone(), |acc, &i| divided_difference_a(&acc, i))
}

/// Lascoux–Schützenberger Schubert polynomial `∂_{w^{-1} w_0} x^δ`.
pub fn schubert_polynomial(w: &Permutation) -> Polynomial {
    let n = w.n();
    let w0 = Permutation::longest(n);
    let word = w.inverse().compose(&w0).expect("same size").reduced_word();
    apply_word(&Polynomial::staircase(n), &word)
}

/// Coefficients in the Schubert basis, keyed by element index of the
/// ambient [`CoinvariantAlgebra`].
pub type SchubertVector = BTreeMap<usize, Rational>;

/// The coinvariant algebra of a finite reflection group presented through
/// its Schubert basis: the group's multiplication data by simple
/// reflections, and one Schubert polynomial per element.
pub struct CoinvariantAlgebra {
    nvars: usize,
    reflections: Vec<Reflection>,
    labels: Vec<String>,
    lengths: Vec<usize>,
    /// `right[k][w]` is the index of `w s_k`.
    right: Vec<Vec<usize>>,
    /// `left[k][w]` is the index of `s_k w`.
    left: Vec<Vec<usize>>,
    by_length: Vec<usize>,
    identity: usize,
    schubert: Vec<Polynomial>,
    integral: bool,
    variable_table: OnceLock<Vec<Vec<SchubertVector>>>,
}

impl CoinvariantAlgebra {
    /// `Z[x_1..x_n]` modulo symmetric functions, with Lascoux–Schützenberger
    /// Schubert polynomials. Elements are `S_n` in lexicographic order.
    pub fn type_a(n: usize) -> Self {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let index: std::collections::HashMap<&Permutation, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let right = (1..n)
            .map(|k| perms.iter().map(|p| index[&p.mul_simple_right(k)]).collect())
            .collect();
        let left = (1..n)
            .map(|k| perms.iter().map(|p| index[&p.mul_simple_left(k)]).collect())
            .collect();
        let reflections = (1..n).map(|k| Reflection::type_a(n, k)).collect();
        Self::build(
            n,
            reflections,
            perms.iter().map(|p| p.to_string()).collect(),
            perms.iter().map(|p| p.length()).collect(),
            right,
            left,
            Polynomial::staircase(n),
            true,
        )
    }

    /// Hiller's Schubert calculus for a finite Weyl group: the top class is
    /// `(1/|W|) ∏_{α > 0} α` and coefficients are rational.
    pub fn hiller(group: &CoxeterGroup) -> Self {
        let nvars = group.dimension();
        let reflections = (0..group.rank())
            .map(|k| group.simple_reflection_operator(k))
            .collect();
        let mut top = Polynomial::constant(nvars, Rational::new(BigInt::one(), BigInt::from(group.order())));
        for root in group.positive_roots() {
            top = &top * &Polynomial::linear(root);
        }
        let right = (0..group.rank())
            .map(|k| (0..group.order()).map(|w| group.right_mul(w, k)).collect())
            .collect();
        let left = (0..group.rank())
            .map(|k| (0..group.order()).map(|w| group.left_mul(w, k)).collect())
            .collect();
        Self::build(
            nvars,
            reflections,
            (0..group.order()).map(|w| group.format_index(w)).collect(),
            (0..group.order()).map(|w| group.length_of(w)).collect(),
            right,
            left,
            top,
            false,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn build(
        nvars: usize,
        reflections: Vec<Reflection>,
        labels: Vec<String>,
        lengths: Vec<usize>,
        right: Vec<Vec<usize>>,
        left: Vec<Vec<usize>>,
        top: Polynomial,
        integral: bool,
    ) -> Self {
        let size = labels.len();
        let mut by_length: Vec<usize> = (0..size).collect();
        by_length.sort_by_key(|&w| (lengths[w], w));
        let identity = by_length[0];
        let longest = *by_length.last().expect("nonempty group");
        // S_w = ∂_s S_{ws} for any right ascent s of w, from the top down.
        let mut schubert: Vec<Option<Polynomial>> = vec![None; size];
        schubert[longest] = Some(top);
        for &w in by_length.iter().rev().skip(1) {
            let k = (0..reflections.len())
                .find(|&k| lengths[right[k][w]] > lengths[w])
                .expect("non-top element has an ascent");
            let above = schubert[right[k][w]].as_ref().expect("processed by length");
            schubert[w] = Some(divided_difference(above, &reflections[k]));
        }
        CoinvariantAlgebra {
            nvars,
            reflections,
            labels,
            lengths,
            right,
            left,
            by_length,
            identity,
            schubert: schubert.into_iter().map(|p| p.expect("all built")).collect(),
            integral,
            variable_table: OnceLock::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.reflections.len()
    }

    /// Whether the Schubert basis is integral (type A over `Z`).
    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub fn label(&self, w: usize) -> &str {
        &self.labels[w]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn top_degree(&self) -> usize {
        self.lengths[*self.by_length.last().expect("nonempty")]
    }

    pub fn reflection(&self, k: usize) -> &Reflection {
        &self.reflections[k]
    }

    pub fn right_mul(&self, w: usize, k: usize) -> usize {
        self.right[k][w]
    }

    pub fn schubert(&self, w: usize) -> &Polynomial {
        &self.schubert[w]
    }

    /// Elements of a given length, in index order.
    pub fn elements_of_length(&self, d: usize) -> Vec<usize> {
        self.by_length
            .iter()
            .copied()
            .filter(|&w| self.lengths[w] == d)
            .collect()
    }

    /// A reduced word `[k_1, ..., k_l]` (0-based generator indices) with
    /// `w = s_{k_1} ... s_{k_l}`.
    pub fn reduced_word(&self, w: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w;
        while cur != self.identity {
            let k = (0..self.rank())
                .find(|&k| self.lengths[self.left[k][cur]] < self.lengths[cur])
                .expect("non-identity element has a left descent");
            word.push(k);
            cur = self.left[k][cur];
        }
        word
    }

    /// `∂_w f`.
    pub fn divided_difference_by(&self, f: &Polynomial, w: usize) -> Polynomial {
        self.reduced_word(w)
            .iter()
            .rev()
            .fold(f.clone(), |acc, &k| divided_difference(&acc, &self.reflections[k]))
    }

    /// Coefficients `c_w` with `f ≡ Σ c_w S_w` modulo the invariant ideal,
    /// where `c_w` is the constant term of `∂_w f`.
    pub fn expand(&self, f: &Polynomial) -> SchubertVector {
        let mut out = SchubertVector::new();
        let Some(top) = f.degree() else {
            return out;
        };
        let mut images: Vec<Option<Polynomial>> = vec![None; self.size()];
        for &w in &self.by_length {
            if self.lengths[w] > top {
                break;
            }
            let g = if w == self.identity {
                f.clone()
            } else {
                let k = (0..self.rank())
                    .find(|&k| self.lengths[self.left[k][w]] < self.lengths[w])
                    .expect("left descent");
                let prev = images[self.left[k][w]].as_ref().expect("shorter element done");
                if prev.is_zero() {
                    prev.clone()
                } else {
                    divided_difference(prev, &self.reflections[k])
                }
            };
            let c = g.constant_term();
            if !c.is_zero() {
                out.insert(w, c);
            }
            images[w] = Some(g);
        }
        out
    }

    /// `c_{u,v}^w`: the coefficient of `S_w` in `S_u S_v`; zero unless
    /// `ℓ(w) = ℓ(u) + ℓ(v)`.
    pub fn structure_constant(&self, u: usize, v: usize, w: usize) -> Rational {
        if self.lengths[w] != self.lengths[u] + self.lengths[v] {
            return Rational::zero();
        }
        let prod = &self.schubert[u] * &self.schubert[v];
        self.divided_difference_by(&prod, w).constant_term()
    }

    /// `table[k][u]` is the Schubert expansion of `x_{k+1} S_u`.
    pub fn variable_table(&self) -> &Vec<Vec<SchubertVector>> {
        self.variable_table.get_or_init(|| {
            (1..=self.nvars)
                .map(|k| {
                    let x = Polynomial::var(self.nvars, k);
                    (0..self.size())
                        .map(|u| self.expand(&(&x * &self.schubert[u])))
                        .collect()
                })
                .collect()
        })
    }

    /// Expresses a Schubert vector as a polynomial.
    pub fn to_polynomial(&self, v: &SchubertVector) -> Polynomial {
        v.iter().fold(Polynomial::zero(self.nvars), |acc, (&w, c)| {
            &acc + &self.schubert[w].scale(c)
        })
    }

    /// Relabels a Schubert vector by element labels (one-line words in type A).
    pub fn labelled(&self, v: &SchubertVector) -> BTreeMap<String, String> {
        v.iter()
            .map(|(&w, c)| (self.labels[w].clone(), Polynomial::render_coeff(c)))
            .collect()
    }
}

/// Sparsity check: with `u ∈ W^J` and `x, x' ∈ W_J` of equal
/// length, `c_{u,x}^{u x'}` is `1` when `x = x'` and `0` otherwise.
pub fn verify_sparsity(
    alg: &CoinvariantAlgebra,
    u: &Permutation,
    x: &Permutation,
    x2: &Permutation,
    j: &[usize],
) -> crate::error::Result<bool> {
    use crate::error::Error;
    if x.length() != x2.length() {
        return Err(Error::Precondition(format!("ℓ({x}) != ℓ({x2})")));
    }
    if u.descents().iter().any(|d| j.contains(d)) {
        return Err(Error::Precondition(format!("{u} is not in W^J")));
    }
    let in_parabolic = |p: &Permutation| {
        let word = p.reduced_word();
        word.iter().all(|i| j.contains(i))
    };
    if !in_parabolic(x) || !in_parabolic(x2) {
        return Err(Error::Precondition("x, x' must lie in W_J".into()));
    }
    let idx = |p: &Permutation| alg.index_of(&p.to_string()).expect("same n");
    let w = u.compose(x2)?;
    let c = alg.structure_constant(idx(u), idx(x), idx(&w));
    let expected = if x == x2 { Rational::one() } else { Rational::zero() };
    Ok(c == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn arb_poly(nvars: usize, max_deg: u8) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (prop::collection::vec(0..=max_deg, nvars), -5i64..=5),
            0..6,
        )
        .prop_map(move |terms| {
            let mut f = Polynomial::zero(nvars);
            for (m, c) in terms {
                f.add_term(m, rat(c));
            }
            f
        })
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(divided_difference_a(&x(2, 1), 1), Polynomial::one(2));
        assert!(divided_difference_a(&(&x(2, 1) * &x(2, 2)), 1).is_zero());
        let sq = &x(2, 1) * &x(2, 1);
        assert_eq!(divided_difference_a(&sq, 1), &x(2, 1) + &x(2, 2));
        assert_eq!(divided_difference_a(&sq, 1).to_string(), "x1 + x2");
    }

    #[test]
    fn apply_word_examples() {
        let f = &(&x(3, 1) * &x(3, 1)) * &x(3, 2);
        assert_eq!(apply_word(&f, &[]), f);
        assert_eq!(apply_word(&f, &[1, 2, 1]), apply_word(&f, &[2, 1, 2]));
        assert!(apply_word(&f, &[1, 1]).is_zero());
    }

    #[test]
    fn demazure_fixes_symmetric_and_raises() {
        let f = &x(2, 1) + &x(2, 2);
        assert_eq!(demazure_a(&f, 1), f);
        assert_eq!(demazure_a(&Polynomial::one(2), 1), Polynomial::one(2));
        assert_eq!(demazure_a(&x(2, 1), 1), &x(2, 1) + &x(2, 2));
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(schubert_polynomial(&p("2134")), x(4, 1));
        assert_eq!(schubert_polynomial(&p("1324")), &x(4, 1) + &x(4, 2));
        assert_eq!(schubert_polynomial(&p("4321")), Polynomial::staircase(4));
        assert_eq!(schubert_polynomial(&p("1234")), Polynomial::one(4));
        assert_eq!(schubert_polynomial(&p("132")).to_string(), "x1 + x2");
    }

    #[test]
    fn schubert_polynomials_are_nonnegative_integral() {
        let alg = CoinvariantAlgebra::type_a(5);
        for w in 0..alg.size() {
            let s = alg.schubert(w);
            assert!(s.has_integer_coefficients() && s.has_nonnegative_coefficients());
            assert_eq!(s.degree(), Some(alg.length(w)));
            assert!(s.is_homogeneous());
            let perm: Permutation = alg.label(w).parse().unwrap();
            assert_eq!(*s, schubert_polynomial(&perm));
        }
    }

    #[test]
    fn hiller_examples() {
        let a1 = CoxeterGroup::build(crate::coxgen::CoxeterType::A, 1).unwrap();
        let alg = CoinvariantAlgebra::hiller(&a1);
        let s = alg.index_of("2 1").unwrap();
        let expected = (&x(2, 1) - &x(2, 2)).scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(*alg.schubert(s), expected);
        for (kind, rank) in [("B", 2), ("B", 3), ("A", 3)] {
            let g = CoxeterGroup::build(kind.parse().unwrap(), rank).unwrap();
            let alg = CoinvariantAlgebra::hiller(&g);
            assert_eq!(*alg.schubert(alg.identity()), Polynomial::one(alg.nvars()));
            for w in 0..alg.size() {
                assert_eq!(alg.schubert(w).degree(), Some(alg.length(w)));
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let alg = CoinvariantAlgebra::type_a(2);
        let s1 = alg.index_of("21").unwrap();
        let e = alg.expand(&x(2, 2));
        assert_eq!(e, SchubertVector::from([(s1, rat(-1))]));
        assert!(alg.expand(&(&x(2, 1) + &x(2, 2))).is_empty());
        let alg = CoinvariantAlgebra::type_a(4);
        for w in 0..alg.size() {
            assert_eq!(alg.expand(alg.schubert(w)), SchubertVector::from([(w, rat(1))]));
        }
    }

    #[test]
    fn delta_duality_in_s4() {
        let alg = CoinvariantAlgebra::type_a(4);
        for w in 0..alg.size() {
            for w2 in alg.elements_of_length(alg.length(w)) {
                let c = alg.divided_difference_by(alg.schubert(w), w2).constant_term();
                assert_eq!(c, if w == w2 { rat(1) } else { rat(0) });
            }
        }
    }

    #[test]
    fn structure_constant_examples() {
        let alg = CoinvariantAlgebra::type_a(3);
        let i = |s: &str| alg.index_of(s).unwrap();
        assert_eq!(alg.structure_constant(i("213"), i("213"), i("312")), rat(1));
        assert_eq!(alg.structure_constant(i("213"), i("213"), i("231")), rat(0));
        assert_eq!(alg.structure_constant(i("213"), i("213"), i("321")), rat(0));
    }

    #[test]
    fn structure_constants_respect_bruhat_support() {
        use crate::symgroup::bruhat_leq;
        let alg = CoinvariantAlgebra::type_a(4);
        let perms: Vec<Permutation> = (0..alg.size()).map(|w| alg.label(w).parse().unwrap()).collect();
        for u in 0..alg.size() {
            for v in 0..alg.size() {
                let len = alg.length(u) + alg.length(v);
                for w in alg.elements_of_length(len) {
                    let c = alg.structure_constant(u, v, w);
                    assert!(c >= rat(0), "Schubert structure constants are nonnegative");
                    let above = bruhat_leq(&perms[u], &perms[w]).unwrap()
                        && bruhat_leq(&perms[v], &perms[w]).unwrap();
                    if !above {
                        assert_eq!(c, rat(0));
                    }
                }
            }
        }
    }

    #[test]
    fn sparsity_examples() {
        let alg = CoinvariantAlgebra::type_a(3);
        assert!(verify_sparsity(&alg, &p("213"), &p("132"), &p("132"), &[2]).unwrap());
        assert!(verify_sparsity(&alg, &p("213"), &p("123"), &p("123"), &[2]).unwrap());
        let alg = CoinvariantAlgebra::type_a(4);
        assert!(verify_sparsity(&alg, &p("2134"), &p("1243"), &p("1324"), &[2, 3]).unwrap());
        assert!(verify_sparsity(&alg, &p("2134"), &p("2134"), &p("2134"), &[2, 3]).is_err());
        assert!(verify_sparsity(&alg, &p("2134"), &p("1243"), &p("1342"), &[2, 3]).is_err());
    }

    #[test]
    fn display_is_graded_lex() {
        let f = &(&(&x(3, 2) * &x(3, 2)) + &x(3, 3)) - &(&x(3, 1) * &x(3, 3)).scale(&Rational::new(3.into(), 2.into()));
        assert_eq!(f.to_string(), "-3/2*x1*x3 + x2^2 + x3");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
    }

    proptest! {
        #[test]
        fn divided_difference_squares_to_zero(f in arb_poly(4, 4), i in 1usize..4) {
            prop_assert!(divided_difference_a(&divided_difference_a(&f, i), i).is_zero());
        }

        #[test]
        fn braid_relations(f in arb_poly(4, 4)) {
            prop_assert_eq!(apply_word(&f, &[1, 2, 1]), apply_word(&f, &[2, 1, 2]));
            prop_assert_eq!(apply_word(&f, &[2, 3, 2]), apply_word(&f, &[3, 2, 3]));
            prop_assert_eq!(apply_word(&f, &[1, 3]), apply_word(&f, &[3, 1]));
        }

        #[test]
        fn leibniz_rule(f in arb_poly(3, 3), g in arb_poly(3, 3), i in 1usize..3) {
            let s = Reflection::type_a(3, i);
            let lhs = divided_difference(&(&f * &g), &s);
            let rhs = &(&divided_difference(&f, &s) * &g) + &(&s.act(&f) * &divided_difference(&g, &s));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn division_by_linear_form_inverts_multiplication(f in arb_poly(3, 3), a in -3i64..=3, b in 1i64..=3, c in -3i64..=3) {
            let form = Polynomial::linear(&[a, b, c]);
            prop_assert_eq!((&f * &form).div_linear(&form), Some(f));
        }

        #[test]
        fn expansion_is_a_fixed_point(f in arb_poly(4, 2)) {
            let alg = coinvariant_s4();
            let coeffs = alg.expand(&f);
            let rest = &f - &alg.to_polynomial(&coeffs);
            prop_assert!(alg.expand(&rest).is_empty());
        }
    }

    fn coinvariant_s4() -> &'static CoinvariantAlgebra {
        static ALG: OnceLock<CoinvariantAlgebra> = OnceLock::new();
        ALG.get_or_init(|| CoinvariantAlgebra::type_a(4))
    }
}
