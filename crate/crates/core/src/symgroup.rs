//! Type-A combinatorics: permutations in one-line notation, the Bruhat
//! order, bigrassmannian permutations, essential sets and Fulton diagrams,
//! parabolic coset representatives and pattern containment.
//!
//! Simple reflections are indexed `1..n`, with `s_i` the transposition
//! `(i, i+1)`. Multiplying on the right by `s_i` swaps the entries in
//! positions `i` and `i+1`; multiplying on the left swaps the values `i` and
//! `i+1`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::symfunc::Partition;

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, rejecting repeats and
    /// out-of-range entries.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::MalformedPermutation(format!("length {n}")));
        }
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n {
                return Err(Error::MalformedPermutation(format!(
                    "entry {x} out of range 1..={n}"
                )));
            }
            if seen[x] {
                return Err(Error::MalformedPermutation(format!("repeated entry {x}")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            word: word.into_iter().map(|x| x as u8).collect(),
        })
    }

    fn from_bytes(word: Vec<u8>) -> Self {
        debug_assert!(Self::new(word.iter().map(|&x| x as usize).collect()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation::from_bytes((1..=n as u8).collect())
    }

    /// The longest element `n ... 2 1`.
    pub fn longest(n: usize) -> Self {
        Permutation::from_bytes((1..=n as u8).rev().collect())
    }

    /// The simple reflection `s_i` of `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange(format!("s_{i} in S_{n}")));
        }
        Ok(Permutation::identity(n).mul_simple_right(i))
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// The value `w(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Indices `i` of the (right) descents `s_i`, i.e. `w_i > w_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.word.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u8;
        }
        Permutation::from_bytes(inv)
    }

    /// The product `self * other`, acting as `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(Permutation::from_bytes(
            other.word.iter().map(|&x| self.word[x as usize - 1]).collect(),
        ))
    }

    /// `w * s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// `s_i * w`: swaps the values `i` and `i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let (a, b) = (i as u8, i as u8 + 1);
        let word = self
            .word
            .iter()
            .map(|&x| match x {
                x if x == a => b,
                x if x == b => a,
                x => x,
            })
            .collect();
        Permutation { word }
    }

    /// A reduced word `[i_1, ..., i_l]` with `self = s_{i_1} ... s_{i_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut cur = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(&i) = cur.descents().first() {
            word.push(i);
            cur = cur.mul_simple_right(i);
        }
        word.reverse();
        word
    }

    /// The rank function `|{w_1..w_r} ∩ {1..s}|`.
    pub fn rank(&self, r: usize, s: usize) -> Result<usize> {
        let n = self.n();
        if r == 0 || s == 0 || r > n || s > n {
            return Err(Error::OutOfRange(format!("rank ({r},{s}) for n={n}")));
        }
        Ok(self.word[..r].iter().filter(|&&x| x as usize <= s).count())
    }

    /// All values of the rank function, `table[r-1][s-1]` for `1 <= r,s <= n`.
    fn rank_table(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut table = vec![vec![0u8; n]; n];
        let mut hits = vec![0u8; n + 1];
        for r in 0..n {
            hits[self.word[r] as usize] = 1;
            let mut acc = 0;
            for s in 0..n {
                acc += hits[s + 1];
                table[r][s] = acc;
            }
        }
        table
    }

    pub fn is_grassmannian(&self) -> bool {
        self.descents().len() <= 1
    }

    pub fn is_bigrassmannian(&self) -> bool {
        self.is_grassmannian() && self.inverse().is_grassmannian()
    }

    /// Enumerates `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as u8)
            .permutations(n)
            .map(Permutation::from_bytes)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for x in &self.word {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.word.iter().join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `425163`, `4,2,5,1,6,3` or `4 2 5 1 6 3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Vec<&str> = if s.contains(',') || s.contains(char::is_whitespace) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|p| !p.is_empty())
                .collect()
        } else {
            s.split("").filter(|p| !p.is_empty()).collect()
        };
        let word = parts
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::MalformedPermutation(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermBasics {
    pub length: usize,
    pub descents: Vec<usize>,
    pub inverse: Permutation,
}

pub fn perm_basics(w: &Permutation) -> PermBasics {
    PermBasics {
        length: w.length(),
        descents: w.descents(),
        inverse: w.inverse(),
    }
}

/// Bruhat comparison `u <= w` by the rank-function (tableau) criterion.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    if u.n() != w.n() {
        return Err(Error::SizeMismatch(u.n(), w.n()));
    }
    let (tu, tw) = (u.rank_table(), w.rank_table());
    let n = u.n();
    for r in 0..n.saturating_sub(1) {
        for s in 0..n - 1 {
            if tu[r][s] < tw[r][s] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn leq(u: &Permutation, w: &Permutation) -> bool {
    bruhat_leq(u, w).expect("same size")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GrassmannianClass {
    pub grassmannian: bool,
    pub bigrassmannian: bool,
    /// The unique descent when there is exactly one.
    pub descent_index: Option<usize>,
}

pub fn classify_grassmannian(v: &Permutation) -> GrassmannianClass {
    let des = v.descents();
    GrassmannianClass {
        grassmannian: des.len() <= 1,
        bigrassmannian: v.is_bigrassmannian(),
        descent_index: if des.len() == 1 { Some(des[0]) } else { None },
    }
}

/// Parameters `(r, s, t)` of a Schubert condition `dim(V_r ∩ C^s) >= t`,
/// restricted to the non-vacuous range `1 <= t <= r, s < n`, `t > r + s - n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RankTriple {
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl RankTriple {
    pub fn new(r: usize, s: usize, t: usize, n: usize) -> Result<Self> {
        let ok = t >= 1 && t <= r && t <= s && r < n && s < n && r + s < n + t;
        if ok {
            Ok(RankTriple { r, s, t })
        } else {
            Err(Error::InvalidRankTriple { r, s, t, n })
        }
    }

    /// All valid triples for `S_n`, ordered by `(r, s, t)`.
    pub fn all(n: usize) -> Vec<RankTriple> {
        let mut out = Vec::new();
        for r in 1..n {
            for s in 1..n {
                for t in 1..=r.min(s) {
                    if let Ok(rt) = RankTriple::new(r, s, t, n) {
                        out.push(rt);
                    }
                }
            }
        }
        out
    }
}

/// The bigrassmannian `v_{r,s,t,n}` with descent `s_r`, inverse descent
/// `s_s` and `v_t = s + 1`.
pub fn make_bigrassmannian(rt: RankTriple, n: usize) -> Result<Permutation> {
    let RankTriple { r, s, t } = RankTriple::new(rt.r, rt.s, rt.t, n)?;
    let word: Vec<usize> = (1..t)
        .chain(s + 1..=s + r - t + 1)
        .chain(t..=s)
        .chain(s + r - t + 2..=n)
        .collect();
    Permutation::new(word)
}

/// Recovers `(r, s, t)` from a non-identity bigrassmannian.
pub fn bigrassmannian_triple(v: &Permutation) -> Result<RankTriple> {
    let des = v.descents();
    let ides = v.inverse().descents();
    if des.len() != 1 || ides.len() != 1 {
        return Err(Error::NotBigrassmannian(v.to_string()));
    }
    let (r, s) = (des[0], ides[0]);
    let t = v.inverse().at(s + 1);
    RankTriple::new(r, s, t, v.n())
}

/// All non-identity bigrassmannians of `S_n` with their triples.
pub fn bigrassmannians(n: usize) -> Vec<(RankTriple, Permutation)> {
    RankTriple::all(n)
        .into_iter()
        .map(|rt| (rt, make_bigrassmannian(rt, n).expect("valid triple")))
        .collect()
}

/// The essential set with its Schubert-condition labels, ordered by `(r, s, t)`.
pub fn essential_triples(w: &Permutation) -> Vec<(RankTriple, Permutation)> {
    let n = w.n();
    let candidates: Vec<(RankTriple, Permutation)> = bigrassmannians(n)
        .into_iter()
        .filter(|(_, v)| !leq(v, w))
        .collect();
    candidates
        .iter()
        .filter(|(_, v)| {
            !candidates
                .iter()
                .any(|(_, c)| c != v && leq(c, v))
        })
        .cloned()
        .collect()
}

/// Bruhat-minimal elements of `{u : u ≰ w}`.
pub fn essential_set(w: &Permutation) -> Vec<Permutation> {
    essential_triples(w).into_iter().map(|(_, v)| v).collect()
}

/// The largest element of the ideal complementary to the filter above a
/// non-identity bigrassmannian `v`, found by exhaustive search over `S_n`.
pub fn dissector_complement_max(v: &Permutation) -> Result<Permutation> {
    if !v.is_bigrassmannian() || v.is_identity() {
        return Err(Error::NotBigrassmannian(v.to_string()));
    }
    let n = v.n();
    if n > 8 {
        return Err(Error::TooLarge((1..=n).product()));
    }
    let below: Vec<Permutation> = Permutation::all(n).filter(|u| !leq(v, u)).collect();
    let top = below
        .iter()
        .max_by_key(|u| u.length())
        .expect("identity is never above a non-identity element");
    if below.iter().all(|u| leq(u, top)) {
        Ok(top.clone())
    } else {
        Err(Error::Precondition(format!(
            "no unique maximum in the complement of the filter above {v}"
        )))
    }
}

/// Closed form for the element `w_{r,s,t,n}` with essential set
/// `{v_{r,s,t,n}}`: blocks `n..n-r+t+1`, `s..s-t+1`, `n-r+t..s+1`,
/// `s-t..1`, each decreasing by one.
pub fn complement_max_formula(rt: RankTriple, n: usize) -> Result<Permutation> {
    let RankTriple { r, s, t } = RankTriple::new(rt.r, rt.s, rt.t, n)?;
    let word: Vec<usize> = (n - r + t + 1..=n)
        .rev()
        .chain((s - t + 1..=s).rev())
        .chain((s + 1..=n - r + t).rev())
        .chain((1..=s - t).rev())
        .collect();
    Permutation::new(word)
}

/// A bubble of Fulton's essential set in the mirrored diagram convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FultonCell {
    pub row: usize,
    pub col: usize,
    /// Bubbles of the diagram weakly above this one in its column.
    pub t: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FultonEntry {
    pub cell: FultonCell,
    pub condition: RankTriple,
    pub bigrassmannian: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FultonTable {
    pub permutation: Permutation,
    /// `diagram[i][j]` is set when `(i+1, j+1)` is a bubble of `D(w)`.
    pub diagram: Vec<Vec<bool>>,
    pub entries: Vec<FultonEntry>,
}

impl FultonTable {
    pub fn diagram_size(&self) -> usize {
        self.diagram.iter().flatten().filter(|&&b| b).count()
    }
}

/// Builds the diagram of `w` with hooks running down and to the left of
/// each `×`, and reads off the essential bubbles together with their
/// bigrassmannians.
pub fn fulton_essential(w: &Permutation) -> FultonTable {
    let n = w.n();
    let mut diagram = vec![vec![true; n]; n];
    for i in 0..n {
        let c = w.at(i + 1) - 1;
        for cell in diagram[i].iter_mut().take(c + 1) {
            *cell = false;
        }
        for row in diagram.iter_mut().skip(i) {
            row[c] = false;
        }
    }
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !diagram[i][j] {
                continue;
            }
            let below = i + 1 < n && diagram[i + 1][j];
            let left = j > 0 && diagram[i][j - 1];
            if below || left {
                continue;
            }
            let t = (0..=i).filter(|&k| diagram[k][j]).count();
            let (r, s) = (i + 1, j);
            let condition = RankTriple::new(r, s, t, n).expect("essential bubble gives a valid triple");
            entries.push(FultonEntry {
                cell: FultonCell { row: r, col: j + 1, t },
                condition,
                bigrassmannian: make_bigrassmannian(condition, n).expect("valid triple"),
            });
        }
    }
    FultonTable {
        permutation: w.clone(),
        diagram,
        entries,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicFactorization {
    /// Minimal coset representative, `Des(u) ∩ J = ∅`.
    pub u: Permutation,
    /// Element of `W_J` with `w = u * x`.
    pub x: Permutation,
    pub w_min: Permutation,
    pub w_max: Permutation,
}

/// Factors `w = u * x` with `u ∈ W^J`, `x ∈ W_J`, and finds the extreme
/// elements of the coset `w W_J`.
pub fn parabolic_cosets(w: &Permutation, j: &[usize]) -> Result<ParabolicFactorization> {
    let n = w.n();
    if let Some(&bad) = j.iter().find(|&&i| i == 0 || i >= n) {
        return Err(Error::OutOfRange(format!("s_{bad} in S_{n}")));
    }
    let mut w_min = w.clone();
    while let Some(&i) = j.iter().find(|&&i| w_min.at(i) > w_min.at(i + 1)) {
        w_min = w_min.mul_simple_right(i);
    }
    let mut w_max = w.clone();
    while let Some(&i) = j.iter().find(|&&i| w_max.at(i) < w_max.at(i + 1)) {
        w_max = w_max.mul_simple_right(i);
    }
    let x = w_min.inverse().compose(w)?;
    Ok(ParabolicFactorization {
        u: w_min.clone(),
        x,
        w_min,
        w_max,
    })
}

/// The partition `(w_r - r, ..., w_1 - 1)` of an `r`-grassmannian `w`.
pub fn grassmannian_to_partition(w: &Permutation, r: usize) -> Result<Partition> {
    if r == 0 || r > w.n() || w.descents().iter().any(|&d| d != r) {
        return Err(Error::NotGrassmannian { perm: w.to_string(), r });
    }
    let parts: Vec<u32> = (1..=r).rev().map(|i| (w.at(i) - i) as u32).collect();
    Ok(Partition::new(parts).expect("grassmannian parts are weakly decreasing"))
}

/// Inverse of [`grassmannian_to_partition`]: the `r`-grassmannian
/// permutation of `S_n` whose partition is `lambda`.
pub fn partition_to_grassmannian(lambda: &Partition, r: usize, n: usize) -> Result<Permutation> {
    if r == 0 || r > n || !lambda.fits_in_box(r, n - r) {
        return Err(Error::Precondition(format!(
            "{lambda} does not fit in a {r} x {} box",
            n - r
        )));
    }
    let head: Vec<usize> = (1..=r).map(|i| lambda.part(r + 1 - i) as usize + i).collect();
    let tail = (1..=n).filter(|x| !head.contains(x));
    Permutation::new(head.iter().copied().chain(tail).collect())
}

/// Whether `w` contains `pattern` as a subsequence in the same relative order.
pub fn contains_pattern(w: &Permutation, pattern: &[usize]) -> bool {
    let k = pattern.len();
    if k > w.n() {
        return false;
    }
    w.word.iter().copied().combinations(k).any(|sub| {
        (0..k).all(|a| (a + 1..k).all(|b| (sub[a] < sub[b]) == (pattern[a] < pattern[b])))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PatternClass {
    pub defined_by_inclusions: bool,
    pub smooth: bool,
}

pub fn pattern_class(w: &Permutation) -> PatternClass {
    const INCLUSIONS: [&[usize]; 4] = [
        &[4, 2, 3, 1],
        &[3, 5, 1, 4, 2],
        &[4, 2, 5, 1, 3],
        &[3, 5, 1, 6, 2, 4],
    ];
    const SMOOTH: [&[usize]; 2] = [&[3, 4, 1, 2], &[4, 2, 3, 1]];
    PatternClass {
        defined_by_inclusions: !INCLUSIONS.iter().any(|p| contains_pattern(w, p)),
        smooth: !SMOOTH.iter().any(|p| contains_pattern(w, p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(ws: &[&str]) -> BTreeSet<Permutation> {
        ws.iter().map(|s| p(s)).collect()
    }

    /// Subword characterization: `u <= w` iff some subword of a fixed
    /// reduced word of `w` is a reduced word for `u`.
    fn subword_leq(u: &Permutation, w: &Permutation) -> bool {
        let word = w.reduced_word();
        let l = word.len();
        let target = u.length();
        (0u32..1 << l).any(|mask| {
            if mask.count_ones() as usize != target {
                return false;
            }
            let mut cur = Permutation::identity(w.n());
            for (k, &i) in word.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    cur = cur.mul_simple_right(i);
                }
            }
            cur == *u
        })
    }

    /// Lower covers `u t` with `t` a transposition and length dropping by one.
    fn lower_covers(u: &Permutation) -> Vec<Permutation> {
        let n = u.n();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let mut word = u.word.clone();
                word.swap(a, b);
                let v = Permutation { word };
                if v.length() + 1 == u.length() {
                    out.push(v);
                }
            }
        }
        out
    }

    fn brute_essential(w: &Permutation) -> BTreeSet<Permutation> {
        Permutation::all(w.n())
            .filter(|u| !leq(u, w) && lower_covers(u).iter().all(|c| leq(c, w)))
            .collect()
    }

    #[test]
    fn basics_of_425163() {
        let b = perm_basics(&p("425163"));
        assert_eq!(b.length, 7);
        assert_eq!(b.descents, vec![1, 3, 5]);
        assert!(b.inverse.compose(&p("425163")).unwrap().is_identity());
        assert_eq!(Permutation::identity(5).length(), 0);
        assert!(Permutation::identity(5).descents().is_empty());
        assert_eq!(Permutation::longest(6).length(), 15);
    }

    #[test]
    fn malformed_words_are_rejected() {
        assert!("1224".parse::<Permutation>().is_err());
        assert!("1245".parse::<Permutation>().is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert_eq!(p("1,2,3,4,5,6,7,8,10,9").to_string(), "1,2,3,4,5,6,7,8,10,9");
        assert_eq!(p("2 1 3"), p("213"));
    }

    #[test]
    fn rank_function_examples() {
        let w = p("425163");
        assert_eq!(w.rank(2, 4).unwrap(), 2);
        assert_eq!(w.rank(2, 2).unwrap(), 1);
        let id = Permutation::identity(5);
        for r in 1..=5 {
            for s in 1..=5 {
                assert_eq!(id.rank(r, s).unwrap(), r.min(s));
            }
        }
        assert!(w.rank(0, 1).is_err());
        assert!(w.rank(7, 1).is_err());
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&Permutation::identity(4), &p("3142")).unwrap());
        assert!(!bruhat_leq(&p("1324"), &p("1243")).unwrap());
        assert!(bruhat_leq(&p("132"), &p("231")).unwrap());
        assert!(bruhat_leq(&p("12"), &p("123")).is_err());
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for n in 1..=5 {
            let all: Vec<_> = Permutation::all(n).collect();
            for u in &all {
                for w in &all {
                    assert_eq!(leq(u, w), subword_leq(u, w), "{u} vs {w}");
                }
            }
        }
    }

    #[test]
    fn grassmannian_classification() {
        let c = classify_grassmannian(&p("341256"));
        assert!(c.bigrassmannian);
        assert_eq!(c.descent_index, Some(2));
        assert_eq!(p("341256").inverse().descents(), vec![2]);
        let id = classify_grassmannian(&Permutation::identity(3));
        assert!(id.grassmannian && id.bigrassmannian);
        assert_eq!(id.descent_index, None);
        assert!(!classify_grassmannian(&p("321")).grassmannian);
    }

    #[test]
    fn bigrassmannian_examples() {
        let mk = |r, s, t, n| make_bigrassmannian(RankTriple { r, s, t }, n).unwrap();
        assert_eq!(mk(2, 2, 1, 6), p("341256"));
        assert_eq!(mk(2, 4, 2, 6), p("152346"));
        assert_eq!(mk(2, 2, 2, 4), p("1324"));
        assert!(make_bigrassmannian(RankTriple { r: 3, s: 3, t: 1 }, 4).is_err());
        assert!(make_bigrassmannian(RankTriple { r: 2, s: 2, t: 3 }, 6).is_err());
    }

    #[test]
    fn bigrassmannian_properties_exhaustive() {
        for n in 2..=6 {
            let all: Vec<_> = Permutation::all(n).collect();
            let bigr = bigrassmannians(n);
            let expected: BTreeSet<_> = all
                .iter()
                .filter(|u| u.is_bigrassmannian() && !u.is_identity())
                .cloned()
                .collect();
            let got: BTreeSet<_> = bigr.iter().map(|(_, v)| v.clone()).collect();
            assert_eq!(got, expected, "n={n}");
            for (rt, v) in &bigr {
                assert_eq!(v.descents(), vec![rt.r]);
                assert_eq!(v.inverse().descents(), vec![rt.s]);
                assert_eq!(v.at(rt.t), rt.s + 1);
                assert_eq!(v.rank(rt.r, rt.s).unwrap(), rt.t - 1);
                assert_eq!(bigrassmannian_triple(v).unwrap(), *rt);
                for w in &all {
                    assert_eq!(w.rank(rt.r, rt.s).unwrap() >= rt.t, !leq(v, w));
                }
            }
        }
    }

    #[test]
    fn essential_set_examples() {
        let e: BTreeSet<_> = essential_set(&p("425163")).into_iter().collect();
        assert_eq!(e, set(&["341256", "152346", "134526", "123645"]));
        assert!(essential_set(&Permutation::longest(5)).is_empty());
        let e: BTreeSet<_> = essential_set(&p("1243")).into_iter().collect();
        assert_eq!(e, set(&["2134", "1324"]));
    }

    #[test]
    fn essential_set_matches_brute_force() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let fast: BTreeSet<_> = essential_set(&w).into_iter().collect();
                assert_eq!(fast, brute_essential(&w), "w={w}");
                assert!(fast.iter().all(|v| v.is_bigrassmannian()));
            }
        }
    }

    #[test]
    fn dissector_examples() {
        assert_eq!(dissector_complement_max(&p("2134")).unwrap(), p("1432"));
        let w = dissector_complement_max(&p("1324")).unwrap();
        assert_eq!(essential_set(&w), vec![p("1324")]);
        assert_eq!(dissector_complement_max(&p("21")).unwrap(), p("12"));
        assert!(dissector_complement_max(&p("321")).is_err());
        assert!(dissector_complement_max(&p("123")).is_err());
    }

    #[test]
    fn dissectors_split_the_group() {
        for n in 2..=6 {
            let all: Vec<_> = Permutation::all(n).collect();
            for (rt, v) in bigrassmannians(n) {
                let w = dissector_complement_max(&v).unwrap();
                assert_eq!(complement_max_formula(rt, n).unwrap(), w, "{rt:?}");
                assert_eq!(essential_set(&w), vec![v.clone()]);
                for u in &all {
                    assert!(leq(&v, u) != leq(u, &w), "{u} in both or neither");
                }
            }
        }
        for n in 7..=8 {
            for (rt, v) in bigrassmannians(n) {
                let w = complement_max_formula(rt, n).unwrap();
                assert_eq!(essential_set(&w), vec![v], "{rt:?}");
            }
        }
    }

    #[test]
    fn fulton_table_of_425163() {
        let table = fulton_essential(&p("425163"));
        let cells: Vec<_> = table.entries.iter().map(|e| (e.cell.row, e.cell.col)).collect();
        assert_eq!(cells, vec![(2, 3), (2, 5), (4, 3), (4, 6)]);
        let vs: Vec<_> = table.entries.iter().map(|e| e.bigrassmannian.to_string()).collect();
        assert_eq!(vs, vec!["341256", "152346", "134526", "123645"]);
        let conds: Vec<_> = table
            .entries
            .iter()
            .map(|e| (e.condition.r, e.condition.s, e.condition.t))
            .collect();
        assert_eq!(conds, vec![(2, 2, 1), (2, 4, 2), (4, 2, 2), (4, 5, 4)]);
        assert_eq!(table.diagram_size(), 15 - 7);
    }

    #[test]
    fn fulton_extremes() {
        for n in 2..=6 {
            let id = fulton_essential(&Permutation::identity(n));
            assert_eq!(id.diagram_size(), n * (n - 1) / 2);
            assert_eq!(id.entries.len(), n - 1);
            let top = fulton_essential(&Permutation::longest(n));
            assert_eq!(top.diagram_size(), 0);
            assert!(top.entries.is_empty());
        }
    }

    #[test]
    fn fulton_bijection_exhaustive() {
        for n in 1..=6 {
            let w0 = Permutation::longest(n);
            for w in Permutation::all(n) {
                let table = fulton_essential(&w);
                let image: BTreeSet<_> =
                    table.entries.iter().map(|e| e.bigrassmannian.clone()).collect();
                assert_eq!(image.len(), table.entries.len());
                let e: BTreeSet<_> = essential_set(&w).into_iter().collect();
                assert_eq!(image, e, "w={w}");
                assert_eq!(table.diagram_size(), w0.compose(&w).unwrap().length());
                for entry in &table.entries {
                    let c = entry.condition;
                    assert_eq!(w.rank(c.r, c.s).unwrap(), c.t);
                }
            }
        }
    }

    #[test]
    fn parabolic_examples() {
        let f = parabolic_cosets(&p("312"), &[1]).unwrap();
        assert_eq!(f.u, p("132"));
        assert_eq!(f.x, p("213"));
        assert_eq!(p("312").length(), f.u.length() + f.x.length());
        let f = parabolic_cosets(&p("2413"), &[]).unwrap();
        assert_eq!(f.u, p("2413"));
        assert!(f.x.is_identity());
        let f = parabolic_cosets(&p("213"), &[2]).unwrap();
        assert_eq!(f.w_max, p("231"));
        assert!(parabolic_cosets(&p("213"), &[3]).is_err());
    }

    #[test]
    fn parabolic_lifting_exhaustive() {
        for n in 2..=5 {
            let all: Vec<_> = Permutation::all(n).collect();
            for mask in 0u32..1 << (n - 1) {
                let j: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                for w in &all {
                    let f = parabolic_cosets(w, &j).unwrap();
                    assert_eq!(f.u.compose(&f.x).unwrap(), *w);
                    assert_eq!(w.length(), f.u.length() + f.x.length());
                    assert!(f.u.descents().iter().all(|d| !j.contains(d)));
                    assert!(f.x.descents().iter().all(|d| j.contains(d)));
                    for u in all.iter().filter(|u| u.descents().iter().all(|d| !j.contains(d))) {
                        assert_eq!(leq(u, &f.w_max), leq(u, &f.w_min));
                    }
                }
            }
        }
    }

    #[test]
    fn grassmannian_partitions() {
        assert_eq!(grassmannian_to_partition(&p("1324"), 2).unwrap().parts(), &[1]);
        assert!(grassmannian_to_partition(&Permutation::identity(4), 3)
            .unwrap()
            .is_empty());
        assert_eq!(grassmannian_to_partition(&p("341256"), 2).unwrap().parts(), &[2, 2]);
        assert!(grassmannian_to_partition(&p("1324"), 1).is_err());
        for n in 2..=6 {
            for w in Permutation::all(n) {
                if let [r] = w.descents()[..] {
                    let lambda = grassmannian_to_partition(&w, r).unwrap();
                    assert!(lambda.fits_in_box(r, n - r));
                    assert_eq!(lambda.size() as usize, w.length());
                    assert_eq!(partition_to_grassmannian(&lambda, r, n).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn pattern_examples() {
        let c = pattern_class(&p("4231"));
        assert!(!c.defined_by_inclusions && !c.smooth);
        let c = pattern_class(&p("1234"));
        assert!(c.defined_by_inclusions && c.smooth);
        let c = pattern_class(&p("3412"));
        assert!(c.defined_by_inclusions && !c.smooth);
        assert!(contains_pattern(&p("52413"), &[4, 2, 1, 3]));
        assert!(!contains_pattern(&p("12345"), &[2, 1]));
    }

    #[test]
    fn reduced_words_multiply_back() {
        for w in Permutation::all(5) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut cur = Permutation::identity(5);
            for &i in &word {
                cur = cur.mul_simple_right(i);
            }
            assert_eq!(cur, w);
        }
    }
}
