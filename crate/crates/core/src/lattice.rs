//! Integer lattices in `ℤ^d`: Hermite normal form, membership, and Smith
//! invariants of a quotient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub type Vector = Vec<BigInt>;

pub fn to_vector(v: &[i64]) -> Vector {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Row Hermite normal form: pivots strictly move right, are positive, and
/// entries above a pivot lie in `[0, pivot)`. Zero rows are removed.
pub fn hnf(mut rows: Vec<Vector>, dim: usize) -> Vec<Vector> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut top = 0;
    for col in 0..dim {
        if top == rows.len() {
            break;
        }
        loop {
            let best = (top..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            rows.swap(top, best);
            let mut done = true;
            for i in top + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[top][col]);
                let pivot = rows[top].clone();
                axpy(&mut rows[i], &-q, &pivot);
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[top][col].is_zero() {
            continue;
        }
        if rows[top][col].is_negative() {
            for x in rows[top].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot = rows[top].clone();
        for i in 0..top {
            let q = rows[i][col].div_floor(&pivot[col]);
            if !q.is_zero() {
                axpy(&mut rows[i], &-q, &pivot);
            }
        }
        top += 1;
    }
    rows.truncate(top);
    rows
}

fn axpy(y: &mut [BigInt], a: &BigInt, x: &[BigInt]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

fn pivot_col(row: &[BigInt]) -> usize {
    row.iter().position(|x| !x.is_zero()).expect("nonzero row")
}

/// A sublattice of `ℤ^dim`, kept in Hermite normal form so that equal
/// lattices have equal bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vector>,
}

impl Lattice {
    pub fn zero(dim: usize) -> Self {
        Lattice { dim, basis: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        let basis = (0..dim)
            .map(|i| (0..dim).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        Lattice { dim, basis }
    }

    pub fn span(dim: usize, vectors: Vec<Vector>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == dim));
        Lattice { dim, basis: hnf(vectors, dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Lattice::span(self.dim, all)
    }

    /// Integer coordinates of `v` in the Hermite basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vector> {
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for b in &self.basis {
            let p = pivot_col(b);
            let (q, r) = rest[p].div_rem(&b[p]);
            if !r.is_zero() {
                return None;
            }
            axpy(&mut rest, &-&q, b);
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Dimension of the ℚ-span.
    pub fn rational_rank(&self) -> usize {
        self.rank()
    }
}

/// Invariant factors of an integer matrix, each dividing the next, zeros omitted.
pub fn smith_invariants(mut m: Vec<Vector>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let best = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !m[i][j].is_zero())
            .min_by(|&(a, b), &(c, d)| m[a][b].abs().cmp(&m[c][d].abs()));
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let q = m[i][t].div_floor(&m[t][t]);
                    let pivot = m[t].clone();
                    axpy(&mut m[i], &-q, &pivot);
                    clean &= m[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let q = m[t][j].div_floor(&m[t][t]);
                    for row in m.iter_mut() {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                    clean &= m[t][j].is_zero();
                }
            }
            if clean {
                // The pivot must divide the remaining block.
                let bad = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !(&m[i][j] % &m[t][t]).is_zero()));
                match bad {
                    Some(i) => {
                        let row = m[i].clone();
                        axpy(&mut m[t], &BigInt::one(), &row);
                    }
                    None => break,
                }
            } else {
                // Bring the smallest entry of the pivot row and column to (t, t).
                let (mut bi, mut bj) = (t, t);
                for i in t..rows {
                    if !m[i][t].is_zero() && (m[bi][bj].is_zero() || m[i][t].abs() < m[bi][bj].abs()) {
                        (bi, bj) = (i, t);
                    }
                }
                for j in t..cols {
                    if !m[t][j].is_zero() && (m[bi][bj].is_zero() || m[t][j].abs() < m[bi][bj].abs()) {
                        (bi, bj) = (t, j);
                    }
                }
                m.swap(t, bi);
                for row in m.iter_mut() {
                    row.swap(t, bj);
                }
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    // Normalize to a divisibility chain.
    for a in 0..diag.len() {
        for b in a + 1..diag.len() {
            let g = diag[a].gcd(&diag[b]);
            let l = diag[a].lcm(&diag[b]);
            diag[a] = g;
            diag[b] = l;
        }
    }
    diag
}

/// Structure of `sup / sub` for lattices `sub ⊆ sup`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quotient {
    pub free_rank: usize,
    /// Invariant factors larger than one.
    #[serde(serialize_with = "as_strings")]
    pub torsion: Vec<BigInt>,
}

impl Quotient {
    /// Size of a minimal generating set of the quotient.
    pub fn min_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.min_generators() == 0
    }
}

fn as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

/// Returns `None` if `sub` is not contained in `sup`.
pub fn quotient(sup: &Lattice, sub: &Lattice) -> Option<Quotient> {
    let coords: Vec<Vector> = sub
        .basis()
        .iter()
        .map(|v| sup.coordinates(v))
        .collect::<Option<_>>()?;
    let invariants = if coords.is_empty() || sup.rank() == 0 {
        Vec::new()
    } else {
        smith_invariants(coords)
    };
    Some(Quotient {
        free_rank: sup.rank() - invariants.len(),
        torsion: invariants.into_iter().filter(|d| !d.is_one()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn lat(dim: usize, rows: &[&[i64]]) -> Lattice {
        Lattice::span(dim, rows.iter().map(|r| to_vector(r)).collect())
    }

    #[test]
    fn hermite_examples() {
        let l = lat(2, &[&[2, 4], &[3, 5]]);
        assert_eq!(l.basis(), &[to_vector(&[1, 1]), to_vector(&[0, 2])]);
        assert_eq!(lat(3, &[&[0, 0, 0]]).rank(), 0);
        assert_eq!(lat(2, &[&[1, 2], &[2, 4]]).rank(), 1);
        assert!(l.contains(&to_vector(&[1, 3])));
        assert!(!l.contains(&to_vector(&[1, 2])));
        assert_eq!(lat(2, &[&[1, 0], &[0, 1]]), Lattice::full(2));
    }

    #[test]
    fn smith_examples() {
        let m = vec![to_vector(&[2, 4, 4]), to_vector(&[-6, 6, 12]), to_vector(&[10, -4, -16])];
        assert_eq!(smith_invariants(m), vec![big(2), big(6), big(12)]);
        assert_eq!(smith_invariants(vec![to_vector(&[2, 0]), to_vector(&[0, 3])]), vec![big(1), big(6)]);
    }

    #[test]
    fn quotient_examples() {
        let z2 = Lattice::full(2);
        let q = quotient(&z2, &lat(2, &[&[2, 0]])).unwrap();
        assert_eq!(q.free_rank, 1);
        assert_eq!(q.torsion, vec![big(2)]);
        assert_eq!(q.min_generators(), 2);
        assert!(quotient(&z2, &z2).unwrap().is_trivial());
        assert_eq!(quotient(&z2, &Lattice::zero(2)).unwrap().min_generators(), 2);
        assert!(quotient(&lat(2, &[&[2, 0]]), &z2).is_none());
    }

    fn arb_rows() -> impl Strategy<Value = Vec<Vec<i64>>> {
        proptest::collection::vec(proptest::collection::vec(-6i64..=6, 3), 0..5)
    }

    /// Determinant of a square integer matrix by cofactor expansion.
    fn det(m: &[Vec<i64>]) -> i64 {
        if m.is_empty() {
            return 1;
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum()
    }

    proptest! {
        #[test]
        fn hnf_is_canonical(rows in arb_rows(), shuffle in any::<u64>()) {
            let a = Lattice::span(3, rows.iter().map(|r| to_vector(r)).collect());
            let mut permuted = rows.clone();
            let len = permuted.len().max(1);
            permuted.rotate_left((shuffle as usize) % len);
            // Add a combination of rows, which does not change the lattice.
            if permuted.len() >= 2 {
                let extra: Vec<i64> = permuted[0].iter().zip(&permuted[1]).map(|(x, y)| 3 * x - y).collect();
                permuted.push(extra);
            }
            let b = Lattice::span(3, permuted.iter().map(|r| to_vector(r)).collect());
            prop_assert_eq!(&a, &b);
            for r in &rows {
                prop_assert!(a.contains(&to_vector(r)));
            }
        }

        #[test]
        fn smith_product_is_determinant(rows in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 3), 3)) {
            let d = det(&rows).abs();
            let inv = smith_invariants(rows.iter().map(|r| to_vector(r)).collect());
            if d == 0 {
                prop_assert!(inv.len() < 3);
            } else {
                prop_assert_eq!(inv.len(), 3);
                let prod: BigInt = inv.iter().product();
                prop_assert_eq!(prod, big(d));
                for w in inv.windows(2) {
                    prop_assert!((&w[1] % &w[0]).is_zero());
                }
            }
        }

        #[test]
        fn quotient_of_full_lattice_counts_index(rows in arb_rows()) {
            let sub = Lattice::span(3, rows.iter().map(|r| to_vector(r)).collect());
            let q = quotient(&Lattice::full(3), &sub).unwrap();
            prop_assert_eq!(q.free_rank, 3 - sub.rank());
        }
    }
}
