//! Integer matrices and finitely generated abelian groups in exact
//! arithmetic.
//!
//! The central routine is [`smith_normal_form`]: for any integer matrix `M`
//! it produces unimodular `U`, `V` with `U·M·V = D`, `D` diagonal and
//! nonnegative with the divisibility chain `d1 | d2 | …` and zero entries
//! trailing. On top of it sit [`cokernel`], [`hom_kernel`] for maps between
//! presented groups, and [`tensor_dim`] over prime fields. All entries are
//! arbitrary-precision, so elimination never overflows.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FgabError {
    /// Entry list length does not match `rows * cols`.
    EntryCount { rows: usize, cols: usize, len: usize },
    /// Matrix dimensions do not fit the generator counts of the groups.
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    /// The generator map does not carry relations of the source into
    /// relations of the target.
    IncompatibleMap { relation: usize, generator: usize },
    NotPrime(u64),
}

impl fmt::Display for FgabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FgabError::EntryCount { rows, cols, len } => write!(
                f,
                "expected {}x{} = {} entries, got {}",
                rows,
                cols,
                rows * cols,
                len
            ),
            FgabError::ShapeMismatch {
                expected_rows,
                expected_cols,
                rows,
                cols,
            } => write!(
                f,
                "generator map must be {}x{}, got {}x{}",
                expected_rows, expected_cols, rows, cols
            ),
            FgabError::IncompatibleMap {
                relation,
                generator,
            } => write!(
                f,
                "map does not respect relations: image of relation {} fails at generator {}",
                relation, generator
            ),
            FgabError::NotPrime(l) => write!(f, "{} is not prime", l),
        }
    }
}

impl core::error::Error for FgabError {}

/// Dense integer matrix, row-major, arbitrary-precision entries.
///
/// Empty shapes (zero rows or zero columns) are legal and denote zero maps.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, FgabError> {
        if entries.len() != rows * cols {
            return Err(FgabError::EntryCount {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Convenience constructor from machine integers; panics on a length
    /// mismatch.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        IntMatrix {
            rows,
            cols,
            entries: entries.iter().map(|&e| BigInt::from(e)).collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Rectangular matrix with the given entries on the main diagonal.
    pub fn diagonal(rows: usize, cols: usize, diag: &[BigInt]) -> Self {
        let mut m = Self::zero(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a * rhs.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, rhs.rows, "row mismatch in hstack");
        let mut entries = Vec::with_capacity(self.rows * (self.cols + rhs.cols));
        for r in 0..self.rows {
            entries.extend_from_slice(&self.entries[r * self.cols..(r + 1) * self.cols]);
            entries.extend_from_slice(&rhs.entries[r * rhs.cols..(r + 1) * rhs.cols]);
        }
        IntMatrix {
            rows: self.rows,
            cols: self.cols + rhs.cols,
            entries,
        }
    }

    /// The submatrix consisting of the first `n` rows.
    pub fn top_rows(&self, n: usize) -> IntMatrix {
        assert!(n <= self.rows);
        IntMatrix {
            rows: n,
            cols: self.cols,
            entries: self.entries[..n * self.cols].to_vec(),
        }
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let idx = |r: usize, c: usize| r * n + c;
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[idx(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[idx(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                for c in 0..n {
                    m.swap(idx(k, c), idx(swap, c));
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[idx(i, j)] * &m[idx(k, k)] - &m[idx(i, k)] * &m[idx(k, j)];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    m[idx(i, j)] = q;
                }
                m[idx(i, k)] = BigInt::zero();
            }
            prev = m[idx(k, k)].clone();
        }
        let d = m[idx(n - 1, n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row_i -= q * row_t
    fn row_sub_scaled(&mut self, i: usize, t: usize, q: &BigInt) {
        for c in 0..self.cols {
            let sub = q * self.get(t, c);
            let v = self.get(i, c) - sub;
            self.set(i, c, v);
        }
    }

    /// col_j -= q * col_t
    fn col_sub_scaled(&mut self, j: usize, t: usize, q: &BigInt) {
        for r in 0..self.rows {
            let sub = q * self.get(r, t);
            let v = self.get(r, j) - sub;
            self.set(r, j, v);
        }
    }

    /// row_t += row_i
    fn row_add(&mut self, t: usize, i: usize) {
        for c in 0..self.cols {
            let v = self.get(t, c) + self.get(i, c);
            self.set(t, c, v);
        }
    }

    fn negate_row(&mut self, t: usize) {
        for c in 0..self.cols {
            let v = -self.get(t, c);
            self.set(t, c, v);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Result of [`smith_normal_form`]: `left · M · right = diag(diagonal)`.
///
/// `diagonal` has `min(rows, cols)` entries including any units and trailing
/// zeros; only the diagonal is contractual, `left`/`right` are valid but not
/// unique witnesses.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithNormalForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// The diagonal as a full matrix of the original shape.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(self.left.rows(), self.right.rows(), &self.diagonal)
    }
}

/// Quotient of `a / p` rounded to nearest, so that `|a - q*p| <= |p| / 2`.
fn nearest_quotient(a: &BigInt, p: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(p);
    if BigInt::from(2) * r.abs() > p.abs() {
        if r.sign() == p.sign() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

fn min_abs_nonzero(b: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..b.rows() {
        for j in t..b.cols() {
            let e = b.get(i, j);
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            if a.is_one() {
                return Some((i, j));
            }
            match &best {
                Some((_, _, m)) if *m <= a => {}
                _ => best = Some((i, j, a)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Smith normal form with unimodular witnesses.
///
/// Pivoting picks the entry of smallest nonzero absolute value; after the
/// pivot row and column are cleared, a divisibility sweep folds any
/// non-divisible trailing entry back into the pivot row. Each round strictly
/// shrinks the pivot, so the loop terminates.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut b = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let steps = rows.min(cols);
    for t in 0..steps {
        loop {
            let Some((pi, pj)) = min_abs_nonzero(&b, t) else {
                break;
            };
            b.swap_rows(t, pi);
            u.swap_rows(t, pi);
            b.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..rows {
                if b.get(i, t).is_zero() {
                    continue;
                }
                let q = nearest_quotient(b.get(i, t), b.get(t, t));
                if !q.is_zero() {
                    b.row_sub_scaled(i, t, &q);
                    u.row_sub_scaled(i, t, &q);
                }
                if !b.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if b.get(t, j).is_zero() {
                    continue;
                }
                let q = nearest_quotient(b.get(t, j), b.get(t, t));
                if !q.is_zero() {
                    b.col_sub_scaled(j, t, &q);
                    v.col_sub_scaled(j, t, &q);
                }
                if !b.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let pivot = b.get(t, t).clone();
            let bad_row = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !b.get(i, j).mod_floor(&pivot).is_zero())
            });
            if let Some(i) = bad_row {
                b.row_add(t, i);
                u.row_add(t, i);
                continue;
            }
            break;
        }
    }
    for t in 0..steps {
        if b.get(t, t).is_negative() {
            b.negate_row(t);
            u.negate_row(t);
        }
    }
    let diagonal = (0..steps).map(|t| b.get(t, t).clone()).collect();
    SmithNormalForm {
        diagonal,
        left: u,
        right: v,
    }
}

/// Finitely generated abelian group in invariant-factor normal form:
/// free rank plus a divisor chain `d1 | d2 | …` with every `d_i >= 2`.
///
/// All constructors canonicalize, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        FgAbGroup {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Cyclic group of the given order; order 0 means infinite cyclic.
    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_orders(&[order.into()])
    }

    /// Direct sum of cyclic groups `Z/o_i`, canonicalized. An order of 0
    /// contributes a free summand; signs are ignored.
    pub fn from_orders(orders: &[BigInt]) -> Self {
        let k = orders.len();
        let diag = IntMatrix::diagonal(k, k, orders);
        cokernel(&diag)
    }

    pub fn from_parts(rank: usize, orders: &[BigInt]) -> Self {
        let mut g = Self::from_orders(orders);
        g.rank += rank;
        g
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.torsion.clone();
        orders.extend_from_slice(&other.torsion);
        Self::from_parts(self.rank + other.rank, &orders)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Number of elements, if finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.rank > 0 {
            return None;
        }
        let mut o = BigInt::one();
        for d in &self.torsion {
            o *= d;
        }
        Some(o)
    }

    /// Generators in the canonical presentation: torsion generators first,
    /// then free ones.
    pub fn generator_count(&self) -> usize {
        self.torsion.len() + self.rank
    }

    /// Relation matrix of the canonical presentation, one column `d_i e_i`
    /// per torsion generator.
    pub fn relation_matrix(&self) -> IntMatrix {
        let gens = self.generator_count();
        let k = self.torsion.len();
        let mut m = IntMatrix::zero(gens, k);
        for (i, d) in self.torsion.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    fn from_canonical(rank: usize, torsion: Vec<BigInt>) -> Self {
        debug_assert!(torsion.iter().all(|d| *d >= BigInt::from(2)));
        debug_assert!(torsion
            .windows(2)
            .all(|w| w[1].mod_floor(&w[0]).is_zero()));
        FgAbGroup { rank, torsion }
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        if self.rank > 0 {
            if self.rank == 1 {
                write!(f, "Z")?;
            } else {
                write!(f, "Z^{}", self.rank)?;
            }
            first = false;
        }
        for d in &self.torsion {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "Z/{}", d)?;
            first = false;
        }
        Ok(())
    }
}

/// `Z^rows / image(M)` in canonical form.
pub fn cokernel(m: &IntMatrix) -> FgAbGroup {
    let snf = smith_normal_form(m);
    let nonzero = snf.rank();
    let rank = m.rows() - nonzero;
    let torsion = snf
        .diagonal
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();
    FgAbGroup::from_canonical(rank, torsion)
}

/// Basis of the integer kernel of `m`, as columns.
///
/// These are the columns of the right SNF witness belonging to zero
/// diagonal entries, hence a genuine basis of `ker(m)` as a direct summand
/// of the domain.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let v = &snf.right;
    let n = v.cols();
    let mut out = IntMatrix::zero(n, n - rank);
    for (out_c, c) in (rank..n).enumerate() {
        for r in 0..n {
            out.set(r, out_c, v.get(r, c).clone());
        }
    }
    out
}

/// Generators of the preimage lattice `{ x : f(x) ∈ column-lattice(lat) }`,
/// computed as the projection of `ker [f | lat]` onto the domain of `f`.
fn preimage_lattice_gens(f: &IntMatrix, lat: &IntMatrix) -> IntMatrix {
    debug_assert_eq!(f.rows(), lat.rows());
    let aug = f.hstack(lat);
    kernel_basis(&aug).top_rows(f.cols())
}

/// Kernel of the homomorphism `A -> B` induced by the matrix `m` on
/// canonical generators (torsion generators first, then free ones).
///
/// `m` must be `B.generator_count() x A.generator_count()` and must respect
/// the relations: the image of each relation of `A` has to lie in the
/// relation lattice of `B`. Violations are reported, not silently quotiented.
pub fn hom_kernel(a: &FgAbGroup, b: &FgAbGroup, m: &IntMatrix) -> Result<FgAbGroup, FgabError> {
    let ga = a.generator_count();
    let gb = b.generator_count();
    if m.rows() != gb || m.cols() != ga {
        return Err(FgabError::ShapeMismatch {
            expected_rows: gb,
            expected_cols: ga,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    for (i, d) in a.torsion().iter().enumerate() {
        // image of the relation d_i * e_i
        for j in 0..gb {
            let v = m.get(j, i) * d;
            let ok = if j < b.torsion().len() {
                v.mod_floor(&b.torsion()[j]).is_zero()
            } else {
                v.is_zero()
            };
            if !ok {
                return Err(FgabError::IncompatibleMap {
                    relation: i,
                    generator: j,
                });
            }
        }
    }
    // P = m^{-1}(relation lattice of B), the full preimage of zero in B
    let p_gens = preimage_lattice_gens(m, &b.relation_matrix());
    // relations among the generators of P modulo the relations of A
    let c_gens = preimage_lattice_gens(&p_gens, &a.relation_matrix());
    Ok(cokernel(&c_gens))
}

/// `dim_{F_l} (A ⊗ Z_l)` for a prime `l`: the free rank plus the number of
/// invariant factors divisible by `l`.
pub fn tensor_dim(a: &FgAbGroup, l: u64) -> Result<usize, FgabError> {
    if !is_prime_u64(l) {
        return Err(FgabError::NotPrime(l));
    }
    let lb = BigInt::from(l);
    let divisible = a
        .torsion()
        .iter()
        .filter(|d| d.mod_floor(&lb).is_zero())
        .count();
    Ok(a.rank() + divisible)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn snf_of(rows: usize, cols: usize, entries: &[i64]) -> SmithNormalForm {
        smith_normal_form(&IntMatrix::from_i64(rows, cols, entries))
    }

    fn diag_i64(snf: &SmithNormalForm) -> Vec<i64> {
        snf.diagonal
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn snf_identity() {
        let snf = snf_of(2, 2, &[1, 0, 0, 1]);
        assert_eq!(diag_i64(&snf), vec![1, 1]);
        assert_eq!(snf.left, IntMatrix::identity(2));
        assert_eq!(snf.right, IntMatrix::identity(2));
    }

    #[test]
    fn snf_diag_2_3() {
        let snf = snf_of(2, 2, &[2, 0, 0, 3]);
        assert_eq!(diag_i64(&snf), vec![1, 6]);
    }

    #[test]
    fn snf_upper_triangular() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 12
        let snf = snf_of(2, 2, &[2, 4, 0, 6]);
        assert_eq!(diag_i64(&snf), vec![2, 6]);
    }

    #[test]
    fn snf_empty_shapes() {
        let snf = snf_of(0, 3, &[]);
        assert!(snf.diagonal.is_empty());
        assert_eq!(snf.right, IntMatrix::identity(3));
        let snf = snf_of(2, 0, &[]);
        assert!(snf.diagonal.is_empty());
        assert_eq!(snf.left, IntMatrix::identity(2));
        let snf = snf_of(0, 0, &[]);
        assert!(snf.diagonal.is_empty());
    }

    #[test]
    fn cokernel_examples() {
        // Z/7 presentation
        let g = cokernel(&IntMatrix::from_i64(1, 1, &[7]));
        assert_eq!(g, FgAbGroup::cyclic(7));
        // image of [1 1] is all of Z
        let g = cokernel(&IntMatrix::from_i64(1, 2, &[1, 1]));
        assert!(g.is_trivial());
        // zero map into Z^2
        let g = cokernel(&IntMatrix::from_i64(2, 1, &[0, 0]));
        assert_eq!(g, FgAbGroup::free(2));
    }

    #[test]
    fn group_canonicalization() {
        let g = FgAbGroup::from_orders(&[BigInt::from(4), BigInt::from(6)]);
        assert_eq!(g.rank(), 0);
        let t: Vec<i64> = g.torsion().iter().map(|d| i64::try_from(d).unwrap()).collect();
        assert_eq!(t, vec![2, 12]);
        // unit factors are dropped, zero orders are free summands
        let g = FgAbGroup::from_orders(&[BigInt::from(1), BigInt::from(0), BigInt::from(5)]);
        assert_eq!(g, FgAbGroup::from_parts(1, &[BigInt::from(5)]));
    }

    #[test]
    fn hom_kernel_addition_map() {
        // ker(Z/7 + Z/7 --[1 1]--> Z/7) = Z/7
        let a = FgAbGroup::from_orders(&[BigInt::from(7), BigInt::from(7)]);
        let b = FgAbGroup::cyclic(7);
        let m = IntMatrix::from_i64(1, 2, &[1, 1]);
        let k = hom_kernel(&a, &b, &m).unwrap();
        assert_eq!(k, FgAbGroup::cyclic(7));
    }

    #[test]
    fn hom_kernel_identity_and_zero() {
        let z6 = FgAbGroup::cyclic(6);
        let id = IntMatrix::from_i64(1, 1, &[1]);
        assert!(hom_kernel(&z6, &z6, &id).unwrap().is_trivial());

        let z = FgAbGroup::free(1);
        let zero = IntMatrix::from_i64(1, 1, &[0]);
        assert_eq!(hom_kernel(&z, &z, &zero).unwrap(), FgAbGroup::free(1));
    }

    #[test]
    fn hom_kernel_rejects_incompatible_map() {
        // there is no homomorphism Z/6 -> Z sending the generator to 1
        let a = FgAbGroup::cyclic(6);
        let b = FgAbGroup::free(1);
        let m = IntMatrix::from_i64(1, 1, &[1]);
        assert_eq!(
            hom_kernel(&a, &b, &m),
            Err(FgabError::IncompatibleMap {
                relation: 0,
                generator: 0
            })
        );
    }

    #[test]
    fn hom_kernel_rejects_shape_mismatch() {
        let a = FgAbGroup::cyclic(6);
        let b = FgAbGroup::cyclic(6);
        let m = IntMatrix::from_i64(1, 2, &[1, 0]);
        assert!(matches!(
            hom_kernel(&a, &b, &m),
            Err(FgabError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn tensor_dim_examples() {
        assert_eq!(tensor_dim(&FgAbGroup::free(1), 7).unwrap(), 1);
        let g = FgAbGroup::from_orders(&[BigInt::from(7), BigInt::from(91)]);
        assert_eq!(tensor_dim(&g, 7).unwrap(), 2);
        assert_eq!(tensor_dim(&g, 3).unwrap(), 0);
        assert_eq!(tensor_dim(&g, 6), Err(FgabError::NotPrime(6)));
    }

    /// gcd of all k x k minors, 0 when every minor vanishes.
    fn minor_gcd(m: &IntMatrix, k: usize) -> BigInt {
        fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![Vec::new()];
            }
            if k > n {
                return Vec::new();
            }
            let mut out = Vec::new();
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                out.push(idx.clone());
                let mut i = k;
                loop {
                    if i == 0 {
                        return out;
                    }
                    i -= 1;
                    if idx[i] != i + n - k {
                        break;
                    }
                }
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        let mut g = BigInt::zero();
        for rows in combinations(m.rows(), k) {
            for cols in combinations(m.cols(), k) {
                let mut sub = IntMatrix::zero(k, k);
                for (i, &r) in rows.iter().enumerate() {
                    for (j, &c) in cols.iter().enumerate() {
                        sub.set(i, j, m.get(r, c).clone());
                    }
                }
                g = g.gcd(&sub.det());
            }
        }
        g
    }

    fn check_snf_contract(m: &IntMatrix) {
        let snf = smith_normal_form(m);
        // witnesses are unimodular and reproduce the diagonal exactly
        assert_eq!(snf.left.det().abs(), BigInt::one());
        assert_eq!(snf.right.det().abs(), BigInt::one());
        assert_eq!(snf.left.mul(m).mul(&snf.right), snf.diagonal_matrix());
        // nonnegative, zeros trail, divisibility chain
        let d = &snf.diagonal;
        assert!(d.iter().all(|x| !x.is_negative()));
        for w in d.windows(2) {
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].mod_floor(&w[0]).is_zero());
            }
        }
        // product of the first k entries = gcd of all k x k minors
        let mut prod = BigInt::one();
        for (k, dk) in d.iter().enumerate() {
            prod *= dk;
            assert_eq!(prod, minor_gcd(m, k + 1), "minor gcd at k={}", k + 1);
        }
    }

    proptest! {
        #[test]
        fn snf_contract_random(
            rows in 0usize..=4,
            cols in 0usize..=4,
            seed in proptest::collection::vec(-5i64..=5, 16),
        ) {
            let entries: Vec<i64> = seed.iter().copied().take(rows * cols).collect();
            let m = IntMatrix::from_i64(rows, cols, &entries);
            check_snf_contract(&m);
        }

        #[test]
        fn cokernel_order_matches_det(
            n in 1usize..=3,
            seed in proptest::collection::vec(-5i64..=5, 9),
        ) {
            let entries: Vec<i64> = seed.iter().copied().take(n * n).collect();
            let m = IntMatrix::from_i64(n, n, &entries);
            let det = m.det();
            prop_assume!(!det.is_zero());
            let g = cokernel(&m);
            prop_assert_eq!(g.rank(), 0);
            prop_assert_eq!(g.order().unwrap(), det.abs());
        }

        #[test]
        fn cokernel_invariant_under_unimodular_ops(
            n in 1usize..=3,
            seed in proptest::collection::vec(-4i64..=4, 9),
            q in -3i64..=3,
        ) {
            let entries: Vec<i64> = seed.iter().copied().take(n * n).collect();
            let m = IntMatrix::from_i64(n, n, &entries);
            // an elementary row op on the left, an elementary col op on the right
            let mut u = IntMatrix::identity(n);
            let mut v = IntMatrix::identity(n);
            if n > 1 {
                u.set(1, 0, BigInt::from(q));
                v.set(0, n - 1, BigInt::from(-q));
            }
            prop_assert_eq!(cokernel(&u.mul(&m).mul(&v)), cokernel(&m));
        }

        #[test]
        fn tensor_dim_additive(
            r1 in 0usize..=2, r2 in 0usize..=2,
            o1 in 2u32..=30, o2 in 2u32..=30,
            lsel in 0usize..=3,
        ) {
            let l = [2u64, 3, 5, 7][lsel];
            let a = FgAbGroup::from_parts(r1, &[BigInt::from(o1)]);
            let b = FgAbGroup::from_parts(r2, &[BigInt::from(o2)]);
            let lhs = tensor_dim(&a.direct_sum(&b), l).unwrap();
            let rhs = tensor_dim(&a, l).unwrap() + tensor_dim(&b, l).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn hom_kernel_addition_map_cyclic(r in 1u32..=60) {
            let a = FgAbGroup::from_orders(&[BigInt::from(r), BigInt::from(r)]);
            let b = FgAbGroup::cyclic(r);
            let m = IntMatrix::from_i64(1, 2, &[1, 1]);
            prop_assert_eq!(hom_kernel(&a, &b, &m).unwrap(), FgAbGroup::cyclic(r));
        }
    }
}
