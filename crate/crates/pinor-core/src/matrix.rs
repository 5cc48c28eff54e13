//! Dense square matrices over Gaussian rationals.
//!
//! Dimensions stay tiny (≤ 2^⌈d/2⌉ for the gamma representations), so a
//! dense row-major `Vec` is simpler and faster than anything sparse.
//! Values are immutable after construction and freely shareable.

use crate::scalar::GaussScalar;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("matrix is singular")]
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<GaussScalar>, // row-major, dim*dim
}

impl ExactMatrix {
    pub fn new(dim: usize, entries: Vec<GaussScalar>) -> Self {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim^2");
        ExactMatrix { dim, entries }
    }

    pub fn zero(dim: usize) -> Self {
        ExactMatrix::new(dim, vec![GaussScalar::zero(); dim * dim])
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = ExactMatrix::zero(dim);
        for k in 0..dim {
            m.entries[k * dim + k] = GaussScalar::one();
        }
        m
    }

    /// Builds from rows of i64 entries (real).
    pub fn from_rows_int(rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.len(), dim);
            for &v in *r {
                entries.push(GaussScalar::from_int(v));
            }
        }
        ExactMatrix::new(dim, entries)
    }

    /// Builds from rows of (real, imaginary) integer pairs.
    pub fn from_rows_gauss(rows: &[&[(i64, i64)]]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.len(), dim);
            for &(re, im) in *r {
                entries.push(GaussScalar::from_parts(re, 1, im, 1));
            }
        }
        ExactMatrix::new(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussScalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussScalar) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[GaussScalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self == &ExactMatrix::identity(self.dim)
    }

    /// Exact matrix product. Errors on dimension mismatch.
    pub fn matmul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        if self.dim != rhs.dim {
            return Err(MatrixError::DimMismatch(self.dim, rhs.dim));
        }
        let n = self.dim;
        let mut out = ExactMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + prod);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product with row-major pair ordering:
    /// (a⊗b)[(i,α),(j,β)] = a[i][j]·b[α][β].
    pub fn kron(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let (n, m) = (self.dim, rhs.dim);
        let nm = n * m;
        let mut out = ExactMatrix::zero(nm);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for x in 0..m {
                    for y in 0..m {
                        let b = rhs.get(x, y);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * m + x, j * m + y, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> ExactMatrix {
        let n = self.dim;
        let mut out = ExactMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn conjugate(&self) -> ExactMatrix {
        ExactMatrix::new(self.dim, self.entries.iter().map(|e| e.conj()).collect())
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> ExactMatrix {
        self.conjugate().transpose()
    }

    pub fn trace(&self) -> GaussScalar {
        let mut t = GaussScalar::zero();
        for k in 0..self.dim {
            t += self.get(k, k).clone();
        }
        t
    }

    pub fn scale(&self, c: &GaussScalar) -> ExactMatrix {
        ExactMatrix::new(self.dim, self.entries.iter().map(|e| e * c).collect())
    }

    /// Exact inverse by Gaussian elimination; the pivot is the first
    /// nonzero entry in the column (no numerical heuristics needed).
    pub fn inverse(&self) -> Result<ExactMatrix, MatrixError> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = ExactMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(MatrixError::Singular)?;
            if pivot_row != col {
                for j in 0..n {
                    let tmp = a.get(col, j).clone();
                    a.set(col, j, a.get(pivot_row, j).clone());
                    a.set(pivot_row, j, tmp);
                    let tmp = inv.get(col, j).clone();
                    inv.set(col, j, inv.get(pivot_row, j).clone());
                    inv.set(pivot_row, j, tmp);
                }
            }
            let pivot_inv = a.get(col, col).inv().ok_or(MatrixError::Singular)?;
            for j in 0..n {
                a.set(col, j, a.get(col, j) * &pivot_inv);
                inv.set(col, j, inv.get(col, j) * &pivot_inv);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let v = a.get(r, j).clone() - (&factor * a.get(col, j));
                    a.set(r, j, v);
                    let v = inv.get(r, j).clone() - (&factor * inv.get(col, j));
                    inv.set(r, j, v);
                }
            }
        }
        Ok(inv)
    }

    /// If `self == c·I`, return the scalar c.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<GaussScalar> {
        let c = self.get(0, 0).clone();
        let candidate = ExactMatrix::identity(self.dim).scale(&c);
        if candidate == *self {
            Some(c)
        } else {
            None
        }
    }

    /// If `self == c·other` for a scalar c, return c. `other` must be nonzero.
    pub fn as_scalar_multiple_of(&self, other: &ExactMatrix) -> Option<GaussScalar> {
        if self.dim != other.dim {
            return None;
        }
        let (k, pivot) = other
            .entries
            .iter()
            .enumerate()
            .find(|(_, e)| !e.is_zero())?;
        let c = self.entries[k].clone() / pivot.clone();
        if &other.scale(&c) == self {
            Some(c)
        } else {
            None
        }
    }

    /// Exact kernel (null space) basis, as column vectors.
    pub fn kernel(&self) -> Vec<Vec<GaussScalar>> {
        let n = self.dim;
        let mut a = self.clone();
        // Row-reduce to reduced echelon form, tracking pivot columns.
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(pr) = (row..n).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for j in 0..n {
                    let tmp = a.get(row, j).clone();
                    a.set(row, j, a.get(pr, j).clone());
                    a.set(pr, j, tmp);
                }
            }
            let inv = a.get(row, col).inv().unwrap();
            for j in 0..n {
                a.set(row, j, a.get(row, j) * &inv);
            }
            for r in 0..n {
                if r != row && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    for j in 0..n {
                        let v = a.get(r, j).clone() - (&f * a.get(row, j));
                        a.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![GaussScalar::zero(); n];
            v[free] = GaussScalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[GaussScalar]) -> Vec<GaussScalar> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| {
                let mut acc = GaussScalar::zero();
                for j in 0..self.dim {
                    let e = self.get(i, j);
                    if !e.is_zero() && !v[j].is_zero() {
                        acc += e * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// True when every entry is real (rational).
    pub fn is_entrywise_real(&self) -> bool {
        self.entries.iter().all(|e| e.im.numer() == &num_bigint::BigInt::from(0))
    }

    /// True when every entry is purely imaginary or zero, with at least one nonzero.
    pub fn is_entrywise_imaginary(&self) -> bool {
        !self.is_zero()
            && self
                .entries
                .iter()
                .all(|e| e.re.numer() == &num_bigint::BigInt::from(0))
    }

    /// JSON-friendly form: rows of canonical scalar strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim);
        ExactMatrix::new(
            self.dim,
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        )
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim);
        ExactMatrix::new(
            self.dim,
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix::new(self.dim, self.entries.iter().map(|e| -e.clone()).collect())
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    /// Panics on dimension mismatch; use `matmul` for a checked product.
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.matmul(rhs).expect("matrix dimension mismatch")
    }
}

/// Row echelon reduction of a rectangular system; returns (reduced rows,
/// pivot columns). Exact, first-nonzero pivoting.
fn rect_echelon(rows: &[Vec<GaussScalar>]) -> (Vec<Vec<GaussScalar>>, Vec<usize>) {
    let mut a: Vec<Vec<GaussScalar>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(pr) = (row..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pr);
        let inv = a[row][col].inv().unwrap();
        for j in 0..ncols {
            a[row][j] = &a[row][j] * &inv;
        }
        for r in 0..nrows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..ncols {
                    let v = a[r][j].clone() - (&f * &a[row][j]);
                    a[r][j] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    (a, pivots)
}

/// Rank of a rectangular Gaussian-rational matrix.
pub fn rect_rank(rows: &[Vec<GaussScalar>]) -> usize {
    rect_echelon(rows).1.len()
}

/// Kernel basis of a rectangular system `rows · x = 0`.
pub fn rect_kernel(rows: &[Vec<GaussScalar>]) -> Vec<Vec<GaussScalar>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let (a, pivots) = rect_echelon(rows);
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![GaussScalar::zero(); ncols];
        v[free] = GaussScalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// The three Pauli matrices σ₁, σ₂, σ₃.
pub fn pauli() -> [ExactMatrix; 3] {
    [
        ExactMatrix::from_rows_int(&[&[0, 1], &[1, 0]]),
        ExactMatrix::from_rows_gauss(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]]),
        ExactMatrix::from_rows_int(&[&[1, 0], &[0, -1]]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_matrix(rng: &mut StdRng, dim: usize) -> ExactMatrix {
        let entries = (0..dim * dim)
            .map(|_| {
                GaussScalar::from_parts(
                    rng.gen_range(-6..=6),
                    rng.gen_range(1..=4),
                    rng.gen_range(-6..=6),
                    rng.gen_range(1..=4),
                )
            })
            .collect();
        ExactMatrix::new(dim, entries)
    }

    /// Independent triple-loop product, the brute-force oracle for matmul.
    fn schoolbook(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
        let n = a.dim();
        let mut out = ExactMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = GaussScalar::zero();
                for k in 0..n {
                    acc += a.get(i, k) * b.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Independent index-arithmetic Kronecker oracle.
    fn kron_oracle(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
        let (n, m) = (a.dim(), b.dim());
        let mut out = ExactMatrix::zero(n * m);
        for bigi in 0..n * m {
            for bigj in 0..n * m {
                out.set(bigi, bigj, a.get(bigi / m, bigj / m) * b.get(bigi % m, bigj % m));
            }
        }
        out
    }

    #[test]
    fn identity_product() {
        let i4 = ExactMatrix::identity(4);
        assert_eq!(i4.matmul(&i4).unwrap(), i4);
    }

    #[test]
    fn pauli_product_relation() {
        // σ₁σ₂ = iσ₃
        let [s1, s2, s3] = pauli();
        let lhs = &s1 * &s2;
        assert_eq!(lhs, s3.scale(&GaussScalar::i()));
    }

    #[test]
    fn matmul_matches_schoolbook_oracle() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..20 {
            let a = random_matrix(&mut rng, 4);
            let b = random_matrix(&mut rng, 4);
            assert_eq!(a.matmul(&b).unwrap(), schoolbook(&a, &b));
        }
    }

    #[test]
    fn kron_identity_and_oracle() {
        let i2 = ExactMatrix::identity(2);
        assert_eq!(i2.kron(&i2), ExactMatrix::identity(4));
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..10 {
            let a = random_matrix(&mut rng, 2);
            let b = random_matrix(&mut rng, 3);
            assert_eq!(a.kron(&b), kron_oracle(&a, &b));
        }
    }

    #[test]
    fn kron_mixed_product_property() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..10 {
            let a = random_matrix(&mut rng, 2);
            let b = random_matrix(&mut rng, 2);
            let c = random_matrix(&mut rng, 2);
            let d = random_matrix(&mut rng, 2);
            let lhs = a.kron(&b).matmul(&c.kron(&d)).unwrap();
            let rhs = a.matmul(&c).unwrap().kron(&b.matmul(&d).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dagger_reverses_products() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..10 {
            let a = random_matrix(&mut rng, 3);
            let b = random_matrix(&mut rng, 3);
            assert_eq!((&a * &b).dagger(), &b.dagger() * &a.dagger());
        }
    }

    #[test]
    fn dagger_entrywise_oracle() {
        // (iσ₂)† = (iσ₂)ᵀ because iσ₂ is real.
        let [_, s2, _] = pauli();
        let is2 = s2.scale(&GaussScalar::i());
        assert_eq!(is2.dagger(), is2.transpose());
        let mut rng = StdRng::seed_from_u64(23);
        let a = random_matrix(&mut rng, 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a.dagger().get(i, j), &a.get(j, i).conj());
            }
        }
    }

    #[test]
    fn trace_cyclic() {
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..10 {
            let a = random_matrix(&mut rng, 4);
            let b = random_matrix(&mut rng, 4);
            assert_eq!((&a * &b).trace(), (&b * &a).trace());
        }
        assert_eq!(ExactMatrix::identity(4).trace(), GaussScalar::from_int(4));
    }

    #[test]
    fn inverse_exact() {
        let mut rng = StdRng::seed_from_u64(31);
        let mut checked = 0;
        while checked < 10 {
            let a = random_matrix(&mut rng, 4);
            if let Ok(inv) = a.inverse() {
                assert!( (&inv * &a).is_identity());
                assert!( (&a * &inv).is_identity());
                checked += 1;
            }
        }
        assert_eq!(ExactMatrix::zero(3).inverse(), Err(MatrixError::Singular));
    }

    #[test]
    fn kernel_basis_annihilated() {
        // Projector-like matrix with a 2-dim kernel.
        let m = ExactMatrix::from_rows_int(&[
            &[1, 0, 1, 0],
            &[0, 1, 0, 1],
            &[1, 0, 1, 0],
            &[0, 1, 0, 1],
        ]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.apply(v).iter().all(|e| e.is_zero()));
        }
    }
}
