//! Cayley–Dickson algebras over the integers and Hurwitz–Radon families.
//!
//! Doubling convention: `(a, b)(c, d) = (ac − d̄b, da + bc̄)` with
//! `conj(a, b) = (ā, −b)`. Dimensions 1, 2, 4, 8 give the reals, complex
//! numbers, quaternions and octonions; basis vector `e_0` is the unit.

use serde::Serialize;

use super::{int, BilinearTensor};
use crate::error::{Error, Result};

pub fn cayley_dickson_conj(x: &[i64]) -> Vec<i64> {
    x.iter().enumerate().map(|(i, &v)| if i == 0 { v } else { -v }).collect()
}

/// Product in the Cayley–Dickson algebra of dimension `x.len()`, a power of two.
pub fn cayley_dickson_mul(x: &[i64], y: &[i64]) -> Vec<i64> {
    assert_eq!(x.len(), y.len(), "operands must have equal length");
    assert!(x.len().is_power_of_two(), "dimension must be a power of two");
    let n = x.len();
    if n == 1 {
        return vec![x[0] * y[0]];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = cayley_dickson_mul(a, c);
    let db = cayley_dickson_mul(&cayley_dickson_conj(d), b);
    let da = cayley_dickson_mul(d, a);
    let bc = cayley_dickson_mul(b, &cayley_dickson_conj(c));
    let mut out: Vec<i64> = ac.iter().zip(&db).map(|(p, q)| p - q).collect();
    out.extend(da.iter().zip(&bc).map(|(p, q)| p + q));
    out
}

/// Matrix of `y ↦ x·y`: entry `[k][j]` is the `e_k` coefficient of `x·e_j`.
pub fn left_multiplication(x: &[i64]) -> Vec<Vec<i64>> {
    let n = x.len();
    let mut m = vec![vec![0; n]; n];
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 1;
        for (k, v) in cayley_dickson_mul(x, &e).into_iter().enumerate() {
            m[k][j] = v;
        }
    }
    m
}

/// Square integer matrices `A_1..A_r` of size `dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HrFamily {
    dim: usize,
    matrices: Vec<Vec<Vec<i64>>>,
}

impl HrFamily {
    /// Checks shapes only; use [`verify_hr`] for the identities.
    pub fn new(dim: usize, matrices: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        for (idx, m) in matrices.iter().enumerate() {
            if m.len() != dim || m.iter().any(|row| row.len() != dim) {
                return Err(Error::DimensionMismatch(format!("matrix {idx} is not {dim}×{dim}")));
            }
        }
        Ok(HrFamily { dim, matrices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn matrices(&self) -> &[Vec<Vec<i64>>] {
        &self.matrices
    }

    /// Left multiplications by the basis units of the algebra of dimension 1, 2, 4 or 8.
    pub fn division_algebra(dim: usize) -> Result<Self> {
        if !matches!(dim, 1 | 2 | 4 | 8) {
            return Err(Error::InvalidParameters(format!("no normed division algebra of dimension {dim}")));
        }
        let matrices = (0..dim)
            .map(|i| {
                let mut e = vec![0; dim];
                e[i] = 1;
                left_multiplication(&e)
            })
            .collect();
        Ok(HrFamily { dim, matrices })
    }

    /// Each matrix repeated `k` times along the diagonal.
    pub fn block_diagonal(&self, k: usize) -> Self {
        let n = self.dim * k;
        let matrices = self
            .matrices
            .iter()
            .map(|a| {
                let mut m = vec![vec![0; n]; n];
                for r in 0..k {
                    for (row, vals) in a.iter().enumerate() {
                        m[r * self.dim + row][r * self.dim..(r + 1) * self.dim].copy_from_slice(vals);
                    }
                }
                m
            })
            .collect();
        HrFamily { dim: n, matrices }
    }

    /// Nine matrices of size 16: the identity, `diag(J_i, −J_i)` for the seven
    /// imaginary octonion left multiplications `J_i`, and `[[0, I], [−I, 0]]`.
    pub fn hr16() -> Self {
        let oct = Self::division_algebra(8).expect("octonions");
        let mut matrices = vec![identity(16)];
        for j in &oct.matrices[1..] {
            let mut m = vec![vec![0; 16]; 16];
            for r in 0..8 {
                for c in 0..8 {
                    m[r][c] = j[r][c];
                    m[r + 8][c + 8] = -j[r][c];
                }
            }
            matrices.push(m);
        }
        let mut e = vec![vec![0; 16]; 16];
        for r in 0..8 {
            e[r][r + 8] = 1;
            e[r + 8][r] = -1;
        }
        matrices.push(e);
        HrFamily { dim: 16, matrices }
    }

    /// The induced map `Q^r × Q^dim → Q^dim`, `B(y, x) = Σ y_i A_i x`.
    pub fn tensor(&self, source: impl Into<String>) -> BilinearTensor {
        let entries = self.matrices.iter().enumerate().flat_map(|(i, a)| {
            a.iter().enumerate().flat_map(move |(k, row)| {
                row.iter().enumerate().filter(|(_, v)| **v != 0).map(move |(j, &v)| ((i, j, k), int(v)))
            })
        });
        BilinearTensor::new((self.len(), self.dim, self.dim), entries, source).expect("indices in range")
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect()
}

/// True iff `A_iᵀA_j + A_jᵀA_i = 2δ_ij·I` holds exactly for all `i ≤ j`.
pub fn verify_hr(family: &HrFamily) -> bool {
    hr_identity_holds(&family.matrices)
}

/// The same identity for `rows × cols` matrices of a common shape.
pub(crate) fn hr_identity_holds(mats: &[Vec<Vec<i64>>]) -> bool {
    let Some(first) = mats.first() else { return true };
    let rows = first.len();
    let cols = first.first().map_or(0, Vec::len);
    if mats.iter().any(|m| m.len() != rows || m.iter().any(|r| r.len() != cols)) {
        return false;
    }
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i..] {
            let same = std::ptr::eq(a, b);
            for p in 0..cols {
                for q in 0..cols {
                    let s: i64 = (0..rows).map(|k| a[k][p] * b[k][q] + b[k][p] * a[k][q]).sum();
                    let expected = if same && p == q { 2 } else { 0 };
                    if s != expected {
                        return false;
                    }
                }
            }
        }
    }
    true
}
