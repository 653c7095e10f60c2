//! Matrix rank over Q (exact) and over a prime field.

use num_rational::BigRational;
use num_traits::Zero;

/// Exact rank over the rationals by Gaussian elimination.
pub fn rank(matrix: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = matrix.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        let pivot_row: Vec<BigRational> = m[rank].iter().map(|v| v * &inv).collect();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                if !pv.is_zero() {
                    row[c] -= &factor * pv;
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// 2^31 - 1.
pub const MERSENNE_31: u64 = (1 << 31) - 1;

/// Rank over Z/p of a row-major `rows × cols` matrix with entries already
/// reduced mod the prime `P < 2^32`. Since a nonzero minor mod P is nonzero over Z, this
/// never exceeds the rational rank of any integer lift. The matrix is
/// overwritten.
pub fn rank_mod_prime<const P: u64>(m: &mut [u64], rows: usize, cols: usize) -> usize {
    assert_eq!(m.len(), rows * cols, "matrix shape");
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for c in col..cols {
                m.swap(rank * cols + c, pivot * cols + c);
            }
        }
        let (top, bottom) = m.split_at_mut((rank + 1) * cols);
        let pivot_row = &mut top[rank * cols + col..];
        let inv = pow_mod(pivot_row[0], P - 2, P);
        for v in pivot_row.iter_mut() {
            *v = *v * inv % P;
        }
        for row in bottom.chunks_exact_mut(cols) {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            let neg = P - factor;
            for (v, &pv) in row[col..].iter_mut().zip(pivot_row.iter()) {
                *v = (*v + neg * pv) % P;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Reduces a signed integer into `0..p`.
pub fn reduce_mod(x: i128, p: u64) -> u64 {
    x.rem_euclid(p as i128) as u64
}
