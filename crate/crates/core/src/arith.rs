//! Binary-expansion arithmetic and the Hurwitz–Radon function.

use serde::Serialize;

use crate::error::{Error, Result};

/// True iff `x` and `y` share no 1-bit. Equivalently `x + y` has no carries,
/// or `C(x + y, x)` is odd.
pub const fn ones_disjoint(x: u64, y: u64) -> bool {
    x & y == 0
}

/// True iff the multinomial coefficient `(Σ parts; parts)` is even, i.e. some
/// two parts share a 1-bit.
pub fn multinomial_is_even(parts: &[u64]) -> bool {
    let mut seen = 0u64;
    for &p in parts {
        if seen & p != 0 {
            return true;
        }
        seen |= p;
    }
    false
}

/// `n = 2^(b + 4c) · (2a + 1)` with `0 <= b < 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HrDecomposition {
    pub a: u64,
    pub b: u32,
    pub c: u32,
}

impl HrDecomposition {
    pub fn of(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        let twos = n.trailing_zeros();
        Ok(HrDecomposition { a: (n >> twos) / 2, b: twos % 4, c: twos / 4 })
    }

    pub fn rho(&self) -> u32 {
        (1 << self.b) + 8 * self.c
    }

    pub fn value(&self) -> u64 {
        (2 * self.a + 1) << (self.b + 4 * self.c)
    }
}

/// ρ(n) = 2^b + 8c.
pub fn hurwitz_radon(n: u64) -> Result<u32> {
    HrDecomposition::of(n).map(|d| d.rho())
}

/// Binary expansion, most significant bit first; `"0"` for zero.
pub fn binary(x: u64) -> String {
    format!("{x:b}")
}
