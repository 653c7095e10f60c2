//! Nonsingularity evidence: exact structural certificates and a seeded
//! randomized probe.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::algebra::hr_identity_holds;
use super::{BilinearTensor, Rational};
use crate::linalg::{rank, rank_mod_prime, reduce_mod, MERSENNE_31};

/// A proof that a tensor is nonsingular.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExactCertificate {
    /// The slices `A_i = B(e_i, ·)` are integer matrices with
    /// `A_iᵀA_j + A_jᵀA_i = 2δ_ij·I`, so `‖B(x,y)‖ = ‖x‖·‖y‖`.
    NormIdentity { family_size: usize },
    /// `B` is real polynomial multiplication (`T[i][j][i+j] = 1`, all else 0).
    PolynomialProduct,
    /// `B` is complex polynomial multiplication on interleaved `(re, im)` pairs.
    ComplexPolynomialProduct,
}

/// Returns an exact certificate if the tensor has one of the recognized shapes.
pub fn exact_certificate(t: &BilinearTensor) -> Option<ExactCertificate> {
    if has_norm_identity(t) {
        return Some(ExactCertificate::NormIdentity { family_size: t.dims().0 });
    }
    if is_polynomial_product(t) {
        return Some(ExactCertificate::PolynomialProduct);
    }
    if is_complex_polynomial_product(t) {
        return Some(ExactCertificate::ComplexPolynomialProduct);
    }
    None
}

fn has_norm_identity(t: &BilinearTensor) -> bool {
    let (a, b, d) = t.dims();
    if d < b {
        return false;
    }
    let mut mats = vec![vec![vec![0i64; b]; d]; a];
    for ((i, j, k), v) in t.entries() {
        match v.is_integer().then(|| v.to_integer().to_i64()).flatten() {
            Some(c) => mats[i][k][j] = c,
            None => return false,
        }
    }
    hr_identity_holds(&mats)
}

fn is_polynomial_product(t: &BilinearTensor) -> bool {
    let (a, b, d) = t.dims();
    a >= 1 && b >= 1 && d + 1 >= a + b && t.nnz() == a * b && t.entries().all(|((i, j, k), v)| k == i + j && v.is_one())
}

fn is_complex_polynomial_product(t: &BilinearTensor) -> bool {
    let (a, b, d) = t.dims();
    if a == 0 || b == 0 || a % 2 == 1 || b % 2 == 1 || d + 2 < a + b || t.nnz() != a * b {
        return false;
    }
    t.entries().all(|((i, j, k), v)| {
        let (s, t) = (i / 2, j / 2);
        let expected = match (i % 2, j % 2) {
            (0, 0) => (2 * (s + t), 1),
            (1, 1) => (2 * (s + t), -1),
            _ => (2 * (s + t) + 1, 1),
        };
        k == expected.0 && *v == Rational::from_integer(BigInt::from(expected.1))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeOutcome {
    pub passed: bool,
    pub pair_trials: usize,
    pub rank_trials: usize,
    /// Description of the first failed check.
    pub failure: Option<String>,
}

/// Randomized nonsingularity evidence; see [`probe`].
pub fn nonsingularity_probe(t: &BilinearTensor, trials: usize, seed: u64) -> bool {
    probe(t, trials, seed).passed
}

/// Runs `trials` checks `B(x, y) ≠ 0` on random nonzero rational pairs, then
/// `2·trials` checks that `y ↦ B(x, y)` has rank `b`. The rank checks use the
/// standard basis vectors first, then random `x`.
///
/// Random coordinates are `0` with probability 1/2, otherwise `±1..=9`, over a
/// common denominator in `1..=9`. Full rank modulo `2^31 − 1` is accepted as
/// full rank over Q; anything else is decided by exact elimination.
pub fn probe(t: &BilinearTensor, trials: usize, seed: u64) -> ProbeOutcome {
    let (a, b, _) = t.dims();
    let mut outcome = ProbeOutcome { passed: true, pair_trials: 0, rank_trials: 0, failure: None };
    if a == 0 || b == 0 {
        return outcome;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scaled = ScaledTensor::of(t);
    for n in 0..trials {
        outcome.pair_trials += 1;
        let x = random_vector(&mut rng, a);
        let y = random_vector(&mut rng, b);
        let zero = match &scaled {
            Some(s) => s.apply_is_zero(&x.nums, &y.nums),
            None => t.apply(&x.rational(), &y.rational()).expect("dimensions match").iter().all(Zero::is_zero),
        };
        if zero {
            outcome.passed = false;
            outcome.failure = Some(format!("pair trial {}: B(x, y) = 0 for x = {}, y = {}", n + 1, x, y));
            return outcome;
        }
    }
    for n in 0..2 * trials {
        outcome.rank_trials += 1;
        let x = if n < a { RandomVector::basis(a, n) } else { random_vector(&mut rng, a) };
        let full = match &scaled {
            Some(s) => s.slice_has_full_rank(&x.nums),
            None => rank(&t.matrix_for(&x.rational()).expect("dimensions match")) == b,
        };
        if !full {
            outcome.passed = false;
            outcome.failure = Some(format!("rank trial {}: y ↦ B(x, y) has rank < {b} for x = {}", n + 1, x));
            return outcome;
        }
    }
    outcome
}

/// Integer multiple of a tensor, small enough for `i64` coefficients.
struct ScaledTensor {
    b: usize,
    d: usize,
    entries: Vec<(usize, usize, usize, i64)>,
    /// `entries` reduced mod the probe prime.
    entries_mod: Vec<(usize, usize, usize, u64)>,
}

impl ScaledTensor {
    fn of(t: &BilinearTensor) -> Option<Self> {
        let lcm = t.entries().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
        let entries = t
            .entries()
            .map(|((i, j, k), v)| (v.numer() * (&lcm / v.denom())).to_i64().map(|c| (i, j, k, c)))
            .collect::<Option<Vec<_>>>()?;
        let entries_mod =
            entries.iter().map(|&(i, j, k, c)| (i, j, k, reduce_mod(i128::from(c), MERSENNE_31))).collect();
        let (_, b, d) = t.dims();
        Some(ScaledTensor { b, d, entries, entries_mod })
    }

    fn apply_is_zero(&self, x: &[i64], y: &[i64]) -> bool {
        let mut out = vec![0i128; self.d];
        for &(i, j, k, c) in &self.entries {
            out[k] += i128::from(c) * i128::from(x[i]) * i128::from(y[j]);
        }
        out.iter().all(|&v| v == 0)
    }

    fn slice_has_full_rank(&self, x: &[i64]) -> bool {
        let (b, d) = (self.b, self.d);
        if d < b {
            return false;
        }
        let x_mod: Vec<u64> = x.iter().map(|&v| reduce_mod(i128::from(v), MERSENNE_31)).collect();
        let mut m = vec![0u64; d * b];
        for &(i, j, k, c) in &self.entries_mod {
            if x_mod[i] != 0 {
                let cell = &mut m[k * b + j];
                *cell = (*cell + c * x_mod[i]) % MERSENNE_31;
            }
        }
        if rank_mod_prime::<MERSENNE_31>(&mut m, d, b) == b {
            return true;
        }
        let mut exact = vec![vec![Rational::zero(); b]; d];
        for &(i, j, k, c) in &self.entries {
            exact[k][j] += Rational::from_integer(BigInt::from(c) * BigInt::from(x[i]));
        }
        rank(&exact) == b
    }
}

struct RandomVector {
    nums: Vec<i64>,
    den: i64,
}

impl RandomVector {
    fn basis(len: usize, i: usize) -> Self {
        let mut nums = vec![0; len];
        nums[i] = 1;
        RandomVector { nums, den: 1 }
    }

    fn rational(&self) -> Vec<Rational> {
        self.nums.iter().map(|&n| Rational::new(BigInt::from(n), BigInt::from(self.den))).collect()
    }
}

impl std::fmt::Display for RandomVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.rational().iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn random_vector(rng: &mut ChaCha8Rng, len: usize) -> RandomVector {
    let den = rng.gen_range(1..=9);
    let mut nums: Vec<i64> = (0..len)
        .map(|_| {
            if rng.gen_bool(0.5) {
                0
            } else {
                let v = rng.gen_range(1..=9);
                if rng.gen_bool(0.5) {
                    v
                } else {
                    -v
                }
            }
        })
        .collect();
    if nums.iter().all(|&v| v == 0) {
        let i = rng.gen_range(0..len);
        nums[i] = 1;
    }
    RandomVector { nums, den }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bilinear::{int, norm_squared, Construction, HrFamily};

    #[test]
    fn catalog_passes_and_has_certificates() {
        for c in Construction::catalog(12) {
            let t = c.build().unwrap();
            assert!(nonsingularity_probe(&t, 40, 0), "{c}");
            let cert = exact_certificate(&t);
            match c {
                // small cases coincide with family kinds, e.g. poly_mult(0,k) = scalar(k+1)
                Construction::PolyMult { p, q } if p > 0 && q > 0 => {
                    assert_eq!(cert, Some(ExactCertificate::PolynomialProduct), "{c}")
                }
                Construction::ComplexPolyMult { p, q } if p > 1 && q > 1 => {
                    assert_eq!(cert, Some(ExactCertificate::ComplexPolynomialProduct), "{c}")
                }
                Construction::PolyMult { .. } | Construction::ComplexPolyMult { .. } => assert!(cert.is_some()),
                _ => assert_eq!(cert, Some(ExactCertificate::NormIdentity { family_size: t.dims().0 }), "{c}"),
            }
        }
        assert!(exact_certificate(&Construction::Hr16.build().unwrap()).is_some());
    }

    #[test]
    fn zero_tensor_fails_on_first_trial() {
        let out = probe(&BilinearTensor::zero((3, 3, 5)), 10, 0);
        assert!(!out.passed);
        assert_eq!(out.pair_trials, 1);
        assert!(out.failure.unwrap().starts_with("pair trial 1"));
    }

    #[test]
    fn zeroed_top_coefficient_is_caught() {
        for (p, q) in [(1, 1), (2, 3), (4, 2), (6, 6)] {
            let t = Construction::PolyMult { p, q }.build().unwrap();
            let broken = t.with_coefficient((p, q, p + q), int(0)).unwrap();
            assert!(!nonsingularity_probe(&broken, 20, 0), "({p},{q})");
            assert!(exact_certificate(&broken).is_none());
        }
    }

    #[test]
    fn certificates_survive_closure_operations() {
        let oct = Construction::OctonionBlock { k: 2 }.build().unwrap();
        for t in [oct.swap(), oct.restrict(5, 11).unwrap(), oct.include_codomain(20).unwrap()] {
            assert!(matches!(exact_certificate(&t), Some(ExactCertificate::NormIdentity { .. })), "{}", t.provenance());
        }
        let pm = Construction::PolyMult { p: 3, q: 5 }.build().unwrap();
        assert_eq!(exact_certificate(&pm.swap().restrict(4, 2).unwrap()), Some(ExactCertificate::PolynomialProduct));
        let cp = Construction::ComplexPolyMult { p: 3, q: 5 }.build().unwrap();
        assert_eq!(exact_certificate(&cp.swap()), Some(ExactCertificate::ComplexPolynomialProduct));
    }

    fn signed_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let mut m = vec![vec![0; n]; n];
        for (r, &c) in perm.iter().enumerate() {
            m[r][c] = if rng.gen_bool(0.5) { 1 } else { -1 };
        }
        m
    }

    fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = b[0].len();
        a.iter().map(|row| (0..n).map(|c| row.iter().zip(b).map(|(x, br)| x * br[c]).sum()).collect()).collect()
    }

    #[test]
    fn verified_families_pass_the_probe() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let bases = [HrFamily::division_algebra(2).unwrap(), HrFamily::division_algebra(8).unwrap(), HrFamily::hr16()];
        for base in &bases {
            for _ in 0..5 {
                let p = signed_permutation(base.dim(), &mut rng);
                let q = signed_permutation(base.dim(), &mut rng);
                let mats = base.matrices().iter().map(|m| mul(&mul(&p, m), &q)).collect();
                let fam = HrFamily::new(base.dim(), mats).unwrap();
                assert!(crate::bilinear::verify_hr(&fam));
                let t = fam.tensor("conjugated");
                assert!(nonsingularity_probe(&t, 30, 1));
                let x: Vec<Rational> = (0..fam.len()).map(|i| int(i as i64 - 2)).collect();
                let y: Vec<Rational> = (0..fam.dim()).map(|i| int(3 - i as i64)).collect();
                assert_eq!(norm_squared(&t.apply(&x, &y).unwrap()), norm_squared(&x) * norm_squared(&y));
            }
        }
    }

    #[test]
    fn probe_is_deterministic() {
        let t = Construction::ComplexPolyMult { p: 3, q: 5 }.build().unwrap().restrict(3, 5).unwrap();
        assert_eq!(probe(&t, 25, 42), probe(&t, 25, 42));
        let broken = BilinearTensor::new((2, 2, 2), [((0, 0, 0), int(1)), ((1, 1, 0), int(1))], "sum of squares")
            .unwrap()
            .include_codomain(2)
            .unwrap();
        // x0·y0 + x1·y1 vanishes on orthogonal pairs
        assert_eq!(probe(&broken, 50, 3), probe(&broken, 50, 3));
        assert!(!probe(&broken, 50, 3).passed);
    }

    #[test]
    fn non_integer_coefficients_take_the_scaled_path() {
        let t = Construction::QuaternionBlock { k: 1 }.build().unwrap();
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let entries: Vec<_> = t.entries().map(|(idx, v)| (idx, v * &half)).collect();
        let scaled = BilinearTensor::new(t.dims(), entries, "half").unwrap();
        assert!(nonsingularity_probe(&scaled, 30, 0));
        assert!(exact_certificate(&scaled).is_none());
    }
}
