//! Nonsingular bilinear maps with exact rational coefficients.
//!
//! A tensor `T` of shape `(a, b, d)` defines `B: Q^a × Q^b → Q^d` by
//! `B(x, y)_k = Σ_{i,j} T[i][j][k] x_i y_j`.

mod algebra;
mod catalog;
mod probe;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use algebra::{cayley_dickson_conj, cayley_dickson_mul, left_multiplication, verify_hr, HrFamily};
pub use catalog::{ClosureMap, Construction};
pub use probe::{exact_certificate, nonsingularity_probe, probe, ExactCertificate, ProbeOutcome};

pub type Rational = BigRational;

/// Integer as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"3"`, `"-3/4"` and similar.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    s.parse().map_err(|_| Error::InvalidParameters(format!("`{s}` is not a rational number")))
}

/// Parses a comma-separated rational vector such as `1,0,-1/2`.
pub fn parse_vector(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// A step applied after building a catalog tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Transform {
    /// `B'(y, x) = B(x, y)`.
    Swap,
    /// Keep the leading `a` and `b` input coordinates.
    Restrict { a: usize, b: usize },
    /// Pad the output with zero coordinates up to `d`.
    IncludeCodomain { d: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub source: String,
    pub transforms: Vec<Transform>,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.source)?;
        for t in &self.transforms {
            match t {
                Transform::Swap => write!(f, " |> swap")?,
                Transform::Restrict { a, b } => write!(f, " |> restrict({a},{b})")?,
                Transform::IncludeCodomain { d } => write!(f, " |> include({d})")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearTensor {
    a: usize,
    b: usize,
    d: usize,
    coeffs: BTreeMap<(usize, usize, usize), Rational>,
    provenance: Provenance,
}

impl BilinearTensor {
    /// Builds a tensor from `((i, j, k), value)` pairs; zero values are dropped
    /// and repeated indices are summed.
    pub fn new<I>(dims: (usize, usize, usize), entries: I, source: impl Into<String>) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize, usize), Rational)>,
    {
        let (a, b, d) = dims;
        let mut coeffs: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
        for ((i, j, k), v) in entries {
            if i >= a || j >= b || k >= d {
                return Err(Error::DimensionMismatch(format!(
                    "coefficient index ({i},{j},{k}) is outside shape ({a},{b},{d})"
                )));
            }
            *coeffs.entry((i, j, k)).or_insert_with(Rational::zero) += v;
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(BilinearTensor { a, b, d, coeffs, provenance: Provenance { source: source.into(), transforms: Vec::new() } })
    }

    /// The all-zero map of the given shape.
    pub fn zero(dims: (usize, usize, usize)) -> Self {
        Self::new(dims, std::iter::empty(), "zero").expect("no entries")
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.a, self.b, self.d)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Rational {
        self.coeffs.get(&(i, j, k)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients in index order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), &Rational)> + '_ {
        self.coeffs.iter().map(|(&idx, v)| (idx, v))
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    /// Returns a copy with the coefficient at `(i, j, k)` replaced.
    pub fn with_coefficient(&self, (i, j, k): (usize, usize, usize), value: Rational) -> Result<Self> {
        let mut out = self.clone();
        if i >= self.a || j >= self.b || k >= self.d {
            return Err(Error::DimensionMismatch(format!("index ({i},{j},{k}) is outside the tensor")));
        }
        if value.is_zero() {
            out.coeffs.remove(&(i, j, k));
        } else {
            out.coeffs.insert((i, j, k), value);
        }
        out.provenance.source = format!("{} (edited)", self.provenance.source);
        Ok(out)
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.a || y.len() != self.b {
            return Err(Error::DimensionMismatch(format!(
                "map takes vectors of length {} and {}, got {} and {}",
                self.a,
                self.b,
                x.len(),
                y.len()
            )));
        }
        let mut out = vec![Rational::zero(); self.d];
        for (&(i, j, k), c) in &self.coeffs {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            out[k] += c * &x[i] * &y[j];
        }
        Ok(out)
    }

    /// The `d × b` matrix of `y ↦ B(x, y)`.
    pub fn matrix_for(&self, x: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        if x.len() != self.a {
            return Err(Error::DimensionMismatch(format!("expected x of length {}, got {}", self.a, x.len())));
        }
        let mut m = vec![vec![Rational::zero(); self.b]; self.d];
        for (&(i, j, k), c) in &self.coeffs {
            if !x[i].is_zero() {
                m[k][j] += c * &x[i];
            }
        }
        Ok(m)
    }

    pub fn restrict(&self, a: usize, b: usize) -> Result<Self> {
        if a > self.a || b > self.b {
            return Err(Error::DimensionMismatch(format!(
                "cannot restrict ({},{},{}) to inputs ({a},{b})",
                self.a, self.b, self.d
            )));
        }
        let coeffs =
            self.coeffs.iter().filter(|((i, j, _), _)| *i < a && *j < b).map(|(&k, v)| (k, v.clone())).collect();
        Ok(self.derived(a, b, self.d, coeffs, Transform::Restrict { a, b }))
    }

    pub fn include_codomain(&self, d: usize) -> Result<Self> {
        if d < self.d {
            return Err(Error::DimensionMismatch(format!("cannot shrink the codomain from {} to {d}", self.d)));
        }
        Ok(self.derived(self.a, self.b, d, self.coeffs.clone(), Transform::IncludeCodomain { d }))
    }

    pub fn swap(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(&(i, j, k), v)| ((j, i, k), v.clone())).collect();
        self.derived(self.b, self.a, self.d, coeffs, Transform::Swap)
    }

    fn derived(
        &self,
        a: usize,
        b: usize,
        d: usize,
        coeffs: BTreeMap<(usize, usize, usize), Rational>,
        step: Transform,
    ) -> Self {
        let mut provenance = self.provenance.clone();
        provenance.transforms.push(step);
        BilinearTensor { a, b, d, coeffs, provenance }
    }

    pub fn to_document(&self) -> TensorDocument {
        TensorDocument {
            dims: [self.a, self.b, self.d],
            provenance: self.provenance.clone(),
            coefficients: self.coeffs.iter().map(|(&(i, j, k), v)| (i, j, k, v.to_string())).collect(),
        }
    }

    pub fn from_document(doc: &TensorDocument) -> Result<Self> {
        let [a, b, d] = doc.dims;
        let entries: Vec<_> = doc
            .coefficients
            .iter()
            .map(|(i, j, k, v)| parse_rational(v).map(|r| ((*i, *j, *k), r)))
            .collect::<Result<_>>()?;
        let mut t = Self::new((a, b, d), entries, doc.provenance.source.clone())?;
        t.provenance.transforms = doc.provenance.transforms.clone();
        Ok(t)
    }
}

/// Serialized tensor: shape plus sparse `(i, j, k, "num/den")` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDocument {
    pub dims: [usize; 3],
    pub provenance: Provenance,
    pub coefficients: Vec<(usize, usize, usize, String)>,
}

/// Sum of squares.
pub fn norm_squared(v: &[Rational]) -> Rational {
    v.iter().fold(Rational::zero(), |acc, x| acc + x * x)
}
