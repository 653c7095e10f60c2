//! The construction catalog and its closure under restriction, codomain
//! padding and argument swap.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{int, BilinearTensor, HrFamily};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    /// `(1, k, k)`: scalar times vector.
    Scalar { k: usize },
    /// `(2, 2k, 2k)`: complex multiplication on `k` blocks.
    ComplexBlock { k: usize },
    /// `(4, 4k, 4k)`: quaternion multiplication on `k` blocks.
    QuaternionBlock { k: usize },
    /// `(8, 8k, 8k)`: octonion multiplication on `k` blocks.
    OctonionBlock { k: usize },
    /// `(p+1, q+1, p+q+1)`: real polynomial multiplication.
    PolyMult { p: usize, q: usize },
    /// `(p+1, q+1, p+q)` for odd `p, q`: complex polynomial multiplication,
    /// coefficients stored as interleaved `(re, im)` pairs.
    ComplexPolyMult { p: usize, q: usize },
    /// `(9, 16, 16)`: the nine-matrix family in dimension 16.
    Hr16,
}

impl Construction {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        match *self {
            Construction::Scalar { k }
            | Construction::ComplexBlock { k }
            | Construction::QuaternionBlock { k }
            | Construction::OctonionBlock { k }
                if k == 0 =>
            {
                bad(format!("{self}: k must be at least 1"))
            }
            Construction::ComplexPolyMult { p, q } if p % 2 == 0 || q % 2 == 0 => {
                bad(format!("{self}: both degrees must be odd"))
            }
            _ => Ok(()),
        }
    }

    /// `(a, b, d)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        match *self {
            Construction::Scalar { k } => (1, k, k),
            Construction::ComplexBlock { k } => (2, 2 * k, 2 * k),
            Construction::QuaternionBlock { k } => (4, 4 * k, 4 * k),
            Construction::OctonionBlock { k } => (8, 8 * k, 8 * k),
            Construction::PolyMult { p, q } => (p + 1, q + 1, p + q + 1),
            Construction::ComplexPolyMult { p, q } => (p + 1, q + 1, p + q),
            Construction::Hr16 => (9, 16, 16),
        }
    }

    /// The family whose induced map is this construction, for the kinds built that way.
    pub fn hr_family(&self) -> Option<HrFamily> {
        let (alg, k) = match *self {
            Construction::Scalar { k } => (1, k),
            Construction::ComplexBlock { k } => (2, k),
            Construction::QuaternionBlock { k } => (4, k),
            Construction::OctonionBlock { k } => (8, k),
            Construction::Hr16 => return Some(HrFamily::hr16()),
            _ => return None,
        };
        if k == 0 {
            return None;
        }
        Some(HrFamily::division_algebra(alg).expect("valid dimension").block_diagonal(k))
    }

    pub fn build(&self) -> Result<BilinearTensor> {
        self.validate()?;
        if let Some(family) = self.hr_family() {
            return Ok(family.tensor(self.to_string()));
        }
        let dims = self.dims();
        let entries: Vec<_> = match *self {
            Construction::PolyMult { p, q } => {
                (0..=p).flat_map(|i| (0..=q).map(move |j| ((i, j, i + j), int(1)))).collect()
            }
            Construction::ComplexPolyMult { p, q } => {
                let mut e = Vec::new();
                for s in 0..p.div_ceil(2) {
                    for t in 0..q.div_ceil(2) {
                        let (re, im) = (2 * (s + t), 2 * (s + t) + 1);
                        e.push(((2 * s, 2 * t, re), int(1)));
                        e.push(((2 * s + 1, 2 * t + 1, re), int(-1)));
                        e.push(((2 * s, 2 * t + 1, im), int(1)));
                        e.push(((2 * s + 1, 2 * t, im), int(1)));
                    }
                }
                e
            }
            _ => unreachable!("family-based kinds handled above"),
        };
        BilinearTensor::new(dims, entries, self.to_string())
    }

    /// Every valid construction with output dimension `<= max_output`, in
    /// catalog order: kinds as declared, parameters increasing within a kind.
    pub fn catalog(max_output: usize) -> Vec<Construction> {
        let mut out = Vec::new();
        for (step, make) in [
            (1, (|k| Construction::Scalar { k }) as fn(usize) -> Construction),
            (2, |k| Construction::ComplexBlock { k }),
            (4, |k| Construction::QuaternionBlock { k }),
            (8, |k| Construction::OctonionBlock { k }),
        ] {
            out.extend((1..=max_output / step).map(make));
        }
        if max_output >= 16 {
            out.push(Construction::Hr16);
        }
        for p in 0..max_output {
            for q in 0..max_output - p {
                out.push(Construction::PolyMult { p, q });
            }
        }
        for p in (1..max_output).step_by(2) {
            for q in (1..=max_output - p).step_by(2) {
                out.push(Construction::ComplexPolyMult { p, q });
            }
        }
        out
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Construction::Scalar { .. } => "scalar",
            Construction::ComplexBlock { .. } => "complex_block",
            Construction::QuaternionBlock { .. } => "quaternion_block",
            Construction::OctonionBlock { .. } => "octonion_block",
            Construction::PolyMult { .. } => "poly_mult",
            Construction::ComplexPolyMult { .. } => "complex_poly_mult",
            Construction::Hr16 => "hr16",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = self.kind();
        match *self {
            Construction::Scalar { k }
            | Construction::ComplexBlock { k }
            | Construction::QuaternionBlock { k }
            | Construction::OctonionBlock { k } => write!(f, "{kind}({k})"),
            Construction::PolyMult { p, q } | Construction::ComplexPolyMult { p, q } => write!(f, "{kind}({p},{q})"),
            Construction::Hr16 => f.write_str(kind),
        }
    }
}

impl FromStr for Construction {
    type Err = Error;

    /// Accepts the display form, e.g. `quaternion_block(2)`, `poly_mult(1,3)`, `hr16`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidParameters(format!("unknown construction `{s}`"));
        if s == "hr16" {
            return Ok(Construction::Hr16);
        }
        let (kind, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let c = match (kind.trim(), nums.as_slice()) {
            ("scalar", [k]) => Construction::Scalar { k: *k },
            ("complex_block", [k]) => Construction::ComplexBlock { k: *k },
            ("quaternion_block", [k]) => Construction::QuaternionBlock { k: *k },
            ("octonion_block", [k]) => Construction::OctonionBlock { k: *k },
            ("poly_mult", [p, q]) => Construction::PolyMult { p: *p, q: *q },
            ("complex_poly_mult", [p, q]) => Construction::ComplexPolyMult { p: *p, q: *q },
            _ => return Err(bad()),
        };
        c.validate()?;
        Ok(c)
    }
}

/// A catalog construction, optionally swapped, restricted to inputs `(a, b)`
/// and padded to output dimension `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureMap {
    pub construction: Construction,
    pub swapped: bool,
    pub a: usize,
    pub b: usize,
    pub d: usize,
}

impl ClosureMap {
    pub fn realize(&self) -> Result<BilinearTensor> {
        let mut t = self.construction.build()?;
        if self.swapped {
            t = t.swap();
        }
        let (a, b, _) = t.dims();
        if (a, b) != (self.a, self.b) {
            t = t.restrict(self.a, self.b)?;
        }
        if t.dims().2 != self.d {
            t = t.include_codomain(self.d)?;
        }
        Ok(t)
    }

    /// The map `Q^e × Q^(q+1) → Q^d` with the largest `q` reachable from the
    /// catalog; ties go to the earliest catalog entry, unswapped first.
    pub fn best(e: usize, d: usize) -> Option<ClosureMap> {
        if e == 0 || d < e {
            return None;
        }
        let mut best: Option<ClosureMap> = None;
        for c in Construction::catalog(d) {
            let (a0, b0, d0) = c.dims();
            for (swapped, a, b) in [(false, a0, b0), (true, b0, a0)] {
                if a < e || d0 > d {
                    continue;
                }
                if best.is_none_or(|m| b > m.b) {
                    best = Some(ClosureMap { construction: c, swapped, a: e, b, d });
                }
            }
        }
        best
    }

    /// The lower bound `q = b − 1` this map supports.
    pub fn q(&self) -> usize {
        self.b - 1
    }
}

impl fmt::Display for ClosureMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.construction)?;
        if self.swapped {
            write!(f, " |> swap")?;
        }
        write!(f, " |> restrict({},{}) |> include({})", self.a, self.b, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bilinear::Rational;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn names_round_trip() {
        for c in Construction::catalog(20) {
            assert_eq!(c.to_string().parse::<Construction>().unwrap(), c);
        }
        assert!("complex_poly_mult(2,3)".parse::<Construction>().is_err());
        assert!("scalar(0)".parse::<Construction>().is_err());
        assert!("poly_mult(1)".parse::<Construction>().is_err());
        assert!("cubic(1)".parse::<Construction>().is_err());
    }

    #[test]
    fn dims_match_built_tensors() {
        for c in Construction::catalog(18) {
            assert_eq!(c.build().unwrap().dims(), c.dims(), "{c}");
        }
    }

    #[test]
    fn small_products() {
        let cb = Construction::ComplexBlock { k: 1 }.build().unwrap();
        assert_eq!(cb.apply(&v(&[0, 1]), &v(&[0, 1])).unwrap(), v(&[-1, 0]));
        let qb = Construction::QuaternionBlock { k: 1 }.build().unwrap();
        let y = v(&[3, -1, 4, 1]);
        assert_eq!(qb.apply(&v(&[1, 0, 0, 0]), &y).unwrap(), y);
        let pm = Construction::PolyMult { p: 1, q: 1 }.build().unwrap();
        assert_eq!(pm.apply(&v(&[1, 1]), &v(&[1, 1])).unwrap(), v(&[1, 2, 1]));
        let cp = Construction::ComplexPolyMult { p: 1, q: 1 }.build().unwrap();
        assert_eq!(cp.apply(&v(&[1, 0]), &v(&[1, 0])).unwrap(), v(&[1, 0]));
        let cp = Construction::ComplexPolyMult { p: 3, q: 3 }.build().unwrap();
        // (1 + i t) * (i + t) = i + t + i²t + i t² = i + (1 − 1)t + i t²
        assert_eq!(cp.apply(&v(&[1, 0, 0, 1]), &v(&[0, 1, 1, 0])).unwrap(), v(&[0, 1, 0, 0, 0, 1]));
    }

    #[test]
    fn catalog_counts() {
        let cat = Construction::catalog(32);
        let count = |kind: &str| cat.iter().filter(|c| c.kind() == kind).count();
        assert_eq!(count("scalar"), 32);
        assert_eq!(count("octonion_block"), 4);
        assert_eq!(count("hr16"), 1);
        assert_eq!(count("poly_mult"), 32 * 33 / 2);
        assert_eq!(count("complex_poly_mult"), 16 * 17 / 2);
        assert!(cat.iter().all(|c| c.dims().2 <= 32));
    }

    #[test]
    fn closure_search_examples() {
        let m = ClosureMap::best(4, 8).unwrap();
        assert_eq!((m.construction, m.q()), (Construction::QuaternionBlock { k: 2 }, 7));
        let m = ClosureMap::best(3, 4).unwrap();
        assert_eq!((m.construction, m.a, m.b, m.d), (Construction::QuaternionBlock { k: 1 }, 3, 4, 4));
        assert_eq!(m.realize().unwrap().dims(), (3, 4, 4));
        let m = ClosureMap::best(6, 14).unwrap();
        assert_eq!((m.construction, m.q()), (Construction::ComplexPolyMult { p: 5, q: 9 }, 9));
        let m = ClosureMap::best(9, 16).unwrap();
        assert_eq!((m.construction, m.q()), (Construction::Hr16, 15));
        assert!(ClosureMap::best(5, 4).is_none());
        for e in 1..=10 {
            for d in e..=24 {
                assert!(ClosureMap::best(e, d).unwrap().q() >= d - e);
            }
        }
    }
}
