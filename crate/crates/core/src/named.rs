//! Bundled triangulations and the short complex specifiers accepted by the CLI.
//!
//! Bundled data is re-validated on every load; see `data/README.md` for how
//! each facet list was produced.

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

const RP2_6: &str = include_str!("../data/rp2_6.json");
const CP2_9: &str = include_str!("../data/cp2_9.json");

pub const BUNDLED_NAMES: [&str; 2] = ["rp2_6", "cp2_9"];

/// The six-vertex real projective plane, validated.
pub fn rp2_6() -> Result<SimplicialComplex> {
    bundled("rp2_6")
}

/// The nine-vertex complex projective plane, validated.
pub fn cp2_9() -> Result<SimplicialComplex> {
    bundled("cp2_9")
}

type Validator = fn(&SimplicialComplex) -> std::result::Result<(), String>;

pub fn bundled(name: &str) -> Result<SimplicialComplex> {
    let (text, check): (&str, Validator) = match name {
        "rp2_6" => (RP2_6, validate_rp2),
        "cp2_9" => (CP2_9, validate_cp2),
        _ => return Err(Error::UnknownComplex(name.to_string())),
    };
    let c = SimplicialComplex::from_json_str(text)?;
    check(&c).map_err(|reason| Error::InvalidBundled { name: name.to_string(), reason })?;
    Ok(c)
}

fn validate_rp2(c: &SimplicialComplex) -> std::result::Result<(), String> {
    expect(c.n() == 6, "expected 6 vertices")?;
    expect(c.facets().len() == 10, "expected 10 facets")?;
    expect(c.is_closed_surface(), "not a closed surface")?;
    expect(c.euler_characteristic() == 1, "Euler characteristic is not 1")?;
    expect(c.bipartition_property(), "bipartition property fails")
}

fn validate_cp2(c: &SimplicialComplex) -> std::result::Result<(), String> {
    expect(c.n() == 9, "expected 9 vertices")?;
    expect(c.facets().len() == 36, "expected 36 facets")?;
    expect(c.dim() == Some(4), "expected dimension 4")?;
    expect(c.is_closed_pseudomanifold(), "not a closed pseudomanifold")?;
    expect(c.euler_characteristic() == 3, "Euler characteristic is not 3")?;
    expect(c.bipartition_property(), "bipartition property fails")
}

fn expect(ok: bool, reason: &str) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(reason.to_string())
    }
}

/// Resolves a complex specifier:
///
/// - a bundled name (`rp2_6`, `cp2_9`)
/// - `simplex:NV`, `boundary:NV`, `skeleton:NV:K`, `discrete:N`
/// - `discrete-join:N:COPIES`, the join of `COPIES` copies of `N` points
///
/// Anything else is `None` so callers can fall back to reading a file.
pub fn from_spec(spec: &str) -> Option<Result<SimplicialComplex>> {
    if BUNDLED_NAMES.contains(&spec) {
        return Some(bundled(spec));
    }
    let mut parts = spec.split(':');
    let kind = parts.next()?;
    let args: Vec<&str> = parts.collect();
    let nums: std::result::Result<Vec<usize>, _> = args.iter().map(|a| a.parse::<usize>()).collect();
    let bad = || Some(Err(Error::InvalidParameters(format!("malformed complex specifier `{spec}`"))));
    let Ok(nums) = nums else { return bad() };
    let built = match (kind, nums.as_slice()) {
        ("simplex", [nv]) => SimplicialComplex::simplex(*nv),
        ("boundary", [nv]) => SimplicialComplex::simplex_boundary(*nv),
        ("skeleton", [nv, k]) => SimplicialComplex::simplex_skeleton(*nv, *k),
        ("discrete", [n]) => SimplicialComplex::discrete(*n),
        ("discrete-join", [n, copies]) => SimplicialComplex::discrete(*n).and_then(|d| d.join_power(*copies)),
        ("simplex" | "boundary" | "skeleton" | "discrete" | "discrete-join", _) => return bad(),
        _ => return None,
    };
    Some(built.map(|c| c.with_name(spec)))
}
