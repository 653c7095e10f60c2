//! Certified coindex intervals.
//!
//! Upper bounds: for a complex on `n` vertices whose Kneser graph of minimal
//! nonfaces has a proper `c`-coloring, put `m = d − n + c + 2`. If
//! `0 <= m <= ℓ` and `m`, `ℓ − m` share no binary 1-bit, the coindex of the
//! space of almost-embeddings into `R^d` with `ℓ` flipped coordinates is at
//! most `m − 1`. The coindex is nondecreasing in `d` for fixed `ℓ` and along
//! the diagonal `ℓ = d`, so bounds found at larger `d'` transfer down.
//!
//! Lower bounds (diagonal case only): if the complex embeds in `R^e` and a
//! nonsingular bilinear map `R^e × R^(q+1) → R^d` exists, the coindex is at
//! least `q`. Any embedding at all gives coindex `>= 0`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arith::{binary, ones_disjoint};
use crate::bilinear::{exact_certificate, probe, ClosureMap, ExactCertificate};
use crate::error::{Error, Result};
use crate::kneser::{chromatic_number_with_budget, kneser_graph, ColoringCertificate, DEFAULT_NODE_BUDGET};
use crate::simplicial::{ComplexFile, SimplicialComplex};

/// Added to `d` for the default monotonicity horizon.
pub const DEFAULT_HORIZON_SPAN: usize = 64;

/// Probe effort used when replaying a bilinear lower bound.
pub const REPLAY_PROBE_TRIALS: usize = 64;
pub const REPLAY_PROBE_SEED: u64 = 0;

#[derive(Clone, Debug)]
pub struct BoundQuery {
    pub complex: SimplicialComplex,
    pub d: usize,
    pub ell: usize,
    /// Number of colors to use instead of the computed chromatic number.
    pub c_override: Option<usize>,
    /// Dimension of a known Euclidean embedding of the complex.
    pub embed_dim: Option<usize>,
    pub node_budget: u64,
}

impl BoundQuery {
    pub fn new(complex: SimplicialComplex, d: usize, ell: usize) -> Result<Self> {
        if ell > d {
            return Err(Error::InvalidQuery(format!("--ell {ell} exceeds --d {d}")));
        }
        Ok(BoundQuery { complex, d, ell, c_override: None, embed_dim: None, node_budget: DEFAULT_NODE_BUDGET })
    }

    pub fn with_c(mut self, c: Option<usize>) -> Self {
        self.c_override = c;
        self
    }

    pub fn with_embed_dim(mut self, e: Option<usize>) -> Result<Self> {
        if e == Some(0) {
            return Err(Error::InvalidQuery("--embed-dim must be at least 1".into()));
        }
        self.embed_dim = e;
        Ok(self)
    }

    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }

    pub fn default_horizon(&self) -> usize {
        self.d + DEFAULT_HORIZON_SPAN
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColorSource {
    Solver,
    Override,
}

/// One re-checkable rule application.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule")]
pub enum DerivationStep {
    /// Almost-embeddings of the boundary of a simplex extend over the simplex,
    /// so the query is answered for the full simplex.
    #[serde(rename = "SIMPLEX-EXTENSION")]
    SimplexExtension { p: usize, boundary: String, simplex: String },
    #[serde(rename = "KNESER-COLORING-BOUND")]
    KneserColoringBound {
        n: usize,
        c: usize,
        c_source: ColorSource,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coloring: Option<ColoringCertificate>,
        d: usize,
        ell: usize,
        m: i64,
        ell_minus_m: i64,
        m_binary: String,
        ell_minus_m_binary: String,
        upper: i64,
    },
    /// Fixed `ℓ`: an upper bound at `from_d >= to_d` holds at `to_d`.
    #[serde(rename = "MONOTONE-D")]
    MonotoneD { ell: usize, from_d: usize, to_d: usize, upper: i64 },
    /// Diagonal `ℓ = d`: an upper bound at `from_d >= to_d` holds at `to_d`.
    #[serde(rename = "DIAGONAL-MONOTONE")]
    DiagonalMonotone { from_d: usize, to_d: usize, upper: i64 },
    #[serde(rename = "BILINEAR-LOWER-BOUND")]
    BilinearLowerBound {
        e: usize,
        d: usize,
        q: i64,
        construction: String,
        map: ClosureMap,
        /// Certificate of the catalog construction before restriction.
        base_certificate: Option<ExactCertificate>,
        /// Certificate of the realized map, when its shape still has one.
        certificate: Option<ExactCertificate>,
    },
    #[serde(rename = "EMBEDDING-EXISTS")]
    EmbeddingExists { e: usize, d: usize, ell: usize, lower: i64 },
}

impl DerivationStep {
    pub fn rule(&self) -> &'static str {
        match self {
            DerivationStep::SimplexExtension { .. } => "SIMPLEX-EXTENSION",
            DerivationStep::KneserColoringBound { .. } => "KNESER-COLORING-BOUND",
            DerivationStep::MonotoneD { .. } => "MONOTONE-D",
            DerivationStep::DiagonalMonotone { .. } => "DIAGONAL-MONOTONE",
            DerivationStep::BilinearLowerBound { .. } => "BILINEAR-LOWER-BOUND",
            DerivationStep::EmbeddingExists { .. } => "EMBEDDING-EXISTS",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundCertificate {
    pub complex: ComplexFile,
    pub d: usize,
    pub ell: usize,
    #[serde(default)]
    pub c_override: Option<usize>,
    #[serde(default)]
    pub embed_dim: Option<usize>,
    pub horizon: usize,
    /// `None`: nothing asserted. `>= 0` asserts the space is nonempty.
    pub lower: Option<i64>,
    /// `-1` asserts the space is empty.
    pub upper: Option<i64>,
    pub exact: bool,
    /// The chromatic number search ran out of budget, so no upper bound rule fired.
    #[serde(default)]
    pub budget_exceeded: bool,
    pub derivation: Vec<DerivationStep>,
}

#[derive(Clone, Debug)]
struct Colors {
    c: usize,
    source: ColorSource,
    coloring: Option<ColoringCertificate>,
}

enum ColorLookup {
    Found(Colors),
    BudgetExceeded,
}

fn colors(q: &BoundQuery) -> ColorLookup {
    if let Some(c) = q.c_override {
        return ColorLookup::Found(Colors { c, source: ColorSource::Override, coloring: None });
    }
    let kg = kneser_graph(&q.complex);
    match chromatic_number_with_budget(kg.graph(), q.node_budget) {
        Ok(cert) => {
            ColorLookup::Found(Colors { c: cert.num_colors, source: ColorSource::Solver, coloring: Some(cert) })
        }
        Err(_) => ColorLookup::BudgetExceeded,
    }
}

fn coloring_bound_at(n: usize, colors: &Colors, d: usize, ell: usize) -> Option<(i64, DerivationStep)> {
    let m = d as i64 - n as i64 + colors.c as i64 + 2;
    let rest = ell as i64 - m;
    if m < 0 || rest < 0 || !ones_disjoint(m as u64, rest as u64) {
        return None;
    }
    let upper = m - 1;
    let step = DerivationStep::KneserColoringBound {
        n,
        c: colors.c,
        c_source: colors.source,
        coloring: colors.coloring.clone(),
        d,
        ell,
        m,
        ell_minus_m: rest,
        m_binary: binary(m as u64),
        ell_minus_m_binary: binary(rest as u64),
        upper,
    };
    Some((upper, step))
}

/// The coloring bound at the query's own `(d, ℓ)`.
pub fn upper_theorem(q: &BoundQuery) -> Option<(i64, DerivationStep)> {
    match colors(q) {
        ColorLookup::Found(c) => coloring_bound_at(q.complex.n(), &c, q.d, q.ell),
        ColorLookup::BudgetExceeded => None,
    }
}

/// Best coloring bound over `d' ∈ [d, horizon]`, with fixed `ℓ` and, when
/// `ℓ = d`, also along the diagonal. Ties go to the smallest `d'`, fixed `ℓ` first.
pub fn upper_monotone(q: &BoundQuery, horizon: usize) -> Option<(i64, Vec<DerivationStep>)> {
    match colors(q) {
        ColorLookup::Found(c) => monotone_with(q, &c, horizon),
        ColorLookup::BudgetExceeded => None,
    }
}

fn monotone_with(q: &BoundQuery, colors: &Colors, horizon: usize) -> Option<(i64, Vec<DerivationStep>)> {
    let n = q.complex.n();
    let mut best: Option<(i64, Vec<DerivationStep>)> = None;
    for d2 in q.d..=horizon {
        let mut candidates = Vec::with_capacity(2);
        if let Some((upper, step)) = coloring_bound_at(n, colors, d2, q.ell) {
            let mut steps = vec![step];
            if d2 != q.d {
                steps.push(DerivationStep::MonotoneD { ell: q.ell, from_d: d2, to_d: q.d, upper });
            }
            candidates.push((upper, steps));
        }
        if q.ell == q.d && d2 != q.d {
            if let Some((upper, step)) = coloring_bound_at(n, colors, d2, d2) {
                candidates.push((upper, vec![step, DerivationStep::DiagonalMonotone { from_d: d2, to_d: q.d, upper }]));
            }
        }
        for cand in candidates {
            if best.as_ref().is_none_or(|(b, _)| cand.0 < *b) {
                best = Some(cand);
            }
        }
    }
    best
}

/// Largest `q` from a catalog map `R^e × R^(q+1) → R^d`; `None` if `d < e`.
pub fn lower_constructions(e: usize, d: usize) -> Option<(i64, DerivationStep)> {
    let map = ClosureMap::best(e, d)?;
    let tensor = map.realize().expect("closure maps realize");
    let base = map.construction.build().expect("catalog constructions build");
    let q = map.q() as i64;
    let step = DerivationStep::BilinearLowerBound {
        e,
        d,
        q,
        construction: map.to_string(),
        map,
        base_certificate: exact_certificate(&base),
        certificate: exact_certificate(&tensor),
    };
    Some((q, step))
}

/// Combines every rule into one certificate.
pub fn coindex_bounds(q: &BoundQuery, horizon: usize) -> Result<BoundCertificate> {
    if horizon < q.d {
        return Err(Error::InvalidQuery(format!("horizon {horizon} is below d = {}", q.d)));
    }
    let mut derivation = Vec::new();
    let mut budget_exceeded = false;
    let upper = match colors(q) {
        ColorLookup::Found(c) => monotone_with(q, &c, horizon).map(|(u, steps)| {
            derivation.extend(steps);
            u
        }),
        ColorLookup::BudgetExceeded => {
            budget_exceeded = true;
            None
        }
    };
    let mut lower: Option<i64> = None;
    if let Some(e) = q.embed_dim {
        if q.ell == q.d {
            if let Some((v, step)) = lower_constructions(e, q.d) {
                lower = lower.max(Some(v));
                derivation.push(step);
            }
        }
        if e <= q.d && q.ell >= 1 {
            lower = lower.max(Some(0));
            derivation.push(DerivationStep::EmbeddingExists { e, d: q.d, ell: q.ell, lower: 0 });
        }
    }
    Ok(BoundCertificate {
        complex: ComplexFile::from(&q.complex),
        d: q.d,
        ell: q.ell,
        c_override: q.c_override,
        embed_dim: q.embed_dim,
        horizon,
        exact: lower.is_some() && lower == upper,
        lower,
        upper,
        budget_exceeded,
        derivation,
    })
}

/// Outcome of re-checking one derivation step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepCheck {
    pub rule: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayReport {
    pub ok: bool,
    pub steps: Vec<StepCheck>,
    /// Problems with the certificate as a whole.
    pub errors: Vec<String>,
}

/// Re-derives every step from its recorded parameters: recomputes `m` and the
/// bit condition, recomputes the chromatic number, rebuilds and re-certifies
/// each construction and probes the realized map.
pub fn replay(cert: &BoundCertificate) -> Result<ReplayReport> {
    let complex = SimplicialComplex::try_from(cert.complex.clone())?;
    let mut errors = Vec::new();
    let mut steps = Vec::new();
    if cert.ell > cert.d {
        errors.push(format!("ell = {} exceeds d = {}", cert.ell, cert.d));
    }
    if cert.horizon < cert.d {
        errors.push(format!("horizon {} is below d = {}", cert.horizon, cert.d));
    }
    let mut chi: Option<std::result::Result<usize, ()>> = None;
    let mut last_coloring_bound: Option<(usize, usize, i64)> = None;
    let mut upper_seen: Option<i64> = None;
    let mut lower_seen: Option<i64> = None;
    for step in &cert.derivation {
        let mut problems: Vec<String> = Vec::new();
        let mut fail = |cond: bool, msg: String| {
            if !cond {
                problems.push(msg);
            }
        };
        let detail;
        match step {
            DerivationStep::SimplexExtension { p, .. } => {
                let expected = SimplicialComplex::simplex(p + 2)?;
                fail(complex == expected, format!("complex is not the full simplex on {} vertices", p + 2));
                fail(cert.embed_dim.is_none_or(|e| e == p + 1), format!("embed_dim should be {}", p + 1));
                detail = format!("boundary of the {}-simplex answered through the full simplex", p + 1);
            }
            DerivationStep::KneserColoringBound {
                n,
                c,
                c_source,
                coloring,
                d,
                ell,
                m,
                ell_minus_m,
                m_binary,
                ell_minus_m_binary,
                upper,
            } => {
                fail(*n == complex.n(), format!("n = {n} but the complex has {} vertices", complex.n()));
                let m2 = *d as i64 - complex.n() as i64 + *c as i64 + 2;
                fail(m2 == *m, format!("m recomputes to {m2}, recorded {m}"));
                let rest = *ell as i64 - m2;
                fail(rest == *ell_minus_m, format!("ell - m recomputes to {rest}, recorded {ell_minus_m}"));
                let in_range = m2 >= 0 && rest >= 0;
                fail(in_range, format!("m = {m2} is outside [0, {ell}]"));
                if in_range {
                    fail(
                        ones_disjoint(m2 as u64, rest as u64),
                        format!("{} and {} share a 1-bit", binary(m2 as u64), binary(rest as u64)),
                    );
                    fail(
                        *m_binary == binary(m2 as u64) && *ell_minus_m_binary == binary(rest as u64),
                        "recorded binary expansions are wrong".into(),
                    );
                }
                fail(*upper == m2 - 1, format!("upper should be {}", m2 - 1));
                match c_source {
                    ColorSource::Override => {
                        fail(cert.c_override == Some(*c), "override color count does not match the query".into())
                    }
                    ColorSource::Solver => {
                        fail(cert.c_override.is_none(), "query overrides c but the step used the solver".into());
                        let kg = kneser_graph(&complex);
                        let computed = *chi.get_or_insert_with(|| {
                            chromatic_number_with_budget(kg.graph(), DEFAULT_NODE_BUDGET)
                                .map(|w| w.num_colors)
                                .map_err(|_| ())
                        });
                        match computed {
                            Ok(x) => fail(x == *c, format!("chromatic number recomputes to {x}, recorded {c}")),
                            Err(()) => fail(false, "chromatic number search exceeded its budget".into()),
                        }
                        if let Some(w) = coloring {
                            fail(
                                w.num_colors == *c && w.validate(kg.graph()),
                                "recorded coloring is not a proper coloring with c colors".into(),
                            );
                        }
                    }
                }
                if *d == cert.d && *ell == cert.ell {
                    upper_seen = Some(*upper);
                }
                last_coloring_bound = Some((*d, *ell, *upper));
                detail = format!("m = {m2}, ell - m = {rest}, upper {}", m2 - 1);
            }
            DerivationStep::MonotoneD { ell, from_d, to_d, upper } => {
                fail(*ell == cert.ell && *to_d == cert.d, "step does not target the query".into());
                fail(from_d >= to_d && *from_d <= cert.horizon, format!("d' = {from_d} outside [d, horizon]"));
                fail(
                    last_coloring_bound == Some((*from_d, *ell, *upper)),
                    "not preceded by a matching coloring bound at d'".into(),
                );
                upper_seen = Some(*upper);
                detail = format!("upper {upper} at d = {from_d} transfers to d = {to_d}");
            }
            DerivationStep::DiagonalMonotone { from_d, to_d, upper } => {
                fail(cert.ell == cert.d && *to_d == cert.d, "diagonal rule needs ell = d".into());
                fail(from_d >= to_d && *from_d <= cert.horizon, format!("d' = {from_d} outside [d, horizon]"));
                fail(
                    last_coloring_bound == Some((*from_d, *from_d, *upper)),
                    "not preceded by a matching coloring bound at ell = d = d'".into(),
                );
                upper_seen = Some(*upper);
                detail = format!("upper {upper} at ell = d = {from_d} transfers to ell = d = {to_d}");
            }
            DerivationStep::BilinearLowerBound { e, d, q, construction, map, base_certificate, certificate } => {
                fail(cert.embed_dim == Some(*e) && *d == cert.d, "step does not match the query".into());
                fail(cert.ell == cert.d, "bilinear lower bounds need ell = d".into());
                fail(map.a >= *e && map.d <= *d, format!("map shape ({},{},{}) does not fit", map.a, map.b, map.d));
                fail(*q == map.b as i64 - 1, format!("q should be {}", map.b as i64 - 1));
                fail(*construction == map.to_string(), "construction label does not match the map".into());
                match (map.construction.build(), map.realize()) {
                    (Ok(base), Ok(tensor)) => {
                        let base_cert = exact_certificate(&base);
                        fail(base_cert.is_some(), "catalog construction has no exact certificate".into());
                        fail(base_cert == *base_certificate, "recorded base certificate differs".into());
                        fail(exact_certificate(&tensor) == *certificate, "recorded certificate differs".into());
                        fail(tensor.dims() == (map.a, map.b, map.d), "realized shape differs".into());
                        let outcome = probe(&tensor, REPLAY_PROBE_TRIALS, REPLAY_PROBE_SEED);
                        fail(outcome.passed, format!("probe failed: {}", outcome.failure.unwrap_or_default()));
                    }
                    (Err(err), _) | (_, Err(err)) => fail(false, format!("construction does not build: {err}")),
                }
                lower_seen = lower_seen.max(Some(*q));
                detail = format!("{construction} certifies q = {q}");
            }
            DerivationStep::EmbeddingExists { e, d, ell, lower } => {
                fail(
                    cert.embed_dim == Some(*e) && *d == cert.d && *ell == cert.ell,
                    "step does not match the query".into(),
                );
                fail(e <= d && *ell >= 1 && *lower == 0, "embedding rule needs e <= d, ell >= 1, lower 0".into());
                lower_seen = lower_seen.max(Some(*lower));
                detail = format!("embedding in R^{e} gives a nonempty space in R^{d}");
            }
        }
        let ok = problems.is_empty();
        steps.push(StepCheck {
            rule: step.rule().to_string(),
            ok,
            detail: if ok { detail } else { problems.join("; ") },
        });
    }
    if upper_seen != cert.upper {
        errors.push(format!("upper {:?} is not what the derivation proves ({upper_seen:?})", cert.upper));
    }
    if lower_seen != cert.lower {
        errors.push(format!("lower {:?} is not what the derivation proves ({lower_seen:?})", cert.lower));
    }
    if cert.exact != (cert.lower.is_some() && cert.lower == cert.upper) {
        errors.push("exact flag is inconsistent".into());
    }
    if let (Some(lo), Some(hi)) = (cert.lower, cert.upper) {
        if lo > hi {
            errors.push(format!("lower {lo} exceeds upper {hi}"));
        }
    }
    let ok = errors.is_empty() && steps.iter().all(|s| s.ok);
    Ok(ReplayReport { ok, steps, errors })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RadonCell {
    /// No almost-embedding exists.
    Empty,
    Exact {
        value: i64,
    },
    Interval {
        lower: Option<i64>,
        upper: Option<i64>,
    },
}

impl RadonCell {
    fn text(&self) -> String {
        let show = |v: Option<i64>| v.map_or("?".to_string(), |v| v.to_string());
        match *self {
            RadonCell::Empty => String::new(),
            RadonCell::Exact { value } => value.to_string(),
            RadonCell::Interval { lower, upper } => format!("{}..{}", show(lower), show(upper)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadonEntry {
    pub p: usize,
    pub d: usize,
    pub cell: RadonCell,
    /// `p` and `d − p` share no 1-bit, so the coloring bound applies at `d` itself.
    pub circled: bool,
    pub certificate: BoundCertificate,
}

/// Coindex of almost-embeddings of the boundary of the `(p+1)`-simplex in `R^d`
/// with all coordinates flipped, for `1 <= p <= p_max`, `1 <= d <= d_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadonTable {
    pub p_max: usize,
    pub d_max: usize,
    /// Row-major: `p` outer, `d` inner.
    pub entries: Vec<RadonEntry>,
}

/// The certificate for one table cell.
pub fn radon_certificate(p: usize, d: usize) -> Result<BoundCertificate> {
    if p == 0 || d == 0 {
        return Err(Error::InvalidQuery("p and d must be at least 1".into()));
    }
    let simplex = SimplicialComplex::simplex(p + 2)?.with_name(format!("simplex:{}", p + 2));
    let q = BoundQuery::new(simplex, d, d)?.with_embed_dim(Some(p + 1))?;
    let mut cert = coindex_bounds(&q, q.default_horizon())?;
    cert.derivation.insert(
        0,
        DerivationStep::SimplexExtension {
            p,
            boundary: format!("boundary:{}", p + 2),
            simplex: format!("simplex:{}", p + 2),
        },
    );
    Ok(cert)
}

pub fn radon_table(p_max: usize, d_max: usize) -> Result<RadonTable> {
    if p_max == 0 || d_max == 0 {
        return Err(Error::InvalidQuery("--pmax and --dmax must be at least 1".into()));
    }
    if p_max + 2 > crate::simplicial::MAX_VERTICES {
        return Err(Error::InvalidQuery(format!("--pmax {p_max} is too large")));
    }
    let mut entries = Vec::with_capacity(p_max * d_max);
    for p in 1..=p_max {
        for d in 1..=d_max {
            let certificate = radon_certificate(p, d)?;
            let cell = match (certificate.lower, certificate.upper) {
                (_, Some(-1)) => RadonCell::Empty,
                (Some(lo), Some(hi)) if lo == hi => RadonCell::Exact { value: lo },
                (lower, upper) => RadonCell::Interval { lower, upper },
            };
            let circled = d > p && ones_disjoint(p as u64, (d - p) as u64);
            entries.push(RadonEntry { p, d, cell, circled, certificate });
        }
    }
    Ok(RadonTable { p_max, d_max, entries })
}

impl RadonTable {
    pub fn entry(&self, p: usize, d: usize) -> Option<&RadonEntry> {
        if p == 0 || d == 0 || p > self.p_max || d > self.d_max {
            return None;
        }
        self.entries.get((p - 1) * self.d_max + (d - 1))
    }

    /// Fixed-width grid; circled cells carry a trailing `*`, empty cells are blank.
    pub fn to_ascii(&self) -> String {
        let texts: Vec<String> =
            self.entries.iter().map(|e| format!("{}{}", e.cell.text(), if e.circled { "*" } else { "" })).collect();
        let width = texts.iter().map(String::len).chain([self.d_max.to_string().len()]).max().unwrap_or(1) + 1;
        let label = "p\\d";
        let mut out = String::new();
        let _ = write!(out, "{label:>4} |");
        for d in 1..=self.d_max {
            let _ = write!(out, "{d:>width$}");
        }
        out.push('\n');
        out.push_str(&format!("{}+{}\n", "-".repeat(5), "-".repeat(width * self.d_max)));
        for p in 1..=self.p_max {
            let _ = write!(out, "{p:>4} |");
            for d in 1..=self.d_max {
                let _ = write!(out, "{:>width$}", texts[(p - 1) * self.d_max + (d - 1)]);
            }
            out.push('\n');
        }
        out
    }

    /// Grid with a header row of `d` values; cells are blank (empty space),
    /// a number (exact), or `lo..hi`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("p");
        for d in 1..=self.d_max {
            let _ = write!(out, ",{d}");
        }
        out.push('\n');
        for p in 1..=self.p_max {
            let _ = write!(out, "{p}");
            for d in 1..=self.d_max {
                let _ = write!(out, ",{}", self.entries[(p - 1) * self.d_max + (d - 1)].cell.text());
            }
            out.push('\n');
        }
        out
    }
}

/// `4⌊d/4⌋ − 1`, for `d >= 4`.
pub fn closed_form_rp2(d: usize) -> Result<i64> {
    if d < 4 {
        return Err(Error::InvalidQuery(format!("closed form for the projective plane needs d >= 4, got {d}")));
    }
    Ok(4 * (d / 4) as i64 - 1)
}

/// `8k` when `d = 8k + 7`, otherwise `8⌊d/8⌋ − 1`, for `d >= 7`.
pub fn closed_form_cp2(d: usize) -> Result<i64> {
    if d < 7 {
        return Err(Error::InvalidQuery(format!("closed form for the complex projective plane needs d >= 7, got {d}")));
    }
    if d % 8 == 7 {
        Ok(8 * (d / 8) as i64)
    } else {
        Ok(8 * (d / 8) as i64 - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{cp2_9, rp2_6};

    fn diagonal(c: SimplicialComplex, d: usize, e: usize) -> BoundCertificate {
        let q = BoundQuery::new(c, d, d).unwrap().with_embed_dim(Some(e)).unwrap();
        coindex_bounds(&q, q.default_horizon()).unwrap()
    }

    #[test]
    fn projective_plane_chirality() {
        let q = BoundQuery::new(rp2_6().unwrap(), 4, 1).unwrap();
        let (upper, step) = upper_theorem(&q).unwrap();
        assert_eq!(upper, 0);
        assert!(matches!(step, DerivationStep::KneserColoringBound { c: 1, m: 1, ell_minus_m: 0, .. }));
    }

    #[test]
    fn full_simplex_at_d_equal_p_is_empty() {
        for p in 1..=6 {
            let q = BoundQuery::new(SimplicialComplex::simplex(p + 2).unwrap(), p, p).unwrap();
            assert_eq!(upper_theorem(&q).unwrap().0, -1);
        }
    }

    #[test]
    fn three_point_join_chirality() {
        let c = SimplicialComplex::discrete(3).unwrap().join_power(3).unwrap();
        let q = BoundQuery::new(c, 5, 1).unwrap();
        let (upper, step) = upper_theorem(&q).unwrap();
        assert_eq!(upper, 0);
        assert!(matches!(step, DerivationStep::KneserColoringBound { n: 9, c: 3, m: 1, .. }));
    }

    #[test]
    fn monotone_examples() {
        let q = BoundQuery::new(SimplicialComplex::simplex(4).unwrap(), 4, 4).unwrap();
        let (upper, steps) = upper_monotone(&q, 68).unwrap();
        assert_eq!(upper, 3);
        // at d' = 6 both regimes apply; fixed ell is listed first
        assert!(matches!(steps[1], DerivationStep::MonotoneD { ell: 4, from_d: 6, to_d: 4, upper: 3 }));
        let cp2 = cp2_9().unwrap();
        for k in 1..=3 {
            let q = BoundQuery::new(cp2.clone(), 8 * k + 6, 8 * k + 6).unwrap();
            assert_eq!(upper_monotone(&q, q.default_horizon()).unwrap().0, 8 * k as i64 - 1);
        }
        let q = BoundQuery::new(SimplicialComplex::simplex(4).unwrap(), 4, 4).unwrap();
        assert!(upper_monotone(&q, 5).is_none());
    }

    #[test]
    fn lower_examples() {
        for k in 1..=4 {
            assert_eq!(lower_constructions(4, 4 * k).unwrap().0, 4 * k as i64 - 1);
        }
        assert_eq!(lower_constructions(3, 4).unwrap().0, 3);
        let (q, step) = lower_constructions(6, 14).unwrap();
        assert_eq!(q, 9);
        assert!(
            matches!(step, DerivationStep::BilinearLowerBound { ref construction, .. } if construction.starts_with("complex_poly_mult(5,9)"))
        );
        assert!(lower_constructions(5, 4).is_none());
    }

    #[test]
    fn bound_examples() {
        let c = diagonal(rp2_6().unwrap(), 8, 4);
        assert!(c.exact);
        assert_eq!(c.upper, Some(7));
        let c = diagonal(cp2_9().unwrap(), 15, 7);
        assert!(c.exact);
        assert_eq!(c.upper, Some(8));
        let c = diagonal(SimplicialComplex::simplex(3).unwrap(), 2, 2);
        assert_eq!((c.lower, c.upper, c.exact), (Some(1), Some(1), true));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_rp2(7).unwrap(), 3);
        assert_eq!(closed_form_cp2(15).unwrap(), 8);
        assert_eq!(closed_form_cp2(16).unwrap(), 15);
        assert!(closed_form_rp2(3).is_err());
        assert!(closed_form_cp2(6).is_err());
    }

    #[test]
    fn certificates_replay_and_tampering_is_caught() {
        let cert = diagonal(cp2_9().unwrap(), 14, 7);
        assert!(replay(&cert).unwrap().ok);
        let json = serde_json::to_string(&cert).unwrap();
        let back: BoundCertificate = serde_json::from_str(&json).unwrap();
        assert!(replay(&back).unwrap().ok);

        let mut bad = cert.clone();
        bad.upper = bad.upper.map(|u| u - 1);
        bad.exact = bad.lower == bad.upper;
        assert!(!replay(&bad).unwrap().ok);

        let mut bad = cert.clone();
        for step in &mut bad.derivation {
            if let DerivationStep::KneserColoringBound { c, .. } = step {
                *c = 0;
            }
        }
        assert!(!replay(&bad).unwrap().ok);

        let mut bad = cert;
        for step in &mut bad.derivation {
            if let DerivationStep::BilinearLowerBound { map, q, .. } = step {
                map.b += 1;
                *q += 1;
            }
        }
        assert!(!replay(&bad).unwrap().ok);
    }

    #[test]
    fn override_is_recorded() {
        let q = BoundQuery::new(SimplicialComplex::simplex_boundary(5).unwrap(), 3, 3).unwrap().with_c(Some(1));
        let cert = coindex_bounds(&q, 10).unwrap();
        assert!(matches!(
            cert.derivation[0],
            DerivationStep::KneserColoringBound { c_source: ColorSource::Override, .. }
        ));
        assert!(replay(&cert).unwrap().ok);
        assert!(coindex_bounds(&q, 2).is_err());
        assert!(BoundQuery::new(SimplicialComplex::simplex(3).unwrap(), 2, 3).is_err());
    }

    #[test]
    fn radon_rows_are_monotone_and_consistent() {
        let t = radon_table(4, 12).unwrap();
        for p in 1..=4 {
            for d in 1..=12 {
                let e = t.entry(p, d).unwrap();
                assert_eq!(matches!(e.cell, RadonCell::Empty), d <= p, "({p},{d})");
                if let (Some(lo), Some(hi)) = (e.certificate.lower, e.certificate.upper) {
                    assert!(lo <= hi);
                }
                assert_eq!(e.circled, d > p && ones_disjoint((d - p) as u64, p as u64));
            }
        }
        assert_eq!(t.entry(1, 4).unwrap().cell, RadonCell::Exact { value: 3 });
        assert_eq!(t.entry(3, 3).unwrap().cell, RadonCell::Empty);
        let csv = t.to_csv();
        assert!(csv.starts_with("p,1,2,3"));
        assert!(csv.lines().nth(1).unwrap().starts_with("1,,1,1,3"));
        assert!(t.to_ascii().lines().nth(2).unwrap().contains("1*"));
    }
}
