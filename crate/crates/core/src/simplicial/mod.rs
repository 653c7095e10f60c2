//! Abstract simplicial complexes on a ground set of at most 64 vertices.
//!
//! Faces are single-word bit masks and a complex is stored by its facets
//! (inclusion-maximal faces). A set is a face iff it is contained in some
//! facet. Vertices are 0-based throughout.

mod io;
mod validate;

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

pub use io::ComplexFile;

/// Largest supported ground set.
pub const MAX_VERTICES: usize = 64;

/// A subset of the ground set, one bit per vertex.
///
/// Ordered by cardinality first and then lexicographically by the sorted
/// vertex list, so `{0,1} < {0,2} < {1,2} < {0,1,2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_mask(mask: u64) -> Self {
        Face(mask)
    }

    /// Panics if a vertex is `>= 64`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut mask = 0u64;
        for v in vertices {
            assert!(v < MAX_VERTICES, "vertex {v} exceeds the 64-vertex limit");
            mask |= 1 << v;
        }
        Face(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension of the face; the empty face has dimension -1.
    pub const fn dim(self) -> i64 {
        self.len() as i64 - 1
    }

    pub const fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub const fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// Largest vertex, if any.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Shift every vertex up by `offset`.
    pub fn shifted(self, offset: usize) -> Face {
        debug_assert!(offset == 0 || self.0.leading_zeros() as usize >= offset);
        Face(if offset >= 64 { 0 } else { self.0 << offset })
    }

    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// All subsets of this face, in increasing mask order (starting with the empty face).
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(Face(cur))
        })
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            if self.0 == other.0 {
                return Ordering::Equal;
            }
            let diff = self.0 ^ other.0;
            let lowest = diff & diff.wrapping_neg();
            if self.0 & lowest != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the vertices of a [`Face`] in increasing order.
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Face counts by dimension; `counts[i]` is the number of `i`-dimensional faces.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FVector {
    pub counts: Vec<u64>,
}

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.counts.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }
}

/// A simplicial complex on the ground set `{0, .., n-1}`, stored by facets.
///
/// The facet list is kept inclusion-reduced and sorted in [`Face`] order. A
/// complex with no facets at all is the void complex (it has no faces, not
/// even the empty one); a complex whose only facet is the empty face is `{∅}`.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
    name: Option<String>,
    embed_dim: Option<usize>,
}

impl SimplicialComplex {
    /// Builds a complex from facet vertex lists, dropping non-maximal and
    /// duplicate entries.
    pub fn from_facets<F: AsRef<[usize]>>(n: usize, facets: &[F]) -> Result<Self> {
        check_ground_set(n)?;
        if facets.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let mut masks = Vec::with_capacity(facets.len());
        for (i, facet) in facets.iter().enumerate() {
            let mut mask = 0u64;
            for &v in facet.as_ref() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { facet: i, vertex: v, n });
                }
                if mask & (1 << v) != 0 {
                    return Err(Error::DuplicateVertex { facet: i, vertex: v });
                }
                mask |= 1 << v;
            }
            masks.push(Face(mask));
        }
        Ok(Self::from_faces_unchecked(n, masks))
    }

    /// Builds a complex from face masks that are already known to lie in the
    /// ground set. Faces need not be maximal.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        check_ground_set(n)?;
        let full = full_mask(n);
        let faces: Vec<Face> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|f| f.mask() & !full != 0) {
            let vertex = bad.difference(Face(full)).vertices().next().unwrap_or(0);
            return Err(Error::VertexOutOfRange { facet: 0, vertex, n });
        }
        Ok(Self::from_faces_unchecked(n, faces))
    }

    fn from_faces_unchecked(n: usize, mut faces: Vec<Face>) -> Self {
        faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.mask().cmp(&b.mask())));
        faces.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !kept.iter().any(|k| f.is_subset_of(*k)) {
                kept.push(f);
            }
        }
        kept.sort();
        SimplicialComplex { n, facets: kept, name: None, embed_dim: None }
    }

    /// The void complex on `n` vertices: no faces at all.
    pub fn void(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(SimplicialComplex { n, facets: Vec::new(), name: None, embed_dim: None })
    }

    /// The full simplex on `nv` vertices.
    pub fn simplex(nv: usize) -> Result<Self> {
        check_ground_set(nv)?;
        Ok(SimplicialComplex {
            n: nv,
            facets: vec![Face(full_mask(nv))],
            name: Some(format!("simplex({nv})")),
            embed_dim: None,
        })
    }

    /// The `k`-skeleton of the simplex on `nv` vertices: every subset of at
    /// most `k + 1` vertices.
    pub fn simplex_skeleton(nv: usize, k: usize) -> Result<Self> {
        check_ground_set(nv)?;
        if nv == 0 || k > nv - 1 {
            return Err(Error::SkeletonDimension { nv, k });
        }
        let facets = k_subsets(nv, k + 1);
        Ok(SimplicialComplex { n: nv, facets, name: Some(format!("skeleton({nv},{k})")), embed_dim: None })
    }

    /// The boundary of the simplex on `nv` vertices.
    pub fn simplex_boundary(nv: usize) -> Result<Self> {
        if nv < 2 {
            return Err(Error::SkeletonDimension { nv, k: 0 });
        }
        let mut c = Self::simplex_skeleton(nv, nv - 2)?;
        c.name = Some(format!("boundary({nv})"));
        Ok(c)
    }

    /// `n` isolated points.
    pub fn discrete(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        if n == 0 {
            return Err(Error::EmptyFacetList);
        }
        let mut c = Self::from_faces_unchecked(n, (0..n).map(|v| Face(1 << v)).collect());
        c.name = Some(format!("discrete({n})"));
        Ok(c)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_embed_dim(mut self, embed_dim: Option<usize>) -> Self {
        self.embed_dim = embed_dim;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn embed_dim(&self) -> Option<usize> {
        self.embed_dim
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// The full ground set as a face mask.
    pub fn ground_set(&self) -> Face {
        Face(full_mask(self.n))
    }

    /// Dimension of the complex; `None` for the void complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    pub fn is_face(&self, sigma: Face) -> bool {
        sigma.is_subset_of(self.ground_set()) && self.facets.iter().any(|f| sigma.is_subset_of(*f))
    }

    /// Faces grouped by cardinality: `levels[s]` holds the faces with `s`
    /// vertices, each level in canonical order. Empty for the void complex.
    pub fn face_levels(&self) -> Vec<Vec<Face>> {
        if self.is_void() {
            return Vec::new();
        }
        let mut seen: HashSet<Face> = HashSet::new();
        let mut levels: Vec<Vec<Face>> = Vec::new();
        for facet in &self.facets {
            for sub in facet.subsets() {
                if seen.insert(sub) {
                    let s = sub.len();
                    if levels.len() <= s {
                        levels.resize(s + 1, Vec::new());
                    }
                    levels[s].push(sub);
                }
            }
        }
        for level in &mut levels {
            level.sort();
        }
        levels
    }

    /// Every face including the empty one, in canonical order.
    pub fn faces(&self) -> Vec<Face> {
        self.face_levels().into_iter().flatten().collect()
    }

    pub fn f_vector(&self) -> FVector {
        let counts = self.face_levels().iter().skip(1).map(|l| l.len() as u64).collect();
        FVector { counts }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// Subsets that are not faces but all of whose proper subsets are.
    ///
    /// Breadth-first over cardinality: a candidate with `s` vertices is only
    /// examined when all of its `(s-1)`-subsets are faces. The full simplex
    /// has none; the void complex has exactly one, the empty set.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![Face::EMPTY];
        }
        let mut out = Vec::new();
        let mut level: Vec<Face> = vec![Face::EMPTY];
        while !level.is_empty() {
            let members: HashSet<Face> = level.iter().copied().collect();
            let mut next = Vec::new();
            for &f in &level {
                let start = f.max_vertex().map_or(0, |m| m + 1);
                for v in start..self.n {
                    let cand = f.with(v);
                    let all_faces = cand.vertices().all(|u| u == v || members.contains(&cand.without(u)));
                    if !all_faces {
                        continue;
                    }
                    if self.is_face(cand) {
                        next.push(cand);
                    } else {
                        out.push(cand);
                    }
                }
            }
            level = next;
        }
        out.sort();
        out
    }

    /// The join, with `other`'s vertices shifted up by `self.n()`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        let n = self.n + other.n;
        check_ground_set(n)?;
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                faces.push(a.union(b.shifted(self.n)));
            }
        }
        let mut c = Self::from_faces_unchecked(n, faces);
        if let (Some(a), Some(b)) = (&self.name, &other.name) {
            c.name = Some(format!("{a} * {b}"));
        }
        Ok(c)
    }

    /// The `copies`-fold join of `self` with itself.
    pub fn join_power(&self, copies: usize) -> Result<Self> {
        if copies == 0 {
            return Err(Error::InvalidParameters("join power needs at least one copy".into()));
        }
        let mut acc = self.clone();
        for _ in 1..copies {
            acc = acc.join(self)?;
        }
        if let Some(name) = &self.name {
            acc.name = Some(format!("join_power({name},{copies})"));
        }
        Ok(acc)
    }

    /// The deleted join: faces `σ×{1} ∪ τ×{2}` with `σ ∩ τ = ∅`. The second
    /// copy occupies vertices `n..2n`.
    pub fn deleted_join(&self) -> Result<Self> {
        let n = 2 * self.n;
        check_ground_set(n)?;
        let mut faces = Vec::new();
        for &f in &self.facets {
            for &g in &self.facets {
                let common = f.intersection(g);
                let only_f = f.difference(common);
                let only_g = g.difference(common);
                // each shared vertex goes to exactly one side in a maximal pair
                for left in common.subsets() {
                    let right = common.difference(left);
                    faces.push(only_f.union(left).union(only_g.union(right).shifted(self.n)));
                }
            }
        }
        let mut c = Self::from_faces_unchecked(n, faces);
        if let Some(name) = &self.name {
            c.name = Some(format!("deleted_join({name})"));
        }
        Ok(c)
    }

    /// True iff for every split of the ground set into two nonempty parts,
    /// exactly one part is a face.
    pub fn bipartition_property(&self) -> bool {
        if self.n < 2 {
            return true;
        }
        let all = self.ground_set();
        // at least one part is a face: every proper minimal nonface has a
        // face as complement (and the void complex fails outright)
        for nf in self.minimal_nonfaces() {
            if nf.is_empty() {
                return false;
            }
            if nf != all && !self.is_face(all.difference(nf)) {
                return false;
            }
        }
        // at most one part is a face: no facets F, G with a nonempty proper S
        // satisfying (all \ G) ⊆ S ⊆ F
        for &f in &self.facets {
            for &g in &self.facets {
                if f.union(g) != all {
                    continue;
                }
                let forced = all.difference(g);
                if forced == all {
                    continue;
                }
                if !forced.is_empty() || !f.is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

// `name` and `embed_dim` are metadata and do not take part in equality.
impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

fn check_ground_set(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices { n, max: MAX_VERTICES })
    } else {
        Ok(())
    }
}

/// All `size`-subsets of `{0, .., n-1}` in canonical order.
pub fn k_subsets(n: usize, size: usize) -> Vec<Face> {
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    if size == 0 {
        return vec![Face::EMPTY];
    }
    // Gosper's hack over masks of popcount `size`
    let limit = if n == 64 { None } else { Some(1u64 << n) };
    let mut x: u64 = full_mask(size);
    loop {
        out.push(Face(x));
        let c = x & x.wrapping_neg();
        let r = x.wrapping_add(c);
        if r == 0 {
            break;
        }
        x = (((r ^ x) >> 2) / c) | r;
        if limit.is_some_and(|l| x >= l) {
            break;
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_minimal_nonfaces(c: &SimplicialComplex) -> Vec<Face> {
        let mut out: Vec<Face> = (0..(1u64 << c.n()))
            .map(Face::from_mask)
            .filter(|&s| !c.is_face(s) && s.vertices().all(|v| c.is_face(s.without(v))))
            .collect();
        out.sort();
        out
    }

    fn brute_force_bipartition(c: &SimplicialComplex) -> bool {
        let all = c.ground_set().mask();
        (1..all).all(|s| c.is_face(Face(s)) != c.is_face(Face(all & !s)))
    }

    #[test]
    fn face_order_is_cardinality_then_lex() {
        let mut v = [
            Face::from_vertices([1, 2]),
            Face::from_vertices([0, 1, 2]),
            Face::from_vertices([0, 2]),
            Face::from_vertices([3]),
            Face::from_vertices([0, 1]),
        ];
        v.sort();
        let lists: Vec<Vec<usize>> = v.iter().map(|f| f.to_vec()).collect();
        assert_eq!(lists, vec![vec![3], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let f = Face::from_vertices([1, 4, 6]);
        let subs: Vec<Face> = f.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset_of(f)));
        assert_eq!(Face::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn tetrahedron_boundary() {
        let c = SimplicialComplex::from_facets(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!(c, SimplicialComplex::simplex_skeleton(4, 2).unwrap());
        assert_eq!(c.f_vector().counts, vec![4, 6, 4]);
        assert_eq!(c.euler_characteristic(), 2);
        assert_eq!(c.minimal_nonfaces(), vec![Face::from_vertices(0..4)]);
        assert!(!c.bipartition_property());
    }

    #[test]
    fn non_maximal_facets_are_dropped() {
        let c = SimplicialComplex::from_facets(4, &[vec![0, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(c.facets(), &[Face::from_vertices([0, 1, 2])]);
    }

    #[test]
    fn discrete_three_points() {
        let c = SimplicialComplex::from_facets(3, &[[0], [1], [2]]).unwrap();
        assert_eq!(c.f_vector().counts, vec![3]);
        assert_eq!(c.minimal_nonfaces().len(), 3);
    }

    #[test]
    fn from_facets_rejects_bad_input() {
        assert!(matches!(
            SimplicialComplex::from_facets(3, &[vec![0, 3]]),
            Err(Error::VertexOutOfRange { facet: 0, vertex: 3, n: 3 })
        ));
        assert!(matches!(
            SimplicialComplex::from_facets(3, &[vec![0], vec![1, 1]]),
            Err(Error::DuplicateVertex { facet: 1, vertex: 1 })
        ));
        assert!(matches!(SimplicialComplex::from_facets::<Vec<usize>>(3, &[]), Err(Error::EmptyFacetList)));
        assert!(matches!(SimplicialComplex::from_facets(65, &[vec![0]]), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn skeleton_examples() {
        let k5 = SimplicialComplex::simplex_skeleton(5, 1).unwrap();
        assert_eq!(k5.f_vector().counts, vec![5, 10]);
        assert_eq!(k5.minimal_nonfaces().len(), 10);
        assert!(k5.minimal_nonfaces().iter().all(|f| f.len() == 3));
        let full = SimplicialComplex::simplex_skeleton(4, 3).unwrap();
        assert_eq!(full.facets().len(), 1);
        assert!(full.minimal_nonfaces().is_empty());
        assert!(matches!(SimplicialComplex::simplex_skeleton(4, 4), Err(Error::SkeletonDimension { nv: 4, k: 4 })));
    }

    #[test]
    fn join_examples() {
        let three = SimplicialComplex::discrete(3).unwrap();
        let k33 = three.join(&three).unwrap();
        assert_eq!(k33.n(), 6);
        assert_eq!(k33.f_vector().counts, vec![6, 9]);
        let pt = SimplicialComplex::simplex(1).unwrap();
        let edge = pt.join(&pt).unwrap();
        assert_eq!(edge.facets(), &[Face::from_vertices([0, 1])]);
        let nonfaces = k33.minimal_nonfaces();
        assert_eq!(nonfaces.len(), 6);
        assert!(nonfaces.iter().all(|f| f.len() == 2));
        assert!(nonfaces.iter().all(|f| f.is_subset_of(Face(0b111)) || f.is_subset_of(Face(0b111000))));
    }

    #[test]
    fn join_power_of_three_points() {
        let three = SimplicialComplex::discrete(3).unwrap();
        let j = three.join_power(3).unwrap();
        assert_eq!(j.n(), 9);
        assert_eq!(j.facets().len(), 27);
        assert_eq!(j.minimal_nonfaces().len(), 9);
    }

    #[test]
    fn deleted_join_examples() {
        let edge = SimplicialComplex::simplex(2).unwrap();
        let square = edge.deleted_join().unwrap();
        assert_eq!(square.f_vector().counts, vec![4, 4]);
        let two = SimplicialComplex::discrete(2).unwrap();
        let dj = two.deleted_join().unwrap();
        assert_eq!(dj.f_vector().counts, vec![4, 2]);
        assert_eq!(dj.facets(), &[Face::from_vertices([0, 3]), Face::from_vertices([1, 2])]);
    }

    #[test]
    fn deleted_join_of_simplex_is_crosspolytope_boundary() {
        for nv in 1..=6usize {
            let dj = SimplicialComplex::simplex(nv).unwrap().deleted_join().unwrap();
            let expected: Vec<u64> = (0..nv).map(|k| (1u64 << (k + 1)) * binomial(nv as u64, k as u64 + 1)).collect();
            assert_eq!(dj.f_vector().counts, expected, "nv = {nv}");
        }
    }

    #[test]
    fn minimal_nonfaces_match_brute_force_on_samples() {
        let samples = [
            SimplicialComplex::simplex_skeleton(6, 2).unwrap(),
            SimplicialComplex::from_facets(7, &[vec![0, 1, 2], vec![2, 3], vec![3, 4, 5, 6], vec![1, 5]]).unwrap(),
            SimplicialComplex::from_facets(5, &[vec![0], vec![1, 2]]).unwrap(),
            SimplicialComplex::from_facets::<Vec<usize>>(3, &[vec![]]).unwrap(),
        ];
        for c in &samples {
            assert_eq!(c.minimal_nonfaces(), brute_force_minimal_nonfaces(c));
        }
    }

    #[test]
    fn void_and_empty_face_complexes() {
        let void = SimplicialComplex::void(3).unwrap();
        assert!(!void.is_face(Face::EMPTY));
        assert_eq!(void.minimal_nonfaces(), vec![Face::EMPTY]);
        assert!(void.f_vector().counts.is_empty());
        assert!(!void.bipartition_property());
        let empty = SimplicialComplex::from_facets::<Vec<usize>>(3, &[vec![]]).unwrap();
        assert!(empty.is_face(Face::EMPTY));
        assert_eq!(empty.minimal_nonfaces().len(), 3);
        assert_eq!(empty.euler_characteristic(), 0);
    }

    #[test]
    fn bipartition_matches_brute_force() {
        let samples = [
            SimplicialComplex::simplex_boundary(4).unwrap(),
            SimplicialComplex::simplex(3).unwrap(),
            SimplicialComplex::simplex(1).unwrap(),
            SimplicialComplex::discrete(2).unwrap(),
            SimplicialComplex::from_facets(3, &[vec![0, 1], vec![2]]).unwrap(),
            SimplicialComplex::from_facets(4, &[vec![0, 1, 2], vec![3]]).unwrap(),
            SimplicialComplex::from_facets::<Vec<usize>>(2, &[vec![]]).unwrap(),
        ];
        for c in &samples {
            assert_eq!(c.bipartition_property(), brute_force_bipartition(c), "{:?}", c.facets());
        }
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(6, 3).len(), 20);
        assert_eq!(k_subsets(64, 1).len(), 64);
        assert_eq!(k_subsets(3, 4).len(), 0);
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}
