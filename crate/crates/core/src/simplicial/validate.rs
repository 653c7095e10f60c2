//! Combinatorial manifold checks used to validate bundled triangulations.

use std::collections::HashMap;

use super::{Face, SimplicialComplex};

impl SimplicialComplex {
    /// All facets have the same dimension.
    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// The link of vertex `v`: faces `τ` with `v ∉ τ` and `τ ∪ {v}` a face.
    pub fn vertex_link(&self, v: usize) -> SimplicialComplex {
        let faces: Vec<Face> = self.facets.iter().filter(|f| f.contains(v)).map(|f| f.without(v)).collect();
        if faces.is_empty() {
            return SimplicialComplex::void(self.n).expect("same ground set");
        }
        SimplicialComplex::from_faces_unchecked(self.n, faces)
    }

    /// Pure, and every codimension-one face lies in exactly two facets.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        if self.is_void() || !self.is_pure() || self.facets[0].is_empty() {
            return false;
        }
        let mut ridges: HashMap<Face, usize> = HashMap::new();
        for f in &self.facets {
            for v in f.vertices() {
                *ridges.entry(f.without(v)).or_default() += 1;
            }
        }
        ridges.values().all(|&count| count == 2)
    }

    /// A closed combinatorial surface: pure of dimension 2, a closed
    /// pseudomanifold, and every vertex link is a single cycle.
    pub fn is_closed_surface(&self) -> bool {
        if self.dim() != Some(2) || !self.is_closed_pseudomanifold() {
            return false;
        }
        self.ground_set().vertices().all(|v| is_single_cycle(&self.vertex_link(v)))
    }
}

/// True iff the 1-dimensional complex is a single cycle on its used vertices.
fn is_single_cycle(link: &SimplicialComplex) -> bool {
    if link.dim() != Some(1) || !link.is_pure() {
        return false;
    }
    let used = link.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
    if used.len() < 3 || used.vertices().any(|v| link.facets.iter().filter(|f| f.contains(v)).count() != 2) {
        return false;
    }
    // walk the cycle from the smallest vertex
    let start = used.vertices().next().expect("nonempty");
    let mut seen = Face::EMPTY.with(start);
    let mut prev = start;
    let mut cur = link.facets.iter().find(|f| f.contains(start)).expect("degree 2").without(start);
    let mut cur_v = cur.vertices().next().expect("edge");
    while cur_v != start {
        seen = seen.with(cur_v);
        let next_edge = link.facets.iter().find(|f| f.contains(cur_v) && !f.contains(prev)).expect("degree 2");
        cur = next_edge.without(cur_v);
        prev = cur_v;
        cur_v = cur.vertices().next().expect("edge");
    }
    seen == used
}
