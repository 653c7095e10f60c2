//! Kneser graphs of minimal nonfaces, exact chromatic numbers with coloring
//! witnesses, and the decomposition of a complex into an intersection of
//! complexes indexed by the colors.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::simplicial::{Face, SimplicialComplex};

/// Default node limit for the exact coloring search.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Simple undirected graph on `0..n` with both list and matrix adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl Graph {
    /// Builds a graph from an edge list; loops and repeated edges are ignored.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut matrix = vec![false; n * n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range");
            if u != v {
                matrix[u * n + v] = true;
                matrix[v * n + u] = true;
            }
        }
        let neighbors = (0..n).map(|u| (0..n).filter(|&v| matrix[u * n + v]).collect()).collect();
        Graph { neighbors, matrix }
    }

    pub fn order(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.order() + v]
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.neighbors[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }
}

/// Graph whose vertices are faces (normally the minimal nonfaces of a
/// complex), with an edge between every two disjoint ones.
#[derive(Clone, Debug)]
pub struct KneserGraph {
    vertices: Vec<Face>,
    graph: Graph,
}

impl KneserGraph {
    pub fn from_faces(vertices: Vec<Face>) -> Self {
        let n = vertices.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if vertices[i].is_disjoint(vertices[j]) {
                    edges.push((i, j));
                }
            }
        }
        KneserGraph { graph: Graph::from_edges(n, edges), vertices }
    }

    pub fn vertices(&self) -> &[Face] {
        &self.vertices
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

/// Kneser graph on the minimal nonfaces of `complex`, in canonical order.
pub fn kneser_graph(complex: &SimplicialComplex) -> KneserGraph {
    KneserGraph::from_faces(complex.minimal_nonfaces())
}

/// A proper coloring: `assignment[v]` is the color of vertex `v`, in `0..num_colors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub num_colors: usize,
    pub assignment: Vec<usize>,
}

impl ColoringCertificate {
    /// Checks colors are in range, every color is used, and no edge is monochromatic.
    pub fn validate(&self, graph: &Graph) -> bool {
        if self.assignment.len() != graph.order() {
            return false;
        }
        if self.assignment.iter().any(|&c| c >= self.num_colors) {
            return false;
        }
        let mut used = vec![false; self.num_colors];
        for &c in &self.assignment {
            used[c] = true;
        }
        used.iter().all(|&u| u) && graph.edges().all(|(u, v)| self.assignment[u] != self.assignment[v])
    }
}

/// The exact search hit its node budget. `best` is the best coloring found,
/// so `lower <= χ <= best.num_colors`.
#[derive(Clone, Debug, Error)]
#[error("coloring search exceeded its node budget; chromatic number is in [{lower}, {}]", best.num_colors)]
pub struct BudgetExceeded {
    pub lower: usize,
    pub best: ColoringCertificate,
}

pub fn chromatic_number(graph: &Graph) -> std::result::Result<ColoringCertificate, BudgetExceeded> {
    chromatic_number_with_budget(graph, DEFAULT_NODE_BUDGET)
}

/// Exact chromatic number with a witness coloring.
///
/// A greedy clique gives the lower bound and DSATUR the first upper bound;
/// a DSATUR-ordered branch and bound closes the gap. Ties always go to the
/// lowest vertex index and the lowest color, so the certificate is
/// reproducible.
pub fn chromatic_number_with_budget(
    graph: &Graph,
    node_budget: u64,
) -> std::result::Result<ColoringCertificate, BudgetExceeded> {
    let n = graph.order();
    if n == 0 {
        return Ok(ColoringCertificate { num_colors: 0, assignment: Vec::new() });
    }
    let clique = greedy_clique(graph);
    let greedy = dsatur_greedy(graph);
    if greedy.num_colors == clique.len() {
        return Ok(greedy);
    }
    let mut search = Search::new(graph, clique.len(), greedy, node_budget);
    for (color, &v) in clique.iter().enumerate() {
        search.assign(v, color);
    }
    search.run(clique.len());
    if search.aborted {
        Err(BudgetExceeded { lower: clique.len(), best: search.best })
    } else {
        Ok(search.best)
    }
}

fn greedy_clique(graph: &Graph) -> Vec<usize> {
    let n = graph.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let mut best: Vec<usize> = Vec::new();
    for &start in &order {
        let mut clique = vec![start];
        for &v in &order {
            if v != start && clique.iter().all(|&u| graph.is_adjacent(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

fn dsatur_greedy(graph: &Graph) -> ColoringCertificate {
    let n = graph.order();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut num_colors = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v].is_none())
            .max_by_key(|&v| {
                let mut seen: Vec<usize> = graph.neighbors(v).iter().filter_map(|&u| color[u]).collect();
                seen.sort_unstable();
                seen.dedup();
                (seen.len(), graph.degree(v), std::cmp::Reverse(v))
            })
            .expect("uncolored vertex");
        let c = (0..).find(|&c| graph.neighbors(v).iter().all(|&u| color[u] != Some(c))).expect("some color is free");
        color[v] = Some(c);
        num_colors = num_colors.max(c + 1);
    }
    ColoringCertificate { num_colors, assignment: color.into_iter().map(|c| c.expect("colored")).collect() }
}

struct Search<'g> {
    graph: &'g Graph,
    lower: usize,
    color: Vec<Option<usize>>,
    // neighbor_colors[v][c]: colored neighbors of v that carry color c
    neighbor_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    colored: usize,
    best: ColoringCertificate,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl<'g> Search<'g> {
    fn new(graph: &'g Graph, lower: usize, best: ColoringCertificate, budget: u64) -> Self {
        let n = graph.order();
        let width = best.num_colors;
        Search {
            graph,
            lower,
            color: vec![None; n],
            neighbor_colors: vec![vec![0; width]; n],
            saturation: vec![0; n],
            colored: 0,
            best,
            nodes: 0,
            budget,
            aborted: false,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        self.colored += 1;
        for &u in self.graph.neighbors(v) {
            let slot = &mut self.neighbor_colors[u][c];
            *slot += 1;
            if *slot == 1 {
                self.saturation[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v].take().expect("assigned");
        self.colored -= 1;
        for &u in self.graph.neighbors(v) {
            let slot = &mut self.neighbor_colors[u][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        (0..self.graph.order())
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.graph.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex")
    }

    /// Extends the partial coloring that uses colors `0..used`.
    fn run(&mut self, used: usize) {
        if self.aborted || self.best.num_colors == self.lower {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        if self.colored == self.graph.order() {
            if used < self.best.num_colors {
                self.best = ColoringCertificate {
                    num_colors: used,
                    assignment: self.color.iter().map(|c| c.expect("complete")).collect(),
                };
            }
            return;
        }
        let v = self.pick();
        for c in 0..=used {
            if c + 1 >= self.best.num_colors {
                break;
            }
            if c < used && self.neighbor_colors[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            self.run(used.max(c + 1));
            self.unassign(v);
            if self.aborted || self.best.num_colors == self.lower {
                return;
            }
        }
    }
}

/// Σ written as `Σ_1 ∩ … ∩ Σ_c`, where the minimal nonfaces of `Σ_j` are the
/// minimal nonfaces of Σ that received color `j`.
#[derive(Clone, Debug)]
pub struct SarkariaDecomposition {
    pub subcomplexes: Vec<SimplicialComplex>,
}

pub fn sarkaria_decomposition(
    complex: &SimplicialComplex,
    cert: &ColoringCertificate,
) -> Result<SarkariaDecomposition> {
    let kg = kneser_graph(complex);
    if !cert.validate(kg.graph()) {
        return Err(Error::InvalidCertificate(format!(
            "not a proper {}-coloring of the {}-vertex Kneser graph",
            cert.num_colors,
            kg.vertices().len()
        )));
    }
    let subcomplexes = (0..cert.num_colors)
        .map(|j| {
            let class: Vec<Face> =
                kg.vertices().iter().zip(&cert.assignment).filter(|(_, &c)| c == j).map(|(f, _)| *f).collect();
            complex_with_minimal_nonfaces(complex.n(), &class)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SarkariaDecomposition { subcomplexes })
}

/// The complex on `n` vertices whose faces are the sets containing none of
/// `nonfaces`. Its facets are the complements of the minimal transversals.
pub fn complex_with_minimal_nonfaces(n: usize, nonfaces: &[Face]) -> Result<SimplicialComplex> {
    let ground = SimplicialComplex::simplex(n)?.ground_set();
    let transversals = minimal_transversals(nonfaces);
    if transversals.is_empty() {
        return SimplicialComplex::void(n);
    }
    SimplicialComplex::from_faces(n, transversals.into_iter().map(|t| ground.difference(t)))
}

fn minimal_transversals(edges: &[Face]) -> Vec<Face> {
    let mut current = vec![Face::EMPTY];
    for &e in edges {
        let mut next = Vec::new();
        for &t in &current {
            if !t.is_disjoint(e) {
                next.push(t);
            } else {
                next.extend(e.vertices().map(|v| t.with(v)));
            }
        }
        current = minimal_elements(next);
    }
    current
}

fn minimal_elements(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort();
    sets.dedup();
    let mut out: Vec<Face> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|m| m.is_subset_of(s)) {
            out.push(s);
        }
    }
    out
}

/// Checks that the pieces intersect to `complex` and that within each piece
/// the minimal nonfaces pairwise intersect.
pub fn verify_decomposition(complex: &SimplicialComplex, decomposition: &SarkariaDecomposition) -> bool {
    let mut all_nonfaces = Vec::new();
    for piece in &decomposition.subcomplexes {
        if piece.n() != complex.n() {
            return false;
        }
        let nonfaces = piece.minimal_nonfaces();
        for (i, a) in nonfaces.iter().enumerate() {
            if nonfaces[i + 1..].iter().any(|b| a.is_disjoint(*b)) {
                return false;
            }
        }
        all_nonfaces.extend(nonfaces);
    }
    // minimal nonfaces of an intersection are the minimal elements of the union
    minimal_elements(all_nonfaces) == complex.minimal_nonfaces()
}
