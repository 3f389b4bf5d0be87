//! The graph of torus-invariant curves and the exhaustive decomposition
//! oracle.
//!
//! The space is the torus-equivariant model of the six-point blowup: P^3
//! blown up at the three coordinate points `x_1, x_2, x_3` and then at the
//! three points `x_i'` where the proper transform of the axis through `x_0`
//! and `x_i` meets the i-th exceptional plane. Curve classes here use the
//! seven-element basis `{h, e_1, e_2, e_3, e_1', e_2', e_3'}`; the index
//! map `e_i -> e_{2i-1}`, `e_i' -> e_{2i}` identifies it with the lattice
//! of [`crate::lattice::CurveClassX`].
//!
//! The invariant curves form a fixed 24-edge graph (shipped as a versioned
//! data file and validated by the test suite). Every effective curve whose
//! image is torus-invariant decomposes as a multiset of its edges, so
//! enumerating all multiplicity assignments with a given class-weighted sum
//! is an exhaustive oracle: for the triple-point configuration it confirms
//! that the only connected decomposition of
//! `sum_i d_i (h - e_i - e_i')` is the central one, with multiplicities
//! exactly `(d_1, d_2, d_3)`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::ToricError;
use crate::lattice::CurveClassX;

/// Curve class `h*h + sum_i e_i e_i + sum_i ep_i e_i'` in the toric basis
/// (all coefficients signed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ToricCurveClass {
    pub h: i64,
    pub e: [i64; 3],
    pub ep: [i64; 3],
}

impl ToricCurveClass {
    pub const ZERO: ToricCurveClass = ToricCurveClass {
        h: 0,
        e: [0; 3],
        ep: [0; 3],
    };

    pub fn new(h: i64, e: [i64; 3], ep: [i64; 3]) -> Self {
        ToricCurveClass { h, e, ep }
    }

    /// The class `C_i = h - e_i - e_i'` of the i-th central component,
    /// `i` 1-based.
    pub fn central_component(i: usize) -> Self {
        assert!((1..=3).contains(&i));
        let mut class = ToricCurveClass {
            h: 1,
            ..ToricCurveClass::ZERO
        };
        class.e[i - 1] = -1;
        class.ep[i - 1] = -1;
        class
    }

    /// The class `sum_i d_i (h - e_i - e_i')` of the full configuration.
    pub fn vertex_target(d1: u64, d2: u64, d3: u64) -> Self {
        let d = [d1 as i64, d2 as i64, d3 as i64];
        ToricCurveClass {
            h: d.iter().sum(),
            e: [-d[0], -d[1], -d[2]],
            ep: [-d[0], -d[1], -d[2]],
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ToricCurveClass {
            h: self.h + other.h,
            e: std::array::from_fn(|i| self.e[i] + other.e[i]),
            ep: std::array::from_fn(|i| self.ep[i] + other.ep[i]),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        ToricCurveClass {
            h: self.h * k,
            e: self.e.map(|x| x * k),
            ep: self.ep.map(|x| x * k),
        }
    }

    /// Interleaving map into the six-point-blowup lattice:
    /// `e_i -> e_{2i-1}`, `e_i' -> e_{2i}`.
    pub fn to_curve_class_x(&self) -> CurveClassX {
        CurveClassX::new(
            self.h,
            [
                self.e[0], self.ep[0], self.e[1], self.ep[1], self.e[2], self.ep[2],
            ],
        )
    }
}

impl fmt::Display for ToricCurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, coef: i64, name: &str| -> fmt::Result {
            if coef == 0 {
                return Ok(());
            }
            if first {
                if coef < 0 {
                    write!(f, "-")?;
                }
            } else if coef < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if coef.abs() != 1 {
                write!(f, "{}", coef.abs())?;
            }
            write!(f, "{name}")?;
            first = false;
            Ok(())
        };
        term(f, self.h, "h")?;
        for i in 0..3 {
            term(f, self.e[i], &format!("e{}", i + 1))?;
        }
        for i in 0..3 {
            term(f, self.ep[i], &format!("e{}'", i + 1))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// One invariant curve: the two fixed points it joins and its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricEdge {
    pub ends: [usize; 2],
    pub class: ToricCurveClass,
}

/// The fixed graph of torus-invariant curves.
#[derive(Debug, Clone)]
pub struct ToricGraph {
    vertices: Vec<String>,
    edges: Vec<ToricEdge>,
    index: GraphIndex,
}

/// Edge inventory used by the enumeration: six h-carrying edges (three
/// central, three outer) and per corner one `e_i` edge, two `e_i - e_i'`
/// edges and three `e_i'` edges.
#[derive(Debug, Clone)]
struct GraphIndex {
    central: [usize; 3],
    /// Outer edges in the order (1,2), (1,3), (2,3).
    outer: [usize; 3],
    e_edge: [usize; 3],
    ee_edges: [[usize; 2]; 3],
    eprime_edges: [[usize; 3]; 3],
}

/// Corners touched by each outer edge, matching `GraphIndex::outer`.
const OUTER_CORNERS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

#[derive(Deserialize)]
struct RawGraph {
    #[allow(dead_code)]
    version: u32,
    #[allow(dead_code)]
    notes: Vec<String>,
    vertices: Vec<String>,
    edges: Vec<RawEdge>,
}

#[derive(Deserialize)]
struct RawEdge {
    ends: [String; 2],
    class: ToricCurveClass,
}

impl ToricGraph {
    fn from_json(text: &str) -> Result<Self, ToricError> {
        let raw: RawGraph =
            serde_json::from_str(text).map_err(|e| ToricError::BadGraphData(e.to_string()))?;
        let lookup = |name: &str| -> Result<usize, ToricError> {
            raw.vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| ToricError::BadGraphData(format!("unknown vertex {name:?}")))
        };
        let mut edges = Vec::with_capacity(raw.edges.len());
        for e in &raw.edges {
            edges.push(ToricEdge {
                ends: [lookup(&e.ends[0])?, lookup(&e.ends[1])?],
                class: e.class,
            });
        }
        let index = GraphIndex::build(&edges)?;
        Ok(ToricGraph {
            vertices: raw.vertices,
            edges,
            index,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[ToricEdge] {
        &self.edges
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    /// Edge ids of the three central components `C_1, C_2, C_3`.
    pub fn central_edges(&self) -> [usize; 3] {
        self.index.central
    }

    /// Connected components (as sorted edge-id lists) of the subgraph left
    /// after deleting every edge of pure exceptional class `e_i` or `e_i'`.
    /// These are the only places a connected curve with no such components
    /// can live.
    pub fn core_components(&self) -> Vec<Vec<usize>> {
        // Pure exceptional edges (classes e_i and e_i') have h = 0 and no
        // negative coefficient; the mixed e_i - e_i' edges survive the cut.
        let keep: Vec<usize> = (0..self.edges.len())
            .filter(|&i| {
                let class = &self.edges[i].class;
                !(class.h == 0 && class.e.iter().chain(&class.ep).all(|&x| x >= 0))
            })
            .collect();
        components_of(&keep, &self.edges, self.vertices.len())
    }
}

fn components_of(edge_ids: &[usize], edges: &[ToricEdge], n_vertices: usize) -> Vec<Vec<usize>> {
    let mut dsu = Dsu::new(n_vertices);
    for &i in edge_ids {
        dsu.union(edges[i].ends[0], edges[i].ends[1]);
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &i in edge_ids {
        by_root.entry(dsu.find(edges[i].ends[0])).or_default().push(i);
    }
    by_root.into_values().collect()
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

impl GraphIndex {
    fn build(edges: &[ToricEdge]) -> Result<Self, ToricError> {
        let find_all = |class: ToricCurveClass| -> Vec<usize> {
            (0..edges.len()).filter(|&i| edges[i].class == class).collect()
        };
        let find_one = |class: ToricCurveClass, what: &str| -> Result<usize, ToricError> {
            let found = find_all(class);
            if found.len() == 1 {
                Ok(found[0])
            } else {
                Err(ToricError::BadGraphData(format!(
                    "expected exactly one {what} edge, found {}",
                    found.len()
                )))
            }
        };

        if edges.len() != 24 {
            return Err(ToricError::BadGraphData(format!(
                "expected 24 edges, found {}",
                edges.len()
            )));
        }

        let central = [
            find_one(ToricCurveClass::central_component(1), "C_1")?,
            find_one(ToricCurveClass::central_component(2), "C_2")?,
            find_one(ToricCurveClass::central_component(3), "C_3")?,
        ];
        let outer_class = |i: usize, j: usize| {
            let mut e = [0i64; 3];
            e[i] = -1;
            e[j] = -1;
            ToricCurveClass::new(1, e, [0; 3])
        };
        let outer = [
            find_one(outer_class(0, 1), "h-e1-e2")?,
            find_one(outer_class(0, 2), "h-e1-e3")?,
            find_one(outer_class(1, 2), "h-e2-e3")?,
        ];

        let mut e_edge = [0usize; 3];
        let mut ee_edges = [[0usize; 2]; 3];
        let mut eprime_edges = [[0usize; 3]; 3];
        for i in 0..3 {
            let mut e = [0i64; 3];
            e[i] = 1;
            let mut ep = [0i64; 3];
            ep[i] = 1;
            let mut e_minus = [0i64; 3];
            e_minus[i] = -1;

            e_edge[i] = find_one(ToricCurveClass::new(0, e, [0; 3]), "e_i")?;
            let ee = find_all(ToricCurveClass::new(0, e, e_minus));
            let epr = find_all(ToricCurveClass::new(0, [0; 3], ep));
            if ee.len() != 2 || epr.len() != 3 {
                return Err(ToricError::BadGraphData(format!(
                    "corner {} has {} mixed and {} pure exceptional edges, expected 2 and 3",
                    i + 1,
                    ee.len(),
                    epr.len()
                )));
            }
            ee_edges[i] = [ee[0], ee[1]];
            eprime_edges[i] = [epr[0], epr[1], epr[2]];
        }

        Ok(GraphIndex {
            central,
            outer,
            e_edge,
            ee_edges,
            eprime_edges,
        })
    }
}

static GRAPH: OnceLock<ToricGraph> = OnceLock::new();

/// The fixed 24-edge graph of torus-invariant curves, loaded from the
/// versioned transcription shipped with the crate.
pub fn invariant_curve_graph() -> &'static ToricGraph {
    GRAPH.get_or_init(|| {
        ToricGraph::from_json(include_str!("../data/toric_graph.json"))
            .expect("bundled graph data is valid")
    })
}

/// A multiset of invariant curves: a multiplicity for each edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Decomposition {
    multiplicities: Vec<u64>,
}

impl Decomposition {
    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    pub fn multiplicity(&self, edge: usize) -> u64 {
        self.multiplicities[edge]
    }

    /// Edge ids with nonzero multiplicity.
    pub fn support(&self) -> Vec<usize> {
        (0..self.multiplicities.len())
            .filter(|&i| self.multiplicities[i] > 0)
            .collect()
    }

    /// Class-weighted sum of the support.
    pub fn total_class(&self, graph: &ToricGraph) -> ToricCurveClass {
        let mut total = ToricCurveClass::ZERO;
        for (i, &m) in self.multiplicities.iter().enumerate() {
            if m > 0 {
                total = total.add(&graph.edges()[i].class.scale(m as i64));
            }
        }
        total
    }

    /// Whether the support induces a connected subgraph (the empty support
    /// counts as connected).
    pub fn is_connected(&self, graph: &ToricGraph) -> bool {
        let support = self.support();
        let Some(&first) = support.first() else {
            return true;
        };
        let mut dsu = Dsu::new(graph.vertices().len());
        for &i in &support {
            dsu.union(graph.edges()[i].ends[0], graph.edges()[i].ends[1]);
        }
        let root = dsu.find(graph.edges()[first].ends[0]);
        support
            .iter()
            .all(|&i| dsu.find(graph.edges()[i].ends[0]) == root)
    }

    /// JSON view listing the supported edges with their endpoints, classes
    /// and multiplicities.
    pub fn to_json(&self, graph: &ToricGraph) -> serde_json::Value {
        let entries: Vec<_> = self
            .support()
            .into_iter()
            .map(|i| {
                let edge = &graph.edges()[i];
                serde_json::json!({
                    "edge": i,
                    "ends": [graph.vertex_name(edge.ends[0]), graph.vertex_name(edge.ends[1])],
                    "class": edge.class,
                    "multiplicity": self.multiplicities[i],
                })
            })
            .collect();
        serde_json::Value::Array(entries)
    }
}

/// All multiplicity assignments whose class-weighted edge sum equals
/// `target`, in canonical (lexicographic) order; with `connected_only`,
/// only those whose support is connected.
///
/// The search is complete: the `h` coefficient is carried only by the six
/// h-edges, which pins their total, and given those the two lattice
/// equations of each corner bound every remaining multiplicity exactly, so
/// all bounds are derived rather than budgeted.
pub fn enumerate_decompositions(
    graph: &ToricGraph,
    target: &ToricCurveClass,
    connected_only: bool,
) -> Result<Vec<Decomposition>, ToricError> {
    if target.h < 0 {
        return Err(ToricError::NegativeHDegree(target.h));
    }
    let idx = &graph.index;
    let d = target.h as u64;

    let mut results = Vec::new();
    let mut h_mults = [0u64; 6]; // central 1..3, then outer 12, 13, 23
    enumerate_compositions(d, 0, &mut h_mults, &mut |h_mults| {
        let central = &h_mults[..3];
        let outer = &h_mults[3..];

        // Per corner i the e_i equation reads
        //   m(e_i) + m(ee'_a) + m(ee'_b)
        //     = target.e[i] + m(C_i) + m(outer edges at corner i) =: t_i
        // and the e_i' equation
        //   m(e'_1) + m(e'_2) + m(e'_3)
        //     = target.ep[i] + m(C_i) + m(ee'_a) + m(ee'_b).
        let mut corner_solutions: [Vec<[u64; 6]>; 3] = Default::default();
        for i in 0..3 {
            let outer_sum: i64 = OUTER_CORNERS
                .iter()
                .zip(outer)
                .filter(|((a, b), _)| *a == i || *b == i)
                .map(|(_, &m)| m as i64)
                .sum();
            let t = target.e[i] + central[i] as i64 + outer_sum;
            if t < 0 {
                return;
            }
            let solutions = &mut corner_solutions[i];
            for ka in 0..=t as u64 {
                for kb in 0..=(t as u64 - ka) {
                    let me = t as u64 - ka - kb;
                    let s = target.ep[i] + central[i] as i64 + (ka + kb) as i64;
                    if s < 0 {
                        continue;
                    }
                    for x in 0..=s as u64 {
                        for y in 0..=(s as u64 - x) {
                            let z = s as u64 - x - y;
                            solutions.push([me, ka, kb, x, y, z]);
                        }
                    }
                }
            }
            if solutions.is_empty() {
                return;
            }
        }

        for s1 in &corner_solutions[0] {
            for s2 in &corner_solutions[1] {
                for s3 in &corner_solutions[2] {
                    let mut mult = vec![0u64; graph.edges().len()];
                    for i in 0..3 {
                        mult[idx.central[i]] = central[i];
                        mult[idx.outer[i]] = outer[i];
                    }
                    for (i, sol) in [s1, s2, s3].into_iter().enumerate() {
                        mult[idx.e_edge[i]] = sol[0];
                        mult[idx.ee_edges[i][0]] = sol[1];
                        mult[idx.ee_edges[i][1]] = sol[2];
                        for (slot, &m) in idx.eprime_edges[i].iter().zip(&sol[3..]) {
                            mult[*slot] = m;
                        }
                    }
                    results.push(Decomposition {
                        multiplicities: mult,
                    });
                }
            }
        }
    });

    debug_assert!(results
        .iter()
        .all(|dec| dec.total_class(graph) == *target));

    if connected_only {
        results.retain(|dec| dec.is_connected(graph));
    }
    results.sort();
    Ok(results)
}

fn enumerate_compositions(remaining: u64, slot: usize, parts: &mut [u64; 6], f: &mut impl FnMut(&[u64; 6])) {
    if slot == 5 {
        parts[5] = remaining;
        f(parts);
        return;
    }
    for v in 0..=remaining {
        parts[slot] = v;
        enumerate_compositions(remaining - v, slot + 1, parts, f);
    }
}

/// Outcome of the vertex-support check: all connected decompositions of
/// the configuration class, and whether the central one is the only one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportCertificate {
    pub degrees: [u64; 3],
    pub verified: bool,
    pub decompositions: Vec<Decomposition>,
}

impl SupportCertificate {
    pub fn to_json(&self, graph: &ToricGraph) -> serde_json::Value {
        serde_json::json!({
            "degrees": self.degrees,
            "verified": self.verified,
            "decomposition_count": self.decompositions.len(),
            "decompositions": self
                .decompositions
                .iter()
                .map(|d| d.to_json(graph))
                .collect::<Vec<_>>(),
        })
    }
}

/// Checks that the only connected decomposition of
/// `sum_i d_i (h - e_i - e_i')` into invariant curves is the central one
/// `{C_i: d_i}`. All degrees must be positive.
pub fn verify_vertex_support(d1: u64, d2: u64, d3: u64) -> Result<SupportCertificate, ToricError> {
    if d1 == 0 || d2 == 0 || d3 == 0 {
        return Err(ToricError::ZeroVertexDegree(d1, d2, d3));
    }
    let graph = invariant_curve_graph();
    let target = ToricCurveClass::vertex_target(d1, d2, d3);
    let decompositions = enumerate_decompositions(graph, &target, true)?;

    // Safety margin check on the derived bounds: no multiplicity comes
    // near the crude 4d budget.
    let cap = 4 * target.h as u64;
    assert!(
        decompositions
            .iter()
            .all(|dec| dec.multiplicities().iter().all(|&m| m < cap)),
        "a decomposition reached the safety budget"
    );

    let mut expected = vec![0u64; graph.edges().len()];
    let central = graph.central_edges();
    expected[central[0]] = d1;
    expected[central[1]] = d2;
    expected[central[2]] = d3;
    let expected = Decomposition {
        multiplicities: expected,
    };
    let verified = decompositions.len() == 1 && decompositions[0] == expected;
    Ok(SupportCertificate {
        degrees: [d1, d2, d3],
        verified,
        decompositions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph() -> &'static ToricGraph {
        invariant_curve_graph()
    }

    fn class_count(class: ToricCurveClass) -> usize {
        graph()
            .edges()
            .iter()
            .filter(|e| e.class == class)
            .count()
    }

    #[test]
    fn graph_shape() {
        let g = graph();
        assert_eq!(g.vertices().len(), 16);
        assert_eq!(g.edges().len(), 24);
        // Smooth toric threefold: every fixed point lies on three invariant
        // curves.
        let mut degree = vec![0usize; g.vertices().len()];
        for e in g.edges() {
            degree[e.ends[0]] += 1;
            degree[e.ends[1]] += 1;
        }
        assert!(degree.iter().all(|&d| d == 3), "degrees: {degree:?}");
    }

    #[test]
    fn edge_class_inventory() {
        for i in 1..=3 {
            assert_eq!(class_count(ToricCurveClass::central_component(i)), 1);
        }
        assert_eq!(class_count(ToricCurveClass::new(1, [-1, -1, 0], [0; 3])), 1);
        assert_eq!(class_count(ToricCurveClass::new(1, [-1, 0, -1], [0; 3])), 1);
        assert_eq!(class_count(ToricCurveClass::new(1, [0, -1, -1], [0; 3])), 1);
        for i in 0..3 {
            let mut e = [0i64; 3];
            e[i] = 1;
            let mut ep = [0i64; 3];
            ep[i] = 1;
            let mut em = [0i64; 3];
            em[i] = -1;
            assert_eq!(class_count(ToricCurveClass::new(0, e, [0; 3])), 1);
            assert_eq!(class_count(ToricCurveClass::new(0, [0; 3], ep)), 3);
            assert_eq!(class_count(ToricCurveClass::new(0, e, em)), 2);
        }
    }

    #[test]
    fn h_edges_have_two_negative_exceptional_terms() {
        for e in graph().edges() {
            if e.class.h > 0 {
                let negs = e
                    .class
                    .e
                    .iter()
                    .chain(&e.class.ep)
                    .filter(|&&x| x == -1)
                    .count();
                let others = e
                    .class
                    .e
                    .iter()
                    .chain(&e.class.ep)
                    .filter(|&&x| x != -1 && x != 0)
                    .count();
                assert_eq!(e.class.h, 1);
                assert_eq!(negs, 2, "bad h-edge class {}", e.class);
                assert_eq!(others, 0, "bad h-edge class {}", e.class);
            }
        }
    }

    #[test]
    fn central_components_share_one_endpoint() {
        let g = graph();
        let central = g.central_edges();
        let ends: Vec<[usize; 2]> = central.iter().map(|&i| g.edges()[i].ends).collect();
        let common: Vec<usize> = (0..g.vertices().len())
            .filter(|v| ends.iter().all(|e| e.contains(v)))
            .collect();
        assert_eq!(common.len(), 1);
        assert_eq!(g.vertex_name(common[0]), "center");
    }

    #[test]
    fn core_components_are_the_central_star_and_three_paths() {
        let g = graph();
        let comps = g.core_components();
        assert_eq!(comps.len(), 4);
        let classes_of = |edges: &[usize]| -> Vec<ToricCurveClass> {
            let mut cs: Vec<_> = edges.iter().map(|&i| g.edges()[i].class).collect();
            cs.sort_by_key(|c| (c.h, c.e, c.ep));
            cs
        };
        let central: Vec<_> = (1..=3).map(ToricCurveClass::central_component).collect();
        let mut found_central = 0;
        let mut found_paths = 0;
        for comp in &comps {
            let classes = classes_of(comp);
            if classes.len() == 3 && classes.iter().all(|c| central.contains(c)) {
                found_central += 1;
            } else {
                // A path: one outer edge h - e_i - e_j flanked by one
                // e_i - e_i' and one e_j - e_j' edge.
                assert_eq!(classes.len(), 3);
                let outer: Vec<_> = classes
                    .iter()
                    .filter(|c| c.h == 1)
                    .collect();
                assert_eq!(outer.len(), 1);
                let (i, j) = match (outer[0].e[0], outer[0].e[1], outer[0].e[2]) {
                    (-1, -1, 0) => (0, 1),
                    (-1, 0, -1) => (0, 2),
                    (0, -1, -1) => (1, 2),
                    _ => panic!("unexpected outer class {}", outer[0]),
                };
                for corner in [i, j] {
                    let mut e = [0i64; 3];
                    e[corner] = 1;
                    let mut em = [0i64; 3];
                    em[corner] = -1;
                    assert!(classes.contains(&ToricCurveClass::new(0, e, em)));
                }
                found_paths += 1;
            }
        }
        assert_eq!(found_central, 1);
        assert_eq!(found_paths, 3);
    }

    #[test]
    fn single_central_component_has_a_unique_decomposition() {
        let g = graph();
        let target = ToricCurveClass::central_component(1);
        let all = enumerate_decompositions(g, &target, false).unwrap();
        assert_eq!(all.len(), 1);
        let connected = enumerate_decompositions(g, &target, true).unwrap();
        assert_eq!(connected, all);
        assert_eq!(connected[0].multiplicity(g.central_edges()[0]), 1);
        assert_eq!(connected[0].support().len(), 1);
    }

    #[test]
    fn pure_second_exceptional_class_decomposes_edge_by_edge() {
        // e_1' is carried by exactly the three edges labelled with it.
        let g = graph();
        let target = ToricCurveClass::new(0, [0; 3], [1, 0, 0]);
        let all = enumerate_decompositions(g, &target, false).unwrap();
        assert_eq!(all.len(), 3);
        for dec in &all {
            let support = dec.support();
            assert_eq!(support.len(), 1);
            assert_eq!(g.edges()[support[0]].class, target);
            assert_eq!(dec.multiplicity(support[0]), 1);
        }
        let connected = enumerate_decompositions(g, &target, true).unwrap();
        assert_eq!(connected.len(), 3);
    }

    #[test]
    fn first_exceptional_class_has_composite_decompositions() {
        // Besides the edge labelled e_1 itself, e_1 also splits as
        // (e_1 - e_1') + e_1' in 2 x 3 ways; four of those pairs share a
        // vertex.
        let g = graph();
        let target = ToricCurveClass::new(0, [1, 0, 0], [0; 3]);
        let all = enumerate_decompositions(g, &target, false).unwrap();
        assert_eq!(all.len(), 7);
        let singletons = all.iter().filter(|d| d.support().len() == 1).count();
        let pairs = all.iter().filter(|d| d.support().len() == 2).count();
        assert_eq!((singletons, pairs), (1, 6));
        let connected = enumerate_decompositions(g, &target, true).unwrap();
        assert_eq!(connected.len(), 5);
    }

    #[test]
    fn mixed_exceptional_class_decomposes_edge_by_edge() {
        let g = graph();
        let target = ToricCurveClass::new(0, [1, 0, 0], [-1, 0, 0]);
        let all = enumerate_decompositions(g, &target, false).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|d| d.support().len() == 1));
    }

    #[test]
    fn outer_line_class_has_a_unique_decomposition() {
        let g = graph();
        let target = ToricCurveClass::new(1, [-1, -1, 0], [0; 3]);
        let all = enumerate_decompositions(g, &target, false).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].support().len(), 1);
    }

    #[test]
    fn negative_h_target_is_rejected() {
        let g = graph();
        let target = ToricCurveClass::new(-1, [0; 3], [0; 3]);
        assert_eq!(
            enumerate_decompositions(g, &target, false),
            Err(ToricError::NegativeHDegree(-1))
        );
    }

    #[test]
    fn results_are_sorted() {
        let g = graph();
        let target = ToricCurveClass::vertex_target(1, 1, 1);
        let all = enumerate_decompositions(g, &target, false).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn vertex_support_is_unique_and_central() {
        for (d1, d2, d3) in [(1, 1, 1), (2, 1, 1), (2, 2, 2), (3, 2, 1)] {
            let cert = verify_vertex_support(d1, d2, d3).unwrap();
            assert!(cert.verified, "degrees ({d1},{d2},{d3})");
            assert_eq!(cert.decompositions.len(), 1);
            let g = graph();
            let dec = &cert.decompositions[0];
            let central = g.central_edges();
            assert_eq!(dec.multiplicity(central[0]), d1);
            assert_eq!(dec.multiplicity(central[1]), d2);
            assert_eq!(dec.multiplicity(central[2]), d3);
            assert_eq!(dec.support().len(), 3);
        }
    }

    #[test]
    fn vertex_support_rejects_zero_degrees() {
        assert_eq!(
            verify_vertex_support(0, 1, 1),
            Err(ToricError::ZeroVertexDegree(0, 1, 1))
        );
    }

    #[test]
    fn triple_vertex_class_has_disconnected_decompositions_too() {
        // The class of the full configuration admits other decompositions,
        // but none of them are connected.
        let g = graph();
        let target = ToricCurveClass::vertex_target(1, 1, 1);
        let all = enumerate_decompositions(g, &target, false).unwrap();
        let connected = enumerate_decompositions(g, &target, true).unwrap();
        assert!(all.len() > connected.len(), "all = {}", all.len());
        assert_eq!(connected.len(), 1);
    }

    #[test]
    fn connected_decompositions_without_pure_exceptional_edges_stay_in_one_core_component() {
        let g = graph();
        let comps = g.core_components();
        for target in [
            ToricCurveClass::vertex_target(1, 1, 1),
            ToricCurveClass::vertex_target(2, 1, 1),
            ToricCurveClass::new(1, [-1, -1, 0], [0; 3]),
        ] {
            for dec in enumerate_decompositions(g, &target, true).unwrap() {
                let support = dec.support();
                let uses_pure = support.iter().any(|&i| {
                    let c = g.edges()[i].class;
                    c.h == 0 && c.e.iter().chain(&c.ep).all(|&x| x >= 0)
                });
                if !uses_pure {
                    assert!(
                        comps
                            .iter()
                            .any(|comp| support.iter().all(|e| comp.contains(e))),
                        "support {support:?} spans core components"
                    );
                }
            }
        }
    }

    #[test]
    fn interleaving_into_the_six_point_lattice() {
        assert_eq!(
            ToricCurveClass::central_component(1).to_curve_class_x(),
            CurveClassX::new(1, [-1, -1, 0, 0, 0, 0])
        );
        assert_eq!(
            ToricCurveClass::central_component(3).to_curve_class_x(),
            CurveClassX::new(1, [0, 0, 0, 0, -1, -1])
        );
        assert_eq!(
            ToricCurveClass::vertex_target(1, 2, 3).to_curve_class_x(),
            CurveClassX::new(6, [-1, -1, -2, -2, -3, -3])
        );
        assert!(ToricCurveClass::vertex_target(1, 2, 3)
            .to_curve_class_x()
            .is_balanced());
    }

    /// Independent brute force: depth-first over all 24 edges with sound
    /// per-type caps. The h coefficient bounds h-edges by d; the total
    /// exceptional mass (sum of all e and e' coefficients) of an h-edge is
    /// -2 and of a pure exceptional edge +1, so pure edges are bounded by
    /// mass(target) + 2d; mixed e_i - e_i' edges are bounded through the
    /// e_i' equation by |ep_i| + d + pure budget.
    fn brute_force(
        g: &ToricGraph,
        target: &ToricCurveClass,
    ) -> Vec<Vec<u64>> {
        let d = target.h.max(0) as u64;
        let mass: i64 = target.e.iter().chain(&target.ep).sum::<i64>() + 2 * target.h;
        let pure_budget = mass.max(0) as u64;
        let mixed_budget: u64 = target
            .ep
            .iter()
            .map(|x| x.unsigned_abs())
            .max()
            .unwrap_or(0)
            + d
            + pure_budget;
        let caps: Vec<u64> = g
            .edges()
            .iter()
            .map(|e| {
                if e.class.h > 0 {
                    d
                } else if e.class.ep.iter().any(|&x| x < 0) {
                    mixed_budget
                } else {
                    pure_budget
                }
            })
            .collect();

        let mut out = Vec::new();
        let mut mult = vec![0u64; g.edges().len()];
        fn rec(
            g: &ToricGraph,
            caps: &[u64],
            remaining: ToricCurveClass,
            edge: usize,
            mult: &mut Vec<u64>,
            out: &mut Vec<Vec<u64>>,
        ) {
            if edge == g.edges().len() {
                if remaining == ToricCurveClass::ZERO {
                    out.push(mult.clone());
                }
                return;
            }
            let class = g.edges()[edge].class;
            for m in 0..=caps[edge] {
                let rest = remaining.add(&class.scale(-(m as i64)));
                if rest.h < 0 {
                    break;
                }
                mult[edge] = m;
                rec(g, caps, rest, edge + 1, mult, out);
            }
            mult[edge] = 0;
        }
        rec(g, &caps, *target, 0, &mut mult, &mut out);
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_independent_brute_force() {
        let g = graph();
        for target in [
            ToricCurveClass::central_component(1),
            ToricCurveClass::new(0, [0; 3], [1, 0, 0]),
            ToricCurveClass::new(0, [1, 0, 0], [0; 3]),
            ToricCurveClass::new(0, [1, 0, 0], [-1, 0, 0]),
            ToricCurveClass::new(1, [-1, -1, 0], [0; 3]),
            ToricCurveClass::vertex_target(1, 1, 1),
            ToricCurveClass::new(1, [-1, 0, 0], [0, -1, 0]),
            ToricCurveClass::new(2, [-1, -1, -1], [-1, 0, 0]),
        ] {
            let ours: Vec<Vec<u64>> = enumerate_decompositions(g, &target, false)
                .unwrap()
                .into_iter()
                .map(|d| d.multiplicities)
                .collect();
            let brute = brute_force(g, &target);
            assert_eq!(ours, brute, "mismatch for target {target}");
        }
    }
}
