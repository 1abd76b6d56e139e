//! The dual graph of the triangulation induced by `H(r, d, i)`: one node per
//! cell, one edge per shared facet. For `d >= 2` two cells share a facet
//! exactly when their translation vectors differ by 1 in a single coordinate,
//! so the graph is built by probing unit neighbors in `O(cells * d)`. In
//! ambient dimension 1 all cells are collinear segments in one hyperplane and
//! a unit step is impossible there; neighbors differ by the coordinate swap
//! `e_0 - e_1` instead, and facets are single points. The quadratic
//! facet-dimension rule is kept as a cross-check for both cases.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::geometry::{Cell, CellDto, LatticeVector};
use crate::subdivision::Subdivision;

/// Dual graph of a subdivision: nodes are the cells in their deterministic
/// order, edges are unordered index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    r: usize,
    d: usize,
    i: usize,
    nodes: Vec<Cell>,
    edges: BTreeSet<(usize, usize)>,
}

impl DualGraph {
    pub fn params(&self) -> (usize, usize, usize) {
        (self.r, self.d, self.i)
    }

    pub fn nodes(&self) -> &[Cell] {
        &self.nodes
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == node || b == node)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut adjacency = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(node) = queue.pop_front() {
            for &next in &adjacency[node] {
                if !seen[next] {
                    seen[next] = true;
                    reached += 1;
                    queue.push_back(next);
                }
            }
        }
        reached == self.nodes.len()
    }

    /// Undirected DOT output, one node line per cell (labeled `v=(...);j=J`)
    /// and one line per edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph dual {\n");
        for (idx, cell) in self.nodes.iter().enumerate() {
            let _ = writeln!(
                out,
                "  n{idx} [label=\"v={};j={}\"];",
                cell.translation(),
                cell.level()
            );
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  n{a} -- n{b};");
        }
        out.push_str("}\n");
        out
    }

    /// `{"nodes":[{"v":[...],"j":J},...],"edges":[[a,b],...]}` with node
    /// indices referring to the deterministic cell order.
    pub fn to_json_string(&self) -> String {
        let dto = GraphDto {
            nodes: self.nodes.iter().map(CellDto::from).collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&dto).expect("graph serialization cannot fail")
    }
}

#[derive(Serialize)]
struct GraphDto {
    nodes: Vec<CellDto>,
    edges: Vec<[usize; 2]>,
}

/// Build the dual graph by the coordinate rule: for `d >= 2`, cells `(u, j1)`
/// and `(v, j2)` are adjacent iff `v = u + e_t` or `u = v + e_t` for some
/// `t`; for `d = 1` they are adjacent iff `v = u + (e_0 - e_1)` or the
/// reverse.
pub fn build_dual_graph(s: &Subdivision) -> DualGraph {
    let nodes: Vec<Cell> = s.cells().to_vec();
    let index: HashMap<&LatticeVector, usize> = nodes
        .iter()
        .enumerate()
        .map(|(idx, cell)| (cell.translation(), idx))
        .collect();
    let mut edges = BTreeSet::new();
    let mut connect = |index: &HashMap<&LatticeVector, usize>, idx: usize, v: LatticeVector| {
        if let Some(&other) = index.get(&v) {
            if other != idx {
                edges.insert((idx.min(other), idx.max(other)));
            }
        }
    };
    for (idx, cell) in nodes.iter().enumerate() {
        let v = cell.translation();
        if s.d() == 1 {
            connect(&index, idx, v.plus_unit(0).minus_unit(1));
            connect(&index, idx, v.minus_unit(0).plus_unit(1));
        } else {
            for t in 0..=s.d() {
                connect(&index, idx, v.plus_unit(t));
                connect(&index, idx, v.minus_unit(t));
            }
        }
    }
    DualGraph {
        r: s.r(),
        d: s.d(),
        i: s.i(),
        nodes,
        edges,
    }
}

/// Pair-by-pair comparison of the unit-translation rule against the geometric
/// rule "the intersection is a face of dimension `d - 1`".
#[derive(Debug, Clone)]
pub struct DualGraphCheck {
    pub pairs_checked: usize,
    pub mismatches: Vec<String>,
}

impl DualGraphCheck {
    pub fn agreed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn check_dual_graph(s: &Subdivision) -> DualGraphCheck {
    let d = s.d();
    let cells = s.cells();
    let mut pairs_checked = 0;
    let mut mismatches = Vec::new();
    for a in 0..cells.len() {
        for b in (a + 1)..cells.len() {
            pairs_checked += 1;
            let coordinate_rule = coordinate_adjacent(&cells[a], &cells[b]);
            let geometric_rule = cells[a]
                .intersect(&cells[b])
                .map(|f| f.dim() == Some(d - 1))
                .unwrap_or(false);
            if coordinate_rule != geometric_rule {
                mismatches.push(format!(
                    "{} vs {}: coordinate rule {coordinate_rule}, facet rule {geometric_rule}",
                    cells[a], cells[b]
                ));
            }
        }
    }
    DualGraphCheck {
        pairs_checked,
        mismatches,
    }
}

/// The coordinate adjacency rule: a single unit step for `d >= 2`, the
/// coordinate swap for `d = 1`.
fn coordinate_adjacent(a: &Cell, b: &Cell) -> bool {
    if a.ambient_dim() == 1 {
        let diff0 = &a.translation()[0] - &b.translation()[0];
        let diff1 = &a.translation()[1] - &b.translation()[1];
        return (diff0 == 1.into() || diff0 == (-1).into()) && diff1 == -diff0;
    }
    unit_translation_apart(a, b)
}

/// True iff the translations differ by exactly 1 in exactly one coordinate.
fn unit_translation_apart(a: &Cell, b: &Cell) -> bool {
    let mut unit_diffs = 0usize;
    for (x, y) in a
        .translation()
        .coords()
        .iter()
        .zip(b.translation().coords())
    {
        let diff = x - y;
        if diff == 1.into() || diff == (-1).into() {
            unit_diffs += 1;
            if unit_diffs > 1 {
                return false;
            }
        } else if diff != 0.into() {
            return false;
        }
    }
    unit_diffs == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_graph_for_the_doubled_triangle() {
        let s = Subdivision::build(2, 2, 1).unwrap();
        let graph = build_dual_graph(&s);
        assert_eq!(graph.node_count(), 4);
        assert_eq!(graph.edge_count(), 3);
        // The center cell ((0,0,0), j=2) is the last node; it meets all three.
        let center = 3;
        assert_eq!(graph.degree(center), 3);
        for other in 0..3 {
            assert_eq!(graph.degree(other), 1);
        }
        assert!(graph.is_connected());
    }

    #[test]
    fn single_cell_graph() {
        for (d, i) in [(1, 1), (3, 2), (4, 4)] {
            let s = Subdivision::build(1, d, i).unwrap();
            let graph = build_dual_graph(&s);
            assert_eq!(graph.node_count(), 1);
            assert_eq!(graph.edge_count(), 0);
            assert!(graph.is_connected());
            let check = check_dual_graph(&s);
            assert_eq!(check.pairs_checked, 0);
            assert!(check.agreed());
        }
    }

    #[test]
    fn doubled_octahedron_counts() {
        let s = Subdivision::build(2, 3, 2).unwrap();
        let graph = build_dual_graph(&s);
        assert_eq!(graph.node_count(), 14);
        assert_eq!(graph.edge_count(), 24);
        assert!(graph.is_connected());
    }

    #[test]
    fn collinear_segments_form_a_path() {
        // d = 1: H(r, 1, 1) is r consecutive segments on a line; the dual
        // graph is the path with r nodes even though no two translations
        // differ by a single unit step.
        for r in 2..=5usize {
            let s = Subdivision::build(r, 1, 1).unwrap();
            let graph = build_dual_graph(&s);
            assert_eq!(graph.node_count(), r);
            assert_eq!(graph.edge_count(), r - 1);
            assert!(graph.is_connected());
            let mut degrees: Vec<usize> =
                (0..graph.node_count()).map(|n| graph.degree(n)).collect();
            degrees.sort_unstable();
            assert_eq!(degrees[..2], [1, 1]);
            assert!(degrees[2..].iter().all(|&deg| deg == 2));
            assert!(check_dual_graph(&s).agreed());
        }
    }

    #[test]
    fn rules_agree_and_degrees_are_bounded() {
        for (r, d, i) in [
            (2, 1, 1),
            (3, 1, 1),
            (2, 2, 1),
            (3, 2, 1),
            (2, 3, 2),
            (3, 3, 2),
            (2, 4, 2),
        ] {
            let s = Subdivision::build(r, d, i).unwrap();
            let check = check_dual_graph(&s);
            assert!(
                check.agreed(),
                "rule mismatch for ({r},{d},{i}): {:?}",
                check.mismatches
            );
            let graph = build_dual_graph(&s);
            assert!(graph.is_connected(), "H({r},{d},{i}) dual graph connectivity");
            for node in 0..graph.node_count() {
                assert!(graph.degree(node) <= 2 * (d + 1));
            }
        }
    }

    #[test]
    fn probe_edges_match_the_quadratic_scan() {
        for (r, d, i) in [(3, 1, 1), (2, 2, 1), (2, 3, 2), (3, 2, 2)] {
            let s = Subdivision::build(r, d, i).unwrap();
            let graph = build_dual_graph(&s);
            let mut quadratic = BTreeSet::new();
            for a in 0..s.cells().len() {
                for b in (a + 1)..s.cells().len() {
                    if coordinate_adjacent(&s.cells()[a], &s.cells()[b]) {
                        quadratic.insert((a, b));
                    }
                }
            }
            assert_eq!(graph.edges, quadratic, "({r},{d},{i})");
        }
    }

    #[test]
    fn dot_output_shape() {
        let s = Subdivision::build(2, 2, 1).unwrap();
        let dot = build_dual_graph(&s).to_dot();
        assert_eq!(dot.lines().filter(|l| l.contains("label=")).count(), 4);
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 3);
        assert!(dot.starts_with("graph dual {"));
        assert!(dot.contains("n3 [label=\"v=(0,0,0);j=2\"];"));
    }

    #[test]
    fn json_output_shape() {
        let s = Subdivision::build(1, 2, 1).unwrap();
        let json = build_dual_graph(&s).to_json_string();
        assert_eq!(json, r#"{"nodes":[{"v":[0,0,0],"j":1}],"edges":[]}"#);

        let s = Subdivision::build(2, 3, 2).unwrap();
        let json = build_dual_graph(&s).to_json_string();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["nodes"].as_array().unwrap().len(), 14);
        assert_eq!(value["edges"].as_array().unwrap().len(), 24);
    }

    #[test]
    fn induced_subgraph_property() {
        // Every unit-coordinate-difference pair of cell translations is an
        // edge: the dual graph is the induced subgraph of the unit-distance
        // graph on the translation vectors.
        for (r, d, i) in [(2, 2, 1), (2, 3, 2), (3, 3, 1)] {
            let s = Subdivision::build(r, d, i).unwrap();
            let graph = build_dual_graph(&s);
            for a in 0..s.cells().len() {
                for b in (a + 1)..s.cells().len() {
                    let edge = graph.edges.contains(&(a, b));
                    let unit = unit_translation_apart(&s.cells()[a], &s.cells()[b]);
                    assert_eq!(edge, unit);
                }
            }
        }
    }
}
