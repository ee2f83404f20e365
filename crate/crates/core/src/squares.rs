//! The graph of squares: one vertex per vertex, edge and face of a
//! polyhedron, joined by incidence. Its faces are the quadrilaterals
//! `(v, a, f, b)` where `a`, `b` are the edges at `v` on face `f`.
//!
//! A strong involution swaps vertex cells with face cells and permutes edge
//! cells, which gives an automorphism of this graph with no fixed cell.

use crate::duality::{tau_edge, StrongInvolution};
use crate::planar_map::edge_of;
use crate::polyhedron::Polyhedron;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Vertex(usize),
    Edge(usize),
    Face(usize),
}

#[derive(Clone, Debug)]
pub struct SquareGraph {
    pub polyhedron: Polyhedron,
    /// `(V, E, F)` of the source.
    pub source_counts: (usize, usize, usize),
}

impl SquareGraph {
    pub fn cell(&self, x: usize) -> Cell {
        let (v, e, _) = self.source_counts;
        if x < v {
            Cell::Vertex(x)
        } else if x < v + e {
            Cell::Edge(x - v)
        } else {
            Cell::Face(x - v - e)
        }
    }

    pub fn tag(&self, cell: Cell) -> usize {
        let (v, e, _) = self.source_counts;
        match cell {
            Cell::Vertex(i) => i,
            Cell::Edge(i) => v + i,
            Cell::Face(i) => v + e + i,
        }
    }
}

pub fn graph_of_squares(p: &Polyhedron) -> SquareGraph {
    let (nv, ne) = (p.vertex_count(), p.edge_count());
    let map = p.map();
    let faces = p.faces();
    let face_tag = |d| nv + ne + faces.face_of(d);
    let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(nv + ne + p.face_count());
    for v in 0..nv {
        rotations.push(map.rotation(v).iter().map(|&d| nv + edge_of(d)).collect());
    }
    for e in 0..ne {
        let (u, w) = map.edge_endpoints(e);
        // faces lie to the right of their darts
        rotations.push(vec![w, face_tag(2 * e + 1), u, face_tag(2 * e)]);
    }
    for f in 0..faces.len() {
        rotations.push(faces.walk(f).iter().rev().map(|&d| nv + edge_of(d)).collect());
    }
    let polyhedron =
        Polyhedron::from_rotations(&rotations).expect("the graph of squares of a polyhedron is a polyhedron");
    SquareGraph { polyhedron, source_counts: (nv, ne, p.face_count()) }
}

/// A permutation of the vertices of a [`SquareGraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMap(pub Vec<usize>);

impl CellMap {
    pub fn identity(s: &SquareGraph) -> Self {
        Self((0..s.polyhedron.vertex_count()).collect())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn is_involution(&self) -> bool {
        (0..self.0.len()).all(|x| self.0[self.0[x]] == x)
    }

    pub fn is_automorphism(&self, s: &SquareGraph) -> bool {
        let q = &s.polyhedron;
        let n = q.vertex_count();
        if self.0.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in &self.0 {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        q.edges().all(|(x, y)| q.edge_between(self.0[x], self.0[y]).is_some())
    }
}

pub fn induced_cell_map(p: &Polyhedron, tau: &StrongInvolution) -> CellMap {
    let (nv, ne) = (p.vertex_count(), p.edge_count());
    let mut images = Vec::with_capacity(nv + ne + p.face_count());
    images.extend((0..nv).map(|v| nv + ne + tau.face_of(v)));
    images.extend((0..ne).map(|e| nv + tau_edge(p, tau, e)));
    images.extend((0..p.face_count()).map(|f| tau.vertex_of(f)));
    CellMap(images)
}

/// No vertex, edge or face of `s` is mapped to itself by `m`.
pub fn is_fixed_point_free(s: &SquareGraph, m: &CellMap) -> bool {
    let q = &s.polyhedron;
    if (0..q.vertex_count()).any(|x| m.apply(x) == x) {
        return false;
    }
    if q.edges().any(|(x, y)| m.apply(x) == y && m.apply(y) == x) {
        return false;
    }
    (0..q.face_count()).all(|f| {
        let mut image: Vec<usize> = q.faces().vertex_set(f).iter().map(|&x| m.apply(x)).collect();
        image.sort_unstable();
        image != q.faces().vertex_set(f)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::strong_involution;
    use crate::polyhedron::wheel;

    fn check(p: &Polyhedron, counts: (usize, usize, usize)) -> SquareGraph {
        let s = graph_of_squares(p);
        let q = &s.polyhedron;
        assert_eq!((q.vertex_count(), q.edge_count(), q.face_count()), counts);
        assert!(q.faces().lengths().all(|k| k == 4));
        for (x, y) in q.edges() {
            let pair = (s.cell(x), s.cell(y));
            assert!(matches!(
                pair,
                (Cell::Vertex(_), Cell::Edge(_))
                    | (Cell::Edge(_), Cell::Vertex(_))
                    | (Cell::Edge(_), Cell::Face(_))
                    | (Cell::Face(_), Cell::Edge(_))
            ));
        }
        s
    }

    #[test]
    fn k4_squares() {
        let k4 = wheel(3).unwrap();
        let s = check(&k4, (14, 24, 12));
        let tau = strong_involution(&k4).unwrap();
        let m = induced_cell_map(&k4, &tau);
        assert!(m.is_automorphism(&s));
        assert!(m.is_involution());
        assert!(is_fixed_point_free(&s, &m));
        for v in 0..4 {
            assert!(matches!(s.cell(m.apply(s.tag(Cell::Vertex(v)))), Cell::Face(_)));
        }
        let id = CellMap::identity(&s);
        assert!(id.is_automorphism(&s));
        assert!(!is_fixed_point_free(&s, &id));
    }

    #[test]
    fn wheel5_squares() {
        let w5 = wheel(5).unwrap();
        let s = check(&w5, (22, 40, 20));
        let tau = strong_involution(&w5).unwrap();
        let m = induced_cell_map(&w5, &tau);
        assert!(m.is_automorphism(&s) && m.is_involution() && is_fixed_point_free(&s, &m));
    }

    #[test]
    fn non_involutive_wheel_squares() {
        check(&wheel(4).unwrap(), (18, 32, 16));
    }
}
