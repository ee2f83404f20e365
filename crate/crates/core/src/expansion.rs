//! Expansion moves: split a vertex `v` into an adjacent pair and, at the same
//! time, draw a diagonal across the face `τ(v)`. This undoes one
//! remove-contract step.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::duality::StrongInvolution;
use crate::edit::{face_sources, MapEditor};
use crate::polyhedron::{validate, Polyhedron, ValidationError};

/// One simultaneous vertex split and face diagonal.
///
/// The rotation of `vertex` is cut into two runs of consecutive neighbors:
/// the `arc_len` darts starting at rotation index `arc_start` stay with the
/// old vertex `a`, the rest move to the new vertex `b`. The diagonal joins
/// two non-consecutive boundary vertices of `τ(vertex)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExpansionMove {
    pub vertex: usize,
    pub arc_start: usize,
    pub arc_len: usize,
    pub diagonal: (usize, usize),
    /// `τ'(a)` is the half of `τ(vertex)` bounded by the dart running from
    /// `diagonal.0` to `diagonal.1`; otherwise `τ'(b)` is.
    pub a_takes_forward_side: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("invalid move: vertex {0} does not exist")]
    UnknownVertex(usize),
    #[error(
        "invalid move: arc of {len} darts at {start} does not leave two darts on each side of a degree-{degree} vertex"
    )]
    BadArc { start: usize, len: usize, degree: usize },
    #[error("invalid move: face {face} has length {len}, so it has no diagonal")]
    NoDiagonal { face: usize, len: usize },
    #[error("invalid move: ({0}, {1}) is not a diagonal of the face")]
    NotADiagonal(usize, usize),
    #[error("invalid move: result is not a polyhedron: {0}")]
    NotPolyhedron(ValidationError),
    #[error("invalid move: no strong involution extends to the result")]
    NotStronglyInvolutive,
}

#[derive(Clone, Debug)]
pub struct Expanded {
    pub polyhedron: Polyhedron,
    pub involution: StrongInvolution,
    /// The split halves: `a` keeps the old id, `b` is the new last vertex.
    pub a: usize,
    pub b: usize,
    /// Edge ids of the new `(a, b)` edge and of the diagonal.
    pub split_edge: usize,
    pub diagonal_edge: usize,
}

/// Applies `m` and carries `τ` over: every untouched vertex keeps its face
/// and `a`, `b` receive the two halves of `τ(vertex)` as `m` prescribes.
pub fn expand_step(p: &Polyhedron, tau: &StrongInvolution, m: &ExpansionMove) -> Result<Expanded, ExpansionError> {
    let v = m.vertex;
    if v >= p.vertex_count() {
        return Err(ExpansionError::UnknownVertex(v));
    }
    let face = tau.face_of(v);
    let walk = p.faces().walk(face).to_vec();
    let k = walk.len();
    if k < 4 {
        return Err(ExpansionError::NoDiagonal { face, len: k });
    }
    let degree = p.degree(v);
    if m.arc_len < 2 || m.arc_len + 2 > degree || m.arc_start >= degree {
        return Err(ExpansionError::BadArc { start: m.arc_start, len: m.arc_len, degree });
    }
    let boundary = p.face_boundary(face);
    let (x, y) = m.diagonal;
    let (Some(ix), Some(iy)) = (boundary.iter().position(|&u| u == x), boundary.iter().position(|&u| u == y)) else {
        return Err(ExpansionError::NotADiagonal(x, y));
    };
    let gap = (iy + k - ix) % k;
    if gap < 2 || gap > k - 2 {
        return Err(ExpansionError::NotADiagonal(x, y));
    }

    let mut ed = MapEditor::new(p.map());
    let (b, _) = ed.split(v, m.arc_start, m.arc_len);
    ed.insert_edge(walk[ix], walk[iy]);
    let edited = ed.finish();
    let e = p.edge_count();
    let (split_edge, diagonal_edge) = (e, e + 1);
    let sources = face_sources(&edited, |d| p.faces().face_of(d));
    let polyhedron = validate(edited.map).map_err(ExpansionError::NotPolyhedron)?;

    let mut face_image: HashMap<usize, usize> = HashMap::new();
    for (g, src) in sources.iter().enumerate() {
        if let [single] = src.as_slice() {
            if *single != face {
                face_image.insert(*single, g);
            }
        }
    }
    let forward = polyhedron.faces().face_of(2 * diagonal_edge);
    let backward = polyhedron.faces().face_of(2 * diagonal_edge + 1);

    let mut images = vec![usize::MAX; polyhedron.vertex_count()];
    for u in 0..p.vertex_count() {
        if u != v {
            images[u] = face_image[&tau.face_of(u)];
        }
    }
    let (fa, fb) = if m.a_takes_forward_side { (forward, backward) } else { (backward, forward) };
    images[v] = fa;
    images[b] = fb;
    let involution = StrongInvolution::from_images(&polyhedron, images).ok_or(ExpansionError::NotStronglyInvolutive)?;
    Ok(Expanded { polyhedron, involution, a: v, b, split_edge, diagonal_edge })
}

/// Every well-formed move, whether or not it succeeds.
pub fn candidate_moves(p: &Polyhedron, tau: &StrongInvolution) -> Vec<ExpansionMove> {
    let mut out = Vec::new();
    for v in 0..p.vertex_count() {
        let degree = p.degree(v);
        let face = tau.face_of(v);
        let boundary = p.face_boundary(face);
        let k = boundary.len();
        if degree < 4 || k < 4 {
            continue;
        }
        // unordered arc partitions: take the side containing index 0
        for start in 0..degree {
            for len in 2..=degree - 2 {
                if start != 0 && start + len <= degree {
                    continue;
                }
                for i in 0..k {
                    for j in i + 2..k {
                        if i == 0 && j == k - 1 {
                            continue;
                        }
                        for a_takes_forward_side in [true, false] {
                            out.push(ExpansionMove {
                                vertex: v,
                                arc_start: start,
                                arc_len: len,
                                diagonal: (boundary[i], boundary[j]),
                                a_takes_forward_side,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Moves whose result validates as a strongly involutive polyhedron.
pub fn enumerate_expansions(p: &Polyhedron, tau: &StrongInvolution) -> Vec<ExpansionMove> {
    candidate_moves(p, tau).into_iter().filter(|m| expand_step(p, tau, m).is_ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::strong_involution;
    use crate::polyhedron::{are_isomorphic, wheel};
    use crate::reduction::{find_reducible_edges, reduce_step};

    #[test]
    fn k4_has_no_expansions() {
        let k4 = wheel(3).unwrap();
        let tau = strong_involution(&k4).unwrap();
        assert!(candidate_moves(&k4, &tau).is_empty());
        assert!(enumerate_expansions(&k4, &tau).is_empty());
    }

    #[test]
    fn wheel5_expansions_round_trip() {
        let w5 = wheel(5).unwrap();
        let tau = strong_involution(&w5).unwrap();
        let moves = enumerate_expansions(&w5, &tau);
        assert!(!moves.is_empty());
        for m in &moves {
            let x = expand_step(&w5, &tau, m).unwrap();
            let q = &x.polyhedron;
            assert_eq!((q.vertex_count(), q.edge_count(), q.face_count()), (7, 12, 7));
            let ab = q.edge_between(x.a, x.b).unwrap();
            assert!(find_reducible_edges(q, &x.involution).contains(&ab));
            let back = reduce_step(q, &x.involution, ab).unwrap();
            assert!(are_isomorphic(&back.polyhedron, &w5));
        }
    }

    #[test]
    fn triangle_target_is_rejected() {
        let w5 = wheel(5).unwrap();
        let tau = strong_involution(&w5).unwrap();
        // rim vertices are sent to triangles
        let m = ExpansionMove { vertex: 1, arc_start: 0, arc_len: 2, diagonal: (0, 3), a_takes_forward_side: true };
        assert!(matches!(expand_step(&w5, &tau, &m), Err(ExpansionError::NoDiagonal { len: 3, .. })));
        let m = ExpansionMove { vertex: 0, arc_start: 0, arc_len: 1, diagonal: (1, 3), a_takes_forward_side: true };
        assert!(matches!(expand_step(&w5, &tau, &m), Err(ExpansionError::BadArc { .. })));
    }

    #[test]
    fn non_diagonal_is_rejected() {
        let w5 = wheel(5).unwrap();
        let tau = strong_involution(&w5).unwrap();
        let m = ExpansionMove { vertex: 0, arc_start: 0, arc_len: 2, diagonal: (1, 2), a_takes_forward_side: true };
        assert_eq!(expand_step(&w5, &tau, &m).unwrap_err(), ExpansionError::NotADiagonal(1, 2));
    }
}
