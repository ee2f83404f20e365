//! Dart-level surgery on maps with provenance tracking.
//!
//! Edits are applied to a working copy of the dart rotations and compacted at
//! the end. Every dart of the result remembers the dart it came from, so faces
//! and involutions can be carried across an edit.

use crate::planar_map::{twin, CombinatorialMap, Dart};

#[derive(Clone, Debug)]
pub struct Edited {
    pub map: CombinatorialMap,
    /// Source dart of each new dart; `None` for darts created by the edit.
    pub dart_source: Vec<Option<Dart>>,
    /// New id of each original vertex (`None` if it was merged away).
    pub vertex_image: Vec<Option<usize>>,
}

pub struct MapEditor {
    rotations: Vec<Vec<Dart>>,
    removed_vertex: Vec<bool>,
    original_darts: usize,
    next_dart: Dart,
}

impl MapEditor {
    pub fn new(map: &CombinatorialMap) -> Self {
        let rotations = map.rotations().to_vec();
        let n = rotations.len();
        Self {
            rotations,
            removed_vertex: vec![false; n],
            original_darts: map.dart_count(),
            next_dart: map.dart_count(),
        }
    }

    fn locate(&self, d: Dart) -> (usize, usize) {
        for (v, rot) in self.rotations.iter().enumerate() {
            if let Some(i) = rot.iter().position(|&x| x == d) {
                return (v, i);
            }
        }
        panic!("dart {d} is not in the map");
    }

    /// Drops both darts of the edge owning `d`.
    pub fn remove_edge(&mut self, d: Dart) {
        for x in [d, twin(d)] {
            let (v, i) = self.locate(x);
            self.rotations[v].remove(i);
        }
    }

    /// Contracts the edge of dart `d` (`u -> v`). The merged vertex keeps the
    /// smaller id; its rotation is `u`'s after `d` followed by `v`'s after
    /// `twin(d)`. Returns the merged vertex.
    pub fn contract(&mut self, d: Dart) -> usize {
        let (u, iu) = self.locate(d);
        let (v, iv) = self.locate(twin(d));
        assert_ne!(u, v, "contracting a loop");
        let ru = &self.rotations[u];
        let rv = &self.rotations[v];
        let mut merged: Vec<Dart> = (1..ru.len()).map(|k| ru[(iu + k) % ru.len()]).collect();
        merged.extend((1..rv.len()).map(|k| rv[(iv + k) % rv.len()]));
        let (keep, drop) = (u.min(v), u.max(v));
        self.rotations[keep] = merged;
        self.rotations[drop].clear();
        self.removed_vertex[drop] = true;
        keep
    }

    /// Splits `v`: the arc of `len` darts starting at rotation index `start`
    /// stays on `v`, the rest moves to a new vertex, and the two are joined.
    /// Returns the new vertex and the new dart from `v` to it.
    pub fn split(&mut self, v: usize, start: usize, len: usize) -> (usize, Dart) {
        let rot = std::mem::take(&mut self.rotations[v]);
        let k = rot.len();
        assert!(len >= 1 && len < k, "both sides of a split need darts");
        let keep: Vec<Dart> = (0..len).map(|i| rot[(start + i) % k]).collect();
        let moved: Vec<Dart> = (len..k).map(|i| rot[(start + i) % k]).collect();
        let (to_new, to_old) = self.fresh_edge();
        let b = self.rotations.len();
        self.rotations[v] = keep;
        self.rotations[v].push(to_new);
        let mut rb = moved;
        rb.push(to_old);
        self.rotations.push(rb);
        self.removed_vertex.push(false);
        (b, to_new)
    }

    /// Adds an edge from the origin of `before_x` to the origin of `before_y`,
    /// inserting its darts immediately before those darts. With both darts on
    /// the walk of one face this draws a diagonal inside that face. Returns
    /// the dart pointing from x to y.
    pub fn insert_edge(&mut self, before_x: Dart, before_y: Dart) -> Dart {
        let (nx, ny) = self.fresh_edge();
        let (x, ix) = self.locate(before_x);
        self.rotations[x].insert(ix, nx);
        let (y, iy) = self.locate(before_y);
        self.rotations[y].insert(iy, ny);
        nx
    }

    fn fresh_edge(&mut self) -> (Dart, Dart) {
        let d = self.next_dart;
        self.next_dart += 2;
        (d, d + 1)
    }

    /// Renumbers vertices and darts compactly. Surviving edges keep their
    /// relative order; new edges come last.
    pub fn finish(self) -> Edited {
        let mut vertex_image = Vec::with_capacity(self.removed_vertex.len());
        let mut next = 0;
        for &gone in &self.removed_vertex {
            if gone {
                vertex_image.push(None);
            } else {
                vertex_image.push(Some(next));
                next += 1;
            }
        }
        let mut present = vec![false; self.next_dart];
        for rot in &self.rotations {
            for &d in rot {
                present[d] = true;
            }
        }
        let mut edge_image = vec![usize::MAX; self.next_dart / 2];
        let mut dart_source = Vec::new();
        let mut edges = 0;
        for e in 0..self.next_dart / 2 {
            if present[2 * e] {
                debug_assert!(present[2 * e + 1]);
                edge_image[e] = edges;
                edges += 1;
                for d in [2 * e, 2 * e + 1] {
                    dart_source.push((d < self.original_darts).then_some(d));
                }
            }
        }
        let rotations: Vec<Vec<Dart>> = self
            .rotations
            .into_iter()
            .zip(&self.removed_vertex)
            .filter(|(_, &gone)| !gone)
            .map(|(rot, _)| rot.into_iter().map(|d| 2 * edge_image[d / 2] + (d & 1)).collect())
            .collect();
        let map = CombinatorialMap::from_dart_rotations(rotations).expect("edits keep the dart structure valid");
        Edited { map, dart_source, vertex_image }
    }
}

/// For each face of `edited`, the set of original faces its surviving darts
/// came from (sorted, deduplicated).
pub fn face_sources(edited: &Edited, old_face_of: impl Fn(Dart) -> usize) -> Vec<Vec<usize>> {
    let faces = edited.map.trace_faces();
    (0..faces.len())
        .map(|f| {
            let mut src: Vec<usize> =
                faces.walk(f).iter().filter_map(|&d| edited.dart_source[d]).map(&old_face_of).collect();
            src.sort_unstable();
            src.dedup();
            src
        })
        .collect()
}
