//! Validated polyhedra: simple, spherical, 3-connected maps.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::planar_map::{build_map, twin, CombinatorialMap, Dart, FaceSet};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum ValidationError {
    #[error("map has a loop or a multiple edge")]
    NotSimple,
    #[error("map is not connected")]
    Disconnected,
    #[error("map is not embedded on the sphere (V - E + F != 2)")]
    NotGenusZero,
    #[error("polyhedra need at least four vertices")]
    TooSmall,
    #[error("graph has a cutting set of at most two vertices")]
    NotThreeConnected,
}

/// A simple, planar, 3-connected map with at least four vertices.
#[derive(Clone, Debug)]
pub struct Polyhedron {
    map: CombinatorialMap,
    faces: FaceSet,
    adjacency: Vec<Vec<usize>>,
    edge_lookup: HashMap<(usize, usize), usize>,
    face_lookup: HashMap<(usize, usize), usize>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Runs the validation gates in order: simple, connected, genus zero, size,
/// 3-connected.
pub fn validate(map: CombinatorialMap) -> Result<Polyhedron, ValidationError> {
    if !map.is_simple() {
        return Err(ValidationError::NotSimple);
    }
    if !map.is_connected() {
        return Err(ValidationError::Disconnected);
    }
    let faces = map.trace_faces();
    let euler = map.vertex_count() as i64 - map.edge_count() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(ValidationError::NotGenusZero);
    }
    if map.vertex_count() < 4 {
        return Err(ValidationError::TooSmall);
    }
    let adjacency = map.adjacency();
    if !crate::planar_map::is_three_connected_adjacency(&adjacency) {
        return Err(ValidationError::NotThreeConnected);
    }
    Ok(Polyhedron::assemble(map, faces, adjacency))
}

impl Polyhedron {
    fn assemble(map: CombinatorialMap, faces: FaceSet, adjacency: Vec<Vec<usize>>) -> Self {
        let edge_lookup = (0..map.edge_count())
            .map(|e| {
                let (a, b) = map.edge_endpoints(e);
                (key(a, b), e)
            })
            .collect();
        let face_lookup = (0..map.edge_count())
            .map(|e| {
                let (f, g) = faces.faces_of_edge(e);
                (key(f, g), e)
            })
            .collect();
        Self { map, faces, adjacency, edge_lookup, face_lookup }
    }

    pub fn from_rotations(rotations: &[Vec<usize>]) -> Result<Self, crate::Error> {
        Ok(validate(build_map(rotations)?)?)
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.map.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.map.degree(v)
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_lookup.get(&key(u, v)).copied()
    }

    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        self.map.edge_endpoints(e)
    }

    /// Edges as `(min, max)` vertex pairs, indexed by edge id.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.edge_count()).map(|e| {
            let (a, b) = self.edge_endpoints(e);
            key(a, b)
        })
    }

    pub fn edge_faces(&self, e: usize) -> (usize, usize) {
        self.faces.faces_of_edge(e)
    }

    /// The edge shared by faces `f` and `g`, if they are adjacent.
    pub fn face_between(&self, f: usize, g: usize) -> Option<usize> {
        self.face_lookup.get(&key(f, g)).copied()
    }

    pub fn face_boundary(&self, f: usize) -> &[usize] {
        self.faces.boundary(f)
    }

    pub fn face_len(&self, f: usize) -> usize {
        self.faces.walk(f).len()
    }

    pub fn face_contains(&self, f: usize, v: usize) -> bool {
        self.faces.contains(f, v)
    }

    /// Face whose sorted vertex set equals `vertices`.
    pub fn face_with_vertices(&self, vertices: &[usize]) -> Option<usize> {
        let mut want = vertices.to_vec();
        want.sort_unstable();
        (0..self.face_count()).find(|&f| self.faces.vertex_set(f) == want.as_slice())
    }

    /// Some face incident to `e` is a triangle.
    pub fn edge_on_triangle(&self, e: usize) -> bool {
        let (f, g) = self.edge_faces(e);
        self.face_len(f) == 3 || self.face_len(g) == 3
    }

    pub fn mirror(&self) -> Self {
        let map = self.map.mirror();
        let faces = map.trace_faces();
        Self::assemble(map, faces, self.adjacency.clone())
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(&self.map)
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        self.canonical_form().code
    }
}

/// The dual polyhedron together with the edge correspondence.
#[derive(Clone, Debug)]
pub struct Dual {
    pub polyhedron: Polyhedron,
    /// `edge_map[e]` is the dual edge crossing edge `e`.
    pub edge_map: Vec<usize>,
}

/// Builds the dual. Dual vertex `f` is face `f`; the dual dart `d*` leaves the
/// face of `d` across the edge of `d`, so dual edge ids coincide with primal
/// ones. The counterclockwise order around a face is its boundary walk
/// reversed.
pub fn dual(p: &Polyhedron) -> Dual {
    let rotations: Vec<Vec<Dart>> = p.faces.iter().map(|walk| walk.iter().rev().copied().collect()).collect();
    let map = CombinatorialMap::from_dart_rotations(rotations).expect("face walks partition the darts");
    let polyhedron = validate(map).expect("the dual of a polyhedron is a polyhedron");
    Dual { polyhedron, edge_map: (0..p.edge_count()).collect() }
}

/// Wheel on an `n`-cycle: hub `0`, rim `1..=n` in counterclockwise order.
pub fn wheel(n: usize) -> Result<Polyhedron, crate::Error> {
    if n < 3 {
        return Err(crate::Error::WheelTooSmall(n));
    }
    let mut rotations = vec![(1..=n).collect::<Vec<_>>()];
    for i in 1..=n {
        let prev = if i == 1 { n } else { i - 1 };
        let next = if i == n { 1 } else { i + 1 };
        rotations.push(vec![0, prev, next]);
    }
    Polyhedron::from_rotations(&rotations)
}

/// Rim length if `p` is a wheel.
pub fn wheel_rim(p: &Polyhedron) -> Option<usize> {
    let v = p.vertex_count();
    if p.edge_count() != 2 * (v - 1) {
        return None;
    }
    let hub = (0..v).find(|&h| p.degree(h) == v - 1)?;
    // the rim is G - hub; it is a cycle iff every rim vertex has degree 3
    // (connectivity follows from 3-connectivity of p)
    (0..v).filter(|&u| u != hub).all(|u| p.degree(u) == 3).then_some(v - 1)
}

pub fn is_wheel(p: &Polyhedron) -> bool {
    wheel_rim(p).is_some()
}

/// Every edge lies on a triangular face and has an endpoint of degree 3.
pub fn every_edge_triangular_with_cubic_end(p: &Polyhedron) -> bool {
    (0..p.edge_count()).all(|e| {
        let (a, b) = p.edge_endpoints(e);
        p.edge_on_triangle(e) && (p.degree(a) == 3 || p.degree(b) == 3)
    })
}

/// Relabeling- and reflection-invariant code of a map.
///
/// Layout: `[V, E, block_1, 0, block_2, 0, ...]` where block `i` lists the
/// labels (1-based) of the neighbors of vertex `i` in rotation order. The
/// blocks are themselves the rotations of the canonically labeled map.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalCode(pub Vec<u32>);

impl CanonicalCode {
    pub fn vertex_count(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }

    pub fn edge_count(&self) -> usize {
        self.0.get(1).copied().unwrap_or(0) as usize
    }

    /// Neighbor rotations of the canonically labeled map.
    pub fn rotations(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut block = Vec::new();
        for &x in self.0.iter().skip(2) {
            if x == 0 {
                out.push(std::mem::take(&mut block));
            } else {
                block.push(x as usize - 1);
            }
        }
        out
    }

    pub fn to_polyhedron(&self) -> Result<Polyhedron, crate::Error> {
        Polyhedron::from_rotations(&self.rotations())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    /// `labels[v]` is the canonical (0-based) label of vertex `v`.
    pub labels: Vec<usize>,
    /// The minimum was reached on the reflected orientation.
    pub mirrored: bool,
    /// The map is not isomorphic to its mirror image.
    pub chiral: bool,
}

/// Minimum breadth-first code over every starting dart and both
/// orientations.
pub fn canonical_form(map: &CombinatorialMap) -> CanonicalForm {
    let mut best: [Option<(Vec<u32>, Vec<usize>)>; 2] = [None, None];
    for (slot, mirrored) in [(0, false), (1, true)] {
        for start in 0..map.dart_count() {
            let current = best[slot].as_ref().map(|(c, _)| c.as_slice());
            if let Some(found) = traversal_code(map, start, mirrored, current) {
                best[slot] = Some(found);
            }
        }
    }
    let [Some(plain), Some(reflected)] = best else { unreachable!("maps have at least one dart") };
    let chiral = plain.0 != reflected.0;
    let mirrored = reflected.0 < plain.0;
    let (code, labels) = if mirrored { reflected } else { plain };
    CanonicalForm { code: CanonicalCode(code), labels, mirrored, chiral }
}

pub fn canonical_code(p: &Polyhedron) -> CanonicalCode {
    p.canonical_code()
}

pub fn are_isomorphic(p: &Polyhedron, q: &Polyhedron) -> bool {
    p.vertex_count() == q.vertex_count() && p.edge_count() == q.edge_count() && p.canonical_code() == q.canonical_code()
}

/// Breadth-first labeling from `start`. Returns `None` as soon as the code
/// exceeds `bound`.
fn traversal_code(
    map: &CombinatorialMap,
    start: Dart,
    mirrored: bool,
    bound: Option<&[u32]>,
) -> Option<(Vec<u32>, Vec<usize>)> {
    let n = map.vertex_count();
    let mut labels = vec![usize::MAX; n];
    let mut order: Vec<Dart> = Vec::with_capacity(n);
    let mut code: Vec<u32> = Vec::with_capacity(2 + map.dart_count() + n);
    let mut smaller = bound.is_none();

    let mut push = |code: &mut Vec<u32>, x: u32| -> bool {
        if !smaller {
            let b = bound.expect("bound present")[code.len()];
            if x < b {
                smaller = true;
            } else if x > b {
                return false;
            }
        }
        code.push(x);
        true
    };

    if !push(&mut code, n as u32) || !push(&mut code, map.edge_count() as u32) {
        return None;
    }
    labels[map.origin(start)] = 0;
    order.push(start);
    let mut k = 0;
    while k < order.len() {
        let entry = order[k];
        let v = map.origin(entry);
        let mut d = entry;
        for _ in 0..map.degree(v) {
            let w = map.target(d);
            if labels[w] == usize::MAX {
                labels[w] = order.len();
                order.push(twin(d));
            }
            if !push(&mut code, labels[w] as u32 + 1) {
                return None;
            }
            d = if mirrored { map.prev_around(d) } else { map.next_around(d) };
        }
        if !push(&mut code, 0) {
            return None;
        }
        k += 1;
    }
    // a disconnected map leaves vertices unlabeled; label them last
    for l in labels.iter_mut().filter(|l| **l == usize::MAX) {
        *l = order.len();
        order.push(usize::MAX);
    }
    if smaller {
        Some((code, labels))
    } else {
        // equal to the bound; keep the earlier witness
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Polyhedron {
        Polyhedron::from_rotations(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]).unwrap()
    }

    fn cube() -> Polyhedron {
        let adj: Vec<Vec<usize>> = (0..8).map(|v| (0..3).map(|b| v ^ (1 << b)).collect()).collect();
        Polyhedron::from_rotations(&crate::planar_map::embed_planar(&adj).unwrap()).unwrap()
    }

    /// Brute-force graph isomorphism over all vertex bijections.
    fn brute_isomorphic(p: &Polyhedron, q: &Polyhedron) -> bool {
        let n = p.vertex_count();
        if n != q.vertex_count() || p.edge_count() != q.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        fn go(k: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, p: &Polyhedron, q: &Polyhedron) -> bool {
            let n = perm.len();
            if k == n {
                return true;
            }
            for t in 0..n {
                if used[t] {
                    continue;
                }
                let ok = (0..k).all(|j| p.edge_between(j, k).is_some() == q.edge_between(perm[j], t).is_some());
                if ok {
                    used[t] = true;
                    perm[k] = t;
                    if go(k + 1, perm, used, p, q) {
                        return true;
                    }
                    used[t] = false;
                }
            }
            false
        }
        go(0, &mut perm, &mut used, p, q)
    }

    fn relabel(p: &Polyhedron, perm: &[usize]) -> Polyhedron {
        let rot = p.map().neighbor_rotations();
        let mut out = vec![Vec::new(); rot.len()];
        for (v, ns) in rot.iter().enumerate() {
            out[perm[v]] = ns.iter().map(|&w| perm[w]).collect();
        }
        Polyhedron::from_rotations(&out).unwrap()
    }

    #[test]
    fn validate_examples() {
        let p = k4();
        assert_eq!((p.vertex_count(), p.edge_count(), p.face_count()), (4, 6, 4));

        let c5: Vec<Vec<usize>> = (0..5).map(|i| vec![(i + 1) % 5, (i + 4) % 5]).collect();
        let m = build_map(&c5).unwrap();
        assert_eq!(validate(m).unwrap_err(), ValidationError::NotThreeConnected);

        let doubled = build_map(&[vec![1, 1], vec![0, 0]]).unwrap();
        assert_eq!(validate(doubled).unwrap_err(), ValidationError::NotSimple);

        let triangle = build_map(&[vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(validate(triangle).unwrap_err(), ValidationError::TooSmall);

        let k5: Vec<Vec<usize>> = (0..5).map(|u| (0..5).filter(|&w| w != u).collect()).collect();
        assert_eq!(validate(build_map(&k5).unwrap()).unwrap_err(), ValidationError::NotGenusZero);
    }

    #[test]
    fn dual_examples() {
        let d = dual(&k4()).polyhedron;
        assert!(are_isomorphic(&d, &k4()));

        for n in 3..9 {
            let w = wheel(n).unwrap();
            assert!(are_isomorphic(&dual(&w).polyhedron, &w));
        }

        let oct = dual(&cube()).polyhedron;
        assert_eq!(oct.vertex_count(), 6);
        assert!((0..oct.face_count()).all(|f| oct.face_len(f) == 3));
        assert!(oct.map().adjacency().iter().all(|ns| ns.len() == 4));
    }

    #[test]
    fn dual_edge_map_joins_incident_faces() {
        let p = cube();
        let d = dual(&p);
        for e in 0..p.edge_count() {
            let (f, g) = p.edge_faces(e);
            let (x, y) = d.polyhedron.edge_endpoints(d.edge_map[e]);
            assert_eq!(key(f, g), key(x, y));
        }
        let dd = dual(&d.polyhedron).polyhedron;
        assert!(are_isomorphic(&dd, &p));
    }

    #[test]
    fn wheel_examples() {
        assert!(are_isomorphic(&wheel(3).unwrap(), &k4()));
        let w5 = wheel(5).unwrap();
        assert_eq!((w5.vertex_count(), w5.edge_count(), w5.face_count()), (6, 10, 6));
        let w4 = wheel(4).unwrap();
        assert_eq!((w4.vertex_count(), w4.edge_count(), w4.face_count()), (5, 8, 5));
        assert!(matches!(wheel(2), Err(crate::Error::WheelTooSmall(2))));
    }

    #[test]
    fn is_wheel_examples() {
        assert!(is_wheel(&wheel(7).unwrap()));
        assert_eq!(wheel_rim(&wheel(7).unwrap()), Some(7));
        assert!(!is_wheel(&cube()));
        assert!(is_wheel(&k4()));
        assert_eq!(wheel_rim(&k4()), Some(3));
        assert!(every_edge_triangular_with_cubic_end(&wheel(6).unwrap()));
        assert!(!every_edge_triangular_with_cubic_end(&cube()));
    }

    #[test]
    fn canonical_code_examples() {
        let p = k4();
        let q = relabel(&p, &[2, 0, 3, 1]);
        assert_eq!(canonical_code(&p), canonical_code(&q));
        assert_ne!(canonical_code(&wheel(5).unwrap()), canonical_code(&dual(&cube()).polyhedron));
        let w6 = wheel(6).unwrap();
        assert_eq!(canonical_code(&w6), canonical_code(&w6.mirror()));
        assert!(!w6.canonical_form().chiral);
    }

    #[test]
    fn canonical_code_decodes_to_isomorphic_map() {
        for p in [k4(), cube(), wheel(7).unwrap()] {
            let code = p.canonical_code();
            let back = code.to_polyhedron().unwrap();
            assert_eq!(back.canonical_code(), code);
            assert!(brute_isomorphic(&p, &back));
        }
    }

    #[test]
    fn canonical_labels_realize_code() {
        let p = cube();
        let form = p.canonical_form();
        let relabeled = relabel(&p, &form.labels);
        let expected = if form.mirrored { relabeled.mirror() } else { relabeled };
        let rot = expected.map().neighbor_rotations();
        let decoded = form.code.rotations();
        // each decoded block is the rotation of that vertex, up to cyclic shift
        for (v, block) in decoded.iter().enumerate() {
            let r = &rot[v];
            let shift = r.iter().position(|&w| w == block[0]).unwrap();
            let rotated: Vec<usize> = (0..r.len()).map(|i| r[(shift + i) % r.len()]).collect();
            assert_eq!(&rotated, block);
        }
    }

    #[test]
    fn isomorphism_examples() {
        assert!(are_isomorphic(&k4(), &wheel(3).unwrap()));
        assert!(!are_isomorphic(&wheel(4).unwrap(), &wheel(5).unwrap()));
        let w7 = wheel(7).unwrap();
        let dd = dual(&dual(&w7).polyhedron).polyhedron;
        assert!(are_isomorphic(&w7, &dd));
        assert!(brute_isomorphic(&w7, &dd));
        assert!(!brute_isomorphic(&cube(), &wheel(7).unwrap()));
    }
}
