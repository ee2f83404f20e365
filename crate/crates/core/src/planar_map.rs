//! Rotation-system maps on the sphere.
//!
//! A [`CombinatorialMap`] stores, for every vertex, the counterclockwise cyclic
//! order of its outgoing darts. Edge `e` owns the two darts `2e` and `2e + 1`,
//! so the twin of a dart is `d ^ 1`.
//!
//! Orientation convention: the face successor of a dart `d` is the dart that
//! follows `twin(d)` counterclockwise around the head of `d`. Each face is
//! therefore the face lying on the right of its darts, and its boundary walk
//! runs clockwise around it. The dual construction in `polyhedron` relies on
//! exactly this convention.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

/// Index of a directed half-edge.
pub type Dart = usize;

#[inline]
pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn edge_of(d: Dart) -> usize {
    d >> 1
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("vertex {vertex} lists neighbor {neighbor}, which is not a vertex")]
    InvalidVertex { vertex: usize, neighbor: usize },
    #[error("vertex {0} has no neighbors")]
    EmptyRotation(usize),
    #[error("incidence between vertices {0} and {1} is not symmetric")]
    AsymmetricIncidence(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not planar")]
    NonPlanar,
    #[error("dart rotations are malformed: {0}")]
    MalformedDarts(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombinatorialMap {
    rotations: Vec<Vec<Dart>>,
    origin: Vec<usize>,
    position: Vec<usize>,
}

/// Builds a map from per-vertex counterclockwise neighbor lists.
///
/// Occurrences are paired as follows: the k-th occurrence of `v` in the list
/// of `u` is matched with the k-th-from-last occurrence of `u` in the list of
/// `v`, which nests parallel edges without crossings. Occurrences of `u` in its
/// own list are paired consecutively into loops.
pub fn build_map(rotations: &[Vec<usize>]) -> Result<CombinatorialMap, MapError> {
    let n = rotations.len();
    for (u, list) in rotations.iter().enumerate() {
        if let Some(&bad) = list.iter().find(|&&w| w >= n) {
            return Err(MapError::InvalidVertex { vertex: u, neighbor: bad });
        }
    }

    // positions of each neighbor occurrence: (u, v) -> indices in u's list
    let mut occurrences: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (u, list) in rotations.iter().enumerate() {
        for (i, &v) in list.iter().enumerate() {
            occurrences.entry((u, v)).or_default().push(i);
        }
    }

    let mut keys: Vec<_> = occurrences.keys().copied().collect();
    keys.sort_unstable();
    for &(u, v) in &keys {
        let forward = occurrences[&(u, v)].len();
        let backward = occurrences.get(&(v, u)).map_or(0, Vec::len);
        if (u == v && !forward.is_multiple_of(2)) || (u != v && forward != backward) {
            return Err(MapError::AsymmetricIncidence(u.min(v), u.max(v)));
        }
    }
    if let Some(u) = rotations.iter().position(Vec::is_empty) {
        return Err(MapError::EmptyRotation(u));
    }

    let mut dart_at: Vec<Vec<Option<Dart>>> = rotations.iter().map(|l| vec![None; l.len()]).collect();
    let mut next_dart = 0;
    for (u, v) in keys {
        if u > v {
            continue;
        }
        let here = &occurrences[&(u, v)];
        if u == v {
            for pair in here.chunks(2) {
                dart_at[u][pair[0]] = Some(next_dart);
                dart_at[u][pair[1]] = Some(next_dart + 1);
                next_dart += 2;
            }
            continue;
        }
        let there = &occurrences[&(v, u)];
        for (&i, &j) in here.iter().zip(there.iter().rev()) {
            dart_at[u][i] = Some(next_dart);
            dart_at[v][j] = Some(next_dart + 1);
            next_dart += 2;
        }
    }
    let darts =
        dart_at.into_iter().map(|row| row.into_iter().map(|d| d.expect("every occurrence paired")).collect()).collect();
    CombinatorialMap::from_dart_rotations(darts)
}

impl CombinatorialMap {
    /// Builds a map directly from dart rotations. Darts must be exactly
    /// `0..2E`, each appearing once; `d` and `d ^ 1` form an edge.
    pub fn from_dart_rotations(rotations: Vec<Vec<Dart>>) -> Result<Self, MapError> {
        let total: usize = rotations.iter().map(Vec::len).sum();
        if !total.is_multiple_of(2) {
            return Err(MapError::MalformedDarts(format!("odd dart count {total}")));
        }
        let mut origin = vec![usize::MAX; total];
        let mut position = vec![usize::MAX; total];
        for (v, rot) in rotations.iter().enumerate() {
            if rot.is_empty() {
                return Err(MapError::EmptyRotation(v));
            }
            for (i, &d) in rot.iter().enumerate() {
                if d >= total || origin[d] != usize::MAX {
                    return Err(MapError::MalformedDarts(format!("dart {d} out of range or repeated")));
                }
                origin[d] = v;
                position[d] = i;
            }
        }
        Ok(Self { rotations, origin, position })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn origin(&self, d: Dart) -> usize {
        self.origin[d]
    }

    pub fn target(&self, d: Dart) -> usize {
        self.origin[twin(d)]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    /// Counterclockwise dart order around `v`.
    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    /// Next dart counterclockwise around the origin of `d`.
    pub fn next_around(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.origin[d]];
        rot[(self.position[d] + 1) % rot.len()]
    }

    /// Next dart clockwise around the origin of `d`.
    pub fn prev_around(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.origin[d]];
        rot[(self.position[d] + rot.len() - 1) % rot.len()]
    }

    pub fn face_next(&self, d: Dart) -> Dart {
        self.next_around(twin(d))
    }

    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        (self.origin[2 * e], self.origin[2 * e + 1])
    }

    /// Neighbor lists in rotation order (the inverse of [`build_map`] for
    /// simple maps).
    pub fn neighbor_rotations(&self) -> Vec<Vec<usize>> {
        self.rotations.iter().map(|rot| rot.iter().map(|&d| self.target(d)).collect()).collect()
    }

    /// Sorted, deduplicated neighbor sets.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        self.neighbor_rotations()
            .into_iter()
            .enumerate()
            .map(|(v, mut ns)| {
                ns.retain(|&w| w != v);
                ns.sort_unstable();
                ns.dedup();
                ns
            })
            .collect()
    }

    /// The same map with every rotation reversed.
    pub fn mirror(&self) -> Self {
        let rotations = self.rotations.iter().map(|rot| rot.iter().rev().copied().collect()).collect();
        Self::from_dart_rotations(rotations).expect("reversal keeps darts valid")
    }

    /// First edge joining `u` and `v`, if any.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.rotations[u].iter().find(|&&d| self.target(d) == v).map(|&d| edge_of(d))
    }

    pub fn trace_faces(&self) -> FaceSet {
        let mut face_of_dart = vec![usize::MAX; self.dart_count()];
        let mut faces = Vec::new();
        for start in 0..self.dart_count() {
            if face_of_dart[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                face_of_dart[d] = id;
                walk.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            faces.push(walk);
        }
        let boundaries: Vec<Vec<usize>> =
            faces.iter().map(|walk| walk.iter().map(|&d| self.origin[d]).collect()).collect();
        let mut members: Vec<Vec<usize>> = boundaries.clone();
        for m in &mut members {
            m.sort_unstable();
            m.dedup();
        }
        FaceSet { faces, face_of_dart, boundaries, members }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &d in &self.rotations[u] {
                let w = self.target(d);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// `V - E + F == 2`.
    pub fn euler_check(&self) -> Result<bool, MapError> {
        if !self.is_connected() {
            return Err(MapError::Disconnected);
        }
        let f = self.trace_faces().len() as i64;
        Ok(self.vertex_count() as i64 - self.edge_count() as i64 + f == 2)
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = vec![usize::MAX; self.vertex_count()];
        for (u, rot) in self.rotations.iter().enumerate() {
            for &d in rot {
                let w = self.target(d);
                if w == u || seen[w] == u {
                    return false;
                }
                seen[w] = u;
            }
        }
        true
    }

    /// At least four vertices and no cutting set of size two or less.
    pub fn is_three_connected(&self) -> bool {
        is_three_connected_adjacency(&self.adjacency())
    }
}

/// Faces of a map as boundary walks, with vertex incidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<Dart>>,
    face_of_dart: Vec<usize>,
    boundaries: Vec<Vec<usize>>,
    members: Vec<Vec<usize>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Darts of face `f` in walk order.
    pub fn walk(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }

    /// Vertices of face `f` in walk order.
    pub fn boundary(&self, f: usize) -> &[usize] {
        &self.boundaries[f]
    }

    /// Sorted distinct vertices of face `f`.
    pub fn vertex_set(&self, f: usize) -> &[usize] {
        &self.members[f]
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of_dart[d]
    }

    /// The faces on the two sides of edge `e`: the face of dart `2e`, then
    /// the face of dart `2e + 1`.
    pub fn faces_of_edge(&self, e: usize) -> (usize, usize) {
        (self.face_of_dart[2 * e], self.face_of_dart[2 * e + 1])
    }

    /// `v ∈ f`: `v` lies on the boundary walk of `f`.
    pub fn contains(&self, f: usize, v: usize) -> bool {
        self.members[f].binary_search(&v).is_ok()
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.faces.iter().map(Vec::len)
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Dart]> + '_ {
        self.faces.iter().map(Vec::as_slice)
    }
}

/// Three-connectivity by deleting every vertex pair and testing what is left.
pub fn is_three_connected_adjacency(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    if n < 4 {
        return false;
    }
    if n <= 128 {
        let masks: Vec<u128> = adj.iter().map(|ns| ns.iter().fold(0u128, |m, &w| m | (1u128 << w))).collect();
        let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        if !mask_connected(&masks, all) {
            return false;
        }
        for u in 0..n {
            for w in u + 1..n {
                if !mask_connected(&masks, all & !(1 << u) & !(1 << w)) {
                    return false;
                }
            }
        }
        true
    } else {
        let mut removed = vec![false; n];
        if !slow_connected(adj, &removed) {
            return false;
        }
        for u in 0..n {
            removed[u] = true;
            for w in u + 1..n {
                removed[w] = true;
                let ok = slow_connected(adj, &removed);
                removed[w] = false;
                if !ok {
                    return false;
                }
            }
            removed[u] = false;
        }
        true
    }
}

/// Whether the vertices in `alive` induce a connected subgraph.
pub(crate) fn mask_connected(adj: &[u128], alive: u128) -> bool {
    if alive == 0 {
        return true;
    }
    let mut reached = 1u128 << alive.trailing_zeros();
    let mut frontier = reached;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & alive & !reached;
        reached |= fresh;
        frontier |= fresh;
    }
    reached == alive
}

/// Removes the given vertices and reports whether the rest is disconnected.
pub fn is_cutting_set(adj: &[Vec<usize>], cut: &[usize]) -> bool {
    let mut removed = vec![false; adj.len()];
    for &c in cut {
        removed[c] = true;
    }
    !slow_connected(adj, &removed)
}

fn slow_connected(adj: &[Vec<usize>], removed: &[bool]) -> bool {
    let n = adj.len();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Computes counterclockwise neighbor lists realizing a planar embedding of a
/// simple connected graph.
///
/// Blocks are embedded independently by incremental face-by-face path
/// insertion and glued at cut vertices by concatenating their rotations.
pub fn embed_planar(adjacency: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, MapError> {
    let n = adjacency.len();
    let mut adj: Vec<Vec<usize>> = adjacency.to_vec();
    for (u, ns) in adj.iter_mut().enumerate() {
        if let Some(&bad) = ns.iter().find(|&&w| w >= n) {
            return Err(MapError::InvalidVertex { vertex: u, neighbor: bad });
        }
        ns.sort_unstable();
        ns.dedup();
        ns.retain(|&w| w != u);
    }
    for (u, ns) in adj.iter().enumerate() {
        for &w in ns {
            if adj[w].binary_search(&u).is_err() {
                return Err(MapError::AsymmetricIncidence(u.min(w), u.max(w)));
            }
        }
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    if !slow_connected(&adj, &vec![false; n]) {
        return Err(MapError::Disconnected);
    }
    if n == 1 {
        return Ok(vec![Vec::new()]);
    }

    let blocks = blocks(&adj);
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in &blocks {
        let block_rot = embed_block(block)?;
        for (v, list) in block_rot {
            rotation[v].extend(list);
        }
    }
    Ok(rotation)
}

/// Edge sets of the biconnected components (Hopcroft–Tarjan).
fn blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (u, parent, ref mut i)) = stack.last_mut() {
            if *i < adj[u].len() {
                let w = adj[u][*i];
                *i += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (parent, u) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Embeds one biconnected block (or a bridge) and returns its rotations.
fn embed_block(edges: &[(usize, usize)]) -> Result<Vec<(usize, Vec<usize>)>, MapError> {
    if edges.len() == 1 {
        let (a, b) = edges[0];
        return Ok(vec![(a, vec![b]), (b, vec![a])]);
    }
    // local relabeling
    let mut local: HashMap<usize, usize> = HashMap::new();
    let mut global = Vec::new();
    for &(a, b) in edges {
        for x in [a, b] {
            local.entry(x).or_insert_with(|| {
                global.push(x);
                global.len() - 1
            });
        }
    }
    let n = global.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[local[&a]].push(local[&b]);
        adj[local[&b]].push(local[&a]);
    }
    for ns in &mut adj {
        ns.sort_unstable();
    }

    let faces = dmp_faces(&adj)?;

    // In a face walk u -> v -> w, w follows u counterclockwise around v.
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for face in &faces {
        let k = face.len();
        for i in 0..k {
            let u = face[i];
            let v = face[(i + 1) % k];
            let w = face[(i + 2) % k];
            succ[v].insert(u, w);
        }
    }
    let mut out = Vec::with_capacity(n);
    for v in 0..n {
        let first = adj[v][0];
        let mut list = vec![global[first]];
        let mut cur = succ[v][&first];
        while cur != first {
            list.push(global[cur]);
            cur = succ[v][&cur];
        }
        debug_assert_eq!(list.len(), adj[v].len());
        out.push((global[v], list));
    }
    Ok(out)
}

/// Demoucron–Malgrange–Pertuiset on a biconnected graph. Returns consistently
/// oriented face cycles: every directed edge appears in exactly one face.
fn dmp_faces(adj: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, MapError> {
    let n = adj.len();
    let edge_total: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;

    let cycle = find_cycle(adj);
    let mut in_h = vec![false; n];
    let mut h_edges: std::collections::HashSet<(usize, usize)> = Default::default();
    for i in 0..cycle.len() {
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        in_h[a] = true;
        h_edges.insert((a.min(b), a.max(b)));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while h_edges.len() < edge_total {
        let fragments = find_fragments(adj, &in_h, &h_edges);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> =
                (0..faces.len()).filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a))).collect();
            match admissible.len() {
                0 => return Err(MapError::NonPlanar),
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, f) = choice.expect("at least one fragment remains");
        let path = fragment_path(adj, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(f);
        let (left, right) = split_face(&face, &path);
        faces.push(left);
        faces.push(right);
    }
    Ok(faces)
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    // DFS until a back edge closes a cycle
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some((u, i)) = stack.pop() {
        if i < adj[u].len() {
            stack.push((u, i + 1));
            let w = adj[u][i];
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                stack.push((w, 0));
            } else if w != parent[u] && depth[w] < depth[u] {
                let mut cycle = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
        }
    }
    unreachable!("a biconnected block with two or more edges contains a cycle")
}

struct Fragment {
    /// Vertices of the fragment not yet embedded (empty for a chord).
    interior: Vec<usize>,
    attachments: Vec<usize>,
    /// For a chord, its endpoints.
    chord: Option<(usize, usize)>,
}

fn find_fragments(
    adj: &[Vec<usize>],
    in_h: &[bool],
    h_edges: &std::collections::HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &w in &adj[u] {
            if u < w && in_h[w] && !h_edges.contains(&(u, w)) {
                out.push(Fragment { interior: Vec::new(), attachments: vec![u, w], chord: Some((u, w)) });
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if in_h[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        comp[s] = id;
        let mut i = 0;
        while i < interior.len() {
            let u = interior[i];
            i += 1;
            for &w in &adj[u] {
                if in_h[w] {
                    attachments.push(w);
                } else if comp[w] == usize::MAX {
                    comp[w] = id;
                    interior.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment { interior, attachments, chord: None });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((a, b)) = frag.chord {
        return vec![a, b];
    }
    let start = frag.attachments[0];
    let inside: std::collections::HashSet<usize> = frag.interior.iter().copied().collect();
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &w in &adj[start] {
        if inside.contains(&w) && !prev.contains_key(&w) {
            prev.insert(w, start);
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if in_h[w] && w != start {
                let mut path = vec![w, u];
                let mut x = u;
                while let Some(&p) = prev.get(&x) {
                    path.push(p);
                    if p == start {
                        break;
                    }
                    x = p;
                }
                path.reverse();
                return path;
            }
            if inside.contains(&w) && !prev.contains_key(&w) {
                prev.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a biconnected graph have two attachments")
}

/// Splits an oriented face cycle along `path`, whose ends lie on the face.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let p0 = *path.first().expect("non-empty path");
    let pk = *path.last().expect("non-empty path");
    let i0 = face.iter().position(|&v| v == p0).expect("path starts on face");
    let ik = face.iter().position(|&v| v == pk).expect("path ends on face");
    let inner = &path[1..path.len() - 1];

    // face walk from p0 to pk, then the path back
    let mut left = Vec::new();
    let mut i = i0;
    loop {
        left.push(face[i]);
        if i == ik {
            break;
        }
        i = (i + 1) % k;
    }
    left.extend(inner.iter().rev());

    // face walk from pk to p0, then the path forward
    let mut right = Vec::new();
    let mut i = ik;
    loop {
        right.push(face[i]);
        if i == i0 {
            break;
        }
        i = (i + 1) % k;
    }
    right.extend(inner.iter());
    (left, right)
}
