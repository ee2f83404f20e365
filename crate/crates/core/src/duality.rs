//! Duality isomorphisms, strong involutions, the induced edge map and
//! diameters.

use crate::polyhedron::Polyhedron;

/// A bijection from vertices to faces under which adjacent vertices go to
/// adjacent faces and non-adjacent vertices to non-adjacent faces.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualityIso {
    vertex_to_face: Vec<usize>,
}

impl DualityIso {
    /// Checks `images` against `p` and wraps it if it is a duality.
    pub fn new(p: &Polyhedron, images: Vec<usize>) -> Option<Self> {
        is_duality(p, &images).then_some(Self { vertex_to_face: images })
    }

    pub fn face_of(&self, v: usize) -> usize {
        self.vertex_to_face[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.vertex_to_face
    }

    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.vertex_to_face.len()];
        for (v, &f) in self.vertex_to_face.iter().enumerate() {
            inv[f] = v;
        }
        inv
    }
}

/// A duality satisfying `u ∈ τ(v) ⇔ v ∈ τ(u)` and `v ∉ τ(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrongInvolution {
    iso: DualityIso,
    face_to_vertex: Vec<usize>,
}

impl StrongInvolution {
    pub fn new(p: &Polyhedron, iso: DualityIso) -> Option<Self> {
        is_strong_involution(p, &iso).then(|| {
            let face_to_vertex = iso.inverse();
            Self { iso, face_to_vertex }
        })
    }

    /// Validates a raw vertex-to-face table.
    pub fn from_images(p: &Polyhedron, images: Vec<usize>) -> Option<Self> {
        Self::new(p, DualityIso::new(p, images)?)
    }

    /// `τ(v)`.
    pub fn face_of(&self, v: usize) -> usize {
        self.iso.face_of(v)
    }

    /// `τ⁻¹(f)`.
    pub fn vertex_of(&self, f: usize) -> usize {
        self.face_to_vertex[f]
    }

    pub fn iso(&self) -> &DualityIso {
        &self.iso
    }

    pub fn images(&self) -> &[usize] {
        self.iso.images()
    }
}

fn face_adjacency(p: &Polyhedron) -> Vec<Vec<bool>> {
    let f = p.face_count();
    let mut adj = vec![vec![false; f]; f];
    for e in 0..p.edge_count() {
        let (a, b) = p.edge_faces(e);
        adj[a][b] = true;
        adj[b][a] = true;
    }
    adj
}

fn vertex_adjacency(p: &Polyhedron) -> Vec<Vec<bool>> {
    let n = p.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for (a, b) in p.edges() {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    adj
}

/// Whether `images` is an adjacency-preserving bijection onto the faces.
pub fn is_duality(p: &Polyhedron, images: &[usize]) -> bool {
    let n = p.vertex_count();
    if images.len() != n || p.face_count() != n {
        return false;
    }
    let mut used = vec![false; n];
    for &f in images {
        if f >= n || used[f] {
            return false;
        }
        used[f] = true;
    }
    let fadj = face_adjacency(p);
    let vadj = vertex_adjacency(p);
    (0..n).all(|u| (u + 1..n).all(|v| vadj[u][v] == fadj[images[u]][images[v]]))
}

/// Every duality isomorphism of `p`, sorted by image sequence.
///
/// Vertices are assigned highest degree first, then by the number of
/// already-assigned neighbors; a vertex may only go to an unused face of equal
/// size whose adjacencies to the faces already chosen mirror the vertex's
/// adjacencies.
pub fn find_dualities(p: &Polyhedron) -> Vec<DualityIso> {
    let n = p.vertex_count();
    if p.face_count() != n {
        return Vec::new();
    }
    let fadj = face_adjacency(p);
    let vadj = vertex_adjacency(p);
    let order = search_order(p, &vadj);

    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    extend(p, &order, 0, &vadj, &fadj, &mut images, &mut used, &mut out);
    out.sort();
    out
}

fn search_order(p: &Polyhedron, vadj: &[Vec<bool>]) -> Vec<usize> {
    let n = p.vertex_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = order.iter().filter(|&&w| vadj[v][w]).count();
                (linked, p.degree(v), std::cmp::Reverse(v))
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &Polyhedron,
    order: &[usize],
    depth: usize,
    vadj: &[Vec<bool>],
    fadj: &[Vec<bool>],
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<DualityIso>,
) {
    if depth == order.len() {
        out.push(DualityIso { vertex_to_face: images.clone() });
        return;
    }
    let u = order[depth];
    for f in 0..p.face_count() {
        if used[f] || p.face_len(f) != p.degree(u) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&w| vadj[u][w] == fadj[f][images[w]]);
        if !consistent {
            continue;
        }
        used[f] = true;
        images[u] = f;
        extend(p, order, depth + 1, vadj, fadj, images, used, out);
        images[u] = usize::MAX;
        used[f] = false;
    }
}

/// Checks both strong-involution conditions on every vertex pair.
pub fn is_strong_involution(p: &Polyhedron, d: &DualityIso) -> bool {
    let n = p.vertex_count();
    (0..n).all(|v| !p.face_contains(d.face_of(v), v))
        && (0..n).all(|u| (u + 1..n).all(|v| p.face_contains(d.face_of(v), u) == p.face_contains(d.face_of(u), v)))
}

pub fn strong_involutions(p: &Polyhedron) -> Vec<StrongInvolution> {
    find_dualities(p).into_iter().filter_map(|d| StrongInvolution::new(p, d)).collect()
}

/// The first strong involution, if `p` has one.
pub fn strong_involution(p: &Polyhedron) -> Option<StrongInvolution> {
    strong_involutions(p).into_iter().next()
}

/// `τ(ab)`: the edge shared by the faces `τ(a)` and `τ(b)`.
pub fn tau_edge(p: &Polyhedron, tau: &StrongInvolution, e: usize) -> usize {
    let (a, b) = p.edge_endpoints(e);
    p.face_between(tau.face_of(a), tau.face_of(b)).expect("a duality maps adjacent vertices to adjacent faces")
}

/// `(ab)` is a diameter when `a ∈ τ(b)`.
pub fn is_diameter(p: &Polyhedron, tau: &StrongInvolution, e: usize) -> bool {
    let (a, b) = p.edge_endpoints(e);
    p.face_contains(tau.face_of(b), a)
}

pub fn diameters(p: &Polyhedron, tau: &StrongInvolution) -> Vec<usize> {
    (0..p.edge_count()).filter(|&e| is_diameter(p, tau, e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::wheel;

    fn k4() -> Polyhedron {
        wheel(3).unwrap()
    }

    fn cube() -> Polyhedron {
        let adj: Vec<Vec<usize>> = (0..8).map(|v| (0..3).map(|b| v ^ (1 << b)).collect()).collect();
        Polyhedron::from_rotations(&crate::planar_map::embed_planar(&adj).unwrap()).unwrap()
    }

    /// `τ(v)` = the face avoiding `v`.
    fn k4_involution(p: &Polyhedron) -> StrongInvolution {
        let images = (0..4).map(|v| (0..4).find(|&f| !p.face_contains(f, v)).unwrap()).collect();
        StrongInvolution::from_images(p, images).unwrap()
    }

    /// hub ↦ rim face, rim i ↦ triangle (hub, i+2, i+3) on the rim labels 1..=5.
    fn w5_involution(p: &Polyhedron) -> StrongInvolution {
        let rim = |i: usize| (i - 1) % 5 + 1;
        let mut images = vec![p.face_with_vertices(&[1, 2, 3, 4, 5]).unwrap()];
        for i in 1..=5 {
            images.push(p.face_with_vertices(&[0, rim(i + 2), rim(i + 3)]).unwrap());
        }
        StrongInvolution::from_images(p, images).unwrap()
    }

    /// Independent count of dualities over all V! bijections.
    fn brute_force(p: &Polyhedron) -> (usize, Vec<Vec<usize>>) {
        let n = p.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut dualities = 0;
        let mut strong = Vec::new();
        permute(&mut perm, 0, &mut |images| {
            if is_duality(p, images) {
                dualities += 1;
                let cond1 =
                    (0..n).all(|u| (0..n).all(|v| p.face_contains(images[v], u) == p.face_contains(images[u], v)));
                let cond2 = (0..n).all(|v| !p.face_contains(images[v], v));
                if cond1 && cond2 {
                    strong.push(images.to_vec());
                }
            }
        });
        strong.sort();
        (dualities, strong)
    }

    fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
        if k == perm.len() {
            visit(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(perm, k + 1, visit);
            perm.swap(k, i);
        }
    }

    #[test]
    fn find_dualities_examples() {
        let p = k4();
        assert_eq!(find_dualities(&p).len(), 24);
        assert_eq!(brute_force(&p).0, 24);
        assert!(find_dualities(&cube()).is_empty());
        assert!(!find_dualities(&wheel(4).unwrap()).is_empty());
    }

    #[test]
    fn strong_involution_examples() {
        let p = k4();
        let tau = k4_involution(&p);
        assert!(is_strong_involution(&p, tau.iso()));
        for d in find_dualities(&p) {
            let hits_own_face = (0..4).any(|v| p.face_contains(d.face_of(v), v));
            assert_eq!(is_strong_involution(&p, &d), !hits_own_face);
        }

        let w5 = wheel(5).unwrap();
        assert!(is_strong_involution(&w5, w5_involution(&w5).iso()));
    }

    #[test]
    fn strong_involution_counts() {
        let w5 = wheel(5).unwrap();
        let all = strong_involutions(&w5);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0], w5_involution(&w5));

        assert!(strong_involutions(&wheel(4).unwrap()).is_empty());

        let p = k4();
        assert_eq!(strong_involutions(&p), vec![k4_involution(&p)]);
    }

    #[test]
    fn search_matches_brute_force_on_wheels() {
        for n in 3..=7 {
            let p = wheel(n).unwrap();
            let (count, strong) = brute_force(&p);
            assert_eq!(find_dualities(&p).len(), count, "wheel({n})");
            let found: Vec<Vec<usize>> = strong_involutions(&p).iter().map(|t| t.images().to_vec()).collect();
            assert_eq!(found, strong, "wheel({n})");
            assert_eq!(strong.len(), n % 2, "wheel({n})");
        }
    }

    #[test]
    fn tau_edge_examples() {
        let p = k4();
        let tau = k4_involution(&p);
        for e in 0..6 {
            let (a, b) = p.edge_endpoints(e);
            let (x, y) = p.edge_endpoints(tau_edge(&p, &tau, e));
            let mut four = vec![a, b, x, y];
            four.sort_unstable();
            assert_eq!(four, vec![0, 1, 2, 3]);
        }

        let w5 = wheel(5).unwrap();
        let tau = w5_involution(&w5);
        let image = |a, b| {
            let e = w5.edge_between(a, b).unwrap();
            let (x, y) = w5.edge_endpoints(tau_edge(&w5, &tau, e));
            (x.min(y), x.max(y))
        };
        assert_eq!(image(1, 2), (0, 4));
        assert_eq!(image(0, 1), (3, 4));
    }

    #[test]
    fn tau_edge_is_a_fixed_point_free_involution() {
        for n in [3, 5, 7, 9] {
            let p = wheel(n).unwrap();
            let tau = strong_involution(&p).unwrap();
            for e in 0..p.edge_count() {
                let t = tau_edge(&p, &tau, e);
                assert_ne!(t, e);
                assert_eq!(tau_edge(&p, &tau, t), e);
            }
        }
    }

    #[test]
    fn diameter_examples() {
        let p = k4();
        let tau = k4_involution(&p);
        assert!((0..6).all(|e| is_diameter(&p, &tau, e)));

        let w5 = wheel(5).unwrap();
        let tau = w5_involution(&w5);
        assert!(is_diameter(&w5, &tau, w5.edge_between(0, 1).unwrap()));
        assert!(!is_diameter(&w5, &tau, w5.edge_between(1, 2).unwrap()));
        // symmetric in the endpoints
        for e in 0..w5.edge_count() {
            let (a, b) = w5.edge_endpoints(e);
            assert_eq!(w5.face_contains(tau.face_of(b), a), w5.face_contains(tau.face_of(a), b));
        }
    }
}
