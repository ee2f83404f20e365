//! Edge deletion and contraction, essential edges, and the remove-contract
//! reduction of strongly involutive polyhedra down to odd wheels.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::duality::{is_diameter, tau_edge, StrongInvolution};
use crate::edit::{face_sources, MapEditor};
use crate::planar_map::{mask_connected, CombinatorialMap};
use crate::polyhedron::{is_wheel, validate, wheel_rim, CanonicalCode, Polyhedron, ValidationError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("edge ({a}, {b}) is not reducible: {flags:?}")]
    NotReducible { a: usize, b: usize, flags: EdgeFlags },
    #[error("remove-contract result is not a polyhedron: {0}")]
    InvalidResult(ValidationError),
    #[error("remove-contract result lost its strong involution")]
    InvolutionLost,
    #[error("polyhedron with {vertices} vertices is not a wheel but has no reducible edge")]
    NoReducibleEdge { vertices: usize },
}

/// The three obstructions to remove-contract on an edge.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EdgeFlags {
    pub on_triangle: bool,
    pub in_three_cut: bool,
    pub diameter: bool,
}

impl EdgeFlags {
    pub fn any(&self) -> bool {
        self.on_triangle || self.in_three_cut || self.diameter
    }
}

pub fn delete_edge(p: &Polyhedron, e: usize) -> CombinatorialMap {
    let mut ed = MapEditor::new(p.map());
    ed.remove_edge(2 * e);
    ed.finish().map
}

/// Contracts `e`, keeping any parallel edges that appear.
pub fn contract_edge(p: &Polyhedron, e: usize) -> CombinatorialMap {
    let mut ed = MapEditor::new(p.map());
    ed.contract(2 * e);
    ed.finish().map
}

pub fn can_delete(p: &Polyhedron, e: usize) -> bool {
    validate(delete_edge(p, e)).is_ok()
}

pub fn can_contract(p: &Polyhedron, e: usize) -> bool {
    validate(contract_edge(p, e)).is_ok()
}

/// Neither deletable nor contractible.
pub fn is_essential(p: &Polyhedron, e: usize) -> bool {
    !can_delete(p, e) && !can_contract(p, e)
}

fn vertex_masks(p: &Polyhedron) -> Vec<u128> {
    p.adjacency().iter().map(|ns| ns.iter().fold(0u128, |m, &w| m | (1u128 << w))).collect()
}

/// A vertex `c` such that `{a, b, c}` is a 3-cutting set. Removing a set that
/// leaves fewer than two vertices counts as cutting (this only arises in K4).
pub fn three_cut_partner(p: &Polyhedron, a: usize, b: usize) -> Option<usize> {
    let n = p.vertex_count();
    if n <= 128 {
        let masks = vertex_masks(p);
        let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        let base = all & !(1u128 << a) & !(1u128 << b);
        (0..n).filter(|&c| c != a && c != b).find(|&c| {
            let rest = base & !(1u128 << c);
            rest.count_ones() < 2 || !mask_connected(&masks, rest)
        })
    } else {
        (0..n).filter(|&c| c != a && c != b).find(|&c| crate::planar_map::is_cutting_set(p.adjacency(), &[a, b, c]))
    }
}

/// Flags of edge `e`. Without an involution the diameter flag is false.
pub fn edge_flags(p: &Polyhedron, tau: Option<&StrongInvolution>, e: usize) -> EdgeFlags {
    let (a, b) = p.edge_endpoints(e);
    EdgeFlags {
        on_triangle: p.edge_on_triangle(e),
        in_three_cut: three_cut_partner(p, a, b).is_some(),
        diameter: tau.is_some_and(|t| is_diameter(p, t, e)),
    }
}

/// Edges with no flag set; empty for wheels.
pub fn find_reducible_edges(p: &Polyhedron, tau: &StrongInvolution) -> Vec<usize> {
    if is_wheel(p) {
        return Vec::new();
    }
    (0..p.edge_count()).filter(|&e| !edge_flags(p, Some(tau), e).any()).collect()
}

/// Outcome of one remove-contract step.
#[derive(Clone, Debug)]
pub struct ReducedStep {
    pub polyhedron: Polyhedron,
    pub involution: StrongInvolution,
    /// Endpoints of the contracted edge, in the input's vertex ids.
    pub contracted: (usize, usize),
    /// Endpoints of the deleted edge `τ(ab)`, in the input's vertex ids.
    pub deleted: (usize, usize),
    /// New id of each input vertex; both ends of the contracted edge map to
    /// the merged vertex.
    pub vertex_image: Vec<usize>,
}

/// Contracts `e = (a, b)` and deletes `τ(ab)`. The merged vertex is sent to
/// the union of `τ(a)` and `τ(b)`; every other vertex keeps its face.
pub fn reduce_step(p: &Polyhedron, tau: &StrongInvolution, e: usize) -> Result<ReducedStep, ReductionError> {
    let (a, b) = p.edge_endpoints(e);
    let flags = edge_flags(p, Some(tau), e);
    if flags.any() || is_wheel(p) {
        return Err(ReductionError::NotReducible { a, b, flags });
    }
    let t = tau_edge(p, tau, e);
    let deleted = p.edge_endpoints(t);

    let mut ed = MapEditor::new(p.map());
    let merged = ed.contract(2 * e);
    ed.remove_edge(2 * t);
    let edited = ed.finish();
    let sources = face_sources(&edited, |d| p.faces().face_of(d));
    let polyhedron = validate(edited.map.clone()).map_err(ReductionError::InvalidResult)?;

    let mut face_image: HashMap<usize, usize> = HashMap::new();
    for (g, src) in sources.iter().enumerate() {
        for &f in src {
            face_image.insert(f, g);
        }
    }
    let vertex_image: Vec<usize> = edited
        .vertex_image
        .iter()
        .map(|v| v.unwrap_or_else(|| edited.vertex_image[merged].expect("merged vertex survives")))
        .collect();

    let mut images = vec![usize::MAX; polyhedron.vertex_count()];
    for u in 0..p.vertex_count() {
        if u == a || u == b {
            continue;
        }
        images[vertex_image[u]] = face_image[&tau.face_of(u)];
    }
    let union = face_image[&tau.face_of(a)];
    if face_image[&tau.face_of(b)] != union {
        return Err(ReductionError::InvolutionLost);
    }
    images[vertex_image[a]] = union;
    let involution = StrongInvolution::from_images(&polyhedron, images).ok_or(ReductionError::InvolutionLost)?;

    Ok(ReducedStep { polyhedron, involution, contracted: (a, b), deleted, vertex_image })
}

#[derive(Clone, Debug)]
pub struct TraceStep {
    pub contracted: (usize, usize),
    pub deleted: (usize, usize),
    pub code: CanonicalCode,
    pub polyhedron: Polyhedron,
    pub involution: StrongInvolution,
}

/// Remove-contract steps from a strongly involutive polyhedron to a wheel.
#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
    pub terminal_rim: usize,
}

/// The reducible edge whose endpoint labels come first under the canonical
/// labeling of `p`.
pub fn canonical_first_edge(p: &Polyhedron, edges: &[usize]) -> Option<usize> {
    let labels = p.canonical_form().labels;
    edges.iter().copied().min_by_key(|&e| {
        let (a, b) = p.edge_endpoints(e);
        (labels[a].min(labels[b]), labels[a].max(labels[b]))
    })
}

/// Applies remove-contract, always on the canonically first reducible edge,
/// until a wheel is reached.
pub fn reduce_to_wheel(p: &Polyhedron, tau: &StrongInvolution) -> Result<ReductionTrace, ReductionError> {
    let mut current = p.clone();
    let mut involution = tau.clone();
    let mut steps = Vec::new();
    loop {
        if let Some(rim) = wheel_rim(&current) {
            return Ok(ReductionTrace { steps, terminal_rim: rim });
        }
        let edges = find_reducible_edges(&current, &involution);
        let e = canonical_first_edge(&current, &edges)
            .ok_or(ReductionError::NoReducibleEdge { vertices: current.vertex_count() })?;
        let step = reduce_step(&current, &involution, e)?;
        steps.push(TraceStep {
            contracted: step.contracted,
            deleted: step.deleted,
            code: step.polyhedron.canonical_code(),
            polyhedron: step.polyhedron.clone(),
            involution: step.involution.clone(),
        });
        current = step.polyhedron;
        involution = step.involution;
    }
}

/// Rim lengths of every wheel reachable by some sequence of remove-contract
/// choices. Explores up to `max_states` distinct intermediate polyhedra.
pub fn reachable_terminal_rims(
    p: &Polyhedron,
    tau: &StrongInvolution,
    max_states: usize,
) -> Result<BTreeSet<usize>, ReductionError> {
    let mut rims = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([(p.clone(), tau.clone())]);
    seen.insert(p.canonical_code());
    while let Some((q, t)) = queue.pop_front() {
        if let Some(rim) = wheel_rim(&q) {
            rims.insert(rim);
            continue;
        }
        let edges = find_reducible_edges(&q, &t);
        if edges.is_empty() {
            return Err(ReductionError::NoReducibleEdge { vertices: q.vertex_count() });
        }
        for e in edges {
            let step = reduce_step(&q, &t, e)?;
            if seen.len() < max_states && seen.insert(step.polyhedron.canonical_code()) {
                queue.push_back((step.polyhedron, step.involution));
            }
        }
    }
    Ok(rims)
}
