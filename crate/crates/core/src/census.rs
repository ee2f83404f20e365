//! Census of strongly involutive polyhedra up to a vertex bound.
//!
//! Two independent routes produce the same set:
//!
//! * [`si_census_expand`] closes the odd wheels under expansion moves;
//! * [`si_census_oracle`] generates *every* polyhedron within the bounds from
//!   wheels by face diagonals and vertex splits, then keeps those admitting a
//!   strong involution.
//!
//! Entries are stored under canonical labels, so a census is a deterministic
//! function of its bound.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::duality::{strong_involutions, StrongInvolution};
use crate::edit::MapEditor;
use crate::expansion::{candidate_moves, expand_step, ExpansionMove};
use crate::polyhedron::{validate, wheel, CanonicalCode, CanonicalForm, Polyhedron};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("censuses have different vertex bounds ({0} and {1})")]
    BoundMismatch(usize, usize),
    #[error("census entry {code} is inconsistent: {reason}")]
    BadEntry { code: String, reason: String },
}

/// Odd-wheel ancestor and the expansion moves leading from it, each move
/// expressed in the canonical labeling of the polyhedron it applies to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub wheel_rim: usize,
    pub moves: Vec<ExpansionMove>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub code: CanonicalCode,
    pub v: usize,
    pub e: usize,
    pub f: usize,
    /// `involution[i]` lists the (sorted, canonical) vertices of `τ(i)`.
    pub involution: Vec<Vec<usize>>,
    pub provenance: Option<Provenance>,
    pub chiral: bool,
}

/// `τ` as a table of face vertex sets under the labeling `labels`.
pub fn involution_table(p: &Polyhedron, tau: &StrongInvolution, labels: &[usize]) -> Vec<Vec<usize>> {
    let mut table = vec![Vec::new(); p.vertex_count()];
    for v in 0..p.vertex_count() {
        let mut face: Vec<usize> = p.faces().vertex_set(tau.face_of(v)).iter().map(|&u| labels[u]).collect();
        face.sort_unstable();
        table[labels[v]] = face;
    }
    table
}

/// Rebuilds a strong involution of `p` from a table of face vertex sets.
pub fn involution_from_table(p: &Polyhedron, table: &[Vec<usize>]) -> Option<StrongInvolution> {
    if table.len() != p.vertex_count() {
        return None;
    }
    let images = table.iter().map(|face| p.face_with_vertices(face)).collect::<Option<Vec<_>>>()?;
    StrongInvolution::from_images(p, images)
}

/// The canonically labeled copy of `p` with `τ` carried along.
pub fn canonicalize(p: &Polyhedron, tau: &StrongInvolution) -> (Polyhedron, StrongInvolution, CanonicalForm) {
    let form = p.canonical_form();
    let q = form.code.to_polyhedron().expect("canonical codes decode to polyhedra");
    let table = involution_table(p, tau, &form.labels);
    let t = involution_from_table(&q, &table).expect("relabeling preserves strong involutions");
    (q, t, form)
}

impl CensusEntry {
    pub fn new(p: &Polyhedron, tau: &StrongInvolution, provenance: Option<Provenance>) -> Self {
        let form = p.canonical_form();
        Self {
            involution: involution_table(p, tau, &form.labels),
            code: form.code,
            v: p.vertex_count(),
            e: p.edge_count(),
            f: p.face_count(),
            provenance,
            chiral: form.chiral,
        }
    }

    /// The canonically labeled polyhedron.
    pub fn polyhedron(&self) -> Result<Polyhedron, crate::Error> {
        self.code.to_polyhedron()
    }

    pub fn strong_involution(&self, p: &Polyhedron) -> Option<StrongInvolution> {
        involution_from_table(p, &self.involution)
    }

    /// Decodes the entry and checks it against its stored fields.
    pub fn load(&self) -> Result<(Polyhedron, StrongInvolution), CensusError> {
        let bad = |reason: &str| CensusError::BadEntry { code: self.code.to_string(), reason: reason.to_string() };
        let p = self.polyhedron().map_err(|e| bad(&e.to_string()))?;
        if (p.vertex_count(), p.edge_count(), p.face_count()) != (self.v, self.e, self.f) {
            return Err(bad("counts do not match the code"));
        }
        if p.canonical_code() != self.code {
            return Err(bad("code is not canonical"));
        }
        let tau = self.strong_involution(&p).ok_or_else(|| bad("stored involution is not a strong involution"))?;
        Ok((p, tau))
    }

    /// Replays the provenance from its wheel.
    pub fn replay(&self) -> Option<Result<Polyhedron, crate::Error>> {
        let prov = self.provenance.as_ref()?;
        Some(replay_moves(prov))
    }
}

fn replay_moves(prov: &Provenance) -> Result<Polyhedron, crate::Error> {
    let w = wheel(prov.wheel_rim)?;
    let tau = crate::duality::strong_involution(&w).ok_or(crate::Error::NotStronglyInvolutive)?;
    let (mut p, mut t, _) = canonicalize(&w, &tau);
    for m in &prov.moves {
        let x = expand_step(&p, &t, m)?;
        let (q, s, _) = canonicalize(&x.polyhedron, &x.involution);
        p = q;
        t = s;
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CensusDocument", from = "CensusDocument")]
pub struct Census {
    pub max_v: usize,
    by_vertices: BTreeMap<usize, Vec<CensusEntry>>,
}

/// On-disk layout: `{max_v, entries: [...]}` with entries sorted by `(v, code)`.
#[derive(Serialize, Deserialize)]
struct CensusDocument {
    max_v: usize,
    entries: Vec<CensusEntry>,
}

impl From<Census> for CensusDocument {
    fn from(c: Census) -> Self {
        Self { max_v: c.max_v, entries: c.by_vertices.into_values().flatten().collect() }
    }
}

impl From<CensusDocument> for Census {
    fn from(doc: CensusDocument) -> Self {
        Census::from_entries(doc.max_v, doc.entries)
    }
}

impl Census {
    pub fn from_entries(max_v: usize, entries: impl IntoIterator<Item = CensusEntry>) -> Self {
        let mut unique: BTreeMap<CanonicalCode, CensusEntry> = BTreeMap::new();
        for entry in entries {
            unique.entry(entry.code.clone()).or_insert(entry);
        }
        let mut by_vertices: BTreeMap<usize, Vec<CensusEntry>> = BTreeMap::new();
        for entry in unique.into_values() {
            by_vertices.entry(entry.v).or_default().push(entry);
        }
        Self { max_v, by_vertices }
    }

    pub fn entries(&self) -> impl Iterator<Item = &CensusEntry> + '_ {
        self.by_vertices.values().flatten()
    }

    pub fn with_vertices(&self, v: usize) -> &[CensusEntry] {
        self.by_vertices.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.by_vertices.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of entries for each vertex count from 4 to `max_v`.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        (4..=self.max_v).map(|v| (v, self.with_vertices(v).len())).collect()
    }

    pub fn codes(&self) -> BTreeSet<CanonicalCode> {
        self.entries().map(|e| e.code.clone()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("census serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn odd_wheels(max_v: usize) -> impl Iterator<Item = usize> {
    (3..).step_by(2).take_while(move |&n| n < max_v)
}

/// Closure of the odd wheels with at most `max_v` vertices under expansion.
pub fn si_census_expand(max_v: usize) -> Census {
    let mut known: BTreeMap<CanonicalCode, CensusEntry> = BTreeMap::new();
    for n in odd_wheels(max_v) {
        let w = wheel(n).expect("n >= 3");
        let tau = crate::duality::strong_involution(&w).expect("odd wheels are strongly involutive");
        let entry = CensusEntry::new(&w, &tau, Some(Provenance { wheel_rim: n, moves: Vec::new() }));
        known.insert(entry.code.clone(), entry);
    }
    for v in 4..max_v {
        let parents: Vec<CensusEntry> = known.values().filter(|e| e.v == v).cloned().collect();
        let children: Vec<Vec<CensusEntry>> = parents.par_iter().map(expand_entry).collect();
        for child in children.into_iter().flatten() {
            known.entry(child.code.clone()).or_insert(child);
        }
    }
    Census::from_entries(max_v, known.into_values())
}

fn expand_entry(parent: &CensusEntry) -> Vec<CensusEntry> {
    let (p, tau) = parent.load().expect("census entries are consistent");
    let prov = parent.provenance.clone().expect("expansion entries carry provenance");
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for m in candidate_moves(&p, &tau) {
        let Ok(x) = expand_step(&p, &tau, &m) else { continue };
        let mut moves = prov.moves.clone();
        moves.push(m);
        let child =
            CensusEntry::new(&x.polyhedron, &x.involution, Some(Provenance { wheel_rim: prov.wheel_rim, moves }));
        if seen.insert(child.code.clone()) {
            out.push(child);
        }
    }
    out
}

/// Every polyhedron with at most `max_v` vertices and `max_e` edges, keyed by
/// canonical code.
///
/// Generated from the wheels by adding face diagonals and splitting vertices.
/// Every non-wheel polyhedron has an edge whose deletion or contraction leaves
/// a polyhedron, and both moves only grow `V` and `E`, so the closure within
/// the bounds is complete.
pub fn all_polyhedra_tutte(max_v: usize, max_e: usize) -> BTreeMap<CanonicalCode, Polyhedron> {
    let mut known: BTreeMap<CanonicalCode, Polyhedron> = BTreeMap::new();
    let mut by_edges: BTreeMap<usize, Vec<CanonicalCode>> = BTreeMap::new();
    for n in 3..max_v {
        if 2 * n > max_e {
            break;
        }
        let w = wheel(n).expect("n >= 3");
        let code = w.canonical_code();
        by_edges.entry(w.edge_count()).or_default().push(code.clone());
        known.insert(code, w);
    }
    let Some(&first) = by_edges.keys().next() else {
        return known;
    };
    for e in first..max_e {
        let level: Vec<CanonicalCode> = by_edges.get(&e).cloned().unwrap_or_default();
        let children: Vec<Vec<(CanonicalCode, Polyhedron)>> =
            level.par_iter().map(|code| tutte_children(&known[code], max_v)).collect();
        for (code, p) in children.into_iter().flatten() {
            if let Entry::Vacant(slot) = known.entry(code.clone()) {
                by_edges.entry(p.edge_count()).or_default().push(code);
                slot.insert(p);
            }
        }
    }
    known
}

/// Per-vertex-count totals of a polyhedron set.
pub fn counts_by_vertices(set: &BTreeMap<CanonicalCode, Polyhedron>) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for code in set.keys() {
        *counts.entry(code.vertex_count()).or_insert(0) += 1;
    }
    counts
}

fn tutte_children(p: &Polyhedron, max_v: usize) -> Vec<(CanonicalCode, Polyhedron)> {
    let mut out: BTreeMap<CanonicalCode, Polyhedron> = BTreeMap::new();
    let mut keep = |map| {
        if let Ok(q) = validate(map) {
            out.entry(q.canonical_code()).or_insert(q);
        }
    };
    // face diagonals
    for f in 0..p.face_count() {
        let walk = p.faces().walk(f);
        let k = walk.len();
        for i in 0..k {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                let mut ed = MapEditor::new(p.map());
                ed.insert_edge(walk[i], walk[j]);
                keep(ed.finish().map);
            }
        }
    }
    // vertex splits
    if p.vertex_count() < max_v {
        for v in 0..p.vertex_count() {
            let degree = p.degree(v);
            for start in 0..degree {
                for len in 2..=degree.saturating_sub(2) {
                    if start != 0 && start + len <= degree {
                        continue;
                    }
                    let mut ed = MapEditor::new(p.map());
                    ed.split(v, start, len);
                    keep(ed.finish().map);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Strongly involutive members of the full Tutte-generated set.
pub fn si_census_oracle(max_v: usize) -> Census {
    let all = all_polyhedra_tutte(max_v, 2 * max_v - 2);
    let entries: Vec<CensusEntry> = all
        .par_iter()
        .filter(|(_, p)| p.face_count() == p.vertex_count())
        .filter_map(|(_, p)| {
            let tau = strong_involutions(p).into_iter().next()?;
            Some(CensusEntry::new(p, &tau, None))
        })
        .collect();
    Census::from_entries(max_v, entries)
}

/// Symmetric difference of two censuses, per vertex count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusComparison {
    pub max_v: usize,
    /// `(first, second)` entry counts per vertex count.
    pub counts: BTreeMap<usize, (usize, usize)>,
    pub only_in_first: BTreeMap<usize, Vec<CanonicalCode>>,
    pub only_in_second: BTreeMap<usize, Vec<CanonicalCode>>,
}

impl CensusComparison {
    pub fn is_match(&self) -> bool {
        self.only_in_first.is_empty() && self.only_in_second.is_empty()
    }
}

pub fn compare_censuses(a: &Census, b: &Census) -> Result<CensusComparison, CensusError> {
    if a.max_v != b.max_v {
        return Err(CensusError::BoundMismatch(a.max_v, b.max_v));
    }
    let (ca, cb) = (a.codes(), b.codes());
    let mut only_in_first: BTreeMap<usize, Vec<CanonicalCode>> = BTreeMap::new();
    for code in ca.difference(&cb) {
        only_in_first.entry(code.vertex_count()).or_default().push(code.clone());
    }
    let mut only_in_second: BTreeMap<usize, Vec<CanonicalCode>> = BTreeMap::new();
    for code in cb.difference(&ca) {
        only_in_second.entry(code.vertex_count()).or_default().push(code.clone());
    }
    let counts = (4..=a.max_v).map(|v| (v, (a.with_vertices(v).len(), b.with_vertices(v).len()))).collect();
    Ok(CensusComparison { max_v: a.max_v, counts, only_in_first, only_in_second })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_censuses() {
        let c = si_census_expand(4);
        assert_eq!(c.len(), 1);
        let k4 = wheel(3).unwrap();
        assert_eq!(c.entries().next().unwrap().code, k4.canonical_code());

        let o = si_census_oracle(4);
        assert_eq!(o.codes(), c.codes());
    }

    #[test]
    fn odd_wheels_only() {
        let c = si_census_expand(6);
        let codes = c.codes();
        assert!(codes.contains(&wheel(5).unwrap().canonical_code()));
        assert!(!codes.contains(&wheel(4).unwrap().canonical_code()));
        let o = si_census_oracle(6);
        assert!(!o.codes().contains(&wheel(4).unwrap().canonical_code()));
    }

    #[test]
    fn tutte_small_counts() {
        let all = all_polyhedra_tutte(6, 12);
        let counts = counts_by_vertices(&all);
        assert_eq!(counts.get(&4), Some(&1));
        assert_eq!(counts.get(&5), Some(&2));
        assert_eq!(counts.get(&6), Some(&7));
        for (code, p) in &all {
            assert_eq!(&p.canonical_code(), code);
        }
    }

    #[test]
    fn compare_examples() {
        let a = si_census_expand(6);
        assert!(compare_censuses(&a, &a).unwrap().is_match());
        let b = si_census_expand(5);
        assert_eq!(compare_censuses(&a, &b).unwrap_err(), CensusError::BoundMismatch(6, 5));
    }

    #[test]
    fn json_round_trip() {
        let c = si_census_expand(7);
        let back = Census::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        let doc: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
        let first = &doc["entries"][0];
        let keys: Vec<&str> = first.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["code", "v", "e", "f", "involution", "provenance", "chiral"]);
    }

    #[test]
    fn provenance_replays() {
        let c = si_census_expand(7);
        for entry in c.entries() {
            let replayed = entry.replay().unwrap().unwrap();
            assert_eq!(replayed.canonical_code(), entry.code);
        }
    }
}
