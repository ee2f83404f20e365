//! Map documents on disk and export formats.
//!
//! A map document is JSON, either
//! `{"vertices": n, "rotations": [[...], ...]}` with counterclockwise
//! neighbor lists, or `{"adjacency": [[...], ...]}` for an unembedded graph,
//! which is embedded in the plane first.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::layout::{barycentric_layout, outer_face};
use crate::planar_map::{build_map, embed_planar, CombinatorialMap, MapError};
use crate::polyhedron::Polyhedron;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocumentError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("invalid map: {0}")]
    Map(#[from] MapError),
    #[error("unsupported format {0:?} (expected json, dot or svg)")]
    UnsupportedFormat(String),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotations: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adjacency: Option<Vec<Vec<usize>>>,
}

impl MapDocument {
    pub fn from_polyhedron(p: &Polyhedron) -> Self {
        Self { vertices: Some(p.vertex_count()), rotations: Some(p.map().neighbor_rotations()), adjacency: None }
    }

    pub fn into_map(self) -> Result<CombinatorialMap, DocumentError> {
        let (rotations, count) = match (self.rotations, self.adjacency) {
            (Some(r), None) => (r, self.vertices),
            (None, Some(adj)) => {
                let r = embed_planar(&adj)?;
                (r, self.vertices)
            }
            (Some(_), Some(_)) => {
                return Err(DocumentError::Schema("give either \"rotations\" or \"adjacency\", not both".into()))
            }
            (None, None) => return Err(DocumentError::Schema("missing field \"rotations\" (or \"adjacency\")".into())),
        };
        if let Some(n) = count {
            if n != rotations.len() {
                return Err(DocumentError::Schema(format!(
                    "\"vertices\" is {n} but {} neighbor lists are given",
                    rotations.len()
                )));
            }
        }
        Ok(build_map(&rotations)?)
    }
}

pub fn parse_input(bytes: &[u8]) -> Result<CombinatorialMap, DocumentError> {
    let doc: MapDocument = serde_json::from_slice(bytes).map_err(|e| {
        if e.is_data() {
            DocumentError::Schema(e.to_string())
        } else {
            DocumentError::Parse(e.to_string())
        }
    })?;
    doc.into_map()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Svg,
}

impl FromStr for Format {
    type Err = DocumentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            "svg" => Ok(Format::Svg),
            other => Err(DocumentError::UnsupportedFormat(other.to_string())),
        }
    }
}

pub fn export(p: &Polyhedron, format: Format) -> String {
    match format {
        Format::Json => to_json(p),
        Format::Dot => to_dot(p),
        Format::Svg => to_svg(p, &SvgStyle::default()),
    }
}

pub fn export_named(p: &Polyhedron, format: &str) -> Result<String, DocumentError> {
    Ok(export(p, format.parse()?))
}

pub fn to_json(p: &Polyhedron) -> String {
    serde_json::to_string(&MapDocument::from_polyhedron(p)).expect("map documents serialize")
}

pub fn to_dot(p: &Polyhedron) -> String {
    let mut out = String::from("graph polyhedron {\n");
    for f in 0..p.face_count() {
        let b: Vec<String> = p.face_boundary(f).iter().map(usize::to_string).collect();
        let _ = writeln!(out, "  // face {f}: {}", b.join(" "));
    }
    for v in 0..p.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (a, b) in p.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

/// Colors for highlighted vertices, edges and faces in an SVG drawing.
#[derive(Clone, Debug, Default)]
pub struct SvgStyle {
    pub size: f64,
    pub vertex_fill: Vec<Option<String>>,
    pub edge_stroke: Vec<Option<String>>,
    pub face_fill: Vec<Option<String>>,
}

pub fn to_svg(p: &Polyhedron, style: &SvgStyle) -> String {
    let size = if style.size > 0.0 { style.size } else { 400.0 };
    let pos = barycentric_layout(p);
    let margin = 24.0;
    let scale = size / 2.0 - margin;
    let at = |v: usize| (size / 2.0 + scale * pos[v].0, size / 2.0 - scale * pos[v].1);
    let pick = |list: &[Option<String>], i: usize| list.get(i).cloned().flatten();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let outer = outer_face(p);
    for f in 0..p.face_count() {
        let Some(fill) = pick(&style.face_fill, f) else { continue };
        if f == outer {
            // the outer face is everything outside the polygon
            let _ = writeln!(out, r#"  <rect width="{size}" height="{size}" fill="{fill}"/>"#);
            let pts: Vec<String> =
                p.face_boundary(f).iter().map(|&v| at(v)).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
            let _ = writeln!(out, r#"  <polygon points="{}" fill="white"/>"#, pts.join(" "));
        } else {
            let pts: Vec<String> =
                p.face_boundary(f).iter().map(|&v| at(v)).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
            let _ = writeln!(out, r#"  <polygon points="{}" fill="{fill}"/>"#, pts.join(" "));
        }
    }
    for (e, (a, b)) in p.edges().enumerate() {
        let ((x1, y1), (x2, y2)) = (at(a), at(b));
        let (stroke, width) = match pick(&style.edge_stroke, e) {
            Some(c) => (c, 3.0),
            None => ("#333".to_string(), 1.5),
        };
        let _ = writeln!(
            out,
            r#"  <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{stroke}" stroke-width="{width}"/>"#
        );
    }
    for v in 0..p.vertex_count() {
        let (x, y) = at(v);
        let fill = pick(&style.vertex_fill, v).unwrap_or_else(|| "white".to_string());
        let _ = writeln!(out, r##"  <circle cx="{x:.2}" cy="{y:.2}" r="9" fill="{fill}" stroke="#333"/>"##);
        let _ = writeln!(
            out,
            r#"  <text x="{x:.2}" y="{:.2}" font-size="10" text-anchor="middle" font-family="sans-serif">{v}</text>"#,
            y + 3.5
        );
    }
    out.push_str("</svg>\n");
    out
}
