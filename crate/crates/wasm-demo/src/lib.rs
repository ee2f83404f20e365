//! Browser demo for the `sipoly` crate. Each exported function takes and
//! returns JSON strings; `www/index.html` draws the returned SVG.

use serde::Serialize;
use sipoly::census::si_census_expand;
use sipoly::document::{parse_input, to_json, to_svg, SvgStyle};
use sipoly::duality::{strong_involution, StrongInvolution};
use sipoly::reduction::reduce_to_wheel;
use sipoly::squares::{graph_of_squares, induced_cell_map, is_fixed_point_free};
use sipoly::{validate, Polyhedron};
use wasm_bindgen::prelude::*;

const MAX_GALLERY_VERTICES: usize = 10;

#[derive(Serialize)]
pub struct GalleryItem {
    pub code: String,
    pub v: usize,
    pub e: usize,
    pub chiral: bool,
    pub wheel_rim: Option<usize>,
    pub document: String,
    pub svg: String,
}

#[derive(Serialize)]
pub struct Frame {
    pub caption: String,
    pub svg: String,
}

#[derive(Serialize)]
pub struct InvolutionView {
    pub svg: String,
    pub pairs: Vec<(usize, Vec<usize>)>,
    pub squares: (usize, usize, usize),
    pub automorphism: bool,
    pub involution: bool,
    pub fixed_point_free: bool,
}

fn load(document: &str) -> Result<(Polyhedron, StrongInvolution), String> {
    let map = parse_input(document.as_bytes()).map_err(|e| e.to_string())?;
    let p = validate(map).map_err(|e| format!("not a polyhedron: {e}"))?;
    let tau = strong_involution(&p).ok_or("this polyhedron has no strong involution")?;
    Ok((p, tau))
}

fn hue(i: usize, n: usize) -> f64 {
    360.0 * i as f64 / n.max(1) as f64
}

pub fn gallery(max_v: usize) -> Result<Vec<GalleryItem>, String> {
    if !(4..=MAX_GALLERY_VERTICES).contains(&max_v) {
        return Err(format!("choose a bound between 4 and {MAX_GALLERY_VERTICES}"));
    }
    let census = si_census_expand(max_v);
    census
        .entries()
        .map(|entry| {
            let p = entry.polyhedron().map_err(|e| e.to_string())?;
            Ok(GalleryItem {
                code: entry.code.to_string(),
                v: entry.v,
                e: entry.e,
                chiral: entry.chiral,
                wheel_rim: sipoly::polyhedron::wheel_rim(&p),
                document: to_json(&p),
                svg: to_svg(&p, &SvgStyle { size: 220.0, ..SvgStyle::default() }),
            })
        })
        .collect()
}

/// One frame per remove-contract step: the contracted edge in red, the
/// deleted edge in blue, then the final wheel.
pub fn reduction_frames(document: &str) -> Result<Vec<Frame>, String> {
    let (p, tau) = load(document)?;
    let trace = reduce_to_wheel(&p, &tau).map_err(|e| e.to_string())?;
    let mut frames = Vec::new();
    let mut current = p;
    for (i, step) in trace.steps.iter().enumerate() {
        let mut edge_stroke = vec![None; current.edge_count()];
        let (a, b) = step.contracted;
        let (x, y) = step.deleted;
        if let Some(e) = current.edge_between(a, b) {
            edge_stroke[e] = Some("#d62728".to_string());
        }
        if let Some(e) = current.edge_between(x, y) {
            edge_stroke[e] = Some("#1f77b4".to_string());
        }
        frames.push(Frame {
            caption: format!("step {}: contract {a}-{b}, delete {x}-{y}", i + 1),
            svg: to_svg(&current, &SvgStyle { edge_stroke, ..SvgStyle::default() }),
        });
        current = step.polyhedron.clone();
    }
    frames.push(Frame {
        caption: format!("wheel with rim {}", trace.terminal_rim),
        svg: to_svg(&current, &SvgStyle::default()),
    });
    Ok(frames)
}

/// Each vertex shares a color with its image face.
pub fn involution_view(document: &str) -> Result<InvolutionView, String> {
    let (p, tau) = load(document)?;
    let n = p.vertex_count();
    let mut vertex_fill = vec![None; n];
    let mut face_fill = vec![None; p.face_count()];
    for v in 0..n {
        let h = hue(v, n);
        vertex_fill[v] = Some(format!("hsl({h:.0},70%,55%)"));
        face_fill[tau.face_of(v)] = Some(format!("hsl({h:.0},70%,88%)"));
    }
    let s = graph_of_squares(&p);
    let m = induced_cell_map(&p, &tau);
    let q = &s.polyhedron;
    Ok(InvolutionView {
        svg: to_svg(&p, &SvgStyle { size: 400.0, vertex_fill, face_fill, ..SvgStyle::default() }),
        pairs: (0..n).map(|v| (v, p.face_boundary(tau.face_of(v)).to_vec())).collect(),
        squares: (q.vertex_count(), q.edge_count(), q.face_count()),
        automorphism: m.is_automorphism(&s),
        involution: m.is_involution(),
        fixed_point_free: is_fixed_point_free(&s, &m),
    })
}

fn to_js<T: Serialize>(result: Result<T, String>) -> Result<String, JsError> {
    let value = result.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&value).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = censusGallery)]
pub fn census_gallery(max_v: usize) -> Result<String, JsError> {
    to_js(gallery(max_v))
}

#[wasm_bindgen(js_name = reductionSteps)]
pub fn reduction_steps(document: &str) -> Result<String, JsError> {
    to_js(reduction_frames(document))
}

#[wasm_bindgen(js_name = involutionView)]
pub fn involution_view_json(document: &str) -> Result<String, JsError> {
    to_js(involution_view(document))
}
