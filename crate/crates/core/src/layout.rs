//! Tutte's barycentric drawing: the largest face is pinned to a regular
//! polygon and every other vertex sits at the average of its neighbors.
//! For a polyhedron this gives a planar drawing with convex faces.

use crate::polyhedron::Polyhedron;

pub type Point = (f64, f64);

/// The face used as the outer boundary: the longest, lowest id on ties.
pub fn outer_face(p: &Polyhedron) -> usize {
    (0..p.face_count()).max_by_key(|&f| (p.face_len(f), std::cmp::Reverse(f))).unwrap_or(0)
}

/// Positions in the unit disk, y pointing up.
pub fn barycentric_layout(p: &Polyhedron) -> Vec<Point> {
    let n = p.vertex_count();
    let mut pos = vec![(0.0, 0.0); n];
    let mut pinned = vec![false; n];
    let outer = p.face_boundary(outer_face(p));
    let k = outer.len() as f64;
    // faces lie to the right of their walks, so the outer walk runs counterclockwise
    for (i, &v) in outer.iter().enumerate() {
        let angle = std::f64::consts::TAU * i as f64 / k + std::f64::consts::FRAC_PI_2;
        pos[v] = (angle.cos(), angle.sin());
        pinned[v] = true;
    }
    for _ in 0..10_000 {
        let mut delta: f64 = 0.0;
        for v in (0..n).filter(|&v| !pinned[v]) {
            let nb = p.neighbors(v);
            let (sx, sy) = nb.iter().fold((0.0, 0.0), |(x, y), &u| (x + pos[u].0, y + pos[u].1));
            let next = (sx / nb.len() as f64, sy / nb.len() as f64);
            delta = delta.max((next.0 - pos[v].0).abs() + (next.1 - pos[v].1).abs());
            pos[v] = next;
        }
        if delta < 1e-12 {
            break;
        }
    }
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::wheel;

    #[test]
    fn wheel_hub_is_centered() {
        let w = wheel(6).unwrap();
        let pos = barycentric_layout(&w);
        assert!(pos[0].0.abs() < 1e-9 && pos[0].1.abs() < 1e-9);
        for &(x, y) in &pos[1..] {
            assert!(((x * x + y * y).sqrt() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn inner_faces_keep_orientation() {
        // with the outer walk counterclockwise, every inner walk is clockwise
        let w = wheel(5).unwrap();
        let pos = barycentric_layout(&w);
        let outer = outer_face(&w);
        for f in (0..w.face_count()).filter(|&f| f != outer) {
            let b = w.face_boundary(f);
            let area: f64 = (0..b.len())
                .map(|i| {
                    let (p, q) = (pos[b[i]], pos[b[(i + 1) % b.len()]]);
                    p.0 * q.1 - q.0 * p.1
                })
                .sum();
            assert!(area < 0.0, "face {f} has signed area {area}");
        }
    }
}
