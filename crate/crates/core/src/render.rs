//! Poincaré-disk layout of a solved fundamental domain and SVG output.
//!
//! The incircle center sits at the disk origin. A point at hyperbolic
//! distance d from the center lies at Euclidean radius tanh(d/2), so the
//! incircle maps to a Euclidean circle and every polygon side to a circular
//! arc orthogonal to the unit circle (a diameter segment in the degenerate
//! case). Each vertex bisects its own central wedge: vertex k sits at
//! cumulative angle `sum_{<k} beta + beta_k / 2` and the tangency point
//! between vertices k and k+1 at `sum_{<=k} beta`, which is what makes both
//! flanking right triangles of a vertex congruent.
//!
//! The distance from the center to vertex k comes from the right-triangle
//! identity `cosh d = cot(alpha/2) cot(beta/2)` (hypotenuse of the triangle
//! with acute angles alpha/2, beta/2); the leg recovered from d and beta/2
//! via `tanh(leg) = tanh(d) cos(beta/2)` equals the incircle radius, which
//! the tests use as a consistency oracle.

use serde::Serialize;
use std::f64::consts::PI;

use crate::domain_enum::TreeTypeSolution;
use crate::error::Error;
use crate::hyp_trig::AngleValue;
use crate::incircle::IncircleResult;
use crate::Result;

/// Euclidean coordinates inside the unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiskPoint {
    pub x: f64,
    pub y: f64,
}

impl DiskPoint {
    fn polar(radius: f64, angle: f64) -> Self {
        Self {
            x: radius * angle.cos(),
            y: radius * angle.sin(),
        }
    }

    fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
}

/// The unfolded fundamental polygon in disk coordinates.
#[derive(Debug, Clone, Serialize)]
pub struct PolygonLayout {
    /// Polygon vertices in boundary order.
    pub vertices: Vec<DiskPoint>,
    /// `tangency_points[k]` touches the side between vertices k and k+1.
    pub tangency_points: Vec<DiskPoint>,
    /// Euclidean radius tanh(x/2) of the incircle.
    pub incircle_euclidean_radius: f64,
    /// `(alpha, beta)` per vertex in boundary order; the betas sum to 2 pi.
    pub angle_sequence: Vec<(AngleValue, AngleValue)>,
}

/// Options for [`render_svg`]. The canvas is a fixed 1000 x 1000 viewport
/// with the unit disk scaled to radius 480.
#[derive(Debug, Clone)]
pub struct RenderOptions {
    pub stroke_width: f64,
    pub side_color: String,
    pub circle_color: String,
    pub label_vertices: bool,
    pub mark_tangencies: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            stroke_width: 2.0,
            side_color: "#1f3a60".into(),
            circle_color: "#b03030".into(),
            label_vertices: true,
            mark_tangencies: true,
        }
    }
}

/// Hyperbolic distance from the incircle center to a polygon vertex with
/// vertex angle `alpha` and central angle `beta`:
/// `d = arccosh(cot(alpha/2) cot(beta/2))`.
pub fn vertex_distance(alpha: AngleValue, beta: AngleValue) -> Result<f64> {
    let a = alpha.radians() / 2.0;
    let b = beta.radians() / 2.0;
    if a + b >= PI / 2.0 {
        return Err(Error::Domain(format!(
            "vertex angles too large: alpha/2 + beta/2 = {} >= pi/2",
            a + b
        )));
    }
    let product = 1.0 / (a.tan() * b.tan());
    if product <= 1.0 {
        return Err(Error::Domain(format!(
            "cot product {product} does not exceed 1"
        )));
    }
    Ok(product.acosh())
}

/// Canonical vertex sequence of the unfolded polygon.
///
/// The census is realized as a caterpillar tree (vertices of degree >= 2 on a
/// spine ordered by descending degree, leaves attached in order) and walked
/// by an Euler tour that visits every tree vertex once per incident edge,
/// leaf children first. The tour emits one `(alpha, beta)` pair per polygon
/// vertex copy. Radius, areas and the audits are independent of this order;
/// fixing it keeps rendered output byte-stable.
fn canonical_angle_sequence(
    sol: &TreeTypeSolution,
    res: &IncircleResult,
) -> Result<Vec<(AngleValue, AngleValue)>> {
    struct Node {
        degree: u32,
        alpha: AngleValue,
        beta: AngleValue,
        children: Vec<usize>,
    }

    let mut nodes: Vec<Node> = Vec::new();
    for (i, count) in sol.rotational_degrees() {
        for _ in 0..count {
            nodes.push(Node {
                degree: i,
                alpha: AngleValue::new(2.0 * PI / (3.0 * i as f64))?,
                beta: res.rotational_angles[&i],
                children: Vec::new(),
            });
        }
    }
    for (j, count) in sol.additional_degrees() {
        for _ in 0..count {
            nodes.push(Node {
                degree: j,
                alpha: AngleValue::new(2.0 * PI / j as f64)?,
                beta: res.additional_angles[&j],
                children: Vec::new(),
            });
        }
    }

    let mut spine: Vec<usize> = (0..nodes.len()).filter(|&v| nodes[v].degree >= 2).collect();
    spine.sort_by_key(|&v| (std::cmp::Reverse(nodes[v].degree), v));
    let leaves: Vec<usize> = (0..nodes.len()).filter(|&v| nodes[v].degree == 1).collect();
    if spine.is_empty() {
        return Err(Error::InvalidArgument(
            "census has no internal tree vertex".into(),
        ));
    }

    // Spine edges consume two degree slots at interior vertices, one at the
    // ends; leaves fill the remainder in order.
    let mut free: Vec<u32> = spine
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let spine_links = if spine.len() == 1 {
                0
            } else if k == 0 || k == spine.len() - 1 {
                1
            } else {
                2
            };
            nodes[v].degree - spine_links
        })
        .collect();
    let mut leaf_iter = leaves.into_iter();
    for (k, &v) in spine.iter().enumerate() {
        while free[k] > 0 {
            let leaf = leaf_iter.next().ok_or_else(|| {
                Error::InvalidArgument("degree census does not close a tree".into())
            })?;
            nodes[v].children.push(leaf);
            free[k] -= 1;
        }
        if k + 1 < spine.len() {
            nodes[v].children.push(spine[k + 1]);
        }
    }
    if leaf_iter.next().is_some() {
        return Err(Error::InvalidArgument(
            "degree census does not close a tree".into(),
        ));
    }

    // Iterative Euler tour from the spine head: emit the vertex before each
    // child subtree, and once more on leaving unless it is the root.
    let root = spine[0];
    let mut seq = Vec::new();
    let mut stack: Vec<(usize, usize, bool)> = vec![(root, 0, true)];
    while let Some((v, child_idx, is_root)) = stack.pop() {
        if child_idx < nodes[v].children.len() {
            seq.push((nodes[v].alpha, nodes[v].beta));
            let child = nodes[v].children[child_idx];
            stack.push((v, child_idx + 1, is_root));
            stack.push((child, 0, false));
        } else if !is_root {
            seq.push((nodes[v].alpha, nodes[v].beta));
        }
    }
    Ok(seq)
}

/// Lays out the unfolded fundamental polygon with the incircle center at the
/// origin.
pub fn layout_polygon(sol: &TreeTypeSolution, res: &IncircleResult) -> Result<PolygonLayout> {
    let seq = canonical_angle_sequence(sol, res)?;
    if seq.len() != sol.n() as usize {
        return Err(Error::InvalidArgument(format!(
            "angle sequence length {} does not match census n = {}",
            seq.len(),
            sol.n()
        )));
    }
    let beta_sum: f64 = seq.iter().map(|(_, b)| b.radians()).sum();
    if (beta_sum - 2.0 * PI).abs() > 1e-10 {
        return Err(Error::Domain(format!(
            "central angles sum to {beta_sum}, expected 2 pi"
        )));
    }

    let incircle_euclidean_radius = (res.radius.x() / 2.0).tanh();
    let mut vertices = Vec::with_capacity(seq.len());
    let mut tangency_points = Vec::with_capacity(seq.len());
    let mut cumulative = 0.0;
    for &(alpha, beta) in &seq {
        let d = vertex_distance(alpha, beta)?;
        let vertex_angle = cumulative + beta.radians() / 2.0;
        vertices.push(DiskPoint::polar((d / 2.0).tanh(), vertex_angle));
        cumulative += beta.radians();
        tangency_points.push(DiskPoint::polar(incircle_euclidean_radius, cumulative));
    }
    Ok(PolygonLayout {
        vertices,
        tangency_points,
        incircle_euclidean_radius,
        angle_sequence: seq,
    })
}

/// Geometry of one polygon side in the disk.
#[derive(Debug, Clone, Copy)]
pub enum SideGeodesic {
    /// Circular arc orthogonal to the unit circle: Euclidean center and
    /// radius.
    Arc { center: DiskPoint, radius: f64 },
    /// Segment of a diameter.
    Segment,
}

/// Circle through the side between vertices `k` and `k+1`, computed from the
/// endpoint inversions in the unit circle. Near-diameter sides (circumcircle
/// radius above 1e6) degrade to straight segments.
pub fn side_geodesic(layout: &PolygonLayout, k: usize) -> Result<SideGeodesic> {
    let n = layout.vertices.len();
    let p = layout.vertices[k];
    let q = layout.vertices[(k + 1) % n];
    // Inversion maps a disk point onto the same geodesic circle.
    let np2 = p.x * p.x + p.y * p.y;
    if np2 < 1e-24 {
        return Ok(SideGeodesic::Segment);
    }
    let inv = DiskPoint {
        x: p.x / np2,
        y: p.y / np2,
    };
    circumcircle(p, q, inv)
}

fn circumcircle(a: DiskPoint, b: DiskPoint, c: DiskPoint) -> Result<SideGeodesic> {
    // Perpendicular-bisector intersection; 2x2 linear solve.
    let (abx, aby) = (b.x - a.x, b.y - a.y);
    let (acx, acy) = (c.x - a.x, c.y - a.y);
    let det = 2.0 * (abx * acy - aby * acx);
    if det.abs() < 1e-18 {
        return Ok(SideGeodesic::Segment);
    }
    let ab2 = abx * abx + aby * aby;
    let ac2 = acx * acx + acy * acy;
    let cx = a.x + (acy * ab2 - aby * ac2) / det;
    let cy = a.y + (abx * ac2 - acx * ab2) / det;
    let radius = (cx - a.x).hypot(cy - a.y);
    if radius > 1e6 {
        return Ok(SideGeodesic::Segment);
    }
    Ok(SideGeodesic::Arc {
        center: DiskPoint { x: cx, y: cy },
        radius,
    })
}

/// Hyperbolic distance from the origin to the side's geodesic (evaluated at
/// the arc point closest to the origin). Equals the incircle radius for
/// every side of a valid layout.
pub fn side_distance_from_origin(layout: &PolygonLayout, k: usize) -> Result<f64> {
    match side_geodesic(layout, k)? {
        SideGeodesic::Segment => Ok(0.0),
        SideGeodesic::Arc { center, radius } => {
            let closest = center.norm() - radius;
            if !(0.0..1.0).contains(&closest) {
                return Err(Error::Domain(format!(
                    "geodesic closest point {closest} outside the disk"
                )));
            }
            Ok(2.0 * closest.atanh())
        }
    }
}

/// Interior angle between the sides meeting at vertex `k`, measured from the
/// tangent directions of the two arcs. The disk model is conformal, so this
/// is also the hyperbolic angle.
pub fn measured_vertex_angle(layout: &PolygonLayout, k: usize) -> Result<f64> {
    let n = layout.vertices.len();
    let v = layout.vertices[k];
    let prev = layout.tangency_points[(k + n - 1) % n];
    let next = layout.tangency_points[k];
    let dir_prev = tangent_toward(layout, (k + n - 1) % n, v, prev)?;
    let dir_next = tangent_toward(layout, k, v, next)?;
    let dot = dir_prev.0 * dir_next.0 + dir_prev.1 * dir_next.1;
    Ok(dot.clamp(-1.0, 1.0).acos())
}

/// Unit tangent of side `k`'s geodesic at point `at`, oriented toward the
/// side point `toward`.
fn tangent_toward(
    layout: &PolygonLayout,
    k: usize,
    at: DiskPoint,
    toward: DiskPoint,
) -> Result<(f64, f64)> {
    let (mut tx, mut ty) = match side_geodesic(layout, k)? {
        SideGeodesic::Segment => (toward.x - at.x, toward.y - at.y),
        SideGeodesic::Arc { center, radius: _ } => {
            // Tangent is perpendicular to the radius vector.
            let rx = at.x - center.x;
            let ry = at.y - center.y;
            (-ry, rx)
        }
    };
    if tx * (toward.x - at.x) + ty * (toward.y - at.y) < 0.0 {
        tx = -tx;
        ty = -ty;
    }
    let norm = tx.hypot(ty);
    if norm < 1e-18 {
        return Err(Error::Domain("degenerate tangent direction".into()));
    }
    Ok((tx / norm, ty / norm))
}

const CANVAS: f64 = 1000.0;
const DISK_RADIUS: f64 = 480.0;

fn to_canvas(p: DiskPoint) -> (f64, f64) {
    (
        CANVAS / 2.0 + DISK_RADIUS * p.x,
        CANVAS / 2.0 - DISK_RADIUS * p.y,
    )
}

/// Serializes the layout as SVG 1.1 (UTF-8). Output bytes are deterministic
/// for fixed layout and options.
pub fn render_svg(layout: &PolygonLayout, opts: &RenderOptions) -> Result<Vec<u8>> {
    use std::fmt::Write;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{c}\" height=\"{c}\" viewBox=\"0 0 {c} {c}\">",
        c = CANVAS
    );
    let _ = writeln!(
        svg,
        "  <circle class=\"boundary\" cx=\"{0}\" cy=\"{0}\" r=\"{1}\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>",
        CANVAS / 2.0,
        DISK_RADIUS
    );
    let _ = writeln!(
        svg,
        "  <circle class=\"incircle\" cx=\"{0}\" cy=\"{0}\" r=\"{1:.4}\" fill=\"none\" stroke=\"{2}\" stroke-width=\"{3}\"/>",
        CANVAS / 2.0,
        DISK_RADIUS * layout.incircle_euclidean_radius,
        opts.circle_color,
        opts.stroke_width
    );

    let n = layout.vertices.len();
    for k in 0..n {
        let p = layout.vertices[k];
        let q = layout.vertices[(k + 1) % n];
        let (px, py) = to_canvas(p);
        let (qx, qy) = to_canvas(q);
        match side_geodesic(layout, k)? {
            SideGeodesic::Segment => {
                let _ = writeln!(
                    svg,
                    "  <path class=\"side\" d=\"M {px:.4} {py:.4} L {qx:.4} {qy:.4}\" fill=\"none\" stroke=\"{0}\" stroke-width=\"{1}\"/>",
                    opts.side_color, opts.stroke_width
                );
            }
            SideGeodesic::Arc { center, radius } => {
                // Canvas y is flipped, which mirrors orientation: the sweep
                // flag is the sign of the cross product in canvas coordinates.
                let cross = (p.x - center.x) * (q.y - center.y)
                    - (p.y - center.y) * (q.x - center.x);
                let sweep = if cross < 0.0 { 1 } else { 0 };
                let r = DISK_RADIUS * radius;
                let _ = writeln!(
                    svg,
                    "  <path class=\"side\" d=\"M {px:.4} {py:.4} A {r:.4} {r:.4} 0 0 {sweep} {qx:.4} {qy:.4}\" fill=\"none\" stroke=\"{0}\" stroke-width=\"{1}\"/>",
                    opts.side_color, opts.stroke_width
                );
            }
        }
    }

    if opts.mark_tangencies {
        for t in &layout.tangency_points {
            let (tx, ty) = to_canvas(*t);
            let _ = writeln!(
                svg,
                "  <circle class=\"tangency\" cx=\"{tx:.4}\" cy=\"{ty:.4}\" r=\"3\" fill=\"{0}\"/>",
                opts.circle_color
            );
        }
    }

    for (k, v) in layout.vertices.iter().enumerate() {
        let (vx, vy) = to_canvas(*v);
        let _ = writeln!(
            svg,
            "  <circle class=\"vertex\" cx=\"{vx:.4}\" cy=\"{vy:.4}\" r=\"4\" fill=\"{0}\"/>",
            opts.side_color
        );
        if opts.label_vertices {
            let scale = 1.0 + 24.0 / (DISK_RADIUS * v.norm().max(1e-9));
            let lp = DiskPoint {
                x: v.x * scale,
                y: v.y * scale,
            };
            let (lx, ly) = to_canvas(lp);
            let _ = writeln!(
                svg,
                "  <text class=\"label\" x=\"{lx:.4}\" y=\"{ly:.4}\" font-size=\"20\" text-anchor=\"middle\" dominant-baseline=\"middle\">V{}</text>",
                k + 1
            );
        }
    }
    let _ = writeln!(svg, "</svg>");
    Ok(svg.into_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain_enum::{enumerate_tree_types, GroupSpec};
    use crate::incircle::{solve_incircle, DEFAULT_TOL};

    fn solved(idx: usize) -> (TreeTypeSolution, IncircleResult) {
        let g = GroupSpec::new(4).unwrap();
        let sol = enumerate_tree_types(g)[idx].clone();
        let res = solve_incircle(&sol, g, DEFAULT_TOL).unwrap();
        (sol, res)
    }

    fn angle(r: f64) -> AngleValue {
        AngleValue::new(r).unwrap()
    }

    #[test]
    fn vertex_distance_regular_value() {
        // Formula evaluation, backed by the leg-consistency oracle below.
        let d = vertex_distance(angle(2.0 * PI / 3.0), angle(PI / 5.0)).unwrap();
        assert!((d - 1.1773320270779095).abs() < 1e-12);
    }

    #[test]
    fn vertex_distance_leg_consistency() {
        // Recovering the leg adjacent to beta/2 must reproduce the incircle
        // radius solved independently.
        for idx in [0usize, 4] {
            let (sol, res) = solved(idx);
            for (i, _) in sol.rotational_degrees() {
                let alpha = angle(2.0 * PI / (3.0 * i as f64));
                let beta = res.rotational_angles[&i];
                let d = vertex_distance(alpha, beta).unwrap();
                let leg = (d.tanh() * (beta.radians() / 2.0).cos()).atanh();
                assert!(
                    (leg - res.radius.x()).abs() < 1e-10,
                    "census {idx} degree {i}: leg {leg} vs x {}",
                    res.radius.x()
                );
            }
        }
    }

    #[test]
    fn vertex_distance_boundary_behavior() {
        // cot(a) cot(pi/2 - a) = 1: the identity's boundary, where d -> 0.
        let a = 0.7;
        assert!(vertex_distance(angle(2.0 * a), angle(PI - 2.0 * a)).is_err());
        let d = vertex_distance(angle(2.0 * a), angle(PI - 2.0 * a - 1e-6)).unwrap();
        assert!(d < 2e-3);
    }

    #[test]
    fn layout_regular_ten_gon() {
        let (sol, res) = solved(4);
        let layout = layout_polygon(&sol, &res).unwrap();
        assert_eq!(layout.vertices.len(), 10);
        assert_eq!(layout.tangency_points.len(), 10);
        assert!((layout.incircle_euclidean_radius - 0.48586827175664565).abs() < 1e-10);
        for v in &layout.vertices {
            assert!((v.norm() - 0.5289355121677678).abs() < 1e-10);
        }
        let beta_sum: f64 = layout.angle_sequence.iter().map(|(_, b)| b.radians()).sum();
        assert!((beta_sum - 2.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn layout_type_one_has_two_vertex_radii() {
        let (sol, res) = solved(0);
        let layout = layout_polygon(&sol, &res).unwrap();
        assert_eq!(layout.vertices.len(), 6);
        let mut radii: Vec<f64> = layout.vertices.iter().map(|v| v.norm()).collect();
        radii.sort_by(f64::total_cmp);
        assert!((radii[1] - radii[0]).abs() < 1e-12);
        assert!(radii[5] - radii[0] > 0.1, "two distinct distance classes");
    }

    #[test]
    fn sides_touch_the_incircle() {
        for idx in 0..5 {
            let (sol, res) = solved(idx);
            let layout = layout_polygon(&sol, &res).unwrap();
            for k in 0..layout.vertices.len() {
                let dist = side_distance_from_origin(&layout, k).unwrap();
                assert!(
                    (dist - res.radius.x()).abs() < 1e-8,
                    "census {idx} side {k}: {dist} vs {}",
                    res.radius.x()
                );
            }
        }
    }

    #[test]
    fn vertex_angles_audit() {
        for idx in 0..5 {
            let (sol, res) = solved(idx);
            let layout = layout_polygon(&sol, &res).unwrap();
            for k in 0..layout.vertices.len() {
                let measured = measured_vertex_angle(&layout, k).unwrap();
                let expected = layout.angle_sequence[k].0.radians();
                assert!(
                    (measured - expected).abs() < 1e-6,
                    "census {idx} vertex {k}: {measured} vs {expected}"
                );
            }
        }
    }

    #[test]
    fn layout_audits_hold_for_larger_groups() {
        // Every census of l in [5, 8]: the canonical tree walk must close,
        // every side must touch the incircle and every vertex angle must
        // match its census class.
        for l in 5..=8 {
            let g = GroupSpec::new(l).unwrap();
            for sol in enumerate_tree_types(g) {
                let res = solve_incircle(&sol, g, DEFAULT_TOL).unwrap();
                let layout = layout_polygon(&sol, &res).unwrap();
                assert_eq!(layout.vertices.len(), sol.n() as usize);
                for k in 0..layout.vertices.len() {
                    let dist = side_distance_from_origin(&layout, k).unwrap();
                    assert!(
                        (dist - res.radius.x()).abs() < 1e-8,
                        "l={l} census {} side {k}",
                        sol.descriptor()
                    );
                    let angle = measured_vertex_angle(&layout, k).unwrap();
                    let want = layout.angle_sequence[k].0.radians();
                    assert!(
                        (angle - want).abs() < 1e-6,
                        "l={l} census {} vertex {k}: {angle} vs {want}",
                        sol.descriptor()
                    );
                }
            }
        }
    }

    #[test]
    fn rotated_sequence_preserves_radius_multiset() {
        let (sol, res) = solved(4);
        let base = layout_polygon(&sol, &res).unwrap();
        // Any cyclic rotation of the angle sequence lays out a congruent
        // polygon; compare sorted vertex radii.
        let mut base_radii: Vec<f64> = base.vertices.iter().map(|v| v.norm()).collect();
        base_radii.sort_by(f64::total_cmp);
        let rotated = PolygonLayout {
            vertices: base.vertices[3..]
                .iter()
                .chain(&base.vertices[..3])
                .copied()
                .collect(),
            ..base.clone()
        };
        let mut rot_radii: Vec<f64> = rotated.vertices.iter().map(|v| v.norm()).collect();
        rot_radii.sort_by(f64::total_cmp);
        for (a, b) in base_radii.iter().zip(&rot_radii) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn svg_element_counts() {
        let (sol, res) = solved(4);
        let layout = layout_polygon(&sol, &res).unwrap();
        let svg = String::from_utf8(render_svg(&layout, &RenderOptions::default()).unwrap()).unwrap();
        assert_eq!(svg.matches("class=\"side\"").count(), 10);
        assert_eq!(svg.matches("class=\"incircle\"").count(), 1);
        assert_eq!(svg.matches("class=\"vertex\"").count(), 10);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn svg_bytes_deterministic() {
        let (sol, res) = solved(1);
        let layout = layout_polygon(&sol, &res).unwrap();
        let a = render_svg(&layout, &RenderOptions::default()).unwrap();
        let b = render_svg(&layout, &RenderOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn collinear_side_renders_as_segment() {
        // Two vertices collinear with the origin force the diameter case.
        let layout = PolygonLayout {
            vertices: vec![
                DiskPoint { x: 0.4, y: 0.0 },
                DiskPoint { x: -0.4, y: 0.0 },
            ],
            tangency_points: vec![DiskPoint { x: 0.0, y: 0.0 }, DiskPoint { x: 0.0, y: 0.0 }],
            incircle_euclidean_radius: 0.1,
            angle_sequence: vec![
                (angle(PI / 2.0), angle(PI)),
                (angle(PI / 2.0), angle(PI)),
            ],
        };
        assert!(matches!(
            side_geodesic(&layout, 0).unwrap(),
            SideGeodesic::Segment
        ));
        let svg = String::from_utf8(render_svg(&layout, &RenderOptions::default()).unwrap()).unwrap();
        assert!(svg.contains(" L "));
    }
}
