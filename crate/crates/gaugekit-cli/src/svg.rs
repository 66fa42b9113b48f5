//! Static SVG figures: planar bodies as outlines with axes, unit marks, and
//! a legend, plus optional curve overlays.

use anyhow::Result;

use gaugekit_core::body::{h_to_v_2d, Body};

const CANVAS: f64 = 640.0;
const MARGIN: f64 = 40.0;

pub struct Layer {
    pub outline: Vec<[f64; 2]>,
    pub label: String,
    pub color: String,
    pub closed: bool,
}

/// Default stroke cycle; the first three match the usual figure convention
/// for a body, its polar, and its dual.
pub const COLORS: [&str; 6] = ["black", "red", "green", "blue", "orange", "purple"];

/// Boundary outline of a planar body: hull order for polytopes, a 256-point
/// boundary sweep for smooth bodies.
pub fn body_outline(body: &Body) -> Result<Vec<[f64; 2]>> {
    if body.dim() != 2 {
        anyhow::bail!("rendering needs 2-D bodies (project or section first)");
    }
    let pts = match body {
        Body::Vertices(p) => gaugekit_core::body::convex_hull_2d(p.vertices()),
        Body::Halfspaces(h) => gaugekit_core::body::convex_hull_2d(h_to_v_2d(h)?.vertices()),
        Body::Smooth(_) => {
            let mut pts = Vec::with_capacity(256);
            for k in 0..256 {
                let theta = std::f64::consts::TAU * k as f64 / 256.0;
                let dir = vec![theta.cos(), theta.sin()];
                pts.push(body.boundary_ray_intersection(&dir)?);
            }
            pts
        }
    };
    Ok(pts.iter().map(|p| [p[0], p[1]]).collect())
}

fn escape_xml(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Render layers to an SVG document. Coordinates are emitted to six decimal
/// places; the y axis points up.
pub fn render_svg(layers: &[Layer]) -> String {
    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for layer in layers {
        for p in &layer.outline {
            min_x = min_x.min(p[0]);
            max_x = max_x.max(p[0]);
            min_y = min_y.min(p[1]);
            max_y = max_y.max(p[1]);
        }
    }
    // Keep the origin and the unit marks in view.
    min_x = min_x.min(-1.2);
    max_x = max_x.max(1.2);
    min_y = min_y.min(-1.2);
    max_y = max_y.max(1.2);
    let span = (max_x - min_x).max(max_y - min_y);
    let scale = (CANVAS - 2.0 * MARGIN) / span;
    let cx = 0.5 * (min_x + max_x);
    let cy = 0.5 * (min_y + max_y);
    let map = |p: [f64; 2]| -> (f64, f64) {
        (CANVAS / 2.0 + (p[0] - cx) * scale, CANVAS / 2.0 - (p[1] - cy) * scale)
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{CANVAS}\" height=\"{CANVAS}\" \
         viewBox=\"0 0 {CANVAS} {CANVAS}\">\n"
    ));
    svg.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // Axes through the origin.
    let (ox, oy) = map([0.0, 0.0]);
    svg.push_str(&format!(
        "  <line x1=\"0\" y1=\"{oy:.6}\" x2=\"{CANVAS}\" y2=\"{oy:.6}\" stroke=\"#cccccc\" \
         stroke-width=\"1\"/>\n"
    ));
    svg.push_str(&format!(
        "  <line x1=\"{ox:.6}\" y1=\"0\" x2=\"{ox:.6}\" y2=\"{CANVAS}\" stroke=\"#cccccc\" \
         stroke-width=\"1\"/>\n"
    ));
    // Unit scale marks.
    for mark in [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]] {
        let (mx, my) = map(mark);
        svg.push_str(&format!(
            "  <line x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\" stroke=\"#888888\" \
             stroke-width=\"1\"/>\n",
            mx - 4.0,
            my,
            mx + 4.0,
            my
        ));
        svg.push_str(&format!(
            "  <line x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\" stroke=\"#888888\" \
             stroke-width=\"1\"/>\n",
            mx,
            my - 4.0,
            mx,
            my + 4.0
        ));
    }
    let (ux, uy) = map([1.0, 0.0]);
    svg.push_str(&format!(
        "  <text x=\"{:.6}\" y=\"{:.6}\" font-size=\"12\" fill=\"#888888\">1</text>\n",
        ux + 5.0,
        uy + 14.0
    ));

    for layer in layers {
        let points: Vec<String> = layer
            .outline
            .iter()
            .map(|p| {
                let (x, y) = map(*p);
                format!("{x:.6},{y:.6}")
            })
            .collect();
        let tag = if layer.closed { "polygon" } else { "polyline" };
        svg.push_str(&format!(
            "  <{tag} points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
            points.join(" "),
            layer.color
        ));
    }

    // Legend.
    for (i, layer) in layers.iter().enumerate() {
        let y = 20.0 + 18.0 * i as f64;
        svg.push_str(&format!(
            "  <rect x=\"12\" y=\"{:.6}\" width=\"12\" height=\"12\" fill=\"{}\"/>\n",
            y - 10.0,
            layer.color
        ));
        svg.push_str(&format!(
            "  <text x=\"30\" y=\"{y:.6}\" font-size=\"13\" fill=\"black\">{}</text>\n",
            escape_xml(&layer.label)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use gaugekit_core::sampling;

    #[test]
    fn triangle_svg_has_expected_vertices() {
        let body = Body::Vertices(sampling::equilateral_triangle());
        let outline = body_outline(&body).unwrap();
        assert_eq!(outline.len(), 3);
        let svg = render_svg(&[Layer {
            outline,
            label: "K".into(),
            color: "black".into(),
            closed: true,
        }]);
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("polygon"));
        assert!(svg.contains("</svg>"));
    }
}
